//! Dense complex matrices, row-major over `Complex64`.
//!
//! This is the universal numeric carrier of the crate. Everything lives at
//! desk scale (dimensions up to a few hundred, 4096 for vectors), so the
//! arithmetic is written directly: skip-zero ikj matrix product,
//! Gauss-Jordan inverse with partial pivoting, and a one-sided Jacobi
//! routine for singular values.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// Dense complex matrix; `data[r * cols + c]` is the entry at row `r`, column `c`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexDense {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexDense {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexDense { rows, cols, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        ComplexDense { rows, cols, data }
    }

    /// Build from rows of real entries; handy for fixed small matrices in tests.
    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data =
            rows.iter().flat_map(|row| row.iter().map(|&x| Complex64::new(x, 0.0))).collect();
        ComplexDense { rows: r, cols: c, data }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(ComplexDense { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn add_at(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.cols + c] += v;
    }

    pub fn mul(&self, other: &ComplexDense) -> ComplexDense {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = vec![ZERO; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == ZERO {
                    continue;
                }
                let src = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out[i * other.cols..(i + 1) * other.cols];
                for (d, s) in dst.iter_mut().zip(src) {
                    *d += a * s;
                }
            }
        }
        ComplexDense { rows: self.rows, cols: other.cols, data: out }
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![ZERO; self.rows];
        for (r, o) in out.iter_mut().enumerate() {
            let row = &self.data[r * self.cols..(r + 1) * self.cols];
            *o = row.iter().zip(v).map(|(a, b)| a * b).sum();
        }
        out
    }

    pub fn add(&self, other: &ComplexDense) -> ComplexDense {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        ComplexDense { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &ComplexDense) -> ComplexDense {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        ComplexDense { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: Complex64) -> ComplexDense {
        let data = self.data.iter().map(|a| a * s).collect();
        ComplexDense { rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> ComplexDense {
        ComplexDense::from_fn(self.cols, self.rows, |r, c| self.at(c, r))
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> ComplexDense {
        ComplexDense::from_fn(self.cols, self.rows, |r, c| self.at(c, r).conj())
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square());
        (0..self.rows).map(|i| self.at(i, i)).sum()
    }

    pub fn pow(&self, k: u32) -> ComplexDense {
        assert!(self.is_square());
        let mut out = ComplexDense::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Kronecker product; `(A ⊗ B)(C ⊗ D) = AC ⊗ BD`.
    pub fn kron(&self, other: &ComplexDense) -> ComplexDense {
        let (ra, ca) = (self.rows, self.cols);
        let (rb, cb) = (other.rows, other.cols);
        let mut out = ComplexDense::zeros(ra * rb, ca * cb);
        for ia in 0..ra {
            for ja in 0..ca {
                let a = self.at(ia, ja);
                if a == ZERO {
                    continue;
                }
                for ib in 0..rb {
                    for jb in 0..cb {
                        let b = other.at(ib, jb);
                        if b != ZERO {
                            out.set(ia * rb + ib, ja * cb + jb, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Trace out the second tensor factor: for `c` on a `dim1·dim2` space,
    /// returns the `dim1`-square matrix with entries `Σ_k c[(i,k),(j,k)]`.
    pub fn partial_trace_2(&self, dim1: usize, dim2: usize) -> Result<ComplexDense> {
        if self.rows != dim1 * dim2 || !self.is_square() {
            return Err(Error::Shape(format!(
                "expected {0}x{0} with {0} = {dim1}*{dim2}, got {1}x{2}",
                dim1 * dim2,
                self.rows,
                self.cols
            )));
        }
        Ok(ComplexDense::from_fn(dim1, dim1, |i, j| {
            (0..dim2).map(|k| self.at(i * dim2 + k, j * dim2 + k)).sum()
        }))
    }

    /// Gauss-Jordan inverse with partial pivoting.
    pub fn inverse(&self) -> Result<ComplexDense> {
        if !self.is_square() {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut inv = ComplexDense::identity(n).data;
        for col in 0..n {
            let mut piv = col;
            let mut best = a[col * n + col].norm();
            for r in col + 1..n {
                let v = a[r * n + col].norm();
                if v > best {
                    best = v;
                    piv = r;
                }
            }
            if best < 1e-300 {
                return Err(Error::Singular(format!("zero pivot at column {col}")));
            }
            if piv != col {
                for j in 0..n {
                    a.swap(col * n + j, piv * n + j);
                    inv.swap(col * n + j, piv * n + j);
                }
            }
            let d = a[col * n + col];
            for j in 0..n {
                a[col * n + j] /= d;
                inv[col * n + j] /= d;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r * n + col];
                if f == ZERO {
                    continue;
                }
                for j in 0..n {
                    let x = a[col * n + j];
                    let y = inv[col * n + j];
                    a[r * n + j] -= f * x;
                    inv[r * n + j] -= f * y;
                }
            }
        }
        Ok(ComplexDense { rows: n, cols: n, data: inv })
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &ComplexDense) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &ComplexDense, tol: f64) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.max_abs_diff(other) <= tol
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Realignment of an operator on `C^d ⊗ C^d`:
    /// `R[(i,j),(k,l)] = M[(i,k),(j,l)]`. The operator factorizes as a single
    /// tensor product exactly when the realigned matrix has rank one, so the
    /// number of nonzero singular values of `R` is the operator Schmidt rank.
    pub fn realign(&self, d: usize) -> Result<ComplexDense> {
        if self.rows != d * d || !self.is_square() {
            return Err(Error::Shape(format!(
                "realign expects a {0}x{0} matrix with {0} = {d}^2",
                d * d
            )));
        }
        Ok(ComplexDense::from_fn(d * d, d * d, |rc, cc| {
            let (i, j) = (rc / d, rc % d);
            let (k, l) = (cc / d, cc % d);
            self.at(i * d + k, j * d + l)
        }))
    }

    /// Singular values in non-increasing order, via one-sided Jacobi.
    pub fn singular_values(&self) -> Vec<f64> {
        let work = if self.rows >= self.cols { self.clone() } else { self.dagger() };
        let (m, n) = (work.rows, work.cols);
        let mut cols: Vec<Vec<Complex64>> =
            (0..n).map(|j| (0..m).map(|i| work.at(i, j)).collect()).collect();
        for _ in 0..60 {
            let mut off = 0.0_f64;
            for p in 0..n {
                for q in p + 1..n {
                    let mut app = 0.0;
                    let mut aqq = 0.0;
                    let mut apq = ZERO;
                    for (u, v) in cols[p].iter().zip(&cols[q]) {
                        app += u.norm_sqr();
                        aqq += v.norm_sqr();
                        apq += u.conj() * v;
                    }
                    let g = apq.norm();
                    let scale = (app * aqq).sqrt();
                    if scale <= 0.0 || g <= 1e-16 * scale {
                        continue;
                    }
                    off = off.max(g / scale);
                    let phi = apq.arg();
                    let theta = 0.5 * (2.0 * g).atan2(app - aqq);
                    let c = theta.cos();
                    let s = Complex64::from_polar(theta.sin(), -phi);
                    let (head, tail) = cols.split_at_mut(q);
                    for (u, v) in head[p].iter_mut().zip(tail[0].iter_mut()) {
                        let (a, b) = (*u, *v);
                        *u = c * a + s * b;
                        *v = -s.conj() * a + c * b;
                    }
                }
            }
            if off < 1e-15 {
                break;
            }
        }
        let mut sv: Vec<f64> =
            cols.iter().map(|c| c.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()).collect();
        sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
        sv
    }
}

impl std::ops::Mul for &ComplexDense {
    type Output = ComplexDense;
    fn mul(self, rhs: &ComplexDense) -> ComplexDense {
        ComplexDense::mul(self, rhs)
    }
}

impl std::ops::Add for &ComplexDense {
    type Output = ComplexDense;
    fn add(self, rhs: &ComplexDense) -> ComplexDense {
        ComplexDense::add(self, rhs)
    }
}

impl std::ops::Sub for &ComplexDense {
    type Output = ComplexDense;
    fn sub(self, rhs: &ComplexDense) -> ComplexDense {
        ComplexDense::sub(self, rhs)
    }
}

/// Matrix unit `(ij)`: 1 at row `i`, column `j` (1-indexed), zero elsewhere.
pub fn matrix_unit(d: usize, i: usize, j: usize) -> ComplexDense {
    assert!((1..=d).contains(&i) && (1..=d).contains(&j));
    let mut m = ComplexDense::zeros(d, d);
    m.set(i - 1, j - 1, ONE);
    m
}

/// The flip `P = Σ_{a,b} (ab) ⊗ (ba)` on `C^d ⊗ C^d`; `P(x ⊗ y) = y ⊗ x`, `P² = I`.
pub fn swap_matrix(d: usize) -> ComplexDense {
    let mut p = ComplexDense::zeros(d * d, d * d);
    for a in 0..d {
        for b in 0..d {
            p.set(a * d + b, b * d + a, ONE);
        }
    }
    p
}

/// Column-sparse view of a two-site operator, reusable across many
/// state-vector applications.
pub struct TwoSiteOp {
    d: usize,
    by_col: Vec<Vec<(usize, usize, Complex64)>>,
}

impl TwoSiteOp {
    pub fn new(op: &ComplexDense, d: usize) -> Self {
        assert_eq!(op.rows(), d * d);
        assert!(op.is_square());
        let mut by_col: Vec<Vec<(usize, usize, Complex64)>> = vec![Vec::new(); d * d];
        for (ct, col) in by_col.iter_mut().enumerate() {
            for rt in 0..d * d {
                let val = op.at(rt, ct);
                if val != ZERO {
                    col.push((rt / d, rt % d, val));
                }
            }
        }
        TwoSiteOp { d, by_col }
    }

    /// Apply on the ordered slot pair `(p, q)` of `m` slots (1-indexed, slot
    /// 1 most significant) to a vector of length `d^m`.
    pub fn apply(&self, m: usize, p: usize, q: usize, v: &[Complex64]) -> Vec<Complex64> {
        let d = self.d;
        assert!(p != q && (1..=m).contains(&p) && (1..=m).contains(&q));
        assert_eq!(v.len(), d.pow(m as u32));
        let pp = d.pow((m - p) as u32);
        let pq = d.pow((m - q) as u32);
        let mut out = vec![ZERO; v.len()];
        for (i, &x) in v.iter().enumerate() {
            if x == ZERO {
                continue;
            }
            let a = (i / pp) % d;
            let b = (i / pq) % d;
            let base = i - a * pp - b * pq;
            for &(a2, b2, val) in &self.by_col[a * d + b] {
                out[base + a2 * pp + b2 * pq] += val * x;
            }
        }
        out
    }
}

/// Embed a two-site operator `op` (on `C^d ⊗ C^d`) into `m` slots of local
/// dimension `d`, acting on the ordered slot pair `(p, q)`, 1-indexed with
/// slot 1 the most significant digit. Applies to a state vector of length
/// `d^m` without materializing the lifted matrix.
pub fn apply_two_site(
    op: &ComplexDense,
    d: usize,
    m: usize,
    p: usize,
    q: usize,
    v: &[Complex64],
) -> Vec<Complex64> {
    TwoSiteOp::new(op, d).apply(m, p, q, v)
}

/// Dense embedding of a two-site operator on the ordered slot pair `(p, q)`
/// of `m` slots; convenience for small spaces.
pub fn lift_two_site(op: &ComplexDense, d: usize, m: usize, p: usize, q: usize) -> ComplexDense {
    let dim = d.pow(m as u32);
    let mut out = ComplexDense::zeros(dim, dim);
    let mut e = vec![ZERO; dim];
    for col in 0..dim {
        e[col] = ONE;
        let w = apply_two_site(op, d, m, p, q, &e);
        for (r, val) in w.into_iter().enumerate() {
            if val != ZERO {
                out.set(r, col, val);
            }
        }
        e[col] = ZERO;
    }
    out
}

/// Integer square root with exactness check.
pub fn exact_isqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r.saturating_sub(1)..=r + 1).find(|cand| cand * cand == n)
}
