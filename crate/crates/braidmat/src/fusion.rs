//! L- and T-operator towers and their exchange algebra.
//!
//! The fundamental operators are L(z) = R̂(z)P and T(z) = PR̂(z) (class KJ
//! unless stated otherwise; the flip conjugation swaps the two families:
//! L of class JK equals T of class KJ and vice versa). Their (2n)-square
//! blocks build order-r towers by the coproduct
//!
//!   L^{(r+1)}_{ij}(z) = Σ_k L^{(1)}_{ik}(z) ⊗ L^{(r)}_{kj}(z),
//!
//! seeded by L^{(0)}_{ij} = δ_{ij}. Towers hold the unnormalized blocks
//! (each coproduct step would carry a 1/√(1+z²) factor; `normalized` applies
//! (1+z²)^{−r/2}). Blocks are kron products of 2-nonzero matrices, so they
//! are stored sparse; a dense accessor exists for small orders.
//!
//! The exchange relation is realized on V⊗V⊗V with R̂(θ−θ′) on slots (1,2),
//! the second operator copy on slots (2,3) and the first on slots (1,3):
//!
//!   R̂₁₂(θ−θ′) L₂(θ) L₁(θ′) = L₂(θ′) L₁(θ) R̂₁₂(θ−θ′)
//!   R̂₁₂(θ−θ′) T₁(θ) T₂(θ′) = T₁(θ′) T₂(θ) R̂₁₂(θ−θ′)
//!
//! which at the fundamental level reduce to the spectral-parameter braid
//! equation (so the residual vanishes identically; this fixes the slot
//! embedding). In z, the difference parameter is (z−z′)/(1−zz′). Scalar
//! normalization drops out: both sides carry the same three factors.

use num_complex::Complex64;

use crate::braid::{
    braid_hat, build_braid, build_m, build_m_inverse, permutation_p, BraidClass, BraidSpec,
};
use crate::dense::{lift_two_site, ComplexDense, ZERO};
use crate::error::{Error, Result};
use crate::verify::ResidualReport;

/// Dimension guard for tower blocks.
pub const TOWER_DIM_GUARD: usize = 4096;

/// Which operator family a tower belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TowerKind {
    L,
    T,
}

impl TowerKind {
    pub fn label(&self) -> &'static str {
        match self {
            TowerKind::L => "L",
            TowerKind::T => "T",
        }
    }
}

/// Sparse square matrix in sorted coordinate form; all tower blocks are
/// kron products of 2-nonzero matrices, so nnz ≤ 2^r.
#[derive(Debug, Clone)]
pub struct SparseBlock {
    dim: usize,
    entries: Vec<(u32, u32, Complex64)>,
}

impl SparseBlock {
    fn zero(dim: usize) -> Self {
        SparseBlock { dim, entries: Vec::new() }
    }

    fn scalar_one() -> Self {
        SparseBlock { dim: 1, entries: vec![(0, 0, Complex64::new(1.0, 0.0))] }
    }

    fn from_dense(m: &ComplexDense) -> Self {
        let mut entries = Vec::new();
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                let v = m.at(r, c);
                if v != ZERO {
                    entries.push((r as u32, c as u32, v));
                }
            }
        }
        SparseBlock { dim: m.rows(), entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn trace(&self) -> Complex64 {
        self.entries.iter().filter(|(r, c, _)| r == c).map(|(_, _, v)| v).sum()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        SparseBlock {
            dim: self.dim,
            entries: self.entries.iter().map(|&(r, c, v)| (r, c, v * s)).collect(),
        }
    }

    pub fn to_dense(&self) -> ComplexDense {
        let mut m = ComplexDense::zeros(self.dim, self.dim);
        for &(r, c, v) in &self.entries {
            m.add_at(r as usize, c as usize, v);
        }
        m
    }

    fn kron(&self, other: &SparseBlock) -> Self {
        let d = other.dim as u32;
        let mut entries = Vec::with_capacity(self.nnz() * other.nnz());
        for &(r1, c1, v1) in &self.entries {
            for &(r2, c2, v2) in &other.entries {
                entries.push((r1 * d + r2, c1 * d + c2, v1 * v2));
            }
        }
        SparseBlock { dim: self.dim * other.dim, entries }
    }

    fn accumulate(dim: usize, terms: Vec<SparseBlock>) -> Self {
        let mut entries: Vec<(u32, u32, Complex64)> =
            terms.into_iter().flat_map(|t| t.entries).collect();
        entries.sort_by_key(|&(r, c, _)| (r, c));
        let mut out: Vec<(u32, u32, Complex64)> = Vec::with_capacity(entries.len());
        for (r, c, v) in entries {
            match out.last_mut() {
                Some(last) if last.0 == r && last.1 == c => last.2 += v,
                _ => out.push((r, c, v)),
            }
        }
        out.retain(|&(_, _, v)| v != ZERO);
        SparseBlock { dim, entries: out }
    }
}

/// Order-r family of (2n)² operator blocks built by coproduct iteration.
#[derive(Debug, Clone)]
pub struct Tower {
    kind: TowerKind,
    class: BraidClass,
    n: usize,
    z: f64,
    order: usize,
    normalized: bool,
    blocks: Vec<SparseBlock>, // index (i-1)*2n + (j-1), 1-indexed block labels
}

impl Tower {
    pub fn kind(&self) -> TowerKind {
        self.kind
    }

    pub fn class(&self) -> BraidClass {
        self.class
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn block_dim(&self) -> usize {
        (2 * self.n).pow(self.order as u32)
    }

    /// Sparse block (i, j), 1-indexed.
    pub fn block(&self, i: usize, j: usize) -> &SparseBlock {
        &self.blocks[(i - 1) * 2 * self.n + (j - 1)]
    }

    /// Dense copy of block (i, j); meant for small orders.
    pub fn block_dense(&self, i: usize, j: usize) -> ComplexDense {
        self.block(i, j).to_dense()
    }

    pub fn block_trace(&self, i: usize) -> Complex64 {
        self.block(i, i).trace()
    }

    /// Apply the (1+z²)^{−r/2} factor the unnormalized blocks drop.
    pub fn normalized(&self) -> Tower {
        let s = Complex64::new((1.0 + self.z * self.z).powf(-(self.order as f64) / 2.0), 0.0);
        Tower {
            blocks: self.blocks.iter().map(|b| b.scale(s)).collect(),
            normalized: true,
            ..self.clone()
        }
    }
}

/// Fundamental blocks of L(z) = R̂(z)P or T(z) = PR̂(z) for a given class,
/// read off the unnormalized √(1+z²)·(operator) in the (2n)-block layout.
pub fn fundamental(kind: TowerKind, class: BraidClass, n: usize, z: f64) -> Tower {
    let d = 2 * n;
    let r = build_braid(&BraidSpec::new(n, class, z).unnormalized());
    let p = permutation_p(n);
    let full = match kind {
        TowerKind::L => r.mul(&p),
        TowerKind::T => p.mul(&r),
    };
    let mut blocks = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let sub = ComplexDense::from_fn(d, d, |r_, c_| full.at(i * d + r_, j * d + c_));
            blocks.push(SparseBlock::from_dense(&sub));
        }
    }
    Tower { kind, class, n, z, order: 1, normalized: false, blocks }
}

/// Fundamental L-tower, class KJ.
pub fn fundamental_l(n: usize, z: f64) -> Tower {
    fundamental(TowerKind::L, BraidClass::KJ, n, z)
}

/// Fundamental T-tower, class KJ.
pub fn fundamental_t(n: usize, z: f64) -> Tower {
    fundamental(TowerKind::T, BraidClass::KJ, n, z)
}

/// Order-zero tower: blocks are the 1×1 scalars δ_{ij}.
pub fn order_zero(kind: TowerKind, class: BraidClass, n: usize, z: f64) -> Tower {
    let d = 2 * n;
    let mut blocks = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            blocks.push(if i == j { SparseBlock::scalar_one() } else { SparseBlock::zero(1) });
        }
    }
    Tower { kind, class, n, z, order: 0, normalized: false, blocks }
}

/// One coproduct step: order r → r+1.
pub fn coproduct_step(t: &Tower) -> Result<Tower> {
    let d = 2 * t.n;
    let new_dim = d * t.block_dim();
    if new_dim > TOWER_DIM_GUARD {
        return Err(Error::TooLarge { dim: new_dim, guard: TOWER_DIM_GUARD });
    }
    if t.normalized {
        return Err(Error::Invalid("coproduct iterates unnormalized towers".into()));
    }
    let fund = fundamental(t.kind, t.class, t.n, t.z);
    let mut blocks = Vec::with_capacity(d * d);
    for i in 1..=d {
        for j in 1..=d {
            let terms: Vec<SparseBlock> =
                (1..=d).map(|k| fund.block(i, k).kron(t.block(k, j))).collect();
            blocks.push(SparseBlock::accumulate(new_dim, terms));
        }
    }
    Ok(Tower { order: t.order + 1, blocks, ..t.clone() })
}

/// Build the order-r tower directly.
pub fn tower(kind: TowerKind, class: BraidClass, n: usize, z: f64, order: usize) -> Result<Tower> {
    let mut t = order_zero(kind, class, n, z);
    for _ in 0..order {
        t = coproduct_step(&t)?;
    }
    Ok(t)
}

/// Trace of the tower: Σ_i Tr(block_{ii}). For n = 2 this equals
/// 2((1+z)^r + (1−z)^r) for both kinds (unnormalized blocks).
pub fn tower_trace(t: &Tower) -> Complex64 {
    (1..=2 * t.n).map(|i| t.block_trace(i)).sum()
}

/// The n = 2 closed form for the unnormalized tower trace.
pub fn trace_closed_form_n2(z: f64, order: usize) -> f64 {
    2.0 * ((1.0 + z).powi(order as i32) + (1.0 - z).powi(order as i32))
}

fn difference_parameter(z: f64, zprime: f64) -> Result<f64> {
    let denom = 1.0 - z * zprime;
    if denom.abs() < 1e-14 {
        return Err(Error::Pole { z, zprime });
    }
    Ok((z - zprime) / denom)
}

fn fundamental_dense(kind: TowerKind, n: usize, z: f64) -> ComplexDense {
    let r = braid_hat(n, BraidClass::KJ, z);
    let p = permutation_p(n);
    match kind {
        TowerKind::L => r.mul(&p),
        TowerKind::T => p.mul(&r),
    }
}

/// Exchange relation for the fundamental L at (z, z′):
/// R̂₁₂(z_d) L₂(z) L₁(z′) − L₂(z′) L₁(z) R̂₁₂(z_d), z_d = (z−z′)/(1−zz′).
pub fn check_rll(n: usize, z: f64, zprime: f64, tol: f64) -> Result<ResidualReport> {
    let zd = difference_parameter(z, zprime)?;
    let d = 2 * n;
    let r12 = lift_two_site(&braid_hat(n, BraidClass::KJ, zd), d, 3, 1, 2);
    let l2_z = lift_two_site(&fundamental_dense(TowerKind::L, n, z), d, 3, 2, 3);
    let l1_zp = lift_two_site(&fundamental_dense(TowerKind::L, n, zprime), d, 3, 1, 3);
    let l2_zp = lift_two_site(&fundamental_dense(TowerKind::L, n, zprime), d, 3, 2, 3);
    let l1_z = lift_two_site(&fundamental_dense(TowerKind::L, n, z), d, 3, 1, 3);
    let diff = r12.mul(&l2_z).mul(&l1_zp).sub(&l2_zp.mul(&l1_z).mul(&r12));
    Ok(ResidualReport::from_matrix(format!("RLL exchange n={n} z={z} z'={zprime}"), &diff, tol))
}

/// Exchange relation for the fundamental T at (z, z′):
/// R̂₁₂(z_d) T₁(z) T₂(z′) − T₁(z′) T₂(z) R̂₁₂(z_d).
pub fn check_rtt(n: usize, z: f64, zprime: f64, tol: f64) -> Result<ResidualReport> {
    let zd = difference_parameter(z, zprime)?;
    let d = 2 * n;
    let r12 = lift_two_site(&braid_hat(n, BraidClass::KJ, zd), d, 3, 1, 2);
    let t1_z = lift_two_site(&fundamental_dense(TowerKind::T, n, z), d, 3, 1, 3);
    let t2_zp = lift_two_site(&fundamental_dense(TowerKind::T, n, zprime), d, 3, 2, 3);
    let t1_zp = lift_two_site(&fundamental_dense(TowerKind::T, n, zprime), d, 3, 1, 3);
    let t2_z = lift_two_site(&fundamental_dense(TowerKind::T, n, z), d, 3, 2, 3);
    let diff = r12.mul(&t1_z).mul(&t2_zp).sub(&t1_zp.mul(&t2_z).mul(&r12));
    Ok(ResidualReport::from_matrix(format!("RTT exchange n={n} z={z} z'={zprime}"), &diff, tol))
}

/// Diagonal form of the T exchange: with D(z_d) = M R̂(z_d) M⁻¹,
/// D(z_d)(M T₁(z)T₂(z′) M⁻¹) − (M T₁(z′)T₂(z) M⁻¹) D(z_d).
pub fn check_rtt_diagonal(n: usize, z: f64, zprime: f64, tol: f64) -> Result<ResidualReport> {
    let zd = difference_parameter(z, zprime)?;
    let d = 2 * n;
    let m = build_m(n);
    let m_inv = build_m_inverse(n);
    let dmat = m.mul(&braid_hat(n, BraidClass::KJ, zd)).mul(&m_inv);
    let d12 = lift_two_site(&dmat, d, 3, 1, 2);
    let m12 = lift_two_site(&m, d, 3, 1, 2);
    let m12_inv = lift_two_site(&m_inv, d, 3, 1, 2);
    let t1_z = lift_two_site(&fundamental_dense(TowerKind::T, n, z), d, 3, 1, 3);
    let t2_zp = lift_two_site(&fundamental_dense(TowerKind::T, n, zprime), d, 3, 2, 3);
    let t1_zp = lift_two_site(&fundamental_dense(TowerKind::T, n, zprime), d, 3, 1, 3);
    let t2_z = lift_two_site(&fundamental_dense(TowerKind::T, n, z), d, 3, 2, 3);
    let lhs = d12.mul(&m12.mul(&t1_z).mul(&t2_zp).mul(&m12_inv));
    let rhs = m12.mul(&t1_zp).mul(&t2_z).mul(&m12_inv).mul(&d12);
    Ok(ResidualReport::from_matrix(
        format!("diagonal TT exchange n={n} z={z} z'={zprime}"),
        &lhs.sub(&rhs),
        tol,
    ))
}

/// The three constant exchange relations at z = ±1:
/// R̂ L₂^ε L₁^{ε′} = L₂^{ε′} L₁^ε R̂ for (ε,ε′) ∈ {(+,+), (−,−), (+,−)}.
/// (The fourth pairing (−,+) is not implied and genuinely fails.)
pub fn check_frt_constant(n: usize, tol: f64) -> Vec<ResidualReport> {
    let d = 2 * n;
    let r12 = lift_two_site(&braid_hat(n, BraidClass::KJ, 1.0), d, 3, 1, 2);
    let lp = fundamental_dense(TowerKind::L, n, 1.0);
    let lm = fundamental_dense(TowerKind::L, n, -1.0);
    let pick = |e: i32| if e > 0 { &lp } else { &lm };
    [(1, 1), (-1, -1), (1, -1)]
        .into_iter()
        .map(|(e1, e2)| {
            let l2_e1 = lift_two_site(pick(e1), d, 3, 2, 3);
            let l1_e2 = lift_two_site(pick(e2), d, 3, 1, 3);
            let l2_e2 = lift_two_site(pick(e2), d, 3, 2, 3);
            let l1_e1 = lift_two_site(pick(e1), d, 3, 1, 3);
            let diff = r12.mul(&l2_e1).mul(&l1_e2).sub(&l2_e2.mul(&l1_e1).mul(&r12));
            let sgn = |e: i32| if e > 0 { "+" } else { "-" };
            ResidualReport::from_matrix(
                format!("constant exchange ({},{}) n={n}", sgn(e1), sgn(e2)),
                &diff,
                tol,
            )
        })
        .collect()
}
