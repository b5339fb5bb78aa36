//! Even-dimensional unitary braid matrices and their companions.
//!
//! Everything is generated by a quadruple of (2n)×(2n) matrices (I, J, K, L)
//! supported on the anti-diagonal (with ī = 2n−i+1):
//!
//!   J = Σ_a (−1)^ā (a ā),   K = Σ_a (a ā),   L = Σ_{a≤n} (a ā) − (ā a)
//!
//! obeying J² = L² = −I, K² = I, JK = −KJ, LK = −KL, JL = LJ. The braid
//! matrix family is R̂(z) = (1 + z A⊗B)/√(1+z²) where (A, B) is one of the
//! pairs (K,J), (J,K), (K,L), (L,K); all four are real, orthogonal and
//! satisfy the spectral-parameter braid equation, with z = tanh θ.
//!
//! Also here: the complex projectors P± = (I⊗I ± iK⊗J)/2, the diagonalizer
//! M = (I⊗I + iL⊗J)/√2, and the block-diagonalizer V that conjugates the
//! (2n)²-dimensional matrix into n² copies of the 4×4 one (which costs the
//! braid property: V is not of the form Y⊗Y).

use num_complex::Complex64;

use crate::dense::{swap_matrix, ComplexDense, I as IM, ONE};
use crate::error::{Error, Result};

/// Which tensor pair builds the braid matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BraidClass {
    /// K ⊗ J (class I)
    KJ,
    /// J ⊗ K (class II, the flip conjugate of class I)
    JK,
    /// K ⊗ L
    KL,
    /// L ⊗ K
    LK,
}

impl BraidClass {
    pub const ALL: [BraidClass; 4] =
        [BraidClass::KJ, BraidClass::JK, BraidClass::KL, BraidClass::LK];

    pub fn label(&self) -> &'static str {
        match self {
            BraidClass::KJ => "KJ",
            BraidClass::JK => "JK",
            BraidClass::KL => "KL",
            BraidClass::LK => "LK",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "KJ" | "I" => Ok(BraidClass::KJ),
            "JK" | "II" => Ok(BraidClass::JK),
            "KL" => Ok(BraidClass::KL),
            "LK" => Ok(BraidClass::LK),
            other => Err(Error::Invalid(format!("unknown braid class '{other}'"))),
        }
    }

    /// The (A, B) pair of `A ⊗ B` for this class.
    pub fn pair<'a>(&self, g: &'a GeneratorSet) -> (&'a ComplexDense, &'a ComplexDense) {
        match self {
            BraidClass::KJ => (&g.k, &g.j),
            BraidClass::JK => (&g.j, &g.k),
            BraidClass::KL => (&g.k, &g.l),
            BraidClass::LK => (&g.l, &g.k),
        }
    }
}

impl std::fmt::Display for BraidClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// The quadruple (I, J, K, L) of (2n)-square generator matrices.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub n: usize,
    pub i: ComplexDense,
    pub j: ComplexDense,
    pub k: ComplexDense,
    pub l: ComplexDense,
}

/// Build the generator quadruple. For n = 1 the degeneracy J = L holds.
pub fn build_generators(n: usize) -> GeneratorSet {
    assert!(n >= 1);
    let d = 2 * n;
    let bar = |a: usize| 2 * n - a + 1; // 1-indexed
    let mut j = ComplexDense::zeros(d, d);
    let mut k = ComplexDense::zeros(d, d);
    let mut l = ComplexDense::zeros(d, d);
    for a in 1..=d {
        let sign_j = if bar(a) % 2 == 0 { 1.0 } else { -1.0 };
        let sign_l = if a <= n { 1.0 } else { -1.0 };
        j.set(a - 1, bar(a) - 1, Complex64::new(sign_j, 0.0));
        k.set(a - 1, bar(a) - 1, ONE);
        l.set(a - 1, bar(a) - 1, Complex64::new(sign_l, 0.0));
    }
    GeneratorSet { n, i: ComplexDense::identity(d), j, k, l }
}

/// Symbolic description of a braid matrix: realize with [`BraidSpec::realize`].
#[derive(Debug, Clone, Copy)]
pub struct BraidSpec {
    pub n: usize,
    pub class: BraidClass,
    /// Spectral parameter, z = tanh θ; z = ±1 are the infinite-rapidity limits.
    pub z: f64,
    /// Whether the 1/√(1+z²) factor is applied.
    pub normalized: bool,
}

impl BraidSpec {
    pub fn new(n: usize, class: BraidClass, z: f64) -> Self {
        BraidSpec { n, class, z, normalized: true }
    }

    pub fn from_theta(n: usize, class: BraidClass, theta: f64) -> Self {
        Self::new(n, class, theta.tanh())
    }

    pub fn unnormalized(mut self) -> Self {
        self.normalized = false;
        self
    }

    pub fn realize(&self) -> ComplexDense {
        build_braid(self)
    }
}

/// Realize `(I⊗I + z A⊗B)`, scaled by 1/√(1+z²) when the spec is normalized.
pub fn build_braid(spec: &BraidSpec) -> ComplexDense {
    let g = build_generators(spec.n);
    let (a, b) = spec.class.pair(&g);
    let m = g.i.kron(&g.i).add(&a.kron(b).scale(Complex64::new(spec.z, 0.0)));
    if spec.normalized {
        m.scale(Complex64::new(1.0 / (1.0 + spec.z * spec.z).sqrt(), 0.0))
    } else {
        m
    }
}

/// Normalized braid matrix R̂(z); R̂(±1) are the constant braid matrices.
pub fn braid_hat(n: usize, class: BraidClass, z: f64) -> ComplexDense {
    build_braid(&BraidSpec::new(n, class, z))
}

/// The flip on C^{2n} ⊗ C^{2n}; conjugation by it swaps classes KJ ↔ JK and KL ↔ LK.
pub fn permutation_p(n: usize) -> ComplexDense {
    swap_matrix(2 * n)
}

/// Complex projectors P± = (I⊗I ± iK⊗J)/2: idempotent, orthogonal, summing
/// to the identity. R̂(z) = ((1−iz)P₊ + (1+iz)P₋)/√(1+z²).
pub fn build_projectors(n: usize) -> (ComplexDense, ComplexDense) {
    let g = build_generators(n);
    let ii = g.i.kron(&g.i);
    let kj = g.k.kron(&g.j);
    let half = Complex64::new(0.5, 0.0);
    let p_plus = ii.add(&kj.scale(IM)).scale(half);
    let p_minus = ii.sub(&kj.scale(IM)).scale(half);
    (p_plus, p_minus)
}

/// Diagonalizer M = (I⊗I + iL⊗J)/√2; M R̂(z) M⁻¹ is diagonal with entries
/// (1∓iz)/√(1+z²), each of multiplicity 2n², the (1−iz) block first.
pub fn build_m(n: usize) -> ComplexDense {
    let g = build_generators(n);
    let s = Complex64::new(1.0 / 2f64.sqrt(), 0.0);
    g.i.kron(&g.i).add(&g.l.kron(&g.j).scale(IM)).scale(s)
}

/// Closed-form inverse M⁻¹ = (I⊗I − iL⊗J)/√2.
pub fn build_m_inverse(n: usize) -> ComplexDense {
    let g = build_generators(n);
    let s = Complex64::new(1.0 / 2f64.sqrt(), 0.0);
    g.i.kron(&g.i).sub(&g.l.kron(&g.j).scale(IM)).scale(s)
}

/// The permutation that regroups the M-diagonalized spectrum
/// ((1−iz) on the first 2n² coordinates, (1+iz) on the rest) into n²
/// consecutive blocks of the 4×4 diagonal pattern (−,−,+,+). Built as an
/// involution on 2-coordinate units: the k-th even unit in the lower half is
/// swapped with the k-th odd unit in the upper half, counted from the top.
pub fn build_u(n: usize) -> Result<ComplexDense> {
    if n < 2 {
        return Err(Error::Trivial);
    }
    let units = 2 * n * n; // 2-coordinate units
    let half = n * n;
    let mut perm: Vec<usize> = (0..units).collect(); // perm[target] = source unit
    let evens: Vec<usize> = (1..=half).filter(|u| u % 2 == 0).collect();
    let odds: Vec<usize> = (half + 1..=units).filter(|u| u % 2 == 1).collect();
    debug_assert_eq!(evens.len(), odds.len());
    for (idx, &e) in evens.iter().enumerate() {
        let o = odds[odds.len() - 1 - idx];
        perm[e - 1] = o - 1;
        perm[o - 1] = e - 1;
    }
    let d2 = (2 * n) * (2 * n);
    let mut u = ComplexDense::zeros(d2, d2);
    for (t, &s) in perm.iter().enumerate() {
        u.set(2 * t, 2 * s, ONE);
        u.set(2 * t + 1, 2 * s + 1, ONE);
    }
    Ok(u)
}

/// Block-diagonalizer V: V R̂_{(2n)}(z) V⁻¹ = direct sum of n² copies of
/// R̂_{(2)}(z), simultaneously for every z. Composition: diagonalize by M,
/// permute by U, then undo blockwise with the 4×4 diagonalizer.
pub fn build_block_diagonalizer(n: usize) -> Result<ComplexDense> {
    let u = build_u(n)?;
    let m = build_m(n);
    let m2_inv = build_m_inverse(1);
    let w = ComplexDense::identity(n * n).kron(&m2_inv);
    Ok(w.mul(&u).mul(&m))
}

/// Closed-form inverse of [`build_block_diagonalizer`].
pub fn build_block_diagonalizer_inverse(n: usize) -> Result<ComplexDense> {
    let u = build_u(n)?; // involution
    let m_inv = build_m_inverse(n);
    let m2 = build_m(1);
    let w_inv = ComplexDense::identity(n * n).kron(&m2);
    Ok(m_inv.mul(&u).mul(&w_inv))
}

/// Direct sum of n² copies of the 4×4 braid matrix: the target of V-conjugation.
pub fn direct_sum_r2(n: usize, z: f64) -> ComplexDense {
    ComplexDense::identity(n * n).kron(&braid_hat(1, BraidClass::KJ, z))
}
