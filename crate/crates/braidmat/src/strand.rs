//! Strand-space state vectors and matrix-free application of braid generators.
//!
//! A word in braid generators acts on (C^{2n})^{⊗m}. Each generator is
//! R̂^{±1}(z) = (I⊗I ± z A⊗B)/√(1+z²) on two adjacent strands, and A, B each
//! map a basis vector e_a to ±e_ā. Applying a generator therefore costs
//! O((2n)^m) with no (2n)^m-square matrix ever materialized.

use num_complex::Complex64;

use crate::braid::BraidClass;
use crate::dense::ZERO;
use crate::error::{Error, Result};

/// One of the anti-diagonal generators; `gen · e_a = coef(a) · e_ā`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Generator {
    J,
    K,
    L,
}

impl Generator {
    /// Coefficient picked up on the 0-indexed digit `a` (local dimension 2n).
    #[inline]
    pub(crate) fn coef(self, a: usize, n: usize) -> f64 {
        match self {
            Generator::K => 1.0,
            // J e_a = (−1)^a e_ā with 1-indexed a
            Generator::J => {
                if (a + 1).is_multiple_of(2) {
                    1.0
                } else {
                    -1.0
                }
            }
            Generator::L => {
                if a < n {
                    -1.0
                } else {
                    1.0
                }
            }
        }
    }
}

pub(crate) fn class_pair(class: BraidClass) -> (Generator, Generator) {
    match class {
        BraidClass::KJ => (Generator::K, Generator::J),
        BraidClass::JK => (Generator::J, Generator::K),
        BraidClass::KL => (Generator::K, Generator::L),
        BraidClass::LK => (Generator::L, Generator::K),
    }
}

/// Sign of the braid-generator exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_f64(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// A state on m strands of local dimension 2n; index digits are base-2n with
/// the most significant digit belonging to strand 1.
#[derive(Debug, Clone, PartialEq)]
pub struct StrandVector {
    n: usize,
    m: usize,
    amplitudes: Vec<Complex64>,
}

impl StrandVector {
    pub fn new(n: usize, m: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        let want = (2 * n)
            .checked_pow(m as u32)
            .ok_or_else(|| Error::Shape(format!("(2·{n})^{m} overflows")))?;
        if amplitudes.len() != want {
            return Err(Error::Shape(format!(
                "expected (2n)^m = {want} amplitudes, got {}",
                amplitudes.len()
            )));
        }
        Ok(StrandVector { n, m, amplitudes })
    }

    pub fn zero(n: usize, m: usize) -> Self {
        StrandVector { n, m, amplitudes: vec![ZERO; (2 * n).pow(m as u32)] }
    }

    /// Basis state |index⟩ (0-indexed over the full product space).
    pub fn basis(n: usize, m: usize, index: usize) -> Self {
        let mut v = Self::zero(n, m);
        v.amplitudes[index] = Complex64::new(1.0, 0.0);
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn strands(&self) -> usize {
        self.m
    }

    pub fn local_dim(&self) -> usize {
        2 * self.n
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &StrandVector) -> f64 {
        assert_eq!(self.dim(), other.dim());
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Matrix-free description of R̂^{sign}(z) acting on one adjacent strand pair.
#[derive(Debug, Clone, Copy)]
pub struct StructuredBraidOp {
    pub n: usize,
    pub sign: Sign,
    pub z: f64,
    pub variant: BraidClass,
}

impl StructuredBraidOp {
    pub fn new(n: usize, sign: Sign, z: f64, variant: BraidClass) -> Self {
        StructuredBraidOp { n, sign, z, variant }
    }
}

/// Apply `I^{⊗slot−1} ⊗ R̂^{sign}(z) ⊗ I^{⊗m−slot−1}` to `v` (slot is 1-indexed,
/// acting on strands slot and slot+1). O((2n)^m) time and memory.
pub fn apply_generator(
    op: &StructuredBraidOp,
    slot: usize,
    v: &StrandVector,
) -> Result<StrandVector> {
    let m = v.strands();
    if slot == 0 || slot + 1 > m {
        return Err(Error::Slot { slot, strands: m });
    }
    if op.n != v.n() {
        return Err(Error::Shape(format!("operator has n = {}, vector has n = {}", op.n, v.n())));
    }
    let n = op.n;
    let d = 2 * n;
    let len = v.dim();
    let (ga, gb) = class_pair(op.variant);
    let c = 1.0 / (1.0 + op.z * op.z).sqrt();
    let w = op.sign.as_f64() * op.z * c;

    let stride = d.pow((m - slot - 1) as u32);
    let block = d * d * stride;
    let mut out = vec![ZERO; len];
    let amps = v.amplitudes();
    for base in (0..len).step_by(block) {
        for a in 0..d {
            let ca = ga.coef(a, n);
            for b in 0..d {
                let coef = w * ca * gb.coef(b, n);
                let src = base + (a * d + b) * stride;
                let dst = base + ((d - 1 - a) * d + (d - 1 - b)) * stride;
                for t in 0..stride {
                    let x = amps[src + t];
                    out[src + t] += c * x;
                    out[dst + t] += coef * x;
                }
            }
        }
    }
    Ok(StrandVector { n, m, amplitudes: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braid_hat, BraidClass};
    use crate::dense::ComplexDense;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_vector(rng: &mut ChaCha8Rng, n: usize, m: usize) -> StrandVector {
        let len = (2 * n).pow(m as u32);
        let amps = (0..len)
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        StrandVector::new(n, m, amps).unwrap()
    }

    fn r_matrix(op: &StructuredBraidOp) -> ComplexDense {
        braid_hat(op.n, op.variant, op.sign.as_f64() * op.z)
    }

    #[test]
    fn z_zero_is_identity() {
        let op = StructuredBraidOp::new(1, Sign::Plus, 0.0, BraidClass::KJ);
        let v = StrandVector::basis(1, 3, 5);
        let w = apply_generator(&op, 2, &v).unwrap();
        assert!(w.max_abs_diff(&v) < 1e-15);
    }

    #[test]
    fn base_column_action() {
        // e₁⊗e₁ ↦ (e₁⊗e₁ − e₂⊗e₂)/√2 at n = 1, z = 1 (the J sign on digit 1)
        let op = StructuredBraidOp::new(1, Sign::Plus, 1.0, BraidClass::KJ);
        let v = StrandVector::basis(1, 2, 0);
        let w = apply_generator(&op, 1, &v).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let want = StrandVector::new(
            1,
            2,
            vec![Complex64::new(s, 0.0), ZERO, ZERO, Complex64::new(-s, 0.0)],
        )
        .unwrap();
        assert!(w.max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn inverse_pair_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [1usize, 2] {
            for class in BraidClass::ALL {
                let v = random_vector(&mut rng, n, 3);
                let fwd = StructuredBraidOp::new(n, Sign::Plus, 0.73, class);
                let bwd = StructuredBraidOp::new(n, Sign::Minus, 0.73, class);
                let w = apply_generator(&bwd, 2, &apply_generator(&fwd, 2, &v).unwrap()).unwrap();
                assert!(w.max_abs_diff(&v) < 1e-13);
            }
        }
    }

    #[test]
    fn far_slots_commute() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let v = random_vector(&mut rng, 1, 4);
        let op1 = StructuredBraidOp::new(1, Sign::Plus, 0.4, BraidClass::KJ);
        let op3 = StructuredBraidOp::new(1, Sign::Minus, 0.9, BraidClass::LK);
        let a = apply_generator(&op3, 3, &apply_generator(&op1, 1, &v).unwrap()).unwrap();
        let b = apply_generator(&op1, 1, &apply_generator(&op3, 3, &v).unwrap()).unwrap();
        assert!(a.max_abs_diff(&b) < 1e-13);
    }

    #[test]
    fn matches_dense_materialization() {
        // oracle: the full kron product I ⊗ … ⊗ R̂ ⊗ … ⊗ I applied as a matrix
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for n in [1usize, 2] {
            for m in [2usize, 3, 4] {
                let d = 2 * n;
                for _ in 0..100 {
                    let v = random_vector(&mut rng, n, m);
                    let slot = rng.random_range(1..m);
                    let class = BraidClass::ALL[rng.random_range(0..4)];
                    let sign = if rng.random_range(0..2) == 0 { Sign::Plus } else { Sign::Minus };
                    let z = rng.random_range(-1.0..1.0);
                    let op = StructuredBraidOp::new(n, sign, z, class);
                    let fast = apply_generator(&op, slot, &v).unwrap();
                    let full = ComplexDense::identity(d.pow((slot - 1) as u32))
                        .kron(&r_matrix(&op))
                        .kron(&ComplexDense::identity(d.pow((m - slot - 1) as u32)));
                    let dense = StrandVector::new(n, m, full.mul_vec(v.amplitudes())).unwrap();
                    assert!(fast.max_abs_diff(&dense) < 1e-13);
                }
            }
        }
    }

    #[test]
    fn slot_out_of_range() {
        let op = StructuredBraidOp::new(1, Sign::Plus, 1.0, BraidClass::KJ);
        let v = StrandVector::basis(1, 2, 0);
        assert!(matches!(apply_generator(&op, 2, &v), Err(Error::Slot { .. })));
        assert!(matches!(apply_generator(&op, 0, &v), Err(Error::Slot { .. })));
    }
}
