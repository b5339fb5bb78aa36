//! Link invariants of braid-word closures from an enhanced system.
//!
//! The enhanced system is a diagonal palindromic matrix F = Σ d_j((jj)+(j̄j̄))
//! together with scalars a = 1 and b = √2·Σd_j, satisfying
//! R̂^{±1}(F⊗F) = (F⊗F)R̂^{±1} and Tr₂(R̂^{±1}(F⊗F)) = a^{±1}·b·F (class KJ).
//! The braid-word evaluation
//!
//!   ℘(β) = b^{1−m} · Tr(ρ_m(β) · F^{⊗m})
//!
//! is invariant under conjugation and Markov stabilization; with a = 1 no
//! writhe factor is needed. The trace is evaluated by pushing each weighted
//! basis vector through the matrix-free strand representation, so no
//! (2n)^m-square matrix is formed.
//!
//! Spectral-parameter mode (|z| < 1) is experimental: the trace condition
//! holds with the z-dependent normalizer b(z) = 2Σd_j/√(1+z²) (= b at
//! z = 1), which keeps conjugation and stabilization invariance, but R̂(z)
//! is not a braid-group representation off z = ±1. Note Tr(F) = 2Σd_j,
//! which equals √2·b — the unknot evaluates to Tr(F).

use num_complex::Complex64;

use crate::braid::{braid_hat, BraidClass};
use crate::dense::{ComplexDense, ZERO};
use crate::error::{Error, Result};
use crate::strand::{apply_generator, Sign, StrandVector, StructuredBraidOp};
use crate::verify::ResidualReport;

/// Dimension guard for invariant evaluation.
pub const LINK_DIM_GUARD: usize = 4096;

/// The enhanced triple (F, a, b) with its n free diagonal parameters.
#[derive(Debug, Clone)]
pub struct EnhancedSystem {
    n: usize,
    d: Vec<f64>,
    b: f64,
    f: ComplexDense,
}

impl EnhancedSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> &[f64] {
        &self.d
    }

    /// Always 1 for this family.
    pub fn a(&self) -> f64 {
        1.0
    }

    /// b = √2 · Σ d_j.
    pub fn b(&self) -> f64 {
        self.b
    }

    /// b(z) = 2Σd_j/√(1+z²), the trace normalizer of the spectral mode.
    pub fn b_at(&self, z: f64) -> f64 {
        2.0 * self.d.iter().sum::<f64>() / (1.0 + z * z).sqrt()
    }

    pub fn f(&self) -> &ComplexDense {
        &self.f
    }

    /// Diagonal entry of F at 1-indexed position c.
    pub fn f_diag(&self, c: usize) -> f64 {
        let d = 2 * self.n;
        if c <= self.n {
            self.d[c - 1]
        } else {
            self.d[d - c]
        }
    }
}

/// Build and verify the enhanced system: commutation with R̂^{±1} and the
/// partial-trace condition at z = 1, both to 1e−12.
pub fn build_enhanced(n: usize, d: &[f64]) -> Result<EnhancedSystem> {
    if d.len() != n {
        return Err(Error::Invalid(format!("expected {n} diagonal parameters, got {}", d.len())));
    }
    let sum: f64 = d.iter().sum();
    if sum.abs() < 1e-12 {
        return Err(Error::NonInvertibleB);
    }
    let dd = 2 * n;
    let mut f = ComplexDense::zeros(dd, dd);
    for (j, &v) in d.iter().enumerate() {
        f.set(j, j, Complex64::new(v, 0.0));
        f.set(dd - 1 - j, dd - 1 - j, Complex64::new(v, 0.0));
    }
    let sys = EnhancedSystem { n, d: d.to_vec(), b: 2f64.sqrt() * sum, f };
    for rep in verify_enhanced(&sys, 1e-12) {
        if !rep.pass {
            return Err(Error::Invalid(format!("{}: residual {}", rep.check, rep.max_abs)));
        }
    }
    Ok(sys)
}

/// Residuals of the two defining conditions at z = ±1.
pub fn verify_enhanced(sys: &EnhancedSystem, tol: f64) -> Vec<ResidualReport> {
    let n = sys.n;
    let ff = sys.f.kron(&sys.f);
    let mut reports = Vec::new();
    for z in [1.0, -1.0] {
        let r = braid_hat(n, BraidClass::KJ, z);
        let commute = r.mul(&ff).sub(&ff.mul(&r));
        reports.push(ResidualReport::from_matrix(
            format!("[R^({z}), F⊗F] = 0 (n={n})"),
            &commute,
            tol,
        ));
        let tr2 = r.mul(&ff).partial_trace_2(2 * n, 2 * n).expect("square by construction");
        // a = 1 for both signs
        let want = sys.f.scale(Complex64::new(sys.b, 0.0));
        reports.push(ResidualReport::from_matrix(
            format!("Tr₂(R^({z})(F⊗F)) = bF (n={n})"),
            &tr2.sub(&want),
            tol,
        ));
    }
    reports
}

/// A word in signed braid generators: letter +i is σ_i, −i is σ_i⁻¹.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self> {
        if strands < 1 {
            return Err(Error::Invalid("braid group needs at least one strand".into()));
        }
        for &g in &letters {
            if g == 0 || g.unsigned_abs() as usize > strands - 1 {
                return Err(Error::Letter { letter: g, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parse the comma-separated signed-integer format, e.g. `1,2,-1`.
    /// The empty string is the identity braid.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Self::new(strands, Vec::new());
        }
        let letters = trimmed
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Invalid(format!("bad braid letter '{tok}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl std::fmt::Display for BraidWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Apply the braid representation of `w` to a strand vector, left to right,
/// with σ_i ↦ R̂^{±1}(z) on slots (i, i+1).
pub fn braid_rep_apply(
    sys: &EnhancedSystem,
    w: &BraidWord,
    z: f64,
    v: &StrandVector,
) -> Result<StrandVector> {
    if v.n() != sys.n || v.strands() != w.strands {
        return Err(Error::Shape(format!(
            "vector on n={}, m={} does not fit word on n={}, m={}",
            v.n(),
            v.strands(),
            sys.n,
            w.strands
        )));
    }
    let mut state = v.clone();
    for &g in &w.letters {
        let sign = if g > 0 { Sign::Plus } else { Sign::Minus };
        let op = StructuredBraidOp::new(sys.n, sign, z, BraidClass::KJ);
        state = apply_generator(&op, g.unsigned_abs() as usize, &state)?;
    }
    Ok(state)
}

/// Evaluate ℘(β) = b(z)^{1−m} Tr(ρ_m(β) F^{⊗m}) by streaming weighted basis
/// vectors through the word; z = 1 is the link invariant proper.
pub fn invariant(sys: &EnhancedSystem, w: &BraidWord, z: f64) -> Result<Complex64> {
    let m = w.strands;
    let d = 2 * sys.n;
    let dim = d.checked_pow(m as u32).unwrap_or(usize::MAX);
    if dim > LINK_DIM_GUARD {
        return Err(Error::TooLarge { dim, guard: LINK_DIM_GUARD });
    }
    let mut trace = ZERO;
    for x in 0..dim {
        // F^{⊗m} is diagonal: weight = Π_s F[digit_s]
        let mut weight = 1.0;
        let mut y = x;
        for _ in 0..m {
            weight *= sys.f_diag(y % d + 1);
            y /= d;
        }
        if weight == 0.0 {
            continue;
        }
        let out = braid_rep_apply(sys, w, z, &StrandVector::basis(sys.n, m, x))?;
        trace += out.amplitudes()[x] * weight;
    }
    let b = sys.b_at(z);
    Ok(trace * Complex64::new(b.powi(1 - m as i32), 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn dense_invariant(sys: &EnhancedSystem, w: &BraidWord, z: f64) -> Complex64 {
        // independent oracle: materialize ρ_m(β) and F^{⊗m} densely
        let n = sys.n();
        let d = 2 * n;
        let m = w.strands();
        let dim = d.pow(m as u32);
        let mut rho = ComplexDense::identity(dim);
        for &g in w.letters() {
            let r = braid_hat(n, BraidClass::KJ, if g > 0 { z } else { -z });
            let s = g.unsigned_abs() as usize;
            let lifted = ComplexDense::identity(d.pow((s - 1) as u32))
                .kron(&r)
                .kron(&ComplexDense::identity(d.pow((m - s - 1) as u32)));
            rho = lifted.mul(&rho);
        }
        let mut fm = ComplexDense::identity(1);
        for _ in 0..m {
            fm = fm.kron(sys.f());
        }
        let b = sys.b_at(z);
        rho.mul(&fm).trace() * Complex64::new(b.powi(1 - m as i32), 0.0)
    }

    #[test]
    fn enhanced_small_cases() {
        let sys = build_enhanced(1, &[1.0]).unwrap();
        assert!(sys.f().approx_eq(&ComplexDense::identity(2), 0.0));
        assert!((sys.b() - 2f64.sqrt()).abs() < 1e-15);
        let sys = build_enhanced(2, &[1.0, 1.0]).unwrap();
        assert!(sys.f().approx_eq(&ComplexDense::identity(4), 0.0));
        assert!((sys.b() - 2.0 * 2f64.sqrt()).abs() < 1e-15);
        // palindromic layout: F = diag(d1, d2, d2, d1)
        let sys = build_enhanced(2, &[2.0, -0.5]).unwrap();
        for (idx, want) in [(0, 2.0), (1, -0.5), (2, -0.5), (3, 2.0)] {
            assert_eq!(sys.f().at(idx, idx).re, want);
        }
    }

    #[test]
    fn enhanced_conditions_random_d() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for n in [1usize, 2, 3] {
            let d: Vec<f64> = (0..n).map(|_| rng.random_range(-2.0..2.0)).collect();
            if d.iter().sum::<f64>().abs() < 0.2 {
                continue;
            }
            let sys = build_enhanced(n, &d).unwrap();
            for rep in verify_enhanced(&sys, 1e-13) {
                assert!(rep.pass, "{}: {}", rep.check, rep.max_abs);
            }
        }
    }

    #[test]
    fn zero_sum_rejected() {
        assert!(matches!(build_enhanced(2, &[1.0, -1.0]), Err(Error::NonInvertibleB)));
    }

    #[test]
    fn antidiagonal_part_traces_out() {
        // Tr₂((K⊗J)(F⊗F)) = (KF)·Tr(JF) = 0: JF has zero diagonal
        let sys = build_enhanced(2, &[2.0, -0.5]).unwrap();
        let g = crate::braid::build_generators(2);
        let kj_ff = g.k.kron(&g.j).mul(&sys.f().kron(sys.f()));
        let tr2 = kj_ff.partial_trace_2(4, 4).unwrap();
        assert!(tr2.max_abs() < 1e-14);
    }

    #[test]
    fn word_validation_and_parse() {
        assert!(BraidWord::new(2, vec![1, -1]).is_ok());
        assert!(matches!(BraidWord::new(2, vec![2]), Err(Error::Letter { .. })));
        assert!(matches!(BraidWord::new(2, vec![0]), Err(Error::Letter { .. })));
        assert!(BraidWord::parse(1, "").unwrap().is_empty());
        let w = BraidWord::parse(3, " 1, 2 ,-1 ").unwrap();
        assert_eq!(w.letters(), &[1, 2, -1]);
        assert!(BraidWord::parse(3, "1,x").is_err());
    }

    #[test]
    fn rep_word_basics() {
        let sys = build_enhanced(1, &[1.0]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let amps = (0..4)
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        let v = StrandVector::new(1, 2, amps).unwrap();
        let empty = BraidWord::new(2, vec![]).unwrap();
        assert!(braid_rep_apply(&sys, &empty, 1.0, &v).unwrap().max_abs_diff(&v) < 1e-15);
        let cancel = BraidWord::new(2, vec![1, -1]).unwrap();
        assert!(braid_rep_apply(&sys, &cancel, 1.0, &v).unwrap().max_abs_diff(&v) < 1e-13);
    }

    #[test]
    fn braid_relation_on_states_at_unit_z() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for n in [1usize, 2] {
            let sys = build_enhanced(n, &vec![1.0; n]).unwrap();
            let w121 = BraidWord::new(3, vec![1, 2, 1]).unwrap();
            let w212 = BraidWord::new(3, vec![2, 1, 2]).unwrap();
            for _ in 0..50 {
                let amps = (0..(2 * n).pow(3))
                    .map(|_| {
                        Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
                    })
                    .collect();
                let v = StrandVector::new(n, 3, amps).unwrap();
                let a = braid_rep_apply(&sys, &w121, 1.0, &v).unwrap();
                let b = braid_rep_apply(&sys, &w212, 1.0, &v).unwrap();
                assert!(a.max_abs_diff(&b) < 1e-12);
            }
        }
    }

    #[test]
    fn unknot_family_values() {
        let sys = build_enhanced(1, &[1.0]).unwrap();
        // unknot as the empty word on one strand: Tr F = 2
        let w = BraidWord::new(1, vec![]).unwrap();
        let p = invariant(&sys, &w, 1.0).unwrap();
        assert!((p - Complex64::new(2.0, 0.0)).norm() < 1e-12);
        // two-component unlink: b⁻¹ (Tr F)² = 2√2
        let w = BraidWord::new(2, vec![]).unwrap();
        let p = invariant(&sys, &w, 1.0).unwrap();
        assert!((p - Complex64::new(2.0 * 2f64.sqrt(), 0.0)).norm() < 1e-12);
        // stabilized unknot: same value as the one-strand unknot
        let w = BraidWord::new(2, vec![1]).unwrap();
        let p = invariant(&sys, &w, 1.0).unwrap();
        assert!((p - Complex64::new(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn structured_matches_dense_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        for _ in 0..20 {
            let n = rng.random_range(1..=2usize);
            let m = rng.random_range(1..=3usize);
            if (2 * n).pow(m as u32) > 256 {
                continue;
            }
            let d: Vec<f64> = (0..n).map(|_| rng.random_range(0.5..2.0)).collect();
            let sys = build_enhanced(n, &d).unwrap();
            let len = rng.random_range(0..6);
            let letters: Vec<i64> = (0..len)
                .filter_map(|_| {
                    if m < 2 {
                        None
                    } else {
                        let g = rng.random_range(1..m) as i64;
                        Some(if rng.random_range(0..2) == 0 { g } else { -g })
                    }
                })
                .collect();
            let w = BraidWord::new(m, letters).unwrap();
            let z = if rng.random_range(0..2) == 0 { 1.0 } else { 0.6 };
            let fast = invariant(&sys, &w, z).unwrap();
            let slow = dense_invariant(&sys, &w, z);
            assert!((fast - slow).norm() < 1e-12 * slow.norm().max(1.0));
        }
    }

    fn random_word(rng: &mut ChaCha8Rng, m: usize, len: usize) -> Vec<i64> {
        (0..len)
            .map(|_| {
                let g = rng.random_range(1..m) as i64;
                if rng.random_range(0..2) == 0 {
                    g
                } else {
                    -g
                }
            })
            .collect()
    }

    #[test]
    fn markov_moves_and_periodicity() {
        let mut rng = ChaCha8Rng::seed_from_u64(35);
        for _ in 0..25 {
            let n = rng.random_range(1..=2usize);
            let m = rng.random_range(2..=4usize);
            let d: Vec<f64> = (0..n).map(|_| rng.random_range(0.5..2.0)).collect();
            let sys = build_enhanced(n, &d).unwrap();
            let beta_len = rng.random_range(0..5);
            let beta = random_word(&mut rng, m, beta_len);
            let w = BraidWord::new(m, beta.clone()).unwrap();
            let base = invariant(&sys, &w, 1.0).unwrap();

            // conjugation: γ β γ⁻¹
            let gamma = random_word(&mut rng, m, 3);
            let mut conj = gamma.clone();
            conj.extend(&beta);
            conj.extend(gamma.iter().rev().map(|g| -g));
            let conj = BraidWord::new(m, conj).unwrap();
            let v = invariant(&sys, &conj, 1.0).unwrap();
            assert!((base - v).norm() < 1e-10 * base.norm().max(1.0));

            // stabilization: β·σ_m^{±1} on m+1 strands
            for s in [1i64, -1] {
                let mut stab = beta.clone();
                stab.push(s * m as i64);
                let stab = BraidWord::new(m + 1, stab).unwrap();
                let v = invariant(&sys, &stab, 1.0).unwrap();
                assert!((base - v).norm() < 1e-10 * base.norm().max(1.0));
            }

            // σ_i⁸ appended is invisible at z = 1
            let mut power = beta.clone();
            power.extend([1i64; 8]);
            let power = BraidWord::new(m, power).unwrap();
            let v = invariant(&sys, &power, 1.0).unwrap();
            assert!((base - v).norm() < 1e-10 * base.norm().max(1.0));
        }
    }

    #[test]
    fn stabilization_in_spectral_mode() {
        // b(z) keeps the stabilization move exact off z = 1
        let sys = build_enhanced(1, &[1.0]).unwrap();
        let base = invariant(&sys, &BraidWord::new(1, vec![]).unwrap(), 0.6).unwrap();
        let stab = invariant(&sys, &BraidWord::new(2, vec![1]).unwrap(), 0.6).unwrap();
        assert!((base - stab).norm() < 1e-12);
    }

    #[test]
    fn d_scaling_covariance() {
        // scaling every d_j by t scales an m-strand evaluation by t
        let mut rng = ChaCha8Rng::seed_from_u64(36);
        let d = [1.3, -0.4];
        let sys = build_enhanced(2, &d).unwrap();
        let t = 1.7;
        let scaled: Vec<f64> = d.iter().map(|x| x * t).collect();
        let sys_t = build_enhanced(2, &scaled).unwrap();
        for m in [1usize, 2, 3] {
            let letters = if m >= 2 { random_word(&mut rng, m, 3) } else { vec![] };
            let w = BraidWord::new(m, letters).unwrap();
            let a = invariant(&sys, &w, 1.0).unwrap();
            let b = invariant(&sys_t, &w, 1.0).unwrap();
            assert!((b - a * Complex64::new(t, 0.0)).norm() < 1e-10 * b.norm().max(1.0));
        }
    }

    #[test]
    fn guard_rejects_large_spaces() {
        let sys = build_enhanced(2, &[1.0, 1.0]).unwrap();
        let w = BraidWord::new(7, vec![]).unwrap();
        assert!(matches!(invariant(&sys, &w, 1.0), Err(Error::TooLarge { .. })));
    }
}
