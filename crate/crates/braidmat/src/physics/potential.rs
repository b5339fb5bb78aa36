//! Potentials for factorizable S-matrices via the inverse Cayley transform.
//!
//! With R(z) = P R̂(z) (class KJ) and μ = √(1+z²)·λ absorbing the unitarity
//! normalization,
//!
//!   −iV(z) = (√(1+z²)R − μI)⁻¹(√(1+z²)R + μI) = I + 2μ X(z),
//!   X(z)   = (√(1+z²)R − μI)⁻¹.
//!
//! `cayley_potential` inverts directly for any n; `closed_form_x_n1` and
//! `closed_form_x_n2` give the entrywise formulas used as an independent
//! cross-check. The inverse exists away from the zeros of
//! (1−μ)²+z², z²−μ²+1 and (for n ≥ 2) (1+μ)²+z².

use num_complex::Complex64;

use crate::braid::{build_braid, permutation_p, BraidClass, BraidSpec};
use crate::dense::{ComplexDense, ONE};
use crate::error::{Error, Result};

/// Parameters of the Cayley-transform potential.
#[derive(Debug, Clone, Copy)]
pub struct PotentialParams {
    pub n: usize,
    pub z: f64,
    /// Shift μ = √(1+z²)·λ; complex values are allowed.
    pub mu: Complex64,
}

impl PotentialParams {
    pub fn new(n: usize, z: f64, mu: Complex64) -> Self {
        PotentialParams { n, z, mu }
    }

    /// The unscaled shift λ = μ/√(1+z²).
    pub fn lambda(&self) -> Complex64 {
        self.mu / (1.0 + self.z * self.z).sqrt()
    }

    fn denominators(&self) -> Vec<(String, Complex64)> {
        let z2 = Complex64::new(self.z * self.z, 0.0);
        let mu = self.mu;
        let mut ds = vec![
            ("(1-mu)^2 + z^2".to_string(), (ONE - mu) * (ONE - mu) + z2),
            ("z^2 - mu^2 + 1".to_string(), z2 - mu * mu + ONE),
        ];
        if self.n >= 2 {
            ds.push(("(1+mu)^2 + z^2".to_string(), (ONE + mu) * (ONE + mu) + z2));
        }
        ds
    }

    /// Whether μ avoids every singular denominator (magnitude ≥ 1e−10).
    pub fn is_admissible(&self) -> bool {
        self.denominators().iter().all(|(_, d)| d.norm() >= 1e-10)
    }
}

/// The unnormalized Yang-Baxter matrix √(1+z²)·R(z) = P(I⊗I + zK⊗J).
pub fn scaled_yb_matrix(n: usize, z: f64) -> ComplexDense {
    let r = build_braid(&BraidSpec::new(n, BraidClass::KJ, z).unnormalized());
    permutation_p(n).mul(&r)
}

/// X(z) = (√(1+z²)R(z) − μI)⁻¹ by dense inversion.
pub fn cayley_potential(params: &PotentialParams) -> Result<ComplexDense> {
    for (name, d) in params.denominators() {
        if d.norm() < 1e-10 {
            return Err(Error::SingularShift(format!(
                "{name} vanishes (|{name}| = {:.3e})",
                d.norm()
            )));
        }
    }
    let d2 = (2 * params.n) * (2 * params.n);
    let shifted =
        scaled_yb_matrix(params.n, params.z).sub(&ComplexDense::identity(d2).scale(params.mu));
    shifted
        .inverse()
        .map_err(|_| Error::SingularShift("shifted Yang-Baxter matrix is not invertible".into()))
}

/// −iV(z) = I + 2μX(z).
pub fn minus_i_v(params: &PotentialParams) -> Result<ComplexDense> {
    let x = cayley_potential(params)?;
    let d2 = (2 * params.n) * (2 * params.n);
    Ok(ComplexDense::identity(d2).add(&x.scale(2.0 * params.mu)))
}

/// Coefficient V_{(ab,cd)} in V = Σ V_{(ab,cd)} (ab)⊗(cd): the entry at
/// row (a,c), column (b,d), all 1-indexed.
pub fn v_coefficient(
    v: &ComplexDense,
    n: usize,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
) -> Complex64 {
    let dd = 2 * n;
    v.at((a - 1) * dd + (c - 1), (b - 1) * dd + (d - 1))
}

/// Entrywise closed form of X(z) for n = 1.
pub fn closed_form_x_n1(z: f64, mu: Complex64) -> ComplexDense {
    let z2 = Complex64::new(z * z, 0.0);
    let zc = Complex64::new(z, 0.0);
    let k1 = ONE / ((ONE - mu) * (ONE - mu) + z2);
    let k2 = ONE / (z2 - mu * mu + ONE);
    let mut x = ComplexDense::zeros(4, 4);
    x.set(0, 0, k1 * (ONE - mu));
    x.set(0, 3, -k1 * zc);
    x.set(3, 0, k1 * zc);
    x.set(3, 3, k1 * (ONE - mu));
    x.set(1, 1, k2 * (zc + mu));
    x.set(1, 2, k2);
    x.set(2, 1, k2);
    x.set(2, 2, -k2 * (zc - mu));
    x
}

/// Entrywise closed form of X(z) for n = 2. Written in the index notation
/// X(aj,ck) = entry at row (a,c), columns (j,k); the mixed families carry
/// the prefactor K₁K₃ with K₃ = 1/((1+μ)²+z²).
pub fn closed_form_x_n2(z: f64, mu: Complex64) -> ComplexDense {
    let z2 = Complex64::new(z * z, 0.0);
    let zc = Complex64::new(z, 0.0);
    let k1 = ONE / ((ONE - mu) * (ONE - mu) + z2);
    let k2 = ONE / (z2 - mu * mu + ONE);
    let k3 = ONE / ((ONE + mu) * (ONE + mu) + z2);
    let del = |a: usize, b: usize| if a == b { ONE } else { Complex64::new(0.0, 0.0) };
    let mut x = ComplexDense::zeros(16, 16);
    let mut put = |a: usize, c: usize, f: &dyn Fn(usize, usize) -> Complex64| {
        for j in 1..=4 {
            for k in 1..=4 {
                x.set((a - 1) * 4 + (c - 1), (j - 1) * 4 + (k - 1), f(j, k));
            }
        }
    };
    put(1, 1, &|j, k| k1 * ((ONE - mu) * del(1, j) * del(1, k) - zc * del(4, j) * del(4, k)));
    put(4, 4, &|j, k| k1 * ((ONE - mu) * del(4, j) * del(4, k) + zc * del(1, j) * del(1, k)));
    put(1, 4, &|j, k| k2 * ((mu + zc) * del(1, j) * del(4, k) + del(4, j) * del(1, k)));
    put(4, 1, &|j, k| k2 * ((mu - zc) * del(4, j) * del(1, k) + del(1, j) * del(4, k)));
    put(2, 2, &|j, k| k1 * ((ONE - mu) * del(2, j) * del(2, k) + zc * del(3, j) * del(3, k)));
    put(3, 3, &|j, k| k1 * ((ONE - mu) * del(3, j) * del(3, k) - zc * del(2, j) * del(2, k)));
    put(2, 3, &|j, k| k2 * ((mu - zc) * del(2, j) * del(3, k) + del(3, j) * del(2, k)));
    put(3, 2, &|j, k| k2 * ((mu + zc) * del(3, j) * del(2, k) + del(2, j) * del(3, k)));
    put(1, 2, &|j, k| {
        k2 * (mu * del(1, j) * del(2, k) + del(2, j) * del(1, k) + zc * del(3, j) * del(4, k))
    });
    put(2, 1, &|j, k| {
        k2 * (del(1, j) * del(2, k) + mu * del(2, j) * del(1, k) - zc * del(4, j) * del(3, k))
    });
    put(3, 4, &|j, k| {
        k2 * (zc * del(1, j) * del(2, k) + mu * del(3, j) * del(4, k) + del(4, j) * del(3, k))
    });
    put(4, 3, &|j, k| {
        k2 * (-zc * del(2, j) * del(1, k) + del(3, j) * del(4, k) + mu * del(4, j) * del(3, k))
    });
    let c1 = |j, k| mu * del(1, j) * del(3, k) + del(3, j) * del(1, k) - zc * del(2, j) * del(4, k);
    let c2 = |j, k| mu * del(2, j) * del(4, k) + del(4, j) * del(2, k) + zc * del(1, j) * del(3, k);
    let c3 = |j, k| mu * del(3, j) * del(1, k) + del(1, j) * del(3, k) - zc * del(4, j) * del(2, k);
    let c4 = |j, k| mu * del(4, j) * del(2, k) + del(2, j) * del(4, k) + zc * del(3, j) * del(1, k);
    put(1, 3, &|j, k| k1 * k3 * (c1(j, k) / k2 - 2.0 * mu * zc * c2(j, k)));
    put(2, 4, &|j, k| k1 * k3 * (c2(j, k) / k2 + 2.0 * mu * zc * c1(j, k)));
    put(3, 1, &|j, k| k1 * k3 * (c3(j, k) / k2 - 2.0 * mu * zc * c4(j, k)));
    put(4, 2, &|j, k| k1 * k3 * (c4(j, k) / k2 + 2.0 * mu * zc * c3(j, k)));
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn scaled_yb_n1_matches_fixed_matrix() {
        let z = 0.37;
        let want = ComplexDense::from_real_rows(&[
            &[1.0, 0.0, 0.0, z],
            &[0.0, z, 1.0, 0.0],
            &[0.0, 1.0, -z, 0.0],
            &[-z, 0.0, 0.0, 1.0],
        ]);
        assert!(scaled_yb_matrix(1, z).approx_eq(&want, 0.0));
    }

    #[test]
    fn inverse_definition_holds() {
        let params = PotentialParams::new(1, 0.5, Complex64::new(3.0, 0.0));
        let x = cayley_potential(&params).unwrap();
        let shifted = scaled_yb_matrix(1, 0.5).sub(&ComplexDense::identity(4).scale(params.mu));
        assert!(x.mul(&shifted).approx_eq(&ComplexDense::identity(4), 1e-12));
    }

    #[test]
    fn cayley_factorization() {
        // (√(1+z²)R − μ)⁻¹(√(1+z²)R + μ) = I + 2μX
        for n in [1usize, 2] {
            let params = PotentialParams::new(n, 0.3, Complex64::new(1.7, -0.4));
            let d2 = (2 * n) * (2 * n);
            let scaled = scaled_yb_matrix(n, 0.3);
            let id = ComplexDense::identity(d2);
            let lhs = scaled
                .sub(&id.scale(params.mu))
                .inverse()
                .unwrap()
                .mul(&scaled.add(&id.scale(params.mu)));
            assert!(lhs.approx_eq(&minus_i_v(&params).unwrap(), 1e-12));
        }
    }

    #[test]
    fn closed_forms_match_inversion() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..20 {
            let z = rng.random_range(-0.9..0.9);
            let mu = Complex64::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
            let p1 = PotentialParams::new(1, z, mu);
            let p2 = PotentialParams::new(2, z, mu);
            if !p1.is_admissible() || !p2.is_admissible() {
                continue;
            }
            let x1 = cayley_potential(&p1).unwrap();
            assert!(x1.approx_eq(&closed_form_x_n1(z, mu), 1e-10));
            let x2 = cayley_potential(&p2).unwrap();
            assert!(x2.approx_eq(&closed_form_x_n2(z, mu), 1e-10));
        }
    }

    #[test]
    fn inversion_generalizes_past_closed_forms() {
        // n = 3 has no entrywise reference; the defining identity still holds
        let params = PotentialParams::new(3, 0.4, Complex64::new(1.2, -0.7));
        let x = cayley_potential(&params).unwrap();
        let shifted = scaled_yb_matrix(3, 0.4).sub(&ComplexDense::identity(36).scale(params.mu));
        assert!(x.mul(&shifted).approx_eq(&ComplexDense::identity(36), 1e-11));
        // near-singular shifts are caught by the named guards for any n
        let z = 0.4;
        let err =
            cayley_potential(&PotentialParams::new(3, z, Complex64::new(-1.0, z))).unwrap_err();
        assert!(matches!(err, Error::SingularShift(_)));
    }

    #[test]
    fn closed_form_blocks_n1() {
        let z = 0.4;
        let mu = Complex64::new(2.0, 0.0);
        let x = closed_form_x_n1(z, mu);
        let k1 = ONE / ((ONE - mu) * (ONE - mu) + Complex64::new(z * z, 0.0));
        let k2 = ONE / (Complex64::new(z * z, 0.0) - mu * mu + ONE);
        // outer block K₁[[1−μ, −z],[z, 1−μ]] on rows/cols {1,4}
        assert_eq!(x.at(0, 0), k1 * (ONE - mu));
        assert_eq!(x.at(0, 3), -k1 * Complex64::new(z, 0.0));
        assert_eq!(x.at(3, 0), k1 * Complex64::new(z, 0.0));
        // inner block K₂[[z+μ, 1],[1, −(z−μ)]] on rows/cols {2,3}
        assert_eq!(x.at(1, 1), k2 * (Complex64::new(z, 0.0) + mu));
        assert_eq!(x.at(1, 2), k2);
        assert_eq!(x.at(2, 2), -k2 * (Complex64::new(z, 0.0) - mu));
    }

    #[test]
    fn singular_shift_error_paths() {
        // μ = 1 + iz zeroes (1−μ)²+z²
        let z = 0.5;
        let err =
            cayley_potential(&PotentialParams::new(1, z, Complex64::new(1.0, z))).unwrap_err();
        assert!(matches!(err, Error::SingularShift(ref s) if s.contains("(1-mu)^2")));
        // μ = √(1+z²) zeroes z²−μ²+1
        let mu = Complex64::new((1.0 + z * z).sqrt(), 0.0);
        let err = cayley_potential(&PotentialParams::new(1, z, mu)).unwrap_err();
        assert!(matches!(err, Error::SingularShift(ref s) if s.contains("z^2 - mu^2")));
        // n = 2: μ = −1 + iz zeroes (1+μ)²+z², which only guards n ≥ 2
        let err =
            cayley_potential(&PotentialParams::new(2, z, Complex64::new(-1.0, z))).unwrap_err();
        assert!(matches!(err, Error::SingularShift(ref s) if s.contains("(1+mu)^2")));
    }

    #[test]
    fn norm_diverges_near_singular_shift() {
        let z: f64 = 0.5;
        let mu_sing = Complex64::new((1.0 + z * z).sqrt(), 0.0);
        let mut last = 0.0;
        for eps in [1e-2, 1e-4, 1e-6] {
            let params = PotentialParams::new(1, z, mu_sing + Complex64::new(eps, 0.0));
            let x = cayley_potential(&params).unwrap();
            let norm = x.max_abs();
            assert!(norm > last);
            last = norm;
        }
        assert!(last > 1e4);
    }

    #[test]
    fn v_coefficient_indexing() {
        let params = PotentialParams::new(1, 0.5, Complex64::new(3.0, 0.0));
        let v = minus_i_v(&params).unwrap();
        assert_eq!(v_coefficient(&v, 1, 1, 1, 2, 2), v.at(1, 1));
        assert_eq!(v_coefficient(&v, 1, 1, 2, 2, 1), v.at(1, 2));
    }
}
