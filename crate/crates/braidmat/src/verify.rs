//! Residual-based verification of the algebraic identities the braid
//! families satisfy: braid equation, its spectral-parameter form, unitarity,
//! the quadratic relation, and eight-fold periodicity at z = ±1.
//!
//! Braid-equation residuals on a d³-dimensional space are streamed column by
//! column through two-site applications, so a 64×64 input (n = 4) never
//! forms a 512-square product chain. `braid_residual_matrix` keeps the plain
//! dense route for small inputs and serves as the independent cross-check.

use num_complex::Complex64;

use crate::braid::{braid_hat, BraidClass, BraidSpec};
use crate::dense::{exact_isqrt, ComplexDense, TwoSiteOp, ZERO};
use crate::error::{Error, Result};
use crate::odd::{build_odd_braid, OddBraidParams};

/// Default pass tolerance for the even-dimensional (rational-entry) families.
pub const DEFAULT_TOL_EVEN: f64 = 1e-12;
/// Default pass tolerance for the odd complex family (transcendental entries).
pub const DEFAULT_TOL_ODD: f64 = 1e-10;

/// Outcome of one residual check; `pass ⇔ max_abs ≤ tolerance`.
#[derive(Debug, Clone)]
pub struct ResidualReport {
    pub check: String,
    pub max_abs: f64,
    pub frobenius: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl ResidualReport {
    pub fn new(check: impl Into<String>, max_abs: f64, frobenius: f64, tolerance: f64) -> Self {
        ResidualReport {
            check: check.into(),
            max_abs,
            frobenius,
            tolerance,
            pass: max_abs <= tolerance,
        }
    }

    pub fn from_matrix(check: impl Into<String>, diff: &ComplexDense, tolerance: f64) -> Self {
        Self::new(check, diff.max_abs(), diff.frobenius_norm(), tolerance)
    }
}

struct Stream {
    max_abs: f64,
    frob_sq: f64,
}

impl Stream {
    fn new() -> Self {
        Stream { max_abs: 0.0, frob_sq: 0.0 }
    }

    fn push(&mut self, lhs: &[Complex64], rhs: &[Complex64]) {
        for (a, b) in lhs.iter().zip(rhs) {
            let d = (a - b).norm_sqr();
            self.frob_sq += d;
            self.max_abs = self.max_abs.max(d.sqrt());
        }
    }
}

fn infer_local_dim(r: &ComplexDense) -> Result<usize> {
    if !r.is_square() {
        return Err(Error::Shape(format!("expected square input, got {}x{}", r.rows(), r.cols())));
    }
    let d = exact_isqrt(r.rows())
        .ok_or_else(|| Error::Shape(format!("dimension {} is not a perfect square", r.rows())))?;
    if d < 2 {
        return Err(Error::Shape("two-site operator needs local dimension ≥ 2".into()));
    }
    Ok(d)
}

/// Residual of r₁₂r₂₃r₁₂ − r₂₃r₁₂r₂₃ with r₁₂ = r⊗I_d, r₂₃ = I_d⊗r, streamed.
pub fn check_braid(r: &ComplexDense) -> Result<ResidualReport> {
    check_braid_with_tol(r, DEFAULT_TOL_EVEN)
}

pub fn check_braid_with_tol(r: &ComplexDense, tol: f64) -> Result<ResidualReport> {
    let d = infer_local_dim(r)?;
    let report = triple_product_residual("braid equation", &[r, r, r], &[r, r, r], d, tol);
    Ok(report)
}

/// Streamed residual of A₁₂B₂₃C₁₂ − B̃₂₃Ã₁₂C̃₂₃ for two triples of two-site
/// operators (applied right-to-left to basis columns).
fn triple_product_residual(
    name: &str,
    lhs: &[&ComplexDense; 3],
    rhs: &[&ComplexDense; 3],
    d: usize,
    tol: f64,
) -> ResidualReport {
    let dim = d * d * d;
    let lhs: Vec<TwoSiteOp> = lhs.iter().map(|m| TwoSiteOp::new(m, d)).collect();
    let rhs: Vec<TwoSiteOp> = rhs.iter().map(|m| TwoSiteOp::new(m, d)).collect();
    let mut stream = Stream::new();
    let mut basis = vec![ZERO; dim];
    for x in 0..dim {
        basis[x] = Complex64::new(1.0, 0.0);
        // LHS: slots (1,2), (2,3), (1,2)
        let v = lhs[2].apply(3, 1, 2, &basis);
        let v = lhs[1].apply(3, 2, 3, &v);
        let l = lhs[0].apply(3, 1, 2, &v);
        // RHS: slots (2,3), (1,2), (2,3)
        let w = rhs[2].apply(3, 2, 3, &basis);
        let w = rhs[1].apply(3, 1, 2, &w);
        let rr = rhs[0].apply(3, 2, 3, &w);
        stream.push(&l, &rr);
        basis[x] = ZERO;
    }
    ResidualReport::new(name, stream.max_abs, stream.frob_sq.sqrt(), tol)
}

/// Dense-route braid residual matrix, for small inputs and as cross-check:
/// returns r₁₂r₂₃r₁₂ − r₂₃r₁₂r₂₃ itself.
pub fn braid_residual_matrix(r: &ComplexDense) -> Result<ComplexDense> {
    let d = infer_local_dim(r)?;
    let id = ComplexDense::identity(d);
    let r12 = r.kron(&id);
    let r23 = id.kron(r);
    Ok(r12.mul(&r23).mul(&r12).sub(&r23.mul(&r12).mul(&r23)))
}

/// Spectral-parameter braid equation
/// R̂₁₂(z)R̂₂₃(z″)R̂₁₂(z′) = R̂₂₃(z′)R̂₁₂(z″)R̂₂₃(z), z″ = (z+z′)/(1+zz′).
pub fn check_baxterized(
    n: usize,
    class: BraidClass,
    z: f64,
    zprime: f64,
    tol: f64,
) -> Result<ResidualReport> {
    let denom = 1.0 + z * zprime;
    if denom.abs() < 1e-14 {
        return Err(Error::Pole { z, zprime });
    }
    let zpp = (z + zprime) / denom;
    let rz = braid_hat(n, class, z);
    let rzp = braid_hat(n, class, zprime);
    let rzpp = braid_hat(n, class, zpp);
    let name = format!("baxterized braid n={n} class={class} z={z} z'={zprime}");
    Ok(triple_product_residual(&name, &[&rz, &rzpp, &rzp], &[&rzp, &rzpp, &rz], 2 * n, tol))
}

/// Family braid residual at a single z: the spectral equation with z′ = z,
/// middle parameter 2z/(1+z²). Reduces to the constant braid equation at
/// z ∈ {−1, 0, 1}.
pub fn check_family_braid(n: usize, class: BraidClass, z: f64, tol: f64) -> ResidualReport {
    let zpp = 2.0 * z / (1.0 + z * z);
    let rz = braid_hat(n, class, z);
    let rzpp = braid_hat(n, class, zpp);
    let name = format!("family braid n={n} class={class} z={z}");
    triple_product_residual(&name, &[&rz, &rzpp, &rz], &[&rz, &rzpp, &rz], 2 * n, tol)
}

/// r†r − I.
pub fn check_unitarity(r: &ComplexDense, tol: f64) -> ResidualReport {
    let diff = r.dagger().mul(r).sub(&ComplexDense::identity(r.rows()));
    ResidualReport::from_matrix("unitarity", &diff, tol)
}

/// R̂(z) + R̂(z)⁻¹ − 2/√(1+z²) · I, using the closed-form inverse R̂(−z).
pub fn check_quadratic(n: usize, class: BraidClass, z: f64, tol: f64) -> ResidualReport {
    let r = braid_hat(n, class, z);
    let r_inv = braid_hat(n, class, -z);
    let c = Complex64::new(2.0 / (1.0 + z * z).sqrt(), 0.0);
    let diff = r.add(&r_inv).sub(&ComplexDense::identity(r.rows()).scale(c));
    ResidualReport::from_matrix(format!("quadratic relation n={n} class={class} z={z}"), &diff, tol)
}

/// Hecke-type relation at z = 1: r² − √2·r + I.
pub fn check_hecke(r: &ComplexDense, tol: f64) -> ResidualReport {
    let s = Complex64::new(2f64.sqrt(), 0.0);
    let diff = r.mul(r).sub(&r.scale(s)).add(&ComplexDense::identity(r.rows()));
    ResidualReport::from_matrix("hecke relation", &diff, tol)
}

/// Eight-fold periodicity: residuals of r⁴ + I and r⁸ − I (max over both).
pub fn check_periodicity(r: &ComplexDense) -> ResidualReport {
    check_periodicity_with_tol(r, DEFAULT_TOL_EVEN)
}

pub fn check_periodicity_with_tol(r: &ComplexDense, tol: f64) -> ResidualReport {
    let id = ComplexDense::identity(r.rows());
    let r4 = r.pow(4);
    let d4 = r4.add(&id);
    let d8 = r4.mul(&r4).sub(&id);
    ResidualReport::new(
        "periodicity (r^4 = -I, r^8 = I)",
        d4.max_abs().max(d8.max_abs()),
        d4.frobenius_norm().max(d8.frobenius_norm()),
        tol,
    )
}

/// Angle-additive braid equation for the odd 9×9 family:
/// R̂₁₂(θ)R̂₂₃(θ+θ′)R̂₁₂(θ′) = R̂₂₃(θ′)R̂₁₂(θ+θ′)R̂₂₃(θ) on the 27-dimensional
/// space (a 729-entry residual).
pub fn check_odd_braid(params: &OddBraidParams, theta: f64, thetaprime: f64) -> ResidualReport {
    let ra = build_odd_braid(&params.with_theta(theta));
    let rb = build_odd_braid(&params.with_theta(thetaprime));
    let rab = build_odd_braid(&params.with_theta(theta + thetaprime));
    let name = format!("odd braid θ={theta} θ'={thetaprime}");
    triple_product_residual(&name, &[&ra, &rab, &rb], &[&rb, &rab, &ra], 3, DEFAULT_TOL_ODD)
}

/// Residual of the realized matrix against its defining spec, entry by entry:
/// the realized matrix must be real with constant diagonal and antisymmetric
/// anti-diagonal part.
pub fn check_shape_constraints(spec: &BraidSpec) -> ResidualReport {
    let r = spec.realize();
    let d2 = r.rows();
    let mut worst: f64 = 0.0;
    let diag = r.at(0, 0);
    for i in 0..d2 {
        for j in 0..d2 {
            let v = r.at(i, j);
            worst = worst.max(v.im.abs()); // realness
            if i == j {
                worst = worst.max((v - diag).norm());
            }
        }
    }
    // off-diagonal part changes sign under transpose
    let off = r.sub(&ComplexDense::identity(d2).scale(diag));
    let skew = off.add(&off.transpose());
    worst = worst.max(skew.max_abs());
    ResidualReport::new(
        format!("shape constraints n={} class={} z={}", spec.n, spec.class, spec.z),
        worst,
        skew.frobenius_norm(),
        DEFAULT_TOL_EVEN,
    )
}
