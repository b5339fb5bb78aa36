//! Removal of spurious anti-diagonal phases by Y⊗Y conjugation (4×4 case).
//!
//! A diagonal unitary Y = diag(e^{−iφ/4}, e^{iφ/4}) conjugates the outer
//! anti-diagonal entries of a 4×4 matrix by e^{∓iφ} and leaves the inner
//! pair untouched, so a phase pattern is removable exactly when the inner
//! entries are already ±1 and the outer two are conjugate-inverse up to
//! sign. Such conjugations preserve the braid property.

use num_complex::Complex64;

use crate::dense::ComplexDense;
use crate::error::{Error, Result};

const TOL: f64 = 1e-12;

fn near_real_sign(v: Complex64) -> Option<f64> {
    if v.im.abs() <= TOL && (v.re.abs() - 1.0).abs() <= TOL {
        Some(v.re.signum())
    } else {
        None
    }
}

/// Canonicalize a phased anti-diagonal 4×4 matrix: returns the 2×2 gauge `Y`
/// and `(Y⊗Y) r (Y⊗Y)⁻¹`, whose anti-diagonal entries are ±1 up to roundoff.
/// Inputs already in canonical form come back with `Y = I`.
pub fn canonicalize_phases(r_phased: &ComplexDense) -> Result<(ComplexDense, ComplexDense)> {
    if r_phased.rows() != 4 || r_phased.cols() != 4 {
        return Err(Error::Shape("phase canonicalization is implemented for 4x4 inputs".into()));
    }
    for i in 0..4 {
        for j in 0..4 {
            if i + j != 3 && r_phased.at(i, j).norm() > TOL {
                return Err(Error::NotGaugeEquivalent(format!(
                    "entry ({},{}) off the anti-diagonal is nonzero",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let t14 = r_phased.at(0, 3);
    let t23 = r_phased.at(1, 2);
    let t32 = r_phased.at(2, 1);
    let t41 = r_phased.at(3, 0);
    for (name, t) in [("(1,4)", t14), ("(2,3)", t23), ("(3,2)", t32), ("(4,1)", t41)] {
        if (t.norm() - 1.0).abs() > TOL {
            return Err(Error::NotGaugeEquivalent(format!("entry {name} is not unit modulus")));
        }
    }
    // the inner pair is invariant under Y⊗Y conjugation
    if near_real_sign(t23).is_none() || near_real_sign(t32).is_none() {
        return Err(Error::NotGaugeEquivalent(
            "inner anti-diagonal entries carry a non-removable phase".into(),
        ));
    }
    // so is the product of the outer pair
    if near_real_sign(t14 * t41).is_none() {
        return Err(Error::NotGaugeEquivalent(
            "outer anti-diagonal phases are not conjugate-inverse".into(),
        ));
    }

    // φ chosen from t14² so that ±1 entries map to themselves (Y = I then)
    let phi = if near_real_sign(t14).is_some() { 0.0 } else { 0.5 * (t14 * t14).arg() };
    let mut y = ComplexDense::zeros(2, 2);
    y.set(0, 0, Complex64::from_polar(1.0, -phi / 4.0));
    y.set(1, 1, Complex64::from_polar(1.0, phi / 4.0));
    let mut y_inv = ComplexDense::zeros(2, 2);
    y_inv.set(0, 0, Complex64::from_polar(1.0, phi / 4.0));
    y_inv.set(1, 1, Complex64::from_polar(1.0, -phi / 4.0));
    let yy = y.kron(&y);
    let yy_inv = y_inv.kron(&y_inv);
    let canonical = yy.mul(r_phased).mul(&yy_inv);
    Ok((y, canonical))
}

/// The phased anti-diagonal reference shape with outer phase `phi`:
/// entries e^{iφ} at (1,4), 1 at (2,3), −1 at (3,2), −e^{−iφ} at (4,1).
pub fn phased_antidiagonal(phi: f64) -> ComplexDense {
    let mut m = ComplexDense::zeros(4, 4);
    m.set(0, 3, Complex64::from_polar(1.0, phi));
    m.set(1, 2, Complex64::new(1.0, 0.0));
    m.set(2, 1, Complex64::new(-1.0, 0.0));
    m.set(3, 0, -Complex64::from_polar(1.0, -phi));
    m
}
