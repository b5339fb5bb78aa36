//! The odd-dimensional complex unitary braid family (9×9 case).
//!
//! Six real parameters m₁₁^±, m₁₂^±, m₂₁^± and an angle θ define
//!
//!   a± = (e^{i m₁₁⁺ θ} ± e^{i m₁₁⁻ θ})/2,  b± and c± likewise,
//!
//! which satisfy a₊ā₊ + a₋ā₋ = 1 and a₊ā₋ + a₋ā₊ = 0 for real inputs. The
//! matrix pairs basis states (1,9), (2,8), (3,7), (4,6) with weights a, b,
//! a, c and fixes the central state exactly. It is unitary with
//! R̂(θ)⁻¹ = R̂(−θ) and satisfies the angle-additive braid equation for any
//! parameter choice; commensurate (rational-ratio) parameters make it
//! periodic in θ.

use num_complex::Complex64;

use crate::dense::{ComplexDense, ONE};

/// Parameters of the 9×9 family; `theta` is the evaluation angle.
#[derive(Debug, Clone, Copy)]
pub struct OddBraidParams {
    pub m11_plus: f64,
    pub m11_minus: f64,
    pub m12_plus: f64,
    pub m12_minus: f64,
    pub m21_plus: f64,
    pub m21_minus: f64,
    pub theta: f64,
}

impl OddBraidParams {
    pub fn new(m11: (f64, f64), m12: (f64, f64), m21: (f64, f64), theta: f64) -> Self {
        OddBraidParams {
            m11_plus: m11.0,
            m11_minus: m11.1,
            m12_plus: m12.0,
            m12_minus: m12.1,
            m21_plus: m21.0,
            m21_minus: m21.1,
            theta,
        }
    }

    pub fn with_theta(mut self, theta: f64) -> Self {
        self.theta = theta;
        self
    }

    fn component(&self, mp: f64, mm: f64) -> (Complex64, Complex64) {
        let ep = Complex64::from_polar(1.0, mp * self.theta);
        let em = Complex64::from_polar(1.0, mm * self.theta);
        let half = Complex64::new(0.5, 0.0);
        ((ep + em) * half, (ep - em) * half)
    }

    /// The (a₊, a₋), (b₊, b₋), (c₊, c₋) weights at this θ.
    pub fn weights(&self) -> [(Complex64, Complex64); 3] {
        [
            self.component(self.m11_plus, self.m11_minus),
            self.component(self.m12_plus, self.m12_minus),
            self.component(self.m21_plus, self.m21_minus),
        ]
    }
}

/// Build the 9×9 unitary braid matrix; the central entry (5,5) is exactly 1.
pub fn build_odd_braid(params: &OddBraidParams) -> ComplexDense {
    let [(ap, am), (bp, bm), (cp, cm)] = params.weights();
    let mut r = ComplexDense::zeros(9, 9);
    // 1-indexed placements: diagonal carries the + component, the mirrored
    // anti-diagonal position the − component.
    let entries = [
        (1, 1, ap),
        (1, 9, am),
        (2, 2, bp),
        (2, 8, bm),
        (3, 3, ap),
        (3, 7, am),
        (4, 4, cp),
        (4, 6, cm),
        (6, 4, cm),
        (6, 6, cp),
        (7, 3, am),
        (7, 7, ap),
        (8, 2, bm),
        (8, 8, bp),
        (9, 1, am),
        (9, 9, ap),
    ];
    for (i, j, v) in entries {
        r.set(i - 1, j - 1, v);
    }
    r.set(4, 4, ONE);
    r
}
