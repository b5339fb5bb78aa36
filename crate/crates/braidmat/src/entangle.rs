//! Two-party states produced by the braid matrices and their Schmidt data.
//!
//! Acting with R̂(z) on a product basis state |c⟩⊗|c′⟩ gives the two-term
//! superposition (|c⟩|c′⟩ + z(−1)^{c′}|c̄⟩|c̄′⟩)/√(1+z²): a generalized Bell
//! state with Schmidt coefficients (1, |z|)/√(1+z²) for z ≠ 0, maximal at
//! z = ±1. Spin labels map to indices by |n−j⟩ ↦ j+1 and |−n+j⟩ ↦ 2n−j
//! (1-indexed). The odd 9×9 family rotates the nine 3-level product states
//! into complex superpositions, fixing the central |00⟩ exactly.

use num_complex::Complex64;

use crate::dense::{ComplexDense, ZERO};
use crate::error::{Error, Result};
use crate::odd::{build_odd_braid, OddBraidParams};

/// A pure state of two parties with equal local dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoPartyState {
    local_dim: usize,
    amplitudes: Vec<Complex64>,
}

impl TwoPartyState {
    /// Normalizes on construction; the all-zero vector is rejected.
    pub fn new(local_dim: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != local_dim * local_dim {
            return Err(Error::Shape(format!(
                "expected {}² amplitudes, got {}",
                local_dim,
                amplitudes.len()
            )));
        }
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-300 {
            return Err(Error::Invalid("cannot normalize the zero vector".into()));
        }
        let s = Complex64::new(1.0 / norm, 0.0);
        Ok(TwoPartyState { local_dim, amplitudes: amplitudes.into_iter().map(|a| a * s).collect() })
    }

    pub fn local_dim(&self) -> usize {
        self.local_dim
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Amplitude on |c⟩⊗|c′⟩, 1-indexed.
    pub fn amplitude(&self, c: usize, cprime: usize) -> Complex64 {
        self.amplitudes[(c - 1) * self.local_dim + (cprime - 1)]
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn inner(&self, other: &TwoPartyState) -> Complex64 {
        self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn max_abs_diff(&self, other: &TwoPartyState) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Schmidt data of a bipartite pure state.
#[derive(Debug, Clone)]
pub struct SchmidtProfile {
    pub coefficients: Vec<f64>,
    pub rank: usize,
    pub entropy_bits: f64,
}

impl SchmidtProfile {
    /// Singular values of the local_dim × local_dim amplitude matrix.
    pub fn from_state(state: &TwoPartyState) -> Self {
        let d = state.local_dim;
        let m = ComplexDense::from_fn(d, d, |r, c| state.amplitudes[r * d + c]);
        let coefficients = m.singular_values();
        let rank = coefficients.iter().filter(|s| **s > 1e-12).count();
        let entropy_bits = -coefficients
            .iter()
            .map(|s| s * s)
            .filter(|p| *p > 0.0)
            .map(|p| p * p.log2())
            .sum::<f64>();
        SchmidtProfile { coefficients, rank, entropy_bits }
    }
}

/// Spin label |n−j⟩ as a 1-indexed coordinate, 0 ≤ j ≤ n−1.
fn upper_index(j: usize) -> usize {
    j + 1
}

/// Spin label |−n+j⟩ as a 1-indexed coordinate.
fn lower_index(n: usize, j: usize) -> usize {
    2 * n - j
}

/// The generalized Bell state (|n−j⟩|n−k⟩ ± z|−n+j⟩|−n+k⟩)/√(1+z²).
pub fn bell_generalized(n: usize, z: f64, j: usize, k: usize, plus: bool) -> Result<TwoPartyState> {
    if j >= n || k >= n {
        return Err(Error::Label(format!("spin labels j={j}, k={k} must lie in 0..{n}")));
    }
    let d = 2 * n;
    let mut amps = vec![ZERO; d * d];
    let norm = 1.0 / (1.0 + z * z).sqrt();
    let sign = if plus { 1.0 } else { -1.0 };
    amps[(upper_index(j) - 1) * d + (upper_index(k) - 1)] = Complex64::new(norm, 0.0);
    amps[(lower_index(n, j) - 1) * d + (lower_index(n, k) - 1)] =
        Complex64::new(sign * z * norm, 0.0);
    TwoPartyState::new(d, amps)
}

/// The sign (−1)^{c′} the generator convention puts on the flipped ket when
/// R̂(z) acts on |c⟩⊗|c′⟩; `bell_generalized` reports the clean ± form.
pub fn action_sign(cprime: usize) -> f64 {
    if cprime.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Apply R̂(z) (class KJ) to the product basis state |c⟩⊗|c′⟩ (1-indexed)
/// and report the Schmidt profile of the result.
pub fn act_and_analyze(
    n: usize,
    z: f64,
    c: usize,
    cprime: usize,
) -> Result<(TwoPartyState, SchmidtProfile)> {
    let d = 2 * n;
    if !(1..=d).contains(&c) || !(1..=d).contains(&cprime) {
        return Err(Error::Label(format!("basis labels must lie in 1..={d}")));
    }
    let norm = 1.0 / (1.0 + z * z).sqrt();
    let mut amps = vec![ZERO; d * d];
    amps[(c - 1) * d + (cprime - 1)] = Complex64::new(norm, 0.0);
    let (cb, cpb) = (d - c + 1, d - cprime + 1);
    amps[(cb - 1) * d + (cpb - 1)] += Complex64::new(z * action_sign(cprime) * norm, 0.0);
    let state = TwoPartyState::new(d, amps)?;
    let profile = SchmidtProfile::from_state(&state);
    Ok((state, profile))
}

/// Apply the odd 9×9 matrix at the params' θ to each of the nine 3-level
/// product states, in basis order |++⟩, |+0⟩, …, |−−⟩. The central |00⟩ is
/// returned unchanged exactly.
pub fn odd_superpositions(params: &OddBraidParams) -> Vec<TwoPartyState> {
    let r = build_odd_braid(params);
    (0..9)
        .map(|col| {
            let amps = (0..9).map(|row| r.at(row, col)).collect();
            TwoPartyState::new(3, amps).expect("columns of a unitary are unit vectors")
        })
        .collect()
}
