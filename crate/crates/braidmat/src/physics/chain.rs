//! Cyclic chain Hamiltonians of order r.
//!
//! H = Σ_{k=1}^{r} Ṙ̂_{k,k+1}(0) with the wraparound term on slots (r, 1),
//! where Ṙ̂(0) = ∂_θ R̂(θ)|_{θ=0} = A ⊗ B for the class pair (A, B). Since
//! A and B are real with a single ±1 per column, H is assembled digit-wise:
//! for every basis index, each term contributes one entry A e_a ⊗ B e_b at
//! the index with the two digits conjugated. H is real, antisymmetric and
//! traceless for every class.

use num_complex::Complex64;

use crate::braid::BraidClass;
use crate::dense::ComplexDense;
use crate::error::{Error, Result};
use crate::strand::class_pair;

/// Dimension guard for the dense Hamiltonian.
pub const CHAIN_DIM_GUARD: usize = 4096;

/// A cyclic chain of `sites` strands with local dimension 2n.
#[derive(Debug, Clone, Copy)]
pub struct ChainSpec {
    pub n: usize,
    /// Number of sites r ≥ 2; the boundary is cyclic.
    pub sites: usize,
}

impl ChainSpec {
    pub fn new(n: usize, sites: usize) -> Self {
        ChainSpec { n, sites }
    }

    pub fn dim(&self) -> usize {
        (2 * self.n).pow(self.sites as u32)
    }
}

/// Ṙ̂(0) = A ⊗ B for the class pair; the flip conjugate of the KJ value for JK.
pub fn derivative_at_zero(class: BraidClass, n: usize) -> ComplexDense {
    let g = crate::braid::build_generators(n);
    let (a, b) = class.pair(&g);
    a.kron(b)
}

/// Dense cyclic Hamiltonian H = Σ_k Ṙ̂_{k,k+1}(0), wraparound on (r, 1).
pub fn hamiltonian(spec: &ChainSpec, class: BraidClass) -> Result<ComplexDense> {
    if spec.sites < 2 {
        return Err(Error::Invalid("chain needs at least 2 sites".into()));
    }
    let dim = (2 * spec.n).checked_pow(spec.sites as u32).unwrap_or(usize::MAX);
    if dim > CHAIN_DIM_GUARD {
        return Err(Error::TooLarge { dim, guard: CHAIN_DIM_GUARD });
    }
    let n = spec.n;
    let d = 2 * n;
    let r = spec.sites;
    let (ga, gb) = class_pair(class);
    let mut h = ComplexDense::zeros(dim, dim);
    // ordered slot pairs (k, k+1) plus (r, 1)
    let mut pairs: Vec<(usize, usize)> = (1..r).map(|k| (k, k + 1)).collect();
    pairs.push((r, 1));
    for (p, q) in pairs {
        let pp = d.pow((r - p) as u32);
        let pq = d.pow((r - q) as u32);
        for col in 0..dim {
            let a = (col / pp) % d;
            let b = (col / pq) % d;
            let coef = ga.coef(a, n) * gb.coef(b, n);
            let row = col - a * pp - b * pq + (d - 1 - a) * pp + (d - 1 - b) * pq;
            h.add_at(row, col, Complex64::new(coef, 0.0));
        }
    }
    Ok(h)
}
