//! Unitary braid matrices in every even dimension (2n)² and the odd 9×9
//! complex family, together with the structures they generate: projectors
//! and diagonalizers, spectral-parameter (Baxterized) forms, L/T operator
//! towers and their exchange algebra, cyclic chain Hamiltonians, inverse
//! Cayley-transform potentials, noncommutative coordinate relations, link
//! invariants of braid words, and two-party entangled states.
//!
//! Conventions, fixed throughout:
//! - matrix units (ij) are 1-indexed; ī = 2n−i+1;
//! - strand spaces index base-(2n) with strand 1 as the most significant digit;
//! - complex scalars are pairs of f64; comparisons are max-abs with
//!   tolerance 1e−12 (even families) / 1e−10 (odd family) unless stated.

pub mod braid;
pub mod dense;
pub mod entangle;
pub mod error;
pub mod fusion;
pub mod gauge;
pub mod links;
pub mod odd;
pub mod physics;
pub mod strand;
pub mod verify;

pub use braid::{
    braid_hat, build_block_diagonalizer, build_block_diagonalizer_inverse, build_braid,
    build_generators, build_m, build_m_inverse, build_projectors, build_u, direct_sum_r2,
    permutation_p, BraidClass, BraidSpec, GeneratorSet,
};
pub use dense::{apply_two_site, lift_two_site, matrix_unit, swap_matrix, ComplexDense};
pub use entangle::{
    act_and_analyze, bell_generalized, odd_superpositions, SchmidtProfile, TwoPartyState,
};
pub use error::{Error, Result};
pub use fusion::{
    check_frt_constant, check_rll, check_rtt, check_rtt_diagonal, coproduct_step, fundamental,
    fundamental_l, fundamental_t, tower, tower_trace, trace_closed_form_n2, Tower, TowerKind,
};
pub use gauge::{canonicalize_phases, phased_antidiagonal};
pub use links::{braid_rep_apply, build_enhanced, invariant, BraidWord, EnhancedSystem};
pub use odd::{build_odd_braid, OddBraidParams};
pub use physics::{
    cayley_potential, check_nc_operator_identities, derivative_at_zero, hamiltonian, nc_relations,
    Branch, ChainSpec, CoordinateRelation, PotentialParams,
};
pub use strand::{apply_generator, Sign, StrandVector, StructuredBraidOp};
pub use verify::{
    check_baxterized, check_braid, check_family_braid, check_hecke, check_odd_braid,
    check_periodicity, check_quadratic, check_unitarity, ResidualReport, DEFAULT_TOL_EVEN,
    DEFAULT_TOL_ODD,
};
