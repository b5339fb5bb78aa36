//! Physical structures built on the braid families: cyclic chain
//! Hamiltonians, potentials for factorizable S-matrices via inverse Cayley
//! transforms, and the complex noncommutative coordinate algebra carried by
//! the projectors.

pub mod chain;
pub mod ncspace;
pub mod potential;

pub use chain::{derivative_at_zero, hamiltonian, ChainSpec};
pub use ncspace::{
    build_q, check_nc_operator_identities, nc_relations, Branch, CoordinateRelation,
};
pub use potential::{
    cayley_potential, closed_form_x_n1, closed_form_x_n2, minus_i_v, scaled_yb_matrix,
    v_coefficient, PotentialParams,
};
