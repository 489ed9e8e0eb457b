//! Exact computation of BC-type interpolation polynomials at τ = 1, gl(n)
//! Casimir eigenvalues, restricted Casimir polynomials, and the expansion of
//! the former in products of the latter.
//!
//! Every scalar is an exact [`Rational`]; there is no floating point anywhere.

pub mod casimir;
pub mod cli;
pub mod error;
pub mod expansion;
pub mod okounkov;
mod parallel;
pub mod partitions;
pub mod poly;
pub mod rational;
pub mod symfunc;
pub mod verify;

pub use casimir::{
    casimir_eig_matrix, casimir_eig_sum, casimir_matrix, restricted_casimir,
    restricted_casimir_product, FoldedWeight, GLWeight,
};
pub use error::{Error, Result};
pub use expansion::{expand, top_coefficients, verify_theorem, ExpansionResult, TheoremReport};
pub use okounkov::{
    b_factor, okounkov_poly, okounkov_specialized, phi_weight, OkounkovParams, SpecializationParams,
};
pub use partitions::{
    rc_set, reverse_tableaux, semistandard_tableaux, y_lambda, Cell, Partition, ReverseTableau,
    Tableau,
};
pub use poly::MPoly;
pub use rational::Rational;
pub use symfunc::{
    powersum_poly, schur_in_powersums, schur_poly, to_even_powersum_basis, EvenPowerSumExpansion,
    PowerSumCombination,
};
