//! Base sizes of finite permutation group actions.
//!
//! Exact machinery (stabilizer chains, subgroup backtracking, double cosets,
//! witness search) for groups given by permutations, and exact rational
//! fixed point ratio bounds for groups known only through class data.

pub mod backtrack;
pub mod base;
pub mod chain;
pub mod classes;
pub mod formats;
pub mod cosets;
pub mod double_coset;
pub mod error;
pub mod group;
pub mod perm;
pub mod random;
pub mod subgroups;

pub use error::{Error, Result};
pub use group::Group;
pub use perm::Perm;
pub use random::RandomSource;

/// Exact integers for class data.
pub type Int = num_bigint::BigInt;
/// Exact rationals for fixed point ratio bounds.
pub type Rational = num_rational::BigRational;
