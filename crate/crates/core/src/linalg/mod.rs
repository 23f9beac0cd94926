//! Exact scalars, dense matrices and canonical subspaces.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::Matrix;
pub use scalar::{int, is_prime, rat, signum, Field, Fp, Rational, Scalar, MAX_PRIME};
pub use subspace::{
    apply_map, enumerate_subspaces, gaussian_binomial, rref, subspace_count, subspace_leq, Subspace,
};
