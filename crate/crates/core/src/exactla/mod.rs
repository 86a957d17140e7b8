//! Exact linear algebra over a large prime field, standing in for generic
//! real parameters.

pub mod field;
pub mod matrix;
pub mod theta;
pub mod trial;

pub use field::{is_prime, FieldError, PrimeField, DEFAULT_PRIME};
pub use matrix::{greedy_independent_rows, left_kernel, rank, vec_mat, EchelonBasis, GenericMatrix};
pub use theta::{sample_theta, Theta};
pub use trial::{run_trials, TrialError, TrialMeta, TrialPolicy};
