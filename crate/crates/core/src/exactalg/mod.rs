//! Exact arithmetic kernel: integer matrices and (Laurent) polynomials.

mod fraction;
mod matrix;
mod parse;
mod poly;
mod serde_impls;

pub use fraction::solve_over_fraction_field;
pub use matrix::{snf, solve_integer, IntMatrix, SnfResult};
pub use parse::{parse_int_poly, parse_laurent};
pub use poly::{Exponent, IntPoly, LaurentPoly, Latex, Vars};
pub use serde_impls::bigint_vec;

pub(crate) use poly::{latex_name, weighted_degree};
