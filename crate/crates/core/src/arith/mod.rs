//! Exact arithmetic over ℚ[a, a⁻¹] and ℚ(a), and dense linear algebra over
//! any exact field.

mod laurent;
mod matrix;
mod poly;
mod ratfunc;

pub use laurent::{quantum_int, LaurentPoly};
pub use matrix::{nullspace, rref, solve_linear, Matrix, QMatrix, RatMatrix, Scalar};
pub use ratfunc::RationalFunction;

use laurent::{fmt_rational, parse_rational};

pub use num_rational::BigRational;

/// Substitute `a := x` into `f`.
pub fn evaluate(f: &RationalFunction, x: &BigRational) -> crate::Result<BigRational> {
    f.eval(x)
}

/// Parses `"p"` or `"p/q"` into an exact rational.
pub fn parse_point(s: &str) -> crate::Result<BigRational> {
    parse_rational(s)
}

/// `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(x: &BigRational) -> String {
    fmt_rational(x)
}
