//! Exact arithmetic kernel: rationals, Laurent polynomials, rational
//! functions with factored binomial denominators, and truncated series.

mod factored;
mod monomial;
mod poly;
mod series;
mod vars;

pub use factored::{align, rf_arith, BinomialFactor, FactoredRational, RfOp};
pub use monomial::Monomial;
pub use poly::{poly_arith, MultiPoly, PolyOp};
pub use series::TruncSeries;
pub use vars::VarSet;

/// Arbitrary-precision exact rational.
pub type Rational = num_rational::BigRational;

/// Integer as a [`Rational`].
pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
