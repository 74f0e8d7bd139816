//! Exact Poincaré series for algebras of invariants and covariants of binary
//! forms.
//!
//! Every series is carried as a [`FactoredRational`]: a polynomial numerator
//! over a product of `(1 - monomial)` factors. The formula modules build
//! these closed forms. The [`oracle`] module counts dimensions directly from
//! weight multiplicities so that the closed forms can be checked against an
//! independent computation.

pub mod algebra;
pub mod bivariate;
mod degrees;
mod error;
pub mod multivariate;
pub mod omega;
pub mod oracle;
pub mod partial_fractions;
pub mod qseries;
pub mod univariate;

pub use algebra::{
    BinomialFactor, FactoredRational, Monomial, MultiPoly, Rational, TruncSeries, VarSet,
};
pub use degrees::DegreeList;
pub use error::{Error, Result};
