//! Exact arithmetic: scalars, polynomials, linear forms, localization terms,
//! truncated series and Laurent expansion.

pub mod laurent;
pub mod linalg;
pub mod linear;
pub mod poly;
pub mod scalar;
pub mod series;
pub mod term;

pub use laurent::{laurent_expand, LaurentExpansion};
pub use linear::LinearForm;
pub use poly::{exponent, Exponent, MultiPoly};
pub use scalar::{int, rat, GaussianRational, Rational};
pub use series::{SeriesVar, TruncatedSeries};
pub use term::{ExpConvention, LocalizationTerm};
