//! Exact sparse multivariate polynomials and truncated power series.

mod mpoly;
mod series;

pub use mpoly::{binomial, pq_analog, q_analog, Expo, MPoly, TermJson, Var};
pub use series::{geometric, TruncatedSeries};
