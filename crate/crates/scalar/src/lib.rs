//! Exact scalar rings: integers, prime fields, cyclotomic integers, sparse
//! multivariate Laurent polynomials over those, and their fraction fields.

mod cyclotomic;
pub mod gcd;
mod integer;
mod laurent;
mod monomial;
pub mod parse;
pub mod quantum;
mod ratfunc;
mod specialize;
pub mod ring;
mod unipoly;
mod zp;

use thiserror::Error;

pub use cyclotomic::{cyclotomic_coefficients, Cyclotomic};
pub use integer::Integer;
pub use laurent::{Laurent, Term};
pub use monomial::{var_index, var_name, Monomial};
pub use parse::{parse_laurent, parse_ratfunc, ParseError};
pub use ratfunc::RationalFunction;
pub use ring::{Coefficient, Domain, Field, FracCoefficient, FractionField, GcdCoefficient, Ring};
pub use unipoly::{cyclotomic, UniPoly};
pub use zp::Zp;

/// Rational numbers and rational functions over `Q`.
pub type Rat = RationalFunction<Integer>;
/// `Z[x, x^-1, ...]`.
pub type ZLaurent = Laurent<Integer>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("evaluation at a pole: {0}")]
    EvaluationAtPole(String),
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("coefficient {0} has no image in the target ring")]
    NotRepresentable(String),
}
