//! Exact coefficient arithmetic: rational functions in `q`, Laurent polynomials
//! in several variables over them, and fractions of those.

mod laurent;
pub mod linalg;
pub mod parse;
mod poly;
mod qscalar;
mod ratfun;

pub use laurent::LaurentPoly;
pub use qscalar::QScalar;
pub use ratfun::RatFun;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("operands live over different variable sets ({left} vs {right} variables)")]
    VariableMismatch { left: usize, right: usize },
}
