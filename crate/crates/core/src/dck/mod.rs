//! The De Concini-Kac filtration on `U_q(gl_N)`: total degrees, leading
//! terms, the associated graded algebra, and the leading-term analysis of the
//! Gelfand-Tsetlin generators.

mod degree;
mod gr;
mod marker;
mod maxcomm;
mod oracle;

pub use degree::{leading_part, leading_term, total_degree, DegreeVector};
pub use gr::{gr_multiply, GrMonomial};
pub use marker::{
    count_marker, decode_gamma_exponents, gamma_monomial, marker_in_monomial, triangular_k_part,
    GammaExponents,
};
pub use maxcomm::{maxcomm_certificate, MaxcommBlock, MaxcommCertificate};
pub use oracle::{
    brute_force_leading_perm, brute_force_leading_term, height_check, perm_stats,
    term_leading_monomial, theorem_term, verify_lt_theorem, word_degree, HeightRecord, LtPair,
    LtReport, PermRecord,
};

pub use crate::gtsub::term_admissible;

use crate::gtsub::GtError;
use crate::uq::UqError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DckError {
    #[error("the zero element has no leading term")]
    Zero,
    #[error("leading term is not unique: {first} and {second} share the top degree")]
    Tie { first: String, second: String },
    #[error("{count} terms of d_{r}{s} share the maximal degree")]
    OracleTie { r: usize, s: usize, count: usize },
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error(transparent)]
    Uq(#[from] UqError),
    #[error(transparent)]
    Gt(#[from] GtError),
}

#[cfg(test)]
mod tests;
