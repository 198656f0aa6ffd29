//! The quantized enveloping algebra `U_q(gl_N)`.
//!
//! Elements are kept in PBW normal form. Products are computed by straightening
//! over the triangular generators `t_ij`, `t̄_ij`, whose quadratic exchange
//! rules are derived once per rank from the RTT relations; the Chevalley
//! generators and root vectors are fixed scalar multiples of triangular
//! monomials, so both presentations share one basis.

mod element;
mod engine;
mod generator;
pub(crate) mod mono;
pub mod roots;
pub(crate) mod rules;
mod soundness;

pub use element::AlgebraElement;
pub use generator::{
    enumerate_basis, normal_form, translate, Direction, Generator, PbwMonomial, Translation,
};
pub use roots::{RootIndex, Roots};
pub use soundness::{engine_soundness, monomial_word, random_word, word_alphabet, SoundnessReport};

use crate::scalar::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UqError {
    #[error("rank N must be at least 1 (got {0})")]
    InvalidRank(usize),
    #[error("invalid generator {0}")]
    InvalidGenerator(String),
    #[error("monomial shape does not match N={0}")]
    InvalidMonomial(usize),
    #[error("elements of U_q(gl_{left}) and U_q(gl_{right}) cannot be combined")]
    RankMismatch { left: usize, right: usize },
    #[error("element is not invertible")]
    NotInvertible,
    #[error(transparent)]
    Parse(#[from] ScalarError),
}

#[cfg(test)]
mod tests;
