//! Free noncommutative graded algebras with Leibniz differentials.

mod coef;
mod dga;
mod field;
mod length;
mod parse;
mod poly;

pub use coef::{CoefMonomial, Coefficient};
pub use dga::{
    check_action_law, check_d_squared, check_degree_law, check_morphism, extend_leibniz, ChordGen,
    Dga, DgaMorphism, LawViolation,
};
pub use field::PrimeField;
pub use length::Length;
pub use parse::parse_poly;
pub use poly::{nc_multiply, GenId, NCPoly, Word};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not a supported prime characteristic")]
    NotPrime(u32),
    #[error("ring mismatch: characteristic {left} vs {right}")]
    RingMismatch { left: u32, right: u32 },
    #[error("undeclared generator `{0}`")]
    UndeclaredGenerator(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{0}` has non-positive length")]
    NonPositiveLength(String),
    #[error("invalid length literal `{0}`")]
    BadLength(String),
    #[error("evaluation point ({mu}, {lambda}) has a zero coordinate")]
    InvalidPoint { mu: u32, lambda: u32 },
    #[error("differential table has {got} entries for {expected} generators")]
    ArityMismatch { expected: usize, got: usize },
    #[error("cannot parse polynomial at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
