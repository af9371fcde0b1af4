//! Chekanov–Eliashberg algebras of Legendrian knots, twist-spun tori built
//! from them, and computable obstructions to being a twist spun.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod diagrams;
pub mod homology;
pub mod products;
pub mod spun;
pub mod variety;
