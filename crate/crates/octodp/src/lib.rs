//! Exact-arithmetic toolkit for the octanomial model of cubic surfaces.
//!
//! Everything here is computed over the rationals: the surface and its
//! plane-cubic parametrization, discriminants, the triangulations of the
//! support polytope, the 27 lines with their 135 intersection points, and
//! the p-adic tree arrangements they tropicalize to.

pub mod blowdown;
pub mod discriminant;
pub mod lines;
pub mod macaulay;
pub mod matrix;
pub mod moduli;
pub mod octanomial;
pub mod poly;
pub mod polytope;
pub mod rational;
pub mod sampler;
pub mod simplex;
pub mod tropical;
pub mod valuation;
pub mod verify;

pub use rational::Rat;
pub use valuation::{ExtVal, Prime};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("inadmissible moduli: root form {0} vanishes")]
    Inadmissible(String),
    #[error("matrix error: {0}")]
    Matrix(String),
    #[error("polynomial error: {0}")]
    Poly(String),
    #[error("valuation error: {0}")]
    Valuation(String),
    #[error("resultant oracle failed: {0}")]
    Resultant(String),
    #[error("line construction failed: {0}")]
    Line(String),
    #[error("census invariant violated: {0}")]
    Census(String),
    #[error("tree construction failed: {0}")]
    Tree(String),
    #[error("sampler error: {0}")]
    Sampler(String),
    #[error("blow-down error: {0}")]
    Blowdown(String),
    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
