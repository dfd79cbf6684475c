//! Exact invariants, GIT stability and orbit computations for noncommutative
//! quadrics, conifold potentials, elliptic quadruples and framed quiver
//! representations over finite fields.

pub mod acceptance;
pub mod arith;
pub mod cli;
pub mod dt;
pub mod elliptic;
pub mod error;
pub mod json;
pub mod potential_moduli;
pub mod quintuple;
pub mod quiver;
pub mod weighted;

pub use error::{Error, Result};
