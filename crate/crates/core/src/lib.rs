//! Pfaffian ideals of ladders in a generic skew-symmetric matrix.
//!
//! The crate builds the ideal generated by pfaffians of mixed sizes inside
//! the square blocks of a ladder, computes its codimension twice (a
//! combinatorial count and a Groebner basis computation), and constructs
//! the chain of elementary biliaisons that walks any such ideal down to an
//! ideal generated by variables, checking every step by exact computation.

pub mod biliaison;
pub mod cli;
pub mod error;
pub mod ideal;
pub mod ladder;
pub mod pfaffian;
pub mod polyring;

pub use error::{Error, Result};
