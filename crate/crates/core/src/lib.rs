//! Critical ideals of simple graphs over the integer polynomial ring.
//!
//! The crate computes the determinantal ideals of the generalized Laplacian
//! `L(G, X)` (diagonal `x_u`, `-1` on edges), decides whether they are the
//! unit ideal, and derives the algebraic co-rank, critical groups, blow-ups
//! and the forbidden-subgraph families built on them.

pub mod critical;
pub mod error;
pub mod families;
pub mod graphs;
pub mod groebner;
pub mod poly;
pub mod search;
pub mod zlinalg;

pub use error::{Error, Result};
