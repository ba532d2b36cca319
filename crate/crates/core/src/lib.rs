//! Finite groups, finite-dimensional algebras, Hecke algebras, explicit
//! deformations, separability idempotents and block decompositions.

pub mod algebra;
pub mod blocks;
pub mod deform;
pub mod error;
pub mod group;
pub mod hecke;
pub mod linalg;
pub mod separability;
pub mod suite;

pub use error::{CoreError, Result};
