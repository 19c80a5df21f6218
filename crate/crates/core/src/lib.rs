//! Exact dimension formulas for Siegel paramodular cusp forms of prime level
//! split by the Atkin-Lehner sign, and for algebraic modular forms on the
//! compact quaternion hermitian group of the non-principal genus.

pub mod arith;
pub mod characters;
pub mod compact;
pub mod corpus;
pub mod elliptic;
pub mod error;
pub mod exactmath;
pub mod paramodular;
pub mod quaternion;
pub mod siegel1;

pub use error::{Error, Result};
