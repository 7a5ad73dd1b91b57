//! Exact computation with the quasiinvariant polynomials of the symmetric
//! group attached to hook-shaped tableaux.
//!
//! Everything is computed over exact rationals: the integral polynomials
//! attached to a hook tableau, the determinantal basis of each hook isotypic
//! component, Hilbert series of the graded quotients, and the action of the
//! generalized Calogero-Moser operator. The crate is organized as:
//!
//! - [`combinatorics`]: partitions, hook shapes and tableaux, permutations,
//!   and the strict-partition families indexing the basis;
//! - [`polyring`]: sparse multivariate polynomials over the rationals;
//! - [`groupring`]: the rational group ring of a symmetric group and the
//!   tableau symmetrizers acting on polynomials;
//! - [`quasi`]: the integral and determinantal polynomials, quasiinvariance
//!   and component-membership predicates, and rank verification modulo the
//!   symmetric ideal;
//! - [`hilbert`]: graded dimension bookkeeping for the components;
//! - [`calogero`]: the operator `L_m` and its closed-form action on the
//!   determinantal family.

pub mod calogero;
pub mod combinatorics;
mod error;
pub mod groupring;
pub mod hilbert;
pub mod polyring;
pub mod quasi;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
