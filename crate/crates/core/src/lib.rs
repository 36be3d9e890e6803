//! Exact spectral algebra for discrete periodic Schrödinger operators
//! `Δ + V` on `Z` and `Z²`.
//!
//! The crate computes characteristic Laurent polynomials
//! `P_V(z, λ) = det(D_V(z) - λ I)`, decides Floquet and Fermi
//! isospectrality by exact polynomial identity, extracts the Laurent
//! expansions of one-dimensional eigenvalue branches, and checks
//! separable-potential rigidity and Fermi-variety reducibility on concrete
//! instances.
//!
//! It is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod branches;
pub mod charpoly;
pub mod det;
pub mod eigen;
pub mod error;
pub mod floquet;
pub mod irreducibility;
pub mod isospectral;
pub mod laurent;
pub mod oracle;
pub mod potential;
pub mod scalar;

pub use charpoly::{compute_charpoly, free_charpoly, CharPoly};
pub use error::{Error, ErrorClass, Result};
pub use floquet::{build_floquet, FloquetMatrix};
pub use laurent::{laurent_eq, Exponent, LambdaPoly, LaurentPoly};
pub use potential::{make_separable, Potential, SeparablePotential};
pub use scalar::{GaussRational, Scalar};
