//! Exact computations on the cohomology of Grassmannians and of the Hilbert
//! scheme of points in the projective plane.
//!
//! Everything here runs over arbitrary-precision integers and rationals:
//!
//! * [`algebra`]: partitions, polynomials, rational matrices and Schur evaluation.
//! * [`grassmann`]: torus-fixed points, Bialynicki-Birula cells and the
//!   vector-field presentations of `H^*(Gr(n-k, V))`, ordinary and equivariant.
//! * [`gotzmann`]: the weighted torus on degree-`k` forms, monomial ideals of
//!   `Hilb_k(P^2)` and their images under `I -> I ∩ R_k`.
//! * [`filtration`]: Schur evaluation matrices, filtration ranks and Betti numbers.
//! * [`equivariant`]: fixed-point (localized) representatives of `C^*`-equivariant classes.

pub mod algebra;
pub mod equivariant;
pub mod error;
pub mod filtration;
pub mod gotzmann;
pub mod grassmann;

pub use error::{Error, Result};
