//! Exact computation of arithmetic and geometric motivic Poincaré series of
//! affine toric varieties at their distinguished point.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact: lattice
//! computations use big integers and series coefficients are big rationals.
//!
//! The pipeline, bottom up:
//!
//! * [`intlat`]: Hermite/Smith normal forms, ranks and lattice indices.
//! * [`polycone`]: cones, fans, Newton polyhedra and piecewise linear functions.
//! * [`toricsg`]: validated semigroups and their ideals `C_j`, `J_l`.
//! * [`strata`]: the strata `(j, θ)` with their indices and candidate poles.
//! * [`motser`]: class enumeration, rational reconstruction and series assembly.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod error;
pub mod intlat;
pub mod motser;
pub mod polycone;
pub mod strata;
pub mod toricsg;

pub use error::{Error, Result, SemigroupError};
pub use intlat::{IntMatrix, LatticeVector};
pub use motser::{MotivicRational, Poly, SeriesConfig, SeriesExpansion};
pub use polycone::{Cone, Fan, NewtonPolyhedron, PlFunction};
pub use strata::Stratum;
pub use toricsg::{IdealFamily, SemigroupData};




