//! Exact Hom-dimension calculus for the bounded derived category of a Dynkin
//! quiver and its negative cluster categories `D^b(kQ) / Σ^w 𝕊`.
//!
//! Everything is computed on dimension vectors with exact integers: there is no
//! floating point and no explicit representation of modules. On top of the
//! Hom calculus the crate enumerates simple-minded collections, `w`-simple-minded
//! systems and (positive) `w`-noncrossing partitions, and checks the bijections
//! between them by exhaustive search.
//!
//! Module map:
//!
//! - [`quiver`]: parsing, Dynkin classification, Euler/Coxeter matrices, roots.
//! - [`hom`]: Hom and Ext dimensions, AR translate and Serre functor on `D^b(kQ)`.
//! - [`orbit`]: fundamental domain and orbit Hom spaces of `C_{-w}`.
//! - [`weyl`]: Weyl group, absolute length, noncrossing partitions.
//! - [`collections`]: orthogonality predicates and subset enumeration.
//! - [`perp`]: perpendicular categories, wide closures, reduction counts.
//! - [`maps`]: the maps π, Θ and φ and the verification drivers.
//! - [`kronecker`]: closed-form Hom rules for the Kronecker quiver.

pub mod collections;
pub mod error;
pub mod hom;
pub mod kronecker;
pub mod maps;
pub mod matrix;
pub mod orbit;
pub mod perp;
pub mod quiver;
pub mod report;
pub mod weyl;

mod bitset;

pub use error::{Error, Result};
pub use hom::{DerivedObject, HomEngine, RootId};
pub use matrix::IntMatrix;
pub use orbit::{OrbitCategory, OrbitObject};
pub use quiver::{DimVector, Quiver};
pub use report::VerificationReport;
pub use weyl::{NcTuple, Reflection, WeylElement, WeylGroup};
