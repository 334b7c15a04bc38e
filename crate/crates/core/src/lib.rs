//! String combinatorics for gentle algebras: Hom and Ext bases, maximal
//! almost rigid modules, the subdivided algebra and its embedding functor,
//! endomorphism algebras, and a finite-field linear algebra cross-check.

pub mod bar;
pub mod endo;
pub mod fixtures;
pub mod homext;
pub mod mar;
pub mod oracle;
pub mod quiver;
pub mod random;
pub mod string_modules;
pub mod strings;

pub use bar::{bar_algebra, BarAlgebra, TiltingReport};
pub use endo::{AlgebraPresentation, EndoError};
pub use homext::{ArrowExtensionDatum, Ext1Basis, HomBasisElement, HomError, HomKind, OverlapExtensionDatum};
pub use mar::{MarCertificate, MarError, ModuleSet};
pub use quiver::{ArrowId, BoundQuiver, GentleReport, QuiverError, VertexId};
pub use random::random_gentle;
pub use strings::{BandWord, Letter, StringError, StringWord};
