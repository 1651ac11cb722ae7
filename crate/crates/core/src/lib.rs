//! Exact algebra for torus manifolds and torus manifold bundles.
//!
//! Starting from a characteristic pair (facets, nerve, characteristic
//! vectors) or a smooth complete fan, this crate computes presentations,
//! integral bases and normal forms for
//!
//! * the face ring and the integral cohomology ring of the torus manifold,
//! * the K-theoretic face ring, its vertex-restriction embedding and its
//!   free module structure over the representation ring of the torus,
//! * cohomology and K-rings of torus manifold bundles over a finitely
//!   presented base ring,
//! * face-acyclic orbit spaces described by a general face poset.
//!
//! All arithmetic is over arbitrary-precision integers.

pub mod bundlerings;
pub mod charpair;
pub mod error;
pub mod exactalg;
pub mod facering;
pub mod kfacering;
pub mod present;

pub use bundlerings::{
    BaseCohomRing, BaseFile, BaseKRing, BundleCohomology, BundleKRing, BundleNormalForm, FaceAcyclicRing, RankReport,
};
pub use charpair::{CharacteristicPair, FaceId, Fan, GeneralFacePoset, ValidationReport};
pub use error::{Error, Result};
pub use exactalg::{IntMatrix, IntPoly, LaurentPoly, Vars};
pub use facering::{CohomPresentation, Cohomology, GradedBasis};
pub use kfacering::{KFaceRing, KPresentation, KVariant, RestrictionTuple};
pub use present::Presentation;
