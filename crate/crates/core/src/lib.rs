//! Generalized Cartan matrices: finite/affine/indefinite classification,
//! symmetrization, Weyl-group orbits of simple roots, and an enumeration of
//! the hyperbolic Dynkin diagrams.
//!
//! Vertices are 0-based throughout the API; every human-facing rendering
//! (error messages, text output, the catalog format) is 1-based.

pub mod catalog;
pub mod classify;
pub mod det;
pub mod extend;
pub mod gcm;
pub mod standard;
pub mod symmetrize;
pub mod weyl;

pub use classify::{classify, classify_indecomposable, is_hyperbolic, CartanType, Kind};
pub use gcm::{CartanMatrix, DynkinDiagram, EdgeLabel, GcmError, RenderClass, VertexSet};
pub use symmetrize::{symmetrizer, Symmetrization, UnbalancedCycle};
pub use weyl::{OrbitPartition, RootVector};
