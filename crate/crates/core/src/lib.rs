//! Translation quivers of type D: the cluster and m-cluster
//! Auslander-Reiten quivers, their restricted powers, the punctured-polygon
//! arc model, and mechanical checks of how they fit together.

pub mod components;
pub mod error;
pub mod families;
pub mod iso;
pub mod label;
pub mod paths;
pub mod quiver;

pub use error::{Error, Result};
pub use label::{RowLabel, VertexLabel};
pub use quiver::{validate, Provenance, TranslationQuiver, ValidationReport};
pub mod arcs;
pub mod decomposition;
pub mod export;
pub mod topology;
pub mod verify;
