pub mod canon;
pub mod corpus;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod link;
pub mod minors;
pub mod named;
pub mod par;
pub mod transforms;

pub use canon::{canonical_form, is_isomorphic, CanonicalCode};
pub use error::{Error, Result};
pub use graph::{edge, Edge, Graph};
