//! Concrete algebras, involutions and embeddings used throughout the crate.

pub mod classical;
pub mod dims;
pub mod involution;
pub mod octonion;
pub mod special;
pub mod triality;

pub use classical::{build_classical, Family};
pub use involution::{cartan_decomposition, Involution, SymmetricPair};
pub mod embedding;

pub use embedding::{
    build_embedding, catalog_listing, Catalog, CatalogEntry, EmbeddingSpec, LISTED_ALGEBRAS, LISTED_EMBEDDINGS,
};
pub use triality::Triality;
