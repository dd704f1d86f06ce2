//! Indecomposable integers: closed-form catalogs, the exhaustive oracle, codifferent
//! certificates, parallelepiped candidates and minimal norms.

pub mod catalog;
pub mod certify;
pub mod minnorm;
pub mod oracle;
pub mod parallelepiped;

pub use catalog::{catalog, CatalogEntry, CatalogLabel, IndecomposableCatalog};
pub use certify::{certify_by_codifferent, Certificate};
pub use minnorm::{box_min_norm, is_rational_associate, min_nonassociated_norm};
pub use oracle::{
    enumerate_box, harvest_indecomposables, is_decomposable, is_indecomposable, Decomposition, DecompositionWitness,
};
pub use parallelepiped::{parallelepiped_candidates, Parallelepipeds};
