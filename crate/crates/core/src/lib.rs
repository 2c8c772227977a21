//! Signless Laplacian spectral radius of maximal planar graphs: planarity,
//! power iteration and bounds, exact eigenvalue certificates, edge-swap
//! rewiring, and exhaustive enumeration of small triangulations.

pub mod certificates;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod planarity;
pub mod rewiring;
pub mod spectral;

pub use certificates::{certify_upper, classify, verify_certificate, Certificate, Construction, Fixture};
pub use enumeration::{canonical_form, extremal_search, gen_triangulations, SearchResult};
pub use error::{Error, Result};
pub use graph::{build_h, join, neighborhood_subgraphs, DegreeProfile, Graph, Induced};
pub use planarity::{
    is_maximal_outer_planar, is_maximal_planar, is_outer_planar, is_planar, link_cycle, RotationEmbedding,
};
pub use rewiring::{apply_swap, detect_config, verify_increase, Config, SwapPlan};
pub use spectral::{bound_report, q_max, BoundReport, SpectralResult};
