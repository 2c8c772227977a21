//! Small triangulations: canonical labeling, isomorph-free generation,
//! `planar_code` input and output, and the exhaustive extremal search.

pub mod canon;
pub mod generate;
pub mod planar_code;
pub mod search;

pub use canon::{are_isomorphic, canonical_form, canonical_labeling, CanonicalCode};
pub use generate::{gen_maximal_outerplanar, gen_triangulations};
pub use planar_code::{read_planar_code, write_planar_code};
pub use search::{extremal_search, SearchResult, Source};
