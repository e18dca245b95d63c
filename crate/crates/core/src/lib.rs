//! Exact solver and verifier for half-monochromatic colorings of plane
//! graphs whose faces are all even cycles.
//!
//! A half-monochromatic coloring is a proper vertex coloring in which, on
//! every face, half of the boundary vertices share one color. The largest
//! number of colors such a coloring can use equals the largest number of
//! regions cut out by a dividing system of the medial graph. [`search`]
//! finds that number by exhaustive search over dividing systems, and
//! [`oracle`] cross-checks it by enumerating colorings directly.
//!
//! The independence number from [`independence`] bounds the answer through
//! `2·χ_f ≤ 3·α`, which every search result certifies.

pub mod coloring;
pub mod dividing;
pub mod error;
pub mod independence;
pub mod io;
pub mod medial;
pub mod oracle;
pub mod plane_graph;
pub mod search;
pub mod union_find;

pub use coloring::Coloring;
pub use dividing::{DividingSystem, DivisionTree, Parities, RegionDecomposition};
pub use error::{Error, Result};
pub use io::instance::{parse_instance, InstanceFile};
pub use io::layout::Scalar;
pub use medial::MedialGraph;
pub use plane_graph::{Bipartition, PlaneGraph};
pub use search::{exact_chi_f, SearchOptions, SearchResult};

/// Layout point in double precision.
pub type Point = io::layout::Point<f64>;
/// Layout point in single precision.
pub type Point32 = io::layout::Point<f32>;
