//! Finite graphs with optional face data, exact integer metrics, duality and
//! isomorphism for the polyhedra and patch graphs used throughout the workspace.

pub mod dual;
pub mod graph;
pub mod iso;
pub mod metric;
pub mod rat;

pub use dual::dual_polyhedron;
pub use graph::{GraphError, PolyhedralGraph};
pub use iso::{isomorphic, isomorphic_with_cap, IsoError};
pub use metric::{all_pairs_distances, diameter, is_bipartite, rooted_ball, DistanceMatrix};
pub use rat::Rat;
