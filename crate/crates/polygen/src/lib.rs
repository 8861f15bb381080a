//! Parametric polyhedron generators: prisms, antiprisms, graph products,
//! combinatorial operators on face complexes, and exact four-dimensional
//! vertex sets over Q(sqrt 5).

pub mod fourdim;
pub mod ops;
pub mod prisms;
pub mod quadratic;

pub use fourdim::{cell600, grand_antiprism, skeleton, snub24cell, VertexSet4D};
pub use prisms::{antiprism, k2, prism, product};
pub use quadratic::QuadraticNumber;
