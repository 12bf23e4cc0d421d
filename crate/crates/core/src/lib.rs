//! Lattice polygons, the tropical curves they support, and the dimension and
//! gonality bounds that tie the two together.

pub mod enumeration;
pub mod error;
pub mod graph;
pub mod lattice;
pub mod moduli;
pub mod rational;
pub mod triangulation;

pub use error::{Error, Result};
pub use lattice::{AffineMap, LatticePoint, LatticePolygon, PolygonInvariants};
pub use rational::Rational;
