//! Exact integer geometry of lattice polygons.

mod affine;
mod canonical;
mod invariants;
mod point;
mod polygon;
pub mod standard;
mod width;

pub use affine::{align_to_x_axis, apply_map, shear, AffineMap};
pub use canonical::{canonical_form, equivalent};
pub use invariants::{expected_gonality, is_two_upsilon, PolygonInvariants};
pub use point::{gcd, orient, pt, LatticePoint};
pub use polygon::{convex_hull, HalfPlane, LatticePolygon, Relaxation};
pub use width::{lattice_width, lattice_width_with_bound, width_in_direction, LatticeWidth};
