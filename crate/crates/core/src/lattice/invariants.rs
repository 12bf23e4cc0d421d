use super::canonical::canonical_form;
use super::point::LatticePoint;
use super::polygon::LatticePolygon;
use super::standard::two_upsilon;
use super::width::lattice_width;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonInvariants {
    pub genus: usize,
    pub boundary_points: usize,
    pub area_doubled: i64,
    pub lattice_width: i64,
    pub width_direction: LatticePoint,
    pub column_count: usize,
    pub expected_gonality: i64,
    pub hyperelliptic: bool,
    pub maximal: bool,
}

pub fn is_two_upsilon(p: &LatticePolygon) -> bool {
    p.area_doubled() == 12
        && p.boundary_points() == 6
        && p.genus() == 4
        && canonical_form(p) == canonical_form(&two_upsilon())
}

/// Width of the interior polygon plus two, with the conventions for small interiors:
/// no interior points gives 1, collinear interior points give 2, and `2Υ` gives 3.
pub fn expected_gonality(p: &LatticePolygon) -> i64 {
    match p.interior_polygon() {
        None => 1,
        Some(q) if q.dimension() < 2 => 2,
        Some(q) => {
            if is_two_upsilon(p) {
                3
            } else {
                lattice_width(&q).width + 2
            }
        }
    }
}

impl PolygonInvariants {
    pub fn of(p: &LatticePolygon) -> Self {
        let w = lattice_width(p);
        PolygonInvariants {
            genus: p.genus(),
            boundary_points: p.boundary_points(),
            area_doubled: p.area_doubled(),
            lattice_width: w.width,
            width_direction: w.direction,
            column_count: p.column_count(),
            expected_gonality: expected_gonality(p),
            hyperelliptic: p.is_hyperelliptic(),
            maximal: p.is_maximal(),
        }
    }
}
