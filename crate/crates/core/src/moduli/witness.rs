use super::truncation::{truncated_rectangle, Corner};
use crate::error::{Error, Result};
use crate::lattice::{expected_gonality, LatticePolygon};

fn checked(p: LatticePolygon, genus: i64, egon: i64) -> Result<LatticePolygon> {
    if p.genus() as i64 != genus || expected_gonality(&p) != egon {
        return Err(Error::Internal(format!("witness {p} has the wrong genus or expected gonality")));
    }
    Ok(p)
}

/// The `((g-1)/3 + 2) x 4` rectangle with `2Σ` removed at the NE and SW corners.
pub fn witness_d4(g: i64) -> Result<LatticePolygon> {
    if g < 7 || g % 3 != 1 {
        return Err(Error::InvalidArgument(format!("genus {g} must be at least 7 and 1 mod 3")));
    }
    let w = (g - 1) / 3 + 2;
    checked(truncated_rectangle(w, 4, &[(Corner::NE, 2), (Corner::SW, 2)]), g, 4)
}

/// A rectangle of height 5 with corner cuts chosen by `g mod 4`.
pub fn witness_d5(g: i64) -> Result<LatticePolygon> {
    if g < 12 {
        return Err(Error::InvalidArgument(format!("genus {g} must be at least 12")));
    }
    let (w, cuts): (i64, &[(Corner, i64)]) = match g % 4 {
        0 => ((g + 4) / 4 + 1, &[(Corner::NE, 3), (Corner::SW, 2)]),
        1 => ((g + 3) / 4 + 1, &[(Corner::NE, 3)]),
        2 => ((g + 2) / 4 + 1, &[(Corner::NE, 2), (Corner::SW, 2)]),
        _ => ((g + 1) / 4 + 1, &[(Corner::NE, 2)]),
    };
    checked(truncated_rectangle(w, 5, cuts), g, 5)
}
