use super::affine::align_to_x_axis;
use super::point::{gcd, LatticePoint};
use super::polygon::{convex_hull, LatticePolygon};

fn normalized_from_edge(verts: &[LatticePoint], i: usize) -> Vec<LatticePoint> {
    let n = verts.len();
    let (a, b) = (verts[i], verts[(i + 1) % n]);
    let e = b - a;
    let g = gcd(e.x, e.y);
    let m = align_to_x_axis(LatticePoint::new(e.x / g, e.y / g));
    let mut img: Vec<LatticePoint> = verts
        .iter()
        .map(|&v| {
            let d = v - a;
            LatticePoint::new(m[0][0] * d.x + m[0][1] * d.y, m[1][0] * d.x + m[1][1] * d.y)
        })
        .collect();
    let top = img.iter().map(|p| p.y).max().unwrap();
    let left = img.iter().filter(|p| p.y == top).map(|p| p.x).min().unwrap();
    let k = -left.div_euclid(top);
    for p in &mut img {
        p.x += k * p.y;
    }
    img.sort();
    img
}

/// A fixed representative of the unimodular affine equivalence class.
///
/// Every directed edge of the polygon and of its mirror image is sent to the
/// positive x-axis with the polygon above it, the remaining shear freedom is
/// fixed by putting the topmost-leftmost vertex at x in `[0, height)`, and the
/// lexicographically least sorted vertex list wins.
pub fn canonical_form(p: &LatticePolygon) -> LatticePolygon {
    match p.dimension() {
        0 => return LatticePolygon::from_coords(&[(0, 0)]).unwrap(),
        1 => {
            let e = p.vertices()[1] - p.vertices()[0];
            return LatticePolygon::from_coords(&[(0, 0), (gcd(e.x, e.y), 0)]).unwrap();
        }
        _ => {}
    }
    let mirrored: Vec<LatticePoint> =
        p.vertices().iter().map(|v| LatticePoint::new(-v.x, v.y)).collect();
    let mirrored = convex_hull(&mirrored).unwrap();
    let mut best: Option<Vec<LatticePoint>> = None;
    for poly in [p, &mirrored] {
        let verts = poly.vertices();
        for i in 0..verts.len() {
            let cand = normalized_from_edge(verts, i);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    convex_hull(&best.unwrap()).unwrap()
}

pub fn equivalent(p: &LatticePolygon, q: &LatticePolygon) -> bool {
    canonical_form(p) == canonical_form(q)
}
