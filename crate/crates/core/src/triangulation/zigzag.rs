use super::{PointSet, Triangulation};
use crate::error::{Error, Result};
use crate::lattice::{gcd, orient, LatticePoint};
use std::sync::Arc;

/// How many segments of the far side each near point fans over, for `n` near and `m`
/// far points. Both end points get one segment first, then the middle points one each,
/// and whatever remains goes to the last point, so `min(n, m - 1)` entries are positive.
pub fn zigzag_steps(n: usize, m: usize) -> Vec<usize> {
    let mut left = m.saturating_sub(1);
    let mut s = vec![0; n];
    if n == 0 {
        return s;
    }
    let mut take = |k: usize, left: &mut usize| {
        if *left > 0 {
            s[k] += 1;
            *left -= 1;
        }
    };
    take(0, &mut left);
    if n > 1 {
        take(n - 1, &mut left);
    }
    for k in 1..n.saturating_sub(1) {
        take(k, &mut left);
    }
    s[n - 1] += left;
    s
}

/// Checks that both sides are runs of consecutive lattice points on parallel lines at
/// lattice distance one, and returns them sorted lexicographically.
fn sides(tau: &[LatticePoint], tau_prime: &[LatticePoint]) -> Result<(Vec<LatticePoint>, Vec<LatticePoint>)> {
    let mut a = tau.to_vec();
    let mut b = tau_prime.to_vec();
    a.sort();
    b.sort();
    a.dedup();
    b.dedup();
    if a.is_empty() || b.is_empty() {
        return Err(Error::InvalidArgument("empty side".into()));
    }
    let e = if a.len() > 1 {
        a[1] - a[0]
    } else if b.len() > 1 {
        b[1] - b[0]
    } else {
        return Err(Error::Degenerate);
    };
    if gcd(e.x, e.y) != 1 {
        return Err(Error::InvalidArgument("sides are not runs of consecutive lattice points".into()));
    }
    for side in [&a, &b] {
        if side.windows(2).any(|w| w[1] - w[0] != e) {
            return Err(Error::InvalidArgument("sides are not parallel runs of consecutive lattice points".into()));
        }
    }
    let normal = LatticePoint::new(e.y, -e.x);
    if (normal.dot(b[0]) - normal.dot(a[0])).abs() != 1 {
        return Err(Error::InvalidArgument("sides are not at lattice distance one".into()));
    }
    Ok((a, b))
}

/// Triangles of the zigzag between `tau` and `tau_prime`, counterclockwise.
pub(crate) fn zigzag_triangles(tau: &[LatticePoint], tau_prime: &[LatticePoint]) -> Result<Vec<[LatticePoint; 3]>> {
    let (nu, mu) = sides(tau, tau_prime)?;
    let steps = zigzag_steps(nu.len(), mu.len());
    let ccw = |t: [LatticePoint; 3]| if orient(t[0], t[1], t[2]) < 0 { [t[0], t[2], t[1]] } else { t };
    let mut out = Vec::new();
    let mut j = 0;
    for (k, &s) in steps.iter().enumerate() {
        for _ in 0..s {
            out.push(ccw([nu[k], mu[j], mu[j + 1]]));
            j += 1;
        }
        if k + 1 < nu.len() {
            out.push(ccw([nu[k], nu[k + 1], mu[j]]));
        }
    }
    Ok(out)
}

/// Unimodular triangulation of the width-1 trapezoid `conv(tau, tau_prime)` that joins
/// the first near point to the second far point and the last near point to the
/// second-to-last far point, with `min(n, m - 1)` near points joined to two or more far
/// points.
pub fn zigzag(tau: &[LatticePoint], tau_prime: &[LatticePoint]) -> Result<Triangulation> {
    let tris = zigzag_triangles(tau, tau_prime)?;
    let ps = Arc::new(PointSet::new(tau.iter().chain(tau_prime).copied().collect())?);
    let cells = tris.iter().map(|t| t.map(|p| ps.index_of(p).unwrap())).collect();
    Triangulation::from_triangles(ps, cells)
}

/// Number of points of `tau` joined by an edge of `t` to at least two points of `tau_prime`.
pub fn doubly_connected(t: &Triangulation, tau: &[LatticePoint], tau_prime: &[LatticePoint]) -> usize {
    tau.iter()
        .filter(|&&v| tau_prime.iter().filter(|&&w| t.has_edge(v, w)).count() >= 2)
        .count()
}
