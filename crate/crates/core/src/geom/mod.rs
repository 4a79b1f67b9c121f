//! Covering radius, separation, mesh ratio and ordered hole packings.
//!
//! Exact on S^1 (sorted angular gaps) and on S^2 (convex hull facets); any
//! other input goes through a grid estimator whose resolution is reported.

mod grid;
mod hull;

pub(crate) use hull::hull_triangles;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::{cross, dot, geodesic, normalize, Real};
use crate::PointSet;

/// Resolution used when the exact S^2 path is unavailable.
pub const FALLBACK_RESOLUTION: f64 = 2e-3;
/// Tolerance for checking that a cap contains no input point.
pub const EMPTY_CAP_TOL: f64 = 1e-9;
/// Extra slack required between two packed caps.
pub const DISJOINT_SLACK: f64 = 1e-12;

/// An open spherical cap containing no point of a configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct Hole<T> {
    pub center: Vec<T>,
    pub radius: T,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Method {
    /// One point: the hole is everything but the point itself.
    SinglePoint,
    ExactCircle,
    HullFacets,
    Grid { resolution: f64 },
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::SinglePoint => f.write_str("single_point"),
            Method::ExactCircle => f.write_str("exact_circle"),
            Method::HullFacets => f.write_str("hull_facets"),
            Method::Grid { resolution } => write!(f, "grid({resolution})"),
        }
    }
}

/// Covering radius with a witnessing hole.
#[derive(Debug, Clone, PartialEq)]
pub struct Covering<T> {
    pub radius: T,
    pub hole: Hole<T>,
    pub method: Method,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QualityReport<T> {
    pub covering: T,
    pub separation: T,
    pub mesh_ratio: T,
    pub method: Method,
    pub hole: Hole<T>,
}

/// Largest empty cap. Exact for d = 1 and for full-dimensional hulls on
/// S^2, grid based otherwise.
pub fn covering_radius<T: Real>(ps: &PointSet<T>) -> Result<Covering<T>> {
    if ps.len() == 1 {
        let center: Vec<T> = ps.point(0).iter().map(|&v| -v).collect();
        let hole = Hole { center, radius: T::PI() };
        return Ok(Covering { radius: T::PI(), hole, method: Method::SinglePoint });
    }
    if let Some(holes) = exact_holes(ps)? {
        let (hole, method) = holes;
        let best = hole
            .into_iter()
            .reduce(|a, b| if b.radius > a.radius { b } else { a })
            .ok_or(Error::EmptySet)?;
        return Ok(Covering { radius: best.radius, hole: best, method });
    }
    let (radius, center) = grid::estimate(ps, FALLBACK_RESOLUTION);
    Ok(Covering {
        radius,
        hole: Hole { center, radius },
        method: Method::Grid { resolution: FALLBACK_RESOLUTION },
    })
}

/// All maximal empty caps found by the exact method, or `None` when only
/// the grid estimator applies.
fn exact_holes<T: Real>(ps: &PointSet<T>) -> Result<Option<(Vec<Hole<T>>, Method)>> {
    match ps.dim() {
        1 => Ok(Some((circle_gaps(ps), Method::ExactCircle))),
        2 => Ok(facet_holes(ps).map(|h| (h, Method::HullFacets))),
        _ => Ok(None),
    }
}

fn circle_gaps<T: Real>(ps: &PointSet<T>) -> Vec<Hole<T>> {
    let two_pi = T::TAU();
    let mut ang: Vec<T> = ps
        .iter()
        .map(|p| {
            let a = p[1].atan2(p[0]);
            if a < T::zero() { a + two_pi } else { a }
        })
        .collect();
    ang.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    let n = ang.len();
    (0..n)
        .map(|i| {
            let a = ang[i];
            let b = if i + 1 < n { ang[i + 1] } else { ang[0] + two_pi };
            let half = (b - a) / T::lit(2.0);
            let mid = a + half;
            Hole { center: vec![mid.cos(), mid.sin()], radius: half }
        })
        .collect()
}

fn facet_holes<T: Real>(ps: &PointSet<T>) -> Option<Vec<Hole<T>>> {
    let pts: Vec<[f64; 3]> = ps
        .iter()
        .map(|p| [p[0].as_f64(), p[1].as_f64(), p[2].as_f64()])
        .collect();
    let tris = hull::hull_triangles(&pts)?;
    let holes: Vec<Hole<T>> = tris
        .iter()
        .map(|t| {
            let (a, b, c) = (ps.point(t[0]), ps.point(t[1]), ps.point(t[2]));
            let ba: Vec<T> = b.iter().zip(a).map(|(&x, &y)| x - y).collect();
            let ca: Vec<T> = c.iter().zip(a).map(|(&x, &y)| x - y).collect();
            let mut n = cross(&ba, &ca).to_vec();
            normalize(&mut n);
            let radius = [a, b, c]
                .iter()
                .map(|v| geodesic(&n, v))
                .fold(T::infinity(), T::min);
            Hole { center: n, radius }
        })
        .collect();
    let tol = T::lit(EMPTY_CAP_TOL).max(T::epsilon() * T::lit(1e3));
    let all_empty = holes.par_iter().all(|h| {
        let c = (h.radius - tol).cos();
        ps.iter().all(|x| dot(x, &h.center) <= c)
    });
    all_empty.then_some(holes)
}

/// Smallest pairwise geodesic distance.
pub fn separation<T: Real>(ps: &PointSet<T>) -> Result<T> {
    let n = ps.len();
    if n < 2 {
        return Err(Error::TooFewPoints { needed: 2, got: n });
    }
    let min_sq = (0..n)
        .into_par_iter()
        .map(|i| {
            let a = ps.point(i);
            (i + 1..n)
                .map(|j| {
                    a.iter()
                        .zip(ps.point(j))
                        .fold(T::zero(), |acc, (&x, &y)| acc + (x - y) * (x - y))
                })
                .fold(T::infinity(), T::min)
        })
        .reduce(T::infinity, T::min);
    let two = T::lit(2.0);
    Ok(two * (min_sq.sqrt() / two).min(T::one()).asin())
}

/// Covering radius, separation and their ratio.
pub fn mesh_ratio<T: Real>(ps: &PointSet<T>) -> Result<QualityReport<T>> {
    let sep = separation(ps)?;
    let cov = covering_radius(ps)?;
    Ok(QualityReport {
        covering: cov.radius,
        separation: sep,
        mesh_ratio: cov.radius / sep,
        method: cov.method,
        hole: cov.hole,
    })
}

/// Every maximal hole considered by the packing: angular gaps on S^1, hull
/// facet caps on S^2.
pub fn candidate_holes<T: Real>(ps: &PointSet<T>) -> Result<Vec<Hole<T>>> {
    match ps.dim() {
        1 => Ok(circle_gaps(ps)),
        2 => {
            if ps.len() < 4 {
                return Err(Error::TooFewPoints { needed: 4, got: ps.len() });
            }
            facet_holes(ps).ok_or_else(|| Error::Domain("points do not span a full-dimensional hull".into()))
        }
        d => Err(Error::UnsupportedDimension(d, "hole packings")),
    }
}

/// Greedy ordered packing: candidates by non-increasing radius (ties broken
/// lexicographically on the center), each kept when it is disjoint from all
/// caps kept so far.
pub fn ordered_avoiding_packing<T: Real>(ps: &PointSet<T>, max_holes: usize) -> Result<Vec<Hole<T>>> {
    let mut cands = candidate_holes(ps)?;
    cands.sort_by(|a, b| {
        b.radius
            .partial_cmp(&a.radius)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| {
                a.center
                    .iter()
                    .zip(&b.center)
                    .map(|(x, y)| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal))
                    .find(|o| o.is_ne())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
    });
    let slack = T::lit(DISJOINT_SLACK);
    let mut out: Vec<Hole<T>> = Vec::new();
    for h in cands {
        if out.len() >= max_holes {
            break;
        }
        if out
            .iter()
            .all(|k| geodesic(&k.center, &h.center) > k.radius + h.radius + slack)
        {
            out.push(h);
        }
    }
    Ok(out)
}

/// Covering radius estimated on a candidate grid of spacing at most
/// `resolution`, refined by local search. Never exceeds the true value.
pub fn grid_covering_estimate<T: Real>(ps: &PointSet<T>, resolution: f64) -> Result<T> {
    if !(resolution > 0.0) {
        return Err(Error::Domain(format!("resolution {resolution} must be positive")));
    }
    Ok(grid::estimate(ps, resolution).0)
}
