//! L_q norm of the error function by adaptive quadrature.
//!
//! On S^1 each arc between consecutive points is integrated by tanh-sinh,
//! which absorbs the kernel singularity at the arc ends; for non-even q the
//! arcs are also split at sign changes of 𝒜. On S^2 the sphere is tiled by
//! the hull of the points, each spherical triangle is cut into six pieces
//! with one input point at a corner, and a Duffy map plus panels graded
//! towards that corner take care of the singularity.

use std::f64::consts::PI;

use rayon::prelude::*;

use super::{check_order, ErrorFunction, WceMethod, WceResult};
use crate::error::{Error, Result};
use crate::geom::hull_triangles;
use crate::kernel::{KernelSpec, SobolevParams};
use crate::quad::{gauss_legendre, tanh_sinh};
use crate::PointSet;

/// Stopping rule for [`wce_lq`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// Relative change between refinement levels accepted as converged.
    pub rel_tol: f64,
    /// Refinement levels tried before giving up.
    pub max_doublings: usize,
    /// Final step of the local search used for q = ∞.
    pub linf_resolution: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { rel_tol: 1e-8, max_doublings: 20, linf_resolution: 1e-4 }
    }
}

/// ‖𝒜‖_q with respect to normalized surface measure, q conjugate to p.
///
/// `spec` must describe the kernel of order **s** (not 2s).
pub fn wce_lq(ps: &PointSet<f64>, params: SobolevParams, spec: &KernelSpec, quad: QuadratureSpec) -> Result<WceResult> {
    let d = ps.dim();
    if !(1..=2).contains(&d) {
        return Err(Error::UnsupportedDimension(d, "L_q worst-case errors"));
    }
    if params.d != d {
        return Err(Error::InvalidSpec(format!("parameters are for S^{}, points on S^{d}", params.d)));
    }
    SobolevParams::new(d, params.p, params.s)?;
    check_order(spec, d, params.s, "wce_lq")?;
    if !(quad.rel_tol > 0.0) || !(quad.linf_resolution > 0.0) {
        return Err(Error::InvalidSpec("quadrature tolerances must be positive".into()));
    }
    let ef = ErrorFunction::new(ps, spec, true)?;
    let q = params.q;
    let (value, err, method) = if q.is_infinite() {
        let (v, e) = if d == 1 { circle_sup(&ef, quad) } else { sphere_sup(&ef, quad)? };
        (v, e, WceMethod::LinfGrid { resolution: quad.linf_resolution })
    } else {
        let (integral, ierr, nodes) =
            if d == 1 { circle_integral(&ef, q, quad)? } else { sphere_integral(&ef, params.s, q, quad)? };
        let v = integral.max(0.0).powf(1.0 / q);
        let rel = if integral > 0.0 { ierr / integral } else { 0.0 };
        (v, v * rel / q, WceMethod::LqQuadrature { nodes })
    };
    Ok(WceResult { value, params, method, err_estimate: err + ef.err() })
}

fn is_even(q: f64) -> bool {
    q.fract() == 0.0 && (q as i64) % 2 == 0
}

fn sorted_angles(ef: &ErrorFunction) -> Vec<f64> {
    let mut a: Vec<f64> = ef.points().map(|x| x[1].atan2(x[0]).rem_euclid(2.0 * PI)).collect();
    a.sort_by(f64::total_cmp);
    a
}

/// Arcs [a, b] between consecutive angles, the last one wrapping past 2π.
/// Equally spaced sets collapse to one arc with multiplicity N.
fn arcs(angles: &[f64]) -> (Vec<(f64, f64)>, f64) {
    let n = angles.len();
    let mut out: Vec<(f64, f64)> = angles.windows(2).map(|w| (w[0], w[1])).collect();
    out.push((angles[n - 1], angles[0] + 2.0 * PI));
    let gap = 2.0 * PI / n as f64;
    if out.iter().all(|(a, b)| ((b - a) - gap).abs() <= 1e-12 * gap) {
        (vec![out[0]], n as f64)
    } else {
        (out, 1.0)
    }
}

const ARC_SAMPLES: usize = 32;

/// Sign changes of 𝒜 on (a, b), located by bisection.
fn sign_changes(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> Vec<f64> {
    let xs: Vec<f64> = (0..ARC_SAMPLES).map(|i| a + (b - a) * (i as f64 + 0.5) / ARC_SAMPLES as f64).collect();
    let vals: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let mut roots = Vec::new();
    for i in 1..xs.len() {
        if vals[i - 1] == 0.0 {
            roots.push(xs[i - 1]);
        } else if vals[i - 1].signum() != vals[i].signum() && vals[i] != 0.0 {
            let (mut lo, mut hi, flo) = (xs[i - 1], xs[i], vals[i - 1]);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if f(mid).signum() == flo.signum() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
    }
    roots
}

/// (1/2π) ∫ |𝒜|^q dφ with error estimate and evaluation count.
fn circle_integral(ef: &ErrorFunction, q: f64, quad: QuadratureSpec) -> Result<(f64, f64, usize)> {
    let angles = sorted_angles(ef);
    let (arcs, mult) = arcs(&angles);
    let a_of = |phi: f64| ef.at_circle_angles(&angles, phi);
    // rough size of the integral to turn the relative tolerance into an
    // absolute one per piece
    let crude: f64 = arcs
        .iter()
        .map(|&(a, b)| {
            (0..ARC_SAMPLES)
                .map(|i| a_of(a + (b - a) * (i as f64 + 0.5) / ARC_SAMPLES as f64).abs().powf(q))
                .sum::<f64>()
                * (b - a)
                / ARC_SAMPLES as f64
        })
        .sum::<f64>()
        * mult;
    let pieces: Vec<(f64, f64)> = arcs
        .iter()
        .flat_map(|&(a, b)| {
            let mut cuts = vec![a];
            if !is_even(q) {
                cuts.extend(sign_changes(&a_of, a, b));
            }
            cuts.push(b);
            cuts.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>()
        })
        .collect();
    let abs_tol = 0.1 * quad.rel_tol * crude.max(f64::MIN_POSITIVE) / pieces.len() as f64 / mult;
    let results: Vec<Result<(f64, f64, usize)>> = pieces
        .par_iter()
        .map(|&(a, b)| {
            let mut count = 0usize;
            let (v, e) = tanh_sinh(
                &mut |x, _, _| {
                    count += 1;
                    a_of(x).abs().powf(q)
                },
                a,
                b,
                0.1 * quad.rel_tol,
                abs_tol,
            )?;
            Ok((v, e, count))
        })
        .collect();
    let (mut total, mut err, mut nodes) = (0.0, 0.0, 0);
    for r in results {
        let (v, e, c) = r?;
        total += v;
        err += e;
        nodes += c;
    }
    Ok((total * mult / (2.0 * PI), err * mult / (2.0 * PI), nodes))
}

fn golden_max(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = hi - g * (hi - lo);
    let mut x2 = lo + g * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        }
    }
    if f1 > f2 { (x1, f1) } else { (x2, f2) }
}

const REFINE_CANDIDATES: usize = 16;

/// sup |𝒜| on S^1: dense samples, then golden-section search around the best.
fn circle_sup(ef: &ErrorFunction, quad: QuadratureSpec) -> (f64, f64) {
    let angles = sorted_angles(ef);
    let (arcs, _) = arcs(&angles);
    let g = |phi: f64| ef.at_circle_angles(&angles, phi).abs();
    let mut samples: Vec<(f64, f64, f64)> = Vec::new();
    for &(a, b) in &arcs {
        let h = (b - a) / ARC_SAMPLES as f64;
        for i in 0..=ARC_SAMPLES {
            let x = a + h * i as f64;
            samples.push((g(x), x, h));
        }
    }
    samples.sort_by(|x, y| y.0.total_cmp(&x.0));
    let sampled = samples[0].0;
    let best = samples
        .iter()
        .take(REFINE_CANDIDATES)
        .map(|&(v, x, h)| {
            let (_, fv) = golden_max(&g, x - h, x + h, quad.linf_resolution);
            v.max(fv)
        })
        .fold(sampled, f64::max);
    (best, best - sampled)
}

/// A flat triangle whose radial projection is a piece of the sphere; the
/// first corner is the only one that may carry a kernel singularity.
#[derive(Debug, Clone, Copy)]
struct Piece {
    v0: [f64; 3],
    e1: [f64; 3],
    e2: [f64; 3],
    det: f64,
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn unit(v: [f64; 3]) -> [f64; 3] {
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    [v[0] / n, v[1] / n, v[2] / n]
}

fn det3(a: [f64; 3], b: [f64; 3], c: [f64; 3]) -> f64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])
}

impl Piece {
    fn new(v0: [f64; 3], v1: [f64; 3], v2: [f64; 3]) -> Self {
        Piece { v0, e1: sub(v1, v0), e2: sub(v2, v1), det: det3(v0, v1, v2).abs() }
    }

    /// Point on the sphere and solid-angle density at Duffy coordinates.
    fn map(&self, u: f64, w: f64) -> ([f64; 3], f64) {
        let p = [
            self.v0[0] + u * (self.e1[0] + w * self.e2[0]),
            self.v0[1] + u * (self.e1[1] + w * self.e2[1]),
            self.v0[2] + u * (self.e1[2] + w * self.e2[2]),
        ];
        let r = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
        ([p[0] / r, p[1] / r, p[2] / r], u * self.det / (r * r * r))
    }
}

/// Tiling of S^2 by hull facets of the points plus the octahedron vertices,
/// which keep the origin inside the hull for any input.
struct Tiling {
    pieces: Vec<Piece>,
    vertices: Vec<[f64; 3]>,
    facets: Vec<[usize; 3]>,
}

fn tiling(points: &[[f64; 3]]) -> Option<Tiling> {
    let mut vertices = points.to_vec();
    for axis in 0..3 {
        for sign in [1.0, -1.0] {
            let mut e = [0.0; 3];
            e[axis] = sign;
            if vertices.iter().all(|v| v[0] * e[0] + v[1] * e[1] + v[2] * e[2] < 1.0 - 1e-10) {
                vertices.push(e);
            }
        }
    }
    let facets = hull_triangles(&vertices)?;
    let mut pieces = Vec::with_capacity(6 * facets.len());
    for f in &facets {
        let [a, b, c] = f.map(|i| vertices[i]);
        let m = unit([a[0] + b[0] + c[0], a[1] + b[1] + c[1], a[2] + b[2] + c[2]]);
        let mid = |p: [f64; 3], q: [f64; 3]| unit([p[0] + q[0], p[1] + q[1], p[2] + q[2]]);
        let (ab, bc, ca) = (mid(a, b), mid(b, c), mid(c, a));
        for (apex, x, y) in [(a, ab, m), (a, m, ca), (b, bc, m), (b, m, ab), (c, ca, m), (c, m, bc)] {
            pieces.push(Piece::new(apex, x, y));
        }
    }
    Some(Tiling { pieces, vertices, facets })
}

/// Reference nodes on [0,1]^2: u graded geometrically towards 0 with
/// `panels` dyadic panels below the top one, Gauss–Legendre of order n in
/// every panel and in w.
fn reference_rule(n: usize, panels: usize) -> Vec<(f64, f64, f64)> {
    let (x, wts) = gauss_legendre(n);
    let mut edges = vec![0.0];
    edges.extend((0..=panels).rev().map(|k| 0.5f64.powi(k as i32)));
    let mut out = Vec::with_capacity(n * n * (panels + 1));
    for e in edges.windows(2) {
        let (lo, hi) = (e[0], e[1]);
        for (xu, wu) in x.iter().zip(&wts) {
            let u = 0.5 * (lo + hi) + 0.5 * (hi - lo) * xu;
            let wu = 0.5 * (hi - lo) * wu;
            for (xw, ww) in x.iter().zip(&wts) {
                out.push((u, 0.5 + 0.5 * xw, wu * 0.5 * ww));
            }
        }
    }
    out
}

/// Graded panels needed so that the neglected corner behaviour, which
/// scales like u^{1 + q·min(s-d, 0)} times the Duffy Jacobian, falls below
/// the tolerance.
fn grading_panels(s: f64, q: f64, rel_tol: f64) -> usize {
    let growth = 2.0 + q * (s - 2.0).min(0.0) + (s - 2.0).clamp(0.0, 2.0);
    let k = (1.0 / rel_tol).log2() / growth.max(0.25);
    (k.ceil() as usize).clamp(3, 48)
}

fn integrate_pieces(pieces: &[Piece], rule: &[(f64, f64, f64)], f: &(impl Fn(&[f64; 3]) -> f64 + Sync)) -> f64 {
    let parts: Vec<f64> = pieces
        .par_iter()
        .map(|p| {
            rule.iter()
                .map(|&(u, w, wt)| {
                    let (y, jac) = p.map(u, w);
                    wt * jac * f(&y)
                })
                .sum::<f64>()
        })
        .collect();
    parts.iter().sum()
}

/// (1/4π) ∫ |𝒜|^q dσ with error estimate and node count.
fn sphere_integral(ef: &ErrorFunction, s: f64, q: f64, quad: QuadratureSpec) -> Result<(f64, f64, usize)> {
    let f = |y: &[f64; 3]| ef.at(y).abs().powf(q);
    let points: Vec<[f64; 3]> = ef.points().map(|x| [x[0], x[1], x[2]]).collect();
    sphere_mean(&points, &f, grading_panels(s, q, quad.rel_tol), quad)
}

/// Mean of `f` over S^2 for integrands that may be singular at the given
/// points, returned with an error estimate and the node count.
pub fn sphere_mean(
    singular: &[[f64; 3]],
    f: &(impl Fn(&[f64; 3]) -> f64 + Sync),
    panels: usize,
    quad: QuadratureSpec,
) -> Result<(f64, f64, usize)> {
    let Some(t) = tiling(singular) else {
        return product_integral(f, quad);
    };
    let mut n = 4;
    let mut prev = integrate_pieces(&t.pieces, &reference_rule(n, panels), f);
    for _ in 0..quad.max_doublings {
        n *= 2;
        let rule = reference_rule(n, panels);
        let next = integrate_pieces(&t.pieces, &rule, f);
        let diff = (next - prev).abs();
        if diff <= quad.rel_tol * next.abs() {
            let norm = 4.0 * PI;
            return Ok((next / norm, diff / norm, rule.len() * t.pieces.len()));
        }
        prev = next;
    }
    Err(Error::NoConvergence { what: "sphere quadrature", detail: format!("{} doublings", quad.max_doublings) })
}

/// Gauss–Legendre in cos θ times equispaced longitudes, for inputs whose
/// hull cannot be built.
fn product_integral(f: &(impl Fn(&[f64; 3]) -> f64 + Sync), quad: QuadratureSpec) -> Result<(f64, f64, usize)> {
    let rule = |n: usize| -> f64 {
        let (z, w) = gauss_legendre(n);
        let m = 2 * n;
        let parts: Vec<f64> = (0..n)
            .into_par_iter()
            .map(|i| {
                let r = (1.0 - z[i] * z[i]).max(0.0).sqrt();
                (0..m)
                    .map(|j| {
                        let ph = 2.0 * PI * j as f64 / m as f64;
                        f(&[r * ph.cos(), r * ph.sin(), z[i]])
                    })
                    .sum::<f64>()
                    * w[i]
                    / m as f64
            })
            .collect();
        0.5 * parts.iter().sum::<f64>()
    };
    let mut n = 16;
    let mut prev = rule(n);
    for _ in 0..quad.max_doublings {
        n *= 2;
        let next = rule(n);
        let diff = (next - prev).abs();
        if diff <= quad.rel_tol * next.abs() {
            return Ok((next, diff, 2 * n * n));
        }
        prev = next;
    }
    Err(Error::NoConvergence { what: "product quadrature", detail: format!("{} doublings", quad.max_doublings) })
}

fn tangent_basis(y: &[f64; 3]) -> ([f64; 3], [f64; 3]) {
    let a = if y[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
    let d = a[0] * y[0] + a[1] * y[1] + a[2] * y[2];
    let t1 = unit([a[0] - d * y[0], a[1] - d * y[1], a[2] - d * y[2]]);
    let t2 = [y[1] * t1[2] - y[2] * t1[1], y[2] * t1[0] - y[0] * t1[2], y[0] * t1[1] - y[1] * t1[0]];
    (t1, t2)
}

/// Compass search for a local maximum of g starting at y with step h.
fn compass_max(g: &impl Fn(&[f64; 3]) -> f64, mut y: [f64; 3], mut h: f64, resolution: f64) -> f64 {
    let mut best = g(&y);
    while h >= resolution {
        let (t1, t2) = tangent_basis(&y);
        let mut moved = false;
        for (a, b) in [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)] {
            let c = unit([
                y[0] + h * (a * t1[0] + b * t2[0]),
                y[1] + h * (a * t1[1] + b * t2[1]),
                y[2] + h * (a * t1[2] + b * t2[2]),
            ]);
            let v = g(&c);
            if v > best {
                best = v;
                y = c;
                moved = true;
                break;
            }
        }
        if !moved {
            h *= 0.5;
        }
    }
    best
}

/// sup |𝒜| on S^2: input points, facet centres and a coarse rule on every
/// piece as candidates, then compass search from the best ones.
fn sphere_sup(ef: &ErrorFunction, quad: QuadratureSpec) -> Result<(f64, f64)> {
    let g = |y: &[f64; 3]| ef.at(y).abs();
    let mut cands: Vec<[f64; 3]> = ef.points().map(|x| [x[0], x[1], x[2]]).collect();
    if let Some(t) = tiling(&cands.clone()) {
        for f in &t.facets {
            let [a, b, c] = f.map(|i| t.vertices[i]);
            // circumcentre direction: normal of the facet plane
            let n = crate::scalar::cross(&sub(b, a), &sub(c, a));
            let o = if n[0] * a[0] + n[1] * a[1] + n[2] * a[2] < 0.0 { [-n[0], -n[1], -n[2]] } else { n };
            cands.push(unit(o));
        }
        for p in &t.pieces {
            for (u, w) in [(0.5, 0.5), (1.0, 0.0), (1.0, 1.0), (0.25, 0.5)] {
                cands.push(p.map(u, w).0);
            }
        }
    } else {
        let m = 64;
        for i in 0..m {
            let z = -1.0 + (2.0 * i as f64 + 1.0) / m as f64;
            let r = (1.0 - z * z).sqrt();
            for j in 0..2 * m {
                let ph = PI * j as f64 / m as f64;
                cands.push([r * ph.cos(), r * ph.sin(), z]);
            }
        }
    }
    let mut scored: Vec<(f64, [f64; 3])> = cands.par_iter().map(|y| (g(y), *y)).collect();
    scored.sort_by(|a, b| b.0.total_cmp(&a.0));
    let sampled = scored[0].0;
    let h = (4.0 * PI / ef.len() as f64).sqrt() / 4.0;
    let best = scored
        .iter()
        .take(REFINE_CANDIDATES)
        .map(|&(_, y)| compass_max(&g, y, h.min(0.5), quad.linf_resolution))
        .fold(sampled, f64::max);
    Ok((best, best - sampled))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_rule_integrates_duffy_square() {
        // ∫∫ u du dw = 1/2 and ∫∫ u^{-1/2} w du dw = 1
        let r = reference_rule(8, 30);
        let a: f64 = r.iter().map(|(u, _, wt)| wt * u).sum();
        assert!((a - 0.5).abs() < 1e-14);
        let b: f64 = r.iter().map(|(u, w, wt)| wt * w / u.sqrt()).sum();
        assert!((b - 1.0).abs() < 1e-4);
    }

    #[test]
    fn tiling_covers_sphere() {
        let ps = crate::generate::<f64>(&crate::GeneratorSpec::new(crate::Family::FibonacciS2, 30)).unwrap();
        let spec = KernelSpec::with_degree(2, 3.0, 4).unwrap();
        let ef = ErrorFunction::new(&ps, &spec, false).unwrap();
        let points: Vec<[f64; 3]> = ef.points().map(|x| [x[0], x[1], x[2]]).collect();
        let t = tiling(&points).unwrap();
        let rule = reference_rule(6, 3);
        let area = integrate_pieces(&t.pieces, &rule, &|_| 1.0);
        assert!((area - 4.0 * PI).abs() < 1e-12, "{area}");
        let z2 = integrate_pieces(&t.pieces, &rule, &|y| y[2] * y[2]);
        assert!((z2 - 4.0 * PI / 3.0).abs() < 1e-10, "{z2}");
    }
}
