//! Worst-case errors of equal-weight cubature in W_p^s on S^1 and S^2.
//!
//! Kernel orders differ between engines: the closed form for p = 2 sums the
//! kernel of order 2s over all pairs, while the L_q engine integrates the
//! error function built from the kernel of order s. Every entry point checks
//! the order of the supplied [`KernelSpec`].

mod lq;

use std::f64::consts::PI;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kernel::{binomial_series, zeta, KernelSpec, KernelTable, SeriesKernel, SobolevParams, ZonalKernel};
use crate::scalar::geodesic;
use crate::PointSet;

pub use lq::{sphere_mean, wce_lq, QuadratureSpec};

/// Point counts from which pair sums go through a [`KernelTable`].
const TABLE_THRESHOLD: usize = 32;
/// Radicands down to this value are treated as rounding and clamped to 0.
pub const RADICAND_FLOOR: f64 = -1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WceMethod {
    ClosedFormP2,
    CircleExact,
    LqQuadrature { nodes: usize },
    LinfGrid { resolution: f64 },
}

impl fmt::Display for WceMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WceMethod::ClosedFormP2 => f.write_str("closed_form_p2"),
            WceMethod::CircleExact => f.write_str("circle_exact"),
            WceMethod::LqQuadrature { nodes } => write!(f, "lq_quadrature({nodes})"),
            WceMethod::LinfGrid { resolution } => write!(f, "linf_grid({resolution})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WceResult {
    pub value: f64,
    pub params: SobolevParams,
    pub method: WceMethod,
    pub err_estimate: f64,
}

fn check_order(spec: &KernelSpec, d: usize, order: f64, what: &str) -> Result<()> {
    if spec.d != d {
        return Err(Error::InvalidSpec(format!("{what}: kernel is on S^{}, points on S^{d}", spec.d)));
    }
    if (spec.s - order).abs() > 1e-12 * order.abs().max(1.0) {
        return Err(Error::InvalidSpec(format!("{what} needs a kernel of order {order}, got {}", spec.s)));
    }
    Ok(())
}

/// Error bars on sqrt(r) given |r - r_true| ≤ e.
fn sqrt_with_error(r: f64, e: f64) -> Result<(f64, f64)> {
    if r < RADICAND_FLOOR {
        return Err(Error::NegativeRadicand(r));
    }
    if r < 0.0 {
        log::warn!("radicand {r:e} clamped to 0");
    }
    let v = r.max(0.0).sqrt();
    let hi = (r + e).max(0.0).sqrt();
    let lo = (r - e).max(0.0).sqrt();
    Ok((v, (hi - v).max(v - lo)))
}

/// Kernel evaluator by geodesic angle, either tabulated or exact.
#[derive(Debug, Clone)]
enum AngleKernel {
    Table(KernelTable),
    Direct(ZonalKernel),
}

impl AngleKernel {
    fn new(kernel: ZonalKernel, tabulate: bool) -> Self {
        if tabulate {
            AngleKernel::Table(KernelTable::new(&kernel))
        } else {
            AngleKernel::Direct(kernel)
        }
    }

    fn at_angle(&self, theta: f64) -> f64 {
        match self {
            AngleKernel::Table(t) => t.at_angle(theta),
            AngleKernel::Direct(k) => {
                if theta == 0.0 {
                    k.diagonal().unwrap_or(f64::INFINITY)
                } else {
                    k.centered_angle(theta)
                }
            }
        }
    }

    /// Per-evaluation error bound given the kernel's own tail bound.
    fn err(&self, tail: f64, scale: f64) -> f64 {
        match self {
            // Chebyshev interpolation amplifies the truncation error by its
            // Lebesgue constant, which stays below 3 at degree 24
            AngleKernel::Table(_) => 4.0 * tail + 1e-12 * scale,
            AngleKernel::Direct(_) => tail + 1e-13 * scale,
        }
    }
}

/// Closed form for p = 2: sqrt(N^{-2} Σ_j Σ_k 𝒦̃^(2s)(x_j·x_k)).
///
/// `spec` must describe the kernel of order **2s**.
pub fn wce_p2(ps: &PointSet<f64>, s: f64, spec: &KernelSpec) -> Result<WceResult> {
    let d = ps.dim();
    let params = SobolevParams::new(d, 2.0, s)?;
    check_order(spec, d, 2.0 * s, "wce_p2")?;
    let n = ps.len();
    if n == 0 {
        return Err(Error::EmptySet);
    }
    let kernel = spec.build()?;
    let diag = kernel
        .diagonal()
        .ok_or_else(|| Error::Domain(format!("kernel of order {} has no finite diagonal on S^{d}", spec.s)))?;
    let k = AngleKernel::new(kernel, n >= TABLE_THRESHOLD);
    let rows: Vec<f64> = (0..n)
        .into_par_iter()
        .map(|j| {
            let x = ps.point(j);
            ((j + 1)..n).map(|i| k.at_angle(geodesic(x, ps.point(i)))).sum()
        })
        .collect();
    let off: f64 = rows.iter().sum();
    let nf = n as f64;
    let r = (nf * diag + 2.0 * off) / (nf * nf);
    let e = k.err(spec.tail_bound(), diag.abs()) + f64::EPSILON * nf.sqrt() * diag.abs();
    let (value, err_estimate) = sqrt_with_error(r, e)?;
    Ok(WceResult { value, params, method: WceMethod::ClosedFormP2, err_estimate })
}

/// 2 N^{-2s} Σ_{ν≥1} (ν^2 + N^{-2})^{-s}, i.e. Σ_{ν≠0} (1 + ν²N²)^{-s},
/// expanded binomially in N^{-2}.
fn lattice_sum(n: usize, s: f64) -> Result<f64> {
    let nf = n as f64;
    let x = nf.powi(-2);
    let coef = binomial_series(s, 400);
    let mut acc = 0.0;
    let mut pw = 1.0;
    for (m, c) in coef.iter().enumerate() {
        let term = c * 2.0 * zeta(2.0 * s + 2.0 * m as f64)? * pw;
        acc += term;
        if term.abs() < 1e-17 * acc.abs() {
            return Ok(nf.powf(-2.0 * s) * acc);
        }
        pw *= x;
    }
    Err(Error::NoConvergence { what: "lattice sum", detail: format!("N = {n}, s = {s}") })
}

/// Exact worst-case error on S^1 in W_2^s for the N-th roots of unity with
/// `m` consecutive points removed.
pub fn wce_circle_exact(n: usize, m: usize, s: f64) -> Result<WceResult> {
    if n < 2 {
        return Err(Error::TooFewPoints { needed: 2, got: n });
    }
    if m >= n {
        return Err(Error::InvalidSpec(format!("cannot remove {m} of {n} points")));
    }
    let params = SobolevParams::new(1, 2.0, s)?;
    let lat = lattice_sum(n, s)?;
    let r = if m == 0 {
        lat
    } else {
        // Σ over kept pairs = Σ all - 2 Σ (removed, all) + Σ (removed, removed)
        let k = SeriesKernel::new(1, 2.0 * s)?;
        let diag = k.diagonal().ok_or_else(|| Error::Domain(format!("no diagonal at order {}", 2.0 * s)))?;
        let mut rr = m as f64 * diag;
        for nu in 1..m {
            let phi = 2.0 * PI * nu.min(n - nu) as f64 / n as f64;
            rr += 2.0 * (m - nu) as f64 * k.at_angle(phi);
        }
        let nf = n as f64;
        let kept = (n - m) as f64;
        (nf * (nf - 2.0 * m as f64) * lat + rr) / (kept * kept)
    };
    let (value, err_estimate) = sqrt_with_error(r, 1e-14 * r.abs() + 1e-15)?;
    Ok(WceResult { value, params, method: WceMethod::CircleExact, err_estimate })
}

/// 𝒜(y) = N^{-1} Σ_j 𝒦̃^(s)(x_j·y), prepared for repeated evaluation.
#[derive(Debug, Clone)]
pub struct ErrorFunction {
    dim: usize,
    coords: Vec<f64>,
    kernel: AngleKernel,
    err: f64,
}

impl ErrorFunction {
    /// `spec` must describe the kernel of order s. With `tabulate` the kernel
    /// is interpolated, which pays off beyond a few thousand evaluations.
    pub fn new(ps: &PointSet<f64>, spec: &KernelSpec, tabulate: bool) -> Result<Self> {
        if ps.is_empty() {
            return Err(Error::EmptySet);
        }
        if spec.d != ps.dim() {
            return Err(Error::InvalidSpec(format!("kernel is on S^{}, points on S^{}", spec.d, ps.dim())));
        }
        let kernel = spec.build()?;
        let scale = kernel.diagonal().map_or(1.0, |v| v.abs().max(1.0));
        let kernel = AngleKernel::new(kernel, tabulate);
        let err = kernel.err(spec.tail_bound(), scale);
        Ok(ErrorFunction { dim: ps.dim(), coords: ps.iter().flatten().copied().collect(), kernel, err })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> + '_ {
        self.coords.chunks_exact(self.dim + 1)
    }

    pub fn len(&self) -> usize {
        self.coords.len() / (self.dim + 1)
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Bound on the evaluation error of [`ErrorFunction::at`].
    pub fn err(&self) -> f64 {
        self.err
    }

    pub fn at(&self, y: &[f64]) -> f64 {
        let n = self.len() as f64;
        self.points().map(|x| self.kernel.at_angle(geodesic(x, y))).sum::<f64>() / n
    }

    /// Value at the point (cos φ, sin φ) of S^1 given the angles of the set.
    pub(crate) fn at_circle_angles(&self, angles: &[f64], phi: f64) -> f64 {
        let n = angles.len() as f64;
        angles
            .iter()
            .map(|&a| {
                let mut t = (phi - a).abs() % (2.0 * PI);
                if t > PI {
                    t = 2.0 * PI - t;
                }
                self.kernel.at_angle(t)
            })
            .sum::<f64>()
            / n
    }
}

/// Value of the error function at a single point `y`; `spec` must describe
/// the kernel of order s.
pub fn wce_error_function(ps: &PointSet<f64>, s: f64, spec: &KernelSpec, y: &[f64]) -> Result<f64> {
    check_order(spec, ps.dim(), s, "wce_error_function")?;
    if y.len() != ps.ambient() {
        return Err(Error::InvalidSpec(format!("y has {} coordinates, expected {}", y.len(), ps.ambient())));
    }
    let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::NotUnit { index: 0, norm });
    }
    Ok(ErrorFunction::new(ps, spec, false)?.at(y))
}

#[cfg(test)]
mod tests;
