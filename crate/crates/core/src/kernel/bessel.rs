//! The zonal Bessel kernel K^(s)(t) = Σ_ℓ (1+λ_ℓ)^{-s/2} Z(d,ℓ) P_ℓ^(d)(t).

use super::gegenbauer::{eigenvalue, harmonic_dimension, GegenbauerIter};
use super::series::SeriesKernel;
use crate::error::{Error, Result};

/// Largest truncation degree accepted by [`KernelSpec::truncated`].
pub const MAX_DEGREE: usize = 10_000_000;

/// Sobolev space parameters. `p` may be `f64::INFINITY`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SobolevParams {
    pub d: usize,
    pub p: f64,
    pub s: f64,
    pub q: f64,
}

impl SobolevParams {
    pub fn new(d: usize, p: f64, s: f64) -> Result<Self> {
        if d == 0 {
            return Err(Error::UnsupportedDimension(0, "Sobolev spaces"));
        }
        if !(p >= 1.0) {
            return Err(Error::Domain(format!("p = {p} must lie in [1, inf]")));
        }
        if !(s > d as f64 / p) {
            return Err(Error::Domain(format!("need s > d/p, got s = {s}, d/p = {}", d as f64 / p)));
        }
        Ok(SobolevParams { d, p, s, q: conjugate(p) })
    }
}

/// Hölder conjugate exponent.
pub fn conjugate(p: f64) -> f64 {
    if p == 1.0 {
        f64::INFINITY
    } else if p.is_infinite() {
        1.0
    } else {
        p / (p - 1.0)
    }
}

/// How the series is evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Evaluation {
    /// Partial sum up to `degree`; the tail bound is reported as error.
    Truncated { degree: usize },
    /// Full series (d ∈ {1, 2}) to about machine precision.
    Series,
}

/// Order, dimension and evaluation rule of a Bessel kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelSpec {
    pub s: f64,
    pub d: usize,
    pub tail_tol: f64,
    pub eval: Evaluation,
}

/// A kernel value with an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelValue {
    pub value: f64,
    pub err: f64,
}

/// c_d with Z(d,ℓ) ≤ c_d ℓ^{d-1} for ℓ ≥ 1.
fn dimension_bound(d: usize) -> f64 {
    if d == 1 {
        return 2.0;
    }
    let mut fact = 1.0;
    for k in 2..d {
        fact *= k as f64;
    }
    (d as f64 + 1.0) * (d as f64 - 1.0).powi(d as i32 - 2) / fact
}

impl KernelSpec {
    /// Truncated kernel with the smallest degree L whose tail bound
    /// Σ_{ℓ>L} (1+λ_ℓ)^{-s/2} Z(d,ℓ) ≤ c_d L^{d-s}/(s-d) is below `tail_tol`.
    pub fn truncated(d: usize, s: f64, tail_tol: f64) -> Result<Self> {
        if d == 0 {
            return Err(Error::UnsupportedDimension(0, "Bessel kernels"));
        }
        if !(tail_tol > 0.0) {
            return Err(Error::Domain("tail tolerance must be positive".into()));
        }
        let e = s - d as f64;
        if !(e > 0.0) {
            return Err(Error::Domain(format!(
                "truncated kernel needs s > d for a pointwise tail bound, got s = {s}, d = {d}"
            )));
        }
        let l = (dimension_bound(d) / (e * tail_tol)).powf(1.0 / e).ceil();
        if !(l <= MAX_DEGREE as f64) {
            return Err(Error::Truncation { tol: tail_tol, max_degree: MAX_DEGREE });
        }
        Ok(KernelSpec { s, d, tail_tol, eval: Evaluation::Truncated { degree: (l as usize).max(1) } })
    }

    /// Truncated kernel of fixed degree.
    pub fn with_degree(d: usize, s: f64, degree: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::UnsupportedDimension(0, "Bessel kernels"));
        }
        let mut k = KernelSpec { s, d, tail_tol: f64::INFINITY, eval: Evaluation::Truncated { degree } };
        k.tail_tol = k.tail_bound();
        Ok(k)
    }

    /// Full series kernel; `s` must exceed 0 on S^1 and 1 on S^2.
    pub fn series(d: usize, s: f64, tol: f64) -> Result<Self> {
        let k = KernelSpec { s, d, tail_tol: tol, eval: Evaluation::Series };
        SeriesKernel::new(d, s)?;
        Ok(k)
    }

    pub fn degree(&self) -> Option<usize> {
        match self.eval {
            Evaluation::Truncated { degree } => Some(degree),
            Evaluation::Series => None,
        }
    }

    /// Bound on the neglected tail (∞ when no bound is available).
    pub fn tail_bound(&self) -> f64 {
        match self.eval {
            Evaluation::Series => 0.0,
            Evaluation::Truncated { degree } => {
                let e = self.s - self.d as f64;
                if e <= 0.0 {
                    f64::INFINITY
                } else {
                    dimension_bound(self.d) * (degree.max(1) as f64).powf(-e) / e
                }
            }
        }
    }

    /// Prepared evaluator.
    pub fn build(&self) -> Result<ZonalKernel> {
        let inner = match self.eval {
            Evaluation::Series => Inner::Series(SeriesKernel::new(self.d, self.s)?),
            Evaluation::Truncated { degree } => Inner::Truncated(
                (1..=degree)
                    .map(|l| {
                        (1.0 + eigenvalue(self.d, l)).powf(-self.s / 2.0) * harmonic_dimension(self.d, l) as f64
                    })
                    .collect(),
            ),
        };
        Ok(ZonalKernel { spec: *self, inner })
    }
}

#[derive(Debug, Clone)]
enum Inner {
    /// a_ℓ for ℓ = 1..=L.
    Truncated(Vec<f64>),
    Series(SeriesKernel),
}

/// A Bessel kernel ready for repeated evaluation.
#[derive(Debug, Clone)]
pub struct ZonalKernel {
    spec: KernelSpec,
    inner: Inner,
}

impl ZonalKernel {
    pub fn spec(&self) -> &KernelSpec {
        &self.spec
    }

    /// Centered kernel 𝒦̃ = 𝒦 - 1 at t in [-1, 1].
    pub fn centered(&self, t: f64) -> Result<KernelValue> {
        if !(t.abs() <= 1.0) {
            return Err(Error::Domain(format!("|t| = {} exceeds 1", t.abs())));
        }
        match &self.inner {
            Inner::Truncated(a) => {
                let mut it = GegenbauerIter::new(self.spec.d, t);
                it.next();
                let value = a.iter().zip(it).map(|(a, p)| a * p).sum();
                Ok(KernelValue { value, err: self.spec.tail_bound() })
            }
            Inner::Series(k) => {
                if t == 1.0 && k.diagonal().is_none() {
                    return Err(Error::Domain(format!(
                        "kernel of order {} diverges on the diagonal of S^{}",
                        self.spec.s, self.spec.d
                    )));
                }
                let value = if t == 1.0 { k.diagonal().unwrap_or(f64::INFINITY) } else { k.at_angle(t.acos()) };
                Ok(KernelValue { value, err: 1e-13 * (1.0 + value.abs()) })
            }
        }
    }

    /// Centered kernel at geodesic angle θ; more accurate than
    /// [`ZonalKernel::centered`] near θ = 0.
    pub fn centered_angle(&self, theta: f64) -> f64 {
        match &self.inner {
            Inner::Series(k) => k.at_angle(theta),
            Inner::Truncated(_) => self.centered(theta.cos()).map(|v| v.value).unwrap_or(f64::NAN),
        }
    }

    /// 𝒦̃(1) when finite.
    pub fn diagonal(&self) -> Option<f64> {
        match &self.inner {
            Inner::Series(k) => k.diagonal(),
            Inner::Truncated(a) => Some(a.iter().sum()),
        }
    }
}

/// K^(s)(t) including the constant term.
pub fn bessel_kernel(spec: &KernelSpec, t: f64) -> Result<KernelValue> {
    let v = bessel_kernel_centered(spec, t)?;
    Ok(KernelValue { value: v.value + 1.0, err: v.err })
}

/// 𝒦̃^(s)(t) = K^(s)(t) - 1.
pub fn bessel_kernel_centered(spec: &KernelSpec, t: f64) -> Result<KernelValue> {
    spec.build()?.centered(t)
}

/// 𝒦̃^(s)(cos φ) on the circle, summed as
/// Σ_{ℓ≤10} 2(1+ℓ²)^{-s/2} cos ℓφ + Σ_m 2(-1)^m (s/2)_m/m! Σ_{ℓ>10} cos(ℓφ)/ℓ^{s+2m},
/// the split at ℓ = 10 making the binomial expansion converge geometrically.
pub fn bessel_kernel_circle(s: f64, phi: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(Error::Domain(format!("circle kernel needs s > 1, got {s}")));
    }
    let k = SeriesKernel::new(1, s)?;
    let theta = phi.rem_euclid(2.0 * std::f64::consts::PI);
    let theta = theta.min(2.0 * std::f64::consts::PI - theta);
    Ok(k.at_angle(theta))
}
