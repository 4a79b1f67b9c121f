//! Fooling functions: a smooth bump on a collar inside the largest hole.
//! It vanishes at every node, so its integral divided by its Sobolev norm
//! bounds the worst-case error from below.

mod jet;

use std::f64::consts::PI;

use jet::Jet;

use crate::error::{Error, Result};
use crate::geom::covering_radius;
use crate::kernel::{omega_ratio, SobolevParams};
use crate::quad::{adaptive_gauss_legendre, GaussLegendre};
use crate::PointSet;

/// exp(1 - 1/(1 - t²)) on (-1, 1), zero elsewhere.
pub fn bump(t: f64) -> f64 {
    if t.abs() < 1.0 {
        (1.0 - 1.0 / ((1.0 - t) * (1.0 + t))).exp()
    } else {
        0.0
    }
}

/// The affine map g_ρ from [cos ρ, cos(ρ/2)] onto [-1, 1], evaluated at
/// t = cos θ without cancellation for small angles.
#[derive(Debug, Clone, Copy)]
struct CollarMap {
    rho: f64,
    half_width: f64,
}

impl CollarMap {
    fn new(rho: f64) -> Self {
        // (cos(ρ/2) - cos ρ)/2
        CollarMap { rho, half_width: (0.75 * rho).sin() * (0.25 * rho).sin() }
    }

    /// Slope of g_ρ in t.
    fn slope(&self) -> f64 {
        1.0 / self.half_width
    }

    fn at_angle(&self, theta: f64) -> f64 {
        // cos A - cos B = -2 sin((A+B)/2) sin((A-B)/2)
        let diff = |b: f64| -2.0 * (0.5 * (theta + b)).sin() * (0.5 * (theta - b)).sin();
        0.5 * (diff(self.rho) + diff(0.5 * self.rho)) / self.half_width
    }

    fn at_cos(&self, t: f64) -> f64 {
        let mid = 0.5 * (self.rho.cos() + (0.5 * self.rho).cos());
        (t - mid) / self.half_width
    }
}

fn check_rho(rho: f64) -> Result<()> {
    if rho > 0.0 && rho < PI {
        Ok(())
    } else {
        Err(Error::Domain(format!("collar radius {rho} must lie in (0, pi)")))
    }
}

/// f_ρ(x) = Φ(g_ρ(y0·x)): a bump on the collar cos ρ ≤ y0·x ≤ cos(ρ/2).
#[derive(Debug, Clone, PartialEq)]
pub struct CollarFunction {
    center: Vec<f64>,
    radius: f64,
}

impl CollarFunction {
    pub fn new(center: Vec<f64>, radius: f64) -> Result<Self> {
        check_rho(radius)?;
        let norm = center.iter().map(|v| v * v).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-9 {
            return Err(Error::NotUnit { index: 0, norm });
        }
        Ok(CollarFunction { center, radius })
    }

    pub fn center(&self) -> &[f64] {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Value as a function of t = y0·x.
    pub fn profile(&self, t: f64) -> f64 {
        bump(CollarMap::new(self.radius).at_cos(t))
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        let t: f64 = self.center.iter().zip(x).map(|(a, b)| a * b).sum();
        self.profile(t)
    }
}

pub fn collar_function(y0: &[f64], rho: f64, x: &[f64]) -> Result<f64> {
    Ok(CollarFunction::new(y0.to_vec(), rho)?.eval(x))
}

fn check_dim(d: usize) -> Result<()> {
    if d == 1 || d == 2 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(d, "collar functions"))
    }
}

/// ∫ f_ρ dσ = (ω_{d-1}/ω_d) ∫_{ρ/2}^{ρ} Φ(g_ρ(cos θ)) sin^{d-1}θ dθ.
pub fn collar_integral(d: usize, rho: f64) -> Result<f64> {
    check_dim(d)?;
    check_rho(rho)?;
    let g = CollarMap::new(rho);
    let scale = rho.powi(d as i32);
    let v = adaptive_gauss_legendre(
        &mut |th: f64| bump(g.at_angle(th)) * th.sin().powi(d as i32 - 1),
        0.5 * rho,
        rho,
        1e-13 * scale,
    )?;
    Ok(omega_ratio(d) * v)
}

/// Jet of Φ_ρ in t around t = cos θ.
fn profile_jet(g: &CollarMap, theta: f64) -> Jet {
    let x0 = g.at_angle(theta);
    if x0.abs() >= 1.0 {
        return Jet::constant(0.0);
    }
    let a = g.slope();
    // 1 - x² with x = x0 + a h
    let one_minus = Jet([(1.0 - x0) * (1.0 + x0), -2.0 * x0 * a, -a * a, 0.0, 0.0]);
    (Jet::constant(1.0) - one_minus.recip()).exp()
}

/// Applies 1 + d t D - (1 - t²) D² to a jet in t around t = cos θ; each
/// application uses up two orders.
fn apply_operator(d: usize, theta: f64, f: Jet) -> Jet {
    let t = Jet::linear(theta.cos(), 1.0);
    let s = theta.sin();
    let one_minus_t2 = Jet([s * s, -2.0 * theta.cos(), -1.0, 0.0, 0.0]);
    let df = f.derivative();
    f + (t * df).scale(d as f64) - one_minus_t2 * df.derivative()
}

/// ((1 - Δ)^{s/2} f_ρ)(x) for y0·x = cos θ.
fn sobolev_density(d: usize, s: u32, g: &CollarMap, theta: f64) -> f64 {
    let mut f = profile_jet(g, theta);
    for _ in 0..s / 2 {
        f = apply_operator(d, theta, f);
    }
    f.value()
}

fn golden_max(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let r = 0.5 * (5f64.sqrt() - 1.0);
    let (mut x1, mut x2) = (hi - r * (hi - lo), lo + r * (hi - lo));
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..100 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + r * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - r * (hi - lo);
            f1 = f(x1);
        }
    }
    f1.max(f2)
}

/// ‖f_ρ‖ in W_p^s = ‖(1 - Δ)^{s/2} f_ρ‖_p for s ∈ {0, 2, 4}, by Taylor-mode
/// differentiation of Φ ∘ g_ρ and quadrature over the collar.
pub fn collar_sobolev_norm_even(d: usize, p: f64, s: u32, rho: f64) -> Result<f64> {
    check_dim(d)?;
    check_rho(rho)?;
    if s % 2 == 1 || s as usize > jet::ORDER {
        return Err(Error::Domain(format!("smoothness {s} not in {{0, 2, 4}}")));
    }
    if !(p >= 1.0) {
        return Err(Error::Domain(format!("p = {p} must lie in [1, inf]")));
    }
    let g = CollarMap::new(rho);
    let (lo, hi) = (0.5 * rho, rho);
    let density = |th: f64| sobolev_density(d, s, &g, th);
    if p.is_infinite() {
        let m = 4000;
        let h = (hi - lo) / m as f64;
        let mut samples: Vec<(f64, f64)> =
            (0..=m).map(|i| lo + h * i as f64).map(|th| (density(th).abs(), th)).collect();
        samples.sort_by(|a, b| b.0.total_cmp(&a.0));
        let best = samples
            .iter()
            .take(8)
            .map(|&(_, th)| golden_max(&|x| density(x).abs(), (th - h).max(lo), (th + h).min(hi)))
            .fold(samples[0].0, f64::max);
        return Ok(best);
    }
    let mut integrand = |th: f64| density(th).abs().powf(p) * th.sin().powi(d as i32 - 1);
    let crude = GaussLegendre::new(64).integrate(lo, hi, &mut integrand);
    let v = adaptive_gauss_legendre(&mut integrand, lo, hi, 1e-12 * crude.abs().max(f64::MIN_POSITIVE))?;
    Ok((omega_ratio(d) * v).powf(1.0 / p))
}

/// Largest collar used for certificates; bigger holes still contain it.
pub const MAX_CERTIFICATE_RADIUS: f64 = PI / 2.0;

/// |∫ f_ρ| / ‖f_ρ‖_{W_p^s} for a hole of radius ρ, clamped to π/2.
pub fn certificate_for_radius(d: usize, p: f64, s: u32, rho: f64) -> Result<f64> {
    check_rho(rho)?;
    let rho = rho.min(MAX_CERTIFICATE_RADIUS);
    Ok(collar_integral(d, rho)?.abs() / collar_sobolev_norm_even(d, p, s, rho)?)
}

/// Lower bound on the worst-case error in W_p^s, s ∈ {2, 4}, from a
/// fooling function placed in the largest hole of `ps`.
pub fn wce_lower_certificate(ps: &PointSet<f64>, params: SobolevParams) -> Result<f64> {
    let d = ps.dim();
    check_dim(d)?;
    if params.d != d {
        return Err(Error::InvalidSpec(format!("parameters are for S^{}, points on S^{d}", params.d)));
    }
    SobolevParams::new(d, params.p, params.s)?;
    if params.s != 2.0 && params.s != 4.0 {
        return Err(Error::Domain(format!("certificates need s in {{2, 4}}, got {}", params.s)));
    }
    let rho = covering_radius(ps)?.radius;
    certificate_for_radius(d, params.p, params.s as u32, rho)
}

#[cfg(test)]
mod tests;
