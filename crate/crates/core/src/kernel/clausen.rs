//! Generalized Clausen functions and the related Legendre series
//! Σ (ℓ+½)^{-b} P_ℓ(cos θ), evaluated through their Mellin integrals
//!
//!   Σ_{ℓ≥1} ℓ^{-b} e^{iℓθ}   = Γ(b)^{-1} ∫ τ^{b-1} Σ e^{-ℓτ + iℓθ} dτ
//!   Σ_{ℓ≥0} (ℓ+½)^{-b} P_ℓ  = Γ(b)^{-1} ∫ τ^{b-1} (2cosh τ - 2cos θ)^{-1/2} dτ
//!
//! discretized by the trapezoid rule in x = ln τ, which converges
//! geometrically because the integrands are analytic in a strip of width
//! π/2 around the real x axis. The strip bound degrades like (cos w)^{-b},
//! so high orders are summed directly instead.

use std::f64::consts::PI;

use super::special::{gamma, zeta};
use crate::error::{Error, Result};

const STEP: f64 = 0.15;
/// Above this order the Clausen sums are summed term by term.
const DIRECT_ORDER: f64 = 6.0;

/// Γ(b)^{-1} ∫_0^∞ τ^{b-1} g(τ) dτ.
fn mellin(b: f64, theta: f64, g: impl Fn(f64) -> f64) -> f64 {
    let lo = theta.min(1.0).ln() - 40.0 / b;
    let hi = (80.0 + 20.0 * b).ln();
    let n = ((hi - lo) / STEP).ceil() as usize;
    let h = (hi - lo) / n as f64;
    let mut acc = 0.0;
    for k in 0..=n {
        let x = lo + k as f64 * h;
        let tau = x.exp();
        let w = if k == 0 || k == n { 0.5 } else { 1.0 };
        acc += w * (b * x).exp() * g(tau);
    }
    acc * h / gamma(b)
}

/// 2 cosh τ - 2 cos θ without cancellation.
fn gap(tau: f64, theta: f64) -> f64 {
    let a = (0.5 * tau).sinh();
    let c = (0.5 * theta).sin();
    4.0 * (a * a + c * c)
}

/// Σ_{ℓ≥1} ℓ^{-b} cos ℓθ for b > 0 and θ in (0, π].
pub(crate) fn cos_series(b: f64, theta: f64) -> f64 {
    let s2 = 2.0 * (0.5 * theta).sin().powi(2);
    mellin(b, theta, |tau| (-(-tau).exp_m1() - s2) / gap(tau, theta))
}

/// Σ_{ℓ≥1} ℓ^{-b} sin ℓθ for b > 0 and θ in (0, π].
pub(crate) fn sin_series(b: f64, theta: f64) -> f64 {
    let s = theta.sin();
    mellin(b, theta, |tau| s / gap(tau, theta))
}

/// Σ_{ℓ≥0} (ℓ+½)^{-b} P_ℓ(cos θ) for b > 0 and θ in (0, π].
pub(crate) fn legendre_series(b: f64, theta: f64) -> f64 {
    mellin(b, theta, |tau| gap(tau, theta).sqrt().recip())
}

/// Reduces φ to [0, π]; the flag is true when φ was reflected.
fn reduce(phi: f64) -> (f64, bool) {
    let r = phi.rem_euclid(2.0 * PI);
    if r > PI {
        (2.0 * PI - r, true)
    } else {
        (r, false)
    }
}

fn direct(z: f64, phi: f64, f: fn(f64) -> f64) -> f64 {
    let mut acc = 0.0;
    let mut l: f64 = 1.0;
    loop {
        let w: f64 = f64::powf(l, -z);
        acc += w * f(l * phi);
        if w < 1e-18 {
            return acc;
        }
        l += 1.0;
    }
}

fn check(z: f64, phi: f64) -> Result<()> {
    if !(z > 1.0) {
        return Err(Error::Domain(format!("Clausen functions need z > 1, got {z}")));
    }
    if !phi.is_finite() {
        return Err(Error::Domain("angle must be finite".into()));
    }
    Ok(())
}

/// Generalized Clausen cosine Σ_{ℓ≥1} cos(ℓφ)/ℓ^z, z > 1.
pub fn clausen_cos(z: f64, phi: f64) -> Result<f64> {
    check(z, phi)?;
    let (theta, _) = reduce(phi);
    if theta == 0.0 {
        return zeta(z);
    }
    if z >= DIRECT_ORDER {
        return Ok(direct(z, theta, f64::cos));
    }
    Ok(cos_series(z, theta))
}

/// Generalized Clausen sine Σ_{ℓ≥1} sin(ℓφ)/ℓ^z, z > 1.
pub fn clausen_sin(z: f64, phi: f64) -> Result<f64> {
    check(z, phi)?;
    let (theta, flipped) = reduce(phi);
    if theta == 0.0 || theta == PI {
        return Ok(0.0);
    }
    let v = if z >= DIRECT_ORDER { direct(z, theta, f64::sin) } else { sin_series(z, theta) };
    Ok(if flipped { -v } else { v })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_cos(z: f64, phi: f64, n: usize) -> f64 {
        (1..=n).map(|l| (l as f64 * phi).cos() / (l as f64).powf(z)).sum()
    }

    #[test]
    fn special_points() {
        assert!((clausen_cos(2.0, 0.0).unwrap() - PI * PI / 6.0).abs() < 1e-14);
        assert!((clausen_cos(2.0, PI).unwrap() + PI * PI / 12.0).abs() < 1e-13);
        for z in [1.1, 2.0, 5.5, 40.0] {
            assert_eq!(clausen_sin(z, 0.0).unwrap(), 0.0);
        }
        assert!(clausen_cos(1.0, 0.3).is_err());
    }

    #[test]
    fn closed_forms() {
        // Σ cos(ℓφ)/ℓ² = π²/6 - πφ/2 + φ²/4 on [0, 2π]
        for phi in [1e-6, 0.01, 0.5, 2.0, 3.0, 5.0] {
            let want = PI * PI / 6.0 - PI * phi / 2.0 + phi * phi / 4.0;
            assert!((clausen_cos(2.0, phi).unwrap() - want).abs() < 1e-13, "phi={phi}");
        }
        // Σ sin(ℓφ)/ℓ³ = (π²φ)/6 - πφ²/4 + φ³/12 on [0, 2π]
        for phi in [1e-4, 0.7, 2.5, 4.0] {
            let want = PI * PI * phi / 6.0 - PI * phi * phi / 4.0 + phi.powi(3) / 12.0;
            assert!((clausen_sin(3.0, phi).unwrap() - want).abs() < 1e-13, "phi={phi}");
        }
    }

    #[test]
    fn matches_direct_sums() {
        for z in [3.5, 7.0, 12.0, 31.0] {
            for phi in [0.1, 1.3, 2.9, -0.4] {
                let got = clausen_cos(z, phi).unwrap();
                let want = brute_cos(z, phi, 20000);
                assert!((got - want).abs() < 1e-12, "z={z} phi={phi} {got} {want}");
            }
        }
    }

    #[test]
    fn legendre_series_identity() {
        // b = 1: Σ P_ℓ(t) / (ℓ+½) via the direct recurrence with a long
        // partial sum is too slow; use b = 3 and compare with 2e4 terms.
        for theta in [0.2f64, 1.0, 2.5] {
            let t = theta.cos();
            let (mut p0, mut p1) = (1.0, t);
            let mut acc = 0.5f64.powf(-3.0) + p1 * 1.5f64.powf(-3.0);
            for l in 1..20000 {
                let lf = l as f64;
                let p2 = ((2.0 * lf + 1.0) * t * p1 - lf * p0) / (lf + 1.0);
                acc += p2 * (lf + 1.5).powf(-3.0);
                p0 = p1;
                p1 = p2;
            }
            assert!((legendre_series(3.0, theta) - acc).abs() < 1e-11, "theta={theta}");
        }
    }
}
