//! Full Bessel series on S^1 and S^2 without truncation.
//!
//! The coefficients a_ℓ = (1+λ_ℓ)^{-α/2} Z(d,ℓ) are split into a head
//! ℓ ≤ L0 summed directly and a tail expanded binomially in negative powers
//! of ℓ (d = 1) or ℓ+½ (d = 2). Tail terms of low order go through the
//! Clausen/Legendre Mellin integrals, the rest is a short direct sum.

use std::f64::consts::PI;

use super::clausen::{cos_series, legendre_series};
use super::special::{binomial_series, hurwitz_zeta};
use crate::error::{Error, Result};

const HEAD: usize = 10;
/// Tail powers at or above this order are summed term by term.
const DIRECT_POWER: f64 = 6.0;
const REMAINDER_TOL: f64 = 1e-17;
const MAX_TERMS: usize = 64;

/// Centered Bessel kernel 𝒦̃^(α) on S^d, d ∈ {1, 2}, as a function of the
/// geodesic angle.
#[derive(Debug, Clone)]
pub struct SeriesKernel {
    d: usize,
    alpha: f64,
    /// a_ℓ for ℓ = 1..=HEAD.
    head: Vec<f64>,
    /// (coefficient, power) of the tail terms handled by Mellin integrals.
    mellin: Vec<(f64, f64)>,
    /// Remainder coefficients for ℓ = HEAD+1 ..
    rem: Vec<f64>,
    diagonal: Option<f64>,
}

impl SeriesKernel {
    pub fn new(d: usize, alpha: f64) -> Result<Self> {
        match d {
            1 if alpha > 0.0 => {}
            2 if alpha > 1.0 => {}
            1 | 2 => {
                return Err(Error::Domain(format!(
                    "series kernel on S^{d} needs order > {}, got {alpha}",
                    d - 1
                )))
            }
            _ => return Err(Error::UnsupportedDimension(d, "series Bessel kernel")),
        }
        let sigma = alpha / 2.0;
        let binom = binomial_series(sigma, MAX_TERMS);
        // a_ℓ = Σ_m coef_m · v^{-(base + 2m)} with v = ℓ (d=1) or ℓ+½ (d=2)
        let (shift, base, scale): (f64, f64, f64) = if d == 1 { (0.0, alpha, 1.0) } else { (0.5, alpha - 1.0, 0.75) };
        let coef: Vec<f64> = binom
            .iter()
            .enumerate()
            .map(|(m, c)| 2.0 * c * scale.powi(m as i32))
            .collect();
        let a = |l: usize| {
            let lf = l as f64;
            if d == 1 {
                2.0 * (1.0 + lf * lf).powf(-sigma)
            } else {
                (2.0 * lf + 1.0) * (1.0 + lf * (lf + 1.0)).powf(-sigma)
            }
        };
        let head: Vec<f64> = (1..=HEAD).map(a).collect();
        let m0 = (0..MAX_TERMS)
            .find(|&m| base + 2.0 * m as f64 >= DIRECT_POWER)
            .unwrap_or(MAX_TERMS);
        let mellin: Vec<(f64, f64)> = (0..m0).map(|m| (coef[m], base + 2.0 * m as f64)).collect();

        let rem_coef = |l: usize| {
            let v = l as f64 + shift;
            let mut acc = 0.0;
            for (m, c) in coef.iter().enumerate().skip(m0) {
                let term = c * v.powf(-(base + 2.0 * m as f64));
                acc += term;
                if term.abs() < 1e-20 * acc.abs() {
                    break;
                }
            }
            acc
        };
        let b0 = base + 2.0 * m0 as f64;
        let c0 = coef[m0].abs().max(1e-300);
        let lmax = ((c0 / ((b0 - 1.0) * REMAINDER_TOL)).powf(1.0 / (b0 - 1.0)).ceil() as usize).max(HEAD + 1);
        let rem: Vec<f64> = (HEAD + 1..=lmax).map(rem_coef).collect();

        let mut k = SeriesKernel { d, alpha, head, mellin, rem, diagonal: None };
        k.diagonal = k.diagonal_value();
        Ok(k)
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> f64 {
        self.alpha
    }

    fn shift(&self) -> f64 {
        if self.d == 1 { 0.0 } else { 0.5 }
    }

    /// Degree-0 and degree-ℓ ≤ HEAD indices included in the Mellin sums
    /// that must be subtracted again.
    fn head_range(&self) -> std::ops::RangeInclusive<usize> {
        if self.d == 1 { 1..=HEAD } else { 0..=HEAD }
    }

    fn diagonal_value(&self) -> Option<f64> {
        let mut acc: f64 = self.head.iter().sum();
        for &(c, b) in &self.mellin {
            if b <= 1.0 {
                return None;
            }
            acc += c * hurwitz_zeta(b, HEAD as f64 + 1.0 + self.shift()).ok()?;
        }
        acc += self.rem.iter().sum::<f64>();
        Some(acc)
    }

    /// 𝒦̃(1), or `None` when the series diverges on the diagonal.
    pub fn diagonal(&self) -> Option<f64> {
        self.diagonal
    }

    /// 𝒦̃(cos θ) for θ in [0, π]. Infinite at θ = 0 when the diagonal
    /// diverges.
    pub fn at_angle(&self, theta: f64) -> f64 {
        let theta = theta.abs().min(PI);
        if theta == 0.0 {
            return self.diagonal.unwrap_or(f64::INFINITY);
        }
        let t = theta.cos();
        let n = HEAD + self.rem.len();
        let mut p = Vec::with_capacity(n + 1);
        p.push(1.0);
        p.push(t);
        let d = self.d as f64;
        for l in 1..n {
            let lf = l as f64;
            let next = ((2.0 * lf + d - 1.0) * t * p[l] - lf * p[l - 1]) / (lf + d - 1.0);
            p.push(next);
        }
        let mut acc = 0.0;
        for (i, a) in self.head.iter().enumerate() {
            acc += a * p[i + 1];
        }
        for &(c, b) in &self.mellin {
            let full = if self.d == 1 { cos_series(b, theta) } else { legendre_series(b, theta) };
            let partial: f64 = self
                .head_range()
                .map(|l| (l as f64 + self.shift()).powf(-b) * p[l])
                .sum();
            acc += c * (full - partial);
        }
        // smallest terms first
        for (i, r) in self.rem.iter().enumerate().rev() {
            acc += r * p[HEAD + 1 + i];
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Mean of the partial sums over the second half of 1..n, which damps the
    // oscillating tail of slowly converging series.
    fn brute(d: usize, alpha: f64, theta: f64, n: usize) -> f64 {
        let t = theta.cos();
        let (mut p0, mut p1) = (1.0, t);
        let df = d as f64;
        let a = |l: f64| (1.0 + l * (l + df - 1.0)).powf(-alpha / 2.0) * if d == 1 { 2.0 } else { 2.0 * l + 1.0 };
        let mut acc = a(1.0) * p1;
        let mut comp = 0.0;
        let (mut mean, mut count, mut base) = (0.0, 0.0, None);
        for l in 1..n {
            let lf = l as f64;
            let p2 = if d == 1 {
                ((lf + 1.0) * theta).cos()
            } else {
                ((2.0 * lf + df - 1.0) * t * p1 - lf * p0) / (lf + df - 1.0)
            };
            // Neumaier summation
            let x = a(lf + 1.0) * p2;
            let sum = acc + x;
            comp += if acc.abs() >= x.abs() { (acc - sum) + x } else { (x - sum) + acc };
            acc = sum;
            p0 = p1;
            p1 = p2;
            if 2 * l >= n {
                let b = *base.get_or_insert(acc + comp);
                mean += (acc - b) + comp;
                count += 1.0;
            }
        }
        base.unwrap_or(0.0) + mean / count
    }

    #[test]
    fn circle_closed_forms() {
        let k = SeriesKernel::new(1, 2.0).unwrap();
        let pi = PI;
        assert!((k.diagonal().unwrap() - (pi / pi.tanh() - 1.0)).abs() < 1e-13);
        assert!((k.at_angle(pi) - (pi / pi.sinh() - 1.0)).abs() < 1e-13);
        // Σ 2cos(ℓφ)/(1+ℓ²) = π cosh(π-φ)/sinh π - 1 on [0, 2π]
        for phi in [1e-9, 1e-3, 0.4, 1.9, 3.0] {
            let want = pi * (pi - phi).cosh() / pi.sinh() - 1.0;
            assert!((k.at_angle(phi) - want).abs() < 1e-13, "phi={phi}");
        }
    }

    #[test]
    fn matches_brute_force_on_sphere() {
        for alpha in [1.5, 3.0, 4.0, 7.3] {
            let k = SeriesKernel::new(2, alpha).unwrap();
            for theta in [0.3, 1.1, 2.8] {
                let want = brute(2, alpha, theta, 200_000);
                let tol = if alpha < 3.0 { 1e-8 } else { 1e-11 };
                assert!((k.at_angle(theta) - want).abs() < tol, "alpha={alpha} theta={theta} {} {want}", k.at_angle(theta));
            }
        }
    }

    #[test]
    fn matches_brute_force_on_circle() {
        for alpha in [1.25, 3.0, 6.5] {
            let k = SeriesKernel::new(1, alpha).unwrap();
            for theta in [0.05, 1.0, 3.1] {
                let tol = if alpha < 2.0 { 1e-8 } else { 1e-12 };
                let want = brute(1, alpha, theta, 400_000);
                assert!((k.at_angle(theta) - want).abs() < tol, "alpha={alpha} theta={theta} {} {want}", k.at_angle(theta));
            }
        }
    }

    #[test]
    fn sphere_diagonal() {
        // a_ℓ summed directly with a Hurwitz tail is the oracle here
        let alpha = 4.0;
        let k = SeriesKernel::new(2, alpha).unwrap();
        let mut want = 0.0;
        for l in 1..2_000_000u64 {
            let lf = l as f64;
            want += (2.0 * lf + 1.0) * (1.0 + lf * (lf + 1.0)).powf(-2.0);
        }
        assert!((k.diagonal().unwrap() - want).abs() < 1e-9, "{:?} {want}", k.diagonal());
        assert!(SeriesKernel::new(2, 2.0).unwrap().diagonal().is_none());
    }

    #[test]
    fn continuity_near_diagonal() {
        let k = SeriesKernel::new(2, 3.0).unwrap();
        let d = k.diagonal().unwrap();
        assert!((k.at_angle(1e-10) - d).abs() < 1e-8);
    }

    #[test]
    fn rejects_small_orders() {
        assert!(SeriesKernel::new(2, 1.0).is_err());
        assert!(SeriesKernel::new(1, 0.0).is_err());
        assert!(SeriesKernel::new(3, 5.0).is_err());
    }
}
