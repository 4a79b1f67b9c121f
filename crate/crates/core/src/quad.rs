//! One-dimensional quadrature: Gauss–Legendre rules, adaptive Gauss–Legendre
//! and tanh-sinh for integrands with endpoint singularities.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Nodes and weights of the n-point Gauss–Legendre rule on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 1..n {
                let kf = k as f64;
                let p2 = ((2.0 * kf + 1.0) * z * p1 - kf * p0) / (kf + 1.0);
                p0 = p1;
                p1 = p2;
            }
            let p = p1;
            dp = n as f64 * (z * p - p0) / (z * z - 1.0);
            let dz = p / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    if n % 2 == 1 {
        x[n / 2] = 0.0;
    }
    (x, w)
}

/// A fixed Gauss–Legendre rule mapped to arbitrary intervals.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    x: Vec<f64>,
    w: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        let (x, w) = gauss_legendre(n);
        GaussLegendre { x, w }
    }

    pub fn integrate(&self, a: f64, b: f64, f: &mut impl FnMut(f64) -> f64) -> f64 {
        let c = 0.5 * (a + b);
        let h = 0.5 * (b - a);
        self.x.iter().zip(&self.w).map(|(x, w)| w * f(c + h * x)).sum::<f64>() * h
    }
}

/// Adaptive bisection with a 20-point rule until the two halves agree with
/// the whole interval to `tol` (absolute, split across subintervals).
pub fn adaptive_gauss_legendre(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    let rule = GaussLegendre::new(20);
    let whole = rule.integrate(a, b, f);
    adapt(&rule, f, a, b, whole, tol, 0)
}

fn adapt(
    rule: &GaussLegendre,
    f: &mut impl FnMut(f64) -> f64,
    a: f64,
    b: f64,
    whole: f64,
    tol: f64,
    depth: usize,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let left = rule.integrate(a, m, f);
    let right = rule.integrate(m, b, f);
    if (left + right - whole).abs() <= tol {
        return Ok(left + right);
    }
    if depth >= 50 {
        return Err(Error::NoConvergence {
            what: "adaptive Gauss-Legendre",
            detail: format!("interval [{a}, {b}] still off by {:e}", (left + right - whole).abs()),
        });
    }
    Ok(adapt(rule, f, a, m, left, tol / 2.0, depth + 1)? + adapt(rule, f, m, b, right, tol / 2.0, depth + 1)?)
}

/// Tanh-sinh quadrature on [a, b]. The integrand receives the abscissa and
/// its distances to a and to b, which stay accurate near the endpoints.
/// Levels are refined until successive estimates differ by at most
/// `rel_tol * |I| + abs_tol`.
pub fn tanh_sinh(
    f: &mut impl FnMut(f64, f64, f64) -> f64,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<(f64, f64)> {
    const T_MAX: f64 = 6.0;
    const MAX_LEVEL: usize = 12;
    let half = 0.5 * (b - a);
    if half == 0.0 {
        return Ok((0.0, 0.0));
    }
    let mut eval = |t: f64| {
        let u = 0.5 * PI * t.sinh();
        let w = 0.5 * PI * t.cosh() / u.cosh().powi(2);
        // 1 - tanh(u) = 2 / (1 + e^{2u})
        let to_b = half * 2.0 / (1.0 + (2.0 * u).exp());
        let to_a = half * 2.0 / (1.0 + (-2.0 * u).exp());
        let x = if u < 0.0 { a + to_a } else { b - to_b };
        if w == 0.0 || to_a <= 0.0 || to_b <= 0.0 {
            0.0
        } else {
            w * f(x, to_a, to_b)
        }
    };
    let mut h = 1.0;
    let mut sum = eval(0.0);
    let mut k = 1.0;
    while k * h <= T_MAX {
        sum += eval(k * h) + eval(-k * h);
        k += 1.0;
    }
    let mut est = sum * h * half;
    for _ in 1..=MAX_LEVEL {
        h /= 2.0;
        let mut k = 1.0;
        while k * h <= T_MAX {
            sum += eval(k * h) + eval(-k * h);
            k += 2.0;
        }
        let next = sum * h * half;
        let diff = (next - est).abs();
        est = next;
        if diff <= rel_tol * est.abs() + abs_tol {
            return Ok((est, diff));
        }
    }
    Err(Error::NoConvergence { what: "tanh-sinh quadrature", detail: format!("on [{a}, {b}]") })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_exactness() {
        for n in [1, 2, 5, 20, 64] {
            let (x, w) = gauss_legendre(n);
            assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-13);
            for deg in 0..(2 * n) {
                let got: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(deg as i32)).sum();
                let want = if deg % 2 == 1 { 0.0 } else { 2.0 / (deg as f64 + 1.0) };
                assert!((got - want).abs() < 1e-13, "n={n} deg={deg}");
            }
        }
    }

    #[test]
    fn adaptive_handles_kinks() {
        let v = adaptive_gauss_legendre(&mut |x: f64| (x - 0.3).abs(), -1.0, 1.0, 1e-12).unwrap();
        assert!((v - (0.5 * 1.3 * 1.3 + 0.5 * 0.7 * 0.7)).abs() < 1e-11);
    }

    #[test]
    fn tanh_sinh_endpoint_singularity() {
        let (v, _) = tanh_sinh(&mut |_, da, _| da.powf(-0.5), 0.0, 1.0, 1e-12, 0.0).unwrap();
        assert!((v - 2.0).abs() < 1e-11);
        let (v, _) = tanh_sinh(&mut |_, da, db| (da * db).ln(), 2.0, 3.0, 1e-12, 0.0).unwrap();
        assert!((v + 2.0).abs() < 1e-11);
        let (v, _) = tanh_sinh(&mut |x: f64, _, _| x.sin(), 0.0, PI, 1e-13, 0.0).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
    }
}
