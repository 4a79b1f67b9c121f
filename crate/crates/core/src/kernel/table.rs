//! Piecewise Chebyshev interpolant of a centered kernel as a function of the
//! geodesic angle, on panels [π 2^{-k-1}, π 2^{-k}] graded towards θ = 0
//! where the kernel has its r^{s-d} or logarithmic singularity.

use std::f64::consts::PI;

use rayon::prelude::*;

use super::bessel::ZonalKernel;
use crate::scalar::geodesic;

const DEGREE: usize = 24;
const PANELS: usize = 46;

#[derive(Debug, Clone)]
pub struct KernelTable {
    coeffs: Vec<[f64; DEGREE + 1]>,
    diagonal: Option<f64>,
    theta_min: f64,
}

fn chebyshev_fit(lo: f64, hi: f64, f: impl Fn(f64) -> f64) -> [f64; DEGREE + 1] {
    let n = DEGREE + 1;
    let vals: Vec<f64> = (0..n)
        .map(|j| {
            let x = (PI * (j as f64 + 0.5) / n as f64).cos();
            f(0.5 * (lo + hi) + 0.5 * (hi - lo) * x)
        })
        .collect();
    let mut c = [0.0; DEGREE + 1];
    for (k, ck) in c.iter_mut().enumerate() {
        let s: f64 = vals
            .iter()
            .enumerate()
            .map(|(j, v)| v * (PI * k as f64 * (j as f64 + 0.5) / n as f64).cos())
            .sum();
        *ck = 2.0 * s / n as f64;
    }
    c[0] *= 0.5;
    c
}

fn clenshaw(c: &[f64; DEGREE + 1], x: f64) -> f64 {
    let (mut b1, mut b2) = (0.0, 0.0);
    for &ck in c[1..].iter().rev() {
        let b0 = 2.0 * x * b1 - b2 + ck;
        b2 = b1;
        b1 = b0;
    }
    x * b1 - b2 + c[0]
}

fn panel_bounds(k: usize) -> (f64, f64) {
    (PI * 0.5f64.powi(k as i32 + 1), PI * 0.5f64.powi(k as i32))
}

impl KernelTable {
    pub fn new(kernel: &ZonalKernel) -> Self {
        let coeffs = (0..PANELS)
            .into_par_iter()
            .map(|k| {
                let (lo, hi) = panel_bounds(k);
                chebyshev_fit(lo, hi, |t| kernel.centered_angle(t))
            })
            .collect();
        KernelTable { coeffs, diagonal: kernel.diagonal(), theta_min: panel_bounds(PANELS - 1).0 }
    }

    /// Interpolated kernel at angle θ in [0, π]. Angles below the finest
    /// panel are clamped to it, except θ = 0 which returns the diagonal
    /// value when it is finite.
    pub fn at_angle(&self, theta: f64) -> f64 {
        if theta == 0.0 {
            if let Some(d) = self.diagonal {
                return d;
            }
        }
        let theta = theta.clamp(self.theta_min, PI);
        // panel k holds θ/π in [2^{-k-1}, 2^{-k}]
        let k = ((-(theta / PI).log2()).floor().max(0.0) as usize).min(PANELS - 1);
        let (lo, hi) = panel_bounds(k);
        let x = ((2.0 * theta - lo - hi) / (hi - lo)).clamp(-1.0, 1.0);
        clenshaw(&self.coeffs[k], x)
    }

    /// Kernel between two unit vectors.
    pub fn between(&self, x: &[f64], y: &[f64]) -> f64 {
        self.at_angle(geodesic(x, y))
    }

    pub fn diagonal(&self) -> Option<f64> {
        self.diagonal
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::KernelSpec;

    #[test]
    fn interpolates_series_kernel() {
        for (d, s) in [(1, 1.5), (1, 3.0), (2, 3.0), (2, 1.5), (2, 2.0)] {
            let k = KernelSpec::series(d, s, 1e-12).unwrap().build().unwrap();
            let t = KernelTable::new(&k);
            for theta in [1e-9, 1e-4, 0.013, 0.5, 1.7, 3.0, PI] {
                let want = k.centered_angle(theta);
                let got = t.at_angle(theta);
                assert!((got - want).abs() < 1e-12 * (1.0 + want.abs()), "d={d} s={s} theta={theta}");
            }
        }
    }

    #[test]
    fn diagonal_is_exact() {
        let k = KernelSpec::series(1, 2.0, 1e-12).unwrap().build().unwrap();
        let t = KernelTable::new(&k);
        assert_eq!(t.at_angle(0.0), k.diagonal().unwrap());
    }
}
