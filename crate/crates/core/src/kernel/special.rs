//! Zeta functions and binomial series coefficients.

use crate::error::{Error, Result};

/// B_2, B_4, ..., B_20.
const BERNOULLI: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

/// Hurwitz zeta Σ_{k≥0} (k+q)^{-s} for s > 1, q > 0, by direct summation up
/// to a shifted argument followed by Euler–Maclaurin.
pub fn hurwitz_zeta(s: f64, q: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(Error::Domain(format!("zeta needs s > 1, got {s}")));
    }
    if !(q > 0.0) {
        return Err(Error::Domain(format!("hurwitz zeta needs q > 0, got {q}")));
    }
    let shift = (20.0 + s - q).max(0.0).ceil() as usize;
    let mut head = 0.0;
    for k in (0..shift).rev() {
        head += (q + k as f64).powf(-s);
    }
    let a = q + shift as f64;
    let mut tail = a.powf(1.0 - s) / (s - 1.0) + 0.5 * a.powf(-s);
    // term_j = B_2j / (2j)! * s(s+1)...(s+2j-2) * a^{-s-2j+1}
    let mut rising = s;
    let mut fact = 2.0;
    let mut apow = a.powf(-s - 1.0);
    for (j, b) in BERNOULLI.iter().enumerate() {
        let term = b / fact * rising * apow;
        tail += term;
        if term.abs() < 1e-18 * tail.abs() {
            break;
        }
        let k = 2.0 * j as f64 + 2.0;
        rising *= (s + k - 1.0) * (s + k);
        fact *= (k + 1.0) * (k + 2.0);
        apow /= a * a;
    }
    Ok(head + tail)
}

/// Riemann zeta for s > 1.
pub fn zeta(s: f64) -> Result<f64> {
    hurwitz_zeta(s, 1.0)
}

/// Coefficients of (1 + x)^{-σ} = Σ_m c_m x^m, i.e. c_m = (-1)^m (σ)_m / m!.
pub fn binomial_series(sigma: f64, terms: usize) -> Vec<f64> {
    let mut c = Vec::with_capacity(terms);
    let mut v = 1.0;
    for m in 0..terms {
        c.push(v);
        v *= -(sigma + m as f64) / (m as f64 + 1.0);
    }
    c
}

pub fn gamma(x: f64) -> f64 {
    statrs::function::gamma::gamma(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn zeta_values() {
        assert!((zeta(2.0).unwrap() - PI * PI / 6.0).abs() < 1e-15);
        assert!((zeta(4.0).unwrap() - PI.powi(4) / 90.0).abs() < 1e-15);
        assert!((zeta(1.5).unwrap() - 2.612_375_348_685_488).abs() < 1e-14);
        assert!((zeta(1.0001).unwrap() - 10_000.577_222_946_9).abs() < 1e-6);
        assert!((zeta(40.0).unwrap() - 1.0).abs() < 1e-11);
        assert!(zeta(1.0).is_err());
    }

    #[test]
    fn hurwitz_half() {
        for s in [1.5, 2.0, 3.3] {
            let h = hurwitz_zeta(s, 0.5).unwrap();
            let want = (2f64.powf(s) - 1.0) * zeta(s).unwrap();
            assert!((h - want).abs() < 1e-13 * want);
        }
    }

    #[test]
    fn binomial() {
        let c = binomial_series(1.0, 4);
        assert_eq!(c, vec![1.0, -1.0, 1.0, -1.0]);
        let c = binomial_series(0.5, 3);
        assert!((c[1] + 0.5).abs() < 1e-16 && (c[2] - 0.375).abs() < 1e-16);
    }
}
