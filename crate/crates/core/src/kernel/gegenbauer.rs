//! Normalized Gegenbauer polynomials and the harmonic constants of S^d.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// P_ℓ^(d)(t), normalized so that P_ℓ^(d)(1) = 1. Chebyshev polynomials for
/// d = 1, Legendre polynomials for d = 2.
pub fn gegenbauer_normalized<T: Real>(d: usize, l: usize, t: T) -> Result<T> {
    if d == 0 {
        return Err(Error::UnsupportedDimension(0, "gegenbauer polynomials"));
    }
    if !(t.abs() <= T::one()) {
        return Err(Error::Domain(format!("|t| = {} exceeds 1", t.abs())));
    }
    let mut it = GegenbauerIter::new(d, t);
    Ok(it.nth(l).unwrap_or_else(T::zero))
}

/// Yields P_0(t), P_1(t), ... by the three-term recurrence
/// (ℓ+d-1) P_{ℓ+1} = (2ℓ+d-1) t P_ℓ - ℓ P_{ℓ-1}.
#[derive(Debug, Clone)]
pub struct GegenbauerIter<T> {
    d: T,
    t: T,
    l: usize,
    prev: T,
    cur: T,
}

impl<T: Real> GegenbauerIter<T> {
    pub fn new(d: usize, t: T) -> Self {
        GegenbauerIter { d: T::lit(d as f64), t, l: 0, prev: T::zero(), cur: T::one() }
    }
}

impl<T: Real> Iterator for GegenbauerIter<T> {
    type Item = T;

    fn next(&mut self) -> Option<T> {
        let out = self.cur;
        let l = T::lit(self.l as f64);
        let one = T::one();
        let next = if self.l == 0 {
            self.t
        } else {
            ((l + l + self.d - one) * self.t * self.cur - l * self.prev) / (l + self.d - one)
        };
        self.prev = self.cur;
        self.cur = next;
        self.l += 1;
        Some(out)
    }
}

/// Z(d, ℓ), the dimension of degree-ℓ spherical harmonics on S^d.
pub fn harmonic_dimension(d: usize, l: usize) -> u128 {
    if l == 0 {
        return 1;
    }
    // Z = C(ℓ+d, d) - C(ℓ+d-2, d)
    binomial(l + d, d) - if l >= 2 { binomial(l + d - 2, d) } else { 0 }
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Laplace–Beltrami eigenvalue λ_ℓ = ℓ(ℓ+d-1).
pub fn eigenvalue(d: usize, l: usize) -> f64 {
    let l = l as f64;
    l * (l + d as f64 - 1.0)
}

/// Symbol (1+λ_ℓ)^{s/2} of the Bessel operator of order s.
pub fn bessel_symbol(d: usize, s: f64, l: usize) -> f64 {
    (1.0 + eigenvalue(d, l)).powf(s / 2.0)
}

/// ω_{d-1} / ω_d, the surface area ratio of consecutive unit spheres.
pub fn omega_ratio(d: usize) -> f64 {
    use super::special::gamma;
    let d = d as f64;
    gamma((d + 1.0) / 2.0) / (std::f64::consts::PI.sqrt() * gamma(d / 2.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degree_values() {
        let v = gegenbauer_normalized(1, 2, (std::f64::consts::PI / 3.0).cos()).unwrap();
        assert!((v + 0.5).abs() < 1e-15);
        assert!((gegenbauer_normalized(2, 2, 0.0f64).unwrap() + 0.5).abs() < 1e-16);
        assert!(gegenbauer_normalized(2, 3, 1.5f64).is_err());
    }

    #[test]
    fn chebyshev_identity() {
        for l in [0, 1, 5, 40, 300] {
            for phi in [0.0, 0.3, 1.7, 3.1] {
                let v: f64 = gegenbauer_normalized(1, l, f64::cos(phi)).unwrap();
                assert!((v - (l as f64 * phi).cos()).abs() < 1e-12, "l={l} phi={phi}");
            }
        }
    }

    #[test]
    fn value_at_one() {
        for d in 1..6 {
            for l in [0, 1, 7, 50] {
                assert!((gegenbauer_normalized(d, l, 1.0f64).unwrap() - 1.0).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(harmonic_dimension(2, 3), 7);
        assert_eq!(harmonic_dimension(1, 5), 2);
        assert_eq!(harmonic_dimension(3, 4), 25);
        assert_eq!(harmonic_dimension(4, 0), 1);
        assert_eq!(harmonic_dimension(1, 1), 2);
    }

    #[test]
    fn omega() {
        assert!((omega_ratio(1) - 1.0 / std::f64::consts::PI).abs() < 1e-15);
        assert!((omega_ratio(2) - 0.5).abs() < 1e-14);
    }
}
