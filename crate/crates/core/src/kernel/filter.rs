//! Smooth partition-of-unity filter and the filtered Bessel kernel.

use super::gegenbauer::{eigenvalue, harmonic_dimension, GegenbauerIter};
use crate::error::{Error, Result};

/// Filter h with support [1/2, 2], h(1) = 1 and h(t) + h(2t) = 1 on [1/2, 1].
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Filter;

fn bump_edge(u: f64) -> f64 {
    if u > 0.0 { (-1.0 / u).exp() } else { 0.0 }
}

/// Smooth step from 0 at u ≤ 0 to 1 at u ≥ 1 with ψ(u) + ψ(1-u) = 1.
fn smooth_step(u: f64) -> f64 {
    let a = bump_edge(u);
    let b = bump_edge(1.0 - u);
    a / (a + b)
}

impl Filter {
    pub fn eval(&self, t: f64) -> f64 {
        if t <= 0.5 || t >= 2.0 {
            0.0
        } else if t <= 1.0 {
            smooth_step(2.0 * t - 1.0)
        } else {
            smooth_step(2.0 - t)
        }
    }
}

pub fn make_filter() -> Filter {
    Filter
}

/// Σ_ℓ h(ℓ/T) (1+λ_ℓ)^{-s/2} Z(d,ℓ) P_ℓ^(d)(t); only T/2 < ℓ < 2T contribute.
pub fn filtered_bessel_kernel(h: &Filter, s: f64, d: usize, big_t: f64, t: f64) -> Result<f64> {
    if !(big_t >= 1.0) {
        return Err(Error::Domain(format!("T = {big_t} must be at least 1")));
    }
    if !(t.abs() <= 1.0) {
        return Err(Error::Domain(format!("|t| = {} exceeds 1", t.abs())));
    }
    if d == 0 {
        return Err(Error::UnsupportedDimension(0, "filtered kernels"));
    }
    let top = (2.0 * big_t).ceil() as usize;
    let mut acc = 0.0;
    for (l, p) in GegenbauerIter::new(d, t).enumerate().take(top + 1) {
        let w = h.eval(l as f64 / big_t);
        if w != 0.0 {
            acc += w * (1.0 + eigenvalue(d, l)).powf(-s / 2.0) * harmonic_dimension(d, l) as f64 * p;
        }
    }
    Ok(acc)
}
