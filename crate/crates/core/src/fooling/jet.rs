//! Truncated Taylor series of order 4 for forward-mode differentiation.

use std::ops::{Add, Mul, Sub};

pub(crate) const ORDER: usize = 4;

/// Coefficients c_k of Σ c_k h^k, k ≤ 4.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Jet(pub [f64; ORDER + 1]);

impl Jet {
    pub fn constant(c: f64) -> Self {
        let mut j = [0.0; ORDER + 1];
        j[0] = c;
        Jet(j)
    }

    /// c0 + c1 h.
    pub fn linear(c0: f64, c1: f64) -> Self {
        let mut j = Jet::constant(c0);
        j.0[1] = c1;
        j
    }

    pub fn value(&self) -> f64 {
        self.0[0]
    }

    pub fn scale(self, a: f64) -> Self {
        Jet(self.0.map(|c| a * c))
    }

    /// d/dh; the top coefficient becomes unknown and is set to 0.
    pub fn derivative(self) -> Self {
        let mut out = [0.0; ORDER + 1];
        for k in 0..ORDER {
            out[k] = (k + 1) as f64 * self.0[k + 1];
        }
        Jet(out)
    }

    pub fn exp(self) -> Self {
        // g = e^f satisfies k g_k = Σ_{j=1..k} j f_j g_{k-j}
        let mut g = [0.0; ORDER + 1];
        g[0] = self.0[0].exp();
        for k in 1..=ORDER {
            let s: f64 = (1..=k).map(|j| j as f64 * self.0[j] * g[k - j]).sum();
            g[k] = s / k as f64;
        }
        Jet(g)
    }

    pub fn recip(self) -> Self {
        let mut g = [0.0; ORDER + 1];
        g[0] = 1.0 / self.0[0];
        for k in 1..=ORDER {
            let s: f64 = (1..=k).map(|j| self.0[j] * g[k - j]).sum();
            g[k] = -s * g[0];
        }
        Jet(g)
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        let mut r = self.0;
        for (a, b) in r.iter_mut().zip(o.0) {
            *a += b;
        }
        Jet(r)
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        self + o.scale(-1.0)
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        let mut r = [0.0; ORDER + 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate().take(ORDER + 1 - i) {
                r[i + j] += a * b;
            }
        }
        Jet(r)
    }
}
