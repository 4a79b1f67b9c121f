//! Brute-force covering estimate: quasi-uniform candidate directions followed
//! by local pattern search on the distance to the nearest point.

use std::f64::consts::PI;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::scalar::{dot, geodesic, normalize, Real};
use crate::PointSet;

const REFINE_STEPS: usize = 40;
const REFINE_STARTS: usize = 8;
const MAX_CLOUD: usize = 200_000;

fn nearest<T: Real>(ps: &PointSet<T>, y: &[T]) -> T {
    ps.iter().map(|x| geodesic(x, y)).fold(T::infinity(), T::min)
}

/// Candidate directions, generated on demand so fine grids stay cheap.
pub(crate) enum Candidates {
    Circle(usize),
    Fibonacci(usize),
    Cloud(Vec<Vec<f64>>),
}

impl Candidates {
    pub(crate) fn new(dim: usize, resolution: f64) -> Self {
        match dim {
            1 => Candidates::Circle((2.0 * PI / resolution).ceil() as usize + 1),
            2 => Candidates::Fibonacci(((4.0 / resolution).powi(2)).ceil() as usize),
            d => {
                let m = ((3.0 / resolution).powi(d as i32).ceil() as usize).min(MAX_CLOUD);
                let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
                Candidates::Cloud(
                    (0..m)
                        .map(|_| {
                            let mut v: Vec<f64> =
                                (0..=d).map(|_| StandardNormal.sample(&mut rng)).collect();
                            normalize(&mut v);
                            v
                        })
                        .collect(),
                )
            }
        }
    }

    pub(crate) fn len(&self) -> usize {
        match self {
            Candidates::Circle(m) | Candidates::Fibonacci(m) => *m,
            Candidates::Cloud(v) => v.len(),
        }
    }

    pub(crate) fn fill<T: Real>(&self, j: usize, out: &mut [T]) {
        match self {
            Candidates::Circle(m) => {
                let a = 2.0 * PI * j as f64 / *m as f64;
                out[0] = T::lit(a.cos());
                out[1] = T::lit(a.sin());
            }
            Candidates::Fibonacci(m) => {
                let golden = (1.0 + 5f64.sqrt()) / 2.0;
                let z = 1.0 - (2 * j + 1) as f64 / *m as f64;
                let r = (1.0 - z * z).max(0.0).sqrt();
                let a = (j as f64 * 2.0 * PI / (golden * golden)) % (2.0 * PI);
                out[0] = T::lit(r * a.cos());
                out[1] = T::lit(r * a.sin());
                out[2] = T::lit(z);
            }
            Candidates::Cloud(v) => {
                out.iter_mut().zip(&v[j]).for_each(|(o, &x)| *o = T::lit(x));
            }
        }
    }
}

/// Orthonormal basis of the tangent space at unit vector `y`.
fn tangent_basis<T: Real>(y: &[T]) -> Vec<Vec<T>> {
    let n = y.len();
    let mut basis: Vec<Vec<T>> = Vec::with_capacity(n - 1);
    for k in 0..n {
        let mut v = vec![T::zero(); n];
        v[k] = T::one();
        let c = dot(&v, y);
        v.iter_mut().zip(y).for_each(|(a, &b)| *a = *a - c * b);
        for b in &basis {
            let c = dot(&v, b);
            v.iter_mut().zip(b).for_each(|(a, &b)| *a = *a - c * b);
        }
        let r = dot(&v, &v).sqrt();
        if r > T::lit(0.3) {
            v.iter_mut().for_each(|a| *a = *a / r);
            basis.push(v);
        }
        if basis.len() == n - 1 {
            break;
        }
    }
    basis
}

/// Pattern search for a local maximizer of the nearest-point distance.
fn refine<T: Real>(ps: &PointSet<T>, start: Vec<T>, step: T) -> (T, Vec<T>) {
    let mut y = start;
    let mut best = nearest(ps, &y);
    let mut h = step;
    let mut halvings = 0;
    while halvings < REFINE_STEPS {
        let basis = tangent_basis(&y);
        let mut moved = false;
        for b in &basis {
            for sign in [T::one(), -T::one()] {
                let mut z: Vec<T> = y.iter().zip(b).map(|(&a, &e)| a + sign * h * e).collect();
                normalize(&mut z);
                let v = nearest(ps, &z);
                if v > best {
                    best = v;
                    y = z;
                    moved = true;
                }
            }
        }
        if !moved {
            h = h / T::lit(2.0);
            halvings += 1;
        }
    }
    (best, y)
}

/// Largest nearest-point distance found over a candidate grid of spacing
/// at most `resolution`, polished by local search. Returns the value and
/// the maximizing direction.
pub(crate) fn estimate<T: Real>(ps: &PointSet<T>, resolution: f64) -> (T, Vec<T>) {
    let cands = Candidates::new(ps.dim(), resolution);
    let amb = ps.ambient();
    let better = |a: &(T, usize), b: &(T, usize)| {
        b.0.partial_cmp(&a.0)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.1.cmp(&b.1))
    };
    let keep = |mut v: Vec<(T, usize)>| {
        v.sort_by(better);
        v.truncate(REFINE_STARTS);
        v
    };
    let scored = (0..cands.len())
        .into_par_iter()
        .map_init(
            || vec![T::zero(); amb],
            |buf, i| {
                cands.fill(i, buf);
                (nearest(ps, buf), i)
            },
        )
        .fold(Vec::new, |mut acc, x| {
            acc.push(x);
            if acc.len() > 4 * REFINE_STARTS {
                acc = keep(acc);
            }
            acc
        })
        .reduce(Vec::new, |mut a, b| {
            a.extend(b);
            keep(a)
        });
    let scored = keep(scored);
    scored
        .into_par_iter()
        .map(|(_, i)| {
            let mut y = vec![T::zero(); amb];
            cands.fill(i, &mut y);
            refine(ps, y, T::lit(resolution))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold((T::neg_infinity(), Vec::new()), |acc, r| if r.0 > acc.0 { r } else { acc })
}
