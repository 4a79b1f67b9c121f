use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point scalar used by the geometric layer: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Lossy conversion from `f64`.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar converts to f64")
    }

    /// Tolerance on |x| - 1 accepted for points stored in a point set.
    fn unit_tol() -> Self {
        Self::lit(1e-12).max(Self::epsilon() * Self::lit(32.0))
    }
}

impl Real for f32 {}
impl Real for f64 {}

pub(crate) fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (&x, &y)| acc + x * y)
}

pub(crate) fn norm<T: Real>(a: &[T]) -> T {
    dot(a, a).sqrt()
}

/// Geodesic distance between two unit vectors, accurate for nearby and
/// nearly antipodal pairs alike.
pub fn geodesic<T: Real>(a: &[T], b: &[T]) -> T {
    let mut diff = T::zero();
    let mut sum = T::zero();
    for (&x, &y) in a.iter().zip(b) {
        diff = diff + (x - y) * (x - y);
        sum = sum + (x + y) * (x + y);
    }
    T::lit(2.0) * diff.sqrt().atan2(sum.sqrt())
}

pub(crate) fn normalize<T: Real>(v: &mut [T]) {
    let n = norm(v);
    if n > T::zero() {
        v.iter_mut().for_each(|x| *x = *x / n);
    }
}

pub(crate) fn cross<T: Real>(a: &[T], b: &[T]) -> [T; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}
