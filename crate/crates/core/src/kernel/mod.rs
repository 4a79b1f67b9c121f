//! Bessel kernels, Gegenbauer polynomials, Clausen functions and filters.

mod bessel;
mod clausen;
mod filter;
mod gegenbauer;
mod series;
mod special;
mod table;

pub use bessel::{
    bessel_kernel, bessel_kernel_centered, bessel_kernel_circle, conjugate, Evaluation, KernelSpec,
    KernelValue, SobolevParams, ZonalKernel, MAX_DEGREE,
};
pub use clausen::{clausen_cos, clausen_sin};
pub use filter::{filtered_bessel_kernel, make_filter, Filter};
pub use gegenbauer::{
    bessel_symbol, eigenvalue, gegenbauer_normalized, harmonic_dimension, omega_ratio, GegenbauerIter,
};
pub use series::SeriesKernel;
pub use special::{binomial_series, gamma, hurwitz_zeta, zeta};
pub use table::KernelTable;
