//! Quality measures for point sets on the circle and the 2-sphere.

// `!(x > 0.0)` style guards are used on purpose: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod fooling;
pub mod geom;
pub mod kernel;
pub mod pointset;
pub mod quad;
pub mod wce;
pub mod scalar;

pub use error::{Error, Result};
pub use fooling::{
    bump, certificate_for_radius, collar_function, collar_integral, collar_sobolev_norm_even,
    wce_lower_certificate, CollarFunction,
};
pub use geom::{
    covering_radius, grid_covering_estimate, mesh_ratio, ordered_avoiding_packing, separation, Hole,
    QualityReport,
};
pub use pointset::{generate, load, save, write_points, Family, GeneratorSpec, PointSet};
pub use kernel::{KernelSpec, SobolevParams};
pub use scalar::{geodesic, Real};
pub use wce::{
    wce_circle_exact, wce_error_function, wce_lq, wce_p2, ErrorFunction, QuadratureSpec, WceMethod, WceResult,
};

pub type PointSet64 = PointSet<f64>;
pub type PointSet32 = PointSet<f32>;
