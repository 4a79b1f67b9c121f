//! Least-squares power-law fits in log-log space.

use super::table::Table;
use crate::error::{Error, Result};

/// log y ≈ intercept + slope · log x.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlopeFit {
    pub slope: f64,
    pub intercept: f64,
    /// Coefficient of determination; 1 for an exact fit including constant y.
    pub r2: f64,
    pub points: usize,
}

pub const MIN_FIT_POINTS: usize = 4;

/// Fit over paired samples; both coordinates must be positive.
pub fn fit_log_log(xs: &[f64], ys: &[f64]) -> Result<SlopeFit> {
    if xs.len() != ys.len() {
        return Err(Error::InvalidSpec("x and y have different lengths".into()));
    }
    if xs.len() < MIN_FIT_POINTS {
        return Err(Error::TooFewPoints { needed: MIN_FIT_POINTS, got: xs.len() });
    }
    if let Some(v) = xs.iter().chain(ys).find(|v| !(**v > 0.0 && v.is_finite())) {
        return Err(Error::Domain(format!("log-log fit needs positive finite values, got {v}")));
    }
    let lx: Vec<f64> = xs.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|v| v.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ly.iter().map(|y| (y - my) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::Domain("all x values coincide".into()));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = lx.iter().zip(&ly).map(|(x, y)| (y - intercept - slope * x).powi(2)).sum();
    let r2 = if syy <= f64::EPSILON * n * my.abs().max(1.0) { 1.0 } else { (1.0 - ss_res / syy).clamp(0.0, 1.0) };
    let slope = if syy == 0.0 { 0.0 } else { slope };
    Ok(SlopeFit { slope, intercept, r2, points: xs.len() })
}

/// Fit `y` against `x` over the rows where both cells hold numbers.
pub fn fit_slope(table: &Table, x: &str, y: &str) -> Result<SlopeFit> {
    let (xs, ys): (Vec<f64>, Vec<f64>) = table
        .column(x)?
        .into_iter()
        .zip(table.column(y)?)
        .filter_map(|(a, b)| Some((a?, b?)))
        .unzip();
    fit_log_log(&xs, &ys)
}
