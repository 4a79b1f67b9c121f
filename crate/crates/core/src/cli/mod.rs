//! Pieces shared by the command-line tool: CSV tables, slope fits, sweeps
//! and the built-in checks.

mod fit;
mod sweep;
mod table;
mod verify;

use std::str::FromStr;

pub use fit::{fit_log_log, fit_slope, SlopeFit, MIN_FIT_POINTS};
pub use sweep::{dyadic, run_sweep, SweepSpec, SWEEP_HEADER};
pub use table::{num, Table};
pub use verify::{run_check, verify_theorems, Check, CheckOutcome, Report, CAP_CONSTANT, COVERING_BOUND_HEADER};

use crate::error::{Error, Result};
use crate::kernel::{KernelSpec, SobolevParams};
use crate::wce::{wce_circle_exact, wce_lq, wce_p2, QuadratureSpec, WceResult};
use crate::{Family, PointSet};

/// Which worst-case error engine to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WceChoice {
    /// Exact formula when the family allows it, closed form for p = 2,
    /// quadrature otherwise.
    Auto,
    ClosedForm,
    Exact,
    Quadrature,
}

impl FromStr for WceChoice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(WceChoice::Auto),
            "closed-form" => Ok(WceChoice::ClosedForm),
            "exact" => Ok(WceChoice::Exact),
            "quadrature" => Ok(WceChoice::Quadrature),
            _ => Err(Error::InvalidSpec(format!("unknown method {s:?}"))),
        }
    }
}

/// Series kernel where available, truncated otherwise.
pub fn kernel_for(d: usize, order: f64, tol: f64) -> Result<KernelSpec> {
    match KernelSpec::series(d, order, tol) {
        Ok(k) if d <= 2 => Ok(k),
        _ => KernelSpec::truncated(d, order, tol),
    }
}

/// Block size M when the family is N roots of unity minus M consecutive ones.
fn circle_block(family: &Family) -> Option<usize> {
    match family {
        Family::EqualSpacedCircle => Some(0),
        Family::CircleRemoved { removed, consecutive: true } => Some(*removed),
        _ => None,
    }
}

/// Worst-case error of `ps` in W_p^s. `origin` names the family and the
/// requested count when known; it enables the exact circle formula.
pub fn evaluate_wce(
    ps: &PointSet<f64>,
    origin: Option<(&Family, usize)>,
    params: SobolevParams,
    choice: WceChoice,
    tol: f64,
    quad: QuadratureSpec,
) -> Result<WceResult> {
    if params.d != ps.dim() {
        return Err(Error::InvalidSpec(format!("parameters are for S^{}, points on S^{}", params.d, ps.dim())));
    }
    let block = origin.and_then(|(f, n)| circle_block(f).map(|m| (n, m)));
    let closed = || wce_p2(ps, params.s, &kernel_for(params.d, 2.0 * params.s, tol)?);
    match choice {
        WceChoice::Exact => {
            let (n, m) = block.ok_or_else(|| {
                Error::InvalidSpec("the exact formula needs equally spaced circle points".into())
            })?;
            if params.p != 2.0 {
                return Err(Error::InvalidSpec("the exact formula needs p = 2".into()));
            }
            wce_circle_exact(n, m, params.s)
        }
        WceChoice::ClosedForm => {
            if params.p != 2.0 {
                return Err(Error::InvalidSpec("the closed form needs p = 2".into()));
            }
            closed()
        }
        WceChoice::Quadrature => wce_lq(ps, params, &kernel_for(params.d, params.s, tol)?, quad),
        WceChoice::Auto if params.p == 2.0 => match block {
            Some((n, m)) => wce_circle_exact(n, m, params.s),
            None => closed(),
        },
        WceChoice::Auto => wce_lq(ps, params, &kernel_for(params.d, params.s, tol)?, quad),
    }
}
