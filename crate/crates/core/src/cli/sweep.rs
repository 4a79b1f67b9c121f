//! Parameter sweeps over a point family.

use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;

use super::table::{num, Table};
use super::{evaluate_wce, WceChoice};
use crate::error::{Error, Result};
use crate::fooling::wce_lower_certificate;
use crate::geom::{covering_radius, separation};
use crate::kernel::SobolevParams;
use crate::wce::QuadratureSpec;
use crate::{generate, Family, GeneratorSpec, PointSet};

pub const SWEEP_HEADER: [&str; 14] = [
    "family",
    "n",
    "N",
    "d",
    "p",
    "s",
    "covering",
    "separation",
    "mesh_ratio",
    "wce",
    "wce_err",
    "wce_method",
    "certificate",
    "error",
];

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub family: Family,
    /// Requested point counts, strictly increasing.
    pub n_values: Vec<usize>,
    pub params: Vec<SobolevParams>,
    pub output: Option<PathBuf>,
    /// Kernel tolerance.
    pub tol: f64,
    pub quad: QuadratureSpec,
}

/// 2^k for lo ≤ 2^k ≤ hi.
pub fn dyadic(lo: usize, hi: usize) -> Vec<usize> {
    let mut v = Vec::new();
    let mut n = lo.max(1).next_power_of_two();
    while n <= hi {
        v.push(n);
        n *= 2;
    }
    v
}

impl SweepSpec {
    pub fn new(family: Family, n_values: Vec<usize>, params: Vec<SobolevParams>) -> Self {
        SweepSpec { family, n_values, params, output: None, tol: 1e-10, quad: QuadratureSpec::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_values.len() < 4 {
            return Err(Error::InvalidSpec(format!(
                "a sweep needs at least 4 point counts, got {}",
                self.n_values.len()
            )));
        }
        if self.n_values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSpec("point counts must be strictly increasing".into()));
        }
        if self.params.is_empty() {
            return Err(Error::InvalidSpec("no Sobolev parameters given".into()));
        }
        let d = self.family.dim();
        if let Some(p) = self.params.iter().find(|p| p.d != d) {
            return Err(Error::InvalidSpec(format!("parameters for S^{} with a family on S^{d}", p.d)));
        }
        Ok(())
    }

    /// Reads `key = value` lines: `family`, `n` (comma list or
    /// `dyadic:LO:HI`), `s` and `p` (comma lists, all combinations),
    /// `output`, `tol`. `#` starts a comment.
    pub fn from_config(text: &str) -> Result<Self> {
        let mut family = None;
        let mut n_values = None;
        let (mut s_list, mut p_list) = (None, vec![2.0]);
        let mut output = None;
        let mut tol = 1e-10;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| Error::Parse { path: "<config>".into(), line: i + 1, msg };
            let (key, value) = line.split_once('=').ok_or_else(|| bad("expected key = value".into()))?;
            let value = value.trim();
            match key.trim() {
                "family" => family = Some(Family::from_str(value)?),
                "n" => n_values = Some(parse_counts(value).map_err(bad)?),
                "s" => s_list = Some(parse_list(value).map_err(bad)?),
                "p" => p_list = parse_list(value).map_err(bad)?,
                "output" => output = Some(PathBuf::from(value)),
                "tol" => tol = value.parse().map_err(|_| bad(format!("bad tolerance {value:?}")))?,
                other => return Err(bad(format!("unknown key {other:?}"))),
            }
        }
        let family = family.ok_or_else(|| Error::InvalidSpec("config lacks 'family'".into()))?;
        let n_values = n_values.ok_or_else(|| Error::InvalidSpec("config lacks 'n'".into()))?;
        let s_list = s_list.ok_or_else(|| Error::InvalidSpec("config lacks 's'".into()))?;
        let d = family.dim();
        let mut params = Vec::new();
        for &p in &p_list {
            for &s in &s_list {
                params.push(SobolevParams::new(d, p, s)?);
            }
        }
        let spec = SweepSpec { family, n_values, params, output, tol, quad: QuadratureSpec::default() };
        spec.validate()?;
        Ok(spec)
    }
}

fn parse_list(v: &str) -> std::result::Result<Vec<f64>, String> {
    v.split(',')
        .map(|x| {
            let x = x.trim();
            if x == "inf" { Ok(f64::INFINITY) } else { x.parse().map_err(|_| format!("bad number {x:?}")) }
        })
        .collect()
}

fn parse_counts(v: &str) -> std::result::Result<Vec<usize>, String> {
    if let Some(r) = v.strip_prefix("dyadic:") {
        let (lo, hi) = r.split_once(':').ok_or("expected dyadic:LO:HI")?;
        let lo = lo.trim().parse().map_err(|_| format!("bad count {lo:?}"))?;
        let hi = hi.trim().parse().map_err(|_| format!("bad count {hi:?}"))?;
        return Ok(dyadic(lo, hi));
    }
    v.split(',').map(|x| x.trim().parse().map_err(|_| format!("bad count {x:?}"))).collect()
}

struct Geometry {
    covering: f64,
    separation: Option<f64>,
}

fn geometry(ps: &PointSet<f64>) -> Result<Geometry> {
    let covering = covering_radius(ps)?.radius;
    let separation = if ps.len() >= 2 { Some(separation(ps)?) } else { None };
    Ok(Geometry { covering, separation })
}

fn sweep_row(family: &Family, n: usize, params: SobolevParams, tol: f64, quad: QuadratureSpec) -> Vec<String> {
    let mut row = vec![
        family.to_string(),
        n.to_string(),
        String::new(),
        params.d.to_string(),
        num(params.p),
        num(params.s),
    ];
    let fill = |row: &mut Vec<String>| -> Result<()> {
        let ps: PointSet<f64> = generate(&GeneratorSpec::new(family.clone(), n))?;
        row[2] = ps.len().to_string();
        let g = geometry(&ps)?;
        row.push(num(g.covering));
        row.push(g.separation.map(num).unwrap_or_default());
        row.push(g.separation.map(|sep| num(2.0 * g.covering / sep)).unwrap_or_default());
        let w = evaluate_wce(&ps, Some((family, n)), params, WceChoice::Auto, tol, quad)?;
        row.push(num(w.value));
        row.push(num(w.err_estimate));
        row.push(w.method.to_string());
        let cert = if (params.s == 2.0 || params.s == 4.0) && params.d <= 2 {
            num(wce_lower_certificate(&ps, params)?)
        } else {
            String::new()
        };
        row.push(cert);
        Ok(())
    };
    match fill(&mut row) {
        Ok(()) => row.push(String::new()),
        Err(e) => {
            row.resize(SWEEP_HEADER.len() - 1, String::new());
            row.push(e.to_string());
        }
    }
    row
}

/// One row per (N, params), in that order. A failing engine fills the
/// `error` column of its row; the rest of the sweep carries on.
pub fn run_sweep(spec: &SweepSpec) -> Result<Table> {
    spec.validate()?;
    let jobs: Vec<(usize, SobolevParams)> =
        spec.n_values.iter().flat_map(|&n| spec.params.iter().map(move |&p| (n, p))).collect();
    let rows: Vec<Vec<String>> =
        jobs.par_iter().map(|&(n, p)| sweep_row(&spec.family, n, p, spec.tol, spec.quad)).collect();
    let mut t = Table::new(&SWEEP_HEADER);
    for r in rows {
        t.push(r);
    }
    if let Some(path) = &spec.output {
        t.save(path)?;
    }
    Ok(t)
}
