use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use sphqmc::cli::{evaluate_wce, num, run_sweep, verify_theorems, Check, SweepSpec, Table, WceChoice};
use sphqmc::{
    covering_radius, generate, load, mesh_ratio, ordered_avoiding_packing, wce_circle_exact, write_points, Error,
    Family, GeneratorSpec, PointSet, QuadratureSpec, SobolevParams, WceResult,
};

const WCE_HEADER: [&str; 7] = ["N", "d", "p", "s", "value", "err_estimate", "method"];

#[derive(Parser)]
#[command(name = "sphqmc", version, about = "Point set quality and worst-case cubature errors on S^1 and S^2")]
struct Cli {
    /// Seed substituted into random families.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Kernel tolerance.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

/// Points from a file or from a generator.
#[derive(Args)]
struct Source {
    /// Point file; one unit vector per line.
    file: Option<PathBuf>,
    /// Family name, e.g. circle, fibonacci, random:7:2, cap:0.3:0,0,1:fibonacci.
    #[arg(long, conflicts_with = "file")]
    family: Option<Family>,
    /// Requested number of points.
    #[arg(long, requires = "family")]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a point set.
    Generate {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
    },
    /// Covering radius, separation and mesh ratio.
    Metrics {
        #[command(flatten)]
        src: Source,
    },
    /// Worst-case error in W_p^s.
    Wce {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        s: f64,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        /// auto, closed-form, exact or quadrature.
        #[arg(long, default_value = "auto")]
        method: WceChoice,
        /// Relative tolerance of the L_q quadrature.
        #[arg(long, default_value_t = 1e-8)]
        quad_tol: f64,
    },
    /// Greedy packing of empty caps, largest first.
    Holes {
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value_t = usize::MAX)]
        max: usize,
    },
    /// Sweep a family over point counts and Sobolev parameters.
    Sweep {
        /// key = value file with family, n, s, p, output, tol.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, conflicts_with = "config")]
        family: Option<Family>,
        /// Comma list or dyadic:LO:HI.
        #[arg(long, conflicts_with = "config")]
        n: Option<String>,
        /// Comma list.
        #[arg(long, conflicts_with = "config")]
        s: Option<String>,
        /// Comma list; inf allowed.
        #[arg(long, conflicts_with = "config")]
        p: Option<String>,
    },
    /// Run the built-in checks.
    Verify {
        /// Check to run; repeat for several. Default: all.
        #[arg(long = "check")]
        checks: Vec<Check>,
        /// Time budget in seconds; checks not started by then are skipped.
        #[arg(long, default_value_t = 3600)]
        budget: u64,
    },
    /// Exact worst-case error of N roots of unity minus M consecutive ones, p = 2.
    Circle {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long)]
        s: f64,
    },
}

enum Failure {
    Usage(String),
    Runtime(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSpec(_) | Error::Parse { .. } | Error::Domain(_) => Failure::Usage(e.to_string()),
            e => Failure::Runtime(e.to_string()),
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::Runtime(e.to_string())),
    }
}

fn seeded(family: Family, seed: Option<u64>) -> Family {
    match seed {
        Some(s) => family.reseeded(s),
        None => family,
    }
}

/// Points plus the family and count they came from, if generated.
type Loaded = (PointSet<f64>, Option<(Family, usize)>);

fn load_source(src: Source, seed: Option<u64>) -> Result<Loaded, Failure> {
    match (src.file, src.family, src.n) {
        (Some(path), None, None) => Ok((load(&path)?, None)),
        (None, Some(f), Some(n)) => {
            let f = seeded(f, seed);
            Ok((generate(&GeneratorSpec::new(f.clone(), n))?, Some((f, n))))
        }
        _ => Err(Failure::Usage("give a point file or --family with --n".into())),
    }
}

fn wce_row(n: usize, w: &WceResult) -> Vec<String> {
    vec![
        n.to_string(),
        w.params.d.to_string(),
        num(w.params.p),
        num(w.params.s),
        num(w.value),
        num(w.err_estimate),
        w.method.to_string(),
    ]
}

fn trim_list(v: &str) -> String {
    v.split(',').map(str::trim).collect::<Vec<_>>().join(",")
}

fn sweep_spec(
    config: Option<PathBuf>,
    family: Option<Family>,
    n: Option<String>,
    s: Option<String>,
    p: Option<String>,
    tol: f64,
) -> Result<SweepSpec, Failure> {
    let text = match config {
        Some(path) => read(&path)?,
        None => {
            let (Some(f), Some(n), Some(s)) = (family, n, s) else {
                return Err(Failure::Usage("give --config or --family, --n and --s".into()));
            };
            let mut t = format!("family = {f}\nn = {}\ns = {}\ntol = {tol:e}\n", trim_list(&n), trim_list(&s));
            if let Some(p) = p {
                t.push_str(&format!("p = {}\n", trim_list(&p)));
            }
            t
        }
    };
    Ok(SweepSpec::from_config(&text)?)
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Runtime(e.to_string()))?;
    }
    let out = &cli.out;
    match cli.cmd {
        Cmd::Generate { family, n } => {
            let ps: PointSet<f64> = generate(&GeneratorSpec::new(seeded(family, cli.seed), n))?;
            let mut buf = Vec::new();
            write_points(&ps, &mut buf)?;
            emit(out, &String::from_utf8_lossy(&buf))
        }
        Cmd::Metrics { src } => {
            let (ps, _) = load_source(src, cli.seed)?;
            let mut t = Table::new(&["N", "d", "covering", "separation", "mesh_ratio", "method"]);
            let row = if ps.len() >= 2 {
                let q = mesh_ratio(&ps)?;
                vec![num(q.covering), num(q.separation), num(q.mesh_ratio), q.method.to_string()]
            } else {
                let c = covering_radius(&ps)?;
                vec![num(c.radius), String::new(), String::new(), c.method.to_string()]
            };
            t.push([vec![ps.len().to_string(), ps.dim().to_string()], row].concat());
            emit(out, &t.to_csv_string())
        }
        Cmd::Wce { src, s, p, method, quad_tol } => {
            let (ps, origin) = load_source(src, cli.seed)?;
            let params = SobolevParams::new(ps.dim(), p, s)?;
            let quad = QuadratureSpec { rel_tol: quad_tol, ..QuadratureSpec::default() };
            let origin = origin.as_ref().map(|(f, n)| (f, *n));
            let w = evaluate_wce(&ps, origin, params, method, cli.tol, quad)?;
            let mut t = Table::new(&WCE_HEADER);
            t.push(wce_row(ps.len(), &w));
            emit(out, &t.to_csv_string())
        }
        Cmd::Holes { src, max } => {
            let (ps, _) = load_source(src, cli.seed)?;
            let mut t = Table::new(&["index", "radius", "cx", "cy", "cz"]);
            for (i, h) in ordered_avoiding_packing(&ps, max)?.iter().enumerate() {
                let c = |k: usize| h.center.get(k).copied().map(num).unwrap_or_default();
                t.push(vec![i.to_string(), num(h.radius), c(0), c(1), c(2)]);
            }
            emit(out, &t.to_csv_string())
        }
        Cmd::Sweep { config, family, n, s, p } => {
            let mut spec = sweep_spec(config, family, n, s, p, cli.tol)?;
            if let Some(seed) = cli.seed {
                spec.family = spec.family.reseeded(seed);
            }
            let path = out.clone().or(spec.output.take());
            let t = run_sweep(&spec)?;
            emit(&path, &t.to_csv_string())
        }
        Cmd::Verify { checks, budget } => {
            let which = if checks.is_empty() { Check::ALL.to_vec() } else { checks };
            let report = verify_theorems(&which, Duration::from_secs(budget));
            for o in &report.outcomes {
                println!("{o}");
                if let Some(t) = &o.table {
                    emit(out, &t.to_csv_string())?;
                }
            }
            for c in &report.skipped {
                println!("SKIP {c}: budget exhausted");
            }
            if report.incomplete {
                println!("report incomplete");
            }
            if report.all_passed() { Ok(()) } else { Err(Failure::Checks) }
        }
        Cmd::Circle { n, m, s } => {
            let w = wce_circle_exact(n, m, s)?;
            let mut t = Table::new(&WCE_HEADER);
            t.push(wce_row(n - m, &w));
            emit(out, &t.to_csv_string())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
