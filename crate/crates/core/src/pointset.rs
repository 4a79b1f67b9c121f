//! Point configurations on S^d: construction, generators and the plain-text
//! point file format.
//!
//! A point file is UTF-8 text, one unit vector per line written as `d + 1`
//! whitespace separated decimals. Lines starting with `#` are comments. The
//! sphere dimension is taken from the first data line.

use std::fs;
use std::io;
use std::path::Path;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::scalar::{dot, norm, Real};

/// Rows further than this from unit norm are rejected by [`load`].
pub const LOAD_REJECT_TOL: f64 = 1e-6;

/// An ordered, non-empty set of unit vectors in R^(d+1).
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet<T> {
    dim: usize,
    coords: Vec<T>,
    label: String,
}

impl<T: Real> PointSet<T> {
    /// Builds a point set, checking unit norms and rejecting bitwise duplicates.
    pub fn new(dim: usize, points: Vec<Vec<T>>, label: impl Into<String>) -> Result<Self> {
        Self::build(dim, points, label.into(), false)
    }

    /// Same as [`PointSet::new`] but keeps repeated points.
    pub fn with_duplicates(dim: usize, points: Vec<Vec<T>>, label: impl Into<String>) -> Result<Self> {
        Self::build(dim, points, label.into(), true)
    }

    fn build(dim: usize, points: Vec<Vec<T>>, label: String, allow_duplicates: bool) -> Result<Self> {
        if dim == 0 {
            return Err(Error::UnsupportedDimension(0, "point sets"));
        }
        if points.is_empty() {
            return Err(Error::EmptySet);
        }
        let amb = dim + 1;
        let mut coords = Vec::with_capacity(points.len() * amb);
        for (i, p) in points.iter().enumerate() {
            if p.len() != amb {
                return Err(Error::InvalidSpec(format!(
                    "point {i} has {} coordinates, expected {amb}",
                    p.len()
                )));
            }
            let n = norm(p);
            if !n.is_finite() || (n - T::one()).abs() > T::unit_tol() {
                return Err(Error::NotUnit { index: i, norm: n.as_f64() });
            }
            coords.extend_from_slice(p);
        }
        let ps = PointSet { dim, coords, label };
        if !allow_duplicates {
            if let Some(i) = ps.find_duplicate() {
                return Err(Error::DuplicatePoint(i));
            }
        }
        Ok(ps)
    }

    fn find_duplicate(&self) -> Option<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&a, &b| {
            self.point(a)
                .iter()
                .zip(self.point(b))
                .map(|(x, y)| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        idx.windows(2)
            .find(|w| self.point(w[0]) == self.point(w[1]))
            .map(|w| w[0].max(w[1]))
    }

    /// Sphere dimension d.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Ambient dimension d + 1.
    pub fn ambient(&self) -> usize {
        self.dim + 1
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.ambient()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn point(&self, i: usize) -> &[T] {
        let a = self.ambient();
        &self.coords[i * a..(i + 1) * a]
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[T]> + '_ {
        self.coords.chunks_exact(self.ambient())
    }

    pub fn to_vecs(&self) -> Vec<Vec<T>> {
        self.iter().map(<[T]>::to_vec).collect()
    }

    /// Applies the row-major (d+1)x(d+1) matrix `q` to every point. `q` is
    /// expected to be orthogonal; results are renormalized.
    pub fn transformed(&self, q: &[T]) -> Result<Self> {
        let a = self.ambient();
        if q.len() != a * a {
            return Err(Error::Domain(format!("matrix must be {a}x{a}")));
        }
        let pts = self
            .iter()
            .map(|p| {
                let mut v: Vec<T> = (0..a).map(|r| dot(&q[r * a..(r + 1) * a], p)).collect();
                crate::scalar::normalize(&mut v);
                v
            })
            .collect();
        Self::with_duplicates(self.dim, pts, self.label.clone())
    }

    /// Converts to another scalar type.
    pub fn cast<U: Real>(&self) -> PointSet<U> {
        PointSet {
            dim: self.dim,
            coords: self.coords.iter().map(|&x| U::lit(x.as_f64())).collect(),
            label: self.label.clone(),
        }
    }
}

/// Point families that can be generated.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// `n` equally spaced points on S^1 at angles 2πj/n.
    EqualSpacedCircle,
    /// Roots of unity with `removed` points omitted: indices 0..removed when
    /// `consecutive`, otherwise indices spread evenly around the circle.
    CircleRemoved { removed: usize, consecutive: bool },
    /// Golden-angle spherical Fibonacci lattice on S^2.
    FibonacciS2,
    /// Independent uniform points on S^dim.
    RandomUniform { seed: u64, dim: usize },
    /// Recursive zonal equal-area partition of S^2, one point per region.
    EqualAreaS2,
    /// `base` with every point in the closed cap around `center` removed.
    CapDepleted { base: Box<Family>, center: Vec<f64>, radius: f64 },
}

/// A family together with the requested point count.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
}

impl GeneratorSpec {
    pub fn new(family: Family, n: usize) -> Self {
        GeneratorSpec { family, n }
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidSpec("n must be positive".into()));
        }
        validate_family(&self.family, self.n)
    }
}

fn validate_family(f: &Family, n: usize) -> Result<()> {
    match f {
        Family::CircleRemoved { removed, .. } if *removed >= n => Err(Error::InvalidSpec(format!(
            "cannot remove {removed} of {n} points"
        ))),
        Family::RandomUniform { dim: 0, .. } => Err(Error::InvalidSpec("dim must be >= 1".into())),
        Family::CapDepleted { base, center, radius } => {
            if !(*radius > 0.0 && *radius < std::f64::consts::PI) {
                return Err(Error::InvalidSpec(format!("cap radius {radius} not in (0, pi)")));
            }
            let cn = center.iter().map(|x| x * x).sum::<f64>().sqrt();
            if (cn - 1.0).abs() > 1e-9 {
                return Err(Error::InvalidSpec("cap center must be a unit vector".into()));
            }
            validate_family(base, n)
        }
        _ => Ok(()),
    }
}

impl Family {
    /// Dimension d of the sphere S^d the family lives on.
    pub fn dim(&self) -> usize {
        match self {
            Family::EqualSpacedCircle | Family::CircleRemoved { .. } => 1,
            Family::FibonacciS2 | Family::EqualAreaS2 => 2,
            Family::RandomUniform { dim, .. } => *dim,
            Family::CapDepleted { base, .. } => base.dim(),
        }
    }

    /// The same family with every random seed replaced by `seed`.
    pub fn reseeded(&self, seed: u64) -> Family {
        match self {
            Family::RandomUniform { dim, .. } => Family::RandomUniform { seed, dim: *dim },
            Family::CapDepleted { base, center, radius } => {
                Family::CapDepleted { base: Box::new(base.reseeded(seed)), center: center.clone(), radius: *radius }
            }
            other => other.clone(),
        }
    }

    fn name(&self) -> String {
        match self {
            Family::EqualSpacedCircle => "circle".into(),
            Family::CircleRemoved { removed, consecutive: true } => format!("circle-removed:{removed}"),
            Family::CircleRemoved { removed, consecutive: false } => {
                format!("circle-removed:{removed}:spread")
            }
            Family::FibonacciS2 => "fibonacci".into(),
            Family::RandomUniform { seed, dim } => format!("random:{seed}:{dim}"),
            Family::EqualAreaS2 => "equal-area".into(),
            Family::CapDepleted { base, center, radius } => {
                let c: Vec<String> = center.iter().map(|x| x.to_string()).collect();
                format!("cap:{radius}:{}:{}", c.join(","), base.name())
            }
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.name())
    }
}

/// Parses the textual family names used by the CLI:
/// `circle`, `circle-removed:M[:spread]`, `fibonacci`, `random:SEED[:DIM]`,
/// `equal-area`, `cap:RADIUS:CX,CY,CZ:BASE`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSpec(format!("unknown family '{s}'"));
        let mut parts = s.splitn(2, ':');
        let head = parts.next().unwrap_or_default();
        let rest = parts.next();
        Ok(match (head, rest) {
            ("circle", None) => Family::EqualSpacedCircle,
            ("fibonacci", None) => Family::FibonacciS2,
            ("equal-area", None) => Family::EqualAreaS2,
            ("circle-removed", Some(r)) => {
                let mut it = r.split(':');
                let removed = it.next().and_then(|m| m.parse().ok()).ok_or_else(bad)?;
                let consecutive = match it.next() {
                    None => true,
                    Some("spread") => false,
                    Some(_) => return Err(bad()),
                };
                Family::CircleRemoved { removed, consecutive }
            }
            ("random", Some(r)) => {
                let mut it = r.split(':');
                let seed = it.next().and_then(|m| m.parse().ok()).ok_or_else(bad)?;
                let dim = match it.next() {
                    None => 2,
                    Some(d) => d.parse().map_err(|_| bad())?,
                };
                Family::RandomUniform { seed, dim }
            }
            ("cap", Some(r)) => {
                let mut it = r.splitn(3, ':');
                let radius: f64 = it.next().and_then(|m| m.parse().ok()).ok_or_else(bad)?;
                let center = it
                    .next()
                    .ok_or_else(bad)?
                    .split(',')
                    .map(|c| c.parse::<f64>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>>>()?;
                let base = Box::new(it.next().ok_or_else(bad)?.parse()?);
                Family::CapDepleted { base, center, radius }
            }
            _ => return Err(bad()),
        })
    }
}

/// Generates the configuration described by `spec`.
pub fn generate<T: Real>(spec: &GeneratorSpec) -> Result<PointSet<T>> {
    spec.validate()?;
    let (dim, pts) = raw_points(&spec.family, spec.n)?;
    let pts = pts
        .into_iter()
        .map(|p| p.into_iter().map(T::lit).collect())
        .collect();
    PointSet::new(dim, pts, format!("{}-{}", spec.family, spec.n))
}

fn raw_points(f: &Family, n: usize) -> Result<(usize, Vec<Vec<f64>>)> {
    use std::f64::consts::PI;
    let circle = |j: usize| {
        let a = 2.0 * PI * j as f64 / n as f64;
        vec![a.cos(), a.sin()]
    };
    Ok(match f {
        Family::EqualSpacedCircle => (1, (0..n).map(circle).collect()),
        Family::CircleRemoved { removed, consecutive } => {
            let mut skip = vec![false; n];
            for k in 0..*removed {
                let j = if *consecutive { k } else { k * n / removed };
                skip[j] = true;
            }
            (1, (0..n).filter(|&j| !skip[j]).map(circle).collect())
        }
        Family::FibonacciS2 => (2, fibonacci(n)),
        Family::EqualAreaS2 => (2, equal_area(n)),
        Family::RandomUniform { seed, dim } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let pts = (0..n)
                .map(|_| loop {
                    let mut v: Vec<f64> = (0..=*dim).map(|_| StandardNormal.sample(&mut rng)).collect();
                    let r = norm(&v);
                    if r > 1e-8 {
                        v.iter_mut().for_each(|x| *x /= r);
                        break v;
                    }
                })
                .collect();
            (*dim, pts)
        }
        Family::CapDepleted { base, center, radius } => {
            let (dim, pts) = raw_points(base, n)?;
            if center.len() != dim + 1 {
                return Err(Error::InvalidSpec(format!(
                    "cap center has {} coordinates, base lives in R^{}",
                    center.len(),
                    dim + 1
                )));
            }
            let c = radius.cos();
            let kept: Vec<_> = pts.into_iter().filter(|p| dot(p, center) < c).collect();
            if kept.is_empty() {
                return Err(Error::InvalidSpec("cap removes every point".into()));
            }
            (dim, kept)
        }
    })
}

fn fibonacci(n: usize) -> Vec<Vec<f64>> {
    let golden = (1.0 + 5f64.sqrt()) / 2.0;
    let step = 2.0 * std::f64::consts::PI / (golden * golden);
    (0..n)
        .map(|j| {
            let z = 1.0 - (2 * j + 1) as f64 / n as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let lon = (j as f64 * step) % (2.0 * std::f64::consts::PI);
            vec![r * lon.cos(), r * lon.sin(), z]
        })
        .collect()
}

/// Zonal equal-area partition: two polar caps plus collars whose region
/// counts are rounded with carried discrepancy; one point at each region's
/// center.
fn equal_area(n: usize) -> Vec<Vec<f64>> {
    use std::f64::consts::PI;
    let at = |colat: f64, lon: f64| vec![colat.sin() * lon.cos(), colat.sin() * lon.sin(), colat.cos()];
    match n {
        1 => return vec![vec![0.0, 0.0, 1.0]],
        2 => return vec![vec![0.0, 0.0, 1.0], vec![0.0, 0.0, -1.0]],
        _ => {}
    }
    let nf = n as f64;
    let region_area = 4.0 * PI / nf;
    // Colatitude of a cap holding `k` regions.
    let cap_colat = |k: f64| 2.0 * (k / nf).clamp(0.0, 1.0).sqrt().asin();
    let polar = cap_colat(1.0);
    let ideal = region_area.sqrt();
    let collars = (((PI - 2.0 * polar) / ideal).round() as usize).max(1);
    let fitting = (PI - 2.0 * polar) / collars as f64;
    let cap_area = |colat: f64| 4.0 * PI * (colat / 2.0).sin().powi(2);

    let mut counts = Vec::with_capacity(collars);
    let mut carry = 0.0;
    for i in 0..collars {
        let top = polar + i as f64 * fitting;
        let y = (cap_area(top + fitting) - cap_area(top)) / region_area;
        let m = (y + carry).round().max(0.0);
        carry += y - m;
        counts.push(m as usize);
    }
    // Remaining regions (rounding drift) go to the last collar.
    let assigned: usize = counts.iter().sum::<usize>() + 2;
    if let Some(last) = counts.last_mut() {
        *last = (*last as isize + n as isize - assigned as isize).max(0) as usize;
    }

    let mut pts = vec![vec![0.0, 0.0, 1.0]];
    let mut cum = 1.0;
    for (i, &m) in counts.iter().enumerate() {
        if m == 0 {
            continue;
        }
        let top = cap_colat(cum);
        cum += m as f64;
        let bottom = cap_colat(cum);
        let colat = 0.5 * (top + bottom);
        let offset = if i % 2 == 0 { 0.5 } else { 0.0 };
        for k in 0..m {
            pts.push(at(colat, 2.0 * PI * (k as f64 + offset) / m as f64));
        }
    }
    pts.push(vec![0.0, 0.0, -1.0]);
    pts
}

/// Reads a point file. Rows within 1e-6 of unit norm are renormalized when
/// needed; rows further away are rejected.
pub fn load<T: Real>(path: impl AsRef<Path>) -> Result<PointSet<T>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io { path: path.into(), source })?;
    let parse_err = |line: usize, msg: String| Error::Parse { path: path.into(), line, msg };
    let mut cols = None;
    let mut pts: Vec<Vec<T>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<f64>()
                    .map_err(|e| parse_err(lineno, format!("bad number '{tok}': {e}")))
            })
            .collect::<Result<Vec<f64>>>()?;
        let expect = *cols.get_or_insert(row.len());
        if row.len() != expect || expect < 2 {
            return Err(parse_err(
                lineno,
                format!("expected {expect} columns (at least 2), found {}", row.len()),
            ));
        }
        let r = norm(&row);
        if !r.is_finite() || (r - 1.0).abs() > LOAD_REJECT_TOL {
            return Err(parse_err(lineno, format!("row {} has norm {r}", pts.len())));
        }
        let mut v: Vec<T> = row.iter().map(|&x| T::lit(x)).collect();
        if (norm(&v) - T::one()).abs() > T::unit_tol() {
            crate::scalar::normalize(&mut v);
        }
        pts.push(v);
    }
    let cols = cols.ok_or(Error::EmptySet)?;
    let label = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    PointSet::with_duplicates(cols - 1, pts, label)
}

/// Writes `ps` with 17 significant digits per coordinate.
pub fn save<T: Real>(ps: &PointSet<T>, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let f = fs::File::create(path).map_err(|source| Error::Io { path: path.into(), source })?;
    write_points(ps, io::BufWriter::new(f)).map_err(|e| match e {
        Error::Io { source, .. } => Error::Io { path: path.into(), source },
        other => other,
    })
}

/// The format of [`save`], to any writer.
pub fn write_points<T: Real>(ps: &PointSet<T>, mut w: impl io::Write) -> Result<()> {
    if ps.is_empty() {
        return Err(Error::EmptySet);
    }
    let io_err = |source| Error::Io { path: "<output>".into(), source };
    writeln!(w, "# {} N={} d={}", ps.label(), ps.len(), ps.dim()).map_err(io_err)?;
    for p in ps.iter() {
        let row: Vec<String> = p.iter().map(|x| format!("{:.16e}", x.as_f64())).collect();
        writeln!(w, "{}", row.join(" ")).map_err(io_err)?;
    }
    w.flush().map_err(io_err)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn angles(ps: &PointSet<f64>) -> Vec<f64> {
        ps.iter().map(|p| p[1].atan2(p[0]).rem_euclid(2.0 * PI)).collect()
    }

    #[test]
    fn roots_of_unity() {
        let ps = generate::<f64>(&GeneratorSpec::new(Family::EqualSpacedCircle, 4)).unwrap();
        let a = angles(&ps);
        for (got, want) in a.iter().zip([0.0, PI / 2.0, PI, 1.5 * PI]) {
            assert!((got - want).abs() < 1e-15);
        }
    }

    #[test]
    fn first_point_removed() {
        let f = Family::CircleRemoved { removed: 1, consecutive: true };
        let ps = generate::<f64>(&GeneratorSpec::new(f, 4)).unwrap();
        assert_eq!(ps.len(), 3);
        let a = angles(&ps);
        for (got, want) in a.iter().zip([PI / 2.0, PI, 1.5 * PI]) {
            assert!((got - want).abs() < 1e-15);
        }
    }

    #[test]
    fn removing_everything_is_rejected() {
        let f = Family::CircleRemoved { removed: 4, consecutive: true };
        assert!(generate::<f64>(&GeneratorSpec::new(f, 4)).is_err());
        assert!(generate::<f64>(&GeneratorSpec::new(Family::FibonacciS2, 0)).is_err());
    }

    #[test]
    fn cap_depletion_matches_membership_count() {
        let base = generate::<f64>(&GeneratorSpec::new(Family::FibonacciS2, 100)).unwrap();
        let inside = base.iter().filter(|p| p[2] >= 0.3f64.cos()).count();
        let f = Family::CapDepleted {
            base: Box::new(Family::FibonacciS2),
            center: vec![0.0, 0.0, 1.0],
            radius: 0.3,
        };
        let ps = generate::<f64>(&GeneratorSpec::new(f, 100)).unwrap();
        assert!(inside > 0);
        assert_eq!(ps.len(), 100 - inside);
        assert!(ps.iter().all(|p| p[2] < 0.3f64.cos()));
    }

    #[test]
    fn cap_removing_all_points_fails() {
        let f = Family::CapDepleted {
            base: Box::new(Family::FibonacciS2),
            center: vec![0.0, 0.0, 1.0],
            radius: 3.1,
        };
        assert!(generate::<f64>(&GeneratorSpec::new(f, 10)).is_err());
    }

    #[test]
    fn random_is_reproducible() {
        let f = Family::RandomUniform { seed: 7, dim: 2 };
        let a = generate::<f64>(&GeneratorSpec::new(f.clone(), 30)).unwrap();
        let b = generate::<f64>(&GeneratorSpec::new(f, 30)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn equal_area_counts() {
        for n in [1, 2, 3, 10, 50, 97, 400, 2000] {
            let ps = generate::<f64>(&GeneratorSpec::new(Family::EqualAreaS2, n)).unwrap();
            assert_eq!(ps.len(), n, "n={n}");
        }
    }

    #[test]
    fn family_names_round_trip() {
        for s in [
            "circle",
            "circle-removed:3",
            "circle-removed:3:spread",
            "fibonacci",
            "random:5:1",
            "equal-area",
            "cap:0.3:0,0,1:fibonacci",
        ] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn octahedron_subset_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("oct.txt");
        fs::write(&path, "# octahedron subset\n1 0 0\n-1 0 0\n0 1 0\n0 -1 0\n").unwrap();
        let ps = load::<f64>(&path).unwrap();
        assert_eq!(ps.dim(), 2);
        assert_eq!(ps.len(), 4);
    }

    #[test]
    fn bad_norm_names_the_row() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.txt");
        fs::write(&path, "1 0 0\n1.5 0 0\n").unwrap();
        let err = load::<f64>(&path).unwrap_err();
        match err {
            Error::Parse { line, msg, .. } => {
                assert_eq!(line, 2);
                assert!(msg.contains("row 1"));
            }
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn slightly_off_rows_are_renormalized() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("near.txt");
        fs::write(&path, "1.0000001 0\n0 1\n").unwrap();
        let ps = load::<f64>(&path).unwrap();
        assert!((norm(ps.point(0)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn column_mismatch_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cols.txt");
        fs::write(&path, "1 0 0\n0 1\n").unwrap();
        assert!(matches!(load::<f64>(&path), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn circle_saved_with_two_columns() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.txt");
        let ps = generate::<f64>(&GeneratorSpec::new(Family::EqualSpacedCircle, 5)).unwrap();
        save(&ps, &path).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        let first = text.lines().find(|l| !l.starts_with('#')).unwrap();
        assert_eq!(first.split_whitespace().count(), 2);
    }

    #[test]
    fn round_trip_is_bitwise() {
        let dir = tempfile::tempdir().unwrap();
        let mut specs = vec![GeneratorSpec::new(Family::FibonacciS2, 50)];
        for seed in [1, 2, 3] {
            specs.push(GeneratorSpec::new(Family::RandomUniform { seed, dim: 2 }, 40));
        }
        for spec in specs {
            let ps = generate::<f64>(&spec).unwrap();
            let path = dir.path().join("rt.txt");
            save(&ps, &path).unwrap();
            let back = load::<f64>(&path).unwrap();
            assert_eq!(ps.to_vecs(), back.to_vecs());
        }
    }

    #[test]
    fn duplicates_rejected_unless_allowed() {
        let p = vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![1.0, 0.0]];
        assert!(matches!(PointSet::new(1, p.clone(), "dup"), Err(Error::DuplicatePoint(_))));
        assert_eq!(PointSet::with_duplicates(1, p, "dup").unwrap().len(), 3);
    }

    #[test]
    fn empty_rejected() {
        assert!(matches!(PointSet::<f64>::new(2, vec![], "e"), Err(Error::EmptySet)));
    }

    #[test]
    fn f32_points() {
        let ps = generate::<f32>(&GeneratorSpec::new(Family::FibonacciS2, 64)).unwrap();
        assert_eq!(ps.len(), 64);
    }
}
