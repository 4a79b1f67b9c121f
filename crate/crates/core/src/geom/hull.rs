//! Incremental convex hull in R^3, used to enumerate the empty caps of a
//! point set on S^2. Returns outward oriented triangles as index triples.

use std::collections::HashMap;

/// Radial jitter used to break exact coplanarity (cocircular points).
const JITTER: f64 = 1e-9;
const VOLUME_FLOOR: f64 = 1e-12;

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn orient(a: [f64; 3], b: [f64; 3], c: [f64; 3], p: [f64; 3]) -> f64 {
    dot(cross(sub(b, a), sub(c, a)), sub(p, a))
}

/// Deterministic value in [0, 1) derived from the index.
fn jitter(i: usize) -> f64 {
    let mut x = (i as u64).wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^= x >> 31;
    (x >> 11) as f64 / (1u64 << 53) as f64
}

/// Triangles of the hull of `pts`, outward oriented, or `None` when the
/// points do not span a full-dimensional hull.
pub(crate) fn hull_triangles(pts: &[[f64; 3]]) -> Option<Vec<[usize; 3]>> {
    let n = pts.len();
    if n < 4 {
        return None;
    }
    let p: Vec<[f64; 3]> = pts
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let f = 1.0 + JITTER * jitter(i);
            [x[0] * f, x[1] * f, x[2] * f]
        })
        .collect();

    let i0 = 0;
    let d2 = |a: [f64; 3], b: [f64; 3]| dot(sub(a, b), sub(a, b));
    let i1 = (0..n).max_by(|&a, &b| d2(p[a], p[i0]).total_cmp(&d2(p[b], p[i0])))?;
    let area = |k: usize| {
        let c = cross(sub(p[i1], p[i0]), sub(p[k], p[i0]));
        dot(c, c)
    };
    let i2 = (0..n).max_by(|&a, &b| area(a).total_cmp(&area(b)))?;
    let vol = |k: usize| orient(p[i0], p[i1], p[i2], p[k]).abs();
    let i3 = (0..n).max_by(|&a, &b| vol(a).total_cmp(&vol(b)))?;
    if vol(i3) < VOLUME_FLOOR {
        return None;
    }

    let inner = {
        let s = [p[i0], p[i1], p[i2], p[i3]];
        [
            (s[0][0] + s[1][0] + s[2][0] + s[3][0]) / 4.0,
            (s[0][1] + s[1][1] + s[2][1] + s[3][1]) / 4.0,
            (s[0][2] + s[1][2] + s[2][2] + s[3][2]) / 4.0,
        ]
    };

    let mut faces: Vec<[usize; 3]> = Vec::new();
    let mut alive: Vec<bool> = Vec::new();
    let mut edges: HashMap<(usize, usize), usize> = HashMap::new();

    let add = |f: [usize; 3], faces: &mut Vec<[usize; 3]>, alive: &mut Vec<bool>, edges: &mut HashMap<(usize, usize), usize>| {
        let f = if orient(p[f[0]], p[f[1]], p[f[2]], inner) > 0.0 { [f[0], f[2], f[1]] } else { f };
        let id = faces.len();
        for k in 0..3 {
            edges.insert((f[k], f[(k + 1) % 3]), id);
        }
        faces.push(f);
        alive.push(true);
    };
    for f in [[i0, i1, i2], [i0, i1, i3], [i0, i2, i3], [i1, i2, i3]] {
        add(f, &mut faces, &mut alive, &mut edges);
    }

    for k in 0..n {
        if k == i0 || k == i1 || k == i2 || k == i3 {
            continue;
        }
        let visible: Vec<usize> = (0..faces.len())
            .filter(|&f| alive[f])
            .filter(|&f| {
                let [a, b, c] = faces[f];
                orient(p[a], p[b], p[c], p[k]) > 0.0
            })
            .collect();
        if visible.is_empty() {
            continue;
        }
        let mut horizon = Vec::new();
        for &f in &visible {
            alive[f] = false;
        }
        for &f in &visible {
            let t = faces[f];
            for e in 0..3 {
                let (a, b) = (t[e], t[(e + 1) % 3]);
                match edges.get(&(b, a)) {
                    Some(&g) if alive[g] => horizon.push((a, b)),
                    _ => {}
                }
            }
        }
        for &f in &visible {
            let t = faces[f];
            for e in 0..3 {
                let key = (t[e], t[(e + 1) % 3]);
                if edges.get(&key) == Some(&f) {
                    edges.remove(&key);
                }
            }
        }
        for (a, b) in horizon {
            add([a, b, k], &mut faces, &mut alive, &mut edges);
        }
    }

    Some(
        faces
            .into_iter()
            .zip(alive)
            .filter_map(|(f, a)| a.then_some(f))
            .collect(),
    )
}
