use proptest::prelude::*;

use sphqmc::cli::{run_sweep, SweepSpec, Table};
use sphqmc::{
    covering_radius, generate, grid_covering_estimate, load, save, separation, wce_p2, Family, GeneratorSpec,
    KernelSpec, PointSet, SobolevParams,
};

fn rotation(a: f64, b: f64, c: f64) -> Vec<f64> {
    // Rz(a) Ry(b) Rz(c)
    let (sa, ca, sb, cb, sc, cc) = (a.sin(), a.cos(), b.sin(), b.cos(), c.sin(), c.cos());
    vec![
        ca * cb * cc - sa * sc,
        -ca * cb * sc - sa * cc,
        ca * sb,
        sa * cb * cc + ca * sc,
        -sa * cb * sc + ca * cc,
        sa * sb,
        -sb * cc,
        sb * sc,
        cb,
    ]
}

fn random_set(seed: u64, dim: usize, n: usize) -> PointSet<f64> {
    generate(&GeneratorSpec::new(Family::RandomUniform { seed, dim }, n)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn wce_is_rotation_invariant(seed in 0u64..1000, n in 5usize..40, a in 0.0..6.3f64, b in 0.0..3.1f64, c in 0.0..6.3f64) {
        let ps = random_set(seed, 2, n);
        let spec = KernelSpec::series(2, 3.0, 1e-14).unwrap();
        let w0 = wce_p2(&ps, 1.5, &spec).unwrap().value;
        let w1 = wce_p2(&ps.transformed(&rotation(a, b, c)).unwrap(), 1.5, &spec).unwrap().value;
        prop_assert!((w0 - w1).abs() <= 1e-9, "{} vs {}", w0, w1);
    }

    #[test]
    fn circle_wce_is_rotation_invariant(seed in 0u64..1000, n in 3usize..50, a in 0.0..6.3f64) {
        let ps = random_set(seed, 1, n);
        let spec = KernelSpec::series(1, 2.0, 1e-14).unwrap();
        let (s, co) = (a.sin(), a.cos());
        let w0 = wce_p2(&ps, 1.0, &spec).unwrap().value;
        let w1 = wce_p2(&ps.transformed(&[co, -s, s, co]).unwrap(), 1.0, &spec).unwrap().value;
        prop_assert!((w0 - w1).abs() <= 1e-9);
    }

    #[test]
    fn grid_estimate_brackets_exact_covering(seed in 0u64..10_000, n in 6usize..60) {
        let ps = random_set(seed, 2, n);
        let exact = covering_radius(&ps).unwrap().radius;
        let res = 0.02;
        let est = grid_covering_estimate(&ps, res).unwrap();
        prop_assert!(est <= exact + 1e-12, "{} > {}", est, exact);
        prop_assert!(est >= exact - res, "{} << {}", est, exact);
    }

    #[test]
    fn covering_at_least_half_separation(seed in 0u64..10_000, n in 2usize..80, dim in 1usize..3) {
        let ps = random_set(seed, dim, n);
        let rho = covering_radius(&ps).unwrap().radius;
        prop_assert!(2.0 * rho >= separation(&ps).unwrap() - 1e-12);
    }

    #[test]
    fn point_files_round_trip(seed in 0u64..1000, n in 1usize..30, dim in 1usize..4) {
        let ps = random_set(seed, dim, n);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("pts.txt");
        save(&ps, &path).unwrap();
        let back: PointSet<f64> = load(&path).unwrap();
        prop_assert_eq!(back.len(), ps.len());
        for (a, b) in ps.iter().zip(back.iter()) {
            for (x, y) in a.iter().zip(b) {
                prop_assert!((x - y).abs() <= 1e-15);
            }
        }
    }

    #[test]
    fn tables_round_trip(cells in prop::collection::vec(prop::collection::vec("[a-z0-9 ,\"._-]{0,8}", 3), 0..10)) {
        let mut t = Table::new(&["a", "b,c", "d"]);
        for r in cells {
            t.push(r);
        }
        let back = Table::read_csv(t.to_csv_string().as_bytes()).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn numbers_survive_csv(x in prop::num::f64::NORMAL) {
        prop_assert_eq!(sphqmc::cli::num(x).parse::<f64>().unwrap(), x);
    }
}

#[test]
fn sweep_csv_round_trips_and_is_thread_independent() {
    let params = vec![SobolevParams::new(2, 2.0, 1.5).unwrap()];
    let spec = SweepSpec::new(Family::RandomUniform { seed: 5, dim: 2 }, vec![8, 16, 32, 64], params);
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let a = one.install(|| run_sweep(&spec)).unwrap();
    let three = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap();
    let b = three.install(|| run_sweep(&spec)).unwrap();
    assert_eq!(a, b);
    let back = Table::read_csv(a.to_csv_string().as_bytes()).unwrap();
    assert_eq!(back, a);
}
