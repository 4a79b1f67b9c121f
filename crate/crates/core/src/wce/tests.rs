use super::*;
use crate::{generate, Family, GeneratorSpec};

fn circle(n: usize) -> PointSet<f64> {
    generate(&GeneratorSpec::new(Family::EqualSpacedCircle, n)).unwrap()
}

fn series(d: usize, s: f64) -> KernelSpec {
    KernelSpec::series(d, s, 1e-14).unwrap()
}

#[test]
fn single_point_is_root_of_diagonal() {
    let ps = PointSet::new(1, vec![vec![0.6, 0.8]], "one").unwrap();
    let r = wce_p2(&ps, 1.0, &series(1, 2.0)).unwrap();
    let want = (PI / PI.tanh() - 1.0).sqrt();
    assert!((r.value - want).abs() < 1e-13, "{}", r.value);
    assert!((r.value - 1.46742).abs() < 1e-5);
    assert_eq!(r.method, WceMethod::ClosedFormP2);
}

#[test]
fn antipodal_pair() {
    let ps = PointSet::new(1, vec![vec![1.0, 0.0], vec![-1.0, 0.0]], "pair").unwrap();
    let r = wce_p2(&ps, 1.0, &series(1, 2.0)).unwrap();
    let want = ((PI / PI.tanh() - 1.0 + PI / PI.sinh() - 1.0) / 2.0).sqrt();
    assert!((r.value - want).abs() < 1e-13);
    // mpmath, 30 digits
    assert!((r.value - 0.844_208_845_582_447).abs() < 1e-13, "{}", r.value);
}

#[test]
fn rejects_wrong_kernel_order() {
    let ps = circle(8);
    assert!(matches!(wce_p2(&ps, 1.0, &series(1, 1.0)), Err(Error::InvalidSpec(_))));
    assert!(wce_p2(&ps, 0.4, &series(1, 0.8)).is_err());
    let sphere = generate::<f64>(&GeneratorSpec::new(Family::FibonacciS2, 10)).unwrap();
    assert!(wce_p2(&sphere, 1.5, &series(1, 3.0)).is_err());
}

#[test]
fn circle_exact_matches_pair_sum() {
    for (n, s) in [(8, 0.75), (64, 0.75), (16, 1.0), (64, 1.5)] {
        let exact = wce_circle_exact(n, 0, s).unwrap();
        let brute = wce_p2(&circle(n), s, &series(1, 2.0 * s)).unwrap();
        assert!((exact.value - brute.value).abs() < 1e-10, "n={n} s={s}: {} vs {}", exact.value, brute.value);
    }
}

#[test]
fn circle_exact_leading_term() {
    let r = wce_circle_exact(16, 0, 1.0).unwrap();
    let lead = PI / (3f64.sqrt() * 16.0);
    assert!((lead - 0.11336).abs() < 1e-5);
    assert!((r.value / lead - 1.0).abs() < 0.01);
    assert!(r.value < lead);
    let r = wce_circle_exact(4096, 0, 0.75).unwrap();
    let z = crate::kernel::zeta(1.5).unwrap();
    assert!((r.value * 4096f64.powf(0.75) / (2.0 * z).sqrt() - 1.0).abs() < 1e-6);
}

#[test]
fn circle_exact_with_removal_matches_pair_sum() {
    for (n, m, s) in [(256, 1, 1.5), (64, 5, 0.75), (40, 39, 1.0)] {
        let ps: PointSet<f64> =
            generate(&GeneratorSpec::new(Family::CircleRemoved { removed: m, consecutive: true }, n)).unwrap();
        let exact = wce_circle_exact(n, m, s).unwrap();
        let brute = wce_p2(&ps, s, &series(1, 2.0 * s)).unwrap();
        assert!((exact.value - brute.value).abs() < 1e-9, "n={n} m={m}: {} vs {}", exact.value, brute.value);
    }
}

#[test]
fn circle_exact_rejects_bad_input() {
    assert!(wce_circle_exact(1, 0, 1.0).is_err());
    assert!(wce_circle_exact(8, 8, 1.0).is_err());
    assert!(wce_circle_exact(8, 0, 0.5).is_err());
}

#[test]
fn truncated_kernel_agrees_with_series() {
    let ps = generate::<f64>(&GeneratorSpec::new(Family::FibonacciS2, 40)).unwrap();
    let a = wce_p2(&ps, 2.0, &KernelSpec::truncated(2, 4.0, 1e-10).unwrap()).unwrap();
    let b = wce_p2(&ps, 2.0, &series(2, 4.0)).unwrap();
    assert!((a.value - b.value).abs() < 1e-8, "{} vs {}", a.value, b.value);
    assert!(a.err_estimate >= (a.value - b.value).abs());
}

#[test]
fn error_function_lattice_sum() {
    let (n, s) = (8usize, 3.0);
    let ps = circle(n);
    let spec = series(1, s);
    let nf = n as f64;
    let mut rng_phi = 0.1234f64;
    for _ in 0..20 {
        rng_phi = (rng_phi * 7.31 + 0.577).fract();
        let phi = rng_phi * 2.0 * PI;
        let y = [phi.cos(), phi.sin()];
        let got = wce_error_function(&ps, s, &spec, &y).unwrap();
        let mut want = 0.0;
        for nu in (1..200_000).rev() {
            let v = nu as f64;
            want += (v * nf * phi).cos() / (v * v + 1.0 / (nf * nf)).powf(s / 2.0);
        }
        want *= 2.0 / nf.powf(s);
        assert!((got - want).abs() < 1e-9, "phi={phi}: {got} vs {want}");
    }
}

#[test]
fn error_function_at_single_point() {
    let ps = PointSet::new(1, vec![vec![0.0, 1.0]], "one").unwrap();
    let v = wce_error_function(&ps, 2.0, &series(1, 2.0), &[0.0, 1.0]).unwrap();
    assert!((v - 2.15335).abs() < 1e-5, "{v}");
    assert!(wce_error_function(&ps, 2.0, &series(1, 2.0), &[0.0, 2.0]).is_err());
    assert!(wce_error_function(&ps, 2.0, &series(1, 4.0), &[0.0, 1.0]).is_err());
}

#[test]
fn circle_lq_matches_mpmath() {
    // N = 32, s = 1.25: q = 1 and q = 2 norms of the lattice-sum error
    // function, 30-digit mpmath quadrature split at its zeros
    let ps = circle(32);
    let spec = series(1, 1.25);
    let quad = QuadratureSpec::default();
    let q1 = wce_lq(&ps, SobolevParams::new(1, f64::INFINITY, 1.25).unwrap(), &spec, quad).unwrap();
    assert!((q1.value - 0.016_786_661_159_112_634).abs() < 1e-10, "{}", q1.value);
    let q2 = wce_lq(&ps, SobolevParams::new(1, 2.0, 1.25).unwrap(), &spec, quad).unwrap();
    assert!((q2.value - 0.021_511_094_815_847_729).abs() < 1e-10, "{}", q2.value);
    let exact = wce_circle_exact(32, 0, 1.25).unwrap();
    assert!((q2.value - exact.value).abs() < 1e-10);
}

#[test]
fn circle_lq_unequal_spacing() {
    let ps: PointSet<f64> =
        generate(&GeneratorSpec::new(Family::CircleRemoved { removed: 3, consecutive: true }, 24)).unwrap();
    let quad = QuadratureSpec::default();
    let p2 = wce_p2(&ps, 1.5, &series(1, 3.0)).unwrap();
    let spec = series(1, 1.5);
    let l2 = wce_lq(&ps, SobolevParams::new(1, 2.0, 1.5).unwrap(), &spec, quad).unwrap();
    assert!((l2.value - p2.value).abs() < 1e-9 * (1.0 + p2.value), "{} vs {}", l2.value, p2.value);
    let l1 = wce_lq(&ps, SobolevParams::new(1, f64::INFINITY, 1.5).unwrap(), &spec, quad).unwrap();
    let linf = wce_lq(&ps, SobolevParams::new(1, 1.0, 1.5).unwrap(), &spec, quad).unwrap();
    assert!(l1.value < l2.value && l2.value < linf.value);
    assert!(matches!(linf.method, WceMethod::LinfGrid { .. }));
}

#[test]
fn sphere_lq_matches_closed_form() {
    let ps = generate::<f64>(&GeneratorSpec::new(Family::FibonacciS2, 50)).unwrap();
    let p2 = wce_p2(&ps, 1.5, &series(2, 3.0)).unwrap();
    let l2 = wce_lq(&ps, SobolevParams::new(2, 2.0, 1.5).unwrap(), &series(2, 1.5), QuadratureSpec::default())
        .unwrap();
    assert!((l2.value - p2.value).abs() < 1e-8, "{} vs {}", l2.value, p2.value);
}
