use super::*;
use crate::kernel::{gegenbauer_normalized, GegenbauerIter, KernelSpec};
use crate::wce::wce_p2;
use crate::{generate, Family, GeneratorSpec};

#[test]
fn bump_values() {
    assert_eq!(bump(0.0), 1.0);
    assert_eq!(bump(1.0), 0.0);
    assert_eq!(bump(-1.0), 0.0);
    assert_eq!(bump(1.5), 0.0);
    assert_eq!(bump(-1.5), 0.0);
    assert!((bump(0.5) - (1.0f64 - 4.0 / 3.0).exp()).abs() < 1e-16);
    assert!((bump(0.5) - 0.716531).abs() < 1e-6);
}

#[test]
fn collar_support_and_peak() {
    let rho = 0.3;
    let f = CollarFunction::new(vec![0.0, 0.0, 1.0], rho).unwrap();
    let mid = 0.5 * (rho.cos() + (0.5 * rho).cos());
    assert!((f.profile(mid) - 1.0).abs() < 1e-12);
    assert_eq!(f.profile((0.25 * rho).cos()), 0.0);
    assert_eq!(f.profile((1.1 * rho).cos()), 0.0);
    let th = 0.75 * rho;
    let v = f.eval(&[th.sin(), 0.0, th.cos()]);
    assert!(v > 0.9 && v <= 1.0);
    assert!(CollarFunction::new(vec![0.0, 0.0, 1.0], PI).is_err());
    assert!(collar_function(&[1.0, 0.0], 0.0, &[1.0, 0.0]).is_err());
}

#[test]
fn collar_vanishes_on_points_outside_hole() {
    let ps: PointSet<f64> = generate(&GeneratorSpec::new(Family::FibonacciS2, 200)).unwrap();
    let cov = covering_radius(&ps).unwrap();
    let f = CollarFunction::new(cov.hole.center.clone(), cov.radius).unwrap();
    assert!(ps.iter().all(|x| f.eval(x) == 0.0));
}

#[test]
fn integral_scaling() {
    let base = collar_integral(2, 0.01).unwrap() / 1e-4;
    for rho in [0.02, 0.05, 0.1, 0.2] {
        let r = collar_integral(2, rho).unwrap() / (rho * rho);
        assert!((r / base - 1.0).abs() < 0.05, "rho={rho}");
    }
    for rho in [0.02, 0.1, 0.4] {
        let a = collar_integral(1, rho).unwrap();
        let b = collar_integral(1, rho / 2.0).unwrap();
        assert!(a > 0.0 && (b / a - 0.5).abs() < 0.02, "rho={rho}");
    }
}

#[test]
fn integral_on_circle_matches_direct_rule() {
    let rho = 0.6;
    let g = CollarMap::new(rho);
    let v = GaussLegendre::new(400).integrate(rho / 2.0, rho, &mut |th| bump(g.at_cos(f64::cos(th)))) / PI;
    assert!((collar_integral(1, rho).unwrap() - v).abs() < 1e-10);
}

fn polynomial_jet(d: usize, l: usize, t0: f64) -> Jet {
    // normalized Gegenbauer recurrence carried out on jets
    let t = Jet::linear(t0, 1.0);
    let (mut prev, mut cur) = (Jet::constant(1.0), t);
    if l == 0 {
        return prev;
    }
    for k in 1..l {
        let kf = k as f64;
        let next = ((t * cur).scale(2.0 * kf + d as f64 - 1.0) - prev.scale(kf)).scale(1.0 / (kf + d as f64 - 1.0));
        prev = cur;
        cur = next;
    }
    cur
}

#[test]
fn operator_has_harmonic_eigenvalues() {
    for d in [1usize, 2] {
        for l in [0usize, 1, 2, 3, 4] {
            for theta in [0.3, 1.1, 2.5] {
                let f = polynomial_jet(d, l, f64::cos(theta));
                let got = apply_operator(d, theta, f).value();
                let lam = (l * (l + d - 1)) as f64;
                let want = (1.0 + lam) * gegenbauer_normalized(d, l, f64::cos(theta)).unwrap();
                assert!((got - want).abs() < 1e-12 * (1.0 + want.abs()), "d={d} l={l}");
                let twice = apply_operator(d, theta, apply_operator(d, theta, f)).value();
                assert!((twice - (1.0 + lam) * want).abs() < 1e-10 * (1.0 + twice.abs()));
            }
        }
    }
}

#[test]
fn zero_order_norm_is_lp_norm() {
    let rho = 0.4;
    let g = CollarMap::new(rho);
    let rule = GaussLegendre::new(400);
    for d in [1usize, 2] {
        for p in [1.0, 2.0, 3.5] {
            let v = rule.integrate(rho / 2.0, rho, &mut |th| {
                bump(g.at_angle(th)).powf(p) * th.sin().powi(d as i32 - 1)
            });
            let want = (omega_ratio(d) * v).powf(1.0 / p);
            let got = collar_sobolev_norm_even(d, p, 0, rho).unwrap();
            assert!((got - want).abs() < 1e-9 * want, "d={d} p={p}");
        }
        assert!((collar_sobolev_norm_even(d, f64::INFINITY, 0, rho).unwrap() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn spectral_norm_agrees_on_sphere() {
    // ‖f‖²_{W_2^s} = Σ_ℓ (1+λ_ℓ)^s Z(2,ℓ) f̂_ℓ² with f̂_ℓ = ½ ∫ f P_ℓ dt
    let rho = 1.2;
    let g = CollarMap::new(rho);
    let lmax = 1200;
    let (x, w) = crate::quad::gauss_legendre(1500);
    let mut coef = vec![0.0; lmax];
    for (xi, wi) in x.iter().zip(&w) {
        let th = 0.75 * rho + 0.25 * rho * xi;
        let weight = 0.5 * 0.25 * rho * wi * bump(g.at_angle(th)) * th.sin();
        for (c, p) in coef.iter_mut().zip(GegenbauerIter::new(2, th.cos())) {
            *c += weight * p;
        }
    }
    let norm = |s: i32| -> f64 {
        coef.iter()
            .enumerate()
            .map(|(l, c)| (1.0 + (l * (l + 1)) as f64).powi(s) * (2 * l + 1) as f64 * c * c)
            .sum::<f64>()
            .sqrt()
    };
    let got = collar_sobolev_norm_even(2, 2.0, 2, rho).unwrap();
    assert!((got / norm(2) - 1.0).abs() < 1e-6, "{got} vs {}", norm(2));
    // the s = 4 series converges slowly; the partial sum approaches from below
    let got = collar_sobolev_norm_even(2, 2.0, 4, rho).unwrap();
    let partial = norm(4);
    assert!(partial <= got && got / partial - 1.0 < 1e-4, "{got} vs {partial}");
}

#[test]
fn norm_scaling_laws() {
    let radii = [0.01, 0.02, 0.05, 0.1, 0.2];
    let sup: Vec<f64> =
        radii.iter().map(|&r| collar_sobolev_norm_even(2, f64::INFINITY, 2, r).unwrap() * r * r).collect();
    let (lo, hi) = sup.iter().fold((f64::MAX, 0.0f64), |(a, b), &v| (a.min(v), b.max(v)));
    assert!(hi / lo < 3.0, "{sup:?}");
    let l2: Vec<f64> = radii.iter().map(|&r| collar_sobolev_norm_even(2, 2.0, 2, r).unwrap() * r).collect();
    let (lo, hi) = l2.iter().fold((f64::MAX, 0.0f64), |(a, b), &v| (a.min(v), b.max(v)));
    assert!(hi / lo < 3.0, "{l2:?}");
}

#[test]
fn rejects_unsupported_orders() {
    assert!(collar_sobolev_norm_even(2, 2.0, 3, 0.1).is_err());
    assert!(collar_sobolev_norm_even(2, 2.0, 6, 0.1).is_err());
    assert!(collar_sobolev_norm_even(3, 2.0, 2, 0.1).is_err());
    assert!(collar_integral(2, 4.0).is_err());
}

#[test]
fn certificate_below_closed_form() {
    let ps: PointSet<f64> = generate(&GeneratorSpec::new(Family::FibonacciS2, 100)).unwrap();
    let params = SobolevParams::new(2, 2.0, 2.0).unwrap();
    let cert = wce_lower_certificate(&ps, params).unwrap();
    let wce = wce_p2(&ps, 2.0, &KernelSpec::series(2, 4.0, 1e-14).unwrap()).unwrap();
    assert!(cert > 0.0 && cert < wce.value, "{cert} vs {}", wce.value);
}

#[test]
fn certificate_scales_with_covering_radius() {
    let params = SobolevParams::new(1, 2.0, 2.0).unwrap();
    let ratios: Vec<f64> = [16usize, 32, 64, 128, 256, 512]
        .iter()
        .map(|&n| {
            let ps: PointSet<f64> = generate(&GeneratorSpec::new(Family::EqualSpacedCircle, n)).unwrap();
            let rho = PI / n as f64;
            wce_lower_certificate(&ps, params).unwrap() / rho.powf(2.5)
        })
        .collect();
    let (lo, hi) = ratios.iter().fold((f64::MAX, 0.0f64), |(a, b), &v| (a.min(v), b.max(v)));
    assert!(hi / lo < 2.0, "{ratios:?}");
}

#[test]
fn certificate_rejects_single_point_and_odd_order() {
    let one = PointSet::new(2, vec![vec![0.0, 0.0, 1.0]], "one").unwrap();
    assert!(wce_lower_certificate(&one, SobolevParams::new(2, 2.0, 2.0).unwrap()).is_err());
    let ps: PointSet<f64> = generate(&GeneratorSpec::new(Family::FibonacciS2, 20)).unwrap();
    assert!(wce_lower_certificate(&ps, SobolevParams::new(2, 2.0, 3.0).unwrap()).is_err());
}
