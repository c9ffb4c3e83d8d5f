mod common;

use common::{quad_e, quad_f};
use proptest::prelude::*;
use rand::Rng;
use sh2_geom::elliptic::{a_fn, complete_e, complete_k, incomplete_e_amp, incomplete_f, jacobi_am, jacobi_eps, jacobi_sncndn, Modulus};
use std::f64::consts::FRAC_PI_2;

fn m(k: f64) -> Modulus {
    Modulus::new(k).unwrap()
}

#[test]
fn complete_integrals_match_quadrature() {
    for i in 1..100 {
        let k = i as f64 / 100.0;
        let kk = complete_k(m(k)).unwrap();
        let ee = complete_e(m(k));
        assert!((kk - quad_f(FRAC_PI_2, k)).abs() < 1e-13 * kk, "K({k})");
        assert!((ee - quad_e(FRAC_PI_2, k)).abs() < 1e-13, "E({k})");
        assert!((a_fn(m(k)) - (ee - (1.0 - k * k) * kk)).abs() < 1e-13);
    }
}

#[test]
fn legendre_relation_holds() {
    for i in 1..50 {
        let k = i as f64 / 50.0;
        let kp = (1.0 - k * k).sqrt();
        let (k1, e1) = (complete_k(m(k)).unwrap(), complete_e(m(k)));
        let (k2, e2) = (complete_k(m(kp)).unwrap(), complete_e(m(kp)));
        assert!((e1 * k2 + e2 * k1 - k1 * k2 - FRAC_PI_2).abs() < 1e-13);
    }
}

#[test]
fn incomplete_integrals_match_quadrature() {
    let mut rng = common::rng(11);
    for _ in 0..400 {
        let k = rng.random_range(0.0..0.999);
        let u = rng.random_range(-7.0..7.0);
        let f = incomplete_f(u, m(k)).unwrap();
        let e = incomplete_e_amp(u, m(k));
        assert!((f - quad_f(u, k)).abs() < 1e-12 * f.abs().max(1.0), "F({u},{k})");
        assert!((e - quad_e(u, k)).abs() < 1e-12 * e.abs().max(1.0), "E({u},{k})");
    }
}

#[test]
fn amplitude_inverts_first_kind_integral() {
    let mut rng = common::rng(12);
    for _ in 0..400 {
        let k = rng.random_range(0.0..0.9999);
        let phi = rng.random_range(-10.0..10.0);
        let u = incomplete_f(phi, m(k)).unwrap();
        assert!((jacobi_am(u, m(k)) - phi).abs() < 1e-11 * phi.abs().max(1.0), "am(F({phi},{k}))");
        let t = jacobi_sncndn(u, m(k));
        assert!((t.sn - phi.sin()).abs() < 1e-12 && (t.cn - phi.cos()).abs() < 1e-12);
        assert!((jacobi_eps(u, m(k)) - quad_e(phi, k)).abs() < 1e-11 * phi.abs().max(1.0));
    }
}

#[test]
fn identities_on_a_dense_sweep() {
    let mut rng = common::rng(13);
    let mut worst = 0.0_f64;
    for _ in 0..100_000 {
        let k = if rng.random_bool(0.1) { 1.0 - rng.random_range(0.0..1e-6) } else { rng.random_range(0.0..=1.0) };
        let u = rng.random_range(-60.0..60.0);
        let t = jacobi_sncndn(u, m(k));
        worst = worst.max((t.sn * t.sn + t.cn * t.cn - 1.0).abs());
        worst = worst.max((t.dn * t.dn + k * k * t.sn * t.sn - 1.0).abs());
    }
    assert!(worst <= 1e-12, "worst identity defect {worst:e}");
}

#[test]
fn eps_is_quasi_periodic() {
    for i in 0..=40 {
        let k = i as f64 / 41.0;
        let kk = complete_k(m(k)).unwrap();
        let ee = complete_e(m(k));
        for j in -5..=5 {
            let u = 0.37 * j as f64;
            let d = jacobi_eps(u + 2.0 * kk, m(k)) - jacobi_eps(u, m(k)) - 2.0 * ee;
            assert!(d.abs() <= 1e-10, "k={k} u={u}: {d:e}");
        }
    }
}

#[test]
fn large_modulus_matches_hyperbolic_limit() {
    let k = m(1.0 - 1e-15);
    for &u in &[0.3, 1.0, 4.0, -2.5] {
        let t = jacobi_sncndn(u, k);
        assert!((t.sn - f64::tanh(u)).abs() < 1e-12);
        assert!((t.cn - 1.0 / f64::cosh(u)).abs() < 1e-12);
    }
}

proptest! {
    #[test]
    fn addition_formula_for_sn(k in 0.0..0.999f64, u in -5.0..5.0f64, v in -5.0..5.0f64) {
        let a = jacobi_sncndn(u, m(k));
        let b = jacobi_sncndn(v, m(k));
        let s = jacobi_sncndn(u + v, m(k));
        let den = 1.0 - k * k * a.sn * a.sn * b.sn * b.sn;
        let rhs = (a.sn * b.cn * b.dn + b.sn * a.cn * a.dn) / den;
        prop_assert!((s.sn - rhs).abs() < 1e-11);
    }

    #[test]
    fn sn_is_odd_and_cn_even(k in 0.0..=1.0f64, u in -20.0..20.0f64) {
        let a = jacobi_sncndn(u, m(k));
        let b = jacobi_sncndn(-u, m(k));
        prop_assert!((a.sn + b.sn).abs() < 1e-14);
        prop_assert!((a.cn - b.cn).abs() < 1e-14);
        prop_assert!((a.dn - b.dn).abs() < 1e-14);
    }

    #[test]
    fn periods(k in 0.0..0.99f64, u in -3.0..3.0f64) {
        let kk = complete_k(m(k)).unwrap();
        let a = jacobi_sncndn(u, m(k));
        let b = jacobi_sncndn(u + 4.0 * kk, m(k));
        let c = jacobi_sncndn(u + 2.0 * kk, m(k));
        prop_assert!((a.sn - b.sn).abs() < 1e-12 && (a.cn - b.cn).abs() < 1e-12);
        prop_assert!((a.sn + c.sn).abs() < 1e-12 && (a.dn - c.dn).abs() < 1e-12);
    }
}
