mod common;

use proptest::prelude::*;
use sh2_geom::pendulum::{
    classify, energy, from_elliptic, normalize_angle, pendulum_flow, reflect_c, to_elliptic, Case, Covector, Reflection, FOUR_PI,
};
use sh2_geom::DEFAULT_TOL;

fn angle_gap(a: f64, b: f64) -> f64 {
    let d = normalize_angle(a - b);
    d.min(FOUR_PI - d)
}

/// RK4 on the pendulum `γ̇ = c, ċ = −sin γ`.
fn rk4_pendulum(g: f64, c: f64, t: f64, steps: usize) -> (f64, f64) {
    let f = |g: f64, c: f64| (c, -g.sin());
    let h = t / steps as f64;
    let (mut g, mut c) = (g, c);
    for _ in 0..steps {
        let k1 = f(g, c);
        let k2 = f(g + 0.5 * h * k1.0, c + 0.5 * h * k1.1);
        let k3 = f(g + 0.5 * h * k2.0, c + 0.5 * h * k2.1);
        let k4 = f(g + h * k3.0, c + h * k3.1);
        g += h / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0);
        c += h / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1);
    }
    (g, c)
}

#[test]
fn flow_matches_rk4() {
    use rand::Rng;
    let mut rng = common::rng(21);
    for _ in 0..200 {
        let g = rng.random_range(0.0..FOUR_PI);
        let c = rng.random_range(-3.5..3.5);
        let t = rng.random_range(-8.0..8.0);
        let lam = Covector::new(g, c);
        if classify(&lam, 1e-6).case != Case::C1 && classify(&lam, 1e-6).case != Case::C2 {
            continue;
        }
        let got = pendulum_flow(&lam, t);
        let (ge, ce) = rk4_pendulum(g, c, t, 20_000);
        assert!(angle_gap(got.gamma(), ge) < 1e-9, "γ after {t} from ({g},{c})");
        assert!((got.c() - ce).abs() < 1e-9, "c after {t} from ({g},{c})");
    }
}

#[test]
fn equilibria_are_fixed() {
    for g in [0.0, std::f64::consts::PI, 2.0 * std::f64::consts::PI, 3.0 * std::f64::consts::PI] {
        let lam = Covector::new(g, 0.0);
        assert_eq!(pendulum_flow(&lam, 3.7), lam);
    }
}

#[test]
fn separatrix_flow_approaches_the_saddle() {
    let lam = Covector::new(0.0, 2.0);
    assert_eq!(classify(&lam, DEFAULT_TOL).case, Case::C3);
    let far = pendulum_flow(&lam, 30.0);
    assert!(angle_gap(far.gamma(), std::f64::consts::PI) < 1e-10);
    assert!(far.c().abs() < 1e-10);
}

proptest! {
    #[test]
    fn chart_round_trip(g in 0.0..FOUR_PI, c in -5.0..5.0f64) {
        let lam = Covector::new(g, c);
        let tag = classify(&lam, DEFAULT_TOL);
        prop_assume!(matches!(tag.case, Case::C1 | Case::C2 | Case::C3));
        let back = from_elliptic(&to_elliptic(&lam).unwrap());
        prop_assert!(angle_gap(back.gamma(), g) < 1e-10);
        prop_assert!((back.c() - c).abs() < 1e-10);
    }

    #[test]
    fn energy_is_conserved(g in 0.0..FOUR_PI, c in -5.0..5.0f64, t in -20.0..20.0f64) {
        let lam = Covector::new(g, c);
        let after = pendulum_flow(&lam, t);
        prop_assert!((energy(&after) - energy(&lam)).abs() < 1e-9 * energy(&lam).abs().max(1.0));
    }

    #[test]
    fn flow_is_a_group_action(g in 0.0..FOUR_PI, c in -4.0..4.0f64, s in -5.0..5.0f64, t in -5.0..5.0f64) {
        let lam = Covector::new(g, c);
        prop_assume!(matches!(classify(&lam, 1e-6).case, Case::C1 | Case::C2));
        let a = pendulum_flow(&pendulum_flow(&lam, s), t);
        let b = pendulum_flow(&lam, s + t);
        prop_assert!(angle_gap(a.gamma(), b.gamma()) < 1e-9);
        prop_assert!((a.c() - b.c()).abs() < 1e-9);
    }

    #[test]
    fn reflections_conjugate_the_flow(g in 0.0..FOUR_PI, c in -4.0..4.0f64, t in 0.0..6.0f64, i in 1u8..=7) {
        let lam = Covector::new(g, c);
        prop_assume!(matches!(classify(&lam, 1e-6).case, Case::C1 | Case::C2));
        let r = Reflection::from_index(i).unwrap();
        let sign = if r.reverses_time() { -1.0 } else { 1.0 };
        let a = reflect_c(r, &pendulum_flow(&lam, t));
        let b = pendulum_flow(&reflect_c(r, &lam), sign * t);
        prop_assert!(angle_gap(a.gamma(), b.gamma()) < 1e-9);
        prop_assert!((a.c() - b.c()).abs() < 1e-9);
    }

    #[test]
    fn reflections_are_involutions(g in 0.0..FOUR_PI, c in -4.0..4.0f64, i in 1u8..=7) {
        let lam = Covector::new(g, c);
        let r = Reflection::from_index(i).unwrap();
        let back = reflect_c(r, &reflect_c(r, &lam));
        prop_assert!(angle_gap(back.gamma(), g) < 1e-12);
        prop_assert_eq!(back.c(), c);
    }
}
