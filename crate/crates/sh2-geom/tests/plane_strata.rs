mod common;

use common::{quad_e, quad_f};
use proptest::prelude::*;
use rand::Rng;
use sh2_geom::exp_map::GroupPoint;
use sh2_geom::pendulum::{reflect_m, Reflection};
use sh2_geom::plane::{
    classify_plane, gamma_curves, image_index, invert_curve_k, quadrant_reduce, x2_of_y, x3_of_y, Curve, Family, StratumIndex, CURVE_BAND,
};
use std::f64::consts::{FRAC_PI_2, PI};

fn y_grid() -> impl Iterator<Item = f64> {
    (0..=400).map(|i| -1e-3 * (50.0 / 1e-3_f64).powf(i as f64 / 400.0))
}

#[test]
fn curves_match_quadrature_formulas() {
    for i in 1..20 {
        let k = i as f64 / 20.0;
        let kk = quad_f(FRAC_PI_2, k);
        let ee = quad_e(FRAC_PI_2, k);
        let a = ee - (1.0 - k * k) * kk;
        let kp2 = 1.0 - k * k;
        let close =
            |p: (f64, f64), q: (f64, f64)| (p.0 - q.0).abs() < 1e-12 * q.0.abs().max(1.0) && (p.1 - q.1).abs() < 1e-12 * q.1.abs().max(1.0);
        assert!(close(gamma_curves(Curve::G1, k).unwrap(), (0.0, -4.0 * a / kp2.sqrt())));
        assert!(close(gamma_curves(Curve::G2, k).unwrap(), (4.0 * k * a / kp2, -4.0 * a / kp2)));
        assert!(close(gamma_curves(Curve::G3, k).unwrap(), (4.0 * ee / kp2, -4.0 * k * ee / kp2)));
        assert!(close(gamma_curves(Curve::G5, k).unwrap(), (4.0 * ee / kp2.sqrt(), 0.0)));
    }
    assert_eq!(gamma_curves(Curve::G4, PI).unwrap(), (PI, 0.0));
}

#[test]
fn curve_limits() {
    assert!((gamma_curves(Curve::G5, 1e-8).unwrap().0 - 2.0 * PI).abs() < 1e-12);
    assert!(invert_curve_k(Curve::G1, -1e-12).unwrap().k() < 1e-5);
    assert!(invert_curve_k(Curve::G2, -1e6).unwrap().k() > 0.999_99);
    assert!(x2_of_y(-1e6).unwrap() > 9e5);
}

#[test]
fn forward_then_invert() {
    for &which in &[Curve::G1, Curve::G2, Curve::G3, Curve::G5] {
        for i in 1..50 {
            let k0 = i as f64 / 50.0;
            let (x, y) = gamma_curves(which, k0).unwrap();
            let coord = if which == Curve::G5 { x } else { y };
            let k = invert_curve_k(which, coord).unwrap();
            assert!((k.k() - k0).abs() < 1e-10, "{which:?} k0={k0} got {}", k.k());
        }
    }
}

#[test]
fn curve_bounds_on_a_y_grid() {
    for y in y_grid() {
        let x2 = x2_of_y(y).unwrap();
        let x3 = x3_of_y(y).unwrap();
        assert!(-y - 2.0 < x2 && x2 < -y, "y={y}: x2={x2}");
        assert!(x3 > (2.0 * PI).max(2.0 - y), "y={y}: x3={x3}");
        assert!(x2 < x3);
    }
    let v = x2_of_y(-10.0).unwrap();
    assert!(v > 8.0 && v < 10.0);
    assert!(x3_of_y(-1.0).unwrap() > 2.0 * PI);
}

#[test]
fn curves_are_convex_and_monotone() {
    for &which in &[Curve::G2, Curve::G3] {
        let pts: Vec<(f64, f64)> = (1..400).map(|i| gamma_curves(which, i as f64 / 400.0).unwrap()).collect();
        let slopes: Vec<f64> = pts
            .windows(2)
            .map(|w| {
                assert!(w[1].0 > w[0].0 && w[1].1 < w[0].1, "{which:?} not monotone");
                (w[1].1 - w[0].1) / (w[1].0 - w[0].0)
            })
            .collect();
        for s in slopes.windows(2) {
            assert!(s[1] >= s[0] - 1e-9, "{which:?} not convex");
        }
    }
}

#[test]
fn gamma2_near_origin_asymptotics() {
    let (x, y) = gamma_curves(Curve::G2, 1e-3).unwrap();
    let x23 = x.powf(2.0 / 3.0);
    assert!((y + PI.cbrt() * x23).abs() / x23 < 0.02);
}

#[test]
fn curve_points_classify_to_their_strata() {
    let k = 0.6;
    let cases = [
        (Curve::G1, 29, Family::CurveMax),
        (Curve::G2, 25, Family::CurveConjCut),
        (Curve::G3, 21, Family::CurveConjCut),
        (Curve::G5, 17, Family::CurveMax),
    ];
    for (which, j, fam) in cases {
        let (x, y) = gamma_curves(which, k).unwrap();
        let l = classify_plane(x, y, CURVE_BAND).unwrap();
        assert_eq!((l.index.get(), l.family), (j, fam), "{which:?}");
    }
    let l = classify_plane(1.0, -10.0, CURVE_BAND).unwrap();
    assert_eq!((l.index.get(), l.family), (9, Family::Max));
    assert_eq!(classify_plane(20.0, -3.0, CURVE_BAND).unwrap().index.get(), 1);
    assert_eq!(classify_plane(5.0, -1.0, CURVE_BAND).unwrap().index.get(), 35);
}

#[test]
fn every_stratum_image_is_reachable_and_consistent() {
    let reps = [(20.0, -3.0, 1), (1.0, -10.0, 9), (9.0, 0.0, 17), (5.0, -1.0, 35), (PI, 0.0, 39), (2.0 * PI, 0.0, 33)];
    for (x, y, j) in reps {
        let base = StratumIndex::new(j).unwrap();
        for r in Reflection::ALL {
            let q = reflect_m(r, &GroupPoint::new(x, y, 0.0));
            let got = classify_plane(q.x, q.y, CURVE_BAND).unwrap().index;
            assert_eq!(got, image_index(base, Some(r)), "ε{} of M′{j}", r.index());
        }
    }
}

#[test]
fn origin_is_excluded() {
    assert!(classify_plane(0.0, 0.0, CURVE_BAND).is_err());
    assert!(quadrant_reduce(0.0, 0.0).is_err());
}

#[test]
fn open_strata_partition_a_random_sample() {
    let mut rng = common::rng(41);
    let open = [1u8, 2, 5, 6, 9, 10, 13, 14, 35, 36, 37, 38];
    for _ in 0..2000 {
        let x: f64 = rng.random_range(-30.0..30.0);
        let y: f64 = rng.random_range(-30.0..30.0);
        let l = classify_plane(x, y, 0.0).unwrap();
        assert!(open.contains(&l.index.get()), "({x},{y}) -> {}", l.index.get());
        let yq = -y.abs();
        let near_curve = [x2_of_y(yq).unwrap(), x3_of_y(yq).unwrap()].iter().any(|c| (x.abs() - c).abs() < 1e-3);
        if !near_curve && x.abs() > 1e-3 && y.abs() > 1e-3 {
            let l2 = classify_plane(x + 1e-4, y - 1e-4, 0.0).unwrap();
            assert_eq!(l.index, l2.index, "({x},{y})");
        }
    }
}

proptest! {
    #[test]
    fn quadrant_reduction_is_recoverable(x in -100.0..100.0f64, y in -100.0..100.0f64) {
        prop_assume!(x != 0.0 || y != 0.0);
        let rep = quadrant_reduce(x, y).unwrap();
        prop_assert!(rep.xq >= 0.0 && rep.yq <= 0.0);
        let back = match rep.reflection {
            Some(r) => reflect_m(r, &GroupPoint::new(rep.xq, rep.yq, 0.0)),
            None => GroupPoint::new(rep.xq, rep.yq, 0.0),
        };
        prop_assert_eq!((back.x, back.y), (x, y));
    }

    #[test]
    fn gamma5_inversion(k0 in 0.01..0.99f64) {
        let x = gamma_curves(Curve::G5, k0).unwrap().0;
        let k = invert_curve_k(Curve::G5, x).unwrap();
        prop_assert!((k.k() - k0).abs() < 1e-10);
    }
}
