use std::f64::consts::PI;
use std::str::FromStr;

use serde::Serialize;
use sh2_geom::elliptic::{complete_e, complete_k, jacobi_eps, jacobi_sncndn, Modulus};
use sh2_geom::exp_map::{exp, ode_oracle, GeodesicSpec, GroupPoint};
use sh2_geom::optimality::{in_ntilde, t1_max, tt};
use sh2_geom::pendulum::{classify, normalize_angle, reflect_m, reflect_n, Case, Covector, Reflection, FOUR_PI};
use sh2_geom::plane::{classify_plane, image_index, x2_of_y, x3_of_y, StratumIndex, CURVE_BAND};
use sh2_geom::synthesis::{solve_interior, SolverConfig};

use crate::CliError;

/// Named groups of checks run by `sh2 verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Elliptic,
    Oracle,
    Symmetry,
    Roundtrip,
    Strata,
    All,
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "elliptic" => Suite::Elliptic,
            "oracle" => Suite::Oracle,
            "symmetry" => Suite::Symmetry,
            "roundtrip" => Suite::Roundtrip,
            "strata" => Suite::Strata,
            "all" => Suite::All,
            other => return Err(CliError::Usage(format!("unknown suite {other:?}"))),
        })
    }
}

/// Outcome of one property: the largest error seen against its tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub samples: usize,
    pub max_error: f64,
    pub tolerance: f64,
    /// Samples on which the computation itself failed.
    pub failures: usize,
    pub passed: bool,
}

impl PropertyReport {
    fn new(name: &str, samples: usize, max_error: f64, tolerance: f64, failures: usize) -> Self {
        let passed = failures == 0 && max_error <= tolerance;
        PropertyReport { name: name.to_string(), samples, max_error, tolerance, failures, passed }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    pub properties: Vec<PropertyReport>,
}

fn lin(lo: f64, hi: f64, n: usize, i: usize) -> f64 {
    lo + (hi - lo) * (i as f64 + 0.5) / n as f64
}

fn modulus(k: f64) -> Modulus {
    Modulus::new(k).expect("grid moduli lie in (0,1)")
}

/// `sn² + cn² − 1` and `dn² + k² sn² − 1` over an `n_k × n_u` sweep of `k ∈ (0,1)`, `u ∈ (−50, 50)`.
pub fn jacobi_identities(n_k: usize, n_u: usize) -> [PropertyReport; 2] {
    let (mut e1, mut e2) = (0.0f64, 0.0f64);
    for i in 0..n_k {
        let k = modulus(lin(0.0, 1.0, n_k, i));
        for j in 0..n_u {
            let t = jacobi_sncndn(lin(-50.0, 50.0, n_u, j), k);
            e1 = e1.max((t.sn * t.sn + t.cn * t.cn - 1.0).abs());
            e2 = e2.max((t.dn * t.dn + k.k2() * t.sn * t.sn - 1.0).abs());
        }
    }
    let n = n_k * n_u;
    [PropertyReport::new("sn^2+cn^2=1", n, e1, 1e-12, 0), PropertyReport::new("dn^2+k^2 sn^2=1", n, e2, 1e-12, 0)]
}

/// `ε(u + 2K) − ε(u) − 2E` over an `n_k × n_u` sweep.
pub fn eps_quasi_period(n_k: usize, n_u: usize) -> PropertyReport {
    let mut err = 0.0f64;
    let mut failures = 0;
    for i in 0..n_k {
        let k = modulus(lin(0.0, 0.999, n_k, i));
        let Ok(kk) = complete_k(k) else {
            failures += 1;
            continue;
        };
        let ee = complete_e(k);
        for j in 0..n_u {
            let u = lin(-20.0, 20.0, n_u, j);
            err = err.max((jacobi_eps(u + 2.0 * kk, k) - jacobi_eps(u, k) - 2.0 * ee).abs());
        }
    }
    PropertyReport::new("eps quasi-periodicity", n_k * n_u, err, 1e-10, failures)
}

/// Closed-form exponential map against RK4 with 20000 steps on an `n_g × n_c` covector grid
/// with `c ∈ [−4, 4]` and `n_t` times in `(0, min(𝐭, 20)]`.
pub fn exp_vs_oracle(n_g: usize, n_c: usize, n_t: usize) -> PropertyReport {
    let mut err = 0.0f64;
    for i in 0..n_g {
        for j in 0..n_c {
            let lambda = Covector::new(lin(0.0, FOUR_PI, n_g, i), lin(-4.0, 4.0, n_c, j));
            let cap = tt(&lambda).min_with(20.0);
            for s in 1..=n_t {
                let nu = GeodesicSpec { lambda, t: cap * s as f64 / n_t as f64 };
                err = err.max(exp(&nu).max_abs_diff(&ode_oracle(&nu, 20_000)));
            }
        }
    }
    PropertyReport::new("exp vs RK4", n_g * n_c * n_t, err, 1e-7, 0)
}

fn rel_gap(a: &GroupPoint, b: &GroupPoint) -> f64 {
    a.max_abs_diff(b) / a.max_abs().max(1.0)
}

/// `exp ∘ ε_n = ε_m ∘ exp` for the seven reflections on an `n_g × n_c × n_t` grid.
pub fn equivariance(n_g: usize, n_c: usize, n_t: usize) -> PropertyReport {
    let mut err = 0.0f64;
    for i in 0..n_g {
        for j in 0..n_c {
            for s in 0..n_t {
                let nu =
                    GeodesicSpec { lambda: Covector::new(lin(0.0, FOUR_PI, n_g, i), lin(-4.0, 4.0, n_c, j)), t: lin(0.0, 8.0, n_t, s) };
                let q = exp(&nu);
                for r in Reflection::ALL {
                    err = err.max(rel_gap(&exp(&reflect_n(r, &nu)), &reflect_m(r, &q)));
                }
            }
        }
    }
    PropertyReport::new("reflection equivariance", 7 * n_g * n_c * n_t, err, 1e-9, 0)
}

/// Largest chart distance between two geodesics, with `γ` compared on the circle of length 4π.
pub fn chart_gap(a: &GeodesicSpec, b: &GeodesicSpec) -> f64 {
    let d = normalize_angle(a.lambda.gamma() - b.lambda.gamma());
    d.min(FOUR_PI - d).max((a.lambda.c() - b.lambda.c()).abs()).max((a.t - b.t).abs())
}

/// `solve_interior ∘ exp = id` on the given geodesics, which must lie in `D₁ ∪ D₂`.
pub fn interior_round_trip(samples: &[GeodesicSpec]) -> PropertyReport {
    let cfg = SolverConfig::default();
    let mut err = 0.0f64;
    let mut failures = 0;
    for nu in samples {
        match solve_interior(&exp(nu), &cfg) {
            Ok(got) => err = err.max(chart_gap(nu, &got)),
            Err(_) => failures += 1,
        }
    }
    PropertyReport::new("interior round trip", samples.len(), err, 1e-6, failures)
}

/// Deterministic interior geodesics with `t ≥ 0.05` taken from a covector grid.
pub fn interior_grid(n_g: usize, n_c: usize, n_t: usize) -> Vec<GeodesicSpec> {
    let mut out = Vec::new();
    for i in 0..n_g {
        for j in 0..n_c {
            let lambda = Covector::new(lin(0.0, FOUR_PI, n_g, i), lin(-4.0, 4.0, n_c, j));
            let cap = tt(&lambda).min_with(20.0);
            for s in 0..n_t {
                let nu = GeodesicSpec { lambda, t: 0.05 + (cap - 0.05) * lin(0.0, 1.0, n_t, s) };
                if nu.t < cap && in_ntilde(&nu) && exp(&nu).z.abs() > 1e-6 {
                    out.push(nu);
                }
            }
        }
    }
    out
}

fn strata_checks() -> Vec<PropertyReport> {
    let ys: Vec<f64> = (0..=400).map(|i| -1e-3 * (50.0 / 1e-3_f64).powf(i as f64 / 400.0)).collect();
    let mut violated = 0usize;
    let mut failures = 0;
    for &y in &ys {
        match (x2_of_y(y), x3_of_y(y)) {
            (Ok(x2), Ok(x3)) => {
                let violations = [x2 - (-y), (-y - 2.0) - x2, (2.0 * PI).max(2.0 - y) - x3, x2 - x3];
                violated += violations.iter().filter(|&&v| v >= 0.0).count();
            }
            _ => failures += 1,
        }
    }
    let reps = [(20.0, -3.0, 1), (1.0, -10.0, 9), (9.0, 0.0, 17), (5.0, -1.0, 35), (PI, 0.0, 39), (2.0 * PI, 0.0, 33)];
    let mut mismatches = 0;
    for (x, y, j) in reps {
        let base = StratumIndex::new(j).expect("representative indices are valid");
        for r in Reflection::ALL {
            let q = reflect_m(r, &GroupPoint::new(x, y, 0.0));
            match classify_plane(q.x, q.y, CURVE_BAND) {
                Ok(l) if l.index == image_index(base, Some(r)) => {}
                _ => mismatches += 1,
            }
        }
    }
    let mut z_err = 0.0f64;
    let n = 30;
    for i in 0..n {
        for j in 0..n {
            let lambda = Covector::new(lin(0.0, FOUR_PI, n, i), lin(-4.0, 4.0, n, j));
            if !matches!(classify(&lambda, 1e-6).case, Case::C1 | Case::C2) {
                continue;
            }
            if let Some(t) = t1_max(&lambda).finite() {
                z_err = z_err.max(exp(&GeodesicSpec { lambda, t }).z.abs());
            }
        }
    }
    vec![
        PropertyReport::new("curve bound violations", ys.len(), violated as f64, 0.0, failures),
        PropertyReport::new("reflected stratum mismatches", reps.len() * 7, mismatches as f64, 0.0, 0),
        PropertyReport::new("first Maxwell points in z=0", n * n, z_err, 1e-8, 0),
    ]
}

/// Runs one suite at the default sizes used by the command-line tool.
pub fn run(suite: Suite) -> Report {
    let mut properties = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Elliptic {
        properties.extend(jacobi_identities(100, 1000));
        properties.push(eps_quasi_period(50, 200));
    }
    if all || suite == Suite::Oracle {
        properties.push(exp_vs_oracle(10, 10, 4));
    }
    if all || suite == Suite::Symmetry {
        properties.push(equivariance(12, 12, 4));
    }
    if all || suite == Suite::Roundtrip {
        properties.push(interior_round_trip(&interior_grid(8, 8, 3)));
    }
    if all || suite == Suite::Strata {
        properties.extend(strata_checks());
    }
    let name = match suite {
        Suite::Elliptic => "elliptic",
        Suite::Oracle => "oracle",
        Suite::Symmetry => "symmetry",
        Suite::Roundtrip => "roundtrip",
        Suite::Strata => "strata",
        Suite::All => "all",
    };
    Report { suite: name.to_string(), passed: properties.iter().all(|p| p.passed), properties }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_suite_names() {
        assert_eq!("strata".parse::<Suite>().unwrap(), Suite::Strata);
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn elliptic_suite_passes() {
        let r = run(Suite::Elliptic);
        assert!(r.passed, "{r:?}");
        assert_eq!(r.properties.len(), 3);
    }

    #[test]
    fn interior_grid_respects_the_time_floor() {
        let g = interior_grid(4, 4, 2);
        assert!(!g.is_empty());
        assert!(g.iter().all(|nu| nu.t >= 0.05));
    }
}
