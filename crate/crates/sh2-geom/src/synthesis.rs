//! Inverse exponential map: every minimizing geodesic from the identity to a
//! target point, its length, and the optimality class of the target.
//!
//! Targets off the plane `z = 0` have a unique preimage in `D₁` (for `z > 0`)
//! or `D₂` (for `z < 0`), found by a multi-start damped Newton iteration in the
//! midpoint chart `(γ_{t/2}, c_{t/2}, t)`. Plane targets are first classified
//! into a stratum and then inverted through that stratum's own chart.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use libm::{acos, sqrt};

use crate::elliptic::{a_fn, complete_e, complete_k, incomplete_f, Modulus};
use crate::exp_map::{exp, GeodesicSpec, GroupPoint};
use crate::optimality::{tt, tt_energy};
use crate::pendulum::{pendulum_flow, reflect_m, reflect_n, Case, Covector, EllipticCoords, Reflection, Sign, TWO_PI};
use crate::plane::{classify_plane, invert_curve_k, invert_increasing, maxwell_partner, quadrant_reduce, Curve, Family, PlaneLabel};
use crate::roots::solve3;
use crate::Error;

/// Optimality class of a target point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    /// Off the plane: one minimizer, neither cut nor conjugate.
    InteriorUnique,
    /// Maxwell stratum: two minimizers of equal length.
    MaxwellPair,
    /// Conjugate cut stratum: one minimizer ending at a conjugate point.
    ConjCutUnique,
    /// Plane point outside the cut locus: one minimizer.
    RestUnique,
}

/// Minimizers of one target together with its distance from the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct SynthesisResult {
    pub minimizers: Vec<GeodesicSpec>,
    pub distance: f64,
    pub classification: Classification,
    /// Largest `|exp(ν) − q|` over the returned minimizers.
    pub residual: f64,
    /// Plane stratum of the target, when it lies in `z = 0`.
    pub label: Option<PlaneLabel>,
}

/// Tolerances and search budget of the inverse map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Newton stops once the residual falls below `tol · max(1, |q|)`.
    pub tol: f64,
    /// Largest accepted residual, relative to `max(1, |q|)`.
    pub accept: f64,
    /// Targets with `|z|` at most this are routed to the plane solver.
    pub plane_band: f64,
    /// Curve-membership band used when classifying plane targets.
    pub curve_band: f64,
    /// Seed grid sizes along `γ_{t/2}`, `c_{t/2}` and `t`.
    pub seeds: (usize, usize, usize),
    /// Seeds cover `|c_{t/2}| ≤ c_max`.
    pub c_max: f64,
    /// Number of best seeds handed to Newton.
    pub starts: usize,
    pub max_iter: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tol: 1e-13,
            accept: 1e-8,
            plane_band: 1e-8,
            curve_band: 1e-7,
            seeds: (12, 12, 8),
            c_max: 6.0,
            starts: 12,
            max_iter: 60,
        }
    }
}

fn scale_of(q: &GroupPoint) -> f64 {
    q.max_abs().max(1.0)
}

/// Geodesic whose covector at time `t/2` is `(gm, cm)`.
fn from_midpoint(gm: f64, cm: f64, t: f64) -> GeodesicSpec {
    let lambda = pendulum_flow(&Covector::new(gm, cm), -0.5 * t);
    GeodesicSpec { lambda, t }
}

fn midpoint_tt(gm: f64, cm: f64) -> f64 {
    tt(&Covector::new(gm, cm)).finite().unwrap_or(f64::INFINITY)
}

/// Largest time considered by the seed grid.
fn time_cap(q: &GroupPoint) -> f64 {
    2.0 * (q.x.abs() + q.y.abs() + q.z.abs()) + 2.0 * TWO_PI
}

fn residual_vec(q: &GroupPoint, p: &GroupPoint) -> [f64; 3] {
    [p.x - q.x, p.y - q.y, p.z - q.z]
}

fn norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
}

/// Midpoint-chart state of the interior solver: `(γ_{t/2}, c_{t/2}, t)`.
type Mid = [f64; 3];

fn mid_exp(m: &Mid) -> GroupPoint {
    exp(&from_midpoint(m[0], m[1], m[2]))
}

fn mid_admissible(m: &Mid) -> bool {
    m[0] > 0.0 && m[0] < TWO_PI && m[2] > 0.0 && m[2] < midpoint_tt(m[0], m[1])
}

/// Coordinates in which the interior Newton iteration runs.
#[derive(Clone, Copy)]
enum Chart {
    /// `(γ_{t/2}, c_{t/2}, t)` itself.
    Midpoint,
    /// `(γ_{t/2}, ln|E − 1|, t/𝐭)` on one side of the separatrix, with a fixed sign of `c_{t/2}`.
    Energy { side: f64, sign_c: f64 },
}

impl Chart {
    fn to_mid(self, s: &[f64; 3]) -> Option<Mid> {
        let m = match self {
            Chart::Midpoint => *s,
            Chart::Energy { side, sign_c } => {
                let level = 1.0 + side * libm::exp(s[1]);
                let c2 = 2.0 * (level + libm::cos(s[0]));
                if !(c2 > 0.0 && s[2] > 0.0 && s[2] < 1.0) {
                    return None;
                }
                let cm = sign_c * libm::sqrt(c2);
                [s[0], cm, s[2] * midpoint_tt(s[0], cm)]
            }
        };
        mid_admissible(&m).then_some(m)
    }
}

/// Target coordinates for the residual; `(asinh x, asinh y, z)` when `warped`, which keeps
/// the system well scaled where `x` and `y` grow exponentially in `t` near the separatrix.
fn view(p: &GroupPoint, warped: bool) -> [f64; 3] {
    if warped {
        [libm::asinh(p.x), libm::asinh(p.y), p.z]
    } else {
        [p.x, p.y, p.z]
    }
}

/// Damped Newton from `start` in `chart`; returns the final state and its raw residual.
fn newton_interior(q: &GroupPoint, chart: Chart, start: [f64; 3], cfg: &SolverConfig, warped: bool) -> Option<(Mid, f64)> {
    let goal = if warped { cfg.tol } else { cfg.tol * scale_of(q) };
    let wq = view(q, warped);
    let eval = |s: &[f64; 3]| -> Option<(Mid, [f64; 3])> {
        let m = chart.to_mid(s)?;
        let v = view(&mid_exp(&m), warped);
        let r = [v[0] - wq[0], v[1] - wq[1], v[2] - wq[2]];
        r.iter().all(|x| x.is_finite()).then_some((m, r))
    };
    let mut s = start;
    let (mut m, mut r) = eval(&s)?;
    let mut rn = norm(&r);
    for _ in 0..cfg.max_iter {
        if rn <= goal {
            break;
        }
        let mut a = [[0.0; 3]; 3];
        for j in 0..3 {
            let h = 1e-7 * s[j].abs().max(1.0);
            let (mut sp, mut sm) = (s, s);
            sp[j] += h;
            sm[j] -= h;
            let (Some((_, rp)), Some((_, rm))) = (eval(&sp), eval(&sm)) else { return Some((m, norm(&residual_vec(q, &mid_exp(&m))))) };
            for i in 0..3 {
                a[i][j] = (rp[i] - rm[i]) / (2.0 * h);
            }
        }
        let Some(step) = solve3(a, [-r[0], -r[1], -r[2]]) else { break };
        let mut alpha = 1.0;
        let mut improved = false;
        for _ in 0..40 {
            let cand = [s[0] + alpha * step[0], s[1] + alpha * step[1], s[2] + alpha * step[2]];
            if let Some((mc, rc)) = eval(&cand) {
                let rcn = norm(&rc);
                if rcn < rn {
                    (s, m, r, rn) = (cand, mc, rc, rcn);
                    improved = true;
                    break;
                }
            }
            alpha *= 0.5;
        }
        if !improved {
            break;
        }
    }
    Some((m, norm(&residual_vec(q, &mid_exp(&m)))))
}

/// Ranks `states` of `chart` by their residual at `q`.
fn rank_seeds(q: &GroupPoint, chart: Chart, states: impl Iterator<Item = [f64; 3]>, warped: bool) -> Vec<(f64, [f64; 3])> {
    let wq = view(q, warped);
    let mut seeds: Vec<(f64, [f64; 3])> = states
        .filter_map(|s| {
            let v = view(&mid_exp(&chart.to_mid(&s)?), warped);
            let rn = norm(&[v[0] - wq[0], v[1] - wq[1], v[2] - wq[2]]);
            rn.is_finite().then_some((rn, s))
        })
        .collect();
    seeds.sort_by(|a, b| a.0.total_cmp(&b.0));
    seeds
}

/// Midpoint-chart seed grid with geometric times between `|z|` and `min(𝐭, time_cap)`.
fn midpoint_grid(q: &GroupPoint, cfg: &SolverConfig) -> Vec<[f64; 3]> {
    let (ng, nc, nt) = cfg.seeds;
    let t_lo = q.z.abs().max(1e-3);
    let cap = time_cap(q);
    let mut out = Vec::with_capacity(ng * nc * nt);
    for i in 0..ng {
        let gm = TWO_PI * (i as f64 + 0.5) / ng as f64;
        for j in 0..nc {
            let cm = -cfg.c_max + 2.0 * cfg.c_max * (j as f64 + 0.5) / nc as f64;
            let t_hi = midpoint_tt(gm, cm).min(cap);
            if t_hi <= t_lo {
                continue;
            }
            for l in 0..nt {
                let frac = (l as f64 + 0.5) / nt as f64;
                out.push([gm, cm, t_lo * libm::pow(t_hi / t_lo, frac)]);
            }
        }
    }
    out
}

/// Energy-chart seeds with `|E − 1|` from 1 down to 1e-6 and `t/𝐭` across `(0, 1)`.
fn energy_grid(cfg: &SolverConfig) -> Vec<[f64; 3]> {
    let (ng, _, nt) = cfg.seeds;
    let (ng, nt) = (2 * ng, 2 * nt);
    let mut out = Vec::new();
    for i in 0..ng {
        let gm = TWO_PI * (i as f64 + 0.5) / ng as f64;
        for e in 0..=12 {
            let eta = -0.5 * core::f64::consts::LN_10 * e as f64;
            for l in 0..nt {
                out.push([gm, eta, (l as f64 + 0.5) / nt as f64]);
            }
        }
    }
    out
}

/// The unique minimizer ending at `q`, for `|z| > 0`.
///
/// Newton runs first from the best midpoint-chart seeds, in raw and then in warped target
/// coordinates; targets whose minimizer runs close to the separatrix are picked up by a
/// final pass in the energy chart.
pub fn solve_interior(q: &GroupPoint, cfg: &SolverConfig) -> Result<GeodesicSpec, Error> {
    if q.z == 0.0 {
        return Err(Error::Domain { what: "interior target height", value: 0.0 });
    }
    if q.z < 0.0 {
        let up = solve_interior(&reflect_m(Reflection::E3, q), cfg)?;
        return Ok(reflect_n(Reflection::E3, &up));
    }
    if q.x == 0.0 && q.y == 0.0 {
        return GeodesicSpec::new(Covector::new(PI, 0.0), q.z);
    }
    let accept = cfg.accept * scale_of(q);
    let mut best: Option<(f64, Mid)> = None;
    let attempt = |chart: Chart, states: Vec<[f64; 3]>, warped: bool, best: &mut Option<(f64, Mid)>| -> bool {
        for (_, seed) in rank_seeds(q, chart, states.into_iter(), warped).into_iter().take(cfg.starts) {
            if let Some((m, rn)) = newton_interior(q, chart, seed, cfg, warped) {
                if best.map_or(true, |(b, _)| rn < b) {
                    *best = Some((rn, m));
                }
                if rn <= accept {
                    return true;
                }
            }
        }
        false
    };
    let grid = midpoint_grid(q, cfg);
    let solved = attempt(Chart::Midpoint, grid.clone(), false, &mut best)
        || attempt(Chart::Midpoint, grid, true, &mut best)
        || [(-1.0, 1.0), (-1.0, -1.0), (1.0, 1.0), (1.0, -1.0)]
            .into_iter()
            .any(|(side, sign_c)| attempt(Chart::Energy { side, sign_c }, energy_grid(cfg), true, &mut best));
    let Some((rn, m)) = best else {
        return Err(Error::NumericFailure { what: "interior inverse", residual: f64::INFINITY, best: None });
    };
    let nu = from_midpoint(m[0], m[1], m[2]);
    if solved {
        Ok(nu)
    } else {
        Err(Error::NumericFailure { what: "interior inverse", residual: rn, best: Some(nu) })
    }
}

/// Oscillating geodesic with chart sign `s₁ = +1`, midpoint chart `τ` and half-length `p`.
fn oscillation(k: Modulus, tau: f64, p: f64) -> Result<GeodesicSpec, Error> {
    let e = EllipticCoords::new(Case::C1, Sign::Pos, Sign::Pos, tau - p, k)?;
    GeodesicSpec::new(e.covector(), 2.0 * p)
}

/// Rotating geodesic with `s₂ = +1`, midpoint chart `τ` and half-length `p` in the `ψ` scale.
fn rotation(k: Modulus, tau: f64, p: f64) -> Result<GeodesicSpec, Error> {
    let e = EllipticCoords::new(Case::C2, Sign::Pos, Sign::Pos, tau - p, k)?;
    GeodesicSpec::new(e.covector(), 2.0 * k.k() * p)
}

/// Chart of `m₁`: rotations with `p = 2K` and `τ = F(u, k)`.
fn solve_m1(x: f64, y: f64) -> Result<GeodesicSpec, Error> {
    let target = y * y - x * x;
    let k = invert_increasing(
        |k| {
            let a = a_fn(k);
            16.0 * a * a / k.kp2()
        },
        target,
        "m1 modulus",
    )?;
    let cos_u = (x * k.kp2() / (4.0 * k.k() * a_fn(k))).clamp(-1.0, 1.0);
    let big_k = complete_k(k)?;
    rotation(k, incomplete_f(acos(cos_u), k)?, 2.0 * big_k)
}

/// Chart of `m₃`: oscillations with `p = 2K` and `τ = F(u, k)`.
fn solve_m3(x: f64, y: f64) -> Result<GeodesicSpec, Error> {
    let target = x * x - y * y;
    let k = invert_increasing(
        |k| {
            let e = complete_e(k);
            16.0 * e * e / k.kp2()
        },
        target,
        "m3 modulus",
    )?;
    let cos_u = (-y * k.kp2() / (4.0 * k.k() * complete_e(k))).clamp(-1.0, 1.0);
    let big_k = complete_k(k)?;
    oscillation(k, incomplete_f(acos(cos_u), k)?, 2.0 * big_k)
}

/// Chart of `m₂`: geodesics with `γ_{t/2} = 0`, `c_{t/2} > 0`, solved for `(c_{t/2}, t)`.
fn solve_m2(x: f64, y: f64, cfg: &SolverConfig) -> Result<GeodesicSpec, Error> {
    let q = GroupPoint::new(x, y, 0.0);
    let eval = |cm: f64, t: f64| {
        let p = exp(&from_midpoint(0.0, cm, t));
        [p.x - x, p.y - y]
    };
    let admissible = |cm: f64, t: f64| cm > 0.0 && t > 0.0 && t < tt_energy(0.5 * cm * cm - 1.0).finite().unwrap_or(f64::INFINITY);
    let cap = time_cap(&q);
    let mut seeds = Vec::new();
    let (nc, nt) = (4 * cfg.seeds.1, 4 * cfg.seeds.2);
    for j in 0..nc {
        let cm = 2.0 * cfg.c_max * (j as f64 + 0.5) / nc as f64;
        let t_hi = tt_energy(0.5 * cm * cm - 1.0).finite().unwrap_or(f64::INFINITY).min(cap);
        for l in 0..nt {
            let t = t_hi * (l as f64 + 0.5) / nt as f64;
            let rn = norm(&eval(cm, t));
            if rn.is_finite() {
                seeds.push((rn, [cm, t]));
            }
        }
    }
    seeds.sort_by(|a, b| a.0.total_cmp(&b.0));
    let goal = cfg.tol * scale_of(&q);
    let accept = cfg.accept * scale_of(&q);
    let mut best: Option<(f64, [f64; 2])> = None;
    for (_, start) in seeds.into_iter().take(cfg.starts) {
        let mut m = start;
        let mut r = eval(m[0], m[1]);
        let mut rn = norm(&r);
        for _ in 0..cfg.max_iter {
            if rn <= goal {
                break;
            }
            let hc = 1e-7 * m[0].max(1.0);
            let ht = 1e-7 * m[1].max(1.0);
            let (cp, cq) = (eval(m[0] + hc, m[1]), eval(m[0] - hc, m[1]));
            let (tp, tq) = (eval(m[0], m[1] + ht), eval(m[0], m[1] - ht));
            let j = [
                [(cp[0] - cq[0]) / (2.0 * hc), (tp[0] - tq[0]) / (2.0 * ht)],
                [(cp[1] - cq[1]) / (2.0 * hc), (tp[1] - tq[1]) / (2.0 * ht)],
            ];
            let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
            if det == 0.0 || !det.is_finite() {
                break;
            }
            let step = [(-r[0] * j[1][1] + r[1] * j[0][1]) / det, (-r[1] * j[0][0] + r[0] * j[1][0]) / det];
            let mut alpha = 1.0;
            let mut improved = false;
            for _ in 0..40 {
                let cand = [m[0] + alpha * step[0], m[1] + alpha * step[1]];
                if admissible(cand[0], cand[1]) {
                    let rc = eval(cand[0], cand[1]);
                    if norm(&rc) < rn {
                        m = cand;
                        r = rc;
                        rn = norm(&rc);
                        improved = true;
                        break;
                    }
                }
                alpha *= 0.5;
            }
            if !improved {
                break;
            }
        }
        if best.map_or(true, |(b, _)| rn < b) {
            best = Some((rn, m));
        }
        if rn <= accept {
            break;
        }
    }
    match best {
        Some((rn, m)) if rn <= accept => Ok(from_midpoint(0.0, m[0], m[1])),
        Some((rn, m)) => {
            Err(Error::NumericFailure { what: "plane inverse on m2", residual: rn, best: Some(from_midpoint(0.0, m[0], m[1])) })
        }
        None => Err(Error::NumericFailure { what: "plane inverse on m2", residual: f64::INFINITY, best: None }),
    }
}

/// Minimizer ending at a point `(xq, yq, 0)` of the quadrant lying in stratum `base`.
fn solve_quadrant(base: u8, xq: f64, yq: f64, cfg: &SolverConfig) -> Result<GeodesicSpec, Error> {
    let c4 = Covector::new(0.0, 0.0);
    match base {
        1 => solve_m3(xq, yq),
        9 => solve_m1(xq, yq),
        35 => solve_m2(xq, yq, cfg),
        17 => {
            let k = invert_curve_k(Curve::G5, xq)?;
            let big_k = complete_k(k)?;
            oscillation(k, big_k, 2.0 * big_k)
        }
        21 => {
            let k = invert_curve_k(Curve::G3, yq)?;
            oscillation(k, 0.0, 2.0 * complete_k(k)?)
        }
        25 => {
            let k = invert_curve_k(Curve::G2, yq)?;
            rotation(k, 0.0, 2.0 * complete_k(k)?)
        }
        29 => {
            let k = invert_curve_k(Curve::G1, yq)?;
            let big_k = complete_k(k)?;
            rotation(k, big_k, 2.0 * big_k)
        }
        33 => GeodesicSpec::new(c4, TWO_PI),
        _ => GeodesicSpec::new(c4, xq),
    }
}

/// All minimizers ending at a point of the plane `z = 0` other than the origin.
pub fn solve_plane(q: &GroupPoint, cfg: &SolverConfig) -> Result<(Vec<GeodesicSpec>, PlaneLabel), Error> {
    let label = classify_plane(q.x, q.y, cfg.curve_band)?;
    let rep = quadrant_reduce(q.x, q.y)?;
    let (xq, yq) = match label.base.get() {
        17 | 33 | 39 => (rep.xq, 0.0),
        29 => (0.0, rep.yq),
        _ => (rep.xq, rep.yq),
    };
    let local = solve_quadrant(label.base.get(), xq, yq, cfg)?;
    let nu = match rep.reflection {
        Some(r) => reflect_n(r, &local),
        None => local,
    };
    let mut out = vec![nu];
    if let Some(partner) = maxwell_partner(label.base) {
        out.push(reflect_n(partner, &nu));
    }
    Ok((out, label))
}

fn classification_of(family: Family) -> Classification {
    match family {
        Family::Max | Family::CurveMax => Classification::MaxwellPair,
        Family::CurveConjCut | Family::PointConjCut => Classification::ConjCutUnique,
        Family::Rest => Classification::RestUnique,
    }
}

/// Minimizers, distance and optimality class of the target `q ≠ q₀`.
pub fn minimizers_with(q: &GroupPoint, cfg: &SolverConfig) -> Result<SynthesisResult, Error> {
    if !q.is_finite() {
        return Err(Error::Domain { what: "target coordinate", value: q.max_abs() });
    }
    if q.x == 0.0 && q.y == 0.0 && q.z == 0.0 {
        return Err(Error::OriginExcluded);
    }
    let (minimizers, classification, label) = if q.z.abs() > cfg.plane_band {
        (vec![solve_interior(q, cfg)?], Classification::InteriorUnique, None)
    } else {
        let (m, label) = solve_plane(q, cfg)?;
        (m, classification_of(label.family), Some(label))
    };
    let residual = minimizers.iter().map(|nu| exp(nu).max_abs_diff(q)).fold(0.0, f64::max);
    if residual.is_nan() || residual > cfg.accept.max(1e-7) * scale_of(q) {
        return Err(Error::NumericFailure { what: "synthesis", residual, best: minimizers.first().copied() });
    }
    let distance = minimizers[0].t;
    Ok(SynthesisResult { minimizers, distance, classification, residual, label })
}

/// [`minimizers_with`] under the default configuration.
pub fn minimizers(q: &GroupPoint) -> Result<SynthesisResult, Error> {
    minimizers_with(q, &SolverConfig::default())
}

/// Sub-Riemannian distance from the identity; zero at the identity itself.
pub fn distance(q: &GroupPoint) -> Result<f64, Error> {
    if *q == GroupPoint::ORIGIN {
        return Ok(0.0);
    }
    minimizers(q).map(|r| r.distance)
}

/// Points of the plane charts, exposed for forward-consistency checks.
pub mod charts {
    use super::*;

    /// `(x₉, y₉)` of the `m₁` chart at `(u, k)`.
    pub fn f9(u: f64, k: Modulus) -> (f64, f64) {
        let a = a_fn(k);
        let s = libm::sin(u);
        (4.0 * k.k() * a * libm::cos(u) / k.kp2(), -4.0 * a * sqrt(1.0 - k.k2() * s * s) / k.kp2())
    }

    /// `(x₁, y₁)` of the `m₃` chart at `(u, k)`.
    pub fn f1(u: f64, k: Modulus) -> (f64, f64) {
        let e = complete_e(k);
        let s = libm::sin(u);
        (4.0 * e * sqrt(1.0 - k.k2() * s * s) / k.kp2(), -4.0 * k.k() * e * libm::cos(u) / k.kp2())
    }

    /// `(x₃₅, y₃₅)` of the `m₂` chart on rotations at `(u, k)`.
    pub fn f35(u: f64, k: Modulus) -> (f64, f64) {
        let (s, c) = (libm::sin(u), libm::cos(u));
        let d = sqrt(1.0 - k.k2() * s * s);
        let f = incomplete_f(u, k).unwrap_or(f64::NAN);
        let alpha = crate::elliptic::incomplete_e_amp(u, k) - k.kp2() * f;
        let kp2 = k.kp2();
        (2.0 * k.k() / kp2 * (s * d - c * alpha), -2.0 / kp2 * (d * alpha - k.k2() * s * c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_and_vertical_targets() {
        let r = minimizers(&GroupPoint::new(PI, 0.0, 0.0)).unwrap();
        assert_eq!(r.classification, Classification::RestUnique);
        assert_eq!(r.minimizers.len(), 1);
        assert!((r.distance - PI).abs() < 1e-15);
        let r = minimizers(&GroupPoint::new(TWO_PI, 0.0, 0.0)).unwrap();
        assert_eq!(r.classification, Classification::ConjCutUnique);
        let r = minimizers(&GroupPoint::new(0.0, 0.0, 1.0)).unwrap();
        assert_eq!(r.minimizers[0].lambda, Covector::new(PI, 0.0));
        assert_eq!(r.distance, 1.0);
        assert_eq!(distance(&GroupPoint::ORIGIN), Ok(0.0));
        assert_eq!(minimizers(&GroupPoint::ORIGIN), Err(Error::OriginExcluded));
    }
}
