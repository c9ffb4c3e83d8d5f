//! Maxwell and conjugate times, the cut time `𝐭(λ)`, and membership in the
//! domains `D₁`, `D₂` where the exponential map is a diffeomorphism.

use core::f64::consts::PI;

use libm::{cosh, sinh, sqrt};

use crate::elliptic::{complete_k, EllipticModulus, Modulus};
use crate::exp_map::{controls, exp_with_tol, GeodesicSpec};
use crate::ext::ExtReal;
use crate::pendulum::{classify, pendulum_flow, Case, Covector};
use crate::roots::{bisect, det3};
use crate::{Error, DEFAULT_TOL};

/// First Maxwell time, conjugate-time bracket and cut time of one covector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalityBounds {
    pub t_max1: ExtReal,
    pub t_conj_lo: ExtReal,
    pub t_conj_hi: ExtReal,
    pub t_cut: ExtReal,
}

/// Modulus of the oscillation (`E < 1`) or rotation (`E > 1`) with energy `e`.
fn modulus_of_energy(e: f64) -> Modulus {
    let k = if e < 1.0 { sqrt(0.5 * (e + 1.0)) } else { sqrt(2.0 / (e + 1.0)) };
    Modulus::new(k.clamp(0.0, 1.0)).unwrap_or(Modulus::ZERO)
}

fn modulus_of(lambda: &Covector, case: Case) -> Modulus {
    let (sh, _) = lambda.half_angle();
    let c = lambda.c();
    let k = match case {
        Case::C1 => sqrt(sh * sh + 0.25 * c * c),
        _ => sqrt(4.0 / (c * c + 4.0 * sh * sh)),
    };
    Modulus::new(k.min(1.0 - f64::EPSILON / 2.0)).unwrap_or(Modulus::ZERO)
}

fn four_k(k: Modulus) -> f64 {
    4.0 * complete_k(k).unwrap_or(f64::INFINITY)
}

/// First Maxwell time: `4K` on `C₁`, `4kK` on `C₂`, infinite elsewhere.
pub fn t1_max(lambda: &Covector) -> ExtReal {
    match classify(lambda, DEFAULT_TOL).case {
        Case::C1 => ExtReal::from(four_k(modulus_of(lambda, Case::C1))),
        Case::C2 => {
            let k = modulus_of(lambda, Case::C2);
            ExtReal::from(k.k() * four_k(k))
        }
        _ => ExtReal::Infinite,
    }
}

/// `f₁(p) = cn p · E(p) − sn p · dn p`.
pub fn f1(p: f64, k: Modulus) -> f64 {
    let j = EllipticModulus::new(k).eval(p);
    j.cn * j.eps - j.sn * j.dn
}

/// `f₂(p) = dn p · E(p) − k² sn p · cn p`.
pub fn f2(p: f64, k: Modulus) -> f64 {
    let j = EllipticModulus::new(k).eval(p);
    j.dn * j.eps - k.k2() * j.sn * j.cn
}

/// First positive root of `f₁`, located in `(2K, 3K)`.
pub fn p11_root(k: Modulus) -> Result<f64, Error> {
    if k.k() <= 0.0 || k.is_one() {
        return Err(Error::Domain { what: "p11 modulus", value: k.k() });
    }
    let em = EllipticModulus::new(k);
    let f = |p: f64| {
        let j = em.eval(p);
        j.cn * j.eps - j.sn * j.dn
    };
    bisect(f, 2.0 * em.big_k, 3.0 * em.big_k, 1e-13, "p11 root")
}

/// Bracket for the first conjugate time.
pub fn t1_conj_bounds(lambda: &Covector) -> Result<(ExtReal, ExtReal), Error> {
    match classify(lambda, DEFAULT_TOL).case {
        Case::C1 => {
            let k = modulus_of(lambda, Case::C1);
            Ok((ExtReal::from(four_k(k)), ExtReal::from(2.0 * p11_root(k)?)))
        }
        Case::C2 => {
            let k = modulus_of(lambda, Case::C2);
            Ok((ExtReal::from(k.k() * four_k(k)), ExtReal::from(2.0 * k.k() * p11_root(k)?)))
        }
        Case::C4 => Ok((ExtReal::Finite(2.0 * PI), ExtReal::Finite(2.0 * PI))),
        Case::C3 | Case::C5 => Ok((ExtReal::Infinite, ExtReal::Infinite)),
    }
}

/// `𝐭` as a function of the energy alone.
pub fn tt_energy(e: f64) -> ExtReal {
    if (e - 1.0).abs() <= DEFAULT_TOL {
        ExtReal::Infinite
    } else if (e + 1.0).abs() <= DEFAULT_TOL {
        ExtReal::Finite(2.0 * PI)
    } else {
        let k = modulus_of_energy(e);
        if e < 1.0 {
            ExtReal::from(four_k(k))
        } else {
            ExtReal::from(k.k() * four_k(k))
        }
    }
}

/// The function `𝐭(λ) = min(t₁^Max, t₁^conj)`.
pub fn tt(lambda: &Covector) -> ExtReal {
    match classify(lambda, DEFAULT_TOL).case {
        Case::C4 => ExtReal::Finite(2.0 * PI),
        _ => t1_max(lambda),
    }
}

/// The cut time, which coincides with `𝐭(λ)`.
pub fn cut_time(lambda: &Covector) -> ExtReal {
    tt(lambda)
}

/// All optimality times of one covector.
pub fn bounds(lambda: &Covector) -> Result<OptimalityBounds, Error> {
    let (lo, hi) = t1_conj_bounds(lambda)?;
    Ok(OptimalityBounds { t_max1: t1_max(lambda), t_conj_lo: lo, t_conj_hi: hi, t_cut: tt(lambda) })
}

/// Default relative step of [`jacobian_det`].
pub const JACOBIAN_STEP: f64 = 1e-5;

/// Determinant of `∂(x, y, z)/∂(γ, c, t)` at `ν`.
///
/// The `γ` and `c` columns are central differences with step
/// `h·max(1, |coordinate|)`; the `t` column is the exact velocity.
pub fn jacobian_det(nu: &GeodesicSpec, h: f64) -> f64 {
    let (g, c, t) = (nu.lambda.gamma(), nu.lambda.c(), nu.t);
    let at = |g: f64, c: f64| exp_with_tol(&GeodesicSpec { lambda: Covector::new(g, c), t }, 0.0);
    let hg = h * g.abs().max(1.0);
    let hc = h * c.abs().max(1.0);
    let (gp, gm) = (at(g + hg, c), at(g - hg, c));
    let (cp, cm) = (at(g, c + hc), at(g, c - hc));
    let q = exp_with_tol(nu, 0.0);
    let (u1, u2) = controls(&pendulum_flow(&nu.lambda, t));
    let cols = [
        [(gp.x - gm.x) / (2.0 * hg), (gp.y - gm.y) / (2.0 * hg), (gp.z - gm.z) / (2.0 * hg)],
        [(cp.x - cm.x) / (2.0 * hc), (cp.y - cm.y) / (2.0 * hc), (cp.z - cm.z) / (2.0 * hc)],
        [u1 * cosh(q.z), u1 * sinh(q.z), u2],
    ];
    det3(&cols)
}

/// Relative size below which the determinant at the Maxwell time counts as zero.
const ENDPOINT_ZERO: f64 = 1e-7;
const CONJ_SCAN: usize = 48;

/// First zero of the Jacobian determinant inside the conjugate-time bracket.
///
/// Exact values are returned on `C₃ ∪ C₄ ∪ C₅`. When the determinant already
/// vanishes at the first Maxwell time, that time is returned.
pub fn conj_time_numeric(lambda: &Covector) -> Result<ExtReal, Error> {
    let case = classify(lambda, DEFAULT_TOL).case;
    let (lo, hi) = match t1_conj_bounds(lambda)? {
        (ExtReal::Finite(lo), ExtReal::Finite(hi)) if matches!(case, Case::C1 | Case::C2) => (lo, hi),
        (lo, _) => return Ok(lo),
    };
    let det = |t: f64| jacobian_det(&GeodesicSpec { lambda: *lambda, t }, JACOBIAN_STEP);
    let mut prev_t = lo;
    let d_lo = det(lo);
    let mut prev = d_lo;
    let mut scale = d_lo.abs();
    let mut change = None;
    for i in 1..=CONJ_SCAN {
        let t = lo + (hi - lo) * i as f64 / CONJ_SCAN as f64;
        let d = det(t);
        scale = scale.max(d.abs());
        if change.is_none() && d.signum() != prev.signum() {
            change = Some((prev_t, t));
        }
        prev_t = t;
        prev = d;
    }
    if d_lo.abs() <= ENDPOINT_ZERO * scale {
        return Ok(ExtReal::Finite(lo));
    }
    match change {
        Some((a, b)) => bisect(det, a, b, 1e-12, "conjugate time").map(ExtReal::Finite),
        None => Err(Error::NoBracket { what: "conjugate time", lo, hi }),
    }
}

/// `sin(γ_{t/2}/2)` together with the condition `0 < t < 𝐭(λ)`.
fn midpoint_sign(nu: &GeodesicSpec) -> Option<f64> {
    let tag = classify(&nu.lambda, DEFAULT_TOL);
    match tag.case {
        Case::C4 => None,
        Case::C5 => (nu.t > 0.0).then(|| nu.lambda.half_angle().0),
        _ => {
            if !(nu.t > 0.0 && tt(&nu.lambda) > nu.t) {
                return None;
            }
            Some(pendulum_flow(&nu.lambda, 0.5 * nu.t).half_angle().0)
        }
    }
}

/// Membership in `D₁` (endpoints with `z > 0`).
pub fn in_d1(nu: &GeodesicSpec) -> bool {
    midpoint_sign(nu).is_some_and(|s| s > 0.0)
}

/// Membership in `D₂` (endpoints with `z < 0`).
pub fn in_d2(nu: &GeodesicSpec) -> bool {
    midpoint_sign(nu).is_some_and(|s| s < 0.0)
}

/// Membership in `Ñ = D₁ ⊔ D₂`.
pub fn in_ntilde(nu: &GeodesicSpec) -> bool {
    midpoint_sign(nu).is_some_and(|s| s != 0.0)
}
