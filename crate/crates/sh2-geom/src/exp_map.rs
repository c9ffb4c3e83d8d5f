//! The exponential map `Exp(λ, t)`: endpoints of arclength-parametrized
//! geodesics issued from the identity, in closed form for every energy stratum.
//!
//! The group is `SH(2) ≅ ℝ³` with horizontal dynamics
//! `ẋ = cos(γ/2) cosh z`, `ẏ = cos(γ/2) sinh z`, `ż = sin(γ/2)` driven by the
//! pendulum of [`crate::pendulum`].

use libm::{cosh, exp as exp_real, log, log1p, sincos, sinh, tanh};

use crate::elliptic::{EllipticModulus, Modulus};
use crate::pendulum::{classify, to_elliptic_tagged, Case, Covector, EllipticCoords, Sign};
use crate::{Error, DEFAULT_TOL};

/// A point `(x, y, z)` of the group.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct GroupPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl GroupPoint {
    pub const ORIGIN: GroupPoint = GroupPoint { x: 0.0, y: 0.0, z: 0.0 };

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        GroupPoint { x, y, z }
    }

    /// Largest coordinate difference.
    pub fn max_abs_diff(&self, other: &GroupPoint) -> f64 {
        (self.x - other.x).abs().max((self.y - other.y).abs()).max((self.z - other.z).abs())
    }

    pub fn max_abs(&self) -> f64 {
        self.max_abs_diff(&GroupPoint::ORIGIN)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

/// A point `(λ, t)` of the preimage of the exponential map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodesicSpec {
    pub lambda: Covector,
    pub t: f64,
}

impl GeodesicSpec {
    pub fn new(lambda: Covector, t: f64) -> Result<Self, Error> {
        if t >= 0.0 && t.is_finite() {
            Ok(GeodesicSpec { lambda, t })
        } else {
            Err(Error::Domain { what: "geodesic time", value: t })
        }
    }
}

/// Midpoint chart: `τ` is the chart value at time `t/2`, `p` the half-length in chart units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TauP {
    pub tau: f64,
    pub p: f64,
}

/// `(1/(dn − k cn), 1/(dn + k cn))`, each formed from the larger denominator.
fn inverse_pair(k: Modulus, cn: f64, dn: f64) -> (f64, f64) {
    let kk = k.k();
    if cn >= 0.0 {
        let plus = dn + kk * cn;
        (plus / k.kp2(), 1.0 / plus)
    } else {
        let minus = dn - kk * cn;
        (1.0 / minus, minus / k.kp2())
    }
}

/// `ln(dn − k cn)`.
fn ln_minus(k: Modulus, cn: f64, dn: f64) -> f64 {
    let kk = k.k();
    if cn > 0.0 {
        log(k.kp2()) - log(dn + kk * cn)
    } else {
        log(dn - kk * cn)
    }
}

/// `ln cosh(u)` for any magnitude of `u`.
fn ln_cosh(u: f64) -> f64 {
    let a = u.abs();
    a + log1p(libm::exp(-2.0 * a)) - core::f64::consts::LN_2
}

/// Endpoint for an oscillating pendulum (`C₁`).
pub fn exp_c1(e: &EllipticCoords, t: f64) -> GroupPoint {
    let k = e.k();
    let em = EllipticModulus::new(k);
    let p0 = em.eval(e.phi());
    let p1 = em.eval(e.phi() + t);
    let (w, v) = inverse_pair(k, p0.cn, p0.dn);
    let de = p1.eps - p0.eps;
    let dsn = p1.sn - p0.sn;
    let kk = k.k();
    let s1 = e.s1();
    GroupPoint {
        x: 0.5 * s1 * ((w + v) * de + kk * (v - w) * dsn),
        y: 0.5 * ((w - v) * de - kk * (v + w) * dsn),
        z: s1 * (ln_minus(k, p1.cn, p1.dn) - ln_minus(k, p0.cn, p0.dn)),
    }
}

/// Endpoint for a rotating pendulum (`C₂`); the chart coordinate is `ψ`.
pub fn exp_c2(e: &EllipticCoords, t: f64) -> GroupPoint {
    let k = e.k();
    let em = EllipticModulus::new(k);
    let psi_t = e.phi() + t / k.k();
    let p0 = em.eval(e.phi());
    let p1 = em.eval(psi_t);
    let (w, v) = inverse_pair(k, p0.cn, p0.dn);
    let b = p1.eps - p0.eps - k.kp2() * (psi_t - e.phi());
    let dsn = p1.sn - p0.sn;
    let kk = k.k();
    let s2 = e.s2();
    GroupPoint {
        x: 0.5 * (v - w) * b + 0.5 * kk * (w + v) * dsn,
        y: -0.5 * s2 * (v + w) * b + 0.5 * s2 * kk * (w - v) * dsn,
        z: s2 * (ln_minus(k, p1.cn, p1.dn) - ln_minus(k, p0.cn, p0.dn)),
    }
}

/// Endpoint on the separatrix (`C₃`).
pub fn exp_c3(e: &EllipticCoords, t: f64) -> GroupPoint {
    let phi = e.phi();
    let phi_t = phi + t;
    let (s1, s2) = (e.s1(), e.s2());
    let inv_w = 1.0 / cosh(phi);
    // w·(tanh φ_t − tanh φ) = sinh t / cosh φ_t
    let w_dtanh = sinh(t) / cosh(phi_t);
    let w_dtanh = if w_dtanh.is_finite() { w_dtanh } else { cosh(phi) * (tanh(phi_t) - tanh(phi)) };
    GroupPoint { x: 0.5 * s1 * (t * inv_w + w_dtanh), y: 0.5 * s2 * (t * inv_w - w_dtanh), z: s1 * s2 * (ln_cosh(phi_t) - ln_cosh(phi)) }
}

/// Endpoint at the stable equilibrium: a straight line along `x`.
pub fn exp_c4(s1: Sign, t: f64) -> GroupPoint {
    GroupPoint::new(s1.value() * t, 0.0, 0.0)
}

/// Endpoint at the unstable equilibrium: a straight line along `z`.
pub fn exp_c5(sgn_sin: Sign, t: f64) -> GroupPoint {
    GroupPoint::new(0.0, 0.0, sgn_sin.value() * t)
}

/// Endpoint for elliptic coordinates, dispatching on their stratum.
pub fn exp_elliptic(e: &EllipticCoords, t: f64) -> GroupPoint {
    match e.case() {
        Case::C1 => exp_c1(e, t),
        Case::C2 => exp_c2(e, t),
        _ => exp_c3(e, t),
    }
}

/// The exponential map with the default separatrix band.
pub fn exp(nu: &GeodesicSpec) -> GroupPoint {
    exp_with_tol(nu, DEFAULT_TOL)
}

/// The exponential map, classifying `λ` with separatrix band `tol`.
pub fn exp_with_tol(nu: &GeodesicSpec, tol: f64) -> GroupPoint {
    let tag = classify(&nu.lambda, tol);
    match tag.case {
        Case::C4 => exp_c4(tag.s1.nonzero(), nu.t),
        Case::C5 => exp_c5(Sign::of(nu.lambda.half_angle().0), nu.t),
        _ => match to_elliptic_tagged(&nu.lambda, tag) {
            Ok(e) => exp_elliptic(&e, nu.t),
            // Only reachable when rounding puts an oscillation at k = 0.
            Err(_) => exp_c4(tag.s1.nonzero(), nu.t),
        },
    }
}

/// `(R₁, R₂) = (y cosh(z/2) − x sinh(z/2), x cosh(z/2) − y sinh(z/2))`.
pub fn r1r2(q: &GroupPoint) -> (f64, f64) {
    let (ch, sh) = (cosh(0.5 * q.z), sinh(0.5 * q.z));
    (q.y * ch - q.x * sh, q.x * ch - q.y * sh)
}

/// `sinh z` at the endpoint of an oscillation, written in the midpoint chart.
///
/// # Panics
/// If `k = 1`, where the denominator can vanish.
pub fn sinh_z(p: f64, tau: f64, k: Modulus, s1: Sign) -> f64 {
    let em = EllipticModulus::new(k);
    let (snp, snt) = (em.sncndn(p).sn, em.sncndn(tau).sn);
    let delta = 1.0 - k.k2() * snp * snp * snt * snt;
    assert!(delta > 0.0, "sinh_z denominator must be positive");
    s1.value() * 2.0 * k.k() * snp * snt / delta
}

/// Arclength controls `(u₁, u₂) = (cos(γ/2), sin(γ/2))`.
pub fn controls(lambda: &Covector) -> (f64, f64) {
    let (s, c) = lambda.half_angle();
    (c, s)
}

/// Midpoint chart values of `(λ, t)`.
pub fn tau_p(e: &EllipticCoords, t: f64) -> TauP {
    let p = 0.5 * e.chart_step(t);
    TauP { tau: e.phi() + p, p }
}

type State = [f64; 5];

fn field(s: &State) -> State {
    let (g, c, z) = (s[0], s[1], s[4]);
    let (sh, ch) = sincos(0.5 * g);
    let (ez, iz) = (exp_real(z), exp_real(-z));
    [c, -2.0 * sh * ch, 0.5 * ch * (ez + iz), 0.5 * ch * (ez - iz), sh]
}

fn axpy(a: f64, x: &State, y: &State) -> State {
    core::array::from_fn(|i| y[i] + a * x[i])
}

/// Fixed-step RK4 integration of the full geodesic system from `(λ, origin)`.
pub fn ode_oracle(nu: &GeodesicSpec, steps: usize) -> GroupPoint {
    let steps = steps.max(1);
    let h = nu.t / steps as f64;
    let mut s: State = [nu.lambda.gamma(), nu.lambda.c(), 0.0, 0.0, 0.0];
    for _ in 0..steps {
        let k1 = field(&s);
        let k2 = field(&axpy(0.5 * h, &k1, &s));
        let k3 = field(&axpy(0.5 * h, &k2, &s));
        let k4 = field(&axpy(h, &k3, &s));
        s = core::array::from_fn(|i| s[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]));
    }
    GroupPoint::new(s[2], s[3], s[4])
}
