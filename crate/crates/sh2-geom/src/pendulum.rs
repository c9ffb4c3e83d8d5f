//! The vertical subsystem: a pendulum `γ̇ = c, ċ = −sin γ` on the cylinder
//! `γ ∈ ℝ/4πℤ`, its energy strata, rectifying elliptic coordinates, and the
//! seven reflections that generate its symmetry group.

use core::f64::consts::PI;

use libm::{atan2, atanh, cos, cosh, fmod, sin, sqrt, tanh};

use crate::elliptic::{complete_k, incomplete_f, jacobi_sncndn, Modulus};
use crate::exp_map::{GeodesicSpec, GroupPoint};
use crate::{Error, DEFAULT_TOL};

pub const FOUR_PI: f64 = 4.0 * PI;
pub const TWO_PI: f64 = 2.0 * PI;

/// Reduces an angle to `[0, 4π)`.
pub fn normalize_angle(gamma: f64) -> f64 {
    let mut r = fmod(gamma, FOUR_PI);
    if r < 0.0 {
        r += FOUR_PI;
    }
    if r >= FOUR_PI {
        r = 0.0;
    }
    r
}

/// A point `(γ, c)` of the pendulum phase cylinder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Covector {
    gamma: f64,
    c: f64,
}

impl Covector {
    /// `gamma` is taken modulo `4π`.
    pub fn new(gamma: f64, c: f64) -> Self {
        Covector { gamma: normalize_angle(gamma), c }
    }

    /// The angle, in `[0, 4π)`.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// `(sin(γ/2), cos(γ/2))`.
    pub fn half_angle(&self) -> (f64, f64) {
        (sin(0.5 * self.gamma), cos(0.5 * self.gamma))
    }
}

/// Pendulum energy `E = c²/2 − cos γ`.
pub fn energy(lambda: &Covector) -> f64 {
    0.5 * lambda.c * lambda.c - cos(lambda.gamma)
}

/// `E + 1 = c²/2 + 2 sin²(γ/2)`, exact near the stable equilibrium.
pub fn energy_above_min(lambda: &Covector) -> f64 {
    let (s, _) = lambda.half_angle();
    0.5 * lambda.c * lambda.c + 2.0 * s * s
}

/// `E − 1 = c²/2 − 2 cos²(γ/2)`, exact near the unstable equilibrium.
pub fn energy_above_separatrix(lambda: &Covector) -> f64 {
    let (_, h) = lambda.half_angle();
    0.5 * lambda.c * lambda.c - 2.0 * h * h
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn of(x: f64) -> Sign {
        if x > 0.0 {
            Sign::Pos
        } else if x < 0.0 {
            Sign::Neg
        } else {
            Sign::Zero
        }
    }

    pub fn value(self) -> f64 {
        match self {
            Sign::Neg => -1.0,
            Sign::Zero => 0.0,
            Sign::Pos => 1.0,
        }
    }

    /// `Zero` is sent to `Pos`; used where only a nonzero sign makes sense.
    pub fn nonzero(self) -> Sign {
        if self == Sign::Neg {
            Sign::Neg
        } else {
            Sign::Pos
        }
    }
}

/// Energy stratum of the phase cylinder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    /// Oscillations, `−1 < E < 1`.
    C1,
    /// Rotations, `E > 1`.
    C2,
    /// Separatrix, `E = 1, c ≠ 0`.
    C3,
    /// Stable equilibrium, `E = −1`.
    C4,
    /// Unstable equilibrium, `E = 1, c = 0`.
    C5,
}

/// Connected component of a stratum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    C1Zero,
    C1One,
    C2Plus,
    C2Minus,
    C3ZeroPlus,
    C3ZeroMinus,
    C3OnePlus,
    C3OneMinus,
    C4Zero,
    C4One,
    /// `γ = π`.
    C5Plus,
    /// `γ = 3π`.
    C5Minus,
}

/// Stratum of a covector with its sign labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StratumTag {
    pub case: Case,
    /// Sign of `cos(γ/2)`.
    pub s1: Sign,
    /// Sign of `c`.
    pub s2: Sign,
    pub branch: Branch,
}

fn branch_of(case: Case, s1: Sign, s2: Sign, sin_half: f64) -> Branch {
    let up1 = s1 != Sign::Neg;
    let up2 = s2 != Sign::Neg;
    match case {
        Case::C1 if up1 => Branch::C1Zero,
        Case::C1 => Branch::C1One,
        Case::C2 if up2 => Branch::C2Plus,
        Case::C2 => Branch::C2Minus,
        Case::C3 => match (up1, up2) {
            (true, true) => Branch::C3ZeroPlus,
            (true, false) => Branch::C3ZeroMinus,
            (false, true) => Branch::C3OnePlus,
            (false, false) => Branch::C3OneMinus,
        },
        Case::C4 if up1 => Branch::C4Zero,
        Case::C4 => Branch::C4One,
        Case::C5 if sin_half >= 0.0 => Branch::C5Plus,
        Case::C5 => Branch::C5Minus,
    }
}

/// Assigns the stratum of `lambda`, treating `|E ∓ 1| ≤ tol` as the separatrix
/// or the stable equilibrium.
pub fn classify(lambda: &Covector, tol: f64) -> StratumTag {
    let (sh, ch) = lambda.half_angle();
    let c = lambda.c;
    let above_sep = energy_above_separatrix(lambda);
    let case = if above_sep.abs() <= tol {
        if c.abs() <= tol {
            Case::C5
        } else {
            Case::C3
        }
    } else if energy_above_min(lambda) <= tol && c.abs() <= tol {
        Case::C4
    } else if above_sep < 0.0 {
        Case::C1
    } else {
        Case::C2
    };
    let (s1, s2) = (Sign::of(ch), Sign::of(c));
    StratumTag { case, s1, s2, branch: branch_of(case, s1, s2, sh) }
}

/// Rectifying coordinates of a covector in `C₁ ∪ C₂ ∪ C₃`.
///
/// `phi` is `φ` on `C₁` and `C₃` and `ψ = φ/k` on `C₂`; the pendulum flow is a
/// translation of it (by `t` and `t/k` respectively).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticCoords {
    phi: f64,
    k: Modulus,
    tag: StratumTag,
}

impl EllipticCoords {
    /// Builds coordinates from their parts. `s1` matters on `C₁`, `s2` on `C₂`,
    /// both on `C₃`; zero signs are rejected where they matter.
    pub fn new(case: Case, s1: Sign, s2: Sign, phi: f64, k: Modulus) -> Result<Self, Error> {
        let bad_k = match case {
            Case::C1 | Case::C2 => k.k() <= 0.0 || k.is_one(),
            Case::C3 => !k.is_one(),
            Case::C4 | Case::C5 => return Err(Error::UnsupportedStratum(case)),
        };
        if bad_k {
            return Err(Error::Domain { what: "modulus for stratum", value: k.k() });
        }
        let need1 = matches!(case, Case::C1 | Case::C3);
        let need2 = matches!(case, Case::C2 | Case::C3);
        if (need1 && s1 == Sign::Zero) || (need2 && s2 == Sign::Zero) {
            return Err(Error::Domain { what: "sign label", value: 0.0 });
        }
        if !phi.is_finite() {
            return Err(Error::Domain { what: "elliptic coordinate", value: phi });
        }
        let e = EllipticCoords { phi, k, tag: StratumTag { case, s1, s2, branch: Branch::C1Zero } };
        Ok(EllipticCoords { tag: e.retag(), ..e })
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn k(&self) -> Modulus {
        self.k
    }

    pub fn tag(&self) -> StratumTag {
        self.tag
    }

    pub fn case(&self) -> Case {
        self.tag.case
    }

    /// The chart sign used by the closed-form formulas: `s₁` on `C₁`, `s₂` on `C₂`.
    pub fn s1(&self) -> f64 {
        self.tag.s1.value()
    }

    pub fn s2(&self) -> f64 {
        self.tag.s2.value()
    }

    /// Chart increment produced by flowing for time `t`.
    pub fn chart_step(&self, t: f64) -> f64 {
        match self.tag.case {
            Case::C2 => t / self.k.k(),
            _ => t,
        }
    }

    /// Coordinates of the covector reached after flowing for time `t`.
    pub fn advanced(&self, t: f64) -> EllipticCoords {
        let e = EllipticCoords { phi: self.phi + self.chart_step(t), ..*self };
        EllipticCoords { tag: e.retag(), ..e }
    }

    /// Recomputes the sign labels that vary along the flow.
    fn retag(&self) -> StratumTag {
        let lam = from_elliptic(self);
        let (sh, ch) = lam.half_angle();
        let (s1, s2) = match self.tag.case {
            Case::C1 => (self.tag.s1, Sign::of(lam.c)),
            Case::C2 => (Sign::of(ch), self.tag.s2),
            _ => (self.tag.s1, self.tag.s2),
        };
        StratumTag { case: self.tag.case, s1, s2, branch: branch_of(self.tag.case, s1, s2, sh) }
    }

    /// The covector these coordinates describe.
    pub fn covector(&self) -> Covector {
        from_elliptic(self)
    }
}

/// Largest double below one, used when rounding pushes an oscillation modulus to `1`.
const BELOW_ONE: f64 = 1.0 - f64::EPSILON / 2.0;

fn modulus_below_one(k: f64) -> Modulus {
    Modulus::new(k.min(BELOW_ONE)).unwrap_or(Modulus::ZERO)
}

/// Elliptic coordinates of `lambda` using the default separatrix band.
pub fn to_elliptic(lambda: &Covector) -> Result<EllipticCoords, Error> {
    to_elliptic_tagged(lambda, classify(lambda, DEFAULT_TOL))
}

/// Elliptic coordinates of `lambda` in the chart named by `tag`.
pub fn to_elliptic_tagged(lambda: &Covector, tag: StratumTag) -> Result<EllipticCoords, Error> {
    let (sh, ch) = lambda.half_angle();
    let c = lambda.c;
    match tag.case {
        Case::C1 => {
            let k = modulus_below_one(sqrt(sh * sh + 0.25 * c * c));
            if k.k() == 0.0 {
                return Err(Error::UnsupportedStratum(Case::C4));
            }
            let s1 = Sign::of(ch).nonzero();
            let amp = atan2(s1.value() * sh, 0.5 * c);
            let phi = wrap_period(incomplete_f(amp, k)?, k)?;
            EllipticCoords::new(Case::C1, s1, Sign::of(c), phi, k)
        }
        Case::C2 => {
            let k = modulus_below_one(sqrt(4.0 / (c * c + 4.0 * sh * sh)));
            let s2 = Sign::of(c).nonzero();
            let amp = atan2(s2.value() * sh, ch);
            let psi = wrap_period(incomplete_f(amp, k)?, k)?;
            EllipticCoords::new(Case::C2, Sign::of(ch), s2, psi, k)
        }
        Case::C3 => {
            let s1 = Sign::of(ch).nonzero();
            let s2 = Sign::of(c).nonzero();
            let arg = (s1.value() * s2.value() * sh).clamp(-BELOW_ONE, BELOW_ONE);
            EllipticCoords::new(Case::C3, s1, s2, atanh(arg), Modulus::ONE)
        }
        other => Err(Error::UnsupportedStratum(other)),
    }
}

fn wrap_period(phi: f64, k: Modulus) -> Result<f64, Error> {
    if phi >= 0.0 {
        Ok(phi)
    } else {
        Ok(phi + 4.0 * complete_k(k)?)
    }
}

/// The covector with the given elliptic coordinates.
pub fn from_elliptic(e: &EllipticCoords) -> Covector {
    let t = jacobi_sncndn(e.phi, e.k);
    let k = e.k.k();
    match e.tag.case {
        Case::C1 => {
            let s1 = e.tag.s1.value();
            Covector::new(2.0 * atan2(s1 * k * t.sn, s1 * t.dn), 2.0 * k * t.cn)
        }
        Case::C2 => {
            let s2 = e.tag.s2.value();
            Covector::new(2.0 * atan2(s2 * t.sn, t.cn), 2.0 * s2 * t.dn / k)
        }
        _ => {
            let (s1, s2) = (e.tag.s1.value(), e.tag.s2.value());
            let sech = 1.0 / cosh(e.phi);
            Covector::new(2.0 * atan2(s1 * s2 * tanh(e.phi), s1 * sech), 2.0 * s2 * sech)
        }
    }
}

/// The pendulum flow `λ ↦ λ_t` in closed form.
pub fn pendulum_flow(lambda: &Covector, t: f64) -> Covector {
    match to_elliptic(lambda) {
        Ok(e) => e.advanced(t).covector(),
        Err(_) => *lambda,
    }
}

/// The reflections `ε¹ … ε⁷` of the pendulum phase portrait.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Reflection {
    E1 = 1,
    E2,
    E3,
    E4,
    E5,
    E6,
    E7,
}

impl Reflection {
    pub const ALL: [Reflection; 7] =
        [Reflection::E1, Reflection::E2, Reflection::E3, Reflection::E4, Reflection::E5, Reflection::E6, Reflection::E7];

    pub fn from_index(i: u8) -> Result<Reflection, Error> {
        match i {
            1..=7 => Ok(Reflection::ALL[usize::from(i - 1)]),
            _ => Err(Error::Domain { what: "reflection index", value: f64::from(i) }),
        }
    }

    pub fn index(self) -> u8 {
        self as u8
    }

    /// Whether the reflection reverses the direction of the pendulum flow.
    pub fn reverses_time(self) -> bool {
        matches!(self, Reflection::E1 | Reflection::E2 | Reflection::E5 | Reflection::E6)
    }
}

/// Action of a reflection on the phase cylinder.
pub fn reflect_c(r: Reflection, lambda: &Covector) -> Covector {
    let (g, c) = (lambda.gamma, lambda.c);
    match r {
        Reflection::E1 => Covector::new(g, -c),
        Reflection::E2 => Covector::new(-g, c),
        Reflection::E3 => Covector::new(-g, -c),
        Reflection::E4 => Covector::new(g + TWO_PI, c),
        Reflection::E5 => Covector::new(g + TWO_PI, -c),
        Reflection::E6 => Covector::new(TWO_PI - g, c),
        Reflection::E7 => Covector::new(TWO_PI - g, -c),
    }
}

/// Action of a reflection on the preimage `N` of the exponential map.
pub fn reflect_n(r: Reflection, nu: &GeodesicSpec) -> GeodesicSpec {
    let lambda = if r.reverses_time() { reflect_c(r, &pendulum_flow(&nu.lambda, nu.t)) } else { reflect_c(r, &nu.lambda) };
    GeodesicSpec { lambda, t: nu.t }
}

/// Action of a reflection on endpoints.
pub fn reflect_m(r: Reflection, q: &GroupPoint) -> GroupPoint {
    let (x, y, z) = (q.x, q.y, q.z);
    let (ch, sh) = (libm::cosh(z), libm::sinh(z));
    let (a, b, c) = match r {
        Reflection::E1 => (x * ch - y * sh, x * sh - y * ch, z),
        Reflection::E2 => (x * ch - y * sh, -x * sh + y * ch, -z),
        Reflection::E3 => (x, -y, -z),
        Reflection::E4 => (-x, y, -z),
        Reflection::E5 => (-x * ch + y * sh, x * sh - y * ch, -z),
        Reflection::E6 => (-x * ch + y * sh, -x * sh + y * ch, z),
        Reflection::E7 => (-x, -y, z),
    };
    GroupPoint::new(a, b, c)
}
