//! The plane `z = 0`: boundary curves `γ₁ … γ₅`, the open domains `m₁, m₂, m₃`
//! of the quadrant `x ≥ 0, y ≤ 0`, and the forty strata `M′₁ … M′₄₀` obtained
//! from them by the reflections.

use libm::sqrt;

use crate::elliptic::{a_fn, complete_e, Modulus};
use crate::exp_map::GroupPoint;
use crate::pendulum::{reflect_m, Reflection, TWO_PI};
use crate::Error;

/// Default half-width of the band treated as lying on a curve.
pub const CURVE_BAND: f64 = 1e-9;

/// The boundary curves of the domains `m₁, m₂, m₃`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Curve {
    /// `x = 0`, preimage of the Maxwell stratum `M′₂₉`.
    G1 = 1,
    /// Lower boundary of `m₂`, conjugate stratum `M′₂₅`.
    G2,
    /// Upper boundary of `m₂`, conjugate stratum `M′₂₁`.
    G3,
    /// The segment `0 < x < 2π` of the x-axis, stratum `M′₃₉`.
    G4,
    /// The ray `x > 2π` of the x-axis, stratum `M′₁₇`.
    G5,
}

impl Curve {
    pub fn from_index(i: u8) -> Result<Curve, Error> {
        match i {
            1 => Ok(Curve::G1),
            2 => Ok(Curve::G2),
            3 => Ok(Curve::G3),
            4 => Ok(Curve::G4),
            5 => Ok(Curve::G5),
            _ => Err(Error::Domain { what: "curve index", value: f64::from(i) }),
        }
    }
}

/// Coarse optimality class of a plane stratum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Two-dimensional Maxwell strata (images of `m₁` and `m₃`).
    Max,
    /// Images of `γ₃` and `γ₂`: conjugate cut points.
    CurveConjCut,
    /// Images of the point `P = (2π, 0)`.
    PointConjCut,
    /// Images of `γ₅` and `γ₁`: Maxwell points on curves.
    CurveMax,
    /// Images of `m₂` and `γ₄`: not cut points.
    Rest,
}

/// Index of one of the forty plane strata.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StratumIndex(u8);

impl StratumIndex {
    pub fn new(j: u8) -> Result<Self, Error> {
        if (1..=40).contains(&j) {
            Ok(StratumIndex(j))
        } else {
            Err(Error::Domain { what: "stratum index", value: f64::from(j) })
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn family(self) -> Family {
        match self.0 {
            1..=16 => Family::Max,
            17..=20 | 29..=32 => Family::CurveMax,
            21..=28 => Family::CurveConjCut,
            33 | 34 => Family::PointConjCut,
            _ => Family::Rest,
        }
    }
}

/// A classified plane point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PlaneLabel {
    pub index: StratumIndex,
    pub family: Family,
    /// The stratum of the quadrant representative.
    pub base: StratumIndex,
    /// Reflection carrying the representative back to the point, if any.
    pub reflection: Option<Reflection>,
}

impl PlaneLabel {
    pub fn is_cut(&self) -> bool {
        self.family != Family::Rest
    }

    pub fn is_maxwell(&self) -> bool {
        matches!(self.family, Family::Max | Family::CurveMax)
    }

    pub fn is_conjugate(&self) -> bool {
        matches!(self.family, Family::CurveConjCut | Family::PointConjCut)
    }
}

/// A plane point moved into the quadrant `x ≥ 0, y ≤ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadrantRep {
    pub xq: f64,
    pub yq: f64,
    /// `None` when the point already lies in the quadrant.
    pub reflection: Option<Reflection>,
}

impl QuadrantRep {
    /// Index of the image of stratum `base` under the recorded reflection.
    pub fn image_index(&self, base: StratumIndex) -> StratumIndex {
        image_index(base, self.reflection)
    }
}

/// Sign flips `(x ↦ −x, y ↦ −y)` performed by a reflection on the plane.
pub fn plane_action(r: Reflection) -> (bool, bool) {
    let q = reflect_m(r, &GroupPoint::new(1.0, 1.0, 0.0));
    (q.x < 0.0, q.y < 0.0)
}

/// Reflection identities `ε^i(M′_j) = M′_{j+i}` for the quadrant strata.
const BASE_RULES: [(u8, &[(u8, u8)]); 9] = [
    (1, &[(1, 1), (2, 2), (3, 3), (4, 4), (5, 5), (6, 6), (7, 7)]),
    (9, &[(1, 1), (2, 2), (3, 3), (4, 4), (5, 5), (6, 6), (7, 7)]),
    (17, &[(2, 1), (4, 2), (6, 3)]),
    (21, &[(3, 1), (4, 2), (5, 3)]),
    (25, &[(3, 1), (4, 2), (5, 3)]),
    (29, &[(3, 1), (4, 2), (5, 3)]),
    (33, &[(4, 1)]),
    (35, &[(3, 1), (4, 2), (5, 3)]),
    (39, &[(4, 1)]),
];

/// Which coordinate flips leave every point of a base stratum fixed.
fn invisible_flips(base: u8) -> (bool, bool) {
    match base {
        29 => (true, false),
        17 | 33 | 39 => (false, true),
        _ => (false, false),
    }
}

/// Index of `ε(M′_base)`; reflections acting identically on the stratum give
/// the same set, which is labelled by the smallest index among them.
pub fn image_index(base: StratumIndex, r: Option<Reflection>) -> StratumIndex {
    let (ix, iy) = invisible_flips(base.0);
    let effective = |a: (bool, bool)| (a.0 && !ix, a.1 && !iy);
    let target = effective(r.map_or((false, false), plane_action));
    let rules = BASE_RULES.iter().find(|(b, _)| *b == base.0).map_or(&[][..], |(_, rules)| *rules);
    let mut best = base.0;
    if target != (false, false) {
        best = u8::MAX;
    }
    for &(i, off) in rules {
        let Ok(eps) = Reflection::from_index(i) else { continue };
        if effective(plane_action(eps)) == target {
            best = best.min(base.0 + off);
        }
    }
    StratumIndex(best)
}

/// Reflection that maps a base stratum onto itself pointwise while exchanging
/// the two minimizers of its Maxwell points.
pub fn maxwell_partner(base: StratumIndex) -> Option<Reflection> {
    match base.0 {
        1 | 9 | 17 => Some(Reflection::E2),
        29 => Some(Reflection::E4),
        _ => None,
    }
}

fn check_k(k: f64) -> Result<Modulus, Error> {
    if k > 0.0 && k < 1.0 {
        Modulus::new(k)
    } else {
        Err(Error::Domain { what: "curve modulus", value: k })
    }
}

/// Point of curve `which` at parameter `k ∈ (0, 1)` (or `t ∈ (0, 2π)` for `γ₄`).
pub fn gamma_curves(which: Curve, param: f64) -> Result<(f64, f64), Error> {
    if which == Curve::G4 {
        return if param > 0.0 && param < TWO_PI { Ok((param, 0.0)) } else { Err(Error::Domain { what: "curve time", value: param }) };
    }
    let k = check_k(param)?;
    let kp2 = k.kp2();
    Ok(match which {
        Curve::G1 => (0.0, -4.0 * a_fn(k) / sqrt(kp2)),
        Curve::G2 => {
            let a = a_fn(k);
            (4.0 * k.k() * a / kp2, -4.0 * a / kp2)
        }
        Curve::G3 => {
            let e = complete_e(k);
            (4.0 * e / kp2, -4.0 * k.k() * e / kp2)
        }
        _ => (4.0 * complete_e(k) / sqrt(kp2), 0.0),
    })
}

/// Bisection for an increasing function of `k` on `(0, 1)`, run to full precision.
pub(crate) fn invert_increasing<F: Fn(Modulus) -> f64>(g: F, target: f64, what: &'static str) -> Result<Modulus, Error> {
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    for _ in 0..1100 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(Modulus::new(mid)?) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let pick = |k: f64| Modulus::new(k).ok().filter(|m| m.k() > 0.0 && !m.is_one());
    let best = [pick(lo), pick(hi)]
        .into_iter()
        .flatten()
        .min_by(|a, b| (g(*a) - target).abs().total_cmp(&(g(*b) - target).abs()))
        .ok_or(Error::NumericFailure { what, residual: f64::INFINITY, best: None })?;
    let residual = (g(best) - target).abs();
    if residual > 1e-11 * target.abs().max(1.0) {
        return Err(Error::NumericFailure { what, residual, best: None });
    }
    Ok(best)
}

/// The modulus at which curve `which` attains the coordinate `coord`
/// (`y` for `γ₁, γ₂, γ₃`; `x` for `γ₅`).
pub fn invert_curve_k(which: Curve, coord: f64) -> Result<Modulus, Error> {
    let coordinate = |k: Modulus| gamma_curves(which, k.k()).unwrap_or((f64::NAN, f64::NAN));
    match which {
        Curve::G1 | Curve::G2 | Curve::G3 => {
            if !(coord < 0.0 && coord.is_finite()) {
                return Err(Error::Domain { what: "curve ordinate", value: coord });
            }
            invert_increasing(|k| -coordinate(k).1, -coord, "curve inversion")
        }
        Curve::G5 => {
            if !(coord > TWO_PI && coord.is_finite()) {
                return Err(Error::Domain { what: "curve abscissa", value: coord });
            }
            invert_increasing(|k| coordinate(k).0, coord, "curve inversion")
        }
        Curve::G4 => Err(Error::Domain { what: "curve without modulus", value: 4.0 }),
    }
}

/// `x₂(y)`: abscissa of `γ₂` at ordinate `y < 0`.
pub fn x2_of_y(y: f64) -> Result<f64, Error> {
    let k = invert_curve_k(Curve::G2, y)?;
    Ok(gamma_curves(Curve::G2, k.k())?.0)
}

/// `x₃(y)`: abscissa of `γ₃` at ordinate `y < 0`.
pub fn x3_of_y(y: f64) -> Result<f64, Error> {
    let k = invert_curve_k(Curve::G3, y)?;
    Ok(gamma_curves(Curve::G3, k.k())?.0)
}

/// Moves `(x, y)` into the closed quadrant `x ≥ 0, y ≤ 0`.
pub fn quadrant_reduce(x: f64, y: f64) -> Result<QuadrantRep, Error> {
    if x == 0.0 && y == 0.0 {
        return Err(Error::OriginExcluded);
    }
    let reflection = match (x < 0.0, y > 0.0) {
        (false, false) => None,
        (false, true) => Some(Reflection::E1),
        (true, false) => Some(Reflection::E4),
        (true, true) => Some(Reflection::E5),
    };
    Ok(QuadrantRep { xq: x.abs(), yq: -y.abs(), reflection })
}

fn base_in_quadrant(xq: f64, yq: f64, band: f64) -> Result<u8, Error> {
    if yq >= -band {
        return Ok(if (xq - TWO_PI).abs() <= band {
            33
        } else if xq < TWO_PI {
            39
        } else {
            17
        });
    }
    if xq <= band {
        return Ok(29);
    }
    let x2 = x2_of_y(yq)?;
    if (xq - x2).abs() <= band {
        return Ok(25);
    }
    if xq < x2 {
        return Ok(9);
    }
    let x3 = x3_of_y(yq)?;
    Ok(if (xq - x3).abs() <= band {
        21
    } else if xq < x3 {
        35
    } else {
        1
    })
}

/// Stratum of the plane point `(x, y, 0)`, treating points within `band` of a
/// curve as lying on it.
pub fn classify_plane(x: f64, y: f64, band: f64) -> Result<PlaneLabel, Error> {
    let rep = quadrant_reduce(x, y)?;
    let base = StratumIndex(base_in_quadrant(rep.xq, rep.yq, band)?);
    let index = rep.image_index(base);
    Ok(PlaneLabel { index, family: index.family(), base, reflection: rep.reflection })
}
