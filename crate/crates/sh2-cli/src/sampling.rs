use rayon::prelude::*;
use sh2_geom::elliptic::{complete_k, Modulus};
use sh2_geom::exp_map::{exp_with_tol, GeodesicSpec, GroupPoint};
use sh2_geom::optimality::{conj_time_numeric, cut_time};
use sh2_geom::pendulum::{classify, reflect_m, Case, Covector, EllipticCoords, Reflection, Sign, TWO_PI};
use sh2_geom::plane::{classify_plane, gamma_curves, Curve};
use sh2_geom::synthesis::{distance, solve_plane, SolverConfig};
use sh2_geom::{Error, ExtReal};

use crate::mesh::{FamilyTag, MeshOutput, Vertex};
use crate::{CliError, SampleGrid};

/// Samples with a coordinate beyond this magnitude are dropped and counted.
pub const CLIP: f64 = 1e3;

enum Sample {
    Kept(Vertex),
    Skipped,
    Clipped,
    Failed,
}

fn endpoint(lambda: Covector, t: f64, tol: f64) -> Sample {
    let geodesic = GeodesicSpec { lambda, t };
    let point = exp_with_tol(&geodesic, tol);
    if !point.is_finite() || point.max_abs() > CLIP {
        return Sample::Clipped;
    }
    Sample::Kept(Vertex { point, geodesic, stratum: None, family: None })
}

/// Evaluates `f` over the grid in parallel rows and assembles the output in row-major order.
/// Grid-adjacent kept samples are triangulated when `faces` is set, wrapping around in `γ`.
fn assemble<F>(grid: &SampleGrid, faces: bool, f: F) -> MeshOutput
where
    F: Fn(Covector) -> Sample + Sync,
{
    let (ng, nc) = (grid.n_gamma(), grid.n_c());
    let rows: Vec<Vec<Sample>> = (0..ng).into_par_iter().map(|i| (0..nc).map(|j| f(grid.covector(i, j))).collect()).collect();
    let mut mesh = MeshOutput::default();
    let mut index = vec![None; ng * nc];
    for (i, row) in rows.into_iter().enumerate() {
        for (j, s) in row.into_iter().enumerate() {
            match s {
                Sample::Kept(v) => {
                    index[i * nc + j] = Some(mesh.vertices.len());
                    mesh.vertices.push(v);
                }
                Sample::Skipped => {}
                Sample::Clipped => mesh.clipped += 1,
                Sample::Failed => mesh.dropped += 1,
            }
        }
    }
    if faces {
        for i in 0..ng {
            let i2 = (i + 1) % ng;
            for j in 0..nc - 1 {
                let [a, b, c, d] = [index[i * nc + j], index[i2 * nc + j], index[i * nc + j + 1], index[i2 * nc + j + 1]];
                if let (Some(a), Some(b), Some(d)) = (a, b, d) {
                    mesh.faces.push([a, b, d]);
                }
                if let (Some(a), Some(d), Some(c)) = (a, d, c) {
                    mesh.faces.push([a, d, c]);
                }
            }
        }
    }
    mesh
}

fn require_radius(r: f64) -> Result<(), CliError> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(CliError::Usage(format!("radius must be positive, got {r}")))
    }
}

/// Endpoints `Exp(λ, R)` of the geodesics that are still minimizing at time `R`.
pub fn sample_sphere(r: f64, grid: &SampleGrid, tol: f64) -> Result<MeshOutput, CliError> {
    require_radius(r)?;
    Ok(assemble(grid, true, |lambda| if cut_time(&lambda) >= ExtReal::Finite(r) { endpoint(lambda, r, tol) } else { Sample::Skipped }))
}

/// Endpoints `Exp(λ, R)` over the whole grid, optimal or not.
pub fn sample_wavefront(r: f64, grid: &SampleGrid, tol: f64) -> Result<MeshOutput, CliError> {
    require_radius(r)?;
    Ok(assemble(grid, true, |lambda| endpoint(lambda, r, tol)))
}

/// First conjugate points of the grid covectors in `C₁ ∪ C₂ ∪ C₄`.
pub fn sample_caustic(grid: &SampleGrid, tol: f64) -> MeshOutput {
    assemble(grid, true, |lambda| {
        if !matches!(classify(&lambda, tol).case, Case::C1 | Case::C2 | Case::C4) {
            return Sample::Skipped;
        }
        match conj_time_numeric(&lambda) {
            Ok(ExtReal::Finite(t)) => endpoint(lambda, t, tol),
            _ => Sample::Failed,
        }
    })
}

/// First conjugate points along one rotation orbit of modulus `k`, one period of `ψ`.
pub fn conjugate_loop(k: f64, s2: Sign, n: usize) -> Result<Vec<GroupPoint>, Error> {
    let m = Modulus::new(k)?;
    let period = 4.0 * complete_k(m)?;
    (0..n)
        .map(|i| {
            let psi = period * i as f64 / n as f64;
            let lambda = EllipticCoords::new(Case::C2, Sign::Pos, s2, psi, m)?.covector();
            let t = conj_time_numeric(&lambda)?.finite().ok_or(Error::Divergent("conjugate time"))?;
            Ok(exp_with_tol(&GeodesicSpec { lambda, t }, sh2_geom::DEFAULT_TOL))
        })
        .collect()
}

/// Cusps of a closed sampled plane curve.
///
/// Chord `i` is flagged when it points against chord `i + 2`; each maximal cyclic run
/// of flagged chords is one cusp.
pub fn count_cusps(pts: &[(f64, f64)]) -> usize {
    let n = pts.len();
    if n < 4 {
        return 0;
    }
    let chord = |i: usize| {
        let (a, b) = (pts[i % n], pts[(i + 1) % n]);
        (b.0 - a.0, b.1 - a.1)
    };
    let flagged: Vec<bool> = (0..n)
        .map(|i| {
            let (u, v) = (chord(i), chord(i + 2));
            u.0 * v.0 + u.1 * v.1 < 0.0
        })
        .collect();
    if flagged.iter().all(|&f| f) {
        return 0;
    }
    (0..n).filter(|&i| flagged[i] && !flagged[(i + n - 1) % n]).count()
}

fn cut_vertex(x: f64, y: f64, cfg: &SolverConfig) -> Sample {
    let label = match classify_plane(x, y, cfg.curve_band) {
        Ok(l) if l.is_cut() => l,
        Ok(_) => return Sample::Skipped,
        Err(_) => return Sample::Failed,
    };
    let point = GroupPoint::new(x, y, 0.0);
    match solve_plane(&point, cfg) {
        Ok((sols, _)) => {
            let geodesic = sols[0];
            if exp_with_tol(&geodesic, cfg.tol.max(sh2_geom::DEFAULT_TOL)).max_abs_diff(&point) > 1e-10 * point.max_abs().max(1.0) {
                return Sample::Failed;
            }
            Sample::Kept(Vertex { point, geodesic, stratum: Some(label.index.get()), family: Some(FamilyTag::from_family(label.family)) })
        }
        Err(_) => Sample::Failed,
    }
}

/// The cut locus in the box `|x|, |y| ≤ extent` of the plane `z = 0`.
///
/// A uniform `n_gamma × n_c` lattice picks up the open Maxwell strata; the boundary
/// curves and the points `(±2π, 0)` are added from their parametrizations, with
/// `n_c` samples of the modulus per curve.
pub fn sample_cutlocus(extent: f64, grid: &SampleGrid, cfg: &SolverConfig) -> Result<MeshOutput, CliError> {
    if !(extent > 0.0 && extent.is_finite()) {
        return Err(CliError::Usage(format!("extent must be positive, got {extent}")));
    }
    let (nx, ny) = (grid.n_gamma(), grid.n_c());
    let at = |n: usize, i: usize| -extent + 2.0 * extent * i as f64 / (n - 1) as f64;
    let mut targets: Vec<(f64, f64)> = (0..nx).flat_map(|i| (0..ny).map(move |j| (at(nx, i), at(ny, j)))).collect();
    let nk = grid.n_c();
    for which in [Curve::G1, Curve::G2, Curve::G3, Curve::G5] {
        for s in 1..=nk {
            let (x, y) = gamma_curves(which, s as f64 / (nk + 1) as f64)?;
            let base = GroupPoint::new(x, y, 0.0);
            for q in std::iter::once(base).chain(Reflection::ALL.iter().map(|&r| reflect_m(r, &base))) {
                if q.x.abs() <= extent && q.y.abs() <= extent && !targets.contains(&(q.x, q.y)) {
                    targets.push((q.x, q.y));
                }
            }
        }
    }
    for x in [TWO_PI, -TWO_PI] {
        if x.abs() <= extent {
            targets.push((x, 0.0));
        }
    }
    let samples: Vec<Sample> = targets.par_iter().map(|&(x, y)| cut_vertex(x, y, cfg)).collect();
    let mut mesh = MeshOutput::default();
    for s in samples {
        match s {
            Sample::Kept(v) => mesh.vertices.push(v),
            Sample::Skipped => {}
            Sample::Clipped => mesh.clipped += 1,
            Sample::Failed => mesh.dropped += 1,
        }
    }
    Ok(mesh)
}

/// Largest `|d(vertex) − R|` over every `stride`-th vertex.
pub fn spot_check_distance(mesh: &MeshOutput, r: f64, stride: usize) -> Result<f64, Error> {
    mesh.vertices
        .par_iter()
        .step_by(stride.max(1))
        .map(|v| distance(&v.point).map(|d| (d - r).abs()))
        .try_reduce(|| 0.0, |a, b| Ok(a.max(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn stable_equilibrium_vertex_of_the_sphere() {
        let grid = SampleGrid::new(4, 5, 2.0, 2).unwrap();
        let mesh = sample_sphere(PI, &grid, sh2_geom::DEFAULT_TOL).unwrap();
        let v = mesh.vertices.iter().find(|v| v.geodesic.lambda == Covector::new(0.0, 0.0)).unwrap();
        assert!(v.point.max_abs_diff(&GroupPoint::new(PI, 0.0, 0.0)) < 1e-15);
        mesh.check_faces().unwrap();
    }

    #[test]
    fn cusps_of_an_astroid() {
        let pts: Vec<(f64, f64)> = (0..400)
            .map(|i| {
                let s = 2.0 * PI * (i as f64 + 0.5) / 400.0;
                (s.cos().powi(3), s.sin().powi(3))
            })
            .collect();
        assert_eq!(count_cusps(&pts), 4);
        let shifted: Vec<(f64, f64)> = (0..401)
            .map(|i| {
                let s = 2.0 * PI * i as f64 / 401.0;
                (s.cos().powi(3), s.sin().powi(3))
            })
            .collect();
        assert_eq!(count_cusps(&shifted), 4);
        let circle: Vec<(f64, f64)> = (0..100).map(|i| (0.0628 * i as f64).sin_cos()).collect();
        assert_eq!(count_cusps(&circle), 0);
    }

    #[test]
    fn cut_locus_examples() {
        let cfg = SolverConfig::default();
        assert!(matches!(cut_vertex(PI, 0.0, &cfg), Sample::Skipped));
        match cut_vertex(1.0, -10.0, &cfg) {
            Sample::Kept(v) => assert_eq!(v.family, Some(FamilyTag::Max)),
            _ => panic!("(1,-10) must be a cut point"),
        }
        match cut_vertex(TWO_PI, 0.0, &cfg) {
            Sample::Kept(v) => assert_eq!(v.family, Some(FamilyTag::ConjCut)),
            _ => panic!("(2π,0) must be a cut point"),
        }
    }
}
