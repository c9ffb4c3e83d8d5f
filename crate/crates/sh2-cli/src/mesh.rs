use serde::Serialize;
use sh2_geom::exp_map::{exp, GeodesicSpec, GroupPoint};
use sh2_geom::plane::Family;

use crate::CliError;

/// Coarse optimality tag attached to exported vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FamilyTag {
    Max,
    ConjCut,
    Rest,
}

impl FamilyTag {
    pub fn from_family(f: Family) -> FamilyTag {
        match f {
            Family::Max | Family::CurveMax => FamilyTag::Max,
            Family::CurveConjCut | Family::PointConjCut => FamilyTag::ConjCut,
            Family::Rest => FamilyTag::Rest,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::Max => "Max",
            FamilyTag::ConjCut => "ConjCut",
            FamilyTag::Rest => "Rest",
        }
    }
}

/// One exported point with the geodesic that reaches it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vertex {
    pub point: GroupPoint,
    pub geodesic: GeodesicSpec,
    pub stratum: Option<u8>,
    pub family: Option<FamilyTag>,
}

impl Vertex {
    pub fn from_geodesic(geodesic: GeodesicSpec) -> Vertex {
        Vertex { point: exp(&geodesic), geodesic, stratum: None, family: None }
    }
}

/// Sampled point set, optionally triangulated.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct MeshOutput {
    pub vertices: Vec<Vertex>,
    pub faces: Vec<[usize; 3]>,
    /// Samples dropped because a coordinate exceeded the clip bound.
    pub clipped: usize,
    /// Samples dropped because a numeric routine failed.
    pub dropped: usize,
}

impl MeshOutput {
    pub fn check_faces(&self) -> Result<(), CliError> {
        let n = self.vertices.len();
        match self.faces.iter().find(|f| f.iter().any(|&i| i >= n)) {
            Some(f) => Err(CliError::Verification(format!("face {f:?} indexes past {n} vertices"))),
            None => Ok(()),
        }
    }

    /// Largest `|exp(λ, t) − vertex|` over the mesh.
    pub fn revalidation_error(&self) -> f64 {
        self.vertices.iter().map(|v| exp(&v.geodesic).max_abs_diff(&v.point)).fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sh2_geom::pendulum::Covector;

    #[test]
    fn out_of_range_faces_are_reported() {
        let v = Vertex::from_geodesic(GeodesicSpec::new(Covector::new(0.0, 0.0), 1.0).unwrap());
        let mut m = MeshOutput { vertices: vec![v; 3], faces: vec![[0, 1, 2]], ..Default::default() };
        assert!(m.check_faces().is_ok());
        m.faces.push([0, 1, 3]);
        assert!(m.check_faces().is_err());
        assert_eq!(m.revalidation_error(), 0.0);
    }
}
