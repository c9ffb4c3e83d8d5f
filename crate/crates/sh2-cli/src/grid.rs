use std::str::FromStr;

use sh2_geom::pendulum::{Covector, FOUR_PI};

use crate::CliError;

/// Resolution and extent of the covector grid `(γ, c)` with a time axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleGrid {
    n_gamma: usize,
    n_c: usize,
    c_max: f64,
    t_steps: usize,
}

impl SampleGrid {
    pub fn new(n_gamma: usize, n_c: usize, c_max: f64, t_steps: usize) -> Result<Self, CliError> {
        if n_gamma < 2 || n_c < 2 || t_steps < 2 {
            return Err(CliError::Usage(format!("grid counts must be at least 2, got {n_gamma}x{n_c} with {t_steps} time steps")));
        }
        if !(c_max > 0.0 && c_max.is_finite()) {
            return Err(CliError::Usage(format!("c_max must be positive, got {c_max}")));
        }
        Ok(SampleGrid { n_gamma, n_c, c_max, t_steps })
    }

    pub fn n_gamma(&self) -> usize {
        self.n_gamma
    }

    pub fn n_c(&self) -> usize {
        self.n_c
    }

    pub fn c_max(&self) -> f64 {
        self.c_max
    }

    pub fn t_steps(&self) -> usize {
        self.t_steps
    }

    /// `γ_i = 4π i / n_gamma`; the γ axis is periodic, so `4π` itself is not sampled.
    pub fn gamma(&self, i: usize) -> f64 {
        FOUR_PI * i as f64 / self.n_gamma as f64
    }

    /// `c_j` runs over `[−c_max, c_max]` including both ends.
    pub fn c(&self, j: usize) -> f64 {
        -self.c_max + 2.0 * self.c_max * j as f64 / (self.n_c - 1) as f64
    }

    pub fn covector(&self, i: usize, j: usize) -> Covector {
        Covector::new(self.gamma(i), self.c(j))
    }

    /// Uniform points of `[0, t_max]` including both ends.
    pub fn time(&self, s: usize, t_max: f64) -> f64 {
        t_max * s as f64 / (self.t_steps - 1) as f64
    }
}

impl Default for SampleGrid {
    fn default() -> Self {
        SampleGrid { n_gamma: 256, n_c: 256, c_max: 6.0, t_steps: 8 }
    }
}

/// Parses `"<n_gamma>x<n_c>"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridShape(pub usize, pub usize);

impl FromStr for GridShape {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let bad = || CliError::Usage(format!("grid must look like 256x256, got {s:?}"));
        let (a, b) = s.split_once(['x', 'X']).ok_or_else(bad)?;
        let a = a.trim().parse().map_err(|_| bad())?;
        let b = b.trim().parse().map_err(|_| bad())?;
        Ok(GridShape(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_grids() {
        assert!(SampleGrid::new(1, 4, 6.0, 8).is_err());
        assert!(SampleGrid::new(4, 4, 0.0, 8).is_err());
        assert!(SampleGrid::new(4, 4, 6.0, 1).is_err());
        assert!(SampleGrid::new(2, 2, 1.0, 2).is_ok());
    }

    #[test]
    fn axes_cover_their_ranges() {
        let g = SampleGrid::new(4, 5, 2.0, 3).unwrap();
        assert_eq!(g.gamma(0), 0.0);
        assert_eq!(g.c(0), -2.0);
        assert_eq!(g.c(2), 0.0);
        assert_eq!(g.c(4), 2.0);
        assert_eq!(g.time(2, 5.0), 5.0);
    }

    #[test]
    fn parses_shapes() {
        assert_eq!("256x128".parse::<GridShape>().unwrap(), GridShape(256, 128));
        assert!("256".parse::<GridShape>().is_err());
        assert!("axb".parse::<GridShape>().is_err());
    }
}
