use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use sh2_geom::exp_map::r1r2;

use crate::mesh::{MeshOutput, Vertex};
use crate::CliError;

/// Output encodings for sampled meshes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    /// One header line, then one row per vertex.
    Csv,
    /// One JSON object per vertex.
    Jsonl,
    /// ASCII `v x y z` and 1-based `f a b c` records.
    Obj,
}

impl Format {
    /// Picks the format from a file extension; unknown extensions fall back to CSV.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
            Some("jsonl" | "ndjson") => Format::Jsonl,
            Some("obj") => Format::Obj,
            _ => Format::Csv,
        }
    }
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "jsonl" | "json" => Ok(Format::Jsonl),
            "obj" | "mesh" => Ok(Format::Obj),
            other => Err(CliError::Usage(format!("unknown format {other:?} (expected csv, jsonl or obj)"))),
        }
    }
}

/// Renders a float with 17 significant digits.
pub fn num(v: f64) -> String {
    format!("{v:.16e}")
}

pub const CSV_HEADER: &str = "x,y,z,R1,R2,gamma,c,t,stratum,family";

fn fields(v: &Vertex) -> [String; 8] {
    let (r1, r2) = r1r2(&v.point);
    let l = v.geodesic.lambda;
    [v.point.x, v.point.y, v.point.z, r1, r2, l.gamma(), l.c(), v.geodesic.t].map(num)
}

/// Writes `mesh` to `out`.
pub fn write_mesh<W: Write>(mesh: &MeshOutput, format: Format, mut out: W) -> Result<(), CliError> {
    mesh.check_faces()?;
    match format {
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for v in &mesh.vertices {
                let f = fields(v);
                let stratum = v.stratum.map(|s| s.to_string()).unwrap_or_default();
                let family = v.family.map(|f| f.as_str()).unwrap_or("");
                writeln!(out, "{},{stratum},{family}", f.join(","))?;
            }
        }
        Format::Jsonl => {
            const KEYS: [&str; 8] = ["x", "y", "z", "R1", "R2", "gamma", "c", "t"];
            for v in &mesh.vertices {
                let f = fields(v);
                let mut line = String::from("{");
                for (k, val) in KEYS.iter().zip(&f) {
                    line.push_str(&format!("\"{k}\":{val},"));
                }
                let stratum = v.stratum.map_or("null".to_string(), |s| s.to_string());
                let family = v.family.map_or("null".to_string(), |f| format!("\"{}\"", f.as_str()));
                writeln!(out, "{line}\"stratum\":{stratum},\"family\":{family}}}")?;
            }
        }
        Format::Obj => {
            for v in &mesh.vertices {
                writeln!(out, "v {} {} {}", num(v.point.x), num(v.point.y), num(v.point.z))?;
            }
            for [a, b, c] in &mesh.faces {
                writeln!(out, "f {} {} {}", a + 1, b + 1, c + 1)?;
            }
        }
    }
    out.flush()?;
    Ok(())
}
