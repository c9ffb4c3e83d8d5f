use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sh2_cli::export::{num, write_mesh, Format};
use sh2_cli::mesh::MeshOutput;
use sh2_cli::sampling::{sample_caustic, sample_cutlocus, sample_sphere, sample_wavefront};
use sh2_cli::verify::{run, Suite};
use sh2_cli::{CliError, GridShape, SampleGrid};
use sh2_geom::exp_map::{exp_with_tol, GeodesicSpec, GroupPoint};
use sh2_geom::optimality::cut_time;
use sh2_geom::pendulum::Covector;
use sh2_geom::plane::classify_plane;
use sh2_geom::synthesis::{minimizers_with, SolverConfig};
use sh2_geom::{ExtReal, DEFAULT_TOL};

/// Geodesics, spheres, caustics and the cut locus of the sub-Riemannian problem on SH(2).
#[derive(Parser)]
#[command(name = "sh2", version, args_conflicts_with_subcommands = true)]
struct Cli {
    /// Separatrix band used when classifying covectors.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct MeshArgs {
    /// Covector grid as <n_gamma>x<n_c>.
    #[arg(long, default_value = "256x256")]
    grid: GridShape,
    /// Bound of |c| on the covector grid.
    #[arg(long, default_value_t = 6.0)]
    c_max: f64,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv, jsonl or obj; taken from the file extension when omitted.
    #[arg(long)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Endpoint of the geodesic with initial covector (gamma, c) at time t.
    #[command(allow_negative_numbers = true)]
    Exp { gamma: f64, c: f64, t: f64 },
    /// Cut time of the covector (gamma, c).
    #[command(name = "cut-time", allow_negative_numbers = true)]
    CutTime { gamma: f64, c: f64 },
    /// Stratum of a point (x, y) of the plane z = 0.
    #[command(allow_negative_numbers = true)]
    Classify { x: f64, y: f64 },
    /// Sub-Riemannian distance from the identity.
    #[command(allow_negative_numbers = true)]
    Distance { x: f64, y: f64, z: f64 },
    /// All minimizers to (x, y, z) with their classification.
    #[command(allow_negative_numbers = true)]
    Synth { x: f64, y: f64, z: f64 },
    /// Sub-Riemannian sphere of radius R.
    Sphere {
        #[arg(long)]
        radius: f64,
        #[command(flatten)]
        mesh: MeshArgs,
    },
    /// Wavefront at time R, optimal or not.
    Wavefront {
        #[arg(long)]
        radius: f64,
        #[command(flatten)]
        mesh: MeshArgs,
    },
    /// First conjugate locus.
    Caustic {
        #[command(flatten)]
        mesh: MeshArgs,
    },
    /// Cut locus in the box |x|, |y| <= extent; the grid sets the lattice in x and y.
    Cutlocus {
        #[arg(long, default_value_t = 20.0)]
        extent: f64,
        #[command(flatten)]
        mesh: MeshArgs,
    },
    /// Runs a verification suite and prints a JSON report.
    Verify {
        /// elliptic, oracle, symmetry, roundtrip, strata or all.
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
}

fn grid_of(m: &MeshArgs) -> Result<SampleGrid, CliError> {
    SampleGrid::new(m.grid.0, m.grid.1, m.c_max, 2)
}

fn emit(mesh: &MeshOutput, m: &MeshArgs) -> Result<(), CliError> {
    eprintln!("{} vertices, {} faces, {} clipped, {} dropped", mesh.vertices.len(), mesh.faces.len(), mesh.clipped, mesh.dropped);
    match &m.out {
        Some(path) => {
            let format = m.format.unwrap_or_else(|| Format::from_path(path));
            write_mesh(mesh, format, BufWriter::new(File::create(path)?))
        }
        None => write_mesh(mesh, m.format.unwrap_or(Format::Csv), io::stdout().lock()),
    }
}

fn ext(v: ExtReal) -> String {
    v.finite().map_or("inf".to_string(), num)
}

fn execute(cli: Cli) -> Result<(), CliError> {
    let tol = cli.tol;
    if !(tol > 0.0 && tol < 1.0) {
        return Err(CliError::Usage(format!("--tol must lie in (0, 1), got {tol}")));
    }
    let cfg = SolverConfig { accept: SolverConfig::default().accept.max(tol), ..SolverConfig::default() };
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Exp { gamma, c, t } => {
            let q = exp_with_tol(&GeodesicSpec::new(Covector::new(gamma, c), t)?, tol);
            writeln!(out, "{} {} {}", num(q.x), num(q.y), num(q.z))?;
        }
        Command::CutTime { gamma, c } => writeln!(out, "{}", ext(cut_time(&Covector::new(gamma, c))))?,
        Command::Classify { x, y } => {
            let l = classify_plane(x, y, cfg.curve_band)?;
            writeln!(out, "{} {:?} cut={}", l.index.get(), l.family, l.is_cut())?;
        }
        Command::Distance { x, y, z } => {
            let q = GroupPoint::new(x, y, z);
            let d = if q == GroupPoint::ORIGIN { 0.0 } else { minimizers_with(&q, &cfg)?.distance };
            writeln!(out, "{}", num(d))?;
        }
        Command::Synth { x, y, z } => {
            let r = minimizers_with(&GroupPoint::new(x, y, z), &cfg)?;
            writeln!(out, "classification {:?}", r.classification)?;
            if let Some(l) = r.label {
                writeln!(out, "stratum {} {:?}", l.index.get(), l.family)?;
            }
            writeln!(out, "distance {}", num(r.distance))?;
            writeln!(out, "residual {}", num(r.residual))?;
            for nu in &r.minimizers {
                writeln!(out, "minimizer gamma={} c={} t={}", num(nu.lambda.gamma()), num(nu.lambda.c()), num(nu.t))?;
            }
        }
        Command::Sphere { radius, mesh } => emit(&sample_sphere(radius, &grid_of(&mesh)?, tol)?, &mesh)?,
        Command::Wavefront { radius, mesh } => emit(&sample_wavefront(radius, &grid_of(&mesh)?, tol)?, &mesh)?,
        Command::Caustic { mesh } => emit(&sample_caustic(&grid_of(&mesh)?, tol), &mesh)?,
        Command::Cutlocus { extent, mesh } => emit(&sample_cutlocus(extent, &grid_of(&mesh)?, &cfg)?, &mesh)?,
        Command::Verify { suite } => {
            let report = run(suite);
            serde_json::to_writer_pretty(&mut out, &report)?;
            writeln!(out)?;
            if !report.passed {
                return Err(CliError::Verification(format!("suite {} has failing properties", report.suite)));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
