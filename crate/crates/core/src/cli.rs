//! Command-line front end: `verify`, `evolve` and `report`.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::format_real;
use crate::config::{ReportKind, RunConfig};
use crate::error::{Error, Result};
use crate::evolution::{evolve, Trajectory};
use crate::io::{read_run, write_run, Table};
use crate::report::{born_tables, continuity_orders, continuity_table, pde_table, symmetry_tables};
use crate::verify::{run_suite, VerifyOptions};

/// Overrides `output_dir` from the config file.
pub const OUTPUT_DIR_ENV: &str = "BXQM_OUTPUT_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RUNTIME: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "bxqm", version, about = "Bicomplex algebra and the 1D bicomplex Schrödinger equation")]
pub struct Cli {
    /// Worker threads for the per-component solver; results do not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the randomized invariant suite.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        #[arg(long, hide = true)]
        corrupt_table: bool,
    },
    /// Evolve the initial field of a config file and write snapshots and reports.
    Evolve { config: PathBuf },
    /// Recompute diagnostics from stored runs. Several continuity runs of
    /// one refinement family also give observed orders.
    Report {
        #[arg(required = true)]
        manifests: Vec<PathBuf>,
        #[arg(long, value_parser = parse_kind)]
        which: ReportKind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

fn parse_kind(s: &str) -> std::result::Result<ReportKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_input_error() {
        EXIT_INPUT
    } else {
        EXIT_RUNTIME
    }
}

/// Runs a parsed command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if let Some(n) = cli.threads {
        if n == 0 {
            let _ = writeln!(err, "error: --threads must be at least 1");
            return EXIT_INPUT;
        }
        // Only the first call in a process can size the pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let res = match cli.command {
        Command::Verify { seed, cases, corrupt_table } => verify(seed, cases, corrupt_table, out, err),
        Command::Evolve { config } => evolve_cmd(&config, out, err),
        Command::Report { manifests, which, format } => report(&manifests, which, format, out),
    };
    match res {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn write_out(out: &mut dyn Write, s: &str) -> Result<()> {
    out.write_all(s.as_bytes()).map_err(|e| Error::io("<stdout>", e))
}

fn verify(seed: u64, cases: usize, corrupt_table: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let r = run_suite(seed, cases, VerifyOptions { corrupt_table })?;
    let mut t = Table::new(&["status", "property", "cases", "worst", "tol"]);
    for p in &r.results {
        let status = if p.passed() { "PASS" } else { "FAIL" };
        t.push(vec![status.into(), p.name.into(), p.cases.to_string(), format_real(p.worst), format_real(p.tol)]);
    }
    write_out(out, &format!("seed {}\n{}", r.seed, t.to_text()))?;
    if r.all_passed() {
        return Ok(EXIT_OK);
    }
    for p in r.results.iter().filter(|p| !p.passed()) {
        let _ = writeln!(err, "property failed: {}", p.name);
    }
    Ok(EXIT_PROPERTY_FAILURE)
}

fn evolve_cmd(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut cfg = RunConfig::parse(&text, path.parent().unwrap_or(Path::new(".")))?;
    if let Some(dir) = std::env::var_os(OUTPUT_DIR_ENV) {
        cfg.output_dir = PathBuf::from(dir);
    }
    if let Some(w) = cfg.solver.accuracy_warning(cfg.potential.max_abs(&cfg.grid, cfg.solver.mass)) {
        let _ = writeln!(err, "warning: {w}");
    }
    let traj = evolve(&cfg.initial_field()?, &cfg.potential, &cfg.solver, cfg.n_steps)?;
    let manifest = write_run(&traj, &cfg, &text, &cfg.output_dir)?;
    let mut written = vec![manifest.clone()];
    for kind in &cfg.reports {
        for (name, table) in tables(&traj, &cfg, *kind)? {
            let p = cfg.output_dir.join(format!("{name}.csv"));
            table.write_csv(&p)?;
            written.push(p);
        }
    }
    let mut msg = format!(
        "{} snapshots, t = {} .. {}\n",
        traj.snapshots.len(),
        format_real(traj.times()[0]),
        format_real(*traj.times().last().expect("initial snapshot"))
    );
    for p in written {
        msg.push_str(&format!("wrote {}\n", p.display()));
    }
    write_out(out, &msg)?;
    Ok(EXIT_OK)
}

/// Named tables of one report kind; the names double as CSV file stems.
fn tables(traj: &Trajectory, cfg: &RunConfig, kind: ReportKind) -> Result<Vec<(&'static str, Table)>> {
    Ok(match kind {
        ReportKind::Continuity => vec![("continuity", continuity_table(traj)?)],
        ReportKind::Pde => vec![("pde", pde_table(traj, cfg.amplitude_floor)?)],
        ReportKind::Born => {
            let b = born_tables(traj, cfg.null_tol, cfg.amplitude_floor)?;
            vec![("born_densities", b.densities), ("born_scaling", b.scaling), ("born_class", b.class)]
        }
        ReportKind::Symmetry => {
            let s = symmetry_tables(traj, cfg.amplitude_floor)?;
            vec![("symmetry_operators", s.operators), ("symmetry_system", s.system)]
        }
    })
}

fn report(manifests: &[PathBuf], which: ReportKind, format: Format, out: &mut dyn Write) -> Result<i32> {
    let runs = manifests.iter().map(|m| read_run(m)).collect::<Result<Vec<_>>>()?;
    let mut s = String::new();
    for (m, (cfg, traj)) in manifests.iter().zip(&runs) {
        for (name, t) in tables(traj, cfg, which)? {
            s.push_str(&format!("# {name} ({})\n", m.display()));
            s.push_str(&match format {
                Format::Text => t.to_text(),
                Format::Csv => t.to_csv(),
            });
        }
    }
    if which == ReportKind::Continuity && runs.len() > 1 {
        let levels: Vec<Trajectory> = runs.into_iter().map(|(_, t)| t).collect();
        s.push_str("# observed orders\n");
        s.push_str(&continuity_orders(&levels)?);
    }
    write_out(out, &s)?;
    Ok(EXIT_OK)
}
