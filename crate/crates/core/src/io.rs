//! Snapshot CSV files, run manifests and result tables.
//!
//! A run directory holds `manifest.csv` (`index,time,file`), one
//! `snapshot_NNNNN.csv` per recorded time, and `config.txt`, a copy of the
//! configuration that produced it. Floats are written in shortest
//! round-trip form, so re-reading reproduces every value exactly.

use std::fs;
use std::path::{Path, PathBuf};

use crate::algebra::{format_real, Bicomplex};
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::evolution::Trajectory;
use crate::wavefield::{GridSpec, WaveField};

pub const MANIFEST: &str = "manifest.csv";
pub const CONFIG_COPY: &str = "config.txt";
pub const POTENTIAL_COPY: &str = "potential.csv";

const SNAPSHOT_HEADER: [&str; 9] =
    ["x", "w0", "w1", "w2", "w3", "psi_plus_re", "psi_plus_im", "psi_minus_re", "psi_minus_im"];

/// Header plus string rows, written as CSV or as an aligned text table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_csv()).map_err(|e| Error::io(path, e))
    }

    /// Columns padded to a common width.
    pub fn to_text(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for r in &self.rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let s: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            s.join("  ")
        };
        let mut out = line(&self.header);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&line(r));
            out.push('\n');
        }
        out
    }
}

pub fn snapshot_name(index: usize) -> String {
    format!("snapshot_{index:05}.csv")
}

pub fn snapshot_table(f: &WaveField) -> Table {
    let mut t = Table::new(&SNAPSHOT_HEADER);
    for (i, w) in f.values.iter().enumerate() {
        let p = w.to_idempotent();
        t.push(
            [f.grid.x(i), w.w0, w.w1, w.w2, w.w3, p.plus.re, p.plus.im, p.minus.re, p.minus.im]
                .iter()
                .map(|&v| format_real(v))
                .collect(),
        );
    }
    t
}

fn csv_reader(path: &Path) -> Result<csv::Reader<fs::File>> {
    csv::Reader::from_path(path).map_err(|e| Error::csv(path, e))
}

fn parse_f64(path: &Path, row: usize, v: &str) -> Result<f64> {
    v.parse().map_err(|_| Error::Input(format!("{}: row {row}: invalid number '{v}'", path.display())))
}

/// Reads one snapshot and checks its `x` column against `grid`.
pub fn read_snapshot(path: &Path, grid: GridSpec, time: f64) -> Result<WaveField> {
    let mut r = csv_reader(path)?;
    let header = r.headers().map_err(|e| Error::csv(path, e))?.clone();
    if header.iter().ne(SNAPSHOT_HEADER) {
        return Err(Error::Input(format!("{}: unexpected header", path.display())));
    }
    let mut values = Vec::with_capacity(grid.n_points());
    for (i, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| Error::csv(path, e))?;
        let x = parse_f64(path, i + 1, &rec[0])?;
        if i >= grid.n_points() || x != grid.x(i) {
            return Err(Error::Input(format!("{}: row {} does not match the configured grid", path.display(), i + 1)));
        }
        let mut w = [0.0; 4];
        for (k, c) in w.iter_mut().enumerate() {
            *c = parse_f64(path, i + 1, &rec[k + 1])?;
        }
        values.push(Bicomplex::from_array(w));
    }
    if values.len() != grid.n_points() {
        return Err(Error::Input(format!(
            "{}: {} rows for {} grid points",
            path.display(),
            values.len(),
            grid.n_points()
        )));
    }
    WaveField::new(grid, values, time)
}

/// Copies the source config into `dir`, pointing a tabulated potential at
/// a copy of its table file.
fn copy_config(cfg: &RunConfig, config_text: &str, dir: &Path) -> Result<()> {
    let mut text = String::with_capacity(config_text.len());
    for line in config_text.lines() {
        let key = line.split('#').next().unwrap_or("").split('=').next().unwrap_or("").trim();
        match key {
            "potential.file" => text.push_str(&format!("potential.file = {POTENTIAL_COPY}")),
            "output_dir" => continue,
            _ => text.push_str(line),
        }
        text.push('\n');
    }
    if let Some(src) = &cfg.potential_file {
        let dst = dir.join(POTENTIAL_COPY);
        fs::copy(src, &dst).map_err(|e| Error::io(src, e))?;
    }
    let path = dir.join(CONFIG_COPY);
    fs::write(&path, text).map_err(|e| Error::io(&path, e))
}

/// Writes all snapshots, the manifest and the config copy into `dir`.
pub fn write_run(traj: &Trajectory, cfg: &RunConfig, config_text: &str, dir: &Path) -> Result<PathBuf> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    copy_config(cfg, config_text, dir)?;
    let mut manifest = Table::new(&["index", "time", "file"]);
    for (k, s) in traj.snapshots.iter().enumerate() {
        let name = snapshot_name(k);
        snapshot_table(s).write_csv(&dir.join(&name))?;
        manifest.push(vec![k.to_string(), format_real(s.time), name]);
    }
    let path = dir.join(MANIFEST);
    manifest.write_csv(&path)?;
    Ok(path)
}

/// Loads the config copy and every snapshot listed in a manifest.
pub fn read_run(manifest: &Path) -> Result<(RunConfig, Trajectory)> {
    let dir = manifest.parent().unwrap_or(Path::new("."));
    let cfg = RunConfig::load(&dir.join(CONFIG_COPY))?;
    let mut r = csv_reader(manifest)?;
    let header = r.headers().map_err(|e| Error::csv(manifest, e))?.clone();
    if header.iter().ne(["index", "time", "file"]) {
        return Err(Error::Input(format!("{}: unexpected header", manifest.display())));
    }
    let mut snapshots = Vec::new();
    for (k, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| Error::csv(manifest, e))?;
        if rec[0].parse::<usize>().ok() != Some(k) {
            return Err(Error::Input(format!("{}: row {} has index '{}'", manifest.display(), k + 1, &rec[0])));
        }
        let time = parse_f64(manifest, k + 1, &rec[1])?;
        snapshots.push(read_snapshot(&dir.join(&rec[2]), cfg.grid, time)?);
    }
    let traj = Trajectory::from_snapshots(snapshots, cfg.solver, cfg.potential.clone())?;
    Ok((cfg, traj))
}
