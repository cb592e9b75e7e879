//! Residuals of the real hyper-polar system for `(α, β, γ, δ)`:
//!
//! ```text
//! (a) -ħ ∂tβ + ħ²/2m [∂²α + (∂α)² - (∂β)² - (∂γ)² + (∂δ)²] - V
//! (b)  ∂tα + ħ/2m [∂²β + 2(∂α∂β - ∂γ∂δ)]
//! (c) -∂tδ + ħ/2m [∂²γ + 2(∂α∂γ - ∂β∂δ)]
//! (d)  ∂tγ + ħ/2m [∂²δ + 2(∂α∂δ + ∂β∂γ)]
//! ```
//!
//! Derivatives are taken from `ln ψ± = (α ± δ) + (β ∓ γ) i1` with wrapped
//! phase differences, so no global phase unwrapping is needed.

use num_complex::Complex64;

use super::{Potential, SolverConfig, Trajectory};
use crate::error::{Error, Result};
use crate::stencil::{log_central, log_diff};
use crate::wavefield::{ComplexField, GridSpec};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PdeResidual {
    pub time: f64,
    /// Max-norm of equations (a)–(d).
    pub max: [f64; 4],
    /// Grid points that passed the amplitude floor.
    pub points: usize,
}

/// Residuals of the standard pair for `ψ = e^{α + β i1}`:
/// `-ħ ∂tβ + ħ²/2m [∂²α + (∂α)² - (∂β)²] - V` and `∂tα + ħ/2m [∂²β + 2∂α∂β]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StandardResidual {
    pub time: f64,
    pub max: [f64; 2],
    pub points: usize,
}

/// `(∂t, ∂x, ∂x²)` of `ln ψ` at one space-time point.
#[derive(Debug, Clone, Copy)]
struct LogDerivs {
    t: Complex64,
    x: Complex64,
    xx: Complex64,
}

/// Logarithms of one complex component over all snapshots.
struct LogSeries {
    logs: Vec<Vec<Complex64>>,
    amps: Vec<Vec<f64>>,
    peaks: Vec<f64>,
}

impl LogSeries {
    fn new<'a>(fields: impl Iterator<Item = &'a [Complex64]>) -> Self {
        let mut s = LogSeries { logs: Vec::new(), amps: Vec::new(), peaks: Vec::new() };
        for values in fields {
            let amps: Vec<f64> = values.iter().map(|z| z.norm()).collect();
            s.peaks.push(amps.iter().fold(0.0, |m: f64, a| m.max(*a)));
            s.logs.push(values.iter().map(|z| z.ln()).collect());
            s.amps.push(amps);
        }
        s
    }

    /// Whether the stencil around `(k, i)` clears `floor·peak`. A zero
    /// value that is not masked has no logarithm.
    fn usable(&self, k: usize, i: usize, floor: f64, grid: &GridSpec) -> Result<bool> {
        for (kk, ii) in [(k, i - 1), (k, i), (k, i + 1), (k - 1, i), (k + 1, i)] {
            let a = self.amps[kk][ii];
            if a < floor * self.peaks[kk] || (floor > 0.0 && a == 0.0) {
                return Ok(false);
            }
            if a == 0.0 {
                return Err(Error::NullConeValue { index: ii, x: grid.x(ii) });
            }
        }
        Ok(true)
    }

    fn derivs(&self, k: usize, i: usize, dx: f64, dt: f64) -> LogDerivs {
        let l = &self.logs[k];
        let (x, xx) = log_central(l[i - 1], l[i], l[i + 1], dx);
        let t = log_diff(self.logs[k - 1][i], self.logs[k + 1][i]) / (2.0 * dt);
        LogDerivs { t, x, xx }
    }
}

fn check_len(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::Input(format!("residuals need at least 3 snapshots, got {n}")));
    }
    Ok(())
}

/// Max-norm residuals of the four real equations at every interior snapshot.
///
/// Points whose stencil touches a component amplitude below
/// `amplitude_floor` times that component's peak are skipped. The two grid
/// points next to each boundary are always skipped, since Dirichlet
/// boundaries make `ψ±` vanish there.
#[allow(clippy::needless_range_loop)] // space-time stencils index several arrays at once
pub fn pde_residuals(traj: &Trajectory, amplitude_floor: f64) -> Result<Vec<PdeResidual>> {
    let snaps = &traj.snapshots;
    check_len(snaps.len())?;
    let grid = *traj.grid();
    let cfg = &traj.config;
    let (plus, minus): (Vec<ComplexField>, Vec<ComplexField>) = snaps.iter().map(|s| s.idempotent_split()).unzip();
    let lp = LogSeries::new(plus.iter().map(|f| f.values.as_slice()));
    let lm = LogSeries::new(minus.iter().map(|f| f.values.as_slice()));
    let (dx, dt) = (grid.dx(), cfg.output_interval());
    let (hbar, c) = (cfg.hbar, cfg.hbar / (2.0 * cfg.mass));
    let n = grid.n_points();

    let mut out = Vec::with_capacity(snaps.len() - 2);
    for k in 1..snaps.len() - 1 {
        let v = traj.potential.values(&grid, cfg.mass, snaps[k].time);
        let mut r = PdeResidual { time: snaps[k].time, max: [0.0; 4], points: 0 };
        for i in 2..n - 2 {
            if !(lp.usable(k, i, amplitude_floor, &grid)? && lm.usable(k, i, amplitude_floor, &grid)?) {
                continue;
            }
            let (p, m) = (lp.derivs(k, i, dx, dt), lm.derivs(k, i, dx, dt));
            // α = (a+ + a-)/2, δ = (a+ - a-)/2, β = (b+ + b-)/2, γ = (b- - b+)/2
            let split = |f: fn(&LogDerivs) -> Complex64| {
                let (a, b) = (f(&p), f(&m));
                [0.5 * (a.re + b.re), 0.5 * (a.im + b.im), 0.5 * (b.im - a.im), 0.5 * (a.re - b.re)]
            };
            let [at, bt, gt, dt_] = split(|d| d.t);
            let [ax, bx, gx, dx_] = split(|d| d.x);
            let [axx, bxx, gxx, dxx] = split(|d| d.xx);
            let e = [
                -hbar * bt + hbar * c * (axx + ax * ax - bx * bx - gx * gx + dx_ * dx_) - v[i],
                at + c * (bxx + 2.0 * (ax * bx - gx * dx_)),
                -dt_ + c * (gxx + 2.0 * (ax * gx - bx * dx_)),
                gt + c * (dxx + 2.0 * (ax * dx_ + bx * gx)),
            ];
            for (m, e) in r.max.iter_mut().zip(e) {
                *m = m.max(e.abs());
            }
            r.points += 1;
        }
        out.push(r);
    }
    Ok(out)
}

/// Residuals of the standard two-equation system for a sequence of complex
/// snapshots spaced by `cfg.output_interval()`, with the same stencils and
/// masking as [`pde_residuals`].
#[allow(clippy::needless_range_loop)]
pub fn standard_residuals(
    fields: &[ComplexField],
    potential: &Potential,
    cfg: &SolverConfig,
    amplitude_floor: f64,
) -> Result<Vec<StandardResidual>> {
    check_len(fields.len())?;
    let grid = fields[0].grid;
    let series = LogSeries::new(fields.iter().map(|f| f.values.as_slice()));
    let (dx, dt) = (grid.dx(), cfg.output_interval());
    let (hbar, c) = (cfg.hbar, cfg.hbar / (2.0 * cfg.mass));
    let mut out = Vec::with_capacity(fields.len() - 2);
    for k in 1..fields.len() - 1 {
        let v = potential.values(&grid, cfg.mass, fields[k].time);
        let mut r = StandardResidual { time: fields[k].time, max: [0.0; 2], points: 0 };
        for i in 2..grid.n_points() - 2 {
            if !series.usable(k, i, amplitude_floor, &grid)? {
                continue;
            }
            let d = series.derivs(k, i, dx, dt);
            let (ax, bx) = (d.x.re, d.x.im);
            let e = [
                -hbar * d.t.im + hbar * c * (d.xx.re + ax * ax - bx * bx) - v[i],
                d.t.re + c * (d.xx.im + 2.0 * ax * bx),
            ];
            for (m, e) in r.max.iter_mut().zip(e) {
                *m = m.max(e.abs());
            }
            r.points += 1;
        }
        out.push(r);
    }
    Ok(out)
}
