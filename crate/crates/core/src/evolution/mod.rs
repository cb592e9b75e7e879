//! Crank–Nicolson time stepping of the bicomplex Schrödinger equation.
//!
//! The field is split into its idempotent components `ψ±`, each of which
//! obeys the standard complex equation `i ħ ∂t ψ± = -ħ²/2m ∂x² ψ± + V ψ±`
//! with the same real potential. Both are advanced independently and
//! recombined.

mod pde;

pub use pde::{pde_residuals, standard_residuals, PdeResidual, StandardResidual};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tridiag::Tridiagonal;
use crate::wavefield::{ComplexField, GridSpec, WaveField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Boundary {
    #[default]
    DirichletZero,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub hbar: f64,
    pub mass: f64,
    pub dt: f64,
    pub boundary: Boundary,
    pub steps_per_output: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { hbar: 1.0, mass: 1.0, dt: 1e-3, boundary: Boundary::DirichletZero, steps_per_output: 1 }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::InvalidSolver(format!("{name} must be positive and finite, got {v}")))
            }
        };
        positive("hbar", self.hbar)?;
        positive("mass", self.mass)?;
        positive("dt", self.dt)?;
        if self.steps_per_output == 0 {
            return Err(Error::InvalidSolver("steps_per_output must be at least 1".into()));
        }
        Ok(())
    }

    /// Time between recorded snapshots.
    pub fn output_interval(&self) -> f64 {
        self.dt * self.steps_per_output as f64
    }

    /// A message when `dt·max|V|/ħ ≥ 1`, where the phase error per step is large.
    pub fn accuracy_warning(&self, max_abs_v: f64) -> Option<String> {
        let r = self.dt * max_abs_v / self.hbar;
        (r >= 1.0).then(|| format!("dt*max|V|/hbar = {r:.3} >= 1; time steps are too coarse for accurate phases"))
    }
}

/// Per-step potential tables; table `j` is used on
/// `[start_time + j·interval, start_time + (j+1)·interval)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TabulatedPotential {
    pub tables: Vec<Vec<f64>>,
    pub start_time: f64,
    pub interval: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub enum Potential {
    #[default]
    Free,
    /// `V = m ω² x² / 2`.
    Harmonic {
        omega: f64,
    },
    /// `height` on `[x_left, x_right]`, zero elsewhere.
    Barrier {
        height: f64,
        x_left: f64,
        x_right: f64,
    },
    Tabulated(TabulatedPotential),
}

impl Potential {
    /// A single time-independent table.
    pub fn table(values: Vec<f64>) -> Self {
        Potential::Tabulated(TabulatedPotential { tables: vec![values], start_time: 0.0, interval: 1.0 })
    }

    pub fn is_static(&self) -> bool {
        match self {
            Potential::Tabulated(t) => t.tables.len() <= 1,
            _ => true,
        }
    }

    pub fn validate(&self, grid: &GridSpec) -> Result<()> {
        let bad = |m: String| Err(Error::Input(format!("potential: {m}")));
        match self {
            Potential::Free => Ok(()),
            Potential::Harmonic { omega } if !(*omega > 0.0 && omega.is_finite()) => {
                bad(format!("omega must be positive, got {omega}"))
            }
            Potential::Harmonic { .. } => Ok(()),
            Potential::Barrier { height, x_left, x_right } => {
                if !(height.is_finite() && x_left.is_finite() && x_right.is_finite()) || x_right < x_left {
                    bad(format!("invalid barrier [{x_left}, {x_right}] of height {height}"))
                } else {
                    Ok(())
                }
            }
            Potential::Tabulated(t) => {
                if t.tables.is_empty() {
                    return bad("no tables".into());
                }
                if !(t.interval > 0.0 && t.interval.is_finite() && t.start_time.is_finite()) {
                    return bad(format!("table interval must be positive, got {}", t.interval));
                }
                for (j, v) in t.tables.iter().enumerate() {
                    if v.len() != grid.n_points() {
                        return Err(Error::GridMismatch(format!(
                            "potential table {j} has {} values for {} grid points",
                            v.len(),
                            grid.n_points()
                        )));
                    }
                    if v.iter().any(|x| !x.is_finite()) {
                        return bad(format!("table {j} is not finite"));
                    }
                }
                Ok(())
            }
        }
    }

    /// `V(x_i, t)` on the grid.
    pub fn values(&self, grid: &GridSpec, mass: f64, t: f64) -> Vec<f64> {
        match self {
            Potential::Free => vec![0.0; grid.n_points()],
            Potential::Harmonic { omega } => grid.points().map(|x| 0.5 * mass * omega * omega * x * x).collect(),
            Potential::Barrier { height, x_left, x_right } => {
                grid.points().map(|x| if x >= *x_left && x <= *x_right { *height } else { 0.0 }).collect()
            }
            Potential::Tabulated(tab) => {
                let j = ((t - tab.start_time) / tab.interval).floor();
                let j = if j > 0.0 { (j as usize).min(tab.tables.len() - 1) } else { 0 };
                tab.tables[j].clone()
            }
        }
    }

    pub fn max_abs(&self, grid: &GridSpec, mass: f64) -> f64 {
        match self {
            Potential::Tabulated(tab) => tab.tables.iter().flatten().fold(0.0, |m, v| m.max(v.abs())),
            _ => self.values(grid, mass, 0.0).iter().fold(0.0, |m, v| m.max(v.abs())),
        }
    }
}

/// The two Crank–Nicolson matrices on the interior unknowns `1..n-1`:
/// `(I + i dt H / 2ħ) ψⁿ⁺¹ = (I - i dt H / 2ħ) ψⁿ`.
#[derive(Debug, Clone)]
struct Propagator {
    implicit: Tridiagonal,
    explicit: Tridiagonal,
}

impl Propagator {
    fn new(grid: &GridSpec, cfg: &SolverConfig, v: &[f64]) -> Self {
        let m = grid.n_points() - 2;
        let dx = grid.dx();
        let kinetic = cfg.hbar * cfg.hbar / (2.0 * cfg.mass * dx * dx);
        let a = Complex64::new(0.0, cfg.dt / (2.0 * cfg.hbar));
        let one = Complex64::new(1.0, 0.0);
        let off = vec![a * -kinetic; m];
        let h_diag: Vec<Complex64> = v[1..=m].iter().map(|&vi| a * (2.0 * kinetic + vi)).collect();
        Self {
            implicit: Tridiagonal {
                lower: off.clone(),
                diag: h_diag.iter().map(|&h| one + h).collect(),
                upper: off.clone(),
            },
            explicit: Tridiagonal {
                lower: off.iter().map(|&o| -o).collect(),
                diag: h_diag.iter().map(|&h| one - h).collect(),
                upper: off.iter().map(|&o| -o).collect(),
            },
        }
    }

    fn advance(&self, psi: &[Complex64]) -> Result<Vec<Complex64>> {
        let n = psi.len();
        let rhs = self.explicit.apply(&psi[1..n - 1]);
        let interior = self.implicit.solve(&rhs)?;
        let mut out = Vec::with_capacity(n);
        out.push(Complex64::default());
        out.extend(interior);
        out.push(Complex64::default());
        Ok(out)
    }
}

/// Snapshots at `t0 + k·dt·steps_per_output`, starting with the initial field.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub snapshots: Vec<WaveField>,
    /// `(∫|ψ+|², ∫|ψ-|²)` for each snapshot.
    pub norms: Vec<(f64, f64)>,
    pub config: SolverConfig,
    pub potential: Potential,
}

impl Trajectory {
    /// Builds a trajectory from externally produced snapshots, checking the
    /// grid and the time spacing against `config`.
    pub fn from_snapshots(snapshots: Vec<WaveField>, config: SolverConfig, potential: Potential) -> Result<Self> {
        config.validate()?;
        let first = snapshots.first().ok_or_else(|| Error::Input("trajectory needs a snapshot".into()))?;
        let interval = config.output_interval();
        for (k, s) in snapshots.iter().enumerate() {
            first.same_grid(s)?;
            let expected = first.time + k as f64 * interval;
            if (s.time - expected).abs() > 1e-9 * expected.abs().max(interval) {
                return Err(Error::Input(format!(
                    "snapshot {k} at t = {} but uniform spacing puts it at {expected}",
                    s.time
                )));
            }
        }
        potential.validate(&first.grid)?;
        let norms = snapshots.iter().map(WaveField::component_norms).collect();
        Ok(Self { snapshots, norms, config, potential })
    }

    pub fn initial(&self) -> &WaveField {
        &self.snapshots[0]
    }

    pub fn grid(&self) -> &GridSpec {
        &self.snapshots[0].grid
    }

    pub fn times(&self) -> Vec<f64> {
        self.snapshots.iter().map(|s| s.time).collect()
    }

    /// Largest `|δ|` over all snapshots.
    pub fn max_abs_delta(&self) -> Result<f64> {
        self.snapshots
            .iter()
            .map(|s| s.to_hyper_polar().map(|h| h.max_abs_delta()))
            .try_fold(0.0, |m, d| d.map(|d| f64::max(m, d)))
    }
}

fn check_inputs(f: &WaveField, v: &Potential, cfg: &SolverConfig) -> Result<()> {
    cfg.validate()?;
    v.validate(&f.grid)?;
    if !f.is_finite() {
        return Err(Error::Input("initial field is not finite".into()));
    }
    Ok(())
}

/// Advances one component through `n_steps`, keeping every
/// `steps_per_output`-th state.
fn run_component(
    psi: &[Complex64],
    t0: f64,
    grid: &GridSpec,
    v: &Potential,
    cfg: &SolverConfig,
    n_steps: usize,
) -> Result<Vec<Vec<Complex64>>> {
    let fixed = v.is_static().then(|| Propagator::new(grid, cfg, &v.values(grid, cfg.mass, t0)));
    let mut out = vec![psi.to_vec()];
    let mut cur = psi.to_vec();
    for s in 0..n_steps {
        cur = match &fixed {
            Some(p) => p.advance(&cur)?,
            None => {
                let t_mid = t0 + s as f64 * cfg.dt + 0.5 * cfg.dt;
                Propagator::new(grid, cfg, &v.values(grid, cfg.mass, t_mid)).advance(&cur)?
            }
        };
        if (s + 1) % cfg.steps_per_output == 0 {
            out.push(cur.clone());
        }
    }
    Ok(out)
}

/// Runs `n_steps` Crank–Nicolson steps.
///
/// The two idempotent components are advanced concurrently; the arithmetic
/// per component is identical either way, so results do not depend on the
/// thread count.
pub fn evolve(f: &WaveField, v: &Potential, cfg: &SolverConfig, n_steps: usize) -> Result<Trajectory> {
    check_inputs(f, v, cfg)?;
    let (plus, minus) = f.idempotent_split();
    let grid = f.grid;
    let (rp, rm) = rayon::join(
        || run_component(&plus.values, f.time, &grid, v, cfg, n_steps),
        || run_component(&minus.values, f.time, &grid, v, cfg, n_steps),
    );
    let (rp, rm) = (rp?, rm?);
    let snapshots = rp
        .into_iter()
        .zip(rm)
        .enumerate()
        .map(|(k, (p, m))| {
            if k == 0 {
                return Ok(f.clone());
            }
            let time = f.time + (k * cfg.steps_per_output) as f64 * cfg.dt;
            WaveField::recombine(&ComplexField { grid, values: p, time }, &ComplexField { grid, values: m, time })
        })
        .collect::<Result<Vec<_>>>()?;
    let norms = snapshots.iter().map(WaveField::component_norms).collect();
    Ok(Trajectory { snapshots, norms, config: *cfg, potential: v.clone() })
}

/// One Crank–Nicolson step.
pub fn step(f: &WaveField, v: &Potential, cfg: &SolverConfig) -> Result<WaveField> {
    let single = SolverConfig { steps_per_output: 1, ..*cfg };
    let mut traj = evolve(f, v, &single, 1)?;
    Ok(traj.snapshots.pop().expect("one step recorded"))
}
