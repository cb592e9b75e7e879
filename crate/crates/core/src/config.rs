//! Flat `key = value` run configuration.
//!
//! ```text
//! # free Gaussian packet
//! x_min = -20
//! x_max = 20
//! n_points = 801
//! dt = 0.001
//! n_steps = 2000
//! steps_per_output = 100
//! potential.kind = free
//! initial.kind = gaussian
//! initial.sigma = 1
//! initial.k = 1
//! ```
//!
//! Blank lines and `#` comments are ignored. Unknown and repeated keys are
//! errors. Relative paths in `potential.file` are resolved against the
//! directory of the config file.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_complex::Complex64;

use crate::algebra::{Bicomplex, IdempotentPair};
use crate::analytic::HarmonicGround;
use crate::error::{Error, Result};
use crate::evolution::{Boundary, Potential, SolverConfig, TabulatedPotential};
use crate::symmetry::HyperPolarExponent;
use crate::wavefield::{ComplexField, GridSpec, WaveField};

const KEYS: &[&str] = &[
    "x_min",
    "x_max",
    "n_points",
    "hbar",
    "mass",
    "dt",
    "n_steps",
    "steps_per_output",
    "boundary",
    "potential.kind",
    "potential.omega",
    "potential.height",
    "potential.x_left",
    "potential.x_right",
    "potential.file",
    "potential.start_time",
    "potential.interval",
    "initial.kind",
    "initial.alpha0",
    "initial.x0",
    "initial.sigma",
    "initial.k",
    "initial.gamma",
    "initial.gamma_k",
    "initial.delta",
    "initial.normalize",
    "initial.scale",
    "output_dir",
    "seed",
    "reports",
    "reports.amplitude_floor",
    "reports.null_tol",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InitialKind {
    /// `exp(α + β i1 + γ i2 + δ j)` with `α = α0 - (x-x0)²/4σ²`, `β = kx`,
    /// `γ = γ0 + γk x`, `δ = δ0`.
    Gaussian,
    /// Ground state of the harmonic potential, in ℂ(i1).
    HarmonicGround,
    /// A complex Gaussian in the `e1` component only, so `ψ- ≡ 0`.
    NullConeGaussian,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialCondition {
    pub kind: InitialKind,
    pub alpha0: f64,
    pub x0: f64,
    pub sigma: f64,
    pub k: f64,
    pub gamma: f64,
    pub gamma_k: f64,
    pub delta: f64,
    /// Scale each idempotent component to unit norm (nonzero ones only).
    pub normalize: bool,
    /// Constant bicomplex factor applied before normalisation.
    pub scale: Bicomplex,
}

impl Default for InitialCondition {
    fn default() -> Self {
        Self {
            kind: InitialKind::Gaussian,
            alpha0: 0.0,
            x0: 0.0,
            sigma: 1.0,
            k: 0.0,
            gamma: 0.0,
            gamma_k: 0.0,
            delta: 0.0,
            normalize: true,
            scale: Bicomplex::ONE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReportKind {
    Continuity,
    Born,
    Symmetry,
    Pde,
}

impl ReportKind {
    pub const ALL: [ReportKind; 4] = [ReportKind::Continuity, ReportKind::Born, ReportKind::Symmetry, ReportKind::Pde];

    pub fn name(self) -> &'static str {
        match self {
            ReportKind::Continuity => "continuity",
            ReportKind::Born => "born",
            ReportKind::Symmetry => "symmetry",
            ReportKind::Pde => "pde",
        }
    }
}

impl FromStr for ReportKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ReportKind::ALL
            .into_iter()
            .find(|k| k.name() == s.trim())
            .ok_or_else(|| Error::Config(format!("unknown report '{s}', expected continuity, born, symmetry or pde")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub grid: GridSpec,
    pub solver: SolverConfig,
    pub n_steps: usize,
    pub potential: Potential,
    pub initial: InitialCondition,
    pub output_dir: PathBuf,
    pub seed: u64,
    pub reports: Vec<ReportKind>,
    /// Relative amplitude below which chart-based residuals skip a point.
    pub amplitude_floor: f64,
    /// Tolerance on `max|δ|` for the null-hyperbolic class.
    pub null_tol: f64,
    /// Source of a tabulated potential, as resolved at load time.
    pub potential_file: Option<PathBuf>,
}

struct Entries {
    map: BTreeMap<String, (usize, String)>,
}

impl Entries {
    fn parse(text: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected 'key = value', got '{line}'", n + 1)))?;
            let (k, v) = (k.trim(), v.trim());
            if !KEYS.contains(&k) {
                return Err(Error::Config(format!("line {}: unknown key '{k}'", n + 1)));
            }
            if v.is_empty() {
                return Err(Error::Config(format!("line {}: empty value for '{k}'", n + 1)));
            }
            if let Some((first, _)) = map.insert(k.to_string(), (n + 1, v.to_string())) {
                return Err(Error::Config(format!("line {}: '{k}' already set on line {first}", n + 1)));
            }
        }
        Ok(Self { map })
    }

    fn raw(&self, key: &str) -> Option<&(usize, String)> {
        self.map.get(key)
    }

    fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.raw(key) {
            None => Ok(None),
            Some((line, v)) => {
                v.parse().map(Some).map_err(|_| Error::Config(format!("line {line}: invalid value '{v}' for '{key}'")))
            }
        }
    }

    fn or<T: FromStr>(&self, key: &str, default: T) -> Result<T> {
        Ok(self.get(key)?.unwrap_or(default))
    }

    fn require<T: FromStr>(&self, key: &str) -> Result<T> {
        self.get(key)?.ok_or_else(|| Error::Config(format!("missing required key '{key}'")))
    }

    fn has(&self, key: &str) -> bool {
        self.map.contains_key(key)
    }
}

fn positive(key: &str, v: f64) -> Result<f64> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Config(format!("'{key}' must be positive, got {v}")))
    }
}

fn finite(key: &str, v: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Config(format!("'{key}' must be finite, got {v}")))
    }
}

/// Rows of a tabulated potential file: one comma-separated table per line.
fn read_tables(path: &Path) -> Result<Vec<Vec<f64>>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(n, line)| {
            line.split(',')
                .map(|v| {
                    v.trim().parse::<f64>().map_err(|_| {
                        Error::Config(format!("{}: row {}: invalid number '{}'", path.display(), n + 1, v.trim()))
                    })
                })
                .collect()
        })
        .collect()
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, path.parent().unwrap_or(Path::new(".")))
    }

    /// Parses config text; `base` resolves relative file references.
    pub fn parse(text: &str, base: &Path) -> Result<Self> {
        let e = Entries::parse(text)?;
        let grid = GridSpec::new(
            finite("x_min", e.require("x_min")?)?,
            finite("x_max", e.require("x_max")?)?,
            e.require("n_points")?,
        )
        .map_err(|err| Error::Config(err.to_string()))?;

        let boundary = match e.or("boundary", "dirichlet_zero".to_string())?.as_str() {
            "dirichlet_zero" => Boundary::DirichletZero,
            other => return Err(Error::Config(format!("unsupported boundary '{other}'"))),
        };
        let solver = SolverConfig {
            hbar: positive("hbar", e.or("hbar", 1.0)?)?,
            mass: positive("mass", e.or("mass", 1.0)?)?,
            dt: positive("dt", e.require("dt")?)?,
            boundary,
            steps_per_output: e.or("steps_per_output", 1)?,
        };
        if solver.steps_per_output == 0 {
            return Err(Error::Config("'steps_per_output' must be at least 1".into()));
        }

        let mut potential_file = None;
        let potential = match e.or("potential.kind", "free".to_string())?.as_str() {
            "free" => Potential::Free,
            "harmonic" => Potential::Harmonic { omega: positive("potential.omega", e.require("potential.omega")?)? },
            "barrier" => Potential::Barrier {
                height: finite("potential.height", e.require("potential.height")?)?,
                x_left: finite("potential.x_left", e.require("potential.x_left")?)?,
                x_right: finite("potential.x_right", e.require("potential.x_right")?)?,
            },
            "tabulated" => {
                let file: PathBuf = e.require::<String>("potential.file")?.into();
                let file = if file.is_absolute() { file } else { base.join(file) };
                let tables = read_tables(&file)?;
                potential_file = Some(file);
                Potential::Tabulated(TabulatedPotential {
                    tables,
                    start_time: finite("potential.start_time", e.or("potential.start_time", 0.0)?)?,
                    interval: positive("potential.interval", e.or("potential.interval", solver.dt)?)?,
                })
            }
            other => return Err(Error::Config(format!("unknown potential.kind '{other}'"))),
        };
        potential.validate(&grid).map_err(|err| Error::Config(err.to_string()))?;

        let kind = match e.or("initial.kind", "gaussian".to_string())?.as_str() {
            "gaussian" => InitialKind::Gaussian,
            "harmonic_ground" => InitialKind::HarmonicGround,
            "null_cone_gaussian" => InitialKind::NullConeGaussian,
            other => return Err(Error::Config(format!("unknown initial.kind '{other}'"))),
        };
        if kind == InitialKind::HarmonicGround && !matches!(potential, Potential::Harmonic { .. }) {
            return Err(Error::Config("initial.kind = harmonic_ground needs potential.kind = harmonic".into()));
        }
        let d = InitialCondition::default();
        let scale = match e.raw("initial.scale") {
            None => d.scale,
            Some((line, v)) => {
                v.parse::<Bicomplex>().map_err(|err| Error::Config(format!("line {line}: initial.scale: {err}")))?
            }
        };
        let initial = InitialCondition {
            kind,
            alpha0: finite("initial.alpha0", e.or("initial.alpha0", d.alpha0)?)?,
            x0: finite("initial.x0", e.or("initial.x0", d.x0)?)?,
            sigma: positive("initial.sigma", e.or("initial.sigma", d.sigma)?)?,
            k: finite("initial.k", e.or("initial.k", d.k)?)?,
            gamma: finite("initial.gamma", e.or("initial.gamma", d.gamma)?)?,
            gamma_k: finite("initial.gamma_k", e.or("initial.gamma_k", d.gamma_k)?)?,
            delta: finite("initial.delta", e.or("initial.delta", d.delta)?)?,
            normalize: e.or("initial.normalize", d.normalize)?,
            scale,
        };

        let reports = match e.raw("reports") {
            None => vec![ReportKind::Continuity, ReportKind::Born],
            Some((_, v)) if v == "none" => Vec::new(),
            Some((_, v)) => {
                let mut r = v.split(',').map(str::parse).collect::<Result<Vec<ReportKind>>>()?;
                r.sort();
                r.dedup();
                r
            }
        };
        if e.has("potential.omega") && !matches!(potential, Potential::Harmonic { .. }) {
            return Err(Error::Config("potential.omega is only used by potential.kind = harmonic".into()));
        }

        Ok(Self {
            grid,
            solver,
            n_steps: e.require("n_steps")?,
            potential,
            initial,
            output_dir: e.or("output_dir", "output".to_string())?.into(),
            seed: e.or("seed", 0)?,
            reports,
            amplitude_floor: finite("reports.amplitude_floor", e.or("reports.amplitude_floor", 1e-6)?)?,
            null_tol: finite("reports.null_tol", e.or("reports.null_tol", crate::born::DEFAULT_NULL_TOL)?)?,
            potential_file,
        })
    }

    /// Samples the initial wave field.
    pub fn initial_field(&self) -> Result<WaveField> {
        let ic = &self.initial;
        let grid = self.grid;
        let gaussian = |x: f64| ic.alpha0 - (x - ic.x0).powi(2) / (4.0 * ic.sigma * ic.sigma);
        let raw = match ic.kind {
            InitialKind::Gaussian => WaveField::from_hyper_polar(grid, 0.0, |x| {
                HyperPolarExponent::new(gaussian(x), ic.k * x, ic.gamma + ic.gamma_k * x, ic.delta)
            })?,
            InitialKind::HarmonicGround => {
                let Potential::Harmonic { omega } = self.potential else { unreachable!("checked at parse time") };
                let h = HarmonicGround { omega, hbar: self.solver.hbar, mass: self.solver.mass };
                WaveField::from_fn(grid, 0.0, |x| Bicomplex::from_i1(h.eval(x, 0.0)))
            }
            InitialKind::NullConeGaussian => WaveField::from_fn(grid, 0.0, |x| {
                let z = Complex64::new(gaussian(x), ic.k * x).exp();
                Bicomplex::from_idempotent(IdempotentPair::new(z, Complex64::default()))
            }),
        };
        let scaled = raw.map(|w| ic.scale * w);
        if !ic.normalize {
            return Ok(scaled);
        }
        let (plus, minus) = scaled.idempotent_split();
        let fix = |c: ComplexField| c.normalized().unwrap_or(c);
        WaveField::recombine(&fix(plus), &fix(minus))
    }
}
