//! Densities, probability currents and continuity-equation residuals.
//!
//! Each bicomplex density is a product `A·B` of two conjugates of `ψ`, with
//! current `ħ/(2m i1) (B ∂A - A ∂B)`:
//!
//! | kind | A     | B     |
//! |------|-------|-------|
//! | 1    | ψ     | ψ^†1  |
//! | 2    | ψ     | ψ^†3  |
//! | 3    | ψ^†2  | ψ^†1  |
//! | 4    | ψ^†2  | ψ^†3  |
//!
//! `plus` and `minus` are the real densities `|ψ±|²` of the idempotent
//! components with the usual currents `ħ/m Im(ψ̄± ∂ψ±)`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::algebra::{Bicomplex, ConjKind};
use crate::error::{Error, Result};
use crate::evolution::{SolverConfig, Trajectory};
use crate::stencil::{first_derivative, log_first_derivative, observed_order};
use crate::wavefield::WaveField;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DensityKind {
    One,
    Two,
    Three,
    Four,
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Component {
    Plus,
    Minus,
}

impl DensityKind {
    pub const ALL: [DensityKind; 6] = [
        DensityKind::One,
        DensityKind::Two,
        DensityKind::Three,
        DensityKind::Four,
        DensityKind::Plus,
        DensityKind::Minus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DensityKind::One => "1",
            DensityKind::Two => "2",
            DensityKind::Three => "3",
            DensityKind::Four => "4",
            DensityKind::Plus => "plus",
            DensityKind::Minus => "minus",
        }
    }

    /// Conjugations applied to `ψ` to form `(A, B)`.
    fn factors(self) -> Option<(ConjKind, ConjKind)> {
        use ConjKind::*;
        match self {
            DensityKind::One => Some((Dag0, Dag1)),
            DensityKind::Two => Some((Dag0, Dag3)),
            DensityKind::Three => Some((Dag2, Dag1)),
            DensityKind::Four => Some((Dag2, Dag3)),
            DensityKind::Plus | DensityKind::Minus => None,
        }
    }

    fn component(self) -> Option<Component> {
        match self {
            DensityKind::Plus => Some(Component::Plus),
            DensityKind::Minus => Some(Component::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for DensityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DensityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DensityKind::ALL
            .into_iter()
            .find(|k| k.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown density kind '{s}'")))
    }
}

fn component_values(f: &WaveField, c: Component) -> Vec<Complex64> {
    let (plus, minus) = f.idempotent_split();
    match c {
        Component::Plus => plus.values,
        Component::Minus => minus.values,
    }
}

/// Pointwise density; the real kinds are embedded as real bicomplex values.
pub fn density(f: &WaveField, kind: DensityKind) -> Vec<Bicomplex> {
    match (kind.factors(), kind.component()) {
        (Some((a, b)), _) => f.values.iter().map(|w| w.conj(a) * w.conj(b)).collect(),
        (None, Some(c)) => component_values(f, c).iter().map(|z| Bicomplex::real(z.norm_sqr())).collect(),
        (None, None) => unreachable!("every kind is bicomplex or real"),
    }
}

/// `ħ/(2m i1) (B ∂A - A ∂B)` with second-order differences; division by
/// `i1` is multiplication by `-i1`. Real kinds are embedded.
pub fn current(f: &WaveField, kind: DensityKind, cfg: &SolverConfig) -> Vec<Bicomplex> {
    let Some((ka, kb)) = kind.factors() else {
        let c = kind.component().expect("real kind");
        return real_current(f, c, cfg).into_iter().map(Bicomplex::real).collect();
    };
    let dx = f.grid.dx();
    let a: Vec<Bicomplex> = f.values.iter().map(|w| w.conj(ka)).collect();
    let b: Vec<Bicomplex> = f.values.iter().map(|w| w.conj(kb)).collect();
    let (da, db) = (first_derivative(&a, dx), first_derivative(&b, dx));
    let scale = Bicomplex::I1 * (-cfg.hbar / (2.0 * cfg.mass));
    (0..a.len()).map(|i| scale * (b[i] * da[i] - a[i] * db[i])).collect()
}

/// `ħ/(2m i) (ψ̄ ∂ψ - ψ ∂ψ̄)` for one idempotent component.
pub fn real_current(f: &WaveField, c: Component, cfg: &SolverConfig) -> Vec<f64> {
    let psi = component_values(f, c);
    let bar: Vec<Complex64> = psi.iter().map(|z| z.conj()).collect();
    let dx = f.grid.dx();
    let (dp, db) = (first_derivative(&psi, dx), first_derivative(&bar, dx));
    let scale = Complex64::new(0.0, -cfg.hbar / (2.0 * cfg.mass));
    (0..psi.len()).map(|i| (scale * (bar[i] * dp[i] - psi[i] * db[i])).re).collect()
}

/// Hyper-polar data needed by the closed-form currents.
struct Chart {
    alpha: Vec<f64>,
    gamma: Vec<f64>,
    delta: Vec<f64>,
    /// `∂x ln ψ±`.
    dplus: Vec<Complex64>,
    dminus: Vec<Complex64>,
}

fn chart(f: &WaveField) -> Result<Chart> {
    let h = f.to_hyper_polar()?;
    let (plus, minus) = f.idempotent_split();
    let dx = f.grid.dx();
    let logs = |v: &[Complex64]| v.iter().map(|z| z.ln()).collect::<Vec<_>>();
    Ok(Chart {
        alpha: h.alpha,
        gamma: h.gamma,
        delta: h.delta,
        dplus: log_first_derivative(&logs(&plus.values), dx),
        dminus: log_first_derivative(&logs(&minus.values), dx),
    })
}

/// Exponential closed forms, e.g. `J1 = ħ/m e^{2(α + γ i2)} ∂(β + δ i2)`,
/// with `∂β, ∂γ, ∂δ` from the logarithms of `ψ±`.
pub fn current_closed_form(f: &WaveField, kind: DensityKind, cfg: &SolverConfig) -> Result<Vec<Bicomplex>> {
    if let Some(c) = kind.component() {
        return Ok(real_current_closed_form(f, c, cfg)?.into_iter().map(Bicomplex::real).collect());
    }
    let ch = chart(f)?;
    let k = cfg.hbar / cfg.mass;
    Ok((0..f.values.len())
        .map(|i| {
            let (p, m) = (ch.dplus[i], ch.dminus[i]);
            let bx = 0.5 * (p.im + m.im);
            let gx = 0.5 * (m.im - p.im);
            let dx = 0.5 * (p.re - m.re);
            let e = k * (2.0 * ch.alpha[i]).exp();
            let (g2, d2) = (2.0 * ch.gamma[i], 2.0 * ch.delta[i]);
            let circ = |s: f64| Bicomplex::new(g2.cos(), 0.0, s * g2.sin(), 0.0);
            let hyp = |s: f64| Bicomplex::new(d2.cosh(), 0.0, 0.0, s * d2.sinh());
            match kind {
                DensityKind::One => circ(1.0) * Bicomplex::new(bx, 0.0, dx, 0.0) * e,
                DensityKind::Two => hyp(1.0) * Bicomplex::new(bx, 0.0, 0.0, -gx) * e,
                DensityKind::Three => hyp(-1.0) * Bicomplex::new(bx, 0.0, 0.0, gx) * e,
                DensityKind::Four => circ(-1.0) * Bicomplex::new(bx, 0.0, -dx, 0.0) * e,
                DensityKind::Plus | DensityKind::Minus => unreachable!("handled above"),
            }
        })
        .collect())
}

/// `J(ψ±) = ħ/m e^{2(α ± δ)} ∂(β ∓ γ)`.
pub fn real_current_closed_form(f: &WaveField, c: Component, cfg: &SolverConfig) -> Result<Vec<f64>> {
    let ch = chart(f)?;
    let k = cfg.hbar / cfg.mass;
    Ok((0..f.values.len())
        .map(|i| {
            let (s, d) = match c {
                Component::Plus => (1.0, ch.dplus[i]),
                Component::Minus => (-1.0, ch.dminus[i]),
            };
            k * (2.0 * (ch.alpha[i] + s * ch.delta[i])).exp() * d.im
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuityResidual {
    pub time: f64,
    pub kind: DensityKind,
    /// Max over interior points of `|∂t ρ + ∂x J|₃`.
    pub max: f64,
    /// Discrete `L²` norm `(Σ |r|₃² dx)^{1/2}` over interior points.
    pub l2: f64,
}

/// Continuity residual at each interior snapshot, with central differences
/// in time across snapshots and in space at interior grid points.
pub fn continuity_residual(traj: &Trajectory, kind: DensityKind) -> Result<Vec<ContinuityResidual>> {
    let snaps = &traj.snapshots;
    if snaps.len() < 3 {
        return Err(Error::Input(format!("continuity residuals need at least 3 snapshots, got {}", snaps.len())));
    }
    let dx = traj.grid().dx();
    let dt = traj.config.output_interval();
    let rho: Vec<Vec<Bicomplex>> = snaps.iter().map(|s| density(s, kind)).collect();
    let mut out = Vec::with_capacity(snaps.len() - 2);
    for k in 1..snaps.len() - 1 {
        let j = current(&snaps[k], kind, &traj.config);
        let dj = first_derivative(&j, dx);
        let (mut max, mut sum) = (0.0f64, 0.0);
        for i in 1..j.len() - 1 {
            let r = (rho[k + 1][i] - rho[k - 1][i]) * (0.5 / dt) + dj[i];
            let a = r.norm_sqr();
            max = max.max(a.sqrt());
            sum += a;
        }
        out.push(ContinuityResidual { time: snaps[k].time, kind, max, l2: (sum * dx).sqrt() });
    }
    Ok(out)
}

/// Observed orders between consecutive members of a refinement family,
/// each halving both `dx` and the snapshot interval, from the largest
/// residual over all snapshots.
pub fn convergence_orders(levels: &[Vec<ContinuityResidual>]) -> Vec<f64> {
    let worst: Vec<f64> = levels.iter().map(|l| l.iter().fold(0.0f64, |m, r| m.max(r.max))).collect();
    worst.windows(2).map(|w| observed_order(w[0], w[1])).collect()
}
