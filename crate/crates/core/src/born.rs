//! Born densities from the three real moduli.
//!
//! For `ψ = e^{α + β i1 + γ i2 + δ j}`:
//! `|ψ|²₁ = |ψ|²₂ = e^{2α}` and `|ψ|²₃ = e^{2α} cosh 2δ`, which coincide
//! exactly on the null-hyperbolic class `δ ≡ 0`.

use crate::algebra::{Bicomplex, RealModulus};
use crate::error::Result;
use crate::stencil::trapezoid;
use crate::symmetry::{FieldClass, HyperPolarExponent, SymmetryOp};
use crate::wavefield::{HyperPolarField, WaveField};

/// Default tolerance on `max|δ|` for the null-hyperbolic class.
pub const DEFAULT_NULL_TOL: f64 = 1e-9;

/// Relative tolerance on the chain of equal densities for `δ ≡ 0`.
pub const COROLLARY_TOL: f64 = 1e-10;

fn density_at(w: Bicomplex, kind: RealModulus) -> f64 {
    match kind {
        RealModulus::First => w.null_cone_form().norm(),
        RealModulus::Second => w.real_modulus(RealModulus::Second).powi(2),
        RealModulus::Third => w.norm_sqr(),
    }
}

/// `|ψ|²_k` pointwise.
pub fn born_density(f: &WaveField, kind: RealModulus) -> Vec<f64> {
    f.values.iter().map(|&w| density_at(w, kind)).collect()
}

/// `e^{2α}` for kinds 1 and 2, `e^{2α} cosh 2δ` for kind 3.
pub fn born_closed_form(e: HyperPolarExponent, kind: RealModulus) -> f64 {
    let base = (2.0 * e.alpha).exp();
    match kind {
        RealModulus::Third => base * (2.0 * e.delta).cosh(),
        _ => base,
    }
}

/// `max |(|ψ|²₃ - (|ψ+|² + |ψ-|²)/2)|` over the grid.
pub fn theorem1_check(f: &WaveField) -> f64 {
    f.values
        .iter()
        .map(|&w| {
            let p = w.to_idempotent();
            (w.norm_sqr() - 0.5 * (p.plus.norm_sqr() + p.minus.norm_sqr())).abs()
        })
        .fold(0.0, f64::max)
}

/// Scale factor `1`, `e^{2δ}` or `e^{-2δ}` relating `|Pψ|²_k` to `|ψ|²_k`.
///
/// This holds for kinds 1 and 2. For kind 3 the operators `P2`, `P3` give
/// `e^{±2δ} / cosh 2δ`, because their images are ℂ(i1)-valued, where all
/// moduli agree; see [`symmetry_closed_form`].
pub fn scaling_factor(op: SymmetryOp, delta: f64) -> f64 {
    match op.field_class() {
        FieldClass::Bicomplex | FieldClass::Dag2Conjugate => 1.0,
        FieldClass::ComplexPlus => (2.0 * delta).exp(),
        FieldClass::ComplexMinus => (-2.0 * delta).exp(),
    }
}

/// `|Pψ|²_k` from the exponent: the density of `ψ` for `P0`, `P1` and
/// `e^{2(α ± δ)}` for the ℂ(i1)-valued images `ψ±`.
pub fn symmetry_closed_form(op: SymmetryOp, e: HyperPolarExponent, kind: RealModulus) -> f64 {
    match op.field_class() {
        FieldClass::Bicomplex | FieldClass::Dag2Conjugate => born_closed_form(e, kind),
        FieldClass::ComplexPlus => (2.0 * (e.alpha + e.delta)).exp(),
        FieldClass::ComplexMinus => (2.0 * (e.alpha - e.delta)).exp(),
    }
}

/// Pointwise ratio `|Pψ|²_k / |ψ|²_k`, with `Pψ` built from the chart of `ψ`.
pub fn symmetry_scaling(f: &WaveField, op: SymmetryOp, kind: RealModulus) -> Result<Vec<f64>> {
    let h = f.to_hyper_polar()?;
    let g = op.apply_to_wave(&h)?;
    Ok(born_density(&g, kind).iter().zip(born_density(f, kind)).map(|(a, b)| a / b).collect())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NullHyperbolicClass {
    pub null_hyperbolic: bool,
    pub max_abs_delta: f64,
    pub tol: f64,
    /// Largest relative spread, over the grid, among `|ψ|²₁`, `|ψ|²₂`,
    /// `|ψ|²₃`, `(ψψ^†1ψ^†2ψ^†3)^{1/2}` and `e^{2α}`; only computed inside
    /// the class.
    pub chain_deviation: Option<f64>,
}

impl NullHyperbolicClass {
    /// Inside the class and the chain of equalities holds to [`COROLLARY_TOL`].
    pub fn chain_holds(&self) -> bool {
        self.chain_deviation.is_some_and(|d| d <= COROLLARY_TOL)
    }
}

/// Points where both `|ψ+|` and `|ψ-|` reach `floor` times their peak.
/// Below that the chart is dominated by round-off in tiny tails.
pub fn chart_mask(f: &WaveField, floor: f64) -> Vec<bool> {
    let (p, m): (Vec<f64>, Vec<f64>) = f
        .values
        .iter()
        .map(|w| {
            let q = w.to_idempotent();
            (q.plus.norm(), q.minus.norm())
        })
        .unzip();
    let peak = |v: &[f64]| v.iter().copied().fold(0.0f64, f64::max);
    let (pp, pm) = (peak(&p), peak(&m));
    p.iter().zip(&m).map(|(&a, &b)| a >= floor * pp && b >= floor * pm).collect()
}

fn chain_deviation(f: &WaveField, h: &HyperPolarField, mask: &[bool]) -> f64 {
    f.values
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask[i])
        .map(|(i, &w)| {
            let reference = (2.0 * h.alpha[i]).exp();
            [
                density_at(w, RealModulus::First),
                density_at(w, RealModulus::Second),
                density_at(w, RealModulus::Third),
                w.fourth_root_modulus().powi(2),
            ]
            .iter()
            .map(|v| (v - reference).abs() / reference)
            .fold(0.0, f64::max)
        })
        .fold(0.0, f64::max)
}

/// Whether `max|δ| ≤ tol`, and if so how well the densities coincide.
/// Both are taken over [`chart_mask`] points.
pub fn classify_null_hyperbolic(f: &WaveField, tol: f64, amplitude_floor: f64) -> Result<NullHyperbolicClass> {
    let h = f.to_hyper_polar()?;
    let mask = chart_mask(f, amplitude_floor);
    let max_abs_delta = masked_max_abs_delta(&h, &mask);
    let null_hyperbolic = max_abs_delta <= tol;
    Ok(NullHyperbolicClass {
        null_hyperbolic,
        max_abs_delta,
        tol,
        chain_deviation: null_hyperbolic.then(|| chain_deviation(f, &h, &mask)),
    })
}

pub fn masked_max_abs_delta(h: &HyperPolarField, mask: &[bool]) -> f64 {
    h.delta.iter().zip(mask).filter(|(_, &m)| m).map(|(d, _)| d.abs()).fold(0.0, f64::max)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensitySummary {
    pub kind: RealModulus,
    pub integral: f64,
    pub min: f64,
    pub max: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingSummary {
    pub op: SymmetryOp,
    pub kind: RealModulus,
    pub min_ratio: f64,
    pub max_ratio: f64,
    /// Largest relative deviation of `|Pψ|²_k` from [`symmetry_closed_form`].
    pub max_closed_form_dev: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BornReport {
    pub time: f64,
    pub densities: Vec<DensitySummary>,
    pub scaling: Vec<ScalingSummary>,
    pub class: NullHyperbolicClass,
}

/// Densities, symmetry scalings for `P0..P3` and the class verdict for one
/// field. Densities use every point; the pointwise scaling and class
/// statistics use [`chart_mask`] points.
pub fn born_report(f: &WaveField, tol: f64, amplitude_floor: f64) -> Result<BornReport> {
    let h = f.to_hyper_polar()?;
    let mask = chart_mask(f, amplitude_floor);
    let dx = f.grid.dx();
    let mut densities = Vec::new();
    for kind in RealModulus::ALL {
        let d = born_density(f, kind);
        densities.push(DensitySummary {
            kind,
            integral: trapezoid(&d, dx),
            min: d.iter().copied().fold(f64::INFINITY, f64::min),
            max: d.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        });
    }
    let mut scaling = Vec::new();
    for op in SymmetryOp::FUNDAMENTAL {
        let g = op.apply_to_wave(&h)?;
        for kind in RealModulus::ALL {
            let (before, after) = (born_density(f, kind), born_density(&g, kind));
            let mut s = ScalingSummary {
                op,
                kind,
                min_ratio: f64::INFINITY,
                max_ratio: f64::NEG_INFINITY,
                max_closed_form_dev: 0.0,
            };
            for (i, e) in h.exponents().enumerate().filter(|&(i, _)| mask[i]) {
                let r = after[i] / before[i];
                s.min_ratio = s.min_ratio.min(r);
                s.max_ratio = s.max_ratio.max(r);
                let c = symmetry_closed_form(op, e, kind);
                s.max_closed_form_dev = s.max_closed_form_dev.max((after[i] - c).abs() / c);
            }
            scaling.push(s);
        }
    }
    Ok(BornReport { time: f.time, densities, scaling, class: classify_null_hyperbolic(f, tol, amplitude_floor)? })
}
