//! Bicomplex wave functions sampled on a uniform one-dimensional grid.

use crate::algebra::{Bicomplex, ComplexI1, IdempotentPair};
use crate::error::{Error, Result};
use crate::stencil::trapezoid;
use crate::symmetry::HyperPolarExponent;

pub const MIN_GRID_POINTS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    x_min: f64,
    x_max: f64,
    n_points: usize,
}

impl GridSpec {
    pub fn new(x_min: f64, x_max: f64, n_points: usize) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite()) {
            return Err(Error::InvalidGrid("bounds must be finite".into()));
        }
        if x_max <= x_min {
            return Err(Error::InvalidGrid(format!("x_max ({x_max}) must exceed x_min ({x_min})")));
        }
        if n_points < MIN_GRID_POINTS {
            return Err(Error::InvalidGrid(format!("n_points = {n_points}, need at least {MIN_GRID_POINTS}")));
        }
        Ok(Self { x_min, x_max, n_points })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn dx(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n_points - 1) as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        if i + 1 == self.n_points {
            self.x_max
        } else {
            self.x_min + i as f64 * self.dx()
        }
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_points).map(move |i| self.x(i))
    }

    fn check_same(&self, other: &GridSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::GridMismatch(format!("{self:?} vs {other:?}")))
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WaveField {
    pub grid: GridSpec,
    pub values: Vec<Bicomplex>,
    pub time: f64,
}

/// A ℂ(i1)-valued field, such as one idempotent component of a [`WaveField`].
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexField {
    pub grid: GridSpec,
    pub values: Vec<ComplexI1>,
    pub time: f64,
}

/// Hyper-polar exponents `(α, β, γ, δ)` at every grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperPolarField {
    pub grid: GridSpec,
    pub time: f64,
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
    pub gamma: Vec<f64>,
    pub delta: Vec<f64>,
}

impl HyperPolarField {
    pub fn exponent(&self, i: usize) -> HyperPolarExponent {
        HyperPolarExponent::new(self.alpha[i], self.beta[i], self.gamma[i], self.delta[i])
    }

    pub fn exponents(&self) -> impl Iterator<Item = HyperPolarExponent> + '_ {
        (0..self.grid.n_points()).map(|i| self.exponent(i))
    }

    pub fn max_abs_delta(&self) -> f64 {
        self.delta.iter().fold(0.0, |m, d| m.max(d.abs()))
    }
}

impl WaveField {
    pub fn new(grid: GridSpec, values: Vec<Bicomplex>, time: f64) -> Result<Self> {
        if values.len() != grid.n_points() {
            return Err(Error::GridMismatch(format!("{} values for {} grid points", values.len(), grid.n_points())));
        }
        Ok(Self { grid, values, time })
    }

    pub fn from_fn(grid: GridSpec, time: f64, f: impl Fn(f64) -> Bicomplex) -> Self {
        let values = grid.points().map(f).collect();
        Self { grid, values, time }
    }

    /// `ψ(x) = exp(α + β i1 + γ i2 + δ j)` pointwise.
    pub fn from_hyper_polar(grid: GridSpec, time: f64, exponent: impl Fn(f64) -> HyperPolarExponent) -> Result<Self> {
        let values = grid.points().map(|x| exponent(x).to_bicomplex().exp()).collect::<Result<Vec<_>>>()?;
        Ok(Self { grid, values, time })
    }

    /// Inverts the hyper-polar chart using the idempotent components:
    /// `α ± δ = ln|ψ±|` and `β ∓ γ = arg ψ±`, with principal arguments.
    pub fn to_hyper_polar(&self) -> Result<HyperPolarField> {
        let n = self.grid.n_points();
        let mut out = HyperPolarField {
            grid: self.grid,
            time: self.time,
            alpha: Vec::with_capacity(n),
            beta: Vec::with_capacity(n),
            gamma: Vec::with_capacity(n),
            delta: Vec::with_capacity(n),
        };
        for (i, w) in self.values.iter().enumerate() {
            let p = w.to_idempotent();
            let (rp, rm) = (p.plus.norm(), p.minus.norm());
            if rp == 0.0 || rm == 0.0 {
                return Err(Error::NullConeValue { index: i, x: self.grid.x(i) });
            }
            let (lp, lm) = (rp.ln(), rm.ln());
            let (ap, am) = (p.plus.arg(), p.minus.arg());
            out.alpha.push(0.5 * (lp + lm));
            out.delta.push(0.5 * (lp - lm));
            out.beta.push(0.5 * (ap + am));
            out.gamma.push(0.5 * (am - ap));
        }
        Ok(out)
    }

    pub fn idempotent_split(&self) -> (ComplexField, ComplexField) {
        let (plus, minus) = self
            .values
            .iter()
            .map(|w| {
                let p = w.to_idempotent();
                (p.plus, p.minus)
            })
            .unzip();
        (
            ComplexField { grid: self.grid, values: plus, time: self.time },
            ComplexField { grid: self.grid, values: minus, time: self.time },
        )
    }

    pub fn recombine(plus: &ComplexField, minus: &ComplexField) -> Result<Self> {
        plus.grid.check_same(&minus.grid)?;
        if plus.values.len() != minus.values.len() {
            return Err(Error::GridMismatch("component lengths differ".into()));
        }
        let values = plus
            .values
            .iter()
            .zip(&minus.values)
            .map(|(&p, &m)| Bicomplex::from_idempotent(IdempotentPair::new(p, m)))
            .collect();
        Ok(Self { grid: plus.grid, values, time: plus.time })
    }

    /// Scales each idempotent component to unit trapezoidal norm.
    pub fn normalize(&self) -> Result<Self> {
        let (plus, minus) = self.idempotent_split();
        let plus = plus.normalized().ok_or(Error::ZeroNorm { component: "plus" })?;
        let minus = minus.normalized().ok_or(Error::ZeroNorm { component: "minus" })?;
        Self::recombine(&plus, &minus)
    }

    /// `(∫|ψ+|² dx, ∫|ψ-|² dx)`.
    pub fn component_norms(&self) -> (f64, f64) {
        let (plus, minus) = self.idempotent_split();
        (plus.norm_sqr_integral(), minus.norm_sqr_integral())
    }

    pub fn map(&self, f: impl Fn(Bicomplex) -> Bicomplex) -> Self {
        Self { grid: self.grid, values: self.values.iter().map(|&w| f(w)).collect(), time: self.time }
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|w| w.is_finite())
    }

    /// The field without its two boundary points, where Dirichlet
    /// boundaries pin both components to zero.
    pub fn interior(&self) -> Result<Self> {
        let n = self.grid.n_points();
        let grid = GridSpec::new(self.grid.x(1), self.grid.x(n - 2), n - 2)?;
        Self::new(grid, self.values[1..n - 1].to_vec(), self.time)
    }

    pub fn same_grid(&self, other: &WaveField) -> Result<()> {
        self.grid.check_same(&other.grid)
    }
}

impl ComplexField {
    pub fn norm_sqr_integral(&self) -> f64 {
        let density: Vec<f64> = self.values.iter().map(|z| z.norm_sqr()).collect();
        trapezoid(&density, self.grid.dx())
    }

    pub fn normalized(&self) -> Option<Self> {
        let n = self.norm_sqr_integral();
        if !(n > 0.0 && n.is_finite()) {
            return None;
        }
        let s = 1.0 / n.sqrt();
        Some(Self { grid: self.grid, values: self.values.iter().map(|z| z * s).collect(), time: self.time })
    }

    /// Standard deviation of position under the density `|ψ|²`.
    pub fn position_spread(&self) -> f64 {
        let dx = self.grid.dx();
        let xs: Vec<f64> = self.grid.points().collect();
        let rho: Vec<f64> = self.values.iter().map(|z| z.norm_sqr()).collect();
        let n = trapezoid(&rho, dx);
        let m1: Vec<f64> = xs.iter().zip(&rho).map(|(x, r)| x * r).collect();
        let mean = trapezoid(&m1, dx) / n;
        let m2: Vec<f64> = xs.iter().zip(&rho).map(|(x, r)| (x - mean).powi(2) * r).collect();
        (trapezoid(&m2, dx) / n).sqrt()
    }
}
