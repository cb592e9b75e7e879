//! The eight discrete symmetries `P0..P7` of the hyper-polar system.
//!
//! Each operator substitutes the pair `(γ, δ)` of a wave function's exponent
//! `α + β i1 + γ i2 + δ j` by bicomplex multiples of `(γ, δ)`; `α` and `β` are
//! never touched. The substitution is a 2×2 matrix with bicomplex entries,
//! which keeps `P_n ∘ P_n = Id` exact even for `P2`, `P3`, `P6`, `P7` whose
//! images leave the real hyper-polar chart.

use std::fmt;
use std::ops::Mul;

use crate::algebra::Bicomplex;
use crate::error::{Error, Result};
use crate::wavefield::{HyperPolarField, WaveField};

/// Real hyper-polar exponent `α + β i1 + γ i2 + δ j` of `ψ = e^(z1 + z2 i2)`,
/// with `z1 = α + β i1` and `z2 = γ + δ i1`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct HyperPolarExponent {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
}

impl HyperPolarExponent {
    pub const fn new(alpha: f64, beta: f64, gamma: f64, delta: f64) -> Self {
        Self { alpha, beta, gamma, delta }
    }

    pub fn to_bicomplex(self) -> Bicomplex {
        Bicomplex::new(self.alpha, self.beta, self.gamma, self.delta)
    }

    pub fn from_bicomplex(w: Bicomplex) -> Self {
        Self::new(w.w0, w.w1, w.w2, w.w3)
    }

    pub fn generalized(self) -> GeneralizedExponent {
        GeneralizedExponent {
            alpha: self.alpha,
            beta: self.beta,
            gamma: Bicomplex::real(self.gamma),
            delta: Bicomplex::real(self.delta),
        }
    }
}

/// Exponent whose `γ` and `δ` slots may hold bicomplex values, as produced by
/// the substitutions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralizedExponent {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: Bicomplex,
    pub delta: Bicomplex,
}

impl GeneralizedExponent {
    /// `α + β i1 + γ·i2 + δ·j`.
    pub fn value(&self) -> Bicomplex {
        Bicomplex::new(self.alpha, self.beta, 0.0, 0.0) + self.gamma * Bicomplex::I2 + self.delta * Bicomplex::J
    }
}

/// Linear substitution `(γ, δ) ↦ (a γ + b δ, c γ + d δ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Substitution(pub [[Bicomplex; 2]; 2]);

impl Substitution {
    pub const IDENTITY: Self = Substitution([[Bicomplex::ONE, Bicomplex::ZERO], [Bicomplex::ZERO, Bicomplex::ONE]]);

    pub fn apply(&self, g: GeneralizedExponent) -> GeneralizedExponent {
        let [[a, b], [c, d]] = self.0;
        GeneralizedExponent { gamma: a * g.gamma + b * g.delta, delta: c * g.gamma + d * g.delta, ..g }
    }
}

impl Mul for Substitution {
    type Output = Substitution;
    /// `(self * rhs)` applies `rhs` first, then `self`.
    fn mul(self, rhs: Substitution) -> Substitution {
        let (a, b) = (self.0, rhs.0);
        let mut out = [[Bicomplex::ZERO; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Substitution(out)
    }
}

/// One of the operators `P0..P7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetryOp(u8);

/// How an operator changes a wave field, for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldClass {
    Bicomplex,
    Dag2Conjugate,
    ComplexPlus,
    ComplexMinus,
}

impl fmt::Display for FieldClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldClass::Bicomplex => "bicomplex",
            FieldClass::Dag2Conjugate => "dag2-conjugate",
            FieldClass::ComplexPlus => "C(i1)-valued psi+",
            FieldClass::ComplexMinus => "C(i1)-valued psi-",
        })
    }
}

impl SymmetryOp {
    pub const ALL: [SymmetryOp; 8] = [
        SymmetryOp(0),
        SymmetryOp(1),
        SymmetryOp(2),
        SymmetryOp(3),
        SymmetryOp(4),
        SymmetryOp(5),
        SymmetryOp(6),
        SymmetryOp(7),
    ];
    pub const FUNDAMENTAL: [SymmetryOp; 4] = [SymmetryOp(0), SymmetryOp(1), SymmetryOp(2), SymmetryOp(3)];

    pub fn new(n: usize) -> Option<Self> {
        (n < 8).then_some(SymmetryOp(n as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn substitution(self) -> Substitution {
        let (o, z) = (Bicomplex::ONE, Bicomplex::ZERO);
        let (i1, i2, j) = (Bicomplex::I1, Bicomplex::I2, Bicomplex::J);
        Substitution(match self.0 {
            0 => [[o, z], [z, o]],
            1 => [[-o, z], [z, -o]],
            2 => [[z, -i2], [i2, z]],
            3 => [[z, i2], [-i2, z]],
            4 => [[z, i1], [-i1, z]],
            5 => [[z, -i1], [i1, z]],
            6 => [[j, z], [z, j]],
            7 => [[-j, z], [z, -j]],
            _ => unreachable!(),
        })
    }

    /// Human-readable form of the substitution on `(γ, δ)`.
    pub fn substitution_text(self) -> &'static str {
        match self.0 {
            0 => "identity",
            1 => "gamma -> -gamma, delta -> -delta",
            2 => "gamma -> -delta*i2, delta -> gamma*i2",
            3 => "gamma -> delta*i2, delta -> -gamma*i2",
            4 => "gamma -> delta*i1, delta -> -gamma*i1",
            5 => "gamma -> -delta*i1, delta -> gamma*i1",
            6 => "gamma -> gamma*j, delta -> delta*j",
            7 => "gamma -> -gamma*j, delta -> -delta*j",
            _ => unreachable!(),
        }
    }

    /// What `exp` of the transformed exponent is, in terms of `ψ`.
    pub fn field_class(self) -> FieldClass {
        match self.0 % 4 {
            0 => FieldClass::Bicomplex,
            1 => FieldClass::Dag2Conjugate,
            2 => FieldClass::ComplexPlus,
            _ => FieldClass::ComplexMinus,
        }
    }

    /// Substitution-level action.
    pub fn act(self, g: GeneralizedExponent) -> GeneralizedExponent {
        self.substitution().apply(g)
    }

    /// Value of the transformed exponent.
    pub fn apply(self, e: HyperPolarExponent) -> Bicomplex {
        self.act(e.generalized()).value()
    }

    /// Action on an arbitrary bicomplex number read as `α + β i1 + γ i2 + δ j`.
    pub fn apply_value(self, w: Bicomplex) -> Bicomplex {
        self.apply(HyperPolarExponent::from_bicomplex(w))
    }

    /// `self ∘ other`, defined only inside `{P0, P1, P2, P3}`.
    pub fn compose(self, other: SymmetryOp) -> Result<SymmetryOp> {
        if self.0 > 3 || other.0 > 3 {
            return Err(Error::UnsupportedComposition(self, other));
        }
        let product = self.substitution() * other.substitution();
        Ok(Self::FUNDAMENTAL
            .into_iter()
            .find(|op| op.substitution() == product)
            .expect("fundamental subgroup is closed"))
    }

    /// `exp(P(α, β, γ, δ))` pointwise over a hyper-polar field.
    pub fn apply_to_wave(self, field: &HyperPolarField) -> Result<WaveField> {
        let values = field.exponents().map(|e| self.apply(e).exp()).collect::<Result<Vec<_>>>()?;
        WaveField::new(field.grid, values, field.time)
    }
}

impl fmt::Display for SymmetryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", self.0)
    }
}

impl std::str::FromStr for SymmetryOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.strip_prefix('P')
            .or_else(|| s.strip_prefix('p'))
            .and_then(|n| n.parse::<usize>().ok())
            .and_then(SymmetryOp::new)
            .ok_or_else(|| Error::Parse(format!("unknown symmetry operator {s:?}, expected P0..P7")))
    }
}
