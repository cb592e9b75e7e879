use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use super::{ComplexI1, ConjKind, NULL_CONE_RTOL};
use crate::error::{Error, Result};

/// A bicomplex number `w0 + w1·i1 + w2·i2 + w3·j`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Bicomplex {
    pub w0: f64,
    pub w1: f64,
    pub w2: f64,
    pub w3: f64,
}

/// Coefficients on the idempotent basis `e1 = (1+j)/2`, `e2 = (1-j)/2`.
///
/// `plus = z1 - z2·i1` and `minus = z1 + z2·i1`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct IdempotentPair {
    pub plus: ComplexI1,
    pub minus: ComplexI1,
}

/// Subalgebra selected by a bicomplex squared modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    /// `w·w^†2`, valued in ℂ(i1).
    I1,
    /// `w·w^†1`, valued in ℂ(i2).
    I2,
    /// `w·w^†3`, valued in the hyperbolic numbers.
    J,
}

/// The three real moduli.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RealModulus {
    First,
    Second,
    Third,
}

impl RealModulus {
    pub const ALL: [RealModulus; 3] = [RealModulus::First, RealModulus::Second, RealModulus::Third];

    pub fn index(self) -> usize {
        self as usize + 1
    }

    pub fn from_index(k: usize) -> Option<Self> {
        match k {
            1 => Some(RealModulus::First),
            2 => Some(RealModulus::Second),
            3 => Some(RealModulus::Third),
            _ => None,
        }
    }
}

impl Bicomplex {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I1: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const I2: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 0.0, 1.0);
    /// Idempotent `(1 + j)/2`.
    pub const E1: Self = Self::new(0.5, 0.0, 0.0, 0.5);
    /// Idempotent `(1 - j)/2`.
    pub const E2: Self = Self::new(0.5, 0.0, 0.0, -0.5);
    /// The basis `{1, i1, i2, j}` in storage order.
    pub const UNITS: [Self; 4] = [Self::ONE, Self::I1, Self::I2, Self::J];

    pub const fn new(w0: f64, w1: f64, w2: f64, w3: f64) -> Self {
        Self { w0, w1, w2, w3 }
    }

    pub const fn real(x: f64) -> Self {
        Self::new(x, 0.0, 0.0, 0.0)
    }

    pub fn from_array(w: [f64; 4]) -> Self {
        Self::new(w[0], w[1], w[2], w[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.w0, self.w1, self.w2, self.w3]
    }

    /// Embeds `x + y·i1` with `w2 = w3 = 0`.
    pub fn from_i1(z: ComplexI1) -> Self {
        Self::new(z.re, z.im, 0.0, 0.0)
    }

    /// Builds `z1 + z2·i2`.
    pub fn from_complex_pair(z1: ComplexI1, z2: ComplexI1) -> Self {
        Self::new(z1.re, z1.im, z2.re, z2.im)
    }

    pub fn z1(self) -> ComplexI1 {
        ComplexI1::new(self.w0, self.w1)
    }

    pub fn z2(self) -> ComplexI1 {
        ComplexI1::new(self.w2, self.w3)
    }

    pub fn is_finite(self) -> bool {
        self.w0.is_finite() && self.w1.is_finite() && self.w2.is_finite() && self.w3.is_finite()
    }

    /// Multiplies by an element of ℂ(i1).
    pub fn scale_i1(self, c: ComplexI1) -> Self {
        Self::from_complex_pair(self.z1() * c, self.z2() * c)
    }

    pub fn conj(self, kind: ConjKind) -> Self {
        let s = kind.signs();
        Self::new(self.w0 * s[0], self.w1 * s[1], self.w2 * s[2], self.w3 * s[3])
    }

    /// Squared bicomplex modulus in the subalgebra selected by `axis`.
    ///
    /// Components outside that subalgebra are exactly zero.
    pub fn mod_sq(self, axis: Axis) -> Self {
        let (z1, z2) = (self.z1(), self.z2());
        match axis {
            Axis::I1 => Self::from_i1(z1 * z1 + z2 * z2),
            Axis::I2 => {
                let re = z1.norm_sqr() - z2.norm_sqr();
                let im = 2.0 * (z1 * z2.conj()).re;
                Self::new(re, 0.0, im, 0.0)
            }
            Axis::J => {
                let re = z1.norm_sqr() + z2.norm_sqr();
                let hyp = -2.0 * (z1 * z2.conj()).im;
                Self::new(re, 0.0, 0.0, hyp)
            }
        }
    }

    /// `z1² + z2²`; zero exactly on the null cone.
    pub fn null_cone_form(self) -> ComplexI1 {
        let (z1, z2) = (self.z1(), self.z2());
        z1 * z1 + z2 * z2
    }

    /// Default tolerance for null-cone membership of this value.
    pub fn null_cone_tolerance(self) -> f64 {
        NULL_CONE_RTOL * self.norm_sqr().max(1.0)
    }

    pub fn is_null_cone(self, eps: f64) -> bool {
        self.null_cone_form().norm() <= eps
    }

    /// Multiplicative inverse `w^†2 / (z1² + z2²)`.
    pub fn inverse(self) -> Result<Self> {
        let d = self.null_cone_form();
        let modulus = d.norm();
        if modulus <= self.null_cone_tolerance() {
            return Err(Error::NullCone { modulus });
        }
        Ok(self.conj(ConjKind::Dag2).scale_i1(d.inv()))
    }

    /// Squared Euclidean norm of the four components.
    pub fn norm_sqr(self) -> f64 {
        self.w0 * self.w0 + self.w1 * self.w1 + self.w2 * self.w2 + self.w3 * self.w3
    }

    pub fn to_idempotent(self) -> IdempotentPair {
        IdempotentPair {
            plus: ComplexI1::new(self.w0 + self.w3, self.w1 - self.w2),
            minus: ComplexI1::new(self.w0 - self.w3, self.w1 + self.w2),
        }
    }

    pub fn from_idempotent(p: IdempotentPair) -> Self {
        let (a, b) = (p.plus.re, p.plus.im);
        let (c, d) = (p.minus.re, p.minus.im);
        Self::new(0.5 * (a + c), 0.5 * (b + d), 0.5 * (d - b), 0.5 * (a - c))
    }

    /// Bicomplex exponential, evaluated as `e^(z1 - z2 i1) e1 + e^(z1 + z2 i1) e2`.
    pub fn exp(self) -> Result<Self> {
        let p = self.to_idempotent();
        let out = IdempotentPair { plus: p.plus.exp(), minus: p.minus.exp() };
        let w = Self::from_idempotent(out);
        if w.is_finite() {
            Ok(w)
        } else {
            Err(Error::Overflow)
        }
    }

    /// Exponential through `e^z1 (cos z2 + i2 sin z2)`.
    ///
    /// Overflows earlier than [`Bicomplex::exp`] for large `|Im z2|`; kept as
    /// an independent route for cross-checking.
    pub fn exp_trig(self) -> Result<Self> {
        let (z1, z2) = (self.z1(), self.z2());
        let e = z1.exp();
        let w = Self::from_complex_pair(e * z2.cos(), e * z2.sin());
        if w.is_finite() {
            Ok(w)
        } else {
            Err(Error::Overflow)
        }
    }

    pub fn real_modulus(self, kind: RealModulus) -> f64 {
        match kind {
            RealModulus::First => self.null_cone_form().norm().sqrt(),
            RealModulus::Second => {
                // w = u1 + u2·i1 with u1, u2 in ℂ(i2); reuse Complex64 with i2 as the unit.
                let u1 = ComplexI1::new(self.w0, self.w2);
                let u2 = ComplexI1::new(self.w1, self.w3);
                (u1 * u1 + u2 * u2).norm().sqrt()
            }
            RealModulus::Third => self.norm_sqr().sqrt(),
        }
    }

    /// `w · w^†1 · w^†2 · w^†3`, analytically real and non-negative.
    pub fn conjugate_product(self) -> Self {
        self * self.conj(ConjKind::Dag1) * self.conj(ConjKind::Dag2) * self.conj(ConjKind::Dag3)
    }

    /// Fourth root of the real part of [`Bicomplex::conjugate_product`],
    /// with negative round-off clamped to zero.
    pub fn fourth_root_modulus(self) -> f64 {
        self.conjugate_product().w0.max(0.0).sqrt().sqrt()
    }

    pub fn max_abs_component(self) -> f64 {
        self.w0.abs().max(self.w1.abs()).max(self.w2.abs()).max(self.w3.abs())
    }
}

impl IdempotentPair {
    pub fn new(plus: ComplexI1, minus: ComplexI1) -> Self {
        Self { plus, minus }
    }
}

impl From<f64> for Bicomplex {
    fn from(x: f64) -> Self {
        Self::real(x)
    }
}

impl From<ComplexI1> for Bicomplex {
    fn from(z: ComplexI1) -> Self {
        Self::from_i1(z)
    }
}

impl Add for Bicomplex {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.w0 + o.w0, self.w1 + o.w1, self.w2 + o.w2, self.w3 + o.w3)
    }
}

impl Sub for Bicomplex {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.w0 - o.w0, self.w1 - o.w1, self.w2 - o.w2, self.w3 - o.w3)
    }
}

impl Neg for Bicomplex {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w0, -self.w1, -self.w2, -self.w3)
    }
}

impl Mul for Bicomplex {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (a, b) = (self, o);
        Self::new(
            a.w0 * b.w0 - a.w1 * b.w1 - a.w2 * b.w2 + a.w3 * b.w3,
            a.w0 * b.w1 + a.w1 * b.w0 - a.w2 * b.w3 - a.w3 * b.w2,
            a.w0 * b.w2 + a.w2 * b.w0 - a.w1 * b.w3 - a.w3 * b.w1,
            a.w0 * b.w3 + a.w3 * b.w0 + a.w1 * b.w2 + a.w2 * b.w1,
        )
    }
}

impl Mul<f64> for Bicomplex {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.w0 * s, self.w1 * s, self.w2 * s, self.w3 * s)
    }
}

impl Mul<Bicomplex> for f64 {
    type Output = Bicomplex;
    fn mul(self, w: Bicomplex) -> Bicomplex {
        w * self
    }
}

impl Div<f64> for Bicomplex {
    type Output = Self;
    fn div(self, s: f64) -> Self {
        Self::new(self.w0 / s, self.w1 / s, self.w2 / s, self.w3 / s)
    }
}

impl AddAssign for Bicomplex {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl SubAssign for Bicomplex {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl MulAssign for Bicomplex {
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}

impl MulAssign<f64> for Bicomplex {
    fn mul_assign(&mut self, s: f64) {
        *self = *self * s;
    }
}

impl Sum for Bicomplex {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}
