//! Closed-form solutions of the standard complex Schrödinger equation
//! `i ħ ∂t ψ = -ħ²/2m ∂x² ψ + V ψ`, used as initial data and as oracles.

use std::f64::consts::PI;

use num_complex::Complex64;

/// Free Gaussian packet, normalised, with position spread `sigma0` at `t = 0`,
/// centre `x0` and wavenumber `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FreeGaussian {
    pub x0: f64,
    pub sigma0: f64,
    pub k: f64,
    pub hbar: f64,
    pub mass: f64,
}

impl FreeGaussian {
    pub fn eval(&self, x: f64, t: f64) -> Complex64 {
        let a = self.sigma0 * self.sigma0;
        let v = self.hbar * self.k / self.mass;
        let omega = self.hbar * self.k * self.k / (2.0 * self.mass);
        let s = Complex64::new(1.0, self.hbar * t / (2.0 * self.mass * a));
        let u = x - self.x0 - v * t;
        let norm = (2.0 * PI * a).powf(-0.25);
        let exponent = -u * u / (4.0 * a * s) + Complex64::i() * (self.k * x - omega * t);
        norm / s.sqrt() * exponent.exp()
    }

    /// Position spread `σ0 √(1 + (ħt / 2mσ0²)²)`.
    pub fn width(&self, t: f64) -> f64 {
        let tau = self.hbar * t / (2.0 * self.mass * self.sigma0 * self.sigma0);
        self.sigma0 * (1.0 + tau * tau).sqrt()
    }
}

/// Harmonic-oscillator ground state for `V = m ω² x² / 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonicGround {
    pub omega: f64,
    pub hbar: f64,
    pub mass: f64,
}

impl HarmonicGround {
    pub fn eval(&self, x: f64, t: f64) -> Complex64 {
        let mw = self.mass * self.omega / self.hbar;
        let amp = (mw / PI).powf(0.25) * (-0.5 * mw * x * x).exp();
        amp * Complex64::new(0.0, -0.5 * self.omega * t).exp()
    }
}

/// Free plane wave `A e^{i(kx - ωt)}` with `ω = ħk²/2m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWave {
    pub amplitude: Complex64,
    pub k: f64,
    pub hbar: f64,
    pub mass: f64,
}

impl PlaneWave {
    pub fn eval(&self, x: f64, t: f64) -> Complex64 {
        let omega = self.hbar * self.k * self.k / (2.0 * self.mass);
        self.amplitude * Complex64::new(0.0, self.k * x - omega * t).exp()
    }
}
