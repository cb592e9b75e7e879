//! Seeded randomized check of the algebraic, symmetry and density invariants.
//!
//! Every property draws `n_cases` samples from a ChaCha stream, records the
//! worst deviation seen, and passes when it stays within the property's
//! tolerance.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Bicomplex, ConjKind, RealModulus};
use crate::born::{born_closed_form, scaling_factor, symmetry_closed_form};
use crate::error::{Error, Result};
use crate::symmetry::{HyperPolarExponent, SymmetryOp};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Flips one entry of the reference multiplication table, so that the
    /// harness can be seen to fail.
    pub corrupt_table: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub cases: usize,
    pub worst: f64,
    pub tol: f64,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.worst <= self.tol
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub seed: u64,
    pub results: Vec<PropertyResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(PropertyResult::passed)
    }

    pub fn get(&self, name: &str) -> Option<&PropertyResult> {
        self.results.iter().find(|r| r.name == name)
    }
}

/// Products of the units `{1, i1, i2, j}` as `(sign, unit index)`.
const UNIT_TABLE: [[(f64, usize); 4]; 4] = [
    [(1.0, 0), (1.0, 1), (1.0, 2), (1.0, 3)],
    [(1.0, 1), (-1.0, 0), (1.0, 3), (-1.0, 2)],
    [(1.0, 2), (1.0, 3), (-1.0, 0), (-1.0, 1)],
    [(1.0, 3), (-1.0, 2), (-1.0, 1), (1.0, 0)],
];

/// `†a` followed by `†b`.
const CONJ_TABLE: [[usize; 4]; 4] = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];

fn norm3(w: Bicomplex) -> f64 {
    w.norm_sqr().sqrt()
}

fn rel(err: f64, scale: f64) -> f64 {
    err / scale.max(1.0)
}

struct Sampler(ChaCha8Rng);

impl Sampler {
    fn bicomplex(&mut self, r: f64) -> Bicomplex {
        let mut c = || self.0.gen_range(-r..r);
        Bicomplex::new(c(), c(), c(), c())
    }

    fn exponent(&mut self) -> HyperPolarExponent {
        HyperPolarExponent::new(
            self.0.gen_range(-3.0..3.0),
            self.0.gen_range(-2.0 * PI..2.0 * PI),
            self.0.gen_range(-2.0 * PI..2.0 * PI),
            self.0.gen_range(-3.0..3.0),
        )
    }

    fn real(&mut self, lo: f64, hi: f64) -> f64 {
        self.0.gen_range(lo..hi)
    }
}

struct Suite {
    sampler: Sampler,
    n: usize,
    results: Vec<PropertyResult>,
}

impl Suite {
    fn check(&mut self, name: &'static str, tol: f64, mut case: impl FnMut(&mut Sampler) -> f64) {
        let mut worst = 0.0f64;
        for _ in 0..self.n {
            let d = case(&mut self.sampler);
            // NaN counts as a failure
            worst = if d.is_nan() { f64::INFINITY } else { worst.max(d) };
        }
        self.results.push(PropertyResult { name, cases: self.n, worst, tol });
    }

    fn fixed(&mut self, name: &'static str, tol: f64, worst: f64) {
        self.results.push(PropertyResult { name, cases: 1, worst, tol });
    }
}

fn unit_table_deviation(corrupt: bool) -> f64 {
    let mut table = UNIT_TABLE;
    if corrupt {
        table[1][2].0 = -1.0;
    }
    let mut worst = 0.0f64;
    for (a, row) in table.iter().enumerate() {
        for (b, &(sign, k)) in row.iter().enumerate() {
            let expected = Bicomplex::UNITS[k] * sign;
            worst = worst.max(norm3(Bicomplex::UNITS[a] * Bicomplex::UNITS[b] - expected));
        }
    }
    worst
}

fn conj_table_deviation() -> f64 {
    let mut bad = 0;
    for a in ConjKind::ALL {
        for b in ConjKind::ALL {
            if a.compose(b).index() != CONJ_TABLE[a.index()][b.index()] {
                bad += 1;
            }
        }
    }
    bad as f64
}

/// Runs the full suite. `n_cases` must be positive.
pub fn run_suite(seed: u64, n_cases: usize, opts: VerifyOptions) -> Result<VerifyReport> {
    if n_cases == 0 {
        return Err(Error::Config("n_cases must be at least 1".into()));
    }
    let mut s = Suite { sampler: Sampler(ChaCha8Rng::seed_from_u64(seed)), n: n_cases, results: Vec::new() };

    s.fixed("unit_multiplication_table", 0.0, unit_table_deviation(opts.corrupt_table));
    s.fixed("conjugation_group_table", 0.0, conj_table_deviation());

    s.check("ring_axioms", 1e-12, |r| {
        let (a, b, c) = (r.bicomplex(5.0), r.bicomplex(5.0), r.bicomplex(5.0));
        let scale = norm3(a) * norm3(b) * norm3(c);
        [norm3((a * b) * c - a * (b * c)), norm3(a * (b + c) - (a * b + a * c)), norm3(a * b - b * a)]
            .into_iter()
            .fold(0.0, f64::max)
            / scale.max(1.0)
    });

    s.check("conjugation_composition", 0.0, |r| {
        let w = r.bicomplex(5.0);
        let mut worst = 0.0f64;
        for a in ConjKind::ALL {
            for b in ConjKind::ALL {
                worst = worst.max(norm3(w.conj(a).conj(b) - w.conj(a.compose(b))));
            }
        }
        worst
    });

    s.check("conjugation_axioms", 1e-12, |r| {
        let (a, b) = (r.bicomplex(5.0), r.bicomplex(5.0));
        let scale = norm3(a) * norm3(b) + norm3(a) + norm3(b);
        ConjKind::ALL
            .into_iter()
            .map(|k| {
                let sum = norm3((a + b).conj(k) - (a.conj(k) + b.conj(k)));
                let prod = norm3((a * b).conj(k) - a.conj(k) * b.conj(k));
                let inv = norm3(a.conj(k).conj(k) - a);
                sum.max(prod).max(inv) / scale.max(1.0)
            })
            .fold(0.0, f64::max)
    });

    s.check("first_modulus_multiplicative", 1e-10, |r| {
        let (a, b) = (r.bicomplex(5.0), r.bicomplex(5.0));
        let m = |w: Bicomplex| w.real_modulus(RealModulus::First);
        // relative to the Euclidean scale, since |·|₁ vanishes on the null cone
        let scale = a.norm_sqr() * b.norm_sqr();
        rel((m(a * b) * m(a * b) - m(a) * m(a) * m(b) * m(b)).abs(), scale)
    });

    s.check("first_equals_second_modulus", 1e-12, |r| {
        let w = r.bicomplex(5.0);
        let d = (w.real_modulus(RealModulus::First) - w.real_modulus(RealModulus::Second)).abs();
        rel(d * (w.real_modulus(RealModulus::First) + w.real_modulus(RealModulus::Second)), w.norm_sqr())
    });

    s.check("third_modulus_submultiplicative", 1e-12, |r| {
        let (a, b) = (r.bicomplex(5.0), r.bicomplex(5.0));
        (norm3(a * b) - 2f64.sqrt() * norm3(a) * norm3(b)).max(0.0)
    });

    s.check("pythagoras_identity", 1e-12, |r| {
        let w = r.bicomplex(5.0);
        let p = w.to_idempotent();
        rel((w.norm_sqr() - 0.5 * (p.plus.norm_sqr() + p.minus.norm_sqr())).abs(), w.norm_sqr())
    });

    s.check("fourth_root_identity", 1e-10, |r| {
        let w = r.bicomplex(5.0);
        let m1 = w.real_modulus(RealModulus::First);
        rel((w.fourth_root_modulus() - m1).abs(), norm3(w))
    });

    s.check("inverse", 1e-10, |r| {
        let w = r.bicomplex(5.0);
        if w.null_cone_form().norm() < 1e-3 * w.norm_sqr() {
            return 0.0;
        }
        w.inverse().map_or(f64::INFINITY, |inv| norm3(w * inv - Bicomplex::ONE))
    });

    s.check("null_cone_has_no_inverse", 0.0, |r| {
        let z = Bicomplex::new(r.real(-5.0, 5.0), r.real(-5.0, 5.0), 0.0, 0.0);
        let sign = if r.real(0.0, 1.0) < 0.5 { 1.0 } else { -1.0 };
        let w = z * (Bicomplex::I1 + Bicomplex::I2 * sign);
        if w.inverse().is_err() {
            0.0
        } else {
            1.0
        }
    });

    s.check("exp_commutes_with_conjugation", 1e-10, |r| {
        let w = r.exponent().to_bicomplex();
        let e = w.exp().expect("bounded exponent");
        ConjKind::ALL
            .into_iter()
            .map(|k| rel(norm3(e.conj(k) - w.conj(k).exp().unwrap()), norm3(e)))
            .fold(0.0, f64::max)
    });

    s.check("exp_idempotent_matches_trig", 1e-10, |r| {
        // |z2| ≤ 20
        let (rad, th) = (r.real(0.0, 20.0), r.real(-PI, PI));
        let w = Bicomplex::new(r.real(-3.0, 3.0), r.real(-PI, PI), rad * th.cos(), rad * th.sin());
        let (a, b) = (w.exp().unwrap(), w.exp_trig().unwrap());
        rel(norm3(a - b), norm3(a))
    });

    s.check("exp_hyperbolic_unit", 1e-12, |r| {
        let phi = r.real(-10.0, 10.0);
        let e = (Bicomplex::J * phi).exp().unwrap();
        let expected = Bicomplex::new(phi.cosh(), 0.0, 0.0, phi.sinh());
        rel(norm3(e - expected), norm3(expected))
    });

    s.check("symmetry_involution", 1e-12, |r| {
        let e = r.exponent();
        let g = e.generalized();
        SymmetryOp::ALL
            .into_iter()
            .map(|op| {
                let twice = op.act(op.act(g)).value();
                let period = norm3(op.apply(e) - SymmetryOp::new((op.index() + 4) % 8).unwrap().apply(e));
                rel(norm3(twice - e.to_bicomplex()).max(period), norm3(e.to_bicomplex()))
            })
            .fold(0.0, f64::max)
    });

    s.check("born_closed_forms", 1e-10, |r| {
        let e = r.exponent();
        let w = e.to_bicomplex().exp().unwrap();
        let d1 = w.null_cone_form().norm();
        let d3 = w.norm_sqr();
        (d1 - born_closed_form(e, RealModulus::First)).abs() / d1
            + (d3 - born_closed_form(e, RealModulus::Third)).abs() / d3
    });

    s.check("born_symmetry_scaling", 1e-10, |r| {
        let e = r.exponent();
        let w = e.to_bicomplex().exp().unwrap();
        let mut worst = 0.0f64;
        for op in SymmetryOp::ALL {
            let pw = op.apply(e).exp().unwrap();
            for (kind, before, after) in [
                (RealModulus::First, w.null_cone_form().norm(), pw.null_cone_form().norm()),
                (
                    RealModulus::Second,
                    w.real_modulus(RealModulus::Second).powi(2),
                    pw.real_modulus(RealModulus::Second).powi(2),
                ),
                (RealModulus::Third, w.norm_sqr(), pw.norm_sqr()),
            ] {
                let expected = symmetry_closed_form(op, e, kind);
                worst = worst.max((after - expected).abs() / expected);
                if kind != RealModulus::Third {
                    let ratio = scaling_factor(op, e.delta);
                    worst = worst.max((after / before - ratio).abs() / ratio);
                }
            }
        }
        worst
    });

    s.check("null_hyperbolic_chain", 1e-10, |r| {
        let e = HyperPolarExponent { delta: 0.0, ..r.exponent() };
        let w = e.to_bicomplex().exp().unwrap();
        let reference = (2.0 * e.alpha).exp();
        [
            w.null_cone_form().norm(),
            w.real_modulus(RealModulus::Second).powi(2),
            w.norm_sqr(),
            w.fourth_root_modulus().powi(2),
        ]
        .into_iter()
        .map(|v| (v - reference).abs() / reference)
        .fold(0.0, f64::max)
    });

    s.check("text_round_trip", 0.0, |r| {
        let w = r.bicomplex(1e3);
        match w.to_string().parse::<Bicomplex>() {
            Ok(back) if back == w => 0.0,
            _ => 1.0,
        }
    });

    Ok(VerifyReport { seed, results: s.results })
}
