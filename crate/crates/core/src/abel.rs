//! Iterated integrals of polynomial inputs, truncated Fliess operators and a
//! fixed-step RK4 integrator for `ż = α(t) z³ + β(t) z²`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::devlin::devlin_recursive;
use crate::series::{write_signed_term, Series};
use crate::word::{Letter, Word};
use crate::{Error, Rational};

/// A polynomial in `t` with exact rational coefficients, lowest degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyFunction {
    coeffs: Vec<Rational>,
}

impl PolyFunction {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyFunction { coeffs }
    }

    pub fn zero() -> Self {
        PolyFunction { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        PolyFunction::new(vec![c])
    }

    pub fn one() -> Self {
        PolyFunction::constant(Rational::one())
    }

    /// `c t^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        PolyFunction::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + c.to_f64().unwrap_or(f64::NAN))
    }

    /// `∫_0^t p(s) ds`
    pub fn antiderivative(&self) -> PolyFunction {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / Rational::from_integer(BigInt::from(k + 1)));
        }
        PolyFunction::new(coeffs)
    }
}

impl<'a> Add<&'a PolyFunction> for &'a PolyFunction {
    type Output = PolyFunction;

    fn add(self, rhs: &'a PolyFunction) -> PolyFunction {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyFunction::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a PolyFunction> for &'a PolyFunction {
    type Output = PolyFunction;

    fn mul(self, rhs: &'a PolyFunction) -> PolyFunction {
        if self.is_zero() || rhs.is_zero() {
            return PolyFunction::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyFunction::new(coeffs)
    }
}

/// `1 + 2*t - 1/3*t^2`; the zero polynomial prints as `0`.
impl fmt::Display for PolyFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = match k {
                0 => None,
                1 => Some("t".to_string()),
                _ => Some(format!("t^{k}")),
            };
            match body {
                Some(body) => write_signed_term(f, first, c, &body)?,
                None => {
                    if first {
                        write!(f, "{c}")?;
                    } else if c.is_negative() {
                        write!(f, " - {}", -c)?;
                    } else {
                        write!(f, " + {c}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// The inputs `u0 = α` (paired with `x0`) and `u1 = β` (paired with `x1`).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InputPair {
    pub u0: PolyFunction,
    pub u1: PolyFunction,
}

impl InputPair {
    pub fn new(u0: PolyFunction, u1: PolyFunction) -> Self {
        InputPair { u0, u1 }
    }

    pub fn input(&self, x: Letter) -> &PolyFunction {
        match x {
            Letter::X0 => &self.u0,
            Letter::X1 => &self.u1,
        }
    }
}

/// Iterated integrals sharing work across common suffixes.
struct IntegralCache<'a> {
    u: &'a InputPair,
    table: HashMap<Word, PolyFunction>,
}

impl<'a> IntegralCache<'a> {
    fn new(u: &'a InputPair) -> Self {
        let mut table = HashMap::new();
        table.insert(Word::empty(), PolyFunction::one());
        IntegralCache { u, table }
    }

    fn get(&mut self, eta: &Word) -> PolyFunction {
        if let Some(p) = self.table.get(eta) {
            return p.clone();
        }
        let (x, rest) = eta.split_first().expect("empty word is seeded");
        let inner = self.get(&rest);
        let p = (self.u.input(x) * &inner).antiderivative();
        self.table.insert(eta.clone(), p.clone());
        p
    }
}

/// `E_∅ = 1`, `E_{x_i η}(t) = ∫_0^t u_i(s) E_η(s) ds`.
pub fn iterated_integral(eta: &Word, u: &InputPair) -> PolyFunction {
    IntegralCache::new(u).get(eta)
}

/// `Σ_{deg η <= n} <c, η> E_η[u]` as a polynomial in `t`.
pub fn fliess_poly(c: &Series, u: &InputPair, n: u32) -> Result<PolyFunction, Error> {
    if let Some(have) = c.truncation() {
        if have < n {
            return Err(Error::TruncationTooLow { have, need: n });
        }
    }
    let mut cache = IntegralCache::new(u);
    let mut coeffs: Vec<Rational> = Vec::new();
    for (w, k) in c.terms().filter(|(w, _)| w.degree() <= n) {
        let e = cache.get(w);
        if coeffs.len() < e.coeffs.len() {
            coeffs.resize(e.coeffs.len(), Rational::zero());
        }
        for (acc, x) in coeffs.iter_mut().zip(&e.coeffs) {
            *acc += k * x;
        }
    }
    Ok(PolyFunction::new(coeffs))
}

/// `Σ_{deg η <= n} <c, η> E_η[u](t)`.
pub fn fliess_eval(c: &Series, u: &InputPair, t: &Rational, n: u32) -> Result<Rational, Error> {
    Ok(fliess_poly(c, u, n)?.eval(t))
}

/// Default escape bound for [`abel_numeric`].
pub const DEFAULT_BLOW_UP_BOUND: f64 = 1e6;

/// Fixed-step classical Runge–Kutta integrator for `ż = α(t) z³ + β(t) z²`.
#[derive(Clone, Debug, PartialEq)]
pub struct AbelSolver {
    pub step: f64,
    pub blow_up_bound: f64,
}

impl AbelSolver {
    pub fn new(step: f64) -> Result<Self, Error> {
        if !(step > 0.0 && step.is_finite()) {
            return Err(Error::NonPositiveStep(step));
        }
        Ok(AbelSolver {
            step,
            blow_up_bound: DEFAULT_BLOW_UP_BOUND,
        })
    }

    pub fn with_bound(mut self, bound: f64) -> Self {
        self.blow_up_bound = bound;
        self
    }

    /// `z(t_end)` from `z(0) = z0`. The last step is shortened to land on
    /// `t_end` exactly.
    pub fn solve(&self, u: &InputPair, z0: f64, t_end: f64) -> Result<f64, Error> {
        if t_end.is_nan() || t_end < 0.0 {
            return Err(Error::NegativeEndTime(t_end));
        }
        let rhs = |t: f64, z: f64| {
            let z2 = z * z;
            u.u0.eval_f64(t) * z2 * z + u.u1.eval_f64(t) * z2
        };
        let full = (t_end / self.step * (1.0 + 1e-12)).floor() as u64;
        let mut z = z0;
        let mut t = 0.0;
        let mut i = 0u64;
        while t < t_end {
            let h = if i < full { self.step } else { t_end - t };
            if h <= 0.0 {
                break;
            }
            let k1 = rhs(t, z);
            let k2 = rhs(t + h / 2.0, z + h / 2.0 * k1);
            let k3 = rhs(t + h / 2.0, z + h / 2.0 * k2);
            let k4 = rhs(t + h, z + h * k3);
            z += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            i += 1;
            t = if i <= full {
                i as f64 * self.step
            } else {
                t_end
            };
            if t > t_end {
                t = t_end;
            }
            if !z.is_finite() || z.abs() > self.blow_up_bound {
                return Err(Error::BlowUp { t, z: z.abs() });
            }
        }
        Ok(z)
    }
}

/// [`AbelSolver`] with the default escape bound.
pub fn abel_numeric(u: &InputPair, z0: f64, t_end: f64, step: f64) -> Result<f64, Error> {
    AbelSolver::new(step)?.solve(u, z0, t_end)
}

/// `[a_1(ω), ..., a_n(ω)]` where `a_k(t)` is the Fliess operator of the
/// Devlin polynomial `a_k` applied to `u`.
pub fn return_map_coeffs(u: &InputPair, omega: &Rational, n: u32) -> Vec<Rational> {
    let mut cache = IntegralCache::new(u);
    (1..=n)
        .map(|k| {
            let a = devlin_recursive(k).expect("k >= 1").poly;
            a.terms().fold(Rational::zero(), |acc, (w, c)| {
                acc + c * cache.get(w).eval(omega)
            })
        })
        .collect()
}
