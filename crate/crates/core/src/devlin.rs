//! Devlin's polynomials `a_n` for the Abel equation `ż = α z³ + β z²`.
//!
//! `a_n` is homogeneous of degree `n`. It is computed here by the linear
//! recursion, by the closed coefficient formula, and as the degree-`n` part
//! of the feedback inverse of minus the Ferfera series. The Lie-derivative
//! evaluation in [`lie_coeff`] shares no code with any of these.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::feedback::{antipode_left, evaluate, theta_prime, Character};
use crate::hopf::{kappa, tilde_theta, HElement};
use crate::series::{cat, ferfera, Series};
use crate::word::{words_of_degree, Letter, Word};
use crate::{Error, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DevlinPolynomial {
    pub n: u32,
    pub poly: Series,
}

impl DevlinPolynomial {
    pub fn coeff(&self, w: &Word) -> Rational {
        self.poly.coeff(w)
    }
}

fn int(n: u32) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `a_n = (n−1) a_{n−1} x1 + (n−2) a_{n−2} x0` with `a_1 = ∅`, `a_2 = x1`.
pub fn devlin_recursive(n: u32) -> Result<DevlinPolynomial, Error> {
    if n == 0 {
        return Err(Error::ZeroGrade);
    }
    let x0 = Series::from_word(Word::letter(Letter::X0));
    let x1 = Series::from_word(Word::letter(Letter::X1));
    let mut prev = Series::one();
    let mut cur = x1.clone();
    if n == 1 {
        return Ok(DevlinPolynomial { n, poly: prev });
    }
    for k in 3..=n {
        let next = &cat(&cur, &x1).scale(&int(k - 1)) + &cat(&prev, &x0).scale(&int(k - 2));
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(DevlinPolynomial { n, poly: cur })
}

/// Coefficient of `η` in `a_n`: zero off degree `n`, one for words of length
/// at most one, and otherwise the product of the degrees of the proper
/// nonempty prefixes of `η`.
pub fn devlin_coeff_closed(eta: &Word, n: u32) -> BigInt {
    if eta.degree() != n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    let mut deg = 1u32;
    for &x in eta.letters().iter().take(eta.len().saturating_sub(1)) {
        deg += x.weight();
        acc *= deg;
    }
    acc
}

/// `a_n` assembled from [`devlin_coeff_closed`].
pub fn devlin_closed(n: u32) -> Result<DevlinPolynomial, Error> {
    if n == 0 {
        return Err(Error::ZeroGrade);
    }
    let poly = Series::from_terms(words_of_degree(n).into_iter().map(|w| {
        let c = Rational::from_integer(devlin_coeff_closed(&w, n));
        (w, c)
    }));
    Ok(DevlinPolynomial { n, poly })
}

fn minus_ferfera(context: u32) -> Character {
    Character::new(-ferfera(context))
}

fn check_grade(n: u32, context: u32) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::ZeroGrade);
    }
    if n > context {
        return Err(Error::GradeAboveContext { grade: n, context });
    }
    Ok(())
}

/// `a_n = Σ_{deg η = n} S a_η (−c) η` with `c` the Ferfera series known to
/// degree `context`.
pub fn devlin_antipode(n: u32, context: u32) -> Result<DevlinPolynomial, Error> {
    check_grade(n, context)?;
    let ch = minus_ferfera(context);
    let poly = Series::from_terms(words_of_degree(n).into_iter().map(|w| {
        let c = evaluate(&antipode_left(&w), &ch);
        (w, c)
    }));
    Ok(DevlinPolynomial { n, poly })
}

/// Right-hand side of the antipode form of the Devlin recursion,
/// `(n−1) Σ_{deg η = n−1} S a_η(−c) η x1 + (n−2) Σ_{deg η = n−2} S a_η(−c) η x0`,
/// for `n >= 3`.
pub fn devlin_antipode_recursive(n: u32, context: u32) -> Result<DevlinPolynomial, Error> {
    check_grade(n, context)?;
    if n < 3 {
        return devlin_antipode(n, context);
    }
    let ch = minus_ferfera(context);
    let mut poly = Series::zero();
    for (x, grade, factor) in [(Letter::X1, n - 1, n - 1), (Letter::X0, n - 2, n - 2)] {
        for w in words_of_degree(grade) {
            let c = evaluate(&antipode_left(&w), &ch) * int(factor);
            poly.add_term(w.append(x), c);
        }
    }
    Ok(DevlinPolynomial { n, poly })
}

/// Integer polynomials in one variable, for the Lie-derivative oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
struct IntPoly(Vec<BigInt>);

impl IntPoly {
    fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        IntPoly(c)
    }

    fn derivative(&self) -> Self {
        IntPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k)
                .collect(),
        )
    }

    /// Multiplication by `z^k`.
    fn shift(&self, k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.0.iter().cloned());
        IntPoly(c)
    }

    fn at_one(&self) -> BigInt {
        self.0.iter().sum()
    }
}

/// `L_{g_η} h (1)` for `g_0 = z³`, `g_1 = z²`, `h = z`, where the leftmost
/// letter of `η` is the innermost derivative.
pub fn lie_coeff(eta: &Word) -> BigInt {
    let mut p = IntPoly::monomial(1);
    for &x in eta.letters() {
        let g_power = match x {
            Letter::X0 => 3,
            Letter::X1 => 2,
        };
        p = p.derivative().shift(g_power);
    }
    p.at_one()
}

/// `(S a_{ηx}(−c), deg(η) · S a_η(−c))`, with `c` the Ferfera series.
pub fn check_degree_scaling(eta: &Word, x: Letter) -> (Rational, Rational) {
    let longer = eta.append(x);
    let ch = minus_ferfera(longer.degree());
    let lhs = evaluate(&antipode_left(&longer), &ch);
    let rhs = evaluate(&antipode_left(eta), &ch) * int(eta.degree());
    (lhs, rhs)
}

/// `Θ̂'_η (a_∅)` with `θ̂'_1 = θ̃'_1 = −θ̃_1` and `θ̂'_0 = κ_∅ θ̃_1`.
pub fn theta_hat(eta: &Word) -> Result<HElement, Error> {
    if eta.is_empty() {
        return Err(Error::EmptyWord("theta_hat"));
    }
    Ok(eta
        .letters()
        .iter()
        .fold(HElement::generator(Word::empty()), |h, &x| match x {
            Letter::X1 => theta_prime(Letter::X1, &h),
            Letter::X0 => kappa(&Word::empty(), &tilde_theta(Letter::X1, &h)),
        }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::CoordMonomial;
    use Letter::{X0, X1};

    fn w(letters: &[Letter]) -> Word {
        Word::new(letters.to_vec())
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn poly(terms: &[(&[Letter], i64)]) -> Series {
        Series::from_terms(terms.iter().map(|(l, c)| (w(l), q(*c))))
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(devlin_recursive(0), Err(Error::ZeroGrade));
        assert_eq!(devlin_recursive(1).unwrap().poly, Series::one());
        assert_eq!(devlin_recursive(2).unwrap().poly, poly(&[(&[X1], 1)]));
        assert_eq!(
            devlin_recursive(3).unwrap().poly,
            poly(&[(&[X1, X1], 2), (&[X0], 1)])
        );
        assert_eq!(
            devlin_recursive(4).unwrap().poly.to_string(),
            "6*x1x1x1 + 3*x0x1 + 2*x1x0"
        );
        let a6 = devlin_recursive(6).unwrap().poly;
        let mut coeffs: Vec<i64> = a6
            .terms()
            .map(|(_, c)| c.to_integer().try_into().unwrap())
            .collect();
        coeffs.sort_unstable();
        assert_eq!(coeffs, [8, 12, 15, 24, 30, 40, 60, 120]);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(devlin_coeff_closed(&w(&[X1, X0, X1]), 5), BigInt::from(8));
        assert_eq!(devlin_coeff_closed(&w(&[X0]), 3), BigInt::from(1));
        assert_eq!(
            devlin_coeff_closed(&w(&[X1, X0, X1, X1]), 6),
            BigInt::from(40)
        );
        assert_eq!(devlin_coeff_closed(&w(&[X1, X0, X1]), 6), BigInt::zero());
        assert_eq!(devlin_coeff_closed(&Word::empty(), 1), BigInt::one());
    }

    #[test]
    fn routes_agree() {
        for n in 1..=8 {
            let rec = devlin_recursive(n).unwrap();
            assert_eq!(devlin_closed(n).unwrap(), rec, "closed {n}");
            assert_eq!(devlin_antipode(n, 8).unwrap(), rec, "antipode {n}");
            assert_eq!(
                devlin_antipode_recursive(n, 8).unwrap(),
                rec,
                "antipode recursion {n}"
            );
        }
    }

    #[test]
    fn antipode_route_errors() {
        assert_eq!(devlin_antipode(0, 4), Err(Error::ZeroGrade));
        assert_eq!(
            devlin_antipode(5, 4),
            Err(Error::GradeAboveContext {
                grade: 5,
                context: 4
            })
        );
        assert_eq!(devlin_antipode(1, 1).unwrap().poly, Series::one());
    }

    #[test]
    fn lie_examples() {
        assert_eq!(lie_coeff(&w(&[X1])), BigInt::from(1));
        assert_eq!(lie_coeff(&w(&[X1, X1])), BigInt::from(2));
        assert_eq!(lie_coeff(&w(&[X1, X0, X1])), BigInt::from(8));
        assert_eq!(lie_coeff(&Word::empty()), BigInt::from(1));
    }

    #[test]
    fn degree_scaling_examples() {
        assert_eq!(check_degree_scaling(&w(&[X1]), X1), (q(2), q(2)));
        assert_eq!(check_degree_scaling(&w(&[X0]), X1), (q(3), q(3)));
        let (l, r) = check_degree_scaling(&w(&[X1, X0]), X0);
        assert_eq!(l, r);
    }

    fn mono(factors: &[&[Letter]]) -> CoordMonomial {
        CoordMonomial::from_factors(factors.iter().map(|l| w(l)).collect())
    }

    #[test]
    fn theta_hat_examples() {
        let e: &[Letter] = &[];
        assert_eq!(
            theta_hat(&Word::empty()),
            Err(Error::EmptyWord("theta_hat"))
        );
        assert_eq!(
            theta_hat(&w(&[X1, X1])).unwrap(),
            HElement::from_monomial(mono(&[&[X1, X1]]))
        );
        assert_eq!(
            theta_hat(&w(&[X0, X1])).unwrap(),
            -HElement::from_terms([(mono(&[&[X1, X1], e]), q(1)), (mono(&[&[X1], &[X1]]), q(1))])
        );
        assert_eq!(
            theta_hat(&w(&[X0, X0, X1])).unwrap(),
            -HElement::from_terms([
                (mono(&[&[X1, X1, X1], e, e]), q(1)),
                (mono(&[&[X1, X1], &[X1], e]), q(4)),
                (mono(&[&[X1], &[X1], &[X1]]), q(1)),
            ])
        );
    }

    #[test]
    fn theta_hat_evaluates_to_antipode() {
        for n in 2..=8 {
            let ch = minus_ferfera(n);
            for eta in words_of_degree(n) {
                let th = theta_hat(&eta).unwrap();
                assert!(th
                    .terms()
                    .all(|(m, _)| m.factors().iter().all(|f| f.count(X0) == 0)));
                let mut v = evaluate(&th, &ch);
                if eta.len() % 2 == 0 {
                    v = -v;
                }
                assert_eq!(v, evaluate(&antipode_left(&eta), &ch), "{eta}");
            }
        }
    }
}
