use std::cmp::Ordering;
use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::series::write_signed_term;
use crate::word::{Letter, Word};
use crate::Rational;

/// A commutative monomial `a_{η1}···a_{ηl}` in the coordinate functions.
///
/// The factors are kept sorted, so equal monomials are structurally equal. The
/// empty monomial is the unit `𝟏` (degree 0), which is distinct from `a_∅`
/// (the one-factor monomial on the empty word, degree 1).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CoordMonomial {
    factors: Vec<Word>,
}

impl CoordMonomial {
    pub fn unit() -> Self {
        CoordMonomial::default()
    }

    /// The coordinate function `a_w`.
    pub fn generator(w: Word) -> Self {
        CoordMonomial { factors: vec![w] }
    }

    pub fn from_factors(mut factors: Vec<Word>) -> Self {
        factors.sort();
        CoordMonomial { factors }
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factors in ascending canonical order, with repetition.
    pub fn factors(&self) -> &[Word] {
        &self.factors
    }

    /// The word `w` if this monomial is the single generator `a_w`.
    pub fn as_generator(&self) -> Option<&Word> {
        match self.factors.as_slice() {
            [w] => Some(w),
            _ => None,
        }
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(Word::degree).sum()
    }

    pub fn mul(&self, other: &CoordMonomial) -> CoordMonomial {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        factors.extend_from_slice(&self.factors);
        factors.extend_from_slice(&other.factors);
        CoordMonomial::from_factors(factors)
    }

    /// The monomial with factor `k` replaced by `w`.
    fn replace(&self, k: usize, w: Word) -> CoordMonomial {
        let mut factors = self.factors.clone();
        factors[k] = w;
        CoordMonomial::from_factors(factors)
    }

    /// Applies a letter-level map to one factor at a time and sums (Leibniz rule).
    fn derive(&self, f: impl Fn(&Word) -> Word) -> HElement {
        let mut out = HElement::zero();
        for (k, w) in self.factors.iter().enumerate() {
            out.add_term(self.replace(k, f(w)), Rational::one());
        }
        out
    }

    fn descending(&self) -> impl Iterator<Item = &Word> {
        self.factors.iter().rev()
    }
}

impl Ord for CoordMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.factors.len().cmp(&other.factors.len()))
            .then_with(|| self.descending().cmp(other.descending()))
    }
}

impl PartialOrd for CoordMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CoordMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        for w in self.descending() {
            write!(f, "a[{w}]")?;
        }
        Ok(())
    }
}

/// An element of the coordinate algebra `H`: a finite rational combination of
/// monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HElement {
    terms: BTreeMap<CoordMonomial, Rational>,
}

impl HElement {
    pub fn zero() -> Self {
        HElement::default()
    }

    /// The unit `𝟏`.
    pub fn one() -> Self {
        HElement::from_monomial(CoordMonomial::unit())
    }

    /// The coordinate function `a_w`.
    pub fn generator(w: Word) -> Self {
        HElement::from_monomial(CoordMonomial::generator(w))
    }

    pub fn from_monomial(m: CoordMonomial) -> Self {
        let mut h = HElement::zero();
        h.add_term(m, Rational::one());
        h
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (CoordMonomial, Rational)>,
    {
        let mut h = HElement::zero();
        for (m, c) in terms {
            h.add_term(m, c);
        }
        h
    }

    pub fn add_term(&mut self, m: CoordMonomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CoordMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &CoordMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &Rational) -> HElement {
        HElement::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c * k)))
    }

    /// Sum of all coefficients, i.e. the value on the character sending every
    /// coordinate function to 1.
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// `Some(n)` if every monomial has degree `n`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(CoordMonomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Applies a linear map given on monomials.
    pub fn map_monomials(&self, f: impl Fn(&CoordMonomial) -> HElement) -> HElement {
        let mut out = HElement::zero();
        for (m, c) in &self.terms {
            for (m2, c2) in f(m).terms {
                out.add_term(m2, c * c2);
            }
        }
        out
    }
}

/// Product in `H`.
pub fn h_mul(a: &HElement, b: &HElement) -> HElement {
    let mut out = HElement::zero();
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            out.add_term(ma.mul(mb), ca * cb);
        }
    }
    out
}

/// Left augmentation `θ_x`, extended to `H` as a derivation: `a_η ↦ a_{xη}`.
pub fn theta(x: Letter, h: &HElement) -> HElement {
    h.map_monomials(|m| m.derive(|w| w.prepend(x)))
}

/// Right augmentation `θ̃_x`, extended to `H` as a derivation: `a_η ↦ a_{ηx}`.
pub fn tilde_theta(x: Letter, h: &HElement) -> HElement {
    h.map_monomials(|m| m.derive(|w| w.append(x)))
}

/// Multiplication by the coordinate function `a_η`.
pub fn kappa(eta: &Word, h: &HElement) -> HElement {
    let g = CoordMonomial::generator(eta.clone());
    h.map_monomials(|m| HElement::from_monomial(m.mul(&g)))
}

/// Counit: the coefficient of `𝟏`.
pub fn counit(h: &HElement) -> Rational {
    h.coeff(&CoordMonomial::unit())
}

impl<'a> Add<&'a HElement> for &'a HElement {
    type Output = HElement;

    fn add(self, rhs: &'a HElement) -> HElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for HElement {
    type Output = HElement;

    fn add(mut self, rhs: HElement) -> HElement {
        self += &rhs;
        self
    }
}

impl AddAssign<&HElement> for HElement {
    fn add_assign(&mut self, rhs: &HElement) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<'a> Sub<&'a HElement> for &'a HElement {
    type Output = HElement;

    fn sub(self, rhs: &'a HElement) -> HElement {
        self + &(-rhs)
    }
}

impl Sub for HElement {
    type Output = HElement;

    fn sub(self, rhs: HElement) -> HElement {
        &self - &rhs
    }
}

impl Neg for &HElement {
    type Output = HElement;

    fn neg(self) -> HElement {
        HElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for HElement {
    type Output = HElement;

    fn neg(self) -> HElement {
        -&self
    }
}

impl<'a> Mul<&'a HElement> for &'a HElement {
    type Output = HElement;

    fn mul(self, rhs: &'a HElement) -> HElement {
        h_mul(self, rhs)
    }
}

impl fmt::Display for HElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            write_signed_term(f, i == 0, c, &m.to_string())?;
        }
        Ok(())
    }
}

/// An element of `H ⊗ H`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElement {
    terms: BTreeMap<(CoordMonomial, CoordMonomial), Rational>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    /// `l ⊗ r` with coefficient 1.
    pub fn pure(l: CoordMonomial, r: CoordMonomial) -> Self {
        let mut t = TensorElement::zero();
        t.add_term(l, r, Rational::one());
        t
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (CoordMonomial, CoordMonomial, Rational)>,
    {
        let mut t = TensorElement::zero();
        for (l, r, c) in terms {
            t.add_term(l, r, c);
        }
        t
    }

    pub fn add_term(&mut self, l: CoordMonomial, r: CoordMonomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((l, r)) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CoordMonomial, &CoordMonomial, &Rational)> {
        self.terms.iter().map(|((l, r), c)| (l, r, c))
    }

    pub fn coeff(&self, l: &CoordMonomial, r: &CoordMonomial) -> Rational {
        self.terms
            .get(&(l.clone(), r.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &Rational) -> TensorElement {
        TensorElement::from_terms(self.terms().map(|(l, r, c)| (l.clone(), r.clone(), c * k)))
    }

    /// `(f ⊗ g)` applied term by term.
    pub fn map(
        &self,
        f: impl Fn(&CoordMonomial) -> HElement,
        g: impl Fn(&CoordMonomial) -> HElement,
    ) -> TensorElement {
        let mut out = TensorElement::zero();
        for (l, r, c) in self.terms() {
            let fl = f(l);
            if fl.is_zero() {
                continue;
            }
            let gr = g(r);
            for (ml, cl) in fl.terms() {
                for (mr, cr) in gr.terms() {
                    out.add_term(ml.clone(), mr.clone(), c * cl * cr);
                }
            }
        }
        out
    }

    /// `(f ⊗ id)`
    pub fn map_left(&self, f: impl Fn(&CoordMonomial) -> HElement) -> TensorElement {
        self.map(f, |m| HElement::from_monomial(m.clone()))
    }

    /// `(id ⊗ g)`
    pub fn map_right(&self, g: impl Fn(&CoordMonomial) -> HElement) -> TensorElement {
        self.map(|m| HElement::from_monomial(m.clone()), g)
    }

    /// Multiplication `μ: H ⊗ H -> H`.
    pub fn multiply(&self) -> HElement {
        HElement::from_terms(self.terms().map(|(l, r, c)| (l.mul(r), c.clone())))
    }

    /// Product in the algebra `H ⊗ H`.
    pub fn tensor_mul(&self, other: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (l1, r1, c1) in self.terms() {
            for (l2, r2, c2) in other.terms() {
                out.add_term(l1.mul(l2), r1.mul(r2), c1 * c2);
            }
        }
        out
    }
}

impl<'a> Add<&'a TensorElement> for &'a TensorElement {
    type Output = TensorElement;

    fn add(self, rhs: &'a TensorElement) -> TensorElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&TensorElement> for TensorElement {
    fn add_assign(&mut self, rhs: &TensorElement) {
        for (l, r, c) in rhs.terms() {
            self.add_term(l.clone(), r.clone(), c.clone());
        }
    }
}

impl<'a> Sub<&'a TensorElement> for &'a TensorElement {
    type Output = TensorElement;

    fn sub(self, rhs: &'a TensorElement) -> TensorElement {
        self + &rhs.scale(&-Rational::one())
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, r, c)) in self.terms().enumerate() {
            write_signed_term(f, i == 0, c, &format!("{l} ⊗ {r}"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::{X0, X1};

    fn w(letters: &[Letter]) -> Word {
        Word::new(letters.to_vec())
    }

    fn a(letters: &[Letter]) -> HElement {
        HElement::generator(w(letters))
    }

    #[test]
    fn unit_and_empty_word_generator_differ() {
        assert_ne!(HElement::one(), a(&[]));
        assert_eq!(CoordMonomial::unit().degree(), 0);
        assert_eq!(CoordMonomial::generator(Word::empty()).degree(), 1);
    }

    #[test]
    fn product_examples() {
        let prod = h_mul(&a(&[X1]), &a(&[]));
        assert_eq!(
            prod,
            HElement::from_monomial(CoordMonomial::from_factors(vec![w(&[X1]), w(&[])]))
        );
        let h = &a(&[X1, X0]) + &a(&[X0]);
        assert_eq!(h_mul(&HElement::one(), &h), h);
        let sum = &a(&[X1]) + &a(&[]);
        assert_eq!(
            h_mul(&sum, &a(&[])),
            &h_mul(&a(&[X1]), &a(&[])) + &h_mul(&a(&[]), &a(&[]))
        );
    }

    #[test]
    fn augmentation_examples() {
        assert_eq!(tilde_theta(X1, &a(&[X0])), a(&[X0, X1]));
        let prod = h_mul(&a(&[X1]), &a(&[]));
        assert_eq!(
            tilde_theta(X1, &prod),
            &h_mul(&a(&[X1, X1]), &a(&[])) + &h_mul(&a(&[X1]), &a(&[X1]))
        );
        assert!(theta(X0, &HElement::one()).is_zero());
        assert!(tilde_theta(X1, &HElement::one()).is_zero());
        assert_eq!(theta(X0, &a(&[X1])), a(&[X0, X1]));
        // repeated factors each get differentiated
        let sq = h_mul(&a(&[X1]), &a(&[X1]));
        assert_eq!(
            tilde_theta(X1, &sq),
            h_mul(&a(&[X1, X1]), &a(&[X1])).scale(&Rational::from_integer(2.into()))
        );
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa(&Word::empty(), &HElement::one()), a(&[]));
        assert_eq!(
            kappa(&Word::empty(), &a(&[X1, X1])),
            h_mul(&a(&[X1, X1]), &a(&[]))
        );
        assert_eq!(kappa(&w(&[X1]), &a(&[X1])), h_mul(&a(&[X1]), &a(&[X1])));
    }

    #[test]
    fn augmentations_commute_on_generators() {
        for eta in crate::word::words_up_to_degree(6) {
            for i in Letter::ALL {
                for j in Letter::ALL {
                    let g = HElement::generator(eta.clone());
                    assert_eq!(theta(j, &tilde_theta(i, &g)), tilde_theta(i, &theta(j, &g)));
                }
            }
        }
    }

    #[test]
    fn display() {
        let h = &(&-&a(&[X0, X1]) + &h_mul(&a(&[X1]), &a(&[X1]))) + &h_mul(&a(&[X1, X1]), &a(&[]));
        assert_eq!(h.to_string(), "-a[x0x1] + a[x1]a[x1] + a[x1x1]a[e]");
        assert_eq!(HElement::one().to_string(), "1");
        assert_eq!(HElement::zero().to_string(), "0");
    }
}
