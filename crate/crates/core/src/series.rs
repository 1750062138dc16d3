//! Noncommutative polynomials and truncated power series over words, with
//! exact rational coefficients.

use std::cmp::Reverse;
use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::word::{Letter, Word};
use crate::Rational;

/// Highest degree up to which a series is known. `None` means the series is
/// an exact polynomial.
pub type Truncation = Option<u32>;

/// The smaller of two truncations; an exact operand never lowers the bound.
pub fn min_truncation(a: Truncation, b: Truncation) -> Truncation {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

fn within(degree: u32, truncation: Truncation) -> bool {
    truncation.is_none_or(|n| degree <= n)
}

/// A finite linear combination of words, possibly marked as the truncation of
/// an infinite series at some degree.
///
/// Zero coefficients are never stored, and every stored word has degree at
/// most the truncation degree, so structural equality is mathematical
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Series {
    terms: BTreeMap<Word, Rational>,
    truncation: Truncation,
}

impl Series {
    pub fn zero() -> Self {
        Series::default()
    }

    /// `1·∅`
    pub fn one() -> Self {
        Series::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        Series::monomial(Rational::one(), w)
    }

    pub fn monomial(coeff: Rational, w: Word) -> Self {
        let mut s = Series::zero();
        s.add_term(w, coeff);
        s
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Word, Rational)>,
    {
        let mut s = Series::zero();
        for (w, c) in terms {
            s.add_term(w, c);
        }
        s
    }

    /// Zero series marked as known up to degree `n`.
    pub fn zero_truncated(n: u32) -> Self {
        Series {
            terms: BTreeMap::new(),
            truncation: Some(n),
        }
    }

    pub fn truncation(&self) -> Truncation {
        self.truncation
    }

    /// Lowers the truncation to `min(current, n)` and drops the words above it.
    pub fn truncated(mut self, n: u32) -> Self {
        self.set_truncation(min_truncation(self.truncation, Some(n)));
        self
    }

    /// Forces the truncation marker, dropping any word above the new bound.
    pub fn with_truncation(mut self, truncation: Truncation) -> Self {
        self.set_truncation(truncation);
        self
    }

    fn set_truncation(&mut self, truncation: Truncation) {
        self.truncation = truncation;
        if let Some(n) = truncation {
            self.terms.retain(|w, _| w.degree() <= n);
        }
    }

    /// Adds `coeff·w`. Words beyond the truncation are ignored.
    pub fn add_term(&mut self, w: Word, coeff: Rational) {
        if coeff.is_zero() || !within(w.degree(), self.truncation) {
            return;
        }
        match self.terms.entry(w) {
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

    /// The coefficient `<c, w>`.
    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn get(&self, w: &Word) -> Option<&Rational> {
        self.terms.get(w)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
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

    /// Highest degree of a stored word.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Word::degree).max()
    }

    /// The homogeneous component of degree `n`, as an exact polynomial.
    pub fn homogeneous_part(&self, n: u32) -> Series {
        Series::from_terms(
            self.terms
                .iter()
                .filter(|(w, _)| w.degree() == n)
                .map(|(w, c)| (w.clone(), c.clone())),
        )
    }

    pub fn scale(&self, k: &Rational) -> Series {
        if k.is_zero() {
            return Series {
                terms: BTreeMap::new(),
                truncation: self.truncation,
            };
        }
        Series {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
            truncation: self.truncation,
        }
    }

    /// `x·c`, exact in the sense that the truncation is shifted by the weight
    /// of `x`.
    pub fn prepend(&self, x: Letter) -> Series {
        Series {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.prepend(x), c.clone()))
                .collect(),
            truncation: self.truncation.map(|n| n + x.weight()),
        }
    }

    /// Words in the order used for rendering: by degree, then longer words
    /// first, then lexicographically.
    pub fn display_order(&self) -> Vec<(&Word, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(w, _)| (w.degree(), Reverse(w.len()), w.letters().to_vec()));
        v
    }
}

impl<'a> Add<&'a Series> for &'a Series {
    type Output = Series;

    fn add(self, rhs: &'a Series) -> Series {
        let mut out = self
            .clone()
            .with_truncation(min_truncation(self.truncation, rhs.truncation));
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Add for Series {
    type Output = Series;

    fn add(self, rhs: Series) -> Series {
        &self + &rhs
    }
}

impl AddAssign<&Series> for Series {
    fn add_assign(&mut self, rhs: &Series) {
        let t = min_truncation(self.truncation, rhs.truncation);
        self.set_truncation(t);
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl<'a> Sub<&'a Series> for &'a Series {
    type Output = Series;

    fn sub(self, rhs: &'a Series) -> Series {
        self + &(-rhs)
    }
}

impl Sub for Series {
    type Output = Series;

    fn sub(self, rhs: Series) -> Series {
        &self - &rhs
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
            truncation: self.truncation,
        }
    }
}

impl Neg for Series {
    type Output = Series;

    fn neg(self) -> Series {
        -&self
    }
}

impl Mul<&Rational> for &Series {
    type Output = Series;

    fn mul(self, k: &Rational) -> Series {
        self.scale(k)
    }
}

/// Writes `coeff*body` with a leading sign handled by the caller's joiner.
pub(crate) fn write_signed_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: &Rational,
    body: &str,
) -> fmt::Result {
    let negative = coeff.is_negative();
    match (first, negative) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let magnitude = coeff.abs();
    if magnitude.is_one() {
        f.write_str(body)
    } else {
        write!(f, "{magnitude}*{body}")
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.display_order();
        if terms.is_empty() {
            f.write_str("0")?;
        }
        for (i, (w, c)) in terms.into_iter().enumerate() {
            write_signed_term(f, i == 0, c, &w.to_string())?;
        }
        if let Some(n) = self.truncation {
            write!(f, " + O(deg>{n})")?;
        }
        Ok(())
    }
}

/// Shuffle product of two words, by the left recursion
/// `xu ⧢ yv = x(u ⧢ yv) + y(xu ⧢ v)`.
pub fn shuffle(u: &Word, v: &Word) -> Series {
    Series::from_terms(
        shuffle_counts(u, v)
            .into_iter()
            .map(|(w, k)| (w, Rational::from_integer(BigInt::from(k)))),
    )
}

/// Multiplicities of the words in `u ⧢ v`.
pub(crate) fn shuffle_counts(u: &Word, v: &Word) -> BTreeMap<Word, u64> {
    let (a, b) = (u.letters(), v.letters());
    let (n, m) = (a.len(), b.len());
    // table[i][j] holds a[i..] ⧢ b[j..]
    let mut table: Vec<Vec<BTreeMap<Vec<Letter>, u64>>> = vec![vec![BTreeMap::new(); m + 1]; n + 1];
    for i in (0..=n).rev() {
        for j in (0..=m).rev() {
            let mut cell = BTreeMap::new();
            if i == n {
                cell.insert(b[j..].to_vec(), 1);
            } else if j == m {
                cell.insert(a[i..].to_vec(), 1);
            } else {
                for (rest, k) in &table[i + 1][j] {
                    let mut w = Vec::with_capacity(rest.len() + 1);
                    w.push(a[i]);
                    w.extend_from_slice(rest);
                    *cell.entry(w).or_insert(0) += k;
                }
                for (rest, k) in &table[i][j + 1] {
                    let mut w = Vec::with_capacity(rest.len() + 1);
                    w.push(b[j]);
                    w.extend_from_slice(rest);
                    *cell.entry(w).or_insert(0) += k;
                }
            }
            table[i][j] = cell;
        }
    }
    std::mem::take(&mut table[0][0])
        .into_iter()
        .map(|(w, k)| (Word::new(w), k))
        .collect()
}

/// Bilinear shuffle product of two series.
pub fn shuffle_series(c: &Series, d: &Series) -> Series {
    let truncation = min_truncation(c.truncation, d.truncation);
    let mut out = Series::zero().with_truncation(truncation);
    for (u, cu) in &c.terms {
        for (v, dv) in &d.terms {
            if !within(u.degree() + v.degree() - 1, truncation) {
                continue;
            }
            let k = cu * dv;
            for (w, mult) in shuffle_counts(u, v) {
                out.add_term(w, &k * Rational::from_integer(BigInt::from(mult)));
            }
        }
    }
    out
}

/// `c ⧢ c ⧢ ... ⧢ c` (`k` factors); `k = 0` gives `1·∅`.
pub fn shuffle_power(c: &Series, k: u32) -> Series {
    let mut out = Series::one();
    for _ in 0..k {
        out = shuffle_series(&out, c);
    }
    out
}

/// Catenation product.
pub fn cat(c: &Series, d: &Series) -> Series {
    let truncation = min_truncation(c.truncation, d.truncation);
    let mut out = Series::zero().with_truncation(truncation);
    for (u, cu) in &c.terms {
        for (v, dv) in &d.terms {
            out.add_term(u.concat(v), cu * dv);
        }
    }
    out
}

/// The series `Σ_k k!·x1^k`, truncated at degree `n`.
pub fn ferfera(n: u32) -> Series {
    let mut out = Series::zero_truncated(n);
    let mut factorial = BigInt::one();
    for k in 0..n as usize {
        if k > 0 {
            factorial *= BigInt::from(k);
        }
        out.add_term(
            Word::power(Letter::X1, k),
            Rational::from_integer(factorial.clone()),
        );
    }
    out
}
