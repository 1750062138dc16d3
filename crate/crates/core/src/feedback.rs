//! Antipodes of the output feedback Hopf algebra, characters, the composition
//! products and the output feedback group.
//!
//! A series `c` stands for the group element `c_δ = δ + c`; the `δ` part is
//! never stored. The group product is `c_δ ∘ d_δ = δ + d + c ∘̃ d` and the
//! inverse is obtained by evaluating the antipode: `<c^{∘-1}, η> = S a_η (c)`.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::hopf::{h_mul, kappa, reduced_coproduct, tilde_theta, CoordMonomial, HElement};
use crate::memo::Memo;
use crate::series::{shuffle_counts, Series};
use crate::word::{words_up_to_degree, Letter, Word};
use crate::{Error, Rational};

static ANTIPODE_LEFT: LazyLock<Memo<Word, HElement>> = LazyLock::new(Memo::new);
static ANTIPODE_RIGHT: LazyLock<Memo<Word, HElement>> = LazyLock::new(Memo::new);

/// A character of `H`, given by the series `c` of the group element `δ + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character(pub Series);

impl Character {
    pub fn new(c: Series) -> Self {
        Character(c)
    }

    pub fn series(&self) -> &Series {
        &self.0
    }

    /// The value on a monomial: the product of the coefficients of its factors.
    pub fn on_monomial(&self, m: &CoordMonomial) -> Rational {
        let mut acc = Rational::one();
        for w in m.factors() {
            match self.0.get(w) {
                Some(c) => acc *= c,
                None => return Rational::zero(),
            }
        }
        acc
    }
}

impl From<Series> for Character {
    fn from(c: Series) -> Self {
        Character(c)
    }
}

/// Evaluates `h` on the character `c`. Linear in `h`, multiplicative on
/// monomials, and `𝟏 ↦ 1`. Words the series does not store (including those
/// above its truncation) read as zero.
pub fn evaluate(h: &HElement, c: &Character) -> Rational {
    h.terms()
        .fold(Rational::zero(), |acc, (m, k)| acc + k * c.on_monomial(m))
}

/// `S a_η = −a_η − Σ' (S a_{η(1)}) a_{η(2)}`.
pub fn antipode_left(eta: &Word) -> Arc<HElement> {
    ANTIPODE_LEFT.get_or_compute(eta, || {
        let mut out = -HElement::generator(eta.clone());
        for (l, r, c) in reduced_coproduct(eta).terms() {
            let w = l.as_generator().expect("left slot of Δ' is a generator");
            let s = antipode_left(w);
            let term = h_mul(&s, &HElement::from_monomial(r.clone()));
            out += &term.scale(&-c);
        }
        out
    })
}

/// `S a_η = −a_η − Σ' a_{η(1)} (S a_{η(2)})`, with `S` applied
/// multiplicatively to the right slot.
pub fn antipode_right(eta: &Word) -> Arc<HElement> {
    ANTIPODE_RIGHT.get_or_compute(eta, || {
        let mut out = -HElement::generator(eta.clone());
        for (l, r, c) in reduced_coproduct(eta).terms() {
            let s = antipode_monomial(r, antipode_right);
            let term = h_mul(&HElement::from_monomial(l.clone()), &s);
            out += &term.scale(&-c);
        }
        out
    })
}

fn antipode_monomial(m: &CoordMonomial, gen: impl Fn(&Word) -> Arc<HElement>) -> HElement {
    m.factors()
        .iter()
        .fold(HElement::one(), |acc, w| h_mul(&acc, &gen(w)))
}

/// The antipode on all of `H`, as the algebra morphism extending
/// [`antipode_left`]; `S 𝟏 = 𝟏`.
pub fn antipode(h: &HElement) -> HElement {
    h.map_monomials(|m| antipode_monomial(m, antipode_left))
}

/// `θ̃'_1 = −θ̃_1` and `θ̃'_0 = −θ̃_0 + κ_∅ θ̃_1`, as derivations on `H`.
pub fn theta_prime(x: Letter, h: &HElement) -> HElement {
    match x {
        Letter::X1 => -tilde_theta(Letter::X1, h),
        Letter::X0 => {
            &kappa(&Word::empty(), &tilde_theta(Letter::X1, h)) - &tilde_theta(Letter::X0, h)
        }
    }
}

/// `S a_η = (−1)^{|η|−1} θ̃'_{i_l} ∘ ··· ∘ θ̃'_{i_1} (a_∅)`.
pub fn antipode_direct(eta: &Word) -> Result<HElement, Error> {
    if eta.is_empty() {
        return Err(Error::EmptyWord("antipode_direct"));
    }
    let h = eta
        .letters()
        .iter()
        .fold(HElement::generator(Word::empty()), |acc, &x| {
            theta_prime(x, &acc)
        });
    Ok(if eta.len() % 2 == 1 { h } else { -h })
}

/// Effective truncation for an output requested to degree `n`.
fn effective(n: u32, inputs: &[&Series]) -> u32 {
    inputs
        .iter()
        .filter_map(|s| s.truncation())
        .fold(n, u32::min)
}

/// `d ⧢ e` restricted to output degree `<= max_degree`, as an exact polynomial.
fn shuffle_bounded(d: &Series, e: &Series, max_degree: u32) -> Series {
    let mut out = Series::zero();
    for (u, cu) in d.terms() {
        for (v, cv) in e.terms() {
            if u.degree() + v.degree() - 1 > max_degree {
                continue;
            }
            let k = cu * cv;
            for (w, mult) in shuffle_counts(u, v) {
                out.add_term(w, &k * Rational::from_integer(BigInt::from(mult)));
            }
        }
    }
    out
}

/// Sum over the words of `c` of `<c, η> op(η)(1)`, where `op` is given on
/// letters and extended to words by `op(x η) = op(x) ∘ op(η)`. Intermediate
/// results are cut at degree `n`, which is exact because every letter
/// operator raises the degree.
fn word_operator_sum(c: &Series, n: u32, letter_op: impl Fn(Letter, &Series) -> Series) -> Series {
    let mut images: HashMap<Word, Series> = HashMap::new();
    images.insert(Word::empty(), Series::one());
    let mut out = Series::zero();
    let mut words: Vec<&Word> = c
        .terms()
        .map(|(w, _)| w)
        .filter(|w| w.degree() <= n)
        .collect();
    words.sort();
    for w in words {
        // suffixes are shorter, so shortest-first order fills them in as needed
        let image = image_of(w, &mut images, &letter_op, n);
        out += &image.scale(&c.coeff(w));
    }
    out.with_truncation(Some(n))
}

fn image_of(
    w: &Word,
    images: &mut HashMap<Word, Series>,
    letter_op: &impl Fn(Letter, &Series) -> Series,
    n: u32,
) -> Series {
    if let Some(s) = images.get(w) {
        return s.clone();
    }
    let (x, rest) = w.split_first().expect("empty word is seeded");
    let inner = image_of(&rest, images, letter_op, n);
    let mut image = letter_op(x, &inner);
    image = Series::from_terms(
        image
            .terms()
            .filter(|(v, _)| v.degree() <= n)
            .map(|(v, k)| (v.clone(), k.clone())),
    );
    images.insert(w.clone(), image.clone());
    image
}

/// Composition product `c ∘ d = Σ <c, η> ψ_d(η)(1)` to degree `n`, with
/// `ψ_d(x0)(e) = x0 e` and `ψ_d(x1)(e) = x0 (d ⧢ e)`.
pub fn compose(c: &Series, d: &Series, n: u32) -> Series {
    let n = effective(n, &[c, d]);
    word_operator_sum(c, n, |x, e| match x {
        Letter::X0 => e.prepend(Letter::X0),
        Letter::X1 => shuffle_bounded(d, e, n.saturating_sub(2)).prepend(Letter::X0),
    })
}

/// Modified composition `c ∘̃ d = Σ <c, η> φ_d(η)(1)` to degree `n`, with
/// `φ_d(x0)(e) = x0 e` and `φ_d(x1)(e) = x1 e + x0 (d ⧢ e)`.
pub fn mod_compose(c: &Series, d: &Series, n: u32) -> Series {
    let n = effective(n, &[c, d]);
    word_operator_sum(c, n, |x, e| match x {
        Letter::X0 => e.prepend(Letter::X0),
        Letter::X1 => {
            &e.prepend(Letter::X1) + &shuffle_bounded(d, e, n.saturating_sub(2)).prepend(Letter::X0)
        }
    })
}

/// Group product `c_δ ∘ d_δ = δ + d + c ∘̃ d`, returned without its `δ`.
pub fn group_product(c: &Series, d: &Series, n: u32) -> Series {
    let n = effective(n, &[c, d]);
    &d.clone().truncated(n) + &mod_compose(c, d, n)
}

/// Feedback group inverse `c^{∘-1}` to degree `n`, by evaluating the antipode
/// on `c`: `<c^{∘-1}, η> = S a_η (c)`.
pub fn group_inverse(c: &Series, n: u32) -> Series {
    let n = effective(n, &[c]);
    let ch = Character::new(c.clone());
    let mut out = Series::zero_truncated(n);
    for w in words_up_to_degree(n) {
        let value = evaluate(&antipode_left(&w), &ch);
        out.add_term(w, value);
    }
    out
}

/// Feedback group inverse by fixed-point iteration: the unique `d` with
/// `d + c ∘̃ d = 0`, reached from `d = 0` by `d ← −(c ∘̃ d)`. Each step fixes at
/// least one more degree, so `n` steps suffice.
pub fn group_inverse_fixpoint(c: &Series, n: u32) -> Series {
    let n = effective(n, &[c]);
    let mut d = Series::zero_truncated(n);
    for _ in 0..=n {
        let next = -mod_compose(c, &d, n);
        if next == d {
            break;
        }
        d = next;
    }
    d
}

/// Feedback product `c @ d = c ∘̃ ((−d) ∘ c)^{∘-1}`.
pub fn feedback(c: &Series, d: &Series, n: u32) -> Series {
    let loop_series = compose(&-d, c, n);
    mod_compose(c, &group_inverse(&loop_series, n), n)
}

/// Unity feedback `c @ δ = (−c)^{∘-1}`.
pub fn unity_feedback(c: &Series, n: u32) -> Series {
    group_inverse(&-c, n)
}
