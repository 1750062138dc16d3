//! The coproducts of the output feedback Hopf algebra.
//!
//! * `deshuffle`: the deshuffling coproduct on coordinate functions, dual to
//!   the shuffle product of words.
//! * `tilde_coproduct`: `Δ̃ a_η ∈ V ⊗ H`, dual to the modified composition
//!   `a_η(c ∘̃ d) = Σ a_{η(1)}(c) a_{η(2)}(d)`, computed by induction on the
//!   first letter of `η`.
//! * `full_coproduct` / `reduced_coproduct`: `Δ a_η = Δ̃ a_η + 𝟏 ⊗ a_η` and
//!   `Δ' a_η = Δ a_η − 𝟏 ⊗ a_η − a_η ⊗ 𝟏`.
//! * `big_theta_coproduct`: the same full coproduct, built instead by
//!   appending letters with the operators `Θ̃_0`, `Θ̃_1`.
//!
//! Per-word results are memoized in process-wide caches.

use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::algebra::{kappa, tilde_theta, CoordMonomial, HElement, TensorElement};
use crate::memo::Memo;
use crate::series::shuffle_counts;
use crate::word::{Letter, Word};
use crate::{Error, Rational};

static DESHUFFLE: LazyLock<Memo<Word, TensorElement>> = LazyLock::new(Memo::new);
static TILDE: LazyLock<Memo<Word, TensorElement>> = LazyLock::new(Memo::new);

fn gen(w: Word) -> CoordMonomial {
    CoordMonomial::generator(w)
}

fn unit() -> CoordMonomial {
    CoordMonomial::unit()
}

/// Applies a word-level map to a monomial that must be a single generator.
/// Both slots of a deshuffle term, and the left slot of a `Δ̃` term, are
/// generators.
fn on_generator(m: &CoordMonomial, f: impl Fn(&Word) -> Word) -> HElement {
    let w = m
        .as_generator()
        .expect("slot of a deshuffle or left slot of Δ̃ is a single generator");
    HElement::generator(f(w))
}

/// Deshuffling coproduct `Δ_⧢ a_η`, by the right-augmentation recursion
/// `Δ_⧢ ∘ θ̃_k = (θ̃_k ⊗ id + id ⊗ θ̃_k) ∘ Δ_⧢` from `Δ_⧢ a_∅ = a_∅ ⊗ a_∅`.
pub fn deshuffle(eta: &Word) -> Arc<TensorElement> {
    DESHUFFLE.get_or_compute(eta, || match eta.split_last() {
        None => TensorElement::pure(gen(Word::empty()), gen(Word::empty())),
        Some((prefix, x)) => {
            let prev = deshuffle(&prefix);
            let keep = |m: &CoordMonomial| HElement::from_monomial(m.clone());
            let append = |m: &CoordMonomial| on_generator(m, |w| w.append(x));
            let mut out = prev.map(append, keep);
            out += &prev.map(keep, append);
            out
        }
    })
}

/// `Σ_{ξ,ν} <ξ ⧢ ν, η> a_ξ ⊗ a_ν`, computed from the shuffle product of words
/// by trying every pair with matching letter counts.
pub fn deshuffle_by_duality(eta: &Word) -> TensorElement {
    let n = eta.len();
    let mut out = TensorElement::zero();
    for left_len in 0..=n {
        for xi in words_of_length(left_len) {
            for nu in words_of_length(n - left_len) {
                let mult = shuffle_counts(&xi, &nu).get(eta).copied().unwrap_or(0);
                if mult > 0 {
                    out.add_term(
                        gen(xi.clone()),
                        gen(nu.clone()),
                        Rational::from_integer(BigInt::from(mult)),
                    );
                }
            }
        }
    }
    out
}

fn words_of_length(len: usize) -> Vec<Word> {
    (0..1u64 << len)
        .map(|bits| {
            Word::new(
                (0..len)
                    .map(|i| {
                        if bits >> i & 1 == 1 {
                            Letter::X1
                        } else {
                            Letter::X0
                        }
                    })
                    .collect(),
            )
        })
        .collect()
}

/// `Δ̃ a_η`, by induction on the first letter:
///
/// * `Δ̃ a_∅ = a_∅ ⊗ 𝟏`
/// * `Δ̃ a_{x1 ν} = (θ_1 ⊗ id) Δ̃ a_ν`
/// * `Δ̃ a_{x0 ν} = (θ_0 ⊗ id) Δ̃ a_ν + (θ_1 ⊗ μ)(Δ̃ ⊗ id) Δ_⧢ a_ν`
///
/// Every left slot is a single coordinate function.
pub fn tilde_coproduct(eta: &Word) -> Arc<TensorElement> {
    TILDE.get_or_compute(eta, || match eta.split_first() {
        None => TensorElement::pure(gen(Word::empty()), unit()),
        Some((x, rest)) => {
            let prev = tilde_coproduct(&rest);
            let mut out = prev.map_left(|m| on_generator(m, |w| w.prepend(x)));
            if x == Letter::X0 {
                for (l, r, c) in deshuffle(&rest).terms() {
                    let inner = tilde_coproduct(l.as_generator().expect("deshuffle slot"));
                    for (l2, r2, c2) in inner.terms() {
                        let left = l2
                            .as_generator()
                            .expect("left slot of Δ̃")
                            .prepend(Letter::X1);
                        out.add_term(gen(left), r2.mul(r), c * c2);
                    }
                }
            }
            out
        }
    })
}

/// `Δ a_η = Δ̃ a_η + 𝟏 ⊗ a_η`.
pub fn full_coproduct(eta: &Word) -> TensorElement {
    let mut out = (*tilde_coproduct(eta)).clone();
    out.add_term(unit(), gen(eta.clone()), Rational::one());
    out
}

/// `Δ' a_η = Δ a_η − 𝟏 ⊗ a_η − a_η ⊗ 𝟏`.
pub fn reduced_coproduct(eta: &Word) -> TensorElement {
    let mut out = (*tilde_coproduct(eta)).clone();
    out.add_term(gen(eta.clone()), unit(), -Rational::one());
    out
}

/// `Δ` on a monomial, extended multiplicatively; `Δ 𝟏 = 𝟏 ⊗ 𝟏`.
pub fn coproduct_monomial(m: &CoordMonomial) -> TensorElement {
    m.factors()
        .iter()
        .fold(TensorElement::pure(unit(), unit()), |acc, w| {
            acc.tensor_mul(&full_coproduct(w))
        })
}

/// `Δ` extended linearly and multiplicatively to all of `H`.
pub fn coproduct(h: &HElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (m, c) in h.terms() {
        out += &coproduct_monomial(m).scale(c);
    }
    out
}

/// Elements of `H ⊗ H ⊗ H`, used to compare the two iterated coproducts.
pub type TripleTensor = BTreeMap<(CoordMonomial, CoordMonomial, CoordMonomial), Rational>;

fn add_triple(
    out: &mut TripleTensor,
    key: (CoordMonomial, CoordMonomial, CoordMonomial),
    c: Rational,
) {
    let entry = out.entry(key).or_insert_with(Rational::zero);
    *entry += c;
}

/// `(Δ ⊗ id) t`
pub fn iterated_left(t: &TensorElement) -> TripleTensor {
    let mut out = TripleTensor::new();
    for (l, r, c) in t.terms() {
        for (a, b, c2) in coproduct_monomial(l).terms() {
            add_triple(&mut out, (a.clone(), b.clone(), r.clone()), c * c2);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `(id ⊗ Δ) t`
pub fn iterated_right(t: &TensorElement) -> TripleTensor {
    let mut out = TripleTensor::new();
    for (l, r, c) in t.terms() {
        for (a, b, c2) in coproduct_monomial(r).terms() {
            add_triple(&mut out, (l.clone(), a.clone(), b.clone()), c * c2);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `Θ̃_x`: `θ̃_x ⊗ id + id ⊗ θ̃_x`, plus `θ̃_1 ⊗ κ_∅` when `x = x0`.
pub fn big_theta(x: Letter, t: &TensorElement) -> TensorElement {
    let keep = |m: &CoordMonomial| HElement::from_monomial(m.clone());
    let aug = |m: &CoordMonomial| tilde_theta(x, &HElement::from_monomial(m.clone()));
    let mut out = t.map(aug, keep);
    out += &t.map(keep, aug);
    if x == Letter::X0 {
        out += &t.map(
            |m| tilde_theta(Letter::X1, &HElement::from_monomial(m.clone())),
            |m| kappa(&Word::empty(), &HElement::from_monomial(m.clone())),
        );
    }
    out
}

/// `Δ a_η = Θ̃_{i_l} ∘ ··· ∘ Θ̃_{i_1} (Δ a_∅)` for `η = x_{i_1}···x_{i_l}`.
pub fn big_theta_coproduct(eta: &Word) -> Result<TensorElement, Error> {
    if eta.is_empty() {
        return Err(Error::EmptyWord("big_theta_coproduct"));
    }
    let start = full_coproduct(&Word::empty());
    Ok(eta
        .letters()
        .iter()
        .fold(start, |acc, &x| big_theta(x, &acc)))
}
