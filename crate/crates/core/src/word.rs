//! Words over the two-letter alphabet `{x0, x1}` and their grading.
//!
//! The grading used throughout the crate gives `x0` weight two and `x1`
//! weight one, offset by one so that the empty word has degree 1:
//! `deg(w) = 2|w|_{x0} + |w|_{x1} + 1`.

use std::cmp::Ordering;
use std::fmt;

/// A letter of the alphabet. `X0` pairs with the input `u0` (alpha) and `X1`
/// with `u1` (beta).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X0,
    X1,
}

impl Letter {
    pub const ALL: [Letter; 2] = [Letter::X0, Letter::X1];

    /// Contribution of the letter to the degree of a word.
    pub fn weight(self) -> u32 {
        match self {
            Letter::X0 => 2,
            Letter::X1 => 1,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Letter::X0 => 0,
            Letter::X1 => 1,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::X0 => f.write_str("x0"),
            Letter::X1 => f.write_str("x1"),
        }
    }
}

/// A finite word over `{x0, x1}`.
///
/// Words are totally ordered by length first and then lexicographically with
/// `x0 < x1`. This is the canonical order used for every map keyed by words.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letter(x: Letter) -> Self {
        Word(vec![x])
    }

    /// `x^k`, the word made of `k` copies of one letter.
    pub fn power(x: Letter, k: usize) -> Self {
        Word(vec![x; k])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, x: Letter) -> usize {
        self.0.iter().filter(|&&l| l == x).count()
    }

    pub fn degree(&self) -> u32 {
        1 + self.0.iter().map(|l| l.weight()).sum::<u32>()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `x w`
    pub fn prepend(&self, x: Letter) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.push(x);
        letters.extend_from_slice(&self.0);
        Word(letters)
    }

    /// `w x`
    pub fn append(&self, x: Letter) -> Word {
        let mut letters = self.0.clone();
        letters.push(x);
        Word(letters)
    }

    /// First `len` letters.
    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    /// Splits off the first letter: `x v -> (x, v)`.
    pub fn split_first(&self) -> Option<(Letter, Word)> {
        self.0
            .split_first()
            .map(|(&x, rest)| (x, Word(rest.to_vec())))
    }

    /// Splits off the last letter: `v x -> (v, x)`.
    pub fn split_last(&self) -> Option<(Word, Letter)> {
        self.0
            .split_last()
            .map(|(&x, rest)| (Word(rest.to_vec()), x))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Left shift `x^{-1}(w)`: strips a leading `x`, `None` if `w` does not start
/// with `x`.
pub fn left_shift(x: Letter, w: &Word) -> Option<Word> {
    match w.split_first() {
        Some((first, rest)) if first == x => Some(rest),
        _ => None,
    }
}

/// Right shift: strips a trailing `x`, `None` if `w` does not end with `x`.
pub fn right_shift(x: Letter, w: &Word) -> Option<Word> {
    match w.split_last() {
        Some((rest, last)) if last == x => Some(rest),
        _ => None,
    }
}

/// All words of degree exactly `n`, in canonical order.
///
/// Built by appending `x1` to the words of degree `n - 1` and `x0` to the
/// words of degree `n - 2`.
pub fn words_of_degree(n: u32) -> Vec<Word> {
    if n == 0 {
        return Vec::new();
    }
    let mut table: Vec<Vec<Word>> = vec![Vec::new(), vec![Word::empty()]];
    for d in 2..=n as usize {
        let mut level: Vec<Word> = table[d - 1].iter().map(|w| w.append(Letter::X1)).collect();
        if d >= 3 {
            level.extend(table[d - 2].iter().map(|w| w.append(Letter::X0)));
        }
        level.sort();
        table.push(level);
    }
    table.swap_remove(n as usize)
}

/// All words of degree `1..=n`, grouped by degree and in canonical order
/// within each degree.
pub fn words_up_to_degree(n: u32) -> Vec<Word> {
    (1..=n).flat_map(words_of_degree).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::{X0, X1};

    fn w(letters: &[Letter]) -> Word {
        Word::new(letters.to_vec())
    }

    #[test]
    fn degree_examples() {
        assert_eq!(Word::empty().degree(), 1);
        assert_eq!(w(&[X1, X0, X1]).degree(), 5);
        assert_eq!(w(&[X0, X0, X1]).degree(), 6);
    }

    #[test]
    fn enumeration_small_degrees() {
        assert_eq!(words_of_degree(0), Vec::<Word>::new());
        assert_eq!(words_of_degree(1), vec![Word::empty()]);
        assert_eq!(
            words_of_degree(4),
            vec![w(&[X0, X1]), w(&[X1, X0]), w(&[X1, X1, X1])]
        );
        let six: Vec<String> = words_of_degree(6).iter().map(|w| w.to_string()).collect();
        assert_eq!(
            six,
            [
                "x0x0x1",
                "x0x1x0",
                "x1x0x0",
                "x0x1x1x1",
                "x1x0x1x1",
                "x1x1x0x1",
                "x1x1x1x0",
                "x1x1x1x1x1"
            ]
        );
    }

    fn brute_force(n: u32) -> Vec<Word> {
        // every word of degree n has at most n - 1 letters
        let mut out = Vec::new();
        for len in 0..n as usize {
            for bits in 0..(1u32 << len) {
                let word = Word::new(
                    (0..len)
                        .map(|i| {
                            if bits >> (len - 1 - i) & 1 == 1 {
                                X1
                            } else {
                                X0
                            }
                        })
                        .collect(),
                );
                if word.degree() == n {
                    out.push(word);
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 1..=12 {
            let words = words_of_degree(n);
            assert_eq!(words, brute_force(n), "degree {n}");
            let mut dedup = words.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), words.len());
        }
    }

    #[test]
    fn shifts() {
        assert_eq!(left_shift(X1, &w(&[X1, X0])), Some(w(&[X0])));
        assert_eq!(left_shift(X1, &w(&[X0, X1])), None);
        assert_eq!(left_shift(X0, &Word::empty()), None);
        assert_eq!(right_shift(X1, &w(&[X0, X1])), Some(w(&[X0])));
        assert_eq!(right_shift(X0, &w(&[X0, X1])), None);
        assert_eq!(right_shift(X1, &w(&[X1])), Some(Word::empty()));
    }

    #[test]
    fn canonical_order() {
        assert!(w(&[X1]) < w(&[X0, X0]));
        assert!(w(&[X0, X1]) < w(&[X1, X0]));
        assert!(Word::empty() < w(&[X0]));
        assert_eq!(Word::empty().to_string(), "e");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn word() -> impl Strategy<Value = Word> {
            proptest::collection::vec(prop_oneof![Just(X0), Just(X1)], 0..10).prop_map(Word::new)
        }

        proptest! {
            #[test]
            fn degree_of_concat(u in word(), v in word()) {
                let uv = u.concat(&v);
                prop_assert_eq!(uv.degree(), u.degree() + v.degree() - 1);
                for x in Letter::ALL {
                    prop_assert_eq!(uv.count(x), u.count(x) + v.count(x));
                }
            }

            #[test]
            fn concat_associative(u in word(), v in word(), t in word()) {
                prop_assert_eq!(u.concat(&v).concat(&t), u.concat(&v.concat(&t)));
                prop_assert_eq!(u.concat(&Word::empty()), u.clone());
            }

            #[test]
            fn shifts_undo_concatenation(v in word(), x in prop_oneof![Just(X0), Just(X1)]) {
                prop_assert_eq!(right_shift(x, &v.append(x)), Some(v.clone()));
                prop_assert_eq!(left_shift(x, &v.prepend(x)), Some(v));
            }
        }
    }
}
