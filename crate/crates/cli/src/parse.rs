//! Text syntax for words, series, elements of `H` and input polynomials.
//!
//! ```text
//! word    := "e" | ("x0" | "x1")+
//! series  := "0" | sign? term (sign term)* ("+" "O(deg>" N ")")?
//! term    := rational "*" word | rational | word
//! h       := "0" | sign? hterm (sign hterm)*
//! hterm   := (rational "*")? ("1" | ("a[" word "]")+)
//! poly    := "0" | sign? pterm (sign pterm)*
//! pterm   := rational ("*" power)? | power
//! power   := "t" ("^" N)?
//! ```
//!
//! Whitespace is allowed between tokens. Errors carry the byte offset of the
//! offending token.

use feedback_hopf::abel::PolyFunction;
use feedback_hopf::hopf::{CoordMonomial, HElement};
use feedback_hopf::{Letter, Rational, Series, Word};
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn error<T>(&self, offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            offset,
            message: message.into(),
        })
    }

    fn unexpected<T>(&mut self, what: &str) -> Result<T, ParseError> {
        self.skip_ws();
        let found = match self.rest().chars().next() {
            Some(c) => format!("found {c:?}"),
            None => "found end of input".to_string(),
        };
        self.error(self.pos, format!("expected {what}, {found}"))
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            self.unexpected(&format!("{token:?}"))
        }
    }

    fn digits(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some((start, &self.src[start..self.pos]))
    }

    /// `12`, `3/4` or `0.25`, without sign.
    fn rational(&mut self) -> Result<Option<Rational>, ParseError> {
        let Some((_, int_part)) = self.digits() else {
            return Ok(None);
        };
        let mut value = Rational::from_integer(int_part.parse::<BigInt>().expect("digits"));
        if self.rest().starts_with('.') {
            self.pos += 1;
            let frac_len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
            if frac_len == 0 {
                return self.error(self.pos, "expected digits after decimal point");
            }
            let frac = &self.src[self.pos..self.pos + frac_len];
            self.pos += frac_len;
            let scale = BigInt::from(10).pow(frac_len as u32);
            value += Rational::new(frac.parse::<BigInt>().expect("digits"), scale);
        } else if self.rest().starts_with('/') {
            self.pos += 1;
            let Some((den_start, den)) = self.digits() else {
                return self.unexpected("denominator");
            };
            let den: BigInt = den.parse().expect("digits");
            if den.is_zero() {
                return self.error(den_start, "zero denominator");
            }
            value = Rational::new(value.to_integer(), den);
        }
        Ok(Some(value))
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        self.skip_ws();
        let rest = self.rest();
        if rest.starts_with('e') && !rest[1..].starts_with(|c: char| c.is_ascii_alphanumeric()) {
            self.pos += 1;
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        loop {
            let rest = self.rest();
            let letter = if rest.starts_with("x0") {
                Letter::X0
            } else if rest.starts_with("x1") {
                Letter::X1
            } else {
                break;
            };
            // "x10" is not a letter followed by garbage, it is garbage
            if rest[2..].starts_with(|c: char| c.is_ascii_digit()) {
                return self.error(self.pos, format!("unknown letter {:?}", token_at(rest)));
            }
            letters.push(letter);
            self.pos += 2;
        }
        if letters.is_empty() {
            let rest = self.rest();
            return if rest.is_empty() {
                self.error(self.pos, "expected a word, found end of input")
            } else {
                self.error(self.pos, format!("unknown letter {:?}", token_at(rest)))
            };
        }
        Ok(Word::new(letters))
    }

    fn sign(&mut self) -> Option<bool> {
        if self.eat("+") {
            Some(false)
        } else if self.eat("-") {
            Some(true)
        } else {
            None
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            self.unexpected("end of input")
        }
    }
}

/// The identifier-like run starting a string, for diagnostics.
fn token_at(s: &str) -> &str {
    let len = s
        .char_indices()
        .find(|(i, c)| *i > 0 && !c.is_ascii_alphanumeric())
        .map_or(s.len(), |(i, _)| i);
    &s[..len.max(s.chars().next().map_or(0, char::len_utf8))]
}

fn apply_sign(negative: bool, c: Rational) -> Rational {
    if negative {
        -c
    } else {
        c
    }
}

pub fn parse_word(s: &str) -> Result<Word, ParseError> {
    let mut cur = Cursor::new(s);
    let w = cur.word()?;
    cur.finish()?;
    Ok(w)
}

pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let mut cur = Cursor::new(s);
    let negative = cur.sign() == Some(true);
    let Some(value) = cur.rational()? else {
        return cur.unexpected("a number");
    };
    cur.finish()?;
    Ok(apply_sign(negative, value))
}

/// Shared driver for signed sums: `term` parses one term after its sign and
/// returns `false` when the remaining input is a series tail instead.
fn signed_sum(
    cur: &mut Cursor<'_>,
    mut term: impl FnMut(&mut Cursor<'_>, bool) -> Result<bool, ParseError>,
) -> Result<(), ParseError> {
    let mut first = true;
    while first || !cur.at_end() {
        let negative = match cur.sign() {
            Some(neg) => neg,
            None if first => false,
            None => return cur.unexpected("\"+\" or \"-\""),
        };
        if !term(cur, negative)? {
            break;
        }
        first = false;
    }
    Ok(())
}

pub fn parse_series(s: &str) -> Result<Series, ParseError> {
    let mut cur = Cursor::new(s);
    if cur.eat("0") && cur.at_end() {
        return Ok(Series::zero());
    }
    cur = Cursor::new(s);
    let mut out = Series::zero();
    let mut truncation = None;
    signed_sum(&mut cur, |cur, negative| {
        cur.skip_ws();
        if cur.rest().starts_with("O(") {
            let at = cur.pos;
            if negative {
                return cur.error(at, "truncation marker must be added, not subtracted");
            }
            cur.expect("O(")?;
            cur.expect("deg")?;
            cur.expect(">")?;
            let Some((_, n)) = cur.digits() else {
                return cur.unexpected("a degree");
            };
            truncation = Some(n.parse::<u32>().map_err(|e| ParseError {
                offset: at,
                message: e.to_string(),
            })?);
            cur.expect(")")?;
            cur.finish()?;
            return Ok(false);
        }
        let coeff = cur.rational()?;
        let word = match coeff {
            Some(_) if cur.eat("*") => cur.word()?,
            Some(_) => Word::empty(),
            None => cur.word()?,
        };
        let coeff = coeff.unwrap_or_else(|| Rational::from_integer(1.into()));
        out.add_term(word, apply_sign(negative, coeff));
        Ok(true)
    })?;
    Ok(out.with_truncation(truncation))
}

fn monomial(cur: &mut Cursor<'_>) -> Result<CoordMonomial, ParseError> {
    if cur.eat("1") {
        return Ok(CoordMonomial::unit());
    }
    let mut factors = Vec::new();
    while cur.peek() == Some('a') {
        cur.expect("a")?;
        cur.expect("[")?;
        factors.push(cur.word()?);
        cur.expect("]")?;
    }
    if factors.is_empty() {
        return cur.unexpected("\"1\" or \"a[\"");
    }
    Ok(CoordMonomial::from_factors(factors))
}

pub fn parse_h_element(s: &str) -> Result<HElement, ParseError> {
    let mut cur = Cursor::new(s);
    if cur.eat("0") && cur.at_end() {
        return Ok(HElement::zero());
    }
    cur = Cursor::new(s);
    let mut out = HElement::zero();
    signed_sum(&mut cur, |cur, negative| {
        let save = cur.pos;
        let coeff = match cur.rational()? {
            Some(c) if cur.eat("*") => c,
            // a bare "1" is the unit monomial
            Some(_) => {
                cur.pos = save;
                Rational::from_integer(1.into())
            }
            None => Rational::from_integer(1.into()),
        };
        let m = monomial(cur)?;
        out.add_term(m, apply_sign(negative, coeff));
        Ok(true)
    })?;
    Ok(out)
}

pub fn parse_poly(s: &str) -> Result<PolyFunction, ParseError> {
    let mut cur = Cursor::new(s);
    let mut coeffs: Vec<Rational> = Vec::new();
    signed_sum(&mut cur, |cur, negative| {
        let coeff = cur.rational()?;
        let has_power = match coeff {
            Some(_) => cur.eat("*"),
            None => true,
        };
        let k = if has_power {
            cur.expect("t")?;
            if cur.eat("^") {
                let Some((at, k)) = cur.digits() else {
                    return cur.unexpected("an exponent");
                };
                k.parse::<usize>().map_err(|e| ParseError {
                    offset: at,
                    message: e.to_string(),
                })?
            } else {
                1
            }
        } else {
            0
        };
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Rational::zero());
        }
        coeffs[k] += apply_sign(
            negative,
            coeff.unwrap_or_else(|| Rational::from_integer(1.into())),
        );
        Ok(true)
    })?;
    Ok(PolyFunction::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::{X0, X1};

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn words() {
        assert_eq!(parse_word("x1x0x1").unwrap(), Word::new(vec![X1, X0, X1]));
        assert_eq!(parse_word("e").unwrap(), Word::empty());
        assert_eq!(parse_word(" x0 ").unwrap(), Word::letter(X0));
        assert_eq!(parse_word("x2").unwrap_err().offset, 0);
        assert_eq!(parse_word("x1x2").unwrap_err().offset, 2);
        assert_eq!(parse_word("x1e").unwrap_err().offset, 2);
        assert_eq!(parse_word("x10").unwrap_err().offset, 0);
        assert_eq!(parse_word("").unwrap_err().offset, 0);
    }

    #[test]
    fn series() {
        let s = parse_series("2*x1x1 + x0").unwrap();
        assert_eq!(s.coeff(&Word::new(vec![X1, X1])), q(2, 1));
        assert_eq!(s.coeff(&Word::letter(X0)), q(1, 1));
        assert_eq!(s.len(), 2);
        assert_eq!(
            parse_series("-x1").unwrap().coeff(&Word::letter(X1)),
            q(-1, 1)
        );
        let e = parse_series("1/0*x1").unwrap_err();
        assert_eq!(e.message, "zero denominator");
        assert_eq!(e.offset, 2);
        assert_eq!(
            parse_series("3/2*x0 - 5").unwrap().coeff(&Word::empty()),
            q(-5, 1)
        );
        assert_eq!(parse_series("0").unwrap(), Series::zero());
        assert_eq!(
            parse_series("0 + O(deg>4)").unwrap(),
            Series::zero_truncated(4)
        );
        let t = parse_series("x1 + O(deg>6)").unwrap();
        assert_eq!(t.truncation(), Some(6));
        assert_eq!(parse_series("x1 x0").unwrap_err().offset, 3);
        assert_eq!(parse_series("x1 +").unwrap_err().offset, 4);
        assert!(parse_series("x1 - O(deg>3)").is_err());
        assert_eq!(
            parse_series("0.5*e").unwrap().coeff(&Word::empty()),
            q(1, 2)
        );
    }

    #[test]
    fn h_elements() {
        let h = parse_h_element("-a[x0] + a[x1]a[e]").unwrap();
        assert_eq!(h.to_string(), "-a[x0] + a[x1]a[e]");
        assert_eq!(parse_h_element("1").unwrap(), HElement::one());
        assert_eq!(
            parse_h_element("3*1 - 1").unwrap(),
            HElement::one().scale(&q(2, 1))
        );
        assert_eq!(parse_h_element("a[x1] b").unwrap_err().offset, 6);
        assert_eq!(parse_h_element("a[x3]").unwrap_err().offset, 2);
    }

    #[test]
    fn polys() {
        let p = parse_poly("1 + 2*t - 1/3*t^2").unwrap();
        assert_eq!(p.coeffs(), &[q(1, 1), q(2, 1), q(-1, 3)]);
        assert_eq!(parse_poly("-t").unwrap().to_string(), "-t");
        assert_eq!(parse_poly("0").unwrap(), PolyFunction::zero());
        assert_eq!(parse_poly("t^3 + t^3").unwrap().coeffs().len(), 4);
        assert_eq!(parse_poly("2*s").unwrap_err().offset, 2);
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("0.1").unwrap(), q(1, 10));
        assert_eq!(parse_rational("-3/4").unwrap(), q(-3, 4));
        assert!(parse_rational("1.").is_err());
        assert!(parse_rational("abc").is_err());
    }
}
