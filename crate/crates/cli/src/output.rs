//! JSON shapes for command results. Rationals are `{"num": "..", "den": ".."}`
//! with decimal strings; floats are numbers with 17 significant digits.

use feedback_hopf::abel::PolyFunction;
use feedback_hopf::hopf::HElement;
use feedback_hopf::verify::CheckResult;
use feedback_hopf::{Rational, Series};
use serde::Serialize;
use serde_json::value::RawValue;

#[derive(Debug, Serialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for RationalJson {
    fn from(r: &Rational) -> Self {
        RationalJson {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SeriesTerm {
    pub word: String,
    pub coeff: RationalJson,
}

#[derive(Debug, Serialize)]
pub struct SeriesJson {
    pub truncation: Option<u32>,
    pub terms: Vec<SeriesTerm>,
}

impl From<&Series> for SeriesJson {
    fn from(s: &Series) -> Self {
        SeriesJson {
            truncation: s.truncation(),
            terms: s
                .display_order()
                .into_iter()
                .map(|(w, c)| SeriesTerm {
                    word: w.to_string(),
                    coeff: c.into(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct HTerm {
    pub factors: Vec<String>,
    pub coeff: RationalJson,
}

#[derive(Debug, Serialize)]
pub struct HElementJson {
    pub terms: Vec<HTerm>,
}

impl From<&HElement> for HElementJson {
    fn from(h: &HElement) -> Self {
        HElementJson {
            terms: h
                .terms()
                .map(|(m, c)| HTerm {
                    factors: m.factors().iter().rev().map(|w| w.to_string()).collect(),
                    coeff: c.into(),
                })
                .collect(),
        }
    }
}

/// Coefficients lowest degree first.
pub fn poly_json(p: &PolyFunction) -> Vec<RationalJson> {
    p.coeffs().iter().map(RationalJson::from).collect()
}

/// A float rendered with 17 significant digits, as a JSON number.
pub fn float_json(x: f64) -> Box<RawValue> {
    let text = if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    };
    RawValue::from_string(text).expect("valid JSON number")
}

#[derive(Debug, Serialize)]
pub struct CheckJson {
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub detail: Option<String>,
}

impl From<&CheckResult> for CheckJson {
    fn from(c: &CheckResult) -> Self {
        CheckJson {
            name: c.name,
            passed: c.passed,
            cases: c.cases,
            detail: c.detail.clone(),
        }
    }
}

/// Result payload, tagged by kind.
#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Series {
        series: SeriesJson,
    },
    Devlin {
        n: u32,
        method: String,
        series: SeriesJson,
    },
    Antipode {
        word: String,
        method: String,
        element: HElementJson,
    },
    Verify {
        max_degree: u32,
        seed: u64,
        passed: bool,
        checks: Vec<CheckJson>,
    },
    AbelSim {
        t: RationalJson,
        step: Box<RawValue>,
        z0: Box<RawValue>,
        z: Box<RawValue>,
        series: Option<Box<RawValue>>,
    },
    ReturnMap {
        omega: RationalJson,
        alpha: Vec<RationalJson>,
        beta: Vec<RationalJson>,
        coefficients: Vec<RationalJson>,
        sum: RationalJson,
    },
}

#[derive(Debug, Serialize)]
pub struct Envelope<'a> {
    pub command: &'a str,
    pub max_degree: u32,
    pub result: Payload,
}
