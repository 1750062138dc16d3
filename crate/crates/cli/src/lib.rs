//! The `abelhopf` command line: argument definitions, dispatch and rendering.

pub mod output;
pub mod parse;

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use feedback_hopf::abel::{fliess_eval, return_map_coeffs, AbelSolver, InputPair};
use feedback_hopf::devlin::{devlin_antipode, devlin_closed, devlin_recursive, lie_coeff};
use feedback_hopf::feedback::{
    antipode_direct, antipode_left, antipode_right, compose, feedback, group_inverse,
    group_inverse_fixpoint, mod_compose, unity_feedback,
};
use feedback_hopf::series::{ferfera, shuffle_series};
use feedback_hopf::verify::run_all;
use feedback_hopf::word::words_of_degree;
use feedback_hopf::{Rational, Series};
use num_traits::ToPrimitive;
use thiserror::Error;

use output::{float_json, poly_json, Envelope, Payload, RationalJson};
use parse::{parse_poly, parse_rational, parse_series, parse_word, ParseError};

#[derive(Debug, Parser)]
#[command(
    name = "abelhopf",
    version,
    about = "Output feedback Hopf algebra, Devlin polynomials and the Abel equation"
)]
pub struct Cli {
    /// Truncation degree for series computations and the range of `verify`.
    #[arg(
        long,
        global = true,
        env = "ABELHOPF_MAX_DEGREE",
        default_value_t = 8,
        value_parser = clap::value_parser!(u32).range(1..)
    )]
    pub max_degree: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for the randomized verification suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DevlinMethod {
    Recursive,
    Closed,
    Antipode,
    Lie,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AntipodeMethod {
    Left,
    Right,
    Direct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InverseMethod {
    Antipode,
    Fixpoint,
}

/// Series operands accept the text syntax (`2*x1x1 - 1/3*x0 + e`) or the
/// keywords `ferfera` and `-ferfera`, which expand to the Ferfera series
/// truncated at `--max-degree`.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Shuffle product of two series.
    Shuffle {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Devlin polynomial a_n.
    Devlin {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum, default_value_t = DevlinMethod::Recursive)]
        method: DevlinMethod,
    },
    /// Antipode of the coordinate function a_word.
    Antipode {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_enum, default_value_t = AntipodeMethod::Left)]
        method: AntipodeMethod,
    },
    /// Feedback group inverse.
    Inverse {
        #[arg(allow_hyphen_values = true)]
        series: String,
        #[arg(long, value_enum, default_value_t = InverseMethod::Antipode)]
        method: InverseMethod,
    },
    /// Composition product c ∘ d.
    Compose {
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// Modified composition product c ∘̃ d.
    ModCompose {
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// Feedback product c @ d.
    Feedback {
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// Unity feedback c @ δ.
    UnityFeedback {
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Run the invariant suites up to --max-degree.
    Verify,
    /// Integrate ż = α z³ + β z² with RK4.
    AbelSim {
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        beta: String,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        z0: f64,
        /// End time, as a decimal or fraction.
        #[arg(long)]
        t: String,
        #[arg(long, default_value_t = 1e-4)]
        step: f64,
        /// Also evaluate the unity-feedback Ferfera series at t (requires z0 = 1).
        #[arg(long)]
        compare: bool,
    },
    /// Return-map coefficients a_1(ω), ..., a_N(ω) with N = --max-degree.
    ReturnMap {
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        beta: String,
        #[arg(long)]
        omega: String,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Shuffle { .. } => "shuffle",
            Command::Devlin { .. } => "devlin",
            Command::Antipode { .. } => "antipode",
            Command::Inverse { .. } => "inverse",
            Command::Compose { .. } => "compose",
            Command::ModCompose { .. } => "mod-compose",
            Command::Feedback { .. } => "feedback",
            Command::UnityFeedback { .. } => "unity-feedback",
            Command::Verify => "verify",
            Command::AbelSim { .. } => "abel-sim",
            Command::ReturnMap { .. } => "return-map",
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("error[parse]: {arg}: {source}")]
    Parse {
        arg: &'static str,
        #[source]
        source: ParseError,
    },
    #[error("error[usage]: {0}")]
    Usage(String),
    #[error("error[blow-up]: {0}")]
    BlowUp(feedback_hopf::Error),
    #[error("error[compute]: {0}")]
    Compute(feedback_hopf::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } | CliError::Usage(_) | CliError::Compute(_) => 2,
            CliError::BlowUp(_) => 3,
        }
    }
}

impl From<feedback_hopf::Error> for CliError {
    fn from(e: feedback_hopf::Error) -> Self {
        match e {
            feedback_hopf::Error::BlowUp { .. } => CliError::BlowUp(e),
            other => CliError::Compute(other),
        }
    }
}

/// Rendered output and the process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub exit_code: u8,
}

fn series_arg(arg: &'static str, s: &str, n: u32) -> Result<Series, CliError> {
    match s.trim() {
        "ferfera" => Ok(ferfera(n)),
        "-ferfera" => Ok(-ferfera(n)),
        _ => parse_series(s).map_err(|source| CliError::Parse { arg, source }),
    }
}

fn poly_arg(arg: &'static str, s: &str) -> Result<feedback_hopf::abel::PolyFunction, CliError> {
    parse_poly(s).map_err(|source| CliError::Parse { arg, source })
}

fn rational_arg(arg: &'static str, s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|source| CliError::Parse { arg, source })
}

fn render(cli: &Cli, text: String, payload: Payload) -> String {
    match cli.format {
        Format::Text => text,
        Format::Json => {
            let env = Envelope {
                command: cli.command.name(),
                max_degree: cli.max_degree,
                result: payload,
            };
            serde_json::to_string_pretty(&env).expect("serializable")
        }
    }
}

fn series_payload(s: &Series) -> Payload {
    Payload::Series { series: s.into() }
}

fn method_name(v: impl ValueEnum) -> String {
    v.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

/// Runs one command. Output ends without a trailing newline.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let n = cli.max_degree;
    let ok = |stdout: String| {
        Ok(Outcome {
            stdout,
            exit_code: 0,
        })
    };
    match &cli.command {
        Command::Shuffle { left, right } => {
            let s = shuffle_series(
                &series_arg("left", left, n)?,
                &series_arg("right", right, n)?,
            );
            ok(render(cli, s.to_string(), series_payload(&s)))
        }
        Command::Devlin { n: grade, method } => {
            let grade = *grade;
            let poly = match method {
                DevlinMethod::Recursive => devlin_recursive(grade)?.poly,
                DevlinMethod::Closed => devlin_closed(grade)?.poly,
                DevlinMethod::Antipode => devlin_antipode(grade, grade.max(n))?.poly,
                DevlinMethod::Lie => {
                    Series::from_terms(words_of_degree(grade).into_iter().map(|w| {
                        let c = Rational::from_integer(lie_coeff(&w));
                        (w, c)
                    }))
                }
            };
            let payload = Payload::Devlin {
                n: grade,
                method: method_name(*method),
                series: (&poly).into(),
            };
            ok(render(cli, poly.to_string(), payload))
        }
        Command::Antipode { word, method } => {
            let w = parse_word(word).map_err(|source| CliError::Parse {
                arg: "word",
                source,
            })?;
            let h = match method {
                AntipodeMethod::Left => (*antipode_left(&w)).clone(),
                AntipodeMethod::Right => (*antipode_right(&w)).clone(),
                AntipodeMethod::Direct => antipode_direct(&w)?,
            };
            let payload = Payload::Antipode {
                word: w.to_string(),
                method: method_name(*method),
                element: (&h).into(),
            };
            ok(render(cli, h.to_string(), payload))
        }
        Command::Inverse { series, method } => {
            let c = series_arg("series", series, n)?;
            let s = match method {
                InverseMethod::Antipode => group_inverse(&c, n),
                InverseMethod::Fixpoint => group_inverse_fixpoint(&c, n),
            };
            ok(render(cli, s.to_string(), series_payload(&s)))
        }
        Command::Compose { c, d } => {
            let s = compose(&series_arg("c", c, n)?, &series_arg("d", d, n)?, n);
            ok(render(cli, s.to_string(), series_payload(&s)))
        }
        Command::ModCompose { c, d } => {
            let s = mod_compose(&series_arg("c", c, n)?, &series_arg("d", d, n)?, n);
            ok(render(cli, s.to_string(), series_payload(&s)))
        }
        Command::Feedback { c, d } => {
            let s = feedback(&series_arg("c", c, n)?, &series_arg("d", d, n)?, n);
            ok(render(cli, s.to_string(), series_payload(&s)))
        }
        Command::UnityFeedback { c } => {
            let s = unity_feedback(&series_arg("c", c, n)?, n);
            ok(render(cli, s.to_string(), series_payload(&s)))
        }
        Command::Verify => {
            let results = run_all(n, cli.seed);
            let failed = results.iter().filter(|r| !r.passed).count();
            let mut text = String::new();
            for r in &results {
                match &r.detail {
                    None => writeln!(text, "PASS {:<28} {} cases", r.name, r.cases),
                    Some(d) => writeln!(text, "FAIL {:<28} {d}", r.name),
                }
                .expect("write to string");
            }
            if failed == 0 {
                write!(text, "all {} suites passed up to degree {n}", results.len())
            } else {
                write!(
                    text,
                    "{failed} of {} suites failed up to degree {n}",
                    results.len()
                )
            }
            .expect("write to string");
            let payload = Payload::Verify {
                max_degree: n,
                seed: cli.seed,
                passed: failed == 0,
                checks: results.iter().map(Into::into).collect(),
            };
            Ok(Outcome {
                stdout: render(cli, text, payload),
                exit_code: if failed == 0 { 0 } else { 1 },
            })
        }
        Command::AbelSim {
            alpha,
            beta,
            z0,
            t,
            step,
            compare,
        } => {
            let u = InputPair::new(poly_arg("alpha", alpha)?, poly_arg("beta", beta)?);
            let t_exact = rational_arg("t", t)?;
            let tf = t_exact.to_f64().unwrap_or(f64::NAN);
            let z = AbelSolver::new(*step)?.solve(&u, *z0, tf)?;
            let series = if *compare {
                if *z0 != 1.0 {
                    return Err(CliError::Usage("--compare requires --z0 1".into()));
                }
                let e = unity_feedback(&ferfera(n), n);
                Some(
                    fliess_eval(&e, &u, &t_exact, n)?
                        .to_f64()
                        .unwrap_or(f64::NAN),
                )
            } else {
                None
            };
            let mut text = format!("z({t_exact}) = {z}");
            if let Some(y) = series {
                write!(text, "\nseries = {y}\ndifference = {:e}", (y - z).abs())
                    .expect("write to string");
            }
            let payload = Payload::AbelSim {
                t: (&t_exact).into(),
                step: float_json(*step),
                z0: float_json(*z0),
                z: float_json(z),
                series: series.map(float_json),
            };
            ok(render(cli, text, payload))
        }
        Command::ReturnMap { alpha, beta, omega } => {
            let u = InputPair::new(poly_arg("alpha", alpha)?, poly_arg("beta", beta)?);
            let omega = rational_arg("omega", omega)?;
            let coeffs = return_map_coeffs(&u, &omega, n);
            let sum: Rational = coeffs.iter().sum();
            let mut text = String::new();
            for (k, c) in coeffs.iter().enumerate() {
                writeln!(text, "a_{}({omega}) = {c}", k + 1).expect("write to string");
            }
            write!(text, "sum = {sum}").expect("write to string");
            let payload = Payload::ReturnMap {
                omega: (&omega).into(),
                alpha: poly_json(&u.u0),
                beta: poly_json(&u.u1),
                coefficients: coeffs.iter().map(RationalJson::from).collect(),
                sum: (&sum).into(),
            };
            ok(render(cli, text, payload))
        }
    }
}
