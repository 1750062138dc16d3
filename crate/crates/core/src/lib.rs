//! Exact computer algebra for the output feedback Hopf algebra over the
//! two-letter alphabet `{x0, x1}`.
//!
//! The crate covers
//!
//! * words, their degree grading and graded enumeration ([`word`]);
//! * truncated noncommutative series with shuffle and catenation products
//!   ([`series`]);
//! * the coordinate algebra `H`, its deshuffle, `Δ̃` and full coproducts
//!   ([`hopf`]);
//! * three antipode algorithms, composition products, feedback group
//!   inversion and the feedback product ([`feedback`]);
//! * Devlin's polynomials for the Abel equation `ż = α z³ + β z²`, computed
//!   by recursion, closed form, antipode and Lie derivatives ([`devlin`]);
//! * exact iterated integrals, truncated Fliess operators and an RK4
//!   integrator for the Abel equation ([`abel`]);
//! * seeded invariant suites over all of the above ([`verify`]).
//!
//! All algebraic computations use arbitrary-precision rationals.

pub mod abel;
pub mod devlin;
mod error;
pub mod feedback;
pub mod hopf;
mod memo;
pub mod series;
pub mod verify;
pub mod word;

pub use error::Error;

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;

pub use series::Series;
pub use word::{Letter, Word};
