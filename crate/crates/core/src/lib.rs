//! Markov processes on labeled `k`-partitions built from random set-valued
//! matrix operators, with exact small-instance oracles for their algebraic
//! and distributional properties.
//!
//! The crate is organized around the objects of that construction:
//!
//! - [`partitions`]: labeled and unlabeled partitions of `[n]`, projections,
//!   the dyadic prefix metric, coagulation, and exhaustive enumeration;
//! - [`operators`]: `k x k` set-valued matrices whose columns are
//!   `k`-partitions, their multiplication and action on partitions, and the
//!   correspondence with strongly Lipschitz maps;
//! - [`measures`]: simplex distributions, paintbox samplers, and the
//!   operator-valued rate measures driving the processes, with exact
//!   level-`n` pushforwards for small instances;
//! - [`simulate`]: event-driven continuous-time chains, operator flows,
//!   discrete-time chains, the block-merge reference process, and the
//!   simplex frequency projection;
//! - [`verify`]: exact rate oracles and statistical tests tying simulation
//!   output back to the closed-form transition rates;
//! - [`config`]: serde-backed measure and run specifications shared with the
//!   command-line front end.

pub mod bitset;
pub mod config;
pub mod error;
pub mod measures;
pub mod operators;
pub mod partitions;
pub mod rng;
pub mod simulate;
pub mod verify;

pub use error::{Error, Result};

/// Exact rational scalar used by measures and oracles.
pub type Rational = num_rational::BigRational;

/// Converts an exact rational to the nearest `f64`.
pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().expect("rational out of f64 range")
}

/// Parses `"p/q"`, decimal (`"0.25"`), or integer (`"3"`) text into an exact
/// rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    use num_bigint::BigInt;
    use num_traits::One;
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let num: BigInt = p
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator {p:?}")))?;
        let den: BigInt = q
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator {q:?}")))?;
        if den == BigInt::from(0) {
            return Err(Error::Parse("zero denominator".into()));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let digits = format!("{int}{frac}");
        let num: BigInt = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad decimal {s:?}")))?;
        let mut den = BigInt::one();
        for _ in 0..frac.len() {
            den *= 10;
        }
        return Ok(Rational::new(num, den));
    }
    let num: BigInt = s
        .parse()
        .map_err(|_| Error::Parse(format!("bad number {s:?}")))?;
    Ok(Rational::from(num))
}
