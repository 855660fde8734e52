//! Exact arithmetic substrate.
//!
//! Every invariant in this crate is an exact rational number or a positive
//! multiple of `π·√ρ` with rational `ρ`. Rationals are
//! [`num_rational::BigRational`], which is always kept in lowest terms with a
//! positive denominator. Values of the form `c·π·√ρ` are carried by
//! [`PiSurd`] and compared without ever evaluating `π` or a square root.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact arbitrary-precision fraction in canonical reduced form.
pub type Rational = num_rational::BigRational;

/// Builds `num/den` from anything convertible to [`BigInt`].
///
/// Panics if `den` is zero.
pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Integer as a rational with denominator one.
pub fn integer(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Renders a rational as `num/den`, always including the denominator.
pub fn format_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `num/den` (or a bare integer) into a reduced rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (
            n.trim().parse::<BigInt>().ok()?,
            d.trim().parse::<BigInt>().ok()?,
        ),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// `#[serde(with = "...")]` adapter writing a [`Rational`] as `"num/den"`.
pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rational(&raw)
            .ok_or_else(|| serde::de::Error::custom(format!("malformed rational {raw:?}")))
    }
}

/// `#[serde(with = "...")]` adapter writing a [`BigInt`] as a decimal string.
pub mod serde_bigint {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        let raw = String::deserialize(d)?;
        raw.trim()
            .parse()
            .map_err(|_| serde::de::Error::custom(format!("malformed integer {raw:?}")))
    }
}

/// Inverse of `a` modulo `n`, reduced into `[0, n)`.
///
/// The trivial modulus `n = 1` yields `0`. `a` may be negative or larger
/// than `n`; it is reduced first.
pub fn mod_inverse(a: &BigInt, n: &BigInt) -> Result<BigInt> {
    if !n.is_positive() {
        return Err(Error::NonPositive {
            what: "modulus",
            value: n.clone(),
        });
    }
    if n.is_one() {
        return Ok(BigInt::zero());
    }
    let a_red = a.mod_floor(n);
    let eg = a_red.extended_gcd(n);
    if !eg.gcd.is_one() {
        return Err(Error::NonCoprime {
            a: a.clone(),
            n: n.clone(),
            gcd: eg.gcd,
        });
    }
    Ok(eg.x.mod_floor(n))
}

/// Checks that no two of `a`, `b`, `c` share a factor.
pub fn check_pairwise_coprime(a: &BigInt, b: &BigInt, c: &BigInt) -> Result<()> {
    for (x, y) in [(a, b), (a, c), (b, c)] {
        let g = x.gcd(y);
        if !g.is_one() {
            return Err(Error::NotPairwiseCoprime {
                a: x.clone(),
                b: y.clone(),
                gcd: g,
            });
        }
    }
    Ok(())
}

/// A positive real of the form `coeff · π · √radicand`.
///
/// Equality and ordering compare `coeff² · radicand`, which is monotone in
/// the represented value because `coeff > 0` and `radicand ≥ 0`. Two values
/// with different `(coeff, radicand)` pairs can therefore be equal, e.g.
/// `2π√1 = 1π√4`.
#[derive(Debug, Clone)]
pub struct PiSurd {
    coeff: Rational,
    radicand: Rational,
}

impl PiSurd {
    pub fn new(coeff: Rational, radicand: Rational) -> Result<Self> {
        if !coeff.is_positive() {
            return Err(Error::InvalidPiSurd("coefficient must be positive"));
        }
        if radicand.is_negative() {
            return Err(Error::InvalidPiSurd("radicand must be non-negative"));
        }
        Ok(Self { coeff, radicand })
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    /// `coeff² · radicand`, i.e. the square of the value divided by `π²`.
    pub fn square_over_pi_squared(&self) -> Rational {
        &self.coeff * &self.coeff * &self.radicand
    }

    pub fn to_f64(&self) -> f64 {
        if self.radicand.is_zero() {
            return 0.0;
        }
        let c = rational_to_f64(&self.coeff);
        let rad = rational_to_f64(&self.radicand);
        c * std::f64::consts::PI * rad.sqrt()
    }

    /// The smaller of two values, cloned.
    pub fn min_of(a: &PiSurd, b: &PiSurd) -> PiSurd {
        if pi_surd_compare(a, b) == Ordering::Greater {
            b.clone()
        } else {
            a.clone()
        }
    }
}

fn rational_to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Outside the f64 range; fall back to a ratio of scaled parts.
        let shift = x.numer().bits().max(x.denom().bits()).saturating_sub(1000);
        let n = (x.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (x.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Exact ordering of two [`PiSurd`] values as real numbers.
pub fn pi_surd_compare(x: &PiSurd, y: &PiSurd) -> Ordering {
    x.square_over_pi_squared().cmp(&y.square_over_pi_squared())
}

/// Floating approximation of `coeff · π · √radicand`.
pub fn pi_surd_to_float(x: &PiSurd) -> f64 {
    x.to_f64()
}

impl PartialEq for PiSurd {
    fn eq(&self, other: &Self) -> bool {
        pi_surd_compare(self, other) == Ordering::Equal
    }
}

impl Eq for PiSurd {}

impl PartialOrd for PiSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PiSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        pi_surd_compare(self, other)
    }
}

impl fmt::Display for PiSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}*pi*sqrt({})",
            format_rational(&self.coeff),
            format_rational(&self.radicand)
        )
    }
}

#[derive(Serialize, Deserialize)]
struct PiSurdRepr {
    #[serde(with = "serde_rational")]
    coeff: Rational,
    #[serde(with = "serde_rational")]
    radicand: Rational,
    #[serde(default)]
    approx: f64,
}

impl Serialize for PiSurd {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PiSurdRepr {
            coeff: self.coeff.clone(),
            radicand: self.radicand.clone(),
            approx: self.to_f64(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PiSurd {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PiSurdRepr::deserialize(d)?;
        PiSurd::new(repr.coeff, repr.radicand).map_err(serde::de::Error::custom)
    }
}
