//! Exact arithmetic: the ground rings, dense matrices over them, Gaussian
//! elimination over fields and Smith normal form over the integers.
//!
//! Every scalar is stored as a [`BigRational`]. The [`RingTag`] of a matrix
//! decides which values are legal: integers only for `Z`, residues in
//! `[0, m)` for `Z/m`, anything for `Q`. All ring operations go through the
//! tag so that modular entries are reduced after each step.

mod elimination;
mod matrix;
mod smith;
mod text;

pub use elimination::RowEchelon;
pub use matrix::ExactMatrix;
pub use smith::SmithNormalForm;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Scalars are exact rationals; integer and modular rings use the integral subset.
pub type Scalar = BigRational;

/// The ground ring of a matrix or chain complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingTag {
    Integers,
    Rationals,
    /// Integers modulo `m`, `m >= 2`.
    IntegersMod(u64),
}

impl RingTag {
    pub fn integers_mod(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidEntry(format!(
                "modulus must be >= 2, got {m}"
            )));
        }
        Ok(RingTag::IntegersMod(m))
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            RingTag::IntegersMod(m) => Some(*m),
            _ => None,
        }
    }

    /// True for `Q` and for `Z/p` with `p` prime.
    pub fn is_field(&self) -> bool {
        match self {
            RingTag::Integers => false,
            RingTag::Rationals => true,
            RingTag::IntegersMod(m) => is_prime(*m),
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, x: i64) -> Scalar {
        self.reduce(Scalar::from_integer(BigInt::from(x)))
    }

    /// Image of an integer-valued scalar in this ring.
    pub fn from_integer(&self, x: &BigInt) -> Scalar {
        self.reduce(Scalar::from_integer(x.clone()))
    }

    /// Canonical representative; modular values land in `[0, m)`.
    ///
    /// Only meaningful for values already known to be integral when the
    /// ring is not `Q`.
    pub fn reduce(&self, x: Scalar) -> Scalar {
        match self {
            RingTag::IntegersMod(m) if x.is_integer() => {
                let m = BigInt::from(*m);
                Scalar::from_integer(x.to_integer().mod_floor(&m))
            }
            _ => x,
        }
    }

    /// Whether `x` is a canonical element of this ring.
    pub fn contains(&self, x: &Scalar) -> bool {
        match self {
            RingTag::Rationals => true,
            RingTag::Integers => x.is_integer(),
            RingTag::IntegersMod(m) => {
                x.is_integer() && !x.is_negative() && x.to_integer() < BigInt::from(*m)
            }
        }
    }

    /// Coerce an arbitrary scalar into the ring, failing on non-integral
    /// values outside `Q`.
    pub fn coerce(&self, x: Scalar) -> Result<Scalar> {
        match self {
            RingTag::Rationals => Ok(x),
            _ if x.is_integer() => Ok(self.reduce(x)),
            _ => Err(Error::InvalidEntry(format!(
                "{x} is not an element of {self}"
            ))),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a * b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.reduce(-a)
    }

    /// Multiplicative inverse, if it exists in this ring.
    pub fn inverse(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match self {
            RingTag::Rationals => Some(a.recip()),
            RingTag::Integers => {
                if a.abs().is_one() {
                    Some(a.clone())
                } else {
                    None
                }
            }
            RingTag::IntegersMod(m) => {
                let m = BigInt::from(*m);
                let ext = a.to_integer().extended_gcd(&m);
                if ext.gcd.is_one() {
                    Some(Scalar::from_integer(ext.x.mod_floor(&m)))
                } else {
                    None
                }
            }
        }
    }

    pub(crate) fn require_field(&self) -> Result<()> {
        if self.is_field() {
            Ok(())
        } else {
            Err(Error::NotAField(self.to_string()))
        }
    }

    pub(crate) fn require_integers(&self) -> Result<()> {
        if *self == RingTag::Integers {
            Ok(())
        } else {
            Err(Error::NotIntegers(self.to_string()))
        }
    }

    pub(crate) fn check_same(&self, other: &RingTag) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::Integers => write!(f, "Z"),
            RingTag::Rationals => write!(f, "Q"),
            RingTag::IntegersMod(m) => write!(f, "Zm:{m}"),
        }
    }
}

impl std::str::FromStr for RingTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Z" => Ok(RingTag::Integers),
            "Q" => Ok(RingTag::Rationals),
            _ => {
                let m = s
                    .strip_prefix("Zm:")
                    .or_else(|| s.strip_prefix("Zp:"))
                    .ok_or_else(|| Error::InvalidEntry(format!("unknown ring `{s}`")))?;
                let m: u64 = m
                    .parse()
                    .map_err(|_| Error::InvalidEntry(format!("bad modulus in `{s}`")))?;
                RingTag::integers_mod(m)
            }
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Parse `p`, `-p` or `p/q`.
pub fn parse_scalar(token: &str) -> Option<Scalar> {
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, d),
        None => (token, "1"),
    };
    let num: BigInt = num.trim().parse().ok()?;
    let den: BigInt = den.trim().parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Scalar::new(num, den))
}

/// Render a scalar as `p` or `p/q`.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Integer value of an integral scalar, if it fits.
pub fn scalar_to_i64(x: &Scalar) -> Option<i64> {
    use num_traits::ToPrimitive;
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}
