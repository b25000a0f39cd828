//! Exact rational scalars and deterministic sampling of positive rationals.
//!
//! Every quantity in the crystal is a rational function with integer
//! coefficients, so evaluation happens over `Q` with arbitrary precision and
//! comparisons are exact. [`Rational`] wraps [`BigRational`], which keeps the
//! value reduced with a positive denominator after every operation.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction in lowest terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den`, reduced.
    ///
    /// Panics when `den == 0`; use [`Rational::checked_new`] for untrusted input.
    pub fn new(num: i64, den: i64) -> Self {
        Self::checked_new(BigInt::from(num), BigInt::from(den)).expect("zero denominator")
    }

    pub fn checked_new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::domain("zero denominator"));
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// Multiplicative inverse; a zero value is a domain error.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("reciprocal of zero"));
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::domain("division by zero"));
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Exact integer power. Negative exponents need a nonzero base.
    pub fn pow(&self, n: i32) -> Result<Self> {
        if n < 0 && self.is_zero() {
            return Err(Error::domain("zero raised to a negative power"));
        }
        Ok(Rational(num_traits::Pow::pow(&self.0, n)))
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

/// Free-function form of [`Rational::pow`].
pub fn pow(r: &Rational, n: i32) -> Result<Rational> {
    r.pow(n)
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Panics on a zero divisor, like the integer types. Fallible call sites use
// `checked_div`.
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign<Rational> for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl MulAssign<Rational> for Rational {
    fn mul_assign(&mut self, rhs: Rational) {
        self.0 *= rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

impl<'a> Product<&'a Rational> for Rational {
    fn product<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

/// Formats as `p/q`, or `p` when the denominator is 1.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| {
            let t = t.trim();
            // BigInt accepts a leading '+', which is not part of the format.
            if t.starts_with('+') || t.is_empty() {
                return Err(Error::parse(format!("invalid rational `{s}`")));
            }
            BigInt::from_str(t).map_err(|_| Error::parse(format!("invalid rational `{s}`")))
        };
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (parse_int(n)?, parse_int(d)?),
            None => (parse_int(s)?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(Error::parse(format!("zero denominator in `{s}`")));
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Seeded generator driving all sampling.
pub type SampleRng = ChaCha8Rng;

/// Generator for one verification trial. Each trial reads its own ChaCha
/// stream, so its draws depend only on `(seed, trial)`.
pub fn trial_rng(seed: u64, trial: u64) -> SampleRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Draws `p/q` with `p` and `q` independent and uniform on `[1, bound]`.
///
/// Panics if `bound == 0`.
pub fn sample_positive<R: Rng + ?Sized>(rng: &mut R, bound: u64) -> Rational {
    assert!(bound >= 1, "sampling bound must be at least 1");
    let p = rng.gen_range(1..=bound);
    let q = rng.gen_range(1..=bound);
    Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
}
