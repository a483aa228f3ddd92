use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ExactError;

/// Arbitrary-precision rational scalar, always held in canonical form.
///
/// Canonical means: the denominator is positive, numerator and denominator
/// are coprime, and zero is stored as `0/1`. Every constructor and every
/// arithmetic operation returns a canonical value, so two equal rationals
/// are always structurally equal.
///
/// Serializes as the string `"p/q"`, abbreviated to `"p"` when the
/// denominator is one; both forms are accepted on input.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer/denom` in canonical form.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, ExactError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
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

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// True when the denominator is one.
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Exact integer power (always defined: `pow(0)` is one).
    pub fn pow(&self, exp: u32) -> Self {
        Rational((&self.0).pow(exp))
    }

    /// Exact division with an explicit error on a zero divisor.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl FromStr for Rational {
    type Err = ExactError;

    /// Parses `"p/q"` or `"p"`. Whitespace around either part is ignored;
    /// a zero denominator is rejected; the result is canonicalized.
    fn from_str(s: &str) -> Result<Self, ExactError> {
        let parse_int =
            |part: &str| BigInt::from_str(part.trim()).map_err(|_| ExactError::ParseRational(s.to_string()));
        match s.split_once('/') {
            None => Ok(Rational::from_integer(parse_int(s)?)),
            Some((numer, denom)) => {
                let numer = parse_int(numer)?;
                let denom = parse_int(denom)?;
                if denom.is_zero() {
                    return Err(ExactError::ZeroDenominator);
                }
                Ok(Rational(BigRational::new(numer, denom)))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = String::deserialize(deserializer)?;
        raw.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }

        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }

        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }

        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

// The operator panics on a zero divisor, like integer division does;
// `checked_div` is the fallible variant for untrusted input.
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

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn addition() {
        assert_eq!(rat("1/2") + rat("1/3"), rat("5/6"));
        let zero = rat("1/2") + rat("-1/2");
        assert_eq!(zero, Rational::zero());
        assert_eq!(zero.numer(), &BigInt::from(0));
        assert_eq!(zero.denom(), &BigInt::from(1));
        // inputs are canonicalized before use
        assert_eq!(Rational::new(2, 4).unwrap() + rat("1/2"), Rational::one());
    }

    #[test]
    fn multiplication_and_division() {
        assert_eq!(rat("2/3") * rat("3/4"), rat("1/2"));
        assert_eq!(rat("7/5") * Rational::zero(), Rational::zero());
        // sign moves onto the numerator
        let q = Rational::one().checked_div(&rat("-1/2")).unwrap();
        assert_eq!(q, rat("-2"));
        assert_eq!(q.denom(), &BigInt::from(1));
        assert!(q.numer().is_negative());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            rat("1/2").checked_div(&Rational::zero()),
            Err(ExactError::DivisionByZero)
        );
        assert_eq!(Rational::new(1, 0), Err(ExactError::ZeroDenominator));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(rat("5/1").to_string(), "5");
        assert_eq!(rat("-3/2").to_string(), "-3/2");
        assert_eq!(rat("4/-6").to_string(), "-2/3");
        assert_eq!(rat(" 3 / 4 "), rat("3/4"));
        assert_eq!("1/0".parse::<Rational>(), Err(ExactError::ZeroDenominator));
        assert!("".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
        assert!("1/2/3".parse::<Rational>().is_err());
        assert!("1.5".parse::<Rational>().is_err());
    }

    #[test]
    fn serde_round_trip() {
        let value = rat("-22/7");
        let json = serde_json::to_string(&value).unwrap();
        assert_eq!(json, "\"-22/7\"");
        assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), value);
        assert_eq!(serde_json::from_str::<Rational>("\"5\"").unwrap(), rat("5/1"));
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1_000_000i64..=1_000_000, 1i64..=1_000_000)
            .prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn addition_commutes(a in arb_rational(), b in arb_rational()) {
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn multiplication_distributes(
            a in arb_rational(),
            b in arb_rational(),
            c in arb_rational(),
        ) {
            prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        }

        #[test]
        fn canonicalization_is_idempotent(a in arb_rational(), k in 1i64..=1000) {
            // re-building from scaled parts lands on the same canonical value
            let scaled = Rational::new(a.numer() * k, a.denom() * k).unwrap();
            prop_assert_eq!(&scaled, &a);
            let rebuilt = Rational::new(scaled.numer().clone(), scaled.denom().clone()).unwrap();
            prop_assert_eq!(rebuilt, a);
        }

        #[test]
        fn denominator_always_positive(a in arb_rational(), b in arb_rational()) {
            let results = [&a + &b, &a - &b, &a * &b, -&a];
            for r in results {
                prop_assert!(r.denom() > &BigInt::from(0));
            }
        }
    }
}
