use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ExactError, Rational};

/// An integer or half-odd-integer, stored as twice its value.
///
/// Spin quantum numbers S, magnetic quantum numbers m, and the product
/// indices n all live on the lattice `{..., -1, -1/2, 0, 1/2, 1, ...}`.
/// Storing the doubled value keeps their bookkeeping in integer
/// arithmetic and makes the integer/half-integer classification a
/// parity check on `twice`.
///
/// Serializes as `{"twice": k}` in JSON; displays as `"p/2"` or a plain
/// integer.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: BigInt,
}

impl HalfInt {
    /// Builds the value `twice / 2`.
    pub fn from_twice(twice: impl Into<BigInt>) -> Self {
        HalfInt { twice: twice.into() }
    }

    /// Builds a whole integer value.
    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        HalfInt { twice: n.into() * 2 }
    }

    pub fn zero() -> Self {
        HalfInt::from_twice(0)
    }

    /// Twice the value; always an exact integer.
    pub fn twice(&self) -> &BigInt {
        &self.twice
    }

    /// True for whole integers (`twice` even).
    pub fn is_integer(&self) -> bool {
        self.twice.is_even()
    }

    /// True for half-odd-integers such as 1/2 or -3/2 (`twice` odd).
    pub fn is_half_odd_integer(&self) -> bool {
        self.twice.is_odd()
    }

    pub fn is_negative(&self) -> bool {
        self.twice.is_negative()
    }

    /// Exact conversion; the result has denominator 1 or 2.
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.twice.clone(), 2).expect("denominator 2 is nonzero")
    }

    /// Exact conversion back from a rational with denominator 1 or 2.
    pub fn try_from_rational(r: &Rational) -> Result<Self, ExactError> {
        if r.denom() == &BigInt::from(1) {
            Ok(HalfInt::from_integer(r.numer().clone()))
        } else if r.denom() == &BigInt::from(2) {
            Ok(HalfInt::from_twice(r.numer().clone()))
        } else {
            Err(ExactError::NotHalfInteger(r.to_string()))
        }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", &self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for HalfInt {
    type Err = ExactError;

    /// Accepts integer strings and `p/q` strings whose canonical
    /// denominator is 1 or 2 (so `"1/2"`, `"3/2"`, `"2"`, `"2/4"` parse,
    /// while `"1/3"` is rejected).
    fn from_str(s: &str) -> Result<Self, ExactError> {
        let r: Rational = s.parse()?;
        HalfInt::try_from_rational(&r)
    }
}

impl Add for &HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: &HalfInt) -> HalfInt {
        HalfInt::from_twice(&self.twice + &rhs.twice)
    }
}

impl Sub for &HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: &HalfInt) -> HalfInt {
        HalfInt::from_twice(&self.twice - &rhs.twice)
    }
}

impl Neg for &HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-&self.twice)
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let twice: i64 = (&self.twice)
            .try_into()
            .map_err(|_| serde::ser::Error::custom("half-integer too large for JSON"))?;
        let mut state = serializer.serialize_struct("HalfInt", 1)?;
        state.serialize_field("twice", &twice)?;
        state.end()
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            twice: i64,
        }
        let repr = Repr::deserialize(deserializer)?;
        Ok(HalfInt::from_twice(repr.twice))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!("1/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(1));
        assert_eq!("3/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(3));
        assert_eq!("2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(4));
        assert_eq!("-1/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(-1));
        // canonicalizes before the denominator check
        assert_eq!("2/4".parse::<HalfInt>().unwrap(), HalfInt::from_twice(1));
        assert_eq!(
            "1/3".parse::<HalfInt>(),
            Err(ExactError::NotHalfInteger("1/3".to_string()))
        );
        assert!("x/2".parse::<HalfInt>().is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(HalfInt::from_twice(3).to_string(), "3/2");
        assert_eq!(HalfInt::from_twice(4).to_string(), "2");
        assert_eq!(HalfInt::from_twice(-1).to_string(), "-1/2");
        assert_eq!(HalfInt::from_twice(0).to_string(), "0");
    }

    #[test]
    fn classification_is_a_parity_check() {
        assert!(HalfInt::from_twice(4).is_integer());
        assert!(!HalfInt::from_twice(4).is_half_odd_integer());
        assert!(HalfInt::from_twice(-3).is_half_odd_integer());
        assert!(!HalfInt::from_twice(-3).is_integer());
    }

    #[test]
    fn rational_conversion_has_denominator_one_or_two() {
        for twice in -9i64..=9 {
            let h = HalfInt::from_twice(twice);
            let r = h.to_rational();
            let d: i64 = r.denom().try_into().unwrap();
            assert!(d == 1 || d == 2, "denominator was {d}");
            assert_eq!(HalfInt::try_from_rational(&r).unwrap(), h);
        }
    }

    #[test]
    fn serde_uses_twice() {
        let h = HalfInt::from_twice(3);
        let json = serde_json::to_string(&h).unwrap();
        assert_eq!(json, "{\"twice\":3}");
        assert_eq!(serde_json::from_str::<HalfInt>(&json).unwrap(), h);
    }

    #[test]
    fn arithmetic_on_the_half_integer_lattice() {
        let a = HalfInt::from_twice(3); // 3/2
        let b = HalfInt::from_twice(-1); // -1/2
        assert_eq!(&a + &b, HalfInt::from_integer(1));
        assert_eq!(&a - &b, HalfInt::from_integer(2));
        assert_eq!(-&a, HalfInt::from_twice(-3));
    }
}
