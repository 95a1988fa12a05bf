//! Exact rational numbers, the coordinate and slope currency of the crate.
//!
//! `Fraction` is a thin wrapper around an arbitrary-precision reduced
//! rational. The denominator is always positive and the pair is always in
//! lowest terms; the vertex `<1/0>` of the diagram is *not* representable
//! here (it is a vertex kind, never arithmetic).

use alloc::string::String;
use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An irreducible rational `num/den` with `den >= 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fraction(BigRational);

impl Fraction {
    /// Builds the reduced fraction `num/den`.
    ///
    /// Panics if `den == 0`; the infinity vertex is deliberately not a value.
    pub fn new<N, D>(num: N, den: D) -> Self
    where
        N: Into<BigInt>,
        D: Into<BigInt>,
    {
        let den = den.into();
        assert!(!den.is_zero(), "fraction with zero denominator");
        let f = Fraction(BigRational::new(num.into(), den));
        f.debug_check();
        f
    }

    pub fn from_int<N: Into<BigInt>>(n: N) -> Self {
        Fraction(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Fraction(BigRational::zero())
    }

    pub fn one() -> Self {
        Fraction(BigRational::one())
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

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Fraction(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Fraction(self.0.recip())
    }

    /// Sign as -1, 0 or +1.
    pub fn signum(&self) -> i32 {
        if self.0.is_zero() {
            0
        } else if self.0.is_negative() {
            -1
        } else {
            1
        }
    }

    /// Exact integer value, if the fraction is an integer fitting in `i64`.
    pub fn to_integer(&self) -> Option<i64> {
        if self.0.is_integer() {
            i64::try_from(self.0.numer()).ok()
        } else {
            None
        }
    }

    /// Largest integer `<=` the fraction.
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Least common multiple of this denominator and `other`.
    pub fn denom_lcm(&self, other: &BigInt) -> BigInt {
        self.denom().lcm(other)
    }

    /// Asserts the representation invariant: reduced, positive denominator.
    ///
    /// `BigRational` maintains this on construction; the check guards against
    /// regressions in arithmetic paths and is compiled out in release builds.
    #[inline]
    pub fn debug_check(&self) {
        debug_assert!(self.0.denom().is_positive());
        debug_assert!(self.0.numer().gcd(self.0.denom()).is_one());
    }
}

impl From<i64> for Fraction {
    fn from(n: i64) -> Self {
        Fraction::from_int(n)
    }
}

impl From<(i64, i64)> for Fraction {
    fn from((n, d): (i64, i64)) -> Self {
        Fraction::new(n, d)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Fraction {
            type Output = Fraction;
            fn $method(self, rhs: Fraction) -> Fraction {
                let f = Fraction((self.0).$method(rhs.0));
                f.debug_check();
                f
            }
        }
        impl<'a> $trait<&'a Fraction> for &'a Fraction {
            type Output = Fraction;
            fn $method(self, rhs: &'a Fraction) -> Fraction {
                let f = Fraction((&self.0).$method(&rhs.0));
                f.debug_check();
                f
            }
        }
        impl<'a> $trait<&'a Fraction> for Fraction {
            type Output = Fraction;
            fn $method(self, rhs: &'a Fraction) -> Fraction {
                let f = Fraction((self.0).$method(&rhs.0));
                f.debug_check();
                f
            }
        }
        impl<'a> $trait<Fraction> for &'a Fraction {
            type Output = Fraction;
            fn $method(self, rhs: Fraction) -> Fraction {
                let f = Fraction((&self.0).$method(rhs.0));
                f.debug_check();
                f
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction(-self.0)
    }
}

impl Neg for &Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction(-&self.0)
    }
}

impl AddAssign<&Fraction> for Fraction {
    fn add_assign(&mut self, rhs: &Fraction) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Fraction> for Fraction {
    fn sub_assign(&mut self, rhs: &Fraction) {
        self.0 -= &rhs.0;
    }
}

impl Sum for Fraction {
    fn sum<I: Iterator<Item = Fraction>>(iter: I) -> Fraction {
        let mut acc = Fraction::zero();
        for f in iter {
            acc += &f;
        }
        acc
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error from parsing a `"num/den"` string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseFractionError(pub String);

impl fmt::Display for ParseFractionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid fraction: {}", self.0)
    }
}

impl FromStr for Fraction {
    type Err = ParseFractionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use alloc::string::ToString;
        let bad = || ParseFractionError(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if !den.is_positive() {
            return Err(bad());
        }
        Ok(Fraction::new(num, den))
    }
}

/// Shorthand used pervasively in tests and fixtures.
pub fn frac(num: i64, den: i64) -> Fraction {
    Fraction::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn reduces_on_construction() {
        let f = Fraction::new(4, 6);
        assert_eq!(f, frac(2, 3));
        assert_eq!(f.numer(), &BigInt::from(2));
        assert_eq!(f.denom(), &BigInt::from(3));
    }

    #[test]
    fn denominator_normalized_positive() {
        let f = Fraction::new(1, -3);
        assert_eq!(f, frac(-1, 3));
        assert!(f.denom().is_positive());
    }

    #[test]
    fn arithmetic_stays_reduced() {
        let a = frac(1, 6);
        let b = frac(1, 3);
        let s = &a + &b;
        assert_eq!(s, frac(1, 2));
        s.debug_check();
    }

    #[test]
    fn display_omits_unit_denominator() {
        assert_eq!(frac(6, 3).to_string(), "2");
        assert_eq!(frac(-7, 3).to_string(), "-7/3");
    }

    #[test]
    fn parse_round_trips() {
        for s in ["7/3", "-2", "0", "-14/5"] {
            let f: Fraction = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("1/0".parse::<Fraction>().is_err());
        assert!("x".parse::<Fraction>().is_err());
    }

    #[test]
    #[should_panic]
    fn zero_denominator_rejected() {
        let _ = Fraction::new(1, 0);
    }
}
