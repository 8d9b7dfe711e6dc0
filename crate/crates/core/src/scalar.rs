//! Scalar abstraction and extended values.
//!
//! Every algorithm in this crate works over an exactly ordered field: we
//! need `Ord` (total order with exact comparisons) on top of the usual
//! `num-traits` arithmetic. Arbitrary-precision rationals are the intended
//! instantiation (see [`crate::Q`]); fixed-width rationals such as
//! `Ratio<i64>` also qualify for small inputs. Binary floats do not
//! implement `Ord` and cannot honour the exact-equality contracts, which is
//! by construction: there is no floating-point path anywhere.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{FromPrimitive, Num, Signed};

use crate::error::{Error, Result};

/// An exactly ordered field scalar.
pub trait Scalar:
    Num + Signed + Ord + Clone + fmt::Debug + fmt::Display + FromPrimitive + 'static
{
}

impl<T> Scalar for T where
    T: Num + Signed + Ord + Clone + fmt::Debug + fmt::Display + FromPrimitive + 'static
{
}

/// Embeds an integer into the scalar type.
pub fn int<T: Scalar>(n: i64) -> T {
    T::from_i64(n).expect("integer does not fit in scalar type")
}

/// Builds the exact fraction `num/den`.
pub fn ratio<T: Scalar>(num: i64, den: i64) -> T {
    assert!(den != 0, "zero denominator");
    int::<T>(num) / int::<T>(den)
}

/// Parses a rational literal exactly.
///
/// Accepted forms: integers (`-3`), fractions (`7/10`), and decimal
/// literals (`0.25`), all with an optional leading sign. Decimal literals
/// parse to the exact fraction they denote: `0.3` is `3/10`, never a
/// binary float.
pub fn parse_rational<T: Scalar>(input: &str) -> Result<T> {
    let s = input.trim();
    let bad = || Error::parse(format!("invalid rational literal {input:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    if body.is_empty() {
        return Err(bad());
    }

    let digits = |part: &str| -> Result<T> {
        if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let ten = int::<T>(10);
        let mut acc = T::zero();
        for b in part.bytes() {
            acc = acc * ten.clone() + int::<T>(i64::from(b - b'0'));
        }
        Ok(acc)
    };

    let magnitude = if let Some((num, den)) = body.split_once('/') {
        let den = digits(den)?;
        if den.is_zero() {
            return Err(Error::parse(format!("zero denominator in {input:?}")));
        }
        digits(num)? / den
    } else if let Some((whole, frac)) = body.split_once('.') {
        let whole = if whole.is_empty() { T::zero() } else { digits(whole)? };
        let scale = frac.len();
        let frac = digits(frac)?;
        let mut pow = T::one();
        for _ in 0..scale {
            pow = pow * int::<T>(10);
        }
        whole + frac / pow
    } else {
        digits(body)?
    };

    Ok(if negative { -magnitude } else { magnitude })
}

/// A scalar extended with `+inf` and `-inf`.
///
/// Extension values may be genuinely infinite (they are exactly when the
/// corresponding avoiding-sure-loss condition fails), so infinities are
/// first-class values here. Indeterminate forms are hard errors:
/// `+inf + -inf` panics rather than producing anything.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended<T> {
    MinusInf,
    Finite(T),
    PlusInf,
}

impl<T: Scalar> Extended<T> {
    pub fn is_finite(&self) -> bool {
        matches!(self, Extended::Finite(_))
    }

    pub fn finite(&self) -> Option<&T> {
        match self {
            Extended::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn expect_finite(&self) -> &T {
        self.finite().expect("extended value is infinite")
    }
}

impl<T: Scalar> From<T> for Extended<T> {
    fn from(v: T) -> Self {
        Extended::Finite(v)
    }
}

impl<T: Scalar> Add for Extended<T> {
    type Output = Extended<T>;

    fn add(self, rhs: Extended<T>) -> Extended<T> {
        use Extended::*;
        match (self, rhs) {
            (Finite(a), Finite(b)) => Finite(a + b),
            (PlusInf, MinusInf) | (MinusInf, PlusInf) => {
                panic!("indeterminate form: +inf + -inf")
            }
            (PlusInf, _) | (_, PlusInf) => PlusInf,
            (MinusInf, _) | (_, MinusInf) => MinusInf,
        }
    }
}

impl<T: Scalar> Sub for Extended<T> {
    type Output = Extended<T>;

    fn sub(self, rhs: Extended<T>) -> Extended<T> {
        self + (-rhs)
    }
}

impl<T: Scalar> Neg for Extended<T> {
    type Output = Extended<T>;

    fn neg(self) -> Extended<T> {
        match self {
            Extended::MinusInf => Extended::PlusInf,
            Extended::Finite(v) => Extended::Finite(-v),
            Extended::PlusInf => Extended::MinusInf,
        }
    }
}

impl<T: fmt::Display> fmt::Display for Extended<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::MinusInf => write!(f, "-inf"),
            Extended::Finite(v) => write!(f, "{v}"),
            Extended::PlusInf => write!(f, "+inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(parse_rational::<Q>("0.3").unwrap(), ratio::<Q>(3, 10));
        assert_eq!(parse_rational::<Q>("-1.25").unwrap(), ratio::<Q>(-5, 4));
        assert_eq!(parse_rational::<Q>("7/10").unwrap(), ratio::<Q>(7, 10));
        assert_eq!(parse_rational::<Q>("-3").unwrap(), int::<Q>(-3));
        assert_eq!(parse_rational::<Q>(".5").unwrap(), ratio::<Q>(1, 2));
        assert_eq!(
            parse_rational::<Q>("0.123456789012").unwrap(),
            ratio::<Q>(123_456_789_012, 1_000_000_000_000)
        );
    }

    #[test]
    fn rejects_malformed_literals() {
        for s in ["", "1/0", "a", "1.2.3", "--1", "1/", "/2", "1e3"] {
            assert!(parse_rational::<Q>(s).is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn extended_order_and_arithmetic() {
        let fin = Extended::Finite(int::<Q>(3));
        assert!(Extended::<Q>::MinusInf < fin);
        assert!(fin < Extended::PlusInf);
        assert_eq!(
            Extended::PlusInf + Extended::Finite(int::<Q>(1)),
            Extended::<Q>::PlusInf
        );
        assert_eq!(-Extended::<Q>::PlusInf, Extended::MinusInf);
    }

    #[test]
    #[should_panic(expected = "indeterminate")]
    fn infinity_minus_infinity_is_a_hard_error() {
        let _ = Extended::<Q>::PlusInf + Extended::MinusInf;
    }
}
