use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Field, FieldDescriptor, FieldError};

/// The rational numbers, backed by arbitrary-precision fractions so no
/// operation can overflow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational, FieldError> {
        if a.is_zero() {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn order(&self) -> Option<u64> {
        None
    }
    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rational
    }
    fn parse(&self, text: &str) -> Result<BigRational, FieldError> {
        let t = text.trim();
        let err = |reason: &str| FieldError::Parse { text: text.to_string(), reason: reason.to_string() };
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
        let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
        if den.is_zero() {
            return Err(err("zero denominator"));
        }
        Ok(BigRational::new(num, den))
    }
    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::ArithOp;

    fn is_canonical(a: &BigRational) -> bool {
        use num_integer::Integer;
        use num_traits::Signed;
        a.denom().is_positive() && a.numer().gcd(a.denom()).is_one()
    }

    #[test]
    fn fraction_arithmetic() {
        let q = Rationals;
        let half = q.parse("1/2").unwrap();
        let third = q.parse("1/3").unwrap();
        let s = q.arith(&half, &third, ArithOp::Add).unwrap();
        assert_eq!(q.format(&s), "5/6");
        assert!(is_canonical(&s));
        assert_eq!(q.arith(&half, &q.zero(), ArithOp::Div), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn parse_normalizes() {
        let q = Rationals;
        let a = q.parse("4/-6").unwrap();
        assert_eq!(q.format(&a), "-2/3");
        assert!(is_canonical(&a));
        assert_eq!(q.format(&q.parse("7").unwrap()), "7");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
    }

    #[test]
    fn no_overflow_on_large_products() {
        let q = Rationals;
        let mut acc = q.one();
        let big = q.parse("9223372036854775807/3").unwrap();
        for _ in 0..8 {
            acc = q.mul(&acc, &big);
        }
        let back = (0..8).fold(acc, |a, _| q.div(&a, &big).unwrap());
        assert_eq!(back, q.one());
    }
}
