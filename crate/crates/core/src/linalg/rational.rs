//! Rational numbers with a machine-word fast path.
//!
//! Almost every entry the engine produces is a small integer, so fractions
//! live in an `i64` pair until an operation overflows, at which point the
//! value moves to an arbitrary-precision [`BigRational`]. The representation
//! is canonical: a value that fits the small form is never stored big, so
//! derived equality is value equality.

use alloc::boxed::Box;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

#[derive(Clone, PartialEq, Eq)]
pub enum Rat {
    /// Reduced fraction with positive denominator; numerator never `i64::MIN`.
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl Rat {
    pub const ZERO: Rat = Rat::Small(0, 1);
    pub const ONE: Rat = Rat::Small(1, 1);

    pub fn from_i64(v: i64) -> Rat {
        if v == i64::MIN {
            Rat::Big(Box::new(BigRational::from_integer(BigInt::from(v))))
        } else {
            Rat::Small(v, 1)
        }
    }

    pub fn from_bigint(v: BigInt) -> Rat {
        Rat::from_big(BigRational::from_integer(v))
    }

    /// `num / den`; panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Rat {
        Rat::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Rat {
        assert!(den != 0, "zero denominator");
        if num == 0 {
            return Rat::ZERO;
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        if n > i64::MIN as i128 && n <= i64::MAX as i128 && d <= i64::MAX as i128 {
            Rat::Small(n as i64, d as i64)
        } else {
            Rat::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d))))
        }
    }

    fn from_big(r: BigRational) -> Rat {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN => Rat::Small(n, d),
            _ => Rat::Big(Box::new(r)),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rat::Big(b) => (**b).clone(),
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small(0, _))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rat::Small(_, d) => *d == 1,
            Rat::Big(b) => b.is_integer(),
        }
    }

    pub fn denominator(&self) -> BigInt {
        match self {
            Rat::Small(_, d) => BigInt::from(*d),
            Rat::Big(b) => b.denom().clone(),
        }
    }

    pub fn add(&self, other: &Rat) -> Rat {
        match (self, other) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    return Rat::from_i128(*a as i128 + *c as i128, 1);
                }
                Rat::from_i128(*a as i128 * *d as i128 + *c as i128 * *b as i128, *b as i128 * *d as i128)
            }
            _ => Rat::from_big(self.to_big() + other.to_big()),
        }
    }

    pub fn sub(&self, other: &Rat) -> Rat {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Rat) -> Rat {
        match (self, other) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    return Rat::from_i128(*a as i128 * *c as i128, 1);
                }
                Rat::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rat::from_big(self.to_big() * other.to_big()),
        }
    }

    pub fn neg(&self) -> Rat {
        match self {
            Rat::Small(a, b) => Rat::Small(-a, *b),
            Rat::Big(r) => Rat::from_big(-(**r).clone()),
        }
    }

    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "inverse of zero in QQ");
        match self {
            Rat::Small(a, b) => Rat::from_i128(*b as i128, *a as i128),
            Rat::Big(r) => Rat::from_big(r.recip()),
        }
    }

    pub fn div(&self, other: &Rat) -> Rat {
        self.mul(&other.recip())
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rat::Small(a, _) => *a < 0,
            Rat::Big(r) => r.is_negative(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Rat::Small(a, b) => *a == 1 && *b == 1,
            Rat::Big(r) => r.is_one(),
        }
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::ZERO
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(a, 1) => write!(f, "{a}"),
            Rat::Small(a, b) => write!(f, "{a}/{b}"),
            Rat::Big(r) => write!(f, "{r}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rat::from_i64(i64::MAX).mul(&Rat::from_i64(4));
        assert!(matches!(big, Rat::Big(_)));
        let back = big.div(&Rat::from_i64(4));
        assert_eq!(back, Rat::from_i64(i64::MAX));
        assert!(matches!(back, Rat::Small(..)));
        assert!(matches!(Rat::from_i64(i64::MIN), Rat::Big(_)));
        assert_eq!(Rat::from_i64(i64::MIN).neg().sub(&Rat::ONE), Rat::from_i64(i64::MAX));
    }

    #[test]
    fn normalization() {
        assert_eq!(Rat::new(2, -4), Rat::Small(-1, 2));
        assert_eq!(Rat::new(0, -5), Rat::ZERO);
        assert_eq!(Rat::new(3, 6).recip(), Rat::from_i64(2));
        assert_eq!(alloc::format!("{}", Rat::new(-3, 9)), "-1/3");
    }

    proptest! {
        #[test]
        fn agrees_with_bigrational(a in any::<i64>(), b in 1i64..i64::MAX, c in any::<i64>(), d in 1i64..i64::MAX) {
            let x = Rat::new(a, b);
            let y = Rat::new(c, d);
            let bx = BigRational::new(BigInt::from(a), BigInt::from(b));
            let by = BigRational::new(BigInt::from(c), BigInt::from(d));
            prop_assert_eq!(x.add(&y), Rat::from_big(&bx + &by));
            prop_assert_eq!(x.mul(&y), Rat::from_big(&bx * &by));
            prop_assert_eq!(x.sub(&y), Rat::from_big(&bx - &by));
        }
    }
}
