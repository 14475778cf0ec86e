use core::fmt;

use serde::Serialize;

use super::matrix::Matrix;
use super::rational::Rat;
use crate::error::{Error, Result};

/// Characteristic of the coefficient field: 0 for `Q`, otherwise a prime
/// `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct FieldSpec(u32);

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec(0);

    pub fn new(characteristic: u64) -> Result<FieldSpec> {
        if characteristic == 0 {
            return Ok(FieldSpec(0));
        }
        if characteristic >= 1 << 31 || !is_prime(characteristic) {
            return Err(Error::InvalidField(characteristic));
        }
        Ok(FieldSpec(characteristic as u32))
    }

    pub fn characteristic(self) -> u32 {
        self.0
    }

    pub fn is_rational(self) -> bool {
        self.0 == 0
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::RATIONALS
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            f.write_str("QQ")
        } else {
            write!(f, "GF({})", self.0)
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field given as a value. Elements are plain data; every operation goes
/// through the field so that `GF(p)` can carry its modulus.
pub trait Field: Clone + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn rank(&self, m: &Matrix<Self::Elem>) -> usize {
        super::elim::gauss_rank(self, m)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// `p` must be prime; use [`FieldSpec::new`] to validate untrusted input.
    pub fn new(p: u32) -> PrimeField {
        assert!(p >= 2, "GF(p) needs a prime modulus");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn pow(&self, mut base: u32, mut exp: u32) -> u32 {
        let p = self.p as u64;
        let mut acc = 1u64;
        let mut b = base as u64 % p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            exp >>= 1;
        }
        base = acc as u32;
        base
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec(self.p)
    }

    #[inline]
    fn zero(&self) -> u32 {
        0
    }

    #[inline]
    fn one(&self) -> u32 {
        1 % self.p
    }

    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }

    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + self.p as u64 - *b as u64) % self.p as u64) as u32
    }

    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }

    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }

    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero in GF({})", self.p);
        self.pow(*a, self.p - 2)
    }
}

/// The rationals, with elements kept as normalized fractions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rat;

    fn spec(&self) -> FieldSpec {
        FieldSpec::RATIONALS
    }

    fn zero(&self) -> Rat {
        Rat::ZERO
    }

    fn one(&self) -> Rat {
        Rat::ONE
    }

    fn from_i64(&self, v: i64) -> Rat {
        Rat::from_i64(v)
    }

    #[inline]
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a.add(b)
    }

    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a.sub(b)
    }

    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a.mul(b)
    }

    fn neg(&self, a: &Rat) -> Rat {
        a.neg()
    }

    fn inv(&self, a: &Rat) -> Rat {
        a.recip()
    }

    fn rank(&self, m: &Matrix<Rat>) -> usize {
        super::elim::bareiss_rank(m)
    }
}
