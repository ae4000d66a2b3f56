//! Exact coefficient arithmetic: arbitrary-precision rationals or a prime field.

use crate::error::{Error, Result};
use alloc::format;
use core::fmt;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The coefficient field of a polynomial ring, fixed per ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FieldSpec {
    /// The rational numbers, stored reduced with positive denominator.
    Rationals,
    /// GF(p) for a prime p < 2^31.
    Prime(u32),
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<FieldSpec> {
        if p < 2 || p >= (1 << 31) {
            return Err(Error::InvalidRing(format!("characteristic {p} out of range")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("characteristic {p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn zero(&self) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Rat(BigRational::zero()),
            FieldSpec::Prime(_) => Coeff::Fp(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Rat(BigRational::one()),
            FieldSpec::Prime(_) => Coeff::Fp(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Rat(BigRational::from(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let p = *p as i64;
                Coeff::Fp(n.rem_euclid(p) as u64)
            }
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Coeff> {
        if den == 0 {
            return Err(Error::Precondition("zero denominator".into()));
        }
        match self {
            FieldSpec::Rationals => Ok(Coeff::Rat(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            FieldSpec::Prime(_) => {
                let d = self.from_i64(den);
                if d.is_zero() {
                    return Err(Error::Precondition(
                        "denominator vanishes in this characteristic".into(),
                    ));
                }
                Ok(self.mul(&self.from_i64(num), &self.inv(&d)?))
            }
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldSpec::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (FieldSpec::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => {
                Coeff::Fp((x + y) % (*p as u64))
            }
            _ => unreachable!("coefficient kind does not match field"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (FieldSpec::Rationals, Coeff::Rat(x)) => Coeff::Rat(-x),
            (FieldSpec::Prime(p), Coeff::Fp(x)) => {
                let p = *p as u64;
                Coeff::Fp(if *x == 0 { 0 } else { p - x })
            }
            _ => unreachable!("coefficient kind does not match field"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldSpec::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (FieldSpec::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => {
                Coeff::Fp((x * y) % (*p as u64))
            }
            _ => unreachable!("coefficient kind does not match field"),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Result<Coeff> {
        if a.is_zero() {
            return Err(Error::Precondition("inverse of zero".into()));
        }
        match (self, a) {
            (FieldSpec::Rationals, Coeff::Rat(x)) => Ok(Coeff::Rat(x.recip())),
            (FieldSpec::Prime(p), Coeff::Fp(x)) => Ok(Coeff::Fp(pow_mod(*x, *p as u64 - 2, *p as u64))),
            _ => unreachable!("coefficient kind does not match field"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

/// A field element; the variant must agree with the ring's [`FieldSpec`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coeff {
    Rat(BigRational),
    Fp(u64),
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(x) => x.is_zero(),
            Coeff::Fp(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rat(x) => x.is_one(),
            Coeff::Fp(x) => *x == 1,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(x) => {
                if x.denom().is_one() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            Coeff::Fp(x) => write!(f, "{x}"),
        }
    }
}

/// True when the coefficient is a negative rational (used only for printing).
pub fn displays_negative(c: &Coeff) -> bool {
    match c {
        Coeff::Rat(x) => x.is_negative(),
        Coeff::Fp(_) => false,
    }
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
