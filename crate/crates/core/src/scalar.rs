//! Exact scalars: arbitrary-precision rationals or a prime field `F_p` with `p > 2`.
//!
//! Every scalar carries its field so mixed-field arithmetic is caught
//! immediately. No floating point appears anywhere in this crate.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};

/// The ground field: the rationals, or a prime field of odd characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    /// `F_p` for a prime `p > 2`.
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p <= 2 {
            return Err(Error::InvalidRing(format!(
                "prime field characteristic must exceed 2, got {p}"
            )));
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidRing(format!("prime {p} too large (need p < 2^31)")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rat(BigRational::zero()),
            Field::Prime(p) => FieldElement::Fp { p: *p, v: 0 },
        }
    }

    pub fn one(&self) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rat(BigRational::one()),
            Field::Prime(p) => FieldElement::Fp { p: *p, v: 1 },
        }
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => FieldElement::Fp { p: *p, v: n.rem_euclid(*p as i64) as u64 },
        }
    }

    /// Reduce an arbitrary-precision integer into the field.
    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rat(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let m = BigInt::from(*p);
                let r = ((n % &m) + &m) % &m;
                let digits = r.to_u64_digits().1;
                FieldElement::Fp { p: *p, v: digits.first().copied().unwrap_or(0) }
            }
        }
    }

    pub fn rational(&self, num: i64, den: i64) -> Result<FieldElement> {
        if den == 0 {
            return Err(Error::InvalidRing("zero denominator".into()));
        }
        let n = self.from_i64(num);
        let d = self.from_i64(den);
        if d.is_zero() {
            return Err(Error::InvalidRing(format!("denominator {den} vanishes in {self:?}")));
        }
        Ok(n.div(&d))
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of the ground field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rat(BigRational),
    Fp { p: u64, v: u64 },
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rat(_) => Field::Rationals,
            FieldElement::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rat(r) => r.is_zero(),
            FieldElement::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rat(r) => r.is_one(),
            FieldElement::Fp { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        match (self, other) {
            (FieldElement::Rat(a), FieldElement::Rat(b)) => FieldElement::Rat(a + b),
            (FieldElement::Fp { p, v: a }, FieldElement::Fp { p: q, v: b }) => {
                assert_eq!(p, q, "mixed prime fields");
                FieldElement::Fp { p: *p, v: (a + b) % p }
            }
            _ => panic!("mixed field arithmetic"),
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FieldElement {
        match self {
            FieldElement::Rat(a) => FieldElement::Rat(-a),
            FieldElement::Fp { p, v } => FieldElement::Fp { p: *p, v: (p - v) % p },
        }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        match (self, other) {
            (FieldElement::Rat(a), FieldElement::Rat(b)) => FieldElement::Rat(a * b),
            (FieldElement::Fp { p, v: a }, FieldElement::Fp { p: q, v: b }) => {
                assert_eq!(p, q, "mixed prime fields");
                FieldElement::Fp { p: *p, v: ((*a as u128 * *b as u128) % *p as u128) as u64 }
            }
            _ => panic!("mixed field arithmetic"),
        }
    }

    pub fn inv(&self) -> FieldElement {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            FieldElement::Rat(a) => FieldElement::Rat(a.recip()),
            FieldElement::Fp { p, v } => {
                // Fermat: v^(p-2) mod p.
                let mut base = *v as u128;
                let m = *p as u128;
                let mut e = p - 2;
                let mut acc: u128 = 1;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    e >>= 1;
                }
                FieldElement::Fp { p: *p, v: acc as u64 }
            }
        }
    }

    pub fn div(&self, other: &FieldElement) -> FieldElement {
        self.mul(&other.inv())
    }

    /// Integer power, with negative exponents going through the inverse.
    pub fn pow(&self, e: i64) -> FieldElement {
        if e == 0 {
            return self.field().one();
        }
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = self.field().one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElement::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}
