use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{malformed, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Largest modulus accepted for prime fields; products of two residues
/// must fit in a `u64`.
pub const MAX_PRIME: u64 = u32::MAX as u64;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// The field a matrix or subspace lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p > MAX_PRIME {
            return Err(malformed(format!("prime modulus {p} exceeds supported maximum {MAX_PRIME}")));
        }
        if !is_prime(p) {
            return Err(malformed(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(Rational::zero()),
            Field::Prime(p) => Scalar::Prime(Fp { residue: 0, modulus: p }),
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(int(n)),
            Field::Prime(p) => Scalar::Prime(Fp::new(n, p)),
        }
    }

    /// Embeds a rational; over `F_p` the denominator must be invertible.
    pub fn from_rational(self, q: &Rational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Rational(q.clone())),
            Field::Prime(p) => {
                let modulus = BigInt::from(p);
                let reduce = |n: &BigInt| -> u64 {
                    let r = ((n % &modulus) + &modulus) % &modulus;
                    r.try_into().expect("residue below modulus")
                };
                let num = Fp { residue: reduce(q.numer()), modulus: p };
                let den = Fp { residue: reduce(q.denom()), modulus: p };
                let inv = den
                    .inv()
                    .ok_or_else(|| malformed(format!("denominator of {q} vanishes mod {p}")))?;
                Ok(Scalar::Prime(num.mul(inv)))
            }
        }
    }

    pub fn contains(self, s: &Scalar) -> bool {
        s.field() == self
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// Element of `F_p` with its residue in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    residue: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(n: i64, p: u64) -> Fp {
        let r = (n as i128).rem_euclid(p as i128) as u64;
        Fp { residue: r, modulus: p }
    }

    pub fn residue(self) -> u64 {
        self.residue
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    fn add(self, o: Fp) -> Fp {
        Fp { residue: (self.residue + o.residue) % self.modulus, modulus: self.modulus }
    }

    fn neg(self) -> Fp {
        Fp { residue: (self.modulus - self.residue) % self.modulus, modulus: self.modulus }
    }

    fn mul(self, o: Fp) -> Fp {
        Fp { residue: (self.residue * o.residue) % self.modulus, modulus: self.modulus }
    }

    fn inv(self) -> Option<Fp> {
        if self.residue == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let mut base = self.residue;
        let mut exp = self.modulus - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.modulus;
            }
            base = base * base % self.modulus;
            exp >>= 1;
        }
        Some(Fp { residue: acc, modulus: self.modulus })
    }
}

/// A field element. Arithmetic between elements of different fields is a
/// programming error and panics; matrices validate field membership once
/// at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rational(Rational),
    Prime(Fp),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime(x) => Field::Prime(x.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime(x) => x.residue == 0,
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime(a), Scalar::Prime(b)) if a.modulus == b.modulus => Scalar::Prime(a.add(*b)),
            _ => panic!("mixed-field arithmetic: {self:?} + {o:?}"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime(a) => Scalar::Prime(a.neg()),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime(a), Scalar::Prime(b)) if a.modulus == b.modulus => Scalar::Prime(a.mul(*b)),
            _ => panic!("mixed-field arithmetic: {self:?} * {o:?}"),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(a) if a.is_zero() => None,
            Scalar::Rational(a) => Some(Scalar::Rational(a.recip())),
            Scalar::Prime(a) => a.inv().map(Scalar::Prime),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Prime(x) => write!(f, "{}", x.residue),
        }
    }
}

/// Sign of a rational as -1, 0 or 1.
pub fn signum(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn prime_field_inverse_and_reduction() {
        let f = Field::prime(7).unwrap();
        let three = f.from_i64(3);
        let inv = three.inv().unwrap();
        assert_eq!(three.mul(&inv), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert_eq!(f.from_rational(&rat(1, 2)).unwrap(), f.from_i64(4));
        assert!(f.from_rational(&rat(1, 7)).is_err());
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2).is_ok());
    }

    #[test]
    fn rationals_are_reduced() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(1, -2).denom(), &BigInt::from(2));
        assert!(rat(3, 3).is_one());
    }
}
