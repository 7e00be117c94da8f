//! Coefficient fields: the rationals and prime fields with word-size moduli.
//!
//! `Coeff` values are always canonical: rationals are stored reduced (the
//! `num` crate keeps them that way) and prime-field residues lie in `[0, p)`.
//! Arithmetic goes through the owning [`Field`] so the modulus is at hand;
//! mixing coefficients from different fields is a caller bug and panics.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;

/// A coefficient field: `char = 0` (rationals) or a prime `p` fitting a word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    /// The prime field `F_p`; the modulus is checked prime at construction.
    Prime(u64),
}

/// One coefficient, tagged by field kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rat(BigRational),
    Mod(u64),
}

impl Field {
    /// Builds the field of characteristic `ch` (0 for the rationals).
    pub fn new(ch: u64) -> Result<Field, String> {
        if ch == 0 {
            Ok(Field::Rationals)
        } else if ch >= (1 << 62) {
            Err(format!(
                "characteristic {ch} does not fit a machine word with headroom"
            ))
        } else if !is_prime_u64(ch) {
            Err(format!("characteristic {ch} is not prime"))
        } else {
            Ok(Field::Prime(ch))
        }
    }

    /// The characteristic (0 for the rationals).
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            Field::Rationals => Coeff::Rat(BigRational::zero()),
            Field::Prime(_) => Coeff::Mod(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            Field::Rationals => Coeff::Rat(BigRational::one()),
            Field::Prime(_) => Coeff::Mod(1),
        }
    }

    /// The image of an integer in the field.
    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            Field::Rationals => Coeff::Rat(BigRational::from_integer(BigInt::from(n))),
            // p < 2^62 (checked in `new`), so it fits an i64.
            Field::Prime(p) => Coeff::Mod(n.rem_euclid(*p as i64) as u64),
        }
    }

    /// A rational a/b mapped into the field; `b` must not vanish (mod p).
    pub fn from_fraction(&self, a: i64, b: i64) -> Result<Coeff, String> {
        if b == 0 {
            return Err("zero denominator".into());
        }
        match self {
            Field::Rationals => Ok(Coeff::Rat(BigRational::new(
                BigInt::from(a),
                BigInt::from(b),
            ))),
            Field::Prime(_) => {
                let bb = self.from_i64(b);
                if self.is_zero(&bb) {
                    return Err(format!(
                        "denominator {b} vanishes in characteristic {}",
                        self.characteristic()
                    ));
                }
                Ok(self.mul(&self.from_i64(a), &self.inv(&bb)))
            }
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(x) => x.is_zero(),
            Coeff::Mod(x) => *x == 0,
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(x) => x.is_one(),
            Coeff::Mod(x) => *x == 1,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (Field::Prime(p), Coeff::Mod(x), Coeff::Mod(y)) => {
                let s = x + y;
                Coeff::Mod(if s >= *p { s - p } else { s })
            }
            _ => panic!("coefficient from a different field"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Field::Rationals, Coeff::Rat(x)) => Coeff::Rat(-x),
            (Field::Prime(p), Coeff::Mod(x)) => Coeff::Mod(if *x == 0 { 0 } else { p - x }),
            _ => panic!("coefficient from a different field"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (Field::Prime(p), Coeff::Mod(x), Coeff::Mod(y)) => {
                Coeff::Mod((((*x as u128) * (*y as u128)) % (*p as u128)) as u64)
            }
            _ => panic!("coefficient from a different field"),
        }
    }

    /// Multiplicative inverse; the argument must be nonzero.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Field::Rationals, Coeff::Rat(x)) => {
                assert!(!x.is_zero(), "inverse of zero");
                Coeff::Rat(x.recip())
            }
            (Field::Prime(p), Coeff::Mod(x)) => {
                assert!(*x != 0, "inverse of zero");
                Coeff::Mod(pow_mod(*x, p - 2, *p))
            }
            _ => panic!("coefficient from a different field"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }

    /// Renders a coefficient; prime-field residues print as `0..p-1`.
    pub fn format(&self, a: &Coeff) -> String {
        match a {
            Coeff::Rat(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            Coeff::Mod(x) => x.to_string(),
        }
    }

    /// True when the rational is negative; used only for sign-aware printing.
    pub fn is_display_negative(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(x) => x.is_negative(),
            Coeff::Mod(_) => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the witness set below is exact for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(101));
        assert!(is_prime_u64(32003));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(32001));
        assert!(is_prime_u64((1 << 61) - 1));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::new(101).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a, Coeff::Mod(100));
        let b = f.inv(&f.from_i64(2));
        assert_eq!(f.mul(&b, &f.from_i64(2)), f.one());
        assert_eq!(f.from_fraction(1, 2).unwrap(), b);
        assert!(f.from_fraction(1, 0).is_err());
    }

    #[test]
    fn char_p_denominator_vanishes() {
        let f = Field::new(5).unwrap();
        assert!(f.from_fraction(1, 10).is_err());
    }

    #[test]
    fn rational_arithmetic() {
        let f = Field::new(0).unwrap();
        let half = f.from_fraction(1, 2).unwrap();
        let third = f.from_fraction(1, 3).unwrap();
        let sum = f.add(&half, &third);
        assert_eq!(f.format(&sum), "5/6");
        assert_eq!(f.mul(&sum, &f.inv(&sum)), f.one());
    }
}
