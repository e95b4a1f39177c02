use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Error, Result};

/// Coefficients are always held as `BigRational`; the field decides how a
/// value is normalized after each operation.
pub type Coeff = BigRational;

/// Suggested prime for modular runs.
pub const DEFAULT_PRIME: u64 = 32003;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rational,
    /// Integers modulo a prime; elements are stored as integers in `0..p`.
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(domain(format!("{p} is not prime")));
        }
        if p > u32::MAX as u64 {
            return Err(domain(format!("prime {p} too large (max 32 bits)")));
        }
        Ok(Field::Prime(p))
    }

    pub fn normalize(self, c: Coeff) -> Coeff {
        match self {
            Field::Rational => c,
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let num = c.numer().mod_floor_pos(&pb);
                let den = c.denom().mod_floor_pos(&pb);
                let inv = den.modpow(&(&pb - 2u32), &pb);
                BigRational::from_integer((num * inv) % pb)
            }
        }
    }

    pub fn from_int(self, v: i64) -> Coeff {
        self.normalize(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn add(self, a: &Coeff, b: &Coeff) -> Coeff {
        self.normalize(a + b)
    }

    pub fn sub(self, a: &Coeff, b: &Coeff) -> Coeff {
        self.normalize(a - b)
    }

    pub fn mul(self, a: &Coeff, b: &Coeff) -> Coeff {
        self.normalize(a * b)
    }

    pub fn neg(self, a: &Coeff) -> Coeff {
        self.normalize(-a)
    }

    pub fn inv(self, a: &Coeff) -> Result<Coeff> {
        if a.is_zero() {
            return Err(domain("inverse of zero"));
        }
        Ok(self.normalize(a.recip()))
    }

    /// Bit length of the largest numerator or denominator; the Groebner
    /// budget caps this.
    pub fn bits(c: &Coeff) -> u64 {
        c.numer().bits().max(c.denom().bits())
    }

    pub fn is_one(self, c: &Coeff) -> bool {
        c.is_one()
    }
}

trait ModFloorPos {
    fn mod_floor_pos(&self, m: &BigInt) -> BigInt;
}

impl ModFloorPos for BigInt {
    fn mod_floor_pos(&self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m
        } else {
            r
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

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rat"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rat" | "rational" | "Q" => Ok(Field::Rational),
            _ => match s.strip_prefix("fp:") {
                Some(p) => {
                    let p: u64 = p
                        .parse()
                        .map_err(|_| domain(format!("bad prime in field '{s}'")))?;
                    Field::prime(p)
                }
                None => Err(domain(format!(
                    "unknown field '{s}' (expected rat or fp:P)"
                ))),
            },
        }
    }
}
