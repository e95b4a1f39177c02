//! Text form of polynomials: `c*x[i,j]*x[k,l]^e` terms joined by ` + ` and
//! ` - `, terms in ring order, variables in precedence order. A coefficient
//! of absolute value one is omitted in front of a nonconstant monomial.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::field::{Coeff, Field};
use super::monomial::Monomial;
use super::poly::{Polynomial, Ring};
use super::var::VarId;
use crate::error::{Error, Result};

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, t) in self.terms().iter().enumerate() {
            let (negative, abs) = match self.ring().field {
                Field::Rational => (t.coeff.is_negative(), t.coeff.abs()),
                Field::Prime(_) => (false, t.coeff.clone()),
            };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.mono.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.mono)?;
            } else {
                write!(f, "{abs}*{}", t.mono)?;
            }
        }
        Ok(())
    }
}

/// Parses the text form into `ring`. Accepts any term and variable order and
/// merges repeated monomials.
pub fn parse_polynomial(s: &str, ring: Ring) -> Result<Polynomial> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let mut terms: Vec<(Monomial, Coeff)> = Vec::new();
    p.skip_ws();
    let mut first = true;
    loop {
        p.skip_ws();
        if p.at_end() {
            if first {
                return Err(p.error("empty polynomial"));
            }
            break;
        }
        let mut sign = 1i32;
        match p.peek() {
            Some(b'+') if !first => {
                p.pos += 1;
            }
            Some(b'-') => {
                p.pos += 1;
                sign = -1;
            }
            _ if !first => return Err(p.error("expected '+' or '-'")),
            _ => {}
        }
        p.skip_ws();
        let (c, m) = p.term()?;
        let c = if sign < 0 { -c } else { c };
        terms.push((m, c));
        first = false;
    }
    Ok(Polynomial::from_terms(ring, terms))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", b as char)))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits
            .parse::<BigInt>()
            .map_err(|_| self.error("bad integer"))
    }

    fn usize(&mut self) -> Result<usize> {
        let v = self.integer()?;
        v.to_string()
            .parse::<usize>()
            .map_err(|_| self.error("index too large"))
    }

    fn term(&mut self) -> Result<(Coeff, Monomial)> {
        let mut coeff = Coeff::one();
        let mut factors: Vec<(VarId, u32)> = Vec::new();
        let mut first = true;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let num = self.integer()?;
                    self.skip_ws();
                    let den = if self.peek() == Some(b'/') {
                        self.pos += 1;
                        self.integer()?
                    } else {
                        BigInt::one()
                    };
                    if den.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    coeff *= Coeff::new(num, den);
                }
                Some(b'x') => {
                    self.pos += 1;
                    self.expect(b'[')?;
                    let i = self.usize()?;
                    self.expect(b',')?;
                    let j = self.usize()?;
                    self.expect(b']')?;
                    self.skip_ws();
                    let mut e = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        e = self
                            .usize()?
                            .try_into()
                            .map_err(|_| self.error("exponent too large"))?;
                    }
                    let v = VarId::new(i, j).map_err(|e| Error::Parse(e.to_string()))?;
                    factors.push((v, e));
                }
                _ if first => return Err(self.error("expected coefficient or variable")),
                _ => return Err(self.error("expected factor after '*'")),
            }
            first = false;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((coeff, Monomial::from_exponents(factors)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        let r = Ring::default();
        let f = parse_polynomial("x[1,2]*x[3,4] - x[1,3]*x[2,4] + x[1,4]*x[2,3]", r).unwrap();
        assert_eq!(f.len(), 3);
        // degrevlex: x14*x23 > x12*x34? compare lowest variables: x34 in first
        assert_eq!(
            f.to_string(),
            "x[1,4]*x[2,3] - x[1,3]*x[2,4] + x[1,2]*x[3,4]"
        );
        let g = parse_polynomial(&f.to_string(), r).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn coefficients_and_powers() {
        let r = Ring::default();
        let f = parse_polynomial("-3/2*x[1,2]^2 + 5 - x[2,3]*2", r).unwrap();
        assert_eq!(f.to_string(), "-3/2*x[1,2]^2 - 2*x[2,3] + 5");
        assert_eq!(parse_polynomial("0", r).unwrap().to_string(), "0");
        assert!(parse_polynomial("", r).is_err());
        assert!(parse_polynomial("x[2,1]", r).is_err());
        assert!(parse_polynomial("x[1,2] x[2,3]", r).is_err());
        assert!(parse_polynomial("1/0*x[1,2]", r).is_err());
    }
}
