use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::field::{Coeff, Field};
use super::monomial::Monomial;
use super::order::TermOrder;
use super::var::{Sign, SignedVar, VarId};
use crate::error::{domain, Error, Result};

/// The ambient ring tag carried by every polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Ring {
    pub field: Field,
    pub order: TermOrder,
}

impl Ring {
    pub fn new(field: Field, order: TermOrder) -> Self {
        Ring { field, order }
    }

    pub fn check_same(self, other: Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.field, self.order)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: Coeff,
}

/// Sparse polynomial. Terms are strictly decreasing in the ring's term order
/// and have nonzero coefficients; the zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Self {
        Polynomial {
            ring,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: Ring, c: Coeff) -> Self {
        Self::monomial(ring, c, Monomial::one())
    }

    pub fn one(ring: Ring) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn monomial(ring: Ring, c: Coeff, mono: Monomial) -> Self {
        let coeff = ring.field.normalize(c);
        if coeff.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring,
            terms: vec![Term { mono, coeff }],
        }
    }

    pub fn var(ring: Ring, v: VarId) -> Self {
        Self::monomial(ring, Coeff::one(), Monomial::var(v))
    }

    pub fn from_signed_var(ring: Ring, sv: SignedVar) -> Self {
        match sv {
            SignedVar::Zero => Self::zero(ring),
            SignedVar::Var { var, sign } => {
                let p = Self::var(ring, var);
                match sign {
                    Sign::Plus => p,
                    Sign::Minus => p.neg(),
                }
            }
        }
    }

    /// Collects arbitrary terms: merges equal monomials, drops zeros, sorts.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Coeff)>>(ring: Ring, it: I) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in it {
            let e = acc.entry(m).or_insert_with(Coeff::zero);
            *e = ring.field.add(e, &c);
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { mono, coeff })
            .collect();
        terms.sort_by(|a, b| ring.order.cmp(&b.mono, &a.mono));
        Polynomial { ring, terms }
    }

    /// Terms already strictly decreasing with nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: Ring, terms: Vec<Term>) -> Self {
        let p = Polynomial { ring, terms };
        debug_assert!(p.is_well_formed());
        p
    }

    pub(crate) fn pop_leading(&mut self) -> Option<Term> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Total degree. The zero polynomial has no degree.
    pub fn degree(&self) -> Result<u32> {
        self.terms
            .iter()
            .map(|t| t.mono.degree())
            .max()
            .ok_or_else(|| domain("degree of the zero polynomial"))
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.mono.degree();
                self.terms.iter().all(|s| s.mono.degree() == d)
            }
        }
    }

    /// Variables that occur in some term, in precedence order.
    pub fn variables(&self) -> Vec<VarId> {
        let mut vs: Vec<VarId> = self.terms.iter().flat_map(|t| t.mono.support()).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// True if the term list is strictly decreasing with no zero coefficients.
    pub fn is_well_formed(&self) -> bool {
        self.terms.iter().all(|t| !t.coeff.is_zero())
            && self
                .terms
                .windows(2)
                .all(|w| self.ring.order.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater)
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(other.ring)?;
        Ok(self.merge(other, |c| c.clone()))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(other.ring)?;
        let f = self.ring.field;
        Ok(self.merge(other, |c| f.neg(c)))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.ring));
        }
        let f = self.ring.field;
        Ok(Polynomial::from_terms(
            self.ring,
            self.terms.iter().flat_map(|a| {
                other
                    .terms
                    .iter()
                    .map(move |b| (a.mono.mul(&b.mono), f.mul(&a.coeff, &b.coeff)))
            }),
        ))
    }

    pub fn neg(&self) -> Polynomial {
        let f = self.ring.field;
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.clone(),
                    coeff: f.neg(&t.coeff),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        let f = self.ring.field;
        let c = f.normalize(c.clone());
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.clone(),
                    coeff: f.mul(&t.coeff, &c),
                })
                .collect(),
        }
    }

    /// `c * m * self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        let f = self.ring.field;
        let c = f.normalize(c.clone());
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.mul(m),
                    coeff: f.mul(&t.coeff, &c),
                })
                .collect(),
        }
    }

    /// `self - c * m * g`, fused to avoid an intermediate allocation.
    pub(crate) fn sub_mul_term(&self, c: &Coeff, m: &Monomial, g: &Polynomial) -> Polynomial {
        let f = self.ring.field;
        let neg_c = f.neg(c);
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g
            .terms
            .iter()
            .map(|t| (t.mono.mul(m), f.mul(&t.coeff, &neg_c)))
            .peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some((bm, _))) => self.ring.order.cmp(&x.mono, bm),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => {
                    let (mono, coeff) = b.next().unwrap();
                    if !coeff.is_zero() {
                        out.push(Term { mono, coeff });
                    }
                }
                Ordering::Equal => {
                    let x = a.next().unwrap();
                    let (_, bc) = b.next().unwrap();
                    let coeff = f.add(&x.coeff, &bc);
                    if !coeff.is_zero() {
                        out.push(Term {
                            mono: x.mono.clone(),
                            coeff,
                        });
                    }
                }
            }
        }
        Polynomial {
            ring: self.ring,
            terms: out,
        }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = self
                    .ring
                    .field
                    .inv(lc)
                    .expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Normalizes the sign so the leading coefficient is positive (for
    /// rationals) and clears the content. Useful for display only.
    pub fn primitive_form(&self) -> Polynomial {
        if self.is_zero() || self.ring.field != Field::Rational {
            return self.monic();
        }
        use num_bigint::BigInt;
        use num_integer::Integer;
        let mut lcm_den = BigInt::one();
        for t in &self.terms {
            lcm_den = lcm_den.lcm(t.coeff.denom());
        }
        let mut gcd_num = BigInt::zero();
        for t in &self.terms {
            let n = t.coeff.numer() * (&lcm_den / t.coeff.denom());
            gcd_num = gcd_num.gcd(&n);
        }
        let mut factor = Coeff::new(lcm_den, gcd_num);
        if self.terms[0].coeff.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Coefficient size in bits (max over terms).
    pub fn coeff_bits(&self) -> u64 {
        self.terms
            .iter()
            .map(|t| Field::bits(&t.coeff))
            .max()
            .unwrap_or(0)
    }

    fn merge(&self, other: &Polynomial, map_b: impl Fn(&Coeff) -> Coeff) -> Polynomial {
        let f = self.ring.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => self.ring.order.cmp(&x.mono, &y.mono),
                (None, None) => unreachable!(),
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let y = &other.terms[j];
                    out.push(Term {
                        mono: y.mono.clone(),
                        coeff: map_b(&y.coeff),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(&self.terms[i].coeff, &map_b(&other.terms[j].coeff));
                    if !c.is_zero() {
                        out.push(Term {
                            mono: self.terms[i].mono.clone(),
                            coeff: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            ring: self.ring,
            terms: out,
        }
    }

    /// Re-sorts the polynomial into another ring (field and order). The
    /// coefficients are re-normalized for the target field.
    pub fn to_ring(&self, ring: Ring) -> Polynomial {
        Polynomial::from_terms(
            ring,
            self.terms.iter().map(|t| (t.mono.clone(), t.coeff.clone())),
        )
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<'a> std::ops::$tr<&'a Polynomial> for &'a Polynomial {
            type Output = Polynomial;

            /// Panics if the operands live in different rings; use the
            /// `try_` method for a fallible version.
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                self.$inner(rhs).expect("polynomials from different rings")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, j: usize) -> Polynomial {
        Polynomial::var(Ring::default(), VarId::new(i, j).unwrap())
    }

    #[test]
    fn additive_identity_and_cancellation() {
        let f = &x(1, 2) + &x(3, 4);
        let zero = Polynomial::zero(Ring::default());
        assert_eq!(&f + &zero, f);
        assert!((&f + &f.neg()).is_zero());
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn products() {
        let one = Polynomial::one(Ring::default());
        let f = &x(1, 2) - &x(1, 3);
        assert_eq!(&f * &one, f);
        let g = &x(1, 2) + &x(1, 3);
        let prod = &g * &f;
        let expect = &(&x(1, 2) * &x(1, 2)) - &(&x(1, 3) * &x(1, 3));
        assert_eq!(prod, expect);
        assert!(prod.is_well_formed());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = x(1, 2);
        let b = Polynomial::var(
            Ring::new(Field::Rational, TermOrder::Lex),
            VarId::new(1, 2).unwrap(),
        );
        assert!(matches!(a.try_add(&b), Err(Error::RingMismatch { .. })));
        let c = Polynomial::var(
            Ring::new(Field::Prime(7), TermOrder::DegRevLex),
            VarId::new(1, 2).unwrap(),
        );
        assert!(a.try_mul(&c).is_err());
    }

    #[test]
    fn zero_has_no_degree() {
        assert!(Polynomial::zero(Ring::default()).degree().is_err());
        assert_eq!((&x(1, 2) * &x(2, 3)).degree().unwrap(), 2);
    }

    #[test]
    fn primitive_form_clears_content() {
        let r = Ring::default();
        let half = Coeff::new(1.into(), 2.into());
        let f = (&x(1, 2) - &x(2, 3).scale(&Coeff::from_integer(3.into()))).scale(&-half);
        let p = f.primitive_form();
        assert_eq!(p, &x(1, 2) - &x(2, 3).scale(&Coeff::from_integer(3.into())));
        assert_eq!(p.ring(), r);
    }
}
