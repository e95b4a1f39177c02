use super::field::Coeff;
use super::poly::{Polynomial, Term};
use crate::error::{domain, Result};

/// Full multivariate division remainder of `f` by `divisors`.
///
/// Every term of the result is irreducible by the divisors' leading
/// monomials. At each step the first divisor (in list order) whose leading
/// monomial divides the current term is used, so the result is
/// deterministic for a given divisor order.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial> {
    for g in divisors {
        f.ring().check_same(g.ring())?;
        if g.is_zero() {
            return Err(domain("division by the zero polynomial"));
        }
    }
    let refs: Vec<&Polynomial> = divisors.iter().collect();
    Ok(reduce_by(f, &refs))
}

pub(crate) fn reduce_by(f: &Polynomial, divisors: &[&Polynomial]) -> Polynomial {
    let ring = f.ring();
    let field = ring.field;
    let mut rest = f.clone();
    let mut remainder: Vec<Term> = Vec::new();
    while let Some(lt) = rest.leading_term().cloned() {
        let hit = divisors.iter().find_map(|g| {
            let glm = g.leading_monomial()?;
            glm.quotient_of(&lt.mono).map(|q| (*g, q))
        });
        match hit {
            Some((g, q)) => {
                let glc = g.leading_coeff().expect("nonzero divisor");
                let c: Coeff = field.mul(&lt.coeff, &field.inv(glc).expect("nonzero"));
                rest = rest.sub_mul_term(&c, &q, g);
            }
            None => {
                rest.pop_leading();
                remainder.push(lt);
            }
        }
    }
    Polynomial::from_sorted_terms(ring, remainder)
}
