//! Krull dimension of `K[vars]/I` from the leading monomials of a Groebner
//! basis of `I`.
//!
//! The dimension is the size of the largest set `S` of variables such that
//! no leading monomial is supported inside `S`. Equivalently the
//! codimension is the size of the smallest variable set meeting the support
//! of every leading monomial, which is what the search below computes.

use crate::error::{domain, Result};
use crate::polyring::{Monomial, VarId};

/// Largest ring handled by [`dimension_exhaustive`].
pub const EXHAUSTIVE_LIMIT: usize = 24;

fn supports(lms: &[Monomial], vars: &[VarId]) -> Result<Vec<u32>> {
    if vars.len() > 32 {
        return Err(domain("more than 32 variables in dimension computation"));
    }
    lms.iter()
        .map(|m| {
            let mut mask = 0u32;
            for v in m.support() {
                let pos = vars
                    .binary_search(&v)
                    .map_err(|_| domain(format!("leading monomial uses {v} outside the ring")))?;
                mask |= 1 << pos;
            }
            Ok(mask)
        })
        .collect()
}

/// Krull dimension by branch and bound on a minimum hitting set.
///
/// `vars` must be sorted. Returns an error for the unit ideal (a constant
/// leading monomial), whose quotient is the zero ring.
pub fn dimension(lms: &[Monomial], vars: &[VarId]) -> Result<usize> {
    let mut sups = supports(lms, vars)?;
    if sups.contains(&0) {
        return Err(domain("unit ideal has no dimension"));
    }
    sups.sort_by_key(|s| (s.count_ones(), *s));
    sups.dedup();
    // keep only minimal supports
    let minimal: Vec<u32> = sups
        .iter()
        .copied()
        .filter(|&s| !sups.iter().any(|&t| t != s && t & s == t))
        .collect();
    let mut best = vars.len();
    hitting_set(&minimal, 0, 0, &mut best);
    Ok(vars.len() - best)
}

fn hitting_set(sups: &[u32], chosen: u32, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    // first unhit support with the fewest variables
    let unhit = sups
        .iter()
        .filter(|&&s| s & chosen == 0)
        .min_by_key(|s| s.count_ones());
    match unhit {
        None => *best = size,
        Some(&s) => {
            if size + 1 >= *best {
                return;
            }
            let mut bits = s;
            while bits != 0 {
                let b = bits & bits.wrapping_neg();
                bits &= bits - 1;
                hitting_set(sups, chosen | b, size + 1, best);
            }
        }
    }
}

/// Krull dimension by enumerating every variable subset. Exponential; used
/// to cross-check [`dimension`] on small rings.
pub fn dimension_exhaustive(lms: &[Monomial], vars: &[VarId]) -> Result<usize> {
    if vars.len() > EXHAUSTIVE_LIMIT {
        return Err(domain(format!(
            "exhaustive dimension limited to {EXHAUSTIVE_LIMIT} variables"
        )));
    }
    let sups = supports(lms, vars)?;
    if sups.contains(&0) {
        return Err(domain("unit ideal has no dimension"));
    }
    let mut best = 0;
    for subset in 0u32..(1u32 << vars.len()) {
        let size = subset.count_ones() as usize;
        if size > best && sups.iter().all(|&s| s & !subset != 0) {
            best = size;
        }
    }
    Ok(best)
}
