//! Pfaffians `[u_1,...,u_2p]` of the generic skew-symmetric matrix.
//!
//! Index tuples follow antisymmetric conventions: an unsorted tuple carries
//! the sign of its sorting permutation and a tuple with a repeated index is
//! zero. This is what makes the De Concini-Procesi relation hold verbatim
//! when it is written with colliding or unsorted indices.

mod identity;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::polyring::{make_var, Polynomial, Ring};

pub use identity::{identity_check, IdentityReport, Trials};

/// An even-length list of matrix indices, possibly unsorted or repeating.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct IndexTuple(Vec<usize>);

/// Result of sorting an [`IndexTuple`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Canonical {
    /// Some index repeats: the pfaffian vanishes.
    Repeated,
    /// `sign` is `+1` or `-1` (parity of the sorting permutation).
    Sorted { sign: i32, indices: Vec<usize> },
}

impl IndexTuple {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if !indices.len().is_multiple_of(2) {
            return Err(domain(format!(
                "pfaffian index tuple {indices:?} has odd length; even length required"
            )));
        }
        Ok(IndexTuple(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&u| u == 0 || u > n) {
            Some(u) => Err(domain(format!("index {u} outside 1..={n}"))),
            None => Ok(()),
        }
    }

    pub fn canonical(&self) -> Canonical {
        let mut v = self.0.clone();
        // insertion sort, counting transpositions
        let mut swaps = 0usize;
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                v.swap(j - 1, j);
                swaps += 1;
                j -= 1;
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Canonical::Repeated;
        }
        Canonical::Sorted {
            sign: if swaps.is_multiple_of(2) { 1 } else { -1 },
            indices: v,
        }
    }
}

impl TryFrom<Vec<usize>> for IndexTuple {
    type Error = crate::Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        IndexTuple::new(v)
    }
}

impl From<IndexTuple> for Vec<usize> {
    fn from(t: IndexTuple) -> Self {
        t.0
    }
}

/// Shorthand for tests and internal callers that know the length is even.
#[cfg(test)]
pub(crate) fn tuple(indices: &[usize]) -> IndexTuple {
    IndexTuple::new(indices.to_vec()).expect("even-length tuple")
}

/// Pfaffian by expansion along the first index:
/// `pf(u_1..u_2p) = sum_{h=2}^{2p} (-1)^h x[u_1,u_h] pf(u without u_1,u_h)`.
/// Subpfaffians are memoized per call.
pub fn pfaffian(tu: &IndexTuple, n: usize, ring: Ring) -> Result<Polynomial> {
    tu.check_range(n)?;
    let (sign, sorted) = match tu.canonical() {
        Canonical::Repeated => return Ok(Polynomial::zero(ring)),
        Canonical::Sorted { sign, indices } => (sign, indices),
    };
    if sorted.len() > 64 {
        return Err(domain(
            "pfaffians of more than 64 indices are not supported",
        ));
    }
    let full: u64 = if sorted.len() == 64 {
        u64::MAX
    } else {
        (1u64 << sorted.len()) - 1
    };
    let mut memo = HashMap::new();
    let pf = expand(&sorted, full, n, ring, &mut memo)?;
    Ok(if sign < 0 { pf.neg() } else { pf })
}

fn expand(
    idx: &[usize],
    mask: u64,
    n: usize,
    ring: Ring,
    memo: &mut HashMap<u64, Polynomial>,
) -> Result<Polynomial> {
    if mask == 0 {
        return Ok(Polynomial::one(ring));
    }
    if let Some(p) = memo.get(&mask) {
        return Ok(p.clone());
    }
    let first = mask.trailing_zeros() as usize;
    let rest = mask & !(1u64 << first);
    let mut acc = Polynomial::zero(ring);
    let mut position = 1usize;
    let mut bits = rest;
    while bits != 0 {
        let h = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        position += 1;
        let entry = Polynomial::from_signed_var(ring, make_var(idx[first], idx[h], n)?);
        let minor = expand(idx, rest & !(1u64 << h), n, ring, memo)?;
        let term = &entry * &minor;
        acc = if position.is_multiple_of(2) {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    memo.insert(mask, acc.clone());
    Ok(acc)
}

/// Pfaffian as a signed sum over the perfect matchings of the index set;
/// the sign of a matching is `(-1)^(number of crossing pairs)`.
pub fn pfaffian_matchings(tu: &IndexTuple, n: usize, ring: Ring) -> Result<Polynomial> {
    tu.check_range(n)?;
    let (sign, sorted) = match tu.canonical() {
        Canonical::Repeated => return Ok(Polynomial::zero(ring)),
        Canonical::Sorted { sign, indices } => (sign, indices),
    };
    let mut matchings = Vec::new();
    let mut current = Vec::new();
    let remaining: Vec<usize> = (0..sorted.len()).collect();
    enumerate_matchings(&remaining, &mut current, &mut matchings);
    let mut acc = Polynomial::zero(ring);
    for m in &matchings {
        let crossings = m
            .iter()
            .enumerate()
            .flat_map(|(k, &(a, b))| m[k + 1..].iter().map(move |&(c, d)| (a, b, c, d)))
            .filter(|&(a, b, c, d)| (a < c && c < b && b < d) || (c < a && a < d && d < b))
            .count();
        let mut prod = Polynomial::one(ring);
        for &(a, b) in m {
            let e = Polynomial::from_signed_var(ring, make_var(sorted[a], sorted[b], n)?);
            prod = &prod * &e;
        }
        acc = if crossings % 2 == 0 {
            &acc + &prod
        } else {
            &acc - &prod
        };
    }
    Ok(if sign < 0 { acc.neg() } else { acc })
}

fn enumerate_matchings(
    remaining: &[usize],
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if remaining.is_empty() {
        out.push(current.clone());
        return;
    }
    let a = remaining[0];
    for k in 1..remaining.len() {
        let b = remaining[k];
        let rest: Vec<usize> = remaining[1..].iter().copied().filter(|&x| x != b).collect();
        current.push((a, b));
        enumerate_matchings(&rest, current, out);
        current.pop();
    }
}

/// Residual `LHS - RHS` of the De Concini-Procesi relation
///
/// `[c][d] - sum_h [c_1..c_{h-1},d_1,c_{h+1}..c_p][c_h,d_2..d_m]
///  = sum_{k>=2} (-1)^(k-1) [d_k,d_1,c_1..c_p][d_2..^d_k..d_m]`.
///
/// The relation holds for every choice of indices, so the result is
/// always the zero polynomial.
pub fn dcp_residual(c: &IndexTuple, d: &IndexTuple, n: usize, ring: Ring) -> Result<Polynomial> {
    c.check_range(n)?;
    d.check_range(n)?;
    if d.is_empty() {
        return Err(domain("the second tuple must be nonempty"));
    }
    let (c, d) = (c.indices(), d.indices());
    let pf = |v: Vec<usize>| pfaffian(&IndexTuple::new(v)?, n, ring);

    let mut lhs = &pf(c.to_vec())? * &pf(d.to_vec())?;
    for h in 0..c.len() {
        let mut left = c.to_vec();
        left[h] = d[0];
        let mut right = vec![c[h]];
        right.extend_from_slice(&d[1..]);
        lhs = &lhs - &(&pf(left)? * &pf(right)?);
    }

    let mut rhs = Polynomial::zero(ring);
    for k in 1..d.len() {
        let mut left = vec![d[k], d[0]];
        left.extend_from_slice(c);
        let right: Vec<usize> = d[1..]
            .iter()
            .enumerate()
            .filter(|&(i, _)| i + 1 != k)
            .map(|(_, &x)| x)
            .collect();
        let term = &pf(left)? * &pf(right)?;
        // (-1)^(k-1) with 1-based k' = k+1
        rhs = if k % 2 == 1 {
            &rhs - &term
        } else {
            &rhs + &term
        };
    }
    Ok(&lhs - &rhs)
}
