//! Pfaffian ideals of ladders and the Groebner machinery that checks them.

mod certificate;
mod dimension;
mod groebner;

use std::collections::BTreeSet;

use crate::error::Result;
use crate::ladder::{cells, LadderSpec};
use crate::pfaffian::{pfaffian, IndexTuple};
use crate::polyring::{Polynomial, Ring};

pub use certificate::{verify_certificate, Certificate, CertificateCheck, CERTIFICATE_KIND};
pub use dimension::{dimension, dimension_exhaustive, EXHAUSTIVE_LIMIT};
pub use groebner::{buchberger, is_groebner_basis, GbBudget, GroebnerBasis};

/// Where a generator came from: block `block` (0-based) and the sorted
/// index set of the pfaffian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub block: usize,
    pub indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub poly: Polynomial,
    pub provenance: Option<Provenance>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    ring: Ring,
    gens: Vec<Generator>,
}

impl GeneratorSet {
    /// A generator set without provenance, e.g. a hand-written list.
    pub fn from_polys(ring: Ring, polys: Vec<Polynomial>) -> Self {
        GeneratorSet {
            ring,
            gens: polys
                .into_iter()
                .map(|poly| Generator {
                    poly,
                    provenance: None,
                })
                .collect(),
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn polys(&self) -> Vec<Polynomial> {
        self.gens.iter().map(|g| g.poly.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn groebner(&self, budget: GbBudget) -> Result<GroebnerBasis> {
        buchberger(&self.polys(), self.ring, budget)
    }
}

/// All `2t_k`-pfaffians with indices in `[a_k, b_k]`, for every block,
/// deduplicated by index set. Blocks too small for their size contribute
/// nothing.
pub fn generators(spec: &LadderSpec, ring: Ring) -> Result<GeneratorSet> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut gens = Vec::new();
    for (block, (c, &t)) in spec.corners.iter().zip(&spec.t).enumerate() {
        let size = 2 * t;
        if size > c.width() {
            continue;
        }
        for indices in subsets(c.a, c.b, size) {
            if !seen.insert(indices.clone()) {
                continue;
            }
            let poly = pfaffian(&IndexTuple::new(indices.clone())?, spec.n, ring)?;
            gens.push(Generator {
                poly,
                provenance: Some(Provenance { block, indices }),
            });
        }
    }
    Ok(GeneratorSet { ring, gens })
}

/// Increasing `size`-subsets of `lo..=hi`, in lexicographic order.
pub(crate) fn subsets(lo: usize, hi: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn rec(next: usize, hi: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        let need = size - cur.len();
        let mut x = next;
        while x + need <= hi + 1 {
            cur.push(x);
            rec(x + 1, hi, size, cur, out);
            cur.pop();
            x += 1;
        }
    }
    if lo <= hi + 1 {
        rec(lo, hi, size, &mut cur, &mut out);
    }
    out
}

/// Unique normal form of `f` modulo the ideal of `gb`; zero iff `f` is a
/// member.
pub fn reduce_mod(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.reduce(f)
}

/// True iff both generator lists have the same reduced Groebner basis.
pub fn ideals_equal(a: &GeneratorSet, b: &GeneratorSet, budget: GbBudget) -> Result<bool> {
    a.ring().check_same(b.ring())?;
    Ok(a.groebner(budget)? == b.groebner(budget)?)
}

/// Codimension of the ladder's pfaffian ideal inside the polynomial ring of
/// the ladder's variables, computed from a Groebner basis.
pub fn codim_gb(spec: &LadderSpec, ring: Ring, budget: GbBudget) -> Result<usize> {
    let gens = generators(spec, ring)?;
    let gb = gens.groebner(budget)?;
    codim_of_basis(&gb, spec)
}

pub(crate) fn codim_of_basis(gb: &GroebnerBasis, spec: &LadderSpec) -> Result<usize> {
    let vars = cells(spec).variables();
    let dim = dimension(&gb.leading_monomials(), &vars)?;
    Ok(vars.len() - dim)
}
