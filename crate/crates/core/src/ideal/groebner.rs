//! Buchberger's algorithm with the Gebauer-Moeller pair update and the
//! normal selection strategy.

use crate::error::{Error, Result};
use crate::polyring::{reduce_by, Monomial, Polynomial, Ring};

/// Resource caps for one Groebner basis computation. Exceeding any cap
/// yields [`Error::BudgetExhausted`], never a partial basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GbBudget {
    pub max_pairs: usize,
    pub max_basis: usize,
    pub max_coeff_bits: u64,
}

impl Default for GbBudget {
    fn default() -> Self {
        GbBudget {
            max_pairs: 200_000,
            max_basis: 20_000,
            max_coeff_bits: 4096,
        }
    }
}

/// A reduced Groebner basis: monic, inter-reduced, sorted by decreasing
/// leading monomial. Two ideals are equal iff their bases are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    /// True for the basis of the zero ideal.
    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| p.leading_monomial().expect("nonzero").clone())
            .collect()
    }

    /// Unique normal form of `f` modulo the ideal.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(f.ring())?;
        let refs: Vec<&Polynomial> = self.polys.iter().collect();
        Ok(reduce_by(f, &refs))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine {
    ring: Ring,
    budget: GbBudget,
    polys: Vec<Polynomial>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    processed: usize,
}

impl Engine {
    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i]
            .leading_monomial()
            .expect("basis elements are nonzero")
    }

    fn reduce(&self, f: &Polynomial) -> Polynomial {
        let refs: Vec<&Polynomial> = self.active.iter().map(|&i| &self.polys[i]).collect();
        reduce_by(f, &refs)
    }

    fn check_size(&self, h: &Polynomial) -> Result<()> {
        if h.coeff_bits() > self.budget.max_coeff_bits {
            return Err(Error::BudgetExhausted(format!(
                "coefficient size {} bits exceeds {}",
                h.coeff_bits(),
                self.budget.max_coeff_bits
            )));
        }
        if self.polys.len() >= self.budget.max_basis {
            return Err(Error::BudgetExhausted(format!(
                "basis size exceeds {}",
                self.budget.max_basis
            )));
        }
        Ok(())
    }

    /// Inserts a new monic element `h` (already reduced against the active
    /// basis) and updates the pair set.
    fn update(&mut self, h: Polynomial) -> Result<()> {
        self.check_size(&h)?;
        let hi = self.polys.len();
        self.polys.push(h);
        let lmh = self.lm(hi).clone();

        let mut candidates: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| Pair {
                i: g,
                j: hi,
                lcm: self.lm(g).lcm(&lmh),
            })
            .collect();

        // Drop a new pair whose lcm is a proper multiple of another new
        // pair's lcm, unless its leading monomials are coprime.
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = candidates.pop() {
            let coprime = self.lm(p.i).is_coprime(&lmh);
            let dominated = candidates
                .iter()
                .chain(kept.iter())
                .any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        let fresh: Vec<Pair> = kept
            .into_iter()
            .filter(|p| !self.lm(p.i).is_coprime(&lmh))
            .collect();

        let old = std::mem::take(&mut self.pairs);
        self.pairs = old
            .into_iter()
            .filter(|p| {
                !lmh.divides(&p.lcm)
                    || self.lm(p.i).lcm(&lmh) == p.lcm
                    || self.lm(p.j).lcm(&lmh) == p.lcm
            })
            .collect();
        self.pairs.extend(fresh);

        let polys = &self.polys;
        self.active
            .retain(|&g| !lmh.divides(polys[g].leading_monomial().expect("nonzero")));
        self.active.push(hi);
        Ok(())
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.ring.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                order
                    .cmp(&a.lcm, &b.lcm)
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_polynomial(&self, p: &Pair) -> Polynomial {
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let mf = f.leading_monomial().unwrap().quotient_of(&p.lcm).unwrap();
        let mg = g.leading_monomial().unwrap().quotient_of(&p.lcm).unwrap();
        let one = crate::polyring::Coeff::from_integer(1.into());
        // both are monic
        f.mul_term(&one, &mf).sub_mul_term(&one, &mg, g)
    }
}

/// Reduced Groebner basis of the ideal generated by `gens`. Zero
/// generators are ignored; all generators must live in `ring`.
pub fn buchberger(gens: &[Polynomial], ring: Ring, budget: GbBudget) -> Result<GroebnerBasis> {
    for g in gens {
        ring.check_same(g.ring())?;
    }
    let mut engine = Engine {
        ring,
        budget,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        processed: 0,
    };
    for g in gens {
        let h = engine.reduce(g);
        if !h.is_zero() {
            engine.update(h.monic())?;
        }
    }
    while let Some(pair) = engine.next_pair() {
        engine.processed += 1;
        if engine.processed > budget.max_pairs {
            return Err(Error::BudgetExhausted(format!(
                "more than {} critical pairs",
                budget.max_pairs
            )));
        }
        let s = engine.s_polynomial(&pair);
        let h = engine.reduce(&s);
        if !h.is_zero() {
            engine.update(h.monic())?;
        }
    }

    // The active set is minimal; inter-reduce tails.
    let minimal: Vec<Polynomial> = engine
        .active
        .iter()
        .map(|&i| engine.polys[i].clone())
        .collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let others: Vec<&Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, p)| p)
            .collect();
        let r = reduce_by(g, &others).monic();
        if r.leading_monomial() != g.leading_monomial() {
            return Err(Error::Invariant(
                "leading monomial changed during inter-reduction".into(),
            ));
        }
        reduced.push(r);
    }
    reduced.sort_by(|a, b| {
        ring.order
            .cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
    });
    if reduced.iter().any(|p| p.is_constant()) {
        reduced = vec![Polynomial::one(ring)];
    }
    Ok(GroebnerBasis {
        ring,
        polys: reduced,
    })
}

/// Buchberger's criterion, checked naively over all pairs. Independent of
/// the pair-elimination criteria used by [`buchberger`].
pub fn is_groebner_basis(polys: &[Polynomial]) -> bool {
    let nonzero: Vec<&Polynomial> = polys.iter().filter(|p| !p.is_zero()).collect();
    for (a, f) in nonzero.iter().enumerate() {
        for g in &nonzero[a + 1..] {
            let (lf, lg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
            let lcm = lf.lcm(lg);
            let field = f.ring().field;
            let cf = field.inv(f.leading_coeff().unwrap()).unwrap();
            let cg = field.inv(g.leading_coeff().unwrap()).unwrap();
            let s = f
                .mul_term(&cf, &lf.quotient_of(&lcm).unwrap())
                .sub_mul_term(&cg, &lg.quotient_of(&lcm).unwrap(), g);
            if !reduce_by(&s, &nonzero).is_zero() {
                return false;
            }
        }
    }
    true
}
