//! Elementary biliaison steps between ladder pfaffian varieties and the
//! descent chain to a linear variety.
//!
//! A step starts from a normalized spec `V` with some size at least 2. The
//! pivot block `k` shrinks to `(a_k+1, b_k-1)` with size `t_k-1`, giving
//! `V'`; splitting it into `(a_k, b_k-1)` and `(a_k+1, b_k)` with the same
//! size gives the variety `W` containing both.

mod trace;
mod verify;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ladder::{
    corner_ladder, is_normalized, normalization_issue, normalize, validate, LadderSpec, UpperCorner,
};
use crate::pfaffian::{pfaffian, IndexTuple};
use crate::polyring::{Polynomial, Ring};

pub use trace::CHAIN_KIND;
pub use trace::{render_chain, ChainTrace, StepTrace};
pub use verify::{
    verify_step, ItemReport, ItemStatus, Level, StepReport, VerifyOptions, DEFAULT_MAX_VARS,
    DEFAULT_SEED,
};

/// One elementary biliaison. `pivot` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiliaisonStep {
    pub v: LadderSpec,
    pub vprime: LadderSpec,
    pub w: LadderSpec,
    pub pivot: usize,
    /// The interior indices `u_2 < ... < u_{2t_k-1}`.
    pub witness_u: Vec<usize>,
    /// `deg [a_k,u,b_k] - deg [u]`.
    pub height: i64,
}

impl BiliaisonStep {
    /// All three specs valid with the same `n`, `V` normalized, pivot in
    /// range with size at least 2, and the witness strictly increasing
    /// inside the pivot block with `2t_k-2` entries.
    pub fn check_well_formed(&self) -> Result<()> {
        for spec in [&self.v, &self.vprime, &self.w] {
            validate(spec)?;
            if spec.n != self.v.n {
                return Err(crate::error::domain("V, V' and W must share n"));
            }
        }
        require_normalized(&self.v)?;
        check_pivot(&self.v, self.pivot)?;
        let c = self.corner();
        let t = self.v.t[self.pivot - 1];
        let u = &self.witness_u;
        let inside = u.iter().all(|&x| c.a < x && x < c.b);
        let increasing = u.windows(2).all(|w| w[0] < w[1]);
        if u.len() != 2 * t - 2 || !inside || !increasing {
            return Err(crate::error::domain(format!(
                "witness {u:?} is not {} increasing indices strictly inside {c}",
                2 * t - 2
            )));
        }
        Ok(())
    }

    fn corner(&self) -> UpperCorner {
        self.v.corners[self.pivot - 1]
    }

    pub fn numerator_tuple(&self) -> Vec<usize> {
        let c = self.corner();
        let mut tu = vec![c.a];
        tu.extend(&self.witness_u);
        tu.push(c.b);
        tu
    }

    pub fn denominator_tuple(&self) -> Vec<usize> {
        self.witness_u.clone()
    }

    /// The pfaffians `[a_k,u,b_k]` and `[u]`.
    pub fn witness_polys(&self, ring: Ring) -> Result<(Polynomial, Polynomial)> {
        let num = pfaffian(&IndexTuple::new(self.numerator_tuple())?, self.v.n, ring)?;
        let den = pfaffian(&IndexTuple::new(self.denominator_tuple())?, self.v.n, ring)?;
        Ok((num, den))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiliaisonChain {
    pub input: LadderSpec,
    pub normalized: LadderSpec,
    pub steps: Vec<BiliaisonStep>,
    pub reports: Vec<StepReport>,
    pub terminal: LadderSpec,
}

impl BiliaisonChain {
    /// No item of any step failed. Skipped items do not count as failures.
    pub fn ok(&self) -> bool {
        self.reports.iter().all(|r| !r.failed())
    }
}

fn require_normalized(spec: &LadderSpec) -> Result<()> {
    match normalization_issue(spec) {
        Some(issue) => Err(Error::NotNormalized(issue)),
        None => Ok(()),
    }
}

/// Smallest 1-based `k` with `t_k` maximal.
pub fn select_pivot(spec: &LadderSpec) -> Result<usize> {
    require_normalized(spec)?;
    let max = spec.t.iter().copied().max().unwrap_or(0);
    if max < 2 {
        return Err(Error::AlreadyLinear);
    }
    Ok(spec.t.iter().position(|&t| t == max).expect("max exists") + 1)
}

fn check_pivot(spec: &LadderSpec, k: usize) -> Result<()> {
    require_normalized(spec)?;
    if k == 0 || k > spec.len() {
        return Err(crate::error::domain(format!(
            "pivot {k} outside 1..={}",
            spec.len()
        )));
    }
    if spec.t[k - 1] < 2 {
        return Err(crate::error::domain(format!("pivot {k} has size 1")));
    }
    Ok(())
}

pub fn construct_vprime(spec: &LadderSpec, k: usize) -> Result<LadderSpec> {
    check_pivot(spec, k)?;
    let mut out = spec.clone();
    let c = spec.corners[k - 1];
    out.corners[k - 1] = UpperCorner::new(c.a + 1, c.b - 1);
    out.t[k - 1] -= 1;
    if let Some(issue) = normalization_issue(&out) {
        return Err(Error::Invariant(format!("V' is not normalized: {issue}")));
    }
    Ok(out)
}

/// Which corners of the split block survive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Split {
    Both,
    FirstOnly,
    SecondOnly,
    Neither,
}

pub(crate) fn split_case(spec: &LadderSpec, k: usize) -> Split {
    let i = k - 1;
    let c = spec.corners[i];
    let t = spec.t[i] as i64;
    let case1 = 2 * spec.t[i] == c.width();
    let case2 = i + 1 < spec.len() && {
        let next = spec.corners[i + 1];
        next.a as i64 - (c.a as i64 + 1) == t - spec.t[i + 1] as i64
    };
    let case3 = i > 0 && {
        let prev = spec.corners[i - 1];
        (c.b as i64 - 1) - prev.b as i64 == t - spec.t[i - 1] as i64
    };
    match (case1, case2, case3) {
        (false, false, false) => Split::Both,
        (false, true, false) => Split::FirstOnly,
        (false, false, true) => Split::SecondOnly,
        _ => Split::Neither,
    }
}

pub fn construct_w(spec: &LadderSpec, k: usize) -> Result<LadderSpec> {
    check_pivot(spec, k)?;
    let i = k - 1;
    let c = spec.corners[i];
    let t = spec.t[i];
    let first = UpperCorner::new(c.a, c.b - 1);
    let second = UpperCorner::new(c.a + 1, c.b);
    let replacement: Vec<UpperCorner> = match split_case(spec, k) {
        Split::Both => vec![first, second],
        Split::FirstOnly => vec![first],
        Split::SecondOnly => vec![second],
        Split::Neither => vec![],
    };
    let mut corners = spec.corners[..i].to_vec();
    let mut sizes = spec.t[..i].to_vec();
    for r in &replacement {
        corners.push(*r);
        sizes.push(t);
    }
    corners.extend_from_slice(&spec.corners[i + 1..]);
    sizes.extend_from_slice(&spec.t[i + 1..]);
    Ok(LadderSpec {
        n: spec.n,
        corners,
        t: sizes,
    })
}

/// The step at the default pivot, with witness `u = (a_k+1,...,a_k+2t_k-2)`.
pub fn build_step(spec: &LadderSpec) -> Result<BiliaisonStep> {
    let k = select_pivot(spec)?;
    build_step_at(spec, k)
}

pub fn build_step_at(spec: &LadderSpec, k: usize) -> Result<BiliaisonStep> {
    let vprime = construct_vprime(spec, k)?;
    let w = construct_w(spec, k)?;
    let c = spec.corners[k - 1];
    let t = spec.t[k - 1];
    let witness_u: Vec<usize> = (c.a + 1..c.a + 2 * t - 1).collect();
    let mut step = BiliaisonStep {
        v: spec.clone(),
        vprime,
        w,
        pivot: k,
        witness_u,
        height: 0,
    };
    let (num, den) = step.witness_polys(Ring::default())?;
    step.height = num.degree()? as i64 - den.degree()? as i64;
    Ok(step)
}

/// Validates and normalizes `spec`, then takes biliaison steps until every
/// size is 1, verifying each one at `opts.level`.
pub fn chain(spec: &LadderSpec, opts: &VerifyOptions) -> Result<BiliaisonChain> {
    validate(spec)?;
    let normalized = normalize(spec);
    let mut current = normalized.clone();
    let mut steps = Vec::new();
    let mut reports = Vec::new();
    while !current.is_linear() {
        let step = build_step(&current)?;
        reports.push(verify_step(&step, opts)?);
        current = step.vprime.clone();
        steps.push(step);
    }
    let expected = normalized.size_sum() - normalized.len();
    if steps.len() != expected {
        return Err(Error::Invariant(format!(
            "chain has {} steps, expected {expected}",
            steps.len()
        )));
    }
    if !is_normalized(&current) || current != corner_ladder(&normalized)? {
        return Err(Error::Invariant(
            "terminal spec differs from the corner ladder".into(),
        ));
    }
    Ok(BiliaisonChain {
        input: spec.clone(),
        normalized,
        steps,
        reports,
        terminal: current,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> LadderSpec {
        LadderSpec::new(
            7,
            &[(1, 2), (1, 4), (3, 4), (3, 6), (4, 7)],
            &[1, 2, 1, 2, 2],
        )
    }

    fn corners(s: &LadderSpec) -> Vec<(usize, usize)> {
        s.corners.iter().map(|c| (c.a, c.b)).collect()
    }

    #[test]
    fn pivots() {
        assert_eq!(select_pivot(&example()).unwrap(), 2);
        let linear = LadderSpec::new(5, &[(1, 3), (2, 5)], &[1, 1]);
        assert_eq!(select_pivot(&linear), Err(Error::AlreadyLinear));
        let tie = LadderSpec::new(10, &[(1, 7), (4, 10)], &[3, 3]);
        assert_eq!(select_pivot(&tie).unwrap(), 1);
    }

    #[test]
    fn vprime_examples() {
        let vp = construct_vprime(&example(), 2).unwrap();
        assert_eq!(corners(&vp), vec![(1, 2), (2, 3), (3, 4), (3, 6), (4, 7)]);
        assert_eq!(vp.t, vec![1, 1, 1, 2, 2]);
        let vp = construct_vprime(&LadderSpec::new(6, &[(1, 6)], &[2]), 1).unwrap();
        assert_eq!(corners(&vp), vec![(2, 5)]);
        assert_eq!(vp.t, vec![1]);
        for t in 2..5 {
            let vp = construct_vprime(&LadderSpec::new(2 * t, &[(1, 2 * t)], &[t]), 1).unwrap();
            assert_eq!(corners(&vp), vec![(2, 2 * t - 1)]);
            assert_eq!(vp.t, vec![t - 1]);
        }
    }

    #[test]
    fn w_examples() {
        let w = construct_w(&example(), 2).unwrap();
        assert_eq!(corners(&w), vec![(1, 2), (3, 4), (3, 6), (4, 7)]);
        assert_eq!(w.t, vec![1, 1, 2, 2]);
        let w = construct_w(&LadderSpec::new(6, &[(1, 6)], &[2]), 1).unwrap();
        assert_eq!(corners(&w), vec![(1, 5), (2, 6)]);
        assert_eq!(w.t, vec![2, 2]);
        let w = construct_w(&LadderSpec::new(4, &[(1, 4)], &[2]), 1).unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn witness() {
        let s = build_step(&LadderSpec::new(6, &[(1, 6)], &[2])).unwrap();
        assert_eq!(s.numerator_tuple(), vec![1, 2, 3, 6]);
        assert_eq!(s.denominator_tuple(), vec![2, 3]);
        assert_eq!(s.height, 1);
        let s = build_step(&example()).unwrap();
        assert_eq!(s.pivot, 2);
        assert_eq!(s.numerator_tuple(), vec![1, 2, 3, 4]);
        assert_eq!(s.height, 1);
        let linear = LadderSpec::new(5, &[(1, 3), (2, 5)], &[1, 1]);
        assert_eq!(build_step(&linear), Err(Error::AlreadyLinear));
    }

    #[test]
    fn chain_lengths() {
        let opts = VerifyOptions::formula_only();
        assert_eq!(chain(&example(), &opts).unwrap().steps.len(), 3);
        let linear = LadderSpec::new(5, &[(1, 3), (2, 5)], &[1, 1]);
        assert!(chain(&linear, &opts).unwrap().steps.is_empty());
        let c = chain(&LadderSpec::new(6, &[(1, 6)], &[3]), &opts).unwrap();
        assert_eq!(c.steps.len(), 2);
        assert_eq!(corners(&c.terminal), vec![(3, 4)]);
        assert!(c.ok());
    }

    #[test]
    fn unnormalized_pivot_rejected() {
        let s = LadderSpec::new(4, &[(1, 2)], &[2]);
        assert!(matches!(select_pivot(&s), Err(Error::NotNormalized(_))));
    }
}
