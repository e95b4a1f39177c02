use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::BiliaisonStep;
use crate::error::{Error, Result};
use crate::ideal::{codim_of_basis, generators, subsets, GbBudget, GroebnerBasis};
use crate::ladder::{cells, height_formula, LadderSpec};
use crate::pfaffian::{pfaffian, IndexTuple};
use crate::polyring::Ring;

const EXHAUSTIVE_TUPLES: usize = 200;
const SAMPLED_TUPLES: usize = 50;
pub const DEFAULT_MAX_VARS: usize = 16;
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Level {
    #[default]
    FormulaOnly,
    FullGb,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::FormulaOnly => "formula-only",
            Level::FullGb => "full-gb",
        })
    }
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formula-only" => Ok(Level::FormulaOnly),
            "full-gb" => Ok(Level::FullGb),
            _ => Err(Error::Parse(format!(
                "unknown level {s:?} (expected formula-only or full-gb)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub level: Level,
    pub ring: Ring,
    pub budget: GbBudget,
    /// Ladders with more variables than this skip the Groebner items.
    pub max_vars: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            level: Level::FormulaOnly,
            ring: Ring::default(),
            budget: GbBudget::default(),
            max_vars: DEFAULT_MAX_VARS,
            seed: DEFAULT_SEED,
        }
    }
}

impl VerifyOptions {
    pub fn formula_only() -> Self {
        Self::default()
    }

    pub fn full_gb() -> Self {
        VerifyOptions {
            level: Level::FullGb,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum ItemStatus {
    Pass,
    Fail(String),
    /// Not attempted at this verification level.
    SkippedLevel,
    /// A Groebner computation ran out of budget.
    SkippedBudget(String),
}

impl ItemStatus {
    pub fn is_pass(&self) -> bool {
        matches!(self, ItemStatus::Pass)
    }
}

impl fmt::Display for ItemStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ItemStatus::Pass => write!(f, "pass"),
            ItemStatus::Fail(why) => write!(f, "FAIL ({why})"),
            ItemStatus::SkippedLevel => write!(f, "skipped (level)"),
            ItemStatus::SkippedBudget(why) => write!(f, "skipped ({why})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ItemReport {
    pub item: char,
    pub claim: String,
    #[serde(flatten)]
    pub status: ItemStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepReport {
    pub level: Level,
    pub items: Vec<ItemReport>,
}

impl StepReport {
    pub fn item(&self, c: char) -> Option<&ItemReport> {
        self.items.iter().find(|i| i.item == c)
    }

    pub fn failed(&self) -> bool {
        self.items
            .iter()
            .any(|i| matches!(i.status, ItemStatus::Fail(_)))
    }

    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.status.is_pass())
    }

    pub fn budget_skipped(&self) -> bool {
        self.items
            .iter()
            .any(|i| matches!(i.status, ItemStatus::SkippedBudget(_)))
    }
}

/// Groebner data for one spec: `Ok` with basis and codimension, or the
/// reason it was not computed.
type Gb = std::result::Result<(GroebnerBasis, usize), ItemStatus>;

fn groebner_of(spec: &LadderSpec, opts: &VerifyOptions) -> Result<Gb> {
    match generators(spec, opts.ring)?.groebner(opts.budget) {
        Ok(gb) => {
            let codim = if gb.is_unit() {
                return Err(Error::Invariant(format!("unit ideal for {spec}")));
            } else {
                codim_of_basis(&gb, spec)?
            };
            Ok(Ok((gb, codim)))
        }
        Err(Error::BudgetExhausted(why)) => Ok(Err(ItemStatus::SkippedBudget(why))),
        Err(e) => Err(e),
    }
}

fn item(c: char, claim: &str, status: ItemStatus) -> ItemReport {
    ItemReport {
        item: c,
        claim: claim.into(),
        status,
    }
}

/// Checks the claims attached to a step:
///
/// * (a) `V` and `V'` have the same codimension;
/// * (b) `W` has codimension one less;
/// * (c) the ideal of `W` lies in the ideals of `V` and `V'`;
/// * (d) `[v][a,u,b] - [a,v,b][u]` lies in the ideal of `W` for interior
///   tuples `v`;
/// * (e) the witness has height 1.
///
/// Formula checks always run. Groebner checks run at [`Level::FullGb`] when
/// `V` has at most `opts.max_vars` variables.
pub fn verify_step(step: &BiliaisonStep, opts: &VerifyOptions) -> Result<StepReport> {
    step.check_well_formed()?;
    let hv = height_formula(&step.v);
    let hvp = height_formula(&step.vprime);
    let hw = height_formula(&step.w);

    let gb_run = opts.level == Level::FullGb;
    let nvars = cells(&step.v).len();
    let (gv, gvp, gw) = if !gb_run {
        let s = || Err(ItemStatus::SkippedLevel);
        (s(), s(), s())
    } else if nvars > opts.max_vars {
        let s = || {
            Err(ItemStatus::SkippedBudget(format!(
                "{nvars} variables exceed the limit {}",
                opts.max_vars
            )))
        };
        (s(), s(), s())
    } else {
        (
            groebner_of(&step.v, opts)?,
            groebner_of(&step.vprime, opts)?,
            groebner_of(&step.w, opts)?,
        )
    };

    let mut items = Vec::with_capacity(5);

    let a = if hv != hvp {
        ItemStatus::Fail(format!("formula: codim V = {hv}, codim V' = {hvp}"))
    } else {
        match (&gv, &gvp) {
            (Ok((_, cv)), Ok((_, cvp))) if (*cv, *cvp) == (hv, hv) => ItemStatus::Pass,
            (Ok((_, cv)), Ok((_, cvp))) => ItemStatus::Fail(format!(
                "groebner: codim V = {cv}, codim V' = {cvp}, formula {hv}"
            )),
            (Err(ItemStatus::SkippedLevel), _) => ItemStatus::Pass,
            (Err(s), _) | (_, Err(s)) => s.clone(),
        }
    };
    items.push(item('a', "codim V = codim V'", a));

    let b = if hw + 1 != hv {
        ItemStatus::Fail(format!("formula: codim W = {hw}, codim V = {hv}"))
    } else {
        match &gw {
            Ok((_, cw)) if *cw == hw => ItemStatus::Pass,
            Ok((_, cw)) => ItemStatus::Fail(format!("groebner: codim W = {cw}, formula {hw}")),
            Err(ItemStatus::SkippedLevel) => ItemStatus::Pass,
            Err(s) => s.clone(),
        }
    };
    items.push(item('b', "codim W = codim V - 1", b));

    let c = match (&gv, &gvp) {
        (Ok((bv, _)), Ok((bvp, _))) => {
            let mut status = ItemStatus::Pass;
            for g in generators(&step.w, opts.ring)?.generators() {
                let outside = if !bv.contains(&g.poly)? {
                    Some("V")
                } else if !bvp.contains(&g.poly)? {
                    Some("V'")
                } else {
                    None
                };
                if let Some(which) = outside {
                    let idx = g
                        .provenance
                        .as_ref()
                        .map(|p| p.indices.clone())
                        .unwrap_or_default();
                    status = ItemStatus::Fail(format!(
                        "generator {idx:?} of W is not in the ideal of {which}"
                    ));
                    break;
                }
            }
            status
        }
        (Err(s), _) | (_, Err(s)) => s.clone(),
    };
    items.push(item('c', "I_W is contained in I_V and I_V'", c));

    let d = match &gw {
        Ok((bw, _)) => congruence(step, bw, opts)?,
        Err(s) => s.clone(),
    };
    items.push(item('d', "[v][a,u,b] = [a,v,b][u] modulo I_W", d));

    let (num, den) = step.witness_polys(opts.ring)?;
    let h = num.degree()? as i64 - den.degree()? as i64;
    let e = if h == 1 && step.height == 1 {
        ItemStatus::Pass
    } else {
        ItemStatus::Fail(format!("recorded height {}, computed {h}", step.height))
    };
    items.push(item('e', "witness height = 1", e));

    Ok(StepReport {
        level: opts.level,
        items,
    })
}

fn congruence(
    step: &BiliaisonStep,
    gw: &GroebnerBasis,
    opts: &VerifyOptions,
) -> Result<ItemStatus> {
    let c = step.v.corners[step.pivot - 1];
    let size = step.witness_u.len();
    let mut tuples = subsets(c.a + 1, c.b - 1, size);
    if tuples.len() > EXHAUSTIVE_TUPLES {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        tuples = tuples
            .choose_multiple(&mut rng, SAMPLED_TUPLES)
            .cloned()
            .collect();
        tuples.sort();
    }
    let n = step.v.n;
    let (num, den) = step.witness_polys(opts.ring)?;
    for v in tuples {
        let mut avb = vec![c.a];
        avb.extend(&v);
        avb.push(c.b);
        let pv = pfaffian(&IndexTuple::new(v.clone())?, n, opts.ring)?;
        let pavb = pfaffian(&IndexTuple::new(avb)?, n, opts.ring)?;
        let diff = pv.try_mul(&num)?.try_sub(&pavb.try_mul(&den)?)?;
        if !gw.contains(&diff)? {
            return Ok(ItemStatus::Fail(format!("tuple v = {v:?}")));
        }
    }
    Ok(ItemStatus::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biliaison::build_step;

    #[test]
    fn single_corner_step_full() {
        let step = build_step(&LadderSpec::new(6, &[(1, 6)], &[2])).unwrap();
        let r = verify_step(&step, &VerifyOptions::full_gb()).unwrap();
        assert!(r.all_pass(), "{r:?}");
    }

    #[test]
    fn formula_only_skips_groebner_items() {
        let step = build_step(&LadderSpec::new(6, &[(1, 6)], &[2])).unwrap();
        let r = verify_step(&step, &VerifyOptions::formula_only()).unwrap();
        assert!(!r.failed());
        assert_eq!(r.item('c').unwrap().status, ItemStatus::SkippedLevel);
        assert!(r.item('a').unwrap().status.is_pass());
    }

    #[test]
    fn variable_cap_skips_as_budget() {
        let step = build_step(&LadderSpec::new(6, &[(1, 6)], &[2])).unwrap();
        let opts = VerifyOptions {
            max_vars: 10,
            ..VerifyOptions::full_gb()
        };
        let r = verify_step(&step, &opts).unwrap();
        assert!(r.budget_skipped());
        assert!(!r.all_pass());
    }

    #[test]
    fn corrupted_w_fails_b() {
        let mut step = build_step(&LadderSpec::new(4, &[(1, 4)], &[2])).unwrap();
        step.w = step.v.clone();
        let r = verify_step(&step, &VerifyOptions::formula_only()).unwrap();
        assert!(matches!(r.item('b').unwrap().status, ItemStatus::Fail(_)));
    }

    #[test]
    fn level_parsing() {
        assert_eq!("full-gb".parse::<Level>().unwrap(), Level::FullGb);
        assert!("fast".parse::<Level>().is_err());
    }
}
