mod common;

use common::{fixture, spec, FIXTURES};
use pfaffian_ladder::biliaison::{build_step, chain, construct_w, select_pivot, VerifyOptions};
use pfaffian_ladder::ideal::codim_gb;
use pfaffian_ladder::ideal::{generators, GbBudget};
use pfaffian_ladder::ladder::{height_formula, is_normalized, normalize, validate, LadderSpec};
use pfaffian_ladder::polyring::Ring;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn chains_verify_fully(s in spec(6)) {
        let c = chain(&s, &VerifyOptions::full_gb()).unwrap();
        let norm = normalize(&s);
        prop_assert_eq!(c.steps.len(), norm.t.iter().sum::<usize>() - norm.t.len());
        for (step, report) in c.steps.iter().zip(&c.reports) {
            prop_assert!(report.all_pass(), "{}: {:?}", step.v, report.items);
            for x in [&step.v, &step.vprime] {
                prop_assert!(validate(x).is_ok() && is_normalized(x));
            }
            prop_assert!(validate(&step.w).is_ok());
            prop_assert_eq!(height_formula(&step.v), height_formula(&step.vprime));
            prop_assert_eq!(height_formula(&step.w) + 1, height_formula(&step.v));
        }
        for g in generators(&c.terminal, Ring::default()).unwrap().polys() {
            prop_assert_eq!(g.len(), 1);
            prop_assert_eq!(g.degree().unwrap(), 1);
        }
    }

    #[test]
    fn formula_level_never_fails(s in spec(10)) {
        let c = chain(&s, &VerifyOptions::formula_only()).unwrap();
        prop_assert!(c.ok());
    }
}

#[test]
fn fixtures_chain_at_full_level() {
    for name in FIXTURES {
        let c = chain(&fixture(name), &VerifyOptions::full_gb()).unwrap();
        for r in &c.reports {
            assert!(r.all_pass(), "{name}: {:?}", r.items);
        }
    }
}

#[test]
fn degenerate_split_cases() {
    // the second block starts right where the split's second half would
    let s = LadderSpec::new(8, &[(1, 6), (3, 8)], &[2, 1]);
    assert!(is_normalized(&s));
    let w = construct_w(&s, select_pivot(&s).unwrap()).unwrap();
    let shape: Vec<(usize, usize)> = w.corners.iter().map(|c| (c.a, c.b)).collect();
    assert_eq!(shape, vec![(1, 5), (3, 8)]);
    // the previous block ends right where the split's first half would
    let s = LadderSpec::new(8, &[(1, 6), (3, 8)], &[1, 2]);
    assert!(is_normalized(&s));
    let w = construct_w(&s, 2).unwrap();
    let shape: Vec<(usize, usize)> = w.corners.iter().map(|c| (c.a, c.b)).collect();
    assert_eq!(shape, vec![(1, 6), (4, 8)]);
    for s in [
        LadderSpec::new(8, &[(1, 6), (3, 8)], &[2, 1]),
        LadderSpec::new(8, &[(1, 6), (3, 8)], &[1, 2]),
    ] {
        let step = build_step(&s).unwrap();
        assert_eq!(height_formula(&step.w) + 1, height_formula(&s));
    }
}

#[test]
fn example_codims_by_groebner() {
    let step = build_step(&fixture("golden")).unwrap();
    let b = GbBudget::default();
    let r = Ring::default();
    assert_eq!(codim_gb(&step.vprime, r, b).unwrap(), 5);
    assert_eq!(codim_gb(&step.w, r, b).unwrap(), 4);
    let step = build_step(&LadderSpec::new(6, &[(1, 6)], &[2])).unwrap();
    assert_eq!(codim_gb(&step.w, r, b).unwrap(), 5);
}
