mod common;

use common::{eval, perm_sign, point, skew_det};
use pfaffian_ladder::pfaffian::{dcp_residual, pfaffian, pfaffian_matchings, IndexTuple};
use pfaffian_ladder::polyring::Ring;
use proptest::prelude::*;

fn r() -> Ring {
    Ring::default()
}

fn distinct(n: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    (0..=max_len / 2).prop_flat_map(move |half| {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(move |v| v[..2 * half].to_vec())
    })
}

fn double_factorial(k: usize) -> usize {
    (1..=k).rev().step_by(2).product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expansion_matches_matchings(tu in distinct(8, 8)) {
        let t = IndexTuple::new(tu).unwrap();
        prop_assert_eq!(pfaffian(&t, 8, r()).unwrap(), pfaffian_matchings(&t, 8, r()).unwrap());
    }

    #[test]
    fn antisymmetric_and_sized(tu in distinct(8, 6)) {
        let p = pfaffian(&IndexTuple::new(tu.clone()).unwrap(), 8, r()).unwrap();
        let mut sorted = tu.clone();
        sorted.sort();
        let q = pfaffian(&IndexTuple::new(sorted.clone()).unwrap(), 8, r()).unwrap();
        let want = if perm_sign(&tu) == 1 { q.clone() } else { -&q };
        prop_assert_eq!(&p, &want);
        prop_assert!(q.is_homogeneous());
        prop_assert_eq!(q.len(), double_factorial(tu.len().saturating_sub(1)).max(1));
        if !tu.is_empty() {
            prop_assert_eq!(q.degree().unwrap() as usize, tu.len() / 2);
            let at = point(8, tu[0] as i64);
            let v = eval(&q, &at);
            prop_assert_eq!(&v * &v, skew_det(&sorted, &at));
        }
    }

    #[test]
    fn repeats_vanish(tu in distinct(8, 6), i in 0usize..6, j in 0usize..6) {
        prop_assume!(tu.len() >= 2);
        let (i, j) = (i % tu.len(), j % tu.len());
        prop_assume!(i != j);
        let mut t = tu.clone();
        t[j] = t[i];
        prop_assert!(pfaffian(&IndexTuple::new(t).unwrap(), 8, r()).unwrap().is_zero());
    }

    #[test]
    fn relation_holds(c in distinct(7, 4), d in distinct(7, 4)) {
        prop_assume!(!d.is_empty());
        let res = dcp_residual(&IndexTuple::new(c).unwrap(), &IndexTuple::new(d).unwrap(), 7, r()).unwrap();
        prop_assert!(res.is_zero());
    }
}
