//! Fixtures and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use pfaffian_ladder::ladder::{validate, LadderSpec, UpperCorner};
use pfaffian_ladder::polyring::{Monomial, Polynomial, VarId};
use proptest::prelude::*;

pub const FIXTURES: &[&str] = &[
    "golden",
    "full_4_2",
    "full_5_2",
    "full_6_2",
    "full_6_3",
    "nested_rows",
    "nested_columns",
    "cogenerated",
];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
}

pub fn fixture(name: &str) -> LadderSpec {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    LadderSpec::from_json(&text).expect("fixture parses")
}

pub fn golden() -> LadderSpec {
    fixture("golden")
}

/// `(n-2t+2)(n-2t+1)/2`: codimension of the `2t`-pfaffians of a generic
/// `n x n` skew-symmetric matrix.
pub fn full_matrix_codim(n: usize, t: usize) -> usize {
    let m = n + 2 - 2 * t;
    m * (m - 1) / 2
}

/// Sign of a permutation of distinct values, by counting inversions.
pub fn perm_sign(p: &[usize]) -> i32 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn permutations(v: &[usize]) -> Vec<Vec<usize>> {
    if v.len() <= 1 {
        return vec![v.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..v.len() {
        let mut rest = v.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

pub fn sorted_subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == size {
            out.push((1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect());
        }
    }
    out
}

/// Deterministic small integer value for the entry `x[i,j]`.
pub fn point(n: usize, salt: i64) -> HashMap<VarId, BigRational> {
    let mut m = HashMap::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let v = ((i as i64 * 7 + j as i64 * 13 + salt * 31) % 19) - 9;
            m.insert(
                VarId::new(i, j).unwrap(),
                BigRational::from_integer(BigInt::from(v)),
            );
        }
    }
    m
}

pub fn eval(p: &Polynomial, at: &HashMap<VarId, BigRational>) -> BigRational {
    let mut total = BigRational::zero();
    for term in p.terms() {
        let mut v = term.coeff.clone();
        for &(var, e) in term.mono.exponents() {
            for _ in 0..e {
                v *= &at[&var];
            }
        }
        total += v;
    }
    total
}

/// Determinant of the skew-symmetric submatrix on rows/columns `idx`, by
/// Gaussian elimination.
pub fn skew_det(idx: &[usize], at: &HashMap<VarId, BigRational>) -> BigRational {
    let k = idx.len();
    let mut a: Vec<Vec<BigRational>> = (0..k)
        .map(|r| {
            (0..k)
                .map(|c| {
                    let (i, j) = (idx[r], idx[c]);
                    if i < j {
                        at[&VarId::new(i, j).unwrap()].clone()
                    } else if i > j {
                        -at[&VarId::new(j, i).unwrap()].clone()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut det = BigRational::one();
    for col in 0..k {
        let Some(piv) = (col..k).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        det *= &a[col][col];
        let (top, rest) = a.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest.iter_mut() {
            let f = &row[col] / &pivot_row[col];
            for (x, p) in row.iter_mut().zip(pivot_row).skip(col) {
                *x -= &f * p;
            }
        }
    }
    det
}

/// Dimension of `K[vars]/in(I)` by trying every variable subset.
pub fn brute_force_dimension(lms: &[Monomial], vars: &[VarId]) -> usize {
    assert!(vars.len() <= 20);
    let mut best = 0;
    for mask in 0u32..(1 << vars.len()) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let independent = lms.iter().all(|m| {
            m.support().any(|v| {
                let pos = vars.iter().position(|w| *w == v).expect("variable in ring");
                mask & (1 << pos) == 0
            })
        });
        if independent {
            best = size;
        }
    }
    best
}

/// Random valid specs on at most `max_n` indices.
pub fn spec(max_n: usize) -> impl Strategy<Value = LadderSpec> {
    (4..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec((1..n, 1..n, 1..=n / 2), 1..=3),
            )
        })
        .prop_filter_map("invalid ladder", |(n, raw)| {
            let mut corners: Vec<(UpperCorner, usize)> = raw
                .into_iter()
                .map(|(a, d, t)| (UpperCorner::new(a, (a + d).min(n)), t))
                .collect();
            corners.sort_by_key(|(c, _)| (c.a, c.b));
            corners.dedup_by_key(|(c, _)| *c);
            let s = LadderSpec {
                n,
                corners: corners.iter().map(|(c, _)| *c).collect(),
                t: corners.iter().map(|(_, t)| *t).collect(),
            };
            validate(&s).ok().map(|_| s)
        })
}
