use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{dcp_residual, IndexTuple};
use crate::error::{domain, Result};
use crate::polyring::Ring;

const MAX_N: usize = 10;
const MAX_EXHAUSTIVE: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trials {
    /// Every pair of tuples in `[1,n]^p x [1,n]^m`.
    All,
    Sampled(usize),
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub p: usize,
    pub m: usize,
    pub n: usize,
    pub seed: u64,
    pub instances: usize,
    /// Instances where `c` and `d` share at least one index.
    pub overlapping: usize,
    /// `(c, d, residual)` for every nonzero residual.
    pub failures: Vec<(Vec<usize>, Vec<usize>, String)>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluates the De Concini-Procesi residual on many `(c, d)` pairs.
///
/// Sampled tuples have distinct entries in random order; `c` and `d` are
/// drawn independently so they overlap freely. The exhaustive mode also
/// covers tuples with repeated entries.
pub fn identity_check(
    p: usize,
    m: usize,
    n: usize,
    trials: Trials,
    seed: u64,
    ring: Ring,
) -> Result<IdentityReport> {
    if !p.is_multiple_of(2) || !m.is_multiple_of(2) {
        return Err(domain(format!("even length required (got p={p}, m={m})")));
    }
    if m == 0 {
        return Err(domain("m must be at least 2"));
    }
    if p > n || m > n || n > MAX_N {
        return Err(domain(format!(
            "need p, m <= n <= {MAX_N} (got p={p}, m={m}, n={n})"
        )));
    }

    let pairs: Vec<(Vec<usize>, Vec<usize>)> = match trials {
        Trials::All => {
            let total = n.checked_pow((p + m) as u32).unwrap_or(usize::MAX);
            if total > MAX_EXHAUSTIVE {
                return Err(domain(format!(
                    "exhaustive check would need {total} instances (max {MAX_EXHAUSTIVE})"
                )));
            }
            let cs = all_tuples(p, n);
            let ds = all_tuples(m, n);
            cs.iter()
                .flat_map(|c| ds.iter().map(move |d| (c.clone(), d.clone())))
                .collect()
        }
        Trials::Sampled(count) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let pool: Vec<usize> = (1..=n).collect();
            (0..count)
                .map(|_| {
                    let c: Vec<usize> = pool.choose_multiple(&mut rng, p).copied().collect();
                    let d: Vec<usize> = pool.choose_multiple(&mut rng, m).copied().collect();
                    (c, d)
                })
                .collect()
        }
    };

    let mut report = IdentityReport {
        p,
        m,
        n,
        seed,
        instances: pairs.len(),
        overlapping: 0,
        failures: Vec::new(),
    };
    for (c, d) in pairs {
        if c.iter().any(|x| d.contains(x)) {
            report.overlapping += 1;
        }
        let res = dcp_residual(
            &IndexTuple::new(c.clone())?,
            &IndexTuple::new(d.clone())?,
            n,
            ring,
        )?;
        if !res.is_zero() {
            report.failures.push((c, d, res.to_string()));
        }
    }
    Ok(report)
}

fn all_tuples(len: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..=n).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_smallest_case() {
        let r = identity_check(2, 2, 4, Trials::All, 0, Ring::default()).unwrap();
        assert_eq!(r.instances, 256);
        assert!(r.passed());
        assert!(r.overlapping > 0);
    }

    #[test]
    fn seeded_is_reproducible() {
        let a = identity_check(2, 4, 6, Trials::Sampled(25), 7, Ring::default()).unwrap();
        let b = identity_check(2, 4, 6, Trials::Sampled(25), 7, Ring::default()).unwrap();
        assert!(a.passed());
        assert_eq!(a.overlapping, b.overlapping);
    }

    #[test]
    fn odd_length_rejected() {
        let e = identity_check(3, 2, 6, Trials::Sampled(1), 0, Ring::default()).unwrap_err();
        assert!(e.to_string().contains("even length required"));
    }
}
