//! JSON and text forms of a verified chain.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{chain, verify_step, BiliaisonChain, BiliaisonStep, Level, StepReport, VerifyOptions};
use crate::error::Result;
use crate::ladder::LadderSpec;
use crate::polyring::{Field, Ring, TermOrder};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepTrace {
    pub v: LadderSpec,
    pub vprime: LadderSpec,
    pub w: LadderSpec,
    pub pivot: usize,
    pub witness_u: Vec<usize>,
    pub numerator: Vec<usize>,
    pub denominator: Vec<usize>,
    pub height: i64,
    pub report: StepReport,
}

impl StepTrace {
    pub fn step(&self) -> BiliaisonStep {
        BiliaisonStep {
            v: self.v.clone(),
            vprime: self.vprime.clone(),
            w: self.w.clone(),
            pivot: self.pivot,
            witness_u: self.witness_u.clone(),
            height: self.height,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainTrace {
    pub kind: String,
    pub input: LadderSpec,
    pub normalized: LadderSpec,
    pub level: Level,
    pub field: String,
    pub order: String,
    pub seed: u64,
    pub steps: Vec<StepTrace>,
    pub terminal: LadderSpec,
}

pub const CHAIN_KIND: &str = "biliaison-chain";

impl ChainTrace {
    pub fn new(chain: &BiliaisonChain, opts: &VerifyOptions) -> Self {
        ChainTrace {
            kind: CHAIN_KIND.into(),
            input: chain.input.clone(),
            normalized: chain.normalized.clone(),
            level: opts.level,
            field: opts.ring.field.to_string(),
            order: opts.ring.order.to_string(),
            seed: opts.seed,
            steps: chain
                .steps
                .iter()
                .zip(&chain.reports)
                .map(|(s, r)| StepTrace {
                    v: s.v.clone(),
                    vprime: s.vprime.clone(),
                    w: s.w.clone(),
                    pivot: s.pivot,
                    witness_u: s.witness_u.clone(),
                    numerator: s.numerator_tuple(),
                    denominator: s.denominator_tuple(),
                    height: s.height,
                    report: r.clone(),
                })
                .collect(),
            terminal: chain.terminal.clone(),
        }
    }

    pub fn ring(&self) -> Result<Ring> {
        Ok(Ring::new(
            self.field.parse::<Field>()?,
            self.order.parse::<TermOrder>()?,
        ))
    }

    pub fn ok(&self) -> bool {
        self.steps.iter().all(|s| !s.report.failed())
    }

    /// Rebuilds the chain from the recorded input and settings and lists
    /// every way the recorded trace differs from the recomputation.
    pub fn recheck(&self, base: &VerifyOptions) -> Result<Vec<String>> {
        let opts = VerifyOptions {
            level: self.level,
            ring: self.ring()?,
            seed: self.seed,
            ..*base
        };
        let fresh = ChainTrace::new(&chain(&self.input, &opts)?, &opts);
        let mut diffs = Vec::new();
        if fresh.normalized != self.normalized {
            diffs.push("normalized spec differs".to_string());
        }
        if fresh.terminal != self.terminal {
            diffs.push("terminal spec differs".to_string());
        }
        if fresh.steps.len() != self.steps.len() {
            diffs.push(format!(
                "{} steps recorded, {} recomputed",
                self.steps.len(),
                fresh.steps.len()
            ));
        }
        for (i, (a, b)) in self.steps.iter().zip(&fresh.steps).enumerate() {
            if a.step() != b.step() || a.numerator != b.numerator || a.denominator != b.denominator
            {
                diffs.push(format!("step {} construction differs", i + 1));
            }
            if a.report != b.report {
                diffs.push(format!("step {} report differs", i + 1));
            }
            // the recorded step as written, not only the recomputed one
            let recorded = match verify_step(&a.step(), &opts) {
                Ok(r) => r.items,
                Err(e) => {
                    diffs.push(format!("step {} is malformed: {e}", i + 1));
                    Vec::new()
                }
            };
            for it in recorded.iter().chain(&b.report.items) {
                if let super::ItemStatus::Fail(why) = &it.status {
                    diffs.push(format!("step {} item ({}) fails: {why}", i + 1, it.item));
                }
            }
        }
        Ok(diffs)
    }
}

fn tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

pub fn render_chain(trace: &ChainTrace) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "input:      {}", trace.input);
    let _ = writeln!(out, "normalized: {}", trace.normalized);
    let _ = writeln!(
        out,
        "level {}, field {}, order {}, {} step(s)",
        trace.level,
        trace.field,
        trace.order,
        trace.steps.len()
    );
    for (i, s) in trace.steps.iter().enumerate() {
        let _ = writeln!(out, "step {} (pivot {})", i + 1, s.pivot);
        let _ = writeln!(out, "  V  = {}", s.v);
        let _ = writeln!(out, "  V' = {}", s.vprime);
        let _ = writeln!(out, "  W  = {}", s.w);
        let _ = writeln!(
            out,
            "  witness {} / {}, height {}",
            tuple(&s.numerator),
            tuple(&s.denominator),
            s.height
        );
        for it in &s.report.items {
            let _ = writeln!(out, "  ({}) {}: {}", it.item, it.claim, it.status);
        }
    }
    let _ = writeln!(out, "terminal:   {}", trace.terminal);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_and_recheck() {
        let spec = LadderSpec::new(6, &[(1, 6)], &[3]);
        let opts = VerifyOptions::formula_only();
        let trace = ChainTrace::new(&chain(&spec, &opts).unwrap(), &opts);
        let json = serde_json::to_string_pretty(&trace).unwrap();
        let back: ChainTrace = serde_json::from_str(&json).unwrap();
        assert_eq!(back, trace);
        assert!(back.recheck(&opts).unwrap().is_empty());
        let text = render_chain(&trace);
        assert!(text.contains("step 2 (pivot 1)"));
    }

    #[test]
    fn tampered_trace_detected() {
        let spec = LadderSpec::new(6, &[(1, 6)], &[2]);
        let opts = VerifyOptions::formula_only();
        let mut trace = ChainTrace::new(&chain(&spec, &opts).unwrap(), &opts);
        trace.steps[0].pivot = 2;
        assert!(!trace.recheck(&opts).unwrap().is_empty());
    }
}
