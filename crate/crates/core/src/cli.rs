//! The `pfladder` command line.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 a
//! Groebner budget was exhausted.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::biliaison::{
    chain, render_chain, ChainTrace, Level, VerifyOptions, CHAIN_KIND, DEFAULT_MAX_VARS,
    DEFAULT_SEED,
};
use crate::error::Error;
use crate::ideal::{generators, verify_certificate, Certificate, GbBudget, CERTIFICATE_KIND};
use crate::ladder::{cells, height_formula, is_normalized, normalize, violations, LadderSpec};
use crate::pfaffian::{identity_check, Trials};
use crate::polyring::{Field, Ring, TermOrder};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "pfladder",
    version,
    about = "Pfaffian ideals of ladders: codimension, Groebner certificates, biliaison chains"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// JSON file: a ladder spec, or a certificate / chain trace for `verify`.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, default_value = "degrevlex")]
    pub order: TermOrder,
    #[arg(long, default_value = "rat")]
    pub field: Field,
    /// formula-only or full-gb.
    #[arg(long)]
    pub level: Option<Level>,
    /// Write the JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Largest ladder (in variables) verified with Groebner bases.
    #[arg(long, default_value_t = DEFAULT_MAX_VARS)]
    pub max_vars: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a ladder spec and report every violated constraint.
    Validate(Common),
    /// List the pfaffian generators of the ladder's ideal.
    Gens(Common),
    /// Codimension by the corner-ladder formula and by Groebner basis.
    Codim(Common),
    /// Reduced Groebner basis; `--out` saves a certificate.
    Gb(Common),
    /// Biliaison chain down to a linear ladder; `--out` saves the trace.
    Chain(Common),
    /// Re-verify a certificate or chain trace.
    Verify(Common),
    /// Check the De Concini-Procesi pfaffian relation on many tuples.
    IdentityCheck(IdentityArgs),
}

#[derive(Debug, Clone, Args)]
pub struct IdentityArgs {
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    /// `all` or a number of sampled pairs.
    #[arg(long, default_value = "50", value_parser = parse_trials)]
    pub trials: Trials,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value = "rat")]
    pub field: Field,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_trials(s: &str) -> Result<Trials, String> {
    if s == "all" {
        return Ok(Trials::All);
    }
    s.parse::<usize>()
        .map(Trials::Sampled)
        .map_err(|_| format!("expected 'all' or a count, got {s:?}"))
}

/// Outcome of a command: exit code plus what was printed.
struct Outcome {
    code: i32,
}

fn exit_for(e: &Error) -> i32 {
    match e {
        Error::BudgetExhausted(_) => EXIT_BUDGET,
        Error::Invariant(_) => EXIT_FAIL,
        _ => EXIT_INPUT,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(&cli.command, out, err) {
        Ok(o) => o.code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_for(&e)
        }
    }
}

fn ring_of(c: &Common) -> Ring {
    Ring::new(c.field, c.order)
}

fn read_input(c: &Common) -> Result<String, Error> {
    let path = c
        .input
        .as_ref()
        .ok_or_else(|| Error::Parse("--input <path> is required".into()))?;
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_spec(c: &Common) -> Result<LadderSpec, Error> {
    LadderSpec::from_json(&read_input(c)?)
}

/// Loads a spec and fails with the full violation list if it is invalid.
fn load_valid_spec(c: &Common) -> Result<LadderSpec, Error> {
    let spec = load_spec(c)?;
    let v = violations(&spec);
    if !v.is_empty() {
        return Err(Error::InvalidSpec(v));
    }
    Ok(spec)
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), Error> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    fs::write(path, text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn budget() -> GbBudget {
    GbBudget::default()
}

fn dispatch(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome, Error> {
    match cmd {
        Command::Validate(c) => validate_cmd(c, out, err),
        Command::Gens(c) => gens_cmd(c, out),
        Command::Codim(c) => codim_cmd(c, out),
        Command::Gb(c) => gb_cmd(c, out),
        Command::Chain(c) => chain_cmd(c, out),
        Command::Verify(c) => verify_cmd(c, out),
        Command::IdentityCheck(a) => identity_cmd(a, out),
    }
}

#[derive(Serialize)]
struct ValidateReport {
    valid: bool,
    violations: Vec<String>,
    normalized: bool,
    normal_form: Option<LadderSpec>,
    variables: usize,
}

fn validate_cmd(c: &Common, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome, Error> {
    let spec = load_spec(c)?;
    let v = violations(&spec);
    let valid = v.is_empty();
    let report = ValidateReport {
        valid,
        violations: v.iter().map(|x| x.to_string()).collect(),
        normalized: valid && is_normalized(&spec),
        normal_form: valid.then(|| normalize(&spec)),
        variables: if valid { cells(&spec).len() } else { 0 },
    };
    if let Some(path) = &c.out {
        write_json(path, &report)?;
    }
    if !valid {
        for line in &report.violations {
            let _ = writeln!(err, "invalid: {line}");
        }
        return Ok(Outcome { code: EXIT_INPUT });
    }
    let _ = writeln!(out, "valid: {spec}");
    let _ = writeln!(out, "variables: {}", report.variables);
    if report.normalized {
        let _ = writeln!(out, "normalized: yes");
    } else {
        let _ = writeln!(out, "normalized: no, normal form {}", normalize(&spec));
    }
    Ok(Outcome { code: EXIT_OK })
}

#[derive(Serialize)]
struct GensReport {
    spec: LadderSpec,
    generators: Vec<GenEntry>,
}

#[derive(Serialize)]
struct GenEntry {
    block: usize,
    indices: Vec<usize>,
    polynomial: String,
}

fn gens_cmd(c: &Common, out: &mut dyn Write) -> Result<Outcome, Error> {
    let spec = load_valid_spec(c)?;
    let gens = generators(&spec, ring_of(c))?;
    let entries: Vec<GenEntry> = gens
        .generators()
        .iter()
        .map(|g| {
            let p = g.provenance.as_ref().expect("generated from a spec");
            GenEntry {
                block: p.block + 1,
                indices: p.indices.clone(),
                polynomial: g.poly.to_string(),
            }
        })
        .collect();
    for e in &entries {
        let idx: Vec<String> = e.indices.iter().map(|i| i.to_string()).collect();
        let _ = writeln!(out, "[{}] = {}", idx.join(","), e.polynomial);
    }
    if let Some(path) = &c.out {
        write_json(
            path,
            &GensReport {
                spec,
                generators: entries,
            },
        )?;
    }
    Ok(Outcome { code: EXIT_OK })
}

#[derive(Serialize)]
struct CodimReport {
    spec: LadderSpec,
    variables: usize,
    height_formula: usize,
    codim_gb: Option<usize>,
    agree: Option<bool>,
}

fn codim_cmd(c: &Common, out: &mut dyn Write) -> Result<Outcome, Error> {
    let spec = load_valid_spec(c)?;
    let hf = height_formula(&spec);
    let nvars = cells(&spec).len();
    let level = c.level.unwrap_or(Level::FullGb);
    let gb = if level == Level::FullGb && nvars <= c.max_vars {
        Some(crate::ideal::codim_gb(&spec, ring_of(c), budget())?)
    } else {
        None
    };
    let _ = writeln!(out, "{hf}");
    let _ = writeln!(out, "variables: {nvars}");
    let _ = writeln!(out, "height formula: {hf}");
    match gb {
        Some(g) => {
            let _ = writeln!(out, "groebner codim: {g}");
        }
        None => {
            let _ = writeln!(out, "groebner codim: skipped");
        }
    }
    let report = CodimReport {
        spec,
        variables: nvars,
        height_formula: hf,
        codim_gb: gb,
        agree: gb.map(|g| g == hf),
    };
    if let Some(path) = &c.out {
        write_json(path, &report)?;
    }
    let code = if report.agree == Some(false) {
        EXIT_FAIL
    } else {
        EXIT_OK
    };
    Ok(Outcome { code })
}

fn gb_cmd(c: &Common, out: &mut dyn Write) -> Result<Outcome, Error> {
    let spec = load_valid_spec(c)?;
    let cert = Certificate::build(&spec, ring_of(c), budget())?;
    for p in &cert.groebner_basis {
        let _ = writeln!(out, "{p}");
    }
    let _ = writeln!(
        out,
        "basis size {}, dimension {}, codimension {}, height formula {}",
        cert.groebner_basis.len(),
        cert.dimension,
        cert.codimension,
        cert.height_formula
    );
    if let Some(path) = &c.out {
        write_json(path, &cert)?;
    }
    let code = if cert.codimension == cert.height_formula {
        EXIT_OK
    } else {
        EXIT_FAIL
    };
    Ok(Outcome { code })
}

fn verify_options(c: &Common, default: Level) -> VerifyOptions {
    VerifyOptions {
        level: c.level.unwrap_or(default),
        ring: ring_of(c),
        budget: budget(),
        max_vars: c.max_vars,
        seed: c.seed,
    }
}

fn chain_code(trace: &ChainTrace) -> i32 {
    if !trace.ok() {
        EXIT_FAIL
    } else if trace.steps.iter().any(|s| s.report.budget_skipped()) {
        EXIT_BUDGET
    } else {
        EXIT_OK
    }
}

fn chain_cmd(c: &Common, out: &mut dyn Write) -> Result<Outcome, Error> {
    let spec = load_valid_spec(c)?;
    let opts = verify_options(c, Level::FormulaOnly);
    let result = chain(&spec, &opts)?;
    let trace = ChainTrace::new(&result, &opts);
    let _ = write!(out, "{}", render_chain(&trace));
    if let Some(path) = &c.out {
        write_json(path, &trace)?;
    }
    Ok(Outcome {
        code: chain_code(&trace),
    })
}

fn verify_cmd(c: &Common, out: &mut dyn Write) -> Result<Outcome, Error> {
    let text = read_input(c)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    let kind = value.get("kind").and_then(|k| k.as_str()).unwrap_or("");
    match kind {
        CERTIFICATE_KIND => {
            let cert: Certificate =
                serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
            let check = verify_certificate(&cert, budget())?;
            if let Some(path) = &c.out {
                write_json(path, &check)?;
            }
            for p in &check.problems {
                let _ = writeln!(out, "problem: {p}");
            }
            if check.passed() {
                let _ = writeln!(
                    out,
                    "certificate verified: codimension {}",
                    cert.codimension
                );
                Ok(Outcome { code: EXIT_OK })
            } else {
                let _ = writeln!(out, "certificate REJECTED");
                Ok(Outcome { code: EXIT_FAIL })
            }
        }
        CHAIN_KIND => {
            let trace: ChainTrace =
                serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
            let base = verify_options(c, trace.level);
            let diffs = trace.recheck(&base)?;
            #[derive(Serialize)]
            struct TraceCheck<'a> {
                problems: &'a [String],
            }
            if let Some(path) = &c.out {
                write_json(path, &TraceCheck { problems: &diffs })?;
            }
            for d in &diffs {
                let _ = writeln!(out, "problem: {d}");
            }
            if diffs.is_empty() {
                let _ = writeln!(out, "chain verified: {} step(s)", trace.steps.len());
                Ok(Outcome {
                    code: chain_code(&trace),
                })
            } else {
                let _ = writeln!(out, "chain REJECTED");
                Ok(Outcome { code: EXIT_FAIL })
            }
        }
        other => Err(Error::Parse(format!(
            "unknown document kind {other:?} (expected {CERTIFICATE_KIND:?} or {CHAIN_KIND:?})"
        ))),
    }
}

fn identity_cmd(a: &IdentityArgs, out: &mut dyn Write) -> Result<Outcome, Error> {
    let ring = Ring::new(a.field, TermOrder::default());
    let report = identity_check(a.p, a.m, a.n, a.trials, a.seed, ring)?;
    let _ = writeln!(
        out,
        "p={} m={} n={}: {} instances ({} overlapping), {} nonzero residuals",
        report.p,
        report.m,
        report.n,
        report.instances,
        report.overlapping,
        report.failures.len()
    );
    for (c, d, r) in &report.failures {
        let _ = writeln!(out, "  c={c:?} d={d:?} residual {r}");
    }
    if let Some(path) = &a.out {
        write_json(path, &report)?;
    }
    Ok(Outcome {
        code: if report.passed() { EXIT_OK } else { EXIT_FAIL },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["pfladder"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    fn spec_file(dir: &Path, json: &str) -> String {
        let p = dir.join("spec.json");
        fs::write(&p, json).unwrap();
        p.to_string_lossy().into_owned()
    }

    #[test]
    fn unknown_flag_is_input_error() {
        assert_eq!(run_args(&["codim", "--bogus"]).0, EXIT_INPUT);
    }

    #[test]
    fn diagonal_corner_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let f = spec_file(dir.path(), r#"{"n": 5, "corners": [[4,4]], "t": [1]}"#);
        let (code, _, err) = run_args(&["validate", "--input", &f]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("a_k<b_k"), "{err}");
    }

    #[test]
    fn malformed_json_reports_position() {
        let dir = tempfile::tempdir().unwrap();
        let f = spec_file(dir.path(), "{\"n\": 5,\n \"corners\": [[1,2]\n");
        let (code, _, err) = run_args(&["codim", "--input", &f]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("line"), "{err}");
    }

    #[test]
    fn identity_odd_length() {
        let (code, _, err) = run_args(&["identity-check", "--p", "3", "--m", "2", "--n", "6"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("even length required"));
    }

    #[test]
    fn gb_certificate_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let f = spec_file(dir.path(), r#"{"n": 5, "corners": [[1,5]], "t": [2]}"#);
        let cert = dir.path().join("cert.json");
        let (code, _, _) = run_args(&["gb", "--input", &f, "--out", cert.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK);
        let (code, out, _) = run_args(&["verify", "--input", cert.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK, "{out}");
    }
}
