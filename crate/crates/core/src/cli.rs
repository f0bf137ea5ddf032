//! Command-line front end. The `chopped` binary only forwards to [`main`].
//!
//! Exit codes: 0 success, 1 failed check, 2 bad input file or argument,
//! 3 incompatible or unordered vectors, 4 internal invariant violated,
//! 5 size cap exceeded.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::algorithm::{m2_closed_form, run_algorithm, RunOptions};
use crate::chopped::ChoppedLattice;
use crate::dot::{to_dot, Highlight};
use crate::error::Error;
use crate::formula::s1960;
use crate::oracle::{
    check_chopped_sectionally_complemented, size_cap_from_env, verify_representation,
    verify_theorems, ComplementationReport, RepresentationReport, TheoremReport, VerifyConfig,
};
use crate::poset::Poset;
use crate::strategy::Strategy;
use crate::vector::Vector;

#[derive(Debug, Parser)]
#[command(name = "chopped", version, about = "Sectional complements in ideal lattices of chopped lattices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build M from a poset file and print its census.
    Build {
        file: PathBuf,
        /// Write the Hasse diagram of M as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run the cut algorithm on u ≤ v.
    Seccomp {
        file: PathBuf,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        /// lex, revlex or random:<seed>
        #[arg(long, default_value = "lex")]
        strategy: Strategy,
        /// Print the cut trace as JSON lines.
        #[arg(long)]
        trace: bool,
        /// Write the diagram of M with the cut elements colored.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Let step 3 cut any C-failure (experimental).
        #[arg(long)]
        unrestricted_c: bool,
    },
    /// Check the theorems on every comparable pair of ideals.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        strategies: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

/// What a command printed and how it wants the process to end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: 0 }
    }

    fn error(code: i32, e: impl std::fmt::Display) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code }
    }
}

fn read_poset(path: &Path) -> Result<Poset, Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::error(2, format!("{}: {e}", path.display())))?;
    Poset::parse_json(&text).map_err(|e| Outcome::error(2, e))
}

fn build_m(poset: &Poset) -> Result<ChoppedLattice, Outcome> {
    ChoppedLattice::build(poset).map_err(|e| Outcome::error(2, e))
}

fn write_file(path: &Path, text: &str) -> Result<(), Outcome> {
    std::fs::write(path, text).map_err(|e| Outcome::error(2, format!("{}: {e}", path.display())))
}

pub fn build_summary(m: &ChoppedLattice) -> String {
    let (v, c, h) = m.census();
    format!(
        "blocks: {}, elements: {}, atoms: {}, V:{v} C:{c} H:{h}",
        m.block_count(),
        m.len(),
        m.global_atoms().len()
    )
}

fn cmd_build(file: &Path, dot: Option<&Path>) -> Result<Outcome, Outcome> {
    let m = build_m(&read_poset(file)?)?;
    let mut out = build_summary(&m);
    writeln!(out, "\nmaximal elements: {}", m.maximal_elements().len()).unwrap();
    if let Some(path) = dot {
        write_file(path, &to_dot(&m, None))?;
    }
    Ok(Outcome::ok(out))
}

fn seccomp_code(e: &Error) -> i32 {
    match e {
        Error::IncompatibleVector | Error::NotOrdered | Error::KeyMismatch { .. } => 3,
        Error::InvariantViolation(_) | Error::Divergence(_) | Error::NoUniqueMaximum(_) => 4,
        Error::SizeLimit { .. } => 5,
        _ => 2,
    }
}

fn cmd_seccomp(
    file: &Path,
    u: &str,
    v: &str,
    options: RunOptions,
    trace: bool,
    dot: Option<&Path>,
) -> Result<Outcome, Outcome> {
    let m = build_m(&read_poset(file)?)?;
    let parse = |s: &str| Vector::parse(&m, s).map_err(|e| Outcome::error(2, e));
    let (u, v) = (parse(u)?, parse(v)?);
    let fail = |e: Error| Outcome::error(seccomp_code(&e), e);
    let run = run_algorithm(&m, &u, &v, options).map_err(fail)?;
    let m2 = m2_closed_form(&m, &u, &v).map_err(fail)?;
    let expected = s1960(&m, &u, &v);
    let mut out = String::new();
    writeln!(out, "strategy: {}", options.strategy).unwrap();
    if options.unrestricted_c {
        writeln!(out, "unrestricted C-cuts: results carry no guarantee").unwrap();
    }
    writeln!(out, "m:     {}", run.m.format(&m)).unwrap();
    writeln!(out, "m2:    {}", m2.format(&m)).unwrap();
    writeln!(out, "s:     {}", run.s.format(&m)).unwrap();
    writeln!(out, "s1960: {}", expected.format(&m)).unwrap();
    writeln!(out, "cuts: {}", run.trace.len()).unwrap();
    writeln!(out, "{}", if run.s == expected { "MATCH" } else { "MISMATCH" }).unwrap();
    if trace {
        for line in run.trace_json_lines(&m) {
            writeln!(out, "{line}").unwrap();
        }
    }
    if let Some(path) = dot {
        write_file(path, &to_dot(&m, Some(&Highlight::from_run(&m, &run))))?;
    }
    Ok(Outcome::ok(out))
}

/// The report written by `verify --json`.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub theorems: TheoremReport,
    pub representation: RepresentationReport,
    pub sectionally_complemented: ComplementationReport,
}

pub fn verify_report(poset: &Poset, config: &VerifyConfig) -> crate::Result<VerifyReport> {
    let theorems = verify_theorems(poset, config)?;
    let representation = verify_representation(poset, config.size_cap)?;
    let m = ChoppedLattice::build(poset)?;
    let sectionally_complemented = check_chopped_sectionally_complemented(&m, config.size_cap)?;
    Ok(VerifyReport {
        passed: theorems.all_passed()
            && representation.isomorphic
            && sectionally_complemented.sectionally_complemented(),
        theorems,
        representation,
        sectionally_complemented,
    })
}

fn cmd_verify(file: &Path, strategies: usize, seed: u64, json: Option<&Path>) -> Result<Outcome, Outcome> {
    let poset = read_poset(file)?;
    let config = VerifyConfig { strategies, seed, size_cap: size_cap_from_env(), ..VerifyConfig::default() };
    let report = verify_report(&poset, &config).map_err(|e| {
        let code = if matches!(e, Error::SizeLimit { .. }) { 5 } else { 2 };
        Outcome::error(code, e)
    })?;
    let t = &report.theorems;
    let mut out = String::new();
    writeln!(
        out,
        "ideals: {}, pairs: {} of {}{}",
        t.ideals,
        t.swept_pairs,
        t.comparable_pairs,
        if t.sampled { " (sampled)" } else { "" }
    )
    .unwrap();
    writeln!(out, "strategies: {}", t.strategies.join(" ")).unwrap();
    for c in &t.checks {
        writeln!(out, "{:<22} {:<13} passed {} failed {} skipped {}", c.name, c.status, c.passed, c.failed, c.skipped)
            .unwrap();
    }
    for c in &t.diagnostics {
        writeln!(out, "{:<22} {:<13} (diagnostic) held {} broken {}", c.name, c.status, c.passed, c.failed).unwrap();
    }
    let r = &report.representation;
    writeln!(
        out,
        "representation         {:<13} |Con Id M| {} |downsets| {}",
        if r.isomorphic { "pass" } else { "fail" },
        r.congruence_count,
        r.downset_count
    )
    .unwrap();
    let s = &report.sectionally_complemented;
    writeln!(
        out,
        "sectionally_complemented {:<11} pairs {}",
        if s.sectionally_complemented() { "pass" } else { "fail" },
        s.pairs_checked
    )
    .unwrap();
    writeln!(
        out,
        "cuts: V {} C(A) {} C(B) {}; exhaustive pairs {} sequences {}",
        t.cuts.v_cuts, t.cuts.c_cuts_case_a, t.cuts.c_cuts_case_b, t.cuts.exhaustive_pairs, t.cuts.exhaustive_sequences
    )
    .unwrap();
    let u = &t.unrestricted_c;
    writeln!(
        out,
        "unrestricted C (not gated): runs {} differing {} incompatible {} errors {}",
        u.runs, u.differing, u.incompatible, u.errors
    )
    .unwrap();
    writeln!(out, "{}", if report.passed { "ALL PASS" } else { "FAILED" }).unwrap();
    if let Some(path) = json {
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        write_file(path, &text)?;
    }
    Ok(Outcome { stdout: out, stderr: String::new(), code: if report.passed { 0 } else { 1 } })
}

/// Runs one parsed command.
pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Build { file, dot } => cmd_build(file, dot.as_deref()),
        Command::Seccomp { file, u, v, strategy, trace, dot, unrestricted_c } => cmd_seccomp(
            file,
            u,
            v,
            RunOptions { strategy: *strategy, unrestricted_c: *unrestricted_c },
            *trace,
            dot.as_deref(),
        ),
        Command::Verify { file, strategies, seed, json } => cmd_verify(file, *strategies, *seed, json.as_deref()),
    };
    result.unwrap_or_else(|e| e)
}

/// Parses `std::env::args`, runs, prints and returns the exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let outcome = run(&cli);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    outcome.code
}
