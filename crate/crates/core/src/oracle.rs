//! Brute-force ground truth for `Id M` and the theorem sweeps built on it.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::algorithm::{
    enumerate_outcomes, find_c_failures, m2_closed_form, minimal_c_failures, run_algorithm,
    run_observed, CutObserver, Failure, RunOptions,
};
use crate::chopped::{ChoppedLattice, Role, SuborderKind};
use crate::congruence::{congruence_lattice_of, congruences};
use crate::error::{Error, Result};
use crate::formula::{atom_difference, s1960};
use crate::iso::lattices_isomorphic;
use crate::lattice::{downset_lattice, FiniteLattice};
use crate::poset::Poset;
use crate::strategy::{Lcg, Strategy};
use crate::vector::{
    atoms_below, compatible_at, is_compatible, is_compatible_kind, join_unchecked, meet_unchecked, vector_leq,
    Vector,
};

/// Default cap on the number of candidate vectors `6^|covers|`.
pub const DEFAULT_SIZE_CAP: u128 = 1_000_000;

/// Reads `CHOPPED_SIZE_CAP`, falling back to [`DEFAULT_SIZE_CAP`].
pub fn size_cap_from_env() -> u128 {
    std::env::var("CHOPPED_SIZE_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SIZE_CAP)
}

/// Every compatible vector, in lexicographic order of roles.
pub fn enumerate_ideals(m: &ChoppedLattice, cap: u128) -> Result<Vec<Vector>> {
    let k = m.block_count();
    let candidates = 6u128.checked_pow(k as u32).unwrap_or(u128::MAX);
    if candidates > cap {
        return Err(Error::SizeLimit { candidates, cap });
    }
    let mut out = Vec::new();
    let mut digits = vec![0usize; k];
    loop {
        let c = Vector(digits.iter().map(|&d| Role::ALL[d]).collect());
        if is_compatible(m, &c)? {
            out.push(c);
        }
        let Some(pos) = (0..k).rev().find(|&i| digits[i] < 5) else { break };
        digits[pos] += 1;
        digits[pos + 1..].iter_mut().for_each(|d| *d = 0);
    }
    Ok(out)
}

/// `Id M` as a [`FiniteLattice`], with the vectors behind each element.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    pub vectors: Vec<Vector>,
    pub lattice: FiniteLattice,
    index: HashMap<Vector, usize>,
}

impl IdealLattice {
    pub fn position(&self, c: &Vector) -> Option<usize> {
        self.index.get(c).copied()
    }
}

pub fn ideal_lattice(m: &ChoppedLattice, cap: u128) -> Result<IdealLattice> {
    let vectors = enumerate_ideals(m, cap)?;
    let index: HashMap<Vector, usize> =
        vectors.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let n = vectors.len();
    let mut meet = vec![0u32; n * n];
    let mut join = vec![0u32; n * n];
    for (i, a) in vectors.iter().enumerate() {
        for (j, b) in vectors.iter().enumerate() {
            let lookup = |c: Vector| {
                index.get(&c).map(|&x| x as u32).ok_or_else(|| {
                    Error::InvariantViolation(format!("{} is not an enumerated ideal", c.format(m)))
                })
            };
            meet[i * n + j] = lookup(meet_unchecked(a, b))?;
            join[i * n + j] = lookup(join_unchecked(m, a, b))?;
        }
    }
    let labels = vectors.iter().map(|c| c.format(m)).collect();
    let lattice = FiniteLattice::from_tables(labels, meet, join)?;
    Ok(IdealLattice { vectors, lattice, index })
}

/// The members of `ideals` that are sectional complements of `u` in `v`.
pub fn complements_among(m: &ChoppedLattice, ideals: &[Vector], u: &Vector, v: &Vector) -> BTreeSet<Vector> {
    let zero = Vector::zero(m);
    ideals
        .iter()
        .filter(|s| meet_unchecked(s, u) == zero && join_unchecked(m, s, u) == *v)
        .cloned()
        .collect()
}

/// All compatible `s` with `s ∧ u = 0` and `s ∨ u = v`.
pub fn sectional_complements_bruteforce(
    m: &ChoppedLattice,
    u: &Vector,
    v: &Vector,
    cap: u128,
) -> Result<BTreeSet<Vector>> {
    if !is_compatible(m, u)? || !is_compatible(m, v)? {
        return Err(Error::IncompatibleVector);
    }
    if !vector_leq(u, v) {
        return Err(Error::NotOrdered);
    }
    Ok(complements_among(m, &enumerate_ideals(m, cap)?, u, v))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplementationReport {
    pub pairs_checked: usize,
    /// Pairs `u ≤ v` (by label) with no relative complement.
    pub failing: Vec<(String, String)>,
}

impl ComplementationReport {
    pub fn sectionally_complemented(&self) -> bool {
        self.failing.is_empty()
    }
}

/// Checks every `a ≤ b` for some `x` with `x ∧ a = 0`, `x ∨ a = b`.
pub fn check_sectionally_complemented(lattice: &FiniteLattice) -> ComplementationReport {
    let n = lattice.len();
    let mut report = ComplementationReport { pairs_checked: 0, failing: Vec::new() };
    for a in 0..n {
        for b in (0..n).filter(|&b| lattice.leq(a, b)) {
            report.pairs_checked += 1;
            if lattice.relative_complements(a, b).is_empty() {
                report.failing.push((lattice.label(a).to_owned(), lattice.label(b).to_owned()));
            }
        }
    }
    report
}

/// [`check_sectionally_complemented`] on `Id M`.
pub fn check_chopped_sectionally_complemented(m: &ChoppedLattice, cap: u128) -> Result<ComplementationReport> {
    Ok(check_sectionally_complemented(&ideal_lattice(m, cap)?.lattice))
}

/// Outcome of comparing `Con(Id M)` with the down-set lattice of `P`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentationReport {
    pub poset: String,
    pub ideal_count: usize,
    pub congruence_count: usize,
    pub downset_count: usize,
    pub distributive: bool,
    pub isomorphic: bool,
    /// Congruence (non-trivial classes, by ideal index) to down-set.
    pub bijection: Vec<(String, String)>,
}

pub fn verify_representation(poset: &Poset, cap: u128) -> Result<RepresentationReport> {
    let m = ChoppedLattice::build(poset)?;
    let ideals = ideal_lattice(&m, cap)?;
    let con = congruence_lattice_of(&congruences(&ideals.lattice));
    let downsets = downset_lattice(poset);
    let map = lattices_isomorphic(&con, &downsets);
    Ok(RepresentationReport {
        poset: poset.to_json(),
        ideal_count: ideals.vectors.len(),
        congruence_count: con.len(),
        downset_count: downsets.len(),
        distributive: con.is_distributive(),
        isomorphic: map.is_some(),
        bijection: map
            .map(|map| {
                map.iter()
                    .enumerate()
                    .map(|(i, &j)| (con.label(i).to_owned(), downsets.label(j).to_owned()))
                    .collect()
            })
            .unwrap_or_default(),
    })
}

/// Parameters of a theorem sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub strategies: usize,
    pub seed: u64,
    /// Above this many comparable pairs, a seeded sample of this size is used.
    pub pair_cap: usize,
    /// Runs with at most this many cuts also get every cut order explored.
    pub exhaustive_cut_limit: usize,
    pub size_cap: u128,
    pub max_sequences: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            strategies: 8,
            seed: 0,
            pair_cap: 200,
            exhaustive_cut_limit: 4,
            size_cap: DEFAULT_SIZE_CAP,
            max_sequences: 100_000,
        }
    }
}

/// Names of the per-pair checks, in report order.
pub const CHECKS: [&str; 12] = [
    "confluence",
    "confluence_exhaustive",
    "identity_1960",
    "sectional_complement",
    "one_cover_depth",
    "step2_closed_form",
    "stem_sharing",
    "non_interference",
    "formula_bounds",
    "sandwich_uniqueness",
    "trace_replay",
    "s1960_is_complement",
];

/// Reported alongside [`CHECKS`] but never counted as a failure.
///
/// `complements_below_m`: every brute-force complement is `≤ m`
/// componentwise. `stem_sharing_strict`: same-stem siblings of a C-failure
/// are themselves failures, i.e. also agree with `m`.
pub const DIAGNOSTICS: [&str; 2] = ["complements_below_m", "stem_sharing_strict"];

fn check_index(name: &str) -> usize {
    CHECKS
        .iter()
        .chain(&DIAGNOSTICS)
        .position(|&c| c == name)
        .expect("known check")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub poset: String,
    pub u: String,
    pub v: String,
    pub strategy: Option<String>,
    pub detail: String,
    pub trace: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    /// `pass`, `fail` or `not exercised`.
    pub status: String,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub first_counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CutCensus {
    pub v_cuts: usize,
    pub c_cuts_case_a: usize,
    pub c_cuts_case_b: usize,
    pub max_trace_len: usize,
    pub exhaustive_pairs: usize,
    pub exhaustive_sequences: usize,
    pub transient_h_incompatible: usize,
}

/// Step 3 without the minimality restriction; reported, never gated on.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct UnrestrictedReport {
    pub runs: usize,
    pub differing: usize,
    pub incompatible: usize,
    pub errors: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub poset: String,
    pub ideals: usize,
    pub comparable_pairs: usize,
    pub swept_pairs: usize,
    pub sampled: bool,
    pub strategies: Vec<String>,
    pub checks: Vec<CheckResult>,
    pub diagnostics: Vec<CheckResult>,
    pub cuts: CutCensus,
    pub unrestricted_c: UnrestrictedReport,
}

impl TheoremReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }

    pub fn check(&self, name: &str) -> &CheckResult {
        self.checks
            .iter()
            .chain(&self.diagnostics)
            .find(|c| c.name == name)
            .expect("known check")
    }
}

#[derive(Debug, Clone)]
enum Outcome {
    Pass,
    Skip,
    Fail { strategy: Option<Strategy>, detail: String, trace: Vec<String> },
}

struct PairResult {
    outcomes: Vec<Outcome>,
    census: CutCensus,
    unrestricted: UnrestrictedReport,
}

/// Records violations of the cut invariants while a run proceeds.
struct Instrument<'a> {
    m: &'a ChoppedLattice,
    target: &'a Vector,
    s1960: &'a Vector,
    bounds: Vec<String>,
    stems: Vec<String>,
    strict_stems: Vec<String>,
    interference: Vec<String>,
}

impl Instrument<'_> {
    fn failure_name(&self, f: &Failure) -> String {
        let [p, q, r] = f.suborder.names(self.m.poset());
        format!("{}({p},{q},{r})", f.kind())
    }
}

impl CutObserver for Instrument<'_> {
    fn on_cut(&mut self, step: u8, before: &Vector, _eligible: &[Failure], chosen: &Failure, after: &Vector) {
        if !vector_leq(self.s1960, after) {
            self.bounds.push(format!(
                "s1960 = {} is not below {} after cutting {}",
                self.s1960.format(self.m),
                after.format(self.m),
                self.failure_name(chosen)
            ));
        }
        if step != 3 {
            return;
        }
        let poset = self.m.poset();
        let failures = match find_c_failures(self.m, before, self.target) {
            Ok(f) => f,
            Err(e) => {
                self.stems.push(e.to_string());
                return;
            }
        };
        // Every C-suborder sharing the stem of a failure is C-incompatible,
        // and any failure among them carries the same cut.
        for f in &failures {
            for s in self.m.suborders().iter().filter(|s| {
                s.kind == SuborderKind::C && s.q == f.suborder.q && s.r == f.suborder.r
            }) {
                let name = format!("C({})", s.names(poset).join(","));
                match failures.iter().find(|g| g.suborder == *s) {
                    Some(g) if g.coordinate == f.coordinate && g.to == f.to => {}
                    Some(_) => self.stems.push(format!(
                        "{} and {name} share a stem but prescribe different cuts",
                        self.failure_name(f)
                    )),
                    None if compatible_at(self.m, before, s) => self.stems.push(format!(
                        "{} fails but {name} on the same stem is compatible",
                        self.failure_name(f)
                    )),
                    None => self.strict_stems.push(format!(
                        "{} fails; {name} on the same stem is incompatible but differs from m",
                        self.failure_name(f)
                    )),
                }
            }
        }
        let minimal = minimal_c_failures(poset, &failures);
        match find_c_failures(self.m, after, self.target) {
            Ok(remaining) => {
                for g in minimal.iter().filter(|g| g.stem() != chosen.stem()) {
                    if !remaining.iter().any(|h| h.suborder == g.suborder) {
                        self.interference.push(format!(
                            "cutting {} removed the failure {}",
                            self.failure_name(chosen),
                            self.failure_name(g)
                        ));
                    }
                }
            }
            Err(e) => self.interference.push(e.to_string()),
        }
    }
}

fn one_cover_below(s: &Vector, target: &Vector) -> bool {
    s.0.iter().zip(&target.0).all(|(&a, &b)| a == b || b.covers(a))
}

fn record(outcomes: &mut [Outcome], name: &str, strategy: Option<Strategy>, detail: String, trace: Vec<String>) {
    let slot = &mut outcomes[check_index(name)];
    if !matches!(slot, Outcome::Fail { .. }) {
        *slot = Outcome::Fail { strategy, detail, trace };
    }
}

fn check_pair(
    m: &ChoppedLattice,
    ideals: &[Vector],
    u: &Vector,
    v: &Vector,
    strategies: &[Strategy],
    config: &VerifyConfig,
) -> PairResult {
    let mut outcomes = vec![Outcome::Pass; CHECKS.len() + DIAGNOSTICS.len()];
    let mut census = CutCensus::default();
    let zero = Vector::zero(m);
    let expected = s1960(m, u, v);
    let complements = complements_among(m, ideals, u, v);
    let m2 = m2_closed_form(m, u, v);

    let mut first: Option<Vector> = None;
    let mut lex_cuts = None;
    for &strategy in strategies {
        let target = match crate::algorithm::max_complement_vector(m, u, v) {
            Ok(t) => t,
            Err(e) => {
                record(&mut outcomes, "sectional_complement", Some(strategy), e.to_string(), Vec::new());
                continue;
            }
        };
        let mut instrument = Instrument {
            m,
            target: &target,
            s1960: &expected,
            bounds: Vec::new(),
            stems: Vec::new(),
            strict_stems: Vec::new(),
            interference: Vec::new(),
        };
        let run = match run_observed(m, u, v, strategy.into(), &mut instrument) {
            Ok(run) => run,
            Err(e) => {
                for name in ["confluence", "identity_1960", "sectional_complement"] {
                    record(&mut outcomes, name, Some(strategy), e.to_string(), Vec::new());
                }
                continue;
            }
        };
        let trace = run.trace_json_lines(m);
        let s = &run.s;
        let show = |c: &Vector| c.format(m);

        for (name, found) in [
            ("formula_bounds", &instrument.bounds),
            ("stem_sharing", &instrument.stems),
            ("stem_sharing_strict", &instrument.strict_stems),
            ("non_interference", &instrument.interference),
        ] {
            if let Some(detail) = found.first() {
                record(&mut outcomes, name, Some(strategy), detail.clone(), trace.clone());
            }
        }

        match &first {
            None => first = Some(s.clone()),
            Some(s0) if s0 != s => record(&mut outcomes, 
                "confluence",
                Some(strategy),
                format!("s = {} differs from {} of {}", show(s), show(s0), strategies[0]),
                trace.clone(),
            ),
            _ => {}
        }
        if *s != expected {
            record(&mut outcomes, "identity_1960", Some(strategy), format!("s = {}, s1960 = {}", show(s), show(&expected)), trace.clone());
        }
        let compatible = is_compatible(m, s).unwrap_or(false);
        let meet = meet_unchecked(s, u);
        let join = join_unchecked(m, s, u);
        if !compatible || meet != zero || join != *v || !complements.contains(s) {
            record(&mut outcomes, 
                "sectional_complement",
                Some(strategy),
                format!(
                    "s = {}: compatible {compatible}, s∧u = {}, s∨u = {}, among {} brute-force complements: {}",
                    show(s),
                    show(&meet),
                    show(&join),
                    complements.len(),
                    complements.contains(s)
                ),
                trace.clone(),
            );
        }
        if !one_cover_below(s, &run.m) || run.trace.len() > m.block_count() {
            record(&mut outcomes, 
                "one_cover_depth",
                Some(strategy),
                format!("s = {}, m = {}, {} cuts", show(s), show(&run.m), run.trace.len()),
                trace.clone(),
            );
        }
        match &m2 {
            Ok(m2) if *m2 == run.after_step2 && is_compatible_kind(m, m2, SuborderKind::V) => {}
            Ok(m2) => record(&mut outcomes, 
                "step2_closed_form",
                Some(strategy),
                format!("after step 2 {}, closed form {}", show(&run.after_step2), show(m2)),
                trace.clone(),
            ),
            Err(e) => record(&mut outcomes, "step2_closed_form", Some(strategy), e.to_string(), trace.clone()),
        }
        match run.replay() {
            Ok(r) if r == *s => {}
            _ => record(&mut outcomes, "trace_replay", Some(strategy), "trace does not reproduce s".into(), trace.clone()),
        }

        census.transient_h_incompatible += run.transient_h_incompatible;
        census.max_trace_len = census.max_trace_len.max(run.trace.len());
        if strategy == strategies[0] {
            lex_cuts = Some(run.trace.len());
            for rec in &run.trace {
                match rec.failure.case {
                    None => census.v_cuts += 1,
                    Some(crate::algorithm::CCase::A) => census.c_cuts_case_a += 1,
                    Some(crate::algorithm::CCase::B) => census.c_cuts_case_b += 1,
                }
            }
        }
    }
    if strategies.len() < 2 {
        outcomes[check_index("confluence")] = Outcome::Skip;
    }

    match (lex_cuts, &first) {
        (Some(cuts), Some(s0)) if cuts <= config.exhaustive_cut_limit => {
            match enumerate_outcomes(m, u, v, config.max_sequences) {
                Ok(out) => {
                    census.exhaustive_pairs += 1;
                    census.exhaustive_sequences += out.sequences;
                    if out.results.len() != 1 || !out.results.contains(s0) {
                        let found: Vec<String> = out.results.iter().map(|c| c.format(m)).collect();
                        record(&mut outcomes, 
                            "confluence_exhaustive",
                            None,
                            format!("{} sequences reach {{{}}}", out.sequences, found.join(" ; ")),
                            Vec::new(),
                        );
                    }
                }
                Err(e) => record(&mut outcomes, "confluence_exhaustive", None, e.to_string(), Vec::new()),
            }
        }
        _ => outcomes[check_index("confluence_exhaustive")] = Outcome::Skip,
    }

    // Closed-form side, independent of any run.
    let fresh = atom_difference(m, u, v);
    match crate::algorithm::max_complement_vector(m, u, v) {
        Ok(target) => {
            let at_m = atoms_below(m, &target);
            if !at_m.is_subset(&fresh) || !vector_leq(&expected, &target) {
                record(&mut outcomes, 
                    "formula_bounds",
                    None,
                    format!("m = {}, s1960 = {}", target.format(m), expected.format(m)),
                    Vec::new(),
                );
            }
            let sandwiched: Vec<&Vector> = ideals
                .iter()
                .filter(|c| vector_leq(&expected, c) && vector_leq(c, &target))
                .collect();
            if sandwiched.len() != 1 || *sandwiched[0] != expected {
                let found: Vec<String> = sandwiched.iter().map(|c| c.format(m)).collect();
                record(&mut outcomes, "sandwich_uniqueness", None, format!("found {}", found.join(" ; ")), Vec::new());
            }
            if let Some(c) = complements.iter().find(|c| !vector_leq(c, &target)) {
                record(&mut outcomes, 
                    "complements_below_m",
                    None,
                    format!("complement {} is not below m = {}", c.format(m), target.format(m)),
                    Vec::new(),
                );
            }
        }
        Err(e) => record(&mut outcomes, "formula_bounds", None, e.to_string(), Vec::new()),
    }
    if !complements.contains(&expected) {
        record(&mut outcomes, 
            "s1960_is_complement",
            None,
            format!("s1960 = {} is not a sectional complement", expected.format(m)),
            Vec::new(),
        );
    }

    let mut unrestricted = UnrestrictedReport::default();
    if let Some(s0) = &first {
        unrestricted.runs = 1;
        let opts = RunOptions { strategy: Strategy::ReverseLexicographic, unrestricted_c: true };
        match run_algorithm(m, u, v, opts) {
            Ok(run) => {
                unrestricted.differing = usize::from(run.s != *s0);
                unrestricted.incompatible = usize::from(!is_compatible(m, &run.s).unwrap_or(false));
            }
            Err(_) => unrestricted.errors = 1,
        }
    }

    PairResult { outcomes, census, unrestricted }
}

/// All comparable pairs of ideals, or a seeded sample of `pair_cap` of them.
fn comparable_pairs(ideals: &[Vector], pair_cap: usize, seed: u64) -> (usize, Vec<(usize, usize)>, bool) {
    let mut pairs = Vec::new();
    for (i, a) in ideals.iter().enumerate() {
        for (j, b) in ideals.iter().enumerate() {
            if vector_leq(a, b) {
                pairs.push((i, j));
            }
        }
    }
    let total = pairs.len();
    if total <= pair_cap {
        return (total, pairs, false);
    }
    // Partial Fisher–Yates with the strategy generator, then canonical order.
    let mut rng = Lcg::new(seed);
    for k in 0..pair_cap {
        let pick = k + rng.pick(total - k);
        pairs.swap(k, pick);
    }
    pairs.truncate(pair_cap);
    pairs.sort_unstable();
    (total, pairs, true)
}

/// Sweeps compatible pairs `u ≤ v` and checks confluence, the 1960
/// identity and the cut invariants on each.
pub fn verify_theorems(poset: &Poset, config: &VerifyConfig) -> Result<TheoremReport> {
    let m = ChoppedLattice::build(poset)?;
    let ideals = enumerate_ideals(&m, config.size_cap)?;
    let strategies = Strategy::family(config.strategies.max(1), config.seed);
    let (total, pairs, sampled) = comparable_pairs(&ideals, config.pair_cap, config.seed);

    let results: Vec<PairResult> = pairs
        .par_iter()
        .map(|&(i, j)| check_pair(&m, &ideals, &ideals[i], &ideals[j], &strategies, config))
        .collect();

    let mut checks: Vec<CheckResult> = CHECKS
        .iter()
        .chain(&DIAGNOSTICS)
        .map(|&name| CheckResult {
            name: name.to_owned(),
            status: String::new(),
            passed: 0,
            failed: 0,
            skipped: 0,
            first_counterexample: None,
        })
        .collect();
    let mut census = CutCensus::default();
    let mut unrestricted = UnrestrictedReport::default();
    for (&(i, j), result) in pairs.iter().zip(&results) {
        for (check, outcome) in checks.iter_mut().zip(&result.outcomes) {
            match outcome {
                Outcome::Pass => check.passed += 1,
                Outcome::Skip => check.skipped += 1,
                Outcome::Fail { strategy, detail, trace } => {
                    check.failed += 1;
                    check.first_counterexample.get_or_insert_with(|| Counterexample {
                        poset: poset.to_json(),
                        u: ideals[i].format(&m),
                        v: ideals[j].format(&m),
                        strategy: strategy.map(|s| s.to_string()),
                        detail: detail.clone(),
                        trace: trace.clone(),
                    });
                }
            }
        }
        let c = &result.census;
        census.v_cuts += c.v_cuts;
        census.c_cuts_case_a += c.c_cuts_case_a;
        census.c_cuts_case_b += c.c_cuts_case_b;
        census.max_trace_len = census.max_trace_len.max(c.max_trace_len);
        census.exhaustive_pairs += c.exhaustive_pairs;
        census.exhaustive_sequences += c.exhaustive_sequences;
        census.transient_h_incompatible += c.transient_h_incompatible;
        let r = &result.unrestricted;
        unrestricted.runs += r.runs;
        unrestricted.differing += r.differing;
        unrestricted.incompatible += r.incompatible;
        unrestricted.errors += r.errors;
    }
    for check in &mut checks {
        check.status = if check.failed > 0 {
            "fail"
        } else if check.passed == 0 {
            "not exercised"
        } else {
            "pass"
        }
        .to_owned();
    }

    let diagnostics = checks.split_off(CHECKS.len());
    Ok(TheoremReport {
        poset: poset.to_json(),
        ideals: ideals.len(),
        comparable_pairs: total,
        swept_pairs: pairs.len(),
        sampled,
        strategies: strategies.iter().map(|s| s.to_string()).collect(),
        checks,
        diagnostics,
        cuts: census,
        unrestricted_c: unrestricted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn vec(m: &ChoppedLattice, s: &str) -> Vector {
        Vector::parse(m, s).unwrap()
    }

    #[test]
    fn ideal_counts() {
        let count = |p: &Poset| enumerate_ideals(&ChoppedLattice::build(p).unwrap(), DEFAULT_SIZE_CAP).unwrap().len();
        assert_eq!(count(&corpus::two_chain()), 6);
        assert_eq!(count(&corpus::v_order()), 10);
        assert_eq!(count(&corpus::three_chain()), 18);
    }

    #[test]
    fn size_cap() {
        let m = ChoppedLattice::build(&corpus::diamond()).unwrap();
        assert_eq!(
            enumerate_ideals(&m, 1000).unwrap_err(),
            Error::SizeLimit { candidates: 1296, cap: 1000 }
        );
    }

    #[test]
    fn brute_force_complements() {
        let m = ChoppedLattice::build(&corpus::two_chain()).unwrap();
        let found = sectional_complements_bruteforce(&m, &vec(&m, "p>q=p1"), &vec(&m, "p>q=p(q)"), DEFAULT_SIZE_CAP).unwrap();
        let names: Vec<String> = found.iter().map(|c| c.format(&m)).collect();
        assert_eq!(names, ["p>q=q1", "p>q=q2", "p>q=q"]);

        let m = ChoppedLattice::build(&corpus::three_chain()).unwrap();
        let v = vec(&m, "p>q=q,q>r=q(r)");
        let zero = Vector::zero(&m);
        assert_eq!(sectional_complements_bruteforce(&m, &zero, &v, DEFAULT_SIZE_CAP).unwrap(), [v.clone()].into());
        assert_eq!(sectional_complements_bruteforce(&m, &v, &v, DEFAULT_SIZE_CAP).unwrap(), [zero].into());
    }

    #[test]
    fn four_chain_lattice_is_not_sectionally_complemented() {
        let labels = (0..4).map(|i| i.to_string()).collect();
        let leq = (0..16).map(|k| k / 4 <= k % 4).collect();
        let chain = FiniteLattice::from_leq(labels, leq).unwrap();
        let report = check_sectionally_complemented(&chain);
        assert!(!report.sectionally_complemented());
        assert!(report.failing.contains(&("1".into(), "2".into())));
    }

    #[test]
    fn two_chain_block_is_sectionally_complemented() {
        let m = ChoppedLattice::build(&corpus::two_chain()).unwrap();
        let report = check_chopped_sectionally_complemented(&m, DEFAULT_SIZE_CAP).unwrap();
        assert!(report.sectionally_complemented());
        assert_eq!(report.pairs_checked, 17);
    }

    #[test]
    fn representation_of_small_orders() {
        let r = verify_representation(&corpus::two_chain(), DEFAULT_SIZE_CAP).unwrap();
        assert!(r.isomorphic);
        assert_eq!((r.ideal_count, r.congruence_count), (6, 3));
        let r = verify_representation(&corpus::three_chain(), DEFAULT_SIZE_CAP).unwrap();
        assert!(r.isomorphic);
        assert_eq!(r.congruence_count, 4);
    }

    #[test]
    fn sampling_is_seeded() {
        let m = ChoppedLattice::build(&corpus::four_chain()).unwrap();
        let ideals = enumerate_ideals(&m, DEFAULT_SIZE_CAP).unwrap();
        let (total, a, sampled) = comparable_pairs(&ideals, 50, 3);
        assert!(sampled && total > 50);
        assert_eq!(a.len(), 50);
        assert_eq!(a, comparable_pairs(&ideals, 50, 3).1);
    }

    #[test]
    fn single_strategy_marks_confluence_unexercised() {
        let config = VerifyConfig { strategies: 1, ..VerifyConfig::default() };
        let report = verify_theorems(&corpus::two_chain(), &config).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.check("confluence").status, "not exercised");
        assert_eq!(report.check("identity_1960").status, "pass");
    }
}
