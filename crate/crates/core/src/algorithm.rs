//! The cut algorithm for sectional complements in `Id M`.
//!
//! Starting from the blockwise maximal sectional complement `m`, step 2 cuts
//! V-failures and step 3 cuts minimal C-failures until none are left. Each
//! cut lowers a single coordinate by one cover. Failures are recomputed
//! after every cut.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::chopped::{ChoppedLattice, Role, Suborder, SuborderKind};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::strategy::Strategy;
use crate::vector::{compatible_at, is_compatible, is_compatible_kind, vector_leq, Vector};

/// Which of the two C-cut shapes applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CCase {
    /// `m_pq = p1`, `m_qr = q1`; cut `q1 → 0`.
    A,
    /// `m_pq = p1`, `m_qr = q(r)`; cut `q(r) → r`.
    B,
}

/// A detected V- or C-failure together with the cut it mandates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Failure {
    pub suborder: Suborder,
    /// Covering pair whose coordinate is cut.
    pub coordinate: usize,
    pub from: Role,
    pub to: Role,
    pub case: Option<CCase>,
}

impl Failure {
    pub fn kind(&self) -> SuborderKind {
        self.suborder.kind
    }

    /// The stem `r ≺ q` of a C-failure, as a pair index.
    pub fn stem(&self) -> usize {
        self.coordinate
    }
}

/// Per covering pair, the largest `s` in the block with `s ∧ u = 0` and
/// `s ∨ u = v`.
pub fn max_complement_vector(m: &ChoppedLattice, u: &Vector, v: &Vector) -> Result<Vector> {
    for w in [u, v] {
        if w.len() != m.block_count() {
            return Err(Error::KeyMismatch { expected: m.block_count(), found: w.len() });
        }
    }
    if !vector_leq(u, v) {
        return Err(Error::NotOrdered);
    }
    let mut out = Vec::with_capacity(u.len());
    for pair in 0..u.len() {
        let (a, b) = (u.get(pair), v.get(pair));
        let candidates: Vec<Role> = Role::ALL
            .into_iter()
            .filter(|s| s.meet(a) == Role::Zero && s.join(a) == b)
            .collect();
        let maxima: Vec<Role> = candidates
            .iter()
            .copied()
            .filter(|&s| !candidates.iter().any(|&t| t != s && s.leq(t)))
            .collect();
        match maxima.as_slice() {
            [top] => out.push(*top),
            _ => {
                let c = m.poset().covering_pairs()[pair];
                return Err(Error::NoUniqueMaximum(m.poset().pair_name(c)));
            }
        }
    }
    Ok(Vector(out))
}

fn agrees(c: &Vector, target: &Vector, a: usize, b: usize) -> bool {
    c.get(a) == target.get(a) && c.get(b) == target.get(b)
}

/// V-suborders where `c = m` on both coordinates and the two blocks disagree
/// on `r1, r2, r`. Each failure is classified as `m_pr ∈ {r1, r2}`,
/// `m_qr = q1` up to swapping `p` and `q`; the r-atom coordinate is cut to 0.
pub fn find_v_failures(m: &ChoppedLattice, c: &Vector, target: &Vector) -> Result<Vec<Failure>> {
    let poset = m.poset();
    let mut out = Vec::new();
    for s in m.suborders().iter().filter(|s| s.kind == SuborderKind::V) {
        let (a, b) = s.pairs(poset);
        if !agrees(c, target, a, b) || compatible_at(m, c, s) {
            continue;
        }
        let lower_atom = |r: Role| matches!(r, Role::LowerAtom1 | Role::LowerAtom2);
        let coordinate = match (c.get(a), c.get(b)) {
            (x, Role::UpperAtom) if lower_atom(x) => a,
            (Role::UpperAtom, y) if lower_atom(y) => b,
            (x, y) => {
                let [p, q, r] = s.names(poset);
                return Err(Error::InvariantViolation(format!(
                    "V-failure at {{{p},{q}}}>{r} has shape ({}, {})",
                    m.role_name(a, x),
                    m.role_name(b, y)
                )));
            }
        };
        out.push(Failure {
            suborder: *s,
            coordinate,
            from: c.get(coordinate),
            to: Role::Zero,
            case: None,
        });
    }
    Ok(out)
}

/// C-suborders `p ≻ q ≻ r` where `c = m` on both coordinates and the blocks
/// disagree on `q1`, classified into case A or case B.
pub fn find_c_failures(m: &ChoppedLattice, c: &Vector, target: &Vector) -> Result<Vec<Failure>> {
    let poset = m.poset();
    let mut out = Vec::new();
    for s in m.suborders().iter().filter(|s| s.kind == SuborderKind::C) {
        let (upper, stem) = s.pairs(poset);
        if !agrees(c, target, upper, stem) || compatible_at(m, c, s) {
            continue;
        }
        let (case, to) = match (c.get(upper), c.get(stem)) {
            (Role::UpperAtom, Role::UpperAtom) => (CCase::A, Role::Zero),
            (Role::UpperAtom, Role::Top) => (CCase::B, Role::LowerSum),
            (x, y) => {
                let [p, q, r] = s.names(poset);
                return Err(Error::InvariantViolation(format!(
                    "C-failure at {p}>{q}>{r} has shape ({}, {})",
                    m.role_name(upper, x),
                    m.role_name(stem, y)
                )));
            }
        };
        out.push(Failure {
            suborder: *s,
            coordinate: stem,
            from: c.get(stem),
            to,
            case: Some(case),
        });
    }
    Ok(out)
}

/// Keeps the failures whose middle element is minimal among all middles.
pub fn minimal_c_failures(poset: &Poset, failures: &[Failure]) -> Vec<Failure> {
    failures
        .iter()
        .copied()
        .filter(|f| !failures.iter().any(|g| poset.lt(g.suborder.q, f.suborder.q)))
        .collect()
}

fn apply_cut(c: &Vector, f: &Failure) -> Vector {
    debug_assert_eq!(c.get(f.coordinate), f.from, "cut applied to a stale vector");
    debug_assert!(f.from.covers(f.to));
    c.with(f.coordinate, f.to)
}

/// Sets the r-atom coordinate of a V-failure to 0.
pub fn apply_v_cut(c: &Vector, f: &Failure) -> Vector {
    assert_eq!(f.kind(), SuborderKind::V);
    apply_cut(c, f)
}

/// Lowers the stem coordinate of a C-failure: `q1 → 0` or `q(r) → r`.
pub fn apply_c_cut(c: &Vector, f: &Failure) -> Vector {
    assert_eq!(f.kind(), SuborderKind::C);
    apply_cut(c, f)
}

/// The post-step-2 vector in closed form: `m` with every r-atom coordinate
/// taking part in a V-failure of `m` set to 0.
pub fn m2_closed_form(m: &ChoppedLattice, u: &Vector, v: &Vector) -> Result<Vector> {
    let target = max_complement_vector(m, u, v)?;
    let mut out = target.clone();
    for s in m.suborders().iter().filter(|s| s.kind == SuborderKind::V) {
        if compatible_at(m, &target, s) {
            continue;
        }
        let (a, b) = s.pairs(m.poset());
        for pair in [a, b] {
            if matches!(target.get(pair), Role::LowerAtom1 | Role::LowerAtom2) {
                out.0[pair] = Role::Zero;
            }
        }
    }
    Ok(out)
}

/// Options for a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub strategy: Strategy,
    /// Let step 3 pick any C-failure, not only minimal ones. Experimental;
    /// results of such runs carry no guarantee.
    pub unrestricted_c: bool,
}

impl From<Strategy> for RunOptions {
    fn from(strategy: Strategy) -> Self {
        RunOptions { strategy, unrestricted_c: false }
    }
}

/// One applied cut.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutRecord {
    pub step: u8,
    pub failure: Failure,
}

/// Hook called after each cut, for instrumented runs.
pub trait CutObserver {
    fn on_cut(&mut self, step: u8, before: &Vector, eligible: &[Failure], chosen: &Failure, after: &Vector);
}

impl CutObserver for () {
    fn on_cut(&mut self, _: u8, _: &Vector, _: &[Failure], _: &Failure, _: &Vector) {}
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgorithmRun {
    pub u: Vector,
    pub v: Vector,
    pub m: Vector,
    pub after_step2: Vector,
    pub s: Vector,
    pub trace: Vec<CutRecord>,
    pub strategy: Strategy,
    /// Intermediate vectors that failed the H test. The final `s` is checked
    /// separately.
    pub transient_h_incompatible: usize,
}

#[derive(Serialize)]
struct TraceLine<'a> {
    step: u8,
    kind: String,
    suborder: [String; 3],
    coordinate: String,
    old: String,
    new: String,
    case: Option<&'a str>,
}

impl AlgorithmRun {
    /// Applies the recorded cuts to `m` again.
    pub fn replay(&self) -> Result<Vector> {
        let mut c = self.m.clone();
        for rec in &self.trace {
            let f = &rec.failure;
            if c.get(f.coordinate) != f.from {
                return Err(Error::InvariantViolation("trace does not replay".into()));
            }
            c = c.with(f.coordinate, f.to);
        }
        Ok(c)
    }

    /// The trace as JSON lines, one object per cut.
    pub fn trace_json_lines(&self, m: &ChoppedLattice) -> Vec<String> {
        let poset = m.poset();
        self.trace
            .iter()
            .map(|rec| {
                let f = &rec.failure;
                let line = TraceLine {
                    step: rec.step,
                    kind: f.kind().to_string(),
                    suborder: f.suborder.names(poset),
                    coordinate: poset.pair_name(poset.covering_pairs()[f.coordinate]),
                    old: m.role_name(f.coordinate, f.from),
                    new: m.role_name(f.coordinate, f.to),
                    case: f.case.map(|c| match c {
                        CCase::A => "A",
                        CCase::B => "B",
                    }),
                };
                serde_json::to_string(&line).expect("trace line serializes")
            })
            .collect()
    }
}

fn check_inputs(m: &ChoppedLattice, u: &Vector, v: &Vector) -> Result<()> {
    if !is_compatible(m, u)? || !is_compatible(m, v)? {
        return Err(Error::IncompatibleVector);
    }
    if !vector_leq(u, v) {
        return Err(Error::NotOrdered);
    }
    Ok(())
}

/// Runs the algorithm on compatible `u ≤ v`.
pub fn run_algorithm(
    m: &ChoppedLattice,
    u: &Vector,
    v: &Vector,
    options: impl Into<RunOptions>,
) -> Result<AlgorithmRun> {
    run_observed(m, u, v, options.into(), &mut ())
}

pub fn run_observed(
    m: &ChoppedLattice,
    u: &Vector,
    v: &Vector,
    options: RunOptions,
    observer: &mut impl CutObserver,
) -> Result<AlgorithmRun> {
    check_inputs(m, u, v)?;
    let target = max_complement_vector(m, u, v)?;
    let limit = 2 * m.block_count();
    let mut chooser = options.strategy.chooser();
    let mut c = target.clone();
    let mut trace = Vec::new();
    let mut transient_h_incompatible = 0;

    let mut cut = |step: u8, c: &mut Vector, eligible: &[Failure], trace: &mut Vec<CutRecord>| -> Result<()> {
        let chosen = eligible[chooser.choose(eligible.len())];
        let after = apply_cut(c, &chosen);
        observer.on_cut(step, c, eligible, &chosen, &after);
        trace.push(CutRecord { step, failure: chosen });
        if trace.len() > limit {
            return Err(Error::Divergence(trace.len()));
        }
        if !is_compatible_kind(m, &after, SuborderKind::H) {
            transient_h_incompatible += 1;
        }
        *c = after;
        Ok(())
    };

    loop {
        let failures = find_v_failures(m, &c, &target)?;
        if failures.is_empty() {
            break;
        }
        cut(2, &mut c, &failures, &mut trace)?;
    }
    let after_step2 = c.clone();

    loop {
        let failures = find_c_failures(m, &c, &target)?;
        let eligible = if options.unrestricted_c {
            failures
        } else {
            minimal_c_failures(m.poset(), &failures)
        };
        if eligible.is_empty() {
            break;
        }
        cut(3, &mut c, &eligible, &mut trace)?;
    }

    Ok(AlgorithmRun {
        u: u.clone(),
        v: v.clone(),
        m: target,
        after_step2,
        s: c,
        trace,
        strategy: options.strategy,
        transient_h_incompatible,
    })
}

/// Results of every valid cut sequence, found by depth-first search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcomes {
    pub results: BTreeSet<Vector>,
    pub sequences: usize,
}

/// Explores all cut sequences the algorithm allows: any V-failure in step 2,
/// any minimal C-failure in step 3. Stops with `SizeLimit` past
/// `max_sequences` complete sequences.
pub fn enumerate_outcomes(
    m: &ChoppedLattice,
    u: &Vector,
    v: &Vector,
    max_sequences: usize,
) -> Result<Outcomes> {
    check_inputs(m, u, v)?;
    let target = max_complement_vector(m, u, v)?;
    let mut out = Outcomes { results: BTreeSet::new(), sequences: 0 };
    explore(m, &target, target.clone(), 2, max_sequences, &mut out)?;
    Ok(out)
}

fn explore(
    m: &ChoppedLattice,
    target: &Vector,
    c: Vector,
    step: u8,
    max_sequences: usize,
    out: &mut Outcomes,
) -> Result<()> {
    if step == 2 {
        let failures = find_v_failures(m, &c, target)?;
        if failures.is_empty() {
            return explore(m, target, c, 3, max_sequences, out);
        }
        for f in &failures {
            explore(m, target, apply_cut(&c, f), 2, max_sequences, out)?;
        }
        return Ok(());
    }
    let eligible = minimal_c_failures(m.poset(), &find_c_failures(m, &c, target)?);
    if eligible.is_empty() {
        out.sequences += 1;
        if out.sequences > max_sequences {
            return Err(Error::SizeLimit {
                candidates: out.sequences as u128,
                cap: max_sequences as u128,
            });
        }
        out.results.insert(c);
        return Ok(());
    }
    for f in &eligible {
        explore(m, target, apply_cut(&c, f), 3, max_sequences, out)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::{vector_join, vector_meet};

    fn build(elements: &[&str], covers: &[(&str, &str)]) -> ChoppedLattice {
        ChoppedLattice::build(&Poset::new(elements, covers).unwrap()).unwrap()
    }

    fn chain2() -> ChoppedLattice {
        build(&["p", "q"], &[("p", "q")])
    }

    fn chain3() -> ChoppedLattice {
        build(&["p", "q", "r"], &[("p", "q"), ("q", "r")])
    }

    fn v_order() -> ChoppedLattice {
        build(&["p", "q", "r"], &[("p", "r"), ("q", "r")])
    }

    fn vec(m: &ChoppedLattice, s: &str) -> Vector {
        Vector::parse(m, s).unwrap()
    }

    /// Largest sectional complement in the block by scanning all six elements.
    fn block_max_complement(u: Role, v: Role) -> Vec<Role> {
        let comps: Vec<Role> =
            Role::ALL.into_iter().filter(|s| s.meet(u) == Role::Zero && s.join(u) == v).collect();
        comps.iter().copied().filter(|&s| comps.iter().all(|&t| t.leq(s))).collect()
    }

    #[test]
    fn block_complements() {
        let m = chain2();
        assert_eq!(max_complement_vector(&m, &vec(&m, "p>q=q1"), &vec(&m, "p>q=p(q)")).unwrap(), vec(&m, "p>q=p1"));
        assert_eq!(max_complement_vector(&m, &vec(&m, "p>q=p1"), &vec(&m, "p>q=p(q)")).unwrap(), vec(&m, "p>q=q"));
        for v in Role::ALL {
            assert_eq!(block_max_complement(Role::Zero, v), vec![v]);
        }
        // every comparable pair in the block has a unique largest complement
        for u in Role::ALL {
            for v in Role::ALL.into_iter().filter(|v| u.leq(*v)) {
                assert_eq!(block_max_complement(u, v).len(), 1, "{u:?} {v:?}");
            }
        }
        assert_eq!(
            max_complement_vector(&m, &vec(&m, "p>q=p1"), &vec(&m, "p>q=q")),
            Err(Error::NotOrdered)
        );
    }

    #[test]
    fn v_failure_worked_example() {
        let m = v_order();
        let u = vec(&m, "p>r=r2,q>r=r2");
        let v = vec(&m, "p>r=r,q>r=q(r)");
        let target = max_complement_vector(&m, &u, &v).unwrap();
        assert_eq!(target, vec(&m, "p>r=r1,q>r=q1"));
        let fails = find_v_failures(&m, &target, &target).unwrap();
        assert_eq!(fails.len(), 1);
        assert_eq!(fails[0].coordinate, 0);
        assert_eq!(apply_v_cut(&target, &fails[0]), vec(&m, "p>r=0,q>r=q1"));
        assert_eq!(m2_closed_form(&m, &u, &v).unwrap(), vec(&m, "p>r=0,q>r=q1"));

        let run = run_algorithm(&m, &u, &v, Strategy::Lexicographic).unwrap();
        assert_eq!(run.s, vec(&m, "p>r=0,q>r=q1"));
        assert_eq!(run.trace.len(), 1);
        assert_eq!(vector_meet(&m, &run.s, &u).unwrap(), Vector::zero(&m));
        assert_eq!(vector_join(&m, &run.s, &u).unwrap(), v);
        assert_eq!(
            run.trace_json_lines(&m),
            [r#"{"step":2,"kind":"V","suborder":["p","q","r"],"coordinate":"p>r","old":"r1","new":"0","case":null}"#]
        );
    }

    #[test]
    fn symmetric_v_failure() {
        let m = v_order();
        // r2 in the q-block, p1 in the p-block.
        let c = vec(&m, "p>r=p1,q>r=r2");
        let fails = find_v_failures(&m, &c, &c).unwrap();
        assert_eq!(fails.len(), 1);
        assert_eq!(apply_v_cut(&c, &fails[0]), vec(&m, "p>r=p1,q>r=0"));
    }

    #[test]
    fn no_v_failures() {
        let m = v_order();
        let run_m = max_complement_vector(&m, &Vector::zero(&m), &Vector::tops(&m)).unwrap();
        assert_eq!(run_m, Vector::tops(&m));
        assert!(find_v_failures(&m, &run_m, &run_m).unwrap().is_empty());
        let c = chain3();
        let t = Vector::tops(&c);
        assert!(find_v_failures(&c, &t, &t).unwrap().is_empty());
    }

    #[test]
    fn v_shape_violation_is_reported() {
        let m = v_order();
        let c = vec(&m, "p>r=r1,q>r=r2");
        assert!(matches!(find_v_failures(&m, &c, &c), Err(Error::InvariantViolation(_))));
    }

    #[test]
    fn c_failure_cases() {
        let m = chain3();
        let u = vec(&m, "p>q=q2,q>r=0");
        let v = vec(&m, "p>q=p(q),q>r=q1");
        let target = max_complement_vector(&m, &u, &v).unwrap();
        assert_eq!(target, vec(&m, "p>q=p1,q>r=q1"));
        let fails = find_c_failures(&m, &target, &target).unwrap();
        assert_eq!(fails.len(), 1);
        assert_eq!(fails[0].case, Some(CCase::A));
        assert_eq!(apply_c_cut(&target, &fails[0]), vec(&m, "p>q=p1,q>r=0"));

        let v = vec(&m, "p>q=p(q),q>r=q(r)");
        let target = max_complement_vector(&m, &u, &v).unwrap();
        assert_eq!(target, vec(&m, "p>q=p1,q>r=q(r)"));
        let fails = find_c_failures(&m, &target, &target).unwrap();
        assert_eq!(fails[0].case, Some(CCase::B));
        assert_eq!(apply_c_cut(&target, &fails[0]), vec(&m, "p>q=p1,q>r=r"));

        let run = run_algorithm(&m, &u, &v, Strategy::ReverseLexicographic).unwrap();
        assert_eq!(run.s, vec(&m, "p>q=p1,q>r=r"));
        assert_eq!(run.trace.len(), 1);
        assert_eq!(run.trace[0].step, 3);
        assert_eq!(run.replay().unwrap(), run.s);
    }

    #[test]
    fn minimal_filter_on_four_chain() {
        let m = build(&["p", "q", "r", "s"], &[("p", "q"), ("q", "r"), ("r", "s")]);
        let c = vec(&m, "p>q=p1,q>r=q1,r>s=r1");
        // Failures at middles q (p>q>r) and r (q>r>s) need c = m there.
        let fails = find_c_failures(&m, &c, &c).unwrap();
        let middles: Vec<usize> = fails.iter().map(|f| f.suborder.q).collect();
        assert_eq!(middles, vec![1, 2]);
        let minimal = minimal_c_failures(m.poset(), &fails);
        assert_eq!(minimal.len(), 1);
        assert_eq!(minimal[0].suborder.q, 2);
    }

    #[test]
    fn u_equals_v_gives_zero() {
        let m = chain3();
        let u = vec(&m, "p>q=q,q>r=q(r)");
        let run = run_algorithm(&m, &u, &u, Strategy::SeededRandom(9)).unwrap();
        assert_eq!(run.m, Vector::zero(&m));
        assert_eq!(run.s, Vector::zero(&m));
        assert!(run.trace.is_empty());
    }

    #[test]
    fn bad_inputs() {
        let m = chain3();
        let bad = vec(&m, "p>q=p(q),q>r=0");
        assert_eq!(
            run_algorithm(&m, &bad, &Vector::tops(&m), Strategy::Lexicographic),
            Err(Error::IncompatibleVector)
        );
        assert_eq!(
            run_algorithm(&m, &Vector::tops(&m), &Vector::zero(&m), Strategy::Lexicographic),
            Err(Error::NotOrdered)
        );
    }

    #[test]
    fn exhaustive_outcomes_of_worked_examples() {
        let m = chain3();
        let u = vec(&m, "p>q=q2,q>r=0");
        let v = vec(&m, "p>q=p(q),q>r=q(r)");
        let out = enumerate_outcomes(&m, &u, &v, 100).unwrap();
        assert_eq!(out.sequences, 1);
        assert_eq!(out.results.into_iter().collect::<Vec<_>>(), vec![vec(&m, "p>q=p1,q>r=r")]);
    }
}
