//! Exhaustive generation of wiring diagrams for small `n` and the check
//! battery run over the resulting corpus.
//!
//! The search state is the current wire order plus a bitset of crossed pairs.
//! A block `(pos, len)` is a legal move iff no two of its wires have crossed.
//! Two consecutive moves on disjoint blocks commute; only the order with the
//! smaller `pos` first is generated. Every arrangement still appears at least
//! once, possibly several times through different orderings of its crossings.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{self, Mode};
use crate::exact;
use crate::inequalities::{t2_pj_residual, Family, LinearTiInequality};
use crate::profiles::{melchior_identity_residual, ComplexSummary, PjProfile, TiProfile};
use crate::spectrum;
use crate::wiring::{AllowableSequence, CellComplex, Classification, Move, SimpleEdgeCheck};

pub const DEFAULT_NMAX: u32 = 6;
/// Crossed pairs live in a `u64`.
pub const ABSOLUTE_NMAX: u32 = 11;
pub const NMAX_ENV: &str = "ARRLAB_NMAX";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("n={n} outside the enumeration range 3..={max}")]
    OutOfRange { n: u32, max: u32 },
    #[error("invalid enumeration cap {0:?}; at most {ABSOLUTE_NMAX} is supported")]
    BadCap(String),
    #[error("t-profile filter is for n={filter}, enumerating n={n}")]
    FilterMismatch { n: u32, filter: u32 },
}

/// Enumeration cap: `ARRLAB_NMAX` if set, else [`DEFAULT_NMAX`].
pub fn configured_nmax() -> Result<u32, EnumerationError> {
    match std::env::var(NMAX_ENV) {
        Ok(v) => match v.trim().parse::<u32>() {
            Ok(cap) if cap <= ABSOLUTE_NMAX => Ok(cap),
            _ => Err(EnumerationError::BadCap(v)),
        },
        Err(_) => Ok(DEFAULT_NMAX),
    }
}

#[derive(Debug, Clone, Default)]
pub struct EnumerationOptions {
    pub nontrivial_only: bool,
    /// Emit only diagrams with exactly this t-profile.
    pub ti: Option<TiProfile>,
    /// Multiplicities that must not occur.
    pub forbidden: BTreeSet<u32>,
    /// Overrides [`configured_nmax`], up to [`ABSOLUTE_NMAX`].
    pub nmax: Option<u32>,
}

impl EnumerationOptions {
    fn cap(&self) -> Result<u32, EnumerationError> {
        match self.nmax {
            Some(cap) if cap <= ABSOLUTE_NMAX => Ok(cap),
            Some(cap) => Err(EnumerationError::BadCap(cap.to_string())),
            None => configured_nmax(),
        }
    }

    fn corpus(nmax: Option<u32>) -> Self {
        Self { nontrivial_only: true, nmax, ..Self::default() }
    }
}

fn pair_bit(n: u32, a: u32, b: u32) -> u64 {
    let (lo, hi) = (a.min(b) - 1, a.max(b) - 1);
    1u64 << (lo * n - lo * (lo + 1) / 2 + (hi - lo - 1))
}

struct Frame {
    candidates: Vec<Move>,
    next: usize,
}

/// Depth-first stream of allowable sequences in canonical move order.
pub struct WiringIter {
    n: u32,
    full: u64,
    order: Vec<u32>,
    crossed: u64,
    path: Vec<Move>,
    used: Vec<u64>,
    frames: Vec<Frame>,
    options: EnumerationOptions,
}

impl WiringIter {
    fn start(n: u32, options: EnumerationOptions, roots: Option<Vec<Move>>) -> Result<Self, EnumerationError> {
        check_n(n, options.cap()?)?;
        if let Some(ti) = &options.ti {
            if ti.n() != n {
                return Err(EnumerationError::FilterMismatch { n, filter: ti.n() });
            }
        }
        let pairs = n * (n - 1) / 2;
        let mut it = WiringIter {
            n,
            full: (1u64 << pairs) - 1,
            order: (1..=n).collect(),
            crossed: 0,
            path: Vec::new(),
            used: vec![0; n as usize + 1],
            frames: Vec::new(),
            options,
        };
        let candidates = match roots {
            Some(r) => r,
            None => it.candidates(),
        };
        it.frames.push(Frame { candidates, next: 0 });
        Ok(it)
    }

    pub fn new(n: u32, options: EnumerationOptions) -> Result<Self, EnumerationError> {
        Self::start(n, options, None)
    }

    /// The part of the stream whose first move is `first`.
    pub fn with_first_move(n: u32, options: EnumerationOptions, first: Move) -> Result<Self, EnumerationError> {
        let all = Self::new(n, options.clone())?.frames.pop().map(|f| f.candidates).unwrap_or_default();
        let roots = all.into_iter().filter(|m| *m == first).collect();
        Self::start(n, options, Some(roots))
    }

    /// Legal first moves; the streams of [`with_first_move`](Self::with_first_move)
    /// over these partition the full stream.
    pub fn first_moves(n: u32, options: &EnumerationOptions) -> Result<Vec<Move>, EnumerationError> {
        Ok(Self::new(n, options.clone())?.frames.pop().map(|f| f.candidates).unwrap_or_default())
    }

    fn block_mask(&self, pos: u32, len: u32) -> Option<u64> {
        let block = &self.order[(pos - 1) as usize..(pos - 1 + len) as usize];
        let mut mask = 0;
        for (x, &a) in block.iter().enumerate() {
            for &b in &block[x + 1..] {
                mask |= pair_bit(self.n, a, b);
            }
        }
        (mask & self.crossed == 0).then_some(mask)
    }

    fn allowed_len(&self, len: u32) -> bool {
        if self.options.forbidden.contains(&len) || (self.options.nontrivial_only && len == self.n) {
            return false;
        }
        match &self.options.ti {
            Some(ti) => self.used[len as usize] < ti.get(len),
            None => true,
        }
    }

    fn candidates(&self) -> Vec<Move> {
        let prev = self.path.last();
        let mut out = Vec::new();
        for pos in 1..self.n {
            for len in 2..=self.n - pos + 1 {
                // Longer blocks contain this one, so they are blocked too.
                if self.block_mask(pos, len).is_none() {
                    break;
                }
                let mv = Move::new(pos, len);
                if prev.is_some_and(|p| mv.is_disjoint(p) && mv.pos < p.pos) {
                    continue;
                }
                if self.allowed_len(len) {
                    out.push(mv);
                }
            }
        }
        out
    }

    fn apply(&mut self, mv: Move) {
        let mask = self.block_mask(mv.pos, mv.len).expect("candidate moves are legal");
        self.crossed |= mask;
        self.order[(mv.pos - 1) as usize..mv.end() as usize].reverse();
        self.used[mv.len as usize] += 1;
        self.path.push(mv);
    }

    fn undo(&mut self) {
        if let Some(mv) = self.path.pop() {
            self.order[(mv.pos - 1) as usize..mv.end() as usize].reverse();
            self.used[mv.len as usize] -= 1;
            // Pairs inside a block are crossed by that move alone.
            let block = &self.order[(mv.pos - 1) as usize..mv.end() as usize];
            let mut mask = 0;
            for (x, &a) in block.iter().enumerate() {
                for &b in &block[x + 1..] {
                    mask |= pair_bit(self.n, a, b);
                }
            }
            self.crossed &= !mask;
        }
    }

    fn accepts(&self) -> bool {
        match &self.options.ti {
            Some(ti) => ti.iter().all(|(i, c)| self.used[i as usize] == c),
            None => true,
        }
    }
}

impl Iterator for WiringIter {
    type Item = AllowableSequence;

    fn next(&mut self) -> Option<AllowableSequence> {
        loop {
            let top = self.frames.last_mut()?;
            if top.next == top.candidates.len() {
                self.frames.pop();
                self.undo();
                continue;
            }
            let mv = top.candidates[top.next];
            top.next += 1;
            self.apply(mv);
            if self.crossed == self.full {
                let hit = self.accepts().then(|| AllowableSequence::new(self.n, self.path.clone()));
                self.undo();
                if hit.is_some() {
                    return hit;
                }
            } else {
                let candidates = self.candidates();
                self.frames.push(Frame { candidates, next: 0 });
            }
        }
    }
}

fn check_n(n: u32, max: u32) -> Result<(), EnumerationError> {
    if n < 3 || n > max {
        return Err(EnumerationError::OutOfRange { n, max });
    }
    Ok(())
}

pub fn enumerate_wirings(n: u32, options: EnumerationOptions) -> Result<WiringIter, EnumerationError> {
    WiringIter::new(n, options)
}

/// Checks whose failure on pseudolines is expected to be possible; failures
/// are collected as findings, not violations.
pub const FINDING_CHECKS: [&str; 3] = ["hirzebruch", "bound_hirzebruch_form", "bound_lp_hirzebruch"];

/// Per-`n` bound tables, computed once and shared by every record.
#[derive(Debug, Clone)]
pub struct BoundTable {
    n: u32,
    lp: BTreeMap<(Family, u32), BigRational>,
    closed: BTreeMap<(Family, u32), BigRational>,
    achievable: BTreeSet<u64>,
    inequalities: Vec<LinearTiInequality>,
}

impl BoundTable {
    pub fn new(n: u32) -> Self {
        let mut lp = BTreeMap::new();
        let mut closed = BTreeMap::new();
        for family in Family::ALL {
            for m in 2..=n {
                if let Ok(c) = bounds::lp_lower_bound(family, n, m, Mode::PaperStrict) {
                    lp.insert((family, m), c.bound);
                }
                if let Ok(c) = bounds::closed_form_bound(family, n, m) {
                    closed.insert((family, m), c.value);
                }
            }
        }
        let inequalities = Family::ALL.iter().map(|&f| LinearTiInequality::new(f, n).expect("n >= 3")).collect();
        let achievable = spectrum::achievable_set(n).unwrap_or_default();
        Self { n, lp, closed, achievable, inequalities }
    }

    fn inequality(&self, family: Family) -> &LinearTiInequality {
        &self.inequalities[Family::ALL.iter().position(|&f| f == family).expect("all families listed")]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Signature {
    /// `t_2, ..., t_n`.
    pub t: Vec<u64>,
    pub p: BTreeMap<u32, u64>,
    pub f: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusRecord {
    pub moves: Vec<Move>,
    #[serde(serialize_with = "serialize_ti")]
    pub ti: TiProfile,
    #[serde(serialize_with = "serialize_pj")]
    pub pj: PjProfile,
    pub summary: ComplexSummary,
    pub flags: Classification,
    pub m: u32,
    #[serde(serialize_with = "exact::serialize")]
    pub melchior_slack: BigRational,
    #[serde(serialize_with = "exact::serialize_opt")]
    pub combi_slack: Option<BigRational>,
    #[serde(serialize_with = "exact::serialize_opt")]
    pub hirzebruch_slack: Option<BigRational>,
    /// `None` when the check does not apply.
    pub checks: BTreeMap<&'static str, Option<bool>>,
}

fn serialize_ti<S: serde::Serializer>(ti: &TiProfile, s: S) -> Result<S::Ok, S::Error> {
    ti.to_json_value().serialize(s)
}

fn serialize_pj<S: serde::Serializer>(pj: &PjProfile, s: S) -> Result<S::Ok, S::Error> {
    pj.to_json_value().serialize(s)
}

impl CorpusRecord {
    pub fn signature(&self) -> Signature {
        Signature { t: self.ti.dense(), p: self.pj.iter().collect(), f: self.summary.f }
    }

    pub fn violations(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.checks
            .iter()
            .filter(|(name, r)| **r == Some(false) && !FINDING_CHECKS.contains(name))
            .map(|(name, _)| *name)
    }
}

fn rational(x: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Builds the complex of a nontrivial sequence and runs every check.
pub fn analyze(seq: &AllowableSequence, table: &BoundTable) -> Result<CorpusRecord, String> {
    let n = seq.n();
    debug_assert_eq!(n, table.n);
    let cc = CellComplex::build(seq).map_err(|e| e.to_string())?;
    let ti = cc.ti_profile().map_err(|e| e.to_string())?;
    let pj = cc.pj_profile().map_err(|e| e.to_string())?;
    let summary = cc.summary();
    let flags = cc.classify(&ti);
    let m = ti.max_multiplicity().map_err(|e| e.to_string())?;
    let f = summary.f;
    let fq = rational(f);
    let mut checks: BTreeMap<&'static str, Option<bool>> = BTreeMap::new();

    checks.insert("euler", Some(summary.euler_characteristic() == 1));
    let derived = ti.derive_vef().map_err(|e| e.to_string())?;
    checks.insert("f_identity", Some(derived.f == f));
    checks.insert("vef_from_pj", Some(pj.vef().ok() == Some(derived) && derived == summary));
    checks.insert("melchior_identity", Some(melchior_identity_residual(&ti, &pj).ok() == Some(0)));
    checks.insert(
        "simple_edge",
        match cc.check_simple_edge_property(&ti) {
            SimpleEdgeCheck::NotApplicable => None,
            SimpleEdgeCheck::Checked(v) => Some(v.is_empty()),
        },
    );

    let eval = |family| table.inequality(family).evaluate(&ti).map_err(|e| e.to_string());
    let melchior = eval(Family::Melchior)?;
    checks.insert("melchior", Some(melchior.holds()));
    checks.insert("melchior_equality", Some(melchior.slack.is_zero() == flags.simplicial));
    let combi = eval(Family::CombiHirzebruch)?;
    checks.insert("combi_hirzebruch", combi.applicable.then(|| combi.holds()));
    let hirz = eval(Family::Hirzebruch)?;
    checks.insert("hirzebruch", hirz.applicable.then(|| hirz.holds()));
    let t2 = t2_pj_residual(&ti, &pj);
    checks.insert("t2_pj", t2.applicable.then(|| t2.holds()));

    let gr = bounds::gruenbaum_checks(&summary, &flags, n, m);
    checks.insert("gruenbaum", Some(gr.ok()));
    checks.insert("spectrum", Some(table.achievable.contains(&f)));

    for (family, closed_name, lp_name) in [
        (Family::Melchior, "bound_melchior_form", "bound_lp_melchior"),
        (Family::CombiHirzebruch, "bound_combi_form", "bound_lp_combi"),
        (Family::Hirzebruch, "bound_hirzebruch_form", "bound_lp_hirzebruch"),
    ] {
        // The LP bounds assume the family's inequality applies.
        let applies = table.inequality(family).is_applicable(&ti);
        checks.insert(closed_name, table.closed.get(&(family, m)).filter(|_| applies).map(|b| fq >= *b));
        checks.insert(lp_name, table.lp.get(&(family, m)).filter(|_| applies).map(|b| fq >= *b));
    }

    checks.insert(
        "arnold",
        bounds::arnold_bounds(n, m).ok().map(|(lo, hi)| (lo..=hi).contains(&f)),
    );
    checks.insert("arnold_ratio", bounds::arnold_ratio_bound(n, m).ok().map(|b| fq >= b));
    let martinov = bounds::martinov_bound(n, m);
    checks.insert("martinov", martinov.applicable.then_some(f as i64 >= martinov.bound));
    let purdy: Vec<bool> = (1..=n - m)
        .map(|k| bounds::purdy_bound(n, k))
        .filter(|b| b.applicable)
        .map(|b| f as i64 >= b.bound)
        .collect();
    checks.insert("purdy", (!purdy.is_empty()).then(|| purdy.iter().all(|&ok| ok)));

    Ok(CorpusRecord {
        moves: seq.moves().to_vec(),
        ti,
        pj,
        summary,
        flags,
        m,
        melchior_slack: melchior.slack,
        combi_slack: combi.applicable.then_some(combi.slack),
        hirzebruch_slack: hirz.applicable.then_some(hirz.slack),
        checks,
    })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: u64,
    pub failed: u64,
}

/// Aggregated results; [`merge`](Self::merge) is associative and commutative.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub n: u32,
    pub sequences: u64,
    pub checks: BTreeMap<String, Tally>,
    pub spectrum: BTreeSet<u64>,
    pub min_f_by_m: BTreeMap<u32, u64>,
    pub signatures: BTreeSet<Signature>,
    pub simplicial: BTreeSet<Signature>,
    pub melchior_equality: BTreeSet<Signature>,
    pub combi_equality: BTreeSet<Signature>,
    #[serde(serialize_with = "exact::serialize_opt")]
    pub combi_min_slack: Option<BigRational>,
    pub hirzebruch_findings: BTreeSet<Signature>,
    pub defects: BTreeSet<String>,
}

impl CorpusReport {
    pub fn empty(n: u32) -> Self {
        Self { n, ..Self::default() }
    }

    pub fn add(&mut self, rec: &CorpusRecord) {
        self.sequences += 1;
        let sig = rec.signature();
        for (name, r) in &rec.checks {
            if let Some(ok) = r {
                let t = self.checks.entry(name.to_string()).or_default();
                t.checked += 1;
                t.failed += u64::from(!ok);
            }
        }
        self.spectrum.insert(rec.summary.f);
        let min = self.min_f_by_m.entry(rec.m).or_insert(rec.summary.f);
        *min = (*min).min(rec.summary.f);
        if rec.flags.simplicial {
            self.simplicial.insert(sig.clone());
        }
        if rec.melchior_slack.is_zero() {
            self.melchior_equality.insert(sig.clone());
        }
        if let Some(s) = &rec.combi_slack {
            if s.is_zero() {
                self.combi_equality.insert(sig.clone());
            }
            if self.combi_min_slack.as_ref().is_none_or(|m| s < m) {
                self.combi_min_slack = Some(s.clone());
            }
        }
        if rec.checks.get("hirzebruch") == Some(&Some(false)) {
            self.hirzebruch_findings.insert(sig.clone());
        }
        self.signatures.insert(sig);
    }

    pub fn merge(mut self, other: Self) -> Self {
        self.n = self.n.max(other.n);
        self.sequences += other.sequences;
        for (name, t) in other.checks {
            let e = self.checks.entry(name).or_default();
            e.checked += t.checked;
            e.failed += t.failed;
        }
        self.spectrum.extend(other.spectrum);
        for (m, f) in other.min_f_by_m {
            let e = self.min_f_by_m.entry(m).or_insert(f);
            *e = (*e).min(f);
        }
        self.signatures.extend(other.signatures);
        self.simplicial.extend(other.simplicial);
        self.melchior_equality.extend(other.melchior_equality);
        self.combi_equality.extend(other.combi_equality);
        self.combi_min_slack = match (self.combi_min_slack, other.combi_min_slack) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.hirzebruch_findings.extend(other.hirzebruch_findings);
        self.defects.extend(other.defects);
        self
    }

    /// Failures of checks that must always hold.
    pub fn violations(&self) -> u64 {
        self.checks
            .iter()
            .filter(|(name, _)| !FINDING_CHECKS.contains(&name.as_str()))
            .map(|(_, t)| t.failed)
            .sum::<u64>()
            + self.defects.len() as u64
    }

    pub fn failed(&self, check: &str) -> u64 {
        self.checks.get(check).map_or(0, |t| t.failed)
    }
}

fn run_prefix(
    n: u32,
    nmax: Option<u32>,
    first: Move,
    table: &BoundTable,
    mut sink: impl FnMut(&CorpusRecord),
) -> Result<CorpusReport, EnumerationError> {
    let mut report = CorpusReport::empty(n);
    for seq in WiringIter::with_first_move(n, EnumerationOptions::corpus(nmax), first)? {
        match analyze(&seq, table) {
            Ok(rec) => {
                report.add(&rec);
                sink(&rec);
            }
            Err(e) => {
                report.defects.insert(format!("{:?}: {e}", seq.moves()));
            }
        }
    }
    Ok(report)
}

/// Runs the check battery over every nontrivial diagram on `n` wires, one
/// worker per first move.
pub fn verify_corpus(n: u32) -> Result<CorpusReport, EnumerationError> {
    verify_corpus_capped(n, None)
}

pub fn verify_corpus_capped(n: u32, nmax: Option<u32>) -> Result<CorpusReport, EnumerationError> {
    let firsts = WiringIter::first_moves(n, &EnumerationOptions::corpus(nmax))?;
    let table = BoundTable::new(n);
    firsts
        .into_par_iter()
        .map(|first| run_prefix(n, nmax, first, &table, |_| {}))
        .try_reduce(|| CorpusReport::empty(n), |a, b| Ok(a.merge(b)))
}

/// Sequential variant that also hands every record to `sink`, in stream order.
pub fn verify_corpus_with(
    n: u32,
    nmax: Option<u32>,
    mut sink: impl FnMut(&CorpusRecord),
) -> Result<CorpusReport, EnumerationError> {
    let table = BoundTable::new(n);
    let mut report = CorpusReport::empty(n);
    for first in WiringIter::first_moves(n, &EnumerationOptions::corpus(nmax))? {
        report = report.merge(run_prefix(n, nmax, first, &table, &mut sink)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(n: u32, nontrivial_only: bool) -> Vec<AllowableSequence> {
        enumerate_wirings(n, EnumerationOptions { nontrivial_only, ..Default::default() }).unwrap().collect()
    }

    #[test]
    fn three_wires() {
        let moves: Vec<Vec<Move>> = all(3, false).iter().map(|s| s.moves().to_vec()).collect();
        assert_eq!(
            moves,
            vec![
                vec![Move::new(1, 2), Move::new(2, 2), Move::new(1, 2)],
                vec![Move::new(1, 3)],
                vec![Move::new(2, 2), Move::new(1, 2), Move::new(2, 2)],
            ]
        );
        assert_eq!(all(3, true).len(), 2);
    }

    #[test]
    fn every_emitted_sequence_is_valid_and_canonical() {
        for n in 3..=5 {
            for s in all(n, false) {
                s.validate().unwrap();
                for w in s.moves().windows(2) {
                    assert!(!(w[1].is_disjoint(&w[0]) && w[1].pos < w[0].pos));
                }
            }
        }
    }

    #[test]
    fn four_wire_profiles() {
        let profiles: BTreeSet<Vec<u64>> =
            all(4, true).iter().map(|s| s.ti_profile().unwrap().dense()).collect();
        assert_eq!(profiles, BTreeSet::from([vec![6, 0, 0], vec![3, 1, 0]]));
    }

    #[test]
    fn filters_prune() {
        let ti = TiProfile::new(5, [(2, 7), (3, 1)]).unwrap();
        let opts = EnumerationOptions { ti: Some(ti.clone()), ..Default::default() };
        let hits: Vec<_> = enumerate_wirings(5, opts).unwrap().collect();
        assert!(!hits.is_empty());
        assert!(hits.iter().all(|s| s.ti_profile().unwrap() == ti));
        let opts = EnumerationOptions { forbidden: BTreeSet::from([3, 4, 5]), ..Default::default() };
        assert!(enumerate_wirings(5, opts).unwrap().all(|s| s.moves().iter().all(|m| m.len == 2)));
    }

    #[test]
    fn prefixes_partition_the_stream() {
        let opts = EnumerationOptions::default();
        let whole: Vec<_> = enumerate_wirings(5, opts.clone()).unwrap().collect();
        let mut parts = Vec::new();
        for first in WiringIter::first_moves(5, &opts).unwrap() {
            parts.extend(WiringIter::with_first_move(5, opts.clone(), first).unwrap());
        }
        assert_eq!(whole, parts);
    }

    #[test]
    fn range_is_enforced() {
        assert!(enumerate_wirings(2, EnumerationOptions::default()).is_err());
        assert!(enumerate_wirings(ABSOLUTE_NMAX + 1, EnumerationOptions::default()).is_err());
        let big = EnumerationOptions { nmax: Some(ABSOLUTE_NMAX + 1), ..Default::default() };
        assert!(matches!(enumerate_wirings(7, big), Err(EnumerationError::BadCap(_))));
        let seven = EnumerationOptions { nmax: Some(7), ..Default::default() };
        assert!(enumerate_wirings(7, seven).is_ok());
    }

    #[test]
    fn five_wire_corpus() {
        let r = verify_corpus(5).unwrap();
        assert_eq!(r.violations(), 0, "{:?}", r.checks);
        assert_eq!(r.spectrum, BTreeSet::from([8, 9, 10, 11]));
        assert_eq!(r.simplicial, r.melchior_equality);
        assert!(!r.simplicial.is_empty());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let mut records = 0;
        let seq = verify_corpus_with(4, None, |_| records += 1).unwrap();
        assert_eq!(seq, verify_corpus(4).unwrap());
        assert_eq!(records, seq.sequences);
    }
}
