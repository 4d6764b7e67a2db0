//! Straight-number search: enumerate straight codes level by level and
//! identify each by fingerprint.
//!
//! Work at a level fans out over canonical shadows. Each shadow reports its
//! first matching over-bit mask; the level's witness is the match with the
//! smallest (shadow index, mask), so the answer does not depend on how many
//! workers ran or in which order they finished. Workers skip shadows after
//! the best match found so far, which never skips the true minimum.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::Diagram;
use crate::invariants::{
    alexander, canonical_alexander, canonical_jones, fingerprint, jones, signature, Fingerprint,
};
use crate::straight::{
    canonicalize, enumerate_shadows_pruned, hugging_pairs, MaskScanner, PruneFlags, ShadowCode,
    StraightCode,
};
use crate::table::Table;

/// Largest level the search accepts.
pub const MAX_LEVEL: usize = 30;

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("unknown knot {0:?}")]
    UnknownKnot(String),
    #[error("maximum {max} is below the lower bound {lower}")]
    BelowLowerBound { max: usize, lower: usize },
    #[error("levels above {MAX_LEVEL} are not supported")]
    LevelTooLarge,
    #[error("could not build a worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveOptions {
    pub max_crossings: usize,
    /// Worker count; `None` reads `STRAIGHTKNOT_THREADS`, then uses all cores.
    pub threads: Option<usize>,
    #[serde(skip)]
    pub prune: PruneFlags,
    /// Stop after examining this many codes in total.
    pub code_budget: Option<u64>,
}

impl SolveOptions {
    pub fn up_to(max_crossings: usize) -> Self {
        SolveOptions {
            max_crossings,
            threads: None,
            prune: PruneFlags::ALL,
            code_budget: None,
        }
    }
}

/// What the search looks for.
#[derive(Debug, Clone, Serialize)]
pub struct Target {
    pub name: Option<String>,
    pub fingerprint: Fingerprint,
    pub lower_bound: usize,
    /// Why the lower bound holds.
    pub lower_bound_basis: String,
    /// Table names sharing the fingerprint. More than one means a match
    /// cannot be told apart from the others by invariants alone.
    pub table_matches: Vec<String>,
    /// Crossing numbers of `table_matches`, in the same order.
    pub match_crossings: Vec<usize>,
}

fn matches_of(table: &Table, fp: &Fingerprint) -> (Vec<String>, Vec<usize>) {
    table
        .lookup(fp)
        .iter()
        .map(|r| (r.name.clone(), r.crossing_number()))
        .unzip()
}

impl Target {
    pub fn from_name(table: &Table, name: &str) -> Result<Self, SolveError> {
        let rec = table
            .get(name)
            .ok_or_else(|| SolveError::UnknownKnot(name.into()))?;
        let fp = table
            .fingerprint_of(&rec.name)
            .cloned()
            .unwrap_or_else(|| fingerprint(&rec.diagram));
        let c = rec.diagram.crossing_count();
        let (table_matches, match_crossings) = matches_of(table, &fp);
        Ok(Target {
            name: Some(rec.name.clone()),
            table_matches,
            match_crossings,
            fingerprint: fp,
            lower_bound: c,
            lower_bound_basis: format!("crossing number {c} of {} from the table", rec.name),
        })
    }

    /// The bound is the crossing count when `d` is reduced and alternating
    /// (a reduced alternating diagram has minimal crossing number), 0 for
    /// the unknot's invariants, else 3.
    pub fn from_diagram(table: &Table, d: &Diagram) -> Self {
        let fp = fingerprint(d);
        let (matches, match_crossings) = matches_of(table, &fp);
        let (lower_bound, lower_bound_basis) = if d.is_alternating() && d.is_reduced() {
            (
                d.crossing_count(),
                "assumption: reduced alternating diagrams realize the crossing number".to_string(),
            )
        } else if fp == fingerprint(&Diagram::unknot()) {
            (
                0,
                "invariants of the unknot; search starts at 0".to_string(),
            )
        } else {
            (
                3,
                "no crossing-number information; nontrivial knots need 3".to_string(),
            )
        };
        Target {
            name: matches.first().cloned(),
            fingerprint: fp,
            lower_bound,
            lower_bound_basis,
            table_matches: matches,
            match_crossings,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Found,
    LowerBoundOnly,
    Ambiguous,
}

/// An exhaustive level with no match.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelCertificate {
    pub level: usize,
    pub prune: String,
    pub shadows: usize,
    /// Codes examined, one per mirror pair of over-bit assignments.
    pub codes: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveStats {
    pub shadows_enumerated: usize,
    pub codes_examined: u64,
    pub determinant_hits: u64,
    pub wall_ms: u128,
    pub exhausted: Vec<LevelCertificate>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveResult {
    pub status: Status,
    /// The straight number when found; otherwise the highest level shown
    /// to have no straight diagram of the target.
    pub value: usize,
    #[serde(serialize_with = "code_text")]
    pub witness: Option<StraightCode>,
    /// Table knots the witness may be. Names whose crossing number exceeds
    /// the witness size are dropped, since a diagram with `n` crossings
    /// cannot show them.
    pub candidates: Vec<String>,
    pub lower_bound_basis: String,
    pub stats: SolveStats,
}

fn code_text<S: serde::Serializer>(c: &Option<StraightCode>, s: S) -> Result<S::Ok, S::Error> {
    match c {
        Some(c) => s.serialize_str(&c.to_string()),
        None => s.serialize_none(),
    }
}

impl SolveResult {
    /// The witness in canonical form, for comparing runs.
    pub fn canonical_witness(&self) -> Option<StraightCode> {
        self.witness.as_ref().map(canonicalize)
    }
}

fn prune_text(p: PruneFlags) -> String {
    let mut v = Vec::new();
    if p.r1 {
        v.push("r1");
    }
    if p.r2 {
        v.push("r2");
    }
    if p.nugatory {
        v.push("nugatory");
    }
    if v.is_empty() {
        "none".into()
    } else {
        v.join(",")
    }
}

/// Worker count from the option, else `STRAIGHTKNOT_THREADS`, else 0 (all
/// cores).
pub fn thread_count(threads: Option<usize>) -> usize {
    threads
        .or_else(|| std::env::var("STRAIGHTKNOT_THREADS").ok()?.parse().ok())
        .unwrap_or(0)
}

fn pool(threads: Option<usize>) -> Result<rayon::ThreadPool, SolveError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count(threads))
        .build()
        .map_err(|e| SolveError::Pool(e.to_string()))
}

/// True when the code's diagram has the target fingerprint, testing the
/// cheaper invariants first.
fn matches(code: &StraightCode, fp: &Fingerprint) -> bool {
    let d = code.to_diagram();
    canonical_alexander(&alexander(&d)) == fp.alexander
        && canonical_jones(&jones(&d)) == fp.jones_canonical
        && signature(&d).unsigned_abs() == fp.signature_abs
}

struct Counters {
    codes: AtomicU64,
    det_hits: AtomicU64,
}

/// First matching mask on one shadow, masks in increasing order, only those
/// with position 1 under (the rest are their mirror images).
fn scan_shadow(s: &ShadowCode, prune: PruneFlags, fp: &Fingerprint, k: &Counters) -> Option<u64> {
    let n = s.n();
    let pairs = if prune.r2 {
        hugging_pairs(s)
    } else {
        Vec::new()
    };
    let scanner = MaskScanner::new(s);
    let bit = |mask: u64, p: usize| mask >> (n - 1 - p) & 1;
    let mut codes = 0;
    let mut hit = None;
    for mask in 0..1u64 << (n - 1) {
        if pairs.iter().any(|&(i, j)| bit(mask, i) == bit(mask, j)) {
            continue;
        }
        codes += 1;
        if scanner.determinant(mask) != fp.determinant {
            continue;
        }
        k.det_hits.fetch_add(1, Ordering::Relaxed);
        let overs = (0..n).map(|p| bit(mask, p) == 1).collect();
        if matches(&s.with_overs(overs), fp) {
            hit = Some(mask);
            break;
        }
    }
    k.codes.fetch_add(codes, Ordering::Relaxed);
    hit
}

enum LevelOutcome {
    Found(StraightCode),
    Exhausted(LevelCertificate),
    OverBudget,
}

fn search_level(
    level: usize,
    fp: &Fingerprint,
    opts: &SolveOptions,
    k: &Counters,
    shadows_seen: &mut usize,
) -> LevelOutcome {
    let shadows = enumerate_shadows_pruned(level, opts.prune);
    *shadows_seen += shadows.len();
    let before = k.codes.load(Ordering::Relaxed);
    let best = AtomicUsize::new(usize::MAX);
    let over_budget = std::sync::atomic::AtomicBool::new(false);
    let hits: Vec<(usize, u64)> = shadows
        .par_iter()
        .enumerate()
        .filter_map(|(i, s)| {
            if i > best.load(Ordering::Relaxed) || over_budget.load(Ordering::Relaxed) {
                return None;
            }
            if let Some(b) = opts.code_budget {
                if k.codes.load(Ordering::Relaxed) > b {
                    over_budget.store(true, Ordering::Relaxed);
                    return None;
                }
            }
            let m = scan_shadow(s, opts.prune, fp, k)?;
            best.fetch_min(i, Ordering::Relaxed);
            Some((i, m))
        })
        .collect();
    if let Some(&(i, mask)) = hits.iter().min() {
        let n = level;
        let overs = (0..n).map(|p| mask >> (n - 1 - p) & 1 == 1).collect();
        return LevelOutcome::Found(shadows[i].with_overs(overs));
    }
    if over_budget.load(Ordering::Relaxed) {
        return LevelOutcome::OverBudget;
    }
    LevelOutcome::Exhausted(LevelCertificate {
        level,
        prune: prune_text(opts.prune),
        shadows: shadows.len(),
        codes: k.codes.load(Ordering::Relaxed) - before,
    })
}

/// Searches levels `target.lower_bound ..= opts.max_crossings`.
pub fn straight_number(target: &Target, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    straight_number_from(target, target.lower_bound, opts)
}

/// Searches levels `from ..= opts.max_crossings`.
pub fn straight_number_from(
    target: &Target,
    from: usize,
    opts: &SolveOptions,
) -> Result<SolveResult, SolveError> {
    if opts.max_crossings > MAX_LEVEL {
        return Err(SolveError::LevelTooLarge);
    }
    if opts.max_crossings < from {
        return Err(SolveError::BelowLowerBound {
            max: opts.max_crossings,
            lower: from,
        });
    }
    let start = Instant::now();
    let pool = pool(opts.threads)?;
    let k = Counters {
        codes: AtomicU64::new(0),
        det_hits: AtomicU64::new(0),
    };
    let mut shadows_seen = 0;
    let mut exhausted = Vec::new();
    let mut outcome = None;
    if from == 0 {
        // The only code with no crossings is the unknot's bare arc.
        let bare = StraightCode::unknot();
        k.codes.fetch_add(1, Ordering::Relaxed);
        if fingerprint(&bare.to_diagram()) == target.fingerprint {
            outcome = Some(bare);
        } else {
            exhausted.push(LevelCertificate {
                level: 0,
                prune: prune_text(opts.prune),
                shadows: 1,
                codes: 1,
            });
        }
    }
    for level in from.max(1)..=opts.max_crossings {
        if outcome.is_some() {
            break;
        }
        match pool.install(|| search_level(level, &target.fingerprint, opts, &k, &mut shadows_seen))
        {
            LevelOutcome::Found(code) => {
                outcome = Some(code);
                break;
            }
            LevelOutcome::Exhausted(cert) => exhausted.push(cert),
            LevelOutcome::OverBudget => break,
        }
    }
    let stats = |exhausted| SolveStats {
        shadows_enumerated: shadows_seen,
        codes_examined: k.codes.load(Ordering::Relaxed),
        determinant_hits: k.det_hits.load(Ordering::Relaxed),
        wall_ms: start.elapsed().as_millis(),
        exhausted,
    };
    let result = match outcome {
        Some(code) => {
            debug_assert_eq!(fingerprint(&code.to_diagram()), target.fingerprint);
            let candidates: Vec<String> = target
                .table_matches
                .iter()
                .zip(&target.match_crossings)
                .filter(|&(_, &c)| c <= code.n())
                .map(|(name, _)| name.clone())
                .collect();
            SolveResult {
                status: if candidates.len() > 1 {
                    Status::Ambiguous
                } else {
                    Status::Found
                },
                value: code.n(),
                witness: Some(code),
                candidates,
                lower_bound_basis: target.lower_bound_basis.clone(),
                stats: stats(exhausted),
            }
        }
        None => {
            let value = exhausted
                .last()
                .map_or(from.saturating_sub(1), |c: &LevelCertificate| c.level);
            SolveResult {
                status: Status::LowerBoundOnly,
                value,
                witness: None,
                candidates: target.table_matches.clone(),
                lower_bound_basis: target.lower_bound_basis.clone(),
                stats: stats(exhausted),
            }
        }
    };
    Ok(result)
}

/// Whether a straight diagram exists at the target's crossing number.
#[derive(Debug, Clone, Serialize)]
pub struct PerfectlyStraight {
    pub perfectly_straight: bool,
    /// False when a straight diagram at the crossing number matches the
    /// target's invariants but also another knot's; `perfectly_straight`
    /// is then false without being disproved.
    pub determined: bool,
    pub crossing_number: usize,
    pub result: SolveResult,
}

pub fn is_perfectly_straight(
    target: &Target,
    opts: &SolveOptions,
) -> Result<PerfectlyStraight, SolveError> {
    let c = target.lower_bound;
    let mut o = opts.clone();
    o.max_crossings = c;
    let result = straight_number(target, &o)?;
    Ok(PerfectlyStraight {
        perfectly_straight: result.status == Status::Found && result.value == c,
        determined: result.status != Status::Ambiguous,
        crossing_number: c,
        result,
    })
}
