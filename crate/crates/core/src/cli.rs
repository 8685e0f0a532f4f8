//! Command-line front end: single queries, JSON-lines batches and the `verify`
//! self-check suite.
//!
//! Every flag has an environment override with the `LOOPBRACKET_` prefix
//! (`LOOPBRACKET_SURFACE`, `LOOPBRACKET_FORMAT`, `LOOPBRACKET_SHOW_RAW`,
//! `LOOPBRACKET_SEED`, `LOOPBRACKET_BUDGET`).
//!
//! Exit codes: 0 success, 1 usage or parse error (including precondition
//! violations), 2 internal invariant violation or a failed `verify`.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::io::{self, BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bracket::{self, smooth, BracketResult, ChordTerm};
use crate::error::{Error, Result};
use crate::freegroup::{brute_force_simconj, free_class, simultaneous_conjugacy, FreeClass, Word};
use crate::sample;
use crate::surface::RibbonRose;
use crate::torus::{torus_min_intersection, TorusClass};

/// Bumped whenever a field of [`ResultRecord`] changes meaning or is removed.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Amr,
    Goldman,
    Minint,
    Selfint,
    Theorem2,
    Torus,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Mode::Amr => "amr",
            Mode::Goldman => "goldman",
            Mode::Minint => "minint",
            Mode::Selfint => "selfint",
            Mode::Theorem2 => "theorem2",
            Mode::Torus => "torus",
        };
        f.write_str(name)
    }
}

/// One query; the JSON-lines batch format is one of these per line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QueryRecord {
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub surface: Option<String>,
    pub w1: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w2: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedTerm {
    pub coefficient: i64,
    pub first: Word,
    pub second: Word,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoldmanTerm {
    pub coefficient: i64,
    pub class: FreeClass,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ErrorKind {
    Parse,
    Precondition,
    Internal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrorRecord {
    pub kind: ErrorKind,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
}

impl ErrorRecord {
    fn from_error(e: &Error) -> Self {
        let (kind, position) = match e {
            Error::Parse { position, .. } => (ErrorKind::Parse, Some(*position)),
            e if e.is_internal() => (ErrorKind::Internal, None),
            _ => (ErrorKind::Precondition, None),
        };
        ErrorRecord {
            kind,
            message: e.to_string(),
            position,
        }
    }

    fn exit_code(&self) -> i32 {
        match self.kind {
            ErrorKind::Internal => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResultRecord {
    pub schema_version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub query: Option<QueryRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surface: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub raw_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub raw: Option<Vec<ChordTerm>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduced: Option<Vec<ReducedTerm>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub goldman: Option<Vec<GoldmanTerm>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms_count: Option<u64>,
    /// The number the mode asks for: terms, intersection or self-intersection.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorRecord>,
}

impl ResultRecord {
    fn empty(query: Option<QueryRecord>) -> Self {
        ResultRecord {
            schema_version: SCHEMA_VERSION,
            query,
            surface: None,
            raw_count: None,
            raw: None,
            reduced: None,
            goldman: None,
            terms_count: None,
            value: None,
            error: None,
        }
    }

    fn failed(query: Option<QueryRecord>, error: ErrorRecord) -> Self {
        ResultRecord {
            error: Some(error),
            ..Self::empty(query)
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.error.as_ref().map_or(0, ErrorRecord::exit_code)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(q) = &self.query {
            let _ = write!(out, "mode: {}\nw1: {}\n", q.mode, q.w1);
            if let Some(w2) = &q.w2 {
                let _ = writeln!(out, "w2: {w2}");
            }
            if let (Some(p), Some(q)) = (q.p, q.q) {
                let _ = writeln!(out, "p: {p}\nq: {q}");
            }
        }
        if let Some(s) = &self.surface {
            let _ = writeln!(out, "surface: {s}");
        }
        if let Some(n) = self.raw_count {
            let _ = writeln!(out, "raw_count: {n}");
        }
        if let Some(raw) = &self.raw {
            let _ = writeln!(out, "raw:");
            for t in raw {
                let _ = writeln!(out, "  {:+} {} | {}", t.sign, t.first, t.second);
            }
        }
        if let Some(reduced) = &self.reduced {
            let _ = writeln!(out, "reduced:");
            for t in reduced {
                let _ = writeln!(out, "  {:+} {} | {}", t.coefficient, t.first, t.second);
            }
        }
        if let Some(goldman) = &self.goldman {
            let _ = writeln!(out, "goldman:");
            for t in goldman {
                let _ = writeln!(out, "  {:+} <{}>", t.coefficient, t.class);
            }
        }
        if let Some(n) = self.terms_count {
            let _ = writeln!(out, "terms_count: {n}");
        }
        if let Some(v) = self.value {
            let _ = writeln!(out, "value: {v}");
        }
        if let Some(e) = &self.error {
            let kind = match e.kind {
                ErrorKind::Parse => "parse",
                ErrorKind::Precondition => "precondition",
                ErrorKind::Internal => "internal",
            };
            let _ = writeln!(out, "error: {kind}: {}", e.message);
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("result records serialize")
    }
}

fn parse_word(text: &str) -> Result<Word> {
    text.parse()
}

fn parse_class(text: &str) -> Result<FreeClass> {
    Ok(free_class(&parse_word(text)?))
}

fn require<T>(value: Option<T>, what: &str) -> Result<T> {
    value.ok_or_else(|| Error::parse(0, format!("missing {what}")))
}

fn reduced_terms(r: &BracketResult) -> Vec<ReducedTerm> {
    r.reduced
        .iter()
        .map(|(d, &coefficient)| ReducedTerm {
            coefficient,
            first: d.first.clone(),
            second: d.second.clone(),
        })
        .collect()
}

fn goldman_terms(terms: &BTreeMap<FreeClass, i64>) -> Vec<GoldmanTerm> {
    terms
        .iter()
        .map(|(class, &coefficient)| GoldmanTerm {
            coefficient,
            class: class.clone(),
        })
        .collect()
}

fn evaluate(q: &QueryRecord, show_raw: bool) -> Result<ResultRecord> {
    let mut out = ResultRecord::empty(Some(q.clone()));
    if q.mode == Mode::Torus {
        let c1: TorusClass = q.w1.parse()?;
        let c2: TorusClass = require(q.w2.as_deref(), "second torus class")?.parse()?;
        out.value = Some(torus_min_intersection(c1, c2));
        return Ok(out);
    }
    let rose: RibbonRose = require(q.surface.as_deref(), "surface")?.parse()?;
    out.surface = Some(rose.to_string());
    let a1 = parse_class(&q.w1)?;
    let second = || -> Result<FreeClass> { parse_class(require(q.w2.as_deref(), "second word")?) };
    match q.mode {
        Mode::Amr | Mode::Goldman => {
            let a2 = second()?;
            let amr = bracket::amr_bracket(&a1, &a2, &rose)?;
            out.raw_count = Some(amr.raw.len());
            if show_raw {
                out.raw = Some(amr.raw.clone());
            }
            if q.mode == Mode::Amr {
                out.reduced = Some(reduced_terms(&amr));
                out.terms_count = Some(amr.terms_count());
                out.value = Some(amr.terms_count() as u128);
            } else {
                let g = bracket::smooth_all(&amr.raw);
                let count: u64 = g.values().map(|c| c.unsigned_abs()).sum();
                out.goldman = Some(goldman_terms(&g));
                out.terms_count = Some(count);
                out.value = Some(count as u128);
            }
        }
        Mode::Minint => {
            let a2 = second()?;
            out.value = Some(bracket::min_intersection(&a1, &a2, &rose)? as u128);
        }
        Mode::Selfint => {
            out.value = Some(bracket::self_intersection(&a1, &rose)? as u128);
        }
        Mode::Theorem2 => {
            let p = require(q.p, "exponent p")?;
            let q = require(q.q, "exponent q")?;
            out.value = Some(bracket::theorem2_selfint(&a1, p, q, &rose)? as u128);
        }
        Mode::Torus => unreachable!("handled above"),
    }
    Ok(out)
}

pub fn run_query(q: &QueryRecord, show_raw: bool) -> ResultRecord {
    evaluate(q, show_raw)
        .unwrap_or_else(|e| ResultRecord::failed(Some(q.clone()), ErrorRecord::from_error(&e)))
}

/// One JSON object per line; blank lines are skipped. Lines are evaluated in
/// parallel and returned in input order.
pub fn run_batch(input: &str, show_raw: bool) -> Vec<ResultRecord> {
    let lines: Vec<(usize, &str)> = input
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();
    lines
        .par_iter()
        .map(
            |&(n, line)| match serde_json::from_str::<QueryRecord>(line) {
                Ok(q) => run_query(&q, show_raw),
                Err(e) => ResultRecord::failed(
                    None,
                    ErrorRecord {
                        kind: ErrorKind::Parse,
                        message: format!("line {}: {e}", n + 1),
                        position: Some(e.column().saturating_sub(1)),
                    },
                ),
            },
        )
        .collect()
}

type SimConjFn = fn(&Word, &Word, &Word, &Word) -> Result<Option<Word>>;
type BracketFn = fn(&FreeClass, &FreeClass, &RibbonRose) -> Result<BracketResult>;
type SelfIntFn = fn(&FreeClass, &RibbonRose) -> Result<u64>;
type Theorem2Fn = fn(&FreeClass, i64, i64, &RibbonRose) -> Result<u64>;
type ReduceFn = fn(&[ChordTerm]) -> Result<BracketResult>;

/// The operations `verify` checks, swappable so tests can plant a bug.
#[derive(Clone, Copy)]
pub struct Engine {
    pub simultaneous_conjugacy: SimConjFn,
    pub amr_bracket: BracketFn,
    pub self_intersection: SelfIntFn,
    pub theorem2_selfint: Theorem2Fn,
    pub reduce_terms: ReduceFn,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            simultaneous_conjugacy,
            amr_bracket: bracket::amr_bracket,
            self_intersection: bracket::self_intersection,
            theorem2_selfint: bracket::theorem2_selfint,
            reduce_terms: bracket::reduce_terms,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub cases: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub seed: u64,
    pub budget: usize,
    pub properties: Vec<PropertyReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("verify seed={} budget={}\n", self.seed, self.budget);
        for p in &self.properties {
            let status = if p.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status} {} ({} cases)", p.name, p.cases);
            if let Some(c) = &p.counterexample {
                let _ = writeln!(out, "  counterexample: {c}");
            }
        }
        let _ = writeln!(
            out,
            "{}",
            if self.passed() {
                "all properties hold"
            } else {
                "FAILED"
            }
        );
        out
    }
}

/// Runs `cases` checks, stopping at the first counterexample.
fn property<F>(name: &str, cases: usize, mut check: F) -> PropertyReport
where
    F: FnMut(usize) -> std::result::Result<(), String>,
{
    for i in 0..cases {
        if let Err(counterexample) = check(i) {
            return PropertyReport {
                name: name.into(),
                cases: i + 1,
                passed: false,
                counterexample: Some(counterexample),
            };
        }
    }
    PropertyReport {
        name: name.into(),
        cases,
        passed: true,
        counterexample: None,
    }
}

/// The four signed terms of the eight-gon example on the pair of
/// pants, and the two terms its bracket simplifies to.
pub fn octagon_fixture() -> (Vec<ChordTerm>, [ChordTerm; 2]) {
    let t = |sign, first: &str, second: &str| {
        ChordTerm::new(sign, first.parse().unwrap(), second.parse().unwrap())
    };
    (
        vec![
            t(1, "BBa", "aB"),
            t(-1, "aBB", "Ba"),
            t(-1, "aBB", "aB"),
            t(1, "BaB", "aB"),
        ],
        [t(1, "BBa", "aB"), t(-1, "aBB", "Ba")],
    )
}

fn check_octagon(engine: &Engine) -> std::result::Result<(), String> {
    let (terms, simple) = octagon_fixture();
    let reduced = (engine.reduce_terms)(&terms).map_err(|e| e.to_string())?;
    if reduced.reduced.len() != 2 {
        return Err(format!(
            "{} reduced terms, expected 2",
            reduced.reduced.len()
        ));
    }
    let mut coefficients: Vec<i64> = reduced.reduced.values().copied().collect();
    coefficients.sort();
    if coefficients != [-1, 1] {
        return Err(format!("coefficients {coefficients:?}, expected [-1, 1]"));
    }
    for s in &simple {
        let found = reduced.reduced.iter().any(|(d, &c)| {
            c == s.sign as i64
                && simultaneous_conjugacy(&s.first, &s.second, &d.first, &d.second)
                    .ok()
                    .flatten()
                    .is_some()
        });
        if !found {
            return Err(format!(
                "no reduced term matches {:+} {} | {}",
                s.sign, s.first, s.second
            ));
        }
    }
    let mut goldman: BTreeMap<FreeClass, i64> = BTreeMap::new();
    for t in &terms {
        let (sign, class) = smooth(t);
        *goldman.entry(class).or_insert(0) += sign as i64;
    }
    if goldman.values().any(|&c| c != 0) {
        return Err("smoothing the four terms does not cancel".into());
    }
    let pants = RibbonRose::pants();
    let a1 = parse_class("aBB").expect("literal");
    let a2 = parse_class("aB").expect("literal");
    let amr = (engine.amr_bracket)(&a1, &a2, &pants).map_err(|e| e.to_string())?;
    if amr.terms_count() != 2 {
        return Err(format!(
            "amr terms on pants = {}, expected 2",
            amr.terms_count()
        ));
    }
    Ok(())
}

fn fuzz_rose<R: Rng>(rng: &mut R) -> RibbonRose {
    let rank = rng.gen_range(2..=3);
    sample::random_rose(rng, rank)
}

/// A pair of classes with distinct roots on a random rank 2 or 3 rose.
fn fuzz_pair<R: Rng>(rng: &mut R) -> (FreeClass, FreeClass, RibbonRose) {
    let rose = fuzz_rose(rng);
    loop {
        let a1 = sample::random_class(rng, rose.rank(), 6, 2);
        let a2 = sample::random_class(rng, rose.rank(), 6, 2);
        if a1.common_root_exponents(&a2).is_none() {
            return (a1, a2, rose);
        }
    }
}

fn random_short_word<R: Rng>(rng: &mut R, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    sample::random_word(rng, 2, len)
}

/// A tuple of rank-2 words of length `≤ 4`; half the time the second pair is
/// a simultaneous conjugate of the first when that stays short.
pub fn simconj_tuple<R: Rng>(rng: &mut R) -> [Word; 4] {
    let mut u1 = random_short_word(rng, 4);
    while u1.is_empty() {
        u1 = random_short_word(rng, 4);
    }
    let u2 = random_short_word(rng, 4);
    if rng.gen_bool(0.5) {
        let g = random_short_word(rng, 2);
        let (v1, v2) = (u1.conjugated_by(&g), u2.conjugated_by(&g));
        if v1.len() <= 4 && v2.len() <= 4 {
            return [u1, u2, v1, v2];
        }
    }
    let mut v1 = random_short_word(rng, 4);
    while v1.is_empty() {
        v1 = random_short_word(rng, 4);
    }
    [u1, u2, v1, random_short_word(rng, 4)]
}

fn err_text(e: Error) -> String {
    e.to_string()
}

/// Runs the self-check suite. The report depends only on `seed` and `budget`.
pub fn verify(seed: u64, budget: usize, engine: &Engine) -> VerifyReport {
    let mut properties = vec![property("octagon fixture", 1, |_| check_octagon(engine))];

    let mut rng = sample::rng(seed);
    properties.push(property(
        "simultaneous conjugacy vs brute force",
        budget,
        |_| {
            let [u1, u2, v1, v2] = simconj_tuple(&mut rng);
            let fast = (engine.simultaneous_conjugacy)(&u1, &u2, &v1, &v2).map_err(err_text)?;
            let slow = brute_force_simconj(&u1, &u2, &v1, &v2, 6);
            if fast.is_some() != slow.is_some() {
                return Err(format!(
                    "({u1}, {u2}) -> ({v1}, {v2}): fast {fast:?}, brute force {slow:?}"
                ));
            }
            if let Some(g) = fast {
                if u1.conjugated_by(&g) != v1 || u2.conjugated_by(&g) != v2 {
                    return Err(format!(
                        "({u1}, {u2}) -> ({v1}, {v2}): {g} is not a conjugator"
                    ));
                }
            }
            Ok(())
        },
    ));

    let mut rng = sample::rng(seed.wrapping_add(1));
    let pairs: Vec<_> = (0..budget).map(|_| fuzz_pair(&mut rng)).collect();
    let brackets: Vec<Result<BracketResult>> = pairs
        .par_iter()
        .map(|(a1, a2, rose)| (engine.amr_bracket)(a1, a2, rose))
        .collect();
    let show = |i: usize| {
        let (a1, a2, rose) = &pairs[i];
        format!("<{a1}>, <{a2}> on {rose}")
    };
    properties.push(property(
        "no cancellation for distinct roots",
        budget,
        |i| {
            let r = brackets[i]
                .as_ref()
                .map_err(|e| format!("{}: {e}", show(i)))?;
            if r.terms_count() as usize != r.raw.len() {
                return Err(format!(
                    "{}: {} raw, {} reduced",
                    show(i),
                    r.raw.len(),
                    r.terms_count()
                ));
            }
            Ok(())
        },
    ));
    properties.push(property("goldman terms at most amr terms", budget, |i| {
        let r = brackets[i]
            .as_ref()
            .map_err(|e| format!("{}: {e}", show(i)))?;
        let goldman: u64 = bracket::smooth_all(&r.raw)
            .values()
            .map(|c| c.unsigned_abs())
            .sum();
        if goldman > r.terms_count() {
            return Err(format!(
                "{}: goldman {goldman} > amr {}",
                show(i),
                r.terms_count()
            ));
        }
        Ok(())
    }));
    properties.push(property("skew-symmetry", budget, |i| {
        let (a1, a2, rose) = &pairs[i];
        let forward = brackets[i]
            .as_ref()
            .map_err(|e| format!("{}: {e}", show(i)))?;
        let backward =
            (engine.amr_bracket)(a2, a1, rose).map_err(|e| format!("{}: {e}", show(i)))?;
        let g_forward = bracket::smooth_all(&forward.raw);
        let g_backward = bracket::smooth_all(&backward.raw);
        let negated: BTreeMap<FreeClass, i64> =
            g_forward.iter().map(|(c, &k)| (c.clone(), -k)).collect();
        if forward.terms_count() != backward.terms_count() || negated != g_backward {
            return Err(format!("{}: brackets are not antisymmetric", show(i)));
        }
        Ok(())
    }));

    let mut rng = sample::rng(seed.wrapping_add(2));
    let exponents = [-2i64, -1, 1, 2, 3];
    let cases: Vec<(FreeClass, i64, i64, RibbonRose)> = (0..budget)
        .map(|_| {
            let rank = rng.gen_range(1..=3);
            let rose = sample::random_rose(&mut rng, rank.max(2));
            let a = sample::random_class(&mut rng, rank, 8, 3);
            let p = exponents[rng.gen_range(0..exponents.len())];
            let q = loop {
                let q = exponents[rng.gen_range(0..exponents.len())];
                if q != p {
                    break q;
                }
            };
            (a, p, q, rose)
        })
        .collect();
    let outcomes: Vec<(Result<u64>, Result<u64>)> = cases
        .par_iter()
        .map(|(a, p, q, rose)| {
            (
                (engine.theorem2_selfint)(a, *p, *q, rose),
                (engine.self_intersection)(a, rose),
            )
        })
        .collect();
    properties.push(property(
        "power bracket recovers self-intersection",
        budget,
        |i| {
            let (a, p, q, rose) = &cases[i];
            let context = format!("<{a}> p={p} q={q} on {rose}");
            match &outcomes[i] {
                (Ok(t), Ok(s)) if t == s => Ok(()),
                (Ok(t), Ok(s)) => Err(format!(
                    "{context}: power bracket gives {t}, direct count {s}"
                )),
                (Err(e), _) | (_, Err(e)) => Err(format!("{context}: {e}")),
            }
        },
    ));

    VerifyReport {
        schema_version: SCHEMA_VERSION,
        seed,
        budget,
        properties,
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "loopbracket",
    version,
    about = "Goldman and AMR brackets of loops on surfaces, and the intersection numbers they determine"
)]
pub struct Cli {
    /// Surface: `pants`, `torus1`, `genus=g,boundary=r` or `rose:a,b,A,B`
    #[arg(long, global = true, env = "LOOPBRACKET_SURFACE")]
    surface: Option<String>,

    #[arg(
        long,
        global = true,
        value_enum,
        default_value = "text",
        env = "LOOPBRACKET_FORMAT"
    )]
    format: Format,

    /// Include the unreduced term list
    #[arg(long, global = true, env = "LOOPBRACKET_SHOW_RAW")]
    show_raw: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// AMR bracket of two classes
    Amr { w1: String, w2: String },
    /// Goldman bracket of two classes
    Goldman { w1: String, w2: String },
    /// Minimal intersection number of two classes
    Minint { w1: String, w2: String },
    /// Minimal self-intersection number of a class
    Selfint { w1: String },
    /// Self-intersection from the bracket of two powers
    #[command(allow_negative_numbers = true)]
    Theorem2 {
        w1: String,
        #[arg(short, long)]
        p: i64,
        #[arg(short, long)]
        q: i64,
    },
    /// Minimal intersection on the closed torus of classes given as `(m,l)`
    Torus { c1: String, c2: String },
    /// Evaluate a JSON-lines file of queries (`-` for stdin)
    Batch { path: PathBuf },
    /// Run the randomized self-check suite
    Verify {
        #[arg(long, default_value_t = 0, env = "LOOPBRACKET_SEED")]
        seed: u64,
        #[arg(long, default_value_t = 100, env = "LOOPBRACKET_BUDGET")]
        budget: usize,
    },
}

impl Command {
    fn query(&self, surface: Option<String>) -> Option<QueryRecord> {
        let pair = |mode, w1: &String, w2: &String| QueryRecord {
            mode,
            surface: surface.clone(),
            w1: w1.clone(),
            w2: Some(w2.clone()),
            p: None,
            q: None,
        };
        Some(match self {
            Command::Amr { w1, w2 } => pair(Mode::Amr, w1, w2),
            Command::Goldman { w1, w2 } => pair(Mode::Goldman, w1, w2),
            Command::Minint { w1, w2 } => pair(Mode::Minint, w1, w2),
            Command::Torus { c1, c2 } => QueryRecord {
                surface: None,
                ..pair(Mode::Torus, c1, c2)
            },
            Command::Selfint { w1 } => QueryRecord {
                mode: Mode::Selfint,
                surface: surface.clone(),
                w1: w1.clone(),
                w2: None,
                p: None,
                q: None,
            },
            Command::Theorem2 { w1, p, q } => QueryRecord {
                mode: Mode::Theorem2,
                surface: surface.clone(),
                w1: w1.clone(),
                w2: None,
                p: Some(*p),
                q: Some(*q),
            },
            Command::Batch { .. } | Command::Verify { .. } => return None,
        })
    }
}

fn emit(out: &mut dyn Write, format: Format, text: String, json: String) -> io::Result<()> {
    match format {
        Format::Text => write!(out, "{text}"),
        Format::Json => writeln!(out, "{json}"),
    }
}

fn read_input(path: &PathBuf) -> io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        for line in io::stdin().lock().lines() {
            s.push_str(&line?);
            s.push('\n');
        }
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    if let Some(q) = cli.command.query(cli.surface.clone()) {
        let r = run_query(&q, cli.show_raw);
        emit(out, cli.format, r.to_text(), r.to_json())?;
        if let Some(e) = &r.error {
            writeln!(err, "error: {}", e.message)?;
        }
        return Ok(r.exit_code());
    }
    match cli.command {
        Command::Batch { path } => {
            let input = match read_input(&path) {
                Ok(s) => s,
                Err(e) => {
                    writeln!(err, "error: cannot read {}: {e}", path.display())?;
                    return Ok(1);
                }
            };
            for (i, r) in run_batch(&input, cli.show_raw).iter().enumerate() {
                if cli.format == Format::Text && i > 0 {
                    writeln!(out)?;
                }
                emit(out, cli.format, r.to_text(), r.to_json())?;
            }
            Ok(0)
        }
        Command::Verify { seed, budget } => {
            let report = verify(seed, budget, &Engine::default());
            let json = serde_json::to_string(&report).expect("reports serialize");
            emit(out, cli.format, report.to_text(), json)?;
            Ok(if report.passed() { 0 } else { 2 })
        }
        _ => unreachable!("queries handled above"),
    }
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("loopbracket").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap())
    }

    fn query(mode: Mode, surface: &str, w1: &str, w2: Option<&str>) -> QueryRecord {
        QueryRecord {
            mode,
            surface: Some(surface.into()),
            w1: w1.into(),
            w2: w2.map(Into::into),
            p: None,
            q: None,
        }
    }

    #[test]
    fn query_examples() {
        let r = run_query(&query(Mode::Minint, "pants", "a", Some("b")), false);
        assert_eq!(r.value, Some(0));
        let r = run_query(&query(Mode::Selfint, "torus1", "aaa", None), false);
        assert_eq!(r.value, Some(2));
        let mut t = query(Mode::Torus, "pants", "(2,3)", Some("(1,1)"));
        t.surface = None;
        assert_eq!(run_query(&t, false).value, Some(1));
    }

    #[test]
    fn query_errors() {
        let r = run_query(&query(Mode::Amr, "pants", "ab!", Some("b")), false);
        let e = r.error.unwrap();
        assert_eq!((e.kind, e.position), (ErrorKind::Parse, Some(2)));
        let r = run_query(&query(Mode::Selfint, "pants", "abc", None), false);
        assert_eq!(r.error.unwrap().kind, ErrorKind::Precondition);
        let r = run_query(
            &query(Mode::Amr, "genus=1,boundary=0", "a", Some("b")),
            false,
        );
        assert!(r.error.unwrap().message.contains("closed surfaces"));
    }

    #[test]
    fn text_and_json_carry_the_same_fields() {
        let r = run_query(&query(Mode::Amr, "pants", "aBB", Some("aB")), true);
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let text = r.to_text();
        for key in json.as_object().unwrap().keys() {
            if key != "schema_version" && key != "query" {
                assert!(text.contains(&format!("{key}:")), "{key} missing from text");
            }
        }
        assert_eq!(json["schema_version"], SCHEMA_VERSION);
        assert_eq!(json["terms_count"], 2);
        assert_eq!(json["raw"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn batch_keeps_order_and_isolates_errors() {
        let input = concat!(
            r#"{"mode":"minint","surface":"pants","w1":"a","w2":"b"}"#,
            "\n{not json\n",
            r#"{"mode":"torus","w1":"(2,3)","w2":"(1,1)"}"#,
            "\n"
        );
        let results = run_batch(input, false);
        assert_eq!(results.len(), 3);
        assert_eq!(results[0].value, Some(0));
        assert_eq!(results[1].error.as_ref().unwrap().kind, ErrorKind::Parse);
        assert_eq!(results[2].value, Some(1));
        assert!(run_batch("", false).is_empty());
    }

    #[test]
    fn verify_is_deterministic_and_passes() {
        let a = verify(11, 15, &Engine::default());
        let b = verify(11, 15, &Engine::default());
        assert_eq!(a, b);
        assert!(a.passed(), "{}", a.to_text());
        assert_eq!(a.properties[0].name, "octagon fixture");
        assert_eq!(verify(11, 0, &Engine::default()).properties[0].cases, 1);
    }

    #[test]
    fn verify_names_a_planted_bug() {
        fn never(_: &Word, _: &Word, _: &Word, _: &Word) -> Result<Option<Word>> {
            Ok(None)
        }
        fn keep_positive(terms: &[ChordTerm]) -> Result<BracketResult> {
            let kept: Vec<ChordTerm> = terms.iter().filter(|t| t.sign > 0).cloned().collect();
            bracket::reduce_terms(&kept)
        }
        let engine = Engine {
            simultaneous_conjugacy: never,
            reduce_terms: keep_positive,
            ..Engine::default()
        };
        let report = verify(3, 40, &engine);
        let failed: Vec<&str> = report
            .properties
            .iter()
            .filter(|p| !p.passed)
            .map(|p| p.name.as_str())
            .collect();
        assert_eq!(
            failed,
            ["octagon fixture", "simultaneous conjugacy vs brute force"]
        );
        assert!(report.to_text().contains("FAIL octagon fixture"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["minint", "--surface", "pants", "a", "b"]).0, 0);
        assert_eq!(run_args(&["selfint", "--surface", "pants", "a?"]).0, 1);
        assert_eq!(run_args(&["frobnicate"]).0, 1);
        assert_eq!(run_args(&["--help"]).0, 0);
        let (code, out) = run_args(&[
            "theorem2",
            "--surface",
            "pants",
            "aab",
            "-p",
            "-1",
            "-q",
            "2",
        ]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("value: 1"));
    }
}
