//! Family scans: enumerate semigroups from a [`ScanSpec`], verify each one,
//! and collect the reports in a deterministic order.
//!
//! Config files are `key = value` lines; `#` starts a comment.
//!
//! ```text
//! family = genarith        # genarith | list | symmetric
//! a = 4..12                # inclusive ranges, or a single value
//! h = 1..3
//! d = 1..7
//! k = 3..11
//! gens = 5,6; 6,10,15      # family = list
//! frobenius_max = 21       # family = symmetric
//! symmetric_only = true
//! eligible_only = true
//! ```

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::semigroup::{gcd, GenArithParams, NumericalSemigroup};
use crate::verifier::{verify_semigroup_with, SemigroupReport};

/// Largest Frobenius bound accepted by [`Family::SymmetricUpToFrobenius`];
/// the enumeration keeps gap sets in a `u64`.
pub const MAX_ENUMERATED_FROBENIUS: i64 = 63;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    GenArith {
        a: RangeInclusive<i64>,
        h: RangeInclusive<i64>,
        d: RangeInclusive<i64>,
        k: RangeInclusive<i64>,
    },
    ExplicitList(Vec<Vec<i64>>),
    /// Every numerical semigroup with Frobenius number at most the bound.
    SymmetricUpToFrobenius(i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanSpec {
    pub family: Family,
    pub symmetric_only: bool,
    /// Only `3 <= k < a` tuples (generalized arithmetic family only).
    pub eligible_only: bool,
}

impl ScanSpec {
    pub fn new(family: Family) -> Self {
        ScanSpec { family, symmetric_only: true, eligible_only: false }
    }

    pub fn validate(&self) -> Result<()> {
        match &self.family {
            Family::GenArith { a, h, d, k } => {
                for (name, r) in [("a", a), ("h", h), ("d", d), ("k", k)] {
                    if *r.start() < 1 {
                        return Err(Error::Config(format!("range {name} must start at >= 1")));
                    }
                }
                Ok(())
            }
            Family::ExplicitList(_) => Ok(()),
            Family::SymmetricUpToFrobenius(b) => {
                if (-1..=MAX_ENUMERATED_FROBENIUS).contains(b) {
                    Ok(())
                } else {
                    Err(Error::Config(format!(
                        "frobenius_max must lie in [-1, {MAX_ENUMERATED_FROBENIUS}]"
                    )))
                }
            }
        }
    }

    pub fn parse_config(text: &str) -> Result<Self> {
        let mut family = None;
        let (mut a, mut h, mut d, mut k) = (None, None, None, None);
        let mut gens = None;
        let mut fmax = None;
        let mut symmetric_only = true;
        let mut eligible_only = false;

        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", lineno + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "family" => family = Some(value.to_string()),
                "a" => a = Some(parse_range(value)?),
                "h" => h = Some(parse_range(value)?),
                "d" => d = Some(parse_range(value)?),
                "k" => k = Some(parse_range(value)?),
                "gens" => gens = Some(parse_generator_lists(value)?),
                "frobenius_max" => fmax = Some(parse_int(value)?),
                "symmetric_only" => symmetric_only = parse_bool(value)?,
                "eligible_only" => eligible_only = parse_bool(value)?,
                other => return Err(Error::Config(format!("unknown key {other:?}"))),
            }
        }

        let missing = |name: &str| Error::Config(format!("missing key {name:?}"));
        let family = match family.as_deref() {
            Some("genarith") => Family::GenArith {
                a: a.ok_or_else(|| missing("a"))?,
                h: h.ok_or_else(|| missing("h"))?,
                d: d.ok_or_else(|| missing("d"))?,
                k: k.ok_or_else(|| missing("k"))?,
            },
            Some("list") => Family::ExplicitList(gens.ok_or_else(|| missing("gens"))?),
            Some("symmetric") => {
                Family::SymmetricUpToFrobenius(fmax.ok_or_else(|| missing("frobenius_max"))?)
            }
            Some(other) => return Err(Error::Config(format!("unknown family {other:?}"))),
            None => return Err(missing("family")),
        };
        let spec = ScanSpec { family, symmetric_only, eligible_only };
        spec.validate()?;
        Ok(spec)
    }
}

fn parse_int(s: &str) -> Result<i64> {
    s.trim()
        .parse()
        .map_err(|_| Error::Config(format!("not an integer: {s:?}")))
}

fn parse_bool(s: &str) -> Result<bool> {
    match s {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(Error::Config(format!("not a boolean: {s:?}"))),
    }
}

/// `lo..hi`, `lo..=hi` (both inclusive) or a single value.
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>> {
    match s.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            Ok(parse_int(lo)?..=parse_int(hi)?)
        }
        None => {
            let v = parse_int(s)?;
            Ok(v..=v)
        }
    }
}

/// `5,6; 6,10,15`.
pub fn parse_generator_lists(s: &str) -> Result<Vec<Vec<i64>>> {
    s.split(';')
        .map(str::trim)
        .filter(|item| !item.is_empty())
        .map(|item| item.split(',').map(parse_int).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub generators: Vec<i64>,
    pub params: Option<GenArithParams>,
}

/// Input that could not be turned into a semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvalidInput {
    pub input: Vec<i64>,
    pub params: Option<GenArithParams>,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanRecord {
    Report(SemigroupReport),
    Invalid(InvalidInput),
}

impl ScanRecord {
    pub fn to_json_line(&self) -> String {
        match self {
            ScanRecord::Report(r) => r.to_json_line(),
            ScanRecord::Invalid(i) => serde_json::to_string(i).expect("serializes"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub candidates: usize,
    pub filtered: usize,
    pub invalid: usize,
    pub reports: usize,
    pub covered: usize,
    pub failed: usize,
    pub theorem_violations: usize,
    pub gap_columns: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOutput {
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
}

impl ScanOutput {
    pub fn reports(&self) -> impl Iterator<Item = &SemigroupReport> {
        self.records.iter().filter_map(|r| match r {
            ScanRecord::Report(r) => Some(r),
            ScanRecord::Invalid(_) => None,
        })
    }

    /// One line per record followed by `{"summary":{...}}`, each ending in
    /// `\n`.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&r.to_json_line());
            out.push('\n');
        }
        #[derive(Serialize)]
        struct Tail<'a> {
            summary: &'a ScanSummary,
        }
        out.push_str(&serde_json::to_string(&Tail { summary: &self.summary }).expect("serializes"));
        out.push('\n');
        out
    }
}

/// Candidates in lexicographic parameter order.
pub fn candidates(spec: &ScanSpec) -> Result<Vec<Candidate>> {
    spec.validate()?;
    Ok(match &spec.family {
        Family::GenArith { a, h, d, k } => {
            let mut out = Vec::new();
            for a in a.clone() {
                for h in h.clone() {
                    for d in d.clone() {
                        if gcd(a, d) != 1 {
                            continue;
                        }
                        for k in k.clone() {
                            let p = GenArithParams { a, h, d, k };
                            if spec.eligible_only && !p.is_prop_eligible() {
                                continue;
                            }
                            out.push(Candidate { generators: p.generators()?, params: Some(p) });
                        }
                    }
                }
            }
            out
        }
        Family::ExplicitList(lists) => lists
            .iter()
            .map(|g| Candidate { generators: g.clone(), params: None })
            .collect(),
        Family::SymmetricUpToFrobenius(bound) => enumerate_up_to_frobenius(*bound)
            .into_iter()
            .map(|generators| Candidate { generators, params: None })
            .collect(),
    })
}

/// Minimal generating systems of every numerical semigroup with Frobenius
/// number at most `bound`, sorted by (Frobenius number, generators).
///
/// Walks the semigroup tree: the children of `S` are `S \ {x}` for each
/// minimal generator `x > F(S)`, and each child has Frobenius number `x`.
pub fn enumerate_up_to_frobenius(bound: i64) -> Vec<Vec<i64>> {
    assert!(bound <= MAX_ENUMERATED_FROBENIUS);
    let member = |gaps: u64, x: i64| x == 0 || (x > 0 && (x > bound || gaps >> x & 1 == 0));
    let is_minimal = |gaps: u64, x: i64| {
        member(gaps, x) && x > 0 && !(1..=x / 2).any(|y| member(gaps, y) && member(gaps, x - y))
    };

    let mut found: Vec<(i64, Vec<i64>)> = Vec::new();
    let mut stack: Vec<(u64, i64)> = vec![(0, -1)];
    while let Some((gaps, frob)) = stack.pop() {
        let multiplicity = (1..).find(|&x| member(gaps, x)).expect("cofinite");
        let generators: Vec<i64> = (1..=frob + multiplicity + 1)
            .filter(|&x| is_minimal(gaps, x))
            .collect();
        for &x in generators.iter().filter(|&&x| x > frob && x <= bound) {
            stack.push((gaps | 1 << x, x));
        }
        found.push((frob, generators));
    }
    found.sort();
    found.into_iter().map(|(_, g)| g).collect()
}

pub fn scan(spec: &ScanSpec) -> Result<ScanOutput> {
    scan_with(spec, Execution::default())
}

/// Construction and filtering run first; verification then fans out across
/// semigroups (and across gaps inside each one) under `exec`.
pub fn scan_with(spec: &ScanSpec, exec: Execution) -> Result<ScanOutput> {
    let cands = candidates(spec)?;
    let mut summary = ScanSummary { candidates: cands.len(), ..Default::default() };

    enum Prepared {
        Build(NumericalSemigroup, Option<GenArithParams>),
        Invalid(InvalidInput),
    }
    let prepared: Vec<Prepared> = cands
        .into_iter()
        .filter_map(|c| match NumericalSemigroup::new(&c.generators) {
            Ok(sg) if spec.symmetric_only && !sg.is_symmetric() => {
                summary.filtered += 1;
                None
            }
            Ok(sg) => Some(Prepared::Build(sg, c.params)),
            Err(e) => Some(Prepared::Invalid(InvalidInput {
                input: c.generators,
                params: c.params,
                error: e.to_string(),
            })),
        })
        .collect();

    let records = par::map(exec, &prepared, |p| match p {
        Prepared::Build(sg, params) => {
            ScanRecord::Report(verify_semigroup_with(sg, params.as_ref(), exec))
        }
        Prepared::Invalid(i) => ScanRecord::Invalid(i.clone()),
    });

    for r in &records {
        match r {
            ScanRecord::Invalid(_) => summary.invalid += 1,
            ScanRecord::Report(rep) => {
                summary.reports += 1;
                summary.gap_columns += rep.gap_count();
                if rep.status.is_covered() {
                    summary.covered += 1;
                } else {
                    summary.failed += 1;
                }
                summary.theorem_violations +=
                    rep.failures().iter().filter(|f| f.is_mathematical_event()).count();
            }
        }
    }
    Ok(ScanOutput { records, summary })
}
