//! Per-semigroup verification: every gap column is enumerated exhaustively,
//! the dispatched witness is checked to lie in its column, and membership is
//! cross-checked against the sieve oracle.
//!
//! # Report line format
//!
//! [`SemigroupReport::to_json_line`] writes one JSON object per semigroup
//! with keys in this fixed order:
//!
//! 1. `generators` (minimal system, ascending)
//! 2. `params` (`{"a","h","d","k"}` or `null`)
//! 3. `frobenius`
//! 4. `symmetric`
//! 5. `gap_count`
//! 6. `gaps`: one `{"s","rule","element","verified","column_size"}` per gap,
//!    ascending in `s`; `rule` and `element` are `null` when no witness was
//!    produced
//! 7. `status`: `"AllColumnsCovered"` or `{"Failure":[...]}`

use serde::Serialize;

pub use crate::oracle::sieve_oracle;

use crate::error::Error;
use crate::leamer::{column_irreducibles, ColumnIrreducibles, LeamerElement};
use crate::par::{self, Execution};
use crate::semigroup::{GenArithParams, NumericalSemigroup};
use crate::witness::{hw_witness, Rule, WitnessReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FailureKind {
    TheoremViolation,
    NoIrreducibleFound,
    EmptyColumn,
    WitnessNotInColumn,
    OracleMismatch,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub s: Option<i64>,
    pub kind: FailureKind,
    pub message: String,
}

impl Failure {
    fn from_error(s: i64, e: &Error) -> Self {
        let kind = match e {
            Error::TheoremViolation(_) => FailureKind::TheoremViolation,
            Error::NoIrreducibleFound { .. } => FailureKind::NoIrreducibleFound,
            Error::OracleMismatch(_) => FailureKind::OracleMismatch,
            _ => FailureKind::Error,
        };
        Failure { s: Some(s), kind, message: e.to_string() }
    }

    pub fn is_mathematical_event(&self) -> bool {
        matches!(
            self.kind,
            FailureKind::TheoremViolation | FailureKind::NoIrreducibleFound
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Status {
    AllColumnsCovered,
    Failure(Vec<Failure>),
}

impl Status {
    pub fn is_covered(&self) -> bool {
        matches!(self, Status::AllColumnsCovered)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupReport {
    pub generators: Vec<i64>,
    pub params: Option<GenArithParams>,
    pub frobenius: i64,
    pub symmetric: bool,
    /// Empty when the semigroup is not symmetric.
    pub witnesses: Vec<WitnessReport>,
    pub columns: Vec<ColumnIrreducibles>,
    pub status: Status,
}

#[derive(Serialize)]
struct GapLine {
    s: i64,
    rule: Option<Rule>,
    element: Option<LeamerElement>,
    verified: bool,
    column_size: usize,
}

#[derive(Serialize)]
struct ReportLine<'a> {
    generators: &'a [i64],
    params: Option<GenArithParams>,
    frobenius: i64,
    symmetric: bool,
    gap_count: usize,
    gaps: Vec<GapLine>,
    status: &'a Status,
}

impl SemigroupReport {
    pub fn gap_count(&self) -> usize {
        self.columns.len()
    }

    pub fn witness_for(&self, s: i64) -> Option<&WitnessReport> {
        self.witnesses.iter().find(|w| w.s == s)
    }

    pub fn failures(&self) -> &[Failure] {
        match &self.status {
            Status::AllColumnsCovered => &[],
            Status::Failure(f) => f,
        }
    }

    fn line(&self) -> ReportLine<'_> {
        let gaps = self
            .columns
            .iter()
            .map(|c| {
                let w = self.witness_for(c.s);
                GapLine {
                    s: c.s,
                    rule: w.map(|w| w.rule),
                    element: w.map(|w| w.element),
                    verified: w.is_some_and(|w| w.verified),
                    column_size: c.points.len(),
                }
            })
            .collect();
        ReportLine {
            generators: &self.generators,
            params: self.params,
            frobenius: self.frobenius,
            symmetric: self.symmetric,
            gap_count: self.gap_count(),
            gaps,
            status: &self.status,
        }
    }

    /// One line, no trailing newline. See the module docs for the layout.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&self.line()).expect("report serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.line()).expect("report serializes")
    }
}

/// Membership range checked against the sieve: `[0, 3(F + 2)]`.
pub fn oracle_check_bound(sg: &NumericalSemigroup) -> i64 {
    3 * (sg.frobenius() + 2)
}

/// First `n` in `[0, bound]` where Apéry membership and the sieve disagree.
pub fn oracle_disagreement(sg: &NumericalSemigroup, bound: i64) -> Option<i64> {
    let table = sieve_oracle(sg.raw_generators(), bound);
    (0..=bound).find(|&n| sg.contains(n) != table[n as usize])
}

pub fn verify_semigroup(
    sg: &NumericalSemigroup,
    params: Option<&GenArithParams>,
) -> SemigroupReport {
    verify_semigroup_with(sg, params, Execution::default())
}

pub fn verify_semigroup_with(
    sg: &NumericalSemigroup,
    params: Option<&GenArithParams>,
    exec: Execution,
) -> SemigroupReport {
    let mut failures = Vec::new();
    if let Some(n) = oracle_disagreement(sg, oracle_check_bound(sg)) {
        failures.push(Failure {
            s: None,
            kind: FailureKind::OracleMismatch,
            message: format!("membership of {n} differs from the sieve"),
        });
    }

    let symmetric = sg.is_symmetric();
    let per_gap = par::map(exec, sg.gaps(), |&s| {
        let mut local = Vec::new();
        let column = column_irreducibles(sg, s, None).expect("gaps are valid steps");
        if column.points.is_empty() {
            local.push(Failure {
                s: Some(s),
                kind: FailureKind::EmptyColumn,
                message: format!("no irreducible (n,2) for s={s} up to {}", column.search_bound),
            });
        }
        let witness = if symmetric {
            match hw_witness(sg, s, params) {
                Ok(w) => {
                    if column.points.binary_search(&w.element.n).is_err() {
                        local.push(Failure {
                            s: Some(s),
                            kind: FailureKind::WitnessNotInColumn,
                            message: format!("{} witness {} missing from column", w.rule, w.element),
                        });
                    }
                    Some(w)
                }
                Err(e) => {
                    local.push(Failure::from_error(s, &e));
                    None
                }
            }
        } else {
            None
        };
        (column, witness, local)
    });

    let mut columns = Vec::with_capacity(per_gap.len());
    let mut witnesses = Vec::new();
    for (column, witness, local) in per_gap {
        columns.push(column);
        witnesses.extend(witness);
        failures.extend(local);
    }

    SemigroupReport {
        generators: sg.generators().to_vec(),
        params: params.copied(),
        frobenius: sg.frobenius(),
        symmetric,
        witnesses,
        columns,
        status: if failures.is_empty() {
            Status::AllColumnsCovered
        } else {
            Status::Failure(failures)
        },
    }
}
