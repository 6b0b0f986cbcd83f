//! The Leamer monoid of a numerical semigroup for a gap step `s`: pairs
//! `(n, ell)` with `n, ell >= 1` whose arithmetic chain `n, n+s, ..., n+ell*s`
//! lies in the semigroup, under component-wise addition.

use std::ops::Add;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LeamerElement {
    pub n: i64,
    pub ell: i64,
}

impl LeamerElement {
    pub fn new(n: i64, ell: i64) -> Result<Self> {
        if n < 1 || ell < 1 {
            return Err(Error::InvalidElement { n, ell });
        }
        Ok(LeamerElement { n, ell })
    }

    /// `(n, 2)`.
    pub fn pair(n: i64) -> Result<Self> {
        Self::new(n, 2)
    }
}

impl Add for LeamerElement {
    type Output = LeamerElement;

    fn add(self, rhs: LeamerElement) -> LeamerElement {
        LeamerElement {
            n: self.n + rhs.n,
            ell: self.ell + rhs.ell,
        }
    }
}

impl std::fmt::Display for LeamerElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.n, self.ell)
    }
}

/// Every `n` with `(n, 2)` irreducible for one step `s`, up to `search_bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColumnIrreducibles {
    pub s: i64,
    pub points: Vec<i64>,
    pub search_bound: i64,
}

impl ColumnIrreducibles {
    /// Whether the scan reached the ceiling past which nothing is irreducible.
    pub fn is_complete(&self, sg: &NumericalSemigroup) -> bool {
        self.search_bound >= reducibility_ceiling(sg)
    }
}

/// `2F + 1`. Any `(n, 2)` with `n > 2F + 1` splits as
/// `(F + 1, 1) + (n - F - 1, 1)`, both of whose chains sit above `F`.
pub fn reducibility_ceiling(sg: &NumericalSemigroup) -> i64 {
    2 * sg.frobenius() + 1
}

pub(crate) fn check_step(sg: &NumericalSemigroup, s: i64) -> Result<()> {
    if s < 1 {
        return Err(Error::InvalidStep { s });
    }
    if sg.contains(s) {
        return Err(Error::StepInSemigroup { s });
    }
    Ok(())
}

/// Chain test without validating `s`. `n < 1` or `ell < 1` is never valid.
pub(crate) fn chain_valid(sg: &NumericalSemigroup, s: i64, n: i64, ell: i64) -> bool {
    if n < 1 || ell < 1 {
        return false;
    }
    (0..=ell).all(|i| {
        i.checked_mul(s)
            .and_then(|step| n.checked_add(step))
            .is_some_and(|x| sg.contains(x))
    })
}

pub fn in_leamer(sg: &NumericalSemigroup, s: i64, e: LeamerElement) -> Result<bool> {
    check_step(sg, s)?;
    Ok(chain_valid(sg, s, e.n, e.ell))
}

/// `e` admits no split `e = e1 + e2` into two valid elements.
pub fn is_irreducible(sg: &NumericalSemigroup, s: i64, e: LeamerElement) -> Result<bool> {
    if !in_leamer(sg, s, e)? {
        return Err(Error::NotInLeamer { s, n: e.n, ell: e.ell });
    }
    Ok(irreducible_unchecked(sg, s, e))
}

pub(crate) fn irreducible_unchecked(sg: &NumericalSemigroup, s: i64, e: LeamerElement) -> bool {
    if e.ell == 2 {
        // (y, 1) + (n - y, 1); the split is symmetric in y <-> n - y.
        return !(1..=e.n / 2).any(|y| {
            chain_valid(sg, s, y, 1) && chain_valid(sg, s, e.n - y, 1)
        });
    }
    !(1..e.ell).any(|ell1| {
        (1..e.n).any(|n1| chain_valid(sg, s, n1, ell1) && chain_valid(sg, s, e.n - n1, e.ell - ell1))
    })
}

/// Exhaustive list of irreducible `(n, 2)` with `1 <= n <= n_max` (default
/// [`reducibility_ceiling`]).
///
/// The reducible pairs are exactly the sumset `A + A` where `A` holds the
/// valid `(y, 1)`, so the column is computed with one shifted-OR per element
/// of `A` over a bitset.
pub fn column_irreducibles(
    sg: &NumericalSemigroup,
    s: i64,
    n_max: Option<i64>,
) -> Result<ColumnIrreducibles> {
    check_step(sg, s)?;
    let bound = n_max.unwrap_or_else(|| reducibility_ceiling(sg));
    if bound < 1 {
        return Ok(ColumnIrreducibles { s, points: Vec::new(), search_bound: bound });
    }
    let len = bound as usize + 1;
    let mut atoms = Bits::new(len);
    for y in 1..=bound {
        if chain_valid(sg, s, y, 1) {
            atoms.set(y as usize);
        }
    }
    let mut reducible = Bits::new(len);
    for y in atoms.ones() {
        if y > len / 2 {
            break;
        }
        reducible.or_shifted(&atoms, y);
    }
    let points = (1..=bound)
        .filter(|&n| !reducible.get(n as usize) && chain_valid(sg, s, n, 2))
        .collect();
    Ok(ColumnIrreducibles { s, points, search_bound: bound })
}

/// Columns for every gap, in ascending order of `s`.
pub fn all_columns(
    sg: &NumericalSemigroup,
    n_max: Option<i64>,
    exec: Execution,
) -> Vec<ColumnIrreducibles> {
    par::map(exec, sg.gaps(), |&s| {
        column_irreducibles(sg, s, n_max).expect("gaps are valid steps")
    })
}

/// `e1 + e2` stays in the monoid. Always true; exposed so the closure law
/// can be exercised directly.
pub fn closure_check(
    sg: &NumericalSemigroup,
    s: i64,
    e1: LeamerElement,
    e2: LeamerElement,
) -> Result<bool> {
    for e in [e1, e2] {
        if !in_leamer(sg, s, e)? {
            return Err(Error::NotInLeamer { s, n: e.n, ell: e.ell });
        }
    }
    let sum = LeamerElement {
        n: e1.n.checked_add(e2.n).ok_or(Error::Overflow("element sum"))?,
        ell: e1.ell.checked_add(e2.ell).ok_or(Error::Overflow("element sum"))?,
    };
    in_leamer(sg, s, sum)
}

struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    fn new(len: usize) -> Self {
        Bits { words: vec![0; len.div_ceil(64)], len }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    /// `self |= src << shift`, truncated to `self.len`.
    fn or_shifted(&mut self, src: &Bits, shift: usize) {
        let (ws, bs) = (shift / 64, shift % 64);
        for (i, &w) in src.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let j = i + ws;
            if j >= self.words.len() {
                break;
            }
            self.words[j] |= w << bs;
            if bs != 0 && j + 1 < self.words.len() {
                self.words[j + 1] |= w >> (64 - bs);
            }
        }
    }
}
