//! Numerical semigroups: construction, Apéry sets, membership and symmetry.
//!
//! Membership is answered from the Apéry table with respect to the
//! multiplicity `m`: `n` is in the semigroup iff `n >= apery[n mod m]`. The
//! table is the vector of shortest-path distances from residue 0 in the
//! residue graph mod `m`, where each generator `g` contributes the edges
//! `r -> (r + g) mod m` of weight `g`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle;

pub fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// gcd of a list; 0 for the empty list.
pub fn gcd_all(values: &[i64]) -> i64 {
    values.iter().fold(0, |acc, &v| gcd(acc, v))
}

/// Dijkstra on the residue graph mod `modulus`. Entry `r` is the least
/// combination of `generators` congruent to `r`, or `None` if no combination
/// reaches that class.
fn residue_distances(modulus: i64, generators: &[i64]) -> Result<Vec<Option<i64>>> {
    let m = modulus as usize;
    let mut dist: Vec<Option<i64>> = vec![None; m];
    dist[0] = Some(0);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if dist[r].is_some_and(|best| d > best) {
            continue;
        }
        for &g in generators {
            let next = (r + (g % modulus) as usize) % m;
            let cand = d.checked_add(g).ok_or(Error::Overflow("Apery set"))?;
            if dist[next].is_none_or(|best| cand < best) {
                dist[next] = Some(cand);
                heap.push(Reverse((cand, next)));
            }
        }
    }
    Ok(dist)
}

fn sorted_unique(generators: &[i64]) -> Vec<i64> {
    let mut gens = generators.to_vec();
    gens.sort_unstable();
    gens.dedup();
    gens
}

/// The minimal generating system: every element representable by the
/// remaining ones is dropped. Input may be unsorted and contain duplicates.
///
/// An element can only be written in terms of strictly smaller generators,
/// so a single ascending pass that tests each candidate against the
/// generators kept so far is enough.
pub fn minimalize(generators: &[i64]) -> Result<Vec<i64>> {
    let gens = sorted_unique(generators);
    let Some((&smallest, rest)) = gens.split_first() else {
        return Ok(Vec::new());
    };
    let mut kept = vec![smallest];
    let mut dist = residue_distances(smallest, &kept)?;
    for &g in rest {
        let representable = dist[(g % smallest) as usize].is_some_and(|least| least <= g);
        if !representable {
            kept.push(g);
            dist = residue_distances(smallest, &kept)?;
        }
    }
    Ok(kept)
}

/// A numerical semigroup with every invariant computed at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    raw_generators: Vec<i64>,
    apery: Vec<i64>,
    frobenius: i64,
    gaps: Vec<i64>,
    symmetric: bool,
    oracle_table: Option<Vec<bool>>,
}

impl NumericalSemigroup {
    pub fn new(generators: &[i64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = generators.iter().find(|&&g| g < 1) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let g = gcd_all(generators);
        if g != 1 {
            return Err(Error::NonCofinite { gcd: g });
        }

        let minimal = minimalize(generators)?;
        let m = minimal[0];
        let apery = residue_distances(m, &minimal)?
            .into_iter()
            .map(|d| d.expect("gcd 1 reaches every residue"))
            .collect::<Vec<_>>();
        let frobenius = apery.iter().max().copied().unwrap_or(0) - m;

        let mut gaps = Vec::new();
        for (r, &w) in apery.iter().enumerate() {
            let mut x = r as i64;
            while x < w {
                gaps.push(x);
                x += m;
            }
        }
        gaps.sort_unstable();

        let mut sg = NumericalSemigroup {
            generators: minimal,
            raw_generators: generators.to_vec(),
            apery,
            frobenius,
            gaps,
            symmetric: false,
            oracle_table: None,
        };
        sg.symmetric = sg.gaps.iter().all(|&g| sg.contains(sg.frobenius - g));
        Ok(sg)
    }

    /// Route every membership query through the sieve oracle built from the
    /// raw generators. The sieve is cross-checked against the Apéry-derived
    /// Frobenius number first; disagreement is an error.
    pub fn with_oracle_membership(mut self) -> Result<Self> {
        let bound = self
            .frobenius
            .checked_add(self.multiplicity())
            .ok_or(Error::Overflow("oracle bound"))?;
        let table = oracle::sieve_oracle(&self.raw_generators, bound);
        let sieve_frobenius = oracle::largest_absent(&table).map_or(-1, |x| x as i64);
        if sieve_frobenius != self.frobenius {
            return Err(Error::OracleMismatch(format!(
                "sieve Frobenius {sieve_frobenius}, Apery Frobenius {}",
                self.frobenius
            )));
        }
        if let Some(n) = (0..table.len()).find(|&n| table[n] != self.apery_contains(n as i64)) {
            return Err(Error::OracleMismatch(format!("membership of {n}")));
        }
        self.oracle_table = Some(table);
        Ok(self)
    }

    pub fn uses_oracle(&self) -> bool {
        self.oracle_table.is_some()
    }

    fn apery_contains(&self, n: i64) -> bool {
        n >= 0 && n >= self.apery[(n % self.multiplicity()) as usize]
    }

    #[inline]
    pub fn contains(&self, n: i64) -> bool {
        match &self.oracle_table {
            None => self.apery_contains(n),
            Some(table) => n >= 0 && table.get(n as usize).copied().unwrap_or(true),
        }
    }

    /// Positive integer outside the semigroup.
    pub fn is_gap(&self, n: i64) -> bool {
        n > 0 && !self.contains(n)
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn raw_generators(&self) -> &[i64] {
        &self.raw_generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn apery_set(&self) -> &[i64] {
        &self.apery
    }

    /// -1 when the semigroup is all of the nonnegative integers.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }
}

/// Parameters `(a, h, d, k)` of the generalized arithmetic sequence
/// `a, ah+d, ah+2d, ..., ah+kd`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GenArithParams {
    pub a: i64,
    pub h: i64,
    pub d: i64,
    pub k: i64,
}

impl GenArithParams {
    pub fn new(a: i64, h: i64, d: i64, k: i64) -> Result<Self> {
        let p = GenArithParams { a, h, d, k };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let GenArithParams { a, h, d, k } = *self;
        if a < 1 || h < 1 || d < 1 || k < 1 {
            return Err(Error::InvalidParams(format!(
                "a={a}, h={h}, d={d}, k={k}: every parameter must be >= 1"
            )));
        }
        if gcd(a, d) != 1 {
            return Err(Error::InvalidParams(format!("gcd(a={a}, d={d}) != 1")));
        }
        self.generators().map(|_| ())
    }

    /// `ah + d`, the height of the horizontal witness line.
    pub fn base(&self) -> Result<i64> {
        self.term(1)
    }

    /// `ah + kd`, the modulus in the gap criterion.
    pub fn modulus(&self) -> Result<i64> {
        self.term(self.k)
    }

    fn term(&self, j: i64) -> Result<i64> {
        self.a
            .checked_mul(self.h)
            .and_then(|ah| j.checked_mul(self.d).and_then(|jd| ah.checked_add(jd)))
            .ok_or(Error::Overflow("generalized arithmetic generator"))
    }

    /// The induced list `a, ah+d, ..., ah+kd` (not minimalized).
    pub fn generators(&self) -> Result<Vec<i64>> {
        std::iter::once(Ok(self.a))
            .chain((1..=self.k).map(|j| self.term(j)))
            .collect()
    }

    /// `3 <= k < a`.
    pub fn is_prop_eligible(&self) -> bool {
        3 <= self.k && self.k < self.a
    }
}

impl std::fmt::Display for GenArithParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.h, self.d, self.k)
    }
}

/// A semigroup built from generalized arithmetic parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenArithSemigroup {
    pub semigroup: NumericalSemigroup,
    pub params: GenArithParams,
    /// The induced generator list is already the minimal system.
    pub induced_minimal: bool,
}

impl GenArithSemigroup {
    pub fn prop_eligible(&self) -> bool {
        self.params.is_prop_eligible()
    }
}

pub fn from_gen_arith(params: GenArithParams) -> Result<GenArithSemigroup> {
    params.validate()?;
    let induced = params.generators()?;
    let semigroup = NumericalSemigroup::new(&induced)?;
    let induced_minimal = semigroup.generators() == induced.as_slice();
    Ok(GenArithSemigroup {
        semigroup,
        params,
        induced_minimal,
    })
}
