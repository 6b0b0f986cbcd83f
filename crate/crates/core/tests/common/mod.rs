//! Test-only brute force. Membership comes from a plain coin-change table
//! over the raw generators; irreducibility enumerates every split of
//! `(n, 2)`. Nothing here calls into the crate's Apéry, bitset or witness
//! code.

#![allow(dead_code)]

use numsg_core::{GenArithParams, NumericalSemigroup};

pub struct Brute {
    table: Vec<bool>,
}

impl Brute {
    /// Table large enough for every quantity the tests touch: all chains
    /// `n + 2s` with `n <= 2F + 50` and `s <= F` stay inside it.
    pub fn new(generators: &[i64]) -> Self {
        let lo = *generators.iter().min().unwrap();
        let hi = *generators.iter().max().unwrap();
        let bound = (5 * lo * hi + 200) as usize;
        let mut table = vec![false; bound + 1];
        table[0] = true;
        for x in 1..=bound {
            for &g in generators {
                let g = g as usize;
                if g <= x && table[x - g] {
                    table[x] = true;
                    break;
                }
            }
        }
        Brute { table }
    }

    pub fn contains(&self, n: i64) -> bool {
        assert!((n as usize) < self.table.len() || n < 0, "query {n} outside the table");
        n >= 0 && self.table[n as usize]
    }

    pub fn frobenius(&self) -> i64 {
        self.table.iter().rposition(|&b| !b).map_or(-1, |x| x as i64)
    }

    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.frobenius()).filter(|&x| !self.contains(x)).collect()
    }

    pub fn symmetric(&self) -> bool {
        let f = self.frobenius();
        (0..=f).all(|n| self.contains(n) != self.contains(f - n))
    }

    pub fn valid(&self, s: i64, n: i64, ell: i64) -> bool {
        n >= 1 && ell >= 1 && (0..=ell).all(|i| self.contains(n + i * s))
    }

    /// Every ordered split `(y, 1) + (n - y, 1)`.
    pub fn irreducible_pair(&self, s: i64, n: i64) -> bool {
        assert!(self.valid(s, n, 2));
        !(1..n).any(|y| self.valid(s, y, 1) && self.valid(s, n - y, 1))
    }

    pub fn column(&self, s: i64, n_max: i64) -> Vec<i64> {
        (1..=n_max)
            .filter(|&n| self.valid(s, n, 2) && self.irreducible_pair(s, n))
            .collect()
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

/// Symmetric semigroups used across the suites, deduplicated by minimal
/// generating system. Each entry carries generalized arithmetic parameters
/// when it was produced from them.
pub fn symmetric_corpus() -> Vec<(NumericalSemigroup, Option<GenArithParams>)> {
    let mut out: Vec<(NumericalSemigroup, Option<GenArithParams>)> = Vec::new();
    let mut push = |sg: NumericalSemigroup, p: Option<GenArithParams>| {
        if sg.is_symmetric() && !out.iter().any(|(o, _)| o.generators() == sg.generators()) {
            out.push((sg, p));
        }
    };
    for a in 2..=13 {
        for b in a + 1..=13 {
            if gcd(a, b) == 1 {
                push(NumericalSemigroup::new(&[a, b]).unwrap(), None);
            }
        }
    }
    for a in 3..=16 {
        for b in a + 1..=16 {
            for c in b + 1..=20 {
                if gcd(gcd(a, b), c) == 1 {
                    let sg = NumericalSemigroup::new(&[a, b, c]).unwrap();
                    if sg.embedding_dimension() == 3 {
                        push(sg, None);
                    }
                }
            }
        }
    }
    for a in 4..=8 {
        for h in 1..=2 {
            for d in 1..=3 {
                if gcd(a, d) != 1 {
                    continue;
                }
                for k in 3..a {
                    let p = GenArithParams::new(a, h, d, k).unwrap();
                    let sg = numsg_core::from_gen_arith(p).unwrap().semigroup;
                    push(sg, Some(p));
                }
            }
        }
    }
    for g in [
        vec![1],
        vec![4, 5, 6],
        vec![5, 6, 7, 8],
        vec![6, 7, 8, 9, 10],
        vec![4, 6, 9],
        vec![8, 10, 12, 13],
    ] {
        if let Ok(sg) = NumericalSemigroup::new(&g) {
            push(sg, None);
        }
    }
    out
}
