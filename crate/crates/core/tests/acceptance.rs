//! Acceptance suite. Every check is exact integer arithmetic; the only
//! thresholds are the wall-clock limits. Prints one PASS/FAIL line per
//! criterion and exits non-zero if any criterion fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{symmetric_corpus, Brute};
use numsg_core::leamer::{self, LeamerElement};
use numsg_core::plot::{self, Overlay, Point};
use numsg_core::scan::{scan_with, Family, ScanSpec};
use numsg_core::verifier::verify_semigroup_with;
use numsg_core::witness::{self, Rule};
use numsg_core::{from_gen_arith, Execution, GenArithParams, NumericalSemigroup};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const CLOUD_LIMIT: Duration = Duration::from_secs(1);
const SCAN_LIMIT: Duration = Duration::from_secs(60);

/// Number of symmetric semigroups in the acceptance family, counted by an
/// external sieve script over all 609 admissible (a, h, d, k) tuples.
const FAMILY_SYMMETRIC: usize = 162;

fn cloud_pipeline(sg: &NumericalSemigroup, params: Option<&GenArithParams>) -> Outcome {
    let report = verify_semigroup_with(sg, params, Execution::Parallel);
    ensure!(report.status.is_covered(), "status {:?}", report.status);
    let ps = plot::build_pointset(sg, params, None);
    let svg = plot::emit_svg(&ps, &plot::SvgStyle::default());
    ensure!(svg.matches("<circle").count() == ps.points.len(), "svg/point count mismatch");
    ensure!(plot::parse_csv(&plot::emit_csv(&ps)).as_deref() == Some(&ps.points[..]), "csv mismatch");
    Ok(String::new())
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let detail = f()?;
    let elapsed = start.elapsed();
    ensure!(elapsed < limit, "took {elapsed:?}, limit {limit:?}");
    Ok(format!("{detail} [{:.1} ms]", elapsed.as_secs_f64() * 1e3))
}

fn ac1_two_generators() -> Outcome {
    timed(CLOUD_LIMIT, || {
        let sg = NumericalSemigroup::new(&[5, 6]).unwrap();
        let b = Brute::new(&[5, 6]);
        ensure!(sg.frobenius() == 19, "frobenius {}", sg.frobenius());
        ensure!(b.frobenius() == 19, "sieve frobenius {}", b.frobenius());
        ensure!(sg.gaps().len() == 10, "{} gaps", sg.gaps().len());
        let ps = plot::build_pointset(&sg, None, None);
        for &s in sg.gaps() {
            ensure!(ps.points.contains(&Point { s, n: 24 - s }), "column {s} misses (s, 24 - s)");
            ensure!(b.irreducible_pair(s, 24 - s), "({},2) reducible for s={s}", 24 - s);
        }
        cloud_pipeline(&sg, None)?;
        Ok("F=19, 10 gaps, diagonal n = 24 - s hits every column".into())
    })
}

fn ac2_three_generators() -> Outcome {
    timed(CLOUD_LIMIT, || {
        let gens = [6, 10, 15];
        let sg = NumericalSemigroup::new(&gens).unwrap();
        let b = Brute::new(&gens);
        ensure!(sg.frobenius() == 29 && b.frobenius() == 29, "frobenius {}", sg.frobenius());
        ensure!(sg.apery_set() == [0, 25, 20, 15, 10, 35], "apery {:?}", sg.apery_set());
        ensure!(sg.is_symmetric() && b.symmetric(), "not symmetric");
        for &s in sg.gaps() {
            let working: Vec<i64> = gens
                .iter()
                .copied()
                .filter(|&nj| b.valid(s, 29 - s + nj, 2) && b.irreducible_pair(s, 29 - s + nj))
                .collect();
            ensure!(!working.is_empty(), "no generator works for s={s}");
            let r = witness::three_gen_witness(&sg, s).map_err(|e| e.to_string())?;
            ensure!(r.rule == Rule::ThreeGen(working[0]), "s={s}: {:?} vs {working:?}", r.rule);
        }
        cloud_pipeline(&sg, None)?;
        Ok(format!("F=29, symmetric, all {} columns have a generator witness", sg.gaps().len()))
    })
}

fn genarith_dichotomy(
    params: GenArithParams,
    frobenius: i64,
    case_b_expected: &[i64],
) -> Outcome {
    let g = from_gen_arith(params).unwrap();
    let sg = &g.semigroup;
    let b = Brute::new(sg.raw_generators());
    ensure!(sg.frobenius() == frobenius && b.frobenius() == frobenius, "frobenius {}", sg.frobenius());
    ensure!(sg.is_symmetric() && b.symmetric(), "not symmetric");
    ensure!(sg.gaps().len() == 12, "{} gaps", sg.gaps().len());
    let GenArithParams { a, h, d, k } = params;
    let modulus = a * h + k * d;

    let by_congruence: Vec<i64> = sg
        .gaps()
        .iter()
        .copied()
        .filter(|&s| (0..h).any(|m| (s - d).rem_euclid(modulus) == a * m))
        .collect();
    let by_membership: Vec<i64> = sg
        .gaps()
        .iter()
        .copied()
        .filter(|&s| !b.contains(frobenius - s + d))
        .collect();
    ensure!(by_congruence == case_b_expected, "congruence side {by_congruence:?}");
    ensure!(by_membership == case_b_expected, "membership side {by_membership:?}");

    for &s in sg.gaps() {
        let criterion = witness::genarith_gap_criterion(&params, sg, s).map_err(|e| e.to_string())?;
        ensure!(criterion == case_b_expected.contains(&s), "criterion disagrees at s={s}");
        let r = witness::hw_witness(sg, s, Some(&params)).map_err(|e| e.to_string())?;
        let (rule, n) = if criterion {
            (Rule::GenArithCaseB, a * h + d)
        } else {
            (Rule::GenArithCaseA, frobenius - s + d)
        };
        ensure!(r.rule == rule && r.element == LeamerElement { n, ell: 2 }, "s={s}: got {r:?}");
        ensure!(b.valid(s, n, 2) && b.irreducible_pair(s, n), "({n},2) not irreducible for s={s}");
    }
    cloud_pipeline(sg, Some(&params))?;
    Ok(format!("case (b) gaps {case_b_expected:?}, remaining gaps case (a)"))
}

fn ac3_genarith_four_generators() -> Outcome {
    timed(CLOUD_LIMIT, || {
        let p = GenArithParams::new(5, 2, 2, 3).unwrap();
        let g = from_gen_arith(p).unwrap();
        ensure!(g.semigroup.generators() == [5, 12, 14, 16], "generators {:?}", g.semigroup.generators());
        let detail = genarith_dichotomy(p, 23, &[2, 7, 18, 23])?;
        Ok(format!("F=23, 12 gaps, {detail}"))
    })
}

fn ac4_genarith_five_generators() -> Outcome {
    timed(CLOUD_LIMIT, || {
        let p = GenArithParams::new(6, 2, 1, 4).unwrap();
        let g = from_gen_arith(p).unwrap();
        ensure!(g.semigroup.generators() == [6, 13, 14, 15, 16], "generators {:?}", g.semigroup.generators());
        ensure!(g.semigroup.apery_set() == [0, 13, 14, 15, 16, 29], "apery {:?}", g.semigroup.apery_set());
        let detail = genarith_dichotomy(p, 23, &[1, 7, 17, 23])?;
        let ps = plot::build_pointset(&g.semigroup, Some(&p), None);
        let horizontal: Vec<i64> = ps
            .overlays
            .iter()
            .filter_map(|o| match o {
                Overlay::Horizontal { level, .. } => Some(*level),
                _ => None,
            })
            .collect();
        ensure!(horizontal == [13], "horizontal overlays {horizontal:?}");
        Ok(format!("F=23, {detail}, horizontal overlay n=13"))
    })
}

fn acceptance_family() -> ScanSpec {
    ScanSpec {
        family: Family::GenArith { a: 4..=12, h: 1..=3, d: 1..=7, k: 3..=11 },
        symmetric_only: true,
        eligible_only: true,
    }
}

fn ac5_family_scan() -> Outcome {
    timed(SCAN_LIMIT, || {
        let out = scan_with(&acceptance_family(), Execution::Sequential).map_err(|e| e.to_string())?;
        let s = &out.summary;
        ensure!(s.invalid == 0, "{} invalid inputs", s.invalid);
        ensure!(s.reports == FAMILY_SYMMETRIC, "{} symmetric semigroups, expected {FAMILY_SYMMETRIC}", s.reports);
        ensure!(s.covered == s.reports && s.failed == 0, "{} failed", s.failed);
        ensure!(s.theorem_violations == 0, "{} theorem violations", s.theorem_violations);
        for r in out.reports() {
            ensure!(
                r.witnesses.iter().all(|w| matches!(w.rule, Rule::GenArithCaseA | Rule::GenArithCaseB)),
                "{:?} used a non-family rule",
                r.generators
            );
        }
        Ok(format!(
            "{} candidates, {} symmetric, {} gap columns, all covered, 0 violations (single worker)",
            s.candidates, s.reports, s.gap_columns
        ))
    })
}

fn every_constructed() -> Vec<NumericalSemigroup> {
    let mut all: Vec<NumericalSemigroup> = symmetric_corpus().into_iter().map(|(s, _)| s).collect();
    let mut family = acceptance_family();
    family.symmetric_only = false;
    for c in numsg_core::scan::candidates(&family).unwrap() {
        all.push(NumericalSemigroup::new(&c.generators).unwrap());
    }
    for g in [vec![3, 5, 7], vec![5, 7, 9], vec![4, 10, 11, 12, 13], vec![7, 9, 11, 20]] {
        all.push(NumericalSemigroup::new(&g).unwrap());
    }
    all
}

fn ac6_property_suites() -> Outcome {
    let corpus: Vec<NumericalSemigroup> = every_constructed();
    let with_gaps: Vec<&NumericalSemigroup> = corpus.iter().filter(|s| s.frobenius() > 0).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);

    // closure, 1000 randomized instances
    let mut instances = 0;
    while instances < 1000 {
        let sg = with_gaps[rng.random_range(0..with_gaps.len())];
        let s = sg.gaps()[rng.random_range(0..sg.gaps().len())];
        let f = sg.frobenius();
        let sample = |rng: &mut ChaCha8Rng| loop {
            let e = LeamerElement::new(rng.random_range(1..=3 * f + 10), rng.random_range(1..=3)).unwrap();
            if leamer::in_leamer(sg, s, e).unwrap() {
                return e;
            }
        };
        let (e1, e2) = (sample(&mut rng), sample(&mut rng));
        let closed = leamer::closure_check(sg, s, e1, e2).map_err(|e| e.to_string())?;
        let b = Brute::new(sg.raw_generators());
        ensure!(closed && b.valid(s, e1.n + e2.n, e1.ell + e2.ell), "{e1} + {e2} left the monoid");
        instances += 1;
    }

    // nothing past the ceiling is irreducible, 20 sampled semigroups
    let mut sampled = 0;
    let mut pairs_checked = 0;
    let mut picks: Vec<&NumericalSemigroup> = with_gaps.iter().copied().filter(|s| s.frobenius() <= 120).collect();
    while sampled < 20 {
        let sg = picks.swap_remove(rng.random_range(0..picks.len()));
        let b = Brute::new(sg.raw_generators());
        let f = sg.frobenius();
        for &s in sg.gaps() {
            for n in 2 * f + 2..=2 * f + 50 {
                let e = LeamerElement::pair(n).unwrap();
                ensure!(b.valid(s, n, 2), "({n},2) not in the monoid for s={s}");
                ensure!(!b.irreducible_pair(s, n), "brute force: ({n},2) irreducible for s={s}");
                ensure!(!leamer::is_irreducible(sg, s, e).unwrap(), "({n},2) irreducible for s={s}");
                pairs_checked += 1;
            }
        }
        sampled += 1;
    }

    // Apery membership against the sieve on [0, 3F]
    let mut membership_checks = 0;
    for sg in &corpus {
        let b = Brute::new(sg.raw_generators());
        for n in 0..=3 * sg.frobenius().max(0) {
            ensure!(sg.contains(n) == b.contains(n), "{:?}: membership of {n}", sg.generators());
            membership_checks += 1;
        }
    }

    // symmetry pairing
    let mut symmetric = 0;
    for sg in corpus.iter().filter(|s| s.is_symmetric()) {
        let f = sg.frobenius();
        ensure!(
            (0..=f).all(|n| sg.contains(n) ^ sg.contains(f - n)),
            "{:?} fails pairing",
            sg.generators()
        );
        symmetric += 1;
    }

    Ok(format!(
        "closure 1000/1000, ceiling {pairs_checked} pairs on 20 semigroups, {membership_checks} membership checks over {} semigroups, pairing on {symmetric} symmetric",
        corpus.len()
    ))
}

fn ac7_generator_audit() -> Outcome {
    let mut corpus: Vec<NumericalSemigroup> = symmetric_corpus().into_iter().map(|(s, _)| s).collect();
    for c in numsg_core::scan::candidates(&acceptance_family()).unwrap() {
        let sg = NumericalSemigroup::new(&c.generators).unwrap();
        if sg.is_symmetric() && !corpus.iter().any(|o| o.generators() == sg.generators()) {
            corpus.push(sg);
        }
    }
    let (mut elements, mut reducible, mut violations) = (0, 0, 0);
    for sg in &corpus {
        let b = Brute::new(sg.raw_generators());
        let f = sg.frobenius();
        for &s in sg.gaps() {
            for (j, &nj) in sg.generators().iter().enumerate() {
                let n = f - s + nj;
                ensure!(b.valid(s, n, 2), "{:?}: ({n},2) not in the monoid for s={s}", sg.generators());
                let others: Vec<i64> = sg.generators().iter().copied().filter(|&x| x != nj).collect();
                let g = others.iter().fold(0, |acc, &x| common::gcd(acc, x));
                elements += 1;
                if !b.irreducible_pair(s, n) {
                    reducible += 1;
                    if s % g != 0 {
                        violations += 1;
                    }
                }
                let w = witness::gdivs_witness(sg, s, j).map_err(|e| e.to_string())?;
                ensure!(w.g == g && w.element.n == n, "witness mismatch for {:?}, s={s}", sg.generators());
            }
        }
    }
    ensure!(violations == 0, "{violations} reducible witnesses with g not dividing s");
    Ok(format!(
        "{} semigroups, {elements} witnesses, {reducible} reducible, all with g | s",
        corpus.len()
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 7] = [
        ("AC1 point cloud <5,6>", ac1_two_generators),
        ("AC2 point cloud <6,10,15>", ac2_three_generators),
        ("AC3 point cloud <5,12,14,16>", ac3_genarith_four_generators),
        ("AC4 point cloud <6,13,14,15,16>", ac4_genarith_five_generators),
        ("AC5 generalized arithmetic family scan", ac5_family_scan),
        ("AC6 property suites", ac6_property_suites),
        ("AC7 generator witness audit", ac7_generator_audit),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
