//! Seeded oracle suites, each comparing a production routine against an
//! independent reference on random inputs.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::blockone::{block_chart, gl_atypicality, gl_linked, gl_wt, lambda_minus, lambda_plus, to_gl};
use crate::charring::{clifford_dim, levi_typical_character, levi_typical_via_schur, tensor_project_verify, TranslationKind};
use crate::coord::{ExactRational, Scalar};
use crate::linkage::{atypicality, linked_approx, linked_sim, same_central_char, wt};
use crate::oracle;
use crate::reduce::{normalize_block, replay_moves};
use crate::sample;
use crate::schur::{pieri_expand, schur_jt, PartitionIndex, Poly};
use crate::weight::Weight;
use crate::zigzag::{Fault, ZigzagAlgebra};

type Q = num_rational::Rational64;

const MAX_MESSAGES: usize = 5;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.passed == self.cases
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SelfcheckReport {
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
}

impl SelfcheckReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::ok)
    }
}

impl fmt::Display for SelfcheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            let tag = if s.ok() { "ok  " } else { "FAIL" };
            writeln!(f, "{tag} {:<20} {}/{}", s.name, s.passed, s.cases)?;
            for m in &s.failures {
                writeln!(f, "     {m}")?;
            }
        }
        write!(f, "seed {}: {}", self.seed, if self.passed() { "all suites pass" } else { "failures" })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub seed: u64,
    pub cases: usize,
    #[doc(hidden)]
    pub fault: Option<Fault>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: 0,
            cases: 40,
            fault: None,
        }
    }
}

struct Tally {
    cases: usize,
    passed: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            passed: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, outcome: std::result::Result<(), String>) {
        self.cases += 1;
        match outcome {
            Ok(()) => self.passed += 1,
            Err(m) => {
                if self.failures.len() < MAX_MESSAGES {
                    self.failures.push(m);
                }
            }
        }
    }
}

type SuiteFn = fn(&mut ChaCha8Rng, usize, &Options, &mut Tally);

const SUITES: &[(&str, SuiteFn)] = &[
    ("scalar-roundtrip", suite_scalar),
    ("atypicality", suite_atypicality),
    ("central-character", suite_central),
    ("linked-approx", suite_approx),
    ("reduction", suite_reduction),
    ("schur", suite_schur),
    ("pieri", suite_pieri),
    ("levi-character", suite_levi),
    ("translation", suite_translation),
    ("lambda-neighbours", suite_neighbours),
    ("gl-correspondence", suite_gl),
    ("zigzag", suite_zigzag),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

/// Runs every suite on its own thread; each suite has its own RNG stream
/// derived from the seed, so the report does not depend on scheduling.
pub fn run(opts: &Options) -> SelfcheckReport {
    let suites = std::thread::scope(|scope| {
        let handles: Vec<_> = SUITES
            .iter()
            .enumerate()
            .map(|(k, (name, f))| {
                scope.spawn(move || {
                    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ ((k as u64 + 1) << 40));
                    let mut t = Tally::new();
                    f(&mut rng, opts.cases, opts, &mut t);
                    SuiteReport {
                        name: name.to_string(),
                        cases: t.cases,
                        passed: t.passed,
                        failures: t.failures,
                    }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite panicked")).collect()
    });
    SelfcheckReport { seed: opts.seed, suites }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suite_scalar(rng: &mut ChaCha8Rng, cases: usize, _: &Options, t: &mut Tally) {
    for _ in 0..cases {
        let s: Scalar<Q> = sample::random_scalar(rng);
        let back: Result<Scalar<Q>, _> = s.to_string().parse();
        t.record(check(back.as_ref().ok() == Some(&s), || format!("{s} does not round-trip")));
    }
}

fn suite_atypicality(rng: &mut ChaCha8Rng, cases: usize, _: &Options, t: &mut Tally) {
    for _ in 0..cases {
        let n = rng.gen_range(1..=5);
        let l: Weight<Q> = sample::random_weight(rng, n, true);
        let (a, b) = (atypicality(&l), oracle::brute_atypicality(&l));
        t.record(check(a == b, || format!("atypicality {l}: {a} vs brute {b}")));
    }
}

fn suite_central(rng: &mut ChaCha8Rng, cases: usize, _: &Options, t: &mut Tally) {
    for _ in 0..cases {
        let n = rng.gen_range(1..=4);
        let l: Weight<Q> = sample::random_weight(rng, n, true);
        let m = sample::partner(rng, &l, false);
        let fast = same_central_char(&l, &m);
        let brute = oracle::central_witness_search(&l, &m).is_some();
        t.record(check(fast == brute, || format!("central character {l} / {m}: {fast} vs search {brute}")));
    }
}

fn suite_approx(rng: &mut ChaCha8Rng, cases: usize, _: &Options, t: &mut Tally) {
    for _ in 0..cases {
        let n = rng.gen_range(1..=4);
        let l: Weight<Q> = sample::random_weight(rng, n, true);
        let m = sample::partner(rng, &l, true);
        let outcome = match linked_approx(&l, &m) {
            Err(e) => Err(format!("linked_approx {l} / {m}: {e}")),
            Ok(found) => {
                let brute = oracle::approx_witness_search(&l, &m, oracle::approx_bound(&l, &m)).is_some();
                match found {
                    Some(w) if w.replay(&l).ok().as_ref() != Some(&m) => Err(format!("witness {w} does not replay")),
                    f => check(f.is_some() == brute, || format!("approx {l} / {m}: {} vs search {brute}", f.is_some())),
                }
            }
        };
        t.record(outcome);
    }
}

fn suite_reduction(rng: &mut ChaCha8Rng, cases: usize, _: &Options, t: &mut Tally) {
    for _ in 0..cases {
        let n = rng.gen_range(1..=6);
        let l: Weight<Q> = sample::random_weight(rng, n, true);
        let outcome = normalize_block(&l).map_err(|e| e.to_string()).and_then(|r| {
            let replayed = replay_moves(&l, &r.moves).map_err(|e| e.to_string())?;
            check(replayed == r.reduced, || format!("moves of {l} replay to {replayed}, not {}", r.reduced))?;
            let again = normalize_block(&r.reduced).map_err(|e| e.to_string())?;
            check(again.reduced == r.reduced && again.moves.is_empty(), || {
                format!("reduction of {l} is not idempotent")
            })?;
            check(same_central_char(&l, &r.reduced), || format!("{l} and {} differ in central character", r.reduced))
        });
        t.record(outcome);
    }
}

fn suite_schur(rng: &mut ChaCha8Rng, cases: usize, _: &Options, t: &mut Tally) {
    for _ in 0..cases {
        let m = rng.gen_range(1..=4);
        let parts = sample::random_partition(rng, 6, m);
        let mu = PartitionIndex::new(&parts, m).unwrap();
        let ok = schur_jt(&mu) == oracle::schur_tableaux(&mu);
        t.record(check(ok, || format!("Jacobi-Trudi differs from tableaux at {parts:?}")));
    }
}

fn suite_pieri(rng: &mut ChaCha8Rng, cases: usize, _: &Options, t: &mut Tally) {
    for _ in 0..cases {
        let m = rng.gen_range(1..=4);
        let parts = sample::random_partition(rng, 5, m);
        let mu = PartitionIndex::new(&parts, m).unwrap();
        let lhs = oracle::schur_tableaux(&mu).mul(&Poly::power_sum_one(m));
        let rhs = pieri_expand(&mu)
            .iter()
            .fold(Poly::zero(m), |acc, nu| acc.add(&oracle::schur_tableaux(nu)));
        t.record(check(lhs == rhs, || format!("Pieri fails at {parts:?}")));
    }
}

fn random_dominant(rng: &mut ChaCha8Rng, n: usize, ell: usize, s: &Scalar<Q>) -> Weight<Q> {
    let pool: Vec<i64> = (-4..=4).collect();
    let mut a: Vec<i64> = pool.choose_multiple(rng, ell).copied().collect();
    let mut b: Vec<i64> = pool.choose_multiple(rng, n - ell).copied().collect();
    a.sort_unstable_by(|x, y| y.cmp(x));
    b.sort_unstable_by(|x, y| y.cmp(x));
    let coords = a.iter().map(|&x| s.add_int(x)).chain(b.iter().map(|&y| (-s).add_int(y))).collect();
    Weight::new(coords).unwrap()
}

fn suite_levi(rng: &mut ChaCha8Rng, cases: usize, _: &Options, t: &mut Tally) {
    let s = Scalar::<Q>::symbol("s");
    for _ in 0..cases {
        let n = rng.gen_range(1..=4);
        let ell = rng.gen_range(0..=n);
        let z = random_dominant(rng, n, ell, &s);
        let outcome = levi_typical_character(&z, ell)
            .and_then(|a| Ok((a, levi_typical_via_schur(&z, ell)?)))
            .map_err(|e| e.to_string())
            .and_then(|(a, b)| {
                check(a.terms() == b.terms(), || format!("Levi routes differ at {z}"))?;
                check(a.terms().values().all(|&c| c > 0), || format!("negative coefficient at {z}"))?;
                check(a.top_coefficient() == clifford_dim(n), || format!("top coefficient at {z}"))
            });
        t.record(outcome);
    }
}

fn suite_translation(rng: &mut ChaCha8Rng, cases: usize, _: &Options, t: &mut Tally) {
    let s = Scalar::<Q>::symbol("s");
    for _ in 0..cases.div_ceil(4) {
        let n = rng.gen_range(2..=3);
        let ell = rng.gen_range(1..n);
        let z = random_dominant(rng, n, ell, &s);
        let kind = *[TranslationKind::E, TranslationKind::F].choose(rng).unwrap();
        let a = rng.gen_range(-3..=3);
        let outcome = match tensor_project_verify(&z, ell, a, kind, 2, &s) {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!("translation identity fails for {z}, {kind:?}, a = {a}")),
            Err(e) => Err(e.to_string()),
        };
        t.record(outcome);
    }
}

fn suite_neighbours(rng: &mut ChaCha8Rng, cases: usize, _: &Options, t: &mut Tally) {
    let s = Scalar::<Q>::symbol("s");
    for _ in 0..cases {
        let n = rng.gen_range(2..=4);
        let ell = rng.gen_range(1..n);
        let Some(l) = sample::random_atypicality_one(rng, n, ell, &s, 3) else {
            continue;
        };
        let outcome = (|| {
            let m = lambda_minus(&l, &s, ell).map_err(|e| e.to_string())?;
            let brute = oracle::lambda_minus_brute(&l, &s, ell, 2 * n as i64 + 2);
            check(brute == Some((m.k, m.weight.clone())), || format!("lambda-minus of {l} differs from search"))?;
            let back = lambda_plus(&m.weight, &s, ell).map_err(|e| e.to_string())?;
            check(back.weight == l, || format!("(lambda^-)^+ != lambda at {l}"))
        })();
        t.record(outcome);
    }
}

fn suite_gl(rng: &mut ChaCha8Rng, cases: usize, _: &Options, t: &mut Tally) {
    let s = Scalar::<Q>::symbol("s");
    for _ in 0..cases {
        let n = rng.gen_range(1..=5);
        let ell = rng.gen_range(0..=n);
        let l = sample::random_lambda_member(rng, n, ell, &s, 3);
        let m = if rng.gen_bool(0.5) {
            sample::random_lambda_member(rng, n, ell, &s, 3)
        } else {
            sample::block_partner(rng, &l, ell)
        };
        t.record(gl_case(&l, &m, &s, ell));
    }
}

fn gl_case<Q2: ExactRational>(
    l: &Weight<Q2>,
    m: &Weight<Q2>,
    s: &Scalar<Q2>,
    ell: usize,
) -> std::result::Result<(), String> {
    let (a, b) = (to_gl(l, s, ell).map_err(|e| e.to_string())?, to_gl(m, s, ell).map_err(|e| e.to_string())?);
    let (q, g) = (linked_sim(l, m), gl_linked(&a, &b));
    check(q == g, || format!("{l} ~ {m} is {q}, gl linkage of {a}, {b} is {g}"))?;
    check(wt(l, s, ell).map_err(|e| e.to_string())? == gl_wt(&a), || format!("wt({l}) differs from gl_wt({a})"))?;
    check(atypicality(l) == gl_atypicality(&a), || format!("atypicality of {l} differs from {a}"))
}

fn suite_zigzag(_: &mut ChaCha8Rng, cases: usize, opts: &Options, t: &mut Tally) {
    let s = Scalar::<Q>::symbol("s");
    let lambda = Weight::new(vec![s.clone(), -&s]).unwrap();
    for window in (1..=3).take(cases) {
        let built = match opts.fault {
            Some(f) => ZigzagAlgebra::<Q>::build_with_fault(window, f),
            None => ZigzagAlgebra::<Q>::build(window),
        };
        let outcome = (|| {
            let alg = built.map_err(|e| e.to_string())?;
            let rel = alg.relation_failures();
            check(rel.is_empty(), || format!("N = {window}: relation {} violated", rel.join(", ")))?;
            let assoc = alg.associativity_failures();
            check(assoc.is_empty(), || format!("N = {window}: {} non-associative triples", assoc.len()))?;
            alg.verify_radical().map_err(|e| e.to_string())?;
            let chart = block_chart(&lambda, &s, 1, window).map_err(|e| e.to_string())?;
            let cmp = alg.compare_with_chart(&chart).map_err(|e| e.to_string())?;
            check(cmp.passed(), || {
                let names: Vec<String> = cmp.failures().iter().map(|c| format!("{}: {}", c.name, c.detail)).collect();
                format!("N = {window}: {}", names.join("; "))
            })
        })();
        t.record(outcome);
    }
}
