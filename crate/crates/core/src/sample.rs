//! Random inputs for the oracle suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::coord::{ExactRational, Scalar};
use crate::linkage::integral_weyl_group;
use crate::oracle::zero_sum_pair_sets;
use crate::weight::{all_perms, Root, Weight};

pub fn random_scalar<Q: ExactRational, R: Rng>(rng: &mut R) -> Scalar<Q> {
    let den = *[1i64, 2, 3, 5].choose(rng).unwrap();
    let mut s = Scalar::frac(rng.gen_range(-12..=12), den);
    if rng.gen_bool(0.4) {
        let sym = *["pi", "s"].choose(rng).unwrap();
        let (p, q) = *[(1, 1), (-1, 1), (2, 1), (1, 2), (-3, 2)].choose(rng).unwrap();
        s = s.plus_symbol(sym, Q::from_frac(p, q));
    }
    s
}

/// Coordinates ±b + k with b drawn from a few coset classes, so that zero-sum
/// pairs are common.
pub fn random_weight<Q: ExactRational, R: Rng>(rng: &mut R, n: usize, irrational: bool) -> Weight<Q> {
    let mut bases = vec![Scalar::int(0), Scalar::frac(1, 2), Scalar::frac(1, 5)];
    if irrational {
        bases.push(Scalar::symbol("pi"));
        bases.push(Scalar::frac(1, 3).plus_symbol("pi", Q::from_frac(1, 2)));
    }
    let coords = (0..n)
        .map(|_| {
            let b = bases.choose(rng).unwrap().clone();
            let b = if rng.gen_bool(0.5) { b } else { -&b };
            b.add_int(rng.gen_range(-2..=2))
        })
        .collect();
    Weight::new(coords).unwrap()
}

/// w(λ − Σ kα) for a random disjoint set of zero-sum pairs and random shifts.
/// With `integral` the permutation is taken from W_λ, otherwise from S_n.
pub fn linked_partner<Q: ExactRational, R: Rng>(rng: &mut R, lambda: &Weight<Q>, integral: bool) -> Weight<Q> {
    let sets = zero_sum_pair_sets(lambda);
    let set = sets.choose(rng).unwrap();
    let mut out = lambda.clone();
    for a in set {
        let k = rng.gen_range(-3..=3);
        out = out.minus_root(*a, &Scalar::int(k));
    }
    let perms = if integral {
        integral_weyl_group(lambda)
    } else {
        all_perms(lambda.n())
    };
    out.weyl_apply(perms.choose(rng).unwrap()).unwrap()
}

/// A partner that is linked about half of the time.
pub fn partner<Q: ExactRational, R: Rng>(rng: &mut R, lambda: &Weight<Q>, integral: bool) -> Weight<Q> {
    let mut mu = linked_partner(rng, lambda, integral);
    if rng.gen_bool(0.5) {
        let mut v = vec![0; mu.n()];
        v[rng.gen_range(0..mu.n())] = rng.gen_range(1..=2);
        if rng.gen_bool(0.5) {
            v[rng.gen_range(0..mu.n())] -= 1;
        }
        mu = mu.shift(&v);
    }
    mu
}

/// A weight in Λ_{s^ℓ}(n) with integer parts in [−r, r], in any order.
pub fn random_lambda_member<Q: ExactRational, R: Rng>(
    rng: &mut R,
    n: usize,
    ell: usize,
    s: &Scalar<Q>,
    r: i64,
) -> Weight<Q> {
    let coords = (0..n)
        .map(|k| {
            let base = if k < ell { s.clone() } else { -s };
            base.add_int(rng.gen_range(-r..=r))
        })
        .collect();
    Weight::new(coords).unwrap()
}

/// A dominant weight of Λ⁺_{s^ℓ}(n) with exactly one atypical cross pair,
/// integer parts in [−r, r]. `None` when rejection sampling gives up.
pub fn random_atypicality_one<Q: ExactRational, R: Rng>(
    rng: &mut R,
    n: usize,
    ell: usize,
    s: &Scalar<Q>,
    r: i64,
) -> Option<Weight<Q>> {
    let pool: Vec<i64> = (-r..=r).collect();
    for _ in 0..1000 {
        let mut a: Vec<i64> = pool.choose_multiple(rng, ell).copied().collect();
        let mut b: Vec<i64> = pool.choose_multiple(rng, n - ell).copied().collect();
        a.sort_unstable_by(|x, y| y.cmp(x));
        b.sort_unstable_by(|x, y| y.cmp(x));
        let cross = a.iter().map(|x| b.iter().filter(|y| x + *y == 0).count()).sum::<usize>();
        if cross == 1 {
            let coords = a
                .iter()
                .map(|&x| s.add_int(x))
                .chain(b.iter().map(|&y| (-s).add_int(y)))
                .collect();
            return Some(Weight::new(coords).unwrap());
        }
    }
    None
}

/// A random index with m parts summing to at most `max_size`, weakly
/// decreasing and nonnegative.
pub fn random_partition<R: Rng>(rng: &mut R, max_size: i64, m: usize) -> Vec<i64> {
    let mut left = rng.gen_range(0..=max_size);
    let mut parts = Vec::with_capacity(m);
    let mut cap = left;
    for _ in 0..m {
        let p = rng.gen_range(0..=cap.min(left));
        parts.push(p);
        left -= p;
        cap = p;
    }
    parts
}

/// An element of Λ_{s^ℓ}(n) that is ~-linked to λ: random shifts along the
/// cross atypical pairs, then a permutation inside each index group.
pub fn block_partner<Q: ExactRational, R: Rng>(rng: &mut R, lambda: &Weight<Q>, ell: usize) -> Weight<Q> {
    let n = lambda.n();
    let mut out = lambda.clone();
    for p in 0..ell {
        for q in ell..n {
            let a = Root::new(p, q);
            if out.bar_pairing(a).is_zero() && rng.gen_bool(0.7) {
                out = out.minus_root(a, &Scalar::int(rng.gen_range(-2..=2)));
            }
        }
    }
    let mut idx: Vec<usize> = (0..ell).collect();
    idx.shuffle(rng);
    let mut rest: Vec<usize> = (ell..n).collect();
    rest.shuffle(rng);
    idx.extend(rest);
    Weight::new(idx.iter().map(|&i| out.coord(i).clone()).collect()).unwrap()
}
