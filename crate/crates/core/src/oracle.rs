//! Brute-force reference implementations used by the test suites and by
//! `selfcheck`. None of them shares code paths with the routines they check.

use crate::coord::{ExactRational, Scalar};
use crate::linkage::LinkageWitness;
use crate::schur::{PartitionIndex, Poly};
use crate::weight::{all_perms, Perm, Root, Weight};

/// s_μ(x₁, …, x_m) as a sum over semistandard tableaux of shape μ.
pub fn schur_tableaux(mu: &PartitionIndex) -> Poly {
    let (shape, twist) = mu.normalize();
    let m = mu.m();
    let shape: Vec<usize> = shape.iter().map(|&x| x as usize).collect();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = Poly::zero(m);

    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        m: usize,
        out: &mut Poly,
    ) {
        if k == cells.len() {
            let mut e = vec![0i64; m];
            for row in grid.iter() {
                for &v in row {
                    e[v - 1] += 1;
                }
            }
            out.add_term(e, 1);
            return;
        }
        let (r, c) = cells[k];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(grid[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        for v in lo..=m {
            grid[r][c] = v;
            fill(k + 1, cells, grid, m, out);
        }
        grid[r][c] = 0;
    }

    if m == 0 {
        return if cells.is_empty() { Poly::one(0) } else { out };
    }
    fill(0, &cells, &mut grid, m, &mut out);
    out.twist(twist)
}

/// Every set of pairwise disjoint pairs {i, j}, i < j, with λᵢ + λⱼ = 0.
pub fn zero_sum_pair_sets<Q: ExactRational>(lambda: &Weight<Q>) -> Vec<Vec<Root>> {
    let n = lambda.n();
    let mut out = Vec::new();
    fn go<Q: ExactRational>(
        start: usize,
        lambda: &Weight<Q>,
        used: &mut Vec<bool>,
        cur: &mut Vec<Root>,
        out: &mut Vec<Vec<Root>>,
    ) {
        out.push(cur.clone());
        let n = lambda.n();
        for i in start..n {
            if used[i] {
                continue;
            }
            for j in i + 1..n {
                if used[j] || !(lambda.coord(i) + lambda.coord(j)).is_zero() {
                    continue;
                }
                used[i] = true;
                used[j] = true;
                cur.push(Root::new(i, j));
                go(i + 1, lambda, used, cur, out);
                cur.pop();
                used[i] = false;
                used[j] = false;
            }
        }
    }
    go(0, lambda, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

pub fn brute_atypicality<Q: ExactRational>(lambda: &Weight<Q>) -> usize {
    zero_sum_pair_sets(lambda)
        .iter()
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Searches all of S_n and all disjoint atypical pair sets for
/// μ = w(λ − Σ kα), solving each k from one coordinate and checking the rest.
pub fn central_witness_search<Q: ExactRational>(
    lambda: &Weight<Q>,
    mu: &Weight<Q>,
) -> Option<LinkageWitness<Q>> {
    if lambda.n() != mu.n() {
        return None;
    }
    let sets = zero_sum_pair_sets(lambda);
    for w in all_perms(lambda.n()) {
        let target = mu.weyl_apply(&w.inverse()).ok()?;
        for set in &sets {
            let pairs: Vec<(Root, Scalar<Q>)> = set
                .iter()
                .map(|a| (*a, lambda.coord(a.i) - target.coord(a.i)))
                .collect();
            let mut cand = lambda.clone();
            for (a, k) in &pairs {
                cand = cand.minus_root(*a, k);
            }
            if cand.weyl_apply(&w).ok()? == *mu {
                return Some(LinkageWitness { w, pairs });
            }
        }
    }
    None
}

fn in_integral_weyl_group<Q: ExactRational>(lambda: &Weight<Q>, w: &Perm) -> bool {
    w.images()
        .iter()
        .enumerate()
        .all(|(i, &j)| (lambda.coord(i) - lambda.coord(j)).is_integer())
}

/// Bounded search for μ = w(λ − Σ kα) with w ∈ W_λ and integer |k| ≤ bound.
pub fn approx_witness_search<Q: ExactRational>(
    lambda: &Weight<Q>,
    mu: &Weight<Q>,
    bound: i64,
) -> Option<LinkageWitness<Q>> {
    if lambda.n() != mu.n() {
        return None;
    }
    let sets = zero_sum_pair_sets(lambda);
    for w in all_perms(lambda.n()) {
        if !in_integral_weyl_group(lambda, &w) {
            continue;
        }
        for set in &sets {
            let mut ks = vec![-bound; set.len()];
            loop {
                let mut cand = lambda.clone();
                for (a, k) in set.iter().zip(&ks) {
                    cand = cand.minus_root(*a, &Scalar::int(*k));
                }
                if cand.weyl_apply(&w).ok()? == *mu {
                    let pairs = set
                        .iter()
                        .zip(&ks)
                        .filter(|(_, k)| **k != 0)
                        .map(|(a, k)| (*a, Scalar::int(*k)))
                        .collect();
                    return Some(LinkageWitness { w, pairs });
                }
                let mut pos = 0;
                while pos < ks.len() && ks[pos] == bound {
                    ks[pos] = -bound;
                    pos += 1;
                }
                if pos == ks.len() {
                    break;
                }
                ks[pos] += 1;
            }
        }
    }
    None
}

/// The search bound used with [`approx_witness_search`]: the largest integer
/// part of |μ − λ| plus n.
pub fn approx_bound<Q: ExactRational>(lambda: &Weight<Q>, mu: &Weight<Q>) -> i64 {
    let base = lambda
        .coords()
        .iter()
        .zip(mu.coords())
        .map(|(a, b)| {
            let d = (b - a).rational_part().clone().abs().floor_int();
            d.exact_i64().unwrap_or(0)
        })
        .max()
        .unwrap_or(0);
    base + lambda.n() as i64
}

/// λ⁻ by brute force: the least k ≥ 1 for which some permutation of λ − kα
/// is dominant, with α the unique atypical cross root.
pub fn lambda_minus_brute<Q: ExactRational>(
    lambda: &Weight<Q>,
    s: &Scalar<Q>,
    ell: usize,
    max_k: i64,
) -> Option<(i64, Weight<Q>)> {
    let n = lambda.n();
    let mut cross = Vec::new();
    for p in 0..ell {
        for q in ell..n {
            if (lambda.coord(p) + lambda.coord(q)).is_zero() {
                cross.push(Root::new(p, q));
            }
        }
    }
    if cross.len() != 1 {
        return None;
    }
    let a = cross[0];
    for k in 1..=max_k {
        let shifted = lambda.minus_root(a, &Scalar::int(k));
        for w in all_perms(n) {
            let cand = shifted.weyl_apply(&w).ok()?;
            if cand.is_dominant(s, ell) {
                return Some((k, cand));
            }
        }
    }
    None
}
