//! Blocks of atypicality one in the maximal parabolic category: the
//! neighbours λ⁻ and λ⁺, charts of consecutive weights with their
//! decomposition and Cartan matrices, parity rules, and the passage to
//! gl(ℓ|n−ℓ) weights.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coord::{ExactRational, Scalar};
use crate::error::{precondition, Error, Result};
use crate::linkage::WtVector;
use crate::weight::{strictly_decreasing_groups, Root, Weight};

fn check_block_input<Q: ExactRational>(lambda: &Weight<Q>, s: &Scalar<Q>, ell: usize) -> Result<Root> {
    if (s + s).is_integer() {
        return precondition(format!("s = {s} lies in Z/2"));
    }
    if !lambda.is_dominant(s, ell) {
        return precondition(format!(
            "{lambda} is not in Lambda+_{{{s}^{ell}}}({})",
            lambda.n()
        ));
    }
    let n = lambda.n();
    let cross: Vec<Root> = (0..ell)
        .flat_map(|p| (ell..n).map(move |q| Root::new(p, q)))
        .filter(|a| lambda.bar_pairing(*a).is_zero())
        .collect();
    if cross.len() != 1 {
        return precondition(format!(
            "{lambda} has atypicality {} (expected 1)",
            cross.len()
        ));
    }
    Ok(cross[0])
}

/// Sorts each index group in decreasing order. Within a group all
/// differences are integers.
fn sort_groups<Q: ExactRational>(lambda: &Weight<Q>, ell: usize) -> Weight<Q> {
    let mut coords = lambda.coords().to_vec();
    let desc = |a: &Scalar<Q>, b: &Scalar<Q>| {
        let d = b.integer_difference(a).expect("integral group");
        d.cmp(&0)
    };
    coords[..ell].sort_by(desc);
    coords[ell..].sort_by(desc);
    Weight::new(coords).unwrap()
}

/// A neighbour of λ in its block together with the shift k used.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Neighbour<Q: ExactRational> {
    pub weight: Weight<Q>,
    pub k: i64,
}

fn step<Q: ExactRational>(lambda: &Weight<Q>, s: &Scalar<Q>, ell: usize, dir: i64) -> Result<Neighbour<Q>> {
    let a = check_block_input(lambda, s, ell)?;
    let limit = 2 * lambda.n() as i64 + 2;
    for k in 1..=limit {
        let cand = lambda.minus_root(a, &Scalar::int(dir * k));
        let sorted = sort_groups(&cand, ell);
        if strictly_decreasing_groups(sorted.coords(), ell) {
            return Ok(Neighbour { weight: sorted, k });
        }
    }
    Err(Error::SearchLimit(format!("no shift up to {limit} separates {lambda}")))
}

/// λ⁻: for the atypical root α = ε_p − ε_q, the least k ≥ 1 with the
/// coordinates of λ − kα distinct inside each group, sorted back into
/// Λ⁺_{s^ℓ}(n).
pub fn lambda_minus<Q: ExactRational>(lambda: &Weight<Q>, s: &Scalar<Q>, ell: usize) -> Result<Neighbour<Q>> {
    step(lambda, s, ell, 1)
}

/// λ⁺, found by the mirrored search along +α and confirmed by (λ⁺)⁻ = λ.
pub fn lambda_plus<Q: ExactRational>(lambda: &Weight<Q>, s: &Scalar<Q>, ell: usize) -> Result<Neighbour<Q>> {
    let up = step(lambda, s, ell, -1)?;
    let back = lambda_minus(&up.weight, s, ell)?;
    if back.weight != *lambda {
        return Err(Error::Verification(format!(
            "({})^- = {} differs from {lambda}",
            up.weight, back.weight
        )));
    }
    Ok(up)
}

/// The weights λ^{−N}, …, λ^{N} of a block together with the decomposition
/// matrix D (D[i][j] = [K(λⁱ) : L(λʲ)]), C = DᵀD and the Ext-quiver edges
/// read off from D.
#[derive(Clone, Debug)]
pub struct BlockChart<Q: ExactRational> {
    pub window: usize,
    pub weights: Vec<Weight<Q>>,
    pub decomposition: Vec<Vec<i64>>,
    pub cartan: Vec<Vec<i64>>,
    /// Pairs (i, i+1) of chart indices in −N..=N.
    pub edges: Vec<(i64, i64)>,
    /// Chart indices whose rows are affected by truncation.
    pub boundary: Vec<i64>,
}

impl<Q: ExactRational> BlockChart<Q> {
    pub fn index_range(&self) -> std::ops::RangeInclusive<i64> {
        -(self.window as i64)..=self.window as i64
    }

    pub fn weight(&self, i: i64) -> &Weight<Q> {
        &self.weights[(i + self.window as i64) as usize]
    }

    pub fn cartan_at(&self, i: i64, j: i64) -> i64 {
        let o = self.window as i64;
        self.cartan[(i + o) as usize][(j + o) as usize]
    }

    /// dim Hom(P(λⁱ), P(λʲ)) = [P(λʲ) : L(λⁱ)].
    pub fn hom_dim(&self, i: i64, j: i64) -> i64 {
        self.cartan_at(j, i)
    }

    pub fn is_boundary(&self, i: i64) -> bool {
        self.boundary.contains(&i)
    }

    pub fn has_edge(&self, i: i64, j: i64) -> bool {
        let (a, b) = (i.min(j), i.max(j));
        self.edges.contains(&(a, b))
    }

    /// Removes an edge; used to build negative controls.
    pub fn without_edge(&self, i: i64, j: i64) -> Self {
        let mut out = self.clone();
        let (a, b) = (i.min(j), i.max(j));
        out.edges.retain(|e| *e != (a, b));
        out
    }
}

/// Builds the chart of λ over the window −N..=N.
pub fn block_chart<Q: ExactRational>(
    lambda: &Weight<Q>,
    s: &Scalar<Q>,
    ell: usize,
    window: usize,
) -> Result<BlockChart<Q>> {
    check_block_input(lambda, s, ell)?;
    let mut below = Vec::new();
    let mut cur = lambda.clone();
    for _ in 0..window {
        cur = lambda_minus(&cur, s, ell)?.weight;
        below.push(cur.clone());
    }
    let mut above = Vec::new();
    let mut cur = lambda.clone();
    for _ in 0..window {
        cur = lambda_plus(&cur, s, ell)?.weight;
        above.push(cur.clone());
    }
    let mut weights: Vec<Weight<Q>> = below.into_iter().rev().collect();
    weights.push(lambda.clone());
    weights.extend(above);
    for pair in weights.windows(2) {
        if lambda_minus(&pair[1], s, ell)?.weight != pair[0] {
            return Err(Error::Verification(format!("chart step {} -> {} is not reversible", pair[0], pair[1])));
        }
    }

    let size = 2 * window + 1;
    let mut d = vec![vec![0i64; size]; size];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 1;
        if i > 0 {
            row[i - 1] = 1;
        }
    }
    let mut c = vec![vec![0i64; size]; size];
    for j in 0..size {
        for k in 0..size {
            c[j][k] = (0..size).map(|i| d[i][j] * d[i][k]).sum();
        }
    }
    let o = window as i64;
    let mut edges = Vec::new();
    for (i, row) in d.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if i != j && v != 0 {
                let (a, b) = (i.min(j) as i64 - o, i.max(j) as i64 - o);
                if !edges.contains(&(a, b)) {
                    edges.push((a, b));
                }
            }
        }
    }
    edges.sort();
    let boundary = if window == 0 { vec![0] } else { vec![-o, o] };
    Ok(BlockChart {
        window,
        weights,
        decomposition: d,
        cartan: c,
        edges,
        boundary,
    })
}

/// Whether blocks of atypicality one split by parity: true exactly for even n.
pub fn pi_split(n: usize) -> bool {
    n % 2 == 0
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Parity {
    /// The parity-change functor Π.
    Pi,
    Identity,
}

/// The parity factor relating L(λ⁻) to its neighbour for even n: Π when
/// n ≡ 2 mod 4, the identity when n ≡ 0 mod 4.
pub fn tau_parity(n: usize) -> Result<Parity> {
    match n % 4 {
        2 => Ok(Parity::Pi),
        0 => Ok(Parity::Identity),
        _ => precondition(format!("parity rule needs even n, got {n}")),
    }
}

/// An integral weight of gl(ℓ|n−ℓ).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct GlWeight {
    pub ell: usize,
    pub coords: Vec<i64>,
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        write!(f, "({} | {})", part(&self.coords[..self.ell]), part(&self.coords[self.ell..]))
    }
}

/// ρ = Σ_{i≤ℓ} −(ℓ−i+1)δᵢ + Σ_{i>ℓ} (i−ℓ)δᵢ.
pub fn gl_rho(n: usize, ell: usize) -> Vec<i64> {
    (0..n)
        .map(|k| {
            if k < ell {
                -((ell - k) as i64)
            } else {
                (k - ell + 1) as i64
            }
        })
        .collect()
}

/// λ ↦ λ^𝔞 = Σ_{i≤ℓ}(λᵢ − s)δᵢ + Σ_{i>ℓ}(λᵢ + s)δᵢ − ρ.
pub fn to_gl<Q: ExactRational>(lambda: &Weight<Q>, s: &Scalar<Q>, ell: usize) -> Result<GlWeight> {
    if !lambda.in_lambda(s, ell) {
        return precondition(format!(
            "{lambda} is not in Lambda_{{{s}^{ell}}}({})",
            lambda.n()
        ));
    }
    let rho = gl_rho(lambda.n(), ell);
    let coords = lambda
        .coords()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let shifted = if k < ell { c - s } else { c + s };
            shifted
                .to_integer()
                .map(|x| x - rho[k])
                .ok_or_else(|| Error::Precondition(format!("coordinate {c} does not fit an i64")))
        })
        .collect::<Result<_>>()?;
    Ok(GlWeight { ell, coords })
}

pub fn from_gl<Q: ExactRational>(nu: &GlWeight, s: &Scalar<Q>) -> Weight<Q> {
    let rho = gl_rho(nu.coords.len(), nu.ell);
    let coords = nu
        .coords
        .iter()
        .enumerate()
        .map(|(k, &x)| {
            let base = Scalar::int(x + rho[k]);
            if k < nu.ell {
                &base + s
            } else {
                &base - s
            }
        })
        .collect();
    Weight::new(coords).unwrap()
}

fn shifted(nu: &GlWeight) -> Vec<i64> {
    let rho = gl_rho(nu.coords.len(), nu.ell);
    nu.coords.iter().zip(&rho).map(|(a, b)| a + b).collect()
}

/// gl_wt(ν) = Σ_{i≤ℓ} ϵ_{(ν+ρ)ᵢ} − Σ_{j>ℓ} ϵ_{−(ν+ρ)ⱼ}.
pub fn gl_wt(nu: &GlWeight) -> WtVector {
    let mut v = WtVector::zero();
    for (k, x) in shifted(nu).into_iter().enumerate() {
        if k < nu.ell {
            v.add_term(x, 1);
        } else {
            v.add_term(-x, -1);
        }
    }
    v
}

/// Equal gl_wt and ν′ − ν in the root lattice (coordinate sum zero).
pub fn gl_linked(nu: &GlWeight, other: &GlWeight) -> bool {
    nu.ell == other.ell
        && nu.coords.len() == other.coords.len()
        && gl_wt(nu) == gl_wt(other)
        && nu.coords.iter().sum::<i64>() == other.coords.iter().sum::<i64>()
}

/// Maximum number of disjoint pairs i ≤ ℓ < j with (ν+ρ)ᵢ = −(ν+ρ)ⱼ.
pub fn gl_atypicality(nu: &GlWeight) -> usize {
    let sh = shifted(nu);
    let mut left: BTreeMap<i64, usize> = BTreeMap::new();
    for &x in &sh[..nu.ell] {
        *left.entry(x).or_default() += 1;
    }
    let mut right: BTreeMap<i64, usize> = BTreeMap::new();
    for &x in &sh[nu.ell..] {
        *right.entry(-x).or_default() += 1;
    }
    left.iter()
        .map(|(v, &c)| c.min(right.get(v).copied().unwrap_or(0)))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type W = Weight<Rational64>;
    type S = Scalar<Rational64>;

    fn w(t: &[&str]) -> W {
        W::parse(t).unwrap()
    }

    fn sym() -> S {
        "0+s*1".parse().unwrap()
    }

    #[test]
    fn q2_neighbours() {
        let s = sym();
        let l = w(&["0+s*1", "0+s*-1"]);
        let m = lambda_minus(&l, &s, 1).unwrap();
        assert_eq!((m.weight, m.k), (w(&["-1+s*1", "1+s*-1"]), 1));
        let p = lambda_plus(&l, &s, 1).unwrap();
        assert_eq!((p.weight, p.k), (w(&["1+s*1", "-1+s*-1"]), 1));
    }

    #[test]
    fn collision_needs_k2() {
        let s = sym();
        let l = w(&["0+s*1", "-1+s*1", "0+s*-1"]);
        let m = lambda_minus(&l, &s, 2).unwrap();
        assert_eq!(m.k, 2);
        assert_eq!(m.weight, w(&["-1+s*1", "-2+s*1", "2+s*-1"]));
        assert_eq!(lambda_plus(&m.weight, &s, 2).unwrap().weight, l);
    }

    #[test]
    fn rejects_typical() {
        let s = sym();
        assert!(lambda_minus(&w(&["1+s*1", "0+s*-1"]), &s, 1).is_err());
    }

    #[test]
    fn chart_q2() {
        let s = sym();
        let c = block_chart(&w(&["0+s*1", "0+s*-1"]), &s, 1, 3).unwrap();
        assert_eq!(c.weights.len(), 7);
        for i in -2..=2 {
            assert_eq!(
                (c.cartan_at(i, i - 1), c.cartan_at(i, i), c.cartan_at(i, i + 1)),
                (1, 2, 1)
            );
        }
        assert_eq!(c.edges, vec![(-3, -2), (-2, -1), (-1, 0), (0, 1), (1, 2), (2, 3)]);
        let c0 = block_chart(&w(&["0+s*1", "0+s*-1"]), &s, 1, 0).unwrap();
        assert_eq!((c0.decomposition.clone(), c0.cartan.clone()), (vec![vec![1]], vec![vec![1]]));
        assert!(c0.is_boundary(0));
    }

    #[test]
    fn parity_rules() {
        assert!(pi_split(2) && !pi_split(3) && pi_split(4));
        assert_eq!(tau_parity(2).unwrap(), Parity::Pi);
        assert_eq!(tau_parity(4).unwrap(), Parity::Identity);
        assert!(tau_parity(3).is_err());
    }

    #[test]
    fn gl_examples() {
        let s = sym();
        let nu = to_gl(&w(&["0+s*1", "0+s*-1"]), &s, 1).unwrap();
        assert_eq!(nu.coords, vec![1, -1]);
        assert_eq!(gl_atypicality(&nu), 1);
        assert!(gl_wt(&nu).is_zero());
        let nu = to_gl(&w(&["1+s*1", "0+s*-1"]), &s, 1).unwrap();
        assert_eq!(nu.coords, vec![2, -1]);
        assert_eq!(from_gl(&nu, &s), w(&["1+s*1", "0+s*-1"]));
    }
}
