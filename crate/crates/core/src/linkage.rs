//! Atypicality, central characters, the linkage relations `~` and `≈`, and the
//! block label wt(λ).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coord::{ExactRational, Scalar};
use crate::error::{precondition, Error, Result};
use crate::weight::{Perm, Root, Weight};

/// Size of a maximum set of disjoint pairs {i, j} with λᵢ + λⱼ = 0.
///
/// The pair graph is a disjoint union of complete bipartite graphs between
/// the positions of v and −v, plus a clique on the zero positions.
pub fn atypicality<Q: ExactRational>(lambda: &Weight<Q>) -> usize {
    atypical_matching(lambda).len()
}

/// A maximum matching realising [`atypicality`], as roots εᵢ − εⱼ with i < j.
pub fn atypical_matching<Q: ExactRational>(lambda: &Weight<Q>) -> Vec<Root> {
    let mut open: BTreeMap<Scalar<Q>, Vec<usize>> = BTreeMap::new();
    let mut pairs = Vec::new();
    for (i, c) in lambda.coords().iter().enumerate() {
        let partner = -c;
        match open.get_mut(&partner).and_then(|v| v.pop()) {
            Some(j) => pairs.push(Root::new(j, i)),
            None => open.entry(c.clone()).or_default().push(i),
        }
    }
    pairs.sort();
    pairs
}

/// Multiset left after cancelling every value against its negative.
fn central_residue<Q: ExactRational>(lambda: &Weight<Q>) -> BTreeMap<Scalar<Q>, usize> {
    let mut counts: BTreeMap<Scalar<Q>, usize> = BTreeMap::new();
    for c in lambda.coords() {
        let partner = -c;
        match counts.get_mut(&partner) {
            Some(k) if *k > 0 => {
                *k -= 1;
                if *k == 0 {
                    counts.remove(&partner);
                }
            }
            _ => *counts.entry(c.clone()).or_default() += 1,
        }
    }
    counts
}

/// χ_λ = χ_μ: equal rank and equal residues after ± cancellation.
pub fn same_central_char<Q: ExactRational>(lambda: &Weight<Q>, mu: &Weight<Q>) -> bool {
    lambda.n() == mu.n() && central_residue(lambda) == central_residue(mu)
}

/// μ ~ λ: equal central characters and μ − λ in the root lattice.
pub fn linked_sim<Q: ExactRational>(lambda: &Weight<Q>, mu: &Weight<Q>) -> bool {
    if !same_central_char(lambda, mu) {
        return false;
    }
    match mu.integer_offset(lambda) {
        Some(v) => v.iter().sum::<i64>() == 0,
        None => false,
    }
}

/// Evidence for μ = w(λ − Σ kα) with the roots pairwise disjoint and
/// (λ, ᾱ) = 0 for each of them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinkageWitness<Q: ExactRational> {
    pub w: Perm,
    pub pairs: Vec<(Root, Scalar<Q>)>,
}

impl<Q: ExactRational> LinkageWitness<Q> {
    pub fn trivial(n: usize) -> Self {
        LinkageWitness {
            w: Perm::identity(n),
            pairs: Vec::new(),
        }
    }

    /// Applies the witness to λ: subtract Σ kα, then permute by w.
    pub fn replay(&self, lambda: &Weight<Q>) -> Result<Weight<Q>> {
        let mut used = vec![false; lambda.n()];
        let mut cur = lambda.clone();
        for (a, k) in &self.pairs {
            if a.i >= lambda.n() || a.j >= lambda.n() || used[a.i] || used[a.j] {
                return precondition(format!("witness root {a} overlaps or is out of range"));
            }
            used[a.i] = true;
            used[a.j] = true;
            if !lambda.bar_pairing(*a).is_zero() {
                return precondition(format!("witness root {a} is not atypical for {lambda}"));
            }
            cur = cur.minus_root(*a, k);
        }
        cur.weyl_apply(&self.w)
    }

    pub fn to_json(&self) -> WitnessJson {
        WitnessJson {
            w: self.w.images().iter().map(|v| v + 1).collect(),
            pairs: self
                .pairs
                .iter()
                .map(|(a, k)| PairJson {
                    i: a.i + 1,
                    j: a.j + 1,
                    k: k.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &WitnessJson) -> Result<Self> {
        if j.w.iter().any(|&v| v == 0) {
            return precondition("witness permutation images are 1-based");
        }
        let w = Perm::from_images(j.w.iter().map(|v| v - 1).collect())?;
        let mut pairs = Vec::new();
        for p in &j.pairs {
            if p.i == 0 || p.j == 0 || p.i == p.j {
                return precondition("witness pair indices are distinct and 1-based");
            }
            pairs.push((Root::new(p.i - 1, p.j - 1), p.k.parse()?));
        }
        Ok(LinkageWitness { w, pairs })
    }
}

impl<Q: ExactRational> fmt::Display for LinkageWitness<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = self.w.images().iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "w=[{}] pairs=[", imgs.join(","))?;
        for (m, (a, k)) in self.pairs.iter().enumerate() {
            if m > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}:{k}")?;
        }
        f.write_str("]")
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PairJson {
    pub i: usize,
    pub j: usize,
    pub k: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WitnessJson {
    pub w: Vec<usize>,
    pub pairs: Vec<PairJson>,
}

/// Elements of W_λ, the permutations preserving the classes of
/// {i ~ j : λᵢ − λⱼ ∈ ℤ}, in lexicographic order of image lists.
pub fn integral_weyl_group<Q: ExactRational>(lambda: &Weight<Q>) -> Vec<Perm> {
    let n = lambda.n();
    let class: Vec<usize> = (0..n)
        .map(|i| (0..n).find(|&j| lambda.coord(i).same_coset(lambda.coord(j))).unwrap())
        .collect();
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(n);
    let mut taken = vec![false; n];
    fn go(
        class: &[usize],
        images: &mut Vec<usize>,
        taken: &mut [bool],
        out: &mut Vec<Perm>,
    ) {
        let i = images.len();
        if i == class.len() {
            out.push(Perm::from_images(images.clone()).unwrap());
            return;
        }
        for v in 0..class.len() {
            if !taken[v] && class[v] == class[i] {
                taken[v] = true;
                images.push(v);
                go(class, images, taken, out);
                images.pop();
                taken[v] = false;
            }
        }
    }
    go(&class, &mut images, &mut taken, &mut out);
    out
}

/// Pairs up `open` positions into atypical roots carrying opposite shifts.
fn match_shifts<Q: ExactRational>(
    lambda: &Weight<Q>,
    d: &[Scalar<Q>],
    open: &mut Vec<usize>,
    acc: &mut Vec<(Root, Scalar<Q>)>,
) -> bool {
    let Some(&i) = open.first() else {
        return true;
    };
    for idx in 1..open.len() {
        let j = open[idx];
        if (&d[i] + &d[j]).is_zero() && (lambda.coord(i) + lambda.coord(j)).is_zero() {
            let rest: Vec<usize> = open
                .iter()
                .copied()
                .filter(|&x| x != i && x != j)
                .collect();
            let saved = std::mem::replace(open, rest);
            acc.push((Root::new(i, j), d[i].clone()));
            if match_shifts(lambda, d, open, acc) {
                return true;
            }
            acc.pop();
            *open = saved;
        }
    }
    false
}

/// μ ≈ λ: search for w ∈ W_λ and integers k with μ = w(λ − Σ kα).
///
/// For fixed w the shifts are forced (kᵢ = λᵢ − (w⁻¹μ)ᵢ), so the search over
/// W_λ and the pairings of shifted positions is complete. The first witness in
/// lexicographic order of w is returned.
pub fn linked_approx<Q: ExactRational>(
    lambda: &Weight<Q>,
    mu: &Weight<Q>,
) -> Result<Option<LinkageWitness<Q>>> {
    if lambda.n() != mu.n() {
        return precondition(format!(
            "weights of different rank ({} vs {})",
            lambda.n(),
            mu.n()
        ));
    }
    if !linked_sim(lambda, mu) {
        return Ok(None);
    }
    for w in integral_weyl_group(lambda) {
        let nu = mu.weyl_apply(&w.inverse())?;
        let d: Vec<Scalar<Q>> = lambda
            .coords()
            .iter()
            .zip(nu.coords())
            .map(|(a, b)| a - b)
            .collect();
        if d.iter().any(|x| !x.is_integer()) {
            continue;
        }
        let mut open: Vec<usize> = (0..d.len()).filter(|&i| !d[i].is_zero()).collect();
        let mut pairs = Vec::new();
        if match_shifts(lambda, &d, &mut open, &mut pairs) {
            let witness = LinkageWitness { w, pairs };
            if witness.replay(lambda)? != *mu {
                return Err(Error::Verification(format!(
                    "witness {witness} does not replay {lambda} to {mu}"
                )));
            }
            return Ok(Some(witness));
        }
    }
    Ok(None)
}

/// An element of the free abelian group on {ϵ_a : a ∈ ℤ}.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct WtVector(BTreeMap<i64, i64>);

impl WtVector {
    pub fn zero() -> Self {
        WtVector::default()
    }

    pub fn epsilon(a: i64) -> Self {
        let mut v = WtVector::zero();
        v.add_term(a, 1);
        v
    }

    pub fn add_term(&mut self, a: i64, c: i64) {
        let e = self.0.entry(a).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&a);
        }
    }

    pub fn plus(&self, other: &WtVector) -> WtVector {
        let mut out = self.clone();
        for (&a, &c) in &other.0 {
            out.add_term(a, c);
        }
        out
    }

    pub fn minus(&self, other: &WtVector) -> WtVector {
        let mut out = self.clone();
        for (&a, &c) in &other.0 {
            out.add_term(a, -c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.0.iter().map(|(&a, &c)| (a, c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for WtVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (m, (a, c)) in self.0.iter().enumerate() {
            let sign = if *c < 0 { "-" } else if m > 0 { "+" } else { "" };
            if m > 0 {
                f.write_str(" ")?;
            }
            match c.abs() {
                1 => write!(f, "{sign}e[{a}]")?,
                k => write!(f, "{sign}{k}e[{a}]")?,
            }
        }
        Ok(())
    }
}

/// wt(λ) = Σ_{i≤ℓ} ϵ_{λᵢ−s} − Σ_{i>ℓ} ϵ_{−(λᵢ+s)} for λ ∈ Λ_{s^ℓ}(n).
pub fn wt<Q: ExactRational>(lambda: &Weight<Q>, s: &Scalar<Q>, ell: usize) -> Result<WtVector> {
    if !lambda.in_lambda(s, ell) {
        return precondition(format!("{lambda} is not in Lambda_{{{s}^{ell}}}({})", lambda.n()));
    }
    let mut v = WtVector::zero();
    for (i, c) in lambda.coords().iter().enumerate() {
        if i < ell {
            let a = (c - s).to_integer().ok_or_else(|| overflow(c))?;
            v.add_term(a, 1);
        } else {
            let b = (-&(c + s)).to_integer().ok_or_else(|| overflow(c))?;
            v.add_term(b, -1);
        }
    }
    Ok(v)
}

fn overflow<Q: ExactRational>(c: &Scalar<Q>) -> Error {
    Error::Precondition(format!("coordinate {c} does not fit an i64 index"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type W = Weight<Rational64>;

    fn w(t: &[&str]) -> W {
        W::parse(t).unwrap()
    }

    #[test]
    fn atypicality_examples() {
        assert_eq!(atypicality(&w(&["0+pi*1", "0+pi*-1", "1/3"])), 1);
        assert_eq!(atypicality(&w(&["0", "0", "0"])), 1);
        assert_eq!(atypicality(&w(&["0", "0", "0", "0"])), 2);
        assert_eq!(atypicality(&w(&["2", "-2", "-2", "2"])), 2);
        assert_eq!(atypicality(&w(&["1", "2"])), 0);
    }

    #[test]
    fn central_char_examples() {
        assert!(same_central_char(&w(&["1", "-1", "3"]), &w(&["3", "5", "-5"])));
        assert!(!same_central_char(&w(&["1", "2"]), &w(&["1", "3"])));
        assert!(same_central_char(&w(&["0", "0", "5"]), &w(&["7", "-7", "5"])));
        assert!(!same_central_char(&w(&["0", "5"]), &w(&["7", "5"])));
    }

    #[test]
    fn approx_examples() {
        let a = w(&["1", "2"]);
        let b = w(&["2", "1"]);
        let wit = linked_approx(&a, &b).unwrap().unwrap();
        assert_eq!(wit.w.images(), &[1, 0]);
        assert!(wit.pairs.is_empty());

        let a = w(&["0+s*1", "0+s*-1"]);
        let b = w(&["1+s*1", "-1+s*-1"]);
        let wit = linked_approx(&a, &b).unwrap().unwrap();
        assert!(wit.w.is_identity());
        assert_eq!(wit.pairs, vec![(Root::new(0, 1), Scalar::int(-1))]);

        assert_eq!(linked_approx(&a, &a).unwrap(), Some(LinkageWitness::trivial(2)));
        assert!(linked_approx(&w(&["1", "2"]), &w(&["1", "3"])).unwrap().is_none());
    }

    #[test]
    fn witness_json_round_trip() {
        let wit = LinkageWitness::<Rational64> {
            w: Perm::from_images(vec![1, 2, 0]).unwrap(),
            pairs: vec![(Root::new(0, 1), Scalar::int(-4))],
        };
        let j = wit.to_json();
        assert_eq!(j.w, vec![2, 3, 1]);
        assert_eq!(LinkageWitness::from_json(&j).unwrap(), wit);
        assert_eq!(wit.replay(&w(&["1", "-1", "3"])).unwrap(), w(&["3", "5", "-5"]));
    }

    #[test]
    fn wt_examples() {
        let s: Scalar<Rational64> = "0+s*1".parse().unwrap();
        assert!(wt(&w(&["0+s*1", "0+s*-1"]), &s, 1).unwrap().is_zero());
        let v = wt(&w(&["1+s*1", "0+s*-1"]), &s, 1).unwrap();
        assert_eq!(v, WtVector::epsilon(1).minus(&WtVector::epsilon(0)));
        assert!(wt(&w(&["0+s*1", "0+s*1"]), &s, 1).is_err());
    }
}
