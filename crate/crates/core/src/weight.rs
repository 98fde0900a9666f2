//! Weights of q(n), roots εᵢ − εⱼ, the symmetric-group action and the twisted
//! ("star") action along simple roots.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coord::{CosetClass, ExactRational, Scalar};
use crate::error::{precondition, Result};

/// The root εᵢ − εⱼ, with 0-based indices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Self {
        assert_ne!(i, j, "a root needs two distinct indices");
        Root { i, j }
    }

    /// The simple root ε_{i} − ε_{i+1} (0-based `i`).
    pub fn simple(i: usize) -> Self {
        Root { i, j: i + 1 }
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn is_simple(&self) -> bool {
        self.j == self.i + 1
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.i + 1, self.j + 1)
    }
}

/// All positive roots of q(n) in lexicographic order.
pub fn positive_roots(n: usize) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(Root::new(i, j));
        }
    }
    out
}

/// A permutation of `0..n` stored as its image list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &v in &images {
            if v >= images.len() || seen[v] {
                return precondition(format!("{images:?} is not a permutation"));
            }
            seen[v] = true;
        }
        Ok(Perm(images))
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Perm(inv)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for a in 0..self.0.len() {
            for b in a + 1..self.0.len() {
                if self.0[a] > self.0[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Moves entry `i` of `v` to position `self(i)`.
    pub fn apply<T: Clone>(&self, v: &[T]) -> Vec<T> {
        let mut out = v.to_vec();
        for (i, &w) in self.0.iter().enumerate() {
            out[w] = v[i].clone();
        }
        out
    }
}

/// Every permutation of `0..n`, in lexicographic order of image lists.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(Perm(cur.clone()));
        let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| cur[k] < cur[k + 1]) else {
            return out;
        };
        let l = (k + 1..n).rev().find(|&l| cur[k] < cur[l]).unwrap();
        cur.swap(k, l);
        cur[k + 1..].reverse();
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flag {
    Typical,
    Atypical,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Paired coset classes of a weight in order of appearance, and for each
/// coordinate its class index and sign.
///
/// `Int` comes first, then `Half`, then symbol/rational classes in order of
/// first occurrence. Integer coordinates carry `+`; half-integer coordinates
/// carry the sign of their value; other coordinates carry `+` when they lie in
/// the canonical member of `{s, -s}` (see [`CosetClass::is_canonical`]).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassSignature<Q: ExactRational> {
    pub classes: Vec<CosetClass<Q>>,
    pub labels: Vec<(usize, Sign)>,
}

impl<Q: ExactRational> ClassSignature<Q> {
    /// 1-based coordinate positions with their signs, per class.
    pub fn members(&self, class: usize) -> Vec<(usize, Sign)> {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, (c, _))| *c == class)
            .map(|(pos, (_, sign))| (pos + 1, *sign))
            .collect()
    }
}

impl<Q: ExactRational> fmt::Display for ClassSignature<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, class) in self.classes.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{class}:{{")?;
            for (m, (pos, sign)) in self.members(k).iter().enumerate() {
                if m > 0 {
                    f.write_str(",")?;
                }
                if self.classes[k] == CosetClass::Int {
                    write!(f, "{pos}")?;
                } else {
                    write!(f, "{pos}{sign}")?;
                }
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight<Q: ExactRational> {
    coords: Vec<Scalar<Q>>,
}

impl<Q: ExactRational> Weight<Q> {
    pub fn new(coords: Vec<Scalar<Q>>) -> Result<Self> {
        if coords.is_empty() {
            return precondition("a weight needs n >= 1 coordinates");
        }
        Ok(Weight { coords })
    }

    pub fn zero(n: usize) -> Self {
        Weight {
            coords: vec![Scalar::zero(); n],
        }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight {
            coords: v.iter().map(|&x| Scalar::int(x)).collect(),
        }
    }

    pub fn parse(texts: &[&str]) -> Result<Self> {
        Self::new(texts.iter().map(|t| t.parse()).collect::<Result<_>>()?)
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar<Q>] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Scalar<Q> {
        &self.coords[i]
    }

    pub fn into_coords(self) -> Vec<Scalar<Q>> {
        self.coords
    }

    fn check_root(&self, a: Root) -> Result<()> {
        if a.i >= self.n() || a.j >= self.n() {
            return precondition(format!("root {a} outside q({})", self.n()));
        }
        Ok(())
    }

    /// (λ, α) = λᵢ − λⱼ.
    pub fn pairing(&self, a: Root) -> Scalar<Q> {
        &self.coords[a.i] - &self.coords[a.j]
    }

    /// (λ, ᾱ) = λᵢ + λⱼ.
    pub fn bar_pairing(&self, a: Root) -> Scalar<Q> {
        &self.coords[a.i] + &self.coords[a.j]
    }

    /// λ − kα.
    pub fn minus_root(&self, a: Root, k: &Scalar<Q>) -> Self {
        let mut out = self.clone();
        out.coords[a.i] = &out.coords[a.i] - k;
        out.coords[a.j] = &out.coords[a.j] + k;
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Adds an integer vector.
    pub fn shift(&self, v: &[i64]) -> Self {
        assert_eq!(self.n(), v.len());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(v)
                .map(|(a, &k)| a.add_int(k))
                .collect(),
        }
    }

    /// `self - other` as an integer vector, when integral.
    pub fn integer_offset(&self, other: &Self) -> Option<Vec<i64>> {
        if self.n() != other.n() {
            return None;
        }
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.integer_difference(b))
            .collect()
    }

    /// ℓ(λ), the number of nonzero coordinates.
    pub fn ell(&self) -> usize {
        self.coords.iter().filter(|c| !c.is_zero()).count()
    }

    /// δ(λ) = ℓ(λ) mod 2.
    pub fn delta(&self) -> usize {
        self.ell() % 2
    }

    /// The permutation action: coordinate i moves to position w(i).
    pub fn weyl_apply(&self, w: &Perm) -> Result<Self> {
        if w.len() != self.n() {
            return precondition(format!(
                "permutation of length {} applied to a weight of length {}",
                w.len(),
                self.n()
            ));
        }
        Ok(Weight {
            coords: w.apply(&self.coords),
        })
    }

    pub fn swap(&self, a: Root) -> Self {
        let mut out = self.clone();
        out.coords.swap(a.i, a.j);
        out
    }

    /// s_α∗λ for a simple root α: s_αλ when (λ, ᾱ) ≠ 0, else s_αλ − α.
    pub fn star_action(&self, a: Root) -> Result<(Self, Flag)> {
        self.check_root(a)?;
        if !a.is_simple() {
            return precondition(format!("{a} is not a simple root"));
        }
        let swapped = self.swap(a);
        if self.bar_pairing(a).is_zero() {
            Ok((swapped.minus_root(a, &Scalar::int(1)), Flag::Atypical))
        } else {
            Ok((swapped, Flag::Typical))
        }
    }

    /// λ ∈ Λ_{s^ℓ}(n): λᵢ ≡ s for i ≤ ℓ and λᵢ ≡ −s for i > ℓ.
    pub fn in_lambda(&self, s: &Scalar<Q>, ell: usize) -> bool {
        ell <= self.n()
            && self.coords.iter().enumerate().all(|(i, c)| {
                if i < ell {
                    (c - s).is_integer()
                } else {
                    (c + s).is_integer()
                }
            })
    }

    /// λ ∈ Λ⁺_{s^ℓ}(n): membership plus strict decrease inside each of the
    /// two index groups.
    pub fn is_dominant(&self, s: &Scalar<Q>, ell: usize) -> bool {
        self.in_lambda(s, ell) && strictly_decreasing_groups(&self.coords, ell)
    }

    pub fn class_signature(&self) -> ClassSignature<Q> {
        let mut classes: Vec<CosetClass<Q>> = Vec::new();
        let raw: Vec<CosetClass<Q>> = self.coords.iter().map(|c| c.coset_class()).collect();
        for special in [CosetClass::Int, CosetClass::Half] {
            if raw.contains(&special) {
                classes.push(special);
            }
        }
        for c in &raw {
            if let CosetClass::Irr(_) = c {
                let canon = c.canonical();
                if !classes.contains(&canon) {
                    classes.push(canon);
                }
            }
        }
        let labels = raw
            .iter()
            .zip(&self.coords)
            .map(|(c, value)| {
                let canon = c.canonical();
                let idx = classes.iter().position(|x| *x == canon).unwrap();
                let sign = match c {
                    CosetClass::Int => Sign::Plus,
                    CosetClass::Half if value.rational_part().is_negative() => Sign::Minus,
                    CosetClass::Half => Sign::Plus,
                    CosetClass::Irr(_) if c.is_canonical() => Sign::Plus,
                    CosetClass::Irr(_) => Sign::Minus,
                };
                (idx, sign)
            })
            .collect();
        ClassSignature { classes, labels }
    }

    /// Coordinates as text.
    pub fn to_texts(&self) -> Vec<String> {
        self.coords.iter().map(|c| c.to_string()).collect()
    }

    pub fn symbols(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .coords
            .iter()
            .flat_map(|c| c.symbols().map(str::to_string))
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Strict decrease on indices `0..ell` and on `ell..n`, comparing through
/// integer differences. Pairs whose difference is not an integer fail.
pub(crate) fn strictly_decreasing_groups<Q: ExactRational>(coords: &[Scalar<Q>], ell: usize) -> bool {
    (0..coords.len().saturating_sub(1))
        .filter(|&i| i + 1 != ell)
        .all(|i| matches!(coords[i].integer_difference(&coords[i + 1]), Some(d) if d > 0))
}

impl<Q: ExactRational> fmt::Display for Weight<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl<Q: ExactRational> Serialize for Weight<Q> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

impl<'de, Q: ExactRational> Deserialize<'de> for Weight<Q> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let coords = Vec::<Scalar<Q>>::deserialize(d)?;
        Weight::new(coords).map_err(serde::de::Error::custom)
    }
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
    fn pairings() {
        let l = w(&["1", "-1"]);
        assert!(l.bar_pairing(Root::simple(0)).is_zero());
        assert_eq!(l.pairing(Root::simple(0)).to_integer(), Some(2));
    }

    #[test]
    fn ell_and_delta() {
        let l = w(&["0", "3/2", "0+pi*1"]);
        assert_eq!((l.ell(), l.delta()), (2, 0));
    }

    #[test]
    fn weyl_cycle() {
        let l = w(&["1", "2", "3"]);
        let cyc = Perm::from_images(vec![1, 2, 0]).unwrap();
        assert_eq!(l.weyl_apply(&cyc).unwrap(), w(&["3", "1", "2"]));
    }

    #[test]
    fn star_examples() {
        let (r, f) = w(&["2", "-2"]).star_action(Root::simple(0)).unwrap();
        assert_eq!((r, f), (w(&["-3", "3"]), Flag::Atypical));
        let (r, f) = w(&["0+pi*-1", "0+pi*1", "0+pi*-1"])
            .star_action(Root::simple(0))
            .unwrap();
        assert_eq!(f, Flag::Atypical);
        assert_eq!(r, w(&["-1+pi*1", "1+pi*-1", "0+pi*-1"]));
        let (r, f) = w(&["1", "0+pi*1"]).star_action(Root::simple(0)).unwrap();
        assert_eq!((r, f), (w(&["0+pi*1", "1"]), Flag::Typical));
    }

    #[test]
    fn signature_examples() {
        let l = w(&["1/5", "1", "0+pi*-1", "3/2", "0+pi*1", "-3/2", "0+pi*-1"]);
        assert_eq!(
            l.class_signature().to_string(),
            "INT:{2}, HALF:{4+,6-}, IRR(1/5):{1+}, IRR(0+pi*1):{3-,5+,7-}"
        );
        assert_eq!(w(&["3", "-1"]).class_signature().to_string(), "INT:{1,2}");
    }

    #[test]
    fn dominance() {
        let s: Scalar<Rational64> = "0+s*1".parse().unwrap();
        assert!(w(&["0+s*1", "0+s*-1"]).is_dominant(&s, 1));
        assert!(w(&["1+s*1", "0+s*1", "0+s*-1"]).is_dominant(&s, 2));
        assert!(!w(&["0+s*1", "1+s*1", "0+s*-1"]).is_dominant(&s, 2));
        assert!(!w(&["0+s*1", "0+s*1"]).in_lambda(&s, 1));
    }

    #[test]
    fn perms_lexicographic() {
        let ps = all_perms(3);
        assert_eq!(ps.len(), 6);
        assert!(ps.windows(2).all(|p| p[0] < p[1]));
        assert!(ps[0].is_identity());
    }
}
