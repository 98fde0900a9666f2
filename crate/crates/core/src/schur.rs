//! Schur polynomials in m variables: Jacobi–Trudi evaluation, the Pieri rule
//! for multiplication by x₁ + … + x_m, and straightening of alternant indices.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;

use crate::error::{precondition, Result};

pub use crate::oracle::schur_tableaux;

/// Laurent polynomial in `nvars` variables with integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, i64>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], 1)
    }

    pub fn monomial(exps: Vec<i64>, c: i64) -> Self {
        let mut p = Poly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// x₁ + … + x_m.
    pub fn power_sum_one(nvars: usize) -> Self {
        let mut p = Poly::zero(nvars);
        for i in 0..nvars {
            let mut e = vec![0; nvars];
            e[i] = 1;
            p.add_term(e, 1);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<i64>, c: i64) {
        assert_eq!(exps.len(), self.nvars);
        if c == 0 {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: i64) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, &v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(-1))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut acc: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let e: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_insert(0) += ca * cb;
            }
        }
        acc.retain(|_, v| *v != 0);
        Poly {
            nvars: self.nvars,
            terms: acc,
        }
    }

    /// Multiplies by (x₁⋯x_m)^k.
    pub fn twist(&self, k: i64) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| (e.iter().map(|x| x + k).collect(), c))
                .collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (m, (e, c)) in self.terms.iter().rev().enumerate() {
            if m > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (i, k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{k}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

/// Complete homogeneous symmetric polynomial h_k(x₁, …, x_m).
pub fn complete_homogeneous(k: i64, m: usize) -> Poly {
    let mut p = Poly::zero(m);
    if k < 0 {
        return p;
    }
    fn fill(rest: i64, i: usize, cur: &mut Vec<i64>, out: &mut Poly) {
        if i + 1 == cur.len() {
            cur[i] = rest;
            out.add_term(cur.clone(), 1);
            return;
        }
        for v in 0..=rest {
            cur[i] = v;
            fill(rest - v, i + 1, cur, out);
        }
    }
    if m == 0 {
        if k == 0 {
            p.add_term(vec![], 1);
        }
        return p;
    }
    fill(k, 0, &mut vec![0; m], &mut p);
    p
}

/// A weakly decreasing integer index for a Schur polynomial in `m` variables.
///
/// Indices shorter than `m` are padded with zeros (only allowed when the last
/// entry is nonnegative). Indices longer than `m` are kept when their entries
/// are nonnegative; the corresponding polynomial is zero unless the extra
/// entries vanish.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PartitionIndex {
    parts: Vec<i64>,
    m: usize,
}

impl PartitionIndex {
    pub fn new(entries: &[i64], m: usize) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return precondition(format!("{entries:?} is not weakly decreasing"));
        }
        let mut parts = entries.to_vec();
        if parts.len() < m {
            if parts.last().is_some_and(|&x| x < 0) {
                return precondition(format!(
                    "{entries:?} has a negative entry and fewer than {m} parts"
                ));
            }
            parts.resize(m, 0);
        } else if parts.len() > m {
            if parts[m..].iter().any(|&x| x < 0) {
                return precondition(format!(
                    "{entries:?} has more than {m} parts and a negative entry"
                ));
            }
            while parts.len() > m && parts.last() == Some(&0) {
                parts.pop();
            }
        }
        Ok(PartitionIndex { parts, m })
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Nonzero parts, for display of ordinary partitions.
    pub fn trimmed(&self) -> Vec<i64> {
        let mut v = self.parts.clone();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Splits into a partition (last of the first m entries made zero) and the
    /// power of x₁⋯x_m it was shifted by.
    pub fn normalize(&self) -> (Vec<i64>, i64) {
        if self.parts.len() == self.m && self.m > 0 {
            let t = self.parts[self.m - 1];
            (self.parts.iter().map(|x| x - t).collect(), t)
        } else {
            (self.parts.clone(), 0)
        }
    }
}

impl fmt::Display for PartitionIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.trimmed().iter().map(|x| x.to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

/// Determinant of a square matrix of polynomials by cofactor expansion along
/// the first row, memoised on the set of used columns.
fn poly_det(rows: &[Vec<Poly>], nvars: usize) -> Poly {
    let size = rows.len();
    let mut memo: HashMap<(usize, u32), Poly> = HashMap::new();
    fn go(
        r: usize,
        used: u32,
        rows: &[Vec<Poly>],
        nvars: usize,
        memo: &mut HashMap<(usize, u32), Poly>,
    ) -> Poly {
        if r == rows.len() {
            return Poly::one(nvars);
        }
        if let Some(p) = memo.get(&(r, used)) {
            return p.clone();
        }
        let mut acc = Poly::zero(nvars);
        let mut sign = 1;
        for c in 0..rows.len() {
            if used & (1 << c) != 0 {
                continue;
            }
            let entry = &rows[r][c];
            if !entry.is_zero() {
                let minor = go(r + 1, used | (1 << c), rows, nvars, memo);
                acc = acc.add(&entry.mul(&minor).scale(sign));
            }
            sign = -sign;
        }
        memo.insert((r, used), acc.clone());
        acc
    }
    assert!(size < 32);
    go(0, 0, rows, nvars, &mut memo)
}

/// s_μ(x₁, …, x_m) by the Jacobi–Trudi determinant det(h_{μᵢ−i+j}).
pub fn schur_jt(mu: &PartitionIndex) -> Poly {
    let (p, twist) = mu.normalize();
    let m = mu.m();
    let size = p.len();
    let mut h_cache: HashMap<i64, Poly> = HashMap::new();
    let mut rows = Vec::with_capacity(size);
    for i in 0..size {
        let mut row = Vec::with_capacity(size);
        for j in 0..size {
            let k = p[i] - i as i64 + j as i64;
            row.push(
                h_cache
                    .entry(k)
                    .or_insert_with(|| complete_homogeneous(k, m))
                    .clone(),
            );
        }
        rows.push(row);
    }
    poly_det(&rows, m).twist(twist)
}

/// The indices ν = μ + eᵢ that are weakly decreasing (within m parts), so that
/// s_μ · (x₁ + … + x_m) = Σ s_ν.
pub fn pieri_expand(mu: &PartitionIndex) -> Vec<PartitionIndex> {
    let m = mu.m();
    let mut parts = mu.parts().to_vec();
    if parts.len() > m {
        return Vec::new();
    }
    parts.resize(m, 0);
    let mut out = Vec::new();
    for i in 0..m {
        if i == 0 || parts[i - 1] > parts[i] {
            let mut nu = parts.clone();
            nu[i] += 1;
            out.push(PartitionIndex { parts: nu, m });
        }
    }
    out
}

/// Sorts alternant exponents into strictly decreasing order.
///
/// Returns `None` when two exponents coincide (the alternant vanishes),
/// otherwise the sign of the sorting permutation and the sorted exponents.
pub fn straighten(alternant: &[i64]) -> Option<(i64, Vec<i64>)> {
    let mut v = alternant.to_vec();
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] < v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, v))
}

/// Straightening of an arbitrary integer index of length m: s_raw equals
/// sign · s_ν, or zero, through the shift by ρ = (m−1, …, 0).
pub fn straighten_index(raw: &[i64]) -> Option<(i64, PartitionIndex)> {
    let m = raw.len();
    let shifted: Vec<i64> = raw
        .iter()
        .enumerate()
        .map(|(i, x)| x + (m - 1 - i) as i64)
        .collect();
    let (sign, sorted) = straighten(&shifted)?;
    let parts = sorted
        .iter()
        .enumerate()
        .map(|(i, x)| x - (m - 1 - i) as i64)
        .collect();
    Some((sign, PartitionIndex { parts, m }))
}
