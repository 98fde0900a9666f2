//! The zigzag algebra on the vertices −N..=N, in its opposite presentation:
//! loops zᵢ, arrows xᵢ: i → i+1 and yᵢ: i+1 → i with
//! xᵢyᵢ = zᵢ₊₁, yᵢxᵢ = zᵢ and every other product of arrows zero.
//!
//! `u·v` means "first v, then u". Structural facts (radical layers, socles,
//! submodule lattices) are computed by exact linear algebra from the
//! multiplication table, never read off the presentation.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::blockone::BlockChart;
use crate::coord::ExactRational;
use crate::error::{precondition, Error, Result};
use crate::linalg::{kernel, Subspace};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Kind {
    E,
    Z,
    X,
    Y,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct BasisId {
    pub kind: Kind,
    pub index: i64,
}

impl BasisId {
    pub fn e(i: i64) -> Self {
        BasisId { kind: Kind::E, index: i }
    }
    pub fn z(i: i64) -> Self {
        BasisId { kind: Kind::Z, index: i }
    }
    pub fn x(i: i64) -> Self {
        BasisId { kind: Kind::X, index: i }
    }
    pub fn y(i: i64) -> Self {
        BasisId { kind: Kind::Y, index: i }
    }

    pub fn source(self) -> i64 {
        match self.kind {
            Kind::E | Kind::Z | Kind::X => self.index,
            Kind::Y => self.index + 1,
        }
    }

    pub fn target(self) -> i64 {
        match self.kind {
            Kind::E | Kind::Z | Kind::Y => self.index,
            Kind::X => self.index + 1,
        }
    }

    pub fn is_idempotent(self) -> bool {
        self.kind == Kind::E
    }

    fn lower(self) -> String {
        format!("{}_{}", format!("{:?}", self.kind).to_lowercase(), self.index)
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.index)
    }
}

impl std::str::FromStr for BasisId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('E') => Kind::E,
            Some('Z') => Kind::Z,
            Some('X') => Kind::X,
            Some('Y') => Kind::Y,
            _ => return Err(bad("expected E, Z, X or Y")),
        };
        let index = chars.as_str().parse().map_err(|_| bad("bad vertex index"))?;
        Ok(BasisId { kind, index })
    }
}

/// A linear combination of basis paths; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ZigzagElement<Q: ExactRational> {
    terms: BTreeMap<BasisId, Q>,
}

impl<Q: ExactRational> ZigzagElement<Q> {
    pub fn zero() -> Self {
        ZigzagElement { terms: BTreeMap::new() }
    }

    pub fn basis(b: BasisId) -> Self {
        let mut out = Self::zero();
        out.add_term(b, Q::one());
        out
    }

    pub fn add_term(&mut self, b: BasisId, c: Q) {
        let v = self.terms.remove(&b).unwrap_or_else(Q::zero) + c;
        if !v.is_zero() {
            self.terms.insert(b, v);
        }
    }

    pub fn terms(&self) -> &BTreeMap<BasisId, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, b: BasisId) -> Q {
        self.terms.get(&b).cloned().unwrap_or_else(Q::zero)
    }
}

impl<Q: ExactRational> fmt::Display for ZigzagElement<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{mag}*{b}")?;
            }
        }
        Ok(())
    }
}

/// A deliberately wrong relation, for negative controls.
#[doc(hidden)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Fault {
    /// xᵢyᵢ lands on zᵢ instead of zᵢ₊₁.
    MisplacedLoop(i64),
}

/// The algebra on −N..=N with its precomputed multiplication table.
#[derive(Clone, Debug)]
pub struct ZigzagAlgebra<Q: ExactRational> {
    window: usize,
    basis: Vec<BasisId>,
    index: HashMap<BasisId, usize>,
    /// table[u][v] = u·v, either zero or a single basis element.
    table: Vec<Vec<Option<usize>>>,
    _coeff: std::marker::PhantomData<Q>,
}

/// One named comparison outcome.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, failures: Vec<String>, ok_detail: String) -> Self {
        CheckResult {
            name: name.to_string(),
            passed: failures.is_empty(),
            detail: if failures.is_empty() { ok_detail } else { failures.join("; ") },
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ChartComparison {
    pub checks: Vec<CheckResult>,
    pub notes: Vec<String>,
}

impl ChartComparison {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// rad ⊇ rad² ⊇ rad³ ⊇ …, computed until the zero space.
#[derive(Clone, Debug)]
pub struct RadicalSeries<Q: ExactRational> {
    pub layers: Vec<Subspace<Q>>,
}

impl<Q: ExactRational> RadicalSeries<Q> {
    pub fn dims(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.dim()).collect()
    }

    /// The least k with rad^k = 0.
    pub fn nilpotency_index(&self) -> usize {
        self.layers.iter().position(|l| l.dim() == 0).map_or(self.layers.len() + 1, |p| p + 1)
    }
}

/// The left submodules of a projective A·E(i).
#[derive(Clone, Debug)]
pub struct ProjectiveStructure<Q: ExactRational> {
    pub vertex: i64,
    pub boundary: bool,
    pub module: Subspace<Q>,
    pub radical: Subspace<Q>,
    pub radical_squared: Subspace<Q>,
    pub socle: Subspace<Q>,
    /// Proper nonzero submodules, smallest first.
    pub submodules: Vec<Subspace<Q>>,
    /// Vertices j with E(j)·(rad/rad²) ≠ 0.
    pub top_of_radical: Vec<i64>,
}

impl<Q: ExactRational> ZigzagAlgebra<Q> {
    pub fn build(window: usize) -> Result<Self> {
        Self::build_inner(window, None)
    }

    #[doc(hidden)]
    pub fn build_with_fault(window: usize, fault: Fault) -> Result<Self> {
        Self::build_inner(window, Some(fault))
    }

    fn build_inner(window: usize, fault: Option<Fault>) -> Result<Self> {
        if window == 0 {
            return precondition("the zigzag window must be at least 1");
        }
        let n = window as i64;
        let mut basis = Vec::new();
        for i in -n..=n {
            basis.push(BasisId::e(i));
        }
        for i in -n..=n {
            basis.push(BasisId::z(i));
        }
        for i in -n..n {
            basis.push(BasisId::x(i));
        }
        for i in -n..n {
            basis.push(BasisId::y(i));
        }
        let index: HashMap<BasisId, usize> = basis.iter().enumerate().map(|(k, b)| (*b, k)).collect();
        let product = |u: BasisId, v: BasisId| -> Option<BasisId> {
            if u.source() != v.target() {
                return None;
            }
            match (u.kind, v.kind) {
                (Kind::E, _) => Some(v),
                (_, Kind::E) => Some(u),
                (Kind::X, Kind::Y) if u.index == v.index => match fault {
                    Some(Fault::MisplacedLoop(i)) if i == u.index => Some(BasisId::z(u.index)),
                    _ => Some(BasisId::z(u.index + 1)),
                },
                (Kind::Y, Kind::X) if u.index == v.index => Some(BasisId::z(u.index)),
                _ => None,
            }
        };
        let table = basis
            .iter()
            .map(|&u| basis.iter().map(|&v| product(u, v).map(|b| index[&b])).collect())
            .collect();
        Ok(ZigzagAlgebra {
            window,
            basis,
            index,
            table,
            _coeff: std::marker::PhantomData,
        })
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisId] {
        &self.basis
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<i64> {
        -(self.window as i64)..=self.window as i64
    }

    pub fn is_boundary(&self, i: i64) -> bool {
        i.abs() == self.window as i64
    }

    pub fn contains(&self, b: BasisId) -> bool {
        self.index.contains_key(&b)
    }

    fn require(&self, b: BasisId) -> Result<usize> {
        self.index
            .get(&b)
            .copied()
            .ok_or_else(|| Error::Precondition(format!("{b} is not a basis element for window {}", self.window)))
    }

    fn require_vertex(&self, i: i64) -> Result<()> {
        if i.abs() > self.window as i64 {
            return precondition(format!("vertex {i} is outside -{0}..={0}", self.window));
        }
        Ok(())
    }

    pub fn multiply_basis(&self, u: BasisId, v: BasisId) -> Result<ZigzagElement<Q>> {
        let (a, b) = (self.require(u)?, self.require(v)?);
        Ok(match self.table[a][b] {
            Some(c) => ZigzagElement::basis(self.basis[c]),
            None => ZigzagElement::zero(),
        })
    }

    pub fn multiply(&self, u: &ZigzagElement<Q>, v: &ZigzagElement<Q>) -> Result<ZigzagElement<Q>> {
        let mut out = ZigzagElement::zero();
        for (a, ca) in &u.terms {
            let ia = self.require(*a)?;
            for (b, cb) in &v.terms {
                if let Some(c) = self.table[ia][self.require(*b)?] {
                    out.add_term(self.basis[c], ca.clone() * cb.clone());
                }
            }
        }
        Ok(out)
    }

    /// Σ E(i).
    pub fn unit(&self) -> ZigzagElement<Q> {
        let mut out = ZigzagElement::zero();
        for i in self.vertices() {
            out.add_term(BasisId::e(i), Q::one());
        }
        out
    }

    /// Coordinates of an element in the order of [`Self::basis`].
    pub fn coordinates(&self, e: &ZigzagElement<Q>) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        for (b, c) in &e.terms {
            v[self.index[b]] = c.clone();
        }
        v
    }

    pub fn element(&self, v: &[Q]) -> ZigzagElement<Q> {
        let mut out = ZigzagElement::zero();
        for (k, c) in v.iter().enumerate() {
            out.add_term(self.basis[k], c.clone());
        }
        out
    }

    fn unit_vector(&self, k: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[k] = Q::one();
        v
    }

    fn mul_dense(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (a, ca) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, cb) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                if let Some(c) = self.table[a][b] {
                    out[c] = out[c].clone() + ca.clone() * cb.clone();
                }
            }
        }
        out
    }

    fn span(&self, vectors: Vec<Vec<Q>>) -> Subspace<Q> {
        Subspace::span(self.dim(), vectors)
    }

    /// span{u·v : u ∈ left, v ∈ right}.
    fn product_space(&self, left: &Subspace<Q>, right: &Subspace<Q>) -> Subspace<Q> {
        let mut vs = Vec::new();
        for u in left.basis() {
            for v in right.basis() {
                vs.push(self.mul_dense(u, v));
            }
        }
        self.span(vs)
    }

    fn whole(&self) -> Subspace<Q> {
        self.span((0..self.dim()).map(|k| self.unit_vector(k)).collect())
    }

    /// Triples (u, v, w) of basis elements with (u·v)·w ≠ u·(v·w).
    pub fn associativity_failures(&self) -> Vec<(BasisId, BasisId, BasisId)> {
        let d = self.dim();
        let mut out = Vec::new();
        for a in 0..d {
            for b in 0..d {
                let ab = self.table[a][b];
                for c in 0..d {
                    let left = ab.and_then(|x| self.table[x][c]);
                    let right = self.table[b][c].and_then(|x| self.table[a][x]);
                    if left != right {
                        out.push((self.basis[a], self.basis[b], self.basis[c]));
                    }
                }
            }
        }
        out
    }

    /// Names of the defining relations that the table violates. Covers the
    /// idempotent rules and every product of two non-idempotent paths.
    pub fn relation_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for &u in &self.basis {
            for &v in &self.basis {
                let (expected, name) = match (u.kind, v.kind) {
                    (Kind::E, _) => {
                        let e = (u.index == v.target()).then_some(v);
                        (e, format!("{} {} = {}", u.lower(), v.lower(), e.map_or("0".into(), |b| b.lower())))
                    }
                    (_, Kind::E) => {
                        let e = (v.index == u.source()).then_some(u);
                        (e, format!("{} {} = {}", u.lower(), v.lower(), e.map_or("0".into(), |b| b.lower())))
                    }
                    (Kind::X, Kind::Y) if u.index == v.index => {
                        let z = BasisId::z(u.index + 1);
                        (Some(z), format!("{} {} = {}", u.lower(), v.lower(), z.lower()))
                    }
                    (Kind::Y, Kind::X) if u.index == v.index => {
                        let z = BasisId::z(u.index);
                        (Some(z), format!("{} {} = {}", u.lower(), v.lower(), z.lower()))
                    }
                    _ => (None, format!("{} {} = 0", u.lower(), v.lower())),
                };
                let got = self.table[self.index[&u]][self.index[&v]].map(|k| self.basis[k]);
                if got != expected {
                    out.push(name);
                }
            }
        }
        out
    }

    /// The relation xᵢ∗yᵢ = yᵢ₋₁∗xᵢ₋₁ of the opposite algebra (a∗b = b·a),
    /// checked wherever both sides are defined.
    pub fn opposite_relation_failures(&self) -> Vec<String> {
        let n = self.window as i64;
        let mut out = Vec::new();
        for i in (-n + 1)..n {
            let lhs = self.table[self.index[&BasisId::y(i)]][self.index[&BasisId::x(i)]];
            let rhs = self.table[self.index[&BasisId::x(i - 1)]][self.index[&BasisId::y(i - 1)]];
            if lhs != rhs || lhs.is_none() {
                out.push(format!("x_{i}*y_{i} = y_{}*x_{}", i - 1, i - 1));
            }
        }
        out
    }

    /// Σ E(i) is a two-sided unit and E(i)·E(j) = δᵢⱼE(i).
    pub fn idempotent_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        let one = self.unit();
        for &b in &self.basis {
            let e = ZigzagElement::basis(b);
            let l = self.multiply(&one, &e).unwrap();
            let r = self.multiply(&e, &one).unwrap();
            if l != e || r != e {
                out.push(format!("1*{b} = {b} = {b}*1"));
            }
        }
        for i in self.vertices() {
            for j in self.vertices() {
                let p = self.multiply_basis(BasisId::e(i), BasisId::e(j)).unwrap();
                let expected = if i == j { ZigzagElement::basis(BasisId::e(i)) } else { ZigzagElement::zero() };
                if p != expected {
                    out.push(format!("E{i}*E{j}"));
                }
            }
        }
        out
    }

    /// The two-sided ideal generated by the arrows.
    pub fn radical(&self) -> Subspace<Q> {
        let arrows: Vec<Vec<Q>> = (0..self.dim())
            .filter(|&k| matches!(self.basis[k].kind, Kind::X | Kind::Y))
            .map(|k| self.unit_vector(k))
            .collect();
        let whole = self.whole();
        let mut cur = self.span(arrows);
        loop {
            let next = cur
                .sum(&self.product_space(&whole, &cur))
                .sum(&self.product_space(&cur, &whole));
            if next.dim() == cur.dim() {
                return cur;
            }
            cur = next;
        }
    }

    pub fn radical_series(&self) -> RadicalSeries<Q> {
        let rad = self.radical();
        let mut layers = vec![rad.clone()];
        while layers.last().unwrap().dim() > 0 && layers.len() <= self.dim() {
            let next = self.product_space(layers.last().unwrap(), &rad);
            layers.push(next);
        }
        RadicalSeries { layers }
    }

    /// Checks that the radical is a nilpotent two-sided ideal whose quotient
    /// is spanned by the images of the E(i), multiplying as orthogonal
    /// idempotents. Returns the dimension of A/rad.
    pub fn verify_radical(&self) -> Result<usize> {
        let series = self.radical_series();
        let rad = &series.layers[0];
        let whole = self.whole();
        if !rad.contains_space(&self.product_space(&whole, rad)) || !rad.contains_space(&self.product_space(rad, &whole)) {
            return Err(Error::Verification("radical is not a two-sided ideal".into()));
        }
        if series.layers.last().unwrap().dim() != 0 {
            return Err(Error::Verification("radical is not nilpotent".into()));
        }
        let idem: Vec<Vec<Q>> = self.vertices().map(|i| self.unit_vector(self.index[&BasisId::e(i)])).collect();
        let quotient = rad.sum(&self.span(idem));
        if quotient.dim() != self.dim() || quotient.dim() - rad.dim() != 2 * self.window + 1 {
            return Err(Error::Verification("idempotents do not span A/rad".into()));
        }
        if !self.idempotent_failures().is_empty() {
            return Err(Error::Verification("E(i) are not orthogonal idempotents".into()));
        }
        Ok(self.dim() - rad.dim())
    }

    /// dim E(j)·A·E(i).
    pub fn hom_dim(&self, i: i64, j: i64) -> Result<usize> {
        self.require_vertex(i)?;
        self.require_vertex(j)?;
        let (ei, ej) = (self.unit_vector(self.index[&BasisId::e(i)]), self.unit_vector(self.index[&BasisId::e(j)]));
        let vs = (0..self.dim())
            .map(|k| self.mul_dense(&ej, &self.mul_dense(&self.unit_vector(k), &ei)))
            .collect();
        Ok(self.span(vs).dim())
    }

    /// cartan[i][j] = dim E(j)·A·E(i), indices shifted by N.
    pub fn cartan(&self) -> Vec<Vec<usize>> {
        self.vertices()
            .map(|i| self.vertices().map(|j| self.hom_dim(i, j).unwrap()).collect())
            .collect()
    }

    /// P = A·E(i) and its lattice of left submodules.
    pub fn projective(&self, i: i64) -> Result<ProjectiveStructure<Q>> {
        self.require_vertex(i)?;
        let ei = Subspace::span(self.dim(), vec![self.unit_vector(self.index[&BasisId::e(i)])]);
        let whole = self.whole();
        let module = self.product_space(&whole, &ei);
        let rad = self.radical();
        let radical = self.product_space(&rad, &module);
        let radical_squared = self.product_space(&rad, &radical);
        if module.dim() != radical.dim() + 1 {
            return Err(Error::Verification(format!("A*E({i}) does not have a simple top")));
        }

        let columns: Vec<Vec<Q>> = module
            .basis()
            .iter()
            .map(|p| rad.basis().iter().flat_map(|r| self.mul_dense(r, p)).collect())
            .collect();
        let socle_vectors = kernel(&columns)
            .into_iter()
            .map(|c| {
                let mut v = vec![Q::zero(); self.dim()];
                for (coef, p) in c.iter().zip(module.basis()) {
                    for (slot, x) in v.iter_mut().zip(p) {
                        *slot = slot.clone() + coef.clone() * x.clone();
                    }
                }
                v
            })
            .collect();
        let socle = self.span(socle_vectors);

        let mut weight_spaces = Vec::new();
        let mut top_of_radical = Vec::new();
        for j in self.vertices() {
            let ej = Subspace::span(self.dim(), vec![self.unit_vector(self.index[&BasisId::e(j)])]);
            let piece = self.product_space(&ej, &radical);
            match piece.dim() {
                0 => {}
                1 => weight_spaces.push(piece),
                d => {
                    return Err(Error::Verification(format!(
                        "E({j}) rad P({i}) has dimension {d}; the lattice is not multiplicity free"
                    )))
                }
            }
            if self.product_space(&ej, &radical).dim() > self.product_space(&ej, &radical_squared).dim() {
                top_of_radical.push(j);
            }
        }
        // Submodules of rad P are sums of weight spaces because each E(j)
        // acts as a projection.
        let mut submodules = Vec::new();
        for mask in 1u64..(1u64 << weight_spaces.len()) {
            let cand = weight_spaces
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .fold(Subspace::zero(self.dim()), |acc, (_, w)| acc.sum(w));
            if cand.contains_space(&self.product_space(&whole, &cand)) {
                submodules.push(cand);
            }
        }
        submodules.sort_by_key(|s| s.dim());
        Ok(ProjectiveStructure {
            vertex: i,
            boundary: self.is_boundary(i),
            module,
            radical,
            radical_squared,
            socle,
            submodules,
            top_of_radical,
        })
    }

    /// Basis labels of a subspace spanned by basis elements; mixed vectors
    /// are printed as combinations.
    pub fn describe(&self, space: &Subspace<Q>) -> Vec<String> {
        let mut rows: Vec<(Option<usize>, String)> = space
            .basis()
            .iter()
            .map(|v| (v.iter().position(|c| !c.is_zero()), self.element(v).to_string()))
            .collect();
        rows.sort();
        rows.into_iter().map(|(_, t)| t).collect()
    }

    /// Nonzero products of basis elements, as `u*v = w` lines.
    pub fn table_lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (a, &u) in self.basis.iter().enumerate() {
            for (b, &v) in self.basis.iter().enumerate() {
                if let Some(c) = self.table[a][b] {
                    out.push(format!("{u}*{v} = {}", self.basis[c]));
                }
            }
        }
        out
    }

    /// Compares the algebra with the chart of an atypicality-one block:
    /// window, interior Cartan entries, quiver edges, the relation pattern
    /// and the Loewy length. Boundary vertices are reported, not compared.
    pub fn compare_with_chart(&self, chart: &BlockChart<Q>) -> Result<ChartComparison> {
        if chart.window != self.window {
            return precondition(format!(
                "chart window {} differs from algebra window {}",
                chart.window, self.window
            ));
        }
        Ok(self.compare_inner(chart))
    }

    fn compare_inner(&self, chart: &BlockChart<Q>) -> ChartComparison {
        let n = self.window as i64;
        let mut checks = Vec::new();
        let notes = vec![format!("boundary vertices {} and {} are not compared", -n, n)];

        let mut bad = Vec::new();
        let mut count = 0;
        for i in (-n + 1)..n {
            for j in self.vertices() {
                count += 1;
                let a = self.hom_dim(i, j).unwrap() as i64;
                let c = chart.hom_dim(i, j);
                if a != c {
                    bad.push(format!("hom({i},{j}): algebra {a}, chart {c}"));
                }
            }
        }
        checks.push(CheckResult::new("cartan", bad, format!("{count} interior entries agree")));

        let mut bad = Vec::new();
        for i in -n..n {
            let arrows = self.contains(BasisId::x(i)) && self.contains(BasisId::y(i));
            match (arrows, chart.has_edge(i, i + 1)) {
                (true, false) => bad.push(format!("missing edge {i}--{}", i + 1)),
                (false, true) => bad.push(format!("extra edge {i}--{}", i + 1)),
                _ => {}
            }
        }
        for &(a, b) in &chart.edges {
            if b != a + 1 {
                bad.push(format!("extra edge {a}--{b}"));
            }
        }
        checks.push(CheckResult::new("edges", bad, format!("{} nearest-neighbour edges", 2 * n)));

        let mut bad = self.relation_failures();
        bad.extend(self.opposite_relation_failures());
        checks.push(CheckResult::new("relations", bad, "x_i y_i = z_{i+1}, y_i x_i = z_i".into()));

        let series = self.radical_series();
        let dims = series.dims();
        let mut bad = Vec::new();
        if series.nilpotency_index() != 3 {
            bad.push(format!("radical layers {dims:?}"));
        }
        let assoc = self.associativity_failures();
        if let Some((u, v, w)) = assoc.first() {
            bad.push(format!("({u}*{v})*{w} != {u}*({v}*{w})"));
        }
        checks.push(CheckResult::new("loewy", bad, format!("radical layers {dims:?}")));

        ChartComparison { checks, notes }
    }
}

/// The comparison for a chart of window 0, where every vertex is a boundary
/// vertex: nothing is compared and the result passes.
pub fn compare_degenerate<Q: ExactRational>(chart: &BlockChart<Q>) -> Result<ChartComparison> {
    if chart.window != 0 {
        return precondition("compare_degenerate expects a chart of window 0");
    }
    Ok(ChartComparison {
        checks: Vec::new(),
        notes: vec!["window 0: the only vertex is a boundary vertex; nothing compared".into()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type A = ZigzagAlgebra<Rational64>;

    #[test]
    fn dimensions_and_products() {
        assert_eq!(A::build(1).unwrap().dim(), 10);
        assert_eq!(A::build(2).unwrap().dim(), 18);
        let a = A::build(2).unwrap();
        assert_eq!(a.multiply_basis(BasisId::x(0), BasisId::y(0)).unwrap(), ZigzagElement::basis(BasisId::z(1)));
        assert_eq!(a.multiply_basis(BasisId::y(0), BasisId::x(0)).unwrap(), ZigzagElement::basis(BasisId::z(0)));
        for i in a.vertices() {
            for j in a.vertices() {
                assert!(a.multiply_basis(BasisId::z(i), BasisId::z(j)).unwrap().is_zero());
            }
        }
        assert!(a.relation_failures().is_empty());
        assert!(a.opposite_relation_failures().is_empty());
        assert!(a.idempotent_failures().is_empty());
        assert!(A::build(0).is_err());
    }

    #[test]
    fn radical_layers() {
        let a = A::build(1).unwrap();
        assert_eq!(a.radical_series().dims(), vec![7, 3, 0]);
        assert_eq!(a.verify_radical().unwrap(), 3);
    }

    #[test]
    fn hom_dims() {
        let a = A::build(3).unwrap();
        assert_eq!(a.hom_dim(0, 0).unwrap(), 2);
        assert_eq!(a.hom_dim(0, 1).unwrap(), 1);
        assert_eq!(a.hom_dim(0, 2).unwrap(), 0);
    }

    #[test]
    fn interior_projective() {
        let a = A::build(3).unwrap();
        let p = a.projective(0).unwrap();
        let mut dims: Vec<usize> = p.submodules.iter().map(|s| s.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 2, 2, 3]);
        assert_eq!(p.socle, p.radical_squared);
        assert_eq!(a.describe(&p.socle), vec!["Z0"]);
        assert_eq!(p.top_of_radical, vec![-1, 1]);
    }

    #[test]
    fn fault_is_named() {
        let a = A::build_with_fault(2, Fault::MisplacedLoop(0)).unwrap();
        assert!(a.relation_failures().contains(&"x_0 y_0 = z_1".to_string()));
        assert!(!a.associativity_failures().is_empty());
    }

    #[test]
    fn table_text() {
        let a = A::build(1).unwrap();
        assert!(a.table_lines().contains(&"X0*Y0 = Z1".to_string()));
        let e = a.element(&a.coordinates(&ZigzagElement::basis(BasisId::x(-1))));
        assert_eq!(e.to_string(), "X-1");
        assert_eq!("Y-1".parse::<BasisId>().unwrap(), BasisId::y(-1));
    }
}
