//! Exact row reduction for small subspaces of Qⁿ.

use crate::coord::ExactRational;

/// A subspace of Q^ambient stored as a reduced row echelon basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<Q: ExactRational> {
    ambient: usize,
    rows: Vec<Vec<Q>>,
}

/// Reduced row echelon form of `rows`, zero rows dropped.
pub fn rref<Q: ExactRational>(mut rows: Vec<Vec<Q>>) -> Vec<Vec<Q>> {
    let width = rows.first().map_or(0, |r| r.len());
    let mut pivot_row = 0;
    for col in 0..width {
        let Some(p) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, p);
        let inv = Q::one() / rows[pivot_row][col].clone();
        for x in rows[pivot_row].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in 0..width {
                    let v = rows[pivot_row][c].clone() * f.clone();
                    rows[r][c] = rows[r][c].clone() - v;
                }
            }
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    rows
}

impl<Q: ExactRational> Subspace<Q> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn span(ambient: usize, vectors: Vec<Vec<Q>>) -> Self {
        debug_assert!(vectors.iter().all(|v| v.len() == ambient));
        Subspace {
            ambient,
            rows: rref(vectors),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.rows
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        rref(rows).len() == self.rows.len()
    }

    pub fn contains_space(&self, other: &Subspace<Q>) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace<Q>) -> Subspace<Q> {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Subspace::span(self.ambient, rows)
    }
}

/// Basis of {c : Σ_k c_k columns[k] = 0}.
pub fn kernel<Q: ExactRational>(columns: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let k = columns.len();
    if k == 0 {
        return Vec::new();
    }
    let height = columns[0].len();
    let rows: Vec<Vec<Q>> = (0..height)
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    let red = rref(rows);
    let pivots: Vec<usize> = red
        .iter()
        .map(|r| r.iter().position(|x| !x.is_zero()).unwrap())
        .collect();
    let mut out = Vec::new();
    for free in (0..k).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::zero(); k];
        v[free] = Q::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -red[r][free].clone();
        }
        out.push(v);
    }
    out
}
