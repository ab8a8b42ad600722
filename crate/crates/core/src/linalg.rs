//! Exact linear algebra: sparse vectors and matrices, an incremental reduced
//! echelon basis, and dense RREF, rank, nullspace and inverse.

use std::collections::BTreeMap;

use crate::config::FieldKind;
use crate::scalar::Scalar;

/// A sparse vector: `(index, coefficient)` pairs sorted by index, no zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Builds a sparse vector from unsorted terms, merging repeats.
pub fn sv_from_terms(terms: impl IntoIterator<Item = (usize, Scalar)>) -> SparseVec {
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (i, c) in terms {
        match acc.get_mut(&i) {
            Some(x) => *x = &*x + &c,
            None => {
                acc.insert(i, c);
            }
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// `a + k b`.
pub fn sv_add_scaled(a: &SparseVec, b: &SparseVec, k: &Scalar) -> SparseVec {
    if k.is_zero() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, k * &b[j].1));
            j += 1;
        } else {
            let c = &a[i].1 + &(k * &b[j].1);
            if !c.is_zero() {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sv_scale(a: &SparseVec, k: &Scalar) -> SparseVec {
    if k.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(i, c)| (*i, c * k)).collect()
}

pub fn sv_get(a: &SparseVec, i: usize) -> Option<&Scalar> {
    a.binary_search_by_key(&i, |(j, _)| *j).ok().map(|p| &a[p].1)
}

pub fn sv_unit(i: usize, field: FieldKind) -> SparseVec {
    vec![(i, Scalar::one(field))]
}

/// A linear map stored by columns: `cols[j]` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, cols: vec![Vec::new(); ncols] }
    }

    pub fn identity(n: usize, field: FieldKind) -> Self {
        SparseMatrix { nrows: n, cols: (0..n).map(|i| sv_unit(i, field)).collect() }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (j, c) in v {
            out = sv_add_scaled(&out, &self.cols[*j], c);
        }
        out
    }

    /// `self * other` (apply `other` first).
    pub fn compose(&self, other: &SparseMatrix) -> SparseMatrix {
        SparseMatrix { nrows: self.nrows, cols: other.cols.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }
}

/// A reduced row echelon basis of a subspace, grown one vector at a time.
///
/// Rows are normalised to have pivot coefficient 1 and no row has a nonzero
/// entry in another row's pivot column. The pivot of a row is its smallest
/// index, so the caller controls elimination order through the indexing.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: FieldKind,
    rows: Vec<SparseVec>,
    pivot_row: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new(field: FieldKind) -> Self {
        Echelon { field, rows: Vec::new(), pivot_row: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_row.keys().copied()
    }

    pub fn row_with_pivot(&self, p: usize) -> Option<&SparseVec> {
        self.pivot_row.get(&p).map(|&r| &self.rows[r])
    }

    /// The normal form of `v` modulo the span.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (i, c) in v {
            if let Some(&r) = self.pivot_row.get(i) {
                out = sv_add_scaled(&out, &self.rows[r], &-c);
            }
        }
        out
    }

    /// Adds `v` to the span; returns its reduced form when it was new.
    pub fn insert(&mut self, v: &SparseVec) -> Option<SparseVec> {
        let red = self.reduce(v);
        let (p, lead) = red.first()?.clone();
        let row = sv_scale(&red, &lead.inv());
        for other in self.rows.iter_mut() {
            if let Some(c) = sv_get(other, p).cloned() {
                *other = sv_add_scaled(other, &row, &-&c);
            }
        }
        self.pivot_row.insert(p, self.rows.len());
        self.rows.push(row.clone());
        Some(row)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Dense reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Scalar>]) -> Vec<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let k = m[i][c].clone();
                let (src, dst) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (x, y) in dst.iter_mut().zip(src.iter()) {
                    if !y.is_zero() {
                        *x = &*x - &(&k * y);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Scalar>]) -> usize {
    rref(&mut m.to_vec()).len()
}

/// A basis of `{x : m x = 0}` for an `nrows x ncols` matrix.
pub fn nullspace(m: &[Vec<Scalar>], ncols: usize, field: FieldKind) -> Vec<Vec<Scalar>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Scalar::zero(field); ncols];
            x[f] = Scalar::one(field);
            for (row, &p) in pivots.iter().enumerate() {
                x[p] = -&a[row][f];
            }
            x
        })
        .collect()
}

/// Inverse of a square matrix, or `None` when singular.
pub fn inverse(m: &[Vec<Scalar>], field: FieldKind) -> Option<Vec<Vec<Scalar>>> {
    let n = m.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut aug: Vec<Vec<Scalar>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| Scalar::from_i64((i == j) as i64, field)));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Dense matrix from sparse columns.
pub fn dense_from_cols(cols: &[SparseVec], nrows: usize, field: FieldKind) -> Vec<Vec<Scalar>> {
    let mut m = vec![vec![Scalar::zero(field); cols.len()]; nrows];
    for (j, col) in cols.iter().enumerate() {
        for (i, c) in col {
            m[*i][j] = c.clone();
        }
    }
    m
}

/// Whether two families of vectors span the same subspace.
pub fn same_span(a: &[SparseVec], b: &[SparseVec], field: FieldKind) -> bool {
    let mut ea = Echelon::new(field);
    for v in a {
        ea.insert(v);
    }
    let mut eb = Echelon::new(field);
    for v in b {
        eb.insert(v);
    }
    ea.dim() == eb.dim() && b.iter().all(|v| ea.contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldKind = FieldKind::Rational;

    fn s(x: i64) -> Scalar {
        Scalar::from_i64(x, Q)
    }

    #[test]
    fn nullspace_of_rank_one() {
        let m = vec![vec![s(1), s(2), s(3)], vec![s(2), s(4), s(6)]];
        let ns = nullspace(&m, 3, Q);
        assert_eq!(ns.len(), 2);
        for x in ns {
            let dot = m[0].iter().zip(&x).fold(s(0), |acc, (a, b)| &acc + &(a * b));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = vec![vec![s(2), s(1)], vec![s(1), s(1)]];
        let inv = inverse(&m, Q).unwrap();
        assert_eq!(inv, vec![vec![s(1), s(-1)], vec![s(-1), s(2)]]);
        assert!(inverse(&[vec![s(1), s(2)], vec![s(2), s(4)]], Q).is_none());
    }

    #[test]
    fn echelon_membership() {
        let mut e = Echelon::new(Q);
        assert!(e.insert(&vec![(0, s(1)), (2, s(1))]).is_some());
        assert!(e.insert(&vec![(1, s(2)), (2, s(2))]).is_some());
        assert!(e.contains(&vec![(0, s(1)), (1, s(1)), (2, s(2))]));
        assert!(!e.contains(&vec![(2, s(1))]));
        assert!(e.insert(&vec![(0, s(3)), (2, s(3))]).is_none());
    }
}
