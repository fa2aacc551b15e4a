//! Dense exact linear algebra over a [`Field`]: reduced row echelon form,
//! nullspaces, solving inside a span, and coordinates in a quotient.
//!
//! Everything here is deterministic: pivoting always takes the first
//! nonzero entry, so identical inputs give identical echelon forms,
//! bases, and coordinates.

use crate::scalar::Field;

/// Dense row-major matrix over `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Field> Matrix<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = K::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_cols(cols: Vec<Vec<K>>) -> Self {
        Self::from_rows(cols).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<K> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix<K> {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = K::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc + self[(i, j)].clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn matmul(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out: Matrix<K> = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)].clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if other[(k, j)].is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * other[(k, j)].clone();
                }
            }
        }
        out
    }

    /// In-place reduction to reduced row echelon form; returns the pivot
    /// columns in ascending order.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = self[(r, c)].inv();
            for j in c..self.cols {
                self[(r, j)] = self[(r, j)].clone() * inv.clone();
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let sub = f.clone() * self[(r, j)].clone();
                        self[(i, j)] = self[(i, j)].clone() - sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Matrix<K>, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the right nullspace: one vector per free column
    /// `f`, with entry 1 at `f` and `−R[row(p), f]` at each pivot column
    /// `p < f`. Vectors are returned in ascending free-column order.
    pub fn nullspace(&self) -> Vec<Vec<K>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivots.contains(&f) {
                continue;
            }
            let mut v = vec![K::zero(); self.cols];
            v[f] = K::one();
            for (row, &p) in pivots.iter().enumerate() {
                if p < f {
                    v[p] = -r[(row, f)].clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<K> std::ops::Index<(usize, usize)> for Matrix<K> {
    type Output = K;
    fn index(&self, (i, j): (usize, usize)) -> &K {
        &self.data[i * self.cols + j]
    }
}

impl<K> std::ops::IndexMut<(usize, usize)> for Matrix<K> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut K {
        &mut self.data[i * self.cols + j]
    }
}

/// Echelonized basis of the column space of `m`: transpose, row-reduce,
/// drop zero rows, transpose back. The result's columns are a canonical
/// basis of span(columns of `m`), each with a leading 1 in a distinct row
/// (the "pivot rows"), returned together with those rows in ascending
/// order.
pub fn column_space_echelon<K: Field>(m: &Matrix<K>) -> (Matrix<K>, Vec<usize>) {
    let (r, pivots) = m.transpose().rref();
    let rank = pivots.len();
    if rank == 0 {
        return (Matrix::zero(m.rows(), 0), pivots);
    }
    let mut cols = Vec::with_capacity(rank);
    for i in 0..rank {
        cols.push(r.row(i).to_vec());
    }
    (Matrix::from_cols(cols), pivots)
}

/// Express `v` in terms of the columns of `basis`, or return `None` if
/// `v` is outside the span. Free variables (columns beyond the pivot
/// rank) are set to zero, so the answer is canonical.
pub fn solve_in_span<K: Field>(basis: &Matrix<K>, v: &[K]) -> Option<Vec<K>> {
    assert_eq!(basis.rows(), v.len(), "dimension mismatch");
    let n = basis.cols();
    let mut aug = Matrix::zero(basis.rows(), n + 1);
    for i in 0..basis.rows() {
        for j in 0..n {
            aug[(i, j)] = basis[(i, j)].clone();
        }
        aug[(i, n)] = v[i].clone();
    }
    let (r, pivots) = aug.rref();
    if pivots.contains(&n) {
        return None; // inconsistent: v has a component outside the span
    }
    let mut x = vec![K::zero(); n];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[(row, n)].clone();
    }
    Some(x)
}

/// Coordinates of `v + span(S)` in the quotient `K^d / span(S)`, where
/// `S` is given by its columns. Coordinates are read off at the
/// complement of the pivot rows of the echelonized span, in ascending
/// row order: reduce `v` modulo the span so the pivot rows vanish, then
/// keep the remaining entries.
pub fn quotient_coords<K: Field>(span: &Matrix<K>, v: &[K]) -> Vec<K> {
    assert_eq!(span.rows(), v.len(), "dimension mismatch");
    let (ech, pivot_rows) = column_space_echelon(span);
    let mut t = v.to_vec();
    for (j, &pr) in pivot_rows.iter().enumerate() {
        let c = t[pr].clone();
        if c.is_zero() {
            continue;
        }
        for i in 0..span.rows() {
            let sub = c.clone() * ech[(i, j)].clone();
            t[i] = t[i].clone() - sub;
        }
    }
    for &pr in &pivot_rows {
        debug_assert!(t[pr].is_zero());
    }
    (0..span.rows())
        .filter(|i| !pivot_rows.contains(i))
        .map(|i| t[i].clone())
        .collect()
}

/// Dimension of the quotient `K^d / span(S)` — the length every
/// [`quotient_coords`] result will have.
pub fn quotient_dim<K: Field>(span: &Matrix<K>) -> usize {
    span.rows() - column_space_echelon(span).1.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Fp, Rat};
    use num_traits::Zero;

    fn rmat(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn rref_small() {
        let m = rmat(&[&[2, 4], &[1, 2]]);
        let (r, p) = m.rref();
        assert_eq!(p, vec![0]);
        assert_eq!(r, rmat(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_idempotent() {
        let m = rmat(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        let (r, _) = m.rref();
        let (rr, _) = r.rref();
        assert_eq!(r, rr);
    }

    #[test]
    fn nullspace_convention() {
        // [[1, 1]] → single vector (−1, 1)
        let m = rmat(&[&[1, 1]]);
        let ns = m.nullspace();
        assert_eq!(ns, vec![vec![rat(-1), rat(1)]]);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn nullspace_of_full_rank_is_empty() {
        let m = rmat(&[&[1, 0], &[0, 1]]);
        assert!(m.nullspace().is_empty());
    }

    #[test]
    fn rank_transpose_agree() {
        let m = rmat(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank(), m.transpose().rank());
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn solve_in_span_basic() {
        let basis = Matrix::from_cols(vec![vec![rat(1), rat(0)], vec![rat(1), rat(1)]]);
        let x = solve_in_span(&basis, &[rat(3), rat(2)]).unwrap();
        assert_eq!(x, vec![rat(1), rat(2)]);
        assert!(solve_in_span(&rmat(&[&[1], &[0]]), &[rat(0), rat(1)]).is_none());
    }

    #[test]
    fn solve_in_span_canonical_on_dependent_columns() {
        // two equal columns: free variable set to zero
        let basis = Matrix::from_cols(vec![vec![rat(1), rat(2)], vec![rat(1), rat(2)]]);
        let x = solve_in_span(&basis, &[rat(2), rat(4)]).unwrap();
        assert_eq!(x, vec![rat(2), rat(0)]);
    }

    #[test]
    fn quotient_coords_drops_pivot_rows() {
        // span{(1,0)} in K², v = (3,5) → coordinate [5]
        let span = Matrix::from_cols(vec![vec![rat(1), rat(0)]]);
        assert_eq!(quotient_coords(&span, &[rat(3), rat(5)]), vec![rat(5)]);
        assert_eq!(quotient_dim(&span), 1);
    }

    #[test]
    fn quotient_coords_kills_span() {
        let span = Matrix::from_cols(vec![vec![rat(1), rat(2), rat(0)], vec![rat(0), rat(1), rat(1)]]);
        let v = vec![rat(3), rat(7), rat(1)];
        let coords = quotient_coords(&span, &v);
        assert_eq!(coords.len(), 1);
        assert_eq!(quotient_coords(&span, &[rat(1), rat(2), rat(0)]), vec![rat(0)]);
        assert_eq!(quotient_coords(&span, &[rat(0), rat(1), rat(1)]), vec![rat(0)]);
    }

    #[test]
    fn fp_linear_algebra() {
        let p = 101u64;
        let m = Matrix::from_rows(vec![
            vec![Fp::new(1, p), Fp::new(2, p)],
            vec![Fp::new(3, p), Fp::new(4, p)],
        ]);
        assert_eq!(m.rank(), 2);
        let singular = Matrix::from_rows(vec![
            vec![Fp::new(1, p), Fp::new(2, p)],
            vec![Fp::new(2, p), Fp::new(4, p)],
        ]);
        assert_eq!(singular.rank(), 1);
        assert_eq!(singular.nullspace().len(), 1);
    }

    #[test]
    fn column_space_echelon_pivot_rows() {
        let m = Matrix::from_cols(vec![vec![rat(0), rat(1), rat(2)], vec![rat(0), rat(2), rat(4)]]);
        let (ech, rows) = column_space_echelon(&m);
        assert_eq!(rows, vec![1]);
        assert_eq!(ech.cols(), 1);
        assert_eq!(ech.col(0), vec![rat(0), rat(1), rat(2)]);
    }
}
