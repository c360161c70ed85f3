//! Dense exact linear algebra over the coefficient field.
//!
//! Small matrices of `Scalar` with reduced row echelon form, rank, kernel
//! bases, and linear solving. Everything is exact; pivots are chosen
//! deterministically (first nonzero entry in column order).

use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct KMatrix {
    pub rows: usize,
    pub cols: usize,
    pub field: FieldSpec,
    data: Vec<Scalar>, // row-major
}

impl KMatrix {
    pub fn zero(rows: usize, cols: usize, field: FieldSpec) -> KMatrix {
        KMatrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> KMatrix {
        let mut m = KMatrix::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize, field: FieldSpec) -> KMatrix {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols);
            data.extend(row);
        }
        KMatrix { rows: r, cols, field, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> KMatrix {
        let mut out = KMatrix::zero(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &KMatrix) -> KMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = KMatrix::zero(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc.add(&a.mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    /// In-place Gauss-Jordan elimination. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // find pivot row
            let mut pr = None;
            for i in r..self.rows {
                if !self.get(i, c).is_zero() {
                    pr = Some(i);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            self.swap_rows(r, pr);
            let inv = self.get(r, c).inv();
            for j in c..self.cols {
                let v = self.get(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let factor = self.get(i, c).clone();
                    for j in c..self.cols {
                        let v = self.get(i, j).sub(&factor.mul(self.get(r, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data
                .swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// A basis of the right kernel (solutions of `A v = 0`).
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = m.get(row, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `A x = b` when consistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = KMatrix::zero(self.rows, self.cols + 1, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(row, self.cols).clone();
        }
        Some(x)
    }
}

/// Row space span tracker: incremental Gaussian elimination used to build
/// quotient-space coordinates. Rows are reduced as they are inserted.
#[derive(Clone, Debug)]
pub struct RowSpan {
    pub dim: usize,
    pub field: FieldSpec,
    /// reduced rows, each with its pivot column, sorted by pivot
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl RowSpan {
    pub fn new(dim: usize, field: FieldSpec) -> RowSpan {
        RowSpan { dim, field, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    /// Reduce `v` against the current span (without inserting).
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                for j in 0..self.dim {
                    if !row[j].is_zero() {
                        v[j] = v[j].sub(&c.mul(&row[j]));
                    }
                }
            }
        }
        v
    }

    /// Reduce and insert when independent; returns true if the span grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut v = self.reduce(v);
        let pivot = v.iter().position(|c| !c.is_zero());
        let Some(p) = pivot else { return false };
        let inv = v[p].inv();
        for c in v.iter_mut() {
            *c = c.mul(&inv);
        }
        // back-substitute into existing rows to keep full reduction
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for j in 0..self.dim {
                    if !v[j].is_zero() {
                        row[j] = row[j].sub(&f.mul(&v[j]));
                    }
                }
            }
        }
        self.rows.push((p, v));
        self.rows.sort_by_key(|(p, _)| *p);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        FieldSpec::Q.from_i64(n)
    }

    #[test]
    fn rref_and_rank() {
        let m = KMatrix::from_rows(
            vec![
                vec![q(1), q(2), q(3)],
                vec![q(2), q(4), q(6)],
                vec![q(1), q(0), q(1)],
            ],
            3,
            FieldSpec::Q,
        );
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn kernel_and_solve() {
        let m = KMatrix::from_rows(
            vec![vec![q(1), q(2), q(3)], vec![q(0), q(1), q(1)]],
            3,
            FieldSpec::Q,
        );
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        for v in &ker {
            assert!(m.apply(v).iter().all(|c| c.is_zero()));
        }
        let sol = m.solve(&[q(6), q(2)]).unwrap();
        let img = m.apply(&sol);
        assert_eq!(img, vec![q(6), q(2)]);
        // inconsistent system
        let m2 = KMatrix::from_rows(vec![vec![q(1), q(1)], vec![q(2), q(2)]], 2, FieldSpec::Q);
        assert!(m2.solve(&[q(1), q(3)]).is_none());
    }

    #[test]
    fn row_span_quotient_coords() {
        let mut span = RowSpan::new(3, FieldSpec::Q);
        assert!(span.insert(&[q(1), q(1), q(0)]));
        assert!(!span.insert(&[q(2), q(2), q(0)]));
        assert!(span.insert(&[q(0), q(0), q(3)]));
        assert_eq!(span.rank(), 2);
        assert!(span.contains(&[q(5), q(5), q(6)]));
        assert!(!span.contains(&[q(1), q(0), q(0)]));
    }
}
