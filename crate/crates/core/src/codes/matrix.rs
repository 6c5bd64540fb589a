//! Dense matrices over a finite field and Gaussian elimination.

use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<u64>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged row");
            m.row_mut(i).copy_from_slice(r);
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Reduced row echelon form with zero rows removed, plus pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
            for x in m.row_mut(r) {
                *x = f.mul(*x, inv);
            }
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for (x, &pv) in m.row_mut(i).iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(factor, pv));
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * m.cols);
        m.rows = r;
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis (as rows) of `{x : self * x^T = 0}`.
    pub fn null_space(&self) -> Matrix {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.data[k * self.cols + fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                out.data[k * self.cols + pc] = f.neg(r.get(i, fc));
            }
        }
        out
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn same_row_space(&self, other: &Matrix) -> bool {
        let r = self.rank();
        r == other.rank() && self.stack(other).rank() == r
    }

    /// `self * other^T`.
    pub fn mul_transpose(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                let dot = self
                    .row(i)
                    .iter()
                    .zip(other.row(j))
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                out.data[i * other.rows + j] = dot;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

/// Reduces `v` against a matrix in reduced row echelon form so that every
/// pivot coordinate becomes zero. The result is the lexicographically least
/// element of the coset `v + rowspace`, taking zero as the least symbol.
pub fn reduce(rref: &Matrix, pivots: &[usize], v: &[u64]) -> Vec<u64> {
    let f = rref.field();
    let mut out = v.to_vec();
    for (i, &pc) in pivots.iter().enumerate() {
        let c = out[pc];
        if c == 0 {
            continue;
        }
        for (x, &rv) in out.iter_mut().zip(rref.row(i)) {
            *x = f.sub(*x, f.mul(c, rv));
        }
    }
    out
}
