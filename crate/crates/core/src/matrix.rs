//! Small dense square matrices over the integers.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use serde::{Deserialize, Serialize};

/// An `n × n` matrix with exact `i64` entries, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds a matrix from rows. Panics if the rows are not square.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix must be square");
            data.extend_from_slice(row);
        }
        Self { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn neg(&self) -> Self {
        Self { n: self.n, data: self.data.iter().map(|x| -x).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// `uᵀ M v`.
    pub fn bilinear(&self, u: &[i64], v: &[i64]) -> i64 {
        u.iter().zip(self.mul_vec(v)).map(|(a, b)| a * b).sum()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.n).map(|i| self[(i, j)]).collect()
    }

    pub fn row(&self, i: usize) -> Vec<i64> {
        self.data[i * self.n..(i + 1) * self.n].to_vec()
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> i64 {
        let (rank, det) = self.bareiss();
        if rank < self.n {
            0
        } else {
            det
        }
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.bareiss().0
    }

    /// Returns `(rank, signed last pivot)`. For full-rank input the second
    /// component is the determinant.
    fn bareiss(&self) -> (usize, i64) {
        let n = self.n;
        let mut a: Vec<Vec<i128>> = self
            .rows()
            .into_iter()
            .map(|r| r.into_iter().map(i128::from).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| a[r][col] != 0) else {
                continue;
            };
            if p != rank {
                a.swap(p, rank);
                sign = -sign;
            }
            for r in rank + 1..n {
                for c in col + 1..n {
                    a[r][c] = (a[r][c] * a[rank][col] - a[r][col] * a[rank][c]) / prev;
                }
                a[r][col] = 0;
            }
            prev = a[rank][col];
            rank += 1;
        }
        let det = if n == 0 { 1 } else { sign * prev };
        (rank, i64::try_from(det).expect("determinant overflow"))
    }

    /// Inverse of a unipotent matrix `I - N` with `N` nilpotent, as the
    /// finite geometric series `I + N + N² + …`.
    pub fn inverse_unipotent(&self) -> Option<Self> {
        let n = self.n;
        let nil = Self::identity(n).sub(self);
        let mut acc = Self::identity(n);
        let mut power = Self::identity(n);
        for _ in 0..n {
            power = &power * &nil;
            acc = acc.add(&power);
        }
        (power == Self::zeros(n) || n == 0).then_some(acc)
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.n + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_rank() {
        let m = IntMatrix::from_rows(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(m.det(), 4);
        assert_eq!(m.rank(), 3);
        let s = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(s.det(), 0);
        assert_eq!(s.rank(), 1);
        assert_eq!(IntMatrix::zeros(3).rank(), 0);
        let p = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(p.det(), -1);
    }

    #[test]
    fn unipotent_inverse() {
        let e = IntMatrix::from_rows(&[vec![1, -1, 0], vec![0, 1, -1], vec![0, 0, 1]]);
        let inv = e.inverse_unipotent().unwrap();
        assert_eq!(&e * &inv, IntMatrix::identity(3));
        assert_eq!(inv.row(0), vec![1, 1, 1]);
    }
}
