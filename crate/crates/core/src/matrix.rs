//! Dense exact-integer matrices and fraction-free rank computation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Row-major matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows
            .iter()
            .flat_map(|row| row.iter().cloned().map(Into::into))
            .collect();
        IntegerMatrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut out = IntegerMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    /// Stacks `other` below `self`; column counts must match.
    pub fn stack(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.cols, "column count mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntegerMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Places `other` to the right of `self`; row counts must match.
    pub fn augment(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.rows, other.rows, "row count mismatch");
        let mut out = IntegerMatrix::zero(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    pub fn identity(n: usize) -> IntegerMatrix {
        let mut m = IntegerMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    pub fn negated(&self) -> IntegerMatrix {
        IntegerMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }

    pub fn has_negative_entry(&self) -> bool {
        self.data.iter().any(|v| v.is_negative())
    }

    /// Rank over the rationals via Bareiss fraction-free elimination.
    /// Pivot selection is the first nonzero entry in the column, so the
    /// result is deterministic; all divisions are exact.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0usize;
        let mut prev_pivot = BigInt::from(1);
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            let found = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero());
            let r0 = match found {
                Some(r) => r,
                None => continue,
            };
            if r0 != pivot_row {
                for c in 0..m.cols {
                    let a = m.get(pivot_row, c).clone();
                    let b = m.get(r0, c).clone();
                    m.set(pivot_row, c, b);
                    m.set(r0, c, a);
                }
            }
            let pivot = m.get(pivot_row, col).clone();
            for r in pivot_row + 1..m.rows {
                for c in 0..m.cols {
                    if c == col {
                        continue;
                    }
                    let v = (m.get(r, c) * &pivot - m.get(r, col) * m.get(pivot_row, c))
                        / &prev_pivot;
                    m.set(r, c, v);
                }
                m.set(r, col, BigInt::zero());
            }
            prev_pivot = pivot;
            pivot_row += 1;
            rank += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        rank
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            if r + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_dependent_rows() {
        let m = IntegerMatrix::from_rows(&[
            vec![1i64, 0, 0],
            vec![-1, -1, 1],
            vec![0, 1, -1],
        ]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.transpose().rank(), 2);
    }

    #[test]
    fn rank_of_rank_one_multiples() {
        let m = IntegerMatrix::from_rows(&[vec![-1i64, 1], vec![-1, 1], vec![2, -2]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn empty_and_zero_matrices() {
        let m = IntegerMatrix::zero(0, 3);
        assert_eq!(m.rank(), 0);
        let z = IntegerMatrix::zero(2, 2);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.nullity(), 2);
    }

    #[test]
    fn identity_has_full_rank() {
        let m = IntegerMatrix::identity(4);
        assert_eq!(m.rank(), 4);
        assert_eq!(m.nullity(), 0);
    }

    #[test]
    fn bareiss_survives_large_intermediates() {
        // Hilbert-like integer matrix with big cofactors
        let m = IntegerMatrix::from_rows(&[
            vec![60i64, 30, 20],
            vec![30, 20, 15],
            vec![20, 15, 12],
        ]);
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn stack_and_augment() {
        let a = IntegerMatrix::from_rows(&[vec![1i64, 2]]);
        let b = IntegerMatrix::from_rows(&[vec![3i64, 4]]);
        let s = a.stack(&b);
        assert_eq!(s.rows(), 2);
        assert_eq!(*s.get(1, 0), BigInt::from(3));
        let g = a.augment(&IntegerMatrix::identity(1));
        assert_eq!(g.cols(), 3);
        assert_eq!(*g.get(0, 2), BigInt::from(1));
    }

    #[test]
    fn display_is_space_separated() {
        let m = IntegerMatrix::from_rows(&[vec![1i64, -2], vec![0, 3]]);
        assert_eq!(m.to_string(), "1 -2\n0 3");
    }
}
