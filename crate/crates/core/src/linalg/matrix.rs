//! Dense integer matrices with Hermite normal form and fraction-free determinants.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::LinalgError;

/// Row-major matrix of arbitrary-precision integers. Shape is fixed at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::ShapeMismatch {
                expected: (rows, cols),
                found: data.len(),
            });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from `i64` rows; panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows.iter().flatten().map(|&v| BigInt::from(v)).collect();
        IntMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let cols = columns.len();
        let mut m = IntMatrix::zeros(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has wrong length");
            for (i, v) in col.iter().enumerate() {
                m.data[i * cols + j] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch {
                expected: (self.cols, other.cols),
                found: other.rows * other.cols,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| !v[j].is_zero())
                    .map(|j| self.get(i, j) * &v[j])
                    .sum()
            })
            .collect()
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        use num_traits::ToPrimitive;
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j).to_f64().unwrap_or(f64::NAN))
                    .collect()
            })
            .collect()
    }

    fn swap_columns(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn negate_column(&mut self, c: usize) {
        for i in 0..self.rows {
            let v = &mut self.data[i * self.cols + c];
            *v = -std::mem::take(v);
        }
    }

    /// `col[target] -= q · col[source]`
    fn sub_column_multiple(&mut self, target: usize, source: usize, q: &BigInt) {
        for i in 0..self.rows {
            let s = self.data[i * self.cols + source].clone();
            if !s.is_zero() {
                self.data[i * self.cols + target] -= q * s;
            }
        }
    }

    /// Replaces columns `(p, c)` by `(s·p + t·c, u·p + v·c)`.
    fn combine_columns(&mut self, p: usize, c: usize, s: &BigInt, t: &BigInt, u: &BigInt, v: &BigInt) {
        for i in 0..self.rows {
            let x = self.data[i * self.cols + p].clone();
            let y = self.data[i * self.cols + c].clone();
            self.data[i * self.cols + p] = s * &x + t * &y;
            self.data[i * self.cols + c] = u * x + v * y;
        }
    }

    /// Column-style Hermite normal form.
    ///
    /// The result spans the same integer lattice (column span) as `self`. It is
    /// lower-triangular in echelon form: the pivot of column `t` sits at row
    /// `pivot_rows[t]`, strictly increasing in `t`, every pivot is positive,
    /// all entries above a pivot vanish, and every entry of a pivot row to the
    /// left of its pivot lies in `[0, pivot)`. Columns past the rank are zero.
    pub fn hnf(&self) -> IntMatrix {
        self.hnf_with_pivots().0
    }

    /// [`hnf`](Self::hnf) together with the row index of each pivot.
    pub fn hnf_with_pivots(&self) -> (IntMatrix, Vec<usize>) {
        let mut h = self.clone();
        let mut pivots = Vec::new();
        let mut pc = 0;
        for row in 0..h.rows {
            if pc == h.cols {
                break;
            }
            // bring a nonzero entry into the pivot column
            if h.get(row, pc).is_zero() {
                match (pc + 1..h.cols).find(|&c| !h.get(row, c).is_zero()) {
                    Some(c) => h.swap_columns(pc, c),
                    None => continue,
                }
            }
            for c in pc + 1..h.cols {
                if h.get(row, c).is_zero() {
                    continue;
                }
                let a = h.get(row, pc).clone();
                let b = h.get(row, c).clone();
                let eg = a.extended_gcd(&b);
                let (g, s, t) = (eg.gcd, eg.x, eg.y);
                let a_g = &a / &g;
                let b_g = &b / &g;
                // unimodular: det [[s, -b/g], [t, a/g]] = (s·a + t·b)/g = 1
                h.combine_columns(pc, c, &s, &t, &(-b_g), &a_g);
            }
            if h.get(row, pc).is_negative() {
                h.negate_column(pc);
            }
            let pivot = h.get(row, pc).clone();
            for c in 0..pc {
                let q = h.get(row, c).div_floor(&pivot);
                if !q.is_zero() {
                    h.sub_column_multiple(c, pc, &q);
                }
            }
            pivots.push(row);
            pc += 1;
        }
        (h, pivots)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det_exact(&self) -> Result<BigInt, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        negate = !negate;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                let lead = m.get(i, k).clone();
                for j in k + 1..n {
                    let v = (m.get(i, j) * &pivot - &lead * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = pivot;
        }
        let d = m.get(n - 1, n - 1).clone();
        Ok(if negate { -d } else { d })
    }

    /// Smallest positive `m` such that `m·e_unit` lies in the integer column span.
    pub fn lattice_unit_generator(&self, unit_index: usize) -> Result<BigInt, LinalgError> {
        if unit_index >= self.rows {
            return Err(LinalgError::IndexOutOfRange {
                index: unit_index,
                len: self.rows,
            });
        }
        // Move the unit row last. In echelon form every pivot row above it forces
        // its column coefficient to zero, leaving only the last pivot column.
        let mut m = self.clone();
        for i in unit_index..m.rows - 1 {
            m.swap_rows(i, i + 1);
        }
        let (h, pivots) = m.hnf_with_pivots();
        let last = m.rows - 1;
        match pivots.iter().position(|&r| r == last) {
            Some(t) => Ok(h.get(last, t).clone()),
            None => Err(LinalgError::NoUnitMultiple { unit_index }),
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        self.get(i, j)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn hnf(m: &IntMatrix) -> IntMatrix {
    m.hnf()
}

pub fn det_exact(m: &IntMatrix) -> Result<BigInt, LinalgError> {
    m.det_exact()
}

pub fn lattice_unit_generator(m: &IntMatrix, unit_index: usize) -> Result<BigInt, LinalgError> {
    m.lattice_unit_generator(unit_index)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn det_small() {
        assert_eq!(IntMatrix::from_rows(&[vec![2, 1], vec![1, 3]]).det_exact().unwrap(), big(5));
        assert_eq!(IntMatrix::identity(7).det_exact().unwrap(), big(1));
        assert_eq!(IntMatrix::identity(0).det_exact().unwrap(), big(1));
    }

    #[test]
    fn det_needs_row_swap() {
        let m = IntMatrix::from_rows(&[vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 9]]);
        // expansion along the first row: -1·(27-30) + 2·(21-24) = -3
        assert_eq!(m.det_exact().unwrap(), big(-3));
    }

    #[test]
    fn det_singular() {
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.det_exact().unwrap(), big(0));
    }

    #[test]
    fn det_rejects_non_square() {
        let m = IntMatrix::zeros(2, 3);
        assert_eq!(m.det_exact().unwrap_err(), LinalgError::NotSquare { rows: 2, cols: 3 });
    }

    #[test]
    fn hnf_of_fixed_points() {
        assert_eq!(IntMatrix::identity(4).hnf(), IntMatrix::identity(4));
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 2]]);
        assert_eq!(m.hnf(), m);
    }

    #[test]
    fn hnf_two_by_two() {
        // span of (2,1),(1,3) is {(x,y) : 5 | 3x - y}
        let h = IntMatrix::from_rows(&[vec![2, 1], vec![1, 3]]).hnf();
        assert_eq!(h, IntMatrix::from_rows(&[vec![1, 0], vec![3, 5]]));
    }

    #[test]
    fn hnf_rank_deficient() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 6], vec![1, 2, 3], vec![0, 0, 1]]);
        let (h, pivots) = m.hnf_with_pivots();
        assert_eq!(pivots, vec![0, 2]);
        assert!(h.column(2).iter().all(Zero::is_zero));
        assert_eq!(h.get(0, 0), &big(2));
        assert_eq!(h.get(1, 0), &big(1));
    }

    #[test]
    fn unit_generator() {
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![1, 3]]);
        assert_eq!(m.lattice_unit_generator(0).unwrap(), big(5));
        assert_eq!(m.lattice_unit_generator(1).unwrap(), big(5));
        assert_eq!(IntMatrix::identity(3).lattice_unit_generator(0).unwrap(), big(1));
    }

    #[test]
    fn unit_generator_missing() {
        let m = IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(
            m.lattice_unit_generator(0).unwrap_err(),
            LinalgError::NoUnitMultiple { unit_index: 0 }
        );
        assert!(m.lattice_unit_generator(5).is_err());
    }

    #[test]
    fn symmetric_and_transpose() {
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        assert!(!m.is_symmetric());
        assert_eq!(m.transpose().transpose(), m);
        let s = m.mul(&m.transpose()).unwrap();
        assert!(s.is_symmetric());
    }
}
