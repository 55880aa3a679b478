//! Exact rational linear algebra: dense matrices with rank / kernel /
//! cokernel / determinant / inverse, plus a sparse rank routine for the large
//! structured systems produced by Hom/Ext computations.
//!
//! All eliminations use exact [`Rat`](crate::Rat) arithmetic; pivot choices are
//! deterministic so that every derived basis is reproducible bit-for-bit.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rat;

/// Dense matrix over the rationals, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    /// The `rows × cols` zero matrix.
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    /// The `n × n` identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Builds a matrix from rows; every row must have the same length.
    ///
    /// An empty row list yields the 0×0 matrix.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::InvalidInput("ragged matrix rows".to_string()));
        }
        Ok(Mat {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Number of rows.
    pub fn nrows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Entry at `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    /// Sets the entry at `(r, c)`.
    pub fn set(&mut self, r: usize, c: usize, value: Rat) {
        self.data[r * self.cols + c] = value;
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::InvalidInput("matrix shape mismatch in product".to_string()));
        }
        let mut out = Mat::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c).clone();
                    out.set(r, c, cur + a * b);
                }
            }
        }
        Ok(out)
    }

    /// Matrix–vector product.
    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(Error::InvalidInput("vector length mismatch in product".to_string()));
        }
        let mut out = vec![Rat::zero(); self.rows];
        for r in 0..self.rows {
            let mut acc = Rat::zero();
            for c in 0..self.cols {
                let a = self.get(r, c);
                if !a.is_zero() && !v[c].is_zero() {
                    acc += a * &v[c];
                }
            }
            out[r] = acc;
        }
        Ok(out)
    }

    /// Transposed copy.
    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pivot_row) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if pivot_row != row {
                for c in 0..self.cols {
                    self.data.swap(pivot_row * self.cols + c, row * self.cols + c);
                }
            }
            let inv = {
                let p = self.get(row, col).clone();
                Rat::one() / p
            };
            for c in col..self.cols {
                let v = self.get(row, c).clone() * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = self.get(r, c).clone() - &factor * self.get(row, c);
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis of the right null space `{x : A·x = 0}`.
    ///
    /// Vectors are returned in ascending order of their free column, each
    /// normalized so the free coordinate equals 1.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let pivot_of_col: BTreeMap<usize, usize> =
            pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col.contains_key(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (&pc, &pr) in &pivot_of_col {
                v[pc] = -m.get(pr, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of the left null space `{y : y·A = 0}` (rows annihilating `A`).
    ///
    /// The rows of the returned matrix realize the cokernel of `A` as a
    /// concrete projection: they are independent, annihilate the column space,
    /// and there are `nrows − rank` of them.
    pub fn left_kernel_basis(&self) -> Vec<Vec<Rat>> {
        self.transpose().kernel_basis()
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Result<Rat> {
        if self.rows != self.cols {
            return Err(Error::Precondition("determinant of a non-square matrix".to_string()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(pivot_row) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(Rat::zero());
            };
            if pivot_row != col {
                for c in 0..n {
                    m.data.swap(pivot_row * n + c, col * n + c);
                }
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in (col + 1)..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone() / &pivot;
                for c in col..n {
                    let v = m.get(r, c).clone() - &factor * m.get(col, c);
                    m.set(r, c, v);
                }
            }
        }
        Ok(det)
    }

    /// Inverse of a square matrix; errors when singular.
    pub fn inverse(&self) -> Result<Mat> {
        if self.rows != self.cols {
            return Err(Error::Precondition("inverse of a non-square matrix".to_string()));
        }
        let n = self.rows;
        let mut aug = Mat::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Rat::one());
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Err(Error::Precondition("matrix is singular".to_string()));
        }
        let mut out = Mat::zero(n, n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, aug.get(r, n + c).clone());
            }
        }
        Ok(out)
    }
}

/// Rank of a sparse matrix given as rows of `column → value` maps.
///
/// Pivoting is deterministic: the active row with the fewest nonzeros wins
/// (ties by original row index), then within it the column occurring in the
/// fewest active rows (ties by column index). This keeps fill-in low on the
/// block-sparse systems assembled for Hom/Ext while staying exact.
pub fn sparse_rank(mut rows: Vec<BTreeMap<usize, Rat>>) -> usize {
    let mut active: Vec<bool> = rows.iter().map(|r| !r.is_empty()).collect();
    let mut rank = 0;
    loop {
        let Some(pivot_row) = (0..rows.len())
            .filter(|&i| active[i] && !rows[i].is_empty())
            .min_by_key(|&i| (rows[i].len(), i))
        else {
            break;
        };
        let mut occupancy: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, row) in rows.iter().enumerate() {
            if !active[i] || i == pivot_row {
                continue;
            }
            for &c in row.keys() {
                if rows[pivot_row].contains_key(&c) {
                    *occupancy.entry(c).or_insert(0) += 1;
                }
            }
        }
        let pivot_col = rows[pivot_row]
            .keys()
            .copied()
            .min_by_key(|c| (occupancy.get(c).copied().unwrap_or(0), *c))
            .expect("pivot row is nonempty");
        rank += 1;
        active[pivot_row] = false;
        let pivot_entries: Vec<(usize, Rat)> = rows[pivot_row]
            .iter()
            .map(|(&c, v)| (c, v.clone()))
            .collect();
        let pivot_value = rows[pivot_row][&pivot_col].clone();
        for i in 0..rows.len() {
            if !active[i] {
                continue;
            }
            let Some(entry) = rows[i].get(&pivot_col).cloned() else {
                continue;
            };
            let factor = entry / &pivot_value;
            for (c, v) in &pivot_entries {
                let delta = &factor * v;
                match rows[i].entry(*c) {
                    alloc::collections::btree_map::Entry::Occupied(mut o) => {
                        let new = o.get().clone() - delta;
                        if new.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = new;
                        }
                    }
                    alloc::collections::btree_map::Entry::Vacant(v_entry) => {
                        if !delta.is_zero() {
                            v_entry.insert(-delta);
                        }
                    }
                }
            }
            rows[i].remove(&pivot_col);
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rint};

    fn m(rows: Vec<Vec<i64>>) -> Mat {
        Mat::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rint).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_kernel_of_small_system() {
        let a = m(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let kernel = a.kernel_basis();
        assert_eq!(kernel.len(), 1);
        for v in &kernel {
            let image = a.mul_vec(v).unwrap();
            assert!(image.iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn left_kernel_realizes_cokernel() {
        let a = m(vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        let left = a.left_kernel_basis();
        assert_eq!(left.len(), 1);
        let y = &left[0];
        for c in 0..a.ncols() {
            let mut acc = Rat::zero();
            for r in 0..a.nrows() {
                acc += &y[r] * a.get(r, c);
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn determinant_and_inverse_are_exact() {
        let a = m(vec![vec![2, 1], vec![1, 1]]);
        assert_eq!(a.det().unwrap(), rint(1));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Mat::identity(2));
        assert_eq!(*inv.get(0, 1), rat(-1, 1));
    }

    #[test]
    fn inverse_rejects_singular() {
        let a = m(vec![vec![1, 2], vec![2, 4]]);
        assert!(a.inverse().is_err());
        assert_eq!(a.det().unwrap(), rint(0));
    }

    #[test]
    fn empty_shapes_are_consistent() {
        let a = Mat::zero(0, 3);
        assert_eq!(a.rank(), 0);
        assert_eq!(a.kernel_basis().len(), 3);
        let b = Mat::zero(3, 0);
        assert_eq!(b.rank(), 0);
        assert!(b.kernel_basis().is_empty());
        assert_eq!(Mat::zero(0, 0).det().unwrap(), rint(1));
    }

    #[test]
    fn sparse_rank_agrees_with_dense() {
        let dense = m(vec![
            vec![1, 0, 2, 0],
            vec![0, 0, 0, 0],
            vec![3, 0, 6, 0],
            vec![0, 5, 0, 1],
            vec![1, 5, 2, 1],
        ]);
        let rows = (0..dense.nrows())
            .map(|r| {
                (0..dense.ncols())
                    .filter(|&c| !dense.get(r, c).is_zero())
                    .map(|c| (c, dense.get(r, c).clone()))
                    .collect()
            })
            .collect();
        assert_eq!(sparse_rank(rows), dense.rank());
        assert_eq!(dense.rank(), 2);
    }
}
