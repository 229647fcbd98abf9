//! Dense matrices over `F_p` with Gauss–Jordan elimination.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::subspace::Subspace;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of a full row reduction.
#[derive(Clone, Debug)]
pub struct RowReduction {
    pub rref: FieldMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub kernel: Subspace,
}

impl FieldMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FieldMatrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Row-major constructor; entries are reduced mod p.
    pub fn new(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        let p = field.modulus();
        let data = data.into_iter().map(|a| a % p).collect();
        FieldMatrix { field, rows, cols, data }
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&a| a % field.modulus()));
        }
        FieldMatrix { field, rows: rows.len(), cols, data }
    }

    pub fn from_i64_rows(field: PrimeField, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&a| field.from_i64(a)));
        }
        FieldMatrix { field, rows: rows.len(), cols, data }
    }

    pub fn random<R: Rng + ?Sized>(field: PrimeField, rows: usize, cols: usize, rng: &mut R) -> Self {
        let data = (0..rows * cols).map(|_| field.random(rng)).collect();
        FieldMatrix { field, rows, cols, data }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.field.modulus();
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn mul(&self, other: &FieldMatrix) -> Result<FieldMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let p = f.modulus() as u64;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0u64;
                for k in 0..self.cols {
                    acc = (acc + self.get(i, k) as u64 * other.get(k, j) as u64) % p;
                }
                out.data[i * other.cols + j] = acc as u32;
            }
        }
        Ok(out)
    }

    /// `v * self` for a row vector `v`.
    pub fn left_apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.rows);
        let p = self.field.modulus() as u64;
        (0..self.cols)
            .map(|j| {
                let mut acc = 0u64;
                for (i, &vi) in v.iter().enumerate() {
                    acc = (acc + vi as u64 * self.get(i, j) as u64) % p;
                }
                acc as u32
            })
            .collect()
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.field.modulus() as u64;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for (a, &b) in self.row(i).iter().zip(v) {
                    acc = (acc + *a as u64 * b as u64) % p;
                }
                acc as u32
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&a| a == 0)
    }

    pub fn is_skew(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let f = self.field;
        (0..self.rows).all(|i| {
            self.get(i, i) == 0 && (i + 1..self.cols).all(|j| self.get(i, j) == f.neg(self.get(j, i)))
        })
    }

    /// In-place Gauss–Jordan elimination; returns pivot columns.
    fn eliminate(&mut self) -> Vec<usize> {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c]);
            for j in c..cols {
                self.data[r * cols + j] = f.mul(self.data[r * cols + j], inv);
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c];
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let v = self.data[r * cols + j];
                    if v != 0 {
                        self.data[i * cols + j] = f.sub_mul(self.data[i * cols + j], factor, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row-echelon form (zero rows kept at the bottom) and pivot columns.
    pub fn rref(&self) -> (FieldMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.eliminate();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Right null space `{v : self * v = 0}`, as a subspace of `F_p^cols`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots)
    }

    pub fn rref_rank_kernel(&self) -> RowReduction {
        let (rref, pivots) = self.rref();
        let kernel = kernel_from_rref(&rref, &pivots);
        RowReduction { rank: pivots.len(), rref, pivots, kernel }
    }

    pub fn determinant(&self) -> Result<u32> {
        if self.rows != self.cols {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let f = self.field;
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = 1u32;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| a[i * n + c] != 0) else {
                return Ok(0);
            };
            if pr != c {
                for j in 0..n {
                    a.swap(pr * n + j, c * n + j);
                }
                det = f.neg(det);
            }
            let piv = a[c * n + c];
            det = f.mul(det, piv);
            let inv = f.inv(piv);
            for i in c + 1..n {
                let factor = f.mul(a[i * n + c], inv);
                if factor == 0 {
                    continue;
                }
                for j in c..n {
                    a[i * n + j] = f.sub_mul(a[i * n + j], factor, a[c * n + j]);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Option<FieldMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.get(i, j);
            }
            aug.data[i * 2 * n + n + i] = 1;
        }
        let pivots = aug.eliminate();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i * n + j] = aug.data[i * 2 * n + n + j];
            }
        }
        Some(inv)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &FieldMatrix) -> Result<FieldMatrix> {
        if self.cols != other.cols {
            return Err(Error::Dimension("vstack with different column counts".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(FieldMatrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Keeps the first `n` rows.
    pub fn truncate_rows(mut self, n: usize) -> FieldMatrix {
        self.rows = self.rows.min(n);
        self.data.truncate(self.rows * self.cols);
        self
    }
}

fn kernel_from_rref(r: &FieldMatrix, pivots: &[usize]) -> Subspace {
    let f = r.field;
    let cols = r.cols;
    let mut is_pivot = vec![false; cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u32; cols];
        v[free] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(r.get(row, free));
        }
        basis.push(v);
    }
    Subspace::from_spanning(f, cols, &basis)
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FieldMatrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f31() -> PrimeField {
        PrimeField::new(31).unwrap()
    }

    #[test]
    fn identity_has_full_rank_and_trivial_kernel() {
        let r = FieldMatrix::identity(f31(), 2).rref_rank_kernel();
        assert_eq!(r.rank, 2);
        assert_eq!(r.kernel.dim(), 0);
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let r = FieldMatrix::zeros(f31(), 3, 4).rref_rank_kernel();
        assert_eq!(r.rank, 0);
        assert_eq!(r.kernel, Subspace::full(f31(), 4));
    }

    #[test]
    fn rank_one_example() {
        let f = f31();
        let m = FieldMatrix::from_i64_rows(f, &[&[1, 2], &[2, 4]]);
        let r = m.rref_rank_kernel();
        assert_eq!(r.rank, 1);
        let expected = Subspace::from_spanning(f, 2, &[vec![2, f.from_i64(-1)]]);
        assert_eq!(r.kernel, expected);
        for k in r.kernel.basis_rows() {
            assert!(m.apply(&k).iter().all(|&a| a == 0));
        }
    }

    #[test]
    fn determinant_and_inverse_agree() {
        use rand::SeedableRng;
        let f = PrimeField::new(101).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let m = FieldMatrix::random(f, 5, 5, &mut rng);
            let d = m.determinant().unwrap();
            match m.inverse() {
                Some(inv) => {
                    assert_ne!(d, 0);
                    assert_eq!(m.mul(&inv).unwrap(), FieldMatrix::identity(f, 5));
                }
                None => assert_eq!(d, 0),
            }
        }
    }
}
