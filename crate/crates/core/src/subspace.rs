//! Linear subspaces of `F_p^n`, stored canonically by an RREF basis.
//!
//! Two subspaces are equal exactly when their RREF bases coincide, so the
//! derived `PartialEq` is set-level equality.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::FieldMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: FieldMatrix,
    pivots: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct SubspaceOps {
    pub intersection: Subspace,
    pub sum: Subspace,
    pub annihilator_of_a: Subspace,
}

impl Subspace {
    pub fn from_spanning(field: PrimeField, ambient: usize, vectors: &[Vec<u32>]) -> Self {
        let m = FieldMatrix::from_rows(field, ambient, vectors);
        Self::row_space(&m)
    }

    /// Row space of a matrix.
    pub fn row_space(m: &FieldMatrix) -> Self {
        let (r, pivots) = m.rref();
        let basis = r.truncate_rows(pivots.len());
        Subspace { ambient: m.cols(), basis, pivots }
    }

    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace { ambient, basis: FieldMatrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: FieldMatrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &FieldMatrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<u32>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coefficients of `v` in the RREF basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vec<u32> = self.pivots.iter().map(|&c| v[c]).collect();
        let back = self.basis.left_apply(&coords);
        (back == v).then_some(coords)
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_rows().iter().all(|r| self.contains(r))
    }

    fn check_same(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient || self.field() != other.field() {
            return Err(Error::Dimension(format!(
                "subspaces of F^{} and F^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        Ok(Subspace::row_space(&self.basis.vstack(&other.basis)?))
    }

    /// `{u : u·v = 0 for all v in self}` under the coordinate dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.field(), self.ambient);
        }
        self.basis.kernel()
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    pub fn ops(&self, other: &Subspace) -> Result<SubspaceOps> {
        Ok(SubspaceOps {
            intersection: self.intersection(other)?,
            sum: self.sum(other)?,
            annihilator_of_a: self.annihilator(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize) -> Vec<u32> {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    }

    #[test]
    fn coordinate_lines_in_the_plane() {
        let f = PrimeField::new(31).unwrap();
        let a = Subspace::from_spanning(f, 2, &[e(2, 0)]);
        let b = Subspace::from_spanning(f, 2, &[e(2, 1)]);
        let ops = a.ops(&b).unwrap();
        assert_eq!(ops.intersection.dim(), 0);
        assert_eq!(ops.sum, Subspace::full(f, 2));
        assert_eq!(ops.annihilator_of_a, b);
    }

    #[test]
    fn idempotence() {
        let f = PrimeField::new(31).unwrap();
        let a = Subspace::from_spanning(f, 4, &[vec![1, 2, 3, 4], vec![0, 1, 1, 0]]);
        let ops = a.ops(&a).unwrap();
        assert_eq!(ops.intersection, a);
        assert_eq!(ops.sum, a);
        assert_eq!(a.annihilator().annihilator(), a);
    }

    #[test]
    fn shared_line_in_five_space() {
        let f = PrimeField::new(31).unwrap();
        let a = Subspace::from_spanning(f, 5, &[vec![1, 1, 0, 0, 0], e(5, 2)]);
        let b = Subspace::from_spanning(f, 5, &[vec![1, 1, 0, 0, 0], e(5, 3)]);
        let i = a.intersection(&b).unwrap();
        assert_eq!(i, Subspace::from_spanning(f, 5, &[vec![1, 1, 0, 0, 0]]));
        let s = a.sum(&b).unwrap();
        assert_eq!(i.dim() + s.dim(), a.dim() + b.dim());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let f = PrimeField::new(31).unwrap();
        let a = Subspace::full(f, 3);
        let b = Subspace::full(f, 4);
        assert!(a.intersection(&b).is_err());
        assert!(a.sum(&b).is_err());
    }
}
