//! Exterior algebra of a 7-dimensional space over `F_p`.
//!
//! Basis conventions used everywhere in the crate:
//! * `∧²` coordinates are indexed by pairs `(i, j)` with `i < j` in
//!   lexicographic order `(0,1), (0,2), …, (5,6)` (21 of them);
//! * `∧⁴` coordinates are indexed by 4-subsets in lexicographic order
//!   (35 of them);
//! * `e_i ∧ e_j = -e_j ∧ e_i`, and a 2-form `y` is the skew matrix with
//!   entry `(i, j) = y(e_i ∧ e_j)`.
//!
//! Indices are 0-based in code; the pair `(0, 1)` is `e_1 ∧ e_2` in 1-based
//! notation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::FieldMatrix;
use crate::subspace::Subspace;

/// Dimension of `V`.
pub const DIM_V: usize = 7;
/// Dimension of `∧²V`.
pub const DIM_WEDGE2: usize = 21;
/// Dimension of `∧⁴V`.
pub const DIM_WEDGE4: usize = 35;

const fn build_pairs() -> [(usize, usize); DIM_WEDGE2] {
    let mut out = [(0, 0); DIM_WEDGE2];
    let mut k = 0;
    let mut i = 0;
    while i < DIM_V {
        let mut j = i + 1;
        while j < DIM_V {
            out[k] = (i, j);
            k += 1;
            j += 1;
        }
        i += 1;
    }
    out
}

const fn build_quads() -> [[usize; 4]; DIM_WEDGE4] {
    let mut out = [[0; 4]; DIM_WEDGE4];
    let mut k = 0;
    let mut a = 0;
    while a < DIM_V {
        let mut b = a + 1;
        while b < DIM_V {
            let mut c = b + 1;
            while c < DIM_V {
                let mut d = c + 1;
                while d < DIM_V {
                    out[k] = [a, b, c, d];
                    k += 1;
                    d += 1;
                }
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    out
}

/// The 21 index pairs of `∧²`, lexicographic.
pub const PAIRS: [(usize, usize); DIM_WEDGE2] = build_pairs();
/// The 35 index quadruples of `∧⁴`, lexicographic.
pub const QUADS: [[usize; 4]; DIM_WEDGE4] = build_quads();

/// Position of the pair `(i, j)`, `i < j`, in [`PAIRS`].
#[inline]
pub const fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < DIM_V);
    DIM_V * i - i * (i + 1) / 2 + (j - i - 1)
}

/// Minimal commutative-ring interface, so the same Pfaffian and wedge
/// formulas run on field elements and on polynomials.
pub trait RingOps {
    type Elem: Clone;
    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, k: i64) -> Self::Elem;
}

impl RingOps for PrimeField {
    type Elem = u32;
    fn zero(&self) -> u32 {
        0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        PrimeField::add(self, *a, *b)
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        PrimeField::sub(self, *a, *b)
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        PrimeField::mul(self, *a, *b)
    }
    fn scale(&self, a: &u32, k: i64) -> u32 {
        PrimeField::mul(self, *a, self.from_i64(k))
    }
}

/// Pfaffian of the skew matrix on the index set `idx`, where `upper(i, j)`
/// returns the entry at `(i, j)` for `i < j`. Expansion along the first row:
/// `Pf = Σ_j (-1)^(j+1) a_{0 j} Pf(minor without 0, j)` (0-based `j ≥ 1`).
pub fn pfaffian_with<R: RingOps>(
    ring: &R,
    idx: &[usize],
    upper: &dyn Fn(usize, usize) -> R::Elem,
) -> R::Elem {
    assert!(!idx.is_empty() && idx.len().is_multiple_of(2), "Pfaffian needs a positive even size");
    if idx.len() == 2 {
        return upper(idx[0], idx[1]);
    }
    let first = idx[0];
    let mut acc = ring.zero();
    for pos in 1..idx.len() {
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&v| v != idx[pos]).collect();
        let term = ring.mul(&upper(first, idx[pos]), &pfaffian_with(ring, &rest, upper));
        acc = if pos % 2 == 1 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
    }
    acc
}

/// Pfaffian of an even skew-symmetric matrix.
pub fn pfaffian(m: &FieldMatrix) -> Result<u32> {
    if !m.is_skew() {
        return Err(Error::NotSkew);
    }
    let n = m.rows();
    if n % 2 == 1 {
        return Err(Error::OddPfaffian(n));
    }
    if n == 0 {
        return Ok(1);
    }
    let idx: Vec<usize> = (0..n).collect();
    Ok(pfaffian_with(&m.field(), &idx, &|i, j| m.get(i, j)))
}

/// The seven Pfaffians of the 6×6 principal minors (delete row and column `i`).
pub fn sub_pfaffians_with<R: RingOps>(ring: &R, upper: &dyn Fn(usize, usize) -> R::Elem) -> Vec<R::Elem> {
    (0..DIM_V)
        .map(|del| {
            let idx: Vec<usize> = (0..DIM_V).filter(|&k| k != del).collect();
            pfaffian_with(ring, &idx, upper)
        })
        .collect()
}

pub fn sub_pfaffians(m: &FieldMatrix) -> Result<[u32; DIM_V]> {
    if m.rows() != DIM_V || m.cols() != DIM_V {
        return Err(Error::Dimension(format!("sub-Pfaffians need 7x7, got {}x{}", m.rows(), m.cols())));
    }
    if !m.is_skew() {
        return Err(Error::NotSkew);
    }
    let v = sub_pfaffians_with(&m.field(), &|i, j| m.get(i, j));
    Ok(v.try_into().expect("seven values"))
}

/// The 35 coordinates of `x ∧ x` given the 21 coordinates of `x`:
/// `(x∧x)_{abcd} = 2 (x_ab x_cd - x_ac x_bd + x_ad x_bc)`.
pub fn wedge_square_with<R: RingOps>(ring: &R, x: &[R::Elem]) -> Vec<R::Elem> {
    assert_eq!(x.len(), DIM_WEDGE2);
    QUADS
        .iter()
        .map(|&[a, b, c, d]| {
            let t1 = ring.mul(&x[pair_index(a, b)], &x[pair_index(c, d)]);
            let t2 = ring.mul(&x[pair_index(a, c)], &x[pair_index(b, d)]);
            let t3 = ring.mul(&x[pair_index(a, d)], &x[pair_index(b, c)]);
            ring.scale(&ring.add(&ring.sub(&t1, &t2), &t3), 2)
        })
        .collect()
}

/// Skew-symmetric 7×7 matrix of a 2-form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TwoForm {
    matrix: FieldMatrix,
}

impl TwoForm {
    pub fn from_matrix(matrix: FieldMatrix) -> Result<Self> {
        if matrix.rows() != DIM_V || matrix.cols() != DIM_V {
            return Err(Error::Dimension("a two-form is a 7x7 matrix".into()));
        }
        if !matrix.is_skew() {
            return Err(Error::NotSkew);
        }
        Ok(TwoForm { matrix })
    }

    /// Builds the form from its 21 coordinates `y(e_i ∧ e_j)`, `i < j`.
    pub fn from_coords(field: PrimeField, coords: &[u32]) -> Self {
        assert_eq!(coords.len(), DIM_WEDGE2);
        let mut m = FieldMatrix::zeros(field, DIM_V, DIM_V);
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            let v = coords[k] % field.modulus();
            m.set(i, j, v);
            m.set(j, i, field.neg(v));
        }
        TwoForm { matrix: m }
    }

    pub fn zero(field: PrimeField) -> Self {
        TwoForm { matrix: FieldMatrix::zeros(field, DIM_V, DIM_V) }
    }

    /// `x_i ∧ x_j` (0-based).
    pub fn elementary(field: PrimeField, i: usize, j: usize) -> Self {
        let mut c = [0u32; DIM_WEDGE2];
        if i < j {
            c[pair_index(i, j)] = 1;
        } else {
            c[pair_index(j, i)] = field.neg(1);
        }
        Self::from_coords(field, &c)
    }

    /// `α ∧ β` for covectors `α, β`.
    pub fn wedge(field: PrimeField, a: &[u32], b: &[u32]) -> Self {
        Self::from_coords(field, &wedge_vectors(field, a, b))
    }

    pub fn field(&self) -> PrimeField {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &FieldMatrix {
        &self.matrix
    }

    pub fn coords(&self) -> Vec<u32> {
        PAIRS.iter().map(|&(i, j)| self.matrix.get(i, j)).collect()
    }

    pub fn add(&self, other: &TwoForm) -> TwoForm {
        let f = self.field();
        let c: Vec<u32> = self.coords().iter().zip(other.coords()).map(|(&a, b)| f.add(a, b)).collect();
        Self::from_coords(f, &c)
    }

    pub fn scale(&self, k: u32) -> TwoForm {
        let f = self.field();
        let c: Vec<u32> = self.coords().iter().map(|&a| f.mul(a, k)).collect();
        Self::from_coords(f, &c)
    }

    /// `y(u, v) = uᵀ Y v`.
    pub fn eval(&self, u: &[u32], v: &[u32]) -> u32 {
        let yu = self.matrix.left_apply(u);
        let f = self.field();
        yu.iter().zip(v).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
    }

    /// Transport by `A` acting on covectors: matrix `A Y Aᵀ`.
    pub fn transport(&self, a: &FieldMatrix) -> Result<TwoForm> {
        let m = a.mul(&self.matrix)?.mul(&a.transpose())?;
        TwoForm::from_matrix(m)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

impl fmt::Debug for TwoForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwoForm{:?}", self.coords())
    }
}

/// Rank and kernel of a 2-form; the rank is always even.
pub fn form_rank_kernel(y: &TwoForm) -> (usize, Subspace) {
    let r = y.matrix.rref_rank_kernel();
    debug_assert!(r.rank.is_multiple_of(2));
    (r.rank, r.kernel)
}

/// A point of `P(∧²V)` in pair-lex coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PluckerVector {
    pub coords: Vec<u32>,
}

impl PluckerVector {
    pub fn new(coords: Vec<u32>) -> Self {
        assert_eq!(coords.len(), DIM_WEDGE2);
        PluckerVector { coords }
    }

    pub fn unit(i: usize, j: usize) -> Self {
        let mut c = vec![0; DIM_WEDGE2];
        c[pair_index(i, j)] = 1;
        PluckerVector { coords: c }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&a| a == 0)
    }

    pub fn add(&self, f: PrimeField, other: &PluckerVector) -> PluckerVector {
        PluckerVector::new(self.coords.iter().zip(&other.coords).map(|(&a, &b)| f.add(a, b)).collect())
    }

    /// Scaled so the first nonzero coordinate is 1.
    pub fn normalized(&self, f: PrimeField) -> PluckerVector {
        PluckerVector::new(normalize_projective(f, &self.coords))
    }

    /// The skew matrix with `(i, j)` entry `x_ij`.
    pub fn skew_matrix(&self, f: PrimeField) -> FieldMatrix {
        TwoForm::from_coords(f, &self.coords).matrix
    }
}

impl fmt::Debug for PluckerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Plucker{:?}", self.coords)
    }
}

/// A 2-dimensional subspace of `V` with a chosen basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TwoPlane {
    basis: FieldMatrix,
}

impl TwoPlane {
    pub fn new(field: PrimeField, u: &[u32], v: &[u32]) -> Result<Self> {
        assert!(u.len() == DIM_V && v.len() == DIM_V);
        let basis = FieldMatrix::from_rows(field, DIM_V, &[u.to_vec(), v.to_vec()]);
        Self::from_matrix(basis)
    }

    pub fn from_matrix(basis: FieldMatrix) -> Result<Self> {
        if basis.rows() != 2 || basis.cols() != DIM_V {
            return Err(Error::Dimension("a two-plane basis is 2x7".into()));
        }
        if basis.rank() != 2 {
            return Err(Error::DegeneratePlane);
        }
        Ok(TwoPlane { basis })
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    pub fn basis(&self) -> &FieldMatrix {
        &self.basis
    }

    pub fn vectors(&self) -> (Vec<u32>, Vec<u32>) {
        (self.basis.row(0).to_vec(), self.basis.row(1).to_vec())
    }

    pub fn subspace(&self) -> Subspace {
        Subspace::row_space(&self.basis)
    }

    /// Same plane with the RREF basis.
    pub fn canonical(&self) -> TwoPlane {
        TwoPlane { basis: self.subspace().basis().clone() }
    }
}

impl fmt::Debug for TwoPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwoPlane[{:?}, {:?}]", self.basis.row(0), self.basis.row(1))
    }
}

/// Coordinates of `u ∧ v`: the 2×2 minors on each column pair.
pub fn wedge_vectors(f: PrimeField, u: &[u32], v: &[u32]) -> Vec<u32> {
    PAIRS.iter().map(|&(i, j)| f.sub(f.mul(u[i], v[j]), f.mul(u[j], v[i]))).collect()
}

pub fn plucker_embed(t: &TwoPlane) -> PluckerVector {
    let (u, v) = t.vectors();
    PluckerVector::new(wedge_vectors(t.field(), &u, &v))
}

pub fn wedge_square(f: PrimeField, x: &PluckerVector) -> Vec<u32> {
    wedge_square_with(&f, &x.coords)
}

/// Recovers the plane of a decomposable nonzero Plücker vector. Contracting
/// `x` with the dual basis gives the rows of its skew matrix, which span `T`.
pub fn decompose_plucker(f: PrimeField, x: &PluckerVector) -> Result<TwoPlane> {
    if x.is_zero() || wedge_square(f, x).iter().any(|&a| a != 0) {
        return Err(Error::NotDecomposable);
    }
    let span = Subspace::row_space(&x.skew_matrix(f));
    if span.dim() != 2 {
        return Err(Error::NotDecomposable);
    }
    TwoPlane::from_matrix(span.basis().clone())
}

/// The duality pairing `Σ_{i<j} w_ij x_ij`.
pub fn pair_eval(w: &TwoForm, x: &PluckerVector) -> u32 {
    let f = w.field();
    dot(f, &w.coords(), &x.coords)
}

pub fn dot(f: PrimeField, a: &[u32], b: &[u32]) -> u32 {
    let p = f.modulus() as u64;
    (a.iter().zip(b).fold(0u64, |acc, (&x, &y)| (acc + x as u64 * y as u64) % p)) as u32
}

/// `∧²k` inside the 21-dimensional exterior square (of `V` or `V*`,
/// whichever `k` lives in).
pub fn wedge2_subspace(k: &Subspace) -> Result<Subspace> {
    if k.ambient_dim() != DIM_V {
        return Err(Error::Dimension("wedge2_subspace expects a subspace of a 7-space".into()));
    }
    if k.dim() < 2 {
        return Err(Error::Dimension(format!("∧² of a {}-dimensional space is zero", k.dim())));
    }
    let f = k.field();
    let rows = k.basis_rows();
    let mut gens = Vec::new();
    for a in 0..rows.len() {
        for b in a + 1..rows.len() {
            gens.push(wedge_vectors(f, &rows[a], &rows[b]));
        }
    }
    Ok(Subspace::from_spanning(f, DIM_WEDGE2, &gens))
}

/// Scales `v` so its first nonzero entry is 1; zero stays zero.
pub fn normalize_projective(f: PrimeField, v: &[u32]) -> Vec<u32> {
    match v.iter().find(|&&a| a != 0) {
        None => v.to_vec(),
        Some(&lead) => {
            let inv = f.inv(lead);
            v.iter().map(|&a| f.mul(a, inv)).collect()
        }
    }
}

pub fn projectively_equal(f: PrimeField, a: &[u32], b: &[u32]) -> bool {
    normalize_projective(f, a) == normalize_projective(f, b)
}

/// The rank-4 normal form `x_1∧x_2 + x_3∧x_4` (1-based), kernel `⟨e_5,e_6,e_7⟩`.
pub fn rank4_normal_form(f: PrimeField) -> TwoForm {
    TwoForm::elementary(f, 0, 1).add(&TwoForm::elementary(f, 2, 3))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f31() -> PrimeField {
        PrimeField::new(31).unwrap()
    }

    fn e(i: usize) -> Vec<u32> {
        let mut v = vec![0; DIM_V];
        v[i] = 1;
        v
    }

    #[test]
    fn pair_index_matches_table() {
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            assert_eq!(pair_index(i, j), k);
        }
        assert_eq!(QUADS[0], [0, 1, 2, 3]);
        assert_eq!(QUADS[34], [3, 4, 5, 6]);
    }

    #[test]
    fn pfaffian_small_cases() {
        let f = f31();
        let m = FieldMatrix::from_i64_rows(f, &[&[0, 5], &[-5, 0]]);
        assert_eq!(pfaffian(&m).unwrap(), 5);
        // block-diagonal symplectic
        let mut j = FieldMatrix::zeros(f, 6, 6);
        for b in 0..3 {
            j.set(2 * b, 2 * b + 1, 1);
            j.set(2 * b + 1, 2 * b, f.neg(1));
        }
        assert_eq!(pfaffian(&j).unwrap(), 1);
    }

    #[test]
    fn pfaffian_rejects_bad_input() {
        let f = f31();
        assert!(matches!(pfaffian(&FieldMatrix::zeros(f, 3, 3)), Err(Error::OddPfaffian(3))));
        let m = FieldMatrix::from_i64_rows(f, &[&[0, 1], &[1, 0]]);
        assert!(matches!(pfaffian(&m), Err(Error::NotSkew)));
    }

    #[test]
    fn sub_pfaffian_examples() {
        let f = f31();
        let y4 = rank4_normal_form(f);
        assert_eq!(sub_pfaffians(y4.matrix()).unwrap(), [0; 7]);
        let y6 = y4.add(&TwoForm::elementary(f, 4, 5));
        let s = sub_pfaffians(y6.matrix()).unwrap();
        assert_eq!(s[6], 1);
        assert_eq!(sub_pfaffians(TwoForm::zero(f).matrix()).unwrap(), [0; 7]);
    }

    #[test]
    fn rank_and_kernel_of_normal_forms() {
        let f = f31();
        let y2 = TwoForm::elementary(f, 0, 1);
        let (r, k) = form_rank_kernel(&y2);
        assert_eq!(r, 2);
        assert_eq!(k, Subspace::from_spanning(f, 7, &[e(2), e(3), e(4), e(5), e(6)]));
        let y4 = rank4_normal_form(f);
        let (r, k) = form_rank_kernel(&y4);
        assert_eq!(r, 4);
        assert_eq!(k, Subspace::from_spanning(f, 7, &[e(4), e(5), e(6)]));
        let y6 = y4.add(&TwoForm::elementary(f, 4, 5));
        let (r, k) = form_rank_kernel(&y6);
        assert_eq!(r, 6);
        assert_eq!(k, Subspace::from_spanning(f, 7, &[e(6)]));
    }

    #[test]
    fn plucker_examples() {
        let f = f31();
        let t = TwoPlane::new(f, &e(0), &e(1)).unwrap();
        assert_eq!(plucker_embed(&t), PluckerVector::unit(0, 1));
        let mut u = e(0);
        u[2] = 1;
        let x = plucker_embed(&TwoPlane::new(f, &u, &e(1)).unwrap());
        let mut expected = vec![0; 21];
        expected[pair_index(0, 1)] = 1;
        expected[pair_index(1, 2)] = f.neg(1);
        assert_eq!(x.coords, expected);
        // base change by [[2,3],[1,5]] scales by det = 7
        let a: Vec<u32> = (0..7).map(|k| f.add(f.mul(2, e(0)[k]), f.mul(3, e(1)[k]))).collect();
        let b: Vec<u32> = (0..7).map(|k| f.add(e(0)[k], f.mul(5, e(1)[k]))).collect();
        let y = plucker_embed(&TwoPlane::new(f, &a, &b).unwrap());
        assert!(projectively_equal(f, &y.coords, &PluckerVector::unit(0, 1).coords));
        assert!(matches!(TwoPlane::new(f, &e(0), &e(0)), Err(Error::DegeneratePlane)));
    }

    #[test]
    fn wedge_square_examples() {
        let f = f31();
        assert!(wedge_square(f, &PluckerVector::unit(0, 1)).iter().all(|&a| a == 0));
        let x = PluckerVector::unit(0, 1).add(f, &PluckerVector::unit(2, 3));
        let w = wedge_square(f, &x);
        assert_eq!(w[0], 2);
        assert!(w[1..].iter().all(|&a| a == 0));
        assert!(matches!(decompose_plucker(f, &x), Err(Error::NotDecomposable)));
    }

    #[test]
    fn decompose_unit() {
        let f = f31();
        let t = decompose_plucker(f, &PluckerVector::unit(0, 1)).unwrap();
        assert_eq!(t.subspace(), Subspace::from_spanning(f, 7, &[e(0), e(1)]));
    }

    #[test]
    fn pairing_examples() {
        let f = f31();
        let w = TwoForm::elementary(f, 0, 1);
        assert_eq!(pair_eval(&w, &PluckerVector::unit(0, 1)), 1);
        assert_eq!(pair_eval(&w, &PluckerVector::unit(2, 3)), 0);
        let y = rank4_normal_form(f);
        let t = TwoPlane::new(f, &e(4), &[0, 0, 0, 0, 0, 3, 7]).unwrap();
        assert_eq!(pair_eval(&y, &plucker_embed(&t)), 0);
        // pairing with u∧v equals y(u, v)
        let u = [1, 2, 3, 4, 5, 6, 7];
        let v = [7, 0, 1, 0, 2, 0, 3];
        let x = plucker_embed(&TwoPlane::new(f, &u, &v).unwrap());
        assert_eq!(pair_eval(&y, &x), y.eval(&u, &v));
    }

    #[test]
    fn wedge2_examples() {
        let f = f31();
        let k = Subspace::from_spanning(f, 7, &[e(4), e(5), e(6)]);
        let w = wedge2_subspace(&k).unwrap();
        let expected: Vec<Vec<u32>> =
            [(4, 5), (4, 6), (5, 6)].iter().map(|&(i, j)| PluckerVector::unit(i, j).coords).collect();
        assert_eq!(w, Subspace::from_spanning(f, 21, &expected));
        let ann = wedge2_subspace(&k.annihilator()).unwrap();
        let mut in_1234 = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                in_1234.push(PluckerVector::unit(i, j).coords);
            }
        }
        assert_eq!(ann.dim(), 6);
        assert_eq!(ann, Subspace::from_spanning(f, 21, &in_1234));
        let two = Subspace::from_spanning(f, 7, &[e(0), e(3)]);
        assert_eq!(wedge2_subspace(&two).unwrap().dim(), 1);
        let one = Subspace::from_spanning(f, 7, &[e(0)]);
        assert!(wedge2_subspace(&one).is_err());
    }
}
