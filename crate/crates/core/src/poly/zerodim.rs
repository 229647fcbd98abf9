//! Rational points of a zero-dimensional ideal from its Gröbner basis.
//!
//! The quotient `A = S/I` has a basis of standard monomials. For a linear
//! form `ℓ`, evaluation at a point `P` is a left eigenvector of the matrix
//! of multiplication by `ℓ` with eigenvalue `ℓ(P)`; when that eigenspace is
//! a line, normalizing at the monomial `1` gives the values `b(P)` of every
//! basis monomial, and the coordinates follow from the normal forms of the
//! variables.

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;

use super::groebner::GroebnerBasis;
use super::univariate;
use super::{Monomial, SparsePolynomial};
use crate::error::{Error, Result};
use crate::matrix::FieldMatrix;

#[derive(Clone, Copy, Debug)]
pub struct SolverOptions {
    pub seed: u64,
    /// Number of linear forms tried before giving up.
    pub attempts: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { seed: 0, attempts: 20 }
    }
}

/// Standard monomials of a zero-dimensional leading ideal, ascending in the
/// ring's order.
pub fn staircase(gb: &GroebnerBasis) -> Result<Vec<Monomial>> {
    let ring = gb.ring();
    let n = ring.nvars();
    let lms = gb.leading_monomials();
    if gb.is_unit() {
        return Ok(Vec::new());
    }
    for v in 0..n {
        if !lms.iter().any(|m| m.pure_power_var() == Some(v)) {
            return Err(Error::NotZeroDimensional);
        }
    }
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut frontier = vec![Monomial::one()];
    while let Some(m) = frontier.pop() {
        if !seen.insert(m.exponents(n).to_vec()) || lms.iter().any(|l| l.divides(&m)) {
            continue;
        }
        out.push(m);
        for v in 0..n {
            frontier.push(m.mul(&Monomial::var(v)));
        }
    }
    let order = *ring.order();
    out.sort_by(|a, b| order.cmp(a, b));
    Ok(out)
}

/// Dimension of the quotient ring as a vector space.
pub fn quotient_dimension(gb: &GroebnerBasis) -> Result<usize> {
    Ok(staircase(gb)?.len())
}

struct Quotient<'a> {
    gb: &'a GroebnerBasis,
    basis: Vec<Monomial>,
    index: FxHashMap<Monomial, usize>,
}

impl<'a> Quotient<'a> {
    fn new(gb: &'a GroebnerBasis) -> Result<Self> {
        let basis = staircase(gb)?;
        let index = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        Ok(Quotient { gb, basis, index })
    }

    fn coords(&self, f: &SparsePolynomial) -> Result<Vec<u32>> {
        let nf = self.gb.normal_form(f)?;
        let mut v = vec![0u32; self.basis.len()];
        for &(m, c) in nf.terms() {
            v[self.index[&m]] = c;
        }
        Ok(v)
    }

    /// `M[i][j]` = coefficient of `b_i` in `NF(ℓ · b_j)`.
    fn multiplication_matrix(&self, ell: &SparsePolynomial) -> Result<FieldMatrix> {
        let ring = self.gb.ring();
        let d = self.basis.len();
        let mut m = FieldMatrix::zeros(ring.field(), d, d);
        for (j, b) in self.basis.iter().enumerate() {
            let col = self.coords(&ell.mul_term(b, 1))?;
            for (i, c) in col.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        Ok(m)
    }
}

/// All `F_p`-rational solutions, sorted lexicographically. Each returned
/// point is checked against every generator of the basis.
pub fn zero_dim_points(gb: &GroebnerBasis, opts: &SolverOptions) -> Result<Vec<Vec<u32>>> {
    let ring = *gb.ring();
    let f = ring.field();
    let n = ring.nvars();
    let q = Quotient::new(gb)?;
    let d = q.basis.len();
    if d == 0 {
        return Ok(Vec::new());
    }
    let one_idx = q.index[&Monomial::one()];
    let var_coords: Vec<Vec<u32>> = (0..n).map(|v| q.coords(&ring.var(v))).collect::<Result<_>>()?;

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut last = String::from("no attempts made");
    for _ in 0..opts.attempts.max(1) {
        let ell_coeffs: Vec<u32> = (0..n).map(|_| f.random(&mut rng)).collect();
        let ell = ring.linear_form(&ell_coeffs);
        let m = q.multiplication_matrix(&ell)?;
        let eigenvalues = univariate::roots(f, &univariate::charpoly(&m));
        let mt = m.transpose();

        let mut points = Vec::with_capacity(eigenvalues.len());
        let mut ok = true;
        for lambda in eigenvalues {
            let mut shifted = mt.clone();
            for i in 0..d {
                shifted.set(i, i, f.sub(shifted.get(i, i), lambda));
            }
            let eig = shifted.kernel();
            if eig.dim() != 1 {
                last = format!("eigenvalue {lambda} has a {}-dimensional eigenspace", eig.dim());
                ok = false;
                break;
            }
            let v = eig.basis().row(0).to_vec();
            if v[one_idx] == 0 {
                last = format!("eigenvector for {lambda} vanishes on the monomial 1");
                ok = false;
                break;
            }
            let s = f.inv(v[one_idx]);
            let v: Vec<u32> = v.iter().map(|&c| f.mul(c, s)).collect();
            let point: Vec<u32> = var_coords.iter().map(|xc| dot(f, &v, xc)).collect();
            if gb.generators().iter().any(|g| g.eval(&point) != 0) {
                last = format!("candidate for eigenvalue {lambda} is not a solution");
                ok = false;
                break;
            }
            points.push(point);
        }
        if ok {
            points.sort();
            points.dedup();
            return Ok(points);
        }
    }
    Err(Error::SolverBudget { attempts: opts.attempts, detail: last })
}

fn dot(f: crate::field::PrimeField, a: &[u32], b: &[u32]) -> u32 {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}
