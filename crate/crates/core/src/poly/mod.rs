//! Sparse multivariate polynomials over `F_p`.
//!
//! Monomials are dense exponent arrays (at most [`MAX_VARS`] variables, one
//! byte per exponent). A polynomial keeps its terms sorted in decreasing
//! order under its ring's monomial order, without zero coefficients.

pub mod groebner;
pub mod hilbert;
pub mod univariate;
pub mod zerodim;

use std::cmp::Ordering;
use std::fmt;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::exterior::RingOps;
use crate::field::PrimeField;
use crate::matrix::FieldMatrix;

pub use groebner::{buchberger, GbOptions, GroebnerBasis};
pub use hilbert::{hilbert_series, HilbertData, HilbertPolynomial};

pub const MAX_VARS: usize = 24;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    degree: u16,
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial { exps: [0; MAX_VARS], degree: 0 }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        let mut m = Self::one();
        m.exps[..exps.len()].copy_from_slice(exps);
        m.degree = exps.iter().map(|&e| e as u16).sum();
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree as u32
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u8 {
        self.exps[i]
    }

    pub fn exponents(&self, nvars: usize) -> &[u8] {
        &self.exps[..nvars]
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i] + other.exps[i];
        }
        Monomial { exps, degree: self.degree + other.degree }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = other.exps[i] - self.exps[i];
        }
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u8; MAX_VARS];
        let mut degree = 0u16;
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].max(other.exps[i]);
            degree += exps[i] as u16;
        }
        Monomial { exps, degree }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bit `i` set when variable `i` occurs (variables past 31 share bit 31).
    #[inline]
    pub fn divmask(&self) -> u32 {
        let mut m = 0u32;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                m |= 1 << i.min(31);
            }
        }
        m
    }

    /// Exponent of variable `i` removed: `self : x_i^∞` style helpers use this.
    pub fn with_exp(&self, i: usize, e: u8) -> Monomial {
        let mut m = *self;
        m.degree = m.degree - m.exps[i] as u16 + e as u16;
        m.exps[i] = e;
        m
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Single variable occurring, if the monomial is a pure power.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn display(&self, nvars: usize) -> String {
        if self.degree == 0 {
            return "1".into();
        }
        let parts: Vec<String> = (0..nvars)
            .filter(|&i| self.exps[i] > 0)
            .map(|i| if self.exps[i] == 1 { format!("x{i}") } else { format!("x{i}^{}", self.exps[i]) })
            .collect();
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1);
        write!(f, "{}", self.display(last))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Grevlex,
    Lex,
}

/// A monomial order: grevlex or lex, after permuting variables.
/// `perm[k]` is the variable in position `k`, position 0 being the largest.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    nvars: u8,
    perm: [u8; MAX_VARS],
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        let mut perm = [0u8; MAX_VARS];
        for (i, p) in perm.iter_mut().enumerate() {
            *p = i as u8;
        }
        MonomialOrder { kind, nvars: nvars as u8, perm }
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::Grevlex, nvars)
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, nvars)
    }

    pub fn with_permutation(kind: OrderKind, perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        if n > MAX_VARS {
            return Err(Error::TooManyVariables(n));
        }
        let mut seen = vec![false; n];
        for &v in perm {
            if v >= n || seen[v] {
                return Err(Error::Dimension("variable permutation is not a bijection".into()));
            }
            seen[v] = true;
        }
        let mut o = Self::new(kind, n);
        for (k, &v) in perm.iter().enumerate() {
            o.perm[k] = v as u8;
        }
        Ok(o)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = self.nvars as usize;
        match self.kind {
            OrderKind::Grevlex => {
                if a.degree != b.degree {
                    return a.degree.cmp(&b.degree);
                }
                for k in (0..n).rev() {
                    let v = self.perm[k] as usize;
                    if a.exps[v] != b.exps[v] {
                        return b.exps[v].cmp(&a.exps[v]);
                    }
                }
                Ordering::Equal
            }
            OrderKind::Lex => {
                for k in 0..n {
                    let v = self.perm[k] as usize;
                    if a.exps[v] != b.exps[v] {
                        return a.exps[v].cmp(&b.exps[v]);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.kind, &self.perm[..self.nvars as usize])
    }
}

/// A polynomial ring `F_p[x_0, …, x_{n-1}]` with a monomial order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PolyRing {
    field: PrimeField,
    nvars: usize,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: PrimeField, nvars: usize) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables(nvars));
        }
        Ok(PolyRing { field, nvars, order: MonomialOrder::grevlex(nvars) })
    }

    pub fn with_order(field: PrimeField, nvars: usize, order: MonomialOrder) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables(nvars));
        }
        if order.nvars as usize != nvars {
            return Err(Error::Dimension("order and ring have different variable counts".into()));
        }
        Ok(PolyRing { field, nvars, order })
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn zero(&self) -> SparsePolynomial {
        SparsePolynomial { ring: *self, terms: Vec::new() }
    }

    pub fn constant(&self, c: u32) -> SparsePolynomial {
        let c = c % self.field.modulus();
        let terms = if c == 0 { Vec::new() } else { vec![(Monomial::one(), c)] };
        SparsePolynomial { ring: *self, terms }
    }

    pub fn var(&self, i: usize) -> SparsePolynomial {
        assert!(i < self.nvars, "variable index out of range");
        SparsePolynomial { ring: *self, terms: vec![(Monomial::var(i), 1)] }
    }

    pub fn monomial(&self, m: Monomial, c: u32) -> SparsePolynomial {
        self.from_terms(vec![(m, c)])
    }

    /// Linear form `Σ c_i x_i`.
    pub fn linear_form(&self, coeffs: &[u32]) -> SparsePolynomial {
        assert_eq!(coeffs.len(), self.nvars);
        self.from_terms(coeffs.iter().enumerate().map(|(i, &c)| (Monomial::var(i), c)).collect())
    }

    /// Normalizes an arbitrary term list: sorts, merges, drops zeros.
    pub fn from_terms(&self, terms: Vec<(Monomial, u32)>) -> SparsePolynomial {
        let f = self.field;
        let mut acc: FxHashMap<Monomial, u32> = FxHashMap::default();
        for (m, c) in terms {
            let c = c % f.modulus();
            if c == 0 {
                continue;
            }
            let e = acc.entry(m).or_insert(0);
            *e = f.add(*e, c);
        }
        let mut terms: Vec<(Monomial, u32)> = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        SparsePolynomial { ring: *self, terms }
    }

    pub(crate) fn from_sorted_terms(&self, terms: Vec<(Monomial, u32)>) -> SparsePolynomial {
        debug_assert!(terms.windows(2).all(|w| self.order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        SparsePolynomial { ring: *self, terms }
    }
}

impl RingOps for PolyRing {
    type Elem = SparsePolynomial;
    fn zero(&self) -> SparsePolynomial {
        PolyRing::zero(self)
    }
    fn add(&self, a: &SparsePolynomial, b: &SparsePolynomial) -> SparsePolynomial {
        a.add(b).expect("same ring")
    }
    fn sub(&self, a: &SparsePolynomial, b: &SparsePolynomial) -> SparsePolynomial {
        a.sub(b).expect("same ring")
    }
    fn mul(&self, a: &SparsePolynomial, b: &SparsePolynomial) -> SparsePolynomial {
        a.mul(b).expect("same ring")
    }
    fn scale(&self, a: &SparsePolynomial, k: i64) -> SparsePolynomial {
        a.scale(self.field.from_i64(k))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePolynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, u32)>,
}

impl SparsePolynomial {
    #[inline]
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(Monomial, u32)> {
        self.terms.first().copied()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(&(m, _)) => self.terms.iter().all(|t| t.0.degree() == m.degree()),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    fn check_ring(&self, other: &SparsePolynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// `self + k * other`.
    fn add_scaled(&self, other: &SparsePolynomial, k: u32) -> SparsePolynomial {
        let f = self.ring.field;
        let ord = self.ring.order;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match ord.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    let c = f.mul(b[j].1, k);
                    if c != 0 {
                        out.push((b[j].0, c));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(a[i].1, f.mul(b[j].1, k));
                    if c != 0 {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for &(m, c) in &b[j..] {
            let c = f.mul(c, k);
            if c != 0 {
                out.push((m, c));
            }
        }
        SparsePolynomial { ring: self.ring, terms: out }
    }

    pub fn add(&self, other: &SparsePolynomial) -> Result<SparsePolynomial> {
        self.check_ring(other)?;
        Ok(self.add_scaled(other, 1))
    }

    pub fn sub(&self, other: &SparsePolynomial) -> Result<SparsePolynomial> {
        self.check_ring(other)?;
        Ok(self.add_scaled(other, self.ring.field.neg(1)))
    }

    pub fn neg(&self) -> SparsePolynomial {
        self.scale(self.ring.field.neg(1))
    }

    pub fn scale(&self, k: u32) -> SparsePolynomial {
        let f = self.ring.field;
        let k = k % f.modulus();
        if k == 0 {
            return self.ring.zero();
        }
        SparsePolynomial { ring: self.ring, terms: self.terms.iter().map(|&(m, c)| (m, f.mul(c, k))).collect() }
    }

    /// Multiplication by `c * m`; the order is preserved so no re-sort is needed.
    pub fn mul_term(&self, m: &Monomial, c: u32) -> SparsePolynomial {
        let f = self.ring.field;
        if c.is_multiple_of(f.modulus()) {
            return self.ring.zero();
        }
        SparsePolynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|&(t, a)| (t.mul(m), f.mul(a, c))).collect(),
        }
    }

    pub fn mul(&self, other: &SparsePolynomial) -> Result<SparsePolynomial> {
        self.check_ring(other)?;
        let f = self.ring.field;
        let mut acc: FxHashMap<Monomial, u32> = FxHashMap::default();
        for &(ma, ca) in &self.terms {
            for &(mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(&mb)).or_insert(0);
                *e = f.add(*e, f.mul(ca, cb));
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|t| t.1 != 0).collect();
        let ord = self.ring.order;
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        Ok(SparsePolynomial { ring: self.ring, terms })
    }

    pub fn pow(&self, e: u32) -> SparsePolynomial {
        let mut acc = self.ring.constant(1);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Scaled so the leading coefficient is 1.
    pub fn monic(&self) -> SparsePolynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(&(_, c)) => self.scale(self.ring.field.inv(c)),
        }
    }

    pub fn eval(&self, point: &[u32]) -> u32 {
        assert_eq!(point.len(), self.ring.nvars);
        let f = self.ring.field;
        let mut acc = 0u32;
        for &(m, c) in &self.terms {
            let mut v = c;
            for (i, &x) in point.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    v = f.mul(v, f.pow(x, e as u64));
                }
            }
            acc = f.add(acc, v);
        }
        acc
    }

    /// Partial derivative with respect to `x_i`.
    pub fn derivative(&self, i: usize) -> SparsePolynomial {
        let f = self.ring.field;
        let terms = self
            .terms
            .iter()
            .filter(|t| t.0.exp(i) > 0)
            .map(|&(m, c)| {
                let e = m.exp(i);
                (m.with_exp(i, e - 1), f.mul(c, e as u32 % f.modulus()))
            })
            .collect();
        self.ring.from_terms(terms)
    }

    /// Substitutes `x_k ↦ Σ_c map[k][c] u_c`, producing a polynomial in
    /// `target` (which must have `map.cols()` variables).
    pub fn linear_substitute(&self, map: &FieldMatrix, target: &PolyRing) -> Result<SparsePolynomial> {
        if map.rows() != self.ring.nvars || map.cols() != target.nvars || map.field() != self.ring.field {
            return Err(Error::Dimension(format!(
                "substitution matrix is {}x{} for {} -> {} variables",
                map.rows(),
                map.cols(),
                self.ring.nvars,
                target.nvars
            )));
        }
        let images: Vec<SparsePolynomial> = (0..map.rows()).map(|k| target.linear_form(map.row(k))).collect();
        let mut out = target.zero();
        let mut powers: FxHashMap<(usize, u8), SparsePolynomial> = FxHashMap::default();
        for &(m, c) in &self.terms {
            let mut t = target.constant(c);
            for k in 0..self.ring.nvars {
                let e = m.exp(k);
                if e == 0 {
                    continue;
                }
                let pw = powers.entry((k, e)).or_insert_with(|| images[k].pow(e as u32));
                t = t.mul(pw)?;
                if t.is_zero() {
                    break;
                }
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }

    /// Sets `x_var = 1`, landing in a ring with one variable fewer (later
    /// variables shift down).
    pub fn dehomogenize(&self, var: usize, target: &PolyRing) -> Result<SparsePolynomial> {
        if target.nvars + 1 != self.ring.nvars || var >= self.ring.nvars {
            return Err(Error::Dimension("dehomogenize target must drop one variable".into()));
        }
        let terms = self
            .terms
            .iter()
            .map(|&(m, c)| {
                let ex: Vec<u8> = (0..self.ring.nvars).filter(|&k| k != var).map(|k| m.exp(k)).collect();
                (Monomial::from_exponents(&ex), c)
            })
            .collect();
        Ok(target.from_terms(terms))
    }

    /// Same polynomial, re-sorted for a ring with another order.
    pub fn reorder(&self, target: &PolyRing) -> Result<SparsePolynomial> {
        if target.nvars != self.ring.nvars || target.field != self.ring.field {
            return Err(Error::RingMismatch);
        }
        Ok(target.from_terms(self.terms.clone()))
    }

    /// Coefficients of a linear form (constant term ignored).
    pub fn linear_coefficients(&self) -> Vec<u32> {
        let mut v = vec![0; self.ring.nvars];
        for &(m, c) in &self.terms {
            if m.degree() == 1 {
                v[m.pure_power_var().expect("degree one")] = c;
            }
        }
        v
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let n = self.ring.nvars;
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|&(m, c)| if m.is_one() { c.to_string() } else if c == 1 { m.display(n) } else { format!("{c}*{}", m.display(n)) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> PolyRing {
        PolyRing::new(PrimeField::new(31).unwrap(), n).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(2);
        let (x, y) = (r.var(0), r.var(1));
        let p = x.add(&y).unwrap().mul(&x.sub(&y).unwrap()).unwrap();
        let expected = x.mul(&x).unwrap().sub(&y.mul(&y).unwrap()).unwrap();
        assert_eq!(p, expected);
        assert!(x.add(&x.neg()).unwrap().is_zero());
    }

    #[test]
    fn binomial_cube() {
        let r = ring(1);
        let x = r.var(0);
        let c = x.add(&r.constant(1)).unwrap().pow(3);
        let expected = r.from_terms(vec![
            (Monomial::from_exponents(&[3]), 1),
            (Monomial::from_exponents(&[2]), 3),
            (Monomial::from_exponents(&[1]), 3),
            (Monomial::one(), 1),
        ]);
        assert_eq!(c, expected);
    }

    #[test]
    fn ring_mismatch() {
        let a = ring(2).var(0);
        let b = ring(3).var(0);
        assert!(matches!(a.add(&b), Err(Error::RingMismatch)));
        assert!(matches!(a.mul(&b), Err(Error::RingMismatch)));
    }

    #[test]
    fn grevlex_and_lex_orders() {
        let g = MonomialOrder::grevlex(3);
        let l = MonomialOrder::lex(3);
        let a = Monomial::from_exponents(&[1, 0, 1]); // x z
        let b = Monomial::from_exponents(&[0, 2, 0]); // y^2
        assert_eq!(g.cmp(&a, &b), Ordering::Less);
        assert_eq!(l.cmp(&a, &b), Ordering::Greater);
        let perm = MonomialOrder::with_permutation(OrderKind::Lex, &[1, 0, 2]).unwrap();
        assert_eq!(perm.cmp(&a, &b), Ordering::Less);
        assert!(MonomialOrder::with_permutation(OrderKind::Lex, &[0, 0, 1]).is_err());
    }

    #[test]
    fn substitution_examples() {
        let r2 = ring(2);
        let r1 = ring(1);
        let f = r2.var(0).mul(&r2.var(1)).unwrap();
        let m = FieldMatrix::from_i64_rows(r2.field(), &[&[1], &[1]]);
        let g = f.linear_substitute(&m, &r1).unwrap();
        assert_eq!(g, r1.var(0).pow(2));
        let id = FieldMatrix::identity(r2.field(), 2);
        let h = r2.var(0).sub(&r2.var(1)).unwrap();
        assert_eq!(h.linear_substitute(&id, &r2).unwrap(), h);

        // x1 x4 - x2 x3 restricted to x4 = 0
        let r4 = ring(4);
        let r3 = ring(3);
        let q = r4.var(0).mul(&r4.var(3)).unwrap().sub(&r4.var(1).mul(&r4.var(2)).unwrap()).unwrap();
        let inc = FieldMatrix::from_i64_rows(r4.field(), &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let restricted = q.linear_substitute(&inc, &r3).unwrap();
        assert_eq!(restricted, r3.var(1).mul(&r3.var(2)).unwrap().neg());
        assert!(q.linear_substitute(&id, &r3).is_err());
    }

    #[test]
    fn derivative_and_eval() {
        let r = ring(2);
        let f = r.var(0).pow(3).add(&r.var(0).mul(&r.var(1)).unwrap()).unwrap();
        let dx = f.derivative(0);
        assert_eq!(dx.eval(&[2, 5]), (3 * 4 + 5));
        assert_eq!(f.eval(&[2, 5]), (8 + 10));
    }
}
