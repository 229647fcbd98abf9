//! Buchberger's algorithm with the Gebauer–Möller installation of the
//! product and chain criteria, normal pair selection, and full reduction.
//!
//! Reduction runs on a hash-map accumulator plus a max-heap of pending
//! monomials, so subtracting a multiple of a reducer costs
//! `O(len(reducer) · log)` rather than a merge over the whole dividend.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use rustc_hash::FxHashMap;

use super::{Monomial, MonomialOrder, PolyRing, SparsePolynomial};
use crate::error::{Error, Result};
use crate::field::PrimeField;

#[derive(Clone, Debug, Default)]
pub struct GbOptions {
    /// Wall-clock budget; `None` means unlimited.
    pub time_budget: Option<Duration>,
}

impl GbOptions {
    pub fn with_budget(budget: Duration) -> Self {
        GbOptions { time_budget: Some(budget) }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_created: u64,
    pub pairs_reduced: u64,
    pub zero_reductions: u64,
    pub elapsed_ms: u128,
}

/// A reduced Gröbner basis: monic generators, sorted by increasing leading
/// monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: PolyRing,
    generators: Vec<SparsePolynomial>,
    stats: GbStats,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.generators == other.generators
    }
}

impl GroebnerBasis {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[SparsePolynomial] {
        &self.generators
    }

    pub fn stats(&self) -> &GbStats {
        &self.stats
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().filter_map(|g| g.leading_monomial()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    /// Canonical remainder of `f` modulo the ideal.
    pub fn normal_form(&self, f: &SparsePolynomial) -> Result<SparsePolynomial> {
        if *f.ring() != self.ring {
            return Err(Error::RingMismatch);
        }
        let red = Reducer::from_basis(self);
        let terms = red.reduce(Accumulator::from_terms(self.ring.field(), self.ring.order(), f.terms()), None);
        Ok(self.ring.from_sorted_terms(terms))
    }

    pub fn contains(&self, f: &SparsePolynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

#[derive(Clone, Debug)]
struct Element {
    terms: Vec<(Monomial, u32)>,
    lm: Monomial,
    mask: u32,
}

impl Element {
    fn new(terms: Vec<(Monomial, u32)>) -> Self {
        let lm = terms[0].0;
        debug_assert_eq!(terms[0].1, 1, "elements are monic");
        Element { terms, lm, mask: lm.divmask() }
    }
}

/// Max-heap of monomials under a monomial order.
struct MonoHeap {
    data: Vec<Monomial>,
    order: MonomialOrder,
}

impl MonoHeap {
    fn new(order: MonomialOrder) -> Self {
        MonoHeap { data: Vec::new(), order }
    }

    #[inline]
    fn greater(&self, a: usize, b: usize) -> bool {
        self.order.cmp(&self.data[a], &self.data[b]) == Ordering::Greater
    }

    fn push(&mut self, m: Monomial) {
        self.data.push(m);
        let mut i = self.data.len() - 1;
        while i > 0 {
            let parent = (i - 1) / 2;
            if self.greater(i, parent) {
                self.data.swap(i, parent);
                i = parent;
            } else {
                break;
            }
        }
    }

    fn pop(&mut self) -> Option<Monomial> {
        let n = self.data.len();
        if n == 0 {
            return None;
        }
        self.data.swap(0, n - 1);
        let top = self.data.pop();
        let n = self.data.len();
        let mut i = 0;
        loop {
            let (l, r) = (2 * i + 1, 2 * i + 2);
            let mut best = i;
            if l < n && self.greater(l, best) {
                best = l;
            }
            if r < n && self.greater(r, best) {
                best = r;
            }
            if best == i {
                break;
            }
            self.data.swap(i, best);
            i = best;
        }
        top
    }
}

/// Polynomial under construction: coefficient map plus pending monomials.
struct Accumulator {
    field: PrimeField,
    coeffs: FxHashMap<Monomial, u32>,
    heap: MonoHeap,
}

impl Accumulator {
    fn new(field: PrimeField, order: &MonomialOrder) -> Self {
        Accumulator { field, coeffs: FxHashMap::default(), heap: MonoHeap::new(*order) }
    }

    fn from_terms(field: PrimeField, order: &MonomialOrder, terms: &[(Monomial, u32)]) -> Self {
        let mut acc = Self::new(field, order);
        for &(m, c) in terms {
            acc.add_term(m, c);
        }
        acc
    }

    #[inline]
    fn add_term(&mut self, m: Monomial, c: u32) {
        if c == 0 {
            return;
        }
        let f = self.field;
        match self.coeffs.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let v = f.add(*e.get(), c);
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
                self.heap.push(m);
            }
        }
    }

    /// Adds `k · q · terms`.
    #[inline]
    fn add_multiple(&mut self, terms: &[(Monomial, u32)], q: &Monomial, k: u32) {
        let f = self.field;
        for &(t, a) in terms {
            self.add_term(t.mul(q), f.mul(a, k));
        }
    }

    /// Largest live term, removed from the accumulator.
    fn pop_leading(&mut self) -> Option<(Monomial, u32)> {
        while let Some(m) = self.heap.pop() {
            if let Some(c) = self.coeffs.remove(&m) {
                return Some((m, c));
            }
        }
        None
    }
}

struct Reducer {
    field: PrimeField,
    elems: Vec<Element>,
    /// Indices of elements used as reducers, in insertion order.
    active: Vec<usize>,
}

impl Reducer {
    fn new(field: PrimeField) -> Self {
        Reducer { field, elems: Vec::new(), active: Vec::new() }
    }

    fn from_basis(gb: &GroebnerBasis) -> Self {
        let mut r = Self::new(gb.ring.field());
        for g in &gb.generators {
            r.elems.push(Element::new(g.terms().to_vec()));
            r.active.push(r.elems.len() - 1);
        }
        r
    }

    #[inline]
    fn find_reducer(&self, m: &Monomial, exclude: Option<usize>) -> Option<usize> {
        let mask = m.divmask();
        self.active.iter().copied().find(|&i| {
            let e = &self.elems[i];
            Some(i) != exclude && e.mask & !mask == 0 && e.lm.divides(m)
        })
    }

    /// Full reduction: no term of the result is divisible by an active
    /// leading monomial. Returns terms sorted decreasingly.
    fn reduce(&self, mut acc: Accumulator, exclude: Option<usize>) -> Vec<(Monomial, u32)> {
        let f = self.field;
        let mut out = Vec::new();
        while let Some((m, c)) = acc.pop_leading() {
            match self.find_reducer(&m, exclude) {
                Some(i) => {
                    let e = &self.elems[i];
                    let q = e.lm.quotient_of(&m).expect("divisor");
                    acc.add_multiple(&e.terms[1..], &q, f.neg(c));
                }
                None => out.push((m, c)),
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine {
    ring: PolyRing,
    red: Reducer,
    pairs: Vec<Pair>,
    stats: GbStats,
}

impl Engine {
    fn monic(&self, mut terms: Vec<(Monomial, u32)>) -> Vec<(Monomial, u32)> {
        let f = self.ring.field();
        let inv = f.inv(terms[0].1);
        if inv != 1 {
            for t in terms.iter_mut() {
                t.1 = f.mul(t.1, inv);
            }
        }
        terms
    }

    /// Gebauer–Möller update after inserting element `h`.
    fn update(&mut self, h: usize) {
        let lm_h = self.red.elems[h].lm;
        let mut cands: Vec<(usize, Monomial)> =
            self.red.active.iter().map(|&g| (g, self.red.elems[g].lm.lcm(&lm_h))).collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        // process in insertion order
        cands.reverse();
        while let Some((g, l)) = cands.pop() {
            let coprime = self.red.elems[g].lm.coprime(&lm_h);
            if coprime
                || (!cands.iter().any(|(_, l2)| l2.divides(&l)) && !kept.iter().any(|(_, l2)| l2.divides(&l)))
            {
                kept.push((g, l));
            }
        }
        let elems = &self.red.elems;
        self.pairs.retain(|p| {
            !(lm_h.divides(&p.lcm)
                && elems[p.i].lm.lcm(&lm_h) != p.lcm
                && elems[p.j].lm.lcm(&lm_h) != p.lcm)
        });
        for (g, l) in kept {
            if !self.red.elems[g].lm.coprime(&lm_h) {
                self.pairs.push(Pair { i: g, j: h, lcm: l });
                self.stats.pairs_created += 1;
            }
        }
        let elems = &self.red.elems;
        self.red.active.retain(|&g| !lm_h.divides(&elems[g].lm));
        self.red.active.push(h);
        let order = *self.ring.order();
        // descending, so the minimal pair sits at the end
        self.pairs.sort_by(|a, b| {
            b.lcm
                .degree()
                .cmp(&a.lcm.degree())
                .then_with(|| order.cmp(&b.lcm, &a.lcm))
                .then_with(|| b.j.cmp(&a.j))
                .then_with(|| b.i.cmp(&a.i))
        });
    }

    fn insert(&mut self, terms: Vec<(Monomial, u32)>) -> usize {
        let terms = self.monic(terms);
        self.red.elems.push(Element::new(terms));
        let h = self.red.elems.len() - 1;
        self.update(h);
        h
    }

    fn s_polynomial(&self, p: &Pair) -> Accumulator {
        let f = self.ring.field();
        let (a, b) = (&self.red.elems[p.i], &self.red.elems[p.j]);
        let qa = a.lm.quotient_of(&p.lcm).expect("lcm");
        let qb = b.lm.quotient_of(&p.lcm).expect("lcm");
        let mut acc = Accumulator::new(f, self.ring.order());
        acc.add_multiple(&a.terms[1..], &qa, 1);
        acc.add_multiple(&b.terms[1..], &qb, f.neg(1));
        acc
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`, in the order of
/// their common ring.
pub fn buchberger(gens: &[SparsePolynomial], opts: &GbOptions) -> Result<GroebnerBasis> {
    let start = Instant::now();
    let ring = match gens.first() {
        Some(g) => *g.ring(),
        None => return Err(Error::Precondition("buchberger needs at least one generator".into())),
    };
    if gens.iter().any(|g| *g.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    let field = ring.field();
    let unit = |stats: GbStats| GroebnerBasis { ring, generators: vec![ring.constant(1)], stats };

    let mut inputs: Vec<&SparsePolynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    if inputs.is_empty() {
        return Ok(GroebnerBasis { ring, generators: Vec::new(), stats: GbStats::default() });
    }
    let order = *ring.order();
    // smallest leading monomial first; ties keep input order
    inputs.sort_by(|a, b| order.cmp(&a.leading_monomial().unwrap(), &b.leading_monomial().unwrap()));

    let mut eng = Engine { ring, red: Reducer::new(field), pairs: Vec::new(), stats: GbStats::default() };
    for g in inputs {
        let r = eng.red.reduce(Accumulator::from_terms(field, &order, g.terms()), None);
        if r.is_empty() {
            continue;
        }
        if r[0].0.is_one() {
            eng.stats.elapsed_ms = start.elapsed().as_millis();
            return Ok(unit(eng.stats));
        }
        eng.insert(r);
    }

    while let Some(p) = eng.pairs.pop() {
        if let Some(budget) = opts.time_budget {
            if start.elapsed() > budget {
                return Err(Error::GbBudget { elapsed_ms: start.elapsed().as_millis(), basis_len: eng.red.active.len() });
            }
        }
        eng.stats.pairs_reduced += 1;
        let s = eng.s_polynomial(&p);
        let r = eng.red.reduce(s, None);
        if r.is_empty() {
            eng.stats.zero_reductions += 1;
            continue;
        }
        if r[0].0.is_one() {
            eng.stats.elapsed_ms = start.elapsed().as_millis();
            return Ok(unit(eng.stats));
        }
        eng.insert(r);
    }

    // interreduce the tails
    let active = eng.red.active.clone();
    let mut generators: Vec<SparsePolynomial> = active
        .iter()
        .map(|&i| {
            let e = &eng.red.elems[i];
            let acc = Accumulator::from_terms(field, &order, &e.terms[1..]);
            let mut terms = vec![e.terms[0]];
            terms.extend(eng.red.reduce(acc, Some(i)));
            ring.from_sorted_terms(terms)
        })
        .collect();
    generators.sort_by(|a, b| order.cmp(&a.leading_monomial().unwrap(), &b.leading_monomial().unwrap()));
    eng.stats.elapsed_ms = start.elapsed().as_millis();
    Ok(GroebnerBasis { ring, generators, stats: eng.stats })
}

/// S-polynomial of two polynomials, for external checks.
pub fn s_polynomial(a: &SparsePolynomial, b: &SparsePolynomial) -> Result<SparsePolynomial> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    let (Some((la, ca)), Some((lb, cb))) = (a.leading_term(), b.leading_term()) else {
        return Ok(a.ring().zero());
    };
    let f = a.ring().field();
    let l = la.lcm(&lb);
    let sa = a.mul_term(&la.quotient_of(&l).unwrap(), f.inv(ca));
    let sb = b.mul_term(&lb.quotient_of(&l).unwrap(), f.inv(cb));
    sa.sub(&sb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{MonomialOrder, OrderKind};

    fn ring(n: usize, kind: OrderKind) -> PolyRing {
        let f = PrimeField::new(31).unwrap();
        PolyRing::with_order(f, n, MonomialOrder::new(kind, n)).unwrap()
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let r = ring(2, OrderKind::Grevlex);
        let g = r.var(0).sub(&r.var(1).pow(2)).unwrap();
        let gb = buchberger(std::slice::from_ref(&g), &GbOptions::default()).unwrap();
        assert_eq!(gb.generators(), &[g.monic()]);
    }

    #[test]
    fn monomial_pair_is_already_a_basis() {
        let r = ring(2, OrderKind::Lex);
        let x2 = r.var(0).pow(2);
        let xy = r.var(0).mul(&r.var(1)).unwrap();
        assert!(s_polynomial(&x2, &xy).unwrap().is_zero());
        let gb = buchberger(&[x2.clone(), xy.clone()], &GbOptions::default()).unwrap();
        let mut expected = vec![xy, x2];
        expected.sort_by(|a, b| r.order().cmp(&a.leading_monomial().unwrap(), &b.leading_monomial().unwrap()));
        assert_eq!(gb.generators(), expected.as_slice());
    }

    #[test]
    fn linear_elimination() {
        let r = ring(2, OrderKind::Grevlex);
        let (x, y) = (r.var(0), r.var(1));
        let gb = buchberger(&[x.add(&y).unwrap(), x.sub(&y).unwrap()], &GbOptions::default()).unwrap();
        assert_eq!(gb.generators(), &[y, x]);
    }

    #[test]
    fn unit_ideal() {
        let r = ring(2, OrderKind::Grevlex);
        let x = r.var(0);
        let gb = buchberger(&[x.clone(), x.sub(&r.constant(1)).unwrap()], &GbOptions::default()).unwrap();
        assert!(gb.is_unit());
        assert_eq!(gb.generators(), &[r.constant(1)]);
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(2, OrderKind::Lex);
        let (x, y) = (r.var(0), r.var(1));
        let gb = buchberger(&[x.sub(&y).unwrap()], &GbOptions::default()).unwrap();
        assert_eq!(gb.normal_form(&x.pow(2)).unwrap(), y.pow(2));
        assert_eq!(gb.normal_form(&r.constant(1)).unwrap(), r.constant(1));
        let member = x.sub(&y).unwrap().mul(&x.add(&r.constant(3)).unwrap()).unwrap();
        assert!(gb.normal_form(&member).unwrap().is_zero());
    }

    #[test]
    fn empty_input_is_rejected() {
        assert!(buchberger(&[], &GbOptions::default()).is_err());
    }
}
