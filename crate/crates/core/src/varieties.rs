//! Ideals and instances: the Plücker ideal of `G(2,7)`, the Pfaffian cubics,
//! Schubert forms, the sections `X ⊂ P(M)` and `Y ⊂ P(W)`, and the curves
//! `C_y ⊂ X`.
//!
//! Coordinates on `P(M) ≅ P^13` and `P(W) ≅ P^6` are the coefficients with
//! respect to the RREF bases of `M` and `W`.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exterior::{
    self, form_rank_kernel, pair_index, plucker_embed, sub_pfaffians_with, wedge2_subspace, wedge_square_with,
    PluckerVector, TwoForm, TwoPlane, DIM_V, DIM_WEDGE2,
};
use crate::field::PrimeField;
use crate::matrix::FieldMatrix;
use crate::poly::{buchberger, hilbert_series, GbOptions, GroebnerBasis, HilbertPolynomial, PolyRing, SparsePolynomial};
use crate::subspace::Subspace;

/// Attempts allowed for every genericity re-draw.
pub const REDRAW_BUDGET: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Random,
    Engineered,
    User,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Random => "random",
            Provenance::Engineered => "engineered",
            Provenance::User => "user",
        })
    }
}

/// A rational point of the incidence locus: `T ⊂ Ker y`, `x = [T] ∈ X`,
/// `y ∈ Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witnesses {
    pub x: PluckerVector,
    pub y: TwoForm,
}

/// `W ⊂ ∧²V*` of dimension 7 together with `M = Ann(W) ⊂ ∧²V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    field: PrimeField,
    seed: u64,
    provenance: Provenance,
    w: Subspace,
    m: Subspace,
    witnesses: Option<Witnesses>,
}

impl Instance {
    /// Builds an instance from `W`; fails unless `dim W = 7`.
    pub fn from_w(w: Subspace, seed: u64, provenance: Provenance) -> Result<Self> {
        if w.ambient_dim() != DIM_WEDGE2 || w.dim() != 7 {
            return Err(Error::Dimension(format!("W must be a 7-dimensional subspace of F^21, got dim {}", w.dim())));
        }
        let m = w.annihilator();
        Ok(Instance { field: w.field(), seed, provenance, w, m, witnesses: None })
    }

    pub fn with_witnesses(mut self, witnesses: Witnesses) -> Self {
        self.witnesses = Some(witnesses);
        self
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn w(&self) -> &Subspace {
        &self.w
    }

    pub fn m(&self) -> &Subspace {
        &self.m
    }

    pub fn witnesses(&self) -> Option<&Witnesses> {
        self.witnesses.as_ref()
    }

    /// The basis forms `w_1, …, w_7` of `W`.
    pub fn w_forms(&self) -> Vec<TwoForm> {
        self.w.basis_rows().iter().map(|r| TwoForm::from_coords(self.field, r)).collect()
    }

    /// The form `Σ c_a w_a`.
    pub fn form_at(&self, c: &[u32]) -> TwoForm {
        TwoForm::from_coords(self.field, &self.w.basis().left_apply(c))
    }

    /// The Plücker vector `Σ c_a m_a`.
    pub fn plucker_at(&self, c: &[u32]) -> PluckerVector {
        PluckerVector::new(self.m.basis().left_apply(c))
    }

    /// Coordinates of `x` on `P(M)`, if `x ∈ M`.
    pub fn m_coordinates(&self, x: &PluckerVector) -> Option<Vec<u32>> {
        self.m.coordinates(&x.coords)
    }

    /// Coordinates of `y` on `P(W)`, if `y ∈ W`.
    pub fn w_coordinates(&self, y: &TwoForm) -> Option<Vec<u32>> {
        self.w.coordinates(&y.coords())
    }

    pub fn to_json_value(&self) -> Value {
        let f = self.field;
        let mut v = json!({
            "p": f.modulus(),
            "seed": self.seed,
            "provenance": self.provenance,
            "W": self.w.basis_rows(),
            "M": self.m.basis_rows(),
        });
        if let Some(wit) = &self.witnesses {
            v["witnesses"] = json!({ "x": wit.x.coords, "y": wit.y.matrix().row_vecs() });
        }
        v
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("instance serializes")
    }

    /// SHA-256 of the compact canonical JSON, hex-encoded.
    pub fn hash(&self) -> String {
        let compact = serde_json::to_string(&self.to_json_value()).expect("instance serializes");
        let digest = Sha256::digest(compact.as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| malformed("<document>", e.to_string()))?;
        Self::from_json_value(&v)
    }

    /// Parses and validates an instance document; errors name the field.
    pub fn from_json_value(v: &Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| malformed("<document>", "expected a JSON object"))?;
        let p = obj.get("p").and_then(Value::as_u64).ok_or_else(|| malformed("p", "missing or not a non-negative integer"))?;
        let p = u32::try_from(p).map_err(|_| malformed("p", "out of range"))?;
        let field = PrimeField::new(p).map_err(|e| malformed("p", e.to_string()))?;
        let seed = obj.get("seed").and_then(Value::as_u64).ok_or_else(|| malformed("seed", "missing or not a non-negative integer"))?;
        let provenance: Provenance = match obj.get("provenance") {
            Some(pv) => serde_json::from_value(pv.clone())
                .map_err(|_| malformed("provenance", "expected one of \"random\", \"engineered\", \"user\""))?,
            None => return Err(malformed("provenance", "missing")),
        };
        let w_rows = parse_matrix(obj.get("W"), "W", 7, DIM_WEDGE2, p)?;
        let m_rows = parse_matrix(obj.get("M"), "M", 14, DIM_WEDGE2, p)?;
        let w = Subspace::from_spanning(field, DIM_WEDGE2, &w_rows);
        if w.dim() != 7 {
            return Err(malformed("W", format!("rows have rank {}, expected 7", w.dim())));
        }
        let m = Subspace::from_spanning(field, DIM_WEDGE2, &m_rows);
        if m != w.annihilator() {
            return Err(malformed("M", "row space is not the annihilator of W"));
        }
        let mut inst = Instance::from_w(w, seed, provenance)?;
        if let Some(wv) = obj.get("witnesses") {
            let wo = wv.as_object().ok_or_else(|| malformed("witnesses", "expected an object"))?;
            let x = parse_vector(wo.get("x"), "witnesses.x", DIM_WEDGE2, p)?;
            let y_rows = parse_matrix(wo.get("y"), "witnesses.y", DIM_V, DIM_V, p)?;
            let y = TwoForm::from_matrix(FieldMatrix::from_rows(field, DIM_V, &y_rows))
                .map_err(|e| malformed("witnesses.y", e.to_string()))?;
            inst.witnesses = Some(Witnesses { x: PluckerVector::new(x), y });
        }
        Ok(inst)
    }
}

fn malformed(field: &str, detail: impl Into<String>) -> Error {
    Error::MalformedInstance { field: field.to_string(), detail: detail.into() }
}

fn parse_vector(v: Option<&Value>, name: &str, len: usize, p: u32) -> Result<Vec<u32>> {
    let arr = v.and_then(Value::as_array).ok_or_else(|| malformed(name, "missing or not an array"))?;
    if arr.len() != len {
        return Err(malformed(name, format!("expected {len} entries, got {}", arr.len())));
    }
    arr.iter()
        .enumerate()
        .map(|(i, e)| {
            let n = e.as_u64().ok_or_else(|| malformed(&format!("{name}[{i}]"), "not a non-negative integer"))?;
            if n >= p as u64 {
                return Err(malformed(&format!("{name}[{i}]"), format!("{n} is not reduced mod {p}")));
            }
            Ok(n as u32)
        })
        .collect()
}

fn parse_matrix(v: Option<&Value>, name: &str, rows: usize, cols: usize, p: u32) -> Result<Vec<Vec<u32>>> {
    let arr = v.and_then(Value::as_array).ok_or_else(|| malformed(name, "missing or not an array"))?;
    if arr.len() != rows {
        return Err(malformed(name, format!("expected {rows} rows, got {}", arr.len())));
    }
    arr.iter().enumerate().map(|(i, r)| parse_vector(Some(r), &format!("{name}[{i}]"), cols, p)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum IdealLabel {
    G,
    Pf,
    X,
    Y,
    SchubertK,
    Curve,
    Chart,
    Slice,
}

/// A generator set of homogeneous polynomials tagged with the object it
/// describes.
#[derive(Clone, Debug)]
pub struct ProjectiveIdeal {
    pub ring: PolyRing,
    pub generators: Vec<SparsePolynomial>,
    pub label: IdealLabel,
}

impl ProjectiveIdeal {
    pub fn new(ring: PolyRing, generators: Vec<SparsePolynomial>, label: IdealLabel) -> Self {
        debug_assert!(generators.iter().all(|g| g.is_homogeneous()));
        ProjectiveIdeal { ring, generators, label }
    }

    pub fn groebner(&self, opts: &GbOptions) -> Result<GroebnerBasis> {
        buchberger(&self.generators, opts)
    }

    /// Gröbner basis and the Hilbert polynomial of the quotient.
    pub fn hilbert(&self, opts: &GbOptions) -> Result<(GroebnerBasis, HilbertPolynomial)> {
        let gb = self.groebner(opts)?;
        let hp = hilbert_series(&gb.leading_monomials(), self.ring.nvars()).hilbert_polynomial();
        Ok((gb, hp))
    }

    /// Every generator vanishes at `point`.
    pub fn vanishes_at(&self, point: &[u32]) -> bool {
        self.generators.iter().all(|g| g.eval(point) == 0)
    }
}

/// The 35 quadrics `(x ∧ x)_{abcd}` in the 21 Plücker coordinates.
pub fn grassmannian_ideal(field: PrimeField) -> ProjectiveIdeal {
    let ring = PolyRing::new(field, DIM_WEDGE2).expect("21 variables");
    let vars: Vec<SparsePolynomial> = (0..DIM_WEDGE2).map(|k| ring.var(k)).collect();
    ProjectiveIdeal::new(ring, wedge_square_with(&ring, &vars), IdealLabel::G)
}

/// The 7 sub-Pfaffian cubics of the generic skew 7×7 matrix in the 21 dual
/// coordinates.
pub fn pfaffian_ideal(field: PrimeField) -> ProjectiveIdeal {
    let ring = PolyRing::new(field, DIM_WEDGE2).expect("21 variables");
    let gens = sub_pfaffians_with(&ring, &|i, j| ring.var(pair_index(i, j)));
    ProjectiveIdeal::new(ring, gens, IdealLabel::Pf)
}

/// A basis of `∧²Ann K` as coefficient vectors of linear forms on `∧²V`.
pub fn schubert_form_vectors(k: &Subspace) -> Result<Vec<Vec<u32>>> {
    if k.ambient_dim() != DIM_V || k.dim() != 3 {
        return Err(Error::Dimension(format!("Schubert forms need a 3-dimensional K in F^7, got dim {}", k.dim())));
    }
    Ok(wedge2_subspace(&k.annihilator())?.basis_rows())
}

/// The six linear forms cutting out `{T : T ∩ K ≠ 0}` in Plücker coordinates.
pub fn schubert_linear_forms(k: &Subspace) -> Result<Vec<SparsePolynomial>> {
    let ring = PolyRing::new(k.field(), DIM_WEDGE2)?;
    Ok(schubert_form_vectors(k)?.iter().map(|c| ring.linear_form(c)).collect())
}

/// Ideal of the Schubert variety `S_K`: Plücker quadrics plus `∧²Ann K`.
pub fn schubert_ideal(k: &Subspace) -> Result<ProjectiveIdeal> {
    let g = grassmannian_ideal(k.field());
    let mut gens = g.generators;
    gens.extend(schubert_linear_forms(k)?);
    Ok(ProjectiveIdeal::new(g.ring, gens, IdealLabel::SchubertK))
}

/// The six 2×2 minors of the generic 2×4 matrix; `a_{1j} = x_{j}`,
/// `a_{2j} = x_{4+j}`.
pub fn schubert_chart_ideal(field: PrimeField) -> ProjectiveIdeal {
    let ring = PolyRing::new(field, 8).expect("8 variables");
    let mut gens = Vec::with_capacity(6);
    for i in 0..4 {
        for j in i + 1..4 {
            let a = ring.var(i).mul(&ring.var(4 + j)).expect("same ring");
            let b = ring.var(j).mul(&ring.var(4 + i)).expect("same ring");
            gens.push(a.sub(&b).expect("same ring"));
        }
    }
    ProjectiveIdeal::new(ring, gens, IdealLabel::Chart)
}

/// A seeded random `W`, re-drawn until it has rank 7.
pub fn random_instance(seed: u64, p: u32) -> Result<Instance> {
    let field = PrimeField::new(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..REDRAW_BUDGET {
        let m = FieldMatrix::random(field, 7, DIM_WEDGE2, &mut rng);
        let w = Subspace::row_space(&m);
        if w.dim() == 7 {
            return Instance::from_w(w, seed, Provenance::Random);
        }
    }
    Err(Error::RedrawBudget { budget: REDRAW_BUDGET, seed, what: "rank-7 W".into() })
}

/// The 21 Plücker coordinates as linear forms in the 14 coordinates of `P(M)`.
fn m_linear_forms(inst: &Instance, ring: &PolyRing) -> Vec<SparsePolynomial> {
    let b = inst.m.basis();
    (0..DIM_WEDGE2).map(|k| ring.linear_form(&(0..b.rows()).map(|a| b.get(a, k)).collect::<Vec<_>>())).collect()
}

/// `X = G ∩ P(M)`: the Plücker quadrics pulled back to `P^13`.
pub fn ideal_x(inst: &Instance) -> ProjectiveIdeal {
    let ring = PolyRing::new(inst.field, inst.m.dim()).expect("14 variables");
    let forms = m_linear_forms(inst, &ring);
    ProjectiveIdeal::new(ring, wedge_square_with(&ring, &forms), IdealLabel::X)
}

/// `Y = Pf ∩ P(W)`: the sub-Pfaffian cubics pulled back to `P^6`.
pub fn ideal_y(inst: &Instance) -> ProjectiveIdeal {
    let ring = PolyRing::new(inst.field, inst.w.dim()).expect("7 variables");
    let b = inst.w.basis();
    let forms: Vec<SparsePolynomial> =
        (0..DIM_WEDGE2).map(|k| ring.linear_form(&(0..b.rows()).map(|a| b.get(a, k)).collect::<Vec<_>>())).collect();
    let gens = sub_pfaffians_with(&ring, &|i, j| forms[pair_index(i, j)].clone());
    ProjectiveIdeal::new(ring, gens, IdealLabel::Y)
}

/// Checks `y ∈ Y` and returns its rank and kernel.
pub fn y_point_data(inst: &Instance, y: &TwoForm) -> Result<(usize, Subspace)> {
    if inst.w_coordinates(y).is_none() || y.is_zero() {
        return Err(Error::Precondition("the form is not a nonzero element of W".into()));
    }
    let (rank, kernel) = form_rank_kernel(y);
    if rank > 4 {
        return Err(Error::Precondition(format!("the form has rank {rank}, so it is not on Pf")));
    }
    Ok((rank, kernel))
}

/// `C_y`: the quadrics of `X` plus the Schubert forms of `Ker y` restricted
/// to `M`. Only defined for rank-4 `y`.
pub fn ideal_curve(inst: &Instance, y: &TwoForm) -> Result<ProjectiveIdeal> {
    let (rank, kernel) = y_point_data(inst, y)?;
    if rank != 4 {
        return Err(Error::Precondition(format!("curves are defined for rank-4 points of Y, got rank {rank}")));
    }
    let x = ideal_x(inst);
    let ring = x.ring;
    let f = inst.field;
    let mut gens = x.generators;
    for c in schubert_form_vectors(&kernel)? {
        let restricted: Vec<u32> = inst.m.basis_rows().iter().map(|m| exterior::dot(f, &c, m)).collect();
        let form = ring.linear_form(&restricted);
        if !form.is_zero() {
            gens.push(form);
        }
    }
    Ok(ProjectiveIdeal::new(ring, gens, IdealLabel::Curve))
}

fn random_subspace(field: PrimeField, ambient: usize, dim: usize, rng: &mut ChaCha8Rng) -> Option<Subspace> {
    let s = Subspace::row_space(&FieldMatrix::random(field, dim, ambient, rng));
    (s.dim() == dim).then_some(s)
}

/// An instance with a planted incidence point: `T ⊂ K = Ker y`, `y ∈ W`,
/// and `W` vanishing on `x = [T]`. Both `X` and `Y` are then singular.
pub fn engineered_singular_instance(seed: u64, p: u32) -> Result<Instance> {
    let field = PrimeField::new(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_5eed_5eed_5eed);
    for _ in 0..REDRAW_BUDGET {
        let Some(k) = random_subspace(field, DIM_V, 3, &mut rng) else { continue };
        // T: two random combinations of the K basis
        let comb = FieldMatrix::random(field, 2, 3, &mut rng);
        let Ok(t) = TwoPlane::from_matrix(comb.mul(k.basis())?) else { continue };
        // y = φ1∧φ2 + φ3∧φ4 for a random basis φ of Ann K; Ker y = K
        let ann = k.annihilator();
        let change = FieldMatrix::random(field, 4, 4, &mut rng);
        if change.rank() != 4 {
            continue;
        }
        let phi = change.mul(ann.basis())?;
        let y = TwoForm::wedge(field, phi.row(0), phi.row(1)).add(&TwoForm::wedge(field, phi.row(2), phi.row(3)));
        let x = plucker_embed(&t);
        // U = {w : w(x) = 0}, 20-dimensional
        let u = Subspace::from_spanning(field, DIM_WEDGE2, std::slice::from_ref(&x.coords)).annihilator();
        let extra = FieldMatrix::random(field, 6, u.dim(), &mut rng).mul(u.basis())?;
        let mut rows = vec![y.coords()];
        rows.extend(extra.row_vecs());
        let w = Subspace::from_spanning(field, DIM_WEDGE2, &rows);
        if w.dim() != 7 {
            continue;
        }
        let inst = Instance::from_w(w, seed, Provenance::Engineered)?;
        return Ok(inst.with_witnesses(Witnesses { x, y }));
    }
    Err(Error::RedrawBudget { budget: REDRAW_BUDGET, seed, what: "engineered singular instance".into() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::{rank4_normal_form, TwoPlane};

    fn f31() -> PrimeField {
        PrimeField::new(31).unwrap()
    }

    fn e(i: usize) -> Vec<u32> {
        let mut v = vec![0; DIM_V];
        v[i] = 1;
        v
    }

    #[test]
    fn grassmannian_generators() {
        let f = f31();
        let g = grassmannian_ideal(f);
        assert_eq!(g.generators.len(), 35);
        assert!(g.generators.iter().all(|q| q.is_homogeneous() && q.total_degree() == Some(2)));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let t = TwoPlane::from_matrix(FieldMatrix::random(f, 2, 7, &mut rng)).unwrap();
        assert!(g.vanishes_at(&plucker_embed(&t).coords));
        let mut x = vec![0u32; 21];
        x[pair_index(0, 1)] = 1;
        x[pair_index(2, 3)] = 1;
        assert!(g.generators.iter().any(|q| q.eval(&x) == 2));
    }

    #[test]
    fn pfaffian_generators() {
        let f = f31();
        let pf = pfaffian_ideal(f);
        assert_eq!(pf.generators.len(), 7);
        assert!(pf.generators.iter().all(|c| c.is_homogeneous() && c.total_degree() == Some(3)));
        assert!(pf.vanishes_at(&rank4_normal_form(f).coords()));
        let six = rank4_normal_form(f).add(&TwoForm::elementary(f, 4, 5));
        assert!(!pf.vanishes_at(&six.coords()));
    }

    #[test]
    fn standard_schubert_forms() {
        let f = f31();
        let k = Subspace::from_spanning(f, 7, &[e(4), e(5), e(6)]);
        let forms = schubert_linear_forms(&k).unwrap();
        let ring = PolyRing::new(f, 21).unwrap();
        let mut expected: Vec<SparsePolynomial> = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                expected.push(ring.var(pair_index(i, j)));
            }
        }
        assert_eq!(forms, expected);
        let t = TwoPlane::new(f, &e(0), &e(1)).unwrap();
        assert_eq!(forms[0].eval(&plucker_embed(&t).coords), 1);
        let meets = TwoPlane::new(f, &[1, 0, 0, 0, 1, 1, 0], &e(1)).unwrap();
        // this plane contains no vector of K, so some form is nonzero
        assert!(forms.iter().any(|l| l.eval(&plucker_embed(&meets).coords) != 0));
        let inside = TwoPlane::new(f, &e(5), &[1, 2, 3, 4, 0, 0, 0]).unwrap();
        assert!(forms.iter().all(|l| l.eval(&plucker_embed(&inside).coords) == 0));
        assert!(schubert_linear_forms(&Subspace::from_spanning(f, 7, &[e(0), e(1)])).is_err());
    }

    #[test]
    fn chart_minors() {
        let f = f31();
        let c = schubert_chart_ideal(f);
        assert_eq!(c.generators.len(), 6);
        assert!(c.vanishes_at(&[1, 2, 3, 4, 2, 4, 6, 8]));
        // rows (1,0,0,0), (0,1,0,0): a11 a22 - a12 a21 = 1
        assert_eq!(c.generators[0].eval(&[1, 0, 0, 0, 0, 1, 0, 0]), 1);
    }

    #[test]
    fn random_instances() {
        let a = random_instance(11, 31).unwrap();
        assert_eq!((a.w().dim(), a.m().dim()), (7, 14));
        for w in a.w().basis_rows() {
            for m in a.m().basis_rows() {
                assert_eq!(exterior::dot(a.field(), &w, &m), 0);
            }
        }
        assert_eq!(a.m().annihilator(), *a.w());
        assert_eq!(random_instance(11, 31).unwrap(), a);
        assert_ne!(random_instance(12, 31).unwrap().w(), a.w());
    }

    #[test]
    fn json_round_trip_and_errors() {
        let inst = engineered_singular_instance(3, 31).unwrap();
        let s = inst.to_json_string();
        let back = Instance::from_json_str(&s).unwrap();
        assert_eq!(back, inst);
        assert_eq!(back.hash(), inst.hash());

        let mut v: Value = serde_json::from_str(&s).unwrap();
        v["W"][2][5] = json!(31);
        match Instance::from_json_value(&v) {
            Err(Error::MalformedInstance { field, .. }) => assert_eq!(field, "W[2][5]"),
            other => panic!("unexpected {other:?}"),
        }
        let mut v: Value = serde_json::from_str(&s).unwrap();
        v["M"] = json!(random_instance(1, 31).unwrap().m().basis_rows());
        match Instance::from_json_value(&v) {
            Err(Error::MalformedInstance { field, .. }) => assert_eq!(field, "M"),
            other => panic!("unexpected {other:?}"),
        }
        let mut v: Value = serde_json::from_str(&s).unwrap();
        v.as_object_mut().unwrap().remove("p");
        assert!(matches!(Instance::from_json_value(&v), Err(Error::MalformedInstance { field, .. }) if field == "p"));
    }

    #[test]
    fn engineered_witnesses() {
        let f = f31();
        let inst = engineered_singular_instance(5, 31).unwrap();
        let wit = inst.witnesses().unwrap();
        let (rank, k) = form_rank_kernel(&wit.y);
        assert_eq!(rank, 4);
        let t = exterior::decompose_plucker(f, &wit.x).unwrap();
        assert!(k.contains_subspace(&t.subspace()));
        for w in inst.w_forms() {
            assert_eq!(exterior::pair_eval(&w, &wit.x), 0);
        }
        let c = inst.m_coordinates(&wit.x).unwrap();
        assert!(ideal_x(&inst).vanishes_at(&c));
        let cy = inst.w_coordinates(&wit.y).unwrap();
        assert!(ideal_y(&inst).vanishes_at(&cy));
    }

    #[test]
    fn curve_ideal_rejects_rank_two() {
        let f = f31();
        // plant a rank-2 form in W
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let y = TwoForm::wedge(f, &[1, 2, 0, 0, 5, 0, 1], &[0, 1, 1, 0, 0, 3, 0]);
        let mut rows = vec![y.coords()];
        rows.extend(FieldMatrix::random(f, 6, 21, &mut rng).row_vecs());
        let inst = Instance::from_w(Subspace::from_spanning(f, 21, &rows), 0, Provenance::User).unwrap();
        assert!(ideal_curve(&inst, &y).is_err());
    }
}
