//! Checks that reduce to linear algebra at a point: tangency of hyperplane
//! sections, the tangent space of `Pf`, Schubert membership, and the
//! determinantal chart of a Schubert cycle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{form_json, plane_json, subspace_json, CheckReport, ReportBuilder};
use crate::error::{Error, Result};
use crate::exterior::{
    form_rank_kernel, pair_eval, plucker_embed, wedge2_subspace, wedge_vectors, PluckerVector, TwoForm, TwoPlane,
    DIM_V, DIM_WEDGE2,
};
use crate::field::PrimeField;
use crate::matrix::FieldMatrix;
use crate::poly::{hilbert_series, GbOptions, Monomial, SparsePolynomial};
use crate::sampler::random_gl;
use crate::subspace::Subspace;
use crate::varieties::{pfaffian_ideal, schubert_chart_ideal, schubert_form_vectors};

/// Hilbert numerator of the chart ideal: the alternating ranks 1, 6, 8, 3
/// of its Eagon–Northcott resolution.
pub const CHART_NUMERATOR: [i64; 5] = [1, 0, -6, 8, -3];

fn unit(i: usize) -> Vec<u32> {
    let mut v = vec![0; DIM_V];
    v[i] = 1;
    v
}

/// `(differential route, kernel route)` tangency verdicts for `H_y` at `[T]`.
///
/// The differential route pushes the ten basis maps `φ: T → V/T` through
/// the differential of the Plücker map, `φ ↦ φ(t1)∧t2 + t1∧φ(t2)`, and pairs
/// the results with `y`. The kernel route tests `T ⊂ Ker y`.
pub fn tangency_sides(x: &TwoPlane, y: &TwoForm) -> Result<(bool, bool)> {
    let f = x.field();
    if pair_eval(y, &plucker_embed(x)) != 0 {
        return Err(Error::Precondition("x does not lie on the hyperplane H_y".into()));
    }
    let t = x.canonical();
    let (t1, t2) = t.vectors();
    let pivots = t.subspace().pivots().to_vec();
    let complement: Vec<usize> = (0..DIM_V).filter(|j| !pivots.contains(j)).collect();
    debug_assert_eq!(complement.len(), 5);
    let mut differential = true;
    for &j in &complement {
        let e = unit(j);
        // φ(t1) = e_j, φ(t2) = 0   and   φ(t1) = 0, φ(t2) = e_j
        for tangent in [wedge_vectors(f, &e, &t2), wedge_vectors(f, &t1, &e)] {
            if pair_eval(y, &PluckerVector::new(tangent)) != 0 {
                differential = false;
            }
        }
    }
    let (_, kernel) = form_rank_kernel(y);
    let contained = kernel.contains_subspace(&t.subspace());
    Ok((differential, contained))
}

pub fn check_tangency(x: &TwoPlane, y: &TwoForm) -> Result<CheckReport> {
    let mut r = ReportBuilder::new("tangency", "H_y tangent to G at [T] <=> T in Ker y");
    let (diff, kernel) = tangency_sides(x, y)?;
    r.count("differential_tangent", diff as i64);
    r.count("kernel_contains_plane", kernel as i64);
    if diff != kernel {
        r.witness(plane_json(x));
        r.witness(form_json(y));
    }
    Ok(r.finish(diff == kernel))
}

/// A random form of rank 2, 4 or 6, transported from its normal form.
fn random_form_of_rank(field: PrimeField, rank: usize, rng: &mut ChaCha8Rng) -> TwoForm {
    let mut y = TwoForm::zero(field);
    for k in 0..rank / 2 {
        y = y.add(&TwoForm::elementary(field, 2 * k, 2 * k + 1));
    }
    y.transport(&random_gl(field, rng)).expect("7x7")
}

fn random_vector_in(s: &Subspace, rng: &mut ChaCha8Rng) -> Vec<u32> {
    let f = s.field();
    loop {
        let c: Vec<u32> = (0..s.dim()).map(|_| f.random(rng)).collect();
        let v = s.basis().left_apply(&c);
        if v.iter().any(|&a| a != 0) {
            return v;
        }
    }
}

/// Randomized incident pairs `(x, y)` with `x ∈ H_y`: half with `T ⊂ Ker y`
/// by construction, half with a random `t1` completed inside `y(t1, ·)^⊥`.
pub fn tangency_trials(field: PrimeField, seed: u64, trials: usize) -> CheckReport {
    let mut r = ReportBuilder::new("tangency", "H_y tangent to G at [T] <=> T in Ker y");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut agree = 0i64;
    let (mut tangent, mut non_tangent, mut escaping) = (0i64, 0i64, 0i64);
    let mut done = 0usize;
    while done < trials {
        let inside = done.is_multiple_of(2);
        let rank = if inside { [2, 4][rng.gen_range(0..2)] } else { [2, 4, 6][rng.gen_range(0..3)] };
        let y = random_form_of_rank(field, rank, &mut rng);
        let (_, kernel) = form_rank_kernel(&y);
        let plane = if inside {
            TwoPlane::new(field, &random_vector_in(&kernel, &mut rng), &random_vector_in(&kernel, &mut rng))
        } else {
            let t1 = random_vector_in(&Subspace::full(field, DIM_V), &mut rng);
            let row = y.matrix().left_apply(&t1);
            let perp = FieldMatrix::from_rows(field, DIM_V, &[row]).kernel();
            let t2 = random_vector_in(&perp, &mut rng);
            if !kernel.contains(&t1) {
                escaping += 1;
            }
            TwoPlane::new(field, &t1, &t2)
        };
        let Ok(plane) = plane else { continue };
        done += 1;
        let (diff, ker) = tangency_sides(&plane, &y).expect("incident by construction");
        if diff {
            tangent += 1;
        } else {
            non_tangent += 1;
        }
        if diff == ker {
            agree += 1;
        } else if r.witnesses.len() < 5 {
            r.witness(json!({ "plane": plane_json(&plane), "form": form_json(&y), "differential": diff, "kernel": ker }));
        }
        if inside && !diff {
            r.bump("constructed_tangent_missed");
        }
    }
    r.count("trials", trials as i64);
    r.count("equivalences", agree);
    r.count("tangent", tangent);
    r.count("non_tangent", non_tangent);
    r.count("t1_outside_kernel", escaping);
    let missed = r.counters.get("constructed_tangent_missed").copied().unwrap_or(0);
    r.finish(agree == trials as i64 && missed == 0)
}

/// The 7×21 Jacobian of the sub-Pfaffian cubics as polynomials.
struct PfJacobian {
    partials: Vec<Vec<SparsePolynomial>>,
}

impl PfJacobian {
    fn new(field: PrimeField) -> Self {
        let pf = pfaffian_ideal(field);
        let partials = pf.generators.iter().map(|g| (0..DIM_WEDGE2).map(|v| g.derivative(v)).collect()).collect();
        PfJacobian { partials }
    }

    fn at(&self, field: PrimeField, y: &TwoForm) -> FieldMatrix {
        let c = y.coords();
        let mut j = FieldMatrix::zeros(field, self.partials.len(), DIM_WEDGE2);
        for (k, row) in self.partials.iter().enumerate() {
            for (v, d) in row.iter().enumerate() {
                j.set(k, v, d.eval(&c));
            }
        }
        j
    }
}

/// `(Jacobian kernel, {v : v(∧²K) = 0})` at a rank-4 form.
fn pf_tangent_sides(jac: &PfJacobian, y0: &TwoForm) -> (Subspace, Subspace, usize) {
    let f = y0.field();
    let j = jac.at(f, y0);
    let (_, k) = form_rank_kernel(y0);
    let isotropic = wedge2_subspace(&k).expect("3-dimensional kernel").annihilator();
    (j.kernel(), isotropic, j.rank())
}

pub fn check_pf_tangent(y0: &TwoForm) -> Result<CheckReport> {
    let mut r = ReportBuilder::new(
        "pf-tangent",
        "rank y = 4, K = Ker y: T_y cone(Pf) = (wedge^2 K)^perp, dim 18",
    );
    let (rank, _) = form_rank_kernel(y0);
    match rank {
        4 => {}
        2 => return Ok(r.skip("singular point of Pf")),
        _ => return Err(Error::Precondition(format!("pf-tangent needs a rank-4 form, got rank {rank}"))),
    }
    let (jk, iso, jr) = pf_tangent_sides(&PfJacobian::new(y0.field()), y0);
    r.count("jacobian_rank", jr as i64);
    r.count("jacobian_kernel_dim", jk.dim() as i64);
    r.count("isotropic_dim", iso.dim() as i64);
    let ok = jk == iso && jk.dim() == 18;
    if !ok {
        r.witness(form_json(y0));
    }
    Ok(r.finish(ok))
}

/// The normal form plus `transported` random GL-transports of it.
pub fn pf_tangent_trials(field: PrimeField, seed: u64, transported: usize) -> CheckReport {
    let mut r = ReportBuilder::new(
        "pf-tangent",
        "rank y = 4, K = Ker y: T_y cone(Pf) = (wedge^2 K)^perp, dim 18",
    );
    let jac = PfJacobian::new(field);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut forms = vec![crate::exterior::rank4_normal_form(field)];
    for _ in 0..transported {
        forms.push(crate::sampler::sample_pf_smooth_with(field, &mut rng).0);
    }
    let mut equal = 0i64;
    for y in &forms {
        let (jk, iso, jr) = pf_tangent_sides(&jac, y);
        if jk == iso && jk.dim() == 18 && jr == 3 {
            equal += 1;
        } else if r.witnesses.len() < 5 {
            r.witness(json!({ "form": form_json(y), "jacobian_kernel": subspace_json(&jk), "isotropic_dim": iso.dim() }));
        }
    }
    r.count("forms", forms.len() as i64);
    r.count("transported", transported as i64);
    r.count("equal", equal);
    r.finish(equal == forms.len() as i64)
}

/// Mixed trials of `(∧²Ann K vanishes at [T]) ⟺ (T ∩ K ≠ 0)`; every other
/// trial builds `T` through a vector of `K`.
pub fn check_schubert_membership(k: &Subspace, trials: usize, seed: u64) -> Result<CheckReport> {
    let mut r = ReportBuilder::new("schubert", "[T] in V(wedge^2 Ann K) on G <=> T meets K");
    let forms = schubert_form_vectors(k)?;
    let f = k.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = Subspace::full(f, DIM_V);
    let (mut agree, mut meets, mut misses) = (0i64, 0i64, 0i64);
    let mut done = 0usize;
    while done < trials {
        let directed = done.is_multiple_of(2);
        let t1 = if directed { random_vector_in(k, &mut rng) } else { random_vector_in(&full, &mut rng) };
        let t2 = random_vector_in(&full, &mut rng);
        let Ok(t) = TwoPlane::new(f, &t1, &t2) else { continue };
        done += 1;
        let x = plucker_embed(&t);
        let vanish = forms.iter().all(|c| crate::exterior::dot(f, c, &x.coords) == 0);
        let intersects = t.subspace().intersection(k)?.dim() > 0;
        if intersects {
            meets += 1;
        } else {
            misses += 1;
        }
        if vanish == intersects {
            agree += 1;
        } else if r.witnesses.len() < 5 {
            r.witness(json!({ "plane": plane_json(&t), "forms_vanish": vanish, "meets_k": intersects }));
        }
    }
    r.count("trials", trials as i64);
    r.count("equivalences", agree);
    r.count("meets_k", meets);
    r.count("misses_k", misses);
    Ok(r.finish(agree == trials as i64 && meets > 0 && misses > 0))
}

/// Number of degree-`d` monomials in `n` variables divisible by none of `lms`.
fn standard_monomial_count(lms: &[Monomial], n: usize, d: u8) -> i64 {
    fn rec(lms: &[Monomial], n: usize, var: usize, left: u8, exps: &mut Vec<u8>) -> i64 {
        if var == n - 1 {
            exps.push(left);
            let m = Monomial::from_exponents(exps);
            exps.pop();
            return (!lms.iter().any(|l| l.divides(&m))) as i64;
        }
        (0..=left)
            .map(|e| {
                exps.push(e);
                let c = rec(lms, n, var + 1, left - e, exps);
                exps.pop();
                c
            })
            .sum()
    }
    rec(lms, n, 0, d, &mut Vec::with_capacity(n))
}

/// GB of the six 2×4 minors: dimension 5, numerator `1 - 6t² + 8t³ - 3t⁴`,
/// cross-checked against standard-monomial counts through degree 6.
pub fn check_schubert_chart(field: PrimeField) -> Result<CheckReport> {
    let mut r = ReportBuilder::new(
        "chart",
        "chart of S_K = rank <= 1 locus of 2x4 matrix: dim 5, numerator 1-6t^2+8t^3-3t^4",
    );
    let ideal = schubert_chart_ideal(field);
    let gb = ideal.groebner(&GbOptions::default())?;
    let lms = gb.leading_monomials();
    let hs = hilbert_series(&lms, 8);
    let hp = hs.hilbert_polynomial();
    let dim = hs.krull_dim() as i64;
    r.count("gb_len", gb.len() as i64);
    r.count("affine_dimension", dim);
    r.count("degree", hp.degree);
    let mut counts_agree = true;
    for d in 0..=6u8 {
        let enumerated = standard_monomial_count(&lms, 8, d);
        if enumerated != hs.hilbert_function(d as i64) {
            counts_agree = false;
            r.witness(json!({ "degree": d, "enumerated": enumerated, "series": hs.hilbert_function(d as i64) }));
        }
    }
    r.count("standard_monomial_counts_agree", counts_agree as i64);
    r.witness(json!({ "kind": "numerator", "coefficients": hs.numerator }));
    let ok = dim == 5 && hs.numerator == CHART_NUMERATOR && counts_agree && hp.degree == 4;
    Ok(r.finish(ok))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f31() -> PrimeField {
        PrimeField::new(31).unwrap()
    }

    #[test]
    fn tangency_examples() {
        let f = f31();
        let y = crate::exterior::rank4_normal_form(f);
        let inside = TwoPlane::new(f, &unit(4), &unit(5)).unwrap();
        assert_eq!(tangency_sides(&inside, &y).unwrap(), (true, true));
        // t1 = e1 ∉ K, t2 = e3 with y(e1, e3) = 0
        let outside = TwoPlane::new(f, &unit(0), &unit(2)).unwrap();
        assert_eq!(tangency_sides(&outside, &y).unwrap(), (false, false));
        let off = TwoPlane::new(f, &unit(0), &unit(1)).unwrap();
        assert!(tangency_sides(&off, &y).is_err());
        assert!(tangency_trials(f, 1, 40).passed());
    }

    #[test]
    fn pf_tangent_examples() {
        let f = f31();
        let rep = check_pf_tangent(&crate::exterior::rank4_normal_form(f)).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.counter("jacobian_kernel_dim"), Some(18));
        let rank2 = check_pf_tangent(&TwoForm::elementary(f, 0, 1)).unwrap();
        assert_eq!(rank2.skip_reason(), Some("singular point of Pf"));
        assert!(pf_tangent_trials(f, 2, 5).passed());
    }

    #[test]
    fn schubert_and_chart() {
        let f = f31();
        let k = Subspace::from_spanning(f, 7, &[unit(4), unit(5), unit(6)]);
        assert!(check_schubert_membership(&k, 40, 3).unwrap().passed());
        let chart = check_schubert_chart(f).unwrap();
        assert!(chart.passed(), "{chart:?}");
    }
}
