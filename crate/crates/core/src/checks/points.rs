//! Pointwise smoothness of `X` and `Y` by Jacobian rank and by the
//! incidence condition `T ⊂ Ker y`, and the instance-level bundle built on
//! sampled points.

use serde_json::json;

use super::{form_json, plucker_json, subspace_json, CheckConfig, CheckReport, ReportBuilder};
use crate::error::{Error, Result};
use crate::exterior::{decompose_plucker, form_rank_kernel, wedge2_subspace, wedge_square, PluckerVector, TwoForm, DIM_V};
use crate::matrix::FieldMatrix;
use crate::poly::SparsePolynomial;
use crate::sampler::{sample_x, sample_y, SampleBudget, SampleStats, YStrategy};
use crate::subspace::Subspace;
use crate::varieties::{ideal_x, ideal_y, Instance, Provenance, ProjectiveIdeal};

/// Ideals of `X` and `Y` together with their Jacobian matrices of partials.
pub struct PointGeometry {
    pub ideal_x: ProjectiveIdeal,
    pub ideal_y: ProjectiveIdeal,
    dx: Vec<Vec<SparsePolynomial>>,
    dy: Vec<Vec<SparsePolynomial>>,
}

fn partials(ideal: &ProjectiveIdeal) -> Vec<Vec<SparsePolynomial>> {
    let n = ideal.ring.nvars();
    ideal.generators.iter().map(|g| (0..n).map(|v| g.derivative(v)).collect()).collect()
}

fn jacobian_at(d: &[Vec<SparsePolynomial>], field: crate::field::PrimeField, c: &[u32]) -> FieldMatrix {
    let mut j = FieldMatrix::zeros(field, d.len(), c.len());
    for (k, row) in d.iter().enumerate() {
        for (v, p) in row.iter().enumerate() {
            j.set(k, v, p.eval(c));
        }
    }
    j
}

impl PointGeometry {
    pub fn new(inst: &Instance) -> Self {
        let ix = ideal_x(inst);
        let iy = ideal_y(inst);
        let dx = partials(&ix);
        let dy = partials(&iy);
        PointGeometry { ideal_x: ix, ideal_y: iy, dx, dy }
    }
}

#[derive(Clone, Debug)]
pub struct XSmoothness {
    pub jacobian_rank: usize,
    /// `dim T_{X,x} = 13 - rank`.
    pub tangent_dim: usize,
    pub jacobian_smooth: bool,
    /// `{w ∈ W : T ⊂ Ker w}`.
    pub incidence: Subspace,
    pub incidence_smooth: bool,
}

impl XSmoothness {
    pub fn agree(&self) -> bool {
        self.jacobian_smooth == self.incidence_smooth
    }
}

pub fn x_smoothness(inst: &Instance, geo: &PointGeometry, x: &PluckerVector) -> Result<XSmoothness> {
    let f = inst.field();
    let c = inst.m_coordinates(x).ok_or_else(|| Error::Precondition("x is not in P(M)".into()))?;
    if x.is_zero() || wedge_square(f, x).iter().any(|&v| v != 0) || !geo.ideal_x.vanishes_at(&c) {
        return Err(Error::Precondition("x is not a point of X".into()));
    }
    let j = jacobian_at(&geo.dx, f, &c);
    let rank = j.rank();
    let t = decompose_plucker(f, x)?;
    let (t1, t2) = t.vectors();
    // rows (k, j): w(t_k, e_j) = Σ_a c_a w_a(t_k, e_j)
    let forms = inst.w_forms();
    let mut sys = FieldMatrix::zeros(f, 2 * DIM_V, forms.len());
    for (a, w) in forms.iter().enumerate() {
        for (k, tk) in [&t1, &t2].into_iter().enumerate() {
            let row = w.matrix().left_apply(tk);
            for jj in 0..DIM_V {
                sys.set(k * DIM_V + jj, a, row[jj]);
            }
        }
    }
    let coeffs = sys.kernel();
    let incidence = Subspace::from_spanning(
        f,
        crate::exterior::DIM_WEDGE2,
        &coeffs.basis_rows().iter().map(|cv| inst.w().basis().left_apply(cv)).collect::<Vec<_>>(),
    );
    Ok(XSmoothness {
        jacobian_rank: rank,
        tangent_dim: inst.m().dim() - 1 - rank,
        jacobian_smooth: rank == 10,
        incidence_smooth: incidence.dim() == 0,
        incidence,
    })
}

#[derive(Clone, Debug)]
pub struct YSmoothness {
    pub form_rank: usize,
    pub jacobian_rank: usize,
    pub jacobian_smooth: bool,
    pub incidence_smooth: bool,
    /// A nonzero element of `∧²K ∩ M` when one exists (rank-4 case).
    pub incidence_point: Option<PluckerVector>,
}

impl YSmoothness {
    pub fn agree(&self) -> bool {
        self.jacobian_smooth == self.incidence_smooth
    }
}

pub fn y_smoothness(inst: &Instance, geo: &PointGeometry, y: &TwoForm) -> Result<YSmoothness> {
    let f = inst.field();
    let c = inst.w_coordinates(y).ok_or_else(|| Error::Precondition("y is not in P(W)".into()))?;
    if y.is_zero() || !geo.ideal_y.vanishes_at(&c) {
        return Err(Error::Precondition("y is not a point of Y".into()));
    }
    let (form_rank, k) = form_rank_kernel(y);
    let j = jacobian_at(&geo.dy, f, &c);
    let rank = j.rank();
    let (incidence_smooth, incidence_point) = match form_rank {
        2 => (false, None),
        4 => {
            let meet = wedge2_subspace(&k)?.intersection(inst.m())?;
            let pt = meet.basis_rows().first().map(|r| PluckerVector::new(r.clone()));
            (meet.dim() == 0, pt)
        }
        r => return Err(Error::Precondition(format!("a form of rank {r} is not on Pf"))),
    };
    Ok(YSmoothness { form_rank, jacobian_rank: rank, jacobian_smooth: rank == 3, incidence_smooth, incidence_point })
}

const X_ANCHOR: &str = "dim T_x X > 3 <=> exists y in W with T_x in Ker y";
const Y_ANCHOR: &str = "y in Sing Y <=> rank y = 2 or exists [T] in M with T in Ker y";

pub fn check_point_smooth_x(inst: &Instance, x: &PluckerVector) -> Result<CheckReport> {
    let geo = PointGeometry::new(inst);
    let mut r = ReportBuilder::new("smoothness-x", X_ANCHOR);
    let s = x_smoothness(inst, &geo, x)?;
    r.count("jacobian_rank", s.jacobian_rank as i64);
    r.count("tangent_dim", s.tangent_dim as i64);
    r.count("jacobian_smooth", s.jacobian_smooth as i64);
    r.count("incidence_dim", s.incidence.dim() as i64);
    r.count("incidence_smooth", s.incidence_smooth as i64);
    r.witness(plucker_json(x));
    if s.incidence.dim() > 0 {
        r.witness(subspace_json(&s.incidence));
    }
    Ok(r.finish(s.agree()))
}

pub fn check_point_smooth_y(inst: &Instance, y: &TwoForm) -> Result<CheckReport> {
    let geo = PointGeometry::new(inst);
    let f = inst.field();
    let mut r = ReportBuilder::new("smoothness-y", Y_ANCHOR);
    let s = y_smoothness(inst, &geo, y)?;
    r.count("form_rank", s.form_rank as i64);
    r.count("jacobian_rank", s.jacobian_rank as i64);
    r.count("jacobian_smooth", s.jacobian_smooth as i64);
    r.count("incidence_smooth", s.incidence_smooth as i64);
    r.witness(form_json(y));
    let mut ok = s.agree();
    if let Some(x) = &s.incidence_point {
        // every element of ∧²K is decomposable for dim K = 3
        let (_, k) = form_rank_kernel(y);
        let inside = decompose_plucker(f, x).map(|t| k.contains_subspace(&t.subspace())).unwrap_or(false);
        r.count("incidence_point_plane_in_kernel", inside as i64);
        ok &= inside;
        r.witness(plucker_json(x));
    }
    Ok(r.finish(ok))
}

/// Sampled points of one instance, shared by the bundle checks.
pub struct InstancePoints {
    pub x: Vec<PluckerVector>,
    pub y: Vec<TwoForm>,
    pub x_stats: Option<SampleStats>,
    pub y_stats: Option<SampleStats>,
    pub errors: Vec<String>,
}

pub fn sample_instance_points(inst: &Instance, cfg: &CheckConfig) -> InstancePoints {
    let mut out = InstancePoints { x: Vec::new(), y: Vec::new(), x_stats: None, y_stats: None, errors: Vec::new() };
    match sample_x(inst, &SampleBudget::new(cfg.trials, cfg.x_points, cfg.seed)) {
        Ok(s) => {
            out.x = s.points.into_iter().map(|p| p.1).collect();
            out.x_stats = Some(s.stats);
        }
        Err(e) => out.errors.push(format!("X sampler: {e}")),
    }
    let yb = SampleBudget::new(cfg.trials, cfg.y_points, cfg.seed.wrapping_add(1));
    match sample_y(inst, &yb, YStrategy::ScanThenSlice { max_slices: cfg.max_slices }) {
        Ok(s) => {
            out.y = s.points;
            out.y_stats = Some(s.stats);
        }
        Err(e) => out.errors.push(format!("Y sampler: {e}")),
    }
    out
}

fn smoothness_report(inst: &Instance, geo: &PointGeometry, pts: &InstancePoints) -> Result<CheckReport> {
    let mut r = ReportBuilder::new(
        "smoothness",
        "Jacobian rank verdict == incidence verdict at every point of X and Y",
    );
    r.witness(json!({ "instance_hash": inst.hash() }));
    let (mut xa, mut xs, mut ya, mut ys) = (0i64, 0i64, 0i64, 0i64);
    for x in &pts.x {
        let s = x_smoothness(inst, geo, x)?;
        if s.agree() {
            xa += 1;
        } else {
            r.witness(json!({ "disagreement": plucker_json(x), "jacobian_rank": s.jacobian_rank }));
        }
        if s.jacobian_smooth {
            xs += 1;
        }
    }
    for y in &pts.y {
        let s = y_smoothness(inst, geo, y)?;
        if s.agree() {
            ya += 1;
        } else {
            r.witness(json!({ "disagreement": form_json(y), "jacobian_rank": s.jacobian_rank }));
        }
        if s.jacobian_smooth {
            ys += 1;
        }
        if s.form_rank == 2 {
            r.bump("y_rank2");
        }
    }
    r.count("x_points", pts.x.len() as i64);
    r.count("x_agree", xa);
    r.count("x_smooth", xs);
    r.count("y_points", pts.y.len() as i64);
    r.count("y_agree", ya);
    r.count("y_smooth", ys);
    let mut ok = xa == pts.x.len() as i64 && ya == pts.y.len() as i64;
    if let Some(wit) = inst.witnesses() {
        let sx = x_smoothness(inst, geo, &wit.x)?;
        let sy = y_smoothness(inst, geo, &wit.y)?;
        let both = !sx.jacobian_smooth && !sx.incidence_smooth && !sy.jacobian_smooth && !sy.incidence_smooth;
        r.count("witness_x_jacobian_rank", sx.jacobian_rank as i64);
        r.count("witness_y_jacobian_rank", sy.jacobian_rank as i64);
        r.count("witnesses_singular_both_routes", both as i64);
        r.witness(json!({ "witness_x": plucker_json(&wit.x), "witness_y": form_json(&wit.y) }));
        ok &= both;
    } else if inst.provenance() == Provenance::Engineered {
        return Err(Error::Precondition("engineered instance without witnesses".into()));
    }
    for e in &pts.errors {
        r.witness(json!({ "sampler_error": e }));
    }
    if pts.x.is_empty() && pts.y.is_empty() && inst.witnesses().is_none() {
        return Ok(r.skip("no points sampled"));
    }
    Ok(r.finish(ok))
}

/// Pointwise simultaneous smoothness on sampled points (and planted
/// witnesses, if any).
pub fn check_smoothness(inst: &Instance, cfg: &CheckConfig) -> Result<CheckReport> {
    let geo = PointGeometry::new(inst);
    let pts = sample_instance_points(inst, cfg);
    smoothness_report(inst, &geo, &pts)
}

/// Minimum number of `X`-points stacked for the evaluation-kernel check.
pub const KERW_MIN_POINTS: usize = 30;

/// The bundle: simultaneous smoothness, distinct kernels of `Y`-points,
/// and recovery of `W` as the forms vanishing on sampled `X`-points.
pub fn check_instance(inst: &Instance, cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    let geo = PointGeometry::new(inst);
    let pts = sample_instance_points(inst, cfg);
    let mut reports = vec![smoothness_report(inst, &geo, &pts)?];

    let mut r = ReportBuilder::new("distinct-kernels", "y1 != y2 in Y => Ker y1 != Ker y2");
    if pts.y.len() < 2 {
        r.count("y_points", pts.y.len() as i64);
        reports.push(r.skip("fewer than two Y-points sampled"));
    } else {
        let kernels: Vec<Subspace> = pts.y.iter().map(|y| form_rank_kernel(y).1).collect();
        let mut clashes = 0i64;
        for a in 0..kernels.len() {
            for b in a + 1..kernels.len() {
                if kernels[a] == kernels[b] {
                    clashes += 1;
                    r.witness(json!({ "pair": [form_json(&pts.y[a]), form_json(&pts.y[b])] }));
                }
            }
        }
        let n = kernels.len() as i64;
        r.count("y_points", n);
        r.count("pairs", n * (n - 1) / 2);
        r.count("equal_kernel_pairs", clashes);
        reports.push(r.finish(clashes == 0));
    }

    let mut r = ReportBuilder::new("evaluation-kernel", "{w : w|X = 0} = W, dim 7");
    r.count("x_points", pts.x.len() as i64);
    if pts.x.len() < KERW_MIN_POINTS {
        if let Some(s) = &pts.x_stats {
            r.count("trials", s.trials as i64);
        }
        reports.push(r.skip(format!("only {} X-points sampled, need {KERW_MIN_POINTS}", pts.x.len())));
    } else {
        let rows: Vec<Vec<u32>> = pts.x.iter().map(|x| x.coords.clone()).collect();
        let span = Subspace::from_spanning(inst.field(), crate::exterior::DIM_WEDGE2, &rows);
        let kernel = span.annihilator();
        let w_in_k = kernel.contains_subspace(inst.w());
        let k_in_w = inst.w().contains_subspace(&kernel);
        r.count("span_dim", span.dim() as i64);
        r.count("kernel_dim", kernel.dim() as i64);
        r.count("w_in_kernel", w_in_k as i64);
        r.count("kernel_in_w", k_in_w as i64);
        let ok = kernel.dim() == 7 && w_in_k && k_in_w && kernel == *inst.w();
        if !ok {
            r.witness(subspace_json(&kernel));
        }
        reports.push(r.finish(ok));
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::TwoPlane;
    use crate::varieties::{engineered_singular_instance, random_instance};

    #[test]
    fn engineered_witnesses_are_singular_both_ways() {
        let inst = engineered_singular_instance(3, 31).unwrap();
        let wit = inst.witnesses().unwrap();
        let rx = check_point_smooth_x(&inst, &wit.x).unwrap();
        assert!(rx.passed());
        assert_eq!(rx.counter("jacobian_smooth"), Some(0));
        let ry = check_point_smooth_y(&inst, &wit.y).unwrap();
        assert!(ry.passed(), "{ry:?}");
        assert_eq!(ry.counter("incidence_smooth"), Some(0));
        assert_eq!(ry.counter("incidence_point_plane_in_kernel"), Some(1));
    }

    #[test]
    fn planted_rank_two_point_is_singular() {
        use rand::SeedableRng;
        let f = crate::field::PrimeField::new(31).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        let y = TwoForm::wedge(f, &[1, 0, 2, 0, 0, 1, 0], &[0, 1, 0, 3, 0, 0, 1]);
        let mut rows = vec![y.coords()];
        rows.extend(FieldMatrix::random(f, 6, 21, &mut rng).row_vecs());
        let inst = Instance::from_w(Subspace::from_spanning(f, 21, &rows), 0, Provenance::User).unwrap();
        let rep = check_point_smooth_y(&inst, &y).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.counter("form_rank"), Some(2));
        assert_eq!(rep.counter("jacobian_smooth"), Some(0));
    }

    #[test]
    fn off_variety_points_are_rejected() {
        let inst = random_instance(4, 31).unwrap();
        let f = inst.field();
        let t = TwoPlane::new(f, &[1, 0, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0, 0]).unwrap();
        assert!(check_point_smooth_x(&inst, &crate::exterior::plucker_embed(&t)).is_err());
        assert!(check_point_smooth_y(&inst, &crate::exterior::rank4_normal_form(f)).is_err());
    }

    #[test]
    fn bundle_on_a_random_instance() {
        let inst = random_instance(1, 31).unwrap();
        let cfg = CheckConfig { x_points: 40, y_points: 4, ..CheckConfig::default() };
        let reports = check_instance(&inst, &cfg).unwrap();
        for r in &reports {
            assert!(r.passed(), "{r:?}");
        }
    }
}
