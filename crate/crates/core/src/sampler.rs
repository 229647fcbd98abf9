//! Rational-point samplers built on rank-deficiency scans, with a Gröbner
//! slice fallback for `Y`.
//!
//! Every emitted point is re-evaluated against the relevant ideal before it
//! is returned; there is no probabilistic acceptance.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{form_rank_kernel, plucker_embed, rank4_normal_form, sub_pfaffians, PluckerVector, TwoForm, TwoPlane, DIM_V};
use crate::field::PrimeField;
use crate::matrix::FieldMatrix;
use crate::poly::zerodim::{zero_dim_points, SolverOptions};
use crate::poly::{buchberger, GbOptions, PolyRing, SparsePolynomial};
use crate::varieties::{ideal_curve, ideal_x, ideal_y, y_point_data, Instance, ProjectiveIdeal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SampleBudget {
    pub max_trials: u64,
    pub target_count: usize,
    pub seed: u64,
}

impl SampleBudget {
    pub fn new(max_trials: u64, target_count: usize, seed: u64) -> Self {
        assert!(max_trials > 0 && target_count > 0, "budgets must be positive");
        SampleBudget { max_trials, target_count, seed }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SampleStats {
    pub trials: u64,
    pub hits: u64,
    /// Distinct points after de-duplication.
    pub emitted: u64,
    /// Rank-2 forms met while scanning `P(W)`.
    pub rank2_rejections: u64,
    pub slices: u64,
    pub slice_points: u64,
    /// Largest number of rational points on a single slice.
    pub max_slice_points: u64,
}

#[derive(Clone, Debug)]
pub struct Sample<T> {
    pub points: Vec<T>,
    pub stats: SampleStats,
}

/// A random invertible 7×7 matrix.
pub fn random_gl(field: PrimeField, rng: &mut impl Rng) -> FieldMatrix {
    loop {
        let a = FieldMatrix::random(field, DIM_V, DIM_V, rng);
        if a.rank() == DIM_V {
            return a;
        }
    }
}

/// `A J Aᵀ` for the rank-4 normal form `J` and a random invertible `A`;
/// the kernel is `A^{-T} ⟨e5, e6, e7⟩`.
pub fn sample_pf_smooth_with(field: PrimeField, rng: &mut impl Rng) -> (TwoForm, FieldMatrix) {
    let a = random_gl(field, rng);
    let y = rank4_normal_form(field).transport(&a).expect("7x7");
    (y, a)
}

pub fn sample_pf_smooth(p: u32, seed: u64) -> Result<TwoForm> {
    let field = PrimeField::new(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(sample_pf_smooth_with(field, &mut rng).0)
}

fn random_nonzero_vector(field: PrimeField, n: usize, rng: &mut impl Rng) -> Vec<u32> {
    loop {
        let v: Vec<u32> = (0..n).map(|_| field.random(rng)).collect();
        if v.iter().any(|&a| a != 0) {
            return v;
        }
    }
}

/// Precomputed `W` basis matrices for the scan `N(t)_{ij} = w_i(t, e_j)`.
struct Scanner {
    field: PrimeField,
    forms: Vec<FieldMatrix>,
}

impl Scanner {
    fn new(inst: &Instance) -> Self {
        Scanner { field: inst.field(), forms: inst.w_forms().iter().map(|w| w.matrix().clone()).collect() }
    }

    fn scan_matrix(&self, t: &[u32]) -> FieldMatrix {
        let mut n = FieldMatrix::zeros(self.field, self.forms.len(), DIM_V);
        for (i, w) in self.forms.iter().enumerate() {
            let row = w.left_apply(t);
            for (j, v) in row.into_iter().enumerate() {
                n.set(i, j, v);
            }
        }
        n
    }

    /// A second vector completing `t` to a plane annihilated by all of `W`.
    fn partner(&self, t: &[u32]) -> Option<Vec<u32>> {
        let n = self.scan_matrix(t);
        let ker = n.kernel();
        debug_assert!(ker.contains(t), "t lies in the kernel of its scan matrix");
        if ker.dim() < 2 {
            return None;
        }
        let lead = t.iter().position(|&a| a != 0).expect("nonzero");
        // lowest pivot different from t's leading index
        let idx = ker.pivots().iter().position(|&pv| pv != lead).expect("dim >= 2");
        Some(ker.basis().row(idx).to_vec())
    }
}

fn emit_x(
    inst: &Instance,
    ideal: &ProjectiveIdeal,
    extra: &[SparsePolynomial],
    t1: &[u32],
    t2: &[u32],
) -> Result<(TwoPlane, PluckerVector)> {
    let f = inst.field();
    let t = TwoPlane::new(f, t1, t2)?.canonical();
    let x = plucker_embed(&t);
    let c = inst.m_coordinates(&x).ok_or_else(|| Error::Precondition("sampled plane is not in P(M)".into()))?;
    if !ideal.vanishes_at(&c) || extra.iter().any(|g| g.eval(&c) != 0) {
        return Err(Error::Precondition("sampled point fails its ideal".into()));
    }
    Ok((t, x))
}

/// Points of `X` by scanning random `t1 ∈ P(V)`.
pub fn sample_x(inst: &Instance, budget: &SampleBudget) -> Result<Sample<(TwoPlane, PluckerVector)>> {
    let f = inst.field();
    let scanner = Scanner::new(inst);
    let ideal = ideal_x(inst);
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut stats = SampleStats::default();
    let mut seen = BTreeSet::new();
    let mut points = Vec::new();
    while stats.trials < budget.max_trials && points.len() < budget.target_count {
        stats.trials += 1;
        let t1 = random_nonzero_vector(f, DIM_V, &mut rng);
        let Some(t2) = scanner.partner(&t1) else { continue };
        stats.hits += 1;
        let (t, x) = emit_x(inst, &ideal, &[], &t1, &t2)?;
        if seen.insert(x.coords.clone()) {
            points.push((t, x));
        }
    }
    stats.emitted = points.len() as u64;
    if points.is_empty() {
        return Err(Error::SampleBudget { trials: stats.trials, detail: "no points of X found".into() });
    }
    Ok(Sample { points, stats })
}

/// How `sample_y` looks for points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YStrategy {
    /// Random forms of `W`, kept when of rank 4.
    Scan,
    /// Rational points of random `P^3`-slices via zero-dimensional solving.
    Slice { max_slices: u64 },
    /// Scan within the budget, then slices if the target was not reached.
    ScanThenSlice { max_slices: u64 },
}

fn accept_y(inst: &Instance, ideal: &ProjectiveIdeal, y: &TwoForm) -> Result<()> {
    let c = inst.w_coordinates(y).expect("y was built inside W");
    let pf = sub_pfaffians(y.matrix())?;
    if pf.iter().any(|&v| v != 0) || !ideal.vanishes_at(&c) {
        return Err(Error::Precondition("sampled form fails the Pfaffian cubics".into()));
    }
    Ok(())
}

/// Rank-4 points of `Y`.
pub fn sample_y(inst: &Instance, budget: &SampleBudget, strategy: YStrategy) -> Result<Sample<TwoForm>> {
    let f = inst.field();
    let ideal = ideal_y(inst);
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut stats = SampleStats::default();
    let mut seen = BTreeSet::new();
    let mut points = Vec::new();
    let mut push = |y: TwoForm, points: &mut Vec<TwoForm>| {
        let key = crate::exterior::normalize_projective(f, &y.coords());
        if seen.insert(key) {
            points.push(y);
        }
    };

    if matches!(strategy, YStrategy::Scan | YStrategy::ScanThenSlice { .. }) {
        while stats.trials < budget.max_trials && points.len() < budget.target_count {
            stats.trials += 1;
            let c = random_nonzero_vector(f, 7, &mut rng);
            let y = inst.form_at(&c);
            match y.matrix().rank() {
                4 => {
                    stats.hits += 1;
                    accept_y(inst, &ideal, &y)?;
                    push(y, &mut points);
                }
                2 => stats.rank2_rejections += 1,
                _ => {}
            }
        }
    }

    let max_slices = match strategy {
        YStrategy::Scan => 0,
        YStrategy::Slice { max_slices } | YStrategy::ScanThenSlice { max_slices } => max_slices,
    };
    while points.len() < budget.target_count && stats.slices < max_slices {
        stats.slices += 1;
        let found = slice_y_points(inst, &ideal, &mut rng)?;
        stats.slice_points += found.len() as u64;
        stats.max_slice_points = stats.max_slice_points.max(found.len() as u64);
        for y in found {
            let rank = y.matrix().rank();
            if rank == 2 {
                stats.rank2_rejections += 1;
                continue;
            }
            if rank != 4 {
                return Err(Error::Precondition(format!("slice point has rank {rank}")));
            }
            stats.hits += 1;
            accept_y(inst, &ideal, &y)?;
            push(y, &mut points);
            if points.len() >= budget.target_count {
                break;
            }
        }
    }
    stats.emitted = points.len() as u64;
    if points.is_empty() {
        return Err(Error::SampleBudget {
            trials: stats.trials,
            detail: format!(
                "no rank-4 points of Y after {} slices; raise the budget, enable slicing, or use a smaller prime",
                stats.slices
            ),
        });
    }
    Ok(Sample { points, stats })
}

/// `Y ∩ P^3` for a random `P^3 ⊂ P(W)`, dehomogenized at the last slice
/// coordinate. Returns the rational points found (at most 14 over the
/// closure for a proper slice).
fn slice_y_points(inst: &Instance, ideal: &ProjectiveIdeal, rng: &mut ChaCha8Rng) -> Result<Vec<TwoForm>> {
    let f = inst.field();
    let param = FieldMatrix::random(f, 4, 7, rng);
    let slice = PolyRing::new(f, 4)?;
    let affine = PolyRing::new(f, 3)?;
    // c = u · param, i.e. c_a ↦ Σ_k param[k][a] u_k
    let map = param.transpose();
    let gens: Vec<SparsePolynomial> = ideal
        .generators
        .iter()
        .map(|g| g.linear_substitute(&map, &slice)?.dehomogenize(3, &affine))
        .collect::<Result<_>>()?;
    let gb = buchberger(&gens, &GbOptions::default())?;
    if gb.is_unit() {
        return Ok(Vec::new());
    }
    let pts = match zero_dim_points(&gb, &SolverOptions { seed: rng.gen(), attempts: 20 }) {
        Ok(p) => p,
        // a non-proper slice: skip it
        Err(Error::NotZeroDimensional) => return Ok(Vec::new()),
        Err(e) => return Err(e),
    };
    Ok(pts
        .into_iter()
        .map(|u| {
            let u = [u[0], u[1], u[2], 1];
            inst.form_at(&param.left_apply(&u))
        })
        .collect())
}

/// Points of `C_y` by an exhaustive scan of `t1 ∈ P(Ker y)`.
pub fn sample_curve_points(inst: &Instance, y: &TwoForm, budget: &SampleBudget) -> Result<Sample<(TwoPlane, PluckerVector)>> {
    let f = inst.field();
    let (rank, kernel) = y_point_data(inst, y)?;
    if rank != 4 {
        return Err(Error::Precondition(format!("curve points need a rank-4 y, got rank {rank}")));
    }
    let curve = ideal_curve(inst, y)?;
    let scanner = Scanner::new(inst);
    let k = kernel.basis_rows();
    let p = f.modulus();
    let mut stats = SampleStats::default();
    let mut seen = BTreeSet::new();
    let mut points = Vec::new();
    // projective points (a, b, c) with leading coordinate 1
    let mut coords = Vec::new();
    coords.push([1u32, 0, 0]);
    for a in 0..p {
        coords.push([a, 1, 0]);
    }
    for a in 0..p {
        for b in 0..p {
            coords.push([a, b, 1]);
        }
    }
    for abc in coords {
        if stats.trials >= budget.max_trials || points.len() >= budget.target_count {
            break;
        }
        stats.trials += 1;
        let t1: Vec<u32> = (0..DIM_V)
            .map(|i| f.add(f.add(f.mul(abc[0], k[0][i]), f.mul(abc[1], k[1][i])), f.mul(abc[2], k[2][i])))
            .collect();
        let Some(t2) = scanner.partner(&t1) else { continue };
        stats.hits += 1;
        let (t, x) = emit_x(inst, &curve, &[], &t1, &t2)?;
        if seen.insert(x.coords.clone()) {
            points.push((t, x));
        }
    }
    stats.emitted = points.len() as u64;
    if points.is_empty() {
        return Err(Error::SampleBudget { trials: stats.trials, detail: "no points of C_y found".into() });
    }
    Ok(Sample { points, stats })
}

/// Kernel of a sampled rank-4 form (convenience for callers).
pub fn kernel_of(y: &TwoForm) -> crate::subspace::Subspace {
    form_rank_kernel(y).1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subspace::Subspace;
    use crate::varieties::{engineered_singular_instance, random_instance};

    #[test]
    fn smooth_pfaffian_points() {
        let f = PrimeField::new(31).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let (y, a) = sample_pf_smooth_with(f, &mut rng);
            let (rank, k) = form_rank_kernel(&y);
            assert_eq!(rank, 4);
            assert!(sub_pfaffians(y.matrix()).unwrap().iter().all(|&v| v == 0));
            // Ker(A J Aᵀ) = A^{-T} ⟨e5, e6, e7⟩
            let ait = a.inverse().unwrap().transpose();
            let image: Vec<Vec<u32>> = (4..7)
                .map(|i| {
                    let mut e = vec![0; 7];
                    e[i] = 1;
                    ait.apply(&e)
                })
                .collect();
            assert_eq!(k, Subspace::from_spanning(f, 7, &image));
        }
    }

    #[test]
    fn x_points_are_deterministic_and_on_x() {
        let inst = random_instance(1, 31).unwrap();
        let b = SampleBudget::new(200_000, 5, 17);
        let s = sample_x(&inst, &b).unwrap();
        assert_eq!(s.points.len(), 5);
        let again = sample_x(&inst, &b).unwrap();
        assert_eq!(s.points.iter().map(|p| &p.1).collect::<Vec<_>>(), again.points.iter().map(|p| &p.1).collect::<Vec<_>>());
        for (_, x) in &s.points {
            for w in inst.w_forms() {
                assert_eq!(crate::exterior::pair_eval(&w, x), 0);
            }
        }
    }

    #[test]
    fn y_points_by_slicing() {
        let inst = random_instance(2, 31).unwrap();
        let b = SampleBudget::new(1, 3, 5);
        let s = sample_y(&inst, &b, YStrategy::Slice { max_slices: 200 }).unwrap();
        assert_eq!(s.points.len(), 3);
        assert!(s.stats.max_slice_points <= 14);
        for y in &s.points {
            assert_eq!(y.matrix().rank(), 4);
        }
    }

    #[test]
    fn witness_plane_is_found_by_scanning_inside_it() {
        let inst = engineered_singular_instance(2, 31).unwrap();
        let f = inst.field();
        let wit = inst.witnesses().unwrap();
        let t = crate::exterior::decompose_plucker(f, &wit.x).unwrap();
        let scanner = Scanner::new(&inst);
        let (t1, _) = t.vectors();
        let t2 = scanner.partner(&t1).unwrap();
        let found = plucker_embed(&TwoPlane::new(f, &t1, &t2).unwrap());
        // the kernel may be larger than T, but T itself is annihilated by W
        assert!(scanner.scan_matrix(&t1).kernel().contains_subspace(&t.subspace()));
        assert!(inst.m_coordinates(&found).is_some());
    }
}
