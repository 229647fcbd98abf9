//! Opt-in global certificate: the singular locus of `Y`, computed as
//! `I_Y + (3×3 minors of its Jacobian)`, is empty iff that ideal is
//! irrelevant (projective dimension −1).

use std::time::Duration;

use serde_json::json;

use super::{CheckConfig, CheckReport, ReportBuilder};
use crate::error::{Error, Result};
use crate::poly::{GbOptions, SparsePolynomial};
use crate::varieties::{ideal_y, IdealLabel, Instance, ProjectiveIdeal};

const DEEP_BUDGET: Duration = Duration::from_secs(600);

fn det3(m: [[&SparsePolynomial; 3]; 3]) -> Result<SparsePolynomial> {
    let minor = |a: usize, b: usize, c: usize, d: usize| -> Result<SparsePolynomial> {
        m[1][a].mul(m[2][b])?.sub(&m[1][c].mul(m[2][d])?)
    };
    m[0][0]
        .mul(&minor(1, 2, 2, 1)?)?
        .sub(&m[0][1].mul(&minor(0, 2, 2, 0)?)?)?
        .add(&m[0][2].mul(&minor(0, 1, 1, 0)?)?)
}

fn triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// The Jacobian ideal of `Y`: its cubics and all 3×3 minors of the 7×7
/// matrix of partials (rank 3 is the smooth value in codimension 3).
pub fn y_singular_locus_ideal(inst: &Instance) -> Result<ProjectiveIdeal> {
    let iy = ideal_y(inst);
    let n = iy.ring.nvars();
    let d: Vec<Vec<SparsePolynomial>> = iy.generators.iter().map(|g| (0..n).map(|v| g.derivative(v)).collect()).collect();
    let mut gens = iy.generators.clone();
    for r in triples(d.len()) {
        for c in triples(n) {
            let m = [0, 1, 2].map(|i| [0, 1, 2].map(|j| &d[r[i]][c[j]]));
            let p = det3(m)?;
            if !p.is_zero() {
                gens.push(p);
            }
        }
    }
    Ok(ProjectiveIdeal::new(iy.ring, gens, IdealLabel::Y))
}

/// Global smoothness of `Y` from the Jacobian ideal; skipped on budget.
pub fn check_y_singular_locus(inst: &Instance, cfg: &CheckConfig) -> Result<CheckReport> {
    let mut r = ReportBuilder::new(
        "deep-smoothness",
        "V(I_Y + 3x3 minors of Jac I_Y) = {} iff Y smooth",
    );
    r.witness(json!({ "instance_hash": inst.hash() }));
    let ideal = y_singular_locus_ideal(inst)?;
    r.count("generators", ideal.generators.len() as i64);
    match ideal.hilbert(&GbOptions::with_budget(cfg.budget(DEEP_BUDGET))) {
        Ok((gb, hp)) => {
            r.count("gb_len", gb.len() as i64);
            r.count("singular_locus_proj_dim", hp.proj_dim);
            // engineered instances are expected to carry singular points
            let want_empty = inst.witnesses().is_none();
            Ok(r.finish((hp.proj_dim == -1) == want_empty))
        }
        Err(Error::GbBudget { elapsed_ms, basis_len }) => {
            r.count("gb_budget_exceeded_ms", elapsed_ms as i64);
            r.count("basis_len", basis_len as i64);
            Ok(r.skip("Groebner budget exceeded for the Jacobian ideal of Y"))
        }
        Err(e) => Err(e),
    }
}
