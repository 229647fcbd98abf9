//! The verification suite. Each check returns a [`CheckReport`]; wherever
//! a claim can be computed two ways, both routes run and the verdict is
//! their agreement together with the expected value.

mod deep;
mod global;
mod linear;
mod points;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::exterior::{PluckerVector, TwoForm, TwoPlane};
use crate::subspace::Subspace;

pub use deep::{check_y_singular_locus, y_singular_locus_ideal};
pub use global::{check_curve_family, check_global_degrees, pf_slice_degrees, CURVE_DEGREE};
pub use linear::{
    check_pf_tangent, check_schubert_chart, check_schubert_membership, check_tangency, pf_tangent_trials,
    tangency_sides, tangency_trials, CHART_NUMERATOR,
};
pub use points::{
    check_instance, check_point_smooth_x, check_point_smooth_y, check_smoothness, sample_instance_points,
    x_smoothness, y_smoothness, InstancePoints, PointGeometry, XSmoothness, YSmoothness,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub claim_id: String,
    /// Statement being checked; serialized under the report schema's key.
    #[serde(rename = "paper_anchor")]
    pub anchor: String,
    pub verdict: Verdict,
    pub witnesses: Vec<Value>,
    pub counters: BTreeMap<String, i64>,
    pub elapsed_ms: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// `true` for pass and for skips that carry a reason.
    pub fn acceptable(&self) -> bool {
        match self.verdict {
            Verdict::Pass => true,
            Verdict::Fail => false,
            Verdict::Skipped => self.skip_reason().is_some(),
        }
    }

    pub fn skip_reason(&self) -> Option<&str> {
        self.witnesses.iter().find_map(|w| w.get("skip_reason").and_then(Value::as_str))
    }

    pub fn counter(&self, name: &str) -> Option<i64> {
        self.counters.get(name).copied()
    }
}

/// Knobs shared by the checks.
#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub seed: u64,
    /// Scan trials per sampler run.
    pub trials: u64,
    /// Overrides every Gröbner time budget when set.
    pub gb_budget: Option<Duration>,
    pub deep: bool,
    pub x_points: usize,
    pub y_points: usize,
    /// Maximum `P^3` slices for the `Y` fallback sampler.
    pub max_slices: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: 0,
            trials: 3_000_000,
            gb_budget: None,
            deep: false,
            x_points: 100,
            y_points: 10,
            max_slices: 2_000,
        }
    }
}

impl CheckConfig {
    pub fn budget(&self, default: Duration) -> Duration {
        self.gb_budget.unwrap_or(default)
    }
}

pub(crate) struct ReportBuilder {
    claim_id: String,
    anchor: String,
    start: Instant,
    witnesses: Vec<Value>,
    counters: BTreeMap<String, i64>,
}

impl ReportBuilder {
    pub(crate) fn new(claim_id: &str, anchor: &str) -> Self {
        ReportBuilder {
            claim_id: claim_id.to_string(),
            anchor: anchor.to_string(),
            start: Instant::now(),
            witnesses: Vec::new(),
            counters: BTreeMap::new(),
        }
    }

    pub(crate) fn count(&mut self, name: &str, v: i64) {
        self.counters.insert(name.to_string(), v);
    }

    pub(crate) fn bump(&mut self, name: &str) {
        *self.counters.entry(name.to_string()).or_insert(0) += 1;
    }

    pub(crate) fn witness(&mut self, v: Value) {
        self.witnesses.push(v);
    }

    fn build(self, verdict: Verdict) -> CheckReport {
        CheckReport {
            claim_id: self.claim_id,
            anchor: self.anchor,
            verdict,
            witnesses: self.witnesses,
            counters: self.counters,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
        }
    }

    pub(crate) fn finish(mut self, pass: bool) -> CheckReport {
        if !pass && self.witnesses.is_empty() {
            self.witnesses.push(json!({ "kind": "note", "detail": "expected value not met; see counters" }));
        }
        self.build(if pass { Verdict::Pass } else { Verdict::Fail })
    }

    pub(crate) fn skip(mut self, reason: impl Into<String>) -> CheckReport {
        self.witnesses.push(json!({ "skip_reason": reason.into() }));
        self.build(Verdict::Skipped)
    }
}

pub fn plucker_json(x: &PluckerVector) -> Value {
    json!({ "kind": "plucker", "coords": x.coords })
}

pub fn form_json(y: &TwoForm) -> Value {
    json!({ "kind": "two_form", "coords": y.coords() })
}

pub fn plane_json(t: &TwoPlane) -> Value {
    json!({ "kind": "two_plane", "basis": t.basis().row_vecs() })
}

pub fn subspace_json(s: &Subspace) -> Value {
    json!({ "kind": "subspace", "ambient": s.ambient_dim(), "basis": s.basis_rows() })
}

/// Reports sorted by claim id, so assembled output is order-independent.
pub fn sort_reports(reports: &mut [CheckReport]) {
    reports.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
}
