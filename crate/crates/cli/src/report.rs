//! One `GraphReport` per input graph. Every field is always present; stages
//! that were not run, or do not apply, serialize as `null`.

use std::collections::BTreeMap;
use std::time::Instant;

use roman_bondage::bondage::{roman_bondage, BondageResult, BondageStatus};
use roman_bondage::bounds::checks::run_check;
use roman_bondage::bounds::{evaluate_all, rational_string, BoundEvaluation, CheckId, CheckOutcome, GraphContext};
use roman_bondage::io::graph6_string;
use roman_bondage::rdf::gamma_exact;
use roman_bondage::{Edge, Girth};
use serde::Serialize;

use crate::source::Item;

/// Which stages run. Later stages imply the earlier ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    Solve,
    Bondage,
    Bounds,
}

#[derive(Debug, Clone)]
pub struct Pipeline {
    pub stage: Stage,
    /// `None` means the default cap for each graph.
    pub cap: Option<usize>,
    pub checks: Vec<CheckId>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum GirthField {
    Finite(usize),
    Infinite(&'static str),
}

#[derive(Debug, Clone, Serialize)]
pub struct BondageField {
    pub status: BondageStatus,
    pub value: Option<usize>,
    pub witness: Option<Vec<Edge>>,
    /// Canonical indices of the witness edges in the sorted edge list.
    pub witness_indices: Option<Vec<usize>>,
    pub cap_used: usize,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Timings {
    pub solve: f64,
    pub bondage: Option<f64>,
    pub impact: Option<f64>,
    pub bounds: Option<f64>,
    pub checks: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphReport {
    pub id: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
    pub ad: Option<String>,
    pub girth: GirthField,
    pub chi: Option<i64>,
    pub gamma: usize,
    pub gamma_r: usize,
    pub bondage: Option<BondageField>,
    pub v_minus_size: Option<usize>,
    pub v_zero_size: Option<usize>,
    pub v_plus_size: Option<usize>,
    pub vertex_critical: Option<bool>,
    pub bounds: Option<BTreeMap<&'static str, BoundEvaluation>>,
    /// Bounds that apply but fall below the exact bondage number.
    pub soundness_failures: Option<Vec<&'static str>>,
    pub checks: Option<BTreeMap<&'static str, CheckOutcome>>,
    /// Checks whose outcome is `VIOLATED`.
    pub violations: Option<Vec<&'static str>>,
    pub timings_ms: Timings,
}

impl GraphReport {
    /// Whether this record should make a campaign exit with the violation code.
    pub fn has_failure(&self) -> bool {
        let nonempty = |v: &Option<Vec<&str>>| v.as_ref().is_some_and(|v| !v.is_empty());
        nonempty(&self.violations) || nonempty(&self.soundness_failures)
    }
}

fn millis(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn bondage_field(g: &roman_bondage::Graph, r: BondageResult) -> BondageField {
    let witness_indices = r
        .witness
        .as_ref()
        .map(|w| w.iter().map(|&(u, v)| g.edge_index(u, v).expect("witness edge")).collect());
    BondageField {
        status: r.status,
        value: r.value,
        witness: r.witness,
        witness_indices,
        cap_used: r.cap_used,
    }
}

/// Runs the pipeline on one graph.
pub fn build(item: &Item, pipeline: &Pipeline) -> GraphReport {
    let g = &item.graph;
    let n = g.vertex_count();
    let ctx = GraphContext::new(g, item.embedding);

    let t = Instant::now();
    let gamma = gamma_exact(g).value;
    let gamma_r = ctx.gamma_r().value;
    let mut timings = Timings {
        solve: millis(t),
        ..Timings::default()
    };

    let mut report = GraphReport {
        id: item.id.clone(),
        graph6: graph6_string(g).unwrap_or_default(),
        n,
        m: g.edge_count(),
        min_degree: (n > 0).then(|| g.min_degree()),
        max_degree: (n > 0).then(|| g.max_degree()),
        ad: g.average_degree().ok().map(|r| rational_string(&r)),
        girth: match g.girth() {
            Girth::Finite(k) => GirthField::Finite(k),
            Girth::Infinite => GirthField::Infinite("inf"),
        },
        chi: item.embedding.and_then(|e| e.chi),
        gamma,
        gamma_r,
        bondage: None,
        v_minus_size: None,
        v_zero_size: None,
        v_plus_size: None,
        vertex_critical: None,
        bounds: None,
        soundness_failures: None,
        checks: None,
        violations: None,
        timings_ms: Timings::default(),
    };

    let mut exact = None;
    if pipeline.stage >= Stage::Bondage {
        let t = Instant::now();
        if g.edge_count() == 0 {
            // Every vertex is isolated, so γR = n and nothing can be removed.
            report.bondage = Some(BondageField {
                status: BondageStatus::Undefined,
                value: None,
                witness: None,
                witness_indices: None,
                cap_used: 0,
            });
        } else {
            let cap = pipeline.cap.unwrap_or_else(|| roman_bondage::bondage::default_cap(g));
            let r = roman_bondage(g, cap).expect("graph has edges");
            exact = Some(r.clone());
            report.bondage = Some(bondage_field(g, r));
        }
        timings.bondage = Some(millis(t));

        let t = Instant::now();
        if let Ok(profile) = ctx.removal_profile() {
            let p = profile.partition();
            report.v_minus_size = Some(p.v_minus.len());
            report.v_zero_size = Some(p.v_zero.len());
            report.v_plus_size = Some(p.v_plus.len());
            report.vertex_critical = Some(p.v_minus.len() == n);
        }
        timings.impact = Some(millis(t));
    }

    if pipeline.stage >= Stage::Bounds {
        let t = Instant::now();
        let mut bounds = BTreeMap::new();
        let mut unsound = Vec::new();
        for eval in evaluate_all(&ctx) {
            let name = eval.theorem.as_str();
            if let Some(b) = &exact {
                if eval.is_sound_for(b) == Some(false) {
                    unsound.push(name);
                }
            }
            bounds.insert(name, eval);
        }
        report.bounds = Some(bounds);
        report.soundness_failures = Some(unsound);
        timings.bounds = Some(millis(t));
    }

    if !pipeline.checks.is_empty() {
        let t = Instant::now();
        let mut checks = BTreeMap::new();
        let mut violated = Vec::new();
        for &id in &pipeline.checks {
            let outcome = run_check(&ctx, id);
            if outcome.is_violated() {
                violated.push(id.as_str());
            }
            checks.insert(id.as_str(), outcome);
        }
        report.checks = Some(checks);
        report.violations = Some(violated);
        timings.checks = Some(millis(t));
    }

    report.timings_ms = timings;
    report
}

/// The CSV summary row for one report.
#[derive(Debug, Serialize)]
pub struct SummaryRow<'a> {
    pub id: &'a str,
    pub graph6: &'a str,
    pub n: usize,
    pub m: usize,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
    pub ad: Option<&'a str>,
    pub girth: String,
    pub gamma: usize,
    pub gamma_r: usize,
    pub bondage_status: Option<BondageStatus>,
    pub bondage_value: Option<usize>,
    pub v_minus_size: Option<usize>,
    pub v_zero_size: Option<usize>,
    pub v_plus_size: Option<usize>,
    pub soundness_failures: Option<usize>,
    pub violations: Option<usize>,
}

impl<'a> From<&'a GraphReport> for SummaryRow<'a> {
    fn from(r: &'a GraphReport) -> Self {
        SummaryRow {
            id: &r.id,
            graph6: &r.graph6,
            n: r.n,
            m: r.m,
            min_degree: r.min_degree,
            max_degree: r.max_degree,
            ad: r.ad.as_deref(),
            girth: match r.girth {
                GirthField::Finite(k) => k.to_string(),
                GirthField::Infinite(s) => s.to_string(),
            },
            gamma: r.gamma,
            gamma_r: r.gamma_r,
            bondage_status: r.bondage.as_ref().map(|b| b.status),
            bondage_value: r.bondage.as_ref().and_then(|b| b.value),
            v_minus_size: r.v_minus_size,
            v_zero_size: r.v_zero_size,
            v_plus_size: r.v_plus_size,
            soundness_failures: r.soundness_failures.as_ref().map(Vec::len),
            violations: r.violations.as_ref().map(Vec::len),
        }
    }
}
