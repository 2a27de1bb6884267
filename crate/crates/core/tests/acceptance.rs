//! Acceptance suite. Every criterion is an exact integer or set comparison;
//! there are no tolerances to tune. Prints one PASS/FAIL line per criterion
//! and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use rayon::prelude::*;
use roman_bondage::bondage::{classify_all, default_cap, roman_bondage, strategy_witness, BondageStatus};
use roman_bondage::bounds::checks::run_check;
use roman_bondage::bounds::{
    bound_avg_degree, bound_critical_vertex_in, bound_path, bound_surface15, delta_max_bound, theorem_check, CheckId,
    CheckOutcome, GraphContext,
};
use roman_bondage::io::{hat_construction, parse_graph6, write_graph6, Family};
use roman_bondage::rdf::{gamma_exact, gamma_r_exact, gamma_r_oracle};
use roman_bondage::{enumerate_small_graphs, Graph};

/// Exhaustive sweeps cover every connected labeled graph up to this order.
const SWEEP_MAX_N: usize = 6;
/// Constant bound on surfaces with nonnegative Euler characteristic.
const SURFACE_BOUND: usize = 15;

fn connected_corpus() -> Vec<Graph> {
    (1..=SWEEP_MAX_N)
        .flat_map(|n| enumerate_small_graphs(n, true).unwrap())
        .collect()
}

fn fam(s: &str) -> (Graph, roman_bondage::EmbeddingInfo) {
    s.parse::<Family>().unwrap().build()
}

/// The base graphs for the path-attachment checks.
fn hat_bases() -> Vec<(&'static str, Graph)> {
    ["path:2", "path:3", "cycle:3", "star:3", "cycle:4", "complete:4"]
        .into_iter()
        .map(|s| (s, fam(s).0))
        .collect()
}

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn oracle_equivalence(corpus: &[Graph]) -> Outcome {
    let bad: Vec<&Graph> = corpus
        .par_iter()
        .filter(|g| gamma_r_exact(g).value != gamma_r_oracle(g).unwrap())
        .collect();
    if bad.is_empty() {
        Ok(format!("{} graphs, exact == oracle", corpus.len()))
    } else {
        Err(format!("{} mismatches, first {:?}", bad.len(), bad[0]))
    }
}

fn check_everywhere(corpus: &[Graph], check: CheckId, min_n: usize) -> Outcome {
    let results: Vec<Option<String>> = corpus
        .par_iter()
        .filter(|g| g.vertex_count() >= min_n)
        .map(|g| match theorem_check(g, None, check) {
            CheckOutcome::Holds { .. } => None,
            other => Some(format!("{g:?}: {other:?}")),
        })
        .collect();
    let checked = results.len();
    match results.into_iter().flatten().next() {
        None => Ok(format!("{check} holds on {checked} graphs")),
        Some(e) => Err(e),
    }
}

fn hat_lemma() -> Outcome {
    let mut lines = Vec::new();
    for (name, g) in hat_bases() {
        let n = g.vertex_count();
        let delta = g.min_degree();
        let hat = hat_construction(&g).unwrap();
        let gamma = gamma_exact(&hat).value;
        let gamma_r = gamma_r_exact(&hat).value;
        let b = roman_bondage(&hat, delta + 2).unwrap();
        if gamma != 2 * n || gamma_r != 4 * n {
            return Err(format!("{name}: gamma={gamma} gamma_r={gamma_r}, n={n}"));
        }
        if b.status != BondageStatus::Exact || b.value != Some(delta + 2) {
            return Err(format!("{name}: bondage {b:?}, expected exact {}", delta + 2));
        }
        let w = b.witness.unwrap();
        let after = gamma_r_exact(&hat.remove_edges(&w).unwrap()).value;
        if after <= gamma_r {
            return Err(format!("{name}: witness does not raise gamma_r"));
        }
        lines.push(format!("{name}:b_R={}", delta + 2));
    }
    Ok(lines.join(" "))
}

fn hat_classification() -> Outcome {
    for (name, g) in hat_bases() {
        let n = g.vertex_count();
        let hat = hat_construction(&g).unwrap();
        let p = classify_all(&hat).unwrap();
        let originals: Vec<usize> = p.v_zero.iter().copied().filter(|&v| v < n).collect();
        if !p.v_plus.is_empty() || originals != (0..n).collect::<Vec<_>>() {
            return Err(format!("{name}: v_plus={:?} v_zero∩V(G)={originals:?}", p.v_plus));
        }
    }
    Ok("V+ empty and V(G) ⊆ V0 for all six bases".into())
}

fn soundness_sweep(corpus: &[Graph]) -> Outcome {
    let failures: Vec<String> = corpus
        .par_iter()
        .filter(|g| g.max_degree() >= 2)
        .filter_map(|g| {
            let b = roman_bondage(g, default_cap(g)).unwrap();
            if b.status != BondageStatus::Exact {
                return Some(format!("{g:?}: status {:?}", b.status));
            }
            let ctx = GraphContext::new(g, None);
            let critical = bound_critical_vertex_in(&ctx);
            for eval in [bound_path(g), critical.clone(), bound_avg_degree(g)] {
                if eval.is_sound_for(&b) == Some(false) {
                    return Some(format!("{g:?}: b_R={:?} exceeds {:?}", b.value, eval));
                }
            }
            if let Some(v) = critical.bound_value {
                if v > roman_bondage::bounds::Rational::from_integer(g.max_degree() as i64) {
                    return Some(format!("{g:?}: critical-vertex bound above max degree"));
                }
            }
            None
        })
        .collect();
    match failures.first() {
        None => Ok(format!(
            "{} graphs with max degree >= 2, zero violations",
            corpus.iter().filter(|g| g.max_degree() >= 2).count()
        )),
        Some(e) => Err(format!("{} failures, first {e}", failures.len())),
    }
}

fn planar_corpus() -> Vec<String> {
    let mut names = Vec::new();
    for n in 3..=10 {
        names.push(format!("path:{n}"));
        names.push(format!("cycle:{n}"));
    }
    for a in 1..=4 {
        for b in a..=4 {
            if a * b >= 3 {
                names.push(format!("grid:{a},{b}"));
            }
        }
    }
    for k in 2..=8 {
        names.push(format!("star:{k}"));
    }
    names.push("icosahedron".into());
    names.push("toroidal_grid:3,3".into());
    names
}

fn surface_bound() -> Outcome {
    let results: Vec<Result<(String, String), String>> = planar_corpus()
        .par_iter()
        .map(|name| {
            let (g, emb) = fam(name);
            let bound = bound_surface15(&g, &emb);
            if !bound.applicable {
                return Err(format!("{name}: bound inapplicable ({})", bound.reason));
            }
            let b = roman_bondage(&g, SURFACE_BOUND).unwrap();
            match b.status {
                BondageStatus::Exact if b.value.unwrap() <= SURFACE_BOUND => Ok((name.clone(), format!("{}", b.value.unwrap()))),
                BondageStatus::LowerBoundOnly => match strategy_witness(&g).unwrap() {
                    Some(w) if w.edges.len() <= SURFACE_BOUND => Ok((name.clone(), format!("<={}", w.edges.len()))),
                    other => Err(format!("{name}: no witness within {SURFACE_BOUND}: {other:?}")),
                },
                _ => Err(format!("{name}: {b:?}")),
            }
        })
        .collect();
    let mut summary = Vec::new();
    for r in results {
        let (name, v) = r?;
        summary.push(format!("{name}={v}"));
    }
    Ok(summary.join(" "))
}

fn label_one_equivalence(corpus: &[Graph]) -> Outcome {
    let bad: Vec<String> = corpus
        .par_iter()
        .filter(|g| g.vertex_count() >= 2)
        .filter_map(|g| {
            let ctx = GraphContext::new(g, None);
            match run_check(&ctx, CheckId::MinusIffLabelOne) {
                CheckOutcome::Holds { .. } => None,
                other => Some(format!("{g:?}: {other:?}")),
            }
        })
        .collect();
    let vertices: usize = corpus.iter().filter(|g| g.vertex_count() >= 2).map(|g| g.vertex_count()).sum();
    match bad.first() {
        None => Ok(format!("{vertices} vertices checked")),
        Some(e) => Err(e.clone()),
    }
}

fn surface_constants() -> Outcome {
    let one = delta_max_bound(1).unwrap();
    let zero = delta_max_bound(0).unwrap();
    if (one, zero) == (5, 6) {
        Ok("chi=1 -> 5, chi=0 -> 6".into())
    } else {
        Err(format!("chi=1 -> {one}, chi=0 -> {zero}"))
    }
}

fn graph6_round_trip() -> Outcome {
    let mut count = 0usize;
    for n in 1..=SWEEP_MAX_N {
        for g in enumerate_small_graphs(n, false).unwrap() {
            let bytes = write_graph6(&g).unwrap();
            let back = parse_graph6(&bytes).map_err(|e| e.to_string())?;
            if back != g || write_graph6(&back).unwrap() != bytes {
                return Err(format!("round trip failed for {g:?}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} graphs byte-identical"))
}

fn light_edge_icosahedron() -> Outcome {
    let (g, emb) = fam("icosahedron");
    if g.min_degree() != 5 || emb.chi != Some(2) {
        return Err("icosahedron metadata unexpected".into());
    }
    match theorem_check(&g, Some(&emb), CheckId::LightEdge) {
        CheckOutcome::Holds { witness } => Ok(format!("{witness:?}")),
        other => Err(format!("{other:?}")),
    }
}

fn main() -> ExitCode {
    let corpus = connected_corpus();
    let criteria: Vec<Criterion<'_>> = vec![
        ("AC1 exact solver equals 3^n oracle (connected n<=6)", Box::new(|| oracle_equivalence(&corpus))),
        (
            "AC2 edge-removal sandwich (connected n in 2..=6)",
            Box::new(|| check_everywhere(&corpus, CheckId::EdgeRemovalSandwich, 2)),
        ),
        ("AC3 hat graphs: gamma=2n, gamma_R=4n, b_R=delta+2", Box::new(hat_lemma)),
        ("AC4 hat graphs: V+ empty, V(G) = V0 on originals", Box::new(hat_classification)),
        ("AC5 bound soundness sweep (connected n<=6, max degree>=2)", Box::new(|| soundness_sweep(&corpus))),
        ("AC6 b_R <= 15 on planar and toroidal corpus", Box::new(surface_bound)),
        ("AC7 V- iff optimum with label 1 (connected n<=6)", Box::new(|| label_one_equivalence(&corpus))),
        (
            "AC8 low-degree pair at distance <= 2 (connected n in 2..=6)",
            Box::new(|| check_everywhere(&corpus, CheckId::LowDegreePair, 2)),
        ),
        ("AC9 max-min-degree constants for chi=1 and chi=0", Box::new(surface_constants)),
        ("AC10 graph6 round trip (all graphs n<=6)", Box::new(graph6_round_trip)),
        ("AC11 light edge on the icosahedron", Box::new(light_edge_icosahedron)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {name} [{secs:.1}s] {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name} [{secs:.1}s] {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
