//! Vertex-removal impact classes, the exact Roman bondage number, and the two
//! constructive edge-set strategies that certify upper bounds on it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::rdf::{gamma_r_exact, roman_function_at_most, RomanFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Impact {
    /// Removing the vertex lowers the Roman domination number.
    Minus,
    /// Removing the vertex leaves it unchanged.
    Zero,
    /// Removing the vertex raises it.
    Plus,
}

/// The partition of `V(G)` into `V-`, `V0`, `V+`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct VertexImpactPartition {
    pub v_minus: Vec<Vertex>,
    pub v_zero: Vec<Vertex>,
    pub v_plus: Vec<Vertex>,
}

/// `γR(G)` together with `γR(G - v)` for every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovalProfile {
    pub gamma_r: usize,
    pub after_removal: Vec<usize>,
}

impl RemovalProfile {
    pub fn compute(g: &Graph) -> Result<Self> {
        let gamma_r = gamma_r_exact(g).value;
        Self::with_gamma(g, gamma_r)
    }

    /// As [`compute`](Self::compute), reusing an already known `γR(G)`.
    pub fn with_gamma(g: &Graph, gamma_r: usize) -> Result<Self> {
        require_two(g)?;
        let after_removal = g
            .vertices()
            .map(|v| g.remove_vertex(v).map(|h| gamma_r_exact(&h).value))
            .collect::<Result<_>>()?;
        Ok(RemovalProfile { gamma_r, after_removal })
    }

    pub fn impact(&self, v: Vertex) -> Impact {
        use std::cmp::Ordering::*;
        match self.after_removal[v].cmp(&self.gamma_r) {
            Less => Impact::Minus,
            Equal => Impact::Zero,
            Greater => Impact::Plus,
        }
    }

    /// `γR(G - v) - γR(G)`.
    pub fn shift(&self, v: Vertex) -> i64 {
        self.after_removal[v] as i64 - self.gamma_r as i64
    }

    pub fn partition(&self) -> VertexImpactPartition {
        let mut p = VertexImpactPartition::default();
        for v in 0..self.after_removal.len() {
            match self.impact(v) {
                Impact::Minus => p.v_minus.push(v),
                Impact::Zero => p.v_zero.push(v),
                Impact::Plus => p.v_plus.push(v),
            }
        }
        p
    }
}

fn require_two(g: &Graph) -> Result<()> {
    if g.vertex_count() < 2 {
        return Err(Error::TooFewVertices {
            required: 2,
            actual: g.vertex_count(),
        });
    }
    Ok(())
}

pub fn classify_vertex(g: &Graph, v: Vertex) -> Result<Impact> {
    require_two(g)?;
    let base = gamma_r_exact(g).value;
    let after = gamma_r_exact(&g.remove_vertex(v)?).value;
    Ok(RemovalProfile {
        gamma_r: base,
        after_removal: vec![after],
    }
    .impact(0))
}

pub fn classify_all(g: &Graph) -> Result<VertexImpactPartition> {
    Ok(RemovalProfile::compute(g)?.partition())
}

/// Whether every vertex removal lowers `γR`.
pub fn is_roman_vertex_critical(g: &Graph) -> Result<bool> {
    let p = classify_all(g)?;
    Ok(p.v_minus.len() == g.vertex_count())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BondageStatus {
    /// The witness is a smallest edge set whose removal changes `γR`.
    Exact,
    /// No edge set of size `<= cap_used` changes `γR`; `value` is `cap_used + 1`.
    LowerBoundOnly,
    /// `γR(G) = |V(G)|`; no edge removal can change it.
    Undefined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BondageResult {
    pub status: BondageStatus,
    pub value: Option<usize>,
    pub witness: Option<Vec<Edge>>,
    pub cap_used: usize,
}

/// `3Δ - 3` when `Δ >= 2`, otherwise `|E|`.
pub fn default_cap(g: &Graph) -> usize {
    let max_degree = g.max_degree();
    if max_degree >= 2 {
        3 * max_degree - 3
    } else {
        g.edge_count()
    }
}

/// A known `γR`-function of `G`, with the number of 2-labeled neighbors of
/// each 0-labeled vertex, so that removing an edge set can be checked in
/// `O(|S|)`.
struct PooledFunction {
    labels: Vec<u8>,
    twos_nearby: Vec<u32>,
}

impl PooledFunction {
    fn new(g: &Graph, f: RomanFunction) -> Self {
        let labels = f.labels().to_vec();
        let twos_nearby = g
            .vertices()
            .map(|v| g.neighbors(v).iter().filter(|&&w| labels[w] == 2).count() as u32)
            .collect();
        PooledFunction { labels, twos_nearby }
    }

    /// Whether the function stays Roman dominating after removing `edges`.
    fn survives(&self, edges: &[Edge], scratch: &mut Vec<(Vertex, u32)>) -> bool {
        scratch.clear();
        for &(a, b) in edges {
            for (zero, two) in [(a, b), (b, a)] {
                if self.labels[zero] == 0 && self.labels[two] == 2 {
                    match scratch.iter_mut().find(|(v, _)| *v == zero) {
                        Some((_, lost)) => *lost += 1,
                        None => scratch.push((zero, 1)),
                    }
                }
            }
        }
        scratch.iter().all(|&(v, lost)| self.twos_nearby[v] > lost)
    }
}

/// Decides, for edge sets `S`, whether `γR(G - S) > γR(G)`.
///
/// Since `γR(G - S) >= γR(G)` always, `S` fails to raise the value exactly when
/// some `γR`-function of `G` survives in `G - S`. Functions found by the solver
/// are pooled and tried first on later queries.
pub struct RaiseTester<'a> {
    g: &'a Graph,
    gamma_r: usize,
    pool: Vec<PooledFunction>,
    scratch: Vec<(Vertex, u32)>,
    mask: Vec<bool>,
    pub solver_calls: u64,
}

impl<'a> RaiseTester<'a> {
    pub fn new(g: &'a Graph) -> Self {
        let best = gamma_r_exact(g);
        Self::with_function(g, best.value, best.witness)
    }

    pub fn with_function(g: &'a Graph, gamma_r: usize, f: RomanFunction) -> Self {
        RaiseTester {
            g,
            gamma_r,
            pool: vec![PooledFunction::new(g, f)],
            scratch: Vec::new(),
            mask: vec![false; g.edge_count()],
            solver_calls: 0,
        }
    }

    pub fn gamma_r(&self) -> usize {
        self.gamma_r
    }

    /// `removed` holds canonical edge indices.
    pub fn raises(&mut self, removed: &[usize]) -> bool {
        let edges: Vec<Edge> = removed.iter().map(|&i| self.g.edges()[i]).collect();
        for f in self.pool.iter().rev() {
            if f.survives(&edges, &mut self.scratch) {
                return false;
            }
        }
        for &i in removed {
            self.mask[i] = true;
        }
        let h = self.g.without_edge_mask(&self.mask);
        for &i in removed {
            self.mask[i] = false;
        }
        self.solver_calls += 1;
        match roman_function_at_most(&h, self.gamma_r) {
            Some(f) => {
                self.pool.push(PooledFunction::new(self.g, f));
                false
            }
            None => true,
        }
    }
}

/// Advances `idx` to the next `k`-combination of `0..m` in lexicographic order.
fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < m - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Exact Roman bondage number by exhaustive search over edge subsets of
/// increasing size (lexicographic within a size), up to `cap` edges.
pub fn roman_bondage(g: &Graph, cap: usize) -> Result<BondageResult> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let best = gamma_r_exact(g);
    let cap_used = cap.min(g.edge_count());
    if best.value == g.vertex_count() {
        return Ok(BondageResult {
            status: BondageStatus::Undefined,
            value: None,
            witness: None,
            cap_used,
        });
    }
    let mut tester = RaiseTester::with_function(g, best.value, best.witness);
    let m = g.edge_count();
    for k in 1..=cap_used {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            if tester.raises(&idx) {
                return Ok(BondageResult {
                    status: BondageStatus::Exact,
                    value: Some(k),
                    witness: Some(idx.iter().map(|&i| g.edges()[i]).collect()),
                    cap_used,
                });
            }
            if !next_combination(&mut idx, m) {
                break;
            }
        }
    }
    Ok(BondageResult {
        status: BondageStatus::LowerBoundOnly,
        value: Some(cap_used + 1),
        witness: None,
        cap_used,
    })
}

/// Edges whose removal raises `γR`, built from a vertex outside `V-`.
///
/// For `x` in `V0` this is every edge at `x`. For `x` in `V+` with
/// `p = γR(G - x) - γR(G)` it is the first `d(x) - p` edges at `x` in canonical
/// order.
pub fn witness_from_critical_vertex(g: &Graph, x: Vertex) -> Result<Vec<Edge>> {
    require_two(g)?;
    let base = gamma_r_exact(g).value;
    let after = gamma_r_exact(&g.remove_vertex(x)?).value;
    witness_from_shift(g, x, after as i64 - base as i64)
}

pub(crate) fn witness_from_shift(g: &Graph, x: Vertex, shift: i64) -> Result<Vec<Edge>> {
    if shift < 0 {
        return Err(Error::VertexInMinus(x));
    }
    let incident = g.incident_edges(x);
    let keep = (g.degree(x) as i64 - shift).max(0) as usize;
    Ok(incident.into_iter().take(keep).collect())
}

/// A vertex with three neighbors of degree at most 5, and every edge touching
/// those neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowNeighborWitness {
    pub center: Vertex,
    pub low: [Vertex; 3],
    pub edges: Vec<Edge>,
}

/// Finds the first vertex (by index) with three neighbors of degree `<= 5`,
/// takes its three smallest such neighbors and returns all their edges.
/// Isolating them forces weight 3 on them in `G - E1`, while in `G` a single
/// 2 on the center covers all three, so `γR(G - E1) > γR(G)`.
pub fn witness_three_low_neighbors(g: &Graph) -> Option<LowNeighborWitness> {
    g.vertices().find_map(|u| {
        let low: Vec<Vertex> = g.neighbors(u).iter().copied().filter(|&v| g.degree(v) <= 5).take(3).collect();
        let low: [Vertex; 3] = low.try_into().ok()?;
        let mut edges: Vec<Edge> = low.iter().flat_map(|&v| g.incident_edges(v)).collect();
        edges.sort_unstable();
        edges.dedup();
        Some(LowNeighborWitness { center: u, low, edges })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    CriticalVertex,
    ThreeLowNeighbors,
}

/// An edge set produced by one of the constructive strategies and confirmed by
/// an exact solve to raise `γR`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrategyWitness {
    pub strategy: Strategy,
    pub edges: Vec<Edge>,
    pub gamma_r_before: usize,
    pub gamma_r_after: usize,
}

/// Smallest verified edge set among the constructive strategies: every vertex
/// outside `V-` and the three-low-neighbors construction.
pub fn strategy_witness(g: &Graph) -> Result<Option<StrategyWitness>> {
    require_two(g)?;
    let profile = RemovalProfile::compute(g)?;
    let mut candidates: Vec<(Strategy, Vec<Edge>)> = Vec::new();
    for x in g.vertices() {
        if profile.impact(x) != Impact::Minus && g.degree(x) > 0 {
            candidates.push((Strategy::CriticalVertex, witness_from_shift(g, x, profile.shift(x))?));
        }
    }
    if let Some(w) = witness_three_low_neighbors(g) {
        candidates.push((Strategy::ThreeLowNeighbors, w.edges));
    }
    candidates.sort_by_key(|(_, e)| e.len());
    for (strategy, edges) in candidates {
        if edges.is_empty() {
            continue;
        }
        let after = gamma_r_exact(&g.remove_edges(&edges)?).value;
        if after > profile.gamma_r {
            return Ok(Some(StrategyWitness {
                strategy,
                edges,
                gamma_r_before: profile.gamma_r,
                gamma_r_after: after,
            }));
        }
    }
    Ok(None)
}
