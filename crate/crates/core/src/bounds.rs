//! Upper bounds on the Roman bondage number, each reported with an
//! applicability verdict, an exact rational value and the structure that
//! attains it.

use std::cell::OnceCell;

use num_integer::Roots;
use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::bondage::{BondageResult, BondageStatus, Impact, RemovalProfile};
use crate::error::{Error, Result};
use crate::graph::{EmbeddingInfo, Graph, Vertex};
use crate::rdf::{gamma_r_exact, RomanFunction, SolveResult};

pub mod checks;

pub use checks::{theorem_check, CheckId, CheckOutcome, CheckWitness};

pub type Rational = Ratio<i64>;

/// Serializes a rational as `"p/q"` (always with a denominator).
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub(crate) fn ser_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(r))
}

pub(crate) fn ser_opt_rational<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&rational_string(r)),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// `d(x) + d(y) + d(z) - 3 - |N(x) ∩ N(y)|` over paths `x y z`.
    LengthTwoPath,
    /// `min d(u) - γR(G - u) + γR(G)` over `u` outside `V-`.
    CriticalVertex,
    /// `2 ad(G) + Δ(G) - 3`.
    AverageDegree,
    /// `(4k/(k-2))(1 - χ/n) + Δ - 3`, with `-12χ/n + Δ + 9` alongside.
    GirthEuler,
    /// The constant 15 on surfaces with `χ >= 0`.
    NonnegativeSurface,
}

impl BoundKind {
    pub const ALL: [BoundKind; 5] = [
        BoundKind::LengthTwoPath,
        BoundKind::CriticalVertex,
        BoundKind::AverageDegree,
        BoundKind::GirthEuler,
        BoundKind::NonnegativeSurface,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::LengthTwoPath => "length_two_path",
            BoundKind::CriticalVertex => "critical_vertex",
            BoundKind::AverageDegree => "average_degree",
            BoundKind::GirthEuler => "girth_euler",
            BoundKind::NonnegativeSurface => "nonnegative_surface",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundWitness {
    None,
    Path {
        x: Vertex,
        y: Vertex,
        z: Vertex,
        common_neighbors: usize,
    },
    Vertex {
        vertex: Vertex,
        degree: usize,
        shift: i64,
        /// Whether the bound is at most `Δ(G)`.
        within_max_degree: bool,
    },
    GirthEuler {
        girth: usize,
        chi: i64,
        #[serde(serialize_with = "ser_rational")]
        relaxed: Rational,
        /// Whether `ad(G) <= (2k/(k-2))(1 - χ/n)` holds for the declared χ.
        density_premise_holds: bool,
        #[serde(serialize_with = "ser_rational")]
        density_limit: Rational,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEvaluation {
    pub theorem: BoundKind,
    pub applicable: bool,
    /// `"applicable"` or a machine-readable reason it is not.
    pub reason: String,
    #[serde(serialize_with = "ser_opt_rational")]
    pub bound_value: Option<Rational>,
    pub witness: BoundWitness,
    pub exact_b_r: Option<BondageResult>,
}

impl BoundEvaluation {
    fn applicable(theorem: BoundKind, value: Rational, witness: BoundWitness) -> Self {
        BoundEvaluation {
            theorem,
            applicable: true,
            reason: "applicable".into(),
            bound_value: Some(value),
            witness,
            exact_b_r: None,
        }
    }

    fn inapplicable(theorem: BoundKind, reason: &str) -> Self {
        BoundEvaluation {
            theorem,
            applicable: false,
            reason: reason.into(),
            bound_value: None,
            witness: BoundWitness::None,
            exact_b_r: None,
        }
    }

    /// `Some(b_R <= bound)` when the bound applies and `b_R` is known exactly.
    pub fn is_sound_for(&self, bondage: &BondageResult) -> Option<bool> {
        let bound = self.bound_value?;
        if !self.applicable || bondage.status != BondageStatus::Exact {
            return None;
        }
        let exact = bondage.value? as i64;
        Some(Rational::from_integer(exact) <= bound)
    }

    pub fn with_exact(mut self, bondage: &BondageResult) -> Self {
        self.exact_b_r = Some(bondage.clone());
        self
    }
}

/// Lazily computed solver results shared by the bounds and checks of one graph.
pub struct GraphContext<'a> {
    pub graph: &'a Graph,
    pub embedding: Option<EmbeddingInfo>,
    best: OnceCell<SolveResult<RomanFunction>>,
    profile: OnceCell<Result<RemovalProfile>>,
    connected: OnceCell<bool>,
}

impl<'a> GraphContext<'a> {
    pub fn new(graph: &'a Graph, embedding: Option<EmbeddingInfo>) -> Self {
        GraphContext {
            graph,
            embedding,
            best: OnceCell::new(),
            profile: OnceCell::new(),
            connected: OnceCell::new(),
        }
    }

    pub fn gamma_r(&self) -> &SolveResult<RomanFunction> {
        self.best.get_or_init(|| gamma_r_exact(self.graph))
    }

    /// Seeds the cache with an already computed optimum.
    pub fn set_gamma_r(&self, result: SolveResult<RomanFunction>) {
        let _ = self.best.set(result);
    }

    pub fn removal_profile(&self) -> Result<&RemovalProfile> {
        self.profile
            .get_or_init(|| RemovalProfile::with_gamma(self.graph, self.gamma_r().value))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn is_connected(&self) -> bool {
        *self
            .connected
            .get_or_init(|| self.graph.vertex_count() > 0 && self.graph.is_connected().unwrap_or(false))
    }

    fn declared_chi(&self) -> Option<i64> {
        self.embedding.and_then(|e| e.chi)
    }
}

fn common_neighbors(g: &Graph, a: Vertex, b: Vertex) -> usize {
    let (na, nb) = (g.neighbors(a), g.neighbors(b));
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < na.len() && j < nb.len() {
        match na[i].cmp(&nb[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Minimum of `d(x) + d(y) + d(z) - 3 - |N(x) ∩ N(y)|` over every path `x y z`.
///
/// Each unordered path is tried in both directions, since the intersection
/// term depends on which end plays `x`.
pub fn bound_path(g: &Graph) -> BoundEvaluation {
    let mut best: Option<(i64, BoundWitness)> = None;
    for (a, y, c) in g.length2_paths() {
        for (x, z) in [(a, c), (c, a)] {
            let common = common_neighbors(g, x, y);
            let value = (g.degree(x) + g.degree(y) + g.degree(z)) as i64 - 3 - common as i64;
            if best.as_ref().is_none_or(|(b, _)| value < *b) {
                best = Some((
                    value,
                    BoundWitness::Path {
                        x,
                        y,
                        z,
                        common_neighbors: common,
                    },
                ));
            }
        }
    }
    match best {
        Some((value, witness)) => BoundEvaluation::applicable(BoundKind::LengthTwoPath, Rational::from_integer(value), witness),
        None => BoundEvaluation::inapplicable(BoundKind::LengthTwoPath, "no_path_of_length_two"),
    }
}

/// `min { d(u) - γR(G - u) + γR(G) : u ∉ V- }` for connected `G`.
pub fn bound_critical_vertex(g: &Graph) -> BoundEvaluation {
    bound_critical_vertex_in(&GraphContext::new(g, None))
}

pub fn bound_critical_vertex_in(ctx: &GraphContext<'_>) -> BoundEvaluation {
    let g = ctx.graph;
    let kind = BoundKind::CriticalVertex;
    if g.vertex_count() < 2 {
        return BoundEvaluation::inapplicable(kind, "fewer_than_two_vertices");
    }
    if !ctx.is_connected() {
        return BoundEvaluation::inapplicable(kind, "disconnected");
    }
    let profile = match ctx.removal_profile() {
        Ok(p) => p,
        Err(_) => return BoundEvaluation::inapplicable(kind, "fewer_than_two_vertices"),
    };
    let best = g
        .vertices()
        .filter(|&u| profile.impact(u) != Impact::Minus)
        .map(|u| (g.degree(u) as i64 - profile.shift(u), u))
        .min();
    match best {
        None => BoundEvaluation::inapplicable(kind, "roman_vertex_critical"),
        Some((value, u)) => BoundEvaluation::applicable(
            kind,
            Rational::from_integer(value),
            BoundWitness::Vertex {
                vertex: u,
                degree: g.degree(u),
                shift: profile.shift(u),
                within_max_degree: value <= g.max_degree() as i64,
            },
        ),
    }
}

fn connected_with_degree_two(g: &Graph, kind: BoundKind) -> std::result::Result<(), BoundEvaluation> {
    if g.vertex_count() == 0 || !g.is_connected().unwrap_or(false) {
        return Err(BoundEvaluation::inapplicable(kind, "disconnected"));
    }
    if g.max_degree() < 2 {
        return Err(BoundEvaluation::inapplicable(kind, "max_degree_below_two"));
    }
    Ok(())
}

/// `2 ad(G) + Δ(G) - 3` for connected `G` with `Δ >= 2`.
pub fn bound_avg_degree(g: &Graph) -> BoundEvaluation {
    let kind = BoundKind::AverageDegree;
    if let Err(e) = connected_with_degree_two(g, kind) {
        return e;
    }
    let ad = g.average_degree().expect("nonempty");
    let value = ad * 2 + Rational::from_integer(g.max_degree() as i64 - 3);
    BoundEvaluation::applicable(kind, value, BoundWitness::None)
}

/// `(2k/(k-2))(1 - χ/n)`, the average-degree ceiling for girth `k`.
pub fn density_limit(girth: usize, chi: i64, n: usize) -> Rational {
    let k = girth as i64;
    Rational::new(2 * k, k - 2) * (Rational::from_integer(1) - Rational::new(chi, n as i64))
}

/// The girth and Euler characteristic bound and its relaxation.
pub fn bound_girth_euler(g: &Graph, emb: &EmbeddingInfo) -> BoundEvaluation {
    let kind = BoundKind::GirthEuler;
    if let Err(e) = connected_with_degree_two(g, kind) {
        return e;
    }
    let Some(k) = g.girth().finite() else {
        return BoundEvaluation::inapplicable(kind, "forest");
    };
    let Some(chi) = emb.chi else {
        return BoundEvaluation::inapplicable(kind, "chi_undeclared");
    };
    let n = g.vertex_count() as i64;
    let max_degree = g.max_degree() as i64;
    let limit = density_limit(k, chi, g.vertex_count());
    let first = limit * 2 + Rational::from_integer(max_degree - 3);
    let relaxed = Rational::new(-12 * chi, n) + Rational::from_integer(max_degree + 9);
    let ad = g.average_degree().expect("nonempty");
    BoundEvaluation::applicable(
        kind,
        first,
        BoundWitness::GirthEuler {
            girth: k,
            chi,
            relaxed,
            density_premise_holds: ad <= limit,
            density_limit: limit,
        },
    )
}

/// The constant bound 15 for connected graphs with `Δ >= 2` on a surface of
/// nonnegative Euler characteristic.
pub fn bound_surface15(g: &Graph, emb: &EmbeddingInfo) -> BoundEvaluation {
    let kind = BoundKind::NonnegativeSurface;
    if let Err(e) = connected_with_degree_two(g, kind) {
        return e;
    }
    match emb.chi {
        None => BoundEvaluation::inapplicable(kind, "chi_undeclared"),
        Some(chi) if chi < 0 => BoundEvaluation::inapplicable(kind, "negative_chi"),
        Some(_) => BoundEvaluation::applicable(kind, Rational::from_integer(15), BoundWitness::None),
    }
}

/// `floor((5 + sqrt(49 - 24χ)) / 2)` for `χ <= 1`, in integer arithmetic.
///
/// With `s = floor(sqrt(D))`, `floor((5 + sqrt(D)) / 2) = floor((5 + s) / 2)`.
pub fn delta_max_bound(chi: i64) -> Result<i64> {
    if chi > 1 {
        return Err(Error::ChiOutOfRange(chi));
    }
    let discriminant = 49 - 24 * chi;
    Ok((5 + discriminant.sqrt()) / 2)
}

/// Every bound for one graph, in [`BoundKind::ALL`] order.
pub fn evaluate_all(ctx: &GraphContext<'_>) -> Vec<BoundEvaluation> {
    let emb = ctx.embedding.unwrap_or_default();
    vec![
        bound_path(ctx.graph),
        bound_critical_vertex_in(ctx),
        bound_avg_degree(ctx.graph),
        bound_girth_euler(ctx.graph, &emb),
        bound_surface15(ctx.graph, &emb),
    ]
}
