//! Statement-level checks of the structural facts the bounds rest on. Each
//! check either holds (with a witness), is violated (with a counter-witness),
//! or does not apply to the graph at hand.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bondage::Impact;
use crate::bounds::{density_limit, rational_string, GraphContext};
use crate::error::{Error, Result};
use crate::graph::{EmbeddingInfo, Graph, Vertex};
use crate::rdf::oracle::all_minimum_labelings;
use crate::rdf::{gamma_r_constrained, gamma_r_exact, RomanFunction};

/// Order up to which plus-vertex checks also run over every optimal labeling.
pub const ALL_OPTIMA_LIMIT: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckId {
    /// `γR(G) <= γR(G - e) <= γR(G) + 1` for every edge.
    EdgeRemovalSandwich,
    /// Every `V+` vertex is labeled 2 by every optimum and has at least three
    /// 0-labeled private neighbors with respect to `V2`.
    PlusVertexStructure,
    /// `γR(G) - 1 <= γR(G - u)` for every vertex.
    VertexRemovalFloor,
    /// `γR(G - v) < γR(G)` iff some optimum labels `v` with 1.
    MinusIffLabelOne,
    /// Two vertices at distance 1 or 2 with degree sum at most `2 ad(G)`.
    LowDegreePair,
    /// `ad(G) <= (2k/(k-2))(1 - χ/n)` for girth `k`.
    GirthDensity,
    /// An edge with degree sum at most 11 when `δ >= 5` on a surface with `χ >= 0`.
    LightEdge,
}

impl CheckId {
    pub const ALL: [CheckId; 7] = [
        CheckId::EdgeRemovalSandwich,
        CheckId::PlusVertexStructure,
        CheckId::VertexRemovalFloor,
        CheckId::MinusIffLabelOne,
        CheckId::LowDegreePair,
        CheckId::GirthDensity,
        CheckId::LightEdge,
    ];

    /// The external name used on the command line and in reports.
    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::EdgeRemovalSandwich => "RV1_SANDWICH",
            CheckId::PlusVertexStructure => "VVV_I",
            CheckId::VertexRemovalFloor => "VVV_II",
            CheckId::MinusIffLabelOne => "VC",
            CheckId::LowDegreePair => "HRA_PAIR",
            CheckId::GirthDensity => "SGZ_AD",
            CheckId::LightEdge => "EDGE_SUM_11",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.trim().to_ascii_uppercase();
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str() == upper)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CheckWitness {
    None,
    Edge {
        u: Vertex,
        v: Vertex,
        gamma_r: usize,
        after: usize,
    },
    LightEdge {
        u: Vertex,
        v: Vertex,
        degree_sum: usize,
    },
    Vertex {
        vertex: Vertex,
        gamma_r: usize,
        after_removal: usize,
    },
    LabelOne {
        vertex: Vertex,
        gamma_r: usize,
        after_removal: usize,
        /// Optimum with `f(vertex) = 1`, absent when infeasible.
        constrained: Option<usize>,
    },
    PlusVertex {
        vertex: Vertex,
        labels: RomanFunction,
        private_zero_neighbors: usize,
    },
    Pair {
        u: Vertex,
        v: Vertex,
        distance: usize,
        degree_sum: usize,
        average_degree: String,
    },
    Density {
        girth: usize,
        chi: i64,
        average_degree: String,
        limit: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CheckOutcome {
    Holds { witness: CheckWitness },
    Violated { witness: CheckWitness },
    Inapplicable { reason: String },
}

impl CheckOutcome {
    pub fn is_violated(&self) -> bool {
        matches!(self, CheckOutcome::Violated { .. })
    }

    pub fn holds(&self) -> bool {
        matches!(self, CheckOutcome::Holds { .. })
    }

    fn inapplicable(reason: &str) -> Self {
        CheckOutcome::Inapplicable { reason: reason.into() }
    }
}

/// Runs one check on `g` with optional surface metadata.
pub fn theorem_check(g: &Graph, emb: Option<&EmbeddingInfo>, check: CheckId) -> CheckOutcome {
    run_check(&GraphContext::new(g, emb.copied()), check)
}

/// Runs one check, reusing the solver results cached in `ctx`.
pub fn run_check(ctx: &GraphContext<'_>, check: CheckId) -> CheckOutcome {
    match check {
        CheckId::EdgeRemovalSandwich => edge_removal_sandwich(ctx),
        CheckId::PlusVertexStructure => plus_vertex_structure(ctx),
        CheckId::VertexRemovalFloor => vertex_removal_floor(ctx),
        CheckId::MinusIffLabelOne => minus_iff_label_one(ctx),
        CheckId::LowDegreePair => low_degree_pair(ctx),
        CheckId::GirthDensity => girth_density(ctx),
        CheckId::LightEdge => light_edge(ctx),
    }
}

fn edge_removal_sandwich(ctx: &GraphContext<'_>) -> CheckOutcome {
    let g = ctx.graph;
    if g.edge_count() == 0 {
        return CheckOutcome::inapplicable("edgeless");
    }
    let base = ctx.gamma_r().value;
    for &(u, v) in g.edges() {
        let after = gamma_r_exact(&g.remove_edges(&[(u, v)]).expect("edge of g")).value;
        let witness = CheckWitness::Edge {
            u,
            v,
            gamma_r: base,
            after,
        };
        if after < base || after > base + 1 {
            return CheckOutcome::Violated { witness };
        }
    }
    CheckOutcome::Holds {
        witness: CheckWitness::None,
    }
}

fn private_zero_neighbors(g: &Graph, v: Vertex, f: &RomanFunction) -> usize {
    let twos = f.class(2);
    if !twos.contains(&v) {
        return 0;
    }
    g.private_neighbors(v, &twos)
        .expect("v is in V2")
        .into_iter()
        .filter(|&y| f.label(y) == 0)
        .count()
}

fn plus_vertex_structure(ctx: &GraphContext<'_>) -> CheckOutcome {
    let g = ctx.graph;
    let Ok(profile) = ctx.removal_profile() else {
        return CheckOutcome::inapplicable("fewer_than_two_vertices");
    };
    let plus: Vec<Vertex> = g.vertices().filter(|&v| profile.impact(v) == Impact::Plus).collect();
    if plus.is_empty() {
        return CheckOutcome::Holds {
            witness: CheckWitness::None,
        };
    }
    let mut optima = vec![ctx.gamma_r().witness.clone()];
    if g.vertex_count() <= ALL_OPTIMA_LIMIT {
        optima.extend(all_minimum_labelings(g).expect("within oracle limit"));
    }
    for &v in &plus {
        for f in &optima {
            let count = private_zero_neighbors(g, v, f);
            if f.label(v) != 2 || count < 3 {
                return CheckOutcome::Violated {
                    witness: CheckWitness::PlusVertex {
                        vertex: v,
                        labels: f.clone(),
                        private_zero_neighbors: count,
                    },
                };
            }
        }
    }
    let f = &optima[0];
    CheckOutcome::Holds {
        witness: CheckWitness::PlusVertex {
            vertex: plus[0],
            labels: f.clone(),
            private_zero_neighbors: private_zero_neighbors(g, plus[0], f),
        },
    }
}

fn vertex_removal_floor(ctx: &GraphContext<'_>) -> CheckOutcome {
    let Ok(profile) = ctx.removal_profile() else {
        return CheckOutcome::inapplicable("fewer_than_two_vertices");
    };
    for (u, &after) in profile.after_removal.iter().enumerate() {
        if after + 1 < profile.gamma_r {
            return CheckOutcome::Violated {
                witness: CheckWitness::Vertex {
                    vertex: u,
                    gamma_r: profile.gamma_r,
                    after_removal: after,
                },
            };
        }
    }
    CheckOutcome::Holds {
        witness: CheckWitness::None,
    }
}

fn minus_iff_label_one(ctx: &GraphContext<'_>) -> CheckOutcome {
    let g = ctx.graph;
    let Ok(profile) = ctx.removal_profile() else {
        return CheckOutcome::inapplicable("fewer_than_two_vertices");
    };
    for v in g.vertices() {
        let constrained = gamma_r_constrained(g, v, 1).expect("valid vertex").value();
        let has_label_one = constrained == Some(profile.gamma_r);
        if (profile.impact(v) == Impact::Minus) != has_label_one {
            return CheckOutcome::Violated {
                witness: CheckWitness::LabelOne {
                    vertex: v,
                    gamma_r: profile.gamma_r,
                    after_removal: profile.after_removal[v],
                    constrained,
                },
            };
        }
    }
    CheckOutcome::Holds {
        witness: CheckWitness::None,
    }
}

fn low_degree_pair(ctx: &GraphContext<'_>) -> CheckOutcome {
    let g = ctx.graph;
    if g.vertex_count() < 2 {
        return CheckOutcome::inapplicable("trivial_graph");
    }
    if !ctx.is_connected() {
        return CheckOutcome::inapplicable("disconnected");
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let ad = g.average_degree().expect("nonempty");
    for u in g.vertices() {
        let dist = g.distances_from(u);
        for v in u + 1..n {
            let Some(d) = dist[v].filter(|&d| d <= 2) else {
                continue;
            };
            let sum = g.degree(u) + g.degree(v);
            // sum <= 2 * (2m / n)
            if sum * n <= 4 * m {
                return CheckOutcome::Holds {
                    witness: CheckWitness::Pair {
                        u,
                        v,
                        distance: d,
                        degree_sum: sum,
                        average_degree: rational_string(&ad),
                    },
                };
            }
        }
    }
    CheckOutcome::Violated {
        witness: CheckWitness::None,
    }
}

fn girth_density(ctx: &GraphContext<'_>) -> CheckOutcome {
    let g = ctx.graph;
    if g.vertex_count() == 0 || !ctx.is_connected() {
        return CheckOutcome::inapplicable("disconnected");
    }
    let Some(k) = g.girth().finite() else {
        return CheckOutcome::inapplicable("forest");
    };
    let Some(chi) = ctx.declared_chi() else {
        return CheckOutcome::inapplicable("chi_undeclared");
    };
    let ad = g.average_degree().expect("nonempty");
    let limit = density_limit(k, chi, g.vertex_count());
    let witness = CheckWitness::Density {
        girth: k,
        chi,
        average_degree: rational_string(&ad),
        limit: rational_string(&limit),
    };
    if ad <= limit {
        CheckOutcome::Holds { witness }
    } else {
        CheckOutcome::Violated { witness }
    }
}

fn light_edge(ctx: &GraphContext<'_>) -> CheckOutcome {
    let g = ctx.graph;
    if g.vertex_count() == 0 || !ctx.is_connected() {
        return CheckOutcome::inapplicable("disconnected");
    }
    if g.min_degree() < 5 {
        return CheckOutcome::inapplicable("min_degree_below_five");
    }
    let Some(chi) = ctx.declared_chi() else {
        return CheckOutcome::inapplicable("chi_undeclared");
    };
    if chi < 0 {
        return CheckOutcome::inapplicable("negative_chi");
    }
    if chi == 0 && g.max_degree() < 7 {
        return CheckOutcome::inapplicable("zero_chi_needs_max_degree_seven");
    }
    match g.edges().iter().find(|&&(u, v)| g.degree(u) + g.degree(v) <= 11) {
        Some(&(u, v)) => CheckOutcome::Holds {
            witness: CheckWitness::LightEdge {
                u,
                v,
                degree_sum: g.degree(u) + g.degree(v),
            },
        },
        None => CheckOutcome::Violated {
            witness: CheckWitness::None,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::Family;

    fn fam(s: &str) -> (Graph, EmbeddingInfo) {
        s.parse::<Family>().unwrap().build()
    }

    #[test]
    fn check_names_round_trip() {
        for c in CheckId::ALL {
            assert_eq!(c.as_str().parse::<CheckId>().unwrap(), c);
        }
        assert_eq!("vc".parse::<CheckId>().unwrap(), CheckId::MinusIffLabelOne);
        assert_eq!("NOPE".parse::<CheckId>(), Err(Error::UnknownCheck("NOPE".into())));
    }

    #[test]
    fn sandwich_on_c5() {
        let (c5, _) = fam("cycle:5");
        assert!(theorem_check(&c5, None, CheckId::EdgeRemovalSandwich).holds());
    }

    #[test]
    fn pair_on_p4() {
        let (p4, _) = fam("path:4");
        match theorem_check(&p4, None, CheckId::LowDegreePair) {
            CheckOutcome::Holds {
                witness: CheckWitness::Pair { degree_sum, .. },
            } => assert!(degree_sum <= 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn icosahedron_checks() {
        let (ico, emb) = fam("icosahedron");
        match theorem_check(&ico, Some(&emb), CheckId::LightEdge) {
            CheckOutcome::Holds {
                witness: CheckWitness::LightEdge { degree_sum, .. },
            } => assert_eq!(degree_sum, 10),
            other => panic!("unexpected {other:?}"),
        }
        match theorem_check(&ico, Some(&emb), CheckId::GirthDensity) {
            CheckOutcome::Holds {
                witness: CheckWitness::Density { average_degree, limit, .. },
            } => {
                assert_eq!(average_degree, "5/1");
                assert_eq!(limit, "5/1");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn inapplicable_verdicts() {
        let (c5, emb) = fam("cycle:5");
        assert!(matches!(
            theorem_check(&c5, Some(&emb), CheckId::LightEdge),
            CheckOutcome::Inapplicable { .. }
        ));
        assert!(matches!(
            theorem_check(&c5, None, CheckId::GirthDensity),
            CheckOutcome::Inapplicable { .. }
        ));
        let k1 = Graph::empty(1);
        for c in CheckId::ALL {
            assert!(matches!(theorem_check(&k1, None, c), CheckOutcome::Inapplicable { .. }), "{c}");
        }
    }

    #[test]
    fn vertex_checks_on_small_families() {
        for name in ["path:5", "cycle:6", "star:4", "complete:4", "grid:2,3"] {
            let (g, emb) = fam(name);
            for c in [CheckId::PlusVertexStructure, CheckId::VertexRemovalFloor, CheckId::MinusIffLabelOne] {
                assert!(theorem_check(&g, Some(&emb), c).holds(), "{name} {c}");
            }
        }
    }
}
