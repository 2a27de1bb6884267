//! Named graph families and the five-vertex-path attachment construction.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Edge, EmbeddingInfo, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,k}` with the center at index 0.
    Star(usize),
    Grid(usize, usize),
    ToroidalGrid(usize, usize),
    Icosahedron,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Star(k) => write!(f, "star:{k}"),
            Family::Grid(a, b) => write!(f, "grid:{a},{b}"),
            Family::ToroidalGrid(a, b) => write!(f, "toroidal_grid:{a},{b}"),
            Family::Icosahedron => f.write_str("icosahedron"),
        }
    }
}

fn invalid(family: &str, message: impl Into<String>) -> Error {
    Error::InvalidParams {
        family: family.to_string(),
        message: message.into(),
    }
}

impl Family {
    /// Builds a family from its name and integer parameters.
    pub fn from_parts(name: &str, params: &[usize]) -> Result<Self> {
        let arity = |k: usize| -> Result<()> {
            if params.len() != k {
                return Err(invalid(name, format!("expected {k} parameter(s), got {}", params.len())));
            }
            if params.contains(&0) {
                return Err(invalid(name, "parameters must be positive"));
            }
            Ok(())
        };
        let family = match name {
            "path" => {
                arity(1)?;
                Family::Path(params[0])
            }
            "cycle" => {
                arity(1)?;
                if params[0] < 3 {
                    return Err(invalid(name, "cycles need at least 3 vertices"));
                }
                Family::Cycle(params[0])
            }
            "complete" => {
                arity(1)?;
                Family::Complete(params[0])
            }
            "star" => {
                arity(1)?;
                Family::Star(params[0])
            }
            "grid" => {
                arity(2)?;
                Family::Grid(params[0], params[1])
            }
            "toroidal_grid" => {
                arity(2)?;
                if params[0] < 3 || params[1] < 3 {
                    return Err(invalid(name, "toroidal grids need both sides at least 3"));
                }
                Family::ToroidalGrid(params[0], params[1])
            }
            "icosahedron" => {
                arity(0)?;
                Family::Icosahedron
            }
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        Ok(family)
    }

    /// The graph and, where the family has a standard embedding, its surface.
    pub fn build(self) -> (Graph, EmbeddingInfo) {
        let planar = EmbeddingInfo::orientable(0);
        match self {
            Family::Path(n) => {
                let e: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
                (simple(n, &e), planar)
            }
            Family::Cycle(n) => {
                let mut e: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
                e.push((0, n - 1));
                (simple(n, &e), planar)
            }
            Family::Complete(n) => {
                let mut e = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        e.push((u, v));
                    }
                }
                let emb = if n <= 4 { planar } else { EmbeddingInfo::undeclared() };
                (simple(n, &e), emb)
            }
            Family::Star(k) => {
                let e: Vec<Edge> = (1..=k).map(|i| (0, i)).collect();
                (simple(k + 1, &e), planar)
            }
            Family::Grid(a, b) => {
                let id = |r: usize, c: usize| r * b + c;
                let mut e = Vec::new();
                for r in 0..a {
                    for c in 0..b {
                        if c + 1 < b {
                            e.push((id(r, c), id(r, c + 1)));
                        }
                        if r + 1 < a {
                            e.push((id(r, c), id(r + 1, c)));
                        }
                    }
                }
                (simple(a * b, &e), planar)
            }
            Family::ToroidalGrid(a, b) => {
                let id = |r: usize, c: usize| r * b + c;
                let mut e = Vec::new();
                for r in 0..a {
                    for c in 0..b {
                        e.push((id(r, c), id(r, (c + 1) % b)));
                        e.push((id(r, c), id((r + 1) % a, c)));
                    }
                }
                (simple(a * b, &e), EmbeddingInfo::orientable(1))
            }
            Family::Icosahedron => (icosahedron(), planar),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `name` or `name:p1,p2`, e.g. `grid:3,4`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let params = rest
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| p.trim().parse::<usize>().map_err(|_| invalid(name, format!("`{p}` is not a nonnegative integer"))))
            .collect::<Result<Vec<_>>>()?;
        Family::from_parts(name.trim(), &params)
    }
}

fn simple(n: usize, edges: &[Edge]) -> Graph {
    Graph::new(n, edges).expect("family constructions are simple graphs")
}

/// Top vertex 0, upper pentagon 1..=5, lower pentagon 6..=10, bottom 11.
fn icosahedron() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        let upper = 1 + i;
        let upper_next = 1 + (i + 1) % 5;
        let lower = 6 + i;
        let lower_next = 6 + (i + 1) % 5;
        e.push((0, upper));
        e.push((upper, upper_next));
        e.push((upper, lower));
        e.push((upper_next, lower));
        e.push((lower, lower_next));
        e.push((lower, 11));
    }
    simple(12, &e)
}

/// Generates a named family; see [`Family::from_parts`].
pub fn generate(name: &str, params: &[usize]) -> Result<(Graph, EmbeddingInfo)> {
    Ok(Family::from_parts(name, params)?.build())
}

/// Makes every vertex the center of its own five-vertex path, giving a graph
/// of order `5n`.
///
/// Vertex `i` of `g` keeps index `i` and becomes the middle of the path
/// `p1 - p2 - i - p4 - p5`, whose other four vertices are `n + 4i .. n + 4i + 3`
/// in that order (see [`hat_arm`]).
pub fn hat_construction(g: &Graph) -> Result<Graph> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices { required: 2, actual: n });
    }
    let mut edges = g.edges().to_vec();
    for i in 0..n {
        let [p1, p2, p4, p5] = hat_arm(n, i);
        edges.extend_from_slice(&[(p1, p2), (p2, i), (i, p4), (p4, p5)]);
    }
    Graph::new(5 * n, &edges)
}

/// The vertices `[p1, p2, p4, p5]` of the path centered at original vertex `i`.
pub fn hat_arm(n: usize, i: usize) -> [usize; 4] {
    let base = n + 4 * i;
    [base, base + 1, base + 2, base + 3]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Girth, SurfaceKind};

    fn regular_of(g: &Graph) -> Option<usize> {
        let d = g.degree(0);
        g.vertices().all(|v| g.degree(v) == d).then_some(d)
    }

    #[test]
    fn generate_examples() {
        let (p, emb) = generate("path", &[5]).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (5, 4));
        assert_eq!(emb.chi, Some(2));

        let (t, emb) = generate("toroidal_grid", &[3, 3]).unwrap();
        assert_eq!((t.vertex_count(), t.edge_count()), (9, 18));
        assert_eq!(regular_of(&t), Some(4));
        assert_eq!((emb.surface_kind, emb.genus, emb.chi), (SurfaceKind::Orientable, Some(1), Some(0)));

        let (ico, emb) = generate("icosahedron", &[]).unwrap();
        assert_eq!((ico.vertex_count(), ico.edge_count()), (12, 30));
        assert_eq!(regular_of(&ico), Some(5));
        assert_eq!(emb.chi, Some(2));
        assert_eq!(ico.girth(), Girth::Finite(3));
    }

    #[test]
    fn generate_rejects_bad_requests() {
        assert_eq!(generate("wheel", &[5]), Err(Error::UnknownFamily("wheel".into())));
        assert!(generate("cycle", &[2]).is_err());
        assert!(generate("toroidal_grid", &[2, 3]).is_err());
        assert!(generate("grid", &[3]).is_err());
        assert!(generate("path", &[0]).is_err());
    }

    #[test]
    fn embedding_only_for_known_families() {
        assert!(generate("complete", &[4]).unwrap().1.is_declared());
        assert!(!generate("complete", &[5]).unwrap().1.is_declared());
    }

    #[test]
    fn family_strings() {
        assert_eq!("grid:3,4".parse::<Family>().unwrap(), Family::Grid(3, 4));
        assert_eq!("icosahedron".parse::<Family>().unwrap(), Family::Icosahedron);
        assert_eq!(Family::ToroidalGrid(3, 5).to_string(), "toroidal_grid:3,5");
        assert!("path:x".parse::<Family>().is_err());
    }

    #[test]
    fn family_girths() {
        for n in 3..10 {
            assert_eq!(Family::Cycle(n).build().0.girth(), Girth::Finite(n));
        }
        for a in 2..5 {
            for b in 2..5 {
                assert_eq!(Family::Grid(a, b).build().0.girth(), Girth::Finite(4));
            }
        }
    }

    #[test]
    fn hat_examples() {
        let c3 = Family::Cycle(3).build().0;
        let h = hat_construction(&c3).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (15, 15));
        let k2 = Family::Path(2).build().0;
        let h2 = hat_construction(&k2).unwrap();
        assert_eq!((h2.vertex_count(), h2.edge_count()), (10, 9));
        for v in c3.vertices() {
            assert_eq!(h.degree(v), c3.degree(v) + 2);
            let [p1, p2, p4, p5] = hat_arm(3, v);
            assert_eq!([h.degree(p1), h.degree(p2), h.degree(p4), h.degree(p5)], [1, 2, 2, 1]);
        }
        assert!(hat_construction(&Graph::empty(1)).is_err());
    }
}
