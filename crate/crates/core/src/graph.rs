//! Immutable simple undirected graphs and the structural primitives built on them.

use std::collections::VecDeque;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

/// Simple undirected graph on the dense vertex set `0..n`.
///
/// Adjacency lists are sorted and symmetric, and `edges` is the sorted list of
/// adjacent pairs `(u, v)` with `u < v`. The value is never mutated after
/// construction; every "modification" returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<Vertex>>,
    edges: Vec<Edge>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

fn normalize(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a graph from an edge list. Loops, repeated pairs (in either
    /// orientation) and out-of-range endpoints are rejected.
    pub fn new(n: usize, edge_pairs: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(edge_pairs.len());
        for &(u, v) in edge_pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            edges.push(normalize(u, v));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            adjacency,
            edges,
        })
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adjacency: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted open neighborhood N(v).
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Position of `{u, v}` in the canonical edge list.
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.binary_search(&normalize(u, v)).ok()
    }

    /// Edges incident to `v`, in canonical order.
    pub fn incident_edges(&self, v: Vertex) -> Vec<Edge> {
        let mut out: Vec<Edge> = self.adjacency[v].iter().map(|&w| normalize(v, w)).collect();
        out.sort_unstable();
        out
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Minimum, maximum and exact average degree.
    pub fn degree_profile(&self) -> Result<DegreeProfile> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(DegreeProfile {
            min_degree: self.min_degree(),
            max_degree: self.max_degree(),
            average_degree: self.average_degree()?,
        })
    }

    /// `2|E| / |V|` in lowest terms.
    pub fn average_degree(&self) -> Result<Ratio<i64>> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(Ratio::new(2 * self.edges.len() as i64, self.n as i64))
    }

    /// The `X`-private neighborhood of `x`: all `y` with `N[y] ∩ X = {x}`.
    pub fn private_neighbors(&self, x: Vertex, set: &[Vertex]) -> Result<Vec<Vertex>> {
        self.check_vertex(x)?;
        let mut member = vec![false; self.n];
        for &w in set {
            self.check_vertex(w)?;
            member[w] = true;
        }
        if !member[x] {
            return Err(Error::NotInSet(x));
        }
        let out = self
            .vertices()
            .filter(|&y| {
                let mut hits = self.adjacency[y].iter().copied().chain(std::iter::once(y)).filter(|&w| member[w]);
                hits.next() == Some(x) && hits.next().is_none()
            })
            .collect();
        Ok(out)
    }

    /// Length of a shortest cycle, found by a breadth-first search from every
    /// vertex. Each non-tree edge `(u, w)` seen from root `r` closes a closed
    /// walk of length `dist(u) + dist(w) + 1`; the minimum over all roots is
    /// the girth.
    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in self.vertices() {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] >= best {
                    break;
                }
                for &w in &self.adjacency[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Edges with exactly one endpoint in `side`.
    pub fn edge_cut(&self, side: &[Vertex]) -> Result<Vec<Edge>> {
        let mut member = vec![false; self.n];
        for &w in side {
            self.check_vertex(w)?;
            member[w] = true;
        }
        let size = member.iter().filter(|&&b| b).count();
        if size == 0 || size == self.n {
            return Err(Error::InvalidCut);
        }
        Ok(self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| member[u] != member[v])
            .collect())
    }

    /// `G - S` on the same vertex set. Every pair in `S` must be an edge.
    pub fn remove_edges(&self, removed: &[Edge]) -> Result<Graph> {
        let mut drop = vec![false; self.edges.len()];
        for &(u, v) in removed {
            match self.edge_index(u, v) {
                Some(i) => drop[i] = true,
                None => return Err(Error::NotAnEdge(u, v)),
            }
        }
        Ok(self.without_edge_mask(&drop))
    }

    /// `G - S` where `S` is given as a mask over canonical edge indices.
    pub fn without_edge_mask(&self, drop: &[bool]) -> Graph {
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .zip(drop)
            .filter(|(_, &d)| !d)
            .map(|(&e, _)| e)
            .collect();
        let mut adjacency = vec![Vec::new(); self.n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            n: self.n,
            adjacency,
            edges,
        }
    }

    /// `G + S`; the pairs must not already be edges.
    pub fn add_edges(&self, added: &[Edge]) -> Result<Graph> {
        let mut all = self.edges.clone();
        all.extend_from_slice(added);
        Graph::new(self.n, &all)
    }

    /// `G - v`, with the remaining vertices renumbered in their original order.
    pub fn remove_vertex(&self, v: Vertex) -> Result<Graph> {
        self.check_vertex(v)?;
        if self.n < 2 {
            return Err(Error::TooFewVertices {
                required: 2,
                actual: self.n,
            });
        }
        let relabel = |w: Vertex| if w > v { w - 1 } else { w };
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .collect();
        Graph::new(self.n - 1, &edges)
    }

    /// Every path `x - y - z` of length two, each unordered path once with
    /// `x < z`, ordered by middle vertex and then by endpoints.
    pub fn length2_paths(&self) -> Vec<(Vertex, Vertex, Vertex)> {
        let mut out = Vec::new();
        for y in self.vertices() {
            let nbrs = &self.adjacency[y];
            for (i, &x) in nbrs.iter().enumerate() {
                for &z in &nbrs[i + 1..] {
                    out.push((x, y, z));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(self.component_of(0).len() == self.n)
    }

    fn component_of(&self, start: Vertex) -> Vec<Vertex> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        let mut out = Vec::new();
        seen[start] = true;
        while let Some(u) = stack.pop() {
            out.push(u);
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::from([source]);
        dist[source] = Some(0);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// Degree summary of a nonempty graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min_degree: usize,
    pub max_degree: usize,
    pub average_degree: Ratio<i64>,
}

/// Girth of a graph; forests have infinite girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(k) => Some(k),
            Girth::Infinite => None,
        }
    }
}

impl PartialOrd for Girth {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Girth {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match (self, other) {
            (Girth::Finite(a), Girth::Finite(b)) => a.cmp(b),
            (Girth::Finite(_), Girth::Infinite) => Less,
            (Girth::Infinite, Girth::Finite(_)) => Greater,
            (Girth::Infinite, Girth::Infinite) => Equal,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(k) => write!(f, "{k}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceKind {
    Orientable,
    NonOrientable,
    Undeclared,
}

/// Declared surface metadata for a graph. Never inferred from the graph.
///
/// `chi` may be declared on its own; when the surface kind and genus are also
/// known they must agree with it (`2 - 2h` orientable, `2 - q` otherwise).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EmbeddingInfo {
    pub surface_kind: SurfaceKind,
    pub genus: Option<u32>,
    pub chi: Option<i64>,
}

impl Default for EmbeddingInfo {
    fn default() -> Self {
        Self::undeclared()
    }
}

impl EmbeddingInfo {
    pub fn undeclared() -> Self {
        EmbeddingInfo {
            surface_kind: SurfaceKind::Undeclared,
            genus: None,
            chi: None,
        }
    }

    /// The orientable surface of genus `h`.
    pub fn orientable(genus: u32) -> Self {
        EmbeddingInfo {
            surface_kind: SurfaceKind::Orientable,
            genus: Some(genus),
            chi: Some(2 - 2 * genus as i64),
        }
    }

    /// The non-orientable surface with `q >= 1` crosscaps.
    pub fn non_orientable(genus: u32) -> Result<Self> {
        if genus == 0 {
            return Err(Error::InvalidEmbedding("non-orientable genus must be at least 1".into()));
        }
        Ok(EmbeddingInfo {
            surface_kind: SurfaceKind::NonOrientable,
            genus: Some(genus),
            chi: Some(2 - genus as i64),
        })
    }

    /// Only the Euler characteristic is declared.
    pub fn with_chi(chi: i64) -> Self {
        EmbeddingInfo {
            surface_kind: SurfaceKind::Undeclared,
            genus: None,
            chi: Some(chi),
        }
    }

    /// Assembles metadata from any combination of declared fields, filling in
    /// what is implied and rejecting inconsistent declarations.
    pub fn from_parts(orientable: Option<bool>, genus: Option<u32>, chi: Option<i64>) -> Result<Self> {
        let info = match (orientable, genus, chi) {
            (None, None, None) => EmbeddingInfo::undeclared(),
            (None, Some(_), _) => {
                return Err(Error::InvalidEmbedding("genus given without orientability".into()))
            }
            (None, None, Some(c)) => EmbeddingInfo::with_chi(c),
            (Some(o), Some(g), c) => {
                let info = if o {
                    EmbeddingInfo::orientable(g)
                } else {
                    EmbeddingInfo::non_orientable(g)?
                };
                if c.is_some() && c != info.chi {
                    return Err(Error::InvalidEmbedding(format!(
                        "chi={} contradicts genus {} surface (chi={})",
                        c.unwrap_or_default(),
                        g,
                        info.chi.unwrap_or_default()
                    )));
                }
                info
            }
            (Some(o), None, Some(c)) => {
                let genus = if o {
                    if c > 2 || (2 - c) % 2 != 0 {
                        return Err(Error::InvalidEmbedding(format!("no orientable surface has chi={c}")));
                    }
                    (2 - c) / 2
                } else {
                    if c > 1 {
                        return Err(Error::InvalidEmbedding(format!("no non-orientable surface has chi={c}")));
                    }
                    2 - c
                };
                let genus = u32::try_from(genus).map_err(|_| Error::InvalidEmbedding(format!("chi={c} out of range")))?;
                EmbeddingInfo::from_parts(Some(o), Some(genus), Some(c))?
            }
            (Some(_), None, None) => {
                return Err(Error::InvalidEmbedding("orientability given without genus or chi".into()))
            }
        };
        Ok(info)
    }

    pub fn is_declared(&self) -> bool {
        self.chi.is_some()
    }
}

/// Number of candidate edges on `n` labeled vertices.
fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Every labeled simple graph on `n` vertices, `1 <= n <= 7`, in ascending
/// order of the edge bitmask. Bit `k` of the mask selects the `k`-th pair in
/// canonical order `(0,1), (0,2), .., (n-2,n-1)`.
pub fn enumerate_small_graphs(n: usize, connected_only: bool) -> Result<SmallGraphs> {
    if !(1..=7).contains(&n) {
        return Err(Error::EnumerationRange(n));
    }
    let mut pairs = Vec::with_capacity(pair_count(n));
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    Ok(SmallGraphs {
        n,
        connected_only,
        total: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

/// Iterator returned by [`enumerate_small_graphs`].
pub struct SmallGraphs {
    n: usize,
    pairs: Vec<Edge>,
    connected_only: bool,
    total: u64,
    next: u64,
}

impl SmallGraphs {
    fn mask_connected(&self, mask: u64) -> bool {
        let mut adj = [0u8; 8];
        for (k, &(u, v)) in self.pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        let full: u8 = ((1u16 << self.n) - 1) as u8;
        let mut seen: u8 = 1;
        loop {
            let mut grown = seen;
            for v in 0..self.n {
                if seen >> v & 1 == 1 {
                    grown |= adj[v];
                }
            }
            if grown == seen {
                return seen == full;
            }
            seen = grown;
        }
    }
}

impl Iterator for SmallGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.total {
            let mask = self.next;
            self.next += 1;
            if self.connected_only && !self.mask_connected(mask) {
                continue;
            }
            let edges: Vec<Edge> = self
                .pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            return Some(Graph::new(self.n, &edges).expect("enumerated pairs are simple"));
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut e: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
        e.push((0, n - 1));
        Graph::new(n, &e).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::new(n, &e).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let e: Vec<Edge> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &e).unwrap()
    }

    #[test]
    fn build_graph_examples() {
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3.edges(), &[(0, 1), (0, 2), (1, 2)]);
        let p5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(p5.edge_count(), 4);
        assert_eq!(Graph::new(2, &[(0, 0)]), Err(Error::Loop(0)));
    }

    #[test]
    fn build_graph_rejects_bad_input() {
        assert_eq!(Graph::new(2, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn degree_profiles() {
        let p = path(4).degree_profile().unwrap();
        assert_eq!((p.min_degree, p.max_degree), (1, 2));
        assert_eq!(p.average_degree, Ratio::new(3, 2));
        let c = cycle(6).degree_profile().unwrap();
        assert_eq!((c.min_degree, c.max_degree, c.average_degree), (2, 2, Ratio::from_integer(2)));
        let k = complete(4).degree_profile().unwrap();
        assert_eq!((k.min_degree, k.max_degree, k.average_degree), (3, 3, Ratio::from_integer(3)));
        assert_eq!(Graph::empty(0).degree_profile(), Err(Error::EmptyGraph));
    }

    #[test]
    fn private_neighbor_examples() {
        let s = star(3);
        assert_eq!(s.private_neighbors(0, &[0]).unwrap(), vec![0, 1, 2, 3]);
        let p3 = path(3);
        assert_eq!(p3.private_neighbors(0, &[0, 2]).unwrap(), vec![0]);
        let k3 = complete(3);
        assert!(k3.private_neighbors(1, &[0, 1, 2]).unwrap().is_empty());
        assert_eq!(p3.private_neighbors(1, &[0]), Err(Error::NotInSet(1)));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(cycle(5).girth(), Girth::Finite(5));
        assert_eq!(path(7).girth(), Girth::Infinite);
        assert_eq!(complete(4).girth(), Girth::Finite(3));
    }

    #[test]
    fn edge_cut_examples() {
        assert_eq!(star(3).edge_cut(&[0]).unwrap().len(), 3);
        assert_eq!(cycle(4).edge_cut(&[0, 1]).unwrap(), vec![(0, 3), (1, 2)]);
        assert_eq!(complete(4).edge_cut(&[0]).unwrap(), vec![(0, 1), (0, 2), (0, 3)]);
        assert_eq!(cycle(4).edge_cut(&[]), Err(Error::InvalidCut));
        assert_eq!(cycle(4).edge_cut(&[0, 1, 2, 3]), Err(Error::InvalidCut));
    }

    #[test]
    fn edge_removal_examples() {
        let p3 = complete(3).remove_edges(&[(0, 2)]).unwrap();
        assert_eq!(p3, path(3));
        let split = path(2).remove_edges(&[(0, 1)]).unwrap();
        assert_eq!(split, Graph::empty(2));
        assert_eq!(cycle(4).remove_edges(&[]).unwrap(), cycle(4));
        assert_eq!(path(3).remove_edges(&[(0, 2)]), Err(Error::NotAnEdge(0, 2)));
    }

    #[test]
    fn vertex_removal_examples() {
        assert_eq!(path(3).remove_vertex(0).unwrap(), path(2));
        for v in 0..4 {
            assert_eq!(complete(4).remove_vertex(v).unwrap(), complete(3));
        }
        // C5 minus a vertex is a path, renumbered in order.
        let p = cycle(5).remove_vertex(2).unwrap();
        assert_eq!(p.edge_count(), 3);
        assert_eq!(p.girth(), Girth::Infinite);
        assert!(p.is_connected().unwrap());
        assert!(Graph::empty(1).remove_vertex(0).is_err());
        assert!(path(3).remove_vertex(3).is_err());
    }

    #[test]
    fn length2_path_examples() {
        assert_eq!(path(3).length2_paths(), vec![(0, 1, 2)]);
        assert_eq!(complete(3).length2_paths().len(), 3);
        assert!(path(2).length2_paths().is_empty());
    }

    #[test]
    fn connectivity_examples() {
        assert!(Graph::empty(1).is_connected().unwrap());
        assert!(path(5).is_connected().unwrap());
        assert!(!Graph::new(3, &[(0, 1)]).unwrap().is_connected().unwrap());
        assert_eq!(Graph::empty(0).is_connected(), Err(Error::EmptyGraph));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_small_graphs(2, false).unwrap().count(), 2);
        assert_eq!(enumerate_small_graphs(2, true).unwrap().count(), 1);
        assert_eq!(enumerate_small_graphs(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_small_graphs(3, true).unwrap().count(), 4);
        assert_eq!(enumerate_small_graphs(4, true).unwrap().count(), 38);
        assert!(enumerate_small_graphs(0, false).is_err());
        assert!(enumerate_small_graphs(8, false).is_err());
    }

    #[test]
    fn enumeration_order_is_mask_ascending() {
        let graphs: Vec<Graph> = enumerate_small_graphs(3, false).unwrap().collect();
        assert_eq!(graphs[0].edge_count(), 0);
        assert_eq!(graphs[1].edges(), &[(0, 1)]);
        assert_eq!(graphs[2].edges(), &[(0, 2)]);
        assert_eq!(graphs[7].edge_count(), 3);
    }

    #[test]
    fn embedding_metadata() {
        assert_eq!(EmbeddingInfo::orientable(1).chi, Some(0));
        assert_eq!(EmbeddingInfo::non_orientable(2).unwrap().chi, Some(0));
        assert!(EmbeddingInfo::non_orientable(0).is_err());
        let e = EmbeddingInfo::from_parts(Some(true), None, Some(-2)).unwrap();
        assert_eq!(e.genus, Some(2));
        assert!(EmbeddingInfo::from_parts(Some(true), Some(1), Some(2)).is_err());
        assert!(EmbeddingInfo::from_parts(Some(true), None, Some(1)).is_err());
    }
}
