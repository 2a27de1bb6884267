use crate::graph::{Graph, Vertex};
use crate::rdf::SolveResult;

struct DomSearch<'a> {
    g: &'a Graph,
    /// Number of chosen vertices in N[v].
    dominated_by: Vec<u32>,
    undominated: usize,
    chosen: Vec<Vertex>,
    best: Vec<Vertex>,
    reach: usize,
    nodes: u64,
}

impl DomSearch<'_> {
    fn add(&mut self, v: Vertex) {
        self.chosen.push(v);
        for w in std::iter::once(v).chain(self.g.neighbors(v).iter().copied()) {
            if self.dominated_by[w] == 0 {
                self.undominated -= 1;
            }
            self.dominated_by[w] += 1;
        }
    }

    fn remove(&mut self, v: Vertex) {
        self.chosen.pop();
        for w in std::iter::once(v).chain(self.g.neighbors(v).iter().copied()) {
            self.dominated_by[w] -= 1;
            if self.dominated_by[w] == 0 {
                self.undominated += 1;
            }
        }
    }

    fn run(&mut self) {
        self.nodes += 1;
        if self.undominated == 0 {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        if self.chosen.len() + self.undominated.div_ceil(self.reach) >= self.best.len() {
            return;
        }
        // Branch on the undominated vertex with the fewest ways to be dominated.
        let g = self.g;
        let target = g
            .vertices()
            .filter(|&v| self.dominated_by[v] == 0)
            .min_by_key(|&v| (g.degree(v), v))
            .expect("undominated > 0");
        let mut candidates: Vec<Vertex> = std::iter::once(target).chain(g.neighbors(target).iter().copied()).collect();
        candidates.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        for c in candidates {
            self.add(c);
            self.run();
            self.remove(c);
        }
    }
}

/// Exact domination number with a minimum dominating set (ascending).
pub fn gamma_exact(g: &Graph) -> SolveResult<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut search = DomSearch {
        g,
        dominated_by: vec![0; n],
        undominated: n,
        chosen: Vec::new(),
        best: g.vertices().collect(),
        reach: g.max_degree() + 1,
        nodes: 0,
    };
    // `best` starts as V itself, which always dominates; look for something smaller.
    search.best.push(usize::MAX);
    search.run();
    let mut witness = search.best;
    witness.sort_unstable();
    SolveResult {
        value: witness.len(),
        witness,
        nodes_explored: search.nodes,
    }
}

/// Whether `set` dominates `g`.
pub fn is_dominating_set(g: &Graph, set: &[Vertex]) -> bool {
    let mut dominated = vec![false; g.vertex_count()];
    for &v in set {
        dominated[v] = true;
        for &w in g.neighbors(v) {
            dominated[w] = true;
        }
    }
    dominated.into_iter().all(|d| d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn domination_examples() {
        let r = gamma_exact(&path(5));
        assert_eq!(r.value, 2);
        assert!(is_dominating_set(&path(5), &r.witness));
        let k5 = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(gamma_exact(&k5).value, 1);
        assert_eq!(gamma_exact(&Graph::empty(3)).value, 3);
        assert_eq!(gamma_exact(&Graph::empty(1)).value, 1);
    }
}
