//! Branch-and-bound search for minimum-weight Roman dominating functions.
//!
//! Vertices are labeled one at a time in descending degree order (ties by
//! index), trying labels in the order 2, 0, 1. The search state tracks, per
//! vertex, how many 2-labels sit in its closed neighborhood and how many of
//! its neighbors are still undecided, so that a 0-label that can no longer be
//! covered is detected as soon as its last neighbor is fixed.
//!
//! A node is cut when `weight + ceil(2 * open / (d + 1)) >= incumbent`, where
//! `open` counts vertices that are neither labeled 1 nor covered by a 2-label
//! and `d` is the largest degree among undecided vertices. Covering `open`
//! vertices costs at least that much: a 2-label covers at most `d + 1` of them
//! for 2, a 1-label covers one for 1.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rdf::RomanFunction;

const UNSET: u8 = 3;

/// Optimum value with a witness and the number of search nodes visited.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult<W> {
    pub value: usize,
    pub witness: W,
    pub nodes_explored: u64,
}

/// Result of a solve with a fixed label on one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constrained {
    Optimal(SolveResult<RomanFunction>),
    /// No Roman dominating function satisfies the constraint.
    Infeasible,
}

impl Constrained {
    pub fn value(&self) -> Option<usize> {
        match self {
            Constrained::Optimal(r) => Some(r.value),
            Constrained::Infeasible => None,
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<Vertex>,
    label: Vec<u8>,
    cover: Vec<u32>,
    undecided_nbrs: Vec<u32>,
    open: usize,
    weight: usize,
    /// Only solutions strictly lighter than this are accepted.
    bound: usize,
    best: Option<Vec<u8>>,
    fixed: Option<(Vertex, u8)>,
    stop_at_first: bool,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, bound: usize, fixed: Option<(Vertex, u8)>, stop_at_first: bool) -> Self {
        let n = g.vertex_count();
        let mut order: Vec<Vertex> = g.vertices().collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        Search {
            g,
            order,
            label: vec![UNSET; n],
            cover: vec![0; n],
            undecided_nbrs: g.vertices().map(|v| g.degree(v) as u32).collect(),
            open: n,
            weight: 0,
            bound,
            best: None,
            fixed,
            stop_at_first,
            nodes: 0,
        }
    }

    fn is_open(&self, v: Vertex) -> bool {
        self.cover[v] == 0 && self.label[v] != 1
    }

    fn lower_bound(&self, depth: usize) -> usize {
        if self.open == 0 {
            return self.weight;
        }
        let reach = (self.g.degree(self.order[depth]) + 1).max(2);
        self.weight + (2 * self.open).div_ceil(reach)
    }

    fn done(&self) -> bool {
        self.stop_at_first && self.best.is_some()
    }

    fn run(&mut self, depth: usize) {
        self.nodes += 1;
        if depth == self.order.len() {
            if self.open == 0 && self.weight < self.bound {
                self.bound = self.weight;
                self.best = Some(self.label.clone());
            }
            return;
        }
        if self.lower_bound(depth) >= self.bound {
            return;
        }
        let v = self.order[depth];
        for choice in [2u8, 0, 1] {
            if let Some((fv, fl)) = self.fixed {
                if fv == v && fl != choice {
                    continue;
                }
            }
            let forced_here = matches!(self.fixed, Some((fv, _)) if fv == v);
            match choice {
                // A 0 needs a 2 somewhere in N(v), now or later.
                0 if self.cover[v] == 0 && self.undecided_nbrs[v] == 0 => continue,
                // A covered vertex is never worse off with 0 than with 1.
                1 if self.cover[v] > 0 && !forced_here => continue,
                _ => {}
            }
            let alive = self.assign(v, choice);
            if alive && self.weight < self.bound {
                self.run(depth + 1);
            }
            self.unassign(v, choice);
            if self.done() {
                return;
            }
        }
    }

    /// Applies `v := choice`; returns false if some 0-labeled vertex lost its
    /// last chance of being covered.
    fn assign(&mut self, v: Vertex, choice: u8) -> bool {
        let g = self.g;
        if self.is_open(v) {
            self.open -= 1;
        }
        self.label[v] = choice;
        self.weight += choice as usize;
        if choice == 2 {
            self.cover[v] += 1;
            for &w in g.neighbors(v) {
                if self.is_open(w) {
                    self.open -= 1;
                }
                self.cover[w] += 1;
            }
        }
        if self.is_open(v) {
            self.open += 1;
        }
        let mut alive = true;
        for &w in g.neighbors(v) {
            self.undecided_nbrs[w] -= 1;
            if self.label[w] == 0 && self.cover[w] == 0 && self.undecided_nbrs[w] == 0 {
                alive = false;
            }
        }
        alive
    }

    fn unassign(&mut self, v: Vertex, choice: u8) {
        let g = self.g;
        for &w in g.neighbors(v) {
            self.undecided_nbrs[w] += 1;
        }
        if self.is_open(v) {
            self.open -= 1;
        }
        if choice == 2 {
            self.cover[v] -= 1;
            for &w in g.neighbors(v) {
                self.cover[w] -= 1;
                if self.is_open(w) {
                    self.open += 1;
                }
            }
        }
        self.weight -= choice as usize;
        self.label[v] = UNSET;
        if self.is_open(v) {
            self.open += 1;
        }
    }
}

/// Exact Roman domination number with a witness function.
///
/// The witness is the first optimum met in the fixed branching order, so it
/// is reproducible across runs.
pub fn gamma_r_exact(g: &Graph) -> SolveResult<RomanFunction> {
    let n = g.vertex_count();
    let mut search = Search::new(g, n + 1, None, false);
    search.run(0);
    let labels = search.best.expect("the all-ones labeling is always feasible");
    SolveResult {
        value: labels.iter().map(|&l| l as usize).sum(),
        witness: RomanFunction::from_trusted(labels),
        nodes_explored: search.nodes,
    }
}

/// Minimum weight over Roman dominating functions with `f(v) = label`.
pub fn gamma_r_constrained(g: &Graph, v: Vertex, label: u8) -> Result<Constrained> {
    if v >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.vertex_count(),
        });
    }
    if label > 2 {
        return Err(Error::InvalidLabel(label));
    }
    // Any feasible labeling weighs at most 2n.
    let mut search = Search::new(g, 2 * g.vertex_count() + 1, Some((v, label)), false);
    search.run(0);
    Ok(match search.best {
        Some(labels) => Constrained::Optimal(SolveResult {
            value: labels.iter().map(|&l| l as usize).sum(),
            witness: RomanFunction::from_trusted(labels),
            nodes_explored: search.nodes,
        }),
        None => Constrained::Infeasible,
    })
}

/// Some Roman dominating function of weight at most `limit`, if one exists.
/// Stops at the first one found.
pub fn roman_function_at_most(g: &Graph, limit: usize) -> Option<RomanFunction> {
    let mut search = Search::new(g, limit + 1, None, true);
    search.run(0);
    search.best.map(RomanFunction::from_trusted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::is_rdf;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
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

    #[test]
    fn exact_examples() {
        assert_eq!(gamma_r_exact(&path(5)).value, 4);
        for n in 2..8 {
            assert_eq!(gamma_r_exact(&complete(n)).value, 2);
        }
        assert_eq!(gamma_r_exact(&cycle(6)).value, 4);
        assert_eq!(gamma_r_exact(&Graph::empty(1)).value, 1);
        assert_eq!(gamma_r_exact(&Graph::empty(4)).value, 4);
    }

    #[test]
    fn witness_is_valid_and_deterministic() {
        let g = cycle(7);
        let a = gamma_r_exact(&g);
        let b = gamma_r_exact(&g);
        assert_eq!(a, b);
        assert!(is_rdf(&g, &a.witness).unwrap());
        assert_eq!(a.witness.weight(), a.value);
    }

    #[test]
    fn constrained_examples() {
        assert_eq!(gamma_r_constrained(&path(5), 2, 1).unwrap().value(), Some(5));
        assert_eq!(gamma_r_constrained(&complete(3), 1, 2).unwrap().value(), Some(2));
        assert_eq!(
            gamma_r_constrained(&Graph::empty(1), 0, 0).unwrap(),
            Constrained::Infeasible
        );
        assert!(gamma_r_constrained(&path(3), 3, 0).is_err());
    }

    #[test]
    fn constrained_witness_respects_label() {
        let g = cycle(6);
        for v in g.vertices() {
            for label in 0..3 {
                if let Constrained::Optimal(r) = gamma_r_constrained(&g, v, label).unwrap() {
                    assert_eq!(r.witness.label(v), label);
                    assert!(is_rdf(&g, &r.witness).unwrap());
                }
            }
        }
    }

    #[test]
    fn decision_mode() {
        let g = cycle(6);
        assert!(roman_function_at_most(&g, 3).is_none());
        let f = roman_function_at_most(&g, 4).unwrap();
        assert!(is_rdf(&g, &f).unwrap());
        assert!(f.weight() <= 4);
    }
}
