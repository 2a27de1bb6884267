//! Exhaustive reference computations over all `3^n` labelings (or all `2^n`
//! vertex subsets). They use their own bitmask adjacency and share nothing with
//! the branch-and-bound solvers, so they can serve as independent checks.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rdf::RomanFunction;

/// Largest order the exhaustive scans accept.
pub const ORACLE_LIMIT: usize = 12;

fn masks(g: &Graph) -> Result<Vec<u16>> {
    let n = g.vertex_count();
    if n > ORACLE_LIMIT {
        return Err(Error::OracleTooLarge { n, limit: ORACLE_LIMIT });
    }
    let mut adj = vec![0u16; n];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    Ok(adj)
}

/// Calls `visit(zeros, ones, twos)` for every labeling, as three bitmasks.
fn for_each_labeling(n: usize, mut visit: impl FnMut(u16, u16, u16)) {
    let mut digits = vec![0u8; n];
    let (mut ones, mut twos) = (0u16, 0u16);
    let full: u16 = if n == 16 { u16::MAX } else { (1u16 << n) - 1 };
    loop {
        visit(full & !(ones | twos), ones, twos);
        // Base-3 increment, least significant digit at vertex 0.
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            let bit = 1u16 << i;
            match digits[i] {
                0 => {
                    digits[i] = 1;
                    ones |= bit;
                    break;
                }
                1 => {
                    digits[i] = 2;
                    ones &= !bit;
                    twos |= bit;
                    break;
                }
                _ => {
                    digits[i] = 0;
                    twos &= !bit;
                    i += 1;
                }
            }
        }
    }
}

fn covered_by(adj: &[u16], twos: u16) -> u16 {
    adj.iter()
        .enumerate()
        .filter(|(v, _)| twos >> v & 1 == 1)
        .fold(0, |acc, (_, &m)| acc | m)
}

fn labels_of(n: usize, ones: u16, twos: u16) -> Vec<u8> {
    (0..n)
        .map(|v| {
            if twos >> v & 1 == 1 {
                2
            } else if ones >> v & 1 == 1 {
                1
            } else {
                0
            }
        })
        .collect()
}

/// Roman domination number by scanning every labeling.
pub fn gamma_r_oracle(g: &Graph) -> Result<usize> {
    let adj = masks(g)?;
    let mut best = usize::MAX;
    for_each_labeling(g.vertex_count(), |zeros, ones, twos| {
        let w = ones.count_ones() as usize + 2 * twos.count_ones() as usize;
        if w < best && zeros & !covered_by(&adj, twos) == 0 {
            best = w;
        }
    });
    Ok(best)
}

/// Minimum weight with `f(v) = label`, or `None` when no such function exists.
pub fn gamma_r_constrained_oracle(g: &Graph, v: Vertex, label: u8) -> Result<Option<usize>> {
    let adj = masks(g)?;
    let bit = 1u16 << v;
    let mut best = None;
    for_each_labeling(g.vertex_count(), |zeros, ones, twos| {
        let here = [zeros, ones, twos][label as usize] & bit != 0;
        if !here || zeros & !covered_by(&adj, twos) != 0 {
            return;
        }
        let w = ones.count_ones() as usize + 2 * twos.count_ones() as usize;
        if best.is_none_or(|b| w < b) {
            best = Some(w);
        }
    });
    Ok(best)
}

/// Every minimum-weight Roman dominating function, in base-3 counting order.
pub fn all_minimum_labelings(g: &Graph) -> Result<Vec<RomanFunction>> {
    let adj = masks(g)?;
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut found: Vec<(u16, u16)> = Vec::new();
    for_each_labeling(n, |zeros, ones, twos| {
        let w = ones.count_ones() as usize + 2 * twos.count_ones() as usize;
        if w > best || zeros & !covered_by(&adj, twos) != 0 {
            return;
        }
        if w < best {
            best = w;
            found.clear();
        }
        found.push((ones, twos));
    });
    Ok(found
        .into_iter()
        .map(|(ones, twos)| RomanFunction::from_trusted(labels_of(n, ones, twos)))
        .collect())
}

/// Domination number by scanning every vertex subset.
pub fn gamma_oracle(g: &Graph) -> Result<usize> {
    let adj = masks(g)?;
    let n = g.vertex_count();
    let full: u32 = (1u32 << n) - 1;
    let mut best = n;
    for set in 0..=full {
        let size = set.count_ones() as usize;
        if size >= best {
            continue;
        }
        let mut dom = set;
        for (v, &m) in adj.iter().enumerate() {
            if set >> v & 1 == 1 {
                dom |= m as u32;
            }
        }
        if dom == full {
            best = size;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(gamma_r_oracle(&Graph::empty(1)).unwrap(), 1);
        assert_eq!(gamma_r_oracle(&path(2)).unwrap(), 2);
        assert_eq!(gamma_r_oracle(&path(5)).unwrap(), 4);
        assert_eq!(gamma_oracle(&path(5)).unwrap(), 2);
    }

    #[test]
    fn oracle_refuses_large_graphs() {
        assert_eq!(
            gamma_r_oracle(&Graph::empty(13)),
            Err(Error::OracleTooLarge { n: 13, limit: 12 })
        );
    }

    #[test]
    fn constrained_oracle() {
        assert_eq!(gamma_r_constrained_oracle(&path(5), 2, 1).unwrap(), Some(5));
        assert_eq!(gamma_r_constrained_oracle(&Graph::empty(1), 0, 0).unwrap(), None);
    }

    #[test]
    fn minimum_labelings_of_p3() {
        // Only the center labeled 2 reaches weight 2.
        let all = all_minimum_labelings(&path(3)).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].labels(), &[0, 2, 0]);
    }
}
