//! Exhaustive generation of connected graphs up to isomorphism.
//!
//! Every connected graph on `n` vertices has a non-cut vertex, so the
//! connected graphs on `n` vertices are exactly the one-vertex extensions
//! (new vertex with a nonempty neighborhood) of the connected graphs on
//! `n - 1` vertices. Duplicates are removed with a brute-force canonical
//! form, which is fine up to `n = 8`.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ENUMERATION_ORDER: usize = 8;

type Code = u64;

fn bit_index(i: usize, j: usize) -> usize {
    // column-major upper triangle, i < j
    j * (j - 1) / 2 + i
}

fn code_of(rows: &[u8], perm: &[usize]) -> Code {
    let n = rows.len();
    let mut code = 0;
    for j in 1..n {
        for i in 0..j {
            if rows[perm[i]] & (1 << perm[j]) != 0 {
                code |= 1 << bit_index(i, j);
            }
        }
    }
    code
}

/// Smallest code over all vertex permutations.
fn canonical(rows: &[u8]) -> Code {
    let n = rows.len();
    (0..n)
        .permutations(n)
        .map(|p| code_of(rows, &p))
        .min()
        .unwrap_or(0)
}

fn rows_of(code: Code, n: usize) -> Vec<u8> {
    let mut rows = vec![0u8; n];
    for j in 1..n {
        for i in 0..j {
            if code & (1 << bit_index(i, j)) != 0 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    rows
}

fn to_graph(code: Code, n: usize) -> Graph {
    let rows = rows_of(code, n);
    let edges: Vec<_> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|&(u, v)| rows[u] & (1 << v) != 0)
        .collect();
    Graph::from_edge_list(n, &edges).expect("valid by construction")
}

/// All connected graphs on exactly `n` vertices, one per isomorphism
/// class, in increasing canonical-code order.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidSize(format!(
            "connected graph enumeration supports 1..={MAX_ENUMERATION_ORDER} vertices, got {n}"
        )));
    }
    let mut level: BTreeSet<Code> = BTreeSet::from([0]);
    for k in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = rows_of(code, k - 1);
            for mask in 1u16..(1 << (k - 1)) {
                let mut rows = base.clone();
                rows.push(mask as u8);
                for (i, row) in rows.iter_mut().enumerate().take(k - 1) {
                    if mask & (1 << i) != 0 {
                        *row |= 1 << (k - 1);
                    }
                }
                next.insert(canonical(&rows));
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(|c| to_graph(c, n)).collect())
}

/// Connected graphs on `1..=max_n` vertices, grouped by order.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    for n in 1..=max_n {
        all.extend(connected_graphs(n)?);
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequence() {
        // number of connected unlabeled graphs on n vertices
        let expected = [1, 1, 2, 6, 21, 112];
        for (i, &count) in expected.iter().enumerate() {
            let graphs = connected_graphs(i + 1).unwrap();
            assert_eq!(graphs.len(), count, "n = {}", i + 1);
            assert!(graphs.iter().all(Graph::is_connected));
        }
    }

    #[test]
    fn classes_are_distinct() {
        let graphs = connected_graphs(5).unwrap();
        let mut codes: Vec<Code> = graphs
            .iter()
            .map(|g| {
                let rows: Vec<u8> = g
                    .vertices()
                    .map(|v| g.adjacent(v).iter().fold(0u8, |m, &w| m | (1 << w)))
                    .collect();
                canonical(&rows)
            })
            .collect();
        codes.dedup();
        assert_eq!(codes.len(), 21);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(connected_graphs(0).is_err());
        assert!(connected_graphs(9).is_err());
    }
}
