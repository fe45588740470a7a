//! Immutable simple undirected graphs on dense vertex ids `0..n`.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub type VertexId = usize;

/// A finite simple undirected graph.
///
/// Adjacency is kept both as sorted neighbor lists and as bit rows so the
/// interval engines can use whichever is cheaper.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    rows: Vec<VertexSet>,
    edge_count: usize,
    names: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range ids are rejected.
    pub fn from_edge_list(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut rows = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(rows))
    }

    pub(crate) fn from_rows(rows: Vec<VertexSet>) -> Graph {
        let adj: Vec<Vec<VertexId>> = rows.iter().map(VertexSet::to_vec).collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            adj,
            rows,
            edge_count,
            names: None,
        }
    }

    /// Attaches display labels, one per vertex.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Graph> {
        if names.len() != self.n() {
            return Err(Error::InvalidSize(format!(
                "{} names for {} vertices",
                names.len(),
                self.n()
            )));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display label of `v`, falling back to its id.
    pub fn label(&self, v: VertexId) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn adjacent(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    /// Open neighborhood as a bit row (borrowed).
    #[inline]
    pub fn row(&self, v: VertexId) -> &VertexSet {
        &self.rows[v]
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() == self.n() {
            Ok(())
        } else {
            Err(Error::InvalidSize(format!(
                "vertex set over {} vertices used with a graph of {}",
                s.universe(),
                self.n()
            )))
        }
    }

    pub fn neighbors(&self, v: VertexId) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.rows[v].clone())
    }

    pub fn closed_neighborhood(&self, v: VertexId) -> Result<VertexSet> {
        let mut s = self.neighbors(v)?;
        s.insert(v);
        Ok(s)
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0, &VertexSet::full(self.n())).len() == self.n()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count == n * (n - 1) / 2
    }

    pub fn is_trivial(&self) -> bool {
        self.n() < 2
    }

    /// Components ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&VertexSet::full(self.n()))
    }

    /// Components of the subgraph induced by `alive`, ordered by smallest
    /// vertex.
    pub fn components_within(&self, alive: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n());
        let mut out = Vec::new();
        for v in alive.iter() {
            if seen.contains(v) {
                continue;
            }
            let comp = self.component_of(v, alive);
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    /// The component of `start` in the subgraph induced by `alive`.
    pub fn component_of(&self, start: VertexId, alive: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::empty(self.n());
        if !alive.contains(start) {
            return comp;
        }
        comp.insert(start);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in &self.adj[x] {
                if alive.contains(y) && comp.insert(y) {
                    stack.push(y);
                }
            }
        }
        comp
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn delete_vertices(&self, removed: &VertexSet) -> Result<InducedSubgraph> {
        self.check_set(removed)?;
        self.induced_subgraph(&removed.complement())
    }

    /// Subgraph induced by `keep`, with vertices renumbered in increasing
    /// order of their old ids.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<InducedSubgraph> {
        self.check_set(keep)?;
        let old_of_new = keep.to_vec();
        if old_of_new.is_empty() {
            return Err(Error::Empty);
        }
        let mut new_of_old = vec![None; self.n()];
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old[old] = Some(new);
        }
        let k = old_of_new.len();
        let rows = old_of_new
            .iter()
            .map(|&old| {
                VertexSet::from_iter(k, self.adj[old].iter().filter_map(|&w| new_of_old[w]))
            })
            .collect();
        let mut graph = Graph::from_rows(rows);
        if let Some(names) = &self.names {
            graph.names = Some(old_of_new.iter().map(|&o| names[o].clone()).collect());
        }
        Ok(InducedSubgraph {
            graph,
            old_of_new,
            new_of_old,
        })
    }

    /// Rejects graphs that are disconnected or trivial.
    pub fn require_connected_nontrivial(&self) -> Result<()> {
        if self.is_trivial() {
            return Err(Error::Trivial);
        }
        self.require_connected()
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Rejects graphs that are disconnected, trivial or complete.
    pub fn require_admissible(&self) -> Result<()> {
        self.require_connected_nontrivial()?;
        if self.is_complete() {
            return Err(Error::Complete);
        }
        Ok(())
    }

    /// Non-adjacent pairs `u < v`.
    pub fn non_edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let n = self.n();
        (0..n).flat_map(move |u| ((u + 1)..n).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v)))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Result of deleting vertices: the new graph plus the id maps in both
/// directions.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub old_of_new: Vec<VertexId>,
    pub new_of_old: Vec<Option<VertexId>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle_graph, path_graph, star_graph};

    #[test]
    fn edge_list_basics() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert!(k2.is_complete());

        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4, path_graph(4).unwrap());

        let star = Graph::from_edge_list(4, &[(1, 0), (1, 2), (1, 3)]).unwrap();
        assert_eq!(star.degree(1), 3);
        assert_eq!(star.neighbors(1).unwrap().to_vec(), vec![0, 2, 3]);
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::from_edge_list(0, &[]), Err(Error::Empty));
    }

    #[test]
    fn neighborhoods() {
        let p4 = path_graph(4).unwrap();
        assert_eq!(p4.neighbors(0).unwrap().to_vec(), vec![1]);
        for v in p4.vertices() {
            let open = p4.neighbors(v).unwrap();
            let closed = p4.closed_neighborhood(v).unwrap();
            assert_eq!(closed.difference(&open).to_vec(), vec![v]);
        }
        assert!(p4.neighbors(4).is_err());
    }

    #[test]
    fn connectivity_queries() {
        let p4 = path_graph(4).unwrap();
        assert!(p4.is_connected());
        assert!(!p4.is_complete());
        let k4 = crate::generators::complete_graph(4).unwrap();
        assert!(k4.is_connected() && k4.is_complete());

        let cut = p4.delete_vertices(&VertexSet::from_iter(4, [1, 2])).unwrap();
        assert_eq!(cut.graph.connected_components().len(), 2);
    }

    #[test]
    fn delete_vertices_maps() {
        let star = star_graph(3).unwrap();
        let rest = star.delete_vertices(&VertexSet::singleton(4, 0)).unwrap();
        assert_eq!(rest.graph.n(), 3);
        assert_eq!(rest.graph.edge_count(), 0);

        let c5 = cycle_graph(5).unwrap();
        let same = c5.delete_vertices(&VertexSet::empty(5)).unwrap();
        assert_eq!(same.graph, c5);
        assert_eq!(same.old_of_new, vec![0, 1, 2, 3, 4]);

        let split = c5.delete_vertices(&VertexSet::from_iter(5, [0, 2])).unwrap();
        let comps: Vec<Vec<usize>> = split
            .graph
            .connected_components()
            .iter()
            .map(|c| c.iter().map(|v| split.old_of_new[v]).collect())
            .collect();
        assert_eq!(comps, vec![vec![1], vec![3, 4]]);
        assert_eq!(split.new_of_old[3], Some(1));
        assert_eq!(split.new_of_old[2], None);
    }

    #[test]
    fn preconditions() {
        let two = Graph::from_edge_list(2, &[]).unwrap();
        assert_eq!(two.require_connected(), Err(Error::Disconnected));
        let one = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(one.require_admissible(), Err(Error::Trivial));
        let k3 = crate::generators::complete_graph(3).unwrap();
        assert_eq!(k3.require_admissible(), Err(Error::Complete));
        assert!(path_graph(3).unwrap().require_admissible().is_ok());
    }
}
