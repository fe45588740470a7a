//! Standard graph families and seeded random graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

fn need(k: usize, min: usize, what: &str) -> Result<()> {
    if k < min {
        Err(Error::InvalidSize(format!("{what} needs at least {min} vertices, got {k}")))
    } else {
        Ok(())
    }
}

pub fn path_graph(k: usize) -> Result<Graph> {
    need(k, 1, "path")?;
    let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(k, &edges)
}

pub fn cycle_graph(k: usize) -> Result<Graph> {
    need(k, 3, "cycle")?;
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Graph::from_edge_list(k, &edges)
}

pub fn complete_graph(k: usize) -> Result<Graph> {
    need(k, 1, "complete graph")?;
    let mut edges = Vec::with_capacity(k * (k - 1) / 2);
    for u in 0..k {
        for v in (u + 1)..k {
            edges.push((u, v));
        }
    }
    Graph::from_edge_list(k, &edges)
}

/// `K_{1,k}`: center 0, leaves `1..=k`.
pub fn star_graph(k: usize) -> Result<Graph> {
    need(k, 1, "star")?;
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    Graph::from_edge_list(k + 1, &edges)
}

/// Two copies of `K_k` whose first vertices are joined through a middle
/// vertex.
///
/// Layout: `a_1..a_k` are ids `0..k`, the middle vertex is `k`, and
/// `b_1..b_k` are ids `k+1..=2k`.
pub fn two_clique_bridge(k: usize) -> Result<Graph> {
    need(k, 1, "two-clique bridge")?;
    let mut edges = Vec::new();
    let b = |i: usize| k + 1 + i;
    for i in 0..k {
        for j in (i + 1)..k {
            edges.push((i, j));
            edges.push((b(i), b(j)));
        }
    }
    edges.push((0, k));
    edges.push((k, b(0)));
    Graph::from_edge_list(2 * k + 1, &edges)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random recursive tree with shuffled labels.
pub fn random_tree(k: usize, seed: u64) -> Result<Graph> {
    random_tree_with(k, &mut rng(seed))
}

pub fn random_tree_with<R: Rng>(k: usize, rng: &mut R) -> Result<Graph> {
    need(k, 1, "tree")?;
    let mut labels: Vec<VertexId> = (0..k).collect();
    labels.shuffle(rng);
    let edges: Vec<_> = (1..k)
        .map(|i| (labels[i], labels[rng.gen_range(0..i)]))
        .collect();
    Graph::from_edge_list(k, &edges)
}

/// `G(k, p)` followed by joining consecutive components with one random
/// edge each until the graph is connected.
pub fn random_connected_graph(k: usize, p: f64, seed: u64) -> Result<Graph> {
    random_connected_graph_with(k, p, &mut rng(seed))
}

pub fn random_connected_graph_with<R: Rng>(k: usize, p: f64, rng: &mut R) -> Result<Graph> {
    need(k, 1, "random graph")?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidSize(format!("edge probability {p} outside [0, 1]")));
    }
    let mut edges = Vec::new();
    for u in 0..k {
        for v in (u + 1)..k {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edge_list(k, &edges)?;
    let comps = g.connected_components();
    for pair in comps.windows(2) {
        let left = pair[0].to_vec();
        let right = pair[1].to_vec();
        edges.push((
            *left.choose(rng).unwrap(),
            *right.choose(rng).unwrap(),
        ));
    }
    Graph::from_edge_list(k, &edges)
}
