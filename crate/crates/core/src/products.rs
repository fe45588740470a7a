//! Lexicographic, Cartesian, strong and (generalized) corona products.
//!
//! Pair products number `(g, h)` row-major as `g * |V(H)| + h`. Coronas put
//! the base vertices first, then copy 0, copy 1, ... each in factor order.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductKind {
    Lexicographic,
    Cartesian,
    Strong,
    Corona,
    GeneralizedCorona,
}

impl ProductKind {
    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Lexicographic => "lexicographic",
            ProductKind::Cartesian => "cartesian",
            ProductKind::Strong => "strong",
            ProductKind::Corona => "corona",
            ProductKind::GeneralizedCorona => "generalized corona",
        }
    }

    fn is_pair_product(self) -> bool {
        matches!(
            self,
            ProductKind::Lexicographic | ProductKind::Cartesian | ProductKind::Strong
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ProductVertexLabel {
    Pair(VertexId, VertexId),
    Base(VertexId),
    Copy { copy: usize, h: VertexId },
}

impl fmt::Display for ProductVertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductVertexLabel::Pair(g, h) => write!(f, "({g},{h})"),
            ProductVertexLabel::Base(g) => write!(f, "g_{g}"),
            ProductVertexLabel::Copy { copy, h } => write!(f, "h_{h}^{copy}"),
        }
    }
}

/// Which layer of a product to extract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layer {
    /// `G^h`: all `(g, h)` for fixed `h`.
    G { h: VertexId },
    /// `^gH`: all `(g, h)` for fixed `g`.
    H { g: VertexId },
    /// The `i`-th copy in a corona.
    Copy { copy: usize },
}

#[derive(Debug, Clone)]
pub struct ProductGraph {
    pub graph: Graph,
    pub labels: Vec<ProductVertexLabel>,
    /// `[G, H]` for pair products and the corona, `[G, H_0, .., H_{n-1}]`
    /// for the generalized corona.
    pub factors: Vec<Graph>,
    pub kind: ProductKind,
    copy_offsets: Vec<usize>,
}

fn pair_product(g: &Graph, h: &Graph, kind: ProductKind, adjacent: impl Fn(bool, bool, bool, bool) -> bool) -> ProductGraph {
    let (ng, nh) = (g.n(), h.n());
    let idx = |a: usize, b: usize| a * nh + b;
    let mut edges = Vec::new();
    for g1 in 0..ng {
        for h1 in 0..nh {
            for g2 in g1..ng {
                let start_h = if g1 == g2 { h1 + 1 } else { 0 };
                for h2 in start_h..nh {
                    let same_g = g1 == g2;
                    let same_h = h1 == h2;
                    if adjacent(same_g, g.has_edge(g1, g2), same_h, h.has_edge(h1, h2)) {
                        edges.push((idx(g1, h1), idx(g2, h2)));
                    }
                }
            }
        }
    }
    let labels: Vec<_> = (0..ng)
        .flat_map(|a| (0..nh).map(move |b| ProductVertexLabel::Pair(a, b)))
        .collect();
    let graph = named(Graph::from_edge_list(ng * nh, &edges).expect("product edges valid"), &labels);
    ProductGraph {
        graph,
        labels,
        factors: vec![g.clone(), h.clone()],
        kind,
        copy_offsets: Vec::new(),
    }
}

fn named(graph: Graph, labels: &[ProductVertexLabel]) -> Graph {
    let names = labels.iter().map(ToString::to_string).collect();
    graph.with_names(names).expect("one label per vertex")
}

/// `(g1,h1) ~ (g2,h2)` iff `g1g2 ∈ E(G)`, or `g1 = g2` and `h1h2 ∈ E(H)`.
pub fn lexicographic(g: &Graph, h: &Graph) -> ProductGraph {
    pair_product(g, h, ProductKind::Lexicographic, |same_g, gg, _, hh| {
        gg || (same_g && hh)
    })
}

pub fn cartesian(g: &Graph, h: &Graph) -> ProductGraph {
    pair_product(g, h, ProductKind::Cartesian, |same_g, gg, same_h, hh| {
        (gg && same_h) || (same_g && hh)
    })
}

pub fn strong(g: &Graph, h: &Graph) -> ProductGraph {
    pair_product(g, h, ProductKind::Strong, |same_g, gg, same_h, hh| {
        (gg && same_h) || (same_g && hh) || (gg && hh)
    })
}

pub fn corona(g: &Graph, h: &Graph) -> ProductGraph {
    let copies = vec![h.clone(); g.n()];
    let mut p = build_corona(g, &copies);
    p.kind = ProductKind::Corona;
    p.factors = vec![g.clone(), h.clone()];
    p
}

/// Corona with a different graph attached to each base vertex.
pub fn generalized_corona(g: &Graph, hs: &[Graph]) -> Result<ProductGraph> {
    if hs.len() != g.n() {
        return Err(Error::FactorCount {
            expected: g.n(),
            got: hs.len(),
        });
    }
    Ok(build_corona(g, hs))
}

fn build_corona(g: &Graph, hs: &[Graph]) -> ProductGraph {
    let n = g.n();
    let mut offsets = Vec::with_capacity(n);
    let mut labels: Vec<_> = (0..n).map(ProductVertexLabel::Base).collect();
    let mut edges: Vec<_> = g.edges().collect();
    for (i, h) in hs.iter().enumerate() {
        let off = labels.len();
        offsets.push(off);
        labels.extend((0..h.n()).map(|x| ProductVertexLabel::Copy { copy: i, h: x }));
        edges.extend(h.edges().map(|(a, b)| (off + a, off + b)));
        edges.extend((0..h.n()).map(|x| (i, off + x)));
    }
    let graph = named(
        Graph::from_edge_list(labels.len(), &edges).expect("corona edges valid"),
        &labels,
    );
    let mut factors = vec![g.clone()];
    factors.extend(hs.iter().cloned());
    ProductGraph {
        graph,
        labels,
        factors,
        kind: ProductKind::GeneralizedCorona,
        copy_offsets: offsets,
    }
}

impl ProductGraph {
    pub fn base_factor(&self) -> &Graph {
        &self.factors[0]
    }

    /// The graph attached at copy `i` (the second factor for pair products
    /// and plain coronas).
    pub fn fiber_factor(&self, i: usize) -> &Graph {
        match self.kind {
            ProductKind::GeneralizedCorona => &self.factors[1 + i],
            _ => &self.factors[1],
        }
    }

    fn is_corona(&self) -> bool {
        matches!(self.kind, ProductKind::Corona | ProductKind::GeneralizedCorona)
    }

    /// Product vertex `(g, h)` of a pair product.
    pub fn pair(&self, g: VertexId, h: VertexId) -> Result<VertexId> {
        if !self.kind.is_pair_product() {
            return Err(Error::WrongProductKind(self.kind.name()));
        }
        self.factors[0].check_vertex(g)?;
        self.factors[1].check_vertex(h)?;
        Ok(g * self.factors[1].n() + h)
    }

    /// Base vertex `g_i` of a corona.
    pub fn base(&self, i: VertexId) -> Result<VertexId> {
        if !self.is_corona() {
            return Err(Error::WrongProductKind(self.kind.name()));
        }
        self.factors[0].check_vertex(i)?;
        Ok(i)
    }

    /// Vertex `h^i` of the `i`-th corona copy.
    pub fn copy_vertex(&self, i: usize, h: VertexId) -> Result<VertexId> {
        self.base(i)?;
        self.fiber_factor(i).check_vertex(h)?;
        Ok(self.copy_offsets[i] + h)
    }

    pub fn layer(&self, which: Layer) -> Result<VertexSet> {
        let n = self.graph.n();
        match which {
            Layer::G { h } => {
                self.pair(0, h)?;
                Ok(VertexSet::from_iter(
                    n,
                    (0..self.factors[0].n()).map(|g| g * self.factors[1].n() + h),
                ))
            }
            Layer::H { g } => {
                self.pair(g, 0)?;
                let nh = self.factors[1].n();
                Ok(VertexSet::from_iter(n, (g * nh)..((g + 1) * nh)))
            }
            Layer::Copy { copy } => {
                self.base(copy)?;
                let off = self.copy_offsets[copy];
                Ok(VertexSet::from_iter(n, off..off + self.fiber_factor(copy).n()))
            }
        }
    }

    /// `p_G`: the base coordinate of a pair-product vertex.
    pub fn project_g(&self, v: VertexId) -> Result<VertexId> {
        self.graph.check_vertex(v)?;
        match self.labels[v] {
            ProductVertexLabel::Pair(g, _) => Ok(g),
            _ => Err(Error::WrongProductKind(self.kind.name())),
        }
    }

    /// `p_H`: the fiber coordinate of a pair-product vertex.
    pub fn project_h(&self, v: VertexId) -> Result<VertexId> {
        self.graph.check_vertex(v)?;
        match self.labels[v] {
            ProductVertexLabel::Pair(_, h) => Ok(h),
            _ => Err(Error::WrongProductKind(self.kind.name())),
        }
    }

    /// All base vertices of a corona.
    pub fn base_vertices(&self) -> Result<VertexSet> {
        self.base(0)?;
        Ok(VertexSet::from_iter(self.graph.n(), 0..self.factors[0].n()))
    }
}
