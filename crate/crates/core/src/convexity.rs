//! Convex sets, hulls, exact weakly toll number / hull number, and the
//! structural facts about maximum weakly toll intervals as executable
//! checks.

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::intervals::{interval_unchecked, IntervalKind, PairTable};
use crate::vertex_set::VertexSet;

/// Upper limit on candidate sets examined by the exact searches.
pub const SEARCH_LIMIT: u64 = 50_000_000;

const CHUNK: usize = 1 << 14;

pub fn is_convex(g: &Graph, s: &VertexSet, kind: IntervalKind) -> Result<bool> {
    g.check_set(s)?;
    g.require_connected()?;
    let members = s.to_vec();
    for (i, &u) in members.iter().enumerate() {
        let partners = if kind.is_symmetric() { &members[i + 1..] } else { &members[..] };
        for &v in partners {
            if u != v && !interval_unchecked(g, u, v, kind).is_subset(s) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Least convex superset of `s`, by iterating the interval closure.
pub fn hull(g: &Graph, s: &VertexSet, kind: IntervalKind) -> Result<VertexSet> {
    g.check_set(s)?;
    if s.is_empty() {
        return Err(Error::InvalidSize("hull of the empty set".into()));
    }
    let table = PairTable::build(g, kind)?;
    Ok(hull_with(&table, s))
}

pub fn hull_with(table: &PairTable, s: &VertexSet) -> VertexSet {
    let mut cur = s.clone();
    loop {
        let next = table.closure(&cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// A minimum set together with its size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Invariant {
    pub value: usize,
    pub witness: Vec<VertexId>,
}

/// First `k`-subset of `0..n` in lexicographic order that satisfies
/// `accept`, searched in parallel chunks.
fn first_subset<F>(n: usize, k: usize, accept: F) -> Option<Vec<VertexId>>
where
    F: Fn(&[VertexId]) -> bool + Sync,
{
    let mut combos = (0..n).combinations(k);
    loop {
        let chunk: Vec<Vec<VertexId>> = combos.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            return None;
        }
        if let Some(i) = chunk.par_iter().position_first(|c| accept(c)) {
            return Some(chunk[i].clone());
        }
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k as u64).fold(1u64, |acc, i| acc.saturating_mul(n as u64 - i) / (i + 1))
}

fn search<F>(g: &Graph, from: usize, accept: F) -> Result<Invariant>
where
    F: Fn(&[VertexId]) -> bool + Sync,
{
    let n = g.n();
    let mut examined = 0u64;
    for k in from..=n {
        examined = examined.saturating_add(binomial(n, k));
        if examined > SEARCH_LIMIT {
            return Err(Error::Infeasible(format!(
                "more than {SEARCH_LIMIT} candidate sets on {n} vertices"
            )));
        }
        if let Some(witness) = first_subset(n, k, &accept) {
            return Ok(Invariant { value: k, witness });
        }
    }
    unreachable!("the full vertex set always qualifies")
}

/// Exact weakly toll number with the lexicographically least witness.
pub fn wtn(g: &Graph) -> Result<Invariant> {
    g.require_connected_nontrivial()?;
    let table = PairTable::build(g, IntervalKind::WeaklyToll)?;
    wtn_with(g, &table)
}

pub fn wtn_with(g: &Graph, table: &PairTable) -> Result<Invariant> {
    search(g, 2, |c| table.covers_all(c))
}

/// Exact weakly toll hull number with the lexicographically least witness.
pub fn wth(g: &Graph) -> Result<Invariant> {
    g.require_connected_nontrivial()?;
    let table = PairTable::build(g, IntervalKind::WeaklyToll)?;
    wth_with(g, &table)
}

pub fn wth_with(g: &Graph, table: &PairTable) -> Result<Invariant> {
    let n = g.n();
    search(g, 2, |c| hull_with(table, &VertexSet::from_iter(n, c.iter().copied())).is_full())
}

/// A weakly toll interval with the sets it misses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalReport {
    pub u: VertexId,
    pub v: VertexId,
    pub interval: VertexSet,
    /// `V \ interval`
    pub outside: VertexSet,
    /// `N[u] \ interval`
    pub outside_u: VertexSet,
    /// `N[v] \ interval`
    pub outside_v: VertexSet,
    pub is_maximum: bool,
}

fn report(g: &Graph, u: VertexId, v: VertexId, interval: VertexSet, is_maximum: bool) -> IntervalReport {
    let mut nu = g.row(u).clone();
    nu.insert(u);
    let mut nv = g.row(v).clone();
    nv.insert(v);
    IntervalReport {
        u,
        v,
        outside: interval.complement(),
        outside_u: nu.difference(&interval),
        outside_v: nv.difference(&interval),
        interval,
        is_maximum,
    }
}

pub fn interval_report(g: &Graph, u: VertexId, v: VertexId) -> Result<IntervalReport> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let table = PairTable::build(g, IntervalKind::WeaklyToll)?;
    let best = table.pairs().map(|(a, b)| table.get(a, b).len()).max().unwrap_or(1);
    let interval = table.get(u, v).clone();
    let is_max = interval.len() == best;
    Ok(report(g, u, v, interval, is_max))
}

/// Every pair `u < v` whose weakly toll interval has maximum size.
pub fn maximum_interval_pairs(g: &Graph) -> Result<Vec<IntervalReport>> {
    g.require_admissible()?;
    let table = PairTable::build(g, IntervalKind::WeaklyToll)?;
    Ok(maximum_pairs_with(g, &table))
}

pub fn maximum_pairs_with(g: &Graph, table: &PairTable) -> Vec<IntervalReport> {
    let best = table.pairs().map(|(a, b)| table.get(a, b).len()).max().unwrap_or(0);
    table
        .pairs()
        .filter(|&(a, b)| table.get(a, b).len() == best)
        .map(|(a, b)| report(g, a, b, table.get(a, b).clone(), true))
        .collect()
}

/// For non-adjacent `u, v`, a vertex outside `N[u] ∪ N[v]` with a neighbor
/// in the interval interior lies in the interval. Returns whether this
/// holds for every non-adjacent pair.
pub fn check_neighbor_extension(g: &Graph) -> Result<bool> {
    g.require_connected()?;
    let table = PairTable::build(g, IntervalKind::WeaklyToll)?;
    Ok(neighbor_extension_with(g, &table))
}

pub fn neighbor_extension_with(g: &Graph, table: &PairTable) -> bool {
    g.non_edges().all(|(u, v)| {
        let wt = table.get(u, v);
        let mut inner = wt.clone();
        inner.remove(u);
        inner.remove(v);
        let mut near = g.row(u).union(g.row(v));
        near.insert(u);
        near.insert(v);
        near.complement()
            .iter()
            .all(|x| !g.row(x).intersects(&inner) || wt.contains(x))
    })
}

/// At every maximum pair with non-adjacent ends, the missed vertices split
/// disjointly into those near `u` and those near `v`.
pub fn check_max_interval_decomposition(g: &Graph) -> Result<bool> {
    g.require_admissible()?;
    let table = PairTable::build(g, IntervalKind::WeaklyToll)?;
    Ok(max_decomposition_with(g, &table))
}

pub fn max_decomposition_with(g: &Graph, table: &PairTable) -> bool {
    maximum_pairs_with(g, table)
        .iter()
        .filter(|r| !g.has_edge(r.u, r.v))
        .all(|r| r.outside_u.is_disjoint(&r.outside_v) && r.outside == r.outside_u.union(&r.outside_v))
}

/// `wtn(G) > 2` exactly when every maximum non-adjacent pair misses some
/// vertex of `N[u] ∪ N[v]`.
pub fn check_wtn_two_criterion(g: &Graph) -> Result<bool> {
    g.require_admissible()?;
    let table = PairTable::build(g, IntervalKind::WeaklyToll)?;
    let number = wtn_with(g, &table)?.value;
    Ok(wtn_two_criterion_with(g, &table, number))
}

pub fn wtn_two_criterion_with(g: &Graph, table: &PairTable, wtn: usize) -> bool {
    let pairs = maximum_pairs_with(g, table);
    // adjacent pairs have 2-vertex intervals, non-adjacent ones at least 3
    assert!(
        pairs.iter().all(|r| !g.has_edge(r.u, r.v)),
        "maximum weakly toll interval attained by an adjacent pair in a non-complete graph"
    );
    let all_miss_near = pairs
        .iter()
        .all(|r| !r.outside_u.union(&r.outside_v).is_empty());
    (wtn > 2) == all_miss_near
}
