//! Walk-based intervals: weakly toll, semi weakly toll, toll, monophonic
//! and geodesic.
//!
//! The three walk intervals reduce to connectivity questions once the
//! hub vertices are fixed. For a weakly toll walk between non-adjacent `u`
//! and `v`, every interior vertex adjacent to `u` is the hub `a = w_1` and
//! every one adjacent to `v` is the hub `b = w_{k-1}`. Revisits of `u` or
//! `v` only bounce off these hubs, so the walk is a walk from `a` to `b`
//! inside `G - ((N[u] ∪ N[v]) \ {a, b})`. A hub adjacent to both ends
//! forces `a = b`. The remaining graph `R = G - (N[u] ∪ N[v])` is shared
//! by all hub choices, so its components are computed once per pair.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::graph::{Graph, VertexId};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IntervalKind {
    WeaklyToll,
    /// Ordered: only the source end is restricted.
    SemiWeaklyToll,
    Toll,
    Monophonic,
    Geodesic,
}

impl IntervalKind {
    pub const ALL: [IntervalKind; 5] = [
        IntervalKind::WeaklyToll,
        IntervalKind::SemiWeaklyToll,
        IntervalKind::Toll,
        IntervalKind::Monophonic,
        IntervalKind::Geodesic,
    ];

    pub fn is_symmetric(self) -> bool {
        self != IntervalKind::SemiWeaklyToll
    }

    pub fn short_name(self) -> &'static str {
        match self {
            IntervalKind::WeaklyToll => "wt",
            IntervalKind::SemiWeaklyToll => "swt",
            IntervalKind::Toll => "toll",
            IntervalKind::Monophonic => "mono",
            IntervalKind::Geodesic => "geo",
        }
    }
}

impl fmt::Display for IntervalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for IntervalKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        IntervalKind::ALL
            .into_iter()
            .find(|k| k.short_name() == s)
            .ok_or_else(|| format!("unknown interval kind {s:?} (expected wt, swt, toll, mono or geo)"))
    }
}

fn check_pair(g: &Graph, u: VertexId, v: VertexId) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    g.require_connected()
}

/// Components of `G - removed` plus, for every vertex, the set of those
/// components it has a neighbor in.
struct Pruned {
    comps: Vec<VertexSet>,
    comp_of: Vec<Option<usize>>,
}

impl Pruned {
    fn new(g: &Graph, removed: &VertexSet) -> Pruned {
        let comps = g.components_within(&removed.complement());
        let mut comp_of = vec![None; g.n()];
        for (i, c) in comps.iter().enumerate() {
            for x in c.iter() {
                comp_of[x] = Some(i);
            }
        }
        Pruned { comps, comp_of }
    }

    fn touching(&self, g: &Graph, x: VertexId) -> VertexSet {
        VertexSet::from_iter(
            self.comps.len(),
            g.adjacent(x).iter().filter_map(|&y| self.comp_of[y]),
        )
    }

    fn absorb(&self, into: &mut VertexSet, touched: &VertexSet) {
        for c in touched.iter() {
            into.union_with(&self.comps[c]);
        }
    }
}

fn closed(g: &Graph, v: VertexId) -> VertexSet {
    let mut s = g.row(v).clone();
    s.insert(v);
    s
}

pub fn weakly_toll_interval(g: &Graph, u: VertexId, v: VertexId) -> Result<VertexSet> {
    check_pair(g, u, v)?;
    Ok(weakly_toll_unchecked(g, u, v))
}

pub(crate) fn weakly_toll_unchecked(g: &Graph, u: VertexId, v: VertexId) -> VertexSet {
    let n = g.n();
    if u == v {
        return VertexSet::singleton(n, u);
    }
    let mut out = VertexSet::from_iter(n, [u, v]);
    if g.has_edge(u, v) {
        return out;
    }
    let pruned = Pruned::new(g, &closed(g, u).union(&closed(g, v)));
    let (nu, nv) = (g.row(u), g.row(v));

    for c in nu.intersection(nv).iter() {
        out.insert(c);
        pruned.absorb(&mut out, &pruned.touching(g, c));
    }

    let only_u: Vec<_> = nu.difference(nv).iter().map(|a| (a, pruned.touching(g, a))).collect();
    let only_v: Vec<_> = nv.difference(nu).iter().map(|b| (b, pruned.touching(g, b))).collect();
    for (a, ta) in &only_u {
        for (b, tb) in &only_v {
            if g.has_edge(*a, *b) || ta.intersects(tb) {
                out.insert(*a);
                out.insert(*b);
                pruned.absorb(&mut out, ta);
                pruned.absorb(&mut out, tb);
            }
        }
    }
    out
}

/// Vertices on walks from `u` to `v` where only `u` is restricted: every
/// walk vertex adjacent to `u` must be the first hub. Applied verbatim to
/// adjacent endpoints this forces the hub to be `v` itself, and the walk
/// may still leave `v` through vertices not adjacent to `u`.
pub fn semi_weakly_toll_interval(g: &Graph, u: VertexId, v: VertexId) -> Result<VertexSet> {
    check_pair(g, u, v)?;
    Ok(semi_weakly_toll_unchecked(g, u, v))
}

pub(crate) fn semi_weakly_toll_unchecked(g: &Graph, u: VertexId, v: VertexId) -> VertexSet {
    let n = g.n();
    if u == v {
        return VertexSet::singleton(n, u);
    }
    let pruned = Pruned::new(g, &closed(g, u));
    let mut out = VertexSet::singleton(n, u);
    if g.has_edge(u, v) {
        out.insert(v);
        pruned.absorb(&mut out, &pruned.touching(g, v));
        return out;
    }
    let target = pruned.comp_of[v].expect("v survives when not adjacent to u");
    for a in g.row(u).iter() {
        let ta = pruned.touching(g, a);
        if ta.contains(target) {
            out.insert(a);
            pruned.absorb(&mut out, &ta);
        }
    }
    out
}

/// Toll interval. Each hub occurs exactly once, so interior vertices lie in
/// `R = G - (N[u] ∪ N[v])` and the walk enters and leaves `R` once.
pub fn toll_interval(g: &Graph, u: VertexId, v: VertexId) -> Result<VertexSet> {
    check_pair(g, u, v)?;
    Ok(toll_unchecked(g, u, v))
}

pub(crate) fn toll_unchecked(g: &Graph, u: VertexId, v: VertexId) -> VertexSet {
    let n = g.n();
    if u == v {
        return VertexSet::singleton(n, u);
    }
    let mut out = VertexSet::from_iter(n, [u, v]);
    if g.has_edge(u, v) {
        return out;
    }
    let (nu, nv) = (g.row(u), g.row(v));
    out.union_with(&nu.intersection(nv));

    let pruned = Pruned::new(g, &closed(g, u).union(&closed(g, v)));
    let only_u: Vec<_> = nu.difference(nv).iter().map(|a| (a, pruned.touching(g, a))).collect();
    let only_v: Vec<_> = nv.difference(nu).iter().map(|b| (b, pruned.touching(g, b))).collect();

    // walks u, a, b, v
    for (a, _) in &only_u {
        for (b, _) in &only_v {
            if g.has_edge(*a, *b) {
                out.insert(*a);
                out.insert(*b);
            }
        }
    }
    // walks u, a, (walk inside one component C), b, v
    for (ci, comp) in pruned.comps.iter().enumerate() {
        let entries: Vec<_> = only_u.iter().filter(|(_, t)| t.contains(ci)).collect();
        let exits: Vec<_> = only_v.iter().filter(|(_, t)| t.contains(ci)).collect();
        if entries.is_empty() || exits.is_empty() {
            continue;
        }
        out.union_with(comp);
        for (x, _) in entries.into_iter().chain(exits) {
            out.insert(*x);
        }
    }
    out
}

/// Union of all induced `u`-`v` paths, by depth-first enumeration.
pub fn monophonic_interval(g: &Graph, u: VertexId, v: VertexId) -> Result<VertexSet> {
    check_pair(g, u, v)?;
    Ok(monophonic_unchecked(g, u, v))
}

pub(crate) fn monophonic_unchecked(g: &Graph, u: VertexId, v: VertexId) -> VertexSet {
    let n = g.n();
    let mut out = VertexSet::from_iter(n, [u, v]);
    if u == v || g.has_edge(u, v) {
        return out;
    }
    let mut path = vec![u];
    // closed neighborhoods of every path vertex except the last
    let mut blocked = vec![VertexSet::empty(n)];
    extend_induced(g, v, &mut path, &mut blocked, &mut out);
    out
}

fn extend_induced(
    g: &Graph,
    target: VertexId,
    path: &mut Vec<VertexId>,
    blocked: &mut Vec<VertexSet>,
    out: &mut VertexSet,
) {
    let last = *path.last().unwrap();
    let mut forbidden = blocked.last().unwrap().clone();
    forbidden.union_with(&closed(g, last));
    if g.has_edge(last, target) {
        for &p in path.iter() {
            out.insert(p);
        }
        return;
    }
    for &w in g.adjacent(last) {
        if blocked.last().unwrap().contains(w) || path.contains(&w) {
            continue;
        }
        // the rest of the path must avoid N[p] for all p up to `last`
        let mut alive = forbidden.complement();
        alive.insert(w);
        if forbidden.contains(target) || !g.component_of(w, &alive).contains(target) {
            continue;
        }
        path.push(w);
        blocked.push(forbidden.clone());
        extend_induced(g, target, path, blocked, out);
        blocked.pop();
        path.pop();
    }
}

/// Union of all shortest `u`-`v` paths.
pub fn geodesic_interval(g: &Graph, u: VertexId, v: VertexId) -> Result<VertexSet> {
    check_pair(g, u, v)?;
    Ok(geodesic_unchecked(g, u, v))
}

pub(crate) fn geodesic_unchecked(g: &Graph, u: VertexId, v: VertexId) -> VertexSet {
    let du = g.distances_from(u);
    let dv = g.distances_from(v);
    let d = du[v].expect("connected");
    VertexSet::from_iter(
        g.n(),
        g.vertices().filter(|&x| du[x].unwrap() + dv[x].unwrap() == d),
    )
}

pub fn interval(g: &Graph, u: VertexId, v: VertexId, kind: IntervalKind) -> Result<VertexSet> {
    check_pair(g, u, v)?;
    Ok(interval_unchecked(g, u, v, kind))
}

pub(crate) fn interval_unchecked(g: &Graph, u: VertexId, v: VertexId, kind: IntervalKind) -> VertexSet {
    match kind {
        IntervalKind::WeaklyToll => weakly_toll_unchecked(g, u, v),
        IntervalKind::SemiWeaklyToll => semi_weakly_toll_unchecked(g, u, v),
        IntervalKind::Toll => toll_unchecked(g, u, v),
        IntervalKind::Monophonic => monophonic_unchecked(g, u, v),
        IntervalKind::Geodesic => geodesic_unchecked(g, u, v),
    }
}

/// Union of the intervals between all pairs of `s` (ordered pairs for the
/// semi weakly toll kind).
pub fn interval_closure(g: &Graph, s: &VertexSet, kind: IntervalKind) -> Result<VertexSet> {
    g.check_set(s)?;
    g.require_connected()?;
    let members = s.to_vec();
    let mut out = s.clone();
    for (i, &u) in members.iter().enumerate() {
        let partners = if kind.is_symmetric() { &members[i + 1..] } else { &members[..] };
        for &v in partners {
            if u != v {
                out.union_with(&interval_unchecked(g, u, v, kind));
            }
        }
    }
    Ok(out)
}

pub fn is_weakly_toll_set(g: &Graph, s: &VertexSet) -> Result<bool> {
    Ok(interval_closure(g, s, IntervalKind::WeaklyToll)?.is_full())
}

/// All pairwise intervals of one kind, computed up front so closures and
/// subset searches become bitset unions.
#[derive(Debug, Clone)]
pub struct PairTable {
    n: usize,
    kind: IntervalKind,
    cells: Vec<VertexSet>,
}

impl PairTable {
    pub fn build(g: &Graph, kind: IntervalKind) -> Result<PairTable> {
        g.require_connected()?;
        let n = g.n();
        let cells = (0..n * n)
            .into_par_iter()
            .map(|idx| {
                let (u, v) = (idx / n, idx % n);
                if kind.is_symmetric() && v < u {
                    VertexSet::empty(0)
                } else {
                    interval_unchecked(g, u, v, kind)
                }
            })
            .collect();
        Ok(PairTable { n, kind, cells })
    }

    pub fn kind(&self) -> IntervalKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> &VertexSet {
        if self.kind.is_symmetric() && v < u {
            &self.cells[v * self.n + u]
        } else {
            &self.cells[u * self.n + v]
        }
    }

    pub fn closure(&self, s: &VertexSet) -> VertexSet {
        let members = s.to_vec();
        let mut out = s.clone();
        for (i, &u) in members.iter().enumerate() {
            let partners = if self.kind.is_symmetric() { &members[i + 1..] } else { &members[..] };
            for &v in partners {
                out.union_with(self.get(u, v));
            }
        }
        out
    }

    /// Like [`closure`](Self::closure) for a sorted slice, stopping early
    /// once the whole vertex set is covered.
    pub fn covers_all(&self, members: &[VertexId]) -> bool {
        let mut out = VertexSet::from_iter(self.n, members.iter().copied());
        for (i, &u) in members.iter().enumerate() {
            let partners = if self.kind.is_symmetric() { &members[i + 1..] } else { members };
            for &v in partners {
                out.union_with(self.get(u, v));
                if out.is_full() {
                    return true;
                }
            }
        }
        out.is_full()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let n = self.n;
        let sym = self.kind.is_symmetric();
        (0..n).flat_map(move |u| {
            let start = if sym { u + 1 } else { 0 };
            (start..n).filter(move |&v| v != u).map(move |v| (u, v))
        })
    }
}
