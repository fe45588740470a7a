//! Brute-force reference implementations that follow the walk definitions
//! literally. Nothing here calls into the interval engines; the only graph
//! query used is `has_edge`.
//!
//! Walks are explored depth first as vertex sequences. The walk conditions
//! only ever compare a new vertex against the two hub identities and the
//! position class (first step or later), so the search memoizes on
//! `(vertex, position class, hubs, remaining budget)` without changing the
//! set of accepted walks.

use std::collections::{HashMap, HashSet};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::intervals::IntervalKind;
use crate::vertex_set::VertexSet;

/// Maximum number of edges in an enumerated walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkBudget {
    max_len: usize,
}

impl WalkBudget {
    pub fn new(max_len: usize) -> Result<WalkBudget> {
        if max_len == 0 {
            return Err(Error::InvalidSize("walk budget must be at least 1".into()));
        }
        Ok(WalkBudget { max_len })
    }

    /// `2n + 2` edges: a witness walk is two hub-to-hub paths of at most
    /// `n - 1` edges each plus the two end edges.
    pub fn default_for(n: usize) -> WalkBudget {
        WalkBudget { max_len: 2 * n + 2 }
    }

    pub fn max_len(self) -> usize {
        self.max_len
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct State {
    at: VertexId,
    /// 0 for the start, 1 for `w_1`, 2 for anything later.
    pos: u8,
    /// `w_1`, once chosen.
    first: Option<VertexId>,
    /// The single vertex adjacent to `v` that the walk may use.
    last: Option<VertexId>,
    /// Toll walks: the previous vertex was adjacent to `v`, so the walk is
    /// over.
    closed: bool,
}

struct Walks<'a> {
    g: &'a Graph,
    u: VertexId,
    v: VertexId,
    kind: IntervalKind,
    memo: HashMap<(State, usize), bool>,
}

impl Walks<'_> {
    fn start(&self) -> State {
        let (u, v) = (self.u, self.v);
        State {
            at: u,
            pos: 0,
            first: None,
            // condition on v covers position 0 as well
            last: (self.kind == IntervalKind::WeaklyToll && self.g.has_edge(u, v)).then_some(u),
            closed: false,
        }
    }

    /// Appends `w` to a walk currently in `s`, checking the defining
    /// conditions for the new position.
    fn step(&self, s: &State, w: VertexId) -> Option<State> {
        let g = self.g;
        let (u, v) = (self.u, self.v);
        if s.closed || !g.has_edge(s.at, w) {
            return None;
        }
        let pos = if s.pos == 0 { 1 } else { 2 };
        let mut next = State {
            at: w,
            pos,
            first: s.first,
            last: s.last,
            closed: false,
        };
        match self.kind {
            IntervalKind::WeaklyToll | IntervalKind::SemiWeaklyToll => {
                if pos == 1 {
                    next.first = Some(w);
                }
                // u w_i ∈ E  ⇒  w_i = w_1
                if g.has_edge(u, w) && next.first != Some(w) {
                    return None;
                }
                // w_i v ∈ E  ⇒  w_i = w_{k-1}
                if self.kind == IntervalKind::WeaklyToll && g.has_edge(w, v) {
                    match next.last {
                        None => next.last = Some(w),
                        Some(x) if x == w => {}
                        Some(_) => return None,
                    }
                }
            }
            IntervalKind::Toll => {
                // u is adjacent only to the second vertex of the walk
                if g.has_edge(u, w) && pos != 1 {
                    return None;
                }
                // v is adjacent only to the second-to-last vertex, so a
                // vertex adjacent to v must be followed by v and nothing else
                if g.has_edge(s.at, v) {
                    if w != v {
                        return None;
                    }
                    next.closed = true;
                }
            }
            _ => unreachable!("oracle only handles walk intervals"),
        }
        Some(next)
    }

    fn successors(&self, s: &State) -> Vec<State> {
        (0..self.g.n()).filter_map(|w| self.step(s, w)).collect()
    }

    fn can_finish(&mut self, s: State, remaining: usize) -> bool {
        if s.at == self.v && s.pos > 0 {
            return true;
        }
        if remaining == 0 {
            return false;
        }
        if let Some(&hit) = self.memo.get(&(s, remaining)) {
            return hit;
        }
        let mut hit = false;
        for t in self.successors(&s) {
            if self.can_finish(t, remaining - 1) {
                hit = true;
                break;
            }
        }
        self.memo.insert((s, remaining), hit);
        hit
    }
}

/// Vertices lying on some walk of at most `budget` edges from `u` to `v`
/// that satisfies the definition of `kind`. For `u = v` this is `{u}`.
pub fn oracle_interval(
    g: &Graph,
    u: VertexId,
    v: VertexId,
    kind: IntervalKind,
    budget: WalkBudget,
) -> Result<VertexSet> {
    if !matches!(
        kind,
        IntervalKind::WeaklyToll | IntervalKind::SemiWeaklyToll | IntervalKind::Toll
    ) {
        return Err(Error::InvalidSize(format!("oracle has no walk definition for {kind}")));
    }
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    g.require_connected()?;
    let n = g.n();
    let mut marked = VertexSet::singleton(n, u);
    if u == v {
        return Ok(marked);
    }
    let mut walks = Walks {
        g,
        u,
        v,
        kind,
        memo: HashMap::new(),
    };
    let max = budget.max_len();
    let mut layer: HashSet<State> = HashSet::from([walks.start()]);
    for len in 0..=max {
        let mut next = HashSet::new();
        for s in &layer {
            if walks.can_finish(*s, max - len) {
                marked.insert(s.at);
                // a walk may pass through v and carry on
                if len < max {
                    next.extend(walks.successors(s));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layer = next;
    }
    Ok(marked)
}

/// Exact weakly toll number by subset enumeration, with the
/// lexicographically least witness.
pub fn oracle_wtn(g: &Graph) -> Result<(usize, VertexSet)> {
    g.require_connected_nontrivial()?;
    let n = g.n();
    let budget = WalkBudget::default_for(n);
    let mut pair = vec![None::<VertexSet>; n * n];
    let mut wt = |a: usize, b: usize| -> VertexSet {
        let key = a.min(b) * n + a.max(b);
        pair[key]
            .get_or_insert_with(|| {
                oracle_interval(g, a, b, IntervalKind::WeaklyToll, budget).expect("validated")
            })
            .clone()
    };
    for k in 2..=n {
        for combo in (0..n).combinations(k) {
            let mut covered = VertexSet::from_iter(n, combo.iter().copied());
            for (i, &a) in combo.iter().enumerate() {
                for &b in &combo[i + 1..] {
                    covered.union_with(&wt(a, b));
                }
            }
            if covered.is_full() {
                return Ok((k, VertexSet::from_iter(n, combo)));
            }
        }
    }
    unreachable!("the whole vertex set is always a weakly toll set")
}

/// Exact weakly toll hull number: iterate the oracle closure to a
/// fixpoint for each candidate set.
pub fn oracle_wth(g: &Graph) -> Result<(usize, VertexSet)> {
    g.require_connected_nontrivial()?;
    let n = g.n();
    for k in 1..=n {
        for combo in (0..n).combinations(k) {
            let s = VertexSet::from_iter(n, combo);
            if oracle_hull(g, &s)?.is_full() {
                return Ok((k, s));
            }
        }
    }
    unreachable!("the whole vertex set is its own hull")
}

/// Least fixpoint of the oracle weakly toll closure containing `s`.
pub fn oracle_hull(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    let budget = WalkBudget::default_for(g.n());
    let mut cur = s.clone();
    loop {
        let members = cur.to_vec();
        let mut next = cur.clone();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                next.union_with(&oracle_interval(g, a, b, IntervalKind::WeaklyToll, budget)?);
            }
        }
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
}
