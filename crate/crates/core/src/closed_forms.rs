//! Closed-form predictions for intervals and invariants of graph products.
//!
//! Each function evaluates a formula in terms of factor-level intervals and
//! returns a [`Prediction`]. Formulas are only claimed under hypotheses on
//! the factors (connected, non-trivial, non-complete, non-adjacent ends);
//! when those fail the prediction is marked as skipped with the reason and
//! carries no claim.

use serde::Serialize;

use crate::convexity;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::intervals::{semi_weakly_toll_interval, weakly_toll_interval};
use crate::products::{Layer, ProductGraph, ProductKind};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    Interval,
    Wtn,
    Wth,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    Set(VertexSet),
    Exactly(usize),
    AtMost(usize),
}

impl Claim {
    pub fn holds_for_set(&self, observed: &VertexSet) -> bool {
        matches!(self, Claim::Set(s) if s == observed)
    }

    pub fn holds_for_number(&self, observed: usize) -> bool {
        match self {
            Claim::Exactly(k) => observed == *k,
            Claim::AtMost(k) => observed <= *k,
            Claim::Set(_) => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub target: Target,
    /// The formula being evaluated.
    pub statement: &'static str,
    pub claim: Option<Claim>,
    /// Why the formula does not apply, when it does not.
    pub skipped: Option<String>,
    /// Evaluated outside the hypotheses the formula was stated for (adjacent
    /// base vertices in the mixed corona case).
    pub extension: bool,
}

impl Prediction {
    fn claim(target: Target, statement: &'static str, claim: Claim) -> Prediction {
        Prediction {
            target,
            statement,
            claim: Some(claim),
            skipped: None,
            extension: false,
        }
    }

    fn skip(target: Target, statement: &'static str, reason: impl Into<String>) -> Prediction {
        Prediction {
            target,
            statement,
            claim: None,
            skipped: Some(reason.into()),
            extension: false,
        }
    }

    pub fn applicable(&self) -> bool {
        self.claim.is_some()
    }

    pub fn set(&self) -> Option<&VertexSet> {
        match &self.claim {
            Some(Claim::Set(s)) => Some(s),
            _ => None,
        }
    }
}

pub const LEX_SAME_LAYER: &str =
    "WT((g,h1),(g,h2)) = V \\ {(g,x) : x ∉ WT_H(h1,h2), x adjacent to exactly one of h1, h2}";
pub const LEX_CROSS_LAYER: &str =
    "WT((g1,h1),(g2,h2)) = WT_G(g1,g2) × V(H) \\ (N_{g1H}((g1,h1)) ∪ N_{g2H}((g2,h2)))";
pub const LEX_WTN: &str = "wtn(G[H]) = 2 if wtn(H) = 2, else 3";
pub const LEX_WTH: &str = "wth(G[H]) = 2";
pub const CORONA_SAME_COPY: &str =
    "WT(h1^i,h2^i) = V \\ {x ∈ V(H^i) : x ∉ WT_{H^i}(h1^i,h2^i), x adjacent to exactly one of them}";
pub const CORONA_CROSS_COPIES: &str = "WT(h_k^i,h_l^j) = V \\ (N_{H^i}(h_k^i) ∪ N_{H^j}(h_l^j)), i ≠ j";
pub const CORONA_BASE_PAIR: &str =
    "WT(g_i,g_j) = WT_G(g_i,g_j) ∪ ⋃ {V(H^k) : k ≠ i,j, g_k ∈ WT_G(g_i,g_j)}";
pub const CORONA_MIXED: &str =
    "WT(g_i,h_k^j) = {g_i,h_k^i} if i = j, else {g_i,g_j} ∪ (V(H^j) \\ N(h_k^j)) ∪ ⋃_{x ∈ SWT_G(g_i,g_j) \\ {g_i,g_j}} ({x} ∪ V(H^x))";
pub const CORONA_WTN: &str = "wtn(G∘H) = 2 if wtn(H) = 2, else 3";
pub const CORONA_WTH: &str = "wth(G∘H) = 2";
pub const GCORONA_WTN: &str =
    "wtn(G∘∧H_i) = 2 if some non-complete H_i has wtn 2, else ≤ 3 if some H_i is non-complete";
pub const CARTESIAN_WTN: &str = "wtn(G□H) = 2";
pub const STRONG_WTN: &str = "wtn(G⊠H) ≤ 3";

fn admissible(g: &Graph, name: &str) -> std::result::Result<(), String> {
    g.require_admissible().map_err(|e| format!("{name}: {e}"))
}

fn expect_kind(p: &ProductGraph, kind: ProductKind) -> Result<()> {
    if p.kind == kind {
        Ok(())
    } else {
        Err(Error::WrongProductKind(p.kind.name()))
    }
}

fn factors(p: &ProductGraph) -> (&Graph, &Graph) {
    (&p.factors[0], &p.factors[1])
}

fn non_adjacent(g: &Graph, a: VertexId, b: VertexId, what: &str) -> std::result::Result<(), String> {
    if a == b {
        Err(format!("{what}: endpoints coincide"))
    } else if g.has_edge(a, b) {
        Err(format!("{what}: endpoints adjacent"))
    } else {
        Ok(())
    }
}

/// Vertices of `h`'s graph adjacent to exactly one of `a`, `b` and outside
/// `WT(a, b)`.
fn missed_near_ends(h: &Graph, a: VertexId, b: VertexId) -> Result<Vec<VertexId>> {
    let wt = weakly_toll_interval(h, a, b)?;
    Ok(h.vertices()
        .filter(|&x| !wt.contains(x) && (h.has_edge(x, a) != h.has_edge(x, b)))
        .collect())
}

pub fn lex_interval_same_layer(p: &ProductGraph, g: VertexId, h1: VertexId, h2: VertexId) -> Result<Prediction> {
    expect_kind(p, ProductKind::Lexicographic)?;
    p.pair(g, h1)?;
    p.pair(g, h2)?;
    let (gf, hf) = factors(p);
    let check = admissible(gf, "G")
        .and_then(|_| admissible(hf, "H"))
        .and_then(|_| non_adjacent(hf, h1, h2, "h1, h2"));
    if let Err(reason) = check {
        return Ok(Prediction::skip(Target::Interval, LEX_SAME_LAYER, reason));
    }
    let mut value = VertexSet::full(p.graph.n());
    for x in missed_near_ends(hf, h1, h2)? {
        value.remove(p.pair(g, x)?);
    }
    Ok(Prediction::claim(Target::Interval, LEX_SAME_LAYER, Claim::Set(value)))
}

pub fn lex_interval_cross_layer(
    p: &ProductGraph,
    g1: VertexId,
    h1: VertexId,
    g2: VertexId,
    h2: VertexId,
) -> Result<Prediction> {
    expect_kind(p, ProductKind::Lexicographic)?;
    p.pair(g1, h1)?;
    p.pair(g2, h2)?;
    let (gf, hf) = factors(p);
    let check = admissible(gf, "G")
        .and_then(|_| admissible(hf, "H"))
        .and_then(|_| non_adjacent(gf, g1, g2, "g1, g2"))
        .and_then(|_| {
            if hf.has_edge(h1, h2) {
                Err("h1, h2: endpoints adjacent".to_string())
            } else {
                Ok(())
            }
        });
    if let Err(reason) = check {
        return Ok(Prediction::skip(Target::Interval, LEX_CROSS_LAYER, reason));
    }
    let wt_g = weakly_toll_interval(gf, g1, g2)?;
    let mut value = VertexSet::empty(p.graph.n());
    for g in wt_g.iter() {
        value.union_with(&p.layer(Layer::H { g })?);
    }
    for &x in hf.adjacent(h1) {
        value.remove(p.pair(g1, x)?);
    }
    for &x in hf.adjacent(h2) {
        value.remove(p.pair(g2, x)?);
    }
    Ok(Prediction::claim(Target::Interval, LEX_CROSS_LAYER, Claim::Set(value)))
}

fn wtn_dichotomy(g: &Graph, h: &Graph, target_statement: &'static str) -> Result<Prediction> {
    if let Err(reason) = admissible(g, "G").and_then(|_| admissible(h, "H")) {
        return Ok(Prediction::skip(Target::Wtn, target_statement, reason));
    }
    let value = if convexity::wtn(h)?.value == 2 { 2 } else { 3 };
    Ok(Prediction::claim(Target::Wtn, target_statement, Claim::Exactly(value)))
}

fn wth_two(g: &Graph, h: &Graph, statement: &'static str) -> Prediction {
    match admissible(g, "G").and_then(|_| admissible(h, "H")) {
        Ok(()) => Prediction::claim(Target::Wth, statement, Claim::Exactly(2)),
        Err(reason) => Prediction::skip(Target::Wth, statement, reason),
    }
}

pub fn lex_wtn(g: &Graph, h: &Graph) -> Result<Prediction> {
    wtn_dichotomy(g, h, LEX_WTN)
}

pub fn lex_wth(g: &Graph, h: &Graph) -> Prediction {
    wth_two(g, h, LEX_WTH)
}

fn corona_factors_admissible(p: &ProductGraph) -> std::result::Result<(), String> {
    let (gf, hf) = factors(p);
    admissible(gf, "G").and_then(|_| admissible(hf, "H"))
}

pub fn corona_interval_same_copy(p: &ProductGraph, i: usize, h1: VertexId, h2: VertexId) -> Result<Prediction> {
    expect_kind(p, ProductKind::Corona)?;
    p.copy_vertex(i, h1)?;
    p.copy_vertex(i, h2)?;
    let hf = &p.factors[1];
    let check = corona_factors_admissible(p).and_then(|_| non_adjacent(hf, h1, h2, "h1, h2"));
    if let Err(reason) = check {
        return Ok(Prediction::skip(Target::Interval, CORONA_SAME_COPY, reason));
    }
    let mut value = VertexSet::full(p.graph.n());
    for x in missed_near_ends(hf, h1, h2)? {
        value.remove(p.copy_vertex(i, x)?);
    }
    Ok(Prediction::claim(Target::Interval, CORONA_SAME_COPY, Claim::Set(value)))
}

pub fn corona_interval_cross_copies(p: &ProductGraph, i: usize, k: VertexId, j: usize, l: VertexId) -> Result<Prediction> {
    expect_kind(p, ProductKind::Corona)?;
    p.copy_vertex(i, k)?;
    p.copy_vertex(j, l)?;
    let check = corona_factors_admissible(p).and_then(|_| {
        if i == j {
            Err("i, j: same copy".to_string())
        } else {
            Ok(())
        }
    });
    if let Err(reason) = check {
        return Ok(Prediction::skip(Target::Interval, CORONA_CROSS_COPIES, reason));
    }
    let hf = &p.factors[1];
    let mut value = VertexSet::full(p.graph.n());
    for &x in hf.adjacent(k) {
        value.remove(p.copy_vertex(i, x)?);
    }
    for &x in hf.adjacent(l) {
        value.remove(p.copy_vertex(j, x)?);
    }
    Ok(Prediction::claim(Target::Interval, CORONA_CROSS_COPIES, Claim::Set(value)))
}

pub fn corona_interval_base_pair(p: &ProductGraph, i: usize, j: usize) -> Result<Prediction> {
    expect_kind(p, ProductKind::Corona)?;
    p.base(i)?;
    p.base(j)?;
    let check = corona_factors_admissible(p).and_then(|_| {
        if i == j {
            Err("i, j: same base vertex".to_string())
        } else {
            Ok(())
        }
    });
    if let Err(reason) = check {
        return Ok(Prediction::skip(Target::Interval, CORONA_BASE_PAIR, reason));
    }
    let wt_g = weakly_toll_interval(&p.factors[0], i, j)?;
    let mut value = VertexSet::from_iter(p.graph.n(), wt_g.iter().map(|x| p.base(x).unwrap()));
    for k in wt_g.iter().filter(|&k| k != i && k != j) {
        value.union_with(&p.layer(Layer::Copy { copy: k })?);
    }
    Ok(Prediction::claim(Target::Interval, CORONA_BASE_PAIR, Claim::Set(value)))
}

/// `WT(g_i, h_k^j)`. For adjacent `g_i, g_j` the semi weakly toll interval
/// is taken with its walk conditions applied verbatim; such predictions are
/// flagged as extensions.
pub fn corona_interval_mixed(p: &ProductGraph, i: usize, j: usize, k: VertexId) -> Result<Prediction> {
    expect_kind(p, ProductKind::Corona)?;
    p.base(i)?;
    p.copy_vertex(j, k)?;
    if let Err(reason) = corona_factors_admissible(p) {
        return Ok(Prediction::skip(Target::Interval, CORONA_MIXED, reason));
    }
    let n = p.graph.n();
    if i == j {
        let value = VertexSet::from_iter(n, [p.base(i)?, p.copy_vertex(i, k)?]);
        return Ok(Prediction::claim(Target::Interval, CORONA_MIXED, Claim::Set(value)));
    }
    let (gf, hf) = factors(p);
    let swt = semi_weakly_toll_interval(gf, i, j)?;
    let mut value = VertexSet::from_iter(n, [p.base(i)?, p.base(j)?]);
    value.union_with(&p.layer(Layer::Copy { copy: j })?);
    for &x in hf.adjacent(k) {
        value.remove(p.copy_vertex(j, x)?);
    }
    for x in swt.iter().filter(|&x| x != i && x != j) {
        value.insert(p.base(x)?);
        value.union_with(&p.layer(Layer::Copy { copy: x })?);
    }
    let mut pred = Prediction::claim(Target::Interval, CORONA_MIXED, Claim::Set(value));
    pred.extension = gf.has_edge(i, j);
    Ok(pred)
}

pub fn corona_wtn(g: &Graph, h: &Graph) -> Result<Prediction> {
    wtn_dichotomy(g, h, CORONA_WTN)
}

pub fn corona_wth(g: &Graph, h: &Graph) -> Prediction {
    wth_two(g, h, CORONA_WTH)
}

pub fn generalized_corona_wtn(g: &Graph, hs: &[Graph]) -> Result<Prediction> {
    if hs.len() != g.n() {
        return Err(Error::FactorCount {
            expected: g.n(),
            got: hs.len(),
        });
    }
    if let Err(e) = g.require_connected_nontrivial() {
        return Ok(Prediction::skip(Target::Wtn, GCORONA_WTN, format!("G: {e}")));
    }
    let mut some_non_complete = false;
    for h in hs {
        if h.require_admissible().is_ok() {
            some_non_complete = true;
            if convexity::wtn(h)?.value == 2 {
                return Ok(Prediction::claim(Target::Wtn, GCORONA_WTN, Claim::Exactly(2)));
            }
        }
    }
    if some_non_complete {
        Ok(Prediction::claim(Target::Wtn, GCORONA_WTN, Claim::AtMost(3)))
    } else {
        Ok(Prediction::skip(Target::Wtn, GCORONA_WTN, "no connected non-complete H_i"))
    }
}

pub fn cartesian_wtn(g: &Graph, h: &Graph) -> Prediction {
    let check = g
        .require_connected_nontrivial()
        .map_err(|e| format!("G: {e}"))
        .and_then(|_| h.require_connected_nontrivial().map_err(|e| format!("H: {e}")));
    match check {
        Ok(()) => Prediction::claim(Target::Wtn, CARTESIAN_WTN, Claim::Exactly(2)),
        Err(reason) => Prediction::skip(Target::Wtn, CARTESIAN_WTN, reason),
    }
}

pub fn strong_wtn_bound(g: &Graph, h: &Graph) -> Prediction {
    match admissible(g, "G").and_then(|_| admissible(h, "H")) {
        Ok(()) => Prediction::claim(Target::Wtn, STRONG_WTN, Claim::AtMost(3)),
        Err(reason) => Prediction::skip(Target::Wtn, STRONG_WTN, reason),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_graph, cycle_graph, path_graph, two_clique_bridge};
    use crate::intervals::weakly_toll_interval;
    use crate::products::{corona, lexicographic};

    #[test]
    fn lex_same_layer_examples() {
        let p3 = path_graph(3).unwrap();
        let lex = lexicographic(&p3, &p3);
        let pred = lex_interval_same_layer(&lex, 1, 0, 2).unwrap();
        assert!(pred.set().unwrap().is_full());

        let bridge = two_clique_bridge(3).unwrap();
        let lex = lexicographic(&p3, &bridge);
        let pred = lex_interval_same_layer(&lex, 0, 1, 5).unwrap();
        let missing = pred.set().unwrap().complement().to_vec();
        assert_eq!(missing, vec![lex.pair(0, 2).unwrap(), lex.pair(0, 6).unwrap()]);
        let observed = weakly_toll_interval(&lex.graph, lex.pair(0, 1).unwrap(), lex.pair(0, 5).unwrap()).unwrap();
        assert!(pred.claim.as_ref().unwrap().holds_for_set(&observed));

        let skipped = lex_interval_same_layer(&lex, 0, 0, 1).unwrap();
        assert!(!skipped.applicable());
        assert!(lex_interval_same_layer(&corona(&p3, &p3), 0, 0, 2).is_err());
    }

    #[test]
    fn lex_cross_layer_example() {
        let p3 = path_graph(3).unwrap();
        let lex = lexicographic(&p3, &p3);
        let pred = lex_interval_cross_layer(&lex, 0, 0, 2, 0).unwrap();
        // everything except the layer neighbors (0,1) and (2,1)
        let missing = pred.set().unwrap().complement().to_vec();
        assert_eq!(missing, vec![lex.pair(0, 1).unwrap(), lex.pair(2, 1).unwrap()]);
        let observed = weakly_toll_interval(&lex.graph, lex.pair(0, 0).unwrap(), lex.pair(2, 0).unwrap()).unwrap();
        assert_eq!(pred.set().unwrap(), &observed);
    }

    #[test]
    fn corona_examples() {
        let p3 = path_graph(3).unwrap();
        let c = corona(&p3, &p3);
        let pred = corona_interval_same_copy(&c, 0, 0, 2).unwrap();
        assert!(pred.set().unwrap().is_full());

        let pred = corona_interval_cross_copies(&c, 0, 0, 1, 0).unwrap();
        let missing = pred.set().unwrap().complement().to_vec();
        assert_eq!(missing, vec![c.copy_vertex(0, 1).unwrap(), c.copy_vertex(1, 1).unwrap()]);

        let pred = corona_interval_base_pair(&c, 0, 2).unwrap();
        let mut expected = VertexSet::from_iter(12, [0, 1, 2]);
        expected.union_with(&c.layer(Layer::Copy { copy: 1 }).unwrap());
        assert_eq!(pred.set().unwrap(), &expected);
        assert_eq!(corona_interval_base_pair(&c, 0, 1).unwrap().set().unwrap().to_vec(), vec![0, 1]);

        let pred = corona_interval_mixed(&c, 0, 2, 1).unwrap();
        let mut expected = VertexSet::from_iter(12, [0, 1, 2, c.copy_vertex(2, 1).unwrap()]);
        expected.union_with(&c.layer(Layer::Copy { copy: 1 }).unwrap());
        assert_eq!(pred.set().unwrap(), &expected);
        let same = corona_interval_mixed(&c, 1, 1, 2).unwrap();
        assert_eq!(same.set().unwrap().to_vec(), vec![1, c.copy_vertex(1, 2).unwrap()]);
        assert!(corona_interval_mixed(&c, 0, 1, 0).unwrap().extension);

        let bridge = two_clique_bridge(3).unwrap();
        let cb = corona(&p3, &bridge);
        let pred = corona_interval_same_copy(&cb, 0, 1, 5).unwrap();
        let missing = pred.set().unwrap().complement().to_vec();
        assert_eq!(missing, vec![cb.copy_vertex(0, 2).unwrap(), cb.copy_vertex(0, 6).unwrap()]);
    }

    #[test]
    fn invariant_predictions() {
        let p3 = path_graph(3).unwrap();
        let bridge = two_clique_bridge(3).unwrap();
        assert_eq!(lex_wtn(&p3, &p3).unwrap().claim, Some(Claim::Exactly(2)));
        assert_eq!(lex_wtn(&p3, &bridge).unwrap().claim, Some(Claim::Exactly(3)));
        assert_eq!(corona_wtn(&p3, &bridge).unwrap().claim, Some(Claim::Exactly(3)));
        assert_eq!(corona_wth(&p3, &bridge).claim, Some(Claim::Exactly(2)));
        assert_eq!(lex_wth(&p3, &p3).claim, Some(Claim::Exactly(2)));
        assert!(!lex_wtn(&complete_graph(3).unwrap(), &p3).unwrap().applicable());

        let k2 = complete_graph(2).unwrap();
        assert_eq!(cartesian_wtn(&k2, &k2).claim, Some(Claim::Exactly(2)));
        assert_eq!(strong_wtn_bound(&p3, &p3).claim, Some(Claim::AtMost(3)));
        assert!(!strong_wtn_bound(&k2, &p3).applicable());

        let k1 = complete_graph(1).unwrap();
        let gc = generalized_corona_wtn(&path_graph(2).unwrap(), &[k1.clone(), p3.clone()]).unwrap();
        assert_eq!(gc.claim, Some(Claim::Exactly(2)));
        let gc = generalized_corona_wtn(&path_graph(2).unwrap(), &[k1.clone(), bridge.clone()]).unwrap();
        assert_eq!(gc.claim, Some(Claim::AtMost(3)));
        let gc = generalized_corona_wtn(&path_graph(2).unwrap(), &[k1.clone(), k2]).unwrap();
        assert!(!gc.applicable());
        assert!(generalized_corona_wtn(&cycle_graph(3).unwrap(), &[k1]).is_err());
        assert!(Claim::AtMost(3).holds_for_number(2));
        assert!(!Claim::Exactly(3).holds_for_number(2));
    }
}
