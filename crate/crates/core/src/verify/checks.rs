use std::collections::BTreeMap;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::closed_forms::{self, Prediction};
use crate::convexity::{
    hull_with, max_decomposition_with, neighbor_extension_with, wth_with, wtn_two_criterion_with, wtn_with,
};
use crate::enumerate::connected_graphs_up_to;
use crate::error::{Error, Result};
use crate::generators::{self, complete_graph, cycle_graph, path_graph, random_connected_graph_with, random_tree_with, star_graph, two_clique_bridge};
use crate::graph::{Graph, VertexId};
use crate::intervals::{interval, weakly_toll_interval, IntervalKind, PairTable};
use crate::io::encode_graph6;
use crate::oracle::{oracle_interval, WalkBudget};
use crate::products::{cartesian, corona, generalized_corona, lexicographic, strong, ProductGraph};
use crate::vertex_set::VertexSet;

use super::{CorpusSpec, Instance, Value, Verdict};

pub(super) fn run(id: &'static str, spec: &CorpusSpec) -> Result<Vec<Verdict>> {
    match id {
        "oracle-wt" => oracle(id, spec, IntervalKind::WeaklyToll),
        "oracle-swt" => oracle(id, spec, IntervalKind::SemiWeaklyToll),
        "oracle-toll" => oracle(id, spec, IntervalKind::Toll),
        "worked-examples" => worked_examples(id, spec),
        "neighbor-extension" => corpus_property(id, spec, |g, table| {
            g.require_connected()?;
            Ok(Some(neighbor_extension_with(g, table)))
        }),
        "max-interval-decomposition" => corpus_property(id, spec, |g, table| {
            if g.require_admissible().is_err() {
                return Ok(None);
            }
            Ok(Some(max_decomposition_with(g, table)))
        }),
        "wtn-two-criterion" => corpus_property(id, spec, |g, table| {
            if g.require_admissible().is_err() {
                return Ok(None);
            }
            let number = wtn_with(g, table)?.value;
            Ok(Some(wtn_two_criterion_with(g, table, number)))
        }),
        "lex-same-layer" => product_intervals(id, spec, |spec, r| {
            let (g, h) = (random_factor(spec, r)?, random_factor(spec, r)?);
            let gi = r.gen_range(0..g.n());
            let (h1, h2) = two_distinct(r, h.n());
            let p = lexicographic(&g, &h);
            let pred = closed_forms::lex_interval_same_layer(&p, gi, h1, h2)?;
            let (u, v) = (p.pair(gi, h1)?, p.pair(gi, h2)?);
            Ok(IntervalJob::new(p, u, v, pred, &[("g", gi), ("h1", h1), ("h2", h2)]))
        }),
        "lex-cross-layer" => product_intervals(id, spec, |spec, r| {
            let (g, h) = (random_factor(spec, r)?, random_factor(spec, r)?);
            let (g1, g2) = two_distinct(r, g.n());
            let (h1, h2) = (r.gen_range(0..h.n()), r.gen_range(0..h.n()));
            let p = lexicographic(&g, &h);
            let pred = closed_forms::lex_interval_cross_layer(&p, g1, h1, g2, h2)?;
            let (u, v) = (p.pair(g1, h1)?, p.pair(g2, h2)?);
            Ok(IntervalJob::new(p, u, v, pred, &[("g1", g1), ("h1", h1), ("g2", g2), ("h2", h2)]))
        }),
        "lex-wtn" => product_invariants(id, spec, Invariant::Wtn, lexicographic, closed_forms::lex_wtn),
        "lex-wth" => product_invariants(id, spec, Invariant::Wth, lexicographic, |g, h| Ok(closed_forms::lex_wth(g, h))),
        "corona-same-copy" => product_intervals(id, spec, |spec, r| {
            let (g, h) = (random_factor(spec, r)?, random_factor(spec, r)?);
            let i = r.gen_range(0..g.n());
            let (h1, h2) = two_distinct(r, h.n());
            let p = corona(&g, &h);
            let pred = closed_forms::corona_interval_same_copy(&p, i, h1, h2)?;
            let (u, v) = (p.copy_vertex(i, h1)?, p.copy_vertex(i, h2)?);
            Ok(IntervalJob::new(p, u, v, pred, &[("i", i), ("h1", h1), ("h2", h2)]))
        }),
        "corona-cross-copies" => product_intervals(id, spec, |spec, r| {
            let (g, h) = (random_factor(spec, r)?, random_factor(spec, r)?);
            let (i, j) = two_distinct(r, g.n());
            let (k, l) = (r.gen_range(0..h.n()), r.gen_range(0..h.n()));
            let p = corona(&g, &h);
            let pred = closed_forms::corona_interval_cross_copies(&p, i, k, j, l)?;
            let (u, v) = (p.copy_vertex(i, k)?, p.copy_vertex(j, l)?);
            Ok(IntervalJob::new(p, u, v, pred, &[("i", i), ("k", k), ("j", j), ("l", l)]))
        }),
        "corona-base-pair" => product_intervals(id, spec, |spec, r| {
            let (g, h) = (random_factor(spec, r)?, random_factor(spec, r)?);
            let (i, j) = two_distinct(r, g.n());
            let p = corona(&g, &h);
            let pred = closed_forms::corona_interval_base_pair(&p, i, j)?;
            let (u, v) = (p.base(i)?, p.base(j)?);
            Ok(IntervalJob::new(p, u, v, pred, &[("i", i), ("j", j)]))
        }),
        "corona-mixed" => product_intervals(id, spec, |spec, r| {
            let (g, h) = (random_factor(spec, r)?, random_factor(spec, r)?);
            let (i, j, k) = (r.gen_range(0..g.n()), r.gen_range(0..g.n()), r.gen_range(0..h.n()));
            let p = corona(&g, &h);
            let pred = closed_forms::corona_interval_mixed(&p, i, j, k)?;
            let (u, v) = (p.base(i)?, p.copy_vertex(j, k)?);
            Ok(IntervalJob::new(p, u, v, pred, &[("i", i), ("j", j), ("k", k)]))
        }),
        "corona-base-restriction" => base_restriction(id, spec),
        "corona-wtn" => product_invariants(id, spec, Invariant::Wtn, corona, closed_forms::corona_wtn),
        "corona-wth" => product_invariants(id, spec, Invariant::Wth, corona, |g, h| Ok(closed_forms::corona_wth(g, h))),
        "gcorona-wtn" => generalized_corona_wtn(id, spec),
        "cartesian-wtn" => random_product_invariants(id, spec, spec.bound_pairs, cartesian, |g, h| {
            Ok(closed_forms::cartesian_wtn(g, h))
        }),
        "strong-wtn-bound" => random_product_invariants(id, spec, spec.bound_pairs, strong, |g, h| {
            Ok(closed_forms::strong_wtn_bound(g, h))
        }),
        "convexity-chain" => convexity_chain(id, spec),
        "hull-axioms" => hull_axioms(id, spec),
        "wth-le-wtn" => wth_le_wtn(id, spec),
        _ => Err(Error::UnknownCheck(id.to_string())),
    }
}

/// Independent random stream per label, derived from the spec seed.
fn stream(spec: &CorpusSpec, label: &str) -> ChaCha8Rng {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for b in label.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    generators::rng(spec.seed ^ h)
}

fn choices(pairs: &[(&'static str, usize)]) -> BTreeMap<&'static str, usize> {
    pairs.iter().copied().collect()
}

fn two_distinct(r: &mut ChaCha8Rng, n: usize) -> (usize, usize) {
    let a = r.gen_range(0..n);
    let mut b = r.gen_range(0..n - 1);
    if b >= a {
        b += 1;
    }
    (a, b)
}

fn random_graph(r: &mut ChaCha8Rng, spec: &CorpusSpec, lo: usize, hi: usize) -> Result<Graph> {
    let n = r.gen_range(lo..=hi);
    let p = *spec.edge_probabilities.choose(r).expect("validated non-empty");
    random_connected_graph_with(n, p, r)
}

fn random_factor(spec: &CorpusSpec, r: &mut ChaCha8Rng) -> Result<Graph> {
    random_graph(r, spec, spec.factor_min_order, spec.factor_max_order)
}

enum Draw<T> {
    Keep(T),
    Skip(Box<Verdict>),
}

/// Draws instances until `want` are applicable. Every draw gets its own
/// seed so that a single instance can be regenerated from the report.
fn sample<T, F>(spec: &CorpusSpec, check: &'static str, want: usize, mut draw: F) -> Result<Vec<Draw<T>>>
where
    F: FnMut(u64, &mut ChaCha8Rng) -> Result<std::result::Result<T, String>>,
{
    let mut rng = stream(spec, check);
    let limit = want.saturating_mul(spec.attempts_per_instance);
    let mut out = Vec::new();
    let mut kept = 0;
    let mut attempts = 0;
    while kept < want {
        if attempts == limit {
            return Err(Error::Infeasible(format!(
                "{check}: {kept} of {want} applicable instances after {limit} draws"
            )));
        }
        attempts += 1;
        let seed: u64 = rng.gen();
        match draw(seed, &mut generators::rng(seed))? {
            Ok(t) => {
                kept += 1;
                out.push(Draw::Keep(t));
            }
            Err(reason) => {
                let inst = Instance {
                    seed: Some(seed),
                    ..Instance::default()
                };
                out.push(Draw::Skip(Box::new(Verdict::skipped(check, inst, reason))));
            }
        }
    }
    Ok(out)
}

fn evaluate<T, F>(spec: &CorpusSpec, items: &[Draw<T>], f: F) -> Result<Vec<Verdict>>
where
    T: Sync,
    F: Fn(&T) -> Result<Verdict> + Sync,
{
    items
        .par_iter()
        .map(|d| match d {
            Draw::Keep(t) => {
                let start = Instant::now();
                let mut v = f(t)?;
                if spec.timing {
                    v.runtime_ms = Some(start.elapsed().as_secs_f64() * 1e3);
                }
                Ok(v)
            }
            Draw::Skip(v) => Ok((**v).clone()),
        })
        .collect()
}

struct Sample {
    graph: Graph,
    seed: Option<u64>,
}

impl Sample {
    fn instance(&self) -> Instance {
        Instance {
            graphs: vec![encode_graph6(&self.graph)],
            seed: self.seed,
            ..Instance::default()
        }
    }
}

/// Every connected graph up to `exhaustive_max_n` followed by the seeded
/// random graphs, orders and edge probabilities taken in rotation.
fn base_corpus(spec: &CorpusSpec) -> Result<Vec<Draw<Sample>>> {
    let mut out = Vec::new();
    if spec.exhaustive_max_n > 0 {
        for graph in connected_graphs_up_to(spec.exhaustive_max_n)? {
            out.push(Draw::Keep(Sample { graph, seed: None }));
        }
    }
    let mut rng = stream(spec, "corpus");
    let orders = &spec.random_orders;
    let probs = &spec.edge_probabilities;
    for i in 0..spec.random_graphs {
        let n = orders[i % orders.len()];
        let p = probs[(i / orders.len()) % probs.len()];
        let seed: u64 = rng.gen();
        let graph = random_connected_graph_with(n, p, &mut generators::rng(seed))?;
        out.push(Draw::Keep(Sample { graph, seed: Some(seed) }));
    }
    Ok(out)
}

fn oracle(check: &'static str, spec: &CorpusSpec, kind: IntervalKind) -> Result<Vec<Verdict>> {
    let corpus = base_corpus(spec)?;
    evaluate(spec, &corpus, |s| {
        let g = &s.graph;
        let n = g.n();
        let full = WalkBudget::new(2 * n + spec.walk_budget_extra)?;
        let early = WalkBudget::new(2 * n)?;
        for u in 0..n {
            for v in 0..n {
                let engine = interval(g, u, v, kind)?;
                let reference = oracle_interval(g, u, v, kind, full)?;
                let mut inst = s.instance();
                inst.choices = choices(&[("u", u), ("v", v)]);
                if engine != reference {
                    return Ok(Verdict::compare(check, inst, Value::Set(engine), Value::Set(reference))
                        .with_reason("engine differs from the walk oracle"));
                }
                if spec.walk_budget_extra > 0 {
                    let shorter = oracle_interval(g, u, v, kind, early)?;
                    if shorter != reference {
                        return Ok(Verdict::compare(check, inst, Value::Set(reference), Value::Set(shorter))
                            .with_reason("oracle not stable between walk budgets 2n and the full budget"));
                    }
                }
            }
        }
        Ok(Verdict::compare(check, s.instance(), Value::Holds(true), Value::Holds(true)))
    })
}

enum Example {
    Interval {
        g: Graph,
        u: VertexId,
        v: VertexId,
        kind: IntervalKind,
        expected: VertexSet,
    },
    Wtn {
        g: Graph,
        expected: usize,
    },
}

struct Tagged<T> {
    item: T,
    tag: &'static str,
    seed: Option<u64>,
}

fn worked_examples(check: &'static str, spec: &CorpusSpec) -> Result<Vec<Verdict>> {
    let mut items: Vec<Draw<Tagged<Example>>> = Vec::new();
    let fixed = |item, tag| Draw::Keep(Tagged { item, tag, seed: None });
    let claw = star_graph(3)?;
    items.push(fixed(
        Example::Interval {
            g: claw.clone(),
            u: 1,
            v: 2,
            kind: IntervalKind::WeaklyToll,
            expected: VertexSet::full(4),
        },
        "claw",
    ));
    items.push(fixed(
        Example::Interval {
            g: claw,
            u: 1,
            v: 2,
            kind: IntervalKind::Toll,
            expected: VertexSet::from_iter(4, [0, 1, 2]),
        },
        "claw",
    ));
    for n in 3..=6 {
        items.push(fixed(Example::Wtn { g: complete_graph(n)?, expected: n }, "complete"));
    }
    for k in 3..=4 {
        items.push(fixed(Example::Wtn { g: two_clique_bridge(k)?, expected: 2 * k - 2 }, "bridge"));
    }
    let mut rng = stream(spec, "worked-examples/trees");
    for _ in 0..50 {
        let seed: u64 = rng.gen();
        let mut r = generators::rng(seed);
        let n = r.gen_range(3..=12);
        let g = random_tree_with(n, &mut r)?;
        items.push(Draw::Keep(Tagged {
            item: Example::Wtn { g, expected: 2 },
            tag: "tree",
            seed: Some(seed),
        }));
    }
    let leafy = sample(spec, check, 50, |seed, r| {
        let g = random_graph(r, spec, 4, 10)?;
        let leaves = g.vertices().filter(|&v| g.degree(v) == 1).count();
        if leaves >= 2 {
            Ok(Ok(Tagged {
                item: Example::Wtn { g, expected: 2 },
                tag: "two-leaves",
                seed: Some(seed),
            }))
        } else {
            Ok(Err(format!("{leaves} vertices of degree 1")))
        }
    })?;
    items.extend(leafy);
    evaluate(spec, &items, |t| {
        let mut inst = Instance {
            seed: t.seed,
            tags: vec![t.tag],
            ..Instance::default()
        };
        match &t.item {
            Example::Interval { g, u, v, kind, expected } => {
                inst.graphs.push(encode_graph6(g));
                inst.choices = choices(&[("u", *u), ("v", *v)]);
                let observed = interval(g, *u, *v, *kind)?;
                Ok(Verdict::compare(check, inst, Value::Set(expected.clone()), Value::Set(observed)))
            }
            Example::Wtn { g, expected } => {
                inst.graphs.push(encode_graph6(g));
                let table = PairTable::build(g, IntervalKind::WeaklyToll)?;
                let observed = wtn_with(g, &table)?.value;
                Ok(Verdict::compare(check, inst, Value::Number(*expected), Value::Number(observed)))
            }
        }
    })
}

/// Evaluates a yes/no property on every base-corpus graph. `None` means the
/// graph is outside the property's hypotheses.
fn corpus_property<F>(check: &'static str, spec: &CorpusSpec, property: F) -> Result<Vec<Verdict>>
where
    F: Fn(&Graph, &PairTable) -> Result<Option<bool>> + Sync,
{
    let corpus = base_corpus(spec)?;
    evaluate(spec, &corpus, |s| {
        let table = PairTable::build(&s.graph, IntervalKind::WeaklyToll)?;
        Ok(match property(&s.graph, &table)? {
            Some(holds) => Verdict::compare(check, s.instance(), Value::Holds(true), Value::Holds(holds)),
            None => Verdict::skipped(check, s.instance(), "complete or trivial graph"),
        })
    })
}

fn wth_le_wtn(check: &'static str, spec: &CorpusSpec) -> Result<Vec<Verdict>> {
    let corpus = base_corpus(spec)?;
    evaluate(spec, &corpus, |s| {
        let g = &s.graph;
        if g.require_connected_nontrivial().is_err() {
            return Ok(Verdict::skipped(check, s.instance(), "trivial graph"));
        }
        let table = PairTable::build(g, IntervalKind::WeaklyToll)?;
        let number = wtn_with(g, &table)?.value;
        let hull_number = wth_with(g, &table)?.value;
        Ok(Verdict::compare(check, s.instance(), Value::AtMost(number), Value::Number(hull_number)))
    })
}

struct IntervalJob {
    product: ProductGraph,
    u: VertexId,
    v: VertexId,
    prediction: Prediction,
    choices: BTreeMap<&'static str, usize>,
}

impl IntervalJob {
    fn new(
        product: ProductGraph,
        u: VertexId,
        v: VertexId,
        prediction: Prediction,
        picked: &[(&'static str, usize)],
    ) -> IntervalJob {
        IntervalJob {
            product,
            u,
            v,
            prediction,
            choices: choices(picked),
        }
    }

    fn instance(&self, seed: u64) -> Instance {
        Instance {
            graphs: self.product.factors.iter().map(encode_graph6).collect(),
            choices: self.choices.clone(),
            seed: Some(seed),
            tags: if self.prediction.extension { vec!["extension"] } else { vec![] },
        }
    }
}

/// Samples product vertex pairs, keeps those whose formula applies, and
/// compares the prediction with the weakly toll interval of the product.
fn product_intervals<F>(check: &'static str, spec: &CorpusSpec, mut draw: F) -> Result<Vec<Verdict>>
where
    F: FnMut(&CorpusSpec, &mut ChaCha8Rng) -> Result<IntervalJob>,
{
    let mut inner = |seed: u64, r: &mut ChaCha8Rng| -> Result<std::result::Result<(u64, IntervalJob), String>> {
        let job = draw(spec, r)?;
        Ok(match &job.prediction.skipped {
            Some(reason) => Err(reason.clone()),
            None => Ok((seed, job)),
        })
    };
    let jobs = sample(spec, check, spec.interval_instances, &mut inner)?;
    evaluate(spec, &jobs, |(seed, job)| {
        let observed = weakly_toll_interval(&job.product.graph, job.u, job.v)?;
        let predicted = job.prediction.claim.clone().expect("kept instances are applicable");
        Ok(Verdict::compare(check, job.instance(*seed), predicted.into(), Value::Set(observed)))
    })
}

fn base_restriction(check: &'static str, spec: &CorpusSpec) -> Result<Vec<Verdict>> {
    let jobs = sample(spec, check, spec.interval_instances, |_, r| {
        let (g, h) = (random_factor(spec, r)?, random_factor(spec, r)?);
        let (i, j) = two_distinct(r, g.n());
        if let Err(e) = g.require_admissible() {
            return Ok(Err(format!("G: {e}")));
        }
        if let Err(e) = h.require_admissible() {
            return Ok(Err(format!("H: {e}")));
        }
        if g.has_edge(i, j) {
            return Ok(Err("g_i, g_j: endpoints adjacent".to_string()));
        }
        Ok(Ok((corona(&g, &h), i, j)))
    })?;
    evaluate(spec, &jobs, |(p, i, j)| {
        let g = p.base_factor();
        let predicted = weakly_toll_interval(g, *i, *j)?;
        let whole = weakly_toll_interval(&p.graph, p.base(*i)?, p.base(*j)?)?;
        let observed = VertexSet::from_iter(g.n(), g.vertices().filter(|&x| whole.contains(p.base(x).unwrap())));
        let inst = Instance {
            graphs: p.factors.iter().map(encode_graph6).collect(),
            choices: choices(&[("i", *i), ("j", *j)]),
            ..Instance::default()
        };
        Ok(Verdict::compare(check, inst, Value::Set(predicted), Value::Set(observed)))
    })
}

#[derive(Clone, Copy)]
enum Invariant {
    Wtn,
    Wth,
}

struct InvariantJob {
    product: ProductGraph,
    predicted: Value,
    seed: Option<u64>,
}

fn measure(job: &InvariantJob, which: Invariant) -> Result<usize> {
    let g = &job.product.graph;
    let table = PairTable::build(g, IntervalKind::WeaklyToll)?;
    Ok(match which {
        Invariant::Wtn => wtn_with(g, &table)?.value,
        Invariant::Wth => wth_with(g, &table)?.value,
    })
}

fn evaluate_invariants(
    check: &'static str,
    spec: &CorpusSpec,
    which: Invariant,
    jobs: &[Draw<InvariantJob>],
) -> Result<Vec<Verdict>> {
    evaluate(spec, jobs, |job| {
        let observed = measure(job, which)?;
        let inst = Instance {
            graphs: job.product.factors.iter().map(encode_graph6).collect(),
            seed: job.seed,
            ..Instance::default()
        };
        Ok(Verdict::compare(check, inst, job.predicted.clone(), Value::Number(observed)))
    })
}

fn sample_invariant_jobs<B, P>(
    check: &'static str,
    spec: &CorpusSpec,
    want: usize,
    build: B,
    predict: P,
) -> Result<Vec<Draw<InvariantJob>>>
where
    B: Fn(&Graph, &Graph) -> ProductGraph,
    P: Fn(&Graph, &Graph) -> Result<Prediction>,
{
    sample(spec, check, want, |seed, r| {
        let (g, h) = (random_factor(spec, r)?, random_factor(spec, r)?);
        let pred = predict(&g, &h)?;
        Ok(match pred.claim {
            Some(claim) => Ok(InvariantJob {
                product: build(&g, &h),
                predicted: claim.into(),
                seed: Some(seed),
            }),
            None => Err(pred.skipped.unwrap_or_default()),
        })
    })
}

/// Fixed factor pairs covering both branches of the dichotomy, then
/// random admissible pairs up to `invariant_pairs`.
fn product_invariants<B, P>(
    check: &'static str,
    spec: &CorpusSpec,
    which: Invariant,
    build: B,
    predict: P,
) -> Result<Vec<Verdict>>
where
    B: Fn(&Graph, &Graph) -> ProductGraph,
    P: Fn(&Graph, &Graph) -> Result<Prediction>,
{
    let mut jobs = Vec::new();
    let bases = [path_graph(3)?, path_graph(4)?, cycle_graph(5)?];
    let fibers = [path_graph(3)?, two_clique_bridge(3)?];
    for g in bases.iter().filter(|g| g.n() <= spec.factor_max_order) {
        for h in &fibers {
            let pred = predict(g, h)?;
            let claim = pred.claim.expect("fixed factors are admissible");
            jobs.push(Draw::Keep(InvariantJob {
                product: build(g, h),
                predicted: claim.into(),
                seed: None,
            }));
        }
    }
    let want = spec.invariant_pairs.saturating_sub(jobs.len());
    jobs.extend(sample_invariant_jobs(check, spec, want, build, predict)?);
    evaluate_invariants(check, spec, which, &jobs)
}

fn random_product_invariants<B, P>(
    check: &'static str,
    spec: &CorpusSpec,
    want: usize,
    build: B,
    predict: P,
) -> Result<Vec<Verdict>>
where
    B: Fn(&Graph, &Graph) -> ProductGraph,
    P: Fn(&Graph, &Graph) -> Result<Prediction>,
{
    let jobs = sample_invariant_jobs(check, spec, want, build, predict)?;
    evaluate_invariants(check, spec, Invariant::Wtn, &jobs)
}

fn generalized_corona_wtn(check: &'static str, spec: &CorpusSpec) -> Result<Vec<Verdict>> {
    let menu = [
        complete_graph(1)?,
        complete_graph(2)?,
        complete_graph(3)?,
        path_graph(3)?,
        cycle_graph(4)?,
        two_clique_bridge(3)?,
    ];
    let widest = menu.iter().map(Graph::n).max().unwrap().max(spec.factor_max_order);
    let max_base = (spec.max_product_order / (1 + widest)).clamp(2, 4);
    let jobs = sample(spec, check, spec.gcorona_instances, |seed, r| {
        let g = random_graph(r, spec, 2, max_base)?;
        let mut hs = Vec::with_capacity(g.n());
        for _ in 0..g.n() {
            if r.gen_bool(0.25) {
                hs.push(random_factor(spec, r)?);
            } else {
                hs.push(menu.choose(r).unwrap().clone());
            }
        }
        let pred = closed_forms::generalized_corona_wtn(&g, &hs)?;
        Ok(match pred.claim {
            Some(claim) => Ok(InvariantJob {
                product: generalized_corona(&g, &hs)?,
                predicted: claim.into(),
                seed: Some(seed),
            }),
            None => Err(pred.skipped.unwrap_or_default()),
        })
    })?;
    evaluate_invariants(check, spec, Invariant::Wtn, &jobs)
}

const CHAIN: [IntervalKind; 4] = [
    IntervalKind::WeaklyToll,
    IntervalKind::Toll,
    IntervalKind::Monophonic,
    IntervalKind::Geodesic,
];

fn convexity_chain(check: &'static str, spec: &CorpusSpec) -> Result<Vec<Verdict>> {
    let graphs: Vec<Draw<Sample>> = if spec.chain_max_n == 0 {
        Vec::new()
    } else {
        connected_graphs_up_to(spec.chain_max_n)?
            .into_iter()
            .map(|graph| Draw::Keep(Sample { graph, seed: None }))
            .collect()
    };
    evaluate(spec, &graphs, |s| {
        let g = &s.graph;
        let n = g.n();
        let tables = CHAIN
            .iter()
            .map(|&k| PairTable::build(g, k))
            .collect::<Result<Vec<_>>>()?;
        for mask in 0u64..(1 << n) {
            let set = VertexSet::from_iter(n, (0..n).filter(|&i| mask >> i & 1 == 1));
            let convex: Vec<bool> = tables.iter().map(|t| t.closure(&set) == set).collect();
            if let Some(step) = convex.windows(2).position(|w| w[0] && !w[1]) {
                let mut inst = s.instance();
                inst.choices = choices(&[("subset_mask", mask as usize)]);
                return Ok(Verdict::compare(check, inst, Value::Holds(true), Value::Holds(false)).with_reason(format!(
                    "{}-convex set is not {}-convex",
                    CHAIN[step].short_name(),
                    CHAIN[step + 1].short_name()
                )));
            }
        }
        Ok(Verdict::compare(check, s.instance(), Value::Holds(true), Value::Holds(true)))
    })
}

fn hull_axioms(check: &'static str, spec: &CorpusSpec) -> Result<Vec<Verdict>> {
    let jobs = sample(spec, check, spec.hull_instances, |seed, r| {
        let g = random_graph(r, spec, 2, spec.hull_max_order)?;
        let n = g.n();
        let mut s = VertexSet::from_iter(n, (0..n).filter(|_| r.gen_bool(0.3)));
        if s.is_empty() {
            s.insert(r.gen_range(0..n));
        }
        let t = s.union(&VertexSet::from_iter(n, (0..n).filter(|_| r.gen_bool(0.3))));
        Ok(Ok((g, s, t, seed)))
    })?;
    evaluate(spec, &jobs, |(g, s, t, seed)| {
        let table = PairTable::build(g, IntervalKind::WeaklyToll)?;
        let hs = hull_with(&table, s);
        let failed = if !s.is_subset(&hs) {
            Some("not extensive")
        } else if hull_with(&table, &hs) != hs {
            Some("not idempotent")
        } else if !hs.is_subset(&hull_with(&table, t)) {
            Some("not monotone")
        } else {
            None
        };
        let mask = |x: &VertexSet| x.iter().map(|i| 1usize << i).sum::<usize>();
        let inst = Instance {
            graphs: vec![encode_graph6(g)],
            choices: choices(&[("subset_mask", mask(s)), ("superset_mask", mask(t))]),
            seed: Some(*seed),
            tags: vec![],
        };
        let v = Verdict::compare(check, inst, Value::Holds(true), Value::Holds(failed.is_none()));
        Ok(match failed {
            Some(why) => v.with_reason(why),
            None => v,
        })
    })
}
