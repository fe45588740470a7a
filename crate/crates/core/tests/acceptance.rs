//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the
//! process fails if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use convexkit::convexity::wtn;
use convexkit::enumerate::connected_graphs_up_to;
use convexkit::generators::{complete_graph, path_graph, star_graph, two_clique_bridge};
use convexkit::intervals::{toll_interval, weakly_toll_interval};
use convexkit::io::{encode_graph6, parse_graph6};
use convexkit::verify::{run_check, summarize, CorpusSpec, Status, Value, Verdict};

type Outcome = Result<String, String>;
type Criterion = fn(&CorpusSpec) -> Outcome;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Runs `check`, requires zero mismatches and at least `min_matched`
/// matching verdicts.
fn clean(check: &str, spec: &CorpusSpec, min_matched: usize) -> Result<Vec<Verdict>, String> {
    let verdicts = run_check(check, spec).map_err(|e| format!("{check}: {e}"))?;
    let s = summarize(&verdicts);
    ensure(s.mismatched == 0, format!("{check}: {} mismatches", s.mismatched))?;
    ensure(
        s.matched >= min_matched,
        format!("{check}: {} matches, need {min_matched}", s.matched),
    )?;
    Ok(verdicts)
}

fn matched(vs: &[Verdict]) -> usize {
    vs.iter().filter(|v| v.status == Status::Match).count()
}

fn corpus_size(spec: &CorpusSpec) -> usize {
    connected_graphs_up_to(spec.exhaustive_max_n).unwrap().len() + spec.random_graphs
}

fn oracle_equivalence(spec: &CorpusSpec) -> Outcome {
    ensure(spec.exhaustive_max_n >= 6, "exhaustive part must cover n <= 6")?;
    ensure(spec.random_graphs >= 300, "need 300 random graphs")?;
    ensure(spec.walk_budget_extra == 2, "walk budget must be 2n + 2")?;
    let exhaustive = connected_graphs_up_to(6).unwrap().len();
    let total = corpus_size(spec);
    for check in ["oracle-wt", "oracle-swt", "oracle-toll"] {
        let vs = clean(check, spec, total)?;
        let random_orders: Vec<usize> = vs[exhaustive..]
            .iter()
            .map(|v| parse_graph6(&v.instance.graphs[0]).unwrap().n())
            .collect();
        ensure(
            random_orders.iter().all(|n| (7..=8).contains(n)),
            "random graphs outside n in {7, 8}",
        )?;
    }
    Ok(format!("{exhaustive} exhaustive + {} random graphs, every ordered pair, 3 walk kinds", total - exhaustive))
}

fn worked_examples(spec: &CorpusSpec) -> Outcome {
    let claw = star_graph(3).unwrap();
    let wt = weakly_toll_interval(&claw, 1, 2).unwrap();
    ensure(wt.len() == 4, format!("claw WT(leaf, leaf) = {wt}"))?;
    let toll = toll_interval(&claw, 1, 2).unwrap();
    ensure(toll.len() == 3 && toll.to_vec() == vec![0, 1, 2], format!("claw T(leaf, leaf) = {toll}"))?;
    for n in 3..=6 {
        let k = wtn(&complete_graph(n).unwrap()).unwrap().value;
        ensure(k == n, format!("wtn(K_{n}) = {k}"))?;
    }
    for k in [3, 4] {
        let w = wtn(&two_clique_bridge(k).unwrap()).unwrap().value;
        ensure(w == 2 * k - 2, format!("wtn(bridge({k})) = {w}"))?;
    }
    let vs = clean("worked-examples", spec, 108)?;
    let tagged = |tag: &str| {
        vs.iter()
            .filter(|v| v.status == Status::Match && v.has_tag(tag))
            .count()
    };
    ensure(tagged("tree") == 50, format!("{} trees", tagged("tree")))?;
    ensure(tagged("two-leaves") == 50, format!("{} two-leaf graphs", tagged("two-leaves")))?;
    Ok("claw intervals, wtn(K_3..K_6), 50 trees, bridge(3,4), 50 two-leaf graphs".into())
}

fn structure_properties(spec: &CorpusSpec) -> Outcome {
    let total = corpus_size(spec);
    clean("neighbor-extension", spec, total)?;
    let vs = clean("max-interval-decomposition", spec, 1)?;
    Ok(format!("{total} graphs, decomposition on {} non-complete ones", matched(&vs)))
}

fn wtn_two_criterion(spec: &CorpusSpec) -> Outcome {
    let vs = clean("wtn-two-criterion", spec, 1)?;
    Ok(format!("{} non-complete graphs", matched(&vs)))
}

fn lexicographic_intervals(spec: &CorpusSpec) -> Outcome {
    ensure(spec.factor_max_order <= 5, "factors must have at most 5 vertices")?;
    let same = clean("lex-same-layer", spec, 200)?;
    let cross = clean("lex-cross-layer", spec, 200)?;
    Ok(format!("{} same-layer + {} cross-layer instances", matched(&same), matched(&cross)))
}

/// Both fixed fibers appear and both branches of the dichotomy are hit.
fn dichotomy_coverage(vs: &[Verdict]) -> Result<(), String> {
    let p3 = encode_graph6(&path_graph(3).unwrap());
    let bridge = encode_graph6(&two_clique_bridge(3).unwrap());
    let with_h = |h: &str| vs.iter().any(|v| v.status == Status::Match && v.instance.graphs[1] == h);
    ensure(with_h(&p3), "no instance with H = P_3")?;
    ensure(with_h(&bridge), "no instance with H = bridge(3)")?;
    let predicts = |k| vs.iter().any(|v| v.predicted == Some(Value::Number(k)));
    ensure(predicts(2) && predicts(3), "only one branch of the wtn dichotomy exercised")
}

fn lexicographic_invariants(spec: &CorpusSpec) -> Outcome {
    let w = clean("lex-wtn", spec, 30)?;
    dichotomy_coverage(&w)?;
    let h = clean("lex-wth", spec, 30)?;
    Ok(format!("wtn on {} pairs, wth on {} pairs", matched(&w), matched(&h)))
}

fn corona_intervals(spec: &CorpusSpec) -> Outcome {
    let mut total = 0;
    let mut extension = 0;
    for check in [
        "corona-same-copy",
        "corona-cross-copies",
        "corona-base-pair",
        "corona-mixed",
        "corona-base-restriction",
    ] {
        let vs = clean(check, spec, 200)?;
        total += matched(&vs);
        extension += vs.iter().filter(|v| v.has_tag("extension")).count();
    }
    Ok(format!("{total} instances over 5 statements; {extension} adjacent-base mixed cases (extension)"))
}

fn corona_invariants(spec: &CorpusSpec) -> Outcome {
    let w = clean("corona-wtn", spec, 30)?;
    dichotomy_coverage(&w)?;
    let h = clean("corona-wth", spec, 30)?;
    let g = clean("gcorona-wtn", spec, 10)?;
    let exact = g.iter().filter(|v| v.predicted == Some(Value::Number(2))).count();
    let bound = g.iter().filter(|v| v.predicted == Some(Value::AtMost(3))).count();
    ensure(exact > 0 && bound > 0, "generalized corona claims not both exercised")?;
    Ok(format!(
        "wtn on {}, wth on {}, generalized {} (= 2: {exact}, <= 3: {bound})",
        matched(&w),
        matched(&h),
        matched(&g)
    ))
}

fn cartesian_strong(spec: &CorpusSpec) -> Outcome {
    let c = clean("cartesian-wtn", spec, 20)?;
    let s = clean("strong-wtn-bound", spec, 20)?;
    Ok(format!("cartesian {} pairs, strong {} pairs", matched(&c), matched(&s)))
}

fn convexity_chain(spec: &CorpusSpec) -> Outcome {
    ensure(spec.chain_max_n >= 5, "chain must cover n <= 5")?;
    let graphs = connected_graphs_up_to(5).unwrap().len();
    clean("convexity-chain", spec, graphs)?;
    Ok(format!("all subsets of {graphs} graphs"))
}

fn closure_axioms(spec: &CorpusSpec) -> Outcome {
    clean("hull-axioms", spec, 1000)?;
    let vs = clean("wth-le-wtn", spec, corpus_size(spec) - 1)?;
    Ok(format!("1000 hull instances, wth <= wtn on {} graphs", matched(&vs)))
}

fn main() -> ExitCode {
    let spec = CorpusSpec::default();
    let criteria: [(&str, Criterion); 11] = [
        ("oracle equivalence", oracle_equivalence),
        ("worked examples", worked_examples),
        ("neighbor extension and maximum-interval decomposition", structure_properties),
        ("wtn = 2 criterion", wtn_two_criterion),
        ("lexicographic interval formulas", lexicographic_intervals),
        ("lexicographic wtn / wth", lexicographic_invariants),
        ("corona interval formulas", corona_intervals),
        ("corona and generalized corona wtn / wth", corona_invariants),
        ("cartesian and strong wtn", cartesian_strong),
        ("convexity chain", convexity_chain),
        ("hull closure axioms and wth <= wtn", closure_axioms),
    ];
    let mut failed = 0;
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = criterion(&spec);
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.1} s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.1} s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
