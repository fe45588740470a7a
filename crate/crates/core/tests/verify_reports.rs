use convexkit::verify::{
    resolve_suite, run_check, run_suite, summarize, write_csv, write_jsonl, CorpusSpec, Status, CHECKS,
};
use convexkit::Error;

fn small_spec() -> CorpusSpec {
    CorpusSpec {
        exhaustive_max_n: 4,
        random_graphs: 6,
        interval_instances: 8,
        invariant_pairs: 8,
        gcorona_instances: 3,
        bound_pairs: 4,
        chain_max_n: 4,
        hull_instances: 20,
        ..CorpusSpec::default()
    }
}

fn report(spec: &CorpusSpec) -> Vec<u8> {
    let verdicts = run_suite("all", spec).unwrap();
    let mut buf = Vec::new();
    write_jsonl(&verdicts, &mut buf).unwrap();
    buf
}

#[test]
fn same_spec_gives_identical_report() {
    let spec = small_spec();
    let first = report(&spec);
    assert_eq!(first, report(&spec));
    let text = String::from_utf8(first).unwrap();
    assert!(!text.contains("runtime_ms"));
    assert!(!text.contains("\"mismatch\""));

    let other = CorpusSpec { seed: 99, ..spec };
    assert_ne!(text.as_bytes(), report(&other).as_slice());
}

#[test]
fn every_check_runs_on_a_small_spec() {
    let spec = small_spec();
    for id in CHECKS {
        let verdicts = run_check(id, &spec).unwrap();
        assert!(!verdicts.is_empty(), "{id}");
        assert!(verdicts.iter().all(|v| v.check == *id));
        assert!(verdicts.iter().enumerate().all(|(i, v)| v.index == i));
        let s = summarize(&verdicts);
        assert_eq!(s.total, verdicts.len());
        assert_eq!(s.matched + s.mismatched + s.skipped, s.total);
        assert_eq!(s.mismatched, 0, "{id}");
    }
}

#[test]
fn skipped_verdicts_carry_a_reason() {
    let verdicts = run_check("lex-same-layer", &small_spec()).unwrap();
    let skipped: Vec<_> = verdicts.iter().filter(|v| v.status == Status::Skipped).collect();
    assert!(!skipped.is_empty());
    assert!(skipped.iter().all(|v| v.reason.is_some() && v.predicted.is_none()));
}

#[test]
fn timing_is_opt_in() {
    let spec = CorpusSpec {
        timing: true,
        ..small_spec()
    };
    let verdicts = run_check("hull-axioms", &spec).unwrap();
    assert!(verdicts.iter().all(|v| v.runtime_ms.is_some()));
}

#[test]
fn unsatisfiable_sampling_is_refused() {
    // every factor is complete, so no product formula ever applies
    let spec = CorpusSpec {
        edge_probabilities: vec![1.0],
        attempts_per_instance: 2,
        ..small_spec()
    };
    match run_check("lex-same-layer", &spec) {
        Err(Error::Infeasible(msg)) => assert!(msg.contains("lex-same-layer")),
        other => panic!("expected refusal, got {other:?}"),
    }
}

#[test]
fn oversized_specs_are_refused() {
    let spec = CorpusSpec {
        random_orders: vec![20],
        ..small_spec()
    };
    assert!(matches!(run_check("oracle-wt", &spec), Err(Error::Infeasible(_))));
    assert!(matches!(run_check("no-such-check", &small_spec()), Err(Error::UnknownCheck(_))));
    assert!(matches!(resolve_suite("nothing"), Err(Error::UnknownCheck(_))));
}

#[test]
fn csv_summary_totals() {
    let verdicts = run_suite("corona", &small_spec()).unwrap();
    let s = summarize(&verdicts);
    let mut buf = Vec::new();
    write_csv(&s, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let lines: Vec<_> = text.lines().collect();
    // header, one row per corona check, total
    assert_eq!(lines.len(), 1 + 7 + 1);
    assert!(lines.last().unwrap().starts_with(&format!("total,{},", s.total)));
}
