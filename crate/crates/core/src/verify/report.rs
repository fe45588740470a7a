use std::io::Write;

use crate::error::{Error, Result};

use super::{Summary, Verdict};

fn io_error(e: impl std::fmt::Display) -> Error {
    Error::Spec(format!("writing report: {e}"))
}

/// One JSON object per verdict, in verdict order.
pub fn write_jsonl<W: Write>(verdicts: &[Verdict], mut out: W) -> Result<()> {
    for v in verdicts {
        serde_json::to_writer(&mut out, v).map_err(io_error)?;
        out.write_all(b"\n").map_err(io_error)?;
    }
    out.flush().map_err(io_error)
}

/// Per-check counts, then a `total` row.
pub fn write_csv<W: Write>(summary: &Summary, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for c in &summary.checks {
        w.serialize(c).map_err(io_error)?;
    }
    w.write_record([
        "total".to_string(),
        summary.total.to_string(),
        summary.matched.to_string(),
        summary.mismatched.to_string(),
        summary.skipped.to_string(),
        summary.checks.iter().map(|c| c.extension).sum::<usize>().to_string(),
    ])
    .map_err(io_error)?;
    w.flush().map_err(io_error)
}

pub fn write_summary_json<W: Write>(summary: &Summary, mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, summary).map_err(io_error)?;
    out.write_all(b"\n").map_err(io_error)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{summarize, Instance, Value};

    #[test]
    fn jsonl_and_csv() {
        let verdicts = vec![
            Verdict::compare("a", Instance::default(), Value::Number(2), Value::Number(2)),
            Verdict::skipped("b", Instance::default(), "complete factor"),
        ];
        let mut buf = Vec::new();
        write_jsonl(&verdicts, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].contains("\"status\":\"match\""));
        assert!(!lines[0].contains("runtime_ms"));
        assert!(lines[1].contains("\"reason\":\"complete factor\""));

        let mut buf = Vec::new();
        write_csv(&summarize(&verdicts), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next().unwrap(), "check,total,matched,mismatched,skipped,extension");
        assert_eq!(text.lines().last().unwrap(), "total,2,1,0,1,0");
    }
}
