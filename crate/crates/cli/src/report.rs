//! Report records and their CSV / JSON-lines renderings.

use std::io::Write;

use serde::Serialize;
use specmatch::{write_graph6, Graph, Verdict};

use crate::format::{fmt_float, fmt_rational, round12};

pub const CSV_HEADER: &str =
    "graph6,n,delta,theorem,a,b,k,alpha,lambda1,threshold,two_mu_f,verdict,flags";

/// One verdict as it appears in a report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRecord {
    pub graph6: String,
    pub n: usize,
    pub delta: usize,
    pub theorem: &'static str,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub k: Option<f64>,
    pub alpha: Option<f64>,
    pub lambda1: Option<f64>,
    pub threshold: Option<f64>,
    pub two_mu_f: u64,
    pub verdict: &'static str,
    /// Names of the verdict's extra indicators that are set.
    pub flags: Vec<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ReportRecord {
    pub fn new(graph6: &str, v: &Verdict) -> Self {
        ReportRecord {
            graph6: graph6.to_string(),
            n: v.n,
            delta: v.delta,
            theorem: v.theorem.as_str(),
            a: v.a.map(round12),
            b: v.b.map(round12),
            k: v.k.map(|k| round12(*k.numer() as f64 / *k.denom() as f64)),
            alpha: v.alpha.map(round12),
            lambda1: v.lambda1.map(round12),
            threshold: v.threshold.map(round12),
            two_mu_f: v.mu_f.twice(),
            verdict: v.outcome().as_str(),
            flags: v
                .extra
                .iter()
                .filter(|(_, &x)| x != 0.0)
                .map(|(&name, _)| name)
                .collect(),
            note: v.note.clone(),
        }
    }

    pub fn from_graph(g: &Graph, v: &Verdict) -> Self {
        Self::new(&write_graph6(g), v)
    }

    pub fn csv_line(&self, v: &Verdict) -> String {
        let opt = |x: Option<f64>| x.map(fmt_float).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.graph6,
            self.n,
            self.delta,
            self.theorem,
            opt(v.a),
            opt(v.b),
            v.k.map(fmt_rational).unwrap_or_default(),
            opt(v.alpha),
            opt(v.lambda1),
            opt(v.threshold),
            self.two_mu_f,
            self.verdict,
            self.flags.join(";"),
        )
    }

    pub fn json_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

/// Output sink for records: CSV with a header row, or one JSON object per line.
pub struct RecordWriter<W: Write> {
    out: W,
    json: bool,
    header_done: bool,
}

impl<W: Write> RecordWriter<W> {
    pub fn new(out: W, json: bool) -> Self {
        RecordWriter {
            out,
            json,
            header_done: false,
        }
    }

    pub fn write(&mut self, graph6: &str, v: &Verdict) -> std::io::Result<()> {
        let rec = ReportRecord::new(graph6, v);
        if self.json {
            writeln!(self.out, "{}", rec.json_line())
        } else {
            self.header()?;
            writeln!(self.out, "{}", rec.csv_line(v))
        }
    }

    /// Emits the CSV header if it has not been written yet.
    pub fn header(&mut self) -> std::io::Result<()> {
        if !self.json && !self.header_done {
            self.header_done = true;
            writeln!(self.out, "{CSV_HEADER}")?;
        }
        Ok(())
    }

    /// Free-form line: `# text` in CSV mode, verbatim in JSON mode.
    pub fn raw(&mut self, line: &str) -> std::io::Result<()> {
        writeln!(self.out, "{line}")
    }

    pub fn is_json(&self) -> bool {
        self.json
    }

    pub fn flush(&mut self) -> std::io::Result<()> {
        self.out.flush()
    }
}
