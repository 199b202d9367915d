use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::Path;

use specmatch::bounds::{scan_for_counterexamples, verdicts_for_graph, Outcome, ScanGrid};
use specmatch::families::{
    complete_bipartite, family_b, join_exception, random_graph, FamilyBSpec,
};
use specmatch::fracmatch::{
    deficiency_bruteforce_with_cap, fractional_matching_witness, DEFAULT_BRUTE_CAP,
};
use specmatch::spectral::{build_matrix, eigenvalues, DEFAULT_TOL};
use specmatch::{
    fractional_matching_number, parse_graph6, write_graph6, Graph, Params, Rational64,
};

use crate::format::{fmt_float, parse_f64, parse_pairs, parse_rational};
use crate::report::RecordWriter;
use crate::{CliError, Family};

pub const DEFAULT_GRID: &str = "a=0,0.5,1,2;b=1;k=0.5,1,2";

/// Process exit status: 0 clean, 1 input or domain error, 2 counterexample.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Clean,
    Counterexample,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Clean => 0,
            Status::Counterexample => 2,
        }
    }
}

fn open_out(out: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(
            fs::File::create(path).map_err(|e| CliError::Io(path.display().to_string(), e))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn brute_cap() -> Result<usize, CliError> {
    match std::env::var("SPECMATCH_BRUTE_CAP") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("SPECMATCH_BRUTE_CAP={s:?} is not a count"))),
        Err(_) => Ok(DEFAULT_BRUTE_CAP),
    }
}

fn io_err(e: io::Error) -> CliError {
    CliError::Io("output".into(), e)
}

pub struct AnalyzeArgs<'a> {
    pub graph6: &'a str,
    pub a: f64,
    pub b: f64,
    pub k: &'a str,
    pub alpha: Option<f64>,
    pub epsilon: f64,
    pub out: Option<&'a Path>,
    pub json: bool,
}

pub fn analyze(args: &AnalyzeArgs) -> Result<Status, CliError> {
    let g = parse_graph6(args.graph6)?;
    let k = parse_rational(args.k)?;
    let n = g.order();
    if !(k > Rational64::from(0) && k < Rational64::from(n as i64)) {
        return Err(CliError::Input(format!(
            "k = {} must lie in (0, n = {n})",
            args.k
        )));
    }
    let params = Params::new(args.a, args.b)?;
    let alpha = args.alpha.unwrap_or(args.a / (args.a + args.b));
    let grid = ScanGrid {
        params: vec![params],
        ks: vec![k],
        alphas: vec![alpha],
    };
    if !(0.0..=1.0).contains(&alpha) {
        return Err(CliError::Input(format!(
            "alpha = {alpha} must lie in [0, 1]"
        )));
    }
    let verdicts = verdicts_for_graph(&g, &grid, args.epsilon)?;

    let g6 = write_graph6(&g);
    let mut w = RecordWriter::new(open_out(args.out)?, args.json);
    let summary = summary_lines(&g, &params)?;
    if w.is_json() {
        let obj: serde_json::Map<String, serde_json::Value> = summary
            .into_iter()
            .map(|(key, value)| (key.to_string(), serde_json::Value::String(value)))
            .collect();
        w.raw(&serde_json::to_string(&obj).expect("summary serializes"))
            .map_err(io_err)?;
    } else {
        for (key, value) in summary {
            w.raw(&format!("# {key}: {value}")).map_err(io_err)?;
        }
    }
    w.header().map_err(io_err)?;
    for v in &verdicts {
        w.write(&g6, v).map_err(io_err)?;
    }
    w.flush().map_err(io_err)?;
    Ok(if verdicts.iter().any(|v| v.is_counterexample()) {
        Status::Counterexample
    } else {
        Status::Clean
    })
}

fn summary_lines(g: &Graph, params: &Params) -> Result<Vec<(&'static str, String)>, CliError> {
    let mut lines = vec![("graph6", write_graph6(g))];
    lines.push(("mu_f", fractional_matching_number(g).to_string()));
    let f = fractional_matching_witness(g);
    let parts: Vec<String> = f
        .iter()
        .map(|((u, v), w)| format!("({u},{v},{}/2)", w.twice()))
        .collect();
    lines.push(("witness_f", parts.join(" ")));
    match deficiency_bruteforce_with_cap(g, brute_cap()?) {
        Ok(d) => {
            lines.push(("deficiency_s", format!("{:?}", d.set_s)));
            lines.push(("deficiency_t", format!("{:?}", d.isolated_t)));
            lines.push(("deficiency", d.value.to_string()));
        }
        Err(e) => lines.push(("deficiency", format!("skipped ({e})"))),
    }
    if g.order() > 0 {
        let spectrum = eigenvalues(&build_matrix(g, params), DEFAULT_TOL)?;
        let noise = 1e3 * DEFAULT_TOL;
        let values: Vec<String> = spectrum
            .values
            .iter()
            .map(|&x| fmt_float(if x.abs() < noise { 0.0 } else { x }))
            .collect();
        lines.push(("spectrum", values.join(" ")));
    }
    Ok(lines)
}

/// Parses `"a=0,0.5;b=1;k=0.5,1,2"` with optional `alpha=...`.
pub fn parse_grid(spec: &str, alpha_override: Option<&str>) -> Result<ScanGrid, CliError> {
    let pairs = parse_pairs(spec, ';', &["a", "b", "k", "alpha"])?;
    let list = |key: &str| pairs.iter().find(|(k, _)| *k == key).map(|(_, v)| *v);
    let floats = |s: &str| s.split(',').map(parse_f64).collect::<Result<Vec<f64>, _>>();
    let a = floats(list("a").unwrap_or("0"))?;
    let b = floats(list("b").unwrap_or("1"))?;
    let ks = list("k")
        .ok_or_else(|| CliError::Input("grid needs k=...".into()))?
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<Rational64>, _>>()?;
    let alphas = match alpha_override.or(list("alpha")) {
        Some(s) => Some(floats(s)?),
        None => None,
    };
    Ok(ScanGrid::new(&a, &b, ks, alphas)?)
}

pub struct ScanArgs<'a> {
    pub corpus: &'a str,
    pub grid: &'a str,
    pub alpha: Option<&'a str>,
    pub epsilon: f64,
    pub out: Option<&'a Path>,
    pub json: bool,
    pub jobs: usize,
}

pub fn scan(args: &ScanArgs, stderr: &mut dyn Write) -> Result<Status, CliError> {
    let grid = parse_grid(args.grid, args.alpha)?;
    let text = if args.corpus == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io("stdin".into(), e))?;
        s
    } else {
        fs::read_to_string(args.corpus).map_err(|e| CliError::Io(args.corpus.into(), e))?
    };
    let mut line_numbers = Vec::new();
    let mut corpus = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        line_numbers.push(i + 1);
        corpus.push(parse_graph6(line).map_err(|e| e.to_string()));
    }
    let report = scan_for_counterexamples(corpus, &grid, args.epsilon, args.jobs)?;

    let mut w = RecordWriter::new(open_out(args.out)?, args.json);
    w.header().map_err(io_err)?;
    for item in &report.items {
        let g6 = write_graph6(&item.graph);
        match &item.verdicts {
            Ok(vs) => {
                for v in vs {
                    w.write(&g6, v).map_err(io_err)?;
                }
            }
            Err(e) => {
                let _ = writeln!(
                    stderr,
                    "error on line {}: {g6}: {e}",
                    line_numbers[item.index]
                );
            }
        }
    }
    w.flush().map_err(io_err)?;
    for (index, reason) in &report.skipped {
        let _ = writeln!(stderr, "skipped line {}: {reason}", line_numbers[*index]);
    }
    let c = report.counts;
    let summary = format!(
        "graphs={} skipped={} errors={} records={} vacuous={} confirmed={} boundary={} counterexample={}",
        report.items.len(),
        report.skipped.len(),
        report.errors,
        c.total(),
        c.vacuous,
        c.confirmed,
        c.boundary,
        c.counterexample
    );
    if args.out.is_some() {
        println!("{summary}");
    } else {
        let _ = writeln!(stderr, "{summary}");
    }
    if c.counterexample > 0 {
        for (item, v) in report.counterexamples() {
            let _ = writeln!(
                stderr,
                "{}: {} on {}",
                Outcome::Counterexample,
                v.theorem,
                write_graph6(&item.graph)
            );
        }
        Ok(Status::Counterexample)
    } else if report.errors > 0 {
        Err(CliError::Input(format!(
            "{} graphs failed to evaluate",
            report.errors
        )))
    } else {
        Ok(Status::Clean)
    }
}

fn get_usize(pairs: &[(&str, &str)], key: &str) -> Result<Option<usize>, CliError> {
    pairs
        .iter()
        .find(|(k, _)| *k == key)
        .map(|(_, v)| {
            v.parse()
                .map_err(|_| CliError::Input(format!("{key}={v:?} is not a count")))
        })
        .transpose()
}

fn require(pairs: &[(&str, &str)], key: &str) -> Result<usize, CliError> {
    get_usize(pairs, key)?.ok_or_else(|| CliError::Input(format!("missing parameter {key}")))
}

/// `H` for a join exception: `empty`, `K<d>`, or a graph6 string.
fn parse_h(spec: Option<&str>, delta: usize) -> Result<Vec<(usize, usize)>, CliError> {
    let h = match spec {
        None | Some("empty") => Graph::empty(delta),
        Some(s) if s.starts_with('K') && s[1..].parse::<usize>().is_ok() => {
            Graph::complete(s[1..].parse().expect("checked"))
        }
        Some(s) => parse_graph6(s)?,
    };
    if h.order() != delta {
        return Err(CliError::Input(format!(
            "H has {} vertices; delta = {delta}",
            h.order()
        )));
    }
    Ok(h.edges().collect())
}

pub fn construct(
    family: Family,
    params: &str,
    seed: u64,
    out: Option<&Path>,
) -> Result<Status, CliError> {
    let mut w = open_out(out)?;
    let mut emit = |line: String| writeln!(w, "{line}").map_err(io_err);
    match family {
        Family::CompleteBipartite => {
            let p = parse_pairs(params, ',', &["p", "q"])?;
            emit(write_graph6(&complete_bipartite(
                require(&p, "p")?,
                require(&p, "q")?,
            )))?;
        }
        Family::FamilyB => {
            let p = parse_pairs(params, ',', &["delta", "k", "m"])?;
            let (delta, k) = (require(&p, "delta")?, require(&p, "k")?);
            let spec = match get_usize(&p, "m")? {
                Some(m) => FamilyBSpec::new(delta, k, m)?,
                None => FamilyBSpec::minimal(delta, k)?,
            };
            let fam = family_b(&spec)?;
            emit(format!(
                "# family_b delta={} k={} m={} d={} connected={}",
                spec.delta(),
                spec.k(),
                spec.x_size(),
                spec.d(),
                fam.connected
            ))?;
            emit(write_graph6(&fam.graph))?;
        }
        Family::JoinException => {
            let p = parse_pairs(params, ',', &["delta", "h"])?;
            let delta = require(&p, "delta")?;
            let h = p.iter().find(|(k, _)| *k == "h").map(|(_, v)| *v);
            emit(write_graph6(&join_exception(delta, &parse_h(h, delta)?)?))?;
        }
        Family::Random => {
            let p = parse_pairs(params, ',', &["n", "p", "count", "seed"])?;
            let n = require(&p, "n")?;
            let prob = p
                .iter()
                .find(|(k, _)| *k == "p")
                .map(|(_, v)| parse_f64(v))
                .transpose()?
                .ok_or_else(|| CliError::Input("missing parameter p".into()))?;
            let count = get_usize(&p, "count")?.unwrap_or(1);
            let seed = match p.iter().find(|(k, _)| *k == "seed") {
                Some((_, v)) => v
                    .parse()
                    .map_err(|_| CliError::Input(format!("seed={v:?}")))?,
                None => seed,
            };
            for i in 0..count as u64 {
                emit(write_graph6(&random_graph(n, prob, seed.wrapping_add(i))?))?;
            }
        }
    }
    w.flush().map_err(io_err)?;
    Ok(Status::Clean)
}
