use num_rational::Rational64;
use rayon::prelude::*;

use crate::graph::Graph;
use crate::spectral::SpectralParams;

use super::facts::GraphFacts;
use super::verify::{
    check_alpha_condition_with, check_complement_condition_with, check_fpm_spectral_with,
    check_signless_conditions_with, check_spectral_condition_with, lower_bound_verdict,
    mu_f_lower_bound_with,
};
use super::{BoundQuery, BoundsError, Outcome, TheoremId, Verdict};

/// Parameter grid for a corpus scan.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanGrid {
    pub params: Vec<SpectralParams<f64>>,
    pub ks: Vec<Rational64>,
    pub alphas: Vec<f64>,
}

impl ScanGrid {
    /// Cartesian product of `a_values` and `b_values`. Without explicit
    /// `alphas`, uses `a / (a + b)` for every pair followed by `1`.
    pub fn new(
        a_values: &[f64],
        b_values: &[f64],
        ks: Vec<Rational64>,
        alphas: Option<Vec<f64>>,
    ) -> Result<Self, BoundsError> {
        let mut params = Vec::new();
        for &a in a_values {
            for &b in b_values {
                params.push(SpectralParams::new(a, b)?);
            }
        }
        let alphas = match alphas {
            Some(list) => list,
            None => {
                let mut list: Vec<f64> = Vec::new();
                for p in &params {
                    let alpha = p.a() / (p.a() + p.b());
                    if !list.contains(&alpha) {
                        list.push(alpha);
                    }
                }
                if !list.contains(&1.0) {
                    list.push(1.0);
                }
                list
            }
        };
        if let Some(bad) = alphas.iter().find(|x| !(0.0..=1.0).contains(*x)) {
            return Err(BoundsError::Domain(format!(
                "alpha = {bad} must lie in [0, 1]"
            )));
        }
        if let Some(bad) = ks.iter().find(|k| **k <= Rational64::from(0)) {
            return Err(BoundsError::Domain(format!("k = {bad} must be > 0")));
        }
        Ok(ScanGrid { params, ks, alphas })
    }
}

/// Every verdict for one graph, in a fixed order:
///
/// for each `k` with `0 < k < n`: either one `th2` record (when
/// `delta > (n - k) / 2`), or `th1` and `th5` for each `(a, b)`, then `co3i`,
/// `co3ii`, then the direct and complement `A_alpha` checks per `alpha`;
/// then for each `(a, b)`: `th3`, `th4`, `th7`, `final`.
pub fn verdicts_for_graph(
    g: &Graph,
    grid: &ScanGrid,
    epsilon: f64,
) -> Result<Vec<Verdict>, BoundsError> {
    let facts = GraphFacts::new(g);
    let n = Rational64::from(g.order() as i64);
    let mut out = Vec::new();
    for &k in grid.ks.iter().filter(|&&k| k < n) {
        if facts.connected && facts.n >= 2 && facts.degree_routes(k) {
            out.push(super::check_min_degree_condition_with(&facts, k)?);
            continue;
        }
        for p in &grid.params {
            let q = BoundQuery::new(k, *p, epsilon)?;
            out.push(check_spectral_condition_with(&facts, &q)?);
            out.push(check_complement_condition_with(&facts, &q)?);
        }
        let (c1, c2) = check_signless_conditions_with(&facts, k, epsilon)?;
        out.push(c1);
        out.push(c2);
        for &alpha in &grid.alphas {
            let v = check_alpha_condition_with(&facts, alpha, k, epsilon)?;
            out.push(v.direct);
            out.push(v.complement);
        }
    }
    if facts.n > 0 {
        for p in &grid.params {
            let lb = mu_f_lower_bound_with(&facts, p, epsilon)?;
            out.push(lower_bound_verdict(&facts, &lb));
            let f = check_fpm_spectral_with(&facts, p, epsilon)?;
            out.push(f.th4);
            out.push(f.th7);
            out.push(f.final_check);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanItem {
    /// Zero-based position in the corpus.
    pub index: usize,
    pub graph: Graph,
    pub verdicts: Result<Vec<Verdict>, BoundsError>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OutcomeCounts {
    pub vacuous: usize,
    pub confirmed: usize,
    pub boundary: usize,
    pub counterexample: usize,
}

impl OutcomeCounts {
    pub fn add(&mut self, o: Outcome) {
        match o {
            Outcome::Vacuous => self.vacuous += 1,
            Outcome::Confirmed => self.confirmed += 1,
            Outcome::Boundary => self.boundary += 1,
            Outcome::Counterexample => self.counterexample += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.vacuous + self.confirmed + self.boundary + self.counterexample
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ScanReport {
    pub items: Vec<ScanItem>,
    /// Corpus entries that failed to parse, with their index and reason.
    pub skipped: Vec<(usize, String)>,
    pub counts: OutcomeCounts,
    /// Graphs whose verdict computation failed.
    pub errors: usize,
}

impl ScanReport {
    pub fn counterexamples(&self) -> impl Iterator<Item = (&ScanItem, &Verdict)> {
        self.items.iter().flat_map(|item| {
            item.verdicts
                .iter()
                .flatten()
                .filter(|v| v.is_counterexample())
                .map(move |v| (item, v))
        })
    }

    pub fn by_theorem(&self, theorem: TheoremId) -> OutcomeCounts {
        let mut c = OutcomeCounts::default();
        for v in self
            .items
            .iter()
            .filter_map(|i| i.verdicts.as_ref().ok())
            .flatten()
        {
            if v.theorem == theorem {
                c.add(v.outcome());
            }
        }
        c
    }
}

/// Checks every graph of `corpus` against the whole grid on `jobs` threads.
///
/// Output order follows the corpus regardless of `jobs`.
pub fn scan_for_counterexamples<I>(
    corpus: I,
    grid: &ScanGrid,
    epsilon: f64,
    jobs: usize,
) -> Result<ScanReport, BoundsError>
where
    I: IntoIterator<Item = Result<Graph, String>>,
{
    if !(epsilon > 0.0) {
        return Err(BoundsError::Domain(format!(
            "epsilon = {epsilon} must be > 0"
        )));
    }
    let mut graphs = Vec::new();
    let mut skipped = Vec::new();
    for (index, entry) in corpus.into_iter().enumerate() {
        match entry {
            Ok(g) => graphs.push((index, g)),
            Err(reason) => skipped.push((index, reason)),
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| BoundsError::Domain(format!("thread pool: {e}")))?;
    let items: Vec<ScanItem> = pool.install(|| {
        graphs
            .into_par_iter()
            .map(|(index, graph)| {
                let verdicts = verdicts_for_graph(&graph, grid, epsilon);
                ScanItem {
                    index,
                    graph,
                    verdicts,
                }
            })
            .collect()
    });
    let mut counts = OutcomeCounts::default();
    let mut errors = 0;
    for item in &items {
        match &item.verdicts {
            Ok(vs) => vs.iter().for_each(|v| counts.add(v.outcome())),
            Err(_) => errors += 1,
        }
    }
    Ok(ScanReport {
        items,
        skipped,
        counts,
        errors,
    })
}
