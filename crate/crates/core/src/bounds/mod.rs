//! Executable forms of the spectral sufficient conditions for large
//! fractional matchings, and a corpus scanner that looks for violations.
//!
//! Every check returns a [`Verdict`]. A check is a counterexample only when
//! its premise holds strictly (by more than `epsilon`), its conclusion fails,
//! and the spectral value is not within `epsilon` of the threshold.

mod facts;
mod phi;
mod scan;
mod verify;

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use thiserror::Error;

use crate::fracmatch::HalfInt;
use crate::spectral::{SpectralError, SpectralParams};

pub use facts::{GraphFacts, Operator, Side};
pub use phi::phi;
pub use scan::{
    scan_for_counterexamples, verdicts_for_graph, OutcomeCounts, ScanGrid, ScanItem, ScanReport,
};
pub use verify::{
    check_alpha_condition, check_alpha_condition_with, check_complement_condition,
    check_complement_condition_with, check_fpm_spectral, check_fpm_spectral_with,
    check_min_degree_condition, check_min_degree_condition_with, check_signless_conditions_with,
    check_spectral_condition, check_spectral_condition_with, lower_bound_verdict, mu_f_lower_bound,
    mu_f_lower_bound_with, AlphaVerdicts, FpmVerdicts, LowerBound,
};

/// Strictness margin for spectral inequalities.
pub const DEFAULT_EPSILON: f64 = 1e-9;
/// Eigen-solver tolerance used by the verifiers.
pub const SPECTRAL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("parameter out of domain: {0}")]
    Domain(String),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("{theorem}: delegated threshold {delegated} differs from the closed form {printed}")]
    ThresholdDrift {
        theorem: TheoremId,
        delegated: f64,
        printed: f64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// `lambda1(aD + bA) < b phi(a/b, n, delta, k)`
    Th1,
    /// `lambda1(aD + bA)` of the complement `< (a + b)(delta + k - 1)`
    Th5,
    /// `delta > (n - k) / 2`
    Th2,
    Co3i,
    Co3ii,
    Co4i,
    Co4ii,
    Co4iii,
    Co4iv,
    /// lower bounds on `mu_f`
    Th3,
    Th4,
    Th7,
    /// complement condition with threshold `(a + b)(delta + 1)` and its exception family
    Final,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::Th1,
        TheoremId::Th5,
        TheoremId::Th2,
        TheoremId::Co3i,
        TheoremId::Co3ii,
        TheoremId::Co4i,
        TheoremId::Co4ii,
        TheoremId::Co4iii,
        TheoremId::Co4iv,
        TheoremId::Th3,
        TheoremId::Th4,
        TheoremId::Th7,
        TheoremId::Final,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Th1 => "th1",
            TheoremId::Th5 => "th5",
            TheoremId::Th2 => "th2",
            TheoremId::Co3i => "co3i",
            TheoremId::Co3ii => "co3ii",
            TheoremId::Co4i => "co4i",
            TheoremId::Co4ii => "co4ii",
            TheoremId::Co4iii => "co4iii",
            TheoremId::Co4iv => "co4iv",
            TheoremId::Th3 => "th3",
            TheoremId::Th4 => "th4",
            TheoremId::Th7 => "th7",
            TheoremId::Final => "final",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.as_str() == s)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Outcome {
    Vacuous,
    Confirmed,
    Boundary,
    Counterexample,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Vacuous => "vacuous",
            Outcome::Confirmed => "confirmed",
            Outcome::Boundary => "boundary",
            Outcome::Counterexample => "counterexample",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `k` and the strictness margin for a spectral check with coefficients `(a, b)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundQuery {
    pub k: Rational64,
    pub params: SpectralParams<f64>,
    pub epsilon: f64,
}

impl BoundQuery {
    pub fn new(
        k: Rational64,
        params: SpectralParams<f64>,
        epsilon: f64,
    ) -> Result<Self, BoundsError> {
        if !(epsilon > 0.0) {
            return Err(BoundsError::Domain(format!(
                "epsilon = {epsilon} must be > 0"
            )));
        }
        Ok(BoundQuery { k, params, epsilon })
    }
}

/// Result of checking one theorem on one graph.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub theorem: TheoremId,
    /// The theorem's hypotheses hold and its spectral (or degree) premise holds strictly.
    pub premise_holds: bool,
    pub conclusion_holds: bool,
    /// `|lambda1 - threshold| <= epsilon`; for lower bounds, equality within `epsilon`.
    pub boundary: bool,
    pub lambda1: Option<f64>,
    pub threshold: Option<f64>,
    pub mu_f: HalfInt,
    pub n: usize,
    pub delta: usize,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub k: Option<Rational64>,
    pub alpha: Option<f64>,
    pub extra: BTreeMap<&'static str, f64>,
    /// Why the check was vacuous or how it was routed.
    pub note: Option<String>,
}

impl Verdict {
    pub fn outcome(&self) -> Outcome {
        if self.premise_holds && !self.conclusion_holds && !self.boundary {
            Outcome::Counterexample
        } else if self.boundary {
            Outcome::Boundary
        } else if self.premise_holds {
            Outcome::Confirmed
        } else {
            Outcome::Vacuous
        }
    }

    pub fn is_counterexample(&self) -> bool {
        self.outcome() == Outcome::Counterexample
    }
}
