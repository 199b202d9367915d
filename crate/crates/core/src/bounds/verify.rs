use num_rational::Rational64;
use num_traits::ToPrimitive;

use crate::families::{exception_witness, family_b_membership};
use crate::graph::Graph;
use crate::spectral::SpectralParams;

use super::facts::{GraphFacts, Operator, Side};
use super::{phi, BoundQuery, BoundsError, TheoremId, Verdict};

fn blank(theorem: TheoremId, facts: &GraphFacts) -> Verdict {
    Verdict {
        theorem,
        premise_holds: false,
        conclusion_holds: false,
        boundary: false,
        lambda1: None,
        threshold: None,
        mu_f: facts.mu_f,
        n: facts.n,
        delta: facts.delta,
        a: None,
        b: None,
        k: None,
        alpha: None,
        extra: Default::default(),
        note: None,
    }
}

fn check_k(facts: &GraphFacts, k: Rational64) -> Result<(), BoundsError> {
    let n = Rational64::from(facts.n as i64);
    if k > Rational64::from(0) && k < n {
        Ok(())
    } else {
        Err(BoundsError::Domain(format!(
            "k = {k} must lie in (0, n = {})",
            facts.n
        )))
    }
}

fn k_f64(k: Rational64) -> f64 {
    k.to_f64().expect("finite rational")
}

/// Connected with at least two vertices, or the reason it is not.
fn connected_hypothesis(facts: &GraphFacts) -> Option<String> {
    if facts.n < 2 {
        Some(format!("n = {} < 2", facts.n))
    } else if !facts.connected {
        Some("graph is disconnected".into())
    } else {
        None
    }
}

/// Fills the spectral fields; the premise is `lambda1 < threshold - epsilon`.
fn spectral_outcome(v: &mut Verdict, lambda1: f64, threshold: f64, epsilon: f64) {
    v.lambda1 = Some(lambda1);
    v.threshold = Some(threshold);
    v.premise_holds = lambda1 < threshold - epsilon;
    v.boundary = (lambda1 - threshold).abs() <= epsilon;
}

fn set_params(v: &mut Verdict, p: &SpectralParams<f64>) {
    v.a = Some(p.a());
    v.b = Some(p.b());
}

/// Minimum-degree condition `delta > (n - k) / 2` for `mu_f > (n - k) / 2`.
pub fn check_min_degree_condition(g: &Graph, k: Rational64) -> Result<Verdict, BoundsError> {
    check_min_degree_condition_with(&GraphFacts::new(g), k)
}

pub fn check_min_degree_condition_with(
    facts: &GraphFacts,
    k: Rational64,
) -> Result<Verdict, BoundsError> {
    check_k(facts, k)?;
    let mut v = blank(TheoremId::Th2, facts);
    v.k = Some(k);
    v.conclusion_holds = facts.exceeds(k);
    match connected_hypothesis(facts) {
        Some(reason) => v.note = Some(reason),
        None => v.premise_holds = facts.degree_routes(k),
    }
    Ok(v)
}

/// `lambda1(aD + bA) < b phi(a/b, n, delta, k)` implies `mu_f > (n - k) / 2`.
///
/// When `delta > (n - k) / 2` the spectral threshold is undefined and the
/// minimum-degree verdict is returned instead.
pub fn check_spectral_condition(g: &Graph, q: &BoundQuery) -> Result<Verdict, BoundsError> {
    check_spectral_condition_with(&GraphFacts::new(g), q)
}

pub fn check_spectral_condition_with(
    facts: &GraphFacts,
    q: &BoundQuery,
) -> Result<Verdict, BoundsError> {
    check_k(facts, q.k)?;
    let mut v = blank(TheoremId::Th1, facts);
    set_params(&mut v, &q.params);
    v.k = Some(q.k);
    v.conclusion_holds = facts.exceeds(q.k);
    if let Some(reason) = connected_hypothesis(facts) {
        v.note = Some(reason);
        return Ok(v);
    }
    if facts.delta == 0 {
        v.note = Some("delta = 0".into());
        return Ok(v);
    }
    if facts.degree_routes(q.k) {
        let mut routed = check_min_degree_condition_with(facts, q.k)?;
        routed.note = Some("delta > (n - k) / 2: minimum-degree condition applies".into());
        return Ok(routed);
    }
    let (a, b) = (q.params.a(), q.params.b());
    let lambda1 = facts.radius(Operator::Mixed(q.params), Side::Graph)?;
    let threshold = b * phi(a / b, facts.n, facts.delta, k_f64(q.k))?;
    spectral_outcome(&mut v, lambda1, threshold, q.epsilon);
    Ok(v)
}

/// `lambda1(aD + bA)` of the complement `< (a + b)(delta + k - 1)` implies `mu_f > (n - k) / 2`.
pub fn check_complement_condition(g: &Graph, q: &BoundQuery) -> Result<Verdict, BoundsError> {
    check_complement_condition_with(&GraphFacts::new(g), q)
}

pub fn check_complement_condition_with(
    facts: &GraphFacts,
    q: &BoundQuery,
) -> Result<Verdict, BoundsError> {
    check_k(facts, q.k)?;
    let mut v = blank(TheoremId::Th5, facts);
    set_params(&mut v, &q.params);
    v.k = Some(q.k);
    v.conclusion_holds = facts.exceeds(q.k);
    if let Some(reason) = connected_hypothesis(facts) {
        v.note = Some(reason);
        return Ok(v);
    }
    if facts.degree_routes(q.k) {
        let mut routed = check_min_degree_condition_with(facts, q.k)?;
        routed.note = Some("delta > (n - k) / 2: minimum-degree condition applies".into());
        return Ok(routed);
    }
    let (a, b) = (q.params.a(), q.params.b());
    let lambda1 = facts.radius(Operator::Mixed(q.params), Side::Complement)?;
    let threshold = (a + b) * (facts.delta as f64 + k_f64(q.k) - 1.0);
    spectral_outcome(&mut v, lambda1, threshold, q.epsilon);
    Ok(v)
}

/// Signless-Laplacian specialisations (`a = b = 1`) of the two spectral checks.
pub fn check_signless_conditions_with(
    facts: &GraphFacts,
    k: Rational64,
    epsilon: f64,
) -> Result<(Verdict, Verdict), BoundsError> {
    let q = BoundQuery::new(k, SpectralParams::signless_laplacian(), epsilon)?;
    let mut direct = check_spectral_condition_with(facts, &q)?;
    let mut complement = check_complement_condition_with(facts, &q)?;
    if direct.theorem == TheoremId::Th1 {
        direct.theorem = TheoremId::Co3i;
    }
    if complement.theorem == TheoremId::Th5 {
        complement.theorem = TheoremId::Co3ii;
    }
    Ok((direct, complement))
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlphaVerdicts {
    /// `co4i`, `co4ii` or `co4iii` by the range of `alpha`.
    pub direct: Verdict,
    /// `co4iv`, on the complement.
    pub complement: Verdict,
}

fn alpha_branch(alpha: f64) -> TheoremId {
    if alpha == 0.0 {
        TheoremId::Co4i
    } else if alpha <= 0.5 {
        TheoremId::Co4ii
    } else {
        TheoremId::Co4iii
    }
}

/// Closed-form thresholds for `A_alpha = alpha D + (1 - alpha) A`.
fn alpha_threshold(alpha: f64, n: usize, delta: usize, k: f64) -> f64 {
    let (n, d) = (n as f64, delta as f64);
    if alpha == 0.0 {
        d * (1.0 + 2.0 * k / (n - k)).sqrt()
    } else if alpha <= 0.5 {
        2.0 * alpha * d * n / (n - k)
    } else {
        alpha * d * (n + k) / (n - k)
    }
}

fn drift(theorem: TheoremId, delegated: f64, printed: f64) -> Result<(), BoundsError> {
    if (delegated - printed).abs() <= 1e-12 * printed.abs().max(1.0) {
        Ok(())
    } else {
        Err(BoundsError::ThresholdDrift {
            theorem,
            delegated,
            printed,
        })
    }
}

/// `A_alpha` forms of both spectral checks, for `0 <= alpha <= 1`.
pub fn check_alpha_condition(
    g: &Graph,
    alpha: f64,
    k: Rational64,
    epsilon: f64,
) -> Result<AlphaVerdicts, BoundsError> {
    check_alpha_condition_with(&GraphFacts::new(g), alpha, k, epsilon)
}

pub fn check_alpha_condition_with(
    facts: &GraphFacts,
    alpha: f64,
    k: Rational64,
    epsilon: f64,
) -> Result<AlphaVerdicts, BoundsError> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(BoundsError::Domain(format!(
            "alpha = {alpha} must lie in [0, 1]"
        )));
    }
    if !(epsilon > 0.0) {
        return Err(BoundsError::Domain(format!(
            "epsilon = {epsilon} must be > 0"
        )));
    }
    check_k(facts, k)?;
    let branch = alpha_branch(alpha);
    let kf = k_f64(k);

    let (mut direct, mut complement) = if alpha < 1.0 {
        let q = BoundQuery::new(k, SpectralParams::alpha(alpha)?, epsilon)?;
        (
            check_spectral_condition_with(facts, &q)?,
            check_complement_condition_with(facts, &q)?,
        )
    } else {
        degree_end(facts, k, epsilon)?
    };

    if direct.theorem == TheoremId::Th1 {
        direct.theorem = branch;
        if let Some(t) = direct.threshold {
            drift(branch, t, alpha_threshold(alpha, facts.n, facts.delta, kf))?;
        }
    }
    if complement.theorem == TheoremId::Th5 {
        complement.theorem = TheoremId::Co4iv;
        if let Some(t) = complement.threshold {
            drift(TheoremId::Co4iv, t, facts.delta as f64 + kf - 1.0)?;
        }
    }
    for v in [&mut direct, &mut complement] {
        v.alpha = Some(alpha);
        v.a = Some(alpha);
        v.b = Some(1.0 - alpha);
    }
    Ok(AlphaVerdicts { direct, complement })
}

/// `alpha = 1`: the operator is `D`, whose radius is the maximum degree.
fn degree_end(
    facts: &GraphFacts,
    k: Rational64,
    epsilon: f64,
) -> Result<(Verdict, Verdict), BoundsError> {
    let mut direct = blank(TheoremId::Th1, facts);
    let mut complement = blank(TheoremId::Th5, facts);
    for v in [&mut direct, &mut complement] {
        v.k = Some(k);
        v.conclusion_holds = facts.exceeds(k);
    }
    if let Some(reason) = connected_hypothesis(facts) {
        direct.note = Some(reason.clone());
        complement.note = Some(reason);
        return Ok((direct, complement));
    }
    if facts.degree_routes(k) {
        let mut routed = check_min_degree_condition_with(facts, k)?;
        routed.note = Some("delta > (n - k) / 2: minimum-degree condition applies".into());
        return Ok((routed.clone(), routed));
    }
    let kf = k_f64(k);
    if facts.delta == 0 {
        direct.note = Some("delta = 0".into());
    } else {
        let lambda1 = facts.radius(Operator::Degree, Side::Graph)?;
        let n = facts.n as f64;
        let threshold = facts.delta as f64 * (n + kf) / (n - kf);
        spectral_outcome(&mut direct, lambda1, threshold, epsilon);
    }
    let lambda1 = facts.radius(Operator::Degree, Side::Complement)?;
    let threshold = facts.delta as f64 + kf - 1.0;
    spectral_outcome(&mut complement, lambda1, threshold, epsilon);
    Ok((direct, complement))
}

/// Spectral lower bound on `mu_f` and how it compares with the true value.
#[derive(Clone, Debug, PartialEq)]
pub struct LowerBound {
    pub bound: f64,
    pub holds: bool,
    /// `|mu_f - bound| <= epsilon`.
    pub tight: bool,
    /// Connected and `1 <= delta <= (n - 1) / 2`.
    pub in_regime: bool,
    pub tight_outside_family: bool,
    pub lambda1: f64,
    pub a: f64,
    pub b: f64,
}

/// Lower bound on `mu_f` from `lambda1(aD + A)`.
pub fn mu_f_lower_bound(g: &Graph, a: f64, epsilon: f64) -> Result<LowerBound, BoundsError> {
    let params = SpectralParams::new(a, 1.0)?;
    mu_f_lower_bound_with(&GraphFacts::new(g), &params, epsilon)
}

/// General `b` is handled by scaling: `lambda1(aD + bA) / b = lambda1((a/b) D + A)`.
pub fn mu_f_lower_bound_with(
    facts: &GraphFacts,
    params: &SpectralParams<f64>,
    epsilon: f64,
) -> Result<LowerBound, BoundsError> {
    if !(epsilon > 0.0) {
        return Err(BoundsError::Domain(format!(
            "epsilon = {epsilon} must be > 0"
        )));
    }
    if facts.n == 0 {
        return Err(BoundsError::Domain("empty graph".into()));
    }
    let (a, b) = (params.a(), params.b());
    let lambda1 = facts.radius(Operator::Mixed(*params), Side::Graph)?;
    let lam = lambda1 / b;
    let r = a / b;
    let (n, d) = (facts.n as f64, facts.delta as f64);
    let bound = if facts.delta == 0 {
        0.0
    } else if r == 0.0 {
        n * d * d / (lam * lam + d * d)
    } else if r <= 1.0 {
        r * d * n / lam
    } else {
        r * d * n / (lam + r * d)
    };
    let mu = facts.mu_f.to_f64();
    let tight = (mu - bound).abs() <= epsilon;
    let in_regime =
        facts.connected && facts.n >= 2 && facts.delta >= 1 && 2 * facts.delta < facts.n;
    Ok(LowerBound {
        bound,
        holds: mu >= bound - epsilon,
        tight,
        in_regime,
        tight_outside_family: tight && family_b_membership(&facts.graph).is_none(),
        lambda1,
        a,
        b,
    })
}

/// Lower-bound result as a verdict: premise is the regime, conclusion is `mu_f >= bound`.
pub fn lower_bound_verdict(facts: &GraphFacts, lb: &LowerBound) -> Verdict {
    let mut v = blank(TheoremId::Th3, facts);
    v.a = Some(lb.a);
    v.b = Some(lb.b);
    v.lambda1 = Some(lb.lambda1);
    v.threshold = Some(lb.bound);
    v.premise_holds = lb.in_regime;
    v.conclusion_holds = lb.holds;
    v.boundary = lb.in_regime && lb.tight;
    v.extra.insert(
        "tight_outside_family",
        f64::from(u8::from(lb.tight_outside_family)),
    );
    if !lb.in_regime {
        v.note = Some("outside 1 <= delta <= (n - 1) / 2 on a connected graph".into());
    }
    v
}

#[derive(Clone, Debug, PartialEq)]
pub struct FpmVerdicts {
    /// `lambda1(aD + bA) < b phi(a/b, n, delta, 1)`.
    pub th4: Verdict,
    /// complement `lambda1 < (a + b) delta`.
    pub th7: Verdict,
    /// complement `lambda1 < (a + b)(delta + 1)`, allowing the join exception.
    pub final_check: Verdict,
    pub exception: Option<Vec<usize>>,
}

/// Spectral conditions for a fractional perfect matching.
pub fn check_fpm_spectral(g: &Graph, a: f64, epsilon: f64) -> Result<FpmVerdicts, BoundsError> {
    let params = SpectralParams::new(a, 1.0)?;
    check_fpm_spectral_with(&GraphFacts::new(g), &params, epsilon)
}

pub fn check_fpm_spectral_with(
    facts: &GraphFacts,
    params: &SpectralParams<f64>,
    epsilon: f64,
) -> Result<FpmVerdicts, BoundsError> {
    if !(epsilon > 0.0) {
        return Err(BoundsError::Domain(format!(
            "epsilon = {epsilon} must be > 0"
        )));
    }
    let mut out = [TheoremId::Th4, TheoremId::Th7, TheoremId::Final].map(|t| {
        let mut v = blank(t, facts);
        set_params(&mut v, params);
        v.k = Some(Rational64::from(1));
        v.conclusion_holds = facts.fpm();
        v
    });
    let fail = connected_hypothesis(facts).or_else(|| {
        (facts.delta == 0 || 2 * facts.delta >= facts.n)
            .then(|| format!("delta = {} outside [1, (n - 1) / 2]", facts.delta))
    });
    if let Some(reason) = fail {
        for v in &mut out {
            v.note = Some(reason.clone());
        }
        let [th4, th7, final_check] = out;
        return Ok(FpmVerdicts {
            th4,
            th7,
            final_check,
            exception: None,
        });
    }

    let (a, b) = (params.a(), params.b());
    let fpm = facts.fpm();
    let direct = facts.radius(Operator::Mixed(*params), Side::Graph)?;
    let comp = facts.radius(Operator::Mixed(*params), Side::Complement)?;
    let d = facts.delta as f64;
    let [mut th4, mut th7, mut final_check] = out;

    let t4 = b * phi(a / b, facts.n, facts.delta, 1.0)?;
    spectral_outcome(&mut th4, direct, t4, epsilon);
    spectral_outcome(&mut th7, comp, (a + b) * d, epsilon);

    let exception = if fpm {
        None
    } else {
        exception_witness(&facts.graph, facts.delta)
    };
    spectral_outcome(&mut final_check, comp, (a + b) * (d + 1.0), epsilon);
    final_check.conclusion_holds = fpm || exception.is_some();
    final_check
        .extra
        .insert("exception", f64::from(u8::from(exception.is_some())));
    if let Some(s) = &exception {
        final_check.note = Some(format!("join exception with S = {s:?}"));
    }
    Ok(FpmVerdicts {
        th4,
        th7,
        final_check,
        exception,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{Outcome, DEFAULT_EPSILON};
    use crate::families::{complete_bipartite, family_b, join_exception, FamilyBSpec};

    fn default_query(k: Rational64, params: SpectralParams<f64>) -> BoundQuery {
        BoundQuery {
            k,
            params,
            epsilon: DEFAULT_EPSILON,
        }
    }

    fn r(n: i64) -> Rational64 {
        Rational64::from(n)
    }

    #[test]
    fn k23_is_a_boundary_case_of_the_direct_check() {
        let g = complete_bipartite(2, 3);
        for (a, thr) in [(0.0, 6f64.sqrt()), (1.0, 5.0)] {
            let q = default_query(r(1), SpectralParams::new(a, 1.0).unwrap());
            let v = check_spectral_condition(&g, &q).unwrap();
            assert_eq!(v.theorem, TheoremId::Th1);
            assert!((v.threshold.unwrap() - thr).abs() < 1e-12);
            assert!((v.lambda1.unwrap() - thr).abs() < 1e-9);
            assert!(!v.conclusion_holds);
            assert_eq!(v.outcome(), Outcome::Boundary);
        }
    }

    #[test]
    fn min_degree_routing() {
        // K4: delta = 3 > (4 - 1) / 2
        let q = default_query(r(1), SpectralParams::adjacency());
        let v = check_spectral_condition(&Graph::complete(4), &q).unwrap();
        assert_eq!(v.theorem, TheoremId::Th2);
        assert!(v.premise_holds && v.conclusion_holds);
        assert_eq!(v.outcome(), Outcome::Confirmed);
        // C5: 2 * 2 > 5 - 2, but not 5 - 1
        let v = check_min_degree_condition(&Graph::cycle(5), r(2)).unwrap();
        assert!(v.premise_holds && v.conclusion_holds);
        let v = check_min_degree_condition(&Graph::cycle(5), r(1)).unwrap();
        assert!(!v.premise_holds && v.conclusion_holds);
        // 4 > 5 - 3/2 holds exactly
        let v = check_min_degree_condition(&Graph::cycle(5), Rational64::new(3, 2)).unwrap();
        assert!(v.premise_holds);
    }

    #[test]
    fn k_domain_errors() {
        let q = default_query(r(1), SpectralParams::adjacency());
        assert!(matches!(
            check_spectral_condition(&Graph::empty(1), &q),
            Err(BoundsError::Domain(_))
        ));
        assert!(check_min_degree_condition(&Graph::cycle(5), r(0)).is_err());
        assert!(check_min_degree_condition(&Graph::cycle(5), r(5)).is_err());
    }

    #[test]
    fn disconnected_graphs_are_vacuous() {
        let g = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
        let q = default_query(r(1), SpectralParams::adjacency());
        let v = check_spectral_condition(&g, &q).unwrap();
        assert_eq!(v.outcome(), Outcome::Vacuous);
        assert!(v.note.is_some());
    }

    #[test]
    fn alpha_thresholds_match_closed_forms() {
        let g = Graph::path(7);
        for alpha in [0.0, 0.25, 0.5, 0.75] {
            let v = check_alpha_condition(&g, alpha, r(1), DEFAULT_EPSILON).unwrap();
            assert_eq!(v.direct.theorem, alpha_branch(alpha));
            assert_eq!(v.complement.theorem, TheoremId::Co4iv);
            assert!((v.complement.threshold.unwrap() - 1.0).abs() < 1e-12);
        }
        let v = check_alpha_condition(&g, 1.0, r(1), DEFAULT_EPSILON).unwrap();
        assert_eq!(v.direct.theorem, TheoremId::Co4iii);
        assert_eq!(v.direct.lambda1, Some(2.0));
        assert!((v.direct.threshold.unwrap() - 8.0 / 6.0).abs() < 1e-12);
        assert!(check_alpha_condition(&g, 1.5, r(1), DEFAULT_EPSILON).is_err());
    }

    #[test]
    fn family_member_is_tight_for_the_lower_bound() {
        let fam = family_b(&FamilyBSpec::new(2, 1, 2).unwrap()).unwrap();
        for a in [0.0, 1.0] {
            let lb = mu_f_lower_bound(&fam.graph, a, DEFAULT_EPSILON).unwrap();
            assert!(lb.holds && lb.tight && lb.in_regime && !lb.tight_outside_family);
            assert!((lb.bound - 2.0).abs() < 1e-9);
        }
        let lb = mu_f_lower_bound(&fam.graph, 2.0, DEFAULT_EPSILON).unwrap();
        assert!(lb.holds && !lb.tight);
    }

    #[test]
    fn c5_lower_bound_is_tight_outside_the_family() {
        let lb = mu_f_lower_bound(&Graph::cycle(5), 0.0, DEFAULT_EPSILON).unwrap();
        assert!((lb.bound - 2.5).abs() < 1e-9);
        assert!(lb.tight && lb.tight_outside_family);
        // delta = 2 > (5 - 1) / 2 is false, so C5 is in the regime
        assert!(lb.in_regime);
    }

    #[test]
    fn join_exception_is_accepted_by_the_final_check() {
        let g = join_exception(2, &[]).unwrap();
        let v = check_fpm_spectral(&g, 0.0, DEFAULT_EPSILON).unwrap();
        assert_eq!(v.exception, Some(vec![3, 4]));
        assert!(v.final_check.conclusion_holds);
        assert!(!v.th4.conclusion_holds);
        assert!(v.th4.outcome() != Outcome::Counterexample);
        assert!(v.th7.outcome() != Outcome::Counterexample);
    }

    #[test]
    fn fpm_hypotheses() {
        let v = check_fpm_spectral(&Graph::complete(4), 1.0, DEFAULT_EPSILON).unwrap();
        assert!(v.th4.note.is_some());
        assert_eq!(v.final_check.outcome(), Outcome::Vacuous);
        let v = check_fpm_spectral(&Graph::cycle(6), 1.0, DEFAULT_EPSILON).unwrap();
        assert!(v.th4.conclusion_holds);
    }
}
