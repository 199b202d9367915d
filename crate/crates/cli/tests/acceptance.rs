//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use specmatch::bounds::{
    check_complement_condition, check_fpm_spectral, check_spectral_condition, mu_f_lower_bound, phi,
};
use specmatch::families::{
    complete_bipartite, exception_witness, family_b, random_graph, FamilyBSpec,
};
use specmatch::fracmatch::deficiency_bruteforce;
use specmatch::spectral::{
    build_matrix, eigenvalues, family_quotient_radius, interlaces, quotient_matrix, spectral_radius,
};
use specmatch::{
    fractional_matching_number, parse_graph6, BoundQuery, Graph, Outcome, Params, Rational64,
    DEFAULT_EPSILON,
};

type Check = Result<String, String>;
type Criterion<'a> = Box<dyn Fn() -> Check + 'a>;

const TOL: f64 = 1e-10;
const GRID_A: [f64; 4] = [0.0, 0.5, 1.0, 2.0];
const PAIRS: [(usize, usize); 4] = [(1, 1), (2, 1), (2, 2), (3, 1)];

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn load(name: &str) -> Vec<Graph> {
    std::fs::read_to_string(data(name))
        .unwrap()
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_graph6(l).unwrap())
        .collect()
}

fn radius(g: &Graph, a: f64) -> f64 {
    spectral_radius(&build_matrix(g, &Params::new(a, 1.0).unwrap()), TOL).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle_equivalence(small: &[Graph], nine: &[Graph]) -> Check {
    let mut per_n = [0usize; 10];
    for g in small.iter().chain(nine) {
        let n = g.order();
        per_n[n] += 1;
        let two_mu = fractional_matching_number(g).twice() as i64;
        let def = deficiency_bruteforce(g).map_err(|e| e.to_string())?.value;
        ensure(two_mu == n as i64 - def, || {
            format!(
                "{}: 2 mu_f = {two_mu}, n - def = {}",
                specmatch::write_graph6(g),
                n as i64 - def
            )
        })?;
    }
    let known = [0, 1, 1, 2, 6, 21, 112, 853, 11117, 261080];
    ensure(per_n == known, || {
        format!("corpus counts {per_n:?} differ from {known:?}")
    })?;
    Ok(format!(
        "{} connected graphs, n <= 9",
        small.len() + nine.len()
    ))
}

fn run_scan(jobs: &str, out: &Path, extra: &[&str]) -> Result<String, String> {
    let corpus = data("connected_n1_8.g6");
    let o = Command::new(env!("CARGO_BIN_EXE_specmatch"))
        .args([
            "scan",
            corpus.to_str().unwrap(),
            "a=0,0.5,1,2;b=1;k=0.5,1,2",
            "--epsilon",
            "1e-9",
        ])
        .args(["--jobs", jobs, "--out", out.to_str().unwrap()])
        .args(extra)
        .output()
        .map_err(|e| e.to_string())?;
    let summary = String::from_utf8_lossy(&o.stdout).trim().to_string();
    ensure(o.status.code() == Some(0), || {
        format!(
            "exit {:?}: {summary} {}",
            o.status.code(),
            String::from_utf8_lossy(&o.stderr)
        )
    })?;
    Ok(summary)
}

fn no_counterexamples(report: &Path) -> Check {
    let summary = run_scan("8", report, &[])?;
    let text = std::fs::read_to_string(report).map_err(|e| e.to_string())?;
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap_or_default().split(',').collect();
    let theorem = header
        .iter()
        .position(|h| *h == "theorem")
        .ok_or("no theorem column")?;
    let verdict = header
        .iter()
        .position(|h| *h == "verdict")
        .ok_or("no verdict column")?;
    let mut checked = 0;
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        ensure(f[verdict] != "counterexample", || {
            format!("counterexample: {line}")
        })?;
        if [
            "th1", "th5", "co3i", "co3ii", "co4i", "co4ii", "co4iii", "co4iv",
        ]
        .contains(&f[theorem])
        {
            checked += 1;
        }
    }
    ensure(checked > 0, || "no th1/th5/co3/co4 records".into())?;
    Ok(format!("{checked} th1/th5/co3/co4 records; {summary}"))
}

fn sharpness() -> Check {
    for (delta, k) in PAIRS {
        let g = complete_bipartite(delta, delta + k);
        let n = g.order();
        let kf = k as f64;
        ensure(
            fractional_matching_number(&g).twice() == 2 * delta as u64,
            || format!("mu_f of K{delta},{}", delta + k),
        )?;
        for a in [0.0, 1.0] {
            let lambda = radius(&g, a);
            let closed: f64 =
                family_quotient_radius(a, delta, delta, delta + k).map_err(|e| e.to_string())?;
            let want = phi(a, n, delta, kf).map_err(|e| e.to_string())?;
            ensure(
                (lambda - want).abs() <= 1e-8 && (closed - want).abs() <= 1e-8,
                || {
                    format!(
                        "K{delta},{}: a={a} lambda1={lambda} closed={closed} phi={want}",
                        delta + k
                    )
                },
            )?;
            let q = BoundQuery::new(
                Rational64::from(k as i64),
                Params::new(a, 1.0).unwrap(),
                DEFAULT_EPSILON,
            )
            .unwrap();
            let v = check_spectral_condition(&g, &q).map_err(|e| e.to_string())?;
            ensure(v.outcome() == Outcome::Boundary, || format!("{v:?}"))?;
        }
        for a in [0.0, 1.0, 2.0] {
            let lambda = radius(&g.complement(), a);
            let want = (a + 1.0) * (delta + k - 1) as f64;
            ensure((lambda - want).abs() <= 1e-8, || {
                format!("complement a={a}: {lambda} vs {want}")
            })?;
            let q = BoundQuery::new(
                Rational64::from(k as i64),
                Params::new(a, 1.0).unwrap(),
                DEFAULT_EPSILON,
            )
            .unwrap();
            let v = check_complement_condition(&g, &q).map_err(|e| e.to_string())?;
            ensure(v.outcome() == Outcome::Boundary, || format!("{v:?}"))?;
        }
    }
    let k23 = radius(&complete_bipartite(2, 3), 0.0);
    Ok(format!(
        "K2,3 lambda1 = {k23:.12} (sqrt 6 = {:.12}); 4 (delta, k) pairs",
        6f64.sqrt()
    ))
}

fn family_members() -> Vec<(FamilyBSpec, Graph)> {
    let mut out = Vec::new();
    for m in 1..=12usize {
        for delta in 1..=m {
            for k in 1..=12usize {
                if let Ok(spec) = FamilyBSpec::new(delta, k, m) {
                    out.push((spec, family_b(&spec).unwrap().graph));
                }
            }
        }
    }
    out
}

fn strictness(members: &[(FamilyBSpec, Graph)]) -> Check {
    let mut min_gap = f64::INFINITY;
    for (spec, g) in members {
        for a in [0.5, 2.0] {
            let gap = radius(g, a)
                - phi(a, g.order(), spec.delta(), spec.k() as f64).map_err(|e| e.to_string())?;
            min_gap = min_gap.min(gap);
            ensure(gap > 1e-9, || format!("{spec:?} a={a}: gap {gap}"))?;
        }
    }
    Ok(format!(
        "{} members, smallest gap {min_gap:.3e}",
        members.len()
    ))
}

fn lower_bounds(small: &[Graph]) -> Check {
    let mut in_regime = 0;
    for g in small {
        for a in GRID_A {
            let lb = mu_f_lower_bound(g, a, DEFAULT_EPSILON).map_err(|e| e.to_string())?;
            if lb.in_regime {
                in_regime += 1;
                ensure(lb.holds, || {
                    format!("{}: {lb:?}", specmatch::write_graph6(g))
                })?;
            }
        }
    }
    for (delta, k) in PAIRS {
        let g = complete_bipartite(delta, delta + k);
        let mu = fractional_matching_number(&g).to_f64();
        for a in [0.0, 1.0] {
            let lb = mu_f_lower_bound(&g, a, DEFAULT_EPSILON).map_err(|e| e.to_string())?;
            ensure((mu - lb.bound).abs() <= 1e-8, || {
                format!("K{delta},{} a={a}: {lb:?}", delta + k)
            })?;
        }
    }
    Ok(format!(
        "{in_regime} (graph, a) pairs in regime; equality on 4 complete bipartite graphs"
    ))
}

fn fpm_corollaries(small: &[Graph]) -> Check {
    let mut premises = 0;
    let mut exceptions = 0;
    for g in small {
        for a in GRID_A {
            let v = check_fpm_spectral(g, a, DEFAULT_EPSILON).map_err(|e| e.to_string())?;
            let fpm = fractional_matching_number(g).twice() == g.order() as u64;
            for r in [&v.th4, &v.th7] {
                if r.premise_holds && !r.boundary {
                    premises += 1;
                    ensure(fpm, || {
                        format!(
                            "{} {}: premise holds without FPM",
                            r.theorem,
                            specmatch::write_graph6(g)
                        )
                    })?;
                }
            }
            let f = &v.final_check;
            if f.premise_holds && !f.boundary && !fpm {
                exceptions += 1;
                let s = exception_witness(g, g.min_degree()).ok_or_else(|| {
                    format!(
                        "final: no exception structure in {}",
                        specmatch::write_graph6(g)
                    )
                })?;
                let (rest, _) = g.delete_vertices(&s).map_err(|e| e.to_string())?;
                ensure(
                    rest.isolated_count() == s.len() + 1 && rest.order() == s.len() + 1,
                    || format!("final: witness {s:?} does not isolate delta + 1 vertices"),
                )?;
            }
        }
    }
    Ok(format!("{premises} th4/th7 premises all with FPM; {exceptions} final-premise graphs without FPM, all join exceptions"))
}

fn spectral_correctness(members: &[(FamilyBSpec, Graph)]) -> Check {
    let mut rng = SplitMix64::seed_from_u64(7);
    let mut worst = 0f64;
    for i in 0..1000u64 {
        let n = 1 + (rng.next_u64() % 20) as usize;
        let p = (rng.next_u64() % 1000) as f64 / 1000.0;
        let g = random_graph(n, p, i).map_err(|e| e.to_string())?;
        let a = GRID_A[(i % 4) as usize];
        let m = build_matrix(&g, &Params::new(a, 1.0).unwrap());
        let s = eigenvalues(&m, TOL).map_err(|e| e.to_string())?;
        worst = worst.max(s.residual);
        ensure(s.residual <= 1e-10, || {
            format!("graph {i}: residual {}", s.residual)
        })?;
        ensure((s.sum() - m.trace()).abs() <= 1e-8, || {
            format!("graph {i}: trace {} vs {}", s.sum(), m.trace())
        })?;
    }
    let mut pairs = 0;
    while pairs < 1000 {
        let n = 2 + (rng.next_u64() % 15) as usize;
        let g = random_graph(n, (rng.next_u64() % 1000) as f64 / 1000.0, rng.next_u64())
            .map_err(|e| e.to_string())?;
        let classes = 1 + (rng.next_u64() % (n as u64 - 1)) as usize;
        let mut blocks = vec![Vec::new(); classes];
        for v in 0..n {
            let c = if v < classes {
                v
            } else {
                (rng.next_u64() % classes as u64) as usize
            };
            blocks[c].push(v);
        }
        let m = build_matrix(&g, &Params::new(GRID_A[pairs % 4], 1.0).unwrap());
        let theta = eigenvalues(&m, TOL).map_err(|e| e.to_string())?.values;
        let eta = quotient_matrix(&m, &blocks)
            .and_then(|q| q.eigenvalues(TOL))
            .map_err(|e| e.to_string())?
            .values;
        let il = interlaces(&theta, &eta, 1e-8).map_err(|e| e.to_string())?;
        ensure(il.holds, || {
            format!("interlacing fails: {theta:?} / {eta:?}")
        })?;
        pairs += 1;
    }
    for (spec, g) in members {
        let x: Vec<usize> = (0..spec.x_size()).collect();
        let y: Vec<usize> = (spec.x_size()..g.order()).collect();
        for a in GRID_A {
            let m = build_matrix(g, &Params::new(a, 1.0).unwrap());
            let q = quotient_matrix(&m, &[x.clone(), y.clone()]).map_err(|e| e.to_string())?;
            ensure(q.equitable, || format!("{spec:?} partition not equitable"))?;
            let eta = q.eigenvalues(TOL).map_err(|e| e.to_string())?.radius();
            let lambda = spectral_radius(&m, TOL).map_err(|e| e.to_string())?;
            ensure((eta - lambda).abs() <= 1e-8, || {
                format!("{spec:?} a={a}: {eta} vs {lambda}")
            })?;
        }
    }
    Ok(format!(
        "worst residual {worst:.2e}; 1000 interlacing pairs; {} equitable quotients",
        members.len()
    ))
}

fn determinism(first: &Path, dir: &Path) -> Check {
    let second = dir.join("scan_jobs1.csv");
    run_scan("1", &second, &[])?;
    let (a, b) = (
        std::fs::read(first).map_err(|e| e.to_string())?,
        std::fs::read(&second).map_err(|e| e.to_string())?,
    );
    ensure(a == b, || {
        "CSV reports differ between --jobs 8 and --jobs 1".into()
    })?;
    let (j8, j1) = (dir.join("scan_jobs8.jsonl"), dir.join("scan_jobs1.jsonl"));
    run_scan("8", &j8, &["--json"])?;
    run_scan("1", &j1, &["--json"])?;
    let (a2, b2) = (
        std::fs::read(&j8).map_err(|e| e.to_string())?,
        std::fs::read(&j1).map_err(|e| e.to_string())?,
    );
    for f in [first, second.as_path(), j8.as_path(), j1.as_path()] {
        let _ = std::fs::remove_file(f);
    }
    ensure(a2 == b2, || {
        "JSON reports differ between --jobs 8 and --jobs 1".into()
    })?;
    Ok(format!(
        "{} CSV bytes and {} JSON bytes identical",
        a.len(),
        a2.len()
    ))
}

fn main() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let small = load("connected_n1_8.g6");
    let nine = load("connected_n9.g6");
    let members = family_members();
    let report = dir.join("scan_jobs8.csv");

    let criteria: Vec<(&str, Criterion)> = vec![
        (
            "oracle equivalence: 2 mu_f = n - max_S(i(G-S) - |S|)",
            Box::new(|| oracle_equivalence(&small, &nine)),
        ),
        (
            "no counterexamples in the n <= 8 scan",
            Box::new(|| no_counterexamples(&report)),
        ),
        (
            "sharpness on complete bipartite extremes",
            Box::new(sharpness),
        ),
        (
            "strict inequality for a in {0.5, 2} on family members",
            Box::new(|| strictness(&members)),
        ),
        (
            "mu_f lower bounds hold, with equality on the extremes",
            Box::new(|| lower_bounds(&small)),
        ),
        (
            "fractional perfect matching conditions",
            Box::new(|| fpm_corollaries(&small)),
        ),
        (
            "spectral correctness: residuals, traces, interlacing, quotients",
            Box::new(|| spectral_correctness(&members)),
        ),
        (
            "determinism across --jobs 1 and --jobs 8",
            Box::new(|| determinism(&report, &dir)),
        ),
    ];

    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
