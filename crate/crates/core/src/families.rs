//! Extremal and exceptional graph families, and a seeded random-graph generator.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    #[error("{condition} violated: {detail}")]
    Condition {
        condition: &'static str,
        detail: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("edge probability {0} outside [0, 1]")]
    Probability(f64),
    #[error("join exception produced a graph that passes the 1-factor condition")]
    ExceptionCheck,
}

fn violated(condition: &'static str, detail: String) -> FamilyError {
    FamilyError::Condition { condition, detail }
}

/// `K_{p,q}` with the `p`-side on indices `0..p`.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let edges = (0..p).flat_map(|x| (p..p + q).map(move |y| (x, y)));
    Graph::from_edges(p + q, edges).expect("valid bipartite edges")
}

/// Parameters of a member of the biregular family: `|X| = x_size`,
/// `|Y| = x_size + k`, `Y`-degree `delta`, `X`-degree `d = delta (x_size + k) / x_size`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyBSpec {
    delta: usize,
    k: usize,
    x_size: usize,
}

impl FamilyBSpec {
    pub fn new(delta: usize, k: usize, x_size: usize) -> Result<Self, FamilyError> {
        if delta == 0 {
            return Err(violated(
                "(H2)",
                "Y-side degree delta must be at least 1".into(),
            ));
        }
        if k == 0 {
            return Err(violated("(H3)", "|Y| = |X| + k needs k >= 1".into()));
        }
        if delta > x_size {
            return Err(violated(
                "(H2)",
                format!("delta = {delta} exceeds |X| = {x_size}; Y vertices cannot reach delta distinct neighbours"),
            ));
        }
        if !(delta * (x_size + k)).is_multiple_of(x_size) {
            return Err(violated(
                "(H1)",
                format!(
                    "|X| = {x_size} does not divide delta * |Y| = {}; X-side degree is not constant",
                    delta * (x_size + k)
                ),
            ));
        }
        Ok(FamilyBSpec { delta, k, x_size })
    }

    /// Smallest admissible `|X|`: `|X| = delta` always divides `delta * k`,
    /// giving `d = delta + k`.
    pub fn minimal(delta: usize, k: usize) -> Result<Self, FamilyError> {
        Self::new(delta, k, delta)
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn x_size(&self) -> usize {
        self.x_size
    }

    pub fn y_size(&self) -> usize {
        self.x_size + self.k
    }

    /// Common degree of the `X` vertices.
    pub fn d(&self) -> usize {
        self.delta * self.y_size() / self.x_size
    }

    pub fn order(&self) -> usize {
        self.x_size + self.y_size()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyB {
    pub graph: Graph,
    pub spec: FamilyBSpec,
    /// Vertices `0..|X|`.
    pub x: Vec<usize>,
    /// Vertices `|X|..n`.
    pub y: Vec<usize>,
    pub connected: bool,
}

/// Round-robin member: edge `l` in `0..delta*|Y|` joins `y_{l / delta}` to `x_{l mod |X|}`.
pub fn family_b(spec: &FamilyBSpec) -> Result<FamilyB, FamilyError> {
    let m = spec.x_size;
    let edges = (0..spec.delta * spec.y_size()).map(|l| (l % m, m + l / spec.delta));
    let graph = Graph::from_edges(spec.order(), edges)?;
    let x: Vec<usize> = (0..m).collect();
    let y: Vec<usize> = (m..spec.order()).collect();

    if let Some(&v) = x.iter().find(|&&v| graph.degree(v) != spec.d()) {
        return Err(violated(
            "(H1)",
            format!("X vertex {v} has degree {}", graph.degree(v)),
        ));
    }
    if let Some(&v) = y.iter().find(|&&v| graph.degree(v) != spec.delta) {
        return Err(violated(
            "(H2)",
            format!("Y vertex {v} has degree {}", graph.degree(v)),
        ));
    }
    if y.len() != x.len() + spec.k {
        return Err(violated(
            "(H3)",
            format!("|Y| = {}, |X| = {}", y.len(), x.len()),
        ));
    }
    if x.iter().any(|&u| graph.neighbors(u).iter().any(|&w| w < m)) {
        return Err(violated("(H1)", "edge inside X".into()));
    }
    let connected = graph.is_connected();
    Ok(FamilyB {
        graph,
        spec: *spec,
        x,
        y,
        connected,
    })
}

/// Parameters under which `g` satisfies (H1)–(H3) for its bipartition.
///
/// Only meaningful for connected graphs, whose bipartition is unique.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyBMembership {
    pub delta: usize,
    pub k: usize,
    pub x_size: usize,
}

pub fn family_b_membership(g: &Graph) -> Option<FamilyBMembership> {
    let (first, second) = g.bipartition()?;
    let (x, y) = if first.len() < second.len() {
        (first, second)
    } else {
        (second, first)
    };
    if x.is_empty() || y.len() == x.len() {
        return None;
    }
    let delta = g.degree(y[0]);
    let d = g.degree(x[0]);
    let regular = y.iter().all(|&v| g.degree(v) == delta) && x.iter().all(|&v| g.degree(v) == d);
    (regular && delta >= 1 && delta <= x.len()).then(|| FamilyBMembership {
        delta,
        k: y.len() - x.len(),
        x_size: x.len(),
    })
}

/// `(delta + 1) K1 v H`, with the `delta + 1` independent vertices first.
pub fn join_exception(delta: usize, h_edges: &[(usize, usize)]) -> Result<Graph, FamilyError> {
    let h = Graph::from_edges(delta, h_edges.iter().copied())?;
    let g = Graph::empty(delta + 1).join(&h);
    let s: Vec<usize> = (delta + 1..2 * delta + 1).collect();
    let (rest, _) = g.delete_vertices(&s)?;
    if rest.isolated_count() <= s.len() {
        return Err(FamilyError::ExceptionCheck);
    }
    Ok(g)
}

/// Finds `S` with `|S| = delta`, `G - S` edgeless on the other `delta + 1`
/// vertices, and every one of those adjacent to all of `S`.
pub fn exception_witness(g: &Graph, delta: usize) -> Option<Vec<usize>> {
    let n = g.order();
    if delta == 0 || n != 2 * delta + 1 {
        return None;
    }
    (0..n)
        .filter(|&t| g.degree(t) == delta)
        .map(|t| g.neighbors(t).to_vec())
        .find(|s| {
            (0..n)
                .filter(|v| s.binary_search(v).is_err())
                .all(|v| g.neighbors(v) == s.as_slice())
        })
}

/// Erdős–Rényi `G(n, p)` driven by SplitMix64 seeded with `seed`.
///
/// Pairs are visited as `(i, j)`, `i < j`, `i` outer; the pair is an edge when
/// the top 53 bits of the next output, scaled to `[0, 1)`, fall below `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, FamilyError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(FamilyError::Probability(p));
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let u = (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
            if u < p {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}
