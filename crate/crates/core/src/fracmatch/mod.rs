//! Fractional matchings: exact numbers, witnesses and the Berge–Tutte deficiency.
//!
//! `mu_f(G)` is computed as half the maximum matching of the bipartite double
//! cover `G x K2`. The exponential deficiency search in [`deficiency_bruteforce`]
//! is the independent certificate for that shortcut on small graphs.

mod deficiency;
mod matching;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

pub use deficiency::{
    deficiency_bruteforce, deficiency_bruteforce_with_cap, DeficiencyWitness, DEFAULT_BRUTE_CAP,
};
pub use matching::{double_cover, max_matching_bipartite, Matching};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FracMatchError {
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("edge {0}-{1} is not in the graph")]
    UnknownEdge(usize, usize),
    #[error("sub-edge set has a vertex of degree {degree} at {vertex}; at most 2 allowed")]
    DegreeTooLarge { vertex: usize, degree: usize },
    #[error("brute force limited to {cap} vertices, graph has {n}")]
    TooLarge { n: usize, cap: usize },
}

/// A non-negative multiple of 1/2, stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(u64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    pub fn from_twice(twice: u64) -> Self {
        HalfInt(twice)
    }

    pub fn twice(self) -> u64 {
        self.0
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl std::iter::Sum for HalfInt {
    fn sum<I: Iterator<Item = HalfInt>>(iter: I) -> HalfInt {
        iter.fold(HalfInt::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Edge weights in `{0, 1/2, 1}`, keyed by `(u, v)` with `u < v`. Zero weights are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FractionalMatching {
    weights: BTreeMap<(usize, usize), HalfInt>,
}

impl FractionalMatching {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, u: usize, v: usize, w: HalfInt) {
        let key = (u.min(v), u.max(v));
        if w == HalfInt::ZERO {
            self.weights.remove(&key);
        } else {
            self.weights.insert(key, w);
        }
    }

    pub fn weight(&self, u: usize, v: usize) -> HalfInt {
        self.weights
            .get(&(u.min(v), u.max(v)))
            .copied()
            .unwrap_or(HalfInt::ZERO)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), HalfInt)> + '_ {
        self.weights.iter().map(|(&e, &w)| (e, w))
    }

    pub fn total(&self) -> HalfInt {
        self.weights.values().copied().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub valid: bool,
    pub total: HalfInt,
    pub diagnostic: Option<String>,
}

/// Exact `mu_f(g)`.
pub fn fractional_matching_number(g: &Graph) -> HalfInt {
    let cover = double_cover(g);
    let m = max_matching_bipartite(&cover).expect("double cover is bipartite");
    HalfInt::from_twice(m.size as u64)
}

/// An optimal fractional matching with weights in `{0, 1/2, 1}`.
///
/// Each edge `uv` gets half the number of its two lifts `(u0, v1)`, `(v0, u1)`
/// used by a maximum matching of the double cover.
pub fn fractional_matching_witness(g: &Graph) -> FractionalMatching {
    let n = g.order();
    let cover = double_cover(g);
    let m = max_matching_bipartite(&cover).expect("double cover is bipartite");
    let mut f = FractionalMatching::new();
    for &(x, y) in &m.edges {
        let (lo, hi) = (x.min(y), x.max(y));
        let (u, v) = (lo, hi - n);
        let w = f.weight(u, v);
        f.set(u, v, w + HalfInt::HALF);
    }
    f
}

pub fn verify_fractional_matching(g: &Graph, f: &FractionalMatching) -> Verification {
    let mut load = vec![0u64; g.order()];
    let total = f.total();
    let fail = |msg: String| Verification {
        valid: false,
        total,
        diagnostic: Some(msg),
    };
    for ((u, v), w) in f.iter() {
        if !g.has_edge(u, v) {
            return fail(format!("edge {u}-{v} is not in the graph"));
        }
        if w > HalfInt::ONE {
            return fail(format!("weight {w} on {u}-{v} exceeds 1"));
        }
        load[u] += w.twice();
        load[v] += w.twice();
    }
    if let Some(v) = load.iter().position(|&l| l > 2) {
        return fail(format!(
            "vertex {v} has load {}",
            HalfInt::from_twice(load[v])
        ));
    }
    Verification {
        valid: true,
        total,
        diagnostic: None,
    }
}

/// The all-1/2 assignment on a subgraph of maximum degree at most 2.
pub fn half_characteristic_witness(
    g: &Graph,
    sub_edges: &[(usize, usize)],
) -> Result<FractionalMatching, FracMatchError> {
    let mut degree = vec![0usize; g.order()];
    let mut f = FractionalMatching::new();
    for &(u, v) in sub_edges {
        if !g.has_edge(u, v) {
            return Err(FracMatchError::UnknownEdge(u, v));
        }
        if f.weight(u, v) != HalfInt::ZERO {
            continue;
        }
        f.set(u, v, HalfInt::HALF);
        for w in [u, v] {
            degree[w] += 1;
            if degree[w] > 2 {
                return Err(FracMatchError::DegreeTooLarge {
                    vertex: w,
                    degree: degree[w],
                });
            }
        }
    }
    Ok(f)
}

pub fn has_fractional_perfect_matching(g: &Graph) -> bool {
    fractional_matching_number(g).twice() == g.order() as u64
}
