#![allow(dead_code)]

use proptest::prelude::*;
use specmatch::Graph;

/// Uniformly random labelled graph with `lo..=hi` vertices and edge density `p`.
pub fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi, 0.05f64..0.95).prop_flat_map(|(n, p)| {
        proptest::collection::vec(proptest::bool::weighted(p), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut it = bits.into_iter();
                for v in 1..n {
                    for u in 0..v {
                        if it.next().unwrap() {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
    })
}

pub fn connected_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    graph(lo, hi).prop_filter("connected", |g| g.order() >= 1 && g.is_connected())
}

/// Maximum matching size by exhaustive edge branching.
pub fn matching_number_bruteforce(g: &Graph) -> usize {
    fn go(edges: &[(usize, usize)], used: u64) -> usize {
        match edges.split_first() {
            None => 0,
            Some((&(u, v), rest)) => {
                let skip = go(rest, used);
                if used >> u & 1 == 0 && used >> v & 1 == 0 {
                    skip.max(1 + go(rest, used | 1 << u | 1 << v))
                } else {
                    skip
                }
            }
        }
    }
    let edges: Vec<_> = g.edges().collect();
    go(&edges, 0)
}

/// `max_S i(G - S) - |S|`, recomputed from scratch with plain sets.
pub fn deficiency_oracle(g: &Graph) -> i64 {
    let n = g.order();
    let mut best = i64::MIN;
    for mask in 0u32..(1 << n) {
        let in_s = |v: usize| mask >> v & 1 == 1;
        let isolated = (0..n)
            .filter(|&v| !in_s(v) && g.neighbors(v).iter().all(|&u| in_s(u)))
            .count() as i64;
        best = best.max(isolated - mask.count_ones() as i64);
    }
    best
}

/// Largest total of a `{0, 1/2, 1}` edge weighting with vertex sums at most 1,
/// returned doubled. Exhaustive over `3^m` weightings.
pub fn half_integral_lp_bruteforce(g: &Graph) -> u64 {
    let edges: Vec<_> = g.edges().collect();
    fn go(edges: &[(usize, usize)], load: &mut Vec<u8>) -> u64 {
        let Some((&(u, v), rest)) = edges.split_first() else {
            return 0;
        };
        let mut best = 0;
        for w in 0..=2u8 {
            if load[u] + w <= 2 && load[v] + w <= 2 {
                load[u] += w;
                load[v] += w;
                best = best.max(u64::from(w) + go(rest, load));
                load[u] -= w;
                load[v] -= w;
            }
        }
        best
    }
    go(&edges, &mut vec![0; g.order()])
}
