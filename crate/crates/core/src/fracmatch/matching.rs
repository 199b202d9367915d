use crate::graph::Graph;

use super::FracMatchError;

/// Bipartite double cover `G x K2`: vertex `v` lifts to `v` and `n + v`,
/// edge `uv` lifts to `u -- n+v` and `v -- n+u`.
pub fn double_cover(g: &Graph) -> Graph {
    let n = g.order();
    let edges = g.edges().flat_map(|(u, v)| [(u, n + v), (v, n + u)]);
    Graph::from_edges(2 * n, edges).expect("lifted edges are simple")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub size: usize,
    /// Matched pairs `(x, y)` with `x` in the first bipartition class.
    pub edges: Vec<(usize, usize)>,
}

/// Maximum matching of a bipartite graph by repeated augmenting-path search.
pub fn max_matching_bipartite(g: &Graph) -> Result<Matching, FracMatchError> {
    let (left, _) = g.bipartition().ok_or(FracMatchError::NotBipartite)?;
    let n = g.order();
    let mut mate: Vec<Option<usize>> = vec![None; n];

    // greedy start
    for &x in &left {
        if let Some(&y) = g.neighbors(x).iter().find(|&&y| mate[y].is_none()) {
            mate[x] = Some(y);
            mate[y] = Some(x);
        }
    }

    let mut visited = vec![usize::MAX; n];
    for (round, &x) in left.iter().enumerate() {
        if mate[x].is_none() {
            augment(g, x, round, &mut visited, &mut mate);
        }
    }

    let edges: Vec<(usize, usize)> = left
        .iter()
        .filter_map(|&x| mate[x].map(|y| (x, y)))
        .collect();
    Ok(Matching {
        size: edges.len(),
        edges,
    })
}

/// Depth-first search for an augmenting path from free left vertex `root`.
fn augment(
    g: &Graph,
    root: usize,
    round: usize,
    visited: &mut [usize],
    mate: &mut [Option<usize>],
) -> bool {
    // Explicit stack of (left vertex, next neighbour index) to avoid deep recursion.
    let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
    let mut via: Vec<usize> = Vec::new();
    while let Some(&mut (x, ref mut next)) = stack.last_mut() {
        let nbrs = g.neighbors(x);
        if *next == nbrs.len() {
            stack.pop();
            via.pop();
            continue;
        }
        let y = nbrs[*next];
        *next += 1;
        if visited[y] == round {
            continue;
        }
        visited[y] = round;
        match mate[y] {
            None => {
                via.push(y);
                // flip the path: stack[i].0 gets via[i]
                for (&(lx, _), &ry) in stack.iter().zip(&via) {
                    mate[lx] = Some(ry);
                    mate[ry] = Some(lx);
                }
                return true;
            }
            Some(x2) => {
                via.push(y);
                stack.push((x2, 0));
            }
        }
    }
    false
}
