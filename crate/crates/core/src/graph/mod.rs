//! Simple undirected graphs on dense vertex indices `0..n`.

mod graph6;

use std::collections::VecDeque;

use thiserror::Error;

pub use graph6::{parse_graph6, write_graph6};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
}

/// A simple undirected graph stored as sorted adjacency lists.
///
/// Immutable once built; every operation returns a fresh graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph { adj }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Returns a copy with the edge `uv` added (no-op if already present).
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        Self::from_edges(self.order(), self.edges().chain([(u, v)]))
    }

    /// Checks the representation invariants: no loops, symmetric, indices in range, sorted.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.order();
        for (v, list) in self.adj.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("adjacency of {v} not strictly sorted"));
            }
            for &u in list {
                if u >= n {
                    return Err(format!("neighbour {u} of {v} out of range"));
                }
                if u == v {
                    return Err(format!("loop at {v}"));
                }
                if self.adj[u].binary_search(&v).is_err() {
                    return Err(format!("edge {v}-{u} not symmetric"));
                }
            }
        }
        Ok(())
    }

    pub fn complement(&self) -> Self {
        let n = self.order();
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v && !self.has_edge(v, u)).collect())
            .collect();
        Graph { adj }
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&u| u + shift).collect()),
        );
        Graph { adj }
    }

    /// Disjoint union plus every edge between the two vertex classes.
    pub fn join(&self, other: &Graph) -> Self {
        let (n1, n2) = (self.order(), other.order());
        let mut adj = Vec::with_capacity(n1 + n2);
        for list in &self.adj {
            let mut l = list.clone();
            l.extend(n1..n1 + n2);
            adj.push(l);
        }
        for list in &other.adj {
            let mut l: Vec<usize> = (0..n1).collect();
            l.extend(list.iter().map(|&u| u + n1));
            adj.push(l);
        }
        Graph { adj }
    }

    /// Induced subgraph on `V \ removed`, reindexed in increasing order.
    ///
    /// The second component maps each new index to its original vertex.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let n = self.order();
        let mut gone = vec![false; n];
        for &v in removed {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            gone[v] = true;
        }
        let kept: Vec<usize> = (0..n).filter(|&v| !gone[v]).collect();
        let mut new_index = vec![usize::MAX; n];
        for (i, &v) in kept.iter().enumerate() {
            new_index[v] = i;
        }
        let adj = kept
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&u| !gone[u])
                    .map(|&u| new_index[u])
                    .collect()
            })
            .collect();
        Ok((Graph { adj }, kept))
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&v| self.adj[v].is_empty())
            .collect()
    }

    pub fn isolated_count(&self) -> usize {
        self.adj.iter().filter(|l| l.is_empty()).count()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    stack.push(u);
                }
            }
        }
        reached == n
    }

    /// Two-colouring by breadth-first search, or `None` if an odd cycle exists.
    ///
    /// Each component's lowest vertex (so every isolated vertex) goes to the first class.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.order();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for &u in &self.adj[v] {
                    match color[u] {
                        None => {
                            color[u] = Some(!c);
                            queue.push_back(u);
                        }
                        Some(cu) if cu == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (first, second): (Vec<usize>, Vec<usize>) =
            (0..n).partition(|&v| color[v] == Some(false));
        Some((first, second))
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        DegreeProfile {
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            degrees,
        }
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }
}
