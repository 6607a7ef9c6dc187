//! Simple undirected graphs on `0..n` with bitset adjacency, random models
//! `G(n, 1/2)` and `G(n, m)`, and exact independent-set/clique search.

pub mod bitset;
mod io;
mod sample;
mod search;

use std::fmt;

pub use bitset::Bits;
pub use io::{parse_dimacs, parse_json, to_dimacs, to_json};
pub use sample::{sample_gnm, sample_gnp_half, GnmParams};
pub use search::{
    count_cliques_of_size, count_independent_sets, independence_number, max_clique,
    max_independent_set,
};

/// Errors from graph construction, sampling and parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// n = 0 or otherwise unusable size.
    InvalidSize(String),
    /// Edge endpoint outside `0..n`.
    VertexOutOfRange { v: usize, n: usize },
    /// Self-loop requested.
    SelfLoop { v: usize },
    /// m exceeds the number of vertex pairs.
    TooManyEdges { m: u64, max: u64 },
    /// Malformed input text.
    Parse(String),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::InvalidSize(msg) => write!(f, "invalid graph size: {msg}"),
            GraphError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for n = {n}")
            }
            GraphError::SelfLoop { v } => write!(f, "self-loop at vertex {v}"),
            GraphError::TooManyEdges { m, max } => {
                write!(f, "edge count {m} exceeds pair count {max}")
            }
            GraphError::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for GraphError {}

/// An immutable simple undirected graph with per-vertex neighbour bitsets.
///
/// Invariants (enforced by every constructor): adjacency is symmetric,
/// the diagonal is empty, and the edge count equals half the degree sum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Bits>,
}

impl Graph {
    /// Edgeless graph on n vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidSize("n must be at least 1".into()));
        }
        Ok(Graph {
            n,
            adj: vec![Bits::new(n); n],
        })
    }

    /// Complete graph on n vertices.
    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.adj[v] = Bits::full(n);
            g.adj[v].clear(v);
        }
        Ok(g)
    }

    /// Cycle 0-1-...-(n-1)-0.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        if n >= 2 {
            for v in 0..n {
                g.add_edge_unchecked(v, (v + 1) % n);
            }
        }
        Ok(g)
    }

    /// Builds from an explicit edge list; rejects loops and bad endpoints.
    /// Duplicate edges are collapsed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    /// The Petersen graph.
    pub fn petersen() -> Graph {
        let outer: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let spokes: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 5)).collect();
        let inner: Vec<(usize, usize)> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let mut edges = outer;
        edges.extend(spokes);
        edges.extend(inner);
        Graph::from_edges(10, &edges).expect("static edge list")
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].set(v);
        self.adj[v].set(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].test(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn neighbours(&self, v: usize) -> &Bits {
        &self.adj[v]
    }

    pub fn edge_count(&self) -> u64 {
        let deg_sum: u64 = (0..self.n).map(|v| self.degree(v) as u64).sum();
        deg_sum / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter_ones() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Edge-set complement (no self-loops introduced).
    pub fn complement(&self) -> Graph {
        let mut g = Graph {
            n: self.n,
            adj: vec![Bits::new(self.n); self.n],
        };
        for v in 0..self.n {
            let mut row = Bits::full(self.n);
            row.and_not_assign(&self.adj[v]);
            row.clear(v);
            g.adj[v] = row;
        }
        g
    }

    /// Induced subgraph on the given vertex set, with vertices relabelled to
    /// `0..k` in increasing original order. Returns the label map as well.
    pub fn induced(&self, verts: &Bits) -> (Graph, Vec<usize>) {
        let labels = verts.to_vec();
        let k = labels.len();
        let mut g = Graph {
            n: k.max(1),
            adj: vec![Bits::new(k.max(1)); k.max(1)],
        };
        g.n = k.max(1);
        for (i, &u) in labels.iter().enumerate() {
            for (j, &v) in labels.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i].set(j);
                    g.adj[j].set(i);
                }
            }
        }
        (g, labels)
    }

    pub fn is_independent_set(&self, verts: &Bits) -> bool {
        verts
            .iter_ones()
            .all(|v| !self.adj[v].intersects(verts))
    }

    pub fn is_clique(&self, verts: &Bits) -> bool {
        let size = verts.count();
        if size <= 1 {
            return true;
        }
        verts
            .iter_ones()
            .all(|v| self.adj[v].intersection_count(verts) == size - 1)
    }

    /// Hex SHA-256 of (n, upper-triangle adjacency bits); label-sensitive.
    pub fn hash_hex(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut hasher = Sha256::new();
        hasher.update((self.n as u64).to_le_bytes());
        let mut buf: u8 = 0;
        let mut fill = 0;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                buf = (buf << 1) | self.has_edge(u, v) as u8;
                fill += 1;
                if fill == 8 {
                    hasher.update([buf]);
                    buf = 0;
                    fill = 0;
                }
            }
        }
        if fill > 0 {
            hasher.update([buf << (8 - fill)]);
        }
        let out = hasher.finalize();
        out.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Checks the structural invariants; used in tests and after ingestion.
    pub fn check_invariants(&self) -> Result<(), GraphError> {
        for v in 0..self.n {
            if self.adj[v].test(v) {
                return Err(GraphError::SelfLoop { v });
            }
            for u in self.adj[v].iter_ones() {
                if !self.adj[u].test(v) {
                    return Err(GraphError::Parse(format!(
                        "asymmetric adjacency at ({u}, {v})"
                    )));
                }
            }
        }
        Ok(())
    }
}
