//! Graph ingestion and emission.
//!
//! Two formats, both exact round-trips:
//! * DIMACS-like edge list: `p edge <n> <m>` then `e <u> <v>` lines, 1-based;
//! * JSON: `{"n": <int>, "edges": [[u, v], ...]}`, 0-based.

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Parses the DIMACS-like edge-list format (1-based vertex labels).
pub fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                let kind = parts.next().unwrap_or("");
                if kind != "edge" && kind != "col" {
                    return Err(GraphError::Parse(format!(
                        "line {}: expected 'p edge', got '{line}'",
                        lineno + 1
                    )));
                }
                let nv = parts
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| {
                        GraphError::Parse(format!("line {}: bad vertex count", lineno + 1))
                    })?;
                n = Some(nv);
            }
            Some("e") => {
                let u = parts
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| {
                        GraphError::Parse(format!("line {}: bad edge endpoint", lineno + 1))
                    })?;
                let v = parts
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| {
                        GraphError::Parse(format!("line {}: bad edge endpoint", lineno + 1))
                    })?;
                if u == 0 || v == 0 {
                    return Err(GraphError::Parse(format!(
                        "line {}: DIMACS vertices are 1-based",
                        lineno + 1
                    )));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(GraphError::Parse(format!(
                    "line {}: unknown record '{other}'",
                    lineno + 1
                )));
            }
            None => {}
        }
    }
    let n = n.ok_or_else(|| GraphError::Parse("missing 'p edge n m' header".into()))?;
    Graph::from_edges(n, &edges)
}

/// Emits the DIMACS-like edge-list format (1-based vertex labels).
pub fn to_dimacs(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::new();
    out.push_str(&format!("p edge {} {}\n", g.n(), edges.len()));
    for (u, v) in edges {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// Parses the JSON graph format (0-based vertex labels).
pub fn parse_json(text: &str) -> Result<Graph, GraphError> {
    let parsed: GraphJson =
        serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
    Graph::from_edges(parsed.n, &parsed.edges)
}

/// Emits the JSON graph format (0-based vertex labels).
pub fn to_json(g: &Graph) -> String {
    let doc = GraphJson {
        n: g.n(),
        edges: g.edges(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::sample::sample_gnp_half;

    #[test]
    fn dimacs_round_trip_is_exact() {
        for seed in 0..10 {
            let g = sample_gnp_half(17, seed).unwrap();
            let back = parse_dimacs(&to_dimacs(&g)).unwrap();
            assert_eq!(g, back);
        }
    }

    #[test]
    fn json_round_trip_is_exact() {
        for seed in 0..10 {
            let g = sample_gnp_half(13, 100 + seed).unwrap();
            let back = parse_json(&to_json(&g)).unwrap();
            assert_eq!(g, back);
        }
    }

    #[test]
    fn dimacs_accepts_comments_and_rejects_garbage() {
        let ok = "c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";
        let g = parse_dimacs(ok).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(parse_dimacs("e 1 2\n").is_err());
        assert!(parse_dimacs("p edge 3 1\ne 0 1\n").is_err());
        assert!(parse_dimacs("p edge 3 1\nq 1 2\n").is_err());
    }

    #[test]
    fn json_rejects_out_of_range() {
        assert!(parse_json("{\"n\": 3, \"edges\": [[0, 3]]}").is_err());
        assert!(parse_json("{\"n\": 3, \"edges\": [[1, 1]]}").is_err());
    }
}
