//! Exact maximum-clique / maximum-independent-set search and exact counts
//! of independent sets of a given size.
//!
//! The clique search is a branch-and-bound in the Tomita style: candidates
//! are greedily coloured, the colour count bounds the best extension, and
//! branching follows decreasing colour. Independent sets are found as
//! cliques of the complement, so the colouring bound doubles as a greedy
//! clique-cover bound for the original graph.

use super::{Bits, Graph};

struct CliqueSearch<'a> {
    g: &'a Graph,
    best: usize,
    best_set: Vec<usize>,
    current: Vec<usize>,
}

impl<'a> CliqueSearch<'a> {
    /// Greedy colouring of the candidate set; returns vertices ordered by
    /// ascending colour together with their colour numbers.
    fn colour_sort(&self, cand: &Bits) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = cand.clone();
        let mut order = Vec::with_capacity(cand.count());
        let mut colours = Vec::with_capacity(order.capacity());
        let mut k = 0;
        while !uncoloured.is_empty() {
            k += 1;
            let mut avail = uncoloured.clone();
            while let Some(v) = avail.first_one() {
                order.push(v);
                colours.push(k);
                uncoloured.clear(v);
                avail.clear(v);
                avail.and_not_assign(self.g.neighbours(v));
            }
        }
        (order, colours)
    }

    fn expand(&mut self, cand: Bits) {
        if cand.is_empty() {
            if self.current.len() > self.best {
                self.best = self.current.len();
                self.best_set = self.current.clone();
            }
            return;
        }
        let (order, colours) = self.colour_sort(&cand);
        let mut cand = cand;
        for i in (0..order.len()).rev() {
            if self.current.len() + colours[i] <= self.best {
                return;
            }
            let v = order[i];
            self.current.push(v);
            let next = cand.and(self.g.neighbours(v));
            self.expand(next);
            self.current.pop();
            cand.clear(v);
        }
    }
}

/// Relabelling by descending degree (ties by index). Returns `perm` such
/// that new label i corresponds to old vertex `perm[i]`.
fn degree_order(g: &Graph) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.sort_by_key(|&v| (usize::MAX - g.degree(v), v));
    perm
}

fn permuted(g: &Graph, perm: &[usize]) -> Graph {
    let n = g.n();
    let mut inv = vec![0usize; n];
    for (new, &old) in perm.iter().enumerate() {
        inv[old] = new;
    }
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (inv[u], inv[v])).collect();
    Graph::from_edges(n, &edges).expect("relabelling preserves validity")
}

/// A maximum clique, as a vertex set. Deterministic: the first maximum
/// found under descending-degree root order with index tie-breaks.
pub fn max_clique(g: &Graph) -> Bits {
    let perm = degree_order(g);
    let gp = permuted(g, &perm);
    let mut search = CliqueSearch {
        g: &gp,
        best: 0,
        best_set: Vec::new(),
        current: Vec::new(),
    };
    search.expand(Bits::full(gp.n()));
    let mut out = Bits::new(g.n());
    for v in search.best_set {
        out.set(perm[v]);
    }
    out
}

/// A maximum independent set (maximum clique of the complement).
pub fn max_independent_set(g: &Graph) -> Bits {
    max_clique(&g.complement())
}

/// α(G): exact maximum independent-set size, branch-and-bound with a
/// greedy clique-cover pruning bound.
pub fn independence_number(g: &Graph) -> usize {
    max_independent_set(g).count()
}

struct CliqueCounter<'a> {
    g: &'a Graph,
    count: u64,
}

impl<'a> CliqueCounter<'a> {
    fn colour_bound(&self, cand: &Bits) -> usize {
        let mut uncoloured = cand.clone();
        let mut k = 0;
        while !uncoloured.is_empty() {
            k += 1;
            let mut avail = uncoloured.clone();
            while let Some(v) = avail.first_one() {
                uncoloured.clear(v);
                avail.clear(v);
                avail.and_not_assign(self.g.neighbours(v));
            }
        }
        k
    }

    fn enumerate(&mut self, cand: Bits, need: usize) {
        if need == 0 {
            self.count = self.count.checked_add(1).expect("clique count overflow");
            return;
        }
        if cand.count() < need {
            return;
        }
        if need >= 3 && self.colour_bound(&cand) < need {
            return;
        }
        let mut rest = cand;
        while let Some(v) = rest.first_one() {
            rest.clear(v);
            self.enumerate(rest.and(self.g.neighbours(v)), need - 1);
        }
    }
}

/// Exact number of cliques of size exactly `t`. Requires 1 ≤ t ≤ n.
pub fn count_cliques_of_size(g: &Graph, t: usize) -> u64 {
    assert!(t >= 1 && t <= g.n(), "size t must satisfy 1 ≤ t ≤ n");
    let mut counter = CliqueCounter { g, count: 0 };
    counter.enumerate(Bits::full(g.n()), t);
    counter.count
}

/// Exact number of independent vertex sets of size exactly `t`.
pub fn count_independent_sets(g: &Graph, t: usize) -> u64 {
    count_cliques_of_size(&g.complement(), t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::sample::sample_gnp_half;

    #[test]
    fn complete_graph_has_alpha_one() {
        let g = Graph::complete(5).unwrap();
        assert_eq!(independence_number(&g), 1);
        assert_eq!(max_clique(&g).count(), 5);
    }

    #[test]
    fn five_cycle_alpha_two() {
        let g = Graph::cycle(5).unwrap();
        assert_eq!(independence_number(&g), 2);
    }

    #[test]
    fn petersen_alpha_four_by_exhaustion() {
        let g = Graph::petersen();
        assert_eq!(independence_number(&g), 4);
        // Oracle: exhaust all C(10,5) five-subsets; none is independent.
        let mut any5 = false;
        for mask in 0u32..(1 << 10) {
            if mask.count_ones() == 5 {
                let verts: Vec<usize> = (0..10).filter(|&i| mask >> i & 1 == 1).collect();
                let b = Bits::from_indices(10, &verts);
                if g.is_independent_set(&b) {
                    any5 = true;
                }
            }
        }
        assert!(!any5);
        // And the returned witness really is independent of size 4.
        let w = max_independent_set(&g);
        assert_eq!(w.count(), 4);
        assert!(g.is_independent_set(&w));
    }

    #[test]
    fn counts_match_trivial_cases() {
        let empty = Graph::empty(4).unwrap();
        assert_eq!(count_independent_sets(&empty, 2), 6);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(count_independent_sets(&k4, 2), 0);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(count_independent_sets(&c5, 2), 5);
    }

    #[test]
    fn alpha_equals_largest_size_with_positive_count() {
        // Exhaustive for all graphs on up to 5 vertices, plus random ones.
        for n in 2..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                let alpha = independence_number(&g);
                assert!(count_independent_sets(&g, alpha) > 0);
                if alpha < n {
                    assert_eq!(count_independent_sets(&g, alpha + 1), 0);
                }
            }
        }
        for seed in 0..100 {
            let g = sample_gnp_half(20, seed).unwrap();
            let alpha = independence_number(&g);
            assert!(count_independent_sets(&g, alpha) > 0);
            assert_eq!(count_independent_sets(&g, alpha + 1), 0);
        }
    }

    #[test]
    fn clique_count_via_complement_matches() {
        // Exhaustive n ≤ 5: counting independent sets on the complement
        // equals counting cliques directly.
        for n in 2..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                for t in 1..=n {
                    assert_eq!(
                        count_cliques_of_size(&g, t),
                        count_independent_sets(&g.complement(), t)
                    );
                }
            }
        }
    }
}
