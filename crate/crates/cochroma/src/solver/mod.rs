//! Exact chromatic, size-bounded chromatic and cochromatic numbers on small
//! graphs, plus a greedy cocolouring upper bound.
//!
//! All solvers are deterministic pure functions: fixed branching orders,
//! fixed tie-breaks, no shared caches.

mod brute;
mod counting;

use std::fmt;

pub use brute::{
    cochromatic_by_partitions, count_colourings_by_partitions, count_tbounded_colourings,
};
pub use counting::{count_cocolourings_with_profile, count_colourings_with_profile, ColouringCounts};

use crate::graph::{max_clique, max_independent_set, Bits, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveError {
    /// t outside [1, n].
    BadSizeBound { t: usize, n: usize },
    /// Profile does not cover exactly n vertices.
    IncompleteProfile { mass: u64, n: u64 },
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::BadSizeBound { t, n } => {
                write!(f, "size bound t = {t} violates 1 ≤ t ≤ n = {n}")
            }
            SolveError::IncompleteProfile { mass, n } => {
                write!(f, "profile covers {mass} vertices, needs exactly {n}")
            }
        }
    }
}

impl std::error::Error for SolveError {}

/// Greedy DSATUR colouring with a class-size cap; returns the number of
/// colours used. Always succeeds (a fresh colour is always available).
fn dsatur_upper_bound(g: &Graph, cap: usize) -> usize {
    let n = g.n();
    let mut colour = vec![usize::MAX; n];
    let mut class_size: Vec<usize> = Vec::new();
    for _ in 0..n {
        // Most saturated uncoloured vertex; ties by degree, then index.
        let mut pick = usize::MAX;
        let mut pick_key = (0usize, 0usize);
        for v in 0..n {
            if colour[v] != usize::MAX {
                continue;
            }
            let mut seen = vec![false; class_size.len()];
            let mut sat = 0;
            for u in g.neighbours(v).iter_ones() {
                let c = colour[u];
                if c != usize::MAX && !seen[c] {
                    seen[c] = true;
                    sat += 1;
                }
            }
            let key = (sat, g.degree(v));
            if pick == usize::MAX || key > pick_key {
                pick = v;
                pick_key = key;
            }
        }
        let v = pick;
        let mut forbidden = vec![false; class_size.len()];
        for u in g.neighbours(v).iter_ones() {
            if colour[u] != usize::MAX {
                forbidden[colour[u]] = true;
            }
        }
        let slot = (0..class_size.len())
            .find(|&c| !forbidden[c] && class_size[c] < cap);
        match slot {
            Some(c) => {
                colour[v] = c;
                class_size[c] += 1;
            }
            None => {
                colour[v] = class_size.len();
                class_size.push(1);
            }
        }
    }
    class_size.len()
}

struct ColourSearch<'a> {
    g: &'a Graph,
    k: usize,
    cap: usize,
    colour: Vec<usize>,
    class_size: Vec<usize>,
}

impl<'a> ColourSearch<'a> {
    /// Most-saturated-first backtracking; new colours are opened in order,
    /// so colour classes carry no permutation symmetry.
    fn dfs(&mut self, assigned: usize, used: usize) -> bool {
        let n = self.g.n();
        if assigned == n {
            return true;
        }
        let mut pick = usize::MAX;
        let mut pick_key = (0usize, 0usize);
        for v in 0..n {
            if self.colour[v] != usize::MAX {
                continue;
            }
            let mut seen = 0u128;
            let mut sat = 0usize;
            for u in self.g.neighbours(v).iter_ones() {
                let c = self.colour[u];
                if c != usize::MAX && seen >> c & 1 == 0 {
                    seen |= 1 << c;
                    sat += 1;
                }
            }
            let key = (sat, self.g.degree(v));
            if pick == usize::MAX || key > pick_key {
                pick = v;
                pick_key = key;
            }
        }
        let v = pick;
        let limit = self.k.min(used + 1);
        for c in 0..limit {
            if self.class_size[c] >= self.cap {
                continue;
            }
            let clash = self
                .g
                .neighbours(v)
                .iter_ones()
                .any(|u| self.colour[u] == c);
            if clash {
                continue;
            }
            self.colour[v] = c;
            self.class_size[c] += 1;
            if self.dfs(assigned + 1, used.max(c + 1)) {
                return true;
            }
            self.class_size[c] -= 1;
            self.colour[v] = usize::MAX;
        }
        false
    }
}

/// Is there a proper colouring with at most k colours, every class of size
/// at most `cap`?
fn colourable(g: &Graph, k: usize, cap: usize) -> bool {
    if g.n() > k * cap {
        return false;
    }
    if k > 128 {
        // Saturation masks use u128; k never needs to exceed n ≤ 128 here
        // because χ ≤ n. Fall back to n colours capped at 128.
        return colourable(g, 128, cap);
    }
    let mut search = ColourSearch {
        g,
        k,
        cap,
        colour: vec![usize::MAX; g.n()],
        class_size: vec![0; k],
    };
    search.dfs(0, 0)
}

fn chromatic_with_cap(g: &Graph, cap: usize) -> usize {
    let n = g.n();
    let clique_lb = max_clique(g).count();
    let mass_lb = n.div_ceil(cap);
    let lb = clique_lb.max(mass_lb).max(1);
    let ub = dsatur_upper_bound(g, cap);
    for k in lb..ub {
        if colourable(g, k, cap) {
            return k;
        }
    }
    ub
}

/// χ(G): exact chromatic number. Branch and bound between a max-clique
/// lower bound and a DSATUR upper bound.
pub fn chromatic_number(g: &Graph) -> usize {
    chromatic_with_cap(g, g.n())
}

/// χ_t(G): least k admitting a proper colouring with every class of size
/// at most t. Requires 1 ≤ t ≤ n.
pub fn t_bounded_chromatic(g: &Graph, t: usize) -> Result<usize, SolveError> {
    let n = g.n();
    if t < 1 || t > n {
        return Err(SolveError::BadSizeBound { t, n });
    }
    Ok(chromatic_with_cap(g, t))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum ClassKind {
    /// Fewer than two members; accepts anything.
    Open,
    Independent,
    Clique,
}

struct CocoSearch<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    members: Vec<Vec<usize>>,
    kinds: Vec<ClassKind>,
    best: usize,
}

impl<'a> CocoSearch<'a> {
    fn compatible(&self, ci: usize, v: usize) -> Option<ClassKind> {
        let members = &self.members[ci];
        match self.kinds[ci] {
            ClassKind::Open => {
                // Type gets decided by the second vertex.
                debug_assert_eq!(members.len(), 1);
                if self.g.has_edge(members[0], v) {
                    Some(ClassKind::Clique)
                } else {
                    Some(ClassKind::Independent)
                }
            }
            ClassKind::Independent => members
                .iter()
                .all(|&u| !self.g.has_edge(u, v))
                .then_some(ClassKind::Independent),
            ClassKind::Clique => members
                .iter()
                .all(|&u| self.g.has_edge(u, v))
                .then_some(ClassKind::Clique),
        }
    }

    fn dfs(&mut self, idx: usize) {
        if self.members.len() >= self.best {
            return;
        }
        if idx == self.order.len() {
            self.best = self.members.len();
            return;
        }
        let v = self.order[idx];
        for ci in 0..self.members.len() {
            if let Some(kind) = self.compatible(ci, v) {
                let old = self.kinds[ci];
                self.members[ci].push(v);
                self.kinds[ci] = kind;
                self.dfs(idx + 1);
                self.kinds[ci] = old;
                self.members[ci].pop();
            }
        }
        if self.members.len() + 1 < self.best {
            self.members.push(vec![v]);
            self.kinds.push(ClassKind::Open);
            self.dfs(idx + 1);
            self.kinds.pop();
            self.members.pop();
        }
    }
}

/// ζ(G): exact cochromatic number. Branch and bound over vertex-to-class
/// assignments; a class's independent/clique type is left undecided until
/// it holds two vertices.
pub fn cochromatic_number(g: &Graph) -> usize {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (usize::MAX - g.degree(v), v));
    let ub = greedy_cocolouring(g);
    let mut search = CocoSearch {
        g,
        order,
        members: Vec::new(),
        kinds: Vec::new(),
        best: ub,
    };
    search.dfs(0);
    search.best
}

/// Greedy cocolouring: repeatedly remove a maximum independent set or a
/// maximum clique, whichever is larger (ties prefer the independent set).
/// Returns the number of classes used — an upper bound on ζ(G).
pub fn greedy_cocolouring(g: &Graph) -> usize {
    let n = g.n();
    let mut alive = Bits::full(n);
    let mut classes = 0usize;
    while !alive.is_empty() {
        let (sub, labels) = g.induced(&alive);
        let ind = max_independent_set(&sub);
        let cli = max_clique(&sub);
        let chosen = if cli.count() > ind.count() { cli } else { ind };
        for local in chosen.iter_ones() {
            alive.clear(labels[local]);
        }
        classes += 1;
    }
    classes
}
