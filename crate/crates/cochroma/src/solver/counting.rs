//! Exact counts of proper colourings and cocolourings realizing a given
//! class-size profile.
//!
//! Counting walks vertices in ascending label order and opens classes only
//! at their minimal vertex, so each unordered partition is generated exactly
//! once; ordered counts follow by multiplying with Π k_u!.

use dashu_int::UBig;

use super::SolveError;
use crate::graph::Graph;
use crate::num::gamma::factorial_exact;
use crate::profile::Profile;

/// Ordered and unordered counts of partitions realizing one profile.
///
/// `ordered = unordered · Π k_u!` exactly: permuting equal-size classes
/// keeps the size sequence non-increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouringCounts {
    pub ordered: UBig,
    pub unordered: UBig,
}

impl ColouringCounts {
    fn from_unordered(unordered: Counter, profile: &Profile) -> ColouringCounts {
        let unordered = unordered.into_ubig();
        let mut factor = UBig::from(1u8);
        for u in profile.support() {
            factor *= factorial_exact(profile.get(u));
        }
        ColouringCounts {
            ordered: &unordered * factor,
            unordered,
        }
    }
}

/// 128-bit counter that escalates to a big integer on overflow.
enum Counter {
    Small(u128),
    Big(UBig),
}

impl Counter {
    fn new() -> Counter {
        Counter::Small(0)
    }

    fn increment(&mut self) {
        match self {
            Counter::Small(v) => match v.checked_add(1) {
                Some(next) => *v = next,
                None => *self = Counter::Big(UBig::from(*v) + UBig::from(1u8)),
            },
            Counter::Big(v) => *v += UBig::from(1u8),
        }
    }

    fn into_ubig(self) -> UBig {
        match self {
            Counter::Small(v) => UBig::from(v),
            Counter::Big(v) => v,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ClassRule {
    IndependentOnly,
    IndependentOrClique,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum State {
    Fresh,
    Ind,
    Cli,
}

struct CountSearch<'a> {
    g: &'a Graph,
    rule: ClassRule,
    // Remaining classes to open, per target size.
    remaining: Vec<u64>,
    // Open classes: (target size, members, state).
    open: Vec<(usize, Vec<usize>, State)>,
    count: Counter,
}

impl<'a> CountSearch<'a> {
    fn insert_ok(&self, ci: usize, v: usize) -> Option<State> {
        let (_, members, state) = &self.open[ci];
        let adj_all = members.iter().all(|&u| self.g.has_edge(u, v));
        let nonadj_all = members.iter().all(|&u| !self.g.has_edge(u, v));
        match self.rule {
            ClassRule::IndependentOnly => nonadj_all.then_some(State::Ind),
            ClassRule::IndependentOrClique => match state {
                State::Fresh => {
                    if members.len() <= 1 {
                        if members.is_empty() || nonadj_all {
                            Some(State::Ind)
                        } else {
                            Some(State::Cli)
                        }
                    } else {
                        unreachable!("fresh class with two members")
                    }
                }
                State::Ind => nonadj_all.then_some(State::Ind),
                State::Cli => adj_all.then_some(State::Cli),
            },
        }
    }

    fn dfs(&mut self, v: usize, n: usize) {
        if v == n {
            if self.open.iter().all(|(target, members, _)| members.len() == *target) {
                self.count.increment();
            }
            return;
        }
        // Feasibility: open classes still need fill, remaining classes need
        // at least their sizes; total slots must exactly absorb n - v.
        let open_need: usize = self
            .open
            .iter()
            .map(|(t, m, _)| t - m.len())
            .sum();
        let fresh_need: usize = self
            .remaining
            .iter()
            .enumerate()
            .map(|(i, &k)| (i + 1) * k as usize)
            .sum();
        if open_need + fresh_need != n - v {
            return;
        }
        // Place v in an open class with spare capacity.
        for ci in 0..self.open.len() {
            if self.open[ci].1.len() == self.open[ci].0 {
                continue;
            }
            if let Some(state) = self.insert_ok(ci, v) {
                let old = self.open[ci].2;
                self.open[ci].1.push(v);
                self.open[ci].2 = state;
                self.dfs(v + 1, n);
                self.open[ci].2 = old;
                self.open[ci].1.pop();
            }
        }
        // Or open a fresh class of any still-needed size; v is its minimal
        // vertex, which makes the generation canonical.
        for u in 1..=self.remaining.len() {
            if self.remaining[u - 1] == 0 {
                continue;
            }
            self.remaining[u - 1] -= 1;
            self.open.push((u, vec![v], State::Fresh));
            self.dfs(v + 1, n);
            self.open.pop();
            self.remaining[u - 1] += 1;
        }
    }
}

fn count_with_rule(
    g: &Graph,
    profile: &Profile,
    rule: ClassRule,
) -> Result<ColouringCounts, SolveError> {
    let n = g.n() as u64;
    if !profile.is_complete(n) {
        return Err(SolveError::IncompleteProfile {
            mass: profile.mass(),
            n,
        });
    }
    let remaining: Vec<u64> = (1..=profile.t()).map(|u| profile.get(u)).collect();
    let mut search = CountSearch {
        g,
        rule,
        remaining,
        open: Vec::new(),
        count: Counter::new(),
    };
    search.dfs(0, g.n());
    Ok(ColouringCounts::from_unordered(search.count, profile))
}

/// Exact ordered and unordered counts of proper colourings realizing the
/// profile. Requires a complete profile.
pub fn count_colourings_with_profile(
    g: &Graph,
    profile: &Profile,
) -> Result<ColouringCounts, SolveError> {
    count_with_rule(g, profile, ClassRule::IndependentOnly)
}

/// Same with every class allowed to be an independent set or a clique.
pub fn count_cocolourings_with_profile(
    g: &Graph,
    profile: &Profile,
) -> Result<ColouringCounts, SolveError> {
    count_with_rule(g, profile, ClassRule::IndependentOrClique)
}
