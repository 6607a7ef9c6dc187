//! Exhaustive set-partition oracles for cross-validating the solvers.
//!
//! These enumerate every set partition of the vertex set (blocks keyed by
//! their minimal element) and test each block from scratch with the graph
//! predicates. Deliberately independent of the branch-and-bound code paths.

use crate::graph::{Bits, Graph};
use crate::profile::Profile;

fn for_each_partition(n: usize, f: &mut impl FnMut(&[Vec<usize>])) {
    fn rec(v: usize, n: usize, blocks: &mut Vec<Vec<usize>>, f: &mut impl FnMut(&[Vec<usize>])) {
        if v == n {
            f(blocks);
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(v);
            rec(v + 1, n, blocks, f);
            blocks[i].pop();
        }
        blocks.push(vec![v]);
        rec(v + 1, n, blocks, f);
        blocks.pop();
    }
    let mut blocks = Vec::new();
    rec(0, n, &mut blocks, f);
}

fn block_bits(n: usize, block: &[usize]) -> Bits {
    Bits::from_indices(n, block)
}

/// ζ(G) by full enumeration of set partitions.
pub fn cochromatic_by_partitions(g: &Graph) -> usize {
    let n = g.n();
    let mut best = n;
    for_each_partition(n, &mut |blocks| {
        if blocks.len() >= best {
            return;
        }
        let ok = blocks.iter().all(|b| {
            let bits = block_bits(n, b);
            g.is_independent_set(&bits) || g.is_clique(&bits)
        });
        if ok {
            best = blocks.len();
        }
    });
    best
}

/// Unordered count of partitions realizing `profile` whose blocks are all
/// independent sets (or, with `cocolour`, each independent or a clique).
pub fn count_colourings_by_partitions(g: &Graph, profile: &Profile, cocolour: bool) -> u64 {
    let n = g.n();
    let mut count = 0u64;
    for_each_partition(n, &mut |blocks| {
        let mut want = Profile::new(profile.t().max(n));
        for b in blocks {
            if b.len() > want.t() {
                return;
            }
            want.set(b.len(), want.get(b.len()) + 1);
        }
        for u in 1..=want.t() {
            if want.get(u) != profile.get(u) {
                return;
            }
        }
        let ok = blocks.iter().all(|b| {
            let bits = block_bits(n, b);
            g.is_independent_set(&bits) || (cocolour && g.is_clique(&bits))
        });
        count += ok as u64;
    });
    count
}

/// Total number of unordered t-bounded k-colourings (every block an
/// independent set of size at most t, exactly k blocks).
pub fn count_tbounded_colourings(g: &Graph, k: usize, t: usize) -> u64 {
    let n = g.n();
    let mut count = 0u64;
    for_each_partition(n, &mut |blocks| {
        if blocks.len() != k {
            return;
        }
        if blocks.iter().any(|b| b.len() > t) {
            return;
        }
        let ok = blocks
            .iter()
            .all(|b| g.is_independent_set(&block_bits(n, b)));
        count += ok as u64;
    });
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_count_is_bell_number() {
        let mut count = 0u64;
        for_each_partition(5, &mut |_| count += 1);
        assert_eq!(count, 52); // Bell(5)
    }

    #[test]
    fn c5_has_no_two_class_cocolouring() {
        let g = Graph::cycle(5).unwrap();
        let mut best = usize::MAX;
        let mut valid_partitions = 0u64;
        for_each_partition(5, &mut |blocks| {
            let ok = blocks.iter().all(|b| {
                let bits = block_bits(5, b);
                g.is_independent_set(&bits) || g.is_clique(&bits)
            });
            if ok {
                valid_partitions += 1;
                best = best.min(blocks.len());
            }
        });
        assert_eq!(best, 3);
        assert!(valid_partitions > 0);
    }

    #[test]
    fn profile_counts_agree_with_counting_module() {
        use crate::solver::{count_cocolourings_with_profile, count_colourings_with_profile};
        use dashu_int::UBig;
        for seed in 0..20u64 {
            let g = crate::graph::sample_gnp_half(6, 7000 + seed).unwrap();
            for prof in [
                Profile::uniform(2, 3),
                Profile::uniform(3, 2),
                Profile::from_pairs(4, &[(4, 1), (2, 1)]),
                Profile::from_pairs(3, &[(3, 1), (2, 1), (1, 1)]),
            ] {
                let fast = count_colourings_with_profile(&g, &prof).unwrap();
                let slow = count_colourings_by_partitions(&g, &prof, false);
                assert_eq!(fast.unordered, UBig::from(slow), "colour {prof}");
                let fast = count_cocolourings_with_profile(&g, &prof).unwrap();
                let slow = count_colourings_by_partitions(&g, &prof, true);
                assert_eq!(fast.unordered, UBig::from(slow), "cocolour {prof}");
            }
        }
    }

    #[test]
    fn tbounded_count_splits_over_profiles() {
        // Σ over complete t-bounded k-profiles of per-profile counts equals
        // the direct count of t-bounded k-colourings.
        use crate::solver::count_colourings_with_profile;
        use dashu_int::UBig;
        for seed in 0..10u64 {
            let g = crate::graph::sample_gnp_half(7, 300 + seed).unwrap();
            for (k, t) in [(3usize, 3usize), (4, 2), (2, 4), (4, 4)] {
                let direct = count_tbounded_colourings(&g, k, t);
                let mut total = UBig::ZERO;
                for prof in Profile::enumerate_complete(7, k as u64, t) {
                    total += count_colourings_with_profile(&g, &prof).unwrap().unordered;
                }
                assert_eq!(total, UBig::from(direct), "k={k} t={t} seed={seed}");
            }
        }
    }
}
