//! Random graph models `G(n, 1/2)` and `G(n, m)`.

use std::collections::HashMap;

use rand::{Rng, RngCore};

use super::{Graph, GraphError};
use crate::seed;

/// Parameters for the uniform fixed-edge-count model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GnmParams {
    pub n: usize,
    pub m: u64,
}

impl GnmParams {
    /// Pair count N = n(n-1)/2.
    pub fn pair_count(n: usize) -> u64 {
        let n = n as u64;
        n * (n - 1) / 2
    }

    pub fn new(n: usize, m: u64) -> Result<GnmParams, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidSize("n must be at least 1".into()));
        }
        let max = Self::pair_count(n);
        if m > max {
            return Err(GraphError::TooManyEdges { m, max });
        }
        Ok(GnmParams { n, m })
    }

    /// The half-density default m = ⌊N/2⌋.
    pub fn half(n: usize) -> Result<GnmParams, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidSize("n must be at least 1".into()));
        }
        Ok(GnmParams {
            n,
            m: Self::pair_count(n) / 2,
        })
    }

    pub fn big_n(&self) -> u64 {
        Self::pair_count(self.n)
    }
}

/// Samples `G(n, 1/2)`: every pair is an edge independently with
/// probability 1/2. Deterministic for a given seed.
pub fn sample_gnp_half(n: usize, seed_root: u64) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidSize("n must be at least 1".into()));
    }
    let mut g = Graph::empty(n)?;
    let mut rng = seed::rng(seed_root, &[0x676e70, n as u64]); // tag: "gnp"
    let mut buf = 0u64;
    let mut left = 0u32;
    for u in 0..n {
        for v in (u + 1)..n {
            if left == 0 {
                buf = rng.next_u64();
                left = 64;
            }
            if buf & 1 == 1 {
                g.add_edge_unchecked(u, v);
            }
            buf >>= 1;
            left -= 1;
        }
    }
    Ok(g)
}

/// Decodes a linear pair index e ∈ [0, N) into (u, v) with u < v, ordering
/// pairs row by row: (0,1), (0,2), ..., (0,n-1), (1,2), ...
fn decode_pair(n: usize, e: u64) -> (usize, usize) {
    // Row u starts at off(u) = u*n - u(u+1)/2 - u*0 ... solve by a float
    // guess then fix up; exact for all n this crate supports.
    let nf = n as f64;
    let ef = e as f64;
    // off(u) = u*(2n - u - 1)/2 <= e
    let mut u = ((2.0 * nf - 1.0 - ((2.0 * nf - 1.0).powi(2) - 8.0 * ef).sqrt()) / 2.0) as i64;
    u = u.clamp(0, n as i64 - 2);
    let off = |u: i64| -> i64 { u * (2 * n as i64 - u - 1) / 2 };
    while off(u) > e as i64 {
        u -= 1;
    }
    while u + 1 <= n as i64 - 2 && off(u + 1) <= e as i64 {
        u += 1;
    }
    let v = u + 1 + (e as i64 - off(u));
    (u as usize, v as usize)
}

/// Samples `G(n, m)` uniformly over graphs with exactly m edges, via a
/// partial Fisher–Yates shuffle over pair indices (O(m) memory).
pub fn sample_gnm(params: GnmParams, seed_root: u64) -> Result<Graph, GraphError> {
    let n = params.n;
    let big_n = params.big_n();
    let mut g = Graph::empty(n)?;
    let mut rng = seed::rng(seed_root, &[0x676e6d, n as u64, params.m]); // tag: "gnm"
    let mut swapped: HashMap<u64, u64> = HashMap::with_capacity(params.m as usize);
    for r in 0..params.m {
        let j = rng.random_range(r..big_n);
        let pick = *swapped.get(&j).unwrap_or(&j);
        let here = *swapped.get(&r).unwrap_or(&r);
        swapped.insert(j, here);
        let (u, v) = decode_pair(n, pick);
        g.add_edge_unchecked(u, v);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_has_no_edges() {
        let g = sample_gnp_half(1, 7).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn gnp_is_deterministic_for_seed() {
        let a = sample_gnp_half(5, 42).unwrap();
        let b = sample_gnp_half(5, 42).unwrap();
        assert_eq!(a, b);
        let c = sample_gnp_half(5, 43).unwrap();
        assert_ne!(a, c, "different seeds should differ at n = 5 w.h.p.");
    }

    #[test]
    fn gnm_exact_edge_counts() {
        let full = sample_gnm(GnmParams::new(4, 6).unwrap(), 1).unwrap();
        assert_eq!(full, Graph::complete(4).unwrap());
        let empty = sample_gnm(GnmParams::new(4, 0).unwrap(), 1).unwrap();
        assert_eq!(empty.edge_count(), 0);
        for seed in 0..20 {
            let g = sample_gnm(GnmParams::new(9, 13).unwrap(), seed).unwrap();
            assert_eq!(g.edge_count(), 13);
            g.check_invariants().unwrap();
        }
    }

    #[test]
    fn gnm_rejects_m_above_pair_count() {
        assert!(matches!(
            GnmParams::new(4, 7),
            Err(GraphError::TooManyEdges { .. })
        ));
    }

    #[test]
    fn decode_pair_is_a_bijection() {
        let n = 23;
        let mut seen = std::collections::HashSet::new();
        for e in 0..GnmParams::pair_count(n) {
            let (u, v) = decode_pair(n, e);
            assert!(u < v && v < n, "bad pair ({u},{v}) from {e}");
            assert!(seen.insert((u, v)));
        }
        assert_eq!(seen.len() as u64, GnmParams::pair_count(n));
    }

    #[test]
    fn gnp_mean_edge_count_within_three_sigma() {
        // Binomial(N, 1/2): mean N/2, sd sqrt(N/4). Monte Carlo mean over
        // s samples has sd sqrt(N/4/s).
        let n = 100;
        let big_n = GnmParams::pair_count(n) as f64;
        let samples = 10_000u64;
        let mut total: f64 = 0.0;
        for s in 0..samples {
            total += sample_gnp_half(n, 1000 + s).unwrap().edge_count() as f64;
        }
        let mean = total / samples as f64;
        let sd_of_mean = (big_n / 4.0 / samples as f64).sqrt();
        assert!(
            (mean - big_n / 2.0).abs() < 3.0 * sd_of_mean,
            "mean {mean} vs {} ± {}",
            big_n / 2.0,
            3.0 * sd_of_mean
        );
    }

    #[test]
    fn gnm_pair_frequency_is_exchangeable() {
        // Each fixed pair appears with probability m/N = 7/15.
        let params = GnmParams::new(6, 7).unwrap();
        let samples = 10_000u64;
        let mut hits = 0u64;
        for s in 0..samples {
            let g = sample_gnm(params, 50_000 + s).unwrap();
            if g.has_edge(2, 5) {
                hits += 1;
            }
        }
        let freq = hits as f64 / samples as f64;
        assert!(
            (freq - 7.0 / 15.0).abs() < 0.02,
            "pair frequency {freq} too far from 7/15"
        );
    }
}
