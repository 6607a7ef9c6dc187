//! Class-size profiles: the multiset of colour-class sizes of a partition,
//! recorded as multiplicities `k_u` for each part size `u ≤ t`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::num::{gamma, Prec, F};

/// A t-bounded profile with integer multiplicities.
///
/// `counts[u-1]` is `k_u`, the number of classes of size `u`; sizes above
/// `t` are structurally absent. A profile is *complete* for n when its mass
/// `Σ u·k_u` equals n.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Profile {
    t: usize,
    counts: Vec<u64>,
}

impl Profile {
    pub fn new(t: usize) -> Profile {
        assert!(t >= 1, "size bound t must be at least 1");
        Profile {
            t,
            counts: vec![0; t],
        }
    }

    /// Builds from (size, multiplicity) pairs.
    pub fn from_pairs(t: usize, pairs: &[(usize, u64)]) -> Profile {
        let mut p = Profile::new(t);
        for &(u, k) in pairs {
            p.set(u, k);
        }
        p
    }

    /// All classes of one size.
    pub fn uniform(u: usize, classes: u64) -> Profile {
        Profile::from_pairs(u, &[(u, classes)])
    }

    /// n singleton classes.
    pub fn singletons(n: u64) -> Profile {
        Profile::from_pairs(1, &[(1, n)])
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn get(&self, u: usize) -> u64 {
        if u >= 1 && u <= self.t {
            self.counts[u - 1]
        } else {
            0
        }
    }

    pub fn set(&mut self, u: usize, k_u: u64) {
        assert!(u >= 1 && u <= self.t, "part size {u} outside [1, {}]", self.t);
        self.counts[u - 1] = k_u;
    }

    /// Total number of classes k = Σ k_u.
    pub fn k(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Total number of vertices covered, Σ u·k_u.
    pub fn mass(&self) -> u64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &k)| (i as u64 + 1) * k)
            .sum()
    }

    pub fn is_complete(&self, n: u64) -> bool {
        self.mass() == n
    }

    /// Number of within-class vertex pairs, f_k = Σ C(u,2) k_u.
    pub fn forbidden_pairs(&self) -> u64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &k)| {
                let u = i as u64 + 1;
                u * (u - 1) / 2 * k
            })
            .sum()
    }

    /// Sizes with non-zero multiplicity, ascending.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.t).filter(|&u| self.get(u) > 0).collect()
    }

    /// ln P_k where P_k = n! / ((n - mass)! Π u!^{k_u}) counts ordered
    /// partitions with this profile on n labelled vertices.
    pub fn ln_ordered_partitions(&self, n: u64, prec: Prec) -> F {
        let mass = self.mass();
        assert!(mass <= n, "profile mass {mass} exceeds n = {n}");
        let mut acc = gamma::ln_factorial(n, prec) - gamma::ln_factorial(n - mass, prec);
        for u in self.support() {
            let k_u = self.get(u);
            acc -= gamma::ln_factorial(u as u64, prec) * prec.from_u64(k_u);
        }
        acc
    }

    /// ln Π k_u!, the ordered/unordered conversion factor.
    pub fn ln_multiplicity_factor(&self, prec: Prec) -> F {
        let mut acc = prec.zero();
        for u in self.support() {
            acc += gamma::ln_factorial(self.get(u), prec);
        }
        acc
    }

    /// ln d_u with d_u = 2^{C(u,2)} u!, the profile weight denominator.
    pub fn ln_d(u: usize, prec: Prec) -> F {
        let u = u as u64;
        let pairs = u * (u - 1) / 2;
        prec.ln2() * prec.from_u64(pairs) + gamma::ln_factorial(u, prec)
    }

    /// f64 version of `ln_d` for hot loops.
    pub fn ln_d_f64(u: usize) -> f64 {
        let u = u as u64;
        let pairs = u * (u - 1) / 2;
        pairs as f64 * std::f64::consts::LN_2 + gamma::ln_factorial_f64(u)
    }

    /// All complete t-bounded k-profiles on n vertices (partitions of n
    /// into exactly k parts of size at most t). Exponential in general;
    /// meant for small-scale oracles.
    pub fn enumerate_complete(n: u64, k: u64, t: usize) -> Vec<Profile> {
        fn rec(
            u: usize,
            left_n: u64,
            left_k: u64,
            current: &mut Profile,
            out: &mut Vec<Profile>,
        ) {
            if u == 0 {
                if left_n == 0 && left_k == 0 {
                    out.push(current.clone());
                }
                return;
            }
            // Choose k_u classes of size u; the rest must still fit.
            let max_here = (left_n / u as u64).min(left_k);
            for k_u in 0..=max_here {
                let rem_n = left_n - k_u * u as u64;
                let rem_k = left_k - k_u;
                // Remaining classes have sizes in [1, u-1].
                if rem_n > rem_k * (u as u64 - 1) || rem_n < rem_k {
                    continue;
                }
                current.set(u, k_u);
                rec(u - 1, rem_n, rem_k, current, out);
                current.set(u, 0);
            }
        }
        let mut out = Vec::new();
        if k == 0 {
            return out;
        }
        let mut current = Profile::new(t);
        rec(t, n, k, &mut current, &mut out);
        out
    }

    /// Parses the CLI form "u:count,u:count,...", e.g. "3:2" or "2:1,3:4".
    pub fn parse(text: &str) -> Result<Profile, String> {
        let mut pairs: Vec<(usize, u64)> = Vec::new();
        for piece in text.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                continue;
            }
            let (u, k) = piece
                .split_once(':')
                .ok_or_else(|| format!("bad profile piece '{piece}', want 'size:count'"))?;
            let u: usize = u
                .trim()
                .parse()
                .map_err(|_| format!("bad part size '{u}'"))?;
            let k: u64 = k
                .trim()
                .parse()
                .map_err(|_| format!("bad multiplicity '{k}'"))?;
            if u == 0 {
                return Err("part size 0 is not allowed".into());
            }
            pairs.push((u, k));
        }
        if pairs.is_empty() {
            return Err("empty profile".into());
        }
        let t = pairs.iter().map(|&(u, _)| u).max().unwrap();
        let mut p = Profile::new(t);
        for (u, k) in pairs {
            p.set(u, p.get(u) + k);
        }
        Ok(p)
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .support()
            .iter()
            .map(|&u| format!("{u}:{}", self.get(u)))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_attributes() {
        // Two classes of size 2 on four vertices.
        let p = Profile::uniform(2, 2);
        assert_eq!(p.k(), 2);
        assert_eq!(p.mass(), 4);
        assert!(p.is_complete(4));
        assert_eq!(p.forbidden_pairs(), 2);
        let prec = Prec::default();
        let pk = p.ln_ordered_partitions(4, prec).to_f64().value().exp();
        assert!((pk - 6.0).abs() < 1e-10);
    }

    #[test]
    fn singleton_profile() {
        let p = Profile::singletons(5);
        assert_eq!(p.k(), 5);
        assert_eq!(p.mass(), 5);
        assert_eq!(p.forbidden_pairs(), 0);
        let prec = Prec::default();
        let pk = p.ln_ordered_partitions(5, prec).to_f64().value().exp();
        assert!((pk - 120.0).abs() < 1e-9);
    }

    #[test]
    fn ln_d_matches_definition() {
        // d_3 = 2^3 * 3! = 48
        let prec = Prec::default();
        let v = Profile::ln_d(3, prec).to_f64().value();
        assert!((v - 48f64.ln()).abs() < 1e-12);
        assert!((Profile::ln_d_f64(3) - 48f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn parse_and_display_round_trip() {
        let p = Profile::parse("2:1,3:4").unwrap();
        assert_eq!(p.get(2), 1);
        assert_eq!(p.get(3), 4);
        assert_eq!(p.t(), 3);
        assert_eq!(p.to_string(), "2:1,3:4");
        assert!(Profile::parse("0:1").is_err());
        assert!(Profile::parse("x").is_err());
    }

    #[test]
    fn enumerate_complete_matches_hand_count() {
        // Partitions of 7 into exactly 3 parts of size ≤ 4:
        // 4+2+1, 3+3+1, 3+2+2.
        let all = Profile::enumerate_complete(7, 3, 4);
        assert_eq!(all.len(), 3);
        for p in &all {
            assert_eq!(p.k(), 3);
            assert!(p.is_complete(7));
        }
        // Single profile when forced: 2+2 on 4 vertices.
        assert_eq!(Profile::enumerate_complete(4, 2, 2).len(), 1);
        // Infeasible: 3 classes of size ≤ 2 cannot cover 7 vertices.
        assert!(Profile::enumerate_complete(7, 3, 2).is_empty());
    }

    #[test]
    fn partial_profile_partitions_count() {
        // One class of size 2 out of n = 4: P = 4!/2!/2! = 6 ordered
        // (choose the pair; the rest stays uncovered).
        let p = Profile::uniform(2, 1);
        let prec = Prec::default();
        let pk = p.ln_ordered_partitions(4, prec).to_f64().value().exp();
        assert!((pk - 6.0).abs() < 1e-10);
    }
}
