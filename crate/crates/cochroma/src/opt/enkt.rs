//! Exact E_{n,k,t}: the expected total number of unordered t-bounded
//! k-colourings of G(n, 1/2), summed over all complete t-bounded
//! k-profiles.
//!
//! No profile enumeration: writing w_u = 2^{-C(u,2)}/u!, the sum over
//! profiles equals (n!/k!) [x^n] (Σ_u w_u x^u)^k, and the coefficient is
//! built by a dynamic program over (classes used, vertices used) in log
//! space. The DP runs in plain f64 for hot loops (threshold bisection) and
//! in high precision where tests demand ≥ 40 matching digits; both paths
//! share the same generic core.

use crate::num::gamma::{ln_factorial, ln_factorial_f64};
use crate::num::logreal::LogReal;
use crate::num::{Prec, F};
use crate::profile::Profile;

/// Log-space scalar arithmetic for the DP core.
pub(crate) trait LogNum: Clone {
    fn neg_inf() -> Self;
    fn is_neg_inf(&self) -> bool;
    /// Log-space product (adds logs).
    fn mul_ln(&self, other: &Self) -> Self;
    /// Log-space sum (stable log-sum-exp).
    fn lse(&self, other: &Self) -> Self;
}

impl LogNum for f64 {
    fn neg_inf() -> f64 {
        f64::NEG_INFINITY
    }

    fn is_neg_inf(&self) -> bool {
        *self == f64::NEG_INFINITY
    }

    fn mul_ln(&self, other: &f64) -> f64 {
        self + other
    }

    fn lse(&self, other: &f64) -> f64 {
        let (hi, lo) = if self >= other {
            (*self, *other)
        } else {
            (*other, *self)
        };
        if lo == f64::NEG_INFINITY {
            return hi;
        }
        hi + (lo - hi).exp().ln_1p()
    }
}

/// High-precision log value; `None` is the additive zero (−∞).
#[derive(Clone)]
pub(crate) struct HpLn {
    ln: Option<F>,
    prec: Prec,
}

impl HpLn {
    pub(crate) fn from_ln(ln: F, prec: Prec) -> HpLn {
        HpLn { ln: Some(ln), prec }
    }

    pub(crate) fn zero(prec: Prec) -> HpLn {
        HpLn { ln: None, prec }
    }

    pub(crate) fn into_logreal(self) -> LogReal {
        match self.ln {
            Some(ln) => LogReal::from_ln(ln, self.prec),
            None => LogReal::zero(self.prec),
        }
    }
}

impl LogNum for HpLn {
    fn neg_inf() -> HpLn {
        HpLn {
            ln: None,
            prec: Prec::default(),
        }
    }

    fn is_neg_inf(&self) -> bool {
        self.ln.is_none()
    }

    fn mul_ln(&self, other: &HpLn) -> HpLn {
        match (&self.ln, &other.ln) {
            (Some(a), Some(b)) => HpLn {
                ln: Some(a + b),
                prec: self.prec,
            },
            _ => HpLn::zero(self.prec),
        }
    }

    fn lse(&self, other: &HpLn) -> HpLn {
        match (&self.ln, &other.ln) {
            (None, _) => other.clone(),
            (_, None) => self.clone(),
            (Some(a), Some(b)) => {
                let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
                let d = lo - hi;
                let d64 = d.to_f64().value();
                let ln = if d64 < -((self.prec.bits as f64 + 16.0) * std::f64::consts::LN_2) {
                    hi.clone()
                } else {
                    hi + d.exp().ln_1p()
                };
                HpLn {
                    ln: Some(ln),
                    prec: self.prec,
                }
            }
        }
    }
}

/// [x^n] (Σ_{u=1..t} e^{ln_w[u-1]} x^u)^k in log space, with per-row
/// feasibility bands to skip unreachable states.
fn coefficient_dp<T: LogNum>(n: usize, k: usize, t: usize, ln_w: &[T], one: T) -> T {
    debug_assert_eq!(ln_w.len(), t);
    let mut prev: Vec<T> = vec![T::neg_inf(); n + 1];
    prev[0] = one;
    let mut cur: Vec<T> = vec![T::neg_inf(); n + 1];
    for j in 1..=k {
        let v_lo = j.max(n.saturating_sub((k - j) * t));
        let v_hi = (j * t).min(n - (k - j));
        for slot in cur.iter_mut() {
            *slot = T::neg_inf();
        }
        for v in v_lo..=v_hi {
            let mut acc = T::neg_inf();
            for u in 1..=t.min(v) {
                let below = &prev[v - u];
                if below.is_neg_inf() {
                    continue;
                }
                acc = acc.lse(&below.mul_ln(&ln_w[u - 1]));
            }
            cur[v] = acc;
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[n].clone()
}

fn feasible(n: u64, k: u64, t: usize) -> bool {
    k >= 1 && k <= n && n <= k * t as u64
}

/// ln E_{n,k,t} in f64; −∞ when infeasible (k > n or n > k·t).
pub fn ln_e_nkt_f64(n: u64, k: u64, t: usize) -> f64 {
    let t = t.min(n as usize);
    if !feasible(n, k, t) {
        return f64::NEG_INFINITY;
    }
    let ln_w: Vec<f64> = (1..=t).map(|u| -Profile::ln_d_f64(u)).collect();
    let coeff = coefficient_dp(n as usize, k as usize, t, &ln_w, 0.0);
    ln_factorial_f64(n) - ln_factorial_f64(k) + coeff
}

/// Exact E_{n,k,t} with a feasibility flag.
#[derive(Clone, Debug)]
pub struct EnktValue {
    pub value: LogReal,
    pub feasible: bool,
}

/// High-precision E_{n,k,t}.
pub fn exact_e_nkt(n: u64, k: u64, t: usize, prec: Prec) -> EnktValue {
    let t = t.min(n as usize);
    if !feasible(n, k, t) {
        return EnktValue {
            value: LogReal::zero(prec),
            feasible: false,
        };
    }
    let ln_w: Vec<HpLn> = (1..=t)
        .map(|u| HpLn::from_ln(-Profile::ln_d(u, prec), prec))
        .collect();
    let one = HpLn::from_ln(prec.zero(), prec);
    let coeff = coefficient_dp(n as usize, k as usize, t, &ln_w, one);
    let offset = ln_factorial(n, prec) - ln_factorial(k, prec);
    let value = match coeff.into_logreal().ln_mag() {
        Some(c) => LogReal::from_ln(offset + c, prec),
        None => LogReal::zero(prec),
    };
    EnktValue {
        value,
        feasible: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moments::{expected_colourings, Model};

    fn p() -> Prec {
        Prec::default()
    }

    #[test]
    fn hand_values_on_four_vertices() {
        // E_{4,2,2} = 0.75 (single profile 2+2), E_{4,3,2} = 3 (2+1+1).
        let e22 = exact_e_nkt(4, 2, 2, p());
        assert!(e22.feasible);
        assert!((e22.value.to_f64() - 0.75).abs() < 1e-12);
        let e32 = exact_e_nkt(4, 3, 2, p());
        assert!((e32.value.to_f64() - 3.0).abs() < 1e-12);
        // f64 path agrees.
        assert!((ln_e_nkt_f64(4, 2, 2) - 0.75f64.ln()).abs() < 1e-12);
        assert!((ln_e_nkt_f64(4, 3, 2) - 3f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn infeasible_sizes_flagged() {
        let e = exact_e_nkt(10, 11, 3, p());
        assert!(!e.feasible && e.value.is_zero());
        let e = exact_e_nkt(10, 2, 3, p());
        assert!(!e.feasible, "2 classes of ≤ 3 cannot cover 10");
        assert_eq!(ln_e_nkt_f64(10, 2, 3), f64::NEG_INFINITY);
    }

    #[test]
    fn dp_matches_profile_enumeration_oracle_to_forty_digits() {
        // Independent oracle: enumerate every complete t-bounded k-profile
        // and sum the closed-form unordered expectations.
        for n in [6u64, 9, 12] {
            for t in [2usize, 3, 5] {
                for k in 1..=n {
                    let dp = exact_e_nkt(n, k, t, p());
                    let profiles = Profile::enumerate_complete(n, k, t);
                    if profiles.is_empty() {
                        assert!(!dp.feasible || dp.value.is_zero());
                        continue;
                    }
                    let mut total = LogReal::zero(p());
                    for prof in &profiles {
                        let e = expected_colourings(n, prof, Model::Half, p()).unwrap();
                        total = total.add(&e.unordered);
                    }
                    let a = dp.value.ln_mag().expect("positive");
                    let b = total.ln_mag().expect("positive");
                    let diff = (a - b).to_f64().value().abs();
                    let scale = b.to_f64().value().abs().max(1.0);
                    assert!(
                        diff / scale < 1e-40,
                        "n={n} k={k} t={t}: rel log diff {}",
                        diff / scale
                    );
                }
            }
        }
    }

    #[test]
    fn f64_path_tracks_high_precision() {
        for (n, k, t) in [(30u64, 7u64, 6usize), (60, 12, 8), (100, 22, 7)] {
            let hp = exact_e_nkt(n, k, t, p()).value.ln_f64();
            let fast = ln_e_nkt_f64(n, k, t);
            assert!(
                (hp - fast).abs() < 1e-7 * hp.abs().max(1.0),
                "n={n} k={k} t={t}: hp {hp} vs f64 {fast}"
            );
        }
    }

    #[test]
    fn all_singletons_is_certain() {
        // k = n forces the all-singletons profile: every graph admits
        // exactly that one colouring, so E = 1.
        let e = exact_e_nkt(9, 9, 4, p());
        assert!((e.value.to_f64() - 1.0).abs() < 1e-12);
    }
}
