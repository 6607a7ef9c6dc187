//! Closed-form expectations and threshold-window quantities for `G(n, 1/2)`
//! and `G(n, m)`, all evaluated in high-precision log space.
//!
//! The central objects: the two-term independence-number approximation
//! `α₀(n) = 2 log₂ n − 2 log₂ log₂ n + 2 log₂(e/2) + 1` with `α = ⌊α₀⌋`,
//! the expected count `μ_t = C(n,t) 2^{−C(t,2)}` of independent t-sets, and
//! the expected number of (co)colourings with a given class-size profile.

use std::fmt;

use serde::Serialize;

use crate::num::gamma::{ln_binomial, ln_binomial_f64};
use crate::num::logreal::LogReal;
use crate::num::{Prec, F};
use crate::profile::Profile;

#[derive(Clone, Debug, PartialEq)]
pub enum MomentsError {
    /// n below the smallest size the formula is defined for.
    SizeTooSmall { n: u64, min: u64 },
    /// ε outside (0, 0.45), the range keeping the window non-degenerate.
    BadEpsilon(f64),
    /// t > n or a profile that does not fit in n vertices.
    Infeasible(String),
    /// Second moment below squared mean: not a moment pair.
    InconsistentMoments,
    /// Cocolouring identity requires k_1 = 0.
    SingletonClasses,
}

impl fmt::Display for MomentsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MomentsError::SizeTooSmall { n, min } => {
                write!(f, "n = {n} violates precondition n ≥ {min}")
            }
            MomentsError::BadEpsilon(e) => {
                write!(f, "eps = {e} violates precondition 0 < eps < 0.45")
            }
            MomentsError::Infeasible(msg) => write!(f, "infeasible input: {msg}"),
            MomentsError::InconsistentMoments => {
                write!(f, "second moment is smaller than the squared mean")
            }
            MomentsError::SingletonClasses => {
                write!(f, "profile has k_1 > 0; the cocolouring identity needs k_1 = 0")
            }
        }
    }
}

impl std::error::Error for MomentsError {}

/// α₀(n) at the working precision. Defined for n ≥ 3.
pub fn alpha0(n: u64, prec: Prec) -> Result<F, MomentsError> {
    if n < 3 {
        return Err(MomentsError::SizeTooSmall { n, min: 3 });
    }
    let ln2 = prec.ln2();
    let log2n = prec.from_u64(n).ln() / &ln2;
    let log2log2n = log2n.clone().ln() / &ln2;
    // 2 log₂(e/2) = 2 (log₂ e − 1) = 2 (1/ln 2 − 1)
    let two = prec.from_u64(2);
    let log2_e_half = prec.one() / &ln2 - prec.one();
    Ok(&two * log2n - &two * log2log2n + two * log2_e_half + prec.one())
}

/// Fast-path α₀(n) in f64.
pub fn alpha0_f64(n: u64) -> f64 {
    let log2n = (n as f64).log2();
    2.0 * log2n - 2.0 * log2n.log2() + 2.0 * (std::f64::consts::LOG2_E - 1.0) + 1.0
}

/// α = ⌊α₀(n)⌋, taken on the high-precision value.
pub fn alpha_int(n: u64, prec: Prec) -> Result<u64, MomentsError> {
    let a0 = alpha0(n, prec)?;
    let fl = a0.floor().to_f64().value();
    Ok(fl as u64)
}

/// μ_t = C(n, t) 2^{−C(t,2)}, the expected number of independent t-sets
/// in G(n, 1/2). Requires t ≤ n.
pub fn mu(n: u64, t: u64, prec: Prec) -> Result<LogReal, MomentsError> {
    if t > n {
        return Err(MomentsError::Infeasible(format!("t = {t} exceeds n = {n}")));
    }
    let pairs = t * (t - 1) / 2;
    let ln = ln_binomial(n, t, prec) - prec.ln2() * prec.from_u64(pairs);
    Ok(LogReal::from_ln(ln, prec))
}

/// Everything the threshold window needs to know about one n.
#[derive(Clone, Debug)]
pub struct AlphaData {
    pub n: u64,
    pub alpha0: f64,
    pub alpha: u64,
    pub mu_alpha: LogReal,
    pub mu_alpha_minus_1: LogReal,
    /// log μ_α / log n.
    pub exponent: f64,
}

pub fn alpha_data(n: u64, prec: Prec) -> Result<AlphaData, MomentsError> {
    let a0 = alpha0(n, prec)?;
    let alpha = a0.floor().to_f64().value() as u64;
    let mu_alpha = mu(n, alpha, prec)?;
    let mu_alpha_minus_1 = mu(n, alpha - 1, prec)?;
    let ln_n = prec.from_u64(n).ln();
    let exponent = match mu_alpha.ln_mag() {
        Some(lm) => (lm / &ln_n).to_f64().value(),
        None => f64::NEG_INFINITY,
    };
    Ok(AlphaData {
        n,
        alpha0: a0.to_f64().value(),
        alpha,
        mu_alpha,
        mu_alpha_minus_1,
        exponent,
    })
}

#[derive(Clone, Debug)]
pub struct WindowResult {
    pub holds: bool,
    pub data: AlphaData,
}

/// Evaluates the threshold window `n^{0.05+ε} ≤ μ_α ≤ n^{1−ε}` exactly in
/// log space. Requires 0 < ε < 0.45 (so that 0.05 + ε < 1 − ε).
pub fn window_condition(n: u64, eps: f64, prec: Prec) -> Result<WindowResult, MomentsError> {
    if !(eps > 0.0 && eps < 0.45) {
        return Err(MomentsError::BadEpsilon(eps));
    }
    let data = alpha_data(n, prec)?;
    let ln_n = prec.from_u64(n).ln();
    let lo = prec.from_f64(0.05 + eps) * &ln_n;
    let hi = prec.from_f64(1.0 - eps) * &ln_n;
    let holds = match data.mu_alpha.ln_mag() {
        Some(lm) => *lm >= lo && *lm <= hi,
        None => false,
    };
    Ok(WindowResult { holds, data })
}

/// f64 scan step: (α, exponent, holds, margin). `margin` is the distance,
/// in exponent units, to the nearest decision boundary — the α jump or a
/// window edge; callers escalate to high precision when it is tiny.
fn window_step_f64(n: u64, eps: f64) -> (u64, f64, bool, f64) {
    let a0 = alpha0_f64(n);
    let alpha = a0.floor() as u64;
    let frac_margin = (a0 - a0.round()).abs();
    let pairs = alpha * (alpha - 1) / 2;
    let ln_mu = ln_binomial_f64(n, alpha) - pairs as f64 * std::f64::consts::LN_2;
    let exponent = ln_mu / (n as f64).ln();
    let lo = 0.05 + eps;
    let hi = 1.0 - eps;
    let holds = exponent >= lo && exponent <= hi;
    let margin = (exponent - lo)
        .abs()
        .min((exponent - hi).abs())
        .min(frac_margin);
    (alpha, exponent, holds, margin)
}

/// Scans 3 ≤ n ≤ n_max and reports the fraction of n for which the window
/// holds. Each n is first screened in f64; any n within 10⁻⁶ of a decision
/// boundary is re-evaluated at full precision, so the result matches an
/// all-high-precision scan. The callback sees every row (n, exponent,
/// holds). Requires n_max ≥ 10³.
pub fn fraction_scan(
    n_max: u64,
    eps: f64,
    prec: Prec,
    mut on_row: impl FnMut(u64, f64, bool),
) -> Result<f64, MomentsError> {
    if n_max < 1000 {
        return Err(MomentsError::SizeTooSmall { n: n_max, min: 1000 });
    }
    if !(eps > 0.0 && eps < 0.45) {
        return Err(MomentsError::BadEpsilon(eps));
    }
    let mut hold_count = 0u64;
    let mut total = 0u64;
    for n in 3..=n_max {
        let (_, mut exponent, mut holds, margin) = window_step_f64(n, eps);
        if margin < 1e-6 {
            let w = window_condition(n, eps, prec)?;
            holds = w.holds;
            exponent = w.data.exponent;
        }
        total += 1;
        hold_count += holds as u64;
        on_row(n, exponent, holds);
    }
    Ok(hold_count as f64 / total as f64)
}

pub fn fraction_applicable(n_max: u64, eps: f64, prec: Prec) -> Result<f64, MomentsError> {
    fraction_scan(n_max, eps, prec, |_, _, _| {})
}

/// The two constants the applicable fraction fluctuates between:
/// `(2^{−0.05/2} − 2^{−0.5})/(1 − 2^{−0.5})` and
/// `(1 − 2^{−0.95/2})/(1 − 2^{−0.5})`.
pub fn limit_fractions() -> (f64, f64) {
    let r = 1.0 - 2f64.powf(-0.5);
    (
        (2f64.powf(-0.025) - 2f64.powf(-0.5)) / r,
        (1.0 - 2f64.powf(-0.475)) / r,
    )
}

/// Which random graph model an expectation refers to. `Gnm` uses the
/// half-density edge count m = ⌊N/2⌋ throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Model {
    Half,
    Gnm,
}

/// Ordered and unordered expected counts for one profile.
#[derive(Clone, Debug)]
pub struct ExpectedCounts {
    pub ordered: LogReal,
    pub unordered: LogReal,
}

/// E[X_k], the expected number of colourings with the given profile:
/// `P_k 2^{−f_k}` in G(n,1/2) and `P_k C(N−f_k, m)/C(N, m)` in G(n,m).
/// The unordered companion divides by Π k_u!.
pub fn expected_colourings(
    n: u64,
    profile: &Profile,
    model: Model,
    prec: Prec,
) -> Result<ExpectedCounts, MomentsError> {
    if profile.mass() > n {
        return Err(MomentsError::Infeasible(format!(
            "profile mass {} exceeds n = {n}",
            profile.mass()
        )));
    }
    let ln_pk = profile.ln_ordered_partitions(n, prec);
    let f_k = profile.forbidden_pairs();
    let ln_prob = match model {
        Model::Half => -(prec.ln2() * prec.from_u64(f_k)),
        Model::Gnm => {
            let big_n = n * (n - 1) / 2;
            let m = big_n / 2;
            if f_k > big_n - m {
                // Not enough non-edges to avoid every within-class pair.
                return Ok(ExpectedCounts {
                    ordered: LogReal::zero(prec),
                    unordered: LogReal::zero(prec),
                });
            }
            ln_binomial(big_n - f_k, m, prec) - ln_binomial(big_n, m, prec)
        }
    };
    let ordered = LogReal::from_ln(ln_pk + ln_prob, prec);
    let unordered = LogReal::from_ln(
        ordered.ln_mag().expect("positive").clone() - profile.ln_multiplicity_factor(prec),
        prec,
    );
    Ok(ExpectedCounts { ordered, unordered })
}

/// E[X_k^co] = 2^k E_{1/2}[X_k]; requires k_1 = 0 (the identity is only
/// valid when every class has at least one internal pair).
pub fn expected_cocolourings(
    n: u64,
    profile: &Profile,
    prec: Prec,
) -> Result<ExpectedCounts, MomentsError> {
    if profile.get(1) > 0 {
        return Err(MomentsError::SingletonClasses);
    }
    let base = expected_colourings(n, profile, Model::Half, prec)?;
    let k = profile.k() as i64;
    Ok(ExpectedCounts {
        ordered: base.ordered.mul_pow2(k),
        unordered: base.unordered.mul_pow2(k),
    })
}

/// The G(n,m) transfer ratio C(N−x, m)/C(N, m) at m = ⌊N/2⌋, together with
/// the asymptotic form `q^x exp(−(b−1)x²/n²)` at p = 1/2 (q = 1/2, b = 2).
#[derive(Clone, Debug)]
pub struct TransferRatio {
    pub exact: LogReal,
    pub asymptotic: LogReal,
    /// Set when x > N − m, where the exact ratio vanishes.
    pub vanished: bool,
}

pub fn gnm_transfer_ratio(n: u64, x: u64, prec: Prec) -> Result<TransferRatio, MomentsError> {
    if n < 2 {
        return Err(MomentsError::SizeTooSmall { n, min: 2 });
    }
    let big_n = n * (n - 1) / 2;
    let m = big_n / 2;
    let xf = prec.from_u64(x);
    let nf = prec.from_u64(n);
    let ln_asym = -(&xf * prec.ln2()) - &xf * &xf / (&nf * &nf);
    let asymptotic = LogReal::from_ln(ln_asym, prec);
    if x > big_n - m {
        return Ok(TransferRatio {
            exact: LogReal::zero(prec),
            asymptotic,
            vanished: true,
        });
    }
    let ln_exact = ln_binomial(big_n - x, m, prec) - ln_binomial(big_n, m, prec);
    Ok(TransferRatio {
        exact: LogReal::from_ln(ln_exact, prec),
        asymptotic,
        vanished: false,
    })
}

/// Azuma–Hoeffding tail for the vertex-exposure martingale:
/// `2 exp(−t²/(2n))`. Requires t ≥ 0.
pub fn azuma_tail(n: u64, t: f64, prec: Prec) -> Result<LogReal, MomentsError> {
    if !(t >= 0.0) {
        return Err(MomentsError::Infeasible(format!("t = {t} must be ≥ 0")));
    }
    let tf = prec.from_f64(t);
    let ln = prec.ln2() - &tf * &tf / prec.from_u64(2 * n);
    Ok(LogReal::from_ln(ln, prec))
}

/// Paley–Zygmund: P(Z > 0) ≥ E[Z]²/E[Z²] for Z ≥ 0. Flags inputs where
/// E[Z²] < E[Z]², which no real random variable can produce.
pub fn paley_zygmund_bound(
    mean: &LogReal,
    second_moment: &LogReal,
) -> Result<LogReal, MomentsError> {
    let mean_sq = mean.powi(2);
    if second_moment < &mean_sq {
        return Err(MomentsError::InconsistentMoments);
    }
    if mean.is_zero() {
        return Ok(LogReal::zero(mean.prec()));
    }
    Ok(mean_sq.div(second_moment))
}
