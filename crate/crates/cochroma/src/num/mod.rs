//! Shared arbitrary-precision arithmetic: precision context, cached
//! constants, log-gamma, and the [`logreal::LogReal`] log-space scalar.
//!
//! All high-precision values are binary [`FBig`]s with half-even rounding.
//! A [`Prec`] value pins the working mantissa size in bits; every public
//! constructor in this module takes one so that results are reproducible
//! bit for bit for a given precision.

pub mod gamma;
pub mod logreal;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use dashu_float::round::mode::HalfEven;
use dashu_int::UBig;

/// The high-precision float used throughout the crate.
pub type F = dashu_float::FBig<HalfEven, 2>;

/// Working precision in bits of mantissa.
///
/// The crate default is 256 bits (roughly 77 decimal digits), enough to
/// resolve expectations of magnitude `exp(±n log n)` with tens of digits to
/// spare at every size this toolkit targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Prec {
    pub bits: usize,
}

impl Default for Prec {
    fn default() -> Self {
        Prec { bits: 256 }
    }
}

impl Prec {
    pub fn new(bits: usize) -> Self {
        assert!(bits >= 32, "precision below 32 bits is not supported");
        Prec { bits }
    }

    /// Exact small integer, rounded into this precision.
    pub fn from_u64(self, x: u64) -> F {
        F::from(x).with_precision(self.bits).value()
    }

    pub fn from_i64(self, x: i64) -> F {
        F::from(x).with_precision(self.bits).value()
    }

    /// Finite `f64`, converted exactly then rounded into this precision.
    pub fn from_f64(self, x: f64) -> F {
        F::try_from(x)
            .expect("finite f64")
            .with_precision(self.bits)
            .value()
    }

    pub fn from_ubig(self, x: &UBig) -> F {
        F::from(x.clone()).with_precision(self.bits).value()
    }

    pub fn zero(self) -> F {
        F::ZERO.with_precision(self.bits).value()
    }

    pub fn one(self) -> F {
        F::ONE.with_precision(self.bits).value()
    }

    /// Natural log of an exact positive integer.
    pub fn ln_ubig(self, x: &UBig) -> F {
        assert!(!x.is_zero(), "ln of zero");
        self.from_ubig(x).ln()
    }

    /// ln 2 at this precision (cached).
    pub fn ln2(self) -> F {
        consts(self).ln2.clone()
    }

    /// ln(2π)/2 at this precision (cached).
    pub fn half_ln_2pi(self) -> F {
        consts(self).half_ln_2pi.clone()
    }
}

/// Per-precision constant cache. `ln 2` comes straight from the float
/// library; `ln(2π)/2` is recovered from Stirling's series anchored at an
/// exact factorial, see [`gamma`].
pub(crate) struct PrecConsts {
    pub ln2: F,
    pub half_ln_2pi: F,
    /// Stirling coefficients `B_{2j} / (2j (2j-1))` for `j = 1, 2, ...`.
    pub stirling: Vec<F>,
}

static CONSTS: RwLock<Option<HashMap<usize, Arc<PrecConsts>>>> = RwLock::new(None);

pub(crate) fn consts(prec: Prec) -> Arc<PrecConsts> {
    if let Some(map) = CONSTS.read().unwrap().as_ref() {
        if let Some(c) = map.get(&prec.bits) {
            return c.clone();
        }
    }
    let built = Arc::new(gamma::build_consts(prec));
    let mut guard = CONSTS.write().unwrap();
    let map = guard.get_or_insert_with(HashMap::new);
    map.entry(prec.bits).or_insert_with(|| built.clone()).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln2_matches_reference() {
        let p = Prec::new(128);
        let ln2 = p.ln2();
        let as64 = ln2.to_f64().value();
        assert!((as64 - std::f64::consts::LN_2).abs() < 1e-15);
    }

    #[test]
    fn half_ln_2pi_matches_reference() {
        let p = Prec::default();
        let v = p.half_ln_2pi().to_f64().value();
        let expect = 0.5 * (2.0 * std::f64::consts::PI).ln();
        assert!((v - expect).abs() < 1e-15, "got {v}, want {expect}");
    }

    #[test]
    fn consts_cache_is_per_precision() {
        let a = consts(Prec::new(96));
        let b = consts(Prec::new(96));
        assert!(Arc::ptr_eq(&a, &b));
    }
}
