//! [`LogReal`]: a signed real held as sign plus high-precision natural log
//! of the magnitude. This is the carrier for every expectation in the
//! toolkit — quantities routinely reach `exp(±n log n)`, far beyond any
//! fixed-width float.

use std::cmp::Ordering;
use std::fmt;

use dashu_int::UBig;

use super::{Prec, F};

/// Sign + ln|x| representation of a real number.
///
/// `sign == 0` is the canonical zero; its stored log is ignored. Products
/// and quotients act on the logs directly; sums go through a stable
/// log-sum-exp at the full working precision.
#[derive(Clone, Debug)]
pub struct LogReal {
    sign: i8,
    ln_mag: F,
    prec: Prec,
}

impl LogReal {
    pub fn zero(prec: Prec) -> Self {
        LogReal {
            sign: 0,
            ln_mag: prec.zero(),
            prec,
        }
    }

    pub fn one(prec: Prec) -> Self {
        LogReal {
            sign: 1,
            ln_mag: prec.zero(),
            prec,
        }
    }

    /// Builds from an explicit sign and natural log of magnitude.
    pub fn from_sign_ln(sign: i8, ln_mag: F, prec: Prec) -> Self {
        assert!(sign == -1 || sign == 0 || sign == 1);
        if sign == 0 {
            return Self::zero(prec);
        }
        LogReal { sign, ln_mag, prec }
    }

    pub fn from_ln(ln_mag: F, prec: Prec) -> Self {
        Self::from_sign_ln(1, ln_mag, prec)
    }

    pub fn from_ln_f64(ln_mag: f64, prec: Prec) -> Self {
        Self::from_ln(prec.from_f64(ln_mag), prec)
    }

    pub fn from_f64(x: f64, prec: Prec) -> Self {
        assert!(x.is_finite(), "LogReal::from_f64 needs a finite value");
        if x == 0.0 {
            return Self::zero(prec);
        }
        let sign = if x > 0.0 { 1 } else { -1 };
        LogReal {
            sign,
            ln_mag: prec.from_f64(x.abs()).ln(),
            prec,
        }
    }

    pub fn from_u64(x: u64, prec: Prec) -> Self {
        if x == 0 {
            return Self::zero(prec);
        }
        LogReal {
            sign: 1,
            ln_mag: prec.from_u64(x).ln(),
            prec,
        }
    }

    /// Exact positive integer.
    pub fn from_ubig(x: &UBig, prec: Prec) -> Self {
        if x.is_zero() {
            return Self::zero(prec);
        }
        LogReal {
            sign: 1,
            ln_mag: prec.ln_ubig(x),
            prec,
        }
    }

    /// Exact ratio of positive integers.
    pub fn from_ratio(num: &UBig, den: &UBig, prec: Prec) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero(prec);
        }
        LogReal {
            sign: 1,
            ln_mag: prec.ln_ubig(num) - prec.ln_ubig(den),
            prec,
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn is_positive(&self) -> bool {
        self.sign > 0
    }

    pub fn prec(&self) -> Prec {
        self.prec
    }

    /// Natural log of the magnitude; `None` for zero.
    pub fn ln_mag(&self) -> Option<&F> {
        (self.sign != 0).then_some(&self.ln_mag)
    }

    /// Natural log of the magnitude as f64 (−∞ for zero).
    pub fn ln_f64(&self) -> f64 {
        if self.sign == 0 {
            f64::NEG_INFINITY
        } else {
            self.ln_mag.to_f64().value()
        }
    }

    /// log10 of the magnitude as f64 (−∞ for zero).
    pub fn log10_f64(&self) -> f64 {
        self.ln_f64() / std::f64::consts::LN_10
    }

    /// The value itself as f64; overflows to ±∞, underflows to ±0.
    pub fn to_f64(&self) -> f64 {
        if self.sign == 0 {
            return 0.0;
        }
        let l = self.ln_f64();
        let m = l.exp();
        if self.sign > 0 {
            m
        } else {
            -m
        }
    }

    pub fn neg(&self) -> Self {
        LogReal {
            sign: -self.sign,
            ln_mag: self.ln_mag.clone(),
            prec: self.prec,
        }
    }

    pub fn abs(&self) -> Self {
        LogReal {
            sign: self.sign.abs(),
            ln_mag: self.ln_mag.clone(),
            prec: self.prec,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.sign == 0 || other.sign == 0 {
            return Self::zero(self.prec);
        }
        LogReal {
            sign: self.sign * other.sign,
            ln_mag: &self.ln_mag + &other.ln_mag,
            prec: self.prec,
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        assert!(other.sign != 0, "LogReal division by zero");
        if self.sign == 0 {
            return Self::zero(self.prec);
        }
        LogReal {
            sign: self.sign * other.sign,
            ln_mag: &self.ln_mag - &other.ln_mag,
            prec: self.prec,
        }
    }

    /// Integer power (including 0 and negatives; zero^negative panics).
    pub fn powi(&self, e: i64) -> Self {
        if e == 0 {
            return Self::one(self.prec);
        }
        if self.sign == 0 {
            assert!(e > 0, "zero to a negative power");
            return Self::zero(self.prec);
        }
        let sign = if self.sign < 0 && e % 2 != 0 { -1 } else { 1 };
        LogReal {
            sign,
            ln_mag: &self.ln_mag * self.prec.from_i64(e),
            prec: self.prec,
        }
    }

    /// Multiplies by 2^e, exactly in log space.
    pub fn mul_pow2(&self, e: i64) -> Self {
        if self.sign == 0 {
            return self.clone();
        }
        LogReal {
            sign: self.sign,
            ln_mag: &self.ln_mag + self.prec.ln2() * self.prec.from_i64(e),
            prec: self.prec,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.sign == 0 {
            return other.clone();
        }
        if other.sign == 0 {
            return self.clone();
        }
        let prec = self.prec;
        let (hi, lo) = if self.ln_mag >= other.ln_mag {
            (self, other)
        } else {
            (other, self)
        };
        let d = &lo.ln_mag - &hi.ln_mag; // ≤ 0
        if hi.sign == lo.sign {
            // ln(|hi| + |lo|) = ln|hi| + ln(1 + e^d)
            let ln_mag = if exp_is_negligible(&d, prec) {
                hi.ln_mag.clone()
            } else {
                &hi.ln_mag + d.exp().ln_1p()
            };
            LogReal {
                sign: hi.sign,
                ln_mag,
                prec,
            }
        } else {
            // ln(|hi| - |lo|) = ln|hi| + ln(1 - e^d); cancels to zero when equal.
            if d.repr().significand().is_zero() {
                return Self::zero(prec);
            }
            if exp_is_negligible(&d, prec) {
                return LogReal {
                    sign: hi.sign,
                    ln_mag: hi.ln_mag.clone(),
                    prec,
                };
            }
            let one_minus = prec.one() - d.exp();
            LogReal {
                sign: hi.sign,
                ln_mag: &hi.ln_mag + one_minus.ln(),
                prec,
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Sum of a slice via repeated stable log-sum-exp.
    pub fn sum(values: &[LogReal], prec: Prec) -> Self {
        let mut acc = Self::zero(prec);
        for v in values {
            acc = acc.add(v);
        }
        acc
    }

    /// Scientific-notation rendering with the given number of mantissa digits.
    pub fn to_sci_string(&self, digits: usize) -> String {
        if self.sign == 0 {
            return "0".to_string();
        }
        let log10 = self.log10_f64();
        let e = log10.floor();
        let mantissa = 10f64.powf(log10 - e);
        let s = if self.sign < 0 { "-" } else { "" };
        format!("{s}{mantissa:.*}e{e}", digits)
    }
}

/// True when `e^d` (d ≤ 0) is below one ulp at this precision, so adding it
/// to 1 cannot change the rounded result.
fn exp_is_negligible(d: &F, prec: Prec) -> bool {
    let d64 = d.to_f64().value();
    d64 < -((prec.bits as f64 + 16.0) * std::f64::consts::LN_2)
}

impl PartialEq for LogReal {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for LogReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self.sign, other.sign) {
            (0, 0) => Some(Ordering::Equal),
            (a, b) if a < b => Some(Ordering::Less),
            (a, b) if a > b => Some(Ordering::Greater),
            (1, 1) => self.ln_mag.partial_cmp(&other.ln_mag),
            (-1, -1) => other.ln_mag.partial_cmp(&self.ln_mag),
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for LogReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sci_string(6))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Prec {
        Prec::default()
    }

    #[test]
    fn mul_div_roundtrip_to_forty_digits() {
        let a = LogReal::from_f64(3.7251, p());
        let b = LogReal::from_f64(1.0e-5, p());
        let back = a.mul(&b).div(&b);
        let diff = (back.ln_f64() - a.ln_f64()).abs();
        assert!(diff < 1e-60);
        // The strict check: ln-space difference at high precision.
        let exact = back.ln_mag().unwrap() - a.ln_mag().unwrap();
        let mag = exact.to_f64().value().abs();
        assert!(mag < 1e-40, "round trip drift {mag}");
    }

    #[test]
    fn lse_is_permutation_invariant() {
        let vals: Vec<LogReal> = [1.5e10, 2.25, -3.0e-7, 9.0e4, -1.25e10, 0.125]
            .iter()
            .map(|&x| LogReal::from_f64(x, p()))
            .collect();
        let forward = LogReal::sum(&vals, p());
        let mut rev = vals.clone();
        rev.reverse();
        let backward = LogReal::sum(&rev, p());
        assert_eq!(forward.sign(), backward.sign());
        let d = (forward.ln_mag().unwrap() - backward.ln_mag().unwrap())
            .to_f64()
            .value()
            .abs();
        assert!(d < 1e-40, "permutation drift {d}");
        // And the sum is what plain f64 arithmetic says it should be.
        let expect: f64 = 1.5e10 + 2.25 - 3.0e-7 + 9.0e4 - 1.25e10 + 0.125;
        assert!((forward.to_f64() - expect).abs() / expect.abs() < 1e-12);
    }

    #[test]
    fn exact_cancellation_gives_zero() {
        let a = LogReal::from_u64(42, p());
        let z = a.sub(&a);
        assert!(z.is_zero());
        assert_eq!(z.to_f64(), 0.0);
    }

    #[test]
    fn add_handles_huge_magnitude_gaps() {
        let big = LogReal::from_ln_f64(1.0e9, p());
        let small = LogReal::from_ln_f64(-1.0e9, p());
        let s = big.add(&small);
        assert_eq!(s.ln_f64(), 1.0e9);
    }

    #[test]
    fn ordering_respects_sign_and_magnitude() {
        let a = LogReal::from_f64(-5.0, p());
        let b = LogReal::from_f64(-2.0, p());
        let c = LogReal::from_f64(3.0, p());
        let z = LogReal::zero(p());
        assert!(a < b && b < z && z < c);
    }

    #[test]
    fn powi_signs() {
        let a = LogReal::from_f64(-2.0, p());
        assert!(a.powi(2).is_positive());
        assert!(a.powi(3).sign() < 0);
        assert!((a.powi(3).to_f64() + 8.0).abs() < 1e-12);
        assert!((a.powi(-2).to_f64() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn sci_string_rendering() {
        let a = LogReal::from_f64(-12345.678, p());
        let s = a.to_sci_string(3);
        assert_eq!(s, "-1.235e4");
        assert_eq!(LogReal::zero(p()).to_sci_string(3), "0");
    }

    #[test]
    fn from_ratio_matches_division() {
        let n = UBig::from(1820u32);
        let d = UBig::from(64u32);
        let r = LogReal::from_ratio(&n, &d, p());
        assert!((r.to_f64() - 28.4375).abs() < 1e-12);
    }
}
