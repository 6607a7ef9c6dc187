//! Log-gamma and log-factorial, in two flavours: a rigorous high-precision
//! route used by the moment formulas, and a fast `f64` route used inside
//! hot loops (threshold bisection, million-point window scans).
//!
//! The high-precision route follows the classic scheme: exact factorials for
//! tiny arguments, and for everything else Stirling's series
//!
//! ```text
//! ln Γ(x) = (x - 1/2) ln x - x + ln(2π)/2 + Σ_j B_{2j} / (2j (2j-1) x^{2j-1})
//! ```
//!
//! truncated when the next term drops below the target precision. The
//! remainder of the truncated series is bounded by the first omitted term
//! (alternating envelope for real positive x), so a result is accepted only
//! once that bound is small enough; arguments too small for the series to
//! converge at the requested precision are shifted up through an exact
//! integer product. Bernoulli numbers come from tangent numbers, which are
//! integers and therefore exact.

use dashu_int::{IBig, UBig};

use super::{consts, Prec, PrecConsts, F};

/// First `count` tangent numbers `T_1, T_2, ...` (1, 2, 16, 272, ...).
///
/// Knuth–Buckholtz in-place triangle; all-integer, so exact.
pub fn tangent_numbers(count: usize) -> Vec<UBig> {
    let mut t: Vec<UBig> = Vec::with_capacity(count + 1);
    t.push(UBig::ZERO); // 1-indexed
    if count == 0 {
        return t;
    }
    t.push(UBig::from(1u8));
    for k in 2..=count {
        let prev = t[k - 1].clone();
        t.push(prev * UBig::from((k - 1) as u64));
    }
    for k in 2..=count {
        for j in k..=count {
            let a = &t[j - 1] * UBig::from((j - k) as u64);
            let b = &t[j] * UBig::from((j - k + 2) as u64);
            t[j] = a + b;
        }
    }
    t
}

/// Stirling coefficients `B_{2j} / (2j (2j-1))` for `j = 1..=count`,
/// rounded to `prec`. Uses `B_{2j} = (-1)^{j-1} 2j T_j / (2^{2j} (2^{2j}-1))`.
fn stirling_coefficients(prec: Prec, count: usize) -> Vec<F> {
    let tans = tangent_numbers(count);
    let mut out = Vec::with_capacity(count);
    for j in 1..=count {
        let num = prec.from_ubig(&tans[j]);
        let pow = UBig::from(1u8) << (2 * j);
        let denom = UBig::from((2 * j - 1) as u64) * &pow * (pow.clone() - UBig::from(1u8));
        let mut c = num / prec.from_ubig(&denom);
        if j % 2 == 0 {
            c = -c;
        }
        out.push(c);
    }
    out
}

/// Smallest argument at which the truncated series reaches `bits` of
/// precision. Derived from the `e^{-2πx}` floor of the minimal term.
fn stirling_threshold(bits: usize) -> u64 {
    (0.18 * (bits as f64 + 16.0)).ceil() as u64 + 8
}

fn coefficient_count(bits: usize) -> usize {
    bits / 4 + 24
}

/// Approximate log2 of |x|, for termination checks.
fn log2_mag(x: &F) -> i64 {
    let r = x.repr();
    if r.significand().is_zero() {
        return i64::MIN;
    }
    r.exponent() as i64 + r.digits() as i64
}

pub(crate) fn build_consts(prec: Prec) -> PrecConsts {
    let ln2 = prec.from_u64(2).ln();
    let stirling = stirling_coefficients(prec, coefficient_count(prec.bits));

    // Recover ln(2π)/2 from the series anchored at an exact factorial:
    // ln((x0-1)!) = (x0 - 1/2) ln x0 - x0 + ln(2π)/2 + S(x0) + R,
    // with |R| below the working precision for x0 at the threshold.
    let x0 = stirling_threshold(prec.bits).max(64);
    let mut fact = UBig::from(1u8);
    for i in 2..x0 {
        fact *= UBig::from(i);
    }
    let ln_fact = prec.ln_ubig(&fact);
    let xf = prec.from_u64(x0);
    let series = stirling_tail(&xf, &stirling, prec);
    let half = prec.from_f64(0.5);
    let main = (&xf - half) * xf.ln() - &xf;
    let half_ln_2pi = ln_fact - main - series;

    PrecConsts {
        ln2,
        half_ln_2pi,
        stirling,
    }
}

/// Σ_j c_j x^{1-2j}, truncated once the next term is below 2^-(bits+16)
/// relative to 1. Panics if the table is exhausted before convergence,
/// which cannot happen for x at or above the threshold.
fn stirling_tail(x: &F, coeffs: &[F], prec: Prec) -> F {
    let inv_x = prec.one() / x;
    let inv_x2 = &inv_x * &inv_x;
    let mut w = inv_x;
    let mut acc = prec.zero();
    let target = -(prec.bits as i64) - 16;
    for c in coeffs {
        let term = c * &w;
        acc += &term;
        if log2_mag(&term) < target {
            return acc;
        }
        w *= &inv_x2;
    }
    panic!("Stirling series did not converge: argument below threshold");
}

/// ln Γ(x) for integer x at or above the series threshold.
fn ln_gamma_stirling(x: u64, prec: Prec) -> F {
    let c = consts(prec);
    let xf = prec.from_u64(x);
    let half = prec.from_f64(0.5);
    (&xf - half) * xf.ln() - &xf + &c.half_ln_2pi + stirling_tail(&xf, &c.stirling, prec)
}

/// ln(n!) at the requested precision.
///
/// Exact factorial for n below 10; Stirling above, shifting small arguments
/// up through an exact product so the series remainder stays rigorous.
pub fn ln_factorial(n: u64, prec: Prec) -> F {
    if n < 10 {
        let mut f = 1u64;
        for i in 2..=n {
            f *= i;
        }
        return prec.from_u64(f).ln();
    }
    let threshold = stirling_threshold(prec.bits);
    let x = n + 1; // ln n! = ln Γ(n+1)
    if x >= threshold {
        return ln_gamma_stirling(x, prec);
    }
    // ln Γ(x) = ln Γ(threshold) - ln(x (x+1) ... (threshold-1))
    let mut prod = UBig::from(x);
    for i in (x + 1)..threshold {
        prod *= UBig::from(i);
    }
    ln_gamma_stirling(threshold, prec) - prec.ln_ubig(&prod)
}

/// ln C(n, k) at the requested precision. Requires k ≤ n.
pub fn ln_binomial(n: u64, k: u64, prec: Prec) -> F {
    assert!(k <= n, "binomial with k > n");
    let k = k.min(n - k);
    if k == 0 {
        return prec.zero();
    }
    // Exact product when few factors are involved; otherwise factorials.
    if k <= 64 {
        let mut num = UBig::from(1u8);
        let mut den = UBig::from(1u8);
        for i in 0..k {
            num *= UBig::from(n - i);
            den *= UBig::from(i + 1);
        }
        return prec.ln_ubig(&num) - prec.ln_ubig(&den);
    }
    ln_factorial(n, prec) - ln_factorial(k, prec) - ln_factorial(n - k, prec)
}

// ---------------------------------------------------------------------------
// f64 fast path
// ---------------------------------------------------------------------------

/// Stirling coefficients B_{2j}/(2j(2j-1)) for j = 1..=8.
const STIRLING_F64: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

const HALF_LN_2PI_F64: f64 = 0.918938533204672741780329736406;

/// ln(n!) in f64: exact for n ≤ 20, Stirling with eight terms above
/// (absolute error well below 1e-13 across the supported range).
pub fn ln_factorial_f64(n: u64) -> f64 {
    const FACT: [u64; 21] = [
        1,
        1,
        2,
        6,
        24,
        120,
        720,
        5040,
        40320,
        362880,
        3628800,
        39916800,
        479001600,
        6227020800,
        87178291200,
        1307674368000,
        20922789888000,
        355687428096000,
        6402373705728000,
        121645100408832000,
        2432902008176640000,
    ];
    if n <= 20 {
        return (FACT[n as usize] as f64).ln();
    }
    let x = (n + 1) as f64;
    let mut tail = 0.0;
    let inv_x2 = 1.0 / (x * x);
    let mut w = 1.0 / x;
    for c in STIRLING_F64 {
        tail += c * w;
        w *= inv_x2;
    }
    (x - 0.5) * x.ln() - x + HALF_LN_2PI_F64 + tail
}

/// ln C(n, k) in f64. Requires k ≤ n.
pub fn ln_binomial_f64(n: u64, k: u64) -> f64 {
    debug_assert!(k <= n);
    ln_factorial_f64(n) - ln_factorial_f64(k) - ln_factorial_f64(n - k)
}

/// Exact binomial coefficient as a big integer. Requires k ≤ n.
pub fn binomial_exact(n: u64, k: u64) -> UBig {
    assert!(k <= n, "binomial with k > n");
    let k = k.min(n - k);
    let mut acc = UBig::from(1u8);
    for i in 0..k {
        acc *= UBig::from(n - i);
        acc /= UBig::from(i + 1);
    }
    acc
}

/// Exact factorial as a big integer.
pub fn factorial_exact(n: u64) -> UBig {
    let mut acc = UBig::from(1u8);
    for i in 2..=n {
        acc *= UBig::from(i);
    }
    acc
}

#[allow(dead_code)]
fn ibig_from_i64(x: i64) -> IBig {
    IBig::from(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tangent_numbers_match_known_values() {
        let t = tangent_numbers(6);
        let expect: [u64; 6] = [1, 2, 16, 272, 7936, 353792];
        for (j, e) in expect.iter().enumerate() {
            assert_eq!(t[j + 1], UBig::from(*e), "T_{}", j + 1);
        }
    }

    #[test]
    fn stirling_coefficients_match_bernoulli() {
        // B_2/2/1 = 1/12, B_4/(4*3) = -1/360, B_12/(12*11) = -691/(2730*132)
        let p = Prec::new(96);
        let cs = stirling_coefficients(p, 6);
        let approx: Vec<f64> = cs.iter().map(|c| c.to_f64().value()).collect();
        assert!((approx[0] - 1.0 / 12.0).abs() < 1e-15);
        assert!((approx[1] + 1.0 / 360.0).abs() < 1e-15);
        assert!((approx[5] + 691.0 / (2730.0 * 132.0)).abs() < 1e-15);
    }

    #[test]
    fn ln_factorial_agrees_with_exact_product() {
        let p = Prec::default();
        for n in [0u64, 1, 5, 9, 10, 11, 25, 80, 200, 1000] {
            let exact = p.ln_ubig(&factorial_exact(n.max(1)));
            let series = ln_factorial(n, p);
            let diff = (&exact - &series).to_f64().value().abs();
            let scale = exact.to_f64().value().abs().max(1.0);
            assert!(
                diff / scale < 1e-60,
                "ln {n}! mismatch: rel diff {}",
                diff / scale
            );
        }
    }

    #[test]
    fn ln_factorial_f64_tracks_high_precision() {
        let p = Prec::default();
        for n in [0u64, 3, 19, 20, 21, 37, 100, 12345, 5_000_000_000] {
            let fast = ln_factorial_f64(n);
            let slow = ln_factorial(n, p).to_f64().value();
            let rel = ((fast - slow) / slow.max(1.0)).abs();
            assert!(rel < 1e-13, "n={n}: fast {fast} slow {slow}");
        }
    }

    #[test]
    fn ln_binomial_small_cases() {
        let p = Prec::default();
        let v = ln_binomial(16, 4, p).to_f64().value();
        assert!((v - (1820f64).ln()).abs() < 1e-12);
        assert_eq!(binomial_exact(16, 4), UBig::from(1820u32));
        assert_eq!(binomial_exact(10, 0), UBig::from(1u8));
    }

    #[test]
    fn ln_binomial_huge_argument() {
        // C(5e9, 2.5e9): compare the leading behaviour N ln 2 via the
        // normal approximation ln C(N, N/2) ≈ N ln 2 - ln sqrt(π N / 2).
        let p = Prec::default();
        let n: u64 = 5_000_000_000;
        let v = ln_binomial(n, n / 2, p).to_f64().value();
        let approx = n as f64 * std::f64::consts::LN_2
            - 0.5 * (std::f64::consts::PI * n as f64 / 2.0).ln();
        assert!((v - approx).abs() < 1e-3, "v={v} approx={approx}");
    }
}
