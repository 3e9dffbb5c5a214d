//! Shared numeric helpers: primality, integer roots, big binomials and a
//! Stirling-series log-gamma with an exact-cancellation ratio variant.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Trial-division primality test; adequate for the word-sized inputs used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Floor of the integer square root.
pub fn isqrt(n: u128) -> u128 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u128;
    // f64 seed can be off by one in either direction
    while x.saturating_mul(x) > n {
        x -= 1;
    }
    while (x + 1).saturating_mul(x + 1) <= n {
        x += 1;
    }
    x
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Convert a ratio of big naturals to f64, shifting both down when they are
/// too wide for direct conversion.
pub fn big_ratio_to_f64(num: &BigUint, den: &BigUint) -> f64 {
    if den.is_zero() {
        return f64::INFINITY;
    }
    if num.is_zero() {
        return 0.0;
    }
    let bits = num.bits().max(den.bits());
    if bits <= 900 {
        return num.to_f64().unwrap_or(f64::INFINITY) / den.to_f64().unwrap_or(f64::INFINITY);
    }
    // keep ~900 bits of each; the ratio is preserved to f64 precision unless
    // it itself over/underflows, in which case the shifted division saturates
    let shift = bits - 900;
    let n2 = num >> shift;
    let d2 = den >> shift;
    n2.to_f64().unwrap_or(f64::INFINITY) / d2.to_f64().unwrap_or(f64::INFINITY)
}

// Stirling correction series: ln Gamma(z) = (z - 1/2) ln z - z + ln(2 pi)/2 + S(z).
// Coefficients B_{2n} / (2n (2n - 1)).
const STIRLING: [f64; 8] = [
    8.333333333333333e-2,
    -2.777777777777778e-3,
    7.936507936507937e-4,
    -5.952380952380953e-4,
    8.417508417508417e-4,
    -1.917526917526918e-3,
    6.410256410256410e-3,
    -2.955065359477124e-2,
];

fn stirling_tail(z: f64) -> f64 {
    let z2 = z * z;
    let mut acc = 0.0;
    let mut zp = z;
    for c in STIRLING {
        acc += c / zp;
        zp *= z2;
    }
    acc
}

const HALF_LN_2PI: f64 = 0.918938533204672742;

/// Natural log of the gamma function for x > 0, accurate to a few ulp for
/// x >= 1 (arguments below 10 are lifted by the recurrence).
pub fn ln_gamma(mut x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma requires a positive argument");
    let mut shift = 0.0;
    while x < 10.0 {
        shift -= x.ln();
        x += 1.0;
    }
    (x - 0.5) * x.ln() - x + HALF_LN_2PI + stirling_tail(x) + shift
}

/// ln( Gamma(z) / Gamma(z + delta) ) for z >= 1 and 0 <= delta <= 1, computed
/// without the catastrophic cancellation of subtracting two large ln Gamma
/// values (the leading Stirling terms are combined analytically).
pub fn ln_gamma_ratio(mut z: f64, delta: f64) -> f64 {
    assert!(z >= 1.0 && (0.0..=1.0).contains(&delta));
    let mut acc = 0.0;
    while z < 10.0 {
        // Gamma(z)/Gamma(z+d) = (z+d)/z * Gamma(z+1)/Gamma(z+1+d)
        acc += ((z + delta) / z).ln();
        z += 1.0;
    }
    acc + delta - delta * z.ln() - (z + delta - 0.5) * (delta / z).ln_1p() + stirling_tail(z)
        - stirling_tail(z + delta)
}
