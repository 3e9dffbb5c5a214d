//! Closed-form quantities: Hamming ball volumes, random-coding average
//! covering radii, puncture-count formulas, the coverage-fraction lower
//! bound, the CRS distortion upper bound and its SNR thresholds.
//!
//! Combinatorial sums run in big-integer (or big-rational) arithmetic and
//! are converted to f64 at the end; the random-coding formulas use log-domain
//! transforms so that codebook sizes up to p^(p-2) stay finite.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::code::weight_distribution;
use crate::error::{Error, Result};
use crate::numeric::{big_ratio_to_f64, binomial, is_prime, ln_gamma, ln_gamma_ratio};

/// Volume of a Hamming ball of radius tau in GF(q)^n; fractional radii are
/// floored and negative radii give an empty ball.
pub fn hamming_ball_volume(tau: f64, n: u64, q: u64) -> BigUint {
    if tau < 0.0 {
        return BigUint::zero();
    }
    let t = (tau.floor() as u64).min(n);
    let qm1 = BigUint::from(q - 1);
    let mut acc = BigUint::zero();
    let mut pow = BigUint::one();
    for i in 0..=t {
        acc += binomial(n, i) * &pow;
        pow *= &qm1;
    }
    acc
}

/// Expected average covering radius of a random q-ary code of M >= 2
/// codewords of length n under the uniform input distribution.
pub fn random_hamming_bound(q: u64, n: u64, m: f64) -> Result<f64> {
    if m < 2.0 {
        return Err(Error::Precondition(format!(
            "codebook size M must be >= 2 (the M(M-1) prefactor degenerates), got {m}"
        )));
    }
    if n == 0 || q < 2 {
        return Err(Error::InvalidParameter("need n >= 1 and q >= 2".into()));
    }
    let qn = BigUint::from(q).pow(n as u32);
    // V_j = Vol_q(j, n) / q^n and its log-complement ln(1 - V_j)
    let v: Vec<f64> = (0..=n)
        .map(|j| big_ratio_to_f64(&hamming_ball_volume(j as f64, n, q), &qn))
        .collect();
    let lc: Vec<f64> = v.iter().map(|&vj| (-vj).ln_1p()).collect();
    // A_{i,j} = ((1-V_j)^i - (1-V_{j-1})^i) / i, evaluated steadily
    let a = |i: f64, j: usize| -> f64 {
        let hi = (i * lc[j - 1]).exp();
        if hi == 0.0 {
            return 0.0; // both powers underflow; the term is < 1e-300
        }
        hi * (i * (lc[j] - lc[j - 1])).exp_m1() / i
    };
    let mut partial = v[0];
    let mut total = 0.0;
    for j in 1..=n as usize {
        let term = j as f64 * (a(m, j) - a(m - 1.0, j)) + a(m - 1.0, j) * partial;
        total += term;
        partial += v[j];
    }
    Ok(m * (m - 1.0) * total)
}

/// Codebook size for the chordal bound, given directly or as a natural log
/// for sizes far beyond f64 range.
#[derive(Clone, Copy, Debug)]
pub enum CodebookSize {
    Count(f64),
    LnCount(f64),
}

/// Natural-log threshold beyond which the Wendel asymptotic is used; below
/// it the gamma ratio is evaluated directly (the two branches agree to
/// ~1e-12 relative at the seam).
const LN_ASYMPTOTIC_SEAM: f64 = 34.5;

/// Expected average covering radius of a random code of M >= 2 lines in
/// G_{1,n}(C) under the chordal distance.
pub fn random_chordal_bound(n: u64, m: CodebookSize) -> Result<f64> {
    if n < 2 {
        return Err(Error::Precondition(format!("need n >= 2, got {n}")));
    }
    let delta = 1.0 / (2.0 * (n as f64 - 1.0)); // a_n - 2
    let ln_value = match m {
        CodebookSize::Count(mm) => {
            if mm < 2.0 {
                return Err(Error::Precondition(format!(
                    "codebook size M must be >= 2, got {mm}"
                )));
            }
            ln_gamma(1.0 + delta) + ln_gamma_ratio(mm + 1.0, delta)
        }
        CodebookSize::LnCount(lm) => {
            if lm < std::f64::consts::LN_2 {
                return Err(Error::Precondition(format!(
                    "ln M must be >= ln 2, got {lm}"
                )));
            }
            if lm <= LN_ASYMPTOTIC_SEAM {
                ln_gamma(1.0 + delta) + ln_gamma_ratio(lm.exp() + 1.0, delta)
            } else {
                // Wendel: M^(1-delta)/(M+delta) <= Gamma(M+1)/Gamma(M+1+delta)
                // <= M^(-delta); the bracket width is delta/M, far below f64
                // resolution at this size
                ln_gamma(1.0 + delta) - delta * lm
            }
        }
    };
    Ok(ln_value.exp())
}

/// Closed-form average puncture count for the unique-decoder covering model
/// (see `avg_punctures_unique_exact` for the rational form).
pub fn avg_punctures_unique(q: u64, n: u64, k: u64) -> Result<f64> {
    let exact = avg_punctures_unique_exact(q, n, k)?;
    Ok(big_rational_to_f64(&exact))
}

pub fn avg_punctures_unique_exact(q: u64, n: u64, k: u64) -> Result<BigRational> {
    if !(1 <= k && k < n && n <= q) {
        return Err(Error::Precondition(format!(
            "need 1 <= k < n <= q, got q={q}, n={n}, k={k}"
        )));
    }
    let d = n - k + 1;
    let mut sum = BigUint::zero();
    let mut qi = BigUint::one();
    for i in 0..=(d - 2) {
        let tau = (n - k - i) as f64 / 2.0;
        sum += &qi * hamming_ball_volume(tau, n - i, q);
        qi *= q;
    }
    let denom = BigUint::from(q).pow((d - 1) as u32);
    let numer = BigInt::from(&denom * (d - 1)) - BigInt::from(sum);
    Ok(BigRational::new(numer, BigInt::from(denom)))
}

/// Lower and upper bounds on the average puncture count of the list-decoder
/// covering model, given per-level radii tau_i and maximum list sizes L_i
/// for i = 0..d-2.
pub fn avg_punctures_list_bounds(
    q: u64,
    n: u64,
    k: u64,
    radii: &[f64],
    caps: &[u64],
) -> Result<(f64, f64)> {
    if !(1 <= k && k < n && n <= q) {
        return Err(Error::Precondition(format!(
            "need 1 <= k < n <= q, got q={q}, n={n}, k={k}"
        )));
    }
    let d = n - k + 1;
    let levels = (d - 1) as usize;
    if radii.len() != levels {
        return Err(Error::SequenceLengthMismatch(levels, radii.len()));
    }
    if caps.len() != levels {
        return Err(Error::SequenceLengthMismatch(levels, caps.len()));
    }
    if caps.iter().any(|&l| l == 0) {
        return Err(Error::InvalidParameter("list caps must be >= 1".into()));
    }
    let mut sum_lower = BigRational::zero();
    let mut sum_upper = BigRational::zero();
    let mut qi = BigUint::one();
    for i in 0..levels {
        let vol = BigInt::from(&qi * hamming_ball_volume(radii[i], n - i as u64, q));
        sum_lower += BigRational::from(vol.clone());
        sum_upper += BigRational::new(vol, BigInt::from(caps[i]));
        qi *= q;
    }
    let scale = BigRational::from(BigInt::from(BigUint::from(q).pow((d - 1) as u32)));
    let dm1 = BigRational::from(BigInt::from(d - 1));
    let lower = &dm1 - sum_lower / &scale;
    let upper = &dm1 - sum_upper / &scale;
    Ok((big_rational_to_f64(&lower), big_rational_to_f64(&upper)))
}

/// Number of words in the intersection of two radius-tau Hamming balls whose
/// centers are at distance w.
pub fn intersection_distribution(q: u64, n: u64, w: u64, tau: u64) -> BigUint {
    let mut total = BigUint::zero();
    let qm1 = BigInt::from(q - 1);
    let qm2 = BigInt::from(q as i64 - 2);
    for z in 0..=(n - w) {
        let lo = (n as i64 - tau as i64 - z as i64).max(0) as u64;
        let mut inner = BigInt::zero();
        for u in lo..=tau.min(w) {
            for v in lo..=tau.min(w.saturating_sub(u)) {
                inner += BigInt::from(binomial(w, u))
                    * BigInt::from(binomial(w - u, v))
                    * qm2.pow((w - u - v) as u32);
            }
        }
        total += (BigInt::from(binomial(n - w, z)) * qm1.pow((n - w - z) as u32) * inner)
            .to_biguint()
            .unwrap_or_default();
    }
    total
}

/// Coverage-fraction lower bound as an exact rational plus the value clamped
/// to [0, 1] (the raw bound can leave that interval for large radii).
#[derive(Debug, Clone)]
pub struct CoverageBound {
    pub raw: BigRational,
    pub value: f64,
    pub clamped: f64,
}

/// Inclusion-exclusion lower bound on the fraction of GF(q)^n covered by
/// radius-tau balls around the codewords of an [n, k] MDS code.
pub fn coverage_fraction_lower_bound(q: u64, n: u64, k: u64, tau: u64) -> Result<CoverageBound> {
    if !(1 <= k && k <= n && n <= q) {
        return Err(Error::Precondition(format!(
            "need 1 <= k <= n <= q, got q={q}, n={n}, k={k}"
        )));
    }
    if tau > n {
        return Err(Error::WeightOutOfRange {
            w: tau as usize,
            n: n as usize,
        });
    }
    let d = n - k + 1;
    let ball = BigInt::from(hamming_ball_volume(tau as f64, n, q));
    let mut pair_overlap = BigInt::zero();
    for w in d..=(2 * tau).min(n) {
        let aw = weight_distribution(n as usize, k as usize, q, w as usize)?;
        pair_overlap += BigInt::from(aw * intersection_distribution(q, n, w, tau));
    }
    let numer = BigRational::from(ball) - BigRational::new(pair_overlap, BigInt::from(2));
    let raw = numer / BigRational::from(BigInt::from(BigUint::from(q).pow((d - 1) as u32)));
    let value = big_rational_to_f64(&raw);
    Ok(CoverageBound {
        raw,
        value,
        clamped: value.clamp(0.0, 1.0),
    })
}

/// The radius in (d/2, d) maximizing the coverage-fraction lower bound,
/// compared in exact arithmetic; ties go to the smaller radius.
pub fn tau_max_search(q: u64, n: u64, k: u64) -> Result<u64> {
    let d = n - k + 1;
    let lo = d / 2 + 1;
    if lo > d - 1 {
        return Err(Error::Precondition(format!(
            "radius range (d/2, d) contains no integer for d = {d}"
        )));
    }
    let mut best: Option<(u64, BigRational)> = None;
    for tau in lo..=(d - 1) {
        let bound = coverage_fraction_lower_bound(q, n, k, tau)?.raw;
        let improves = best.as_ref().is_none_or(|(_, b)| bound > *b);
        if improves {
            best = Some((tau, bound));
        }
    }
    Ok(best.expect("range is nonempty").0)
}

/// sqrt(cos(2 pi / p)), the phase-coherence constant of the p-th roots of
/// unity.
pub fn char_cos_root(p: u64) -> f64 {
    (std::f64::consts::TAU / p as f64).cos().sqrt()
}

/// Upper bound on the average chordal covering radius of a rate-R CRS code
/// over GF(p): both min-arguments plus the rate-condition validity flag.
#[derive(Debug, Clone)]
pub struct CrsUpperBound {
    /// Term using amplitude statistics only.
    pub coarse: f64,
    /// Term adding the phase-coherence correction of the rounding map.
    pub refined: f64,
    pub min: f64,
    pub valid: bool,
    pub reason: Option<String>,
}

pub fn crs_upper_bound(p: u64, n: u64, k: u64, mu: f64, sigma: f64) -> Result<CrsUpperBound> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 3 {
        return Err(Error::Precondition(
            "need p >= 3 (p = 2 has cos(2 pi / p) < 0)".into(),
        ));
    }
    if mu <= 0.0 {
        return Err(Error::Precondition(format!(
            "amplitude mean mu must be > 0, got {mu}"
        )));
    }
    if k == 0 || k > n || n == 0 {
        return Err(Error::Precondition(format!(
            "need 1 <= k <= n, got n={n}, k={k}"
        )));
    }
    let c = char_cos_root(p);
    let r = k as f64 / n as f64;
    let mu2 = mu * mu;
    let s2 = sigma * sigma;
    let rate_threshold = 1.0 / (c + 1.0) + (1.0 - c) * s2 / (2.0 * (1.0 + c) * n as f64 * mu2);
    let (valid, reason) = if r >= rate_threshold {
        (true, None)
    } else {
        (
            false,
            Some(format!("rate-condition: R = {r:.6} < {rate_threshold:.6}")),
        )
    };
    let g = c * r + r - 1.0;
    let coarse = (1.0 - g * g * mu2 / (mu2 + s2)).sqrt();
    let refined =
        (1.0 - g / c * (g * g * mu2 + (c * c * r - r + 1.0) * s2 / n as f64) / (mu2 + s2)).sqrt();
    Ok(CrsUpperBound {
        coarse,
        refined,
        min: coarse.min(refined),
        valid,
        reason,
    })
}

/// Which SNR threshold of the random-coding comparison to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SnrMode {
    /// Finite-n threshold on mu^2 / (mu^2 + sigma^2).
    FiniteN,
    /// Large-n threshold on mu^2 / sigma^2 at fixed rate.
    Asymptotic,
    /// Limit of the asymptotic threshold as R -> 1: p - 1 + 2 pi^2.
    RateToOne,
}

/// SNR threshold above which the CRS upper bound dips below the
/// random-coding average covering radius.
pub fn crs_min_snr(p: u64, n: Option<u64>, rate: Option<f64>, mode: SnrMode) -> Result<f64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 3 {
        return Err(Error::Precondition("need p >= 3".into()));
    }
    let c = char_cos_root(p);
    match mode {
        SnrMode::RateToOne => Ok(p as f64 - 1.0 + 2.0 * std::f64::consts::PI.powi(2)),
        SnrMode::Asymptotic => {
            let r =
                rate.ok_or_else(|| Error::Precondition("asymptotic mode needs a rate".into()))?;
            let pr = (-r * (p as f64).ln()).exp(); // p^-R
            let floor = (1.0 + (1.0 - pr).sqrt()) / (c + 1.0);
            if r <= floor {
                return Err(Error::Precondition(format!(
                    "R > (1 + sqrt(1 - p^-R)) / (c + 1), i.e. {r} <= {floor:.6}"
                )));
            }
            let g = c * r + r - 1.0;
            Ok((1.0 - pr) / (g * g - (1.0 - pr)))
        }
        SnrMode::FiniteN => {
            let n = n.ok_or_else(|| Error::Precondition("finite-n mode needs n".into()))?;
            if n < 2 {
                return Err(Error::Precondition("finite-n mode needs n >= 2".into()));
            }
            let r = rate.ok_or_else(|| Error::Precondition("finite-n mode needs a rate".into()))?;
            let g = c * r + r - 1.0;
            if g <= 0.0 {
                return Err(Error::Precondition(format!(
                    "R > 1/(c+1), i.e. cR + R - 1 > 0, got {g}"
                )));
            }
            let nf = n as f64;
            let first = (1.0 - c) / (1.0 - c + 2.0 * nf * g);
            let lnp = (p as f64).ln();
            let half = 1.0 / (2.0 * (nf - 1.0));
            let gamma_sq = (2.0 * ln_gamma(1.0 + half)).exp();
            // 1 / (2 (n-1) p^(nR)) evaluated in logs; underflows to 0 for
            // large codes, which is the intended limit
            let tiny = (-(nf * r * lnp) - (2.0 * (nf - 1.0)).ln()).exp();
            let second = (1.0
                - (-r * (1.0 + 1.0 / (nf - 1.0)) * lnp).exp() * gamma_sq / (1.0 + tiny).powi(2))
                / (g * g);
            Ok(first.max(second))
        }
    }
}

fn big_rational_to_f64(x: &BigRational) -> f64 {
    let sign = if x.is_negative() { -1.0 } else { 1.0 };
    sign * big_ratio_to_f64(
        &x.numer().abs().to_biguint().expect("abs is nonnegative"),
        &x.denom().abs().to_biguint().expect("abs is nonnegative"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn ball_volumes() {
        assert_eq!(hamming_ball_volume(1.0, 3, 2), BigUint::from(4u32));
        assert_eq!(hamming_ball_volume(6.0, 6, 7), BigUint::from(7u64.pow(6)));
        assert_eq!(hamming_ball_volume(2.0, 6, 7), BigUint::from(577u32));
        assert_eq!(hamming_ball_volume(0.5, 5, 7), BigUint::one());
        assert_eq!(hamming_ball_volume(-0.5, 5, 7), BigUint::zero());
    }

    #[test]
    fn random_hamming_fig1_series() {
        let want = [3.90549325, 2.89474223, 2.08001020, 1.44971291, 0.871936580];
        for (k, w) in want.iter().enumerate() {
            let m = 7f64.powi(k as i32 + 1);
            assert_abs_diff_eq!(random_hamming_bound(7, 6, m).unwrap(), w, epsilon = 1e-6);
        }
        assert!(random_hamming_bound(7, 6, 1.0).is_err());
    }

    #[test]
    fn random_hamming_monotone_in_codebook_size() {
        // M = 2 is the largest value and stays below E[d(X, Y)] = n (1 - 1/q)
        let top = random_hamming_bound(7, 6, 2.0).unwrap();
        assert!(top > 0.0 && top <= 6.0 * (6.0 / 7.0) * 1.01);
        let mut prev = top;
        for k in 1..=5 {
            let v = random_hamming_bound(7, 6, 7f64.powi(k)).unwrap();
            assert!(v < prev, "more codewords must not increase the radius");
            assert!(v > 0.0 && v < 6.0);
            prev = v;
        }
        // keeps shrinking toward zero past M = q^n
        assert!(random_hamming_bound(7, 6, 7f64.powi(6)).unwrap() < 0.5);
        assert!(random_hamming_bound(7, 6, 7f64.powi(8)).unwrap() < 1e-20);
    }

    #[test]
    fn random_chordal_fig5_series() {
        let want = [
            0.777167527593263,
            0.643925432693930,
            0.530568745885669,
            0.436808931976995,
            0.359575615705036,
        ];
        for (k, w) in want.iter().enumerate() {
            let m = 7f64.powi(k as i32 + 1);
            let got = random_chordal_bound(6, CodebookSize::Count(m)).unwrap();
            assert_abs_diff_eq!(got, w, epsilon = 1e-9);
            assert!(got > 0.0 && got <= 1.0);
        }
        assert!(random_chordal_bound(6, CodebookSize::Count(1.0)).is_err());
        assert!(random_chordal_bound(1, CodebookSize::Count(8.0)).is_err());
    }

    #[test]
    fn random_chordal_branches_agree() {
        // direct gamma-ratio path vs asymptotic path at M = 1e8
        let direct = random_chordal_bound(6, CodebookSize::Count(1e8)).unwrap();
        let asym = (ln_gamma(1.1) - 0.1 * (1e8f64).ln()).exp();
        assert_relative_eq!(direct, asym, max_relative = 1e-6);
        // log input just below and above the seam
        let lo = random_chordal_bound(6, CodebookSize::LnCount(34.0)).unwrap();
        let hi = (ln_gamma(1.1) - 0.1 * 34.0).exp();
        assert_relative_eq!(lo, hi, max_relative = 1e-9);
    }

    #[test]
    fn wendel_sandwich_on_gamma_ratio() {
        for &m in &[2.0f64, 7.0, 100.0, 16807.0, 1e6, 1e12] {
            for &delta in &[0.1f64, 0.25, 0.5] {
                let ratio = ln_gamma_ratio(m + 1.0, delta).exp();
                let upper = m.powf(-delta);
                let lower = upper * m / (m + delta);
                assert!(ratio <= upper * (1.0 + 1e-12), "m={m} delta={delta}");
                assert!(ratio >= lower * (1.0 - 1e-12), "m={m} delta={delta}");
            }
        }
    }

    #[test]
    fn punctures_unique_values() {
        // single-term case k = n - 1 gives 1 - 1/q
        assert_relative_eq!(
            avg_punctures_unique(7, 6, 5).unwrap(),
            6.0 / 7.0,
            epsilon = 1e-15
        );
        for q in [5u64, 11, 17] {
            assert_relative_eq!(
                avg_punctures_unique(q, q - 1, q - 2).unwrap(),
                1.0 - 1.0 / q as f64,
                epsilon = 1e-14
            );
        }
        let exact = avg_punctures_unique_exact(5, 4, 2).unwrap();
        assert_eq!(exact, BigRational::new(BigInt::from(28), BigInt::from(25)));
        assert!(avg_punctures_unique(7, 6, 6).is_err());
    }

    #[test]
    fn punctures_unique_closed_form_range() {
        // The closed form always sits in (0, d-1] and saturates the
        // (d-1)(1 - 1/q) floor exactly at k = n-1. The floor does NOT hold
        // for k < n-1 (e.g. 4.199 < 5 * 6/7 at (7,6,1)); the acceptance suite
        // exercises that claim as stated and reports it.
        for q in [7u64, 11, 17] {
            for n in 2..=q {
                for k in 1..n {
                    let v = avg_punctures_unique(q, n, k).unwrap();
                    let d1 = (n - k) as f64;
                    assert!(v > 0.0 && v <= d1 + 1e-9, "q={q} n={n} k={k} v={v}");
                    if k == n - 1 {
                        assert_relative_eq!(v, 1.0 - 1.0 / q as f64, epsilon = 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn punctures_list_reductions() {
        // L_i = 1 collapses both bounds onto the unique-decoder formula
        let radii: Vec<f64> = (0..4).map(|i| ((6 - 2) as f64 - i as f64) / 2.0).collect();
        let caps = vec![1u64; 4];
        let (lo, hi) = avg_punctures_list_bounds(7, 6, 2, &radii, &caps).unwrap();
        let uniq = avg_punctures_unique(7, 6, 2).unwrap();
        assert_relative_eq!(lo, uniq, epsilon = 1e-12);
        assert_relative_eq!(hi, uniq, epsilon = 1e-12);

        // tau_i = 0, L_i = 1: geometric series d-1 - (q^(d-1) - 1)/((q-1) q^(d-1))
        let zeros = vec![0.0; 4];
        let (lo, hi) = avg_punctures_list_bounds(7, 6, 2, &zeros, &caps).unwrap();
        let d1 = 4.0;
        let want = d1 - (7f64.powi(4) - 1.0) / (6.0 * 7f64.powi(4));
        assert_relative_eq!(lo, want, epsilon = 1e-12);
        assert_relative_eq!(hi, want, epsilon = 1e-12);

        // GS radii with L_i = n - i: ordered pair
        let radii: Vec<f64> = (0..4)
            .map(|i| crate::decoder::tau_gs(6 - i, 2) as f64)
            .collect();
        let caps: Vec<u64> = (0..4).map(|i| (6 - i) as u64).collect();
        let (lo, hi) = avg_punctures_list_bounds(7, 6, 2, &radii, &caps).unwrap();
        assert!(lo <= hi);
        assert!(lo.is_finite() && hi.is_finite());

        assert!(avg_punctures_list_bounds(7, 6, 2, &radii[..3], &caps).is_err());
    }

    #[test]
    fn coverage_bound_small_cases() {
        // tau = 0: exactly q^(k-n)
        let b = coverage_fraction_lower_bound(5, 4, 2, 0).unwrap();
        assert_eq!(b.raw, BigRational::new(BigInt::from(1), BigInt::from(25)));
        // tau = 1 on [4,2]_5 equals the true coverage 17/25 (balls disjoint)
        let b = coverage_fraction_lower_bound(5, 4, 2, 1).unwrap();
        assert_eq!(b.raw, BigRational::new(BigInt::from(17), BigInt::from(25)));
        // large tau goes negative and clamps to zero
        let b = coverage_fraction_lower_bound(5, 4, 2, 3).unwrap();
        assert!(b.value < 0.0);
        assert_eq!(b.clamped, 0.0);
    }

    #[test]
    fn coverage_bound_below_truth_on_small_spaces() {
        // exact union sizes by enumeration for spaces up to ~1e5 points
        for (q, n, k) in [(3u64, 2u64, 1u64), (5, 4, 2), (7, 5, 2)] {
            let field = crate::gf::Field::new(q, 1).unwrap();
            let code =
                crate::code::GrsCode::canonical(field.clone(), n as usize, k as usize).unwrap();
            let cws: Vec<Vec<crate::gf::FieldElem>> = (0..code.size())
                .map(|i| {
                    code.encode(&crate::poly::Poly::from_message_index(
                        &field, i, k as usize,
                    ))
                    .unwrap()
                })
                .collect();
            let qn = q.pow(n as u32);
            for tau in 0..=n {
                let covered = (0..qn)
                    .filter(|&raw| {
                        let y: Vec<crate::gf::FieldElem> = (0..n)
                            .map(|i| crate::gf::FieldElem(raw / q.pow(i as u32) % q))
                            .collect();
                        cws.iter()
                            .any(|c| crate::code::hamming_distance(c, &y) <= tau as usize)
                    })
                    .count();
                let exact = BigRational::new(BigInt::from(covered), BigInt::from(qn));
                let bound = coverage_fraction_lower_bound(q, n, k, tau).unwrap().raw;
                assert!(bound <= exact, "(q,n,k)=({q},{n},{k}) tau={tau}");
            }
        }
    }

    #[test]
    fn tau_max_cases() {
        assert_eq!(tau_max_search(17, 14, 2).unwrap(), 10);
        assert_eq!(crate::decoder::tau_gs(14, 2), 10);
        // d = 3 leaves the single radius 2
        assert_eq!(tau_max_search(5, 4, 2).unwrap(), 2);
        // d = 2: empty range
        assert!(tau_max_search(7, 6, 5).is_err());
    }

    #[test]
    fn tau_max_is_an_argmax() {
        let q = 17;
        let (n, k) = (14, 2);
        let best = tau_max_search(q, n, k).unwrap();
        let at = |t| coverage_fraction_lower_bound(q, n, k, t).unwrap().raw;
        for t in 7..=12u64 {
            assert!(at(best) >= at(t), "tau_max must dominate tau={t}");
        }
    }

    #[test]
    fn crs_upper_bound_cases() {
        // rate condition violated at R = 1/6
        let b = crs_upper_bound(7, 6, 1, 1.0, 0.523).unwrap();
        assert!(!b.valid);
        assert!(b.reason.as_deref().unwrap_or("").contains("rate-condition"));

        // R = 1, sigma = 0 collapses the amplitude-only term to sqrt(1 - cos(2 pi/7))
        let b = crs_upper_bound(7, 6, 6, 1.0, 0.0).unwrap();
        let c2 = (std::f64::consts::TAU / 7.0).cos();
        assert_relative_eq!(b.coarse, (1.0 - c2).sqrt(), epsilon = 1e-12);
        assert!(b.valid);

        // Rayleigh-mean-1 amplitudes at k in {4, 5}: finite, valid, in (0,1)
        let s = (4.0 / std::f64::consts::PI - 1.0).sqrt();
        for k in [4u64, 5] {
            let b = crs_upper_bound(7, 6, k, 1.0, s).unwrap();
            assert!(b.valid, "k={k}");
            assert!(b.min > 0.0 && b.min < 1.0);
            assert!(b.coarse > 0.0 && b.refined > 0.0);
        }

        assert!(crs_upper_bound(7, 6, 3, 0.0, 1.0).is_err());
        assert!(crs_upper_bound(9, 6, 3, 1.0, 1.0).is_err());
    }

    #[test]
    fn snr_thresholds() {
        let rate1 = crs_min_snr(7, None, None, SnrMode::RateToOne).unwrap();
        assert_abs_diff_eq!(
            rate1,
            6.0 + 2.0 * std::f64::consts::PI.powi(2),
            epsilon = 1e-9
        );

        // strictly increasing in p
        let mut prev = 0.0;
        for p in [3u64, 7, 11, 31, 101] {
            let v = crs_min_snr(p, None, None, SnrMode::RateToOne).unwrap();
            assert!(v > prev);
            prev = v;
        }

        // asymptotic mode approaches the rate-to-1 value as p grows and R -> 1;
        // the gap is Theta(1/p) in p and Theta(p (1-R)) in the rate, so both
        // must be pushed (the valid window is 1 - R < ~1/(4p))
        let p = 1_000_003u64;
        let a = crs_min_snr(p, None, Some(1.0 - 1e-11), SnrMode::Asymptotic).unwrap();
        let r1 = crs_min_snr(p, None, None, SnrMode::RateToOne).unwrap();
        assert!((a - r1).abs() / r1 < 1e-3, "a={a} r1={r1}");

        // precondition failures are named
        assert!(crs_min_snr(7, None, Some(0.3), SnrMode::Asymptotic).is_err());
        assert!(crs_min_snr(7, Some(6), Some(0.3), SnrMode::FiniteN).is_err());

        // finite-n threshold is a sane probability-like quantity
        let t = crs_min_snr(7, Some(6), Some(5.0 / 6.0), SnrMode::FiniteN).unwrap();
        assert!(t > 0.0 && t.is_finite());
    }

    #[test]
    fn fig6_property_ratio_bounded() {
        let mut prev_upper = f64::INFINITY;
        let mut prev_random = f64::INFINITY;
        for p in [31u64, 101, 1009] {
            let n = p - 1;
            let k = n - 1;
            let upper = crs_upper_bound(p, n, k, n as f64, 1.0).unwrap();
            assert!(upper.valid);
            let lnm = k as f64 * (p as f64).ln();
            let random = random_chordal_bound(n, CodebookSize::LnCount(lnm)).unwrap();
            assert!(upper.min.is_finite() && random.is_finite());
            assert!(
                upper.min < prev_upper && random < prev_random,
                "decreasing in p"
            );
            let ratio = upper.min / random;
            assert!(ratio >= 1.0 && ratio <= 10.0, "p={p} ratio={ratio}");
            prev_upper = upper.min;
            prev_random = random;
        }
    }
}
