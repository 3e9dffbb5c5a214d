//! C ABI over the covering algorithms and bounds: opaque code handles,
//! status codes, out-pointer results. Every entry point is panic-safe and
//! null-tolerant. The generated header lands in `include/rscover.h`.

#![warn(unsafe_op_in_unsafe_fn)]

use std::ffi::{c_char, c_int};
use std::panic::{catch_unwind, AssertUnwindSafe};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rscover::bounds::{
    avg_punctures_unique, coverage_fraction_lower_bound, crs_min_snr, crs_upper_bound,
    random_chordal_bound, random_hamming_bound, tau_max_search, CodebookSize, SnrMode,
};
use rscover::cover::{chordal_distance, crs_cover, grs_cover, CoverConfig, DecodeMode};
use rscover::decoder::BwMode;
use rscover::gf::{Field, FieldElem};
use rscover::numeric::is_prime;
use rscover::poly::Poly;
use rscover::{CrsCode, GrsCode};

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RscStatus {
    Ok = 0,
    /// Null pointer, bad enum value or malformed buffer length.
    InvalidArgument = 1,
    /// A precondition of the underlying operation was violated.
    DomainError = 2,
    /// Unexpected internal failure.
    Internal = 3,
}

/// Opaque handle to an [n, k] generalized Reed-Solomon code.
pub struct RscGrsCode {
    inner: GrsCode,
}

/// Opaque handle to a character-Reed-Solomon subspace code.
pub struct RscCrsCode {
    inner: CrsCode,
}

/// Decoder selector for the covering calls.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RscDecodeMode {
    Unique = 0,
    List = 1,
}

impl From<RscDecodeMode> for DecodeMode {
    fn from(m: RscDecodeMode) -> DecodeMode {
        match m {
            RscDecodeMode::Unique => DecodeMode::Unique,
            RscDecodeMode::List => DecodeMode::List,
        }
    }
}

fn guarded<F: FnOnce() -> RscStatus>(f: F) -> RscStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => RscStatus::Internal,
    }
}

fn field_for(q: u64) -> Option<Field> {
    let mut p = q;
    let mut d = 2u64;
    while d * d <= q {
        if q % d == 0 {
            p = d;
            break;
        }
        d += 1;
    }
    if !is_prime(p) {
        return None;
    }
    let mut m = 0u32;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    if rest != 1 {
        return None;
    }
    Field::new(p, m).ok()
}

/// Library version as a static C string.
#[no_mangle]
pub extern "C" fn rsc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Maximum Guruswami-Sudan list-decoding radius, or -1 for invalid (n, k).
#[no_mangle]
pub extern "C" fn rsc_tau_gs(n: u64, k: u64) -> i64 {
    if k == 0 || k > n || n > (1 << 31) {
        return -1;
    }
    rscover::decoder::tau_gs(n as usize, k as usize) as i64
}

/// Create the canonical [n, k] code over GF(q): evaluation points 1..=n,
/// unit multipliers. `out` receives an owned handle.
#[no_mangle]
///
/// # Safety
///
/// Pointer arguments must be valid for the documented lengths;
/// null is allowed only where stated.
pub unsafe extern "C" fn rsc_grs_code_new(
    q: u64,
    n: u64,
    k: u64,
    out: *mut *mut RscGrsCode,
) -> RscStatus {
    guarded(|| {
        if out.is_null() {
            return RscStatus::InvalidArgument;
        }
        let Some(field) = field_for(q) else {
            return RscStatus::DomainError;
        };
        match GrsCode::canonical(field, n as usize, k as usize) {
            Ok(code) => {
                unsafe { *out = Box::into_raw(Box::new(RscGrsCode { inner: code })) };
                RscStatus::Ok
            }
            Err(_) => RscStatus::DomainError,
        }
    })
}

/// Release a handle created by `rsc_grs_code_new`. Null is a no-op.
#[no_mangle]
///
/// # Safety
///
/// Pointer arguments must be valid for the documented lengths;
/// null is allowed only where stated.
pub unsafe extern "C" fn rsc_grs_code_free(code: *mut RscGrsCode) {
    if !code.is_null() {
        drop(unsafe { Box::from_raw(code) });
    }
}

/// Encode message coefficients (constant term first, `msg_len <= k`) into
/// `out_codeword[0..n]`.
#[no_mangle]
///
/// # Safety
///
/// Pointer arguments must be valid for the documented lengths;
/// null is allowed only where stated.
pub unsafe extern "C" fn rsc_grs_encode(
    code: *const RscGrsCode,
    msg: *const u64,
    msg_len: usize,
    out_codeword: *mut u64,
) -> RscStatus {
    guarded(|| {
        if code.is_null() || (msg.is_null() && msg_len > 0) || out_codeword.is_null() {
            return RscStatus::InvalidArgument;
        }
        let code = unsafe { &(*code).inner };
        let coeffs = unsafe { std::slice::from_raw_parts(msg, msg_len) };
        if coeffs.iter().any(|&c| c >= code.field().q()) {
            return RscStatus::DomainError;
        }
        let f = Poly::from_coeffs(coeffs.iter().map(|&c| FieldElem(c)).collect());
        match code.encode(&f) {
            Ok(cw) => {
                let out = unsafe { std::slice::from_raw_parts_mut(out_codeword, code.n()) };
                for (o, c) in out.iter_mut().zip(cw) {
                    *o = c.0;
                }
                RscStatus::Ok
            }
            Err(_) => RscStatus::DomainError,
        }
    })
}

/// Cover `y[0..y_len]` (which must have the code length) with a codeword at
/// Hamming distance at most d - 1. Optional out buffers: `out_codeword`
/// (length n) and `out_message` (length k, constant term first).
#[no_mangle]
#[allow(clippy::too_many_arguments)]
///
/// # Safety
///
/// Pointer arguments must be valid for the documented lengths;
/// null is allowed only where stated.
pub unsafe extern "C" fn rsc_grs_cover(
    code: *const RscGrsCode,
    y: *const u64,
    y_len: usize,
    mode: RscDecodeMode,
    bw_raw: c_int,
    out_codeword: *mut u64,
    out_message: *mut u64,
    out_distance: *mut u64,
    out_punctures: *mut u64,
) -> RscStatus {
    guarded(|| {
        if code.is_null() || y.is_null() || out_distance.is_null() || out_punctures.is_null() {
            return RscStatus::InvalidArgument;
        }
        let code = unsafe { &(*code).inner };
        let y = unsafe { std::slice::from_raw_parts(y, y_len) };
        if y.iter().any(|&v| v >= code.field().q()) {
            return RscStatus::DomainError;
        }
        let y: Vec<FieldElem> = y.iter().map(|&v| FieldElem(v)).collect();
        let config = CoverConfig {
            bw_mode: if bw_raw != 0 {
                BwMode::Raw
            } else {
                BwMode::Bounded
            },
            ..CoverConfig::default()
        };
        match grs_cover(code, &y, mode.into(), &config) {
            Ok(r) => {
                unsafe {
                    *out_distance = r.distance as u64;
                    *out_punctures = r.punctures as u64;
                }
                if !out_codeword.is_null() {
                    let out = unsafe { std::slice::from_raw_parts_mut(out_codeword, code.n()) };
                    for (o, c) in out.iter_mut().zip(&r.codeword) {
                        *o = c.0;
                    }
                }
                if !out_message.is_null() {
                    let out = unsafe { std::slice::from_raw_parts_mut(out_message, code.k()) };
                    for (j, o) in out.iter_mut().enumerate() {
                        *o = r.message.coeff(j).0;
                    }
                }
                RscStatus::Ok
            }
            Err(_) => RscStatus::DomainError,
        }
    })
}

/// Create the canonical CRS code over the prime-power field of size q with
/// character parameter beta != 0.
#[no_mangle]
///
/// # Safety
///
/// Pointer arguments must be valid for the documented lengths;
/// null is allowed only where stated.
pub unsafe extern "C" fn rsc_crs_code_new(
    q: u64,
    n: u64,
    k: u64,
    beta: u64,
    out: *mut *mut RscCrsCode,
) -> RscStatus {
    guarded(|| {
        if out.is_null() {
            return RscStatus::InvalidArgument;
        }
        let Some(field) = field_for(q) else {
            return RscStatus::DomainError;
        };
        match CrsCode::canonical(field, n as usize, k as usize, FieldElem(beta)) {
            Ok(code) => {
                unsafe { *out = Box::into_raw(Box::new(RscCrsCode { inner: code })) };
                RscStatus::Ok
            }
            Err(_) => RscStatus::DomainError,
        }
    })
}

/// Release a handle created by `rsc_crs_code_new`. Null is a no-op.
#[no_mangle]
///
/// # Safety
///
/// Pointer arguments must be valid for the documented lengths;
/// null is allowed only where stated.
pub unsafe extern "C" fn rsc_crs_code_free(code: *mut RscCrsCode) {
    if !code.is_null() {
        drop(unsafe { Box::from_raw(code) });
    }
}

/// Rank of the GF(p)-linear trace map; the code size is p^rank.
#[no_mangle]
///
/// # Safety
///
/// Pointer arguments must be valid for the documented lengths;
/// null is allowed only where stated.
pub unsafe extern "C" fn rsc_crs_rank(code: *const RscCrsCode, out_rank: *mut u64) -> RscStatus {
    guarded(|| {
        if code.is_null() || out_rank.is_null() {
            return RscStatus::InvalidArgument;
        }
        let code = unsafe { &(*code).inner };
        unsafe { *out_rank = code.size_report().rank as u64 };
        RscStatus::Ok
    })
}

/// Cover the line spanned by `y_re/y_im[0..y_len]` with a CRS codeword.
/// Preimage draws for the coordinate rounding come from the ChaCha stream
/// seeded by `seed`, so calls are reproducible. Optional `out_message`
/// receives k coefficients.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
///
/// # Safety
///
/// Pointer arguments must be valid for the documented lengths;
/// null is allowed only where stated.
pub unsafe extern "C" fn rsc_crs_cover(
    code: *const RscCrsCode,
    y_re: *const f64,
    y_im: *const f64,
    y_len: usize,
    mode: RscDecodeMode,
    best_of_n: u64,
    seed: u64,
    out_message: *mut u64,
    out_distance: *mut f64,
    out_punctures: *mut u64,
) -> RscStatus {
    guarded(|| {
        if code.is_null()
            || y_re.is_null()
            || y_im.is_null()
            || out_distance.is_null()
            || out_punctures.is_null()
        {
            return RscStatus::InvalidArgument;
        }
        let code = unsafe { &(*code).inner };
        let re = unsafe { std::slice::from_raw_parts(y_re, y_len) };
        let im = unsafe { std::slice::from_raw_parts(y_im, y_len) };
        let y: Vec<num_complex::Complex64> = re
            .iter()
            .zip(im)
            .map(|(&a, &b)| num_complex::Complex64::new(a, b))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        match crs_cover(
            code,
            &y,
            mode.into(),
            &CoverConfig::default(),
            best_of_n as usize,
            &mut rng,
        ) {
            Ok(r) => {
                unsafe {
                    *out_distance = r.distance;
                    *out_punctures = r.punctures as u64;
                }
                if !out_message.is_null() {
                    let out = unsafe { std::slice::from_raw_parts_mut(out_message, code.k()) };
                    for (j, o) in out.iter_mut().enumerate() {
                        *o = r.message.coeff(j).0;
                    }
                }
                RscStatus::Ok
            }
            Err(_) => RscStatus::DomainError,
        }
    })
}

/// Chordal distance between the lines spanned by two complex vectors.
#[no_mangle]
///
/// # Safety
///
/// Pointer arguments must be valid for the documented lengths;
/// null is allowed only where stated.
pub unsafe extern "C" fn rsc_chordal_distance(
    u_re: *const f64,
    u_im: *const f64,
    v_re: *const f64,
    v_im: *const f64,
    len: usize,
    out: *mut f64,
) -> RscStatus {
    guarded(|| {
        if u_re.is_null() || u_im.is_null() || v_re.is_null() || v_im.is_null() || out.is_null() {
            return RscStatus::InvalidArgument;
        }
        let mk = |re: *const f64, im: *const f64| -> Vec<num_complex::Complex64> {
            let re = unsafe { std::slice::from_raw_parts(re, len) };
            let im = unsafe { std::slice::from_raw_parts(im, len) };
            re.iter()
                .zip(im)
                .map(|(&a, &b)| num_complex::Complex64::new(a, b))
                .collect()
        };
        match chordal_distance(&mk(u_re, u_im), &mk(v_re, v_im)) {
            Ok(d) => {
                unsafe { *out = d };
                RscStatus::Ok
            }
            Err(_) => RscStatus::DomainError,
        }
    })
}

fn bound_out(out: *mut f64, r: rscover::Result<f64>) -> RscStatus {
    if out.is_null() {
        return RscStatus::InvalidArgument;
    }
    match r {
        Ok(v) => {
            unsafe { *out = v };
            RscStatus::Ok
        }
        Err(_) => RscStatus::DomainError,
    }
}

/// Expected average covering radius of a random q-ary code of m codewords.
#[no_mangle]
///
/// # Safety
///
/// Pointer arguments must be valid for the documented lengths;
/// null is allowed only where stated.
pub unsafe extern "C" fn rsc_random_hamming_bound(
    q: u64,
    n: u64,
    m: f64,
    out: *mut f64,
) -> RscStatus {
    guarded(|| bound_out(out, random_hamming_bound(q, n, m)))
}

/// Expected average chordal covering radius of a random code of m lines.
#[no_mangle]
///
/// # Safety
///
/// Pointer arguments must be valid for the documented lengths;
/// null is allowed only where stated.
pub unsafe extern "C" fn rsc_random_chordal_bound(n: u64, m: f64, out: *mut f64) -> RscStatus {
    guarded(|| bound_out(out, random_chordal_bound(n, CodebookSize::Count(m))))
}

/// Same with the codebook size given as a natural logarithm.
#[no_mangle]
///
/// # Safety
///
/// Pointer arguments must be valid for the documented lengths;
/// null is allowed only where stated.
pub unsafe extern "C" fn rsc_random_chordal_bound_ln(
    n: u64,
    ln_m: f64,
    out: *mut f64,
) -> RscStatus {
    guarded(|| bound_out(out, random_chordal_bound(n, CodebookSize::LnCount(ln_m))))
}

/// Closed-form average puncture count of the unique-decoder covering model.
#[no_mangle]
///
/// # Safety
///
/// Pointer arguments must be valid for the documented lengths;
/// null is allowed only where stated.
pub unsafe extern "C" fn rsc_avg_punctures_unique(
    q: u64,
    n: u64,
    k: u64,
    out: *mut f64,
) -> RscStatus {
    guarded(|| bound_out(out, avg_punctures_unique(q, n, k)))
}

/// Coverage-fraction lower bound (raw, may leave [0, 1]).
#[no_mangle]
///
/// # Safety
///
/// Pointer arguments must be valid for the documented lengths;
/// null is allowed only where stated.
pub unsafe extern "C" fn rsc_coverage_fraction_lower_bound(
    q: u64,
    n: u64,
    k: u64,
    tau: u64,
    out: *mut f64,
) -> RscStatus {
    guarded(|| {
        bound_out(
            out,
            coverage_fraction_lower_bound(q, n, k, tau).map(|b| b.value),
        )
    })
}

/// Radius in (d/2, d) maximizing the coverage-fraction lower bound.
#[no_mangle]
///
/// # Safety
///
/// Pointer arguments must be valid for the documented lengths;
/// null is allowed only where stated.
pub unsafe extern "C" fn rsc_tau_max(q: u64, n: u64, k: u64, out: *mut u64) -> RscStatus {
    guarded(|| {
        if out.is_null() {
            return RscStatus::InvalidArgument;
        }
        match tau_max_search(q, n, k) {
            Ok(t) => {
                unsafe { *out = t };
                RscStatus::Ok
            }
            Err(_) => RscStatus::DomainError,
        }
    })
}

/// Upper bound on the average chordal covering radius of a rate-k/n CRS code
/// over GF(p). `out_valid` reports the rate condition.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
///
/// # Safety
///
/// Pointer arguments must be valid for the documented lengths;
/// null is allowed only where stated.
pub unsafe extern "C" fn rsc_crs_upper_bound(
    p: u64,
    n: u64,
    k: u64,
    mu: f64,
    sigma: f64,
    out_coarse: *mut f64,
    out_refined: *mut f64,
    out_min: *mut f64,
    out_valid: *mut c_int,
) -> RscStatus {
    guarded(|| {
        if out_coarse.is_null() || out_refined.is_null() || out_min.is_null() || out_valid.is_null()
        {
            return RscStatus::InvalidArgument;
        }
        match crs_upper_bound(p, n, k, mu, sigma) {
            Ok(b) => {
                unsafe {
                    *out_coarse = b.coarse;
                    *out_refined = b.refined;
                    *out_min = b.min;
                    *out_valid = b.valid as c_int;
                }
                RscStatus::Ok
            }
            Err(_) => RscStatus::DomainError,
        }
    })
}

/// SNR threshold selector for `rsc_crs_min_snr`.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RscSnrMode {
    /// Threshold on mu^2 / (mu^2 + sigma^2); needs n and rate.
    FiniteN = 0,
    /// Threshold on mu^2 / sigma^2 at fixed rate; needs rate.
    Asymptotic = 1,
    /// Limit p - 1 + 2 pi^2; needs only p.
    RateToOne = 2,
}

/// SNR threshold above which the CRS bound meets the random-coding bound.
/// Pass n = 0 / rate = 0 when the mode does not use them.
#[no_mangle]
///
/// # Safety
///
/// Pointer arguments must be valid for the documented lengths;
/// null is allowed only where stated.
pub unsafe extern "C" fn rsc_crs_min_snr(
    p: u64,
    mode: RscSnrMode,
    n: u64,
    rate: f64,
    out: *mut f64,
) -> RscStatus {
    guarded(|| {
        let smode = match mode {
            RscSnrMode::FiniteN => SnrMode::FiniteN,
            RscSnrMode::Asymptotic => SnrMode::Asymptotic,
            RscSnrMode::RateToOne => SnrMode::RateToOne,
        };
        let n_opt = if n == 0 { None } else { Some(n) };
        let r_opt = if rate == 0.0 { None } else { Some(rate) };
        bound_out(out, crs_min_snr(p, n_opt, r_opt, smode))
    })
}
