//! Puncturing-based covering for GRS codes in the Hamming space and CRS
//! codes in the one-dimensional complex Grassmann space.
//!
//! The Hamming algorithm tries to decode, and on failure punctures the last
//! coordinate and retries; it always terminates within d - 1 punctures with a
//! codeword at distance at most d - 1. The chordal algorithm rounds each
//! coordinate of the input line to a character preimage, covers the rounded
//! vector in the Hamming space, and re-encodes through the character.

use num_complex::Complex64;
use rand::Rng;

use crate::code::{hamming_distance, CrsCode, GrsCode};
use crate::decoder::{
    bw_decode, gs_best_radius, gs_list_decode_with, tau_gs, BwMode, DEFAULT_S_MAX,
};
use crate::error::{Error, Result};
use crate::gf::{Character, FieldElem};
use crate::poly::Poly;

/// Decoder family used inside the covering loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecodeMode {
    Unique,
    List,
}

impl std::fmt::Display for DecodeMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DecodeMode::Unique => write!(f, "unique"),
            DecodeMode::List => write!(f, "list"),
        }
    }
}

/// Per-level list-decoding radius policy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadiusPolicy {
    /// Use the full Guruswami-Sudan radius tau_gs(n - i, k) at every level.
    TauGs,
    /// Cap the radius at a fixed value (still clamped to tau_gs per level).
    Fixed(usize),
    /// Best radius attainable with interpolation multiplicity at most s_max;
    /// sub-maximal on large codes but always tractable.
    MultiplicityCap,
}

#[derive(Clone, Copy, Debug)]
pub struct CoverConfig {
    pub bw_mode: BwMode,
    pub radius: RadiusPolicy,
    pub s_max: usize,
}

impl Default for CoverConfig {
    fn default() -> Self {
        CoverConfig {
            bw_mode: BwMode::Bounded,
            radius: RadiusPolicy::TauGs,
            s_max: DEFAULT_S_MAX,
        }
    }
}

/// Outcome of covering a Hamming-space vector.
#[derive(Clone, Debug)]
pub struct GrsCoverResult {
    pub message: Poly,
    pub codeword: Vec<FieldElem>,
    /// Hamming distance from the input to the returned codeword.
    pub distance: usize,
    /// Number of punctures before the decoder succeeded.
    pub punctures: usize,
    pub mode: DecodeMode,
}

/// Outcome of covering a line in G_{1,n}(C).
#[derive(Clone, Debug)]
pub struct CrsCoverResult {
    pub message: Poly,
    pub codeword: Vec<Complex64>,
    /// Chordal distance from the input line to the returned codeword line.
    pub distance: f64,
    /// Punctures used by the winning attempt.
    pub punctures: usize,
    pub mode: DecodeMode,
    pub attempts: usize,
}

/// Chordal distance between the lines spanned by u and v:
/// sqrt(1 - |<u,v>|^2 / (|u|^2 |v|^2)). Invariant to nonzero scaling of
/// either argument.
pub fn chordal_distance(u: &[Complex64], v: &[Complex64]) -> Result<f64> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            got: v.len(),
            want: u.len(),
        });
    }
    let nu: f64 = u.iter().map(|z| z.norm_sqr()).sum();
    let nv: f64 = v.iter().map(|z| z.norm_sqr()).sum();
    if nu == 0.0 || nv == 0.0 {
        return Err(Error::ZeroVector);
    }
    let inner: Complex64 = u.iter().zip(v).map(|(a, b)| a.conj() * b).sum();
    let cos2 = (inner.norm_sqr() / (nu * nv)).min(1.0);
    Ok((1.0 - cos2).max(0.0).sqrt())
}

/// The set-valued rounding map: the chi_beta-preimage of the p-th root of
/// unity nearest to z. Exactly q/p elements; a singleton when q = p.
pub fn psi_beta(chi: &Character, z: Complex64) -> Result<Vec<FieldElem>> {
    if chi.is_trivial() {
        return Err(Error::TrivialCharacter);
    }
    if z.norm_sqr() == 0.0 {
        return Err(Error::ZeroArgument);
    }
    let p = chi.field().p();
    let mut theta = z.arg();
    if theta < 0.0 {
        theta += std::f64::consts::TAU;
    }
    // nearest root index: floor(p theta / 2pi + 1/2) mod p
    let r = ((p as f64 * theta / std::f64::consts::TAU + 0.5).floor() as u64) % p;
    Ok(chi.trace_fiber(r)?.to_vec())
}

/// Covering for GRS codes: decode, puncture on failure, re-encode the first
/// successful message in the original code. Always succeeds, with distance
/// and puncture count both at most d - 1.
pub fn grs_cover(
    code: &GrsCode,
    y: &[FieldElem],
    mode: DecodeMode,
    config: &CoverConfig,
) -> Result<GrsCoverResult> {
    let n = code.n();
    let k = code.k();
    if y.len() != n {
        return Err(Error::LengthMismatch {
            got: y.len(),
            want: n,
        });
    }
    let d = code.min_distance();
    let mut current = code.clone();
    for i in 0..d {
        let yi = &y[..n - i];
        let found = match mode {
            DecodeMode::Unique => {
                let tau = (n - k - i) / 2;
                bw_decode(&current, yi, tau, config.bw_mode)?
            }
            DecodeMode::List => {
                let full = tau_gs(n - i, k);
                let tau = match config.radius {
                    RadiusPolicy::TauGs => full,
                    RadiusPolicy::Fixed(t) => t.min(full),
                    RadiusPolicy::MultiplicityCap => gs_best_radius(n - i, k, config.s_max),
                };
                let list = gs_list_decode_with(&current, yi, tau, config.s_max)?;
                // best candidate by punctured distance; ties go to the
                // lexicographically smallest coefficient vector
                list.into_iter()
                    .map(|f| {
                        let dist = hamming_distance(&current.encode(&f)?, yi);
                        Ok((f, dist))
                    })
                    .collect::<Result<Vec<_>>>()?
                    .into_iter()
                    .min_by(|(fa, da), (fb, db)| da.cmp(db).then_with(|| fa.lex_cmp(fb)))
                    .map(|(f, _)| f)
            }
        };
        if let Some(message) = found {
            let codeword = code.encode(&message)?;
            let distance = hamming_distance(y, &codeword);
            return Ok(GrsCoverResult {
                message,
                codeword,
                distance,
                punctures: i,
                mode,
            });
        }
        if i + 1 < d {
            current = current.puncture_last()?;
        }
    }
    // unreachable: at i = d - 1 the punctured code is [k, k, 1] and every
    // vector decodes at radius zero
    Err(Error::Precondition(
        "covering loop failed to terminate".into(),
    ))
}

/// Covering for CRS codes. Each attempt rounds the coordinates of y through
/// psi_beta (picking uniformly random preimages), covers the rounded vector
/// with grs_cover, and re-encodes the message in the CRS code; the best of N
/// attempts by chordal distance wins. Earlier attempts' draws are unaffected
/// by increasing N: attempt j always uses the j-th derived stream.
pub fn crs_cover<R: Rng>(
    code: &CrsCode,
    y: &[Complex64],
    mode: DecodeMode,
    config: &CoverConfig,
    best_of_n: usize,
    rng: &mut R,
) -> Result<CrsCoverResult> {
    let n = code.n();
    if y.len() != n {
        return Err(Error::LengthMismatch {
            got: y.len(),
            want: n,
        });
    }
    if best_of_n == 0 {
        return Err(Error::InvalidParameter("best_of_n must be >= 1".into()));
    }
    for z in y {
        if z.norm_sqr() == 0.0 {
            return Err(Error::ZeroArgument);
        }
    }
    // fibers are indexed once per coordinate; each attempt re-picks members
    let fibers: Vec<Vec<FieldElem>> = y
        .iter()
        .map(|&z| psi_beta(code.chi(), z))
        .collect::<Result<Vec<_>>>()?;

    let mut best: Option<CrsCoverResult> = None;
    for attempt in 0..best_of_n {
        // singleton fibers (q = p) round deterministically and draw nothing
        let rounded: Vec<FieldElem> = fibers
            .iter()
            .map(|f| {
                if f.len() == 1 {
                    f[0]
                } else {
                    f[rng.random_range(0..f.len())]
                }
            })
            .collect();
        let hamming = grs_cover(code.base(), &rounded, mode, config)?;
        let codeword = code.encode(&hamming.message)?;
        let distance = chordal_distance(y, &codeword)?;
        let better = best.as_ref().is_none_or(|b| distance < b.distance);
        if better {
            best = Some(CrsCoverResult {
                message: hamming.message,
                codeword,
                distance,
                punctures: hamming.punctures,
                mode,
                attempts: attempt + 1,
            });
        }
    }
    Ok(best.expect("best_of_n >= 1"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn gf(q: u64) -> Field {
        Field::new(q, 1).unwrap()
    }

    #[test]
    fn chordal_basics() {
        let u = vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
        let v = vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)];
        assert_eq!(chordal_distance(&u, &u).unwrap(), 0.0);
        assert!((chordal_distance(&u, &v).unwrap() - 1.0).abs() < 1e-15);

        let w = vec![Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)];
        let d = chordal_distance(&u, &w).unwrap();
        assert!((d - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);

        assert!(
            chordal_distance(&[Complex64::new(0.0, 0.0)], &[Complex64::new(1.0, 0.0)]).is_err()
        );
    }

    #[test]
    fn chordal_scale_invariance() {
        let mut rng = StdRng::seed_from_u64(1);
        let mut rand_c = |rng: &mut StdRng| {
            Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        };
        for _ in 0..1000 {
            let u: Vec<Complex64> = (0..4).map(|_| rand_c(&mut rng)).collect();
            let v: Vec<Complex64> = (0..4).map(|_| rand_c(&mut rng)).collect();
            let lam = rand_c(&mut rng) + Complex64::new(2.0, 0.0);
            let mu = rand_c(&mut rng) + Complex64::new(2.0, 0.0);
            let base = chordal_distance(&u, &v).unwrap();
            let lu: Vec<_> = u.iter().map(|z| z * lam).collect();
            let mv: Vec<_> = v.iter().map(|z| z * mu).collect();
            assert!((chordal_distance(&lu, &mv).unwrap() - base).abs() < 1e-10);
        }
    }

    #[test]
    fn psi_beta_prime_field_singletons() {
        let f = gf(7);
        let chi = Character::new(f.clone(), FieldElem(1)).unwrap();
        // z already a 7th root of unity with index 3
        let z = Complex64::from_polar(1.0, std::f64::consts::TAU * 3.0 / 7.0);
        assert_eq!(psi_beta(&chi, z).unwrap(), vec![FieldElem(3)]);
        assert_eq!(
            psi_beta(&chi, Complex64::new(1.0, 0.0)).unwrap(),
            vec![FieldElem(0)]
        );
        assert!(psi_beta(&chi, Complex64::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn psi_beta_fiber_size_is_q_over_p() {
        let f4 = Field::new(2, 2).unwrap();
        let chi = Character::new(f4.clone(), FieldElem(1)).unwrap();
        let pre = psi_beta(&chi, Complex64::new(1.0, 0.0)).unwrap();
        assert_eq!(pre, vec![FieldElem(0), FieldElem(1)]); // the trace-zero elements
        let pre2 = psi_beta(&chi, Complex64::new(-1.0, 0.0)).unwrap();
        assert_eq!(pre2.len(), 2);
    }

    #[test]
    fn psi_beta_rounds_to_nearest_root() {
        let f = gf(5);
        let chi = Character::new(f.clone(), FieldElem(1)).unwrap();
        for r in 0..5u64 {
            for eps in [-0.5, -0.2, 0.0, 0.2, 0.5] {
                let angle = std::f64::consts::TAU * (r as f64 + 0.49 * eps) / 5.0;
                let z = Complex64::from_polar(2.5, angle);
                assert_eq!(
                    psi_beta(&chi, z).unwrap(),
                    vec![FieldElem(r)],
                    "r={r} eps={eps}"
                );
            }
        }
    }

    #[test]
    fn grs_cover_exact_codeword_is_free() {
        let f = gf(7);
        let code = GrsCode::canonical(f.clone(), 6, 3).unwrap();
        let msg = Poly::from_message_index(&f, 300, 3);
        let y = code.encode(&msg).unwrap();
        for mode in [DecodeMode::Unique, DecodeMode::List] {
            let r = grs_cover(&code, &y, mode, &CoverConfig::default()).unwrap();
            assert_eq!(r.message, msg);
            assert_eq!(r.distance, 0);
            assert_eq!(r.punctures, 0);
        }
    }

    #[test]
    fn grs_cover_guarantee_exhaustive_4_2_5() {
        let f = gf(5);
        let code = GrsCode::canonical(f.clone(), 4, 2).unwrap();
        let d = code.min_distance();
        for raw in 0..625u64 {
            let y: Vec<FieldElem> = (0..4).map(|i| FieldElem(raw / 5u64.pow(i) % 5)).collect();
            for mode in [DecodeMode::Unique, DecodeMode::List] {
                let r = grs_cover(&code, &y, mode, &CoverConfig::default()).unwrap();
                assert!(r.distance <= d - 1);
                assert!(r.punctures <= d - 1);
                assert_eq!(r.codeword, code.encode(&r.message).unwrap());
                assert_eq!(r.distance, hamming_distance(&y, &r.codeword));
            }
        }
    }

    #[test]
    fn grs_cover_list_distance_bounded_by_level_radius_plus_punctures() {
        let f = gf(7);
        let code = GrsCode::canonical(f.clone(), 6, 3).unwrap();
        let mut rng = StdRng::seed_from_u64(9);
        for _ in 0..300 {
            let y: Vec<FieldElem> = (0..6).map(|_| FieldElem(rng.random_range(0..7))).collect();
            let r = grs_cover(&code, &y, DecodeMode::List, &CoverConfig::default()).unwrap();
            let i = r.punctures;
            assert!(r.distance <= tau_gs(6 - i, 3) + i);
        }
    }

    #[test]
    fn grs_cover_n_equals_k() {
        let f = gf(7);
        let code = GrsCode::canonical(f.clone(), 3, 3).unwrap();
        let y = vec![FieldElem(5), FieldElem(0), FieldElem(2)];
        let r = grs_cover(&code, &y, DecodeMode::Unique, &CoverConfig::default()).unwrap();
        assert_eq!(r.distance, 0);
        assert_eq!(r.punctures, 0);
    }

    #[test]
    fn crs_cover_exact_codeword_prime_field() {
        let f = gf(7);
        let code = CrsCode::canonical(f.clone(), 6, 3, FieldElem(1)).unwrap();
        let msg = Poly::from_message_index(&f, 123, 3);
        let y = code.encode(&msg).unwrap();
        let mut rng = StdRng::seed_from_u64(2);
        let r = crs_cover(
            &code,
            &y,
            DecodeMode::List,
            &CoverConfig::default(),
            1,
            &mut rng,
        )
        .unwrap();
        assert!(r.distance < 1e-9);
        assert_eq!(r.punctures, 0);
    }

    #[test]
    fn crs_cover_prime_field_rounding_is_rng_independent() {
        // q = p: psi fibers are singletons, so best_of_n = 1 is a
        // deterministic coordinatewise rounding
        let f = gf(7);
        let code = CrsCode::canonical(f.clone(), 6, 3, FieldElem(1)).unwrap();
        let y: Vec<Complex64> = (1..=6)
            .map(|i| Complex64::from_polar(0.5 + i as f64, 0.83 * i as f64))
            .collect();
        let mut r1 = StdRng::seed_from_u64(1);
        let mut r2 = StdRng::seed_from_u64(999);
        let a = crs_cover(
            &code,
            &y,
            DecodeMode::List,
            &CoverConfig::default(),
            1,
            &mut r1,
        )
        .unwrap();
        let b = crs_cover(
            &code,
            &y,
            DecodeMode::List,
            &CoverConfig::default(),
            1,
            &mut r2,
        )
        .unwrap();
        assert_eq!(a.message, b.message);
        assert_eq!(a.distance.to_bits(), b.distance.to_bits());
    }

    #[test]
    fn crs_cover_rejects_zero_coordinates() {
        let f = gf(7);
        let code = CrsCode::canonical(f.clone(), 6, 3, FieldElem(1)).unwrap();
        let mut y = code.encode(&Poly::zero()).unwrap();
        y[2] = Complex64::new(0.0, 0.0);
        let mut rng = StdRng::seed_from_u64(2);
        assert!(crs_cover(
            &code,
            &y,
            DecodeMode::List,
            &CoverConfig::default(),
            1,
            &mut rng
        )
        .is_err());
    }

    #[test]
    fn crs_cover_best_of_n_improves_monotonically() {
        // sharing the first N streams means best-of-N' <= best-of-N for N' >= N
        let f = gf(7);
        let code = CrsCode::canonical(f.clone(), 6, 4, FieldElem(1)).unwrap();
        let mut sample_rng = StdRng::seed_from_u64(77);
        for trial in 0..20 {
            let y: Vec<Complex64> = (0..6)
                .map(|_| {
                    Complex64::new(
                        sample_rng.random_range(-1.0..1.0),
                        sample_rng.random_range(-1.0..1.0),
                    )
                })
                .collect();
            if y.iter().any(|z| z.norm_sqr() == 0.0) {
                continue;
            }
            let d4 = {
                let mut rng = StdRng::seed_from_u64(1000 + trial);
                crs_cover(
                    &code,
                    &y,
                    DecodeMode::List,
                    &CoverConfig::default(),
                    4,
                    &mut rng,
                )
                .unwrap()
                .distance
            };
            let d8 = {
                let mut rng = StdRng::seed_from_u64(1000 + trial);
                crs_cover(
                    &code,
                    &y,
                    DecodeMode::List,
                    &CoverConfig::default(),
                    8,
                    &mut rng,
                )
                .unwrap()
                .distance
            };
            assert!(d8 <= d4 + 1e-15);
        }
    }
}
