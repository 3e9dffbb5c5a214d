//! Monte Carlo harness: samplers, the exhaustive nearest-codeword oracle and
//! estimators for average covering radius and puncture counts.
//!
//! Reproducibility contract: trial t draws from the ChaCha stream
//! (master_seed, t), so results are bit-identical for a fixed seed and trial
//! count no matter how trials are scheduled across workers.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::code::{hamming_distance, CrsCode, GrsCode};
use crate::cover::{chordal_distance, crs_cover, grs_cover, CoverConfig, DecodeMode};
use crate::error::{Error, Result};
use crate::gf::FieldElem;
use crate::poly::Poly;

/// Default cap on exhaustive nearest-codeword searches (q^k messages).
pub const DEFAULT_EXHAUSTIVE_CAP: u128 = 1_000_000;

/// Independent per-trial generator derived from (master_seed, trial).
pub fn trial_rng(master_seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(trial);
    rng
}

/// Uniform vector in GF(q)^n.
pub fn sample_uniform_hamming<R: Rng>(q: u64, n: usize, rng: &mut R) -> Vec<FieldElem> {
    (0..n).map(|_| FieldElem(rng.random_range(0..q))).collect()
}

/// I.i.d. circularly-symmetric complex Gaussian coordinates scaled so the
/// amplitudes are Rayleigh with mean 1 (component deviation sqrt(2/pi)).
pub fn sample_complex_gaussian<R: Rng>(n: usize, rng: &mut R) -> Vec<Complex64> {
    let sd = (2.0 / std::f64::consts::PI).sqrt();
    (0..n)
        .map(|_| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex64::new(sd * re, sd * im)
        })
        .collect()
}

/// Exhaustive nearest codeword in Hamming distance; ties go to the smallest
/// canonical message index.
pub fn nearest_codeword_hamming(
    code: &GrsCode,
    y: &[FieldElem],
    cap: u128,
) -> Result<(Poly, usize)> {
    let total = code.size();
    if total > cap {
        return Err(Error::CapExceeded {
            required: total,
            cap,
        });
    }
    let field = code.field().clone();
    let mut best: Option<(Poly, usize)> = None;
    for idx in 0..total {
        let f = Poly::from_message_index(&field, idx, code.k());
        let d = hamming_distance(&code.encode(&f)?, y);
        if best.as_ref().is_none_or(|(_, bd)| d < *bd) {
            best = Some((f, d));
            if d == 0 {
                break;
            }
        }
    }
    Ok(best.expect("code is nonempty"))
}

/// Exhaustive nearest codeword line in chordal distance.
pub fn nearest_codeword_chordal(code: &CrsCode, y: &[Complex64], cap: u128) -> Result<(Poly, f64)> {
    let total = (code.field().q() as u128)
        .checked_pow(code.k() as u32)
        .unwrap_or(u128::MAX);
    if total > cap {
        return Err(Error::CapExceeded {
            required: total,
            cap,
        });
    }
    let field = code.field().clone();
    let mut best: Option<(Poly, f64)> = None;
    for idx in 0..total {
        let f = Poly::from_message_index(&field, idx, code.k());
        let d = chordal_distance(y, &code.encode(&f)?)?;
        if best.as_ref().is_none_or(|(_, bd)| d < *bd) {
            best = Some((f, d));
        }
    }
    Ok(best.expect("code is nonempty"))
}

/// One Monte Carlo trial, flattened for the per-trial CSV log.
#[derive(Debug, Clone)]
pub struct TrialRecord {
    pub trial: u64,
    pub distance: f64,
    pub punctures: u64,
    pub oracle_distance: Option<f64>,
    pub seed_offset: u64,
}

/// Mean/stderr summary of an experiment.
#[derive(Debug, Clone)]
pub struct EstimateReport {
    pub estimator: String,
    pub trials: u64,
    pub mean_distance: f64,
    pub stderr_distance: f64,
    pub mean_punctures: f64,
    pub stderr_punctures: f64,
    /// Number of trials where the algorithm matched the oracle distance,
    /// when the oracle ran.
    pub oracle_matches: Option<u64>,
}

fn mean_stderr(values: impl Iterator<Item = f64> + Clone, trials: u64) -> (f64, f64) {
    if trials == 0 {
        return (f64::NAN, f64::NAN);
    }
    let n = trials as f64;
    let mean = values.clone().sum::<f64>() / n;
    if trials < 2 {
        return (mean, 0.0);
    }
    let var = values.map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

fn summarize(estimator: String, records: &[TrialRecord]) -> EstimateReport {
    let trials = records.len() as u64;
    let (mean_distance, stderr_distance) = mean_stderr(records.iter().map(|r| r.distance), trials);
    let (mean_punctures, stderr_punctures) =
        mean_stderr(records.iter().map(|r| r.punctures as f64), trials);
    let oracle_matches = records
        .first()
        .and_then(|r| r.oracle_distance.map(|_| ()))
        .map(|_| {
            records
                .iter()
                .filter(|r| {
                    r.oracle_distance
                        .is_some_and(|o| (r.distance - o).abs() < 1e-12)
                })
                .count() as u64
        });
    EstimateReport {
        estimator,
        trials,
        mean_distance,
        stderr_distance,
        mean_punctures,
        stderr_punctures,
        oracle_matches,
    }
}

/// Hamming-space estimator algorithm.
#[derive(Clone, Copy, Debug)]
pub enum HammingAlgorithm {
    Cover {
        mode: DecodeMode,
    },
    /// Nearest-codeword (MAP) search; optimal but exponential in k.
    Exhaustive,
}

/// Chordal-space estimator algorithm.
#[derive(Clone, Copy, Debug)]
pub enum ChordalAlgorithm {
    Cover { mode: DecodeMode, best_of_n: usize },
    Exhaustive,
}

/// Estimate the average covering radius (and puncture count) of a GRS code
/// under uniform inputs.
pub fn estimate_hamming(
    code: &GrsCode,
    alg: HammingAlgorithm,
    config: &CoverConfig,
    trials: u64,
    master_seed: u64,
    with_oracle: bool,
    cap: u128,
) -> Result<(EstimateReport, Vec<TrialRecord>)> {
    let records: Vec<TrialRecord> = (0..trials)
        .into_par_iter()
        .map(|t| -> Result<TrialRecord> {
            let mut rng = trial_rng(master_seed, t);
            let y = sample_uniform_hamming(code.field().q(), code.n(), &mut rng);
            let (distance, punctures) = match alg {
                HammingAlgorithm::Cover { mode } => {
                    let r = grs_cover(code, &y, mode, config)?;
                    (r.distance as f64, r.punctures as u64)
                }
                HammingAlgorithm::Exhaustive => {
                    let (_, d) = nearest_codeword_hamming(code, &y, cap)?;
                    (d as f64, 0)
                }
            };
            let oracle_distance = if with_oracle && !matches!(alg, HammingAlgorithm::Exhaustive) {
                Some(nearest_codeword_hamming(code, &y, cap)?.1 as f64)
            } else {
                None
            };
            Ok(TrialRecord {
                trial: t,
                distance,
                punctures,
                oracle_distance,
                seed_offset: t,
            })
        })
        .collect::<Result<_>>()?;
    let name = match alg {
        HammingAlgorithm::Cover { mode } => format!("grs-cover-{mode}"),
        HammingAlgorithm::Exhaustive => "nearest-exhaustive".into(),
    };
    Ok((summarize(name, &records), records))
}

/// Estimate the average chordal covering radius of a CRS code under
/// complex-Gaussian inputs with mean-1 Rayleigh amplitudes.
pub fn estimate_chordal(
    code: &CrsCode,
    alg: ChordalAlgorithm,
    config: &CoverConfig,
    trials: u64,
    master_seed: u64,
    with_oracle: bool,
    cap: u128,
) -> Result<(EstimateReport, Vec<TrialRecord>)> {
    let records: Vec<TrialRecord> = (0..trials)
        .into_par_iter()
        .map(|t| -> Result<TrialRecord> {
            let mut rng = trial_rng(master_seed, t);
            let y = sample_complex_gaussian(code.n(), &mut rng);
            let (distance, punctures) = match alg {
                ChordalAlgorithm::Cover { mode, best_of_n } => {
                    let r = crs_cover(code, &y, mode, config, best_of_n, &mut rng)?;
                    (r.distance, r.punctures as u64)
                }
                ChordalAlgorithm::Exhaustive => {
                    let (_, d) = nearest_codeword_chordal(code, &y, cap)?;
                    (d, 0)
                }
            };
            let oracle_distance = if with_oracle && !matches!(alg, ChordalAlgorithm::Exhaustive) {
                Some(nearest_codeword_chordal(code, &y, cap)?.1)
            } else {
                None
            };
            Ok(TrialRecord {
                trial: t,
                distance,
                punctures,
                oracle_distance,
                seed_offset: t,
            })
        })
        .collect::<Result<_>>()?;
    let name = match alg {
        ChordalAlgorithm::Cover { mode, .. } => format!("crs-cover-{mode}"),
        ChordalAlgorithm::Exhaustive => "nearest-exhaustive-chordal".into(),
    };
    Ok((summarize(name, &records), records))
}
