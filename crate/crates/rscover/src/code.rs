//! GRS and CRS code definitions: encoding, puncturing, weight distribution,
//! and the CRS code size computed from the rank of the trace map.

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Character, Field, FieldElem};
use crate::numeric::binomial;
use crate::poly::Poly;

/// An [n, k] generalized Reed-Solomon code: evaluations of degree-<k
/// polynomials at n distinct points, scaled by nonzero column multipliers.
#[derive(Clone, Debug)]
pub struct GrsCode {
    field: Field,
    k: usize,
    points: Vec<FieldElem>,
    multipliers: Vec<FieldElem>,
}

impl GrsCode {
    pub fn new(
        field: Field,
        k: usize,
        points: Vec<FieldElem>,
        multipliers: Vec<FieldElem>,
    ) -> Result<GrsCode> {
        let n = points.len();
        if k == 0 || k > n || (n as u64) > field.q() {
            return Err(Error::InvalidParameter(format!(
                "need 1 <= k <= n <= q, got k={k}, n={n}, q={}",
                field.q()
            )));
        }
        if multipliers.len() != n {
            return Err(Error::SequenceLengthMismatch(n, multipliers.len()));
        }
        for (i, a) in points.iter().enumerate() {
            if a.0 >= field.q() {
                return Err(Error::ElementOutOfRange {
                    value: a.0,
                    q: field.q(),
                });
            }
            if points[i + 1..].contains(a) {
                return Err(Error::DuplicatePoint);
            }
        }
        for v in &multipliers {
            if v.0 == 0 {
                return Err(Error::InvalidParameter(
                    "column multipliers must be nonzero".into(),
                ));
            }
            if v.0 >= field.q() {
                return Err(Error::ElementOutOfRange {
                    value: v.0,
                    q: field.q(),
                });
            }
        }
        Ok(GrsCode {
            field,
            k,
            points,
            multipliers,
        })
    }

    /// The default code used throughout: evaluation points are the first n
    /// nonzero field elements in encoding order, all multipliers 1 (an RS
    /// code).
    pub fn canonical(field: Field, n: usize, k: usize) -> Result<GrsCode> {
        if (n as u64) >= field.q() {
            return Err(Error::InvalidParameter(format!(
                "canonical code needs n < q, got n={n}, q={}",
                field.q()
            )));
        }
        let points = (1..=n as u64).map(FieldElem).collect();
        let multipliers = vec![field.one(); n];
        GrsCode::new(field, k, points, multipliers)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Minimum distance d = n - k + 1 (the codes are MDS).
    pub fn min_distance(&self) -> usize {
        self.n() - self.k + 1
    }

    /// Worst-case covering radius, d - 1.
    pub fn covering_radius(&self) -> usize {
        self.min_distance() - 1
    }

    pub fn points(&self) -> &[FieldElem] {
        &self.points
    }

    pub fn multipliers(&self) -> &[FieldElem] {
        &self.multipliers
    }

    pub fn is_rs(&self) -> bool {
        self.multipliers.iter().all(|v| v.0 == 1)
    }

    /// Number of codewords q^k, saturating at u128::MAX.
    pub fn size(&self) -> u128 {
        (self.field.q() as u128)
            .checked_pow(self.k as u32)
            .unwrap_or(u128::MAX)
    }

    pub fn encode(&self, f: &Poly) -> Result<Vec<FieldElem>> {
        if let Some(deg) = f.degree() {
            if deg >= self.k {
                return Err(Error::DegreeTooLarge { deg, k: self.k });
            }
        }
        Ok(self
            .points
            .iter()
            .zip(&self.multipliers)
            .map(|(&a, &v)| self.field.mul(v, f.eval(&self.field, a)))
            .collect())
    }

    /// Drop the last coordinate, giving an [n-1, k] GRS code.
    pub fn puncture_last(&self) -> Result<GrsCode> {
        if self.n() == self.k {
            return Err(Error::PunctureBelowDimension { k: self.k });
        }
        Ok(GrsCode {
            field: self.field.clone(),
            k: self.k,
            points: self.points[..self.n() - 1].to_vec(),
            multipliers: self.multipliers[..self.n() - 1].to_vec(),
        })
    }

    /// Strip column multipliers from a received word, mapping the decoding
    /// problem onto the underlying RS code.
    pub fn strip_multipliers(&self, y: &[FieldElem]) -> Result<Vec<FieldElem>> {
        if y.len() != self.n() {
            return Err(Error::LengthMismatch {
                got: y.len(),
                want: self.n(),
            });
        }
        y.iter()
            .zip(&self.multipliers)
            .map(|(&yi, &v)| self.field.div(yi, v))
            .collect()
    }

    pub fn to_spec(&self) -> CodeSpec {
        CodeSpec {
            q: self.field.q(),
            p: self.field.p(),
            m: self.field.m(),
            n: self.n(),
            k: self.k,
            eval_points: self.points.iter().map(|a| a.0).collect(),
            multipliers: self.multipliers.iter().map(|v| v.0).collect(),
            beta: None,
        }
    }

    /// Rebuild from a serialized spec (canonical field modulus for p^m).
    pub fn from_spec(spec: &CodeSpec) -> Result<GrsCode> {
        let field = Field::new(spec.p, spec.m)?;
        if field.q() != spec.q {
            return Err(Error::InvalidParameter(format!(
                "q={} inconsistent with p^m = {}",
                spec.q,
                field.q()
            )));
        }
        if spec.eval_points.len() != spec.n {
            return Err(Error::SequenceLengthMismatch(
                spec.n,
                spec.eval_points.len(),
            ));
        }
        GrsCode::new(
            field,
            spec.k,
            spec.eval_points.iter().map(|&v| FieldElem(v)).collect(),
            spec.multipliers.iter().map(|&v| FieldElem(v)).collect(),
        )
    }
}

/// Serializable code description:
/// `{q, p, m, n, k, evalPoints, multipliers, beta?}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CodeSpec {
    pub q: u64,
    pub p: u64,
    pub m: u32,
    pub n: usize,
    pub k: usize,
    pub eval_points: Vec<u64>,
    pub multipliers: Vec<u64>,
    /// Character parameter; present for CRS codes.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub beta: Option<u64>,
}

pub fn hamming_distance(a: &[FieldElem], b: &[FieldElem]) -> usize {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Number of codewords of weight w in an [n, k] MDS code over GF(q).
pub fn weight_distribution(n: usize, k: usize, q: u64, w: usize) -> Result<BigUint> {
    if w > n {
        return Err(Error::WeightOutOfRange { w, n });
    }
    if w == 0 {
        return Ok(BigUint::one());
    }
    let d = n - k + 1;
    if w < d {
        return Ok(BigUint::zero());
    }
    let q = BigInt::from(q);
    let mut acc = BigInt::zero();
    for j in 0..=(w - d) {
        let term = BigInt::from(binomial(w as u64, j as u64))
            * (q.pow((w - d + 1 - j) as u32) - BigInt::one());
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc *= BigInt::from(binomial(n as u64, w as u64));
    debug_assert!(!acc.is_negative());
    Ok(acc.to_biguint().unwrap_or_default())
}

/// A character-Reed-Solomon code: an RS codeword pushed through a nontrivial
/// additive character coordinatewise, viewed as a line in G_{1,n}(C).
pub struct CrsCode {
    base: GrsCode,
    chi: Character,
}

impl CrsCode {
    pub fn new(base: GrsCode, beta: FieldElem) -> Result<CrsCode> {
        if !base.is_rs() {
            return Err(Error::InvalidParameter(
                "CRS codes are built on RS codes (all multipliers 1)".into(),
            ));
        }
        if (base.n() as u64) >= base.field().q() {
            return Err(Error::InvalidParameter(format!(
                "CRS needs n < q, got n={}, q={}",
                base.n(),
                base.field().q()
            )));
        }
        if beta.0 == 0 {
            return Err(Error::TrivialCharacter);
        }
        let chi = Character::new(base.field().clone(), beta)?;
        Ok(CrsCode { base, chi })
    }

    pub fn canonical(field: Field, n: usize, k: usize, beta: FieldElem) -> Result<CrsCode> {
        CrsCode::new(GrsCode::canonical(field, n, k)?, beta)
    }

    pub fn base(&self) -> &GrsCode {
        &self.base
    }

    pub fn chi(&self) -> &Character {
        &self.chi
    }

    pub fn field(&self) -> &Field {
        self.base.field()
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn k(&self) -> usize {
        self.base.k()
    }

    /// Encode into a unit-modulus complex vector (a line representative of
    /// norm sqrt(n)).
    pub fn encode(&self, f: &Poly) -> Result<Vec<Complex64>> {
        let cw = self.base.encode(f)?;
        Ok(cw.into_iter().map(|a| self.chi.eval(a)).collect())
    }

    pub fn to_spec(&self) -> CodeSpec {
        let mut spec = self.base.to_spec();
        spec.beta = Some(self.chi.beta().0);
        spec
    }

    pub fn from_spec(spec: &CodeSpec) -> Result<CrsCode> {
        let beta = spec
            .beta
            .ok_or_else(|| Error::InvalidParameter("CRS spec needs a beta".into()))?;
        CrsCode::new(GrsCode::from_spec(spec)?, FieldElem(beta))
    }

    /// Code size via the rank of the GF(p)-linear trace map
    /// T: f -> (Tr(beta f(alpha_j)))_j, plus the general size bounds.
    pub fn size_report(&self) -> CrsSizeReport {
        let field = self.field();
        let p = field.p();
        let m = field.m() as usize;
        let k = self.k();
        let n = self.n();

        // rows: images of the GF(p)-basis {omega^a X^j} of the message space,
        // omega the polynomial-basis generator (encoding p)
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(k * m);
        for j in 0..k {
            for a in 0..m {
                // omega^a X^j evaluated at each point, traced against beta
                let omega_a = FieldElem(p.pow(a as u32) % field.q().max(1));
                let row: Vec<u64> = self
                    .base
                    .points()
                    .iter()
                    .map(|&alpha| {
                        let val = field.mul(omega_a, field.pow(alpha, j as u64));
                        field.trace(field.mul(self.chi.beta(), val))
                    })
                    .collect();
                rows.push(row);
            }
        }
        let rank = gfp_rank(rows, n, p);

        let size = BigUint::from(p).pow(rank as u32);
        let pn = BigUint::from(p).pow(n as u32);
        let lower = BigRational::new(
            BigInt::from(pn.clone()),
            BigInt::from(BigUint::from(field.q()).pow((n - k) as u32)),
        );
        let qk = BigUint::from(field.q()).pow(k as u32);
        let upper = pn.min(qk);
        CrsSizeReport {
            rank,
            size,
            lower_bound: lower,
            upper_bound: upper,
        }
    }
}

/// Result of [`CrsCode::size_report`].
#[derive(Debug, Clone)]
pub struct CrsSizeReport {
    /// Rank of the trace map over GF(p).
    pub rank: usize,
    /// |C| = p^rank.
    pub size: BigUint,
    /// p^n / q^(n-k); may be fractional (then trivially satisfied).
    pub lower_bound: BigRational,
    /// min(p^n, q^k).
    pub upper_bound: BigUint,
}

/// Row rank of a matrix over GF(p) by elimination.
fn gfp_rank(mut rows: Vec<Vec<u64>>, ncols: usize, p: u64) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] % p != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = mod_inv(rows[rank][col] % p, p);
        for c in col..ncols {
            rows[rank][c] = rows[rank][c] % p * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] % p != 0 {
                let f = rows[r][col] % p;
                for c in col..ncols {
                    rows[r][c] = (rows[r][c] + (p - f) * rows[rank][c]) % p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p prime; a^(p-2)
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn gf(q: u64) -> Field {
        Field::new(q, 1).unwrap()
    }

    #[test]
    fn encode_basics() {
        let f = gf(5);
        let code = GrsCode::canonical(f.clone(), 4, 2).unwrap();
        assert_eq!(code.encode(&Poly::zero()).unwrap(), vec![FieldElem(0); 4]);
        let x = Poly::x(&f);
        assert_eq!(
            code.encode(&x).unwrap(),
            vec![FieldElem(1), FieldElem(2), FieldElem(3), FieldElem(4)]
        );
        let too_big = Poly::from_message_index(&f, 124, 3); // degree 2
        assert!(code.encode(&too_big).is_err());
    }

    #[test]
    fn mds_property_exhaustive() {
        // empirical minimum distance equals n - k + 1
        for (q, n, k) in [(5u64, 4usize, 2usize), (7, 6, 3), (4, 3, 2), (11, 5, 4)] {
            let f = if q == 4 { Field::new(2, 2).unwrap() } else { gf(q) };
            let code = GrsCode::canonical(f.clone(), n, k).unwrap();
            let cws: Vec<_> = (0..code.size())
                .map(|i| code.encode(&Poly::from_message_index(&f, i, k)).unwrap())
                .collect();
            let mut min = usize::MAX;
            for i in 0..cws.len() {
                for j in i + 1..cws.len() {
                    min = min.min(hamming_distance(&cws[i], &cws[j]));
                }
            }
            assert_eq!(min, n - k + 1, "[{n},{k}]_{q}");
            assert_eq!(code.min_distance(), n - k + 1);
        }
    }

    #[test]
    fn puncture_drops_distance_by_one() {
        let f = gf(7);
        let code = GrsCode::canonical(f.clone(), 6, 2).unwrap();
        let punct = code.puncture_last().unwrap();
        assert_eq!(punct.n(), 5);
        assert_eq!(
            punct.points(),
            &[
                FieldElem(1),
                FieldElem(2),
                FieldElem(3),
                FieldElem(4),
                FieldElem(5)
            ]
        );

        // encode-then-truncate equals puncture-then-encode
        for idx in 0..49u128 {
            let msg = Poly::from_message_index(&f, idx, 2);
            let full = code.encode(&msg).unwrap();
            let short = punct.encode(&msg).unwrap();
            assert_eq!(&full[..5], &short[..]);
        }

        // [4,2]_5 punctured once has empirical minimum distance 2
        let f5 = gf(5);
        let p = GrsCode::canonical(f5.clone(), 4, 2)
            .unwrap()
            .puncture_last()
            .unwrap();
        let cws: Vec<_> = (0..25u128)
            .map(|i| p.encode(&Poly::from_message_index(&f5, i, 2)).unwrap())
            .collect();
        let mut min = usize::MAX;
        for i in 0..cws.len() {
            for j in i + 1..cws.len() {
                min = min.min(hamming_distance(&cws[i], &cws[j]));
            }
        }
        assert_eq!(min, 2);
        assert_eq!(p.min_distance(), 2);

        let tight = GrsCode::canonical(gf(7), 2, 2).unwrap();
        assert!(tight.puncture_last().is_err());
    }

    #[test]
    fn weight_distribution_small_cases() {
        // [4,2,3]_5: A_3 = 16, A_4 = 8, total 1 + 16 + 8 = 25
        assert_eq!(
            weight_distribution(4, 2, 5, 3).unwrap(),
            BigUint::from(16u32)
        );
        assert_eq!(
            weight_distribution(4, 2, 5, 4).unwrap(),
            BigUint::from(8u32)
        );
        assert_eq!(weight_distribution(4, 2, 5, 0).unwrap(), BigUint::one());
        assert_eq!(weight_distribution(4, 2, 5, 1).unwrap(), BigUint::zero());
        assert_eq!(weight_distribution(4, 2, 5, 2).unwrap(), BigUint::zero());
        assert!(weight_distribution(4, 2, 5, 5).is_err());
    }

    #[test]
    fn weight_distribution_sums_to_code_size() {
        for &(n, k, q) in &[(4usize, 2usize, 5u64), (6, 3, 7), (10, 4, 11), (16, 9, 17)] {
            let total: BigUint = (0..=n)
                .map(|w| weight_distribution(n, k, q, w).unwrap())
                .sum();
            assert_eq!(total, BigUint::from(q).pow(k as u32));
        }
    }

    #[test]
    fn weight_distribution_matches_enumeration() {
        let f = gf(5);
        let code = GrsCode::canonical(f.clone(), 4, 2).unwrap();
        let mut counts = [0u64; 5];
        for i in 0..25u128 {
            let cw = code.encode(&Poly::from_message_index(&f, i, 2)).unwrap();
            counts[cw.iter().filter(|c| c.0 != 0).count()] += 1;
        }
        for (w, &c) in counts.iter().enumerate() {
            assert_eq!(
                weight_distribution(4, 2, 5, w).unwrap().to_u64().unwrap(),
                c
            );
        }
    }

    #[test]
    fn crs_encode_unit_modulus() {
        let f = gf(7);
        let code = CrsCode::canonical(f.clone(), 6, 3, FieldElem(1)).unwrap();
        let cw = code.encode(&Poly::from_message_index(&f, 123, 3)).unwrap();
        for z in &cw {
            assert!((z.norm() - 1.0).abs() < 1e-12);
        }
        // f = 0 maps to the all-ones vector
        let zero = code.encode(&Poly::zero()).unwrap();
        for z in &zero {
            assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
        // f = X gives successive 7th roots of unity
        let xcw = code.encode(&Poly::x(&f)).unwrap();
        for (i, z) in xcw.iter().enumerate() {
            let want = Complex64::from_polar(1.0, std::f64::consts::TAU * (i as f64 + 1.0) / 7.0);
            assert!((z - want).norm() < 1e-12);
        }
    }

    #[test]
    fn crs_collision_iff_trace_condition() {
        // GF(4), n = 3, k = 2: CRS(f) = CRS(g) iff Tr(beta (f-g)(alpha_j)) = 0 for all j
        let f4 = Field::new(2, 2).unwrap();
        let code = CrsCode::canonical(f4.clone(), 3, 2, FieldElem(1)).unwrap();
        let msgs: Vec<_> = (0..16u128)
            .map(|i| Poly::from_message_index(&f4, i, 2))
            .collect();
        for a in &msgs {
            for b in &msgs {
                let ca = code.encode(a).unwrap();
                let cb = code.encode(b).unwrap();
                let same = ca.iter().zip(&cb).all(|(x, y)| (x - y).norm() < 1e-9);
                let h = a.sub(&f4, b);
                let cond = code
                    .base()
                    .points()
                    .iter()
                    .all(|&alpha| f4.trace(f4.mul(code.chi().beta(), h.eval(&f4, alpha))) == 0);
                assert_eq!(same, cond);
            }
        }
    }

    #[test]
    fn crs_size_prime_field_equals_qk() {
        let f = gf(7);
        for k in 1..=5 {
            let code = CrsCode::canonical(f.clone(), 6, k, FieldElem(1)).unwrap();
            let rep = code.size_report();
            assert_eq!(rep.size, BigUint::from(7u32).pow(k as u32));
        }
    }

    #[test]
    fn crs_size_matches_enumeration_gf4() {
        for (n, k) in [(3usize, 2usize), (3, 3)] {
            let f4 = Field::new(2, 2).unwrap();
            let code = CrsCode::canonical(f4.clone(), n, k, FieldElem(1)).unwrap();
            let mut images = std::collections::HashSet::new();
            for i in 0..4u128.pow(k as u32) {
                let msg = Poly::from_message_index(&f4, i, k);
                // distinct codewords are distinct trace vectors
                let tvec: Vec<u64> = code
                    .base()
                    .points()
                    .iter()
                    .map(|&a| f4.trace(f4.mul(code.chi().beta(), msg.eval(&f4, a))))
                    .collect();
                images.insert(tvec);
            }
            let rep = code.size_report();
            assert_eq!(rep.size, BigUint::from(images.len()));
            // bounds sandwich and power of p
            let size_rat = BigRational::from(BigInt::from(rep.size.clone()));
            assert!(rep.lower_bound <= size_rat);
            assert!(rep.size <= rep.upper_bound);
        }
    }

    #[test]
    fn crs_size_k_equals_n_is_p_to_n() {
        let f4 = Field::new(2, 2).unwrap();
        let code = CrsCode::canonical(f4, 3, 3, FieldElem(1)).unwrap();
        assert_eq!(code.size_report().size, BigUint::from(8u32)); // p^n = 2^3
    }

    #[test]
    fn code_spec_roundtrips_through_json() {
        let f = gf(7);
        let grs = GrsCode::new(
            f.clone(),
            2,
            vec![FieldElem(0), FieldElem(2), FieldElem(5)],
            vec![FieldElem(3), FieldElem(1), FieldElem(6)],
        )
        .unwrap();
        let json = serde_json::to_string(&grs.to_spec()).unwrap();
        assert!(json.contains("\"evalPoints\""));
        assert!(!json.contains("beta"));
        let back = GrsCode::from_spec(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back.points(), grs.points());
        assert_eq!(back.multipliers(), grs.multipliers());

        let crs = CrsCode::canonical(Field::new(2, 2).unwrap(), 3, 2, FieldElem(1)).unwrap();
        let json = serde_json::to_string(&crs.to_spec()).unwrap();
        assert!(json.contains("\"beta\":1"));
        let back = CrsCode::from_spec(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back.chi().beta(), FieldElem(1));
        assert_eq!(back.n(), 3);
    }

    #[test]
    fn crs_rejects_bad_inputs() {
        let f = gf(7);
        let grs = GrsCode::new(
            f.clone(),
            2,
            vec![FieldElem(1), FieldElem(2), FieldElem(3)],
            vec![FieldElem(2), FieldElem(1), FieldElem(1)],
        )
        .unwrap();
        assert!(CrsCode::new(grs, FieldElem(1)).is_err()); // not an RS code
        assert!(CrsCode::canonical(f.clone(), 3, 2, FieldElem(0)).is_err()); // trivial character
    }
}
