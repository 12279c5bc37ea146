//! Griesmer optimality, dual distance, and codeword minimality.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::bits::{BinaryMatrix, BitVec};
use crate::code::{CodeSpec, TraceCode};
use crate::distribution::{closed_form_rows, WeightDistribution};
use crate::error::{Error, Result};
use crate::ring::ParityClass;

/// `sum_{j < k} ceil(d / 2^j)`.
pub fn griesmer_sum(k: u64, d: &BigUint) -> BigUint {
    let mut total = BigUint::zero();
    for j in 0..k {
        let div = BigUint::one() << j as usize;
        total += (d + &div - 1u32) / &div;
    }
    total
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GriesmerReport {
    pub m: u32,
    pub n: BigUint,
    pub k: u64,
    pub d: BigUint,
    pub sum_at_d_plus_1: BigUint,
    /// `sum_at_d_plus_1 - n`; positive means no `[n, k, d+1]` code exists.
    pub slack: BigInt,
    pub optimal: bool,
    /// Whether the known optimality result covers this m (odd m > 6).
    pub claim_applies: bool,
}

/// Griesmer test at `d + 1` with `d` the minimum nonzero closed-form weight.
pub fn is_distance_optimal(m: u32) -> Result<GriesmerReport> {
    let spec = CodeSpec::new(m)?;
    let rows = closed_form_rows(m)?;
    let d = rows.iter().map(|(w, _)| w).min().expect("nonempty").clone();
    let n = BigUint::from(spec.gray_length);
    let k = spec.dimension as u64;
    let sum = griesmer_sum(k, &(&d + 1u32));
    let slack = BigInt::from(sum.clone()) - BigInt::from(n.clone());
    Ok(GriesmerReport {
        m,
        n,
        k,
        d,
        optimal: slack > BigInt::zero(),
        sum_at_d_plus_1: sum,
        slack,
        claim_applies: spec.parity == ParityClass::Odd && m > 6,
    })
}

/// Default cap on the dependent-column search.
pub const DEFAULT_DUAL_CAP: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DualDistance {
    /// The dual code is `{0}`.
    Trivial,
    /// Exact value with a dual codeword of that weight (column indices).
    /// Smaller weights were excluded by scanning all `columns_scanned` columns.
    Exact {
        distance: usize,
        witness: Vec<usize>,
        columns_scanned: usize,
    },
    /// No dependency of size `<= cap` exists.
    AboveCap { cap: usize },
}

impl DualDistance {
    pub fn value(&self) -> Option<usize> {
        match self {
            Self::Exact { distance, .. } => Some(*distance),
            _ => None,
        }
    }
}

/// Minimum weight of the dual of the row space: the smallest set of linearly
/// dependent columns.
pub fn dual_distance(g: &BinaryMatrix, cap: usize) -> Result<DualDistance> {
    let rank = g.rank();
    if rank != g.row_count() {
        return Err(Error::RankDeficient {
            rank,
            rows: g.row_count(),
        });
    }
    if rank == g.col_count() {
        return Ok(DualDistance::Trivial);
    }
    let cols = g.columns()?;
    let n = cols.len();
    let exact = |distance, witness| {
        Ok(DualDistance::Exact {
            distance,
            witness,
            columns_scanned: n,
        })
    };
    if let Some(j) = cols.iter().position(|&c| c == 0) {
        return exact(1, alloc::vec![j]);
    }
    if cap < 2 {
        return Ok(DualDistance::AboveCap { cap });
    }
    let mut first_seen: BTreeMap<u64, usize> = BTreeMap::new();
    for (j, &c) in cols.iter().enumerate() {
        if let Some(&i) = first_seen.get(&c) {
            return exact(2, alloc::vec![i, j]);
        }
        first_seen.insert(c, j);
    }
    if cap >= 3 {
        // columns are distinct and nonzero here
        for i in 0..n {
            for j in i + 1..n {
                if let Some(&k) = first_seen.get(&(cols[i] ^ cols[j])) {
                    let mut w = alloc::vec![i, j, k];
                    w.sort_unstable();
                    return exact(3, w);
                }
            }
        }
    }
    // TODO: weight >= 4 search via meet-in-the-middle on pair sums; until then
    // the search stops at 3 whatever the requested cap.
    Ok(DualDistance::AboveCap { cap: cap.min(3) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteForceMinimality {
    pub nonzero_codewords: u64,
    pub minimal_count: u64,
    /// `(covering message, covered message)` for each non-minimal codeword.
    pub witnesses: Vec<(u64, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityReport {
    pub w0: u64,
    pub w_inf: u64,
    /// `2 w0 > w_inf`, the binary sufficient condition for all codewords minimal.
    pub ab_ratio_holds: bool,
    pub brute_force: Option<BruteForceMinimality>,
}

pub fn ab_condition(dist: &WeightDistribution) -> Result<MinimalityReport> {
    let w0 = dist.min_nonzero_weight().ok_or(Error::EmptyDistribution)?;
    let w_inf = dist.max_weight().ok_or(Error::EmptyDistribution)?;
    Ok(MinimalityReport {
        w0,
        w_inf,
        ab_ratio_holds: 2 * w0 as u128 > w_inf as u128,
        brute_force: None,
    })
}

/// Default budget for the pairwise support scan, in word comparisons; admits m <= 2.
pub const DEFAULT_MINIMALITY_BUDGET: u128 = 1_000_000_000;

/// Cost of the pairwise scan: `(2^(5m))^2 * words per codeword`.
pub fn minimality_cost(spec: &CodeSpec) -> u128 {
    let n = spec.codeword_count() as u128;
    n * n * (spec.gray_length as u128).div_ceil(64)
}

/// Pairwise support-containment scan over all nonzero Gray codewords.
pub fn minimal_codewords(code: &TraceCode, budget: u128) -> Result<MinimalityReport> {
    let spec = code.spec();
    let needed = minimality_cost(spec);
    if needed > budget {
        return Err(Error::BudgetExceeded {
            what: "pairwise minimality scan",
            needed,
            budget,
        });
    }
    let g = code.generator_matrix();
    let words: Vec<BitVec> = (0..spec.codeword_count())
        .map(|msg| g.encode(msg))
        .collect();
    let mut weights: Vec<(u64, u64)> = words
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, w)| (w.count_ones(), i as u64))
        .collect();
    weights.sort_unstable();

    let mut witnesses = Vec::new();
    for &(w, c) in &weights {
        let covered = weights
            .iter()
            .take_while(|&&(wd, _)| wd < w)
            .find(|&&(_, d)| words[d as usize].is_covered_by(&words[c as usize]));
        if let Some(&(_, d)) = covered {
            witnesses.push((c, d));
        }
    }
    witnesses.sort_unstable();

    let dist = WeightDistribution::new(
        *spec,
        crate::distribution::Provenance::Enumerated,
        weights
            .iter()
            .fold(BTreeMap::from([(0u64, 1u64)]), |mut acc, &(w, _)| {
                *acc.entry(w).or_insert(0) += 1;
                acc
            }),
    );
    let mut report = ab_condition(&dist)?;
    let nonzero = spec.codeword_count() - 1;
    report.brute_force = Some(BruteForceMinimality {
        nonzero_codewords: nonzero,
        minimal_count: nonzero - witnesses.len() as u64,
        witnesses,
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distribution::theoretical_distribution;

    #[test]
    fn griesmer_sums() {
        assert_eq!(griesmer_sum(5, &BigUint::from(36u32)), BigUint::from(71u32));
        assert_eq!(griesmer_sum(1, &BigUint::from(17u32)), BigUint::from(17u32));
    }

    #[test]
    fn griesmer_m1_not_optimal() {
        let r = is_distance_optimal(1).unwrap();
        assert_eq!(r.sum_at_d_plus_1, BigUint::from(71u32));
        assert_eq!(r.slack, BigInt::from(-4));
        assert!(!r.optimal && !r.claim_applies);
    }

    #[test]
    fn griesmer_matches_closed_inequality() {
        // 5 * 2^(5m) - 5 * 2^(4m) - 5 * 2^m + m - 1 is the sum at d + 1 for odd m >= 3
        for m in [3u32, 5, 7, 9, 11] {
            let r = is_distance_optimal(m).unwrap();
            let closed = BigUint::from(5u32) * (BigUint::one() << (5 * m) as usize)
                - BigUint::from(5u32) * (BigUint::one() << (4 * m) as usize)
                - BigUint::from(5u32) * (BigUint::one() << m as usize)
                + (m - 1);
            assert_eq!(r.sum_at_d_plus_1, closed, "m = {m}");
            assert_eq!(r.slack, BigInt::from(m as i64 - 6));
            assert_eq!(r.optimal, m > 6);
        }
    }

    #[test]
    fn ab_condition_cases() {
        let r = ab_condition(&theoretical_distribution(1).unwrap()).unwrap();
        assert_eq!((r.w0, r.w_inf, r.ab_ratio_holds), (35, 75, false));
        let r = ab_condition(&theoretical_distribution(2).unwrap()).unwrap();
        assert_eq!((r.w0, r.w_inf, r.ab_ratio_holds), (1650, 2250, true));
        let r = ab_condition(&theoretical_distribution(3).unwrap()).unwrap();
        assert!(r.ab_ratio_holds);
        let spec = CodeSpec::new(1).unwrap();
        let empty = WeightDistribution::new(
            spec,
            crate::distribution::Provenance::Theoretical,
            BTreeMap::from([(0, 1)]),
        );
        assert_eq!(ab_condition(&empty), Err(Error::EmptyDistribution));
    }

    #[test]
    fn dual_distance_edge_cases() {
        let zero_col = BinaryMatrix::from_columns(2, &[0b01, 0b10, 0b00]).unwrap();
        assert_eq!(dual_distance(&zero_col, 3).unwrap().value(), Some(1));
        assert_eq!(
            dual_distance(&BinaryMatrix::identity(4), 3).unwrap(),
            DualDistance::Trivial
        );
        // [7,4] Hamming dual: columns are all nonzero 3-bit vectors
        let hamming = BinaryMatrix::from_columns(3, &[1, 2, 3, 4, 5, 6, 7]).unwrap();
        let d = dual_distance(&hamming, 3).unwrap();
        assert_eq!(d.value(), Some(3));
        let simplex_like = BinaryMatrix::from_columns(3, &[1, 2, 4, 7]).unwrap();
        assert_eq!(
            dual_distance(&simplex_like, 3).unwrap(),
            DualDistance::AboveCap { cap: 3 }
        );
        let deficient = BinaryMatrix::from_columns(2, &[1, 1, 1]).unwrap();
        assert!(matches!(
            dual_distance(&deficient, 3),
            Err(Error::RankDeficient { rank: 1, rows: 2 })
        ));
    }

    #[test]
    fn minimality_m1() {
        let code = TraceCode::new(1).unwrap();
        let r = minimal_codewords(&code, DEFAULT_MINIMALITY_BUDGET).unwrap();
        let bf = r.brute_force.unwrap();
        assert!(bf.minimal_count < 31);
        // the all-ones message gives the full-support word
        let all_ones = crate::ring::RingElement::all_ones().pack(1);
        assert!(bf.witnesses.iter().any(|&(c, _)| c == all_ones));
        assert!(minimal_codewords(&TraceCode::new(3).unwrap(), DEFAULT_MINIMALITY_BUDGET).is_err());
    }
}
