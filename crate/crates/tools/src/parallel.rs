//! Data-parallel drivers. Work is split into a fixed number of chunks that does
//! not depend on the pool size, so results are identical for any `--jobs`.

use std::collections::BTreeMap;
use std::ops::Range;

use quintic_core::code::CodewordEnumerator;
use quintic_core::distribution::{check_enumeration_budget, Provenance};
use quintic_core::{RingElement, TraceCode, WeightDistribution};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const CHUNKS: u64 = 256;

pub fn pool(jobs: Option<usize>) -> anyhow::Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        b = b.num_threads(n.max(1));
    }
    Ok(b.build()?)
}

/// Splits `0..n` into at most [`CHUNKS`] contiguous ranges.
pub fn chunks(n: u64) -> Vec<Range<u64>> {
    let count = CHUNKS.min(n.max(1));
    let size = n.div_ceil(count);
    (0..count)
        .map(|i| (i * size).min(n)..((i + 1) * size).min(n))
        .filter(|r| !r.is_empty())
        .collect()
}

fn merge(mut a: BTreeMap<u64, u64>, b: BTreeMap<u64, u64>) -> BTreeMap<u64, u64> {
    for (w, f) in b {
        *a.entry(w).or_insert(0) += f;
    }
    a
}

pub fn histogram(e: &CodewordEnumerator) -> BTreeMap<u64, u64> {
    chunks(e.message_count())
        .into_par_iter()
        .map(|r| e.histogram(r))
        .reduce(BTreeMap::new, merge)
}

/// Exhaustive distribution; refuses before building anything when over budget.
pub fn enumerate(m: u32, budget: u128) -> quintic_core::Result<(TraceCode, WeightDistribution)> {
    let spec = check_enumeration_budget(m, budget)?;
    let code = TraceCode::new(m)?;
    let entries = histogram(&code.enumerator());
    Ok((
        code,
        WeightDistribution::new(spec, Provenance::Enumerated, entries),
    ))
}

/// Messages whose Gray-image weight disagrees with `weight_of`.
pub fn weight_mismatches(
    e: &CodewordEnumerator,
    weight_of: impl Fn(u64) -> u64 + Sync,
) -> Vec<u64> {
    let mut bad: Vec<u64> = chunks(e.message_count())
        .into_par_iter()
        .flat_map_iter(|r| {
            let mut local = Vec::new();
            e.for_each_in(r, |msg, w| {
                if weight_of(msg) != w {
                    local.push(msg);
                }
            });
            local
        })
        .collect();
    bad.sort_unstable();
    bad
}

/// Runs `check` on `samples` random ring elements. Chunk `i` draws from its own
/// generator seeded with `(seed, i)`; returns the failing packed elements.
pub fn sample_check(
    code: &TraceCode,
    samples: u64,
    seed: u64,
    check: impl Fn(&RingElement) -> bool + Sync,
) -> Vec<u64> {
    let m = code.spec().m;
    let mut bad: Vec<u64> = chunks(samples)
        .into_par_iter()
        .enumerate()
        .flat_map_iter(|(i, r)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64 + 1);
            r.filter_map(|_| {
                let a = code.ring().random_element(&mut rng);
                (!check(&a)).then(|| a.pack(m))
            })
            .collect::<Vec<_>>()
        })
        .collect();
    bad.sort_unstable();
    bad.dedup();
    bad
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunks_cover() {
        for n in [0u64, 1, 5, 255, 256, 257, 1 << 15] {
            let c = chunks(n);
            assert_eq!(c.iter().map(|r| r.end - r.start).sum::<u64>(), n);
            for w in c.windows(2) {
                assert_eq!(w[0].end, w[1].start);
            }
        }
    }

    #[test]
    fn pool_size_does_not_matter() {
        let code = TraceCode::new(2).unwrap();
        let e = code.enumerator();
        let one = pool(Some(1)).unwrap().install(|| histogram(&e));
        let four = pool(Some(4)).unwrap().install(|| histogram(&e));
        assert_eq!(one, four);
        assert_eq!(one, e.histogram(0..e.message_count()));
    }
}
