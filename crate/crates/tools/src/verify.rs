//! The `verify` suite: every check applicable to one m.

use std::time::Instant;

use quintic_core::analysis::{
    ab_condition, dual_distance, is_distance_optimal, minimal_codewords, minimality_cost,
    DualDistance, DEFAULT_DUAL_CAP, DEFAULT_MINIMALITY_BUDGET,
};
use quintic_core::distribution::{
    classified_distribution, reference_class_weights, reference_doubly_even_rows,
    theoretical_distribution, Classification, DEFAULT_ENUMERATION_BUDGET,
};
use quintic_core::ring::MATERIALIZE_LIMIT;
use quintic_core::sss::classify;
use quintic_core::{CodeSpec, ParityClass, RingElement, TraceCode, WeightDistribution};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::parallel;
use crate::report::{Check, Meta, Status, VerificationReport};

/// Binary length printed in the m = 2 worked example.
pub const EXAMPLE_M2_LENGTH: u64 = 1215;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub m: u32,
    pub seed: u64,
    pub enumeration_budget: u128,
    pub minimality_budget: u128,
    pub samples: u64,
}

impl VerifyOptions {
    pub fn new(m: u32) -> Self {
        Self {
            m,
            seed: 42,
            enumeration_budget: DEFAULT_ENUMERATION_BUDGET,
            minimality_budget: DEFAULT_MINIMALITY_BUDGET,
            samples: 10_000,
        }
    }
}

struct Suite {
    checks: Vec<Check>,
    timings: Vec<(String, f64)>,
    clock: Instant,
}

impl Suite {
    fn push(
        &mut self,
        name: &str,
        claim: &str,
        expected: impl ToString,
        actual: impl ToString,
        status: Status,
    ) {
        self.checks.push(Check {
            name: name.into(),
            claim: claim.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            status,
        });
        let now = Instant::now();
        self.timings
            .push((name.into(), now.duration_since(self.clock).as_secs_f64()));
        self.clock = now;
    }

    fn eq(&mut self, name: &str, claim: &str, expected: impl ToString, actual: impl ToString) {
        let (e, a) = (expected.to_string(), actual.to_string());
        let status = Status::of(e == a);
        self.push(name, claim, e, a, status);
    }
}

fn render(d: &WeightDistribution) -> String {
    d.entries
        .iter()
        .map(|(w, f)| format!("{w}:{f}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn first_moment(suite: &mut Suite, name: &str, d: &WeightDistribution) {
    suite.eq(
        name,
        "weights.first-moment",
        d.expected_first_moment(),
        d.first_moment(),
    );
}

/// Per-check wall-clock seconds; kept out of the report so it stays deterministic.
pub type Timings = Vec<(String, f64)>;

pub fn verify(opts: &VerifyOptions) -> anyhow::Result<(VerificationReport, Timings)> {
    let m = opts.m;
    let spec = CodeSpec::new(m)?;
    let mut suite = Suite {
        checks: Vec::new(),
        timings: Vec::new(),
        clock: Instant::now(),
    };

    let code = if m <= MATERIALIZE_LIMIT {
        Some(TraceCode::new(m)?)
    } else {
        None
    };
    if let Some(code) = &code {
        suite.eq(
            "unit-count",
            "params.length",
            spec.length,
            code.units().len(),
        );
        suite.eq(
            "generator-rank",
            "params.dimension",
            spec.dimension,
            code.generator_matrix().rank(),
        );
    }
    if m == 2 {
        suite.push(
            "example-length",
            "example.m2.length",
            EXAMPLE_M2_LENGTH,
            spec.gray_length,
            Status::DiscrepancyLogged,
        );
    }

    let theory = theoretical_distribution(m)?;
    first_moment(&mut suite, "first-moment-theoretical", &theory);
    suite.eq(
        "theoretical-total",
        "weights.total",
        spec.codeword_count(),
        theory.total(),
    );

    if spec.parity == ParityClass::DoublyEven {
        let printed = WeightDistribution::new(
            spec,
            quintic_core::Provenance::Theoretical,
            reference_doubly_even_rows(m)?
                .into_iter()
                .chain([(0, 1)])
                .fold(
                    Default::default(),
                    |mut acc: std::collections::BTreeMap<u64, u64>, (w, f)| {
                        *acc.entry(w).or_insert(0) += f;
                        acc
                    },
                ),
        );
        let ok = printed.first_moment() == printed.expected_first_moment();
        suite.push(
            "printed-table-first-moment",
            "weights.table.printed",
            printed.expected_first_moment(),
            printed.first_moment(),
            if ok {
                Status::Pass
            } else {
                Status::DiscrepancyLogged
            },
        );
    }

    let measured = if let Some(code) = &code {
        if spec.parity == ParityClass::DoublyEven {
            doubly_even_checks(&mut suite, code, &theory, opts)?
        } else if spec.enumeration_cost() <= opts.enumeration_budget {
            let e = code.enumerator();
            let d = WeightDistribution::new(
                spec,
                quintic_core::Provenance::Enumerated,
                parallel::histogram(&e),
            );
            first_moment(&mut suite, "first-moment-enumerated", &d);
            suite.eq(
                "oracle-vs-table",
                "weights.table",
                render(&theory),
                render(&d),
            );
            let mismatches = parallel::weight_mismatches(&e, |msg| {
                let a = RingElement::unpack(msg, m);
                code.ring().unit_profile(&a).weight_class().weight(m)
            });
            suite.eq(
                "weight-class-prediction",
                "weights.classes",
                0,
                mismatches.len(),
            );
            Some(d)
        } else {
            None
        }
    } else {
        None
    };

    if let Some(code) = &code {
        eq1(&mut suite, code, opts);
        if m <= 2 {
            closures(&mut suite, code, opts.seed);
        }
        let g = code.generator_matrix();
        let cols = code.gray_columns();
        let d = dual_distance(&g, DEFAULT_DUAL_CAP)?;
        let zero = cols.iter().filter(|&&c| c == 0).count();
        suite.eq("no-zero-column", "dual.nondegenerate", 0, zero);
        // a duplicate pair certifies 2; no zero column excludes 1
        let certified = match &d {
            DualDistance::Exact {
                distance: 2,
                witness,
                ..
            } => cols[witness[0]] == cols[witness[1]],
            _ => false,
        };
        let actual = match &d {
            DualDistance::Exact {
                distance, witness, ..
            } => format!("{distance} via columns {witness:?}"),
            other => format!("{other:?}"),
        };
        suite.push(
            "dual-distance",
            "dual.distance",
            "2",
            actual,
            Status::of(certified && zero == 0),
        );
        let scheme = classify(&d).map(|k| k.as_str()).unwrap_or("undefined");
        suite.eq("sss-scheme", "sss.dictatorial", "dictatorial", scheme);
    }

    let g = is_distance_optimal(m)?;
    let actual = format!(
        "sum {} vs N {}, slack {}, optimal {}",
        g.sum_at_d_plus_1, g.n, g.slack, g.optimal
    );
    if g.claim_applies {
        suite.push(
            "griesmer",
            "griesmer.optimal",
            "optimal true",
            actual,
            Status::of(g.optimal),
        );
    } else {
        suite.push(
            "griesmer",
            "griesmer.optimal",
            "no claim for this m",
            actual,
            Status::Pass,
        );
    }

    let ab_source = measured.as_ref().unwrap_or(&theory);
    let ab = ab_condition(ab_source)?;
    suite.push(
        "ab-condition",
        "minimality.ab",
        format!("2*w0 > wInf is {}", m > 1),
        format!("2*{} > {} is {}", ab.w0, ab.w_inf, ab.ab_ratio_holds),
        Status::of(ab.ab_ratio_holds == (m > 1)),
    );

    if let Some(code) = &code {
        if minimality_cost(code.spec()) <= opts.minimality_budget {
            let r = minimal_codewords(code, opts.minimality_budget)?;
            let bf = r.brute_force.as_ref().expect("brute force ran");
            if m == 1 {
                let all_ones = RingElement::all_ones().pack(1);
                let found = bf.witnesses.iter().any(|&(c, _)| c == all_ones);
                suite.push(
                    "minimality-brute-force",
                    "minimality.witness",
                    "all-one codeword non-minimal",
                    format!(
                        "{} of {} minimal, all-one witness {}",
                        bf.minimal_count, bf.nonzero_codewords, found
                    ),
                    Status::of(found && bf.minimal_count < bf.nonzero_codewords),
                );
            } else {
                suite.eq(
                    "minimality-brute-force",
                    "minimality.all",
                    format!(
                        "{} of {} minimal",
                        bf.nonzero_codewords, bf.nonzero_codewords
                    ),
                    format!("{} of {} minimal", bf.minimal_count, bf.nonzero_codewords),
                );
            }
            suite.eq(
                "ab-implies-minimal",
                "minimality.ab",
                true,
                !r.ab_ratio_holds || bf.witnesses.is_empty(),
            );
        }
    }

    let report = VerificationReport {
        meta: Meta::current(),
        m,
        parity_class: spec.parity.as_str(),
        seed: opts.seed.to_string(),
        checks: suite.checks,
    };
    Ok((report, suite.timings))
}

fn eq1(suite: &mut Suite, code: &TraceCode, opts: &VerifyOptions) {
    let spectrum = code.theta_spectrum();
    let s = code.spec().gray_length as i64;
    let m = code.spec().m;
    let bad = parallel::sample_check(code, opts.samples, opts.seed, |a| {
        let theta = spectrum[a.pack(m) as usize];
        let direct_ok = m > 2 || code.theta(a) == theta;
        direct_ok && 2 * code.codeword_lee_weight(a) as i64 == s - theta
    });
    suite.eq(
        "eq1-identity",
        "weights.character-sum",
        format!("{0}/{0}", opts.samples),
        format!("{}/{}", opts.samples - bad.len() as u64, opts.samples),
    );
}

fn closures(suite: &mut Suite, code: &TraceCode, seed: u64) {
    let ring = code.ring();
    let m = code.spec().m;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 200;
    let mut ok = 0;
    for _ in 0..trials {
        let u = ring.random_unit(&mut rng);
        let a = ring.random_element(&mut rng);
        let word = code.evaluate(&a);
        let shifted = code.evaluate(&ring.mul(&a, &u));
        let closed = (0..word.len()).all(|j| {
            let ux = ring.mul(&u, &code.unit(j)).pack(m);
            code.units()
                .position(ux)
                .is_some_and(|t| shifted[j] == word[t])
        });
        ok += closed as u32;
    }
    suite.eq(
        "regular-action",
        "structure.regular-action",
        format!("{trials}/{trials}"),
        format!("{ok}/{trials}"),
    );

    let total = code.spec().codeword_count();
    let ok = (0..total)
        .filter(|&p| {
            let a = RingElement::unpack(p, m);
            let rotated: Vec<_> = code.evaluate(&a).iter().map(|r| r.rotate()).collect();
            quintic_core::code::gray_image(&rotated) == code.gray_codeword(&a.rotate())
        })
        .count();
    suite.eq(
        "quasi-cyclic",
        "structure.quasi-cyclic",
        format!("{total}/{total}"),
        format!("{ok}/{total}"),
    );
}

fn binomial5(k: u32) -> u64 {
    [1, 5, 10, 10, 5, 1][k as usize]
}

fn doubly_even_checks(
    suite: &mut Suite,
    code: &TraceCode,
    theory: &WeightDistribution,
    opts: &VerifyOptions,
) -> anyhow::Result<Option<WeightDistribution>> {
    let m = code.spec().m;
    let ring = code.ring();
    let size = ring.size();
    let round_trip = (0..size)
        .filter(|&p| {
            let a = RingElement::unpack(p, m);
            ring.crt_decompose(&a)
                .and_then(|c| ring.crt_recompose(&c))
                .is_ok_and(|b| b == a)
        })
        .count();
    suite.eq(
        "crt-round-trip",
        "structure.crt",
        format!("{size}/{size}"),
        format!("{round_trip}/{size}"),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let Classification {
        distribution,
        classes,
    } = match classified_distribution(code, 4, &mut rng) {
        Ok(c) => c,
        Err(e) => {
            suite.push(
                "class-consistency",
                "weights.classes",
                "all representatives agree",
                e,
                Status::Fail,
            );
            return Ok(None);
        }
    };
    let q1 = (1u64 << m) - 1;
    let expected: Vec<String> = (0..=5u32)
        .map(|k| (binomial5(k) * q1.pow(k)).to_string())
        .collect();
    let actual: Vec<String> = classes.iter().map(|c| c.size.to_string()).collect();
    suite.eq(
        "class-sizes",
        "weights.class-sizes",
        expected.join(","),
        actual.join(","),
    );
    let reps: usize = classes.iter().map(|c| c.representatives.len()).sum();
    suite.push(
        "class-consistency",
        "weights.classes",
        "all representatives agree",
        format!(
            "{reps} representatives over {} classes agree",
            classes.len()
        ),
        Status::Pass,
    );
    first_moment(suite, "first-moment-classified", &distribution);
    suite.eq(
        "oracle-vs-table",
        "weights.table",
        render(theory),
        render(&distribution),
    );

    let spectrum = code.theta_spectrum();
    let mismatches = (0..size)
        .filter(|&p| {
            let class = ring.unit_profile(&RingElement::unpack(p, m)).weight_class();
            class.theta(m) as i64 != spectrum[p as usize]
        })
        .count();
    suite.eq("weight-class-prediction", "weights.classes", 0, mismatches);

    // Printed table: identical rows except the fourth weight.
    let printed = reference_doubly_even_rows(m)?;
    let by_size = |f: u64| classes.iter().find(|c| c.size == f).map(|c| c.weight);
    let row_text = |rows: &[(u64, Option<u64>)]| {
        rows.iter()
            .map(|(w, got)| format!("{w}->{}", got.map_or("none".into(), |g| g.to_string())))
            .collect::<Vec<_>>()
            .join(",")
    };
    let pairs: Vec<(u64, Option<u64>)> = printed.iter().map(|&(w, f)| (w, by_size(f))).collect();
    let mismatched: Vec<usize> = pairs
        .iter()
        .enumerate()
        .filter(|(_, (w, got))| Some(*w) != *got)
        .map(|(i, _)| i + 1)
        .collect();
    suite.push(
        "printed-table-rows",
        "weights.table.printed",
        "printed weight for each printed frequency",
        format!("{} (rows differing: {mismatched:?})", row_text(&pairs)),
        if mismatched.is_empty() {
            Status::Pass
        } else {
            Status::DiscrepancyLogged
        },
    );

    // Which class carries the first row's weight: the printed frequency's
    // class (2 nonzero components) or the 3-component class.
    let (w1, f1) = printed[0];
    let holder = classes
        .iter()
        .find(|c| c.weight == w1)
        .map(|c| c.nonzero_components);
    let printed_holds = by_size(f1) == Some(w1);
    suite.push(
        "table-pairing",
        "weights.table.pairing",
        format!("weight {w1} carried by the class of size {f1}"),
        format!(
            "{} pairing holds; weight {w1} carried by the {}-nonzero class",
            if printed_holds { "printed" } else { "swapped" },
            holder.map_or("no".into(), |k| k.to_string())
        ),
        Status::of(printed_holds),
    );

    let reference = reference_class_weights(m)?;
    let diffs: Vec<String> = reference
        .iter()
        .filter_map(|&(k, w)| {
            let got = classes[k as usize].weight;
            (got != w).then(|| format!("k={k}: stated {w}, measured {got}"))
        })
        .collect();
    suite.push(
        "class-weights-vs-case-analysis",
        "weights.classes.case-analysis",
        "stated per-class weights",
        if diffs.is_empty() {
            "all match".to_string()
        } else {
            diffs.join("; ")
        },
        if diffs.is_empty() {
            Status::Pass
        } else {
            Status::DiscrepancyLogged
        },
    );
    Ok(Some(distribution))
}
