//! Subcommand bodies. Each returns the rendered output; the binary only
//! parses flags, writes, and maps results to exit codes.

use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context};
use quintic_core::analysis::{
    ab_condition, dual_distance, is_distance_optimal, minimal_codewords, DEFAULT_DUAL_CAP,
};
use quintic_core::distribution::{classified_distribution, theoretical_distribution};
use quintic_core::gf2m::{FieldContext, MAX_DEGREE};
use quintic_core::sss::MasseyScheme;
use quintic_core::{CodeSpec, Error, ParityClass, TraceCode, WeightDistribution};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::parallel;
use crate::report::{
    DistributionReport, DualOut, FieldRow, FieldTable, GriesmerOut, Meta, MinimalOut, RelationOut,
    SssDemoOut, VerificationReport,
};
use crate::verify::{verify, Timings, VerifyOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Enumerated,
    Theoretical,
    Classified,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn no_csv(what: &str) -> anyhow::Error {
    anyhow!("csv output is only available for distributions, not {what}")
}

pub fn field_table(format: Format) -> anyhow::Result<String> {
    let rows: Vec<FieldRow> = (1..=MAX_DEGREE)
        .map(|m| {
            let f = FieldContext::new(m)?;
            Ok(FieldRow {
                m,
                modulus: format!("{:#x}", f.modulus()),
                polynomial: polynomial(f.modulus()),
                generator: format!("{:#x}", f.generator().bits()),
                trace_mask: format!("{:#x}", f.trace_mask()),
            })
        })
        .collect::<quintic_core::Result<_>>()?;
    match format {
        Format::Json => Ok(to_json(&FieldTable {
            meta: Meta::current(),
            rows,
        })),
        Format::Csv => Err(no_csv("the field table")),
        Format::Table => {
            let mut out = format!(
                "{:>3}  {:<8} {:<24} {:<9} trace mask\n",
                "m", "modulus", "polynomial", "generator"
            );
            for r in rows {
                writeln!(
                    out,
                    "{:>3}  {:<8} {:<24} {:<9} {}",
                    r.m, r.modulus, r.polynomial, r.generator, r.trace_mask
                )?;
            }
            writeln!(out, "sha256 {}", crate::report::modulus_table_hash())?;
            Ok(out)
        }
    }
}

fn polynomial(p: u32) -> String {
    let terms: Vec<String> = (0..32)
        .rev()
        .filter(|i| (p >> i) & 1 == 1)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    terms.join(" + ")
}

pub fn compute_distribution(
    m: u32,
    mode: Mode,
    budget: u128,
    seed: u64,
) -> anyhow::Result<WeightDistribution> {
    let spec = CodeSpec::new(m)?;
    match mode {
        Mode::Theoretical => Ok(theoretical_distribution(m)?),
        Mode::Enumerated => match parallel::enumerate(m, budget) {
            Ok((_, d)) => Ok(d),
            Err(Error::BudgetExceeded { needed, budget, .. }) => bail!(
                "enumerating m = {m} needs {needed} coordinate evaluations, over the budget of {budget}; \
                 use --mode theoretical{}",
                if spec.parity == ParityClass::DoublyEven { " or --mode classified" } else { "" }
            ),
            Err(e) => Err(e.into()),
        },
        Mode::Classified => {
            if spec.parity != ParityClass::DoublyEven {
                bail!("classified mode needs 4 | m; m = {m} is {}", spec.parity);
            }
            if spec.codeword_count() as u128 > budget {
                bail!("classifying m = {m} visits {} ring elements, over the budget of {budget}", spec.codeword_count());
            }
            let code = TraceCode::new(m).context("classified mode materializes the code")?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(classified_distribution(&code, 4, &mut rng)?.distribution)
        }
    }
}

pub fn render_distribution(d: &WeightDistribution, format: Format) -> String {
    match format {
        Format::Json => to_json(&DistributionReport::from(d)),
        Format::Csv => {
            let mut out = String::from("weight,frequency\n");
            for (w, f) in &d.entries {
                let _ = writeln!(out, "{w},{f}");
            }
            out
        }
        Format::Table => {
            let s = &d.spec;
            let mut out = format!(
                "m = {}  class {}  L = {}  s = {}  K = {}  provenance {}\n{:>12}  {:>12}\n",
                s.m,
                s.parity,
                s.length,
                s.gray_length,
                s.dimension,
                d.provenance.as_str(),
                "weight",
                "frequency"
            );
            for (w, f) in &d.entries {
                let _ = writeln!(out, "{w:>12}  {f:>12}");
            }
            out
        }
    }
}

pub fn distribution(
    m: u32,
    mode: Mode,
    format: Format,
    budget: u128,
    seed: u64,
) -> anyhow::Result<String> {
    Ok(render_distribution(
        &compute_distribution(m, mode, budget, seed)?,
        format,
    ))
}

pub fn verify_report(opts: &VerifyOptions) -> anyhow::Result<(VerificationReport, Timings)> {
    verify(opts)
}

pub fn render_verification(r: &VerificationReport, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => Ok(to_json(r)),
        Format::Csv => Err(no_csv("verification reports")),
        Format::Table => {
            let mut out = format!("verify m = {} ({}) seed {}\n", r.m, r.parity_class, r.seed);
            for c in &r.checks {
                writeln!(out, "{:<19} {:<31} {}", c.status.as_str(), c.name, c.actual)?;
                if c.expected != c.actual {
                    writeln!(out, "{:<51} expected {}", "", c.expected)?;
                }
            }
            Ok(out)
        }
    }
}

pub fn griesmer(m: u32, format: Format) -> anyhow::Result<String> {
    let out = GriesmerOut::new(&is_distance_optimal(m)?);
    match format {
        Format::Json => Ok(to_json(&out)),
        Format::Csv => Err(no_csv("griesmer reports")),
        Format::Table => Ok(format!(
            "m = {} ({})\nN = {}  K = {}  d = {}\nsum at d+1 = {}\nslack = {}\noptimal = {}  claim applies = {}\n",
            out.m, out.parity_class, out.n, out.k, out.d, out.griesmer_sum_at_d_plus1, out.slack, out.optimal, out.claim_applies
        )),
    }
}

pub fn dual(m: u32, format: Format) -> anyhow::Result<String> {
    let code = TraceCode::new(m)?;
    let cols = code.gray_columns();
    let d = dual_distance(&code.generator_matrix(), DEFAULT_DUAL_CAP)?;
    let out = DualOut::new(m, &d, &cols);
    match format {
        Format::Json => Ok(to_json(&out)),
        Format::Csv => Err(no_csv("dual-distance reports")),
        Format::Table => Ok(format!(
            "m = {}\ndual distance = {}\nwitness columns = {:?}\nzero columns = {} of {}\nscheme = {}\n",
            m,
            out.dual_distance,
            out.witness_columns,
            out.zero_columns,
            out.columns_scanned,
            out.scheme.unwrap_or("undefined")
        )),
    }
}

pub fn minimal(m: u32, format: Format, budget: u128) -> anyhow::Result<String> {
    let report = if m <= quintic_core::ring::MATERIALIZE_LIMIT {
        match minimal_codewords(&TraceCode::new(m)?, budget) {
            Ok(r) => r,
            Err(Error::BudgetExceeded { .. }) => ab_condition(&theoretical_distribution(m)?)?,
            Err(e) => return Err(e.into()),
        }
    } else {
        ab_condition(&theoretical_distribution(m)?)?
    };
    let out = MinimalOut::new(m, &report);
    match format {
        Format::Json => Ok(to_json(&out)),
        Format::Csv => Err(no_csv("minimality reports")),
        Format::Table => {
            let mut s = format!(
                "m = {}\nw0 = {}  wInf = {}  2*w0 > wInf: {}\n",
                m, out.w0, out.w_inf, out.ab_ratio_holds
            );
            match &out.brute_force {
                Some(b) => writeln!(
                    s,
                    "brute force: {} of {} nonzero codewords minimal, {} witnesses",
                    b.minimal_count,
                    b.nonzero_codewords,
                    b.non_minimal_witnesses.len()
                )?,
                None => writeln!(s, "brute force: skipped (over budget)")?,
            }
            Ok(s)
        }
    }
}

pub const SSS_MAX_M: u32 = 2;

pub fn sss_demo(m: u32, secret: u8, seed: u64) -> anyhow::Result<SssDemoOut> {
    if m > SSS_MAX_M {
        bail!("the sharing demo materializes every share; m must be at most {SSS_MAX_M}");
    }
    if secret > 1 {
        bail!("the secret is one bit");
    }
    let code = TraceCode::new(m)?;
    let scheme = MasseyScheme::new(code.generator_matrix())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let deal = scheme.deal(secret, &mut rng);

    let mut coalitions = Vec::new();
    if let Some(j) = scheme.duplicate_of_secret() {
        coalitions.push(vec![j]);
    }
    let n = scheme.length();
    let size = code.spec().dimension as usize + 8;
    for _ in 0..64 {
        let c: Vec<usize> = (0..size)
            .map(|_| 1 + (rng.next_u64() as usize % (n - 1)))
            .collect();
        if scheme.find_recovery(&c)?.is_some() {
            coalitions.push(c);
            break;
        }
    }

    let mut relations = Vec::new();
    for c in coalitions {
        let r = scheme.find_recovery(&c)?.expect("coalition recovers");
        let recovered = scheme.reconstruct(&deal, &r)?;
        relations.push(RelationOut {
            coalition: r.coalition.iter().map(|j| j + 1).collect(),
            coefficients: r
                .coefficients
                .iter()
                .map(|b| char::from(b'0' + b))
                .collect(),
            recovered,
        });
    }
    let d = scheme.dual_distance()?;
    Ok(SssDemoOut {
        meta: Meta::current(),
        m,
        seed: seed.to_string(),
        secret: deal.secret,
        message: format!("{:#x}", deal.message),
        shares: deal
            .shares
            .iter()
            .map(|b| if b { '1' } else { '0' })
            .collect(),
        relations,
        dual_distance: d.value().map_or("undefined".into(), |v| v.to_string()),
        scheme: scheme.classify()?.as_str(),
    })
}

pub fn render_sss(out: &SssDemoOut, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => Ok(to_json(out)),
        Format::Csv => Err(no_csv("the sharing demo")),
        Format::Table => {
            let mut s = format!(
                "m = {}  seed {}  secret {}  message {}\nshares ({}): {}\n",
                out.m,
                out.seed,
                out.secret,
                out.message,
                out.shares.len(),
                out.shares
            );
            for r in &out.relations {
                writeln!(
                    s,
                    "coalition of {} (coordinates {:?}) recovers {} with coefficients {}",
                    r.coalition.len(),
                    r.coalition,
                    r.recovered,
                    r.coefficients
                )?;
            }
            writeln!(s, "dual distance {}: {}", out.dual_distance, out.scheme)?;
            Ok(s)
        }
    }
}
