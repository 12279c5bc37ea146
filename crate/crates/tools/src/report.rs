//! Serializable reports. Exact integers are written as decimal strings.

use quintic_core::analysis::{DualDistance, GriesmerReport, MinimalityReport};
use quintic_core::gf2m::MODULI;
use quintic_core::{WeightDistribution, UNIT_ORDER_VERSION};
use serde::Serialize;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

/// Self-description embedded in every report.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct Meta {
    pub schema_version: u32,
    pub library: &'static str,
    pub library_version: &'static str,
    pub modulus_table_sha256: String,
    pub unit_order_version: u32,
}

impl Meta {
    pub fn current() -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            library: "quintic-core",
            library_version: quintic_core::VERSION,
            modulus_table_sha256: modulus_table_hash(),
            unit_order_version: UNIT_ORDER_VERSION,
        }
    }
}

/// SHA-256 of the modulus table rendered as `m:0xmodulus` lines.
pub fn modulus_table_hash() -> String {
    let mut h = Sha256::new();
    for (i, p) in MODULI.iter().enumerate() {
        h.update(format!("{}:{:#x}\n", i + 1, p).as_bytes());
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Entry {
    pub weight: String,
    pub frequency: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct DistributionReport {
    pub meta: Meta,
    pub m: u32,
    pub parity_class: &'static str,
    #[serde(rename = "L")]
    pub l: String,
    pub s: String,
    pub dimension: u32,
    pub provenance: &'static str,
    pub entries: Vec<Entry>,
}

impl From<&WeightDistribution> for DistributionReport {
    fn from(d: &WeightDistribution) -> Self {
        Self {
            meta: Meta::current(),
            m: d.spec.m,
            parity_class: d.spec.parity.as_str(),
            l: d.spec.length.to_string(),
            s: d.spec.gray_length.to_string(),
            dimension: d.spec.dimension,
            provenance: d.provenance.as_str(),
            entries: d
                .entries
                .iter()
                .map(|(w, f)| Entry {
                    weight: w.to_string(),
                    frequency: f.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    DiscrepancyLogged,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::DiscrepancyLogged => "discrepancy-logged",
        }
    }

    pub fn of(ok: bool) -> Self {
        if ok {
            Self::Pass
        } else {
            Self::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct Check {
    pub name: String,
    /// Stable identifier of the claim under test.
    pub claim: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub meta: Meta,
    pub m: u32,
    pub parity_class: &'static str,
    pub seed: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct GriesmerOut {
    pub meta: Meta,
    pub m: u32,
    pub parity_class: &'static str,
    #[serde(rename = "N")]
    pub n: String,
    #[serde(rename = "K")]
    pub k: String,
    pub d: String,
    pub griesmer_sum_at_d_plus1: String,
    pub slack: String,
    pub optimal: bool,
    pub claim_applies: bool,
}

impl GriesmerOut {
    pub fn new(r: &GriesmerReport) -> Self {
        Self {
            meta: Meta::current(),
            m: r.m,
            parity_class: quintic_core::ParityClass::of(r.m).as_str(),
            n: r.n.to_string(),
            k: r.k.to_string(),
            d: r.d.to_string(),
            griesmer_sum_at_d_plus1: r.sum_at_d_plus_1.to_string(),
            slack: r.slack.to_string(),
            optimal: r.optimal,
            claim_applies: r.claim_applies,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct DualOut {
    pub meta: Meta,
    pub m: u32,
    /// Decimal distance, `"trivial"`, or `">cap"`.
    pub dual_distance: String,
    pub witness_columns: Vec<usize>,
    pub columns_scanned: usize,
    pub zero_columns: usize,
    pub scheme: Option<&'static str>,
}

impl DualOut {
    pub fn new(m: u32, d: &DualDistance, columns: &[u64]) -> Self {
        let (dual_distance, witness_columns) = match d {
            DualDistance::Trivial => ("trivial".to_string(), Vec::new()),
            DualDistance::Exact {
                distance, witness, ..
            } => (distance.to_string(), witness.clone()),
            DualDistance::AboveCap { cap } => (format!(">{cap}"), Vec::new()),
        };
        Self {
            meta: Meta::current(),
            m,
            dual_distance,
            witness_columns,
            columns_scanned: columns.len(),
            zero_columns: columns.iter().filter(|&&c| c == 0).count(),
            scheme: quintic_core::sss::classify(d).ok().map(|k| k.as_str()),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct BruteForceOut {
    pub nonzero_codewords: String,
    pub minimal_count: String,
    /// `[covering message, covered message]` as hex.
    pub non_minimal_witnesses: Vec<[String; 2]>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct MinimalOut {
    pub meta: Meta,
    pub m: u32,
    pub w0: String,
    pub w_inf: String,
    pub ab_ratio_holds: bool,
    pub brute_force: Option<BruteForceOut>,
}

impl MinimalOut {
    pub fn new(m: u32, r: &MinimalityReport) -> Self {
        Self {
            meta: Meta::current(),
            m,
            w0: r.w0.to_string(),
            w_inf: r.w_inf.to_string(),
            ab_ratio_holds: r.ab_ratio_holds,
            brute_force: r.brute_force.as_ref().map(|b| BruteForceOut {
                nonzero_codewords: b.nonzero_codewords.to_string(),
                minimal_count: b.minimal_count.to_string(),
                non_minimal_witnesses: b
                    .witnesses
                    .iter()
                    .map(|&(c, d)| [format!("{c:#x}"), format!("{d:#x}")])
                    .collect(),
            }),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct FieldRow {
    pub m: u32,
    pub modulus: String,
    pub polynomial: String,
    pub generator: String,
    pub trace_mask: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FieldTable {
    pub meta: Meta,
    pub rows: Vec<FieldRow>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct RelationOut {
    /// 1-based coordinates, coordinate 1 being the secret.
    pub coalition: Vec<usize>,
    pub coefficients: String,
    pub recovered: u8,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct SssDemoOut {
    pub meta: Meta,
    pub m: u32,
    pub seed: String,
    pub secret: u8,
    pub message: String,
    /// Shares for coordinates 2..s, one character per bit.
    pub shares: String,
    pub relations: Vec<RelationOut>,
    pub dual_distance: String,
    pub scheme: &'static str,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hash_is_stable_hex() {
        let h = modulus_table_hash();
        assert_eq!(h.len(), 64);
        assert_eq!(h, modulus_table_hash());
    }

    #[test]
    fn status_serializes_kebab() {
        assert_eq!(
            serde_json::to_string(&Status::DiscrepancyLogged).unwrap(),
            "\"discrepancy-logged\""
        );
    }
}
