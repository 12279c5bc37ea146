//! Weight distributions of the Gray images: exact enumeration, closed forms,
//! and CRT-class measurement.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand_core::RngCore;

use crate::code::{CodeSpec, TraceCode};
use crate::error::{Error, Result};
use crate::gf2m::FieldElement;
use crate::ring::{ParityClass, WeightClass};

/// Default operation budget for exhaustive enumeration (`2^(5m) * L`); admits m <= 3.
pub const DEFAULT_ENUMERATION_BUDGET: u128 = 10_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Enumerated,
    Theoretical,
    Classified,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Enumerated => "enumerated",
            Self::Theoretical => "theoretical",
            Self::Classified => "classified",
        }
    }
}

/// Weight -> frequency, including weight 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    pub spec: CodeSpec,
    pub provenance: Provenance,
    pub entries: BTreeMap<u64, u64>,
}

impl WeightDistribution {
    pub fn new(spec: CodeSpec, provenance: Provenance, entries: BTreeMap<u64, u64>) -> Self {
        Self {
            spec,
            provenance,
            entries,
        }
    }

    pub fn total(&self) -> u128 {
        self.entries.values().map(|&f| f as u128).sum()
    }

    /// `sum weight * frequency`.
    pub fn first_moment(&self) -> u128 {
        self.entries
            .iter()
            .map(|(&w, &f)| w as u128 * f as u128)
            .sum()
    }

    /// `s * 2^(5m - 1)`: every Gray coordinate is balanced over the code.
    pub fn expected_first_moment(&self) -> u128 {
        self.spec.gray_length as u128 * (self.spec.codeword_count() as u128 / 2)
    }

    pub fn nonzero_weights(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.entries
            .iter()
            .filter(|(&w, _)| w != 0)
            .map(|(&w, &f)| (w, f))
    }

    pub fn min_nonzero_weight(&self) -> Option<u64> {
        self.nonzero_weights().map(|(w, _)| w).next()
    }

    pub fn max_weight(&self) -> Option<u64> {
        self.nonzero_weights().map(|(w, _)| w).last()
    }

    /// Total `2^(5m)`, a single zero codeword, balanced first moment.
    pub fn satisfies_invariants(&self) -> bool {
        self.total() == self.spec.codeword_count() as u128
            && self.entries.get(&0) == Some(&1)
            && self.first_moment() == self.expected_first_moment()
    }

    /// Same entries regardless of provenance.
    pub fn same_entries(&self, other: &Self) -> bool {
        self.spec == other.spec && self.entries == other.entries
    }
}

fn budget_check(spec: &CodeSpec, budget: u128) -> Result<()> {
    let needed = spec.enumeration_cost();
    if needed > budget {
        return Err(Error::BudgetExceeded {
            what: "exhaustive enumeration",
            needed,
            budget,
        });
    }
    Ok(())
}

/// Checks the enumeration budget before anything is materialized.
pub fn check_enumeration_budget(m: u32, budget: u128) -> Result<CodeSpec> {
    let spec = CodeSpec::new(m)?;
    budget_check(&spec, budget)?;
    Ok(spec)
}

/// Exact histogram over every codeword, single-threaded.
pub fn enumerate_distribution(m: u32, budget: u128) -> Result<WeightDistribution> {
    let spec = check_enumeration_budget(m, budget)?;
    let code = TraceCode::new(m)?;
    let e = code.enumerator();
    let entries = e.histogram(0..e.message_count());
    Ok(WeightDistribution::new(
        spec,
        Provenance::Enumerated,
        entries,
    ))
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn pow2(e: u32) -> BigUint {
    BigUint::one() << e as usize
}

fn to_u64(x: &BigUint) -> u64 {
    x.to_u64().expect("value fits in 64 bits for m <= 12")
}

/// `(weight, frequency)` rows of the closed-form tables, as exact integers.
pub fn closed_form_rows(m: u32) -> Result<Vec<(BigUint, BigUint)>> {
    CodeSpec::new(m)?;
    let q = pow2(m);
    let q1 = &q - 1u32;
    let five = big(5);
    let rows = match ParityClass::of(m) {
        ParityClass::Odd => {
            let q4m1 = pow2(4 * m) - 1u32;
            alloc::vec![
                (
                    &five * (pow2(5 * m - 1) - pow2(4 * m - 1) - pow2(m - 1)),
                    &q1 * &q4m1,
                ),
                (&five * (pow2(5 * m - 1) - pow2(4 * m - 1)), q4m1.clone()),
                (&five * (pow2(5 * m - 1) - pow2(m - 1)), q1.clone()),
            ]
        }
        ParityClass::SinglyEven => {
            let q2m1 = pow2(2 * m) - 1u32;
            let sq = &q2m1 * &q2m1;
            alloc::vec![
                (
                    &five * &q2m1 * (pow2(3 * m - 1) - pow2(2 * m - 1) - pow2(m - 1)),
                    big(2) * &q1 * &q2m1,
                ),
                (
                    &five * &q1 * (pow2(2 * m - 1) - 1u32) * pow2(2 * m),
                    sq.clone(),
                ),
                ((&five * (&q1 * &sq + 1u32)) >> 1, &q1 * &sq),
                (&five * &q1 * &q2m1 * pow2(2 * m - 1), big(2) * &q2m1),
                (&five * &sq * pow2(m - 1), q1.clone()),
            ]
        }
        ParityClass::DoublyEven => {
            let p = |e: u32| q1.pow(e);
            alloc::vec![
                (&five * p(3) * (&q - 2u32) * pow2(m - 1), big(10) * p(2),),
                (
                    &five * &q1 * (&q - 2u32) * (pow2(2 * m) + 2u32 - pow2(m + 1)) * pow2(m - 1),
                    &five * p(4),
                ),
                ((&five * (p(5) + 1u32)) >> 1, p(5)),
                (
                    &five
                        * p(2)
                        * (pow2(3 * m - 1) + big(3) * pow2(m - 1) - big(3) * pow2(2 * m - 1)),
                    big(10) * p(3),
                ),
                (&five * p(4) * pow2(m - 1), &five * &q1),
            ]
        }
    };
    Ok(rows)
}

/// Closed-form distribution for any supported m.
pub fn theoretical_distribution(m: u32) -> Result<WeightDistribution> {
    let spec = CodeSpec::new(m)?;
    let mut entries = BTreeMap::new();
    entries.insert(0, 1);
    for (w, f) in closed_form_rows(m)? {
        *entries.entry(to_u64(&w)).or_insert(0) += to_u64(&f);
    }
    Ok(WeightDistribution::new(
        spec,
        Provenance::Theoretical,
        entries,
    ))
}

/// Reference doubly-even rows as commonly tabulated: identical to
/// [`closed_form_rows`] except the fourth weight, printed there as
/// `5 (2^m-1)^2 (2^(3m-1) - 2^(2m-1) + 2^(m-1))`. That variant breaks the
/// first-moment identity, so it is kept only for adjudication.
pub fn reference_doubly_even_rows(m: u32) -> Result<Vec<(u64, u64)>> {
    if ParityClass::of(m) != ParityClass::DoublyEven {
        return Err(Error::WrongParityClass {
            m,
            required: ParityClass::DoublyEven,
        });
    }
    let mut rows = closed_form_rows(m)?;
    let q1 = pow2(m) - 1u32;
    rows[3].0 = big(5) * q1.pow(2) * (pow2(3 * m - 1) + pow2(m - 1) - pow2(2 * m - 1));
    Ok(rows.iter().map(|(w, f)| (to_u64(w), to_u64(f))).collect())
}

/// Per-class weights attributed by the reference case analysis, keyed by the
/// number of nonzero CRT components (1..=5).
pub fn reference_class_weights(m: u32) -> Result<[(u32, u64); 5]> {
    let rows = reference_doubly_even_rows(m)?;
    Ok([
        (1, rows[1].0),
        (2, rows[3].0),
        (3, rows[0].0),
        (4, rows[4].0),
        (5, rows[2].0),
    ])
}

impl WeightClass {
    /// `Theta` for this class: `5 * prod_f g_f`, with `g_f = -1` when the
    /// component in factor `f` is nonzero and `2^(m deg f) - 1` when it vanishes.
    pub fn theta(&self, m: u32) -> i128 {
        let prod: i128 = self
            .class
            .factor_degrees()
            .iter()
            .enumerate()
            .map(|(f, &d)| {
                if (self.zero_pattern >> f) & 1 == 1 {
                    (1i128 << (m * d)) - 1
                } else {
                    -1
                }
            })
            .product();
        5 * prod
    }

    /// Predicted Gray weight `(s - Theta) / 2`.
    pub fn weight(&self, m: u32) -> u64 {
        let s = CodeSpec::new(m).expect("supported m").gray_length as i128;
        ((s - self.theta(m)) / 2) as u64
    }

    /// Number of ring elements in the class.
    pub fn size(&self, m: u32) -> u64 {
        self.class
            .factor_degrees()
            .iter()
            .enumerate()
            .filter(|(f, _)| (self.zero_pattern >> f) & 1 == 0)
            .map(|(_, &d)| (1u64 << (m * d)) - 1)
            .product()
    }

    /// All `2^(factor count)` classes of a parity class.
    pub fn all(class: ParityClass) -> impl Iterator<Item = Self> {
        let n = class.factor_degrees().len();
        (0..1u8 << n).map(move |zero_pattern| Self {
            class,
            zero_pattern,
        })
    }
}

/// One CRT zero-pattern orbit of the doubly-even classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRecord {
    pub nonzero_components: u32,
    /// Number of ring elements, counted by enumeration.
    pub size: u64,
    /// Weight shared by every measured representative.
    pub weight: u64,
    /// `(packed element, measured weight)`.
    pub representatives: Vec<(u64, u64)>,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub distribution: WeightDistribution,
    /// Indexed by the number of nonzero components, 0..=5.
    pub classes: Vec<ClassRecord>,
}

/// Measures the doubly-even distribution through the CRT decomposition.
///
/// Class sizes come from decomposing every ring element; each class weight is
/// measured on a canonical representative plus `extra` random ones, and all
/// must agree.
pub fn classified_distribution<R: RngCore + ?Sized>(
    code: &TraceCode,
    extra: usize,
    rng: &mut R,
) -> Result<Classification> {
    let ring = code.ring();
    let m = ring.m();
    if ring.parity_class() != ParityClass::DoublyEven {
        return Err(Error::WrongParityClass {
            m,
            required: ParityClass::DoublyEven,
        });
    }
    let mut sizes = [0u64; 6];
    for p in 0..ring.size() {
        let comps = ring.crt_decompose(&crate::ring::RingElement::unpack(p, m))?;
        sizes[comps.iter().filter(|c| !c.is_zero()).count()] += 1;
    }

    let field = ring.field();
    let mut classes = Vec::with_capacity(6);
    for k in 0..=5u32 {
        let mut reps = Vec::new();
        let canonical: [FieldElement; 5] = core::array::from_fn(|j| {
            if (j as u32) < k {
                FieldElement::ONE
            } else {
                FieldElement::ZERO
            }
        });
        reps.push(ring.crt_recompose(&canonical)?);
        if k > 0 {
            for _ in 0..extra {
                let support = random_support(k, rng);
                let comps: [FieldElement; 5] = core::array::from_fn(|j| {
                    if (support >> j) & 1 == 1 {
                        let nonzero = 1 + (rng.next_u32() as u64 % field.group_order());
                        FieldElement::from_bits_unchecked(nonzero as u16)
                    } else {
                        FieldElement::ZERO
                    }
                });
                reps.push(ring.crt_recompose(&comps)?);
            }
        }
        let measured: Vec<(u64, u64)> = reps
            .iter()
            .map(|a| (a.pack(m), code.codeword_lee_weight(a)))
            .collect();
        let weight = measured[0].1;
        if let Some(&(_, other)) = measured.iter().find(|(_, w)| *w != weight) {
            return Err(Error::InconsistentClass {
                nonzero_components: k,
                first: weight,
                other,
            });
        }
        classes.push(ClassRecord {
            nonzero_components: k,
            size: sizes[k as usize],
            weight,
            representatives: measured,
        });
    }

    let mut entries = BTreeMap::new();
    for c in &classes {
        *entries.entry(c.weight).or_insert(0) += c.size;
    }
    Ok(Classification {
        distribution: WeightDistribution::new(*code.spec(), Provenance::Classified, entries),
        classes,
    })
}

/// Uniform `k`-subset of `{0..5}` as a bitmask.
fn random_support<R: RngCore + ?Sized>(k: u32, rng: &mut R) -> u8 {
    let subsets: Vec<u8> = (0u8..32).filter(|s| s.count_ones() == k).collect();
    subsets[rng.next_u32() as usize % subsets.len()]
}
