//! Massey secret sharing on a binary linear code.
//!
//! The secret is coordinate 0 of a codeword `u G`; participant `j >= 1` holds
//! coordinate `j`. A coalition recovers the secret exactly when column 0 of
//! `G` lies in the span of its columns, i.e. when some dual codeword has a one
//! at coordinate 0 and support inside `{0} ∪ coalition`.

use alloc::vec::Vec;

use rand_core::RngCore;

use crate::analysis::{dual_distance, DualDistance, DEFAULT_DUAL_CAP};
use crate::bits::{BinaryMatrix, BitVec, TrackedBasis};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemeKind {
    /// Dual distance 2: some participants belong to every coalition.
    Dictatorial,
    /// Dual distance at least 3.
    Democratic,
}

impl SchemeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Dictatorial => "dictatorial",
            Self::Democratic => "democratic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShareDeal {
    pub secret: u8,
    pub message: u64,
    /// `shares.get(j - 1)` is coordinate `j`.
    pub shares: BitVec,
}

impl ShareDeal {
    pub fn share(&self, coordinate: usize) -> u8 {
        self.shares.get(coordinate - 1) as u8
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecoveryRelation {
    /// Coordinates offered by the coalition, ascending, all `>= 1`.
    pub coalition: Vec<usize>,
    /// One bit per coalition member: the secret is the XOR of the selected shares.
    pub coefficients: Vec<u8>,
}

impl RecoveryRelation {
    /// Coordinates with coefficient one.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coalition
            .iter()
            .zip(&self.coefficients)
            .filter(|(_, &c)| c == 1)
            .map(|(&j, _)| j)
    }
}

#[derive(Clone, Debug)]
pub struct MasseyScheme {
    generator: BinaryMatrix,
    columns: Vec<u64>,
}

impl MasseyScheme {
    pub fn new(generator: BinaryMatrix) -> Result<Self> {
        let columns = generator.columns()?;
        match columns.first() {
            Some(0) => return Err(Error::ZeroColumn(0)),
            None => {
                return Err(Error::CoordinateOutOfRange {
                    coordinate: 0,
                    length: 0,
                })
            }
            _ => {}
        }
        Ok(Self { generator, columns })
    }

    pub fn generator(&self) -> &BinaryMatrix {
        &self.generator
    }

    pub fn length(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, coordinate: usize) -> u64 {
        self.columns[coordinate]
    }

    /// `message . column(coordinate)` over F2.
    pub fn symbol(&self, message: u64, coordinate: usize) -> u8 {
        ((message & self.columns[coordinate]).count_ones() & 1) as u8
    }

    /// Deals from an explicit message; the secret is whatever it encodes.
    pub fn deal_message(&self, message: u64) -> ShareDeal {
        let word = self.generator.encode(message);
        let shares = BitVec::from_bits(word.iter().skip(1));
        ShareDeal {
            secret: word.get(0) as u8,
            message,
            shares,
        }
    }

    /// Uniform message among those with `(u G)_0 = secret`.
    pub fn deal<R: RngCore + ?Sized>(&self, secret: u8, rng: &mut R) -> ShareDeal {
        let rows = self.generator.row_count() as u32;
        let mask = if rows == 64 {
            u64::MAX
        } else {
            (1u64 << rows) - 1
        };
        let mut message = rng.next_u64() & mask;
        if self.symbol(message, 0) != secret & 1 {
            // flipping the lowest bit of column 0 is a bijection between the two cosets
            message ^= self.columns[0] & self.columns[0].wrapping_neg();
        }
        self.deal_message(message)
    }

    /// Solves `column(0) = sum c_j column(j)` over the coalition.
    pub fn find_recovery(&self, coalition: &[usize]) -> Result<Option<RecoveryRelation>> {
        let mut members: Vec<usize> = coalition.to_vec();
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&j| j == 0 || j >= self.length()) {
            return Err(Error::CoordinateOutOfRange {
                coordinate: bad,
                length: self.length(),
            });
        }
        let mut basis = TrackedBasis::new();
        for &j in &members {
            basis.insert(self.columns[j], j);
            if basis.rank() == self.generator.row_count() {
                break;
            }
        }
        let (residue, used) = basis.reduce(self.columns[0]);
        if residue != 0 {
            return Ok(None);
        }
        let coefficients = members
            .iter()
            .map(|j| used.binary_search(j).is_ok() as u8)
            .collect();
        Ok(Some(RecoveryRelation {
            coalition: members,
            coefficients,
        }))
    }

    /// Whether the relation's dual word is orthogonal to every row.
    pub fn is_valid(&self, relation: &RecoveryRelation) -> bool {
        relation.coalition.len() == relation.coefficients.len()
            && relation
                .coalition
                .iter()
                .all(|&j| j >= 1 && j < self.length())
            && relation
                .support()
                .fold(self.columns[0], |acc, j| acc ^ self.columns[j])
                == 0
    }

    pub fn reconstruct(&self, deal: &ShareDeal, relation: &RecoveryRelation) -> Result<u8> {
        if !self.is_valid(relation) || deal.shares.len() + 1 != self.length() {
            return Err(Error::RelationMismatch);
        }
        Ok(relation.support().fold(0u8, |acc, j| acc ^ deal.share(j)))
    }

    /// A coordinate other than 0 whose column equals column 0.
    pub fn duplicate_of_secret(&self) -> Option<usize> {
        self.columns
            .iter()
            .skip(1)
            .position(|&c| c == self.columns[0])
            .map(|p| p + 1)
    }

    pub fn dual_distance(&self) -> Result<DualDistance> {
        dual_distance(&self.generator, DEFAULT_DUAL_CAP)
    }

    pub fn classify(&self) -> Result<SchemeKind> {
        classify(&self.dual_distance()?)
    }
}

/// Dictatorial iff the dual distance is 2, democratic iff at least 3.
pub fn classify(d: &DualDistance) -> Result<SchemeKind> {
    match d {
        DualDistance::Trivial => Err(Error::DualUndefined),
        DualDistance::Exact {
            distance: 1,
            witness,
            ..
        } => Err(Error::ZeroColumn(witness[0])),
        DualDistance::Exact { distance: 2, .. } => Ok(SchemeKind::Dictatorial),
        DualDistance::Exact { .. } | DualDistance::AboveCap { .. } => Ok(SchemeKind::Democratic),
    }
}
