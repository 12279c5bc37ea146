//! The trace code `C(m,2,L) = { (Tr(a x))_{x unit} : a in R_m }` and its Gray image.
//!
//! Gray image layout: coordinate `5 j + i` is coefficient `i` of the trace at the
//! `j`-th unit in canonical order. Messages are packed ring elements, so message
//! bit `j m + k` selects the basis element `v^j x^k`.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::bits::{BinaryMatrix, BitVec};
use crate::error::{Error, Result};
use crate::ring::{unit_count, BaseElement, ParityClass, QuinticRing, RingElement, UnitGroup};

/// Parameters of `C(m,2,L)` and its Gray image.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeSpec {
    pub m: u32,
    pub parity: ParityClass,
    /// Number of ring coordinates, `|R_m^*|`.
    pub length: u64,
    /// Binary length `5 L`.
    pub gray_length: u64,
    /// F2-dimension of the Gray image, `5 m`.
    pub dimension: u32,
}

impl CodeSpec {
    pub fn new(m: u32) -> Result<Self> {
        if !(1..=crate::gf2m::MAX_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        let length = unit_count(m);
        Ok(Self {
            m,
            parity: ParityClass::of(m),
            length,
            gray_length: 5 * length,
            dimension: 5 * m,
        })
    }

    /// `2^(5m)`.
    pub fn codeword_count(&self) -> u64 {
        1u64 << self.dimension
    }

    /// Cost of enumerating every codeword coordinate by coordinate.
    pub fn enumeration_cost(&self) -> u128 {
        self.codeword_count() as u128 * self.length as u128
    }
}

/// Gray map on R: the five coefficients `(a0, a1, a2, a3, a4)`.
pub fn gray(r: BaseElement) -> [u8; 5] {
    core::array::from_fn(|i| r.coefficient(i))
}

pub fn lee_weight(r: BaseElement) -> u32 {
    r.bits().count_ones()
}

/// Gray image of a word over R.
pub fn gray_image(word: &[BaseElement]) -> BitVec {
    let mut out = BitVec::zeros(5 * word.len());
    for (j, r) in word.iter().enumerate() {
        for i in 0..5 {
            if r.coefficient(i) == 1 {
                out.set(5 * j + i, true);
            }
        }
    }
    out
}

/// A materialized trace code (`m <= 4`).
#[derive(Clone, Debug)]
pub struct TraceCode {
    ring: QuinticRing,
    spec: CodeSpec,
    units: UnitGroup,
    /// `unit_planes[b]` bit `j` is bit `b` of the `j`-th packed unit.
    unit_planes: Vec<BitVec>,
}

impl TraceCode {
    pub fn new(m: u32) -> Result<Self> {
        let spec = CodeSpec::new(m)?;
        let ring = QuinticRing::new(m)?;
        let units = UnitGroup::new(&ring)?;
        let mut unit_planes = vec![BitVec::zeros(units.len()); spec.dimension as usize];
        for (j, &u) in units.packed().iter().enumerate() {
            let mut bits = u;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                unit_planes[b].set(j, true);
                bits &= bits - 1;
            }
        }
        Ok(Self {
            ring,
            spec,
            units,
            unit_planes,
        })
    }

    pub fn ring(&self) -> &QuinticRing {
        &self.ring
    }

    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    pub fn units(&self) -> &UnitGroup {
        &self.units
    }

    pub fn unit(&self, j: usize) -> RingElement {
        RingElement::unpack(self.units.packed()[j], self.spec.m)
    }

    /// `ev(a)`: `Tr(a u_j)` for every unit `u_j` in canonical order.
    pub fn evaluate(&self, a: &RingElement) -> Vec<BaseElement> {
        let m = self.spec.m;
        self.units
            .packed()
            .iter()
            .map(|&u| {
                self.ring
                    .trace(&self.ring.mul(a, &RingElement::unpack(u, m)))
            })
            .collect()
    }

    pub fn gray_codeword(&self, a: &RingElement) -> BitVec {
        gray_image(&self.evaluate(a))
    }

    /// The five functionals `x -> tr((a x)_i)` as masks over packed `x`.
    ///
    /// `(a x)_i = sum_r a_{i-r} x_r`, and `tr(a_{i-r} x_r)` reads `x_r` through
    /// the mask `tau(a_{i-r})`.
    pub fn coordinate_functionals(&self, a: &RingElement) -> [u64; 5] {
        let m = self.spec.m;
        core::array::from_fn(|i| {
            (0..5).fold(0u64, |acc, r| {
                let coeff = a.0[(i + 5 - r) % 5];
                acc | (self.ring.trace_functional(coeff) as u64) << (r as u32 * m)
            })
        })
    }

    /// Hamming weight of the Gray image of `ev(a)`, without building the word.
    pub fn codeword_lee_weight(&self, a: &RingElement) -> u64 {
        let mut scratch = BitVec::zeros(self.units.len());
        self.functional_weight(&self.coordinate_functionals(a), &mut scratch)
    }

    fn functional_weight(&self, functionals: &[u64; 5], scratch: &mut BitVec) -> u64 {
        let mut total = 0;
        for &f in functionals {
            if f == 0 {
                continue;
            }
            scratch.words_mut().fill(0);
            let mut bits = f;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                scratch.xor_assign(&self.unit_planes[b]);
                bits &= bits - 1;
            }
            total += scratch.count_ones();
        }
        total
    }

    /// `sum over the Gray image of (-1)^bit`, by direct ring multiplication.
    pub fn theta(&self, a: &RingElement) -> i64 {
        let m = self.spec.m;
        let ones: u64 = self
            .units
            .packed()
            .iter()
            .map(|&u| {
                let prod = self.ring.mul(a, &RingElement::unpack(u, m));
                prod.0
                    .iter()
                    .map(|&c| self.ring.field().tr(c) as u64)
                    .sum::<u64>()
            })
            .sum();
        self.spec.gray_length as i64 - 2 * ones as i64
    }

    /// Packed generator-matrix columns, one per Gray coordinate.
    ///
    /// Column `(u, i)` bit `j m + k` is `tr(x^k u_{i-j})`.
    pub fn gray_columns(&self) -> Vec<u64> {
        let m = self.spec.m;
        let mut out = Vec::with_capacity(self.spec.gray_length as usize);
        for &packed in self.units.packed() {
            let u = RingElement::unpack(packed, m);
            let tau = u.0.map(|c| self.ring.trace_functional(c) as u64);
            for i in 0..5 {
                out.push((0..5).fold(0u64, |acc, j| acc | tau[(i + 5 - j) % 5] << (j as u32 * m)));
            }
        }
        out
    }

    /// `5m x s` generator matrix of the Gray image; row `b` is the image of basis element `b`.
    pub fn generator_matrix(&self) -> BinaryMatrix {
        BinaryMatrix::from_columns(self.spec.dimension as usize, &self.gray_columns())
            .expect("5m <= 20 rows")
    }

    /// `Theta(a)` for every message at once: the Walsh-Hadamard transform of
    /// the column multiset.
    pub fn theta_spectrum(&self) -> Vec<i64> {
        let mut spectrum = vec![0i64; self.spec.codeword_count() as usize];
        for c in self.gray_columns() {
            spectrum[c as usize] += 1;
        }
        walsh_hadamard(&mut spectrum);
        spectrum
    }

    pub fn enumerator(&self) -> CodewordEnumerator {
        CodewordEnumerator::new(self.generator_matrix())
    }
}

/// In-place unnormalized Walsh-Hadamard transform; length must be a power of two.
pub fn walsh_hadamard(data: &mut [i64]) {
    let n = data.len();
    assert!(n.is_power_of_two());
    let mut h = 1;
    while h < n {
        for block in data.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (x, y) in lo.iter_mut().zip(hi.iter_mut()) {
                let (a, b) = (*x, *y);
                *x = a + b;
                *y = a - b;
            }
        }
        h *= 2;
    }
}

/// Walks the message space in reflected Gray-code order so consecutive
/// codewords differ by one generator row.
#[derive(Clone, Debug)]
pub struct CodewordEnumerator {
    generator: BinaryMatrix,
}

impl CodewordEnumerator {
    pub fn new(generator: BinaryMatrix) -> Self {
        Self { generator }
    }

    pub fn message_count(&self) -> u64 {
        1u64 << self.generator.row_count()
    }

    /// Calls `visit(message, weight)` for Gray-code steps `steps`. Disjoint step
    /// ranges cover disjoint message sets.
    pub fn for_each_in(&self, steps: Range<u64>, mut visit: impl FnMut(u64, u64)) {
        if steps.is_empty() {
            return;
        }
        let first = steps.start ^ (steps.start >> 1);
        let mut word = self.generator.encode(first);
        visit(first, word.count_ones());
        for t in steps.start + 1..steps.end {
            let row = t.trailing_zeros() as usize;
            word.xor_assign(self.generator.row(row));
            visit(t ^ (t >> 1), word.count_ones());
        }
    }

    /// Weight histogram over the given Gray-code steps.
    pub fn histogram(&self, steps: Range<u64>) -> alloc::collections::BTreeMap<u64, u64> {
        let mut hist = alloc::collections::BTreeMap::new();
        self.for_each_in(steps, |_, w| *hist.entry(w).or_insert(0) += 1);
        hist
    }

    /// Weight of every message, indexed by message.
    pub fn weights(&self) -> Vec<u64> {
        let mut out = vec![0; self.message_count() as usize];
        self.for_each_in(0..self.message_count(), |msg, w| out[msg as usize] = w);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gray_map_values() {
        assert_eq!(gray(BaseElement::ZERO), [0; 5]);
        assert_eq!(gray(BaseElement::new(0b00011)), [1, 1, 0, 0, 0]);
        assert_eq!(gray(BaseElement::new(0b11111)), [1; 5]);
        assert_eq!(lee_weight(BaseElement::new(0b01010)), 2);
        assert_eq!(lee_weight(BaseElement::new(0b11111)), 5);
        assert_eq!(lee_weight(BaseElement::ZERO), 0);
    }

    #[test]
    fn spec_lengths() {
        let s = CodeSpec::new(2).unwrap();
        assert_eq!((s.length, s.gray_length, s.dimension), (675, 3375, 10));
        assert_eq!(s.codeword_count(), 1024);
        let s = CodeSpec::new(12).unwrap();
        assert_eq!(s.length, 4095u64.pow(5));
        assert!(CodeSpec::new(13).is_err());
    }

    #[test]
    fn all_ones_message_at_m1() {
        let code = TraceCode::new(1).unwrap();
        let word = code.evaluate(&RingElement::all_ones());
        assert!(word.iter().all(|&r| r == BaseElement::new(0b11111)));
        assert_eq!(code.codeword_lee_weight(&RingElement::all_ones()), 75);
        assert_eq!(code.codeword_lee_weight(&RingElement::ONE), 35);
        assert_eq!(code.codeword_lee_weight(&RingElement::ZERO), 0);
        assert_eq!(code.theta(&RingElement::ZERO), 75);
    }

    #[test]
    fn three_routes_agree_exhaustively_small() {
        for m in 1..=2 {
            let code = TraceCode::new(m).unwrap();
            let spectrum = code.theta_spectrum();
            let enumerated = code.enumerator().weights();
            for p in 0..code.spec().codeword_count() {
                let a = RingElement::unpack(p, m);
                let direct = code.gray_codeword(&a).count_ones();
                assert_eq!(code.codeword_lee_weight(&a), direct);
                assert_eq!(enumerated[p as usize], direct);
                let theta = code.theta(&a);
                assert_eq!(spectrum[p as usize], theta);
                assert_eq!(2 * direct as i64, code.spec().gray_length as i64 - theta);
            }
        }
    }

    #[test]
    fn generator_rows_are_basis_codewords() {
        let code = TraceCode::new(2).unwrap();
        let g = code.generator_matrix();
        assert_eq!((g.row_count(), g.col_count()), (10, 3375));
        assert_eq!(g.rank(), 10);
        for b in 0..10 {
            let a = RingElement::unpack(1 << b, 2);
            assert_eq!(g.row(b), &code.gray_codeword(&a));
        }
    }

    #[test]
    fn walsh_hadamard_small() {
        let mut d = [1, 0, 0, 0];
        walsh_hadamard(&mut d);
        assert_eq!(d, [1, 1, 1, 1]);
        let mut d = [0, 1, 0, 0];
        walsh_hadamard(&mut d);
        assert_eq!(d, [1, -1, 1, -1]);
    }
}
