//! Arithmetic in F_{2^m} for 1 <= m <= 12.
//!
//! Elements live in the polynomial basis of a fixed modulus: bit `k` of a
//! [`FieldElement`] is the coefficient of `x^k`. Multiplication is plain
//! shift-and-XOR with reduction, no log tables.
//!
//! ```text
//!  m  modulus                 m  modulus
//!  1  x + 1                   7  x^7 + x + 1
//!  2  x^2 + x + 1             8  x^8 + x^4 + x^3 + x + 1
//!  3  x^3 + x + 1             9  x^9 + x + 1
//!  4  x^4 + x + 1            10  x^10 + x^3 + 1
//!  5  x^5 + x^2 + 1          11  x^11 + x^2 + 1
//!  6  x^6 + x + 1            12  x^12 + x^3 + 1
//! ```
//!
//! Each entry is the minimum-weight irreducible with nonzero constant term,
//! smallest as an integer among those of that weight.

use core::fmt;
use core::ops::{Add, AddAssign};

use crate::error::{Error, Result};

pub const MAX_DEGREE: u32 = 12;

/// One irreducible modulus per degree, `MODULI[m - 1]`, bit `k` = coefficient of `x^k`.
pub const MODULI: [u32; MAX_DEGREE as usize] = [
    0b11, 0b111, 0b1011, 0x13, 0x25, 0x43, 0x83, 0x11b, 0x203, 0x409, 0x805, 0x1009,
];

/// An element of F_{2^m} in the polynomial basis.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: Self = Self(0);
    pub const ONE: Self = Self(1);

    /// Wraps raw bits without reduction. Use [`FieldContext::element`] for checked input.
    #[inline]
    pub const fn from_bits_unchecked(bits: u16) -> Self {
        Self(bits)
    }

    #[inline]
    pub const fn bits(self) -> u16 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({:#x})", self.0)
    }
}

impl Add for FieldElement {
    type Output = Self;

    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Self) -> Self {
        Self(self.0 ^ rhs.0)
    }
}

impl AddAssign for FieldElement {
    #[inline]
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: Self) {
        self.0 ^= rhs.0;
    }
}

/// A concrete model of F_{2^m}. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldContext {
    m: u32,
    modulus: u32,
    generator: FieldElement,
    /// Bit `k` is `tr(x^k)`, so `tr(y) = parity(y & trace_mask)`.
    trace_mask: u16,
}

impl FieldContext {
    /// Builds F_{2^m} from the built-in modulus table.
    pub fn new(m: u32) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        let modulus = MODULI[(m - 1) as usize];
        if !is_irreducible(modulus) {
            return Err(Error::ReducibleModulus(modulus));
        }
        let mut ctx = Self {
            m,
            modulus,
            generator: FieldElement::ONE,
            trace_mask: 0,
        };
        let mut mask = 0u16;
        for k in 0..m {
            if ctx.trace_by_frobenius(FieldElement(1 << k)) == FieldElement::ONE {
                mask |= 1 << k;
            }
        }
        ctx.trace_mask = mask;
        ctx.generator = ctx.find_generator();
        Ok(ctx)
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    #[inline]
    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    /// Number of elements, `2^m`.
    #[inline]
    pub fn size(&self) -> u32 {
        1 << self.m
    }

    /// Order of the multiplicative group, `2^m - 1`.
    #[inline]
    pub fn group_order(&self) -> u64 {
        (1u64 << self.m) - 1
    }

    #[inline]
    pub fn mask(&self) -> u16 {
        ((1u32 << self.m) - 1) as u16
    }

    #[inline]
    pub fn trace_mask(&self) -> u16 {
        self.trace_mask
    }

    pub fn element(&self, bits: u16) -> Result<FieldElement> {
        if bits & !self.mask() != 0 {
            return Err(Error::NotReduced {
                value: bits as u64,
                m: self.m,
            });
        }
        Ok(FieldElement(bits))
    }

    /// All field elements in ascending bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size()).map(|b| FieldElement(b as u16))
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        a + b
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let mut a = a.0 as u32;
        let mut b = b.0;
        let mut acc = 0u32;
        let top = 1u32 << self.m;
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.modulus;
            }
        }
        FieldElement(acc as u16)
    }

    #[inline]
    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn pow(&self, base: FieldElement, mut exp: u64) -> FieldElement {
        let mut result = FieldElement::ONE;
        let mut base = base;
        while exp != 0 {
            if exp & 1 != 0 {
                result = self.mul(result, base);
            }
            base = self.square(base);
            exp >>= 1;
        }
        result
    }

    /// `a^(2^m - 2)`, the inverse of a nonzero element.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.group_order() - 1))
    }

    /// Absolute trace down to F2, returned as 0 or 1.
    #[inline]
    pub fn tr(&self, a: FieldElement) -> u8 {
        ((a.0 & self.trace_mask).count_ones() & 1) as u8
    }

    /// `a + a^2 + ... + a^(2^(m-1))`, computed literally.
    pub fn trace_by_frobenius(&self, a: FieldElement) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        let mut y = a;
        for _ in 0..self.m {
            acc += y;
            y = self.square(y);
        }
        acc
    }

    pub fn multiplicative_order(&self, a: FieldElement) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let n = self.group_order();
        let mut order = n;
        for p in prime_factors(n) {
            while order.is_multiple_of(p) && self.pow(a, order / p) == FieldElement::ONE {
                order /= p;
            }
        }
        Some(order)
    }

    /// `generator^((2^m - 1) / n)`, an element of order exactly `n`.
    pub fn element_of_order(&self, n: u64) -> Result<FieldElement> {
        let group = self.group_order();
        if n == 0 || !group.is_multiple_of(n) {
            return Err(Error::OrderDoesNotDivide {
                order: n,
                m: self.m,
            });
        }
        Ok(self.pow(self.generator, group / n))
    }

    fn find_generator(&self) -> FieldElement {
        let n = self.group_order();
        (1..self.size())
            .map(|b| FieldElement(b as u16))
            .find(|&c| self.multiplicative_order(c) == Some(n))
            .expect("multiplicative group of a finite field is cyclic")
    }
}

/// Distinct prime factors by trial division; `n` is at most `2^12 - 1`.
fn prime_factors(mut n: u64) -> impl Iterator<Item = u64> {
    let mut out = [0u64; 8];
    let mut len = 0;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out[len] = p;
            len += 1;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out[len] = n;
        len += 1;
    }
    out.into_iter().take(len)
}

/// Remainder of `a` modulo `b` as polynomials over F2.
pub fn poly_rem(mut a: u32, b: u32) -> u32 {
    assert!(b != 0, "division by the zero polynomial");
    let db = 31 - b.leading_zeros();
    while a != 0 && 31 - a.leading_zeros() >= db {
        a ^= b << (31 - a.leading_zeros() - db);
    }
    a
}

/// Exhaustive factor check: no polynomial of degree `1..=deg/2` divides `poly`.
pub fn is_irreducible(poly: u32) -> bool {
    if poly < 2 {
        return false;
    }
    let deg = 31 - poly.leading_zeros();
    let max_factor_deg = deg / 2;
    (2u32..(1 << (max_factor_deg + 1))).all(|f| poly_rem(poly, f) != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_table_is_irreducible_and_minimal_weight() {
        for m in 1..=MAX_DEGREE {
            let modulus = MODULI[(m - 1) as usize];
            assert_eq!(31 - modulus.leading_zeros(), m);
            assert!(is_irreducible(modulus), "m = {m}");
            let w = modulus.count_ones();
            let better = ((1u32 << m)..(1 << (m + 1)))
                .filter(|&p| p & 1 == 1 && is_irreducible(p))
                .find(|&p| p.count_ones() < w || (p.count_ones() == w && p < modulus));
            assert_eq!(better, None, "m = {m}");
        }
    }

    #[test]
    fn small_moduli() {
        assert_eq!(FieldContext::new(1).unwrap().modulus(), 0b11);
        assert_eq!(FieldContext::new(2).unwrap().modulus(), 0b111);
        assert!(is_irreducible(0b10011));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2
        assert!(!is_irreducible(0b10101));
        assert!(!is_irreducible(0b101));
    }

    #[test]
    fn out_of_range_degree() {
        assert_eq!(FieldContext::new(0), Err(Error::DegreeOutOfRange(0)));
        assert_eq!(FieldContext::new(13), Err(Error::DegreeOutOfRange(13)));
    }

    #[test]
    fn f4_omega_squared() {
        let f = FieldContext::new(2).unwrap();
        let w = FieldElement(0b10);
        assert_eq!(f.mul(w, w), FieldElement(0b11));
        assert_eq!(f.tr(w), 1);
        assert_eq!(f.trace_by_frobenius(w), FieldElement::ONE);
    }

    #[test]
    fn prime_field_trace_is_identity() {
        let f = FieldContext::new(1).unwrap();
        assert_eq!(f.tr(FieldElement::ZERO), 0);
        assert_eq!(f.tr(FieldElement::ONE), 1);
        assert_eq!(f.generator(), FieldElement::ONE);
    }

    #[test]
    fn inverses_exhaustive_up_to_m8() {
        for m in 1..=8 {
            let f = FieldContext::new(m).unwrap();
            for x in f.elements().skip(1) {
                assert_eq!(f.mul(x, f.inv(x).unwrap()), FieldElement::ONE);
            }
            assert_eq!(f.inv(FieldElement::ZERO), Err(Error::ZeroInverse));
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for m in 1..=4 {
            let f = FieldContext::new(m).unwrap();
            for a in f.elements() {
                assert_eq!(a + a, FieldElement::ZERO);
                assert_eq!(f.tr(f.square(a)), f.tr(a));
                for b in f.elements() {
                    assert_eq!(f.square(a + b), f.square(a) + f.square(b));
                    assert_eq!(f.tr(a + b), f.tr(a) ^ f.tr(b));
                    for c in f.elements() {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, b + c), f.mul(a, b) + f.mul(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn trace_mask_matches_frobenius_sum() {
        for m in 1..=MAX_DEGREE {
            let f = FieldContext::new(m).unwrap();
            let mut seen = [false; 2];
            for x in f.elements() {
                let t = f.trace_by_frobenius(x);
                assert!(t == FieldElement::ZERO || t == FieldElement::ONE);
                assert_eq!(t.bits() as u8, f.tr(x));
                seen[f.tr(x) as usize] = true;
            }
            assert_eq!(seen, [true, true], "trace onto F2 for m = {m}");
        }
    }

    #[test]
    fn additive_character_sums_vanish() {
        for m in 1..=8 {
            let f = FieldContext::new(m).unwrap();
            for z in f.elements().skip(1) {
                let sum: i64 = f
                    .elements()
                    .map(|x| if f.tr(f.mul(z, x)) == 0 { 1 } else { -1 })
                    .sum();
                assert_eq!(sum, 0, "m = {m}, z = {z:?}");
            }
        }
    }

    #[test]
    fn generator_has_full_order() {
        for m in 1..=MAX_DEGREE {
            let f = FieldContext::new(m).unwrap();
            assert_eq!(f.multiplicative_order(f.generator()), Some(f.group_order()));
        }
    }

    #[test]
    fn elements_of_small_order() {
        let f2 = FieldContext::new(2).unwrap();
        assert_eq!(f2.element_of_order(1).unwrap(), FieldElement::ONE);
        let w = f2.element_of_order(3).unwrap();
        assert_eq!(f2.square(w) + w + FieldElement::ONE, FieldElement::ZERO);

        let f4 = FieldContext::new(4).unwrap();
        let e = f4.element_of_order(5).unwrap();
        assert_ne!(e, FieldElement::ONE);
        assert_eq!(f4.pow(e, 5), FieldElement::ONE);
        // e is a root of 1 + v + v^2 + v^3 + v^4
        let mut s = FieldElement::ZERO;
        for i in 0..5 {
            s += f4.pow(e, i);
        }
        assert_eq!(s, FieldElement::ZERO);

        assert_eq!(
            FieldContext::new(3).unwrap().element_of_order(3),
            Err(Error::OrderDoesNotDivide { order: 3, m: 3 })
        );
        assert!(FieldContext::new(6).unwrap().element_of_order(5).is_err());
    }

    #[test]
    fn unreduced_input_rejected() {
        let f = FieldContext::new(3).unwrap();
        assert!(f.element(0b111).is_ok());
        assert_eq!(f.element(0b1000), Err(Error::NotReduced { value: 8, m: 3 }));
    }
}
