//! The ring R_m = F_{2^m}[v]/(v^5 - 1).
//!
//! Over F_{2^m} the polynomial v^5 - 1 splits as
//!
//! ```text
//! m odd            (1 + v)(1 + v + v^2 + v^3 + v^4)
//! m = 2 (mod 4)    (1 + v)(1 + w^2 v + v^2)(1 + w v + v^2)       w of order 3
//! m = 0 (mod 4)    (v + 1)(v + e)(v + e^2)(v + e^3)(v + e^4)    e of order 5
//! ```
//!
//! so R_m is a product of 2, 3 or 5 fields. An element is a unit iff each of
//! its CRT components is nonzero. [`QuinticRing::is_unit`] decides that with
//! a polynomial gcd; [`UnitProfile`] recomputes the same components from
//! explicit linear forms in the coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign};

use rand_core::RngCore;

use crate::error::{Error, Result};
use crate::gf2m::{FieldContext, FieldElement};

/// Largest m for which the unit group is materialized (2^20 ring elements).
pub const MATERIALIZE_LIMIT: u32 = 4;

/// Splitting type of v^5 - 1 over F_{2^m}, fixed by m mod 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParityClass {
    Odd,
    SinglyEven,
    DoublyEven,
}

impl ParityClass {
    pub fn of(m: u32) -> Self {
        match m % 4 {
            0 => Self::DoublyEven,
            2 => Self::SinglyEven,
            _ => Self::Odd,
        }
    }

    /// Degrees of the irreducible factors of v^5 - 1, in profile order.
    pub fn factor_degrees(self) -> &'static [u32] {
        match self {
            Self::Odd => &[1, 4],
            Self::SinglyEven => &[1, 2, 2],
            Self::DoublyEven => &[1, 1, 1, 1, 1],
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Odd => "odd",
            Self::SinglyEven => "singly-even",
            Self::DoublyEven => "doubly-even",
        }
    }
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `c0 + c1 v + c2 v^2 + c3 v^3 + c4 v^4` with coefficients in F_{2^m}.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Debug)]
pub struct RingElement(pub [FieldElement; 5]);

impl RingElement {
    pub const ZERO: Self = Self([FieldElement::ZERO; 5]);
    pub const ONE: Self = Self([
        FieldElement::ONE,
        FieldElement::ZERO,
        FieldElement::ZERO,
        FieldElement::ZERO,
        FieldElement::ZERO,
    ]);

    pub fn v_power(i: usize) -> Self {
        let mut c = [FieldElement::ZERO; 5];
        c[i % 5] = FieldElement::ONE;
        Self(c)
    }

    /// `1 + v + v^2 + v^3 + v^4`.
    pub fn all_ones() -> Self {
        Self([FieldElement::ONE; 5])
    }

    #[inline]
    pub fn coeffs(&self) -> &[FieldElement; 5] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Multiplication by `v`: `(c0,c1,c2,c3,c4) -> (c4,c0,c1,c2,c3)`.
    #[inline]
    pub fn rotate(&self) -> Self {
        let c = self.0;
        Self([c[4], c[0], c[1], c[2], c[3]])
    }

    /// Packs into `5m` bits, `c0` in the lowest `m` bits.
    #[inline]
    pub fn pack(&self, m: u32) -> u64 {
        self.0.iter().enumerate().fold(0u64, |acc, (i, c)| {
            acc | (c.bits() as u64) << (i as u32 * m)
        })
    }

    /// Inverse of [`pack`](Self::pack); high bits beyond `5m` are ignored.
    #[inline]
    pub fn unpack(packed: u64, m: u32) -> Self {
        let mask = (1u64 << m) - 1;
        let mut c = [FieldElement::ZERO; 5];
        for (i, slot) in c.iter_mut().enumerate() {
            *slot = FieldElement::from_bits_unchecked(((packed >> (i as u32 * m)) & mask) as u16);
        }
        Self(c)
    }
}

impl Add for RingElement {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl AddAssign for RingElement {
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
    }
}

/// An element of the base ring R = F2[v]/(v^5 - 1); bit `i` is the coefficient of `v^i`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct BaseElement(u8);

impl BaseElement {
    pub const ZERO: Self = Self(0);

    pub fn new(bits: u8) -> Self {
        Self(bits & 0x1f)
    }

    #[inline]
    pub fn bits(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn coefficient(self, i: usize) -> u8 {
        (self.0 >> i) & 1
    }

    #[inline]
    pub fn rotate(self) -> Self {
        Self(((self.0 << 1) | (self.0 >> 4)) & 0x1f)
    }
}

impl Add for BaseElement {
    type Output = Self;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Self) -> Self {
        Self(self.0 ^ rhs.0)
    }
}

/// Five orthogonal idempotents `eta_j = sum_i e^(-ij) v^i`, available when 4 | m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentBasis {
    pub eta: [RingElement; 5],
    /// The order-5 element the basis is built from.
    pub epsilon: FieldElement,
}

/// CRT invariants of a ring element for its parity class.
///
/// * odd: `[I, I1, I2, I3, I4]` with `I = x0+x1+x2+x3+x4`, `I1 = x1+x2+x3+x4`,
///   `I2 = x0+x1`, `I3 = x3+x4`, `I4 = x0+x1+x2+x3`; factor components are
///   `I` and `(I1..I4)`.
/// * singly-even: `[H, H1, H2, H3, H4]` with `H = sum hi`,
///   `H1 = w^2 h1 + w h2 + w h3 + w^2 h4`, `H2 = w^2 h0 + w h1 + w h2 + w^2 h3`,
///   `H3 = w h1 + w^2 h2 + w^2 h3 + w h4`, `H4 = w h0 + w^2 h1 + w^2 h2 + w h3`;
///   factor components are `H`, `(H1, H2)` and `(H3, H4)`.
/// * doubly-even: the five CRT coordinates `a(e^j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnitProfile {
    pub class: ParityClass,
    pub invariants: [FieldElement; 5],
}

impl UnitProfile {
    /// Bit `f` is set when the component in factor `f` vanishes.
    pub fn zero_pattern(&self) -> u8 {
        let z = |i: usize| self.invariants[i].is_zero();
        match self.class {
            ParityClass::Odd => (z(0) as u8) | ((z(1) && z(2) && z(3) && z(4)) as u8) << 1,
            ParityClass::SinglyEven => {
                (z(0) as u8) | ((z(1) && z(2)) as u8) << 1 | ((z(3) && z(4)) as u8) << 2
            }
            ParityClass::DoublyEven => (0..5).fold(0u8, |acc, j| acc | (z(j) as u8) << j),
        }
    }

    pub fn factor_count(&self) -> usize {
        self.class.factor_degrees().len()
    }

    /// Unit criterion: every factor component nonzero.
    pub fn is_unit(&self) -> bool {
        self.zero_pattern() == 0
    }

    pub fn nonzero_components(&self) -> u32 {
        self.factor_count() as u32 - self.zero_pattern().count_ones()
    }

    pub fn weight_class(&self) -> WeightClass {
        WeightClass {
            class: self.class,
            zero_pattern: self.zero_pattern(),
        }
    }
}

/// The codeword weight class of `ev(a)`: which CRT factor components of `a` vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightClass {
    pub class: ParityClass,
    pub zero_pattern: u8,
}

/// The ring R_m together with its derived constants.
#[derive(Clone, Debug)]
pub struct QuinticRing {
    field: FieldContext,
    /// `tau[y]` bit `k` is `tr(x^k * y)`: the functional `z -> tr(y z)` as a mask.
    tau: Vec<u16>,
    omega: Option<FieldElement>,
    idempotents: Option<IdempotentBasis>,
}

impl QuinticRing {
    pub fn new(m: u32) -> Result<Self> {
        Ok(Self::from_field(FieldContext::new(m)?))
    }

    pub fn from_field(field: FieldContext) -> Self {
        let m = field.m();
        let tau = field
            .elements()
            .map(|y| {
                (0..m).fold(0u16, |acc, k| {
                    let basis = FieldElement::from_bits_unchecked(1 << k);
                    acc | (field.tr(field.mul(basis, y)) as u16) << k
                })
            })
            .collect();
        let omega = field.element_of_order(3).ok();
        let idempotents = match ParityClass::of(m) {
            ParityClass::DoublyEven => {
                let epsilon = field
                    .element_of_order(5)
                    .expect("5 divides 2^m - 1 when 4 | m");
                Some(build_idempotents(&field, epsilon))
            }
            _ => None,
        };
        Self {
            field,
            tau,
            omega,
            idempotents,
        }
    }

    #[inline]
    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.field.m()
    }

    pub fn parity_class(&self) -> ParityClass {
        ParityClass::of(self.m())
    }

    /// `2^(5m)`.
    pub fn size(&self) -> u64 {
        1u64 << (5 * self.m())
    }

    /// Mask covering the `5m` packed bits.
    pub fn packed_mask(&self) -> u64 {
        self.size() - 1
    }

    /// `tr(y * x^k)` for all k as an m-bit mask.
    #[inline]
    pub fn trace_functional(&self, y: FieldElement) -> u16 {
        self.tau[y.bits() as usize]
    }

    pub fn element(&self, coeffs: [u16; 5]) -> Result<RingElement> {
        let mut c = [FieldElement::ZERO; 5];
        for (slot, bits) in c.iter_mut().zip(coeffs) {
            *slot = self.field.element(bits)?;
        }
        Ok(RingElement(c))
    }

    pub fn from_packed(&self, packed: u64) -> Result<RingElement> {
        if packed & !self.packed_mask() != 0 {
            return Err(Error::NotReduced {
                value: packed,
                m: self.m(),
            });
        }
        Ok(RingElement::unpack(packed, self.m()))
    }

    /// Checks that every coefficient is reduced for this field.
    pub fn check(&self, a: &RingElement) -> Result<()> {
        let mask = self.field.mask();
        match a.0.iter().find(|c| c.bits() & !mask != 0) {
            Some(c) => Err(Error::NotReduced {
                value: c.bits() as u64,
                m: self.m(),
            }),
            None => Ok(()),
        }
    }

    pub fn random_element<R: RngCore + ?Sized>(&self, rng: &mut R) -> RingElement {
        RingElement::unpack(rng.next_u64() & self.packed_mask(), self.m())
    }

    /// Uniform unit by rejection sampling.
    pub fn random_unit<R: RngCore + ?Sized>(&self, rng: &mut R) -> RingElement {
        loop {
            let a = self.random_element(rng);
            if self.is_unit(&a) {
                return a;
            }
        }
    }

    #[inline]
    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        *a + *b
    }

    /// Cyclic convolution of the coefficient vectors.
    #[inline]
    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let f = &self.field;
        let mut c = [FieldElement::ZERO; 5];
        for (i, &ai) in a.0.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, &bj) in b.0.iter().enumerate() {
                c[(i + j) % 5] += f.mul(ai, bj);
            }
        }
        RingElement(c)
    }

    pub fn checked_mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn scale(&self, alpha: FieldElement, a: &RingElement) -> RingElement {
        RingElement(a.0.map(|c| self.field.mul(alpha, c)))
    }

    /// Coefficientwise absolute trace down to R.
    #[inline]
    pub fn trace(&self, a: &RingElement) -> BaseElement {
        let bits =
            a.0.iter()
                .enumerate()
                .fold(0u8, |acc, (i, &c)| acc | self.field.tr(c) << i);
        BaseElement(bits)
    }

    /// Embeds an element of R into R_m.
    pub fn embed(&self, r: BaseElement) -> RingElement {
        let mut c = [FieldElement::ZERO; 5];
        for (i, slot) in c.iter_mut().enumerate() {
            if r.coefficient(i) == 1 {
                *slot = FieldElement::ONE;
            }
        }
        RingElement(c)
    }

    /// `gcd(a(v), v^5 - 1) = 1` in F_{2^m}[v].
    pub fn is_unit(&self, a: &RingElement) -> bool {
        let f = &self.field;
        let mut r0 = [FieldElement::ZERO; 6];
        r0[0] = FieldElement::ONE;
        r0[5] = FieldElement::ONE;
        let mut r1 = [FieldElement::ZERO; 6];
        r1[..5].copy_from_slice(&a.0);
        while let Some(d1) = degree(&r1) {
            poly_rem_in_place(f, &mut r0, &r1, d1);
            core::mem::swap(&mut r0, &mut r1);
        }
        degree(&r0) == Some(0)
    }

    /// All units in canonical order: ascending packed value (`c4 || ... || c0`).
    pub fn units(&self) -> impl Iterator<Item = RingElement> + '_ {
        let m = self.m();
        (0..self.size())
            .map(move |p| RingElement::unpack(p, m))
            .filter(move |a| self.is_unit(a))
    }

    pub fn omega(&self) -> Option<FieldElement> {
        self.omega
    }

    pub fn unit_profile(&self, a: &RingElement) -> UnitProfile {
        let x = &a.0;
        let class = self.parity_class();
        let invariants = match class {
            ParityClass::Odd => [
                x[0] + x[1] + x[2] + x[3] + x[4],
                x[1] + x[2] + x[3] + x[4],
                x[0] + x[1],
                x[3] + x[4],
                x[0] + x[1] + x[2] + x[3],
            ],
            ParityClass::SinglyEven => {
                let f = &self.field;
                let w = self.omega.expect("omega exists for even m");
                let w2 = f.square(w);
                let lin = |coeffs: [FieldElement; 5]| {
                    coeffs
                        .iter()
                        .zip(x)
                        .fold(FieldElement::ZERO, |acc, (&k, &xi)| acc + f.mul(k, xi))
                };
                let (o, z) = (FieldElement::ONE, FieldElement::ZERO);
                [
                    lin([o, o, o, o, o]),
                    lin([z, w2, w, w, w2]),
                    lin([w2, w, w, w2, z]),
                    lin([z, w, w2, w2, w]),
                    lin([w, w2, w2, w, z]),
                ]
            }
            ParityClass::DoublyEven => self.crt_components(a),
        };
        UnitProfile { class, invariants }
    }

    pub fn idempotent_basis(&self) -> Result<&IdempotentBasis> {
        self.idempotents.as_ref().ok_or(Error::WrongParityClass {
            m: self.m(),
            required: ParityClass::DoublyEven,
        })
    }

    /// Coordinates `r_j` with `a = sum_j eta_j r_j`; `r_j = a(e^j)`.
    pub fn crt_decompose(&self, a: &RingElement) -> Result<[FieldElement; 5]> {
        self.idempotent_basis()?;
        Ok(self.crt_components(a))
    }

    pub fn crt_recompose(&self, components: &[FieldElement; 5]) -> Result<RingElement> {
        let basis = self.idempotent_basis()?;
        let mut acc = RingElement::ZERO;
        for (eta, &r) in basis.eta.iter().zip(components) {
            acc += self.scale(r, eta);
        }
        Ok(acc)
    }

    fn crt_components(&self, a: &RingElement) -> [FieldElement; 5] {
        let f = &self.field;
        let eps = self
            .idempotents
            .as_ref()
            .expect("CRT components need 4 | m")
            .epsilon;
        let mut out = [FieldElement::ZERO; 5];
        let mut point = FieldElement::ONE;
        for slot in out.iter_mut() {
            // Horner at v = e^j
            *slot =
                a.0.iter()
                    .rev()
                    .fold(FieldElement::ZERO, |acc, &c| f.mul(acc, point) + c);
            point = f.mul(point, eps);
        }
        out
    }
}

fn build_idempotents(field: &FieldContext, epsilon: FieldElement) -> IdempotentBasis {
    let mut eta = [RingElement::ZERO; 5];
    for (j, e) in eta.iter_mut().enumerate() {
        for i in 0..5 {
            // e^(-ij) = e^(5 - ij mod 5)
            let exp = (5 - (i * j) % 5) % 5;
            e.0[i] = field.pow(epsilon, exp as u64);
        }
    }
    IdempotentBasis { eta, epsilon }
}

fn degree(p: &[FieldElement; 6]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// `a <- a mod b` where `b` has degree `db`.
fn poly_rem_in_place(
    f: &FieldContext,
    a: &mut [FieldElement; 6],
    b: &[FieldElement; 6],
    db: usize,
) {
    let lead_inv = f.inv(b[db]).expect("leading coefficient is nonzero");
    while let Some(da) = degree(a) {
        if da < db {
            break;
        }
        let q = f.mul(a[da], lead_inv);
        let shift = da - db;
        for i in 0..=db {
            a[i + shift] += f.mul(q, b[i]);
        }
    }
}

/// `|R_m^*|` from the factor degrees: product of `(2^(m d) - 1)`.
pub fn unit_count(m: u32) -> u64 {
    ParityClass::of(m)
        .factor_degrees()
        .iter()
        .map(|&d| (1u64 << (m * d)) - 1)
        .product()
}

/// The units of R_m, materialized with a reverse index. Only for `m <= 4`.
#[derive(Clone, Debug)]
pub struct UnitGroup {
    units: Vec<u64>,
    index: Vec<u32>,
}

impl UnitGroup {
    pub fn new(ring: &QuinticRing) -> Result<Self> {
        let m = ring.m();
        if m > MATERIALIZE_LIMIT {
            return Err(Error::TooLargeToMaterialize {
                m,
                limit: MATERIALIZE_LIMIT,
            });
        }
        let mut units = Vec::with_capacity(unit_count(m) as usize);
        let mut index = vec![u32::MAX; ring.size() as usize];
        for p in 0..ring.size() {
            if ring.is_unit(&RingElement::unpack(p, m)) {
                index[p as usize] = units.len() as u32;
                units.push(p);
            }
        }
        Ok(Self { units, index })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.units.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.units.is_empty()
    }

    /// Packed units in canonical order.
    #[inline]
    pub fn packed(&self) -> &[u64] {
        &self.units
    }

    /// Position of a packed element in the canonical order, if it is a unit.
    #[inline]
    pub fn position(&self, packed: u64) -> Option<usize> {
        match self.index.get(packed as usize) {
            Some(&i) if i != u32::MAX => Some(i as usize),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(ring: &QuinticRing, c: [u16; 5]) -> RingElement {
        ring.element(c).unwrap()
    }

    #[test]
    fn v_has_order_five() {
        let ring = QuinticRing::new(3).unwrap();
        let v = RingElement::v_power(1);
        assert_eq!(ring.mul(&v, &RingElement::v_power(4)), RingElement::ONE);
        let a = el(&ring, [1, 2, 3, 4, 5]);
        assert_eq!(ring.mul(&v, &a), el(&ring, [5, 1, 2, 3, 4]));
        assert_eq!(ring.mul(&v, &a), a.rotate());
    }

    #[test]
    fn one_plus_v_annihilates_all_ones() {
        for m in 1..=4 {
            let ring = QuinticRing::new(m).unwrap();
            let p = el(&ring, [1, 1, 0, 0, 0]);
            assert!(ring.mul(&p, &RingElement::all_ones()).is_zero());
            assert!(!ring.is_unit(&p));
            assert!(ring.is_unit(&RingElement::v_power(1)));
        }
    }

    #[test]
    fn unit_counts_match_closed_forms() {
        assert_eq!(unit_count(1), 15);
        assert_eq!(unit_count(2), 675);
        assert_eq!(unit_count(3), 28665);
        assert_eq!(unit_count(4), 759_375);
        for m in 1..=3 {
            let ring = QuinticRing::new(m).unwrap();
            assert_eq!(ring.units().count() as u64, unit_count(m));
        }
    }

    #[test]
    fn profile_agrees_with_gcd_exhaustive_m_le_3() {
        for m in 1..=3 {
            let ring = QuinticRing::new(m).unwrap();
            for p in 0..ring.size() {
                let a = RingElement::unpack(p, m);
                assert_eq!(
                    ring.unit_profile(&a).is_unit(),
                    ring.is_unit(&a),
                    "m = {m}, a = {p:#x}"
                );
            }
        }
    }

    #[test]
    fn scalar_multiples_of_all_ones() {
        for m in [1, 3] {
            let ring = QuinticRing::new(m).unwrap();
            for alpha in ring.field().elements().skip(1) {
                let a = ring.scale(alpha, &RingElement::all_ones());
                let p = ring.unit_profile(&a);
                assert!(!p.invariants[0].is_zero());
                assert!(p.invariants[1..].iter().all(|x| x.is_zero()));
            }
        }
        let ring = QuinticRing::new(2).unwrap();
        assert_eq!(
            ring.unit_profile(&RingElement::ZERO).invariants,
            [FieldElement::ZERO; 5]
        );
    }

    #[test]
    fn idempotents_are_orthogonal() {
        let ring = QuinticRing::new(4).unwrap();
        let basis = ring.idempotent_basis().unwrap();
        assert_eq!(basis.eta[0], RingElement::all_ones());
        let mut sum = RingElement::ZERO;
        for i in 0..5 {
            sum += basis.eta[i];
            for j in 0..5 {
                let prod = ring.mul(&basis.eta[i], &basis.eta[j]);
                if i == j {
                    assert_eq!(prod, basis.eta[i]);
                } else {
                    assert!(prod.is_zero(), "eta{i} * eta{j}");
                }
            }
        }
        assert_eq!(sum, RingElement::ONE);
        assert!(QuinticRing::new(2).unwrap().idempotent_basis().is_err());
    }

    #[test]
    fn crt_of_one_and_single_component() {
        let ring = QuinticRing::new(4).unwrap();
        assert_eq!(
            ring.crt_decompose(&RingElement::ONE).unwrap(),
            [FieldElement::ONE; 5]
        );
        let basis = ring.idempotent_basis().unwrap().clone();
        let a = ring.scale(ring.field().generator(), &basis.eta[2]);
        let p = ring.unit_profile(&a);
        assert_eq!(p.nonzero_components(), 1);
        assert!(!p.invariants[2].is_zero());
        let r3 = QuinticRing::new(3).unwrap();
        assert_eq!(
            r3.crt_decompose(&RingElement::ONE),
            Err(Error::WrongParityClass {
                m: 3,
                required: ParityClass::DoublyEven
            })
        );
    }

    #[test]
    fn ring_trace_at_m1_is_identity() {
        let ring = QuinticRing::new(1).unwrap();
        for p in 0..32 {
            let a = RingElement::unpack(p, 1);
            assert_eq!(ring.trace(&a).bits() as u64, p);
        }
    }

    #[test]
    fn trace_is_nondegenerate_m_le_3() {
        for m in 1..=3 {
            let ring = QuinticRing::new(m).unwrap();
            for px in 1..ring.size() {
                let x = RingElement::unpack(px, m);
                let witnessed = (0..ring.size()).any(|pa| {
                    let a = RingElement::unpack(pa, m);
                    ring.trace(&ring.mul(&a, &x)) != BaseElement::ZERO
                });
                assert!(witnessed, "m = {m}, x = {px:#x}");
            }
        }
    }

    #[test]
    fn units_have_inverses_m_le_2() {
        for m in 1..=2 {
            let ring = QuinticRing::new(m).unwrap();
            let units: Vec<_> = ring.units().collect();
            for a in &units {
                let inverse = units.iter().find(|b| ring.mul(a, b) == RingElement::ONE);
                assert!(inverse.is_some());
                for b in units.iter().step_by(7) {
                    assert!(ring.is_unit(&ring.mul(a, b)));
                }
            }
        }
    }

    #[test]
    fn unit_group_index_round_trip() {
        let ring = QuinticRing::new(2).unwrap();
        let g = UnitGroup::new(&ring).unwrap();
        assert_eq!(g.len(), 675);
        assert_eq!(g.packed()[0], 1);
        assert!(g.packed().windows(2).all(|w| w[0] < w[1]));
        for (i, &p) in g.packed().iter().enumerate() {
            assert_eq!(g.position(p), Some(i));
        }
        assert_eq!(g.position(0), None);
        assert!(UnitGroup::new(&QuinticRing::new(5).unwrap()).is_err());
    }

    #[test]
    fn foreign_elements_rejected() {
        let ring = QuinticRing::new(2).unwrap();
        let bad = RingElement([FieldElement::from_bits_unchecked(4); 5]);
        assert!(ring.checked_mul(&bad, &RingElement::ONE).is_err());
        assert!(ring.from_packed(1 << 10).is_err());
        assert!(ring.element([0, 0, 0, 0, 4]).is_err());
    }
}
