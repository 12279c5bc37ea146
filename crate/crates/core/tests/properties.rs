use proptest::prelude::*;
use quintic_core::code::gray_image;
use quintic_core::gf2m::{FieldContext, FieldElement};
use quintic_core::ring::{unit_count, ParityClass, QuinticRing, RingElement, UnitGroup};
use quintic_core::TraceCode;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field_triple() -> impl Strategy<Value = (u32, u16, u16, u16)> {
    (5u32..=12).prop_flat_map(|m| {
        let max = (1u16 << m) - 1;
        (Just(m), 0..=max, 0..=max, 0..=max)
    })
}

proptest! {
    #[test]
    fn field_axioms_large_m((m, a, b, c) in field_triple()) {
        let f = FieldContext::new(m).unwrap();
        let (a, b, c) = (f.element(a).unwrap(), f.element(b).unwrap(), f.element(c).unwrap());
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, b + c), f.mul(a, b) + f.mul(a, c));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.square(a + b), f.square(a) + f.square(b));
        prop_assert_eq!(f.tr(f.square(a)), f.tr(a));
        prop_assert_eq!(f.tr(a + b), f.tr(a) ^ f.tr(b));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
        }
    }

    #[test]
    fn ring_trace_is_linear(m in 1u32..=6, pa in any::<u64>(), pb in any::<u64>(), pr in 0u8..32) {
        let ring = QuinticRing::new(m).unwrap();
        let a = RingElement::unpack(pa, m);
        let b = RingElement::unpack(pb, m);
        let r = ring.embed(quintic_core::BaseElement::new(pr));
        prop_assert_eq!(ring.trace(&(a + b)), ring.trace(&a) + ring.trace(&b));
        // Tr(r a + b) = r Tr(a) + Tr(b) for r in R
        let lhs = ring.trace(&(ring.mul(&r, &a) + b));
        let base = QuinticRing::new(1).unwrap();
        let r_tra = base.mul(&base.embed(quintic_core::BaseElement::new(pr)), &base.embed(ring.trace(&a)));
        prop_assert_eq!(lhs, base.trace(&r_tra) + ring.trace(&b));
    }

    #[test]
    fn ring_mul_commutative_associative(m in 1u32..=12, pa in any::<u64>(), pb in any::<u64>(), pc in any::<u64>()) {
        let ring = QuinticRing::new(m).unwrap();
        let [a, b, c] = [pa, pb, pc].map(|p| RingElement::unpack(p, m));
        prop_assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a));
        prop_assert_eq!(ring.mul(&ring.mul(&a, &b), &c), ring.mul(&a, &ring.mul(&b, &c)));
        prop_assert_eq!(ring.mul(&a, &(b + c)), ring.mul(&a, &b) + ring.mul(&a, &c));
    }

    #[test]
    fn pack_round_trip(m in 1u32..=12, p in any::<u64>()) {
        let p = p & ((1u64 << (5 * m)) - 1);
        prop_assert_eq!(RingElement::unpack(p, m).pack(m), p);
    }
}

#[test]
fn unit_profile_matches_gcd_on_random_m4() {
    let ring = QuinticRing::new(4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..1_000_000 {
        let a = ring.random_element(&mut rng);
        assert_eq!(ring.unit_profile(&a).is_unit(), ring.is_unit(&a));
    }
}

#[test]
fn unit_profile_matches_gcd_on_random_large_m() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for m in 5..=12 {
        let ring = QuinticRing::new(m).unwrap();
        for _ in 0..20_000 {
            let a = ring.random_element(&mut rng);
            assert_eq!(ring.unit_profile(&a).is_unit(), ring.is_unit(&a), "m = {m}");
        }
        // structured non-units: multiples of each factor
        let ones = RingElement::all_ones();
        let one_plus_v = ring.element([1, 1, 0, 0, 0]).unwrap();
        for _ in 0..200 {
            let r = ring.random_element(&mut rng);
            for z in [ring.mul(&r, &ones), ring.mul(&r, &one_plus_v)] {
                assert!(!ring.is_unit(&z));
                assert!(!ring.unit_profile(&z).is_unit());
            }
        }
    }
}

#[test]
fn unit_group_size_m4() {
    let ring = QuinticRing::new(4).unwrap();
    let g = UnitGroup::new(&ring).unwrap();
    assert_eq!(g.len() as u64, unit_count(4));
    assert_eq!(g.len(), 759_375);
}

#[test]
fn crt_round_trip_exhaustive_m4() {
    let ring = QuinticRing::new(4).unwrap();
    for p in 0..ring.size() {
        let a = RingElement::unpack(p, 4);
        let comps = ring.crt_decompose(&a).unwrap();
        assert_eq!(ring.crt_recompose(&comps).unwrap(), a);
        assert_eq!(comps.iter().all(|c| !c.is_zero()), ring.is_unit(&a));
    }
}

#[test]
fn regular_action_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for m in 1..=2 {
        let code = TraceCode::new(m).unwrap();
        let ring = code.ring();
        for _ in 0..50 {
            let u = ring.random_unit(&mut rng);
            let a = ring.random_element(&mut rng);
            let word = code.evaluate(&a);
            let shifted = code.evaluate(&ring.mul(&a, &u));
            for (j, &symbol) in shifted.iter().enumerate() {
                let ux = ring.mul(&u, &code.unit(j)).pack(m);
                let target = code.units().position(ux).expect("units are closed");
                assert_eq!(symbol, word[target]);
            }
        }
    }
}

#[test]
fn quasi_cyclic_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for m in 1..=2 {
        let code = TraceCode::new(m).unwrap();
        let ring = code.ring();
        for _ in 0..50 {
            let a = ring.random_element(&mut rng);
            let rotated: Vec<_> = code.evaluate(&a).iter().map(|r| r.rotate()).collect();
            assert_eq!(gray_image(&rotated), code.gray_codeword(&a.rotate()));
        }
    }
}

#[test]
fn weight_class_prediction_exhaustive_m_le_3() {
    for m in 1..=3 {
        let code = TraceCode::new(m).unwrap();
        let weights = code.enumerator().weights();
        for p in 0..code.spec().codeword_count() {
            let a = RingElement::unpack(p, m);
            let class = code.ring().unit_profile(&a).weight_class();
            assert_eq!(class.weight(m), weights[p as usize], "m = {m}, a = {p:#x}");
        }
    }
}

#[test]
fn weight_class_prediction_sampled_m4() {
    let code = TraceCode::new(4).unwrap();
    let spectrum = code.theta_spectrum();
    let ring = code.ring();
    for p in 0..ring.size() {
        let class = ring.unit_profile(&RingElement::unpack(p, 4)).weight_class();
        assert_eq!(class.theta(4) as i64, spectrum[p as usize]);
    }
    assert_eq!(ring.parity_class(), ParityClass::DoublyEven);
}

#[test]
fn unit_codeword_values() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let code = TraceCode::new(3).unwrap();
    for _ in 0..5 {
        let u = code.ring().random_unit(&mut rng);
        assert_eq!(code.codeword_lee_weight(&u), 71660);
        assert_eq!(code.theta(&u), 5);
    }
    let code = TraceCode::new(2).unwrap();
    for _ in 0..5 {
        let u = code.ring().random_unit(&mut rng);
        assert_eq!(code.theta(&u), -5);
    }
}

#[test]
fn evaluate_is_linear() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for m in 1..=3 {
        let code = TraceCode::new(m).unwrap();
        for _ in 0..10 {
            let a = code.ring().random_element(&mut rng);
            let b = code.ring().random_element(&mut rng);
            let sum: Vec<_> = code
                .evaluate(&a)
                .iter()
                .zip(code.evaluate(&b))
                .map(|(&x, y)| x + y)
                .collect();
            assert_eq!(code.evaluate(&(a + b)), sum);
        }
        assert!(code
            .evaluate(&RingElement::ZERO)
            .iter()
            .all(|r| r.bits() == 0));
    }
}
