use proptest::prelude::*;

use sextic_qsc::arith;
use sextic_qsc::codes::{
    dual_oracle, min_distance, min_distance_by_enumeration, min_distance_by_supports, CyclicCode,
    Distance, DistanceOptions, SexticSetup, SplittingField,
};
use sextic_qsc::cyclotomy::{
    class_coset_decomposition, is_primitive_root, negation_map_check, CyclotomicCoset,
    SexticClasses,
};
use sextic_qsc::field::Field;
use sextic_qsc::poly::Poly;
use sextic_qsc::qsc::{
    apply_shift, encode_shadow, make_chain, qsc_params, random_message, recover_shift,
};

const ORDERS: [u64; 13] = [2, 3, 5, 7, 4, 8, 9, 16, 25, 27, 49, 81, 128];

fn field(i: usize) -> Field {
    Field::with_order(ORDERS[i % ORDERS.len()]).unwrap()
}

fn valid_moduli(limit: u64) -> Vec<u64> {
    (7..limit).filter(|&n| n % 12 == 7 && arith::is_prime(n)).collect()
}

fn poly_strategy(max_len: usize) -> impl Strategy<Value = (usize, Vec<u64>)> {
    (0..ORDERS.len(), prop::collection::vec(any::<u64>(), 0..max_len))
}

fn make_poly(f: &Field, raw: &[u64]) -> Poly {
    Poly::new(f, raw.iter().map(|&c| c % f.order()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn lagrange_and_inverse(i in 0..ORDERS.len(), a in any::<u64>()) {
        let f = field(i);
        let a = 1 + a % (f.order() - 1);
        prop_assert_eq!(f.pow_u(a, f.order() - 1), 1);
        prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
    }

    #[test]
    fn field_ring_axioms(i in 0..ORDERS.len(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = field(i);
        let (a, b, c) = (a % f.order(), b % f.order(), c % f.order());
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
    }

    #[test]
    fn roots_of_unity_have_exact_order(i in 0..ORDERS.len(), pick in any::<usize>()) {
        let f = field(i);
        let divisors = arith::divisors(f.order() - 1);
        let n = divisors[pick % divisors.len()];
        let eta = f.nth_root_of_unity(n).unwrap();
        prop_assert_eq!(f.pow_u(eta, n), 1);
        for k in arith::divisors(n) {
            if k < n {
                prop_assert_ne!(f.pow_u(eta, k), 1);
            }
        }
    }

    #[test]
    fn division_identity((i, a) in poly_strategy(12), b in prop::collection::vec(any::<u64>(), 1..8)) {
        let f = field(i);
        let a = make_poly(&f, &a);
        let b = make_poly(&f, &b);
        prop_assume!(!b.is_zero());
        let (q, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        if let Some(dr) = r.degree() {
            prop_assert!(dr < b.degree().unwrap());
        }
    }

    #[test]
    fn gcd_divides_both((i, a) in poly_strategy(10), b in prop::collection::vec(any::<u64>(), 0..10)) {
        let f = field(i);
        let a = make_poly(&f, &a);
        let b = make_poly(&f, &b);
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.divides(&a));
        prop_assert!(g.divides(&b));
    }

    #[test]
    fn reciprocal_keeps_degree_and_inverts_roots((i, a) in poly_strategy(8)) {
        let f = field(i);
        let mut a = make_poly(&f, &a);
        if a.constant_term() == 0 {
            a = &a + &Poly::one(&f);
        }
        prop_assume!(a.constant_term() != 0);
        let r = a.reciprocal().unwrap();
        prop_assert_eq!(r.degree(), a.degree());
        for x in 1..f.order() {
            if a.eval(x) == 0 {
                prop_assert_eq!(r.eval(f.inv(x).unwrap()), 0);
            }
        }
    }

    #[test]
    fn irreducibility_tests_agree((i, a) in poly_strategy(7)) {
        let f = field(i % 6);
        let a = make_poly(&f, &a);
        prop_assume!(a.degree().is_some_and(|d| d >= 1));
        prop_assert_eq!(a.is_irreducible(), a.is_irreducible_by_trial_division());
    }

    #[test]
    fn shift_composition(word in prop::collection::vec(0u64..7, 1..40), a in -39i64..40, b in -39i64..40) {
        let n = word.len() as i64;
        prop_assume!(a.abs() < n && b.abs() < n);
        prop_assert_eq!(apply_shift(&apply_shift(&word, a), b), apply_shift(&word, a + b));
        prop_assert_eq!(apply_shift(&apply_shift(&word, a), -a), word);
    }
}

#[test]
fn field_construction_is_deterministic() {
    for q in ORDERS {
        let a = Field::with_order(q).unwrap();
        let b = Field::with_order(q).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        for n in arith::divisors(q - 1) {
            assert_eq!(a.nth_root_of_unity(n).unwrap(), b.nth_root_of_unity(n).unwrap());
        }
        if let Some(m) = a.modulus() {
            let prime = Field::prime(a.characteristic()).unwrap();
            let modulus = Poly::new(&prime, m.to_vec());
            assert!(modulus.is_irreducible_by_trial_division(), "modulus of GF({q})");
            assert!((0..prime.order()).all(|x| modulus.eval(x) != 0));
        }
    }
}

#[test]
fn polynomial_order_divides_n() {
    for (n, q) in [(7u64, 8u64), (19, 7), (31, 2), (43, 4)] {
        let s = SexticSetup::new(n, q, None).unwrap();
        for (_, m) in s.minimal.iter() {
            let ord = m.order(n as usize).unwrap();
            assert_eq!(n as usize % ord, 0);
        }
        for g in s.generators.generators() {
            assert_eq!(g.order(n as usize).unwrap(), n as usize);
        }
    }
}

#[test]
fn classes_partition_residues() {
    for n in valid_moduli(500) {
        let s = SexticClasses::new(n, None).unwrap();
        let mut all: Vec<u64> = s.classes().iter().flatten().copied().collect();
        all.sort_unstable();
        assert_eq!(all, (1..n).collect::<Vec<_>>(), "n = {n}");
        for i in 0..6 {
            assert_eq!(s.class(i).len() as u64, (n - 1) / 6);
            let mut shifted: Vec<u64> =
                s.class(i + 5).iter().map(|&a| a * s.gamma() % n).collect();
            shifted.sort_unstable();
            assert_eq!(shifted, s.class(i), "gamma shift n = {n} class {i}");
        }
        assert!(negation_map_check(&s));
        let alt = (s.gamma() + 1..n).find(|&g| is_primitive_root(g, n)).unwrap();
        let t = SexticClasses::new(n, Some(alt)).unwrap();
        assert_eq!(s.class(0), t.class(0));
        assert!(negation_map_check(&t));
    }
}

#[test]
fn cosets_are_closed_and_decompositions_exact() {
    for (n, q) in [(19u64, 7u64), (31, 2), (43, 4), (127, 2), (127, 4), (151, 8)] {
        let s = SexticClasses::new(n, None).unwrap();
        let d = class_coset_decomposition(&s, q).unwrap();
        for i in 0..6 {
            assert_eq!(d.representatives[i].len(), d.t);
            let mut union = Vec::new();
            for &r in &d.representatives[i] {
                let c = CyclotomicCoset::new(r, n, q).unwrap();
                let mut scaled: Vec<u64> = c.elements().iter().map(|&a| a * q % n).collect();
                scaled.sort_unstable();
                assert_eq!(scaled, c.sorted());
                assert_eq!(c.len(), d.ell);
                union.extend(c.elements().iter().copied());
            }
            union.sort_unstable();
            assert_eq!(union, s.class(i));
        }
    }
}

fn setups() -> Vec<SexticSetup> {
    [(7u64, 8u64), (19, 7), (31, 2), (43, 4)]
        .into_iter()
        .map(|(n, q)| SexticSetup::new(n, q, None).unwrap())
        .collect()
}

#[test]
fn sextic_generator_identities() {
    for s in setups() {
        assert!(s.generators.factorization_holds());
        for i in 0..6 {
            let g = s.generators.generator(i);
            assert_eq!(&g.reciprocal().unwrap(), s.generators.generator(i + 3));
            let c = s.generators.code(&[i]).unwrap();
            assert!(c.generator().divides(c.dual().generator()));
            let d = s.generators.code(&[i, i + 1, i + 2]).unwrap();
            assert!(d.generator().divides(d.dual().generator()));
            if s.n() <= 31 {
                for code in [&c, &d] {
                    let oracle = dual_oracle(code).unwrap();
                    assert!(oracle.same_row_space(&code.dual().generator_matrix().unwrap()));
                    assert_eq!(oracle.rows(), code.n() - code.k());
                }
            }
        }
    }
}

#[test]
fn generator_set_independent_of_eta() {
    for s in setups() {
        let n = s.n() as u64;
        let a = (2..n).find(|&a| arith::gcd(a, n) == 1).unwrap();
        let split = SplittingField::with_eta_exponent(&s.field, n, a).unwrap();
        let other =
            sextic_qsc::codes::SexticGenerators::with_splitting_field(&s.classes, &split).unwrap();
        let mut x: Vec<Vec<u64>> = s.generators.generators().iter().map(|g| g.coeffs().to_vec()).collect();
        let mut y: Vec<Vec<u64>> = other.generators().iter().map(|g| g.coeffs().to_vec()).collect();
        x.sort();
        y.sort();
        assert_eq!(x, y, "n = {n}");
    }
}

#[test]
fn augmentations_stay_dual_containing() {
    let s = SexticSetup::new(127, 2, None).unwrap();
    for i in 0..6 {
        for base in [vec![i], vec![i, (i + 1) % 6, (i + 2) % 6]] {
            let code = s.generators.code(&base).unwrap();
            let factors: Vec<u64> = base
                .iter()
                .flat_map(|&c| s.minimal.class_factors(c).iter().copied())
                .collect();
            for mask in 1u32..(1 << factors.len()) - 1 {
                let drop: Vec<u64> = (0..factors.len())
                    .filter(|b| mask & (1 << b) != 0)
                    .map(|b| factors[b])
                    .collect();
                let aug = code.augment(&s.minimal, &drop).unwrap();
                assert!(aug.is_dual_containing(), "classes {base:?} drop {drop:?}");
                assert_eq!(aug.k(), code.k() + 7 * drop.len());
            }
        }
    }
}

/// Every divisor of `x^n - 1` as a product of a subset of its irreducible factors.
fn all_cyclic_codes(n: u64, q: u64) -> Vec<CyclicCode> {
    let s = SexticSetup::new(n, q, None).unwrap();
    let factors: Vec<Poly> = s.minimal.iter().map(|(_, p)| p.clone()).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << factors.len()) - 1 {
        let g = sextic_qsc::poly::product(
            &s.field,
            (0..factors.len()).filter(|b| mask & (1 << b) != 0).map(|b| &factors[b]),
        );
        out.push(CyclicCode::from_generator(n as usize, &s.field, g).unwrap());
    }
    out
}

#[test]
fn distance_methods_agree() {
    for (n, q) in [(7u64, 8u64), (19, 7), (31, 2)] {
        for code in all_cyclic_codes(n, q) {
            let space = (q as u128).checked_pow(code.k() as u32).unwrap_or(u128::MAX);
            if space > 1 << 20 {
                continue;
            }
            let by_enum = min_distance_by_enumeration(&code).unwrap();
            let by_support = min_distance_by_supports(&code, None, u64::MAX).unwrap();
            assert_eq!(Distance::Exact(by_enum), by_support, "{}", code.generator());
            assert!(by_enum <= code.n() - code.k() + 1);
        }
    }
}

#[test]
fn singleton_bound_for_auto_method() {
    for (n, q) in [(7u64, 8u64), (19, 7), (31, 2)] {
        for code in all_cyclic_codes(n, q) {
            let d = min_distance(&code, &DistanceOptions::default()).unwrap();
            assert!(d.value() <= code.n() - code.k() + 1);
        }
    }
}

#[test]
fn shift_residues_are_distinct() {
    for s in setups().into_iter().take(3) {
        let chain = make_chain(
            s.generators.code(&[0]).unwrap(),
            s.generators.code(&[0, 1]).unwrap(),
            &DistanceOptions::none(),
        )
        .unwrap();
        let f = chain.quotient();
        let mut seen = std::collections::BTreeSet::new();
        for j in 0..chain.order_f() as u64 {
            let r = Poly::x(f.field()).pow_mod(j, f).unwrap();
            assert!(seen.insert(r.coeffs().to_vec()));
        }
        assert_eq!(chain.order_f(), s.n());
    }
}

#[test]
fn tolerance_ceiling_is_exact() {
    let s = SexticSetup::new(19, 7, None).unwrap();
    let chain = make_chain(
        s.generators.code(&[2]).unwrap(),
        s.generators.code(&[2, 3]).unwrap(),
        &DistanceOptions::none(),
    )
    .unwrap();
    for cl in 0..25 {
        for cr in 0..25 {
            assert_eq!(qsc_params(&chain, cl, cr).is_ok(), cl + cr < 19);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shift_recovery_roundtrip(which in 0usize..3, i in 0usize..6, split in any::<u64>(), seed in any::<u64>()) {
        use rand::SeedableRng;
        let (n, q) = [(7u64, 8u64), (19, 7), (31, 2)][which];
        let s = SexticSetup::new(n, q, None).unwrap();
        let chain = make_chain(
            s.generators.code(&[i]).unwrap(),
            s.generators.code(&[i, i + 1]).unwrap(),
            &DistanceOptions::none(),
        ).unwrap();
        let total = (split % n) as usize;
        let cl = (split / n) as usize % (total + 1);
        let cr = total - cl;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let v = random_message(&chain, &mut rng);
        let u = encode_shadow(&chain, &v).unwrap();
        prop_assert!(chain.outer().contains_word(&u));
        let g1 = chain.outer().generator().to_word(n as usize);
        let minus: Vec<u64> = u.iter().zip(&g1).map(|(&a, &b)| s.field.sub(a, b)).collect();
        prop_assert!(chain.inner().contains_word(&minus));
        for delta in (1 - cl as i64)..(cr as i64) {
            let received = apply_shift(&u, delta);
            prop_assert_eq!(recover_shift(&chain, &received, cl, cr).unwrap(), delta);
        }
    }
}
