use std::sync::Arc;

use proptest::prelude::*;

use endoaip::annprop::{left_annihilator, right_annihilator_in_module, AnyProperty};
use endoaip::describe::{build_ring, RingDesc};
use endoaip::hom::hom_group_exhaustive;
use endoaip::ideal::all_two_sided_ideals;
use endoaip::lattice::{
    all_submodules, fully_invariant_submodules, is_direct_summand, is_fully_invariant, uniform_dimension,
};
use endoaip::module::{direct_sum, free_module, regular_module, z_module};
use endoaip::replay::{replay_module, replay_ring};
use endoaip::ring::{direct_product, is_isomorphism, make_cyclic_ring, product_element, SemicentralClass};
use endoaip::{
    check_module_property, check_ring_property, end_ring, hom_group, Caps, FiniteModule, FiniteRing, PropertyId,
    RingPropertyId,
};

fn caps() -> Caps {
    Caps::default()
}

fn small_ring_descs() -> Vec<RingDesc> {
    let z = RingDesc::cyclic;
    let mut v: Vec<RingDesc> = (1..=12).map(z).collect();
    v.extend([
        RingDesc::triangular(z(2), 2),
        RingDesc::triangular(z(3), 2),
        RingDesc::matrix(z(2), 2),
        RingDesc::product(vec![z(2), z(2)]),
        RingDesc::product(vec![z(2), z(3)]),
        RingDesc::product(vec![z(2), z(4)]),
        RingDesc::triangular(z(4), 2),
        RingDesc::quotient(RingDesc::triangular(z(2), 2), vec![vec![0, 1, 0]]),
    ]);
    v
}

fn ring_strategy() -> impl Strategy<Value = Arc<FiniteRing>> {
    prop::sample::select(small_ring_descs()).prop_map(|d| Arc::new(build_ring(&d, &caps()).unwrap()))
}

fn end_order(orders: &[u64]) -> u64 {
    orders
        .iter()
        .flat_map(|&a| orders.iter().map(move |&b| gcd(a, b)))
        .product()
}

/// z_module orders with |M| <= 32 and |End(M)| <= 256.
fn z_orders() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(2u64..=8, 1..=3).prop_filter("small module", |v| {
        v.iter().product::<u64>() <= 32 && end_order(v) <= 256
    })
}

/// Regular modules, rank-2 free modules over rings of order <= 4 and z_modules.
fn module_strategy() -> impl Strategy<Value = FiniteModule> {
    prop_oneof![
        ring_strategy().prop_map(|r| regular_module(&r)),
        ring_strategy()
            .prop_filter("small ring", |r| r.order() <= 4)
            .prop_map(|r| free_module(&r, 2, &caps()).unwrap()),
        z_orders().prop_map(|o| z_module(&o).unwrap()),
    ]
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms_and_semicentral_classes(r in ring_strategy()) {
        prop_assert!(r.verify_axioms_exhaustive().is_ok());
        for e in r.idempotents() {
            let class = r.semicentral_class(e);
            if r.is_central(e) || r.is_commutative() {
                prop_assert_eq!(class, SemicentralClass::Both);
            }
        }
    }

    #[test]
    fn regular_action_is_multiplication(r in ring_strategy()) {
        let m = regular_module(&r);
        for x in r.elements() {
            for y in r.elements() {
                prop_assert_eq!(m.scalar_act(x, y), r.mul(x, y));
            }
        }
    }

    #[test]
    fn z_module_action_is_faithful(orders in z_orders()) {
        let m = z_module(&orders).unwrap();
        for r in m.ring().elements().filter(|&r| r != 0) {
            prop_assert!(m.elements().any(|x| m.scalar_act(x, r) != 0));
        }
    }

    #[test]
    fn hom_paths_agree(a in module_strategy(), orders in z_orders()) {
        let b = z_module(&orders).unwrap();
        for (m, n) in [(&a, &a), (&b, &b)] {
            if m.order() * m.ring().order() > 1024 {
                continue;
            }
            let mut fast: Vec<_> = hom_group(m, n, &caps()).unwrap().iter().map(|h| h.generator_images()).collect();
            let mut slow: Vec<_> = hom_group_exhaustive(m, n, &caps()).unwrap().iter().map(|h| h.generator_images()).collect();
            fast.sort();
            slow.sort();
            prop_assert_eq!(fast, slow);
        }
    }

    #[test]
    fn end_order_of_z_modules(orders in z_orders()) {
        let m = z_module(&orders).unwrap();
        prop_assert_eq!(end_ring(&m, &caps()).unwrap().order() as u64, end_order(&orders));
    }

    #[test]
    fn kernels_and_images_are_submodules(m in module_strategy()) {
        let s = end_ring(&m, &caps()).unwrap();
        for f in s.homs() {
            for n in [f.kernel(), f.image()] {
                for x in n.elements().iter() {
                    prop_assert!(m.ring().elements().all(|r| n.contains(m.scalar_act(x, r))));
                }
            }
        }
    }

    #[test]
    fn fully_invariant_lattice_is_consistent(m in module_strategy()) {
        let s = end_ring(&m, &caps()).unwrap();
        let all = all_submodules(&m, &caps()).unwrap();
        let fi = fully_invariant_submodules(&s, &caps()).unwrap();
        for n in &fi {
            prop_assert!(is_fully_invariant(&s, n));
            prop_assert!(all.iter().any(|x| x.elements() == n.elements()));
        }
        let filtered = all.iter().filter(|n| is_fully_invariant(&s, n)).count();
        prop_assert_eq!(filtered, fi.len());
    }

    #[test]
    fn summand_complements_have_complementary_size(m in module_strategy()) {
        for n in all_submodules(&m, &caps()).unwrap() {
            if let Some(c) = is_direct_summand(&m, &n, &caps()).unwrap() {
                prop_assert_eq!(n.len() * c.len(), m.order());
                prop_assert_eq!(n.elements().intersection_len(c.elements()), 1);
            }
        }
    }

    #[test]
    fn uniform_dimension_is_additive(a in z_orders(), b in z_orders()) {
        prop_assume!(a.iter().chain(&b).product::<u64>() <= 64);
        let mut ab = a.clone();
        ab.extend(&b);
        // z_module of the concatenated orders is the direct sum of the two.
        let (ma, mb, mab) = (z_module(&a).unwrap(), z_module(&b).unwrap(), z_module(&ab).unwrap());
        let sum = uniform_dimension(&ma, &caps()).unwrap() + uniform_dimension(&mb, &caps()).unwrap();
        prop_assert_eq!(uniform_dimension(&mab, &caps()).unwrap(), sum);
    }

    #[test]
    fn uniform_dimension_of_direct_sum_over_a_ring(r in ring_strategy()) {
        prop_assume!(r.order() <= 8);
        let m = regular_module(&r);
        let mm = direct_sum(&m, &m, &caps()).unwrap();
        prop_assert_eq!(uniform_dimension(&mm, &caps()).unwrap(), 2 * uniform_dimension(&m, &caps()).unwrap());
    }

    #[test]
    fn galois_connection(m in module_strategy()) {
        let s = end_ring(&m, &caps()).unwrap();
        for n in all_submodules(&m, &caps()).unwrap() {
            let l = left_annihilator(&s, &n).unwrap();
            let back = right_annihilator_in_module(&s, &l);
            prop_assert!(n.is_subset(&back));
            if is_fully_invariant(&s, &n) {
                prop_assert!(l.is_two_sided_ideal_of(s.ring()));
            }
        }
        for i in all_two_sided_ideals(s.ring(), &caps()).unwrap() {
            let n = right_annihilator_in_module(&s, &i);
            let l = left_annihilator(&s, &n).unwrap();
            prop_assert!(i.elements().is_subset(l.elements()));
        }
    }

    #[test]
    fn ring_hierarchy(r in ring_strategy()) {
        let holds = |p| check_ring_property(&r, p, &caps()).unwrap().holds;
        if holds(RingPropertyId::Baer) {
            prop_assert!(holds(RingPropertyId::QuasiBaer));
        }
        if holds(RingPropertyId::QuasiBaer) {
            prop_assert!(holds(RingPropertyId::PqBaer));
        }
        if holds(RingPropertyId::CentrallyAip) {
            prop_assert!(holds(RingPropertyId::Aip));
        }
        let module = check_module_property(&regular_module(&r), PropertyId::CentrallyEndoAip, &caps()).unwrap();
        prop_assert_eq!(holds(RingPropertyId::CentrallyAip), module.holds);
    }

    #[test]
    fn module_hierarchy(m in module_strategy()) {
        let holds = |p| check_module_property(&m, p, &caps()).unwrap().holds;
        if holds(PropertyId::QuasiBaer) {
            prop_assert!(holds(PropertyId::EndoAip));
        }
        if holds(PropertyId::CentrallyEndoAip) {
            prop_assert!(holds(PropertyId::EndoAip));
        }
        if holds(PropertyId::Baer) {
            prop_assert!(holds(PropertyId::QuasiBaer));
        }
    }

    #[test]
    fn verdicts_replay(m in module_strategy()) {
        for &p in PropertyId::ALL {
            let v = check_module_property(&m, p, &caps()).unwrap();
            prop_assert!(replay_module(&m, &v, &caps()).is_ok(), "{}", AnyProperty::Module(p));
        }
        for &p in RingPropertyId::ALL {
            let v = check_ring_property(m.ring(), p, &caps()).unwrap();
            prop_assert!(replay_ring(m.ring(), &v).is_ok(), "{}", AnyProperty::Ring(p));
        }
    }
}

#[test]
fn crt_product_matches_z6() {
    let (z2, z3, z6) = (
        make_cyclic_ring(2).unwrap(),
        make_cyclic_ring(3).unwrap(),
        make_cyclic_ring(6).unwrap(),
    );
    let p = direct_product(&z2, &z3, &caps()).unwrap();
    // x in Z6 goes to (x mod 2, x mod 3); invert that to map the product onto Z6.
    let mut map = vec![0; p.order()];
    for x in 0..6 {
        map[product_element(&z2, &z3, &p, x % 2, x % 3)] = x;
    }
    assert!(is_isomorphism(&p, &z6, &map));
    assert_eq!(direct_product(&z2, &z2, &caps()).unwrap().idempotents().len(), 4);
}
