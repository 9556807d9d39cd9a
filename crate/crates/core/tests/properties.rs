use num_rational::BigRational;
use proptest::prelude::*;

use dirac_index::dirac::{act_on_family, index_polynomial, spin_weights};
use dirac_index::fixtures::ds_families;
use dirac_index::lie::{GroupId, RootDatum, RootType, Weight, Which, WeylElement};
use dirac_index::poly::{div_linear_form, divides_linear_form, LinearForm, MultiPoly};
use dirac_index::rational::Q;
use dirac_index::springer::{symbol_of_bipartition, Bipartition, Partition};
use dirac_index::weyl_action::act;

const VARS: usize = 3;

fn rational() -> impl Strategy<Value = Q> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, VARS), rational()), 0..6)
        .prop_map(|terms| MultiPoly::from_terms(VARS, terms).unwrap())
}

fn point() -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec(rational(), VARS)
}

fn form() -> impl Strategy<Value = LinearForm> {
    prop::collection::vec(-3i64..=3, VARS)
        .prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
        .prop_map(|c| LinearForm::from_ints(&c).unwrap())
}

fn signed_perm(n: usize) -> impl Strategy<Value = WeylElement> {
    (Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), prop::collection::vec(prop::bool::ANY, n))
        .prop_map(|(perm, flips)| {
            let signs = flips.iter().map(|&f| if f { -1 } else { 1 }).collect();
            WeylElement::new(perm, signs).unwrap()
        })
}

fn small_group() -> impl Strategy<Value = GroupId> {
    prop_oneof![
        Just(GroupId::Su { p: 1, q: 1 }),
        Just(GroupId::Su { p: 2, q: 1 }),
        Just(GroupId::Su { p: 2, q: 2 }),
        Just(GroupId::SpReal { n: 2 }),
        Just(GroupId::SoOdd { p: 1, q: 1 }),
        Just(GroupId::SoOdd { p: 2, q: 0 }),
        Just(GroupId::SpPq { p: 1, q: 1 }),
        Just(GroupId::SoEven { p: 1, q: 1 }),
        Just(GroupId::SoStar { n: 3 }),
    ]
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..7, 0..7).prop_map(Partition::from_unsorted)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&MultiPoly::one(VARS)), a.clone());
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(), b in poly(), x in point()) {
        let (ea, eb) = (a.eval(&x).unwrap(), b.eval(&x).unwrap());
        prop_assert_eq!(a.mul(&b).eval(&x).unwrap(), &ea * &eb);
        prop_assert_eq!(a.add(&b).eval(&x).unwrap(), ea + eb);
    }

    #[test]
    fn json_roundtrip(a in poly()) {
        let text = serde_json::to_string(&a).unwrap();
        let back: MultiPoly = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn linear_factor_division(a in poly(), l in form()) {
        let p = a.mul(&l.to_poly());
        prop_assert!(divides_linear_form(&p, &l).unwrap());
        prop_assert_eq!(div_linear_form(&p, &l).unwrap(), Some(a));
    }

    #[test]
    fn weyl_group_laws(a in signed_perm(4), b in signed_perm(4), c in signed_perm(4), x in prop::collection::vec(-9i64..=9, 4)) {
        let id = WeylElement::identity(4);
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert_eq!(a.compose(&a.inverse()), id.clone());
        prop_assert_eq!(a.inverse().compose(&a), id);
        prop_assert_eq!(a.compose(&b).sgn(), a.sgn() * b.sgn());
        let v = Weight::from_ints(&x);
        prop_assert_eq!(a.compose(&b).apply(&v), a.apply(&b.apply(&v)));
        prop_assert_eq!(WeylElement::decode(&a.encode()).unwrap(), a);
    }

    #[test]
    fn act_is_a_homomorphism(a in signed_perm(VARS), b in signed_perm(VARS), p in poly(), r in poly()) {
        prop_assert_eq!(act(&a.compose(&b), &p), act(&a, &act(&b, &p)));
        prop_assert_eq!(act(&a, &p.mul(&r)), act(&a, &p).mul(&act(&a, &r)));
        prop_assert_eq!(act(&a.inverse(), &act(&a, &p)), p);
    }

    #[test]
    fn index_polynomial_equivariance(g in small_group(), k in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let d = RootDatum::new(g).unwrap();
        let fams = ds_families(&d).unwrap();
        let fam = &fams[k.index(fams.len())];
        let w = d.weyl(Which::G).unwrap();
        let x = &w[j.index(w.len())];
        prop_assert_eq!(index_polynomial(&act_on_family(x, fam), &d), act(x, &index_polynomial(fam, &d)));
    }

    #[test]
    fn dual_involution(p in partition()) {
        prop_assert_eq!(p.dual().dual(), p.clone());
        prop_assert_eq!(p.dual().size(), p.size());
        prop_assert_eq!(p.dual().tableaux(), p.tableaux());
    }

    #[test]
    fn symbol_roundtrip(a in partition(), b in partition(), t in prop_oneof![Just(RootType::B), Just(RootType::C), Just(RootType::D)]) {
        let bp = Bipartition::new(a, b);
        let s = symbol_of_bipartition(&bp, t).unwrap();
        prop_assert_eq!(s.bipartition(), Some(bp));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(9))]

    #[test]
    fn spin_module_has_two_to_the_q_weights(g in small_group()) {
        let d = RootDatum::new(g).unwrap();
        let s = spin_weights(&d).unwrap();
        let total: u64 = s.plus.values().chain(s.minus.values()).sum();
        let q = d.noncompact_roots().count();
        prop_assert_eq!(total, 1u64 << q);
    }
}
