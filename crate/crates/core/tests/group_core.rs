use cyclic_census::iso::is_isomorphism;
use cyclic_census::{find_isomorphism, is_isomorphic, ElementSet, FamilySpec, GroupError, GroupTable};
use proptest::prelude::*;

fn build(spec: &str) -> GroupTable {
    spec.parse::<FamilySpec>().unwrap().build().unwrap()
}

fn pool() -> Vec<GroupTable> {
    [
        "cyclic:1",
        "cyclic:2",
        "cyclic:5",
        "cyclic:12",
        "elementary_abelian_2:3",
        "dihedral:8",
        "dihedral:12",
        "symmetric:3",
        "symmetric:4",
        "quaternion:8",
        "quaternion:12",
        "product:cyclic:2,cyclic:4",
        "product:cyclic:3,symmetric:3",
    ]
    .iter()
    .map(|s| build(s))
    .collect()
}

// Rotation generator r is index 1 and the reflection s is index m in
// dihedral(2m); a transposition in symmetric(3) is found by order.
#[test]
fn element_order_examples() {
    let d8 = build("dihedral:8");
    assert_eq!(d8.element_order(0), 1);
    assert_eq!(d8.element_order(1), 4);
    let s3 = build("symmetric:3");
    let transposition = (0..6).find(|&x| s3.product(x, x) == 0 && x != 0).unwrap();
    assert_eq!(s3.element_order(transposition), 2);
    assert!(pool().iter().all(|g| g.element_order(0) == 1));
}

#[test]
fn generated_subgroup_examples() {
    let z4 = build("cyclic:4");
    assert_eq!(z4.generated_subgroup(&ElementSet::empty(4)).to_vec(), vec![0]);
    assert_eq!(z4.generated_subgroup(&ElementSet::singleton(4, 1)).len(), 4);
    let d8 = build("dihedral:8");
    let both = ElementSet::from_elements(8, [1, 4]);
    assert_eq!(d8.generated_subgroup(&both), ElementSet::full(8));
}

#[test]
fn centralizer_examples() {
    let s3 = build("symmetric:3");
    let three = (0..6).find(|&x| s3.element_order(x) == 3).unwrap();
    let h = s3.cyclic_closure(three);
    assert_eq!(h.len(), 3);
    let c = s3.centralizer(&h);
    assert_eq!(c, h);
    // Any Sylow 2-subgroup meets the centralizer trivially.
    let t = (0..6).find(|&x| s3.element_order(x) == 2).unwrap();
    assert_eq!(c.intersection(&s3.cyclic_closure(t)).len(), 1);

    let d8 = build("dihedral:8");
    let rotations = d8.cyclic_closure(1);
    assert_eq!(rotations.to_vec(), vec![0, 1, 2, 3]);
    assert_eq!(d8.centralizer(&rotations), rotations);
    assert_eq!(d8.centralizer(&ElementSet::singleton(8, 0)), ElementSet::full(8));
}

#[test]
fn abelian_and_exponent_examples() {
    assert!(build("cyclic:4").is_abelian());
    assert!(!build("symmetric:3").is_abelian());
    let d8 = build("dihedral:8");
    assert!(!d8.is_abelian());
    assert_ne!(d8.product(1, 4), d8.product(4, 1));
    assert_eq!(GroupTable::trivial().exponent(), 1);
    assert_eq!(build("elementary_abelian_2:3").exponent(), 2);
    assert_eq!(build("symmetric:3").exponent(), 6);
}

#[test]
fn direct_product_examples() {
    let g = build("dihedral:8");
    assert!(is_isomorphic(
        &GroupTable::trivial().direct_product(&g, 24).unwrap(),
        &g
    ));
    let klein = build("cyclic:2").direct_product(&build("cyclic:2"), 24).unwrap();
    assert_eq!((klein.order(), klein.exponent()), (4, 2));
    let z6 = build("cyclic:2").direct_product(&build("cyclic:3"), 24).unwrap();
    assert!(is_isomorphic(&z6, &build("cyclic:6")));
    assert_eq!(
        build("symmetric:4").direct_product(&build("cyclic:2"), 24),
        Err(GroupError::OrderOverflow { order: 48, max: 24 })
    );
}

#[test]
fn isomorphism_examples() {
    let klein = build("cyclic:2").direct_product(&build("cyclic:2"), 24).unwrap();
    assert!(!is_isomorphic(&build("cyclic:4"), &klein));
    let (s3, d6) = (build("symmetric:3"), build("dihedral:6"));
    let map = find_isomorphism(&s3, &d6).expect("S3 and D6 are isomorphic");
    assert!(is_isomorphism(&s3, &d6, &map));
    for g in pool() {
        assert!(is_isomorphic(&g, &g));
    }
}

#[test]
fn pool_is_pairwise_distinct_and_symmetric() {
    let groups = pool();
    for (i, g) in groups.iter().enumerate() {
        for (j, h) in groups.iter().enumerate() {
            assert_eq!(is_isomorphic(g, h), i == j, "{i} vs {j}");
        }
    }
}

#[test]
fn direct_product_commutes_up_to_isomorphism() {
    let groups: Vec<GroupTable> = pool().into_iter().filter(|g| g.order() <= 6).collect();
    for g in &groups {
        for h in &groups {
            let gh = g.direct_product(h, 64).unwrap();
            let hg = h.direct_product(g, 64).unwrap();
            assert!(is_isomorphic(&gh, &hg));
        }
    }
}

#[test]
fn lagrange_over_the_pool() {
    for g in pool() {
        let n = g.order();
        for x in g.elements() {
            assert_eq!(n % g.element_order(x), 0);
        }
        for x in g.elements() {
            for y in g.elements() {
                let s = g.generated_subgroup(&ElementSet::from_elements(n, [x, y]));
                assert_eq!(n % s.len(), 0);
                assert!(g.is_subgroup(&s));
            }
        }
    }
}

fn relabeling(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|rest| std::iter::once(0).chain(rest).collect())
}

fn pool_member() -> impl Strategy<Value = GroupTable> {
    (0..pool().len()).prop_map(|i| pool().swap_remove(i))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabeled_groups_are_isomorphic(
        (g, perm) in pool_member().prop_flat_map(|g| { let n = g.order(); (Just(g), relabeling(n)) })
    ) {
        let h = g.relabel(&perm);
        prop_assert_eq!(GroupTable::validate(&h.rows()), Ok(h.clone()));
        let map = find_isomorphism(&g, &h);
        prop_assert!(map.as_ref().is_some_and(|m| is_isomorphism(&g, &h, m)));
        prop_assert!(is_isomorphic(&h, &g));
        prop_assert_eq!(g.fingerprint(), h.fingerprint());
        prop_assert_eq!(g.center().len(), h.center().len());
    }

    #[test]
    fn validation_moves_any_identity_to_zero(
        (g, target) in pool_member().prop_flat_map(|g| { let n = g.order(); (Just(g), 0..n) })
    ) {
        // Swap labels 0 and `target`, putting the identity elsewhere.
        let n = g.order();
        let swap = |x: usize| if x == 0 { target } else if x == target { 0 } else { x };
        let raw: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| swap(g.product(swap(a), swap(b)))).collect())
            .collect();
        let h = GroupTable::validate(&raw).unwrap();
        prop_assert_eq!(h, g);
    }

    #[test]
    fn centralizers_are_subgroups(
        (g, bits) in pool_member().prop_flat_map(|g| { let n = g.order(); (Just(g), proptest::collection::vec(0..n, 0..4)) })
    ) {
        let s = ElementSet::from_elements(g.order(), bits);
        let c = g.centralizer(&s);
        prop_assert!(c.contains(0));
        prop_assert!(g.is_subgroup(&c));
        let gen = g.generated_subgroup(&s);
        prop_assert!(s.is_subset(&gen));
        prop_assert_eq!(g.order() % gen.len(), 0);
    }
}
