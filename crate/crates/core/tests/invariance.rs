mod common;

use magma_lab::census;
use magma_lab::morphisms::{canonical_form, homomorphisms, is_isomorphic};
use magma_lab::properties::CENTER_MAX_ORDER;
use magma_lab::relations::{self, leq};
use magma_lab::subalgebra::{divisible_subgroupoids, subgroupoids};
use magma_lab::{Magma, Property};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn magma_and_perm() -> impl Strategy<Value = (Magma, Vec<usize>)> {
    (3usize..=4)
        .prop_flat_map(|n| {
            (Just(n), proptest::collection::vec(0..n as u8, n * n), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
        .prop_map(|(n, flat, perm)| (Magma::from_flat(n, flat).unwrap(), perm))
}

/// Random tables are rarely right entire; bias half the cases towards
/// tables whose columns are permutations so those verdicts get exercised.
fn biased() -> impl Strategy<Value = (Magma, Vec<usize>)> {
    prop_oneof![
        magma_and_perm(),
        (3usize..=4, any::<u64>(), any::<u64>()).prop_map(|(n, i, p)| {
            let m = census::right_entire_from_index(n, i % census::right_entire_count(n));
            let mut perm: Vec<usize> = (0..n).collect();
            let mut p = p;
            for k in (1..n).rev() {
                perm.swap(k, (p % (k as u64 + 1)) as usize);
                p /= k as u64 + 1;
            }
            (m, perm)
        }),
    ]
}

fn profile(m: &Magma) -> Vec<bool> {
    let r = leq(m);
    let mut out: Vec<bool> = Property::ALL
        .into_iter()
        .filter(|&p| p != Property::Center || m.order() <= CENTER_MAX_ORDER)
        .map(|p| p.verdict(m).unwrap().holds)
        .collect();
    out.extend([
        relations::is_reflexive(&r).holds,
        relations::is_antisymmetric(&r).holds,
        relations::is_transitive(&r).holds,
        relations::dominated_elements(m).verdict.holds,
    ]);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(160))]

    #[test]
    fn verdicts_survive_relabeling((m, perm) in biased()) {
        let image = m.permuted(&perm).unwrap();
        prop_assert_eq!(profile(&m), profile(&image));
    }

    #[test]
    fn relabeling_is_an_isomorphism((m, perm) in biased()) {
        let image = m.permuted(&perm).unwrap();
        for x in m.elements() {
            for y in m.elements() {
                prop_assert_eq!(image.op(perm[x], perm[y]), perm[m.op(x, y)]);
            }
        }
        let sigma = is_isomorphic(&m, &image).expect("relabeling is an isomorphism");
        for x in m.elements() {
            for y in m.elements() {
                prop_assert_eq!(image.op(sigma[x], sigma[y]), sigma[m.op(x, y)]);
            }
        }
    }

    #[test]
    fn canonical_form_is_invariant((m, perm) in biased()) {
        let image = m.permuted(&perm).unwrap();
        let canon = canonical_form(&m).unwrap();
        prop_assert_eq!(&canon, &canonical_form(&image).unwrap());
        prop_assert!(canon.table.as_slice() <= m.flat());
        prop_assert!(is_isomorphic(&canon.to_magma(), &m).is_some());
    }

    #[test]
    fn structure_counts_survive_relabeling((m, perm) in biased()) {
        let image = m.permuted(&perm).unwrap();
        prop_assert_eq!(subgroupoids(&m).unwrap().len(), subgroupoids(&image).unwrap().len());
        let div: Vec<usize> = divisible_subgroupoids(&m).unwrap().iter().map(|s| s.members().len()).collect();
        let div_image: Vec<usize> =
            divisible_subgroupoids(&image).unwrap().iter().map(|s| s.members().len()).collect();
        prop_assert_eq!(div, div_image);
        let c2 = magma_lab::magma::cyclic_group(2).unwrap();
        prop_assert_eq!(
            homomorphisms(&m, &c2, false).unwrap().len(),
            homomorphisms(&image, &c2, false).unwrap().len()
        );
    }

    #[test]
    fn subsets_of_closed_sets((m, _p) in magma_and_perm(), pick in subsequence(vec![0usize, 1, 2], 1..=3)) {
        // closure of an arbitrary subset is decided the same way as membership in the listing
        let set = magma_lab::ElementSet::from_elements(pick.iter().copied());
        let listed = subgroupoids(&m).unwrap().iter().any(|s| s.members() == set);
        prop_assert_eq!(listed, magma_lab::subalgebra::is_closed(&m, set));
    }
}

#[test]
fn iso_agrees_with_canonical_forms_on_order_two() {
    let all: Vec<Magma> = census::all_magmas(2).collect();
    for a in &all {
        for b in &all {
            let same_canon = canonical_form(a).unwrap() == canonical_form(b).unwrap();
            assert_eq!(is_isomorphic(a, b).is_some(), same_canon, "{a:?} {b:?}");
        }
    }
}

#[test]
fn iso_agrees_with_canonical_forms_on_order_three_sample() {
    let sample: Vec<Magma> = census::all_magmas(3).step_by(211).collect();
    for a in &sample {
        for b in &sample {
            let same_canon = canonical_form(a).unwrap() == canonical_form(b).unwrap();
            assert_eq!(is_isomorphic(a, b).is_some(), same_canon);
        }
    }
}

#[test]
fn canonical_classes_match_naive_count() {
    // 10 classes of order-2 magmas
    let tables = common::naive_tables(2);
    let mut forms: Vec<_> = tables.iter().map(|t| canonical_form(&common::to_magma(t)).unwrap()).collect();
    forms.sort();
    forms.dedup();
    assert_eq!(forms.len(), common::naive_iso_classes(&tables));
    assert_eq!(forms.len(), 10);
}
