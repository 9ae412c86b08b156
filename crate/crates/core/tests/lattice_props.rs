mod common;

use cohint::lattice::{
    numeric_invariants, pairing, slice_weights, symmetry_class, Cocharacter, SymmetryClass, Weight,
};
use cohint::weyl::{cochar_action, enumerate_group, DEFAULT_GROUP_CAP};
use common::{catalog_inputs, group, stratification, symmetric_closure};
use proptest::prelude::*;

const GROUPS: &[&str] = &["torus2", "sl2", "gl2", "sl3", "gl3"];

fn coords(rank: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, rank)
}

fn group_and_rank() -> impl Strategy<Value = (&'static str, usize)> {
    prop::sample::select(GROUPS).prop_map(|g| (g, group(g).rank))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weyl_action_preserves_pairing(
        (name, lambda, alpha) in group_and_rank()
            .prop_flat_map(|(g, r)| (Just(g), coords(r), coords(r)))
    ) {
        let g = group(name);
        let weyl = enumerate_group(g.rank, &g.weyl_generators, DEFAULT_GROUP_CAP).unwrap();
        let lambda = Cocharacter(lambda);
        let alpha = Weight(alpha);
        let base = pairing(&lambda, &alpha).unwrap();
        for w in weyl.elements() {
            prop_assert_eq!(pairing(&cochar_action(w, &lambda), &w.act(&alpha)).unwrap(), base);
        }
    }

    #[test]
    fn slices_partition_the_multiset(
        (name, lambda, seeds) in group_and_rank().prop_flat_map(|(g, r)| (
            Just(g),
            coords(r),
            prop::collection::vec((coords(r), 1u32..=3), 1..4),
        ))
    ) {
        let g = group(name);
        let rep = symmetric_closure(&g, &seeds);
        let s = slice_weights(&rep.v_weights, &Cocharacter(lambda));
        prop_assert_eq!(s.neg.total() + s.zero.total() + s.pos.total(), rep.v_weights.total());
    }

    #[test]
    fn symmetric_inputs_balance_signs(
        (name, lambda, seeds) in group_and_rank().prop_flat_map(|(g, r)| (
            Just(g),
            coords(r),
            prop::collection::vec((coords(r), 1u32..=3), 1..4),
        ))
    ) {
        let g = group(name);
        let rep = symmetric_closure(&g, &seeds);
        let class = symmetry_class(&rep);
        prop_assert_eq!(class, SymmetryClass::Symmetric);
        prop_assert!(class.is_weakly_symmetric());
        let s = slice_weights(&rep.v_weights, &Cocharacter(lambda));
        prop_assert_eq!(s.neg.total(), s.pos.total());
    }

    #[test]
    fn dimension_identity_at_random_cocharacters(
        (name, lambda, seeds) in group_and_rank().prop_flat_map(|(g, r)| (
            Just(g),
            coords(r),
            prop::collection::vec((coords(r), 1u32..=2), 1..3),
        ))
    ) {
        let g = group(name);
        let rep = symmetric_closure(&g, &seeds);
        let inv = numeric_invariants(&g, &rep, &Cocharacter(lambda)).unwrap();
        prop_assert_eq!(inv.d_lambda + 2 * inv.r_lambda, rep.dim() as i64 - g.g_weights.total() as i64);
    }
}

#[test]
fn dimension_identity_at_every_catalog_representative() {
    for key in catalog_inputs() {
        let s = stratification(&key);
        let d = s.rep.dim() as i64 - s.group.g_weights.total() as i64;
        for t in &s.strata {
            assert_eq!(
                t.dims.d_lambda + 2 * t.dims.r_lambda,
                d,
                "{key}, stratum {}",
                t.index
            );
        }
    }
}

#[test]
fn catalog_classes() {
    for key in catalog_inputs() {
        let s = stratification(&key);
        let class = symmetry_class(&s.rep);
        assert!(class.is_weakly_symmetric(), "{key}");
    }
}
