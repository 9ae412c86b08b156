mod common;

use cohint::integrality::{
    isotypic_series, j_graded, verify_hilbert, verify_isomorphism, Analysis,
};
use cohint::linalg::q;
use common::analysis;

fn by_flat(an: &Analysis, pick: impl Fn(&[Vec<i64>]) -> bool) -> usize {
    an.strat
        .orbit_representatives()
        .into_iter()
        .find(|&i| pick(an.strat.strata[i].flat.basis()))
        .unwrap()
}

/// Dimensions of the top BPS space of GL2 on `(C^2 + dual)^g` forced by counting
/// degrees in the integrality isomorphism: the invariants `Q[x1,x2]^S2` minus the
/// axis summand `P_axis (x) Q[x1]` (shift g-1, pieces in degrees 0..g-1) minus the
/// generic summand `Q[x1,x2]^sgn` (shift 2g-1).
fn gl2_genus_top_by_counting(g: i64, len: usize) -> Vec<usize> {
    (0..len as i64)
        .map(|p| {
            let invariants = p / 2 + 1;
            let m = p - (g - 1);
            let axis = if m < 0 { 0 } else { m.min(g - 1) + 1 };
            let k = p - (2 * g - 1);
            let generic = if k < 0 { 0 } else { (k + 1) / 2 };
            (invariants - axis - generic) as usize
        })
        .collect()
}

#[test]
fn gl2_genus_top_space_matches_degree_count() {
    for g in 1..=4 {
        let an = analysis(&format!("gl2-cotangent:{g}"));
        let top = by_flat(&an, |b| b.is_empty());
        let dims = an.bps[&top].poly_dims();
        assert_eq!(dims, gl2_genus_top_by_counting(g, dims.len()), "g = {g}");
    }
}

#[test]
fn gl2_target_series() {
    let an = analysis("gl2-cotangent");
    let target: Vec<_> = an.target_series(6);
    assert_eq!(target, [1, 1, 2, 2, 3, 3, 4].map(q));
    assert!(verify_hilbert(&an, 6).unwrap().pass);
    assert!(verify_isomorphism(&an, 6).unwrap().pass);
}

#[test]
fn torus_target_series() {
    let an = analysis("torus2-cotangent");
    let target: Vec<_> = an.target_series(6);
    assert_eq!(target, (1..=7).map(q).collect::<Vec<_>>());
    assert!(verify_hilbert(&an, 6).unwrap().pass);
}

#[test]
fn gl2_isotypic_series() {
    let an = analysis("gl2-cotangent");
    let generic = by_flat(&an, |b| b.len() == 2);
    let axis = by_flat(&an, |b| b.len() == 1 && b[0] != [1, 1]);
    let s = &an.strat;
    let series = isotypic_series(s, &an.bps[&generic], &an.eps[&generic], 5).unwrap();
    assert_eq!(series, [0, 1, 1, 2, 2, 3].map(q));
    let series = isotypic_series(s, &an.bps[&axis], &an.eps[&axis], 5).unwrap();
    assert_eq!(series, [1; 6].map(q));
}

#[test]
fn small_verifications() {
    for key in ["sl2-irrep:5", "sl2-adjoint:2", "adjoint:gl2"] {
        let an = analysis(key);
        assert!(verify_hilbert(&an, 6).unwrap().pass, "{key}");
        assert!(verify_isomorphism(&an, 6).unwrap().pass, "{key}");
    }
}

#[test]
fn j_graded_examples() {
    let an = analysis("gl2-cotangent");
    let top = an.strat.top();
    assert_eq!(j_graded(&an.strat, top, 0).unwrap().dim(), 1);

    let an = analysis("torus2-cotangent");
    assert_eq!(j_graded(&an.strat, an.strat.top(), 0).unwrap().dim(), 0);

    let an = analysis("sl2-irrep:4");
    assert_eq!(j_graded(&an.strat, an.strat.top(), 1).unwrap().dim(), 0);
}
