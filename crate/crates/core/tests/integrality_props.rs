mod common;

use cohint::arrangement::Stratification;
use cohint::integrality::{bps_space, epsilon, induct, j_graded, j_graded_oracle, kernel, u_basis};
use cohint::lattice::Cocharacter;
use cohint::linalg::{q, Q};
use cohint::polyalg::{invariant_basis, rref_span, ApolarForm, Poly};
use cohint::weyl::Subgroup;
use common::{analysis, catalog_inputs, stratification};
use num_traits::Zero;

fn identity(n: usize) -> Vec<Vec<Q>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect())
        .collect()
}

/// Inputs for `Ind` from `source` to the stratum with upper group `upper`.
fn inputs(s: &Stratification, source: &Cocharacter, upper: &Subgroup, d: u32) -> Vec<Poly> {
    let h = s.weyl.point_stabilizer(source).intersect(upper);
    invariant_basis(&s.weyl, &h, d, &identity(s.rank()))
        .unwrap()
        .polys()
}

/// `Some(c)` with `b = c a`, `c != 0`, or `None` when the two are not proportional.
fn ratio(a: &Poly, b: &Poly) -> Option<Q> {
    if a.is_zero() || b.is_zero() {
        return (a.is_zero() && b.is_zero()).then(|| q(1));
    }
    let (e, ca) = a.terms().iter().next().unwrap();
    let c = b.coeff(e) / ca;
    (!c.is_zero() && a.scale(&c) == *b).then_some(c)
}

#[test]
fn induction_preserves_shifted_degree() {
    let mut calls = 0;
    for key in catalog_inputs() {
        let s = stratification(&key);
        for mu in &s.strata {
            for lambda in &s.strata {
                if !s.leq(mu.index, lambda.index) {
                    continue;
                }
                let r = s.align_representative(mu, &lambda.rep).unwrap();
                for d in 0..=2u32 {
                    for f in inputs(&s, &r, &lambda.w_upper, d) {
                        let g = induct(&s, &f, &r, lambda).unwrap();
                        calls += 1;
                        if g.is_zero() {
                            continue;
                        }
                        let out = g.degree().unwrap() as i64;
                        assert!(g.is_homogeneous_of(out as u32), "{key}");
                        assert_eq!(
                            2 * out - lambda.dims.d_lambda,
                            2 * i64::from(d) - mu.dims.d_lambda,
                            "{key}: {} -> {} on {f}",
                            mu.index,
                            lambda.index
                        );
                    }
                }
            }
        }
    }
    assert!(calls > 100);
}

#[test]
fn induction_is_independent_of_the_representative_up_to_scalar() {
    for key in catalog_inputs() {
        let s = stratification(&key);
        let top = s.top();
        for mu in &s.strata {
            let others = [
                Cocharacter(mu.rep.0.iter().map(|c| -c).collect()),
                Cocharacter(mu.rep.0.iter().map(|c| 3 * c).collect()),
            ];
            for other in others {
                assert_eq!(s.zero_hyperplanes(&other), mu.hyperplanes);
                for d in 0..=3u32 {
                    for f in inputs(&s, &mu.rep, &top.w_upper, d) {
                        let a = induct(&s, &f, &mu.rep, top).unwrap();
                        let b = induct(&s, &f, &other, top).unwrap();
                        assert!(
                            ratio(&a, &b).is_some(),
                            "{key}: stratum {} at {other}: {a} vs {b}",
                            mu.index
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn orbit_members_have_equal_images() {
    for key in catalog_inputs() {
        let s = stratification(&key);
        let n = s.rank();
        let top = s.top();
        for orbit in &s.orbits {
            let first = &s.strata[orbit[0]];
            let shift = kernel(&first.rep, top).degree();
            for d in 0..=3u32 {
                let p = i64::from(d) + shift;
                if p < 0 {
                    continue;
                }
                let span_of = |idx: usize| {
                    let t = &s.strata[idx];
                    assert_eq!(kernel(&t.rep, top).degree(), shift);
                    let images: Vec<Poly> = inputs(&s, &t.rep, &top.w_upper, d)
                        .iter()
                        .map(|f| induct(&s, f, &t.rep, top).unwrap())
                        .collect();
                    rref_span(&images, p as u32, n).unwrap()
                };
                let reference = span_of(orbit[0]);
                for &m in &orbit[1..] {
                    assert_eq!(
                        span_of(m),
                        reference,
                        "{key}: orbit of {} member {m}, degree {d}",
                        orbit[0]
                    );
                }
            }
        }
    }
}

#[test]
fn epsilon_is_a_sign_character_on_every_stratum() {
    for key in catalog_inputs() {
        let s = stratification(&key);
        for t in &s.strata {
            let eps = epsilon(&s, t).unwrap();
            assert_eq!(eps.values.len(), t.w_lower.order());
            assert_eq!(eps.value(s.weyl.identity()), 1);
            for &a in t.w_lower.members() {
                assert!(eps.value(a) == 1 || eps.value(a) == -1);
                for &b in t.w_lower.members() {
                    assert_eq!(
                        eps.value(s.weyl.mul(a, b)),
                        eps.value(a) * eps.value(b),
                        "{key}"
                    );
                }
            }
        }
    }
}

#[test]
fn induction_is_twisted_equivariant() {
    for key in catalog_inputs() {
        let s = stratification(&key);
        let top = s.top();
        for idx in s.orbit_representatives() {
            let lambda = &s.strata[idx];
            let eps = epsilon(&s, lambda).unwrap();
            for d in 0..=3u32 {
                for f in inputs(&s, &lambda.rep, &top.w_upper, d) {
                    let base = induct(&s, &f, &lambda.rep, top).unwrap();
                    for w in s.weyl.members(&lambda.w_lower) {
                        let moved = induct(&s, &f.substitute(w), &lambda.rep, top).unwrap();
                        assert_eq!(
                            moved,
                            base.scale(&q(eps.value(w.index))),
                            "{key}: stratum {idx}, element {}",
                            w.index
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn bps_spaces_respect_bounds_and_orthogonality() {
    for key in catalog_inputs() {
        let an = analysis(&key);
        let s = &an.strat;
        let form = ApolarForm::new(an.form.clone());
        for (&idx, bps) in &an.bps {
            let t = &s.strata[idx];
            let lo = t.dims.dim_g_fixed as i64 - t.dims.dim_v_fixed as i64;
            let hi = t.dims.dim_g_fixed as i64;
            let mut euler = 0i64;
            for (p, piece) in bps.pieces.iter().enumerate() {
                let p32 = p as u32;
                assert!(2 * p as u64 <= t.dims.dim_v_fixed);
                let ambient = invariant_basis(&s.weyl, &t.w_upper, p32, &u_basis(s, t)).unwrap();
                assert!(piece.is_subspace_of(&ambient), "{key}");
                let j = j_graded(s, t, p32).unwrap();
                assert_eq!(
                    piece.dim() + j.dim(),
                    ambient.dim(),
                    "{key}: stratum {idx}, degree {p}"
                );
                for x in piece.polys() {
                    for y in j.polys() {
                        assert!(
                            form.pair(&x, &y, p32).is_zero(),
                            "{key}: stratum {idx}, degree {p}"
                        );
                    }
                }
                if piece.dim() > 0 {
                    let i = 2 * p as i64 - t.dims.d_lambda;
                    assert!(
                        lo <= i && i <= hi,
                        "{key}: stratum {idx}, shifted degree {i}"
                    );
                    assert_eq!(bps.dt_table[&i], piece.dim());
                    euler += if i % 2 == 0 { 1 } else { -1 } * piece.dim() as i64;
                }
            }
            assert_eq!(bps.dt_table.values().sum::<usize>(), bps.total_dim());
            assert_eq!(bps.euler, euler);
            // recomputing from scratch gives the same space
            assert_eq!(&bps_space(s, t, &an.form).unwrap(), bps);
        }
    }
}

#[test]
fn j_graded_agrees_with_image_oracle_in_rank_two() {
    let mut checked = 0;
    for key in catalog_inputs() {
        let s = stratification(&key);
        if s.rank() > 2 {
            continue;
        }
        for t in &s.strata {
            for p in 0..=3u32 {
                let fast = j_graded(&s, t, p).unwrap().dim();
                let slow = j_graded_oracle(&s, t, p).unwrap();
                assert_eq!(fast, slow, "{key}: stratum {}, degree {p}", t.index);
                checked += 1;
            }
        }
    }
    assert!(checked > 50);
}
