#![allow(dead_code)]

use std::collections::BTreeSet;

use cohint::arrangement::{enumerate_strata, Stratification};
use cohint::cli::catalog_data;
use cohint::integrality::{analyze, Analysis};
use cohint::lattice::{GroupData, RepresentationData, Weight, WeightMultiset};
use cohint::linalg::{q, QMatrix, Q};
use cohint::polyalg::{KernelForm, Poly};
use cohint::weyl::{enumerate_group, WeylElement, DEFAULT_GROUP_CAP};
use num_traits::Zero;

/// Every concrete catalog instance exercised by the suites.
pub fn catalog_inputs() -> Vec<String> {
    let mut keys = vec!["torus2-cotangent".to_string()];
    for g in 1..=3 {
        keys.push(format!("gl2-cotangent:{g}"));
    }
    for d in 2..=8 {
        keys.push(format!("sl2-irrep:{d}"));
    }
    for g in 1..=3 {
        keys.push(format!("sl2-adjoint:{g}"));
    }
    for name in ["sl2", "gl2", "sl3", "gl3"] {
        keys.push(format!("trivial:{name}"));
        keys.push(format!("adjoint:{name}"));
    }
    keys
}

pub fn analysis(key: &str) -> Analysis {
    let (g, v) = catalog_data(key).unwrap();
    analyze(&g, &v, DEFAULT_GROUP_CAP).unwrap()
}

pub fn stratification(key: &str) -> Stratification {
    let (g, v) = catalog_data(key).unwrap();
    enumerate_strata(&g, &v, DEFAULT_GROUP_CAP).unwrap()
}

pub fn group(name: &str) -> GroupData {
    match name {
        "torus2" => catalog_data("torus2-cotangent").unwrap().0,
        other => catalog_data(&format!("trivial:{other}")).unwrap().0,
    }
}

/// The W-orbit closure of `seeds` together with negatives, so the result is symmetric.
pub fn symmetric_closure(group: &GroupData, seeds: &[(Vec<i64>, u32)]) -> RepresentationData {
    let weyl = enumerate_group(group.rank, &group.weyl_generators, DEFAULT_GROUP_CAP).unwrap();
    let mut items = Vec::new();
    for (c, m) in seeds {
        let mut orbit = BTreeSet::new();
        for w in weyl.elements() {
            let a = w.act(&Weight(c.clone()));
            orbit.insert(a.0.iter().map(|x| -x).collect::<Vec<_>>());
            orbit.insert(a.0);
        }
        items.extend(orbit.into_iter().map(|c| (Weight(c), *m)));
    }
    RepresentationData {
        v_weights: WeightMultiset::new(items),
    }
}

fn linear(a: &Weight, x: &[Q]) -> Q {
    a.0.iter()
        .zip(x)
        .fold(Q::zero(), |acc, (&c, xi)| acc + q(c) * xi)
}

/// `M^T x`: a polynomial transformed by `w` takes at `x` the value it had at `M^T x`.
pub fn pulled_back(w: &WeylElement, x: &[Q]) -> Vec<Q> {
    let m = &w.matrix.0;
    (0..x.len())
        .map(|i| (0..x.len()).fold(Q::zero(), |acc, j| acc + q(m[j][i]) * &x[j]))
        .collect()
}

/// `sum_w f(M^T x) k(M^T x)` computed pointwise, without any polynomial division.
pub fn kernel_sum_at(f: &Poly, k: &KernelForm, cosets: &[&WeylElement], x: &[Q]) -> Option<Q> {
    let mut total = Q::zero();
    for w in cosets {
        let y = pulled_back(w, x);
        let mut den = Q::from_integer(1.into());
        for b in &k.denominator {
            den *= linear(b, &y);
        }
        if den.is_zero() {
            return None;
        }
        let mut num = k.scalar.clone() * f.evaluate(&y);
        for a in &k.numerator {
            num *= linear(a, &y);
        }
        total += num / den;
    }
    Some(total)
}

/// Five deterministic rational points where every transformed denominator is nonzero.
pub fn oracle_points(n: usize, k: &KernelForm, cosets: &[&WeylElement]) -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    let mut t = 1i64;
    while out.len() < 5 {
        let x: Vec<Q> = (0..n)
            .map(|i| {
                Q::new(
                    (t * 7 + 3 * (i as i64 + 1).pow(3) + t * t * (i as i64)).into(),
                    (i as i64 + 2).into(),
                )
            })
            .collect();
        if cosets.iter().all(|w| {
            k.denominator
                .iter()
                .all(|b| !linear(b, &pulled_back(w, &x)).is_zero())
        }) {
            out.push(x);
        }
        t += 1;
    }
    out
}

/// Number of distinct subspaces cut out by subsets of `hyperplanes`, found by
/// row-reducing every subset of at most `n` normals (any flat needs no more).
pub fn brute_force_flat_count(hyperplanes: &[Weight], n: usize) -> usize {
    fn walk(
        hs: &[Weight],
        n: usize,
        start: usize,
        chosen: &mut Vec<Vec<i64>>,
        seen: &mut BTreeSet<Vec<Vec<Q>>>,
    ) {
        let key = if chosen.is_empty() {
            Vec::new()
        } else {
            QMatrix::from_int_rows(n, chosen).rref().0.to_rows()
        };
        seen.insert(key);
        if chosen.len() == n {
            return;
        }
        for i in start..hs.len() {
            chosen.push(hs[i].0.clone());
            walk(hs, n, i + 1, chosen, seen);
            chosen.pop();
        }
    }
    let mut seen = BTreeSet::new();
    walk(hyperplanes, n, 0, &mut Vec::new(), &mut seen);
    seen.len()
}
