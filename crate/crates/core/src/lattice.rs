//! Character and cocharacter lattices, weight multisets and the numeric
//! invariants attached to a cocharacter.
//!
//! Characters and cocharacters are integer tuples in one fixed basis of
//! `Z^n`; the pairing between them is the dot product.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::QMatrix;

/// An element of the character lattice `X*(T)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

/// An element of the cocharacter lattice `X_*(T)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cocharacter(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn neg(&self) -> Self {
        Weight(self.0.iter().map(|c| -c).collect())
    }

    /// Splits a weight as `scale * ray` where `ray` is primitive with its
    /// first nonzero coordinate positive. The zero weight is its own ray with scale 0.
    pub fn ray(&self) -> (i64, Weight) {
        let g = self.0.iter().fold(0i64, |acc, &c| acc.gcd(&c));
        if g == 0 {
            return (0, self.clone());
        }
        let first = self.0.iter().find(|&&c| c != 0).copied().unwrap_or(1);
        let s = if first < 0 { -g } else { g };
        (s, Weight(self.0.iter().map(|c| c / s).collect()))
    }

    /// Primitive direction keeping the sign (used for weak symmetry).
    pub fn signed_ray(&self) -> Weight {
        let g = self.0.iter().fold(0i64, |acc, &c| acc.gcd(&c));
        if g == 0 {
            return self.clone();
        }
        Weight(self.0.iter().map(|c| c / g).collect())
    }
}

impl Cocharacter {
    pub fn zero(rank: usize) -> Self {
        Cocharacter(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Cocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

pub fn pairing(lambda: &Cocharacter, alpha: &Weight) -> Result<i64> {
    if lambda.rank() != alpha.rank() {
        return Err(Error::LengthMismatch {
            expected: lambda.rank(),
            got: alpha.rank(),
        });
    }
    Ok(pair(lambda, alpha))
}

/// Unchecked pairing for internal use where ranks are already validated.
pub(crate) fn pair(lambda: &Cocharacter, alpha: &Weight) -> i64 {
    lambda.0.iter().zip(&alpha.0).map(|(a, b)| a * b).sum()
}

/// Square integer matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntMatrix(pub Vec<Vec<i64>>);

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        IntMatrix(
            (0..n)
                .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_square(&self) -> bool {
        self.0.iter().all(|r| r.len() == self.0.len())
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.dim();
        IntMatrix(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| (0..n).map(|k| self.0[i][k] * other.0[k][j]).sum())
                        .collect()
                })
                .collect(),
        )
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.dim();
        IntMatrix(
            (0..n)
                .map(|i| (0..n).map(|j| self.0[j][i]).collect())
                .collect(),
        )
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.0
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn act(&self, alpha: &Weight) -> Weight {
        Weight(self.apply(&alpha.0))
    }

    pub fn to_q(&self) -> QMatrix {
        QMatrix::from_int_rows(self.dim(), &self.0)
    }

    /// Inverse over the integers, if the matrix is unimodular.
    pub fn int_inverse(&self) -> Option<IntMatrix> {
        let inv = self.to_q().inverse()?;
        let n = self.dim();
        let mut out = vec![vec![0i64; n]; n];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                let v = &inv[(i, j)];
                if !v.is_integer() {
                    return None;
                }
                *x = i64::try_from(v.to_integer()).ok()?;
            }
        }
        Some(IntMatrix(out))
    }
}

/// Weights with multiplicities, kept sorted by coordinates with duplicates merged.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeightMultiset {
    entries: Vec<(Weight, u32)>,
}

impl WeightMultiset {
    pub fn new<I: IntoIterator<Item = (Weight, u32)>>(items: I) -> Self {
        let mut map: BTreeMap<Weight, u32> = BTreeMap::new();
        for (w, m) in items {
            if m > 0 {
                *map.entry(w).or_default() += m;
            }
        }
        WeightMultiset {
            entries: map.into_iter().collect(),
        }
    }

    pub fn from_weights<I: IntoIterator<Item = Weight>>(items: I) -> Self {
        Self::new(items.into_iter().map(|w| (w, 1)))
    }

    pub fn entries(&self) -> &[(Weight, u32)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|(_, m)| u64::from(*m)).sum()
    }

    pub fn multiplicity(&self, w: &Weight) -> u32 {
        self.entries
            .binary_search_by(|(x, _)| x.cmp(w))
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.multiplicity(w) > 0
    }

    pub fn supports(&self) -> impl Iterator<Item = &Weight> {
        self.entries.iter().map(|(w, _)| w)
    }

    /// Every weight repeated by its multiplicity.
    pub fn expanded(&self) -> impl Iterator<Item = &Weight> {
        self.entries
            .iter()
            .flat_map(|(w, m)| std::iter::repeat_n(w, *m as usize))
    }

    pub fn negated(&self) -> Self {
        Self::new(self.entries.iter().map(|(w, m)| (w.neg(), *m)))
    }

    pub fn map(&self, m: &IntMatrix) -> Self {
        Self::new(self.entries.iter().map(|(w, k)| (m.act(w), *k)))
    }

    pub fn filter<F: Fn(&Weight) -> bool>(&self, keep: F) -> Self {
        WeightMultiset {
            entries: self
                .entries
                .iter()
                .filter(|(w, _)| keep(w))
                .cloned()
                .collect(),
        }
    }

    pub fn union(&self, other: &WeightMultiset) -> Self {
        Self::new(self.entries.iter().chain(other.entries.iter()).cloned())
    }

    /// Multiset of primitive signed rays; zero weights stay zero.
    pub fn rays(&self) -> Self {
        Self::new(self.entries.iter().map(|(w, m)| (w.signed_ray(), *m)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupData {
    pub name: String,
    pub rank: usize,
    pub weyl_generators: Vec<IntMatrix>,
    pub g_weights: WeightMultiset,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationData {
    pub v_weights: WeightMultiset,
}

impl GroupData {
    /// Checks everything except finiteness of the generated group, which
    /// needs the enumeration in [`crate::weyl`].
    pub fn validate_lattice(&self) -> Result<Vec<String>> {
        let n = self.rank;
        if n == 0 {
            return Err(Error::input("rank must be positive"));
        }
        check_ranks("g_weights", &self.g_weights, n)?;
        for (i, g) in self.weyl_generators.iter().enumerate() {
            if g.dim() != n || !g.is_square() {
                return Err(Error::input(format!(
                    "weyl_generators[{i}]: expected a {n}x{n} matrix"
                )));
            }
            if g.int_inverse().is_none() {
                return Err(Error::input(format!(
                    "weyl_generators[{i}]: matrix is not invertible over the integers"
                )));
            }
            if self.g_weights.map(g) != self.g_weights {
                return Err(Error::input(format!(
                    "g_weights: not stable under weyl_generators[{i}]"
                )));
            }
        }
        if self.g_weights.multiplicity(&Weight::zero(n)) as usize != n {
            return Err(Error::input(format!(
                "g_weights: zero weight must have multiplicity exactly {n}"
            )));
        }
        if self.g_weights.negated() != self.g_weights {
            return Err(Error::input("g_weights: not symmetric under negation"));
        }
        let mut warnings = Vec::new();
        for (w, m) in self.g_weights.entries() {
            if !w.is_zero() && *m > 1 {
                warnings.push(format!(
                    "g_weights: nonzero weight {w} has multiplicity {m}"
                ));
            }
        }
        Ok(warnings)
    }

    pub fn dim(&self) -> u64 {
        self.g_weights.total()
    }
}

impl RepresentationData {
    pub fn validate_against(&self, group: &GroupData) -> Result<()> {
        check_ranks("v_weights", &self.v_weights, group.rank)?;
        for (i, g) in group.weyl_generators.iter().enumerate() {
            if self.v_weights.map(g) != self.v_weights {
                return Err(Error::input(format!(
                    "v_weights: not stable under weyl_generators[{i}]"
                )));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> u64 {
        self.v_weights.total()
    }
}

fn check_ranks(field: &str, ws: &WeightMultiset, n: usize) -> Result<()> {
    for (w, _) in ws.entries() {
        if w.rank() != n {
            return Err(Error::input(format!(
                "{field}: weight {w} has length {}, expected {n}",
                w.rank()
            )));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryClass {
    Symmetric,
    WeaklySymmetric,
    NotWeaklySymmetric,
}

impl SymmetryClass {
    pub fn is_weakly_symmetric(self) -> bool {
        self != SymmetryClass::NotWeaklySymmetric
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryClass::Symmetric => "symmetric",
            SymmetryClass::WeaklySymmetric => "weakly symmetric",
            SymmetryClass::NotWeaklySymmetric => "not weakly symmetric",
        })
    }
}

pub fn symmetry_class(rep: &RepresentationData) -> SymmetryClass {
    let ws = &rep.v_weights;
    if ws.negated() == *ws {
        return SymmetryClass::Symmetric;
    }
    let rays = ws.rays();
    if rays.negated() == rays {
        SymmetryClass::WeaklySymmetric
    } else {
        SymmetryClass::NotWeaklySymmetric
    }
}

/// The three sign slices of a weight multiset with respect to a cocharacter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slices {
    pub neg: WeightMultiset,
    pub zero: WeightMultiset,
    pub pos: WeightMultiset,
}

pub fn slice_weights(ws: &WeightMultiset, lambda: &Cocharacter) -> Slices {
    let mut neg = Vec::new();
    let mut zero = Vec::new();
    let mut pos = Vec::new();
    for (w, m) in ws.entries() {
        let bucket = match pair(lambda, w).signum() {
            -1 => &mut neg,
            0 => &mut zero,
            _ => &mut pos,
        };
        bucket.push((w.clone(), *m));
    }
    Slices {
        neg: WeightMultiset::new(neg),
        zero: WeightMultiset::new(zero),
        pos: WeightMultiset::new(pos),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericInvariants {
    pub dim_v_fixed: u64,
    pub dim_g_fixed: u64,
    pub d_lambda: i64,
    pub r_lambda: i64,
}

pub fn numeric_invariants(
    group: &GroupData,
    rep: &RepresentationData,
    lambda: &Cocharacter,
) -> Result<NumericInvariants> {
    if lambda.rank() != group.rank {
        return Err(Error::LengthMismatch {
            expected: group.rank,
            got: lambda.rank(),
        });
    }
    if !symmetry_class(rep).is_weakly_symmetric() {
        return Err(Error::NotWeaklySymmetric);
    }
    let v = slice_weights(&rep.v_weights, lambda);
    let g = slice_weights(&group.g_weights, lambda);
    let dim_v_fixed = v.zero.total();
    let dim_g_fixed = g.zero.total();
    let d_lambda = dim_v_fixed as i64 - dim_g_fixed as i64;
    let r_lambda = v.pos.total() as i64 - g.pos.total() as i64;
    let d0 = rep.dim() as i64 - group.dim() as i64;
    if d_lambda + 2 * r_lambda != d0 {
        return Err(Error::internal(format!(
            "d_lambda + 2 r_lambda = {} != d = {d0} at {lambda}",
            d_lambda + 2 * r_lambda
        )));
    }
    Ok(NumericInvariants {
        dim_v_fixed,
        dim_g_fixed,
        d_lambda,
        r_lambda,
    })
}
