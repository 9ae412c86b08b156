//! Finite integer matrix groups: enumeration, stabilizers, cosets, the
//! averaged invariant form and Molien-type series.

use std::collections::{HashMap, VecDeque};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Cocharacter, IntMatrix, Weight};
use crate::linalg::{q, QMatrix, Q};

pub const DEFAULT_GROUP_CAP: usize = 10080;

/// Products above this order are computed on demand instead of tabulated.
const TABLE_LIMIT: usize = 2048;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    /// Action on characters.
    pub matrix: IntMatrix,
    /// Inverse transpose, the action on cocharacters.
    pub cochar: IntMatrix,
    pub index: usize,
}

impl WeylElement {
    pub fn act(&self, alpha: &Weight) -> Weight {
        self.matrix.act(alpha)
    }
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    rank: usize,
    elements: Vec<WeylElement>,
    lookup: HashMap<IntMatrix, usize>,
    table: Option<Vec<Vec<usize>>>,
    inverses: Vec<usize>,
    identity: usize,
}

/// A subgroup stored as a sorted index mask into its parent group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    pub fn from_members(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Subgroup { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.members.binary_search(&idx).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&i| other.contains(i))
                .collect(),
        }
    }
}

pub fn enumerate_group(rank: usize, generators: &[IntMatrix], cap: usize) -> Result<WeylGroup> {
    let id = IntMatrix::identity(rank);
    let mut seen: HashMap<IntMatrix, ()> = HashMap::new();
    let mut order = vec![id.clone()];
    seen.insert(id.clone(), ());
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in generators {
            let h = s.mul(&g);
            if seen.contains_key(&h) {
                continue;
            }
            if order.len() >= cap {
                return Err(Error::GroupNotFinite { cap });
            }
            seen.insert(h.clone(), ());
            order.push(h.clone());
            queue.push_back(h);
        }
    }
    order.sort();

    let lookup: HashMap<IntMatrix, usize> = order
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let identity = lookup[&IntMatrix::identity(rank)];
    let mut inverses = vec![0; order.len()];
    let mut elements = Vec::with_capacity(order.len());
    for (i, m) in order.iter().enumerate() {
        let inv = m
            .int_inverse()
            .ok_or_else(|| Error::input("group element is not invertible over the integers"))?;
        inverses[i] = *lookup
            .get(&inv)
            .ok_or_else(|| Error::internal("enumerated group is not closed under inverses"))?;
        elements.push(WeylElement {
            matrix: m.clone(),
            cochar: inv.transpose(),
            index: i,
        });
    }
    let mut group = WeylGroup {
        rank,
        elements,
        lookup,
        table: None,
        inverses,
        identity,
    };
    if group.order() <= TABLE_LIMIT {
        let n = group.order();
        let mut table = vec![vec![0; n]; n];
        for (i, row) in table.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = group.lookup_product(i, j)?;
            }
        }
        group.table = Some(table);
    }
    Ok(group)
}

impl WeylGroup {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &WeylElement {
        &self.elements[idx]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, idx: usize) -> usize {
        self.inverses[idx]
    }

    pub fn index_of(&self, m: &IntMatrix) -> Option<usize> {
        self.lookup.get(m).copied()
    }

    fn lookup_product(&self, a: usize, b: usize) -> Result<usize> {
        let m = self.elements[a].matrix.mul(&self.elements[b].matrix);
        self.index_of(&m)
            .ok_or_else(|| Error::internal("enumerated group is not closed under products"))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a][b],
            None => self
                .lookup_product(a, b)
                .expect("product of enumerated elements must be enumerated"),
        }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: (0..self.order()).collect(),
        }
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup {
            members: vec![self.identity],
        }
    }

    pub fn members<'a>(&'a self, h: &'a Subgroup) -> impl Iterator<Item = &'a WeylElement> + 'a {
        h.members.iter().map(move |&i| &self.elements[i])
    }

    pub fn point_stabilizer(&self, lambda: &Cocharacter) -> Subgroup {
        Subgroup {
            members: self
                .elements
                .iter()
                .filter(|w| cochar_action(w, lambda) == *lambda)
                .map(|w| w.index)
                .collect(),
        }
    }

    /// Elements mapping each of the given weight sets onto itself.
    pub fn set_stabilizer(&self, zero_v: &[Weight], zero_g: &[Weight]) -> Subgroup {
        let preserves =
            |w: &WeylElement, set: &[Weight]| set.iter().all(|a| set.contains(&w.act(a)));
        Subgroup {
            members: self
                .elements
                .iter()
                .filter(|w| preserves(w, zero_v) && preserves(w, zero_g))
                .map(|w| w.index)
                .collect(),
        }
    }

    /// One representative (the least index) per left coset `wH` inside `K`.
    pub fn coset_representatives(&self, h: &Subgroup, k: &Subgroup) -> Result<Vec<usize>> {
        if !h.is_subgroup_of(k) {
            return Err(Error::input(
                "coset_representatives: H is not contained in K",
            ));
        }
        let mut covered = vec![false; self.order()];
        let mut reps = Vec::new();
        for &w in &k.members {
            if covered[w] {
                continue;
            }
            reps.push(w);
            for &x in &h.members {
                covered[self.mul(w, x)] = true;
            }
        }
        Ok(reps)
    }

    /// `B = (1/|W|) sum_w w^T w`, a positive definite W-invariant form on characters.
    pub fn averaged_form(&self) -> QMatrix {
        let n = self.rank;
        let mut b = QMatrix::zeros(n, n);
        for w in &self.elements {
            let m = w.matrix.to_q();
            b = b.add(&m.transpose().mul(&m));
        }
        b.scale(&Q::new(1.into(), (self.order() as i64).into()))
    }

    pub fn is_closed(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| {
            self.mul(a, self.inverses[a]) == self.identity
                && (0..n).all(|b| {
                    self.index_of(&self.elements[a].matrix.mul(&self.elements[b].matrix))
                        .is_some()
                })
        })
    }
}

pub fn cochar_action(w: &WeylElement, lambda: &Cocharacter) -> Cocharacter {
    Cocharacter(w.cochar.apply(&lambda.0))
}

/// Coefficients `c_0..c_cutoff` of `(1/N) sum_i s_i / det(I - q M_i)`.
pub fn molien_coefficients(elements: &[(QMatrix, Q)], cutoff: usize) -> Vec<Q> {
    let mut acc = vec![Q::zero(); cutoff + 1];
    if elements.is_empty() {
        return acc;
    }
    for (m, s) in elements {
        if s.is_zero() {
            continue;
        }
        let series = invert_series(&m.reversed_charpoly(), cutoff);
        for (a, c) in acc.iter_mut().zip(series) {
            *a += s * c;
        }
    }
    let n = q(elements.len() as i64);
    acc.into_iter().map(|c| c / &n).collect()
}

/// Power series inverse of `p` (with `p[0] = 1`) truncated at `cutoff`.
pub fn invert_series(p: &[Q], cutoff: usize) -> Vec<Q> {
    assert!(
        p.first().is_some_and(|c| c.is_one()),
        "series must start with 1"
    );
    let mut out = vec![Q::zero(); cutoff + 1];
    out[0] = Q::one();
    for k in 1..=cutoff {
        let mut s = Q::zero();
        for j in 1..=k.min(p.len() - 1) {
            s += &p[j] * &out[k - j];
        }
        out[k] = -s;
    }
    out
}
