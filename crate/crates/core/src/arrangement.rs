//! Strata of cocharacters as flats of the weight hyperplane arrangement.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::lattice::{
    numeric_invariants, pair, symmetry_class, Cocharacter, GroupData, NumericInvariants,
    RepresentationData, Weight, WeightMultiset,
};
use crate::weyl::{enumerate_group, Subgroup, WeylGroup};

/// A rational subspace of cocharacter space given by its saturated integer
/// basis in row Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flat {
    basis: Vec<Vec<i64>>,
    rank: usize,
}

impl Flat {
    pub fn full(rank: usize) -> Self {
        Flat {
            basis: (0..rank)
                .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
                .collect(),
            rank,
        }
    }

    /// Common kernel of the given normals.
    pub fn kernel_of(normals: &[Weight], rank: usize) -> Self {
        Flat {
            basis: integer_kernel(normals, rank),
            rank,
        }
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_rank(&self) -> usize {
        self.rank
    }

    pub fn contains(&self, lambda: &Cocharacter) -> bool {
        let mut rows: Vec<Vec<i128>> = self
            .basis
            .iter()
            .map(|r| r.iter().map(|&x| x as i128).collect())
            .collect();
        rows.push(lambda.0.iter().map(|&x| x as i128).collect());
        hnf(rows, self.rank).len() == self.dim()
    }

    pub fn vanishes(&self, alpha: &Weight) -> bool {
        self.basis
            .iter()
            .all(|b| pair(&Cocharacter(b.clone()), alpha) == 0)
    }
}

/// Row Hermite normal form: positive pivots, entries above a pivot reduced into `[0, pivot)`.
pub fn hnf(mut m: Vec<Vec<i128>>, cols: usize) -> Vec<Vec<i128>> {
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        while let Some(p) = (r..m.len())
            .filter(|&i| m[i][c] != 0)
            .min_by_key(|&i| m[i][c].abs())
        {
            m.swap(r, p);
            let pivot_row = m[r].clone();
            let mut clean = true;
            for row in m.iter_mut().skip(r + 1) {
                if row[c] != 0 {
                    let f = row[c] / pivot_row[c];
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x -= f * y;
                    }
                    clean &= row[c] == 0;
                }
            }
            if clean {
                break;
            }
        }
        if m[r][c] == 0 {
            continue;
        }
        if m[r][c] < 0 {
            for x in m[r].iter_mut() {
                *x = -*x;
            }
        }
        let pivot_row = m[r].clone();
        for row in m.iter_mut().take(r) {
            let f = row[c].div_euclid(pivot_row[c]);
            if f != 0 {
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

/// Saturated integer basis (in HNF) of `{mu in Z^n : <mu, a> = 0 for all normals a}`.
pub fn integer_kernel(normals: &[Weight], n: usize) -> Vec<Vec<i64>> {
    let m = normals.len();
    let rows: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            normals
                .iter()
                .map(|a| a.0[i] as i128)
                .chain((0..n).map(|j| i128::from(i == j)))
                .collect()
        })
        .collect();
    let reduced = hnf(rows, m + n);
    let kernel: Vec<Vec<i128>> = reduced
        .into_iter()
        .filter(|r| r[..m].iter().all(|&x| x == 0))
        .map(|r| r[m..].to_vec())
        .collect();
    hnf(kernel, n)
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| i64::try_from(x).expect("kernel entry overflows i64"))
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub index: usize,
    pub flat: Flat,
    /// Indices of the hyperplanes containing the flat.
    pub hyperplanes: Vec<usize>,
    pub zero_v: WeightMultiset,
    pub zero_g: WeightMultiset,
    pub rep: Cocharacter,
    pub dims: NumericInvariants,
    pub orbit: usize,
    /// Set stabilizer `W_lambda`.
    pub w_lower: Subgroup,
    /// Point stabilizer of the representative, `W^lambda`.
    pub w_upper: Subgroup,
}

impl Stratum {
    /// Nonzero and zero weights of `V^lambda` and `g^lambda` together.
    pub fn zero_weights(&self) -> impl Iterator<Item = &Weight> {
        self.zero_v.supports().chain(self.zero_g.supports())
    }
}

#[derive(Clone, Debug)]
pub struct Stratification {
    pub group: GroupData,
    pub rep: RepresentationData,
    pub weyl: WeylGroup,
    /// Primitive normals, first nonzero coordinate positive.
    pub hyperplanes: Vec<Weight>,
    pub strata: Vec<Stratum>,
    pub order: Vec<Vec<bool>>,
    /// `action[w][s]` is the index of `w . s`.
    pub action: Vec<Vec<usize>>,
    /// Members of each orbit; the first member is the orbit representative.
    pub orbits: Vec<Vec<usize>>,
}

pub fn enumerate_strata(
    group: &GroupData,
    rep: &RepresentationData,
    cap: usize,
) -> Result<Stratification> {
    if !symmetry_class(rep).is_weakly_symmetric() {
        return Err(Error::NotWeaklySymmetric);
    }
    let weyl = enumerate_group(group.rank, &group.weyl_generators, cap)?;
    let n = group.rank;

    let mut hyperplanes: Vec<Weight> = rep
        .v_weights
        .supports()
        .chain(group.g_weights.supports())
        .filter(|w| !w.is_zero())
        .map(|w| w.ray().1)
        .collect();
    hyperplanes.sort();
    hyperplanes.dedup();

    let closure = |flat: &Flat| -> Vec<usize> {
        (0..hyperplanes.len())
            .filter(|&h| flat.vanishes(&hyperplanes[h]))
            .collect()
    };

    let mut flats: BTreeMap<Vec<usize>, Flat> = BTreeMap::new();
    let full = Flat::full(n);
    let mut queue = VecDeque::from([(closure(&full), full)]);
    while let Some((key, flat)) = queue.pop_front() {
        if flats.contains_key(&key) {
            continue;
        }
        for h in 0..hyperplanes.len() {
            if key.binary_search(&h).is_ok() {
                continue;
            }
            let normals: Vec<Weight> = key
                .iter()
                .chain(std::iter::once(&h))
                .map(|&i| hyperplanes[i].clone())
                .collect();
            let sub = Flat::kernel_of(&normals, n);
            let sub_key = closure(&sub);
            if !flats.contains_key(&sub_key) {
                queue.push_back((sub_key, sub));
            }
        }
        flats.insert(key, flat);
    }

    let mut ordered: Vec<(Vec<usize>, Flat)> = flats.into_iter().collect();
    ordered.sort_by(|(_, a), (_, b)| b.dim().cmp(&a.dim()).then_with(|| a.basis.cmp(&b.basis)));

    let mut strata = Vec::with_capacity(ordered.len());
    for (index, (key, flat)) in ordered.into_iter().enumerate() {
        let rep_cochar = representative_cocharacter(&flat, &hyperplanes, &key);
        let zero_v = rep.v_weights.filter(|a| flat.vanishes(a));
        let zero_g = group.g_weights.filter(|a| flat.vanishes(a));
        let dims = numeric_invariants(group, rep, &rep_cochar)?;
        if dims.dim_g_fixed != zero_g.total() || dims.dim_v_fixed != zero_v.total() {
            return Err(Error::internal(format!(
                "representative {rep_cochar} is not generic in its flat"
            )));
        }
        let zv: Vec<Weight> = zero_v.supports().cloned().collect();
        let zg: Vec<Weight> = zero_g.supports().cloned().collect();
        let w_lower = weyl.set_stabilizer(&zv, &zg);
        let w_upper = weyl.point_stabilizer(&rep_cochar);
        if !w_upper.is_subgroup_of(&w_lower) {
            return Err(Error::internal(format!(
                "point stabilizer of {rep_cochar} is not inside the set stabilizer"
            )));
        }
        strata.push(Stratum {
            index,
            flat,
            hyperplanes: key,
            zero_v,
            zero_g,
            rep: rep_cochar,
            dims,
            orbit: usize::MAX,
            w_lower,
            w_upper,
        });
    }

    let count = strata.len();
    let order: Vec<Vec<bool>> = (0..count)
        .map(|a| (0..count).map(|b| leq(&strata[a], &strata[b])).collect())
        .collect();

    let by_key: BTreeMap<&Vec<usize>, usize> =
        strata.iter().map(|s| (&s.hyperplanes, s.index)).collect();
    let mut action = Vec::with_capacity(weyl.order());
    for w in weyl.elements() {
        let hmap: Vec<usize> = hyperplanes
            .iter()
            .map(|h| {
                let img = w.act(h).ray().1;
                hyperplanes
                    .binary_search(&img)
                    .map_err(|_| Error::internal("Weyl group does not permute the hyperplanes"))
            })
            .collect::<Result<_>>()?;
        let row = strata
            .iter()
            .map(|s| {
                let mut img: Vec<usize> = s.hyperplanes.iter().map(|&h| hmap[h]).collect();
                img.sort_unstable();
                by_key
                    .get(&img)
                    .copied()
                    .ok_or_else(|| Error::internal("Weyl group does not permute the strata"))
            })
            .collect::<Result<Vec<_>>>()?;
        action.push(row);
    }

    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for s in 0..count {
        if strata[s].orbit != usize::MAX {
            continue;
        }
        let mut members: Vec<usize> = action.iter().map(|row| row[s]).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            strata[m].orbit = orbits.len();
        }
        orbits.push(members);
    }

    Ok(Stratification {
        group: group.clone(),
        rep: rep.clone(),
        weyl,
        hyperplanes,
        strata,
        order,
        action,
        orbits,
    })
}

/// First point `sum c_i b_i`, `c = (1, M, M^2, ...)`, off every hyperplane not containing the flat.
pub fn representative_cocharacter(
    flat: &Flat,
    hyperplanes: &[Weight],
    containing: &[usize],
) -> Cocharacter {
    let n = flat.rank;
    if flat.dim() == 0 {
        return Cocharacter::zero(n);
    }
    let others: Vec<&Weight> = (0..hyperplanes.len())
        .filter(|h| containing.binary_search(h).is_err())
        .map(|h| &hyperplanes[h])
        .collect();
    for m in 1i64.. {
        let mut point = vec![0i64; n];
        let mut c = 1i64;
        for b in &flat.basis {
            for (p, x) in point.iter_mut().zip(b) {
                *p += c * x;
            }
            c *= m;
        }
        let lambda = Cocharacter(point);
        if others.iter().all(|a| pair(&lambda, a) != 0) {
            return lambda;
        }
    }
    unreachable!("generic points are dense")
}

/// `a <= b` iff the zero-sets of `a` are contained in those of `b`.
pub fn leq(a: &Stratum, b: &Stratum) -> bool {
    a.zero_v.supports().all(|w| b.zero_v.contains(w))
        && a.zero_g.supports().all(|w| b.zero_g.contains(w))
}

impl Stratification {
    pub fn rank(&self) -> usize {
        self.group.rank
    }

    pub fn top(&self) -> &Stratum {
        self.strata.last().expect("at least one stratum")
    }

    pub fn orbit_representatives(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o[0]).collect()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order[a][b]
    }

    /// Indices of the hyperplanes on which `lambda` vanishes.
    pub fn zero_hyperplanes(&self, lambda: &Cocharacter) -> Vec<usize> {
        (0..self.hyperplanes.len())
            .filter(|&h| pair(lambda, &self.hyperplanes[h]) == 0)
            .collect()
    }

    /// The stratum containing `lambda`.
    pub fn stratum_of(&self, lambda: &Cocharacter) -> Option<&Stratum> {
        let key = self.zero_hyperplanes(lambda);
        self.strata.iter().find(|s| s.hyperplanes == key)
    }

    /// A point `a * child.rep + b * parent_rep` (`b > 0`) whose signs agree with
    /// `parent_rep` wherever that is nonzero, and whose zero-set is the
    /// intersection of the two zero-sets.
    pub fn align_representative(
        &self,
        child: &Stratum,
        parent_rep: &Cocharacter,
    ) -> Result<Cocharacter> {
        let parent_zero = self.zero_hyperplanes(parent_rep);
        let wanted: Vec<usize> = child
            .hyperplanes
            .iter()
            .copied()
            .filter(|h| parent_zero.binary_search(h).is_ok())
            .collect();
        let mut b = 1i64;
        while b <= 1 << 24 {
            let mut coeffs = vec![0i64];
            for a in 1..=b {
                coeffs.push(a);
                coeffs.push(-a);
            }
            for a in coeffs {
                let nu = Cocharacter(
                    child
                        .rep
                        .0
                        .iter()
                        .zip(&parent_rep.0)
                        .map(|(c, p)| a * c + b * p)
                        .collect(),
                );
                let signs_ok = self.hyperplanes.iter().all(|h| {
                    let s = pair(parent_rep, h).signum();
                    s == 0 || pair(&nu, h).signum() == s
                });
                if signs_ok && self.zero_hyperplanes(&nu) == wanted {
                    return Ok(nu);
                }
            }
            b *= 2;
        }
        Err(Error::internal("align_representative: search exhausted"))
    }
}
