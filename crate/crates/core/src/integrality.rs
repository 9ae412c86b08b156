//! Induction kernels and operators, the character epsilon, BPS spaces and
//! the degree-wise checks of the integrality isomorphism.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arrangement::{enumerate_strata, Stratification, Stratum};
use crate::error::{Error, Result};
use crate::lattice::{pair, Cocharacter, GroupData, RepresentationData, Weight};
use crate::linalg::{coordinates_in, q, QMatrix, Q};
use crate::polyalg::{
    form_monomials, invariant_basis, kernel_sum, linear_span, orthogonal_complement, rref_span,
    GradedBasis, KernelForm, Poly,
};
use crate::weyl::{invert_series, molien_coefficients, WeylElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InductionKernel {
    pub source: Cocharacter,
    pub target: usize,
    pub form: KernelForm,
}

impl InductionKernel {
    pub fn degree(&self) -> i64 {
        self.form.degree()
    }
}

/// `k_{mu,lambda}`: weights of `V^lambda` over those of `g^lambda` on which `source` is negative.
pub fn kernel(source: &Cocharacter, target: &Stratum) -> InductionKernel {
    let negative = |ws: &crate::lattice::WeightMultiset| -> Vec<Weight> {
        ws.expanded()
            .filter(|a| pair(source, a) < 0)
            .cloned()
            .collect()
    };
    InductionKernel {
        source: source.clone(),
        target: target.index,
        form: KernelForm {
            numerator: negative(&target.zero_v),
            denominator: negative(&target.zero_g),
            scalar: Q::one(),
        },
    }
}

fn members<'a>(strat: &'a Stratification, h: &'a crate::weyl::Subgroup) -> Vec<&'a WeylElement> {
    strat.weyl.members(h).collect()
}

/// `Ind_{mu,lambda}(f)`: the kernel-twisted sum over `W^lambda / (Stab(source) cap W^lambda)`.
pub fn induct(
    strat: &Stratification,
    f: &Poly,
    source: &Cocharacter,
    target: &Stratum,
) -> Result<Poly> {
    let h = strat
        .weyl
        .point_stabilizer(source)
        .intersect(&target.w_upper);
    for w in strat.weyl.members(&h) {
        if f.substitute(w) != *f {
            return Err(Error::input(format!(
                "induct: {f} is not invariant under the stabilizer of {source}"
            )));
        }
    }
    let reps = strat.weyl.coset_representatives(&h, &target.w_upper)?;
    let cosets: Vec<&WeylElement> = reps.iter().map(|&i| strat.weyl.element(i)).collect();
    kernel_sum(f, &kernel(source, target).form, &cosets)
}

pub fn induct_to_top(strat: &Stratification, f: &Poly, source: &Stratum) -> Result<Poly> {
    induct(strat, f, &source.rep, strat.top())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonCharacter {
    /// Value at each member of `W_lambda`, keyed by element index.
    pub values: BTreeMap<usize, i64>,
}

impl EpsilonCharacter {
    pub fn value(&self, w: usize) -> i64 {
        self.values[&w]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.values().all(|&v| v == 1)
    }
}

fn generic_points(forms: &[KernelForm], n: usize, count: usize) -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    let mut m = 2i64;
    while out.len() < count {
        let mut x = Vec::with_capacity(n);
        let mut c = 1i64;
        for _ in 0..n {
            x.push(q(c));
            c *= m;
        }
        if forms.iter().all(|k| !k.vanishes_somewhere_at(&x)) {
            out.push(x);
        }
        m += 1;
    }
    out
}

/// `eps(w) = k_lambda / w(k_lambda)` on `W_lambda`, by evaluation at two generic points.
pub fn epsilon(strat: &Stratification, lambda: &Stratum) -> Result<EpsilonCharacter> {
    let k = kernel(&lambda.rep, strat.top()).form;
    let ws = members(strat, &lambda.w_lower);
    let mut forms: Vec<KernelForm> = ws.iter().map(|w| k.act(&w.matrix)).collect();
    forms.push(k.clone());
    let points = generic_points(&forms, strat.rank(), 2);
    let mut values = BTreeMap::new();
    for (w, wk) in ws.iter().zip(&forms) {
        let ratios: Vec<Q> = points
            .iter()
            .map(|x| k.evaluate(x).unwrap() / wk.evaluate(x).unwrap())
            .collect();
        if ratios[0] != ratios[1] {
            return Err(Error::Epsilon(format!(
                "w(k)/k is not constant for element {}: {} vs {}",
                w.index, ratios[0], ratios[1]
            )));
        }
        let v = if ratios[0] == q(1) {
            1
        } else if ratios[0] == q(-1) {
            -1
        } else {
            return Err(Error::Epsilon(format!(
                "value {} at element {} is not +-1",
                ratios[0], w.index
            )));
        };
        values.insert(w.index, v);
    }
    for &a in lambda.w_lower.members() {
        for &b in lambda.w_lower.members() {
            let ab = strat.weyl.mul(a, b);
            if values[&ab] != values[&a] * values[&b] {
                return Err(Error::Epsilon(format!(
                    "not multiplicative at elements {a}, {b}"
                )));
            }
        }
    }
    Ok(EpsilonCharacter { values })
}

fn weight_q(a: &Weight) -> Vec<Q> {
    a.0.iter().map(|&c| q(c)).collect()
}

/// RREF basis of `U_lambda`, the span of the zero-set weights.
pub fn u_basis(strat: &Stratification, lambda: &Stratum) -> Vec<Vec<Q>> {
    let forms: Vec<Vec<Q>> = lambda.zero_weights().map(weight_q).collect();
    linear_span(&forms, strat.rank())
}

/// The B-orthogonal complement of `U_lambda` in `t*`, a copy of the dual of the flat.
pub fn c_basis(strat: &Stratification, lambda: &Stratum, form: &QMatrix) -> Vec<Vec<Q>> {
    let n = strat.rank();
    let rows: Vec<Vec<Q>> = u_basis(strat, lambda)
        .iter()
        .map(|u| form.transpose().apply(u))
        .collect();
    let null = QMatrix::from_rows(n, rows).nullspace();
    linear_span(&null, n)
}

fn identity_forms(n: usize) -> Vec<Vec<Q>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Q::one() } else { Q::zero() })
                .collect()
        })
        .collect()
}

/// Strata strictly below `lambda`.
fn strictly_below<'a>(
    strat: &'a Stratification,
    lambda: &'a Stratum,
) -> impl Iterator<Item = &'a Stratum> {
    strat
        .strata
        .iter()
        .filter(move |mu| mu.index != lambda.index && strat.leq(mu.index, lambda.index))
}

/// Degree-`p` piece of `J_lambda^{W^lambda}` inside `Sym^p(U_lambda)`.
pub fn j_graded(strat: &Stratification, lambda: &Stratum, p: u32) -> Result<GradedBasis> {
    let n = strat.rank();
    let u = u_basis(strat, lambda);
    let upper = members(strat, &lambda.w_upper);
    let mut gens = Vec::new();
    for mu in strictly_below(strat, lambda) {
        let k = kernel(&mu.rep, lambda);
        let j = i64::from(p) - k.degree();
        if j < 0 {
            continue;
        }
        for m in form_monomials(&u, n, j as u32) {
            let g = kernel_sum(&m, &k.form, &upper)?;
            if !g.is_zero() {
                gens.push(g);
            }
        }
    }
    rref_span(&gens, p, n)
}

/// Dimension of `J_lambda^{W^lambda}` in degree `p` computed from the images of
/// the inductions `Ind_{mu,lambda}` intersected with `Sym^p(U_lambda)`.
pub fn j_graded_oracle(strat: &Stratification, lambda: &Stratum, p: u32) -> Result<usize> {
    let n = strat.rank();
    let mut images = Vec::new();
    for mu in strictly_below(strat, lambda) {
        let k = kernel(&mu.rep, lambda);
        let j = i64::from(p) - k.degree();
        if j < 0 {
            continue;
        }
        let h = strat
            .weyl
            .point_stabilizer(&mu.rep)
            .intersect(&lambda.w_upper);
        let inputs = invariant_basis(&strat.weyl, &h, j as u32, &identity_forms(n))?;
        for f in inputs.polys() {
            images.push(induct(strat, &f, &mu.rep, lambda)?);
        }
    }
    let a = rref_span(&images, p, n)?;
    let b = rref_span(&form_monomials(&u_basis(strat, lambda), n, p), p, n)?;
    Ok(a.dim() + b.dim() - a.join(&b).dim())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BpsSpace {
    pub stratum: usize,
    /// Largest polynomial degree that can carry a nonzero piece.
    pub cutoff: u32,
    /// `pieces[p]` is the degree-`p` part.
    pub pieces: Vec<GradedBasis>,
    pub ambient_dims: Vec<usize>,
    pub j_dims: Vec<usize>,
    /// Matrices of each `W_lambda` member on each piece.
    pub w_matrices: BTreeMap<usize, Vec<QMatrix>>,
    /// Shifted degree `i = 2p - d_lambda` to dimension.
    pub dt_table: BTreeMap<i64, usize>,
    pub euler: i64,
}

impl BpsSpace {
    pub fn total_dim(&self) -> usize {
        self.pieces.iter().map(GradedBasis::dim).sum()
    }

    pub fn poly_dims(&self) -> Vec<usize> {
        self.pieces.iter().map(GradedBasis::dim).collect()
    }
}

pub fn bps_space(strat: &Stratification, lambda: &Stratum, form: &QMatrix) -> Result<BpsSpace> {
    let cutoff = (lambda.dims.dim_v_fixed / 2) as u32;
    let u = u_basis(strat, lambda);
    let mut pieces = Vec::new();
    let mut ambient_dims = Vec::new();
    let mut j_dims = Vec::new();
    for p in 0..=cutoff + 2 {
        let ambient = invariant_basis(&strat.weyl, &lambda.w_upper, p, &u)?;
        let sub = j_graded(strat, lambda, p)?;
        if !sub.is_subspace_of(&ambient) {
            return Err(Error::internal(format!(
                "J is not inside the invariants at degree {p} of stratum {}",
                lambda.index
            )));
        }
        if p <= cutoff {
            ambient_dims.push(ambient.dim());
            j_dims.push(sub.dim());
            pieces.push(orthogonal_complement(&sub, &ambient, form)?);
        } else if sub.dim() != ambient.dim() {
            return Err(Error::BoundViolation(format!(
                "stratum {}: J has codimension {} at degree {p} beyond the bound {cutoff}",
                lambda.index,
                ambient.dim() - sub.dim()
            )));
        }
    }

    let mut w_matrices = BTreeMap::new();
    for w in strat.weyl.members(&lambda.w_lower) {
        let mats = pieces
            .iter()
            .map(|piece| {
                let k = piece.dim();
                let mut m = QMatrix::zeros(k, k);
                for (j, f) in piece.polys().iter().enumerate() {
                    let coords = piece.coordinates(&f.substitute(w))?.ok_or_else(|| {
                        Error::internal(format!(
                            "BPS piece of stratum {} is not stable under element {}",
                            lambda.index, w.index
                        ))
                    })?;
                    for (i, c) in coords.into_iter().enumerate() {
                        m[(i, j)] = c;
                    }
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>>>()?;
        w_matrices.insert(w.index, mats);
    }

    let d = lambda.dims.d_lambda;
    let lo = lambda.dims.dim_g_fixed as i64 - lambda.dims.dim_v_fixed as i64;
    let hi = lambda.dims.dim_g_fixed as i64;
    let mut dt_table = BTreeMap::new();
    let mut euler = 0i64;
    for (p, piece) in pieces.iter().enumerate() {
        if piece.dim() == 0 {
            continue;
        }
        let i = 2 * p as i64 - d;
        if i < lo || i > hi {
            return Err(Error::BoundViolation(format!(
                "stratum {}: shifted degree {i} outside [{lo}, {hi}]",
                lambda.index
            )));
        }
        dt_table.insert(i, piece.dim());
        euler += if i % 2 == 0 { 1 } else { -1 } * piece.dim() as i64;
    }

    Ok(BpsSpace {
        stratum: lambda.index,
        cutoff,
        pieces,
        ambient_dims,
        j_dims,
        w_matrices,
        dt_table,
        euler,
    })
}

/// Action of `w` on the flat of `lambda` (cocharacter action) in the flat's basis.
pub fn flat_action(lambda: &Stratum, w: &WeylElement) -> Result<QMatrix> {
    let basis: Vec<Vec<Q>> = lambda
        .flat
        .basis()
        .iter()
        .map(|b| b.iter().map(|&x| q(x)).collect())
        .collect();
    let k = basis.len();
    let mut m = QMatrix::zeros(k, k);
    for (j, b) in lambda.flat.basis().iter().enumerate() {
        let img: Vec<Q> = w.cochar.apply(b).into_iter().map(q).collect();
        let coords = coordinates_in(&basis, &img).ok_or_else(|| {
            Error::internal(format!(
                "element {} does not preserve the flat of stratum {}",
                w.index, lambda.index
            ))
        })?;
        for (i, c) in coords.into_iter().enumerate() {
            m[(i, j)] = c;
        }
    }
    Ok(m)
}

/// Graded dimensions of the eps-isotypic part of `P_lambda (x) Sym(flat*)`.
pub fn isotypic_series(
    strat: &Stratification,
    bps: &BpsSpace,
    eps: &EpsilonCharacter,
    cutoff: usize,
) -> Result<Vec<Q>> {
    let lambda = &strat.strata[bps.stratum];
    let mut acc = vec![Q::zero(); cutoff + 1];
    for w in strat.weyl.members(&lambda.w_lower) {
        let traces: Vec<Q> = bps.w_matrices[&w.index]
            .iter()
            .map(QMatrix::trace)
            .collect();
        if traces.iter().all(Zero::is_zero) {
            continue;
        }
        let series = invert_series(&flat_action(lambda, w)?.reversed_charpoly(), cutoff);
        let e = q(eps.value(w.index));
        for (m, slot) in acc.iter_mut().enumerate() {
            for (a, t) in traces.iter().enumerate().take(m + 1) {
                if !t.is_zero() {
                    *slot += &e * t * &series[m - a];
                }
            }
        }
    }
    let order = q(lambda.w_lower.order() as i64);
    Ok(acc.into_iter().map(|c| c / &order).collect())
}

/// Everything computed once per input: strata, invariant form, and BPS data per orbit.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub strat: Stratification,
    /// W-invariant positive definite form on characters.
    pub form: QMatrix,
    pub bps: BTreeMap<usize, BpsSpace>,
    pub eps: BTreeMap<usize, EpsilonCharacter>,
}

pub fn analyze(group: &GroupData, rep: &RepresentationData, cap: usize) -> Result<Analysis> {
    let strat = enumerate_strata(group, rep, cap)?;
    Analysis::new(strat)
}

impl Analysis {
    pub fn new(strat: Stratification) -> Result<Self> {
        let form = strat.weyl.averaged_form();
        let mut bps = BTreeMap::new();
        let mut eps = BTreeMap::new();
        for idx in strat.orbit_representatives() {
            let lambda = &strat.strata[idx];
            bps.insert(idx, bps_space(&strat, lambda, &form)?);
            eps.insert(idx, epsilon(&strat, lambda)?);
        }
        Ok(Analysis {
            strat,
            form,
            bps,
            eps,
        })
    }

    /// Largest per-stratum degree bound plus two.
    pub fn default_max_degree(&self) -> u32 {
        default_max_degree(&self.strat)
    }

    /// Hilbert series of `Sym(t*)^W` up to `cutoff`.
    pub fn target_series(&self, cutoff: usize) -> Vec<Q> {
        let elems: Vec<(QMatrix, Q)> = self
            .strat
            .weyl
            .elements()
            .iter()
            .map(|w| (w.matrix.to_q(), Q::one()))
            .collect();
        molien_coefficients(&elems, cutoff)
    }
}

pub fn default_max_degree(strat: &Stratification) -> u32 {
    strat
        .strata
        .iter()
        .map(|s| (s.dims.dim_v_fixed / 2) as u32)
        .max()
        .unwrap_or(0)
        + 2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertLine {
    pub degree: u32,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertLedger {
    pub lines: Vec<HilbertLine>,
    pub pass: bool,
}

pub fn verify_hilbert(an: &Analysis, max_degree: u32) -> Result<HilbertLedger> {
    let d = max_degree as i64;
    let target = an.target_series(max_degree as usize);
    let mut actual = vec![Q::zero(); max_degree as usize + 1];
    for (&idx, bps) in &an.bps {
        let r = an.strat.strata[idx].dims.r_lambda;
        if d - r < 0 {
            continue;
        }
        let iso = isotypic_series(&an.strat, bps, &an.eps[&idx], (d - r) as usize)?;
        for (p, slot) in actual.iter_mut().enumerate() {
            let m = p as i64 - r;
            if m >= 0 {
                *slot += &iso[m as usize];
            }
        }
    }
    let lines: Vec<HilbertLine> = target
        .iter()
        .zip(&actual)
        .enumerate()
        .map(|(p, (e, a))| HilbertLine {
            degree: p as u32,
            expected: e.to_string(),
            actual: a.to_string(),
            ok: e == a,
        })
        .collect();
    let pass = lines.iter().all(|l| l.ok);
    Ok(HilbertLedger { lines, pass })
}

/// Basis of the eps-isotypic part of `P^(a) (x) Sym^b(C_lambda)` for an orbit representative.
pub fn isotypic_basis(an: &Analysis, idx: usize, a: usize, b: u32) -> Result<GradedBasis> {
    let strat = &an.strat;
    let n = strat.rank();
    let lambda = &strat.strata[idx];
    let bps = &an.bps[&idx];
    let eps = &an.eps[&idx];
    let piece = &bps.pieces[a];
    let degree = a as u32 + b;
    if piece.dim() == 0 {
        return Ok(GradedBasis::empty(n, degree));
    }
    let c = c_basis(strat, lambda, &an.form);
    let vs = form_monomials(&c, n, b);
    let order = q(lambda.w_lower.order() as i64);
    let mut projected = Vec::new();
    for u in piece.polys() {
        for v in &vs {
            let x = u.mul(v);
            let mut acc = Poly::zero(n);
            for w in strat.weyl.members(&lambda.w_lower) {
                acc = acc.add(&x.substitute(w).scale(&q(eps.value(w.index))));
            }
            let acc = acc.scale(&(Q::one() / &order));
            if !acc.is_zero() {
                projected.push(acc);
            }
        }
    }
    rref_span(&projected, degree, n)
}

/// Images in `Sym^p(t*)^W` of the isotypic bases of all orbit representatives.
pub fn integrality_images(an: &Analysis, p: u32) -> Result<Vec<Poly>> {
    let strat = &an.strat;
    let mut images = Vec::new();
    for (&idx, bps) in &an.bps {
        let lambda = &strat.strata[idx];
        let m = i64::from(p) - lambda.dims.r_lambda;
        if m < 0 {
            continue;
        }
        for a in 0..=(m as usize).min(bps.cutoff as usize) {
            let b = m as u32 - a as u32;
            for y in isotypic_basis(an, idx, a, b)?.polys() {
                let img = induct_to_top(strat, &y, lambda)?;
                if !img.is_zero() && !img.is_homogeneous_of(p) {
                    return Err(Error::internal(format!(
                        "induction from stratum {idx} changed the expected degree {p}"
                    )));
                }
                images.push(img);
            }
        }
    }
    Ok(images)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsomorphismLine {
    pub degree: u32,
    pub target_dim: usize,
    pub images: usize,
    pub rank: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsomorphismLedger {
    pub lines: Vec<IsomorphismLine>,
    pub pass: bool,
}

pub fn verify_isomorphism(an: &Analysis, max_degree: u32) -> Result<IsomorphismLedger> {
    let n = an.strat.rank();
    let whole = an.strat.weyl.whole();
    let mut lines = Vec::new();
    for p in 0..=max_degree {
        let target = invariant_basis(&an.strat.weyl, &whole, p, &identity_forms(n))?;
        let images = integrality_images(an, p)?;
        let span = rref_span(&images, p, n)?;
        let inside = span.is_subspace_of(&target);
        let ok = inside && images.len() == target.dim() && span.dim() == images.len();
        lines.push(IsomorphismLine {
            degree: p,
            target_dim: target.dim(),
            images: images.len(),
            rank: span.dim(),
            ok,
        });
    }
    let pass = lines.iter().all(|l| l.ok);
    Ok(IsomorphismLedger { lines, pass })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssociativitySample {
    pub chain: [usize; 3],
    pub source: Cocharacter,
    pub degree: u32,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssociativityLedger {
    pub samples: Vec<AssociativitySample>,
    pub pass: bool,
}

/// Chains `s1 <= s2 <= s3` in stratum order, at most `limit` of them.
pub fn chains(strat: &Stratification, limit: usize) -> Vec<[usize; 3]> {
    let count = strat.strata.len();
    let mut out = Vec::new();
    for a in 0..count {
        for b in 0..count {
            if !strat.leq(a, b) {
                continue;
            }
            for c in 0..count {
                if strat.leq(b, c) {
                    out.push([a, b, c]);
                    if out.len() == limit {
                        return out;
                    }
                }
            }
        }
    }
    out
}

/// Checks `Ind_{s1,s3} = Ind_{s2,s3} o Ind_{s1,s2}` on sampled chains and degrees 0..=3.
pub fn verify_associativity(strat: &Stratification, limit: usize) -> Result<AssociativityLedger> {
    let n = strat.rank();
    let mut samples = Vec::new();
    for chain in chains(strat, limit) {
        let [s1, s2, s3] = chain.map(|i| &strat.strata[i]);
        let r2 = &s2.rep;
        let r1 = strat.align_representative(s1, r2)?;
        let h = strat.weyl.point_stabilizer(&r1);
        for d in 0..=3u32 {
            let basis = invariant_basis(&strat.weyl, &h, d, &identity_forms(n))?;
            if basis.dim() == 0 {
                continue;
            }
            let f = basis
                .polys()
                .iter()
                .enumerate()
                .fold(Poly::zero(n), |acc, (i, g)| {
                    acc.add(&g.scale(&q(i as i64 + 1)))
                });
            let direct = induct(strat, &f, &r1, s3)?;
            let mid = induct(strat, &f, &r1, s2)?;
            let composed = induct(strat, &mid, r2, s3)?;
            samples.push(AssociativitySample {
                chain,
                source: r1.clone(),
                degree: d,
                ok: direct == composed,
            });
        }
    }
    let pass = samples.iter().all(|s| s.ok);
    Ok(AssociativityLedger { samples, pass })
}
