//! Sparse multivariate polynomials over Q, kernel forms and graded linear
//! algebra on homogeneous pieces of `Sym(t*)`.
//!
//! Variable `x_i` is the linear form of the basis character `e_i`, so the
//! weight `alpha` corresponds to `sum_i alpha_i x_i`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{IntMatrix, Weight};
use crate::linalg::{q, rref_in_place, QMatrix, Q};
use crate::weyl::{Subgroup, WeylElement, WeylGroup};

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    pub fn monomial(exps: Vec<u32>, c: Q) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Poly { nvars, terms }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Q::one())
    }

    /// The linear form `sum_i c_i x_i`.
    pub fn linear(coeffs: &[Q]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; n];
                e[i] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    pub fn from_weight(alpha: &Weight) -> Self {
        let c: Vec<Q> = alpha.0.iter().map(|&a| q(a)).collect();
        Self::linear(&c)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Q> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[u32]) -> Q {
        self.terms.get(exps).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Q) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Change of variables by the character action of `m`: `x_i -> sum_j m[j][i] x_j`.
    pub fn substitute_matrix(&self, m: &IntMatrix) -> Poly {
        let n = self.nvars;
        let images: Vec<Poly> = (0..n)
            .map(|i| Poly::linear(&(0..n).map(|j| q(m.0[j][i])).collect::<Vec<_>>()))
            .collect();
        let mut powers: Vec<Vec<Poly>> = images
            .iter()
            .map(|p| vec![Poly::one(n), p.clone()])
            .collect();
        let mut out = Poly::zero(n);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(n, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][k as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    pub fn substitute(&self, w: &WeylElement) -> Poly {
        self.substitute_matrix(&w.matrix)
    }

    pub fn evaluate(&self, x: &[Q]) -> Q {
        assert_eq!(x.len(), self.nvars);
        let mut total = Q::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                for _ in 0..k {
                    t *= xi;
                }
            }
            total += t;
        }
        total
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| graded_lex_desc(a, b));
        for (k, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, p)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "{a}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Graded-lex order, largest first: higher degree first, then larger exponent of `x1`, ...
fn graded_lex_desc(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

/// All exponent vectors of total degree `d` in `n` variables, graded-lex descending.
pub fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n - 1, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// Divides `f` by the linear form `ell`, failing on a nonzero remainder.
pub fn exact_divide(f: &Poly, ell: &[Q]) -> Result<Poly> {
    let n = f.nvars;
    let k = ell
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::input("exact_divide: zero linear form"))?;
    let lead = &ell[k];
    let ell_poly = Poly::linear(ell);
    let mut rem = f.clone();
    let mut quot = Poly::zero(n);
    while let Some((e, c)) = rem
        .terms
        .iter()
        .max_by(|(a, _), (b, _)| a[k].cmp(&b[k]).then_with(|| a.cmp(b)))
        .map(|(e, c)| (e.clone(), c.clone()))
    {
        if e[k] == 0 {
            return Err(Error::NotDivisible(format!("{f} by {}", Poly::linear(ell))));
        }
        let mut qe = e;
        qe[k] -= 1;
        let t = Poly::monomial(qe, c / lead);
        rem = rem.sub(&t.mul(&ell_poly));
        quot = quot.add(&t);
    }
    Ok(quot)
}

/// A ratio of products of integer linear forms times a rational scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelForm {
    pub numerator: Vec<Weight>,
    pub denominator: Vec<Weight>,
    pub scalar: Q,
}

impl KernelForm {
    pub fn new(numerator: Vec<Weight>, denominator: Vec<Weight>, scalar: Q) -> Result<Self> {
        if numerator.iter().chain(&denominator).any(Weight::is_zero) {
            return Err(Error::input("kernel form contains a zero linear form"));
        }
        Ok(KernelForm {
            numerator,
            denominator,
            scalar,
        })
    }

    pub fn degree(&self) -> i64 {
        self.numerator.len() as i64 - self.denominator.len() as i64
    }

    pub fn act(&self, m: &IntMatrix) -> KernelForm {
        KernelForm {
            numerator: self.numerator.iter().map(|a| m.act(a)).collect(),
            denominator: self.denominator.iter().map(|a| m.act(a)).collect(),
            scalar: self.scalar.clone(),
        }
    }

    /// Value at `x`, or `None` when a denominator form vanishes there.
    pub fn evaluate(&self, x: &[Q]) -> Option<Q> {
        let form = |a: &Weight| -> Q {
            a.0.iter()
                .zip(x)
                .fold(Q::zero(), |acc, (&c, xi)| acc + q(c) * xi)
        };
        let mut den = Q::one();
        for a in &self.denominator {
            den *= form(a);
        }
        if den.is_zero() {
            return None;
        }
        let mut num = self.scalar.clone();
        for a in &self.numerator {
            num *= form(a);
        }
        Some(num / den)
    }

    pub fn vanishes_somewhere_at(&self, x: &[Q]) -> bool {
        self.numerator.iter().chain(&self.denominator).any(|a| {
            a.0.iter()
                .zip(x)
                .fold(Q::zero(), |acc, (&c, xi)| acc + q(c) * xi)
                .is_zero()
        })
    }
}

impl fmt::Display for KernelForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prod = |ws: &[Weight]| -> String {
            if ws.is_empty() {
                "1".to_string()
            } else {
                ws.iter()
                    .map(|w| format!("({})", Poly::from_weight(w)))
                    .collect::<Vec<_>>()
                    .join("")
            }
        };
        if !self.scalar.is_one() {
            write!(f, "{}*", self.scalar)?;
        }
        write!(f, "{} / {}", prod(&self.numerator), prod(&self.denominator))
    }
}

/// `sum_w w(f k)` over the given elements, cleared to a polynomial by exact division.
pub fn kernel_sum(f: &Poly, k: &KernelForm, cosets: &[&WeylElement]) -> Result<Poly> {
    let n = f.nvars;
    let mut parts: Vec<(Poly, BTreeMap<Weight, u32>)> = Vec::with_capacity(cosets.len());
    let mut common: BTreeMap<Weight, u32> = BTreeMap::new();
    for w in cosets {
        let mut num = f.substitute(w);
        for a in &k.numerator {
            num = num.mul(&Poly::from_weight(&w.act(a)));
        }
        let mut scale = BigInt::one();
        let mut den: BTreeMap<Weight, u32> = BTreeMap::new();
        for b in &k.denominator {
            let (s, r) = w.act(b).ray();
            if s == 0 {
                return Err(Error::input("kernel denominator contains a zero form"));
            }
            scale *= s;
            *den.entry(r).or_default() += 1;
        }
        for (r, e) in &den {
            let slot = common.entry(r.clone()).or_default();
            *slot = (*slot).max(*e);
        }
        parts.push((num.scale(&Q::new(BigInt::one(), scale)), den));
    }
    let mut total = Poly::zero(n);
    for (num, den) in parts {
        let mut t = num;
        for (r, e) in &common {
            let missing = e - den.get(r).copied().unwrap_or(0);
            if missing > 0 {
                t = t.mul(&Poly::from_weight(r).pow(missing));
            }
        }
        total = total.add(&t);
    }
    for (r, e) in &common {
        let ell: Vec<Q> = r.0.iter().map(|&c| q(c)).collect();
        for _ in 0..*e {
            if total.is_zero() {
                break;
            }
            total = exact_divide(&total, &ell)?;
        }
    }
    Ok(total.scale(&k.scalar))
}

/// An RREF basis of a subspace of `Sym^degree` in a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    nvars: usize,
    degree: u32,
    monomials: Vec<Vec<u32>>,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl GradedBasis {
    pub fn empty(nvars: usize, degree: u32) -> Self {
        GradedBasis {
            nvars,
            degree,
            monomials: monomials(nvars, degree),
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// The whole of `Sym^degree`.
    pub fn full(nvars: usize, degree: u32) -> Self {
        let mut b = Self::empty(nvars, degree);
        let m = b.monomials.len();
        b.rows = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| if i == j { Q::one() } else { Q::zero() })
                    .collect()
            })
            .collect();
        b.pivots = (0..m).collect();
        b
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn monomials(&self) -> &[Vec<u32>] {
        &self.monomials
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.rows
    }

    pub fn vector_of(&self, f: &Poly) -> Result<Vec<Q>> {
        if f.nvars != self.nvars || !f.is_homogeneous_of(self.degree) {
            return Err(Error::input(format!(
                "polynomial {f} is not homogeneous of degree {}",
                self.degree
            )));
        }
        let index: HashMap<&Vec<u32>, usize> = self
            .monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut v = vec![Q::zero(); self.monomials.len()];
        for (e, c) in &f.terms {
            v[index[e]] = c.clone();
        }
        Ok(v)
    }

    pub fn poly_of(&self, v: &[Q]) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (m, c) in self.monomials.iter().zip(v) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn polys(&self) -> Vec<Poly> {
        self.rows.iter().map(|r| self.poly_of(r)).collect()
    }

    fn from_vectors(nvars: usize, degree: u32, mut rows: Vec<Vec<Q>>) -> Self {
        let monos = monomials(nvars, degree);
        let pivots = rref_in_place(&mut rows, monos.len());
        rows.truncate(pivots.len());
        GradedBasis {
            nvars,
            degree,
            monomials: monos,
            rows,
            pivots,
        }
    }

    /// Coordinates of `f` in this basis, or `None` if `f` lies outside the span.
    pub fn coordinates(&self, f: &Poly) -> Result<Option<Vec<Q>>> {
        let v = self.vector_of(f)?;
        Ok(self.coordinates_of_vector(&v))
    }

    fn coordinates_of_vector(&self, v: &[Q]) -> Option<Vec<Q>> {
        let coords: Vec<Q> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![Q::zero(); v.len()];
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (x, r) in rebuilt.iter_mut().zip(row) {
                *x += c * r;
            }
        }
        (rebuilt == v).then_some(coords)
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.coordinates(f)?.is_some())
    }

    pub fn is_subspace_of(&self, other: &GradedBasis) -> bool {
        self.nvars == other.nvars
            && self.degree == other.degree
            && self
                .rows
                .iter()
                .all(|r| other.coordinates_of_vector(r).is_some())
    }

    pub fn join(&self, other: &GradedBasis) -> GradedBasis {
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        Self::from_vectors(self.nvars, self.degree, rows)
    }
}

pub fn rref_span(vectors: &[Poly], degree: u32, nvars: usize) -> Result<GradedBasis> {
    let empty = GradedBasis::empty(nvars, degree);
    let rows = vectors
        .iter()
        .map(|f| empty.vector_of(f))
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedBasis::from_vectors(nvars, degree, rows))
}

/// Averages `f` over the members of `h`.
pub fn reynolds(group: &WeylGroup, h: &Subgroup, f: &Poly) -> Poly {
    let mut acc = Poly::zero(f.nvars);
    for w in group.members(h) {
        acc = acc.add(&f.substitute(w));
    }
    acc.scale(&Q::new(BigInt::one(), BigInt::from(h.order())))
}

/// RREF basis (as rows of coefficients in `x_1..x_n`) of the span of the given linear forms.
pub fn linear_span(forms: &[Vec<Q>], n: usize) -> Vec<Vec<Q>> {
    let mut rows = forms.to_vec();
    let piv = rref_in_place(&mut rows, n);
    rows.truncate(piv.len());
    rows
}

/// All products of `forms` of total degree `d`, one per exponent vector.
pub fn form_monomials(forms: &[Vec<Q>], n: usize, d: u32) -> Vec<Poly> {
    let linear: Vec<Poly> = forms.iter().map(|f| Poly::linear(f)).collect();
    monomials(forms.len(), d)
        .into_iter()
        .map(|e| {
            e.iter()
                .zip(&linear)
                .fold(Poly::one(n), |acc, (&k, l)| acc.mul(&l.pow(k)))
        })
        .collect()
}

/// Basis of `Sym^p(span U)^H`.
pub fn invariant_basis(
    group: &WeylGroup,
    h: &Subgroup,
    p: u32,
    u: &[Vec<Q>],
) -> Result<GradedBasis> {
    let n = group.rank();
    let basis = linear_span(u, n);
    for w in group.members(h) {
        let m = w.matrix.to_q();
        for b in &basis {
            let img = m.apply(b);
            let mut rows = basis.clone();
            rows.push(img);
            if linear_span(&rows, n).len() != basis.len() {
                return Err(Error::input(
                    "invariant_basis: span U is not stable under H",
                ));
            }
        }
    }
    let gens: Vec<Poly> = form_monomials(&basis, n, p)
        .iter()
        .map(|m| reynolds(group, h, m))
        .collect();
    rref_span(&gens, p, n)
}

/// The apolar pairing on `Sym(t*)` induced by a symmetric form `B` on linear forms:
/// `<f, g> = f(D) g` with `D_i = sum_j B_ij d/dx_j`.
pub struct ApolarForm {
    b: QMatrix,
}

impl ApolarForm {
    pub fn new(b: QMatrix) -> Self {
        ApolarForm { b }
    }

    /// Gram matrix on the monomials of degree `d` in graded-lex descending order.
    pub fn gram(&self, d: u32) -> Vec<Vec<Q>> {
        let n = self.b.rows();
        let monos = monomials(n, d);
        let ops: Vec<Poly> = (0..n).map(|i| Poly::linear(self.b.row(i))).collect();
        let factorial = |e: &[u32]| -> Q {
            let mut f = BigInt::one();
            for &k in e {
                for j in 2..=k {
                    f *= j;
                }
            }
            Q::from_integer(f)
        };
        monos
            .iter()
            .map(|a| {
                let da = a
                    .iter()
                    .zip(&ops)
                    .fold(Poly::one(n), |acc, (&k, op)| acc.mul(&op.pow(k)));
                monos.iter().map(|b| da.coeff(b) * factorial(b)).collect()
            })
            .collect()
    }

    pub fn pair(&self, f: &Poly, g: &Poly, d: u32) -> Q {
        let basis = GradedBasis::empty(self.b.rows(), d);
        let fv = basis.vector_of(f).expect("homogeneous input");
        let gv = basis.vector_of(g).expect("homogeneous input");
        let gram = self.gram(d);
        let mut total = Q::zero();
        for (i, fi) in fv.iter().enumerate() {
            if fi.is_zero() {
                continue;
            }
            for (j, gj) in gv.iter().enumerate() {
                if !gj.is_zero() {
                    total += fi * &gram[i][j] * gj;
                }
            }
        }
        total
    }
}

/// The complement of `sub` inside `ambient` orthogonal for the apolar pairing of `b`.
pub fn orthogonal_complement(
    sub: &GradedBasis,
    ambient: &GradedBasis,
    b: &QMatrix,
) -> Result<GradedBasis> {
    if !sub.is_subspace_of(ambient) {
        return Err(Error::input(
            "orthogonal_complement: sub is not contained in ambient",
        ));
    }
    let d = ambient.degree;
    let n = ambient.nvars;
    if sub.dim() == 0 {
        return Ok(ambient.clone());
    }
    let gram = ApolarForm::new(b.clone()).gram(d);
    let m = ambient.monomials.len();
    // sg[i] = row i of S * G
    let sg: Vec<Vec<Q>> = sub
        .rows
        .iter()
        .map(|s| {
            (0..m)
                .map(|j| {
                    s.iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .fold(Q::zero(), |acc, (i, x)| acc + x * &gram[i][j])
                })
                .collect()
        })
        .collect();
    let constraint: Vec<Vec<Q>> = sg
        .iter()
        .map(|row| {
            ambient
                .rows
                .iter()
                .map(|a| row.iter().zip(a).fold(Q::zero(), |acc, (x, y)| acc + x * y))
                .collect()
        })
        .collect();
    let null = QMatrix::from_rows(ambient.dim(), constraint).nullspace();
    let rows: Vec<Vec<Q>> = null
        .iter()
        .map(|c| {
            let mut v = vec![Q::zero(); m];
            for (ci, a) in c.iter().zip(&ambient.rows) {
                if ci.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(a) {
                    *x += ci * y;
                }
            }
            v
        })
        .collect();
    Ok(GradedBasis::from_vectors(n, d, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::IntMatrix;
    use crate::linalg::q_frac;
    use crate::weyl::enumerate_group;

    fn x(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    fn lin(c: &[i64]) -> Vec<Q> {
        c.iter().map(|&v| q(v)).collect()
    }

    fn s2() -> WeylGroup {
        enumerate_group(2, &[IntMatrix(vec![vec![0, 1], vec![1, 0]])], 10).unwrap()
    }

    fn pm1() -> WeylGroup {
        enumerate_group(1, &[IntMatrix(vec![vec![-1]])], 10).unwrap()
    }

    #[test]
    fn substitute_examples() {
        let g = s2();
        let f = x(2, 0).pow(2).add(&x(2, 1));
        for w in g.elements() {
            let img = f.substitute(w);
            if w.index == g.identity() {
                assert_eq!(img, f);
            } else {
                assert_eq!(img, x(2, 1).pow(2).add(&x(2, 0)));
            }
        }
        let h = pm1();
        let s = h
            .elements()
            .iter()
            .find(|w| w.index != h.identity())
            .unwrap();
        assert_eq!(x(1, 0).pow(3).substitute(s), x(1, 0).pow(3).scale(&q(-1)));
    }

    #[test]
    fn substitute_matches_weight_action() {
        let m = IntMatrix(vec![vec![1, -1], vec![0, -1]]);
        let alpha = Weight(vec![2, 1]);
        assert_eq!(
            Poly::from_weight(&alpha).substitute_matrix(&m),
            Poly::from_weight(&m.act(&alpha))
        );
    }

    #[test]
    fn exact_divide_examples() {
        let f = x(2, 0).pow(2).sub(&x(2, 1).pow(2));
        assert_eq!(
            exact_divide(&f, &lin(&[1, -1])).unwrap(),
            x(2, 0).add(&x(2, 1))
        );
        assert!(matches!(
            exact_divide(&x(2, 0), &lin(&[0, 1])),
            Err(Error::NotDivisible(_))
        ));
        let f = x(2, 0).mul(&x(2, 1)).scale(&q(2)).add(&x(2, 1).pow(2));
        assert_eq!(
            exact_divide(&f, &lin(&[0, 1])).unwrap(),
            x(2, 0).scale(&q(2)).add(&x(2, 1))
        );
    }

    #[test]
    fn kernel_sum_examples() {
        let g = s2();
        let all: Vec<&WeylElement> = g.elements().iter().collect();
        let k = KernelForm::new(vec![Weight(vec![1, 0])], vec![Weight(vec![1, -1])], q(1)).unwrap();
        assert_eq!(
            kernel_sum(&x(2, 0), &k, &all).unwrap(),
            x(2, 0).add(&x(2, 1))
        );
        // Symmetric inputs pass through unchanged: x1/(x1-x2) + x2/(x2-x1) = 1.
        let prod = x(2, 0).mul(&x(2, 1));
        assert_eq!(kernel_sum(&prod, &k, &all).unwrap(), prod);
        let half = prod.scale(&q_frac(1, 2));
        assert_eq!(kernel_sum(&half, &k, &all).unwrap(), half);

        let h = pm1();
        let both: Vec<&WeylElement> = h.elements().iter().collect();
        let k = KernelForm::new(vec![], vec![Weight(vec![-2])], q(1)).unwrap();
        assert!(kernel_sum(&Poly::one(1), &k, &both).unwrap().is_zero());
    }

    #[test]
    fn kernel_sum_reports_non_polynomial_sums() {
        let g = s2();
        let id = g.element(g.identity());
        let k = KernelForm::new(vec![], vec![Weight(vec![1, -1])], q(1)).unwrap();
        assert!(matches!(
            kernel_sum(&Poly::one(2), &k, &[id]),
            Err(Error::NotDivisible(_))
        ));
    }

    #[test]
    fn rref_span_examples() {
        let a = x(2, 0).add(&x(2, 1));
        assert_eq!(
            rref_span(&[a.clone(), a.scale(&q(2))], 1, 2).unwrap().dim(),
            1
        );
        assert_eq!(rref_span(&[], 1, 2).unwrap().dim(), 0);
        assert_eq!(rref_span(&[x(2, 0), x(2, 1), a], 1, 2).unwrap().dim(), 2);
        assert!(rref_span(&[x(2, 0).add(&Poly::one(2))], 1, 2).is_err());
    }

    #[test]
    fn invariant_basis_examples() {
        let g = s2();
        let u = vec![lin(&[1, 0]), lin(&[0, 1])];
        let b = invariant_basis(&g, &g.whole(), 2, &u).unwrap();
        assert_eq!(b.dim(), 2);
        assert!(b.contains(&x(2, 0).mul(&x(2, 1))).unwrap());
        assert!(b.contains(&x(2, 0).pow(2).add(&x(2, 1).pow(2))).unwrap());

        let t = enumerate_group(1, &[], 10).unwrap();
        assert_eq!(
            invariant_basis(&t, &t.whole(), 3, &[lin(&[1])])
                .unwrap()
                .dim(),
            1
        );
        let h = pm1();
        assert_eq!(
            invariant_basis(&h, &h.whole(), 1, &[lin(&[1])])
                .unwrap()
                .dim(),
            0
        );
        assert!(invariant_basis(&g, &g.whole(), 1, &[lin(&[1, 0])]).is_err());
    }

    #[test]
    fn orthogonal_complement_examples() {
        let id = QMatrix::identity(2);
        let full = GradedBasis::full(2, 1);
        assert_eq!(orthogonal_complement(&full, &full, &id).unwrap().dim(), 0);
        let sub = rref_span(&[x(2, 0).add(&x(2, 1))], 1, 2).unwrap();
        let c = orthogonal_complement(&sub, &full, &id).unwrap();
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&x(2, 0).sub(&x(2, 1))).unwrap());
        let empty = GradedBasis::empty(2, 1);
        assert_eq!(orthogonal_complement(&empty, &full, &id).unwrap(), full);
        assert!(orthogonal_complement(&full, &sub, &id).is_err());
    }

    #[test]
    fn apolar_pairing_on_products_is_a_permanent() {
        // <x1 x2, x1 x2> = B11 B22 + B12 B21 for B = identity.
        let form = ApolarForm::new(QMatrix::identity(2));
        let m = x(2, 0).mul(&x(2, 1));
        assert_eq!(form.pair(&m, &m, 2), q(1));
        assert_eq!(form.pair(&x(2, 0).pow(2), &x(2, 0).pow(2), 2), q(2));
    }

    #[test]
    fn display_is_readable() {
        let f = x(2, 0).pow(2).sub(&x(2, 1).scale(&q_frac(1, 2)));
        assert_eq!(f.to_string(), "x1^2 - 1/2*x2");
        assert_eq!(Poly::zero(2).to_string(), "0");
    }
}
