//! The group algebra over a coefficient ring: convolution, commutators, the
//! augmentation map, the quadratic forms `A_h` and the α/β factors.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::context::GroupContext;
use crate::cyclotomic::{CycloField, CycloNumber};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::polyring::{Poly, VarLookup, VarTable};
use crate::reps::{chi_prime, Character};
use crate::ring::Ring;

/// `Σ_g c_g g`, coefficients indexed by element index.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<R = Poly> {
    group: Arc<FiniteGroup>,
    coeffs: Vec<R>,
}

impl<R: Ring> AlgebraElement<R> {
    pub fn zero(group: &Arc<FiniteGroup>, field: &Arc<CycloField>) -> Self {
        AlgebraElement {
            group: Arc::clone(group),
            coeffs: vec![R::zero_in(field); group.order()],
        }
    }

    /// The basis element `g` (the indicator function `δ_g`).
    pub fn basis(group: &Arc<FiniteGroup>, field: &Arc<CycloField>, g: usize) -> Self {
        Self::scalar_at(group, R::one_in(field), g)
    }

    /// `c · e`.
    pub fn scalar(group: &Arc<FiniteGroup>, c: R) -> Self {
        Self::scalar_at(group, c, group.identity())
    }

    fn scalar_at(group: &Arc<FiniteGroup>, c: R, g: usize) -> Self {
        let mut u = Self::zero(group, c.field());
        u.coeffs[g] = c;
        u
    }

    pub fn from_coeffs(group: &Arc<FiniteGroup>, coeffs: Vec<R>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::IndexOutOfRange {
                index: coeffs.len(),
                bound: group.order(),
            });
        }
        Ok(AlgebraElement {
            group: Arc::clone(group),
            coeffs,
        })
    }

    pub(crate) fn from_fn(group: &Arc<FiniteGroup>, f: impl FnMut(usize) -> R) -> Self {
        AlgebraElement {
            group: Arc::clone(group),
            coeffs: (0..group.order()).map(f).collect(),
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn field(&self) -> &Arc<CycloField> {
        self.coeffs[0].field()
    }

    pub fn coeff(&self, g: usize) -> &R {
        &self.coeffs[g]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.group.spec() != other.group.spec() {
            return Err(Error::GroupMismatch {
                left: self.group.spec().to_string(),
                right: other.group.spec().to_string(),
            });
        }
        Ok(())
    }

    /// `(uv)_k = Σ_{gh = k} u_g v_h`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let mut out = Self::zero(&self.group, self.field());
        for (g, u) in self.coeffs.iter().enumerate() {
            if u.is_zero() {
                continue;
            }
            for (h, v) in other.coeffs.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                out.coeffs[self.group.mul_idx(g, h)].add_assign(&u.mul(v));
            }
        }
        Ok(out)
    }

    /// `[u, v] = uv − vu`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.convolve(other)?.sub(&other.convolve(self)?)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        Ok(self.zip(other, R::add))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        Ok(self.zip(other, R::sub))
    }

    fn zip(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        AlgebraElement {
            group: Arc::clone(&self.group),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg)
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        self.map(|x| x.scale(c))
    }

    pub fn times(&self, c: &R) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> AlgebraElement<S> {
        AlgebraElement {
            group: Arc::clone(&self.group),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// The augmentation `F(u) = Σ_g u_g`.
    pub fn augment(&self) -> R {
        crate::ring::sum(self.field(), self.coeffs.iter().cloned())
    }

    /// Left-to-right product of a nonempty sequence.
    pub fn product<'a>(items: impl IntoIterator<Item = &'a Self>) -> Result<Self>
    where
        R: 'a,
    {
        let mut it = items.into_iter();
        let first = it.next().expect("product of an empty sequence").clone();
        it.try_fold(first, |acc, x| acc.convolve(x))
    }
}

impl AlgebraElement<Poly> {
    pub fn substitute_all<L: VarLookup<Poly> + ?Sized>(&self, map: &L) -> Result<Self> {
        Ok(AlgebraElement {
            group: Arc::clone(&self.group),
            coeffs: self
                .coeffs
                .iter()
                .map(|p| p.substitute(map))
                .collect::<Result<_>>()?,
        })
    }

    pub fn evaluate<L: VarLookup<CycloNumber> + ?Sized>(
        &self,
        assign: &L,
    ) -> Result<AlgebraElement<CycloNumber>> {
        Ok(AlgebraElement {
            group: Arc::clone(&self.group),
            coeffs: self
                .coeffs
                .iter()
                .map(|p| p.evaluate(assign))
                .collect::<Result<_>>()?,
        })
    }

    /// Drops to numeric coefficients; fails if any coefficient involves a variable.
    pub fn to_constants(&self) -> Result<AlgebraElement<CycloNumber>> {
        Ok(AlgebraElement {
            group: Arc::clone(&self.group),
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(g, p)| {
                    p.as_constant()
                        .ok_or_else(|| Error::NonConstant(self.group.name(g).to_string()))
                })
                .collect::<Result<_>>()?,
        })
    }

    pub fn to_json(&self, vars: &VarTable) -> Value {
        json!({
            "group": self.group.spec().to_string(),
            "coeffs": self.coeffs.iter().enumerate().map(|(g, p)| json!({
                "element": self.group.name(g),
                "poly": p.to_text(vars),
            })).collect::<Vec<_>>(),
        })
    }
}

impl AlgebraElement<CycloNumber> {
    pub fn lift(&self) -> AlgebraElement<Poly> {
        self.map(|c| Poly::constant(c.clone()))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group.spec().to_string(),
            "coeffs": self.coeffs.iter().enumerate().map(|(g, c)| json!({
                "element": self.group.name(g),
                "value": c.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Which factor of the group-algebra factorization to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    /// `Σ_g x_g g`.
    Generic,
    /// `α_i`, `1 ≤ i ≤ 4`.
    Alpha(usize),
    /// `Σ_g χ(g) x_g g` for the `i`-th character of an abelian group.
    AlphaChi(usize),
    /// `β(χ'_l) = Σ_{g∈⟨a⟩} χ'_l(g) A_g g`.
    Beta(usize),
}

/// Factor constructors over a fixed assignment of the `x_g`, which may be
/// symbolic ([`Poly`]) or numeric ([`CycloNumber`]).
pub struct Factors<'a, R> {
    ctx: &'a GroupContext,
    xs: &'a [R],
}

impl<'a, R: Ring> Factors<'a, R> {
    pub fn new(ctx: &'a GroupContext, xs: &'a [R]) -> Self {
        assert_eq!(xs.len(), ctx.order(), "one value per group element");
        Factors { ctx, xs }
    }

    pub fn x(&self, g: usize) -> &R {
        &self.xs[g]
    }

    fn group(&self) -> &Arc<FiniteGroup> {
        &self.ctx.group
    }

    pub fn build(&self, kind: FactorKind) -> Result<AlgebraElement<R>> {
        match kind {
            FactorKind::Generic => Ok(self.generic()),
            FactorKind::Alpha(i) => self.alpha(i),
            FactorKind::AlphaChi(i) => {
                let chi = self.abelian_character(i)?;
                Ok(self.alpha_chi(chi))
            }
            FactorKind::Beta(l) => self.beta(l),
        }
    }

    pub fn generic(&self) -> AlgebraElement<R> {
        AlgebraElement::from_fn(self.group(), |g| self.xs[g].clone())
    }

    fn abelian_character(&self, i: usize) -> Result<&'a Character> {
        if !self.group().is_abelian_family() {
            return Err(Error::NotAbelian(self.group().spec().to_string()));
        }
        let n = self.ctx.reps.len();
        self.ctx
            .reps
            .linear()
            .nth(i)
            .ok_or(Error::IndexOutOfRange { index: i, bound: n })
    }

    /// `Σ_g χ(g) x_g g`.
    pub fn alpha_chi(&self, chi: &Character) -> AlgebraElement<R> {
        AlgebraElement::from_fn(self.group(), |g| self.xs[g].scale(chi.value(g)))
    }

    /// `α_i`: plain `x_g` for `i ∈ {1, 3}`; `x_{g⁻¹}` on `⟨a⟩` for `i ∈ {2, 4}`.
    pub fn alpha(&self, i: usize) -> Result<AlgebraElement<R>> {
        let chi = self.ctx.reps.chi(i)?;
        let g = self.group();
        let inverted = i.is_multiple_of(2);
        Ok(AlgebraElement::from_fn(g, |h| {
            let var = if inverted && g.in_rotation(h) {
                g.inv_idx(h)
            } else {
                h
            };
            self.xs[var].scale(chi.value(h))
        }))
    }

    /// `A_h = Σ_{g∈⟨a⟩} (x_g x_{hg} − x_{gb} x_{hgb⁻¹})`.
    pub fn a_poly(&self, h: usize) -> Result<R> {
        let g = self.group();
        let r = g.require_rotation()?;
        let b = g.a_pow_b(0);
        let b_inv = g.inv_idx(b);
        let mut acc = R::zero_in(self.xs[0].field());
        for k in 0..r {
            let rot = g.a_pow(k as i64);
            let hg = g.mul_idx(h, rot);
            acc.add_assign(&self.xs[rot].mul(&self.xs[hg]));
            let gb = g.mul_idx(rot, b);
            let hgb_inv = g.mul_idx(hg, b_inv);
            acc.sub_assign(&self.xs[gb].mul(&self.xs[hgb_inv]));
        }
        Ok(acc)
    }

    /// `A_h` for every `h`, indexed like the elements.
    pub fn a_polys(&self) -> Result<Vec<R>> {
        (0..self.group().order()).map(|h| self.a_poly(h)).collect()
    }

    /// `β(χ'_l) = Σ_{g∈⟨a⟩} χ'_l(g) A_g g`.
    pub fn beta(&self, l: usize) -> Result<AlgebraElement<R>> {
        let a = self.a_polys()?;
        self.beta_from(l, &a)
    }

    /// `β(χ'_l)` with precomputed `A_g`.
    pub fn beta_from(&self, l: usize, a: &[R]) -> Result<AlgebraElement<R>> {
        self.rotation_weighted(l, a)
    }

    /// `Σ_{g∈⟨a⟩} χ'_l(g) x_g g`, the factor with the plain variables.
    pub fn rotation_factor(&self, l: usize) -> Result<AlgebraElement<R>> {
        self.rotation_weighted(l, self.xs)
    }

    fn rotation_weighted(&self, l: usize, coeffs: &[R]) -> Result<AlgebraElement<R>> {
        let g = self.group();
        let chi = chi_prime(g, &self.ctx.field, l)?;
        let zero = R::zero_in(&self.ctx.field);
        Ok(AlgebraElement::from_fn(g, |h| {
            if g.in_rotation(h) {
                coeffs[h].scale(chi.at_power(g.word(h).0 as i64))
            } else {
                zero.clone()
            }
        }))
    }
}
