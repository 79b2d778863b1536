//! Group determinants and their factorizations.
//!
//! `Θ(G) = det(x_{gh⁻¹})` is computed three independent ways (cofactor
//! expansion, the product over irreducible representations, and for `D_m`/`Q_m`
//! the circulant product in the `A_h`), plus the group-algebra products and
//! inverse formulas built from the α/β factors.

use std::sync::Arc;

use crate::context::GroupContext;
use crate::cyclotomic::{CycloField, CycloNumber};
use crate::error::{Error, Result};
use crate::group_algebra::{AlgebraElement, Factors};
use crate::groups::FiniteGroup;
use crate::polyring::Poly;
use crate::reps::{chi_prime, Representation};
use crate::ring::{self, Ring};

/// Default largest order for which full symbolic expansion of `Θ(G)` is attempted.
pub const DEFAULT_SYMBOLIC_LIMIT: usize = 8;

/// Hard cap on the subset DP (its table has `2^n` entries).
const MAX_LAPLACE_ORDER: usize = 24;

/// The matrix `(x_{gh⁻¹})_{g,h}` stored as variable ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMatrix {
    group: Arc<FiniteGroup>,
    entries: Vec<usize>,
}

impl GroupMatrix {
    pub fn new(group: &Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let entries = (0..n * n)
            .map(|ij| group.mul_idx(ij / n, group.inv_idx(ij % n)))
            .collect();
        GroupMatrix {
            group: Arc::clone(group),
            entries,
        }
    }

    pub fn size(&self) -> usize {
        self.group.order()
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Variable id at row `g`, column `h`.
    pub fn entry(&self, g: usize, h: usize) -> usize {
        self.entries[g * self.size() + h]
    }

    pub fn row(&self, g: usize) -> &[usize] {
        let n = self.size();
        &self.entries[g * n..(g + 1) * n]
    }
}

/// Determinant of an `n × n` matrix over any ring by Laplace expansion along
/// the rows with memoized minors over column subsets.
///
/// `minor[S]` is the determinant of rows `0..|S|` restricted to columns `S`;
/// every `S \ {j}` is numerically smaller than `S`, so one ascending sweep
/// fills the table.
pub fn laplace_det<R: Ring>(
    n: usize,
    field: &Arc<CycloField>,
    entry: impl Fn(usize, usize) -> R,
) -> R {
    assert!(n <= MAX_LAPLACE_ORDER, "subset table too large");
    if n == 0 {
        return R::one_in(field);
    }
    let cells: Vec<R> = (0..n * n).map(|ij| entry(ij / n, ij % n)).collect();
    let full = (1usize << n) - 1;
    let mut minor: Vec<Option<R>> = vec![None; 1 << n];
    minor[0] = Some(R::one_in(field));
    for s in 1..=full {
        let row = s.count_ones() as usize - 1;
        let mut acc = R::zero_in(field);
        let mut below = 0usize;
        for j in 0..n {
            if s & (1 << j) == 0 {
                continue;
            }
            let cell = &cells[row * n + j];
            if !cell.is_zero() {
                let sub = minor[s ^ (1 << j)].as_ref().expect("filled in order");
                if !sub.is_zero() {
                    let term = cell.mul(sub);
                    if (row + below).is_multiple_of(2) {
                        acc.add_assign(&term);
                    } else {
                        acc.sub_assign(&term);
                    }
                }
            }
            below += 1;
        }
        minor[s] = Some(acc);
    }
    minor[full].take().unwrap()
}

/// `Θ(G)` as a polynomial, refused above `limit`.
pub fn symbolic_det(ctx: &GroupContext, limit: usize) -> Result<Poly> {
    let n = ctx.order();
    if n > limit.min(MAX_LAPLACE_ORDER) {
        return Err(Error::SymbolicLimit { order: n, limit });
    }
    let m = GroupMatrix::new(&ctx.group);
    Ok(laplace_det(n, &ctx.field, |i, j| {
        Poly::var(&ctx.field, m.entry(i, j))
    }))
}

/// Exact determinant of a square matrix of field elements by Gaussian elimination.
pub fn gauss_det(n: usize, field: &Arc<CycloField>, mut a: Vec<CycloNumber>) -> CycloNumber {
    assert_eq!(a.len(), n * n);
    let mut det = field.one();
    for c in 0..n {
        // rational pivots keep the inversions cheap
        let pivot = (c..n)
            .filter(|&r| !a[r * n + c].is_zero())
            .min_by_key(|&r| a[r * n + c].as_rational().is_none());
        let Some(p) = pivot else {
            return field.zero();
        };
        if p != c {
            for j in 0..n {
                a.swap(p * n + j, c * n + j);
            }
            det = -&det;
        }
        let piv = a[c * n + c].clone();
        det = &det * &piv;
        let piv_inv = piv.inverse().expect("nonzero pivot");
        for r in c + 1..n {
            if a[r * n + c].is_zero() {
                continue;
            }
            let factor = &a[r * n + c] * &piv_inv;
            for j in c..n {
                if a[c * n + j].is_zero() {
                    continue;
                }
                let t = &factor * &a[c * n + j];
                a[r * n + j].sub_assign_ref(&t);
            }
        }
    }
    det
}

/// `Θ(G)` at a numeric point.
pub fn numeric_det_at(ctx: &GroupContext, assign: &[CycloNumber]) -> CycloNumber {
    let m = GroupMatrix::new(&ctx.group);
    let n = ctx.order();
    let cells = (0..n * n)
        .map(|ij| assign[m.entry(ij / n, ij % n)].clone())
        .collect();
    gauss_det(n, &ctx.field, cells)
}

/// Coefficient rings with a direct determinant routine.
pub trait DetRing: Ring {
    fn det(n: usize, field: &Arc<CycloField>, cells: Vec<Self>) -> Self;
}

impl DetRing for Poly {
    fn det(n: usize, field: &Arc<CycloField>, cells: Vec<Self>) -> Self {
        laplace_det(n, field, |i, j| cells[i * n + j].clone())
    }
}

impl DetRing for CycloNumber {
    fn det(n: usize, field: &Arc<CycloField>, cells: Vec<Self>) -> Self {
        gauss_det(n, field, cells)
    }
}

/// `Θ(G) = det(x_{gh⁻¹})` with the `x_g` taken from `xs`.
pub fn theta<R: DetRing>(ctx: &GroupContext, xs: &[R]) -> R {
    let m = GroupMatrix::new(&ctx.group);
    let n = ctx.order();
    let cells = (0..n * n)
        .map(|ij| xs[m.entry(ij / n, ij % n)].clone())
        .collect();
    R::det(n, &ctx.field, cells)
}

/// `Π_φ det(Σ_g φ(g) x_g)^{deg φ}` over the irreducible representations.
pub fn frobenius_theta<R: Ring>(ctx: &GroupContext, xs: &[R]) -> R {
    let factors: Vec<R> = ctx
        .reps
        .reps()
        .iter()
        .map(|rep| {
            let d = rep.group_sum(xs).det();
            match rep {
                Representation::Linear(_) => d,
                Representation::Planar(_) => d.mul(&d),
            }
        })
        .collect();
    ring::product(&ctx.field, &factors)
}

/// `Π_{χ'} Σ_{g∈⟨a⟩} χ'(g) A_g` over the characters of `⟨a⟩`.
pub fn circulant_theta<R: Ring>(ctx: &GroupContext, xs: &[R]) -> Result<R> {
    let r = ctx.group.require_rotation()?;
    let a = Factors::new(ctx, xs).a_polys()?;
    let factors = (0..r)
        .map(|l| {
            let chi = chi_prime(&ctx.group, &ctx.field, l)?;
            Ok(ring::sum(
                &ctx.field,
                (0..r).map(|k| a[ctx.group.a_pow(k as i64)].scale(chi.at_power(k as i64))),
            ))
        })
        .collect::<Result<Vec<R>>>()?;
    Ok(ring::product(&ctx.field, &factors))
}

/// The factorization of `Θ(G)e` in the group algebra.
///
/// Abelian: `Π_χ Σ_g χ(g) x_g g` over the dual group. `D_m`, `Q_m`:
/// `Π_l β(χ'_l)` with the `A_g` as coefficients.
pub fn theta_e_product<R: Ring>(ctx: &GroupContext, xs: &[R]) -> Result<AlgebraElement<R>> {
    let f = Factors::new(ctx, xs);
    let factors: Vec<AlgebraElement<R>> = if ctx.group.is_abelian_family() {
        ctx.reps.linear().map(|chi| f.alpha_chi(chi)).collect()
    } else {
        let a = f.a_polys()?;
        let r = ctx.group.require_rotation()?;
        (0..r).map(|l| f.beta_from(l, &a)).collect::<Result<_>>()?
    };
    AlgebraElement::product(&factors)
}

/// `Π_l Σ_{g∈⟨a⟩} χ'_l(g) x_g g`, the same product with plain variables.
pub fn rotation_product<R: Ring>(ctx: &GroupContext, xs: &[R]) -> Result<AlgebraElement<R>> {
    let f = Factors::new(ctx, xs);
    let r = ctx.group.require_rotation()?;
    let factors = (0..r)
        .map(|l| f.rotation_factor(l))
        .collect::<Result<Vec<_>>>()?;
    AlgebraElement::product(&factors)
}

/// The product of the factors other than `α₁`, so that
/// `α₁ · cofactor = cofactor · α₁ = Θ(G)e`.
pub fn inverse_cofactor<R: Ring>(ctx: &GroupContext, xs: &[R]) -> Result<AlgebraElement<R>> {
    let f = Factors::new(ctx, xs);
    let factors: Vec<AlgebraElement<R>> = if ctx.group.is_abelian_family() {
        ctx.reps
            .linear()
            .skip(1)
            .map(|chi| f.alpha_chi(chi))
            .collect()
    } else {
        let a = f.a_polys()?;
        let r = ctx.group.require_rotation()?;
        let mut out = vec![f.alpha(2)?];
        let skip_half = ctx.reps.has_four_linear();
        if skip_half {
            out.push(f.alpha(3)?);
            out.push(f.alpha(4)?);
        }
        for l in 1..r {
            if skip_half && 2 * l == r {
                continue;
            }
            out.push(f.beta_from(l, &a)?);
        }
        out
    };
    if factors.is_empty() {
        // trivial group: α₁ = x_e e
        return Ok(AlgebraElement::scalar(&ctx.group, R::one_in(&ctx.field)));
    }
    AlgebraElement::product(&factors)
}

/// `α₁⁻¹ = Θ(G)⁻¹ · cofactor` at a numeric point.
pub fn inverse_element(
    ctx: &GroupContext,
    assign: &[CycloNumber],
) -> Result<AlgebraElement<CycloNumber>> {
    let theta = numeric_det_at(ctx, assign);
    if theta.is_zero() {
        return Err(Error::Singular);
    }
    let scale = theta.inverse()?;
    Ok(inverse_cofactor(ctx, assign)?.scale(&scale))
}
