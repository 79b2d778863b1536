//! Complete sets of irreducible representations and the Fourier transform.
//!
//! Abelian groups get their full dual group. `D_m` and `Q_m` get the explicit
//! tables of degree-one characters `χ₁…χ₄` and degree-two representations
//! `φ_l`, written down entry by entry rather than derived, so the
//! homomorphism tests below actually check something.

use std::sync::Arc;

use crate::cyclotomic::{CycloField, CycloNumber};
use crate::error::{Error, Result};
use crate::group_algebra::AlgebraElement;
use crate::groups::{Family, FiniteGroup};
use crate::ring::Ring;

/// A square matrix of dimension 1 or 2.
#[derive(Clone, Debug, PartialEq)]
pub struct SmallMatrix<R> {
    dim: usize,
    entries: Vec<R>,
}

impl<R: Ring> SmallMatrix<R> {
    pub fn new(dim: usize, entries: Vec<R>) -> Self {
        assert!(dim == 1 || dim == 2, "only degrees 1 and 2 occur");
        assert_eq!(entries.len(), dim * dim);
        SmallMatrix { dim, entries }
    }

    pub fn scalar(x: R) -> Self {
        SmallMatrix::new(1, vec![x])
    }

    pub fn zero(dim: usize, field: &Arc<CycloField>) -> Self {
        SmallMatrix::new(dim, vec![R::zero_in(field); dim * dim])
    }

    pub fn identity(dim: usize, field: &Arc<CycloField>) -> Self {
        let mut m = Self::zero(dim, field);
        for i in 0..dim {
            m.entries[i * dim + i] = R::one_in(field);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        SmallMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let entries = (0..d * d)
            .map(|ij| {
                let (i, j) = (ij / d, ij % d);
                let mut acc = self.get(i, 0).mul(other.get(0, j));
                for k in 1..d {
                    acc.add_assign(&self.get(i, k).mul(other.get(k, j)));
                }
                acc
            })
            .collect();
        SmallMatrix { dim: d, entries }
    }

    /// Multiplies every entry by a ring element.
    pub fn times(&self, x: &R) -> Self {
        SmallMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e.mul(x)).collect(),
        }
    }

    pub fn det(&self) -> R {
        match self.dim {
            1 => self.entries[0].clone(),
            _ => self
                .get(0, 0)
                .mul(self.get(1, 1))
                .sub(&self.get(0, 1).mul(self.get(1, 0))),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Ring::is_zero)
    }
}

impl SmallMatrix<CycloNumber> {
    /// Entrywise complex conjugate.
    pub fn conjugate(&self) -> Self {
        SmallMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(CycloNumber::conjugate).collect(),
        }
    }

    /// Lifts a constant matrix into another coefficient ring.
    pub fn lift<R: Ring>(&self) -> SmallMatrix<R> {
        SmallMatrix {
            dim: self.dim,
            entries: self.entries.iter().cloned().map(R::from_scalar).collect(),
        }
    }
}

/// A degree-one character, valued on every group element (by index).
#[derive(Clone, Debug, PartialEq)]
pub struct Character {
    name: String,
    values: Vec<CycloNumber>,
}

impl Character {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn value(&self, g: usize) -> &CycloNumber {
        &self.values[g]
    }

    pub fn values(&self) -> &[CycloNumber] {
        &self.values
    }
}

/// A degree-one character `χ'_l(a^k) = ω^{lk}` of the rotation subgroup `⟨a⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct RotationCharacter {
    l: usize,
    values: Vec<CycloNumber>,
}

impl RotationCharacter {
    pub fn index(&self) -> usize {
        self.l
    }

    /// `χ'_l(a^k)`, `k` taken modulo `|⟨a⟩|`.
    pub fn at_power(&self, k: i64) -> &CycloNumber {
        &self.values[k.rem_euclid(self.values.len() as i64) as usize]
    }

    pub fn values(&self) -> &[CycloNumber] {
        &self.values
    }
}

/// A degree-two representation `φ_l`.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRep {
    name: String,
    l: usize,
    values: Vec<SmallMatrix<CycloNumber>>,
}

impl MatrixRep {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn index(&self) -> usize {
        self.l
    }

    pub fn value(&self, g: usize) -> &SmallMatrix<CycloNumber> {
        &self.values[g]
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Representation {
    Linear(Character),
    Planar(MatrixRep),
}

impl Representation {
    pub fn degree(&self) -> usize {
        match self {
            Representation::Linear(_) => 1,
            Representation::Planar(_) => 2,
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Representation::Linear(c) => c.name(),
            Representation::Planar(p) => p.name(),
        }
    }

    pub fn matrix(&self, g: usize) -> SmallMatrix<CycloNumber> {
        match self {
            Representation::Linear(c) => SmallMatrix::scalar(c.value(g).clone()),
            Representation::Planar(p) => p.value(g).clone(),
        }
    }

    /// `Σ_g ρ(g) x_g` over any coefficient ring.
    pub fn group_sum<R: Ring>(&self, xs: &[R]) -> SmallMatrix<R> {
        let field = xs[0].field();
        let mut acc = SmallMatrix::zero(self.degree(), field);
        for (g, x) in xs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            acc = acc.add(&self.matrix(g).lift::<R>().times(x));
        }
        acc
    }
}

/// Complete set of irreducible representations of a group, ordered as
/// `χ₁, χ₂, (χ₃, χ₄), φ₁, …, φ_t` (abelian: characters by exponent vector).
#[derive(Clone, Debug)]
pub struct RepSet {
    group: Arc<FiniteGroup>,
    field: Arc<CycloField>,
    reps: Vec<Representation>,
}

impl RepSet {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn reps(&self) -> &[Representation] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.reps.iter().map(Representation::degree).collect()
    }

    pub fn linear(&self) -> impl Iterator<Item = &Character> {
        self.reps.iter().filter_map(|r| match r {
            Representation::Linear(c) => Some(c),
            Representation::Planar(_) => None,
        })
    }

    pub fn planar(&self) -> impl Iterator<Item = &MatrixRep> {
        self.reps.iter().filter_map(|r| match r {
            Representation::Planar(p) => Some(p),
            Representation::Linear(_) => None,
        })
    }

    /// `χ_i` (`1 ≤ i ≤ 4`) of a dihedral or quaternion table.
    pub fn chi(&self, i: usize) -> Result<&Character> {
        if self.group.is_abelian_family() {
            return Err(Error::NotMetacyclic(self.group.spec().to_string()));
        }
        self.linear()
            .nth(i.wrapping_sub(1))
            .filter(|_| (1..=4).contains(&i))
            .ok_or_else(|| {
                Error::Undefined(
                    format!("chi{i}"),
                    format!(
                        "{} has only {} degree-one representations",
                        self.group.spec(),
                        self.linear().count()
                    ),
                )
            })
    }

    /// Whether `χ₃, χ₄` exist (`D_m` with `m` even, every `Q_m`).
    pub fn has_four_linear(&self) -> bool {
        !self.group.is_abelian_family() && self.linear().count() == 4
    }

    /// `Σ d_i²`, which must equal `|G|`.
    pub fn dimension_count(&self) -> usize {
        self.degrees().iter().map(|d| d * d).sum()
    }
}

/// Builds the complete irreducible representation set of `group`.
pub fn irreducible_set(group: &Arc<FiniteGroup>, field: &Arc<CycloField>) -> RepSet {
    let reps = match group.family() {
        Family::Abelian => abelian_dual(group, field),
        Family::Dihedral | Family::Quaternion => metacyclic_table(group, field),
    };
    RepSet {
        group: Arc::clone(group),
        field: Arc::clone(field),
        reps,
    }
}

fn abelian_dual(group: &FiniteGroup, field: &Arc<CycloField>) -> Vec<Representation> {
    let ns = group.cycle_orders();
    let big_l = field.conductor() as i64;
    group
        .elements()
        .iter()
        .enumerate()
        .map(|(li, l_elem)| {
            let ls = match l_elem {
                crate::groups::GroupElement::Tuple(v) => v,
                _ => unreachable!(),
            };
            let values = group
                .elements()
                .iter()
                .map(|g| {
                    let es = match g {
                        crate::groups::GroupElement::Tuple(v) => v,
                        _ => unreachable!(),
                    };
                    let exp: i64 = ns
                        .iter()
                        .zip(ls.iter().zip(es))
                        .map(|(&n, (&l, &e))| (l as i64) * (e as i64) * (big_l / n as i64))
                        .sum();
                    field.root_of_unity(exp)
                })
                .collect();
            let name = if ns.len() == 1 {
                format!("chi_{}", ls[0])
            } else {
                format!("chi_{}", group.name(li))
            };
            Representation::Linear(Character { name, values })
        })
        .collect()
}

fn metacyclic_table(group: &FiniteGroup, field: &Arc<CycloField>) -> Vec<Representation> {
    let r = group.rotation_order().expect("metacyclic group");
    let m = group.m().unwrap() as usize;
    let quaternion = group.family() == Family::Quaternion;
    let n = group.order();
    let omega = |e: i64| field.root_of_unity_of_order(r as u32, e);
    let one = field.one();
    let sign = |k: usize| field.int(if k.is_multiple_of(2) { 1 } else { -1 });
    let i_unit = || field.imaginary_unit();

    let char_from = |name: &str, f: &dyn Fn(usize, bool) -> CycloNumber| {
        Representation::Linear(Character {
            name: name.to_string(),
            values: (0..n)
                .map(|g| {
                    let (k, flip) = group.word(g);
                    f(k, flip)
                })
                .collect(),
        })
    };

    let mut reps = vec![
        char_from("chi1", &|_, _| one.clone()),
        char_from("chi2", &|_, flip| if flip { -&one } else { one.clone() }),
    ];
    let four = quaternion || m.is_multiple_of(2);
    if four {
        let imaginary_b = quaternion && m % 2 == 1;
        reps.push(char_from("chi3", &|k, flip| match (flip, imaginary_b) {
            (false, _) => sign(k),
            (true, false) => sign(k),
            (true, true) => &i_unit() * &sign(k),
        }));
        reps.push(char_from("chi4", &|k, flip| match (flip, imaginary_b) {
            (false, _) => sign(k),
            (true, false) => sign(k + 1),
            (true, true) => &i_unit() * &sign(k + 1),
        }));
    }

    let planar_count = match (quaternion, m % 2) {
        (false, 1) => (m - 1) / 2,
        (false, _) => m / 2 - 1,
        (true, _) => m - 1,
    };
    for l in 1..=planar_count {
        // lower-left sign of φ_l(b): +1 for D_m; (-1)^l for Q_m so that
        // φ_l(b)² = φ_l(a^m) = (-1)^l I
        let eps = if quaternion && l % 2 == 1 {
            -&one
        } else {
            one.clone()
        };
        let zero = field.zero();
        let values = (0..n)
            .map(|g| {
                let (k, flip) = group.word(g);
                let w = omega((l * k) as i64);
                let w_inv = omega(-((l * k) as i64));
                if flip {
                    SmallMatrix::new(2, vec![zero.clone(), w, &eps * &w_inv, zero.clone()])
                } else {
                    SmallMatrix::new(2, vec![w, zero.clone(), zero.clone(), w_inv])
                }
            })
            .collect();
        reps.push(Representation::Planar(MatrixRep {
            name: format!("phi_{l}"),
            l,
            values,
        }));
    }
    reps
}

/// The character `χ'_l` of `⟨a⟩` with `ω` a primitive `|⟨a⟩|`-th root of unity.
pub fn chi_prime(
    group: &FiniteGroup,
    field: &Arc<CycloField>,
    l: usize,
) -> Result<RotationCharacter> {
    let r = group.require_rotation()?;
    if l >= r {
        return Err(Error::IndexOutOfRange { index: l, bound: r });
    }
    let values = (0..r)
        .map(|k| field.root_of_unity_of_order(r as u32, (l * k) as i64))
        .collect();
    Ok(RotationCharacter { l, values })
}

/// `Tf = (f̂(ρ))_ρ` with `f̂(ρ) = Σ_g conj(ρ(g)) f(g)`, one block per representation.
#[derive(Clone, Debug, PartialEq)]
pub struct FourierImage {
    pub blocks: Vec<SmallMatrix<CycloNumber>>,
}

impl FourierImage {
    /// Blockwise product.
    pub fn mul(&self, other: &Self) -> Self {
        FourierImage {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }
}

pub fn fourier_transform(reps: &RepSet, f: &AlgebraElement<CycloNumber>) -> Result<FourierImage> {
    if f.group().spec() != reps.group().spec() {
        return Err(Error::GroupMismatch {
            left: f.group().spec().to_string(),
            right: reps.group().spec().to_string(),
        });
    }
    let blocks = reps
        .reps()
        .iter()
        .map(|rep| {
            let mut acc = SmallMatrix::zero(rep.degree(), reps.field());
            for (g, c) in f.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    acc = acc.add(&rep.matrix(g).conjugate().times(c));
                }
            }
            acc
        })
        .collect();
    Ok(FourierImage { blocks })
}

/// Symbolic or numeric `det(Σ_g φ(g) x_g)` for a degree-two representation.
pub fn rep_factor_det<R: Ring>(rep: &Representation, xs: &[R]) -> Result<R> {
    if rep.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            actual: rep.degree(),
        });
    }
    Ok(rep.group_sum(xs).det())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(spec: &str) -> RepSet {
        let g = Arc::new(FiniteGroup::parse(spec).unwrap());
        let f = CycloField::new(g.conductor());
        irreducible_set(&g, &f)
    }

    #[test]
    fn q3_chi3_of_b_is_i() {
        let reps = setup("Q3");
        let b = reps.group().a_pow_b(0);
        assert_eq!(
            reps.chi(3).unwrap().value(b),
            &reps.field().imaginary_unit()
        );
    }

    #[test]
    fn degrees_and_counts() {
        assert_eq!(setup("D3").degrees(), vec![1, 1, 2]);
        for (spec, count) in [
            ("D3", 3),
            ("D5", 4),
            ("D4", 5),
            ("D6", 6),
            ("Q2", 5),
            ("Q3", 6),
            ("Q5", 8),
        ] {
            let reps = setup(spec);
            assert_eq!(reps.len(), count, "{spec}");
            assert_eq!(reps.dimension_count(), reps.group().order(), "{spec}");
        }
        assert!(setup("D3").chi(3).is_err());
        assert!(!setup("D5").has_four_linear());
        assert!(setup("Q3").has_four_linear());
    }

    #[test]
    fn c2_characters() {
        let reps = setup("C2");
        let f = reps.field().clone();
        let vals: Vec<Vec<CycloNumber>> = reps.linear().map(|c| c.values().to_vec()).collect();
        assert_eq!(vals, vec![vec![f.one(), f.one()], vec![f.one(), f.int(-1)]]);
    }

    #[test]
    fn chi_prime_examples() {
        let g = FiniteGroup::parse("D4").unwrap();
        let f = CycloField::new(g.conductor());
        assert!(chi_prime(&g, &f, 0)
            .unwrap()
            .values()
            .iter()
            .all(CycloNumber::is_one));
        assert_eq!(chi_prime(&g, &f, 2).unwrap().at_power(1), &f.int(-1));
        assert!(matches!(
            chi_prime(&g, &f, 4),
            Err(Error::IndexOutOfRange { .. })
        ));
        let c4 = FiniteGroup::parse("C4").unwrap();
        assert!(matches!(
            chi_prime(&c4, &f, 0),
            Err(Error::NotMetacyclic(_))
        ));

        // χ'_{|⟨a⟩|/2} agrees with χ₃ on ⟨a⟩
        let q2 = Arc::new(FiniteGroup::parse("Q2").unwrap());
        let fq = CycloField::new(q2.conductor());
        let reps = irreducible_set(&q2, &fq);
        let half = chi_prime(&q2, &fq, 2).unwrap();
        for k in 0..4 {
            assert_eq!(half.at_power(k), reps.chi(3).unwrap().value(q2.a_pow(k)));
        }
    }

    #[test]
    fn quaternion_needs_sign_twist_for_even_l() {
        // with φ_l(b) = [[0,1],[-1,0]] for every l, the relation b² = a^m fails at even l
        let g = FiniteGroup::parse("Q3").unwrap();
        let f = CycloField::new(g.conductor());
        let z = f.zero();
        let untwisted_b = SmallMatrix::new(2, vec![z.clone(), f.one(), f.int(-1), z.clone()]);
        let l = 2i64;
        let a_m = SmallMatrix::new(
            2,
            vec![
                f.root_of_unity_of_order(6, 3 * l),
                z.clone(),
                z.clone(),
                f.root_of_unity_of_order(6, -3 * l),
            ],
        );
        assert_ne!(untwisted_b.mul(&untwisted_b), a_m);
    }

    #[test]
    fn fourier_of_identity_and_basis() {
        let reps = setup("C2");
        let g = reps.group().clone();
        let f = reps.field().clone();
        let delta_e = AlgebraElement::basis(&g, &f, 0);
        let t = fourier_transform(&reps, &delta_e).unwrap();
        assert!(t
            .blocks
            .iter()
            .all(|b| *b == SmallMatrix::identity(b.dim(), &f)));
        let delta_a = AlgebraElement::basis(&g, &f, 1);
        let t = fourier_transform(&reps, &delta_a).unwrap();
        assert_eq!(
            t.blocks,
            vec![SmallMatrix::scalar(f.one()), SmallMatrix::scalar(f.int(-1))]
        );
    }

    #[test]
    fn rep_factor_det_rejects_linear() {
        let reps = setup("D3");
        let xs = vec![reps.field().one(); 6];
        assert!(matches!(
            rep_factor_det(&reps.reps()[0], &xs),
            Err(Error::DegreeMismatch { .. })
        ));
        let zeros = vec![reps.field().zero(); 6];
        assert!(rep_factor_det(&reps.reps()[2], &zeros).unwrap().is_zero());
    }
}
