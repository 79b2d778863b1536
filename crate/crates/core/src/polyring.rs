//! Sparse multivariate polynomials in the commuting variables `x_g`, one per
//! group element, with cyclotomic coefficients.
//!
//! Variable ids coincide with element indices of the owning group. Terms are
//! kept in a `BTreeMap` keyed by graded-lexicographic monomial order, with no
//! zero coefficients stored, so equality of polynomials is equality of term
//! maps and printing is deterministic.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed};
use serde_json::{json, Value};

use crate::cyclotomic::{CycloField, CycloNumber};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::ring::Ring;

/// Names of the variables `x_g`, indexed by element index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
}

impl VarTable {
    pub fn new(group: &FiniteGroup) -> Self {
        VarTable {
            names: group.names().iter().map(|n| format!("x[{n}]")).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, var: usize) -> String {
        self.names
            .get(var)
            .cloned()
            .unwrap_or_else(|| format!("x{var}"))
    }
}

/// A monomial `Π x_v^{e_v}` stored as `(v, e_v)` pairs sorted by `v`, `e_v > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: usize) -> Self {
        Monomial(vec![(v as u32, 1)])
    }

    /// Builds a monomial from `(variable, exponent)` pairs in any order;
    /// zero exponents are dropped and repeated variables are merged.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v as u32).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|&(v, e)| (v as usize, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    fn text(&self, vars: &VarTable) -> String {
        self.0
            .iter()
            .map(|&(v, e)| {
                let name = vars.name(v as usize);
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order with `x_0 > x_1 > …`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (p, q) in self.0.iter().zip(&other.0) {
                if p.0 != q.0 {
                    // the smaller variable id occurs only on one side
                    return q.0.cmp(&p.0);
                }
                if p.1 != q.1 {
                    return p.1.cmp(&q.1);
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lookup of per-variable values for substitution or evaluation.
pub trait VarLookup<T> {
    fn lookup(&self, var: usize) -> Option<&T>;
}

impl<T> VarLookup<T> for [T] {
    fn lookup(&self, var: usize) -> Option<&T> {
        self.get(var)
    }
}

impl<T> VarLookup<T> for Vec<T> {
    fn lookup(&self, var: usize) -> Option<&T> {
        self.get(var)
    }
}

impl<T> VarLookup<T> for BTreeMap<usize, T> {
    fn lookup(&self, var: usize) -> Option<&T> {
        self.get(&var)
    }
}

impl<T> VarLookup<T> for HashMap<usize, T> {
    fn lookup(&self, var: usize) -> Option<&T> {
        self.get(&var)
    }
}

/// A sparse polynomial with cyclotomic coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Arc<CycloField>,
    terms: BTreeMap<Monomial, CycloNumber>,
}

impl Poly {
    pub fn zero(field: &Arc<CycloField>) -> Self {
        Poly {
            field: Arc::clone(field),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: CycloNumber) -> Self {
        let mut p = Poly::zero(c.field());
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    /// The variable `x_v`.
    pub fn var(field: &Arc<CycloField>, v: usize) -> Self {
        Self::term(Monomial::var(v), CycloNumber::one(field))
    }

    /// All variables `x_0 … x_{n-1}`.
    pub fn vars(field: &Arc<CycloField>, n: usize) -> Vec<Poly> {
        (0..n).map(|v| Poly::var(field, v)).collect()
    }

    pub fn term(m: Monomial, c: CycloNumber) -> Self {
        let mut p = Poly::zero(c.field());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &CycloNumber)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> CycloNumber {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| CycloNumber::zero(&self.field))
    }

    /// Value of a polynomial with no variables; `None` otherwise.
    pub fn as_constant(&self) -> Option<CycloNumber> {
        match self.terms.len() {
            0 => Some(CycloNumber::zero(&self.field)),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// `Some(d)` if every term has degree `d`; the zero polynomial is not
    /// considered homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    /// Variable ids that occur with a nonzero coefficient.
    pub fn variables(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self
            .terms
            .keys()
            .flat_map(|m| m.pairs().map(|(v, _)| v))
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.conductor(),
                right: other.field.conductor(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(Ring::add(self, other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(Ring::sub(self, other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(Ring::mul(self, other))
    }

    fn accumulate(&mut self, m: Monomial, c: CycloNumber, negate: bool) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(if negate { -&c } else { c });
            }
            Entry::Occupied(mut slot) => {
                if negate {
                    slot.get_mut().sub_assign_ref(&c);
                } else {
                    slot.get_mut().add_assign_ref(&c);
                }
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Evaluates the polynomial with `x_v` replaced by `values[v]` in any
    /// coefficient ring: substitution when `R = Poly`, evaluation when
    /// `R = CycloNumber`.
    pub fn eval_in<R: Ring, L: VarLookup<R> + ?Sized>(&self, values: &L) -> Result<R> {
        let mut powers: HashMap<(usize, u32), R> = HashMap::new();
        let mut acc = R::zero_in(&self.field);
        for (m, c) in &self.terms {
            let mut t = R::from_scalar(c.clone());
            for (v, e) in m.pairs() {
                let base = values.lookup(v).ok_or(Error::MissingVariable(v))?;
                let p = powers.entry((v, e)).or_insert_with(|| {
                    let mut p = base.clone();
                    for _ in 1..e {
                        p = p.mul(base);
                    }
                    p
                });
                t = t.mul(p);
            }
            acc.add_assign(&t);
        }
        Ok(acc)
    }

    /// Simultaneous substitution `x_v ↦ map[v]`, fully expanded.
    pub fn substitute<L: VarLookup<Poly> + ?Sized>(&self, map: &L) -> Result<Poly> {
        self.eval_in(map)
    }

    /// Exact value at an assignment `x_v ↦ assign[v]`.
    pub fn evaluate<L: VarLookup<CycloNumber> + ?Sized>(&self, assign: &L) -> Result<CycloNumber> {
        self.eval_in(assign)
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one_in(&self.field), |acc, _| Ring::mul(&acc, self))
    }

    /// Canonical text: terms in descending graded-lex order, e.g.
    /// `x[e]^2 - x[a]^2`.
    pub fn to_text(&self, vars: &VarTable) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (negative, body) = term_text(m, c, vars);
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        out
    }

    /// Array-of-terms JSON form, in the same order as [`Poly::to_text`].
    pub fn to_json(&self, vars: &VarTable) -> Value {
        Value::Array(
            self.terms
                .iter()
                .rev()
                .map(|(m, c)| {
                    json!({
                        "coeff": c.to_string(),
                        "monomial": if m.0.is_empty() { "1".to_string() } else { m.text(vars) },
                    })
                })
                .collect(),
        )
    }
}

fn term_text(m: &Monomial, c: &CycloNumber, vars: &VarTable) -> (bool, String) {
    let mono = m.text(vars);
    match c.as_rational() {
        Some(q) => {
            let negative = q.is_negative();
            let mag = q.abs();
            let body = if mono.is_empty() {
                crate::cyclotomic::format_rational(&mag)
            } else if mag.is_one() {
                mono
            } else {
                format!("{} * {mono}", crate::cyclotomic::format_rational(&mag))
            };
            (negative, body)
        }
        None if mono.is_empty() => (false, format!("[{c}]")),
        None => (false, format!("[{c}] * {mono}")),
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self
            .terms
            .keys()
            .flat_map(|m| m.pairs().map(|(v, _)| v + 1))
            .max()
            .unwrap_or(0);
        let vars = VarTable {
            names: (0..n).map(|v| format!("x{v}")).collect(),
        };
        write!(f, "Poly({})", self.to_text(&vars))
    }
}

impl Ring for Poly {
    fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    fn from_scalar(c: CycloNumber) -> Self {
        Poly::constant(c)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }

    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }

    fn add_assign(&mut self, rhs: &Self) {
        for (m, c) in &rhs.terms {
            self.accumulate(m.clone(), c.clone(), false);
        }
    }

    fn sub_assign(&mut self, rhs: &Self) {
        for (m, c) in &rhs.terms {
            self.accumulate(m.clone(), c.clone(), true);
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = Poly::zero(&self.field);
        let (small, large) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large.terms {
                out.accumulate(m1.mul(m2), c1 * c2, false);
            }
        }
        out
    }

    fn neg(&self) -> Self {
        Poly {
            field: Arc::clone(&self.field),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    fn scale(&self, c: &CycloNumber) -> Self {
        if c.is_zero() {
            return Poly::zero(&self.field);
        }
        Poly {
            field: Arc::clone(&self.field),
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }
}

impl std::ops::Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Ring::add(self, rhs)
    }
}

impl std::ops::Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Ring::sub(self, rhs)
    }
}

impl std::ops::Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Ring::mul(self, rhs)
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Ring::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(spec: &str) -> (FiniteGroup, Arc<CycloField>, VarTable, Vec<Poly>) {
        let g = FiniteGroup::parse(spec).unwrap();
        let f = CycloField::new(g.conductor());
        let vars = VarTable::new(&g);
        let xs = Poly::vars(&f, g.order());
        (g, f, vars, xs)
    }

    #[test]
    fn difference_of_squares() {
        let (_, _, vars, x) = setup("C2");
        let p = &(&x[0] + &x[1]) * &(&x[0] - &x[1]);
        assert_eq!(p.to_text(&vars), "x[e]^2 - x[a]^2");
        assert_eq!(p.homogeneous_degree(), Some(2));
        let z = Poly::zero(x[0].field());
        assert_eq!(&p + &z, p);
    }

    #[test]
    fn c3_circulant_product() {
        let (_, f, vars, x) = setup("C3");
        let w = |k| f.root_of_unity(k);
        let lin = |a: i64, b: i64| {
            let mut s = x[0].clone();
            s.add_assign(&x[1].scale(&w(a)));
            s.add_assign(&x[2].scale(&w(b)));
            s
        };
        let p = &(&lin(0, 0) * &lin(1, 2)) * &lin(2, 1);
        // brute-force expansion oracle: Σ_σ sgn(σ) Π_i M[i][σ(i)] for the circulant
        let expected = {
            let m = [[0usize, 2, 1], [1, 0, 2], [2, 1, 0]];
            let perms = [
                ([0, 1, 2], 1i64),
                ([1, 2, 0], 1),
                ([2, 0, 1], 1),
                ([0, 2, 1], -1),
                ([2, 1, 0], -1),
                ([1, 0, 2], -1),
            ];
            let mut acc = Poly::zero(&f);
            for (perm, sign) in perms {
                let t = (0..3).fold(Poly::one_in(&f), |t, i| &t * &x[m[i][perm[i]]]);
                acc.add_assign(&t.scale(&f.int(sign)));
            }
            acc
        };
        assert_eq!(p, expected);
        assert_eq!(
            p.to_text(&vars),
            "x[e]^3 - 3 * x[e]*x[a]*x[a^2] + x[a]^3 + x[a^2]^3"
        );
        let ones = vec![f.one(); 3];
        assert!(p.evaluate(&ones).unwrap().is_zero());
    }

    #[test]
    fn evaluation_examples() {
        let (_, f, _, x) = setup("C2");
        let p = &(&x[0] * &x[0]) - &(&x[1] * &x[1]);
        assert_eq!(p.evaluate(&vec![f.int(2), f.int(1)]).unwrap(), f.int(3));
        assert!(Poly::zero(&f)
            .evaluate(&Vec::<CycloNumber>::new())
            .unwrap()
            .is_zero());
        assert_eq!(p.evaluate(&vec![f.int(2)]), Err(Error::MissingVariable(1)));
    }

    #[test]
    fn substitution_examples() {
        let (_, _, _, x) = setup("C2");
        let sq = &x[0] * &x[0];
        let mut map = BTreeMap::new();
        map.insert(0usize, x[1].clone());
        assert_eq!(sq.substitute(&map).unwrap(), &x[1] * &x[1]);
        assert_eq!(
            (&x[0] * &x[1]).substitute(&map),
            Err(Error::MissingVariable(1))
        );
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::from_pairs([(0, 1), (1, 1), (2, 1)]);
        let b = Monomial::from_pairs([(1, 3)]);
        let c = Monomial::from_pairs([(0, 3)]);
        let d = Monomial::from_pairs([(0, 2)]);
        assert!(c > a && a > b && b > d);
        assert_eq!(
            Monomial::from_pairs([(3, 0), (1, 2), (1, 1)]),
            Monomial::from_pairs([(1, 3)])
        );
    }

    #[test]
    fn cyclotomic_coefficients_print_bracketed() {
        let (_, f, vars, x) = setup("C3");
        let p = &x[1].scale(&f.root_of_unity(1)) - &x[0];
        assert_eq!(p.to_text(&vars), "-x[e] + [(1)*z] * x[a]");
        assert_eq!(p.to_json(&vars)[0]["monomial"], "x[e]");
    }

    #[test]
    fn field_mismatch() {
        let a = Poly::var(&CycloField::new(3), 0);
        let b = Poly::var(&CycloField::new(4), 0);
        assert!(a.checked_add(&b).is_err());
        assert!(a.checked_mul(&b).is_err());
    }
}
