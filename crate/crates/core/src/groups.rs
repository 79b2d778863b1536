//! Finite groups: abelian products of cyclic groups, dihedral groups `D_m`
//! and generalized quaternion groups `Q_m`.
//!
//! Elements live in canonical form and are addressed by a fixed index
//! (`0..order`). Every polynomial variable `x_g` is numbered by that index,
//! so the enumeration order here is part of the public contract:
//!
//! * abelian: exponent vectors in lexicographic order;
//! * `D_m` / `Q_m`: `e, a, …, a^{r-1}, b, ab, …, a^{r-1}b` with `r = |⟨a⟩|`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest group order accepted; the Cayley table is stored densely.
pub const MAX_ORDER: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Abelian,
    Dihedral,
    Quaternion,
}

/// Parsed group description, e.g. `C2xC6`, `D5`, `Q3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    /// `C_{n1} × … × C_{nk}`, kept as given (not reduced to invariant factors).
    AbelianProduct(Vec<u32>),
    /// `⟨a, b | a^m = b^2 = e, b⁻¹ab = a⁻¹⟩`, `m ≥ 3`.
    Dihedral(u32),
    /// `⟨a, b | a^{2m} = e, b^2 = a^m, b⁻¹ab = a⁻¹⟩`, `m ≥ 2`.
    GenQuaternion(u32),
}

impl GroupSpec {
    pub fn family(&self) -> Family {
        match self {
            GroupSpec::AbelianProduct(_) => Family::Abelian,
            GroupSpec::Dihedral(_) => Family::Dihedral,
            GroupSpec::GenQuaternion(_) => Family::Quaternion,
        }
    }

    /// Order of the group, saturating on overflow.
    pub fn order(&self) -> usize {
        match self {
            GroupSpec::AbelianProduct(ns) => ns
                .iter()
                .fold(1usize, |acc, &n| acc.saturating_mul(n as usize)),
            GroupSpec::Dihedral(m) => 2 * *m as usize,
            GroupSpec::GenQuaternion(m) => 4 * *m as usize,
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            GroupSpec::AbelianProduct(ns) => {
                if ns.is_empty() {
                    return Err(Error::InvalidParameter("empty abelian product".into()));
                }
                if let Some(n) = ns.iter().find(|&&n| n < 1) {
                    return Err(Error::InvalidParameter(format!(
                        "cyclic factor order {n} must be at least 1"
                    )));
                }
            }
            GroupSpec::Dihedral(m) if *m < 3 => {
                return Err(Error::InvalidParameter(format!(
                    "D{m}: dihedral groups need m >= 3"
                )))
            }
            GroupSpec::GenQuaternion(m) if *m < 2 => {
                return Err(Error::InvalidParameter(format!(
                    "Q{m}: generalized quaternion groups need m >= 2"
                )))
            }
            _ => {}
        }
        Ok(())
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::AbelianProduct(ns) => {
                for (i, n) in ns.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "C{n}")?;
                }
                Ok(())
            }
            GroupSpec::Dihedral(m) => write!(f, "D{m}"),
            GroupSpec::GenQuaternion(m) => write!(f, "Q{m}"),
        }
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_param(text: &str, whole: &str) -> Result<u32> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::MalformedSpec(whole.to_string()));
    }
    text.parse::<u32>()
        .map_err(|_| Error::InvalidParameter(format!("parameter `{text}` is too large")))
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let upper = trimmed.to_ascii_uppercase();
        let spec = if let Some(rest) = upper.strip_prefix('D') {
            GroupSpec::Dihedral(parse_param(rest, trimmed)?)
        } else if let Some(rest) = upper.strip_prefix('Q') {
            GroupSpec::GenQuaternion(parse_param(rest, trimmed)?)
        } else if upper.starts_with('C') {
            let factors = upper
                .split('X')
                .map(|part| {
                    part.strip_prefix('C')
                        .ok_or_else(|| Error::MalformedSpec(trimmed.to_string()))
                        .and_then(|n| parse_param(n, trimmed))
                })
                .collect::<Result<Vec<_>>>()?;
            GroupSpec::AbelianProduct(factors)
        } else {
            return Err(Error::MalformedSpec(trimmed.to_string()));
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Parses a group spec string such as `C2xC6`, `D5` or `Q3` (case-insensitive).
pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    text.parse()
}

/// A group element in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    /// Exponent vector `(e_1, …, e_k)` with `0 ≤ e_i < n_i`.
    Tuple(Vec<u32>),
    /// `a^k b^l` with `0 ≤ k < |⟨a⟩|`, `l ∈ {0, 1}` (`flip` is `l = 1`).
    Word { k: u32, flip: bool },
}

/// A finite group with its Cayley table and element index.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    spec: GroupSpec,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    table: Vec<usize>,
    inverses: Vec<usize>,
    names: Vec<String>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    pub fn new(spec: GroupSpec) -> Result<Self> {
        spec.validate()?;
        let order = spec.order();
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        let elements = enumerate(&spec);
        debug_assert_eq!(elements.len(), order);
        let index: HashMap<_, _> = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        let mut table = Vec::with_capacity(order * order);
        for x in &elements {
            for y in &elements {
                table.push(index[&multiply(&spec, x, y)]);
            }
        }
        let inverses = (0..order)
            .map(|i| {
                (0..order)
                    .find(|&j| table[i * order + j] == 0)
                    .expect("every element has an inverse")
            })
            .collect();
        let names = elements.iter().map(|g| element_name(&spec, g)).collect();
        Ok(FiniteGroup {
            spec,
            elements,
            index,
            table,
            inverses,
            names,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(text.parse()?)
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn family(&self) -> Family {
        self.spec.family()
    }

    pub fn is_abelian_family(&self) -> bool {
        self.family() == Family::Abelian
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// All elements in index order.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &GroupElement {
        &self.elements[idx]
    }

    pub fn index_of(&self, g: &GroupElement) -> Result<usize> {
        self.index
            .get(g)
            .copied()
            .ok_or_else(|| Error::InvalidElement {
                group: self.spec.to_string(),
                element: format!("{g:?}"),
            })
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        let (i, j) = (self.index_of(x)?, self.index_of(y)?);
        Ok(self.elements[self.mul_idx(i, j)].clone())
    }

    pub fn inv(&self, x: &GroupElement) -> Result<GroupElement> {
        let i = self.index_of(x)?;
        Ok(self.elements[self.inverses[i]].clone())
    }

    #[inline]
    pub fn mul_idx(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order() + j]
    }

    #[inline]
    pub fn inv_idx(&self, i: usize) -> usize {
        self.inverses[i]
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_by_name(&self, name: &str) -> Result<usize> {
        let compact: String = name.chars().filter(|c| !c.is_whitespace()).collect();
        self.names
            .iter()
            .position(|n| *n == compact)
            .ok_or_else(|| Error::UnknownElementName(name.to_string()))
    }

    /// `|⟨a⟩|` for `D_m` (`m`) and `Q_m` (`2m`); `None` for abelian groups.
    pub fn rotation_order(&self) -> Option<usize> {
        match self.spec {
            GroupSpec::AbelianProduct(_) => None,
            GroupSpec::Dihedral(m) => Some(m as usize),
            GroupSpec::GenQuaternion(m) => Some(2 * m as usize),
        }
    }

    /// The `m` of `D_m` / `Q_m`.
    pub fn m(&self) -> Option<u32> {
        match self.spec {
            GroupSpec::AbelianProduct(_) => None,
            GroupSpec::Dihedral(m) | GroupSpec::GenQuaternion(m) => Some(m),
        }
    }

    pub(crate) fn require_rotation(&self) -> Result<usize> {
        self.rotation_order()
            .ok_or_else(|| Error::NotMetacyclic(self.spec.to_string()))
    }

    /// Membership in `⟨a⟩`: canonical form has no `b`.
    pub fn in_rotation(&self, idx: usize) -> bool {
        match &self.elements[idx] {
            GroupElement::Word { flip, .. } => !flip,
            GroupElement::Tuple(_) => true,
        }
    }

    /// Index of `a^k` (k taken modulo `|⟨a⟩|`). Panics for abelian groups.
    pub fn a_pow(&self, k: i64) -> usize {
        let r = self.rotation_order().expect("a^k needs D_m or Q_m") as i64;
        k.rem_euclid(r) as usize
    }

    /// Index of `a^k b`. Panics for abelian groups.
    pub fn a_pow_b(&self, k: i64) -> usize {
        let r = self.rotation_order().expect("a^k b needs D_m or Q_m");
        r + self.a_pow(k)
    }

    /// The `(k, l)` of `a^k b^l`. Panics for abelian groups.
    pub fn word(&self, idx: usize) -> (usize, bool) {
        match &self.elements[idx] {
            GroupElement::Word { k, flip } => (*k as usize, *flip),
            GroupElement::Tuple(_) => panic!("abelian elements have no a^k b^l form"),
        }
    }

    /// Cycle orders of an abelian product; empty for `D_m`/`Q_m`.
    pub fn cycle_orders(&self) -> &[u32] {
        match &self.spec {
            GroupSpec::AbelianProduct(ns) => ns,
            _ => &[],
        }
    }

    /// Exponent of the group (lcm of element orders).
    pub fn exponent(&self) -> u32 {
        match &self.spec {
            GroupSpec::AbelianProduct(ns) => ns.iter().fold(1u32, |acc, &n| acc.lcm(&n)),
            GroupSpec::Dihedral(m) => m.lcm(&2),
            GroupSpec::GenQuaternion(m) => (2 * m).lcm(&4),
        }
    }

    /// Conductor `L` of the cyclotomic field holding every character value:
    /// the exponent for abelian groups, `lcm(m, 2)` for `D_m`, `lcm(2m, 4)` for `Q_m`.
    pub fn conductor(&self) -> u32 {
        self.exponent()
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {{{}}}", self.spec, self.names.join(", "))
    }
}

fn enumerate(spec: &GroupSpec) -> Vec<GroupElement> {
    match spec {
        GroupSpec::AbelianProduct(ns) => {
            let mut out = vec![Vec::new()];
            for &n in ns {
                out = out
                    .into_iter()
                    .flat_map(|prefix| {
                        (0..n).map(move |e| {
                            let mut v = prefix.clone();
                            v.push(e);
                            v
                        })
                    })
                    .collect();
            }
            out.into_iter().map(GroupElement::Tuple).collect()
        }
        GroupSpec::Dihedral(m) | GroupSpec::GenQuaternion(m) => {
            let r = if matches!(spec, GroupSpec::Dihedral(_)) {
                *m
            } else {
                2 * m
            };
            [false, true]
                .into_iter()
                .flat_map(|flip| (0..r).map(move |k| GroupElement::Word { k, flip }))
                .collect()
        }
    }
}

/// Normal-form multiplication: `b a^k = a^{-k} b`, then `b^2 → e` (dihedral)
/// or `b^2 → a^m` (quaternion).
fn multiply(spec: &GroupSpec, x: &GroupElement, y: &GroupElement) -> GroupElement {
    match (spec, x, y) {
        (GroupSpec::AbelianProduct(ns), GroupElement::Tuple(u), GroupElement::Tuple(v)) => {
            GroupElement::Tuple(
                ns.iter()
                    .zip(u.iter().zip(v))
                    .map(|(&n, (&p, &q))| (p + q) % n)
                    .collect(),
            )
        }
        (
            GroupSpec::Dihedral(m) | GroupSpec::GenQuaternion(m),
            GroupElement::Word { k: k1, flip: f1 },
            GroupElement::Word { k: k2, flip: f2 },
        ) => {
            let quaternion = matches!(spec, GroupSpec::GenQuaternion(_));
            let r = if quaternion { 2 * m } else { *m };
            if !f1 {
                return GroupElement::Word {
                    k: (k1 + k2) % r,
                    flip: *f2,
                };
            }
            // a^{k1} b a^{k2} b^{l2} = a^{k1 - k2} b^{1 + l2}
            let k = (k1 + r - k2) % r;
            if !f2 {
                GroupElement::Word { k, flip: true }
            } else {
                let shift = if quaternion { *m } else { 0 };
                GroupElement::Word {
                    k: (k + shift) % r,
                    flip: false,
                }
            }
        }
        _ => panic!("element shape does not match group family"),
    }
}

fn element_name(spec: &GroupSpec, g: &GroupElement) -> String {
    match g {
        GroupElement::Tuple(v) if v.len() == 1 => power_name(v[0], false),
        GroupElement::Tuple(v) => {
            let parts: Vec<String> = v.iter().map(|e| e.to_string()).collect();
            format!("({})", parts.join(","))
        }
        GroupElement::Word { k, flip } => {
            debug_assert!(!matches!(spec, GroupSpec::AbelianProduct(_)));
            power_name(*k, *flip)
        }
    }
}

fn power_name(k: u32, flip: bool) -> String {
    match (k, flip) {
        (0, false) => "e".to_string(),
        (0, true) => "b".to_string(),
        (1, false) => "a".to_string(),
        (1, true) => "a*b".to_string(),
        (k, false) => format!("a^{k}"),
        (k, true) => format!("a^{k}*b"),
    }
}
