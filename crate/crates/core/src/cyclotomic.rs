//! Exact arithmetic in the cyclotomic field `Q(ζ_L)`.
//!
//! Numbers are stored in the power basis `1, ζ, …, ζ^{φ(L)-1}` with
//! arbitrary-precision rational coordinates, reduced modulo the cyclotomic
//! polynomial `Φ_L`. The representation is canonical, so structural equality
//! is field equality.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The field `Q(ζ_L)` together with its reduction data.
#[derive(Debug)]
pub struct CycloField {
    conductor: u32,
    /// Coefficients of `Φ_L`, lowest degree first (monic).
    modulus: Vec<i64>,
    /// `powers[j]` holds the coordinates of `ζ^j` for `0 ≤ j < L`.
    powers: Vec<Vec<i64>>,
}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor
    }
}

impl Eq for CycloField {}

impl CycloField {
    pub fn new(conductor: u32) -> Arc<Self> {
        assert!(conductor >= 1, "conductor must be positive");
        let modulus = cyclotomic_polynomial(conductor);
        let degree = modulus.len() - 1;
        let l = conductor as usize;
        let mut powers = Vec::with_capacity(l);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..l {
            powers.push(cur.clone());
            // multiply by ζ and reduce with ζ^φ = -Σ modulus[i] ζ^i
            let top = cur[degree - 1];
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1] - top * modulus[i];
            }
            cur[0] = -top * modulus[0];
        }
        Arc::new(CycloField {
            conductor,
            modulus,
            powers,
        })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// `φ(L)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Coefficients of `Φ_L`, lowest degree first.
    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    pub fn zero(self: &Arc<Self>) -> CycloNumber {
        CycloNumber::zero(self)
    }

    pub fn one(self: &Arc<Self>) -> CycloNumber {
        CycloNumber::one(self)
    }

    /// `ζ_L^k`, with `k` taken modulo `L`.
    pub fn root_of_unity(self: &Arc<Self>, k: i64) -> CycloNumber {
        let j = k.rem_euclid(self.conductor as i64) as usize;
        CycloNumber {
            field: Arc::clone(self),
            coeffs: self.powers[j]
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        }
    }

    /// `ζ_d^k` embedded as `ζ_L^{k L/d}`; `d` must divide `L`.
    pub fn root_of_unity_of_order(self: &Arc<Self>, d: u32, k: i64) -> CycloNumber {
        assert!(
            d >= 1 && self.conductor.is_multiple_of(d),
            "ζ_{d} is not in Q(ζ_{})",
            self.conductor
        );
        self.root_of_unity(k * (self.conductor / d) as i64)
    }

    /// The imaginary unit `ζ_4`; requires `4 | L`.
    pub fn imaginary_unit(self: &Arc<Self>) -> CycloNumber {
        self.root_of_unity_of_order(4, 1)
    }

    pub fn rational(self: &Arc<Self>, q: BigRational) -> CycloNumber {
        CycloNumber::from_rational(self, q)
    }

    pub fn int(self: &Arc<Self>, n: i64) -> CycloNumber {
        CycloNumber::from_rational(self, BigRational::from_integer(n.into()))
    }
}

/// The `n`-th cyclotomic polynomial, lowest degree first, computed as
/// `(x^n - 1) / Π_{d | n, d < n} Φ_d`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    fn go(n: u32, memo: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
        if let Some(p) = memo.get(&n) {
            return p.clone();
        }
        let mut num = vec![0i64; n as usize + 1];
        num[0] = -1;
        num[n as usize] = 1;
        for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
            let div = go(d, memo);
            num = exact_div_monic(&num, &div);
        }
        memo.insert(n, num.clone());
        num
    }
    go(n, &mut HashMap::new())
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[i + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "division is not exact");
    quot
}

/// An element of `Q(ζ_L)`.
#[derive(Clone)]
pub struct CycloNumber {
    field: Arc<CycloField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor && self.coeffs == other.coeffs
    }
}

impl Eq for CycloNumber {}

impl CycloNumber {
    pub fn zero(field: &Arc<CycloField>) -> Self {
        CycloNumber {
            field: Arc::clone(field),
            coeffs: vec![BigRational::zero(); field.degree()],
        }
    }

    pub fn one(field: &Arc<CycloField>) -> Self {
        Self::from_rational(field, BigRational::one())
    }

    pub fn from_rational(field: &Arc<CycloField>, q: BigRational) -> Self {
        let mut n = Self::zero(field);
        n.coeffs[0] = q;
        n
    }

    pub fn from_int(field: &Arc<CycloField>, v: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(v.into()))
    }

    /// Builds a number from power-basis coordinates; longer inputs are reduced.
    pub fn from_coeffs(field: &Arc<CycloField>, coeffs: Vec<BigRational>) -> Self {
        let mut out = Self::zero(field);
        let l = field.conductor as usize;
        for (j, c) in coeffs.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, &p) in out.coeffs.iter_mut().zip(&field.powers[j % l]) {
                if p != 0 {
                    *slot += &c * BigInt::from(p);
                }
            }
        }
        out
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// Power-basis coordinates (length `φ(L)`).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the number lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field.conductor != other.field.conductor {
            return Err(Error::FieldMismatch {
                left: self.field.conductor,
                right: other.field.conductor,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        CycloNumber {
            field: Arc::clone(&self.field),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn sub_unchecked(&self, other: &Self) -> Self {
        CycloNumber {
            field: Arc::clone(&self.field),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub(crate) fn add_assign_ref(&mut self, other: &Self) {
        self.assert_same_field(other);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    pub(crate) fn sub_assign_ref(&mut self, other: &Self) {
        self.assert_same_field(other);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }

    fn scale_rational(&self, q: &BigRational) -> Self {
        CycloNumber {
            field: Arc::clone(&self.field),
            coeffs: self
                .coeffs
                .iter()
                .map(|c| if c.is_zero() { c.clone() } else { c * q })
                .collect(),
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if let Some(q) = other.as_rational() {
            return self.scale_rational(q);
        }
        if let Some(q) = self.as_rational() {
            return other.scale_rational(q);
        }
        let deg = self.field.degree();
        let mut raw = vec![BigRational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<BigRational> = raw.drain(..deg).collect();
        let l = self.field.conductor as usize;
        for (offset, c) in raw.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, &p) in out.iter_mut().zip(&self.field.powers[(deg + offset) % l]) {
                if p != 0 {
                    *slot += &c * BigInt::from(p);
                }
            }
        }
        CycloNumber {
            field: Arc::clone(&self.field),
            coeffs: out,
        }
    }

    fn assert_same_field(&self, other: &Self) {
        if let Err(e) = self.check_field(other) {
            panic!("{e}");
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Φ_L`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(CycloNumber::from_rational(&self.field, q.recip()));
        }
        let modulus: Vec<BigRational> = self
            .field
            .modulus
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        let s = upoly::inverse_mod(&self.coeffs, &modulus);
        Ok(CycloNumber::from_coeffs(&self.field, s))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.mul_unchecked(&other.inverse()?))
    }

    /// Complex conjugation, the automorphism `ζ ↦ ζ^{-1}`.
    pub fn conjugate(&self) -> Self {
        let l = self.field.conductor as i64;
        let mut out = Self::zero(&self.field);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let target = &self.field.powers[(-(j as i64)).rem_euclid(l) as usize];
            for (slot, &p) in out.coeffs.iter_mut().zip(target) {
                if p != 0 {
                    *slot += c * BigInt::from(p);
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// Smallest `k ≥ 1` with `self^k = 1`, searching up to `bound`.
    pub fn multiplicative_order(&self, bound: u64) -> Option<u64> {
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_one() {
                return Some(k);
            }
            acc = acc.mul_unchecked(self);
        }
        None
    }

    /// Whether `self` is an `L`-th root of unity.
    pub fn is_root_of_unity(&self) -> bool {
        self.pow(self.field.conductor as u64).is_one()
    }
}

fn fmt_rational(q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for CycloNumber {
    /// Rationals print as `p/q`; other numbers as `(c0) + (c1)*z + (c2)*z^2 …`
    /// over their nonzero coordinates, `z` standing for `ζ_L`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return fmt_rational(q, f);
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            f.write_str("(")?;
            fmt_rational(c, f)?;
            f.write_str(")")?;
            match j {
                0 => {}
                1 => f.write_str("*z")?,
                _ => write!(f, "*z^{j}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNumber[L={}]({})", self.field.conductor, self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl std::ops::$trait<&CycloNumber> for &CycloNumber {
            type Output = CycloNumber;
            /// Panics if the operands live in different fields.
            fn $method(self, rhs: &CycloNumber) -> CycloNumber {
                self.assert_same_field(rhs);
                self.$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_unchecked);
forward_binop!(Sub, sub, sub_unchecked);
forward_binop!(Mul, mul, mul_unchecked);

impl std::ops::Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Parses `p`, `-p` or `p/q` into a rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let bad = || Error::BadRational(text.to_string());
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Dense univariate polynomials over `Q`, just enough for field inversion.
mod upoly {
    use super::*;

    fn trim(p: &mut Vec<BigRational>) {
        while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        if p.is_empty() {
            p.push(BigRational::zero());
        }
    }

    fn is_zero(p: &[BigRational]) -> bool {
        p.iter().all(Zero::is_zero)
    }

    fn deg(p: &[BigRational]) -> usize {
        p.len() - 1
    }

    fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut r = a.to_vec();
        trim(&mut r);
        let lead = b.last().expect("nonzero divisor").clone();
        if deg(&r) < deg(b) || is_zero(&r) {
            return (vec![BigRational::zero()], r);
        }
        let mut q = vec![BigRational::zero(); deg(&r) - deg(b) + 1];
        while !is_zero(&r) && deg(&r) >= deg(b) {
            let shift = deg(&r) - deg(b);
            let c = r.last().unwrap() / &lead;
            for (i, bc) in b.iter().enumerate() {
                r[shift + i] -= &c * bc;
            }
            q[shift] = c;
            r.pop();
            trim(&mut r);
        }
        (q, r)
    }

    fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(&mut out);
        out
    }

    fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let n = a.len().max(b.len());
        let mut out: Vec<BigRational> = (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
                let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
                x - y
            })
            .collect();
        trim(&mut out);
        out
    }

    /// `s` with `s·a ≡ 1 (mod m)`; `a` must be a unit modulo the irreducible `m`.
    pub(super) fn inverse_mod(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
        let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
        trim(&mut r1);
        let (mut s0, mut s1) = (vec![BigRational::zero()], vec![BigRational::one()]);
        while !is_zero(&r1) {
            let (q, r) = divrem(&r0, &r1);
            let s = sub(&s0, &mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is a nonzero constant gcd
        debug_assert_eq!(deg(&r0), 0);
        let c = r0[0].recip();
        let mut out: Vec<BigRational> = s0.into_iter().map(|x| x * &c).collect();
        trim(&mut out);
        out
    }
}

impl std::iter::Sum for CycloNumber {
    /// Panics on an empty iterator (there is no field to put the zero in).
    fn sum<I: Iterator<Item = CycloNumber>>(mut iter: I) -> Self {
        let mut acc = iter
            .next()
            .expect("sum of an empty sequence of CycloNumbers");
        for x in iter {
            acc.add_assign_ref(&x);
        }
        acc
    }
}

/// Euler's totient, used to cross-check `deg Φ_L`.
pub fn totient(n: u32) -> u32 {
    (1..=n).filter(|&k| k.gcd(&n) == 1).count() as u32
}
