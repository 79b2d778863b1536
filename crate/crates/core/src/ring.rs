//! Commutative coefficient rings over a cyclotomic field.
//!
//! Every construction in the crate (group algebra products, determinants,
//! factor formulas) is written once against [`Ring`] and instantiated twice:
//! with [`Poly`](crate::polyring::Poly) for symbolic identities and with
//! [`CycloNumber`] for exact evaluation at a point.

use std::fmt::Debug;
use std::sync::Arc;

use crate::cyclotomic::{CycloField, CycloNumber};

pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn field(&self) -> &Arc<CycloField>;
    fn from_scalar(c: CycloNumber) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &CycloNumber) -> Self;

    fn add_assign(&mut self, rhs: &Self) {
        *self = self.add(rhs);
    }

    fn sub_assign(&mut self, rhs: &Self) {
        *self = self.sub(rhs);
    }

    fn zero_in(field: &Arc<CycloField>) -> Self {
        Self::from_scalar(CycloNumber::zero(field))
    }

    fn one_in(field: &Arc<CycloField>) -> Self {
        Self::from_scalar(CycloNumber::one(field))
    }
}

impl Ring for CycloNumber {
    fn field(&self) -> &Arc<CycloField> {
        CycloNumber::field(self)
    }

    fn from_scalar(c: CycloNumber) -> Self {
        c
    }

    fn is_zero(&self) -> bool {
        CycloNumber::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn scale(&self, c: &CycloNumber) -> Self {
        self * c
    }

    fn add_assign(&mut self, rhs: &Self) {
        self.add_assign_ref(rhs);
    }

    fn sub_assign(&mut self, rhs: &Self) {
        self.sub_assign_ref(rhs);
    }
}

/// Product of a sequence, `1` for an empty one.
pub fn product<'a, R: Ring + 'a>(
    field: &Arc<CycloField>,
    items: impl IntoIterator<Item = &'a R>,
) -> R {
    items
        .into_iter()
        .fold(R::one_in(field), |acc, x| acc.mul(x))
}

/// Sum of a sequence, `0` for an empty one.
pub fn sum<R: Ring>(field: &Arc<CycloField>, items: impl IntoIterator<Item = R>) -> R {
    items.into_iter().fold(R::zero_in(field), |mut acc, x| {
        acc.add_assign(&x);
        acc
    })
}
