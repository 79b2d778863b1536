//! Exact group determinants of finite abelian groups, dihedral groups `D_m`
//! and generalized quaternion groups `Q_m`, their factorizations in the
//! group algebra, inverse formulas, and checkers for the identities relating
//! them.
//!
//! All arithmetic is exact: coefficients live in a cyclotomic field
//! `Q(ζ_L)` with arbitrary-precision rational coordinates.

pub mod context;
pub mod cyclotomic;
pub mod detlab;
pub mod error;
pub mod group_algebra;
pub mod groups;
pub mod polyring;
pub mod reps;
pub mod ring;
pub mod verify;

pub use context::GroupContext;
pub use cyclotomic::{CycloField, CycloNumber};
pub use error::{Error, Result};
pub use group_algebra::{AlgebraElement, FactorKind, Factors};
pub use groups::{FiniteGroup, GroupElement, GroupSpec};
pub use polyring::{Monomial, Poly, VarTable};
pub use reps::{RepSet, Representation};
pub use ring::Ring;
