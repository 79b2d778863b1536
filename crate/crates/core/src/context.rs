//! Everything derived once per group: the group itself, its coefficient
//! field, the representation table and the variable names.

use std::sync::Arc;

use crate::cyclotomic::{CycloField, CycloNumber};
use crate::error::Result;
use crate::groups::{FiniteGroup, GroupSpec};
use crate::polyring::{Poly, VarTable};
use crate::reps::{irreducible_set, RepSet};

#[derive(Clone, Debug)]
pub struct GroupContext {
    pub group: Arc<FiniteGroup>,
    pub field: Arc<CycloField>,
    pub reps: RepSet,
    pub vars: VarTable,
}

impl GroupContext {
    pub fn new(spec: GroupSpec) -> Result<Self> {
        let group = Arc::new(FiniteGroup::new(spec)?);
        let field = CycloField::new(group.conductor());
        let reps = irreducible_set(&group, &field);
        let vars = VarTable::new(&group);
        Ok(GroupContext {
            group,
            field,
            reps,
            vars,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(text.parse()?)
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// The variables `x_g`, indexed like the elements.
    pub fn symbols(&self) -> Vec<Poly> {
        Poly::vars(&self.field, self.order())
    }

    /// Integer values as field elements, indexed like the elements.
    pub fn point(&self, values: &[i64]) -> Vec<CycloNumber> {
        values.iter().map(|&v| self.field.int(v)).collect()
    }
}
