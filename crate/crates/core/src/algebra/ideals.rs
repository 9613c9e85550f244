use thiserror::Error;

use crate::exactfield::Field;
use crate::linalg::{enumerate_subspaces, LinalgError, Subspace};

use super::LeibnizAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error(transparent)]
    Enumeration(#[from] LinalgError),
}

impl<F: Field> LeibnizAlgebra<F> {
    /// Lower central series of the subalgebra `u` taken as an algebra.
    fn sub_lower_central_reaches_zero(&self, u: &Subspace<F>) -> bool {
        let mut cur = u.clone();
        loop {
            if cur.is_zero() {
                return true;
            }
            let next = self.product_space(&cur, u);
            if next == cur {
                return false;
            }
            cur = next;
        }
    }

    fn sub_derived_reaches_zero(&self, u: &Subspace<F>) -> bool {
        let mut cur = u.clone();
        loop {
            if cur.is_zero() {
                return true;
            }
            let next = self.product_space(&cur, &cur);
            if next == cur {
                return false;
            }
            cur = next;
        }
    }

    pub fn is_nilpotent_subalgebra(&self, u: &Subspace<F>) -> bool {
        self.sub_lower_central_reaches_zero(u)
    }

    pub fn is_solvable_subalgebra(&self, u: &Subspace<F>) -> bool {
        self.sub_derived_reaches_zero(u)
    }

    /// Every ideal, by filtering all subspaces; finite fields only.
    pub fn ideals(&self, budget: u64) -> Result<Vec<Subspace<F>>, IdealError> {
        Ok(enumerate_subspaces(self.field(), self.dim(), budget)?.filter(|s| self.is_ideal(s)).collect())
    }

    /// `N(L)`, the sum of all nilpotent ideals (itself nilpotent).
    pub fn nilradical(&self, budget: u64) -> Result<Subspace<F>, IdealError> {
        Ok(self
            .ideals(budget)?
            .into_iter()
            .filter(|i| self.is_nilpotent_subalgebra(i))
            .fold(self.zero_subspace(), |acc, i| acc.sum(&i)))
    }

    /// `R(L)`, the sum of all solvable ideals (itself solvable).
    pub fn radical(&self, budget: u64) -> Result<Subspace<F>, IdealError> {
        Ok(self
            .ideals(budget)?
            .into_iter()
            .filter(|i| self.is_solvable_subalgebra(i))
            .fold(self.zero_subspace(), |acc, i| acc.sum(&i)))
    }

    /// Minimal nonzero ideals.
    pub fn minimal_ideals(&self, budget: u64) -> Result<Vec<Subspace<F>>, IdealError> {
        let nonzero: Vec<Subspace<F>> = self.ideals(budget)?.into_iter().filter(|i| !i.is_zero()).collect();
        Ok(nonzero.iter().filter(|i| !nonzero.iter().any(|j| j != *i && i.contains(j))).cloned().collect())
    }

    /// The socle: sum of the minimal ideals.
    pub fn socle(&self, budget: u64) -> Result<Subspace<F>, IdealError> {
        Ok(self.minimal_ideals(budget)?.into_iter().fold(self.zero_subspace(), |acc, i| acc.sum(&i)))
    }
}
