use crate::exactfield::{Factorize, FieldError};
use crate::linalg::{Matrix, Subspace};
use crate::Verdict;

use super::LeibnizAlgebra;

/// Structural invariants that need no lattice enumeration.
#[derive(Clone, Debug)]
pub struct InvariantsReport<F: crate::exactfield::Field> {
    pub leib: Subspace<F>,
    pub center: Subspace<F>,
    /// `L^1 = L, L^2, ...` until it stabilizes.
    pub lower_central: Vec<Subspace<F>>,
    /// `L^(0) = L, L^(1), ...` until it stabilizes.
    pub derived: Vec<Subspace<F>>,
    pub nilpotent: bool,
    pub nilpotency_class: Option<usize>,
    pub solvable: bool,
    pub is_lie: bool,
    pub supersolvable: Verdict,
    /// A complete flag of ideals `0 = I_0 < I_1 < ... < I_n = L` when supersolvable.
    pub flag: Option<Vec<Subspace<F>>>,
}

#[derive(Clone, Debug)]
pub struct SupersolvableOutcome<F: crate::exactfield::Field> {
    pub verdict: Verdict,
    pub flag: Option<Vec<Subspace<F>>>,
    pub note: Option<String>,
}

impl<F: crate::exactfield::Field> LeibnizAlgebra<F> {
    pub fn lower_central_series(&self) -> Vec<Subspace<F>> {
        let full = self.full_subspace();
        let mut series = vec![full.clone()];
        loop {
            let next = self.product_space(series.last().unwrap(), &full);
            if &next == series.last().unwrap() {
                return series;
            }
            let done = next.is_zero();
            series.push(next);
            if done {
                return series;
            }
        }
    }

    pub fn derived_series(&self) -> Vec<Subspace<F>> {
        let mut series = vec![self.full_subspace()];
        loop {
            let last = series.last().unwrap();
            let next = self.product_space(last, last);
            if &next == last {
                return series;
            }
            let done = next.is_zero();
            series.push(next);
            if done {
                return series;
            }
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    /// Smallest `c` with `L^(c+1) = 0`.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let s = self.lower_central_series();
        s.last().unwrap().is_zero().then(|| s.len() - 1)
    }
}

impl<F: Factorize> LeibnizAlgebra<F> {
    /// A vector spanning a one-dimensional ideal, if one exists.
    pub fn one_dimensional_ideal(&self) -> Result<Option<Vec<F::Elem>>, FieldError> {
        let mut ops = Vec::with_capacity(2 * self.dim());
        for j in 0..self.dim() {
            let e = self.unit(j);
            ops.push(self.right_mult_matrix(&e));
            ops.push(self.left_mult_matrix(&e));
        }
        ops.retain(|m| !m.is_zero());
        let mut eigen = Vec::with_capacity(ops.len());
        for m in &ops {
            let roots = self.field().factor(&m.charpoly())?.roots(self.field());
            eigen.push(roots);
        }
        Ok(common_eigenvector(&ops, &eigen, self.full_subspace()))
    }

    /// Greedy search for a complete flag of ideals. A quotient of a
    /// supersolvable algebra is supersolvable, so failure at any step is final.
    pub fn supersolvable(&self) -> SupersolvableOutcome<F> {
        let mut current = self.zero_subspace();
        let mut flag = vec![current.clone()];
        while !current.is_full() {
            let q = self.quotient(&current).expect("flag members are ideals");
            match q.algebra.one_dimensional_ideal() {
                Ok(Some(w)) => {
                    let v = q.lift(&w);
                    current = current.extend([v.as_slice()]);
                    flag.push(current.clone());
                }
                Ok(None) => return SupersolvableOutcome { verdict: Verdict::False, flag: None, note: None },
                Err(e) => {
                    return SupersolvableOutcome {
                        verdict: Verdict::Unknown,
                        flag: None,
                        note: Some(format!("eigenvalue search failed: {e}")),
                    }
                }
            }
        }
        SupersolvableOutcome { verdict: Verdict::True, flag: Some(flag), note: None }
    }

    pub fn invariants(&self) -> InvariantsReport<F> {
        let leib = self.leib();
        let lower_central = self.lower_central_series();
        let derived = self.derived_series();
        let nilpotent = lower_central.last().unwrap().is_zero();
        let solvable = derived.last().unwrap().is_zero();
        let ss = self.supersolvable();
        InvariantsReport {
            is_lie: leib.is_zero(),
            center: self.center(),
            nilpotency_class: nilpotent.then(|| lower_central.len() - 1),
            leib,
            lower_central,
            derived,
            nilpotent,
            solvable,
            supersolvable: ss.verdict,
            flag: ss.flag,
        }
    }
}

/// A nonzero `v` in `space` with `v * op` a multiple of `v` for every
/// operator, searching eigenspaces for the given eigenvalue candidates.
fn common_eigenvector<F: Factorize>(
    ops: &[Matrix<F>],
    eigen: &[Vec<F::Elem>],
    space: Subspace<F>,
) -> Option<Vec<F::Elem>> {
    if space.is_zero() {
        return None;
    }
    let Some((op, rest)) = ops.split_first() else {
        return Some(space.basis().row(0).to_vec());
    };
    let f = op.field();
    let n = op.rows();
    for lambda in &eigen[0] {
        let shifted = op.add(&Matrix::identity(f.clone(), n).scale(&f.neg(lambda)));
        let e = shifted.kernel().intersect(&space);
        if let Some(v) = common_eigenvector(rest, &eigen[1..], e) {
            return Some(v);
        }
    }
    None
}
