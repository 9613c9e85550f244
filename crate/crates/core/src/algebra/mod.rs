//! Leibniz algebras given by structure constants.
//!
//! The bracket of basis vectors is `[e_i, e_j] = sum_k c[i][j][k] e_k`, and an
//! algebra is accepted only when the right Leibniz identity
//! `[x,[y,z]] = [[x,y],z] - [[x,z],y]` holds on every basis triple.

mod ideals;
mod invariants;
mod structure;

use std::fmt;

use crate::exactfield::Field;
use crate::linalg::{format_vector, Matrix, Subspace};

pub use ideals::IdealError;
pub use invariants::{InvariantsReport, SupersolvableOutcome};
pub use structure::{Quotient, QuotientError};

/// A raw multiplication table, not yet checked against the identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StructureConstants<F: Field> {
    field: F,
    dim: usize,
    names: Vec<String>,
    table: Vec<F::Elem>,
}

impl<F: Field> StructureConstants<F> {
    /// The zero table on basis `e1..en`.
    pub fn zero(field: F, dim: usize) -> Self {
        let names = (1..=dim).map(|i| format!("e{i}")).collect();
        Self::zero_named(field, names)
    }

    pub fn zero_named(field: F, names: Vec<String>) -> Self {
        let dim = names.len();
        let table = vec![field.zero(); dim * dim * dim];
        StructureConstants { field, dim, names, table }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim, "one name per basis vector");
        self.names = names;
        self
    }

    /// Table from a dense `n x n x n` array.
    pub fn from_dense(field: F, names: Vec<String>, dense: Vec<Vec<Vec<F::Elem>>>) -> Option<Self> {
        let n = names.len();
        if dense.len() != n || dense.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return None;
        }
        let table = dense.into_iter().flatten().flatten().collect();
        Some(StructureConstants { field, dim: n, names, table })
    }

    /// Sets `[e_i, e_j]` from integer coordinates.
    pub fn set_product_i64(&mut self, i: usize, j: usize, coords: &[i64]) {
        let v: Vec<F::Elem> = coords.iter().map(|&c| self.field.from_i64(c)).collect();
        self.set_product(i, j, &v);
    }

    pub fn set_product(&mut self, i: usize, j: usize, v: &[F::Elem]) {
        assert_eq!(v.len(), self.dim);
        let start = (i * self.dim + j) * self.dim;
        self.table[start..start + self.dim].clone_from_slice(v);
    }

    /// Adds `c * e_k` to `[e_i, e_j]`.
    pub fn add_term(&mut self, i: usize, j: usize, k: usize, c: i64) {
        let idx = (i * self.dim + j) * self.dim + k;
        self.table[idx] = self.field.add(&self.table[idx], &self.field.from_i64(c));
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &F::Elem {
        &self.table[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn product(&self, i: usize, j: usize) -> &[F::Elem] {
        let start = (i * self.dim + j) * self.dim;
        &self.table[start..start + self.dim]
    }

    /// Dense `n x n x n` view.
    pub fn to_dense(&self) -> Vec<Vec<Vec<F::Elem>>> {
        (0..self.dim).map(|i| (0..self.dim).map(|j| self.product(i, j).to_vec()).collect()).collect()
    }

    /// Table with `c'[i][j][k] = c[j][i][k]`.
    pub fn opposite(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set_product(i, j, self.product(j, i));
            }
        }
        out
    }

    pub fn bracket(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let n = self.dim;
        let mut out = vec![f.zero(); n];
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (o, c) in out.iter_mut().zip(self.product(i, j)) {
                    if !f.is_zero(c) {
                        *o = f.add(o, &f.mul(&ab, c));
                    }
                }
            }
        }
        out
    }

    fn unit(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    /// Both sides of the identity on one basis triple.
    pub fn identity_sides(&self, i: usize, j: usize, k: usize) -> (Vec<F::Elem>, Vec<F::Elem>) {
        let (x, y, z) = (self.unit(i), self.unit(j), self.unit(k));
        let lhs = self.bracket(&x, self.product(j, k));
        let a = self.bracket(self.product(i, j), &z);
        let b = self.bracket(self.product(i, k), &y);
        let f = &self.field;
        let rhs = a.iter().zip(&b).map(|(p, q)| f.sub(p, q)).collect();
        (lhs, rhs)
    }

    pub fn check_triple(&self, i: usize, j: usize, k: usize) -> Option<Violation<F>> {
        let (lhs, rhs) = self.identity_sides(i, j, k);
        (lhs != rhs).then(|| Violation { i, j, k, lhs, rhs, names: self.names.clone(), field: self.field.clone() })
    }

    /// First violated basis triple in lexicographic order, if any.
    pub fn validate(&self) -> Result<(), Violation<F>> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if let Some(v) = self.check_triple(i, j, k) {
                        return Err(v);
                    }
                }
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for StructureConstants<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        write!(out, "Table[")?;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let p = self.product(i, j);
                if p.iter().all(|c| self.field.is_zero(c)) {
                    continue;
                }
                if !first {
                    write!(out, ", ")?;
                }
                first = false;
                let v = format_vector(&self.field, p, &self.names);
                write!(out, "[{},{}]={}", self.names[i], self.names[j], v)?;
            }
        }
        write!(out, "]")
    }
}

/// A basis triple on which the right Leibniz identity fails.
#[derive(Clone, PartialEq, Eq)]
pub struct Violation<F: Field> {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub lhs: Vec<F::Elem>,
    pub rhs: Vec<F::Elem>,
    names: Vec<String>,
    field: F,
}

impl<F: Field> Violation<F> {
    pub fn triple_names(&self) -> (&str, &str, &str) {
        (&self.names[self.i], &self.names[self.j], &self.names[self.k])
    }

    pub fn lhs_text(&self) -> String {
        format_vector(&self.field, &self.lhs, &self.names)
    }

    pub fn rhs_text(&self) -> String {
        format_vector(&self.field, &self.rhs, &self.names)
    }
}

impl<F: Field> fmt::Display for Violation<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y, z) = self.triple_names();
        write!(
            out,
            "Leibniz identity fails at ({x}, {y}, {z}): [{x},[{y},{z}]] = {} but [[{x},{y}],{z}] - [[{x},{z}],{y}] = {}",
            self.lhs_text(),
            self.rhs_text()
        )
    }
}

impl<F: Field> fmt::Debug for Violation<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, out)
    }
}

impl<F: Field> std::error::Error for Violation<F> {}

/// Which way round a printed table was accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    AsGiven,
    Opposite,
}

/// A validated right Leibniz algebra with cached multiplication operators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LeibnizAlgebra<F: Field> {
    table: StructureConstants<F>,
}

impl<F: Field> LeibnizAlgebra<F> {
    pub fn new(table: StructureConstants<F>) -> Result<Self, Violation<F>> {
        table.validate()?;
        Ok(LeibnizAlgebra { table })
    }

    /// Accepts the table, or its opposite when only the opposite satisfies
    /// the right identity. Returns the violation of the table as given when
    /// neither does.
    pub fn from_either_orientation(table: StructureConstants<F>) -> Result<(Self, Orientation), Violation<F>> {
        match table.validate() {
            Ok(()) => Ok((LeibnizAlgebra { table }, Orientation::AsGiven)),
            Err(v) => {
                let op = table.opposite();
                op.validate().map_err(|_| v)?;
                Ok((LeibnizAlgebra { table: op }, Orientation::Opposite))
            }
        }
    }

    pub fn abelian(field: F, dim: usize) -> Self {
        LeibnizAlgebra { table: StructureConstants::zero(field, dim) }
    }

    pub fn table(&self) -> &StructureConstants<F> {
        &self.table
    }

    pub fn into_table(self) -> StructureConstants<F> {
        self.table
    }

    pub fn field(&self) -> &F {
        &self.table.field
    }

    pub fn dim(&self) -> usize {
        self.table.dim
    }

    pub fn names(&self) -> &[String] {
        &self.table.names
    }

    pub fn bracket(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        self.table.bracket(x, y)
    }

    pub fn square(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        self.table.bracket(x, x)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[F::Elem] {
        self.table.product(i, j)
    }

    pub fn unit(&self, i: usize) -> Vec<F::Elem> {
        self.table.unit(i)
    }

    pub fn zero_vector(&self) -> Vec<F::Elem> {
        vec![self.field().zero(); self.dim()]
    }

    pub fn vector_i64(&self, coords: &[i64]) -> Vec<F::Elem> {
        coords.iter().map(|&c| self.field().from_i64(c)).collect()
    }

    pub fn format_vector(&self, v: &[F::Elem]) -> String {
        format_vector(self.field(), v, self.names())
    }

    pub fn describe(&self, s: &Subspace<F>) -> String {
        s.describe(self.names())
    }

    pub fn zero_subspace(&self) -> Subspace<F> {
        Subspace::zero(self.field().clone(), self.dim())
    }

    pub fn full_subspace(&self) -> Subspace<F> {
        Subspace::full(self.field().clone(), self.dim())
    }

    /// Span of vectors of this algebra.
    pub fn span(&self, vectors: &[Vec<F::Elem>]) -> Subspace<F> {
        Subspace::span(self.field().clone(), self.dim(), vectors).expect("vectors of this algebra")
    }

    /// Matrix of `R_x : v -> [v, x]`.
    pub fn right_mult_matrix(&self, x: &[F::Elem]) -> Matrix<F> {
        let rows = (0..self.dim()).map(|i| self.bracket(&self.unit(i), x)).collect();
        Matrix::from_rows(self.field().clone(), self.dim(), rows).expect("square")
    }

    /// Matrix of `L_x : v -> [x, v]`.
    pub fn left_mult_matrix(&self, x: &[F::Elem]) -> Matrix<F> {
        let rows = (0..self.dim()).map(|i| self.bracket(x, &self.unit(i))).collect();
        Matrix::from_rows(self.field().clone(), self.dim(), rows).expect("square")
    }

    /// Table of the opposite algebra, which is left Leibniz and generally not
    /// right Leibniz.
    pub fn opposite_table(&self) -> StructureConstants<F> {
        self.table.opposite()
    }

    /// Block-diagonal sum; clashing basis names of `other` get a prime.
    pub fn direct_sum(&self, other: &Self) -> Self {
        assert_eq!(self.field(), other.field(), "same field");
        let (n, m) = (self.dim(), other.dim());
        let mut names = self.names().to_vec();
        for name in other.names() {
            let mut candidate = name.clone();
            while names.contains(&candidate) {
                candidate.push('\'');
            }
            names.push(candidate);
        }
        let mut t = StructureConstants::zero_named(self.field().clone(), names);
        let zero = self.field().zero();
        for i in 0..n {
            for j in 0..n {
                let mut v = self.basis_product(i, j).to_vec();
                v.resize(n + m, zero.clone());
                t.set_product(i, j, &v);
            }
        }
        for i in 0..m {
            for j in 0..m {
                let mut v = vec![zero.clone(); n];
                v.extend_from_slice(other.basis_product(i, j));
                t.set_product(n + i, n + j, &v);
            }
        }
        LeibnizAlgebra { table: t }
    }

    /// The same algebra written in the basis `f_i = sum_k p[i][k] e_k`.
    /// Returns `None` when `p` is singular.
    pub fn change_basis(&self, p: &Matrix<F>, names: Vec<String>) -> Option<Self> {
        let inv = p.inverse()?;
        let mut t = StructureConstants::zero_named(self.field().clone(), names);
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let prod = self.bracket(p.row(i), p.row(j));
                t.set_product(i, j, &inv.apply(&prod));
            }
        }
        Some(LeibnizAlgebra { table: t })
    }
}

impl<F: Field> fmt::Debug for LeibnizAlgebra<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "LeibnizAlgebra({}, {:?})", self.field().descriptor(), self.table)
    }
}
