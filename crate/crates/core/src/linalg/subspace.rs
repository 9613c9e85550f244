use std::cmp::Ordering;
use std::fmt;

use crate::exactfield::Field;

use super::{LinalgError, Matrix};

/// A subspace of `F^n`, stored as its reduced row-echelon basis with no zero
/// rows. The echelon form is unique, so structural equality is subspace
/// equality and subspaces can be hashed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: F, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: F, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span(field: F, ambient: usize, vectors: &[Vec<F::Elem>]) -> Result<Self, LinalgError> {
        let m = Matrix::from_rows(field, ambient, vectors.to_vec())?;
        Ok(Self::from_matrix(&m))
    }

    /// Row space of a matrix.
    pub fn from_matrix(m: &Matrix<F>) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        let basis = Matrix::from_rows(m.field().clone(), m.cols(), rows).expect("rows of a matrix");
        Subspace { ambient: m.cols(), basis, pivots }
    }

    /// Accepts a basis that must already be in reduced echelon form.
    pub(crate) fn from_echelon_unchecked(basis: Matrix<F>, pivots: Vec<usize>) -> Self {
        debug_assert_eq!(Self::from_matrix(&basis).basis, basis);
        Subspace { ambient: basis.cols(), basis, pivots }
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[F::Elem]> + '_ {
        self.basis.row_iter()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; a basis of a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Canonical representative of `v + self`: `v` with every pivot coordinate cleared.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field();
        let mut w = v.to_vec();
        for (i, &c) in self.pivots.iter().enumerate() {
            if f.is_zero(&w[c]) {
                continue;
            }
            let t = w[c].clone();
            for (j, b) in self.basis.row(i).iter().enumerate().skip(c) {
                w[j] = f.sub(&w[j], &f.mul(&t, b));
            }
        }
        w
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let coords: Vec<F::Elem> = self.pivots.iter().map(|&c| v[c].clone()).collect();
        let f = self.field();
        let mut w = vec![f.zero(); self.ambient];
        for (i, a) in coords.iter().enumerate() {
            for (j, b) in self.basis.row(i).iter().enumerate() {
                w[j] = f.add(&w[j], &f.mul(a, b));
            }
        }
        (w == v).then_some(coords)
    }

    pub fn checked_member(&self, v: &[F::Elem]) -> Result<bool, LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::AmbientMismatch { left: self.ambient, right: v.len() });
        }
        Ok(self.member(v))
    }

    /// Panics (in debug builds) on a length mismatch.
    pub fn member(&self, v: &[F::Elem]) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        let f = self.field();
        self.reduce(v).iter().all(|x| f.is_zero(x))
    }

    fn check(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient != other.ambient || self.field() != other.field() {
            return Err(LinalgError::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    /// `other ⊆ self`.
    pub fn checked_contains(&self, other: &Self) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok(self.contains(other))
    }

    pub fn contains(&self, other: &Self) -> bool {
        other.dim() <= self.dim() && other.basis_vectors().all(|v| self.member(v))
    }

    pub fn checked_sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check(other)?;
        Ok(self.sum(other))
    }

    pub fn sum(&self, other: &Self) -> Self {
        if self.contains(other) {
            return self.clone();
        }
        let rows: Vec<Vec<F::Elem>> = self.basis_vectors().chain(other.basis_vectors()).map(|r| r.to_vec()).collect();
        Self::span(self.field().clone(), self.ambient, &rows).expect("same ambient")
    }

    /// Adds vectors to the subspace.
    pub fn extend<'a, I>(&self, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a [F::Elem]>,
        F::Elem: 'a,
    {
        let mut rows: Vec<Vec<F::Elem>> = self.basis_vectors().map(|r| r.to_vec()).collect();
        let before = rows.len();
        for v in vectors {
            if !self.member(v) {
                rows.push(v.to_vec());
            }
        }
        if rows.len() == before {
            return self.clone();
        }
        Self::span(self.field().clone(), self.ambient, &rows).expect("same ambient")
    }

    pub fn checked_intersect(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check(other)?;
        Ok(self.intersect(other))
    }

    /// Zassenhaus: reduce `[[U, U], [V, 0]]`; rows with a zero left half span `U ∩ V`.
    pub fn intersect(&self, other: &Self) -> Self {
        if self.contains(other) {
            return other.clone();
        }
        if other.contains(self) {
            return self.clone();
        }
        let f = self.field().clone();
        let n = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for u in self.basis_vectors() {
            let mut r = u.to_vec();
            r.extend_from_slice(u);
            rows.push(r);
        }
        for v in other.basis_vectors() {
            let mut r = v.to_vec();
            r.extend(std::iter::repeat_n(f.zero(), n));
            rows.push(r);
        }
        let m = Matrix::from_rows(f.clone(), 2 * n, rows).expect("rectangular");
        let (r, pivots) = m.rref_with_pivots();
        let inter: Vec<Vec<F::Elem>> =
            pivots.iter().enumerate().filter(|(_, &c)| c >= n).map(|(i, _)| r.row(i)[n..].to_vec()).collect();
        Self::span(f, n, &inter).expect("same ambient")
    }

    /// Every vector of the subspace; finite fields only.
    pub fn vectors(&self) -> Option<Vec<Vec<F::Elem>>> {
        let f = self.field();
        let elems = f.elements()?;
        let mut out = vec![vec![f.zero(); self.ambient]];
        for b in self.basis_vectors() {
            let mut next = Vec::with_capacity(out.len() * elems.len());
            for v in &out {
                for c in &elems {
                    let w: Vec<F::Elem> = v.iter().zip(b).map(|(x, y)| f.add(x, &f.mul(c, y))).collect();
                    next.push(w);
                }
            }
            out = next;
        }
        Some(out)
    }

    /// Order used for lattice nodes: dimension, then echelon basis entries.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.dim().cmp(&other.dim()).then_with(|| self.pivots.cmp(&other.pivots)).then_with(|| {
            let a = self.basis_vectors().flat_map(|r| r.iter());
            let b = other.basis_vectors().flat_map(|r| r.iter());
            a.cmp(b)
        })
    }

    /// Basis rendered with the given coordinate names, e.g. `{a - a^2, a^3}`.
    pub fn describe(&self, names: &[String]) -> String {
        let parts: Vec<String> = self.basis_vectors().map(|v| format_vector(self.field(), v, names)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// Renders a coordinate vector as a linear combination of named basis vectors.
pub fn format_vector<F: Field>(field: &F, v: &[F::Elem], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in v.iter().zip(names) {
        if field.is_zero(c) {
            continue;
        }
        let mut s = field.format(c);
        let negative = s.starts_with('-');
        if negative {
            s.remove(0);
        }
        let term = if s == "1" { name.clone() } else { format!("{s}{name}") };
        match (out.is_empty(), negative) {
            (true, true) => out.push_str(&format!("-{term}")),
            (true, false) => out.push_str(&term),
            (false, true) => out.push_str(&format!(" - {term}")),
            (false, false) => out.push_str(&format!(" + {term}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace{:?}", self.basis)
    }
}
