use std::fmt;

use crate::exactfield::{Field, Polynomial};

use super::{LinalgError, Subspace};

/// Dense matrix over an exact field. Vectors are rows and operators act on
/// the right: the image of `v` under `M` is `v * M`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix { field, rows, cols, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    pub fn from_rows(field: F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(LinalgError::Ragged { row: i, len: r.len(), expected: cols });
            }
            data.extend(r);
        }
        Ok(Matrix { field, rows: n, cols, data })
    }

    pub fn from_i64(field: F, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Self::from_rows(field, cols, rows).expect("rectangular literal")
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[F::Elem]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape { left: (self.rows, self.cols), right: (other.rows, other.cols) });
        }
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    /// Panics on a shape mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("matrix shapes agree")
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = &self.field;
        let data = self.data.iter().map(|a| f.mul(a, s)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// `v * self` for a row vector `v`.
    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        debug_assert_eq!(v.len(), self.rows);
        let f = &self.field;
        let mut out = vec![f.zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(o, &f.mul(a, self.get(i, j)));
            }
        }
        out
    }

    /// Gauss–Jordan elimination in place; returns the pivot columns.
    fn reduce_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !f.is_zero(self.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let idx = r * self.cols + j;
                self.data[idx] = f.mul(&self.data[idx], &inv);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..self.cols {
                    let t = f.mul(&factor, self.get(r, j));
                    let idx = i * self.cols + j;
                    self.data[idx] = f.sub(&self.data[idx], &t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Unique reduced row-echelon form (same shape, zero rows last).
    pub fn rref(&self) -> Self {
        let mut m = self.clone();
        m.reduce_in_place();
        m
    }

    pub fn rref_with_pivots(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let p = m.reduce_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Left kernel `{v : v * self = 0}` as a subspace of `F^rows`.
    pub fn kernel(&self) -> Subspace<F> {
        let f = &self.field;
        let (r, pivots) = self.transpose().rref_with_pivots();
        let n = self.rows;
        let mut basis = Vec::new();
        for free in (0..n).filter(|c| !pivots.contains(c)) {
            let mut v = vec![f.zero(); n];
            v[free] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        Subspace::span(f.clone(), n, &basis).expect("kernel vectors have the right length")
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let f = &self.field;
        let mut aug = Self::zeros(f.clone(), n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, f.one());
        }
        let pivots = aug.reduce_in_place();
        if !pivots.iter().copied().take(n).eq(0..n) {
            return None;
        }
        let mut inv = Self::zeros(f.clone(), n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Determinant by Gaussian elimination; square matrices only.
    pub fn determinant(&self) -> F::Elem {
        assert_eq!(self.rows, self.cols, "square matrix");
        let f = &self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !f.is_zero(m.get(r, c))) else {
                return f.zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = f.neg(&det);
            }
            let pivot = m.get(c, c).clone();
            det = f.mul(&det, &pivot);
            let inv = f.inv(&pivot).expect("nonzero pivot");
            for r in c + 1..n {
                let factor = f.mul(m.get(r, c), &inv);
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..n {
                    let t = f.mul(&factor, m.get(c, j));
                    m.data[r * n + j] = f.sub(&m.data[r * n + j], &t);
                }
            }
        }
        det
    }

    /// Columns of `self` followed by the columns of `other`.
    pub fn hconcat(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "same row count");
        let mut m = Self::zeros(self.field.clone(), self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    /// `p(self)` by Horner's rule; square matrices only.
    pub fn eval_poly(&self, p: &Polynomial<F>) -> Self {
        assert_eq!(self.rows, self.cols, "square matrix");
        let n = self.rows;
        let mut acc = Self::zeros(self.field.clone(), n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self).add(&Self::identity(self.field.clone(), n).scale(c));
        }
        acc
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::identity(self.field.clone(), self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Characteristic polynomial `det(xI - M)` via reduction to upper
    /// Hessenberg form; division-safe in every characteristic.
    pub fn charpoly(&self) -> Polynomial<F> {
        assert_eq!(self.rows, self.cols, "square matrix");
        let f = self.field.clone();
        let n = self.rows;
        let mut h = self.clone();
        for j in 0..n.saturating_sub(2) {
            let Some(i) = (j + 1..n).find(|&i| !f.is_zero(h.get(i, j))) else {
                continue;
            };
            if i != j + 1 {
                for c in 0..n {
                    h.data.swap(i * n + c, (j + 1) * n + c);
                }
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + j + 1);
                }
            }
            let inv = f.inv(h.get(j + 1, j)).expect("nonzero pivot");
            for k in j + 2..n {
                let t = f.mul(h.get(k, j), &inv);
                if f.is_zero(&t) {
                    continue;
                }
                for c in 0..n {
                    let v = f.sub(h.get(k, c), &f.mul(&t, h.get(j + 1, c)));
                    h.set(k, c, v);
                }
                for r in 0..n {
                    let v = f.add(h.get(r, j + 1), &f.mul(&t, h.get(r, k)));
                    h.set(r, j + 1, v);
                }
            }
        }
        let x = Polynomial::monomial(f.clone(), 1);
        let mut p: Vec<Polynomial<F>> = vec![Polynomial::one(f.clone())];
        for m in 1..=n {
            let diag = Polynomial::constant(f.clone(), h.get(m - 1, m - 1).clone());
            let mut pm = x.sub(&diag).mul(&p[m - 1]);
            let mut t = f.one();
            for i in (1..m).rev() {
                t = f.mul(&t, h.get(i, i - 1));
                let coef = f.mul(h.get(i - 1, m - 1), &t);
                pm = pm.sub(&p[i - 1].scale(&coef));
            }
            p.push(pm);
        }
        p.pop().unwrap()
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(out, ", ")?;
            }
            let r: Vec<String> = self.row(i).iter().map(|x| self.field.format(x)).collect();
            write!(out, "[{}]", r.join(","))?;
        }
        write!(out, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{PrimeField, Rationals};

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f = gf(5);
        assert_eq!(Matrix::from_i64(f, &[&[2, 0], &[0, 2]]).rref(), Matrix::from_i64(f, &[&[1, 0], &[0, 1]]));
        assert_eq!(Matrix::from_i64(f, &[&[1, 2], &[2, 4]]).rref(), Matrix::from_i64(f, &[&[1, 2], &[0, 0]]));
        let z = Matrix::zeros(f, 2, 3);
        assert_eq!(z.rref(), z);
    }

    #[test]
    fn kernel_of_nilpotent_shift() {
        // R_a of the nilpotent cyclic algebra: a -> a^2 -> a^3 -> 0
        let f = gf(3);
        let t = Matrix::from_i64(f, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let k = t.kernel();
        assert_eq!(k, Subspace::span(f, 3, &[vec![0, 0, 1]]).unwrap());
        let k2 = t.pow(2).kernel();
        assert_eq!(k2, Subspace::span(f, 3, &[vec![0, 1, 0], vec![0, 0, 1]]).unwrap());
        assert_eq!(Matrix::identity(f, 3).kernel().dim(), 0);
    }

    #[test]
    fn charpoly_of_companion() {
        let q = Rationals;
        // rows are images of a, a^2, a^3 with [a^3, a] = 2 a^2 + 3 a^3
        let t = Matrix::from_i64(q, &[&[0, 1, 0], &[0, 0, 1], &[0, 2, 3]]);
        assert_eq!(t.charpoly(), Polynomial::from_i64(q, &[0, -2, -3, 1]));
    }

    #[test]
    fn charpoly_needs_row_swaps() {
        let f = gf(7);
        let m = Matrix::from_i64(f, &[&[1, 0, 2, 0], &[0, 0, 0, 1], &[3, 1, 0, 0], &[0, 4, 0, 5]]);
        let cp = m.charpoly();
        // Cayley-Hamilton
        assert!(m.eval_poly(&cp).is_zero());
        assert_eq!(cp.degree(), Some(4));
    }

    #[test]
    fn inverse_round_trip() {
        let f = PrimeField::new(7).unwrap();
        let m = Matrix::from_i64(f, &[&[1, 2, 0], &[0, 1, 3], &[4, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f, 3));
        let singular = Matrix::from_i64(f, &[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
        assert!(Matrix::<PrimeField>::zeros(f, 0, 0).inverse().is_some());
    }

    #[test]
    fn determinant_matches_charpoly_constant_term() {
        let f = PrimeField::new(7).unwrap();
        let m = Matrix::from_i64(f, &[&[0, 2, 0], &[1, 1, 3], &[4, 0, 1]]);
        let c0 = m.charpoly().coeff(0);
        // det(M) = (-1)^n p(0)
        assert_eq!(m.determinant(), f.neg(&c0));
        assert_eq!(Matrix::from_i64(f, &[&[1, 2], &[2, 4]]).determinant(), 0);
        let q = Matrix::from_i64(Rationals, &[&[2, 1], &[1, 3]]);
        assert_eq!(Rationals.format(&q.determinant()), "5");
    }
}
