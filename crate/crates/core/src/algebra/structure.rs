use std::fmt;

use crate::exactfield::Field;
use crate::linalg::{Matrix, Subspace};

use super::{LeibnizAlgebra, StructureConstants};

/// Quotient by a subspace that is not an ideal: `[left, right]` escapes it.
#[derive(Clone, PartialEq, Eq)]
pub struct QuotientError<F: Field> {
    pub left: Vec<F::Elem>,
    pub right: Vec<F::Elem>,
    pub product: Vec<F::Elem>,
    text: String,
}

impl<F: Field> fmt::Display for QuotientError<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "not an ideal: {}", self.text)
    }
}

impl<F: Field> fmt::Debug for QuotientError<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, out)
    }
}

impl<F: Field> std::error::Error for QuotientError<F> {}

/// A quotient algebra together with the projection data needed to push
/// subspaces of the parent into it.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    pub algebra: LeibnizAlgebra<F>,
    pub ideal: Subspace<F>,
    /// Parent coordinates kept as the quotient basis.
    pub representatives: Vec<usize>,
}

impl<F: Field> Quotient<F> {
    /// Image of a parent vector in quotient coordinates.
    pub fn project(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let r = self.ideal.reduce(v);
        self.representatives.iter().map(|&c| r[c].clone()).collect()
    }

    pub fn project_subspace(&self, s: &Subspace<F>) -> Subspace<F> {
        let rows: Vec<Vec<F::Elem>> = s.basis_vectors().map(|v| self.project(v)).collect();
        self.algebra.span(&rows)
    }

    /// Representative in the parent of a quotient vector.
    pub fn lift(&self, w: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.algebra.field();
        let mut v = vec![f.zero(); self.ideal.ambient_dim()];
        for (&c, a) in self.representatives.iter().zip(w) {
            v[c] = a.clone();
        }
        v
    }

    /// Full preimage of a quotient subspace.
    pub fn preimage(&self, s: &Subspace<F>) -> Subspace<F> {
        let lifted: Vec<Vec<F::Elem>> = s.basis_vectors().map(|w| self.lift(w)).collect();
        self.ideal.extend(lifted.iter().map(|v| v.as_slice()))
    }
}

impl<F: Field> LeibnizAlgebra<F> {
    /// The subalgebra generated by a set of vectors.
    pub fn closure(&self, generators: &[Vec<F::Elem>]) -> Subspace<F> {
        let mut span = self.zero_subspace();
        let mut basis: Vec<Vec<F::Elem>> = Vec::new();
        let mut queue: Vec<Vec<F::Elem>> = generators.to_vec();
        while let Some(v) = queue.pop() {
            if span.member(&v) {
                continue;
            }
            span = span.extend([v.as_slice()]);
            for w in basis.iter().chain(std::iter::once(&v)) {
                queue.push(self.bracket(&v, w));
                queue.push(self.bracket(w, &v));
            }
            basis.push(v);
        }
        span
    }

    /// Subalgebra generated by a subspace together with extra vectors.
    pub fn join(&self, u: &Subspace<F>, v: &Subspace<F>) -> Subspace<F> {
        let gens: Vec<Vec<F::Elem>> = u.basis_vectors().chain(v.basis_vectors()).map(|r| r.to_vec()).collect();
        self.closure(&gens)
    }

    pub fn is_subalgebra(&self, u: &Subspace<F>) -> bool {
        let b: Vec<&[F::Elem]> = u.basis_vectors().collect();
        b.iter().all(|x| b.iter().all(|y| u.member(&self.bracket(x, y))))
    }

    pub fn is_ideal(&self, u: &Subspace<F>) -> bool {
        self.ideal_witness(u).is_none()
    }

    /// A product `[x, e_j]` or `[e_j, x]` leaving `u`, with `x` a basis vector of `u`,
    /// as `[left, right, product]`.
    pub fn ideal_witness(&self, u: &Subspace<F>) -> Option<[Vec<F::Elem>; 3]> {
        for x in u.basis_vectors() {
            for j in 0..self.dim() {
                let e = self.unit(j);
                let p = self.bracket(x, &e);
                if !u.member(&p) {
                    return Some([x.to_vec(), e, p]);
                }
                let p = self.bracket(&e, x);
                if !u.member(&p) {
                    return Some([e, x.to_vec(), p]);
                }
            }
        }
        None
    }

    /// `[U, V]`: the span of all products `[u, v]`.
    pub fn product_space(&self, u: &Subspace<F>, v: &Subspace<F>) -> Subspace<F> {
        let mut rows = Vec::with_capacity(u.dim() * v.dim());
        for x in u.basis_vectors() {
            for y in v.basis_vectors() {
                rows.push(self.bracket(x, y));
            }
        }
        self.span(&rows)
    }

    /// `[U, V] + [V, U]`.
    pub fn two_sided_product(&self, u: &Subspace<F>, v: &Subspace<F>) -> Subspace<F> {
        self.product_space(u, v).sum(&self.product_space(v, u))
    }

    /// `L^2 = [L, L]`.
    pub fn derived_algebra(&self) -> Subspace<F> {
        let rows: Vec<Vec<F::Elem>> = (0..self.dim())
            .flat_map(|i| (0..self.dim()).map(move |j| (i, j)))
            .map(|(i, j)| self.basis_product(i, j).to_vec())
            .collect();
        self.span(&rows)
    }

    /// `Leib(L)`, the span of all squares, by polarization:
    /// `[e_i, e_i]` and `[e_i, e_j] + [e_j, e_i]`.
    pub fn leib(&self) -> Subspace<F> {
        let f = self.field();
        let n = self.dim();
        let mut rows = Vec::new();
        for i in 0..n {
            rows.push(self.basis_product(i, i).to_vec());
            for j in i + 1..n {
                let s =
                    self.basis_product(i, j).iter().zip(self.basis_product(j, i)).map(|(a, b)| f.add(a, b)).collect();
                rows.push(s);
            }
        }
        self.span(&rows)
    }

    pub fn is_lie(&self) -> bool {
        self.leib().is_zero()
    }

    /// Kernel of `x -> ([x, e_j], [e_j, x])_j`.
    pub fn center(&self) -> Subspace<F> {
        let mut m = Matrix::zeros(self.field().clone(), self.dim(), 0);
        for j in 0..self.dim() {
            let e = self.unit(j);
            m = m.hconcat(&self.right_mult_matrix(&e)).hconcat(&self.left_mult_matrix(&e));
        }
        m.kernel()
    }

    /// `C_L^r(U) = {x : [U, x] = 0}`.
    pub fn right_centralizer(&self, u: &Subspace<F>) -> Subspace<F> {
        let mut m = Matrix::zeros(self.field().clone(), self.dim(), 0);
        for b in u.basis_vectors() {
            m = m.hconcat(&self.left_mult_matrix(b));
        }
        m.kernel()
    }

    /// The largest ideal of `L` contained in `s`.
    pub fn largest_ideal_in(&self, s: &Subspace<F>) -> Subspace<F> {
        let mut k = s.clone();
        loop {
            if k.is_zero() || self.is_ideal(&k) {
                return k;
            }
            // coefficient vectors c with c*B satisfying [cB, e_j], [e_j, cB] in K
            let basis: Vec<Vec<F::Elem>> = k.basis_vectors().map(|r| r.to_vec()).collect();
            let mut rows = Vec::with_capacity(basis.len());
            for b in &basis {
                let mut row = Vec::new();
                for j in 0..self.dim() {
                    let e = self.unit(j);
                    row.extend(k.reduce(&self.bracket(b, &e)));
                    row.extend(k.reduce(&self.bracket(&e, b)));
                }
                rows.push(row);
            }
            let cols = 2 * self.dim() * self.dim();
            let m = Matrix::from_rows(self.field().clone(), cols, rows).expect("rectangular");
            let coeffs = m.kernel();
            let bmat = Matrix::from_rows(self.field().clone(), self.dim(), basis).expect("rectangular");
            let next: Vec<Vec<F::Elem>> = coeffs.basis_vectors().map(|c| bmat.apply(c)).collect();
            k = self.span(&next);
        }
    }

    /// Quotient by an ideal, on the non-pivot coordinates of its echelon basis.
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<Quotient<F>, QuotientError<F>> {
        if let Some([left, right, product]) = self.ideal_witness(ideal) {
            let text = format!(
                "[{}, {}] = {} is not in {}",
                self.format_vector(&left),
                self.format_vector(&right),
                self.format_vector(&product),
                self.describe(ideal)
            );
            return Err(QuotientError { left, right, product, text });
        }
        let reps = ideal.non_pivots();
        let names = reps.iter().map(|&c| self.names()[c].clone()).collect();
        let mut t = StructureConstants::zero_named(self.field().clone(), names);
        let proto = Quotient {
            algebra: LeibnizAlgebra { table: t.clone() },
            ideal: ideal.clone(),
            representatives: reps.clone(),
        };
        for (a, &i) in reps.iter().enumerate() {
            for (b, &j) in reps.iter().enumerate() {
                t.set_product(a, b, &proto.project(self.basis_product(i, j)));
            }
        }
        Ok(Quotient { algebra: LeibnizAlgebra { table: t }, ideal: ideal.clone(), representatives: reps })
    }
}
