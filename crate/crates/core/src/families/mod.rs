//! Named algebra families, extraspecial algebras built from bilinear forms,
//! the set `J = {x : x^2 = 0}`, and structural recognizers.

mod corpus;
mod jset;
mod registry;

use thiserror::Error;

use crate::algebra::{LeibnizAlgebra, Orientation, StructureConstants, Violation};
use crate::exactfield::{Field, FieldError};
use crate::linalg::Matrix;

pub use corpus::{
    cyclic_presentations, dim2_gf2, extraspecial_corpus, family_corpus, random_dim3, CorpusEntry, Fingerprint,
};
pub use jset::{j_set, JSetResult, J_SEARCH_BOUND};
pub use registry::{AnyAlgebra, Family, FamilyParams, FamilyRegistry};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    Unknown(String),
    #[error("{family} needs the parameter {param:?}")]
    MissingParameter { family: String, param: &'static str },
    #[error("{family} does not take the parameter {param:?}")]
    UnexpectedParameter { family: String, param: String },
    #[error("{family}: {reason}")]
    BadParameter { family: String, reason: String },
    #[error("the table satisfies the identity in neither orientation: {0}")]
    Identity(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A bilinear form `beta` on `F^m`; `beta(e_i, e_j)` is the `z`-coefficient
/// of `[e_i, e_j]` in the central extension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormMatrix<F: Field> {
    matrix: Matrix<F>,
}

impl<F: Field> FormMatrix<F> {
    /// Panics unless `matrix` is square.
    pub fn new(matrix: Matrix<F>) -> Self {
        assert_eq!(matrix.rows(), matrix.cols(), "square form");
        FormMatrix { matrix }
    }

    pub fn from_i64(field: F, rows: &[&[i64]]) -> Self {
        Self::new(Matrix::from_i64(field, rows))
    }

    /// Parses rows separated by `;` with entries separated by `,`.
    pub fn parse(field: F, text: &str) -> Result<Self, FamilyError> {
        let rows = text
            .split(';')
            .map(|r| r.split(',').map(|t| field.parse(t.trim())).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let m = rows.len();
        if rows.iter().any(|r| r.len() != m) {
            return Err(FamilyError::BadParameter { family: "form".into(), reason: format!("{text:?} is not square") });
        }
        Ok(Self::new(Matrix::from_rows(field, m, rows).expect("checked square")))
    }

    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn text(&self) -> String {
        let f = self.matrix.field();
        self.matrix
            .row_iter()
            .map(|r| r.iter().map(|x| f.format(x)).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Vectors orthogonal to everything on both sides.
    pub fn radical(&self) -> crate::linalg::Subspace<F> {
        self.matrix.kernel().intersect(&self.matrix.transpose().kernel())
    }
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// `[e_i, e_j] = beta(e_i, e_j) z` with `z` annihilating both sides.
pub fn extraspecial_from_form<F: Field>(form: &FormMatrix<F>) -> LeibnizAlgebra<F> {
    let m = form.size();
    let mut basis = if m == 2 { vec!["x".to_string(), "y".to_string()] } else { names("e", m) };
    basis.push("z".into());
    let f = form.matrix.field().clone();
    let mut t = StructureConstants::zero_named(f.clone(), basis);
    for i in 0..m {
        for j in 0..m {
            let mut v = vec![f.zero(); m + 1];
            v[m] = form.matrix.get(i, j).clone();
            t.set_product(i, j, &v);
        }
    }
    LeibnizAlgebra::new(t).expect("products land in a two-sided annihilator")
}

/// `dim Z(L) = 1` and `L^2` inside `Z(L)`.
pub fn is_extraspecial<F: Field>(alg: &LeibnizAlgebra<F>) -> bool {
    let z = alg.center();
    z.dim() == 1 && z.contains(&alg.derived_algebra())
}

pub fn heisenberg<F: Field>(field: F) -> LeibnizAlgebra<F> {
    extraspecial_from_form(&FormMatrix::from_i64(field, &[&[0, 1], &[-1, 0]]))
}

/// `x^2 = y^2 = z`, `[x, y] = z`, `[y, x] = -z`.
pub fn norm_form<F: Field>(field: F) -> LeibnizAlgebra<F> {
    extraspecial_from_form(&FormMatrix::from_i64(field, &[&[1, 1], &[-1, 1]]))
}

/// The table exactly as printed: `x^2 = y^2 = z`, `[x, y] = z`, `[y, z] = -z`.
/// It does not satisfy the right identity.
pub fn norm_form_printed<F: Field>(field: F) -> StructureConstants<F> {
    let mut t = StructureConstants::zero_named(field, vec!["x".into(), "y".into(), "z".into()]);
    t.set_product_i64(0, 0, &[0, 0, 1]);
    t.set_product_i64(1, 1, &[0, 0, 1]);
    t.set_product_i64(0, 1, &[0, 0, 1]);
    t.set_product_i64(1, 2, &[0, 0, -1]);
    t
}

/// Basis `a, a^2, ..., a^n` with `[a^i, a] = a^{i+1}` and `a^n` central.
pub fn nilpotent_cyclic<F: Field>(field: F, n: usize) -> LeibnizAlgebra<F> {
    let alphas = vec![field.zero(); n.max(2) - 1];
    crate::cyclic::CyclicPresentation::new(field, alphas).expect("n >= 2").algebra()
}

/// The Lie algebra `A + Fx` with `A` abelian of dimension `m` and
/// `[a, x] = a = -[x, a]`.
pub fn almost_abelian<F: Field>(field: F, m: usize) -> LeibnizAlgebra<F> {
    let mut basis = names("a", m);
    basis.push("x".into());
    let mut t = StructureConstants::zero_named(field, basis);
    for i in 0..m {
        t.add_term(i, m, i, 1);
        t.add_term(m, i, i, -1);
    }
    LeibnizAlgebra::new(t).expect("almost abelian algebras are Lie")
}

/// `Leib(L) = span{e_1..e_r}` plus `v` with `[e_i, v] = e_i`, all other
/// products zero.
pub fn leib_scaling<F: Field>(field: F, r: usize) -> LeibnizAlgebra<F> {
    let mut basis = names("e", r);
    basis.push("v".into());
    let mut t = StructureConstants::zero_named(field, basis);
    for i in 0..r {
        t.add_term(i, r, i, 1);
    }
    LeibnizAlgebra::new(t).expect("valid by construction")
}

/// The four-dimensional tables `A_14 .. A_19` on `x1..x4`. `alpha` is
/// required for `A_17` (not `0` or `-1`) and `A_18` (not `-1`), and rejected
/// otherwise. The opposite table is used if the printed one fails the right
/// identity.
pub fn batten<F: Field>(
    field: F,
    index: u32,
    alpha: Option<F::Elem>,
) -> Result<(LeibnizAlgebra<F>, Orientation), FamilyError> {
    let family = format!("batten{index}");
    let needs_alpha = matches!(index, 17 | 18);
    if !(14..=19).contains(&index) {
        return Err(FamilyError::Unknown(family));
    }
    let alpha = match (needs_alpha, alpha) {
        (true, None) => return Err(FamilyError::MissingParameter { family, param: "alpha" }),
        (false, Some(_)) => return Err(FamilyError::UnexpectedParameter { family, param: "alpha".into() }),
        (_, a) => a,
    };
    let minus_one = field.from_i64(-1);
    if let Some(a) = &alpha {
        let bad = *a == minus_one || (index == 17 && field.is_zero(a));
        if bad {
            let allowed = if index == 17 { "alpha must avoid 0 and -1" } else { "alpha must not be -1" };
            return Err(FamilyError::BadParameter { family, reason: allowed.into() });
        }
    }
    let mut t = StructureConstants::zero_named(field.clone(), names("x", 4));
    let mut put = |i: usize, j: usize, k: usize, c: F::Elem| {
        let mut v = t.product(i, j).to_vec();
        v[k] = field.add(&v[k], &c);
        t.set_product(i, j, &v);
    };
    let one = field.one();
    match index {
        14 => {
            put(0, 0, 2, one.clone());
            put(0, 1, 3, one);
        }
        15 => {
            put(0, 0, 2, one.clone());
            put(1, 0, 3, one);
        }
        16 => {
            put(0, 1, 3, one.clone());
            put(1, 0, 2, one);
            put(1, 1, 2, minus_one);
        }
        17 => {
            put(0, 0, 2, one.clone());
            put(0, 1, 3, one);
            put(1, 0, 3, alpha.unwrap());
        }
        18 => {
            put(0, 0, 2, one.clone());
            put(1, 0, 3, one);
            put(0, 1, 2, alpha.unwrap());
            put(1, 1, 3, minus_one);
        }
        _ => {
            put(0, 0, 2, one.clone());
            put(0, 1, 2, one.clone());
            put(1, 0, 2, one.clone());
            put(1, 0, 3, one.clone());
            put(1, 1, 3, one);
        }
    }
    LeibnizAlgebra::from_either_orientation(t).map_err(|v| FamilyError::Identity(v.to_string()))
}

/// `[x1, x1] = x3`, `[x2, x2] = x4`, `[x1, x3] = x4` as printed; this is a
/// left Leibniz table.
pub fn a25_printed<F: Field>(field: F) -> StructureConstants<F> {
    let mut t = StructureConstants::zero_named(field, names("x", 4));
    t.set_product_i64(0, 0, &[0, 0, 1, 0]);
    t.set_product_i64(1, 1, &[0, 0, 0, 1]);
    t.set_product_i64(0, 2, &[0, 0, 0, 1]);
    t
}

/// The right Leibniz version of [`a25_printed`]: `[x3, x1] = x4`.
pub fn a25<F: Field>(field: F) -> LeibnizAlgebra<F> {
    let (alg, orientation) = LeibnizAlgebra::from_either_orientation(a25_printed(field)).expect("opposite is valid");
    debug_assert_eq!(orientation, Orientation::Opposite);
    alg
}

/// The violation of the printed table, if it fails the right identity.
pub fn printed_violation<F: Field>(t: &StructureConstants<F>) -> Option<Violation<F>> {
    t.validate().err()
}

/// `E + Z` with `Z` central of dimension `c`.
pub fn e_plus_center<F: Field>(e: &LeibnizAlgebra<F>, c: usize) -> LeibnizAlgebra<F> {
    let z = StructureConstants::zero_named(e.field().clone(), names("c", c));
    e.direct_sum(&LeibnizAlgebra::new(z).expect("zero table"))
}

/// A Lie algebra `A + Fx` with `A = L^2` abelian of codimension one on which
/// `x` acts as a nonzero scalar; rescaling `x` makes the scalar one.
pub fn is_almost_abelian<F: Field>(alg: &LeibnizAlgebra<F>) -> bool {
    let a = alg.derived_algebra();
    if !alg.is_lie() || a.is_zero() || a.dim() + 1 != alg.dim() || !alg.product_space(&a, &a).is_zero() {
        return false;
    }
    acts_as_nonzero_scalar(alg, &a)
}

/// `L = Leib(L) + Fv` with `v^2 = 0` and `[e, v] = e` on `Leib(L)`. Since
/// `L` annihilates `Leib(L)` from the left, any `u` outside `Leib(L)` acting
/// as a nonzero scalar can be rescaled and shifted to such a `v`.
pub fn is_leib_scaling<F: Field>(alg: &LeibnizAlgebra<F>) -> bool {
    let leib = alg.leib();
    if leib.is_zero() || leib.dim() + 1 != alg.dim() {
        return false;
    }
    acts_as_nonzero_scalar(alg, &leib)
}

fn acts_as_nonzero_scalar<F: Field>(alg: &LeibnizAlgebra<F>, a: &crate::linalg::Subspace<F>) -> bool {
    let f = alg.field();
    let Some(u) = (0..alg.dim()).map(|i| alg.unit(i)).find(|e| !a.member(e)) else {
        return false;
    };
    let mut scalar: Option<F::Elem> = None;
    for b in a.basis_vectors() {
        let image = alg.bracket(b, &u);
        let pivot = b.iter().position(|c| !f.is_zero(c)).expect("basis vectors are nonzero");
        let lambda = f.div(&image[pivot], &b[pivot]).expect("nonzero pivot");
        let expected: Vec<F::Elem> = b.iter().map(|c| f.mul(c, &lambda)).collect();
        if image != expected || scalar.as_ref().is_some_and(|s| *s != lambda) {
            return false;
        }
        scalar = Some(lambda);
    }
    scalar.is_some_and(|s| !f.is_zero(&s))
}

/// `dim L^2 <= 1` and `L^2` central: the shape `E + C` with `E`
/// extraspecial or abelian and `C` central.
pub fn has_central_square<F: Field>(alg: &LeibnizAlgebra<F>) -> bool {
    let sq = alg.derived_algebra();
    sq.dim() <= 1 && alg.center().contains(&sq)
}

#[cfg(test)]
mod tests;
