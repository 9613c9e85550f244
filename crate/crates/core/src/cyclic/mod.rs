//! Cyclic Leibniz algebras: basis `a, a^2, ..., a^n` with
//! `[a^i, a] = a^{i+1}` for `i < n`, `[a^n, a] = alpha_2 a^2 + ... + alpha_n a^n`,
//! and `[x, a^j] = 0` for `j >= 2`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{LeibnizAlgebra, StructureConstants};
use crate::exactfield::{Factorization, Factorize, Field, FieldError, Polynomial};
use crate::linalg::{all_vectors, Matrix, Subspace, DEFAULT_ENUMERATION_BUDGET};
use crate::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclicError {
    #[error("a cyclic presentation needs dimension at least 2")]
    TooSmall,
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicPresentation<F: Field> {
    field: F,
    /// `alpha_2, ..., alpha_n`.
    alphas: Vec<F::Elem>,
}

/// A distinct irreducible factor `p_j` of `p` and the kernel of `(p / p_j)(R_a)`.
pub type KernelMaximal<F> = (Polynomial<F>, Subspace<F>);

/// Modularity type of a cyclic algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CyclicModularity {
    /// `p(x) = x^n`: nilpotent.
    Nilpotent,
    /// `p(x) = x^{n-1}(x - lambda)` with `lambda != 0`; rescaling `a` gives
    /// `[a^n, a] = a^n` with all other products zero.
    Solvable,
    NotModular,
}

impl CyclicModularity {
    pub fn is_modular(self) -> bool {
        self != CyclicModularity::NotModular
    }

    pub fn name(self) -> &'static str {
        match self {
            CyclicModularity::Nilpotent => "nilpotent",
            CyclicModularity::Solvable => "solvable",
            CyclicModularity::NotModular => "not-modular",
        }
    }
}

#[derive(Clone, Debug)]
pub struct PrimaryComponent<F: Field> {
    pub factor: Polynomial<F>,
    pub multiplicity: usize,
    pub space: Subspace<F>,
}

/// `L = W_1 + ... + W_s` with `W_j = ker p_j(R_a)^{n_j}`; the component for
/// the factor `x` comes first.
#[derive(Clone, Debug)]
pub struct PrimaryDecomposition<F: Field> {
    pub components: Vec<PrimaryComponent<F>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorSearch<F: Field> {
    Found(Vec<F::Elem>),
    NoGenerator,
    Unknown,
}

impl<F: Field> CyclicPresentation<F> {
    pub fn new(field: F, alphas: Vec<F::Elem>) -> Result<Self, CyclicError> {
        if alphas.is_empty() {
            return Err(CyclicError::TooSmall);
        }
        Ok(CyclicPresentation { field, alphas })
    }

    pub fn from_i64(field: F, alphas: &[i64]) -> Result<Self, CyclicError> {
        let a = alphas.iter().map(|&x| field.from_i64(x)).collect();
        Self::new(field, a)
    }

    /// Parses comma-separated coefficients `alpha_2, ..., alpha_n`.
    pub fn parse(field: F, text: &str) -> Result<Self, CyclicError> {
        let alphas = text.split(',').map(|t| field.parse(t.trim())).collect::<Result<Vec<_>, _>>()?;
        Self::new(field, alphas)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.alphas.len() + 1
    }

    pub fn alphas(&self) -> &[F::Elem] {
        &self.alphas
    }

    pub fn alphas_text(&self) -> String {
        self.alphas.iter().map(|a| self.field.format(a)).collect::<Vec<_>>().join(",")
    }

    pub fn basis_names(&self) -> Vec<String> {
        (1..=self.dim()).map(|i| if i == 1 { "a".to_string() } else { format!("a^{i}") }).collect()
    }

    pub fn algebra(&self) -> LeibnizAlgebra<F> {
        let n = self.dim();
        let mut t = StructureConstants::zero_named(self.field.clone(), self.basis_names());
        let mut v = vec![self.field.zero(); n];
        for i in 0..n - 1 {
            v.iter_mut().for_each(|x| *x = self.field.zero());
            v[i + 1] = self.field.one();
            t.set_product(i, 0, &v);
        }
        let mut last = vec![self.field.zero()];
        last.extend(self.alphas.iter().cloned());
        t.set_product(n - 1, 0, &last);
        LeibnizAlgebra::new(t).expect("cyclic presentations satisfy the identity")
    }

    /// `p(x) = x^n - alpha_n x^{n-1} - ... - alpha_2 x`.
    pub fn char_poly(&self) -> Polynomial<F> {
        let f = &self.field;
        let mut coeffs = vec![f.zero()];
        coeffs.extend(self.alphas.iter().map(|a| f.neg(a)));
        coeffs.push(f.one());
        Polynomial::from_coeffs(f.clone(), coeffs)
    }

    /// Matrix of `R_a` (the companion matrix of `p`).
    pub fn right_mult_a(&self) -> Matrix<F> {
        let alg = self.algebra();
        alg.right_mult_matrix(&alg.unit(0))
    }

    pub fn classify_modular(&self) -> CyclicModularity {
        let f = &self.field;
        let (head, last) = self.alphas.split_at(self.alphas.len() - 1);
        if head.iter().any(|a| !f.is_zero(a)) {
            CyclicModularity::NotModular
        } else if f.is_zero(&last[0]) {
            CyclicModularity::Nilpotent
        } else {
            CyclicModularity::Solvable
        }
    }
}

impl<F: Factorize> CyclicPresentation<F> {
    pub fn factor(&self) -> Result<Factorization<F>, FieldError> {
        self.field.factor(&self.char_poly())
    }

    /// Maximal subalgebras: `ker r_j(R_a)` with `r_j = p / p_j`, one per
    /// distinct irreducible factor `p_j`.
    pub fn maximal_subalgebras(&self) -> Result<Vec<KernelMaximal<F>>, FieldError> {
        let p = self.char_poly();
        let t = self.right_mult_a();
        Ok(self
            .factor()?
            .factors
            .into_iter()
            .map(|fp| {
                let (r, _) = p.div_rem(&fp.factor);
                (fp.factor, t.eval_poly(&r).kernel())
            })
            .collect())
    }

    pub fn primary_decomposition(&self) -> Result<PrimaryDecomposition<F>, FieldError> {
        let t = self.right_mult_a();
        let x = Polynomial::monomial(self.field.clone(), 1);
        let mut factors = self.factor()?.factors;
        factors.sort_by_key(|fp| fp.factor != x);
        let components = factors
            .into_iter()
            .map(|fp| {
                let space = t.eval_poly(&fp.factor.pow(fp.multiplicity)).kernel();
                PrimaryComponent { factor: fp.factor, multiplicity: fp.multiplicity, space }
            })
            .collect();
        Ok(PrimaryDecomposition { components })
    }

    /// The number of maximal subalgebras equals the number of distinct
    /// factors when the field has more elements than that; `None` over `Q`.
    pub fn field_exceeds_factor_count(&self) -> Result<Option<bool>, FieldError> {
        let s = self.factor()?.distinct() as u64;
        Ok(self.field.order().map(|q| q > s))
    }
}

impl<F: Field> PrimaryDecomposition<F> {
    /// Checks that the components span `L` directly and that
    /// `[W_j, W_k] = 0` and `[W_1, W_j] = 0` for `j, k >= 2`, and
    /// `[W_j, W_1]` lies in `W_j`.
    pub fn verify(&self, alg: &LeibnizAlgebra<F>) -> Result<(), String> {
        let total: usize = self.components.iter().map(|c| c.space.dim()).sum();
        let sum = self.components.iter().fold(alg.zero_subspace(), |acc, c| acc.sum(&c.space));
        if total != alg.dim() || !sum.is_full() {
            return Err(format!("components have dimensions summing to {total} and span {}", sum.dim()));
        }
        let w = |i: usize| &self.components[i].space;
        for j in 1..self.components.len() {
            for k in 1..self.components.len() {
                if !alg.product_space(w(j), w(k)).is_zero() {
                    return Err(format!("[W_{}, W_{}] is nonzero", j + 1, k + 1));
                }
            }
            if !alg.product_space(w(0), w(j)).is_zero() {
                return Err(format!("[W_1, W_{}] is nonzero", j + 1));
            }
            if !w(j).contains(&alg.product_space(w(j), w(0))) {
                return Err(format!("[W_{}, W_1] is not inside W_{}", j + 1, j + 1));
            }
        }
        Ok(())
    }
}

/// Finds `x` with `<x> = L`: exhaustive over finite fields, otherwise a
/// bounded search over small integer combinations.
pub fn find_generator<F: Field>(alg: &LeibnizAlgebra<F>) -> GeneratorSearch<F> {
    if alg.dim() == 0 {
        return GeneratorSearch::Found(Vec::new());
    }
    let generates = |v: &Vec<F::Elem>| alg.closure(std::slice::from_ref(v)).is_full();
    if alg.field().order().is_some() {
        return match all_vectors(alg.field(), alg.dim(), DEFAULT_ENUMERATION_BUDGET) {
            Ok(mut it) => it.find(generates).map_or(GeneratorSearch::NoGenerator, GeneratorSearch::Found),
            Err(_) => GeneratorSearch::Unknown,
        };
    }
    let n = alg.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let random: Vec<Vec<F::Elem>> = (0..200)
        .map(|_| {
            let coords: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            alg.vector_i64(&coords)
        })
        .collect();
    for v in (0..n).map(|i| alg.unit(i)).chain(random) {
        if generates(&v) {
            return GeneratorSearch::Found(v);
        }
    }
    GeneratorSearch::Unknown
}

impl<F: Field> GeneratorSearch<F> {
    pub fn verdict(&self) -> Verdict {
        match self {
            GeneratorSearch::Found(_) => Verdict::True,
            GeneratorSearch::NoGenerator => Verdict::False,
            GeneratorSearch::Unknown => Verdict::Unknown,
        }
    }
}

#[cfg(test)]
mod tests;
