use itertools::Itertools;

use crate::algebra::LeibnizAlgebra;
use crate::exactfield::Field;
use crate::linalg::{all_vectors, LinalgError, Matrix, Subspace};
use crate::Verdict;

/// Coefficient bound for the integer search used over the rationals.
pub const J_SEARCH_BOUND: i64 = 2;

/// The set `J = {x : x^2 = 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JSetResult<F: Field> {
    Subspace {
        j: Subspace<F>,
        abelian_ideal: bool,
    },
    /// `x^2 = y^2 = 0` but `(x + y)^2 = sum_square != 0`.
    NotASubspace {
        x: Vec<F::Elem>,
        y: Vec<F::Elem>,
        sum_square: Vec<F::Elem>,
    },
    Unknown {
        note: String,
    },
}

impl<F: Field> JSetResult<F> {
    /// Whether `J` is an abelian ideal.
    pub fn abelian_ideal(&self) -> Verdict {
        match self {
            JSetResult::Subspace { abelian_ideal, .. } => Verdict::from_bool(*abelian_ideal),
            JSetResult::NotASubspace { .. } => Verdict::False,
            JSetResult::Unknown { .. } => Verdict::Unknown,
        }
    }

    /// Re-checks the stored data against `alg`. For a reported subspace
    /// this checks its basis and the ideal claim, not that `J` is exhausted.
    pub fn recheck(&self, alg: &LeibnizAlgebra<F>) -> Result<(), String> {
        match self {
            JSetResult::Subspace { j, abelian_ideal } => {
                if j.basis_vectors().any(|b| !is_zero(alg, &alg.square(b))) {
                    return Err("a basis vector of J has nonzero square".into());
                }
                if *abelian_ideal != is_abelian_ideal(alg, j) {
                    return Err("abelian ideal flag is wrong".into());
                }
                Ok(())
            }
            JSetResult::NotASubspace { x, y, sum_square } => {
                if !is_zero(alg, &alg.square(x)) || !is_zero(alg, &alg.square(y)) {
                    return Err("a witness has nonzero square".into());
                }
                let s: Vec<F::Elem> = x.iter().zip(y).map(|(a, b)| alg.field().add(a, b)).collect();
                let sq = alg.square(&s);
                if &sq != sum_square || is_zero(alg, &sq) {
                    return Err("the sum of the witnesses does not have the stored nonzero square".into());
                }
                Ok(())
            }
            JSetResult::Unknown { .. } => Ok(()),
        }
    }
}

fn is_zero<F: Field>(alg: &LeibnizAlgebra<F>, v: &[F::Elem]) -> bool {
    v.iter().all(|c| alg.field().is_zero(c))
}

fn is_abelian_ideal<F: Field>(alg: &LeibnizAlgebra<F>, j: &Subspace<F>) -> bool {
    alg.is_ideal(j) && alg.product_space(j, j).is_zero()
}

fn first_non_closed_pair<F: Field>(alg: &LeibnizAlgebra<F>, zeros: &[Vec<F::Elem>]) -> Option<JSetResult<F>> {
    zeros.iter().tuple_combinations().find_map(|(x, y)| {
        let s: Vec<F::Elem> = x.iter().zip(y).map(|(a, b)| alg.field().add(a, b)).collect();
        let sq = alg.square(&s);
        (!is_zero(alg, &sq)).then(|| JSetResult::NotASubspace { x: x.clone(), y: y.clone(), sum_square: sq })
    })
}

/// Computes `J`. Over finite fields every vector is squared. Over the
/// rationals `J` is decided only when some coordinate of `x -> x^2` is a
/// definite form modulo the common radical of all coordinates (then `J` is
/// that radical), or when a small integer search finds two elements of `J`
/// whose sum is not in `J`; otherwise the result is unknown.
pub fn j_set<F: Field>(alg: &LeibnizAlgebra<F>, budget: u64) -> Result<JSetResult<F>, LinalgError> {
    if alg.field().order().is_some() {
        return finite_j_set(alg, budget);
    }
    Ok(rational_j_set(alg))
}

fn finite_j_set<F: Field>(alg: &LeibnizAlgebra<F>, budget: u64) -> Result<JSetResult<F>, LinalgError> {
    let f = alg.field();
    let zeros: Vec<Vec<F::Elem>> =
        all_vectors(f, alg.dim(), budget)?.filter(|v| is_zero(alg, &alg.square(v))).collect();
    let j = alg.span(&zeros);
    let q = f.order().expect("finite");
    if (q as u128).pow(j.dim() as u32) == zeros.len() as u128 {
        return Ok(JSetResult::Subspace { abelian_ideal: is_abelian_ideal(alg, &j), j });
    }
    // J is closed under scalars, so a failure of additivity shows up among
    // normalized representatives.
    let one = f.one();
    let normalized: Vec<Vec<F::Elem>> =
        zeros.into_iter().filter(|v| v.iter().find(|c| !f.is_zero(c)) == Some(&one)).collect();
    Ok(first_non_closed_pair(alg, &normalized).expect("a set closed under scalars but not a subspace"))
}

/// Symmetric matrix of the `k`-th coordinate of `x -> x^2`, doubled to stay
/// integral: `S[i][j] = c_ij^k + c_ji^k`.
fn square_form<F: Field>(alg: &LeibnizAlgebra<F>, k: usize) -> Matrix<F> {
    let f = alg.field();
    let n = alg.dim();
    let mut m = Matrix::zeros(f.clone(), n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, f.add(&alg.basis_product(i, j)[k], &alg.basis_product(j, i)[k]));
        }
    }
    m
}

/// Sylvester's criterion on leading principal minors. Uses the ordering of
/// the rationals.
fn is_definite<F: Field>(m: &Matrix<F>) -> bool {
    let f = m.field();
    let n = m.rows();
    let zero = f.zero();
    let minors: Vec<F::Elem> = (1..=n)
        .map(|k| {
            let rows = (0..k).map(|i| m.row(i)[..k].to_vec()).collect();
            Matrix::from_rows(f.clone(), k, rows).expect("square").determinant()
        })
        .collect();
    let positive = minors.iter().all(|d| *d > zero);
    let negative = minors.iter().enumerate().all(|(i, d)| if i % 2 == 0 { *d < zero } else { *d > zero });
    n > 0 && (positive || negative)
}

fn rational_j_set<F: Field>(alg: &LeibnizAlgebra<F>) -> JSetResult<F> {
    let n = alg.dim();
    let forms: Vec<Matrix<F>> = (0..n).map(|k| square_form(alg, k)).collect();
    let radical = forms.iter().fold(alg.full_subspace(), |acc, s| acc.intersect(&s.kernel()));
    let complement = radical.non_pivots();
    let restrict = |s: &Matrix<F>| {
        let rows = complement.iter().map(|&i| complement.iter().map(|&j| s.get(i, j).clone()).collect()).collect();
        Matrix::from_rows(alg.field().clone(), complement.len(), rows).expect("square")
    };
    if complement.is_empty() || forms.iter().any(|s| is_definite(&restrict(s))) {
        return JSetResult::Subspace { abelian_ideal: is_abelian_ideal(alg, &radical), j: radical };
    }
    let b = J_SEARCH_BOUND;
    let zeros: Vec<Vec<F::Elem>> = (0..n)
        .map(|_| -b..=b)
        .multi_cartesian_product()
        .filter(|c| c.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0))
        .map(|c| alg.vector_i64(&c))
        .filter(|v| is_zero(alg, &alg.square(v)))
        .collect();
    first_non_closed_pair(alg, &zeros).unwrap_or_else(|| JSetResult::Unknown {
        note: format!(
            "no coordinate of x -> x^2 is definite off its radical and no integer search with |coefficients| <= {b} refutes closure"
        ),
    })
}
