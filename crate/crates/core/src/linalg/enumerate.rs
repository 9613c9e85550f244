//! Exhaustive enumeration of vectors and subspaces over finite fields.
//!
//! Subspaces are produced directly in reduced echelon form by walking pivot
//! patterns (k-subsets of columns) and filling the free entries, so every
//! subspace appears exactly once and no canonicalization is needed.

use itertools::Itertools;

use crate::exactfield::Field;

use super::{LinalgError, Matrix, Subspace};

/// Default cap on the number of subspaces (and vectors) enumerated.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 100_000;

/// Gaussian binomial `[n choose k]_q`, `None` on overflow.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.checked_mul(q.checked_pow(n - i)?.checked_sub(1)?)?;
        den = den.checked_mul(q.checked_pow(i + 1)?.checked_sub(1)?)?;
    }
    Some(num / den)
}

/// Number of subspaces of `F_q^n`, `None` on overflow.
pub fn subspace_count(n: u32, q: u64) -> Option<u128> {
    (0..=n).try_fold(0u128, |acc, k| acc.checked_add(gaussian_binomial(n, k, q)?))
}

fn field_size<F: Field>(field: &F) -> Result<u64, LinalgError> {
    field.order().ok_or(LinalgError::InfiniteField)
}

/// Every vector of `F^n`, in lexicographic order of coordinates.
pub fn all_vectors<F: Field>(
    field: &F,
    n: usize,
    budget: u64,
) -> Result<impl Iterator<Item = Vec<F::Elem>>, LinalgError> {
    let q = field_size(field)?;
    let count = (q as u128).checked_pow(n as u32);
    match count {
        Some(c) if c <= budget as u128 => {}
        _ => return Err(LinalgError::BudgetExceeded { what: "vectors", count, budget }),
    }
    let elems = field.elements().ok_or(LinalgError::InfiniteField)?;
    let total = count.unwrap() as u64;
    // little-endian digits in base q, most significant coordinate first
    Ok((0..total).map(move |mut idx| {
        let mut v = vec![elems[0].clone(); n];
        for slot in v.iter_mut().rev() {
            *slot = elems[(idx % q) as usize].clone();
            idx /= q;
        }
        v
    }))
}

/// One representative per one-dimensional subspace: nonzero vectors whose
/// first nonzero coordinate is 1.
pub fn projective_points<F: Field>(field: &F, n: usize, budget: u64) -> Result<Vec<Vec<F::Elem>>, LinalgError> {
    let one = field.one();
    let z = field.zero();
    Ok(all_vectors(field, n, budget)?.filter(|v| v.iter().find(|x| **x != z) == Some(&one)).collect())
}

/// All pivot patterns of `F^n`: every subset of columns, grouped by size.
pub fn pivot_patterns(n: usize) -> Vec<Vec<usize>> {
    (0..=n).flat_map(|k| (0..n).combinations(k)).collect()
}

/// Subspaces whose echelon basis has exactly the given pivot columns.
pub fn subspaces_with_pivots<F: Field>(
    field: &F,
    n: usize,
    pivots: &[usize],
) -> Result<impl Iterator<Item = Subspace<F>>, LinalgError> {
    let elems = field.elements().ok_or(LinalgError::InfiniteField)?;
    let free: Vec<(usize, usize)> = pivots
        .iter()
        .enumerate()
        .flat_map(|(r, &p)| ((p + 1)..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
        .collect();
    let k = pivots.len();
    let field = field.clone();
    let pivots = pivots.to_vec();
    let q = elems.len() as u64;
    let combos = q.pow(free.len() as u32);
    let nfree = free.len();
    let assignments = (0..combos).map(move |mut idx| {
        (0..nfree)
            .map(|_| {
                let e = elems[(idx % q) as usize].clone();
                idx /= q;
                e
            })
            .collect::<Vec<_>>()
    });
    Ok(assignments.map(move |values| {
        let mut m = Matrix::zeros(field.clone(), k, n);
        for (r, &p) in pivots.iter().enumerate() {
            m.set(r, p, field.one());
        }
        for (&(r, c), v) in free.iter().zip(values) {
            m.set(r, c, v);
        }
        Subspace::from_echelon_unchecked(m, pivots.clone())
    }))
}

/// Every subspace of `F^n` exactly once, ordered by dimension then pivot
/// pattern. Fails if the total count exceeds `budget`.
pub fn enumerate_subspaces<F: Field>(
    field: &F,
    n: usize,
    budget: u64,
) -> Result<impl Iterator<Item = Subspace<F>>, LinalgError> {
    let q = field_size(field)?;
    let count = subspace_count(n as u32, q);
    match count {
        Some(c) if c <= budget as u128 => {}
        _ => return Err(LinalgError::BudgetExceeded { what: "subspaces", count, budget }),
    }
    let field = field.clone();
    Ok(pivot_patterns(n)
        .into_iter()
        .flat_map(move |p| subspaces_with_pivots(&field, n, &p).expect("finite field checked above")))
}
