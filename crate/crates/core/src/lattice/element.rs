//! The elementwise condition `[x, y] in <x> + <y>`.

use itertools::Itertools;
use rayon::prelude::*;

use crate::algebra::LeibnizAlgebra;
use crate::exactfield::Field;
use crate::linalg::{projective_points, LinalgError, DEFAULT_ENUMERATION_BUDGET};

use super::checks::{CheckOutcome, LatticeCheck};
use super::{LatticeConfig, SubalgebraLattice, Witness};

/// A witness if `[x, y]` or `[y, x]` escapes `<x> + <y>`.
pub fn bracket_condition_at<F: Field>(alg: &LeibnizAlgebra<F>, x: &[F::Elem], y: &[F::Elem]) -> Option<Witness<F>> {
    let hx = alg.closure(&[x.to_vec()]);
    let hy = alg.closure(&[y.to_vec()]);
    let s = hx.sum(&hy);
    for (l, r, hl, hr) in [(x, y, &hx, &hy), (y, x, &hy, &hx)] {
        let p = alg.bracket(l, r);
        if !s.member(&p) {
            return Some(Witness::BracketCondition {
                x: l.to_vec(),
                y: r.to_vec(),
                product: p,
                hull_x: hl.clone(),
                hull_y: hr.clone(),
            });
        }
    }
    None
}

/// Exhaustive check over all pairs of one-dimensional subspaces, trying basis
/// pairs first so that witnesses are as simple as possible.
pub fn bracket_condition<F: Field>(alg: &LeibnizAlgebra<F>, budget: u64) -> Result<Option<Witness<F>>, LinalgError> {
    let n = alg.dim();
    for (i, j) in (0..n).tuple_combinations() {
        if let Some(w) = bracket_condition_at(alg, &alg.unit(i), &alg.unit(j)) {
            return Ok(Some(w));
        }
    }
    let points = projective_points(alg.field(), n, budget)?;
    let hulls: Vec<_> = points.par_iter().map(|p| alg.closure(std::slice::from_ref(p))).collect();
    Ok((0..points.len()).into_par_iter().find_map_first(|a| {
        (a + 1..points.len()).find_map(|b| {
            let s = hulls[a].sum(&hulls[b]);
            let escapes = |l: &[F::Elem], r: &[F::Elem]| !s.member(&alg.bracket(l, r));
            if escapes(&points[a], &points[b]) || escapes(&points[b], &points[a]) {
                bracket_condition_at(alg, &points[a], &points[b])
            } else {
                None
            }
        })
    }))
}

/// Searches integer combinations with coefficients in `-bound..=bound` for a
/// failure of the condition; works over any field.
pub fn search_bracket_counterexample<F: Field>(alg: &LeibnizAlgebra<F>, bound: i64) -> Option<Witness<F>> {
    let n = alg.dim();
    for (i, j) in (0..n).tuple_combinations() {
        if let Some(w) = bracket_condition_at(alg, &alg.unit(i), &alg.unit(j)) {
            return Some(w);
        }
    }
    let coeffs: Vec<Vec<i64>> =
        (0..n).map(|_| (-bound..=bound).collect::<Vec<_>>()).multi_cartesian_product().collect();
    let vectors: Vec<Vec<F::Elem>> = coeffs
        .iter()
        .filter(|c| c.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0))
        .map(|c| alg.vector_i64(c))
        .collect();
    (0..vectors.len())
        .into_par_iter()
        .find_map_first(|a| (a + 1..vectors.len()).find_map(|b| bracket_condition_at(alg, &vectors[a], &vectors[b])))
}

pub struct BracketConditionCheck;

impl<F: Field> LatticeCheck<F> for BracketConditionCheck {
    fn name(&self) -> &'static str {
        "bracket-condition"
    }
    fn description(&self) -> &'static str {
        "[x,y] lies in <x> + <y> for all elements x, y"
    }
    fn run(&self, lat: &SubalgebraLattice<F>, config: &LatticeConfig) -> CheckOutcome<F> {
        match bracket_condition(lat.algebra(), config.max_subspaces.max(DEFAULT_ENUMERATION_BUDGET)) {
            Ok(w) => CheckOutcome {
                name: "bracket-condition",
                verdict: crate::Verdict::from_bool(w.is_none()),
                witness: w,
                note: None,
            },
            Err(e) => CheckOutcome {
                name: "bracket-condition",
                verdict: crate::Verdict::Unknown,
                witness: None,
                note: Some(e.to_string()),
            },
        }
    }
}
