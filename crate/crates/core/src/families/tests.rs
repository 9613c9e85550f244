use proptest::prelude::*;

use super::*;
use crate::exactfield::{PrimeField, Rationals};
use crate::lattice::bracket_condition;
use crate::linalg::all_vectors;
use crate::Verdict;

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

#[test]
fn extraspecial_examples() {
    let h = heisenberg(gf(3));
    assert!(h.is_lie());
    assert!(is_extraspecial(&h));
    let degenerate = extraspecial_from_form(&FormMatrix::from_i64(gf(3), &[&[1, 0], &[0, 0]]));
    assert!(!is_extraspecial(&degenerate));
    assert_eq!(degenerate.center().dim(), 2);
    assert!(!is_extraspecial(&LeibnizAlgebra::abelian(gf(3), 3)));
    let t = leib_scaling(gf(3), 2);
    assert!(t.center().is_zero());
    assert!(!is_extraspecial(&t));
}

#[test]
fn norm_form_tables() {
    let a = norm_form(gf(5));
    let (x, y, z) = (a.unit(0), a.unit(1), a.unit(2));
    assert_eq!(a.square(&x), z);
    assert_eq!(a.square(&y), z);
    assert_eq!(a.bracket(&x, &y), z);
    assert_eq!(a.bracket(&y, &x), a.vector_i64(&[0, 0, -1]));
    let printed = norm_form_printed(gf(5));
    assert!(printed.validate().is_err());
    let v = printed.check_triple(1, 1, 2).expect("(y, y, z) violates the identity");
    assert_eq!(v.triple_names(), ("y", "y", "z"));
    assert_eq!(v.lhs_text(), "z");
    assert_eq!(v.rhs_text(), "0");
    assert!(printed_violation(&printed).is_some());
}

#[test]
fn j_set_examples() {
    let a = norm_form(gf(3));
    match j_set(&a, 10_000).unwrap() {
        JSetResult::Subspace { j, abelian_ideal } => {
            assert_eq!(j, a.span(&[a.unit(2)]));
            assert!(abelian_ideal);
        }
        other => panic!("{other:?}"),
    }

    let a = norm_form(gf(5));
    let r = j_set(&a, 10_000).unwrap();
    r.recheck(&a).unwrap();
    assert_eq!(
        r,
        JSetResult::NotASubspace {
            x: a.vector_i64(&[1, 2, 0]),
            y: a.vector_i64(&[1, 3, 0]),
            sum_square: a.vector_i64(&[0, 0, 4])
        }
    );

    let h = heisenberg(gf(3));
    match j_set(&h, 10_000).unwrap() {
        JSetResult::Subspace { j, abelian_ideal } => {
            assert!(j.is_full());
            assert!(!abelian_ideal);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn j_set_over_the_rationals() {
    let a = norm_form(Rationals);
    let r = j_set(&a, 0).unwrap();
    assert_eq!(r.abelian_ideal(), Verdict::True);
    assert_eq!(r, JSetResult::Subspace { j: a.span(&[a.unit(2)]), abelian_ideal: true });

    let h = heisenberg(Rationals);
    assert_eq!(j_set(&h, 0).unwrap(), JSetResult::Subspace { j: h.full_subspace(), abelian_ideal: false });

    let split = extraspecial_from_form(&FormMatrix::from_i64(Rationals, &[&[1, 0], &[0, -1]]));
    let r = j_set(&split, 0).unwrap();
    assert!(matches!(r, JSetResult::NotASubspace { .. }));
    r.recheck(&split).unwrap();

    // x^2 - 2 y^2 is anisotropic over Q but indefinite
    let irrational = extraspecial_from_form(&FormMatrix::from_i64(Rationals, &[&[1, 0], &[0, -2]]));
    assert_eq!(j_set(&irrational, 0).unwrap().abelian_ideal(), Verdict::Unknown);
}

#[test]
fn j_set_budget_is_enforced() {
    assert!(j_set(&LeibnizAlgebra::abelian(gf(7), 6), 1000).is_err());
}

#[test]
fn batten_tables() {
    for idx in [14, 15, 16, 19] {
        let (_, o) = batten(gf(3), idx, None).unwrap();
        assert_eq!(o, Orientation::AsGiven);
    }
    assert!(batten(gf(3), 17, Some(1)).is_ok());
    assert!(batten(gf(3), 18, Some(0)).is_ok());
    assert!(matches!(batten(gf(3), 17, Some(0)), Err(FamilyError::BadParameter { .. })));
    assert!(matches!(batten(gf(3), 17, Some(2)), Err(FamilyError::BadParameter { .. })));
    assert!(matches!(batten(gf(5), 18, Some(4)), Err(FamilyError::BadParameter { .. })));
    assert!(matches!(batten(gf(3), 17, None), Err(FamilyError::MissingParameter { .. })));
    assert!(matches!(batten(gf(3), 14, Some(1)), Err(FamilyError::UnexpectedParameter { .. })));
    assert!(matches!(batten(gf(3), 20, None), Err(FamilyError::Unknown(_))));

    let (a, _) = batten(gf(3), 16, None).unwrap();
    assert_eq!(a.basis_product(1, 1), &[0, 0, 2, 0]);
    let (a, _) = batten(gf(3), 14, None).unwrap();
    let w = bracket_condition(&a, 10_000).unwrap().expect("not modular");
    match w {
        crate::lattice::Witness::BracketCondition { x, y, product, hull_x, hull_y } => {
            assert_eq!((x, y, product), (a.unit(0), a.unit(1), a.unit(3)));
            assert_eq!(hull_x.sum(&hull_y), a.span(&[a.unit(0), a.unit(1), a.unit(2)]));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn a25_orientation() {
    let printed = a25_printed(gf(3));
    let v = printed.validate().unwrap_err();
    assert_eq!(v.triple_names(), ("x1", "x1", "x1"));
    assert_eq!(v.lhs_text(), "x4");
    assert_eq!(v.rhs_text(), "0");
    let a = a25(gf(3));
    assert_eq!(a.basis_product(2, 0), &[0, 0, 0, 1]);
    assert!(a.basis_product(0, 2).iter().all(|c| *c == 0));
    assert_eq!(a.table(), &printed.opposite());
}

#[test]
fn recognizers() {
    let f = gf(5);
    for r in 1..=3 {
        let t = leib_scaling(f, r);
        let expected = t.span(&(0..r).map(|i| t.unit(i)).collect::<Vec<_>>());
        assert_eq!(t.leib(), expected);
        assert!(is_leib_scaling(&t));
        assert!(!is_almost_abelian(&t));
    }
    for m in 1..=3 {
        let a = almost_abelian(f, m);
        assert!(a.is_lie());
        assert!(is_almost_abelian(&a));
        assert!(!is_leib_scaling(&a));
    }
    let h = heisenberg(f);
    assert!(!is_almost_abelian(&h) && !is_leib_scaling(&h));
    assert!(has_central_square(&h));
    assert!(!has_central_square(&nilpotent_cyclic(f, 3)));

    // a basis change keeps the recognizers' answers
    let t = leib_scaling(f, 2);
    let p = Matrix::from_i64(f, &[&[1, 2, 1], &[0, 1, 3], &[4, 0, 2]]);
    let moved = t.change_basis(&p, t.names().to_vec()).unwrap();
    assert!(is_leib_scaling(&moved));
    let a = almost_abelian(f, 2);
    let moved = a.change_basis(&p, a.names().to_vec()).unwrap();
    assert!(is_almost_abelian(&moved));
    // scalar 2 instead of 1 still counts after rescaling
    let mut s = StructureConstants::zero(f, 2);
    s.set_product_i64(0, 1, &[2, 0]);
    assert!(is_leib_scaling(&LeibnizAlgebra::new(s).unwrap()));
}

#[test]
fn e_plus_center_shape() {
    let e = norm_form(gf(3));
    let l = e_plus_center(&e, 2);
    assert_eq!(l.dim(), 5);
    assert_eq!(l.names()[3..], ["c1".to_string(), "c2".to_string()]);
    assert_eq!(l.center().dim(), 3);
    assert!(l.lower_central_series().get(2).is_some_and(|s| s.is_zero()));
    assert!(has_central_square(&l));
}

#[test]
fn registry_builds_every_family() {
    let reg = FamilyRegistry::default();
    let params =
        |pairs: &[(&str, &str)]| pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect::<FamilyParams>();
    let gf3 = crate::exactfield::FieldDescriptor::Gf { p: 3 };
    for family in reg.iter() {
        let p: FamilyParams = family
            .parameters()
            .iter()
            .map(|&k| {
                let v = match k {
                    "alphas" => "0,1",
                    "alpha" => "1",
                    "form" => "1,1;2,1",
                    _ => "2",
                };
                (k.to_string(), v.to_string())
            })
            .collect();
        let (id, alg) = reg.build(family.name(), gf3, &p).unwrap_or_else(|e| panic!("{}: {e}", family.name()));
        assert!(id.starts_with(family.name()));
        assert!(alg.dim() >= 1);
    }
    let (id, _) =
        reg.build("batten17", crate::exactfield::FieldDescriptor::Gf { p: 5 }, &params(&[("alpha", "2")])).unwrap();
    assert_eq!(id, "batten17[gf5,alpha=2]");
    let (id, alg) = reg.build("heisenberg", crate::exactfield::FieldDescriptor::Rational, &params(&[])).unwrap();
    assert_eq!(id, "heisenberg[rational]");
    assert!(matches!(alg, AnyAlgebra::Rational(_)));
    assert!(matches!(reg.build("nope", gf3, &params(&[])), Err(FamilyError::Unknown(_))));
    assert!(matches!(reg.build("abelian", gf3, &params(&[])), Err(FamilyError::MissingParameter { .. })));
    assert!(matches!(
        reg.build("heisenberg", gf3, &params(&[("n", "1")])),
        Err(FamilyError::UnexpectedParameter { .. })
    ));
    assert!(matches!(reg.build("abelian", gf3, &params(&[("n", "x")])), Err(FamilyError::BadParameter { .. })));
    assert_eq!(reg.names().len(), 16);
}

/// The identity checked straight from the bilinear expansion.
fn satisfies_identity(c: &dyn Fn(usize, usize, usize) -> i64, n: usize, p: i64) -> bool {
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                for out in 0..n {
                    let mut lhs = 0;
                    let mut rhs = 0;
                    for m in 0..n {
                        lhs += c(b, d, m) * c(a, m, out);
                        rhs += c(a, b, m) * c(m, d, out) - c(a, d, m) * c(m, b, out);
                    }
                    if (lhs - rhs).rem_euclid(p) != 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[test]
fn dim2_corpus_matches_direct_expansion() {
    let expected = (0u32..256)
        .filter(|&code| {
            let c = |i: usize, j: usize, k: usize| ((code >> (2 * (2 * i + j) + k)) & 1) as i64;
            satisfies_identity(&c, 2, 2)
        })
        .count();
    let corpus = dim2_gf2();
    assert_eq!(corpus.len(), expected);
    assert!(corpus.len() > 1 && corpus.len() < 256);
}

#[test]
fn extraspecial_corpus_counts_nondegenerate_forms() {
    for p in [3u64, 5] {
        let expected = (0..p.pow(4))
            .filter(|code| {
                let e: Vec<i64> = (0..4).map(|k| ((code / p.pow(k)) % p) as i64).collect();
                // radical is zero unless some nonzero v is orthogonal on both sides
                !(0..p * p).skip(1).any(|v| {
                    let (v0, v1) = ((v % p) as i64, (v / p) as i64);
                    let left = [v0 * e[0] + v1 * e[2], v0 * e[1] + v1 * e[3]];
                    let right = [e[0] * v0 + e[1] * v1, e[2] * v0 + e[3] * v1];
                    left.iter().chain(&right).all(|x| x.rem_euclid(p as i64) == 0)
                })
            })
            .count();
        let corpus = extraspecial_corpus(p);
        assert_eq!(corpus.len(), expected, "GF({p})");
        assert!(corpus.iter().all(|e| is_extraspecial(&e.algebra)));
    }
}

#[test]
fn random_corpus_is_seeded() {
    let a = random_dim3(0, 20);
    let b = random_dim3(0, 20);
    assert_eq!(a.len(), 20);
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.id, y.id);
        assert_eq!(x.algebra.table(), y.algebra.table());
        assert_eq!(x.algebra.dim(), 3);
        x.algebra.table().validate().unwrap();
    }
    let c = random_dim3(1, 20);
    assert!(a.iter().zip(&c).any(|(x, y)| x.algebra.table() != y.algebra.table()));
    assert!(a.iter().any(|e| !e.algebra.is_lie()));
    assert!(a.iter().any(|e| e.algebra.derived_algebra().dim() >= 2));
}

#[test]
fn family_corpus_is_small() {
    let corpus = family_corpus();
    assert!(corpus.iter().all(|e| e.algebra.dim() <= 4));
    let mut ids: Vec<&str> = corpus.iter().map(|e| e.id.as_str()).collect();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), corpus.len());
}

#[test]
fn cyclic_sweep_sizes() {
    assert_eq!(cyclic_presentations(5, 3).len(), 25);
    assert_eq!(cyclic_presentations(5, 4).len(), 125);
    assert_eq!(cyclic_presentations(3, 2).len(), 3);
}

fn form_strategy(p: u32) -> impl Strategy<Value = (usize, Vec<u32>)> {
    (1usize..=3).prop_flat_map(move |m| (Just(m), proptest::collection::vec(0..p, m * m)))
}

proptest! {
    #[test]
    fn central_extensions_are_valid((m, entries) in form_strategy(5)) {
        let f = gf(5);
        let rows = entries.chunks(m).map(|c| c.to_vec()).collect();
        let form = FormMatrix::new(Matrix::from_rows(f, m, rows).unwrap());
        let alg = extraspecial_from_form(&form);
        prop_assert!(alg.table().validate().is_ok());
        prop_assert_eq!(is_extraspecial(&alg), form.radical().is_zero());
        let j = j_set(&alg, 10_000).unwrap();
        prop_assert!(j.recheck(&alg).is_ok());
        // oracle: J is a subspace exactly when the zero set has prime-power size
        // matching the dimension of its span
        let zeros: Vec<Vec<u32>> = all_vectors(&f, alg.dim(), 10_000).unwrap().filter(|v| alg.square(v).iter().all(|c| *c == 0)).collect();
        let span = alg.span(&zeros);
        let closed = 5u128.pow(span.dim() as u32) == zeros.len() as u128;
        prop_assert_eq!(matches!(j, JSetResult::Subspace { .. }), closed);
    }
}
