use super::*;
use crate::exactfield::{PrimeField, Rationals};

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn pres(p: u64, alphas: &[i64]) -> CyclicPresentation<PrimeField> {
    CyclicPresentation::from_i64(gf(p), alphas).unwrap()
}

#[test]
fn classification_examples() {
    assert_eq!(pres(5, &[0, 0]).classify_modular(), CyclicModularity::Nilpotent);
    assert_eq!(pres(5, &[0, 1]).classify_modular(), CyclicModularity::Solvable);
    assert_eq!(pres(5, &[0, 3]).classify_modular(), CyclicModularity::Solvable);
    assert_eq!(pres(5, &[1, 0]).classify_modular(), CyclicModularity::NotModular);
    assert!(CyclicPresentation::from_i64(gf(5), &[]).is_err());
}

#[test]
fn char_poly_examples() {
    assert_eq!(pres(5, &[0, 0]).char_poly().to_string(), "x^3");
    let q = |a: &[i64]| CyclicPresentation::from_i64(Rationals, a).unwrap().char_poly().to_string();
    assert_eq!(q(&[1, 0]), "x^3 - x");
    assert_eq!(q(&[0, 1]), "x^3 - x^2");
}

#[test]
fn char_poly_is_the_characteristic_polynomial_of_right_multiplication() {
    let f = gf(3);
    for n in 2..=4usize {
        for code in 0..3u32.pow(n as u32 - 1) {
            let alphas: Vec<i64> = (0..n - 1).map(|k| ((code / 3u32.pow(k as u32)) % 3) as i64).collect();
            let p = CyclicPresentation::from_i64(f, &alphas).unwrap();
            assert_eq!(p.right_mult_a().charpoly(), p.char_poly());
        }
    }
}

#[test]
fn products_follow_the_presentation() {
    let p = pres(5, &[2, 3]);
    let a = p.algebra();
    assert_eq!(a.basis_product(0, 0), &[0, 1, 0]);
    assert_eq!(a.basis_product(1, 0), &[0, 0, 1]);
    assert_eq!(a.basis_product(2, 0), &[0, 2, 3]);
    for j in 1..3 {
        for i in 0..3 {
            assert!(a.basis_product(i, j).iter().all(|c| *c == 0));
        }
    }
    let q = CyclicPresentation::from_i64(Rationals, &[1]).unwrap().algebra();
    assert_eq!(q.names(), &["a".to_string(), "a^2".to_string()]);
    assert_eq!(q.format_vector(q.basis_product(1, 0)), "a^2");
}

#[test]
fn maximal_subalgebras_from_kernels() {
    let p = pres(5, &[0, 0]);
    let a = p.algebra();
    let m = p.maximal_subalgebras().unwrap();
    assert_eq!(m.len(), 1);
    assert_eq!(m[0].1, a.span(&[a.unit(1), a.unit(2)]));

    let p = pres(5, &[0, 1]);
    let a = p.algebra();
    let spaces: Vec<_> = p.maximal_subalgebras().unwrap().into_iter().map(|(_, s)| s).collect();
    assert_eq!(spaces.len(), 2);
    assert!(spaces.contains(&a.span(&[a.unit(1), a.unit(2)])));
    assert!(spaces.contains(&a.span(&[a.vector_i64(&[1, -1, 0]), a.vector_i64(&[0, 1, -1])])));

    let p = pres(5, &[1, 0]);
    let a = p.algebra();
    let spaces: Vec<_> = p.maximal_subalgebras().unwrap().into_iter().map(|(_, s)| s).collect();
    let expected = [
        a.span(&[a.unit(1), a.unit(2)]),
        a.span(&[a.vector_i64(&[1, 0, -1]), a.vector_i64(&[0, 1, -1])]),
        a.span(&[a.vector_i64(&[1, 0, -1]), a.vector_i64(&[0, 1, 1])]),
    ];
    assert_eq!(spaces.len(), 3);
    for e in &expected {
        assert!(spaces.contains(e), "missing {}", a.describe(e));
        assert!(a.is_subalgebra(e));
    }
}

#[test]
fn primary_decompositions() {
    let p = pres(5, &[1, 0]);
    let a = p.algebra();
    let d = p.primary_decomposition().unwrap();
    assert_eq!(d.components.len(), 3);
    assert_eq!(d.components[0].factor.to_string(), "x");
    assert_eq!(d.components[0].space, a.span(&[a.vector_i64(&[1, 0, -1])]));
    let by_factor = |s: &str| d.components.iter().find(|c| c.factor.to_string() == s).unwrap().space.clone();
    assert_eq!(by_factor("x + 4"), a.span(&[a.vector_i64(&[0, 1, 1])]));
    assert_eq!(by_factor("x + 1"), a.span(&[a.vector_i64(&[0, 1, -1])]));
    d.verify(&a).unwrap();

    let p = pres(5, &[0, 0]);
    let d = p.primary_decomposition().unwrap();
    assert_eq!(d.components.len(), 1);
    assert!(d.components[0].space.is_full());

    let p = pres(5, &[0, 1]);
    let a = p.algebra();
    let d = p.primary_decomposition().unwrap();
    assert_eq!(d.components[0].space, a.span(&[a.vector_i64(&[1, -1, 0]), a.vector_i64(&[0, 1, -1])]));
    assert_eq!(d.components[1].space, a.span(&[a.unit(2)]));
    d.verify(&a).unwrap();
}

#[test]
fn generators() {
    let p = pres(3, &[1, 2]);
    assert!(matches!(find_generator(&p.algebra()), GeneratorSearch::Found(_)));
    let ab = LeibnizAlgebra::abelian(gf(3), 2);
    assert_eq!(find_generator(&ab), GeneratorSearch::NoGenerator);
    let mut t = StructureConstants::zero(gf(3), 3);
    t.set_product_i64(0, 1, &[0, 0, 1]);
    t.set_product_i64(1, 0, &[0, 0, -1]);
    let h = LeibnizAlgebra::new(t).unwrap();
    assert_eq!(find_generator(&h), GeneratorSearch::NoGenerator);
    let q = CyclicPresentation::from_i64(Rationals, &[1, 0, 2]).unwrap().algebra();
    assert_eq!(find_generator(&q).verdict(), Verdict::True);
    assert_eq!(find_generator(&LeibnizAlgebra::abelian(Rationals, 2)).verdict(), Verdict::Unknown);
}

#[test]
fn parse_presentation() {
    let p = CyclicPresentation::parse(gf(5), "0, 0,0").unwrap();
    assert_eq!(p.dim(), 4);
    assert_eq!(p.alphas_text(), "0,0,0");
    assert!(CyclicPresentation::parse(gf(5), "0,7").is_err());
    let q = CyclicPresentation::parse(Rationals, "1/2,-3").unwrap();
    assert_eq!(q.alphas_text(), "1/2,-3");
}
