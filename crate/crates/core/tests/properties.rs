use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use leibniz_core::exactfield::{Factorize, Field, Polynomial, PrimeField, Rationals};
use leibniz_core::linalg::{enumerate_subspaces, gaussian_binomial, Subspace};

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn monic_of_degree(f: &PrimeField, d: usize) -> Vec<Polynomial<PrimeField>> {
    let p = f.p();
    let mut out = Vec::new();
    for mut code in 0..(p as usize).pow(d as u32) {
        let mut c: Vec<u32> = (0..d)
            .map(|_| {
                let r = (code % p as usize) as u32;
                code /= p as usize;
                r
            })
            .collect();
        c.push(1);
        out.push(Polynomial::from_coeffs(*f, c));
    }
    out
}

fn irreducible_by_search(q: &Polynomial<PrimeField>) -> bool {
    let d = q.degree().unwrap();
    (1..=d / 2).all(|k| monic_of_degree(q.field(), k).iter().all(|g| !g.divides(q)))
}

fn poly_strategy() -> impl Strategy<Value = Polynomial<PrimeField>> {
    (prop_oneof![Just(2u64), Just(3), Just(5)], 1usize..=6).prop_flat_map(|(p, d)| {
        (proptest::collection::vec(0..p as u32, d), 1..p as u32).prop_map(move |(mut c, lead)| {
            c.push(lead);
            Polynomial::from_coeffs(gf(p), c)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn factorization_reconstructs_and_factors_are_irreducible(poly in poly_strategy()) {
        let f = *poly.field();
        let fac = f.factor(&poly).unwrap();
        prop_assert_eq!(fac.product(&f), poly);
        for (i, a) in fac.factors.iter().enumerate() {
            prop_assert_eq!(a.factor.leading(), Some(&1));
            prop_assert!(a.multiplicity >= 1);
            prop_assert!(irreducible_by_search(&a.factor), "{} is reducible", a.factor);
            for b in &fac.factors[i + 1..] {
                prop_assert!(a.factor.gcd(&b.factor).is_one());
            }
        }
    }

    #[test]
    fn rational_arithmetic_is_exact(
        a in (-10_000i64..10_000, 1i64..10_000),
        b in (-10_000i64..10_000, 1i64..10_000),
        k in 1u32..12,
    ) {
        let q = Rationals;
        let x = BigRational::new(BigInt::from(a.0), BigInt::from(a.1));
        let y = BigRational::new(BigInt::from(b.0), BigInt::from(b.1));
        let mut big = x.clone();
        for _ in 0..k {
            big = q.mul(&big, &big);
        }
        let back = q.sub(&q.add(&big, &y), &y);
        prop_assert_eq!(back, big.clone());
        if !q.is_zero(&big) {
            prop_assert_eq!(q.mul(&big, &q.inv(&big).unwrap()), q.one());
        }
        prop_assert_eq!(q.parse(&q.format(&x)).unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn echelon_form_is_canonical(
        rows in proptest::collection::vec(proptest::collection::vec(0u32..3, 5), 1..5),
        ops in proptest::collection::vec((0usize..8, 0usize..8, 1u32..3), 0..12),
        perm_seed in 0usize..120,
    ) {
        let f = gf(3);
        let a = Subspace::span(f, 5, &rows).unwrap();
        let mut shuffled = rows.clone();
        let n = shuffled.len();
        for (i, j, c) in ops {
            let (i, j) = (i % n, j % n);
            if i != j {
                let src = shuffled[j].clone();
                for (t, s) in shuffled[i].iter_mut().zip(&src) {
                    *t = f.add(t, &f.mul(&c, s));
                }
            }
        }
        shuffled.rotate_left(perm_seed % n);
        shuffled.swap(0, n - 1);
        let b = Subspace::span(f, 5, &shuffled).unwrap();
        prop_assert_eq!(a.basis(), b.basis());
        prop_assert_eq!(a, b);
    }
}

#[test]
fn rank_nullity_and_modular_law_in_gf2_cubed() {
    let f = gf(2);
    let all: Vec<_> = enumerate_subspaces(&f, 3, u64::MAX).unwrap().collect();
    assert_eq!(all.len(), 16);
    for a in &all {
        for b in &all {
            assert_eq!(a.sum(b).dim() + a.intersect(b).dim(), a.dim() + b.dim());
            for c in all.iter().filter(|c| c.contains(a)) {
                assert_eq!(a.sum(&b.intersect(c)), a.sum(b).intersect(c));
            }
        }
    }
}

#[test]
fn subspace_counts_match_gaussian_binomials() {
    for q in [2u64, 3, 5] {
        let f = gf(q);
        for n in 0..=4usize {
            let mut counts = vec![0u128; n + 1];
            for s in enumerate_subspaces(&f, n, u64::MAX).unwrap() {
                counts[s.dim()] += 1;
            }
            for (k, c) in counts.iter().enumerate() {
                assert_eq!(Some(*c), gaussian_binomial(n as u32, k as u32, q), "q={q} n={n} k={k}");
            }
        }
    }
}
