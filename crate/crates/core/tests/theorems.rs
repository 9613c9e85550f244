//! Corpus sweeps for the structural statements about subalgebra lattices.

use leibniz_core::algebra::LeibnizAlgebra;
use leibniz_core::cyclic::{CyclicModularity, CyclicPresentation};
use leibniz_core::exactfield::{Field, PrimeField};
use leibniz_core::families::{
    cyclic_presentations, dim2_gf2, e_plus_center, extraspecial_corpus, family_corpus, is_almost_abelian,
    is_leib_scaling, j_set, nilpotent_cyclic, random_dim3, CorpusEntry, JSetResult,
};
use leibniz_core::lattice::{CheckRegistry, LatticeConfig, SubalgebraLattice};
use leibniz_core::linalg::{all_vectors, enumerate_subspaces, Subspace};
use leibniz_core::Verdict;

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn lattice(alg: &LeibnizAlgebra<PrimeField>) -> SubalgebraLattice<PrimeField> {
    SubalgebraLattice::build(alg, &LatticeConfig::default()).unwrap()
}

fn verdict(lat: &SubalgebraLattice<PrimeField>, name: &str) -> Verdict {
    CheckRegistry::default().run(name, lat, &LatticeConfig::default()).unwrap().verdict
}

fn usm_in(lat: &SubalgebraLattice<PrimeField>, u: usize) -> bool {
    (0..lat.len()).all(|b| {
        let m = lat.meet(u, b);
        !lat.is_cover(m, b) || lat.is_cover(u, lat.join(u, b))
    })
}

fn small_corpus() -> Vec<CorpusEntry> {
    let mut c = dim2_gf2();
    c.extend(random_dim3(7, 30));
    c.extend(family_corpus().into_iter().filter(|e| e.algebra.dim() <= 4));
    c
}

#[test]
fn opposite_brackets_close_the_same_subspaces() {
    for e in small_corpus() {
        let alg = &e.algebra;
        let opp = alg.opposite_table();
        let f = *alg.field();
        let mut count = 0;
        for s in enumerate_subspaces(&f, alg.dim(), u64::MAX).unwrap() {
            let basis: Vec<&[u32]> = s.basis_vectors().collect();
            let closed = basis.iter().all(|x| basis.iter().all(|y| s.member(&opp.bracket(x, y))));
            assert_eq!(alg.is_subalgebra(&s), closed, "{}: {}", e.id, alg.describe(&s));
            count += usize::from(closed);
        }
        assert_eq!(count, lattice(alg).len(), "{}", e.id);
    }
}

#[test]
fn lattices_are_closed_under_intersection() {
    for e in small_corpus() {
        let lat = lattice(&e.algebra);
        assert!(lat.node(lat.bottom()).is_zero() && lat.node(lat.top()).is_full());
        for a in 0..lat.len() {
            for b in 0..lat.len() {
                let m = lat.node(a).intersect(lat.node(b));
                assert_eq!(lat.index_of(&m), Some(lat.meet(a, b)), "{}", e.id);
            }
        }
    }
}

#[test]
fn lattice_property_implications() {
    let mut corpus = small_corpus();
    corpus.extend(extraspecial_corpus(3).into_iter().step_by(7));
    for e in corpus {
        let lat = lattice(&e.algebra);
        let v = |n| verdict(&lat, n);
        if v("distributive").is_true() {
            assert!(v("modular-lattice").is_true(), "{}", e.id);
        }
        if v("modular-lattice").is_true() {
            assert!(v("upper-semimodular").is_true() && v("lower-semimodular").is_true(), "{}", e.id);
        }
        if v("dually-atomistic").is_true() {
            assert!(lat.frattini_ideal().is_zero(), "{}", e.id);
        }
    }
}

#[test]
fn upper_semimodularity_passes_to_quotients() {
    for p in [3, 5] {
        let alg = nilpotent_cyclic(gf(p), 4);
        let ideal = alg.span(&[alg.unit(3)]);
        let q = alg.quotient(&ideal).unwrap();
        let (lat, qlat) = (lattice(&alg), lattice(&q.algebra));
        let u = alg.span(&[alg.unit(1), alg.unit(2), alg.unit(3)]);
        let mut checked = 0;
        for (i, node) in lat.nodes().iter().enumerate().filter(|(_, n)| n.contains(&ideal)) {
            let image = qlat.index_of(&q.project_subspace(node)).unwrap();
            assert_eq!(usm_in(&lat, i), usm_in(&qlat, image), "GF({p}) node {}", alg.describe(node));
            checked += 1;
        }
        assert!(checked > 2);
        assert!(usm_in(&lat, lat.index_of(&u).unwrap()));
    }
}

#[test]
fn primary_decompositions_obey_the_product_rules() {
    for n in 2..=4 {
        for pres in cyclic_presentations(5, n) {
            let dec = pres.primary_decomposition().unwrap();
            assert!(dec.components[0].factor.degree() == Some(1) && dec.components[0].factor.coeff(0) == 0);
            dec.verify(&pres.algebra()).unwrap_or_else(|e| panic!("alphas {}: {e}", pres.alphas_text()));
        }
    }
}

#[test]
fn nilpotent_cyclic_presentations_are_upper_semimodular() {
    for p in [3, 5] {
        for n in 2..=4 {
            for pres in
                cyclic_presentations(p, n).into_iter().filter(|c| c.classify_modular() == CyclicModularity::Nilpotent)
            {
                let alg = pres.algebra();
                assert!(alg.is_nilpotent());
                assert!(verdict(&lattice(&alg), "upper-semimodular").is_true(), "GF({p}) {}", pres.alphas_text());
            }
        }
    }
    let explicit = CyclicPresentation::from_i64(gf(3), &[0, 0, 0]).unwrap();
    assert_eq!(explicit.classify_modular(), CyclicModularity::Nilpotent);
}

/// Right-normed powers `x, x^2 = [x, x], x^{k+1} = [x^k, x]` up to the last nonzero one.
fn last_power(alg: &LeibnizAlgebra<PrimeField>, x: &[u32]) -> Vec<u32> {
    let mut cur = x.to_vec();
    loop {
        let next = alg.bracket(&cur, x);
        if next.iter().all(|c| *c == 0) {
            return cur;
        }
        cur = next;
    }
}

#[test]
fn nilpotent_upper_semimodular_algebras_over_gf3() {
    let f = gf(3);
    let mut corpus: Vec<CorpusEntry> = extraspecial_corpus(3);
    corpus.extend(family_corpus().into_iter().filter(|e| e.algebra.field().p() == 3));
    corpus
        .extend((2..=4).map(|n| CorpusEntry { id: format!("nilpotent-cyclic-{n}"), algebra: nilpotent_cyclic(f, n) }));
    let mut seen = 0;
    for e in corpus.iter().filter(|e| e.algebra.is_nilpotent()) {
        let alg = &e.algebra;
        if !verdict(&lattice(alg), "upper-semimodular").is_true() {
            continue;
        }
        seen += 1;
        let leib = alg.leib();
        let JSetResult::Subspace { j, abelian_ideal } = j_set(alg, u64::MAX).unwrap() else {
            panic!("{}: J is not a subspace", e.id);
        };
        assert!(abelian_ideal, "{}: J is not an abelian ideal", e.id);
        for x in all_vectors(&f, alg.dim(), u64::MAX).unwrap() {
            if x.iter().all(|c| *c == 0) {
                continue;
            }
            let span_x = alg.span(std::slice::from_ref(&x));
            let target = alg.closure(std::slice::from_ref(&x)).intersect(&leib);
            assert!(target.contains(&alg.product_space(&leib, &span_x)), "{}: [Leib, x] for x = {x:?}", e.id);
            assert!(target.contains(&alg.product_space(&j, &span_x)), "{}: [J, x] for x = {x:?}", e.id);
            let top = alg.span(&[last_power(alg, &x)]);
            assert!(top.contains(&alg.product_space(&span_x, &j)), "{}: [x, J] for x = {x:?}", e.id);
        }
    }
    assert!(seen > 10, "only {seen} algebras in the sweep");
}

#[test]
fn solvable_dually_atomistic_algebras_are_of_the_three_kinds() {
    let mut corpus = dim2_gf2();
    corpus.extend(family_corpus());
    let mut seen = 0;
    for e in corpus {
        let alg = &e.algebra;
        if !alg.is_solvable() || !verdict(&lattice(alg), "dually-atomistic").is_true() {
            continue;
        }
        seen += 1;
        let abelian = alg.derived_algebra().is_zero();
        assert!(abelian || is_almost_abelian(alg) || is_leib_scaling(alg), "{}", e.id);
    }
    assert!(seen > 3);
}

#[test]
fn central_extensions_by_a_center_stay_modular() {
    let mut seen = 0;
    for e in extraspecial_corpus(3).into_iter().step_by(3) {
        let j = j_set(&e.algebra, u64::MAX).unwrap();
        if j.abelian_ideal() != Verdict::True {
            continue;
        }
        seen += 1;
        let l = e_plus_center(&e.algebra, 1);
        let full = l.full_subspace();
        let cube = l.product_space(&l.product_space(&full, &full), &full);
        assert!(cube.is_zero(), "{}", e.id);
        assert!(verdict(&lattice(&l), "modular-algebra").is_true(), "{}", e.id);
    }
    assert!(seen > 10);
}

#[test]
fn spans_of_all_vectors_cover_every_line() {
    let f = gf(3);
    let lines: std::collections::BTreeSet<_> = all_vectors(&f, 3, u64::MAX)
        .unwrap()
        .filter(|v| v.iter().any(|c| !f.is_zero(c)))
        .map(|v| Subspace::span(f, 3, &[v]).unwrap().basis().clone())
        .map(|b| format!("{b:?}"))
        .collect();
    assert_eq!(lines.len(), 13);
}
