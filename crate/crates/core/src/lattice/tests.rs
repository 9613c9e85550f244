use super::*;
use crate::algebra::StructureConstants;
use crate::cyclic::CyclicPresentation;
use crate::exactfield::PrimeField;
use crate::Verdict;

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn lattice(alg: &LeibnizAlgebra<PrimeField>) -> SubalgebraLattice<PrimeField> {
    SubalgebraLattice::build(alg, &LatticeConfig::default()).unwrap()
}

fn heisenberg(p: u64) -> LeibnizAlgebra<PrimeField> {
    let mut t = StructureConstants::zero(gf(p), 3);
    t.set_product_i64(0, 1, &[0, 0, 1]);
    t.set_product_i64(1, 0, &[0, 0, -1]);
    LeibnizAlgebra::new(t).unwrap()
}

fn cyclic(p: u64, alphas: &[i64]) -> LeibnizAlgebra<PrimeField> {
    CyclicPresentation::from_i64(gf(p), alphas).unwrap().algebra()
}

/// Every two-dimensional algebra over GF(2) satisfying the identity.
fn all_dim2_gf2() -> Vec<LeibnizAlgebra<PrimeField>> {
    (0u32..256)
        .filter_map(|code| {
            let mut t = StructureConstants::zero(gf(2), 2);
            for (slot, (i, j)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
                let bits = (code >> (2 * slot)) & 3;
                t.set_product_i64(i, j, &[(bits & 1) as i64, (bits >> 1) as i64]);
            }
            LeibnizAlgebra::new(t).ok()
        })
        .collect()
}

fn sample() -> Vec<LeibnizAlgebra<PrimeField>> {
    let mut out = all_dim2_gf2();
    out.push(heisenberg(2));
    out.push(heisenberg(3));
    out.push(LeibnizAlgebra::abelian(gf(3), 3));
    for alphas in [[0, 0], [0, 1], [1, 0], [1, 1], [2, 1]] {
        out.push(cyclic(3, &alphas));
    }
    out.push(cyclic(2, &[1]).direct_sum(&cyclic(2, &[0])));
    out
}

fn outcome(lat: &SubalgebraLattice<PrimeField>, name: &str) -> CheckOutcome<PrimeField> {
    CheckRegistry::default().run(name, lat, &LatticeConfig::default()).unwrap()
}

#[test]
fn abelian_plane_over_gf2_is_m3() {
    let lat = lattice(&LeibnizAlgebra::abelian(gf(2), 2));
    assert_eq!(lat.len(), 5);
    assert_eq!(lat.cover_count(), 6);
    assert_eq!(lat.maximal_nodes().len(), 3);
    assert!(lat.frattini_ideal().is_zero());
    assert_eq!(outcome(&lat, "distributive").verdict, Verdict::False);
    assert_eq!(outcome(&lat, "modular-lattice").verdict, Verdict::True);
    assert_eq!(outcome(&lat, "dually-atomistic").verdict, Verdict::True);
    let j = outcome(&lat, "j-algebra");
    assert_eq!(j.verdict, Verdict::True);
    assert_eq!(j.note.as_deref(), Some("d(L) = 2"));
}

#[test]
fn nilpotent_cyclic_plane_is_a_chain() {
    let alg = cyclic(5, &[0]);
    let lat = lattice(&alg);
    assert_eq!(lat.len(), 3);
    assert_eq!(lat.node(1), &alg.span(&[alg.unit(1)]));
    assert_eq!(lat.frattini_ideal(), alg.span(&[alg.unit(1)]));
    assert_eq!(outcome(&lat, "distributive").verdict, Verdict::True);
    assert_eq!(outcome(&lat, "dually-atomistic").verdict, Verdict::False);
}

#[test]
fn solvable_cyclic_plane_has_two_lines() {
    let alg = cyclic(5, &[1]);
    let lat = lattice(&alg);
    assert_eq!(lat.len(), 4);
    let lines: Vec<_> = (1..3).map(|i| lat.node(i).clone()).collect();
    assert!(lines.contains(&alg.span(&[alg.unit(1)])));
    assert!(lines.contains(&alg.span(&[alg.vector_i64(&[1, -1])])));
    assert!(lat.frattini_ideal().is_zero());
    for name in CheckRegistry::<PrimeField>::default().names() {
        assert_eq!(outcome(&lat, name).verdict, Verdict::True, "{name}");
    }
}

#[test]
fn heisenberg_lattice() {
    let alg = heisenberg(3);
    let lat = lattice(&alg);
    // 0, 13 lines, 4 planes through z, L
    assert_eq!(lat.len(), 19);
    assert_eq!(lat.frattini_ideal(), alg.span(&[alg.unit(2)]));
    let usm = outcome(&lat, "upper-semimodular");
    assert_eq!(usm.verdict, Verdict::False);
    recheck(&alg, usm.witness.as_ref().unwrap()).unwrap();
    assert_eq!(outcome(&lat, "lower-semimodular").verdict, Verdict::True);
    let da = outcome(&lat, "dually-atomistic");
    assert_eq!(da.verdict, Verdict::False);
    recheck(&alg, da.witness.as_ref().unwrap()).unwrap();
    assert_eq!(outcome(&lat, "modular-lattice").verdict, Verdict::False);
    assert_eq!(outcome(&lat, "j-algebra").note.as_deref(), Some("d(L) = 3"));
    let bc = outcome(&lat, "bracket-condition");
    assert_eq!(bc.verdict, Verdict::False);
    match bc.witness.unwrap() {
        Witness::BracketCondition { x, y, .. } => assert_eq!((x, y), (alg.unit(0), alg.unit(1))),
        w => panic!("unexpected witness {w:?}"),
    }
}

#[test]
fn ungraded_interval_is_found() {
    // x acts on the abelian ideal <y, z> without eigenvectors, so <x> is
    // maximal next to a chain 0 < line < <y, z> < L.
    let mut t = StructureConstants::zero(gf(3), 3);
    t.set_product_i64(1, 0, &[0, 0, 1]);
    t.set_product_i64(2, 0, &[0, -1, 0]);
    let alg = LeibnizAlgebra::new(t).unwrap();
    let lat = lattice(&alg);
    assert!(lat.is_cover(lat.index_of(&alg.span(&[alg.unit(0)])).unwrap(), lat.top()));
    assert_eq!(lat.chain_length(), None);
    assert_eq!(lat.chain_lengths_from(lat.bottom())[lat.top()], Some((2, 3)));
    let j = outcome(&lat, "j-algebra");
    assert_eq!(j.verdict, Verdict::False);
    let w = j.witness.unwrap();
    recheck(&alg, &w).unwrap();
    match w {
        Witness::UngradedInterval { long, short } => assert_eq!((long.len(), short.len()), (4, 3)),
        w => panic!("unexpected witness {w:?}"),
    }
}

#[test]
fn joins_and_meets_match_direct_computation() {
    for alg in sample() {
        let lat = lattice(&alg);
        for a in 0..lat.len() {
            for b in 0..lat.len() {
                let join =
                    alg.closure(&lat.node(a).sum(lat.node(b)).basis_vectors().map(|r| r.to_vec()).collect::<Vec<_>>());
                assert_eq!(lat.node(lat.join(a, b)), &join);
                assert_eq!(lat.node(lat.meet(a, b)), &lat.node(a).intersect(lat.node(b)));
            }
        }
    }
}

#[test]
fn covers_match_vector_maximality() {
    for alg in sample() {
        let lat = lattice(&alg);
        for a in 0..lat.len() {
            for b in lat.above(a).ones() {
                assert_eq!(lat.is_cover(a, b), is_maximal_in(&alg, lat.node(a), lat.node(b)));
            }
        }
    }
}

#[test]
fn nodes_are_exactly_the_subalgebras() {
    use crate::linalg::enumerate_subspaces;
    for alg in sample() {
        let lat = lattice(&alg);
        let expected =
            enumerate_subspaces(alg.field(), alg.dim(), 10_000).unwrap().filter(|s| alg.is_subalgebra(s)).count();
        assert_eq!(lat.len(), expected);
        for (i, s) in lat.nodes().iter().enumerate() {
            assert_eq!(lat.index_of(s), Some(i));
        }
    }
}

#[test]
fn witnesses_recheck_and_implications_hold() {
    let registry = CheckRegistry::<PrimeField>::default();
    let config = LatticeConfig::default();
    for alg in sample() {
        let lat = lattice(&alg);
        let results: HashMap<&str, CheckOutcome<PrimeField>> =
            registry.run_all(&lat, &config).into_iter().map(|o| (o.name, o)).collect();
        for o in results.values() {
            assert!(o.verdict.known().is_some(), "{} undecided", o.name);
            if let Some(w) = &o.witness {
                let kind = match o.name {
                    "modular-lattice" => "modular-law",
                    "modular-algebra" => "modular-identity",
                    "j-algebra" => "ungraded-interval",
                    name => name,
                };
                assert_eq!(w.kind(), kind);
                recheck(&alg, w).unwrap_or_else(|e| panic!("{}: {e}\n{}", o.name, w.describe(&alg)));
            }
        }
        let t = |n: &str| results[n].verdict.is_true();
        if t("distributive") {
            assert!(t("modular-lattice"));
        }
        if t("modular-lattice") {
            assert!(t("upper-semimodular") && t("lower-semimodular") && t("j-algebra"));
        }
        assert_eq!(t("modular-algebra"), t("modular-lattice"));
        if t("dually-atomistic") {
            assert!(lat.frattini_ideal().is_zero());
        }
        if t("bracket-condition") {
            assert!(t("weak-quasi-ideal"));
        }
    }
}

#[test]
fn triple_checks_respect_the_node_limit() {
    let lat = lattice(&heisenberg(3));
    let config = LatticeConfig { max_triple_nodes: 10, ..LatticeConfig::default() };
    let o = CheckRegistry::default().run("distributive", &lat, &config).unwrap();
    assert_eq!(o.verdict, Verdict::Unknown);
    assert!(o.note.unwrap().contains("19"));
}

#[test]
fn build_refuses_large_or_infinite_cases() {
    let alg = LeibnizAlgebra::abelian(gf(7), 6);
    assert!(matches!(SubalgebraLattice::build(&alg, &LatticeConfig::default()), Err(LatticeError::Budget { .. })));
    let q = LeibnizAlgebra::abelian(crate::exactfield::Rationals, 2);
    assert!(matches!(SubalgebraLattice::build(&q, &LatticeConfig::default()), Err(LatticeError::InfiniteField)));
}

#[test]
fn element_condition_agrees_with_bounded_search() {
    for alg in sample() {
        let exhaustive = bracket_condition(&alg, 100_000).unwrap();
        if let Some(w) = &exhaustive {
            recheck(&alg, w).unwrap();
        }
        let bounded = search_bracket_counterexample(&alg, 1);
        if bounded.is_some() {
            assert!(exhaustive.is_some());
        }
    }
}

#[test]
fn dot_output_lists_every_node_and_cover() {
    let lat = lattice(&heisenberg(3));
    let dot = to_dot(&lat);
    assert!(dot.starts_with("digraph subalgebras {"));
    assert_eq!(dot.matches(" -> ").count(), lat.cover_count());
    assert_eq!(dot.matches("label=").count(), lat.len());
    assert_eq!(dot.matches("peripheries=2").count(), 1);
    assert_eq!(dot.matches("fillcolor=lightblue").count(), 4);
}
