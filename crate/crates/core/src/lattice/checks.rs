use rayon::prelude::*;

use crate::exactfield::Field;
use crate::Verdict;

use super::element::BracketConditionCheck;
use super::{LatticeConfig, SubalgebraLattice, Witness};

#[derive(Clone, Debug)]
pub struct CheckOutcome<F: Field> {
    pub name: &'static str,
    pub verdict: Verdict,
    pub witness: Option<Witness<F>>,
    pub note: Option<String>,
}

impl<F: Field> CheckOutcome<F> {
    fn decided(name: &'static str, witness: Option<Witness<F>>) -> Self {
        CheckOutcome { name, verdict: Verdict::from_bool(witness.is_none()), witness, note: None }
    }

    fn unknown(name: &'static str, note: String) -> Self {
        CheckOutcome { name, verdict: Verdict::Unknown, witness: None, note: Some(note) }
    }
}

/// A lattice property decided on a built lattice.
pub trait LatticeCheck<F: Field>: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self, lat: &SubalgebraLattice<F>, config: &LatticeConfig) -> CheckOutcome<F>;
}

/// Checks addressable by name.
pub struct CheckRegistry<F: Field> {
    checks: Vec<Box<dyn LatticeCheck<F>>>,
}

impl<F: Field> Default for CheckRegistry<F> {
    fn default() -> Self {
        let mut r = CheckRegistry { checks: Vec::new() };
        r.register(Box::new(DistributiveCheck));
        r.register(Box::new(ModularLatticeCheck));
        r.register(Box::new(ModularAlgebraCheck));
        r.register(Box::new(WeakQuasiIdealCheck));
        r.register(Box::new(BracketConditionCheck));
        r.register(Box::new(UpperSemimodularCheck));
        r.register(Box::new(LowerSemimodularCheck));
        r.register(Box::new(DuallyAtomisticCheck));
        r.register(Box::new(JAlgebraCheck));
        r
    }
}

impl<F: Field> CheckRegistry<F> {
    /// Adds a check, replacing any existing check of the same name.
    pub fn register(&mut self, check: Box<dyn LatticeCheck<F>>) {
        self.checks.retain(|c| c.name() != check.name());
        self.checks.push(check);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.checks.iter().map(|c| c.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn LatticeCheck<F>> {
        self.checks.iter().find(|c| c.name() == name).map(|c| c.as_ref())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn LatticeCheck<F>> {
        self.checks.iter().map(|c| c.as_ref())
    }

    pub fn run(&self, name: &str, lat: &SubalgebraLattice<F>, config: &LatticeConfig) -> Option<CheckOutcome<F>> {
        self.get(name).map(|c| c.run(lat, config))
    }

    pub fn run_all(&self, lat: &SubalgebraLattice<F>, config: &LatticeConfig) -> Vec<CheckOutcome<F>> {
        self.checks.iter().map(|c| c.run(lat, config)).collect()
    }
}

fn too_many_for_triples<F: Field>(
    name: &'static str,
    lat: &SubalgebraLattice<F>,
    config: &LatticeConfig,
) -> Option<CheckOutcome<F>> {
    (lat.len() > config.max_triple_nodes).then(|| {
        CheckOutcome::unknown(
            name,
            format!("lattice has {} nodes; triple sweeps are limited to {}", lat.len(), config.max_triple_nodes),
        )
    })
}

pub struct DistributiveCheck;

impl<F: Field> LatticeCheck<F> for DistributiveCheck {
    fn name(&self) -> &'static str {
        "distributive"
    }
    fn description(&self) -> &'static str {
        "both distributive laws on all triples of subalgebras"
    }
    fn run(&self, lat: &SubalgebraLattice<F>, config: &LatticeConfig) -> CheckOutcome<F> {
        if let Some(o) = too_many_for_triples("distributive", lat, config) {
            return o;
        }
        let n = lat.len();
        let (j, m) = (|a, b| lat.join(a, b), |a, b| lat.meet(a, b));
        let law1 = (0..n).into_par_iter().find_map_first(|a| {
            (0..n).find_map(|b| {
                (0..n).find_map(|c| {
                    let lhs = m(a, j(b, c));
                    let rhs = j(m(a, b), m(a, c));
                    (lhs != rhs).then_some((1u8, a, b, c, lhs, rhs))
                })
            })
        });
        let found = law1.or_else(|| {
            (0..n).into_par_iter().find_map_first(|a| {
                (0..n).find_map(|b| {
                    (0..n).find_map(|c| {
                        let lhs = j(a, m(b, c));
                        let rhs = m(j(a, b), j(a, c));
                        (lhs != rhs).then_some((2u8, a, b, c, lhs, rhs))
                    })
                })
            })
        });
        let witness = found.map(|(law, a, b, c, lhs, rhs)| {
            let s = |i: usize| lat.node(i).clone();
            Witness::Distributive { law, a: s(a), b: s(b), c: s(c), lhs: s(lhs), rhs: s(rhs) }
        });
        CheckOutcome::decided("distributive", witness)
    }
}

pub struct ModularLatticeCheck;

impl<F: Field> LatticeCheck<F> for ModularLatticeCheck {
    fn name(&self) -> &'static str {
        "modular-lattice"
    }
    fn description(&self) -> &'static str {
        "the modular law a v (b ^ c) = (a v b) ^ c for all a <= c"
    }
    fn run(&self, lat: &SubalgebraLattice<F>, config: &LatticeConfig) -> CheckOutcome<F> {
        if let Some(o) = too_many_for_triples("modular-lattice", lat, config) {
            return o;
        }
        let n = lat.len();
        let found = (0..n).into_par_iter().find_map_first(|a| {
            (0..n).find_map(|b| {
                lat.above(a).ones().find_map(|c| {
                    let lhs = lat.join(a, lat.meet(b, c));
                    let rhs = lat.meet(lat.join(a, b), c);
                    (lhs != rhs).then_some((a, b, c, lhs, rhs))
                })
            })
        });
        let witness = found.map(|(a, b, c, lhs, rhs)| {
            let s = |i: usize| lat.node(i).clone();
            Witness::ModularLaw { a: s(a), b: s(b), c: s(c), lhs: s(lhs), rhs: s(rhs) }
        });
        CheckOutcome::decided("modular-lattice", witness)
    }
}

/// Both modular identities for every subalgebra, quantified literally.
pub struct ModularAlgebraCheck;

impl<F: Field> LatticeCheck<F> for ModularAlgebraCheck {
    fn name(&self) -> &'static str {
        "modular-algebra"
    }
    fn description(&self) -> &'static str {
        "every subalgebra U satisfies <U,V> ^ W = <V, U ^ W> for V <= W and <U,V> ^ W = <V ^ W, U> for U <= W"
    }
    fn run(&self, lat: &SubalgebraLattice<F>, config: &LatticeConfig) -> CheckOutcome<F> {
        if let Some(o) = too_many_for_triples("modular-algebra", lat, config) {
            return o;
        }
        let n = lat.len();
        let found = (0..n).into_par_iter().find_map_first(|u| {
            let first = (0..n).find_map(|v| {
                lat.above(v).ones().find_map(|w| {
                    let lhs = lat.meet(lat.join(u, v), w);
                    let rhs = lat.join(v, lat.meet(u, w));
                    (lhs != rhs).then_some((1u8, u, v, w, lhs, rhs))
                })
            });
            first.or_else(|| {
                lat.above(u).ones().find_map(|w| {
                    (0..n).find_map(|v| {
                        let lhs = lat.meet(lat.join(u, v), w);
                        let rhs = lat.join(lat.meet(v, w), u);
                        (lhs != rhs).then_some((2u8, u, v, w, lhs, rhs))
                    })
                })
            })
        });
        let witness = found.map(|(identity, u, v, w, lhs, rhs)| {
            let s = |i: usize| lat.node(i).clone();
            Witness::ModularIdentity { identity, u: s(u), v: s(v), w: s(w), lhs: s(lhs), rhs: s(rhs) }
        });
        CheckOutcome::decided("modular-algebra", witness)
    }
}

pub struct WeakQuasiIdealCheck;

impl<F: Field> LatticeCheck<F> for WeakQuasiIdealCheck {
    fn name(&self) -> &'static str {
        "weak-quasi-ideal"
    }
    fn description(&self) -> &'static str {
        "[U,V] + [V,U] lies in U + V for all subalgebras U, V"
    }
    fn run(&self, lat: &SubalgebraLattice<F>, _config: &LatticeConfig) -> CheckOutcome<F> {
        let alg = lat.algebra();
        let n = lat.len();
        let found = (0..n).into_par_iter().find_map_first(|a| {
            let u = lat.node(a);
            (a..n).find_map(|b| {
                let v = lat.node(b);
                if u.contains(v) || v.contains(u) {
                    return None;
                }
                let s = u.sum(v);
                for x in u.basis_vectors() {
                    for y in v.basis_vectors() {
                        for (l, r) in [(x, y), (y, x)] {
                            let p = alg.bracket(l, r);
                            if !s.member(&p) {
                                return Some((a, b, l.to_vec(), r.to_vec(), p));
                            }
                        }
                    }
                }
                None
            })
        });
        let witness = found.map(|(a, b, left, right, product)| Witness::WeakQuasiIdeal {
            u: lat.node(a).clone(),
            v: lat.node(b).clone(),
            left,
            right,
            product,
        });
        CheckOutcome::decided("weak-quasi-ideal", witness)
    }
}

pub struct UpperSemimodularCheck;

impl<F: Field> LatticeCheck<F> for UpperSemimodularCheck {
    fn name(&self) -> &'static str {
        "upper-semimodular"
    }
    fn description(&self) -> &'static str {
        "U ^ B maximal in B implies U maximal in <U,B>"
    }
    fn run(&self, lat: &SubalgebraLattice<F>, _config: &LatticeConfig) -> CheckOutcome<F> {
        let n = lat.len();
        let found = (0..n).into_par_iter().find_map_first(|u| {
            (0..n).find_map(|b| {
                let m = lat.meet(u, b);
                if !lat.is_cover(m, b) {
                    return None;
                }
                let j = lat.join(u, b);
                if lat.is_cover(u, j) {
                    return None;
                }
                let c = lat.intermediate(u, j).expect("not a cover, so something lies between");
                Some((u, b, m, j, c))
            })
        });
        let witness = found.map(|(u, b, m, j, c)| {
            let s = |i: usize| lat.node(i).clone();
            Witness::UpperSemimodular { u: s(u), b: s(b), meet: s(m), join: s(j), intermediate: s(c) }
        });
        CheckOutcome::decided("upper-semimodular", witness)
    }
}

pub struct LowerSemimodularCheck;

impl<F: Field> LatticeCheck<F> for LowerSemimodularCheck {
    fn name(&self) -> &'static str {
        "lower-semimodular"
    }
    fn description(&self) -> &'static str {
        "U maximal in <U,B> implies U ^ B maximal in B"
    }
    fn run(&self, lat: &SubalgebraLattice<F>, _config: &LatticeConfig) -> CheckOutcome<F> {
        let n = lat.len();
        let found = (0..n).into_par_iter().find_map_first(|u| {
            (0..n).find_map(|b| {
                let j = lat.join(u, b);
                if !lat.is_cover(u, j) {
                    return None;
                }
                let m = lat.meet(u, b);
                if lat.is_cover(m, b) {
                    return None;
                }
                let c = lat.intermediate(m, b).expect("not a cover, so something lies between");
                Some((u, b, m, j, c))
            })
        });
        let witness = found.map(|(u, b, m, j, c)| {
            let s = |i: usize| lat.node(i).clone();
            Witness::LowerSemimodular { u: s(u), b: s(b), meet: s(m), join: s(j), intermediate: s(c) }
        });
        CheckOutcome::decided("lower-semimodular", witness)
    }
}

pub struct DuallyAtomisticCheck;

impl<F: Field> LatticeCheck<F> for DuallyAtomisticCheck {
    fn name(&self) -> &'static str {
        "dually-atomistic"
    }
    fn description(&self) -> &'static str {
        "every subalgebra is an intersection of maximal subalgebras"
    }
    fn run(&self, lat: &SubalgebraLattice<F>, _config: &LatticeConfig) -> CheckOutcome<F> {
        let maximal = lat.maximal_nodes();
        let top = lat.top();
        let found = (0..top).into_par_iter().find_map_first(|u| {
            let above: Vec<usize> = maximal.iter().copied().filter(|&m| lat.leq(u, m)).collect();
            let meet = above.iter().fold(top, |acc, &m| lat.meet(acc, m));
            (meet != u).then_some((u, above, meet))
        });
        let witness = found.map(|(u, above, meet)| Witness::DuallyAtomistic {
            u: lat.node(u).clone(),
            maximals: above.iter().map(|&m| lat.node(m).clone()).collect(),
            intersection: lat.node(meet).clone(),
        });
        CheckOutcome::decided("dually-atomistic", witness)
    }
}

/// Every interval is graded: all maximal chains between two nested
/// subalgebras have the same length.
pub struct JAlgebraCheck;

impl<F: Field> LatticeCheck<F> for JAlgebraCheck {
    fn name(&self) -> &'static str {
        "j-algebra"
    }
    fn description(&self) -> &'static str {
        "all maximal chains between any two nested subalgebras have equal length"
    }
    fn run(&self, lat: &SubalgebraLattice<F>, _config: &LatticeConfig) -> CheckOutcome<F> {
        let n = lat.len();
        let found = (0..n).into_par_iter().find_map_first(|a| {
            let lens = lat.chain_lengths_from(a);
            lat.above(a).ones().find(|&b| matches!(lens[b], Some((lo, hi)) if lo != hi)).map(|b| (a, b))
        });
        let mut outcome = CheckOutcome::decided(
            "j-algebra",
            found.map(|(a, b)| {
                let chain =
                    |longest| lat.extremal_chain(a, b, longest).into_iter().map(|i| lat.node(i).clone()).collect();
                Witness::UngradedInterval { long: chain(true), short: chain(false) }
            }),
        );
        if let Some(d) = lat.chain_length().filter(|_| outcome.verdict.is_true()) {
            outcome.note = Some(format!("d(L) = {d}"));
        }
        outcome
    }
}
