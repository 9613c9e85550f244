//! Self-contained witnesses: coordinates and echelon bases written as scalar
//! strings, re-checkable against a document without the lattice.

use serde::{Deserialize, Serialize};

use leibniz_core::algebra::{LeibnizAlgebra, StructureConstants, Violation};
use leibniz_core::exactfield::Field;
use leibniz_core::families::JSetResult;
use leibniz_core::lattice::{recheck, Witness};
use leibniz_core::linalg::{format_vector, Subspace};

/// Rows of a reduced echelon basis.
pub type Basis = Vec<Vec<String>>;
pub type Coords = Vec<String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessDoc {
    /// A basis triple violating the right Leibniz identity.
    Identity {
        triple: [usize; 3],
        lhs: Coords,
        rhs: Coords,
    },
    Distributive {
        law: u8,
        a: Basis,
        b: Basis,
        c: Basis,
        lhs: Basis,
        rhs: Basis,
    },
    ModularLaw {
        a: Basis,
        b: Basis,
        c: Basis,
        lhs: Basis,
        rhs: Basis,
    },
    ModularIdentity {
        identity: u8,
        u: Basis,
        v: Basis,
        w: Basis,
        lhs: Basis,
        rhs: Basis,
    },
    WeakQuasiIdeal {
        u: Basis,
        v: Basis,
        left: Coords,
        right: Coords,
        product: Coords,
    },
    BracketCondition {
        x: Coords,
        y: Coords,
        product: Coords,
        hull_x: Basis,
        hull_y: Basis,
    },
    UpperSemimodular {
        u: Basis,
        b: Basis,
        meet: Basis,
        join: Basis,
        intermediate: Basis,
    },
    LowerSemimodular {
        u: Basis,
        b: Basis,
        meet: Basis,
        join: Basis,
        intermediate: Basis,
    },
    DuallyAtomistic {
        u: Basis,
        maximals: Vec<Basis>,
        intersection: Basis,
    },
    UngradedInterval {
        long: Vec<Basis>,
        short: Vec<Basis>,
    },
    /// Two elements with zero square whose sum has nonzero square.
    JSet {
        x: Coords,
        y: Coords,
        sum_square: Coords,
    },
}

fn coords<F: Field>(f: &F, v: &[F::Elem]) -> Coords {
    v.iter().map(|c| f.format(c)).collect()
}

fn basis<F: Field>(s: &Subspace<F>) -> Basis {
    s.basis_vectors().map(|v| coords(s.field(), v)).collect()
}

fn bases<F: Field>(list: &[Subspace<F>]) -> Vec<Basis> {
    list.iter().map(basis).collect()
}

struct Reader<'a, F: Field> {
    field: &'a F,
    dim: usize,
}

impl<F: Field> Reader<'_, F> {
    fn vector(&self, v: &Coords) -> Result<Vec<F::Elem>, String> {
        if v.len() != self.dim {
            return Err(format!("vector has {} coordinates, expected {}", v.len(), self.dim));
        }
        v.iter().map(|c| self.field.parse(c.trim()).map_err(|e| e.to_string())).collect()
    }

    fn subspace(&self, b: &Basis) -> Result<Subspace<F>, String> {
        let rows = b.iter().map(|r| self.vector(r)).collect::<Result<Vec<_>, _>>()?;
        let s = Subspace::span(self.field.clone(), self.dim, &rows).map_err(|e| e.to_string())?;
        if s.dim() != rows.len() {
            return Err("stored basis is linearly dependent".into());
        }
        Ok(s)
    }

    fn subspaces(&self, list: &[Basis]) -> Result<Vec<Subspace<F>>, String> {
        list.iter().map(|b| self.subspace(b)).collect()
    }
}

impl WitnessDoc {
    pub fn kind(&self) -> &'static str {
        match self {
            WitnessDoc::Identity { .. } => "identity",
            WitnessDoc::JSet { .. } => "j-set",
            WitnessDoc::Distributive { .. } => "distributive",
            WitnessDoc::ModularLaw { .. } => "modular-law",
            WitnessDoc::ModularIdentity { .. } => "modular-identity",
            WitnessDoc::WeakQuasiIdeal { .. } => "weak-quasi-ideal",
            WitnessDoc::BracketCondition { .. } => "bracket-condition",
            WitnessDoc::UpperSemimodular { .. } => "upper-semimodular",
            WitnessDoc::LowerSemimodular { .. } => "lower-semimodular",
            WitnessDoc::DuallyAtomistic { .. } => "dually-atomistic",
            WitnessDoc::UngradedInterval { .. } => "ungraded-interval",
        }
    }

    pub fn from_violation<F: Field>(v: &Violation<F>, field: &F) -> Self {
        WitnessDoc::Identity { triple: [v.i, v.j, v.k], lhs: coords(field, &v.lhs), rhs: coords(field, &v.rhs) }
    }

    /// `None` unless `r` refutes closure under addition.
    pub fn from_j_set<F: Field>(r: &JSetResult<F>, field: &F) -> Option<Self> {
        match r {
            JSetResult::NotASubspace { x, y, sum_square } => Some(WitnessDoc::JSet {
                x: coords(field, x),
                y: coords(field, y),
                sum_square: coords(field, sum_square),
            }),
            _ => None,
        }
    }

    pub fn from_lattice<F: Field>(w: &Witness<F>, field: &F) -> Self {
        let v = |x: &[F::Elem]| coords(field, x);
        match w {
            Witness::Distributive { law, a, b, c, lhs, rhs } => WitnessDoc::Distributive {
                law: *law,
                a: basis(a),
                b: basis(b),
                c: basis(c),
                lhs: basis(lhs),
                rhs: basis(rhs),
            },
            Witness::ModularLaw { a, b, c, lhs, rhs } => {
                WitnessDoc::ModularLaw { a: basis(a), b: basis(b), c: basis(c), lhs: basis(lhs), rhs: basis(rhs) }
            }
            Witness::ModularIdentity { identity, u, v: vv, w, lhs, rhs } => WitnessDoc::ModularIdentity {
                identity: *identity,
                u: basis(u),
                v: basis(vv),
                w: basis(w),
                lhs: basis(lhs),
                rhs: basis(rhs),
            },
            Witness::WeakQuasiIdeal { u, v: vv, left, right, product } => WitnessDoc::WeakQuasiIdeal {
                u: basis(u),
                v: basis(vv),
                left: v(left),
                right: v(right),
                product: v(product),
            },
            Witness::BracketCondition { x, y, product, hull_x, hull_y } => WitnessDoc::BracketCondition {
                x: v(x),
                y: v(y),
                product: v(product),
                hull_x: basis(hull_x),
                hull_y: basis(hull_y),
            },
            Witness::UpperSemimodular { u, b, meet, join, intermediate } => WitnessDoc::UpperSemimodular {
                u: basis(u),
                b: basis(b),
                meet: basis(meet),
                join: basis(join),
                intermediate: basis(intermediate),
            },
            Witness::LowerSemimodular { u, b, meet, join, intermediate } => WitnessDoc::LowerSemimodular {
                u: basis(u),
                b: basis(b),
                meet: basis(meet),
                join: basis(join),
                intermediate: basis(intermediate),
            },
            Witness::DuallyAtomistic { u, maximals, intersection } => WitnessDoc::DuallyAtomistic {
                u: basis(u),
                maximals: bases(maximals),
                intersection: basis(intersection),
            },
            Witness::UngradedInterval { long, short } => {
                WitnessDoc::UngradedInterval { long: bases(long), short: bases(short) }
            }
        }
    }

    fn to_lattice<F: Field>(&self, r: &Reader<'_, F>) -> Result<Witness<F>, String> {
        Ok(match self {
            WitnessDoc::Distributive { law, a, b, c, lhs, rhs } => Witness::Distributive {
                law: *law,
                a: r.subspace(a)?,
                b: r.subspace(b)?,
                c: r.subspace(c)?,
                lhs: r.subspace(lhs)?,
                rhs: r.subspace(rhs)?,
            },
            WitnessDoc::ModularLaw { a, b, c, lhs, rhs } => Witness::ModularLaw {
                a: r.subspace(a)?,
                b: r.subspace(b)?,
                c: r.subspace(c)?,
                lhs: r.subspace(lhs)?,
                rhs: r.subspace(rhs)?,
            },
            WitnessDoc::ModularIdentity { identity, u, v, w, lhs, rhs } => Witness::ModularIdentity {
                identity: *identity,
                u: r.subspace(u)?,
                v: r.subspace(v)?,
                w: r.subspace(w)?,
                lhs: r.subspace(lhs)?,
                rhs: r.subspace(rhs)?,
            },
            WitnessDoc::WeakQuasiIdeal { u, v, left, right, product } => Witness::WeakQuasiIdeal {
                u: r.subspace(u)?,
                v: r.subspace(v)?,
                left: r.vector(left)?,
                right: r.vector(right)?,
                product: r.vector(product)?,
            },
            WitnessDoc::BracketCondition { x, y, product, hull_x, hull_y } => Witness::BracketCondition {
                x: r.vector(x)?,
                y: r.vector(y)?,
                product: r.vector(product)?,
                hull_x: r.subspace(hull_x)?,
                hull_y: r.subspace(hull_y)?,
            },
            WitnessDoc::UpperSemimodular { u, b, meet, join, intermediate } => Witness::UpperSemimodular {
                u: r.subspace(u)?,
                b: r.subspace(b)?,
                meet: r.subspace(meet)?,
                join: r.subspace(join)?,
                intermediate: r.subspace(intermediate)?,
            },
            WitnessDoc::LowerSemimodular { u, b, meet, join, intermediate } => Witness::LowerSemimodular {
                u: r.subspace(u)?,
                b: r.subspace(b)?,
                meet: r.subspace(meet)?,
                join: r.subspace(join)?,
                intermediate: r.subspace(intermediate)?,
            },
            WitnessDoc::DuallyAtomistic { u, maximals, intersection } => Witness::DuallyAtomistic {
                u: r.subspace(u)?,
                maximals: r.subspaces(maximals)?,
                intersection: r.subspace(intersection)?,
            },
            WitnessDoc::UngradedInterval { long, short } => {
                Witness::UngradedInterval { long: r.subspaces(long)?, short: r.subspaces(short)? }
            }
            WitnessDoc::Identity { .. } | WitnessDoc::JSet { .. } => {
                return Err(format!("{} is not a lattice witness", self.kind()))
            }
        })
    }

    /// Re-checks the witness against a table. Identity witnesses need the
    /// stated triple to fail with the stored sides; all others need a valid
    /// algebra on which the stored data is a genuine counterexample.
    pub fn replay<F: Field>(&self, table: StructureConstants<F>) -> Result<(), String> {
        let field = table.field().clone();
        let r = Reader { field: &field, dim: table.dim() };
        if let WitnessDoc::Identity { triple: [i, j, k], lhs, rhs } = self {
            let n = table.dim();
            if *i >= n || *j >= n || *k >= n {
                return Err("triple index out of range".into());
            }
            let v = table.check_triple(*i, *j, *k).ok_or("the identity holds on the stored triple")?;
            if v.lhs != r.vector(lhs)? || v.rhs != r.vector(rhs)? {
                return Err("stored sides differ from the recomputed ones".into());
            }
            return Ok(());
        }
        let alg = LeibnizAlgebra::new(table).map_err(|v| format!("document is not a Leibniz algebra: {v}"))?;
        if let WitnessDoc::JSet { x, y, sum_square } = self {
            let j = JSetResult::NotASubspace { x: r.vector(x)?, y: r.vector(y)?, sum_square: r.vector(sum_square)? };
            return j.recheck(&alg);
        }
        recheck(&alg, &self.to_lattice(&r)?)
    }

    /// Text form using the table's basis names.
    pub fn describe<F: Field>(&self, table: &StructureConstants<F>) -> String {
        let r = Reader { field: table.field(), dim: table.dim() };
        let names = table.names();
        let text = |c: &Coords| r.vector(c).map(|v| format_vector(table.field(), &v, names)).unwrap_or_else(|e| e);
        match self {
            WitnessDoc::Identity { triple: [i, j, k], lhs, rhs } => match (names.get(*i), names.get(*j), names.get(*k))
            {
                (Some(x), Some(y), Some(z)) => {
                    format!("[{x},[{y},{z}]] = {} but [[{x},{y}],{z}] - [[{x},{z}],{y}] = {}", text(lhs), text(rhs))
                }
                _ => "triple index out of range".into(),
            },
            WitnessDoc::JSet { x, y, sum_square } => {
                format!("x = {} and y = {} square to zero but (x + y)^2 = {}", text(x), text(y), text(sum_square))
            }
            _ => match LeibnizAlgebra::new(table.clone()) {
                Ok(alg) => self.to_lattice(&r).map(|w| w.describe(&alg)).unwrap_or_else(|e| e),
                Err(v) => v.to_string(),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use leibniz_core::exactfield::PrimeField;
    use leibniz_core::families::{a25, a25_printed, heisenberg};
    use leibniz_core::lattice::{CheckRegistry, LatticeConfig, SubalgebraLattice};

    use super::*;

    fn round_trip(w: &WitnessDoc) -> WitnessDoc {
        serde_json::from_str(&serde_json::to_string(w).unwrap()).unwrap()
    }

    #[test]
    fn lattice_witnesses_survive_serialization_and_replay() {
        let f = PrimeField::new(3).unwrap();
        let h = heisenberg(f);
        let config = LatticeConfig::default();
        let lat = SubalgebraLattice::build(&h, &config).unwrap();
        let mut seen = 0;
        for o in CheckRegistry::default().run_all(&lat, &config) {
            if let Some(w) = &o.witness {
                let doc = round_trip(&WitnessDoc::from_lattice(w, &f));
                doc.replay(h.table().clone()).unwrap_or_else(|e| panic!("{}: {e}", o.name));
                assert!(!doc.describe(h.table()).is_empty());
                seen += 1;
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn identity_witnesses_replay_only_on_their_table() {
        let f = PrimeField::new(3).unwrap();
        let printed = a25_printed(f);
        let v = printed.validate().unwrap_err();
        let doc = round_trip(&WitnessDoc::from_violation(&v, &f));
        assert_eq!(doc.kind(), "identity");
        assert!(doc.replay(printed).is_ok());
        assert!(doc.replay(a25(f).table().clone()).is_err());
    }
}
