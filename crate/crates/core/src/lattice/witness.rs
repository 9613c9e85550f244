//! Counterexamples to lattice properties, stored with explicit subspaces so
//! they can be verified against the algebra alone.

use crate::algebra::LeibnizAlgebra;
use crate::exactfield::Field;
use crate::linalg::{enumerate_subspaces, Subspace, DEFAULT_ENUMERATION_BUDGET};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness<F: Field> {
    /// `a ^ (b v c) != (a ^ b) v (a ^ c)` (law 1) or
    /// `a v (b ^ c) != (a v b) ^ (a v c)` (law 2).
    Distributive { law: u8, a: Subspace<F>, b: Subspace<F>, c: Subspace<F>, lhs: Subspace<F>, rhs: Subspace<F> },
    /// `a <= c` but `a v (b ^ c) != (a v b) ^ c`.
    ModularLaw { a: Subspace<F>, b: Subspace<F>, c: Subspace<F>, lhs: Subspace<F>, rhs: Subspace<F> },
    /// Identity 1: `V <= W` and `<U,V> ^ W != <V, U ^ W>`.
    /// Identity 2: `U <= W` and `<U,V> ^ W != <V ^ W, U>`.
    ModularIdentity { identity: u8, u: Subspace<F>, v: Subspace<F>, w: Subspace<F>, lhs: Subspace<F>, rhs: Subspace<F> },
    /// `[left, right]` (one factor in each subalgebra) escapes `U + V`.
    WeakQuasiIdeal { u: Subspace<F>, v: Subspace<F>, left: Vec<F::Elem>, right: Vec<F::Elem>, product: Vec<F::Elem> },
    /// `[x, y]` lies outside `<x> + <y>`.
    BracketCondition {
        x: Vec<F::Elem>,
        y: Vec<F::Elem>,
        product: Vec<F::Elem>,
        hull_x: Subspace<F>,
        hull_y: Subspace<F>,
    },
    /// `U ^ B` is maximal in `B`, but `U < C < <U,B>`.
    UpperSemimodular { u: Subspace<F>, b: Subspace<F>, meet: Subspace<F>, join: Subspace<F>, intermediate: Subspace<F> },
    /// `U` is maximal in `<U,B>`, but `U ^ B < C < B`.
    LowerSemimodular { u: Subspace<F>, b: Subspace<F>, meet: Subspace<F>, join: Subspace<F>, intermediate: Subspace<F> },
    /// The maximal subalgebras containing `u` intersect in something larger.
    DuallyAtomistic { u: Subspace<F>, maximals: Vec<Subspace<F>>, intersection: Subspace<F> },
    /// Two maximal chains from `bottom` to `top` of different lengths.
    UngradedInterval { long: Vec<Subspace<F>>, short: Vec<Subspace<F>> },
}

impl<F: Field> Witness<F> {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::Distributive { .. } => "distributive",
            Witness::ModularLaw { .. } => "modular-law",
            Witness::ModularIdentity { .. } => "modular-identity",
            Witness::WeakQuasiIdeal { .. } => "weak-quasi-ideal",
            Witness::BracketCondition { .. } => "bracket-condition",
            Witness::UpperSemimodular { .. } => "upper-semimodular",
            Witness::LowerSemimodular { .. } => "lower-semimodular",
            Witness::DuallyAtomistic { .. } => "dually-atomistic",
            Witness::UngradedInterval { .. } => "ungraded-interval",
        }
    }

    /// Human-readable summary using the algebra's basis names.
    pub fn describe(&self, alg: &LeibnizAlgebra<F>) -> String {
        let d = |s: &Subspace<F>| alg.describe(s);
        let v = |x: &[F::Elem]| alg.format_vector(x);
        match self {
            Witness::Distributive { law, a, b, c, lhs, rhs } => format!(
                "distributive law {law} fails for a = {}, b = {}, c = {}: {} vs {}",
                d(a),
                d(b),
                d(c),
                d(lhs),
                d(rhs)
            ),
            Witness::ModularLaw { a, b, c, lhs, rhs } => format!(
                "modular law fails for a = {} <= c = {}, b = {}: a v (b ^ c) = {} but (a v b) ^ c = {}",
                d(a),
                d(c),
                d(b),
                d(lhs),
                d(rhs)
            ),
            Witness::ModularIdentity { identity, u, v: vv, w, lhs, rhs } => format!(
                "modular identity fails for U = {}, V = {}, W = {}: <U,V> ^ W = {} but {} = {}",
                d(u),
                d(vv),
                d(w),
                d(lhs),
                if *identity == 1 { "<V, U ^ W>" } else { "<V ^ W, U>" },
                d(rhs)
            ),
            Witness::WeakQuasiIdeal { u, v: vv, left, right, product } => {
                format!("[{}, {}] = {} is not in U + V for U = {}, V = {}", v(left), v(right), v(product), d(u), d(vv))
            }
            Witness::BracketCondition { x, y, product, hull_x, hull_y } => {
                format!("[{}, {}] = {} is not in <x> + <y> = {}", v(x), v(y), v(product), d(&hull_x.sum(hull_y)))
            }
            Witness::UpperSemimodular { u, b, meet, join, intermediate } => format!(
                "U = {} and B = {}: U ^ B = {} is maximal in B, but U < {} < <U,B> = {}",
                d(u),
                d(b),
                d(meet),
                d(intermediate),
                d(join)
            ),
            Witness::LowerSemimodular { u, b, meet, join, intermediate } => format!(
                "U = {} and B = {}: U is maximal in <U,B> = {}, but U ^ B = {} < {} < B",
                d(u),
                d(b),
                d(join),
                d(meet),
                d(intermediate)
            ),
            Witness::DuallyAtomistic { u, maximals, intersection } => format!(
                "{} is not an intersection of maximal subalgebras: the {} maximal subalgebras above it meet in {}",
                d(u),
                maximals.len(),
                d(intersection)
            ),
            Witness::UngradedInterval { long, short } => format!(
                "maximal chains from {} to {} of lengths {} and {}",
                d(&long[0]),
                d(long.last().unwrap()),
                long.len() - 1,
                short.len() - 1
            ),
        }
    }
}

/// `m` is a maximal subalgebra of `a`: every vector of `a` outside `m`
/// generates `a` together with `m`. Finite fields only.
pub fn is_maximal_in<F: Field>(alg: &LeibnizAlgebra<F>, m: &Subspace<F>, a: &Subspace<F>) -> bool {
    if !alg.is_subalgebra(m) || !alg.is_subalgebra(a) || !a.contains(m) || m == a {
        return false;
    }
    let gens: Vec<Vec<F::Elem>> = m.basis_vectors().map(|r| r.to_vec()).collect();
    let vectors = a.vectors().expect("finite field");
    vectors.iter().filter(|x| !m.member(x)).all(|x| {
        let mut g = gens.clone();
        g.push(x.clone());
        alg.closure(&g) == *a
    })
}

fn proper_chain<F: Field>(alg: &LeibnizAlgebra<F>, lo: &Subspace<F>, mid: &Subspace<F>, hi: &Subspace<F>) -> bool {
    alg.is_subalgebra(mid) && mid.contains(lo) && hi.contains(mid) && mid != lo && mid != hi
}

fn ensure(ok: bool, msg: &str) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

/// Re-verifies a witness from scratch: every subspace is re-checked to be a
/// subalgebra, joins are recomputed as generated subalgebras, and maximality
/// is decided by vector enumeration.
pub fn recheck<F: Field>(alg: &LeibnizAlgebra<F>, w: &Witness<F>) -> Result<(), String> {
    let sub = |s: &Subspace<F>| alg.is_subalgebra(s);
    let join = |a: &Subspace<F>, b: &Subspace<F>| alg.join(a, b);
    match w {
        Witness::Distributive { law, a, b, c, lhs, rhs } => {
            ensure(sub(a) && sub(b) && sub(c), "operands must be subalgebras")?;
            let (l, r) = match law {
                1 => (a.intersect(&join(b, c)), join(&a.intersect(b), &a.intersect(c))),
                2 => (join(a, &b.intersect(c)), join(a, b).intersect(&join(a, c))),
                _ => return Err(format!("unknown distributive law {law}")),
            };
            ensure(&l == lhs && &r == rhs, "recomputed sides differ from the stored ones")?;
            ensure(l != r, "the two sides agree")
        }
        Witness::ModularLaw { a, b, c, lhs, rhs } => {
            ensure(sub(a) && sub(b) && sub(c), "operands must be subalgebras")?;
            ensure(c.contains(a), "a must lie in c")?;
            let l = join(a, &b.intersect(c));
            let r = join(a, b).intersect(c);
            ensure(&l == lhs && &r == rhs, "recomputed sides differ from the stored ones")?;
            ensure(l != r, "the two sides agree")
        }
        Witness::ModularIdentity { identity, u, v, w, lhs, rhs } => {
            ensure(sub(u) && sub(v) && sub(w), "operands must be subalgebras")?;
            let l = join(u, v).intersect(w);
            let r = match identity {
                1 => {
                    ensure(w.contains(v), "this form of the identity needs V inside W")?;
                    join(v, &u.intersect(w))
                }
                2 => {
                    ensure(w.contains(u), "this form of the identity needs U inside W")?;
                    join(&v.intersect(w), u)
                }
                _ => return Err(format!("unknown identity {identity}")),
            };
            ensure(&l == lhs && &r == rhs, "recomputed sides differ from the stored ones")?;
            ensure(l != r, "the two sides agree")
        }
        Witness::WeakQuasiIdeal { u, v, left, right, product } => {
            ensure(sub(u) && sub(v), "operands must be subalgebras")?;
            let in_uv = (u.member(left) && v.member(right)) || (v.member(left) && u.member(right));
            ensure(in_uv, "factors must come from U and V")?;
            ensure(&alg.bracket(left, right) == product, "stored product is wrong")?;
            ensure(!u.sum(v).member(product), "product lies in U + V")
        }
        Witness::BracketCondition { x, y, product, hull_x, hull_y } => {
            ensure(&alg.closure(std::slice::from_ref(x)) == hull_x, "stored <x> is wrong")?;
            ensure(&alg.closure(std::slice::from_ref(y)) == hull_y, "stored <y> is wrong")?;
            ensure(&alg.bracket(x, y) == product, "stored product is wrong")?;
            ensure(!hull_x.sum(hull_y).member(product), "product lies in <x> + <y>")
        }
        Witness::UpperSemimodular { u, b, meet, join: j, intermediate } => {
            ensure(sub(u) && sub(b), "operands must be subalgebras")?;
            ensure(&u.intersect(b) == meet && &join(u, b) == j, "stored meet or join is wrong")?;
            ensure(is_maximal_in(alg, meet, b), "U ^ B is not maximal in B")?;
            ensure(proper_chain(alg, u, intermediate, j), "intermediate is not strictly between U and <U,B>")
        }
        Witness::LowerSemimodular { u, b, meet, join: j, intermediate } => {
            ensure(sub(u) && sub(b), "operands must be subalgebras")?;
            ensure(&u.intersect(b) == meet && &join(u, b) == j, "stored meet or join is wrong")?;
            ensure(is_maximal_in(alg, u, j), "U is not maximal in <U,B>")?;
            ensure(proper_chain(alg, meet, intermediate, b), "intermediate is not strictly between U ^ B and B")
        }
        Witness::DuallyAtomistic { u, maximals, intersection } => {
            ensure(sub(u), "U must be a subalgebra")?;
            let full = alg.full_subspace();
            ensure(u != &full, "L itself is the empty intersection")?;
            for m in maximals {
                ensure(
                    m.contains(u) && is_maximal_in(alg, m, &full),
                    "listed subspace is not a maximal subalgebra above U",
                )?;
            }
            let inter = maximals.iter().fold(full.clone(), |acc, m| acc.intersect(m));
            ensure(&inter == intersection, "stored intersection is wrong")?;
            ensure(&inter != u, "the maximal subalgebras meet in U")?;
            // completeness: no other maximal subalgebra contains U
            let others = enumerate_subspaces(alg.field(), alg.dim(), DEFAULT_ENUMERATION_BUDGET)
                .map_err(|e| e.to_string())?
                .filter(|s| s.contains(u) && !maximals.contains(s) && !s.contains(&inter))
                .any(|s| is_maximal_in(alg, &s, &full));
            ensure(!others, "the list of maximal subalgebras above U is incomplete")
        }
        Witness::UngradedInterval { long, short } => {
            ensure(long.len() != short.len(), "chains have equal length")?;
            ensure(long.first() == short.first() && long.last() == short.last(), "chains have different ends")?;
            for chain in [long, short] {
                for pair in chain.windows(2) {
                    ensure(is_maximal_in(alg, &pair[0], &pair[1]), "chain step is not a maximal subalgebra")?;
                }
            }
            Ok(())
        }
    }
}
