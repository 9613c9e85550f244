//! The verification suite: twelve criteria, each checked on exhaustive or
//! seeded corpora against an independent computation.

use std::collections::{BTreeMap, HashSet};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use leibniz_core::algebra::{LeibnizAlgebra, Orientation, StructureConstants};
use leibniz_core::cyclic::{CyclicModularity, CyclicPresentation};
use leibniz_core::exactfield::{Factorize, Field, Polynomial, PrimeField};
use leibniz_core::families::{
    a25, a25_printed, batten, cyclic_presentations, dim2_gf2, e_plus_center, extraspecial_corpus, family_corpus,
    heisenberg, is_leib_scaling, j_set, leib_scaling, nilpotent_cyclic, norm_form, norm_form_printed, random_dim3,
    CorpusEntry, JSetResult,
};
use leibniz_core::lattice::{
    bracket_condition_at, CheckOutcome, CheckRegistry, LatticeConfig, SubalgebraLattice, Witness,
};
use leibniz_core::linalg::{all_vectors, enumerate_subspaces, Subspace};
use leibniz_core::Verdict;

use crate::document::AlgebraDocument;
use crate::replay::replay_records;
use crate::report::{CheckRecord, Report};
use crate::witness::WitnessDoc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Scope {
    /// Reduced corpora: cyclic sweeps to dimension 3, 20 random algebras, 50 polynomials.
    Quick,
    /// Everything.
    Full,
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub scope: Scope,
    pub seed: u64,
    pub lattice: LatticeConfig,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { scope: Scope::Full, seed: 0, lattice: LatticeConfig::default() }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub number: usize,
    pub title: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub summary: String,
    pub failures: Vec<String>,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2}: {} - {} ({} cases; {})",
            self.number,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.cases,
            self.summary
        )
    }
}

pub struct SuiteRun {
    pub criteria: Vec<CriterionResult>,
    pub report: Report,
}

/// Failures kept per criterion in the report.
const MAX_LISTED_FAILURES: usize = 20;

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    fn finish(self, number: usize, title: &'static str, summary: String) -> CriterionResult {
        CriterionResult {
            number,
            title,
            passed: self.failures.is_empty(),
            cases: self.cases,
            summary,
            failures: self.failures,
        }
    }
}

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).expect("prime")
}

/// Lattice data and every registered check for one corpus algebra.
struct Evaluated {
    id: String,
    alg: LeibnizAlgebra<PrimeField>,
    outcomes: BTreeMap<&'static str, CheckOutcome<PrimeField>>,
    maximals: Vec<Subspace<PrimeField>>,
    frattini: Subspace<PrimeField>,
    nodes: usize,
    supersolvable: Verdict,
    error: Option<String>,
}

impl Evaluated {
    fn verdict(&self, name: &str) -> Verdict {
        self.outcomes.get(name).map_or(Verdict::Unknown, |o| o.verdict)
    }

    fn p(&self) -> u32 {
        self.alg.field().p()
    }
}

fn evaluate(entry: CorpusEntry, config: &LatticeConfig) -> Evaluated {
    let alg = entry.algebra;
    let supersolvable = alg.supersolvable().verdict;
    let mut ev = Evaluated {
        id: entry.id,
        outcomes: BTreeMap::new(),
        maximals: Vec::new(),
        frattini: alg.zero_subspace(),
        nodes: 0,
        supersolvable,
        error: None,
        alg,
    };
    match SubalgebraLattice::build(&ev.alg, config) {
        Ok(lat) => {
            let registry = CheckRegistry::<PrimeField>::default();
            ev.outcomes = registry.iter().map(|c| (c.name(), c.run(&lat, config))).collect();
            ev.maximals = lat.maximal_subalgebras();
            ev.frattini = lat.frattini_ideal();
            ev.nodes = lat.len();
        }
        Err(e) => ev.error = Some(e.to_string()),
    }
    ev
}

/// All corpus algebras, evaluated once and shared by the criteria.
struct Pool {
    entries: Vec<Evaluated>,
    index: BTreeMap<String, usize>,
    presentations: Vec<(String, CyclicPresentation<PrimeField>)>,
}

impl Pool {
    fn build(config: &SuiteConfig) -> Self {
        let full = config.scope == Scope::Full;
        let mut corpus = dim2_gf2();
        corpus.extend(extraspecial_corpus(3));
        corpus.extend(extraspecial_corpus(5));
        let mut presentations = Vec::new();
        for (p, max_n) in [(3u64, 3usize), (5, if full { 4 } else { 3 })] {
            for n in 2..=max_n {
                for pres in cyclic_presentations(p, n) {
                    presentations.push((cyclic_id(&pres), pres));
                }
            }
        }
        corpus.extend(presentations.iter().map(|(id, pres)| CorpusEntry { id: id.clone(), algebra: pres.algebra() }));
        corpus.extend(random_dim3(config.seed, if full { 100 } else { 20 }));
        corpus.extend(family_corpus());
        let mut seen = HashSet::new();
        corpus.retain(|e| seen.insert(e.id.clone()));
        let lattice = config.lattice;
        let entries: Vec<Evaluated> = corpus.into_par_iter().map(|e| evaluate(e, &lattice)).collect();
        let index = entries.iter().enumerate().map(|(i, e)| (e.id.clone(), i)).collect();
        Pool { entries, index, presentations }
    }

    fn get(&self, id: &str) -> &Evaluated {
        &self.entries[self.index[id]]
    }

    fn with_prefix<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a Evaluated> + 'a {
        self.entries.iter().filter(move |e| e.id.starts_with(prefix))
    }
}

fn cyclic_id(pres: &CyclicPresentation<PrimeField>) -> String {
    format!("cyclic[gf{},alphas={}]", pres.field().p(), pres.alphas_text())
}

struct Suite {
    config: SuiteConfig,
    report: Report,
    criteria: Vec<CriterionResult>,
}

impl Suite {
    fn document<F: Field>(&mut self, id: &str, t: &StructureConstants<F>) {
        self.report.add_document(id, AlgebraDocument::from_table(Some(id.to_string()), t));
    }

    /// Stores an asserted verdict about a named algebra.
    #[allow(clippy::too_many_arguments)]
    fn assert_verdict(
        &mut self,
        criterion: usize,
        id: &str,
        table: &StructureConstants<PrimeField>,
        name: &str,
        verdict: Verdict,
        expected: bool,
        witness: Option<WitnessDoc>,
    ) -> bool {
        self.document(id, table);
        let r = CheckRecord::new(format!("c{criterion} {name}"), verdict).subject(id).expect(expected).witness(witness);
        let ok = !r.failed() && verdict != Verdict::Unknown;
        self.report.push(r);
        ok
    }

    fn push(&mut self, c: CriterionResult) {
        let mut r = CheckRecord::new(format!("criterion {}", c.number), Verdict::from_bool(c.passed))
            .expect(true)
            .statement(c.title)
            .note(format!("{} cases; {}", c.cases, c.summary));
        for f in c.failures.iter().take(MAX_LISTED_FAILURES) {
            r = r.note(f.clone());
        }
        if c.failures.len() > MAX_LISTED_FAILURES {
            r = r.note(format!("{} further failures omitted", c.failures.len() - MAX_LISTED_FAILURES));
        }
        self.report.push(r);
        self.criteria.push(c);
    }

    /// Stores every false verdict of the pool with its witness.
    fn record_pool_witnesses(&mut self, pool: &Pool) {
        for e in &pool.entries {
            let false_outcomes: Vec<_> = e.outcomes.values().filter(|o| o.verdict == Verdict::False).collect();
            if false_outcomes.is_empty() {
                continue;
            }
            self.document(&e.id, e.alg.table());
            for o in false_outcomes {
                let w = o.witness.as_ref().map(|w| WitnessDoc::from_lattice(w, e.alg.field()));
                self.report.push(CheckRecord::new(o.name, Verdict::False).subject(e.id.clone()).witness(w));
            }
        }
    }
}

fn identity_by_expansion<F: Field>(
    t: &StructureConstants<F>,
    i: usize,
    j: usize,
    k: usize,
) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let f = t.field();
    let unit = |m: usize| (0..t.dim()).map(|c| if c == m { f.one() } else { f.zero() }).collect::<Vec<_>>();
    let (x, y, z) = (unit(i), unit(j), unit(k));
    let lhs = t.bracket(&x, &t.bracket(&y, &z));
    let a = t.bracket(&t.bracket(&x, &y), &z);
    let b = t.bracket(&t.bracket(&x, &z), &y);
    (lhs, a.iter().zip(&b).map(|(p, q)| f.sub(p, q)).collect())
}

fn holds_by_expansion<F: Field>(t: &StructureConstants<F>) -> bool {
    let n = t.dim();
    (0..n).all(|i| {
        (0..n).all(|j| {
            (0..n).all(|k| {
                let (l, r) = identity_by_expansion(t, i, j, k);
                l == r
            })
        })
    })
}

fn criterion_1(s: &mut Suite) {
    let f = gf(3);
    let mut t = Tally::default();
    let printed = a25_printed(f);
    let violation = printed.validate().err();
    let (lhs, rhs) = identity_by_expansion(&printed, 0, 0, 0);
    let expected_lhs = vec![0, 0, 0, 1];
    t.case(lhs == expected_lhs && rhs == vec![0; 4], || format!("expansion at (x1,x1,x1) gives {lhs:?} and {rhs:?}"));
    let matches = violation.as_ref().is_some_and(|v| (v.i, v.j, v.k) == (0, 0, 0) && v.lhs == lhs && v.rhs == rhs);
    t.case(matches, || format!("validator reports {:?}", violation.as_ref().map(|v| v.to_string())));
    let w = violation.as_ref().map(|v| WitnessDoc::from_violation(v, &f));
    let ok = s.assert_verdict(
        1,
        "a25-printed[gf3]",
        &printed,
        "leibniz-identity",
        Verdict::from_bool(violation.is_none()),
        false,
        w,
    );
    t.case(ok, || "a25 as printed was not refuted".into());
    let opposite = printed.opposite();
    t.case(holds_by_expansion(&opposite) && opposite.validate().is_ok(), || "opposite of a25 fails".into());
    t.case(&opposite == a25(f).table(), || "a25 constructor differs from the opposite table".into());
    let ok = s.assert_verdict(
        1,
        "a25[gf3]",
        &opposite,
        "leibniz-identity",
        Verdict::from_bool(opposite.validate().is_ok()),
        true,
        None,
    );
    t.case(ok, || "a25 opposite rejected".into());
    let mut orientations = Vec::new();
    for (index, alpha) in [(14, None), (15, None), (16, None), (17, Some(1)), (18, Some(0)), (18, Some(1)), (19, None)]
    {
        let label = match alpha {
            Some(a) => format!("batten{index}[gf3,alpha={a}]"),
            None => format!("batten{index}[gf3]"),
        };
        match batten(f, index, alpha) {
            Ok((alg, orientation)) => {
                let printed = match orientation {
                    Orientation::AsGiven => alg.table().clone(),
                    Orientation::Opposite => alg.opposite_table(),
                };
                let passes = holds_by_expansion(&printed) || holds_by_expansion(&printed.opposite());
                t.case(passes, || format!("{label} fails in both orientations"));
                orientations.push(format!("{label}: {orientation:?}"));
            }
            Err(e) => t.case(false, || format!("{label}: {e}")),
        }
    }
    let printed69 = norm_form_printed(f);
    let v69 = printed69.validate().err();
    let confirmed = v69.as_ref().is_some_and(|v| {
        let (l, r) = identity_by_expansion(&printed69, v.i, v.j, v.k);
        l != r && l == v.lhs && r == v.rhs
    });
    t.case(confirmed, || {
        format!("printed norm-form violation {:?} not confirmed by expansion", v69.as_ref().map(|v| v.to_string()))
    });
    let w = v69.as_ref().map(|v| WitnessDoc::from_violation(v, &f));
    s.assert_verdict(
        1,
        "norm-form-printed[gf3]",
        &printed69,
        "leibniz-identity",
        Verdict::from_bool(v69.is_none()),
        false,
        w,
    );
    if let Some(r) = s.report.checks.last_mut() {
        r.notes.push("the printed table is flagged; the corrected table uses [y, x] = -z".into());
    }
    let (b14, _) = batten(f, 14, None).expect("valid");
    let both = holds_by_expansion(b14.table()) && holds_by_expansion(&b14.opposite_table());
    t.case(both, || "batten14 does not pass in both orientations".into());
    let summary = format!("a25 printed fails at (x1,x1,x1); orientations {}", orientations.join(", "));
    let c = t.finish(1, "identity validator on printed tables", summary);
    s.push(c);
}

fn criterion_2(s: &mut Suite, pool: &Pool) {
    let mut t = Tally::default();
    for (id, pres) in pool.presentations.iter().filter(|(_, p)| p.field().p() == 5 && p.dim() >= 3) {
        let e = pool.get(id);
        let Ok(fac) = pres.factor() else {
            t.case(false, || format!("{id}: factorization failed"));
            continue;
        };
        let mut kernels: Vec<Subspace<PrimeField>> =
            pres.maximal_subalgebras().expect("factored above").into_iter().map(|(_, s)| s).collect();
        kernels.sort_by(|a, b| a.canonical_cmp(b));
        let mut coatoms = e.maximals.clone();
        coatoms.sort_by(|a, b| a.canonical_cmp(b));
        t.case(e.error.is_none() && kernels == coatoms, || {
            format!(
                "{id}: {} kernels vs {} co-atoms {}",
                kernels.len(),
                coatoms.len(),
                e.error.clone().unwrap_or_default()
            )
        });
        t.case(coatoms.len() == fac.distinct() && pres.field_exceeds_factor_count() == Ok(Some(true)), || {
            format!("{id}: {} co-atoms but {} distinct factors", coatoms.len(), fac.distinct())
        });
    }
    let c = t.finish(
        2,
        "cyclic maximal subalgebras from kernels equal the lattice co-atoms",
        "set equality of canonical bases".into(),
    );
    s.push(c);
}

fn criterion_3(s: &mut Suite, config: &LatticeConfig) {
    let mut t = Tally::default();
    let registry = CheckRegistry::<PrimeField>::default();
    for p in [2u64, 3, 5] {
        for alpha in [0i64, 1] {
            let pres = CyclicPresentation::from_i64(gf(p), &[alpha]).expect("n = 2");
            let alg = pres.algebra();
            let id = cyclic_id(&pres);
            let v = SubalgebraLattice::build(&alg, config)
                .map(|lat| registry.run("distributive", &lat, config).expect("registered").verdict)
                .unwrap_or(Verdict::Unknown);
            let ok = s.assert_verdict(3, &id, alg.table(), "distributive", v, true, None);
            t.case(ok, || format!("{id}: distributive is {v}"));
        }
    }
    let ab = LeibnizAlgebra::abelian(gf(2), 2);
    let lat = SubalgebraLattice::build(&ab, config).expect("small");
    let o = registry.run("distributive", &lat, config).expect("registered");
    let diamond = match &o.witness {
        Some(Witness::Distributive { a, b, c, .. }) => {
            [a, b, c].iter().all(|x| x.dim() == 1) && a != b && b != c && a != c
        }
        _ => false,
    };
    t.case(lat.len() == 5 && diamond, || format!("abelian GF(2)^2: {} nodes, witness {:?}", lat.len(), o.witness));
    let w = o.witness.as_ref().map(|w| WitnessDoc::from_lattice(w, ab.field()));
    let ok = s.assert_verdict(3, "abelian[gf2,n=2]", ab.table(), "distributive", o.verdict, false, w);
    t.case(ok, || "abelian GF(2)^2 reported distributive".into());
    let c = t.finish(3, "two-dimensional cyclic algebras are distributive", "abelian GF(2)^2 is the diamond M3".into());
    s.push(c);
}

fn criterion_4(s: &mut Suite, config: &LatticeConfig) {
    let mut t = Tally::default();
    let registry = CheckRegistry::<PrimeField>::default();
    for p in [3u64, 5] {
        for n in 2..=4 {
            let alg = nilpotent_cyclic(gf(p), n);
            let id = format!("nilpotent-cyclic[gf{p},n={n}]");
            let v = SubalgebraLattice::build(&alg, config)
                .map(|lat| registry.run("upper-semimodular", &lat, config).expect("registered").verdict)
                .unwrap_or(Verdict::Unknown);
            let ok = s.assert_verdict(4, &id, alg.table(), "upper-semimodular", v, true, None);
            t.case(ok, || format!("{id}: upper-semimodular is {v}"));
        }
    }
    let c = t.finish(4, "nilpotent cyclic algebras are upper semi-modular", "n = 2, 3, 4 over GF(3) and GF(5)".into());
    s.push(c);
}

fn criterion_5(s: &mut Suite, pool: &Pool) {
    let mut t = Tally::default();
    let mut counts = BTreeMap::new();
    for (id, pres) in pool.presentations.iter().filter(|(_, p)| p.field().p() == 5) {
        let e = pool.get(id);
        let class = pres.classify_modular();
        *counts.entry(class.name()).or_insert(0) += 1;
        let (ma, ml) = (e.verdict("modular-algebra"), e.verdict("modular-lattice"));
        t.case(ma.known() == Some(class.is_modular()) && ml == ma, || {
            format!("{id}: classified {}, modular-algebra {ma}, modular-lattice {ml}", class.name())
        });
    }
    for (alphas, expected) in [
        ("0,0", CyclicModularity::Nilpotent),
        ("0,1", CyclicModularity::Solvable),
        ("1,0", CyclicModularity::NotModular),
    ] {
        let pres = CyclicPresentation::parse(gf(5), alphas).expect("valid");
        let e = pool.get(&cyclic_id(&pres));
        let v = e.verdict("modular-algebra");
        let w = e
            .outcomes
            .get("modular-algebra")
            .and_then(|o| o.witness.as_ref())
            .map(|w| WitnessDoc::from_lattice(w, e.alg.field()));
        let class = pres.classify_modular();
        t.case(class == expected, || format!("alphas ({alphas}) classified {}", class.name()));
        let ok = s.assert_verdict(5, &e.id, e.alg.table(), "modular-algebra", v, expected.is_modular(), w);
        t.case(ok, || format!("alphas ({alphas}): modular-algebra is {v}"));
    }
    let summary = counts.iter().map(|(k, v)| format!("{k} {v}")).collect::<Vec<_>>().join(", ");
    let c = t.finish(5, "cyclic modularity classification matches the lattice", summary);
    s.push(c);
}

const FOUR_WAY: [&str; 4] = ["modular-algebra", "weak-quasi-ideal", "bracket-condition", "modular-lattice"];

fn criterion_6(s: &mut Suite, pool: &Pool) {
    let mut t = Tally::default();
    let mut review = Vec::new();
    let (mut modular, mut not_modular) = (0, 0);
    let in_scope = |e: &&Evaluated| {
        e.id.starts_with("dim2[")
            || e.id.starts_with("extraspecial[")
            || e.id.starts_with("random3[")
            || (e.id.starts_with("cyclic[gf3,") && e.alg.dim() <= 3)
    };
    for e in pool.entries.iter().filter(in_scope) {
        let v: Vec<Verdict> = FOUR_WAY.iter().map(|n| e.verdict(n)).collect();
        if e.error.is_some() || v.contains(&Verdict::Unknown) {
            t.case(false, || format!("{}: undecided ({:?})", e.id, e.error));
            continue;
        }
        if v.iter().all(|x| *x == v[0]) {
            if v[0].is_true() {
                modular += 1;
            } else {
                not_modular += 1;
            }
            t.cases += 1;
            continue;
        }
        let lone_identity_check = v[1..].iter().all(|x| *x == v[1]) && v[0] != v[1];
        let describe = format!(
            "{}: {}",
            e.id,
            FOUR_WAY.iter().zip(&v).map(|(n, x)| format!("{n} {x}")).collect::<Vec<_>>().join(", ")
        );
        if lone_identity_check && e.supersolvable == Verdict::False {
            review.push(describe);
            t.cases += 1;
        } else {
            t.case(false, || describe);
        }
    }
    let mut summary = format!("{modular} modular, {not_modular} not modular, {} for review", review.len());
    for r in review {
        summary += &format!("; review: {r}");
    }
    let c = t.finish(6, "four characterizations of modularity agree", summary);
    s.push(c);
}

fn criterion_7(s: &mut Suite, pool: &Pool) {
    let mut t = Tally::default();
    let mut counts = [0usize; 2];
    for e in pool.with_prefix("extraspecial[") {
        let j = j_set(&e.alg, u64::MAX).expect("finite field");
        let (usm, ma, ja) = (e.verdict("upper-semimodular"), e.verdict("modular-algebra"), j.abelian_ideal());
        counts[usize::from(ma.is_true())] += 1;
        t.case(usm == ma && ma == ja && ja != Verdict::Unknown, || {
            format!("{}: upper-semimodular {usm}, modular {ma}, J abelian ideal {ja}", e.id)
        });
        if let Err(err) = j.recheck(&e.alg) {
            t.case(false, || format!("{}: J data does not recheck: {err}", e.id));
        }
        if let Some(w) = WitnessDoc::from_j_set(&j, e.alg.field()) {
            s.document(&e.id, e.alg.table());
            s.report.push(CheckRecord::new("j-abelian-ideal", Verdict::False).subject(e.id.clone()).witness(Some(w)));
        }
    }
    for p in [3u64, 5] {
        let f = gf(p);
        let alg = norm_form(f);
        let id = format!("norm-form[gf{p}]");
        let e = pool.get(&id);
        let j = j_set(&alg, u64::MAX).expect("finite field");
        let z = alg.unit(2);
        let ma = e.verdict("modular-algebra");
        if p == 3 {
            let ok = s.assert_verdict(7, &id, alg.table(), "modular-algebra", ma, true, None);
            t.case(ok, || format!("{id}: modular is {ma}"));
            let is_span_z = matches!(&j, JSetResult::Subspace { j, abelian_ideal: true } if *j == alg.span(std::slice::from_ref(&z)));
            t.case(is_span_z, || format!("{id}: J is {j:?}"));
        } else {
            let w = e
                .outcomes
                .get("modular-algebra")
                .and_then(|o| o.witness.as_ref())
                .map(|w| WitnessDoc::from_lattice(w, &f));
            let ok = s.assert_verdict(7, &id, alg.table(), "modular-algebra", ma, false, w);
            t.case(ok, || format!("{id}: modular is {ma}"));
            let four_z: Vec<u32> = z.iter().map(|c| f.mul(c, &4)).collect();
            let pair_ok = match &j {
                JSetResult::NotASubspace { x, y, sum_square } => {
                    alg.square(x).iter().all(|c| *c == 0)
                        && alg.square(y).iter().all(|c| *c == 0)
                        && *sum_square == four_z
                        && alg.square(&x.iter().zip(y).map(|(a, b)| f.add(a, b)).collect::<Vec<_>>()) == four_z
                }
                _ => false,
            };
            t.case(pair_ok, || format!("{id}: J witness is {j:?}"));
            let wj = WitnessDoc::from_j_set(&j, &f);
            s.assert_verdict(7, &id, alg.table(), "j-abelian-ideal", j.abelian_ideal(), false, wj);
            let x2y = alg.vector_i64(&[1, 2, 0]);
            let x3y = alg.vector_i64(&[1, 3, 0]);
            let bw = bracket_condition_at(&alg, &x2y, &x3y);
            t.case(bw.is_some(), || format!("{id}: (x+2y, x+3y) satisfies the bracket condition"));
            let bw = bw.map(|w| WitnessDoc::from_lattice(&w, &f));
            s.assert_verdict(7, &id, alg.table(), "bracket-condition at (x+2y, x+3y)", Verdict::False, false, bw);
        }
    }
    let summary = format!("{} modular, {} not modular extraspecial algebras", counts[1], counts[0]);
    let c = t.finish(7, "extraspecial: upper semi-modular iff modular iff J is an abelian ideal", summary);
    s.push(c);
}

fn criterion_8(s: &mut Suite, pool: &Pool) {
    let mut t = Tally::default();
    let mut counts = [0usize; 2];
    let solvable = pool.entries.iter().filter(|e| matches!(e.p(), 3 | 5) && e.alg.dim() <= 4 && e.alg.is_solvable());
    for e in solvable {
        let (lsm, ja) = (e.verdict("lower-semimodular"), e.verdict("j-algebra"));
        let ss = e.supersolvable;
        if ss != Verdict::Unknown {
            counts[usize::from(ss.is_true())] += 1;
        }
        t.case(lsm == ja && ja == ss && ss != Verdict::Unknown, || {
            let w = |n: &str| {
                e.outcomes.get(n).and_then(|o| o.witness.as_ref()).map(|w| w.describe(&e.alg)).unwrap_or_default()
            };
            format!(
                "{}: lower-semimodular {lsm} {}, j-algebra {ja} {}, supersolvable {ss}",
                e.id,
                w("lower-semimodular"),
                w("j-algebra")
            )
        });
    }
    let summary = format!("{} supersolvable, {} not", counts[1], counts[0]);
    let c = t.finish(8, "solvable: lower semi-modular iff J-algebra iff supersolvable", summary);
    s.push(c);
}

fn criterion_9(s: &mut Suite, pool: &Pool, config: &LatticeConfig) {
    let mut t = Tally::default();
    let registry = CheckRegistry::<PrimeField>::default();
    let f = gf(3);
    for r in 1..=3 {
        let alg = leib_scaling(f, r);
        let id = format!("leib-scaling[gf3,r={r}]");
        let lat = SubalgebraLattice::build(&alg, config).expect("small");
        let v = registry.run("dually-atomistic", &lat, config).expect("registered").verdict;
        let ok = s.assert_verdict(9, &id, alg.table(), "dually-atomistic", v, true, None);
        t.case(ok && lat.frattini_ideal().is_zero() && is_leib_scaling(&alg), || format!("{id}: dually atomistic {v}"));
    }
    let h = heisenberg(f);
    let lat = SubalgebraLattice::build(&h, config).expect("small");
    let o = registry.run("dually-atomistic", &lat, config).expect("registered");
    let w = o.witness.as_ref().map(|w| WitnessDoc::from_lattice(w, &f));
    let ok = s.assert_verdict(9, "heisenberg[gf3]", h.table(), "dually-atomistic", o.verdict, false, w);
    let z = h.span(&[h.unit(2)]);
    t.case(ok && lat.frattini_ideal() == z, || {
        format!("heisenberg: dually atomistic {}, frattini {}", o.verdict, h.describe(&lat.frattini_ideal()))
    });
    let mut da = 0;
    for e in pool.entries.iter().filter(|e| e.verdict("dually-atomistic").is_true()) {
        da += 1;
        t.case(e.frattini.is_zero(), || {
            format!("{}: dually atomistic with frattini ideal {}", e.id, e.alg.describe(&e.frattini))
        });
    }
    let c = t.finish(9, "dually atomistic algebras are phi-free", format!("{da} dually atomistic corpus algebras"));
    s.push(c);
}

fn criterion_10(s: &mut Suite, config: &LatticeConfig) {
    let mut t = Tally::default();
    let registry = CheckRegistry::<PrimeField>::default();
    let f = gf(3);
    let modular = |alg: &LeibnizAlgebra<PrimeField>| {
        let lat = SubalgebraLattice::build(alg, config).expect("small");
        let ma = registry.run("modular-algebra", &lat, config).expect("registered");
        let ml = registry.run("modular-lattice", &lat, config).expect("registered");
        (ma, ml.verdict)
    };
    for (id, alg) in [("e-plus-center-norm-form[gf3,c=1]", e_plus_center(&norm_form(f), 1)), ("a25[gf3]", a25(f))] {
        let (ma, ml) = modular(&alg);
        let ok = s.assert_verdict(10, id, alg.table(), "modular-algebra", ma.verdict, true, None);
        t.case(ok && ml.is_true(), || format!("{id}: modular-algebra {}, modular-lattice {ml}", ma.verdict));
    }
    let (b14, _) = batten(f, 14, None).expect("valid");
    let (ma, _) = modular(&b14);
    let w = ma.witness.as_ref().map(|w| WitnessDoc::from_lattice(w, &f));
    let ok = s.assert_verdict(10, "batten14[gf3]", b14.table(), "modular-algebra", ma.verdict, false, w);
    t.case(ok, || format!("batten14: modular-algebra {}", ma.verdict));
    let bw = bracket_condition_at(&b14, &b14.unit(0), &b14.unit(1));
    let exact = match &bw {
        Some(Witness::BracketCondition { x, y, product, hull_x, hull_y }) => {
            *x == b14.unit(0)
                && *y == b14.unit(1)
                && *product == b14.unit(3)
                && hull_x.sum(hull_y) == b14.span(&[b14.unit(0), b14.unit(1), b14.unit(2)])
        }
        _ => false,
    };
    t.case(exact, || format!("batten14: [x1, x2] witness is {bw:?}"));
    let bw = bw.map(|w| WitnessDoc::from_lattice(&w, &f));
    s.assert_verdict(10, "batten14[gf3]", b14.table(), "bracket-condition at (x1, x2)", Verdict::False, false, bw);
    let summary = "[x1, x2] = x4 lies outside <x1> + <x2> = span{x1, x2, x3} in batten14".into();
    let c = t.finish(10, "modularity of the named examples", summary);
    s.push(c);
}

fn criterion_11(s: &mut Suite, pool: &Pool) {
    let mut t = Tally::default();
    for e in pool.entries.iter().filter(|e| matches!(e.p(), 3 | 5) && e.verdict("upper-semimodular").is_true()) {
        t.case(e.supersolvable.is_true(), || {
            format!("{}: upper semi-modular but supersolvable is {}", e.id, e.supersolvable)
        });
    }
    let c = t.finish(11, "upper semi-modular implies supersolvable", "over GF(3) and GF(5)".into());
    s.push(c);
}

/// `[n, k]_q` by the recurrence `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
fn q_binomial(n: u32, k: u32, q: u128) -> u128 {
    if k == 0 || k == n {
        return 1;
    }
    if k > n {
        return 0;
    }
    q_binomial(n - 1, k - 1, q) + q.pow(k) * q_binomial(n - 1, k, q)
}

fn monic_polys_of_degree(f: &PrimeField, d: usize) -> Vec<Polynomial<PrimeField>> {
    all_vectors(f, d, u64::MAX)
        .expect("finite")
        .map(|mut c| {
            c.push(1);
            Polynomial::from_coeffs(*f, c)
        })
        .collect()
}

fn irreducible_by_trial_division(p: &Polynomial<PrimeField>) -> bool {
    let d = p.degree().unwrap_or(0);
    d >= 1 && (1..=d / 2).all(|k| monic_polys_of_degree(p.field(), k).iter().all(|q| !q.divides(p)))
}

fn criterion_12(s: &mut Suite) {
    let mut t = Tally::default();
    for q in [2u64, 3, 5] {
        let f = gf(q);
        for n in 0..=4u32 {
            let mut by_dim = vec![0u128; n as usize + 1];
            for sub in enumerate_subspaces(&f, n as usize, u64::MAX).expect("finite") {
                by_dim[sub.dim()] += 1;
            }
            for k in 0..=n {
                let expected = q_binomial(n, k, q as u128);
                t.case(by_dim[k as usize] == expected, || {
                    format!("q={q}, n={n}, k={k}: {} vs {expected}", by_dim[k as usize])
                });
            }
        }
    }
    let count = if s.config.scope == Scope::Full { 200 } else { 50 };
    let mut rng = ChaCha8Rng::seed_from_u64(s.config.seed);
    for _ in 0..count {
        let p = [2u64, 3, 5, 7][rng.gen_range(0..4)];
        let f = gf(p);
        let d = rng.gen_range(1..=8);
        let mut c: Vec<u32> = (0..d).map(|_| rng.gen_range(0..f.p())).collect();
        c.push(rng.gen_range(1..f.p()));
        let poly = Polynomial::from_coeffs(f, c);
        match f.factor(&poly) {
            Ok(fac) => {
                t.case(fac.product(&f) == poly, || format!("GF({p}): product of factors of {poly} differs"));
                for fp in &fac.factors {
                    let monic = fp.factor.leading() == Some(&1);
                    t.case(monic && irreducible_by_trial_division(&fp.factor), || {
                        format!("GF({p}): factor {} of {poly} is not monic irreducible", fp.factor)
                    });
                }
            }
            Err(e) => t.case(false, || format!("GF({p}): {poly}: {e}")),
        }
    }
    let json = s.report.to_json();
    let stored = crate::report::Report::parse_json(&json).expect("round trip");
    let replays = replay_records(&stored);
    let replayed = replays.len();
    let with_witness = stored.checks.iter().filter(|c| c.witness.is_some()).count();
    t.case(replayed >= with_witness, || format!("{replayed} replays for {with_witness} witnesses"));
    for r in &replays {
        t.case(r.verdict.is_true(), || {
            format!("replay of {} on {:?} failed: {}", r.name, r.subject, r.notes.join("; "))
        });
    }
    let mut tampered = stored.clone();
    let corrupted = tampered.checks.iter_mut().find_map(|c| match &mut c.witness {
        Some(WitnessDoc::ModularIdentity { lhs, rhs, .. }) => {
            *lhs = rhs.clone();
            Some(())
        }
        _ => None,
    });
    let rejected = corrupted.is_some() && replay_records(&tampered).iter().any(|r| r.verdict.is_false());
    t.case(rejected, || "replay accepted a corrupted witness".into());
    let summary = format!("{replayed} stored witnesses replayed, {count} polynomials factored");
    let c = t.finish(12, "subspace counts, factorization and witness replay", summary);
    s.push(c);
}

/// Runs all criteria. The report holds one asserted record per criterion,
/// the asserted verdicts about named algebras and every false verdict of the
/// corpus with its witness.
pub fn run(config: SuiteConfig) -> SuiteRun {
    let started = Instant::now();
    let mut s = Suite { config, report: Report::new("paper-suite", String::new()), criteria: Vec::new() };
    let pool = Pool::build(&config);
    let lattice = config.lattice;
    criterion_1(&mut s);
    criterion_2(&mut s, &pool);
    criterion_3(&mut s, &lattice);
    criterion_4(&mut s, &lattice);
    criterion_5(&mut s, &pool);
    criterion_6(&mut s, &pool);
    criterion_7(&mut s, &pool);
    criterion_8(&mut s, &pool);
    criterion_9(&mut s, &pool, &lattice);
    criterion_10(&mut s, &lattice);
    criterion_11(&mut s, &pool);
    s.record_pool_witnesses(&pool);
    criterion_12(&mut s);
    let undecided: Vec<String> =
        pool.entries.iter().filter_map(|e| e.error.as_ref().map(|err| format!("{}: {err}", e.id))).collect();
    s.report.details = Some(serde_json::json!({
        "scope": format!("{:?}", config.scope).to_lowercase(),
        "seed": config.seed,
        "corpus_size": pool.entries.len(),
        "unbuilt_lattices": undecided,
    }));
    let digest = serde_json::to_string(&s.report.documents).expect("documents serialize");
    s.report.input_digest = crate::document::digest_bytes(digest.as_bytes());
    s.report.finish(started);
    SuiteRun { criteria: s.criteria, report: s.report }
}
