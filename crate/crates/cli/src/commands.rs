use std::io::Read;
use std::path::Path;
use std::time::Instant;

use serde_json::{json, Value};

use leibniz_core::algebra::{LeibnizAlgebra, StructureConstants};
use leibniz_core::cyclic::{find_generator, CyclicPresentation};
use leibniz_core::exactfield::{Factorize, Field, FieldDescriptor, PrimeField, Rationals};
use leibniz_core::families::{
    has_central_square, is_almost_abelian, is_extraspecial, is_leib_scaling, j_set, AnyAlgebra, FamilyParams,
    FamilyRegistry, JSetResult,
};
use leibniz_core::lattice::{to_dot, CheckRegistry, LatticeConfig, SubalgebraLattice};
use leibniz_core::linalg::Subspace;
use leibniz_core::Verdict;

use crate::document::{digest_bytes, AlgebraDocument, AnyTable};
use crate::error::CliError;
use crate::report::{emit, CheckRecord, Report};
use crate::witness::WitnessDoc;

pub const INPUT: &str = "input";

/// Reads a file, or standard input for `-`.
pub fn read_input(path: &Path) -> Result<String, CliError> {
    let io = |source| CliError::Io { path: path.display().to_string(), source };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(io)
}

fn load(path: &Path) -> Result<(AlgebraDocument, String), CliError> {
    let text = read_input(path)?;
    Ok((AlgebraDocument::parse_json(&text)?, digest_bytes(text.as_bytes())))
}

pub fn basis_json<F: Field>(s: &Subspace<F>) -> Value {
    Value::from(
        s.basis_vectors().map(|v| v.iter().map(|c| s.field().format(c)).collect::<Vec<_>>()).collect::<Vec<_>>(),
    )
}

fn series_json<F: Field>(list: &[Subspace<F>]) -> Value {
    Value::from(list.iter().map(basis_json).collect::<Vec<_>>())
}

pub fn validate(path: &Path) -> Result<Report, CliError> {
    let started = Instant::now();
    let (doc, digest) = load(path)?;
    let mut report = Report::new("validate", digest);
    fn run<F: Field>(t: &StructureConstants<F>, report: &mut Report) {
        let violation = t.validate().err();
        report.push(
            CheckRecord::new("leibniz-identity", Verdict::from_bool(violation.is_none()))
                .subject(INPUT)
                .expect(true)
                .statement("[x,[y,z]] = [[x,y],z] - [[x,z],y] on every basis triple")
                .witness(violation.as_ref().map(|v| WitnessDoc::from_violation(v, t.field()))),
        );
        if violation.is_some() {
            let opposite = t.opposite().validate().err();
            report.push(
                CheckRecord::new("opposite-identity", Verdict::from_bool(opposite.is_none()))
                    .subject(INPUT)
                    .statement("the table with [x,y] replaced by [y,x] satisfies the right identity"),
            );
        }
    }
    match doc.table()? {
        AnyTable::Finite(t) => run(&t, &mut report),
        AnyTable::Rational(t) => run(&t, &mut report),
    }
    report.add_document(INPUT, doc);
    report.finish(started);
    Ok(report)
}

fn info(name: &str, v: Verdict) -> CheckRecord {
    CheckRecord::new(name, v).subject(INPUT)
}

fn analyze_generic<F: Factorize>(alg: &LeibnizAlgebra<F>, budget: u64, report: &mut Report) -> Value {
    let inv = alg.invariants();
    let j = j_set(alg, budget);
    let mut details = json!({
        "dim": alg.dim(),
        "leib": basis_json(&inv.leib),
        "center": basis_json(&inv.center),
        "lower_central": series_json(&inv.lower_central),
        "derived": series_json(&inv.derived),
        "nilpotent": inv.nilpotent,
        "nilpotency_class": inv.nilpotency_class,
        "solvable": inv.solvable,
        "is_lie": inv.is_lie,
        "supersolvable": inv.supersolvable,
        "flag": inv.flag.as_deref().map(series_json),
        "extraspecial": is_extraspecial(alg),
        "almost_abelian": is_almost_abelian(alg),
        "leib_scaling": is_leib_scaling(alg),
        "central_square": has_central_square(alg),
    });
    let generator = find_generator(alg);
    report.push(info("nilpotent", Verdict::from_bool(inv.nilpotent)));
    report.push(info("solvable", Verdict::from_bool(inv.solvable)));
    report.push(info("lie", Verdict::from_bool(inv.is_lie)));
    report.push(info("supersolvable", inv.supersolvable));
    report.push(info("cyclic", generator.verdict()).statement("some element generates L"));
    let mut j_record = info("j-abelian-ideal", Verdict::Unknown).statement("J = {x : x^2 = 0} is an abelian ideal");
    match &j {
        Ok(r) => {
            j_record.verdict = r.abelian_ideal();
            j_record.witness = WitnessDoc::from_j_set(r, alg.field());
            details["j_set"] = match r {
                JSetResult::Subspace { j, abelian_ideal } => {
                    json!({"kind": "subspace", "basis": basis_json(j), "abelian_ideal": abelian_ideal})
                }
                JSetResult::NotASubspace { .. } => json!({"kind": "not-a-subspace"}),
                JSetResult::Unknown { note } => json!({"kind": "unknown", "note": note}),
            };
            if let JSetResult::Unknown { note } = r {
                j_record = j_record.note(note.clone());
            }
        }
        Err(e) => j_record = j_record.note(e.to_string()),
    }
    report.push(j_record);
    if alg.field().order().is_some() {
        for (key, result) in
            [("nilradical", alg.nilradical(budget)), ("radical", alg.radical(budget)), ("socle", alg.socle(budget))]
        {
            details[key] = match result {
                Ok(s) => basis_json(&s),
                Err(e) => json!({"unknown": e.to_string()}),
            };
        }
    }
    details
}

pub fn analyze(path: &Path, config: &LatticeConfig) -> Result<Report, CliError> {
    let started = Instant::now();
    let (doc, digest) = load(path)?;
    let mut report = Report::new("analyze", digest);
    let details = match doc.algebra()? {
        AnyAlgebra::Finite(a) => analyze_generic(&a, config.max_subspaces, &mut report),
        AnyAlgebra::Rational(a) => analyze_generic(&a, config.max_subspaces, &mut report),
    };
    report.details = Some(details);
    report.add_document(INPUT, doc);
    report.finish(started);
    Ok(report)
}

/// Requested checks with their asserted values.
pub struct LatticeRequest {
    pub checks: Vec<String>,
    pub expect: Vec<(String, bool)>,
    pub assert: bool,
    pub dot: Option<std::path::PathBuf>,
}

pub fn lattice_records(
    lat: &SubalgebraLattice<PrimeField>,
    config: &LatticeConfig,
    names: &[String],
) -> Result<Vec<CheckRecord>, CliError> {
    let registry = CheckRegistry::<PrimeField>::default();
    names
        .iter()
        .map(|name| {
            let check = registry.get(name).ok_or_else(|| {
                CliError::Input(format!("unknown check {name:?}; known checks: {}", registry.names().join(", ")))
            })?;
            let o = check.run(lat, config);
            let mut r = CheckRecord::new(name.clone(), o.verdict)
                .statement(check.description())
                .witness(o.witness.as_ref().map(|w| WitnessDoc::from_lattice(w, lat.algebra().field())));
            if let Some(n) = o.note {
                r = r.note(n);
            }
            Ok(r)
        })
        .collect()
}

pub fn lattice(path: &Path, req: &LatticeRequest, config: &LatticeConfig) -> Result<Report, CliError> {
    let started = Instant::now();
    let (doc, digest) = load(path)?;
    let alg = doc.finite_algebra()?;
    let lat = SubalgebraLattice::build(&alg, config)?;
    let registry = CheckRegistry::<PrimeField>::default();
    let names: Vec<String> = if req.checks.is_empty() {
        registry.names().iter().map(|s| s.to_string()).collect()
    } else {
        req.checks.clone()
    };
    if let Some((unknown, _)) = req.expect.iter().find(|(n, _)| !names.contains(n)) {
        return Err(CliError::Input(format!("--expect names {unknown:?}, which is not among the requested checks")));
    }
    let mut report = Report::new("lattice", digest);
    for mut r in lattice_records(&lat, config, &names)? {
        let expected = req.expect.iter().find(|(n, _)| *n == r.name).map(|&(_, e)| e);
        r.expected = expected.or(req.assert.then_some(true));
        report.push(r.subject(INPUT));
    }
    let maximal = lat.maximal_subalgebras();
    let frattini = lat.frattini_ideal();
    report.details = Some(json!({
        "nodes": lat.len(),
        "covers": lat.cover_count(),
        "maximal_subalgebras": series_json(&maximal),
        "frattini_ideal": basis_json(&frattini),
        "chain_length": lat.chain_length(),
    }));
    if let Some(path) = &req.dot {
        emit(&to_dot(&lat), Some(path))?;
    }
    report.add_document(INPUT, doc);
    report.finish(started);
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum CyclicAction {
    /// Modularity type from the coefficients.
    Classify,
    /// The polynomial p(x) and its irreducible factors.
    Factor,
    /// One maximal subalgebra per distinct irreducible factor.
    Maximals,
    /// Primary decomposition with respect to right multiplication by a.
    Decompose,
}

fn poly_json<F: Field>(p: &leibniz_core::exactfield::Polynomial<F>) -> Value {
    json!(p.to_string())
}

fn cyclic_generic<F: Factorize>(
    pres: &CyclicPresentation<F>,
    action: CyclicAction,
    report: &mut Report,
) -> Result<Value, CliError> {
    let alg = pres.algebra();
    let field_err = |e: leibniz_core::exactfield::FieldError| CliError::Unsupported(e.to_string());
    let p = pres.char_poly();
    let mut details = json!({ "alphas": pres.alphas_text(), "polynomial": poly_json(&p) });
    match action {
        CyclicAction::Classify => {
            let class = pres.classify_modular();
            details["classification"] = json!(class.name());
            details["modular"] = json!(class.is_modular());
        }
        CyclicAction::Factor => {
            let fac = pres.factor().map_err(field_err)?;
            details["factors"] = Value::from(
                fac.factors
                    .iter()
                    .map(|fp| json!({"factor": poly_json(&fp.factor), "multiplicity": fp.multiplicity}))
                    .collect::<Vec<_>>(),
            );
            report.push(
                CheckRecord::new("factor-product", Verdict::from_bool(fac.product(pres.field()) == p))
                    .subject(INPUT)
                    .expect(true)
                    .statement("the product of the factors is p(x)"),
            );
        }
        CyclicAction::Maximals => {
            let maximals = pres.maximal_subalgebras().map_err(field_err)?;
            details["maximal_subalgebras"] = Value::from(
                maximals
                    .iter()
                    .map(|(f, s)| json!({"factor": poly_json(f), "basis": basis_json(s), "text": alg.describe(s)}))
                    .collect::<Vec<_>>(),
            );
            if let Some(false) = pres.field_exceeds_factor_count().map_err(field_err)? {
                let note = "the field has no more elements than p(x) has distinct factors; the count of maximal subalgebras may differ";
                eprintln!("warning: {note}");
                details["warning"] = json!(note);
            }
        }
        CyclicAction::Decompose => {
            let dec = pres.primary_decomposition().map_err(field_err)?;
            details["components"] = Value::from(
                dec.components
                    .iter()
                    .map(|c| {
                        json!({"factor": poly_json(&c.factor), "multiplicity": c.multiplicity, "basis": basis_json(&c.space), "text": alg.describe(&c.space)})
                    })
                    .collect::<Vec<_>>(),
            );
            let verified = dec.verify(&alg);
            let mut r = CheckRecord::new("decomposition-verifies", Verdict::from_bool(verified.is_ok()))
                .subject(INPUT)
                .expect(true)
                .statement("components span L directly with the stated bracket relations");
            if let Err(e) = verified {
                r = r.note(e);
            }
            report.push(r);
        }
    }
    Ok(details)
}

pub fn cyclic(
    field: FieldDescriptor,
    alphas: &str,
    action: CyclicAction,
    config: &LatticeConfig,
) -> Result<Report, CliError> {
    let started = Instant::now();
    let bad = |e: leibniz_core::cyclic::CyclicError| CliError::Input(e.to_string());
    let (doc, details, report) = match field {
        FieldDescriptor::Gf { p } => {
            let f = PrimeField::new(p).map_err(|e| CliError::Input(e.to_string()))?;
            let pres = CyclicPresentation::parse(f, alphas).map_err(bad)?;
            let alg = pres.algebra();
            let doc = AlgebraDocument::from_algebra(
                Some(format!("cyclic[{},alphas={}]", field.tag(), pres.alphas_text())),
                &alg,
            );
            let mut report = Report::new(format!("cyclic {}", action_name(action)), doc.digest());
            let details = cyclic_generic(&pres, action, &mut report)?;
            cyclic_lattice_checks(&pres, action, config, &mut report)?;
            (doc, details, report)
        }
        FieldDescriptor::Rational => {
            let pres = CyclicPresentation::parse(Rationals, alphas).map_err(bad)?;
            let doc = AlgebraDocument::from_algebra(
                Some(format!("cyclic[{},alphas={}]", field.tag(), pres.alphas_text())),
                &pres.algebra(),
            );
            let mut report = Report::new(format!("cyclic {}", action_name(action)), doc.digest());
            let details = cyclic_generic(&pres, action, &mut report)?;
            (doc, details, report)
        }
    };
    let mut report = report;
    report.details = Some(details);
    report.add_document(INPUT, doc);
    report.finish(started);
    Ok(report)
}

/// Cross-checks against the enumerated lattice.
fn cyclic_lattice_checks(
    pres: &CyclicPresentation<PrimeField>,
    action: CyclicAction,
    config: &LatticeConfig,
    report: &mut Report,
) -> Result<(), CliError> {
    if !matches!(action, CyclicAction::Maximals | CyclicAction::Classify) {
        return Ok(());
    }
    let lat = SubalgebraLattice::build(&pres.algebra(), config)?;
    if action == CyclicAction::Classify {
        let class = pres.classify_modular();
        let registry = CheckRegistry::<PrimeField>::default();
        let o = registry.run("modular-algebra", &lat, config).expect("registered");
        report.push(
            CheckRecord::new(
                "classification-matches-lattice",
                Verdict::from_bool(o.verdict.known() == Some(class.is_modular())),
            )
            .subject(INPUT)
            .expect(true)
            .note(format!("classification {}, lattice modularity {}", class.name(), o.verdict)),
        );
        return Ok(());
    }
    let mut ours: Vec<Subspace<PrimeField>> = pres
        .maximal_subalgebras()
        .map_err(|e| CliError::Unsupported(e.to_string()))?
        .into_iter()
        .map(|(_, s)| s)
        .collect();
    let mut theirs = lat.maximal_subalgebras();
    ours.sort_by(|a, b| a.canonical_cmp(b));
    theirs.sort_by(|a, b| a.canonical_cmp(b));
    report.push(
        CheckRecord::new("maximals-match-lattice", Verdict::from_bool(ours == theirs))
            .subject(INPUT)
            .expect(true)
            .statement("the kernels equal the co-atoms of the subalgebra lattice")
            .note(format!("{} from kernels, {} co-atoms", ours.len(), theirs.len())),
    );
    Ok(())
}

fn action_name(a: CyclicAction) -> &'static str {
    match a {
        CyclicAction::Classify => "classify",
        CyclicAction::Factor => "factor",
        CyclicAction::Maximals => "maximals",
        CyclicAction::Decompose => "decompose",
    }
}

/// Parses `key=value` pairs.
pub fn parse_params(pairs: &[String]) -> Result<FamilyParams, CliError> {
    pairs
        .iter()
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| CliError::Input(format!("parameter {kv:?} is not of the form key=value")))
        })
        .collect()
}

pub fn family(name: &str, field: FieldDescriptor, params: &FamilyParams) -> Result<AlgebraDocument, CliError> {
    let registry = FamilyRegistry::default();
    let (id, alg) = registry.build(name, field, params).map_err(|e| CliError::Input(e.to_string()))?;
    Ok(AlgebraDocument::from_any(Some(id), &alg))
}

pub fn family_list() -> String {
    let registry = FamilyRegistry::default();
    registry
        .iter()
        .map(|f| {
            let params =
                if f.parameters().is_empty() { String::new() } else { format!(" ({})", f.parameters().join(", ")) };
            format!("{}{}: {}\n", f.name(), params, f.description())
        })
        .collect()
}

/// Nonzero products, one per line.
pub fn document_text(doc: &AlgebraDocument) -> Result<String, CliError> {
    fn lines<F: Field>(t: &StructureConstants<F>) -> String {
        let n = t.names();
        let mut out = String::new();
        for i in 0..t.dim() {
            for j in 0..t.dim() {
                let v = t.product(i, j);
                if v.iter().any(|c| !t.field().is_zero(c)) {
                    out +=
                        &format!("[{}, {}] = {}\n", n[i], n[j], leibniz_core::linalg::format_vector(t.field(), v, n));
                }
            }
        }
        out
    }
    let head =
        format!("{} over {}, basis {}\n", doc.id.as_deref().unwrap_or("algebra"), doc.field, doc.names.join(", "));
    Ok(head
        + &match doc.table()? {
            AnyTable::Finite(t) => lines(&t),
            AnyTable::Rational(t) => lines(&t),
        })
}
