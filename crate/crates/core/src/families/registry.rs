use std::collections::BTreeMap;

use crate::algebra::LeibnizAlgebra;
use crate::cyclic::CyclicPresentation;
use crate::exactfield::{Field, FieldDescriptor, PrimeField, Rationals};

use super::{
    a25, almost_abelian, batten, e_plus_center, extraspecial_from_form, heisenberg, leib_scaling, nilpotent_cyclic,
    norm_form, FamilyError, FormMatrix,
};

/// Parameter name to textual value.
pub type FamilyParams = BTreeMap<String, String>;

/// An algebra over one of the supported fields.
#[derive(Clone, Debug)]
pub enum AnyAlgebra {
    Finite(LeibnizAlgebra<PrimeField>),
    Rational(LeibnizAlgebra<Rationals>),
}

impl AnyAlgebra {
    pub fn descriptor(&self) -> FieldDescriptor {
        match self {
            AnyAlgebra::Finite(a) => a.field().descriptor(),
            AnyAlgebra::Rational(a) => a.field().descriptor(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyAlgebra::Finite(a) => a.dim(),
            AnyAlgebra::Rational(a) => a.dim(),
        }
    }
}

/// A named, parameterized constructor.
pub trait Family: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    /// Accepted parameter names; all are required.
    fn parameters(&self) -> &'static [&'static str];
    fn build(&self, field: FieldDescriptor, params: &FamilyParams) -> Result<AnyAlgebra, FamilyError>;

    /// Deterministic identifier such as `batten17[gf5,alpha=2]`.
    fn id(&self, field: FieldDescriptor, params: &FamilyParams) -> String {
        let mut parts = vec![field.tag()];
        parts.extend(params.iter().map(|(k, v)| format!("{k}={v}")));
        format!("{}[{}]", self.name(), parts.join(","))
    }
}

trait Construct: Send + Sync {
    fn make<F: Field>(&self, field: F, p: &Params<'_>) -> Result<LeibnizAlgebra<F>, FamilyError>;
}

struct Params<'a> {
    family: &'static str,
    map: &'a FamilyParams,
}

impl Params<'_> {
    fn raw(&self, key: &'static str) -> Result<&str, FamilyError> {
        self.map
            .get(key)
            .map(String::as_str)
            .ok_or(FamilyError::MissingParameter { family: self.family.into(), param: key })
    }

    fn count(&self, key: &'static str, min: usize) -> Result<usize, FamilyError> {
        let raw = self.raw(key)?;
        raw.trim().parse::<usize>().ok().filter(|&n| n >= min).ok_or_else(|| FamilyError::BadParameter {
            family: self.family.into(),
            reason: format!("{key} = {raw:?} is not an integer >= {min}"),
        })
    }

    fn scalar<F: Field>(&self, field: &F, key: &'static str) -> Result<F::Elem, FamilyError> {
        Ok(field.parse(self.raw(key)?.trim())?)
    }
}

struct Entry<C> {
    name: &'static str,
    description: &'static str,
    parameters: &'static [&'static str],
    construct: C,
}

impl<C: Construct> Family for Entry<C> {
    fn name(&self) -> &'static str {
        self.name
    }
    fn description(&self) -> &'static str {
        self.description
    }
    fn parameters(&self) -> &'static [&'static str] {
        self.parameters
    }
    fn build(&self, field: FieldDescriptor, params: &FamilyParams) -> Result<AnyAlgebra, FamilyError> {
        if let Some(extra) = params.keys().find(|k| !self.parameters.contains(&k.as_str())) {
            return Err(FamilyError::UnexpectedParameter { family: self.name.into(), param: extra.clone() });
        }
        let p = Params { family: self.name, map: params };
        Ok(match field {
            FieldDescriptor::Gf { p: q } => AnyAlgebra::Finite(self.construct.make(PrimeField::new(q)?, &p)?),
            FieldDescriptor::Rational => AnyAlgebra::Rational(self.construct.make(Rationals, &p)?),
        })
    }
}

struct Abelian;
impl Construct for Abelian {
    fn make<F: Field>(&self, field: F, p: &Params<'_>) -> Result<LeibnizAlgebra<F>, FamilyError> {
        Ok(LeibnizAlgebra::abelian(field, p.count("n", 0)?))
    }
}

struct Heisenberg;
impl Construct for Heisenberg {
    fn make<F: Field>(&self, field: F, _: &Params<'_>) -> Result<LeibnizAlgebra<F>, FamilyError> {
        Ok(heisenberg(field))
    }
}

struct NilpotentCyclic;
impl Construct for NilpotentCyclic {
    fn make<F: Field>(&self, field: F, p: &Params<'_>) -> Result<LeibnizAlgebra<F>, FamilyError> {
        Ok(nilpotent_cyclic(field, p.count("n", 2)?))
    }
}

struct Cyclic;
impl Construct for Cyclic {
    fn make<F: Field>(&self, field: F, p: &Params<'_>) -> Result<LeibnizAlgebra<F>, FamilyError> {
        let pres = CyclicPresentation::parse(field, p.raw("alphas")?)
            .map_err(|e| FamilyError::BadParameter { family: p.family.into(), reason: e.to_string() })?;
        Ok(pres.algebra())
    }
}

struct AlmostAbelian;
impl Construct for AlmostAbelian {
    fn make<F: Field>(&self, field: F, p: &Params<'_>) -> Result<LeibnizAlgebra<F>, FamilyError> {
        Ok(almost_abelian(field, p.count("m", 1)?))
    }
}

struct LeibScaling;
impl Construct for LeibScaling {
    fn make<F: Field>(&self, field: F, p: &Params<'_>) -> Result<LeibnizAlgebra<F>, FamilyError> {
        Ok(leib_scaling(field, p.count("r", 1)?))
    }
}

struct Batten(u32);
impl Construct for Batten {
    fn make<F: Field>(&self, field: F, p: &Params<'_>) -> Result<LeibnizAlgebra<F>, FamilyError> {
        let alpha = if matches!(self.0, 17 | 18) { Some(p.scalar(&field, "alpha")?) } else { None };
        Ok(batten(field, self.0, alpha)?.0)
    }
}

struct A25;
impl Construct for A25 {
    fn make<F: Field>(&self, field: F, _: &Params<'_>) -> Result<LeibnizAlgebra<F>, FamilyError> {
        Ok(a25(field))
    }
}

struct NormForm;
impl Construct for NormForm {
    fn make<F: Field>(&self, field: F, _: &Params<'_>) -> Result<LeibnizAlgebra<F>, FamilyError> {
        Ok(norm_form(field))
    }
}

struct Extraspecial;
impl Construct for Extraspecial {
    fn make<F: Field>(&self, field: F, p: &Params<'_>) -> Result<LeibnizAlgebra<F>, FamilyError> {
        Ok(extraspecial_from_form(&FormMatrix::parse(field, p.raw("form")?)?))
    }
}

struct EPlusCenter;
impl Construct for EPlusCenter {
    fn make<F: Field>(&self, field: F, p: &Params<'_>) -> Result<LeibnizAlgebra<F>, FamilyError> {
        let e = extraspecial_from_form(&FormMatrix::parse(field, p.raw("form")?)?);
        Ok(e_plus_center(&e, p.count("c", 0)?))
    }
}

/// Families addressable by name.
pub struct FamilyRegistry {
    families: Vec<Box<dyn Family>>,
}

impl Default for FamilyRegistry {
    fn default() -> Self {
        fn entry<C: Construct + 'static>(
            name: &'static str,
            description: &'static str,
            parameters: &'static [&'static str],
            construct: C,
        ) -> Box<dyn Family> {
            Box::new(Entry { name, description, parameters, construct })
        }
        let mut families = vec![
            entry("abelian", "abelian algebra of dimension n", &["n"], Abelian),
            entry("heisenberg", "[x,y] = z = -[y,x]", &[], Heisenberg),
            entry("nilpotent-cyclic", "a, a^2, ..., a^n with a^n central", &["n"], NilpotentCyclic),
            entry("cyclic", "cyclic algebra with [a^n, a] = alpha_2 a^2 + ... + alpha_n a^n", &["alphas"], Cyclic),
            entry("almost-abelian", "abelian ideal a1..am with [a, x] = a = -[x, a]", &["m"], AlmostAbelian),
            entry("leib-scaling", "Leib(L) = e1..er plus v with [e, v] = e", &["r"], LeibScaling),
        ];
        let batten_names: [(&'static str, &'static str, &'static [&'static str]); 6] = [
            ("batten14", "[x1,x1] = x3, [x1,x2] = x4", &[]),
            ("batten15", "[x1,x1] = x3, [x2,x1] = x4", &[]),
            ("batten16", "[x1,x2] = x4, [x2,x1] = x3, [x2,x2] = -x3", &[]),
            ("batten17", "[x1,x1] = x3, [x1,x2] = x4, [x2,x1] = alpha x4", &["alpha"]),
            ("batten18", "[x1,x1] = x3, [x2,x1] = x4, [x1,x2] = alpha x3, [x2,x2] = -x4", &["alpha"]),
            ("batten19", "[x1,x1] = x3, [x1,x2] = x3, [x2,x1] = x3 + x4, [x2,x2] = x4", &[]),
        ];
        for ((name, description, parameters), index) in batten_names.into_iter().zip(14..) {
            families.push(entry(name, description, parameters, Batten(index)));
        }
        families.extend([
            entry("a25", "[x1,x1] = x3, [x2,x2] = x4, [x3,x1] = x4", &[], A25),
            entry("norm-form", "x^2 = y^2 = z, [x,y] = z, [y,x] = -z", &[], NormForm),
            entry(
                "extraspecial",
                "[e_i, e_j] = beta_ij z for a form given as rows \"a,b;c,d\"",
                &["form"],
                Extraspecial,
            ),
            entry(
                "e-plus-center",
                "extraspecial algebra of a form plus a c-dimensional center",
                &["form", "c"],
                EPlusCenter,
            ),
        ]);
        FamilyRegistry { families }
    }
}

impl FamilyRegistry {
    /// Adds a family, replacing any existing family of the same name.
    pub fn register(&mut self, family: Box<dyn Family>) {
        self.families.retain(|f| f.name() != family.name());
        self.families.push(family);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.families.iter().map(|f| f.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn Family> {
        self.families.iter().find(|f| f.name() == name).map(|f| f.as_ref())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Family> {
        self.families.iter().map(|f| f.as_ref())
    }

    /// Builds a family by name, returning its identifier with the algebra.
    pub fn build(
        &self,
        name: &str,
        field: FieldDescriptor,
        params: &FamilyParams,
    ) -> Result<(String, AnyAlgebra), FamilyError> {
        let family = self.get(name).ok_or_else(|| FamilyError::Unknown(name.to_string()))?;
        let alg = family.build(field, params)?;
        Ok((family.id(field, params), alg))
    }
}
