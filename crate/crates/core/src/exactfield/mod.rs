//! Exact scalar fields, univariate polynomials and their factorization.
//!
//! Two concrete fields are provided: [`PrimeField`] (GF(p) for a prime
//! `p < 2^31`) and [`Rationals`]. Everything above this module is generic
//! over the [`Field`] trait; code that needs to enumerate vectors asks the
//! field for its elements through [`Field::elements`].

mod factor_gf;
mod factor_q;
mod poly;
mod prime;
mod rational;

use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use poly::Polynomial;
pub use prime::PrimeField;
pub use rational::Rationals;

/// Largest degree accepted by the rational factorizer.
pub const RATIONAL_FACTOR_MAX_DEGREE: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("cannot parse scalar {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("unsupported degree {degree} (rational factorization is bounded to degree {max})")]
    UnsupportedDegree { degree: usize, max: usize },
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("gcd(0, 0) is undefined")]
    ZeroGcd,
}

/// Serializable description of a field: `{"kind":"gf","p":5}` or `{"kind":"rational"}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldDescriptor {
    Gf { p: u64 },
    Rational,
}

impl FieldDescriptor {
    /// Parses the short forms `gf5`, `GF(5)`, `q`, `rational`.
    pub fn parse_tag(tag: &str) -> Result<Self, FieldError> {
        let t = tag.trim().to_ascii_lowercase();
        if t == "q" || t == "rational" || t == "rationals" {
            return Ok(FieldDescriptor::Rational);
        }
        let digits =
            t.strip_prefix("gf(").and_then(|s| s.strip_suffix(')')).or_else(|| t.strip_prefix("gf")).ok_or_else(
                || FieldError::Parse { text: tag.to_string(), reason: "expected gf<p> or rational".into() },
            )?;
        let p: u64 =
            digits.parse().map_err(|_| FieldError::Parse { text: tag.to_string(), reason: "bad prime".into() })?;
        PrimeField::new(p)?;
        Ok(FieldDescriptor::Gf { p })
    }

    pub fn tag(&self) -> String {
        match self {
            FieldDescriptor::Gf { p } => format!("gf{p}"),
            FieldDescriptor::Rational => "rational".to_string(),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldDescriptor::Gf { .. })
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Gf { p } => write!(f, "GF({p})"),
            FieldDescriptor::Rational => write!(f, "Q"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An exact field. Elements are value types in canonical form, so `==` is
/// field equality.
pub trait Field: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Ord + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError>;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem;

    /// `p` for GF(p), `0` for the rationals.
    fn characteristic(&self) -> u64;
    /// Number of elements, `None` when infinite.
    fn order(&self) -> Option<u64>;
    /// All elements in a fixed order (zero first), `None` when infinite.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    fn descriptor(&self) -> FieldDescriptor;
    fn parse(&self, text: &str) -> Result<Self::Elem, FieldError>;
    fn format(&self, a: &Self::Elem) -> String;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn arith(&self, a: &Self::Elem, b: &Self::Elem, op: ArithOp) -> Result<Self::Elem, FieldError> {
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Div => self.div(a, b)?,
        })
    }
}

/// A monic irreducible factor with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorPower<F: Field> {
    pub factor: Polynomial<F>,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization<F: Field> {
    pub unit: F::Elem,
    /// Sorted by [`Polynomial::canonical_cmp`]; pairwise distinct.
    pub factors: Vec<FactorPower<F>>,
}

impl<F: Field> Factorization<F> {
    /// Number of distinct irreducible factors.
    pub fn distinct(&self) -> usize {
        self.factors.len()
    }

    pub fn product(&self, field: &F) -> Polynomial<F> {
        let mut acc = Polynomial::constant(field.clone(), self.unit.clone());
        for fp in &self.factors {
            acc = acc.mul(&fp.factor.pow(fp.multiplicity));
        }
        acc
    }

    /// Roots in the base field (the constant terms of linear factors, negated).
    pub fn roots(&self, field: &F) -> Vec<F::Elem> {
        self.factors
            .iter()
            .filter(|fp| fp.factor.degree() == Some(1))
            .map(|fp| field.neg(&fp.factor.coeffs()[0]))
            .collect()
    }

    fn normalize(mut self) -> Self {
        self.factors.sort_by(|a, b| a.factor.canonical_cmp(&b.factor));
        let mut merged: Vec<FactorPower<F>> = Vec::with_capacity(self.factors.len());
        for fp in self.factors {
            match merged.last_mut() {
                Some(last) if last.factor == fp.factor => last.multiplicity += fp.multiplicity,
                _ => merged.push(fp),
            }
        }
        self.factors = merged;
        self
    }
}

/// Fields whose polynomials can be factored into irreducibles.
pub trait Factorize: Field {
    fn factor(&self, p: &Polynomial<Self>) -> Result<Factorization<Self>, FieldError>;
}

impl Factorize for PrimeField {
    fn factor(&self, p: &Polynomial<Self>) -> Result<Factorization<Self>, FieldError> {
        factor_gf::factor(self, p)
    }
}

impl Factorize for Rationals {
    fn factor(&self, p: &Polynomial<Self>) -> Result<Factorization<Self>, FieldError> {
        factor_q::factor(p)
    }
}

/// Monic gcd of two polynomials, rejecting `gcd(0, 0)`.
pub fn gcd<F: Field>(p: &Polynomial<F>, q: &Polynomial<F>) -> Result<Polynomial<F>, FieldError> {
    if p.is_zero() && q.is_zero() {
        return Err(FieldError::ZeroGcd);
    }
    Ok(p.gcd(q))
}

/// `p / gcd(p, p')`, made monic. Exact in characteristic zero; over GF(p)
/// factors whose derivative vanishes (p-th powers) are dropped entirely.
pub fn squarefree_part<F: Field>(p: &Polynomial<F>) -> Result<Polynomial<F>, FieldError> {
    if p.is_zero() {
        return Err(FieldError::ZeroPolynomial);
    }
    let g = p.gcd(&p.derivative());
    Ok(p.div_rem(&g).0.monic())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptor_tags_round_trip() {
        for tag in ["gf2", "gf5", "GF(7)", "rational", "q"] {
            let d = FieldDescriptor::parse_tag(tag).unwrap();
            assert_eq!(FieldDescriptor::parse_tag(&d.tag()).unwrap(), d);
        }
        assert!(FieldDescriptor::parse_tag("gf6").is_err());
        assert!(FieldDescriptor::parse_tag("r").is_err());
    }

    #[test]
    fn gcd_examples() {
        let q = Rationals;
        let x2 = Polynomial::monomial(q, 2);
        let x3 = Polynomial::monomial(q, 3);
        assert_eq!(gcd(&x2, &x3).unwrap(), Polynomial::monomial(q, 2));

        let f = PrimeField::new(5).unwrap();
        let a = Polynomial::from_i64(f, &[-1, 1]);
        let b = Polynomial::from_i64(f, &[1, 1]);
        assert_eq!(gcd(&a, &b).unwrap(), Polynomial::constant(f, 1));

        let z = Polynomial::zero(f);
        assert_eq!(gcd(&z, &z), Err(FieldError::ZeroGcd));
    }

    #[test]
    fn squarefree_over_q() {
        // x^3 - x^2 -> x^2 - x
        let p = Polynomial::from_i64(Rationals, &[0, 0, -1, 1]);
        let s = squarefree_part(&p).unwrap();
        assert_eq!(s, Polynomial::from_i64(Rationals, &[0, -1, 1]));
    }
}
