//! JSON representation of an algebra: a field descriptor, basis names and the
//! dense structure-constant tensor with every scalar written as a string.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use leibniz_core::algebra::{LeibnizAlgebra, StructureConstants, Violation};
use leibniz_core::exactfield::{Field, FieldDescriptor, PrimeField, Rationals};
use leibniz_core::families::AnyAlgebra;

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    pub field: FieldDescriptor,
    pub dim: usize,
    pub names: Vec<String>,
    /// `table[i][j][k]` is the coefficient of `e_k` in `[e_i, e_j]`.
    pub table: Vec<Vec<Vec<String>>>,
}

/// A parsed table that has not yet been checked against the identity.
pub enum AnyTable {
    Finite(StructureConstants<PrimeField>),
    Rational(StructureConstants<Rationals>),
}

impl AlgebraDocument {
    pub fn from_table<F: Field>(id: Option<String>, t: &StructureConstants<F>) -> Self {
        let f = t.field();
        let table = t
            .to_dense()
            .iter()
            .map(|row| row.iter().map(|v| v.iter().map(|c| f.format(c)).collect()).collect())
            .collect();
        AlgebraDocument { id, field: f.descriptor(), dim: t.dim(), names: t.names().to_vec(), table }
    }

    pub fn from_algebra<F: Field>(id: Option<String>, alg: &LeibnizAlgebra<F>) -> Self {
        Self::from_table(id, alg.table())
    }

    pub fn from_any(id: Option<String>, alg: &AnyAlgebra) -> Self {
        match alg {
            AnyAlgebra::Finite(a) => Self::from_algebra(id, a),
            AnyAlgebra::Rational(a) => Self::from_algebra(id, a),
        }
    }

    pub fn parse_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed algebra document: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    fn typed_table<F: Field>(&self, field: F) -> Result<StructureConstants<F>, CliError> {
        let n = self.dim;
        if self.names.len() != n {
            return Err(CliError::Input(format!("dim is {n} but {} basis names are given", self.names.len())));
        }
        let shape_ok =
            self.table.len() == n && self.table.iter().all(|row| row.len() == n && row.iter().all(|v| v.len() == n));
        if !shape_ok {
            return Err(CliError::Input(format!("table must have shape {n} x {n} x {n}")));
        }
        let dense = self
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.iter().map(|c| field.parse(c.trim())).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::Input(e.to_string()))?;
        StructureConstants::from_dense(field, self.names.clone(), dense)
            .ok_or_else(|| CliError::Input("inconsistent table shape".into()))
    }

    /// Parses the scalars without checking the identity.
    pub fn table(&self) -> Result<AnyTable, CliError> {
        Ok(match self.field {
            FieldDescriptor::Gf { p } => {
                let f = PrimeField::new(p).map_err(|e| CliError::Input(e.to_string()))?;
                AnyTable::Finite(self.typed_table(f)?)
            }
            FieldDescriptor::Rational => AnyTable::Rational(self.typed_table(Rationals)?),
        })
    }

    /// Parses and validates; a violated identity is an input error naming the triple.
    pub fn algebra(&self) -> Result<AnyAlgebra, CliError> {
        fn checked<F: Field>(t: StructureConstants<F>) -> Result<LeibnizAlgebra<F>, CliError> {
            LeibnizAlgebra::new(t).map_err(|v| CliError::Input(identity_message(&v)))
        }
        Ok(match self.table()? {
            AnyTable::Finite(t) => AnyAlgebra::Finite(checked(t)?),
            AnyTable::Rational(t) => AnyAlgebra::Rational(checked(t)?),
        })
    }

    /// The algebra over a prime field, for commands that enumerate lattices.
    pub fn finite_algebra(&self) -> Result<LeibnizAlgebra<PrimeField>, CliError> {
        match self.algebra()? {
            AnyAlgebra::Finite(a) => Ok(a),
            AnyAlgebra::Rational(_) => Err(CliError::Unsupported("lattice enumeration requires a finite field".into())),
        }
    }

    /// SHA-256 of the canonical JSON encoding.
    pub fn digest(&self) -> String {
        digest_bytes(serde_json::to_string(self).expect("documents serialize").as_bytes())
    }
}

pub fn identity_message<F: Field>(v: &Violation<F>) -> String {
    format!("the right Leibniz identity fails: {v}")
}

pub fn digest_bytes(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEISENBERG: &str = r#"{"field":{"kind":"gf","p":3},"dim":3,"names":["x","y","z"],
        "table":[[["0","0","0"],["0","0","1"],["0","0","0"]],
                 [["0","0","2"],["0","0","0"],["0","0","0"]],
                 [["0","0","0"],["0","0","0"],["0","0","0"]]]}"#;

    #[test]
    fn parses_and_digests_stably() {
        let doc = AlgebraDocument::parse_json(HEISENBERG).unwrap();
        let alg = doc.finite_algebra().unwrap();
        assert_eq!(alg.bracket(&alg.unit(1), &alg.unit(0)), vec![0, 0, 2]);
        let again = AlgebraDocument::parse_json(&doc.to_json()).unwrap();
        assert_eq!(again.digest(), doc.digest());
        assert_eq!(doc.digest().len(), 64);
    }

    #[test]
    fn rejects_non_canonical_scalars_and_bad_shapes() {
        let minus = HEISENBERG.replacen("\"2\"", "\"-1\"", 1);
        assert!(matches!(AlgebraDocument::parse_json(&minus).unwrap().table(), Err(CliError::Input(_))));
        let short = HEISENBERG.replacen("\"dim\":3", "\"dim\":2", 1);
        assert!(AlgebraDocument::parse_json(&short).and_then(|d| d.table().map(|_| ())).is_err());
    }

    #[test]
    fn rational_documents_are_not_finite() {
        let q = HEISENBERG.replace(r#"{"kind":"gf","p":3}"#, r#"{"kind":"rational"}"#).replace("\"2\"", "\"-1\"");
        let doc = AlgebraDocument::parse_json(&q).unwrap();
        assert!(matches!(doc.algebra().unwrap(), AnyAlgebra::Rational(_)));
        assert!(matches!(doc.finite_algebra(), Err(CliError::Unsupported(_))));
    }
}
