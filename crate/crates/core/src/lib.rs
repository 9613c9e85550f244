//! Exact computation with finite-dimensional Leibniz algebras: structure
//! constants, subalgebra lattices over prime fields, cyclic algebras, and the
//! named families used to test lattice-theoretic classification results.

pub mod algebra;
pub mod cyclic;
pub mod exactfield;
pub mod families;
pub mod lattice;
pub mod linalg;

use serde::{Deserialize, Serialize};

/// Three-valued outcome of a decision procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    /// `Some(b)` for a decided verdict.
    pub fn known(self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False => Some(false),
            Verdict::Unknown => None,
        }
    }

    pub fn is_true(self) -> bool {
        self == Verdict::True
    }

    pub fn is_false(self) -> bool {
        self == Verdict::False
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Unknown => "unknown",
        })
    }
}
