//! The lattice of all subalgebras of an algebra over a finite field.
//!
//! Nodes are kept in canonical order (dimension, pivots, echelon entries), so
//! containment only runs from lower to higher indices. Each node stores the
//! set of nodes above and below it; joins and meets are then the first
//! common upper bound and the last common lower bound.
//!
//! The modular checks `modular-algebra`, `weak-quasi-ideal`,
//! `bracket-condition` and `modular-lattice` are expected to agree on every
//! algebra. A disagreement fails the verification suite, except one where the
//! algebra is not supersolvable and `modular-algebra` alone dissents: that case
//! is only listed for review.

mod checks;
mod dot;
mod element;
mod witness;

use std::collections::HashMap;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::LeibnizAlgebra;
use crate::exactfield::Field;
use crate::linalg::{pivot_patterns, subspace_count, subspaces_with_pivots, Subspace};

pub use checks::{
    CheckOutcome, CheckRegistry, DistributiveCheck, DuallyAtomisticCheck, JAlgebraCheck, LatticeCheck,
    LowerSemimodularCheck, ModularAlgebraCheck, ModularLatticeCheck, UpperSemimodularCheck, WeakQuasiIdealCheck,
};
pub use dot::to_dot;
pub use element::{bracket_condition, bracket_condition_at, search_bracket_counterexample, BracketConditionCheck};
pub use witness::{is_maximal_in, recheck, Witness};

/// Default cap on the number of subspaces scanned while building.
pub const DEFAULT_MAX_SUBSPACES: u64 = 100_000;
/// Default cap on the node count for checks quantified over triples.
pub const DEFAULT_MAX_TRIPLE_NODES: usize = 2_000;
/// Join and meet tables are cached up to this many nodes.
const TABLE_LIMIT: usize = 4_096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeConfig {
    pub max_subspaces: u64,
    pub max_triple_nodes: usize,
}

impl Default for LatticeConfig {
    fn default() -> Self {
        LatticeConfig { max_subspaces: DEFAULT_MAX_SUBSPACES, max_triple_nodes: DEFAULT_MAX_TRIPLE_NODES }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("lattice enumeration requires a finite field")]
    InfiniteField,
    #[error("lattice enumeration over {count} subspaces exceeds the budget of {budget}")]
    Budget { count: String, budget: u64 },
}

pub struct SubalgebraLattice<F: Field> {
    algebra: LeibnizAlgebra<F>,
    nodes: Vec<Subspace<F>>,
    index: HashMap<Subspace<F>, usize>,
    /// `above[i]`: nodes containing node `i` (inclusive).
    above: Vec<FixedBitSet>,
    /// `below[i]`: nodes contained in node `i` (inclusive).
    below: Vec<FixedBitSet>,
    upper_covers: Vec<FixedBitSet>,
    lower_covers: Vec<Vec<usize>>,
    tables: OnceLock<Option<(Vec<u32>, Vec<u32>)>>,
}

impl<F: Field> SubalgebraLattice<F> {
    pub fn build(algebra: &LeibnizAlgebra<F>, config: &LatticeConfig) -> Result<Self, LatticeError> {
        let q = algebra.field().order().ok_or(LatticeError::InfiniteField)?;
        let n = algebra.dim();
        let count = subspace_count(n as u32, q);
        if !count.is_some_and(|c| c <= config.max_subspaces as u128) {
            let count = count.map_or_else(|| "more than 2^128".to_string(), |c| c.to_string());
            return Err(LatticeError::Budget { count, budget: config.max_subspaces });
        }
        let field = algebra.field().clone();
        let mut nodes: Vec<Subspace<F>> = pivot_patterns(n)
            .into_par_iter()
            .flat_map_iter(|p| {
                subspaces_with_pivots(&field, n, &p)
                    .expect("finite field")
                    .filter(|s| algebra.is_subalgebra(s))
                    .collect::<Vec<_>>()
            })
            .collect();
        nodes.sort_by(|a, b| a.canonical_cmp(b));
        Ok(Self::from_nodes(algebra.clone(), nodes))
    }

    fn from_nodes(algebra: LeibnizAlgebra<F>, nodes: Vec<Subspace<F>>) -> Self {
        let len = nodes.len();
        let rows: Vec<FixedBitSet> = (0..len)
            .into_par_iter()
            .map(|i| {
                let mut above = FixedBitSet::with_capacity(len);
                for j in i..len {
                    if nodes[j].dim() >= nodes[i].dim() && nodes[j].contains(&nodes[i]) {
                        above.insert(j);
                    }
                }
                above
            })
            .collect();
        let mut below = vec![FixedBitSet::with_capacity(len); len];
        for (i, row) in rows.iter().enumerate() {
            for j in row.ones() {
                below[j].insert(i);
            }
        }
        let above = rows;
        let upper_covers: Vec<FixedBitSet> = (0..len)
            .into_par_iter()
            .map(|i| {
                let mut c = FixedBitSet::with_capacity(len);
                for j in above[i].ones() {
                    if j != i && above[i].intersection_count(&below[j]) == 2 {
                        c.insert(j);
                    }
                }
                c
            })
            .collect();
        let mut lower_covers = vec![Vec::new(); len];
        for (i, c) in upper_covers.iter().enumerate() {
            for j in c.ones() {
                lower_covers[j].push(i);
            }
        }
        let index = nodes.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        SubalgebraLattice { algebra, nodes, index, above, below, upper_covers, lower_covers, tables: OnceLock::new() }
    }

    pub fn algebra(&self) -> &LeibnizAlgebra<F> {
        &self.algebra
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Subspace<F>] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &Subspace<F> {
        &self.nodes[i]
    }

    pub fn index_of(&self, s: &Subspace<F>) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.above[a].contains(b)
    }

    pub fn above(&self, a: usize) -> &FixedBitSet {
        &self.above[a]
    }

    pub fn below(&self, a: usize) -> &FixedBitSet {
        &self.below[a]
    }

    /// `a` is a maximal subalgebra of `b`.
    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.upper_covers[a].contains(b)
    }

    pub fn upper_covers(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.upper_covers[a].ones()
    }

    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.lower_covers[a]
    }

    /// Number of cover pairs (edges of the Hasse diagram).
    pub fn cover_count(&self) -> usize {
        self.lower_covers.iter().map(Vec::len).sum()
    }

    fn tables(&self) -> Option<&(Vec<u32>, Vec<u32>)> {
        self.tables
            .get_or_init(|| {
                let len = self.len();
                if len > TABLE_LIMIT {
                    return None;
                }
                let rows: Vec<(Vec<u32>, Vec<u32>)> = (0..len)
                    .into_par_iter()
                    .map(|a| {
                        let j = (0..len).map(|b| self.join_bits(a, b) as u32).collect();
                        let m = (0..len).map(|b| self.meet_bits(a, b) as u32).collect();
                        (j, m)
                    })
                    .collect();
                let (j, m): (Vec<Vec<u32>>, Vec<Vec<u32>>) = rows.into_iter().unzip();
                Some((j.concat(), m.concat()))
            })
            .as_ref()
    }

    fn join_bits(&self, a: usize, b: usize) -> usize {
        self.above[a].intersection(&self.above[b]).next().expect("top bounds everything")
    }

    fn meet_bits(&self, a: usize, b: usize) -> usize {
        let mut s = self.below[a].clone();
        s.intersect_with(&self.below[b]);
        s.maximum().expect("bottom is below everything")
    }

    /// The subalgebra generated by two nodes.
    pub fn join(&self, a: usize, b: usize) -> usize {
        match self.tables() {
            Some((j, _)) => j[a * self.len() + b] as usize,
            None => self.join_bits(a, b),
        }
    }

    /// Intersection of two nodes.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        match self.tables() {
            Some((_, m)) => m[a * self.len() + b] as usize,
            None => self.meet_bits(a, b),
        }
    }

    /// Some node strictly between `a` and `b`, when `a < b` is not a cover.
    pub fn intermediate(&self, a: usize, b: usize) -> Option<usize> {
        self.above[a].intersection(&self.below[b]).find(|&c| c != a && c != b)
    }

    /// Co-atoms: the maximal subalgebras of `L`.
    pub fn maximal_nodes(&self) -> Vec<usize> {
        if self.len() == 1 {
            return Vec::new();
        }
        self.lower_covers[self.top()].clone()
    }

    pub fn maximal_subalgebras(&self) -> Vec<Subspace<F>> {
        self.maximal_nodes().into_iter().map(|i| self.nodes[i].clone()).collect()
    }

    /// `phi(L)`: the largest ideal inside every maximal subalgebra.
    pub fn frattini_ideal(&self) -> Subspace<F> {
        let maximal = self.maximal_nodes();
        if maximal.is_empty() {
            return self.algebra.zero_subspace();
        }
        let inter = maximal.iter().map(|&i| self.nodes[i].clone()).reduce(|a, b| a.intersect(&b)).expect("nonempty");
        self.algebra.largest_ideal_in(&inter)
    }

    /// Shortest and longest cover chains from `a` up to every node above it.
    pub fn chain_lengths_from(&self, a: usize) -> Vec<Option<(usize, usize)>> {
        let mut out: Vec<Option<(usize, usize)>> = vec![None; self.len()];
        out[a] = Some((0, 0));
        for b in self.above[a].ones().filter(|&b| b != a) {
            let mut best: Option<(usize, usize)> = None;
            for &c in &self.lower_covers[b] {
                if let Some((lo, hi)) = out[c] {
                    best = Some(match best {
                        None => (lo + 1, hi + 1),
                        Some((l, h)) => (l.min(lo + 1), h.max(hi + 1)),
                    });
                }
            }
            out[b] = best;
        }
        out
    }

    /// `d(L)`: the common length of all maximal chains from 0 to `L`, when
    /// they all have the same length.
    pub fn chain_length(&self) -> Option<usize> {
        let lens = self.chain_lengths_from(self.bottom());
        let (lo, hi) = lens[self.top()].expect("top is above bottom");
        (lo == hi).then_some(lo)
    }

    /// A maximal chain from `a` to `b` of the shortest (or longest) length.
    pub fn extremal_chain(&self, a: usize, b: usize, longest: bool) -> Vec<usize> {
        let lens = self.chain_lengths_from(a);
        let pick = |i: usize| lens[i].map(|(lo, hi)| if longest { hi } else { lo });
        let mut chain = vec![b];
        let mut cur = b;
        while cur != a {
            let target = pick(cur).expect("reachable") - 1;
            cur = *self.lower_covers[cur]
                .iter()
                .find(|&&c| pick(c) == Some(target))
                .expect("a predecessor on an extremal chain");
            chain.push(cur);
        }
        chain.reverse();
        chain
    }
}

#[cfg(test)]
mod tests;
