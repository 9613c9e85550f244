//! Finite test corpora: exhaustive small tables, extraspecial forms, cyclic
//! presentations, seeded random algebras and the named families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{LeibnizAlgebra, StructureConstants};
use crate::cyclic::CyclicPresentation;
use crate::exactfield::{Field, PrimeField};
use crate::lattice::SubalgebraLattice;
use crate::linalg::{all_vectors, Matrix};

use super::{
    a25, almost_abelian, batten, e_plus_center, extraspecial_from_form, heisenberg, is_extraspecial, leib_scaling,
    nilpotent_cyclic, norm_form, FormMatrix,
};

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub id: String,
    pub algebra: LeibnizAlgebra<PrimeField>,
}

impl CorpusEntry {
    fn new(id: impl Into<String>, algebra: LeibnizAlgebra<PrimeField>) -> Self {
        CorpusEntry { id: id.into(), algebra }
    }
}

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).expect("prime")
}

/// Every two-dimensional table over GF(2) that satisfies the identity,
/// identified by its 8-bit code.
pub fn dim2_gf2() -> Vec<CorpusEntry> {
    let f = gf(2);
    (0u32..256)
        .filter_map(|code| {
            let mut t = StructureConstants::zero(f, 2);
            for (slot, (i, j)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
                let bits = (code >> (2 * slot)) & 3;
                t.set_product_i64(i, j, &[(bits & 1) as i64, (bits >> 1) as i64]);
            }
            LeibnizAlgebra::new(t).ok().map(|a| CorpusEntry::new(format!("dim2[gf2,code={code}]"), a))
        })
        .collect()
}

/// Extraspecial algebras from all `2 x 2` forms over GF(p).
pub fn extraspecial_corpus(p: u64) -> Vec<CorpusEntry> {
    let f = gf(p);
    let entries: Vec<Vec<u32>> = all_vectors(&f, 4, u64::MAX).expect("finite field").collect();
    entries
        .into_par_iter()
        .filter_map(|e| {
            let form = FormMatrix::new(Matrix::from_rows(f, 2, vec![e[..2].to_vec(), e[2..].to_vec()]).expect("2 x 2"));
            let alg = extraspecial_from_form(&form);
            is_extraspecial(&alg).then(|| CorpusEntry::new(format!("extraspecial[gf{p},form={}]", form.text()), alg))
        })
        .collect()
}

/// All presentations of dimension `n` over GF(p).
pub fn cyclic_presentations(p: u64, n: usize) -> Vec<CyclicPresentation<PrimeField>> {
    let f = gf(p);
    all_vectors(&f, n - 1, u64::MAX)
        .expect("finite field")
        .map(|alphas| CyclicPresentation::new(f, alphas).expect("n >= 2"))
        .collect()
}

fn random_elem(rng: &mut ChaCha8Rng, f: &PrimeField) -> u32 {
    rng.gen_range(0..f.p())
}

fn random_invertible(rng: &mut ChaCha8Rng, f: &PrimeField, n: usize) -> Matrix<PrimeField> {
    loop {
        let rows = (0..n).map(|_| (0..n).map(|_| random_elem(rng, f)).collect()).collect();
        let m = Matrix::from_rows(*f, n, rows).expect("square");
        if m.inverse().is_some() {
            return m;
        }
    }
}

fn random_dim2(rng: &mut ChaCha8Rng, f: &PrimeField) -> LeibnizAlgebra<PrimeField> {
    loop {
        let mut t = StructureConstants::zero(*f, 2);
        for i in 0..2 {
            for j in 0..2 {
                let v: Vec<u32> = (0..2).map(|_| random_elem(rng, f)).collect();
                t.set_product(i, j, &v);
            }
        }
        if let Ok(a) = LeibnizAlgebra::new(t) {
            return a;
        }
    }
}

/// `count` three-dimensional algebras alternating between GF(2) and GF(3).
/// Each starts from a central extension, a cyclic algebra or a direct sum,
/// receives random single-entry perturbations that are kept only when the
/// identity still holds, and is finally written in a random basis.
pub fn random_dim3(seed: u64, count: usize) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let f = gf(if k % 2 == 0 { 2 } else { 3 });
            let base = match rng.gen_range(0..3) {
                0 => {
                    let rows: Vec<Vec<u32>> =
                        (0..2).map(|_| (0..2).map(|_| random_elem(&mut rng, &f)).collect()).collect();
                    extraspecial_from_form(&FormMatrix::new(Matrix::from_rows(f, 2, rows).expect("2 x 2")))
                }
                1 => {
                    let alphas = (0..2).map(|_| random_elem(&mut rng, &f)).collect();
                    CyclicPresentation::new(f, alphas).expect("n = 3").algebra()
                }
                _ => random_dim2(&mut rng, &f).direct_sum(&LeibnizAlgebra::abelian(f, 1)),
            };
            let mut table = base.into_table();
            for _ in 0..4 {
                let (i, j, kk) = (rng.gen_range(0..3), rng.gen_range(0..3), rng.gen_range(0..3));
                let c = rng.gen_range(1..f.p()) as i64;
                let mut candidate = table.clone();
                candidate.add_term(i, j, kk, c);
                if candidate.validate().is_ok() {
                    table = candidate;
                }
            }
            let alg = LeibnizAlgebra::new(table).expect("perturbations keep the identity");
            let p = random_invertible(&mut rng, &f, 3);
            let alg = alg.change_basis(&p, alg.names().to_vec()).expect("invertible");
            CorpusEntry::new(format!("random3[gf{},seed={seed},k={k}]", f.p()), alg)
        })
        .collect()
}

/// The named families over GF(3) and GF(5), kept to dimension at most four
/// and to lattices small enough for triple sweeps.
pub fn family_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for p in [3u64, 5] {
        let f = gf(p);
        let tag = format!("gf{p}");
        let mut push =
            |name: String, a: LeibnizAlgebra<PrimeField>| out.push(CorpusEntry::new(format!("{name}[{tag}]"), a));
        push("heisenberg".into(), heisenberg(f));
        push("norm-form".into(), norm_form(f));
        push("e-plus-center-norm-form".into(), e_plus_center(&norm_form(f), 1));
        push("a25".into(), a25(f));
        for idx in [14, 15, 16, 19] {
            push(format!("batten{idx}"), batten(f, idx, None).expect("valid").0);
        }
        push("batten17-alpha1".into(), batten(f, 17, Some(1)).expect("valid").0);
        push("batten18-alpha0".into(), batten(f, 18, Some(0)).expect("valid").0);
        push("batten18-alpha1".into(), batten(f, 18, Some(1)).expect("valid").0);
        for r in 1..=3 {
            push(format!("leib-scaling-r{r}"), leib_scaling(f, r));
        }
        let max_m = if p == 3 { 3 } else { 2 };
        for m in 1..=max_m {
            push(format!("almost-abelian-m{m}"), almost_abelian(f, m));
        }
        for n in 2..=4 {
            push(format!("nilpotent-cyclic-n{n}"), nilpotent_cyclic(f, n));
        }
        for n in 1..=3 {
            push(format!("abelian-n{n}"), LeibnizAlgebra::abelian(f, n));
        }
        push("cyclic-0-1".into(), CyclicPresentation::from_i64(f, &[0, 1]).expect("n = 3").algebra());
        push("cyclic-1-0".into(), CyclicPresentation::from_i64(f, &[1, 0]).expect("n = 3").algebra());
        push("cyclic-0-0-1".into(), CyclicPresentation::from_i64(f, &[0, 0, 1]).expect("n = 4").algebra());
        push("heisenberg-plus-line".into(), e_plus_center(&heisenberg(f), 1));
    }
    out
}

/// Coarse isomorphism invariants: dimensions of `Leib(L)`, the center and
/// both series, and the shape of the subalgebra lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dim: usize,
    pub leib: usize,
    pub center: usize,
    pub lower_central: Vec<usize>,
    pub derived: Vec<usize>,
    /// Number of subalgebras of each dimension.
    pub nodes_by_dim: Vec<usize>,
    pub covers: usize,
}

impl Fingerprint {
    pub fn of<F: Field>(lat: &SubalgebraLattice<F>) -> Self {
        let alg = lat.algebra();
        let mut nodes_by_dim = vec![0; alg.dim() + 1];
        for s in lat.nodes() {
            nodes_by_dim[s.dim()] += 1;
        }
        Fingerprint {
            dim: alg.dim(),
            leib: alg.leib().dim(),
            center: alg.center().dim(),
            lower_central: alg.lower_central_series().iter().map(|s| s.dim()).collect(),
            derived: alg.derived_series().iter().map(|s| s.dim()).collect(),
            nodes_by_dim,
            covers: lat.cover_count(),
        }
    }
}
