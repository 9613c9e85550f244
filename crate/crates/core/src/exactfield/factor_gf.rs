//! Factorization over GF(p): square-free decomposition, distinct-degree
//! splitting, then Cantor–Zassenhaus equal-degree splitting.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{FactorPower, Factorization, FieldError, Polynomial, PrimeField};

type Poly = Polynomial<PrimeField>;

pub(super) fn factor(field: &PrimeField, p: &Poly) -> Result<Factorization<PrimeField>, FieldError> {
    let unit = *p.leading().ok_or(FieldError::ZeroPolynomial)?;
    let monic = p.monic();
    // deterministic output: the splitting randomness is seeded
    let mut rng = ChaCha8Rng::seed_from_u64(0x005e_ed0f_1e1b);
    let mut factors = Vec::new();
    for (part, multiplicity) in squarefree_decomposition(field, &monic) {
        for (block, degree) in distinct_degree(field, &part) {
            for factor in equal_degree(field, &block, degree, &mut rng) {
                factors.push(FactorPower { factor, multiplicity });
            }
        }
    }
    Ok(Factorization { unit, factors }.normalize())
}

/// Square-free decomposition of a monic polynomial: pairs `(g_i, i)` with
/// `f = prod g_i^i`, the `g_i` square-free and pairwise coprime.
pub(super) fn squarefree_decomposition(field: &PrimeField, f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_rem(&c).0;
    let mut i = 1;
    while !w.is_one() && !w.is_zero() {
        let y = w.gcd(&c);
        let fac = w.div_rem(&y).0;
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y.clone();
        c = c.div_rem(&y).0;
        i += 1;
    }
    if !c.is_one() && !c.is_zero() {
        let root = pth_root(field, &c);
        let p = field.p() as usize;
        for (g, m) in squarefree_decomposition(field, &root) {
            out.push((g, m * p));
        }
    }
    out
}

/// For `c(x) = d(x^p)`, returns `d` (coefficients are their own p-th roots in GF(p)).
fn pth_root(field: &PrimeField, c: &Poly) -> Poly {
    let p = field.p() as usize;
    let coeffs = c.coeffs().iter().step_by(p).cloned().collect();
    Polynomial::from_coeffs(*field, coeffs)
}

/// Splits a monic square-free polynomial into blocks whose irreducible factors
/// all share one degree.
fn distinct_degree(field: &PrimeField, f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = Polynomial::monomial(*field, 1);
    let p = BigUint::from(field.p());
    let mut h = x.rem(&rest);
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(&p, &rest);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            out.push((g.clone(), d));
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let deg = rest.degree().unwrap();
        out.push((rest, deg));
    }
    out
}

fn equal_degree(field: &PrimeField, g: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let n = g.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    if n == d {
        return vec![g.clone()];
    }
    let p = field.p();
    let exponent = if p == 2 { None } else { Some((BigUint::from(p).pow(d as u32) - 1u32) / 2u32) };
    loop {
        let coeffs: Vec<u32> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        let a = Polynomial::from_coeffs(*field, coeffs);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = match &exponent {
            Some(e) => a.pow_mod(e, g).sub(&Polynomial::one(*field)),
            None => {
                // absolute trace a + a^2 + ... + a^(2^(d-1))
                let mut t = a.rem(g);
                let mut acc = t.clone();
                for _ in 1..d {
                    t = t.mul(&t).rem(g);
                    acc = acc.add(&t);
                }
                acc
            }
        };
        let h = g.gcd(&b);
        let dh = h.degree().unwrap_or(0);
        if dh > 0 && dh < n {
            let mut out = equal_degree(field, &h, d, rng);
            out.extend(equal_degree(field, &g.div_rem(&h).0, d, rng));
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Factorize;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn x3_minus_x_over_gf5() {
        let f = gf(5);
        let p = Polynomial::from_i64(f, &[0, -1, 0, 1]);
        let fac = f.factor(&p).unwrap();
        assert_eq!(fac.distinct(), 3);
        let expected =
            [Polynomial::from_i64(f, &[0, 1]), Polynomial::from_i64(f, &[1, 1]), Polynomial::from_i64(f, &[-1, 1])];
        for e in &expected {
            assert!(fac.factors.iter().any(|fp| &fp.factor == e && fp.multiplicity == 1));
        }
        assert_eq!(fac.product(&f), p);
    }

    #[test]
    fn x2_plus_1_splits_over_gf5() {
        let f = gf(5);
        let fac = f.factor(&Polynomial::from_i64(f, &[1, 0, 1])).unwrap();
        let roots = {
            let mut r = fac.roots(&f);
            r.sort();
            r
        };
        assert_eq!(roots, vec![2, 3]);
    }

    #[test]
    fn p_th_powers_are_handled() {
        let f = gf(3);
        // (x + 1)^3 (x^2 + 1)^2 over GF(3)
        let a = Polynomial::from_i64(f, &[1, 1]).pow(3);
        let b = Polynomial::from_i64(f, &[1, 0, 1]).pow(2);
        let p = a.mul(&b).scale(&2);
        let fac = f.factor(&p).unwrap();
        assert_eq!(fac.unit, 2);
        assert_eq!(fac.distinct(), 2);
        assert_eq!(fac.product(&f), p);
        let mults: Vec<usize> = fac.factors.iter().map(|fp| fp.multiplicity).collect();
        assert_eq!(mults, vec![3, 2]);
    }

    #[test]
    fn gf2_equal_degree_uses_trace() {
        let f = gf(2);
        // (x^2 + x + 1)(x^4 + x + 1)(x^4 + x^3 + 1) * x * (x + 1)
        let parts = [
            Polynomial::from_i64(f, &[1, 1, 1]),
            Polynomial::from_i64(f, &[1, 1, 0, 0, 1]),
            Polynomial::from_i64(f, &[1, 0, 0, 1, 1]),
            Polynomial::from_i64(f, &[0, 1]),
            Polynomial::from_i64(f, &[1, 1]),
        ];
        let p = parts.iter().fold(Polynomial::one(f), |acc, q| acc.mul(q));
        let fac = f.factor(&p).unwrap();
        assert_eq!(fac.distinct(), 5);
        assert_eq!(fac.product(&f), p);
    }

    #[test]
    fn large_prime() {
        let f = gf(2_147_483_647);
        let p = Polynomial::from_i64(f, &[-6, 11, -6, 1]); // (x-1)(x-2)(x-3)
        let fac = f.factor(&p).unwrap();
        let mut roots = fac.roots(&f);
        roots.sort();
        assert_eq!(roots, vec![1, 2, 3]);
    }

    #[test]
    fn zero_is_rejected() {
        let f = gf(5);
        assert_eq!(f.factor(&Polynomial::zero(f)), Err(FieldError::ZeroPolynomial));
    }
}
