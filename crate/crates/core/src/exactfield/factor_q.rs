//! Factorization over Q: clear denominators, square-free decomposition
//! (Yun), rational roots, then Kronecker's interpolation search.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{FactorPower, Factorization, Field, FieldError, Polynomial, Rationals, RATIONAL_FACTOR_MAX_DEGREE};

type Poly = Polynomial<Rationals>;

pub(super) fn factor(p: &Poly) -> Result<Factorization<Rationals>, FieldError> {
    let unit = p.leading().cloned().ok_or(FieldError::ZeroPolynomial)?;
    let degree = p.degree().unwrap();
    if degree > RATIONAL_FACTOR_MAX_DEGREE {
        return Err(FieldError::UnsupportedDegree { degree, max: RATIONAL_FACTOR_MAX_DEGREE });
    }
    let mut factors = Vec::new();
    for (part, multiplicity) in yun(&p.monic()) {
        for factor in factor_squarefree(&part) {
            factors.push(FactorPower { factor: factor.monic(), multiplicity });
        }
    }
    Ok(Factorization { unit, factors }.normalize())
}

/// Yun's square-free decomposition for a monic polynomial in characteristic 0.
fn yun(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let fd = f.derivative();
    let b = f.gcd(&fd);
    let mut c = f.div_rem(&b).0;
    let mut d = fd.div_rem(&b).0;
    let mut i = 1;
    while c.degree().unwrap_or(0) > 0 {
        d = d.sub(&c.derivative());
        let a = c.gcd(&d);
        if !a.is_one() {
            out.push((a.clone(), i));
        }
        c = c.div_rem(&a).0;
        d = d.div_rem(&a).0;
        i += 1;
    }
    out
}

/// Scales a rational polynomial to a primitive integer polynomial with
/// positive leading coefficient.
fn primitive_integer(p: &Poly) -> Vec<BigInt> {
    let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> =
        p.coeffs().iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(|l| l.is_negative()) { -BigInt::one() } else { BigInt::one() };
    ints.into_iter().map(|c| c / &content * &sign).collect()
}

fn to_poly(ints: &[BigInt]) -> Poly {
    Polynomial::from_coeffs(Rationals, ints.iter().map(|c| BigRational::from_integer(c.clone())).collect())
}

fn eval_int(ints: &[BigInt], x: &BigInt) -> BigInt {
    ints.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Factors a square-free rational polynomial into irreducibles.
fn factor_squarefree(p: &Poly) -> Vec<Poly> {
    let mut ints = primitive_integer(p);
    let mut out = Vec::new();
    // linear factors from the rational root theorem
    loop {
        let deg = ints.len() - 1;
        if deg <= 1 {
            if deg == 1 {
                out.push(to_poly(&ints));
            }
            return out;
        }
        match rational_root(&ints) {
            Some(root) => {
                let lin = Polynomial::from_coeffs(Rationals, vec![-root, BigRational::one()]);
                out.push(lin.clone());
                ints = primitive_integer(&to_poly(&ints).div_rem(&lin).0);
            }
            None => break,
        }
    }
    let mut stack = vec![ints];
    while let Some(f) = stack.pop() {
        let deg = f.len() - 1;
        if deg <= 3 {
            // no rational roots left, so quadratics and cubics are irreducible
            out.push(to_poly(&f));
            continue;
        }
        match kronecker_split(&f) {
            Some(g) => {
                let gp = to_poly(&g);
                let h = primitive_integer(&to_poly(&f).div_rem(&gp).0);
                stack.push(g);
                stack.push(h);
            }
            None => out.push(to_poly(&f)),
        }
    }
    out
}

fn rational_root(ints: &[BigInt]) -> Option<BigRational> {
    if ints[0].is_zero() {
        return Some(BigRational::zero());
    }
    let nums = positive_divisors(&ints[0]);
    let dens = positive_divisors(ints.last().unwrap());
    let poly = to_poly(ints);
    for d in &dens {
        for n in &nums {
            for s in [BigInt::one(), -BigInt::one()] {
                let r = BigRational::new(n * &s, d.clone());
                if Rationals.is_zero(&poly.eval(&r)) {
                    return Some(r);
                }
            }
        }
    }
    None
}

/// Searches for a factor of degree `2..=deg/2` by interpolating through
/// divisors of the values at small integer points.
fn kronecker_split(f: &[BigInt]) -> Option<Vec<BigInt>> {
    let deg = f.len() - 1;
    let target = to_poly(f);
    let lead = f.last().unwrap().clone();
    // points ordered by how few divisor choices they offer
    let mut points: Vec<(BigInt, Vec<BigInt>)> = (-12i64..=12)
        .map(BigInt::from)
        .map(|x| {
            let v = eval_int(f, &x);
            let divs = positive_divisors(&v);
            (x, divs)
        })
        .collect();
    points.sort_by_key(|(x, d)| (d.len(), x.abs().to_i64().unwrap_or(i64::MAX)));
    for k in 2..=deg / 2 {
        let chosen = &points[..=k];
        let choices: Vec<Vec<BigInt>> = chosen
            .iter()
            .enumerate()
            .map(
                |(i, (_, divs))| {
                    if i == 0 {
                        divs.clone()
                    } else {
                        divs.iter().flat_map(|d| [d.clone(), -d.clone()]).collect()
                    }
                },
            )
            .collect();
        for values in choices.iter().map(|c| c.iter()).multi_cartesian_product() {
            let xs: Vec<&BigInt> = chosen.iter().map(|(x, _)| x).collect();
            let g = interpolate(&xs, &values);
            if g.degree() != Some(k) {
                continue;
            }
            if g.coeffs().iter().any(|c| !c.is_integer()) {
                continue;
            }
            let g_lead = g.leading().unwrap().to_integer();
            if !(&lead % &g_lead).is_zero() {
                continue;
            }
            if target.rem(&g).is_zero() {
                return Some(primitive_integer(&g));
            }
        }
    }
    None
}

fn interpolate(xs: &[&BigInt], ys: &[&BigInt]) -> Poly {
    let q = Rationals;
    let mut acc = Polynomial::zero(q);
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut basis = Polynomial::constant(q, BigRational::from_integer((*yi).clone()));
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = BigRational::from_integer(*xi - *xj);
            let lin = Polynomial::from_coeffs(q, vec![-BigRational::from_integer((*xj).clone()), BigRational::one()]);
            basis = basis.mul(&lin).scale(&denom.recip());
        }
        acc = acc.add(&basis);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Factorize;

    fn q(coeffs: &[i64]) -> Poly {
        Polynomial::from_i64(Rationals, coeffs)
    }

    #[test]
    fn monomial() {
        let fac = Rationals.factor(&q(&[0, 0, 0, 0, 1])).unwrap();
        assert_eq!(fac.distinct(), 1);
        assert_eq!(fac.factors[0].factor, q(&[0, 1]));
        assert_eq!(fac.factors[0].multiplicity, 4);
    }

    #[test]
    fn quartic_without_roots_splits() {
        // (x^2 + 1)(x^2 - 2) has no rational roots but is reducible
        let p = q(&[1, 0, 1]).mul(&q(&[-2, 0, 1]));
        let fac = Rationals.factor(&p).unwrap();
        assert_eq!(fac.distinct(), 2);
        assert_eq!(fac.product(&Rationals), p);
    }

    #[test]
    fn irreducible_quartic() {
        let p = q(&[1, 0, 0, 0, 1]); // x^4 + 1
        let fac = Rationals.factor(&p).unwrap();
        assert_eq!(fac.distinct(), 1);
        assert_eq!(fac.factors[0].factor, p);
    }

    #[test]
    fn rational_coefficients_and_unit() {
        // 3/2 (x - 1/3)^2 (x + 2)
        let lin = Polynomial::from_coeffs(Rationals, vec![BigRational::new((-1).into(), 3.into()), BigRational::one()]);
        let p = lin.pow(2).mul(&q(&[2, 1])).scale(&BigRational::new(3.into(), 2.into()));
        let fac = Rationals.factor(&p).unwrap();
        assert_eq!(fac.unit, BigRational::new(3.into(), 2.into()));
        assert_eq!(fac.product(&Rationals), p);
        assert_eq!(fac.distinct(), 2);
    }

    #[test]
    fn sextic_product_of_cubics() {
        let a = q(&[1, 1, 0, 1]); // x^3 + x + 1
        let b = q(&[-1, 0, 1, 1]); // x^3 + x^2 - 1
        let p = a.mul(&b);
        let fac = Rationals.factor(&p).unwrap();
        assert_eq!(fac.distinct(), 2);
        assert_eq!(fac.product(&Rationals), p);
    }

    #[test]
    fn degree_bound() {
        let p = Polynomial::monomial(Rationals, 13);
        assert!(matches!(Rationals.factor(&p), Err(FieldError::UnsupportedDegree { degree: 13, .. })));
    }
}
