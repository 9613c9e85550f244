use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;

use super::Field;

/// Univariate polynomial with ascending coefficients; never carries
/// trailing zeros, so the zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Polynomial<F> {
    pub fn from_coeffs(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn from_i64(field: F, coeffs: &[i64]) -> Self {
        let c = coeffs.iter().map(|&n| field.from_i64(n)).collect();
        Self::from_coeffs(field, c)
    }

    pub fn zero(field: F) -> Self {
        Polynomial { field, coeffs: Vec::new() }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Self::constant(field, one)
    }

    /// `x^k`
    pub fn monomial(field: F, k: usize) -> Self {
        let mut c = vec![field.zero(); k + 1];
        c[k] = field.one();
        Polynomial { field, coeffs: c }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| self.field.add(&self.coeff(i), &other.coeff(i))).collect();
        Self::from_coeffs(self.field.clone(), c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| self.field.sub(&self.coeff(i), &other.coeff(i))).collect();
        Self::from_coeffs(self.field.clone(), c)
    }

    pub fn neg(&self) -> Self {
        let c = self.coeffs.iter().map(|a| self.field.neg(a)).collect();
        Self::from_coeffs(self.field.clone(), c)
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let c = self.coeffs.iter().map(|a| self.field.mul(a, s)).collect();
        Self::from_coeffs(self.field.clone(), c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field.clone());
        }
        let f = &self.field;
        let mut c = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add(&c[i + j], &f.mul(a, b));
            }
        }
        Self::from_coeffs(f.clone(), c)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.field.clone());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Quotient and remainder. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let f = &self.field;
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = f.inv(divisor.leading().unwrap()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(f.clone()), self.clone());
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(&rem[k + dd], &lead_inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(&rem[k + j], &f.mul(&c, d));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::from_coeffs(f.clone(), quot), Self::from_coeffs(f.clone(), rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&self.field.inv(l).expect("nonzero leading coefficient")),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let c = self.coeffs.iter().enumerate().skip(1).map(|(i, a)| f.mul(a, &f.from_i64(i as i64))).collect();
        Self::from_coeffs(f.clone(), c)
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, e: &BigUint, modulus: &Self) -> Self {
        let mut result = Self::one(self.field.clone()).rem(modulus);
        let base = self.rem(modulus);
        for i in (0..e.bits()).rev() {
            result = result.mul(&result).rem(modulus);
            if e.bit(i) {
                result = result.mul(&base).rem(modulus);
            }
        }
        result
    }

    /// Degree first, then coefficients from the top down.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let f = &self.field;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if f.is_zero(c) {
                continue;
            }
            let mut s = f.format(c);
            let negative = s.starts_with('-');
            if negative {
                s.remove(0);
            }
            let body = match i {
                0 => s,
                _ => {
                    let var = if i == 1 { "x".to_string() } else { format!("x^{i}") };
                    if s == "1" {
                        var
                    } else {
                        format!("{s}{var}")
                    }
                }
            };
            match (first, negative) {
                (true, true) => write!(out, "-{body}")?,
                (true, false) => write!(out, "{body}")?,
                (false, true) => write!(out, " - {body}")?,
                (false, false) => write!(out, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{PrimeField, Rationals};

    #[test]
    fn division_identity() {
        let f = PrimeField::new(7).unwrap();
        let a = Polynomial::from_i64(f, &[3, 0, 5, 1, 2]);
        let b = Polynomial::from_i64(f, &[1, 4, 3]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn display() {
        let p = Polynomial::from_i64(Rationals, &[0, -1, 0, 1]);
        assert_eq!(p.to_string(), "x^3 - x");
        let f = PrimeField::new(5).unwrap();
        assert_eq!(Polynomial::from_i64(f, &[1, 0, 1]).to_string(), "x^2 + 1");
        assert_eq!(Polynomial::zero(f).to_string(), "0");
    }

    #[test]
    fn pow_mod_matches_naive() {
        let f = PrimeField::new(3).unwrap();
        let m = Polynomial::from_i64(f, &[1, 2, 0, 1]);
        let x = Polynomial::monomial(f, 1);
        for e in 0u32..20 {
            let naive = x.pow(e as usize).rem(&m);
            assert_eq!(x.pow_mod(&BigUint::from(e), &m), naive, "e={e}");
        }
    }

    #[test]
    fn derivative_in_char_p() {
        let f = PrimeField::new(3).unwrap();
        // x^3 + x has derivative 1 over GF(3)
        let p = Polynomial::from_i64(f, &[0, 1, 0, 1]);
        assert_eq!(p.derivative(), Polynomial::one(f));
    }
}
