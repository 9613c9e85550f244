use super::{Field, FieldDescriptor, FieldError};

/// GF(p) for a prime `p < 2^31`. Elements are canonical residues `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Residue of an arbitrary integer.
    pub fn reduce(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a + *b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Result<u32, FieldError> {
        if *a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Ok(self.reduce(t0))
    }
    fn from_i64(&self, n: i64) -> u32 {
        self.reduce(n)
    }
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn order(&self) -> Option<u64> {
        Some(self.p as u64)
    }
    fn elements(&self) -> Option<Vec<u32>> {
        Some((0..self.p).collect())
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Gf { p: self.p as u64 }
    }
    fn parse(&self, text: &str) -> Result<u32, FieldError> {
        let t = text.trim();
        let err = |reason: &str| FieldError::Parse { text: text.to_string(), reason: reason.to_string() };
        let v: u64 = t.parse().map_err(|_| err("expected a decimal residue"))?;
        if v >= self.p as u64 {
            return Err(err("residue out of range"));
        }
        Ok(v as u32)
    }
    fn format(&self, a: &u32) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::ArithOp;

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(2_147_483_647).is_ok());
        assert!(PrimeField::new(1 << 31).is_err());
    }

    #[test]
    fn division_matches_multiplication_table() {
        let f = PrimeField::new(5).unwrap();
        // brute force: the unique c with 3c = 2
        let c = (0..5).find(|c| f.mul(&3, c) == 2).unwrap();
        assert_eq!(c, 4);
        assert_eq!(f.arith(&2, &3, ArithOp::Div).unwrap(), 4);
        assert_eq!(f.arith(&0, &0, ArithOp::Div), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn inverses_are_inverses() {
        for p in [2u64, 3, 5, 7, 13, 65_537, 2_147_483_647] {
            let f = PrimeField::new(p).unwrap();
            for a in [1u64, 2, p - 1, p / 2].map(|a| (a % p) as u32) {
                if a == 0 {
                    continue;
                }
                assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1, "p={p} a={a}");
            }
        }
    }

    #[test]
    fn parse_rejects_out_of_range() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(f.parse("2").unwrap(), 2);
        assert!(f.parse("3").is_err());
        assert!(f.parse("-1").is_err());
    }
}
