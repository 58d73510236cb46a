use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::cyclo::root_order;
use super::Cyclo;
use crate::error::{Error, Result};

/// `θ = (exp(2πi a_1/N), …, exp(2πi a_s/N))`, stored as reduced exponents.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Character {
    modulus: u64,
    exponents: Vec<u64>,
}

impl Character {
    pub fn new(modulus: u64, exponents: &[i64]) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        let n = modulus as i64;
        Character { modulus, exponents: exponents.iter().map(|a| a.rem_euclid(n) as u64).collect() }
    }

    /// The identity character `e = (1, …, 1)`.
    pub fn identity(s: usize) -> Self {
        Character { modulus: 1, exponents: vec![0; s] }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_identity(&self) -> bool {
        self.exponents.iter().all(|&a| a == 0)
    }

    pub fn lift(&self, l: u64) -> Character {
        assert!(l.is_multiple_of(self.modulus), "cannot lift modulus {} to {l}", self.modulus);
        let f = l / self.modulus;
        Character { modulus: l, exponents: self.exponents.iter().map(|a| a * f).collect() }
    }

    /// Same character over the smallest modulus that expresses it.
    pub fn normalized(&self) -> Character {
        let g = self.exponents.iter().fold(self.modulus, |g, a| g.gcd(a));
        Character { modulus: self.modulus / g, exponents: self.exponents.iter().map(|a| a / g).collect() }
    }

    /// Exponent `k` with `θ^w = ζ_N^k`, `0 ≤ k < N`.
    pub fn exponent_of(&self, w: &[i64]) -> Result<u64> {
        if w.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: w.len() });
        }
        let n = self.modulus as i128;
        let k = self
            .exponents
            .iter()
            .zip(w)
            .fold(0i128, |acc, (&a, &x)| (acc + a as i128 * x as i128).rem_euclid(n));
        Ok(k as u64)
    }

    /// Multiplicative order of `θ^w`.
    pub fn order_of(&self, w: &[i64]) -> Result<u64> {
        Ok(root_order(self.modulus, self.exponent_of(w)?))
    }
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.normalized(), other.normalized());
        a.modulus == b.modulus && a.exponents == b.exponents
    }
}

impl Eq for Character {}

/// `θ^w` as a cyclotomic number.
pub fn char_pow(theta: &Character, w: &[i64]) -> Result<Cyclo> {
    let k = theta.exponent_of(w)?;
    Ok(Cyclo::from_root(theta.modulus, k as i64))
}

impl fmt::Display for Character {
    /// `(1, exp(2πi·1/3))`-style tuple.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|&a| {
                let g = a.gcd(&self.modulus);
                let (p, q) = (a / g, self.modulus / g);
                match (p, q) {
                    (0, _) => "1".to_string(),
                    (1, 2) => "-1".to_string(),
                    _ => format!("exp(2πi·{p}/{q})"),
                }
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn powers() {
        let e = Character::identity(2);
        assert_eq!(char_pow(&e, &[5, -7]).unwrap(), Cyclo::one());
        let t = Character::new(6, &[3, 0]);
        assert_eq!(char_pow(&t, &[2, 1]).unwrap(), Cyclo::one());
        let w = Character::new(3, &[1, 1]);
        assert_eq!(char_pow(&w, &[0, 2]).unwrap(), Cyclo::from_root(3, 2));
        assert_eq!(char_pow(&w, &[1]), Err(Error::DimensionMismatch { expected: 2, found: 1 }));
    }

    #[test]
    fn equality_across_moduli() {
        assert_eq!(Character::new(3, &[1, 2]), Character::new(12, &[4, 8]));
        assert_ne!(Character::new(3, &[1, 2]), Character::new(3, &[2, 1]));
        assert_eq!(Character::new(4, &[0, 0]), Character::identity(2));
        assert_eq!(Character::new(2, &[-1]).exponents(), &[1]);
    }

    #[test]
    fn display() {
        assert_eq!(Character::new(6, &[2, 3]).to_string(), "(exp(2πi·1/3), -1)");
        assert_eq!(Character::identity(2).to_string(), "(1, 1)");
    }

    proptest! {
        #[test]
        fn pow_is_additive(n in 1u64..=24, a in proptest::collection::vec(0i64..24, 3),
                           w1 in proptest::collection::vec(-9i64..9, 3),
                           w2 in proptest::collection::vec(-9i64..9, 3)) {
            let t = Character::new(n, &a);
            let sum: Vec<i64> = w1.iter().zip(&w2).map(|(x, y)| x + y).collect();
            prop_assert_eq!(char_pow(&t, &sum).unwrap(),
                &char_pow(&t, &w1).unwrap() * &char_pow(&t, &w2).unwrap());
        }
    }
}
