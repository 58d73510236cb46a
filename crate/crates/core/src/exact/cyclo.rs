use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{lcm_u64, serde_rational_vec};
use super::{upoly, Rational};
use crate::error::{Error, Result};

pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "modulus must be positive");
    let (mut m, mut phi, mut p) = (n, n, 2);
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest degree
/// first. Obtained from `x^n − 1` by exact division by `Φ_d` for every proper
/// divisor `d` of `n`.
pub fn cyclotomic_poly(n: u64) -> Vec<i64> {
    assert!(n >= 1, "modulus must be positive");
    let mut memo: Vec<(u64, Vec<i64>)> = Vec::new();
    cyclotomic_rec(n, &mut memo)
}

fn cyclotomic_rec(n: u64, memo: &mut Vec<(u64, Vec<i64>)>) -> Vec<i64> {
    if let Some((_, p)) = memo.iter().find(|(m, _)| *m == n) {
        return p.clone();
    }
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let phi_d = cyclotomic_rec(d, memo);
        p = exact_div_monic(&p, &phi_d);
    }
    memo.push((n, p.clone()));
    p
}

fn exact_div_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![0i64; a.len() - db];
    for k in (db..a.len()).rev() {
        let c = r[k];
        if c == 0 {
            continue;
        }
        q[k - db] = c;
        for (j, bj) in b.iter().enumerate() {
            r[k - db + j] -= c * bj;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0), "cyclotomic division left a remainder");
    q
}

/// Reduces an arbitrary-length coefficient vector modulo `Φ_n`.
fn reduce(n: u64, mut v: Vec<Rational>) -> Vec<Rational> {
    let phi = cyclotomic_poly(n);
    let d = phi.len() - 1;
    for k in (d..v.len()).rev() {
        if v[k].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut v[k]);
        for (j, pj) in phi[..d].iter().enumerate() {
            if *pj != 0 {
                v[k - d + j] -= &c * Rational::from_integer((*pj).into());
            }
        }
    }
    v.resize(d, Rational::zero());
    v
}

/// An element of `Q(ζ_N)` in the power basis of `Q[x]/Φ_N(x)`.
#[derive(Clone, Debug)]
pub struct Cyclo {
    modulus: u64,
    coeffs: Vec<Rational>,
}

impl Cyclo {
    pub fn zero() -> Self {
        Cyclo { modulus: 1, coeffs: vec![Rational::zero()] }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclo { modulus: 1, coeffs: vec![r] }
    }

    /// `ζ_n^k` for any integer `k`.
    pub fn from_root(n: u64, k: i64) -> Self {
        assert!(n >= 1, "modulus must be positive");
        let e = k.rem_euclid(n as i64) as usize;
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = Rational::one();
        Self::from_coeffs(n, v)
    }

    /// Builds `Σ c_k ζ_n^k` from coefficients of any length, reducing mod `Φ_n`.
    pub fn from_coeffs(n: u64, coeffs: Vec<Rational>) -> Self {
        Cyclo { modulus: n, coeffs: reduce(n, coeffs) }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Power-basis coefficients; the length equals `φ(modulus)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Re-expresses the element in `Q(ζ_l)`; `l` must be a multiple of the modulus.
    pub fn lift(&self, l: u64) -> Cyclo {
        assert!(l.is_multiple_of(self.modulus), "cannot lift modulus {} to {l}", self.modulus);
        if l == self.modulus {
            return self.clone();
        }
        let step = (l / self.modulus) as usize;
        let mut v = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[k * step] = c.clone();
        }
        Self::from_coeffs(l, v)
    }

    fn common(&self, other: &Cyclo) -> (Cyclo, Cyclo) {
        let l = lcm_u64(self.modulus, other.modulus);
        (self.lift(l), other.lift(l))
    }

    pub fn scale(&self, r: &Rational) -> Cyclo {
        Cyclo { modulus: self.modulus, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Multiplies by `ζ_n^k`; the result lives at `lcm(n, modulus)`.
    pub fn mul_root(&self, n: u64, k: i64) -> Cyclo {
        let l = lcm_u64(self.modulus, n);
        let x = self.lift(l);
        let shift = (k.rem_euclid(n as i64) as u64 * (l / n)) as usize;
        let mut v = vec![Rational::zero(); x.coeffs.len() + shift];
        for (i, c) in x.coeffs.into_iter().enumerate() {
            v[i + shift] = c;
        }
        Self::from_coeffs(l, v)
    }

    pub fn inv(&self) -> Result<Cyclo> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let phi: Vec<Rational> = cyclotomic_poly(self.modulus)
            .into_iter()
            .map(|c| Rational::from_integer(c.into()))
            .collect();
        let u = upoly::inverse_mod(&self.coeffs, &phi).ok_or(Error::DivisionByZero)?;
        Ok(Self::from_coeffs(self.modulus, if u.is_empty() { vec![Rational::zero()] } else { u }))
    }

    pub fn pow(&self, e: u32) -> Cyclo {
        let mut acc = Cyclo::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The rational value of the element, if it lies in `Q`.
    pub fn to_rational(&self) -> Result<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Ok(self.coeffs[0].clone())
        } else {
            Err(Error::NotRational)
        }
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.modulus == other.modulus {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclo {}

impl From<Rational> for Cyclo {
    fn from(r: Rational) -> Self {
        Cyclo::from_rational(r)
    }
}

impl<'a> Add<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        if self.modulus == rhs.modulus {
            let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
            return Cyclo { modulus: self.modulus, coeffs };
        }
        let (a, b) = self.common(rhs);
        &a + &b
    }
}

impl<'a> Sub<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        self + &(-rhs)
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { modulus: self.modulus, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        if self.modulus != rhs.modulus {
            let (a, b) = self.common(rhs);
            return &a * &b;
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    v[i + j] += x * y;
                }
            }
        }
        Cyclo::from_coeffs(self.modulus, v)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Sums `Σ c_i ζ_n^{k_i}` in `Q[x]/(x^n − 1)` and reduces once at the end.
/// Multiplying by a root of unity is then a rotation.
pub(crate) struct RootAccumulator {
    modulus: u64,
    buf: Vec<Rational>,
}

impl RootAccumulator {
    pub(crate) fn new(modulus: u64) -> Self {
        RootAccumulator { modulus, buf: vec![Rational::zero(); modulus as usize] }
    }

    /// Adds `ζ_n^k · x`; the modulus of `x` must divide `n`.
    pub(crate) fn add_rotated(&mut self, x: &Cyclo, k: u64) {
        let x = x.lift(self.modulus);
        let n = self.modulus as usize;
        for (i, c) in x.coeffs.iter().enumerate() {
            if !c.is_zero() {
                self.buf[(i + k as usize) % n] += c;
            }
        }
    }

    pub(crate) fn finish(self) -> Cyclo {
        Cyclo::from_coeffs(self.modulus, self.buf)
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let root = match k {
                0 => String::new(),
                1 => format!("ζ{}", self.modulus),
                _ => format!("ζ{}^{k}", self.modulus),
            };
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "{root}")?,
                _ => write!(f, "{mag}·{root}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CycloRecord {
    modulus: u64,
    #[serde(with = "serde_rational_vec")]
    coeffs: Vec<Rational>,
}

impl Serialize for Cyclo {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycloRecord { modulus: self.modulus, coeffs: self.coeffs.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclo {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = CycloRecord::deserialize(d)?;
        if r.modulus == 0 {
            return Err(serde::de::Error::custom("modulus must be positive"));
        }
        Ok(Cyclo::from_coeffs(r.modulus, r.coeffs))
    }
}

/// Multiplicative order of `ζ_n^k`.
pub(crate) fn root_order(n: u64, k: u64) -> u64 {
    n / n.gcd(&(k % n))
}
