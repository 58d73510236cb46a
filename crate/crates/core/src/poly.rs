//! Sparse multivariate polynomials with exact coefficients, homogeneous
//! interpolation, and the Taylor table of the box-spline Fourier transform.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, Cyclo, Rational};
use crate::intlin::IntMatrix;

/// Scalar domain of a polynomial: `Q` or a cyclotomic field.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    fn from_rational(r: Rational) -> Self;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(v: &Value) -> Result<Self> {
        v.as_str().ok_or_else(|| Error::Parse("rational must be a string".into())).and_then(parse_rational)
    }
}

impl Coeff for Cyclo {
    fn zero() -> Self {
        Cyclo::zero()
    }
    fn one() -> Self {
        Cyclo::one()
    }
    fn is_zero(&self) -> bool {
        Cyclo::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        Cyclo::scale(self, r)
    }
    fn from_rational(r: Rational) -> Self {
        Cyclo::from_rational(r)
    }
    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("cyclotomic serialization")
    }
    fn from_json(v: &Value) -> Result<Self> {
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A polynomial in `vars` variables, keyed by exponent multi-index.
/// No zero coefficients are stored.
#[derive(Clone, Debug, PartialEq)]
pub struct MPoly<C> {
    vars: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coeff> MPoly<C> {
    pub fn zero(vars: usize) -> Self {
        MPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, c: C) -> Self {
        Self::monomial(vec![0; vars], c)
    }

    pub fn monomial(exp: Vec<u32>, c: C) -> Self {
        let vars = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        MPoly { vars, terms }
    }

    /// The linear form `Σ y_i x_i`.
    pub fn linear(y: &[i64]) -> Self {
        let mut p = Self::zero(y.len());
        for (i, &yi) in y.iter().enumerate() {
            let mut e = vec![0; y.len()];
            e[i] = 1;
            p.add_term(e, C::from_rational(Rational::from_integer(yi.into())));
        }
        p
    }

    pub fn from_terms(vars: usize, terms: impl IntoIterator<Item = (Vec<u32>, C)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars, "exponent length must equal the number of variables");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: Vec<u32>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(old) => {
                let sum = old.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[u32]) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|c| c.scale(r))
    }

    pub fn mul_coeff(&self, k: &C) -> Self {
        self.map(|c| c.mul(k))
    }

    fn map(&self, f: impl Fn(&C) -> C) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        let mut out = MPoly::zero(self.vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// `∂/∂x_i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            out.add_term(ne, c.scale(&Rational::from_integer(e[i].into())));
        }
        out
    }

    /// `D^u = ∂_1^{u_1} ⋯ ∂_s^{u_s}`.
    pub fn derivative(&self, u: &[u32]) -> Self {
        let mut p = self.clone();
        for (i, &k) in u.iter().enumerate() {
            for _ in 0..k {
                if p.is_zero() {
                    return p;
                }
                p = p.partial(i);
            }
        }
        p
    }

    /// Directional derivative `D_y = Σ y_j ∂_j`.
    pub fn dir_derivative(&self, y: &[i64]) -> Self {
        assert_eq!(y.len(), self.vars, "direction length must equal the number of variables");
        let mut out = Self::zero(self.vars);
        for (i, &yi) in y.iter().enumerate() {
            if yi != 0 {
                out = out.add(&self.partial(i).scale(&Rational::from_integer(yi.into())));
            }
        }
        out
    }

    pub fn homogeneous_component(&self, d: u32) -> Self {
        let terms = self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == d);
        MPoly { vars: self.vars, terms: terms.map(|(e, c)| (e.clone(), c.clone())).collect() }
    }

    pub fn evaluate(&self, x: &[Rational]) -> Result<C> {
        if x.len() != self.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, found: x.len() });
        }
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mono = e.iter().zip(x).fold(<Rational as One>::one(), |m, (&k, xi)| m * num_traits::pow(xi.clone(), k as usize));
            acc = acc.add(&c.scale(&mono));
        }
        Ok(acc)
    }

    pub fn evaluate_int(&self, x: &[i64]) -> Result<C> {
        let xr: Vec<Rational> = x.iter().map(|&v| Rational::from_integer(v.into())).collect();
        self.evaluate(&xr)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self.terms.iter().map(|(e, c)| json!({"exp": e, "coeff": c.to_json()})).collect();
        json!({"vars": self.vars, "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("polynomial: {m}"));
        let vars = v.get("vars").and_then(Value::as_u64).ok_or_else(|| bad("missing vars"))? as usize;
        let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
        let mut p = Self::zero(vars);
        for t in terms {
            let exp: Vec<u32> = serde_json::from_value(t.get("exp").cloned().ok_or_else(|| bad("missing exp"))?)
                .map_err(|e| bad(&e.to_string()))?;
            if exp.len() != vars {
                return Err(bad("exponent length differs from vars"));
            }
            let c = C::from_json(t.get("coeff").ok_or_else(|| bad("missing coeff"))?)?;
            p.add_term(exp, c);
        }
        Ok(p)
    }

    fn ordered_terms(&self) -> Vec<(&Vec<u32>, &C)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        ts
    }
}

impl MPoly<Rational> {
    pub fn to_cyclo(&self) -> MPoly<Cyclo> {
        self.map_coeffs(|c| Cyclo::from_rational(c.clone()))
    }
}

fn monomial_string(e: &[u32]) -> String {
    e.iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
        .collect::<Vec<_>>()
        .join("·")
}

impl fmt::Display for MPoly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.ordered_terms().into_iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = monomial_string(e);
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{mag}·{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for MPoly<Cyclo> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .ordered_terms()
            .into_iter()
            .map(|(e, c)| {
                let mono = monomial_string(e);
                if mono.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})·{mono}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Coeff> Serialize for MPoly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de, C: Coeff> Deserialize<'de> for MPoly<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        Self::from_json(&v).map_err(D::Error::custom)
    }
}

/// All exponent vectors in `s` variables of total degree exactly `d`, in
/// lexicographically decreasing order.
pub fn homogeneous_monomials(s: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(s: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == s {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k);
            rec(s, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if s == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(s, d, &mut Vec::new(), &mut out);
    out
}

/// The unique homogeneous polynomial of degree `d` through the samples.
///
/// Fails with [`Error::InconsistentSamples`] when an overdetermined system
/// has no solution and [`Error::SingularSystem`] when the samples do not
/// determine the polynomial.
pub fn interpolate_homogeneous(samples: &[(Vec<Rational>, Rational)], d: u32) -> Result<MPoly<Rational>> {
    let s = samples.first().map(|(x, _)| x.len()).ok_or(Error::SingularSystem)?;
    if let Some((x, _)) = samples.iter().find(|(x, _)| x.len() != s) {
        return Err(Error::DimensionMismatch { expected: s, found: x.len() });
    }
    let monos = homogeneous_monomials(s, d);
    let cols = monos.len();
    let mut rows: Vec<Vec<Rational>> = samples
        .iter()
        .map(|(x, v)| {
            let mut row: Vec<Rational> = monos
                .iter()
                .map(|e| e.iter().zip(x).fold(<Rational as One>::one(), |m, (&k, xi)| m * num_traits::pow(xi.clone(), k as usize)))
                .collect();
            row.push(v.clone());
            row
        })
        .collect();

    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(cols);
    for col in 0..cols {
        let Some(p) = (pivot_row..rows.len()).find(|&r| !Zero::is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(pivot_row, p);
        let inv = <Rational as One>::one() / &rows[pivot_row][col];
        for v in rows[pivot_row].iter_mut() {
            *v *= &inv;
        }
        let prow = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || Zero::is_zero(&row[col]) {
                continue;
            }
            let f = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&prow) {
                *v -= &f * pv;
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|r| !Zero::is_zero(&r[cols])) {
        return Err(Error::InconsistentSamples);
    }
    if pivots.len() < cols {
        return Err(Error::SingularSystem);
    }
    Ok(MPoly::from_terms(s, monos.into_iter().zip(rows).map(|(e, r)| (e, r[cols].clone()))))
}

/// Taylor coefficients `(−i)^{|u|} D^u B̂(0|M) / u!` for `|u| ≤ max_degree`.
///
/// With `t = ζ·m`, each column contributes `(1 − e^{−t})/t = Σ_k (−t)^k/(k+1)!`
/// after substituting `ζ → −iζ`, so every entry is rational.
#[derive(Clone, Debug, PartialEq)]
pub struct TaylorTable {
    max_degree: u32,
    series: MPoly<Rational>,
}

impl TaylorTable {
    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn get(&self, u: &[u32]) -> Rational {
        self.series.coeff(u)
    }

    /// Nonzero entries with `|u| = k`.
    pub fn entries_of_degree(&self, k: u32) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.series.terms().filter(move |(e, _)| e.iter().sum::<u32>() == k)
    }

    /// `Σ_{|u|=k} table[u] · D^u p`.
    pub fn apply<C: Coeff>(&self, p: &MPoly<C>, k: u32) -> MPoly<C> {
        let mut out = MPoly::zero(p.vars());
        for (u, c) in self.entries_of_degree(k) {
            out = out.add(&p.derivative(u).scale(c));
        }
        out
    }
}

fn truncate(p: MPoly<Rational>, d: u32) -> MPoly<Rational> {
    let vars = p.vars();
    MPoly::from_terms(vars, p.terms.into_iter().filter(|(e, _)| e.iter().sum::<u32>() <= d))
}

pub fn box_taylor(m: &IntMatrix, d: u32) -> TaylorTable {
    let s = m.s();
    let mut product = MPoly::constant(s, <Rational as One>::one());
    for col in m.columns() {
        let t = MPoly::<Rational>::linear(col);
        let mut factor = MPoly::zero(s);
        let mut power = MPoly::constant(s, <Rational as One>::one());
        let mut fact = <Rational as One>::one();
        for k in 0..=d {
            fact *= Rational::from_integer((k + 1).into());
            let sign = if k % 2 == 0 { <Rational as One>::one() } else { -<Rational as One>::one() };
            factor = factor.add(&power.scale(&(sign / &fact)));
            power = truncate(power.mul(&t), d);
        }
        product = truncate(product.mul(&factor), d);
    }
    TaylorTable { max_degree: d, series: product }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    fn p2(terms: &[([u32; 2], Rational)]) -> MPoly<Rational> {
        MPoly::from_terms(2, terms.iter().map(|(e, c)| (e.to_vec(), c.clone())))
    }

    fn r(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn directional_derivatives() {
        let p = p2(&[([2, 1], int(1))]);
        assert_eq!(p.dir_derivative(&[1, 0]), p2(&[([1, 1], int(2))]));
        assert!(MPoly::constant(2, int(7)).dir_derivative(&[3, -1]).is_zero());
        let q = p2(&[([2, 0], rat(1, 24))]);
        assert_eq!(q.dir_derivative(&[1, 0]).dir_derivative(&[1, 0]), MPoly::constant(2, rat(1, 12)));
    }

    #[test]
    fn components() {
        let p = MPoly::from_terms(1, [(vec![2], int(1)), (vec![1], int(1)), (vec![0], int(1))]);
        assert_eq!(p.homogeneous_component(1), MPoly::monomial(vec![1], int(1)));
        let h = p2(&[([2, 0], int(1)), ([1, 1], int(3))]);
        assert_eq!(h.homogeneous_component(2), h);
        let sum = (0..=2).fold(MPoly::zero(1), |acc, d| acc.add(&p.homogeneous_component(d)));
        assert_eq!(sum, p);
    }

    #[test]
    fn evaluation() {
        let q = p2(&[([2, 0], rat(1, 24))]);
        assert_eq!(q.evaluate(&r(&[12, 0])).unwrap(), int(6));
        assert_eq!(MPoly::<Rational>::zero(2).evaluate(&r(&[3, 4])).unwrap(), int(0));
        let omega2 = p2(&[([1, 1], rat(1, 18)), ([2, 0], rat(-1, 72)), ([0, 2], rat(-1, 72))]);
        assert_eq!(omega2.evaluate(&r(&[6, 6])).unwrap(), int(1));
        assert!(omega2.evaluate(&r(&[6])).is_err());
    }

    #[test]
    fn interpolation() {
        let x2 = p2(&[([2, 0], int(1))]);
        let samples: Vec<_> = [[1, 2], [3, -1], [2, 5]]
            .iter()
            .map(|pt| (r(pt), x2.evaluate(&r(pt)).unwrap()))
            .collect();
        assert_eq!(interpolate_homogeneous(&samples, 2).unwrap(), x2);
        let zeros: Vec<_> = [[1, 2], [3, -1], [2, 5]].iter().map(|pt| (r(pt), int(0))).collect();
        assert!(interpolate_homogeneous(&zeros, 2).unwrap().is_zero());
        // two samples cannot pin a quadratic form in two variables
        assert_eq!(interpolate_homogeneous(&samples[..2], 2), Err(Error::SingularSystem));
        let mut bad = samples.clone();
        bad.push((r(&[1, 1]), int(5)));
        assert_eq!(interpolate_homogeneous(&bad, 2), Err(Error::InconsistentSamples));
    }

    #[test]
    fn taylor_two_coins() {
        for (a, b) in [(2, 3), (3, 4), (5, 7)] {
            let m = IntMatrix::from_rows(vec![vec![a, b]]).unwrap();
            let t = box_taylor(&m, 3);
            assert_eq!(t.get(&[0]), int(1));
            assert_eq!(t.get(&[1]), rat(-(a + b), 2));
        }
    }

    #[test]
    fn taylor_single_column_series() {
        // (1 − e^{−t})/t = 1 − t/2 + t²/6 − t³/24 + …, oracle from direct series division
        let t = box_taylor(&IntMatrix::from_rows(vec![vec![1]]).unwrap(), 4);
        let expected = [int(1), rat(-1, 2), rat(1, 6), rat(-1, 24), rat(1, 120)];
        for (k, e) in expected.iter().enumerate() {
            assert_eq!(&t.get(&[k as u32]), e);
        }
    }

    #[test]
    fn taylor_unit_indices_are_half_column_sums() {
        let m = IntMatrix::from_rows(vec![vec![3, 2, 1, 0], vec![0, 1, 2, 2]]).unwrap();
        let t = box_taylor(&m, 2);
        assert_eq!(t.get(&[1, 0]), rat(-6, 2));
        assert_eq!(t.get(&[0, 1]), rat(-5, 2));
    }

    #[test]
    fn taylor_of_concatenation_is_product() {
        let m = IntMatrix::from_rows(vec![vec![3, 2, 1, 0], vec![0, 1, 2, 2]]).unwrap();
        let d = 3;
        let whole = box_taylor(&m, d);
        let a = box_taylor(&m.select(&[0, 1]), d);
        let b = box_taylor(&m.select(&[2, 3]), d);
        let prod = truncate(a.series.mul(&b.series), d);
        assert_eq!(whole.series, prod);
    }

    #[test]
    fn json_round_trip() {
        let p = p2(&[([1, 1], rat(1, 18)), ([0, 0], rat(-3, 4))]);
        let v = p.to_json();
        assert_eq!(v["vars"], 2);
        assert_eq!(MPoly::<Rational>::from_json(&v).unwrap(), p);
        let c = p.to_cyclo().mul_coeff(&Cyclo::from_root(3, 1));
        let back: MPoly<Cyclo> = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn display() {
        let p = p2(&[([1, 1], rat(1, 18)), ([2, 0], rat(-1, 72)), ([0, 0], rat(3, 4)), ([1, 0], int(1))]);
        assert_eq!(p.to_string(), "-1/72·x1^2 + 1/18·x1·x2 + x1 + 3/4");
    }

    fn hom_poly(d: u32) -> impl Strategy<Value = MPoly<Rational>> {
        let monos = homogeneous_monomials(3, d);
        proptest::collection::vec((-6i64..=6, 1i64..=5), monos.len()).prop_map(move |cs| {
            MPoly::from_terms(3, monos.iter().cloned().zip(cs.into_iter().map(|(p, q)| rat(p, q))))
        })
    }

    proptest! {
        #[test]
        fn derivatives_commute(p in hom_poly(4), y in proptest::collection::vec(-3i64..=3, 3),
                               z in proptest::collection::vec(-3i64..=3, 3)) {
            prop_assert_eq!(p.dir_derivative(&y).dir_derivative(&z), p.dir_derivative(&z).dir_derivative(&y));
        }

        #[test]
        fn interpolation_inverts_sampling(d in 0u32..=4, seed in 0u64..1000) {
            let monos = homogeneous_monomials(3, d);
            let p = MPoly::from_terms(3, monos.iter().enumerate()
                .map(|(i, e)| (e.clone(), rat(((seed as i64 + 7 * i as i64) % 11) - 5, 1 + (i as i64 % 3)))));
            // principal lattice on the plane x1 = 1 plus two extra points
            let mut pts: Vec<Vec<Rational>> = Vec::new();
            for a in 0..=d as i64 {
                for b in 0..=(d as i64 - a) {
                    pts.push(vec![int(1), int(a), int(b)]);
                }
            }
            pts.push(vec![int(2), rat(1, 3), rat(5, 7)]);
            pts.push(vec![int(3), int(-1), rat(1, 2)]);
            let samples: Vec<_> = pts.into_iter().map(|x| { let v = p.evaluate(&x).unwrap(); (x, v) }).collect();
            prop_assert_eq!(interpolate_homogeneous(&samples, d).unwrap(), p);
        }
    }
}
