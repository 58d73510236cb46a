//! Characters `A(M)` and the quasi-polynomial `f_Ω = Σ_θ θ^α p_θ(α)` that
//! agrees with `t(·|M)` on the closure of a chamber.

use std::fmt;

use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{lcm_u64, Character, Cyclo, Rational, RootAccumulator};
use crate::geometry::{in_closure, Chamber, ChamberRecord};
use crate::intlin::{bases, det, in_open_cone, is_k_prime, parallelepiped_points, solve_character, to_rat, IntMatrix};
use crate::poly::{box_taylor, MPoly};
use crate::truncpow::tp_polynomial;

/// One character `θ ∈ A(M)` with its fixed columns.
#[derive(Clone, Debug)]
pub struct CharacterData {
    pub theta: Character,
    /// Column indices of `M_θ = {m : θ^m = 1}`.
    pub theta_columns: Vec<usize>,
    pub m_theta: IntMatrix,
    /// `#M − #M_θ`.
    pub kappa: usize,
    pub r: u64,
}

impl CharacterData {
    fn new(m: &IntMatrix, theta: Character) -> Self {
        let theta_columns: Vec<usize> =
            (0..m.n()).filter(|&j| theta.exponent_of(m.column(j)).expect("dimension checked") == 0).collect();
        let m_theta = m.select(&theta_columns);
        let kappa = m.n() - theta_columns.len();
        let r = least_r(m, &theta);
        CharacterData { theta, theta_columns, m_theta, kappa, r }
    }

    /// `M̃_r`: columns of `M_θ` kept, the others multiplied by `r`.
    pub fn scaled_matrix(&self, m: &IntMatrix) -> IntMatrix {
        let cols = (0..m.n())
            .map(|j| {
                let f = if self.theta_columns.contains(&j) { 1 } else { self.r as i64 };
                m.column(j).iter().map(|x| x * f).collect()
            })
            .collect();
        IntMatrix::from_columns_unchecked(m.s(), cols)
    }

    fn outside_columns(&self, m: &IntMatrix) -> Vec<usize> {
        (0..m.n()).filter(|j| !self.theta_columns.contains(j)).collect()
    }
}

/// Every `θ ∈ A(M)`, over the common modulus `lcm |det Y|`, identity first.
pub fn characters(m: &IntMatrix) -> Vec<CharacterData> {
    let bs = bases(m);
    let modulus = bs.iter().fold(1, |l, b| lcm_u64(l, b.determinant.unsigned_abs()));
    let mut seen: Vec<Vec<u64>> = Vec::new();
    for b in &bs {
        let y = m.square(&b.indices);
        for l in parallelepiped_points(&y).expect("basis is nonsingular") {
            let theta = solve_character(&y, &l).expect("lattice point of the basis").lift(modulus);
            seen.push(theta.exponents().to_vec());
        }
    }
    seen.sort();
    seen.dedup();
    seen.into_iter()
        .map(|a| {
            let a: Vec<i64> = a.into_iter().map(|x| x as i64).collect();
            CharacterData::new(m, Character::new(modulus, &a))
        })
        .collect()
}

/// Least `r ≥ 1` with `(θ^m)^r = 1` for every column.
pub fn least_r(m: &IntMatrix, theta: &Character) -> u64 {
    m.columns().iter().fold(1, |l, c| lcm_u64(l, theta.order_of(c).expect("dimension checked")))
}

/// `s_j(x) = (−1)^j Σ_{k=1}^{r−1} k^j x^k`.
pub fn s_poly(j: u32, r: u64, x: &Cyclo) -> Cyclo {
    let mut acc = Cyclo::zero();
    let mut power = Cyclo::one();
    for k in 1..r {
        power = &power * x;
        acc = &acc + &power.scale(&Rational::from_integer(num_traits::pow(num_bigint::BigInt::from(k), j as usize)));
    }
    if j % 2 == 1 {
        -acc
    } else {
        acc
    }
}

fn factorial(k: u32) -> Rational {
    (1..=k).fold(Rational::one(), |f, i| f * Rational::from_integer(i.into()))
}

/// The non-periodic part `p_θ` for `θ = e`, split by degree:
/// entry `μ` is homogeneous of degree `n − s − μ`.
pub fn polynomial_part(m: &IntMatrix, omega: &Chamber) -> Result<Vec<MPoly<Rational>>> {
    let d = (m.n() - m.s()) as u32;
    let table = box_taylor(m, d);
    let mut parts = vec![tp_polynomial(m, omega)?.poly];
    for mu in 1..=d {
        let mut p = MPoly::zero(m.s());
        for (j, pj) in parts.iter().enumerate() {
            p = p.sub(&table.apply(pj, mu - j as u32));
        }
        parts.push(p);
    }
    Ok(parts)
}

/// The part `p_θ` split by degree: entry `μ` is homogeneous of degree
/// `n − s − κ − μ`. All zero when `Ω` lies outside `cone(M_θ)`.
pub fn character_part(m: &IntMatrix, omega: &Chamber, cd: &CharacterData) -> Result<Vec<MPoly<Cyclo>>> {
    let s = m.s();
    let top = (m.n() - s - cd.kappa) as u32;
    if !in_open_cone(&cd.m_theta, omega.witness()) {
        return Ok(vec![MPoly::zero(s); top as usize + 1]);
    }
    let t_theta = tp_polynomial(&cd.m_theta, omega)?.poly.to_cyclo();

    // q[μ] = Σ_{j_1+…+j_κ=μ} Π_i s_{j_i+1}(θ^{−m_i})/(j_i+1)! · D_{m_i}^{j_i} T(·|M_θ), built one column at a time
    let mut q: Vec<MPoly<Cyclo>> = vec![MPoly::zero(s); top as usize + 1];
    q[0] = t_theta;
    for i in cd.outside_columns(m) {
        let col = m.column(i);
        let neg: Vec<i64> = col.iter().map(|x| -x).collect();
        let root = Cyclo::from_root(cd.theta.modulus(), cd.theta.exponent_of(&neg)? as i64);
        let weights: Vec<Cyclo> =
            (0..=top).map(|j| s_poly(j + 1, cd.r, &root).scale(&(Rational::one() / factorial(j + 1)))).collect();
        let mut next = vec![MPoly::zero(s); top as usize + 1];
        for (t, qt) in q.iter().enumerate() {
            let mut deriv = qt.clone();
            for j in 0..=(top as usize - t) {
                if deriv.is_zero() {
                    break;
                }
                next[t + j] = next[t + j].add(&deriv.mul_coeff(&weights[j]));
                deriv = deriv.dir_derivative(col);
            }
        }
        q = next;
    }
    let norm = Rational::one() / num_traits::pow(Rational::from_integer(cd.r.into()), cd.kappa);
    let q: Vec<MPoly<Cyclo>> = q.iter().map(|p| p.scale(&norm)).collect();

    let table = box_taylor(&cd.scaled_matrix(m), top);
    let mut parts: Vec<MPoly<Cyclo>> = Vec::with_capacity(q.len());
    for (mu, qm) in q.iter().enumerate() {
        let mut p = qm.clone();
        for (j, pj) in parts.iter().enumerate() {
            p = p.sub(&table.apply(pj, (mu - j) as u32));
        }
        parts.push(p);
    }
    Ok(parts)
}

/// One summand `θ^α p_θ(α)`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuasiPart {
    pub character: Character,
    pub poly: MPoly<Cyclo>,
}

/// `f_Ω(α) = Σ_θ θ^α p_θ(α)`, valid on the closure of `chamber`.
#[derive(Clone, Debug)]
pub struct QuasiPolynomial {
    pub modulus: u64,
    pub parts: Vec<QuasiPart>,
    pub chamber: Chamber,
}

impl QuasiPolynomial {
    /// `Σ_θ θ^α p_θ(α)` at any integer point, with no validity check.
    pub fn evaluate_unchecked(&self, alpha: &[i64]) -> Result<Rational> {
        let mut acc = RootAccumulator::new(self.modulus);
        for part in &self.parts {
            if part.poly.is_zero() {
                continue;
            }
            let k = part.character.lift(self.modulus).exponent_of(alpha)?;
            acc.add_rotated(&part.poly.evaluate_int(alpha)?, k);
        }
        acc.finish().to_rational().map_err(|_| Error::ImaginaryResidue)
    }

    pub fn part(&self, theta: &Character) -> Option<&MPoly<Cyclo>> {
        self.parts.iter().find(|p| &p.character == theta).map(|p| &p.poly)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "modulus": self.modulus,
            "chamber": serde_json::to_value(self.chamber.to_record()).expect("record serializes"),
            "parts": self.parts.iter().map(|p| json!({
                "character": p.character.lift(self.modulus).exponents(),
                "poly": p.poly.to_json(),
            })).collect::<Vec<_>>(),
        })
    }

    /// Inverse of [`QuasiPolynomial::to_json`]; the chamber is rebound to `m`.
    pub fn from_json(v: &Value, m: &IntMatrix) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("quasi-polynomial: {what}"));
        let modulus = v["modulus"].as_u64().filter(|&n| n >= 1).ok_or_else(|| bad("modulus"))?;
        let record = ChamberRecord::deserialize(&v["chamber"]).map_err(|e| bad(&e.to_string()))?;
        let chamber = record.bind(m)?;
        let parts = v["parts"]
            .as_array()
            .ok_or_else(|| bad("parts"))?
            .iter()
            .map(|p| {
                let exps: Vec<i64> = Vec::deserialize(&p["character"]).map_err(|e| bad(&e.to_string()))?;
                if exps.len() != m.s() {
                    return Err(Error::DimensionMismatch { expected: m.s(), found: exps.len() });
                }
                Ok(QuasiPart { character: Character::new(modulus, &exps), poly: MPoly::from_json(&p["poly"])? })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QuasiPolynomial { modulus, parts, chamber })
    }
}

impl Serialize for QuasiPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v = self.to_json();
        let mut st = s.serialize_struct("QuasiPolynomial", 3)?;
        st.serialize_field("modulus", &v["modulus"])?;
        st.serialize_field("chamber", &v["chamber"])?;
        st.serialize_field("parts", &v["parts"])?;
        st.end()
    }
}

impl fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "chamber {}", self.chamber)?;
        let mut any = false;
        for p in self.parts.iter().filter(|p| !p.poly.is_zero()) {
            writeln!(f, "  θ = {}: {}", p.character, p.poly)?;
            any = true;
        }
        if !any {
            writeln!(f, "  0")?;
        }
        Ok(())
    }
}

fn assemble(cd: &CharacterData, graded: Vec<MPoly<Cyclo>>, s: usize) -> QuasiPart {
    let poly = graded.iter().fold(MPoly::zero(s), |acc, p| acc.add(p));
    QuasiPart { character: cd.theta.clone(), poly }
}

/// `f_Ω` with one part per character of `A(M)`, each from its own graded recurrence.
pub fn quasi_formula(m: &IntMatrix, omega: &Chamber) -> Result<QuasiPolynomial> {
    let chars = characters(m);
    let modulus = chars[0].theta.modulus();
    let parts = chars
        .iter()
        .map(|cd| Ok(assemble(cd, character_part(m, omega, cd)?, m.s())))
        .collect::<Result<Vec<_>>>()?;
    Ok(QuasiPolynomial { modulus, parts, chamber: omega.clone() })
}

/// `f_Ω` for 1-prime `M`, where every nontrivial part is the constant
/// `(1/|det M_θ|) Π_{w ∉ M_θ} 1/(1 − θ^{−w})` on `cone(M_θ)`.
pub fn one_prime_formula(m: &IntMatrix, omega: &Chamber) -> Result<QuasiPolynomial> {
    if m.n() <= m.s() || !is_k_prime(m, 1) {
        return Err(Error::NotKPrime(1));
    }
    let chars = characters(m);
    let modulus = chars[0].theta.modulus();
    let s = m.s();
    let mut parts = Vec::with_capacity(chars.len());
    for cd in &chars {
        if cd.theta.is_identity() {
            let p = polynomial_part(m, omega)?.iter().fold(MPoly::zero(s), |acc, p| acc.add(p));
            parts.push(QuasiPart { character: cd.theta.clone(), poly: p.to_cyclo() });
        } else if cd.theta_columns.len() != s {
            parts.push(assemble(cd, character_part(m, omega, cd)?, s));
        } else if !in_open_cone(&cd.m_theta, omega.witness()) {
            parts.push(QuasiPart { character: cd.theta.clone(), poly: MPoly::zero(s) });
        } else {
            let all: Vec<usize> = (0..s).collect();
            let d = det(&cd.m_theta.square(&all)).unsigned_abs();
            let mut c = Cyclo::from_rational(Rational::new(One::one(), d.into()));
            for i in cd.outside_columns(m) {
                let neg: Vec<i64> = m.column(i).iter().map(|x| -x).collect();
                let root = Cyclo::from_root(modulus, cd.theta.exponent_of(&neg)? as i64);
                c = &c * &(&Cyclo::one() - &root).inv()?;
            }
            parts.push(QuasiPart { character: cd.theta.clone(), poly: MPoly::constant(s, c) });
        }
    }
    Ok(QuasiPolynomial { modulus, parts, chamber: omega.clone() })
}

/// `t(α|M)` through `f`, for `α` in the closure of `f`'s chamber.
pub fn evaluate_quasi(f: &QuasiPolynomial, alpha: &[i64]) -> Result<u64> {
    if alpha.len() != f.chamber.dim() {
        return Err(Error::DimensionMismatch { expected: f.chamber.dim(), found: alpha.len() });
    }
    if !in_closure(&to_rat(alpha), &f.chamber) {
        return Err(Error::OutsideClosure);
    }
    let v = f.evaluate_unchecked(alpha)?;
    if !v.is_integer() || v < Rational::zero() {
        return Err(Error::NotCount(v.to_string()));
    }
    v.to_integer().try_into().map_err(|_| Error::NotCount(v.to_string()))
}
