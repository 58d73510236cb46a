//! Volumes, Ehrhart quasi-polynomials, the Pitman–Stanley polytope and
//! two-coin counting.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{fractional_part, serde_rational_vec, Cyclo, Rational, RootAccumulator};
use crate::geometry::nearby_chamber;
use crate::intlin::{gcd_dets, in_open_cone, to_rat, IntMatrix};
use crate::quasi::quasi_formula;
use crate::truncpow::tp_value_continuous;

/// Relative volume of `{x ≥ 0 : Mx = b}`, which is `C_0 · T(b|M)` with
/// `C_0` the gcd of the maximal minors.
pub fn volume_eq(m: &IntMatrix, b: &[Rational]) -> Result<Rational> {
    if b.len() != m.s() {
        return Err(Error::DimensionMismatch { expected: m.s(), found: b.len() });
    }
    if !in_open_cone(m, b) {
        return Err(Error::DegeneratePolytope);
    }
    Ok(Rational::from_integer(gcd_dets(m).into()) * tp_value_continuous(b, m)?)
}

/// Volume of `{x ≥ 0 : Ax ≤ b}`, which is `T(b|(A, E))`.
pub fn volume_ineq(a: &IntMatrix, b: &[Rational]) -> Result<Rational> {
    let m = a.with_identity();
    m.validate()?;
    volume_eq(&m, b)
}

/// `L(g) = Σ_i c_i(g mod period) · g^i`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EhrhartQP {
    pub degree: usize,
    pub period: u64,
    /// `coeffs[i][ρ]`: coefficient of `g^i` when `g ≡ ρ (mod period)`.
    #[serde(with = "serde_table")]
    pub coeffs: Vec<Vec<Rational>>,
}

mod serde_table {
    use super::{serde_rational_vec, Rational};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Row(#[serde(with = "serde_rational_vec")] Vec<Rational>);

    pub fn serialize<S: Serializer>(t: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        t.iter().map(|r| Row(r.clone())).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        Ok(Vec::<Row>::deserialize(d)?.into_iter().map(|r| r.0).collect())
    }
}

impl EhrhartQP {
    pub fn evaluate(&self, g: u64) -> Rational {
        let rho = (g % self.period) as usize;
        let g = Rational::from_integer(g.into());
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, row| acc * &g + &row[rho])
    }

    /// Coefficient of `g^degree`, the relative volume.
    pub fn leading(&self) -> &Rational {
        &self.coeffs[self.degree][0]
    }
}

impl fmt::Display for EhrhartQP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = |rho: usize| -> String {
            let terms: Vec<String> = (0..=self.degree)
                .rev()
                .filter(|&i| !self.coeffs[i][rho].is_zero())
                .map(|i| {
                    let c = &self.coeffs[i][rho];
                    let power = if i == 1 { "g".to_string() } else { format!("g^{i}") };
                    match i {
                        0 => c.to_string(),
                        _ if c.is_one() => power,
                        _ if (-c).is_one() => format!("-{power}"),
                        _ => format!("{c}·{power}"),
                    }
                })
                .collect();
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join(" + ").replace("+ -", "- ")
            }
        };
        if self.period == 1 {
            return writeln!(f, "L(g) = {}", line(0));
        }
        writeln!(f, "period {}", self.period)?;
        for rho in 0..self.period as usize {
            writeln!(f, "g ≡ {rho}: L(g) = {}", line(rho))?;
        }
        Ok(())
    }
}

/// Ehrhart quasi-polynomial of `P = {β ≥ 0 : Mβ = b}` for integer `b`.
pub fn ehrhart(m: &IntMatrix, b: &[i64]) -> Result<EhrhartQP> {
    let bq = to_rat(b);
    if b.len() != m.s() {
        return Err(Error::DimensionMismatch { expected: m.s(), found: b.len() });
    }
    if !in_open_cone(m, &bq) {
        return Err(Error::DegeneratePolytope);
    }
    let f = quasi_formula(m, &nearby_chamber(&bq, m)?)?;
    let n = f.modulus;
    let d = m.n() - m.s();

    // each part contributes ζ_N^{g·k} Σ_i comp_i(p_θ)(b) g^i
    let mut terms: Vec<(u64, Vec<Cyclo>)> = Vec::new();
    let mut period = 1u64;
    for part in f.parts.iter().filter(|p| !p.poly.is_zero()) {
        let k = part.character.lift(n).exponent_of(b)?;
        period = period.lcm(&(n / n.gcd(&k)));
        let values = (0..=d as u32).map(|i| part.poly.homogeneous_component(i).evaluate(&bq)).collect::<Result<_>>()?;
        terms.push((k, values));
    }
    let mut coeffs = vec![Vec::with_capacity(period as usize); d + 1];
    for rho in 0..period {
        for (i, row) in coeffs.iter_mut().enumerate() {
            let mut acc = RootAccumulator::new(n);
            for (k, values) in &terms {
                acc.add_rotated(&values[i], (rho * k) % n);
            }
            row.push(acc.finish().to_rational().map_err(|_| Error::ImaginaryResidue)?);
        }
    }
    let period = (1..=period)
        .filter(|q| period.is_multiple_of(*q))
        .find(|&q| coeffs.iter().all(|row| row.iter().enumerate().all(|(rho, c)| *c == row[rho % q as usize])))
        .expect("the full period always qualifies");
    for row in &mut coeffs {
        row.truncate(period as usize);
    }
    Ok(EhrhartQP { degree: d, period, coeffs })
}

/// `K_n = {k ∈ Z_+^n : k_1 + … + k_j ≥ j for j < n, Σ k_i = n}`, in
/// lexicographic order.
pub fn kn_set(n: usize) -> Vec<Vec<u32>> {
    fn go(n: usize, prefix: &mut Vec<u32>, sum: usize, out: &mut Vec<Vec<u32>>) {
        let j = prefix.len();
        if j == n - 1 {
            prefix.push((n - sum) as u32);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        // the prefix of length j+1 must reach j+1
        for k in (j + 1).saturating_sub(sum)..=(n - sum) {
            prefix.push(k as u32);
            go(n, prefix, sum + k, out);
            prefix.pop();
        }
    }
    assert!(n >= 1, "n must be positive");
    let mut out = Vec::new();
    go(n, &mut Vec::with_capacity(n), 0, &mut out);
    out
}

/// Volume of `Π_n(x) = {y ≥ 0 : y_1 + … + y_i ≤ x_1 + … + x_i}`, computed
/// as a truncated power and by the closed form `Σ_{k∈K_n} x^k/k!`.
/// Returns both values; errs if they differ.
pub fn pitman_stanley(x: &[Rational]) -> Result<(Rational, Rational)> {
    let n = x.len();
    if n == 0 || x.iter().any(|v| !v.is_positive()) {
        return Err(Error::DegeneratePolytope);
    }
    // column j of A is e_j + … + e_n, so row i of Ay is the i-th prefix sum
    let cols: Vec<Vec<i64>> = (0..n).map(|j| (0..n).map(|i| i64::from(i >= j)).collect()).collect();
    let a = IntMatrix::from_columns(n, cols)?;
    let b: Vec<Rational> = x
        .iter()
        .scan(Rational::zero(), |acc, v| {
            *acc += v;
            Some(acc.clone())
        })
        .collect();
    let via_tp = volume_ineq(&a, &b)?;

    let closed = kn_set(n).iter().fold(Rational::zero(), |acc, k| {
        acc + k.iter().zip(x).fold(Rational::one(), |t, (&ki, xi)| {
            t * num_traits::pow(xi.clone(), ki as usize) / (1..=ki).fold(Rational::one(), |f, i| f * Rational::from_integer(i.into()))
        })
    });
    if via_tp != closed {
        return Err(Error::Mismatch(format!("truncated power {via_tp} vs closed form {closed}")));
    }
    Ok((via_tp, closed))
}

fn inverse_mod(x: u64, m: u64) -> u64 {
    let e = (x as i64).extended_gcd(&(m as i64));
    e.x.rem_euclid(m as i64) as u64
}

/// Number of `(x, y) ∈ Z_+^2` with `ax + by = n`:
/// `n/ab − {b⁻¹n/a} − {a⁻¹n/b} + 1`.
pub fn popoviciu(a: u64, b: u64, n: u64) -> Result<u64> {
    if a == 0 || b == 0 || a.gcd(&b) != 1 {
        return Err(Error::NotCoprime(a, b));
    }
    let r = |p: u128, q: u64| Rational::new(p.into(), q.into());
    let (bi, ai) = (inverse_mod(b % a, a), inverse_mod(a % b, b));
    let v = r(n as u128, a * b) - fractional_part(&r(bi as u128 * n as u128, a)) - fractional_part(&r(ai as u128 * n as u128, b))
        + Rational::one();
    debug_assert!(v.is_integer());
    Ok(v.to_integer().try_into().expect("count is a nonnegative integer"))
}

/// Both sides of `−{t/a} = (1−a)/(2a) + (1/a) Σ_{k=1}^{a−1} ζ_a^{tk}/(1 − ζ_a^{−k})`.
pub fn fractional_identity_check(t: i64, a: u64) -> Result<(Rational, Rational)> {
    assert!(a >= 1, "a must be positive");
    let left = -fractional_part(&Rational::new(t.into(), a.into()));
    let mut sum = Cyclo::zero();
    for k in 1..a as i64 {
        let den = &Cyclo::one() - &Cyclo::from_root(a, -k);
        sum = &sum + &(&Cyclo::from_root(a, t.rem_euclid(a as i64) * k) * &den.inv()?);
    }
    let inv_a = Rational::new(One::one(), a.into());
    let right = Rational::new((1 - a as i64).into(), (2 * a).into()) + sum.to_rational()? * inv_a;
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::oracle::{brute_ehrhart, brute_t};

    fn m(rows: Vec<Vec<i64>>) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn volumes() {
        assert_eq!(volume_eq(&m(vec![vec![1, 1]]), &[int(2)]).unwrap(), int(2));
        assert_eq!(volume_eq(&m(vec![vec![3, 5]]), &[int(7)]).unwrap(), rat(7, 15));
        assert_eq!(volume_ineq(&m(vec![vec![1, 1]]), &[int(1)]).unwrap(), rat(1, 2));
        assert_eq!(volume_ineq(&m(vec![vec![1, 0], vec![0, 1]]), &[int(2), int(2)]).unwrap(), int(4));
        assert_eq!(volume_ineq(&m(vec![vec![1, 0], vec![1, 1]]), &[int(1), int(2)]).unwrap(), rat(3, 2));
        assert_eq!(volume_eq(&m(vec![vec![1, 1]]), &[int(0)]), Err(Error::DegeneratePolytope));
        // (4,4) is on the wall x1 = x2 of the example arrangement
        let mex = m(vec![vec![3, 2, 1, 0], vec![0, 1, 2, 2]]);
        assert_eq!(volume_eq(&mex, &[int(4), int(4)]).unwrap(), rat(4, 9));
    }

    #[test]
    fn ehrhart_examples() {
        let cases: Vec<(IntMatrix, Vec<i64>, u64)> = vec![
            (m(vec![vec![1, 0, 1], vec![0, 1, 1]]), vec![1, 1], 1),
            (m(vec![vec![2, 3]]), vec![6], 1),
            (m(vec![vec![2, 3]]), vec![1], 6),
            (m(vec![vec![3, 2, 1, 0], vec![0, 1, 2, 2]]), vec![4, 4], 3),
        ];
        for (mm, b, _) in &cases {
            let e = ehrhart(mm, b).unwrap();
            for g in 0..=10 {
                assert_eq!(e.evaluate(g), Rational::from_integer(brute_ehrhart(mm, b, g).into()), "g = {g}");
            }
            assert_eq!(e.leading(), &volume_eq(mm, &to_rat(b)).unwrap());
            assert!(e.coeffs[e.degree].iter().all(|c| c == e.leading()));
            let back: EhrhartQP = serde_json::from_value(serde_json::to_value(&e).unwrap()).unwrap();
            assert_eq!(back, e);
        }
        assert_eq!(ehrhart(&cases[0].0, &[1, 1]).unwrap().coeffs, vec![vec![int(1)], vec![int(1)]]);
        assert_eq!(ehrhart(&cases[2].0, &[1]).unwrap().period, 6);
    }

    #[test]
    fn kn_sets() {
        assert_eq!(kn_set(1), vec![vec![1]]);
        assert_eq!(kn_set(2), vec![vec![1, 1], vec![2, 0]]);
        assert_eq!(kn_set(3), vec![vec![1, 1, 1], vec![1, 2, 0], vec![2, 0, 1], vec![2, 1, 0], vec![3, 0, 0]]);
        // |K_n| is the Catalan number C_n
        assert_eq!(kn_set(5).len(), 42);
    }

    #[test]
    fn pitman_stanley_values() {
        assert_eq!(pitman_stanley(&[int(5)]).unwrap().0, int(5));
        assert_eq!(pitman_stanley(&[int(1), int(1)]).unwrap().0, rat(3, 2));
        assert_eq!(pitman_stanley(&[int(1), int(1), int(1)]).unwrap().0, rat(8, 3));
        assert_eq!(pitman_stanley(&[rat(1, 2), rat(2, 3), rat(5, 7), rat(1, 3)]).map(|v| v.0 == v.1), Ok(true));
        assert_eq!(pitman_stanley(&[int(1), int(0)]), Err(Error::DegeneratePolytope));
    }

    #[test]
    fn popoviciu_counts() {
        assert_eq!(popoviciu(3, 4, 5).unwrap(), 0);
        assert_eq!(popoviciu(3, 4, 12).unwrap(), 2);
        assert_eq!(popoviciu(5, 7, 0).unwrap(), 1);
        assert_eq!(popoviciu(2, 4, 3), Err(Error::NotCoprime(2, 4)));
        let two_three = m(vec![vec![2, 3]]);
        for n in 0..100 {
            assert_eq!(popoviciu(2, 3, n).unwrap(), brute_t(&two_three, &[n as i64]));
            assert_eq!(popoviciu(1, 4, n).unwrap(), n / 4 + 1);
        }
    }

    #[test]
    fn fractional_identity() {
        assert_eq!(fractional_identity_check(1, 2).unwrap(), (rat(-1, 2), rat(-1, 2)));
        assert_eq!(fractional_identity_check(5, 3).unwrap(), (rat(-2, 3), rat(-2, 3)));
        for a in 1..=6 {
            for t in -3..=8 {
                let (l, r) = fractional_identity_check(t, a).unwrap();
                assert_eq!(l, r, "t={t} a={a}");
            }
        }
    }
}
