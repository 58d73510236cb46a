//! The hyperplane arrangement spanned by the columns of `M`, sign vectors,
//! and chambers (fundamental `M`-cones).
//!
//! A chamber is identified by the sign vector of an interior witness against
//! every arrangement hyperplane. In the plane these cells are exactly the
//! open sectors between consecutive column directions; in higher dimension
//! they may refine a chamber, which is harmless because every quantity built
//! here is single-valued on the finer cell.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{serde_rational_vec, Rational};
use crate::intlin::{dot_rat, facet_normals, hyperplane_normals, in_cone, in_open_cone, to_rat, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    fn of(x: &Rational) -> Sign {
        if x.is_positive() {
            Sign::Pos
        } else if x.is_negative() {
            Sign::Neg
        } else {
            Sign::Zero
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Neg => '-',
            Sign::Zero => '0',
            Sign::Pos => '+',
        }
    }
}

/// Primitive normals (first nonzero entry positive) of the distinct
/// hyperplanes spanned by independent `(s−1)`-subsets of columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    pub normals: Vec<Vec<i64>>,
}

pub fn arrangement(m: &IntMatrix) -> Arrangement {
    Arrangement { normals: hyperplane_normals(m) }
}

pub fn sign_vector(x: &[Rational], a: &Arrangement) -> Result<Vec<Sign>> {
    if let Some(nv) = a.normals.first() {
        if nv.len() != x.len() {
            return Err(Error::DimensionMismatch { expected: nv.len(), found: x.len() });
        }
    }
    Ok(a.normals.iter().map(|nv| Sign::of(&dot_rat(nv, x))).collect())
}

/// An open chamber: the witness, its signs against the arrangement, and in
/// the plane its two boundary rays.
#[derive(Clone, Debug)]
pub struct Chamber {
    witness: Vec<Rational>,
    signs: Vec<Sign>,
    normals: Vec<Vec<i64>>,
    facets: Vec<Vec<i64>>,
    rays: Option<(Vec<i64>, Vec<i64>)>,
}

impl Chamber {
    pub fn witness(&self) -> &[Rational] {
        &self.witness
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign_string(&self) -> String {
        self.signs.iter().map(|s| s.symbol()).collect()
    }

    pub fn normals(&self) -> &[Vec<i64>] {
        &self.normals
    }

    pub fn rays(&self) -> Option<(&[i64], &[i64])> {
        self.rays.as_ref().map(|(a, b)| (a.as_slice(), b.as_slice()))
    }

    pub fn dim(&self) -> usize {
        self.witness.len()
    }

    /// Whether `x` lies in this open cell (same nonzero signs, inside the cone).
    pub fn contains(&self, x: &[Rational]) -> bool {
        self.facets.iter().all(|f| dot_rat(f, x).is_positive())
            && self.normals.iter().zip(&self.signs).all(|(nv, s)| Sign::of(&dot_rat(nv, x)) == *s)
    }

    /// Same cell of the same arrangement.
    pub fn same_cell(&self, other: &Chamber) -> bool {
        self.normals == other.normals && self.signs == other.signs
    }

    pub fn to_record(&self) -> ChamberRecord {
        ChamberRecord { witness: self.witness.clone(), signs: self.sign_string(), rays: self.rays.clone() }
    }
}

impl fmt::Display for Chamber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.rays {
            Some((a, b)) => write!(f, "cone°({a:?}, {b:?})")?,
            None => write!(f, "chamber [{}]", self.sign_string())?,
        }
        let w: Vec<String> = self.witness.iter().map(|x| x.to_string()).collect();
        write!(f, " witness ({})", w.join(", "))
    }
}

/// Serialized chamber: `{"witness": [...], "signs": "+-…", "rays": optional}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChamberRecord {
    #[serde(with = "serde_rational_vec")]
    pub witness: Vec<Rational>,
    pub signs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rays: Option<(Vec<i64>, Vec<i64>)>,
}

impl ChamberRecord {
    /// Rebuilds the chamber against `M`, checking the recorded signs.
    pub fn bind(&self, m: &IntMatrix) -> Result<Chamber> {
        let c = chamber_of(&self.witness, m)?;
        if c.sign_string() != self.signs {
            return Err(Error::Parse(format!("recorded signs {} do not match witness signs {}", self.signs, c.sign_string())));
        }
        Ok(c)
    }
}

fn cross(a: &[i64], b: &[i64]) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

fn cross_rat(a: &[i64], x: &[Rational]) -> Rational {
    Rational::from_integer(a[0].into()) * &x[1] - Rational::from_integer(a[1].into()) * &x[0]
}

/// Distinct column directions of a rank-2 matrix in counter-clockwise
/// order, each represented by its first column.
fn sorted_directions(m: &IntMatrix) -> Vec<Vec<i64>> {
    let mut dirs: Vec<Vec<i64>> = Vec::new();
    for c in m.columns() {
        let parallel = dirs.iter().any(|d| cross(d, c) == 0 && d[0] * c[0] + d[1] * c[1] > 0);
        if !parallel {
            dirs.push(c.clone());
        }
    }
    // the columns lie in an open half-plane, so the cross product orders them
    dirs.sort_by(|a, b| match cross(a, b) {
        x if x > 0 => Ordering::Less,
        x if x < 0 => Ordering::Greater,
        _ => Ordering::Equal,
    });
    dirs
}

pub fn chamber_of(x: &[Rational], m: &IntMatrix) -> Result<Chamber> {
    if x.len() != m.s() {
        return Err(Error::DimensionMismatch { expected: m.s(), found: x.len() });
    }
    if !in_open_cone(m, x) {
        return Err(Error::OutsideCone);
    }
    let arr = arrangement(m);
    let signs = sign_vector(x, &arr)?;
    if let Some(i) = signs.iter().position(|&s| s == Sign::Zero) {
        return Err(Error::OnWall { normal: arr.normals[i].clone() });
    }
    let rays = (m.s() == 2).then(|| {
        let dirs = sorted_directions(m);
        dirs.windows(2)
            .find(|w| cross_rat(&w[0], x).is_positive() && (-cross_rat(&w[1], x)).is_positive())
            .map(|w| (w[0].clone(), w[1].clone()))
            .expect("interior off-wall point lies between consecutive directions")
    });
    Ok(Chamber { witness: x.to_vec(), signs, normals: arr.normals, facets: facet_normals(m), rays })
}

/// All chambers for `s ≤ 2`, in counter-clockwise order.
pub fn enumerate_chambers(m: &IntMatrix) -> Result<Vec<Chamber>> {
    match m.s() {
        1 => Ok(vec![chamber_of(&to_rat(&m.column_sum()), m)?]),
        2 => {
            let dirs = sorted_directions(m);
            dirs.windows(2)
                .map(|w| {
                    let (r1, r2) = (&w[0], &w[1]);
                    let l1: i64 = r1.iter().map(|v| v.abs()).sum();
                    let l2: i64 = r2.iter().map(|v| v.abs()).sum();
                    let mut wit: Vec<i64> = (0..2).map(|i| r1[i] * l2 + r2[i] * l1).collect();
                    let arr = arrangement(m);
                    while sign_vector(&to_rat(&wit), &arr)?.contains(&Sign::Zero) {
                        wit = (0..2).map(|i| wit[i] + r1[i] + r2[i]).collect();
                    }
                    chamber_of(&to_rat(&wit), m)
                })
                .collect()
        }
        s => Err(Error::UnsupportedDimension(s)),
    }
}

/// `α ∈ closure(Ω)`: inside `cone(M)` with every sign zero or equal to Ω's.
pub fn in_closure(alpha: &[Rational], omega: &Chamber) -> bool {
    alpha.len() == omega.dim()
        && omega.facets.iter().all(|f| !dot_rat(f, alpha).is_negative())
        && omega.normals.iter().zip(&omega.signs).all(|(nv, s)| {
            let t = Sign::of(&dot_rat(nv, alpha));
            t == Sign::Zero || t == *s
        })
}

/// A chamber whose closure contains `x ∈ cone(M)`: `x` itself when it is
/// generic, otherwise `x + δd` for an interior direction `d` that leaves
/// every wall through `x` and a step `δ` too small to cross any other wall.
pub fn nearby_chamber(x: &[Rational], m: &IntMatrix) -> Result<Chamber> {
    if x.len() != m.s() {
        return Err(Error::DimensionMismatch { expected: m.s(), found: x.len() });
    }
    if !in_cone(m, x) {
        return Err(Error::OutsideCone);
    }
    if let Ok(c) = chamber_of(x, m) {
        return Ok(c);
    }
    let mut walls = arrangement(m).normals;
    walls.extend(facet_normals(m));
    let pairings: Vec<Rational> = walls.iter().map(|nv| dot_rat(nv, x)).collect();
    for k in 1i64.. {
        // d = Σ k^j m_j is a strictly positive combination, hence interior
        let mut d = vec![0i64; m.s()];
        let mut w = 1i64;
        for c in m.columns() {
            for (di, ci) in d.iter_mut().zip(c) {
                *di += w * ci;
            }
            w = w.checked_mul(k).ok_or(Error::OutsideCone)?;
        }
        let dr = to_rat(&d);
        let along: Vec<Rational> = walls.iter().map(|nv| dot_rat(nv, &dr)).collect();
        if pairings.iter().zip(&along).any(|(p, a)| p.is_zero() && a.is_zero()) {
            continue;
        }
        let mut delta = <Rational as One>::one();
        for (p, a) in pairings.iter().zip(&along) {
            if !p.is_zero() && !a.is_zero() {
                let bound = p.abs() / a.abs();
                while delta >= bound {
                    delta /= Rational::from_integer(2.into());
                }
            }
        }
        let y: Vec<Rational> = x.iter().zip(&dr).map(|(xi, di)| xi + &delta * di).collect();
        return chamber_of(&y, m);
    }
    unreachable!()
}
