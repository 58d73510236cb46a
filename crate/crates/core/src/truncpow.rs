//! The multivariate truncated power `T(x|M)`: the normalized volume of the
//! fiber `{β ≥ 0 : Mβ = x}`.
//!
//! Values come from the recurrence `T(x|M) = (1/(n−s)) Σ λ_j T(x|M∖m_j)`,
//! valid for any representation `x = Σ λ_j m_j`; `λ` is taken supported on
//! one basis so each node has at most `s` children. Square subproblems are
//! `1/|det|` inside their simplicial cone and zero outside.

use std::collections::HashMap;
use std::hash::{DefaultHasher, Hash, Hasher};

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{arrangement, nearby_chamber, Chamber};
use crate::intlin::{det, dot_rat, facet_normals, in_cone, in_open_cone, solve_square, IntMatrix};
use crate::poly::{interpolate_homogeneous, MPoly};
use crate::exact::Rational;

/// Which basis of the current column subset supports `λ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BasisStrategy {
    /// Lexicographically first basis.
    #[default]
    LexFirst,
    /// A basis chosen by hashing the seed with the subset.
    Rotated(u64),
}

/// `T(x|M)` at a point off every arrangement hyperplane. Returns zero
/// outside `cone(M)`.
pub fn tp_value(x: &[Rational], m: &IntMatrix) -> Result<Rational> {
    tp_value_with(x, m, BasisStrategy::LexFirst)
}

pub fn tp_value_with(x: &[Rational], m: &IntMatrix, strategy: BasisStrategy) -> Result<Rational> {
    if x.len() != m.s() {
        return Err(Error::DimensionMismatch { expected: m.s(), found: x.len() });
    }
    assert!(m.n() <= 64, "at most 64 columns are supported");
    if !in_cone(m, x) {
        return Ok(Rational::zero());
    }
    let walls = arrangement(m).normals.into_iter().chain(facet_normals(m));
    for nv in walls {
        if dot_rat(&nv, x).is_zero() {
            return Err(Error::NonGeneric { normal: nv });
        }
    }
    let mut eval = Recurrence { m, x, strategy, memo: HashMap::new() };
    let full = if m.n() == 64 { u64::MAX } else { (1u64 << m.n()) - 1 };
    Ok(eval.value(full))
}

struct Recurrence<'a> {
    m: &'a IntMatrix,
    x: &'a [Rational],
    strategy: BasisStrategy,
    memo: HashMap<u64, Rational>,
}

impl Recurrence<'_> {
    fn value(&mut self, mask: u64) -> Rational {
        if let Some(v) = self.memo.get(&mask) {
            return v.clone();
        }
        let v = self.compute(mask);
        self.memo.insert(mask, v.clone());
        v
    }

    fn pick_basis(&self, mask: u64, cols: &[usize]) -> Option<Vec<usize>> {
        let s = self.m.s();
        let mut candidates = cols.iter().copied().combinations(s).filter(|idx| det(&self.m.square(idx)) != 0);
        match self.strategy {
            BasisStrategy::LexFirst => candidates.next(),
            BasisStrategy::Rotated(seed) => {
                let all: Vec<Vec<usize>> = candidates.collect();
                if all.is_empty() {
                    return None;
                }
                let mut h = DefaultHasher::new();
                (seed, mask).hash(&mut h);
                Some(all[(h.finish() % all.len() as u64) as usize].clone())
            }
        }
    }

    fn compute(&mut self, mask: u64) -> Rational {
        let cols: Vec<usize> = (0..self.m.n()).filter(|j| mask >> j & 1 == 1).collect();
        let s = self.m.s();
        // a non-spanning subset carries a measure on a hyperplane, zero at generic x
        let Some(basis) = self.pick_basis(mask, &cols) else {
            return Rational::zero();
        };
        let y = self.m.square(&basis);
        let lambda = solve_square(&y, self.x).expect("basis is invertible");
        if cols.len() == s {
            debug_assert!(lambda.iter().all(|l| !l.is_zero()), "generic point on a simplicial wall");
            return if lambda.iter().all(Signed::is_positive) {
                Rational::new(One::one(), det(&y).unsigned_abs().into())
            } else {
                Rational::zero()
            };
        }
        let mut acc = Rational::zero();
        for (j, l) in basis.iter().zip(&lambda) {
            if !l.is_zero() {
                acc += l * self.value(mask & !(1u64 << j));
            }
        }
        acc / Rational::from_integer(((cols.len() - s) as i64).into())
    }
}

/// `T(·|M)` restricted to one chamber: a homogeneous polynomial of degree `n − s`.
#[derive(Clone, Debug)]
pub struct TruncPiece {
    pub chamber: Chamber,
    pub poly: MPoly<Rational>,
}

const RETRY_BUDGET: usize = 4;

/// Reconstructs the polynomial of `T(·|M)` on `Ω` by exact interpolation.
///
/// `Ω` may be a cell of a finer arrangement than `M`'s (for instance the
/// chamber of a larger matrix); `T(·|M)` is still one polynomial there.
/// Samples sit on the principal lattice of an affine slice through the
/// witness, plus two held-out points that must agree exactly.
pub fn tp_polynomial(m: &IntMatrix, omega: &Chamber) -> Result<TruncPiece> {
    let s = m.s();
    if omega.dim() != s {
        return Err(Error::DimensionMismatch { expected: s, found: omega.dim() });
    }
    let d = (m.n() - s) as u32;
    let w = omega.witness();
    if !in_open_cone(m, w) {
        return Ok(TruncPiece { chamber: omega.clone(), poly: MPoly::zero(s) });
    }
    // slice coordinate: the largest witness entry, so the slice x_c = w_c misses the origin
    let c = (0..s).max_by_key(|&i| w[i].abs()).expect("s >= 1");
    let free: Vec<usize> = (0..s).filter(|&i| i != c).collect();

    let mut lattice: Vec<Vec<Rational>> = Vec::new();
    for u in (0..free.len()).map(|_| 0..=d).multi_cartesian_product().filter(|u| u.iter().sum::<u32>() <= d) {
        let mut off = vec![Rational::zero(); s];
        for (&i, &k) in free.iter().zip(&u) {
            off[i] = Rational::from_integer(k.into());
        }
        lattice.push(off);
    }
    if free.is_empty() {
        lattice.push(vec![Rational::zero(); s]);
    }

    let mut walls: Vec<Vec<i64>> = omega.normals().to_vec();
    walls.extend(facet_normals(m));

    for attempt in 0..RETRY_BUDGET {
        let held: Vec<Vec<Rational>> = (0..2)
            .map(|h| {
                let mut off = vec![Rational::zero(); s];
                for (t, &i) in free.iter().enumerate() {
                    off[i] = Rational::new(((2 * t + h + attempt) % 5 + 1).into(), ((t + h + 2) as i64).into());
                }
                off
            })
            .collect();
        let offsets: Vec<&Vec<Rational>> = lattice.iter().chain(&held).collect();

        let mut delta = <Rational as One>::one() / Rational::from_integer((1i64 << attempt).into());
        for nv in &walls {
            let p = dot_rat(nv, w).abs();
            let reach = offsets.iter().map(|o| dot_rat(nv, o).abs()).max().unwrap_or_else(Rational::zero);
            while !reach.is_zero() && &delta * &reach >= p {
                delta /= Rational::from_integer(2.into());
            }
        }
        let point = |o: &Vec<Rational>, scale: i64| -> Vec<Rational> {
            w.iter().zip(o).map(|(wi, oi)| (wi + &delta * oi) * Rational::from_integer(scale.into())).collect()
        };
        let mut pts: Vec<Vec<Rational>> = lattice.iter().map(|o| point(o, 1)).collect();
        pts.push(point(&held[0], 1));
        pts.push(point(&held[1], 2));
        if !pts.iter().all(|p| omega.contains(p)) {
            continue;
        }
        let samples: Result<Vec<(Vec<Rational>, Rational)>> =
            pts.into_iter().map(|p| tp_value(&p, m).map(|v| (p, v))).collect();
        let samples = match samples {
            Ok(v) => v,
            Err(Error::NonGeneric { .. }) => continue,
            Err(e) => return Err(e),
        };
        match interpolate_homogeneous(&samples, d) {
            Ok(poly) => return Ok(TruncPiece { chamber: omega.clone(), poly }),
            Err(Error::SingularSystem | Error::InconsistentSamples) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::InterpolationFailed(RETRY_BUDGET))
}

/// `T(x|M)` on `cone°(M)` including points on interior walls, where the
/// value is the continuous extension from any adjacent chamber.
pub fn tp_value_continuous(x: &[Rational], m: &IntMatrix) -> Result<Rational> {
    match tp_value(x, m) {
        Err(Error::NonGeneric { .. }) => {
            let omega = nearby_chamber(x, m)?;
            tp_polynomial(m, &omega)?.poly.evaluate(x)
        }
        other => other,
    }
}
