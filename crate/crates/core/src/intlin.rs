//! Exact integer linear algebra over the column set of `M`.

use itertools::Itertools;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Character, Rational};

/// An `s × n` integer matrix with columns `m_1..m_n`.
///
/// The validated constructors enforce full row rank, nonzero columns and a
/// convex hull of the columns that excludes the origin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatrixRecord", into = "MatrixRecord")]
pub struct IntMatrix {
    rows: usize,
    columns: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct MatrixRecord {
    rows: usize,
    cols: usize,
    data: Vec<Vec<i64>>,
}

impl TryFrom<MatrixRecord> for IntMatrix {
    type Error = Error;
    fn try_from(r: MatrixRecord) -> Result<Self> {
        if r.data.len() != r.rows {
            return Err(Error::InvalidMatrix(format!("expected {} rows, found {}", r.rows, r.data.len())));
        }
        if let Some(bad) = r.data.iter().find(|row| row.len() != r.cols) {
            return Err(Error::InvalidMatrix(format!("expected {} columns, found a row of length {}", r.cols, bad.len())));
        }
        IntMatrix::from_rows(r.data)
    }
}

impl From<IntMatrix> for MatrixRecord {
    fn from(m: IntMatrix) -> Self {
        MatrixRecord { rows: m.s(), cols: m.n(), data: m.row_data() }
    }
}

impl IntMatrix {
    /// Validated construction from row-major data.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let s = rows.len();
        if s == 0 || rows[0].is_empty() {
            return Err(Error::InvalidMatrix("matrix is empty".into()));
        }
        let n = rows[0].len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        let columns = (0..n).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
        Self::from_columns(s, columns)
    }

    /// Validated construction from columns of length `s`.
    pub fn from_columns(s: usize, columns: Vec<Vec<i64>>) -> Result<Self> {
        let m = Self::from_columns_unchecked(s, columns);
        m.validate()?;
        Ok(m)
    }

    /// Construction without the rank and hull checks; used for column
    /// subsets that need not span (e.g. `M ∖ y` in difference identities).
    pub fn from_columns_unchecked(s: usize, columns: Vec<Vec<i64>>) -> Self {
        assert!(columns.iter().all(|c| c.len() == s), "column length must equal s");
        IntMatrix { rows: s, columns }
    }

    pub fn validate(&self) -> Result<()> {
        if self.columns.is_empty() {
            return Err(Error::InvalidMatrix("matrix has no columns".into()));
        }
        if let Some(j) = self.columns.iter().position(|c| c.iter().all(|&x| x == 0)) {
            return Err(Error::InvalidMatrix(format!("column {} is zero", j + 1)));
        }
        if bases(self).is_empty() {
            return Err(Error::InvalidMatrix(format!("rank is less than {}", self.rows)));
        }
        brute_bound_functional(self)?;
        Ok(())
    }

    pub fn s(&self) -> usize {
        self.rows
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[i64] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    pub fn row_data(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.columns.iter().map(|c| c[i]).collect()).collect()
    }

    /// Square matrix (row-major) whose columns are the selected columns.
    pub fn square(&self, idx: &[usize]) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| idx.iter().map(|&j| self.columns[j][i]).collect()).collect()
    }

    pub fn select(&self, idx: &[usize]) -> IntMatrix {
        Self::from_columns_unchecked(self.rows, idx.iter().map(|&j| self.columns[j].clone()).collect())
    }

    pub fn without_column(&self, j: usize) -> IntMatrix {
        let idx: Vec<usize> = (0..self.n()).filter(|&k| k != j).collect();
        self.select(&idx)
    }

    pub fn column_sum(&self) -> Vec<i64> {
        (0..self.rows).map(|i| self.columns.iter().map(|c| c[i]).sum()).collect()
    }

    /// `(A, E)`: the matrix with the `s × s` identity appended.
    pub fn with_identity(&self) -> IntMatrix {
        let mut cols = self.columns.clone();
        for i in 0..self.rows {
            let mut e = vec![0; self.rows];
            e[i] = 1;
            cols.push(e);
        }
        Self::from_columns_unchecked(self.rows, cols)
    }
}

/// An `s`-subset of columns with nonzero determinant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisSubset {
    pub indices: Vec<usize>,
    pub determinant: i64,
}

/// Fraction-free (Bareiss) determinant of a square matrix.
pub fn det(y: &[Vec<i64>]) -> i64 {
    let n = y.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = y.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

fn transpose(y: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = y.len();
    (0..n).map(|i| (0..n).map(|j| y[j][i]).collect()).collect()
}

/// Classical adjugate: `A · adj(A) = det(A) · I`.
pub(crate) fn adjugate(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    if n == 1 {
        return vec![vec![1]];
    }
    let minor = |r: usize, c: usize| -> Vec<Vec<i64>> {
        a.iter()
            .enumerate()
            .filter(|(i, _)| *i != r)
            .map(|(_, row)| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, &x)| x).collect())
            .collect()
    };
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let d = det(&minor(j, i));
                    if (i + j) % 2 == 0 { d } else { -d }
                })
                .collect()
        })
        .collect()
}

/// Exact solution of `Y λ = x`, or `None` when `Y` is singular.
pub(crate) fn solve_square(y: &[Vec<i64>], x: &[Rational]) -> Option<Vec<Rational>> {
    let d = det(y);
    if d == 0 {
        return None;
    }
    let adj = adjugate(y);
    let d = Rational::from_integer(d.into());
    Some(
        adj.iter()
            .map(|row| {
                row.iter()
                    .zip(x)
                    .fold(Rational::zero(), |acc, (&a, xi)| acc + xi * Rational::from_integer(a.into()))
                    / &d
            })
            .collect(),
    )
}

/// All `s`-subsets of columns that span `R^s`, in lexicographic order.
pub fn bases(m: &IntMatrix) -> Vec<BasisSubset> {
    (0..m.n())
        .combinations(m.s())
        .filter_map(|idx| {
            let d = det(&m.square(&idx));
            (d != 0).then_some(BasisSubset { indices: idx, determinant: d })
        })
        .collect()
}

/// `gcd{|det Y| : Y basis}`.
pub fn gcd_dets(m: &IntMatrix) -> u64 {
    bases(m).iter().fold(0u64, |g, b| g.gcd(&b.determinant.unsigned_abs()))
}

/// Lattice points of the half-open parallelepiped `[[Y^T))`: every integer
/// `L = Y^T t` with `t ∈ [0,1)^s`. There are exactly `|det Y|` of them.
pub fn parallelepiped_points(y: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let a = transpose(y);
    let d = det(&a);
    if d == 0 {
        return Err(Error::SingularMatrix);
    }
    let adj = adjugate(&a);
    let ranges: Vec<(i64, i64)> = a
        .iter()
        .map(|row| {
            let lo: i64 = row.iter().filter(|&&x| x < 0).sum();
            let hi: i64 = row.iter().filter(|&&x| x > 0).sum();
            (lo, hi)
        })
        .collect();
    let inside = |l: &[i64]| {
        adj.iter().all(|row| {
            let v: i64 = row.iter().zip(l).map(|(a, b)| a * b).sum();
            if d > 0 { 0 <= v && v < d } else { d < v && v <= 0 }
        })
    };
    let points = ranges
        .iter()
        .map(|&(lo, hi)| lo..=hi)
        .multi_cartesian_product()
        .filter(|l| inside(l))
        .collect();
    Ok(points)
}

/// The character `exp(2πi α/|det Y|)` with `Y^T α = |det Y| L`.
pub fn solve_character(y: &[Vec<i64>], l: &[i64]) -> Result<Character> {
    let a = transpose(y);
    let d = det(&a);
    if d == 0 {
        return Err(Error::SingularMatrix);
    }
    if l.len() != a.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), found: l.len() });
    }
    let adj = adjugate(&a);
    let alpha: Vec<i64> = adj
        .iter()
        .map(|row| d.signum() * row.iter().zip(l).map(|(x, y)| x * y).sum::<i64>())
        .collect();
    Ok(Character::new(d.unsigned_abs(), &alpha))
}

/// Whether every spanning `(s+k)`-subset of columns has coprime maximal minors.
pub fn is_k_prime(m: &IntMatrix, k: usize) -> bool {
    let s = m.s();
    if s + k > m.n() {
        return true;
    }
    (0..m.n()).combinations(s + k).all(|sub| {
        let g = sub
            .iter()
            .copied()
            .combinations(s)
            .map(|idx| det(&m.square(&idx)).unsigned_abs())
            .fold(0u64, |g, d| g.gcd(&d));
        // g == 0: the subset does not span, so it imposes nothing
        g == 0 || g == 1
    })
}

/// Primitive normal of the hyperplane spanned by `s − 1` independent
/// vectors, with canonical sign (first nonzero entry positive); `None` when
/// the vectors are dependent.
pub(crate) fn hyperplane_normal(vectors: &[&[i64]], s: usize) -> Option<Vec<i64>> {
    debug_assert_eq!(vectors.len() + 1, s);
    let mut normal: Vec<i64> = (0..s)
        .map(|i| {
            let minor: Vec<Vec<i64>> = (0..s)
                .filter(|&r| r != i)
                .map(|r| vectors.iter().map(|v| v[r]).collect())
                .collect();
            let d = det(&minor);
            if i % 2 == 0 { d } else { -d }
        })
        .collect();
    let g = normal.iter().fold(0i64, |g, x| g.gcd(x));
    if g == 0 {
        return None;
    }
    let lead = *normal.iter().find(|&&x| x != 0).unwrap();
    let g = if lead < 0 { -g } else { g };
    normal.iter_mut().for_each(|x| *x /= g);
    Some(normal)
}

/// Distinct hyperplanes spanned by independent `(s−1)`-subsets of columns.
pub(crate) fn hyperplane_normals(m: &IntMatrix) -> Vec<Vec<i64>> {
    let s = m.s();
    if s < 2 {
        return Vec::new();
    }
    let mut out: Vec<Vec<i64>> = Vec::new();
    for idx in (0..m.n()).combinations(s - 1) {
        let vs: Vec<&[i64]> = idx.iter().map(|&j| m.column(j)).collect();
        if let Some(nv) = hyperplane_normal(&vs, s) {
            if !out.contains(&nv) {
                out.push(nv);
            }
        }
    }
    out
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn dot_rat(a: &[i64], x: &[Rational]) -> Rational {
    a.iter().zip(x).fold(Rational::zero(), |acc, (&c, xi)| acc + xi * Rational::from_integer(c.into()))
}

/// Inward normals of the facets of `cone(M)`. For `s = 1` this is the sign
/// of the columns. Requires a pointed cone for the result to describe it.
pub(crate) fn facet_normals(m: &IntMatrix) -> Vec<Vec<i64>> {
    if m.s() == 1 {
        let sign = m.columns().iter().map(|c| c[0].signum()).find(|&x| x != 0).unwrap_or(1);
        return vec![vec![sign]];
    }
    hyperplane_normals(m)
        .into_iter()
        .filter_map(|nv| {
            let pairings: Vec<i64> = m.columns().iter().map(|c| dot(&nv, c)).collect();
            if pairings.iter().all(|&p| p >= 0) {
                Some(nv)
            } else if pairings.iter().all(|&p| p <= 0) {
                Some(nv.iter().map(|x| -x).collect())
            } else {
                None
            }
        })
        .collect()
}

/// A functional `c` with `c · m_j > 0` for every column, certifying that
/// the convex hull of the columns excludes the origin.
pub fn brute_bound_functional(m: &IntMatrix) -> Result<Vec<Rational>> {
    let positive = |c: &[i64]| m.columns().iter().all(|col| dot(c, col) > 0);
    let sum = m.column_sum();
    if positive(&sum) {
        return Ok(to_rat(&sum));
    }
    let facets = facet_normals(m);
    if !facets.is_empty() {
        let total: Vec<i64> = (0..m.s()).map(|i| facets.iter().map(|f| f[i]).sum()).collect();
        if positive(&total) {
            return Ok(to_rat(&total));
        }
    }
    Err(Error::OriginInHull)
}

pub(crate) fn to_rat(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_integer(x.into())).collect()
}

/// `true` iff `x ∈ cone(M)` (closed), via the facet description.
pub(crate) fn in_cone(m: &IntMatrix, x: &[Rational]) -> bool {
    facet_normals(m).iter().all(|f| !dot_rat(f, x).is_negative())
}

/// `true` iff `x ∈ cone°(M)`.
pub(crate) fn in_open_cone(m: &IntMatrix, x: &[Rational]) -> bool {
    facet_normals(m).iter().all(|f| dot_rat(f, x).is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{char_pow, Cyclo};
    use proptest::prelude::*;

    fn mex() -> IntMatrix {
        IntMatrix::from_rows(vec![vec![3, 2, 1, 0], vec![0, 1, 2, 2]]).unwrap()
    }

    #[test]
    fn determinants() {
        assert_eq!(det(&[vec![3, 2], vec![0, 1]]), 3);
        assert_eq!(det(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]), 1);
        assert_eq!(det(&[vec![2, 1], vec![1, 2]]), 3);
        assert_eq!(det(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(det(&[vec![1, 2], vec![2, 4]]), 0);
        assert_eq!(det(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]]), 0);
        assert_eq!(det(&[vec![0, 2, 1], vec![1, 0, 3], vec![4, 1, 0]]), 25);
    }

    #[test]
    fn basis_enumeration() {
        assert_eq!(bases(&mex()).len(), 6);
        let u = IntMatrix::from_rows(vec![vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        assert_eq!(bases(&u).len(), 3);
        assert_eq!(bases(&IntMatrix::from_rows(vec![vec![1, 2]]).unwrap()).len(), 2);
    }

    #[test]
    fn gcd_of_minors() {
        // pair determinants by brute enumeration: 3, 6, 6, 3, 4, 2
        let dets: Vec<i64> = bases(&mex()).iter().map(|b| b.determinant.abs()).collect();
        assert_eq!(dets, vec![3, 6, 6, 3, 4, 2]);
        assert_eq!(gcd_dets(&mex()), 1);
        assert_eq!(gcd_dets(&IntMatrix::from_rows(vec![vec![2, 4]]).unwrap()), 2);
        assert_eq!(gcd_dets(&IntMatrix::from_rows(vec![vec![1, 0], vec![0, 1]]).unwrap()), 1);
    }

    #[test]
    fn parallelepipeds() {
        assert_eq!(parallelepiped_points(&[vec![1, 0], vec![0, 1]]).unwrap(), vec![vec![0, 0]]);
        assert_eq!(parallelepiped_points(&[vec![3]]).unwrap(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(parallelepiped_points(&[vec![1, 2], vec![2, 4]]), Err(Error::SingularMatrix));
    }

    #[test]
    fn characters_of_first_basis() {
        let y = vec![vec![3, 2], vec![0, 1]];
        let chars: Vec<Character> =
            parallelepiped_points(&y).unwrap().iter().map(|l| solve_character(&y, l).unwrap()).collect();
        assert_eq!(chars.len(), 3);
        for expected in [Character::identity(2), Character::new(3, &[1, 1]), Character::new(3, &[2, 2])] {
            assert!(chars.contains(&expected), "missing {expected}");
        }
        assert_eq!(solve_character(&[vec![3]], &[1]).unwrap(), Character::new(3, &[1]));
        assert!(solve_character(&[vec![1, 0], vec![0, 1]], &[0, 0]).unwrap().is_identity());
    }

    #[test]
    fn k_primality() {
        assert!(is_k_prime(&IntMatrix::from_rows(vec![vec![2, 3]]).unwrap(), 1));
        assert!(!is_k_prime(&mex(), 1));
        let sub = mex().select(&[0, 1, 2]);
        let g = [[0, 1], [0, 2], [1, 2]].iter().fold(0u64, |g, p| g.gcd(&det(&sub.square(p)).unsigned_abs()));
        assert_eq!(g, 3);
        assert!(is_k_prime(&IntMatrix::from_rows(vec![vec![1, 0, 1], vec![0, 1, 1]]).unwrap(), 0));
        assert!(!is_k_prime(&IntMatrix::from_rows(vec![vec![2, 3]]).unwrap(), 0));
    }

    #[test]
    fn bound_functional() {
        let c = brute_bound_functional(&mex()).unwrap();
        for col in mex().columns() {
            assert!(dot_rat(col, &c).is_positive());
        }
        assert_eq!(brute_bound_functional(&IntMatrix::from_columns_unchecked(1, vec![vec![2], vec![3]])).unwrap(),
            to_rat(&[5]));
        let bad = IntMatrix::from_columns_unchecked(1, vec![vec![1], vec![-1]]);
        assert_eq!(brute_bound_functional(&bad), Err(Error::OriginInHull));
        assert_eq!(IntMatrix::from_rows(vec![vec![1, -1]]), Err(Error::OriginInHull));
        // column sum fails here, facet normals succeed
        let skew = IntMatrix::from_rows(vec![vec![1, -3, 1], vec![0, 1, 1]]).unwrap();
        let c = brute_bound_functional(&skew).unwrap();
        for col in skew.columns() {
            assert!(dot_rat(col, &c).is_positive());
        }
        let plane = IntMatrix::from_columns_unchecked(2, vec![vec![1, 0], vec![-1, 0], vec![0, 1]]);
        assert_eq!(brute_bound_functional(&plane), Err(Error::OriginInHull));
    }

    #[test]
    fn matrix_json() {
        let j = serde_json::to_value(mex()).unwrap();
        assert_eq!(j, serde_json::json!({"rows": 2, "cols": 4, "data": [[3, 2, 1, 0], [0, 1, 2, 2]]}));
        let back: IntMatrix = serde_json::from_value(j).unwrap();
        assert_eq!(back, mex());
        let bad = serde_json::json!({"rows": 1, "cols": 2, "data": [[1, -1]]});
        assert!(serde_json::from_value::<IntMatrix>(bad).is_err());
        let zero = serde_json::json!({"rows": 2, "cols": 2, "data": [[1, 0], [0, 0]]});
        assert!(serde_json::from_value::<IntMatrix>(zero).is_err());
    }

    fn square3() -> impl Strategy<Value = Vec<Vec<i64>>> {
        proptest::collection::vec(proptest::collection::vec(-4i64..=4, 3), 3)
    }

    proptest! {
        #[test]
        fn parallelepiped_count_is_abs_det(y in square3()) {
            let d = det(&y);
            prop_assume!(d != 0);
            // bounding-box oracle with rational membership
            let pts = parallelepiped_points(&y).unwrap();
            prop_assert_eq!(pts.len() as u64, d.unsigned_abs());
            for l in &pts {
                let t = solve_square(&transpose(&y), &to_rat(l)).unwrap();
                prop_assert!(t.iter().all(|x| !x.is_negative() && *x < Rational::from_integer(1.into())));
            }
        }

        #[test]
        fn characters_fix_basis_columns(y in square3()) {
            prop_assume!(det(&y) != 0);
            for l in parallelepiped_points(&y).unwrap() {
                let theta = solve_character(&y, &l).unwrap();
                for col in transpose(&y) {
                    prop_assert_eq!(char_pow(&theta, &col).unwrap(), Cyclo::one());
                }
            }
        }

        #[test]
        fn gcd_divides_every_minor(cols in proptest::collection::vec(proptest::collection::vec(0i64..=5, 2), 3..6)) {
            let m = IntMatrix::from_columns(2, cols);
            prop_assume!(m.is_ok());
            let m = m.unwrap();
            let g = gcd_dets(&m);
            for b in bases(&m) {
                prop_assert_eq!(b.determinant.unsigned_abs() % g, 0);
            }
        }
    }
}
