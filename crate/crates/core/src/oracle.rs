//! Brute-force ground truth: direct enumeration of nonnegative integer
//! solutions of `Mβ = α`.

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::intlin::{brute_bound_functional, IntMatrix};

/// Positive integer functional `c` with `c · m_j > 0` for every column.
fn integer_functional(m: &IntMatrix) -> Vec<i128> {
    let c = brute_bound_functional(m).expect("convex hull of the columns contains the origin");
    let l = c.iter().fold(1i128, |l, x| l.lcm(&x.denom().to_i128().expect("functional fits")));
    c.iter().map(|x| (x * num_bigint::BigInt::from(l)).to_integer().to_i128().expect("functional fits")).collect()
}

struct Search<'a> {
    cols: &'a [Vec<i64>],
    weights: Vec<i128>,
    c: &'a [i128],
}

impl Search<'_> {
    fn count(&self, j: usize, residual: &mut [i128]) -> u64 {
        let budget: i128 = self.c.iter().zip(residual.iter()).map(|(c, r)| c * r).sum();
        if budget < 0 {
            return 0;
        }
        if j == self.cols.len() {
            return u64::from(residual.iter().all(|&r| r == 0));
        }
        let col = &self.cols[j];
        let top = budget / self.weights[j];
        let mut total = 0;
        for _ in 0..=top {
            total += self.count(j + 1, residual);
            for (r, &x) in residual.iter_mut().zip(col) {
                *r -= x as i128;
            }
        }
        for (r, &x) in residual.iter_mut().zip(col) {
            *r += (top + 1) * x as i128;
        }
        total
    }
}

fn count_with(cols: &[Vec<i64>], alpha: &[i64], c: &[i128]) -> u64 {
    let weights: Vec<i128> = cols.iter().map(|m| m.iter().zip(c).map(|(&x, c)| x as i128 * c).sum()).collect();
    debug_assert!(weights.iter().all(|&w| w > 0));
    let mut residual: Vec<i128> = alpha.iter().map(|&a| a as i128).collect();
    Search { cols, weights, c }.count(0, &mut residual)
}

/// `t(α|M)`: the number of `β ∈ Z_+^n` with `Mβ = α`.
pub fn brute_t(m: &IntMatrix, alpha: &[i64]) -> u64 {
    assert_eq!(alpha.len(), m.s(), "dimension mismatch");
    count_with(m.columns(), alpha, &integer_functional(m))
}

/// Checks `t(α|M) − t(α−y|M) = t(α|M∖y)` for every `α` in the box
/// `Π [lo_i, hi_i]`, where `y` is column `y` of `M`.
pub fn brute_difference_check(m: &IntMatrix, y: usize, bounds: &[(i64, i64)]) -> bool {
    assert_eq!(bounds.len(), m.s(), "dimension mismatch");
    let c = integer_functional(m);
    let smaller: Vec<Vec<i64>> = m.columns().iter().enumerate().filter(|&(j, _)| j != y).map(|(_, v)| v.clone()).collect();
    let col = m.column(y);
    let mut alpha: Vec<i64> = bounds.iter().map(|b| b.0).collect();
    loop {
        let shifted: Vec<i64> = alpha.iter().zip(col).map(|(a, x)| a - x).collect();
        let lhs = count_with(m.columns(), &alpha, &c) as i128 - count_with(m.columns(), &shifted, &c) as i128;
        if lhs != count_with(&smaller, &alpha, &c) as i128 {
            return false;
        }
        // odometer step
        let mut i = 0;
        loop {
            if i == alpha.len() {
                return true;
            }
            if alpha[i] < bounds[i].1 {
                alpha[i] += 1;
                break;
            }
            alpha[i] = bounds[i].0;
            i += 1;
        }
    }
}

/// `#(gP ∩ Z^n)` for `P = {β ≥ 0 : Mβ = b}`, i.e. `t(g·b|M)`.
pub fn brute_ehrhart(m: &IntMatrix, b: &[i64], g: u64) -> u64 {
    let gb: Vec<i64> = b.iter().map(|&x| x * g as i64).collect();
    brute_t(m, &gb)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mex() -> IntMatrix {
        IntMatrix::from_rows(vec![vec![3, 2, 1, 0], vec![0, 1, 2, 2]]).unwrap()
    }

    #[test]
    fn hand_counts() {
        assert_eq!(brute_t(&mex(), &[2, 1]), 1);
        // (0,1,1,0) maps to (3,3), so (1,0,0,1) is the only solution
        assert_eq!(brute_t(&mex(), &[3, 2]), 1);
        assert_eq!(brute_t(&mex(), &[3, 3]), 1);
        assert_eq!(brute_t(&mex(), &[0, 0]), 1);
        assert_eq!(brute_t(&mex(), &[-1, 3]), 0);
        let two_three = IntMatrix::from_rows(vec![vec![2, 3]]).unwrap();
        assert_eq!(brute_t(&two_three, &[1]), 0);
        assert_eq!(brute_t(&two_three, &[24]), 5);
    }

    #[test]
    fn column_permutation_symmetry() {
        let permuted = IntMatrix::from_rows(vec![vec![1, 3, 0, 2], vec![2, 0, 2, 1]]).unwrap();
        for a in 0..12 {
            for b in 0..12 {
                assert_eq!(brute_t(&mex(), &[a, b]), brute_t(&permuted, &[a, b]));
            }
        }
    }

    #[test]
    fn difference_identity() {
        assert!(brute_difference_check(&mex(), 3, &[(0, 10), (0, 10)]));
        let two_three = IntMatrix::from_rows(vec![vec![2, 3]]).unwrap();
        assert!(brute_difference_check(&two_three, 0, &[(0, 30)]));
        // removing a column of the unimodular example leaves a non-spanning pair
        let u = IntMatrix::from_rows(vec![vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        assert!(brute_difference_check(&u, 2, &[(0, 5), (0, 5)]));
    }

    #[test]
    fn ehrhart_counts() {
        let u = IntMatrix::from_rows(vec![vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        assert_eq!(brute_ehrhart(&u, &[1, 1], 0), 1);
        assert_eq!(brute_ehrhart(&u, &[1, 1], 7), 8);
        let two_three = IntMatrix::from_rows(vec![vec![2, 3]]).unwrap();
        assert_eq!(brute_ehrhart(&two_three, &[6], 4), 5);
    }
}
