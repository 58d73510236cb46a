//! Shared inputs for the benchmarks.

use vecpart::{IntMatrix, Rational};

/// The 2×4 matrix with columns (3,0), (2,1), (1,2), (0,2).
pub fn example_matrix() -> IntMatrix {
    IntMatrix::from_rows(vec![vec![3, 2, 1, 0], vec![0, 1, 2, 2]]).unwrap()
}

/// Rows `i` of the Pitman–Stanley constraint matrix: ones in columns `0..=i`.
pub fn prefix_matrix(n: usize) -> IntMatrix {
    let rows = (0..n).map(|i| (0..n).map(|j| i64::from(j <= i)).collect()).collect();
    IntMatrix::from_rows(rows).unwrap()
}

/// `1/2, 2/3, 3/4, …` of length `n`.
pub fn ramp(n: usize) -> Vec<Rational> {
    (1..=n as i64).map(|k| Rational::new(k.into(), (k + 1).into())).collect()
}
