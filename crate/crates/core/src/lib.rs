//! Exact computation of vector partition functions.
//!
//! `t(α|M)` counts the nonnegative integer solutions of `Mβ = α`. On each
//! chamber of the column arrangement of `M` it agrees with a quasi-polynomial
//! `Σ_θ θ^α p_θ(α)`; this crate builds those formulas exactly, along with
//! the continuous counterpart `T(x|M)`, polytope volumes and Ehrhart
//! quasi-polynomials. All arithmetic is over the rationals or cyclotomic
//! fields.
//!
//! ```
//! use vecpart::{enumerate_chambers, evaluate_quasi, quasi_formula, IntMatrix};
//!
//! let m = IntMatrix::from_rows(vec![vec![3, 2, 1, 0], vec![0, 1, 2, 2]]).unwrap();
//! let omega = enumerate_chambers(&m).unwrap().remove(0);
//! let f = quasi_formula(&m, &omega).unwrap();
//! assert_eq!(evaluate_quasi(&f, &[9, 2]).unwrap(), vecpart::brute_t(&m, &[9, 2]));
//! ```

pub mod apps;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod intlin;
pub mod oracle;
pub mod poly;
pub mod quasi;
pub mod truncpow;

pub use apps::{ehrhart, fractional_identity_check, kn_set, pitman_stanley, popoviciu, volume_eq, volume_ineq, EhrhartQP};
pub use error::{Error, Result};
pub use exact::{char_pow, Character, Cyclo, Rational};
pub use geometry::{
    arrangement, chamber_of, enumerate_chambers, in_closure, nearby_chamber, sign_vector, Arrangement, Chamber,
    ChamberRecord, Sign,
};
pub use intlin::{
    bases, brute_bound_functional, det, gcd_dets, is_k_prime, parallelepiped_points, solve_character, BasisSubset,
    IntMatrix,
};
pub use oracle::{brute_difference_check, brute_ehrhart, brute_t};
pub use poly::{box_taylor, interpolate_homogeneous, MPoly, TaylorTable};
pub use quasi::{
    character_part, characters, evaluate_quasi, least_r, one_prime_formula, polynomial_part, quasi_formula, s_poly,
    CharacterData, QuasiPart, QuasiPolynomial,
};
pub use truncpow::{tp_polynomial, tp_value, tp_value_continuous, tp_value_with, BasisStrategy, TruncPiece};
