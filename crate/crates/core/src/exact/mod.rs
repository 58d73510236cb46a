//! Exact scalars: arbitrary-precision rationals, elements of cyclotomic
//! fields `Q(ζ_N)`, and characters `θ = exp(2πi a/N)`.

mod character;
mod cyclo;
mod rational;
mod upoly;

pub use character::{char_pow, Character};
pub use cyclo::{cyclotomic_poly, euler_phi, Cyclo};
pub use rational::{
    format_rational_vec, fractional_part, int, parse_rational, parse_rational_vec, rat, serde_rational,
    serde_rational_vec, Rational,
};
pub(crate) use cyclo::RootAccumulator;
pub(crate) use rational::lcm_u64;
