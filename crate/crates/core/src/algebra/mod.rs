//! Exact scalar, polynomial, rational-function and 2×2 matrix arithmetic.

mod laurent;
mod matrix2;
mod polynomial;
mod ratfunc;
mod rational;

pub use laurent::{laurent_expand_at_infinity, LaurentTail};
pub use matrix2::{lft_apply, matmul2, Parameter, PolyMatrix2};
pub use polynomial::{Degree, Polynomial};
pub use ratfunc::RationalFunction;
pub use rational::{
    common_denominator, format_rational, int, minus_one_pow, parse_field, parse_rational, rat, sign, Rational,
};

use num_traits::Signed;

/// Number of negative squares carried by a real polynomial: `⌊(ν+1)/2⌋` when
/// the degree `ν` is odd and the leading coefficient negative, `⌊ν/2⌋`
/// otherwise. The zero polynomial counts as 0.
pub fn poly_negative_index(p: &Polynomial) -> usize {
    match (p.degree(), p.leading_coeff()) {
        (Degree::Finite(nu), Some(lc)) => {
            if nu % 2 == 1 && lc.is_negative() {
                nu.div_ceil(2)
            } else {
                nu / 2
            }
        }
        _ => 0,
    }
}
