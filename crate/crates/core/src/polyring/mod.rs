//! Polynomials in the minors `δ_I`, exact rational coefficients and the
//! monomial orders used for Groebner computations.

mod monomial;
mod order;
mod poly;
mod variable;

pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use poly::{DeltaPolynomial, Ring, RingKind};
pub use variable::{all_variables, column_for_variable, variable_for_column, DeltaVariable};

/// `(-1)^(s(s-1)/2)`: the sign reversing a sequence of length `s`.
pub fn reversal_sign_of(s: usize) -> crate::Rational {
    poly::reversal_sign(s)
}
