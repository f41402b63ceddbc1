//! Analytic objects and the explicit inequalities built from them.
//!
//! Quantities that are rational (`E(f)`, harmonic numbers, truncated series,
//! the upper sandwich bound) are exact `BigRational`s. Anything involving
//! `e^γ`, logarithms or square roots is a [`BoundValue`](crate::real::BoundValue)
//! and is compared with directed semantics through [`CheckResult`](crate::check::CheckResult).

mod constants;
mod divisor;
mod pairs;
mod series;
mod theorem;

pub use constants::{
    alpha, check_alpha, check_constant_1771, check_e_minus_exp_gamma, series_constant, SeriesConstant,
    DEFAULT_SERIES_TERMS,
};
pub use divisor::{
    check_lemma1, check_lemma2, check_lemma3, check_lemma_h, check_smooth_product_bounds, e_of, e_upper_bound,
    harmonic, ln_smooth_product, smooth_product, SmoothProduct,
};
pub use pairs::{check_pollack, check_zeta_identity};
pub use series::{
    budget_check, check_eh_bound, check_large_q_estimate, eg_sg_budget, s_truncated, SeriesTruncation,
    DEFAULT_SERIES_CUTOFF,
};
pub use theorem::{check_simple_bounds, check_theorem, simple_bounds, theorem_bounds, TheoremBounds};

use num_bigint::BigInt;
use num_rational::BigRational;

pub(crate) fn rat(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}
