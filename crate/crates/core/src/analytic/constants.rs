use num_bigint::BigInt;
use num_rational::BigRational;

use crate::check::{CheckResult, Params, Relation};
use crate::error::{Error, Result};
use crate::real::BoundValue;

use super::rat;

/// Terms summed explicitly before the tail enclosure takes over.
pub const DEFAULT_SERIES_TERMS: u64 = 10_000;

/// Enclosure of `I = Σ_{m>=1} log(1 + m(m+1)/2) / (m(m+1))`.
#[derive(Clone, Debug)]
pub struct SeriesConstant {
    pub terms: u64,
    pub partial: BoundValue,
    pub tail: BoundValue,
    pub value: BoundValue,
}

/// Sums `M` terms exactly (up to rounding) and encloses the tail.
///
/// With `1 + m(m+1)/2 = (m²/2)(1 + 1/m + 2/m²)` the tail splits into
/// `2Σ log m/(m(m+1)) - log 2 · Σ 1/(m(m+1)) + Σ c_m/(m(m+1))`,
/// where `0 < c_m <= 1/m + 2/m²`. Summation by parts gives
/// `Σ_{m>M} log m/(m(m+1)) ∈ [L + 1/(M+2), L + 1/(M+1)]`, `L = log(M+1)/(M+1)`.
pub fn series_constant(terms: u64) -> Result<SeriesConstant> {
    if terms == 0 {
        return Err(Error::invalid("need at least one term"));
    }
    let mut partial = BoundValue::from_int(0);
    for m in 1..=terms as i64 {
        let arg = BoundValue::from_int(1 + m * (m + 1) / 2);
        partial = partial + arg.ln().div_int(m * (m + 1));
    }
    let big_m = terms as i64;
    let l = BoundValue::from_int(big_m + 1).ln().div_int(big_m + 1);
    let log_lo = &l + &BoundValue::from_ratio(1, big_m + 2);
    let log_hi = &l + &BoundValue::from_ratio(1, big_m + 1);
    let ln2_part = BoundValue::ln2().div_int(big_m + 1);
    let m2 = BigInt::from(big_m).pow(2);
    let m3 = BigInt::from(big_m).pow(3);
    let correction = BoundValue::from_rational(&(rat(1, m2 * 2) + rat(2, m3 * 3)));
    let lo = &log_lo.mul_int(2) - &ln2_part;
    let hi = &(&log_hi.mul_int(2) - &ln2_part) + &correction;
    let tail = lo.hull(&hi);
    let value = &partial + &tail;
    Ok(SeriesConstant { terms, partial, tail, value })
}

/// `I <= 1.771` and `1.771 < log 6`.
pub fn check_constant_1771(terms: u64) -> Result<Vec<CheckResult>> {
    let c = series_constant(terms)?;
    let anchor = BoundValue::from_rational(&rat(1771, 1000));
    let p = || Params::new().with("terms", terms);
    Ok(vec![
        CheckResult::directed("constant_1771_integral", p(), &c.value, Relation::LessOrEqual, &anchor),
        CheckResult::directed("constant_1771_below_log6", p(), &anchor, Relation::Less, &BoundValue::from_int(6).ln()),
    ])
}

/// `e - e^γ < 1`, plus a consistency check of the stored `e^γ` against `exp(γ)`.
pub fn check_e_minus_exp_gamma() -> Vec<CheckResult> {
    let diff = &BoundValue::e() - &BoundValue::exp_gamma();
    let computed = BoundValue::euler_gamma().exp();
    let stored = BoundValue::exp_gamma();
    let gap = &computed - &stored;
    let tol = BoundValue::from_rational(&BigRational::new(1.into(), BigInt::from(10).pow(24)));
    let p = Params::new;
    vec![
        CheckResult::directed("e_minus_exp_gamma", p(), &diff, Relation::Less, &BoundValue::from_int(1)),
        CheckResult::directed("exp_gamma_consistency", p(), &gap.abs(), Relation::Less, &tol),
    ]
}

/// `α(q,δ) = 1 + 8/(δ(1 - 1/q)) · (1 + e^γ log 6δ / log q)`.
pub fn alpha(q: u32, delta: usize) -> BoundValue {
    let (q, d) = (q as i64, delta as i64);
    let ratio = BoundValue::from_int(6 * d).ln() / BoundValue::from_int(q).ln();
    let inner = &BoundValue::from_int(1) + &(BoundValue::exp_gamma() * ratio);
    &BoundValue::from_int(1) + &(BoundValue::from_rational(&rat(8 * q, d * (q - 1))) * inner)
}

/// `α(2,1) < 91` and sampled monotonicity: decreasing in `q`, and in `δ` at `q = 2`.
pub fn check_alpha(q_samples: &[u32], delta_samples: &[usize]) -> Vec<CheckResult> {
    let mut out = vec![CheckResult::directed(
        "alpha_2_1",
        Params::new(),
        &alpha(2, 1),
        Relation::Less,
        &BoundValue::from_int(91),
    )];
    for &d in delta_samples {
        for w in q_samples.windows(2) {
            let p = Params::new().with("delta", d).with("q", w[0]).with("q_next", w[1]);
            out.push(CheckResult::directed("alpha_decreasing_in_q", p, &alpha(w[1], d), Relation::Less, &alpha(w[0], d)));
        }
    }
    for w in delta_samples.windows(2) {
        let p = Params::new().with("q", 2).with("delta", w[0]).with("delta_next", w[1]);
        out.push(CheckResult::directed("alpha_decreasing_in_delta", p, &alpha(2, w[1]), Relation::Less, &alpha(2, w[0])));
    }
    out
}
