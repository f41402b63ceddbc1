use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::check::{CheckResult, Params, Relation, Status};
use crate::error::{Error, Result};
use crate::real::{BoundValue, Placement};

use super::{eg_sg_budget, rat};

/// Both sides of the main sandwich for one `(q, n, δ)`.
#[derive(Clone, Debug)]
pub struct TheoremBounds {
    pub q: u32,
    pub n: usize,
    pub delta: usize,
    /// `(1 - 2q^{-n/2})² (1 + δ/n)^{-1} / (δ + 8 q/(q-1) budget(q, δ))`.
    pub lower: BoundValue,
    /// `(1 + δ/n) / δ`.
    pub upper: BigRational,
}

impl TheoremBounds {
    /// The lower bound is `<= 0`, so the strict inequality says nothing.
    pub fn is_vacuous(&self) -> bool {
        !matches!(self.lower.place(&BigRational::zero()), Placement::Above)
    }
}

/// `q^{-n/2}`, exact whenever `q^n` is a perfect square.
fn inverse_sqrt_q_pow(q: u32, n: usize) -> BoundValue {
    let qn = BigInt::from(q).pow(n as u32);
    let root = qn.sqrt();
    if &root * &root == qn {
        BoundValue::from_rational(&BigRational::new(BigInt::one(), root))
    } else {
        BoundValue::from_rational(&BigRational::new(BigInt::one(), qn)).sqrt()
    }
}

pub fn theorem_bounds(q: u32, n: usize, delta: usize) -> Result<TheoremBounds> {
    if q < 2 || n == 0 || delta == 0 {
        return Err(Error::invalid("need q >= 2, n >= 1, delta >= 1"));
    }
    let (qi, ni, di) = (q as i64, n as i64, delta as i64);
    let one = BoundValue::from_int(1);
    let factor = (&one - &inverse_sqrt_q_pow(q, n).mul_int(2)).square();
    let ratio = BoundValue::from_ratio(ni, ni + di);
    let denom = &BoundValue::from_int(di) + &(BoundValue::from_ratio(8 * qi, qi - 1) * eg_sg_budget(q, delta));
    let lower = &(&factor * &ratio) / &denom;
    let upper = rat(ni + di, ni * di);
    Ok(TheoremBounds { q, n, delta, lower, upper })
}

/// `upper >= r` exactly, and `r > lower` with directed comparison (or vacuous).
///
/// `name` distinguishes `r` from `r̃` in the output.
pub fn check_theorem(name: &str, r: &BigRational, bounds: &TheoremBounds, g: &str) -> (CheckResult, CheckResult) {
    let p = || Params::new().with("q", bounds.q).with("n", bounds.n).with("delta", bounds.delta).with("g", g);
    let upper = CheckResult::exact(&format!("theorem_upper_{name}"), p(), r, Relation::LessOrEqual, &bounds.upper);
    let rb = BoundValue::from_rational(r);
    let mut lower = CheckResult::directed(&format!("theorem_lower_{name}"), p(), &bounds.lower, Relation::Less, &rb);
    if bounds.is_vacuous() {
        lower = lower.with_status(Status::Vacuous);
    }
    (lower, upper)
}

/// `(2/δ, 0.01/δ)`; only meaningful for `n >= δ`.
pub fn simple_bounds(n: usize, delta: usize) -> Result<(BigRational, BigRational)> {
    if delta == 0 || n < delta {
        return Err(Error::invalid(format!("simple bounds need n >= delta >= 1 (n = {n}, delta = {delta})")));
    }
    Ok((rat(2, delta as i64), rat(1, 100 * delta as i64)))
}

/// `2/δ >= r > 0.01/δ`; reported vacuous when `n < δ`.
pub fn check_simple_bounds(name: &str, r: &BigRational, n: usize, delta: usize) -> Vec<CheckResult> {
    let p = || Params::new().with("n", n).with("delta", delta);
    match simple_bounds(n, delta) {
        Ok((upper, lower)) => vec![
            CheckResult::exact(&format!("simple_upper_{name}"), p(), r, Relation::LessOrEqual, &upper),
            CheckResult::exact(&format!("simple_lower_{name}"), p(), &lower, Relation::Less, r),
        ],
        Err(_) => {
            let zero = BigRational::zero();
            vec![CheckResult::exact(&format!("simple_{name}"), p(), &zero, Relation::LessOrEqual, r)
                .with_status(Status::Vacuous)]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vanishing_factor_is_vacuous() {
        let b = theorem_bounds(2, 2, 1).unwrap();
        assert!(b.lower.is_exact());
        assert!(b.is_vacuous());
        assert_eq!(b.upper, rat(3, 2));
        let (lower, upper) = check_theorem("r", &rat(1, 2), &b, "x");
        assert_eq!(lower.status, Status::Vacuous);
        assert_eq!(upper.status, Status::Pass);
    }

    #[test]
    fn lower_bound_values() {
        let b = theorem_bounds(4, 4, 1).unwrap();
        assert_eq!(b.lower.to_decimal(6), "0.016909");
        // q^n = 2: the factor is negative before squaring
        let b = theorem_bounds(2, 1, 1).unwrap();
        assert!(!b.is_vacuous());
        assert_eq!(b.lower.to_decimal(6), "0.000946");
        assert_eq!(theorem_bounds(3, 5, 5).unwrap().upper, rat(2, 5));
    }

    #[test]
    fn simple_examples() {
        assert_eq!(simple_bounds(4, 4).unwrap().1, rat(1, 400));
        assert!(simple_bounds(1, 2).is_err());
        let c = check_simple_bounds("r", &rat(1, 2), 2, 1);
        assert!(c.iter().all(|r| r.passed()));
        assert_eq!(check_simple_bounds("r", &rat(1, 2), 1, 2)[0].status, Status::Vacuous);
    }
}
