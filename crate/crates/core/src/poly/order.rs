//! Multiplicative order of `g` modulo a squarefree `f`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::integer::factor_biguint;

use super::Poly;

/// Least `ℓ >= 1` with `g^ℓ ≡ 1 (mod f)`.
///
/// The unit group of `F_q[x]/(f)` for squarefree `f = Π p_i` has exponent
/// `M = lcm_i (q^{deg p_i} - 1)`; the order is found by stripping prime
/// factors from `M` while the congruence survives.
pub fn order_mod(g: &Poly, f: &Poly) -> Result<BigUint> {
    g.spec().check_same(f.spec())?;
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::invalid("modulus must have positive degree"));
    }
    if !f.is_monic() {
        return Err(Error::NotMonic(f.render()));
    }
    if !g.gcd(f)?.is_one() {
        return Err(Error::NotInvertible(format!("{g}, {f}")));
    }
    let fac = f.factor()?;
    if !fac.is_squarefree() {
        return Err(Error::NotSquarefree(f.render()));
    }
    let q = BigUint::from(f.spec().q());
    let exponent = fac
        .primes()
        .map(|p| q.pow(p.degree().unwrap() as u32) - 1u32)
        .fold(BigUint::one(), |acc, m| acc.lcm(&m));
    let g = g.rem(f)?;
    let mut order = exponent.clone();
    for (r, k) in factor_biguint(&exponent) {
        for _ in 0..k {
            let candidate = &order / &r;
            if g.powmod(&candidate, f)?.is_one() {
                order = candidate;
            } else {
                break;
            }
        }
    }
    Ok(order)
}
