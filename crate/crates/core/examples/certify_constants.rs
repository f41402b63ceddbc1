//! Interval certificates for the numerical constants.

use romanoff::analytic::{alpha, series_constant, DEFAULT_SERIES_TERMS};
use romanoff::suite::run_constants;
use romanoff::BoundValue;

fn main() -> romanoff::Result<()> {
    println!("gamma    = {:?}", BoundValue::euler_gamma());
    println!("e^gamma  = {:?}", BoundValue::exp_gamma());
    let c = series_constant(DEFAULT_SERIES_TERMS)?;
    println!("I        = {:?}", c.value);
    println!("alpha(2,1) = {}", alpha(2, 1).to_decimal(6));

    for check in run_constants()? {
        println!("[{}] {}: {} vs {} (slack {})", check.status, check.check, check.lhs, check.rhs, check.slack);
    }
    Ok(())
}
