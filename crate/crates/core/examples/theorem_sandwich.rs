//! The lower and upper bounds on the representable proportion, checked on a
//! few instances with exact counts and directed comparisons.

use romanoff::analytic::{check_simple_bounds, check_theorem, theorem_bounds};
use romanoff::counting::{verify_double_count, RomanoffInstance};
use romanoff::{FieldSpec, Poly};

fn main() -> romanoff::Result<()> {
    for (q, g, n) in [(2, "x", 1), (2, "x", 2), (2, "x^2+x+1", 6), (4, "x", 4), (5, "x^2+2", 5)] {
        let spec = FieldSpec::from_order(q)?;
        let inst = RomanoffInstance::new(&Poly::parse(g, &spec)?, n)?;
        let report = verify_double_count(&inst)?;
        let bounds = theorem_bounds(inst.q(), n, inst.delta())?;
        let (lower, upper) = check_theorem("r", &report.r, &bounds, &report.g);
        println!("q={q} g={g} n={n}: r = {}", report.r);
        println!("  lower {} [{}]", bounds.lower.to_decimal(12), lower.status);
        println!("  upper {} [{}]", bounds.upper, upper.status);
        for c in check_simple_bounds("r", &report.r, n, inst.delta()) {
            println!("  {} [{}]", c.check, c.status);
        }
    }
    Ok(())
}
