//! Truncations of the order series S(g), its budget, and the H_g(x) bound.

use num_rational::BigRational;
use romanoff::analytic::{budget_check, check_eh_bound, eg_sg_budget, s_truncated};
use romanoff::counting::DEFAULT_COUNT_CAP;
use romanoff::{FieldSpec, Poly};

fn main() -> romanoff::Result<()> {
    let gf2 = FieldSpec::from_order(2)?;
    let x = Poly::x(&gf2);
    for d in 1..=8 {
        let t = s_truncated(&x, d, DEFAULT_COUNT_CAP)?;
        println!("D={d}: {} terms, partial sum {}", t.terms, romanoff::BoundValue::from_rational(&t.partial).to_decimal(10));
    }
    println!("budget(2, 1) = {}", eg_sg_budget(2, 1).to_decimal(10));

    for (q, g) in [(2, "x"), (2, "x^2+x+1"), (3, "x+1"), (3, "2*x^2+1")] {
        let g = Poly::parse(g, &FieldSpec::from_order(q)?)?;
        let c = budget_check(&g, 6, DEFAULT_COUNT_CAP)?;
        println!("q={q} g={}: {} < {} [{}]", g.render(), c.lhs, c.rhs, c.status);
    }

    for x_val in 1..=3 {
        for c in check_eh_bound(&x, &BigRational::from_integer(x_val.into()), 7, DEFAULT_COUNT_CAP)? {
            println!("x={x_val} {}: {} <= {} [{}]", c.check, c.lhs, c.rhs, c.status);
        }
    }
    Ok(())
}
