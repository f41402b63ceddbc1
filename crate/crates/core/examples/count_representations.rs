//! Counts of monic degree-n polynomials of the form h + g^k, h irreducible,
//! and the double-counting identities behind them.

use romanoff::counting::{count_irreducible, verify_double_count, RomanoffInstance};
use romanoff::{FieldSpec, Poly};

fn main() -> romanoff::Result<()> {
    let gf2 = FieldSpec::from_order(2)?;
    print!("I_2(n) for n = 1..12:");
    for n in 1..=12 {
        print!(" {}", count_irreducible(n, &gf2)?);
    }
    println!();

    for (q, g, n) in [(2, "x", 2), (2, "x", 6), (3, "x^2+1", 4), (3, "2*x+1", 3), (4, "x", 3)] {
        let spec = FieldSpec::from_order(q)?;
        let inst = RomanoffInstance::new(&Poly::parse(g, &spec)?, n)?;
        let report = verify_double_count(&inst)?;
        println!("{report}  identities: {}", report.identity_status());
    }
    Ok(())
}
