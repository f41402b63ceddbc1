//! Arithmetic in GF(9) and GF(16): the canonical modulus, a generator, inverses.

use num_bigint::BigUint;
use romanoff::FieldSpec;

fn main() -> romanoff::Result<()> {
    for q in [9, 16] {
        let f = FieldSpec::from_order(q)?;
        println!("GF({}) = GF({})[t] / ({})", f.q(), f.p(), f.modulus_string().unwrap_or_default());

        let g = f.generator().expect("nontrivial field");
        let order = BigUint::from(f.q() - 1);
        assert!(g.pow(&order).is_one());
        println!("  generator {} has order {}", f.render(g.code()), order);

        for a in f.elements().skip(1).take(4) {
            let inv = a.inv()?;
            println!("  {} * {} = {}", f.render(a.code()), f.render(inv.code()), f.render(a.mul(&inv)?.code()));
        }
    }
    Ok(())
}
