//! Irreducibility, factorization and multiplicative orders over small fields.

use romanoff::poly::order_mod;
use romanoff::{FieldSpec, Poly};

fn main() -> romanoff::Result<()> {
    let gf2 = FieldSpec::from_order(2)?;
    let gf4 = FieldSpec::from_order(4)?;

    for (spec, text) in [(&gf2, "x^4+x^2"), (&gf2, "x^15+1"), (&gf4, "x^5+x"), (&gf2, "x^8+x^4+x^3+x+1")] {
        let f = Poly::parse(text, spec)?;
        let fac = f.factor()?;
        assert_eq!(fac.reconstruct(), f);
        println!("GF({}): {} = {}   irreducible: {}", spec.q(), f.render(), fac, f.is_irreducible()?);
    }

    let x = Poly::x(&gf2);
    for m in ["x^2+x+1", "x^4+x+1", "x^4+x^3+x^2+x+1", "x^5+x^4+1"] {
        let m = Poly::parse(m, &gf2)?;
        println!("ord of x mod {} = {}", m.render(), order_mod(&x, &m)?);
    }
    Ok(())
}
