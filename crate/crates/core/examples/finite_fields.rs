//! Build a few small fields and do arithmetic in them.
//!
//! Run with `cargo run --example finite_fields`.

use rpl::gf::{make_field, solve_artin_schreier, FieldContext, PrimePower};

fn main() -> Result<(), rpl::GfError> {
    for (p, e) in [(2, 2), (2, 3), (3, 2), (5, 1)] {
        let f = make_field(p, e)?;
        println!(
            "F_{}: modulus coefficients {:?}, primitive element {}",
            f.q(),
            f.modulus(),
            f.display(f.primitive_element())
        );
    }

    let f9 = make_field(3, 2)?;
    let a = f9.x();
    let b = f9.add(a, f9.one());
    println!("\nIn F_9 with a = x:");
    println!("  a + 1       = {}", f9.display(b));
    println!("  a * (a + 1) = {}", f9.display(f9.mul(a, b)));
    println!("  1 / a       = {}", f9.display(f9.inv(a)?));
    println!("  a^8         = {}", f9.display(f9.pow(a, 8)));
    println!("  frobenius a = {}", f9.display(f9.frobenius(a)));

    // Solutions of y^2 + y = c over F_4, grouped by c.
    let f4 = FieldContext::new(PrimePower::new(2, 2)?)?;
    println!("\nArtin-Schreier fibers y^2 + y = c over F_4:");
    for c in f4.elements() {
        let roots = solve_artin_schreier(&f4, 2, c)?;
        let shown: Vec<String> = roots.iter().map(|&r| f4.display(r)).collect();
        println!("  c = {:<5} -> {:?}", f4.display(c), shown);
    }
    Ok(())
}
