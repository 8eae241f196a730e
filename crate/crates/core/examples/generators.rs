//! Explicit section bases, products and minimal generator counts.

use gradedinv::scenario::three_points;
use gradedinv::sections::{generation_stability, minimal_generator_counts, multiply, section_basis};

fn main() -> gradedinv::Result<()> {
    let ctx = three_points().section_context()?;
    for n in 0..=3 {
        let basis: Vec<String> = section_basis(&ctx, n)?.iter().map(|s| s.display(&ctx)).collect();
        println!("R_{n}: {}", basis.join(", "));
    }
    let x = &section_basis(&ctx, 1)?[0];
    let x2 = multiply(&ctx, x, x);
    println!("x*x   = {}", x2.display(&ctx));
    println!("x*x^2 = {}", multiply(&ctx, x, &x2).display(&ctx));
    println!("generators {:?}", minimal_generator_counts(&ctx, 6)?.nonzero());
    let st = generation_stability(&ctx, 3, 4)?;
    println!("stable through {}: {}", st.checked_through, st.stable_within_window);
    Ok(())
}
