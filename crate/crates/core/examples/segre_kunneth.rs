//! Segre products and the Künneth decomposition of their local cohomology.

use gradedinv::sectionring::SectionRing;
use gradedinv::segre::{goto_watanabe_report, kunneth_breakdown, segre, to_graded_object};

fn main() -> gradedinv::Result<()> {
    let a = to_graded_object(&SectionRing::polynomial_ring(1))?;
    let b = to_graded_object(&SectionRing::polynomial_ring(2))?;
    let p = segre(&a, &b)?;
    println!("{}: dim {} depth {} a {}", p.label, p.krull_dim, p.depth()?, p.a_inv_degree()?);
    for n in 0..6 {
        println!("  hilbert({n}) = {}", p.hilbert.eval(n));
    }
    for row in kunneth_breakdown(&a, &b)? {
        let live: Vec<_> = row.terms.iter().filter(|t| !t.identically_zero).map(|t| t.term.as_str()).collect();
        println!("  H^{}: {}", row.k, if live.is_empty() { "0".to_string() } else { live.join(" + ") });
    }
    let gw = goto_watanabe_report(&a, &b)?;
    println!("CM product {} with a = {}", gw.product_cm, gw.product_a_invariant);
    Ok(())
}
