//! Hilbert function, local cohomology and a-invariant of a section ring.

use gradedinv::io::parse_divisor;
use gradedinv::sectionring::SectionRing;

const DIVISOR: &str = r#"{
  "ambient_dim": 1,
  "terms": [
    {"name": "P", "degree": 1, "coeff": "1/3"},
    {"name": "Q", "degree": 1, "coeff": "1/3"},
    {"name": "R", "degree": 1, "coeff": "1/3"}
  ]
}"#;

fn main() -> gradedinv::Result<()> {
    let r = SectionRing::new(parse_divisor(DIVISOR)?.to_divisor()?)?;
    println!("  n   dim R_n   dim H^2_n");
    for n in -6..=9 {
        println!("{n:>3}   {:>7}   {:>9}", r.hilbert(n), r.local_coh_dim(2, n)?);
    }
    println!("a-invariant       {}", r.a_invariant().value);
    let order = r.canonical_order(60)?;
    println!("canonical order   {} (twist {})", order.order, order.twist);
    println!("F-regular test    {}", r.f_regular_degree_test());
    println!("{:#?}", r.rational_sing_certificate().verdict);
    Ok(())
}
