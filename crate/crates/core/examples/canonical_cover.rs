//! The canonical cover of a non-Gorenstein section ring.

use gradedinv::cover::canonical_cover;
use gradedinv::io::parse_divisor;
use gradedinv::sectionring::SectionRing;

fn main() -> gradedinv::Result<()> {
    // ⅓ V0 + ⅔ V1 on ℙ¹: the cover lives in thirds.
    let src = r#"{"ambient_dim": 1, "terms": [
        {"name": "V0", "degree": 1, "coeff": "1/3"},
        {"name": "V1", "degree": 1, "coeff": "2/3"}]}"#;
    let r = SectionRing::new(parse_divisor(src)?.to_divisor()?)?;
    let c = canonical_cover(&r, 60)?;
    println!("order {}  twist {}  shift {}", c.order, c.twist, c.shift);
    println!("degrees in (1/{})Z", c.grading_denominator);
    println!("a-invariant {}", c.a_invariant()?);
    println!("quasi-Gorenstein on window: {}", c.quasi_gorenstein_check((-30, 30))?);
    for (deg, dim) in c.hilbert_table((0, 12))? {
        println!("  [S]_{deg:<5} {dim}");
    }
    Ok(())
}
