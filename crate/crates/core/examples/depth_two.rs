//! Canonical cover of a Segre product built from factors with coprime orders.

use gradedinv::scenario::{depth_two_b, three_points};
use gradedinv::sectionring::SectionRing;
use gradedinv::segre::segre_cover_compat;

fn main() -> gradedinv::Result<()> {
    let a = SectionRing::new(three_points().to_divisor()?)?;
    let b = SectionRing::new(depth_two_b(3).to_divisor()?)?;
    let (report, cover) = segre_cover_compat(&a, &b, 60, (-12, 24))?;
    println!("orders {:?}  twists {:?}", report.orders, report.twists);
    println!("product order {:?}", report.product_order);
    println!("identified on window: {:?}", report.cover_identified);
    if let Some(c) = cover {
        println!("dim {}  depth {}  a {}", c.krull_dim, c.depth()?, c.a_inv_degree()?);
    }
    Ok(())
}
