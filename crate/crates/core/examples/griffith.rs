//! A Fermat-type ring and its canonical cover, each paired with a polynomial
//! ring. Only the product with the ring itself is Cohen-Macaulay.

use gradedinv::cover::canonical_cover;
use gradedinv::scenario::fermat_divisor;
use gradedinv::sectionring::SectionRing;
use gradedinv::segre::{segre, to_graded_object};

fn main() -> gradedinv::Result<()> {
    let d = 3;
    let r = SectionRing::new(fermat_divisor(d, d as u32, d as u32 - 1).to_divisor()?)?;
    let s = canonical_cover(&r, 60)?;
    let poly = to_graded_object(&SectionRing::polynomial_ring(1))?;
    println!("R: a = {}  order {}", r.a_invariant().value, s.order);
    println!("S: a = {}  QG {}", s.a_invariant()?, s.quasi_gorenstein_check((-20, 20))?);
    for (label, obj) in [("R", to_graded_object(&r)?), ("S", s.export_graded_object()?)] {
        let p = segre(&obj, &poly)?;
        println!("{label} # k[x,y]: dim {} depth {} CM {}", p.krull_dim, p.depth()?, p.is_cm()?);
    }
    Ok(())
}
