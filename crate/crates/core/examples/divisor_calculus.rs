//! Rounding and degrees of ℚ-divisors on ℙ².

use gradedinv::divisors::{canonical_divisor, combine, degree, floor_divisor, frac_part, make_divisor, scale, Component};
use gradedinv::Rat;

fn main() -> gradedinv::Result<()> {
    let d = make_divisor(
        2,
        vec![
            (Component::hyperplane("L"), Rat::new(1, 2)),
            (Component::hypersurface("C", 2), Rat::new(2, 3)),
        ],
    )?;
    println!("D        degree {}", degree(&d));
    println!("[D]      degree {}", degree(&floor_divisor(&d)));
    println!("D'       degree {}", degree(&frac_part(&d)));
    for n in 1..=6 {
        let nd = scale(&Rat::int(n), &d);
        println!("[{n}D]     degree {}", degree(&floor_divisor(&nd)));
    }
    let k = canonical_divisor(2);
    let kd = combine(&Rat::int(1), &k, &Rat::int(1), &frac_part(&d))?;
    println!("K + D'   degree {}", degree(&kd));
    Ok(())
}
