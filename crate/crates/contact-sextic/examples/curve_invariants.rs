//! Geometry of the degree-six member at b = 1/2: its singular points, the
//! discriminant of the cubic-in-y form (a perfect cube of a quartic), and
//! the equianharmonic cross-ratio of that quartic's roots.

use contact_sextic::families::new_curve;
use contact_sextic::invariants::{
    arithmetic_genus, discriminant_is_cube, quartic_is_equianharmonic, singular_points,
};
use contact_sextic::scalar::ratio;
use contact_sextic::univar::count_real_roots;

fn main() {
    let curve = new_curve(&ratio(1, 2)).unwrap();
    println!("curve: {}", curve.f);

    for s in singular_points(&curve).unwrap() {
        println!(
            "singular point ({:.6}, {:.6}), multiplicity {}",
            s.x, s.y, s.multiplicity
        );
    }

    let quartic = discriminant_is_cube(&curve)
        .unwrap()
        .expect("discriminant is a perfect cube");
    println!("disc_y is proportional to ({quartic})^3");

    let real = count_real_roots(&quartic, "x").unwrap();
    println!("quartic has {real} real roots");

    let equianharmonic = quartic_is_equianharmonic(&quartic, 1e-10).unwrap();
    println!("roots form an equianharmonic quadruple: {equianharmonic}");
    assert!(equianharmonic);

    // a rational quartic with one node and one cusp is rational
    println!("arithmetic genus of degree 4 with deltas (1, 2): {}", arithmetic_genus(4, &[1, 2]));
}
