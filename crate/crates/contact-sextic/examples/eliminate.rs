//! Eliminates z from the implicit pair
//!   u = (y + b z^2 + Q(X))^2 + P(X),
//!   v = 4 P(X)(z + Q'(X))^2 + P'(X)^2,   X = x + 2bz,
//! for the standard fiber Q = 0, P = X(X-1)^3.  The z-resultant factors, and
//! the degree-six factor is the curve the matching parametrization traces.

use contact_sextic::elim::resultant;
use contact_sextic::families::{new_curve, uv_pair, QPData};
use contact_sextic::poly::MultiPoly;
use contact_sextic::scalar::ratio;

fn main() {
    let b = ratio(1, 2);
    let q = MultiPoly::zero();
    let p: MultiPoly = "x (x - 1)^3".parse().unwrap();
    let data = QPData::new(q, p, b.clone()).unwrap();

    let (u, v) = uv_pair(&data);
    println!("deg_z u = {}, deg_z v = {}", u.degree_in("z"), v.degree_in("z"));

    let r = resultant(&u, &v, "z").unwrap();
    println!("eliminant: degree {} in x, {} in y", r.degree_in("x"), r.degree_in("y"));

    let sextic = new_curve(&b).unwrap();
    let cofactor = r.exact_div(&sextic.f).expect("the sextic divides the eliminant");
    println!("sextic factor: {}", sextic.f);
    println!(
        "cofactor: degree {} in x, {} in y, zero = {}",
        cofactor.degree_in("x"),
        cofactor.degree_in("y"),
        cofactor.is_zero()
    );
    assert!(!cofactor.is_zero());
}
