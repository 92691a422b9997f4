//! Conics are exactly the curves annihilated by the classical third-order
//! expression 9 (y'')^2 y^(5) - 45 y'' y''' y^(4) + 40 (y''')^3.  This runs
//! it along a parametrized conic (zero) and along y = x^3 (nonzero).

use contact_sextic::curve::halphen_residual;
use contact_sextic::families::{conic_family, parametrize_conic};
use contact_sextic::ratfunc::parse_ratfunc;
use contact_sextic::curve::ParametricCurve;
use contact_sextic::scalar::int;

fn main() {
    // the unit circle, written as y^2 = c1 x^2 + c2 xy + c3 y + c4 x + c5
    let conic = conic_family(&[int(-1), int(0), int(0), int(0), int(1)]).unwrap();
    println!("conic: {}", conic.f);

    let par = parametrize_conic(&conic, &int(0), &int(1)).unwrap();
    println!("x(t) = {}", par.x);
    println!("y(t) = {}", par.y);
    assert!(par.lies_on(&conic));

    let res = halphen_residual(&par).unwrap();
    println!("residual on the conic: {res}");
    assert!(res.is_zero());

    let cubic = ParametricCurve::new(
        parse_ratfunc("t").unwrap(),
        parse_ratfunc("t^3").unwrap(),
    )
    .unwrap();
    let res = halphen_residual(&cubic).unwrap();
    println!("residual on y = x^3 is zero: {}", res.is_zero());
    assert!(!res.is_zero());
}
