//! Checks that the seed parametrization x = 1/(t^2+1), y = -t^3/(t^2+1)^2
//! solves the seventh-order equation exactly, by expanding all derivatives
//! of y in x along the curve and feeding them into the equation.

use contact_sextic::curve::verify_solution;
use contact_sextic::families::seed_curve;

fn main() {
    let curve = seed_curve();
    println!("x(t) = {}", curve.x);
    println!("y(t) = {}", curve.y);

    let (solves, residual) = verify_solution(&curve).expect("curve is nonvertical");
    println!("equation residual: {residual}");
    assert!(solves, "seed curve must be an exact solution");
    println!("exact solution: yes");
}
