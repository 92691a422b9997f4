//! Integrates the equation numerically as a first-order system in
//! (y, y', ..., y^(6)).  Starting data comes from exact jets: the canonical
//! curve at the origin, and the cubic y = x^3, which the integrator must
//! follow exactly up to discretization error.

use contact_sextic::curve::{implicit_jet, Jet7};
use contact_sextic::families::canonical_curve;
use contact_sextic::numeric::integrate::{integrate, solve_to, IntegratorConfig};
use contact_sextic::scalar::int;

fn main() {
    let cfg = IntegratorConfig::default();

    let (implicit, _) = canonical_curve();
    let jet = implicit_jet(&implicit, &int(0), &int(0), 6).unwrap();
    println!("start jet at x = 0: {:?}", jet.y);

    let traj = integrate(&jet, 0.3, &cfg).unwrap();
    let (x, state) = traj.final_point();
    println!("reached x = {x} in {} steps", traj.points.len() - 1);
    println!("y(0.3) = {:.12}", state[0]);

    // the endpoint stays on the implicit sextic
    let on_curve = implicit
        .f
        .eval_f64(&[("x", x), ("y", state[0])])
        .expect("variables bound");
    println!("sextic evaluated at the endpoint: {on_curve:.3e}");
    assert!(on_curve.abs() < 1e-6);

    // y = x^3 from x = 1: exact endpoint is y(2) = 8
    let cubic = Jet7 { x0: 1.0, y: vec![1.0, 3.0, 6.0, 6.0, 0.0, 0.0, 0.0] };
    let state = solve_to(&cubic, 2.0, &cfg).unwrap();
    println!("cubic endpoint y(2) = {:.12}, error = {:.3e}", state[0], (state[0] - 8.0).abs());
    assert!((state[0] - 8.0).abs() < 1e-10);
}
