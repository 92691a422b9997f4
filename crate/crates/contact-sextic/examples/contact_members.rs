//! Solutions built from quartic data: x(t) and y(t) are assembled from the
//! eight numbers (b, b0..b6), sheared by the z^2 flow.  The slope z = dy/dx
//! travels along and satisfies the contact identity exactly.

use contact_sextic::curve::verify_solution;
use contact_sextic::families::{contact_family, ContactFamilyParams};
use contact_sextic::scalar::{int, ratio};
use contact_sextic::transform::contact_identity_holds;

fn main() {
    let params = ContactFamilyParams::new(
        ratio(1, 2),
        [int(1), int(0), int(-1), int(0), int(0), int(0), int(1)],
    )
    .unwrap();

    let (curve, z) = contact_family(&params).unwrap();
    println!("x(t) = {}", curve.x);
    println!("y(t) = {}", curve.y);
    println!("z(t) = {z}");

    assert!(contact_identity_holds(&curve, &z));
    println!("z dx/dt = dy/dt holds exactly");

    let (ok, residual) = verify_solution(&curve).unwrap();
    println!("equation residual: {residual}");
    assert!(ok);
}
