//! Moves solution curves around with the two kinds of symmetry: the
//! seven-parameter group of point transformations, and the closed-form flows
//! of the three generators that are contact but not point.  Solutions map to
//! solutions in both cases, exactly.

use contact_sextic::curve::verify_solution;
use contact_sextic::families::canonical_curve;
use contact_sextic::scalar::{int, ratio};
use contact_sextic::transform::{
    apply_contact_flow, apply_point_transformation, contact_identity_holds,
    ContactFlowGenerator, ContactFlowParams, PointTransformationParams,
};

fn main() {
    let (_, curve) = canonical_curve();

    // point transformation: shifts, scalings and the unipotent projective bit
    let p = PointTransformationParams::new([
        ratio(1, 2),
        int(-1),
        ratio(1, 3),
        int(2),
        int(1),
        ratio(1, 4),
        ratio(-1, 5),
    ])
    .unwrap();
    let moved = apply_point_transformation(&curve, &p).unwrap();
    let (ok, _) = verify_solution(&moved).unwrap();
    println!("point-transformed curve solves the equation: {ok}");
    assert!(ok);

    // contact flows act on (x, y, z) and project back to the plane
    for (name, generator) in [
        ("z^2 shear", ContactFlowGenerator::H8),
        ("2yz - xz^2", ContactFlowGenerator::H9),
        ("4xyz - 4y^2 - x^2 z^2", ContactFlowGenerator::H10),
    ] {
        let flow = ContactFlowParams { generator, parameter: ratio(1, 3) };
        let (flowed, z) = apply_contact_flow(&curve, &flow).unwrap();
        let (ok, _) = verify_solution(&flowed).unwrap();
        let tangent = contact_identity_holds(&flowed, &z);
        println!("{name}: solves = {ok}, slope stays tangent = {tangent}");
        assert!(ok && tangent);
    }
}
