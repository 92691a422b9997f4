//! The seven-parameter family that the point symmetries sweep out of the
//! canonical curve.  Every member comes as a sextic in (x, y) together with
//! a rational parametrization that lies on it; the identity parameters give
//! back the canonical curve itself.

use contact_sextic::curve::verify_solution;
use contact_sextic::families::{
    canonical_curve, general_solution, transformation_params_from_family, GeneralSolutionParams,
};
use contact_sextic::scalar::{int, ratio};

fn main() {
    let p = GeneralSolutionParams::new([
        ratio(1, 2),
        int(-1),
        ratio(1, 3),
        int(2),
        int(1),
        ratio(1, 4),
        ratio(-1, 5),
    ])
    .unwrap();

    let (implicit, parametric) = general_solution(&p).unwrap();
    println!("member: {}", implicit.f);
    println!("x(t) = {}", parametric.x);
    println!("y(t) = {}", parametric.y);

    assert!(parametric.lies_on(&implicit));
    let (ok, _) = verify_solution(&parametric).unwrap();
    println!("parametrization lies on the sextic and solves the equation: {ok}");
    assert!(ok);

    // the matching point transformation carries the canonical curve onto it
    let q = transformation_params_from_family(&p);
    println!("corresponding map parameters: {:?}", q.c);

    let (identity_implicit, _) = general_solution(&GeneralSolutionParams::identity()).unwrap();
    let (canonical, _) = canonical_curve();
    assert_eq!(identity_implicit.f.to_string(), canonical.f.to_string());
    println!("identity parameters reproduce the canonical sextic");
}
