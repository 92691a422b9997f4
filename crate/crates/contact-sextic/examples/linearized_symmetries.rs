//! Evaluates the linearized equation L[v] along the canonical solution curve
//! for the characteristic v = H(x, y, y') of each symmetry generator.  All
//! ten must vanish identically; a generic non-symmetry function must not.

use contact_sextic::contact::generators;
use contact_sextic::curve::linearization_residual;
use contact_sextic::families::canonical_curve;
use contact_sextic::poly::MultiPoly;

fn main() {
    let (_, curve) = canonical_curve();
    for (i, h) in generators().iter().enumerate() {
        let r = linearization_residual(h, &curve).expect("curve is nonvertical");
        println!("L[H{}] = {}", i + 1, if r.is_zero() { "0" } else { "nonzero" });
        assert!(r.is_zero());
    }

    // z^3 generates no symmetry of the equation
    let fake = MultiPoly::var("z").pow(3);
    let r = linearization_residual(&fake, &curve).unwrap();
    assert!(!r.is_zero());
    println!("L[z^3] nonzero, as it should be");
}
