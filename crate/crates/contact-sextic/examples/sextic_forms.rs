//! The quadratic invariant a1 a7 - 6 a2 a6 + 15 a3 a5 - 10 a4^2 of a binary
//! sextic form: it vanishes exactly on sixth powers of linear forms, and
//! rescales by (ad - bc)^6 under Moebius substitutions.

use contact_sextic::invariants::{moebius_transform, quadratic_invariant, SexticForm};
use contact_sextic::poly::MultiPoly;
use contact_sextic::scalar::{fmt_scalar, int, pow};

fn main() {
    // sixth powers have invariant zero
    for c in [-3i64, 0, 2, 7] {
        let p: MultiPoly = format!("(x + {c})^6").parse().unwrap();
        let form = SexticForm::from_poly(&p, "x").unwrap();
        let inv = quadratic_invariant(&form);
        println!("invariant of (x + {c})^6 = {}", fmt_scalar(&inv));
        assert!(inv == int(0));
    }

    // equivariance under an integer substitution
    let p: MultiPoly = "x^6 + x + 1".parse().unwrap();
    let form = SexticForm::from_poly(&p, "x").unwrap();
    let inv = quadratic_invariant(&form);
    let (a, b, c, d) = (int(2), int(1), int(1), int(1));
    let moved = moebius_transform(&form, &a, &b, &c, &d);
    let det = &(&a * &d) - &(&b * &c);
    let expected = &pow(&det, 6).unwrap() * &inv;
    println!(
        "invariant {} -> {} under x -> (2x + 1)/(x + 1), det^6 = {}",
        fmt_scalar(&inv),
        fmt_scalar(&quadratic_invariant(&moved)),
        fmt_scalar(&pow(&det, 6).unwrap())
    );
    assert!(quadratic_invariant(&moved) == expected);
}
