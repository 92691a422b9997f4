//! Constructors for the solution-curve families: the quartic orbit of the
//! seed parametrization, its contact deformations, the implicit (u, v) pair
//! in (x, y, z), the degree-six factor of their z-eliminant, the canonical
//! sextic with its seven-parameter orbit, and the Halphen conics.

use num_traits::{One, Zero};

use crate::curve::{ImplicitCurve, ParametricCurve};
use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::ratfunc::{parse_ratfunc, RationalFunction};
use crate::scalar::{int, ratio, Scalar};
use crate::transform::{
    apply_contact_flow, apply_point_transformation, ContactFlowGenerator, ContactFlowParams,
    PointTransformationParams,
};
use crate::univar;

// ---------------------------------------------------------------------------
// the seed quartic and its point-transformation orbit
// ---------------------------------------------------------------------------

/// x = 1/(t^2 + 1), y = -t^3/(t^2 + 1)^2, a rational parametrization of
/// y^2 + x(x-1)^3 = 0.
pub fn seed_curve() -> ParametricCurve {
    let x = parse_ratfunc("1/(t^2 + 1)").expect("fixed text parses");
    let y = parse_ratfunc("-t^3/(t^2 + 1)^2").expect("fixed text parses");
    ParametricCurve::new(x, y).expect("components are nonconstant")
}

fn check_quadratic(q: &MultiPoly, var: &str) -> Result<()> {
    if q.degree_in(var) > 2 || q.vars().iter().any(|v| v != var) {
        return Err(Error::Invalid(format!(
            "expected a polynomial of degree <= 2 in {var}"
        )));
    }
    Ok(())
}

/// Admissible means exactly one simple and one triple root; over the
/// rationals both roots are then automatically rational and distinct.
fn check_admissible_quartic(p: &MultiPoly, var: &str) -> Result<()> {
    if p.degree_in(var) != 4 || p.vars().iter().any(|v| v != var) {
        return Err(Error::InadmissibleQuartic(format!(
            "expected a quartic in {var}"
        )));
    }
    let (_, parts) = univar::square_free_decomposition(p, var)?;
    let mut mults: Vec<usize> = parts.iter().map(|sp| sp.multiplicity).collect();
    mults.sort_unstable();
    let linear = parts.iter().all(|sp| sp.factor.degree_in(var) == 1);
    if parts.len() == 2 && linear && mults == [1, 3] {
        Ok(())
    } else {
        Err(Error::InadmissibleQuartic(
            "need exactly one simple and one triple root".into(),
        ))
    }
}

/// The quartic family (y + Q)^2 + P for a quadratic Q(x) and an admissible
/// quartic P(x): the orbit of the seed curve under point transformations.
pub fn degree_four_family(q: &MultiPoly, p: &MultiPoly) -> Result<ImplicitCurve> {
    check_quadratic(q, "x")?;
    check_admissible_quartic(p, "x")?;
    let y = MultiPoly::var("y");
    ImplicitCurve::new(&(&y + q).pow(2) + p)
}

// ---------------------------------------------------------------------------
// contact deformations of the quartic family
// ---------------------------------------------------------------------------

/// Deformation parameter b and fiber coefficients b0..b6 (stored in order in
/// `bs`) for the contact-deformed family.
#[derive(Clone, Debug, PartialEq)]
pub struct ContactFamilyParams {
    pub b: Scalar,
    pub bs: [Scalar; 7],
}

impl ContactFamilyParams {
    pub fn new(b: Scalar, bs: [Scalar; 7]) -> Result<Self> {
        // b5 - b0 b6 is (half) the numerator of dx/dt; the slope z needs it
        if (&bs[5] - &(&bs[0] * &bs[6])).is_zero() {
            return Err(Error::DegenerateDenominator);
        }
        Ok(ContactFamilyParams { b, bs })
    }
}

/// Builds x(t) = (b5 + b6 t^2)/(b0 + t^2),
/// y(t) = (b4 t^4 + b3 t^2 + b2 t + b1)/(b0 + t^2)^2, takes the slope
/// z = dy/dx along it, and applies the shear (x, y) -> (x - 2bz, y - bz^2).
/// Returns the sheared curve together with z, which the shear leaves equal
/// to the slope of the new curve.
pub fn contact_family(p: &ContactFamilyParams) -> Result<(ParametricCurve, RationalFunction)> {
    let [b0, b1, b2, b3, b4, _, _] = &p.bs;
    let t = MultiPoly::var("t");
    let den = &t.pow(2) + &MultiPoly::constant(b0.clone());
    let xnum = &t.pow(2).scale(&p.bs[6]) + &MultiPoly::constant(p.bs[5].clone());
    let ynum = &(&t.pow(4).scale(b4) + &t.pow(2).scale(b3)) + &(&t.scale(b2) + &MultiPoly::constant(b1.clone()));
    let x = RationalFunction::new(xnum, den.clone())?;
    let y = RationalFunction::new(ynum, den.pow(2))?;
    let base = ParametricCurve::new(x, y)?;
    let shear = ContactFlowParams {
        generator: ContactFlowGenerator::H8,
        parameter: p.b.clone(),
    };
    apply_contact_flow(&base, &shear)
}

// ---------------------------------------------------------------------------
// the implicit (u, v) pair
// ---------------------------------------------------------------------------

/// The data for the implicit pair: a quadratic Q and an admissible quartic P,
/// both univariate in x, and the deformation parameter b. Q and P are
/// evaluated at X = x + 2bz when the pair is formed.
#[derive(Clone, Debug)]
pub struct QPData {
    pub q: MultiPoly,
    pub p: MultiPoly,
    pub b: Scalar,
}

impl QPData {
    pub fn new(q: MultiPoly, p: MultiPoly, b: Scalar) -> Result<Self> {
        check_quadratic(&q, "x")?;
        check_admissible_quartic(&p, "x")?;
        Ok(QPData { q, p, b })
    }
}

fn uv_from(q: &MultiPoly, p: &MultiPoly, b: &MultiPoly) -> (MultiPoly, MultiPoly) {
    let y = MultiPoly::var("y");
    let z = MultiPoly::var("z");
    let xx = &MultiPoly::var("x") + &(b * &z).scale(&int(2));
    let qx = q.subst_poly("x", &xx);
    let px = p.subst_poly("x", &xx);
    let dq = q.derivative("x").subst_poly("x", &xx);
    let dp = p.derivative("x").subst_poly("x", &xx);
    let u = &(&(&y + &(b * &z.pow(2))) + &qx).pow(2) + &px;
    let v = &(&px.scale(&int(4)) * &(&z + &dq).pow(2)) + &dp.pow(2);
    (u, v)
}

/// u = (y + b z^2 + Q(X))^2 + P(X) and v = 4 P(X)(z + Q'(X))^2 + P'(X)^2
/// with X = x + 2bz. A curve of the matching contact family, lifted by its
/// slope to (x(t), y(t), z(t)), annihilates both.
pub fn uv_pair(d: &QPData) -> (MultiPoly, MultiPoly) {
    uv_from(&d.q, &d.p, &MultiPoly::constant(d.b.clone()))
}

/// Same pair with the deformation parameter kept symbolic as the variable b.
pub fn uv_pair_symbolic(q: &MultiPoly, p: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
    check_quadratic(q, "x")?;
    check_admissible_quartic(p, "x")?;
    Ok(uv_from(q, p, &MultiPoly::var("b")))
}

/// The (Q, P) member cut out by a contact-family parametrization: with
/// D = b5 - b0 b6,
///   Q(x) = -(b4 (b5 - b0 x)^2 + b3 (b5 - b0 x)(x - b6) + b1 (x - b6)^2)/D^2,
///   P(x) = -b2^2 (b5 - b0 x)(x - b6)^3 / D^4.
/// P stays an admissible quartic only for b0 != 0 and b2 != 0; otherwise
/// this returns InadmissibleQuartic.
pub fn qp_from_contact_params(p: &ContactFamilyParams) -> Result<QPData> {
    let [b0, b1, b2, b3, b4, b5, b6] = &p.bs;
    let x = MultiPoly::var("x");
    let lin1 = &MultiPoly::constant(b5.clone()) - &x.scale(b0); // b5 - b0 x
    let lin2 = &x - &MultiPoly::constant(b6.clone()); // x - b6
    let d = b5 - &(b0 * b6);
    let d2 = &d * &d;
    let d4 = &d2 * &d2;
    let qnum = &(&lin1.pow(2).scale(b4) + &(&lin1 * &lin2).scale(b3)) + &lin2.pow(2).scale(b1);
    let q = qnum.scale(&(-&Scalar::one() / &d2));
    let pnum = &lin1 * &lin2.pow(3);
    let quartic = pnum.scale(&(-&(b2 * b2) / &d4));
    QPData::new(q, quartic, p.b.clone())
}

// ---------------------------------------------------------------------------
// the degree-six eliminant factor
// ---------------------------------------------------------------------------

/// The degree-six factor of the z-eliminant of the pair with Q = 0 and
/// P = X(X-1)^3, with the deformation parameter symbolic as b. The points
/// whose common z-root satisfies z = y' lie on this factor, not on the
/// cofactor.
pub fn new_curve_symbolic() -> MultiPoly {
    "(64 b + 1024 b^3) y^3 \
     + ((768 b^2 + 16) x^2 - 768 x b^2 + 288 b^2) y^2 \
     + (264 x^2 b - 108 b^3 + 192 x^4 b - 72 x b - 384 x^3 b) y \
     + 48 x^4 - 27 b^2 + 54 x b^2 - 16 x^3 - 27 x^2 b^2 - 48 x^5 + 16 x^6"
        .parse()
        .expect("fixed text parses")
}

/// The same sextic at a concrete parameter value; the coefficient of y^3 is
/// 64 b + 1024 b^3, so b = 0 degenerates the cubic.
pub fn new_curve(b: &Scalar) -> Result<ImplicitCurve> {
    let lead = &(&int(64) * b) + &(&int(1024) * &(&(b * b) * b));
    if lead.is_zero() {
        return Err(Error::DegenerateLeading);
    }
    ImplicitCurve::new(new_curve_symbolic().eval_partial(&[("b", b.clone())]))
}

// ---------------------------------------------------------------------------
// the canonical sextic and its seven-parameter orbit
// ---------------------------------------------------------------------------

/// The canonical solution sextic y^3 + 3(3x^4 - 6x^2 - 1)y + 12x(3x^4 + 1)
/// together with its rational parametrization
/// x = t(t^2 - 3)/(3(t^2 + 1)), y = -4t(t^4 + 3)/(3(t^2 + 1)^2).
pub fn canonical_curve() -> (ImplicitCurve, ParametricCurve) {
    let f: MultiPoly = "y^3 + 3 (3 x^4 - 6 x^2 - 1) y + 12 x (3 x^4 + 1)"
        .parse()
        .expect("fixed text parses");
    let x = parse_ratfunc("t (t^2 - 3) / (3 (t^2 + 1))").expect("fixed text parses");
    let y = parse_ratfunc("-4 t (t^4 + 3) / (3 (t^2 + 1)^2)").expect("fixed text parses");
    (
        ImplicitCurve::new(f).expect("nonzero polynomial in x, y"),
        ParametricCurve::new(x, y).expect("components are nonconstant"),
    )
}

/// Parameters c1..c7 of the seven-parameter solution family.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralSolutionParams {
    pub c: [Scalar; 7],
}

impl GeneralSolutionParams {
    pub fn new(c: [Scalar; 7]) -> Result<Self> {
        if c[3].is_zero() {
            return Err(Error::DegenerateMap("c4 must be nonzero".into()));
        }
        // c5 + c6 c7 != 0 keeps the x-substitution invertible; it also rules
        // out (c5, c6) = (0, 0)
        if (&c[4] + &(&c[5] * &c[6])).is_zero() {
            return Err(Error::DegenerateMap("c5 + c6 c7 must be nonzero".into()));
        }
        Ok(GeneralSolutionParams { c })
    }

    /// The parameter tuple whose family member is the canonical sextic.
    pub fn identity() -> Self {
        GeneralSolutionParams {
            c: [int(0), int(0), int(0), int(1), int(1), int(0), int(0)],
        }
    }
}

/// The implicit family member with the seven coefficients symbolic as
/// c1..c7: writing A = c4 y + c1 + c2 x + c3 x^2, B = c5 x + c6 and
/// w = 1 - c7 x, this is
///   A^3 + 3 (3 B^4 - 6 B^2 w^2 - w^4) A + 12 B (3 B^4 w + w^5),
/// the canonical sextic with x -> B/w, y -> A/w^2 and denominators cleared
/// by w^6.
pub fn general_solution_symbolic() -> MultiPoly {
    let a: MultiPoly = "c4 y + c1 + c2 x + c3 x^2".parse().expect("fixed text parses");
    let lin: MultiPoly = "c5 x + c6".parse().expect("fixed text parses");
    let w: MultiPoly = "1 - c7 x".parse().expect("fixed text parses");
    let inner = &(&lin.pow(4).scale(&int(3)) - &(&lin.pow(2) * &w.pow(2)).scale(&int(6))) - &w.pow(4);
    let tail = &(&lin.pow(4) * &w).scale(&int(3)) + &w.pow(5);
    &(&a.pow(3) + &(&inner * &a).scale(&int(3))) + &(&lin * &tail).scale(&int(12))
}

/// The implicit sextic for concrete parameters, paired with a rational
/// parametrization lying on it exactly (the canonical parametrization pushed
/// forward by the matching point transformation).
pub fn general_solution(p: &GeneralSolutionParams) -> Result<(ImplicitCurve, ParametricCurve)> {
    let bindings: Vec<(String, Scalar)> = (0..7)
        .map(|i| (format!("c{}", i + 1), p.c[i].clone()))
        .collect();
    let borrowed: Vec<(&str, Scalar)> = bindings
        .iter()
        .map(|(n, v)| (n.as_str(), v.clone()))
        .collect();
    let implicit = ImplicitCurve::new(general_solution_symbolic().eval_partial(&borrowed))?;
    let (_, canonical) = canonical_curve();
    let fwd = transformation_params_from_family(p);
    let parametric = apply_point_transformation(&canonical, &fwd)?;
    Ok((implicit, parametric))
}

/// The family member traced out when a point transformation is applied to
/// the canonical parametrization: p = (-c1/c4, -c2/c4, -c3/c4, 1/c4,
/// (1 + c6 c7)/c5, -c6/c5, c7).
pub fn family_params_from_transformation(q: &PointTransformationParams) -> GeneralSolutionParams {
    let [c1, c2, c3, c4, c5, c6, c7] = &q.c;
    let neg_inv = -&c4.recip();
    GeneralSolutionParams::new([
        c1 * &neg_inv,
        c2 * &neg_inv,
        c3 * &neg_inv,
        c4.recip(),
        &(&Scalar::one() + &(c6 * c7)) / c5,
        &(-c6) / c5,
        c7.clone(),
    ])
    .expect("nonzero c4 and c5 give admissible family parameters")
}

/// Inverse of the correspondence above: the point transformation that pushes
/// the canonical parametrization onto the family member with parameters p.
pub fn transformation_params_from_family(p: &GeneralSolutionParams) -> PointTransformationParams {
    let [p1, p2, p3, p4, p5, p6, p7] = &p.c;
    let e = &p5.clone() + &(p6 * p7); // nonzero by the type invariant
    let neg_inv = -&p4.recip();
    PointTransformationParams::new([
        p1 * &neg_inv,
        p2 * &neg_inv,
        p3 * &neg_inv,
        p4.recip(),
        e.recip(),
        &(-p6) / &e,
        p7.clone(),
    ])
    .expect("nonzero p4 and p5 + p6 p7 give an admissible transformation")
}

// ---------------------------------------------------------------------------
// conics
// ---------------------------------------------------------------------------

/// The conic y^2 = c1 x^2 + c2 xy + c3 y + c4 x + c5 as an implicit curve;
/// degenerate conics (rank-deficient quadratic form) are rejected.
pub fn conic_family(c: &[Scalar; 5]) -> Result<ImplicitCurve> {
    // matrix of the projectivized form for a x^2 + b xy + c y^2 + d x + e y + f
    let a = -&c[0];
    let b = -&c[1];
    let cc = Scalar::one();
    let d = -&c[3];
    let e = -&c[2];
    let f0 = -&c[4];
    let half = ratio(1, 2);
    let (b2, d2, e2) = (&b * &half, &d * &half, &e * &half);
    let det = &(&(&a * &(&(&cc * &f0) - &(&e2 * &e2))) - &(&b2 * &(&(&b2 * &f0) - &(&e2 * &d2))))
        + &(&d2 * &(&(&b2 * &e2) - &(&cc * &d2)));
    if det.is_zero() {
        return Err(Error::DegenerateConic("quadratic form is rank-deficient".into()));
    }
    let xv = MultiPoly::var("x");
    let yv = MultiPoly::var("y");
    let fpoly = &(&(&yv.pow(2) - &xv.pow(2).scale(&c[0])) - &(&xv * &yv).scale(&c[1]))
        - &(&(&yv.scale(&c[2]) + &xv.scale(&c[3])) + &MultiPoly::constant(c[4].clone()));
    ImplicitCurve::new(fpoly)
}

/// Rational parametrization of a conic through a supplied rational point on
/// it, by intersecting with the pencil of lines (x0 + s, y0 + t s).
pub fn parametrize_conic(
    curve: &ImplicitCurve,
    x0: &Scalar,
    y0: &Scalar,
) -> Result<ParametricCurve> {
    if curve.f.total_degree() != 2 {
        return Err(Error::Invalid("not a conic".into()));
    }
    let at = |p: &MultiPoly| -> Result<Scalar> {
        p.eval_scalar(&[("x", x0.clone()), ("y", y0.clone())])
    };
    if !at(&curve.f)?.is_zero() {
        return Err(Error::NotOnCurve);
    }
    let fx = at(&curve.f.derivative("x"))?;
    let fy = at(&curve.f.derivative("y"))?;
    if fx.is_zero() && fy.is_zero() {
        // the vertex of a line pair admits no line-pencil parametrization
        return Err(Error::DegenerateConic("point is singular on the conic".into()));
    }
    let half = ratio(1, 2);
    let fxx = &at(&curve.f.derivative("x").derivative("x"))? * &half;
    let fxy = at(&curve.f.derivative("x").derivative("y"))?;
    let fyy = &at(&curve.f.derivative("y").derivative("y"))? * &half;
    let t = MultiPoly::var("t");
    // f(x0 + s, y0 + ts) = s [(fx + t fy) + s (fxx/2 + t fxy + t^2 fyy/2)]
    let lin = &MultiPoly::constant(fx) + &t.scale(&fy);
    let quad = &(&MultiPoly::constant(fxx) + &t.scale(&fxy)) + &t.pow(2).scale(&fyy);
    if quad.is_zero() {
        return Err(Error::DegenerateConic("no quadratic part".into()));
    }
    let s = RationalFunction::new(-&lin, quad)?;
    let x = &RationalFunction::constant(x0.clone()) + &s;
    let y = &RationalFunction::constant(y0.clone()) + &(&RationalFunction::from_poly(t) * &s);
    ParametricCurve::new(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{halphen_residual, verify_solution};
    use crate::elim::resultant;
    use crate::invariants::{discriminant_is_cube, quartic_is_equianharmonic, singular_points};
    use crate::numeric::roots::real_roots;
    use crate::ratfunc::substitute_rational;
    use crate::transform::slope;

    fn poly(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn gsp(c: [i64; 7]) -> GeneralSolutionParams {
        GeneralSolutionParams::new(c.map(int)).unwrap()
    }

    #[test]
    fn seed_lies_on_its_quartic_and_solves_the_equation() {
        let seed = seed_curve();
        let member = degree_four_family(&MultiPoly::zero(), &poly("x (x - 1)^3")).unwrap();
        assert_eq!(member.f, poly("y^2 + x (x - 1)^3"));
        assert!(seed.lies_on(&member));
        let (ok, residual) = verify_solution(&seed).unwrap();
        assert!(ok && residual.is_zero());
        assert_eq!(seed.at(&int(0)).unwrap(), (int(1), int(0)));
    }

    #[test]
    fn quartic_family_rejects_inadmissible_quartics() {
        assert!(matches!(
            degree_four_family(&MultiPoly::zero(), &poly("x^4")),
            Err(Error::InadmissibleQuartic(_))
        ));
        assert!(matches!(
            degree_four_family(&MultiPoly::zero(), &poly("x^2 (x - 1)^2")),
            Err(Error::InadmissibleQuartic(_))
        ));
        assert!(matches!(
            degree_four_family(&poly("x^3"), &poly("x (x - 1)^3")),
            Err(Error::Invalid(_))
        ));
        // scalar multiples and shifted roots stay admissible
        assert!(degree_four_family(&poly("1 + x - x^2"), &poly("5 x (x + 2)^3")).is_ok());
    }

    #[test]
    fn quartic_member_has_the_cusp_at_the_triple_root() {
        let member = degree_four_family(&MultiPoly::zero(), &poly("x (x - 1)^3")).unwrap();
        let pts = singular_points(&member).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].exact, Some((int(1), int(0))));
        assert_eq!(pts[0].multiplicity, 2);
    }

    #[test]
    fn canonical_curve_is_coherent() {
        let (implicit, parametric) = canonical_curve();
        assert!(parametric.lies_on(&implicit));
        let (ok, _) = verify_solution(&parametric).unwrap();
        assert!(ok);
        assert_eq!(parametric.at(&int(0)).unwrap(), (int(0), int(0)));
        assert_eq!(implicit.f.coeffs_in("y")[3], MultiPoly::one());
    }

    #[test]
    fn identity_parameters_reproduce_the_canonical_curve() {
        let (implicit, parametric) = general_solution(&GeneralSolutionParams::identity()).unwrap();
        let (cf, cp) = canonical_curve();
        assert_eq!(implicit.f, cf.f);
        assert_eq!(parametric.x, cp.x);
        assert_eq!(parametric.y, cp.y);
    }

    #[test]
    fn general_solution_is_coherent_for_concrete_parameters() {
        let tuples = [
            [1, -2, 3, 2, 1, 0, 0],
            [0, 1, 0, -1, 2, 3, 1],
            [2, 0, -1, 3, -1, 2, -2],
            [-1, 1, 1, 1, 2, -1, 3],
        ];
        for c in tuples {
            let p = gsp(c);
            let (implicit, parametric) = general_solution(&p).unwrap();
            assert_eq!(implicit.degree, 6);
            // leading coefficient in y is c4^3
            let lead = implicit.f.coeffs_in("y")[3].clone();
            let c4 = &p.c[3];
            assert_eq!(lead, MultiPoly::constant(&(c4 * c4) * c4));
            assert!(parametric.lies_on(&implicit));
            let (ok, residual) = verify_solution(&parametric).unwrap();
            assert!(ok && residual.is_zero(), "parameters {c:?}");
        }
    }

    #[test]
    fn degenerate_family_parameters_are_rejected() {
        assert!(matches!(
            GeneralSolutionParams::new([int(1), int(0), int(0), int(0), int(1), int(0), int(0)]),
            Err(Error::DegenerateMap(_))
        ));
        // c5 + c6 c7 = 1 + (-1)(1) = 0
        assert!(matches!(
            GeneralSolutionParams::new([int(0), int(0), int(0), int(1), int(1), int(-1), int(1)]),
            Err(Error::DegenerateMap(_))
        ));
    }

    #[test]
    fn transformed_canonical_curve_lands_on_the_matching_family_member() {
        let tuples = [
            [1, 0, -2, 3, 2, 1, 1],
            [0, 2, 1, -2, 1, -1, 2],
            [-1, 1, 0, 1, 3, 2, 0],
        ];
        for c in tuples {
            let q = PointTransformationParams::new(c.map(int)).unwrap();
            let (_, canonical) = canonical_curve();
            let image = apply_point_transformation(&canonical, &q).unwrap();
            let p = family_params_from_transformation(&q);
            let (implicit, _) = general_solution(&p).unwrap();
            assert!(image.lies_on(&implicit), "parameters {c:?}");
            // the correspondence round-trips both ways
            assert_eq!(transformation_params_from_family(&p).c, q.c);
            let back = family_params_from_transformation(&transformation_params_from_family(&p));
            assert_eq!(back.c, p.c);
        }
    }

    #[test]
    fn point_transformed_seed_stays_in_the_quartic_family() {
        for c in [[1, -1, 2, 2, 1, 0, 1], [0, 1, 0, 1, 2, 1, 1]] {
            let q = PointTransformationParams::new(c.map(int)).unwrap();
            let image = apply_point_transformation(&seed_curve(), &q).unwrap();
            // the image satisfies (y + Q)^2 + P with Q, P read off from the
            // inverse substitution A = p4 y + p1 + p2 x + p3 x^2, B = p5 x + p6,
            // w = 1 - p7 x: clearing w^4 from seed(B/w, A/w^2) leaves
            // A^2 + B(B - w)^3, and dividing by p4^2 normalizes the y^2 term
            let p = family_params_from_transformation(&q).c;
            let x = MultiPoly::var("x");
            let qq = (&(&MultiPoly::constant(p[0].clone()) + &x.scale(&p[1]))
                + &x.pow(2).scale(&p[2]))
                .scale(&p[3].recip());
            let bb = &x.scale(&p[4]) + &MultiPoly::constant(p[5].clone());
            let w = &MultiPoly::one() - &x.scale(&p[6]);
            let quartic = (&bb * &(&bb - &w).pow(3)).scale(&(&p[3] * &p[3]).recip());
            let member = degree_four_family(&qq, &quartic).unwrap();
            assert!(image.lies_on(&member), "parameters {c:?}");
        }
    }

    #[test]
    fn contact_family_slope_matches_the_closed_form() {
        let p = ContactFamilyParams::new(
            ratio(1, 2),
            [int(2), int(-1), int(3), int(1), int(-2), int(1), int(4)],
        )
        .unwrap();
        let [b0, b1, b2, b3, b4, b5, b6] = &p.bs;
        let (curve, z) = contact_family(&p).unwrap();
        let t = MultiPoly::var("t");
        let num = &(&t.pow(3).scale(&(&(&int(4) * &(b4 * b0)) - &(&int(2) * b3)))
            + &t.pow(2).scale(&(&int(-3) * b2)))
            + &(&t.scale(&(&(&int(2) * &(b3 * b0)) - &(&int(4) * b1))) + &MultiPoly::constant(b2 * b0));
        let den = (&t.scale(b0) + &t.pow(3)).scale(&(&int(2) * &(&(b0 * b6) - b5)));
        assert_eq!(z, RationalFunction::new(num, den).unwrap());
        // and the returned z is still the slope of the sheared curve
        assert_eq!(z, slope(&curve).unwrap());
    }

    #[test]
    fn contact_family_with_zero_parameter_is_the_base_curve() {
        let p = ContactFamilyParams::new(
            int(0),
            [int(1), int(2), int(-1), int(0), int(3), int(0), int(1)],
        )
        .unwrap();
        let (curve, _) = contact_family(&p).unwrap();
        assert_eq!(curve.x, parse_ratfunc("(t^2)/(t^2 + 1)").unwrap());
        assert_eq!(curve.y, parse_ratfunc("(3 t^4 - t + 2)/(t^2 + 1)^2").unwrap());
    }

    #[test]
    fn contact_family_members_solve_the_equation() {
        let params = [
            (ratio(1, 2), [1, 0, -1, 0, 0, 0, 1]),
            (int(2), [1, 1, 2, -1, 1, 3, -1]),
            (ratio(-2, 3), [2, -1, 1, 1, 0, 1, 2]),
        ];
        for (b, bs) in params {
            let p = ContactFamilyParams::new(b, bs.map(int)).unwrap();
            let (curve, z) = contact_family(&p).unwrap();
            let (ok, residual) = verify_solution(&curve).unwrap();
            assert!(ok && residual.is_zero(), "parameters {bs:?}");
            // contact identity: z dx = dy along the curve
            let defect = &(&z * &curve.x.derivative()) - &curve.y.derivative();
            assert!(defect.is_zero());
        }
    }

    #[test]
    fn degenerate_fiber_parameters_are_rejected() {
        assert!(matches!(
            ContactFamilyParams::new(int(1), [int(1), int(0), int(1), int(0), int(0), int(2), int(2)]),
            Err(Error::DegenerateDenominator)
        ));
    }

    #[test]
    fn uv_pair_vanishes_along_the_matching_parametrization() {
        let params = [
            (ratio(1, 2), [1, 0, -1, 0, 0, 0, 1]),
            (int(3), [2, 1, 1, -1, 2, 1, 3]),
        ];
        for (b, bs) in params {
            let p = ContactFamilyParams::new(b, bs.map(int)).unwrap();
            let data = qp_from_contact_params(&p).unwrap();
            let (u, v) = uv_pair(&data);
            let (curve, z) = contact_family(&p).unwrap();
            let xb = curve.x.rename("t");
            let yb = curve.y.rename("t");
            let zb = z.rename("t");
            let bind: [(&str, &RationalFunction); 3] = [("x", &xb), ("y", &yb), ("z", &zb)];
            assert!(substitute_rational(&u, &bind).unwrap().is_zero(), "{bs:?}");
            assert!(substitute_rational(&v, &bind).unwrap().is_zero(), "{bs:?}");
        }
    }

    #[test]
    fn qp_for_the_standard_fiber_is_the_reference_pair() {
        let p = ContactFamilyParams::new(
            ratio(1, 2),
            [int(1), int(0), int(-1), int(0), int(0), int(0), int(1)],
        )
        .unwrap();
        let data = qp_from_contact_params(&p).unwrap();
        assert!(data.q.is_zero());
        assert_eq!(data.p, poly("x (x - 1)^3"));
    }

    #[test]
    fn uv_pair_without_deformation_is_the_quartic_relation() {
        let data = QPData::new(MultiPoly::zero(), poly("x (x - 1)^3"), int(0)).unwrap();
        let (u, v) = uv_pair(&data);
        assert_eq!(u, poly("y^2 + x (x - 1)^3"));
        // v keeps only the slope constraint 4 P z^2 + P'^2
        assert_eq!(
            v,
            poly("4 x (x - 1)^3 z^2 + ((x - 1)^3 + 3 x (x - 1)^2)^2")
        );
    }

    #[test]
    fn sextic_factor_divides_the_eliminant() {
        let (u, v) = uv_pair_symbolic(&MultiPoly::zero(), &poly("x (x - 1)^3")).unwrap();
        let r = resultant(&u, &v, "z").unwrap();
        let quotient = r.exact_div(&new_curve_symbolic()).unwrap();
        assert!(!quotient.is_zero());
        assert!(quotient.total_degree() > 0);
    }

    #[test]
    fn parametrization_lands_on_the_sextic_factor_not_the_cofactor() {
        let b = ratio(1, 2);
        let p = ContactFamilyParams::new(
            b.clone(),
            [int(1), int(0), int(-1), int(0), int(0), int(0), int(1)],
        )
        .unwrap();
        let (curve, z) = contact_family(&p).unwrap();
        let sextic = new_curve(&b).unwrap();
        assert!(curve.lies_on(&sextic));
        let (ok, _) = verify_solution(&curve).unwrap();
        assert!(ok);
        // the cofactor of the eliminant does not vanish on the curve
        let data = qp_from_contact_params(&p).unwrap();
        let (u, v) = uv_pair(&data);
        let r = resultant(&u, &v, "z").unwrap();
        let cofactor = r.exact_div(&sextic.f).unwrap();
        let xb = curve.x.rename("t");
        let yb = curve.y.rename("t");
        assert!(!substitute_rational(&cofactor, &[("x", &xb), ("y", &yb)])
            .unwrap()
            .is_zero());
        // while the slope root z is shared: u and v vanish with it
        let zb = z.rename("t");
        assert!(substitute_rational(&u, &[("x", &xb), ("y", &yb), ("z", &zb)])
            .unwrap()
            .is_zero());
    }

    #[test]
    fn sextic_factor_degenerates_only_at_zero() {
        assert!(matches!(new_curve(&int(0)), Err(Error::DegenerateLeading)));
        assert!(new_curve(&ratio(1, 2)).is_ok());
    }

    #[test]
    fn sextic_discriminant_is_a_cube_with_two_real_equianharmonic_roots() {
        let sextic = new_curve(&ratio(1, 2)).unwrap();
        let quartic = discriminant_is_cube(&sextic).unwrap().unwrap();
        assert_eq!(quartic, poly("4 x^4 - 4 x^3 + 18 x^2 - 27 x"));
        assert_eq!(real_roots(&quartic).unwrap().len(), 2);
        assert!(quartic_is_equianharmonic(&quartic, 1e-10).unwrap());
    }

    #[test]
    fn conics_satisfy_the_fifth_order_equation() {
        let parabola = conic_family(&[int(0), int(0), int(0), int(1), int(0)]).unwrap();
        assert_eq!(parabola.f, poly("y^2 - x"));
        let pc = parametrize_conic(&parabola, &int(0), &int(0)).unwrap();
        assert!(pc.lies_on(&parabola));
        assert!(halphen_residual(&pc).unwrap().is_zero());

        let circle = conic_family(&[int(-1), int(0), int(0), int(0), int(1)]).unwrap();
        let cc = parametrize_conic(&circle, &int(0), &int(1)).unwrap();
        assert!(cc.lies_on(&circle));
        assert!(halphen_residual(&cc).unwrap().is_zero());
    }

    #[test]
    fn degenerate_conics_are_rejected() {
        // y^2 = x^2 is a line pair
        assert!(matches!(
            conic_family(&[int(1), int(0), int(0), int(0), int(0)]),
            Err(Error::DegenerateConic(_))
        ));
        let circle = conic_family(&[int(-1), int(0), int(0), int(0), int(1)]).unwrap();
        assert!(matches!(
            parametrize_conic(&circle, &int(2), &int(0)),
            Err(Error::NotOnCurve)
        ));
    }
}
