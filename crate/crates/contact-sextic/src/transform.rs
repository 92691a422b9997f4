//! Finite point transformations and the three closed-form contact flows
//! acting on parametric curves.

use num_traits::Zero;

use crate::curve::ParametricCurve;
use crate::error::{Error, Result};
use crate::ratfunc::RationalFunction;
use crate::scalar::{int, Scalar};

/// Parameters (c1..c7) of the seven-parameter point-transformation group.
#[derive(Clone, Debug, PartialEq)]
pub struct PointTransformationParams {
    pub c: [Scalar; 7],
}

impl PointTransformationParams {
    pub fn new(c: [Scalar; 7]) -> Result<Self> {
        if c[3].is_zero() {
            return Err(Error::DegenerateMap("c4 must be nonzero".into()));
        }
        if c[4].is_zero() {
            return Err(Error::DegenerateMap("c5 must be nonzero".into()));
        }
        Ok(PointTransformationParams { c })
    }

    pub fn identity() -> Self {
        PointTransformationParams {
            c: [int(0), int(0), int(0), int(1), int(1), int(0), int(0)],
        }
    }
}

/// Applies, in this fixed order: x -> c5 x + c6, then the unipotent pair
/// x -> x/(1 + c7 x), y -> y/(1 + c7 x)^2, then y -> c4 y + c1 + c2 x + c3 x^2.
pub fn apply_point_transformation(
    curve: &ParametricCurve,
    p: &PointTransformationParams,
) -> Result<ParametricCurve> {
    let [c1, c2, c3, c4, c5, c6, c7] = &p.c;
    let cst = |s: &Scalar| RationalFunction::constant(s.clone());

    let x1 = &(&cst(c5) * &curve.x) + &cst(c6);
    let y1 = curve.y.clone();

    let den = &cst(&int(1)) + &(&cst(c7) * &x1);
    if den.is_zero() {
        return Err(Error::DegenerateDenominator);
    }
    let inv = den.recip()?;
    let x2 = &x1 * &inv;
    let y2 = &y1 * &(&inv * &inv);

    let y3 = &(&cst(c4) * &y2)
        + &(&(&cst(c1) + &(&cst(c2) * &x2)) + &(&cst(c3) * &(&x2 * &x2)));
    ParametricCurve::new(x2, y3)
}

/// Which of the three non-point generators drives the flow.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContactFlowGenerator {
    /// z^2: the shear (x, y, z) -> (x - 2bz, y - bz^2, z)
    H8,
    /// 2yz - xz^2
    H9,
    /// 4xyz - 4y^2 - x^2 z^2
    H10,
}

#[derive(Clone, Debug)]
pub struct ContactFlowParams {
    pub generator: ContactFlowGenerator,
    pub parameter: Scalar,
}

/// Slope z(t) = dy/dt / (dx/dt) along the curve.
pub fn slope(curve: &ParametricCurve) -> Result<RationalFunction> {
    let dx = curve.x.derivative();
    if dx.is_zero() {
        return Err(Error::VerticalCurve);
    }
    Ok(&curve.y.derivative() * &dx.recip()?)
}

/// Applies the closed-form flow of the selected generator, returning the
/// transformed curve together with the transformed slope; the contact
/// identity z~ . dx~/dt = dy~/dt holds exactly for the returned pair.
pub fn apply_contact_flow(
    curve: &ParametricCurve,
    f: &ContactFlowParams,
) -> Result<(ParametricCurve, RationalFunction)> {
    let z = slope(curve)?;
    let b = RationalFunction::constant(f.parameter.clone());
    let one = RationalFunction::constant(int(1));
    let x = &curve.x;
    let y = &curve.y;
    let (xt, yt, zt) = match f.generator {
        ContactFlowGenerator::H8 => {
            let xt = x - &(&(&b + &b) * &z);
            let yt = y - &(&b * &(&z * &z));
            (xt, yt, z)
        }
        ContactFlowGenerator::H9 => {
            let den = &one - &(&b * &z);
            if den.is_zero() {
                return Err(Error::DegenerateDenominator);
            }
            let inv = den.recip()?;
            let xt = &(&(x * &(&one + &(&b * &z))) - &(&(&b + &b) * y)) * &inv;
            let yt = &(&(y * &(&one - &(&(&b + &b) * &z)))
                + &(&(&b * x) * &(&z * &z)))
                * &(&inv * &inv);
            let zt = &z * &inv;
            (xt, yt, zt)
        }
        ContactFlowGenerator::H10 => {
            let four_b = &(&b + &b) + &(&b + &b);
            let den = &(&one + &(&four_b * y)) - &(&(&b + &b) * &(x * &z));
            if den.is_zero() {
                return Err(Error::DegenerateDenominator);
            }
            let inv = den.recip()?;
            let num = &(&(y + &(&four_b * &(y * y))) - &(&four_b * &(&(x * y) * &z)))
                + &(&b * &(&(x * x) * &(&z * &z)));
            let xt = x * &inv;
            let yt = &num * &(&inv * &inv);
            let zt = &z * &inv;
            (xt, yt, zt)
        }
    };
    Ok((ParametricCurve::new(xt, yt)?, zt))
}

/// Exact check of the contact identity for a curve and slope function.
pub fn contact_identity_holds(curve: &ParametricCurve, z: &RationalFunction) -> bool {
    let lhs = z * &curve.x.derivative();
    lhs == curve.y.derivative()
}
