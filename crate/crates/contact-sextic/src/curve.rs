//! Plane curves in parametric and implicit form, exact jets along them,
//! and the residuals of the seventh-order equation
//! 10(y''')^3 y7 - 70(y''')^2 y4 y6 - 49(y''')^2 y5^2 + 280 y''' y4^2 y5 - 175 y4^4 = 0
//! and of the fifth-order conic equation of Halphen.
//!
//! Derivatives along a parametric curve are kept in a factored form
//! N * q^-a * s^-b * E^-c with q = den(x), s = den(y), E = x_num' q - x_num q',
//! so that no gcd is needed until a result is converted back to a reduced
//! rational function. All five monomials of the seventh-order equation carry
//! the same factored weight, which keeps the residual numerator small.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::ratfunc::{substitute_rational, RationalFunction};
use crate::scalar::{int, to_f64, Scalar};

/// A rational parametric curve (x(t), y(t)).
#[derive(Clone, Debug)]
pub struct ParametricCurve {
    pub x: RationalFunction,
    pub y: RationalFunction,
}

impl ParametricCurve {
    pub fn new(x: RationalFunction, y: RationalFunction) -> Result<Self> {
        match (x.parameter(), y.parameter()) {
            (Some(a), Some(b)) if a != b => {
                return Err(Error::Invalid(format!(
                    "mismatched curve parameters {a:?} and {b:?}"
                )))
            }
            _ => {}
        }
        if x.derivative().is_zero() && y.derivative().is_zero() {
            return Err(Error::Invalid("both components are constant".into()));
        }
        Ok(ParametricCurve { x, y })
    }

    pub fn parameter(&self) -> &str {
        self.x.parameter().or(self.y.parameter()).unwrap_or("t")
    }

    /// Exact point at parameter value t (DivisionByZero on a pole).
    pub fn at(&self, t: &Scalar) -> Result<(Scalar, Scalar)> {
        Ok((self.x.eval_scalar(t)?, self.y.eval_scalar(t)?))
    }

    /// True when the implicit relation vanishes identically on the curve.
    pub fn lies_on(&self, curve: &ImplicitCurve) -> bool {
        let x = self.x.rename("t");
        let y = self.y.rename("t");
        substitute_rational(&curve.f, &[("x", &x), ("y", &y)])
            .map(|n| n.is_zero())
            .unwrap_or(false)
    }
}

/// An implicit plane curve f(x, y) = 0.
#[derive(Clone, Debug)]
pub struct ImplicitCurve {
    pub f: MultiPoly,
    pub degree: u64,
}

impl ImplicitCurve {
    pub fn new(f: MultiPoly) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.vars().iter().any(|v| v != "x" && v != "y") {
            return Err(Error::Invalid(format!(
                "implicit curve must use variables x, y only, got {:?}",
                f.vars()
            )));
        }
        let degree = f.total_degree();
        Ok(ImplicitCurve { f, degree })
    }
}

/// Floating-point jet of a function y(x) at x0: y, y', ..., up to some order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Jet7 {
    pub x0: f64,
    pub y: Vec<f64>,
}

impl Jet7 {
    /// Highest derivative order carried (y counts as order 0).
    pub fn order(&self) -> usize {
        self.y.len().saturating_sub(1)
    }

    pub fn from_exact(x0: &Scalar, ys: &[Scalar]) -> Self {
        Jet7 { x0: to_f64(x0), y: ys.iter().map(to_f64).collect() }
    }
}

// ---------------------------------------------------------------------------
// factored derivatives along a parametric curve
// ---------------------------------------------------------------------------

/// Denominator bases of a fixed curve, shared by all factored values on it.
pub(crate) struct JetContext {
    q: MultiPoly,
    s: MultiPoly,
    e: MultiPoly,
    dq: MultiPoly,
    ds: MultiPoly,
    de: MultiPoly,
    var: String,
    x_num: MultiPoly,
    y_num: MultiPoly,
}

/// num * q^-a * s^-b * e^-c relative to a JetContext.
#[derive(Clone)]
pub(crate) struct Weighted {
    num: MultiPoly,
    a: i64,
    b: i64,
    c: i64,
}

impl JetContext {
    pub(crate) fn new(curve: &ParametricCurve) -> Result<Self> {
        let var = curve.parameter().to_string();
        let x = curve.x.rename(&var);
        let y = curve.y.rename(&var);
        let (p, q) = (x.num().clone(), x.den().clone());
        let (r, s) = (y.num().clone(), y.den().clone());
        let e = &(&p.derivative(&var) * &q) - &(&p * &q.derivative(&var));
        if e.is_zero() {
            return Err(Error::VerticalCurve);
        }
        Ok(JetContext {
            dq: q.derivative(&var),
            ds: s.derivative(&var),
            de: e.derivative(&var),
            q,
            s,
            e,
            var,
            x_num: p,
            y_num: r,
        })
    }

    fn poly(&self, num: MultiPoly) -> Weighted {
        Weighted { num, a: 0, b: 0, c: 0 }
    }

    fn x_value(&self) -> Weighted {
        Weighted { num: self.x_num.clone(), a: 1, b: 0, c: 0 }
    }

    fn y_value(&self) -> Weighted {
        Weighted { num: self.y_num.clone(), a: 0, b: 1, c: 0 }
    }

    fn base_pow(&self, w: &Weighted, da: i64, db: i64, dc: i64) -> MultiPoly {
        let mut n = w.num.clone();
        for (base, k) in [(&self.q, da), (&self.s, db), (&self.e, dc)] {
            if k > 0 {
                n = &n * &base.pow(k as u32);
            }
        }
        n
    }

    fn add(&self, u: &Weighted, v: &Weighted) -> Weighted {
        let (a, b, c) = (u.a.max(v.a), u.b.max(v.b), u.c.max(v.c));
        let un = self.base_pow(u, a - u.a, b - u.b, c - u.c);
        let vn = self.base_pow(v, a - v.a, b - v.b, c - v.c);
        Weighted { num: &un + &vn, a, b, c }
    }

    fn mul(&self, u: &Weighted, v: &Weighted) -> Weighted {
        Weighted { num: &u.num * &v.num, a: u.a + v.a, b: u.b + v.b, c: u.c + v.c }
    }

    fn scale(&self, u: &Weighted, k: i64) -> Weighted {
        Weighted { num: u.num.scale(&int(k)), ..u.clone() }
    }

    fn pow(&self, u: &Weighted, k: u32) -> Weighted {
        Weighted { num: u.num.pow(k), a: u.a * k as i64, b: u.b * k as i64, c: u.c * k as i64 }
    }

    /// d/dx of a factored value: differentiate by t, then divide by
    /// dx/dt = e/q^2. Weights move by (-1, +1, +2).
    fn ddx(&self, u: &Weighted) -> Weighted {
        let qse = &(&self.q * &self.s) * &self.e;
        let mut n = &u.num.derivative(&self.var) * &qse;
        let mut corr = MultiPoly::zero();
        if u.a != 0 {
            corr = &corr + &(&(&self.dq * &self.s) * &self.e).scale(&int(u.a));
        }
        if u.b != 0 {
            corr = &corr + &(&(&self.ds * &self.q) * &self.e).scale(&int(u.b));
        }
        if u.c != 0 {
            corr = &corr + &(&(&self.de * &self.q) * &self.s).scale(&int(u.c));
        }
        if !corr.is_zero() {
            n = &n - &(&u.num * &corr);
        }
        Weighted { num: n, a: u.a - 1, b: u.b + 1, c: u.c + 2 }
    }

    /// Derivatives y, y', ..., y^(order) with respect to x, as factored values.
    fn jets(&self, order: usize) -> Vec<Weighted> {
        let mut out = vec![self.y_value()];
        for k in 0..order {
            let next = self.ddx(&out[k]);
            out.push(next);
        }
        out
    }

    fn to_ratfunc(&self, w: &Weighted) -> Result<RationalFunction> {
        let num = self.base_pow(w, -w.a, -w.b, -w.c);
        let mut den = MultiPoly::one();
        for (base, k) in [(&self.q, w.a), (&self.s, w.b), (&self.e, w.c)] {
            if k > 0 {
                den = &den * &base.pow(k as u32);
            }
        }
        RationalFunction::new(num, den)
    }

    /// Evaluates a factored value at a parameter point; the bases must not
    /// vanish there.
    fn eval(&self, w: &Weighted, t: &Scalar) -> Result<Scalar> {
        let at = |p: &MultiPoly| p.eval_scalar(&[(self.var.as_str(), t.clone())]);
        let (qv, sv, ev) = (at(&self.q)?, at(&self.s)?, at(&self.e)?);
        if qv.is_zero() || sv.is_zero() || ev.is_zero() {
            return Err(Error::SingularJet);
        }
        let mut v = at(&w.num)?;
        for (base, k) in [(qv, w.a), (sv, w.b), (ev, w.c)] {
            v = &v * &crate::scalar::pow(&base, -k)?;
        }
        Ok(v)
    }
}

// ---------------------------------------------------------------------------
// jets and residuals
// ---------------------------------------------------------------------------

/// First `order` derivatives of y with respect to x along the curve, as
/// exact reduced rational functions of the parameter.
pub fn jet_from_parametric(curve: &ParametricCurve, order: usize) -> Result<Vec<RationalFunction>> {
    let ctx = JetContext::new(curve)?;
    let jets = ctx.jets(order);
    jets[1..].iter().map(|w| ctx.to_ratfunc(w)).collect()
}

/// Exact jet values (y, y', ..., y^(order)) at parameter value t0.
pub fn jet_values_at(curve: &ParametricCurve, t0: &Scalar, order: usize) -> Result<Vec<Scalar>> {
    let ctx = JetContext::new(curve)?;
    let jets = ctx.jets(order);
    jets.iter().map(|w| ctx.eval(w, t0)).collect()
}

fn ode_weighted(ctx: &JetContext) -> Weighted {
    let j = ctx.jets(7);
    let (y3, y4, y5, y6, y7) = (&j[3], &j[4], &j[5], &j[6], &j[7]);
    let t1 = ctx.scale(&ctx.mul(&ctx.pow(y3, 3), y7), 10);
    let t2 = ctx.scale(&ctx.mul(&ctx.mul(&ctx.pow(y3, 2), y4), y6), -70);
    let t3 = ctx.scale(&ctx.mul(&ctx.pow(y3, 2), &ctx.pow(y5, 2)), -49);
    let t4 = ctx.scale(&ctx.mul(&ctx.mul(y3, &ctx.pow(y4, 2)), y5), 280);
    let t5 = ctx.scale(&ctx.pow(y4, 4), -175);
    [t2, t3, t4, t5].iter().fold(t1, |acc, w| ctx.add(&acc, w))
}

/// Numerator of the seventh-order expression along the curve; the zero
/// polynomial exactly when the curve is a solution.
pub fn ode_residual(curve: &ParametricCurve) -> Result<MultiPoly> {
    let ctx = JetContext::new(curve)?;
    let w = ode_weighted(&ctx);
    if w.num.is_zero() {
        return Ok(MultiPoly::zero());
    }
    Ok(ctx.to_ratfunc(&w)?.num().clone())
}

/// True plus the residual numerator; the flag avoids reducing a large
/// nonzero numerator when only the decision is needed.
pub fn verify_solution(curve: &ParametricCurve) -> Result<(bool, MultiPoly)> {
    let ctx = JetContext::new(curve)?;
    let w = ode_weighted(&ctx);
    if w.num.is_zero() {
        Ok((true, MultiPoly::zero()))
    } else {
        Ok((false, ctx.to_ratfunc(&w)?.num().clone()))
    }
}

/// Numerator of 9(y'')^2 y5 - 45 y'' y''' y4 + 40 (y''')^3 along the curve;
/// identically zero exactly for (arcs of) conics.
pub fn halphen_residual(curve: &ParametricCurve) -> Result<MultiPoly> {
    let ctx = JetContext::new(curve)?;
    let j = ctx.jets(5);
    let (y2, y3, y4, y5) = (&j[2], &j[3], &j[4], &j[5]);
    let t1 = ctx.scale(&ctx.mul(&ctx.pow(y2, 2), y5), 9);
    let t2 = ctx.scale(&ctx.mul(&ctx.mul(y2, y3), y4), -45);
    let t3 = ctx.scale(&ctx.pow(y3, 3), 40);
    let w = ctx.add(&ctx.add(&t1, &t2), &t3);
    if w.num.is_zero() {
        return Ok(MultiPoly::zero());
    }
    Ok(ctx.to_ratfunc(&w)?.num().clone())
}

// ---------------------------------------------------------------------------
// implicit jets by truncated series lifting
// ---------------------------------------------------------------------------

/// Taylor coefficients of f at x0, lowest first, truncated to len entries.
fn shifted_coeffs(f: &MultiPoly, var: &str, x0: &Scalar, len: usize) -> Vec<Scalar> {
    let mut d = f.clone();
    let mut out = Vec::with_capacity(len);
    let mut fact = Scalar::one();
    for k in 0..len {
        if k > 0 {
            d = d.derivative(var);
            fact = &fact * &int(k as i64);
        }
        let v = d
            .eval_scalar(&[(var, x0.clone())])
            .expect("series shift binds its only variable");
        out.push(&v / &fact);
    }
    out
}

fn series_mul(a: &[Scalar], b: &[Scalar], len: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            if !bj.is_zero() {
                out[i + j] = &out[i + j] + &(ai * bj);
            }
        }
    }
    out
}

/// Exact derivatives (y, y', ..., y^(order)) of the branch of f(x, y) = 0
/// through (x0, y0), by solving for the Taylor coefficients of y(x) one
/// order at a time; each step is a linear solve against f_y(x0, y0).
pub fn implicit_jet_exact(
    curve: &ImplicitCurve,
    x0: &Scalar,
    y0: &Scalar,
    order: usize,
) -> Result<Vec<Scalar>> {
    let f = &curve.f;
    let on = f.eval_scalar(&[("x", x0.clone()), ("y", y0.clone())])?;
    if !on.is_zero() {
        return Err(Error::NotOnCurve);
    }
    let fy0 = f
        .derivative("y")
        .eval_scalar(&[("x", x0.clone()), ("y", y0.clone())])?;
    if fy0.is_zero() {
        return Err(Error::SingularBranch);
    }
    let len = order + 1;
    // f as a polynomial in y with x-dependent coefficients, each shifted to x0
    let coeff_series: Vec<Vec<Scalar>> = f
        .coeffs_in("y")
        .iter()
        .map(|c| shifted_coeffs(c, "x", x0, len))
        .collect();
    let mut a = vec![Scalar::zero(); len];
    a[0] = y0.clone();
    let eval_f = |y: &[Scalar]| -> Vec<Scalar> {
        // Horner in y over truncated series
        let mut acc = vec![Scalar::zero(); len];
        for c in coeff_series.iter().rev() {
            acc = series_mul(&acc, y, len);
            for (t, ck) in acc.iter_mut().zip(c.iter()) {
                *t = &*t + ck;
            }
        }
        acc
    };
    let fy_inv = fy0.recip();
    for k in 1..=order {
        // with a_k still zero, the h^k coefficient of f(x0+h, y(h)) is linear
        // in the unknown with slope f_y(x0, y0)
        let c = eval_f(&a);
        a[k] = -&(&c[k] * &fy_inv);
    }
    let mut fact = Scalar::one();
    let mut out = Vec::with_capacity(len);
    for (k, ak) in a.iter().enumerate() {
        if k > 0 {
            fact = &fact * &int(k as i64);
        }
        out.push(ak * &fact);
    }
    Ok(out)
}

/// Floating-point view of implicit_jet_exact.
pub fn implicit_jet(curve: &ImplicitCurve, x0: &Scalar, y0: &Scalar, order: usize) -> Result<Jet7> {
    let ys = implicit_jet_exact(curve, x0, y0, order)?;
    Ok(Jet7::from_exact(x0, &ys))
}

// ---------------------------------------------------------------------------
// linearization along a solution
// ---------------------------------------------------------------------------

/// Applies the linearization of the seventh-order equation along a solution
/// curve to the characteristic v = H(x, y, y') of a generating function H.
/// Returns the common-denominator numerator; it vanishes identically exactly
/// when v solves the linearized equation.
pub fn linearization_residual(h: &MultiPoly, curve: &ParametricCurve) -> Result<MultiPoly> {
    let ctx = JetContext::new(curve)?;
    let j = ctx.jets(7);
    let (y3, y4, y5, y6, y7) = (&j[3], &j[4], &j[5], &j[6], &j[7]);

    // partial derivatives of the equation with respect to y''', ..., y^(7)
    let p3 = {
        let t1 = ctx.scale(&ctx.mul(&ctx.pow(y3, 2), y7), 30);
        let t2 = ctx.scale(&ctx.mul(&ctx.mul(y3, y4), y6), -140);
        let t3 = ctx.scale(&ctx.mul(y3, &ctx.pow(y5, 2)), -98);
        let t4 = ctx.scale(&ctx.mul(&ctx.pow(y4, 2), y5), 280);
        ctx.add(&ctx.add(&t1, &t2), &ctx.add(&t3, &t4))
    };
    let p4 = {
        let t1 = ctx.scale(&ctx.mul(&ctx.pow(y3, 2), y6), -70);
        let t2 = ctx.scale(&ctx.mul(&ctx.mul(y3, y4), y5), 560);
        let t3 = ctx.scale(&ctx.pow(y4, 3), -700);
        ctx.add(&ctx.add(&t1, &t2), &t3)
    };
    let p5 = {
        let t1 = ctx.scale(&ctx.mul(&ctx.pow(y3, 2), y5), -98);
        let t2 = ctx.scale(&ctx.mul(y3, &ctx.pow(y4, 2)), 280);
        ctx.add(&t1, &t2)
    };
    let p6 = ctx.scale(&ctx.mul(&ctx.pow(y3, 2), y4), -70);
    let p7 = ctx.scale(&ctx.pow(y3, 3), 10);

    // characteristic v = H(x, y, z) with z = y', evaluated along the curve
    let xv = ctx.x_value();
    let yv = ctx.y_value();
    let zv = &j[1];
    let mut v = ctx.poly(MultiPoly::zero());
    for cz in h.coeffs_in("z").iter().rev() {
        v = ctx.mul(&v, zv);
        // cz is a polynomial in (x, y); expand by powers of y, then x
        for (jy, cy) in cz.coeffs_in("y").iter().enumerate() {
            for (ix, cx) in cy.coeffs_in("x").iter().enumerate() {
                if cx.is_zero() {
                    continue;
                }
                let mut term = ctx.poly(cx.clone());
                if ix > 0 {
                    term = ctx.mul(&term, &ctx.pow(&xv, ix as u32));
                }
                if jy > 0 {
                    term = ctx.mul(&term, &ctx.pow(&yv, jy as u32));
                }
                v = ctx.add(&v, &term);
            }
        }
    }

    // derivatives of v with respect to x along the curve
    let mut vs = vec![v];
    for k in 0..7 {
        let next = ctx.ddx(&vs[k]);
        vs.push(next);
    }

    let terms = [(p3, 3), (p4, 4), (p5, 5), (p6, 6), (p7, 7)];
    let mut total = ctx.poly(MultiPoly::zero());
    for (p, k) in &terms {
        total = ctx.add(&total, &ctx.mul(p, &vs[*k]));
    }
    Ok(total.num)
}
