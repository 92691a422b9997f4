//! Singular points and multiplicities, arithmetic genus, the cube-of-quartic
//! discriminant test, cross-ratios, and the quadratic invariant of binary
//! sextic forms.

use num_complex::Complex64;
use num_traits::Zero;

use crate::elim::{discriminant_wrt, resultant};
use crate::error::{Error, Result};
use crate::curve::ImplicitCurve;
use crate::numeric::roots::{self, ComplexRoot};
use crate::poly::MultiPoly;
use crate::scalar::{int, rationalize, to_f64, Scalar};
use crate::univar;

// ---------------------------------------------------------------------------
// singular points
// ---------------------------------------------------------------------------

/// A coordinate of a singular point: exact when rational, otherwise a float
/// approximation together with the square-free defining polynomial (in x)
/// it was extracted from, when one is available.
#[derive(Clone, Debug)]
pub struct SingularPoint {
    pub x: f64,
    pub y: f64,
    /// set when both coordinates are rational and verified exactly
    pub exact: Option<(Scalar, Scalar)>,
    pub x_defining: Option<MultiPoly>,
    pub multiplicity: u32,
}

/// Floating-point paths run at square-root precision: the y-fiber over an
/// approximate x splits exact multiple roots by about sqrt(machine epsilon).
const APPROX_TOL: f64 = 1e-6;

fn try_rational(v: f64) -> Option<Scalar> {
    rationalize(v, 1_000_000)
}

/// Order of the first nonvanishing jet of partials at an exact point.
fn multiplicity_exact(f: &MultiPoly, x0: &Scalar, y0: &Scalar) -> u32 {
    let mut row: Vec<MultiPoly> = vec![f.clone()]; // all order-m partials
    for m in 1..=f.total_degree() as u32 + 1 {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row[0].derivative("x"));
        for p in &row {
            next.push(p.derivative("y"));
        }
        let nonzero = next.iter().any(|p| {
            !p.eval_scalar(&[("x", x0.clone()), ("y", y0.clone())])
                .expect("partials bind x and y")
                .is_zero()
        });
        if nonzero {
            return m;
        }
        row = next;
    }
    f.total_degree() as u32 + 1
}

fn multiplicity_approx(f: &MultiPoly, x0: f64, y0: f64, scale: f64) -> u32 {
    let mut row: Vec<MultiPoly> = vec![f.clone()];
    for m in 1..=f.total_degree() as u32 + 1 {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row[0].derivative("x"));
        for p in &row {
            next.push(p.derivative("y"));
        }
        let nonzero = next.iter().any(|p| {
            p.eval_f64(&[("x", x0), ("y", y0)]).expect("partials bind x and y").abs()
                > APPROX_TOL * scale
        });
        if nonzero {
            return m;
        }
        row = next;
    }
    f.total_degree() as u32 + 1
}

fn coeff_magnitude(f: &MultiPoly) -> f64 {
    f.terms().map(|(_, c)| to_f64(c).abs()).fold(1.0, f64::max)
}

/// All real affine singular points of the curve: common zeros of
/// (f, f_x, f_y), located by eliminating y with a resultant and extracting
/// roots in x, exact rational arithmetic wherever the coordinates allow it.
pub fn singular_points(curve: &ImplicitCurve) -> Result<Vec<SingularPoint>> {
    let f = &curve.f;
    let fx = f.derivative("x");
    let fy = f.derivative("y");
    if fx.is_zero() && fy.is_zero() {
        return Err(Error::Invalid("curve polynomial is constant".into()));
    }
    // univariate shapes: the singular locus is a union of lines or empty
    if f.degree_in("y") == 0 {
        let g = univar_gcd(f, &fx, "x")?;
        return if g.is_constant() {
            Ok(Vec::new())
        } else {
            Err(Error::NonZeroDimensional)
        };
    }
    if f.degree_in("x") == 0 {
        let g = univar_gcd(f, &fy, "y")?;
        return if g.is_constant() {
            Ok(Vec::new())
        } else {
            Err(Error::NonZeroDimensional)
        };
    }
    if f.degree_in("y") == 1 {
        // f = a(x) y + b(x): singular points need a = b = 0 and
        // a' y + b' = 0, so they sit over roots of gcd(a, b)
        let cs = f.coeffs_in("y");
        let (b, a) = (&cs[0], &cs[1]);
        let g = univar_gcd(a, b, "x")?;
        if g.is_constant() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let da = a.derivative("x");
        let db = b.derivative("x");
        for (x0, _) in rational_real_roots(&g)? {
            let dav = da.eval_scalar(&[("x", x0.clone())])?;
            if dav.is_zero() {
                // f_x vanishes on the whole vertical line
                if db.eval_scalar(&[("x", x0.clone())])?.is_zero() {
                    return Err(Error::NonZeroDimensional);
                }
                continue;
            }
            let y0 = -&(&db.eval_scalar(&[("x", x0.clone())])? / &dav);
            let m = multiplicity_exact(f, &x0, &y0);
            out.push(SingularPoint {
                x: to_f64(&x0),
                y: to_f64(&y0),
                exact: Some((x0, y0)),
                x_defining: None,
                multiplicity: m,
            });
        }
        return Ok(out);
    }

    // general case: eliminate y between f and f_y
    let elim = resultant(f, &fy, "y")?;
    if elim.is_zero() {
        return Err(Error::NonZeroDimensional);
    }
    if elim.is_constant() {
        return Ok(Vec::new());
    }
    let scale = coeff_magnitude(f);
    let (_, parts) = univar::square_free_decomposition(&elim, "x")?;
    let mut out: Vec<SingularPoint> = Vec::new();
    for part in &parts {
        for (xv, _) in roots::real_roots(&part.factor)? {
            // prefer an exact rational coordinate when it verifies
            let x_exact = try_rational(xv).filter(|x0| {
                part.factor
                    .eval_scalar(&[("x", x0.clone())])
                    .map(|v| v.is_zero())
                    .unwrap_or(false)
            });
            match x_exact {
                Some(x0) => {
                    for (y0, m) in singular_fiber_exact(f, &fx, &fy, &x0)? {
                        out.push(SingularPoint {
                            x: to_f64(&x0),
                            y: to_f64(&y0),
                            exact: Some((x0.clone(), y0)),
                            x_defining: None,
                            multiplicity: m,
                        });
                    }
                }
                None => {
                    for yv in singular_fiber_approx(f, &fx, &fy, xv, scale) {
                        let m = multiplicity_approx(f, xv, yv, scale);
                        out.push(SingularPoint {
                            x: xv,
                            y: yv,
                            exact: None,
                            x_defining: Some(part.factor.clone()),
                            multiplicity: m,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Rational y-values with f = f_x = f_y = 0 over a rational x, with exact
/// multiplicities. Irrational y over a rational x is reported approximately.
fn singular_fiber_exact(
    f: &MultiPoly,
    fx: &MultiPoly,
    fy: &MultiPoly,
    x0: &Scalar,
) -> Result<Vec<(Scalar, u32)>> {
    let sub = |p: &MultiPoly| p.eval_partial(&[("x", x0.clone())]);
    let (fv, fxv, fyv) = (sub(f), sub(fx), sub(fy));
    let mut g = univar_gcd(&fv, &fyv, "y")?;
    if !fxv.is_zero() {
        g = univar_gcd(&g, &fxv, "y")?;
    } else if g.is_zero() {
        return Err(Error::NonZeroDimensional);
    }
    if g.is_zero() {
        return Err(Error::NonZeroDimensional);
    }
    if g.is_constant() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (y0, _) in rational_real_roots(&g)? {
        let m = multiplicity_exact(f, x0, &y0);
        out.push((y0, m));
    }
    Ok(out)
}

fn singular_fiber_approx(
    f: &MultiPoly,
    fx: &MultiPoly,
    fy: &MultiPoly,
    xv: f64,
    scale: f64,
) -> Vec<f64> {
    let dense = |p: &MultiPoly| -> Vec<f64> {
        p.coeffs_in("y")
            .iter()
            .map(|c| c.eval_f64(&[("x", xv)]).unwrap_or(f64::NAN))
            .collect()
    };
    let fv = dense(f);
    let mut out = Vec::new();
    for root in roots::roots_of_square_free(&fv) {
        if root.im.abs() > APPROX_TOL * (1.0 + root.re.abs()) {
            continue;
        }
        let yv = root.re;
        let fxv = fx.eval_f64(&[("x", xv), ("y", yv)]).unwrap_or(f64::NAN);
        let fyv = fy.eval_f64(&[("x", xv), ("y", yv)]).unwrap_or(f64::NAN);
        if fxv.abs() <= APPROX_TOL * scale && fyv.abs() <= APPROX_TOL * scale {
            if out.iter().all(|prev: &f64| (prev - yv).abs() > APPROX_TOL) {
                out.push(yv);
            }
        }
    }
    out
}

/// Rational roots of a univariate polynomial, as (root, multiplicity); roots
/// that are not rational are skipped.
fn rational_real_roots(g: &MultiPoly) -> Result<Vec<(Scalar, u32)>> {
    let var = match g.vars().first() {
        Some(v) => v.clone(),
        None => return Ok(Vec::new()),
    };
    let mut out = Vec::new();
    for (v, m) in roots::real_roots(g)? {
        if let Some(r) = try_rational(v) {
            if g.eval_scalar(&[(var.as_str(), r.clone())])?.is_zero() {
                out.push((r, m));
            }
        }
    }
    Ok(out)
}

/// gcd of two polynomials that are univariate in the named variable.
fn univar_gcd(a: &MultiPoly, b: &MultiPoly, var: &str) -> Result<MultiPoly> {
    if a.is_zero() {
        return Ok(b.clone());
    }
    if b.is_zero() {
        return Ok(a.clone());
    }
    let da = univar::to_dense(a, var)?;
    let db = univar::to_dense(b, var)?;
    Ok(univar::from_dense(var, &univar::gcd(&da, &db)))
}

// ---------------------------------------------------------------------------
// genus and projective helpers
// ---------------------------------------------------------------------------

/// (d-1)(d-2)/2 - sum of deltas.
pub fn arithmetic_genus(d: u64, deltas: &[u64]) -> i64 {
    let base = ((d - 1) * (d.saturating_sub(2))) / 2;
    base as i64 - deltas.iter().sum::<u64>() as i64
}

/// Homogenization of the curve polynomial with the named variable.
pub fn homogenize(curve: &ImplicitCurve, w: &str) -> MultiPoly {
    let d = curve.degree;
    let mut out = MultiPoly::zero();
    let wv = MultiPoly::var(w);
    for (mono, coeff) in curve.f.terms() {
        let mut term = MultiPoly::constant(coeff.clone());
        for (name, &e) in curve.f.vars().iter().zip(mono.0.iter()) {
            if e > 0 {
                term = &term * &MultiPoly::var(name).pow(e);
            }
        }
        let deficit = d - mono.total();
        if deficit > 0 {
            term = &term * &wv.pow(deficit as u32);
        }
        out = &out + &term;
    }
    out
}

/// The affine chart at infinity reached by setting the named original
/// variable to 1; the remaining projective coordinate is renamed so the
/// result is a curve in (x, y) again. In the returned chart the original
/// line at infinity is x = 0 (when slicing along "x", the old y keeps its
/// name) or y = 0 (when slicing along "y").
pub fn infinity_chart(curve: &ImplicitCurve, set_to_one: &str) -> Result<ImplicitCurve> {
    if set_to_one != "x" && set_to_one != "y" {
        return Err(Error::Invalid("chart must fix x or y to 1".into()));
    }
    let h = homogenize(curve, "w");
    let sliced = h.eval_partial(&[(set_to_one, int(1))]);
    let renamed = if set_to_one == "x" {
        sliced.rename_var("w", "x")
    } else {
        sliced.rename_var("w", "y")
    };
    ImplicitCurve::new(renamed)
}

// ---------------------------------------------------------------------------
// discriminant-is-a-cube
// ---------------------------------------------------------------------------

/// For a curve cubic in y: the quartic Q with disc_y proportional to Q^3,
/// when the square-free decomposition has exactly that shape.
pub fn discriminant_is_cube(curve: &ImplicitCurve) -> Result<Option<MultiPoly>> {
    if curve.f.degree_in("y") != 3 {
        return Err(Error::Invalid(format!(
            "expected a curve cubic in y, got degree {}",
            curve.f.degree_in("y")
        )));
    }
    let disc = discriminant_wrt(&curve.f, "y")?;
    if disc.is_constant() {
        return Ok(None);
    }
    let (_, parts) = univar::square_free_decomposition(&disc, "x")?;
    if parts.len() == 1 && parts[0].multiplicity == 3 && parts[0].factor.degree_in("x") == 4 {
        Ok(Some(parts[0].factor.clone()))
    } else {
        Ok(None)
    }
}

// ---------------------------------------------------------------------------
// cross-ratio
// ---------------------------------------------------------------------------

/// A point of the complex projective line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ProjPoint {
    Finite(Complex64),
    Infinity,
}

impl From<Complex64> for ProjPoint {
    fn from(z: Complex64) -> Self {
        ProjPoint::Finite(z)
    }
}

impl From<f64> for ProjPoint {
    fn from(v: f64) -> Self {
        ProjPoint::Finite(Complex64::new(v, 0.0))
    }
}

/// (z1-z3)(z2-z4) / ((z2-z3)(z1-z4)), with the usual limits at infinity.
pub fn cross_ratio(z1: ProjPoint, z2: ProjPoint, z3: ProjPoint, z4: ProjPoint) -> Result<Complex64> {
    let pts = [z1, z2, z3, z4];
    for i in 0..4 {
        for j in i + 1..4 {
            if pts[i] == pts[j] {
                return Err(Error::CoincidentPoints);
            }
        }
    }
    use ProjPoint::*;
    Ok(match (z1, z2, z3, z4) {
        (Infinity, Finite(b), Finite(c), Finite(d)) => (b - d) / (b - c),
        (Finite(a), Infinity, Finite(c), Finite(d)) => (a - c) / (a - d),
        (Finite(a), Finite(b), Infinity, Finite(d)) => (b - d) / (a - d),
        (Finite(a), Finite(b), Finite(c), Infinity) => (a - c) / (b - c),
        (Finite(a), Finite(b), Finite(c), Finite(d)) => ((a - c) * (b - d)) / ((b - c) * (a - d)),
        _ => unreachable!("coincident infinities already rejected"),
    })
}

/// True when the cross-ratio of the four roots lies within tol of the
/// Moebius orbit of exp(i pi / 3); for that value the six-element orbit
/// collapses to the conjugate pair, so one ordering suffices.
pub fn equianharmonic_check(roots: &[Complex64], tol: f64) -> Result<bool> {
    if roots.len() != 4 {
        return Err(Error::Invalid(format!(
            "need exactly 4 roots, got {}",
            roots.len()
        )));
    }
    let mut sorted = roots.to_vec();
    sorted.sort_by(|a, b| (a.im, a.re).partial_cmp(&(b.im, b.re)).unwrap());
    let rho = cross_ratio(
        sorted[0].into(),
        sorted[1].into(),
        sorted[2].into(),
        sorted[3].into(),
    )?;
    let eps = Complex64::from_polar(1.0, std::f64::consts::PI / 3.0);
    Ok((rho - eps).norm() <= tol || (rho - eps.conj()).norm() <= tol)
}

/// Convenience: the equianharmonic test applied to the roots of a quartic,
/// with multiple roots repeated so coincidences surface as errors.
pub fn quartic_is_equianharmonic(q: &MultiPoly, tol: f64) -> Result<bool> {
    let rs: Vec<ComplexRoot> = roots::complex_roots(q)?;
    let mut values = Vec::new();
    for r in &rs {
        for _ in 0..r.multiplicity {
            values.push(r.value);
        }
    }
    equianharmonic_check(&values, tol)
}

// ---------------------------------------------------------------------------
// binary sextic forms
// ---------------------------------------------------------------------------

/// Coefficients (a1..a7) in the binomially weighted basis
/// a1 x^6 + 6 a2 x^5 + 15 a3 x^4 + 20 a4 x^3 + 15 a5 x^2 + 6 a6 x + a7.
#[derive(Clone, Debug, PartialEq)]
pub struct SexticForm {
    pub a: [Scalar; 7],
}

const WEIGHTS: [i64; 7] = [1, 6, 15, 20, 15, 6, 1];

impl SexticForm {
    pub fn new(a: [Scalar; 7]) -> Self {
        SexticForm { a }
    }

    /// Reads the weighted coefficients off a polynomial of degree <= 6.
    pub fn from_poly(p: &MultiPoly, var: &str) -> Result<Self> {
        if p.degree_in(var) > 6 || p.vars().iter().any(|v| v != var) {
            return Err(Error::Invalid(format!(
                "not a univariate polynomial of degree <= 6 in {var}"
            )));
        }
        let dense = univar::to_dense(p, var)?;
        let mut a = std::array::from_fn(|_| Scalar::zero());
        for (k, w) in WEIGHTS.iter().enumerate() {
            // a_{k+1} multiplies x^(6-k)
            let c = dense.get(6 - k).cloned().unwrap_or_else(Scalar::zero);
            a[k] = &c / &int(*w);
        }
        Ok(SexticForm::new(a))
    }

    pub fn to_poly(&self, var: &str) -> MultiPoly {
        let x = MultiPoly::var(var);
        let mut out = MultiPoly::zero();
        for (k, w) in WEIGHTS.iter().enumerate() {
            let c = &self.a[k] * &int(*w);
            out = &out + &x.pow((6 - k) as u32).scale(&c);
        }
        out
    }
}

/// a1 a7 - 6 a2 a6 + 15 a3 a5 - 10 a4^2.
pub fn quadratic_invariant(s: &SexticForm) -> Scalar {
    let a = &s.a;
    &(&(&a[0] * &a[6]) - &(&int(6) * &(&a[1] * &a[5])))
        + &(&(&int(15) * &(&a[2] * &a[4])) - &(&int(10) * &(&a[3] * &a[3])))
}

/// The induced substitution x -> (a x + b)/(c x + d): returns the form of
/// (c x + d)^6 f((a x + b)/(c x + d)). The quadratic invariant rescales by
/// (ad - bc)^6 under this action.
pub fn moebius_transform(
    s: &SexticForm,
    a: &Scalar,
    b: &Scalar,
    c: &Scalar,
    d: &Scalar,
) -> SexticForm {
    let x = MultiPoly::var("x");
    let num = &x.scale(a) + &MultiPoly::constant(b.clone());
    let den = &x.scale(c) + &MultiPoly::constant(d.clone());
    let f = s.to_poly("x");
    let dense = univar::to_dense(&f, "x").expect("sextic form is univariate");
    let mut out = MultiPoly::zero();
    for (k, ck) in dense.iter().enumerate() {
        if ck.is_zero() {
            continue;
        }
        let term = &num.pow(k as u32) * &den.pow((6 - k) as u32);
        out = &out + &term.scale(ck);
    }
    SexticForm::from_poly(&out, "x").expect("transformed form has degree <= 6")
}
