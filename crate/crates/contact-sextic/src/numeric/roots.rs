//! Complex roots of univariate polynomials: exact square-free deflation over
//! the rationals, then Aberth-Ehrlich simultaneous iteration on each
//! square-free factor. Multiplicities come from the deflation, so the
//! iteration only ever sees simple roots.

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::scalar::to_f64;
use crate::univar;

#[derive(Clone, Copy, Debug)]
pub struct ComplexRoot {
    pub value: Complex64,
    pub multiplicity: u32,
}

/// All complex roots of f with multiplicities.
pub fn complex_roots(f: &MultiPoly) -> Result<Vec<ComplexRoot>> {
    let var = f
        .vars()
        .first()
        .ok_or_else(|| Error::ZeroDegree("constant polynomial has no roots".into()))?
        .clone();
    let (_, parts) = univar::square_free_decomposition(f, &var)?;
    let mut out = Vec::new();
    for part in &parts {
        let dense = univar::to_dense(&part.factor, &var)?;
        let coeffs: Vec<f64> = dense.iter().map(to_f64).collect();
        for value in roots_of_square_free(&coeffs) {
            out.push(ComplexRoot { value, multiplicity: part.multiplicity as u32 });
        }
    }
    out.sort_by(|a, b| {
        (a.value.im, a.value.re)
            .partial_cmp(&(b.value.im, b.value.re))
            .unwrap()
    });
    Ok(out)
}

/// Real roots with multiplicities. The real count is exact (Sturm chains on
/// the square-free part); the values are the complex roots with smallest
/// imaginary part, projected onto the axis.
pub fn real_roots(f: &MultiPoly) -> Result<Vec<(f64, u32)>> {
    let var = f
        .vars()
        .first()
        .ok_or_else(|| Error::ZeroDegree("constant polynomial has no roots".into()))?
        .clone();
    let mut all = complex_roots(f)?;
    // distinct real roots, counted exactly
    let want = univar::count_real_roots(f, &var)?;
    all.sort_by(|a, b| {
        a.value
            .im
            .abs()
            .partial_cmp(&b.value.im.abs())
            .unwrap()
            .then(a.value.re.partial_cmp(&b.value.re).unwrap())
    });
    let mut out: Vec<(f64, u32)> = all
        .iter()
        .take(want)
        .map(|r| (r.value.re, r.multiplicity))
        .collect();
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    Ok(out)
}

/// Roots of a square-free polynomial given by dense real coefficients,
/// lowest first.
pub fn roots_of_square_free(coeffs: &[f64]) -> Vec<Complex64> {
    let mut c: Vec<f64> = coeffs.to_vec();
    while c.last().is_some_and(|v| *v == 0.0) {
        c.pop();
    }
    let n = c.len().saturating_sub(1);
    match n {
        0 => Vec::new(),
        1 => vec![Complex64::new(-c[0] / c[1], 0.0)],
        2 => quadratic_roots(c[0], c[1], c[2]),
        _ => aberth(&c),
    }
}

fn quadratic_roots(c0: f64, c1: f64, c2: f64) -> Vec<Complex64> {
    let disc = c1 * c1 - 4.0 * c2 * c0;
    if disc >= 0.0 {
        let sq = disc.sqrt();
        // the numerically stable branch first
        let q = -0.5 * (c1 + c1.signum() * sq);
        let r1 = if q != 0.0 { c0 / q } else { 0.0 };
        let r2 = if c2 != 0.0 { q / c2 } else { 0.0 };
        vec![Complex64::new(r1, 0.0), Complex64::new(r2, 0.0)]
    } else {
        let re = -c1 / (2.0 * c2);
        let im = (-disc).sqrt() / (2.0 * c2);
        vec![Complex64::new(re, im), Complex64::new(re, -im)]
    }
}

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for k in (0..c.len()).rev() {
        dp = dp * z + p;
        p = p * z + c[k];
    }
    (p, dp)
}

/// Aberth-Ehrlich iteration from points on a circle just outside the
/// Cauchy root bound.
fn aberth(c: &[f64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let lead = c[n];
    let radius = 1.0
        + c[..n]
            .iter()
            .map(|v| (v / lead).abs())
            .fold(0.0_f64, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            radius * Complex64::new(theta.cos(), theta.sin())
        })
        .collect();
    for _ in 0..400 {
        let mut worst = 0.0_f64;
        for k in 0..n {
            let (p, dp) = horner(c, z[k]);
            if p.is_zero() {
                continue;
            }
            let w = p / dp;
            let mut sum = Complex64::zero();
            for (j, zj) in z.iter().enumerate() {
                if j != k {
                    sum += (z[k] - zj).finv();
                }
            }
            let corr = w / (Complex64::new(1.0, 0.0) - w * sum);
            z[k] -= corr;
            let rel = corr.norm() / (1.0 + z[k].norm());
            worst = worst.max(rel);
        }
        if worst < 1e-15 {
            break;
        }
    }
    // conjugate symmetry cleanup: snap near-real roots onto the axis
    for zk in z.iter_mut() {
        if zk.im.abs() < 1e-12 * (1.0 + zk.re.abs()) {
            let candidate = Complex64::new(zk.re, 0.0);
            let (p_on, _) = horner(c, candidate);
            let (p_off, _) = horner(c, *zk);
            if p_on.norm() <= 10.0 * p_off.norm() {
                *zk = candidate;
            }
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-10
    }

    #[test]
    fn quadratic_examples() {
        let r = complex_roots(&poly("x^2 + 1")).unwrap();
        assert_eq!(r.len(), 2);
        assert!(close(r[0].value, Complex64::new(0.0, -1.0)));
        assert!(close(r[1].value, Complex64::new(0.0, 1.0)));
    }

    #[test]
    fn multiple_roots_are_exact_by_deflation() {
        let r = complex_roots(&poly("(x - 1)^3")).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].multiplicity, 3);
        assert!(close(r[0].value, Complex64::new(1.0, 0.0)));
    }

    #[test]
    fn quartic_from_the_canonical_discriminant() {
        // -3x^4 - 6x^2 + 1: the real pair is at +-sqrt(2/sqrt(3) - 1)
        let r = complex_roots(&poly("-3x^4 - 6x^2 + 1")).unwrap();
        assert_eq!(r.len(), 4);
        let real: Vec<f64> = r
            .iter()
            .filter(|c| c.value.im == 0.0)
            .map(|c| c.value.re)
            .collect();
        assert_eq!(real.len(), 2);
        let expected = (2.0 / 3.0_f64.sqrt() - 1.0).sqrt();
        assert!((real[1] - expected).abs() < 1e-12);
        assert!((real[0] + expected).abs() < 1e-12);
        let imag: Vec<f64> = r
            .iter()
            .filter(|c| c.value.im != 0.0)
            .map(|c| c.value.im)
            .collect();
        let expected_im = (2.0 / 3.0_f64.sqrt() + 1.0).sqrt();
        assert!((imag[1] - expected_im).abs() < 1e-12);
    }

    #[test]
    fn residual_bound_on_a_stiff_product() {
        let f = poly("(x - 1)(x - 2)(x - 3)(x - 4)(x^2 + x + 7)");
        let var = "x";
        let dense = univar::to_dense(&f, var).unwrap();
        let coeffs: Vec<f64> = dense.iter().map(to_f64).collect();
        let scale: f64 = coeffs.iter().map(|v| v.abs()).fold(0.0, f64::max);
        for r in complex_roots(&f).unwrap() {
            let (p, _) = horner(&coeffs, r.value);
            let bound = 1e-12 * scale * (1.0 + r.value.norm()).powi((coeffs.len() - 1) as i32);
            assert!(p.norm() <= bound, "residual {} at {}", p.norm(), r.value);
        }
    }

    #[test]
    fn real_root_extraction_matches_sturm() {
        let f = poly("x^5 - x - 1");
        let rr = real_roots(&f).unwrap();
        assert_eq!(rr.len(), 1);
        assert!((rr[0].0 - 1.1673039782614187).abs() < 1e-12);
        let g = poly("4x^4 - 4x^3 + 18x^2 - 27x");
        let rg = real_roots(&g).unwrap();
        assert_eq!(rg.len(), 2);
        assert!(rg[0].0.abs() < 1e-14);
        assert!((rg[1].0 - 1.3550974360912628).abs() < 1e-10);
    }
}
