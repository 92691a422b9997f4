//! Sylvester resultants and discriminants over the polynomial ring.
//!
//! The determinant is computed by fraction-free Bareiss elimination with row
//! pivoting; every division below is exact, which keeps intermediate entries
//! as small as theory allows (they are minors of the original matrix).



use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;

/// Sylvester matrix of u and v in `var`: deg(v) rows of u-coefficients
/// (highest degree first) above deg(u) rows of v-coefficients.
pub fn sylvester_matrix(u: &MultiPoly, v: &MultiPoly, var: &str) -> Result<Vec<Vec<MultiPoly>>> {
    let m = u.degree_in(var) as usize;
    let n = v.degree_in(var) as usize;
    if m == 0 || u.is_zero() {
        return Err(Error::ZeroDegree(var.into()));
    }
    if n == 0 || v.is_zero() {
        return Err(Error::ZeroDegree(var.into()));
    }
    let uc = u.coeffs_in(var); // ascending
    let vc = v.coeffs_in(var);
    let size = m + n;
    let mut mat = vec![vec![MultiPoly::zero(); size]; size];
    for row in 0..n {
        for k in 0..=m {
            mat[row][row + k] = uc[m - k].clone();
        }
    }
    for row in 0..m {
        for k in 0..=n {
            mat[n + row][row + k] = vc[n - k].clone();
        }
    }
    Ok(mat)
}

/// Determinant by fraction-free Bareiss elimination.
pub fn bareiss_determinant(mut m: Vec<Vec<MultiPoly>>) -> Result<MultiPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    let mut sign = 1i64;
    let mut prev = MultiPoly::one();
    for k in 0..n {
        // pivot
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Ok(MultiPoly::zero());
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        if k == n - 1 {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.exact_div(&prev)?;
            }
            m[i][k] = MultiPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign < 0 { -&det } else { det })
}

/// Resultant of u and v with respect to `var`.
pub fn resultant(u: &MultiPoly, v: &MultiPoly, var: &str) -> Result<MultiPoly> {
    bareiss_determinant(sylvester_matrix(u, v, var)?)
}

/// (-1)^(d(d-1)/2) * Res(f, df/dvar) / lc, so disc(y^3+p y+q) = -4p^3 - 27q^2.
pub fn discriminant_wrt(f: &MultiPoly, var: &str) -> Result<MultiPoly> {
    let d = f.degree_in(var) as u64;
    if d < 2 {
        return Err(Error::ZeroDegree(var.into()));
    }
    let lc = f.leading_coeff_in(var);
    if lc.is_zero() {
        return Err(Error::ZeroLeadingCoefficient(var.into()));
    }
    let fp = f.derivative(var);
    let res = resultant(f, &fp, var)?;
    let q = res.exact_div(&lc)?;
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -&q } else { q })
}

/// Scalar resultant when both inputs are univariate with rational roots in
/// play; kept generic by reusing the polynomial path.
pub fn resultant_scalar(u: &MultiPoly, v: &MultiPoly, var: &str) -> Result<Scalar> {
    let r = resultant(u, v, var)?;
    r.constant_value()
        .ok_or_else(|| Error::Invalid("resultant is not a scalar".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn resultant_linear_pair() {
        // Res_z(z - a, z - b) = a - b (2x2 Sylvester determinant)
        let r = resultant(&p("z - a"), &p("z - b"), "z").unwrap();
        assert_eq!(r, p("a - b"));
    }

    #[test]
    fn resultant_direct_3x3() {
        // Res_z(z^2, z + 1) = 1
        let r = resultant(&p("z^2"), &p("z + 1"), "z").unwrap();
        assert_eq!(r, p("1"));
    }

    #[test]
    fn degree_zero_inputs_rejected() {
        assert!(resultant(&p("x"), &p("z"), "z").is_err());
        assert!(resultant(&p("z"), &p("3"), "z").is_err());
    }

    #[test]
    fn swap_antisymmetry_randomized() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..15 {
            let rnd = |rng: &mut rand_chacha::ChaCha8Rng, d: u32| {
                let mut acc = MultiPoly::term(int(rng.random_range(1..5)), &[("z", d)]);
                for e in 0..d {
                    let c = int(rng.random_range(-4..5));
                    let k = rng.random_range(0..2);
                    acc = &acc + &MultiPoly::term(c, &[("z", e), ("x", k)]);
                }
                acc
            };
            let dm = rng.random_range(1..4u32);
            let dn = rng.random_range(1..4u32);
            let u = rnd(&mut rng, dm);
            let v = rnd(&mut rng, dn);
            let ruv = resultant(&u, &v, "z").unwrap();
            let rvu = resultant(&v, &u, "z").unwrap();
            let expect = if (dm * dn) % 2 == 1 { -&ruv } else { ruv.clone() };
            assert_eq!(rvu, expect);
        }
    }

    #[test]
    fn common_root_forces_zero() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..10 {
            let r = int(rng.random_range(-5..6));
            let root = &p("z") - &MultiPoly::constant(r);
            let a = rng.random_range(-3..4);
            let b = rng.random_range(-3..4);
            let u = &root * &(&p("z^2") + &MultiPoly::int(a));
            let v = &root * &(&p("z") + &MultiPoly::int(b));
            let res = resultant(&u, &v, "z").unwrap();
            assert!(res.is_zero());
        }
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant_wrt(&p("y^2 + c"), "y").unwrap(), p("-4*c"));
        assert_eq!(
            discriminant_wrt(&p("y^3 + p*y + q"), "y").unwrap(),
            p("-4*p^3 - 27*q^2")
        );
        assert!(discriminant_wrt(&p("y + 1"), "y").is_err());
    }

    #[test]
    fn discriminant_of_canonical_cubic_matches_expansion_oracle() {
        // disc(y^3 + 3A y + 12B) via the generic depressed-cubic formula
        let a = p("3*(3*x^4 - 6*x^2 - 1)");
        let b = p("12*x*(3*x^4 + 1)");
        let oracle = &(&a.pow(3)).scale(&int(-4)) - &(&b * &b).scale(&int(27));
        let canform = p("y^3 + 3*(3*x^4 - 6*x^2 - 1)*y + 12*x*(3*x^4 + 1)");
        let disc = discriminant_wrt(&canform, "y").unwrap();
        assert_eq!(disc, oracle);
        // and the factored closed form
        assert_eq!(disc, p("108*(-3*x^4 - 6*x^2 + 1)^3"));
    }
}
