//! Rational functions of one parameter, stored fully reduced.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;
use crate::univar;

/// num/den with gcd(num, den) = 1 and monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut vars: Vec<String> = num.vars().iter().chain(den.vars().iter()).cloned().collect();
        vars.sort();
        vars.dedup();
        if vars.len() > 1 {
            return Err(Error::Invalid(format!(
                "rational function must be univariate, got variables {vars:?}"
            )));
        }
        Ok(Self::reduced(num, den, vars.first().map(|v| v.as_str())))
    }

    fn reduced(num: MultiPoly, den: MultiPoly, var: Option<&str>) -> Self {
        if num.is_zero() {
            return RationalFunction { num, den: MultiPoly::one() };
        }
        if let Some(c) = den.constant_value() {
            return RationalFunction { num: num.scale(&c.recip()), den: MultiPoly::one() };
        }
        let v = var.expect("nonconstant denominator must have a variable");
        let dn = univar::to_dense(&num, v).unwrap();
        let dd = univar::to_dense(&den, v).unwrap();
        let g = univar::gcd(&dn, &dd);
        let (num, den) = if univar::deg(&g) == Some(0) {
            (num, den)
        } else {
            (
                univar::from_dense(v, &univar::exact_div(&dn, &g).unwrap()),
                univar::from_dense(v, &univar::exact_div(&dd, &g).unwrap()),
            )
        };
        // monic denominator
        let lc = den.leading_coeff_in(v).constant_value().unwrap();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RationalFunction { num: p, den: MultiPoly::one() }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn var(name: &str) -> Self {
        Self::from_poly(MultiPoly::var(name))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn parameter(&self) -> Option<&str> {
        self.num
            .vars()
            .first()
            .or_else(|| self.den.vars().first())
            .map(|s| s.as_str())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn derivative(&self) -> Self {
        let Some(v) = self.parameter().map(str::to_owned) else {
            return Self::from_poly(MultiPoly::zero());
        };
        let n = &(&self.num.derivative(&v) * &self.den) - &(&self.num * &self.den.derivative(&v));
        let d = &self.den * &self.den;
        Self::reduced(n, d, Some(&v))
    }

    pub fn pow(&self, e: u32) -> Self {
        // num and den are coprime, so no cross reduction appears
        RationalFunction { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn eval_scalar(&self, t: &Scalar) -> Result<Scalar> {
        let v = self.parameter().unwrap_or("t");
        let d = self.den.eval_scalar(&[(v, t.clone())])?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval_scalar(&[(v, t.clone())])? / d)
    }

    pub fn eval_f64(&self, t: f64) -> Result<f64> {
        let v = self.parameter().unwrap_or("t");
        Ok(self.num.eval_f64(&[(v, t)])? / self.den.eval_f64(&[(v, t)])?)
    }

    /// Renames the parameter (used to present curves uniformly in t).
    pub fn rename(&self, to: &str) -> Self {
        match self.parameter().map(str::to_owned) {
            None => self.clone(),
            Some(v) => RationalFunction {
                num: self.num.rename_var(&v, to),
                den: self.den.rename_var(&v, to),
            },
        }
    }
}

impl std::ops::Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let var = self.parameter().or_else(|| rhs.parameter()).map(str::to_owned);
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let d = &self.den * &rhs.den;
        RationalFunction::reduced(n, d, var.as_deref())
    }
}

impl std::ops::Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        let var = self.parameter().or_else(|| rhs.parameter()).map(str::to_owned);
        RationalFunction::reduced(&self.num * &rhs.num, &self.den * &rhs.den, var.as_deref())
    }
}

impl std::ops::Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        let var = self.parameter().or_else(|| rhs.parameter()).map(str::to_owned);
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RationalFunction::reduced(&self.num * &rhs.den, &self.den * &rhs.num, var.as_deref())
    }
}

impl std::ops::Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.constant_value().map(|c| c.is_one()).unwrap_or(false) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses "num" or "(num)/(den)" or "num/den" where num, den are polynomial
/// expressions in one variable; plain `a/b` with constant b is also fine.
pub fn parse_ratfunc(text: &str) -> Result<RationalFunction> {
    // try as a plain polynomial expression first (handles constants and x/2)
    if let Ok(p) = text.parse::<MultiPoly>() {
        return RationalFunction::new(p, MultiPoly::one());
    }
    // split at the top-level '/'
    let bytes = text.as_bytes();
    let mut depth = 0i32;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'/' if depth == 0 => {
                let num: MultiPoly = text[..i].parse()?;
                let den: MultiPoly = text[i + 1..].parse()?;
                return RationalFunction::new(num, den);
            }
            _ => {}
        }
    }
    Err(Error::Parse(format!("cannot parse rational function {text:?}")))
}

/// Substitutes rational functions for every variable of `f` and clears
/// denominators; the result is the numerator polynomial, identically zero
/// iff `f` vanishes on the substituted locus.
pub fn substitute_rational(f: &MultiPoly, bindings: &[(&str, &RationalFunction)]) -> Result<MultiPoly> {
    for v in f.vars() {
        if !bindings.iter().any(|(n, _)| n == v) {
            return Err(Error::UnboundVariable(v.clone()));
        }
    }
    // Horner over the last variable keeps the work modest for our sizes;
    // plain term-by-term accumulation is simpler and fast enough.
    let mut acc = RationalFunction::from_poly(MultiPoly::zero());
    for (mono, coeff) in f.terms() {
        let mut term = RationalFunction::constant(coeff.clone());
        for (i, &e) in mono.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let (_, rf) = bindings
                .iter()
                .find(|(n, _)| *n == f.vars()[i])
                .expect("checked above");
            term = &term * &rf.pow(e);
        }
        acc = &acc + &term;
    }
    Ok(acc.num)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn rf(n: &str, d: &str) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn reduction_and_monic_denominator() {
        let f = rf("t^2 - 1", "2*t + 2");
        assert_eq!(f.num(), &p("1/2*t - 1/2"));
        assert_eq!(f.den(), &p("1"));
        let g = rf("t", "2*t^2 + 2");
        assert_eq!(g.den(), &p("t^2 + 1"));
        assert_eq!(g.num(), &p("1/2*t"));
    }

    #[test]
    fn arithmetic() {
        let a = rf("1", "t");
        let b = rf("t", "t + 1");
        assert_eq!(&a * &b, rf("1", "t + 1"));
        assert_eq!(&a + &a, rf("2", "t"));
        assert_eq!((&a / &a).num(), &p("1"));
        assert_eq!(&(&a - &a), &RationalFunction::from_poly(p("0")));
    }

    #[test]
    fn derivative_quotient_rule() {
        let f = rf("1", "t^2 + 1");
        assert_eq!(f.derivative(), rf("-2*t", "t^4 + 2*t^2 + 1"));
        let c = RationalFunction::constant(int(5));
        assert!(c.derivative().is_zero());
    }

    #[test]
    fn eval() {
        let f = rf("t^2 - 1", "t + 2");
        assert_eq!(f.eval_scalar(&int(2)).unwrap(), ratio(3, 4));
        assert!(rf("1", "t").eval_scalar(&int(0)).is_err());
        assert!((f.eval_f64(2.0).unwrap() - 0.75).abs() < 1e-15);
    }

    #[test]
    fn substitution_clears_denominators() {
        // y - x^2 with x <- t, y <- t^2
        let f = p("y - x^2");
        let x = RationalFunction::var("t");
        let y = rf("t^2", "1");
        let r = substitute_rational(&f, &[("x", &x), ("y", &y)]).unwrap();
        assert!(r.is_zero());

        // the seed curve relation on its parametrization
        let f = p("y^2 + x*(x - 1)^3");
        let x = rf("1", "t^2 + 1");
        let y = rf("-t^3", "(t^2 + 1)^2");
        let r = substitute_rational(&f, &[("x", &x), ("y", &y)]).unwrap();
        assert!(r.is_zero());

        assert!(substitute_rational(&p("x + w"), &[("x", &x)]).is_err());
    }

    #[test]
    fn multiplicative_substitution_identity() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let x = rf("t - 1", "t^2 + 1");
        let y = rf("3*t", "t - 2");
        for _ in 0..10 {
            let rnd = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut acc = MultiPoly::zero();
                for _ in 0..3 {
                    let c = int(rng.random_range(-4..5));
                    let ex = rng.random_range(0..3);
                    let ey = rng.random_range(0..2);
                    acc = &acc + &MultiPoly::term(c, &[("x", ex), ("y", ey)]);
                }
                acc
            };
            let (f, g) = (rnd(&mut rng), rnd(&mut rng));
            let bind: [(&str, &RationalFunction); 2] = [("x", &x), ("y", &y)];
            let sf = substitute_rational(&f, &bind).unwrap();
            let sg = substitute_rational(&g, &bind).unwrap();
            let sfg = substitute_rational(&(&f * &g), &bind).unwrap();
            // cross-multiplied identity: sub(fg) * den-factor == sub(f)*sub(g)
            // realized here by comparing the reduced rational functions
            let lhs = RationalFunction::new(sfg, MultiPoly::one()).unwrap();
            let rhs = RationalFunction::new(&sf * &sg, MultiPoly::one()).unwrap();
            let (a, b) = (lhs.num(), rhs.num());
            // both are polynomials; they agree up to the cleared denominator factor
            if !a.is_zero() && !b.is_zero() {
                let q1 = a.exact_div(b).or_else(|_| b.exact_div(a));
                assert!(q1.is_ok(), "sub(fg) and sub(f)sub(g) differ by a non-monomial");
            } else {
                assert_eq!(a.is_zero(), b.is_zero());
            }
        }
    }
}
