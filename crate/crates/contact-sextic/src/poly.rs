//! Sparse multivariate polynomials over exact rationals.
//!
//! Terms live in a `BTreeMap` keyed by graded-lexicographic monomials, so a
//! polynomial has exactly one representation: no zero coefficients, variables
//! sorted in the fixed global order t < x < y < z < (rest by name), and no
//! unused variables. Equality of canonical forms is equality of polynomials,
//! which is what turns algebraic identities into plain `assert_eq!`s.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Global variable order: t < x < y < z < everything else alphabetically.
pub fn var_cmp(a: &str, b: &str) -> Ordering {
    fn rank(v: &str) -> u8 {
        match v {
            "t" => 0,
            "x" => 1,
            "y" => 2,
            "z" => 3,
            _ => 4,
        }
    }
    rank(a).cmp(&rank(b)).then_with(|| a.cmp(b))
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Mono, Scalar>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { vars: vec![], terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono(vec![]), c);
        }
        MultiPoly { vars: vec![], terms }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(scalar::int(n))
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Mono(vec![1]), Scalar::one());
        MultiPoly { vars: vec![name.to_string()], terms }
    }

    /// c * v1^e1 * v2^e2 * ... with the vars given in any order.
    pub fn term(c: Scalar, powers: &[(&str, u32)]) -> Self {
        let mut p = Self::constant(c);
        for (v, e) in powers {
            for _ in 0..*e {
                p = &p * &Self::var(v);
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn constant_value(&self) -> Option<Scalar> {
        if self.is_zero() {
            Some(Scalar::zero())
        } else if self.is_constant() {
            self.terms.get(&Mono(vec![])).cloned()
        } else {
            None
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Drops zero coefficients and unused variable slots.
    fn canonicalize(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        if self.terms.is_empty() {
            return Self::zero();
        }
        let n = self.vars.len();
        let mut used = vec![false; n];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        if used.iter().all(|&u| u) {
            return self;
        }
        let keep: Vec<usize> = (0..n).filter(|&i| used[i]).collect();
        let vars = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let terms = self
            .terms
            .into_iter()
            .map(|(m, c)| (Mono(keep.iter().map(|&i| m.0[i]).collect()), c))
            .collect();
        MultiPoly { vars, terms }
    }

    /// Re-expresses both polynomials over the union of their variables.
    fn align(&self, other: &Self) -> (Vec<String>, BTreeMap<Mono, Scalar>, BTreeMap<Mono, Scalar>) {
        if self.vars == other.vars {
            return (self.vars.clone(), self.terms.clone(), other.terms.clone());
        }
        let mut union: Vec<String> = self.vars.clone();
        for v in &other.vars {
            if !union.contains(v) {
                union.push(v.clone());
            }
        }
        union.sort_by(|a, b| var_cmp(a, b));
        let a = remap(&self.vars, &union, &self.terms);
        let b = remap(&other.vars, &union, &other.terms);
        (union, a, b)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect(),
        }
        .canonicalize()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self.map_coeffs(|v| v * c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, var: &str) -> Self {
        let Some(idx) = self.vars.iter().position(|v| v == var) else {
            return Self::zero();
        };
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut v = m.0.clone();
            v[idx] = e - 1;
            let mono = Mono(v);
            let add = c * scalar::int(e as i64);
            insert_add(&mut terms, mono, add);
        }
        MultiPoly { vars: self.vars.clone(), terms }.canonicalize()
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.vars.iter().position(|v| v == var) {
            None => 0,
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
        }
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(|m| m.total()).max().unwrap_or(0)
    }

    pub fn leading_term(&self) -> Option<(Mono, Scalar, &[String])> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone(), self.vars.as_slice()))
    }

    /// Coefficients of `var^0, var^1, ...` as polynomials in the other variables.
    pub fn coeffs_in(&self, var: &str) -> Vec<MultiPoly> {
        let Some(idx) = self.vars.iter().position(|v| v == var) else {
            return vec![self.clone()];
        };
        let deg = self.degree_in(var) as usize;
        let rest: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, v)| v.clone())
            .collect();
        let mut out: Vec<BTreeMap<Mono, Scalar>> = vec![BTreeMap::new(); deg + 1];
        for (m, c) in &self.terms {
            let k = m.0[idx] as usize;
            let rm: Vec<u32> = m
                .0
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != idx)
                .map(|(_, &e)| e)
                .collect();
            out[k].insert(Mono(rm), c.clone());
        }
        out.into_iter()
            .map(|terms| MultiPoly { vars: rest.clone(), terms }.canonicalize())
            .collect()
    }

    /// Rebuilds sum coeffs[k] * var^k.
    pub fn from_coeffs_in(var: &str, coeffs: &[MultiPoly]) -> Self {
        let v = Self::var(var);
        let mut acc = Self::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * &v) + c;
        }
        acc
    }

    pub fn leading_coeff_in(&self, var: &str) -> MultiPoly {
        let cs = self.coeffs_in(var);
        cs.last().cloned().unwrap_or_else(Self::zero)
    }

    /// Polynomial composition: substitutes `g` for `var`.
    pub fn subst_poly(&self, var: &str, g: &MultiPoly) -> Self {
        if !self.vars.iter().any(|v| v == var) {
            return self.clone();
        }
        let coeffs = self.coeffs_in(var);
        let mut acc = Self::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * g) + c;
        }
        acc
    }

    /// Binds a subset of variables to scalars.
    pub fn eval_partial(&self, bindings: &[(&str, Scalar)]) -> Self {
        let mut p = self.clone();
        for (v, s) in bindings {
            p = p.subst_poly(v, &Self::constant(s.clone()));
        }
        p
    }

    /// Full evaluation; every variable must be bound.
    pub fn eval_scalar(&self, bindings: &[(&str, Scalar)]) -> Result<Scalar> {
        let p = self.eval_partial(bindings);
        p.constant_value()
            .ok_or_else(|| Error::UnboundVariable(p.vars[0].clone()))
    }

    pub fn eval_f64(&self, bindings: &[(&str, f64)]) -> Result<f64> {
        let mut acc = 0.0;
        let vals: Vec<f64> = self
            .vars
            .iter()
            .map(|v| {
                bindings
                    .iter()
                    .find(|(n, _)| n == v)
                    .map(|(_, x)| *x)
                    .ok_or_else(|| Error::UnboundVariable(v.clone()))
            })
            .collect::<Result<_>>()?;
        for (m, c) in &self.terms {
            let mut t = scalar::to_f64(c);
            for (i, &e) in m.0.iter().enumerate() {
                t *= vals[i].powi(e as i32);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Exact division; errors unless `g` divides `self` exactly.
    pub fn exact_div(&self, g: &MultiPoly) -> Result<MultiPoly> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(c) = g.constant_value() {
            return Ok(self.scale(&c.recip()));
        }
        let (vars, fa, ga) = self.align(g);
        let mut rem = fa;
        let gl = ga.iter().next_back().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut quo: BTreeMap<Mono, Scalar> = BTreeMap::new();
        while let Some((rm, rc)) = rem.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            let mut q = Vec::with_capacity(rm.0.len());
            for (a, b) in rm.0.iter().zip(gl.0 .0.iter()) {
                if a < b {
                    return Err(Error::ExactDivision(format!(
                        "{} does not divide {}",
                        g, self
                    )));
                }
                q.push(a - b);
            }
            let qc = &rc / &gl.1;
            // rem -= (qc * x^q) * g
            for (m, c) in &ga {
                let mono = Mono(m.0.iter().zip(q.iter()).map(|(a, b)| a + b).collect());
                insert_add(&mut rem, mono, -(c * &qc));
            }
            rem.retain(|_, c| !c.is_zero());
            insert_add(&mut quo, Mono(q), qc);
        }
        Ok(MultiPoly { vars, terms: quo }.canonicalize())
    }

    /// Signed content: gcd of coefficients carrying the sign of the leading term.
    pub fn content(&self) -> Scalar {
        use num_integer::Integer;
        let mut num = num_bigint::BigInt::zero();
        let mut den = num_bigint::BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return Scalar::zero();
        }
        let mut c = Scalar::new(num, den);
        if let Some((_, lc, _)) = self.leading_term() {
            if lc.is_negative() {
                c = -c;
            }
        }
        c
    }

    /// self / content; leading coefficient positive.
    pub fn primitive_part(&self) -> MultiPoly {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.content().recip())
    }

    pub fn rename_var(&self, from: &str, to: &str) -> MultiPoly {
        self.subst_poly(from, &Self::var(to))
    }
}

fn remap(old: &[String], new: &[String], terms: &BTreeMap<Mono, Scalar>) -> BTreeMap<Mono, Scalar> {
    let pos: Vec<usize> = old
        .iter()
        .map(|v| new.iter().position(|w| w == v).unwrap())
        .collect();
    terms
        .iter()
        .map(|(m, c)| {
            let mut e = vec![0u32; new.len()];
            for (i, &x) in m.0.iter().enumerate() {
                e[pos[i]] = x;
            }
            (Mono(e), c.clone())
        })
        .collect()
}

fn insert_add(map: &mut BTreeMap<Mono, Scalar>, m: Mono, c: Scalar) {
    use std::collections::btree_map::Entry;
    match map.entry(m) {
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
        Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (vars, mut a, b) = self.align(rhs);
        for (m, c) in b {
            insert_add(&mut a, m, c);
        }
        MultiPoly { vars, terms: a }.canonicalize()
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let (vars, mut a, b) = self.align(rhs);
        for (m, c) in b {
            insert_add(&mut a, m, -c);
        }
        MultiPoly { vars, terms: a }.canonicalize()
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let (vars, a, b) = self.align(rhs);
        let mut out: BTreeMap<Mono, Scalar> = BTreeMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let m = Mono(ma.0.iter().zip(mb.0.iter()).map(|(x, y)| x + y).collect());
                insert_add(&mut out, m, ca * cb);
            }
        }
        MultiPoly { vars, terms: out }.canonicalize()
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.map_coeffs(|c| -c)
    }
}

macro_rules! fwd_owned {
    ($tr:ident, $m:ident) => {
        impl std::ops::$tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
        impl std::ops::$tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$m(rhs)
            }
        }
    };
}
fwd_owned!(Add, add);
fwd_owned!(Sub, sub);
fwd_owned!(Mul, mul);

// ---------------------------------------------------------------------------
// canonical text form
// ---------------------------------------------------------------------------

impl fmt::Display for MultiPoly {
    /// Canonical text: terms in descending graded-lex order, coefficients as
    /// `p` or `p/q`, explicit `^` exponents, `*` products.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || m.total() == 0 {
                parts.push(scalar::fmt_scalar(&mag));
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    parts.push(self.vars[i].clone());
                } else if e > 1 {
                    parts.push(format!("{}^{}", self.vars[i], e));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---------------------------------------------------------------------------
// expression parser
// ---------------------------------------------------------------------------

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.bump();
                -&self.term()?
            }
            Some(b'+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.bump();
                    let d = self.factor()?;
                    acc = acc.exact_div(&d)?;
                }
                // implicit multiplication before '(' or an identifier: "2x", "3(x+1)"
                Some(c) if c == b'(' || c.is_ascii_alphabetic() => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.uint()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'-') => {
                self.bump();
                Ok(-&self.atom()?)
            }
            Some(b'(') => {
                self.bump();
                let e = self.expr()?;
                if self.bump() != Some(b')') {
                    return Err(Error::Parse("expected ')'".into()));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint_big()?;
                Ok(MultiPoly::constant(Scalar::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(MultiPoly::var(name))
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }

    fn uint(&mut self) -> Result<u32> {
        let n = self.uint_big()?;
        use num_traits::ToPrimitive;
        n.to_u32().ok_or_else(|| Error::Parse("exponent too large".into()))
    }

    fn uint_big(&mut self) -> Result<num_bigint::BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse("expected a number".into()));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse("bad number".into()))
    }
}

impl std::str::FromStr for MultiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(Error::Parse(format!("trailing input at byte {}", p.pos)));
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_text_round_trip() {
        let f = p("3/2*x^2*y - z + 7 - x^2*y");
        assert_eq!(f.to_string(), "1/2*x^2*y - z + 7");
        assert_eq!(p(&f.to_string()), f);
    }

    #[test]
    fn construction_is_canonical() {
        assert_eq!(p("x + y - y"), p("x"));
        assert_eq!(p("x - x"), MultiPoly::zero());
        assert_eq!(p("0").to_string(), "0");
        // unused variable slots are pruned, so equal polynomials compare equal
        let f = &p("x*y") - &p("x*y");
        assert_eq!(&(&f + &p("x")), &p("x"));
    }

    #[test]
    fn var_order_is_fixed() {
        let f = p("b*z*t*y*x");
        assert_eq!(f.vars(), &["t", "x", "y", "z", "b"]);
        assert_eq!(f.to_string(), "t*x*y*z*b");
    }

    #[test]
    fn ring_ops() {
        let f = p("x + 1");
        let g = p("x - 1");
        assert_eq!(&f * &g, p("x^2 - 1"));
        assert_eq!(f.pow(3), p("x^3 + 3*x^2 + 3*x + 1"));
        assert_eq!(p("x^2 - 1").exact_div(&g).unwrap(), f);
        assert!(p("x^2 + 1").exact_div(&g).is_err());
    }

    #[test]
    fn distributivity_and_commutativity_randomized() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let rnd = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut acc = MultiPoly::zero();
                for _ in 0..4 {
                    let c = ratio(rng.random_range(-6..7), rng.random_range(1..4));
                    let ex = rng.random_range(0..3);
                    let ey = rng.random_range(0..3);
                    acc = &acc + &MultiPoly::term(c, &[("x", ex), ("y", ey)]);
                }
                acc
            };
            let (f, g, h) = (rnd(&mut rng), rnd(&mut rng), rnd(&mut rng));
            assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
            assert_eq!(&f * &g, &g * &f);
        }
    }

    #[test]
    fn derivative_and_eval() {
        let f = p("x^3*y + 2*x");
        assert_eq!(f.derivative("x"), p("3*x^2*y + 2"));
        assert_eq!(f.derivative("z"), MultiPoly::zero());
        assert_eq!(
            f.eval_scalar(&[("x", int(2)), ("y", ratio(1, 2))]).unwrap(),
            int(8)
        );
    }

    #[test]
    fn coeff_views() {
        let f = p("y^2*x + y^2 + 3*x^2 - 1");
        let cs = f.coeffs_in("y");
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[0], p("3*x^2 - 1"));
        assert_eq!(cs[2], p("x + 1"));
        assert_eq!(MultiPoly::from_coeffs_in("y", &cs), f);
        assert_eq!(f.leading_coeff_in("y"), p("x + 1"));
        assert_eq!(f.degree_in("y"), 2);
    }

    #[test]
    fn substitution() {
        let f = p("X*(X-1)^3");
        let g = f.subst_poly("X", &p("x + 2*b*z"));
        assert_eq!(
            g,
            p("(x + 2*b*z)*(x + 2*b*z - 1)^3")
        );
        assert_eq!(p("x^2 + y").eval_partial(&[("x", int(3))]), p("y + 9"));
    }

    #[test]
    fn content_and_primitive_part() {
        let f = p("-6*x^2 - 9*x");
        assert_eq!(f.content(), int(-3));
        assert_eq!(f.primitive_part(), p("2*x^2 + 3*x"));
    }

    #[test]
    fn parser_handles_implicit_products_and_division() {
        assert_eq!(p("2x(x+1)"), p("2*x^2 + 2*x"));
        assert_eq!(p("x^2/2"), p("1/2*x^2"));
        assert_eq!(p("1/2*x"), p("x/2"));
        assert!("x/(x+1)".parse::<MultiPoly>().is_err());
        assert!("x +".parse::<MultiPoly>().is_err());
    }
}
