//! Dense univariate helpers: gcd, square-free decomposition, Sturm chains.
//!
//! Coefficient vectors are ascending in the variable with trailing zeros
//! trimmed. The gcd runs a primitive pseudo-remainder sequence over the
//! integers to keep coefficient growth down.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;

pub fn to_dense(f: &MultiPoly, var: &str) -> Result<Vec<Scalar>> {
    for v in f.vars() {
        if v != var {
            return Err(Error::Invalid(format!(
                "expected a univariate polynomial in {var}, found variable {v}"
            )));
        }
    }
    let mut c: Vec<Scalar> = f
        .coeffs_in(var)
        .into_iter()
        .map(|p| p.constant_value().unwrap())
        .collect();
    trim(&mut c);
    Ok(c)
}

pub fn from_dense(var: &str, c: &[Scalar]) -> MultiPoly {
    let polys: Vec<MultiPoly> = c.iter().cloned().map(MultiPoly::constant).collect();
    MultiPoly::from_coeffs_in(var, &polys)
}

pub fn trim(c: &mut Vec<Scalar>) {
    while c.last().map(|v| v.is_zero()).unwrap_or(false) {
        c.pop();
    }
}

pub fn deg(c: &[Scalar]) -> Option<usize> {
    if c.is_empty() {
        None
    } else {
        Some(c.len() - 1)
    }
}

pub fn deriv(c: &[Scalar]) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = c
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, v)| v * crate::scalar::int(i as i64))
        .collect();
    trim(&mut out);
    out
}

pub fn divrem(a: &[Scalar], b: &[Scalar]) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    if b.is_empty() {
        return Err(Error::DivisionByZero);
    }
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    if r.len() <= db {
        return Ok((vec![], r));
    }
    let mut q = vec![Scalar::zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let coef = &r[dr] / lb;
        q[dr - db] = coef.clone();
        for i in 0..=db {
            let v = &r[dr - db + i] - &(&b[i] * &coef);
            r[dr - db + i] = v;
        }
        r.pop(); // leading entry is now exactly zero
        trim(&mut r);
    }
    trim(&mut q);
    Ok((q, r))
}

/// Exact division; errors on a nonzero remainder.
pub fn exact_div(a: &[Scalar], b: &[Scalar]) -> Result<Vec<Scalar>> {
    let (q, r) = divrem(a, b)?;
    if !r.is_empty() {
        return Err(Error::ExactDivision("nonzero remainder".into()));
    }
    Ok(q)
}

fn to_int(c: &[Scalar]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for v in c {
        l = l.lcm(v.denom());
    }
    c.iter()
        .map(|v| v.numer() * (&l / v.denom()))
        .collect()
}

fn int_content(c: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for v in c {
        g = g.gcd(v);
    }
    g
}

fn int_primitive(mut c: Vec<BigInt>) -> Vec<BigInt> {
    let g = int_content(&c);
    if !g.is_zero() && !g.is_one() {
        for v in &mut c {
            *v = &*v / &g;
        }
    }
    c
}

/// Pseudo-remainder of a by b over the integers.
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let da = a.len() - 1;
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r: Vec<BigInt> = a.to_vec();
    let steps = da + 1 - db;
    for v in &mut r {
        *v *= num_traits::pow::pow(lb.clone(), steps);
    }
    while r.len() > db {
        let dr = r.len() - 1;
        let coef = &r[dr] / &b[db]; // exact by the lc power multiplied in
        for i in 0..=db {
            let sub = &b[i] * &coef;
            r[dr - db + i] -= sub;
        }
        while r.last().map(|v| v.is_zero()).unwrap_or(false) {
            r.pop();
        }
        if r.len() <= db {
            break;
        }
    }
    r
}

/// Monic gcd over the rationals.
pub fn gcd(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    if a.is_empty() {
        return monic(b.to_vec());
    }
    if b.is_empty() {
        return monic(a.to_vec());
    }
    let mut f = int_primitive(to_int(a));
    let mut g = int_primitive(to_int(b));
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_empty() {
        if g.len() == 1 {
            return vec![Scalar::one()];
        }
        let r = int_primitive(prem(&f, &g));
        f = g;
        g = r;
    }
    monic(f.into_iter().map(Scalar::from_integer).collect())
}

pub fn monic(mut c: Vec<Scalar>) -> Vec<Scalar> {
    trim(&mut c);
    if let Some(l) = c.last().cloned() {
        if !l.is_one() {
            for v in &mut c {
                *v = &*v / &l;
            }
        }
    }
    c
}

/// One square-free factor with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareFreePart {
    pub factor: MultiPoly,
    pub multiplicity: usize,
}

/// Yun's algorithm. Returns the scalar content (signed, covering the leading
/// coefficient) and primitive square-free parts with positive leading
/// coefficients; content * prod factor^multiplicity reassembles the input.
pub fn square_free_decomposition(
    f: &MultiPoly,
    var: &str,
) -> Result<(Scalar, Vec<SquareFreePart>)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let dense = to_dense(f, var)?;
    if dense.len() == 1 {
        return Ok((dense[0].clone(), vec![]));
    }
    let mut parts: Vec<(Vec<Scalar>, usize)> = Vec::new();
    let fp = deriv(&dense);
    let c0 = gcd(&dense, &fp);
    let mut w = exact_div(&dense, &c0)?;
    let mut y = exact_div(&fp, &c0)?;
    let mut i = 1usize;
    loop {
        let wp = deriv(&w);
        let mut z: Vec<Scalar> = Vec::with_capacity(y.len().max(wp.len()));
        for k in 0..y.len().max(wp.len()) {
            let a = y.get(k).cloned().unwrap_or_else(Scalar::zero);
            let b = wp.get(k).cloned().unwrap_or_else(Scalar::zero);
            z.push(a - b);
        }
        trim(&mut z);
        if z.is_empty() {
            if deg(&w) != Some(0) {
                parts.push((w, i));
            }
            break;
        }
        let g = gcd(&w, &z);
        if deg(&g) != Some(0) {
            parts.push((g.clone(), i));
        }
        w = exact_div(&w, &g)?;
        y = exact_div(&z, &g)?;
        i += 1;
    }
    // normalize parts primitive with positive leading coefficient
    let mut out = Vec::new();
    for (c, m) in parts {
        let prim = from_dense(var, &c).primitive_part();
        out.push(SquareFreePart { factor: prim, multiplicity: m });
    }
    // the content is whatever scalar makes content * prod factor^mult == f
    let mut prod = MultiPoly::one();
    for p in &out {
        prod = &prod * &p.factor.pow(p.multiplicity as u32);
    }
    let q = f.exact_div(&prod)?;
    let content = q
        .constant_value()
        .ok_or_else(|| Error::ExactDivision("square-free reassembly".into()))?;
    Ok((content, out))
}

/// Number of distinct real roots, by Sturm's theorem.
pub fn count_real_roots(f: &MultiPoly, var: &str) -> Result<usize> {
    let dense = to_dense(f, var)?;
    if dense.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    if dense.len() == 1 {
        return Ok(0);
    }
    // square-free part
    let fp = deriv(&dense);
    let g = gcd(&dense, &fp);
    let sf = exact_div(&dense, &g)?;
    let mut chain = vec![sf.clone(), deriv(&sf)];
    loop {
        let n = chain.len();
        if chain[n - 1].is_empty() {
            chain.pop();
            break;
        }
        if deg(&chain[n - 1]) == Some(0) {
            break;
        }
        let (_, r) = divrem(&chain[n - 2], &chain[n - 1])?;
        chain.push(r.iter().map(|v| -v).collect());
    }
    let sign_at_inf = |c: &[Scalar], plus: bool| -> i32 {
        let d = c.len() - 1;
        let l = &c[d];
        let mut s = if l.is_positive() { 1 } else { -1 };
        if !plus && d % 2 == 1 {
            s = -s;
        }
        s
    };
    let changes = |plus: bool| -> usize {
        let mut prev = 0i32;
        let mut n = 0;
        for c in &chain {
            if c.is_empty() {
                continue;
            }
            let s = sign_at_inf(c, plus);
            if prev != 0 && s != prev {
                n += 1;
            }
            prev = s;
        }
        n
    };
    Ok(changes(false) - changes(true))
}
