//! Newton fitting of the seven solution-family parameters to initial data
//! (y, y', ..., y^(6)) at a point.

use crate::curve::Jet7;
use crate::error::{Error, Result};
use crate::families::GeneralSolutionParams;
use crate::numeric::roots::roots_of_square_free;
use crate::scalar::{from_f64, to_f64, Scalar};

const N: usize = 7;

/// Truncated power series in h = x - x0, coefficients lowest first.
type Series = [f64; N];

fn smul(a: &Series, b: &Series) -> Series {
    let mut out = [0.0; N];
    for (i, ai) in a.iter().enumerate() {
        if *ai == 0.0 {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(N - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Settings for [`fit_parameters`]. The tolerance applies to the scaled
/// residual norm max_k |r_k| / (1 + |y^(k)_data|), so it reads as a relative
/// accuracy once the data leaves the unit scale.
#[derive(Clone, Debug)]
pub struct FitConfig {
    pub guess: GeneralSolutionParams,
    pub max_iter: usize,
    pub tol: f64,
    /// initial line-search step in (0, 1]; halved until the residual drops
    pub damping: f64,
}

impl FitConfig {
    pub fn new(guess: GeneralSolutionParams) -> Self {
        FitConfig { guess, max_iter: 25, tol: 1e-11, damping: 1.0 }
    }
}

#[derive(Clone, Debug)]
pub struct FitResult {
    pub params: GeneralSolutionParams,
    /// per-order residuals y^(k)_predicted - y^(k)_data at the final iterate
    pub residuals: [f64; N],
    pub iterations: usize,
}

/// Family parameters from floating-point values; rejects non-finite entries
/// and the degenerate combinations.
pub fn params_from_f64(c: &[f64; 7]) -> Result<GeneralSolutionParams> {
    let v: Vec<Scalar> = c.iter().map(|x| from_f64(*x)).collect::<Result<_>>()?;
    GeneralSolutionParams::new(v.try_into().expect("seven entries"))
}

/// Jet (y, y', ..., y^(6)) at x0 of the family member with parameters c, on
/// the solution branch whose value at x0 lies nearest y_hint. The member is
/// cubic in the shifted unknown A = c4 y + c1 + c2 x + c3 x^2; the cubic is
/// solved at x0 and the Taylor coefficients of the branch are lifted order
/// by order against its A-derivative. Ties between equally near branches go
/// to the better conditioned one (larger |dF/dA|); a branch with vanishing
/// A-derivative cannot be lifted and reports BranchSelectionFailure.
pub fn predict_jet(c: &[f64; 7], x0: f64, y_hint: f64) -> Result<[f64; N]> {
    let [c1, c2, c3, c4, c5, c6, c7] = *c;
    let mut b = [0.0; N];
    b[0] = c5 * x0 + c6;
    b[1] = c5;
    let mut w = [0.0; N];
    w[0] = 1.0 - c7 * x0;
    w[1] = -c7;
    let mut p = [0.0; N];
    p[0] = c1 + c2 * x0 + c3 * x0 * x0;
    p[1] = c2 + 2.0 * c3 * x0;
    p[2] = c3;
    let b2 = smul(&b, &b);
    let b4 = smul(&b2, &b2);
    let w2 = smul(&w, &w);
    let w4 = smul(&w2, &w2);
    let b2w2 = smul(&b2, &w2);
    let b5w = smul(&smul(&b4, &b), &w);
    let bw5 = smul(&b, &smul(&w4, &w));
    // the member is A^3 + 3 K A + 12 L with these series for K and L
    let mut k = [0.0; N];
    let mut l = [0.0; N];
    for i in 0..N {
        k[i] = 3.0 * b4[i] - 6.0 * b2w2[i] - w4[i];
        l[i] = 3.0 * b5w[i] + bw5[i];
    }

    let mut best: Option<(f64, f64, f64)> = None; // (a0, distance, |slope|)
    for r in roots_of_square_free(&[12.0 * l[0], 3.0 * k[0], 0.0, 1.0]) {
        if !r.re.is_finite() || r.im.abs() > 1e-8 * (1.0 + r.norm()) {
            continue;
        }
        let a0 = r.re;
        let dist = ((a0 - p[0]) / c4 - y_hint).abs();
        let grad = (3.0 * (a0 * a0 + k[0])).abs();
        let window = 1e-9 * (1.0 + y_hint.abs());
        let better = match &best {
            None => true,
            Some((_, d, g)) => dist + window < *d || ((dist - *d).abs() <= window && grad > *g),
        };
        if better {
            best = Some((a0, dist, grad));
        }
    }
    let Some((a0, dist, _)) = best else {
        return Err(Error::BranchSelectionFailure);
    };
    let slope = 3.0 * (a0 * a0 + k[0]);
    if !dist.is_finite() || slope.abs() < 1e-12 * (3.0 * (a0 * a0 + k[0].abs()) + 1.0) {
        return Err(Error::BranchSelectionFailure);
    }
    // with a_m still zero, the h^m coefficient of the cubic is linear in the
    // unknown with the fixed slope 3(a0^2 + K(x0))
    let mut a = [0.0; N];
    a[0] = a0;
    for m in 1..N {
        let a3 = smul(&smul(&a, &a), &a);
        let ka = smul(&k, &a);
        a[m] = -(a3[m] + 3.0 * ka[m] + 12.0 * l[m]) / slope;
    }
    // back through y = (A - c1 - c2 x - c3 x^2) / c4, coefficients to derivatives
    let mut out = [0.0; N];
    let mut fact = 1.0;
    for m in 0..N {
        if m > 0 {
            fact *= m as f64;
        }
        out[m] = (a[m] - p[m]) * fact / c4;
    }
    if out.iter().any(|v| !v.is_finite()) {
        return Err(Error::BranchSelectionFailure);
    }
    Ok(out)
}

fn scaled_norm(r: &[f64; N], data: &[f64; N]) -> f64 {
    (0..N)
        .map(|k| r[k].abs() / (1.0 + data[k].abs()))
        .fold(0.0, f64::max)
}

/// Line-search merit: squared 2-norm of the scaled residuals. The max norm
/// is too blind for acceptance tests, as a wild step can improve the worst
/// component while wrecking the others.
fn merit(r: &[f64; N], data: &[f64; N]) -> f64 {
    (0..N)
        .map(|k| (r[k] / (1.0 + data[k].abs())).powi(2))
        .sum()
}

/// Gaussian elimination with partial pivoting on a 7x7 system.
fn solve7(mut m: [[f64; N]; N], mut rhs: [f64; N]) -> Result<[f64; N]> {
    let scale = m
        .iter()
        .flatten()
        .fold(0.0_f64, |acc, v| acc.max(v.abs()));
    if scale == 0.0 {
        return Err(Error::SingularJacobian);
    }
    for col in 0..N {
        let piv = (col..N)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .unwrap();
        if m[piv][col].abs() < 1e-14 * scale {
            return Err(Error::SingularJacobian);
        }
        m.swap(col, piv);
        rhs.swap(col, piv);
        for row in col + 1..N {
            let f = m[row][col] / m[col][col];
            if f == 0.0 {
                continue;
            }
            for j in col..N {
                m[row][j] -= f * m[col][j];
            }
            rhs[row] -= f * rhs[col];
        }
    }
    let mut x = [0.0; N];
    for col in (0..N).rev() {
        let mut acc = rhs[col];
        for j in col + 1..N {
            acc -= m[col][j] * x[j];
        }
        x[col] = acc / m[col][col];
    }
    Ok(x)
}

/// Fits the seven family parameters to a jet of derivatives to order 6 by
/// damped Newton iteration on the residuals r_k(c) = y^(k)_predicted(x0; c)
/// - y^(k)_data. The predicted branch is re-selected each evaluation as the
/// one through the cubic root nearest the supplied y(x0). The Jacobian is
/// formed by central differences with per-parameter steps 1e-6 (1 + |c_j|).
pub fn fit_parameters(data: &Jet7, cfg: &FitConfig) -> Result<FitResult> {
    if data.order() < 6 {
        return Err(Error::Invalid(format!(
            "fitting needs derivatives to order 6, jet has {}",
            data.order()
        )));
    }
    if !(cfg.damping > 0.0 && cfg.damping <= 1.0) {
        return Err(Error::Invalid("damping must lie in (0, 1]".into()));
    }
    let target: [f64; N] = data.y[..N].try_into().unwrap();
    let x0 = data.x0;
    let residual = |c: &[f64; 7]| -> Result<[f64; N]> {
        let pred = predict_jet(c, x0, target[0])?;
        let mut r = [0.0; N];
        for (rk, (pk, tk)) in r.iter_mut().zip(pred.iter().zip(target.iter())) {
            *rk = pk - tk;
        }
        Ok(r)
    };
    let mut c = [0.0; 7];
    for (slot, v) in c.iter_mut().zip(cfg.guess.c.iter()) {
        *slot = to_f64(v);
    }
    let mut r = residual(&c)?;
    let mut iterations = 0;
    while scaled_norm(&r, &target) >= cfg.tol {
        if iterations >= cfg.max_iter {
            return Err(Error::MaxIterations);
        }
        iterations += 1;
        let mut jac = [[0.0; N]; N];
        for j in 0..N {
            let step = 1e-6 * (1.0 + c[j].abs());
            let mut cp = c;
            cp[j] += step;
            let mut cm = c;
            cm[j] -= step;
            let rp = residual(&cp)?;
            let rm = residual(&cm)?;
            for (row, (rpk, rmk)) in jac.iter_mut().zip(rp.iter().zip(rm.iter())) {
                row[j] = (rpk - rmk) / (2.0 * step);
            }
        }
        // row-equilibrated solve: same solution, far better pivoting when
        // the residual rows span several orders of magnitude
        let mut rhs = [0.0; N];
        for k in 0..N {
            let s = 1.0 + target[k].abs();
            rhs[k] = -r[k] / s;
            for v in jac[k].iter_mut() {
                *v /= s;
            }
        }
        let mut dir = solve7(jac, rhs)?;
        // cap the step at a 50% relative move per component; the raw Newton
        // direction can be enormous when the guess sits outside the region
        // where the linear model holds, and an uncapped step that happens to
        // lower the merit can hop into a spurious basin
        let overshoot = (0..N)
            .map(|j| dir[j].abs() / (0.5 * (1.0 + c[j].abs())))
            .fold(0.0_f64, f64::max);
        if overshoot > 1.0 {
            for d in dir.iter_mut() {
                *d /= overshoot;
            }
        }
        let here = merit(&r, &target);
        let mut lambda = cfg.damping;
        let mut moved = false;
        for _ in 0..30 {
            let mut trial = c;
            for (tj, dj) in trial.iter_mut().zip(dir.iter()) {
                *tj += lambda * dj;
            }
            if let Ok(rt) = residual(&trial) {
                if merit(&rt, &target) < here {
                    c = trial;
                    r = rt;
                    moved = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        if !moved {
            return Err(Error::MaxIterations);
        }
    }
    Ok(FitResult { params: params_from_f64(&c)?, residuals: r, iterations })
}
