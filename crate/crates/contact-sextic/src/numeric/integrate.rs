//! Adaptive integration of the seventh-order equation as a first-order
//! system in the state (y, y', ..., y^(6)), using the Dormand-Prince 5(4)
//! embedded pair with FSAL and a PI step controller.

use crate::curve::Jet7;
use crate::error::{Error, Result};
use crate::numeric::y7;

#[derive(Clone, Copy, Debug)]
pub struct IntegratorConfig {
    pub rtol: f64,
    pub atol: f64,
    pub max_steps: usize,
    /// minimum allowed |y'''|; below it the equation degenerates
    pub eps_sing: f64,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        IntegratorConfig {
            rtol: 1e-10,
            atol: 1e-12,
            max_steps: 200_000,
            eps_sing: y7::DEFAULT_EPS_SING,
        }
    }
}

pub type State = [f64; 7];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrajectoryStatus {
    ReachedTarget,
    /// |y'''| fell under eps_sing; the last accepted point is the final one
    SingularityApproached,
}

#[derive(Clone, Debug)]
pub struct Trajectory {
    pub points: Vec<(f64, State)>,
    pub status: TrajectoryStatus,
}

impl Trajectory {
    pub fn final_point(&self) -> (f64, State) {
        *self.points.last().expect("trajectory holds the start point")
    }

    pub fn final_jet(&self) -> Jet7 {
        let (x, s) = self.final_point();
        Jet7 { x0: x, y: s.to_vec() }
    }
}

fn rhs(state: &State, eps_sing: f64) -> Option<State> {
    let y7 = y7::y7_from_derivatives(state[3], state[4], state[5], state[6], eps_sing).ok()?;
    Some([
        state[1], state[2], state[3], state[4], state[5], state[6], y7,
    ])
}

// Dormand-Prince 5(4) tableau
const A: [[f64; 6]; 6] = [
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
// the system is autonomous, so the stage abscissae never enter
// difference between 5th-order and embedded 4th-order weights
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

fn error_norm(err: &State, y_old: &State, y_new: &State, cfg: &IntegratorConfig) -> f64 {
    let mut acc = 0.0;
    for i in 0..7 {
        let sc = cfg.atol + cfg.rtol * y_old[i].abs().max(y_new[i].abs());
        acc += (err[i] / sc) * (err[i] / sc);
    }
    (acc / 7.0).sqrt()
}

fn initial_step(y0: &State, f0: &State, dir: f64, cfg: &IntegratorConfig) -> f64 {
    let sc = |i: usize| cfg.atol + cfg.rtol * y0[i].abs();
    let d0: f64 = (0..7).map(|i| (y0[i] / sc(i)).powi(2)).sum::<f64>().sqrt();
    let d1: f64 = (0..7).map(|i| (f0[i] / sc(i)).powi(2)).sum::<f64>().sqrt();
    let h0 = if d0 < 1e-5 || d1 < 1e-5 { 1e-6 } else { 0.01 * d0 / d1 };
    dir * h0.min(0.1)
}

/// Integrates from the starting jet (order 6) to x_end. The trajectory
/// records every accepted step, starting point included.
pub fn integrate(start: &Jet7, x_end: f64, cfg: &IntegratorConfig) -> Result<Trajectory> {
    if start.order() < 6 {
        return Err(Error::Invalid(format!(
            "integration needs derivatives to order 6, jet has {}",
            start.order()
        )));
    }
    let mut y: State = start.y[..7].try_into().unwrap();
    let mut x = start.x0;
    let Some(mut f) = rhs(&y, cfg.eps_sing) else {
        return Err(Error::SingularJet);
    };
    let mut points = vec![(x, y)];
    if x == x_end {
        return Ok(Trajectory { points, status: TrajectoryStatus::ReachedTarget });
    }
    let dir = (x_end - x).signum();
    let mut h = initial_step(&y, &f, dir, cfg);
    let mut err_old = 1e-4_f64;
    let mut steps = 0usize;
    loop {
        steps += 1;
        if steps > cfg.max_steps {
            return Err(Error::StepLimitExceeded);
        }
        if (x + h - x_end) * dir > 0.0 {
            h = x_end - x;
        }
        let mut k = [[0.0; 7]; 7];
        k[0] = f;
        let mut singular = false;
        for stage in 0..6 {
            let mut ys = y;
            for (i, yi) in ys.iter_mut().enumerate() {
                let mut acc = 0.0;
                for (j, kj) in k.iter().enumerate().take(stage + 1) {
                    acc += A[stage][j] * kj[i];
                }
                *yi += h * acc;
            }
            match rhs(&ys, cfg.eps_sing) {
                Some(v) => k[stage + 1] = v,
                None => {
                    singular = true;
                    break;
                }
            }
        }
        if singular {
            // try a smaller step; below a sensible floor, report the approach
            if h.abs() > 1e-12 * (1.0 + x.abs()) {
                h *= 0.25;
                continue;
            }
            return Ok(Trajectory { points, status: TrajectoryStatus::SingularityApproached });
        }
        // 5th-order solution is stage 6 (FSAL); error from the E weights
        let mut y_new = y;
        for (i, yi) in y_new.iter_mut().enumerate() {
            let mut acc = 0.0;
            for (j, kj) in k.iter().enumerate().take(6) {
                acc += A[5][j] * kj[i];
            }
            *yi += h * acc;
        }
        let mut err = [0.0; 7];
        for (i, ei) in err.iter_mut().enumerate() {
            let mut acc = 0.0;
            for (j, kj) in k.iter().enumerate() {
                acc += E[j] * kj[i];
            }
            *ei = h * acc;
        }
        let en = error_norm(&err, &y, &y_new, cfg);
        if en <= 1.0 {
            x += h;
            y = y_new;
            f = k[6];
            points.push((x, y));
            if (x - x_end) * dir >= 0.0 {
                return Ok(Trajectory { points, status: TrajectoryStatus::ReachedTarget });
            }
            // PI controller (Hairer's dopri5 constants)
            let beta = 0.04;
            let alpha = 0.2 - 0.75 * beta;
            let mut fac = 0.9 * en.max(1e-16).powf(-alpha) * err_old.powf(beta);
            fac = fac.clamp(0.2, 10.0);
            err_old = en.max(1e-4);
            h *= fac;
        } else {
            let fac = (0.9 * en.powf(-0.2)).clamp(0.1, 1.0);
            h *= fac;
            if h.abs() < 1e-15 * (1.0 + x.abs()) {
                return Err(Error::StepLimitExceeded);
            }
        }
    }
}

/// Convenience wrapper returning only the final state at x_end.
pub fn solve_to(start: &Jet7, x_end: f64, cfg: &IntegratorConfig) -> Result<State> {
    let tr = integrate(start, x_end, cfg)?;
    match tr.status {
        TrajectoryStatus::ReachedTarget => Ok(tr.final_point().1),
        TrajectoryStatus::SingularityApproached => Err(Error::SingularJet),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{implicit_jet, ImplicitCurve};
    use crate::scalar::int;

    fn cubic_jet() -> Jet7 {
        Jet7 { x0: 0.0, y: vec![0.0, 0.0, 0.0, 6.0, 0.0, 0.0, 0.0] }
    }

    #[test]
    fn exact_cubic_solution() {
        let cfg = IntegratorConfig::default();
        let end = solve_to(&cubic_jet(), 2.0, &cfg).unwrap();
        assert!((end[0] - 8.0).abs() < 1e-10, "y(2) = {}", end[0]);
        assert!((end[1] - 12.0).abs() < 1e-9);
    }

    #[test]
    fn backward_integration_works() {
        let cfg = IntegratorConfig::default();
        let end = solve_to(&cubic_jet(), -1.0, &cfg).unwrap();
        assert!((end[0] + 1.0).abs() < 1e-10);
    }

    #[test]
    fn singular_start_is_rejected() {
        let cfg = IntegratorConfig::default();
        let flat = Jet7 { x0: 0.0, y: vec![0.0; 7] };
        assert!(matches!(integrate(&flat, 1.0, &cfg), Err(Error::SingularJet)));
    }

    #[test]
    fn drifting_into_the_singular_set_stops_early() {
        // y''' shrinks linearly toward zero while everything stays tame
        let cfg = IntegratorConfig { eps_sing: 1e-3, ..Default::default() };
        let start = Jet7 { x0: 0.0, y: vec![0.0, 0.0, 0.0, 0.01, -0.01, 0.0, 0.0] };
        let tr = integrate(&start, 2.0, &cfg).unwrap();
        assert_eq!(tr.status, TrajectoryStatus::SingularityApproached);
        let (x_last, s_last) = tr.final_point();
        assert!(x_last < 2.0);
        assert!(s_last[3].abs() < 2e-3, "y''' = {}", s_last[3]);
    }

    fn canonical() -> ImplicitCurve {
        ImplicitCurve::new("y^3 + 3(3x^4 - 6x^2 - 1)y + 12x(3x^4 + 1)".parse().unwrap()).unwrap()
    }

    #[test]
    fn canonical_branch_continuation() {
        let curve = canonical();
        let start = implicit_jet(&curve, &int(0), &int(0), 6).unwrap();
        let cfg = IntegratorConfig::default();
        let end = solve_to(&start, 0.3, &cfg).unwrap();
        // oracle: the exact branch value from the implicit jet at x = 0.3
        let y_exact = branch_value_near(&curve, 0.3, end[0]);
        assert!((end[0] - y_exact).abs() < 1e-8, "got {} want {}", end[0], y_exact);
    }

    /// Real root of the canonical cubic in y at the given x nearest the hint.
    fn branch_value_near(curve: &ImplicitCurve, x: f64, hint: f64) -> f64 {
        let coeffs: Vec<f64> = curve
            .f
            .coeffs_in("y")
            .iter()
            .map(|c| c.eval_f64(&[("x", x)]).unwrap())
            .collect();
        crate::numeric::roots::roots_of_square_free(&coeffs)
            .into_iter()
            .filter(|r| r.im.abs() < 1e-9)
            .map(|r| r.re)
            .min_by(|a, b| (a - hint).abs().partial_cmp(&(b - hint).abs()).unwrap())
            .expect("a real branch exists")
    }

    #[test]
    fn tolerance_scaling_matches_scheme_order() {
        // error against the exact branch should scale roughly linearly in the
        // tolerance for a tolerance-proportional controller
        let curve = canonical();
        let start = implicit_jet(&curve, &int(0), &int(0), 6).unwrap();
        let mut errs = Vec::new();
        for rtol in [1e-6, 1e-7, 1e-8] {
            let cfg = IntegratorConfig { rtol, atol: rtol * 1e-2, ..Default::default() };
            let end = solve_to(&start, 0.3, &cfg).unwrap();
            let y_exact = branch_value_near(&curve, 0.3, end[0]);
            errs.push((end[0] - y_exact).abs().max(1e-16));
        }
        // one decade of tolerance per step: ratios within a factor 4 of 10
        for w in errs.windows(2) {
            let ratio = w[0] / w[1];
            assert!(
                (2.5..40.0).contains(&ratio) || w[0] < 1e-13,
                "tolerance scaling off: {errs:?}"
            );
        }
    }

    #[test]
    fn affine_point_symmetries_commute_with_integration() {
        // x -> c5 x + c6, y -> c4 y + c1 + c2 x~ + c3 x~^2 maps solutions to
        // solutions; on jets it acts by y~^(k) = c4 y^(k) / c5^k for k >= 3
        // with the quadratic only touching the lower orders
        let (c1, c2, c3, c4, c5, c6) = (0.7, -0.3, 0.2, 1.5, 0.8, 0.1);
        let map_jet = |x: f64, s: &State| -> (f64, State) {
            let xt = c5 * x + c6;
            let mut out = [0.0; 7];
            out[0] = c4 * s[0] + c1 + c2 * xt + c3 * xt * xt;
            out[1] = c4 * s[1] / c5 + c2 + 2.0 * c3 * xt;
            out[2] = c4 * s[2] / (c5 * c5) + 2.0 * c3;
            for k in 3..7 {
                out[k] = c4 * s[k] / c5.powi(k as i32);
            }
            (xt, out)
        };
        let curve = canonical();
        let start = implicit_jet(&curve, &int(0), &int(0), 6).unwrap();
        let cfg = IntegratorConfig::default();
        let x_end = 0.25;
        let end = solve_to(&start, x_end, &cfg).unwrap();
        let (_, direct) = map_jet(x_end, &end);
        let (xt0, st0) = map_jet(start.x0, &start.y[..7].try_into().unwrap());
        let transported_start = Jet7 { x0: xt0, y: st0.to_vec() };
        let (xt1, _) = map_jet(x_end, &end);
        let transported = solve_to(&transported_start, xt1, &cfg).unwrap();
        for k in 0..7 {
            assert!(
                (direct[k] - transported[k]).abs() < 1e-7 * (1.0 + direct[k].abs()),
                "order {k}: {} vs {}",
                direct[k],
                transported[k]
            );
        }
    }

    #[test]
    fn trajectory_is_monotone_and_dense() {
        let cfg = IntegratorConfig::default();
        let tr = integrate(&cubic_jet(), 1.0, &cfg).unwrap();
        assert_eq!(tr.status, TrajectoryStatus::ReachedTarget);
        assert!(tr.points.len() > 3);
        for w in tr.points.windows(2) {
            assert!(w[1].0 > w[0].0);
        }
        assert_eq!(tr.final_point().0, 1.0);
    }
}
