//! Recovers the seven family parameters from a single 6-jet of a member
//! curve.  The data is exact (computed symbolically, then rounded to f64);
//! Newton iteration starts from a guess perturbed by one percent.

use contact_sextic::curve::{jet_values_at, Jet7};
use contact_sextic::families::{general_solution, GeneralSolutionParams};
use contact_sextic::numeric::fit::{fit_parameters, FitConfig, params_from_f64};
use contact_sextic::scalar::{int, ratio, to_f64};

fn main() {
    let truth = GeneralSolutionParams::new([
        ratio(1, 2),
        int(-1),
        ratio(1, 3),
        int(2),
        int(1),
        ratio(1, 4),
        ratio(-1, 5),
    ])
    .unwrap();

    // exact jet of the member at t0 = 1/5
    let (_, parametric) = general_solution(&truth).unwrap();
    let t0 = ratio(1, 5);
    let ys = jet_values_at(&parametric, &t0, 6).unwrap();
    let (x0, _) = parametric.at(&t0).unwrap();
    let data = Jet7::from_exact(&x0, &ys);
    println!("data point x0 = {:.6}, jet = {:?}", data.x0, data.y);

    // one percent off, alternating sign
    let guess: [f64; 7] = std::array::from_fn(|i| {
        let c = to_f64(&truth.c[i]);
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        c + sign * 0.01 * (1.0 + c.abs())
    });
    let cfg = FitConfig::new(params_from_f64(&guess).unwrap());

    let fit = fit_parameters(&data, &cfg).unwrap();
    println!("converged in {} iterations", fit.iterations);
    for (i, (found, want)) in fit.params.c.iter().zip(&truth.c).enumerate() {
        let err = (to_f64(found) - to_f64(want)).abs();
        println!("c{}: {:+.12}  (error {:.2e})", i + 1, to_f64(found), err);
        assert!(err < 1e-8);
    }
    let worst = fit.residuals.iter().fold(0f64, |m, r| m.max(r.abs()));
    println!("largest residual against the data: {worst:.3e}");
}
