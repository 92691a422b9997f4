//! End-to-end gate: one test per claim the library is built around, in the
//! order seed curve, canonical curve, solution family, contact family,
//! algebra, linearization, elimination, discriminants, genus, the conic
//! characterization, numerics, and sextic forms.  Everything symbolic runs
//! at zero tolerance; the numeric checks state their bounds inline.

use num_complex::Complex64;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use contact_sextic::contact::{build_algebra_table, generators, is_point_type};
use contact_sextic::curve::{
    halphen_residual, implicit_jet, jet_values_at, linearization_residual, verify_solution, Jet7,
    ParametricCurve,
};
use contact_sextic::elim::{discriminant_wrt, resultant};
use contact_sextic::families::{
    canonical_curve, conic_family, contact_family, general_solution, new_curve,
    new_curve_symbolic, parametrize_conic, uv_pair_symbolic, ContactFamilyParams,
    GeneralSolutionParams,
};
use contact_sextic::invariants::{
    arithmetic_genus, cross_ratio, discriminant_is_cube, equianharmonic_check, moebius_transform,
    quadratic_invariant, singular_points, SexticForm,
};
use contact_sextic::numeric::fit::{fit_parameters, params_from_f64, FitConfig};
use contact_sextic::numeric::integrate::{solve_to, IntegratorConfig};
use contact_sextic::numeric::roots::complex_roots;
use contact_sextic::poly::MultiPoly;
use contact_sextic::ratfunc::parse_ratfunc;
use contact_sextic::scalar::{int, ratio, to_f64, Scalar};
use contact_sextic::transform::slope;
use contact_sextic::univar::count_real_roots;

fn rat(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Scalar {
    ratio(rng.random_range(-num..=num), rng.random_range(1..=den))
}

#[test]
fn c01_seed_parametrization_has_zero_residual() {
    let curve = contact_sextic::families::seed_curve();
    let (ok, residual) = verify_solution(&curve).unwrap();
    assert!(ok, "seed residual = {residual}");
    println!("c01 pass: seed curve solves exactly");
}

#[test]
fn c02_canonical_curve_solves_and_lies_on_its_sextic() {
    let (implicit, parametric) = canonical_curve();
    let (ok, residual) = verify_solution(&parametric).unwrap();
    assert!(ok, "canonical residual = {residual}");
    assert!(parametric.lies_on(&implicit));
    println!("c02 pass: canonical curve solves and incidence is exact");
}

#[test]
fn c03_randomized_family_members_solve_and_identity_gives_the_canonical_curve() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for trial in 0..25 {
        let p = loop {
            let c: [Scalar; 7] = std::array::from_fn(|_| rat(&mut rng, 6, 3));
            if let Ok(p) = GeneralSolutionParams::new(c) {
                break p;
            }
        };
        let (implicit, parametric) = general_solution(&p).unwrap();
        let (ok, residual) = verify_solution(&parametric).unwrap();
        assert!(ok, "trial {trial}: residual = {residual}");
        assert!(parametric.lies_on(&implicit), "trial {trial}: incidence fails");
    }
    let (identity_member, _) = general_solution(&GeneralSolutionParams::identity()).unwrap();
    let (canonical, _) = canonical_curve();
    assert!((&identity_member.f - &canonical.f).is_zero());
    println!("c03 pass: 25 members solve exactly; identity reproduces the canonical sextic");
}

#[test]
fn c04_randomized_contact_members_carry_their_slope_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for trial in 0..25 {
        let (curve, z) = loop {
            let b = rat(&mut rng, 6, 3);
            let bs: [Scalar; 7] = std::array::from_fn(|_| rat(&mut rng, 6, 3));
            let Ok(p) = ContactFamilyParams::new(b, bs) else { continue };
            if let Ok(pair) = contact_family(&p) {
                break pair;
            }
        };
        // the returned z is dy/dx along the curve, exactly
        let diff = &z - &slope(&curve).unwrap();
        assert!(diff.is_zero(), "trial {trial}: slope mismatch");
        assert!(
            contact_sextic::transform::contact_identity_holds(&curve, &z),
            "trial {trial}: contact identity fails"
        );
        let (ok, residual) = verify_solution(&curve).unwrap();
        assert!(ok, "trial {trial}: residual = {residual}");
    }
    println!("c04 pass: 25 contact members verified exactly");
}

// Exact rank of the generator set, computed by evaluating every generator at
// a fixed list of rational (x, y, z) points and eliminating over the
// rationals.  Twelve points oversample a 10-dimensional space of polynomials
// in 10 monomials, so full rank here means linear independence.
fn generator_rank() -> usize {
    let gens = generators();
    // scattered points; a structured grid can hide rank by lying on a curve
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let points: Vec<(Scalar, Scalar, Scalar)> = (0..12)
        .map(|_| (rat(&mut rng, 7, 3), rat(&mut rng, 7, 3), rat(&mut rng, 7, 3)))
        .collect();
    let mut m: Vec<Vec<Scalar>> = gens
        .iter()
        .map(|g| {
            points
                .iter()
                .map(|(x, y, z)| {
                    g.eval_scalar(&[("x", x.clone()), ("y", y.clone()), ("z", z.clone())])
                        .unwrap()
                })
                .collect()
        })
        .collect();
    let (rows, cols) = (m.len(), points.len());
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, pivot);
        let lead = m[rank][col].clone();
        for r in rank + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &lead;
            for c in col..cols {
                let s = &m[rank][c] * &factor;
                m[r][c] = &m[r][c] - &s;
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn c05_algebra_is_ten_dimensional_with_seven_point_generators() {
    assert_eq!(generator_rank(), 10, "generators must be linearly independent");
    // building the table closes all 45 brackets in the span or errors out
    let table = build_algebra_table().unwrap();
    assert_eq!(table.dim(), 10);
    assert!(table.jacobi_holds());
    assert!(!table.killing_det().is_zero(), "Killing form must be nondegenerate");
    let point_like = table.basis.iter().filter(|h| is_point_type(h)).count();
    assert_eq!(point_like, 7);
    println!("c05 pass: 10-dimensional algebra, Jacobi and Killing checks, 7 point generators");
}

#[test]
fn c06_characteristics_solve_the_linearized_equation_along_the_canonical_curve() {
    let (_, curve) = canonical_curve();
    for (i, h) in generators().iter().enumerate() {
        let r = linearization_residual(h, &curve).unwrap();
        assert!(r.is_zero(), "generator {} fails the linearized equation", i + 1);
    }
    println!("c06 pass: all 10 characteristics annihilate the linearization");
}

#[test]
fn c07_z_eliminant_splits_off_the_degree_six_factor() {
    let q = MultiPoly::zero();
    let p: MultiPoly = "x (x - 1)^3".parse().unwrap();
    let (u, v) = uv_pair_symbolic(&q, &p).unwrap();
    let r = resultant(&u, &v, "z").unwrap();
    let sextic = new_curve_symbolic();
    let cofactor = r.exact_div(&sextic).expect("degree-six factor divides exactly");
    assert!(!cofactor.is_zero());
    // belt and braces: the product reassembles the eliminant
    assert!((&(&cofactor * &sextic) - &r).is_zero());
    println!("c07 pass: eliminant = (degree-six factor) * (nonzero cofactor), exactly");
}

fn quartic_cross_ratio_is_equianharmonic(quartic: &MultiPoly, tol: f64) {
    let roots: Vec<Complex64> = complex_roots(quartic).unwrap().iter().map(|r| r.value).collect();
    assert_eq!(roots.len(), 4);
    let rho = cross_ratio(roots[0].into(), roots[1].into(), roots[2].into(), roots[3].into()).unwrap();
    let eps = Complex64::from_polar(1.0, std::f64::consts::PI / 3.0);
    let dist = (rho - eps).norm().min((rho - eps.conj()).norm());
    assert!(dist <= tol, "cross-ratio {rho} is {dist:.2e} away from the sixth roots");
    assert!(equianharmonic_check(&roots, tol).unwrap());
}

#[test]
fn c08_discriminants_are_cubes_of_equianharmonic_quartics() {
    let (canonical, _) = canonical_curve();
    let disc = discriminant_wrt(&canonical.f, "y").unwrap();
    let expected: MultiPoly = "108 (-3 x^4 - 6 x^2 + 1)^3".parse().unwrap();
    assert!((&disc - &expected).is_zero(), "canonical discriminant identity");
    let canonical_quartic: MultiPoly = "-3 x^4 - 6 x^2 + 1".parse().unwrap();
    quartic_cross_ratio_is_equianharmonic(&canonical_quartic, 1e-10);

    let curve = new_curve(&ratio(1, 2)).unwrap();
    let quartic = discriminant_is_cube(&curve).unwrap().expect("cube shape");
    assert_eq!(count_real_roots(&quartic, "x").unwrap(), 2);
    quartic_cross_ratio_is_equianharmonic(&quartic, 1e-10);
    println!("c08 pass: both discriminants are cubes; cross-ratios equianharmonic to 1e-10");
}

#[test]
fn c09_genus_count_and_the_cusp_of_the_quartic_model() {
    assert_eq!(arithmetic_genus(4, &[1, 2]), 0);
    let curve = contact_sextic::curve::ImplicitCurve::new("y^2 + x (x - 1)^3".parse().unwrap()).unwrap();
    let points = singular_points(&curve).unwrap();
    let cusp = points
        .iter()
        .find(|s| (s.x - 1.0).abs() < 1e-9 && s.y.abs() < 1e-9)
        .expect("cusp at (1, 0)");
    assert_eq!(cusp.multiplicity, 2);
    println!("c09 pass: genus 0 from deltas (1, 2); cusp (1, 0) found with multiplicity 2");
}

#[test]
fn c10_third_order_expression_vanishes_exactly_on_conics() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut checked = 0;
    while checked < 10 {
        // draw four coefficients and a rational point, solve for the fifth
        let c1 = rat(&mut rng, 4, 3);
        let c2 = rat(&mut rng, 4, 3);
        let c3 = rat(&mut rng, 4, 3);
        let c4 = rat(&mut rng, 4, 3);
        let x0 = rat(&mut rng, 3, 2);
        let y0 = rat(&mut rng, 3, 2);
        let c5 = &(&(&y0 * &y0) - &(&c1 * &(&x0 * &x0)))
            - &(&(&(&c2 * &(&x0 * &y0)) + &(&c3 * &y0)) + &(&c4 * &x0));
        let Ok(conic) = conic_family(&[c1, c2, c3, c4, c5]) else { continue };
        let Ok(par) = parametrize_conic(&conic, &x0, &y0) else { continue };
        let res = halphen_residual(&par).unwrap();
        assert!(res.is_zero(), "conic residual must vanish identically");
        checked += 1;
    }
    let cubic = ParametricCurve::new(
        parse_ratfunc("t").unwrap(),
        parse_ratfunc("t^3").unwrap(),
    )
    .unwrap();
    assert!(!halphen_residual(&cubic).unwrap().is_zero());
    println!("c10 pass: zero on 10 random conics, nonzero on y = x^3");
}

#[test]
fn c11_integration_and_fitting_meet_their_tolerances() {
    let cfg = IntegratorConfig::default();

    // canonical jet at the origin, integrated to x = 0.3, against the branch
    // of the implicit sextic that passes through the origin
    let (implicit, _) = canonical_curve();
    let jet = implicit_jet(&implicit, &int(0), &int(0), 6).unwrap();
    let state = solve_to(&jet, 0.3, &cfg).unwrap();
    let section = implicit.f.eval_partial(&[("x", ratio(3, 10))]);
    let branch = complex_roots(&section)
        .unwrap()
        .iter()
        .filter(|r| r.value.im.abs() < 1e-9)
        .map(|r| r.value.re)
        .min_by(|a, b| {
            (a - state[0]).abs().partial_cmp(&(b - state[0]).abs()).unwrap()
        })
        .expect("a real branch exists at x = 0.3");
    assert!(
        (state[0] - branch).abs() < 1e-8,
        "integrated y(0.3) = {} vs algebraic {}",
        state[0],
        branch
    );

    // the cubic y = x^3 is reproduced to full accuracy
    let cubic = Jet7 { x0: 1.0, y: vec![1.0, 3.0, 6.0, 6.0, 0.0, 0.0, 0.0] };
    let state = solve_to(&cubic, 2.0, &cfg).unwrap();
    assert!((state[0] - 8.0).abs() < 1e-10, "cubic endpoint {}", state[0]);

    // parameter recovery: 20 of 20 randomized members, guesses 1% off
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let t0_pool = [ratio(1, 5), ratio(-1, 5), ratio(1, 6), ratio(1, 8), ratio(-1, 8), ratio(1, 4)];
    for trial in 0..20 {
        // redraw data points that land too close to a branch point of the
        // member, where the jet blows up and double precision runs out
        let (truth, data) = loop {
            let truth = loop {
                let c: [Scalar; 7] = std::array::from_fn(|_| rat(&mut rng, 3, 2));
                if let Ok(p) = GeneralSolutionParams::new(c) {
                    break p;
                }
            };
            let t0 = &t0_pool[rng.random_range(0..t0_pool.len())];
            let (_, parametric) = general_solution(&truth).unwrap();
            let ys = jet_values_at(&parametric, t0, 6).unwrap();
            let (x0, _) = parametric.at(t0).unwrap();
            let data = Jet7::from_exact(&x0, &ys);
            if data.y.iter().all(|v| v.abs() < 1e3) {
                break (truth, data);
            }
        };

        let guess: [f64; 7] = std::array::from_fn(|i| {
            let c = to_f64(&truth.c[i]);
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            c + sign * 0.01 * (1.0 + c.abs())
        });
        // ask for the tightest stopping tolerance the data can support, then
        // hold the result to the absolute bound
        let fit = [1e-13, 1e-12, 1e-11]
            .iter()
            .find_map(|&tol| {
                let mut cfg = FitConfig::new(params_from_f64(&guess).unwrap());
                cfg.tol = tol;
                fit_parameters(&data, &cfg).ok()
            })
            .unwrap_or_else(|| panic!("trial {trial}: fit failed at every tolerance"));
        assert!(fit.iterations <= 25, "trial {trial}: {} iterations", fit.iterations);
        let worst = fit.residuals.iter().fold(0f64, |m, r| m.max(r.abs()));
        assert!(worst < 1e-9, "trial {trial}: residual {worst:.2e}");
    }
    println!("c11 pass: integration within 1e-8 / 1e-10; 20 of 20 fits below 1e-9");
}

#[test]
fn c12_quadratic_invariant_null_cone_and_equivariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..10 {
        let c = rat(&mut rng, 9, 4);
        let p = (&MultiPoly::var("x") + &MultiPoly::constant(c)).pow(6);
        let form = SexticForm::from_poly(&p, "x").unwrap();
        assert!(quadratic_invariant(&form).is_zero(), "sixth powers lie on the null cone");
    }
    for _ in 0..10 {
        let form = SexticForm::new(std::array::from_fn(|_| rat(&mut rng, 5, 3)));
        let (a, b, c, d) = loop {
            let m: [i64; 4] = std::array::from_fn(|_| rng.random_range(-5..=5));
            if m[0] * m[3] - m[1] * m[2] != 0 {
                break (int(m[0]), int(m[1]), int(m[2]), int(m[3]));
            }
        };
        let det = &(&a * &d) - &(&b * &c);
        let det6 = (0..6).fold(int(1), |acc, _| &acc * &det);
        let moved = moebius_transform(&form, &a, &b, &c, &d);
        let expected = &det6 * &quadratic_invariant(&form);
        assert!(
            quadratic_invariant(&moved) == expected,
            "equivariance must hold exactly"
        );
    }
    println!("c12 pass: null cone on 10 sixth powers; equivariance on 10 substitutions");
}
