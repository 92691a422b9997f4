//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 for usage
//! errors (clap), 3 for mathematical-domain errors such as degenerate
//! parameters or singular input.  Set CONTACT_SEXTIC_LOG=debug for tracing.

use std::path::{Path, PathBuf};
use std::process::exit;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::contact::{build_algebra_table, is_point_type};
use crate::curve::{implicit_jet, jet_values_at, verify_solution, Jet7, ParametricCurve};
use crate::elim::resultant;
use crate::error::Error;
use crate::families::{
    canonical_curve, conic_family, contact_family, degree_four_family, general_solution,
    new_curve, new_curve_symbolic, parametrize_conic, seed_curve, uv_pair, uv_pair_symbolic,
    ContactFamilyParams, GeneralSolutionParams, QPData,
};
use crate::invariants::{
    arithmetic_genus, discriminant_is_cube, moebius_transform, quadratic_invariant,
    quartic_is_equianharmonic, singular_points, SexticForm,
};
use crate::io::{self, CurveInput, PlotOptions};
use crate::numeric::fit::{fit_parameters, FitConfig};
use crate::numeric::integrate::{integrate, IntegratorConfig, TrajectoryStatus};
use crate::poly::MultiPoly;
use crate::scalar::{fmt_scalar, int, parse_scalar, ratio, Scalar};
use crate::transform::{
    apply_contact_flow, apply_point_transformation, contact_identity_holds,
    ContactFlowGenerator, ContactFlowParams, PointTransformationParams,
};
use crate::univar;

#[derive(Parser)]
#[command(name = "contact-sextic", version, about = "Exact and numeric tools for a seventh-order ODE, its solution curves, and its contact symmetries")]
struct Cli {
    /// Print the full report as JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Override the default numeric tolerance of the subcommand.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Write the command's main artifact (curve, jet, CSV, SVG) to this path.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check that a family member or a supplied parametrization solves the equation exactly.
    Verify(VerifyArgs),
    /// Print the ten-dimensional symmetry algebra: bracket table, Killing form, diagnostics.
    Algebra,
    /// Apply a point transformation or a contact flow to a parametrized curve.
    Transform(TransformArgs),
    /// Eliminate z from the implicit pair and factor the eliminant.
    Resultant(ResultantArgs),
    /// Singular points, discriminant structure, and sextic-form invariants.
    Invariants(InvariantsArgs),
    /// Integrate the equation numerically from a 6-jet.
    Integrate(IntegrateArgs),
    /// Recover the seven family parameters from a 6-jet by Newton iteration.
    Fit(FitArgs),
    /// List the built-in families, build members, or take exact jets along them.
    Family(FamilyArgs),
    /// Render a parametrized curve or a named family member as an SVG.
    Plot(PlotArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    /// Seed solution x = 1/(t^2+1), y = -t^3/(t^2+1)^2.
    Seed,
    /// Canonical sextic and its parametrization.
    Canform,
    /// Seven-parameter solution family; params {"c": [c1..c7]}.
    General,
    /// Curves built from quartic data and a shear; params {"b": b, "bs": [b0..b6]}.
    Contact,
    /// Degree-six eliminant factor; params {"b": b}.
    #[value(name = "new_curve")]
    NewCurve,
    /// Implicit (u, v)-style quartic member; params {"q": quadratic, "p": quartic}.
    Degree4,
    /// Conics y^2 = c1 x^2 + c2 xy + c3 y + c4 x + c5; params {"c": [c1..c5]}.
    Conic,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlowName {
    H8,
    H9,
    H10,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    /// Member parameters as JSON (see `family list` for schemas).
    #[arg(long)]
    params: Option<String>,
    /// Curve JSON file with a "parametric" entry to verify directly.
    #[arg(long)]
    curve: Option<PathBuf>,
    /// Check N randomized members of the chosen family instead of one.
    #[arg(long)]
    random: Option<u32>,
}

#[derive(Args)]
struct TransformArgs {
    /// Curve JSON file with a "parametric" entry.
    #[arg(long)]
    curve: PathBuf,
    /// Point transformation c1,...,c7 (comma-separated rationals).
    #[arg(long)]
    point: Option<String>,
    /// Contact flow generator.
    #[arg(long, value_enum)]
    flow: Option<FlowName>,
    /// Flow parameter.
    #[arg(long, default_value = "1")]
    param: String,
}

#[derive(Args)]
struct ResultantArgs {
    /// Concrete deformation value; keeps b symbolic when omitted.
    #[arg(long)]
    b: Option<String>,
    /// Quadratic Q(x).
    #[arg(long, default_value = "0")]
    q: String,
    /// Quartic P(x) with one simple and one triple root.
    #[arg(long, default_value = "x (x - 1)^3")]
    p: String,
}

#[derive(Args)]
struct InvariantsArgs {
    /// Curve JSON file with an "implicit" entry.
    #[arg(long)]
    curve: Option<PathBuf>,
    /// A polynomial of degree <= 6 in x, treated as a binary sextic form.
    #[arg(long)]
    sextic: Option<String>,
    /// Integer substitution a,b,c,d for x -> (a x + b)/(c x + d) on the form.
    #[arg(long)]
    moebius: Option<String>,
}

#[derive(Args)]
struct IntegrateArgs {
    /// Jet JSON file {"x0": ..., "y": [y, y', ..., y^(6)]}.
    #[arg(long)]
    data: PathBuf,
    /// Target x value.
    #[arg(long, allow_hyphen_values = true)]
    to: f64,
}

#[derive(Args)]
struct FitArgs {
    /// Jet JSON file {"x0": ..., "y": [y, y', ..., y^(6)]}.
    #[arg(long)]
    data: PathBuf,
    /// Initial guess as JSON {"c": [c1..c7]}; identity when omitted.
    #[arg(long)]
    guess: Option<String>,
    /// Iteration budget.
    #[arg(long, default_value_t = 25)]
    max_iter: usize,
}

#[derive(Args)]
struct FamilyArgs {
    #[command(subcommand)]
    action: FamilyAction,
}

#[derive(Subcommand)]
enum FamilyAction {
    /// Names and parameter schemas of the built-in families.
    List,
    /// Construct a member and print it as curve JSON.
    Build {
        #[arg(long, value_enum)]
        name: FamilyName,
        #[arg(long)]
        params: Option<String>,
    },
    /// Exact jet of a member: derivatives of y in x up to the given order.
    Jet {
        #[arg(long, value_enum)]
        name: FamilyName,
        #[arg(long)]
        params: Option<String>,
        /// Parameter value t0 for parametrized families, or "x0,y0" for canform.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
}

#[derive(Args)]
struct PlotArgs {
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    /// Curve JSON file with a "parametric" entry.
    #[arg(long)]
    curve: Option<PathBuf>,
    /// Single named parameter, e.g. b=1/2. Repeatable.
    #[arg(long = "param")]
    param: Vec<String>,
    /// Full parameter JSON, same schema as `family build --params`.
    #[arg(long)]
    params: Option<String>,
    /// Parameter range a:b to sample.
    #[arg(long, default_value = "-8:8", allow_hyphen_values = true)]
    t_range: String,
    #[arg(long, default_value_t = 1600)]
    samples: usize,
    /// Viewport x0:x1:y0:y1; autoscaled from the samples when omitted.
    #[arg(long, allow_hyphen_values = true)]
    viewport: Option<String>,
}

// ---------------------------------------------------------------------------
// outcome plumbing
// ---------------------------------------------------------------------------

enum Failure {
    Usage(String),
    Math(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Math(e)
    }
}

type CResult<T> = std::result::Result<T, Failure>;

struct Report {
    ok: bool,
    payload: Value,
}

impl Report {
    fn pass(payload: Value) -> Self {
        Report { ok: true, payload }
    }
    fn checked(ok: bool, payload: Value) -> Self {
        Report { ok, payload }
    }
}

fn usage<T>(msg: impl Into<String>) -> CResult<T> {
    Err(Failure::Usage(msg.into()))
}

pub fn run() {
    let _ = env_logger::Builder::from_env(env_logger::Env::new().filter("CONTACT_SEXTIC_LOG"))
        .try_init();
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(report) => {
            emit(&cli, &report.payload);
            exit(if report.ok { 0 } else { 1 });
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            exit(2);
        }
        Err(Failure::Math(e)) => {
            if cli.json {
                emit(&cli, &json!({ "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            exit(3);
        }
    }
}

// Writes through a locked handle and swallows broken pipes, so that piping
// the report into `head` does not turn exit 0 into a panic.
fn emit(cli: &Cli, payload: &Value) {
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if cli.json {
        let text = serde_json::to_string_pretty(payload).expect("payload serializes");
        let _ = writeln!(out, "{text}");
        return;
    }
    match payload {
        Value::Object(map) => {
            for (k, v) in map {
                let _ = match v {
                    Value::String(s) => writeln!(out, "{k}: {s}"),
                    other => writeln!(out, "{k}: {other}"),
                };
            }
        }
        other => {
            let _ = writeln!(out, "{other}");
        }
    }
}

fn dispatch(cli: &Cli) -> CResult<Report> {
    match &cli.cmd {
        Cmd::Verify(a) => cmd_verify(cli, a),
        Cmd::Algebra => cmd_algebra(),
        Cmd::Transform(a) => cmd_transform(cli, a),
        Cmd::Resultant(a) => cmd_resultant(a),
        Cmd::Invariants(a) => cmd_invariants(cli, a),
        Cmd::Integrate(a) => cmd_integrate(cli, a),
        Cmd::Fit(a) => cmd_fit(cli, a),
        Cmd::Family(a) => cmd_family(cli, a),
        Cmd::Plot(a) => cmd_plot(cli, a),
    }
}

// ---------------------------------------------------------------------------
// parameter parsing helpers
// ---------------------------------------------------------------------------

fn scalar_from_value(v: &Value) -> CResult<Scalar> {
    match v {
        Value::String(s) => Ok(parse_scalar(s)?),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(int(i))
            } else {
                usage(format!("parameter {n} is not an integer; pass rationals as strings like \"1/2\""))
            }
        }
        other => usage(format!("expected a rational parameter, found {other}")),
    }
}

fn scalars_from_key(params: &Value, key: &str, n: usize) -> CResult<Vec<Scalar>> {
    let arr = params
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| Failure::Usage(format!("params JSON needs an array {key:?} of {n} rationals")))?;
    if arr.len() != n {
        return usage(format!("{key:?} must hold exactly {n} entries, found {}", arr.len()));
    }
    arr.iter().map(scalar_from_value).collect()
}

fn params_value(text: &Option<String>) -> CResult<Value> {
    match text {
        None => Ok(json!({})),
        Some(t) => serde_json::from_str(t)
            .map_err(|e| Failure::Usage(format!("--params is not valid JSON: {e}"))),
    }
}

fn seven(v: Vec<Scalar>) -> [Scalar; 7] {
    v.try_into().expect("length checked above")
}

fn general_params(params: &Value) -> CResult<GeneralSolutionParams> {
    if params.get("c").is_none() {
        return Ok(GeneralSolutionParams::identity());
    }
    Ok(GeneralSolutionParams::new(seven(scalars_from_key(params, "c", 7)?))?)
}

fn contact_params(params: &Value) -> CResult<ContactFamilyParams> {
    let b = match params.get("b") {
        Some(v) => scalar_from_value(v)?,
        None => ratio(1, 2),
    };
    let bs = match params.get("bs") {
        Some(_) => seven(scalars_from_key(params, "bs", 7)?),
        // member that lands on the degree-six eliminant factor
        None => [int(1), int(0), int(-1), int(0), int(0), int(0), int(1)],
    };
    Ok(ContactFamilyParams::new(b, bs)?)
}

fn comma_scalars(text: &str, n: usize, what: &str) -> CResult<Vec<Scalar>> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != n {
        return usage(format!("{what} needs {n} comma-separated rationals, found {}", parts.len()));
    }
    parts
        .iter()
        .map(|p| parse_scalar(p).map_err(Failure::Math))
        .collect()
}

fn read_text(path: &Path) -> CResult<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Math(Error::Io(e)))
}

fn read_parametric(path: &Path) -> CResult<ParametricCurve> {
    match io::curve_from_str(&read_text(path)?)? {
        CurveInput::Parametric(c) => Ok(c),
        CurveInput::Implicit(_) => usage("this command needs a curve with a \"parametric\" entry"),
    }
}

fn write_artifact(path: &Path, text: &str) -> CResult<()> {
    std::fs::write(path, text).map_err(|e| Failure::Math(Error::Io(e)))
}

fn rand_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    ratio(rng.random_range(-9..=9), rng.random_range(1..=4))
}

fn random_general(rng: &mut ChaCha8Rng) -> GeneralSolutionParams {
    loop {
        let c: [Scalar; 7] = std::array::from_fn(|_| rand_scalar(rng));
        if let Ok(p) = GeneralSolutionParams::new(c) {
            return p;
        }
    }
}

fn random_contact(rng: &mut ChaCha8Rng) -> (ContactFamilyParams, ParametricCurve, crate::ratfunc::RationalFunction) {
    loop {
        let b = rand_scalar(rng);
        let bs: [Scalar; 7] = std::array::from_fn(|_| rand_scalar(rng));
        let Ok(p) = ContactFamilyParams::new(b, bs) else { continue };
        if let Ok((curve, z)) = contact_family(&p) {
            return (p, curve, z);
        }
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(cli: &Cli, a: &VerifyArgs) -> CResult<Report> {
    if let Some(path) = &a.curve {
        let curve = read_parametric(path)?;
        let (ok, residual) = verify_solution(&curve)?;
        return Ok(Report::checked(
            ok,
            json!({ "source": path.display().to_string(), "residual": residual.to_string(), "solves": ok }),
        ));
    }
    let Some(family) = a.family else {
        return usage("pass --family NAME or --curve FILE");
    };
    if let Some(n) = a.random {
        return verify_random(cli, family, n);
    }
    let params = params_value(&a.params)?;
    match family {
        FamilyName::Seed => {
            let (ok, residual) = verify_solution(&seed_curve())?;
            Ok(Report::checked(
                ok,
                json!({ "family": "seed", "residual": residual.to_string(), "solves": ok }),
            ))
        }
        FamilyName::Canform => {
            let (implicit, parametric) = canonical_curve();
            let (ok, residual) = verify_solution(&parametric)?;
            let lies = parametric.lies_on(&implicit);
            Ok(Report::checked(
                ok && lies,
                json!({
                    "family": "canform",
                    "residual": residual.to_string(),
                    "solves": ok,
                    "lies_on_implicit": lies,
                }),
            ))
        }
        FamilyName::General => {
            let p = general_params(&params)?;
            let (implicit, parametric) = general_solution(&p)?;
            let (ok, residual) = verify_solution(&parametric)?;
            let lies = parametric.lies_on(&implicit);
            Ok(Report::checked(
                ok && lies,
                json!({
                    "family": "general",
                    "residual": residual.to_string(),
                    "solves": ok,
                    "lies_on_implicit": lies,
                }),
            ))
        }
        FamilyName::Contact => {
            let p = contact_params(&params)?;
            let (curve, z) = contact_family(&p)?;
            let (ok, residual) = verify_solution(&curve)?;
            let identity = contact_identity_holds(&curve, &z);
            Ok(Report::checked(
                ok && identity,
                json!({
                    "family": "contact",
                    "residual": residual.to_string(),
                    "solves": ok,
                    "slope": z.to_string(),
                    "contact_identity": identity,
                }),
            ))
        }
        _ => usage("verify works on seed, canform, general, or contact members"),
    }
}

fn verify_random(cli: &Cli, family: FamilyName, n: u32) -> CResult<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let mut failures = Vec::new();
    match family {
        FamilyName::General => {
            for i in 0..n {
                let p = random_general(&mut rng);
                let (implicit, parametric) = general_solution(&p)?;
                let (ok, _) = verify_solution(&parametric)?;
                if !ok || !parametric.lies_on(&implicit) {
                    failures.push(i);
                }
                log::debug!("general draw {i}: residual zero = {ok}");
            }
        }
        FamilyName::Contact => {
            for i in 0..n {
                let (_, curve, z) = random_contact(&mut rng);
                let (ok, _) = verify_solution(&curve)?;
                if !ok || !contact_identity_holds(&curve, &z) {
                    failures.push(i);
                }
                log::debug!("contact draw {i}: residual zero = {ok}");
            }
        }
        _ => return usage("--random applies to the general and contact families"),
    }
    let ok = failures.is_empty();
    Ok(Report::checked(
        ok,
        json!({
            "family": if family == FamilyName::General { "general" } else { "contact" },
            "checked": n,
            "seed": cli.seed,
            "failures": failures,
            "all_pass": ok,
        }),
    ))
}

// ---------------------------------------------------------------------------
// algebra
// ---------------------------------------------------------------------------

fn combo(coeffs: &[Scalar], names: &[String]) -> String {
    let mut parts = Vec::new();
    for (c, name) in coeffs.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let mag = fmt_scalar(&c.abs());
        let term = if mag == "1" { name.clone() } else { format!("{mag}*{name}") };
        if parts.is_empty() {
            parts.push(if c.is_negative() { format!("-{term}") } else { term });
        } else if c.is_negative() {
            parts.push(format!("- {term}"));
        } else {
            parts.push(format!("+ {term}"));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

fn cmd_algebra() -> CResult<Report> {
    let table = build_algebra_table()?;
    let n = table.dim();
    let names: Vec<String> = (1..=n).map(|i| format!("H{i}")).collect();
    let brackets: Vec<Vec<String>> = (0..n)
        .map(|i| (0..n).map(|j| combo(table.bracket_coeffs(i, j), &names)).collect())
        .collect();
    let killing: Vec<Vec<String>> = table
        .killing
        .iter()
        .map(|row| row.iter().map(fmt_scalar).collect())
        .collect();
    let jacobi = table.jacobi_holds();
    let det = table.killing_det();
    let (pos, neg, zero) = table.killing_signature();
    let point_like = table.basis.iter().filter(|h| is_point_type(h)).count();
    let ok = jacobi && !det.is_zero();
    Ok(Report::checked(
        ok,
        json!({
            "dimension": n,
            "generators": table.basis.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "brackets": brackets,
            "killing": killing,
            "jacobi_identity": jacobi,
            "killing_determinant": fmt_scalar(&det),
            "killing_signature": { "positive": pos, "negative": neg, "zero": zero },
            "point_type_generators": point_like,
        }),
    ))
}

// ---------------------------------------------------------------------------
// transform
// ---------------------------------------------------------------------------

fn cmd_transform(cli: &Cli, a: &TransformArgs) -> CResult<Report> {
    let curve = read_parametric(&a.curve)?;
    let (result, extra) = match (&a.point, &a.flow) {
        (Some(text), None) => {
            let c = seven(comma_scalars(text, 7, "--point")?);
            let p = PointTransformationParams::new(c)?;
            (apply_point_transformation(&curve, &p)?, json!({}))
        }
        (None, Some(flow)) => {
            let generator = match flow {
                FlowName::H8 => ContactFlowGenerator::H8,
                FlowName::H9 => ContactFlowGenerator::H9,
                FlowName::H10 => ContactFlowGenerator::H10,
            };
            let parameter = parse_scalar(&a.param)?;
            let (moved, z) = apply_contact_flow(&curve, &ContactFlowParams { generator, parameter })?;
            let identity = contact_identity_holds(&moved, &z);
            (moved, json!({ "slope": z.to_string(), "contact_identity": identity }))
        }
        _ => return usage("pass exactly one of --point or --flow"),
    };
    let curve_json = io::parametric_to_json(&result);
    if let Some(path) = &cli.out {
        write_artifact(path, &format!("{curve_json}\n"))?;
    }
    let mut payload = json!({ "curve": curve_json });
    merge(&mut payload, extra);
    Ok(Report::pass(payload))
}

fn merge(base: &mut Value, extra: Value) {
    if let (Value::Object(b), Value::Object(e)) = (base, extra) {
        for (k, v) in e {
            b.insert(k, v);
        }
    }
}

// ---------------------------------------------------------------------------
// resultant
// ---------------------------------------------------------------------------

fn cmd_resultant(a: &ResultantArgs) -> CResult<Report> {
    let q: MultiPoly = a.q.parse()?;
    let p: MultiPoly = a.p.parse()?;
    let standard_fiber = a.q == "0" && a.p == "x (x - 1)^3";
    let (r, factor): (MultiPoly, Option<MultiPoly>) = match &a.b {
        None => {
            let (u, v) = uv_pair_symbolic(&q, &p)?;
            let r = resultant(&u, &v, "z")?;
            let factor = standard_fiber.then(new_curve_symbolic);
            (r, factor)
        }
        Some(text) => {
            let b = parse_scalar(text)?;
            let data = QPData::new(q, p, b.clone())?;
            let (u, v) = uv_pair(&data);
            let r = resultant(&u, &v, "z")?;
            let factor = if standard_fiber { Some(new_curve(&b)?.f) } else { None };
            (r, factor)
        }
    };
    let mut payload = json!({ "resultant": r.to_string() });
    let mut ok = true;
    if let Some(sextic) = factor {
        match r.exact_div(&sextic) {
            Ok(cofactor) => {
                merge(
                    &mut payload,
                    json!({
                        "sextic_factor": sextic.to_string(),
                        "cofactor": cofactor.to_string(),
                        "divisible": true,
                        "cofactor_nonzero": !cofactor.is_zero(),
                    }),
                );
            }
            Err(_) => {
                ok = false;
                merge(&mut payload, json!({ "sextic_factor": sextic.to_string(), "divisible": false }));
            }
        }
    }
    Ok(Report::checked(ok, payload))
}

// ---------------------------------------------------------------------------
// invariants
// ---------------------------------------------------------------------------

fn cmd_invariants(cli: &Cli, a: &InvariantsArgs) -> CResult<Report> {
    match (&a.curve, &a.sextic) {
        (Some(path), None) => invariants_of_curve(cli, path),
        (None, Some(text)) => invariants_of_form(a, text),
        _ => usage("pass exactly one of --curve or --sextic"),
    }
}

fn invariants_of_curve(cli: &Cli, path: &Path) -> CResult<Report> {
    let CurveInput::Implicit(curve) = io::curve_from_str(&read_text(path)?)? else {
        return usage("invariants --curve needs an \"implicit\" entry");
    };
    let tol = cli.tol.unwrap_or(1e-10);
    let points = singular_points(&curve)?;
    let singular: Vec<Value> = points
        .iter()
        .map(|s| {
            let exact = s.exact.as_ref().map(|(x, y)| json!([fmt_scalar(x), fmt_scalar(y)]));
            json!({ "x": s.x, "y": s.y, "multiplicity": s.multiplicity, "exact": exact })
        })
        .collect();
    let d = curve.f.total_degree() as u64;
    let deltas: Vec<u64> = points
        .iter()
        .map(|s| (s.multiplicity as u64) * (s.multiplicity as u64 - 1) / 2)
        .collect();
    let mut payload = json!({
        "degree": d,
        "singular_points": singular,
        "genus_bound_from_affine_multiplicities": arithmetic_genus(d, &deltas),
    });
    if curve.f.degree_in("y") == 3 {
        if let Some(quartic) = discriminant_is_cube(&curve)? {
            let equianharmonic = quartic_is_equianharmonic(&quartic, tol)?;
            let real = univar::count_real_roots(&quartic, "x")?;
            merge(
                &mut payload,
                json!({
                    "discriminant_is_cube_of": quartic.to_string(),
                    "real_roots_of_quartic": real,
                    "equianharmonic": equianharmonic,
                }),
            );
        } else {
            merge(&mut payload, json!({ "discriminant_is_cube_of": Value::Null }));
        }
    }
    Ok(Report::pass(payload))
}

fn invariants_of_form(a: &InvariantsArgs, text: &str) -> CResult<Report> {
    let poly: MultiPoly = text.parse()?;
    let form = SexticForm::from_poly(&poly, "x")?;
    let inv = quadratic_invariant(&form);
    let mut payload = json!({ "sextic": poly.to_string(), "quadratic_invariant": fmt_scalar(&inv) });
    let mut ok = true;
    if let Some(sub) = &a.moebius {
        let m = comma_scalars(sub, 4, "--moebius")?;
        let det = &(&m[0] * &m[3]) - &(&m[1] * &m[2]);
        if det.is_zero() {
            return Err(Failure::Math(Error::DegenerateMap("ad - bc = 0".into())));
        }
        let moved = moebius_transform(&form, &m[0], &m[1], &m[2], &m[3]);
        let inv_moved = quadratic_invariant(&moved);
        let det6 = (0..6).fold(int(1), |acc, _| &acc * &det);
        let expected = &det6 * &inv;
        let exact = inv_moved == expected;
        ok = exact;
        merge(
            &mut payload,
            json!({
                "transformed": moved.to_poly("x").to_string(),
                "transformed_invariant": fmt_scalar(&inv_moved),
                "determinant": fmt_scalar(&det),
                "equivariance_exact": exact,
            }),
        );
    }
    Ok(Report::checked(ok, payload))
}

// ---------------------------------------------------------------------------
// integrate / fit
// ---------------------------------------------------------------------------

fn cmd_integrate(cli: &Cli, a: &IntegrateArgs) -> CResult<Report> {
    let jet = io::jet_from_str(&read_text(&a.data)?)?;
    let mut cfg = IntegratorConfig::default();
    if let Some(tol) = cli.tol {
        cfg.rtol = tol;
        cfg.atol = tol * 1e-2;
    }
    let traj = integrate(&jet, a.to, &cfg)?;
    if let Some(path) = &cli.out {
        write_artifact(path, &io::trajectory_to_csv(&traj))?;
    }
    let (x, state) = traj.final_point();
    let status = match traj.status {
        TrajectoryStatus::ReachedTarget => "reached-target",
        TrajectoryStatus::SingularityApproached => "singularity-approached",
    };
    Ok(Report::pass(json!({
        "x": x,
        "state": state.to_vec(),
        "steps": traj.points.len() - 1,
        "status": status,
    })))
}

fn cmd_fit(cli: &Cli, a: &FitArgs) -> CResult<Report> {
    let jet = io::jet_from_str(&read_text(&a.data)?)?;
    let guess = general_params(&params_value(&a.guess)?)?;
    let mut cfg = FitConfig::new(guess);
    cfg.max_iter = a.max_iter;
    if let Some(tol) = cli.tol {
        cfg.tol = tol;
    }
    let result = fit_parameters(&jet, &cfg)?;
    log::info!("fit converged in {} iterations", result.iterations);
    let payload = io::fit_to_json(&result);
    if let Some(path) = &cli.out {
        write_artifact(path, &format!("{payload}\n"))?;
    }
    Ok(Report::pass(payload))
}

// ---------------------------------------------------------------------------
// family
// ---------------------------------------------------------------------------

fn cmd_family(cli: &Cli, a: &FamilyArgs) -> CResult<Report> {
    match &a.action {
        FamilyAction::List => Ok(Report::pass(json!([
            { "name": "seed", "kind": "parametric", "params": {} },
            { "name": "canform", "kind": "implicit + parametric", "params": {} },
            { "name": "general", "kind": "implicit + parametric",
              "params": { "c": "seven rationals, c4 != 0 and c5 + c6 c7 != 0 (default identity)" } },
            { "name": "contact", "kind": "parametric",
              "params": { "b": "shear parameter (default 1/2)", "bs": "seven rationals b0..b6 with b5 != b0 b6" } },
            { "name": "new_curve", "kind": "implicit", "params": { "b": "nonzero rational (default 1/2)" } },
            { "name": "degree4", "kind": "implicit",
              "params": { "q": "quadratic in x", "p": "quartic in x with one simple and one triple root" } },
            { "name": "conic", "kind": "implicit",
              "params": { "c": "five rationals", "point": "optional rational point [x0, y0] to parametrize through" } },
        ]))),
        FamilyAction::Build { name, params } => {
            let params = params_value(params)?;
            let payload = build_family(*name, &params)?;
            if let Some(path) = &cli.out {
                write_artifact(path, &format!("{payload}\n"))?;
            }
            Ok(Report::pass(payload))
        }
        FamilyAction::Jet { name, params, at, order } => {
            let params = params_value(params)?;
            let jet = family_jet(*name, &params, at, *order)?;
            let payload = io::jet_to_json(&jet);
            if let Some(path) = &cli.out {
                write_artifact(path, &format!("{payload}\n"))?;
            }
            Ok(Report::pass(payload))
        }
    }
}

fn build_family(name: FamilyName, params: &Value) -> CResult<Value> {
    Ok(match name {
        FamilyName::Seed => io::parametric_to_json(&seed_curve()),
        FamilyName::Canform => {
            let (implicit, parametric) = canonical_curve();
            let mut v = io::parametric_to_json(&parametric);
            merge(&mut v, io::implicit_to_json(&implicit));
            v
        }
        FamilyName::General => {
            let p = general_params(params)?;
            let (implicit, parametric) = general_solution(&p)?;
            let mut v = io::parametric_to_json(&parametric);
            merge(&mut v, io::implicit_to_json(&implicit));
            v
        }
        FamilyName::Contact => {
            let p = contact_params(params)?;
            let (curve, z) = contact_family(&p)?;
            let mut v = io::parametric_to_json(&curve);
            merge(&mut v, json!({ "slope": z.to_string() }));
            v
        }
        FamilyName::NewCurve => {
            let b = match params.get("b") {
                Some(v) => scalar_from_value(v)?,
                None => ratio(1, 2),
            };
            io::implicit_to_json(&new_curve(&b)?)
        }
        FamilyName::Degree4 => {
            let get_poly = |key: &str, default: &str| -> CResult<MultiPoly> {
                match params.get(key) {
                    Some(Value::String(s)) => Ok(s.parse()?),
                    None => Ok(default.parse()?),
                    Some(other) => usage(format!("{key:?} must be a polynomial string, found {other}")),
                }
            };
            let q = get_poly("q", "0")?;
            let p = get_poly("p", "x (x - 1)^3")?;
            io::implicit_to_json(&degree_four_family(&q, &p)?)
        }
        FamilyName::Conic => {
            let c = seven_or_n(params, "c", 5)?;
            let curve = conic_family(&[c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone(), c[4].clone()])?;
            let mut v = io::implicit_to_json(&curve);
            if params.get("point").is_some() {
                let pt = seven_or_n(params, "point", 2)?;
                let parametric = parametrize_conic(&curve, &pt[0], &pt[1])?;
                merge(&mut v, io::parametric_to_json(&parametric));
            }
            v
        }
    })
}

fn seven_or_n(params: &Value, key: &str, n: usize) -> CResult<Vec<Scalar>> {
    scalars_from_key(params, key, n)
}

fn family_jet(name: FamilyName, params: &Value, at: &str, order: usize) -> CResult<Jet7> {
    if order < 1 || order > 6 {
        return usage("--order must lie between 1 and 6");
    }
    let from_parametric = |curve: &ParametricCurve| -> CResult<Jet7> {
        let t0 = parse_scalar(at)?;
        let ys = jet_values_at(curve, &t0, order)?;
        let (x0, _) = curve.at(&t0)?;
        Ok(Jet7::from_exact(&x0, &ys))
    };
    match name {
        FamilyName::Seed => from_parametric(&seed_curve()),
        FamilyName::General => {
            let p = general_params(params)?;
            let (_, parametric) = general_solution(&p)?;
            from_parametric(&parametric)
        }
        FamilyName::Contact => {
            let p = contact_params(params)?;
            let (curve, _) = contact_family(&p)?;
            from_parametric(&curve)
        }
        FamilyName::Canform => {
            let pt = comma_scalars(at, 2, "--at for canform")?;
            let (implicit, _) = canonical_curve();
            Ok(implicit_jet(&implicit, &pt[0], &pt[1], order)?)
        }
        _ => usage("jets are taken along seed, canform, general, or contact members"),
    }
}

// ---------------------------------------------------------------------------
// plot
// ---------------------------------------------------------------------------

fn split_pair(text: &str, what: &str) -> CResult<(f64, f64)> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 2 {
        return usage(format!("{what} must look like a:b"));
    }
    let lo: f64 = parts[0].trim().parse().map_err(|_| Failure::Usage(format!("{what}: bad number {:?}", parts[0])))?;
    let hi: f64 = parts[1].trim().parse().map_err(|_| Failure::Usage(format!("{what}: bad number {:?}", parts[1])))?;
    Ok((lo, hi))
}

fn kv_params(pairs: &[String]) -> CResult<serde_json::Map<String, Value>> {
    let mut map = serde_json::Map::new();
    for pair in pairs {
        let Some((k, v)) = pair.split_once('=') else {
            return usage(format!("--param must look like name=value, found {pair:?}"));
        };
        map.insert(k.trim().to_string(), Value::String(v.trim().to_string()));
    }
    Ok(map)
}

/// Folds --param key=value pairs into the params JSON: b stays top-level,
/// c1..c7 assemble into "c", b0..b6 into "bs".
fn fold_params(mut base: Value, kv: serde_json::Map<String, Value>) -> CResult<Value> {
    let obj = base.as_object_mut().expect("params JSON is an object");
    let mut c: Vec<Option<Value>> = vec![None; 7];
    let mut bs: Vec<Option<Value>> = vec![None; 7];
    for (k, v) in kv {
        if k == "b" {
            obj.insert("b".into(), v);
        } else if let Some(i) = k.strip_prefix('c').and_then(|s| s.parse::<usize>().ok()) {
            if (1..=7).contains(&i) {
                c[i - 1] = Some(v);
            } else {
                return usage(format!("unknown parameter {k:?}"));
            }
        } else if let Some(i) = k.strip_prefix('b').and_then(|s| s.parse::<usize>().ok()) {
            if i <= 6 {
                bs[i] = Some(v);
            } else {
                return usage(format!("unknown parameter {k:?}"));
            }
        } else {
            return usage(format!("unknown parameter {k:?}"));
        }
    }
    if c.iter().any(Option::is_some) {
        if c.iter().any(Option::is_none) {
            return usage("give all of c1..c7 or none");
        }
        obj.insert("c".into(), Value::Array(c.into_iter().map(Option::unwrap).collect()));
    }
    if bs.iter().any(Option::is_some) {
        if bs.iter().any(Option::is_none) {
            return usage("give all of b0..b6 or none");
        }
        obj.insert("bs".into(), Value::Array(bs.into_iter().map(Option::unwrap).collect()));
    }
    Ok(base)
}

fn plot_source(a: &PlotArgs) -> CResult<ParametricCurve> {
    if let Some(path) = &a.curve {
        return read_parametric(path);
    }
    let Some(family) = a.family else {
        return usage("pass --family NAME or --curve FILE");
    };
    let params = fold_params(params_value(&a.params)?, kv_params(&a.param)?)?;
    match family {
        FamilyName::Seed => Ok(seed_curve()),
        FamilyName::Canform => Ok(canonical_curve().1),
        FamilyName::General => Ok(general_solution(&general_params(&params)?)?.1),
        FamilyName::Contact => Ok(contact_family(&contact_params(&params)?)?.0),
        FamilyName::NewCurve => {
            // the contact member with the standard fiber data traces this curve
            Ok(contact_family(&contact_params(&params)?)?.0)
        }
        _ => usage("plot needs a family with a parametrization"),
    }
}

fn cmd_plot(cli: &Cli, a: &PlotArgs) -> CResult<Report> {
    let curve = plot_source(a)?;
    let (t_min, t_max) = split_pair(&a.t_range, "--t-range")?;
    let viewport = match &a.viewport {
        None => None,
        Some(text) => {
            let parts: Vec<&str> = text.split(':').collect();
            if parts.len() != 4 {
                return usage("--viewport must look like x0:x1:y0:y1");
            }
            let vals: Vec<f64> = parts
                .iter()
                .map(|p| p.trim().parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Failure::Usage("--viewport: bad number".into()))?;
            Some([vals[0], vals[1], vals[2], vals[3]])
        }
    };
    let opts = PlotOptions { t_min, t_max, samples: a.samples, viewport, ..PlotOptions::default() };
    let (svg, samples) = io::plot_svg(&curve, &opts)?;
    let out = cli.out.clone().unwrap_or_else(|| PathBuf::from("curve.svg"));
    write_artifact(&out, &svg)?;
    let csv_path = out.with_extension("csv");
    write_artifact(&csv_path, &io::samples_to_csv(&samples))?;
    Ok(Report::pass(json!({
        "svg": out.display().to_string(),
        "csv": csv_path.display().to_string(),
        "polylines": io::polyline_count(&svg),
        "samples": samples.len(),
    })))
}
