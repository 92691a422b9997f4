//! Text formats: curve JSON, jet JSON, fit reports, trajectory CSV, SVG plots.
//!
//! Everything here is plain text so artifacts diff cleanly.  Polynomials and
//! rational functions travel in their canonical display form and are parsed
//! back with the same grammar, so any curve printed by one command is valid
//! input to another.

use serde_json::{json, Value};

use crate::curve::{ImplicitCurve, Jet7, ParametricCurve};
use crate::error::{Error, Result};
use crate::numeric::fit::FitResult;
use crate::numeric::integrate::Trajectory;
use crate::numeric::roots::roots_of_square_free;
use crate::poly::MultiPoly;
use crate::ratfunc::parse_ratfunc;
use crate::scalar::{self, to_f64};
use crate::univar;

// ---------------------------------------------------------------------------
// curves
// ---------------------------------------------------------------------------

/// A curve read from JSON: either branch of the wire format.
pub enum CurveInput {
    Parametric(ParametricCurve),
    Implicit(ImplicitCurve),
}

pub fn parametric_to_json(c: &ParametricCurve) -> Value {
    json!({ "parametric": { "x": c.x.to_string(), "y": c.y.to_string() } })
}

pub fn implicit_to_json(c: &ImplicitCurve) -> Value {
    json!({ "implicit": c.f.to_string() })
}

pub fn curve_from_json(v: &Value) -> Result<CurveInput> {
    if let Some(p) = v.get("parametric") {
        let get = |k: &str| -> Result<&str> {
            p.get(k)
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Invalid(format!("parametric curve needs a string field {k:?}")))
        };
        let x = parse_ratfunc(get("x")?)?;
        let y = parse_ratfunc(get("y")?)?;
        return Ok(CurveInput::Parametric(ParametricCurve::new(x, y)?));
    }
    if let Some(f) = v.get("implicit") {
        let text = f
            .as_str()
            .ok_or_else(|| Error::Invalid("implicit curve must be a string".into()))?;
        return Ok(CurveInput::Implicit(ImplicitCurve::new(text.parse::<MultiPoly>()?)?));
    }
    Err(Error::Invalid(
        "curve JSON needs a \"parametric\" or \"implicit\" key".into(),
    ))
}

pub fn curve_from_str(s: &str) -> Result<CurveInput> {
    curve_from_json(&serde_json::from_str::<Value>(s)?)
}

// ---------------------------------------------------------------------------
// jets and fit reports
// ---------------------------------------------------------------------------

pub fn jet_to_json(j: &Jet7) -> Value {
    json!({ "x0": j.x0, "y": j.y })
}

pub fn jet_from_json(v: &Value) -> Result<Jet7> {
    let x0 = v
        .get("x0")
        .and_then(Value::as_f64)
        .ok_or_else(|| Error::Invalid("jet JSON needs a numeric \"x0\"".into()))?;
    let y = v
        .get("y")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Invalid("jet JSON needs an array \"y\"".into()))?
        .iter()
        .map(|e| e.as_f64().ok_or_else(|| Error::Invalid("jet entries must be numbers".into())))
        .collect::<Result<Vec<f64>>>()?;
    if y.is_empty() {
        return Err(Error::Invalid("jet JSON has an empty \"y\" array".into()));
    }
    Ok(Jet7 { x0, y })
}

pub fn jet_from_str(s: &str) -> Result<Jet7> {
    jet_from_json(&serde_json::from_str::<Value>(s)?)
}

pub fn fit_to_json(r: &FitResult) -> Value {
    let mut obj = serde_json::Map::new();
    for (i, c) in r.params.c.iter().enumerate() {
        obj.insert(format!("c{}", i + 1), json!(to_f64(c)));
    }
    obj.insert("residuals".into(), json!(r.residuals.to_vec()));
    obj.insert("iterations".into(), json!(r.iterations));
    Value::Object(obj)
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

/// One row per accepted step: x, y, y', ..., y^(6).
pub fn trajectory_to_csv(t: &Trajectory) -> String {
    let mut out = String::from("x,y,y1,y2,y3,y4,y5,y6\n");
    for (x, state) in &t.points {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            x, state[0], state[1], state[2], state[3], state[4], state[5], state[6]
        ));
    }
    out
}

/// One row per kept sample of a parametrization: t, x, y.
pub fn samples_to_csv(samples: &[(f64, f64, f64)]) -> String {
    let mut out = String::from("t,x,y\n");
    for (t, x, y) in samples {
        out.push_str(&format!("{t},{x},{y}\n"));
    }
    out
}

// ---------------------------------------------------------------------------
// SVG plots of rational parametrizations
// ---------------------------------------------------------------------------

pub struct PlotOptions {
    pub t_min: f64,
    pub t_max: f64,
    pub samples: usize,
    /// [x_min, x_max, y_min, y_max]; autoscaled from the samples when absent.
    pub viewport: Option<[f64; 4]>,
    pub width: u32,
    pub height: u32,
}

impl Default for PlotOptions {
    fn default() -> Self {
        PlotOptions {
            t_min: -8.0,
            t_max: 8.0,
            samples: 1600,
            viewport: None,
            width: 640,
            height: 480,
        }
    }
}

fn dense_f64(p: &MultiPoly, var: &str) -> Result<Vec<f64>> {
    let c = univar::to_dense(p, var)?;
    Ok(c.iter().map(to_f64).collect())
}

fn horner(c: &[f64], t: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &a| acc * t + a)
}

/// Real roots of the two denominators inside (t_min, t_max), merged and sorted.
/// These are the parameter values where a branch runs off to infinity, so the
/// sampled polyline has to break there.
fn denominator_breaks(curve: &ParametricCurve, t_min: f64, t_max: f64) -> Result<Vec<f64>> {
    let var = curve.parameter();
    let mut breaks = Vec::new();
    for den in [curve.x.den(), curve.y.den()] {
        let c = dense_f64(den, var)?;
        if c.len() <= 1 {
            continue;
        }
        for r in roots_of_square_free(&c) {
            if r.im.abs() <= 1e-9 * (1.0 + r.re.abs()) && r.re > t_min && r.re < t_max {
                breaks.push(r.re);
            }
        }
    }
    breaks.sort_by(f64::total_cmp);
    breaks.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    Ok(breaks)
}

/// Samples the parametrization on a uniform t-grid, skipping the immediate
/// neighborhood of each denominator root.  Returns (t, x, y) triples with
/// every coordinate finite.
pub fn sample_curve(curve: &ParametricCurve, opts: &PlotOptions) -> Result<Vec<(f64, f64, f64)>> {
    if !(opts.t_max > opts.t_min) || opts.samples < 2 {
        return Err(Error::Invalid("plot range must be nonempty with at least two samples".into()));
    }
    let var = curve.parameter();
    let xn = dense_f64(curve.x.num(), var)?;
    let xd = dense_f64(curve.x.den(), var)?;
    let yn = dense_f64(curve.y.num(), var)?;
    let yd = dense_f64(curve.y.den(), var)?;
    let breaks = denominator_breaks(curve, opts.t_min, opts.t_max)?;
    let step = (opts.t_max - opts.t_min) / (opts.samples - 1) as f64;
    let guard = 0.5 * step;

    let mut out = Vec::with_capacity(opts.samples);
    for i in 0..opts.samples {
        let t = opts.t_min + step * i as f64;
        if breaks.iter().any(|b| (t - b).abs() < guard) {
            continue;
        }
        let dx = horner(&xd, t);
        let dy = horner(&yd, t);
        if dx.abs() < 1e-12 || dy.abs() < 1e-12 {
            continue;
        }
        let x = horner(&xn, t) / dx;
        let y = horner(&yn, t) / dy;
        if x.is_finite() && y.is_finite() {
            out.push((t, x, y));
        }
    }
    Ok(out)
}

/// Trimmed bounding box: middle 96% of each coordinate, padded by 8%, so a
/// branch heading for an asymptote does not flatten the interesting part.
fn autoscale(samples: &[(f64, f64, f64)]) -> [f64; 4] {
    let quantiles = |mut v: Vec<f64>| -> (f64, f64) {
        v.sort_by(f64::total_cmp);
        let n = v.len();
        let lo = v[(n as f64 * 0.02) as usize];
        let hi = v[((n as f64 * 0.98) as usize).min(n - 1)];
        (lo, hi)
    };
    let (x_lo, x_hi) = quantiles(samples.iter().map(|s| s.1).collect());
    let (y_lo, y_hi) = quantiles(samples.iter().map(|s| s.2).collect());
    let pad = |lo: f64, hi: f64| -> (f64, f64) {
        let w = (hi - lo).max(1e-6);
        (lo - 0.08 * w, hi + 0.08 * w)
    };
    let (x0, x1) = pad(x_lo, x_hi);
    let (y0, y1) = pad(y_lo, y_hi);
    [x0, x1, y0, y1]
}

/// Cuts the sample list into polyline segments: a segment ends at every
/// denominator break (gap in t) and whenever the curve leaves the viewport.
fn segments(samples: &[(f64, f64, f64)], viewport: [f64; 4], t_gap: f64) -> Vec<Vec<(f64, f64)>> {
    let [x0, x1, y0, y1] = viewport;
    let inside = |x: f64, y: f64| x >= x0 && x <= x1 && y >= y0 && y <= y1;
    let mut segs: Vec<Vec<(f64, f64)>> = Vec::new();
    let mut current: Vec<(f64, f64)> = Vec::new();
    let mut last_t = f64::NEG_INFINITY;
    for &(t, x, y) in samples {
        let gap = t - last_t > t_gap;
        last_t = t;
        if !inside(x, y) || gap {
            if current.len() >= 2 {
                segs.push(std::mem::take(&mut current));
            } else {
                current.clear();
            }
            if !inside(x, y) {
                continue;
            }
        }
        current.push((x, y));
    }
    if current.len() >= 2 {
        segs.push(current);
    }
    segs
}

/// Renders the real branches of a parametrized curve as SVG polylines and
/// returns the document together with the kept samples.
pub fn plot_svg(curve: &ParametricCurve, opts: &PlotOptions) -> Result<(String, Vec<(f64, f64, f64)>)> {
    let samples = sample_curve(curve, opts)?;
    if samples.len() < 2 {
        return Err(Error::Invalid("no real samples in the requested parameter range".into()));
    }
    let viewport = opts.viewport.unwrap_or_else(|| autoscale(&samples));
    let [vx0, vx1, vy0, vy1] = viewport;
    if !(vx1 > vx0) || !(vy1 > vy0) {
        return Err(Error::Invalid("viewport must have positive width and height".into()));
    }
    let step = (opts.t_max - opts.t_min) / (opts.samples - 1) as f64;
    let segs = segments(&samples, viewport, 1.5 * step);

    let (w, h) = (opts.width as f64, opts.height as f64);
    let margin = 10.0;
    let sx = (w - 2.0 * margin) / (vx1 - vx0);
    let sy = (h - 2.0 * margin) / (vy1 - vy0);
    let px = |x: f64| margin + (x - vx0) * sx;
    let py = |y: f64| h - margin - (y - vy0) * sy;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
        opts.width, opts.height, opts.width, opts.height
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    // axes, when they cross the viewport
    if vx0 < 0.0 && vx1 > 0.0 {
        svg.push_str(&format!(
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#ccc\"/>\n",
            px(0.0), py(vy0), px(0.0), py(vy1)
        ));
    }
    if vy0 < 0.0 && vy1 > 0.0 {
        svg.push_str(&format!(
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#ccc\"/>\n",
            px(vx0), py(0.0), px(vx1), py(0.0)
        ));
    }
    for seg in &segs {
        let pts: Vec<String> = seg.iter().map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y))).collect();
        svg.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"#1f4e95\" stroke-width=\"1.5\" points=\"{}\"/>\n",
            pts.join(" ")
        ));
    }
    svg.push_str("</svg>\n");
    Ok((svg, samples))
}

/// Number of `<polyline>` elements in an SVG document produced here.
pub fn polyline_count(svg: &str) -> usize {
    svg.matches("<polyline").count()
}

// ---------------------------------------------------------------------------

pub fn scalar_to_json(s: &crate::scalar::Scalar) -> Value {
    json!(scalar::fmt_scalar(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::canonical_curve;
    use crate::numeric::integrate::{integrate, IntegratorConfig};
    use crate::scalar::int;

    #[test]
    fn parametric_curve_json_round_trips() {
        let (_, curve) = canonical_curve();
        let text = parametric_to_json(&curve).to_string();
        match curve_from_str(&text).unwrap() {
            CurveInput::Parametric(back) => {
                assert_eq!(back.x.to_string(), curve.x.to_string());
                assert_eq!(back.y.to_string(), curve.y.to_string());
            }
            CurveInput::Implicit(_) => panic!("wrong branch"),
        }
    }

    #[test]
    fn implicit_curve_json_round_trips() {
        let (curve, _) = canonical_curve();
        let text = implicit_to_json(&curve).to_string();
        match curve_from_str(&text).unwrap() {
            CurveInput::Implicit(back) => assert_eq!(back.f.to_string(), curve.f.to_string()),
            CurveInput::Parametric(_) => panic!("wrong branch"),
        }
    }

    #[test]
    fn jet_json_round_trips() {
        let jet = Jet7 { x0: 0.25, y: vec![1.0, -2.0, 0.5, 3.0, -4.0, 5.0, -6.0] };
        let back = jet_from_str(&jet_to_json(&jet).to_string()).unwrap();
        assert_eq!(back.x0, jet.x0);
        assert_eq!(back.y, jet.y);
    }

    #[test]
    fn malformed_curve_json_is_rejected() {
        assert!(curve_from_str("{\"implicit\": 7}").is_err());
        assert!(curve_from_str("{\"parametric\": {\"x\": \"t\"}}").is_err());
        assert!(curve_from_str("{}").is_err());
        assert!(curve_from_str("not json").is_err());
    }

    #[test]
    fn trajectory_csv_has_one_row_per_step() {
        let (curve, _) = canonical_curve();
        let jet = crate::curve::implicit_jet(&curve, &int(0), &int(0), 6).unwrap();
        let traj = integrate(&jet, 0.1, &IntegratorConfig::default()).unwrap();
        let csv = trajectory_to_csv(&traj);
        let lines: Vec<&str> = csv.trim_end().lines().collect();
        assert_eq!(lines[0], "x,y,y1,y2,y3,y4,y5,y6");
        assert_eq!(lines.len(), traj.points.len() + 1);
        assert!(lines[1..].iter().all(|l| l.split(',').count() == 8));
    }

    #[test]
    fn plot_splits_at_a_pole_and_stays_inside_the_viewport() {
        // x = 1/t has a pole at t = 0, so the picture must be two polylines.
        let curve = ParametricCurve::new(
            parse_ratfunc("1/t").unwrap(),
            parse_ratfunc("t").unwrap(),
        )
        .unwrap();
        let opts = PlotOptions {
            t_min: -2.0,
            t_max: 2.0,
            samples: 400,
            viewport: Some([-5.0, 5.0, -3.0, 3.0]),
            ..PlotOptions::default()
        };
        let (svg, samples) = plot_svg(&curve, &opts).unwrap();
        assert!(polyline_count(&svg) >= 2, "pole at t=0 must break the polyline");
        assert!(samples.iter().all(|(t, _, _)| t.abs() > 1e-6));
        // pixel coordinates stay inside the canvas
        for chunk in svg.split("points=\"").skip(1) {
            let pts = chunk.split('"').next().unwrap();
            for pair in pts.split_whitespace() {
                let (a, b) = pair.split_once(',').unwrap();
                let (a, b): (f64, f64) = (a.parse().unwrap(), b.parse().unwrap());
                assert!((-0.5..=640.5).contains(&a) && (-0.5..=480.5).contains(&b));
            }
        }
    }

    #[test]
    fn smooth_curve_plots_as_a_single_polyline() {
        let (_, curve) = canonical_curve();
        let opts = PlotOptions { t_min: -1.0, t_max: 1.0, samples: 300, ..PlotOptions::default() };
        let (svg, samples) = plot_svg(&curve, &opts).unwrap();
        assert_eq!(polyline_count(&svg), 1);
        assert_eq!(samples.len(), 300);
        let csv = samples_to_csv(&samples);
        assert_eq!(csv.lines().count(), 301);
        assert_eq!(csv.lines().next().unwrap(), "t,x,y");
    }
}
