//! Renders two curves to SVG: the canonical curve and the degree-six member
//! with its two finite cusps.  Polylines break at parameter values where a
//! denominator vanishes, and everything is clipped to the viewport.

use contact_sextic::families::{canonical_curve, contact_family, ContactFamilyParams};
use contact_sextic::io::{plot_svg, polyline_count, samples_to_csv, PlotOptions};
use contact_sextic::scalar::{int, ratio};

fn main() {
    let (_, canonical) = canonical_curve();
    let opts = PlotOptions { t_min: -4.0, t_max: 4.0, ..PlotOptions::default() };
    let (svg, samples) = plot_svg(&canonical, &opts).unwrap();
    std::fs::write("canonical.svg", &svg).unwrap();
    println!(
        "canonical.svg: {} samples, {} polyline(s)",
        samples.len(),
        polyline_count(&svg)
    );

    // this member traces the degree-six curve with two finite cusps
    let params = ContactFamilyParams::new(
        ratio(1, 2),
        [int(1), int(0), int(-1), int(0), int(0), int(0), int(1)],
    )
    .unwrap();
    let (member, _) = contact_family(&params).unwrap();
    let opts = PlotOptions {
        t_min: -12.0,
        t_max: 12.0,
        samples: 2400,
        viewport: Some([-0.6, 1.8, -0.8, 0.4]),
        ..PlotOptions::default()
    };
    let (svg, samples) = plot_svg(&member, &opts).unwrap();
    std::fs::write("cusped_sextic.svg", &svg).unwrap();
    std::fs::write("cusped_sextic.csv", samples_to_csv(&samples)).unwrap();
    println!(
        "cusped_sextic.svg: {} samples kept, {} polyline(s)",
        samples.len(),
        polyline_count(&svg)
    );
}
