//! The seventh derivative solved out of the equation, plus the raw
//! expression for back-substitution checks.

use crate::curve::Jet7;
use crate::error::{Error, Result};

pub const DEFAULT_EPS_SING: f64 = 1e-8;

/// 10 y3^3 y7 - 70 y3^2 y4 y6 - 49 y3^2 y5^2 + 280 y3 y4^2 y5 - 175 y4^4.
pub fn ode_expression(y3: f64, y4: f64, y5: f64, y6: f64, y7: f64) -> f64 {
    10.0 * y3.powi(3) * y7 - 70.0 * y3.powi(2) * y4 * y6 - 49.0 * y3.powi(2) * y5 * y5
        + 280.0 * y3 * y4 * y4 * y5
        - 175.0 * y4.powi(4)
}

/// Solves the equation for y7 from the derivatives (y3, y4, y5, y6).
/// The leading coefficient is 10 y3^3, so |y3| below eps_sing is rejected.
pub fn y7_from_derivatives(y3: f64, y4: f64, y5: f64, y6: f64, eps_sing: f64) -> Result<f64> {
    if y3.abs() < eps_sing {
        return Err(Error::SingularJet);
    }
    Ok(
        (70.0 * y3 * y3 * y4 * y6 + 49.0 * y3 * y3 * y5 * y5 - 280.0 * y3 * y4 * y4 * y5
            + 175.0 * y4.powi(4))
            / (10.0 * y3.powi(3)),
    )
}

/// Same, reading the derivatives out of a jet (which must reach order 6).
pub fn y7_from_jet(jet: &Jet7, eps_sing: f64) -> Result<f64> {
    if jet.order() < 6 {
        return Err(Error::Invalid(format!(
            "jet carries derivatives only to order {}",
            jet.order()
        )));
    }
    y7_from_derivatives(jet.y[3], jet.y[4], jet.y[5], jet.y[6], eps_sing)
}
