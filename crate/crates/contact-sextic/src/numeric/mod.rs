//! Floating-point side: root finding, the explicit top-derivative formula,
//! adaptive integration of the seventh-order equation, and Newton fitting of
//! the seven solution parameters to initial data.

pub mod fit;
pub mod integrate;
pub mod roots;
pub mod y7;
