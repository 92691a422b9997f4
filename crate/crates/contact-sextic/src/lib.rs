//! Exact symbolic and numeric toolkit around a seventh-order ODE whose
//! solutions are rational sextic curves, together with the ten-dimensional
//! contact symmetry algebra acting on them.
//!
//! The symbolic layer works over arbitrary-precision rationals: sparse
//! multivariate polynomials, univariate gcd and square-free machinery,
//! rational functions, resultants and discriminants, contact vector fields
//! and their brackets, curve families and jet prolongation. The numeric
//! layer provides an adaptive Runge-Kutta integrator, a polynomial root
//! finder and Newton fitting of family parameters to initial data.

pub mod cli;
pub mod contact;
pub mod curve;
pub mod elim;
pub mod error;
pub mod families;
pub mod invariants;
pub mod io;
pub mod numeric;
pub mod poly;
pub mod ratfunc;
pub mod scalar;
pub mod transform;
pub mod univar;
