//! Contact vector fields on (x, y, z), the ten-dimensional symmetry algebra,
//! its structure constants and Killing form.
//!
//! A generating function H(x,y,z) induces the field
//! X_H = -(dH/dz) d/dx + (H - z dH/dz) d/dy + (dH/dx + z dH/dy) d/dz,
//! and contraction with the contact form w = dy - z dx recovers H.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;

/// The ten generating functions of the symmetry algebra.
pub fn generators() -> Vec<MultiPoly> {
    [
        "1",
        "x",
        "x^2",
        "y",
        "z",
        "x*z",
        "x^2*z - 2*x*y",
        "z^2",
        "2*y*z - x*z^2",
        "4*x*y*z - 4*y^2 - x^2*z^2",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect()
}

/// A polynomial vector field A d/dx + B d/dy + C d/dz.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContactField {
    pub x: MultiPoly,
    pub y: MultiPoly,
    pub z: MultiPoly,
}

impl ContactField {
    /// Applies the field to a function as a derivation.
    pub fn apply(&self, f: &MultiPoly) -> MultiPoly {
        &(&(&self.x * &f.derivative("x")) + &(&self.y * &f.derivative("y")))
            + &(&self.z * &f.derivative("z"))
    }
}

pub fn field_from_hamiltonian(h: &MultiPoly) -> ContactField {
    let hz = h.derivative("z");
    let z = MultiPoly::var("z");
    ContactField {
        x: -&hz,
        y: h - &(&z * &hz),
        z: &h.derivative("x") + &(&z * &h.derivative("y")),
    }
}

/// Contraction with w = dy - z dx; recovers the generating function.
pub fn omega_contract(v: &ContactField) -> MultiPoly {
    &v.y - &(&MultiPoly::var("z") * &v.x)
}

pub fn commutator(a: &ContactField, b: &ContactField) -> ContactField {
    ContactField {
        x: &a.apply(&b.x) - &b.apply(&a.x),
        y: &a.apply(&b.y) - &b.apply(&a.y),
        z: &a.apply(&b.z) - &b.apply(&a.z),
    }
}

/// Bracket on generating functions, realized as w([X_H, X_G]).
pub fn lagrange_bracket(h: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    omega_contract(&commutator(
        &field_from_hamiltonian(h),
        &field_from_hamiltonian(g),
    ))
}

/// The same bracket by the direct closed-form expression
/// {H,G} = H_x G_z - H_z G_x + (H - z H_z) G_y - (G - z G_z) H_y.
/// Kept as an independent cross-check of `lagrange_bracket`.
pub fn closed_form_bracket(h: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let z = MultiPoly::var("z");
    let (hx, hy, hz) = (h.derivative("x"), h.derivative("y"), h.derivative("z"));
    let (gx, gy, gz) = (g.derivative("x"), g.derivative("y"), g.derivative("z"));
    let a = &(&hx * &gz) - &(&hz * &gx);
    let b = &(h - &(&z * &hz)) * &gy;
    let c = &(g - &(&z * &gz)) * &hy;
    &(&a + &b) - &c
}

/// Coefficients (dx, dy, dz) of the Lie derivative of w = dy - z dx along v:
/// L_v w = d(i_v w) + i_v dw.
pub fn lie_derivative_omega(v: &ContactField) -> (MultiPoly, MultiPoly, MultiPoly) {
    let ivw = omega_contract(v); // B - zA
    (
        &ivw.derivative("x") - &v.z,
        ivw.derivative("y"),
        &ivw.derivative("z") + &v.x,
    )
}

/// L_v w - c*w where c is the dy-coefficient; both returned parts vanish iff
/// v satisfies the contact condition L_v w = c w.
pub fn contact_condition_defect(v: &ContactField) -> (MultiPoly, MultiPoly) {
    let (dx, dy, dz) = lie_derivative_omega(v);
    let z = MultiPoly::var("z");
    (&dx + &(&z * &dy), dz)
}

/// Point-type generating functions are affine in z.
pub fn is_point_type(h: &MultiPoly) -> bool {
    h.degree_in("z") <= 1
}

// ---------------------------------------------------------------------------
// the algebra table
// ---------------------------------------------------------------------------

pub struct AlgebraTable {
    pub basis: Vec<MultiPoly>,
    /// c[i][j] = coefficients of [e_i, e_j] in the basis.
    pub c: Vec<Vec<Vec<Scalar>>>,
    pub killing: Vec<Vec<Scalar>>,
}

fn exps_xyz(p: &MultiPoly) -> Vec<((u32, u32, u32), Scalar)> {
    let vars = p.vars().to_vec();
    let pick = |name: &str| vars.iter().position(|v| v == name);
    let (ix, iy, iz) = (pick("x"), pick("y"), pick("z"));
    p.terms()
        .map(|(m, c)| {
            let get = |i: Option<usize>| i.map(|k| m.0[k]).unwrap_or(0);
            ((get(ix), get(iy), get(iz)), c.clone())
        })
        .collect()
}

/// Exact Gaussian solve of A x = b; A is n_rows x n_cols, returns None when
/// inconsistent. Requires the solution to be unique when it exists.
fn solve_exact(a: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b.iter())
        .map(|(r, v)| {
            let mut row = r.clone();
            row.push(v.clone());
            row
        })
        .collect();
    let mut pivot_row = 0usize;
    let mut pivots = Vec::new();
    for col in 0..cols {
        let Some(r) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, r);
        let inv = m[pivot_row][col].clone().recip();
        for v in m[pivot_row].iter_mut() {
            *v = &*v * &inv;
        }
        for r2 in 0..rows {
            if r2 != pivot_row && !m[r2][col].is_zero() {
                let f = m[r2][col].clone();
                for c in col..=cols {
                    let sub = &m[pivot_row][c] * &f;
                    m[r2][c] = &m[r2][c] - &sub;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    // inconsistency: zero row with nonzero rhs
    for r in pivot_row..rows {
        if !m[r][cols].is_zero() {
            return None;
        }
    }
    if pivots.len() != cols {
        return None; // underdetermined; not expected for a basis
    }
    let mut x = vec![Scalar::zero(); cols];
    for (k, &col) in pivots.iter().enumerate() {
        x[col] = m[k][cols].clone();
    }
    Some(x)
}

/// Determinant of a rational matrix by plain Gaussian elimination.
pub fn det_scalar(mat: &[Vec<Scalar>]) -> Scalar {
    let n = mat.len();
    let mut m: Vec<Vec<Scalar>> = mat.to_vec();
    let mut det = Scalar::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Scalar::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        det = &det * &m[k][k];
        let inv = m[k][k].clone().recip();
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] * &inv;
            for j in k..n {
                let sub = &m[k][j] * &f;
                m[i][j] = &m[i][j] - &sub;
            }
        }
    }
    det
}

/// Signature (positive, negative, zero) of a symmetric rational matrix by
/// exact symmetric Gaussian reduction.
pub fn symmetric_signature(mat: &[Vec<Scalar>]) -> (usize, usize, usize) {
    let n = mat.len();
    let mut m: Vec<Vec<Scalar>> = mat.to_vec();
    let mut start = 0usize;
    while start < n {
        if m[start][start].is_zero() {
            if let Some(j) = (start + 1..n).find(|&j| !m[j][j].is_zero()) {
                // swap basis vectors start <-> j
                m.swap(start, j);
                for row in m.iter_mut() {
                    row.swap(start, j);
                }
            } else if let Some((i, j)) = (start..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !m[i][j].is_zero())
            {
                // hyperbolic pair: e_i += e_j turns the diagonal nonzero
                for k in 0..n {
                    let v = m[j][k].clone();
                    m[i][k] = &m[i][k] + &v;
                }
                for row in m.iter_mut() {
                    let v = row[j].clone();
                    row[i] = &row[i] + &v;
                }
                if i != start {
                    m.swap(start, i);
                    for row in m.iter_mut() {
                        row.swap(start, i);
                    }
                }
            } else {
                break; // all remaining entries vanish
            }
        }
        let inv = m[start][start].clone().recip();
        for i in start + 1..n {
            if m[i][start].is_zero() {
                continue;
            }
            let f = &m[i][start] * &inv;
            for k in 0..n {
                let sub = &m[start][k] * &f;
                m[i][k] = &m[i][k] - &sub;
            }
            for k in 0..n {
                let sub = &m[k][start] * &f;
                m[k][i] = &m[k][i] - &sub;
            }
        }
        start += 1;
    }
    let mut pos = 0;
    let mut neg = 0;
    let mut zero = 0;
    for k in 0..n {
        if m[k][k].is_zero() {
            zero += 1;
        } else if m[k][k].is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
    }
    (pos, neg, zero)
}

pub fn build_algebra_table() -> Result<AlgebraTable> {
    let basis = generators();
    let n = basis.len();
    // union monomial list over (x,y,z)
    let mut monos: Vec<(u32, u32, u32)> = Vec::new();
    let coeff_maps: Vec<Vec<((u32, u32, u32), Scalar)>> = basis.iter().map(exps_xyz).collect();
    for cm in &coeff_maps {
        for (m, _) in cm {
            if !monos.contains(m) {
                monos.push(*m);
            }
        }
    }
    monos.sort();
    let to_vec = |p: &MultiPoly| -> Option<Vec<Scalar>> {
        let mut v = vec![Scalar::zero(); monos.len()];
        for (m, c) in exps_xyz(p) {
            let i = monos.iter().position(|w| *w == m)?;
            v[i] = c;
        }
        Some(v)
    };
    // matrix with monomial rows and basis columns
    let mut a = vec![vec![Scalar::zero(); n]; monos.len()];
    for (j, p) in basis.iter().enumerate() {
        let v = to_vec(p).expect("basis monomials are in the union");
        for (i, s) in v.into_iter().enumerate() {
            a[i][j] = s;
        }
    }
    let mut c = vec![vec![vec![Scalar::zero(); n]; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let br = lagrange_bracket(&basis[i], &basis[j]);
            let bv = to_vec(&br).ok_or(Error::ClosureFailure)?;
            let sol = solve_exact(&a, &bv).ok_or(Error::ClosureFailure)?;
            for (k, s) in sol.into_iter().enumerate() {
                c[i][j][k] = s.clone();
                c[j][i][k] = -s;
            }
        }
    }
    let mut killing = vec![vec![Scalar::zero(); n]; n];
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        for j in 0..n {
            let mut s = Scalar::zero();
            for p in 0..n {
                for q in 0..n {
                    if !c[i][p][q].is_zero() && !c[j][q][p].is_zero() {
                        s += &c[i][p][q] * &c[j][q][p];
                    }
                }
            }
            killing[i][j] = s;
        }
    }
    Ok(AlgebraTable { basis, c, killing })
}

impl AlgebraTable {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn bracket_coeffs(&self, i: usize, j: usize) -> &[Scalar] {
        &self.c[i][j]
    }

    /// Verifies the Jacobi identity on the structure constants.
    pub fn jacobi_holds(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut s = Scalar::zero();
                        for m in 0..n {
                            s += &(&self.c[j][k][m] * &self.c[i][m][l])
                                + &(&(&self.c[k][i][m] * &self.c[j][m][l])
                                    + &(&self.c[i][j][m] * &self.c[k][m][l]));
                        }
                        if !s.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn killing_det(&self) -> Scalar {
        det_scalar(&self.killing)
    }

    pub fn killing_signature(&self) -> (usize, usize, usize) {
        symmetric_signature(&self.killing)
    }
}
