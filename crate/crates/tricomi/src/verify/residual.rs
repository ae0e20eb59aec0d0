//! Central-difference residual scans in the four operator forms.

use crate::{Result, TricomiError};

/// Which form of the operator to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidualForm {
    /// Characteristic (reduced hyperbolic) form on fields of `(l, m)`:
    /// `u_lm - (u_l - u_m)/(6(l - m))`.
    Thyp,
    /// Its formal adjoint on fields of `(l, m)`:
    /// `v_lm + (v_l - v_m)/(6(l - m)) - v/(3(l - m)^2)`.
    Tadjoint,
    /// Physical form on fields of `(x, y)`: `y u_xx + u_yy`.
    Tphys,
    /// Reduced elliptic form in the `(x, s)` chart, `s = 2 y^{3/2}/3`,
    /// applied to fields given as functions of `(x, y)` with `y > 0`:
    /// `u_xx + u_ss + u_s/(3s)`.
    Tell,
}

impl ResidualForm {
    pub fn parse(s: &str) -> Option<ResidualForm> {
        Some(match s.to_ascii_lowercase().as_str() {
            "thyp" => ResidualForm::Thyp,
            "tadjoint" => ResidualForm::Tadjoint,
            "tphys" => ResidualForm::Tphys,
            "tell" => ResidualForm::Tell,
            _ => return None,
        })
    }
}

/// Central-difference residual of `field` under `form` at each point, using
/// step `h`. Points are `(l, m)` pairs for `Thyp`/`Tadjoint` and `(x, y)`
/// pairs for `Tphys`/`Tell`. Evaluation failures anywhere on a stencil are
/// reported as the stencil crossing a singular curve.
pub fn residual_scan<F>(
    form: ResidualForm,
    field: F,
    points: &[(f64, f64)],
    h: f64,
) -> Result<Vec<f64>>
where
    F: Fn(f64, f64) -> Result<f64>,
{
    let mut out = Vec::with_capacity(points.len());
    for &(a, b) in points {
        let f = |u: f64, v: f64| {
            field(u, v).map_err(|_| TricomiError::StencilCrossesSingularity { h, x: a, y: b })
        };
        let r = match form {
            ResidualForm::Thyp | ResidualForm::Tadjoint => {
                let flm = (f(a + h, b + h)? - f(a + h, b - h)? - f(a - h, b + h)?
                    + f(a - h, b - h)?)
                    / (4.0 * h * h);
                let fl = (f(a + h, b)? - f(a - h, b)?) / (2.0 * h);
                let fm = (f(a, b + h)? - f(a, b - h)?) / (2.0 * h);
                let w = a - b;
                match form {
                    ResidualForm::Thyp => flm - (fl - fm) / (6.0 * w),
                    _ => flm + (fl - fm) / (6.0 * w) - f(a, b)? / (3.0 * w * w),
                }
            }
            ResidualForm::Tphys => {
                let fxx = (f(a + h, b)? - 2.0 * f(a, b)? + f(a - h, b)?) / (h * h);
                let fyy = (f(a, b + h)? - 2.0 * f(a, b)? + f(a, b - h)?) / (h * h);
                b * fxx + fyy
            }
            ResidualForm::Tell => {
                if b <= 0.0 {
                    return Err(TricomiError::domain(
                        "residual_scan",
                        format!("Tell needs y > 0, got y = {b}"),
                    ));
                }
                let s0 = 2.0 * b.powf(1.5) / 3.0;
                // u as a function of (x, s)
                let u = |x: f64, s: f64| {
                    let y = (1.5 * s).powf(2.0 / 3.0);
                    field(x, y).map_err(|_| TricomiError::StencilCrossesSingularity { h, x: a, y: b })
                };
                let uxx = (u(a + h, s0)? - 2.0 * u(a, s0)? + u(a - h, s0)?) / (h * h);
                let uss = (u(a, s0 + h)? - 2.0 * u(a, s0)? + u(a, s0 - h)?) / (h * h);
                let us = (u(a, s0 + h)? - u(a, s0 - h)?) / (2.0 * h);
                uxx + uss + us / (3.0 * s0)
            }
        };
        out.push(r);
    }
    Ok(out)
}
