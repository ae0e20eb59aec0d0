//! Green's-identity check on characteristic-coordinate rectangles: the area
//! integral of R times the characteristic-form image of the pulled-back bump
//! must equal the contour integral of the Riemann bilinear concomitant.

use crate::fundsol::eval_e_char_derivs;
use crate::geometry::{from_char, CharPoint, Source};
use crate::verify::bump::BumpSpec;
use crate::verify::pairing::QuadSpec;
use crate::verify::quad::integrate_1d;
use crate::{Result, TricomiError};

/// A closed rectangle `[l_lo, l_hi] x [m_lo, m_hi]` in characteristic
/// coordinates.
#[derive(Debug, Clone, Copy)]
pub struct CharRect {
    pub l_lo: f64,
    pub l_hi: f64,
    pub m_lo: f64,
    pub m_hi: f64,
}

// pulled-back bump psi(l, m) = phi(x(l,m), y(l,m)) and its first l/m
// derivatives by the chain rule
fn psi_and_grad(bump: &BumpSpec, l: f64, m: f64) -> (f64, f64, f64) {
    let p = from_char(CharPoint::new(l, m)).expect("l >= m inside the rectangle");
    let phi = bump.phi(p);
    let (px, py) = bump.grad(p);
    let u = (l - m) / 4.0;
    let yl = -u.powf(-1.0 / 3.0) / 6.0;
    (phi, px / 6.0 + py * yl, px / 6.0 - py * yl)
}

// characteristic-form image of psi via second-derivative chain rule:
// psi_lm - (psi_l - psi_m)/(6(l - m))
fn psi_t_char(bump: &BumpSpec, l: f64, m: f64) -> f64 {
    let p = from_char(CharPoint::new(l, m)).expect("l >= m inside the rectangle");
    let (px, py) = bump.grad(p);
    let (pxx, _, pyy) = bump.hess(p);
    let u = (l - m) / 4.0;
    let yl = -u.powf(-1.0 / 3.0) / 6.0;
    let ylm = -u.powf(-4.0 / 3.0) / 72.0;
    // x_l = x_m = 1/6, y_l = -y_m = yl; the phi_xy cross term cancels
    // because x_l y_m + x_m y_l = 0
    let psi_lm = pxx / 36.0 - pyy * yl * yl + py * ylm;
    let psi_l = px / 6.0 + py * yl;
    let psi_m = px / 6.0 - py * yl;
    psi_lm - (psi_l - psi_m) / (6.0 * (l - m))
}

// Riemann function relative to (l0, -l0) and its derivatives
fn r_and_grad(s: &Source, l: f64, m: f64) -> Result<(f64, f64, f64)> {
    let (e, el, em) = eval_e_char_derivs(l, m, s)?;
    let w = (l - m).cbrt();
    let wp = (l - m).powf(-2.0 / 3.0) / 3.0;
    Ok((w * e, wp * e + w * el, -wp * e + w * em))
}

/// Discrepancy `|area - contour| / (1 + |area|)` of the Green identity on
/// `rect`, which must lie strictly inside a region where the solution is
/// real-analytic (the dependence domain D_I or the triangle).
pub fn green_identity_check(
    s: &Source,
    bump: &BumpSpec,
    rect: CharRect,
    q: &QuadSpec,
) -> Result<f64> {
    let CharRect { l_lo, l_hi, m_lo, m_hi } = rect;
    if !(l_lo < l_hi && m_lo < m_hi && m_hi < l_lo) {
        return Err(TricomiError::domain(
            "green_identity_check",
            "need l_lo < l_hi, m_lo < m_hi and m_hi < l_lo (rectangle below the diagonal)",
        ));
    }
    let margin = 1e-6 * (1.0 + s.l0);
    let in_di = l_lo > s.l0 + margin && m_hi < -s.l0 - margin;
    let in_triangle =
        l_hi < s.l0 - margin && m_lo > -s.l0 + margin;
    if !(in_di || in_triangle) {
        return Err(TricomiError::RectIntersectsSingularity { l0: l_lo, l1: l_hi, m0: m_lo, m1: m_hi });
    }

    let n = q.gauss_order;
    let cells = q.base_cells_per_axis;
    let step_l = (l_hi - l_lo) / cells as f64;
    let step_m = (m_hi - m_lo) / cells as f64;

    // area integral of R * T_char(psi)
    let mut area = 0.0;
    for i in 0..cells {
        for j in 0..cells {
            let a = l_lo + step_l * i as f64;
            let c = m_lo + step_m * j as f64;
            area += integrate_1d(
                |l| {
                    integrate_1d(
                        |m| {
                            let t = psi_t_char(bump, l, m);
                            if t == 0.0 {
                                0.0
                            } else {
                                r_and_grad(s, l, m).map(|(r, _, _)| r * t).unwrap_or(f64::NAN)
                            }
                        },
                        c,
                        c + step_m,
                        n,
                    )
                },
                a,
                a + step_l,
                n,
            );
        }
    }
    if !area.is_finite() {
        return Err(TricomiError::RectIntersectsSingularity { l0: l_lo, l1: l_hi, m0: m_lo, m1: m_hi });
    }

    // concomitant components: divergence form R*T_char(psi) = d/dl P + d/dm Q
    // with P = (R psi_m - psi R_m + 2 a R psi)/2, a = -1/(6(l-m)),
    //      Q = (R psi_l - psi R_l + 2 b R psi)/2, b = +1/(6(l-m)).
    let p_comp = |l: f64, m: f64| -> Result<f64> {
        let (psi, _, psim) = psi_and_grad(bump, l, m);
        let (r, _, rm) = r_and_grad(s, l, m)?;
        Ok(0.5 * (r * psim - psi * rm - r * psi / (3.0 * (l - m))))
    };
    let q_comp = |l: f64, m: f64| -> Result<f64> {
        let (psi, psil, _) = psi_and_grad(bump, l, m);
        let (r, rl, _) = r_and_grad(s, l, m)?;
        Ok(0.5 * (r * psil - psi * rl + r * psi / (3.0 * (l - m))))
    };

    // counterclockwise contour: integral P dm - Q dl
    let mut contour = 0.0;
    for i in 0..cells {
        let c = m_lo + step_m * i as f64;
        contour += integrate_1d(|m| p_comp(l_hi, m).unwrap_or(f64::NAN), c, c + step_m, n);
        contour -= integrate_1d(|m| p_comp(l_lo, m).unwrap_or(f64::NAN), c, c + step_m, n);
        let a = l_lo + step_l * i as f64;
        contour -= integrate_1d(|l| q_comp(l, m_lo).unwrap_or(f64::NAN), a, a + step_l, n);
        contour += integrate_1d(|l| q_comp(l, m_hi).unwrap_or(f64::NAN), a, a + step_l, n);
    }
    if !contour.is_finite() {
        return Err(TricomiError::RectIntersectsSingularity { l0: l_lo, l1: l_hi, m0: m_lo, m1: m_hi });
    }
    Ok((area - contour).abs() / (1.0 + area.abs()))
}
