//! Closed-form solutions: the general two-parameter solution in
//! characteristic coordinates, the Riemann function, the physical-coordinate
//! solution E(x, y; 0, b), the restricted fundamental solutions E_I..E_IV,
//! the real combination E# on the elliptic side, and the origin solutions
//! F+ / F-.

use crate::geometry::{
    branch_data, classify, default_eps_geo, origin_discriminant, to_char, zeta, PhysPoint, Region,
    Source,
};
use crate::specfun::{f16, f76, f_at_one, CutSide, HypParams};
use crate::{Result, TricomiError, C64};
use std::f64::consts::{FRAC_PI_6, PI};

/// `F(1/6, 1/6; 1; 1) = Gamma(2/3) / Gamma(5/6)^2`.
pub fn f16_at_one() -> f64 {
    f_at_one(HypParams::f16()).expect("parameters are off the poles")
}

/// Constant of the first origin solution: `F+ = c_plus * (9x^2 + 4y^3)^{-1/6}`.
pub fn c_plus() -> f64 {
    -0.5f64.cbrt() / 3.0f64.sqrt() * f16_at_one()
}

/// Constant of the second origin solution: `F- = c_minus * |9x^2 + 4y^3|^{-1/6}`.
pub fn c_minus() -> f64 {
    0.5f64.cbrt() * f16_at_one()
}

/// Which closed-form object to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionKind {
    /// Unrestricted E(x, y; 0, b) — no support cutoff.
    Eraw,
    /// `2^{-1/3} E` on the closure of D_I, zero elsewhere.
    EI,
    /// `2^{-1/3} E` on the closure of D_II, zero elsewhere.
    EII,
    /// `-2^{-1/3} E` on the closure of D_III, zero elsewhere.
    EIII,
    /// `-2^{-1/3} E` on the closure of D_IV, zero elsewhere (mirror image of E_III).
    EIV,
    /// `lambda E_II + mu conj(E_II)`; real-valued.
    ESharp,
    /// `conj(E_II)`.
    EConj,
    /// `Re(E_II)`.
    EReal,
    /// Origin solution on D+ (needs no source).
    FPlus,
    /// Origin solution on D- (needs no source).
    FMinus,
    /// Riemann function relative to the corner `(l0, -l0)`.
    RiemannR,
    /// Homogeneous solution `l^{-1/6} F(1/6,1/6;1; m/l)` of the
    /// characteristic-form equation.
    HomogeneousU,
}

impl SolutionKind {
    pub fn parse(s: &str) -> Option<SolutionKind> {
        Some(match s {
            "Eraw" | "eraw" => SolutionKind::Eraw,
            "EI" | "ei" => SolutionKind::EI,
            "EII" | "eii" => SolutionKind::EII,
            "EIII" | "eiii" => SolutionKind::EIII,
            "EIV" | "eiv" => SolutionKind::EIV,
            "ESharp" | "esharp" | "sharp" => SolutionKind::ESharp,
            "EConj" | "econj" => SolutionKind::EConj,
            "EReal" | "ereal" => SolutionKind::EReal,
            "FPlus" | "fplus" => SolutionKind::FPlus,
            "FMinus" | "fminus" => SolutionKind::FMinus,
            "RiemannR" | "riemann" => SolutionKind::RiemannR,
            "HomogeneousU" | "homogeneous" => SolutionKind::HomogeneousU,
            _ => return None,
        })
    }
}

/// Coefficients of the real combination `E# = lambda E_II + mu conj(E_II)`.
#[derive(Debug, Clone, Copy)]
pub struct SharpCoeffs {
    pub lambda: C64,
    pub mu: C64,
}

impl SharpCoeffs {
    /// Solve `lambda + mu = 1`, `lambda e^{i pi/6} + mu e^{-i pi/6} = -1/sqrt(3)`.
    pub fn solve() -> SharpCoeffs {
        let ep = C64::from_polar(1.0, FRAC_PI_6);
        let em = ep.conj();
        let lambda = (-C64::from(1.0 / 3.0f64.sqrt()) - em) / (ep - em);
        SharpCoeffs { lambda, mu: C64::from(1.0) - lambda }
    }
}

// w^{-1/6} on the lift with theta = pi for negative real w.
fn inv_sixth_root(w: f64) -> C64 {
    if w > 0.0 {
        C64::from(w.powf(-1.0 / 6.0))
    } else {
        C64::from_polar(w.abs().powf(-1.0 / 6.0), -FRAC_PI_6)
    }
}

/// General solution `E = (l - m0)^{-1/6} (l0 - m)^{-1/6} F(1/6,1/6;1; zeta)`
/// with `zeta = (l - l0)(m - m0) / ((l - m0)(m - l0))`.
///
/// `cut` selects the side of the cut `zeta >= 1` when the argument lands on it.
pub fn eval_e_general(l: f64, m: f64, l0: f64, m0: f64, cut: CutSide) -> Result<C64> {
    let b1 = l - m0;
    let b2 = l0 - m;
    let scale = l.abs() + m.abs() + l0.abs() + m0.abs() + 1.0;
    if b1.abs() <= 1e-14 * scale || b2.abs() <= 1e-14 * scale {
        return Err(TricomiError::singular(format!(
            "general solution undefined: l - m0 = {b1}, l0 - m = {b2}"
        )));
    }
    let zt = (l - l0) * (m - m0) / (b1 * (m - l0));
    let f = f16(C64::from(zt), cut)?;
    Ok(inv_sixth_root(b1) * inv_sixth_root(b2) * f)
}

/// Riemann function `R = (l - m)^{1/3} E(l, m; l0, m0)` of the
/// characteristic-form operator, relative to the corner `(l0, m0)`.
pub fn riemann_r(l: f64, m: f64, l0: f64, m0: f64) -> Result<f64> {
    if l <= m {
        return Err(TricomiError::domain(
            "riemann_r",
            format!("need l > m, got l = {l}, m = {m}"),
        ));
    }
    let e = eval_e_general(l, m, l0, m0, CutSide::Below)?;
    if e.im.abs() > 1e-10 * e.norm() {
        return Err(TricomiError::domain(
            "riemann_r",
            format!("point ({l}, {m}) is outside the region where E is real"),
        ));
    }
    Ok((l - m).cbrt() * e.re)
}

/// Physical-coordinate solution `E(x, y; 0, b) = e^{i pi/6} z^{-1/6} F(zeta)`
/// with `z^{-1/6} = rho^{-1/6} e^{-i theta/6}` from the continuous branch
/// lift and `zeta = conj(z)/z` for `y > 0`.
///
/// Real in D_I, D_III, D_IV and the triangle (where `theta = pi` cancels the
/// prefactor); complex in the rest of D_II.
pub fn eval_e_phys(p: PhysPoint, s: &Source) -> Result<C64> {
    if s.b >= 0.0 {
        return Err(TricomiError::domain("eval_e_phys", "requires a source with b < 0"));
    }
    let eps = default_eps_geo(s);
    let bd = branch_data(p, s, eps)?;
    let zt = zeta(p, s, eps)?;
    // zeta > 1 happens only on the outer hyperbolic components; approaching
    // them from y > 0 puts zeta just below the cut, so Below on both halves.
    let f = f16(zt, CutSide::Below)?;
    let amp = bd.rho.powf(-1.0 / 6.0);
    if p.y <= 0.0 && bd.theta > 0.0 {
        // theta = pi: the prefactor e^{i(pi - theta)/6} is exactly 1
        Ok(C64::from(amp) * f)
    } else {
        Ok(C64::from_polar(amp, (PI - bd.theta) / 6.0) * f)
    }
}

// Is the point (within eps, in char coords) on the reflected characteristic
// r_a (m = l0) or r_{-a} (l = -l0)?
fn on_reflected(q: (f64, f64), l0: f64, eps: f64) -> (bool, bool) {
    let (l, m) = q;
    let right = (m - l0).abs() <= eps && l >= l0 - eps;
    let left = (l + l0).abs() <= eps && m <= -l0 + eps;
    (right, left)
}

/// Evaluate a solution kind at `p`. Support cutoffs return literal zero
/// outside the kind's region; on a support-boundary characteristic the
/// interior limit is returned; points on a reflected characteristic inside
/// the closure of the kind's support are errors (true singularities).
pub fn eval_solution(kind: SolutionKind, p: PhysPoint, s: &Source) -> Result<C64> {
    let eps = default_eps_geo(s);
    match kind {
        SolutionKind::FPlus | SolutionKind::FMinus => {
            let d = origin_discriminant(p);
            let scale = 1.0 + 9.0 * p.x * p.x + 4.0 * p.y * p.y * p.y.abs();
            if d.abs() <= 1e-9 * scale {
                return Err(TricomiError::singular(format!(
                    "({}, {}) lies on a characteristic through the origin",
                    p.x, p.y
                )));
            }
            let v = match kind {
                SolutionKind::FPlus if d > 0.0 => c_plus() * d.powf(-1.0 / 6.0),
                SolutionKind::FMinus if d < 0.0 => c_minus() * (-d).powf(-1.0 / 6.0),
                _ => 0.0,
            };
            return Ok(C64::from(v));
        }
        SolutionKind::RiemannR => {
            if p.y >= 0.0 {
                return Err(TricomiError::domain("riemann_r", "needs y < 0"));
            }
            let q = to_char(p)?;
            return riemann_r(q.l, q.m, s.l0, -s.l0).map(C64::from);
        }
        SolutionKind::HomogeneousU => {
            let q = to_char(p)?;
            return homogeneous_u(q.l, q.m).map(C64::from);
        }
        _ => {}
    }
    if s.b >= 0.0 {
        return Err(TricomiError::domain(
            "eval_solution",
            "restricted solutions need a source with b < 0",
        ));
    }
    let region = classify(p, s, eps);
    let half = 0.5f64.cbrt();
    if kind == SolutionKind::Eraw {
        return eval_e_phys(p, s);
    }
    let q = if p.y <= 0.0 {
        let c = to_char(p)?;
        Some((c.l, c.m))
    } else {
        None
    };
    let (on_ra, on_rminus) = q.map_or((false, false), |q| on_reflected(q, s.l0, eps));
    match kind {
        SolutionKind::EI => {
            let inside = q.map_or(false, |(l, m)| l >= s.l0 - eps && m <= -s.l0 + eps);
            if inside {
                Ok(C64::from(half) * eval_e_phys(p, s)?)
            } else {
                Ok(C64::from(0.0))
            }
        }
        SolutionKind::EIII => {
            if on_ra {
                return Err(TricomiError::singular(format!(
                    "E_III is singular on the reflected characteristic at ({}, {})",
                    p.x, p.y
                )));
            }
            let inside = q.map_or(false, |(l, m)| l >= s.l0 - eps && m >= -s.l0 - eps && m < s.l0);
            if inside {
                Ok(C64::from(-half) * eval_e_phys(p, s)?)
            } else {
                Ok(C64::from(0.0))
            }
        }
        SolutionKind::EIV => {
            if on_rminus {
                return Err(TricomiError::singular(format!(
                    "E_IV is singular on the reflected characteristic at ({}, {})",
                    p.x, p.y
                )));
            }
            let inside = q.map_or(false, |(l, m)| m <= -s.l0 + eps && l <= s.l0 + eps && l > -s.l0);
            if inside {
                Ok(C64::from(-half) * eval_e_phys(p, s)?)
            } else {
                Ok(C64::from(0.0))
            }
        }
        SolutionKind::EII | SolutionKind::ESharp | SolutionKind::EConj | SolutionKind::EReal => {
            if on_ra || on_rminus || region == Region::OnReflectedCharacteristic {
                return Err(TricomiError::singular(format!(
                    "E_II is singular on the reflected characteristics at ({}, {})",
                    p.x, p.y
                )));
            }
            let inside = match region {
                Region::DII | Region::OnAxis | Region::OnSourceCharacteristic => true,
                Region::DI | Region::DIII | Region::DIV => false,
                _ => false,
            };
            let e2 = if inside {
                C64::from(half) * eval_e_phys(p, s)?
            } else {
                C64::from(0.0)
            };
            Ok(match kind {
                SolutionKind::EII => e2,
                SolutionKind::EConj => e2.conj(),
                SolutionKind::EReal => C64::from(e2.re),
                _ => {
                    let c = SharpCoeffs::solve();
                    let v = c.lambda * e2 + c.mu * e2.conj();
                    C64::from(v.re) // imaginary part vanishes identically
                }
            })
        }
        _ => unreachable!("remaining kinds handled above"),
    }
}

/// Homogeneous solution `u = l^{-1/6} F(1/6, 1/6; 1; m/l)` of the
/// characteristic-form equation, degree `-1/6`.
pub fn homogeneous_u(l: f64, m: f64) -> Result<f64> {
    if l <= 0.0 {
        return Err(TricomiError::domain("homogeneous_u", format!("needs l > 0, got {l}")));
    }
    let t = m / l;
    if t >= 1.0 {
        return Err(TricomiError::domain(
            "homogeneous_u",
            format!("needs m/l < 1, got {t}"),
        ));
    }
    let f = f16(C64::from(t), CutSide::Below)?;
    Ok(l.powf(-1.0 / 6.0) * f.re)
}

/// E relative to the corner `(l0, -l0)` together with its first
/// characteristic derivatives, where everything is real (both power bases
/// positive and `zeta` real below 1 — D_I and the triangle).
pub fn eval_e_char_derivs(l: f64, m: f64, s: &Source) -> Result<(f64, f64, f64)> {
    let l0 = s.l0;
    let b1 = l + l0;
    let b2 = l0 - m;
    if b1 <= 0.0 || b2 <= 0.0 {
        return Err(TricomiError::domain(
            "eval_e_char_derivs",
            format!("needs l + l0 > 0 and l0 - m > 0, got {b1}, {b2}"),
        ));
    }
    let d = b1 * (m - l0);
    let zt = (l - l0) * (m + l0) / d;
    let f = f16(C64::from(zt), CutSide::Below)?.re;
    let fp = f76(C64::from(zt), CutSide::Below)?.re / 36.0;
    let p = b1.powf(-1.0 / 6.0) * b2.powf(-1.0 / 6.0);
    let zl = 2.0 * l0 * (m + l0) * (m - l0) / (d * d);
    let zm = -2.0 * l0 * (l - l0) * (l + l0) / (d * d);
    let e = p * f;
    let el = -p * f / (6.0 * b1) + p * fp * zl;
    let em = p * f / (6.0 * b2) + p * fp * zm;
    Ok((e, el, em))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::source_from_b;
    use crate::specfun::gamma;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn src(b: f64) -> Source {
        source_from_b(b).unwrap()
    }

    #[test]
    fn f16_at_one_gamma_ratio() {
        let expect = gamma(2.0 / 3.0).unwrap() / gamma(5.0 / 6.0).unwrap().powi(2);
        assert_relative_eq!(f16_at_one(), expect, max_relative = 1e-13);
        assert_relative_eq!(f16_at_one(), 1.0627533202790793, max_relative = 1e-12);
    }

    #[test]
    fn origin_constants() {
        assert_relative_eq!(c_minus(), 0.8435079, max_relative = 1e-6);
        assert_relative_eq!(c_plus(), -c_minus() / 3.0f64.sqrt(), max_relative = 1e-14);
    }

    #[test]
    fn sharp_coeffs_solve() {
        let c = SharpCoeffs::solve();
        // closed form of the 2x2 system
        assert_relative_eq!(c.lambda.re, 0.5, max_relative = 1e-14);
        assert_relative_eq!(c.lambda.im, 5.0 / (2.0 * 3.0f64.sqrt()), max_relative = 1e-14);
        assert!((c.mu - c.lambda.conj()).norm() < 1e-14);
        assert!((c.lambda + c.mu - 1.0).norm() < 1e-14);
        let ep = C64::from_polar(1.0, FRAC_PI_6);
        let lhs = c.lambda * ep + c.mu * ep.conj();
        assert!((lhs - C64::from(-1.0 / 3.0f64.sqrt())).norm() < 1e-14);
    }

    #[test]
    fn e_general_trivial_and_oracle() {
        // l = l0: F-argument 0, E is just the product of the power bases
        let e = eval_e_general(2.0, -3.0, 2.0, -2.0, CutSide::Below).unwrap();
        assert_relative_eq!(e.re, 4.0f64.powf(-1.0 / 6.0) * 5.0f64.powf(-1.0 / 6.0), max_relative = 1e-13);
        assert_eq!(e.im, 0.0);
        // direct-substitution oracle at (3, -3; 2, -2)
        let e = eval_e_general(3.0, -3.0, 2.0, -2.0, CutSide::Below).unwrap();
        let f = f16(C64::from(1.0 / 25.0), CutSide::Below).unwrap().re;
        assert_relative_eq!(e.re, 5.0f64.powf(-1.0 / 6.0) * 5.0f64.powf(-1.0 / 6.0) * f, max_relative = 1e-12);
        // degenerate bases error
        assert!(eval_e_general(2.0, 2.0, 2.0, -2.0, CutSide::Below).is_err());
    }

    #[test]
    fn e_general_scaling() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let l0 = rng.gen_range(0.5..3.0);
            let l = l0 + rng.gen_range(0.1..2.0);
            let m = -l0 - rng.gen_range(0.1..2.0);
            let k = rng.gen_range(0.3..4.0);
            let e1 = eval_e_general(l, m, l0, -l0, CutSide::Below).unwrap();
            let e2 = eval_e_general(k * l, k * m, k * l0, -k * l0, CutSide::Below).unwrap();
            assert_relative_eq!(e2.re, k.powf(-1.0 / 3.0) * e1.re, max_relative = 1e-12);
        }
    }

    #[test]
    fn riemann_corner_and_edge() {
        assert_relative_eq!(riemann_r(2.0, -2.0, 2.0, -2.0).unwrap(), 1.0, max_relative = 1e-13);
        // along m = m0: R = ((l - m0)/(l0 - m0))^{1/6}
        for l in [0.5, 1.0, 1.7, 2.0, 3.5] {
            let r = riemann_r(l, -2.0, 2.0, -2.0).unwrap();
            assert_relative_eq!(r, ((l + 2.0) / 4.0).powf(1.0 / 6.0), max_relative = 1e-12);
        }
    }

    #[test]
    fn riemann_edge_derivative() {
        // d/dl R(l, m0) = (1/6) R / (l - m0), via central differences, O(h^2)
        let (l0, m0) = (2.0, -2.0);
        for l in [1.0, 1.5, 3.0] {
            let h = 1e-5;
            let fd = (riemann_r(l + h, m0, l0, m0).unwrap() - riemann_r(l - h, m0, l0, m0).unwrap())
                / (2.0 * h);
            let exact = riemann_r(l, m0, l0, m0).unwrap() / (6.0 * (l - m0));
            assert_relative_eq!(fd, exact, max_relative = 1e-8);
        }
    }

    #[test]
    fn phys_on_source_characteristic() {
        // On 3(x - a) + 2(-y)^{3/2} = 0: E = 2^{-2/3} (b y)^{-1/4}
        let s = src(-1.0);
        for y in [-0.2, -0.5, -0.9, -1.3] {
            let x = s.a - 2.0 / 3.0 * (-y as f64).powf(1.5);
            let e = eval_e_phys(PhysPoint::new(x, y), &s).unwrap();
            let expect = 0.25f64.cbrt() * (s.b * y).powf(-0.25);
            assert_relative_eq!(e.re, expect, max_relative = 1e-10);
            assert!(e.im.abs() < 1e-12 * e.re.abs());
        }
    }

    #[test]
    fn phys_on_axis_inside() {
        // y = 0, |x| < a: E = 9^{-1/6} F(1;..) |x^2 - a^2|^{-1/6}
        let s = src(-1.0);
        for x in [0.0, 0.3, 0.6] {
            let e = eval_e_phys(PhysPoint::new(x, 0.0), &s).unwrap();
            let expect =
                9.0f64.powf(-1.0 / 6.0) * f16_at_one() * (s.a * s.a - x * x).powf(-1.0 / 6.0);
            assert_relative_eq!(e.re, expect, max_relative = 1e-11);
            assert!(e.im.abs() < 1e-12 * e.re.abs());
        }
        // |x| > a: same modulus with the e^{i pi/6} phase
        let x = 2.0f64;
        let e = eval_e_phys(PhysPoint::new(x, 0.0), &s).unwrap();
        let modexp = 9.0f64.powf(-1.0 / 6.0) * f16_at_one() * (x * x - s.a * s.a).powf(-1.0 / 6.0);
        let expect = C64::from_polar(modexp, FRAC_PI_6);
        assert_relative_eq!(e.re, expect.re, max_relative = 1e-11);
        assert_relative_eq!(e.im, expect.im, max_relative = 1e-11);
    }

    #[test]
    fn phys_real_in_real_regions() {
        let s = src(-1.0);
        let eps = default_eps_geo(&s);
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mut seen = [false; 4];
        for _ in 0..20_000 {
            let p = PhysPoint::new(rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..0.0));
            let r = classify(p, &s, eps);
            let real_region = match r {
                Region::DI => Some(0),
                Region::DIII => Some(1),
                Region::DIV => Some(2),
                Region::DII => {
                    let bd = branch_data(p, &s, eps).unwrap();
                    if bd.z.re < 0.0 {
                        Some(3) // triangle
                    } else {
                        None
                    }
                }
                _ => None,
            };
            if let Some(i) = real_region {
                let e = eval_e_phys(p, &s).unwrap();
                assert!(e.im.abs() <= 1e-12 * e.norm(), "{p:?}: {e}");
                seen[i] = true;
            }
        }
        assert!(seen.iter().all(|&b| b));
    }

    #[test]
    fn phys_matches_char_assembly() {
        // For y < 0 off all singular curves, eval_e_phys equals the value
        // assembled from eval_e_general with the branch rules theta in {0, pi}.
        let s = src(-1.0);
        let eps = default_eps_geo(&s);
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let mut checked = 0;
        for _ in 0..20_000 {
            let p = PhysPoint::new(rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..-1e-3));
            let Ok(bd) = branch_data(p, &s, eps) else { continue };
            if bd.rho < 1e-3 {
                continue;
            }
            let q = to_char(p).unwrap();
            let g = eval_e_general(q.l, q.m, s.l0, -s.l0, CutSide::Below).unwrap();
            // E_phys = e^{i pi/6} z^{-1/6} F; E_general = (-z)^{-1/6} F with the
            // theta = pi lift on the negative real axis, so
            // E_phys = e^{i (pi - theta)/6} |z|^{-1/6} F = e^{i(pi-theta)/6 + i theta'/6} E_general
            // where theta' is the lift of -z. Inside (z < 0): both are |z|^{-1/6} F.
            // Outside (z > 0): E_phys = e^{i pi/6}|z|^{-1/6} F, E_general = e^{-i pi/6}|z|^{-1/6} F.
            let e = eval_e_phys(p, &s).unwrap();
            let assembled = if bd.z.re < 0.0 { g } else { C64::from_polar(1.0, 2.0 * FRAC_PI_6) * g };
            assert!((e - assembled).norm() <= 1e-10 * e.norm(), "{p:?}: {e} vs {assembled}");
            checked += 1;
        }
        assert!(checked > 10_000);
    }

    #[test]
    fn phys_continuous_across_axis_outer() {
        // cut-side choice on the outer hyperbolic components: approaching the
        // axis from either side gives the same value, on both halves.
        let s = src(-1.0);
        for x in [2.0, -2.0] {
            let e0 = eval_e_phys(PhysPoint::new(x, 0.0), &s).unwrap();
            let ep = eval_e_phys(PhysPoint::new(x, 1e-6), &s).unwrap();
            let em = eval_e_phys(PhysPoint::new(x, -1e-6), &s).unwrap();
            assert!((ep - e0).norm() < 1e-5 * e0.norm(), "above at x = {x}: {ep} vs {e0}");
            assert!((em - e0).norm() < 1e-5 * e0.norm(), "below at x = {x}: {em} vs {e0}");
        }
    }

    #[test]
    fn phys_rejects_reflected_characteristic_and_elliptic_source() {
        let s = src(-1.0);
        let y = -0.5f64;
        let x = s.a + 2.0 / 3.0 * (-y).powf(1.5);
        assert!(eval_e_phys(PhysPoint::new(x, y), &s).is_err());
        assert!(eval_e_phys(PhysPoint::new(1.0, 1.0), &src(0.0)).is_err());
    }

    #[test]
    fn solution_supports() {
        let s = src(-1.0);
        let half = 0.5f64.cbrt();
        // D_I point
        let p = PhysPoint::new(0.0, -2.0);
        let e = eval_e_phys(p, &s).unwrap();
        assert_relative_eq!(eval_solution(SolutionKind::EI, p, &s).unwrap().re, half * e.re);
        assert_eq!(eval_solution(SolutionKind::EII, p, &s).unwrap(), C64::from(0.0));
        assert_eq!(eval_solution(SolutionKind::EIII, p, &s).unwrap(), C64::from(0.0));
        // D_III point and its mirror
        let p3 = PhysPoint::new(1.2, -1.0);
        let e3 = eval_e_phys(p3, &s).unwrap();
        assert_relative_eq!(eval_solution(SolutionKind::EIII, p3, &s).unwrap().re, -half * e3.re);
        let p4 = PhysPoint::new(-1.2, -1.0);
        let v4 = eval_solution(SolutionKind::EIV, p4, &s).unwrap();
        assert_relative_eq!(v4.re, eval_solution(SolutionKind::EIII, p3, &s).unwrap().re);
        assert_eq!(eval_solution(SolutionKind::EI, p3, &s).unwrap(), C64::from(0.0));
        // triangle point belongs to E_II
        let pt = PhysPoint::new(0.0, -0.3);
        let et = eval_e_phys(pt, &s).unwrap();
        assert_relative_eq!(eval_solution(SolutionKind::EII, pt, &s).unwrap().re, half * et.re);
        // elliptic point
        let pe = PhysPoint::new(0.5, 1.0);
        let ee = eval_solution(SolutionKind::EII, pe, &s).unwrap();
        assert!(ee.im.abs() > 1e-3 * ee.norm());
        assert_eq!(eval_solution(SolutionKind::EI, pe, &s).unwrap(), C64::from(0.0));
        // reflected characteristic: error for the kinds whose support touches it
        let y = -0.5f64;
        let xr = s.a + 2.0 / 3.0 * (-y).powf(1.5);
        let pr = PhysPoint::new(xr, y);
        assert!(eval_solution(SolutionKind::EIII, pr, &s).is_err());
        assert!(eval_solution(SolutionKind::EII, pr, &s).is_err());
        assert_eq!(eval_solution(SolutionKind::EI, pr, &s).unwrap(), C64::from(0.0));
    }

    #[test]
    fn sharp_is_real_and_doubles_lambda() {
        let s = src(-1.0);
        let c = SharpCoeffs::solve();
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..500 {
            let p = PhysPoint::new(rng.gen_range(-3.0..3.0), rng.gen_range(0.01..3.0));
            let e2 = eval_solution(SolutionKind::EII, p, &s).unwrap();
            let sh = eval_solution(SolutionKind::ESharp, p, &s).unwrap();
            assert_eq!(sh.im, 0.0);
            assert_relative_eq!(sh.re, 2.0 * (c.lambda * e2).re, max_relative = 1e-12);
            let cj = eval_solution(SolutionKind::EConj, p, &s).unwrap();
            assert_eq!(cj, e2.conj());
            let re = eval_solution(SolutionKind::EReal, p, &s).unwrap();
            assert_eq!(re, C64::from(e2.re));
        }
    }

    #[test]
    fn fminus_fplus_values() {
        let s = src(0.0);
        let fm = eval_solution(SolutionKind::FMinus, PhysPoint::new(0.0, -1.0), &s).unwrap();
        assert_relative_eq!(fm.re, c_minus() * 4.0f64.powf(-1.0 / 6.0), max_relative = 1e-13);
        assert_relative_eq!(fm.re, 0.6695, max_relative = 1e-4);
        let fp = eval_solution(SolutionKind::FPlus, PhysPoint::new(1.0, 0.0), &s).unwrap();
        assert_relative_eq!(fp.re, c_plus() * 9.0f64.powf(-1.0 / 6.0), max_relative = 1e-13);
        // zero off-support, error on the characteristic through the origin
        assert_eq!(eval_solution(SolutionKind::FPlus, PhysPoint::new(0.0, -1.0), &s).unwrap(), C64::from(0.0));
        assert_eq!(eval_solution(SolutionKind::FMinus, PhysPoint::new(1.0, 0.0), &s).unwrap(), C64::from(0.0));
        assert!(eval_solution(SolutionKind::FPlus, PhysPoint::new(2.0 / 3.0, -1.0), &s).is_err());
    }

    #[test]
    fn homogeneous_values_and_residual() {
        assert_relative_eq!(homogeneous_u(1.0, 0.0).unwrap(), 1.0, max_relative = 1e-13);
        // homogeneity of degree -1/6
        for (l, m, k) in [(2.0, -1.0, 3.0), (1.5, 0.5, 0.25), (4.0, -3.0, 1.7)] {
            let u1 = homogeneous_u(l, m).unwrap();
            let u2 = homogeneous_u(k * l, k * m).unwrap();
            assert_relative_eq!(u2, (k as f64).powf(-1.0 / 6.0) * u1, max_relative = 1e-11);
        }
        // characteristic-form residual u_lm - (u_l - u_m)/(6(l - m)) at (2, -1)
        let (l, m, h) = (2.0, -1.0, 1e-3);
        let u = |l: f64, m: f64| homogeneous_u(l, m).unwrap();
        let ulm = (u(l + h, m + h) - u(l + h, m - h) - u(l - h, m + h) + u(l - h, m - h))
            / (4.0 * h * h);
        let ul = (u(l + h, m) - u(l - h, m)) / (2.0 * h);
        let um = (u(l, m + h) - u(l, m - h)) / (2.0 * h);
        let residual = ulm - (ul - um) / (6.0 * (l - m));
        assert!(residual.abs() <= 1e-6, "residual {residual}");
        assert!(homogeneous_u(-1.0, -2.0).is_err());
        assert!(homogeneous_u(1.0, 1.0).is_err());
    }

    #[test]
    fn char_form_residual_of_e_general() {
        // finite-difference annihilation in each real region
        let s = src(-1.0);
        let e = |l: f64, m: f64| eval_e_general(l, m, s.l0, -s.l0, CutSide::Below).unwrap().re;
        for (l, m) in [(3.0, -3.0), (3.0, 0.0), (0.0, -3.0), (1.0, -1.0)] {
            let h = 1e-3;
            let elm = (e(l + h, m + h) - e(l + h, m - h) - e(l - h, m + h) + e(l - h, m - h))
                / (4.0 * h * h);
            let el = (e(l + h, m) - e(l - h, m)) / (2.0 * h);
            let em = (e(l, m + h) - e(l, m - h)) / (2.0 * h);
            let residual = elm - (el - em) / (6.0 * (l - m));
            let scale = e(l, m).abs() / ((l - m) * (l - m)) + 1.0;
            assert!(residual.abs() <= 1e-5 * scale, "({l}, {m}): residual {residual}");
        }
    }

    #[test]
    fn char_derivs_match_finite_differences() {
        let s = src(-1.0);
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for _ in 0..200 {
            let l = s.l0 + rng.gen_range(0.3..3.0);
            let m = -s.l0 - rng.gen_range(0.3..3.0);
            let (e, el, em) = eval_e_char_derivs(l, m, &s).unwrap();
            let f = |l: f64, m: f64| eval_e_char_derivs(l, m, &s).unwrap().0;
            assert_relative_eq!(e, f(l, m), max_relative = 1e-13);
            let h = 1e-5;
            let fd_l = (f(l + h, m) - f(l - h, m)) / (2.0 * h);
            let fd_m = (f(l, m + h) - f(l, m - h)) / (2.0 * h);
            assert_relative_eq!(el, fd_l, max_relative = 1e-6, epsilon = 1e-10);
            assert_relative_eq!(em, fd_m, max_relative = 1e-6, epsilon = 1e-10);
        }
    }

    #[test]
    fn logarithmic_blowup_near_reflected_characteristic() {
        // |E| / |log d| tends to a nonzero constant approaching r_a normally
        let s = src(-1.0);
        let y = -1.0f64;
        let xr = s.a + 2.0 / 3.0 * (-y).powf(1.5);
        let e_at = |d: f64| eval_e_phys(PhysPoint::new(xr + d, y), &s).unwrap().norm();
        // |E| ~ A ln(1/d) + B; the fitted slope A must be stable to 10%
        // across two decades of distance
        let slope = |d1: f64, d2: f64| (e_at(d2) - e_at(d1)) / (d1 / d2).ln();
        let s_hi = slope(1e-2, 1e-3);
        let s_lo = slope(1e-4, 1e-5);
        assert!(s_lo > 0.01);
        assert!((s_hi - s_lo).abs() <= 0.10 * s_lo, "{s_hi} {s_lo}");
    }
}
