//! The Gauss hypergeometric function over every regime the fundamental
//! solutions visit: direct series on the disk, Pfaff transform, the
//! connection formula at 1, the logarithmic continuation for `|z| > 1`, and a
//! Taylor-stepping fallback for the annulus near the unit circle where none
//! of the closed-form regimes converges fast.

use super::gamma::{digamma, gamma};
use crate::{Result, TricomiError, C64};

/// Dimensionless parameters `(a, b, c)` of `F(a, b; c; z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HypParams {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if c <= 0.0 && c == c.floor() {
            return Err(TricomiError::domain(
                "HypParams",
                format!("c = {c} must not be zero or a negative integer"),
            ));
        }
        Ok(HypParams { a, b, c })
    }

    /// `F(1/6, 1/6; 1; z)` — the function generating every fundamental solution.
    pub fn f16() -> Self {
        HypParams { a: 1.0 / 6.0, b: 1.0 / 6.0, c: 1.0 }
    }

    /// `F(7/6, 7/6; 2; z)`; `F'(1/6,1/6;1;z) = F(7/6,7/6;2;z) / 36`.
    pub fn f76() -> Self {
        HypParams { a: 7.0 / 6.0, b: 7.0 / 6.0, c: 2.0 }
    }
}

/// Which side of the cut `[1, inf)` to take a boundary value from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutSide {
    /// Limit from `Im z > 0`.
    Above,
    /// Limit from `Im z < 0`.
    Below,
}

impl CutSide {
    pub fn sign(self) -> f64 {
        match self {
            CutSide::Above => 1.0,
            CutSide::Below => -1.0,
        }
    }
}

/// Coefficients of the `|z| > 1` continuation series: `u_n` multiplies
/// `z^{-n}` in `u(z)`, `v_n = u_n h_n` in `v(z)`, with
/// `h_n = 2 psi(1+n) - psi(a+n) - psi(c-a-n)`.
#[derive(Debug, Clone, Copy)]
pub struct ContinuationCoeffs {
    pub n: usize,
    pub u_n: f64,
    pub v_n: f64,
    pub h_n: f64,
}

/// Hard cap on series summation before a non-convergence error is raised.
pub const MAX_TERMS: usize = 1_000_000;

/// Default working tolerance of the dispatchers.
pub const WORK_TOL: f64 = 1e-13;

/// Direct hypergeometric series, valid on `|z| <= 1`, `z != 1` (and on the
/// unit circle only when `c - a - b > 0`).
///
/// Termination uses a geometric tail bound once the term ratio stabilizes
/// below 0.99; on the unit circle an Abel-type bound `|term| * 2 / |1 - z|`
/// is used instead (the terms are eventually positive and decreasing for the
/// parameter sets in this crate).
pub fn f_series(p: HypParams, z: C64, tol: f64) -> Result<C64> {
    let modulus = z.norm();
    if modulus > 1.0 + 1e-14 {
        return Err(TricomiError::domain("f_series", format!("|z| = {modulus} > 1")));
    }
    if (z - 1.0).norm() < 1e-14 {
        return Err(TricomiError::domain("f_series", "z = 1 is excluded"));
    }
    let on_circle = modulus > 0.999;
    if on_circle && p.c - p.a - p.b <= 0.0 {
        return Err(TricomiError::domain(
            "f_series",
            "series on |z| = 1 requires c - a - b > 0",
        ));
    }
    let abel = 2.0 / (z - 1.0).norm();
    let mut sum = C64::from(1.0);
    let mut term = C64::from(1.0);
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        term *= (p.a + nf) * (p.b + nf) / ((p.c + nf) * (nf + 1.0)) * z;
        sum += term;
        let t = term.norm();
        if on_circle {
            if t * abel < tol {
                return Ok(sum);
            }
        } else {
            // ratio of successive |terms| tends to |z|
            let ratio = modulus.max(1e-300);
            if ratio < 0.99 && t * ratio / (1.0 - ratio) < tol {
                return Ok(sum);
            }
        }
    }
    Err(TricomiError::NoConvergence { context: "f_series", terms: MAX_TERMS, modulus })
}

/// Gauss value `F(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b))`.
pub fn f_at_one(p: HypParams) -> Result<f64> {
    let s = p.c - p.a - p.b;
    if s <= 0.0 {
        return Err(TricomiError::domain(
            "f_at_one",
            format!("requires c - a - b > 0, got {s}"),
        ));
    }
    Ok(gamma(p.c)? * gamma(s)? / (gamma(p.c - p.a)? * gamma(p.c - p.b)?))
}

/// Pfaff transform `F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1))`.
///
/// Fails with a regime error when the transformed argument is itself too
/// close to the unit circle for the series.
pub fn f_pfaff(p: HypParams, z: C64, tol: f64) -> Result<C64> {
    let w = z / (z - 1.0);
    if w.norm() > 0.95 {
        return Err(TricomiError::domain(
            "f_pfaff",
            format!("transformed argument |w| = {} too close to 1", w.norm()),
        ));
    }
    let inner = f_series(HypParams { a: p.a, b: p.c - p.b, c: p.c }, w, tol)?;
    Ok((C64::from(1.0) - z).powc(C64::from(-p.a)) * inner)
}

/// Connection formula at `z = 1` (standard two-term `1-z` expansion, valid
/// for non-integer `c - a - b`).
pub fn f_connection_at_one(p: HypParams, z: C64, tol: f64) -> Result<C64> {
    let s = p.c - p.a - p.b;
    if (s - s.round()).abs() < 1e-12 {
        return Err(TricomiError::domain(
            "f_connection_at_one",
            format!("c - a - b = {s} must be non-integer"),
        ));
    }
    let u = C64::from(1.0) - z;
    if u.norm() > 0.98 {
        return Err(TricomiError::domain(
            "f_connection_at_one",
            format!("|1 - z| = {} too close to 1", u.norm()),
        ));
    }
    let c1 = gamma(p.c)? * gamma(s)? / (gamma(p.c - p.a)? * gamma(p.c - p.b)?);
    let c2 = gamma(p.c)? * gamma(-s)? / (gamma(p.a)? * gamma(p.b)?);
    let t1 = f_series(HypParams { a: p.a, b: p.b, c: 1.0 - s }, u, tol)?;
    let t2 = f_series(HypParams { a: p.c - p.a, b: p.c - p.b, c: 1.0 + s }, u, tol)?;
    Ok(c1 * t1 + c2 * u.powc(C64::from(s)) * t2)
}

/// Continuation coefficients `u_n`, `h_n`, `v_n` for `F(a, a; c; z)`,
/// `|z| > 1`.
pub fn continuation_coeffs(a: f64, c: f64, n: usize) -> Result<ContinuationCoeffs> {
    let pref = gamma(c)? / (gamma(a)? * gamma(c - a)?);
    let mut u_n = pref;
    let mut h_n = 2.0 * digamma(1.0)? - digamma(a)? - digamma(c - a)?;
    for k in 0..n {
        let kf = k as f64;
        u_n *= (a + kf) * (1.0 - c + a + kf) / ((kf + 1.0) * (kf + 1.0));
        h_n += 2.0 / (1.0 + kf) - 1.0 / (a + kf) + 1.0 / (c - a - kf - 1.0);
    }
    Ok(ContinuationCoeffs { n, u_n, v_n: u_n * h_n, h_n })
}

/// Logarithmic continuation of `F(a, a; c; z)` for `|z| > 1`,
/// `|arg(-z)| < pi`:
///
/// `F(a,a;c;z) = (-z)^{-a} [ log(-z) u(z) + v(z) ]`
///
/// with `u`, `v` the series in `z^{-1}` whose coefficients are
/// [`continuation_coeffs`].
pub fn f_continuation_log(a: f64, c: f64, z: C64, tol: f64) -> Result<C64> {
    let modulus = z.norm();
    if modulus <= 1.0 {
        return Err(TricomiError::domain(
            "f_continuation_log",
            format!("requires |z| > 1, got {modulus}"),
        ));
    }
    if z.im == 0.0 && z.re >= 0.0 {
        return Err(TricomiError::domain(
            "f_continuation_log",
            "z on the excluded ray [0, inf): |arg(-z)| < pi fails",
        ));
    }
    let pref = gamma(c)? / (gamma(a)? * gamma(c - a)?);
    let zinv = C64::from(1.0) / z;
    let mut coeff = pref;
    let mut h = 2.0 * digamma(1.0)? - digamma(a)? - digamma(c - a)?;
    let mut zpow = C64::from(1.0);
    let mut u = C64::from(0.0);
    let mut v = C64::from(0.0);
    let ratio = zinv.norm();
    let mut converged = false;
    for n in 0..10_000 {
        let nf = n as f64;
        u += coeff * zpow;
        v += coeff * h * zpow;
        let tail = coeff.abs() * (1.0 + h.abs()) * zpow.norm() * ratio / (1.0 - ratio);
        if n > 2 && tail < tol {
            converged = true;
            break;
        }
        coeff *= (a + nf) * (1.0 - c + a + nf) / ((nf + 1.0) * (nf + 1.0));
        h += 2.0 / (1.0 + nf) - 1.0 / (a + nf) + 1.0 / (c - a - nf - 1.0);
        zpow *= zinv;
    }
    if !converged {
        return Err(TricomiError::NoConvergence {
            context: "f_continuation_log",
            terms: 10_000,
            modulus,
        });
    }
    let minus_z = -z;
    Ok(minus_z.powc(C64::from(-a)) * (minus_z.ln() * u + v))
}

/// One Taylor recentering step for the hypergeometric ODE
/// `z(1-z) F'' + (c - (a+b+1) z) F' - a b F = 0`.
///
/// Given `(F, F')` at `z0`, returns `(F, F')` at `z0 + h`, where `|h|` must
/// stay well inside `min(|z0|, |z0 - 1|)`.
fn taylor_step(p: HypParams, z0: C64, f: C64, fp: C64, h: C64) -> Result<(C64, C64)> {
    let p0 = z0 * (C64::from(1.0) - z0);
    let p1 = C64::from(1.0) - 2.0 * z0;
    let q0 = C64::from(p.c) - (p.a + p.b + 1.0) * z0;
    let q1 = -(p.a + p.b + 1.0);
    let r = -p.a * p.b;

    let mut c_prev = f; // c_k
    let mut c_curr = fp; // c_{k+1}
    let mut hp = C64::from(1.0); // h^k
    let mut sum = C64::from(0.0);
    let mut dsum = C64::from(0.0);
    let hn = h.norm();
    for k in 0..400 {
        let kf = k as f64;
        let term = c_prev * hp;
        sum += term;
        if k >= 1 {
            dsum += kf * c_prev * hp / h;
        }
        if k > 4 && term.norm() < 1e-16 * sum.norm() && (c_curr * hp * h).norm() < 1e-16 * sum.norm()
        {
            return Ok((sum, dsum));
        }
        // recurrence for c_{k+2}
        let num = (p1 * kf + q0) * (kf + 1.0) * c_curr + (-kf * (kf - 1.0) + q1 * kf + r) * c_prev;
        let c_next = -num / (p0 * ((kf + 2.0) * (kf + 1.0)));
        c_prev = c_curr;
        c_curr = c_next;
        hp *= h;
        let _ = hn;
    }
    Err(TricomiError::NoConvergence { context: "taylor_step", terms: 400, modulus: hn })
}

/// Evaluate `F(a,b;c;z)` by Taylor-stepping along the ray from
/// `0.5 z/|z|` to `z`. Used for the annulus near the unit circle (away from
/// the cut) where series, Pfaff, connection and continuation all converge
/// too slowly.
fn f_taylor_path(p: HypParams, z: C64, tol: f64) -> Result<C64> {
    let dir = z / z.norm();
    let mut cur = 0.5 * dir;
    let mut f = f_series(p, cur, tol * 0.1)?;
    let mut fp = C64::from(p.a * p.b / p.c)
        * f_series(HypParams { a: p.a + 1.0, b: p.b + 1.0, c: p.c + 1.0 }, cur, tol * 0.1)?;
    for _ in 0..200 {
        let remaining = z - cur;
        let radius = cur.norm().min((cur - 1.0).norm());
        let max_step = 0.35 * radius;
        let h = if remaining.norm() <= max_step {
            remaining
        } else {
            remaining / remaining.norm() * max_step
        };
        let (nf, nfp) = taylor_step(p, cur, f, fp, h)?;
        f = nf;
        fp = nfp;
        cur += h;
        if (z - cur).norm() < 1e-300 {
            return Ok(f);
        }
    }
    Err(TricomiError::NoConvergence { context: "f_taylor_path", terms: 200, modulus: z.norm() })
}

fn dispatch(p: HypParams, z: C64, cut_side: CutSide, tol: f64, exclude_one: bool) -> Result<C64> {
    if exclude_one && (z - 1.0).norm() < 1e-6 {
        return Err(TricomiError::domain(
            "f76",
            "F(7/6,7/6;2;z) diverges at z = 1; a 1e-6 neighborhood is excluded",
        ));
    }
    // On the cut [1, inf): Richardson extrapolation of z + i s delta, delta -> 0.
    if z.im == 0.0 && z.re >= 1.0 {
        if (z.re - 1.0).abs() < 1e-14 {
            return f_at_one(p).map(C64::from);
        }
        return cut_richardson(p, z.re, cut_side, tol, exclude_one);
    }
    let m = z.norm();
    if m <= 0.9 {
        return f_series(p, z, tol);
    }
    if (z - 1.0).norm() <= 0.5 {
        return f_connection_at_one(p, z, tol);
    }
    if m >= 1.4 {
        if p.a == p.b {
            return f_continuation_log(p.a, p.c, z, tol);
        }
        // not reached by the public dispatchers; fall through to Pfaff
    }
    if z.re <= 0.5 {
        if let Ok(v) = f_pfaff(p, z, tol) {
            return Ok(v);
        }
    }
    f_taylor_path(p, z, tol)
}

/// Side limit on the cut by Richardson extrapolation in `delta` of values at
/// `z + i s delta`.
fn cut_richardson(p: HypParams, x: f64, cut_side: CutSide, tol: f64, exclude_one: bool) -> Result<C64> {
    let s = cut_side.sign();
    let d0 = 1e-3 * (x - 1.0).min(1.0).max(1e-9) * x.max(1.0);
    // 4 nodes, polynomial extrapolation to delta = 0 (Neville).
    let mut deltas = [0.0; 4];
    let mut vals = [C64::from(0.0); 4];
    for (k, (dk, vk)) in deltas.iter_mut().zip(vals.iter_mut()).enumerate() {
        *dk = d0 / (1 << k) as f64;
        *vk = dispatch(p, C64::new(x, s * *dk), cut_side, tol, exclude_one)?;
    }
    for level in 1..4 {
        for i in (level..4).rev() {
            let num = vals[i] * deltas[i - level] - vals[i - 1] * deltas[i];
            vals[i] = num / (deltas[i - level] - deltas[i]);
        }
    }
    Ok(vals[3])
}

/// `F(1/6, 1/6; 1; z)` over the whole plane; `cut_side` selects the boundary
/// value on the cut `[1, inf)`.
pub fn f16(z: C64, cut_side: CutSide) -> Result<C64> {
    dispatch(HypParams::f16(), z, cut_side, WORK_TOL, false)
}

/// `F(7/6, 7/6; 2; z) = 36 F'(1/6, 1/6; 1; z)`; a `1e-6` neighborhood of
/// `z = 1` is a domain error (the function diverges there).
pub fn f76(z: C64, cut_side: CutSide) -> Result<C64> {
    dispatch(HypParams::f76(), z, cut_side, WORK_TOL, true)
}
