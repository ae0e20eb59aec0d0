//! Coordinate transforms, source-derived quantities, region classification
//! and the continuous branch angle.
//!
//! Characteristic coordinates: `l = 3x + 2(-y)^{3/2}`, `m = 3x - 2(-y)^{3/2}`
//! (hyperbolic half-plane `y <= 0`). The source `(0, b)`, `b < 0`, is
//! `(l0, -l0)` with `l0 = 2(-b)^{3/2} = 3a`.

use crate::{Result, TricomiError, C64};
use serde::Serialize;

/// A point in physical coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysPoint {
    pub x: f64,
    pub y: f64,
}

impl PhysPoint {
    pub fn new(x: f64, y: f64) -> Self {
        PhysPoint { x, y }
    }
}

/// A point in characteristic coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharPoint {
    pub l: f64,
    pub m: f64,
}

impl CharPoint {
    pub fn new(l: f64, m: f64) -> Self {
        CharPoint { l, m }
    }
}

/// Source point data: `b <= 0`, with `3a = 2(-b)^{3/2}` and `l0 = 3a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Source {
    pub b: f64,
    pub a: f64,
    pub l0: f64,
}

/// Region of a point relative to the source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Region {
    DI,
    DII,
    DIII,
    DIV,
    OnSourceCharacteristic,
    OnReflectedCharacteristic,
    OnAxis,
    DPlus,
    DMinus,
    OnOriginCharacteristic,
}

impl Region {
    pub fn as_str(self) -> &'static str {
        match self {
            Region::DI => "DI",
            Region::DII => "DII",
            Region::DIII => "DIII",
            Region::DIV => "DIV",
            Region::OnSourceCharacteristic => "OnSourceCharacteristic",
            Region::OnReflectedCharacteristic => "OnReflectedCharacteristic",
            Region::OnAxis => "OnAxis",
            Region::DPlus => "DPlus",
            Region::DMinus => "DMinus",
            Region::OnOriginCharacteristic => "OnOriginCharacteristic",
        }
    }

    /// Is this one of the interior (open region) tags?
    pub fn is_interior(self) -> bool {
        matches!(
            self,
            Region::DI | Region::DII | Region::DIII | Region::DIV | Region::DPlus | Region::DMinus
        )
    }
}

/// The branch decomposition `z = rho e^{i theta}` of
/// `z = 9(x^2 - a^2) + 4y^3 - 12a(-y)^{3/2}`, with the continuous lift
/// `theta = 0` outside the reflected characteristics, `theta = pi` inside
/// them, and `theta = arg z` in `(0, pi)` for `y > 0` (where
/// `(-y)^{3/2} = -i y^{3/2}`).
///
/// The branch power used everywhere is `z^{-1/6} = rho^{-1/6} e^{-i theta/6}`.
#[derive(Debug, Clone, Copy)]
pub struct BranchData {
    pub z: C64,
    pub rho: f64,
    pub theta: f64,
}

/// Default geometric tolerance for boundary tagging.
pub fn default_eps_geo(s: &Source) -> f64 {
    1e-9 * (1.0 + s.l0.abs())
}

/// Characteristic coordinates of a point with `y <= 0`.
pub fn to_char(p: PhysPoint) -> Result<CharPoint> {
    if p.y > 0.0 {
        return Err(TricomiError::domain(
            "to_char",
            format!("characteristic coordinates need y <= 0, got y = {}", p.y),
        ));
    }
    let w = 2.0 * (-p.y).powf(1.5);
    Ok(CharPoint { l: 3.0 * p.x + w, m: 3.0 * p.x - w })
}

/// Physical coordinates of a characteristic point with `l >= m`.
pub fn from_char(q: CharPoint) -> Result<PhysPoint> {
    if q.l < q.m {
        return Err(TricomiError::domain(
            "from_char",
            format!("need l >= m, got l = {}, m = {}", q.l, q.m),
        ));
    }
    Ok(PhysPoint { x: (q.l + q.m) / 6.0, y: -((q.l - q.m) / 4.0).powf(2.0 / 3.0) })
}

/// Source data for `b <= 0`. `b > 0` is rejected: no fundamental solutions
/// are available for elliptic source points.
pub fn source_from_b(b: f64) -> Result<Source> {
    if b > 0.0 {
        return Err(TricomiError::domain(
            "source_from_b",
            format!("b = {b} > 0: no fundamental solutions for elliptic source points"),
        ));
    }
    let l0 = 2.0 * (-b).powf(1.5);
    Ok(Source { b, a: l0 / 3.0, l0 })
}

/// `9x^2 + 4y^3`: positive in `D+`, negative in `D-`, zero on the
/// characteristics through the origin.
pub fn origin_discriminant(p: PhysPoint) -> f64 {
    9.0 * p.x * p.x + 4.0 * p.y.powi(3)
}

/// Classify a point relative to the source with boundary tolerance `eps_geo`.
///
/// For `b < 0` (in characteristic coordinates, `y <= 0`):
/// `D_I = {l > l0, m < -l0}`, `D_III = {l > l0, -l0 < m < l0}`,
/// `D_IV = {-l0 < l < l0, m < -l0}` and `D_II` is the rest (the triangle
/// `-l0 < m <= l < l0`, the two outer components, and all of `y > 0`).
/// For `b = 0` the classification degenerates to `D+`/`D-` by the sign of
/// `9x^2 + 4y^3`.
pub fn classify(p: PhysPoint, s: &Source, eps_geo: f64) -> Region {
    if s.b == 0.0 {
        let d = origin_discriminant(p);
        // scale of the discriminant near the curve
        let scale = 1.0 + 9.0 * p.x * p.x + 4.0 * p.y * p.y * p.y.abs();
        if d.abs() <= eps_geo * scale {
            return Region::OnOriginCharacteristic;
        }
        return if d > 0.0 { Region::DPlus } else { Region::DMinus };
    }
    if p.y > eps_geo {
        return Region::DII;
    }
    // on or below the axis (within tolerance): use characteristic coordinates
    let q = to_char(PhysPoint { x: p.x, y: p.y.min(0.0) }).expect("y <= 0 here");
    let l0 = s.l0;
    // reflected characteristics: m = l0 (l >= l0) and l = -l0 (m <= -l0)
    if (q.m - l0).abs() <= eps_geo && q.l >= l0 - eps_geo {
        return Region::OnReflectedCharacteristic;
    }
    if (q.l + l0).abs() <= eps_geo && q.m <= -l0 + eps_geo {
        return Region::OnReflectedCharacteristic;
    }
    // characteristics through the source: l = l0 (m <= l0), m = -l0 (l >= -l0)
    if (q.l - l0).abs() <= eps_geo && q.m <= l0 + eps_geo {
        return Region::OnSourceCharacteristic;
    }
    if (q.m + l0).abs() <= eps_geo && q.l >= -l0 - eps_geo {
        return Region::OnSourceCharacteristic;
    }
    if p.y.abs() <= eps_geo {
        return Region::OnAxis;
    }
    if q.l > l0 {
        if q.m < -l0 {
            Region::DI
        } else if q.m < l0 {
            Region::DIII
        } else {
            Region::DII
        }
    } else if q.l > -l0 {
        if q.m < -l0 {
            Region::DIV
        } else {
            Region::DII // triangle
        }
    } else {
        Region::DII // outer left component (m <= l < -l0)
    }
}

/// Branch decomposition of `z = 9(x^2-a^2) + 4y^3 - 12a(-y)^{3/2}` at `p`.
///
/// Errors on the reflected characteristics (within `eps_geo`), where `z = 0`.
pub fn branch_data(p: PhysPoint, s: &Source, eps_geo: f64) -> Result<BranchData> {
    if p.y > 0.0 {
        let re = 9.0 * (p.x * p.x - s.a * s.a) + 4.0 * p.y.powi(3);
        let im = 12.0 * s.a * p.y.powf(1.5); // (-y)^{3/2} = -i y^{3/2}
        let z = C64::new(re, im);
        let rho = z.norm();
        if rho <= eps_geo {
            return Err(TricomiError::singular(format!(
                "z vanishes at ({}, {})",
                p.x, p.y
            )));
        }
        // a > 0, y > 0 gives Im z > 0, so arg z is the continuous lift
        return Ok(BranchData { z, rho, theta: z.arg() });
    }
    let q = to_char(p)?;
    let zr = (q.l + s.l0) * (q.m - s.l0);
    let scale = (q.l.abs() + s.l0) * (q.m.abs() + s.l0) + 1.0;
    if zr.abs() <= eps_geo * scale {
        return Err(TricomiError::singular(format!(
            "point ({}, {}) lies on a reflected characteristic",
            p.x, p.y
        )));
    }
    let theta = if zr > 0.0 { 0.0 } else { std::f64::consts::PI };
    Ok(BranchData { z: C64::from(zr), rho: zr.abs(), theta })
}

/// The hypergeometric argument
/// `zeta = (l - l0)(m + l0) / ((l + l0)(m - l0))`, equal to
/// `conj(z) / z` (modulus 1) for `y > 0`.
pub fn zeta(p: PhysPoint, s: &Source, eps_geo: f64) -> Result<C64> {
    let bd = branch_data(p, s, eps_geo)?;
    if p.y > 0.0 {
        return Ok(bd.z.conj() / bd.z);
    }
    let q = to_char(p)?;
    Ok(C64::from((q.l - s.l0) * (q.m + s.l0) / ((q.l + s.l0) * (q.m - s.l0))))
}
