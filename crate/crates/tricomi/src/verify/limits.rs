//! Pointwise limit studies as the source depth b tends to 0.

use crate::fundsol::{eval_solution, SolutionKind};
use crate::geometry::{source_from_b, PhysPoint};
use crate::{Result, TricomiError};

/// The geometric sequence `b = -2^{-k}`, `k = 1..=n`.
pub fn geometric_b_sequence(n: usize) -> Vec<f64> {
    (1..=n).map(|k| -(0.5f64).powi(k as i32)).collect()
}

/// Deviations `|E_kind(p; b) - limit(p)|` per b, where the limit is
/// `F-` for EI, `F+` for ESharp, and 0 for EIII / EIV.
pub fn limit_study(kind: SolutionKind, p: PhysPoint, b_sequence: &[f64]) -> Result<Vec<f64>> {
    let origin = source_from_b(0.0)?;
    let limit = match kind {
        SolutionKind::EI => eval_solution(SolutionKind::FMinus, p, &origin)?,
        SolutionKind::ESharp => eval_solution(SolutionKind::FPlus, p, &origin)?,
        SolutionKind::EIII | SolutionKind::EIV => crate::C64::from(0.0),
        _ => {
            return Err(TricomiError::domain(
                "limit_study",
                format!("no b -> 0 limit is defined for {kind:?}"),
            ))
        }
    };
    let mut out = Vec::with_capacity(b_sequence.len());
    for &b in b_sequence {
        let s = source_from_b(b)?;
        let v = eval_solution(kind, p, &s)?;
        out.push((v - limit).norm());
    }
    Ok(out)
}

/// True when the sequence never increases, is strictly decreasing while the
/// deviations are nonzero, and ends at or below `frac` of its first entry.
pub fn is_converging(devs: &[f64], frac: f64) -> bool {
    if devs.is_empty() {
        return false;
    }
    for w in devs.windows(2) {
        if w[1] > w[0] || (w[1] == w[0] && w[0] != 0.0) {
            return false;
        }
    }
    devs[devs.len() - 1] <= frac * devs[0].max(f64::MIN_POSITIVE)
}
