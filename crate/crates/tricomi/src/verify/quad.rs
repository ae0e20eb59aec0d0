//! Gauss-Legendre rules and graded composite meshes for integrands with
//! integrable endpoint singularities.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

fn rule_cache() -> &'static Mutex<HashMap<usize, Vec<(f64, f64)>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<(f64, f64)>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`, by Newton iteration on the
/// Legendre polynomial from the Chebyshev-based initial guess.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 1);
    if let Some(r) = rule_cache().lock().unwrap().get(&n) {
        return r.clone();
    }
    let mut rule = Vec::with_capacity(n);
    for i in 0..n {
        // initial guess: Chebyshev angle
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut pp = 0.0;
        for _ in 0..100 {
            // evaluate P_n and P_n' by the three-term recurrence
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 1 { x } else { p1 };
            pp = n as f64 * (x * pn - p0) / (x * x - 1.0);
            let dx = pn / pp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.push((x, w));
    }
    rule.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    rule_cache().lock().unwrap().insert(n, rule.clone());
    rule
}

/// Integrate `f` over `[a, b]` with a single Gauss rule of order `n`.
pub fn integrate_1d<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, n: usize) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    gauss_legendre(n).iter().map(|&(x, w)| w * f(mid + half * x)).sum::<f64>() * half
}

/// A mesh cell `[lo, hi]`.
pub type Cell = (f64, f64);

/// Split `[a, b]` at the interior breakpoints and grade `cells` cells toward
/// each breakpoint flagged singular (spacing proportional to
/// `distance^grading`). Non-singular panels get a uniform mesh.
///
/// `breaks` holds `(position, is_singular)`; positions outside `(a, b)` are
/// ignored except that a singular breakpoint at (or within `1e-12` of) an
/// endpoint grades the adjacent panel toward that endpoint.
pub fn graded_mesh(a: f64, b: f64, breaks: &[(f64, bool)], cells: usize, grading: f64) -> Vec<Cell> {
    assert!(b > a);
    let tol = 1e-12 * (1.0 + a.abs() + b.abs());
    let mut pts: Vec<(f64, bool)> = vec![(a, false), (b, false)];
    for &(p, s) in breaks {
        if p > a + tol && p < b - tol {
            pts.push((p, s));
        } else if s && ((p - a).abs() <= tol || (p - b).abs() <= tol) {
            // singular endpoint: mark the matching mesh endpoint
            for q in pts.iter_mut() {
                if (q.0 - p).abs() <= tol {
                    q.1 = true;
                }
            }
        }
    }
    pts.sort_by(|u, v| u.0.partial_cmp(&v.0).unwrap());
    pts.dedup_by(|u, v| {
        if (u.0 - v.0).abs() <= tol {
            v.1 |= u.1;
            true
        } else {
            false
        }
    });
    let mut out = Vec::new();
    for w in pts.windows(2) {
        let (p0, s0) = w[0];
        let (p1, s1) = w[1];
        panel_mesh(p0, p1, s0, s1, cells, grading, &mut out);
    }
    out
}

fn panel_mesh(p0: f64, p1: f64, s0: bool, s1: bool, cells: usize, grading: f64, out: &mut Vec<Cell>) {
    let width = p1 - p0;
    match (s0, s1) {
        (false, false) => {
            for i in 0..cells {
                out.push((
                    p0 + width * i as f64 / cells as f64,
                    p0 + width * (i + 1) as f64 / cells as f64,
                ));
            }
        }
        (true, false) => {
            for i in 0..cells {
                let t0 = (i as f64 / cells as f64).powf(grading);
                let t1 = ((i + 1) as f64 / cells as f64).powf(grading);
                out.push((p0 + width * t0, p0 + width * t1));
            }
        }
        (false, true) => {
            for i in (0..cells).rev() {
                let t0 = ((i + 1) as f64 / cells as f64).powf(grading);
                let t1 = (i as f64 / cells as f64).powf(grading);
                out.push((p1 - width * t0, p1 - width * t1));
            }
        }
        (true, true) => {
            let mid = p0 + 0.5 * width;
            panel_mesh(p0, mid, true, false, cells, grading, out);
            panel_mesh(mid, p1, false, true, cells, grading, out);
        }
    }
}

/// Integrate `f` over `[a, b]` on a graded mesh, summing cells in order.
pub fn integrate_graded<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    breaks: &[(f64, bool)],
    cells: usize,
    order: usize,
    grading: f64,
) -> f64 {
    let mut total = 0.0;
    for (lo, hi) in graded_mesh(a, b, breaks, cells, grading) {
        total += integrate_1d(&mut f, lo, hi, order);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn five_point_rule_matches_published_values() {
        let r = gauss_legendre(5);
        // classic 5-point abscissae/weights
        assert_relative_eq!(r[0].0, -0.9061798459386640, max_relative = 1e-13);
        assert_relative_eq!(r[1].0, -0.5384693101056831, max_relative = 1e-13);
        assert_relative_eq!(r[2].0, 0.0, epsilon = 1e-14);
        assert_relative_eq!(r[0].1, 0.2369268850561891, max_relative = 1e-13);
        assert_relative_eq!(r[2].1, 0.5688888888888889, max_relative = 1e-13);
        let wsum: f64 = r.iter().map(|&(_, w)| w).sum();
        assert_relative_eq!(wsum, 2.0, max_relative = 1e-14);
    }

    #[test]
    fn polynomial_exactness() {
        // order-n Gauss is exact through degree 2n-1
        let v = integrate_1d(|x| x.powi(9) + 3.0 * x.powi(4) - x, 0.0, 2.0, 5);
        let exact = 2.0f64.powi(10) / 10.0 + 3.0 * 2.0f64.powi(5) / 5.0 - 2.0;
        assert_relative_eq!(v, exact, max_relative = 1e-13);
    }

    #[test]
    fn smooth_oscillatory_reference() {
        let v = integrate_graded(|x| (5.0 * x).sin(), 0.0, 1.0, &[], 8, 12, 3.0);
        assert_relative_eq!(v, (1.0 - 5.0f64.cos()) / 5.0, max_relative = 1e-12);
    }

    #[test]
    fn graded_mesh_handles_inverse_sixth_root() {
        // integrand with the same endpoint order as the solutions
        let v = integrate_graded(|x| x.powf(-1.0 / 6.0), 0.0, 1.0, &[(0.0, true)], 16, 12, 3.0);
        assert_relative_eq!(v, 6.0 / 5.0, max_relative = 1e-5);
        // stronger grading sharpens the result
        let v = integrate_graded(|x| x.powf(-1.0 / 6.0), 0.0, 1.0, &[(0.0, true)], 32, 12, 5.0);
        assert_relative_eq!(v, 6.0 / 5.0, max_relative = 1e-8);
        // interior singular breakpoint, both sides
        let v = integrate_graded(
            |x| (x - 0.3f64).abs().powf(-0.25),
            0.0,
            1.0,
            &[(0.3, true)],
            24,
            12,
            5.0,
        );
        let exact = (0.3f64.powf(0.75) + 0.7f64.powf(0.75)) / 0.75;
        assert_relative_eq!(v, exact, max_relative = 1e-6);
    }

    #[test]
    fn logarithmic_endpoint() {
        let v = integrate_graded(|x: f64| x.ln(), 0.0, 1.0, &[(0.0, true)], 16, 12, 3.0);
        assert_relative_eq!(v, -1.0, max_relative = 1e-5);
        let v = integrate_graded(|x: f64| x.ln(), 0.0, 1.0, &[(0.0, true)], 32, 12, 5.0);
        assert_relative_eq!(v, -1.0, max_relative = 1e-9);
    }

    #[test]
    fn mesh_covers_interval_without_gaps() {
        let mesh = graded_mesh(-1.0, 2.0, &[(0.0, true), (0.5, false), (5.0, true)], 6, 3.0);
        assert!((mesh.first().unwrap().0 - -1.0).abs() < 1e-14);
        assert!((mesh.last().unwrap().1 - 2.0).abs() < 1e-14);
        for w in mesh.windows(2) {
            assert!((w[0].1 - w[1].0).abs() < 1e-13);
            assert!(w[0].1 > w[0].0);
        }
    }
}
