//! Smooth compactly supported test functions with closed-form derivatives.

use crate::geometry::PhysPoint;

/// The standard exponential bump
/// `phi(x, y) = amp * exp(1 - 1/(1 - rho^2))` for
/// `rho^2 = ((x-cx)^2 + (y-cy)^2)/r^2 < 1`, zero outside.
#[derive(Debug, Clone, Copy)]
pub struct BumpSpec {
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
    pub amp: f64,
}

impl BumpSpec {
    pub fn new(cx: f64, cy: f64, r: f64, amp: f64) -> Self {
        assert!(r > 0.0, "bump radius must be positive");
        BumpSpec { cx, cy, r, amp }
    }

    fn u(&self, p: PhysPoint) -> f64 {
        let dx = p.x - self.cx;
        let dy = p.y - self.cy;
        (dx * dx + dy * dy) / (self.r * self.r)
    }

    // g(u) = exp(1 - 1/(1-u)) and its u-derivatives:
    // g' = -g/(1-u)^2, g'' = g/(1-u)^4 - 2g/(1-u)^3.
    fn g(&self, u: f64) -> (f64, f64, f64) {
        let s = 1.0 - u;
        let g = (1.0 - 1.0 / s).exp();
        let gp = -g / (s * s);
        let gpp = g / (s * s * s * s) - 2.0 * g / (s * s * s);
        (g, gp, gpp)
    }

    pub fn phi(&self, p: PhysPoint) -> f64 {
        let u = self.u(p);
        if u >= 1.0 {
            return 0.0;
        }
        self.amp * self.g(u).0
    }

    /// Gradient `(phi_x, phi_y)`.
    pub fn grad(&self, p: PhysPoint) -> (f64, f64) {
        let u = self.u(p);
        if u >= 1.0 {
            return (0.0, 0.0);
        }
        let (_, gp, _) = self.g(u);
        let r2 = self.r * self.r;
        let ux = 2.0 * (p.x - self.cx) / r2;
        let uy = 2.0 * (p.y - self.cy) / r2;
        (self.amp * gp * ux, self.amp * gp * uy)
    }

    /// Second derivatives `(phi_xx, phi_xy, phi_yy)`.
    pub fn hess(&self, p: PhysPoint) -> (f64, f64, f64) {
        let u = self.u(p);
        if u >= 1.0 {
            return (0.0, 0.0, 0.0);
        }
        let (_, gp, gpp) = self.g(u);
        let r2 = self.r * self.r;
        let ux = 2.0 * (p.x - self.cx) / r2;
        let uy = 2.0 * (p.y - self.cy) / r2;
        let uxx = 2.0 / r2;
        (
            self.amp * (gpp * ux * ux + gp * uxx),
            self.amp * gpp * ux * uy,
            self.amp * (gpp * uy * uy + gp * uxx),
        )
    }
}

/// The image of the bump under the mixed-type operator: `y phi_xx + phi_yy`.
pub fn bump_t(spec: &BumpSpec, p: PhysPoint) -> f64 {
    let (pxx, _, pyy) = spec.hess(p);
    p.y * pxx + pyy
}
