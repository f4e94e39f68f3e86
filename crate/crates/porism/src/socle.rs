//! Socle recovery: the two circles tangent to all four chain circles.
//!
//! With a signed radius s (positive for the small circle wedged between
//! the chain, negative for the enclosing one) both socles satisfy the same
//! tangency system |p - c_i|^2 = (s + r_i)^2. Differencing two of these
//! equations cancels the quadratic terms, so three circles give two
//! independent linear equations in (x, y, s); the solution line pierced
//! through one original tangency quadratic yields both socles at once.
//! The fourth circle only verifies.

use crate::circle::{Circle, Point};
use crate::error::{Error, Result};

/// Coefficients of the reduced socle quartic
/// `c4 x^4 + c2 x^2 + c1 x + c0` (no cubic term, `c4 = 16`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticCoeffs {
    pub c4: f64,
    pub c2: f64,
    pub c1: f64,
    pub c0: f64,
}

impl QuarticCoeffs {
    pub fn eval(&self, x: f64) -> f64 {
        ((self.c4 * x * x + self.c2) * x + self.c1) * x + self.c0
    }

    /// Largest coefficient magnitude, for scaling residual checks.
    pub fn scale(&self) -> f64 {
        self.c4
            .abs()
            .max(self.c2.abs())
            .max(self.c1.abs())
            .max(self.c0.abs())
    }
}

/// Quartic whose roots include the signed curvatures of both socles of a
/// cyclically tangent quadruple with bends `b`.
pub fn socle_quartic(b: [f64; 4]) -> Result<QuarticCoeffs> {
    if b.iter().any(|&x| !x.is_finite() || x <= 0.0) {
        return Err(Error::Input(format!("bends must be positive, got {b:?}")));
    }
    let [b1, b2, b3, b4] = b;
    let c2 = -8.0 * (b1 * b2 + b2 * b3 + b3 * b4 + b4 * b1 + 2.0 * b1 * b3 + 2.0 * b2 * b4);
    let c1 = -16.0 * (b1 * b2 * b3 + b2 * b3 * b4 + b3 * b4 * b1 + b4 * b1 * b2);
    let c0 = -12.0 * b1 * b2 * b3 * b4 - 2.0 * (b1 * b2 + b3 * b4) * (b2 * b3 + b4 * b1)
        + (b1 * b1 + b3 * b3) * (b2 * b2 + b4 * b4);
    Ok(QuarticCoeffs {
        c4: 16.0,
        c2,
        c1,
        c0,
    })
}

/// Finds the inner socle (externally tangent to all four circles) and the
/// outer socle (containing and internally tangent to all four).
///
/// Fails with `NoSocle` when the residual against any circle exceeds
/// `tol * scale`, and with `SingularSystem` when every center triple is
/// collinear.
pub fn find_socles(circles: &[Circle; 4], tol: f64) -> Result<(Circle, Circle)> {
    // Pick the solve-triple with the largest center triangle; the omitted
    // circle becomes the primary verification witness.
    let mut best: Option<(usize, f64)> = None;
    for omit in 0..4 {
        let idx: Vec<usize> = (0..4).filter(|&i| i != omit).collect();
        let (p0, p1, p2) = (
            circles[idx[0]].center(),
            circles[idx[1]].center(),
            circles[idx[2]].center(),
        );
        let area2 = ((p1.x - p0.x) * (p2.y - p0.y) - (p1.y - p0.y) * (p2.x - p0.x)).abs();
        if best.is_none_or(|(_, a)| area2 > a) {
            best = Some((omit, area2));
        }
    }
    let (omit, area2) = best.unwrap();
    let spread: f64 = circles
        .iter()
        .map(|c| c.radius)
        .fold(0.0, |acc, r| acc.max(r));
    if area2 <= 1e-12 * (spread * spread).max(1.0) {
        return Err(Error::SingularSystem);
    }
    let idx: Vec<usize> = (0..4).filter(|&i| i != omit).collect();
    let (c0, c1, c2) = (&circles[idx[0]], &circles[idx[1]], &circles[idx[2]]);

    // Difference rows: 2(xj-x0) x + 2(yj-y0) y + 2(rj-r0) s = h_j - h_0
    // with h = cx^2 + cy^2 - r^2. Solve the 2x2 block for (x, y) as an
    // affine function of s.
    let h = |c: &Circle| c.cx * c.cx + c.cy * c.cy - c.radius * c.radius;
    let m11 = 2.0 * (c1.cx - c0.cx);
    let m12 = 2.0 * (c1.cy - c0.cy);
    let m21 = 2.0 * (c2.cx - c0.cx);
    let m22 = 2.0 * (c2.cy - c0.cy);
    let det = m11 * m22 - m12 * m21;
    let rhs1 = (h(c1) - h(c0), -2.0 * (c1.radius - c0.radius));
    let rhs2 = (h(c2) - h(c0), -2.0 * (c2.radius - c0.radius));
    // (x, y) = p + s * q
    let p = Point::new(
        (rhs1.0 * m22 - rhs2.0 * m12) / det,
        (m11 * rhs2.0 - m21 * rhs1.0) / det,
    );
    let q = Point::new(
        (rhs1.1 * m22 - rhs2.1 * m12) / det,
        (m11 * rhs2.1 - m21 * rhs1.1) / det,
    );

    // Substitute the line into |p + s q - c0|^2 = (s + r0)^2.
    let ex = p.x - c0.cx;
    let ey = p.y - c0.cy;
    let a2 = q.x * q.x + q.y * q.y - 1.0;
    let a1 = 2.0 * (ex * q.x + ey * q.y - c0.radius);
    let a0 = ex * ex + ey * ey - c0.radius * c0.radius;

    let roots = if a2.abs() <= 1e-14 * (q.x * q.x + q.y * q.y + 1.0) {
        if a1 == 0.0 {
            return Err(Error::NoSocle("degenerate tangency quadratic".into()));
        }
        vec![-a0 / a1]
    } else {
        let disc = a1 * a1 - 4.0 * a2 * a0;
        if disc < 0.0 {
            return Err(Error::NoSocle(format!(
                "tangency quadratic has no real solution (disc = {disc})"
            )));
        }
        let sq = disc.sqrt();
        let qq = -0.5 * (a1 + a1.signum() * sq);
        if qq == 0.0 {
            vec![-a1 / (2.0 * a2)]
        } else {
            vec![qq / a2, a0 / qq]
        }
    };

    let mut inner: Option<Circle> = None;
    let mut outer: Option<Circle> = None;
    for s in roots {
        let center = Point::new(p.x + s * q.x, p.y + s * q.y);
        if s > 0.0 {
            inner = Some(Circle::new(center.x, center.y, s));
        } else if s < 0.0 {
            outer = Some(Circle::new(center.x, center.y, -s));
        }
    }
    let (inner, outer) = match (inner, outer) {
        (Some(i), Some(o)) => (i, o),
        _ => {
            return Err(Error::NoSocle(
                "tangency solutions do not split into inner and outer circles".into(),
            ))
        }
    };

    let scale = outer.radius.max(spread);
    for c in circles.iter() {
        let res_in = inner.center().dist(c.center()) - (inner.radius + c.radius);
        let res_out = outer.center().dist(c.center()) - (outer.radius - c.radius);
        if res_in.abs() > tol * scale || res_out.abs() > tol * scale {
            return Err(Error::NoSocle(format!(
                "tangency residuals ({res_in:.3e}, {res_out:.3e}) exceed tolerance"
            )));
        }
    }
    Ok((inner, outer))
}
