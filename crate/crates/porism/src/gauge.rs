//! The gauge of a poristic family: Soddy radii, center distance, chain length.
//!
//! A pair of nested circles with radii `R > r` and center distance `d`
//! supports closed Steiner n-chains exactly when the Pedoe relation
//! `d^2 = (R - r)^2 - 4 q R r` holds, with `q = tan^2(pi/n)`.

use crate::circle::Circle;
use crate::error::{Error, Result};

/// Default relative tolerance for gauge residuals.
pub const GAUGE_TOL: f64 = 1e-9;

/// `tan^2(pi/n)`, exact for the chain lengths with rational tangent squares.
pub fn pedoe_q(n: u32) -> f64 {
    match n {
        3 => 3.0,
        4 => 1.0,
        6 => 1.0 / 3.0,
        _ => {
            let t = (std::f64::consts::PI / f64::from(n)).tan();
            t * t
        }
    }
}

/// Soddy pair data `(R, r, d)` plus chain length `n`, satisfying the
/// Pedoe relation. The coordinate frame places the outer circle at the
/// origin and the inner circle at `(d, 0)`; the x-axis is the porism axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gauge {
    outer: f64,
    inner: f64,
    dist: f64,
    n: u32,
}

impl Gauge {
    /// Builds the gauge for Soddy radii `(R, r)` and chain length `n`,
    /// deriving the center distance from the Pedoe relation.
    pub fn new(outer: f64, inner: f64, n: u32) -> Result<Gauge> {
        check_basics(outer, inner, n)?;
        let q = pedoe_q(n);
        let mut disc = (outer - inner) * (outer - inner) - 4.0 * q * outer * inner;
        // Exact concentric inputs can land a few ulps below zero.
        if disc < 0.0 && disc >= -1e-12 * (outer * outer).max(1.0) {
            disc = 0.0;
        }
        if disc < 0.0 {
            return Err(Error::Domain(format!(
                "no Steiner {n}-chain porism for R={outer}, r={inner}: \
                 (R-r)^2 - 4qRr = {disc} < 0"
            )));
        }
        Ok(Gauge {
            outer,
            inner,
            dist: disc.sqrt(),
            n,
        })
    }

    /// Builds a gauge from an explicit center distance, validating the
    /// Pedoe relation at the default tolerance.
    pub fn with_distance(outer: f64, inner: f64, dist: f64, n: u32) -> Result<Gauge> {
        if !Gauge::validate(outer, inner, dist, n, GAUGE_TOL) {
            return Err(Error::Domain(format!(
                "gauge (R={outer}, r={inner}, d={dist}, n={n}) violates the Pedoe relation"
            )));
        }
        Ok(Gauge {
            outer,
            inner,
            dist,
            n,
        })
    }

    /// Pure predicate: does `(R, r, d, n)` satisfy the Pedoe relation within
    /// `tol`, with `0 <= d < R - r`?
    pub fn validate(outer: f64, inner: f64, dist: f64, n: u32, tol: f64) -> bool {
        if check_basics(outer, inner, n).is_err() {
            return false;
        }
        if !(dist >= 0.0 && dist < outer - inner) {
            return false;
        }
        let q = pedoe_q(n);
        let expected = (outer - inner) * (outer - inner) - 4.0 * q * outer * inner;
        (dist * dist - expected).abs() <= tol * (outer * outer).max(1.0)
    }

    /// Outer Soddy radius `R`.
    pub fn outer_radius(&self) -> f64 {
        self.outer
    }

    /// Inner Soddy radius `r`.
    pub fn inner_radius(&self) -> f64 {
        self.inner
    }

    /// Distance `d` between the Soddy centers.
    pub fn center_distance(&self) -> f64 {
        self.dist
    }

    /// Chain length `n`.
    pub fn chain_len(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> f64 {
        pedoe_q(self.n)
    }

    /// The outer Soddy circle, centered at the origin.
    pub fn outer_circle(&self) -> Circle {
        Circle::new(0.0, 0.0, self.outer)
    }

    /// The inner Soddy circle, centered at `(d, 0)` on the porism axis.
    pub fn inner_circle(&self) -> Circle {
        Circle::new(self.dist, 0.0, self.inner)
    }
}

fn check_basics(outer: f64, inner: f64, n: u32) -> Result<()> {
    if !(outer.is_finite() && inner.is_finite()) || inner <= 0.0 || outer <= inner {
        return Err(Error::Input(format!(
            "need R > r > 0, got R={outer}, r={inner}"
        )));
    }
    if n < 3 {
        return Err(Error::Input(format!("chain length must be >= 3, got {n}")));
    }
    Ok(())
}
