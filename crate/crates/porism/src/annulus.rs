//! Inversion of a Soddy pair onto a concentric annulus.
//!
//! The two nested Soddy circles generate a coaxial pencil with two limiting
//! points on the porism axis. Inverting in either limiting point sends both
//! circles to concentric circles; the chain then lives in an ordinary
//! annulus where its circles are congruent and equally spaced.

use crate::circle::{Circle, Point};
use crate::error::{Error, Result};
use crate::gauge::Gauge;

/// Map taking the gauge frame to a frame where the Soddy circles are
/// concentric at the origin. The concentric case is the identity.
#[derive(Debug, Clone, Copy)]
pub struct AnnulusMap {
    inversion: Option<Inversion>,
    post_scale: f64,
    post_translate: Point,
    rho_inner: f64,
    rho_outer: f64,
}

#[derive(Debug, Clone, Copy)]
struct Inversion {
    center: Point,
    power: f64,
}

impl Inversion {
    /// Image of a circle not passing through the inversion center.
    fn circle(&self, c: &Circle) -> Result<Circle> {
        let scale = c.radius * c.radius + self.center.dist_sq(c.center());
        let denom = self.center.dist_sq(c.center()) - c.radius * c.radius;
        if denom.abs() <= 1e-14 * scale.max(1.0) {
            return Err(Error::Numeric(
                "circle through the inversion center has no circle image".into(),
            ));
        }
        let f = self.power / denom;
        Ok(Circle::new(
            self.center.x + f * (c.cx - self.center.x),
            self.center.y + f * (c.cy - self.center.y),
            (self.power * c.radius / denom).abs(),
        ))
    }
}

impl AnnulusMap {
    /// Builds the map for a gauge. For `d > 0` the inversion center is the
    /// limiting point of the pencil that lies inside the inner Soddy circle.
    pub fn for_gauge(g: &Gauge) -> Result<AnnulusMap> {
        let (big_r, r, d) = (g.outer_radius(), g.inner_radius(), g.center_distance());
        if d == 0.0 {
            return Ok(AnnulusMap {
                inversion: None,
                post_scale: 1.0,
                post_translate: Point::ORIGIN,
                rho_inner: r,
                rho_outer: big_r,
            });
        }

        // Limiting points are the roots of l^2 - 2*x_rad*l + R^2 = 0 where
        // x_rad locates the radical axis. The co-root form avoids the
        // cancellation in x_rad - sqrt(...) for nearly concentric gauges.
        let x_rad = (d * d + big_r * big_r - r * r) / (2.0 * d);
        let far = x_rad + (x_rad * x_rad - big_r * big_r).sqrt();
        let near = big_r * big_r / far;
        let inv = Inversion {
            center: Point::new(near, 0.0),
            power: 1.0,
        };

        let outer_img = inv.circle(&g.outer_circle())?;
        let inner_img = inv.circle(&g.inner_circle())?;
        let center = Point::new(
            0.5 * (outer_img.cx + inner_img.cx),
            0.5 * (outer_img.cy + inner_img.cy),
        );
        Ok(AnnulusMap {
            inversion: Some(inv),
            post_scale: 1.0,
            post_translate: Point::new(-center.x, -center.y),
            rho_inner: outer_img.radius.min(inner_img.radius),
            rho_outer: outer_img.radius.max(inner_img.radius),
        })
    }

    /// Radii `(rho1, rho2)` of the concentric images of the Soddy circles,
    /// `rho1 < rho2` (equal only in degenerate limits).
    pub fn annulus_radii(&self) -> (f64, f64) {
        (self.rho_inner, self.rho_outer)
    }

    /// Maps a gauge-frame circle into the annulus frame.
    pub fn to_annulus(&self, c: &Circle) -> Result<Circle> {
        match self.inversion {
            None => Ok(*c),
            Some(inv) => {
                let img = inv.circle(c)?;
                Ok(Circle::new(
                    self.post_scale * (img.cx + self.post_translate.x),
                    self.post_scale * (img.cy + self.post_translate.y),
                    self.post_scale.abs() * img.radius,
                ))
            }
        }
    }

    /// Maps an annulus-frame circle back to the gauge frame.
    pub fn from_annulus(&self, c: &Circle) -> Result<Circle> {
        match self.inversion {
            None => Ok(*c),
            Some(inv) => {
                let pre = Circle::new(
                    c.cx / self.post_scale - self.post_translate.x,
                    c.cy / self.post_scale - self.post_translate.y,
                    c.radius / self.post_scale.abs(),
                );
                inv.circle(&pre)
            }
        }
    }
}
