//! Planar circles and tangency classification.

use serde::{Deserialize, Serialize};

/// A point in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Point {
        Point { x, y }
    }

    pub fn dist(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn dist_sq(self, other: Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }
}

/// A circle with positive radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub cx: f64,
    pub cy: f64,
    pub radius: f64,
}

impl Circle {
    pub fn new(cx: f64, cy: f64, radius: f64) -> Circle {
        Circle { cx, cy, radius }
    }

    pub fn center(&self) -> Point {
        Point::new(self.cx, self.cy)
    }

    /// Curvature 1/radius.
    pub fn bend(&self) -> f64 {
        1.0 / self.radius
    }
}

/// Mutual position of two circles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TangencyClass {
    External,
    Internal,
    Disjoint,
    Nested,
    Overlapping,
}

impl TangencyClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            TangencyClass::External => "external",
            TangencyClass::Internal => "internal",
            TangencyClass::Disjoint => "disjoint",
            TangencyClass::Nested => "nested",
            TangencyClass::Overlapping => "overlapping",
        }
    }
}

/// Classifies the mutual position of two circles. Tangency is decided
/// within `tol` scaled by the larger radius.
pub fn tangency_class(c1: &Circle, c2: &Circle, tol: f64) -> TangencyClass {
    let dist = c1.center().dist(c2.center());
    let sum = c1.radius + c2.radius;
    let diff = (c1.radius - c2.radius).abs();
    let scale = c1.radius.max(c2.radius);
    if (dist - sum).abs() <= tol * scale {
        TangencyClass::External
    } else if (dist - diff).abs() <= tol * scale {
        TangencyClass::Internal
    } else if dist > sum {
        TangencyClass::Disjoint
    } else if dist < diff {
        TangencyClass::Nested
    } else {
        TangencyClass::Overlapping
    }
}
