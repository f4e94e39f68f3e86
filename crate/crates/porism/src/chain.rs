//! Explicit Steiner chains and their verification.
//!
//! Chains are built in the annulus frame, where the n chain circles are
//! congruent with centers equally spaced on a mid-circle, then mapped back
//! through the gauge's annulus map. The construction is the geometric
//! oracle for all closed-form results in this crate.

use serde::Deserialize;

use crate::annulus::AnnulusMap;
use crate::circle::{tangency_class, Circle, TangencyClass};
use crate::error::{Error, Result};
use crate::fmt::sig17;
use crate::gauge::Gauge;

/// An ordered Steiner chain. Circle 0 sits at annulus angle `phase`;
/// the order is counterclockwise in the annulus frame.
#[derive(Debug, Clone)]
pub struct Chain {
    circles: Vec<Circle>,
    gauge: Gauge,
    phase: f64,
}

impl Chain {
    pub fn circles(&self) -> &[Circle] {
        &self.circles
    }

    pub fn gauge(&self) -> &Gauge {
        &self.gauge
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn radii(&self) -> Vec<f64> {
        self.circles.iter().map(|c| c.radius).collect()
    }

    pub fn bends(&self) -> Vec<f64> {
        self.circles.iter().map(|c| c.bend()).collect()
    }

    /// Serializes the chain as a JSON object with all doubles printed to
    /// 17 significant digits.
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{{\"gauge\": {{\"R\": {}, \"r\": {}, \"d\": {}, \"n\": {}}}, \"phase\": {}, \"circles\": [",
            sig17(self.gauge.outer_radius()),
            sig17(self.gauge.inner_radius()),
            sig17(self.gauge.center_distance()),
            self.gauge.chain_len(),
            sig17(self.phase),
        ));
        for (i, c) in self.circles.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            out.push_str(&format!(
                "{{\"cx\": {}, \"cy\": {}, \"radius\": {}}}",
                sig17(c.cx),
                sig17(c.cy),
                sig17(c.radius)
            ));
        }
        out.push_str("]}");
        out
    }

    pub fn from_json(text: &str) -> Result<Chain> {
        let parsed: ChainJson = serde_json::from_str(text)
            .map_err(|e| Error::Input(format!("malformed chain JSON: {e}")))?;
        let gauge = Gauge::with_distance(parsed.gauge.outer, parsed.gauge.inner, parsed.gauge.d, parsed.gauge.n)?;
        if parsed.circles.len() != gauge.chain_len() as usize {
            return Err(Error::Input(format!(
                "chain lists {} circles for n = {}",
                parsed.circles.len(),
                gauge.chain_len()
            )));
        }
        for c in &parsed.circles {
            if !(c.cx.is_finite() && c.cy.is_finite()) || !c.radius.is_finite() || c.radius <= 0.0
            {
                return Err(Error::Input(format!(
                    "invalid circle in chain JSON: ({}, {}, {})",
                    c.cx, c.cy, c.radius
                )));
            }
        }
        Ok(Chain {
            circles: parsed.circles,
            gauge,
            phase: parsed.phase,
        })
    }
}

#[derive(Deserialize)]
struct ChainJson {
    gauge: GaugeJson,
    phase: f64,
    circles: Vec<Circle>,
}

#[derive(Deserialize)]
struct GaugeJson {
    #[serde(rename = "R")]
    outer: f64,
    #[serde(rename = "r")]
    inner: f64,
    d: f64,
    n: u32,
}

/// Builds the chain of the poristic family at the given annulus phase.
pub fn construct_chain(g: &Gauge, phase: f64) -> Result<Chain> {
    if !phase.is_finite() {
        return Err(Error::Input(format!("phase must be finite, got {phase}")));
    }
    let map = AnnulusMap::for_gauge(g)?;
    let (rho1, rho2) = map.annulus_radii();
    let mid = 0.5 * (rho1 + rho2);
    let half_gap = 0.5 * (rho2 - rho1);
    let n = g.chain_len();
    let mut circles = Vec::with_capacity(n as usize);
    for k in 0..n {
        let theta = phase + 2.0 * std::f64::consts::PI * f64::from(k) / f64::from(n);
        let annulus_circle = Circle::new(mid * theta.cos(), mid * theta.sin(), half_gap);
        circles.push(map.from_annulus(&annulus_circle)?);
    }
    Ok(Chain {
        circles,
        gauge: *g,
        phase,
    })
}

/// Residual and classification for one circle pair.
#[derive(Debug, Clone, Copy)]
pub struct PairCheck {
    /// Signed distance defect: `dist - (tangent distance)`.
    pub residual: f64,
    pub class: TangencyClass,
}

/// Per-pair tangency residuals of a chain against its gauge.
#[derive(Debug, Clone)]
pub struct ChainReport {
    /// Residuals between consecutive chain circles (index i pairs i, i+1 mod n).
    pub adjacent: Vec<PairCheck>,
    /// Residuals of each chain circle against the inner Soddy circle.
    pub to_inner: Vec<PairCheck>,
    /// Residuals of each chain circle against the outer Soddy circle.
    pub to_outer: Vec<PairCheck>,
    /// Whether each radius lies in the poristic range `[r_*, r^*]`.
    pub radius_in_range: Vec<bool>,
    pub max_residual: f64,
    pub pass: bool,
}

/// Checks every tangency of the chain. Passes when the largest absolute
/// residual stays below `tol * R`.
pub fn verify_chain(chain: &Chain, tol: f64) -> Result<ChainReport> {
    let g = chain.gauge();
    let n = g.chain_len() as usize;
    if chain.circles().is_empty() || chain.circles().len() != n {
        return Err(Error::Input(format!(
            "chain has {} circles, gauge expects {n}",
            chain.circles().len()
        )));
    }
    let inner = g.inner_circle();
    let outer = g.outer_circle();
    let class_tol = (tol * 1e3).min(1e-3);

    let mut adjacent = Vec::with_capacity(n);
    let mut to_inner = Vec::with_capacity(n);
    let mut to_outer = Vec::with_capacity(n);
    let mut max_residual: f64 = 0.0;
    for i in 0..n {
        let a = &chain.circles()[i];
        let b = &chain.circles()[(i + 1) % n];
        let res = a.center().dist(b.center()) - (a.radius + b.radius);
        adjacent.push(PairCheck {
            residual: res,
            class: tangency_class(a, b, class_tol),
        });
        max_residual = max_residual.max(res.abs());

        let res_in = a.center().dist(inner.center()) - (a.radius + inner.radius);
        to_inner.push(PairCheck {
            residual: res_in,
            class: tangency_class(a, &inner, class_tol),
        });
        max_residual = max_residual.max(res_in.abs());

        let res_out = a.center().dist(outer.center()) - (outer.radius - a.radius);
        to_outer.push(PairCheck {
            residual: res_out,
            class: tangency_class(a, &outer, class_tol),
        });
        max_residual = max_residual.max(res_out.abs());
    }

    let r_lo = 0.5 * (g.outer_radius() - g.center_distance() - g.inner_radius());
    let r_hi = 0.5 * (g.outer_radius() + g.center_distance() - g.inner_radius());
    let slack = 1e-9 * r_hi.max(1.0);
    let radius_in_range = chain
        .circles()
        .iter()
        .map(|c| c.radius >= r_lo - slack && c.radius <= r_hi + slack)
        .collect();

    let pass = max_residual <= tol * g.outer_radius();
    Ok(ChainReport {
        adjacent,
        to_inner,
        to_outer,
        radius_in_range,
        max_residual,
        pass,
    })
}
