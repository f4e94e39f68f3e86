//! Extremal area and perimeter over a poristic family of 4-chains.
//!
//! Because the first three moments are phase-invariant, any symmetric
//! function of the four bends is determined by a single bend t. The sums
//! S = sum r_i^2 and L = sum r_i become rational functions of t on
//! [b_*, b^*]; their critical points factor through three polynomials
//! P1, P2, P4 whose real roots are exactly the symmetric chains.

use crate::error::{Error, Result};
use crate::gauge::Gauge;
use crate::invariants::{axial_bends4, lateral_bends4, poristic_range, signed_curvatures};

/// Critical-point factors of dS/dt, coefficients in ascending powers of t.
/// `w` is the constant under the nested radicals of P4's (complex) roots.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalPolys {
    pub p1: [f64; 2],
    pub p2: [f64; 3],
    pub p4: [f64; 5],
    pub w: f64,
}

impl CriticalPolys {
    pub fn eval_p1(&self, t: f64) -> f64 {
        self.p1[0] + self.p1[1] * t
    }

    pub fn eval_p2(&self, t: f64) -> f64 {
        (self.p2[2] * t + self.p2[1]) * t + self.p2[0]
    }

    pub fn eval_p4(&self, t: f64) -> f64 {
        self.p4
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * t + c)
    }

    /// Real roots of P4 inside `[lo, hi]`, isolated by sign changes on a
    /// fine grid and polished by bisection.
    pub fn p4_roots_in(&self, lo: f64, hi: f64) -> Vec<f64> {
        let mut roots = Vec::new();
        if hi <= lo {
            return roots;
        }
        let samples = 2000;
        let mut prev_t = lo;
        let mut prev_v = self.eval_p4(lo);
        for i in 1..=samples {
            let t = lo + (hi - lo) * i as f64 / samples as f64;
            let v = self.eval_p4(t);
            if prev_v == 0.0 {
                roots.push(prev_t);
            } else if prev_v * v < 0.0 {
                let (mut a, mut b) = (prev_t, t);
                let mut fa = prev_v;
                for _ in 0..80 {
                    let m = 0.5 * (a + b);
                    let fm = self.eval_p4(m);
                    if fa * fm <= 0.0 {
                        b = m;
                    } else {
                        a = m;
                        fa = fm;
                    }
                }
                roots.push(0.5 * (a + b));
            }
            prev_t = t;
            prev_v = v;
        }
        if prev_v == 0.0 {
            roots.push(prev_t);
        }
        roots
    }
}

/// Which symmetric chain realizes an extremum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainKind {
    Axial,
    Lateral,
}

impl ChainKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ChainKind::Axial => "axial",
            ChainKind::Lateral => "lateral",
        }
    }
}

/// A symmetric chain named by kind, with its bend quadruple.
#[derive(Debug, Clone, Copy)]
pub struct ChainDescriptor {
    pub kind: ChainKind,
    pub bends: [f64; 4],
}

/// Unit of the extremal values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueUnit {
    /// Plain sum of radii.
    SumOfRadii,
    /// Sum of squared radii times pi.
    AreaWithPi,
}

impl ValueUnit {
    pub fn as_str(&self) -> &'static str {
        match self {
            ValueUnit::SumOfRadii => "sum-of-radii",
            ValueUnit::AreaWithPi => "area-with-pi",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ExtremalResult {
    pub max_value: f64,
    pub min_value: f64,
    pub argmax: ChainDescriptor,
    pub argmin: ChainDescriptor,
    pub unit: ValueUnit,
}

fn curvatures4(g: &Gauge) -> Result<(f64, f64)> {
    if g.chain_len() != 4 {
        return Err(Error::Input(format!(
            "extremal analysis requires n = 4, gauge has n = {}",
            g.chain_len()
        )));
    }
    let s = signed_curvatures(g);
    Ok((s.inner, s.outer))
}

fn check_bend_range(g: &Gauge, t: f64) -> Result<()> {
    let range = poristic_range(g);
    let slack = 1e-9 * range.b_hi.max(1.0);
    if t < range.b_lo - slack || t > range.b_hi + slack {
        return Err(Error::Range(format!(
            "bend {t} outside [{}, {}]",
            range.b_lo, range.b_hi
        )));
    }
    Ok(())
}

/// Shared denominator pieces of S(t) and L(t): `s - t` and
/// `(a-A)^2 - 4 s t + 4 t^2` with `s = a + A`. The quadratic factor has no
/// real roots (its discriminant is 16 a A < 0), so on [b_*, b^*] the only
/// possible pole is t = 0, which the range excludes.
fn denom_parts(a: f64, big_a: f64, t: f64) -> (f64, f64) {
    let s = a + big_a;
    let dd = (a - big_a) * (a - big_a);
    (s - t, dd - 4.0 * s * t + 4.0 * t * t)
}

/// Sum of squared radii of the (unique up to reflection) chain containing
/// bend `t`.
pub fn sum_squared_radii(g: &Gauge, t: f64) -> Result<f64> {
    let (a, big_a) = curvatures4(g)?;
    check_bend_range(g, t)?;
    let s = a + big_a;
    let (lin, quad) = denom_parts(a, big_a, t);
    let den = lin * lin * quad * quad;
    if den.abs() <= f64::MIN_POSITIVE {
        return Err(Error::Numeric(format!("pole in S(t) at t = {t}")));
    }
    let p = (big_a + a) * (big_a - a) * (big_a - a);
    let c = 3.0 * big_a * big_a + 10.0 * big_a * a + 3.0 * a * a;
    let num = -16.0 * t.powi(4) + 64.0 * s * t.powi(3) - 64.0 * s * s * t * t + 8.0 * p * t
        + c * c;
    Ok(1.0 / (t * t) + num / den)
}

/// Sum of radii of the chain containing bend `t`.
pub fn sum_radii(g: &Gauge, t: f64) -> Result<f64> {
    let (a, big_a) = curvatures4(g)?;
    check_bend_range(g, t)?;
    let (lin, quad) = denom_parts(a, big_a, t);
    let den = t * lin * quad;
    if den.abs() <= f64::MIN_POSITIVE {
        return Err(Error::Numeric(format!("pole in L(t) at t = {t}")));
    }
    let num = (big_a + a) * (big_a - a) * (big_a - a);
    Ok(num / den)
}

/// The three critical-point factors and the root constant `w`.
pub fn critical_polynomials(g: &Gauge) -> Result<CriticalPolys> {
    let (a, big_a) = curvatures4(g)?;
    let s = a + big_a;
    let d2 = (a - big_a) * (a - big_a);
    let q = 5.0 * a * a + 6.0 * a * big_a + 5.0 * big_a * big_a;
    let w = -55.0 * big_a.powi(4) + 196.0 * big_a.powi(3) * a + 266.0 * big_a * big_a * a * a
        + 196.0 * big_a * a.powi(3)
        + 55.0 * a.powi(4);
    Ok(CriticalPolys {
        p1: [s, -2.0],
        p2: [d2, -8.0 * s, 8.0],
        p4: [d2 * d2 * s * s, -d2 * s * q, q * q, -8.0 * s * q, 4.0 * q],
        w,
    })
}

fn axial_descriptor(g: &Gauge) -> Result<ChainDescriptor> {
    Ok(ChainDescriptor {
        kind: ChainKind::Axial,
        bends: axial_bends4(g)?,
    })
}

fn lateral_descriptor(g: &Gauge) -> Result<ChainDescriptor> {
    Ok(ChainDescriptor {
        kind: ChainKind::Lateral,
        bends: lateral_bends4(g)?,
    })
}

/// Extremal chain areas: max `pi (A^4 + 6A^3 a + 18A^2 a^2 + 6A a^3 + a^4)
/// / (A^2 a^2 (a+A)^2)` at the axial chain, min
/// `pi 32 (3a + A)(a + 3A) / (A - a)^4` at the two lateral chains.
pub fn extremal_area(g: &Gauge) -> Result<ExtremalResult> {
    let (a, big_a) = curvatures4(g)?;
    let s = a + big_a;
    let s_axial = (big_a.powi(4)
        + 6.0 * big_a.powi(3) * a
        + 18.0 * big_a * big_a * a * a
        + 6.0 * big_a * a.powi(3)
        + a.powi(4))
        / (big_a * big_a * a * a * s * s);
    let s_lateral = 32.0 * (3.0 * a + big_a) * (a + 3.0 * big_a) / (big_a - a).powi(4);
    Ok(ExtremalResult {
        max_value: std::f64::consts::PI * s_axial,
        min_value: std::f64::consts::PI * s_lateral,
        argmax: axial_descriptor(g)?,
        argmin: lateral_descriptor(g)?,
        unit: ValueUnit::AreaWithPi,
    })
}

/// Extremal radius sums: max `-(A - a)^2 / (A a (a + A))` at the axial
/// chain, min `16 (A + a) / (A - a)^2` at the two lateral chains.
pub fn extremal_perimeter(g: &Gauge) -> Result<ExtremalResult> {
    let (a, big_a) = curvatures4(g)?;
    let s = a + big_a;
    let l_axial = -(big_a - a) * (big_a - a) / (big_a * a * s);
    let l_lateral = 16.0 * s / ((big_a - a) * (big_a - a));
    Ok(ExtremalResult {
        max_value: l_axial,
        min_value: l_lateral,
        argmax: axial_descriptor(g)?,
        argmin: lateral_descriptor(g)?,
        unit: ValueUnit::SumOfRadii,
    })
}

/// One sweep sample.
#[derive(Debug, Clone, Copy)]
pub struct SweepRow {
    pub t: f64,
    pub s: f64,
    pub l: f64,
}

/// Evaluates S and L on a uniform `m`-point grid over `[b_*, b^*]`.
/// Both endpoints belong to the axial chain.
pub fn sweep(g: &Gauge, m: usize) -> Result<Vec<SweepRow>> {
    if m < 2 {
        return Err(Error::Input(format!("sweep needs m >= 2, got {m}")));
    }
    let range = poristic_range(g);
    let (lo, hi) = (range.b_lo, range.b_hi);
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let t = if i == m - 1 {
            hi
        } else {
            lo + (hi - lo) * i as f64 / (m - 1) as f64
        };
        rows.push(SweepRow {
            t,
            s: sum_squared_radii(g, t)?,
            l: sum_radii(g, t)?,
        });
    }
    Ok(rows)
}
