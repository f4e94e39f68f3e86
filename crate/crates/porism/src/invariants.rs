//! Closed-form invariants of a poristic family.
//!
//! The first n-1 power sums of the chain bends do not depend on the phase,
//! so they are functions of the gauge alone. For n = 3 and n = 4 they have
//! short closed forms in the signed curvatures a = 1/r, A = -1/R of the
//! Soddy pair; for n = 6 the axial bends follow from the neighbor
//! quadratic applied at both extreme radii.

use crate::chain::construct_chain;
use crate::error::{Error, Result};
use crate::gauge::Gauge;

/// Signed curvatures of the Soddy pair: `inner = 1/r > 0`, `outer = -1/R < 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedCurvatures {
    pub inner: f64,
    pub outer: f64,
}

pub fn signed_curvatures(g: &Gauge) -> SignedCurvatures {
    SignedCurvatures {
        inner: 1.0 / g.inner_radius(),
        outer: -1.0 / g.outer_radius(),
    }
}

/// Sharp bounds on poristic radii and bends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoristicRange {
    pub r_lo: f64,
    pub r_hi: f64,
    pub b_lo: f64,
    pub b_hi: f64,
}

impl PoristicRange {
    pub fn contains_radius(&self, r: f64, slack: f64) -> bool {
        r >= self.r_lo - slack && r <= self.r_hi + slack
    }
}

/// Extremal radii `r_* = (R-d-r)/2`, `r^* = (R+d-r)/2` and the matching
/// bend bounds. Both extremes are realized by the axial chain.
pub fn poristic_range(g: &Gauge) -> PoristicRange {
    let (big_r, r, d) = (g.outer_radius(), g.inner_radius(), g.center_distance());
    let r_lo = 0.5 * (big_r - d - r);
    let r_hi = 0.5 * (big_r + d - r);
    PoristicRange {
        r_lo,
        r_hi,
        b_lo: 1.0 / r_hi,
        b_hi: 1.0 / r_lo,
    }
}

/// Quadratic whose roots are the bends of the two neighbors of the
/// poristic circle with radius `u`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeighborQuadratic {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl NeighborQuadratic {
    pub fn eval(&self, x: f64) -> f64 {
        (self.alpha * x + self.beta) * x + self.gamma
    }

    pub fn discriminant(&self) -> f64 {
        self.beta * self.beta - 4.0 * self.alpha * self.gamma
    }

    /// Sum of the two neighbor bends.
    pub fn root_sum(&self) -> f64 {
        -self.beta / self.alpha
    }
}

/// Coefficients of the neighbor quadratic at radius `u`:
/// `alpha = (q+1)^2 R^2 r^2 u^2`,
/// `beta  = 2 (q+1) R r u [(q-1) R r - (R-r) u]`,
/// `gamma = [(q+1) R r - (R-r) u]^2 + 4 R r u^2`.
pub fn neighbor_quadratic(g: &Gauge, u: f64) -> Result<NeighborQuadratic> {
    let range = poristic_range(g);
    let slack = 1e-9 * range.r_hi.max(1.0);
    if !range.contains_radius(u, slack) {
        return Err(Error::Range(format!(
            "radius {u} outside poristic range [{}, {}]",
            range.r_lo, range.r_hi
        )));
    }
    let (big_r, r, q) = (g.outer_radius(), g.inner_radius(), g.q());
    let rr = big_r * r;
    let alpha = (q + 1.0) * (q + 1.0) * rr * rr * u * u;
    let beta = 2.0 * (q + 1.0) * rr * u * ((q - 1.0) * rr - (big_r - r) * u);
    let gamma = {
        let lin = (q + 1.0) * rr - (big_r - r) * u;
        lin * lin + 4.0 * rr * u * u
    };
    Ok(NeighborQuadratic { alpha, beta, gamma })
}

/// Bends of the two neighbors of the radius-`u` circle, sorted ascending.
/// At the range endpoints the roots coincide; discriminants within noise
/// of zero are clamped to the exact double root.
pub fn neighbor_curvatures(g: &Gauge, u: f64) -> Result<(f64, f64)> {
    let quad = neighbor_quadratic(g, u)?;
    let disc = quad.discriminant();
    let scale = (quad.beta * quad.beta)
        .max(4.0 * (quad.alpha * quad.gamma).abs())
        .max(f64::MIN_POSITIVE);
    if disc < -1e-9 * scale {
        return Err(Error::Numeric(format!(
            "neighbor quadratic has complex roots (disc/scale = {})",
            disc / scale
        )));
    }
    let disc = disc.max(0.0);
    let sq = disc.sqrt();
    let sign = if quad.beta >= 0.0 { 1.0 } else { -1.0 };
    let qq = -0.5 * (quad.beta + sign * sq);
    let (x1, x2) = if qq == 0.0 {
        let x = -quad.beta / (2.0 * quad.alpha);
        (x, x)
    } else {
        (qq / quad.alpha, quad.gamma / qq)
    };
    Ok(if x1 <= x2 { (x1, x2) } else { (x2, x1) })
}

/// Bends of the axial 4-chain in cyclic order: the extreme circles sit on
/// the axis, the two congruent ones flank them.
pub fn axial_bends4(g: &Gauge) -> Result<[f64; 4]> {
    expect_n(g, 4)?;
    let (big_r, r, d) = (g.outer_radius(), g.inner_radius(), g.center_distance());
    let mid = (big_r - r) / (2.0 * big_r * r);
    Ok([
        2.0 / (big_r - r - d),
        mid,
        2.0 / (big_r - r + d),
        mid,
    ])
}

/// Bends of the two lateral 4-chains (both have the same bend quadruple):
/// `(m - e, m + e, m + e, m - e)` with `m = (R-r)/(2Rr)`, `e = d/(2*sqrt(2)*Rr)`.
pub fn lateral_bends4(g: &Gauge) -> Result<[f64; 4]> {
    expect_n(g, 4)?;
    let (big_r, r, d) = (g.outer_radius(), g.inner_radius(), g.center_distance());
    let m = (big_r - r) / (2.0 * big_r * r);
    let e = d / (2.0 * std::f64::consts::SQRT_2 * big_r * r);
    Ok([m - e, m + e, m + e, m - e])
}

/// Power sums of chain bends.
#[derive(Debug, Clone, PartialEq)]
pub struct Moments {
    pub values: Vec<f64>,
    pub n: u32,
}

/// The two invariant moments of 3-chains:
/// `I1 = (A + a)/2`, `I2 = (A^2 + 6Aa + a^2)/8`.
pub fn moments3(g: &Gauge) -> Result<Moments> {
    expect_n(g, 3)?;
    let s = signed_curvatures(g);
    let (a, big_a) = (s.inner, s.outer);
    Ok(Moments {
        values: vec![
            0.5 * (big_a + a),
            0.125 * (big_a * big_a + 6.0 * big_a * a + a * a),
        ],
        n: 3,
    })
}

/// The three invariant moments of 4-chains:
/// `I1 = 2(A + a)`, `I2 = (3A^2 + 10Aa + 3a^2)/2`,
/// `I3 = (5A^3 + 27A^2 a + 27A a^2 + 5a^3)/4`.
pub fn moments4(g: &Gauge) -> Result<Moments> {
    expect_n(g, 4)?;
    let s = signed_curvatures(g);
    let (a, big_a) = (s.inner, s.outer);
    Ok(Moments {
        values: vec![
            2.0 * (big_a + a),
            0.5 * (3.0 * big_a * big_a + 10.0 * big_a * a + 3.0 * a * a),
            0.25
                * (5.0 * big_a * big_a * big_a
                    + 27.0 * big_a * big_a * a
                    + 27.0 * big_a * a * a
                    + 5.0 * a * a * a),
        ],
        n: 4,
    })
}

/// Power sums of the bends of the chain constructed at `phase`,
/// for k = 1..=k_max.
pub fn moments_numeric(g: &Gauge, k_max: u32, phase: f64) -> Result<Moments> {
    if k_max < 1 {
        return Err(Error::Input("k_max must be >= 1".into()));
    }
    let chain = construct_chain(g, phase)?;
    let bends = chain.bends();
    let values = (1..=k_max)
        .map(|k| bends.iter().map(|b| b.powi(k as i32)).sum())
        .collect();
    Ok(Moments {
        values,
        n: g.chain_len(),
    })
}

/// Bends of the axial 6-chain in cyclic order
/// `(b^*, v, v', b_*, v', v)`: extremes from the poristic range, their
/// neighbor bends from the double roots of the neighbor quadratic.
pub fn axial_bends6(g: &Gauge) -> Result<[f64; 6]> {
    expect_n(g, 6)?;
    let range = poristic_range(g);
    let (n_lo, n_hi) = neighbor_curvatures(g, range.r_lo)?;
    let v = 0.5 * (n_lo + n_hi);
    let (m_lo, m_hi) = neighbor_curvatures(g, range.r_hi)?;
    let v_prime = 0.5 * (m_lo + m_hi);
    Ok([range.b_hi, v, v_prime, range.b_lo, v_prime, v])
}

fn expect_n(g: &Gauge, n: u32) -> Result<()> {
    if g.chain_len() != n {
        return Err(Error::Input(format!(
            "operation requires n = {n}, gauge has n = {}",
            g.chain_len()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    fn square_gauge() -> Gauge {
        Gauge::new(6.0, 1.0, 4).unwrap()
    }

    #[test]
    fn signed_curvature_examples() {
        let s = signed_curvatures(&square_gauge());
        assert_eq!(s.inner, 1.0);
        assert!((s.outer + 1.0 / 6.0).abs() < 1e-15);

        let g = Gauge::new(1.0 / 0.63585, 1.0 / 13.36461, 4).unwrap();
        let s = signed_curvatures(&g);
        assert!((s.inner - 13.36461).abs() < 1e-10);
        assert!((s.outer + 0.63585).abs() < 1e-10);

        let g = Gauge::new(3.0 + 2.0 * SQRT2, 1.0, 4).unwrap();
        let s = signed_curvatures(&g);
        assert_eq!(s.inner, 1.0);
        assert!((s.outer + (3.0 - 2.0 * SQRT2)).abs() < 1e-15);
    }

    #[test]
    fn range_examples() {
        let r = poristic_range(&square_gauge());
        assert!((r.r_lo - 2.0).abs() < 1e-12);
        assert!((r.r_hi - 3.0).abs() < 1e-12);
        assert!((r.b_lo - 1.0 / 3.0).abs() < 1e-12);
        assert!((r.b_hi - 0.5).abs() < 1e-12);

        let r = poristic_range(&Gauge::new(3.0 + 2.0 * SQRT2, 1.0, 4).unwrap());
        assert!((r.r_lo - r.r_hi).abs() < 1e-12);
        assert!((r.r_lo - (1.0 + SQRT2)).abs() < 1e-12);

        let r = poristic_range(&Gauge::new(14.0, 1.0, 3).unwrap());
        assert!((r.r_lo - 6.0).abs() < 1e-12);
        assert!((r.r_hi - 7.0).abs() < 1e-12);
    }

    #[test]
    fn neighbor_quadratic_examples() {
        let g = square_gauge();
        let q = neighbor_quadratic(&g, 3.0).unwrap();
        assert!((q.alpha - 1296.0).abs() < 1e-9);
        assert!((q.beta + 1080.0).abs() < 1e-9);
        assert!((q.gamma - 225.0).abs() < 1e-9);

        let q = neighbor_quadratic(&g, 2.0).unwrap();
        assert!((q.alpha - 576.0).abs() < 1e-9);
        assert!((q.beta + 480.0).abs() < 1e-9);
        assert!((q.gamma - 100.0).abs() < 1e-9);

        assert!(matches!(
            neighbor_quadratic(&g, 3.5),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn neighbor_double_roots_at_extremes() {
        let g = square_gauge();
        for u in [2.0, 3.0] {
            let (lo, hi) = neighbor_curvatures(&g, u).unwrap();
            assert!((lo - 5.0 / 12.0).abs() < 1e-9, "u = {u}: {lo}");
            assert!((hi - 5.0 / 12.0).abs() < 1e-9, "u = {u}: {hi}");
        }
    }

    #[test]
    fn neighbor_roots_at_lateral_radius() {
        let g = square_gauge();
        let m = 5.0 / 12.0;
        let e = 1.0 / (12.0 * SQRT2);
        let (lo, hi) = neighbor_curvatures(&g, 1.0 / (m + e)).unwrap();
        assert!((lo - (m - e)).abs() < 1e-12);
        assert!((hi - (m + e)).abs() < 1e-12);
    }

    #[test]
    fn axial_bends_examples() {
        let b = axial_bends4(&square_gauge()).unwrap();
        assert!((b[0] - 0.5).abs() < 1e-12);
        assert!((b[1] - 5.0 / 12.0).abs() < 1e-12);
        assert!((b[2] - 1.0 / 3.0).abs() < 1e-12);
        assert_eq!(b[1], b[3]);

        let b = axial_bends4(&Gauge::new(3.0 + 2.0 * SQRT2, 1.0, 4).unwrap()).unwrap();
        let want = 1.0 / (1.0 + SQRT2);
        for x in b {
            assert!((x - want).abs() < 1e-12);
        }
    }

    #[test]
    fn lateral_bends_examples() {
        let g = square_gauge();
        let b = lateral_bends4(&g).unwrap();
        let m = 5.0 / 12.0;
        let e = 1.0 / (12.0 * SQRT2);
        assert!((b[0] - (m - e)).abs() < 1e-12);
        assert!((b[1] - (m + e)).abs() < 1e-12);
        assert_eq!(b[0], b[3]);
        assert_eq!(b[1], b[2]);

        // Lateral bends sum to I1.
        let s = signed_curvatures(&g);
        let sum: f64 = b.iter().sum();
        assert!((sum - 2.0 * (s.inner + s.outer)).abs() < 1e-12);

        let conc = Gauge::new(3.0 + 2.0 * SQRT2, 1.0, 4).unwrap();
        let lat = lateral_bends4(&conc).unwrap();
        let ax = axial_bends4(&conc).unwrap();
        for (l, a) in lat.iter().zip(ax.iter()) {
            assert!((l - a).abs() < 1e-12);
        }
    }

    #[test]
    fn moments3_triangle_gauge() {
        let g = Gauge::new(14.0, 1.0, 3).unwrap();
        let m = moments3(&g).unwrap();
        assert!((m.values[0] - 13.0 / 28.0).abs() < 1e-15);
        assert!((m.values[1] - 113.0 / 1568.0).abs() < 1e-15);
    }

    #[test]
    fn moments3_concentric_is_triple_common_bend() {
        let sqrt3 = 3.0f64.sqrt();
        let g = Gauge::new(7.0 + 4.0 * sqrt3, 1.0, 3).unwrap();
        assert_eq!(g.center_distance(), 0.0);
        let common_bend = 2.0 / (g.outer_radius() - g.inner_radius());
        let m = moments3(&g).unwrap();
        assert!((m.values[0] - 3.0 * common_bend).abs() < 1e-12);
        assert!((m.values[1] - 3.0 * common_bend * common_bend).abs() < 1e-12);
    }

    #[test]
    fn moments4_square_gauge_exact() {
        let m = moments4(&square_gauge()).unwrap();
        assert!((m.values[0] - 5.0 / 3.0).abs() < 1e-15);
        assert!((m.values[1] - 17.0 / 24.0).abs() < 1e-15);
        assert!((m.values[2] - 265.0 / 864.0).abs() < 1e-15);
        // Rounded presentation used elsewhere.
        assert!((m.values[0] - 1.6662).abs() < 2e-3);
        assert!((m.values[1] - 0.7079).abs() < 2e-3);
        assert!((m.values[2] - 0.3065).abs() < 2e-3);
    }

    #[test]
    fn moments4_concentric() {
        let g = Gauge::new(3.0 + 2.0 * SQRT2, 1.0, 4).unwrap();
        let m = moments4(&g).unwrap();
        let b = 1.0 / (1.0 + SQRT2);
        assert!((m.values[0] - 4.0 * b).abs() < 1e-12);
        assert!((m.values[1] - 4.0 * b * b).abs() < 1e-12);
        assert!((m.values[2] - 4.0 * b * b * b).abs() < 1e-12);
    }

    #[test]
    fn numeric_moments_match_closed_forms() {
        let g = square_gauge();
        let closed = moments4(&g).unwrap();
        for phase in [0.0, 0.31, 1.9, 4.4] {
            let m = moments_numeric(&g, 3, phase).unwrap();
            for (a, b) in m.values.iter().zip(&closed.values) {
                assert!((a - b).abs() < 1e-9 * b.abs().max(1.0), "phase {phase}");
            }
        }

        let g3 = Gauge::new(14.0, 1.0, 3).unwrap();
        let closed = moments3(&g3).unwrap();
        for phase in [0.0, 0.7, 2.2] {
            let m = moments_numeric(&g3, 2, phase).unwrap();
            for (a, b) in m.values.iter().zip(&closed.values) {
                assert!((a - b).abs() < 1e-9 * b.abs().max(1.0));
            }
        }
    }

    #[test]
    fn axial6_extreme_bends() {
        let d = (11.0 / 3.0f64).sqrt();
        let g = Gauge::with_distance(4.0, 1.0, d, 6).unwrap();
        let b = axial_bends6(&g).unwrap();
        assert!((b[0] - 2.0 / (3.0 - d)).abs() < 1e-12);
        assert!((b[3] - 2.0 / (3.0 + d)).abs() < 1e-12);
        assert!((b[0] - 1.8430703308172536).abs() < 1e-12);
        assert!((b[3] - 0.4069296691827464).abs() < 1e-12);
        assert_eq!(b[1], b[5]);
        assert_eq!(b[2], b[4]);
    }

    #[test]
    fn axial6_reproduces_numeric_moments() {
        let d = (11.0 / 3.0f64).sqrt();
        let g = Gauge::with_distance(4.0, 1.0, d, 6).unwrap();
        let bends = axial_bends6(&g).unwrap();
        for phase in [0.0, 0.5, 1.3, 2.8, 5.1] {
            let m = moments_numeric(&g, 5, phase).unwrap();
            for (k, got) in m.values.iter().enumerate() {
                let want: f64 = bends.iter().map(|b| b.powi(k as i32 + 1)).sum();
                assert!(
                    (got - want).abs() < 1e-8 * want.abs().max(1.0),
                    "k = {}, phase = {phase}: {got} vs {want}",
                    k + 1
                );
            }
        }
    }

    #[test]
    fn axial6_concentric_is_congruent() {
        let g = Gauge::new(3.0, 1.0, 6).unwrap();
        assert_eq!(g.center_distance(), 0.0);
        let b = axial_bends6(&g).unwrap();
        for x in b {
            assert!((x - 1.0).abs() < 1e-12);
        }
    }
}
