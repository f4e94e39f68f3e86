//! Shared helpers for the integration suites.
#![allow(dead_code)] // each suite uses its own subset

use porism::{construct_chain, pedoe_q, Gauge};
use rand::Rng;

/// Random gauge with ratio R/r pushed a random factor past the concentric
/// boundary, so the Pedoe discriminant stays nonnegative.
pub fn random_gauge(rng: &mut impl Rng, n: u32) -> Gauge {
    let r = rng.gen_range(0.05..5.0);
    let q = pedoe_q(n);
    let critical_ratio = 1.0 + 2.0 * q + 2.0 * (q * (q + 1.0)).sqrt();
    let ratio = critical_ratio * (1.0 + rng.gen_range(1e-3..3.0));
    Gauge::new(r * ratio, r, n).unwrap()
}

pub fn random_phase(rng: &mut impl Rng) -> f64 {
    rng.gen_range(0.0..std::f64::consts::TAU)
}

/// Phase whose circle 0 has the requested radius, found by bisection on
/// the half-period (the radius is monotone between the two axial phases).
pub fn phase_for_radius(g: &Gauge, target: f64) -> f64 {
    let radius_at = |phase: f64| construct_chain(g, phase).unwrap().circles()[0].radius;
    if g.center_distance() == 0.0 {
        return 0.0;
    }
    let (mut lo, mut hi) = (0.0f64, std::f64::consts::PI);
    let increasing = radius_at(hi) > radius_at(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let r = radius_at(mid);
        if (r > target) == increasing {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn assert_close(got: f64, want: f64, rel_tol: f64, what: &str) {
    let scale = want.abs().max(1.0);
    assert!(
        (got - want).abs() <= rel_tol * scale,
        "{what}: got {got}, want {want} (tol {rel_tol})"
    );
}
