//! Phase-invariance of the moments and consistency of the closed forms
//! against the geometric constructor.

mod common;

use common::{assert_close, random_gauge, random_phase};
use porism::{
    axial_bends4, construct_chain, lateral_bends4, moments3, moments4, moments_numeric,
    neighbor_curvatures, neighbor_quadratic, poristic_range, signed_curvatures, Gauge,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v
}

#[test]
fn moments_are_phase_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for n in [3u32, 4, 6] {
        for _ in 0..25 {
            let g = random_gauge(&mut rng, n);
            let k_max = n - 1;
            let reference = moments_numeric(&g, k_max, random_phase(&mut rng)).unwrap();
            for _ in 0..19 {
                let m = moments_numeric(&g, k_max, random_phase(&mut rng)).unwrap();
                for (got, want) in m.values.iter().zip(&reference.values) {
                    assert!(
                        (got - want).abs() <= 1e-8 * want.abs().max(1e-12),
                        "n = {n}: {got} vs {want}"
                    );
                }
            }
            let closed = match n {
                3 => Some(moments3(&g).unwrap()),
                4 => Some(moments4(&g).unwrap()),
                _ => None,
            };
            if let Some(closed) = closed {
                for (got, want) in reference.values.iter().zip(&closed.values) {
                    assert!(
                        (got - want).abs() <= 1e-9 * want.abs().max(1e-12),
                        "n = {n} closed form: {got} vs {want}"
                    );
                }
            }
        }
    }
}

#[test]
fn actual_neighbors_are_quadratic_roots() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for i in 0..40 {
        let n = [4u32, 6][i % 2];
        let g = random_gauge(&mut rng, n);
        let chain = construct_chain(&g, random_phase(&mut rng)).unwrap();
        let bends = chain.bends();
        let len = bends.len();
        for (j, c) in chain.circles().iter().enumerate() {
            let quad = neighbor_quadratic(&g, c.radius).unwrap();
            let scale = quad
                .alpha
                .abs()
                .max(quad.beta.abs())
                .max(quad.gamma.abs());
            for neighbor in [bends[(j + 1) % len], bends[(j + len - 1) % len]] {
                let residual = quad.eval(neighbor);
                assert!(
                    residual.abs() <= 1e-8 * scale,
                    "n = {n}, circle {j}: residual {residual} at bend {neighbor}"
                );
            }
        }
    }
}

#[test]
fn neighbor_sum_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for i in 0..60 {
        let n = [3u32, 4, 6][i % 3];
        let g = random_gauge(&mut rng, n);
        let range = poristic_range(&g);
        let u = range.r_lo + (range.r_hi - range.r_lo) * rand::Rng::gen_range(&mut rng, 0.0..1.0);
        let quad = neighbor_quadratic(&g, u).unwrap();
        if let Ok((v_lo, v_hi)) = neighbor_curvatures(&g, u) {
            assert_close(v_lo + v_hi, quad.root_sum(), 1e-12, "root sum");
        }
    }
}

#[test]
fn axial_and_lateral_bends_occur_at_symmetric_phases() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..20 {
        let g = random_gauge(&mut rng, 4);
        let axial = sorted(construct_chain(&g, 0.0).unwrap().bends());
        let want_axial = sorted(axial_bends4(&g).unwrap().to_vec());
        for (got, want) in axial.iter().zip(&want_axial) {
            assert_close(*got, *want, 1e-9, "axial bend");
        }

        let lateral_phase = std::f64::consts::PI / 4.0;
        let lateral = sorted(construct_chain(&g, lateral_phase).unwrap().bends());
        let want_lateral = sorted(lateral_bends4(&g).unwrap().to_vec());
        for (got, want) in lateral.iter().zip(&want_lateral) {
            assert_close(*got, *want, 1e-9, "lateral bend");
        }
    }
}

#[test]
fn bend_range_is_sharp_over_phase_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for n in [3u32, 4, 6] {
        let g = random_gauge(&mut rng, n);
        let range = poristic_range(&g);
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        let steps = 4096;
        for k in 0..steps {
            let phase = std::f64::consts::TAU * k as f64 / steps as f64;
            for b in construct_chain(&g, phase).unwrap().bends() {
                lo = lo.min(b);
                hi = hi.max(b);
            }
        }
        assert_close(lo, range.b_lo, 1e-6, "minimal bend");
        assert_close(hi, range.b_hi, 1e-6, "maximal bend");
    }
}

#[test]
fn descartes_identities_hold_on_constructed_3_chains() {
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    for _ in 0..20 {
        let g = random_gauge(&mut rng, 3);
        let s = signed_curvatures(&g);
        let chain = construct_chain(&g, random_phase(&mut rng)).unwrap();
        let b = chain.bends();
        let sum: f64 = b.iter().sum();
        let sq: f64 = b.iter().map(|x| x * x).sum();
        // Descartes circle theorem against each Soddy circle.
        for soddy in [s.inner, s.outer] {
            let lhs = (sum + soddy) * (sum + soddy);
            let rhs = 2.0 * (sq + soddy * soddy);
            assert_close(lhs, rhs, 1e-9, "Descartes identity");
        }
        // The closed-form moments match the explicit sums.
        let m = moments3(&g).unwrap();
        assert_close(sum, m.values[0], 1e-9, "first moment");
        assert_close(sq, m.values[1], 1e-9, "second moment");
    }
}

#[test]
fn first_moment_formula_has_the_half_factor() {
    // For the (14, 1) triangle gauge the two claims differ: the numeric
    // moment equals (A + a)/2, not (R - r)/(R r).
    let g = Gauge::new(14.0, 1.0, 3).unwrap();
    let s = signed_curvatures(&g);
    let i1 = moments_numeric(&g, 1, 0.37).unwrap().values[0];
    assert_close(i1, 0.5 * (s.outer + s.inner), 1e-9, "I1 closed form");
    let wrong = (g.outer_radius() - g.inner_radius()) / (g.outer_radius() * g.inner_radius());
    assert!((i1 - wrong).abs() > 0.1 * wrong.abs());
}

#[test]
fn pedoe_combination_is_d_squared_over_soddy_product_squared() {
    let mut rng = ChaCha8Rng::seed_from_u64(27);
    for _ in 0..20 {
        let g = random_gauge(&mut rng, 4);
        let s = signed_curvatures(&g);
        let (a, big_a) = (s.inner, s.outer);
        let combo = a * a + 6.0 * a * big_a + big_a * big_a;
        let rr = g.outer_radius() * g.inner_radius();
        let d = g.center_distance();
        assert_close(combo, d * d / (rr * rr), 1e-9, "Pedoe combination");
        if d > 0.1 && (combo - d / rr).abs() < 1e-9 * combo.abs().max(1.0) {
            panic!("combination accidentally matches the uncorrected form");
        }
    }
}
