//! Feasibility testing for ordered radius quadruples.
//!
//! A quadruple of radii comes from a Steiner 4-chain exactly when the
//! staged test below passes: invert the first two moments into a virtual
//! Soddy pair, require a positive Pedoe discriminant, bracket every radius
//! by the poristic range, match the third moment, and confirm that the
//! quadratic neighbors of the first radius are the adjacent entries.

use crate::error::{Error, InfeasibleKind, Result};
use crate::fmt::sig17;
use crate::gauge::Gauge;
use crate::invariants::{moments4, neighbor_curvatures, poristic_range};

/// Virtual Soddy data recovered from the first two moments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SoddyCandidate {
    /// Inner bend `a = 1/r > 0`.
    pub inner_bend: f64,
    /// Outer signed bend `A = -1/R < 0`.
    pub outer_bend: f64,
    pub outer_radius: f64,
    pub inner_radius: f64,
    pub center_distance: f64,
}

impl SoddyCandidate {
    pub fn gauge(&self) -> Result<Gauge> {
        Gauge::with_distance(self.outer_radius, self.inner_radius, self.center_distance, 4)
    }
}

/// Power sums `I_k = sum (1/r_i)^k` for k = 1, 2, 3.
pub fn actual_moments(radii: &[f64; 4]) -> Result<(f64, f64, f64)> {
    if radii.iter().any(|&r| !r.is_finite() || r <= 0.0) {
        return Err(Error::Input(format!(
            "radii must be positive, got {radii:?}"
        )));
    }
    let bends: Vec<f64> = radii.iter().map(|r| 1.0 / r).collect();
    let sum = |k: i32| bends.iter().map(|b| b.powi(k)).sum();
    Ok((sum(1), sum(2), sum(3)))
}

/// Roots of `16 a^2 - 8 I1 a + (8 I2 - 3 I1^2) = 0`, which are exactly the
/// candidate signed curvatures {a, A} (the root sum is I1/2 = a + A).
fn moment_quadratic_roots(i1: f64, i2: f64) -> Option<(f64, f64)> {
    let c1 = -8.0 * i1;
    let c0 = 8.0 * i2 - 3.0 * i1 * i1;
    let disc = c1 * c1 - 64.0 * c0;
    if disc < 0.0 {
        return None;
    }
    let sq = disc.sqrt();
    let sign = if c1 >= 0.0 { 1.0 } else { -1.0 };
    let qq = -0.5 * (c1 + sign * sq);
    let (x1, x2) = if qq == 0.0 {
        (0.0, -c1 / 16.0)
    } else {
        (qq / 16.0, c0 / qq)
    };
    Some(if x1 >= x2 { (x1, x2) } else { (x2, x1) })
}

/// Inverts `(I1, I2)` into a virtual Soddy candidate.
pub fn solve_virtual_soddy(i1: f64, i2: f64) -> Result<SoddyCandidate> {
    let (hi, lo) =
        moment_quadratic_roots(i1, i2).ok_or(Error::Infeasible(InfeasibleKind::NoRealRoots))?;
    if !(hi > 0.0 && lo < 0.0) {
        return Err(Error::Infeasible(InfeasibleKind::SignPattern));
    }
    let (a, big_a) = (hi, lo);
    let inner_radius = 1.0 / a;
    let outer_radius = -1.0 / big_a;
    let d2 = outer_radius * outer_radius - 6.0 * outer_radius * inner_radius
        + inner_radius * inner_radius;
    if d2 <= 0.0 {
        return Err(Error::Infeasible(InfeasibleKind::PedoeNegative));
    }
    Ok(SoddyCandidate {
        inner_bend: a,
        outer_bend: big_a,
        outer_radius,
        inner_radius,
        center_distance: d2.sqrt(),
    })
}

/// Pipeline stages, in evaluation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    MomentInversion,
    PedoePositivity,
    RangeCheck,
    ThirdMomentCheck,
    NeighborCheck,
}

impl Stage {
    pub fn as_str(&self) -> &'static str {
        match self {
            Stage::MomentInversion => "moment-inversion",
            Stage::PedoePositivity => "pedoe-positivity",
            Stage::RangeCheck => "range-check",
            Stage::ThirdMomentCheck => "third-moment-check",
            Stage::NeighborCheck => "neighbor-check",
        }
    }
}

/// Outcome of one stage, with the values it computed.
#[derive(Debug, Clone)]
pub struct StageRecord {
    pub stage: Stage,
    pub pass: bool,
    pub values: Vec<(&'static str, f64)>,
}

/// Staged verdict; `stages` stops after the first failure.
#[derive(Debug, Clone)]
pub struct FeasibilityReport {
    pub verdict: bool,
    pub stages: Vec<StageRecord>,
    pub candidate: Option<SoddyCandidate>,
}

impl FeasibilityReport {
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{{\"verdict\": {}, \"stages\": [", self.verdict));
        for (i, s) in self.stages.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            out.push_str(&format!(
                "{{\"name\": \"{}\", \"pass\": {}, \"values\": {{",
                s.stage.as_str(),
                s.pass
            ));
            for (j, (k, v)) in s.values.iter().enumerate() {
                if j > 0 {
                    out.push_str(", ");
                }
                out.push_str(&format!("\"{k}\": {}", sig17(*v)));
            }
            out.push_str("}}");
        }
        out.push_str("], \"candidate\": ");
        match &self.candidate {
            None => out.push_str("null"),
            Some(c) => out.push_str(&format!(
                "{{\"R\": {}, \"r\": {}, \"d\": {}}}",
                sig17(c.outer_radius),
                sig17(c.inner_radius),
                sig17(c.center_distance)
            )),
        }
        out.push('}');
        out
    }
}

/// Runs the full five-stage test on an ordered radius quadruple.
/// Stage failures are reported, not raised; only malformed input errors.
pub fn feasibility_test(radii: &[f64; 4], tol: f64) -> Result<FeasibilityReport> {
    let (i1, i2, i3) = actual_moments(radii)?;
    let mut stages = Vec::new();

    // Stage 1: invert (I1, I2) into candidate curvatures.
    let roots = moment_quadratic_roots(i1, i2);
    let (pass1, a, big_a) = match roots {
        Some((hi, lo)) if hi > 0.0 && lo < 0.0 => (true, hi, lo),
        Some((hi, lo)) => (false, hi, lo),
        None => (false, f64::NAN, f64::NAN),
    };
    stages.push(StageRecord {
        stage: Stage::MomentInversion,
        pass: pass1,
        values: vec![
            ("I1", i1),
            ("I2", i2),
            ("I3", i3),
            ("a", a),
            ("A", big_a),
        ],
    });
    if !pass1 {
        return Ok(FeasibilityReport {
            verdict: false,
            stages,
            candidate: None,
        });
    }

    // Stage 2: Pedoe positivity of the candidate pair.
    let inner_radius = 1.0 / a;
    let outer_radius = -1.0 / big_a;
    let d2 = outer_radius * outer_radius - 6.0 * outer_radius * inner_radius
        + inner_radius * inner_radius;
    let pass2 = d2 > 0.0;
    stages.push(StageRecord {
        stage: Stage::PedoePositivity,
        pass: pass2,
        values: vec![
            ("R", outer_radius),
            ("r", inner_radius),
            ("d_squared", d2),
            ("d", if pass2 { d2.sqrt() } else { f64::NAN }),
        ],
    });
    if !pass2 {
        return Ok(FeasibilityReport {
            verdict: false,
            stages,
            candidate: None,
        });
    }
    let candidate = SoddyCandidate {
        inner_bend: a,
        outer_bend: big_a,
        outer_radius,
        inner_radius,
        center_distance: d2.sqrt(),
    };
    let gauge = match candidate.gauge() {
        Ok(g) => g,
        Err(_) => {
            // d was computed from (R, r); failure here means the pair is
            // numerically degenerate (d >= R - r).
            stages.push(StageRecord {
                stage: Stage::RangeCheck,
                pass: false,
                values: vec![("d", candidate.center_distance)],
            });
            return Ok(FeasibilityReport {
                verdict: false,
                stages,
                candidate: Some(candidate),
            });
        }
    };

    // Stage 3: every radius inside the poristic range.
    let range = poristic_range(&gauge);
    let slack_lo = tol * range.r_lo.max(1.0);
    let slack_hi = tol * range.r_hi.max(1.0);
    let pass3 = radii
        .iter()
        .all(|&r| r >= range.r_lo - slack_lo && r <= range.r_hi + slack_hi);
    let min_r = radii.iter().cloned().fold(f64::INFINITY, f64::min);
    let max_r = radii.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    stages.push(StageRecord {
        stage: Stage::RangeCheck,
        pass: pass3,
        values: vec![
            ("r_lo", range.r_lo),
            ("r_hi", range.r_hi),
            ("min_radius", min_r),
            ("max_radius", max_r),
        ],
    });
    if !pass3 {
        return Ok(FeasibilityReport {
            verdict: false,
            stages,
            candidate: Some(candidate),
        });
    }

    // Stage 4: third moment of the candidate family matches.
    let virtual_i3 = moments4(&gauge)?.values[2];
    let pass4 = (i3 - virtual_i3).abs() <= tol * i3.abs().max(f64::MIN_POSITIVE);
    stages.push(StageRecord {
        stage: Stage::ThirdMomentCheck,
        pass: pass4,
        values: vec![("I3", i3), ("I3_virtual", virtual_i3)],
    });
    if !pass4 {
        return Ok(FeasibilityReport {
            verdict: false,
            stages,
            candidate: Some(candidate),
        });
    }

    // Stage 5: neighbors of r1 must be {1/r4, 1/r2} as a multiset. The
    // anchor is clamped into the range; stage 3 bounded the excursion.
    let u = radii[0].clamp(range.r_lo, range.r_hi);
    let (pass5, values) = match neighbor_curvatures(&gauge, u) {
        Ok((v_lo, v_hi)) => {
            let mut expected = [1.0 / radii[3], 1.0 / radii[1]];
            expected.sort_by(|x, y| x.partial_cmp(y).unwrap());
            let ok = |got: f64, want: f64| (got - want).abs() <= tol * want.abs().max(got.abs());
            (
                ok(v_lo, expected[0]) && ok(v_hi, expected[1]),
                vec![
                    ("v_minus", v_lo),
                    ("v_plus", v_hi),
                    ("expected_minus", expected[0]),
                    ("expected_plus", expected[1]),
                ],
            )
        }
        Err(_) => (false, vec![("v_minus", f64::NAN), ("v_plus", f64::NAN)]),
    };
    stages.push(StageRecord {
        stage: Stage::NeighborCheck,
        pass: pass5,
        values,
    });

    Ok(FeasibilityReport {
        verdict: pass5,
        stages,
        candidate: Some(candidate),
    })
}
