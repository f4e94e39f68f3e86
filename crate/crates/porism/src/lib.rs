//! Steiner-chain porisms: invariants, feasibility, and extremal chains.
//!
//! A pair of nested (Soddy) circles satisfying the Pedoe relation carries a
//! one-parameter family of closed Steiner n-chains. This crate computes the
//! closed-form invariants of such families (moments of signed curvatures,
//! poristic ranges, symmetric-chain bends), decides whether an ordered
//! quadruple of radii is realizable as a 4-chain, and evaluates the extremal
//! area/perimeter chains. Every closed form is cross-checked by an explicit
//! inversive constructor that realizes chains in the plane.
//!
//! ```
//! use porism::{construct_chain, feasibility_test, moments4, verify_chain, Gauge};
//!
//! let g = Gauge::new(6.0, 1.0, 4)?;
//! assert!((g.center_distance() - 1.0).abs() < 1e-12);
//!
//! // Moments are phase-invariant; the closed forms match any chain.
//! let m = moments4(&g)?;
//! assert!((m.values[0] - 5.0 / 3.0).abs() < 1e-15);
//!
//! let chain = construct_chain(&g, 0.7)?;
//! assert!(verify_chain(&chain, 1e-9)?.pass);
//!
//! let radii: [f64; 4] = chain.radii().try_into().unwrap();
//! assert!(feasibility_test(&radii, 1e-6)?.verdict);
//! # Ok::<(), porism::Error>(())
//! ```

pub mod annulus;
pub mod chain;
pub mod circle;
pub mod error;
pub mod extremal;
pub mod feasibility;
pub mod fmt;
pub mod gauge;
pub mod invariants;
pub mod socle;

pub use annulus::AnnulusMap;
pub use chain::{construct_chain, verify_chain, Chain, ChainReport, PairCheck};
pub use circle::{tangency_class, Circle, Point, TangencyClass};
pub use error::{Error, InfeasibleKind, Result};
pub use extremal::{
    critical_polynomials, extremal_area, extremal_perimeter, sum_radii, sum_squared_radii, sweep,
    ChainDescriptor, ChainKind, CriticalPolys, ExtremalResult, SweepRow, ValueUnit,
};
pub use feasibility::{
    actual_moments, feasibility_test, solve_virtual_soddy, FeasibilityReport, SoddyCandidate,
    Stage, StageRecord,
};
pub use gauge::{pedoe_q, Gauge, GAUGE_TOL};
pub use invariants::{
    axial_bends4, axial_bends6, lateral_bends4, moments3, moments4, moments_numeric,
    neighbor_curvatures, neighbor_quadratic, poristic_range, signed_curvatures, Moments,
    NeighborQuadratic, PoristicRange, SignedCurvatures,
};
pub use socle::{find_socles, socle_quartic, QuarticCoeffs};
