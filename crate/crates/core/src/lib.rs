//! Exact invariants of the weighted projective planes `CP²(r,q,p)`.
//!
//! The crate is layered bottom-up:
//!
//! * [`arith`]: big rationals, modular inverses and exact comparison of
//!   `c·π·√ρ` quantities.
//! * [`dedekind`]: Dedekind sums by a fast reciprocity algorithm, a brute
//!   force sawtooth oracle and a floating cotangent cross-check, plus the
//!   triple reciprocity residual.
//! * [`orbifold`]: validated weights, the three cyclic singular points, eta
//!   invariants and the exact Euler characteristic / signature split.
//! * [`bochner`]: the scalar curvature of the canonical Bochner-Kähler metric
//!   and the regimes of its conformal rescaling.
//! * [`classify`]: Einstein existence status and the orbifold Yamabe report.
//!
//! All results are exact; floats appear only as display approximations.

pub mod arith;
pub mod bochner;
pub mod classify;
pub mod dedekind;
pub mod error;
pub mod orbifold;

pub use arith::{mod_inverse, pi_surd_compare, pi_surd_to_float, PiSurd, Rational};
pub use bochner::{
    bk_yamabe_energy, conformal_einstein_regime, scalar_curvature_profile, ConformalRegime,
    CurvatureRegime, ScalarCurvatureProfile,
};
pub use classify::{
    classify, einstein_status, yamabe_report, Classification, EinsteinStatus, EinsteinTag,
    YamabeReport,
};
pub use dedekind::{
    dedekind_cotangent_float, dedekind_sum, dedekind_sum_bruteforce, rademacher_residual,
};
pub use error::{Error, Result};
pub use orbifold::{
    eta_invariant, singular_points, topology_report, validate_weights, CyclicActionType, Location,
    SingularPoint, TopologyReport, Weights,
};
