//! The canonical Bochner-Kähler metric `g` on `CP²(r,q,p)`.
//!
//! Normalized so that `Vol(g) = π²/(2pqr)`, its scalar curvature is the
//! linear form
//!
//! `R_g = 24 (r(-r+q+p)|u₁|² + q(r-q+p)|u₂|² + p(r+q-p)|u₃|²)`
//!
//! in `x = (|u₁|², |u₂|², |u₃|²)` on the simplex `x₁ + x₂ + x₃ = 1`. A linear
//! form on a simplex takes its extremes at the vertices, so the sign pattern
//! of the three coefficients settles everything about the conformal metric
//! `R_g⁻² g`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::arith::{integer, serde_bigint, serde_rational, PiSurd, Rational};
use crate::orbifold::{Location, Weights};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurvatureRegime {
    PositiveEverywhere,
    NonnegVanishesAtPoint,
    SignChanging,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarCurvatureProfile {
    #[serde(with = "serde_bigint")]
    pub a1: BigInt,
    #[serde(with = "serde_bigint")]
    pub a2: BigInt,
    #[serde(with = "serde_bigint")]
    pub a3: BigInt,
    #[serde(with = "serde_bigint")]
    pub min_r: BigInt,
    #[serde(with = "serde_bigint")]
    pub max_r: BigInt,
    pub regime: CurvatureRegime,
    /// Where `R_g` vanishes, when it does so at a single point.
    pub zero_locus: Option<Location>,
    /// `Vol(g) = volume_coeff · π²`.
    #[serde(with = "serde_rational")]
    pub volume_coeff: Rational,
}

/// Behaviour of the conformal rescaling `R_g⁻² g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConformalRegime {
    /// `p < q + r`: `R_g > 0` and the rescaled metric is positive Einstein.
    PositiveEinstein,
    /// `p = q + r`: `R_g` vanishes only at `[0,0,1]`; Ricci-flat off it.
    RicciFlatPunctured,
    /// `p > q + r`: `R_g` changes sign; complete negative Einstein metrics
    /// on the two sides of the zero hypersurface.
    NegativePieces,
}

pub fn scalar_curvature_profile(w: &Weights) -> ScalarCurvatureProfile {
    let (r, q, p) = (w.r(), w.q(), w.p());
    let a1 = BigInt::from(24) * r * (q + p - r);
    let a2 = BigInt::from(24) * q * (r + p - q);
    let a3 = BigInt::from(24) * p * (r + q - p);
    debug_assert!(a1.is_positive() && a2.is_positive());

    let min_r = a1.clone().min(a2.clone()).min(a3.clone());
    let max_r = a1.clone().max(a2.clone()).max(a3.clone());
    let (regime, zero_locus) = match w.excess().sign() {
        num_bigint::Sign::Minus => (CurvatureRegime::PositiveEverywhere, None),
        num_bigint::Sign::NoSign => (CurvatureRegime::NonnegVanishesAtPoint, Some(Location::P001)),
        num_bigint::Sign::Plus => (CurvatureRegime::SignChanging, None),
    };
    ScalarCurvatureProfile {
        a1,
        a2,
        a3,
        min_r,
        max_r,
        regime,
        zero_locus,
        volume_coeff: Rational::new(BigInt::from(1), BigInt::from(2) * p * q * r),
    }
}

/// Yamabe energy of the Bochner-Kähler metric,
/// `4π√2 (r+q+p)/√(rqp) = 4(r+q+p) · π · √(2/(rqp))`.
pub fn bk_yamabe_energy(w: &Weights) -> PiSurd {
    let (r, q, p) = (w.r(), w.q(), w.p());
    PiSurd::new(
        integer(BigInt::from(4) * (r + q + p)),
        Rational::new(BigInt::from(2), r * q * p),
    )
    .expect("weights are positive")
}

pub fn conformal_einstein_regime(w: &Weights) -> ConformalRegime {
    match w.p().cmp(&(w.q() + w.r())) {
        Ordering::Less => ConformalRegime::PositiveEinstein,
        Ordering::Equal => ConformalRegime::RicciFlatPunctured,
        Ordering::Greater => ConformalRegime::NegativePieces,
    }
}
