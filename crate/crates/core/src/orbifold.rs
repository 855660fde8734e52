//! Weighted projective planes as orbifolds.
//!
//! `CP²(r,q,p)` has at most three singular points, the coordinate points
//! `[1,0,0]`, `[0,1,0]` and `[0,0,1]`, with cyclic isotropy of orders `r`, `q`
//! and `p`. Their actions determine the eta invariants that correct the
//! signature, and their orders determine the Euler characteristic
//! correction. Both corrections are combined here with the curvature
//! integrals of the canonical metric into exact decompositions of `χ = 3`
//! and `τ = 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{
    check_pairwise_coprime, integer, mod_inverse, serde_bigint, serde_rational, Rational,
};
use crate::dedekind::dedekind_sum;
use crate::error::{Error, Result};

/// Euler characteristic of every weighted projective plane.
pub const EULER_CHARACTERISTIC: i64 = 3;
/// Signature of every weighted projective plane.
pub const SIGNATURE: i64 = 1;

/// A validated weight triple: `1 <= r <= q <= p`, pairwise coprime.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WeightsRepr", into = "WeightsRepr")]
pub struct Weights {
    r: BigInt,
    q: BigInt,
    p: BigInt,
}

#[derive(Serialize, Deserialize)]
struct WeightsRepr {
    #[serde(with = "serde_bigint")]
    r: BigInt,
    #[serde(with = "serde_bigint")]
    q: BigInt,
    #[serde(with = "serde_bigint")]
    p: BigInt,
}

impl TryFrom<WeightsRepr> for Weights {
    type Error = Error;

    fn try_from(w: WeightsRepr) -> Result<Self> {
        validate_weights(w.r, w.q, w.p)
    }
}

impl From<Weights> for WeightsRepr {
    fn from(w: Weights) -> Self {
        WeightsRepr {
            r: w.r,
            q: w.q,
            p: w.p,
        }
    }
}

impl Weights {
    pub fn new(r: impl Into<BigInt>, q: impl Into<BigInt>, p: impl Into<BigInt>) -> Result<Self> {
        validate_weights(r.into(), q.into(), p.into())
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    /// `p - q - r`; its sign decides every curvature regime.
    pub fn excess(&self) -> BigInt {
        &self.p - &self.q - &self.r
    }

    pub fn is_fubini_study(&self) -> bool {
        self.p.is_one()
    }
}

impl std::fmt::Display for Weights {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.r, self.q, self.p)
    }
}

/// Checks the weight conditions without sorting or reducing the input.
pub fn validate_weights(r: BigInt, q: BigInt, p: BigInt) -> Result<Weights> {
    for (what, v) in [("r", &r), ("q", &q), ("p", &p)] {
        if !v.is_positive() {
            return Err(Error::NonPositive {
                what,
                value: v.clone(),
            });
        }
    }
    if !(r <= q && q <= p) {
        return Err(Error::NotSorted { r, q, p });
    }
    check_pairwise_coprime(&r, &q, &p)?;
    Ok(Weights { r, q, p })
}

/// The cyclic group of order `n` acting on `C²` by
/// `(z₁, z₂) ↦ (ζ z₁, ζᵃ z₂)`, `ζ = e^{2πi/n}`.
///
/// `a` is kept in `[0, n)`; the trivial group is `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ActionRepr", into = "ActionRepr")]
pub struct CyclicActionType {
    a: BigInt,
    n: BigInt,
}

#[derive(Serialize, Deserialize)]
struct ActionRepr {
    #[serde(with = "serde_bigint")]
    a: BigInt,
    #[serde(with = "serde_bigint")]
    n: BigInt,
}

impl TryFrom<ActionRepr> for CyclicActionType {
    type Error = Error;

    fn try_from(x: ActionRepr) -> Result<Self> {
        CyclicActionType::new(x.a, x.n)
    }
}

impl From<CyclicActionType> for ActionRepr {
    fn from(x: CyclicActionType) -> Self {
        ActionRepr { a: x.a, n: x.n }
    }
}

impl CyclicActionType {
    pub fn new(a: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<Self> {
        let n = n.into();
        if !n.is_positive() {
            return Err(Error::NonPositive {
                what: "group order",
                value: n,
            });
        }
        let a = a.into().mod_floor(&n);
        let g = a.gcd(&n);
        if !g.is_one() {
            return Err(Error::NonCoprime { a, n, gcd: g });
        }
        Ok(Self { a, n })
    }

    pub fn trivial() -> Self {
        Self {
            a: BigInt::zero(),
            n: BigInt::one(),
        }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Location {
    /// `[1, 0, 0]`, isotropy of order `r`.
    P100,
    /// `[0, 1, 0]`, isotropy of order `q`.
    P010,
    /// `[0, 0, 1]`, isotropy of order `p`.
    P001,
}

impl Location {
    pub const ALL: [Location; 3] = [Location::P100, Location::P010, Location::P001];

    pub fn label(self) -> &'static str {
        match self {
            Location::P100 => "[1,0,0]",
            Location::P010 => "[0,1,0]",
            Location::P001 => "[0,0,1]",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularPoint {
    pub location: Location,
    pub action: CyclicActionType,
    #[serde(with = "serde_bigint")]
    pub order: BigInt,
    #[serde(with = "serde_rational")]
    pub eta: Rational,
    #[serde(with = "serde_rational")]
    pub euler_contribution: Rational,
}

/// Local action type at a coordinate point, trivial when the order is 1.
///
/// At `[1,0,0]` it is `(q⁻¹p mod r, r)`, and cyclically
/// `(p⁻¹r mod q, q)` and `(r⁻¹q mod p, p)` at the other two.
pub fn action_at(w: &Weights, location: Location) -> CyclicActionType {
    let (inv, mul, n) = match location {
        Location::P100 => (&w.q, &w.p, &w.r),
        Location::P010 => (&w.p, &w.r, &w.q),
        Location::P001 => (&w.r, &w.q, &w.p),
    };
    if n.is_one() {
        return CyclicActionType::trivial();
    }
    // Pairwise coprimality makes both the inverse and the product units mod n.
    let inverse = mod_inverse(inv, n).expect("validated weights are pairwise coprime");
    CyclicActionType::new(inverse * mul, n.clone()).expect("product of units is a unit")
}

/// The singular points of `CP²(r,q,p)` in the order `[1,0,0]`, `[0,1,0]`,
/// `[0,0,1]`, omitting smooth points.
pub fn singular_points(w: &Weights) -> Vec<SingularPoint> {
    Location::ALL
        .into_iter()
        .filter_map(|location| {
            let action = action_at(w, location);
            if action.n.is_one() {
                return None;
            }
            let order = action.n.clone();
            Some(SingularPoint {
                location,
                eta: eta_invariant(&action),
                euler_contribution: Rational::new(&order - 1, order.clone()),
                order,
                action,
            })
        })
        .collect()
}

/// Eta invariant of the lens space `S³/Γ`: `4·s(a, n)`.
pub fn eta_invariant(act: &CyclicActionType) -> Rational {
    let s = dedekind_sum(&act.a, &act.n).expect("action types carry a unit representative");
    s * integer(4)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologyReport {
    pub euler_char: i64,
    pub signature: i64,
    /// `1/r + 1/q + 1/p`.
    #[serde(with = "serde_rational")]
    pub euler_curvature_term: Rational,
    /// `Σ (|Γᵢ| - 1)/|Γᵢ|` over the singular points.
    #[serde(with = "serde_rational")]
    pub euler_singular_term: Rational,
    /// `(r/pq + q/pr + p/qr)/3`.
    #[serde(with = "serde_rational")]
    pub signature_curvature_term: Rational,
    /// `Σ η(S³/Γᵢ)`.
    #[serde(with = "serde_rational")]
    pub signature_eta_term: Rational,
    /// `(r + q + p)²/(rqp)`.
    #[serde(with = "serde_rational")]
    pub c1_squared: Rational,
    /// `2/r + 2/q + 2/p - r/pq - q/pr - p/qr`.
    #[serde(with = "serde_rational")]
    pub ht_deficit: Rational,
}

/// `r/pq + q/pr + p/qr = (r² + q² + p²)/(rqp)`.
pub fn weight_ratio_sum(w: &Weights) -> Rational {
    let (r, q, p) = (&w.r, &w.q, &w.p);
    Rational::new(r * r + q * q + p * p, r * q * p)
}

/// `1/r + 1/q + 1/p`.
pub fn reciprocal_sum(w: &Weights) -> Rational {
    let (r, q, p) = (&w.r, &w.q, &w.p);
    Rational::new(q * p + r * p + r * q, r * q * p)
}

/// Hitchin-Thorpe deficit `(4qr - (p - q - r)²)/(rqp)`.
///
/// Non-positive exactly when `p >= (√q + √r)²`.
pub fn ht_deficit(w: &Weights) -> Rational {
    let e = w.excess();
    Rational::new(BigInt::from(4) * &w.q * &w.r - &e * &e, &w.r * &w.q * &w.p)
}

/// Exact Euler characteristic and signature decompositions.
///
/// Panics if either decomposition fails to reproduce `χ = 3`, `τ = 1`, which
/// would mean a bug in the Dedekind sum or action-type code.
pub fn topology_report(w: &Weights) -> TopologyReport {
    let points = singular_points(w);
    let euler_curvature_term = reciprocal_sum(w);
    let euler_singular_term: Rational = points.iter().map(|pt| pt.euler_contribution.clone()).sum();
    let ratios = weight_ratio_sum(w);
    let signature_curvature_term = &ratios / integer(3);
    let signature_eta_term: Rational = points.iter().map(|pt| pt.eta.clone()).sum();
    let sum = &w.r + &w.q + &w.p;
    let c1_squared = Rational::new(&sum * &sum, &w.r * &w.q * &w.p);
    let deficit = &euler_curvature_term * integer(2) - &ratios;

    assert_eq!(
        &euler_curvature_term + &euler_singular_term,
        integer(EULER_CHARACTERISTIC),
        "Euler decomposition failed for {w}"
    );
    assert_eq!(
        &signature_curvature_term - &signature_eta_term,
        integer(SIGNATURE),
        "signature decomposition failed for {w}"
    );
    assert_eq!(c1_squared, &ratios + &euler_curvature_term * integer(2));
    assert_eq!(deficit, ht_deficit(w));

    TopologyReport {
        euler_char: EULER_CHARACTERISTIC,
        signature: SIGNATURE,
        euler_curvature_term,
        euler_singular_term,
        signature_curvature_term,
        signature_eta_term,
        c1_squared,
        ht_deficit: deficit,
    }
}
