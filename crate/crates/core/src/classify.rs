//! Einstein existence and orbifold Yamabe invariant bounds.
//!
//! Every region boundary involving a square root is decided with integers:
//!
//! * `p >= (√q + √r)²`  ⇔  `p - q - r >= 0` and `(p - q - r)² >= 4qr`
//! * `p < (2√3 - 3)q + r`  ⇔  `(p - r + 3q)² < 12q²` (the left side is positive)
//! * `4π√2 (r+q+p)/√(rqp) < 8π√6/√p`  ⇔  `(r + q + p)² < 12rq`

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{integer, pi_surd_compare, PiSurd, Rational};
use crate::bochner::{
    bk_yamabe_energy, conformal_einstein_regime, scalar_curvature_profile, ConformalRegime,
    ScalarCurvatureProfile,
};
use crate::orbifold::{
    ht_deficit, singular_points, topology_report, SingularPoint, TopologyReport, Weights,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EinsteinTag {
    KaehlerEinsteinExists,
    EinsteinExists,
    Obstructed,
    Unknown,
}

impl EinsteinTag {
    pub const ALL: [EinsteinTag; 4] = [
        EinsteinTag::KaehlerEinsteinExists,
        EinsteinTag::EinsteinExists,
        EinsteinTag::Obstructed,
        EinsteinTag::Unknown,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EinsteinTag::KaehlerEinsteinExists => "kaehler_einstein_exists",
            EinsteinTag::EinsteinExists => "einstein_exists",
            EinsteinTag::Obstructed => "obstructed",
            EinsteinTag::Unknown => "unknown",
        }
    }
}

/// Existence status of an Einstein metric, with the reason it was decided.
///
/// Serializes as the two keys `einstein` and `einstein_note` so that it can
/// be flattened into a [`Classification`] record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EinsteinStatus {
    #[serde(rename = "einstein")]
    pub tag: EinsteinTag,
    #[serde(rename = "einstein_note")]
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct YamabeReport {
    /// `8π√6/√p`, from the largest orbifold group.
    pub elementary: PiSurd,
    /// `4π√2 (r+q+p)/√(rqp)`, the Bochner-Kähler Yamabe energy.
    pub upper: PiSurd,
    pub upper_strict: bool,
    pub reported_upper: PiSurd,
    /// `4π√6 · √(ht_deficit)`, present when the deficit is positive.
    pub lower: Option<PiSurd>,
    pub lower_strict: bool,
    pub lower_attained_by_bk_class: bool,
    /// The invariant itself, known only when `p = q + r`.
    pub exact: Option<PiSurd>,
    pub effective_exact: bool,
    pub effective_linear: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub weights: Weights,
    pub singular_points: Vec<SingularPoint>,
    pub topology: TopologyReport,
    pub scalar_profile: ScalarCurvatureProfile,
    pub conformal_regime: ConformalRegime,
    pub kaehler_einstein: bool,
    #[serde(flatten)]
    pub einstein: EinsteinStatus,
    pub yamabe: YamabeReport,
}

/// `p >= (√q + √r)²`, i.e. the Hitchin-Thorpe deficit is non-positive.
pub fn hitchin_thorpe_obstructed(w: &Weights) -> bool {
    let e = w.excess();
    !e.is_negative() && &e * &e >= BigInt::from(4) * w.q() * w.r()
}

/// `p = q + r`.
pub fn is_critical(w: &Weights) -> bool {
    w.excess().is_zero()
}

pub fn einstein_status(w: &Weights) -> EinsteinStatus {
    let e = w.excess();
    let (tag, note) = if w.is_fubini_study() {
        (
            EinsteinTag::KaehlerEinsteinExists,
            "Fubini-Study metric; (1,1,1) is the only Kähler-Einstein case".to_owned(),
        )
    } else if e.is_negative() {
        (
            EinsteinTag::EinsteinExists,
            "p < q + r: R_g^-2 g is a positive Einstein metric conformal to the Bochner-Kähler metric"
                .to_owned(),
        )
    } else if hitchin_thorpe_obstructed(w) {
        let note = if &e * &e == BigInt::from(4) * w.q() * w.r() {
            "p = (sqrt(q) + sqrt(r))^2: equality in the orbifold Hitchin-Thorpe inequality would force \
             a Ricci-flat self-dual metric, which does not exist"
        } else {
            "p > (sqrt(q) + sqrt(r))^2: the orbifold Hitchin-Thorpe inequality rules out Einstein metrics"
        };
        (EinsteinTag::Obstructed, note.to_owned())
    } else if e.is_zero() {
        (
            EinsteinTag::Unknown,
            "critical case p = q + r: existence undecided; Yamabe invariant equals 8*pi*sqrt(6/p) exactly"
                .to_owned(),
        )
    } else {
        (
            EinsteinTag::Unknown,
            "q + r < p < (sqrt(q) + sqrt(r))^2: existence undecided".to_owned(),
        )
    };
    EinsteinStatus { tag, note }
}

pub fn yamabe_report(w: &Weights) -> YamabeReport {
    let (r, q, p) = (w.r(), w.q(), w.p());
    let e = w.excess();
    let deficit = ht_deficit(w);

    let elementary =
        PiSurd::new(integer(8), Rational::new(BigInt::from(6), p.clone())).expect("p is positive");
    let upper = bk_yamabe_energy(w);
    let reported_upper = PiSurd::min_of(&elementary, &upper);
    let lower = deficit
        .is_positive()
        .then(|| PiSurd::new(integer(4), deficit * integer(6)).expect("deficit is positive"));

    let sum = r + q + p;
    let effective_exact = &sum * &sum < BigInt::from(12) * r * q;
    let shifted = p - r + BigInt::from(3) * q;
    let effective_linear = &shifted * &shifted < BigInt::from(12) * q * q;
    assert_eq!(
        effective_exact,
        pi_surd_compare(&upper, &elementary) == Ordering::Less
    );

    let obstructed = hitchin_thorpe_obstructed(w);
    let report = YamabeReport {
        upper_strict: !w.is_fubini_study(),
        lower_strict: e.is_positive() && !obstructed,
        lower_attained_by_bk_class: e.is_negative(),
        exact: e.is_zero().then(|| elementary.clone()),
        elementary,
        upper,
        reported_upper,
        lower,
        effective_exact,
        effective_linear,
    };
    if let Some(lower) = &report.lower {
        assert_ne!(
            pi_surd_compare(lower, &report.elementary),
            Ordering::Greater
        );
    }
    if let Some(exact) = &report.exact {
        assert_eq!(Some(exact), report.lower.as_ref());
    }
    report
}

/// Full classification of one weighted projective plane.
pub fn classify(w: &Weights) -> Classification {
    let topology = topology_report(w);
    let conformal_regime = conformal_einstein_regime(w);
    let einstein = einstein_status(w);

    if einstein.tag == EinsteinTag::Obstructed {
        assert!(
            !topology.ht_deficit.is_positive(),
            "obstructed {w} with positive deficit"
        );
    }
    if conformal_regime == ConformalRegime::PositiveEinstein {
        assert!(matches!(
            einstein.tag,
            EinsteinTag::EinsteinExists | EinsteinTag::KaehlerEinsteinExists
        ));
    }

    Classification {
        weights: w.clone(),
        singular_points: singular_points(w),
        scalar_profile: scalar_curvature_profile(w),
        conformal_regime,
        kaehler_einstein: einstein.tag == EinsteinTag::KaehlerEinsteinExists,
        yamabe: yamabe_report(w),
        topology,
        einstein,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{pi_surd_to_float, ratio};

    fn w(r: i64, q: i64, p: i64) -> Weights {
        Weights::new(r, q, p).unwrap()
    }

    fn surd(c: i64, rad: Rational) -> PiSurd {
        PiSurd::new(integer(c), rad).unwrap()
    }

    #[test]
    fn einstein_examples() {
        assert_eq!(
            einstein_status(&w(1, 1, 1)).tag,
            EinsteinTag::KaehlerEinsteinExists
        );
        assert_eq!(einstein_status(&w(1, 1, 4)).tag, EinsteinTag::Obstructed);
        assert_eq!(einstein_status(&w(1, 1, 2)).tag, EinsteinTag::Unknown);
        assert_eq!(einstein_status(&w(1, 1, 3)).tag, EinsteinTag::Unknown);
        assert_eq!(
            einstein_status(&w(3, 4, 5)).tag,
            EinsteinTag::EinsteinExists
        );
        assert_eq!(einstein_status(&w(1, 2, 7)).tag, EinsteinTag::Obstructed);
        assert!(einstein_status(&w(2, 3, 5))
            .note
            .starts_with("critical case"));
    }

    #[test]
    fn yamabe_fubini_study() {
        let y = yamabe_report(&w(1, 1, 1));
        assert_eq!(y.upper, surd(12, integer(2)));
        assert_eq!(y.lower, Some(surd(12, integer(2))));
        assert_eq!(y.elementary, surd(8, integer(6)));
        assert_eq!(y.exact, None);
        assert!(!y.upper_strict);
        assert_eq!(y.reported_upper, y.upper);
        assert!(y.lower_attained_by_bk_class);
        assert!(!y.lower_strict);
    }

    #[test]
    fn yamabe_critical() {
        let y = yamabe_report(&w(1, 2, 3));
        let exact = y.exact.clone().unwrap();
        assert_eq!(exact.coeff(), &integer(8));
        assert_eq!(exact.radicand(), &integer(2));
        assert!((pi_surd_to_float(&exact) - 35.5431).abs() < 1e-4);
        assert_eq!(y.lower.as_ref(), Some(&exact));
        assert_eq!(y.elementary, exact);
        assert!(!y.lower_strict);
        assert!(y.upper_strict);
    }

    #[test]
    fn yamabe_unknown_band() {
        let y = yamabe_report(&w(1, 2, 5));
        let lower = y.lower.clone().unwrap();
        assert_eq!(
            (lower.coeff(), lower.radicand()),
            (&integer(4), &ratio(12, 5))
        );
        assert!((pi_surd_to_float(&lower) - 19.4677).abs() < 1e-4);
        assert!(y.lower_strict);
        assert_eq!(
            (y.upper.coeff(), y.upper.radicand()),
            (&integer(32), &ratio(1, 5))
        );
        assert!((pi_surd_to_float(&y.upper) - 44.9588).abs() < 1e-4);
        assert_eq!(
            (y.elementary.coeff(), y.elementary.radicand()),
            (&integer(8), &ratio(6, 5))
        );
        assert!((pi_surd_to_float(&y.elementary) - 27.5315).abs() < 1e-4);
        assert_eq!(y.reported_upper.coeff(), &integer(8));
        assert!(!y.effective_exact);
        assert_eq!(y.exact, None);
    }

    #[test]
    fn yamabe_effective_boundary() {
        let y = yamabe_report(&w(3, 4, 5));
        assert!(!y.effective_exact);
        assert_eq!(pi_surd_compare(&y.upper, &y.elementary), Ordering::Equal);
        assert!(y.lower_attained_by_bk_class);
        assert!((pi_surd_to_float(y.lower.as_ref().unwrap()) - 26.36).abs() < 5e-3);
    }

    #[test]
    fn yamabe_effective_interior() {
        // (r+q+p)² = 900 < 12·9·10 = 1080 and (p - r + 3q)² = 1024 < 1200.
        let y = yamabe_report(&w(9, 10, 11));
        assert!(y.effective_exact);
        assert!(y.effective_linear);
        assert_eq!(y.reported_upper, y.upper);
    }

    #[test]
    fn obstruction_boundary_is_included() {
        // (√1 + √1)² = 4 and (√1 + √9)² = 16.
        assert!(hitchin_thorpe_obstructed(&w(1, 1, 4)));
        assert!(hitchin_thorpe_obstructed(&w(1, 9, 16)));
        assert!(!hitchin_thorpe_obstructed(&w(1, 9, 14)));
        assert!(einstein_status(&w(1, 9, 16)).note.contains("equality"));
    }

    #[test]
    fn classify_examples() {
        let c = classify(&w(1, 1, 1));
        assert_eq!(c.einstein.tag, EinsteinTag::KaehlerEinsteinExists);
        assert!(c.kaehler_einstein);
        assert_eq!(c.conformal_regime, ConformalRegime::PositiveEinstein);

        let c = classify(&w(2, 3, 5));
        assert_eq!(c.conformal_regime, ConformalRegime::RicciFlatPunctured);
        assert_eq!(c.einstein.tag, EinsteinTag::Unknown);
        let exact = c.yamabe.exact.unwrap();
        assert_eq!(exact, surd(8, ratio(6, 5)));
        assert!((pi_surd_to_float(&exact) - 27.5315).abs() < 1e-4);

        let c = classify(&w(1, 1, 4));
        assert_eq!(c.einstein.tag, EinsteinTag::Obstructed);
        assert_eq!(c.topology.ht_deficit, integer(0));
        assert!(c.yamabe.lower.is_none());
    }

    #[test]
    fn classification_json() {
        let c = classify(&w(1, 1, 4));
        let s = serde_json::to_string(&c).unwrap();
        assert!(s.contains(r#""einstein":"obstructed""#));
        assert!(s.contains(r#""ht_deficit":"0/1""#));
        assert!(s.contains(r#""conformal_regime":"negative_pieces""#));
        let back: Classification = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }
}
