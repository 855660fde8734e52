//! Output formats and rendering of single classifications.

use std::fmt::Write as _;
use std::io::{self, Write};

use wps_core::arith::format_rational;
use wps_core::{Classification, PiSurd};

use crate::survey::{csv_row, regime_name, SurveyRecord, CSV_HEADER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

fn surd_line(label: &str, x: &PiSurd) -> String {
    format!("  {label:<22} {x}  ~ {:.6}\n", x.to_f64())
}

pub fn classification_text(c: &Classification) -> String {
    let w = &c.weights;
    let t = &c.topology;
    let s = &c.scalar_profile;
    let y = &c.yamabe;
    let mut out = String::new();

    let _ = writeln!(out, "CP^2{}", w);
    let _ = writeln!(out, "singular points:");
    if c.singular_points.is_empty() {
        let _ = writeln!(out, "  none");
    }
    for pt in &c.singular_points {
        let _ = writeln!(
            out,
            "  {}  order {}  action ({}, {})  eta {}",
            pt.location.label(),
            pt.order,
            pt.action.a(),
            pt.action.n(),
            format_rational(&pt.eta)
        );
    }
    let _ = writeln!(out, "topology:");
    let _ = writeln!(
        out,
        "  euler characteristic {} = {} (curvature) + {} (singular)",
        t.euler_char,
        format_rational(&t.euler_curvature_term),
        format_rational(&t.euler_singular_term)
    );
    let _ = writeln!(
        out,
        "  signature {}: curvature term {}, eta term {}",
        t.signature,
        format_rational(&t.signature_curvature_term),
        format_rational(&t.signature_eta_term)
    );
    let _ = writeln!(out, "  c1^2 = {}", format_rational(&t.c1_squared));
    let _ = writeln!(
        out,
        "  hitchin-thorpe deficit = {}",
        format_rational(&t.ht_deficit)
    );
    let _ = writeln!(out, "bochner-kaehler scalar curvature:");
    let _ = writeln!(
        out,
        "  R_g = {}|u1|^2 + {}|u2|^2 + {}|u3|^2",
        s.a1, s.a2, s.a3
    );
    let regime = serde_json::to_value(s.regime).expect("unit variant");
    let _ = writeln!(
        out,
        "  min {}  max {}  {}",
        s.min_r,
        s.max_r,
        regime.as_str().unwrap_or_default()
    );
    if let Some(loc) = s.zero_locus {
        let _ = writeln!(out, "  vanishes only at {}", loc.label());
    }
    let _ = writeln!(out, "  volume = {} pi^2", format_rational(&s.volume_coeff));
    let _ = writeln!(out, "conformal regime: {}", regime_name(c.conformal_regime));
    let _ = writeln!(
        out,
        "einstein: {} ({})",
        c.einstein.tag.as_str(),
        c.einstein.note
    );
    let _ = writeln!(out, "yamabe invariant:");
    out.push_str(&surd_line("elementary bound", &y.elementary));
    out.push_str(&surd_line(
        if y.upper_strict {
            "upper bound (strict)"
        } else {
            "upper bound"
        },
        &y.upper,
    ));
    out.push_str(&surd_line("reported upper", &y.reported_upper));
    if let Some(lower) = &y.lower {
        out.push_str(&surd_line(
            if y.lower_strict {
                "lower bound (strict)"
            } else {
                "lower bound"
            },
            lower,
        ));
    }
    if let Some(exact) = &y.exact {
        out.push_str(&surd_line("exact value", exact));
    }
    let _ = writeln!(
        out,
        "  lower attained by BK class: {}  effective: {}  effective (linear test): {}",
        y.lower_attained_by_bk_class, y.effective_exact, y.effective_linear
    );
    out
}

pub fn write_classification(
    c: &Classification,
    format: Format,
    out: &mut dyn Write,
) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, c)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CSV_HEADER)?;
            w.write_record(csv_row(&SurveyRecord::new(&c.weights)))?;
            w.flush()
        }
        Format::Text => out.write_all(classification_text(c).as_bytes()),
    }
}
