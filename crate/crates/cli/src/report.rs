use cgbounds::bounds::{BoundReport, ScanSummary, Theorem};
use serde_json::{json, Value};

#[derive(Clone, Copy)]
pub enum Format {
    Table,
    /// One JSON object per line.
    Records,
}

fn record(r: &BoundReport) -> Value {
    let mut v = json!({
        "id": r.id,
        "theorem": r.theorem.to_string(),
        "n": r.n.to_string(),
        "r": r.r,
        "order": r.order.to_string(),
        "c": r.c,
        "certainty": r.source.to_string(),
        "hypothesis": r.hypothesis.to_string(),
        "bound": r.bound.to_string(),
        "bound_approx": r.bound.to_f64(),
        "verdict": r.verdict.to_string(),
    });
    if let Some(q) = r.bound.as_rational() {
        v["bound_numerator"] = q.numer().to_string().into();
        v["bound_denominator"] = q.denom().to_string().into();
    }
    if let Some(f) = r.fingerprint {
        v["fingerprint"] = f.into();
    }
    if let Some(c) = &r.classification {
        v["primitive"] = c.primitive.into();
        v["quasiprimitive"] = c.quasiprimitive.to_string().into();
        v["semiprimitive"] = c.semiprimitive.to_string().into();
        v["affine"] = c.affine.to_string().into();
    }
    if let Some(l) = &r.linear {
        v["field_order"] = l.field_order.into();
        v["constituent_dims"] = json!(l.constituent_dims);
    }
    v
}

pub fn print_report(r: &BoundReport, format: Format) {
    match format {
        Format::Records => println!("{}", record(r)),
        Format::Table => {
            let fp = match r.fingerprint {
                Some(true) => "  fingerprint ok",
                Some(false) => "  fingerprint MISMATCH",
                None => "",
            };
            println!(
                "{:<24} {} n={} r={} c={} ({}) bound={} ~ {:.4} {}{}",
                r.id,
                r.theorem,
                r.n,
                r.r,
                r.c,
                r.source,
                r.bound,
                r.bound.to_f64(),
                r.verdict,
                fp
            );
        }
    }
}

pub fn print_summary(s: &ScanSummary, theorem: Theorem, format: Format) {
    match format {
        Format::Records => println!(
            "{}",
            json!({
                "summary": theorem.to_string(),
                "groups": s.groups,
                "failures": s.failures,
                "violations": s.violations,
                "hypothesis_unmet": s.hypothesis_unmet,
                "equalities": s.equalities,
                "max_slack": s.max_slack,
            })
        ),
        Format::Table => {
            println!(
                "{}: {} groups, {} failed, {} violations, {} outside hypotheses, {} equalities",
                theorem,
                s.groups,
                s.failures,
                s.violations,
                s.hypothesis_unmet,
                s.equalities.len()
            );
            if !s.equalities.is_empty() {
                println!("equal: {}", s.equalities.join(" "));
            }
            if let Some(m) = s.max_slack {
                println!("max slack: {:.4}", m);
            }
        }
    }
}
