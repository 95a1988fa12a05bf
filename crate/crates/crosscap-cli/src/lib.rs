//! Report assembly for the `crosscap` binary: JSON documents (exact rationals
//! as strings, no floats in payloads), a round-trip validator, and CSV/SVG
//! renderings of the piecewise-linear X functions.

use serde_json::{json, Map, Value};

use crosscap_core::{
    big_x, lambda_a_system, parse_pretzel, solve_type_i, stats, verify_bound, BasicEdgepath,
    BoundReport, CandidateFamily, EdgepathSystem, Fraction, KnotClass, Orientability,
    PiecewiseLinear, PretzelKnot, Variant, WitnessKind,
};

pub const SCHEMA_VERSION: &str = "1";

/// Parses `-p` input: comma-separated signed integers, whitespace ignored.
pub fn parse_tuple(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| format!("invalid tangle parameter {part:?}"))
        })
        .collect()
}

/// Parses and validates the knot; the message names the violated condition.
pub fn parse_knot(params: &[i64]) -> Result<PretzelKnot, String> {
    parse_pretzel(params).map_err(|e| e.to_string())
}

fn fr(f: &Fraction) -> Value {
    Value::String(f.to_string())
}

fn fr_opt(f: Option<&Fraction>) -> Value {
    match f {
        Some(f) => fr(f),
        None => Value::Null,
    }
}

fn class_str(c: KnotClass) -> &'static str {
    match c {
        KnotClass::A => "A",
        KnotClass::B => "B",
    }
}

fn orientability_str(o: Orientability) -> &'static str {
    match o {
        Orientability::Orientable => "orientable",
        Orientability::Nonorientable => "nonorientable",
        Orientability::Unknown => "unknown",
    }
}

pub fn variants_string(basics: &[BasicEdgepath]) -> String {
    basics
        .iter()
        .map(|b| match b.variant() {
            Variant::A => 'a',
            Variant::B => 'b',
        })
        .collect()
}

fn pl_json(f: &PiecewiseLinear) -> Value {
    json!({
        "breakpoints": f
            .breakpoints()
            .iter()
            .map(|(w, v)| json!([w.to_string(), v.to_string()]))
            .collect::<Vec<_>>(),
        "final_slope": f.final_slope().to_string(),
    })
}

fn stats_json(system: &EdgepathSystem) -> Value {
    let st = stats(system).expect("emitted system has stats");
    json!({
        "chi_ratio": st.chi_ratio.to_string(),
        "sheets_lb": st.sheets_lb.to_string(),
        "has_caps": st.has_caps,
        "spanning_candidate": st.spanning_candidate,
        "orientability": orientability_str(st.orientability),
    })
}

fn system_json(system: &EdgepathSystem) -> Value {
    let mut m = Map::new();
    m.insert(
        "variants".into(),
        Value::String(variants_string(system.source_basic())),
    );
    if let Some(w0) = system.w0() {
        m.insert("w0".into(), fr(w0));
    }
    if system.vertical_count() > 0 {
        m.insert("vertical_count".into(), json!(system.vertical_count()));
    }
    m.insert(
        "paths".into(),
        Value::Array(
            system
                .paths()
                .iter()
                .map(|p| Value::String(p.to_string()))
                .collect(),
        ),
    );
    m.insert("stats".into(), stats_json(system));
    Value::Object(m)
}

fn family_json(fam: &CandidateFamily) -> Value {
    json!({
        "variants": variants_string(fam.source_basic()),
        "interval": {
            "w_start": fr(fam.w_start()),
            "w_end": fr_opt(fam.w_end()),
            "left_closed": fam.left_closed(),
            "right_closed": fam.right_closed(),
        },
        "ratio_fn": pl_json(fam.ratio_fn()),
        "base_paths": fam
            .base()
            .paths()
            .iter()
            .map(|p| Value::String(p.to_string()))
            .collect::<Vec<_>>(),
    })
}

fn bound_report_json(report: &BoundReport) -> Value {
    let witnesses: Vec<Value> = report
        .equality_witnesses
        .iter()
        .map(|w| {
            let mut m = Map::new();
            match &w.kind {
                WitnessKind::System(sys) => {
                    m.insert("kind".into(), json!("system"));
                    m.insert("system".into(), system_json(sys));
                }
                WitnessKind::FamilyPoint { family, w } => {
                    m.insert("kind".into(), json!("family_point"));
                    m.insert("family".into(), family_json(family));
                    m.insert("w".into(), fr(w));
                }
                WitnessKind::FamilyRange { family, w_start, w_end } => {
                    m.insert("kind".into(), json!("family_range"));
                    m.insert("family".into(), family_json(family));
                    m.insert("w_start".into(), fr(w_start));
                    m.insert("w_end".into(), fr_opt(w_end.as_ref()));
                }
            }
            m.insert(
                "stats".into(),
                json!({
                    "chi_ratio": w.stats.chi_ratio.to_string(),
                    "sheets_lb": w.stats.sheets_lb.to_string(),
                    "has_caps": w.stats.has_caps,
                    "spanning_candidate": w.stats.spanning_candidate,
                    "orientability": orientability_str(w.stats.orientability),
                }),
            );
            m.insert("acceptable".into(), json!(w.acceptable));
            Value::Object(m)
        })
        .collect();
    let boundary: Vec<Value> = report
        .boundary_witnesses
        .iter()
        .map(|b| {
            json!({
                "family": family_json(&b.family),
                "w": fr(&b.w),
                "note": "boundary, not a family member",
            })
        })
        .collect();
    json!({
        "bound": fr(&report.bound),
        "min_candidate_ratio": fr(&report.min_candidate_ratio),
        "equality_witnesses": witnesses,
        "boundary_witnesses": boundary,
        "verdict": report.verdict,
        "truncation": report.truncation,
    })
}

fn envelope(command: &str, knot: &[i64], results: Value) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "knot": knot,
        "results": results,
    })
}

/// `crosscap` subcommand document.
pub fn build_crosscap_doc(knot: &PretzelKnot) -> Value {
    let reference = knot.reference_stats().ok().map(|r| {
        json!({
            "betti_fb": r.betti_fb,
            "chi_ratio_fb": r.chi_ratio_fb.to_string(),
            "fa_orientable": r.fa_orientable,
        })
    });
    envelope(
        "crosscap",
        knot.params(),
        json!({
            "crosscap": knot.crosscap_number(),
            "class": class_str(knot.class()),
            "reference": reference,
        }),
    )
}

/// `candidates` subcommand document.
pub fn build_candidates_doc(knot: &PretzelKnot, max_vertical: u32) -> Result<Value, String> {
    let sols = solve_type_i(knot).map_err(|e| e.to_string())?;
    let type_ii = crosscap_core::enumerate_type_ii(knot, max_vertical).map_err(|e| e.to_string())?;
    let type_iii = crosscap_core::enumerate_type_iii(knot).map_err(|e| e.to_string())?;
    Ok(envelope(
        "candidates",
        knot.params(),
        json!({
            "max_vertical": max_vertical,
            "type_i": sols.systems.iter().map(system_json).collect::<Vec<_>>(),
            "type_i_families": sols.families.iter().map(family_json).collect::<Vec<_>>(),
            "type_ii": type_ii.iter().map(system_json).collect::<Vec<_>>(),
            "type_iii": type_iii.iter().map(system_json).collect::<Vec<_>>(),
        }),
    ))
}

/// Resolves an `xfun` system selector ("aab" style; default all-a).
pub fn resolve_selector(knot: &PretzelKnot, selector: Option<&str>) -> Result<Vec<BasicEdgepath>, String> {
    match selector {
        None => Ok(lambda_a_system(knot)),
        Some(s) => {
            if s.len() != knot.tangle_count() {
                return Err(format!(
                    "selector {s:?} has {} letters for {} tangles",
                    s.len(),
                    knot.tangle_count()
                ));
            }
            s.chars()
                .zip(knot.params())
                .map(|(c, &p)| {
                    let variant = match c {
                        'a' => Variant::A,
                        'b' => Variant::B,
                        _ => return Err(format!("selector letter {c:?} is not 'a' or 'b'")),
                    };
                    BasicEdgepath::new(p, variant).map_err(|e| e.to_string())
                })
                .collect()
        }
    }
}

/// `xfun` subcommand document.
pub fn build_xfun_doc(knot: &PretzelKnot, selector: Option<&str>) -> Result<Value, String> {
    if knot.tangle_count() < 3 {
        return Err("X is defined for at least 3 tangles".into());
    }
    let basics = resolve_selector(knot, selector)?;
    let x = big_x(&basics);
    Ok(envelope(
        "xfun",
        knot.params(),
        json!({
            "system": variants_string(&basics),
            "x": pl_json(&x),
        }),
    ))
}

/// `verify` subcommand document plus the verdict for the exit code.
pub fn build_verify_doc(knot: &PretzelKnot, max_vertical: u32) -> Result<(Value, bool), String> {
    let report = verify_bound(knot, max_vertical).map_err(|e| e.to_string())?;
    let verdict = report.verdict;
    Ok((
        envelope("verify", knot.params(), bound_report_json(&report)),
        verdict,
    ))
}

/// Canonical byte rendering of a document (pretty JSON plus final newline).
pub fn render_json(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serializable document");
    s.push('\n');
    s
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value, String> {
    v.get(key).ok_or_else(|| format!("missing field {key:?}"))
}

fn fraction_field(v: &Value, key: &str) -> Result<Fraction, String> {
    let s = get(v, key)?
        .as_str()
        .ok_or_else(|| format!("field {key:?} is not a fraction string"))?;
    s.parse::<Fraction>()
        .map_err(|e| format!("field {key:?}: {e}"))
}

/// Round-trip validator: parses a report, checks the schema, re-runs the
/// computation from the embedded inputs, and requires the regenerated
/// document to match byte for byte. Fraction fields must re-parse exactly.
pub fn validate_report(bytes: &str) -> Result<(), String> {
    let doc: Value = serde_json::from_str(bytes).map_err(|e| e.to_string())?;
    let version = get(&doc, "schema_version")?
        .as_str()
        .ok_or("schema_version is not a string")?;
    if version != SCHEMA_VERSION {
        return Err(format!("unsupported schema_version {version:?}"));
    }
    let command = get(&doc, "command")?
        .as_str()
        .ok_or("command is not a string")?
        .to_owned();
    let knot_params: Vec<i64> = get(&doc, "knot")?
        .as_array()
        .ok_or("knot is not an array")?
        .iter()
        .map(|v| v.as_i64().ok_or("knot entry is not an integer"))
        .collect::<Result<_, _>>()?;
    let knot = parse_knot(&knot_params)?;
    let results = get(&doc, "results")?;

    let regenerated = match command.as_str() {
        "crosscap" => build_crosscap_doc(&knot),
        "candidates" => {
            let mv = get(results, "max_vertical")?
                .as_u64()
                .ok_or("max_vertical is not an integer")? as u32;
            build_candidates_doc(&knot, mv)?
        }
        "xfun" => {
            let system = get(results, "system")?
                .as_str()
                .ok_or("system is not a string")?
                .to_owned();
            fraction_field(get(results, "x")?, "final_slope")?;
            build_xfun_doc(&knot, Some(&system))?
        }
        "verify" => {
            let mv = get(results, "truncation")?
                .as_u64()
                .ok_or("truncation is not an integer")? as u32;
            fraction_field(results, "bound")?;
            fraction_field(results, "min_candidate_ratio")?;
            build_verify_doc(&knot, mv)?.0
        }
        other => return Err(format!("unknown command {other:?}")),
    };
    if render_json(&regenerated) != bytes {
        return Err("document does not match its regeneration".into());
    }
    Ok(())
}

/// CSV rendering of a piecewise-linear function: breakpoints, then the ray.
pub fn render_csv(f: &PiecewiseLinear) -> String {
    let mut out = String::from("w,value\n");
    for (w, v) in f.breakpoints() {
        out.push_str(&format!("{w},{v}\n"));
    }
    out.push_str(&format!("final_slope,{}\n", f.final_slope()));
    out
}

fn to_f64(f: &Fraction) -> f64 {
    // geometry only; payload data stays exact
    let n: f64 = f.numer().to_string().parse().unwrap();
    let d: f64 = f.denom().to_string().parse().unwrap();
    n / d
}

/// Deterministic SVG plot of a piecewise-linear function. Coordinates use
/// floats for layout only; every tick label is the exact fraction string.
pub fn render_svg(f: &PiecewiseLinear, title: &str) -> String {
    let (width, height, margin) = (640.0_f64, 480.0_f64, 60.0_f64);
    let last_w = &f.breakpoints().last().unwrap().0;
    let w_max = last_w + &Fraction::from_int(2);
    let end_value = f.eval(&w_max).unwrap();

    let mut pts: Vec<(Fraction, Fraction)> = f.breakpoints().to_vec();
    pts.push((w_max.clone(), end_value));

    let mut v_min = pts[0].1.clone();
    let mut v_max = pts[0].1.clone();
    for (_, v) in &pts {
        if v < &v_min {
            v_min = v.clone();
        }
        if v > &v_max {
            v_max = v.clone();
        }
    }
    if v_min == v_max {
        v_max = &v_max + &Fraction::one();
    }

    let (w0, w1) = (to_f64(f.domain_start()), to_f64(&w_max));
    let (y0, y1) = (to_f64(&v_min), to_f64(&v_max));
    let sx = |w: f64| margin + (w - w0) / (w1 - w0) * (width - 2.0 * margin);
    let sy = |v: f64| height - margin - (v - y0) / (y1 - y0) * (height - 2.0 * margin);

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));
    svg.push_str(&format!(
        "  <title>{title}</title>\n  <rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>\n"
    ));
    // axes
    svg.push_str(&format!(
        "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
        margin,
        height - margin,
        width - margin,
        height - margin
    ));
    svg.push_str(&format!(
        "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
        margin,
        margin,
        margin,
        height - margin
    ));
    // graph
    let poly: Vec<String> = pts
        .iter()
        .map(|(w, v)| format!("{:.2},{:.2}", sx(to_f64(w)), sy(to_f64(v))))
        .collect();
    svg.push_str(&format!(
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\"/>\n",
        poly.join(" ")
    ));
    // breakpoint markers with exact labels
    for (w, v) in f.breakpoints() {
        let (x, y) = (sx(to_f64(w)), sy(to_f64(v)));
        svg.push_str(&format!(
            "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"crimson\"/>\n"
        ));
        svg.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\">({w}, {v})</text>\n",
            x + 5.0,
            y - 5.0
        ));
    }
    // axis tick labels at the breakpoint w-coordinates
    for (w, _) in f.breakpoints() {
        let x = sx(to_f64(w));
        svg.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" text-anchor=\"middle\">{w}</text>\n",
            x,
            height - margin + 16.0
        ));
    }
    svg.push_str(&format!(
        "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" text-anchor=\"end\">{v_min}</text>\n",
        margin - 6.0,
        height - margin
    ));
    svg.push_str(&format!(
        "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" text-anchor=\"end\">{v_max}</text>\n",
        margin - 6.0,
        margin
    ));
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_parsing() {
        assert_eq!(parse_tuple("2,3,3").unwrap(), vec![2, 3, 3]);
        assert_eq!(parse_tuple(" -3 , 5 ,7 ").unwrap(), vec![-3, 5, 7]);
        assert!(parse_tuple("2,x").is_err());
    }

    #[test]
    fn crosscap_doc_round_trips() {
        let knot = parse_knot(&[2, 3, 3]).unwrap();
        let doc = build_crosscap_doc(&knot);
        let bytes = render_json(&doc);
        validate_report(&bytes).unwrap();
    }

    #[test]
    fn verify_doc_round_trips() {
        let knot = parse_knot(&[-3, 3, 5]).unwrap();
        let (doc, verdict) = build_verify_doc(&knot, 6).unwrap();
        assert!(verdict);
        validate_report(&render_json(&doc)).unwrap();
    }

    #[test]
    fn tampered_document_rejected() {
        let knot = parse_knot(&[2, 3, 3]).unwrap();
        let bytes = render_json(&build_crosscap_doc(&knot));
        let tampered = bytes.replace("\"crosscap\": 2", "\"crosscap\": 3");
        assert!(validate_report(&tampered).is_err());
    }

    #[test]
    fn svg_contains_exact_labels() {
        let knot = parse_knot(&[3, 5, 7]).unwrap();
        let x = big_x(&lambda_a_system(&knot));
        let svg = render_svg(&x, "X for (3,5,7)");
        assert!(svg.contains("(7, 34/15)"));
        assert!(!svg.contains("NaN"));
    }
}
