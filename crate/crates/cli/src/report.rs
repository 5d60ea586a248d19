use std::fmt::Write;
use std::fs;
use std::path::Path;

use gizatullin::classify::{
    classify as classify_pair, danilov_gizatullin, toric_classes, toric_zigzag, CstarVerdict, FibrationClasses,
};
use gizatullin::dpd::{
    boundary_zigzag, extended_divisor, extended_divisor_vee, is_gizatullin, is_toric, parabolic_weight,
    singular_points, toric_type, DpdPair,
};
use gizatullin::dualgraph::{ext_to_dot, render_ascii, ExtendedDivisor, Zigzag};
use gizatullin::rigidity::{is_rigid, sufficient_criterion};
use gizatullin::Rational;
use serde_json::{json, Value};

use crate::CliError;

pub struct Report {
    pub text: String,
    pub json: Value,
    pub exit_code: u8,
}

impl Report {
    fn ok(text: String, json: Value) -> Report {
        Report { text, json, exit_code: 0 }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt_point(p: &Option<Rational>) -> String {
    p.as_ref().map_or("-".into(), |p| p.to_string())
}

fn pair_json(pair: &DpdPair) -> Value {
    let doc = crate::input::InputDocument::from_pair(pair);
    json!({ "d_plus": doc.d_plus, "d_minus": doc.d_minus })
}

fn zigzag_line(z: &Zigzag, smooth: bool) -> String {
    format!("zigzag {z} {}\n", if smooth { "smooth" } else { "singular" })
}

pub fn analyze(pair: &DpdPair) -> Result<Report, CliError> {
    let Some(pts) = is_gizatullin(pair) else {
        let text = "valid: yes\ngizatullin: no\n".to_string();
        let json = json!({ "valid": true, "gizatullin": false });
        return Ok(Report { text, json, exit_code: 3 });
    };
    let singular = singular_points(pair)?;
    let smooth = singular.is_empty();
    let toric = is_toric(pair);
    let mut text = String::from("valid: yes\n");
    let _ = writeln!(text, "gizatullin: yes (p+ = {}, p- = {})", opt_point(&pts.p_plus), opt_point(&pts.p_minus));
    let (zigzag, toric_json) = if toric {
        let (d, e) = toric_type(pair)?;
        let _ = writeln!(text, "toric (d,e)=({d},{e})");
        (toric_zigzag(d, e)?, json!([d, e]))
    } else {
        text.push_str("toric: no\n");
        (boundary_zigzag(pair)?, Value::Null)
    };
    let _ = writeln!(text, "smooth: {}", yes(smooth));
    if smooth {
        text.push_str("singular points: none\n");
    } else {
        let list: Vec<String> = singular.iter().map(|(p, (d, e))| format!("{p} ({d},{e})")).collect();
        let _ = writeln!(text, "singular points: {}", list.join(", "));
    }
    text.push_str(&zigzag_line(&zigzag, smooth));
    let ws = parabolic_weight(pair)?;
    let _ = writeln!(text, "w_s: {ws}");
    let json = json!({
        "valid": true,
        "gizatullin": true,
        "p_plus": pts.p_plus.as_ref().map(|p| p.to_string()),
        "p_minus": pts.p_minus.as_ref().map(|p| p.to_string()),
        "toric": toric,
        "toric_type": toric_json,
        "smooth": smooth,
        "singular_points": singular.iter().map(|(p, (d, e))| json!({ "point": p.to_string(), "delta": d, "e": e })).collect::<Vec<_>>(),
        "zigzag": zigzag.weights(),
        "w_s": ws,
    });
    Ok(Report::ok(text, json))
}

/// Feathers are named `F_1, F_2, ...` in order, with `F_0` for the tail.
fn feather_names(ext: &ExtendedDivisor) -> Vec<String> {
    let mut next = 1;
    (0..ext.fiber.feathers().len())
        .map(|j| {
            if ext.origins.get(j).is_some_and(|o| o.tail) {
                "F_0".to_string()
            } else {
                next += 1;
                format!("F_{}", next - 1)
            }
        })
        .collect()
}

fn write_dot(ext: &ExtendedDivisor, dot: Option<&Path>) -> Result<(), CliError> {
    if let Some(path) = dot {
        fs::write(path, ext_to_dot(ext)).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn ext_report(ext: &ExtendedDivisor, mut text: String, mut json: Value) -> Report {
    let names = feather_names(ext);
    let _ = writeln!(text, "zigzag {}", ext.zigzag());
    let _ = writeln!(text, "extended {}", render_ascii(ext));
    if let Some(s) = ext.s_index {
        let _ = writeln!(text, "parabolic: C{s}");
    }
    let mut feathers = Vec::new();
    for (j, (i, f)) in ext.fiber.feathers().iter().enumerate() {
        let boxed: Vec<String> = f.box_chain.iter().map(|w| w.to_string()).collect();
        let origin = ext.origins.get(j);
        let _ = write!(text, "{}: bridge {} box [{}] at C{}", names[j], f.bridge_weight, boxed.join(","), i + 2);
        if let Some(o) = origin {
            let _ = write!(text, " (point {})", o.point);
        }
        text.push('\n');
        feathers.push(json!({
            "name": names[j],
            "at": i + 2,
            "bridge": f.bridge_weight,
            "box": f.box_chain,
            "point": origin.map(|o| o.point.to_string()),
        }));
    }
    json["zigzag"] = json!(ext.zigzag().weights());
    json["parabolic"] = json!(ext.s_index);
    json["feathers"] = json!(feathers);
    Report::ok(text, json)
}

pub fn extended(pair: &DpdPair, reversed: bool, dot: Option<&Path>) -> Result<Report, CliError> {
    let ext = if reversed { extended_divisor_vee(pair)? } else { extended_divisor(pair)? };
    write_dot(&ext, dot)?;
    Ok(ext_report(&ext, String::new(), json!({ "reversed": reversed })))
}

pub fn rigidity(pair: &DpdPair, reversed: bool) -> Result<Report, CliError> {
    let ext = if reversed { extended_divisor_vee(pair)? } else { extended_divisor(pair)? };
    let f = &ext.fiber;
    let rep = is_rigid(f)?;
    let mut head = format!("rigid: {}", yes(rep.rigid));
    let moves: Vec<String> =
        rep.generalization_moves.iter().map(|m| format!("B_{} → D_{}", m.feather + 1, m.mother)).collect();
    let jumps: Vec<String> = rep.jump_pairs.iter().map(|j| format!("B_{} → D_{}", j.feather + 1, j.to)).collect();
    if !moves.is_empty() {
        let _ = write!(head, "; generalization: {}", moves.join(", "));
    }
    if !jumps.is_empty() {
        let _ = write!(head, "; specialization: {}", jumps.join(", "));
    }
    let mut text = head + "\n";
    let _ = writeln!(text, "distinguished: {}", yes(rep.distinguished));
    let mothers: Vec<String> = rep.mother.iter().enumerate().map(|(j, mu)| format!("B_{} → D_{mu}", j + 1)).collect();
    let _ = writeln!(text, "mothers: {}", if mothers.is_empty() { "none".into() } else { mothers.join(", ") });
    let suff = sufficient_criterion(f);
    let _ = writeln!(text, "sufficient criterion: {}", yes(suff));
    let json = json!({
        "reversed": reversed,
        "rigid": rep.rigid,
        "distinguished": rep.distinguished,
        "all_bridges_minus_one": rep.all_bridges_minus_one,
        "mothers": rep.mother,
        "generalizations": rep.generalization_moves.iter().map(|m| json!({ "bridge": m.feather + 1, "from": m.from, "to": m.mother })).collect::<Vec<_>>(),
        "jumps": rep.jump_pairs.iter().map(|j| json!({ "bridge": j.feather + 1, "from": j.from, "to": j.to })).collect::<Vec<_>>(),
        "sufficient_criterion": suff,
    });
    Ok(Report::ok(text, json))
}

fn verdict(v: &CstarVerdict) -> &'static str {
    match v {
        CstarVerdict::UniqueUpToConjugationAndInversion => "unique up to conjugation and inversion",
        CstarVerdict::NonUniqueToric => "not unique (toric)",
        CstarVerdict::Unknown => "unknown",
    }
}

pub fn classify(pair: &DpdPair) -> Result<Report, CliError> {
    let rep = classify_pair(pair)?;
    let mut text = String::new();
    let _ = writeln!(text, "alpha+: {}", yes(rep.alpha_plus));
    let _ = writeln!(text, "alpha*: {}", yes(rep.alpha_star));
    let _ = writeln!(text, "beta: {}", yes(rep.beta));
    let _ = writeln!(text, "toric: {}", yes(rep.toric));
    let _ = writeln!(text, "C* actions: {}", verdict(&rep.cstar_verdict));
    if let Some(psi) = &rep.inverse_conjugate {
        let _ = writeln!(text, "inverse conjugate by: t ↦ {psi}");
    }
    let (classes, psi) = match &rep.fibration_classes {
        FibrationClasses::One { psi } => ("one", psi.as_ref()),
        FibrationClasses::Two => ("two", None),
        FibrationClasses::Unknown => ("unknown", None),
    };
    let _ = writeln!(text, "A1-fibrations: {classes}");
    let json = json!({
        "alpha_plus": rep.alpha_plus,
        "alpha_star": rep.alpha_star,
        "beta": rep.beta,
        "toric": rep.toric,
        "cstar": match rep.cstar_verdict {
            CstarVerdict::UniqueUpToConjugationAndInversion => "unique",
            CstarVerdict::NonUniqueToric => "non_unique_toric",
            CstarVerdict::Unknown => "unknown",
        },
        "inverse_conjugate": rep.inverse_conjugate.as_ref().map(|m| m.to_string()),
        "fibration_classes": classes,
        "psi": psi.map(|m| m.to_string()),
    });
    Ok(Report::ok(text, json))
}

pub fn toric(d: i64, e: i64) -> Result<Report, CliError> {
    let z = toric_zigzag(d, e)?;
    let classes = toric_classes(d, e)?;
    let text = format!("zigzag {z}\nclasses: {classes}\n");
    Ok(Report::ok(text, json!({ "d": d, "e": e, "zigzag": z.weights(), "classes": classes })))
}

pub fn dg(k: i64, r: i64, dot: Option<&Path>) -> Result<Report, CliError> {
    let (pair, ext) = danilov_gizatullin(k, r)?;
    write_dot(&ext, dot)?;
    let text = format!("pair: ({}, {})\n", pair.d_plus(), pair.d_minus());
    Ok(ext_report(&ext, text, json!({ "k": k, "r": r, "pair": pair_json(&pair) })))
}
