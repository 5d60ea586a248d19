use std::fmt::Write;

use super::fiber::{ExtendedDivisor, Feather};
use super::tree::{Role, WeightedTree};

fn name(role: Role, ext: bool) -> String {
    match role {
        Role::Spine(i) if ext => format!("C{}", i + 2),
        r => r.to_string(),
    }
}

fn dot_body(out: &mut String, tree: &WeightedTree, ext: bool) {
    for (id, v) in tree.vertices() {
        let _ = writeln!(out, "  n{id} [label=\"{}({})\"];", name(v.role, ext), v.weight);
    }
    for (a, b) in tree.edges() {
        let _ = writeln!(out, "  n{a} -- n{b};");
    }
}

/// Graphviz text for a forest; vertices are labelled `name(weight)`.
pub fn to_dot(forest: &[WeightedTree]) -> String {
    let mut out = String::from("graph {\n");
    for t in forest {
        dot_body(&mut out, t, false);
    }
    out.push_str("}\n");
    out
}

/// Graphviz text for an extended divisor, spine named `C2, C3, ...`.
pub fn ext_to_dot(ext: &ExtendedDivisor) -> String {
    let mut out = String::from("graph {\n");
    dot_body(&mut out, &ext.tree(), true);
    out.push_str("}\n");
    out
}

fn feather_tag(f: &Feather) -> String {
    if f.box_chain.is_empty() {
        format!("{{F:{}}}", f.bridge_weight)
    } else {
        let b: Vec<String> = f.box_chain.iter().map(|w| w.to_string()).collect();
        format!("{{F:{}[{}]}}", f.bridge_weight, b.join(","))
    }
}

/// Bracket notation with runs of equal bare spine weights compressed,
/// e.g. `[[0,0,-3,-2{F:-1},(-2)_{2}]]`.
pub fn render_ascii(ext: &ExtendedDivisor) -> String {
    let fiber = &ext.fiber;
    let mut items: Vec<String> = vec!["0".into(), "0".into()];
    let spine = fiber.spine();
    let mut i = 0;
    while i < spine.len() {
        let tags: String = fiber.feathers_at(i).map(|(_, f)| feather_tag(f)).collect();
        if !tags.is_empty() {
            items.push(format!("{}{}", spine[i], tags));
            i += 1;
            continue;
        }
        let mut j = i;
        while j + 1 < spine.len() && spine[j + 1] == spine[i] && fiber.feathers_at(j + 1).next().is_none() {
            j += 1;
        }
        let run = j - i + 1;
        if run >= 2 {
            items.push(format!("({})_{{{run}}}", spine[i]));
        } else {
            items.push(spine[i].to_string());
        }
        i = j + 1;
    }
    format!("[[{}]]", items.join(","))
}
