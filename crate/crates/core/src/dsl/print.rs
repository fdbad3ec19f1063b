//! Canonical text of a [`Document`]: every template expanded, every
//! element in normal form, statements in a fixed order.

use super::Document;
use crate::ncalg::{render_element, Element, GenId};

/// Prints a document so that parsing the output yields an equal document.
pub fn print_document(doc: &Document) -> String {
    let name = |g: GenId| doc.generators[g as usize].name.clone();
    let el = |e: &Element| render_element(e, &name);
    let names = |gs: &[GenId]| gs.iter().map(|&g| name(g)).collect::<Vec<_>>().join(" ");
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };

    line(format!("algebra {}", doc.name));
    line(format!("generators {}", doc.generators.iter().map(|g| g.name.as_str()).collect::<Vec<_>>().join(" ")));
    if !doc.families.is_empty() {
        line(format!("antisymmetric {}", doc.families.join(" ")));
    }
    for (g, e) in &doc.star {
        line(format!("star {} = {}", name(*g), el(e)));
    }
    for r in &doc.relations {
        line(format!("relation [{}, {}] = {}", name(r.left), name(r.right), el(&r.rhs)));
    }
    if let Some(inv) = &doc.invariant {
        line(format!("invariant {}", names(inv)));
    }
    if let Some(xs) = &doc.translations {
        line(format!("translations {}", names(xs)));
    }
    for (g, e) in &doc.tau {
        line(format!("tau {} = {}", name(*g), el(e)));
    }
    for (g, e) in &doc.lorentz {
        line(format!("lorentz {} = {}", name(*g), el(e)));
    }
    if let Some(g) = &doc.data.gamma {
        line(format!("gamma = {}", el(g)));
    }
    for (g, e) in &doc.data.lambda {
        line(format!("lambda {} = {}", name(*g), el(e)));
    }
    for ((a, b), e) in &doc.data.cinv {
        line(format!("cinv [{}, {}] = {}", name(*a), name(*b), el(e)));
    }
    for (g, e) in &doc.data.mixed {
        line(format!("mixed {} = {}", name(*g), el(e)));
    }
    for (n, e) in &doc.central {
        line(format!("central {n} = {}", el(e)));
    }
    for (n, e) in &doc.casimirs {
        line(format!("casimir {n} = {}", el(e)));
    }
    for e in &doc.center_candidates {
        line(format!("center-candidate {}", el(e)));
    }
    for e in &doc.center_probes {
        line(format!("center-probe {}", el(e)));
    }
    for (f, g, h) in &doc.expected_brackets {
        line(format!("expect bracket [{}, {}] = {}", el(f), el(g), el(h)));
    }
    if let Some(c) = &doc.contraction {
        line(format!("contraction span {}", names(&c.span)));
        line(format!("contraction abelian {}", names(&c.abelian_at_zero)));
    }
    out
}
