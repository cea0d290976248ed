//! Browser bindings: draw a Cayley ball, compare two marked groups, check
//! small cancellation of a pasted presentation. Every function returns a
//! JSON string or throws a string error.

use marked_groups::families::marked_group;
use marked_groups::marked::{ball, similarity_radius};
use marked_groups::presentation::{check_small_cancellation, parse_presentation};
use marked_groups::rational;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Vertex cap for the browser; balls this big are unreadable anyway.
pub const BROWSER_CAP: usize = 20_000;

fn err(e: impl std::fmt::Display) -> JsValue {
    JsValue::from_str(&e.to_string())
}

/// Ball export (`radius`, `vertices`, `reps`, `transitions`) plus the
/// generator names, for drawing.
pub fn ball_document(spec: &str, radius: usize) -> Result<String, String> {
    let m = marked_group(spec).map_err(|e| e.to_string())?;
    let g = ball(&m, radius, BROWSER_CAP).map_err(|e| e.to_string())?;
    let export = g.export(&m);
    let doc = json!({
        "radius": export.radius,
        "vertices": export.vertices,
        "reps": export.reps,
        "transitions": export.transitions,
        "generators": m.alphabet().names(),
        "depth": g.depth,
    });
    Ok(doc.to_string())
}

pub fn similarity_document(a: &str, b: &str, max_radius: usize) -> Result<String, String> {
    let ga = marked_group(a).map_err(|e| e.to_string())?;
    let gb = marked_group(b).map_err(|e| e.to_string())?;
    let s = similarity_radius(&ga, &gb, max_radius, BROWSER_CAP).map_err(|e| e.to_string())?;
    Ok(json!({
        "radius": s.radius,
        "capped": s.capped,
        "arity_mismatch": s.arity_mismatch,
        "distance": s.distance().to_string(),
    })
    .to_string())
}

pub fn small_cancellation_document(text: &str, lambda: &str) -> Result<String, String> {
    let lam = rational::parse(lambda).ok_or_else(|| format!("`{lambda}` is not a rational p/q"))?;
    let parsed = parse_presentation(text).map_err(|e| e.to_string())?;
    let p = &parsed.presentation;
    let rep = check_small_cancellation(p, lam);
    let witness = rep.witness_pair.as_ref().map(|(r, s)| [p.alphabet().format_word(r), p.alphabet().format_word(s)]);
    Ok(json!({
        "passed": rep.passed,
        "lambda": rational::format(&rep.lambda),
        "max_ratio": rep.max_ratio_text(),
        "max_piece_len": rep.max_piece_len,
        "witness_pair": witness,
        "symmetrized_size": rep.symmetrized_size,
        "warnings": parsed.warnings,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn ball_json(spec: &str, radius: usize) -> Result<String, JsValue> {
    ball_document(spec, radius).map_err(err)
}

#[wasm_bindgen]
pub fn similarity_json(a: &str, b: &str, max_radius: usize) -> Result<String, JsValue> {
    similarity_document(a, b, max_radius).map_err(err)
}

#[wasm_bindgen]
pub fn check_sc_json(text: &str, lambda: &str) -> Result<String, JsValue> {
    small_cancellation_document(text, lambda).map_err(err)
}
