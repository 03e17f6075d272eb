//! Browser bindings for a few interactive operations. Each export is a thin
//! wrapper over a plain function returning JSON text, so the logic is testable
//! natively.

use apolar::apolarity::{hilbert_vector_with, is_standard_with};
use apolar::complex::{face_poset, zeta_of};
use apolar::perazzo::{build_perazzo, degree2_census, h2_of, PerazzoSpec};
use apolar::text::{format_polynomial, parse_polynomial_with, VariableNames};
use apolar::{Convention, Limits};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Kept well below the native defaults so a page never hangs.
fn demo_limits() -> Limits {
    Limits {
        max_matrix_dim: 2_000,
        ..Limits::default()
    }
}

fn convention(name: &str) -> Result<Convention, String> {
    match name {
        "dual" => Ok(Convention::Contraction),
        "diff" => Ok(Convention::Differentiation),
        other => Err(format!("unknown convention {other:?}")),
    }
}

pub fn hilbert_json(poly: &str, nvars: usize, conv: &str) -> Result<String, String> {
    let conv = convention(conv)?;
    let f = parse_polynomial_with(poly, &VariableNames::plain(nvars)).map_err(|e| e.to_string())?;
    let h = hilbert_vector_with(&f, conv, &demo_limits()).map_err(|e| e.to_string())?;
    let standard = is_standard_with(&f, conv).map_err(|e| e.to_string())?;
    Ok(json!({"hilbert": h, "standard": standard, "socle_degree": f.degree()}).to_string())
}

pub fn complex_json(poly: &str, nvars: usize) -> Result<String, String> {
    let names = VariableNames::plain(nvars);
    let f = parse_polynomial_with(poly, &names).map_err(|e| e.to_string())?;
    let c = zeta_of(&f).map_err(|e| e.to_string())?;
    serde_json::to_string(&face_poset(&c, &names)).map_err(|e| e.to_string())
}

pub fn perazzo_json(n: usize, d: u32) -> Result<String, String> {
    let spec = PerazzoSpec::full(n, d);
    let f = build_perazzo(&spec).map_err(|e| e.to_string())?;
    let limits = demo_limits();
    let h = hilbert_vector_with(&f, Convention::Contraction, &limits).map_err(|e| e.to_string())?;
    let census = degree2_census(&f, &limits).map_err(|e| e.to_string())?;
    let h2 = h2_of(&f).map_err(|e| e.to_string())?;
    Ok(json!({
        "polynomial": format_polynomial(&f, &spec.names()),
        "hilbert": h,
        "census": census,
        "h2": h2,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn hilbert(poly: &str, nvars: usize, conv: &str) -> Result<String, JsValue> {
    hilbert_json(poly, nvars, conv).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn complex(poly: &str, nvars: usize) -> Result<String, JsValue> {
    complex_json(poly, nvars).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn perazzo(n: usize, d: u32) -> Result<String, JsValue> {
    perazzo_json(n, d).map_err(|e| JsValue::from_str(&e))
}
