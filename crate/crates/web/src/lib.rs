//! wasm-bindgen bindings for the static demo page in `www/`.
//!
//! Each export returns a json string; errors are thrown as js strings.
//! The `*_json` functions hold the logic and are plain Rust so they can be
//! tested natively.

use frobkit::cli::json::{AllJson, GapsJson, RepresentJson, TreeJson};
use frobkit::{
    all_acceptable_expressions, count_acceptable_expressions, expression_tree_bounded,
    gaps_with_budget, represent, Denominations,
};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Enumeration budget for the page; keeps a tab responsive.
pub const PAGE_BUDGET: u64 = 1 << 20;

/// Deepest tree the page will draw.
pub const MAX_TREE_DEPTH: u64 = 400;

fn den(a: i64, b: i64) -> Result<Denominations, String> {
    Denominations::new(a, b).map_err(|e| e.to_string())
}

/// Gap set, Frobenius number and the first `a*b` representability flags.
pub fn gaps_json(a: i64, b: i64) -> Result<String, String> {
    let den = den(a, b)?;
    let report = gaps_with_budget(&den, PAGE_BUDGET).map_err(|e| e.to_string())?;
    serde_json::to_string(&GapsJson::from(&report)).map_err(|e| e.to_string())
}

/// One representation of `d` plus every acceptable expression of it.
pub fn represent_json(a: i64, b: i64, d: i64) -> Result<String, String> {
    let den = den(a, b)?;
    let one = represent(&den, d).map_err(|e| e.to_string())?;
    let count = count_acceptable_expressions(&den, d).map_err(|e| e.to_string())?;
    if count > PAGE_BUDGET {
        return Err(format!("{count} expressions is too many to list"));
    }
    let all = all_acceptable_expressions(&den, d).map_err(|e| e.to_string())?;
    let value = json!({
        "recursive": RepresentJson::new(&den, d, one.as_ref()),
        "all": AllJson::new(&den, &all),
    });
    Ok(value.to_string())
}

/// Levels and edges of the expression tree up to `depth`.
pub fn tree_json(a: i64, b: i64, depth: u64) -> Result<String, String> {
    let den = den(a, b)?;
    let tree = expression_tree_bounded(&den, depth, MAX_TREE_DEPTH).map_err(|e| e.to_string())?;
    serde_json::to_string(&TreeJson::new(&den, &tree)).map_err(|e| e.to_string())
}

fn to_js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn gaps(a: f64, b: f64) -> Result<String, JsValue> {
    to_js(gaps_json(a as i64, b as i64))
}

#[wasm_bindgen(js_name = represent)]
pub fn represent_js(a: f64, b: f64, d: f64) -> Result<String, JsValue> {
    to_js(represent_json(a as i64, b as i64, d as i64))
}

#[wasm_bindgen]
pub fn tree(a: f64, b: f64, depth: f64) -> Result<String, JsValue> {
    to_js(tree_json(a as i64, b as i64, depth.max(0.0) as u64))
}
