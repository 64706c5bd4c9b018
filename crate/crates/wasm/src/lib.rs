//! Browser bindings for a small explorer page: products, coproducts and
//! dimension sequences of any algebra the catalog knows.
//!
//! The `*_text` functions are plain Rust and carry the logic; the exported
//! wrappers only adapt them to `wasm-bindgen`.

use cocomp::catalog::{lookup, AlgebraHandle, ALGEBRA_NAMES};
use cocomp::named::DeltaVariant;
use wasm_bindgen::prelude::*;

/// Largest degree the dims panel accepts.
pub const MAX_DIMS_DEGREE: usize = 30;

fn handle(algebra: &str) -> Result<Box<dyn AlgebraHandle>, String> {
    let found = match algebra {
        "deltasym-noswap" => lookup("deltasym", None, Some(DeltaVariant::NoSwap)),
        other => lookup(other, None, None),
    };
    found.map_err(|e| e.to_string())
}

pub fn product_text(algebra: &str, left: &str, right: &str) -> Result<String, String> {
    let h = handle(algebra)?;
    h.product(left, right).map(|r| r.text).map_err(|e| e.to_string())
}

pub fn coproduct_text(algebra: &str, element: &str) -> Result<String, String> {
    let h = handle(algebra)?;
    h.coproduct(element).map(|r| r.text).map_err(|e| e.to_string())
}

/// Comma-separated dimensions for degrees `0..=max`.
pub fn dims_text(algebra: &str, max: usize) -> Result<String, String> {
    if max > MAX_DIMS_DEGREE {
        return Err(format!("degree {max} is above the limit {MAX_DIMS_DEGREE}"));
    }
    let dims = handle(algebra)?.dims(max);
    Ok(dims.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

/// Basis elements of one degree, one per line, for filling the inputs.
pub fn basis_text(algebra: &str, degree: usize) -> Result<String, String> {
    let items = handle(algebra)?.enumerate(degree).map_err(|e| e.to_string())?;
    Ok(items.join("\n"))
}

pub fn algebra_names() -> Vec<&'static str> {
    let mut names = Vec::new();
    for &name in ALGEBRA_NAMES {
        match name {
            "cc" => names.extend(["cc-right", "cc-left"]),
            "deltasym" => names.extend(["deltasym", "deltasym-noswap"]),
            other => names.push(other),
        }
    }
    names
}

#[wasm_bindgen]
pub fn product(algebra: &str, left: &str, right: &str) -> Result<String, JsError> {
    product_text(algebra, left, right).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn coproduct(algebra: &str, element: &str) -> Result<String, JsError> {
    coproduct_text(algebra, element).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn dims(algebra: &str, max: usize) -> Result<String, JsError> {
    dims_text(algebra, max).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn basis(algebra: &str, degree: usize) -> Result<String, JsError> {
    basis_text(algebra, degree).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn algebras() -> String {
    algebra_names().join(",")
}
