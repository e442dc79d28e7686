//! WebAssembly bindings for the demo page in `www/`.
//!
//! The plain functions do the work and are what the native tests call; the
//! `#[wasm_bindgen]` wrappers only convert errors into JS exceptions.

use wasm_bindgen::prelude::*;

use expwin::metrics::full_report;
use expwin::spectrum::spectrum_fft;
use expwin::{format_spec, parse_spec, sample};

/// Samples per unit record for the interactive spectrum. Smaller than the
/// library default so redraws stay quick in the browser.
pub const DEMO_SAMPLES: usize = 1024;
pub const DEMO_PAD: usize = 32;

/// `n + 1` window values on `t = k/n`, `k = 0..=n`.
pub fn window_curve(spec: &str, n: usize) -> Result<Vec<f64>, String> {
    let def = parse_spec(spec).map_err(|e| e.to_string())?;
    let n = n.max(1);
    let w = sample(&def, n).map_err(|e| e.to_string())?;
    let mut values = w.values().to_vec();
    values.push(w.end_value());
    Ok(values)
}

/// Interleaved `[f0, db0, f1, db1, ...]` from 0 to `f_max` Hz.
pub fn spectrum_db(spec: &str, f_max: f64) -> Result<Vec<f64>, String> {
    let def = parse_spec(spec).map_err(|e| e.to_string())?;
    let w = sample(&def, DEMO_SAMPLES).map_err(|e| e.to_string())?;
    let s = spectrum_fft(&w, DEMO_PAD, f_max).map_err(|e| e.to_string())?;
    Ok((0..s.len())
        .flat_map(|j| [s.frequency(j), s.db()[j].max(-300.0)])
        .collect())
}

/// Metrics as a JSON object, or `{"error": ...}`.
pub fn metrics_text(spec: &str) -> String {
    let result = parse_spec(spec).and_then(|def| {
        full_report(&def).map(|r| {
            let mut v = serde_json::to_value(r).expect("report serializes");
            v["window"] = format_spec(&def).into();
            v
        })
    });
    match result {
        Ok(v) => v.to_string(),
        Err(e) => serde_json::json!({ "error": e.to_string() }).to_string(),
    }
}

#[wasm_bindgen(js_name = windowCurve)]
pub fn window_curve_js(spec: &str, n: usize) -> Result<Vec<f64>, JsError> {
    window_curve(spec, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = spectrumDb)]
pub fn spectrum_db_js(spec: &str, f_max: f64) -> Result<Vec<f64>, JsError> {
    spectrum_db(spec, f_max).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = metrics)]
pub fn metrics_js(spec: &str) -> String {
    metrics_text(spec)
}
