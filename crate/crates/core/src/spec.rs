//! Text form of window definitions.
//!
//! ```text
//! <catalog-spec> := <id>[:key=val[,key=val...]]        e.g. kaiser:alpha=2.546
//! <window-spec>  := <catalog-spec>
//!                 | exp:poly:m=<r>,n=<r>
//!                 | exp:sine:c=<r>
//!                 | exp:win:<catalog-spec>
//! ```
//!
//! Omitted catalog parameters take their defaults. For `exp:poly` a single
//! given exponent is used for both; `exp:sine` defaults to `c=1`.

use std::fmt;
use std::str::FromStr;

use crate::catalog::CatalogWindow;
use crate::error::{Result, WindowError};
use crate::kernels::KernelSpec;
use crate::window::WindowDef;

fn parse_err(token: &str, reason: impl Into<String>) -> WindowError {
    WindowError::Parse {
        token: token.to_string(),
        reason: reason.into(),
    }
}

fn parse_pairs(text: &str) -> Result<Vec<(&str, f64)>> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|pair| {
            let (key, value) = pair
                .split_once('=')
                .ok_or_else(|| parse_err(pair, "expected key=value"))?;
            let key = key.trim();
            let value = value.trim();
            let v: f64 = value
                .parse()
                .map_err(|_| parse_err(value, format!("`{key}` needs a number")))?;
            Ok((key, v))
        })
        .collect()
}

fn parse_catalog(text: &str) -> Result<CatalogWindow> {
    let (id, params) = text.split_once(':').unwrap_or((text, ""));
    let id = id.trim();
    let mut window =
        CatalogWindow::from_id(id).ok_or_else(|| parse_err(id, "unknown window id"))?;
    for (key, value) in parse_pairs(params)? {
        window = window
            .with_param(key, value)
            .ok_or_else(|| parse_err(key, format!("`{id}` has no parameter `{key}`")))?;
    }
    window
        .validate()
        .map_err(|e| parse_err(params, e.to_string()))?;
    Ok(window)
}

fn parse_kernel(text: &str) -> Result<KernelSpec> {
    let (kind, rest) = text.split_once(':').unwrap_or((text, ""));
    let kernel = match kind {
        "poly" => {
            let (mut m, mut n) = (None, None);
            for (key, value) in parse_pairs(rest)? {
                match key {
                    "m" => m = Some(value),
                    "n" => n = Some(value),
                    _ => return Err(parse_err(key, "`exp:poly` takes m and n")),
                }
            }
            match (m, n) {
                (Some(m), Some(n)) => KernelSpec::Polynomial { m, n },
                (Some(e), None) | (None, Some(e)) => KernelSpec::Polynomial { m: e, n: e },
                (None, None) => return Err(parse_err(text, "`exp:poly` needs m and/or n")),
            }
        }
        "sine" => {
            let mut c = 1.0;
            for (key, value) in parse_pairs(rest)? {
                if key != "c" {
                    return Err(parse_err(key, "`exp:sine` takes c"));
                }
                c = value;
            }
            KernelSpec::ScaledSine { c }
        }
        "win" => KernelSpec::WrappedWindow(parse_catalog(rest)?),
        other => {
            return Err(parse_err(
                other,
                "unknown kernel, expected poly, sine or win",
            ))
        }
    };
    kernel
        .validate()
        .map_err(|e| parse_err(rest, e.to_string()))?;
    Ok(kernel)
}

/// Parses a window spec string.
pub fn parse_spec(text: &str) -> Result<WindowDef> {
    let text = text.trim();
    match text.split_once(':') {
        Some(("exp", rest)) => Ok(WindowDef::ExpKernel(parse_kernel(rest)?)),
        _ if text == "exp" => Err(parse_err(text, "expected exp:poly, exp:sine or exp:win")),
        _ => Ok(WindowDef::Catalog(parse_catalog(text)?)),
    }
}

/// Canonical spec string; [`parse_spec`] reads it back to the same value.
pub fn format_spec(def: &WindowDef) -> String {
    def.to_string()
}

impl fmt::Display for CatalogWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.param() {
            Some((name, value)) => write!(f, "{}:{name}={value}", self.id()),
            None => f.write_str(self.id()),
        }
    }
}

impl fmt::Display for KernelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelSpec::Polynomial { m, n } => write!(f, "poly:m={m},n={n}"),
            KernelSpec::ScaledSine { c } => write!(f, "sine:c={c}"),
            KernelSpec::WrappedWindow(w) => write!(f, "win:{w}"),
        }
    }
}

impl fmt::Display for WindowDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WindowDef::Catalog(w) => write!(f, "{w}"),
            WindowDef::ExpKernel(k) => write!(f, "exp:{k}"),
        }
    }
}

impl FromStr for WindowDef {
    type Err = WindowError;

    fn from_str(s: &str) -> Result<Self> {
        parse_spec(s)
    }
}
