//! Commands behind the `expwin` binary. Each one renders its complete output
//! as a string so the binary only has to decide where it goes.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use expwin::catalog::CatalogWindow;
use expwin::metrics::{full_report, MetricsReport};
use expwin::spectrum::{spectrum_fft, spectrum_quadrature, Spectrum};
use expwin::table::{comparison_rows, ComparisonRow, RowGroup};
use expwin::{format_spec, sample, KernelSpec, Result, WindowDef};

pub mod number;

use number::sig12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Fft,
    Quad,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Csv,
    Markdown,
}

/// Output of a command that can partly fail, e.g. a table with a bad row.
#[derive(Debug, Clone, PartialEq)]
pub struct Rendered {
    pub text: String,
    pub ok: bool,
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for row in rows {
        w.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing memory")).expect("csv is utf-8")
}

/// Every window the tool knows: the comparison rows first, then the
/// parameterised families they are drawn from.
pub fn list() -> String {
    let rows = comparison_rows();
    let mut out = String::new();
    out.push_str("# comparison rows\n");
    for r in &rows {
        let formula = match &r.window {
            WindowDef::Catalog(w) => w.formula_text().to_string(),
            WindowDef::ExpKernel(k) => format!("exp(1/B(t*) - 1/B(t)), B = {}", kernel_formula(k)),
        };
        let _ = writeln!(
            out,
            "{:<15} {:<28} {:<36} {}",
            r.group.name(),
            r.label,
            format_spec(&r.window),
            formula
        );
    }

    out.push_str("\n# windows\n");
    for id in CatalogWindow::IDS {
        let w = CatalogWindow::from_id(id).expect("listed ids parse");
        let params = match w.param() {
            Some((name, value)) => format!("{name}={}", sig12(value)),
            None => "-".to_string(),
        };
        let member = if rows.iter().any(|r| same_family(r, w)) {
            "table"
        } else {
            "-"
        };
        let _ = writeln!(
            out,
            "{:<15} {:<24} {:<6} {}",
            id,
            params,
            member,
            w.formula_text()
        );
    }

    out.push_str("\n# exponential kernels\n");
    let kernels = [
        ("exp:poly", "m, n", "B = t^m (1-t)^n, peak at t* = m/(m+n)"),
        ("exp:sine", "c=1", "B = c sin(pi t)"),
        ("exp:win", "<window>", "B = any window above"),
    ];
    for (form, params, text) in kernels {
        let member = if rows
            .iter()
            .any(|r| format_spec(&r.window).starts_with(form))
        {
            "table"
        } else {
            "-"
        };
        let _ = writeln!(out, "{:<15} {:<24} {:<6} {}", form, params, member, text);
    }
    out
}

fn same_family(row: &ComparisonRow, w: CatalogWindow) -> bool {
    matches!(row.window, WindowDef::Catalog(c) if c.id() == w.id())
}

fn kernel_formula(k: &KernelSpec) -> String {
    match k {
        KernelSpec::Polynomial { m, n } => format!("t^{m} (1-t)^{n}"),
        KernelSpec::ScaledSine { c } => format!("{c} sin(pi t)"),
        KernelSpec::WrappedWindow(w) => w.formula_text().to_string(),
    }
}

/// `t,w` samples on `t = k/n`.
pub fn sample_csv(def: &WindowDef, n: usize) -> Result<String> {
    let s = sample(def, n)?;
    let rows = s
        .times()
        .zip(s.values())
        .map(|(t, &w)| vec![sig12(t), sig12(w)]);
    Ok(csv_text(&["t", "w"], rows))
}

/// Spectrum on `0..=f_max` with grid step `1/pad`.
pub fn spectrum(
    def: &WindowDef,
    method: Method,
    f_max: f64,
    pad: usize,
    n: usize,
) -> Result<Spectrum> {
    match method {
        Method::Fft => spectrum_fft(&sample(def, n)?, pad, f_max),
        Method::Quad => spectrum_quadrature(def, 1.0 / pad as f64, f_max),
    }
}

/// `f_hz,abs,db` rows of [`spectrum`].
pub fn spectrum_csv(
    def: &WindowDef,
    method: Method,
    f_max: f64,
    pad: usize,
    n: usize,
) -> Result<String> {
    let s = spectrum(def, method, f_max, pad, n)?;
    let rows = (0..s.len()).map(|j| {
        vec![
            sig12(s.frequency(j)),
            sig12(s.amplitudes()[j].norm()),
            sig12(s.db()[j]),
        ]
    });
    Ok(csv_text(&["f_hz", "abs", "db"], rows))
}

#[derive(Serialize)]
struct MetricsJson<'a> {
    window: String,
    #[serde(flatten)]
    report: &'a MetricsReport,
}

#[derive(Serialize)]
struct ErrorJson {
    window: String,
    error: String,
}

/// One JSON object with the six metrics, or `{"window", "error"}`.
pub fn metrics_json(def: &WindowDef) -> Rendered {
    let window = format_spec(def);
    let (text, ok) = match full_report(def) {
        Ok(report) => (
            serde_json::to_string(&MetricsJson {
                window,
                report: &report,
            }),
            true,
        ),
        Err(e) => (
            serde_json::to_string(&ErrorJson {
                window,
                error: e.to_string(),
            }),
            false,
        ),
    };
    let mut text = text.expect("metrics serialize");
    text.push('\n');
    Rendered { text, ok }
}

/// Metrics of every comparison row, computed in parallel, in row order.
pub fn table_reports() -> Vec<(ComparisonRow, Result<MetricsReport>)> {
    let rows = comparison_rows();
    let reports: Vec<_> = rows.par_iter().map(|r| full_report(&r.window)).collect();
    rows.into_iter().zip(reports).collect()
}

pub fn table(format: TableFormat) -> Rendered {
    let results = table_reports();
    let ok = results.iter().all(|(_, r)| r.is_ok());
    let text = match format {
        TableFormat::Csv => table_csv(&results),
        TableFormat::Markdown => table_markdown(&results),
    };
    Rendered { text, ok }
}

const TABLE_HEADER: [&str; 10] = [
    "group",
    "window",
    "spec",
    "omega0_hz",
    "leakage_pct",
    "sidelobe_neg_db",
    "sidelobe_width_hz",
    "decay_scale_hz",
    "half_width_0p1s",
    "error",
];

fn metric_columns(r: &MetricsReport) -> [f64; 6] {
    [
        r.omega0_hz,
        r.leakage_pct,
        -r.sidelobe_db,
        r.sidelobe_width_hz,
        r.decay_scale_hz,
        r.half_width_0p1s,
    ]
}

fn table_csv(results: &[(ComparisonRow, Result<MetricsReport>)]) -> String {
    let rows = results.iter().map(|(row, report)| {
        let mut cells = vec![
            row.group.name().to_string(),
            row.label.clone(),
            format_spec(&row.window),
        ];
        match report {
            Ok(r) => {
                cells.extend(metric_columns(r).iter().map(|&v| sig12(v)));
                cells.push(String::new());
            }
            Err(e) => {
                cells.extend(std::iter::repeat_n(String::new(), 6));
                cells.push(e.to_string());
            }
        }
        cells
    });
    csv_text(&TABLE_HEADER, rows)
}

fn table_markdown(results: &[(ComparisonRow, Result<MetricsReport>)]) -> String {
    let mut out = String::from(
        "| Window | Omega0 (Hz) | Leakage (%) | -Sidelobe (dB) | Omega1 (Hz) | DeltaOmega (Hz) | Half width (0.1 s) |\n\
         |---|---:|---:|---:|---:|---:|---:|\n",
    );
    let mut group = None;
    for (row, report) in results {
        if group != Some(row.group) {
            group = Some(row.group);
            let _ = writeln!(out, "| **{}** | | | | | | |", group_title(row.group));
        }
        match report {
            Ok(r) => {
                let [w0, leak, side, w1, decay, half] = metric_columns(r);
                let _ = writeln!(
                    out,
                    "| {} | {w0:.2} | {leak:.2} | {side:.1} | {w1:.2} | {decay:.1} | {half:.2} |",
                    row.label
                );
            }
            Err(e) => {
                let _ = writeln!(out, "| {} | error: {e} | | | | | |", row.label);
            }
        }
    }
    out
}

fn group_title(g: RowGroup) -> &'static str {
    match g {
        RowGroup::Reconstruction => "Exponential reconstructions",
        RowGroup::Polynomial => "Polynomial kernels, m = n",
        RowGroup::Classical => "Classical windows",
    }
}
