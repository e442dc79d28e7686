use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use expwin::spectrum::{DEFAULT_PAD, DEFAULT_SAMPLES};
use expwin::{parse_spec, WindowDef};
use expwin_cli::{
    list, metrics_json, sample_csv, spectrum_csv, table, Method, Rendered, TableFormat,
};

#[derive(Parser)]
#[command(
    name = "expwin",
    version,
    about = "Window functions, spectra and window metrics"
)]
struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List windows, kernels and comparison rows.
    List,
    /// Sample a window on t = k/n as CSV `t,w`.
    Sample {
        spec: String,
        #[arg(long = "n", default_value_t = 1024)]
        n: usize,
    },
    /// Magnitude spectrum as CSV `f_hz,abs,db`.
    Spectrum {
        spec: String,
        #[arg(long, default_value_t = 50.0)]
        fmax: f64,
        #[arg(long, value_enum, default_value_t = Method::Fft)]
        method: Method,
        /// Frequency grid step is 1/pad Hz.
        #[arg(long, default_value_t = DEFAULT_PAD)]
        pad: usize,
        /// Samples on [0, 1) for the fft method.
        #[arg(long = "n", default_value_t = DEFAULT_SAMPLES)]
        n: usize,
    },
    /// The six window metrics as one JSON object.
    Metrics { spec: String },
    /// Metrics of every comparison row.
    Table {
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
}

fn parse(spec: &str) -> Result<WindowDef, String> {
    parse_spec(spec).map_err(|e| e.to_string())
}

fn run(command: Command) -> Result<Rendered, String> {
    let done = |text: String| Rendered { text, ok: true };
    match command {
        Command::List => Ok(done(list())),
        Command::Sample { spec, n } => sample_csv(&parse(&spec)?, n)
            .map(done)
            .map_err(|e| e.to_string()),
        Command::Spectrum {
            spec,
            fmax,
            method,
            pad,
            n,
        } => spectrum_csv(&parse(&spec)?, method, fmax, pad, n)
            .map(done)
            .map_err(|e| e.to_string()),
        Command::Metrics { spec } => Ok(metrics_json(&parse(&spec)?)),
        Command::Table { format } => Ok(table(format)),
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let rendered = match run(cli.command) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(cli.out.as_ref(), &rendered.text) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if rendered.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
