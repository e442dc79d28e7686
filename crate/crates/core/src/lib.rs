//! Window functions built from an exponential kernel construction, a
//! catalog of classical windows, and the spectral measurements used to
//! compare them.
//!
//! ```
//! use expwin::{metrics, parse_spec};
//!
//! let hann = parse_spec("hann").unwrap();
//! let width = metrics::half_width_numeric(&hann).unwrap();
//! assert!((width - 3.64).abs() < 0.01);
//! ```

pub mod bessel;
pub mod catalog;
pub mod error;
pub mod kernels;
pub mod metrics;
pub mod quadrature;
pub mod spec;
pub mod spectrum;
pub mod table;
pub mod window;

pub use catalog::CatalogWindow;
pub use error::{Result, WindowError};
pub use kernels::{KernelMax, KernelSpec};
pub use metrics::{full_report, AnalysisConfig, MetricsReport};
pub use spec::{format_spec, parse_spec};
pub use spectrum::{Complex64, LobeSegmentation, Peak, Spectrum};
pub use window::{exp_window_eval, sample, ExpWindow, SampledWindow, WindowDef, WindowFn};
