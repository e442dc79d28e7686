//! The six figures of merit used to compare windows.
//!
//! Frequencies are reported in Hz (`ω/2π`), the half width in units of
//! 0.1 s, the leakage in percent and the sidelobe height in dB.

use serde::Serialize;

use crate::error::{Result, WindowError};
use crate::quadrature::simpson_samples;
use crate::spectrum::{
    segment_window, spectrum_fft, FourierQuadrature, LobeSegmentation, DEFAULT_PAD,
    DEFAULT_SAMPLES, QUADRATURE_PANELS,
};
use crate::window::{sample, WindowDef};

pub const DEFAULT_F_MAX: f64 = 500.0;
pub const DEFAULT_THRESHOLD_DB: f64 = -60.0;
/// Largest frequency step of the main-lobe energy integral.
pub const LEAKAGE_DF: f64 = 0.005;

const HALF_POWER: f64 = std::f64::consts::FRAC_1_SQRT_2;
const HALF_WIDTH_SCAN: usize = 10_000;
const BISECTION_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MetricsReport {
    /// First spectral null, Hz.
    pub omega0_hz: f64,
    /// Share of energy outside the main lobe, percent.
    pub leakage_pct: f64,
    /// First sidelobe height relative to the main lobe, dB (negative).
    pub sidelobe_db: f64,
    /// Distance between the first and second null, Hz.
    pub sidelobe_width_hz: f64,
    /// First sidelobe peak that falls under the threshold, Hz.
    pub decay_scale_hz: f64,
    /// Length of `{t : W(t) ≥ √2/2}` in units of 0.1 s.
    pub half_width_0p1s: f64,
}

/// Numerical settings of [`full_report_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisConfig {
    pub n_samples: usize,
    pub pad_factor: usize,
    pub f_max: f64,
    pub threshold_db: f64,
    pub leakage_df: f64,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            n_samples: DEFAULT_SAMPLES,
            pad_factor: DEFAULT_PAD,
            f_max: DEFAULT_F_MAX,
            threshold_db: DEFAULT_THRESHOLD_DB,
            leakage_df: LEAKAGE_DF,
        }
    }
}

/// Half main-lobe width: the first null.
pub fn main_lobe_width(seg: &LobeSegmentation) -> Result<f64> {
    seg.main_lobe_edge()
        .ok_or(WindowError::NoNullsFound { f_max: f64::NAN })
}

/// `100·(1 - I0)` with the default frequency step.
pub fn energy_leakage(def: &WindowDef, omega0: f64) -> Result<f64> {
    energy_leakage_with_step(def, omega0, LEAKAGE_DF)
}

/// `100·(1 - I0)` where `I0 = ∫_{-Ω0}^{Ω0} |Ŵ|^2 dω / (2π ∫_0^1 W^2 dt)`.
///
/// In Hz the `2π` cancels: `I0 = 2 ∫_0^{f0} |Ŵ(f)|^2 df / ∫_0^1 W^2 dt`.
/// Both integrals use composite Simpson; the frequency one samples the
/// quadrature transform at a spacing no coarser than `max_df`.
pub fn energy_leakage_with_step(def: &WindowDef, omega0: f64, max_df: f64) -> Result<f64> {
    if !(omega0 > 0.0) || !(max_df > 0.0) {
        return Err(WindowError::BadParameter {
            name: "omega0",
            value: omega0,
            reason: "main-lobe edge and step must be positive",
        });
    }
    let q = FourierQuadrature::new(def, QUADRATURE_PANELS)?;
    let intervals = {
        let k = (omega0 / max_df).ceil() as usize;
        (k.max(2) + 1) & !1
    };
    let step = omega0 / intervals as f64;
    let freqs: Vec<f64> = (0..=intervals).map(|j| j as f64 * step).collect();
    let power: Vec<f64> = q.amplitudes(&freqs).iter().map(|a| a.norm_sqr()).collect();
    let main_lobe = 2.0 * simpson_samples(&power, step);
    Ok(100.0 * (1.0 - main_lobe / q.time_energy()))
}

/// Height and width of the first sidelobe.
pub fn first_sidelobe(seg: &LobeSegmentation) -> Result<(f64, f64)> {
    if seg.nulls.len() < 2 || seg.peaks.is_empty() {
        return Err(WindowError::InsufficientLobes {
            nulls: seg.nulls.len(),
        });
    }
    Ok((seg.peaks[0].height_db, seg.nulls[1] - seg.nulls[0]))
}

/// Frequency of the first sidelobe peak whose height is below `threshold_db`.
///
/// For the usual monotone sidelobe envelope this is the loudest sidelobe
/// that already sits under the threshold. Windows with beating sidelobes
/// (Tukey, Planck-taper) may rise above it again further out; the first
/// crossing is still the one reported.
pub fn decay_scale(seg: &LobeSegmentation, threshold_db: f64, f_max: f64) -> Result<f64> {
    seg.peaks
        .iter()
        .find(|p| p.height_db < threshold_db && p.frequency <= f_max)
        .map(|p| p.frequency)
        .ok_or(WindowError::NotConverged {
            threshold_db,
            f_max,
        })
}

/// Measure of `{t ∈ (0,1) : W(t) ≥ √2/2}` in units of 0.1 s.
///
/// The set is taken to be one interval around the window peak; both ends
/// are found by bisection.
pub fn half_width_numeric(def: &WindowDef) -> Result<f64> {
    let w = def.evaluator()?;
    let f = |t: f64| w.eval(t);

    let mut peak_t = 0.5;
    let mut peak = f(peak_t)?;
    for i in 0..=HALF_WIDTH_SCAN {
        let t = i as f64 / HALF_WIDTH_SCAN as f64;
        let v = f(t)?;
        if v > peak {
            peak = v;
            peak_t = t;
        }
    }
    if peak < HALF_POWER {
        return Ok(0.0);
    }

    let crossing = |outside: f64| -> Result<f64> {
        if f(outside)? >= HALF_POWER {
            return Ok(outside);
        }
        let (mut lo, mut hi) = (outside, peak_t);
        while (hi - lo).abs() > BISECTION_TOL {
            let mid = 0.5 * (lo + hi);
            if f(mid)? >= HALF_POWER {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    };
    let left = crossing(0.0)?;
    let right = crossing(1.0)?;
    Ok(10.0 * (right - left))
}

/// Closed-form half width of the symmetric polynomial window with exponent
/// `n`, in units of 0.1 s.
pub fn half_width_analytic(n: f64) -> f64 {
    let inner = (1.0 / (4f64.powf(n) + 2f64.sqrt().ln())).powf(1.0 / n);
    10.0 * (1.0 - 4.0 * inner).sqrt()
}

/// Runs every metric with the default settings.
pub fn full_report(def: &WindowDef) -> Result<MetricsReport> {
    full_report_with(def, &AnalysisConfig::default())
}

pub fn full_report_with(def: &WindowDef, cfg: &AnalysisConfig) -> Result<MetricsReport> {
    report_inner(def, cfg).map_err(|e| WindowError::Report {
        window: crate::spec::format_spec(def),
        source: Box::new(e),
    })
}

fn report_inner(def: &WindowDef, cfg: &AnalysisConfig) -> Result<MetricsReport> {
    let sampled = sample(def, cfg.n_samples)?;
    let spectrum = spectrum_fft(&sampled, cfg.pad_factor, cfg.f_max)?;
    let seg = segment_window(def, &spectrum, cfg.f_max)?;
    let omega0_hz = main_lobe_width(&seg)?;
    let (sidelobe_db, sidelobe_width_hz) = first_sidelobe(&seg)?;
    Ok(MetricsReport {
        omega0_hz,
        leakage_pct: energy_leakage_with_step(def, omega0_hz, cfg.leakage_df)?,
        sidelobe_db,
        sidelobe_width_hz,
        decay_scale_hz: decay_scale(&seg, cfg.threshold_db, cfg.f_max)?,
        half_width_0p1s: half_width_numeric(def)?,
    })
}
