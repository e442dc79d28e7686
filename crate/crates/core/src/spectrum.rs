//! Fourier spectra of windows and their lobe structure.
//!
//! The transform convention is `Ŵ(f) = ∫_0^1 exp(2πi f t) W(t) dt` with `f`
//! in Hz. Two independent routes compute it:
//!
//! * [`spectrum_fft`]: trapezoid-rule samples zero-padded into one large
//!   FFT, giving every frequency `j·df` at once.
//! * [`FourierQuadrature`]: composite Simpson on `2^15` panels at whatever
//!   frequencies are requested. Slower, used as the reference.

use std::f64::consts::PI;

use rayon::prelude::*;
use rustfft::FftPlanner;

pub use rustfft::num_complex::Complex64;

use crate::error::{Result, WindowError};
use crate::quadrature::{simpson_samples, simpson_weight, CompensatedSum};
use crate::window::{sample, SampledWindow, WindowDef};

pub const DEFAULT_SAMPLES: usize = 8192;
pub const DEFAULT_PAD: usize = 128;
pub const QUADRATURE_PANELS: usize = 1 << 15;
/// Coarsest grid spacing [`segment_lobes`] accepts.
pub const MAX_SEGMENT_DF: f64 = 0.02;

/// How many phasor rotations happen before the phase is recomputed exactly.
const PHASOR_ANCHOR: usize = 64;

/// Complex amplitudes on the grid `f_j = j·df`, `j = 0..len`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    df: f64,
    amplitudes: Vec<Complex64>,
    db: Vec<f64>,
}

impl Spectrum {
    /// Builds a spectrum and its dB levels relative to `|amplitudes[0]|`.
    pub fn new(df: f64, amplitudes: Vec<Complex64>) -> Self {
        let reference = amplitudes.first().map_or(1.0, |a| a.norm());
        let db = amplitudes
            .iter()
            .map(|a| 20.0 * (a.norm().max(f64::MIN_POSITIVE) / reference).log10())
            .collect();
        Spectrum { df, amplitudes, db }
    }

    pub fn df(&self) -> f64 {
        self.df
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn frequency(&self, j: usize) -> f64 {
        j as f64 * self.df
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn db(&self) -> &[f64] {
        &self.db
    }

    pub fn magnitudes(&self) -> impl Iterator<Item = f64> + '_ {
        self.amplitudes.iter().map(|a| a.norm())
    }
}

/// FFT length used for `n` samples padded by `pad_factor`.
pub fn fft_len(n_samples: usize, pad_factor: usize) -> usize {
    (n_samples * pad_factor).next_power_of_two()
}

/// Spectrum of a sampled window by one zero-padded inverse FFT.
///
/// The samples are weighted as a trapezoid rule on `[0, 1]`: half weight on
/// `W(0)` and an extra half-weighted `W(1)` sample, so windows that do not
/// vanish at the edges are integrated to second order. The grid spacing is
/// `n / fft_len(n, pad_factor)` Hz, i.e. `1 / pad_factor` when `n·pad_factor`
/// is already a power of two.
pub fn spectrum_fft(w: &SampledWindow, pad_factor: usize, f_max: f64) -> Result<Spectrum> {
    if pad_factor < 2 {
        return Err(WindowError::BadParameter {
            name: "pad_factor",
            value: pad_factor as f64,
            reason: "must be at least 2",
        });
    }
    let n = w.n_samples();
    let len = fft_len(n, pad_factor);
    let mut buf = vec![Complex64::new(0.0, 0.0); len];
    for (slot, &v) in buf.iter_mut().zip(w.values()) {
        slot.re = v;
    }
    buf[0].re *= 0.5;
    buf[n].re = 0.5 * w.end_value();

    // inverse transform carries the exp(+i...) kernel
    FftPlanner::new().plan_fft_inverse(len).process(&mut buf);

    let df = n as f64 / len as f64;
    let last = frequency_count(df, f_max).min(len / 2 + 1);
    let dt = w.dt();
    buf.truncate(last);
    buf.iter_mut().for_each(|a| *a *= dt);
    Ok(Spectrum::new(df, buf))
}

fn frequency_count(df: f64, f_max: f64) -> usize {
    (f_max.max(0.0) / df + 1e-9).floor() as usize + 1
}

/// Direct evaluation of `∫_0^1 exp(2πi f t) W(t) dt` by composite Simpson.
///
/// Edge samples use the one-sided limits of `W`, so windows with a jump at
/// the record boundary are integrated as the smooth function inside.
#[derive(Debug, Clone)]
pub struct FourierQuadrature {
    values: Vec<f64>,
    h: f64,
}

impl FourierQuadrature {
    pub fn new(def: &WindowDef, panels: usize) -> Result<Self> {
        let panels = (panels.max(2) + 1) & !1;
        let w = def.evaluator()?;
        let h = 1.0 / panels as f64;
        let values = (0..=panels)
            .map(|k| w.eval_inside(k as f64 * h))
            .collect::<Result<Vec<_>>>()?;
        Ok(FourierQuadrature { values, h })
    }

    pub fn panels(&self) -> usize {
        self.values.len() - 1
    }

    pub fn amplitude(&self, f: f64) -> Complex64 {
        let panels = self.panels();
        let omega_h = 2.0 * PI * f * self.h;
        let step = Complex64::from_polar(1.0, omega_h);
        let mut re = CompensatedSum::new();
        let mut im = CompensatedSum::new();
        for start in (0..=panels).step_by(PHASOR_ANCHOR) {
            let mut z = Complex64::from_polar(1.0, omega_h * start as f64);
            for k in start..(start + PHASOR_ANCHOR).min(panels + 1) {
                let wv = simpson_weight(k, panels) * self.values[k];
                re.add(wv * z.re);
                im.add(wv * z.im);
                z *= step;
            }
        }
        Complex64::new(re.value(), im.value()) * (self.h / 3.0)
    }

    /// Amplitudes at each frequency; evaluated in parallel, each one
    /// independently, so the result does not depend on scheduling.
    pub fn amplitudes(&self, freqs: &[f64]) -> Vec<Complex64> {
        freqs.par_iter().map(|&f| self.amplitude(f)).collect()
    }

    /// `∫_0^1 W(t)^2 dt`.
    pub fn time_energy(&self) -> f64 {
        let sq: Vec<f64> = self.values.iter().map(|v| v * v).collect();
        simpson_samples(&sq, self.h)
    }
}

/// Quadrature spectrum on the grid `j·df` up to `f_max`.
pub fn spectrum_quadrature(def: &WindowDef, df: f64, f_max: f64) -> Result<Spectrum> {
    if !(df > 0.0) {
        return Err(WindowError::BadParameter {
            name: "df",
            value: df,
            reason: "grid spacing must be positive",
        });
    }
    let q = FourierQuadrature::new(def, QUADRATURE_PANELS)?;
    let freqs: Vec<f64> = (0..frequency_count(df, f_max))
        .map(|j| j as f64 * df)
        .collect();
    Ok(Spectrum::new(df, q.amplitudes(&freqs)))
}

/// Quadrature amplitudes at arbitrary frequencies.
pub fn fourier_at(def: &WindowDef, freqs: &[f64]) -> Result<Vec<Complex64>> {
    Ok(FourierQuadrature::new(def, QUADRATURE_PANELS)?.amplitudes(freqs))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Peak {
    pub frequency: f64,
    pub height_db: f64,
}

/// Nulls and sidelobe peaks of the positive-frequency half of a spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct LobeSegmentation {
    /// Local minima of `|Ŵ|`, increasing.
    pub nulls: Vec<f64>,
    /// `peaks[i]` is the highest point between `nulls[i]` and `nulls[i + 1]`.
    pub peaks: Vec<Peak>,
}

impl LobeSegmentation {
    /// Edge of the main lobe, i.e. the first null.
    pub fn main_lobe_edge(&self) -> Option<f64> {
        self.nulls.first().copied()
    }
}

/// Vertex of the parabola through three equally spaced points, as an offset
/// from the middle one (clamped to half a bin) and the value there.
fn parabolic_vertex(a: f64, b: f64, c: f64) -> (f64, f64) {
    let curvature = a - 2.0 * b + c;
    if curvature == 0.0 || !curvature.is_finite() {
        return (0.0, b);
    }
    let p = (0.5 * (a - c) / curvature).clamp(-0.5, 0.5);
    (p, b - 0.25 * (a - c) * p)
}

/// Locates nulls and sidelobe peaks below `f_max`.
///
/// A null is any discrete local minimum of `|Ŵ|`, refined by a parabola
/// through `|Ŵ|^2` (smooth through a simple zero, unlike `|Ŵ|`). Windows
/// whose transform never vanishes still get nulls at their minima. Each
/// sidelobe peak is the largest dB sample between two nulls, refined by a
/// parabola through the dB values.
pub fn segment_lobes(s: &Spectrum, f_max: f64) -> Result<LobeSegmentation> {
    check_segment_grid(s)?;
    let power: Vec<f64> = s.amplitudes().iter().map(|a| a.norm_sqr()).collect();
    let last = frequency_count(s.df(), f_max).min(power.len());

    let minima: Vec<usize> = (1..last.saturating_sub(1))
        .filter(|&j| power[j] < power[j - 1] && power[j] <= power[j + 1])
        .collect();
    let nulls: Vec<f64> = minima
        .iter()
        .map(|&j| {
            let (p, _) = parabolic_vertex(power[j - 1], power[j], power[j + 1]);
            (j as f64 + p) * s.df()
        })
        .collect();
    with_peaks(s, f_max, &minima, nulls)
}

/// Segmentation for windows that are not mirror symmetric.
///
/// Their transforms have no zeros and `|Ŵ|` usually falls monotonically, so
/// nulls are taken as the sign changes of `Re(Ŵ(f) exp(-2πi f center))`,
/// the spectrum referred to the window's peak at `center`. For a window
/// symmetric about `center` these are exactly the zeros of `Ŵ`.
pub fn segment_lobes_about(s: &Spectrum, f_max: f64, center: f64) -> Result<LobeSegmentation> {
    check_segment_grid(s)?;
    let real: Vec<f64> = s
        .amplitudes()
        .iter()
        .enumerate()
        .map(|(j, a)| (a * Complex64::from_polar(1.0, -2.0 * PI * s.frequency(j) * center)).re)
        .collect();
    let last = frequency_count(s.df(), f_max).min(real.len());

    // index of the sample just past each crossing
    let mut crossings = Vec::new();
    let mut nulls = Vec::new();
    for j in 1..last.saturating_sub(1) {
        let (a, b) = (real[j - 1], real[j]);
        if a != 0.0 && (b == 0.0 || a.signum() != b.signum()) {
            if crossings.last().is_some_and(|&prev| j < prev + 2) {
                continue;
            }
            crossings.push(j);
            nulls.push((j as f64 - 1.0 + a / (a - b)) * s.df());
        }
    }
    with_peaks(s, f_max, &crossings, nulls)
}

fn check_segment_grid(s: &Spectrum) -> Result<()> {
    if s.df() <= MAX_SEGMENT_DF {
        Ok(())
    } else {
        Err(WindowError::BadParameter {
            name: "df",
            value: s.df(),
            reason: "spectrum grid too coarse for lobe segmentation",
        })
    }
}

fn with_peaks(
    s: &Spectrum,
    f_max: f64,
    marks: &[usize],
    nulls: Vec<f64>,
) -> Result<LobeSegmentation> {
    if marks.is_empty() {
        return Err(WindowError::NoNullsFound { f_max });
    }
    let db = s.db();
    let mut peaks = Vec::with_capacity(marks.len() - 1);
    for (k, pair) in marks.windows(2).enumerate() {
        let (lo, hi) = (pair[0], pair[1]);
        let j = (lo + 1..hi)
            .max_by(|&x, &y| db[x].total_cmp(&db[y]))
            .expect("adjacent marks are at least two bins apart");
        let (p, height_db) = parabolic_vertex(db[j - 1], db[j], db[j + 1]);
        let frequency = (j as f64 + p) * s.df();
        if frequency > nulls[k] && frequency < nulls[k + 1] {
            peaks.push(Peak {
                frequency,
                height_db,
            });
        } else {
            peaks.push(Peak {
                frequency: j as f64 * s.df(),
                height_db: db[j],
            });
        }
    }
    Ok(LobeSegmentation { nulls, peaks })
}

/// [`segment_lobes`] for symmetric windows, [`segment_lobes_about`] the peak
/// location otherwise.
pub fn segment_window(def: &WindowDef, s: &Spectrum, f_max: f64) -> Result<LobeSegmentation> {
    match def.peak_location()? {
        Some(center) => segment_lobes_about(s, f_max, center),
        None => segment_lobes(s, f_max),
    }
}

/// Pointwise product of a signal on the unit record with the window.
pub fn apply_window(signal: &[f64], def: &WindowDef) -> Result<Vec<f64>> {
    if signal.len() < 16 {
        return Err(WindowError::BadParameter {
            name: "signal length",
            value: signal.len() as f64,
            reason: "need at least 16 samples",
        });
    }
    let w = sample(def, signal.len())?;
    Ok(signal.iter().zip(w.values()).map(|(x, w)| x * w).collect())
}

/// `∫_{-F}^{F} |Ŵ|^2 df / ∫_0^1 W^2 dt` from the FFT spectrum up to `F`.
///
/// With frequencies in Hz this is the `ω`-domain ratio
/// `∫|Ŵ|^2 dω / (2π ∫ W^2 dt)`; it tends to 1 as `F` grows.
pub fn parseval_ratio(
    def: &WindowDef,
    n_samples: usize,
    pad_factor: usize,
    f_max: f64,
) -> Result<f64> {
    let s = spectrum_fft(&sample(def, n_samples)?, pad_factor, f_max)?;
    let mut power: Vec<f64> = s.amplitudes().iter().map(|a| a.norm_sqr()).collect();
    if power.len().is_multiple_of(2) {
        power.pop();
    }
    let freq_energy = 2.0 * simpson_samples(&power, s.df());
    let time_energy = FourierQuadrature::new(def, QUADRATURE_PANELS)?.time_energy();
    Ok(freq_energy / time_energy)
}
