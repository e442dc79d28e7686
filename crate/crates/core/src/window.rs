//! Window definitions, the exponential reconstruction and uniform sampling.

use crate::catalog::CatalogWindow;
use crate::error::{Result, WindowError};
use crate::kernels::{KernelMax, KernelSpec};

/// Exponents past this underflow `exp` in double precision.
const UNDERFLOW_EXPONENT: f64 = 745.0;

/// Smallest and largest arguments strictly inside `(0, 1)` used when a
/// one-sided limit at the record edge is wanted.
pub(crate) const LEFT_EDGE: f64 = f64::MIN_POSITIVE;
pub(crate) const RIGHT_EDGE: f64 = 1.0 - f64::EPSILON / 2.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WindowDef {
    Catalog(CatalogWindow),
    /// `exp(1/B_max - 1/B(t))` on `(0, 1)`, zero elsewhere.
    ExpKernel(KernelSpec),
}

impl From<CatalogWindow> for WindowDef {
    fn from(w: CatalogWindow) -> Self {
        WindowDef::Catalog(w)
    }
}

impl From<KernelSpec> for WindowDef {
    fn from(k: KernelSpec) -> Self {
        WindowDef::ExpKernel(k)
    }
}

impl WindowDef {
    pub fn validate(&self) -> Result<()> {
        match self {
            WindowDef::Catalog(w) => w.validate(),
            WindowDef::ExpKernel(k) => k.validate(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        match self {
            WindowDef::Catalog(w) => w.is_symmetric(),
            WindowDef::ExpKernel(k) => k.is_symmetric(),
        }
    }

    /// Where an asymmetric window peaks; `None` for mirror-symmetric ones.
    pub fn peak_location(&self) -> Result<Option<f64>> {
        if self.is_symmetric() {
            return Ok(None);
        }
        match self {
            WindowDef::ExpKernel(k) => Ok(Some(k.maximum()?.t_star)),
            WindowDef::Catalog(_) => Ok(None),
        }
    }

    /// Resolves kernel maxima once so the window can be evaluated cheaply.
    pub fn evaluator(&self) -> Result<WindowFn> {
        self.validate()?;
        Ok(match *self {
            WindowDef::Catalog(w) => WindowFn::Catalog(w),
            WindowDef::ExpKernel(k) => WindowFn::Exp(ExpWindow::new(k)?),
        })
    }

    /// Convenience one-off evaluation. Prefer [`WindowDef::evaluator`] in loops.
    pub fn eval(&self, t: f64) -> Result<f64> {
        self.evaluator()?.eval(t)
    }
}

/// A validated window ready for repeated evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WindowFn {
    Catalog(CatalogWindow),
    Exp(ExpWindow),
}

impl WindowFn {
    pub fn eval(&self, t: f64) -> Result<f64> {
        match self {
            WindowFn::Catalog(w) => Ok(w.eval_unchecked(t)),
            WindowFn::Exp(e) => e.eval(t),
        }
    }

    /// Value at `t`, with the record edges replaced by their one-sided
    /// limits from inside the interval.
    pub fn eval_inside(&self, t: f64) -> Result<f64> {
        let t = if t <= 0.0 {
            LEFT_EDGE
        } else if t >= 1.0 {
            RIGHT_EDGE
        } else {
            t
        };
        self.eval(t)
    }
}

/// The exponential reconstruction of a kernel, normalized to peak 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpWindow {
    kernel: KernelSpec,
    max: KernelMax,
}

impl ExpWindow {
    pub fn new(kernel: KernelSpec) -> Result<Self> {
        let max = kernel.maximum()?;
        Ok(ExpWindow { kernel, max })
    }

    pub fn kernel(&self) -> &KernelSpec {
        &self.kernel
    }

    /// Location of the window peak.
    pub fn t_star(&self) -> f64 {
        self.max.t_star
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        if !(t > 0.0 && t < 1.0) {
            return Ok(0.0);
        }
        let b = self.kernel.eval(t)?;
        if b == 0.0 {
            return Ok(0.0);
        }
        let exponent = 1.0 / b - 1.0 / self.max.b_max;
        if exponent > UNDERFLOW_EXPONENT {
            Ok(0.0)
        } else {
            Ok((-exponent).exp())
        }
    }
}

/// `exp(1/B_max - 1/B(t))` for `t ∈ (0, 1)`, zero elsewhere.
pub fn exp_window_eval(kernel: &KernelSpec, t: f64) -> Result<f64> {
    ExpWindow::new(*kernel)?.eval(t)
}

/// Samples of a window over the one-second record, `values[k] = W(k/N)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledWindow {
    values: Vec<f64>,
    /// `W(1)`, the sample that closes the record. Zero for every window
    /// that vanishes at the right edge.
    end_value: f64,
}

impl SampledWindow {
    pub fn from_parts(values: Vec<f64>, end_value: f64) -> Self {
        SampledWindow { values, end_value }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn end_value(&self) -> f64 {
        self.end_value
    }

    pub fn n_samples(&self) -> usize {
        self.values.len()
    }

    /// Sample spacing in seconds.
    pub fn dt(&self) -> f64 {
        1.0 / self.values.len() as f64
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        let n = self.values.len() as f64;
        (0..self.values.len()).map(move |k| k as f64 / n)
    }
}

/// Uniform samples `W(k/n)`, `k = 0..n`.
pub fn sample(def: &WindowDef, n_samples: usize) -> Result<SampledWindow> {
    if n_samples == 0 {
        return Err(WindowError::BadParameter {
            name: "n_samples",
            value: 0.0,
            reason: "need at least one sample",
        });
    }
    let w = def.evaluator()?;
    let n = n_samples as f64;
    let values = (0..n_samples)
        .map(|k| w.eval(k as f64 / n))
        .collect::<Result<Vec<_>>>()?;
    Ok(SampledWindow {
        values,
        end_value: w.eval(1.0)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(m: f64, n: f64) -> KernelSpec {
        KernelSpec::Polynomial { m, n }
    }

    #[test]
    fn exp_window_examples() {
        assert_eq!(exp_window_eval(&poly(1.0, 1.0), 0.5).unwrap(), 1.0);
        let expected = (4.0f64 - 16.0 / 3.0).exp();
        let got = exp_window_eval(&poly(1.0, 1.0), 0.25).unwrap();
        assert!((got - expected).abs() < 1e-15);
        assert!((got - 0.263_597_138).abs() < 1e-8);
        assert_eq!(exp_window_eval(&poly(1.0, 1.0), 0.0).unwrap(), 0.0);
        assert_eq!(exp_window_eval(&poly(1.0, 1.0), 1.0).unwrap(), 0.0);
        assert_eq!(exp_window_eval(&poly(2.0, 1.0), 2.0 / 3.0).unwrap(), 1.0);
    }

    #[test]
    fn asymmetric_normalization_constant() {
        // 1/B at the critical point is ((m+n)/m)^m ((m+n)/n)^n
        let (m, n) = (2.0f64, 1.0f64);
        let w = ExpWindow::new(poly(m, n)).unwrap();
        let t: f64 = 0.3;
        let direct = (((m + n) / m).powf(m) * ((m + n) / n).powf(n)
            - 1.0 / (t.powf(m) * (1.0f64 - t).powf(n)))
        .exp();
        assert!((w.eval(t).unwrap() - direct).abs() < 1e-13);
    }

    #[test]
    fn underflow_clamps_to_zero() {
        let w = ExpWindow::new(poly(2.0, 2.0)).unwrap();
        // 1/B(1e-3) ~ 1e6, far past the clamp
        assert_eq!(w.eval(1e-3).unwrap(), 0.0);
        assert_eq!(w.eval(1e-300).unwrap(), 0.0);
    }

    #[test]
    fn sample_examples() {
        let rect = sample(&CatalogWindow::Rectangular.into(), 4).unwrap();
        assert_eq!(rect.values(), &[1.0; 4]);
        assert_eq!(rect.end_value(), 1.0);
        assert_eq!(rect.dt(), 0.25);

        let sine = sample(&CatalogWindow::Sine.into(), 4).unwrap();
        let expect = [0.0, 0.5f64.sqrt(), 1.0, 0.5f64.sqrt()];
        for (a, b) in sine.values().iter().zip(expect) {
            assert!((a - b).abs() < 1e-15);
        }
        assert_eq!(sine.end_value(), 0.0);

        let exp = sample(&poly(1.0, 1.0).into(), 2).unwrap();
        assert_eq!(exp.values(), &[0.0, 1.0]);
        assert!(sample(&CatalogWindow::Hann.into(), 0).is_err());
    }

    #[test]
    fn sampled_values_bounded() {
        let defs: Vec<WindowDef> = vec![
            poly(0.1, 0.1).into(),
            poly(2.0, 0.5).into(),
            KernelSpec::ScaledSine { c: 0.5 }.into(),
            KernelSpec::WrappedWindow(CatalogWindow::Tukey { alpha: 0.5 }).into(),
            CatalogWindow::from_id("planck_taper").unwrap().into(),
        ];
        for d in defs {
            let s = sample(&d, 1024).unwrap();
            assert!(s
                .values()
                .iter()
                .all(|v| v.is_finite() && (0.0..=1.0).contains(v)));
        }
    }

    #[test]
    fn peak_is_one() {
        for k in [
            poly(0.5, 0.5),
            poly(1.0, 3.0),
            KernelSpec::ScaledSine { c: 2.0 },
            KernelSpec::WrappedWindow(CatalogWindow::from_id("kaiser").unwrap()),
        ] {
            let w = ExpWindow::new(k).unwrap();
            assert!((w.eval(w.t_star()).unwrap() - 1.0).abs() < 1e-12, "{k:?}");
            let peak = (1..10_000)
                .map(|i| w.eval(i as f64 / 10_000.0).unwrap())
                .fold(0.0, f64::max);
            assert!(peak <= 1.0 && peak > 1.0 - 1e-6, "{k:?}: {peak}");
        }
    }

    #[test]
    fn symmetric_windows_mirror() {
        let defs: Vec<WindowDef> = vec![
            poly(0.6, 0.6).into(),
            poly(1.5, 1.5).into(),
            KernelSpec::ScaledSine { c: 0.5 }.into(),
            KernelSpec::WrappedWindow(CatalogWindow::Hann).into(),
            CatalogWindow::Hamming.into(),
        ];
        for d in defs {
            let w = d.evaluator().unwrap();
            for i in 0..=1000 {
                let t = i as f64 / 1000.0;
                let diff = (w.eval(t).unwrap() - w.eval(1.0 - t).unwrap()).abs();
                assert!(diff < 1e-12, "{d:?} at {t}: {diff}");
            }
        }
    }

    #[test]
    fn endpoint_decay_with_derivatives() {
        let h = 1e-4;
        for n in [0.75, 1.0, 1.5, 2.0] {
            let w = ExpWindow::new(poly(n, n)).unwrap();
            let f = |t: f64| w.eval(t).unwrap();
            for t in [1e-3, 1.0 - 1e-3] {
                let d1 = (f(t + h) - f(t - h)) / (2.0 * h);
                let d2 = (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h);
                let d3 = (f(t + 2.0 * h) - 2.0 * f(t + h) + 2.0 * f(t - h) - f(t - 2.0 * h))
                    / (2.0 * h.powi(3));
                let d4 = (f(t + 2.0 * h) - 4.0 * f(t + h) + 6.0 * f(t) - 4.0 * f(t - h)
                    + f(t - 2.0 * h))
                    / h.powi(4);
                for (order, d) in [f(t), d1, d2, d3, d4].into_iter().enumerate() {
                    assert!(d.abs() < 1e-8, "n={n} t={t} order {order}: {d}");
                }
            }
        }
    }

    #[test]
    fn shape_gap_to_sine_window() {
        // brute-force maximum of |W_{0.6} - sin(pi t)| over 1001 points,
        // frozen from an independent high-precision evaluation
        let w = ExpWindow::new(poly(0.6, 0.6)).unwrap();
        let gap = (0..=1000)
            .map(|i| {
                let t = i as f64 / 1000.0;
                (w.eval(t).unwrap() - (std::f64::consts::PI * t).sin()).abs()
            })
            .fold(0.0, f64::max);
        assert!((gap - 0.167_115).abs() < 1e-5, "{gap}");
    }

    proptest! {
        #[test]
        fn coefficient_becomes_exponent(c in 0.2f64..5.0, t in 0.001f64..0.999) {
            let unit = exp_window_eval(&KernelSpec::ScaledSine { c: 1.0 }, t).unwrap();
            let scaled = exp_window_eval(&KernelSpec::ScaledSine { c }, t).unwrap();
            prop_assert!((scaled - unit.powf(1.0 / c)).abs() < 1e-12);
        }

        #[test]
        fn asymmetric_peak_location(m in 0.2f64..3.0, n in 0.2f64..3.0) {
            let w = ExpWindow::new(poly(m, n)).unwrap();
            prop_assert_eq!(w.t_star(), m / (m + n));
            prop_assert_eq!(w.eval(m / (m + n)).unwrap(), 1.0);
            for i in 1..1000 {
                prop_assert!(w.eval(i as f64 / 1000.0).unwrap() <= 1.0);
            }
        }
    }
}
