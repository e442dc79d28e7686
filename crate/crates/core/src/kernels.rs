//! Kernel functions `B(t)` for the exponential window construction.
//!
//! A kernel is positive on the open unit interval and tends to a
//! non-negative limit at both ends. The reconstructed window is
//! `exp(1/B_max - 1/B(t))`, see [`crate::window::ExpWindow`].

use std::f64::consts::PI;

use crate::catalog::CatalogWindow;
use crate::error::{Result, WindowError};

/// Grid points used to bracket the maximum of kernels without a closed form.
const SCAN_POINTS: usize = 10_000;
/// Bracket width at which golden-section refinement stops.
const REFINE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KernelSpec {
    /// `t^m (1 - t)^n`.
    Polynomial { m: f64, n: f64 },
    /// `c · sin(πt)`.
    ScaledSine { c: f64 },
    /// A catalog window used as the kernel.
    WrappedWindow(CatalogWindow),
}

/// Location and value of a kernel maximum on `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelMax {
    pub t_star: f64,
    pub b_max: f64,
}

impl KernelSpec {
    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(WindowError::InvalidKernel(format!(
                    "{name} must be a positive finite number, got {v}"
                )))
            }
        };
        match *self {
            KernelSpec::Polynomial { m, n } => {
                positive("m", m)?;
                positive("n", n)
            }
            KernelSpec::ScaledSine { c } => positive("c", c),
            KernelSpec::WrappedWindow(w) => w.validate(),
        }
    }

    /// Symmetric about `t = 1/2`.
    pub fn is_symmetric(&self) -> bool {
        match *self {
            KernelSpec::Polynomial { m, n } => m == n,
            KernelSpec::ScaledSine { .. } => true,
            KernelSpec::WrappedWindow(w) => w.is_symmetric(),
        }
    }

    /// `B(t)` for `t ∈ [0, 1]`; the endpoints give the one-sided limits.
    ///
    /// A value that underflows to zero inside the interval is returned as
    /// zero; only negative or NaN values are rejected.
    pub fn eval(&self, t: f64) -> Result<f64> {
        self.validate()?;
        if !(0.0..=1.0).contains(&t) {
            return Err(WindowError::BadParameter {
                name: "t",
                value: t,
                reason: "kernel argument must lie in [0, 1]",
            });
        }
        let b = self.eval_unchecked(t);
        if b.is_nan() || b < 0.0 {
            return Err(WindowError::InvalidKernel(format!("B({t}) = {b}")));
        }
        Ok(b)
    }

    pub(crate) fn eval_unchecked(&self, t: f64) -> f64 {
        match *self {
            KernelSpec::Polynomial { m, n } => pow_limit(t, m) * pow_limit(1.0 - t, n),
            KernelSpec::ScaledSine { c } => {
                if t <= 0.0 || t >= 1.0 {
                    0.0
                } else {
                    c * (PI * t).sin()
                }
            }
            KernelSpec::WrappedWindow(w) => w.formula(t),
        }
    }

    /// Maximum of `B` on `(0, 1)`.
    ///
    /// Polynomials use the critical point `m / (m + n)`. Other kernels are
    /// scanned on a uniform grid and the best bracket is refined by golden
    /// section search.
    pub fn maximum(&self) -> Result<KernelMax> {
        self.validate()?;
        let (t_star, b_max) = match *self {
            KernelSpec::Polynomial { m, n } => {
                let t = m / (m + n);
                (t, self.eval_unchecked(t))
            }
            _ => scan_and_refine(|t| self.eval_unchecked(t)),
        };
        if !(b_max > 0.0) || !b_max.is_finite() {
            return Err(WindowError::InvalidKernel(format!(
                "kernel maximum {b_max} is not positive"
            )));
        }
        Ok(KernelMax { t_star, b_max })
    }
}

/// `x^p` for `x ≥ 0`, with `0^p = 0` for `p > 0`.
fn pow_limit(x: f64, p: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        (p * x.ln()).exp()
    }
}

fn scan_and_refine(f: impl Fn(f64) -> f64) -> (f64, f64) {
    let grid = |i: usize| i as f64 / SCAN_POINTS as f64;
    let mut best = 1;
    let mut best_val = f(grid(1));
    for i in 2..SCAN_POINTS {
        let v = f(grid(i));
        if v > best_val {
            best = i;
            best_val = v;
        }
    }

    // golden-section search on the bracket around the best grid point
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (grid(best - 1), grid(best + 1));
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > REFINE_TOL {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let mid = 0.5 * (a + b);
    let fm = f(mid);
    // never return something worse than the grid point we started from
    if fm >= best_val {
        (mid, fm)
    } else {
        (grid(best), best_val)
    }
}
