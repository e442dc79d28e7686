//! Classical window functions on the unit record `t ∈ [0, 1]`.

use std::f64::consts::PI;

use crate::bessel::bessel_i0;
use crate::error::{Result, WindowError};

/// Default parameters of the parameterized catalog entries.
pub const DEFAULT_SIGMA: f64 = 0.5;
pub const DEFAULT_GAMMA: f64 = 0.5;
pub const DEFAULT_TAU: f64 = 0.5;
pub const DEFAULT_KAISER_ALPHA: f64 = 8.0 / PI;
pub const DEFAULT_TUKEY_ALPHA: f64 = 0.5;
pub const DEFAULT_PLANCK_EPSILON: f64 = 0.25;
pub const DEFAULT_AVCI_ALPHA: f64 = 3.0;

/// A named classical window with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CatalogWindow {
    Rectangular,
    /// Bartlett window `1 - 2|t - 1/2|`.
    Triangular,
    Welch,
    Sine,
    Hann,
    Hamming,
    Gaussian {
        sigma: f64,
    },
    CauchyLorentz {
        gamma: f64,
    },
    Poisson {
        tau: f64,
    },
    /// `I0(πα·sqrt(1 - (2t-1)^2)) / I0(πα)`.
    Kaiser {
        alpha: f64,
    },
    Tukey {
        alpha: f64,
    },
    PlanckTaper {
        epsilon: f64,
    },
    /// `exp(α·sqrt(1 - 4(t-1/2)^2)) / exp(α)`; never reaches zero.
    AvciExp {
        alpha: f64,
    },
}

impl CatalogWindow {
    /// Every catalog id, in listing order.
    pub const IDS: [&'static str; 13] = [
        "rectangular",
        "triangular",
        "welch",
        "sine",
        "hann",
        "hamming",
        "gaussian",
        "cauchy_lorentz",
        "poisson",
        "kaiser",
        "tukey",
        "planck_taper",
        "avci_exp",
    ];

    /// The catalog entry for `id` with default parameters.
    pub fn from_id(id: &str) -> Option<Self> {
        use CatalogWindow::*;
        Some(match id {
            "rectangular" => Rectangular,
            "triangular" => Triangular,
            "welch" => Welch,
            "sine" => Sine,
            "hann" => Hann,
            "hamming" => Hamming,
            "gaussian" => Gaussian {
                sigma: DEFAULT_SIGMA,
            },
            "cauchy_lorentz" => CauchyLorentz {
                gamma: DEFAULT_GAMMA,
            },
            "poisson" => Poisson { tau: DEFAULT_TAU },
            "kaiser" => Kaiser {
                alpha: DEFAULT_KAISER_ALPHA,
            },
            "tukey" => Tukey {
                alpha: DEFAULT_TUKEY_ALPHA,
            },
            "planck_taper" => PlanckTaper {
                epsilon: DEFAULT_PLANCK_EPSILON,
            },
            "avci_exp" => AvciExp {
                alpha: DEFAULT_AVCI_ALPHA,
            },
            _ => return None,
        })
    }

    pub fn id(&self) -> &'static str {
        use CatalogWindow::*;
        match self {
            Rectangular => "rectangular",
            Triangular => "triangular",
            Welch => "welch",
            Sine => "sine",
            Hann => "hann",
            Hamming => "hamming",
            Gaussian { .. } => "gaussian",
            CauchyLorentz { .. } => "cauchy_lorentz",
            Poisson { .. } => "poisson",
            Kaiser { .. } => "kaiser",
            Tukey { .. } => "tukey",
            PlanckTaper { .. } => "planck_taper",
            AvciExp { .. } => "avci_exp",
        }
    }

    /// The single named parameter of this entry, if any.
    pub fn param(&self) -> Option<(&'static str, f64)> {
        use CatalogWindow::*;
        match *self {
            Gaussian { sigma } => Some(("sigma", sigma)),
            CauchyLorentz { gamma } => Some(("gamma", gamma)),
            Poisson { tau } => Some(("tau", tau)),
            Kaiser { alpha } | Tukey { alpha } | AvciExp { alpha } => Some(("alpha", alpha)),
            PlanckTaper { epsilon } => Some(("epsilon", epsilon)),
            _ => None,
        }
    }

    /// Same window with its parameter replaced. `None` if the entry has no
    /// parameter called `name`.
    pub fn with_param(&self, name: &str, value: f64) -> Option<Self> {
        let (own, _) = self.param()?;
        if own != name {
            return None;
        }
        use CatalogWindow::*;
        Some(match *self {
            Gaussian { .. } => Gaussian { sigma: value },
            CauchyLorentz { .. } => CauchyLorentz { gamma: value },
            Poisson { .. } => Poisson { tau: value },
            Kaiser { .. } => Kaiser { alpha: value },
            Tukey { .. } => Tukey { alpha: value },
            PlanckTaper { .. } => PlanckTaper { epsilon: value },
            AvciExp { .. } => AvciExp { alpha: value },
            other => other,
        })
    }

    pub fn validate(&self) -> Result<()> {
        let Some((name, value)) = self.param() else {
            return Ok(());
        };
        let bad = |reason| {
            Err(WindowError::BadParameter {
                name,
                value,
                reason,
            })
        };
        if !value.is_finite() {
            return bad("must be finite");
        }
        match self {
            CatalogWindow::Tukey { .. } if !(value > 0.0 && value < 1.0) => {
                bad("must lie in (0, 1)")
            }
            CatalogWindow::PlanckTaper { .. } if !(value > 0.0 && value < 0.5) => {
                bad("must lie in (0, 0.5)")
            }
            _ if value <= 0.0 => bad("must be positive"),
            _ => Ok(()),
        }
    }

    /// Windows that keep their formula value on the closed interval `[0, 1]`.
    ///
    /// The starred entries (welch, hamming, gaussian, cauchy_lorentz,
    /// poisson, avci_exp) do not decay to zero at the record edges; the
    /// rectangular window is closed as well so its samples are all ones.
    pub fn is_closed(&self) -> bool {
        use CatalogWindow::*;
        matches!(
            self,
            Rectangular
                | Welch
                | Hamming
                | Gaussian { .. }
                | CauchyLorentz { .. }
                | Poisson { .. }
                | AvciExp { .. }
        )
    }

    /// Every catalog window is mirror-symmetric about `t = 1/2`.
    pub fn is_symmetric(&self) -> bool {
        true
    }

    /// The window formula extended continuously to `[0, 1]`.
    ///
    /// Values at the endpoints are the one-sided limits. No support masking
    /// is applied; see [`CatalogWindow::eval`] for that.
    pub fn formula(&self, t: f64) -> f64 {
        use CatalogWindow::*;
        let t = t.clamp(0.0, 1.0);
        let x = t - 0.5;
        match *self {
            Rectangular => 1.0,
            Triangular => 1.0 - 2.0 * x.abs(),
            Welch => 4.0 * t * (1.0 - t),
            Sine => (PI * t).sin(),
            Hann => 0.5 - 0.5 * (2.0 * PI * t).cos(),
            Hamming => 0.54 - 0.46 * (2.0 * PI * t).cos(),
            Gaussian { sigma } => (-0.5 * (x / sigma).powi(2)).exp(),
            CauchyLorentz { gamma } => gamma * gamma / (x * x + gamma * gamma),
            Poisson { tau } => (-x.abs() / tau).exp(),
            Kaiser { alpha } => {
                let r = (1.0 - (2.0 * t - 1.0).powi(2)).max(0.0).sqrt();
                bessel_i0(PI * alpha * r) / bessel_i0(PI * alpha)
            }
            Tukey { alpha } => {
                let edge = t.min(1.0 - t);
                if edge < alpha / 2.0 {
                    0.5 * (1.0 - (2.0 * PI * edge / alpha).cos())
                } else {
                    1.0
                }
            }
            PlanckTaper { epsilon } => {
                let edge = t.min(1.0 - t);
                if edge <= 0.0 {
                    0.0
                } else if edge < epsilon {
                    // exp overflows to +inf close to the edge, giving 0
                    1.0 / (1.0 + (epsilon / edge + epsilon / (edge - epsilon)).exp())
                } else {
                    1.0
                }
            }
            AvciExp { alpha } => {
                let r = (1.0 - 4.0 * x * x).max(0.0).sqrt();
                (alpha * (r - 1.0)).exp()
            }
        }
    }

    /// Window value at `t`; zero outside the support.
    pub fn eval(&self, t: f64) -> Result<f64> {
        self.validate()?;
        Ok(self.eval_unchecked(t))
    }

    pub(crate) fn eval_unchecked(&self, t: f64) -> f64 {
        let inside = if self.is_closed() {
            (0.0..=1.0).contains(&t)
        } else {
            t > 0.0 && t < 1.0
        };
        if inside {
            self.formula(t)
        } else {
            0.0
        }
    }

    /// Human-readable formula, for listings.
    pub fn formula_text(&self) -> &'static str {
        use CatalogWindow::*;
        match self {
            Rectangular => "1",
            Triangular => "1 - 2|t - 1/2|",
            Welch => "4t(1 - t)",
            Sine => "sin(pi t)",
            Hann => "0.5 - 0.5 cos(2 pi t)",
            Hamming => "0.54 - 0.46 cos(2 pi t)",
            Gaussian { .. } => "exp(-((t - 1/2)/sigma)^2 / 2)",
            CauchyLorentz { .. } => "gamma^2 / ((t - 1/2)^2 + gamma^2)",
            Poisson { .. } => "exp(-|t - 1/2| / tau)",
            Kaiser { .. } => "I0(pi alpha sqrt(1 - (2t - 1)^2)) / I0(pi alpha)",
            Tukey { .. } => "cosine taper over alpha/2 at each edge, 1 in between",
            PlanckTaper { .. } => "1 / (1 + exp(eps/t + eps/(t - eps))) edges, 1 in between",
            AvciExp { .. } => "exp(alpha sqrt(1 - 4(t - 1/2)^2)) / exp(alpha)",
        }
    }
}
