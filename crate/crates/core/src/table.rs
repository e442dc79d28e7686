//! The standard comparison set: exponential reconstructions of classical
//! windows, symmetric polynomial kernels, and the classical windows.

use std::f64::consts::PI;

use crate::catalog::CatalogWindow;
use crate::kernels::KernelSpec;
use crate::window::WindowDef;

/// Polynomial exponents of the symmetric-kernel block.
pub const POLY_EXPONENTS: [f64; 6] = [0.1, 0.25, 0.5, 1.0, 1.5, 2.0];
pub const TUKEY_ALPHAS: [f64; 3] = [0.3, 0.5, 0.7];
pub const PLANCK_EPSILONS: [f64; 3] = [0.15, 0.25, 0.35];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowGroup {
    /// `exp(1/B(t*) - 1/B(t))` with a catalog or sine kernel.
    Reconstruction,
    /// `exp(4^n - 1/(t(1-t))^n)`.
    Polynomial,
    Classical,
}

impl RowGroup {
    pub fn name(&self) -> &'static str {
        match self {
            RowGroup::Reconstruction => "reconstruction",
            RowGroup::Polynomial => "polynomial",
            RowGroup::Classical => "classical",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub group: RowGroup,
    pub label: String,
    pub window: WindowDef,
}

fn row(group: RowGroup, label: impl Into<String>, window: impl Into<WindowDef>) -> ComparisonRow {
    ComparisonRow {
        group,
        label: label.into(),
        window: window.into(),
    }
}

/// All 29 rows in presentation order.
pub fn comparison_rows() -> Vec<ComparisonRow> {
    use CatalogWindow as C;
    use RowGroup::*;
    let kaiser = C::Kaiser { alpha: 8.0 / PI };
    let wrap = KernelSpec::WrappedWindow;

    let mut rows = vec![
        row(Reconstruction, "Welch", wrap(C::Welch)),
        row(Reconstruction, "Sine", wrap(C::Sine)),
        row(
            Reconstruction,
            "sin(pi t)/2",
            KernelSpec::ScaledSine { c: 0.5 },
        ),
        row(
            Reconstruction,
            "2 sin(pi t)",
            KernelSpec::ScaledSine { c: 2.0 },
        ),
        row(Reconstruction, "Hann", wrap(C::Hann)),
        row(Reconstruction, "Kaiser(alpha=8/pi)", wrap(kaiser)),
        row(
            Reconstruction,
            "Tukey(alpha=0.5)",
            wrap(C::Tukey { alpha: 0.5 }),
        ),
    ];
    rows.extend(POLY_EXPONENTS.iter().map(|&n| {
        row(
            Polynomial,
            format!("n={n}"),
            KernelSpec::Polynomial { m: n, n },
        )
    }));
    rows.extend([
        row(Classical, "Rectangular", C::Rectangular),
        row(Classical, "Triangular", C::Triangular),
        row(Classical, "Welch*", C::Welch),
        row(Classical, "Sine", C::Sine),
        row(Classical, "Hann", C::Hann),
        row(Classical, "Hamming", C::Hamming),
        row(
            Classical,
            "Gaussian*(sigma=0.5)",
            C::Gaussian { sigma: 0.5 },
        ),
        row(
            Classical,
            "Cauchy-Lorentz*(gamma=0.5)",
            C::CauchyLorentz { gamma: 0.5 },
        ),
        row(Classical, "Poisson*(tau=0.5)", C::Poisson { tau: 0.5 }),
        row(Classical, "Kaiser(alpha=8/pi)", kaiser),
    ]);
    rows.extend(TUKEY_ALPHAS.iter().map(|&alpha| {
        row(
            Classical,
            format!("Tukey(alpha={alpha})"),
            C::Tukey { alpha },
        )
    }));
    rows.extend(PLANCK_EPSILONS.iter().map(|&epsilon| {
        row(
            Classical,
            format!("Planck-taper(epsilon={epsilon})"),
            C::PlanckTaper { epsilon },
        )
    }));
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_counts() {
        let rows = comparison_rows();
        assert_eq!(rows.len(), 29);
        let count = |g| rows.iter().filter(|r| r.group == g).count();
        assert_eq!(count(RowGroup::Reconstruction), 7);
        assert_eq!(count(RowGroup::Polynomial), 6);
        assert_eq!(count(RowGroup::Classical), 16);
        assert!(rows.iter().all(|r| r.window.validate().is_ok()));
    }
}
