//! Composite Simpson quadrature with compensated summation.

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Default, Clone, Copy)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

impl std::iter::Sum<f64> for CompensatedSum {
    fn sum<I: Iterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Simpson weight (without the `h/3` factor) of node `k` out of `panels + 1`.
#[inline]
pub fn simpson_weight(k: usize, panels: usize) -> f64 {
    if k == 0 || k == panels {
        1.0
    } else if k % 2 == 1 {
        4.0
    } else {
        2.0
    }
}

/// Simpson's rule over equally spaced samples `y[0..=panels]` with spacing `h`.
///
/// # Panics
///
/// If the number of intervals is odd or zero.
pub fn simpson_samples(y: &[f64], h: f64) -> f64 {
    let panels = y.len().saturating_sub(1);
    assert!(
        panels >= 2 && panels.is_multiple_of(2),
        "Simpson's rule needs an even number of intervals, got {panels}"
    );
    let acc: CompensatedSum = y
        .iter()
        .enumerate()
        .map(|(k, v)| simpson_weight(k, panels) * v)
        .sum();
    acc.value() * h / 3.0
}

/// `∫_a^b f` by composite Simpson with `panels` intervals (rounded up to even).
pub fn simpson<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, panels: usize) -> f64 {
    let panels = (panels.max(2) + 1) & !1;
    let h = (b - a) / panels as f64;
    let mut acc = CompensatedSum::new();
    for k in 0..=panels {
        acc.add(simpson_weight(k, panels) * f(a + k as f64 * h));
    }
    acc.value() * h / 3.0
}
