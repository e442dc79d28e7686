//! Modified Bessel function of the first kind, order zero.

/// `I0(x)` by its power series `sum_k ((x/2)^k / k!)^2`.
///
/// Terms are added until the next one drops below `1e-16` of the running
/// sum. All terms are positive so there is no cancellation; the series
/// converges for every finite `x`, it just needs more terms for large `|x|`.
pub fn bessel_i0(x: f64) -> f64 {
    let half = 0.5 * x;
    let q = half * half;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        term *= q / (k * k);
        sum += term;
        if term < 1e-16 * sum {
            return sum;
        }
        k += 1.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        // Abramowitz & Stegun table 9.8
        assert_eq!(bessel_i0(0.0), 1.0);
        assert!((bessel_i0(1.0) - 1.266_065_877_752_008_4).abs() < 1e-15);
        assert!((bessel_i0(8.0) / 427.564_115_721_804_74 - 1.0).abs() < 1e-14);
    }

    #[test]
    fn even_function() {
        for &x in &[0.3, 2.5, 7.9, 15.0] {
            assert_eq!(bessel_i0(x), bessel_i0(-x));
        }
    }
}
