use statrs::distribution::{ContinuousCDF, Normal};

/// Kolmogorov–Smirnov distance between the empirical distribution of
/// `draws` and `N(mean, std²)`.
pub fn ks_distance_normal(draws: &[f64], mean: f64, std: f64) -> f64 {
    if draws.is_empty() || std.is_nan() || std <= 0.0 {
        return f64::NAN;
    }
    let normal = Normal::new(mean, std).expect("std > 0");
    let mut sorted = draws.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    let n = sorted.len() as f64;
    sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = normal.cdf(x);
            (((i + 1) as f64 / n) - f).max(f - i as f64 / n)
        })
        .fold(0.0, f64::max)
}

/// Asymptotic one-sample KS critical value `sqrt(-ln(α/2)/2) / sqrt(n)`.
pub fn ks_critical_value(n: usize, alpha: f64) -> f64 {
    (-(alpha / 2.0).ln() / 2.0).sqrt() / (n as f64).sqrt()
}

/// Empirical percentile of the draws next to the matching Gaussian quantile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PercentilePair {
    pub level: f64,
    pub empirical: f64,
    pub gaussian: f64,
}

/// Percentiles at `levels` (fractions in (0, 1)) of the draws, with linear
/// interpolation between order statistics, against `N(mean, std²)`.
pub fn gaussian_percentiles(draws: &[f64], mean: f64, std: f64, levels: &[f64]) -> Vec<PercentilePair> {
    let mut sorted = draws.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    let normal = (std > 0.0).then(|| Normal::new(mean, std).expect("std > 0"));
    levels
        .iter()
        .map(|&level| {
            let empirical = if sorted.is_empty() {
                f64::NAN
            } else {
                let h = level * (sorted.len() - 1) as f64;
                let lo = h.floor() as usize;
                let hi = (lo + 1).min(sorted.len() - 1);
                sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
            };
            let gaussian = normal.as_ref().map_or(mean, |n| n.inverse_cdf(level));
            PercentilePair {
                level,
                empirical,
                gaussian,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn critical_value_at_one_percent() {
        assert!((ks_critical_value(1000, 0.01) - 1.6276 / 1000f64.sqrt()).abs() < 1e-4);
    }

    #[test]
    fn gaussian_quantile_grid_is_close() {
        // exact normal quantiles at (i - 0.5)/n have KS distance 0.5/n
        let normal = Normal::new(0.0, 1.0).unwrap();
        let n = 400;
        let draws: Vec<f64> = (1..=n).map(|i| normal.inverse_cdf((i as f64 - 0.5) / n as f64)).collect();
        let d = ks_distance_normal(&draws, 0.0, 1.0);
        assert!((d - 0.5 / n as f64).abs() < 1e-9, "d={d}");
    }

    #[test]
    fn uniform_is_far_from_normal() {
        let draws: Vec<f64> = (0..1000).map(|i| i as f64 / 1000.0).collect();
        let d = ks_distance_normal(&draws, 10.0, 0.1);
        assert!(d > 0.99);
    }

    #[test]
    fn percentiles_interpolate() {
        let p = gaussian_percentiles(&[0.0, 1.0, 2.0, 3.0, 4.0], 2.0, 1.0, &[0.5, 0.25]);
        assert_eq!(p[0].empirical, 2.0);
        assert!((p[0].gaussian - 2.0).abs() < 1e-12);
        assert_eq!(p[1].empirical, 1.0);
    }
}
