use super::{student_t_sf, NullSample};

/// p-values below this are reported as 0.
pub const P_VALUE_FLOOR: f64 = 1e-15;

/// Outcome of the modified one-sided t-test of γ > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TTest {
    /// `γ / s.e.`; infinite when the null has zero spread and γ ≠ 0.
    pub t: f64,
    pub df: usize,
    /// `P(T_df > t)`.
    pub p_value: f64,
    /// The null standard deviation was zero.
    pub degenerate: bool,
    /// The p-value fell below [`P_VALUE_FLOOR`] and was reported as 0.
    pub underflow: bool,
}

/// t = γ / s.e. with s.e. the standard deviation of the null draws and
/// `df = runs − 1`.
pub fn modified_t_test(gamma_observed: f64, null: &NullSample) -> TTest {
    let df = null.df().max(1);
    if null.std == 0.0 {
        let (t, p_value) = if gamma_observed > 0.0 {
            (f64::INFINITY, 0.0)
        } else if gamma_observed < 0.0 {
            (f64::NEG_INFINITY, 1.0)
        } else {
            (0.0, 0.5)
        };
        return TTest {
            t,
            df,
            p_value,
            degenerate: true,
            underflow: false,
        };
    }
    let t = gamma_observed / null.std;
    let raw = student_t_sf(t, df).expect("df >= 1");
    let underflow = raw < P_VALUE_FLOOR;
    TTest {
        t,
        df,
        p_value: if underflow { 0.0 } else { raw },
        degenerate: false,
        underflow,
    }
}
