use statrs::function::beta::beta_reg;

use super::StatsError;

/// Upper-tail probability `P(T > t)` of Student's t with `df` degrees of freedom.
///
/// Uses the regularized incomplete beta function in whichever of its two
/// arguments, `df/(df+t²)` or `t²/(df+t²)`, is the smaller, so neither tail
/// nor the centre loses precision to cancellation.
pub fn student_t_sf(t: f64, df: usize) -> Result<f64, StatsError> {
    if df == 0 {
        return Err(StatsError::InvalidDf(df));
    }
    if t.is_nan() {
        return Ok(f64::NAN);
    }
    if t.is_infinite() {
        return Ok(if t > 0.0 { 0.0 } else { 1.0 });
    }
    let nu = df as f64;
    let t2 = t * t;
    // one-sided tail beyond |t|
    let tail = if t2 < nu {
        let y = t2 / (nu + t2);
        0.5 - 0.5 * beta_reg(0.5, nu / 2.0, y)
    } else {
        let x = nu / (nu + t2);
        0.5 * beta_reg(nu / 2.0, 0.5, x)
    };
    Ok(if t >= 0.0 { tail } else { 1.0 - tail })
}
