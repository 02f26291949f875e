use crate::arith::RationalFunction;
use crate::error::{Error, Result};

/// Whether `Σ_i coeffs[i][ℓ] · data[ℓ + i] = 0` for every admissible `ℓ`.
///
/// `coeffs[i]` lists the values of the `i`-th coefficient along the
/// sequence; a single value stands for a constant coefficient. With `r + 1`
/// coefficients the admissible positions are `0 ..= data.len() - r - 1`.
pub fn check_recurrence(data: &[RationalFunction], coeffs: &[Vec<RationalFunction>]) -> Result<bool> {
    if coeffs.is_empty() || data.len() < coeffs.len() {
        return Err(Error::LengthMismatch(format!(
            "{} data points for a recurrence with {} coefficients",
            data.len(),
            coeffs.len()
        )));
    }
    let positions = data.len() + 1 - coeffs.len();
    if let Some(short) = coeffs.iter().find(|c| c.len() != 1 && c.len() < positions) {
        return Err(Error::LengthMismatch(format!(
            "coefficient has {} values, {positions} positions to check",
            short.len()
        )));
    }
    let at = |c: &[RationalFunction], l: usize| if c.len() == 1 { c[0].clone() } else { c[l].clone() };
    Ok((0..positions).all(|l| {
        let sum: RationalFunction = coeffs.iter().enumerate().map(|(i, c)| &at(c, l) * &data[l + i]).sum();
        sum.is_zero()
    }))
}
