//! Left and right insertion of repeated parts.

use crate::affine_params::AlgebraConfig;
use crate::colored_parts::ColoredPart;
use crate::error::{Error, Result};
use crate::partition_sets::in_z;

/// Left insertion `(e)^j ↪ Y`.
///
/// The `j` copies go right after the last part `yᵢ ⪰ ē`; they are barred
/// exactly when `yᵢ = ē`.
///
/// # Errors
///
/// [`Error::Domain`] if the result leaves `𝒵(Λ)`.
pub fn left_insert(
    cfg: &AlgebraConfig,
    e: u32,
    j: usize,
    y: &[ColoredPart],
) -> Result<Vec<ColoredPart>> {
    if j == 0 || e == 0 {
        return Ok(y.to_vec());
    }
    let e_bar = ColoredPart::bar(e);
    let pos = y.iter().take_while(|&&p| p >= e_bar).count();
    let barred = pos > 0 && y[pos - 1] == e_bar;
    let mut out = Vec::with_capacity(y.len() + j);
    out.extend_from_slice(&y[..pos]);
    out.extend(std::iter::repeat_n(ColoredPart::new(e, barred), j));
    out.extend_from_slice(&y[pos..]);
    if !in_z(&out, cfg) {
        return Err(Error::Domain(format!("left insertion of {e}^{j} leaves Z")));
    }
    Ok(out)
}

/// Right insertion `λ ↩ (k𝖴)^j` of `j` unbarred copies of `value = k𝖴`,
/// placed after the last part `λᵢ ⪰ (k𝖴)̄`.
pub fn right_insert(value: u32, j: usize, lambda: &[ColoredPart]) -> Vec<ColoredPart> {
    if j == 0 || value == 0 {
        return lambda.to_vec();
    }
    let marker = ColoredPart::bar(value);
    let pos = lambda.iter().take_while(|&&p| p >= marker).count();
    let mut out = Vec::with_capacity(lambda.len() + j);
    out.extend_from_slice(&lambda[..pos]);
    out.extend(std::iter::repeat_n(ColoredPart::plain(value), j));
    out.extend_from_slice(&lambda[pos..]);
    out
}
