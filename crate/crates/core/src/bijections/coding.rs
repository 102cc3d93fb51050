//! The coding maps `𝖯ᵒ` and `𝖯ˢ` on `𝖴`-components.
//!
//! A `𝖴`-component is a maximal run of consecutive parts that are positive
//! multiples of `𝖴` whose values step down by `0` or `𝖴`. A group is a run
//! of equal values inside a component. For families without codings both
//! maps are the identity.

use crate::affine_params::AlgebraConfig;
use crate::colored_parts::ColoredPart;
use crate::error::{Error, Result};
use crate::partition_sets::{in_ao1, in_ao2};

/// Half-open index ranges of the `𝖴`-components of a sequence.
pub fn components(cfg: &AlgebraConfig, seq: &[ColoredPart]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < seq.len() {
        if cfg.is_u_multiple(seq[i].value) {
            let mut j = i + 1;
            while j < seq.len()
                && cfg.is_u_multiple(seq[j].value)
                && seq[j - 1]
                    .value
                    .checked_sub(seq[j].value)
                    .is_some_and(|d| d == 0 || d == cfg.u)
            {
                j += 1;
            }
            out.push((i, j));
            i = j;
        } else {
            i += 1;
        }
    }
    out
}

/// Half-open index ranges of runs of equal values inside `seq[lo..hi]`.
pub fn groups(seq: &[ColoredPart], lo: usize, hi: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for k in lo..hi {
        match out.last_mut() {
            Some(g) if seq[g.0].value == seq[k].value => g.1 = k + 1,
            _ => out.push((k, k + 1)),
        }
    }
    out
}

/// `𝖯ᵒ`: in each component an unbarred top group stays unbarred; every
/// other group becomes one barred entry followed by unbarred copies.
pub fn p_o(cfg: &AlgebraConfig, parts: &[ColoredPart]) -> Vec<ColoredPart> {
    let mut out = parts.to_vec();
    if !cfg.is_coded() {
        return out;
    }
    for (i, j) in components(cfg, parts) {
        for (gi, &(a, b)) in groups(parts, i, j).iter().enumerate() {
            let keep_plain = gi == 0 && !parts[a].barred;
            for (k, slot) in out.iter_mut().enumerate().take(b).skip(a) {
                *slot = slot.with_bar(!keep_plain && k == a);
            }
        }
    }
    out
}

/// Inverse of [`p_o`]; `None` if the sequence is not a `𝖯ᵒ` image shape.
pub fn p_o_inv(cfg: &AlgebraConfig, seq: &[ColoredPart]) -> Option<Vec<ColoredPart>> {
    let mut out = seq.to_vec();
    if !cfg.is_coded() {
        return Some(out);
    }
    for (i, j) in components(cfg, seq) {
        let mut bar = false;
        for (gi, &(a, b)) in groups(seq, i, j).iter().enumerate() {
            if seq[a + 1..b].iter().any(|p| p.barred) {
                return None;
            }
            if gi == 0 {
                bar = seq[a].barred;
            } else {
                if !seq[a].barred {
                    return None;
                }
                bar = !bar;
            }
            for slot in &mut out[a..b] {
                *slot = slot.with_bar(bar);
            }
        }
    }
    Some(out)
}

/// `𝖯ˢ`: in each component the bottom group is barred and bars alternate
/// upward group by group.
pub fn p_s(cfg: &AlgebraConfig, parts: &[ColoredPart]) -> Vec<ColoredPart> {
    let mut out = parts.to_vec();
    if !cfg.is_coded() {
        return out;
    }
    for (i, j) in components(cfg, parts) {
        let gs = groups(parts, i, j);
        let k = gs.len();
        for (gi, &(a, b)) in gs.iter().enumerate() {
            let bar = (k - 1 - gi).is_multiple_of(2);
            for slot in &mut out[a..b] {
                *slot = slot.with_bar(bar);
            }
        }
    }
    out
}

/// Inverse of [`p_s`]: every multiple of `𝖴` becomes barred.
pub fn p_s_inv(cfg: &AlgebraConfig, seq: &[ColoredPart]) -> Vec<ColoredPart> {
    if !cfg.is_coded() {
        return seq.to_vec();
    }
    seq.iter()
        .map(|&p| {
            if cfg.is_u_multiple(p.value) {
                p.with_bar(true)
            } else {
                p
            }
        })
        .collect()
}

/// Re-bars the multiples of `𝖴` into `𝖯ˢ` canonical form.
pub fn canon(cfg: &AlgebraConfig, seq: &[ColoredPart]) -> Vec<ColoredPart> {
    p_s(cfg, &p_s_inv(cfg, seq))
}

fn is_sorted_desc(seq: &[ColoredPart]) -> bool {
    seq.windows(2).all(|w| w[0] >= w[1]) && seq.iter().all(|p| !p.is_zero())
}

/// Membership in `𝒜𝒪₁ₒ = 𝖯ᵒ(𝒜𝒪₁)`.
pub fn in_ao1o(cfg: &AlgebraConfig, seq: &[ColoredPart]) -> bool {
    match p_o_inv(cfg, seq) {
        Some(l) => is_sorted_desc(&l) && in_ao1(&l, cfg) && p_o(cfg, &l) == seq,
        None => false,
    }
}

/// Membership in `𝒜𝒪₂ₛ = 𝖯ˢ(𝒜𝒪₂)`.
pub fn in_ao2s(cfg: &AlgebraConfig, seq: &[ColoredPart]) -> bool {
    let l = p_s_inv(cfg, seq);
    is_sorted_desc(&l) && in_ao2(&l, cfg) && p_s(cfg, &l) == seq
}

/// `𝖯ᵒ` on a member of `𝒜𝒪₁`.
///
/// # Errors
///
/// [`Error::Domain`] if the input is not in `𝒜𝒪₁`.
pub fn code_ao1(cfg: &AlgebraConfig, parts: &[ColoredPart]) -> Result<Vec<ColoredPart>> {
    if !in_ao1(parts, cfg) {
        return Err(Error::Domain("input is not in AO1".into()));
    }
    Ok(p_o(cfg, parts))
}

/// `𝖯ᵒ⁻¹` on a member of `𝒜𝒪₁ₒ`.
///
/// # Errors
///
/// [`Error::Domain`] if some component matches none of the coded shapes.
pub fn decode_ao1o(cfg: &AlgebraConfig, seq: &[ColoredPart]) -> Result<Vec<ColoredPart>> {
    if !in_ao1o(cfg, seq) {
        return Err(Error::Domain("input is not a coded AO1 sequence".into()));
    }
    Ok(p_o_inv(cfg, seq).expect("checked by in_ao1o"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine_params::{make_config, Family, Weight};
    use crate::partitions::parse_parts;

    #[test]
    fn p_o_worked_examples() {
        let c = make_config(Family::A2Odd, 4, Weight::L0).unwrap();
        let y1 = parse_parts("33,31,28~,28~,21,21,15,9,7,1").unwrap();
        assert_eq!(
            p_o(&c, &y1),
            parse_parts("33,31,28~,28,21~,21,15,9,7,1").unwrap()
        );
        let y1b = parse_parts("33,31,28,28,21~,21~,15,9,7,1").unwrap();
        assert_eq!(
            p_o(&c, &y1b),
            parse_parts("33,31,28,28,21~,21,15,9,7,1").unwrap()
        );
        assert_eq!(p_o_inv(&c, &p_o(&c, &y1)).unwrap(), y1);
        assert!(in_ao1o(&c, &p_o(&c, &y1)));
    }

    #[test]
    fn identity_without_u_multiples() {
        let c = make_config(Family::A2Odd, 4, Weight::L0).unwrap();
        let y = parse_parts("13,9,5,1").unwrap();
        assert_eq!(p_o(&c, &y), y);
        assert_eq!(p_s(&c, &y), y);
    }

    #[test]
    fn p_s_alternates_from_bottom() {
        let c = make_config(Family::A2Odd, 4, Weight::L0).unwrap();
        let y = parse_parts("26,24,21~,14~,8,2,1").unwrap();
        assert_eq!(p_s(&c, &y), parse_parts("26,24,21,14~,8,2,1").unwrap());
        assert_eq!(p_s_inv(&c, &p_s(&c, &y)), y);
        assert!(in_ao2s(&c, &p_s(&c, &y)));
    }

    #[test]
    fn malformed_shape_is_rejected() {
        let c = make_config(Family::A2Odd, 4, Weight::L0).unwrap();
        let bad = parse_parts("28,28~").unwrap();
        assert!(p_o_inv(&c, &bad).is_none());
        assert!(decode_ao1o(&c, &bad).is_err());
    }
}
