//! Algorithm (D′) and the bijection `Θ: 𝒜𝒪₁ → 𝒜𝒪₂`.
//!
//! For every family except `D⁽²⁾`, `Θ(Y)` runs (E) to get `(Y′, λ)`, adds
//! `𝖴·tr(λ)` to the rows of `Y′` and decodes with `𝖯ˢ⁻¹`. The inverse runs
//! (D′) on `𝖯ˢ(X)` to get `(Y′, ν)` and then (F) on `(Y′, tr(ν))`.
//!
//! For `D⁽²⁾` the lift lands in `𝒜𝒪₄^{X_𝖴}`, and the chain of algorithm (D),
//! the odd-to-strict correspondence and left insertion carries it to `𝒜𝒪₂`.

use serde::Serialize;

use crate::affine_params::{AlgebraConfig, Family};
use crate::colored_parts::ColoredPart;
use crate::error::{Error, Result};
use crate::partition_sets::{in_ao1, in_ao2};
use crate::partitions::{transpose, OrdinaryPartition, TwoColoredPartition};

use super::coding::{p_o, p_s, p_s_inv};
use super::modular::{e_uncoded, f_candidates, ModularDiagram, DEFAULT_F_LIMIT};
use super::reductions::{d2_chain, d2_chain_inverse, in_ao4_full};
use super::{descend_to_target, ReductionResult};

/// Every intermediate of one evaluation of `Θ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaTrace {
    /// The input `Y ∈ 𝒜𝒪₁`.
    pub input: TwoColoredPartition,
    /// `𝖯ᵒ(Y)`; a raw sequence since a barred entry may precede unbarred
    /// copies of the same value.
    pub coded: Vec<ColoredPart>,
    /// `Y′` in `𝖯ˢ⁻¹` form.
    pub reduced: TwoColoredPartition,
    /// `Y′` in `𝖯ˢ` canonical form.
    pub canonical: Vec<ColoredPart>,
    /// The partition extracted by (E).
    pub lambda: OrdinaryPartition,
    /// Its transpose.
    pub lambda_tr: OrdinaryPartition,
    /// The modular diagram parameters of `Y`.
    pub diagram: ModularDiagram,
    /// `Y′ + 𝖴·tr(λ)` row by row.
    pub shifted: Vec<ColoredPart>,
    /// `Θ(Y) ∈ 𝒜𝒪₂`.
    pub output: TwoColoredPartition,
}

fn lift(cfg: &AlgebraConfig, base: &[ColoredPart], nu: &[u32]) -> Result<Vec<ColoredPart>> {
    if nu.len() > base.len() {
        return Err(Error::Domain(
            "lift is longer than the reduced partition".into(),
        ));
    }
    base.iter()
        .enumerate()
        .map(|(q, p)| {
            let add = nu.get(q).copied().unwrap_or(0);
            add.checked_mul(cfg.u)
                .and_then(|x| x.checked_add(p.value))
                .map(|v| ColoredPart::new(v, p.barred))
                .ok_or_else(|| Error::Overflow("part value exceeds u32".into()))
        })
        .collect()
}

/// `Θ(Y)` with all intermediates.
///
/// # Errors
///
/// [`Error::Domain`] if `Y ∉ 𝒜𝒪₁`.
pub fn theta(cfg: &AlgebraConfig, y: &TwoColoredPartition) -> Result<ThetaTrace> {
    if !in_ao1(y.parts(), cfg) {
        return Err(Error::Domain("input is not in AO1".into()));
    }
    let e = e_uncoded(cfg, y.parts())?;
    let lambda_tr = transpose(&e.lambda);
    let shifted = lift(cfg, &e.canonical, &lambda_tr)?;
    let output = if cfg.family == Family::D2 {
        d2_chain(cfg, &TwoColoredPartition::new(shifted.clone())?)?
    } else {
        TwoColoredPartition::new(p_s_inv(cfg, &shifted))?
    };
    if !in_ao2(output.parts(), cfg) || output.size() != y.size() {
        return Err(Error::Domain(format!(
            "image {output} is not a member of AO2"
        )));
    }
    Ok(ThetaTrace {
        input: y.clone(),
        coded: p_o(cfg, y.parts()),
        reduced: e.reduced,
        canonical: e.canonical,
        lambda: e.lambda,
        lambda_tr,
        diagram: e.diagram,
        shifted,
        output,
    })
}

fn d_prime_core(
    cfg: &AlgebraConfig,
    ys: Vec<ColoredPart>,
) -> Result<(Vec<ColoredPart>, OrdinaryPartition)> {
    let base = descend_to_target(cfg, ys.clone())?;
    let nu: Vec<u32> = ys
        .iter()
        .zip(&base)
        .map(|(a, b)| (a.value - b.value) / cfg.u)
        .filter(|&k| k > 0)
        .collect();
    if nu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Domain(
            "row shifts of (D') are not a partition".into(),
        ));
    }
    Ok((base, nu))
}

/// Algorithm (D′): lowers a member of `𝒜𝒪₂` (of `𝒜𝒪₄^{X_𝖴}` for `D⁽²⁾`)
/// into the target set, returning `Y′` in `𝖯ˢ⁻¹` form and the row shifts
/// `ν` in units of `𝖴`.
///
/// # Errors
///
/// [`Error::Domain`] if the input is outside the domain.
pub fn algo_d_prime(cfg: &AlgebraConfig, x: &TwoColoredPartition) -> Result<ReductionResult> {
    let ok = if cfg.family == Family::D2 {
        in_ao4_full(cfg, x.parts())
    } else {
        in_ao2(x.parts(), cfg)
    };
    if !ok {
        return Err(Error::Domain("input is outside the domain of (D')".into()));
    }
    let (base, nu) = d_prime_core(cfg, p_s(cfg, x.parts()))?;
    Ok(ReductionResult {
        reduced: TwoColoredPartition::new(p_s_inv(cfg, &base))?,
        extracted: nu,
    })
}

/// `Θ⁻¹(X)` with an explicit bound on the (F) search.
///
/// # Errors
///
/// [`Error::Domain`] if `X ∉ 𝒜𝒪₂`, [`Error::ResourceGuard`] if the search
/// bound is exceeded.
pub fn theta_inv_with_limit(
    cfg: &AlgebraConfig,
    x: &TwoColoredPartition,
    limit: u64,
) -> Result<TwoColoredPartition> {
    if !in_ao2(x.parts(), cfg) {
        return Err(Error::Domain("input is not in AO2".into()));
    }
    let ys = if cfg.family == Family::D2 {
        d2_chain_inverse(cfg, x)?.into_parts()
    } else {
        p_s(cfg, x.parts())
    };
    let (base, nu) = d_prime_core(cfg, ys)?;
    let lambda = transpose(&nu);
    let found = f_candidates(cfg, &base, &lambda, limit)?;
    let y = found
        .into_iter()
        .next()
        .ok_or_else(|| Error::Domain("no preimage under algorithm E".into()))?;
    TwoColoredPartition::new(y)
}

/// `Θ⁻¹(X)`.
///
/// # Errors
///
/// As for [`theta_inv_with_limit`].
pub fn theta_inv(cfg: &AlgebraConfig, x: &TwoColoredPartition) -> Result<TwoColoredPartition> {
    theta_inv_with_limit(cfg, x, DEFAULT_F_LIMIT)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine_params::{make_config, Weight};

    fn tcp(s: &str) -> TwoColoredPartition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_one_round_trip() {
        let c = make_config(Family::A2Odd, 4, Weight::L1).unwrap();
        let y = tcp("33,31,28~,28~,21,21,15,9,7,1");
        let tr = theta(&c, &y).unwrap();
        assert_eq!(tr.output, tcp("47,45,42~,28~,15,9,8"));
        assert_eq!(tr.lambda, vec![7, 4, 3]);
        assert_eq!(theta_inv(&c, &tr.output).unwrap(), y);
    }

    #[test]
    fn worked_example_two_round_trip() {
        let c = make_config(Family::A2Odd, 4, Weight::L1).unwrap();
        let y = tcp("33,31,28,28,21~,21~,15,9,7,1");
        let tr = theta(&c, &y).unwrap();
        assert_eq!(tr.reduced, tcp("19,17,14~,8,2,1"));
        assert_eq!(tr.lambda, vec![6, 6, 4, 3]);
        assert_eq!(theta_inv(&c, &tr.output).unwrap(), y);
    }

    #[test]
    fn d2_round_trip_small() {
        let c = make_config(Family::D2, 3, Weight::L0).unwrap();
        let y = tcp("13,7,5,1");
        let x = theta(&c, &y).unwrap().output;
        assert_eq!(theta_inv(&c, &x).unwrap(), y);
    }

    #[test]
    fn rejects_outside_domain() {
        let c = make_config(Family::A2Odd, 4, Weight::L1).unwrap();
        assert!(theta(&c, &tcp("8,8")).is_err());
        assert!(theta_inv(&c, &tcp("8,8")).is_err());
    }
}
