//! Transformation algorithms between the partition families.
//!
//! * [`reductions`]: algorithms (A), (B), (C), (D) and the `D⁽²⁾` chain.
//! * [`coding`]: the coding maps `𝖯ᵒ`, `𝖯ˢ` on `𝖴`-components.
//! * [`modular`]: the `𝖴`-modular diagram, algorithms (E′)/(E) and (F).
//! * [`theta`]: algorithm (D′) and the bijection `Θ: 𝒜𝒪₁ → 𝒜𝒪₂`.
//!
//! The reductions (D′) and (E) stop once the sequence reaches a target set
//! `T`. For every family except `D⁽²⁾` this is `𝒜𝒪₁ ∩ 𝒜𝒪₂ₛ`; for
//! `D⁽²⁾` it is `𝒜𝒪₁ ∩ 𝒜𝒪₄^{X_𝖴}`.

pub mod coding;
pub mod insertion;
pub mod modular;
pub mod reductions;
pub mod theta;

use serde::Serialize;

use crate::affine_params::{AlgebraConfig, Family};
use crate::colored_parts::ColoredPart;
use crate::error::{Error, Result};
use crate::partition_sets::{ao1_pair, in_ao1};
use crate::partitions::{OrdinaryPartition, TwoColoredPartition};

pub use coding::{canon, in_ao1o, in_ao2s, p_o, p_o_inv, p_s, p_s_inv};
pub use insertion::{left_insert, right_insert};
pub use modular::{
    algo_e, algo_e_prime, algo_f, diagram_walk_lambda, lambda_formula, split_rows_columns, EPrime,
    EResult, ModularDiagram, DEFAULT_F_LIMIT,
};
pub use reductions::{
    algo_a, algo_a_inverse, algo_b, algo_b_inverse, algo_b_with_steps, algo_c, algo_c_inverse,
    algo_c_with_steps, algo_d, d2_chain, d2_chain_inverse, in_ao4_full, in_s_prime, CResult,
    LadderStep,
};
pub use theta::{algo_d_prime, theta, theta_inv, theta_inv_with_limit, ThetaTrace};

/// A reduced partition together with the ordinary partition extracted
/// from it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionResult {
    /// The reduced two-colored partition.
    pub reduced: TwoColoredPartition,
    /// The extracted ordinary partition.
    pub extracted: OrdinaryPartition,
}

/// Membership in the target set `T` of the reductions (D′) and (E).
pub fn in_target(cfg: &AlgebraConfig, y: &[ColoredPart]) -> bool {
    in_ao1(y, cfg)
        && if cfg.family == Family::D2 {
            reductions::in_ao4_full(cfg, y)
        } else {
            in_ao2s(cfg, y)
        }
}

/// Largest `i` (from 1) such that the pair `(yᵢ₋₁, yᵢ)` violates the
/// `𝒜𝒪₁` gap conditions, with `y_{ℓ+1} = 0`.
pub(crate) fn fail_index(cfg: &AlgebraConfig, y: &[ColoredPart]) -> Option<usize> {
    (1..=y.len()).rev().find(|&i| {
        let b = y.get(i).copied().unwrap_or(ColoredPart::ZERO);
        !ao1_pair(cfg, y[i - 1], b)
    })
}

/// Lowers the first `i` parts by `𝖴`.
pub(crate) fn shift_prefix(
    cfg: &AlgebraConfig,
    y: &[ColoredPart],
    i: usize,
) -> Result<Vec<ColoredPart>> {
    y.iter()
        .enumerate()
        .map(|(k, &p)| {
            if k >= i {
                Ok(p)
            } else if p.value > cfg.u {
                Ok(ColoredPart::new(p.value - cfg.u, p.barred))
            } else {
                Err(Error::Domain(format!(
                    "part {p} cannot be lowered by {}",
                    cfg.u
                )))
            }
        })
        .collect()
}

/// Shifts at the failing index and re-bars until the sequence is in `T`.
pub(crate) fn descend_to_target(
    cfg: &AlgebraConfig,
    start: Vec<ColoredPart>,
) -> Result<Vec<ColoredPart>> {
    let mut y = canon(cfg, &start);
    while !in_target(cfg, &y) {
        let i = fail_index(cfg, &y)
            .ok_or_else(|| Error::Domain("no failing gap outside the target set".into()))?;
        y = canon(cfg, &shift_prefix(cfg, &y, i)?);
    }
    Ok(y)
}
