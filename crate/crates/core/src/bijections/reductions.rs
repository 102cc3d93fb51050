//! Reductions that peel an ordinary partition off a two-colored partition:
//! the gap reduction (A), the ladder removals (B) and (C), and the odd
//! multiple extraction (D) together with its chain into `𝒜𝒪₂`.

use serde::Serialize;

use crate::affine_params::{AlgebraConfig, Family};
use crate::colored_parts::{diff, ColoredPart};
use crate::error::{Error, Result};
use crate::partition_sets::{in_ao1, in_ao2, in_z};
use crate::partitions::{odd_to_strict, strict_to_odd, OrdinaryPartition, TwoColoredPartition};

use super::insertion::left_insert;
use super::ReductionResult;

/// One round of a ladder removal (B) or (C).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LadderStep {
    /// Position (from 1) of the chosen part.
    pub index: usize,
    /// The chosen part.
    pub part: ColoredPart,
    /// The multiplier `λ̂`.
    pub hat: u32,
    /// Number of parts equal to the chosen one.
    pub t: usize,
    /// Number of copies of `λ̂` appended to `λ`.
    pub a: usize,
}

fn wrap(parts: Vec<ColoredPart>) -> TwoColoredPartition {
    TwoColoredPartition::from_vec_unchecked(parts)
}

/// Algorithm (A): repeatedly lower the prefix above the last admissible
/// gap until the sequence lies in `𝒜𝒪₁`.
///
/// # Errors
///
/// [`Error::Domain`] if the input is not in `𝒵 ∖ 𝒜𝒪₁` or no admissible gap
/// exists.
pub fn algo_a(cfg: &AlgebraConfig, y: &TwoColoredPartition) -> Result<ReductionResult> {
    let orig = y.parts();
    if !in_z(orig, cfg) {
        return Err(Error::Domain("input is not in Z".into()));
    }
    if in_ao1(orig, cfg) {
        return Err(Error::Domain("input already in AO1".into()));
    }
    let u = cfg.u;
    let mut cur = orig.to_vec();
    while !in_ao1(&cur, cfg) {
        let mut best: Option<(usize, u32)> = None;
        for i in 2..=cur.len() + 1 {
            let a = cur[i - 2];
            let b = cur.get(i - 1).copied().unwrap_or(ColoredPart::ZERO);
            let d = diff(a, b);
            let mut chosen = None;
            for t in 1..=d.value / u {
                if d < ColoredPart::plain(t * u) {
                    continue;
                }
                let a2 = ColoredPart::new(a.value - t * u, a.barred);
                let pair: Vec<ColoredPart> = [a2, b].into_iter().filter(|p| !p.is_zero()).collect();
                if a2 >= b && in_z(&pair, cfg) {
                    chosen = Some(t);
                }
            }
            if let Some(t) = chosen {
                best = Some((i, t));
            }
        }
        let (i, t) =
            best.ok_or_else(|| Error::Domain("no admissible gap in algorithm A".into()))?;
        for p in cur.iter_mut().take(i - 1) {
            *p = ColoredPart::new(p.value - t * u, p.barred);
        }
        cur.retain(|p| !p.is_zero());
    }
    let extracted: Vec<u32> = orig
        .iter()
        .enumerate()
        .map(|(k, p)| (p.value - cur.get(k).map_or(0, |q| q.value)) / u)
        .filter(|&x| x > 0)
        .collect();
    Ok(ReductionResult {
        reduced: wrap(cur),
        extracted,
    })
}

/// Inverse of [`algo_a`]: `yᵢ = y′ᵢ + λᵢ𝖴`.
///
/// # Errors
///
/// [`Error::Domain`] if the result is not in `𝒵 ∖ 𝒜𝒪₁`.
pub fn algo_a_inverse(
    cfg: &AlgebraConfig,
    reduced: &TwoColoredPartition,
    lambda: &[u32],
) -> Result<TwoColoredPartition> {
    let len = reduced.len().max(lambda.len());
    let out: Vec<ColoredPart> = (0..len)
        .map(|k| {
            let p = reduced.part(k + 1);
            let add = lambda.get(k).copied().unwrap_or(0) * cfg.u;
            ColoredPart::new(p.value + add, p.barred)
        })
        .collect();
    let t = TwoColoredPartition::new(out)?;
    if !in_z(t.parts(), cfg) || in_ao1(t.parts(), cfg) {
        return Err(Error::Domain(
            "preimage is not in the complement of AO1".into(),
        ));
    }
    Ok(t)
}

struct Ladder {
    unit: u32,
    eps: u32,
    odd_only: bool,
}

fn ladder_reduce(
    parts: &[ColoredPart],
    ladder: &Ladder,
    done: impl Fn(&[ColoredPart]) -> bool,
) -> Result<(Vec<ColoredPart>, Vec<u32>, Vec<LadderStep>)> {
    let mut y = parts.to_vec();
    let mut lambda: Vec<u32> = Vec::new();
    let mut steps = Vec::new();
    while !done(&y) {
        let top = lambda.first().copied().unwrap_or(0);
        let mut best: Option<LadderStep> = None;
        for (i, &p) in y.iter().enumerate() {
            if p.value % ladder.unit != 0 {
                continue;
            }
            let hat = p.value / ladder.unit;
            if hat <= top || (ladder.odd_only && hat.is_multiple_of(2)) {
                continue;
            }
            let t = y.iter().filter(|&&q| q == p).count();
            let a = (t / ladder.eps as usize).saturating_sub(p.color() as usize);
            if a > 0 {
                best = Some(LadderStep {
                    index: i + 1,
                    part: p,
                    hat,
                    t,
                    a,
                });
            }
        }
        let step = best.ok_or_else(|| Error::Domain("no removable ladder part".into()))?;
        let remove = step.a * ladder.eps as usize;
        let last = step.index;
        y.drain(last - remove..last);
        let mut next = vec![step.hat; step.a];
        next.extend_from_slice(&lambda);
        lambda = next;
        steps.push(step);
    }
    Ok((y, lambda, steps))
}

fn b_ladder(cfg: &AlgebraConfig) -> Ladder {
    Ladder {
        unit: cfg.u / cfg.eps,
        eps: cfg.eps,
        odd_only: false,
    }
}

/// Algorithm (B) with its rounds: remove copies of ladder parts `λ̂·ε⁻¹𝖴`
/// until the sequence lies in `𝒜𝒪₂`.
///
/// # Errors
///
/// [`Error::Domain`] if the input is not in `𝒵 ∖ 𝒜𝒪₂`.
pub fn algo_b_with_steps(
    cfg: &AlgebraConfig,
    y: &TwoColoredPartition,
) -> Result<(ReductionResult, Vec<LadderStep>)> {
    if !in_z(y.parts(), cfg) {
        return Err(Error::Domain("input is not in Z".into()));
    }
    if in_ao2(y.parts(), cfg) {
        return Err(Error::Domain("input already in AO2".into()));
    }
    let (reduced, extracted, steps) = ladder_reduce(y.parts(), &b_ladder(cfg), |s| in_ao2(s, cfg))?;
    Ok((
        ReductionResult {
            reduced: wrap(reduced),
            extracted,
        },
        steps,
    ))
}

/// Algorithm (B).
///
/// # Errors
///
/// As for [`algo_b_with_steps`].
pub fn algo_b(cfg: &AlgebraConfig, y: &TwoColoredPartition) -> Result<ReductionResult> {
    algo_b_with_steps(cfg, y).map(|(r, _)| r)
}

fn ladder_insert(
    cfg: &AlgebraConfig,
    reduced: &[ColoredPart],
    lambda: &[u32],
    unit: u32,
    eps: u32,
) -> Result<Vec<ColoredPart>> {
    let mut y = reduced.to_vec();
    for &h in lambda {
        y = left_insert(cfg, h * unit, 1 + (eps / 2) as usize, &y)?;
    }
    Ok(y)
}

/// Inverse of [`algo_b`]: left-insert `(λ′ᵢ·ε⁻¹𝖴)^{1+⌊ε/2⌋}` for
/// `i = 1, 2, …`.
///
/// # Errors
///
/// [`Error::Domain`] if an insertion leaves `𝒵`.
pub fn algo_b_inverse(
    cfg: &AlgebraConfig,
    reduced: &TwoColoredPartition,
    lambda: &[u32],
) -> Result<TwoColoredPartition> {
    let l = b_ladder(cfg);
    TwoColoredPartition::new(ladder_insert(cfg, reduced.parts(), lambda, l.unit, l.eps)?)
}

/// Output of algorithm (C).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CResult {
    /// The member of `𝒮′` (bars kept).
    pub reduced: TwoColoredPartition,
    /// The extracted odd partition.
    pub odd: OrdinaryPartition,
    /// Its image under [`odd_to_strict`].
    pub strict: OrdinaryPartition,
}

fn c_ladder(cfg: &AlgebraConfig) -> Ladder {
    Ladder {
        unit: cfg.z1 / cfg.eps_tilde,
        eps: cfg.eps_tilde,
        odd_only: true,
    }
}

/// Whether the values are distinct and, for `B⁽¹⁾ₙ` with `Λₙ`, avoid
/// multiples of `𝖴`.
pub fn in_s_prime(cfg: &AlgebraConfig, parts: &[ColoredPart]) -> bool {
    let distinct = parts.windows(2).all(|w| w[0].value != w[1].value);
    distinct && (!cfg.is_b1_ln() || parts.iter().all(|p| !cfg.is_u_multiple(p.value)))
}

/// Algorithm (C) with its rounds, for `B⁽¹⁾ₙ` and `D⁽¹⁾ₙ`.
///
/// # Errors
///
/// [`Error::Domain`] for other families or inputs outside `𝒜𝒪₂`.
pub fn algo_c_with_steps(
    cfg: &AlgebraConfig,
    y: &TwoColoredPartition,
) -> Result<(CResult, Vec<LadderStep>)> {
    if !matches!(cfg.family, Family::B1 | Family::D1) {
        return Err(Error::Domain(format!(
            "algorithm C applies to B1 and D1, not {}",
            cfg.family
        )));
    }
    if !in_ao2(y.parts(), cfg) {
        return Err(Error::Domain("input is not in AO2".into()));
    }
    let (reduced, odd, steps) = ladder_reduce(y.parts(), &c_ladder(cfg), |s| in_s_prime(cfg, s))?;
    let strict = odd_to_strict(&odd)?;
    Ok((
        CResult {
            reduced: wrap(reduced),
            odd,
            strict,
        },
        steps,
    ))
}

/// Algorithm (C).
///
/// # Errors
///
/// As for [`algo_c_with_steps`].
pub fn algo_c(cfg: &AlgebraConfig, y: &TwoColoredPartition) -> Result<CResult> {
    algo_c_with_steps(cfg, y).map(|(r, _)| r)
}

/// Inverse of [`algo_c`] from the odd partition.
///
/// # Errors
///
/// [`Error::Domain`] if an insertion leaves `𝒵`.
pub fn algo_c_inverse(
    cfg: &AlgebraConfig,
    reduced: &TwoColoredPartition,
    odd: &[u32],
) -> Result<TwoColoredPartition> {
    let l = c_ladder(cfg);
    TwoColoredPartition::new(ladder_insert(cfg, reduced.parts(), odd, l.unit, l.eps)?)
}

fn require_d2(cfg: &AlgebraConfig) -> Result<()> {
    if cfg.family != Family::D2 {
        return Err(Error::Domain(format!(
            "this step applies to D2, not {}",
            cfg.family
        )));
    }
    Ok(())
}

/// `μ ∈ 𝒜𝒪₄^{X_𝖴}` with `X_𝖴 = {1, …, 𝖴-1}`: unbarred, no multiple of
/// `𝖴`, and only multiples of `𝖵` repeat.
pub fn in_ao4_full(cfg: &AlgebraConfig, parts: &[ColoredPart]) -> bool {
    parts
        .iter()
        .all(|p| !p.barred && p.value > 0 && p.value % cfg.u != 0)
        && parts
            .windows(2)
            .all(|w| w[0] >= w[1] && (w[0] != w[1] || w[0].value % cfg.v == 0))
}

/// Algorithm (D): remove every odd multiple of `𝖵`, recording the odd
/// multipliers as `λ`.
///
/// # Errors
///
/// [`Error::Domain`] for non-`D⁽²⁾` configs or inputs outside `𝒜𝒪₄^{X_𝖴}`.
pub fn algo_d(cfg: &AlgebraConfig, mu: &TwoColoredPartition) -> Result<ReductionResult> {
    require_d2(cfg)?;
    if !in_ao4_full(cfg, mu.parts()) {
        return Err(Error::Domain("input is not in AO4".into()));
    }
    let mut cur = mu.parts().to_vec();
    let mut removed = Vec::new();
    while let Some(i) = cur
        .iter()
        .rposition(|p| p.value % cfg.v == 0 && (p.value / cfg.v) % 2 == 1)
    {
        removed.push(cur[i].value / cfg.v);
        cur.remove(i);
    }
    removed.reverse();
    Ok(ReductionResult {
        reduced: wrap(cur),
        extracted: removed,
    })
}

/// The chain `𝒜𝒪₄^{X_𝖴} → 𝒜𝒪₂`: algorithm (D), then [`odd_to_strict`],
/// then left insertion of each `λ′ᵢ𝖵`.
///
/// # Errors
///
/// As for [`algo_d`].
pub fn d2_chain(cfg: &AlgebraConfig, mu: &TwoColoredPartition) -> Result<TwoColoredPartition> {
    let r = algo_d(cfg, mu)?;
    let strict = odd_to_strict(&r.extracted)?;
    let mut y = r.reduced.into_parts();
    for &s in &strict {
        y = left_insert(cfg, s * cfg.v, 1, &y)?;
    }
    let out = TwoColoredPartition::new(y)?;
    debug_assert!(in_ao2(out.parts(), cfg));
    Ok(out)
}

/// Inverse of [`d2_chain`].
///
/// # Errors
///
/// [`Error::Domain`] for non-`D⁽²⁾` configs or inputs outside `𝒜𝒪₂`.
pub fn d2_chain_inverse(
    cfg: &AlgebraConfig,
    x: &TwoColoredPartition,
) -> Result<TwoColoredPartition> {
    require_d2(cfg)?;
    if !in_ao2(x.parts(), cfg) {
        return Err(Error::Domain("input is not in AO2".into()));
    }
    let (multiples, rest): (Vec<ColoredPart>, Vec<ColoredPart>) =
        x.parts().iter().partition(|p| p.value % cfg.v == 0);
    let strict: Vec<u32> = multiples.iter().map(|p| p.value / cfg.v).collect();
    let odd = strict_to_odd(&strict)?;
    let mut parts = rest;
    parts.extend(odd.iter().map(|&o| ColoredPart::plain(o * cfg.v)));
    Ok(TwoColoredPartition::from_unsorted(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine_params::{make_config, Weight};

    fn tcp(s: &str) -> TwoColoredPartition {
        s.parse().unwrap()
    }

    #[test]
    fn algo_b_example_with_corrected_size_101() {
        let c = make_config(Family::A2Odd, 4, Weight::L0).unwrap();
        let y = tcp("20,14,14,13,11,7~,7~,7~,5,3");
        assert_eq!(y.size(), 101);
        let (r, steps) = algo_b_with_steps(&c, &y).unwrap();
        assert_eq!(r.reduced, tcp("20,13,11,7~,5,3"));
        assert_eq!(r.extracted, vec![2, 2, 1, 1]);
        assert_eq!(
            (steps[0].index, steps[0].hat, steps[0].t, steps[0].a),
            (8, 1, 3, 2)
        );
        assert_eq!(
            (steps[1].index, steps[1].hat, steps[1].t, steps[1].a),
            (3, 2, 2, 2)
        );
        assert_eq!(algo_b_inverse(&c, &r.reduced, &r.extracted).unwrap(), y);
    }

    #[test]
    fn algo_c_example() {
        let c = make_config(Family::B1, 3, Weight::Ln).unwrap();
        let y = tcp("31,17,15~,15~,13,7,5,3,3");
        let (r, steps) = algo_c_with_steps(&c, &y).unwrap();
        assert_eq!(r.reduced, tcp("31,17,15~,13,7,5"));
        assert_eq!(r.reduced.size(), 88);
        assert_eq!(r.odd, vec![5, 1, 1]);
        assert_eq!((steps[0].hat, steps[0].t, steps[0].a), (1, 2, 2));
        assert_eq!(
            (steps[1].index, steps[1].hat, steps[1].t, steps[1].a),
            (4, 5, 2, 1)
        );
        assert_eq!(algo_c_inverse(&c, &r.reduced, &r.odd).unwrap(), y);
    }

    #[test]
    fn algo_c_early_exit_and_family_check() {
        let c = make_config(Family::D1, 4, Weight::L0).unwrap();
        let y = tcp("5,2,1");
        let r = algo_c(&c, &y).unwrap();
        assert_eq!(r.reduced, y);
        assert!(r.odd.is_empty());
        let a = make_config(Family::A2Odd, 3, Weight::L0).unwrap();
        assert!(algo_c(&a, &tcp("1")).is_err());
    }

    #[test]
    fn algo_d_without_odd_multiples() {
        let c = make_config(Family::D2, 3, Weight::L0).unwrap();
        let mu = tcp("5,4,2,1");
        let r = algo_d(&c, &mu).unwrap();
        assert_eq!(r.reduced, mu);
        assert!(r.extracted.is_empty());
    }

    #[test]
    fn d2_chain_round_trip() {
        let c = make_config(Family::D2, 3, Weight::L0).unwrap();
        let mu = tcp("9,5,3,3,3,1");
        let x = d2_chain(&c, &mu).unwrap();
        assert!(in_ao2(x.parts(), &c));
        assert_eq!(x.size(), mu.size());
        assert_eq!(d2_chain_inverse(&c, &x).unwrap(), mu);
    }

    #[test]
    fn algo_a_rejects_members() {
        let c = make_config(Family::D2, 3, Weight::L0).unwrap();
        assert!(algo_a(&c, &tcp("2,1")).is_err());
    }
}
