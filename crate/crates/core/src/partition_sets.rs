//! Membership predicates and exhaustive enumerators for every partition
//! family used by the identities.
//!
//! All the defining conditions are local: each is a test on single parts,
//! on adjacent pairs, or on the smallest part. Enumeration is therefore a
//! depth-first descent over parts in `≻`-decreasing order that checks the
//! pair condition at every step, which yields members in canonical order
//! (lexicographic under `≻`, largest first).

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::affine_params::{AlgebraConfig, Family};
use crate::colored_parts::{diff, ColoredPart};
use crate::error::{Error, Result};
use crate::partitions::{is_in_pt, TwoColoredPartition};

/// Environment variable bounding the number of search nodes per enumeration.
pub const MAX_SPACE_ENV: &str = "YW_MAX_SPACE";

/// Default bound on search nodes per enumeration.
pub const DEFAULT_MAX_SPACE: u64 = 200_000_000;

/// Search node bound taken from [`MAX_SPACE_ENV`], or the default.
///
/// # Errors
///
/// [`Error::InvalidConfig`] if the variable is set but not a positive integer.
pub fn max_space_from_env() -> Result<u64> {
    match std::env::var(MAX_SPACE_ENV) {
        Ok(s) => s
            .trim()
            .parse::<u64>()
            .ok()
            .filter(|&v| v > 0)
            .ok_or_else(|| {
                Error::InvalidConfig(format!("{MAX_SPACE_ENV}='{s}' is not a positive integer"))
            }),
        Err(_) => Ok(DEFAULT_MAX_SPACE),
    }
}

/// A strictly increasing residue set `x₁ < ⋯ < x_r` below a modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ResidueSet(Vec<u32>);

impl ResidueSet {
    /// Validates `xs ⊆ {1, …, modulus-1}`, nonempty and strictly increasing.
    ///
    /// # Errors
    ///
    /// [`Error::InvalidConfig`] on any violation.
    pub fn new(xs: Vec<u32>, modulus: u32) -> Result<Self> {
        if xs.is_empty() {
            return Err(Error::InvalidConfig("residue set is empty".into()));
        }
        if xs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidConfig(
                "residues must be strictly increasing".into(),
            ));
        }
        if let Some(&x) = xs.iter().find(|&&x| x == 0 || x >= modulus) {
            return Err(Error::InvalidConfig(format!(
                "residue {x} outside 1..{}",
                modulus.saturating_sub(1)
            )));
        }
        Ok(ResidueSet(xs))
    }

    /// The full set `{1, …, modulus-1}`.
    pub fn full(modulus: u32) -> Self {
        ResidueSet((1..modulus).collect())
    }

    /// The residues.
    pub fn values(&self) -> &[u32] {
        &self.0
    }

    /// Whether `r` is one of the residues.
    pub fn contains(&self, r: u32) -> bool {
        self.0.binary_search(&r).is_ok()
    }
}

impl fmt::Display for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

/// The five classical sets on ordinary partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassicalKind {
    /// Gap-conditioned set with modulus `N`.
    AO1,
    /// Distinct parts in residues `X` modulo `N`.
    AO2,
    /// Gap-conditioned set with modulus `2N`.
    AO3,
    /// Residues `X` modulo `2N`, only multiples of `N` repeat.
    AO4,
    /// Distinct parts in residues `X` modulo `2N` (plus `0` when `N ∈ X`).
    AO5,
}

impl ClassicalKind {
    /// Modulus that bounds the residues for a given `N`.
    pub fn residue_modulus(self, n: u32) -> u32 {
        match self {
            ClassicalKind::AO1 | ClassicalKind::AO2 => n,
            _ => 2 * n,
        }
    }
}

/// A partition family together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SetSpec {
    /// `𝒵(Λ)`
    Z(AlgebraConfig),
    /// `𝒜𝒪₁(Λ)`
    AO1(AlgebraConfig),
    /// `𝒜𝒪₂(Λ)`
    AO2(AlgebraConfig),
    /// `𝒜𝒪₁(Λ)` with every part `≡ 0` or some `xⱼ` modulo `z₃`.
    AO1Restricted(AlgebraConfig, ResidueSet),
    /// `𝒜𝒪₂(Λ)` with every part `≡ 0` or some `xⱼ` modulo `z₃`.
    AO2Restricted(AlgebraConfig, ResidueSet),
    /// A classical set with modulus parameter `N` and residues `X`.
    Classical(ClassicalKind, u32, ResidueSet),
    /// Strict ordinary partitions.
    Strict,
    /// Strict ordinary partitions with no part divisible by the given modulus.
    StrictAvoiding(u32),
    /// Ordinary partitions with odd parts.
    Odd,
    /// All ordinary partitions.
    Partitions,
    /// Overpartitions.
    Overpartitions,
    /// Two-colored partitions with no value both barred and unbarred.
    Pt,
}

/// Whether two adjacent parts satisfy the `𝒵` conditions.
fn z_pair(cfg: &AlgebraConfig, a: ColoredPart, b: ColoredPart) -> bool {
    if a.value == b.value && a.barred != b.barred {
        return false;
    }
    !(a == b && !cfg.repeatable(a))
}

/// The gap condition of `𝒜𝒪₁` between `a` and the next part `b`
/// (`b` may be zero for the bottom).
pub(crate) fn ao1_pair(cfg: &AlgebraConfig, a: ColoredPart, b: ColoredPart) -> bool {
    if b.is_zero() {
        return a.strictly_below_plain(cfg.u);
    }
    let d = diff(a, b);
    if !d.value_at_most(cfg.u) {
        return false;
    }
    if cfg.is_trigger(a) || cfg.is_trigger(b) {
        return d.strictly_below_plain(cfg.u);
    }
    true
}

/// `λ ∈ 𝒵(Λ)`.
pub fn in_z(parts: &[ColoredPart], cfg: &AlgebraConfig) -> bool {
    parts.iter().all(|&p| !p.is_zero() && cfg.allows(p))
        && parts
            .windows(2)
            .all(|w| w[0] >= w[1] && z_pair(cfg, w[0], w[1]))
}

/// `λ ∈ 𝒜𝒪₁(Λ)`.
pub fn in_ao1(parts: &[ColoredPart], cfg: &AlgebraConfig) -> bool {
    in_z(parts, cfg) && ao1_gaps(parts, cfg)
}

/// The `𝒜𝒪₁` gap conditions alone, including the smallest-part clause.
pub(crate) fn ao1_gaps(parts: &[ColoredPart], cfg: &AlgebraConfig) -> bool {
    parts.windows(2).all(|w| ao1_pair(cfg, w[0], w[1]))
        && parts
            .last()
            .is_none_or(|&l| ao1_pair(cfg, l, ColoredPart::ZERO))
}

fn ao2_part(cfg: &AlgebraConfig, p: ColoredPart) -> bool {
    if cfg.is_b1_ln() {
        !cfg.is_u_multiple(p.value)
    } else if cfg.family == Family::D2 {
        true
    } else {
        !(cfg.is_u_multiple(p.value) && !p.barred)
    }
}

fn ao2_repeat(cfg: &AlgebraConfig, p: ColoredPart) -> bool {
    match cfg.family {
        Family::A2Odd | Family::D2 => false,
        Family::A2Even => true,
        Family::B1 if cfg.is_b1_ln() => true,
        Family::B1 => p.value % cfg.u == cfg.z3 % cfg.u,
        Family::D1 => !p.value.is_multiple_of(cfg.u),
    }
}

fn ao2_pair(cfg: &AlgebraConfig, a: ColoredPart, b: ColoredPart) -> bool {
    a != b || ao2_repeat(cfg, a)
}

/// `λ ∈ 𝒜𝒪₂(Λ)`.
pub fn in_ao2(parts: &[ColoredPart], cfg: &AlgebraConfig) -> bool {
    in_z(parts, cfg)
        && parts.iter().all(|&p| ao2_part(cfg, p))
        && parts.windows(2).all(|w| ao2_pair(cfg, w[0], w[1]))
}

fn restricted_part(cfg: &AlgebraConfig, xs: &ResidueSet, p: ColoredPart) -> bool {
    let r = p.value % cfg.z3;
    r == 0 || xs.contains(r)
}

/// Whether every part is `≡ 0` or some `xⱼ` modulo `z₃`.
pub fn in_residues(parts: &[ColoredPart], cfg: &AlgebraConfig, xs: &ResidueSet) -> bool {
    parts.iter().all(|&p| restricted_part(cfg, xs, p))
}

fn classical_part(kind: ClassicalKind, n: u32, xs: &ResidueSet, v: u32) -> bool {
    match kind {
        ClassicalKind::AO1 => v.is_multiple_of(n) || xs.contains(v % n),
        ClassicalKind::AO2 => xs.contains(v % n),
        ClassicalKind::AO3 => v.is_multiple_of(2 * n) || xs.contains(v % (2 * n)),
        ClassicalKind::AO4 => xs.contains(v % (2 * n)),
        ClassicalKind::AO5 => {
            xs.contains(v % (2 * n)) || (v.is_multiple_of(2 * n) && xs.contains(n))
        }
    }
}

fn classical_pair(kind: ClassicalKind, n: u32, a: u32, b: u32) -> bool {
    if a == b {
        let ok = match kind {
            ClassicalKind::AO1 | ClassicalKind::AO3 | ClassicalKind::AO4 => a.is_multiple_of(n),
            ClassicalKind::AO2 | ClassicalKind::AO5 => false,
        };
        if !ok {
            return false;
        }
    }
    let modulus = match kind {
        ClassicalKind::AO1 => n,
        ClassicalKind::AO3 => 2 * n,
        _ => return true,
    };
    let d = a - b;
    if b == 0 {
        return a < modulus;
    }
    d <= modulus && (d < modulus || (!a.is_multiple_of(n) && !b.is_multiple_of(n)))
}

/// Membership in a classical set; parts are plain values, largest first.
///
/// # Errors
///
/// [`Error::InvalidConfig`] if `X` is not a subset of the allowed residues.
pub fn in_classical(parts: &[u32], kind: ClassicalKind, n: u32, xs: &ResidueSet) -> Result<bool> {
    validate_classical(kind, n, xs)?;
    Ok(classical_member(parts, kind, n, xs))
}

fn classical_member(parts: &[u32], kind: ClassicalKind, n: u32, xs: &ResidueSet) -> bool {
    parts
        .iter()
        .all(|&v| v > 0 && classical_part(kind, n, xs, v))
        && parts
            .windows(2)
            .all(|w| w[0] >= w[1] && classical_pair(kind, n, w[0], w[1]))
        && parts.last().is_none_or(|&l| classical_pair(kind, n, l, 0))
}

fn validate_classical(kind: ClassicalKind, n: u32, xs: &ResidueSet) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidConfig("modulus N must be positive".into()));
    }
    ResidueSet::new(xs.values().to_vec(), kind.residue_modulus(n)).map(|_| ())
}

fn plain_values(parts: &[ColoredPart]) -> Option<Vec<u32>> {
    parts
        .iter()
        .map(|p| (!p.barred).then_some(p.value))
        .collect()
}

impl SetSpec {
    /// Checks the parameters of the spec.
    ///
    /// # Errors
    ///
    /// [`Error::InvalidConfig`] for residue sets outside their range or a
    /// zero modulus.
    pub fn validate(&self) -> Result<()> {
        match self {
            SetSpec::AO1Restricted(c, xs) | SetSpec::AO2Restricted(c, xs) => {
                ResidueSet::new(xs.values().to_vec(), c.z3).map(|_| ())
            }
            SetSpec::Classical(k, n, xs) => validate_classical(*k, *n, xs),
            SetSpec::StrictAvoiding(0) => {
                Err(Error::InvalidConfig("modulus must be positive".into()))
            }
            _ => Ok(()),
        }
    }

    /// Short name of the set.
    pub fn name(&self) -> String {
        match self {
            SetSpec::Z(_) => "Z".into(),
            SetSpec::AO1(_) => "AO1".into(),
            SetSpec::AO2(_) => "AO2".into(),
            SetSpec::AO1Restricted(_, x) => format!("AO1^{x}"),
            SetSpec::AO2Restricted(_, x) => format!("AO2^{x}"),
            SetSpec::Classical(k, n, x) => format!("{k:?}^{x}_N={n}"),
            SetSpec::Strict => "strict".into(),
            SetSpec::StrictAvoiding(u) => format!("strict-avoiding-{u}"),
            SetSpec::Odd => "odd".into(),
            SetSpec::Partitions => "partitions".into(),
            SetSpec::Overpartitions => "overpartitions".into(),
            SetSpec::Pt => "Pt".into(),
        }
    }

    /// Full membership test.
    pub fn contains(&self, parts: &[ColoredPart]) -> bool {
        let sorted = parts.iter().all(|p| !p.is_zero()) && parts.windows(2).all(|w| w[0] >= w[1]);
        if !sorted {
            return false;
        }
        match self {
            SetSpec::Z(c) => in_z(parts, c),
            SetSpec::AO1(c) => in_ao1(parts, c),
            SetSpec::AO2(c) => in_ao2(parts, c),
            SetSpec::AO1Restricted(c, xs) => in_ao1(parts, c) && in_residues(parts, c, xs),
            SetSpec::AO2Restricted(c, xs) => in_ao2(parts, c) && in_residues(parts, c, xs),
            SetSpec::Classical(k, n, xs) => {
                plain_values(parts).is_some_and(|v| classical_member(&v, *k, *n, xs))
            }
            SetSpec::Strict => {
                plain_values(parts).is_some_and(|v| crate::partitions::is_strict(&v))
            }
            SetSpec::StrictAvoiding(u) => plain_values(parts)
                .is_some_and(|v| crate::partitions::is_strict(&v) && v.iter().all(|x| x % u != 0)),
            SetSpec::Odd => plain_values(parts).is_some_and(|v| v.iter().all(|x| x % 2 == 1)),
            SetSpec::Partitions => plain_values(parts).is_some(),
            SetSpec::Overpartitions => crate::partitions::is_overpartition(parts),
            SetSpec::Pt => is_in_pt(parts),
        }
    }

    fn candidates(&self, m: u32) -> Vec<ColoredPart> {
        let plain = |f: &dyn Fn(u32) -> bool| -> Vec<ColoredPart> {
            (1..=m)
                .rev()
                .filter(|&v| f(v))
                .map(ColoredPart::plain)
                .collect()
        };
        let both = || -> Vec<ColoredPart> {
            (1..=m)
                .rev()
                .flat_map(|v| [ColoredPart::plain(v), ColoredPart::bar(v)])
                .collect()
        };
        match self {
            SetSpec::Z(c) | SetSpec::AO1(c) => c.allowed_parts_desc(m),
            SetSpec::AO2(c) => c
                .allowed_parts_desc(m)
                .into_iter()
                .filter(|&p| ao2_part(c, p))
                .collect(),
            SetSpec::AO1Restricted(c, xs) => c
                .allowed_parts_desc(m)
                .into_iter()
                .filter(|&p| restricted_part(c, xs, p))
                .collect(),
            SetSpec::AO2Restricted(c, xs) => c
                .allowed_parts_desc(m)
                .into_iter()
                .filter(|&p| ao2_part(c, p) && restricted_part(c, xs, p))
                .collect(),
            SetSpec::Classical(k, n, xs) => plain(&|v| classical_part(*k, *n, xs, v)),
            SetSpec::Strict | SetSpec::Partitions => plain(&|_| true),
            SetSpec::StrictAvoiding(u) => plain(&|v| v % u != 0),
            SetSpec::Odd => plain(&|v| v % 2 == 1),
            SetSpec::Overpartitions | SetSpec::Pt => both(),
        }
    }

    fn pair_ok(&self, a: ColoredPart, b: ColoredPart) -> bool {
        match self {
            SetSpec::Z(c) => z_pair(c, a, b),
            SetSpec::AO1(c) | SetSpec::AO1Restricted(c, _) => z_pair(c, a, b) && ao1_pair(c, a, b),
            SetSpec::AO2(c) | SetSpec::AO2Restricted(c, _) => z_pair(c, a, b) && ao2_pair(c, a, b),
            SetSpec::Classical(k, n, _) => classical_pair(*k, *n, a.value, b.value),
            SetSpec::Strict | SetSpec::StrictAvoiding(_) => a != b,
            SetSpec::Odd | SetSpec::Partitions => true,
            SetSpec::Overpartitions => !(a.value == b.value && a.barred),
            SetSpec::Pt => !(a.value == b.value && a.barred != b.barred),
        }
    }

    fn last_ok(&self, a: ColoredPart) -> bool {
        match self {
            SetSpec::AO1(c) | SetSpec::AO1Restricted(c, _) => ao1_pair(c, a, ColoredPart::ZERO),
            SetSpec::Classical(k, n, _) => classical_pair(*k, *n, a.value, 0),
            _ => true,
        }
    }

    /// All members of size `m`, in canonical order.
    ///
    /// # Errors
    ///
    /// [`Error::InvalidConfig`] for an invalid set description and
    /// [`Error::ResourceGuard`] when more than `max_space` search nodes are
    /// visited.
    pub fn enumerate(&self, m: u32, max_space: u64) -> Result<Vec<TwoColoredPartition>> {
        self.validate()?;
        let cands = self.candidates(m);
        let visited = AtomicU64::new(0);
        let firsts: Vec<usize> = (0..cands.len()).collect();
        let chunks: Vec<Result<Vec<Vec<ColoredPart>>>> = firsts
            .par_iter()
            .map(|&j| {
                let mut out = Vec::new();
                let mut cur = vec![cands[j]];
                self.descend(
                    &cands,
                    j,
                    m - cands[j].value,
                    &mut cur,
                    &mut out,
                    &visited,
                    max_space,
                )?;
                Ok(out)
            })
            .collect();
        let mut all = Vec::new();
        if m == 0 {
            all.push(TwoColoredPartition::empty());
        }
        for chunk in chunks {
            for parts in chunk? {
                debug_assert!(self.contains(&parts));
                all.push(TwoColoredPartition::from_vec_unchecked(parts));
            }
        }
        Ok(all)
    }

    #[allow(clippy::too_many_arguments)]
    fn descend(
        &self,
        cands: &[ColoredPart],
        start: usize,
        rem: u32,
        cur: &mut Vec<ColoredPart>,
        out: &mut Vec<Vec<ColoredPart>>,
        visited: &AtomicU64,
        max_space: u64,
    ) -> Result<()> {
        if visited.fetch_add(1, Ordering::Relaxed) >= max_space {
            return Err(Error::ResourceGuard(format!(
                "enumeration of {} exceeded {max_space} search nodes (set {MAX_SPACE_ENV} to raise)",
                self.name()
            )));
        }
        let last = *cur.last().expect("nonempty prefix");
        if rem == 0 {
            if self.last_ok(last) {
                out.push(cur.clone());
            }
            return Ok(());
        }
        for (j, &p) in cands.iter().enumerate().skip(start) {
            if p.value > rem || !self.pair_ok(last, p) {
                continue;
            }
            cur.push(p);
            self.descend(cands, j, rem - p.value, cur, out, visited, max_space)?;
            cur.pop();
        }
        Ok(())
    }

    /// Number of members of size `m`.
    ///
    /// # Errors
    ///
    /// As for [`SetSpec::enumerate`].
    pub fn count(&self, m: u32, max_space: u64) -> Result<u64> {
        Ok(self.enumerate(m, max_space)?.len() as u64)
    }
}

/// Enumerates `spec` for every size `0..=max`.
///
/// # Errors
///
/// As for [`SetSpec::enumerate`].
pub fn enumerate_upto(
    spec: &SetSpec,
    max: u32,
    max_space: u64,
) -> Result<Vec<Vec<TwoColoredPartition>>> {
    (0..=max).map(|m| spec.enumerate(m, max_space)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine_params::{make_config, Weight};
    use crate::partitions::parse_parts;

    fn cfg(f: Family, n: u32, w: Weight) -> AlgebraConfig {
        make_config(f, n, w).unwrap()
    }

    #[test]
    fn z_examples() {
        let a = cfg(Family::A2Odd, 4, Weight::L0);
        assert!(!in_z(
            &parse_parts("33,31,28~,28,21~,21,15,9,7,1").unwrap(),
            &a
        ));
        assert!(in_z(&[], &a));
        let d = cfg(Family::D2, 3, Weight::L0);
        assert!(!in_z(&parse_parts("5,5").unwrap(), &d));
        assert!(in_z(&parse_parts("3,3").unwrap(), &d));
    }

    #[test]
    fn ao_examples() {
        let a = cfg(Family::A2Odd, 4, Weight::L0);
        assert!(in_ao1(
            &parse_parts("33,31,28~,28~,21,21,15,9,7,1").unwrap(),
            &a
        ));
        assert!(in_ao2(&parse_parts("47,45,42~,28~,15,9,8").unwrap(), &a));
        let b = cfg(Family::B1, 3, Weight::Ln);
        assert!(in_ao2(
            &parse_parts("31,17,15~,15~,13,7,5,3,3").unwrap(),
            &b
        ));
        let e = cfg(Family::A2Even, 3, Weight::L0);
        assert!(!in_ao2(&parse_parts("7").unwrap(), &e));
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(SetSpec::Overpartitions.count(3, u64::MAX).unwrap(), 8);
        assert_eq!(SetSpec::Strict.count(9, u64::MAX).unwrap(), 8);
        let d = cfg(Family::D2, 3, Weight::L0);
        assert_eq!(SetSpec::AO1(d.clone()).count(4, u64::MAX).unwrap(), 2);
        let zero = SetSpec::AO1(d).enumerate(0, u64::MAX).unwrap();
        assert_eq!(zero, vec![TwoColoredPartition::empty()]);
    }

    #[test]
    fn canonical_order_is_descending() {
        let all = SetSpec::Overpartitions.enumerate(3, u64::MAX).unwrap();
        let texts: Vec<String> = all.iter().map(|p| p.to_string()).collect();
        assert_eq!(
            texts,
            ["3", "3~", "2,1", "2,1~", "2~,1", "2~,1~", "1,1,1", "1,1,1~"]
        );
    }

    #[test]
    fn resource_guard_trips() {
        let err = SetSpec::Partitions.enumerate(30, 100).unwrap_err();
        assert!(matches!(err, Error::ResourceGuard(_)));
    }

    #[test]
    fn classical_examples() {
        let xs = ResidueSet::full(7);
        assert!(!in_classical(&[20, 13, 11, 7, 5, 3], ClassicalKind::AO2, 7, &xs).unwrap());
        assert!(in_classical(&[], ClassicalKind::AO1, 7, &xs).unwrap());
        let bad = ResidueSet(vec![9]);
        assert!(in_classical(&[1], ClassicalKind::AO1, 7, &bad).is_err());
    }

    #[test]
    fn residue_set_validation() {
        assert!(ResidueSet::new(vec![1, 3], 5).is_ok());
        assert!(ResidueSet::new(vec![3, 1], 5).is_err());
        assert!(ResidueSet::new(vec![0], 5).is_err());
        assert!(ResidueSet::new(vec![5], 5).is_err());
        assert!(ResidueSet::new(vec![], 5).is_err());
    }
}
