//! The `𝖴`-modular diagram and the `𝖫`-hook algorithms (E′)/(E) and (F).
//!
//! A member `Y` of `𝒜𝒪₁` is split into rows and columns. Parts that are not
//! multiples of `𝖴` are rows. Inside a `𝖴`-component every group yields one
//! row (its first entry) plus a column `k` for each further copy of `k𝖴`,
//! except that an unbarred top group consists of columns only. The one
//! exception to the exception is a component at the very bottom of `Y`
//! that ends in `𝖴̄` and has an even number of groups: its unbarred top
//! group still yields a row. For families without codings every multiple
//! of `𝖴` is a column.
//!
//! The rows are then lowered by (E′) until they land in the target set;
//! the per-block shifts `εᵢ`, the row counts `rᵢ` and the column counts
//! `lᵢ` determine `λ`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::affine_params::AlgebraConfig;
use crate::colored_parts::ColoredPart;
use crate::error::{Error, Result};
use crate::partition_sets::{in_ao1, in_z};
use crate::partitions::TwoColoredPartition;

use super::coding::{components, groups, p_o, p_o_inv, p_s, p_s_inv};
use super::descend_to_target;

/// Default bound on the number of shift profiles examined by (F).
pub const DEFAULT_F_LIMIT: u64 = 1 << 22;

/// Output of the row-shift formulation (E′).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EPrime {
    /// Rows of the input, largest first.
    pub rows: Vec<ColoredPart>,
    /// Column heights in units of `𝖴`, largest first.
    pub columns: Vec<u32>,
    /// The lowered rows `Y′` in `𝖯ˢ` canonical form, largest first.
    pub reduced: Vec<ColoredPart>,
}

impl EPrime {
    /// Rebuilds the coded input from its rows and columns: columns of
    /// height `k` become parts `k𝖴`, and the bars of every `𝖴`-component
    /// are restored from the positions of its rows.
    ///
    /// # Errors
    ///
    /// [`Error::Domain`] if the rows and columns do not form a coded
    /// `𝒜𝒪₁` sequence.
    pub fn reconstruct(&self, cfg: &AlgebraConfig) -> Result<Vec<ColoredPart>> {
        let mut seq: Vec<(ColoredPart, bool)> = self.rows.iter().map(|&p| (p, true)).collect();
        seq.extend(
            self.columns
                .iter()
                .map(|&k| (ColoredPart::plain(k * cfg.u), false)),
        );
        seq.sort_by_key(|&(p, row)| std::cmp::Reverse((p, row)));
        rebar(cfg, &seq)
            .map(|y| p_o(cfg, &y))
            .ok_or_else(|| Error::Domain("rows and columns do not reassemble".into()))
    }
}

/// The parameters `lᵢ`, `εᵢ`, `rᵢ` of a `𝖴`-modular diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModularDiagram {
    /// Number of rows `t = ℓ(Y′)`.
    pub t: usize,
    /// First index with `r_{e-1} = t`.
    pub e: usize,
    /// `lᵢ` for `i = 0, 1, …` (entry 0 unused and zero).
    pub l: Vec<u32>,
    /// `εᵢ` for `i = 0, 1, …`.
    pub eps: Vec<u32>,
    /// `rᵢ` for `i = 0, 1, …`.
    pub r: Vec<usize>,
}

impl ModularDiagram {
    /// The table truncated to indices `0..=t`.
    pub fn table(&self) -> (Vec<u32>, Vec<u32>, Vec<usize>) {
        let n = self.t + 1;
        let pad = |v: usize| v.min(n);
        (
            self.l[..pad(self.l.len())].to_vec(),
            self.eps[..pad(self.eps.len())].to_vec(),
            self.r[..pad(self.r.len())].to_vec(),
        )
    }
}

/// Splits a member of `𝒜𝒪₁` into rows and columns.
pub fn split_rows_columns(cfg: &AlgebraConfig, y: &[ColoredPart]) -> (Vec<ColoredPart>, Vec<u32>) {
    let u = cfg.u;
    let mut rows = Vec::new();
    let mut cols = Vec::new();
    if cfg.is_coded() {
        let comps = components(cfg, y);
        let mut in_comp = vec![false; y.len()];
        for &(i, j) in &comps {
            in_comp[i..j].iter_mut().for_each(|f| *f = true);
            let gs = groups(y, i, j);
            let at_bottom = j == y.len() && y[y.len() - 1] == ColoredPart::bar(u);
            let promoted = at_bottom && gs.len().is_multiple_of(2);
            for (gi, &(a, b)) in gs.iter().enumerate() {
                let all_columns = gi == 0 && !y[a].barred && !promoted;
                if all_columns {
                    cols.extend(y[a..b].iter().map(|p| p.value / u));
                } else {
                    rows.push(y[a]);
                    cols.extend(y[a + 1..b].iter().map(|p| p.value / u));
                }
            }
        }
        rows.extend(y.iter().zip(&in_comp).filter(|(_, &c)| !c).map(|(p, _)| *p));
    } else {
        for &p in y {
            if cfg.is_u_multiple(p.value) {
                cols.push(p.value / u);
            } else {
                rows.push(p);
            }
        }
    }
    rows.sort_by(|a, b| b.cmp(a));
    cols.sort_by(|a, b| b.cmp(a));
    (rows, cols)
}

/// (E′) on a member of `𝒜𝒪₁` (uncoded).
///
/// # Errors
///
/// [`Error::Domain`] if the input is outside `𝒜𝒪₁` or the descent stalls.
pub fn e_prime_uncoded(cfg: &AlgebraConfig, y: &[ColoredPart]) -> Result<EPrime> {
    if !in_ao1(y, cfg) {
        return Err(Error::Domain("input is not in AO1".into()));
    }
    let (rows, columns) = split_rows_columns(cfg, y);
    let reduced = descend_to_target(cfg, rows.clone())?;
    Ok(EPrime {
        rows,
        columns,
        reduced,
    })
}

/// (E′) on a member of `𝒜𝒪₁ₒ`: the row-shift formulation.
///
/// # Errors
///
/// [`Error::Domain`] if the input is not a coded `𝒜𝒪₁` sequence.
pub fn algo_e_prime(cfg: &AlgebraConfig, coded: &[ColoredPart]) -> Result<EPrime> {
    let y = p_o_inv(cfg, coded)
        .filter(|l| p_o(cfg, l) == coded)
        .ok_or_else(|| Error::Domain("input is not a coded AO1 sequence".into()))?;
    e_prime_uncoded(cfg, &y)
}

fn blocks_and_shifts(cfg: &AlgebraConfig, ep: &EPrime) -> Result<(Vec<u32>, Vec<u32>)> {
    if ep.rows.len() != ep.reduced.len() {
        return Err(Error::Domain("row count changed during descent".into()));
    }
    let u = cfg.u;
    let mut blocks = Vec::with_capacity(ep.rows.len());
    let mut shifts = Vec::with_capacity(ep.rows.len());
    for (a, b) in ep.rows.iter().rev().zip(ep.reduced.iter().rev()) {
        if a.value < b.value || (a.value - b.value) % u != 0 {
            return Err(Error::Domain(format!("row {a} is not a lift of {b}")));
        }
        blocks.push(a.value / u);
        shifts.push((a.value - b.value) / u);
    }
    Ok((blocks, shifts))
}

fn count_map(cols: &[u32]) -> BTreeMap<u32, u32> {
    let mut m = BTreeMap::new();
    for &c in cols {
        *m.entry(c).or_default() += 1;
    }
    m
}

struct Profile {
    t: usize,
    e: usize,
    eps: Vec<i64>,
    r: Vec<usize>,
}

impl Profile {
    fn new(t: usize, blocks: &[u32], shifts: &[u32], k_max: usize) -> Result<Profile> {
        let mut eps = vec![0i64; k_max + 1];
        let mut r = vec![0usize; k_max + 1];
        for k in 0..=k_max {
            let mut here = blocks
                .iter()
                .zip(shifts)
                .filter(|(&b, _)| b as usize == k)
                .map(|(_, &s)| i64::from(s));
            eps[k] = match here.next() {
                Some(s) => {
                    if here.any(|x| x != s) {
                        return Err(Error::Domain(format!("non-uniform shift in block {k}")));
                    }
                    s
                }
                None if k > 0 => eps[k - 1],
                None => 0,
            };
            r[k] = blocks.iter().filter(|&&b| b as usize <= k).count();
        }
        if eps[0] != 0 {
            return Err(Error::Domain("rows of block 0 were shifted".into()));
        }
        let r_at = |k: usize| if k <= k_max { r[k] } else { t };
        let e = (0..=k_max + 1).find(|&k| r_at(k) == t).unwrap_or(k_max + 1) + 1;
        Ok(Profile { t, e, eps, r })
    }

    fn eps(&self, i: usize) -> i64 {
        if i < self.e {
            self.eps.get(i).copied().unwrap_or(0)
        } else {
            0
        }
    }

    fn r(&self, i: usize) -> usize {
        if i < self.e {
            self.r.get(i).copied().unwrap_or(self.t)
        } else {
            0
        }
    }

    fn jump(&self, i: usize) -> i64 {
        self.eps(i) - self.eps(i - 1)
    }

    fn hooks(&self, i: usize) -> i64 {
        (1..=i)
            .filter(|&j| j + self.t - self.r(j - 1) == i)
            .map(|j| self.jump(j))
            .sum()
    }
}

/// `λ` from the closed formula
/// `μᵢ = lᵢ - (εᵢ - εᵢ₋₁) + Σ_{j ≤ i, j + t - r_{j-1} = i} (εⱼ - εⱼ₋₁)`.
///
/// # Errors
///
/// [`Error::Domain`] if the parameters are inconsistent or some `μᵢ` is
/// negative or lies beyond `t`.
pub fn lambda_formula(cfg: &AlgebraConfig, ep: &EPrime) -> Result<(ModularDiagram, Vec<u32>)> {
    let (blocks, shifts) = blocks_and_shifts(cfg, ep)?;
    let t = ep.reduced.len();
    let cols = count_map(&ep.columns);
    let k_max = blocks
        .iter()
        .chain(ep.columns.iter())
        .copied()
        .max()
        .unwrap_or(0) as usize;
    let prof = Profile::new(t, &blocks, &shifts, k_max)?;
    let n = t.max(k_max);
    let mut mu = vec![0i64; n + 1];
    for (i, slot) in mu.iter_mut().enumerate().skip(1) {
        let l_i = i64::from(cols.get(&(i as u32)).copied().unwrap_or(0));
        *slot = l_i - prof.jump(i) + prof.hooks(i);
        if *slot < 0 {
            return Err(Error::Domain(format!("negative multiplicity at {i}")));
        }
        if *slot > 0 && i > t {
            return Err(Error::Domain(format!("part {i} exceeds the row count {t}")));
        }
    }
    let mut lambda = Vec::new();
    for i in (1..=t).rev() {
        lambda.extend(std::iter::repeat_n(i as u32, mu[i] as usize));
    }
    let diagram = ModularDiagram {
        t,
        e: prof.e,
        l: (0..=n)
            .map(|i| {
                if i == 0 {
                    0
                } else {
                    cols.get(&(i as u32)).copied().unwrap_or(0)
                }
            })
            .collect(),
        eps: (0..=n).map(|i| prof.eps(i) as u32).collect(),
        r: (0..=n).map(|i| prof.r(i)).collect(),
    };
    Ok((diagram, lambda))
}

/// `λ` by walking the diagram from the bottom row upward: each rise of the
/// row shift at the first row of block `j` removes an `𝖫`-hook made of one
/// column `j` and one block from each row above, of length `j` plus the
/// number of rows from that row to the top; every remaining column `i`
/// removes a part `i`.
///
/// # Errors
///
/// [`Error::Domain`] if the shifts are not a valid hook profile.
pub fn diagram_walk_lambda(cfg: &AlgebraConfig, ep: &EPrime) -> Result<Vec<u32>> {
    let (blocks, shifts) = blocks_and_shifts(cfg, ep)?;
    let t = blocks.len();
    let mut cols = count_map(&ep.columns);
    let mut parts = Vec::new();
    let mut prev_shift = 0u32;
    let mut prev_block: Option<u32> = None;
    for q in 0..t {
        let (b, s) = (blocks[q], shifts[q]);
        if prev_block == Some(b) && s != prev_shift {
            return Err(Error::Domain(format!("non-uniform shift in block {b}")));
        }
        if s < prev_shift || s > prev_shift + 1 {
            return Err(Error::Domain(format!(
                "shift jumps from {prev_shift} to {s}"
            )));
        }
        if s == prev_shift + 1 {
            if b == 0 {
                return Err(Error::Domain("rows of block 0 were shifted".into()));
            }
            let c = cols
                .get_mut(&b)
                .filter(|c| **c > 0)
                .ok_or_else(|| Error::Domain(format!("no column {b} for a hook")))?;
            *c -= 1;
            parts.push(b + (t - q) as u32);
        }
        prev_shift = s;
        prev_block = Some(b);
    }
    for (&i, &k) in &cols {
        parts.extend(std::iter::repeat_n(i, k as usize));
    }
    if let Some(&big) = parts.iter().find(|&&p| p as usize > t) {
        return Err(Error::Domain(format!(
            "part {big} exceeds the row count {t}"
        )));
    }
    parts.sort_by(|a, b| b.cmp(a));
    Ok(parts)
}

/// Output of algorithm (E).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EResult {
    /// `Y′` with every multiple of `𝖴` barred (`𝖯ˢ⁻¹` form).
    pub reduced: TwoColoredPartition,
    /// `Y′` in `𝖯ˢ` canonical form.
    pub canonical: Vec<ColoredPart>,
    /// The extracted partition, `λ₁ ≤ ℓ(Y′)`.
    pub lambda: Vec<u32>,
    /// The modular diagram parameters.
    pub diagram: ModularDiagram,
}

pub(crate) fn e_uncoded(cfg: &AlgebraConfig, y: &[ColoredPart]) -> Result<EResult> {
    let ep = e_prime_uncoded(cfg, y)?;
    let (diagram, lambda) = lambda_formula(cfg, &ep)?;
    let reduced = p_s_inv(cfg, &ep.reduced);
    Ok(EResult {
        reduced: TwoColoredPartition::new(reduced)?,
        canonical: ep.reduced,
        lambda,
        diagram,
    })
}

/// Algorithm (E) on a member of `𝒜𝒪₁ₒ`.
///
/// # Errors
///
/// [`Error::Domain`] if the input is not a coded `𝒜𝒪₁` sequence.
pub fn algo_e(cfg: &AlgebraConfig, coded: &[ColoredPart]) -> Result<EResult> {
    let y = p_o_inv(cfg, coded)
        .filter(|l| p_o(cfg, l) == coded)
        .ok_or_else(|| Error::Domain("input is not a coded AO1 sequence".into()))?;
    e_uncoded(cfg, &y)
}

fn rebar(cfg: &AlgebraConfig, seq: &[(ColoredPart, bool)]) -> Option<Vec<ColoredPart>> {
    let u = cfg.u;
    let mut out: Vec<ColoredPart> = seq.iter().map(|(p, _)| *p).collect();
    if !cfg.is_coded() {
        if seq
            .iter()
            .any(|(p, row)| *row && cfg.is_u_multiple(p.value))
        {
            return None;
        }
        return Some(out);
    }
    let n = seq.len();
    let mut i = 0;
    while i < n {
        if !cfg.is_u_multiple(seq[i].0.value) {
            i += 1;
            continue;
        }
        let mut j = i;
        while j + 1 < n
            && cfg.is_u_multiple(seq[j + 1].0.value)
            && matches!(seq[j].0.value - seq[j + 1].0.value, d if d == 0 || d == u)
        {
            j += 1;
        }
        let mut vals: Vec<(u32, usize)> = Vec::new();
        for (p, row) in &seq[i..=j] {
            match vals.last_mut() {
                Some(last) if last.0 == p.value => last.1 += usize::from(*row),
                _ => vals.push((p.value, usize::from(*row))),
            }
        }
        if vals.iter().any(|v| v.1 > 1) || vals[1..].iter().any(|v| v.1 != 1) {
            return None;
        }
        let at_bottom = j == n - 1 && vals.last().is_some_and(|v| v.0 == u);
        let top_bar = vals[0].1 == 1 && !(at_bottom && vals.len().is_multiple_of(2));
        for slot in &mut out[i..=j] {
            let gi = vals
                .iter()
                .position(|v| v.0 == slot.value)
                .expect("value present");
            *slot = slot.with_bar(if gi % 2 == 0 { top_bar } else { !top_bar });
        }
        i = j + 1;
    }
    Some(out)
}

fn build_candidate(
    cfg: &AlgebraConfig,
    rows_asc: &[ColoredPart],
    fb: &[u32],
    delta: &[u32],
    mu: &BTreeMap<u32, u32>,
    lambda_max: u32,
) -> Option<Vec<ColoredPart>> {
    let t = rows_asc.len();
    let u = cfg.u;
    let ob: Vec<u32> = fb.iter().zip(delta).map(|(f, d)| f + d).collect();
    let k_max = ob.iter().copied().max().unwrap_or(0).max(lambda_max) as usize + 1;
    let prof = Profile::new(t, &ob, delta, k_max).ok()?;
    let mut seq: Vec<(ColoredPart, bool)> = rows_asc
        .iter()
        .zip(delta)
        .map(|(p, d)| (ColoredPart::new(p.value + d * u, p.barred), true))
        .collect();
    for i in 1..=k_max + t + 1 {
        let want = i64::from(mu.get(&(i as u32)).copied().unwrap_or(0));
        let l_i = want + prof.jump(i) - prof.hooks(i);
        if l_i < 0 {
            return None;
        }
        seq.extend(std::iter::repeat_n(
            (ColoredPart::plain(i as u32 * u), false),
            l_i as usize,
        ));
    }
    seq.sort_by_key(|&(p, row)| std::cmp::Reverse((p, row)));
    rebar(cfg, &seq)
}

/// All members `Y` of `𝒜𝒪₁` with `E(Y) = (Y′, λ)`, for `Y′` in canonical
/// form; the search runs over every admissible row-shift profile.
pub(crate) fn f_candidates(
    cfg: &AlgebraConfig,
    canonical: &[ColoredPart],
    lambda: &[u32],
    limit: u64,
) -> Result<Vec<Vec<ColoredPart>>> {
    let t = canonical.len();
    let lambda_max = lambda.first().copied().unwrap_or(0);
    if lambda_max as usize > t {
        return Err(Error::Domain(format!(
            "largest part {lambda_max} exceeds the length {t}"
        )));
    }
    if t == 0 {
        return Ok(vec![Vec::new()]);
    }
    let profiles = 1u64
        .checked_shl((t - 1) as u32)
        .filter(|&p| p <= limit)
        .ok_or_else(|| {
            Error::ResourceGuard(format!(
                "insertion search over 2^{} shift profiles exceeds {limit}",
                t - 1
            ))
        })?;
    let rows_asc: Vec<ColoredPart> = canonical.iter().rev().copied().collect();
    let fb: Vec<u32> = rows_asc.iter().map(|p| p.value / cfg.u).collect();
    let mu = count_map(lambda);
    let mut found = Vec::new();
    for mask in 0..profiles {
        let mut delta = vec![0u32; t];
        for q in 1..t {
            delta[q] = delta[q - 1] + u32::from((mask >> (t - 1 - q)) & 1 == 1);
        }
        let Some(y) = build_candidate(cfg, &rows_asc, &fb, &delta, &mu, lambda_max) else {
            continue;
        };
        if !in_z(&y, cfg) || !in_ao1(&y, cfg) {
            continue;
        }
        if let Ok(back) = e_uncoded(cfg, &y) {
            if back.canonical == canonical && back.lambda == lambda {
                found.push(y);
            }
        }
    }
    Ok(found)
}

/// Algorithm (F): the member of `𝒜𝒪₁ₒ` whose (E)-image is `(Y′, λ)`.
///
/// # Errors
///
/// [`Error::Domain`] if `λ₁ > ℓ(Y′)` or no preimage exists, and
/// [`Error::ResourceGuard`] if the search exceeds `limit` profiles.
pub fn algo_f(
    cfg: &AlgebraConfig,
    reduced: &TwoColoredPartition,
    lambda: &[u32],
    limit: u64,
) -> Result<Vec<ColoredPart>> {
    let canonical = p_s(cfg, &p_s_inv(cfg, reduced.parts()));
    let found = f_candidates(cfg, &canonical, lambda, limit)?;
    let y = found
        .into_iter()
        .next()
        .ok_or_else(|| Error::Domain("no preimage under algorithm E".into()))?;
    Ok(p_o(cfg, &y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine_params::{make_config, Family, Weight};
    use crate::partitions::parse_parts;

    fn a7() -> AlgebraConfig {
        make_config(Family::A2Odd, 4, Weight::L1).unwrap()
    }

    #[test]
    fn worked_example_one() {
        let c = a7();
        let coded = parse_parts("33,31,28~,28,21~,21,15,9,7,1").unwrap();
        let r = algo_e(&c, &coded).unwrap();
        assert_eq!(r.reduced.to_string(), "26,24,21~,14~,8,2,1");
        assert_eq!(r.lambda, vec![7, 4, 3]);
        let (l, eps, rr) = r.diagram.table();
        assert_eq!(&l[1..], &[1, 0, 1, 1, 0, 0, 0]);
        assert_eq!(&eps[1..], &[1, 1, 1, 1, 0, 0, 0]);
        assert_eq!(&rr[..5], &[1, 2, 3, 4, 7]);
    }

    #[test]
    fn walk_agrees_on_example() {
        let c = a7();
        let coded = parse_parts("33,31,28~,28,21~,21,15,9,7,1").unwrap();
        let ep = algo_e_prime(&c, &coded).unwrap();
        assert_eq!(diagram_walk_lambda(&c, &ep).unwrap(), vec![7, 4, 3]);
    }

    #[test]
    fn algo_f_inverts_example_two() {
        let c = a7();
        let reduced: TwoColoredPartition = "19,17,14~,8,2,1".parse().unwrap();
        let y = algo_f(&c, &reduced, &[6, 6, 4, 3], DEFAULT_F_LIMIT).unwrap();
        assert_eq!(y, parse_parts("33,31,28,28,21~,21,15,9,7,1").unwrap());
    }

    #[test]
    fn algo_f_trivial_and_errors() {
        let c = a7();
        let reduced: TwoColoredPartition = "8,2,1".parse().unwrap();
        assert_eq!(
            algo_f(&c, &reduced, &[], DEFAULT_F_LIMIT).unwrap(),
            reduced.parts()
        );
        assert!(algo_f(&c, &reduced, &[4], DEFAULT_F_LIMIT).is_err());
    }
}
