//! Two-colored partitions, overpartitions and ordinary partitions.
//!
//! A [`TwoColoredPartition`] stores its nonzero parts in weakly
//! `≻`-decreasing order; the zero tail is implicit. Ordinary partitions are
//! plain `Vec<u32>` in weakly decreasing order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::colored_parts::ColoredPart;
use crate::error::{Error, Result};

/// An ordinary partition: weakly decreasing positive integers.
pub type OrdinaryPartition = Vec<u32>;

/// A weakly `≻`-decreasing finite sequence of nonzero colored parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TwoColoredPartition {
    parts: Vec<ColoredPart>,
}

impl TwoColoredPartition {
    /// The empty partition.
    pub fn empty() -> Self {
        TwoColoredPartition { parts: Vec::new() }
    }

    /// Validates and wraps a part sequence.
    ///
    /// # Errors
    ///
    /// [`Error::Domain`] if a part is zero or the sequence increases.
    pub fn new(parts: Vec<ColoredPart>) -> Result<Self> {
        if let Some(z) = parts.iter().position(|p| p.is_zero()) {
            return Err(Error::Domain(format!("zero part at position {}", z + 1)));
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "parts not weakly decreasing at position {}: {} then {}",
                i + 1,
                parts[i],
                parts[i + 1]
            )));
        }
        Ok(TwoColoredPartition { parts })
    }

    /// Sorts the given parts into `≻`-decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<ColoredPart>) -> Self {
        parts.retain(|p| !p.is_zero());
        parts.sort_by(|a, b| b.cmp(a));
        TwoColoredPartition { parts }
    }

    /// Wraps a sequence already known to be valid.
    pub(crate) fn from_vec_unchecked(parts: Vec<ColoredPart>) -> Self {
        debug_assert!(parts.iter().all(|p| !p.is_zero()));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        TwoColoredPartition { parts }
    }

    /// Builds an unbarred partition from an ordinary one.
    pub fn from_ordinary(parts: &[u32]) -> Result<Self> {
        TwoColoredPartition::new(parts.iter().map(|&v| ColoredPart::plain(v)).collect())
    }

    /// The parts, largest first.
    pub fn parts(&self) -> &[ColoredPart] {
        &self.parts
    }

    /// Consumes the partition, returning its parts.
    pub fn into_parts(self) -> Vec<ColoredPart> {
        self.parts
    }

    /// The size `Σ`, the sum of part values.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|p| u64::from(p.value)).sum()
    }

    /// The length `ℓ`, the number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Whether there are no parts.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part counting from 1, or zero beyond the length.
    pub fn part(&self, i: usize) -> ColoredPart {
        if i == 0 {
            return ColoredPart::ZERO;
        }
        self.parts.get(i - 1).copied().unwrap_or(ColoredPart::ZERO)
    }

    /// The part values with bars forgotten.
    pub fn values(&self) -> Vec<u32> {
        self.parts.iter().map(|p| p.value).collect()
    }

    /// Whether the sequence is an overpartition: in each run of equal values
    /// only the first entry may be barred.
    pub fn is_overpartition(&self) -> bool {
        is_overpartition(&self.parts)
    }

    /// Whether no value occurs both barred and unbarred.
    pub fn is_in_pt(&self) -> bool {
        is_in_pt(&self.parts)
    }
}

/// Sum of part values of a raw sequence.
pub fn size(parts: &[ColoredPart]) -> u64 {
    parts.iter().map(|p| u64::from(p.value)).sum()
}

/// Number of entries of a raw sequence.
pub fn length<T>(parts: &[T]) -> usize {
    parts.len()
}

/// Concatenation `μ * λ` of raw sequences.
pub fn concat<T: Clone>(mu: &[T], lambda: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(mu.len() + lambda.len());
    out.extend_from_slice(mu);
    out.extend_from_slice(lambda);
    out
}

/// The reversed sequence.
pub fn reverse<T: Clone>(lambda: &[T]) -> Vec<T> {
    lambda.iter().rev().cloned().collect()
}

/// Overpartition test on a weakly decreasing sequence: every value has at
/// most one barred copy, which under `≻` is the last entry of its run.
pub fn is_overpartition(parts: &[ColoredPart]) -> bool {
    parts.iter().all(|p| !p.is_zero())
        && parts.windows(2).all(|w| w[0] >= w[1])
        && parts
            .windows(2)
            .all(|w| !(w[0].value == w[1].value && w[0].barred))
}

/// `𝒫ᵗ` test: no value appears both barred and unbarred.
pub fn is_in_pt(parts: &[ColoredPart]) -> bool {
    let mut seen: BTreeMap<u32, (bool, bool)> = BTreeMap::new();
    for p in parts {
        let e = seen.entry(p.value).or_insert((false, false));
        if p.barred {
            e.1 = true;
        } else {
            e.0 = true;
        }
        if e.0 && e.1 {
            return false;
        }
    }
    true
}

impl fmt::Display for TwoColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_parts(&self.parts))
    }
}

/// Renders parts as comma-separated tokens, e.g. `28~,21`.
pub fn format_parts(parts: &[ColoredPart]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses comma-separated tokens into raw parts; whitespace is ignored and
/// an empty string or `()` gives the empty sequence.
pub fn parse_parts(s: &str) -> Result<Vec<ColoredPart>> {
    let cleaned: String = s
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')')
        .collect();
    if cleaned.is_empty() {
        return Ok(Vec::new());
    }
    cleaned.split(',').map(ColoredPart::from_str).collect()
}

impl FromStr for TwoColoredPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TwoColoredPartition::new(parse_parts(s)?)
    }
}

/// Renders an ordinary partition as `(a,b,c)`.
pub fn format_ordinary(parts: &[u32]) -> String {
    let inner: Vec<String> = parts.iter().map(|v| v.to_string()).collect();
    format!("({})", inner.join(","))
}

/// The conjugate partition.
pub fn transpose(lambda: &[u32]) -> OrdinaryPartition {
    let Some(&first) = lambda.first() else {
        return Vec::new();
    };
    (0..first)
        .map(|i| lambda.iter().filter(|&&p| p > i).count() as u32)
        .collect()
}

/// Whether the parts are weakly decreasing and positive.
pub fn is_partition(lambda: &[u32]) -> bool {
    lambda.iter().all(|&p| p > 0) && lambda.windows(2).all(|w| w[0] >= w[1])
}

/// Whether the parts are strictly decreasing and positive.
pub fn is_strict(lambda: &[u32]) -> bool {
    lambda.iter().all(|&p| p > 0) && lambda.windows(2).all(|w| w[0] > w[1])
}

/// Whether the partition has only odd parts.
pub fn is_odd_partition(lambda: &[u32]) -> bool {
    is_partition(lambda) && lambda.iter().all(|p| p % 2 == 1)
}

/// Glaisher's map from odd partitions to strict partitions: a part `o`
/// occurring `k` times becomes the parts `o·2^j` for the binary digits `2^j`
/// of `k`.
///
/// # Errors
///
/// [`Error::Domain`] if an input part is even or zero.
pub fn odd_to_strict(lambda: &[u32]) -> Result<OrdinaryPartition> {
    let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in lambda {
        if p == 0 || p % 2 == 0 {
            return Err(Error::Domain(format!("part {p} is not odd")));
        }
        *mult.entry(p).or_default() += 1;
    }
    let mut out = Vec::new();
    for (&o, &k) in &mult {
        let mut bit = 0;
        while (k >> bit) > 0 {
            if (k >> bit) & 1 == 1 {
                out.push(o << bit);
            }
            bit += 1;
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Inverse of [`odd_to_strict`]: a part `o·2^j` with `o` odd becomes `2^j`
/// copies of `o`.
///
/// # Errors
///
/// [`Error::Domain`] if the input is not strict.
pub fn strict_to_odd(lambda: &[u32]) -> Result<OrdinaryPartition> {
    let mut sorted = lambda.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if !is_strict(&sorted) {
        return Err(Error::Domain(format!(
            "{} is not strict",
            format_ordinary(lambda)
        )));
    }
    let mut out = Vec::new();
    for &s in &sorted {
        let tz = s.trailing_zeros();
        let o = s >> tz;
        out.extend(std::iter::repeat_n(o, 1usize << tz));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// All partitions of `m` with parts at most `max_part` and at most
/// `max_len` parts, in reverse lexicographic order.
pub fn bounded_partitions(m: u32, max_part: u32, max_len: usize) -> Vec<OrdinaryPartition> {
    fn rec(rem: u32, cap: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<OrdinaryPartition>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        if left == 0 {
            return;
        }
        for p in (1..=cap.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `m`.
pub fn all_partitions(m: u32) -> Vec<OrdinaryPartition> {
    bounded_partitions(m, m, m as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tcp(s: &str) -> TwoColoredPartition {
        s.parse().unwrap()
    }

    #[test]
    fn size_examples() {
        assert_eq!(tcp("5,3~,3~,2,2,1").size(), 16);
        assert_eq!(TwoColoredPartition::empty().size(), 0);
        assert_eq!(tcp("31,17,15~,15~,13,7,5,3,3").size(), 109);
    }

    #[test]
    fn sequence_helpers() {
        assert_eq!(concat(&[5, 5], &[1, 1]), vec![5, 5, 1, 1]);
        assert_eq!(reverse(&[3, 2, 1]), vec![1, 2, 3]);
        assert_eq!(length(tcp("20,13,11,7~,5,3").parts()), 6);
    }

    #[test]
    fn pt_examples() {
        assert!(tcp("5,3~,3~,2,2,1").is_in_pt());
        let bad = parse_parts("5,3,3~,2,2,1").unwrap();
        assert!(!is_in_pt(&bad));
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(transpose(&[7, 4, 3]), vec![3, 3, 3, 2, 1, 1, 1]);
        assert_eq!(transpose(&[]), Vec::<u32>::new());
        assert_eq!(transpose(&[5]), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn glaisher_fixed_values() {
        assert_eq!(odd_to_strict(&[1, 1, 1]).unwrap(), vec![2, 1]);
        assert_eq!(odd_to_strict(&[]).unwrap(), Vec::<u32>::new());
        assert_eq!(strict_to_odd(&[6, 1]).unwrap(), vec![3, 3, 1]);
        assert!(odd_to_strict(&[2]).is_err());
        assert!(strict_to_odd(&[2, 2]).is_err());
    }

    #[test]
    fn rejects_increasing_input() {
        assert!("1,2".parse::<TwoColoredPartition>().is_err());
        assert!("2~,2".parse::<TwoColoredPartition>().is_err());
        assert!("0".parse::<TwoColoredPartition>().is_err());
        assert!("".parse::<TwoColoredPartition>().unwrap().is_empty());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|m| all_partitions(m).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        assert_eq!(bounded_partitions(5, 2, 10).len(), 3);
        assert_eq!(bounded_partitions(5, 5, 2).len(), 3);
    }
}
