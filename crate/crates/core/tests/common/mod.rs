//! Shared configurations and brute-force oracles for the integration tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

use yw_core::affine_params::{make_config, AlgebraConfig, Family, Weight};
use yw_core::colored_parts::ColoredPart;

/// Every level-1 row of the parameter table at its smallest accepted rank,
/// followed by one larger rank per family.
pub fn acceptance_configs() -> Vec<AlgebraConfig> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for &w in family.weights() {
            out.push(make_config(family, family.min_rank(), w).unwrap());
        }
    }
    for (family, rank) in [
        (Family::A2Even, 2),
        (Family::A2Odd, 3),
        (Family::B1, 3),
        (Family::D1, 4),
        (Family::D2, 4),
    ] {
        out.push(make_config(family, rank, Weight::L0).unwrap());
    }
    out
}

/// Independent table of the exponents `κᵢ`.
pub fn kappa_oracle(cfg: &AlgebraConfig, i: u32) -> u32 {
    let n = cfg.rank;
    match (cfg.family, cfg.weight) {
        (Family::A2Even, _) => {
            if i.is_multiple_of(2 * n + 1) {
                0
            } else {
                1
            }
        }
        (Family::A2Odd, _) | (Family::D2, _) => 1,
        (Family::B1, Weight::Ln) => {
            if i % (2 * n) == n {
                2
            } else {
                1
            }
        }
        (Family::B1, _) => {
            if i.is_multiple_of(2 * n) {
                2
            } else {
                1
            }
        }
        (Family::D1, _) => {
            if i.is_multiple_of(n - 1) {
                2
            } else {
                1
            }
        }
    }
}

/// Number of sets of labelled parts `(i, c)` with `c < κᵢ` summing to `m`,
/// by direct recursion over the labels.
pub fn product_count_oracle(cfg: &AlgebraConfig, m: u32) -> u64 {
    let labels: Vec<u32> = (1..=m)
        .flat_map(|i| std::iter::repeat_n(i, kappa_oracle(cfg, i) as usize))
        .collect();
    fn go(labels: &[u32], rem: u32, memo: &mut BTreeMap<(usize, u32), u64>) -> u64 {
        if rem == 0 {
            return 1;
        }
        if labels.is_empty() {
            return 0;
        }
        if let Some(&v) = memo.get(&(labels.len(), rem)) {
            return v;
        }
        let skip = go(&labels[1..], rem, memo);
        let take = if labels[0] <= rem {
            go(&labels[1..], rem - labels[0], memo)
        } else {
            0
        };
        memo.insert((labels.len(), rem), skip + take);
        skip + take
    }
    go(&labels, m, &mut BTreeMap::new())
}

/// All ordinary partitions of `m` with parts at most `max`, by recursion.
pub fn partitions_oracle(m: u32, max: u32) -> Vec<Vec<u32>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(m)).rev() {
        for mut rest in partitions_oracle(m - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Strict partitions of `m`, by recursion.
pub fn strict_oracle(m: u32) -> Vec<Vec<u32>> {
    partitions_oracle(m, m)
        .into_iter()
        .filter(|p| p.windows(2).all(|w| w[0] > w[1]))
        .collect()
}

/// Partitions of `m` into odd parts, by recursion.
pub fn odd_oracle(m: u32) -> Vec<Vec<u32>> {
    partitions_oracle(m, m)
        .into_iter()
        .filter(|p| p.iter().all(|x| x % 2 == 1))
        .collect()
}

/// Every `≻`-weakly-decreasing sequence of nonzero colored parts of total
/// value `m`, with no pruning beyond the order.
pub fn all_two_colored(m: u32) -> Vec<Vec<ColoredPart>> {
    fn go(rem: u32, max: ColoredPart, cur: &mut Vec<ColoredPart>, out: &mut Vec<Vec<ColoredPart>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for v in (1..=rem.min(max.value)).rev() {
            for bar in [false, true] {
                let p = ColoredPart::new(v, bar);
                if p > max {
                    continue;
                }
                cur.push(p);
                go(rem - v, p, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(
        m,
        ColoredPart::new(m.max(1), false),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Nonempty subsets of `{1, …, modulus-1}` encoded as bit masks.
pub fn nonempty_subsets(modulus: u32) -> Vec<Vec<u32>> {
    let k = modulus.saturating_sub(1);
    (1u32..(1 << k))
        .map(|mask| (1..=k).filter(|&x| mask >> (x - 1) & 1 == 1).collect())
        .collect()
}
