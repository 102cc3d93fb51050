//! Numeric parameters of each affine type and level-1 weight.
//!
//! | family | weights | `(z₁,z₂,z₃)` | `𝖴` | `𝖵` |
//! |---|---|---|---|---|
//! | `A⁽²⁾₂ₙ` | Λ₀ | `(0,0,2n+1)` | `2n+1` | `2n+1` |
//! | `A⁽²⁾₂ₙ₋₁` | Λ₀, Λ₁ | `(2n-1,0,2n-1)` | `2n-1` | `2n-1` |
//! | `B⁽¹⁾ₙ` | Λ₀, Λ₁ | `(2n,0,n)` | `2n` | `2n` |
//! | `B⁽¹⁾ₙ` | Λₙ | `(n,2n,n)` | `2n` | `2n` |
//! | `D⁽¹⁾ₙ` | Λ₀, Λ₁, Λₙ₋₁, Λₙ | `(n-1,0,n-1)` | `2n-2` | `n-1` |
//! | `D⁽²⁾ₙ₊₁` | Λ₀, Λₙ | `(0,0,n+1)` | `2n+2` | `n+1` |
//!
//! For `D⁽²⁾ₙ₊₁` the rank passed to [`make_config`] is the subscript `n+1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::colored_parts::ColoredPart;
use crate::error::{Error, Result};

/// Affine type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `A⁽²⁾₂ₙ`
    A2Even,
    /// `A⁽²⁾₂ₙ₋₁`
    A2Odd,
    /// `B⁽¹⁾ₙ`
    B1,
    /// `D⁽¹⁾ₙ`
    D1,
    /// `D⁽²⁾ₙ₊₁`
    D2,
}

impl Family {
    /// Every family, in table order.
    pub const ALL: [Family; 5] = [
        Family::A2Even,
        Family::A2Odd,
        Family::B1,
        Family::D1,
        Family::D2,
    ];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Family::A2Even => "A2even",
            Family::A2Odd => "A2odd",
            Family::B1 => "B1",
            Family::D1 => "D1",
            Family::D2 => "D2",
        }
    }

    /// Level-1 weights of the family.
    pub fn weights(self) -> &'static [Weight] {
        match self {
            Family::A2Even => &[Weight::L0],
            Family::A2Odd => &[Weight::L0, Weight::L1],
            Family::B1 => &[Weight::L0, Weight::L1, Weight::Ln],
            Family::D1 => &[Weight::L0, Weight::L1, Weight::LnMinus1, Weight::Ln],
            Family::D2 => &[Weight::L0, Weight::Ln],
        }
    }

    /// Smallest accepted rank.
    pub fn min_rank(self) -> u32 {
        match self {
            Family::A2Even => 1,
            Family::A2Odd | Family::B1 => 2,
            Family::D1 | Family::D2 => 3,
        }
    }

    /// Smallest rank in the standard classification; smaller accepted ranks
    /// carry a warning.
    pub fn standard_min_rank(self) -> u32 {
        match self {
            Family::A2Even => 1,
            Family::A2Odd | Family::B1 | Family::D2 => 3,
            Family::D1 => 4,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidConfig(format!("unknown family '{s}'")))
    }
}

/// Level-1 fundamental weight label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Weight {
    /// `Λ₀`
    L0,
    /// `Λ₁`
    L1,
    /// `Λₙ₋₁`
    LnMinus1,
    /// `Λₙ`
    Ln,
}

impl Weight {
    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Weight::L0 => "L0",
            Weight::L1 => "L1",
            Weight::LnMinus1 => "Ln-1",
            Weight::Ln => "Ln",
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Weight::L0, Weight::L1, Weight::LnMinus1, Weight::Ln]
            .into_iter()
            .find(|w| w.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidConfig(format!("unknown weight '{s}'")))
    }
}

/// A resolved parameter set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraConfig {
    /// Affine type.
    pub family: Family,
    /// Rank as passed in (the subscript `n+1` for `D⁽²⁾ₙ₊₁`).
    pub rank: u32,
    /// Level-1 weight label.
    pub weight: Weight,
    /// `z₁`
    pub z1: u32,
    /// `z₂`
    pub z2: u32,
    /// `z₃`
    pub z3: u32,
    /// `𝖴`
    pub u: u32,
    /// `𝖵`
    pub v: u32,
    /// `Δ`
    pub delta: u32,
    /// `ε`
    pub eps: u32,
    /// `ε̃`
    pub eps_tilde: u32,
    /// Set when the rank is below the standard minimum.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

/// Resolves a family, rank and weight to its parameter set.
///
/// # Errors
///
/// [`Error::InvalidConfig`] when the rank is below the accepted minimum or
/// the weight is not level 1 for the family.
pub fn make_config(family: Family, rank: u32, weight: Weight) -> Result<AlgebraConfig> {
    if rank < family.min_rank() {
        return Err(Error::InvalidConfig(format!(
            "rank {rank} below minimum {} for {family}",
            family.min_rank()
        )));
    }
    if !family.weights().contains(&weight) {
        return Err(Error::InvalidConfig(format!(
            "weight {weight} is not level 1 for {family}"
        )));
    }
    if rank > 10_000 {
        return Err(Error::InvalidConfig(format!("rank {rank} too large")));
    }
    let n = rank;
    let (z1, z2, z3, u, v) = match family {
        Family::A2Even => (0, 0, 2 * n + 1, 2 * n + 1, 2 * n + 1),
        Family::A2Odd => (2 * n - 1, 0, 2 * n - 1, 2 * n - 1, 2 * n - 1),
        Family::B1 if weight == Weight::Ln => (n, 2 * n, n, 2 * n, 2 * n),
        Family::B1 => (2 * n, 0, n, 2 * n, 2 * n),
        Family::D1 => (n - 1, 0, n - 1, 2 * n - 2, n - 1),
        Family::D2 => (0, 0, n, 2 * n, n),
    };
    let eps = if family == Family::D2 { 2 } else { 1 };
    let eps_tilde = if family == Family::B1 && weight != Weight::Ln {
        2
    } else {
        1
    };
    let warning = (rank < family.standard_min_rank()).then(|| {
        format!(
            "rank {rank} is below the standard minimum {} for {family}",
            family.standard_min_rank()
        )
    });
    Ok(AlgebraConfig {
        family,
        rank,
        weight,
        z1,
        z2,
        z3,
        u,
        v,
        delta: u,
        eps,
        eps_tilde,
        warning,
    })
}

impl AlgebraConfig {
    /// Whether the config is `B⁽¹⁾ₙ` with weight `Λₙ`.
    pub fn is_b1_ln(&self) -> bool {
        self.family == Family::B1 && self.weight == Weight::Ln
    }

    /// Whether multiples of `𝖴` carry bar codings (`𝖯ᵒ`, `𝖯ˢ` nontrivial).
    pub fn is_coded(&self) -> bool {
        matches!(self.family, Family::A2Odd | Family::D1)
            || (self.family == Family::B1 && !self.is_b1_ln())
    }

    /// Whether `v` is a positive multiple of `𝖴`.
    pub fn is_u_multiple(&self, v: u32) -> bool {
        v > 0 && v.is_multiple_of(self.u)
    }

    /// Membership in `𝖭{(z₁,z₂)}` for a nonzero part.
    ///
    /// Every unbarred value is allowed. A barred value must be `z̄₁` or
    /// `k·z̄₁ + z₂` with `k ≥ 1`; for `B⁽¹⁾ₙ`, `Λₙ` barred multiples of `𝖴`
    /// are excluded.
    pub fn allows(&self, p: ColoredPart) -> bool {
        if p.is_zero() || !p.barred {
            return true;
        }
        let (v, z1, z2) = (p.value, self.z1, self.z2);
        if z1 == 0 {
            return false;
        }
        let on_ladder = v == z1 || (v > z2 && (v - z2) % z1 == 0);
        on_ladder && !(z2 > 0 && v % (2 * z1) == 0)
    }

    /// Whether two equal adjacent copies of `p` are allowed.
    pub fn repeatable(&self, p: ColoredPart) -> bool {
        let (v, z1, z2, z3) = (p.value, self.z1, self.z2, self.z3);
        if v == 0 {
            return true;
        }
        let ladder = z1 > 0 && v > z2 && (v - z2) % z1 == 0;
        if p.barred {
            ladder || v == z1
        } else {
            ladder || (z1 > 0 && v == z2) || v == z1 || (z3 > 0 && v % z3 == 0)
        }
    }

    /// Whether the part's value is congruent to `z₃` or `0` modulo `𝖵`.
    pub fn is_trigger(&self, p: ColoredPart) -> bool {
        let r = p.value % self.v;
        r == 0 || r == self.z3 % self.v
    }

    /// Every allowed nonzero part of value at most `max`, `≻`-largest first.
    pub fn allowed_parts_desc(&self, max: u32) -> Vec<ColoredPart> {
        let mut out = Vec::new();
        for v in (1..=max).rev() {
            out.push(ColoredPart::plain(v));
            let b = ColoredPart::bar(v);
            if self.allows(b) {
                out.push(b);
            }
        }
        out
    }

    /// Short label such as `A2odd n=4 L0`.
    pub fn label(&self) -> String {
        format!("{} n={} {}", self.family, self.rank, self.weight)
    }
}
