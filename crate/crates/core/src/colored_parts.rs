//! The two-colored alphabet: nonnegative integers that may carry a bar.
//!
//! Parts are totally ordered by
//! `x ≻ x̄ ≻ x-1 ≻ (x-1)̄ ≻ ... ≻ 1 ≻ 1̄ ≻ 0`, which is encoded by the
//! integer [`ColoredPart::order_key`]. Arithmetic acts on values and adds
//! bar flags modulo 2; a result of value 0 is always the unbarred zero.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nonnegative integer with an optional bar (overline).
///
/// The zero part is never barred; every constructor normalizes a barred
/// zero to the plain zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredPart {
    /// Number of blocks in the column.
    #[serde(rename = "v")]
    pub value: u32,
    /// Whether the part carries a bar.
    #[serde(rename = "bar")]
    pub barred: bool,
}

impl ColoredPart {
    /// The zero part.
    pub const ZERO: ColoredPart = ColoredPart {
        value: 0,
        barred: false,
    };

    /// Builds a part, normalizing a barred zero to zero.
    pub fn new(value: u32, barred: bool) -> Self {
        ColoredPart {
            value,
            barred: barred && value > 0,
        }
    }

    /// An unbarred part.
    pub fn plain(value: u32) -> Self {
        ColoredPart::new(value, false)
    }

    /// A barred part (zero stays unbarred).
    pub fn bar(value: u32) -> Self {
        ColoredPart::new(value, true)
    }

    /// The color `c(x)`: 1 for barred parts, 0 otherwise.
    pub fn color(self) -> u32 {
        u32::from(self.barred)
    }

    /// Whether this is the zero part.
    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Integer key realizing the order: `2v+1` for `v`, `2v` for `v̄`, 0 for 0.
    pub fn order_key(self) -> u64 {
        if self.value == 0 {
            0
        } else {
            2 * u64::from(self.value) + u64::from(!self.barred)
        }
    }

    /// Whether `self ⪯ U`, i.e. the value is at most `u` regardless of bar.
    pub fn value_at_most(self, u: u32) -> bool {
        self.value <= u
    }

    /// Whether `self ≺ U` for the unbarred part `U`; the barred `Ū` qualifies.
    pub fn strictly_below_plain(self, u: u32) -> bool {
        self.order_key() < ColoredPart::plain(u).order_key()
    }

    /// The same value with the bar flipped (zero stays zero).
    pub fn toggled(self) -> Self {
        ColoredPart::new(self.value, !self.barred)
    }

    /// The same value with the given bar flag.
    pub fn with_bar(self, barred: bool) -> Self {
        ColoredPart::new(self.value, barred)
    }
}

impl Ord for ColoredPart {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for ColoredPart {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compares two parts under `≻`; `Greater` means `a ≻ b`.
pub fn compare(a: ColoredPart, b: ColoredPart) -> Ordering {
    a.cmp(&b)
}

/// Colored subtraction `a - b`.
///
/// The value is the difference of values and the bar flag is
/// `c(a) - c(b) mod 2`. Equal values give zero whatever the bars.
///
/// # Errors
///
/// [`Error::Arithmetic`] when `b` has the larger value.
pub fn subtract(a: ColoredPart, b: ColoredPart) -> Result<ColoredPart> {
    if b.value > a.value {
        return Err(Error::Arithmetic(format!("cannot subtract {b} from {a}")));
    }
    Ok(ColoredPart::new(a.value - b.value, a.barred != b.barred))
}

/// Colored addition `a + b`; zero is the identity.
pub fn add(a: ColoredPart, b: ColoredPart) -> ColoredPart {
    ColoredPart::new(a.value + b.value, a.barred != b.barred)
}

/// Multiplication by a nonnegative integer, preserving the bar.
pub fn scalar_mul(k: u32, x: ColoredPart) -> ColoredPart {
    ColoredPart::new(k * x.value, x.barred)
}

/// Value difference of two parts with the colored bar rule, without the
/// order precondition. Used for adjacent differences where `a ⪰ b` holds.
pub(crate) fn diff(a: ColoredPart, b: ColoredPart) -> ColoredPart {
    ColoredPart::new(a.value.saturating_sub(b.value), a.barred != b.barred)
}

impl fmt::Display for ColoredPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "{}~", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl FromStr for ColoredPart {
    type Err = Error;

    /// Parses `"N"` or `"N~"`; surrounding whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (digits, barred) = match t.strip_suffix('~') {
            Some(d) => (d.trim_end(), true),
            None => (t, false),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("invalid part token '{t}'")));
        }
        let value: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("part out of range '{t}'")))?;
        Ok(ColoredPart::new(value, barred))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u32) -> ColoredPart {
        ColoredPart::plain(v)
    }
    fn b(v: u32) -> ColoredPart {
        ColoredPart::bar(v)
    }

    #[test]
    fn order_examples() {
        assert_eq!(compare(p(2), b(2)), Ordering::Greater);
        assert_eq!(compare(b(1), b(1)), Ordering::Equal);
        assert_eq!(compare(ColoredPart::ZERO, b(1)), Ordering::Less);
        assert!(b(3) > p(2));
    }

    #[test]
    fn subtract_examples() {
        assert_eq!(subtract(b(3), p(2)).unwrap(), b(1));
        assert_eq!(subtract(b(2), p(2)).unwrap(), ColoredPart::ZERO);
        assert_eq!(subtract(p(5), p(5)).unwrap(), ColoredPart::ZERO);
        assert_eq!(subtract(p(2), b(2)).unwrap(), ColoredPart::ZERO);
        assert!(subtract(p(2), p(3)).is_err());
    }

    #[test]
    fn add_and_scale_examples() {
        assert_eq!(add(b(3), p(2)), b(5));
        assert_eq!(add(b(2), ColoredPart::ZERO), b(2));
        assert_eq!(add(p(4), p(3)), p(7));
        assert_eq!(scalar_mul(2, b(2)), b(4));
        assert_eq!(scalar_mul(0, b(7)), ColoredPart::ZERO);
        assert_eq!(scalar_mul(3, p(7)), p(21));
    }

    #[test]
    fn barred_zero_is_zero() {
        assert_eq!(ColoredPart::bar(0), ColoredPart::ZERO);
        assert_eq!(ColoredPart::new(0, true).order_key(), 0);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("28~".parse::<ColoredPart>().unwrap(), b(28));
        assert_eq!(" 21 ".parse::<ColoredPart>().unwrap(), p(21));
        assert_eq!(b(28).to_string(), "28~");
        assert!("x".parse::<ColoredPart>().is_err());
        assert!("~".parse::<ColoredPart>().is_err());
        assert!("-3".parse::<ColoredPart>().is_err());
    }

    #[test]
    fn json_encoding() {
        let s = serde_json::to_string(&b(28)).unwrap();
        assert_eq!(s, r#"{"v":28,"bar":true}"#);
        let back: ColoredPart = serde_json::from_str(&s).unwrap();
        assert_eq!(back, b(28));
    }

    #[test]
    fn strictly_below_plain_admits_barred_u() {
        assert!(b(7).strictly_below_plain(7));
        assert!(!p(7).strictly_below_plain(7));
        assert!(p(6).strictly_below_plain(7));
    }
}
