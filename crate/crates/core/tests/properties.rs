//! Randomized properties of the partition primitives.

use proptest::prelude::*;
use yw_core::colored_parts::{add, compare, scalar_mul, subtract, ColoredPart};
use yw_core::partitions::{
    format_parts, odd_to_strict, strict_to_odd, transpose, TwoColoredPartition,
};

fn part() -> impl Strategy<Value = ColoredPart> {
    (0u32..200, any::<bool>()).prop_map(|(v, b)| ColoredPart::new(v, b && v > 0))
}

fn ordinary() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..30, 0..12).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

fn odd_partition() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..15, 0..15).prop_map(|v| {
        let mut odd: Vec<u32> = v.into_iter().map(|x| 2 * x + 1).collect();
        odd.sort_unstable_by(|a, b| b.cmp(a));
        odd
    })
}

proptest! {
    #[test]
    fn transpose_is_an_involution(lambda in ordinary()) {
        let t = transpose(&lambda);
        prop_assert_eq!(t.iter().sum::<u32>(), lambda.iter().sum::<u32>());
        prop_assert_eq!(t.len() as u32, lambda.first().copied().unwrap_or(0));
        prop_assert_eq!(transpose(&t), lambda);
    }

    #[test]
    fn subtract_undoes_add(x in part(), b in part()) {
        prop_assert_eq!(subtract(add(x, b), b).unwrap(), x);
    }

    #[test]
    fn add_is_commutative_with_zero_identity(a in part(), b in part()) {
        prop_assert_eq!(add(a, b), add(b, a));
        prop_assert_eq!(add(a, ColoredPart::plain(0)), a);
    }

    #[test]
    fn scalar_mul_keeps_the_bar(k in 1u32..20, x in part()) {
        let y = scalar_mul(k, x);
        prop_assert_eq!(y.value, k * x.value);
        prop_assert_eq!(y.barred, x.barred);
    }

    #[test]
    fn order_is_total_and_puts_plain_above_barred(a in part(), b in part()) {
        let expected = a.value.cmp(&b.value).then((!a.barred).cmp(&!b.barred));
        prop_assert_eq!(compare(a, b), expected);
        prop_assert_eq!(compare(b, a), expected.reverse());
    }

    #[test]
    fn odd_strict_correspondence_round_trips(odd in odd_partition()) {
        let strict = odd_to_strict(&odd).unwrap();
        prop_assert!(strict.windows(2).all(|w| w[0] > w[1]));
        prop_assert_eq!(strict.iter().sum::<u32>(), odd.iter().sum::<u32>());
        prop_assert_eq!(strict_to_odd(&strict).unwrap(), odd);
    }

    #[test]
    fn text_form_round_trips(parts in prop::collection::vec(part(), 0..10)) {
        let parts: Vec<ColoredPart> = parts.into_iter().filter(|p| p.value > 0).collect();
        let y = TwoColoredPartition::from_unsorted(parts);
        let text = format_parts(y.parts());
        let back: TwoColoredPartition = text.parse().unwrap();
        prop_assert_eq!(back, y);
    }
}
