//! Replay of the reference worked examples.
//!
//! Each example recomputes a reference value through the library and
//! compares it with the expected one. A [`Status::Deviation`] marks an
//! example whose stated value the library deliberately does not
//! reproduce; it is reported but does not count as a failure.

use std::cmp::Ordering;

use serde::Serialize;

use crate::affine_params::{make_config, AlgebraConfig, Family, Weight};
use crate::bijections::{
    algo_b_inverse, algo_b_with_steps, algo_c_with_steps, algo_e, algo_f, in_ao1o, p_o, theta,
};
use crate::colored_parts::{add, compare, scalar_mul, subtract, ColoredPart};
use crate::error::Result;
use crate::partition_sets::{in_ao1, in_ao2, in_z, SetSpec, DEFAULT_MAX_SPACE};
use crate::partitions::{
    format_ordinary, format_parts, is_in_pt, parse_parts, transpose, TwoColoredPartition,
};
use crate::series::kappa;

/// Outcome of one example.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Recomputed value matches.
    Pass,
    /// Recomputed value differs.
    Fail,
    /// A known, recorded disagreement with the stated value.
    Deviation,
}

impl Status {
    /// Upper-case label used in text output.
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Deviation => "DEVIATION",
        }
    }
}

/// One replayed example.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleResult {
    /// Short identifier.
    pub name: String,
    /// Outcome.
    pub status: Status,
    /// Recomputed value, or the error raised.
    pub detail: String,
}

fn tcp(s: &str) -> TwoColoredPartition {
    s.parse().expect("example literal")
}

fn raw(s: &str) -> Vec<ColoredPart> {
    parse_parts(s).expect("example literal")
}

fn cp(s: &str) -> ColoredPart {
    s.parse().expect("example literal")
}

fn cfg(family: Family, rank: u32, weight: Weight) -> AlgebraConfig {
    make_config(family, rank, weight).expect("example configuration")
}

fn a2odd4() -> AlgebraConfig {
    cfg(Family::A2Odd, 4, Weight::L0)
}

fn b1_3() -> AlgebraConfig {
    cfg(Family::B1, 3, Weight::Ln)
}

type Check = fn() -> Result<(bool, String)>;

fn eq<T: PartialEq + std::fmt::Debug>(got: T, want: T) -> (bool, String) {
    let ok = got == want;
    (ok, format!("{got:?}"))
}

fn same<T: PartialEq + std::fmt::Display>(got: T, want: T) -> (bool, String) {
    let ok = got == want;
    (ok, got.to_string())
}

fn params(c: &AlgebraConfig) -> String {
    format!(
        "z=({},{},{}) U={} V={} delta={} eps={} eps_tilde={}",
        c.z1, c.z2, c.z3, c.u, c.v, c.delta, c.eps, c.eps_tilde
    )
}

fn examples() -> Vec<(&'static str, Check)> {
    vec![
        ("compare(2, 2~) is greater", || {
            Ok(eq(compare(cp("2"), cp("2~")), Ordering::Greater))
        }),
        ("compare(0, 1~) is less", || {
            Ok(eq(compare(cp("0"), cp("1~")), Ordering::Less))
        }),
        ("subtract(3~, 2) = 1~", || {
            Ok(same(subtract(cp("3~"), cp("2"))?, cp("1~")))
        }),
        ("subtract(2~, 2) = 0", || {
            Ok(same(subtract(cp("2~"), cp("2"))?, cp("0")))
        }),
        ("add(3~, 2) = 5~", || {
            Ok(same(add(cp("3~"), cp("2")), cp("5~")))
        }),
        ("add(2~, 0) = 2~", || {
            Ok(same(add(cp("2~"), cp("0")), cp("2~")))
        }),
        ("2 * 2~ = 4~", || {
            Ok(same(scalar_mul(2, cp("2~")), cp("4~")))
        }),
        ("size of (5,3~,3~,2,2,1) is 16", || {
            Ok(eq(tcp("5,3~,3~,2,2,1").size(), 16))
        }),
        ("size of (31,17,15~,15~,13,7,5,3,3) is 109", || {
            Ok(eq(tcp("31,17,15~,15~,13,7,5,3,3").size(), 109))
        }),
        ("overpartitions of 3 number 8", || {
            Ok(eq(SetSpec::Overpartitions.count(3, DEFAULT_MAX_SPACE)?, 8))
        }),
        ("(5,3~,3~,2,2,1) lies in Pt", || {
            Ok(eq(is_in_pt(&raw("5,3~,3~,2,2,1")), true))
        }),
        ("(5,3,3~,2,2,1) is not in Pt", || {
            Ok(eq(is_in_pt(&raw("5,3,3~,2,2,1")), false))
        }),
        ("transpose of (7,4,3) is (3,3,3,2,1,1,1)", || {
            Ok(eq(transpose(&[7, 4, 3]), vec![3, 3, 3, 2, 1, 1, 1]))
        }),
        ("parameters of A2even n=4 L0", || {
            let c = cfg(Family::A2Even, 4, Weight::L0);
            let s = params(&c);
            Ok((s == "z=(0,0,9) U=9 V=9 delta=9 eps=1 eps_tilde=1", s))
        }),
        ("parameters of B1 n=3 L3", || {
            let s = params(&b1_3());
            Ok((s == "z=(3,6,3) U=6 V=6 delta=6 eps=1 eps_tilde=1", s))
        }),
        ("parameters of D2 n+1=3 L0", || {
            let c = cfg(Family::D2, 3, Weight::L0);
            let s = params(&c);
            Ok((s.starts_with("z=(0,0,3) U=6 V=3 delta=6 eps=2"), s))
        }),
        (
            "Y1 = (33,31,28~,28~,21,21,15,9,7,1) lies in AO1 of A2odd n=4",
            || {
                Ok(eq(
                    in_ao1(&raw("33,31,28~,28~,21,21,15,9,7,1"), &a2odd4()),
                    true,
                ))
            },
        ),
        (
            "(31,17,15~,15~,13,7,5,3,3) lies in AO2 of B1 n=3 L3",
            || Ok(eq(in_ao2(&raw("31,17,15~,15~,13,7,5,3,3"), &b1_3()), true)),
        ),
        ("algorithm B on (20,14,14,13,11,7~,7~,7~,5,3)", || {
            let (r, steps) = algo_b_with_steps(&a2odd4(), &tcp("20,14,14,13,11,7~,7~,7~,5,3"))?;
            let first = steps.first().map(|s| (s.hat, s.t, s.a));
            let ok = r.reduced == tcp("20,13,11,7~,5,3")
                && r.extracted == vec![2, 2, 1, 1]
                && first == Some((1, 3, 2));
            Ok((
                ok,
                format!(
                    "{} {} first round {:?}",
                    r.reduced,
                    format_ordinary(&r.extracted),
                    first
                ),
            ))
        }),
        (
            "inverse of algorithm B from ((20,13,11,7~,5,3),(2,2,1,1))",
            || {
                let y = algo_b_inverse(&a2odd4(), &tcp("20,13,11,7~,5,3"), &[2, 2, 1, 1])?;
                Ok(same(y, tcp("20,14,14,13,11,7~,7~,7~,5,3")))
            },
        ),
        ("algorithm C on (31,17,15~,15~,13,7,5,3,3)", || {
            let (r, steps) = algo_c_with_steps(&b1_3(), &tcp("31,17,15~,15~,13,7,5,3,3"))?;
            let first = steps.first().map(|s| (s.hat, s.t, s.a));
            let ok = r.reduced == tcp("31,17,15~,13,7,5")
                && r.reduced.size() == 88
                && r.odd == vec![5, 1, 1]
                && first == Some((1, 2, 2));
            Ok((
                ok,
                format!(
                    "{} {} first round {:?}",
                    r.reduced,
                    format_ordinary(&r.odd),
                    first
                ),
            ))
        }),
        ("P^o of Y1 in example 1", || {
            let got = p_o(&a2odd4(), &raw("33,31,28~,28~,21,21,15,9,7,1"));
            Ok((
                got == raw("33,31,28~,28,21~,21,15,9,7,1"),
                format_parts(&got),
            ))
        }),
        ("P^o of Y1 in example 2", || {
            let got = p_o(&a2odd4(), &raw("33,31,28,28,21~,21~,15,9,7,1"));
            Ok((
                got == raw("33,31,28,28,21~,21,15,9,7,1"),
                format_parts(&got),
            ))
        }),
        ("P^o(Y1) of example 1 lies in Z", || {
            let c = a2odd4();
            let y2 = raw("33,31,28~,28,21~,21,15,9,7,1");
            let z = in_z(&y2, &c);
            let o = in_ao1o(&c, &y2);
            let detail = format!("in_z={z} in_ao1o={o}");
            Ok((z, detail))
        }),
        ("algorithm E on example 1", || {
            let r = algo_e(&a2odd4(), &raw("33,31,28~,28,21~,21,15,9,7,1"))?;
            let ok = r.reduced == tcp("26,24,21~,14~,8,2,1") && r.lambda == vec![7, 4, 3];
            Ok((ok, format!("{} {}", r.reduced, format_ordinary(&r.lambda))))
        }),
        ("modular diagram table of example 1", || {
            let r = algo_e(&a2odd4(), &raw("33,31,28~,28,21~,21,15,9,7,1"))?;
            let (l, eps, rr) = r.diagram.table();
            let got = (
                l.get(1..8).map(<[u32]>::to_vec),
                eps.get(1..8).map(<[u32]>::to_vec),
                rr.get(0..5).map(<[usize]>::to_vec),
            );
            let want = (
                Some(vec![1, 0, 1, 1, 0, 0, 0]),
                Some(vec![1, 1, 1, 1, 0, 0, 0]),
                Some(vec![1, 2, 3, 4, 7]),
            );
            Ok(eq(got, want))
        }),
        ("algorithm F inverts example 2", || {
            let y = algo_f(
                &a2odd4(),
                &tcp("19,17,14~,8,2,1"),
                &[6, 6, 4, 3],
                crate::bijections::DEFAULT_F_LIMIT,
            )?;
            Ok((y == raw("33,31,28,28,21~,21,15,9,7,1"), format_parts(&y)))
        }),
        ("theta chain intermediates of example 1", || {
            let t = theta(&a2odd4(), &tcp("33,31,28~,28~,21,21,15,9,7,1"))?;
            let ok = t.reduced == tcp("26,24,21~,14~,8,2,1")
                && t.lambda == vec![7, 4, 3]
                && t.lambda_tr == vec![3, 3, 3, 2, 1, 1, 1];
            Ok((
                ok,
                format!(
                    "{} {} tr {} image {}",
                    t.reduced,
                    format_ordinary(&t.lambda),
                    format_ordinary(&t.lambda_tr),
                    t.output
                ),
            ))
        }),
        ("kappa_3 and kappa_6 of B1 n=3 L3", || {
            let c = b1_3();
            Ok(eq((kappa(&c, 3), kappa(&c, 6)), (2, 1)))
        }),
        ("kappa_5 of A2even n=2", || {
            Ok(eq(kappa(&cfg(Family::A2Even, 2, Weight::L0), 5), 0))
        }),
        ("kappa_7 of D2 n+1=3", || {
            Ok(eq(kappa(&cfg(Family::D2, 3, Weight::L0), 7), 1))
        }),
    ]
}

/// Examples whose stated value is known not to hold under the
/// library's definitions, with the condition under which the
/// disagreement is the expected one.
fn known_deviation(name: &str, detail: &str) -> bool {
    name == "P^o(Y1) of example 1 lies in Z" && detail == "in_z=false in_ao1o=true"
}

/// Runs every worked example in a fixed order.
pub fn run_examples() -> Vec<ExampleResult> {
    examples()
        .into_iter()
        .map(|(name, check)| {
            let (status, detail) = match check() {
                Ok((true, d)) => (Status::Pass, d),
                Ok((false, d)) if known_deviation(name, &d) => (Status::Deviation, d),
                Ok((false, d)) => (Status::Fail, d),
                Err(e) => (Status::Fail, e.to_string()),
            };
            ExampleResult {
                name: name.to_string(),
                status,
                detail,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_example_fails() {
        let failed: Vec<_> = run_examples()
            .into_iter()
            .filter(|r| r.status == Status::Fail)
            .collect();
        assert!(failed.is_empty(), "{failed:?}");
    }
}
