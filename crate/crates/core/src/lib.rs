//! Reduced Young walls as two-colored partitions: the extended
//! Andrews–Olsson identity and a generalized Bessenrodt insertion for the
//! affine types `A⁽²⁾₂ₙ`, `A⁽²⁾₂ₙ₋₁`, `B⁽¹⁾ₙ`, `D⁽¹⁾ₙ` and `D⁽²⁾ₙ₊₁`.
//!
//! * [`colored_parts`]: parts that may carry a bar, and their order.
//! * [`partitions`]: two-colored and ordinary partitions.
//! * [`affine_params`]: the numeric parameters of each family and weight.
//! * [`partition_sets`]: membership and enumeration of the partition sets.
//! * [`bijections`]: the reduction algorithms and the bijection `Θ`.
//! * [`series`]: generating functions and counting identities.
//! * [`selfcheck`]: replay of the reference worked examples.
//! * [`cli`]: the `yw` command-line front end.

pub mod affine_params;
pub mod bijections;
pub mod cli;
pub mod colored_parts;
pub mod error;
pub mod partition_sets;
pub mod partitions;
pub mod selfcheck;
pub mod series;

pub use error::{Error, Result};
