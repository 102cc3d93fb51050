//! Exact truncated power series, the products `∏(1+tⁱ)^{κᵢ}` and the
//! counting identities between `𝒵`, `𝒜𝒪ᵢ`, strict, odd and ordinary
//! partitions.

use rayon::prelude::*;
use serde::Serialize;

use crate::affine_params::{AlgebraConfig, Family};
use crate::error::{Error, Result};
use crate::partition_sets::{ResidueSet, SetSpec};

/// Default largest degree accepted by the series helpers.
pub const DEFAULT_MAX_DEGREE: u32 = 64;

/// A power series truncated after degree `M`, with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TruncatedSeries {
    coeffs: Vec<u64>,
}

fn overflow() -> Error {
    Error::Overflow("series coefficient exceeds u64".into())
}

impl TruncatedSeries {
    /// The constant series `1` truncated at degree `max_degree`.
    pub fn one(max_degree: u32) -> Self {
        let mut coeffs = vec![0; max_degree as usize + 1];
        coeffs[0] = 1;
        TruncatedSeries { coeffs }
    }

    /// A series from explicit coefficients; `coeffs[d]` is the coefficient
    /// of `t^d`.
    ///
    /// # Errors
    ///
    /// [`Error::Domain`] if `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<u64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain(
                "a series needs at least one coefficient".into(),
            ));
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Truncation degree `M`.
    pub fn max_degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    /// All coefficients, index = degree.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `t^d` (zero beyond the truncation degree).
    pub fn coeff(&self, d: u32) -> u64 {
        self.coeffs.get(d as usize).copied().unwrap_or(0)
    }

    /// Product truncated at the smaller of the two degrees.
    ///
    /// # Errors
    ///
    /// [`Error::Overflow`] if a coefficient exceeds `u64`.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, &a) in self.coeffs.iter().enumerate().take(n) {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(n - i) {
                let term = a.checked_mul(b).ok_or_else(overflow)?;
                out[i + j] = out[i + j].checked_add(term).ok_or_else(overflow)?;
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Multiplies in place by `1 + t^k`.
    ///
    /// # Errors
    ///
    /// [`Error::Overflow`] if a coefficient exceeds `u64`.
    pub fn mul_one_plus(&mut self, k: u32) -> Result<()> {
        let k = k as usize;
        if k == 0 {
            return Err(Error::Domain("factor 1 + t^0 is not allowed".into()));
        }
        for d in (k..self.coeffs.len()).rev() {
            self.coeffs[d] = self.coeffs[d]
                .checked_add(self.coeffs[d - k])
                .ok_or_else(overflow)?;
        }
        Ok(())
    }

    /// Multiplies in place by `1 / (1 - t^k)`.
    ///
    /// # Errors
    ///
    /// [`Error::Overflow`] if a coefficient exceeds `u64`.
    pub fn mul_geometric(&mut self, k: u32) -> Result<()> {
        let k = k as usize;
        if k == 0 {
            return Err(Error::Domain("factor 1/(1 - t^0) is not allowed".into()));
        }
        for d in k..self.coeffs.len() {
            self.coeffs[d] = self.coeffs[d]
                .checked_add(self.coeffs[d - k])
                .ok_or_else(overflow)?;
        }
        Ok(())
    }
}

fn check_degree(max_degree: u32) -> Result<()> {
    if max_degree > DEFAULT_MAX_DEGREE {
        return Err(Error::ResourceGuard(format!(
            "degree {max_degree} exceeds the limit {DEFAULT_MAX_DEGREE}"
        )));
    }
    Ok(())
}

/// Exponent `κᵢ ∈ {0, 1, 2}` of `(1 + tⁱ)` in the generating function.
pub fn kappa(cfg: &AlgebraConfig, i: u32) -> u32 {
    let n = cfg.rank;
    match cfg.family {
        Family::A2Even => u32::from(!i.is_multiple_of(cfg.u)),
        Family::A2Odd | Family::D2 => 1,
        Family::B1 if cfg.is_b1_ln() => 1 + u32::from(i % (2 * n) == n % (2 * n)),
        Family::B1 => 1 + u32::from(i.is_multiple_of(2 * n)),
        Family::D1 => 1 + u32::from(i.is_multiple_of(n - 1)),
    }
}

/// `∏ᵢ (1 + tⁱ)^{κᵢ}` up to degree `max_degree`.
///
/// # Errors
///
/// [`Error::ResourceGuard`] above [`DEFAULT_MAX_DEGREE`], [`Error::Overflow`]
/// on coefficient overflow.
pub fn product_series(cfg: &AlgebraConfig, max_degree: u32) -> Result<TruncatedSeries> {
    check_degree(max_degree)?;
    let mut s = TruncatedSeries::one(max_degree);
    for i in 1..=max_degree {
        for _ in 0..kappa(cfg, i) {
            s.mul_one_plus(i)?;
        }
    }
    Ok(s)
}

/// `∏ᵢ (1 + tⁱ)`.
///
/// # Errors
///
/// As for [`product_series`].
pub fn strict_series(max_degree: u32) -> Result<TruncatedSeries> {
    check_degree(max_degree)?;
    let mut s = TruncatedSeries::one(max_degree);
    for i in 1..=max_degree {
        s.mul_one_plus(i)?;
    }
    Ok(s)
}

/// `∏ᵢ 1 / (1 - t^{2i-1})`.
///
/// # Errors
///
/// As for [`product_series`].
pub fn odd_series(max_degree: u32) -> Result<TruncatedSeries> {
    check_degree(max_degree)?;
    let mut s = TruncatedSeries::one(max_degree);
    for i in (1..=max_degree).step_by(2) {
        s.mul_geometric(i)?;
    }
    Ok(s)
}

/// One row of an identity report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    /// Size.
    pub m: u32,
    /// Left-hand count.
    pub lhs: u64,
    /// Right-hand count.
    pub rhs: u64,
    /// Product-formula coefficient, when it takes part in the check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product: Option<u64>,
    /// Whether all compared values agree.
    pub pass: bool,
}

/// Per-size results of one identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    /// Identity name.
    pub identity: String,
    /// Family name, if the identity depends on one.
    pub family: Option<String>,
    /// Rank, if the identity depends on a config.
    pub rank: Option<u32>,
    /// Weight label, if the identity depends on a config.
    pub weight: Option<String>,
    /// One row per size.
    pub results: Vec<ReportRow>,
    /// Whether every row passes.
    pub pass: bool,
}

impl IdentityReport {
    fn new(identity: &str, cfg: Option<&AlgebraConfig>, results: Vec<ReportRow>) -> Self {
        IdentityReport {
            identity: identity.to_string(),
            family: cfg.map(|c| c.family.name().to_string()),
            rank: cfg.map(|c| c.rank),
            weight: cfg.map(|c| c.weight.name().to_string()),
            pass: results.iter().all(|r| r.pass),
            results,
        }
    }

    /// Compact JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Tab-separated rows with a header; the report fields repeat on every
    /// row.
    pub fn to_tsv(&self) -> String {
        let opt = |s: &Option<String>| s.clone().unwrap_or_else(|| "-".into());
        let rank = self.rank.map_or_else(|| "-".into(), |r| r.to_string());
        let mut out = String::from("identity\tfamily\trank\tweight\tm\tlhs\trhs\tpass\n");
        for r in &self.results {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                self.identity,
                opt(&self.family),
                rank,
                opt(&self.weight),
                r.m,
                r.lhs,
                r.rhs,
                r.pass
            ));
        }
        out
    }
}

fn counts(spec: &SetSpec, max: u32, max_space: u64) -> Result<Vec<u64>> {
    (0..=max)
        .into_par_iter()
        .map(|m| spec.count(m, max_space))
        .collect()
}

/// `|𝒜𝒪₁[m]| = |𝒜𝒪₂[m]| = [tᵐ] ∏(1+tⁱ)^{κᵢ}` for every `m ≤ max_size`.
///
/// # Errors
///
/// [`Error::ResourceGuard`] when enumeration exceeds `max_space` nodes.
pub fn verify_counts(cfg: &AlgebraConfig, max_size: u32, max_space: u64) -> Result<IdentityReport> {
    let prod = product_series(cfg, max_size)?;
    let a1 = counts(&SetSpec::AO1(cfg.clone()), max_size, max_space)?;
    let a2 = counts(&SetSpec::AO2(cfg.clone()), max_size, max_space)?;
    let rows = (0..=max_size)
        .map(|m| {
            let (l, r, p) = (a1[m as usize], a2[m as usize], prod.coeff(m));
            ReportRow {
                m,
                lhs: l,
                rhs: r,
                product: Some(p),
                pass: l == r && l == p,
            }
        })
        .collect();
    Ok(IdentityReport::new("ao", Some(cfg), rows))
}

/// `|𝒜𝒪₁^X[m]| = |𝒜𝒪₂^X[m]|` for residues `X ⊆ {1, …, z₃-1}`.
///
/// # Errors
///
/// [`Error::InvalidConfig`] for an invalid residue set and
/// [`Error::ResourceGuard`] when enumeration exceeds `max_space` nodes.
pub fn verify_restricted(
    cfg: &AlgebraConfig,
    xs: &ResidueSet,
    max_size: u32,
    max_space: u64,
) -> Result<IdentityReport> {
    let a1 = counts(
        &SetSpec::AO1Restricted(cfg.clone(), xs.clone()),
        max_size,
        max_space,
    )?;
    let a2 = counts(
        &SetSpec::AO2Restricted(cfg.clone(), xs.clone()),
        max_size,
        max_space,
    )?;
    let rows = (0..=max_size)
        .map(|m| compare_row(m, a1[m as usize], a2[m as usize]))
        .collect();
    Ok(IdentityReport::new(
        &format!("restricted{xs}"),
        Some(cfg),
        rows,
    ))
}

fn compare_row(m: u32, lhs: u64, rhs: u64) -> ReportRow {
    ReportRow {
        m,
        lhs,
        rhs,
        product: None,
        pass: lhs == rhs,
    }
}

/// The strict-partition factor `𝒮′` of the decompositions: strict
/// partitions avoiding multiples of `𝖴` for `A⁽²⁾₂ₙ` and for `B⁽¹⁾ₙ`, `Λₙ`,
/// all strict partitions otherwise.
pub fn s_prime_spec(cfg: &AlgebraConfig) -> SetSpec {
    if cfg.family == Family::A2Even || cfg.is_b1_ln() {
        SetSpec::StrictAvoiding(cfg.u)
    } else {
        SetSpec::Strict
    }
}

fn uses_double_convolution(cfg: &AlgebraConfig) -> bool {
    matches!(cfg.family, Family::B1 | Family::D1)
}

/// The Fock space decomposition, read as counting:
/// `|𝒵[m]| = Σ_k |𝒮′[m-k𝖴]|·|𝒫[k]|` for `A⁽²⁾₂ₙ`, `A⁽²⁾₂ₙ₋₁`, `D⁽²⁾ₙ₊₁`, and
/// `|𝒵[m]| = Σ_{l,k} |𝒮′[m-l𝖴-kz₁]|·|𝒮[k]|·|𝒫[l]|` for `B⁽¹⁾ₙ`, `D⁽¹⁾ₙ`.
///
/// # Errors
///
/// [`Error::ResourceGuard`] when enumeration exceeds `max_space` nodes.
#[allow(clippy::needless_range_loop)]
pub fn fock_identity(cfg: &AlgebraConfig, max_size: u32, max_space: u64) -> Result<IdentityReport> {
    let z = counts(&SetSpec::Z(cfg.clone()), max_size, max_space)?;
    let sp = counts(&s_prime_spec(cfg), max_size, max_space)?;
    let s = counts(&SetSpec::Strict, max_size, max_space)?;
    let p = counts(&SetSpec::Partitions, max_size, max_space)?;
    let u = cfg.u as usize;
    let mut rows = Vec::new();
    for m in 0..=max_size as usize {
        let mut rhs = 0u64;
        for l in 0..=m / u {
            let rest = m - l * u;
            let inner = if uses_double_convolution(cfg) {
                let z1 = cfg.z1 as usize;
                (0..=rest / z1)
                    .map(|k| sp[rest - k * z1].checked_mul(s[k]).ok_or_else(overflow))
                    .try_fold(0u64, |acc, x| acc.checked_add(x?).ok_or_else(overflow))?
            } else {
                sp[rest]
            };
            let term = inner.checked_mul(p[l]).ok_or_else(overflow)?;
            rhs = rhs.checked_add(term).ok_or_else(overflow)?;
        }
        rows.push(compare_row(m as u32, z[m], rhs));
    }
    Ok(IdentityReport::new("fock", Some(cfg), rows))
}

/// `|𝒜𝒪₂[m]| = Σ_k |𝒮′[m-kz₁]|·|𝒮[k]|` for `B⁽¹⁾ₙ` and `D⁽¹⁾ₙ`.
///
/// # Errors
///
/// [`Error::InvalidConfig`] for other families and
/// [`Error::ResourceGuard`] when enumeration exceeds `max_space` nodes.
pub fn ao2_split_identity(
    cfg: &AlgebraConfig,
    max_size: u32,
    max_space: u64,
) -> Result<IdentityReport> {
    if !uses_double_convolution(cfg) {
        return Err(Error::InvalidConfig(format!(
            "the AO2 split applies to B1 and D1, not {}",
            cfg.family
        )));
    }
    let a2 = counts(&SetSpec::AO2(cfg.clone()), max_size, max_space)?;
    let sp = counts(&s_prime_spec(cfg), max_size, max_space)?;
    let s = counts(&SetSpec::Strict, max_size, max_space)?;
    let z1 = cfg.z1 as usize;
    let rows = (0..=max_size as usize)
        .map(|m| {
            let rhs = (0..=m / z1).map(|k| sp[m - k * z1] * s[k]).sum();
            compare_row(m as u32, a2[m], rhs)
        })
        .collect();
    Ok(IdentityReport::new("ao2-split", Some(cfg), rows))
}

/// Euler's identity `∏(1+tⁱ) = ∏ 1/(1-t^{2i-1})` coefficient by
/// coefficient.
///
/// # Errors
///
/// [`Error::ResourceGuard`] above [`DEFAULT_MAX_DEGREE`].
pub fn euler_identity(max_degree: u32) -> Result<IdentityReport> {
    let s = strict_series(max_degree)?;
    let o = odd_series(max_degree)?;
    let rows = (0..=max_degree)
        .map(|m| compare_row(m, s.coeff(m), o.coeff(m)))
        .collect();
    Ok(IdentityReport::new("euler", None, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine_params::{make_config, Weight};

    #[test]
    fn kappa_examples() {
        let b = make_config(Family::B1, 3, Weight::Ln).unwrap();
        assert_eq!(kappa(&b, 3), 2);
        assert_eq!(kappa(&b, 6), 1);
        let a = make_config(Family::A2Even, 2, Weight::L0).unwrap();
        assert_eq!(kappa(&a, 5), 0);
        let d = make_config(Family::D2, 3, Weight::L0).unwrap();
        assert_eq!(kappa(&d, 7), 1);
    }

    #[test]
    fn product_examples() {
        let d = make_config(Family::D2, 3, Weight::L0).unwrap();
        assert_eq!(product_series(&d, 10).unwrap().coeff(4), 2);
        assert_eq!(product_series(&d, 0).unwrap().coeff(0), 1);
        let b = make_config(Family::B1, 2, Weight::L0).unwrap();
        assert_eq!(product_series(&b, 10).unwrap().coeff(4), 3);
    }

    #[test]
    fn series_multiplication_and_overflow() {
        let a = TruncatedSeries::from_coeffs(vec![1, 1, 0]).unwrap();
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq.coeffs(), &[1, 2, 1]);
        let big = TruncatedSeries::from_coeffs(vec![u64::MAX, 1]).unwrap();
        assert!(matches!(big.mul(&big), Err(Error::Overflow(_))));
        assert!(product_series(&make_config(Family::D2, 3, Weight::L0).unwrap(), 65).is_err());
    }

    #[test]
    fn euler_to_forty() {
        assert!(euler_identity(40).unwrap().pass);
    }
}
