//! Localization scans and the checks built on them.

use std::collections::HashMap;
use std::fmt;

use monideal_core::decomp::{has_embedded, height, is_unmixed};
use monideal_core::polymatroid::{is_polymatroidal, is_veronese_type};
use monideal_core::resolution::{has_linear_resolution, regularity};
use monideal_core::{Error, MonomialIdeal, MonomialPrime};
use rayon::prelude::*;

use crate::HarnessError;

/// Largest variable count for a full scan over all `2^n - 1` primes.
pub const MAX_SCAN_VARS: usize = 16;

/// Regularity with the unit ideal at 0 and principal ideals at their
/// generator degree.
pub fn local_regularity(ideal: &MonomialIdeal, p: u32) -> monideal_core::Result<u32> {
    if ideal.is_principal() {
        return Ok(ideal.gens()[0].degree());
    }
    regularity(ideal, p)
}

/// [`local_regularity`] with the harness error type.
pub fn regularity_or_trivial(ideal: &MonomialIdeal, p: u32) -> Result<u32, HarnessError> {
    Ok(local_regularity(ideal, p)?)
}

#[derive(Clone, Debug)]
pub struct LocalizationRow {
    pub prime: MonomialPrime,
    pub localized: MonomialIdeal,
    /// `None` when the localization is not generated in one degree.
    pub degree: Option<u32>,
    pub regularity: u32,
    pub linear: bool,
}

#[derive(Clone, Debug)]
pub struct LocalizationScanReport {
    pub rows: Vec<LocalizationRow>,
    pub all_linear: bool,
    pub polymatroidal: bool,
    /// `all_linear == polymatroidal`. A mismatch is a finding, not an error.
    pub consistent: bool,
}

impl LocalizationScanReport {
    pub fn failing(&self) -> impl Iterator<Item = &LocalizationRow> {
        self.rows.iter().filter(|r| !r.linear)
    }
}

struct LocalFacts {
    regularity: u32,
    linear: bool,
}

fn local_facts(ideal: &MonomialIdeal, p: u32) -> Result<LocalFacts, HarnessError> {
    Ok(LocalFacts { regularity: regularity_or_trivial(ideal, p)?, linear: has_linear_resolution(ideal, p)? })
}

/// Localizes `I` at every nonempty monomial prime (including the maximal
/// ideal) and records which localizations have a linear resolution.
///
/// Distinct localizations are evaluated once each, in parallel; rows come
/// back in canonical prime order.
pub fn scan_localizations(ideal: &MonomialIdeal, p: u32) -> Result<LocalizationScanReport, HarnessError> {
    ideal.require_proper_nonzero()?;
    if ideal.equigenerated_degree().is_none() {
        return Err(Error::NotEquigenerated.into());
    }
    let n = ideal.nvars();
    if n > MAX_SCAN_VARS {
        return Err(Error::CapExceeded { what: "variables for a localization scan", limit: MAX_SCAN_VARS, actual: n }.into());
    }
    let primes = MonomialPrime::all_nonempty(n);
    let locals = primes.iter().map(|q| ideal.localize(q)).collect::<Result<Vec<_>, _>>()?;
    let mut distinct: Vec<&MonomialIdeal> = Vec::new();
    let mut slot: HashMap<&MonomialIdeal, usize> = HashMap::new();
    for l in &locals {
        slot.entry(l).or_insert_with(|| {
            distinct.push(l);
            distinct.len() - 1
        });
    }
    let facts = distinct.par_iter().map(|l| local_facts(l, p)).collect::<Result<Vec<_>, _>>()?;
    let rows: Vec<LocalizationRow> = primes
        .into_iter()
        .zip(&locals)
        .map(|(prime, l)| {
            let f = &facts[slot[l]];
            LocalizationRow {
                prime,
                localized: l.clone(),
                degree: l.equigenerated_degree(),
                regularity: f.regularity,
                linear: f.linear,
            }
        })
        .collect();
    let all_linear = rows.iter().all(|r| r.linear);
    let polymatroidal = is_polymatroidal(ideal)?.polymatroidal;
    Ok(LocalizationScanReport { rows, all_linear, polymatroidal, consistent: all_linear == polymatroidal })
}

#[derive(Clone, Debug)]
pub struct SaturationRow {
    /// 0-based variable index.
    pub var: usize,
    pub saturated: MonomialIdeal,
    pub linear: bool,
}

#[derive(Clone, Debug)]
pub struct SaturationReport {
    pub ideal_linear: bool,
    pub rows: Vec<SaturationRow>,
}

impl SaturationReport {
    /// `I` and every `I[i]` have a linear resolution.
    pub fn all_linear(&self) -> bool {
        self.ideal_linear && self.rows.iter().all(|r| r.linear)
    }
}

/// Linearity of `I` and of each `I[i] = I : x_i^∞`.
pub fn check_saturations(ideal: &MonomialIdeal, p: u32) -> Result<SaturationReport, HarnessError> {
    let ideal_linear = has_linear_resolution(ideal, p)?;
    let rows = (0..ideal.nvars())
        .map(|var| {
            let saturated = ideal.saturate_var(var)?;
            let linear = has_linear_resolution(&saturated, p)?;
            Ok(SaturationRow { var, saturated, linear })
        })
        .collect::<Result<_, HarnessError>>()?;
    Ok(SaturationReport { ideal_linear, rows })
}

/// Which classification results apply to `I`. Pure-power flags count
/// generators `x_i^d` and are set when at least that many are present.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct TheoremApplicability {
    /// `height(I) ≥ n - 1`.
    pub height_n_minus_1: bool,
    pub pure_powers_n_minus_1: bool,
    pub pure_powers_n_minus_2: bool,
    /// Trivially set when `n ≤ 3`.
    pub pure_powers_n_minus_3: bool,
    /// At most four variables.
    pub four_vars: bool,
    pub unmixed_h2_4vars: bool,
    pub no_embedded_4vars: bool,
}

/// What a classification result says `I` must be when all localizations
/// are linear.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Conclusion {
    VeroneseType,
    Polymatroidal,
}

impl TheoremApplicability {
    /// Set flags with their conclusions.
    pub fn applicable(&self) -> Vec<(&'static str, Conclusion)> {
        use Conclusion::*;
        [
            (self.height_n_minus_1, "height_n_minus_1", VeroneseType),
            (self.pure_powers_n_minus_1, "pure_powers_n_minus_1", VeroneseType),
            (self.pure_powers_n_minus_2, "pure_powers_n_minus_2", Polymatroidal),
            (self.pure_powers_n_minus_3, "pure_powers_n_minus_3", Polymatroidal),
            (self.four_vars, "four_vars", Polymatroidal),
            (self.unmixed_h2_4vars, "unmixed_h2_4vars", Polymatroidal),
            (self.no_embedded_4vars, "no_embedded_4vars", Polymatroidal),
        ]
        .into_iter()
        .filter(|t| t.0)
        .map(|t| (t.1, t.2))
        .collect()
    }

    pub fn any(&self) -> bool {
        !self.applicable().is_empty()
    }
}

pub fn theorem_preconditions(ideal: &MonomialIdeal) -> Result<TheoremApplicability, HarnessError> {
    ideal.require_proper_nonzero()?;
    let desc = ideal.descriptors()?;
    if desc.equigenerated_degree.is_none() {
        return Err(Error::NotEquigenerated.into());
    }
    let n = ideal.nvars();
    let pure = desc.pure_powers.len();
    let h = height(ideal)?;
    let small = n <= 4;
    Ok(TheoremApplicability {
        height_n_minus_1: h + 1 >= n,
        pure_powers_n_minus_1: pure + 1 >= n,
        pure_powers_n_minus_2: pure + 2 >= n,
        pure_powers_n_minus_3: pure + 3 >= n,
        four_vars: small,
        unmixed_h2_4vars: small && h == 2 && is_unmixed(ideal)?,
        no_embedded_4vars: small && !has_embedded(ideal)?,
    })
}

/// One biconditional `all_linear ⟺ conclusion`.
#[derive(Clone, Debug)]
pub struct TheoremCheck {
    pub flag: &'static str,
    pub conclusion: Conclusion,
    pub all_linear: bool,
    pub structure: bool,
}

impl TheoremCheck {
    pub fn holds(&self) -> bool {
        self.all_linear == self.structure
    }
}

/// Evaluates the biconditional of every applicable result.
pub fn verify_theorems(
    ideal: &MonomialIdeal,
    flags: &TheoremApplicability,
    scan: &LocalizationScanReport,
) -> Result<Vec<TheoremCheck>, HarnessError> {
    let applicable = flags.applicable();
    let veronese = if applicable.iter().any(|a| a.1 == Conclusion::VeroneseType) {
        is_veronese_type(ideal)?.is_some()
    } else {
        false
    };
    Ok(applicable
        .into_iter()
        .map(|(flag, conclusion)| TheoremCheck {
            flag,
            conclusion,
            all_linear: scan.all_linear,
            structure: match conclusion {
                Conclusion::VeroneseType => veronese,
                Conclusion::Polymatroidal => scan.polymatroidal,
            },
        })
        .collect())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PowerRow {
    pub k: u32,
    pub degree: u32,
    pub regularity: u32,
    pub linear: bool,
}

impl fmt::Display for PowerRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} degree={} reg={} linear={}", self.k, self.degree, self.regularity, self.linear)
    }
}

/// Degree, regularity and linearity of `I^k` for `k = 1..=kmax`.
pub fn powers_linearity_profile(ideal: &MonomialIdeal, kmax: u32, p: u32) -> Result<Vec<PowerRow>, HarnessError> {
    ideal.require_proper_nonzero()?;
    let d = ideal.equigenerated_degree().ok_or(Error::NotEquigenerated)?;
    if kmax == 0 {
        return Err(HarnessError::InvalidParameters("kmax must be at least 1".into()));
    }
    let mut rows = Vec::new();
    let mut pow = ideal.clone();
    for k in 1..=kmax {
        if k > 1 {
            pow = pow.product(ideal)?;
        }
        let reg = regularity_or_trivial(&pow, p)?;
        let degree = d * k;
        rows.push(PowerRow { k, degree, regularity: reg, linear: reg == degree });
    }
    Ok(rows)
}

/// Exchange verdicts for `IJ`, `I` and `J`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ProductVerdict {
    pub product: bool,
    pub left: bool,
    pub right: bool,
}

pub fn product_polymatroidality(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<ProductVerdict, HarnessError> {
    let ij = i.product(j)?;
    Ok(ProductVerdict {
        product: is_polymatroidal(&ij)?.polymatroidal,
        left: is_polymatroidal(i)?.polymatroidal,
        right: is_polymatroidal(j)?.polymatroidal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;
    use monideal_core::resolution::DEFAULT_CHAR;

    const P: u32 = DEFAULT_CHAR;

    #[test]
    fn scan_small() {
        let i = parse_ideal("x1*x2, x1*x3, x2^2", None).unwrap();
        let r = scan_localizations(&i, P).unwrap();
        assert_eq!(r.rows.len(), 7);
        assert!(!r.all_linear && !r.polymatroidal && r.consistent);
        let bad: Vec<_> = r.failing().map(|row| row.prime.indices()).collect();
        assert!(bad.contains(&vec![0, 1]));
        let m = MonomialIdeal::maximal_power(3, 2);
        let r = scan_localizations(&m, P).unwrap();
        assert!(r.all_linear && r.polymatroidal && r.consistent);
        assert!(scan_localizations(&parse_ideal("x1, x2^2", None).unwrap(), P).is_err());
    }

    #[test]
    fn saturations() {
        let m = MonomialIdeal::maximal_power(3, 3);
        let r = check_saturations(&m, P).unwrap();
        assert!(r.all_linear());
        assert_eq!(r.rows.len(), 3);
    }

    #[test]
    fn flags() {
        let m = MonomialIdeal::maximal_power(4, 2);
        let f = theorem_preconditions(&m).unwrap();
        assert!(f.height_n_minus_1 && f.pure_powers_n_minus_1 && f.four_vars);
        let s = scan_localizations(&m, P).unwrap();
        assert!(verify_theorems(&m, &f, &s).unwrap().iter().all(TheoremCheck::holds));
        let sq = parse_ideal("x1*x2, x3*x4, x5*x6", None).unwrap();
        let f = theorem_preconditions(&sq).unwrap();
        assert!(!f.any());
    }

    #[test]
    fn powers_of_maximal() {
        let rows = powers_linearity_profile(&MonomialIdeal::maximal_power(3, 2), 3, P).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.linear));
        assert_eq!(rows[2].degree, 6);
    }

    #[test]
    fn products() {
        let m = MonomialIdeal::maximal_power(3, 1);
        let v = product_polymatroidality(&m, &m).unwrap();
        assert_eq!(v, ProductVerdict { product: true, left: true, right: true });
        assert!(product_polymatroidality(&m, &MonomialIdeal::maximal_power(2, 1)).is_err());
    }
}
