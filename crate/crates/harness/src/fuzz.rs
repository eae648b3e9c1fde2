//! Seeded random ideals and the localization fuzz campaign.

use monideal_core::polymatroid::{transversal, veronese_type};
use monideal_core::{ExponentBounds, Monomial, MonomialIdeal, MonomialPrime, VarSet};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::doc::IdealDoc;
use crate::scan::{scan_localizations, theorem_preconditions, verify_theorems, MAX_SCAN_VARS};
use crate::HarnessError;

/// Upper bound on requested generators, to keep a typo from allocating
/// gigabytes.
pub const MAX_FUZZ_GENS: usize = 4096;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// A degree-`d` monomial drawn by dropping `d` balls into `n` bins.
fn random_monomial(rng: &mut impl Rng, nvars: usize, degree: u32, squarefree: bool) -> Monomial {
    let mut e = vec![0u32; nvars];
    if squarefree {
        for i in sample(rng, nvars, degree as usize) {
            e[i] = 1;
        }
    } else {
        for _ in 0..degree {
            e[rng.gen_range(0..nvars)] += 1;
        }
    }
    Monomial::new(e)
}

fn check_params(nvars: usize, degree: u32, gen_count: usize, squarefree: bool) -> Result<(), HarnessError> {
    let bad = |m: String| Err(HarnessError::InvalidParameters(m));
    if nvars == 0 || nvars > MAX_SCAN_VARS {
        return bad(format!("nvars must be in 1..={MAX_SCAN_VARS}"));
    }
    if degree == 0 {
        return bad("degree must be at least 1".into());
    }
    if gen_count == 0 || gen_count > MAX_FUZZ_GENS {
        return bad(format!("gen_count must be in 1..={MAX_FUZZ_GENS}"));
    }
    if squarefree && gen_count as u128 > binomial(nvars, degree as usize) {
        return bad(format!("only C({nvars}, {degree}) squarefree monomials of degree {degree} exist"));
    }
    Ok(())
}

/// Deterministic random ideal generated in degree `degree` from
/// `gen_count` draws (fewer generators survive if draws repeat).
///
/// Squarefree draws are without replacement, so exactly `gen_count`
/// generators come back.
pub fn random_ideal(
    seed: u64,
    nvars: usize,
    degree: u32,
    gen_count: usize,
    squarefree: bool,
) -> Result<MonomialIdeal, HarnessError> {
    check_params(nvars, degree, gen_count, squarefree)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_ideal_with(&mut rng, nvars, degree, gen_count, squarefree))
}

fn random_ideal_with(rng: &mut ChaCha8Rng, nvars: usize, degree: u32, gen_count: usize, squarefree: bool) -> MonomialIdeal {
    let mut gens: Vec<Monomial> = Vec::with_capacity(gen_count);
    while gens.len() < gen_count {
        let m = random_monomial(rng, nvars, degree, squarefree);
        if squarefree && gens.contains(&m) {
            continue;
        }
        gens.push(m);
    }
    MonomialIdeal::new(nvars, gens).expect("generators match nvars")
}

/// Shape of the ideals a campaign draws.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct FuzzConfig {
    pub seed: u64,
    pub samples: usize,
    pub nvars: usize,
    pub max_degree: u32,
    pub max_gens: usize,
    pub field_char: u32,
}

/// How a sample was drawn.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Random,
    RandomSquarefree,
    Veronese,
    Transversal,
}

/// Draws one sample. Veronese-type and transversal draws keep the
/// polymatroidal side of every biconditional exercised.
pub fn sample_ideal(seed: u64, cfg: &FuzzConfig) -> (Family, MonomialIdeal) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = cfg.nvars;
    // degree 1 and principal ideals are trivially polymatroidal
    let d = rng.gen_range(cfg.max_degree.min(2)..=cfg.max_degree);
    match rng.gen_range(0..10) {
        0 | 1 => {
            let bounds = ExponentBounds((0..n).map(|_| rng.gen_range(0..=d)).collect());
            if let Ok(v) = veronese_type(n, d, &bounds) {
                return (Family::Veronese, v);
            }
        }
        2 | 3 => {
            let primes: Vec<MonomialPrime> = (0..d)
                .map(|_| {
                    let mut vars = VarSet::EMPTY;
                    while vars.is_empty() {
                        vars = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
                    }
                    MonomialPrime::new(n, vars).expect("nonempty subset")
                })
                .collect();
            if let Ok(t) = transversal(&primes) {
                return (Family::Transversal, t);
            }
        }
        4 | 5 if (d as usize) <= n => {
            let cap = binomial(n, d as usize).min(cfg.max_gens as u128) as usize;
            let g = rng.gen_range(cap.min(2)..=cap);
            return (Family::RandomSquarefree, random_ideal_with(&mut rng, n, d, g, true));
        }
        _ => {}
    }
    let g = rng.gen_range(cfg.max_gens.min(2)..=cfg.max_gens);
    (Family::Random, random_ideal_with(&mut rng, n, d, g, false))
}

/// Per-sample seed: a fixed mix of the campaign seed and the sample index.
pub fn sample_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64).wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// A sample whose scan disagrees with the exchange check.
#[derive(Clone, Debug, Serialize)]
pub struct Finding {
    pub index: usize,
    pub seed: u64,
    pub family: Family,
    pub ideal: IdealDoc,
    pub text: String,
    pub all_linear: bool,
    pub polymatroidal: bool,
    /// Applicable results whose biconditional failed. Nonempty means a
    /// proven statement was contradicted.
    pub violated: Vec<&'static str>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignReport {
    pub config: FuzzConfig,
    pub samples: usize,
    pub polymatroidal: usize,
    pub all_linear: usize,
    /// Samples where at least one classification result applied.
    pub covered: usize,
    pub findings: Vec<Finding>,
}

impl CampaignReport {
    /// Findings that contradict an applicable result.
    pub fn failures(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| !f.violated.is_empty())
    }
}

struct SampleOutcome {
    all_linear: bool,
    polymatroidal: bool,
    covered: bool,
    finding: Option<Finding>,
}

fn run_sample(cfg: &FuzzConfig, index: usize) -> Result<SampleOutcome, HarnessError> {
    let seed = sample_seed(cfg.seed, index);
    let (family, ideal) = sample_ideal(seed, cfg);
    let scan = scan_localizations(&ideal, cfg.field_char)?;
    let flags = theorem_preconditions(&ideal)?;
    let checks = verify_theorems(&ideal, &flags, &scan)?;
    let violated: Vec<&'static str> = checks.iter().filter(|c| !c.holds()).map(|c| c.flag).collect();
    let finding = (!scan.consistent || !violated.is_empty()).then(|| Finding {
        index,
        seed,
        family,
        ideal: IdealDoc::from(&ideal),
        text: ideal.to_string(),
        all_linear: scan.all_linear,
        polymatroidal: scan.polymatroidal,
        violated,
    });
    Ok(SampleOutcome { all_linear: scan.all_linear, polymatroidal: scan.polymatroidal, covered: flags.any(), finding })
}

/// Runs `cfg.samples` draws in parallel. Output does not depend on the
/// thread count.
pub fn run_campaign(cfg: &FuzzConfig) -> Result<CampaignReport, HarnessError> {
    check_params(cfg.nvars, cfg.max_degree, cfg.max_gens, false)?;
    let outcomes = (0..cfg.samples)
        .into_par_iter()
        .map(|i| run_sample(cfg, i))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CampaignReport {
        config: *cfg,
        samples: outcomes.len(),
        polymatroidal: outcomes.iter().filter(|o| o.polymatroidal).count(),
        all_linear: outcomes.iter().filter(|o| o.all_linear).count(),
        covered: outcomes.iter().filter(|o| o.covered).count(),
        findings: outcomes.into_iter().filter_map(|o| o.finding).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a = random_ideal(7, 5, 3, 6, false).unwrap();
        assert_eq!(a, random_ideal(7, 5, 3, 6, false).unwrap());
        assert_eq!(a.equigenerated_degree(), Some(3));
    }

    #[test]
    fn squarefree_contract() {
        for seed in 0..20 {
            let i = random_ideal(seed, 4, 2, 6, true).unwrap();
            assert!(i.is_squarefree());
            assert_eq!(i.len(), 6);
            assert_eq!(i.equigenerated_degree(), Some(2));
        }
        assert!(random_ideal(0, 4, 2, 7, true).is_err());
        assert!(random_ideal(0, 4, 0, 1, false).is_err());
        assert!(random_ideal(0, 4, 2, 0, false).is_err());
    }

    #[test]
    fn small_campaign() {
        let cfg = FuzzConfig { seed: 1, samples: 30, nvars: 3, max_degree: 3, max_gens: 5, field_char: 32003 };
        let r = run_campaign(&cfg).unwrap();
        assert_eq!(r.samples, 30);
        assert!(r.polymatroidal > 0);
        assert_eq!(r.failures().count(), 0, "{:?}", r.findings);
        let again = run_campaign(&cfg).unwrap();
        assert_eq!(r.findings.len(), again.findings.len());
    }
}
