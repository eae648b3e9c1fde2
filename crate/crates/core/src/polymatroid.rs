//! Polymatroidal and matroidal ideals, and the Veronese-type and
//! transversal families.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ideal::{monomials_of_degree, ExponentBounds, MonomialIdeal};
use crate::monomial::{Monomial, DEFAULT_MAX_EXPONENT};
use crate::prime::MonomialPrime;

/// A failed exchange: `deg_{x_i}(u) > deg_{x_i}(v)` but no `j` with
/// `deg_{x_j}(v) > deg_{x_j}(u)` has `x_j (u / x_i) ∈ I`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExchangeViolation {
    pub u: Monomial,
    pub v: Monomial,
    /// 0-based variable index.
    pub i: usize,
}

/// Verdict of [`is_polymatroidal`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolymatroidVerdict {
    pub polymatroidal: bool,
    /// First violating triple, in canonical generator order. Absent when
    /// the ideal is polymatroidal or not generated in one degree.
    pub witness: Option<ExchangeViolation>,
}

/// Exchange check, verbatim over ordered pairs of generators.
///
/// Ideals not generated in a single degree are not polymatroidal.
pub fn is_polymatroidal(ideal: &MonomialIdeal) -> Result<PolymatroidVerdict> {
    ideal.require_proper_nonzero()?;
    if ideal.equigenerated_degree().is_none() {
        return Ok(PolymatroidVerdict { polymatroidal: false, witness: None });
    }
    // In one degree, membership of a degree-d monomial is generator lookup.
    let gens = ideal.gens();
    let lookup: BTreeSet<&[u32]> = gens.iter().map(Monomial::exponents).collect();
    let n = ideal.nvars();
    let mut w: Vec<u32> = alloc::vec![0; n];
    for u in gens {
        for v in gens {
            for i in 0..n {
                if u.exponent(i) <= v.exponent(i) {
                    continue;
                }
                let ok = (0..n).filter(|&j| v.exponent(j) > u.exponent(j)).any(|j| {
                    w.copy_from_slice(u.exponents());
                    w[i] -= 1;
                    w[j] += 1;
                    lookup.contains(w.as_slice())
                });
                if !ok {
                    return Ok(PolymatroidVerdict {
                        polymatroidal: false,
                        witness: Some(ExchangeViolation { u: u.clone(), v: v.clone(), i }),
                    });
                }
            }
        }
    }
    Ok(PolymatroidVerdict { polymatroidal: true, witness: None })
}

/// Squarefree and polymatroidal.
pub fn is_matroidal(ideal: &MonomialIdeal) -> Result<bool> {
    let verdict = is_polymatroidal(ideal)?;
    Ok(ideal.is_squarefree() && verdict.polymatroidal)
}

/// `I_(d; a)`: all degree-`d` monomials with `deg_{x_i} ≤ a_i`.
pub fn veronese_type(nvars: usize, d: u32, bounds: &ExponentBounds) -> Result<MonomialIdeal> {
    if bounds.0.len() != nvars {
        return Err(Error::DimensionMismatch { expected: nvars, found: bounds.0.len() });
    }
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    if bounds.total() < u64::from(d) {
        return Err(Error::InfeasibleBounds { degree: d, total: bounds.total() });
    }
    if d > DEFAULT_MAX_EXPONENT {
        return Err(Error::ExponentOverflow { cap: DEFAULT_MAX_EXPONENT });
    }
    let gens = monomials_of_degree(nvars, d, Some(bounds.as_slice()));
    MonomialIdeal::new(nvars, gens)
}

/// `Some((d, a))` iff `I = I_(d; a)` with `a` the exponent bounds of `I`.
pub fn is_veronese_type(ideal: &MonomialIdeal) -> Result<Option<(u32, ExponentBounds)>> {
    ideal.require_proper_nonzero()?;
    let Some(d) = ideal.equigenerated_degree() else {
        return Ok(None);
    };
    let bounds = ideal.descriptors()?.bounds;
    let candidate = veronese_type(ideal.nvars(), d, &bounds)?;
    Ok((candidate == *ideal).then_some((d, bounds)))
}

/// Product of monomial prime ideals.
pub fn transversal(primes: &[MonomialPrime]) -> Result<MonomialIdeal> {
    let (first, rest) = primes.split_first().ok_or(Error::EmptyPrimeList)?;
    if primes.iter().any(|p| p.vars().is_empty()) {
        return Err(Error::InvalidPresentation("zero prime in product"));
    }
    rest.iter().try_fold(first.to_ideal(), |acc, p| acc.product(&p.to_ideal()))
}
