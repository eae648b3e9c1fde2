//! Irreducible decomposition, associated and minimal primes, and
//! intersection-of-prime-powers presentations.
//!
//! A monomial ideal `I` is of *intersection type* when
//! `I = ∩_{p ∈ Ass(R/I)} p^{d_p}`; it is of *strong intersection type* when
//! the exponents can be taken to be `reg(I(p))`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::ideal::{monomials_of_degree, MonomialIdeal};
use crate::monomial::{Monomial, VarSet};
use crate::prime::MonomialPrime;

/// Largest support size for which minimal vertex covers are enumerated.
pub const MAX_COVER_VARS: usize = 16;

/// Largest number of exponent vectors tried by [`find_presentations`].
pub const MAX_PRESENTATION_CANDIDATES: usize = 1 << 20;

/// An irreducible monomial ideal `(x_i^{e_i} : e_i > 0)`.
///
/// Stored as an exponent vector where `0` means the variable is absent.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IrreducibleComponent {
    exps: Monomial,
}

impl IrreducibleComponent {
    /// Builds a component; at least one exponent must be positive.
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.iter().all(|&e| e == 0) {
            return Err(Error::InvalidPresentation("irreducible component with empty support"));
        }
        Ok(IrreducibleComponent { exps: Monomial::new(exps) })
    }

    pub fn nvars(&self) -> usize {
        self.exps.nvars()
    }

    /// Exponent of `x_i`, absent when the variable does not appear.
    pub fn exponent(&self, i: usize) -> Option<u32> {
        match self.exps.exponent(i) {
            0 => None,
            e => Some(e),
        }
    }

    pub fn exponents(&self) -> &[u32] {
        self.exps.exponents()
    }

    /// The radical, i.e. the prime generated by the support.
    pub fn prime(&self) -> MonomialPrime {
        MonomialPrime::new(self.nvars(), self.exps.support()).expect("component fits its ring")
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.exps
            .exponents()
            .iter()
            .zip(m.exponents())
            .any(|(&e, &a)| e > 0 && a >= e)
    }

    /// `self ⊆ other` for irreducible ideals.
    pub fn is_subset_of(&self, other: &IrreducibleComponent) -> bool {
        self.exps
            .exponents()
            .iter()
            .zip(other.exps.exponents())
            .all(|(&e, &f)| e == 0 || (f > 0 && f <= e))
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.nvars();
        let gens = self
            .exps
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| Monomial::pure_power(n, i, e))
            .collect();
        MonomialIdeal::from_gens_unchecked(n, gens)
    }
}

impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ideal())
    }
}

/// `∩ p^{d_p}` over distinct primes.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntersectionPresentation {
    nvars: usize,
    terms: Vec<(MonomialPrime, u32)>,
}

impl IntersectionPresentation {
    pub fn new(nvars: usize, terms: Vec<(MonomialPrime, u32)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (p, d) in &terms {
            if p.nvars() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: p.nvars() });
            }
            if p.vars().is_empty() {
                return Err(Error::InvalidPresentation("zero prime in presentation"));
            }
            if *d == 0 {
                return Err(Error::InvalidPresentation("exponent must be positive"));
            }
            if !seen.insert(*p) {
                return Err(Error::InvalidPresentation("repeated prime"));
            }
        }
        Ok(IntersectionPresentation { nvars, terms })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(MonomialPrime, u32)] {
        &self.terms
    }

    pub fn primes(&self) -> impl Iterator<Item = &MonomialPrime> {
        self.terms.iter().map(|(p, _)| p)
    }

    /// Exponent attached to `p`, if present.
    pub fn exponent_of(&self, p: &MonomialPrime) -> Option<u32> {
        self.terms.iter().find(|(q, _)| q == p).map(|&(_, d)| d)
    }
}

impl fmt::Display for IntersectionPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("(1)");
        }
        for (k, (p, d)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" ∩ ")?;
            }
            write!(f, "{p}^{d}")?;
        }
        Ok(())
    }
}

/// `p^k`: all degree-`k` monomials in the variables of `p`. `k = 0` gives
/// the unit ideal.
pub fn prime_power(p: &MonomialPrime, k: u32) -> MonomialIdeal {
    let n = p.nvars();
    if k == 0 {
        return MonomialIdeal::unit(n);
    }
    let vars = p.indices();
    let gens = monomials_of_degree(vars.len(), k, None)
        .into_iter()
        .map(|small| {
            let mut e = alloc::vec![0; n];
            for (slot, &i) in vars.iter().enumerate() {
                e[i] = small.exponent(slot);
            }
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::from_gens_unchecked(n, gens)
}

/// `I ∩ J`.
pub fn intersect(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    i.intersect(j)
}

/// Evaluates `∩ p^{d_p}` left to right; the empty presentation is `(1)`.
pub fn intersect_presentation(p: &IntersectionPresentation) -> MonomialIdeal {
    p.terms.iter().fold(MonomialIdeal::unit(p.nvars), |acc, (q, d)| {
        acc.intersect(&prime_power(q, *d)).expect("terms share the ring")
    })
}

fn split(nvars: usize, gens: Vec<Monomial>, out: &mut BTreeSet<IrreducibleComponent>) {
    // gens is minimal and canonically ordered
    match gens.iter().find(|g| g.support().len() >= 2) {
        None => {
            let mut exps = alloc::vec![0; nvars];
            for g in &gens {
                let i = g.pure_power_var().expect("pure power");
                exps[i] = g.exponent(i);
            }
            out.insert(IrreducibleComponent { exps: Monomial::new(exps) });
        }
        Some(u) => {
            let i = u.support().iter().next().expect("nonempty support");
            let pure = Monomial::pure_power(nvars, i, u.exponent(i));
            let rest = u.drop_vars(VarSet::singleton(i));
            let mut left = gens.clone();
            left.push(pure);
            let mut right = gens;
            right.push(rest);
            split(nvars, MonomialIdeal::from_gens_unchecked(nvars, left).gens().to_vec(), out);
            split(nvars, MonomialIdeal::from_gens_unchecked(nvars, right).gens().to_vec(), out);
        }
    }
}

fn intersect_components(nvars: usize, comps: &[&IrreducibleComponent]) -> MonomialIdeal {
    comps
        .iter()
        .fold(MonomialIdeal::unit(nvars), |acc, c| acc.intersect(&c.to_ideal()).expect("same ring"))
}

/// Irredundant irreducible decomposition of a proper nonzero ideal.
///
/// Splits `u = x_i^a u''` at the first non-pure-power generator as
/// `I = (I + x_i^a) ∩ (I + u'')` until all generators are pure powers, then
/// prunes redundant components.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    ideal.require_proper_nonzero()?;
    let n = ideal.nvars();
    let mut leaves = BTreeSet::new();
    split(n, ideal.gens().to_vec(), &mut leaves);
    let leaves: Vec<_> = leaves.into_iter().collect();

    // a component containing another one is redundant
    let mut comps: Vec<IrreducibleComponent> = leaves
        .iter()
        .filter(|c| !leaves.iter().any(|d| d != *c && d.is_subset_of(c)))
        .cloned()
        .collect();

    let mut k = 0;
    while k < comps.len() {
        let others: Vec<&IrreducibleComponent> =
            comps.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, c)| c).collect();
        let redundant = !others.is_empty()
            && intersect_components(n, &others).gens().iter().all(|g| comps[k].contains(g));
        if redundant {
            comps.remove(k);
        } else {
            k += 1;
        }
    }
    Ok(comps)
}

/// `Ass(R/I)`: supports of an irredundant irreducible decomposition, in
/// canonical order.
pub fn ass_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let set: BTreeSet<MonomialPrime> =
        irreducible_decomposition(ideal)?.iter().map(IrreducibleComponent::prime).collect();
    Ok(set.into_iter().collect())
}

/// Minimal primes, computed as the minimal vertex covers of the generator
/// supports (independently of the decomposition).
pub fn min_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    ideal.require_proper_nonzero()?;
    let n = ideal.nvars();
    let supp = ideal.support();
    if supp.len() > MAX_COVER_VARS {
        return Err(Error::CapExceeded {
            what: "support size for vertex covers",
            limit: MAX_COVER_VARS,
            actual: supp.len(),
        });
    }
    let edges: Vec<u64> = ideal.gens().iter().map(|g| g.support().bits()).collect();
    let supp_vars: Vec<usize> = supp.iter().collect();
    let k = supp_vars.len();
    let mut subsets: Vec<u64> = (0u64..(1u64 << k))
        .map(|local| {
            supp_vars
                .iter()
                .enumerate()
                .filter(|(b, _)| local >> b & 1 == 1)
                .fold(0u64, |acc, (_, &i)| acc | 1 << i)
        })
        .collect();
    subsets.sort_by_key(|s| s.count_ones());
    let mut covers: Vec<u64> = Vec::new();
    for s in subsets {
        if edges.iter().all(|&e| e & s != 0) && !covers.iter().any(|&c| c & !s == 0) {
            covers.push(s);
        }
    }
    let mut primes: Vec<MonomialPrime> = covers
        .into_iter()
        .map(|c| MonomialPrime::new(n, VarSet::from_bits(c)).expect("within ring"))
        .collect();
    primes.sort();
    Ok(primes)
}

/// Inclusion-minimal elements of `Ass(R/I)`; must agree with
/// [`min_primes`].
pub fn minimal_associated_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let ass = ass_primes(ideal)?;
    Ok(ass
        .iter()
        .filter(|p| !ass.iter().any(|q| q != *p && q.is_subset(p)))
        .copied()
        .collect())
}

/// Minimum number of variables generating a minimal prime.
pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(min_primes(ideal)?.iter().map(MonomialPrime::height).min().unwrap_or(0))
}

/// All associated primes have the same height.
pub fn is_unmixed(ideal: &MonomialIdeal) -> Result<bool> {
    let h = height(ideal)?;
    Ok(ass_primes(ideal)?.iter().all(|p| p.height() == h))
}

/// Some associated prime is not minimal.
pub fn has_embedded(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(ass_primes(ideal)?.len() > min_primes(ideal)?.len())
}

/// Outcome of [`strong_intersection_check`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StrongIntersection {
    /// `I = ∩_{p ∈ Ass} p^{reg(I(p))}`.
    pub holds: bool,
    pub presentation: IntersectionPresentation,
}

/// Builds `∩_{p ∈ Ass(R/I)} p^{reg_fn(I(p))}` and compares it with `I`.
///
/// `reg_fn` receives the localization `I(p)`.
pub fn strong_intersection_check<F>(ideal: &MonomialIdeal, mut reg_fn: F) -> Result<StrongIntersection>
where
    F: FnMut(&MonomialIdeal) -> Result<u32>,
{
    ideal.require_proper_nonzero()?;
    if ideal.equigenerated_degree().is_none() {
        return Err(Error::NotEquigenerated);
    }
    let mut terms = Vec::new();
    for p in ass_primes(ideal)? {
        let local = ideal.localize(&p)?;
        terms.push((p, reg_fn(&local)?));
    }
    let presentation = IntersectionPresentation::new(ideal.nvars(), terms)?;
    let holds = intersect_presentation(&presentation) == *ideal;
    Ok(StrongIntersection { holds, presentation })
}

/// One row of [`presentation_bounds`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ExponentBound {
    pub prime: MonomialPrime,
    pub exponent: u32,
    pub regularity: u32,
}

impl ExponentBound {
    pub fn within(&self) -> bool {
        self.exponent <= self.regularity
    }
}

/// For a presentation indexed exactly by `Ass(R/I)` that evaluates to `I`,
/// pairs each `d_p` with `reg(I(p))`. Returns `None` when the
/// presentation is not such a presentation of `I`.
pub fn presentation_bounds<F>(
    ideal: &MonomialIdeal,
    presentation: &IntersectionPresentation,
    mut reg_fn: F,
) -> Result<Option<Vec<ExponentBound>>>
where
    F: FnMut(&MonomialIdeal) -> Result<u32>,
{
    if presentation.nvars() != ideal.nvars() {
        return Err(Error::DimensionMismatch { expected: ideal.nvars(), found: presentation.nvars() });
    }
    let ass: BTreeSet<MonomialPrime> = ass_primes(ideal)?.into_iter().collect();
    let primes: BTreeSet<MonomialPrime> = presentation.primes().copied().collect();
    if ass != primes || intersect_presentation(presentation) != *ideal {
        return Ok(None);
    }
    let mut rows = Vec::new();
    for &(prime, exponent) in presentation.terms() {
        let regularity = reg_fn(&ideal.localize(&prime)?)?;
        rows.push(ExponentBound { prime, exponent, regularity });
    }
    Ok(Some(rows))
}

/// Every presentation `I = ∩_{p ∈ Ass} p^{d_p}` with positive exponents.
///
/// `I ⊆ p^{d_p}` forces `d_p` to be at most the smallest `p`-degree of a
/// generator, which bounds the search.
pub fn find_presentations(ideal: &MonomialIdeal) -> Result<Vec<IntersectionPresentation>> {
    let ass = ass_primes(ideal)?;
    let n = ideal.nvars();
    let caps: Vec<u32> = ass
        .iter()
        .map(|p| {
            ideal
                .gens()
                .iter()
                .map(|g| p.vars().iter().map(|i| g.exponent(i)).sum::<u32>())
                .min()
                .unwrap_or(0)
        })
        .collect();
    if caps.contains(&0) {
        return Ok(Vec::new());
    }
    let total = caps.iter().try_fold(1usize, |acc, &c| acc.checked_mul(c as usize));
    match total {
        Some(t) if t <= MAX_PRESENTATION_CANDIDATES => {}
        _ => {
            return Err(Error::CapExceeded {
                what: "presentation candidates",
                limit: MAX_PRESENTATION_CANDIDATES,
                actual: total.unwrap_or(usize::MAX),
            })
        }
    }
    let powers: Vec<Vec<MonomialIdeal>> = ass
        .iter()
        .zip(&caps)
        .map(|(p, &c)| (1..=c).map(|d| prime_power(p, d)).collect())
        .collect();
    let mut found = Vec::new();
    let mut choice = alloc::vec![1u32; ass.len()];
    loop {
        let eval = choice
            .iter()
            .zip(&powers)
            .fold(MonomialIdeal::unit(n), |acc, (&d, pw)| {
                acc.intersect(&pw[d as usize - 1]).expect("same ring")
            });
        if eval == *ideal {
            let terms = ass.iter().copied().zip(choice.iter().copied()).collect();
            found.push(IntersectionPresentation::new(n, terms)?);
        }
        // odometer
        let mut k = 0;
        loop {
            if k == choice.len() {
                return Ok(found);
            }
            if choice[k] < caps[k] {
                choice[k] += 1;
                break;
            }
            choice[k] = 1;
            k += 1;
        }
    }
}

/// The ideal generated by the degree-`d` part of `I`: generators of degree
/// at least `d` are kept, lower-degree ones are multiplied by every
/// monomial of the missing degree.
pub fn truncate_at(ideal: &MonomialIdeal, d: u32) -> MonomialIdeal {
    let n = ideal.nvars();
    let mut gens = Vec::new();
    for u in ideal.gens() {
        let e = u.degree();
        if e >= d {
            gens.push(u.clone());
        } else {
            for w in monomials_of_degree(n, d - e, None) {
                gens.push(u.checked_mul(&w, u32::MAX).expect("degree fits u32"));
            }
        }
    }
    MonomialIdeal::from_gens_unchecked(n, gens)
}
