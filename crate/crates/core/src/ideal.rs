use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, VarSet, DEFAULT_MAX_EXPONENT, MAX_VARS};
use crate::prime::MonomialPrime;

/// A monomial ideal, held as its minimal generating set `G(I)`.
///
/// Generators form a divisibility antichain and are kept in descending
/// lexicographic order, so two ideals are equal iff their generator lists
/// are. The zero ideal has no generators; the unit ideal is `(1)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// Per-variable maxima `a_i = max { deg_{x_i}(u) : u in G(I) }`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExponentBounds(pub Vec<u32>);

impl ExponentBounds {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&a| u64::from(a)).sum()
    }
}

/// Numeric summary of an ideal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Descriptors {
    pub gcd: Monomial,
    pub support: VarSet,
    pub bounds: ExponentBounds,
    /// `Some(d)` iff every minimal generator has degree `d`.
    pub equigenerated_degree: Option<u32>,
    pub squarefree: bool,
    /// Variables `i` with `x_i^d` in `G(I)`; empty unless equigenerated.
    pub pure_powers: VarSet,
}

/// Reduces a generator list to its divisibility-minimal elements in
/// canonical order.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_unstable_by(|a, b| b.cmp(a));
    kept
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, which may be redundant.
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables { nvars, max: MAX_VARS });
        }
        if let Some(bad) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::DimensionMismatch { expected: nvars, found: bad.nvars() });
        }
        Ok(MonomialIdeal { nvars, gens: minimalize(gens) })
    }

    /// Convenience constructor from raw exponent vectors.
    pub fn from_exponents<I, E>(nvars: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Vec<u32>>,
    {
        MonomialIdeal::new(nvars, gens.into_iter().map(|e| Monomial::new(e.into())).collect())
    }

    /// Caller guarantees every generator has `nvars` entries.
    pub(crate) fn from_gens_unchecked(nvars: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.iter().all(|g| g.nvars() == nvars));
        MonomialIdeal { nvars, gens: minimalize(gens) }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: alloc::vec![Monomial::one(nvars)] }
    }

    /// `m^d`, the `d`-th power of the graded maximal ideal.
    pub fn maximal_power(nvars: usize, d: u32) -> Self {
        let gens = monomials_of_degree(nvars, d, None);
        MonomialIdeal::from_gens_unchecked(nvars, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// The minimal generators, in canonical order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Number of minimal generators.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    fn check_dim(&self, nvars: usize) -> Result<()> {
        if nvars == self.nvars {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.nvars, found: nvars })
        }
    }

    /// `Err(ZeroIdeal)` for the zero ideal.
    pub fn require_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else {
            Ok(())
        }
    }

    /// `Err` for the zero and the unit ideal.
    pub fn require_proper_nonzero(&self) -> Result<()> {
        self.require_nonzero()?;
        if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    /// Membership test: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_dim(m.nvars())?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`.
    pub fn is_subideal_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_dim(other.nvars)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    /// Degree `d` if all generators share it.
    pub fn equigenerated_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn support(&self) -> VarSet {
        self.gens.iter().fold(VarSet::EMPTY, |s, g| s.union(g.support()))
    }

    /// Least common multiple of the generators (`1` for the zero ideal).
    pub fn lcm(&self) -> Monomial {
        self.gens.iter().fold(Monomial::one(self.nvars), |acc, g| acc.lcm(g))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.nvars)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal::from_gens_unchecked(self.nvars, gens))
    }

    /// `I ∩ J`, generated by pairwise least common multiples.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.nvars)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                gens.push(u.lcm(v));
            }
        }
        Ok(MonomialIdeal::from_gens_unchecked(self.nvars, gens))
    }

    /// `IJ` with the default exponent cap.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.product_capped(other, DEFAULT_MAX_EXPONENT)
    }

    pub fn product_capped(&self, other: &MonomialIdeal, cap: u32) -> Result<MonomialIdeal> {
        self.check_dim(other.nvars)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                gens.push(u.checked_mul(v, cap)?);
            }
        }
        Ok(MonomialIdeal::from_gens_unchecked(self.nvars, gens))
    }

    /// `I^k` for `k >= 1`, with the default exponent cap.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        self.power_capped(k, DEFAULT_MAX_EXPONENT)
    }

    pub fn power_capped(&self, k: u32, cap: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product_capped(self, cap)?;
        }
        Ok(acc)
    }

    /// `I : m`, generated by `u / gcd(u, m)` for `u` in `G(I)`.
    pub fn colon_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_dim(m.nvars())?;
        Ok(self.colon_unchecked(m))
    }

    fn colon_unchecked(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|u| u.colon(m)).collect();
        MonomialIdeal::from_gens_unchecked(self.nvars, gens)
    }

    /// `I[i] = I : x_i^∞` (0-based `i`).
    pub fn saturate_var(&self, i: usize) -> Result<MonomialIdeal> {
        if i >= self.nvars {
            return Err(Error::IndexOutOfRange { index: i, nvars: self.nvars });
        }
        Ok(self.drop_vars(VarSet::singleton(i)))
    }

    fn drop_vars(&self, vars: VarSet) -> MonomialIdeal {
        let gens = self.gens.iter().map(|u| u.drop_vars(vars)).collect();
        MonomialIdeal::from_gens_unchecked(self.nvars, gens)
    }

    /// `I : m^∞`, iterating `I <- ∩_i (I : x_i)` over all ambient
    /// variables until it stabilizes.
    pub fn saturate_graded(&self) -> Result<MonomialIdeal> {
        self.require_nonzero()?;
        let mut current = self.clone();
        loop {
            let mut next: Option<MonomialIdeal> = None;
            for i in 0..self.nvars {
                let q = current.colon_unchecked(&Monomial::var(self.nvars, i));
                next = Some(match next {
                    None => q,
                    Some(acc) => acc.intersect(&q)?,
                });
            }
            let next = next.unwrap_or_else(|| current.clone());
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Monomial localization `I(p)`: substitute `1` for every variable
    /// outside `p`. The result keeps the ambient variable count.
    pub fn localize(&self, p: &MonomialPrime) -> Result<MonomialIdeal> {
        self.check_dim(p.nvars())?;
        let outside = VarSet::full(self.nvars).difference(p.vars());
        Ok(self.drop_vars(outside))
    }

    /// Same result as [`localize`](Self::localize), computed as the
    /// saturation `I : (∏_{x_i ∉ p} x_i)^∞` by repeated colon.
    pub fn localize_via_saturation(&self, p: &MonomialPrime) -> Result<MonomialIdeal> {
        self.check_dim(p.nvars())?;
        let outside = VarSet::full(self.nvars).difference(p.vars());
        let w = Monomial::squarefree(self.nvars, outside);
        let mut current = self.clone();
        loop {
            let next = current.colon_unchecked(&w);
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Numeric descriptors; fails on the zero ideal.
    pub fn descriptors(&self) -> Result<Descriptors> {
        self.require_nonzero()?;
        let gcd = self.gens[1..].iter().fold(self.gens[0].clone(), |acc, g| acc.gcd(g));
        let bounds = ExponentBounds(self.lcm().into_exponents());
        let equigenerated_degree = self.equigenerated_degree();
        let pure_powers = match equigenerated_degree {
            Some(d) if d > 0 => self
                .gens
                .iter()
                .filter(|g| g.degree() == d)
                .filter_map(Monomial::pure_power_var)
                .collect(),
            _ => VarSet::EMPTY,
        };
        Ok(Descriptors {
            gcd,
            support: self.support(),
            bounds,
            equigenerated_degree,
            squarefree: self.is_squarefree(),
            pure_powers,
        })
    }
}

/// All monomials of degree `d` in `nvars` variables, optionally with
/// per-variable exponent caps, in descending lexicographic order.
pub(crate) fn monomials_of_degree(nvars: usize, d: u32, caps: Option<&[u32]>) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, caps: Option<&[u32]>, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if i + 1 == n {
            if caps.map_or(true, |c| left <= c[i]) {
                cur[i] = left;
                out.push(Monomial::new(cur.clone()));
                cur[i] = 0;
            }
            return;
        }
        let top = caps.map_or(left, |c| left.min(c[i]));
        for e in (0..=top).rev() {
            cur[i] = e;
            rec(i + 1, left - e, caps, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut cur = alloc::vec![0; nvars];
    rec(0, d, caps, &mut cur, &mut out);
    out
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens.iter().map(|g| g.to_vec())).unwrap()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ex14() -> MonomialIdeal {
        ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 2, 0]])
    }

    #[test]
    fn make_ideal_minimalizes() {
        let i = ideal(2, &[&[1, 1], &[2, 1]]);
        assert_eq!(i.gens(), &[mono(&[1, 1])]);
        assert_eq!(ex14().len(), 3);
        assert!(MonomialIdeal::new(2, vec![mono(&[1, 1, 1])]).is_err());
        assert!(MonomialIdeal::new(2, vec![]).unwrap().is_zero());
    }

    #[test]
    fn canonical_order_is_descending_lex() {
        assert_eq!(ex14().to_string(), "(x1*x2, x1*x3, x2^2)");
    }

    #[test]
    fn product_example() {
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        let j = ideal(2, &[&[2, 0], &[0, 2]]);
        let ij = i.product(&j).unwrap();
        assert_eq!(ij, ideal(2, &[&[3, 0], &[2, 1], &[1, 2], &[0, 3]]));
        assert_eq!(i.power(1).unwrap(), i);
        assert_eq!(i.power(0), Err(Error::ZeroPower));
    }

    #[test]
    fn colon_examples() {
        // (x1x2, x1x3, x2^2) : x1 = (x2, x3)
        let q = ex14().colon_monomial(&mono(&[1, 0, 0])).unwrap();
        assert_eq!(q, ideal(3, &[&[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(ex14().colon_monomial(&Monomial::one(3)).unwrap(), ex14());
        let m3 = MonomialIdeal::maximal_power(3, 3);
        assert!(m3.colon_monomial(&mono(&[3, 0, 0])).unwrap().is_unit());
    }

    #[test]
    fn saturate_var_examples() {
        assert_eq!(ex14().saturate_var(0).unwrap(), ideal(3, &[&[0, 1, 0], &[0, 0, 1]]));
        let i = ideal(3, &[&[1, 1, 0], &[0, 2, 0]]);
        assert_eq!(i.saturate_var(2).unwrap(), i);
        assert!(i.saturate_var(3).is_err());
    }

    #[test]
    fn saturate_graded_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.saturate_graded().unwrap(), ideal(2, &[&[1, 0]]));
        let p2 = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0]]);
        assert_eq!(p2.saturate_graded().unwrap(), p2);
        assert!(MonomialIdeal::maximal_power(3, 4).saturate_graded().unwrap().is_unit());
        assert_eq!(MonomialIdeal::zero(2).saturate_graded(), Err(Error::ZeroIdeal));
        // spectator variable: x3 is a nonzerodivisor, nothing to saturate
        let j = ideal(3, &[&[2, 0, 0], &[1, 1, 0]]);
        assert_eq!(j.saturate_graded().unwrap(), j);
    }

    #[test]
    fn localize_examples() {
        let sq = ideal(4, &[&[1, 1, 1, 0], &[1, 1, 0, 1], &[1, 0, 1, 1], &[0, 1, 1, 1]]);
        let p = MonomialPrime::from_indices(4, &[1, 2, 3]).unwrap();
        assert_eq!(sq.localize(&p).unwrap(), ideal(4, &[&[0, 1, 1, 0], &[0, 1, 0, 1], &[0, 0, 1, 1]]));
        assert_eq!(sq.localize(&MonomialPrime::maximal(4)).unwrap(), sq);
        let p12 = MonomialPrime::from_indices(3, &[0, 1]).unwrap();
        assert_eq!(ex14().localize(&p12).unwrap(), ideal(3, &[&[1, 0, 0], &[0, 2, 0]]));
        assert_eq!(ex14().localize_via_saturation(&p12).unwrap(), ex14().localize(&p12).unwrap());
    }

    #[test]
    fn squarefree_localization_is_a_single_colon() {
        let sq = ideal(4, &[&[1, 1, 1, 0], &[1, 1, 0, 1], &[1, 0, 1, 1], &[0, 1, 1, 1]]);
        for p in MonomialPrime::all_nonempty(4) {
            let outside = VarSet::full(4).difference(p.vars());
            let once = sq.colon_monomial(&Monomial::squarefree(4, outside)).unwrap();
            assert_eq!(once, sq.localize(&p).unwrap());
        }
    }

    #[test]
    fn descriptors_of_maximal_power() {
        let d = MonomialIdeal::maximal_power(3, 2).descriptors().unwrap();
        assert_eq!(d.pure_powers, VarSet::full(3));
        assert!(d.gcd.is_one());
        assert_eq!(d.equigenerated_degree, Some(2));
        assert_eq!(d.bounds.as_slice(), &[2, 2, 2]);
        assert!(MonomialIdeal::zero(3).descriptors().is_err());
    }

    #[test]
    fn maximal_power_count() {
        // C(n+d-1, d)
        assert_eq!(MonomialIdeal::maximal_power(4, 3).len(), 20);
        assert_eq!(MonomialIdeal::maximal_power(7, 3).len(), 84);
    }
}
