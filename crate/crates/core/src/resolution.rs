//! Multigraded Betti numbers, Castelnuovo-Mumford regularity and linear
//! resolutions of monomial ideals.
//!
//! [`betti`] computes `β_{i,a}(I)` as the homology of the degree-`a` strand
//! of the Koszul complex `K(x) ⊗ I`: in homological position `i` the strand
//! has one basis vector per `S ⊆ supp(a)` with `|S| = i` and
//! `x^{a - ε_S} ∈ I`. [`taylor_betti`] is an independent route through the
//! Taylor complex, used as a test oracle.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::linalg::{check_field, homology_dims, Matrix};
use crate::monomial::Monomial;
use crate::MonomialIdeal;

/// Default coefficient field characteristic.
pub const DEFAULT_CHAR: u32 = 32003;

/// Largest strand support handled by [`betti`] (strands have `2^k` cells).
pub const MAX_STRAND_VARS: usize = 20;

/// Generator limit of the Taylor oracle.
pub const MAX_TAYLOR_GENS: usize = 8;

/// Default generator cap for an exhaustive linear-quotients search.
pub const DEFAULT_QUOTIENT_CAP: usize = 22;

/// Node budget for the non-exhaustive search past the cap.
pub const QUOTIENT_SEARCH_BUDGET: usize = 50_000;

/// Nonzero multigraded Betti numbers `β_{i,a}(I)` over `F_p`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiTable {
    nvars: usize,
    field_char: u32,
    entries: BTreeMap<(usize, Monomial), u64>,
}

impl BettiTable {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field_char(&self) -> u32 {
        self.field_char
    }

    /// `β_{i,a}`, zero when absent.
    pub fn get(&self, i: usize, a: &Monomial) -> u64 {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    /// Entries `(i, a, β_{i,a})` sorted by `i`, then by `a`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Monomial, u64)> {
        self.entries.iter().map(|((i, a), &b)| (*i, a, b))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total Betti number `β_i = Σ_a β_{i,a}`.
    pub fn total(&self, i: usize) -> u64 {
        self.iter().filter(|e| e.0 == i).map(|e| e.2).sum()
    }

    /// Largest homological index with a nonzero entry.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// `max (|a| - i)` over nonzero entries.
    pub fn regularity(&self) -> Option<u32> {
        self.iter().map(|(i, a, _)| a.degree() - i as u32).max()
    }

    /// Coarse graded Betti numbers `β_{i,j}` with `j = |a|`.
    pub fn graded(&self) -> BTreeMap<(usize, u32), u64> {
        let mut out = BTreeMap::new();
        for (i, a, b) in self.iter() {
            *out.entry((i, a.degree())).or_insert(0) += b;
        }
        out
    }

    /// Table with multidegrees permuted by `perm` (new index `perm[i]` takes
    /// the old exponent at `i`).
    pub fn permuted(&self, perm: &[usize]) -> BettiTable {
        let entries = self
            .entries
            .iter()
            .map(|((i, a), &b)| {
                let mut e = alloc::vec![0; self.nvars];
                for (old, &new) in perm.iter().enumerate() {
                    e[new] = a.exponent(old);
                }
                ((*i, Monomial::new(e)), b)
            })
            .collect();
        BettiTable { nvars: self.nvars, field_char: self.field_char, entries }
    }
}

/// Renders the coarse table in the usual layout: row `r` lists
/// `β_{i,i+r}`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let graded = self.graded();
        let pd = self.projective_dimension().unwrap_or(0);
        let rows: BTreeSet<u32> = graded.keys().map(|&(i, j)| j - i as u32).collect();
        let width = graded.values().map(|b| b.to_string_len()).max().unwrap_or(1).max(1) + 1;
        write!(f, "{:>7}", "")?;
        for i in 0..=pd {
            write!(f, "{:>width$}", i)?;
        }
        writeln!(f)?;
        write!(f, "{:>7}", "total:")?;
        for i in 0..=pd {
            write!(f, "{:>width$}", self.total(i))?;
        }
        writeln!(f)?;
        for r in rows {
            write!(f, "{:>6}:", r)?;
            for i in 0..=pd {
                match graded.get(&(i, r + i as u32)) {
                    Some(b) => write!(f, "{:>width$}", b)?,
                    None => write!(f, "{:>width$}", ".")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

trait DecimalLen {
    fn to_string_len(&self) -> usize;
}

impl DecimalLen for u64 {
    fn to_string_len(&self) -> usize {
        let mut n = *self;
        let mut len = 1;
        while n >= 10 {
            n /= 10;
            len += 1;
        }
        len
    }
}

fn check_betti_input(ideal: &MonomialIdeal, p: u32) -> Result<()> {
    ideal.require_proper_nonzero()?;
    check_field(p)
}

/// Homology of the strand whose cells are the subsets `S ⊆ {0..k}` avoiding
/// at least one of the `tight` masks. Differential `e_S ↦ Σ ± e_{S \ j}`.
fn koszul_strand_homology(k: usize, tight: &[u64], p: u32) -> Vec<usize> {
    let size = 1usize << k;
    let mut index = alloc::vec![usize::MAX; size];
    let mut by_rank: Vec<Vec<u64>> = alloc::vec![Vec::new(); k + 1];
    for s in 0..size as u64 {
        if tight.iter().any(|&t| s & t == 0) {
            let r = s.count_ones() as usize;
            index[s as usize] = by_rank[r].len();
            by_rank[r].push(s);
        }
    }
    let top = by_rank.iter().rposition(|v| !v.is_empty()).unwrap_or(0);
    let dims: Vec<usize> = by_rank[..=top].iter().map(Vec::len).collect();
    let mut ranks = alloc::vec![0usize; top + 1];
    for i in 1..=top {
        let (rows, cols) = (dims[i - 1], dims[i]);
        if rows == 0 || cols == 0 {
            continue;
        }
        let mut m = Matrix::zeros(rows, cols);
        for (c, &s) in by_rank[i].iter().enumerate() {
            let mut bits = s;
            let mut pos = 0;
            while bits != 0 {
                let j = bits.trailing_zeros();
                bits &= bits - 1;
                let face = s & !(1 << j);
                m.set_sign(index[face as usize], c, pos % 2 == 1, p);
                pos += 1;
            }
        }
        ranks[i] = m.rank(p);
    }
    homology_dims(&dims, &ranks)
}

/// Multigraded Betti numbers of `I` over `F_p`.
///
/// Every multidegree `a ≤ lcm(G(I))` is visited. Strands where `a` is not
/// the lcm of the generators dividing `x^a` are cones and are skipped.
pub fn betti(ideal: &MonomialIdeal, p: u32) -> Result<BettiTable> {
    check_betti_input(ideal, p)?;
    let n = ideal.nvars();
    let lcm = ideal.lcm();
    if lcm.support().len() > MAX_STRAND_VARS {
        return Err(Error::CapExceeded {
            what: "strand support size",
            limit: MAX_STRAND_VARS,
            actual: lcm.support().len(),
        });
    }
    let mut entries = BTreeMap::new();
    let bound = lcm.exponents();
    let mut a = alloc::vec![0u32; n];
    let mut divisors: Vec<&Monomial> = Vec::new();
    let mut tight: Vec<u64> = Vec::new();
    loop {
        divisors.clear();
        divisors.extend(ideal.gens().iter().filter(|g| g.exponents().iter().zip(&a).all(|(x, y)| x <= y)));
        if !divisors.is_empty() {
            let reached = (0..n).all(|j| divisors.iter().any(|g| g.exponent(j) == a[j]));
            if reached {
                let supp: Vec<usize> = (0..n).filter(|&j| a[j] > 0).collect();
                tight.clear();
                tight.extend(divisors.iter().map(|g| {
                    supp.iter()
                        .enumerate()
                        .filter(|&(_, &j)| g.exponent(j) == a[j])
                        .fold(0u64, |acc, (b, _)| acc | 1 << b)
                }));
                let h = koszul_strand_homology(supp.len(), &tight, p);
                for (i, &rank) in h.iter().enumerate() {
                    if rank > 0 {
                        entries.insert((i, Monomial::new(a.clone())), rank as u64);
                    }
                }
            }
        }
        let mut k = 0;
        loop {
            if k == n {
                return Ok(BettiTable { nvars: n, field_char: p, entries });
            }
            if a[k] < bound[k] {
                a[k] += 1;
                break;
            }
            a[k] = 0;
            k += 1;
        }
    }
}

/// Betti numbers from the Taylor complex (at most [`MAX_TAYLOR_GENS`]
/// generators). After tensoring with the field only faces sharing the
/// same lcm survive in the differential.
pub fn taylor_betti(ideal: &MonomialIdeal, p: u32) -> Result<BettiTable> {
    check_betti_input(ideal, p)?;
    let gens = ideal.gens();
    if gens.len() > MAX_TAYLOR_GENS {
        return Err(Error::CapExceeded {
            what: "generators for the Taylor complex",
            limit: MAX_TAYLOR_GENS,
            actual: gens.len(),
        });
    }
    let g = gens.len();
    let mut lcms: Vec<Monomial> = Vec::with_capacity(1 << g);
    lcms.push(Monomial::one(ideal.nvars()));
    for face in 1usize..(1 << g) {
        let low = face.trailing_zeros() as usize;
        let rest = face & (face - 1);
        lcms.push(lcms[rest].lcm(&gens[low]));
    }
    let mut groups: BTreeMap<&Monomial, Vec<usize>> = BTreeMap::new();
    for (face, a) in lcms.iter().enumerate().skip(1) {
        groups.entry(a).or_default().push(face);
    }
    let mut entries = BTreeMap::new();
    for (a, faces) in groups {
        // homological index i <-> faces with i + 1 generators
        let mut by_index: Vec<Vec<usize>> = alloc::vec![Vec::new(); g];
        let mut index: BTreeMap<usize, usize> = BTreeMap::new();
        for &face in &faces {
            let i = face.count_ones() as usize - 1;
            index.insert(face, by_index[i].len());
            by_index[i].push(face);
        }
        let dims: Vec<usize> = by_index.iter().map(Vec::len).collect();
        let mut ranks = alloc::vec![0usize; g];
        for i in 1..g {
            if dims[i] == 0 || dims[i - 1] == 0 {
                continue;
            }
            let mut m = Matrix::zeros(dims[i - 1], dims[i]);
            for (c, &face) in by_index[i].iter().enumerate() {
                let mut pos = 0;
                for j in 0..g {
                    if face >> j & 1 == 0 {
                        continue;
                    }
                    let sub = face & !(1 << j);
                    if let Some(&r) = index.get(&sub) {
                        m.set_sign(r, c, pos % 2 == 1, p);
                    }
                    pos += 1;
                }
            }
            ranks[i] = m.rank(p);
        }
        for (i, &rank) in homology_dims(&dims, &ranks).iter().enumerate() {
            if rank > 0 {
                entries.insert((i, a.clone()), rank as u64);
            }
        }
    }
    Ok(BettiTable { nvars: ideal.nvars(), field_char: p, entries })
}

/// Castelnuovo-Mumford regularity `reg(I)` over `F_p`.
pub fn regularity(ideal: &MonomialIdeal, p: u32) -> Result<u32> {
    Ok(betti(ideal, p)?.regularity().expect("proper nonzero ideals have generators"))
}

/// Does `I` have a linear resolution?
///
/// Unit and principal ideals count as linear. Otherwise `I` must be
/// generated in one degree `d` with `reg(I) = d`.
pub fn has_linear_resolution(ideal: &MonomialIdeal, p: u32) -> Result<bool> {
    ideal.require_nonzero()?;
    check_field(p)?;
    if ideal.is_principal() {
        return Ok(true);
    }
    match ideal.equigenerated_degree() {
        None => Ok(false),
        Some(d) => Ok(regularity(ideal, p)? == d),
    }
}

/// Outcome class of a linear-quotients search.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QuotientStatus {
    Found,
    /// The whole search space was exhausted.
    NotFound,
    /// Gave up (generator cap and node budget exceeded).
    Unknown,
}

/// Result of [`linear_quotients`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientOrderResult {
    pub status: QuotientStatus,
    /// Witness order when `status == Found`.
    pub order: Option<Vec<Monomial>>,
}

/// Is `(u_j : j in prefix) : u_k` generated by variables?
///
/// The colon is generated by the `u_j / gcd(u_j, u_k)`; it is generated by
/// variables iff each of those is divisible by one that is a single
/// variable.
fn colon_is_linear(gens: &[Monomial], prefix: &[usize], next: usize) -> bool {
    let u = &gens[next];
    let quotients: Vec<Monomial> = prefix.iter().map(|&j| gens[j].colon(u)).collect();
    let linear: u64 = quotients
        .iter()
        .filter(|q| q.degree() == 1)
        .fold(0, |acc, q| acc | q.support().bits());
    quotients.iter().all(|q| q.support().bits() & linear != 0)
}

/// Every position of `order` has a variable-generated colon.
pub fn is_linear_quotient_order(order: &[Monomial]) -> bool {
    let idx: Vec<usize> = (0..order.len()).collect();
    (1..order.len()).all(|k| colon_is_linear(order, &idx[..k], k))
}

struct QuotientSearch<'a> {
    gens: &'a [Monomial],
    words: usize,
    dead: BTreeSet<Vec<u64>>,
    chosen: Vec<u64>,
    order: Vec<usize>,
    nodes: usize,
    budget: Option<usize>,
}

impl QuotientSearch<'_> {
    /// `Some(true)`: order completed; `Some(false)`: subtree exhausted;
    /// `None`: budget spent.
    fn dfs(&mut self) -> Option<bool> {
        if self.order.len() == self.gens.len() {
            return Some(true);
        }
        if self.dead.contains(&self.chosen) {
            return Some(false);
        }
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            return None;
        }
        // candidates in canonical (descending lex) order
        for c in 0..self.gens.len() {
            let (w, bit) = (c / 64, 1u64 << (c % 64));
            if self.chosen[w] & bit != 0 {
                continue;
            }
            if !self.order.is_empty() && !colon_is_linear(self.gens, &self.order, c) {
                continue;
            }
            self.chosen[w] |= bit;
            self.order.push(c);
            match self.dfs() {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            self.order.pop();
            self.chosen[w] &= !bit;
        }
        debug_assert_eq!(self.chosen.len(), self.words);
        self.dead.insert(self.chosen.clone());
        Some(false)
    }
}

/// Searches for an order of `G(I)` with linear quotients.
///
/// Up to `cap` generators the search is exhaustive (memoized over the set of
/// already placed generators, whose colon conditions do not depend on their
/// internal order). Past the cap a bounded search runs and reports
/// `Unknown` if it finds nothing.
pub fn linear_quotients(ideal: &MonomialIdeal, cap: usize) -> Result<QuotientOrderResult> {
    ideal.require_nonzero()?;
    if ideal.equigenerated_degree().is_none() {
        return Err(Error::NotEquigenerated);
    }
    let gens = ideal.gens();
    let words = gens.len().div_ceil(64);
    let mut search = QuotientSearch {
        gens,
        words,
        dead: BTreeSet::new(),
        chosen: alloc::vec![0; words],
        order: Vec::new(),
        nodes: 0,
        budget: (gens.len() > cap).then_some(QUOTIENT_SEARCH_BUDGET),
    };
    Ok(match search.dfs() {
        Some(true) => QuotientOrderResult {
            status: QuotientStatus::Found,
            order: Some(search.order.iter().map(|&i| gens[i].clone()).collect()),
        },
        Some(false) => QuotientOrderResult { status: QuotientStatus::NotFound, order: None },
        None => QuotientOrderResult { status: QuotientStatus::Unknown, order: None },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens.iter().map(|g| g.to_vec())).unwrap()
    }

    fn ex14() -> MonomialIdeal {
        ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 2, 0]])
    }

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn maximal_ideal_koszul() {
        for n in 1..=5usize {
            let gens: Vec<Vec<u32>> = (0..n).map(|i| Monomial::var(n, i).into_exponents()).collect();
            let m = MonomialIdeal::from_exponents(n, gens).unwrap();
            let t = betti(&m, DEFAULT_CHAR).unwrap();
            for (i, a, b) in t.iter() {
                assert_eq!(b, 1);
                assert!(a.is_squarefree());
                assert_eq!(a.degree() as usize, i + 1);
            }
            for i in 0..n {
                assert_eq!(t.total(i), binomial(n as u64, i as u64 + 1));
            }
            assert_eq!(t.regularity(), Some(1));
        }
    }

    #[test]
    fn example_1_4_regularity() {
        let t = betti(&ex14(), DEFAULT_CHAR).unwrap();
        assert_eq!(t.total(0), 3);
        assert_eq!(t.regularity(), Some(2));
        assert!(has_linear_resolution(&ex14(), 2).unwrap());
    }

    #[test]
    fn generator_entries() {
        let i = ideal(3, &[&[2, 1, 0], &[0, 1, 3], &[1, 1, 1]]);
        let t = betti(&i, 5).unwrap();
        for g in i.gens() {
            assert_eq!(t.get(0, g), 1);
        }
        assert_eq!(t.total(0), 3);
    }

    #[test]
    fn taylor_small_cases() {
        let t = taylor_betti(&ideal(2, &[&[1, 1]]), 7).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.get(0, &Monomial::new(vec![1, 1])), 1);
        let t = taylor_betti(&ideal(2, &[&[1, 0], &[0, 1]]), 7).unwrap();
        assert_eq!(t.get(1, &Monomial::new(vec![1, 1])), 1);
        assert_eq!(t, betti(&ideal(2, &[&[1, 0], &[0, 1]]), 7).unwrap());
    }

    #[test]
    fn errors() {
        assert_eq!(betti(&MonomialIdeal::zero(2), 7), Err(Error::ZeroIdeal));
        assert_eq!(betti(&MonomialIdeal::unit(2), 7), Err(Error::UnitIdeal));
        assert_eq!(betti(&ex14(), 9), Err(Error::NotPrime(9)));
        let big = MonomialIdeal::maximal_power(3, 2).power(2).unwrap();
        assert!(matches!(taylor_betti(&big, 7), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn linear_resolution_conventions() {
        assert!(has_linear_resolution(&MonomialIdeal::unit(3), 7).unwrap());
        assert!(has_linear_resolution(&ideal(3, &[&[2, 1, 0]]), 7).unwrap());
        assert!(!has_linear_resolution(&ideal(2, &[&[1, 0], &[0, 2]]), 7).unwrap());
        assert_eq!(has_linear_resolution(&MonomialIdeal::zero(3), 7), Err(Error::ZeroIdeal));
    }

    #[test]
    fn linear_quotient_examples() {
        let m3 = MonomialIdeal::maximal_power(3, 3);
        let r = linear_quotients(&m3, DEFAULT_QUOTIENT_CAP).unwrap();
        assert_eq!(r.status, QuotientStatus::Found);
        assert!(is_linear_quotient_order(r.order.as_ref().unwrap()));

        let r = linear_quotients(&ideal(2, &[&[2, 0], &[0, 2]]), DEFAULT_QUOTIENT_CAP).unwrap();
        assert_eq!(r.status, QuotientStatus::NotFound);
        assert!(linear_quotients(&ideal(2, &[&[1, 0], &[0, 2]]), 5).is_err());
    }

    #[test]
    fn coarse_table_renders() {
        let s = betti(&ex14(), DEFAULT_CHAR).unwrap().to_string();
        assert!(s.contains("total:"));
        assert!(s.lines().count() >= 3);
    }
}
