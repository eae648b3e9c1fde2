use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest supported number of variables. Variable subsets are `u64` masks.
pub const MAX_VARS: usize = 64;

/// Default upper bound on any single exponent produced by products/powers.
pub const DEFAULT_MAX_EXPONENT: u32 = 1 << 16;

/// A set of variable indices, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct VarSet(u64);

impl VarSet {
    /// The empty set.
    pub const EMPTY: VarSet = VarSet(0);

    /// `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VARS);
        if n >= 64 {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    /// Set with the given bit mask.
    pub const fn from_bits(bits: u64) -> Self {
        VarSet(bits)
    }

    /// Raw mask.
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{i}`.
    pub fn singleton(i: usize) -> Self {
        VarSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    /// Indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VarSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// A monomial `x^a`, stored as its exponent vector.
///
/// The derived ordering is lexicographic on exponent vectors, so `x1^2`
/// sorts after `x1*x2` which sorts after `x2^5`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: alloc::vec![0; nvars] }
    }

    /// `x_i^e`. Panics if `i >= nvars`.
    pub fn pure_power(nvars: usize, i: usize, e: u32) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut m = Monomial::one(nvars);
        m.exps[i] = e;
        m
    }

    /// `x_i`. Panics if `i >= nvars`.
    pub fn var(nvars: usize, i: usize) -> Self {
        Monomial::pure_power(nvars, i, 1)
    }

    /// Product of the variables in `vars`.
    pub fn squarefree(nvars: usize, vars: VarSet) -> Self {
        let mut m = Monomial::one(nvars);
        for i in vars.iter().filter(|&i| i < nvars) {
            m.exps[i] = 1;
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> VarSet {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// `Some(i)` if this is `x_i^e` with `e >= 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let supp = self.support();
        if supp.len() == 1 {
            supp.iter().next()
        } else {
            None
        }
    }

    /// Does `self` divide `other`?
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect(),
        }
    }

    /// `self / gcd(self, m)`.
    pub fn colon(&self, m: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&m.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        }
    }

    /// Product, failing if any exponent would exceed `cap`.
    pub fn checked_mul(&self, other: &Monomial, cap: u32) -> Result<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            match a.checked_add(b) {
                Some(e) if e <= cap => exps.push(e),
                _ => return Err(Error::ExponentOverflow { cap }),
            }
        }
        Ok(Monomial { exps })
    }

    /// Substitutes `1` for every variable in `vars`.
    pub fn drop_vars(&self, vars: VarSet) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .enumerate()
                .map(|(i, &e)| if vars.contains(i) { 0 } else { e })
                .collect(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
