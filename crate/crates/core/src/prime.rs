use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarSet, MAX_VARS};

/// A monomial prime ideal `(x_i : i in vars)`.
///
/// Primes order canonically by their ascending index lists, so
/// `(x1,x2) < (x1,x2,x3) < (x1,x3) < (x2)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct MonomialPrime {
    nvars: usize,
    vars: VarSet,
}

impl MonomialPrime {
    pub fn new(nvars: usize, vars: VarSet) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables { nvars, max: MAX_VARS });
        }
        if let Some(i) = vars.iter().find(|&i| i >= nvars) {
            return Err(Error::IndexOutOfRange { index: i, nvars });
        }
        Ok(MonomialPrime { nvars, vars })
    }

    /// Builds a prime from 0-based indices.
    pub fn from_indices(nvars: usize, indices: &[usize]) -> Result<Self> {
        MonomialPrime::new(nvars, indices.iter().copied().collect())
    }

    /// The graded maximal ideal `(x1, ..., xn)`.
    pub fn maximal(nvars: usize) -> Self {
        MonomialPrime { nvars, vars: VarSet::full(nvars) }
    }

    /// `p_A`: the prime generated by the variables *not* in `a`.
    pub fn complement_of(nvars: usize, a: VarSet) -> Result<Self> {
        MonomialPrime::new(nvars, VarSet::full(nvars).difference(a))
    }

    /// All `2^n - 1` nonempty monomial primes in canonical order.
    pub fn all_nonempty(nvars: usize) -> Vec<MonomialPrime> {
        assert!(nvars < 32, "prime enumeration limited to fewer than 32 variables");
        let mut out: Vec<_> = (1u64..(1u64 << nvars))
            .map(|bits| MonomialPrime { nvars, vars: VarSet::from_bits(bits) })
            .collect();
        out.sort();
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn indices(&self) -> Vec<usize> {
        self.vars.iter().collect()
    }

    /// Number of generating variables.
    pub fn height(&self) -> usize {
        self.vars.len()
    }

    pub fn is_maximal(&self) -> bool {
        self.vars == VarSet::full(self.nvars)
    }

    pub fn is_subset(&self, other: &MonomialPrime) -> bool {
        self.vars.is_subset(other.vars)
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let gens = self.vars.iter().map(|i| Monomial::var(self.nvars, i)).collect();
        MonomialIdeal::from_gens_unchecked(self.nvars, gens)
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> Ordering {
        self.nvars
            .cmp(&other.nvars)
            .then_with(|| self.vars.iter().cmp(other.vars.iter()))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, i) in self.vars.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "x{}", i + 1)?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn canonical_order() {
        let p = |ix: &[usize]| MonomialPrime::from_indices(4, ix).unwrap();
        let mut v = alloc::vec![p(&[1]), p(&[0, 2]), p(&[0, 1, 2]), p(&[0, 1])];
        v.sort();
        assert_eq!(v, [p(&[0, 1]), p(&[0, 1, 2]), p(&[0, 2]), p(&[1])]);
        assert_eq!(MonomialPrime::all_nonempty(3).len(), 7);
    }

    #[test]
    fn complement_indexing() {
        let p = MonomialPrime::complement_of(4, VarSet::singleton(0)).unwrap();
        assert_eq!(p.to_string(), "(x2,x3,x4)");
        assert!(MonomialPrime::from_indices(3, &[3]).is_err());
    }
}
