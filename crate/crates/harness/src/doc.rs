//! Structured (JSON) documents. Variable indices are 1-based on disk.

use std::path::Path;

use monideal_core::decomp::IntersectionPresentation;
use monideal_core::resolution::BettiTable;
use monideal_core::{Monomial, MonomialIdeal, MonomialPrime, VarSet};
use serde::{Deserialize, Serialize};

use crate::parse::parse_ideal;
use crate::HarnessError;

/// An ideal as its ambient variable count and generator exponent vectors.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IdealDoc {
    pub nvars: usize,
    pub gens: Vec<Vec<u32>>,
}

impl From<&MonomialIdeal> for IdealDoc {
    fn from(i: &MonomialIdeal) -> Self {
        IdealDoc { nvars: i.nvars(), gens: i.gens().iter().map(|g| g.exponents().to_vec()).collect() }
    }
}

impl TryFrom<IdealDoc> for MonomialIdeal {
    type Error = HarnessError;

    fn try_from(d: IdealDoc) -> Result<Self, HarnessError> {
        Ok(MonomialIdeal::from_exponents(d.nvars, d.gens)?)
    }
}

/// `∩ p^d` as a list of `(variables of p, d)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub nvars: usize,
    pub terms: Vec<(Vec<usize>, u32)>,
}

pub fn prime_indices(p: &MonomialPrime) -> Vec<usize> {
    p.indices().into_iter().map(|i| i + 1).collect()
}

pub fn prime_from_indices(nvars: usize, ix: &[usize]) -> Result<MonomialPrime, HarnessError> {
    let mut vars = VarSet::EMPTY;
    for &k in ix {
        if k == 0 || k > nvars {
            return Err(HarnessError::Parse(format!("variable index {k} out of range 1..={nvars}")));
        }
        vars.insert(k - 1);
    }
    Ok(MonomialPrime::new(nvars, vars)?)
}

impl From<&IntersectionPresentation> for PresentationDoc {
    fn from(p: &IntersectionPresentation) -> Self {
        PresentationDoc {
            nvars: p.nvars(),
            terms: p.terms().iter().map(|(q, d)| (prime_indices(q), *d)).collect(),
        }
    }
}

impl TryFrom<PresentationDoc> for IntersectionPresentation {
    type Error = HarnessError;

    fn try_from(d: PresentationDoc) -> Result<Self, HarnessError> {
        let terms = d
            .terms
            .iter()
            .map(|(ix, e)| Ok((prime_from_indices(d.nvars, ix)?, *e)))
            .collect::<Result<Vec<_>, HarnessError>>()?;
        Ok(IntersectionPresentation::new(d.nvars, terms)?)
    }
}

/// Betti numbers as `(i, multidegree, rank)` triples.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BettiDoc {
    pub nvars: usize,
    pub field_char: u32,
    pub entries: Vec<(usize, Vec<u32>, u64)>,
    pub regularity: Option<u32>,
}

impl From<&BettiTable> for BettiDoc {
    fn from(t: &BettiTable) -> Self {
        BettiDoc {
            nvars: t.nvars(),
            field_char: t.field_char(),
            entries: t.iter().map(|(i, a, r)| (i, a.exponents().to_vec(), r)).collect(),
            regularity: t.regularity(),
        }
    }
}

impl BettiDoc {
    /// Rank lookup by homological index and multidegree.
    pub fn get(&self, i: usize, a: &Monomial) -> u64 {
        self.entries
            .iter()
            .find(|(j, b, _)| *j == i && b.as_slice() == a.exponents())
            .map_or(0, |e| e.2)
    }
}

/// Reads an ideal from a file path or from inline text. Content starting
/// with `{` is parsed as an [`IdealDoc`], anything else with the text
/// grammar.
pub fn load_ideal(arg: &str, nvars: Option<usize>) -> Result<MonomialIdeal, HarnessError> {
    let path = Path::new(arg);
    let text = if path.is_file() { std::fs::read_to_string(path)? } else { arg.to_owned() };
    let text = text.trim();
    if text.starts_with('{') {
        let doc: IdealDoc = serde_json::from_str(text)?;
        if let Some(n) = nvars.filter(|&n| n != doc.nvars) {
            return Err(HarnessError::InvalidParameters(format!(
                "--nvars {n} disagrees with document nvars {}",
                doc.nvars
            )));
        }
        return doc.try_into();
    }
    parse_ideal(text, nvars)
}
