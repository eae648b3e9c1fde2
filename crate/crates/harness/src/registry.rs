//! Worked examples with their expected facts.
//!
//! Every regularity-dependent fact is checked over both fields in
//! [`CHARS`]; a disagreement between them fails the check and shows both
//! values.

use std::fmt;

use monideal_core::decomp::{ass_primes, intersect_presentation, strong_intersection_check, IntersectionPresentation};
use monideal_core::polymatroid::{is_matroidal, is_polymatroidal, is_veronese_type};
use monideal_core::resolution::{
    has_linear_resolution, linear_quotients, regularity, QuotientStatus, DEFAULT_CHAR, DEFAULT_QUOTIENT_CAP,
};
use monideal_core::{Monomial, MonomialIdeal, MonomialPrime};

use crate::parse::parse_ideal;
use crate::scan::{check_saturations, product_polymatroidality, local_regularity, regularity_or_trivial, scan_localizations};
use crate::HarnessError;

/// Fields every example is checked over.
pub const CHARS: [u32; 2] = [DEFAULT_CHAR, 2];

/// Registered example names, in run order.
pub const NAMES: [&str; 10] = [
    "example-1.4",
    "example-1.6",
    "example-1.7",
    "example-1.10",
    "example-1.11",
    "example-1.12",
    "example-1.22",
    "example-1.24",
    "example-1.25",
    "sturmfels",
];

fn ideal(text: &str, nvars: usize) -> MonomialIdeal {
    parse_ideal(text, Some(nvars)).expect("registry ideals parse")
}

pub fn example_1_4() -> MonomialIdeal {
    ideal("x1*x2, x1*x3, x2^2", 3)
}

/// Not squarefree, four variables: `I` and all `I[i]` linear but `I` is not
/// polymatroidal.
pub fn example_1_6() -> MonomialIdeal {
    ideal("x1^3, x1^2*x2, x1^2*x3, x2*x3*x4, x1*x2*x3, x1*x3*x4, x1^2*x4", 4)
}

/// Squarefree, five variables: `I` and all `I[i]` linear but `I` is not
/// matroidal.
pub fn example_1_7() -> MonomialIdeal {
    ideal("x1*x3*x5, x1*x2*x3, x1*x2*x4, x2*x3*x4, x3*x4*x5, x2*x4*x5", 5)
}

pub fn example_1_12_presentation() -> IntersectionPresentation {
    let p = |ix: &[usize]| MonomialPrime::from_indices(4, ix).expect("valid prime");
    IntersectionPresentation::new(
        4,
        vec![(p(&[0, 1]), 2), (p(&[0, 1, 2]), 3), (p(&[0, 1, 3]), 3), (MonomialPrime::maximal(4), 5)],
    )
    .expect("valid presentation")
}

pub fn example_1_12() -> MonomialIdeal {
    intersect_presentation(&example_1_12_presentation())
}

pub fn example_1_22() -> MonomialIdeal {
    ideal("ace, acf, acg, ade, bcd, bfg, cde, cdf, cdg, cef, ceg, cfg, def, deg, dfg, efg", 7)
}

pub fn example_1_24() -> (MonomialIdeal, MonomialIdeal) {
    (ideal("x1, x2", 2), ideal("x1^2, x2^2", 2))
}

pub fn example_1_25() -> (MonomialIdeal, MonomialIdeal) {
    (ideal("x1^2, x2^2, x1*x3, x2*x3", 3), ideal("x1^2, x3^2, x1*x2, x2*x3", 3))
}

pub fn sturmfels() -> MonomialIdeal {
    ideal("def, cef, cdf, cde, bef, bcd, acf, ade", 6)
}

/// One expected fact and what was observed.
#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct ExampleReport {
    pub name: String,
    pub ideal: String,
    pub checks: Vec<Check>,
}

impl ExampleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl fmt::Display for ExampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.name, if self.passed() { "PASS" } else { "FAIL" })?;
        writeln!(f, "  I = {}", self.ideal)?;
        for c in &self.checks {
            writeln!(f, "  [{}] {}: {}", if c.pass { "ok" } else { "FAIL" }, c.label, c.detail)?;
        }
        Ok(())
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, label: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.0.push(Check { label: label.into(), pass, detail: detail.into() });
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, label: impl Into<String>, actual: T, expected: T) {
        let pass = actual == expected;
        self.push(label, pass, format!("got {actual:?}, expected {expected:?}"));
    }

    /// The same fact over every field in [`CHARS`].
    fn per_char<T, F>(&mut self, label: &str, expected: T, mut f: F) -> Result<(), HarnessError>
    where
        T: PartialEq + Clone + fmt::Debug,
        F: FnMut(u32) -> Result<T, HarnessError>,
    {
        for p in CHARS {
            self.eq(format!("{label} (char {p})"), f(p)?, expected.clone());
        }
        Ok(())
    }
}

fn reg(i: &MonomialIdeal, p: u32) -> Result<u32, HarnessError> {
    Ok(regularity(i, p)?)
}

fn linres(i: &MonomialIdeal, p: u32) -> Result<bool, HarnessError> {
    Ok(has_linear_resolution(i, p)?)
}

fn run_1_4(c: &mut Checks) -> Result<MonomialIdeal, HarnessError> {
    let i = example_1_4();
    c.per_char("reg(I) = 2", 2, |p| reg(&i, p))?;
    c.per_char("linear resolution", true, |p| linres(&i, p))?;
    c.eq("polymatroidal", is_polymatroidal(&i)?.polymatroidal, false);
    c.per_char("scan finds a non-linear localization", true, |p| {
        Ok(!scan_localizations(&i, p)?.all_linear)
    })?;
    let local = i.localize(&MonomialPrime::from_indices(3, &[0, 1])?)?;
    c.eq("I(x1,x2)", local.to_string(), ideal("x1, x2^2", 3).to_string());
    Ok(i)
}

fn run_saturation_example(c: &mut Checks, i: &MonomialIdeal) -> Result<(), HarnessError> {
    c.per_char("I and every I[i] linear", true, |p| Ok(check_saturations(i, p)?.all_linear()))?;
    Ok(())
}

fn run_1_6(c: &mut Checks) -> Result<MonomialIdeal, HarnessError> {
    let i = example_1_6();
    run_saturation_example(c, &i)?;
    c.eq("polymatroidal", is_polymatroidal(&i)?.polymatroidal, false);
    c.per_char("scan finds a failing prime", true, |p| Ok(scan_localizations(&i, p)?.failing().next().is_some()))?;
    Ok(i)
}

fn run_1_7(c: &mut Checks) -> Result<MonomialIdeal, HarnessError> {
    let i = example_1_7();
    c.per_char("reg(I) = 3", 3, |p| reg(&i, p))?;
    for k in 0..5 {
        let s = i.saturate_var(k)?;
        c.eq(format!("I[{}] squarefree of degree 2", k + 1), (s.is_squarefree(), s.equigenerated_degree()), (true, Some(2)));
        c.per_char(&format!("reg(I[{}]) = 2", k + 1), 2, |p| regularity_or_trivial(&s, p))?;
    }
    run_saturation_example(c, &i)?;
    c.eq("matroidal", is_matroidal(&i)?, false);
    Ok(i)
}

fn run_1_12(c: &mut Checks) -> Result<MonomialIdeal, HarnessError> {
    let i = example_1_12();
    let m = |e: [u32; 4]| Monomial::new(e.to_vec());
    c.eq("equigenerated degree", i.equigenerated_degree(), Some(5));
    c.eq("x1^5 in I", i.contains(&m([5, 0, 0, 0]))?, true);
    c.eq("x2^5 in I", i.contains(&m([0, 5, 0, 0]))?, true);
    let desc = i.descriptors()?;
    c.eq("pure powers", desc.pure_powers.iter().collect::<Vec<_>>(), vec![0, 1]);
    c.eq("a_3", desc.bounds.0[2], 2);
    c.eq("x1*x3^2*x4^2 in I", i.contains(&m([1, 0, 2, 2]))?, false);
    c.eq("Veronese type", is_veronese_type(&i)?.is_some(), false);
    c.eq("polymatroidal", is_polymatroidal(&i)?.polymatroidal, true);
    let shown = |mut v: Vec<MonomialPrime>| {
        v.sort();
        v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    };
    let expected = shown(example_1_12_presentation().primes().copied().collect());
    c.eq("Ass(R/I)", shown(ass_primes(&i)?), expected);
    c.per_char("all localizations linear", true, |p| Ok(scan_localizations(&i, p)?.all_linear))?;
    c.per_char("strong intersection type", true, |p| {
        Ok(strong_intersection_check(&i, |l| local_regularity(l, p))?.holds)
    })?;
    c.eq("linear quotients", linear_quotients(&i, DEFAULT_QUOTIENT_CAP)?.status, QuotientStatus::Found);
    Ok(i)
}

fn run_1_22(c: &mut Checks) -> Result<MonomialIdeal, HarnessError> {
    let i = example_1_22();
    c.eq("generators", i.len(), 16);
    let i2 = i.power(2)?;
    let i3 = i.power(3)?;
    c.per_char("reg(I) = 3", 3, |p| reg(&i, p))?;
    c.per_char("reg(I^2) = 6", 6, |p| reg(&i2, p))?;
    c.per_char("reg(I^3) = 10", 10, |p| reg(&i3, p))?;
    Ok(i)
}

fn run_product(c: &mut Checks, (i, j): (MonomialIdeal, MonomialIdeal), expected: (bool, bool, bool)) -> Result<MonomialIdeal, HarnessError> {
    let v = product_polymatroidality(&i, &j)?;
    c.eq("(IJ, I, J) polymatroidal", (v.product, v.left, v.right), expected);
    c.push("J", true, j.to_string());
    Ok(i)
}

fn run_sturmfels(c: &mut Checks) -> Result<MonomialIdeal, HarnessError> {
    let i = sturmfels();
    let i2 = i.power(2)?;
    c.eq("I^2 degree", i2.equigenerated_degree(), Some(6));
    c.per_char("I linear", true, |p| linres(&i, p))?;
    c.per_char("I^2 linear", false, |p| linres(&i2, p))?;
    for p in CHARS {
        let r = reg(&i2, p)?;
        c.push(format!("reg(I^2) >= 7 (char {p})"), r >= 7, format!("got {r}"));
    }
    Ok(i)
}

/// Runs one registered example.
pub fn run_example(name: &str) -> Result<ExampleReport, HarnessError> {
    let mut c = Checks(Vec::new());
    let i = match name {
        "example-1.4" => run_1_4(&mut c)?,
        "example-1.6" | "example-1.10" => run_1_6(&mut c)?,
        "example-1.7" | "example-1.11" => run_1_7(&mut c)?,
        "example-1.12" => run_1_12(&mut c)?,
        "example-1.22" => run_1_22(&mut c)?,
        "example-1.24" => run_product(&mut c, example_1_24(), (true, true, false))?,
        "example-1.25" => run_product(&mut c, example_1_25(), (true, false, false))?,
        "sturmfels" => run_sturmfels(&mut c)?,
        other => return Err(HarnessError::UnknownExample(other.to_owned())),
    };
    Ok(ExampleReport { name: name.to_owned(), ideal: i.to_string(), checks: c.0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_name() {
        assert!(matches!(run_example("example-9.9"), Err(HarnessError::UnknownExample(_))));
    }

    #[test]
    fn small_examples_pass() {
        for name in ["example-1.4", "example-1.24", "example-1.25"] {
            let r = run_example(name).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
