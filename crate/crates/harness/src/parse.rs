//! Text grammar for monomials, ideals and primes.
//!
//! A monomial is a product of factors `v` or `v^e` separated by `*` or
//! whitespace, where `v` is `x<k>` (1-based) or a single letter (`a` is
//! variable 1, `b` is variable 2, ...). `1` is the empty product. An ideal is
//! a comma-separated list of monomials, optionally wrapped in parentheses.

use monideal_core::{Monomial, MonomialIdeal, MonomialPrime, VarSet, DEFAULT_MAX_EXPONENT, MAX_VARS};

use crate::HarnessError;

type Factors = Vec<(usize, u32)>;

fn err(msg: impl Into<String>) -> HarnessError {
    HarnessError::Parse(msg.into())
}

/// Parses a variable name into its 0-based index.
fn parse_var(tok: &str) -> Result<usize, HarnessError> {
    let bytes = tok.as_bytes();
    if bytes.len() >= 2 && bytes[0] == b'x' && bytes[1..].iter().all(u8::is_ascii_digit) {
        let k: usize = tok[1..].parse().map_err(|_| err(format!("bad variable `{tok}`")))?;
        if k == 0 {
            return Err(err("variables are numbered from x1"));
        }
        return Ok(k - 1);
    }
    if bytes.len() == 1 && bytes[0].is_ascii_lowercase() {
        return Ok(usize::from(bytes[0] - b'a'));
    }
    Err(err(format!("bad variable `{tok}`")))
}

fn digits(s: &str) -> usize {
    s.bytes().take_while(u8::is_ascii_digit).count()
}

/// Splits one token such as `x1^2x3` or `ace` into factors.
fn scan_token(tok: &str, out: &mut Factors) -> Result<(), HarnessError> {
    let mut rest = tok;
    while !rest.is_empty() {
        let c = rest.as_bytes()[0];
        if !c.is_ascii_lowercase() {
            return Err(err(format!("bad monomial `{tok}`")));
        }
        let len = if c == b'x' && digits(&rest[1..]) > 0 { 1 + digits(&rest[1..]) } else { 1 };
        let var = parse_var(&rest[..len])?;
        rest = &rest[len..];
        let mut exp = 1;
        if let Some(r) = rest.strip_prefix('^') {
            let n = digits(r);
            exp = r[..n].parse().map_err(|_| err(format!("bad exponent in `{tok}`")))?;
            if exp > DEFAULT_MAX_EXPONENT {
                return Err(err(format!("exponent {exp} exceeds {DEFAULT_MAX_EXPONENT}")));
            }
            rest = &r[n..];
        }
        out.push((var, exp));
    }
    Ok(())
}

fn parse_factors(text: &str) -> Result<Factors, HarnessError> {
    let mut out = Vec::new();
    let mut unit = false;
    for tok in text.split(|c: char| c == '*' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        if tok == "1" {
            unit = true;
        } else {
            scan_token(tok, &mut out)?;
        }
    }
    if out.is_empty() && !unit {
        return Err(err(format!("empty monomial `{text}`")));
    }
    Ok(out)
}

fn resolve_nvars(max_index: Option<usize>, nvars: Option<usize>) -> Result<usize, HarnessError> {
    let needed = max_index.map_or(0, |i| i + 1);
    let n = match nvars {
        Some(n) if n < needed => {
            return Err(err(format!("variable x{needed} used but only {n} variables declared")))
        }
        Some(n) => n,
        None => needed.max(1),
    };
    if n > MAX_VARS {
        return Err(err(format!("at most {MAX_VARS} variables supported")));
    }
    Ok(n)
}

fn build(nvars: usize, factors: &Factors) -> Result<Monomial, HarnessError> {
    let mut e = vec![0u32; nvars];
    for &(i, k) in factors {
        e[i] = e[i]
            .checked_add(k)
            .filter(|&s| s <= DEFAULT_MAX_EXPONENT)
            .ok_or_else(|| err("exponent overflow"))?;
    }
    Ok(Monomial::new(e))
}

/// Parses one monomial. `nvars` defaults to the largest variable used.
pub fn parse_monomial(text: &str, nvars: Option<usize>) -> Result<Monomial, HarnessError> {
    let factors = parse_factors(text)?;
    let n = resolve_nvars(factors.iter().map(|f| f.0).max(), nvars)?;
    build(n, &factors)
}

fn strip_parens(text: &str) -> &str {
    let t = text.trim();
    t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(t)
}

/// Parses an ideal. `()` is the zero ideal.
pub fn parse_ideal(text: &str, nvars: Option<usize>) -> Result<MonomialIdeal, HarnessError> {
    let body = strip_parens(text);
    let parts: Vec<Factors> = if body.trim().is_empty() {
        Vec::new()
    } else {
        body.split(',').map(parse_factors).collect::<Result<_, _>>()?
    };
    let max = parts.iter().flatten().map(|f| f.0).max();
    let n = resolve_nvars(max, nvars)?;
    let gens = parts.iter().map(|f| build(n, f)).collect::<Result<Vec<_>, _>>()?;
    Ok(MonomialIdeal::new(n, gens)?)
}

/// Parses a prime given as a list of variables (`x1,x3`, `(a, c)`) or of
/// 1-based indices (`1,3`).
pub fn parse_prime(text: &str, nvars: usize) -> Result<MonomialPrime, HarnessError> {
    let mut vars = VarSet::EMPTY;
    for tok in strip_parens(text).split([',', ' ']).map(str::trim).filter(|t| !t.is_empty()) {
        let i = match tok.parse::<usize>() {
            Ok(0) => return Err(err("variables are numbered from 1")),
            Ok(k) => k - 1,
            Err(_) => parse_var(tok)?,
        };
        if i >= nvars {
            return Err(err(format!("variable index {} exceeds {nvars}", i + 1)));
        }
        vars.insert(i);
    }
    Ok(MonomialPrime::new(nvars, vars)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomials() {
        let m = parse_monomial("x1^2*x3", None).unwrap();
        assert_eq!(m.exponents(), &[2, 0, 1]);
        let m = parse_monomial("a c  e", Some(7)).unwrap();
        assert_eq!(m.exponents(), &[1, 0, 1, 0, 1, 0, 0]);
        assert_eq!(parse_monomial("x2 x2", None).unwrap().exponents(), &[0, 2]);
        assert!(parse_monomial("1", Some(3)).unwrap().is_one());
        assert!(parse_monomial("x0", None).is_err());
        assert!(parse_monomial("x1^", None).is_err());
        assert!(parse_monomial("x1^x2", None).is_err());
        assert!(parse_monomial("x1+x2", None).is_err());
        assert_eq!(parse_monomial("ace", None).unwrap().exponents(), &[1, 0, 1, 0, 1]);
        assert_eq!(parse_monomial("a^2c", None).unwrap().exponents(), &[2, 0, 1]);
        assert_eq!(parse_monomial("x1^2x3", None).unwrap().exponents(), &[2, 0, 1]);
        assert!(parse_monomial("x5", Some(3)).is_err());
    }

    #[test]
    fn ideals() {
        let i = parse_ideal("(x1*x2, x1*x3, x2^2)", None).unwrap();
        assert_eq!(i.nvars(), 3);
        assert_eq!(i.len(), 3);
        let s = parse_ideal("def,cef,cdf,cde,bef,bcd,acf,ade", None).unwrap();
        assert_eq!((s.nvars(), s.len()), (6, 8));
        assert!(parse_ideal("()", Some(2)).unwrap().is_zero());
        assert!(parse_ideal("x1, ,x2", None).is_err());
        // redundant generators are dropped
        assert_eq!(parse_ideal("x1, x1*x2", None).unwrap().len(), 1);
    }

    #[test]
    fn round_trip_display() {
        let i = parse_ideal("x1^3, x1^2*x2, x2*x3*x4", None).unwrap();
        assert_eq!(parse_ideal(&i.to_string(), Some(4)).unwrap(), i);
    }

    #[test]
    fn primes() {
        let p = parse_prime("(x1, x3)", 4).unwrap();
        assert_eq!(p.indices(), [0, 2]);
        assert_eq!(parse_prime("2,4", 4).unwrap().indices(), [1, 3]);
        assert_eq!(parse_prime("a,b", 4).unwrap().indices(), [0, 1]);
        assert!(parse_prime("5", 4).is_err());
    }
}
