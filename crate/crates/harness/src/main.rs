use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monideal::doc::{load_ideal, prime_indices, BettiDoc, IdealDoc};
use monideal::fuzz::{run_campaign, FuzzConfig};
use monideal::parse::parse_prime;
use monideal::registry::{run_example, NAMES};
use monideal::scan::{
    check_saturations, powers_linearity_profile, product_polymatroidality, scan_localizations, theorem_preconditions,
    verify_theorems,
};
use monideal::HarnessError;
use monideal_core::decomp::{ass_primes, height, irreducible_decomposition, min_primes};
use monideal_core::polymatroid::{is_matroidal, is_polymatroidal, is_veronese_type, veronese_type};
use monideal_core::resolution::{
    betti, has_linear_resolution, linear_quotients, regularity, DEFAULT_CHAR, DEFAULT_QUOTIENT_CAP,
};
use monideal_core::{ExponentBounds, MonomialIdeal};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "monideal", version, about = "Monomial ideals: regularity, localizations, polymatroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format on standard output.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Characteristic of the coefficient field (a prime).
    #[arg(long = "char", global = true, default_value_t = DEFAULT_CHAR)]
    field_char: u32,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Also write the structured document to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Args)]
struct IdealArgs {
    /// Ideal as text (`x1*x2, x2^2`) or a path to a text or JSON file.
    #[arg(long)]
    ideal: String,
    /// Number of variables (default: largest index used).
    #[arg(long)]
    nvars: Option<usize>,
}

impl IdealArgs {
    fn load(&self) -> Result<MonomialIdeal, HarnessError> {
        load_ideal(&self.ideal, self.nvars)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Castelnuovo-Mumford regularity.
    Reg(IdealArgs),
    /// Multigraded Betti numbers.
    Betti(IdealArgs),
    /// Does the ideal have a linear resolution?
    Linres(IdealArgs),
    /// Exchange-property check with a witness on failure.
    Polymatroidal(IdealArgs),
    /// Squarefree and polymatroidal.
    Matroidal(IdealArgs),
    /// Search for an order with linear quotients.
    Linquot {
        #[command(flatten)]
        ideal: IdealArgs,
        /// Exhaustive search up to this many generators.
        #[arg(long, default_value_t = DEFAULT_QUOTIENT_CAP)]
        cap_gens: usize,
    },
    /// Monomial localization at a prime, e.g. `--prime x1,x3`.
    Localize {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        prime: String,
    },
    /// `I : x_k^∞` for one variable, `I : m^∞` with `--graded`, or a
    /// linearity report for every `I[i]`.
    Saturate {
        #[command(flatten)]
        ideal: IdealArgs,
        /// 1-based variable index.
        #[arg(long, conflicts_with = "graded")]
        var: Option<usize>,
        #[arg(long)]
        graded: bool,
    },
    /// Irreducible decomposition.
    Decompose(IdealArgs),
    /// Associated primes.
    Ass(IdealArgs),
    /// Height of the ideal, the least height of a minimal prime.
    Height(IdealArgs),
    /// Localize at every monomial prime and compare with the exchange check.
    Scan(IdealArgs),
    /// Regularity of the first powers.
    Powers {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
    },
    /// Exchange verdicts for `IJ`, `I` and `J`.
    ProductCheck {
        #[command(flatten)]
        ideal: IdealArgs,
        /// The second ideal `J`.
        #[arg(long)]
        with: String,
    },
    /// Recognize a Veronese-type ideal (`--ideal`) or build one
    /// (`--degree` and `--bounds`).
    Veronese {
        #[arg(long, required_unless_present = "degree")]
        ideal: Option<String>,
        #[arg(long)]
        nvars: Option<usize>,
        #[arg(long, requires = "bounds")]
        degree: Option<u32>,
        /// Comma-separated exponent bounds.
        #[arg(long, value_delimiter = ',')]
        bounds: Option<Vec<u32>>,
    },
    /// Worked examples.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
    /// Random localization scans.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 4)]
        nvars: usize,
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        #[arg(long, default_value_t = 10)]
        max_gens: usize,
    },
}

#[derive(Subcommand)]
enum ExamplesAction {
    /// Run one example by name, or `all`.
    Run { name: String },
    /// List registered names.
    List,
}

/// What a command produced.
struct Report {
    text: String,
    doc: Value,
    /// `false` when a pinned expectation failed.
    ok: bool,
}

impl Report {
    fn new(text: String, doc: Value) -> Self {
        Report { text, doc, ok: true }
    }
}

fn run(cli: &Cli) -> Result<Report, HarnessError> {
    let p = cli.field_char;
    Ok(match &cli.command {
        Command::Reg(a) => {
            let i = a.load()?;
            let r = regularity(&i, p)?;
            Report::new(format!("reg = {r}"), json!({ "regularity": r, "field_char": p }))
        }
        Command::Betti(a) => {
            let t = betti(&a.load()?, p)?;
            Report::new(t.to_string(), serde_json::to_value(BettiDoc::from(&t))?)
        }
        Command::Linres(a) => {
            let i = a.load()?;
            let lin = has_linear_resolution(&i, p)?;
            Report::new(format!("linear resolution: {lin}"), json!({ "linear": lin, "field_char": p }))
        }
        Command::Polymatroidal(a) => {
            let v = is_polymatroidal(&a.load()?)?;
            let mut text = format!("polymatroidal: {}", v.polymatroidal);
            let witness = v.witness.as_ref().map(|w| {
                write!(text, "\nno exchange for u = {}, v = {}, i = {}", w.u, w.v, w.i + 1).unwrap();
                json!({ "u": w.u.exponents(), "v": w.v.exponents(), "i": w.i + 1 })
            });
            Report::new(text, json!({ "polymatroidal": v.polymatroidal, "witness": witness }))
        }
        Command::Matroidal(a) => {
            let m = is_matroidal(&a.load()?)?;
            Report::new(format!("matroidal: {m}"), json!({ "matroidal": m }))
        }
        Command::Linquot { ideal, cap_gens } => {
            let r = linear_quotients(&ideal.load()?, *cap_gens)?;
            let status = format!("{:?}", r.status);
            let order: Option<Vec<String>> = r.order.map(|o| o.iter().map(ToString::to_string).collect());
            let mut text = format!("linear quotients: {status}");
            if let Some(o) = &order {
                write!(text, "\norder: {}", o.join(", ")).unwrap();
            }
            Report::new(text, json!({ "status": status, "order": order }))
        }
        Command::Localize { ideal, prime } => {
            let i = ideal.load()?;
            let q = parse_prime(prime, i.nvars())?;
            let l = i.localize(&q)?;
            Report::new(format!("I{q} = {l}"), json!({ "prime": prime_indices(&q), "ideal": IdealDoc::from(&l) }))
        }
        Command::Saturate { ideal, var, graded } => saturate(&ideal.load()?, *var, *graded, p)?,
        Command::Decompose(a) => {
            let comps = irreducible_decomposition(&a.load()?)?;
            let text = comps.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
            let doc: Vec<Value> =
                comps.iter().map(|c| json!({ "prime": prime_indices(&c.prime()), "exponents": c.exponents() })).collect();
            Report::new(text, json!({ "components": doc }))
        }
        Command::Ass(a) => {
            let i = a.load()?;
            let ass = ass_primes(&i)?;
            let min = min_primes(&i)?;
            let mut text = String::new();
            for q in &ass {
                writeln!(text, "{q}{}", if min.contains(q) { "" } else { "  embedded" }).unwrap();
            }
            let doc: Vec<Value> =
                ass.iter().map(|q| json!({ "prime": prime_indices(q), "minimal": min.contains(q) })).collect();
            Report::new(text.trim_end().to_owned(), json!({ "ass": doc }))
        }
        Command::Height(a) => {
            let h = height(&a.load()?)?;
            Report::new(format!("height = {h}"), json!({ "height": h }))
        }
        Command::Scan(a) => scan(&a.load()?, p)?,
        Command::Powers { ideal, kmax } => {
            let rows = powers_linearity_profile(&ideal.load()?, *kmax, p)?;
            let text = rows.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
            let doc: Vec<Value> = rows
                .iter()
                .map(|r| json!({ "k": r.k, "degree": r.degree, "regularity": r.regularity, "linear": r.linear }))
                .collect();
            Report::new(text, json!({ "field_char": p, "powers": doc }))
        }
        Command::ProductCheck { ideal, with } => {
            let i = ideal.load()?;
            let j = load_ideal(with, Some(i.nvars()))?;
            let v = product_polymatroidality(&i, &j)?;
            Report::new(
                format!("IJ polymatroidal: {}\nI polymatroidal: {}\nJ polymatroidal: {}", v.product, v.left, v.right),
                json!({ "product": v.product, "left": v.left, "right": v.right }),
            )
        }
        Command::Veronese { ideal, nvars, degree, bounds } => match (ideal, degree, bounds) {
            (Some(text), _, _) => {
                let i = load_ideal(text, *nvars)?;
                match is_veronese_type(&i)? {
                    Some((d, b)) => Report::new(
                        format!("Veronese type: d = {d}, bounds = {:?}", b.0),
                        json!({ "veronese": true, "degree": d, "bounds": b.0 }),
                    ),
                    None => Report::new("Veronese type: false".into(), json!({ "veronese": false })),
                }
            }
            (None, Some(d), Some(b)) => {
                let n = nvars.unwrap_or(b.len());
                let i = veronese_type(n, *d, &ExponentBounds(b.clone()))?;
                Report::new(i.to_string(), serde_json::to_value(IdealDoc::from(&i))?)
            }
            _ => return Err(HarnessError::InvalidParameters("give --ideal, or --degree with --bounds".into())),
        },
        Command::Examples { action: ExamplesAction::List } => {
            Report::new(NAMES.join("\n"), json!({ "examples": NAMES }))
        }
        Command::Examples { action: ExamplesAction::Run { name } } => examples(name)?,
        Command::Fuzz { seed, samples, nvars, max_degree, max_gens } => {
            let cfg = FuzzConfig {
                seed: *seed,
                samples: *samples,
                nvars: *nvars,
                max_degree: *max_degree,
                max_gens: *max_gens,
                field_char: p,
            };
            let r = run_campaign(&cfg)?;
            let failures = r.failures().count();
            let mut text = format!(
                "samples {}  polymatroidal {}  all-linear {}  covered {}  findings {}  failures {}",
                r.samples,
                r.polymatroidal,
                r.all_linear,
                r.covered,
                r.findings.len(),
                failures
            );
            for f in &r.findings {
                write!(
                    text,
                    "\n#{} seed {} {:?}: all_linear={} polymatroidal={} violated={:?}\n  {}",
                    f.index, f.seed, f.family, f.all_linear, f.polymatroidal, f.violated, f.text
                )
                .unwrap();
            }
            Report { text, doc: serde_json::to_value(&r)?, ok: failures == 0 }
        }
    })
}

fn saturate(i: &MonomialIdeal, var: Option<usize>, graded: bool, p: u32) -> Result<Report, HarnessError> {
    if graded {
        let s = i.saturate_graded()?;
        return Ok(Report::new(s.to_string(), serde_json::to_value(IdealDoc::from(&s))?));
    }
    if let Some(k) = var {
        if k == 0 || k > i.nvars() {
            return Err(HarnessError::InvalidParameters(format!("--var must be in 1..={}", i.nvars())));
        }
        let s = i.saturate_var(k - 1)?;
        return Ok(Report::new(s.to_string(), serde_json::to_value(IdealDoc::from(&s))?));
    }
    let r = check_saturations(i, p)?;
    let mut text = format!("I linear: {}", r.ideal_linear);
    let mut rows = Vec::new();
    for row in &r.rows {
        write!(text, "\nI[{}] = {}  linear: {}", row.var + 1, row.saturated, row.linear).unwrap();
        rows.push(json!({ "var": row.var + 1, "ideal": IdealDoc::from(&row.saturated), "linear": row.linear }));
    }
    Ok(Report::new(text, json!({ "ideal_linear": r.ideal_linear, "all_linear": r.all_linear(), "saturations": rows })))
}

fn scan(i: &MonomialIdeal, p: u32) -> Result<Report, HarnessError> {
    let s = scan_localizations(i, p)?;
    let flags = theorem_preconditions(i)?;
    let checks = verify_theorems(i, &flags, &s)?;
    let mut text = String::from("prime\tdegree\treg\tlinear\tI(p)\n");
    let mut rows = Vec::new();
    for r in &s.rows {
        let deg = r.degree.map_or("mixed".to_owned(), |d| d.to_string());
        writeln!(text, "{}\t{}\t{}\t{}\t{}", r.prime, deg, r.regularity, r.linear, r.localized).unwrap();
        rows.push(json!({
            "prime": prime_indices(&r.prime),
            "ideal": IdealDoc::from(&r.localized),
            "degree": r.degree,
            "regularity": r.regularity,
            "linear": r.linear,
        }));
    }
    write!(text, "all_linear: {}\npolymatroidal: {}\nconsistent: {}", s.all_linear, s.polymatroidal, s.consistent)
        .unwrap();
    let mut check_docs = Vec::new();
    for c in &checks {
        write!(text, "\n{} ({:?}): {}", c.flag, c.conclusion, if c.holds() { "holds" } else { "VIOLATED" }).unwrap();
        check_docs.push(json!({ "flag": c.flag, "conclusion": format!("{:?}", c.conclusion), "holds": c.holds() }));
    }
    let ok = checks.iter().all(|c| c.holds());
    let doc = json!({
        "field_char": p,
        "rows": rows,
        "all_linear": s.all_linear,
        "polymatroidal": s.polymatroidal,
        "consistent": s.consistent,
        "theorems": check_docs,
    });
    Ok(Report { text, doc, ok })
}

fn examples(name: &str) -> Result<Report, HarnessError> {
    let names: Vec<&str> = if name == "all" { NAMES.to_vec() } else { vec![name] };
    let mut text = String::new();
    let mut docs = Vec::new();
    let mut ok = true;
    for n in names {
        let r = run_example(n)?;
        ok &= r.passed();
        write!(text, "{r}").unwrap();
        let checks: Vec<Value> =
            r.checks.iter().map(|c| json!({ "label": c.label, "pass": c.pass, "detail": c.detail })).collect();
        docs.push(json!({ "name": r.name, "ideal": r.ideal, "pass": r.passed(), "checks": checks }));
    }
    Ok(Report { text: text.trim_end().to_owned(), doc: json!({ "examples": docs, "pass": ok }), ok })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match cli.format {
        Format::Text => println!("{}", report.text),
        Format::Structured => println!("{}", serde_json::to_string_pretty(&report.doc).expect("json values serialize")),
    }
    if let Some(path) = &cli.out {
        let written = serde_json::to_string_pretty(&report.doc)
            .map_err(HarnessError::from)
            .and_then(|s| std::fs::write(path, s + "\n").map_err(HarnessError::from));
        if let Err(e) = written {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
