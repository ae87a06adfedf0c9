//! Thin command-line front end over the `ggchar` library: computes `rho_n`
//! expansions, Hall-Littlewood polynomials, irreducible-polynomial counts,
//! rho-basis expansions of expression files, and runs the identity
//! verification suite. Output is deterministic byte-for-byte.

use ggchar::gelfand_graev::{self, GgError};
use ggchar::hall_littlewood::{hl_one_row, twisted_hl_one_row, HLParam};
use ggchar::render;
use ggchar::ring::{LaurentPoly, Rat};
use ggchar::symfunc::{BasisTag, SymFunc};
use num_traits::One;
use std::collections::HashMap;
use std::io::Write;
use std::process::exit;

const EXIT_USAGE: i32 = 2;
const EXIT_PARSE: i32 = 3;
const EXIT_DEGENERATE_Q: i32 = 4;
const EXIT_IDENTITY_FAILURE: i32 = 5;
const EXIT_NOT_HOMOGENEOUS: i32 = 6;

const USAGE: &str = "\
ggchar — exact computations with induced Gelfand-Graev characteristics

USAGE:
    ggchar <COMMAND> [OPTIONS]

COMMANDS:
    rho <n>                 print rho_n
    verify --max-n <n>      run the identity suite up to degree n
    product <n1> <n2> ...   print the product rho_{n1} ... rho_{nk}
    to-rho <file> --q <a/b> expand an expression file in the rho basis
    hl <n>                  print the one-row Hall-Littlewood polynomial
                            (twisted, t = q^-1, unless --t is given)
    count-irr <i>           print the irreducible-polynomial count L_q(i)
    help                    print this message

OPTIONS:
    --basis <m|e|h|p|s>     output basis for rho/product (default h)
    --q <a/b>               specialize q at an exact rational
    --t <a/b>               constant Hall-Littlewood parameter for hl
    --nonzero-root          count-irr: count only polynomials with nonzero
                            constant term (l_q instead of L_q)
    --format <text|structured>  output format (default text)
    --out <path>            write output to a file (default stdout)

EXIT CODES:
    0  success
    2  usage or argument error
    3  expression file parse error
    4  degenerate q (q^k = 1 for some k in range)
    5  identity verification failure
    6  input not homogeneous
";

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<GgError> for CliError {
    fn from(e: GgError) -> Self {
        let code = match e {
            GgError::DegenerateQ(_) => EXIT_DEGENERATE_Q,
            GgError::NotHomogeneous => EXIT_NOT_HOMOGENEOUS,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<render::ParseError> for CliError {
    fn from(e: render::ParseError) -> Self {
        CliError {
            code: EXIT_PARSE,
            message: e.to_string(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Structured,
}

struct Options {
    positional: Vec<String>,
    values: HashMap<&'static str, String>,
    nonzero_root: bool,
}

const VALUE_FLAGS: [&str; 6] = ["--basis", "--q", "--t", "--max-n", "--format", "--out"];

fn parse_options(args: &[String]) -> Result<Options, CliError> {
    let mut positional = Vec::new();
    let mut values: HashMap<&'static str, String> = HashMap::new();
    let mut nonzero_root = false;
    let mut iter = args.iter();
    while let Some(arg) = iter.next() {
        if arg == "--nonzero-root" {
            nonzero_root = true;
            continue;
        }
        if let Some(stripped) = arg.strip_prefix("--") {
            let (name, inline_value) = match stripped.split_once('=') {
                Some((n, v)) => (format!("--{n}"), Some(v.to_string())),
                None => (arg.clone(), None),
            };
            let key = VALUE_FLAGS
                .iter()
                .find(|&&f| f == name)
                .ok_or_else(|| CliError::usage(format!("unknown option {arg}")))?;
            let value = match inline_value {
                Some(v) => v,
                None => iter
                    .next()
                    .ok_or_else(|| CliError::usage(format!("{name} needs a value")))?
                    .clone(),
            };
            values.insert(key, value);
        } else {
            positional.push(arg.clone());
        }
    }
    Ok(Options {
        positional,
        values,
        nonzero_root,
    })
}

impl Options {
    fn format(&self) -> Result<Format, CliError> {
        match self.values.get("--format").map(String::as_str) {
            None | Some("text") => Ok(Format::Text),
            Some("structured") => Ok(Format::Structured),
            Some(other) => Err(CliError::usage(format!(
                "unknown format {other:?} (expected text or structured)"
            ))),
        }
    }

    fn basis(&self) -> Result<BasisTag, CliError> {
        match self.values.get("--basis") {
            None => Ok(BasisTag::Complete),
            Some(s) => s.parse().map_err(CliError::usage),
        }
    }

    fn q_value(&self) -> Result<Option<Rat>, CliError> {
        match self.values.get("--q") {
            None => Ok(None),
            Some(s) => Ok(Some(
                render::parse_rat(s).map_err(|e| CliError::usage(e.0))?,
            )),
        }
    }

    fn emit(&self, content: &str) -> Result<(), CliError> {
        match self.values.get("--out") {
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout
                    .write_all(content.as_bytes())
                    .and_then(|_| stdout.flush())
                    .map_err(|e| CliError::usage(format!("cannot write output: {e}")))
            }
            Some(path) => std::fs::write(path, content)
                .map_err(|e| CliError::usage(format!("cannot write {path}: {e}"))),
        }
    }
}

fn parse_count(s: &str, what: &str) -> Result<u32, CliError> {
    s.parse()
        .map_err(|_| CliError::usage(format!("{what} must be a nonnegative integer, got {s:?}")))
}

/// Evaluates every coefficient at a fixed rational `q`.
fn specialize(f: &SymFunc, q: &Rat) -> Result<SymFunc, CliError> {
    let mut terms = Vec::new();
    for (lam, c) in f.terms() {
        let value = c.eval(q).map_err(|e| CliError::usage(e.to_string()))?;
        terms.push((lam.clone(), LaurentPoly::constant(value)));
    }
    Ok(SymFunc::from_terms(f.basis(), terms))
}

fn emit_symfunc(opts: &Options, f: &SymFunc) -> Result<(), CliError> {
    let f = match opts.q_value()? {
        Some(q) => specialize(f, &q)?,
        None => f.clone(),
    };
    let rendered = match opts.format()? {
        Format::Text => format!("{f}\n"),
        Format::Structured => format!("{}\n", render::symfunc_to_json(&f)),
    };
    opts.emit(&rendered)
}

fn cmd_rho(opts: &Options) -> Result<(), CliError> {
    let [n] = opts.positional.as_slice() else {
        return Err(CliError::usage("rho takes exactly one degree argument"));
    };
    let n = parse_count(n, "degree")?;
    let f = gelfand_graev::rho(n).convert(opts.basis()?);
    emit_symfunc(opts, &f)
}

fn cmd_product(opts: &Options) -> Result<(), CliError> {
    if opts.positional.is_empty() {
        return Err(CliError::usage("product needs at least one component size"));
    }
    let mut components = Vec::with_capacity(opts.positional.len());
    for s in &opts.positional {
        let c = parse_count(s, "component size")?;
        if c == 0 {
            return Err(CliError::usage("component sizes must be positive"));
        }
        components.push(c);
    }
    let f = gelfand_graev::product_rho(&components).convert(opts.basis()?);
    emit_symfunc(opts, &f)
}

fn cmd_to_rho(opts: &Options) -> Result<(), CliError> {
    let [path] = opts.positional.as_slice() else {
        return Err(CliError::usage("to-rho takes exactly one input file"));
    };
    let q = opts
        .q_value()?
        .ok_or_else(|| CliError::usage("to-rho needs --q <a/b>"))?;
    let src = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {path}: {e}")))?;
    let f = match render::parse_expression(&src)? {
        render::ExpressionFile::SymFunc(f) => f,
        render::ExpressionFile::RhoCombination(terms) => gelfand_graev::rho_combination(&terms),
    };
    let expansion = gelfand_graev::to_rho_basis(&f, &q)?;
    let rendered = match opts.format()? {
        Format::Text => format!(
            "{}\ndim = {}\n",
            render::rho_expansion_to_text(&expansion),
            expansion.dim_sum()
        ),
        Format::Structured => format!("{}\n", render::rho_expansion_to_json(&expansion)),
    };
    opts.emit(&rendered)
}

fn cmd_hl(opts: &Options) -> Result<(), CliError> {
    let [n] = opts.positional.as_slice() else {
        return Err(CliError::usage("hl takes exactly one degree argument"));
    };
    let n = parse_count(n, "degree")?;
    if n == 0 {
        return Err(CliError::usage("hl needs a positive degree"));
    }
    let f = match opts.values.get("--t") {
        None => twisted_hl_one_row(n),
        Some(s) => {
            let t = render::parse_rat(s).map_err(|e| CliError::usage(e.0))?;
            if t.is_one() {
                return Err(CliError::usage("t = 1 is outside the domain of P_n"));
            }
            hl_one_row(n, &HLParam::constant(t))
        }
    };
    emit_symfunc(opts, &f)
}

fn cmd_count_irr(opts: &Options) -> Result<(), CliError> {
    let [i] = opts.positional.as_slice() else {
        return Err(CliError::usage(
            "count-irr takes exactly one degree argument",
        ));
    };
    let i = parse_count(i, "degree")?;
    if i == 0 {
        return Err(CliError::usage("count-irr needs a positive degree"));
    }
    let poly = if opts.nonzero_root {
        gelfand_graev::count_irreducible_nonzero_root(i)
    } else {
        gelfand_graev::count_irreducible(i)
    };
    let q = opts.q_value()?;
    let rendered = match (opts.format()?, &q) {
        (Format::Text, None) => format!("{poly}\n"),
        (Format::Text, Some(q)) => {
            let v = poly.eval(q).map_err(|e| CliError::usage(e.to_string()))?;
            format!("{v}\n")
        }
        (Format::Structured, None) => format!(
            "{{\"degree\":{i},\"nonzero_root\":{},\"count\":{}}}\n",
            opts.nonzero_root,
            render::laurent_to_json(&poly)
        ),
        (Format::Structured, Some(q)) => {
            let v = poly.eval(q).map_err(|e| CliError::usage(e.to_string()))?;
            format!(
                "{{\"degree\":{i},\"nonzero_root\":{},\"q\":\"{q}\",\"count\":\"{v}\"}}\n",
                opts.nonzero_root
            )
        }
    };
    opts.emit(&rendered)
}

fn cmd_verify(opts: &Options) -> Result<(), CliError> {
    if !opts.positional.is_empty() {
        return Err(CliError::usage("verify takes no positional arguments"));
    }
    let max_n = match opts.values.get("--max-n") {
        Some(s) => parse_count(s, "--max-n")?,
        None => return Err(CliError::usage("verify needs --max-n <n>")),
    };
    let report = gelfand_graev::verify_suite(max_n);
    let failures = report.iter().filter(|c| !c.pass).count();
    let rendered = match opts.format()? {
        Format::Text => {
            let mut out = String::new();
            for check in &report {
                out.push_str(&format!(
                    "{} n={}: {}\n",
                    check.identity,
                    check.n,
                    if check.pass { "PASS" } else { "FAIL" }
                ));
            }
            if failures == 0 {
                out.push_str(&format!("verify: {} checks, all passed\n", report.len()));
            } else {
                out.push_str(&format!(
                    "verify: {} checks, {failures} FAILED\n",
                    report.len()
                ));
            }
            out
        }
        Format::Structured => {
            let mut out = format!(
                "{{\"max_n\":{max_n},\"all_pass\":{},\"checks\":[",
                failures == 0
            );
            for (i, check) in report.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&format!(
                    "{{\"identity\":\"{}\",\"n\":{},\"pass\":{}}}",
                    check.identity, check.n, check.pass
                ));
            }
            out.push_str("]}\n");
            out
        }
    };
    opts.emit(&rendered)?;
    if failures > 0 {
        return Err(CliError {
            code: EXIT_IDENTITY_FAILURE,
            message: format!("{failures} identity checks failed"),
        });
    }
    Ok(())
}

fn run(args: &[String]) -> Result<(), CliError> {
    let Some(command) = args.first() else {
        return Err(CliError::usage("missing command (try `ggchar help`)"));
    };
    if command == "help" || command == "--help" || command == "-h" {
        print!("{USAGE}");
        return Ok(());
    }
    let opts = parse_options(&args[1..])?;
    match command.as_str() {
        "rho" => cmd_rho(&opts),
        "verify" => cmd_verify(&opts),
        "product" => cmd_product(&opts),
        "to-rho" => cmd_to_rho(&opts),
        "hl" => cmd_hl(&opts),
        "count-irr" => cmd_count_irr(&opts),
        other => Err(CliError::usage(format!(
            "unknown command {other:?} (try `ggchar help`)"
        ))),
    }
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let Err(e) = run(&args) {
        eprintln!("ggchar: {}", e.message);
        exit(e.code);
    }
}
