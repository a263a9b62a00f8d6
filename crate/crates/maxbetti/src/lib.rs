//! Command-line front end and JSON forms for `maxbetti-core`.
//!
//! Exit codes: 0 on success, 1 for invalid input, 2 when a checked identity
//! fails or a dominance sweep finds a violation.

pub mod json;
mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use maxbetti_core::hilbert::{decompose, HilbertPolynomial, UniversalLexIdeal};
use maxbetti_core::maximizer::{max_betti_from_ideal, max_betti_from_polynomial, MaximizerReport};
use maxbetti_core::oracle::{
    default_max_degree, verify_betti_dominance, verify_m_dominance, DominanceReport,
};
use maxbetti_core::{BigInt, MonomialIdeal, RationalPoly};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::json::{BettiJson, DominanceJson, IdealJson, MaximizerJson, PolynomialJson, UniversalJson};
use crate::render::{betti_diagram, binomial_form, list, tuple};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Internal(_) => 2,
        }
    }
}

impl From<maxbetti_core::Error> for CliError {
    fn from(e: maxbetti_core::Error) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "maxbetti", version, about = "Saturated ideals with the largest Betti numbers for a Hilbert polynomial")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing on success.
    #[arg(long, short, global = true)]
    quiet: bool,
    /// Accepted and ignored; all computations are deterministic.
    #[arg(long, global = true, value_name = "SEED")]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct PolyArgs {
    /// Ascending coefficients of the Hilbert polynomial, e.g. `1,-19/6,1,1/6`
    /// or `["1","-19/6","1","1/6"]`.
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    /// Number of variables.
    #[arg(long)]
    n: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    M,
    Betti,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hilbert series numerator and Hilbert polynomial of an ideal.
    Hilbert {
        /// Ideal as a JSON file or an inline JSON document.
        #[arg(long)]
        ideal: String,
    },
    /// b-list and generators of the universal lex ideal with the polynomial.
    Universal(PolyArgs),
    /// The full maximizer report.
    Extremal {
        #[arg(long, allow_hyphen_values = true, required_unless_present = "from_ideal", requires = "n")]
        poly: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Start from an ideal (JSON file or inline) instead of a polynomial.
        #[arg(long, conflicts_with_all = ["poly", "n"])]
        from_ideal: Option<String>,
    },
    /// Graded and total Betti numbers of an ideal and its quotient.
    Betti {
        #[arg(long)]
        ideal: String,
    },
    /// The lex ideal with the Hilbert function of a strongly stable ideal.
    Lexify {
        #[arg(long)]
        ideal: String,
    },
    /// Exhaustive dominance check against all ladder sets.
    Verify {
        #[command(flatten)]
        poly: PolyArgs,
        /// Largest degree of enumerated monomials; defaults to a complete bound.
        #[arg(long)]
        max_degree: Option<u64>,
        #[arg(long, value_enum, default_value = "betti")]
        mode: Mode,
    },
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let mut buf = Vec::new();
    let result = dispatch(&cli, &mut buf);
    if !cli.quiet || result.is_err() {
        let _ = out.write_all(&buf);
    }
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

type Out<'a> = &'a mut Vec<u8>;

fn dispatch(cli: &Cli, out: Out) -> Result<(), CliError> {
    match &cli.command {
        Command::Hilbert { ideal } => hilbert(&load_ideal(ideal)?, cli.json, out),
        Command::Universal(p) => universal(&parse_poly(&p.poly)?, p.n, cli.json, out),
        Command::Extremal { poly, n, from_ideal } => {
            let report = match (from_ideal, poly, n) {
                (Some(path), _, _) => max_betti_from_ideal(&load_ideal(path)?)?,
                (None, Some(p), Some(n)) => max_betti_from_polynomial(&parse_poly(p)?, *n)?,
                _ => return Err(CliError::Input("either --from-ideal or both --poly and --n are required".into())),
            };
            extremal(&report, cli.json, out)
        }
        Command::Betti { ideal } => betti(&load_ideal(ideal)?, cli.json, out),
        Command::Lexify { ideal } => {
            let lex = load_ideal(ideal)?.lexify()?;
            if cli.json {
                emit_json(out, &IdealJson::from(&lex))
            } else {
                line(out, format!("{lex}"))
            }
        }
        Command::Verify { poly, max_degree, mode } => {
            let p = parse_poly(&poly.poly)?;
            verify(&p, poly.n, *max_degree, *mode, cli.json, out)
        }
    }
}

fn line(out: Out, s: impl AsRef<str>) -> Result<(), CliError> {
    out.extend_from_slice(s.as_ref().as_bytes());
    out.push(b'\n');
    Ok(())
}

fn emit_json<T: Serialize>(out: Out, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))?;
    line(out, text)
}

/// Inline JSON if the argument starts with `{`, otherwise a file path.
fn load_ideal(arg: &str) -> Result<MonomialIdeal, CliError> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(Path::new(arg))
            .map_err(|e| CliError::Input(format!("cannot read ideal file {arg}: {e}")))?
    };
    let parsed: IdealJson = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("invalid ideal JSON: {e}")))?;
    MonomialIdeal::try_from(&parsed)
}

fn parse_poly(arg: &str) -> Result<RationalPoly, CliError> {
    let trimmed = arg.trim();
    if trimmed.starts_with('[') {
        let coeffs: Vec<String> = serde_json::from_str(trimmed)
            .map_err(|e| CliError::Input(format!("invalid coefficient list: {e}")))?;
        Ok(RationalPoly::parse_coeff_list(&coeffs.join(","))?)
    } else {
        Ok(RationalPoly::parse_coeff_list(trimmed)?)
    }
}

/// Integer as a JSON number when it fits in `i64`, otherwise a string.
fn integer_json(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(x) => x.into(),
        None => v.to_string().into(),
    }
}

fn hilbert(ideal: &MonomialIdeal, json: bool, out: Out) -> Result<(), CliError> {
    let numerator = ideal.hilbert_series();
    let hp = ideal.hilbert_polynomial()?;
    let b = decompose(hp.poly(), hp.n());
    if json {
        #[derive(Serialize)]
        struct HilbertJson {
            numerator: Vec<serde_json::Value>,
            polynomial: PolynomialJson,
            binomial_form: Option<String>,
        }
        let polynomial = PolynomialJson {
            b: b.as_ref().ok().cloned(),
            ..PolynomialJson::from(&hp)
        };
        return emit_json(
            out,
            &HilbertJson {
                numerator: numerator.coeffs().iter().map(integer_json).collect(),
                polynomial,
                binomial_form: b.as_ref().ok().map(|b| binomial_form(b, hp.n())),
            },
        );
    }
    line(out, format!("ideal: {ideal}"))?;
    line(out, format!("Hilbert series: ({numerator}) / (1 - z)^{}", ideal.nvars()))?;
    line(out, format!("Hilbert polynomial: {hp}"))?;
    line(out, format!("coefficients: {}", hp.poly().coeff_strings().join(",")))?;
    match b {
        Ok(b) => {
            line(out, format!("binomial form: {}", binomial_form(&b, hp.n())))?;
            line(out, format!("b-list: {}", tuple(&b)))
        }
        Err(e) => line(out, format!("binomial form: none ({e})")),
    }
}

fn universal(p: &RationalPoly, n: usize, json: bool, out: Out) -> Result<(), CliError> {
    let b = decompose(p, n)?;
    let u = UniversalLexIdeal::from_b_list(&b, 1, n)?;
    let gens: Vec<String> = u.generators().iter().map(ToString::to_string).collect();
    if json {
        #[derive(Serialize)]
        struct UniversalOut {
            b: Vec<u64>,
            #[serde(rename = "U")]
            universal: UniversalJson,
            generators: Vec<String>,
        }
        return emit_json(
            out,
            &UniversalOut {
                b,
                universal: (&u).into(),
                generators: gens,
            },
        );
    }
    line(out, format!("Hilbert polynomial: {}", HilbertPolynomial::new(n, p.clone())))?;
    line(out, format!("binomial form: {}", binomial_form(&b, n)))?;
    line(out, format!("b-list: {}", tuple(&b)))?;
    line(out, format!("generators: {}", gens.join(", ")))
}

fn extremal(r: &MaximizerReport, json: bool, out: Out) -> Result<(), CliError> {
    if json {
        return emit_json(out, &MaximizerJson::from(r));
    }
    let b = r.universal.b_list();
    line(out, format!("Hilbert polynomial: {}", r.input))?;
    line(out, format!("binomial form: {}", binomial_form(&b, r.n)))?;
    line(out, format!("b-list: {}", tuple(&b)))?;
    line(out, format!("universal lex ideal: {}", r.universal))?;
    line(out, format!("U restricted: {}", r.ubar))?;
    line(out, format!("saturation: {}", r.sat))?;
    line(out, format!("c: {}", r.c))?;
    line(out, format!("extremal set: {}", r.extremal))?;
    line(out, format!("J: {}", r.j))?;
    line(out, format!("L: {}", r.ideal))?;
    line(out, format!("generators: {}", r.ideal.generators().len()))?;
    line(out, format!("totals: {}", tuple(r.betti.totals())))?;
    line(out, "Betti diagram of S/L:")?;
    out.extend_from_slice(betti_diagram(&r.quotient_betti).as_bytes());
    if let Some(c) = &r.comparison {
        line(out, format!("input totals: {}", tuple(&c.input_totals)))?;
        line(out, format!("lex totals: {}", tuple(&c.lex_totals)))?;
    }
    let k = r.checks;
    let all = k.polynomial_matches && k.complement_matches && k.saturated && k.j_lex && k.betti_formulas_agree;
    line(out, format!("checks: {}", if all { "passed" } else { "FAILED" }))
}

fn betti(ideal: &MonomialIdeal, json: bool, out: Out) -> Result<(), CliError> {
    let table = ideal.betti_graded()?;
    let quotient = table.quotient()?;
    let ek = ideal.betti_total_ek()?;
    if ek.as_slice() != table.totals() {
        return Err(CliError::Internal(format!(
            "graded totals {} differ from generator formula {}",
            tuple(table.totals()),
            tuple(&ek)
        )));
    }
    if json {
        #[derive(Serialize)]
        struct BettiOut {
            ideal: BettiJson,
            quotient: BettiJson,
        }
        return emit_json(
            out,
            &BettiOut {
                ideal: (&table).into(),
                quotient: (&quotient).into(),
            },
        );
    }
    line(out, format!("ideal: {ideal}"))?;
    line(out, format!("totals of I: {}", tuple(table.totals())))?;
    line(out, "Betti diagram of I:")?;
    out.extend_from_slice(betti_diagram(&table).as_bytes());
    line(out, format!("totals of S/I: {}", tuple(quotient.totals())))?;
    line(out, "Betti diagram of S/I:")?;
    out.extend_from_slice(betti_diagram(&quotient).as_bytes());
    Ok(())
}

fn verify(
    p: &RationalPoly,
    n: usize,
    max_degree: Option<u64>,
    mode: Mode,
    json: bool,
    out: Out,
) -> Result<(), CliError> {
    let report: DominanceReport = match mode {
        Mode::Betti => verify_betti_dominance(p, n, max_degree)?,
        Mode::M => {
            let r = max_betti_from_polynomial(p, n)?;
            let c = r
                .c
                .to_usize()
                .ok_or_else(|| CliError::Input(format!("colength {} is too large to enumerate", r.c)))?;
            let d = max_degree.unwrap_or_else(|| default_max_degree(&r.sat_universal, c));
            verify_m_dominance(&r.sat_universal, c, d)?
        }
    };
    if json {
        emit_json(out, &DominanceJson::from(&report))?;
    } else {
        let name = match mode {
            Mode::M => "m",
            Mode::Betti => "betti",
        };
        line(out, format!("mode: {name}"))?;
        line(out, format!("enumerated: {}", report.enumerated))?;
        line(out, format!("violations: {}", report.violations.len()))?;
        line(out, format!("max_totals: {}", tuple(&report.max_totals)))?;
        for v in &report.violations {
            line(out, format!("  {v}"))?;
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Internal(format!(
            "{} dominance violations: {}",
            report.violations.len(),
            list(&report.violations)
        )))
    }
}
