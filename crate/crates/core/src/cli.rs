//! Command-line front end: `poly`, `coeff`, `vanish`, `emit`, `count`, `selftest`.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::filters::filter_vanish;
use crate::fp::{check_prime, DEFAULT_PRIME};
use crate::groebner::{count_solutions, GROEBNER_PRIME};
use crate::lifted::serialize::{deserialize, serialize, Format};
use crate::lifted::{build_uniform, coefficient_system};
use crate::purbhoo::{vanish_test, VanishVerdict};
use crate::schubert::{coeff_exact, coeff_ps_structure, pipe_dreams, schubert_poly_dd};
use crate::selftest;
use crate::weyl::{LieKind, LieType, Permutation, WeylElement};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REFUSED: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Largest type-A rank handled by the exact layer of `vanish`.
pub const EXACT_LIMIT: usize = 5;

#[derive(Parser, Debug)]
#[command(name = "schubert", version, about = "Schubert polynomials, coefficients and vanishing tests")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Prime for randomized steps; `count` defaults to 32003.
    #[arg(long, global = true, env = "SCHUBERT_PRIME")]
    pub prime: Option<u64>,
    #[arg(long, global = true, default_value_t = 3)]
    pub trials: usize,
    #[arg(long = "type", global = true, default_value = "A")]
    pub lie_kind: LieKind,
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Expand,
    Ps,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormulationArg {
    Cell,
    Borel,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the Schubert polynomial of a permutation.
    Poly {
        w: String,
        #[arg(long)]
        pipe_dreams: bool,
    },
    /// Print the coefficient of Sch_w in Sch_u * Sch_v.
    Coeff {
        u: String,
        v: String,
        w: String,
        #[arg(long, value_enum, default_value_t = Method::Expand)]
        method: Method,
    },
    /// Decide whether a Schubert coefficient vanishes.
    Vanish {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Write the lifted polynomial system of a triple.
    Emit {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
        #[arg(long, value_enum, default_value_t = FormulationArg::Cell)]
        formulation: FormulationArg,
    },
    /// Specialize a stored system and count its solutions.
    Count { file: PathBuf },
    /// Run the built-in checks.
    Selftest {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        level: u8,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SizeGuard(_) | Error::Budget(_) => EXIT_REFUSED,
        Error::Invariant(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

fn permutation(s: &str) -> Result<Permutation> {
    s.parse()
}

fn elements(g: &Global, words: [&str; 3]) -> Result<(LieType, [WeylElement; 3])> {
    let [u, v, w] = words.map(|s| WeylElement::parse(s, g.lie_kind));
    let (u, v, w) = (u?, v?, w?);
    let size = |x: &WeylElement| match x {
        WeylElement::A(p) => p.size(),
        WeylElement::Signed(s) => s.size(),
    };
    let n = size(&u).max(size(&v)).max(size(&w));
    let ty = LieType::new(g.lie_kind, n);
    for x in [&u, &v, &w] {
        x.validate(&ty)?;
    }
    Ok((ty, [u, v, w]))
}

/// Filters, then the exact oracle for small type A, then the rank test.
pub fn layered_vanish(ty: &LieType, u: &WeylElement, v: &WeylElement, w: &WeylElement, p: u64, trials: usize, seed: u64) -> Result<VanishVerdict> {
    if let (WeylElement::A(a), WeylElement::A(b), WeylElement::A(c)) = (u, v, w) {
        if let Some(cert) = filter_vanish(a, b, c) {
            return Ok(VanishVerdict::from_filter(cert));
        }
        if ty.n <= EXACT_LIMIT {
            return Ok(VanishVerdict::from_exact(coeff_exact(a, b, c)));
        }
    }
    vanish_test(u, v, w, ty, p, trials, seed)
}

fn execute(cli: &Cli) -> Result<(String, i32)> {
    let g = &cli.global;
    let json_default = |f: Option<OutputFormat>, machine: bool| f.map_or(machine, |f| f == OutputFormat::Json);
    match &cli.command {
        Command::Poly { w, pipe_dreams: show } => {
            let w = permutation(w)?;
            let poly = schubert_poly_dd(&w);
            let dreams = if *show { pipe_dreams(&w) } else { Vec::new() };
            let n = w.size().max(1);
            if json_default(g.format, false) {
                let rendered: Vec<String> = dreams.iter().map(|d| d.render(n)).collect();
                let mut value = json!({ "w": w.to_string(), "polynomial": poly.to_string() });
                if *show {
                    value["pipe_dreams"] = json!(rendered);
                }
                return Ok((format!("{value}\n"), EXIT_OK));
            }
            let mut out = format!("{poly}\n");
            for d in &dreams {
                out.push('\n');
                out.push_str(&d.render(n));
            }
            Ok((out, EXIT_OK))
        }
        Command::Coeff { u, v, w, method } => {
            let (u, v, w) = (permutation(u)?, permutation(v)?, permutation(w)?);
            let c = match method {
                Method::Expand => coeff_exact(&u, &v, &w),
                Method::Ps => {
                    let n = u.size().max(v.size()).max(w.size());
                    coeff_ps_structure(&u, &v, &w, n)
                }
            };
            if json_default(g.format, false) {
                Ok((format!("{}\n", json!({ "coefficient": c.to_string() })), EXIT_OK))
            } else {
                Ok((format!("{c}\n"), EXIT_OK))
            }
        }
        Command::Vanish { u, v, w } => {
            let (ty, [u, v, w]) = elements(g, [u, v, w])?;
            let p = g.prime.unwrap_or(DEFAULT_PRIME);
            check_prime(p).map_err(|_| Error::BadPrime(p))?;
            let verdict = layered_vanish(&ty, &u, &v, &w, p, g.trials, g.seed)?;
            if json_default(g.format, true) {
                let s = serde_json::to_string(&verdict).map_err(|e| Error::Invariant(e.to_string()))?;
                Ok((format!("{s}\n"), EXIT_OK))
            } else {
                Ok((format!("{verdict}\n"), EXIT_OK))
            }
        }
        Command::Emit { u, v, w, formulation } => {
            let (ty, [u, v, w]) = elements(g, [u, v, w])?;
            let sys = match formulation {
                FormulationArg::Cell => coefficient_system(&u, &v, &w, &ty)?,
                FormulationArg::Borel => build_uniform(&u, &v, &w, &ty)?,
            };
            let format = if json_default(g.format, true) { Format::Json } else { Format::Text };
            Ok((serialize(&sys, format), EXIT_OK))
        }
        Command::Count { file } => {
            let src = std::fs::read_to_string(file)
                .map_err(|e| Error::parse(file.display().to_string(), e.to_string()))?;
            let input = if src.trim_start().starts_with('{') { Format::Json } else { Format::Text };
            let sys = deserialize(&src, input)?;
            let p = g.prime.unwrap_or(GROEBNER_PRIME);
            let info = count_solutions(&sys, p, g.seed)?;
            if json_default(g.format, true) {
                let mut value = info.to_json();
                value["prime"] = json!(p);
                value["seed"] = json!(g.seed);
                Ok((format!("{value}\n"), EXIT_OK))
            } else {
                Ok((format!("{info}\n"), EXIT_OK))
            }
        }
        Command::Selftest { level } => {
            let mut out = String::new();
            let mut code = EXIT_OK;
            for id in selftest::criteria(*level) {
                let r = selftest::run(id);
                if !r.passed {
                    code = EXIT_INTERNAL;
                }
                out.push_str(&r.line());
                out.push('\n');
            }
            Ok((out, code))
        }
    }
}

/// Runs one invocation, writing results to `out` (or `--output`) and diagnostics to `err`.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let written = match &cli.global.output {
                Some(path) => std::fs::write(path, &text),
                None => out.write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => code,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    EXIT_USAGE
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
