//! The `mwl` command-line front end.
//!
//! Exit codes: 0 success (or `Holds`), 1 `Fails`, 2 `NotWellFormed` or
//! `StructurallyImpossible`, 3 usage or runtime error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::error::Error;
use crate::gray::{canonical_gray_map, make_field, GrayMap};
use crate::homopoly::HomoPoly;
use crate::identity::{
    check_identity, check_shiromoto_form, scan_existence, search_counterexample, structural_verdict,
    verify_conditions_with_map, verify_euclidean_conditions, verify_lee_conditions, IdentityQuery,
    IdentityVerdict, Status,
};
use crate::krawtchouk::{krawtchouk, krawtchouk_matrix, KrawtchoukParams};
use crate::weight_enum::{weight_enumerator, WeightKind};
use crate::zmod_codes::{set_enumeration_budget, LinearCode, Modulus, DEFAULT_BUDGET};

/// Environment variable overriding the default enumeration budget.
pub const BUDGET_ENV: &str = "MWL_BUDGET";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_NOT_APPLICABLE: i32 = 2;
pub const EXIT_ERROR: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "mwl", version, about = "Weight enumerators and MacWilliams-type identities over Z_l")]
struct Cli {
    /// Maximum number of candidate vectors an enumeration may visit.
    #[arg(long, global = true)]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

fn parse_kind(s: &str) -> std::result::Result<WeightKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every codeword of a code.
    Enumerate {
        #[arg(long)]
        code: PathBuf,
    },
    /// Print the dual code in code-spec format.
    Dual {
        #[arg(long)]
        code: PathBuf,
    },
    /// Print a weight enumerator.
    Wenum {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, value_parser = parse_kind)]
        weight: WeightKind,
    },
    /// Print the canonical Gray map table for Z_l over GF(m).
    Gray {
        #[arg(long)]
        modulus: u32,
        #[arg(long)]
        m: u64,
    },
    /// Print Krawtchouk values K_k(j).
    Kraw {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        /// Print the full (n+1)x(n+1) matrix (the default without --k/--x).
        #[arg(long)]
        table: bool,
        #[arg(long, requires = "x", conflicts_with = "table")]
        k: Option<u32>,
        #[arg(long, requires = "k", conflicts_with = "table")]
        x: Option<u32>,
    },
    /// Apply (1/s) p(x+(t-1)y, x-y) to a polynomial or to a code's enumerator.
    Transform {
        #[arg(long, conflicts_with = "code")]
        poly: Option<String>,
        #[arg(long, requires = "weight")]
        code: Option<PathBuf>,
        #[arg(long, value_parser = parse_kind)]
        weight: Option<WeightKind>,
        #[arg(long = "m", visible_alias = "q")]
        multiplier: u64,
        /// Defaults to |C| with --code and to 1 with --poly.
        #[arg(long)]
        scale: Option<u64>,
    },
    /// Check the identity for one code and multiplier.
    Check {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, value_parser = parse_kind)]
        weight: WeightKind,
        #[arg(long = "m", visible_alias = "q")]
        multiplier: u64,
        /// Report StructurallyImpossible without computing when t^scale != l.
        #[arg(long)]
        structural: bool,
    },
    /// Check the identity with the multiplier l^(1/scale).
    Shiromoto {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, value_parser = parse_kind)]
        weight: WeightKind,
    },
    /// List every l <= max admitting a multiplier.
    Scan {
        #[arg(long, value_parser = parse_kind)]
        weight: WeightKind,
        #[arg(long)]
        max: u32,
    },
    /// Find the first code (canonical order) for which the identity fails.
    Search {
        #[arg(long)]
        modulus: u32,
        #[arg(long, value_parser = parse_kind)]
        weight: WeightKind,
        #[arg(long = "m", visible_alias = "q")]
        multiplier: u64,
        #[arg(long = "max-length")]
        max_length: usize,
    },
    /// Report which transfer conditions hold for a code.
    Conditions {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, value_parser = parse_kind, default_value = "lee")]
        weight: WeightKind,
        #[arg(long = "m", visible_alias = "q")]
        multiplier: u64,
        /// Gray map table file to use instead of the canonical map (Lee only).
        #[arg(long)]
        gray: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Runtime(e)
    }
}

/// Runs one command. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let msg = e.to_string();
                    let first = msg.lines().next().unwrap_or("invalid arguments");
                    let _ = writeln!(err, "{first}");
                    EXIT_ERROR
                }
            };
        }
    };

    let mut buf = String::new();
    let code = match configure_budget(cli.budget).and_then(|_| dispatch(cli.command, &mut buf)) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_ERROR;
        }
        Err(Failure::Runtime(e)) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_ERROR;
        }
    };
    let _ = out.write_all(buf.as_bytes());
    code
}

fn configure_budget(flag: Option<u64>) -> std::result::Result<(), Failure> {
    let budget = match flag {
        Some(b) => b,
        None => match std::env::var(BUDGET_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("{BUDGET_ENV} must be a nonnegative integer, got {v:?}")))?,
            Err(_) => DEFAULT_BUDGET,
        },
    };
    set_enumeration_budget(budget);
    Ok(())
}

fn read_code(path: &Path) -> std::result::Result<LinearCode, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(LinearCode::parse_spec(&text)?)
}

fn modulus(ell: u32) -> std::result::Result<Modulus, Failure> {
    Modulus::new(ell).map_err(|e| Failure::Usage(e.to_string()))
}

fn verdict_exit(v: &IdentityVerdict) -> i32 {
    match v.status {
        Status::Holds => EXIT_OK,
        Status::Fails => EXIT_FAILS,
        Status::NotWellFormed | Status::StructurallyImpossible => EXIT_NOT_APPLICABLE,
    }
}

fn dispatch(command: Command, out: &mut String) -> std::result::Result<i32, Failure> {
    use std::fmt::Write as _;
    match command {
        Command::Enumerate { code } => {
            let code = read_code(&code)?;
            let words = code.codewords()?;
            for w in &words {
                let _ = writeln!(out, "{w}");
            }
            let _ = writeln!(out, "|C| = {}", words.len());
        }
        Command::Dual { code } => {
            let code = read_code(&code)?;
            out.push_str(&code.dual()?.to_spec_text());
        }
        Command::Wenum { code, weight } => {
            let code = read_code(&code)?;
            let poly = weight_enumerator(&code, weight)?;
            let _ = writeln!(out, "{poly}");
            let _ = writeln!(out, "|C| = {}", code.cardinality()?);
        }
        Command::Gray { modulus: ell, m } => {
            let modulus = modulus(ell)?;
            let field = make_field(m).map_err(|e| Failure::Usage(e.to_string()))?;
            let _ = write!(out, "{}", canonical_gray_map(modulus, field));
        }
        Command::Kraw { q, n, table: _, k, x } => {
            let params = KrawtchoukParams::new(n, q).map_err(|e| Failure::Usage(e.to_string()))?;
            match (k, x) {
                (Some(k), Some(x)) => {
                    let _ = writeln!(out, "{}", krawtchouk(k, x, params)?);
                }
                _ => {
                    for row in krawtchouk_matrix(params) {
                        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                        let _ = writeln!(out, "{}", cells.join("\t"));
                    }
                }
            }
        }
        Command::Transform {
            poly,
            code,
            weight,
            multiplier,
            scale,
        } => {
            let (p, default_scale) = match (poly, code, weight) {
                (Some(text), None, _) => (text.parse::<HomoPoly>()?, 1),
                (None, Some(path), Some(kind)) => {
                    let code = read_code(&path)?;
                    (weight_enumerator(&code, kind)?, code.cardinality()?)
                }
                _ => return Err(Failure::Usage("transform needs --poly or --code with --weight".into())),
            };
            let scale = scale.unwrap_or(default_scale);
            if scale == 0 {
                return Err(Failure::Usage("--scale must be positive".into()));
            }
            let _ = writeln!(out, "{}", p.substitute_transform(multiplier, scale));
        }
        Command::Check {
            code,
            weight,
            multiplier,
            structural,
        } => {
            let code = read_code(&code)?;
            let query = IdentityQuery::new(code, weight, multiplier).map_err(|e| Failure::Usage(e.to_string()))?;
            let verdict = match structural
                .then(|| structural_verdict(query.code().modulus(), weight, multiplier))
                .flatten()
            {
                Some(v) => v,
                None => check_identity(&query)?,
            };
            let _ = writeln!(out, "{verdict}");
            return Ok(verdict_exit(&verdict));
        }
        Command::Shiromoto { code, weight } => {
            let code = read_code(&code)?;
            if weight == WeightKind::Hamming {
                return Err(Failure::Usage(Error::HammingNotAllowed.to_string()));
            }
            let verdict = check_shiromoto_form(&code, weight)?;
            let _ = writeln!(out, "{verdict}");
            return Ok(verdict_exit(&verdict));
        }
        Command::Scan { weight, max } => {
            if max < 2 {
                return Err(Failure::Usage("--max must be at least 2".into()));
            }
            for (ell, t) in scan_existence(weight, max) {
                let _ = writeln!(out, "{ell} {t}");
            }
        }
        Command::Search {
            modulus: ell,
            weight,
            multiplier,
            max_length,
        } => {
            let modulus = modulus(ell)?;
            if weight == WeightKind::Hamming || multiplier < 2 {
                return Err(Failure::Usage("search needs --weight lee|euclidean and --m >= 2".into()));
            }
            match search_counterexample(modulus, weight, multiplier, max_length)? {
                Some((code, discrepancy)) => {
                    out.push_str(&code.to_spec_text());
                    let _ = writeln!(out, "discrepancy={discrepancy}");
                }
                None => {
                    let _ = writeln!(out, "counterexample=none");
                }
            }
        }
        Command::Conditions {
            code,
            weight,
            multiplier,
            gray,
        } => {
            let code = read_code(&code)?;
            let report = match (weight, gray) {
                (WeightKind::Lee, Some(path)) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
                    let field = make_field(multiplier).map_err(|e| Failure::Usage(e.to_string()))?;
                    let map = GrayMap::parse_table(code.modulus(), field, &text)?;
                    verify_conditions_with_map(&code, &map)?
                }
                (WeightKind::Lee, None) => verify_lee_conditions(&code, multiplier)?,
                (WeightKind::Euclidean, None) => verify_euclidean_conditions(&code, multiplier)?,
                _ => return Err(Failure::Usage("conditions needs lee (optionally with --gray) or euclidean".into())),
            };
            let _ = writeln!(
                out,
                "bijective_gray={} transform_is_enumerator={} dual_match={}",
                report.bijective_gray, report.transform_is_enumerator, report.dual_match
            );
        }
    }
    Ok(EXIT_OK)
}

/// Convenience wrapper returning `(exit code, stdout, stderr)`.
pub fn run_captured<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(args, &mut out, &mut err);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}
