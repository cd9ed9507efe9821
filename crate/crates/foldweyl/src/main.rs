use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use foldweyl::drinfeld::{DrinfeldTuple, Factor, TwistedDrinfeldTuple};
use foldweyl::exact::{FieldElement, Rat};
use foldweyl::folding::{standard_fold, untwisted_fold, FoldedAlgebra};
use foldweyl::looptrunc::{verify_crt, TruncatedAlgebra};
use foldweyl::oracle::{twisted_weyl_oracle, untwisted_weyl_oracle, OracleError, OracleReport};
use foldweyl::suite::{run as run_suite, Level};
use foldweyl::rootdata::{CartanDatum, TypeLetter, Weight};
use foldweyl::weylchar::{
    twisted_weyl_character, untwisted_weyl_character, WeylCharError,
};

/// exact computations with twisted loop algebras obtained by diagram folding
#[derive(Parser)]
#[command(name = "foldweyl", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct AlgArgs {
    /// simple type of the simply laced parent (A, D or E)
    #[arg(long = "type")]
    letter: char,
    #[arg(long)]
    rank: usize,
    /// order of the diagram automorphism; 1 means untwisted
    #[arg(long, alias = "m", default_value_t = 1)]
    order: u8,
}

#[derive(Args)]
struct TupleArgs {
    /// Drinfeld factor node:param[:mult]; param accepts p/q with optional
    /// z^k* or s* prefixes for the root of unity and sqrt(2)
    #[arg(long = "factor", required = true)]
    factors: Vec<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// fold a simply laced algebra and report the fixed and twisted pieces
    Fold(AlgArgs),
    /// dimensions of a truncated (twisted) loop algebra
    Truncate {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        points: Vec<String>,
        #[arg(long)]
        power: usize,
    },
    /// check the Chinese-remainder splitting of a multi-point truncation
    Crt {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        points: Vec<String>,
        #[arg(long)]
        power: usize,
    },
    /// fiber of a twisted Drinfeld tuple under restriction of untwisted ones
    Fiber {
        #[command(flatten)]
        alg: AlgArgs,
        #[command(flatten)]
        tuple: TupleArgs,
        #[arg(long, default_value_t = 64)]
        cap: usize,
    },
    /// canonical form of a twisted Drinfeld tuple
    Reduce {
        #[command(flatten)]
        alg: AlgArgs,
        #[command(flatten)]
        tuple: TupleArgs,
    },
    /// split a twisted tuple into its single-orbit standard blocks
    Decompose {
        #[command(flatten)]
        alg: AlgArgs,
        #[command(flatten)]
        tuple: TupleArgs,
    },
    /// Weyl module character by the closed formula
    Weyl {
        #[command(flatten)]
        alg: AlgArgs,
        #[command(flatten)]
        tuple: TupleArgs,
        /// also run the brute-force oracle and embed an agreement flag
        #[arg(long)]
        oracle: bool,
    },
    /// Weyl module character by the brute-force cyclic module
    Oracle {
        #[command(flatten)]
        alg: AlgArgs,
        #[command(flatten)]
        tuple: TupleArgs,
    },
    /// run the named verification checks
    Verify {
        /// quick sticks to type A instances; full adds both D4 twists and E6
        #[arg(long, default_value = "quick")]
        level: String,
    },
}

struct CliError {
    code: u8,
    msg: String,
}

impl CliError {
    fn input(msg: impl Into<String>) -> Self {
        CliError { code: 2, msg: msg.into() }
    }
}

impl From<WeylCharError> for CliError {
    fn from(e: WeylCharError) -> Self {
        let code = match &e {
            WeylCharError::TableGap { .. } => 3,
            _ => 2,
        };
        CliError { code, msg: e.to_string() }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        let code = match &e {
            OracleError::ResourceGuard { .. } => 4,
            _ => 2,
        };
        CliError { code, msg: e.to_string() }
    }
}

fn letter_of(c: char) -> Result<TypeLetter, CliError> {
    match c.to_ascii_uppercase() {
        'A' => Ok(TypeLetter::A),
        'B' => Ok(TypeLetter::B),
        'C' => Ok(TypeLetter::C),
        'D' => Ok(TypeLetter::D),
        'E' => Ok(TypeLetter::E),
        'F' => Ok(TypeLetter::F),
        'G' => Ok(TypeLetter::G),
        _ => Err(CliError::input(format!("unknown type letter {c}"))),
    }
}

/// p/q with optional z^k* (root of unity) and s* (sqrt 2) prefixes
fn parse_param(tag: u8, s: &str) -> Result<FieldElement, CliError> {
    let mut acc = FieldElement::one(tag);
    for part in s.split('*') {
        let part = part.trim();
        if part == "s" {
            acc = acc.mul(&FieldElement::sqrt2(tag));
        } else if part == "z" {
            acc = acc.mul(&FieldElement::zeta(tag));
        } else if let Some(k) = part.strip_prefix("z^") {
            let k: i64 = k
                .parse()
                .map_err(|_| CliError::input(format!("bad exponent in {s}")))?;
            acc = acc.mul(
                &FieldElement::zeta(tag)
                    .pow(k)
                    .map_err(|e| CliError::input(e.to_string()))?,
            );
        } else {
            let r: Rat = part
                .parse()
                .map_err(|_| CliError::input(format!("bad rational {part}")))?;
            acc = acc.mul(&FieldElement::from_rat(tag, r));
        }
    }
    Ok(acc)
}

fn parse_factor(tag: u8, s: &str) -> Result<Factor, CliError> {
    let mut it = s.splitn(3, ':');
    let node = it
        .next()
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| CliError::input(format!("bad factor {s}")))?;
    let param = parse_param(tag, it.next().ok_or_else(|| CliError::input(format!("bad factor {s}")))?)?;
    let mult = match it.next() {
        Some(v) => v
            .parse()
            .map_err(|_| CliError::input(format!("bad multiplicity in {s}")))?,
        None => 1,
    };
    Ok(Factor { node, param, mult })
}

fn get_fold(alg: &AlgArgs) -> Result<FoldedAlgebra, CliError> {
    let letter = letter_of(alg.letter)?;
    if alg.order == 1 {
        let datum =
            CartanDatum::new(letter, alg.rank).map_err(|e| CliError::input(e.to_string()))?;
        untwisted_fold(&datum, 1).map_err(|e| CliError::input(e.to_string()))
    } else {
        standard_fold(letter, alg.rank, alg.order).map_err(|e| CliError::input(e.to_string()))
    }
}

fn twisted_tuple(
    fold: &FoldedAlgebra,
    tuple: &TupleArgs,
) -> Result<TwistedDrinfeldTuple, CliError> {
    let factors = tuple
        .factors
        .iter()
        .map(|s| parse_factor(fold.tag(), s))
        .collect::<Result<Vec<_>, _>>()?;
    TwistedDrinfeldTuple::new(fold, factors).map_err(|e| CliError::input(e.to_string()))
}

fn untwisted_tuple(rank: usize, tuple: &TupleArgs) -> Result<DrinfeldTuple, CliError> {
    let factors = tuple
        .factors
        .iter()
        .map(|s| parse_factor(1, s))
        .collect::<Result<Vec<_>, _>>()?;
    DrinfeldTuple::new(1, rank, factors).map_err(|e| CliError::input(e.to_string()))
}

#[derive(Serialize)]
struct OracleOut {
    dimension: u64,
    character: Vec<(Weight, u64)>,
    n_used: usize,
    stabilized: bool,
}

impl From<OracleReport> for OracleOut {
    fn from(r: OracleReport) -> Self {
        OracleOut {
            dimension: r.character.dimension(),
            character: r.character.0.into_iter().collect(),
            n_used: r.n_used,
            stabilized: r.stabilized,
        }
    }
}

fn emit<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.cmd {
        Cmd::Fold(alg) => {
            let fold = get_fold(&alg)?;
            #[derive(Serialize)]
            struct FoldOut {
                parent: String,
                order: u8,
                g0: String,
                special_node: Option<usize>,
                dims: Vec<usize>,
                g1_hw: Option<Weight>,
            }
            let g1 = if fold.m > 1 {
                Some(
                    fold.g1_highest_weight()
                        .map_err(|e| CliError::input(e.to_string()))?,
                )
            } else {
                None
            };
            emit(&FoldOut {
                parent: fold.parent.rs.datum.name(),
                order: fold.m,
                g0: fold.g0.name(),
                special_node: fold.special,
                dims: fold.eigenspace_dims(),
                g1_hw: g1,
            });
            Ok(0)
        }
        Cmd::Truncate { alg, points, power } => {
            let fold = get_fold(&alg)?;
            let pts = points
                .iter()
                .map(|s| parse_param(fold.tag(), s))
                .collect::<Result<Vec<_>, _>>()?;
            let trunc = TruncatedAlgebra::new(fold, &pts, power)
                .map_err(|e| CliError::input(e.to_string()))?;
            #[derive(Serialize)]
            struct TruncOut {
                dimension: usize,
                points: Vec<FieldElement>,
                power: usize,
            }
            emit(&TruncOut {
                dimension: trunc.dim(),
                points: trunc.points.clone(),
                power: trunc.power,
            });
            Ok(0)
        }
        Cmd::Crt { alg, points, power } => {
            let fold = get_fold(&alg)?;
            let pts = points
                .iter()
                .map(|s| parse_param(fold.tag(), s))
                .collect::<Result<Vec<_>, _>>()?;
            let whole = TruncatedAlgebra::new(fold.clone(), &pts, power)
                .map_err(|e| CliError::input(e.to_string()))?;
            let parts = pts
                .iter()
                .map(|p| TruncatedAlgebra::new(fold.clone(), std::slice::from_ref(p), power))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| CliError::input(e.to_string()))?;
            let ok = verify_crt(&whole, &parts);
            println!("crt isomorphism: {}", if ok { "ok" } else { "FAILED" });
            Ok(if ok { 0 } else { 1 })
        }
        Cmd::Fiber { alg, tuple, cap } => {
            let fold = get_fold(&alg)?;
            let pi = twisted_tuple(&fold, &tuple)?;
            let fiber = pi
                .fiber(&fold, cap)
                .map_err(|e| CliError { code: 4, msg: e.to_string() })?;
            let out: Vec<Vec<Factor>> = fiber.into_iter().map(|t| t.factors).collect();
            emit(&out);
            Ok(0)
        }
        Cmd::Reduce { alg, tuple } => {
            let fold = get_fold(&alg)?;
            let pi = twisted_tuple(&fold, &tuple)?;
            emit(&pi.factors);
            Ok(0)
        }
        Cmd::Decompose { alg, tuple } => {
            let fold = get_fold(&alg)?;
            let pi = twisted_tuple(&fold, &tuple)?;
            #[derive(Serialize)]
            struct Block {
                param: FieldElement,
                weights: Vec<Weight>,
            }
            let blocks: Vec<Block> = pi
                .standard_decomposition(&fold)
                .into_iter()
                .map(|(param, weights)| Block { param, weights })
                .collect();
            emit(&blocks);
            Ok(0)
        }
        Cmd::Weyl { alg, tuple, oracle } => {
            let fold = get_fold(&alg)?;
            let (ch, report) = if fold.m == 1 {
                let pi = untwisted_tuple(alg.rank, &tuple)?;
                let ch = untwisted_weyl_character(&fold.parent.rs.datum, &pi)?;
                let rep = if oracle {
                    Some(untwisted_weyl_oracle(&fold, &pi)?)
                } else {
                    None
                };
                (ch, rep)
            } else {
                let pi = twisted_tuple(&fold, &tuple)?;
                let ch = twisted_weyl_character(&fold, &pi)?;
                let rep = if oracle {
                    Some(twisted_weyl_oracle(&fold, &pi)?)
                } else {
                    None
                };
                (ch, rep)
            };
            #[derive(Serialize)]
            struct WeylOut {
                dimension: u64,
                character: Vec<(Weight, u64)>,
                #[serde(skip_serializing_if = "Option::is_none")]
                agree: Option<bool>,
            }
            let agree = report.as_ref().map(|r| r.character == ch);
            emit(&WeylOut {
                dimension: ch.dimension(),
                character: ch.0.into_iter().collect(),
                agree,
            });
            Ok(if agree == Some(false) { 1 } else { 0 })
        }
        Cmd::Oracle { alg, tuple } => {
            let fold = get_fold(&alg)?;
            let report = if fold.m == 1 {
                let pi = untwisted_tuple(alg.rank, &tuple)?;
                untwisted_weyl_oracle(&fold, &pi)?
            } else {
                let pi = twisted_tuple(&fold, &tuple)?;
                twisted_weyl_oracle(&fold, &pi)?
            };
            emit(&OracleOut::from(report));
            Ok(0)
        }
        Cmd::Verify { level } => {
            let level = match level.as_str() {
                "quick" => Level::Quick,
                "full" => Level::Full,
                other => return Err(CliError::input(format!("unknown level {other}"))),
            };
            let results = run_suite(level);
            let mut ok = true;
            for r in &results {
                println!("{}: {} ({})", r.name, if r.passed { "pass" } else { "FAIL" }, r.detail);
                ok &= r.passed;
            }
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}
