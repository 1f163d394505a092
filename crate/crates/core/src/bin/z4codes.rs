use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use z4codes::classify::classify;
use z4codes::constructions::{equivalence_invariant_match, plotkin_double, quadruple, recurrent_build};
use z4codes::family::{family_code, EXPLICIT_CAP};
use z4codes::invariants::{
    invariant_report, project, InvariantOptions, Parity, RankStrategy,
};
use z4codes::io::{write_code, CodeFileHeader, FORMAT_HEADER};
use z4codes::matrix::MAX_K;
use z4codes::verify::{verify_suite, VerifyConfig};
use z4codes::{binary_image, build_a, hadamard_code, Alphabet, Family, FamilyParams, Result};

#[derive(Parser)]
#[command(name = "z4codes", version, about = "Z4-linear Hadamard and extended perfect codes")]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
}

#[derive(Args, Clone, Copy)]
struct ParamArgs {
    #[arg(long)]
    r1: u32,
    #[arg(long)]
    r2: u32,
}

impl ParamArgs {
    fn params(self) -> Result<FamilyParams> {
        FamilyParams::new(self.r1, self.r2)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Even,
    Odd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Double,
    Quadruple,
    Recurrent,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the parity check matrix A^{r1,r2}.
    Matrix {
        #[command(flatten)]
        p: ParamArgs,
    },
    /// List the codewords of H^{r1,r2} or C^{r1,r2}.
    Code {
        #[arg(long, default_value = "H")]
        family: Family,
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, default_value = "binary")]
        alphabet: Alphabet,
    },
    /// Invariants of the Gray image. With no selection flags, everything feasible.
    Invariants {
        #[arg(long, default_value = "H")]
        family: Family,
        #[command(flatten)]
        p: ParamArgs,
        /// Rank, optionally naming the strategy.
        #[arg(long, num_args = 0..=1, default_missing_value = "generator_span")]
        rank: Option<RankStrategy>,
        #[arg(long)]
        kernel: bool,
        #[arg(long)]
        min_distance: bool,
        #[arg(long)]
        weights: bool,
        #[arg(long)]
        linear: bool,
    },
    /// Even or odd coordinate projection of the binary image.
    Project {
        #[arg(long, default_value = "C")]
        family: Family,
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, value_enum)]
        side: Side,
    },
    /// Apply a recurrent construction to H^{r1,r2} (or build it, for `recurrent`).
    Construct {
        #[arg(long, value_enum)]
        op: Op,
        #[command(flatten)]
        p: ParamArgs,
    },
    /// Equivalence classes by kernel size (H) or rank (C).
    Classify {
        /// One family only; both when omitted.
        #[arg(long)]
        family: Option<Family>,
        #[arg(long, conflicts_with = "max_k")]
        k: Option<u32>,
        #[arg(long)]
        max_k: Option<u32>,
    },
    /// Run the verification suite; exits nonzero on any failure.
    Verify {
        #[arg(long, default_value_t = MAX_K)]
        max_k: u32,
        /// Include the 2^26-word enumerations.
        #[arg(long)]
        slow: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    let Format::Text = cli.format;
    let mut buf = Vec::new();
    writeln!(buf, "{FORMAT_HEADER}")?;
    let ok = dispatch(cli.cmd, &mut buf)?;
    match &cli.out {
        Some(path) => File::create(path)?.write_all(&buf)?,
        None => io::stdout().lock().write_all(&buf)?,
    }
    Ok(ok)
}

fn dispatch<W: Write>(cmd: Cmd, out: &mut W) -> Result<bool> {
    match cmd {
        Cmd::Matrix { p } => {
            let p = p.params()?;
            write!(out, "{}", build_a(p.r1, p.r2)?.to_text())?;
        }
        Cmd::Code { family, p, alphabet } => {
            let params = p.params()?;
            let code = family_code(family, params)?;
            code.ensure_enumerable(EXPLICIT_CAP)?;
            let header = CodeFileHeader {
                family,
                params,
                n: code.n(),
                alphabet,
            };
            match alphabet {
                Alphabet::Quaternary => write_code(out, &header, code.codewords())?,
                Alphabet::Binary => write_code(out, &header, binary_image(&code)?.iter())?,
            }
        }
        Cmd::Invariants {
            family,
            p,
            rank,
            kernel,
            min_distance,
            weights,
            linear,
        } => {
            let params = p.params()?;
            let code = family_code(family, params)?;
            let selected = rank.is_some() || kernel || min_distance || weights || linear;
            let opts = if selected {
                InvariantOptions {
                    min_distance,
                    kernel,
                    rank,
                    weight_distribution: weights,
                }
            } else {
                InvariantOptions::all_feasible(&code)
            };
            let report = invariant_report(&code, opts)?;
            writeln!(out, "# invariants family={family} r1={} r2={}", params.r1, params.r2)?;
            for (key, value) in report.to_pairs() {
                let shown = match key {
                    "length" | "cardinality" => !selected,
                    "linear" => !selected || linear,
                    _ => true,
                };
                if shown {
                    writeln!(out, "{key}={value}")?;
                }
            }
        }
        Cmd::Project { family, p, side } => {
            let params = p.params()?;
            let code = binary_image(&family_code(family, params)?)?;
            let parity = match side {
                Side::Even => Parity::Even,
                Side::Odd => Parity::Odd,
            };
            let proj = project(&code, parity)?;
            let side = match side {
                Side::Even => "even",
                Side::Odd => "odd",
            };
            writeln!(
                out,
                "# projection family={family} r1={} r2={} side={side} len={} words={}",
                params.r1,
                params.r2,
                proj.len(),
                proj.cardinality()
            )?;
            for w in proj.iter() {
                writeln!(out, "{w}")?;
            }
        }
        Cmd::Construct { op, p } => {
            let params = p.params()?;
            let (name, built, target) = match op {
                Op::Double => (
                    "double",
                    plotkin_double(&hadamard_code(params)?)?,
                    FamilyParams::new(params.r1, params.r2 + 1),
                ),
                Op::Quadruple => (
                    "quadruple",
                    quadruple(&hadamard_code(params)?)?,
                    FamilyParams::new(params.r1 + 1, params.r2),
                ),
                Op::Recurrent => ("recurrent", recurrent_build(params)?, Ok(params)),
            };
            writeln!(
                out,
                "# construct op={name} r1={} r2={} n={}",
                params.r1,
                params.r2,
                built.n()
            )?;
            write!(out, "{}", built.generator().to_text())?;
            // compare against the family member it should be equivalent to
            if let Ok(t) = target {
                let direct = hadamard_code(t)?;
                writeln!(out, "target=H({},{})", t.r1, t.r2)?;
                writeln!(out, "same_set={}", built.same_set(&direct)?)?;
                writeln!(out, "{}", equivalence_invariant_match(&built, &direct)?)?;
            }
        }
        Cmd::Classify { family, k, max_k } => {
            let ks: Vec<u32> = match (k, max_k) {
                (Some(k), _) => vec![k],
                (None, m) => (1..=m.unwrap_or(MAX_K)).collect(),
            };
            let families = match family {
                Some(f) => vec![f],
                None => vec![Family::Hadamard, Family::Perfect],
            };
            for f in families {
                let min = match f {
                    Family::Hadamard => 3,
                    Family::Perfect => 4,
                };
                for &k in &ks {
                    if k < min && ks.len() > 1 {
                        continue;
                    }
                    write!(out, "{}", classify(f, k)?)?;
                }
            }
        }
        Cmd::Verify { max_k, slow } => {
            let report = verify_suite(&VerifyConfig::new(max_k, slow))?;
            // the suite text carries its own header
            let text = report.to_text();
            let body = text.strip_prefix(FORMAT_HEADER).unwrap_or(&text).trim_start();
            write!(out, "{body}")?;
            return Ok(report.passed());
        }
    }
    Ok(true)
}
