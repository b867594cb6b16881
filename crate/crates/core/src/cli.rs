//! The `qstirling` command line.
//!
//! Every flag can also be set through an environment variable named
//! `QSTIRLING_<FLAG>`, e.g. `QSTIRLING_MAX_SIZE=12`.

use std::io::{self, BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::analysis::{run_claims, AnalysisError, Claim, ClaimOptions, VerificationReport};
use crate::bijections::{canonical_plane, phi, phi_inv, psi, psi_inv, BijectionError};
use crate::series::{eulerian, j_poly, k_quasi_poly, quasi_stirling_poly, stirling_poly, MPoly, Poly, SeriesError};
use crate::trees::{CompartmentedTree, KaryTree, TreeError, UnorderedTree};
use crate::words::{enumerate_k_quasi_stirling, enumerate_k_stirling, EnumerationBound, MultisetWord, WordError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

/// Settings shared by every command.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Args)]
pub struct Config {
    /// Largest multiset size `n * k` that may be enumerated.
    #[arg(long = "max-size", global = true, env = "QSTIRLING_MAX_SIZE", default_value_t = 14,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_enumeration_size: u64,
    /// Series truncation order. Claims use their own default when unset.
    #[arg(long = "order", global = true, env = "QSTIRLING_ORDER", value_parser = clap::value_parser!(u64).range(1..))]
    pub truncation_order: Option<u64>,
    #[arg(long = "format", global = true, env = "QSTIRLING_FORMAT", value_enum, default_value_t = OutputFormat::Text)]
    pub output_format: OutputFormat,
}

impl Config {
    pub fn bound(&self) -> EnumerationBound {
        EnumerationBound::new(self.max_enumeration_size as usize)
    }
}

#[derive(Debug, Parser)]
#[command(name = "qstirling", version, about = "Stirling and quasi-Stirling permutations, exactly")]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolyFamily {
    /// Eulerian polynomial `A_n(t)`.
    Eulerian,
    /// Descent polynomial of Stirling permutations.
    Stirling,
    /// Descent polynomial of quasi-Stirling permutations.
    Quasi,
    /// Joint `(asc, des, plat)` polynomial of k-quasi-Stirling permutations.
    Kquasi,
    /// Excedance polynomial of injections `[n - r] -> [n]`.
    Jnr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WordFamily {
    Quasi,
    Stirling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Map {
    /// Compartmented tree to word.
    Phi,
    /// Word to compartmented tree.
    PhiInv,
    /// Increasing k-ary tree to word.
    Psi,
    /// Word to increasing k-ary tree.
    PsiInv,
    /// Unordered tree to its canonical plane tree.
    Canonical,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a generating polynomial.
    Poly {
        family: PolyFamily,
        n: usize,
        #[arg(long, env = "QSTIRLING_K", default_value_t = 2)]
        k: usize,
        #[arg(long, env = "QSTIRLING_R")]
        r: Option<usize>,
    },
    /// Stream every word of a family, one per line.
    Enumerate {
        family: WordFamily,
        n: usize,
        #[arg(long, env = "QSTIRLING_K", default_value_t = 2)]
        k: usize,
        /// Append the asc, des and plat columns.
        #[arg(long, env = "QSTIRLING_STATS")]
        stats: bool,
    },
    /// Check claims and print one JSON report per parameter choice.
    Verify {
        /// A claim name, or `all`.
        claim: String,
        #[arg(long, env = "QSTIRLING_N")]
        n: Option<usize>,
        #[arg(long, env = "QSTIRLING_K")]
        k: Option<usize>,
        /// With `all`, also check the reference tables.
        #[arg(long)]
        paper_tables: bool,
    },
    /// Apply a bijection to a tree or word given inline or on standard input.
    Bijection {
        map: Map,
        input: Option<String>,
        /// Multiplicity for `phi` and `psi` inputs.
        #[arg(long, env = "QSTIRLING_K", default_value_t = 2)]
        k: usize,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

macro_rules! usage_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Usage(e.to_string())
            }
        }
    )*};
}
usage_from!(SeriesError, WordError, TreeError, BijectionError, AnalysisError);

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

/// Runs a parsed command. Returns `false` when a verification failed.
pub fn run(cli: &Cli, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<bool, CliError> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Poly { family, n, k, r } => {
            poly(cfg, *family, *n, *k, *r, out)?;
            Ok(true)
        }
        Command::Enumerate { family, n, k, stats } => {
            enumerate(cfg, *family, *n, *k, *stats, out)?;
            Ok(true)
        }
        Command::Verify { claim, n, k, paper_tables } => verify(cfg, claim, *n, *k, *paper_tables, out),
        Command::Bijection { map, input: arg, k } => {
            let text = match arg {
                Some(s) => s.clone(),
                None => {
                    let mut s = String::new();
                    input.read_to_string(&mut s)?;
                    s
                }
            };
            bijection(cfg, *map, text.trim(), *k, out)?;
            Ok(true)
        }
    }
}

enum Computed {
    Uni(Poly),
    Multi(MPoly),
}

fn poly(
    cfg: &Config,
    family: PolyFamily,
    n: usize,
    k: usize,
    r: Option<usize>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    if r.is_some() && family != PolyFamily::Jnr {
        return Err(CliError::Usage("--r only applies to jnr".into()));
    }
    let p = match family {
        PolyFamily::Eulerian => Computed::Uni(eulerian(n)),
        PolyFamily::Stirling => Computed::Uni(stirling_poly(n)?),
        PolyFamily::Quasi => Computed::Uni(quasi_stirling_poly(n)?),
        PolyFamily::Kquasi => Computed::Multi(k_quasi_poly(n, k)?),
        PolyFamily::Jnr => {
            let r = r.ok_or_else(|| CliError::Usage("jnr needs --r".into()))?;
            Computed::Uni(j_poly(n, r)?)
        }
    };
    match (cfg.output_format, &p) {
        (OutputFormat::Text, Computed::Uni(p)) => writeln!(out, "{p}")?,
        (OutputFormat::Text, Computed::Multi(p)) => writeln!(out, "{p}")?,
        (OutputFormat::Csv, Computed::Uni(p)) => {
            writeln!(out, "degree,coefficient")?;
            for (d, c) in p.coeffs().iter().enumerate() {
                writeln!(out, "{d},{c}")?;
            }
        }
        (OutputFormat::Csv, Computed::Multi(p)) => {
            writeln!(out, "q,t,u,coefficient")?;
            for (e, c) in p.terms() {
                writeln!(out, "{},{},{},{c}", e[0], e[1], e[2])?;
            }
        }
        (OutputFormat::Json, Computed::Uni(p)) => {
            let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
            writeln!(out, "{}", json!({"polynomial": p.to_string(), "coefficients": coeffs}))?;
        }
        (OutputFormat::Json, Computed::Multi(p)) => {
            let terms: Vec<Value> =
                p.terms().map(|(e, c)| json!({"exponent": e, "coefficient": c.to_string()})).collect();
            writeln!(out, "{}", json!({"polynomial": p.to_string(), "terms": terms}))?;
        }
    }
    Ok(())
}

fn enumerate(
    cfg: &Config,
    family: WordFamily,
    n: usize,
    k: usize,
    stats: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let words: Box<dyn Iterator<Item = MultisetWord>> = match family {
        WordFamily::Quasi => Box::new(enumerate_k_quasi_stirling(n, k, cfg.bound())?),
        WordFamily::Stirling => Box::new(enumerate_k_stirling(n, k, cfg.bound())?),
    };
    let mut out = io::BufWriter::new(out);
    if cfg.output_format == OutputFormat::Csv {
        writeln!(out, "{}", if stats { "word,asc,des,plat" } else { "word" })?;
    }
    for w in words {
        let s = w.statistics();
        match cfg.output_format {
            OutputFormat::Text if stats => writeln!(out, "{w}\t{}\t{}\t{}", s.asc, s.des, s.plat)?,
            OutputFormat::Text => writeln!(out, "{w}")?,
            OutputFormat::Csv if stats => writeln!(out, "\"{w}\",{},{},{}", s.asc, s.des, s.plat)?,
            OutputFormat::Csv => writeln!(out, "\"{w}\"")?,
            OutputFormat::Json if stats => {
                writeln!(out, "{}", json!({"word": w.to_string(), "asc": s.asc, "des": s.des, "plat": s.plat}))?
            }
            OutputFormat::Json => writeln!(out, "{}", json!({"word": w.to_string()}))?,
        }
    }
    out.flush()?;
    Ok(())
}

fn verify(
    cfg: &Config,
    claim: &str,
    n: Option<usize>,
    k: Option<usize>,
    paper_tables: bool,
    out: &mut dyn Write,
) -> Result<bool, CliError> {
    let claims = if claim == "all" { Claim::all(paper_tables) } else { vec![claim.parse::<Claim>()?] };
    let opts = ClaimOptions { n, k, order: cfg.truncation_order.map(|o| o as usize), bound: cfg.bound() };
    let reports = run_claims(&claims, &opts)?;
    write_reports(cfg.output_format, &reports, out)?;
    Ok(reports.iter().all(VerificationReport::passed))
}

fn write_reports(format: OutputFormat, reports: &[VerificationReport], out: &mut dyn Write) -> io::Result<()> {
    let status = |r: &VerificationReport| if r.passed() { "pass" } else { "fail" };
    match format {
        OutputFormat::Json => {
            for r in reports {
                writeln!(out, "{}", serde_json::to_string(r).expect("plain data"))?;
            }
        }
        OutputFormat::Text => {
            for r in reports {
                write!(out, "{} {} {}", status(r), r.claim, r.parameters)?;
                if let Some(cx) = &r.first_counterexample {
                    write!(out, " counterexample={cx}")?;
                }
                writeln!(out)?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "claim,status,parameters")?;
            for r in reports {
                let params = r.parameters.to_string().replace('"', "\"\"");
                writeln!(out, "{},{},\"{params}\"", r.claim, status(r))?;
            }
        }
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    if format == OutputFormat::Text {
        writeln!(out, "{passed}/{} passed", reports.len())?;
    }
    Ok(())
}

fn bijection(cfg: &Config, map: Map, input: &str, k: usize, out: &mut dyn Write) -> Result<(), CliError> {
    let word = || input.parse::<MultisetWord>();
    let output = match map {
        Map::Phi => phi(&CompartmentedTree::parse(input, k)?).to_string(),
        Map::PhiInv => phi_inv(&word()?)?.to_string(),
        Map::Psi => psi(&KaryTree::parse(input, k)?).to_string(),
        Map::PsiInv => psi_inv(&word()?)?.to_string(),
        Map::Canonical => canonical_plane(&input.parse::<UnorderedTree>()?).to_string(),
    };
    match cfg.output_format {
        OutputFormat::Text => writeln!(out, "{output}")?,
        OutputFormat::Csv => writeln!(out, "input,output\n\"{input}\",\"{output}\"")?,
        OutputFormat::Json => {
            let name = map.to_possible_value().expect("no skipped variants").get_name().to_string();
            writeln!(out, "{}", json!({"map": name, "input": input, "output": output}))?
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (Result<bool, CliError>, String) {
        let cli = Cli::try_parse_from(std::iter::once("qstirling").chain(args.iter().copied())).unwrap();
        let mut out = Vec::new();
        let res = run(&cli, &mut io::empty(), &mut out);
        (res, String::from_utf8(out).unwrap())
    }

    #[test]
    fn polynomials() {
        assert_eq!(call(&["poly", "quasi", "4"]).1, "1*t + 39*t^2 + 171*t^3 + 125*t^4\n");
        assert_eq!(call(&["poly", "eulerian", "1"]).1, "1*t\n");
        assert_eq!(call(&["poly", "jnr", "4", "--r", "3"]).1, "1 + 3*t\n");
        assert!(matches!(call(&["poly", "jnr", "4"]).0, Err(CliError::Usage(_))));
        assert!(matches!(call(&["poly", "quasi", "4", "--r", "1"]).0, Err(CliError::Usage(_))));
        assert_eq!(call(&["poly", "quasi", "2", "--format", "csv"]).1, "degree,coefficient\n0,0\n1,1\n2,3\n");
    }

    #[test]
    fn enumeration() {
        assert_eq!(call(&["enumerate", "quasi", "2", "--k", "2"]).1.lines().count(), 4);
        assert_eq!(call(&["enumerate", "stirling", "2"]).1.lines().count(), 3);
        assert_eq!(call(&["enumerate", "quasi", "0"]).1, "\n");
        assert_eq!(call(&["enumerate", "quasi", "1", "--stats"]).1, "1,1\t1\t1\t1\n");
        assert!(matches!(call(&["enumerate", "quasi", "8"]).0, Err(CliError::Usage(_))));
    }

    #[test]
    fn verification() {
        let (res, out) = call(&["verify", "maxdes", "--n", "3", "--format", "json"]);
        assert!(res.unwrap());
        assert!(out.lines().last().unwrap().contains("\"canonical_images\":\"16\""));
        assert!(matches!(call(&["verify", "bogus"]).0, Err(CliError::Usage(_))));
    }

    #[test]
    fn bijections() {
        let (_, out) = call(&["bijection", "phi", "(4(1),6,3(7,5(8),2))"]);
        assert_eq!(out, "4,1,1,4,6,6,3,7,7,5,8,8,5,2,2,3\n");
        let (_, back) = call(&["bijection", "phi-inv", out.trim()]);
        assert_eq!(back, "(4(1),6,3(7,5(8),2))\n");
        let (res, _) = call(&["bijection", "phi-inv", "1,2,1,2"]);
        let msg = res.unwrap_err().to_string();
        assert!(msg.contains("(1, 2, 3, 4)"), "{msg}");
    }
}
