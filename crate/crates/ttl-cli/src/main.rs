//! `ttl` — exact computation and certification of the invariants that
//! classify 2-simple complex tori.

use clap::{Args, Parser, Subcommand};
use serde_json::Value;
use std::io::Read;
use std::process::ExitCode;

use ttl_cli::parser::parse_poly;
use ttl_cli::report::{self, render_text, to_stable_json, CliConfig, CliError};
use ttl_cli::verify::verify_report;
use ttl_core::torus::H2Case;

#[derive(Parser)]
#[command(
    name = "ttl",
    about = "Exact invariants of 2-simple complex tori: signatures, transitivity \
             certificates, Hodge multiplicities, H² decompositions, and Lie-type tables",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit the report as JSON (default).
    #[arg(long, global = true)]
    json: bool,
    /// Emit the report as indented text instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    text: bool,
    /// Degree bound for transitivity reports.
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    /// Re-verify the emitted report before printing it.
    #[arg(long, global = true)]
    verify: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a number field: signature, irreducibility, transitivity.
    Analyze(AnalyzeArgs),
    /// Synthesize a certified field with a prescribed signature or rank.
    Synthesize(SynthesizeArgs),
    /// Enumerate Hodge multiplicity vectors for (g, degree, r, s).
    Hodge(HodgeArgs),
    /// Orbit decomposition of H² under a permutation action.
    H2(H2Args),
    /// Minuscule tables, Weyl dimensions, plethysm scans, spectra.
    Lie(LieArgs),
    /// Brute-force permutation group profiles.
    Permgrp(PermgrpArgs),
    /// Re-verify a previously emitted report (file path or - for stdin).
    Verify(VerifyArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Defining polynomial, e.g. "x^3 - 2".
    poly: String,
    /// Torus dimension for the classification step.
    #[arg(long)]
    g: Option<usize>,
}

#[derive(Args)]
struct SynthesizeArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    g: Option<usize>,
    #[arg(long)]
    d: Option<i64>,
}

#[derive(Args)]
struct HodgeArgs {
    #[arg(long)]
    g: usize,
    #[arg(long)]
    degree: usize,
    #[arg(long, default_value_t = 0)]
    r: usize,
    #[arg(long, default_value_t = 0)]
    s: usize,
}

#[derive(Args)]
struct H2Args {
    #[arg(long)]
    g: usize,
    /// degree_g or degree_2g.
    #[arg(long)]
    case: String,
    /// Generators in cycle notation, comma separated: "(0 1 2),(0 1)".
    #[arg(long)]
    group: String,
}

#[derive(Args)]
struct PermgrpArgs {
    /// Affine half group on F_q (q prime, q ≡ 3 mod 4).
    #[arg(long)]
    affine: Option<u64>,
    /// Generators in cycle notation, comma separated.
    #[arg(long)]
    generators: Option<String>,
    /// Point count for --generators.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct LieArgs {
    #[command(subcommand)]
    action: LieAction,
}

#[derive(Subcommand)]
enum LieAction {
    /// Minuscule weights and dimensions for a classical type.
    Minuscule {
        #[arg(long = "type")]
        type_label: String,
        #[arg(long)]
        rank: usize,
    },
    /// Weyl dimension of a type-A dominant weight.
    Weyl {
        #[arg(long)]
        rank: usize,
        /// Fundamental coefficients, comma separated: "0,1,0,1,0".
        #[arg(long)]
        weight: String,
    },
    /// Scan the exterior-square plethysm for 2 ≤ m ≤ m_max.
    Wedge2Scan {
        #[arg(long)]
        m_max: usize,
    },
    /// Candidate Hodge-group types for a 2g-dimensional module.
    BorTabs {
        #[arg(long)]
        g: usize,
        /// Skip the perfect-power guard.
        #[arg(long)]
        relax_power_guard: bool,
    },
    /// Subset-sum spectrum with canonical eigenvalues a = q, b = −p.
    Spectrum {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        j: usize,
    },
    /// Two-eigenvalue balance check.
    Balanced {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        j: usize,
    },
    /// Exterior square of the standard symplectic module.
    SpWedge2 {
        #[arg(long)]
        g: usize,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Report path, or - for stdin.
    path: String,
}

fn cli_config(cli: &Cli) -> CliConfig {
    let mut config = CliConfig::default();
    if let Some(d) = cli.max_degree {
        config.max_degree = d;
    }
    if let Ok(budget) = std::env::var("TTL_PRIME_BUDGET") {
        if let Ok(budget) = budget.parse::<usize>() {
            if budget > 0 {
                config.prime_budget = budget;
            }
        }
    }
    config
}

fn build_report(cli: &Cli) -> Result<Value, CliError> {
    let config = cli_config(cli);
    match &cli.command {
        Command::Analyze(args) => {
            let poly = parse_poly(&args.poly)?;
            report::report_analyze(&poly, args.g, &config)
        }
        Command::Synthesize(args) => match (args.n, args.r, args.s, args.g, args.d) {
            (Some(n), Some(r), Some(s), None, None) => {
                report::report_synthesize_nrs(n, r, s, &config)
            }
            (None, None, None, Some(g), Some(d)) => report::report_synthesize_gd(g, d, &config),
            _ => Err(CliError::Usage("give either --n/--r/--s or --g/--d".into())),
        },
        Command::Hodge(args) => report::report_hodge(args.g, args.degree, args.r, args.s),
        Command::H2(args) => {
            let case = match args.case.as_str() {
                "degree_g" => H2Case::DegreeG,
                "degree_2g" => H2Case::Degree2G,
                other => {
                    return Err(CliError::Usage(format!(
                        "unknown case {other:?}; expected degree_g or degree_2g"
                    )))
                }
            };
            report::report_h2(args.g, case, &args.group)
        }
        Command::Lie(args) => match &args.action {
            LieAction::Minuscule { type_label, rank } => {
                let ty = type_label.chars().next().unwrap_or(' ');
                report::report_lie_minuscule(ty, *rank)
            }
            LieAction::Weyl { rank, weight } => {
                let coeffs: Result<Vec<u64>, _> =
                    weight.split(',').map(|c| c.trim().parse::<u64>()).collect();
                let coeffs = coeffs.map_err(|_| {
                    CliError::Usage("weight must be comma-separated integers".into())
                })?;
                report::report_lie_weyl(*rank, &coeffs)
            }
            LieAction::Wedge2Scan { m_max } => report::report_lie_wedge2_scan(*m_max),
            LieAction::BorTabs {
                g,
                relax_power_guard,
            } => report::report_lie_bor_tabs(*g, *relax_power_guard),
            LieAction::Spectrum { p, q, j } => report::report_lie_spectrum(*p, *q, *j),
            LieAction::Balanced { p, q, j } => report::report_lie_balanced(*p, *q, *j),
            LieAction::SpWedge2 { g } => report::report_lie_sp_wedge2(*g),
        },
        Command::Permgrp(args) => {
            let gens = match (&args.generators, args.n) {
                (Some(spec), Some(n)) => Some((spec.as_str(), n)),
                (None, None) => None,
                _ => {
                    return Err(CliError::Usage(
                        "--generators requires --n and vice versa".into(),
                    ))
                }
            };
            report::report_permgrp(args.affine, gens)
        }
        Command::Verify(_) => unreachable!("verify is handled before report building"),
    }
}

fn run() -> Result<(), (i32, String)> {
    let cli = Cli::parse();

    if let Command::Verify(args) = &cli.command {
        let text = if args.path == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| (2, format!("cannot read stdin: {e}")))?;
            buf
        } else {
            std::fs::read_to_string(&args.path)
                .map_err(|e| (2, format!("cannot read {}: {e}", args.path)))?
        };
        let value: Value =
            serde_json::from_str(&text).map_err(|e| (2, format!("invalid JSON: {e}")))?;
        return match verify_report(&value) {
            Ok(()) => {
                let out = serde_json::json!({
                    "schema_version": report::SCHEMA_VERSION,
                    "command": "verify",
                    "verified": true,
                });
                println!(
                    "{}",
                    if cli.text {
                        render_text(&out)
                    } else {
                        to_stable_json(&out)
                    }
                );
                Ok(())
            }
            Err(e) => Err((4, e.to_string())),
        };
    }

    let report = build_report(&cli).map_err(|e| (e.exit_code(), e.message().to_string()))?;
    if cli.verify {
        verify_report(&report).map_err(|e| (4, e.to_string()))?;
    }
    if cli.text {
        print!("{}", render_text(&report));
    } else {
        println!("{}", to_stable_json(&report));
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code as u8)
        }
    }
}
