//! `horn`: Littlewood-Richardson coefficients, domino tableaux, verification
//! sweeps, spectral sampling and the example figures.
//!
//! Exit codes: 0 verified, 1 counterexample or disagreement, 2 usage or
//! input error, 3 time budget exceeded.

mod config;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use horn_core::domino::{enumerate_domino_tableaux, enumerate_yamanouchi_tableaux, reading_word};
use horn_core::figures::{figure1, figure2, figure3, FigureEntry};
use horn_core::horn::{run_suite, Suite, SweepConfig};
use horn_core::render::{to_ascii, to_svg};
use horn_core::spectral::{monte_carlo_q, samples_to_json, samples_to_text, summarize, SamplingMode};
use horn_core::{cl_coefficient, lr_coefficient, Partition};

use crate::config::Config;

#[derive(Parser, Debug)]
#[command(name = "horn", version, about = "Littlewood-Richardson coefficients, domino tableaux and Horn polytopes")]
struct Cli {
    /// TOML configuration file; flags override its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Worker threads (default: one per core).
    #[arg(long, global = true, env = "HORN_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute c^nu_{lambda mu}.
    Lr {
        lambda: Partition,
        mu: Partition,
        nu: Partition,
        #[arg(long, value_enum, default_value_t = Method::Classical)]
        method: Method,
    },
    /// List the domino tableaux of a shape and weight.
    Enumerate {
        shape: Partition,
        weight: Partition,
        /// Keep only Yamanouchi tableaux.
        #[arg(long)]
        yamanouchi: bool,
        #[arg(long, value_enum)]
        render: Option<Render>,
        /// Directory for one drawing per tableau.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification sweep.
    Verify {
        #[arg(long)]
        suite: Suite,
        /// Largest part of sigma (of lambda and mu for fflp).
        #[arg(long)]
        max_part: Option<u32>,
        /// Half length of sigma (common length of lambda and mu for fflp).
        #[arg(long)]
        p: Option<usize>,
        /// Check only these sigma instead of the box.
        #[arg(long)]
        sigma: Vec<Partition>,
        /// Wall-clock budget in seconds.
        #[arg(long)]
        budget: Option<f64>,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Print every listed record, not only counterexamples.
        #[arg(long)]
        full: bool,
    },
    /// Sample spectra of S + J^-1 S J.
    Spectra {
        /// Decreasing reals, e.g. [5,3,2,0].
        sigma: String,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        mode: Option<SamplingMode>,
        /// Write the tab-separated sample dump here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the samples as JSON here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Regenerate the example figures.
    Figures {
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Classical,
    Domino,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Render {
    Ascii,
    Svg,
}

const SUCCESS: u8 = 0;
const COUNTEREXAMPLE: u8 = 1;
const USAGE: u8 = 2;
const BUDGET: u8 = 3;

struct Failure {
    code: u8,
    message: String,
}

type Outcome = Result<u8, Failure>;

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: USAGE,
        message: message.into(),
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Failure {
    usage(format!("{}: {e}", path.display()))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| io_error(path, e))
}

fn check_limit(limit: u32, parts: &[&Partition]) -> Result<(), Failure> {
    for p in parts {
        if p.part(0) > limit {
            return Err(usage(format!("{p} has a part above the limit {limit}")));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    };
    ExitCode::from(code)
}

fn run(cli: Cli) -> Outcome {
    let cfg = match &cli.config {
        Some(path) => Config::load(path).map_err(usage)?,
        None => Config::default(),
    };
    if let Some(n) = cli.threads.or(cfg.threads) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| usage(e.to_string()))?;
    }
    let limit = cfg.max_part_limit();
    match cli.command {
        Command::Lr {
            lambda,
            mu,
            nu,
            method,
        } => {
            check_limit(limit, &[&lambda, &mu, &nu])?;
            cmd_lr(&lambda, &mu, &nu, method)
        }
        Command::Enumerate {
            shape,
            weight,
            yamanouchi,
            render,
            out,
        } => {
            check_limit(limit, &[&shape, &weight])?;
            cmd_enumerate(&shape, &weight, yamanouchi, render, out.as_deref())
        }
        Command::Verify {
            suite,
            max_part,
            p,
            sigma,
            budget,
            report,
            full,
        } => {
            let sweep = SweepConfig {
                p: p.or(cfg.verify.p).unwrap_or(2),
                max_part: max_part.or(cfg.verify.max_part).unwrap_or(6),
                include_box: sigma.is_empty(),
                extra: if sigma.is_empty() {
                    cfg.verify.extra.clone()
                } else {
                    sigma
                },
            };
            if sweep.max_part > limit {
                return Err(usage(format!("--max-part {} is above the limit {limit}", sweep.max_part)));
            }
            check_limit(limit, &sweep.extra.iter().collect::<Vec<_>>())?;
            let budget = budget.or(cfg.verify.budget_secs);
            cmd_verify(suite, &sweep, budget, report.as_deref(), full)
        }
        Command::Spectra {
            sigma,
            samples,
            seed,
            mode,
            out,
            json,
        } => {
            let sigma = parse_reals(&sigma).map_err(usage)?;
            if let Some(x) = sigma.iter().find(|&&x| x > f64::from(limit)) {
                return Err(usage(format!("entry {x} is above the limit {limit}")));
            }
            cmd_spectra(
                &sigma,
                samples.or(cfg.spectra.samples).unwrap_or(1000),
                seed.or(cfg.spectra.seed).unwrap_or(0),
                mode.or(cfg.spectra.mode).unwrap_or(SamplingMode::Random),
                out.as_deref(),
                json.as_deref(),
            )
        }
        Command::Figures { out } => cmd_figures(&out),
    }
}

fn cmd_lr(lambda: &Partition, mu: &Partition, nu: &Partition, method: Method) -> Outcome {
    let classical = matches!(method, Method::Classical | Method::Both).then(|| lr_coefficient(lambda, mu, nu));
    let domino = match method {
        Method::Domino | Method::Both => Some(cl_coefficient(lambda, mu, nu).map_err(|e| usage(e.to_string()))?),
        Method::Classical => None,
    };
    match (classical, domino) {
        (Some(c), Some(d)) => {
            println!("classical {c}");
            println!("domino {d}");
            if c == d {
                println!("agree");
                Ok(SUCCESS)
            } else {
                println!("DISAGREE");
                Ok(COUNTEREXAMPLE)
            }
        }
        (Some(x), None) | (None, Some(x)) => {
            println!("{x}");
            Ok(SUCCESS)
        }
        (None, None) => unreachable!("some method is selected"),
    }
}

fn cmd_enumerate(
    shape: &Partition,
    weight: &Partition,
    yamanouchi: bool,
    render: Option<Render>,
    out: Option<&Path>,
) -> Outcome {
    let all = if yamanouchi {
        enumerate_yamanouchi_tableaux(shape, weight)
    } else {
        enumerate_domino_tableaux(shape, weight)
    };
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
    }
    for (i, t) in all.iter().enumerate() {
        let word = reading_word(t);
        println!("# tableau {} word {} yamanouchi {}", i + 1, word, word.is_yamanouchi());
        match render {
            Some(Render::Ascii) => {
                let drawing = to_ascii(t);
                print!("{drawing}");
                if let Some(dir) = out {
                    write_file(&dir.join(format!("tableau_{}.txt", i + 1)), &drawing)?;
                }
            }
            Some(Render::Svg) => {
                print!("{}", t.to_text());
                if let Some(dir) = out {
                    write_file(&dir.join(format!("tableau_{}.svg", i + 1)), &to_svg(t))?;
                }
            }
            None => print!("{}", t.to_text()),
        }
    }
    println!("count {}", all.len());
    Ok(SUCCESS)
}

fn cmd_verify(suite: Suite, sweep: &SweepConfig, budget: Option<f64>, report_path: Option<&Path>, full: bool) -> Outcome {
    let deadline = match budget {
        Some(secs) if secs.is_finite() && secs >= 0.0 => Some(Instant::now() + Duration::from_secs_f64(secs)),
        Some(secs) => return Err(usage(format!("invalid budget {secs}"))),
        None => None,
    };
    let report = run_suite(suite, sweep, deadline).map_err(|e| usage(e.to_string()))?;
    if full {
        print!("{}", report.to_text());
    } else {
        println!("{}", report.summary());
        for r in report.counterexamples() {
            println!("{}", r.line());
        }
    }
    if let Some(path) = report_path {
        write_file(path, &report.to_json())?;
    }
    Ok(if !report.passed() {
        COUNTEREXAMPLE
    } else if !report.complete {
        BUDGET
    } else {
        SUCCESS
    })
}

/// Parses `[a,b,...]` with real entries.
fn parse_reals(s: &str) -> Result<Vec<f64>, String> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| format!("expected [a,b,...], got {s:?}"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .enumerate()
        .map(|(i, item)| {
            item.trim()
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| format!("entry {} of {s:?} is not a finite number: {:?}", i + 1, item.trim()))
        })
        .collect()
}

fn cmd_spectra(
    sigma: &[f64],
    samples: usize,
    seed: u64,
    mode: SamplingMode,
    out: Option<&Path>,
    json: Option<&Path>,
) -> Outcome {
    let draws = monte_carlo_q(sigma, samples, seed, mode).map_err(|e| usage(e.to_string()))?;
    let summary = summarize(sigma, mode, &draws).map_err(|e| usage(e.to_string()))?;
    if let Some(path) = out {
        write_file(path, &samples_to_text(&draws))?;
    }
    if let Some(path) = json {
        write_file(path, &samples_to_json(&draws))?;
    }
    print!("{}", summary.to_text());
    Ok(if summary.holds() { SUCCESS } else { COUNTEREXAMPLE })
}

fn write_figure(dir: &Path, figure: &str, entries: &[FigureEntry]) -> Result<(), Failure> {
    let mut listing = String::new();
    for e in entries {
        println!("{figure} {} weight {} word {}", e.name, e.weight, e.word);
        writeln!(listing, "{} weight {} word {}", e.name, e.weight, e.word).unwrap();
        listing += &to_ascii(&e.tableau);
        listing += &e.tableau.to_text();
        listing.push('\n');
        write_file(&dir.join(format!("{figure}_{}.svg", e.name)), &to_svg(&e.tableau))?;
    }
    write_file(&dir.join(format!("{figure}.txt")), &listing)?;
    let json = serde_json::to_string_pretty(entries).expect("entries serialize");
    write_file(&dir.join(format!("{figure}.json")), &json)
}

fn cmd_figures(dir: &Path) -> Outcome {
    let core = |e: horn_core::Error| usage(e.to_string());
    fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
    write_figure(dir, "figure1", &figure1().map_err(core)?)?;
    write_figure(dir, "figure2", &figure2().map_err(core)?)?;
    match figure3().map_err(core)? {
        Some(w) => {
            write_figure(dir, "figure3", &[w])?;
            Ok(SUCCESS)
        }
        None => {
            println!("figure3 no tableau outside the duplication image");
            Ok(COUNTEREXAMPLE)
        }
    }
}
