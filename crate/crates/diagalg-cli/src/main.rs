//! Command-line interface for the diagalg diagram-algebra engine.
//!
//! Subcommands cover multiplication in the label, ghost and symplectic blob
//! algebras, dimension counting, basis enumeration, evaluation of generator
//! words, WT canonical forms, diagram decomposition, relation verification
//! and rendering. Exit codes: 0 on success, 1 on verification failure, 2 on
//! parse or usage errors.

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use diagalg::coeff::Polynomial;
use diagalg::decompose::decompose;
use diagalg::diagram::{enumerate_all, Diagram, LabelSet, RenderFormat};
use diagalg::ghostalg::{ghost_concat, ghost_param_map, GhostDiagram};
use diagalg::labelalg::{concat, dimension};
use diagalg::presentation::{parse_word, phi, word_to_string, relation_catalogue, verify_relation};
use diagalg::rewrite::to_wt_form;
use diagalg::sympblob::{sb_multiply, sb_verify_relations, BlobDiagram};

#[derive(Parser)]
#[command(name = "diagalg", version, about = "Planar diagram algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algebra {
    Label,
    Ghost,
    Sb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Label,
    GhostIso,
    Sb,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tikz,
    Ascii,
}

#[derive(Subcommand)]
enum Cmd {
    /// Multiply two diagrams and print the coefficient and product diagram.
    Mul {
        left: String,
        right: String,
        #[arg(long, value_enum, default_value_t = Algebra::Label)]
        algebra: Algebra,
    },
    /// Print the dimension of the label algebra L_n(X) with |X| = xsize.
    Dim { n: u32, xsize: u32 },
    /// Stream every canonical basis diagram of L_n(X), one per line.
    Enum { n: u32, x: String },
    /// Evaluate a generator word under the realisation map.
    Phi {
        word: String,
        #[arg(long)]
        n: u32,
        #[arg(long = "X")]
        x: String,
    },
    /// Print the WT canonical form of a generator word.
    Wt {
        word: String,
        #[arg(long)]
        n: u32,
        #[arg(long = "X")]
        x: String,
    },
    /// Decompose a basis diagram into a generator word.
    Decompose { diagram: String },
    /// Run relation and isomorphism verification suites.
    Verify {
        #[arg(long)]
        n: u32,
        #[arg(long = "X")]
        x: String,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Render a diagram as TikZ source or ASCII art.
    Render {
        diagram: String,
        #[arg(long, value_enum)]
        format: Format,
    },
}

fn parse_labels(x: &str) -> Result<LabelSet, diagalg::Error> {
    LabelSet::new(x.split(',').map(str::trim).filter(|s| !s.is_empty()))
}

/// Reads the DIAGALG_THREADS cap, defaulting to the available parallelism.
fn thread_cap() -> Result<usize, String> {
    match std::env::var("DIAGALG_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t >= 1 => Ok(t),
            _ => Err(format!("DIAGALG_THREADS must be a positive integer, got {v:?}")),
        },
        Err(_) => Ok(std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1)),
    }
}

/// Checks every catalogued presentation relation under φ, splitting the
/// catalogue across at most `threads` worker threads.
fn verify_label_suite(n: u32, x: &LabelSet, threads: usize) -> Result<Vec<String>, diagalg::Error> {
    let catalogue = relation_catalogue(n, x);
    let chunk = catalogue.len().div_ceil(threads.max(1)).max(1);
    let mut failures: Vec<(usize, String)> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = catalogue
            .chunks(chunk)
            .enumerate()
            .map(|(ci, rs)| {
                scope.spawn(move || {
                    let mut out = Vec::new();
                    for (ri, r) in rs.iter().enumerate() {
                        match verify_relation(r, n, x) {
                            Ok(true) => {}
                            Ok(false) => out.push((
                                ci * chunk + ri,
                                format!("{}: {} != {}", r.id, word_to_string(&r.lhs), word_to_string(&r.rhs)),
                            )),
                            Err(e) => out.push((ci * chunk + ri, format!("{}: {e}", r.id))),
                        }
                    }
                    out
                })
            })
            .collect();
        for h in handles {
            failures.extend(h.join().expect("relation worker panicked"));
        }
    });
    failures.sort();
    Ok(failures.into_iter().map(|(_, m)| m).collect())
}

/// Cross-checks ghost multiplication against the label algebra on random
/// basis pairs over X = {0, 1}; the parameter map must intertwine the two.
fn verify_ghost_iso_suite(n: u32, samples: usize) -> Result<Vec<String>, diagalg::Error> {
    let x = LabelSet::new(["0", "1"])?;
    let map = ghost_param_map();
    let all: Vec<Diagram> = enumerate_all(n, &x).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d1a6a16);
    let mut failures = Vec::new();
    for _ in 0..samples {
        let d1 = all.choose(&mut rng).expect("empty basis");
        let d2 = all.choose(&mut rng).expect("empty basis");
        let g1 = GhostDiagram::from_label(d1)?;
        let g2 = GhostDiagram::from_label(d2)?;
        let (gm, gd) = ghost_concat(&g1, &g2)?;
        let (lm, ld, _) = concat(d1, d2)?;
        let specialized = Polynomial::from_monomial(lm)
            .specialize(&map)
            .map_err(|e| diagalg::Error::InvalidDiagram(e.to_string()))?;
        if specialized != Polynomial::from_monomial(gm.clone()) || gd.to_label()? != ld {
            failures.push(format!("ghost-iso mismatch for {d1} * {d2}"));
        }
    }
    Ok(failures)
}

fn run(cli: Cli) -> Result<ExitCode, diagalg::Error> {
    match cli.cmd {
        Cmd::Mul { left, right, algebra } => match algebra {
            Algebra::Label => {
                let d1 = Diagram::parse(&left)?;
                let d2 = Diagram::parse(&right)?;
                let (m, d, _) = concat(&d1, &d2)?;
                println!("{m} * {d}");
            }
            Algebra::Ghost => {
                let g1 = GhostDiagram::parse(&left)?;
                let g2 = GhostDiagram::parse(&right)?;
                let (m, g) = ghost_concat(&g1, &g2)?;
                println!("{m} * {g}");
            }
            Algebra::Sb => {
                let b1 = BlobDiagram::parse(&left)?;
                let b2 = BlobDiagram::parse(&right)?;
                let (m, b) = sb_multiply(&b1, &b2)?;
                println!("{m} * {b}");
            }
        },
        Cmd::Dim { n, xsize } => {
            println!("{}", dimension(n, xsize));
        }
        Cmd::Enum { n, x } => {
            use std::io::Write;
            let x = parse_labels(&x)?;
            let stdout = std::io::stdout();
            let mut out = std::io::BufWriter::new(stdout.lock());
            for d in enumerate_all(n, &x) {
                // A closed pipe (e.g. `diagalg enum ... | head`) is not an error.
                if writeln!(out, "{d}").is_err() {
                    return Ok(ExitCode::SUCCESS);
                }
            }
            out.flush().ok();
        }
        Cmd::Phi { word, n, x } => {
            let x = parse_labels(&x)?;
            let w = parse_word(&word)?;
            println!("{}", phi(&w, n, &x)?);
        }
        Cmd::Wt { word, n, x } => {
            let x = parse_labels(&x)?;
            let w = parse_word(&word)?;
            println!("{}", to_wt_form(&w, n, &x)?);
        }
        Cmd::Decompose { diagram } => {
            let d = Diagram::parse(&diagram)?;
            println!("{}", word_to_string(&decompose(&d)?));
        }
        Cmd::Verify { n, x, suite } => {
            let x = parse_labels(&x)?;
            let threads = match thread_cap() {
                Ok(t) => t,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return Ok(ExitCode::from(2));
                }
            };
            let mut failures = Vec::new();
            let mut total_suites = BTreeSet::new();
            if matches!(suite, Suite::Label | Suite::All) {
                total_suites.insert("label");
                failures.extend(verify_label_suite(n, &x, threads)?);
            }
            if matches!(suite, Suite::GhostIso | Suite::All) {
                total_suites.insert("ghost-iso");
                failures.extend(verify_ghost_iso_suite(n, 200)?);
            }
            if matches!(suite, Suite::Sb | Suite::All) {
                total_suites.insert("sb");
                let report = sb_verify_relations(n)?;
                failures.extend(report.failures);
            }
            for f in &failures {
                println!("FAIL {f}");
            }
            if failures.is_empty() {
                println!(
                    "ok: suites [{}] passed at n={n}",
                    total_suites.into_iter().collect::<Vec<_>>().join(", ")
                );
            } else {
                println!("{} failure(s)", failures.len());
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::Render { diagram, format } => {
            let d = Diagram::parse(&diagram)?;
            let fmt = match format {
                Format::Tikz => RenderFormat::Tikz,
                Format::Ascii => RenderFormat::Ascii,
            };
            println!("{}", d.render(fmt));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
