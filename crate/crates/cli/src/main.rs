use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use linkhom::files;
use linkhom::moveparse::parse_move;
use linkhom::CliError;
use linkhom_core::gauss::MoveKind;
use linkhom_core::{invariant_count, lh_equivalent, mu, mu_table, phi, realize, MilnorIndex};

/// Link-homotopy invariants of welded string links.
#[derive(Parser)]
#[command(name = "linkhom", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the full Milnor table of a diagram
    Table { file: PathBuf },
    /// Print one Milnor number; the index is a digit string like `123`
    Mu {
        file: PathBuf,
        #[arg(long)]
        index: String,
    },
    /// Print the longitudes and their normalized expansions
    Phi { file: PathBuf },
    /// Decide link-homotopy equivalence (exit 0 iff equivalent)
    Equiv { a: PathBuf, b: PathBuf },
    /// Stack two diagrams (second on top) and write the result
    Stack {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Build a diagram realizing the reduced longitudes of a target file
    Realize {
        targets: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Apply one move (sv|r1+|r1-|r2+|r2-|r3|oc) and write the result
    Move {
        file: PathBuf,
        #[arg(long)]
        kind: String,
        #[arg(long)]
        at: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Print the number of Milnor invariants and their rank
    Count {
        #[arg(long)]
        strands: usize,
    },
    /// Evaluate the braid-closure obstruction (exit 1 if it fires)
    Gamma { file: PathBuf },
    /// Run the randomized property suite (exit 1 on any failure)
    Selftest {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        iters: u64,
    },
}

fn load_gd(path: &Path) -> Result<linkhom_core::GaussDiagram, CliError> {
    files::parse_gd(&files::read_to_string(path)?)
}

fn parse_index(text: &str, n: usize) -> Result<MilnorIndex, CliError> {
    let mut seq = Vec::new();
    for c in text.chars() {
        let digit = c
            .to_digit(10)
            .filter(|&d| d >= 1)
            .ok_or_else(|| CliError::new(8, format!("bad index character `{c}` in `{text}`")))?;
        seq.push(digit as usize);
    }
    MilnorIndex::new(seq, n).map_err(CliError::from)
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.cmd {
        Cmd::Table { file } => {
            let d = load_gd(&file)?;
            print!("{}", mu_table(&d)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Mu { file, index } => {
            let d = load_gd(&file)?;
            let idx = parse_index(&index, d.n())?;
            let value = mu(&d, &idx)?;
            println!("mu {idx} = {value}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Phi { file } => {
            let d = load_gd(&file)?;
            print!("{}", phi(&d)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Equiv { a, b } => {
            let da = load_gd(&a)?;
            let db = load_gd(&b)?;
            if lh_equivalent(&da, &db)? {
                println!("equivalent");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("distinct");
                Ok(ExitCode::from(1))
            }
        }
        Cmd::Stack { a, b, output } => {
            let da = load_gd(&a)?;
            let db = load_gd(&b)?;
            files::write_string(&output, &files::write_gd(&da.stack(&db)?))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Realize { targets, output } => {
            let t = files::parse_targets(&files::read_to_string(&targets)?)?;
            let d = realize(&t)?;
            files::write_string(&output, &files::write_gd(&d))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Move {
            file,
            kind,
            at,
            output,
        } => {
            let d = load_gd(&file)?;
            let kind = MoveKind::parse(&kind)
                .ok_or_else(|| CliError::new(6, format!("unknown move kind `{kind}`")))?;
            let spec = parse_move(kind, &at)?;
            let moved = d.apply_move(&spec)?;
            files::write_string(&output, &files::write_gd(&moved))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Count { strands } => {
            let c = invariant_count(strands)?;
            println!("total {}", c.total);
            println!("rank {}", c.rank);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Gamma { file } => {
            let data = files::parse_sd(&files::read_to_string(&file)?)?;
            let ids = data.ids();
            for &i in &ids {
                for &j in &ids {
                    if i != j {
                        println!("Gamma[{i},{j}] = {}", data.gamma(i, j)?);
                    }
                }
            }
            match data.braid_closure_obstruction() {
                Some(w) => {
                    println!(
                        "obstruction: Gamma[{},{}] and Gamma[{},{}] are distinct and nonzero",
                        w.first_over, w.under, w.second_over, w.under
                    );
                    Ok(ExitCode::from(1))
                }
                None => {
                    println!("no obstruction");
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        Cmd::Selftest { seed, iters } => {
            if linkhom::selftest::run(seed, iters) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

/// Die silently when the downstream pipe closes, like standard tools do;
/// without this, `linkhom table big.gd | head` panics on the write.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.code)
        }
    }
}
