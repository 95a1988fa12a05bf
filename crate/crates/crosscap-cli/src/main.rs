use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crosscap_cli::{
    build_candidates_doc, build_crosscap_doc, build_verify_doc, build_xfun_doc, parse_knot,
    parse_tuple, render_csv, render_json, render_svg, resolve_selector,
};
use crosscap_core::{big_x, PretzelKnot};

/// Exact crosscap numbers and candidate surface reports for pretzel knots.
#[derive(Parser)]
#[command(name = "crosscap", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct KnotArgs {
    /// Pretzel parameters, comma separated (e.g. -p -2,3,7)
    #[arg(short = 'p', long = "pretzel", allow_hyphen_values = true)]
    pretzel: String,
    /// Emit the JSON report (the default output)
    #[arg(long, default_value_t = true)]
    json: bool,
}

#[derive(Args)]
struct TruncationArgs {
    /// Cap on the number of vertical edges in type II systems
    #[arg(long, default_value_t = 6)]
    max_vertical: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Crosscap number, knot class and reference surface data
    Crosscap {
        #[command(flatten)]
        knot: KnotArgs,
    },
    /// Full candidate table: type I systems and families, types II and III
    Candidates {
        #[command(flatten)]
        knot: KnotArgs,
        #[command(flatten)]
        truncation: TruncationArgs,
    },
    /// Breakpoints and slopes of X for a basic system (default all-a)
    Xfun {
        #[command(flatten)]
        knot: KnotArgs,
        /// Basic system selector, one letter per tangle (e.g. aab)
        #[arg(long)]
        system: Option<String>,
        /// Write the breakpoints as CSV to this path
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write an SVG plot to this path
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Check the candidate bound; exit 0 iff the verdict holds
    Verify {
        #[command(flatten)]
        knot: KnotArgs,
        #[command(flatten)]
        truncation: TruncationArgs,
    },
}

fn knot_from(args: &KnotArgs) -> Result<PretzelKnot, String> {
    parse_knot(&parse_tuple(&args.pretzel)?)
}

fn fail_input(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Crosscap { knot } => {
            let knot = match knot_from(&knot) {
                Ok(k) => k,
                Err(e) => return fail_input(&e),
            };
            print!("{}", render_json(&build_crosscap_doc(&knot)));
            ExitCode::SUCCESS
        }
        Command::Candidates { knot, truncation } => {
            let knot = match knot_from(&knot) {
                Ok(k) => k,
                Err(e) => return fail_input(&e),
            };
            match build_candidates_doc(&knot, truncation.max_vertical) {
                Ok(doc) => {
                    print!("{}", render_json(&doc));
                    ExitCode::SUCCESS
                }
                Err(e) => fail_input(&e),
            }
        }
        Command::Xfun { knot, system, csv, svg } => {
            let knot = match knot_from(&knot) {
                Ok(k) => k,
                Err(e) => return fail_input(&e),
            };
            let basics = match resolve_selector(&knot, system.as_deref()) {
                Ok(b) => b,
                Err(e) => return fail_input(&e),
            };
            let doc = match build_xfun_doc(&knot, system.as_deref()) {
                Ok(doc) => doc,
                Err(e) => return fail_input(&e),
            };
            let x = big_x(&basics);
            if let Some(path) = csv {
                if let Err(e) = std::fs::write(&path, render_csv(&x)) {
                    return fail_input(&format!("cannot write {}: {e}", path.display()));
                }
            }
            if let Some(path) = svg {
                let title = format!("X for {:?}", knot.params());
                if let Err(e) = std::fs::write(&path, render_svg(&x, &title)) {
                    return fail_input(&format!("cannot write {}: {e}", path.display()));
                }
            }
            print!("{}", render_json(&doc));
            ExitCode::SUCCESS
        }
        Command::Verify { knot, truncation } => {
            let knot = match knot_from(&knot) {
                Ok(k) => k,
                Err(e) => return fail_input(&e),
            };
            match build_verify_doc(&knot, truncation.max_vertical) {
                Ok((doc, verdict)) => {
                    print!("{}", render_json(&doc));
                    if verdict {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => fail_input(&e),
            }
        }
    }
}
