use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use diairesis_cli::{
    classify_line, cmd_eval, cmd_fractal, cmd_powerset, dot, load_tree, tree_report, CliError, Mode,
};
use diairesis_core::{Colormap, FractalParams};

#[derive(Parser)]
#[command(
    name = "diairesis",
    version,
    about = "Four-valued division logic toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a formula under atom=value assignments (values n, f, t, b).
    Eval {
        formula: String,
        assignments: Vec<String>,
    },
    /// Build a division tree and list its leaves.
    Tree(TreeArgs),
    /// Build a division tree and print it as a DOT digraph.
    Dot(TreeArgs),
    /// Classify one item against a division tree.
    Classify {
        #[command(flatten)]
        tree: TreeArgs,
        item: String,
    },
    /// List every subset of a comma-separated item list.
    Powerset { items: String },
    /// Render the generation bands of fuzzy determination values as PPM.
    Fractal {
        #[arg(long)]
        depth: u32,
        #[arg(long, default_value_t = 1)]
        cell_size: u32,
        #[arg(long, default_value = "grayscale")]
        colormap: String,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct TreeArgs {
    /// Items file (CSV, or JSON with --json or a .json extension).
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    json: bool,
    /// Predicates to divide by, one per generation.
    #[arg(long, value_delimiter = ',', conflicts_with = "balanced")]
    order: Vec<String>,
    /// Choose the most even split at every node.
    #[arg(long)]
    balanced: bool,
    #[arg(long, requires = "balanced")]
    max_depth: Option<usize>,
}

impl TreeArgs {
    fn mode(&self) -> Mode {
        if self.balanced {
            Mode::Balanced {
                max_depth: self.max_depth,
            }
        } else {
            Mode::Given(self.order.clone())
        }
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Eval {
            formula,
            assignments,
        } => cmd_eval(&formula, &assignments),
        Command::Tree(args) => Ok(tree_report(&load_tree(
            &args.input,
            args.json,
            &args.mode(),
        )?)),
        Command::Dot(args) => Ok(dot(&load_tree(&args.input, args.json, &args.mode())?)),
        Command::Classify { tree, item } => {
            classify_line(&load_tree(&tree.input, tree.json, &tree.mode())?, &item)
        }
        Command::Powerset { items } => cmd_powerset(&items),
        Command::Fractal {
            depth,
            cell_size,
            colormap,
            out,
        } => {
            let colormap: Colormap = colormap.parse()?;
            cmd_fractal(
                &FractalParams::new(depth, cell_size).with_colormap(colormap),
                &out,
            )
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(6);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
