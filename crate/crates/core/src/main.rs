use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ideal_lab::cli::{cmd_check, cmd_corpus, cmd_lattice, Format, Output, RunOptions};

#[derive(Parser)]
#[command(name = "ideal-lab", version, about = "Decide big, upper big, basic and C-ideal properties exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the checks of a scene file.
    Check {
        scene: String,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Power bound for checks that do not set their own.
        #[arg(long = "nmax")]
        n_max: Option<usize>,
        /// Leave out timing fields.
        #[arg(long)]
        stable_output: bool,
    },
    /// Run the built-in corpus of worked examples.
    Corpus {
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        stable_output: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Tabulate every ideal of a finite ring, e.g. "idealization(gf(2), regular)".
    Lattice {
        ringspec: String,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.command {
        Command::Check { scene, format, n_max, stable_output } => match std::fs::read_to_string(&scene) {
            Ok(text) => cmd_check(&scene, &text, format.into(), RunOptions { n_max, stable: stable_output }),
            Err(e) => Output { stdout: String::new(), stderr: format!("error: {scene}: {e}\n"), code: 2 },
        },
        Command::Corpus { only, list, stable_output, format } => {
            cmd_corpus(only.as_deref(), list, format.into(), RunOptions { n_max: None, stable: stable_output })
        }
        Command::Lattice { ringspec, max_size, format } => cmd_lattice(&ringspec, max_size, format.into()),
    };
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
