mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "giz", version, about = "Zigzags, extended divisors and rigidity of Gizatullin C*-surfaces")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validity, Gizatullin and toric flags, singular points and boundary zigzag.
    Analyze { file: PathBuf },
    /// Extended divisor of the standard completion.
    Extended {
        file: PathBuf,
        /// Use the inverted action (swap D+ and D-).
        #[arg(long)]
        reversed: bool,
        /// Also write Graphviz text to this path.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Mothers, feather jumps, generalizations and the rigidity verdict.
    Rigidity {
        file: PathBuf,
        #[arg(long)]
        reversed: bool,
    },
    /// Conditions on the divisor data and the uniqueness verdicts.
    Classify { file: PathBuf },
    /// Zigzag and number of fibration classes of the toric surface V_{d,e}.
    Toric { d: i64, e: i64 },
    /// Danilov-Gizatullin surface V_{k+1} with the C*-action number r.
    Dg {
        k: i64,
        r: i64,
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Lib(gizatullin::Error),
    Io(String),
}

impl From<gizatullin::Error> for CliError {
    fn from(e: gizatullin::Error) -> CliError {
        CliError::Lib(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use gizatullin::Error as E;
        match self {
            CliError::Input(_) => 2,
            CliError::Io(_) => 1,
            CliError::Lib(E::NotGizatullin) => 3,
            CliError::Lib(E::ToricInput) => 4,
            CliError::Lib(E::Internal(_) | E::Overflow) => 1,
            CliError::Lib(_) => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Input(m) | CliError::Io(m) => m.clone(),
            CliError::Lib(gizatullin::Error::ToricInput) => {
                "the surface is toric; use `giz analyze` or `giz toric`".into()
            }
            CliError::Lib(e) => e.to_string(),
        }
    }
}

fn run(cli: &Cli) -> Result<report::Report, CliError> {
    match &cli.command {
        Command::Analyze { file } => report::analyze(&input::read_pair(file)?),
        Command::Extended { file, reversed, dot } => {
            report::extended(&input::read_pair(file)?, *reversed, dot.as_deref())
        }
        Command::Rigidity { file, reversed } => report::rigidity(&input::read_pair(file)?, *reversed),
        Command::Classify { file } => report::classify(&input::read_pair(file)?),
        Command::Toric { d, e } => report::toric(*d, *e),
        Command::Dg { k, r, dot } => report::dg(*k, *r, dot.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(rep) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&rep.json).expect("serializable"));
            } else {
                print!("{}", rep.text);
            }
            ExitCode::from(rep.exit_code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
