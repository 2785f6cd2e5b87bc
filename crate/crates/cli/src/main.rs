//! `ppn`: alignment-free sequence comparison with prime-product neighborhood
//! vectors, from FASTA through distance matrices to UPGMA trees.

mod bench;
mod commands;
mod error;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use error::{CliError, Failure};

#[derive(Parser, Debug)]
#[command(name = "ppn", version, about = "Prime-product neighborhood sequence comparison")]
struct Cli {
    /// Worker threads; 0 uses every available core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the 24-component vector of every FASTA record as TSV.
    Vector {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Write the pairwise distance matrix as relaxed PHYLIP.
    Matrix {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Build a UPGMA tree in Newick form from FASTA or a PHYLIP matrix.
    Tree {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Compare two Newick trees by nRF and nQD.
    Treedist {
        /// Newick file; give exactly two.
        #[arg(long, required = true, num_args = 1)]
        input: Vec<String>,
        #[arg(long, default_value = "-")]
        output: String,
    },
    /// Generate uniform random sequences as FASTA.
    Simulate {
        #[arg(long)]
        species: usize,
        #[arg(long)]
        length: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "-")]
        output: String,
    },
    /// Time the vector and matrix pipeline on simulated sets.
    Bench {
        /// Species counts, comma-separated.
        #[arg(long, value_delimiter = ',', default_values_t = [10usize, 20])]
        species: Vec<usize>,
        /// Sequence lengths, comma-separated.
        #[arg(long, value_delimiter = ',', default_values_t = [50_000usize])]
        length: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        reps: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Destination of the TSV rows; the text table goes to stderr.
        #[arg(long, default_value = "-")]
        output: String,
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Args, Debug)]
struct IoArgs {
    /// Input path, or '-' for stdin.
    #[arg(long, default_value = "-")]
    input: String,
    /// Output path, or '-' for stdout.
    #[arg(long, default_value = "-")]
    output: String,
}

#[derive(Args, Debug)]
pub struct ParamArgs {
    /// Window radius.
    #[arg(long = "l", default_value_t = 4)]
    pub l: u32,
    /// Stride: window centers are t + 1 apart.
    #[arg(long = "t", default_value_t = 1)]
    pub t: u32,
    #[arg(long, value_enum, default_value_t = MetricArg::Euclidean)]
    pub metric: MetricArg,
    /// What to do with characters other than ACGT.
    #[arg(long, value_enum, default_value_t = PolicyArg::Drop)]
    pub policy: PolicyArg,
    /// Permit t > l, leaving positions uncovered.
    #[arg(long)]
    pub allow_gaps: bool,
    /// Divide vectors by their window count before comparing.
    #[arg(long)]
    pub normalize: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum MetricArg {
    Euclidean,
    Manhattan,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum PolicyArg {
    Drop,
    Strict,
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Vector { io, params } => commands::cmd_vector(&io.input, &io.output, &params),
        Command::Matrix { io, params } => commands::cmd_matrix(&io.input, &io.output, &params),
        Command::Tree { io, params } => commands::cmd_tree(&io.input, &io.output, &params),
        Command::Treedist { input, output } => commands::cmd_treedist(&input, &output),
        Command::Simulate { species, length, seed, output } => {
            commands::cmd_simulate(species, length, seed, &output)
        }
        Command::Bench { species, length, reps, seed, output, params } => {
            let params = commands::build_params(&params)?;
            let rows = bench::run(&species, &length, reps, seed, &params)?;
            eprint!("{}", bench::table(&rows));
            output::write_output(&output, bench::tsv(&rows).as_bytes())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();

    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("ppn: error: cannot start worker pool: {e}");
            return Failure::Io.exit_code();
        }
    };
    match pool.install(|| run(cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ppn: error: {e}");
            e.kind.exit_code()
        }
    }
}
