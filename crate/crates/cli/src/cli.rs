use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "urep",
    version,
    about = "Build, check and search for words representing graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct a word representing the graph (pattern length >= 3).
    Represent(RepresentArgs),
    /// Check whether a word represents the graph.
    Verify(VerifyArgs),
    /// Bounded exhaustive search for a representing word.
    Search(SearchArgs),
    /// Reverse or complement a word, or supplement a graph.
    Transform(TransformArgs),
    /// List the 1-based start positions of pattern matches in a word.
    Matches(MatchesArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Edges,
    Graph6,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Graph file.
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, value_enum, default_value = "edges")]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct WordArgs {
    /// Space-separated letters, e.g. "1 4 2 1".
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    /// Read --word as concatenated single digits, e.g. 14213243.
    #[arg(long)]
    pub compact: bool,
}

#[derive(Debug, Args)]
pub struct RepresentArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long)]
    pub pattern: String,
    /// Also print the plan and one line per removed non-edge.
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long)]
    pub pattern: String,
    #[command(flatten)]
    pub word: WordArgs,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long)]
    pub pattern: String,
    /// Longest word to try; defaults to 2n for patterns 12 and 21.
    #[arg(long)]
    pub max_len: Option<usize>,
    /// Search every relabeling of the graph, one output line each.
    #[arg(long)]
    pub all_labelings: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum TransformOp {
    Reverse,
    Complement,
    Supplement,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[arg(long, value_enum)]
    pub op: TransformOp,
    #[arg(long, allow_hyphen_values = true)]
    pub word: Option<String>,
    #[arg(long)]
    pub compact: bool,
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edges")]
    pub format: FormatArg,
    /// Alphabet size for complement.
    #[arg(long)]
    pub n: Option<u32>,
}

#[derive(Debug, Args)]
pub struct MatchesArgs {
    #[arg(long)]
    pub pattern: String,
    #[command(flatten)]
    pub word: WordArgs,
}
