mod cli;

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use urep::represent::verify;
use urep::search::{classify_labelings, find_representation, SearchConfig, SearchOutcome};
use urep::{construct, find_matches, parse_graph, Error, GraphFormat, LabeledGraph, Pattern, Word};

use cli::{Cli, Command, FormatArg, GraphArgs, TransformOp, WordArgs};

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ExitStatus {
    Success = 0,
    Failed = 1,
    Usage = 2,
    Input = 3,
}

struct Failure {
    status: ExitStatus,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            status: ExitStatus::Usage,
            message: message.into(),
        }
    }

    fn input(message: impl Into<String>) -> Self {
        Failure {
            status: ExitStatus::Input,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let status = match err {
            Error::ZeroLetter(_)
            | Error::BadPattern { .. }
            | Error::Parse { .. }
            | Error::Range { .. }
            | Error::DuplicateEdge { .. }
            | Error::BadSize => ExitStatus::Input,
            _ => ExitStatus::Usage,
        };
        Failure {
            status,
            message: err.to_string(),
        }
    }
}

type Outcome = Result<(String, ExitStatus), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Represent(args) => cmd_represent(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Search(args) => cmd_search(args),
        Command::Transform(args) => cmd_transform(args),
        Command::Matches(args) => cmd_matches(args),
    };
    match result {
        Ok((stdout, status)) => {
            let mut out = io::stdout().lock();
            if out
                .write_all(stdout.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return ExitCode::from(ExitStatus::Failed as u8);
            }
            ExitCode::from(status as u8)
        }
        Err(failure) => {
            eprintln!("urep: {}", failure.message);
            ExitCode::from(failure.status as u8)
        }
    }
}

fn read_graph(path: &Path, format: FormatArg) -> Result<LabeledGraph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    let format = match format {
        FormatArg::Edges => GraphFormat::EdgeList,
        FormatArg::Graph6 => GraphFormat::Graph6,
    };
    parse_graph(&text, format).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_graph(args: &GraphArgs) -> Result<LabeledGraph, Failure> {
    read_graph(&args.graph, args.format)
}

fn parse_word(text: &str, compact: bool) -> Result<Word, Failure> {
    let word = if compact {
        Word::parse_compact(text)
    } else {
        text.parse()
    };
    word.map_err(|e| Failure::input(format!("word: {e}")))
}

fn load_word(args: &WordArgs) -> Result<Word, Failure> {
    parse_word(&args.word, args.compact)
}

fn parse_pattern(text: &str) -> Result<Pattern, Failure> {
    text.parse()
        .map_err(|e: Error| Failure::input(e.to_string()))
}

fn threads_from_env() -> Result<Option<usize>, Failure> {
    match std::env::var("UREP_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t >= 1 => Ok(Some(t)),
            _ => Err(Failure::usage(format!(
                "UREP_THREADS must be a positive integer, got {v:?}"
            ))),
        },
        Err(_) => Ok(None),
    }
}

fn cmd_represent(args: cli::RepresentArgs) -> Outcome {
    let pattern = parse_pattern(&args.pattern)?;
    let graph = load_graph(&args.graph)?;
    if pattern.len() < 3 {
        return Err(Failure::usage(format!(
            "pattern {pattern} has length 2 and has no universal construction; \
             use `urep search --pattern {pattern} --max-len <L>` instead"
        )));
    }
    let (word, trace) = construct(&graph, &pattern)?;
    let mut out = format!("{word}\n");
    if args.trace {
        writeln!(out, "{}", trace.plan).unwrap();
        for (t, step) in trace.steps.iter().enumerate() {
            writeln!(
                out,
                "step {}: remove ({},{}) prefix_len={} total_len={}",
                t + 1,
                step.removed.0,
                step.removed.1,
                step.prefix.len(),
                step.cumulative_len
            )
            .unwrap();
        }
    }
    Ok((out, ExitStatus::Success))
}

fn cmd_verify(args: cli::VerifyArgs) -> Outcome {
    let pattern = parse_pattern(&args.pattern)?;
    let graph = load_graph(&args.graph)?;
    let word = load_word(&args.word)?;
    let report = verify(&word, &graph, &pattern)?;
    if report.ok {
        return Ok(("ok\n".into(), ExitStatus::Success));
    }
    let mut out = String::new();
    for v in &report.violations {
        writeln!(out, "{v}").unwrap();
    }
    Ok((out, ExitStatus::Failed))
}

fn is_twelve(pattern: &Pattern) -> bool {
    pattern.len() == 2 && pattern.letters()[0] != pattern.letters()[1]
}

fn describe(outcome: &SearchOutcome) -> String {
    match &outcome.found {
        Some(word) => word.to_string(),
        None => format!("none within budget {}", outcome.budget),
    }
}

fn cmd_search(args: cli::SearchArgs) -> Outcome {
    let pattern = parse_pattern(&args.pattern)?;
    let graph = load_graph(&args.graph)?;
    let n = graph.n() as usize;
    let max_len = match args.max_len {
        Some(l) => l,
        None if is_twelve(&pattern) => 2 * n,
        None => {
            return Err(Failure::usage(format!(
                "--max-len is required for pattern {pattern} (a default exists only for 12 and 21)"
            )))
        }
    };
    let mut cfg = SearchConfig::new(max_len).with_threads(threads_from_env()?);
    cfg.labeling_sweep = args.all_labelings;

    let note_bound = || {
        if is_twelve(&pattern) && max_len >= 2 * n {
            eprintln!(
                "note: `none` is relative to the budget; it is conclusive only through the \
                 known 2n upper bound on shortest {pattern}-representing words"
            );
        }
    };

    if cfg.labeling_sweep {
        let sweep = classify_labelings(&graph, &pattern, &cfg)?;
        let mut out = String::new();
        let mut any = false;
        for (labeling, outcome) in &sweep {
            any |= outcome.found.is_some();
            let labels: Vec<String> = labeling.iter().map(|l| l.to_string()).collect();
            writeln!(out, "labeling {}: {}", labels.join(" "), describe(outcome)).unwrap();
        }
        if sweep.iter().any(|(_, o)| o.found.is_none()) {
            note_bound();
        }
        let status = if any {
            ExitStatus::Success
        } else {
            ExitStatus::Failed
        };
        return Ok((out, status));
    }

    let outcome = find_representation(&graph, &pattern, &cfg)?;
    let status = if outcome.found.is_some() {
        ExitStatus::Success
    } else {
        note_bound();
        ExitStatus::Failed
    };
    Ok((format!("{}\n", describe(&outcome)), status))
}

fn cmd_transform(args: cli::TransformArgs) -> Outcome {
    let need_word = |args: &cli::TransformArgs| -> Result<Word, Failure> {
        match &args.word {
            Some(text) => parse_word(text, args.compact),
            None => Err(Failure::usage("this operation needs --word")),
        }
    };
    let out = match args.op {
        TransformOp::Reverse => format!("{}\n", need_word(&args)?.reverse()),
        TransformOp::Complement => {
            let word = need_word(&args)?;
            let Some(n) = args.n else {
                return Err(Failure::usage("complement needs --n (the alphabet size)"));
            };
            format!("{}\n", word.complement(n)?)
        }
        TransformOp::Supplement => {
            let Some(path) = &args.graph else {
                return Err(Failure::usage("supplement needs --graph"));
            };
            read_graph(path, args.format)?.supplement().to_edge_list()
        }
    };
    Ok((out, ExitStatus::Success))
}

fn cmd_matches(args: cli::MatchesArgs) -> Outcome {
    let pattern = parse_pattern(&args.pattern)?;
    let word = load_word(&args.word)?;
    Ok((
        format!("{}\n", find_matches(&word, &pattern)),
        ExitStatus::Success,
    ))
}
