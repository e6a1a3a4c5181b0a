//! Command-line front end.

pub mod format;
pub mod report;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::canon::canonical_form;
use crate::enumerate::{
    enumerate_posets_oracle, generate_31free_with, size_cap, GenerateOptions,
};
use crate::error::Error;
use crate::series::{
    asymptotic_report, b_lbl_counts, b_unl_counts, p_lbl_counts, p_unl_counts, to_decimal,
};
use crate::skeleton::enumerate_skeleta;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SIZE: i32 = 3;
/// `oracle` found a disagreement.
pub const EXIT_MISMATCH: i32 = 4;

const MAX_COUNT_ORDER: usize = 64;
const MAX_ASYMPT_ORDER: usize = 40;
const MAX_SKELETON_LETTERS: usize = 14;

#[derive(Debug, Parser)]
#[command(name = "tanglecount", version, about = "Exact counts and structure of (3+1)-free posets")]
pub struct Cli {
    /// Worker threads for parallel stages; output does not depend on it.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Unlabelled,
    Labelled,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print n, p(n), b(n) for n = 0..=upto.
    Count {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        upto: usize,
        #[arg(long)]
        json: bool,
    },
    /// Report levels, views, parts, skeleton and automorphism count of a poset file (`-` for stdin).
    Analyze {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Write every (3+1)-free poset on n vertices, one record per class.
    Generate {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        out: Option<String>,
        /// Verify that no class is emitted twice.
        #[arg(long)]
        check_duplicates: bool,
    },
    /// Compare constructive generation with brute force and the series.
    Oracle {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        allow_eight: bool,
    },
    /// Count or list skeleta with the given numbers of clone and tangle letters.
    Skeleta {
        #[arg(long)]
        clones: usize,
        #[arg(long)]
        tangles: usize,
        #[arg(long)]
        list: bool,
    },
    /// Ratios p_unl/b_unl, p_lbl/b_lbl and n! b_unl/b_lbl for n = 0..=upto.
    Asympt {
        #[arg(long, default_value_t = crate::series::ASYMPTOTIC_DEFAULT_ORDER)]
        upto: usize,
        #[arg(long, default_value_t = 8)]
        digits: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the command line `args` (program name first) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            } else {
                let _ = err.write_all(text.as_bytes());
                EXIT_USAGE
            };
        }
    };
    let result = match cli.jobs {
        Some(0) => Err(Failure::Usage("--jobs must be positive".into())),
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| dispatch(&cli.command, out, err)),
            Err(e) => Err(Failure::Usage(e.to_string())),
        },
        None => dispatch(&cli.command, out, err),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Lib(e @ Error::Parse { .. }) => (EXIT_PARSE, e.to_string()),
                Failure::Lib(e @ Error::Size { .. }) => (EXIT_SIZE, e.to_string()),
                Failure::Lib(e) => (EXIT_USAGE, e.to_string()),
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Mismatch => return EXIT_MISMATCH,
            };
            let _ = writeln!(err, "tanglecount: {msg}");
            code
        }
    }
}

fn cap(what: &'static str, got: usize, default: usize) -> std::result::Result<(), Error> {
    let max = size_cap(default);
    if got > max {
        return Err(Error::Size { what, got, max });
    }
    Ok(())
}

fn dispatch(cmd: &Command, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Outcome {
    match cmd {
        Command::Count { mode, upto, json } => cmd_count(*mode, *upto, *json, out),
        Command::Analyze { file, json } => cmd_analyze(file, *json, out),
        Command::Generate { n, out: path, check_duplicates } => {
            cmd_generate(*n, path.as_deref(), *check_duplicates, out, err)
        }
        Command::Oracle { n, allow_eight } => cmd_oracle(*n, *allow_eight, out),
        Command::Skeleta { clones, tangles, list } => cmd_skeleta(*clones, *tangles, *list, out),
        Command::Asympt { upto, digits, json } => cmd_asympt(*upto, *digits, *json, out),
    }
}

pub fn cmd_count_rows(mode: Mode, upto: usize) -> crate::error::Result<Vec<(usize, String, String)>> {
    cap("count order", upto, MAX_COUNT_ORDER)?;
    let (p, b) = match mode {
        Mode::Unlabelled => (p_unl_counts(upto), b_unl_counts(upto)),
        Mode::Labelled => (p_lbl_counts(upto)?, b_lbl_counts(upto)),
    };
    Ok((0..=upto).map(|n| (n, p[n].to_string(), b[n].to_string())).collect())
}

fn cmd_count(mode: Mode, upto: usize, json: bool, out: &mut (dyn Write + Send)) -> Outcome {
    let rows = cmd_count_rows(mode, upto)?;
    if json {
        let arr: Vec<_> = rows.iter().map(|(n, p, b)| json!({ "n": n, "p": p, "b": b })).collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&arr).unwrap())?;
    } else {
        for (n, p, b) in rows {
            writeln!(out, "{n}\t{p}\t{b}")?;
        }
    }
    Ok(())
}

fn cmd_analyze(file: &str, json: bool, out: &mut (dyn Write + Send)) -> Outcome {
    let text = if file == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{file}: {e}")))?
    };
    let np = format::parse_poset(&text)?;
    let r = report::analyze(&np);
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&r).unwrap())?;
    } else {
        write!(out, "{r}")?;
    }
    Ok(())
}

fn cmd_generate(
    n: usize,
    path: Option<&str>,
    check_duplicates: bool,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> Outcome {
    let posets = generate_31free_with(n, GenerateOptions { check_duplicates })?;
    let text = format::write_stream(&posets);
    match path {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
            writeln!(err, "wrote {} posets to {path}", posets.len())?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_oracle(n: usize, allow_eight: bool, out: &mut (dyn Write + Send)) -> Outcome {
    let brute: BTreeSet<_> = enumerate_posets_oracle(n, allow_eight)?
        .iter()
        .filter(|p| p.is_31_free())
        .map(canonical_form)
        .collect();
    let built: Vec<_> = generate_31free_with(n, GenerateOptions::default())?
        .iter()
        .map(canonical_form)
        .collect();
    let built_set: BTreeSet<_> = built.iter().cloned().collect();
    let series = p_unl_counts(n)[n].to_string();
    let (b, c) = (brute.len(), built.len());
    if brute == built_set && c == b && series == b.to_string() {
        writeln!(out, "match: {c} = {b}")?;
        return Ok(());
    }
    writeln!(out, "mismatch: constructive {c}, brute force {b}, series {series}")?;
    for f in brute.difference(&built_set) {
        writeln!(out, "- {}", format::write_poset(&crate::canon::poset_from_form(f), None).trim_end().replace('\n', "; "))?;
    }
    for f in built_set.difference(&brute) {
        writeln!(out, "+ {}", format::write_poset(&crate::canon::poset_from_form(f), None).trim_end().replace('\n', "; "))?;
    }
    if c != built_set.len() {
        writeln!(out, "! {} repeated classes", c - built_set.len())?;
    }
    Err(Failure::Mismatch)
}

fn cmd_skeleta(clones: usize, tangles: usize, list: bool, out: &mut (dyn Write + Send)) -> Outcome {
    cap("skeleton letters", clones + tangles, MAX_SKELETON_LETTERS)?;
    let words = enumerate_skeleta(clones, tangles);
    if list {
        for w in &words {
            writeln!(out, "{w}")?;
        }
    } else {
        writeln!(out, "{}", words.len())?;
    }
    Ok(())
}

fn cmd_asympt(upto: usize, digits: usize, json: bool, out: &mut (dyn Write + Send)) -> Outcome {
    cap("asymptotic order", upto, MAX_ASYMPT_ORDER)?;
    let rows = asymptotic_report(upto)?;
    if json {
        let arr: Vec<_> = rows
            .iter()
            .map(|r| {
                json!({
                    "n": r.n,
                    "unl_ratio": r.unl_ratio.to_string(),
                    "lbl_ratio": r.lbl_ratio.to_string(),
                    "sym_ratio": r.sym_ratio.to_string(),
                })
            })
            .collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&arr).unwrap())?;
    } else {
        writeln!(out, "n\tp_unl/b_unl\tp_lbl/b_lbl\tn!b_unl/b_lbl")?;
        for r in rows {
            writeln!(
                out,
                "{}\t{}\t{}\t{}",
                r.n,
                to_decimal(&r.unl_ratio, digits),
                to_decimal(&r.lbl_ratio, digits),
                to_decimal(&r.sym_ratio, digits)
            )?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["tanglecount"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn count_rows() {
        let (code, out, _) = call(&["count", "--mode", "unlabelled", "--upto", "0"]);
        assert_eq!((code, out.as_str()), (0, "0\t1\t1\n"));
        let (_, out, _) = call(&["count", "--mode", "labelled", "--upto", "3"]);
        let p: Vec<&str> = out.lines().map(|l| l.split('\t').nth(1).unwrap()).collect();
        assert_eq!(p, vec!["1", "1", "3", "19"]);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["count", "--mode", "sideways", "--upto", "2"]).0, EXIT_USAGE);
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
        assert_eq!(call(&["count", "--mode", "labelled", "--upto", "65"]).0, EXIT_SIZE);
        assert_eq!(call(&["generate", "-n", "13"]).0, EXIT_SIZE);
        assert_eq!(call(&["analyze", "/nonexistent/file"]).0, EXIT_USAGE);
        assert_eq!(call(&["--jobs", "0", "skeleta", "--clones", "1", "--tangles", "0"]).0, EXIT_USAGE);
    }

    #[test]
    fn skeleta_and_oracle() {
        assert_eq!(call(&["skeleta", "--clones", "1", "--tangles", "1"]).1, "5\n");
        let (_, listed, _) = call(&["skeleta", "--clones", "0", "--tangles", "2", "--list"]);
        assert_eq!(listed, "t12 t12\nt12 t23\nt12 t34\n");
        assert_eq!(call(&["oracle", "-n", "5"]).1, "match: 49 = 49\n");
    }

    #[test]
    fn generate_is_deterministic() {
        let a = call(&["generate", "-n", "4"]).1;
        let b = call(&["--jobs", "1", "generate", "-n", "4"]).1;
        assert_eq!(a, b);
        assert_eq!(a.matches("poset 4").count(), 15);
    }
}
