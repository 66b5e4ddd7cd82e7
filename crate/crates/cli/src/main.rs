//! `cgraph`: spectra, parameters and verification for C-graphs.

mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use cgraph::graphbuild::build_direct;
use cgraph::graphparams::{classify, GraphParams};
use cgraph::oracle::oracle_params;
use cgraph::report::spectrum_report;
use cgraph::seqcore::enumerate;
use cgraph::stats::{enumeration_stats, DEFAULT_ENUMERATE_CAP};
use cgraph::tables::{recompute_clique_table, recompute_distinct_table};
use cgraph::verify::{self, Fault, VerifyConfig};
use cgraph::{CreationSequence, Error};
use clap::{Parser, Subcommand, ValueEnum};

use crate::render::{ClassifyReport, Render};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Debug, Parser)]
#[command(
    name = "cgraph",
    version,
    about = "Exact Laplacian spectra and parameters of C-graphs"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Cross-check closed forms against the brute-force oracles.
    #[arg(long, global = true)]
    oracle: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for sampled verification.
    #[arg(long, default_value_t = 7, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full Laplacian spectrum of one sequence, e.g. `8,3,4,2,1,5,6,3,7,9`.
    Spectrum {
        #[arg(value_parser = parse_sequence, allow_hyphen_values = true)]
        sequence: CreationSequence,
    },
    /// Connectivity, clique number and the inequality checks.
    Params {
        #[arg(value_parser = parse_sequence, allow_hyphen_values = true)]
        sequence: CreationSequence,
    },
    /// Clique number against the last part and the algebraic connectivity.
    Classify {
        #[arg(value_parser = parse_sequence, allow_hyphen_values = true)]
        sequence: CreationSequence,
    },
    /// Recompute one of the two reference tables.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
    },
    /// List every sequence of order N, or summarize them with --stats.
    Enumerate {
        n: usize,
        #[arg(long)]
        stats: bool,
        /// Include odd-length sequences when listing.
        #[arg(long, conflicts_with = "stats")]
        all: bool,
        #[arg(long, default_value_t = DEFAULT_ENUMERATE_CAP)]
        cap: usize,
    },
    /// Run the invariant suite over exhaustive and sampled sequences.
    Verify {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Flip the adjacency of two 0-based vertices in every built graph.
        #[arg(long, hide = true, value_parser = parse_fault)]
        inject_fault: Option<Fault>,
    },
}

fn parse_sequence(text: &str) -> Result<CreationSequence, String> {
    text.parse::<CreationSequence>().map_err(|e| e.to_string())
}

fn parse_fault(text: &str) -> Result<Fault, String> {
    let (u, v) = text.split_once(',').ok_or("expected U,V")?;
    let u = u.trim().parse().map_err(|e| format!("{e}"))?;
    let v = v.trim().parse().map_err(|e| format!("{e}"))?;
    Ok(Fault::FlipEdge(u, v))
}

struct Failed(u8, String);

impl From<Error> for Failed {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::EmptySequence
            | Error::NonPositivePart(_)
            | Error::OrderOverflow
            | Error::Parse(_)
            | Error::OrderTooSmall(_)
            | Error::TooLarge { .. } => 2,
            Error::OddLengthUnsupported(_) => 3,
            _ => 1,
        };
        Failed(code, e.to_string())
    }
}

impl From<io::Error> for Failed {
    fn from(e: io::Error) -> Self {
        Failed(1, e.to_string())
    }
}

fn emit<T: Render>(out: &mut impl Write, value: &T, format: Format) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, value)?;
            writeln!(out)
        }
        Format::Tsv => value.tsv(out),
        Format::Pretty => value.pretty(out),
    }
}

/// Returns whether every check passed.
fn run(cli: &Cli, out: &mut impl Write) -> Result<bool, Failed> {
    let format = cli.format;
    match &cli.command {
        Command::Spectrum { sequence } => {
            let report = spectrum_report(sequence, cli.oracle)?;
            emit(out, &report, format)?;
            Ok(report.oracle_agrees != Some(false))
        }
        Command::Params { sequence } => {
            let oracle = if cli.oracle {
                Some(oracle_params(build_direct(sequence)?.graph())?)
            } else {
                None
            };
            let params = GraphParams::compute(sequence, oracle.as_ref())?;
            emit(out, &params, format)?;
            Ok(params.all_pass())
        }
        Command::Classify { sequence } => {
            let report = ClassifyReport::new(sequence, classify(sequence)?);
            emit(out, &report, format)?;
            Ok(true)
        }
        Command::Table { which: 1 } => {
            emit(out, &recompute_distinct_table()?, format)?;
            Ok(true)
        }
        Command::Table { .. } => {
            emit(out, &recompute_clique_table()?, format)?;
            Ok(true)
        }
        Command::Enumerate {
            n,
            stats: true,
            cap,
            ..
        } => {
            let stats = enumeration_stats(*n, *cap, cli.oracle)?;
            emit(out, &stats, format)?;
            Ok(stats.count == stats.expected_count)
        }
        Command::Enumerate { n, all, cap, .. } => {
            if *n > *cap {
                return Err(Error::TooLarge { n: *n, cap: *cap }.into());
            }
            for s in enumerate(*n, !*all)? {
                match format {
                    Format::Json => {
                        writeln!(out, "{}", serde_json::to_string(&s).expect("plain list"))?
                    }
                    _ => writeln!(out, "{s}")?,
                }
            }
            Ok(true)
        }
        Command::Verify {
            max_n,
            samples,
            inject_fault,
        } => {
            let config = VerifyConfig {
                max_n: *max_n,
                samples: *samples,
                seed: cli.seed,
                fault: *inject_fault,
                ..VerifyConfig::default()
            };
            let report = verify::run(&config)?;
            emit(out, &report, format)?;
            Ok(report.passed())
        }
    }
}

fn execute(cli: &Cli, out: &mut impl Write, err: &mut impl Write) -> u8 {
    let result = run(cli, out);
    let flushed = out.flush();
    match result {
        Ok(true) if flushed.is_ok() => 0,
        Ok(_) => 1,
        Err(Failed(code, msg)) => {
            let _ = writeln!(err, "cgraph: {msg}");
            code
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("cgraph: {e}");
            return ExitCode::from(2);
        }
    }
    let mut out = io::BufWriter::new(io::stdout().lock());
    ExitCode::from(execute(&cli, &mut out, &mut io::stderr()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cgraph(args: &[&str]) -> (u8, String, String) {
        let cli = match Cli::try_parse_from(std::iter::once("cgraph").chain(args.iter().copied())) {
            Ok(cli) => cli,
            Err(e) => return (e.exit_code() as u8, String::new(), e.to_string()),
        };
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = execute(&cli, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    fn json(args: &[&str]) -> serde_json::Value {
        let (code, out, err) = cgraph(args);
        assert_eq!(code, 0, "{err}");
        serde_json::from_str(&out).unwrap()
    }

    #[test]
    fn spectrum_examples() {
        let v = json(&["spectrum", "21,3"]);
        assert_eq!(v["distinct"], serde_json::json!([0, 21, 24]));
        assert_eq!(v["m"], 3);
        let v = json(&["spectrum", "8,3,4,2,1,5,6,3,7,9", "--oracle"]);
        assert_eq!(
            v["quotient_eigs"],
            serde_json::json!([0, 9, 12, 17, 19, 30, 34, 35, 41, 48])
        );
        assert_eq!(v["oracle_agrees"], true);
        assert_eq!(
            json(&["spectrum", "1,1"])["distinct"],
            serde_json::json!([0, 2])
        );
        let v = json(&["spectrum", "3,1,2"]);
        assert_eq!(v["path"], "oracle-path");
        assert_eq!(v["quotient_eigs"], serde_json::Value::Null);
    }

    #[test]
    fn params_examples() {
        let v = json(&["params", "14,9,4,16"]);
        assert_eq!(
            (v["omega"].clone(), v["a"].clone(), v["class"].clone()),
            (16.into(), 16.into(), "Zero".into())
        );
        let v = json(&["params", "8,3,2,15", "--oracle"]);
        assert_eq!(
            (v["omega"].clone(), v["a"].clone(), v["kappa"].clone()),
            (10.into(), 13.into(), 13.into())
        );
        assert_eq!(v["class"], "Minus");
        let v = json(&["params", "24,33"]);
        assert_eq!((v["omega"].clone(), v["a"].clone()), (25.into(), 24.into()));
        assert_eq!(
            (v["class"].clone(), v["verdict"].clone()),
            ("Minus".into(), "Plus".into())
        );

        let (code, out, _) = cgraph(&["params", "14,9,4,16", "--format", "tsv"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(
            lines[0],
            "sequence\tn\tk\ta\tkappa\tkappa_prime\tdelta\tomega\tm\tclass"
        );
        assert_eq!(lines[1], "14,9,4,16\t43\t4\t16\t-\t-\t19\t16\t7\tZero");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(cgraph(&["spectrum", "3,0"]).0, 2);
        assert_eq!(cgraph(&["spectrum", "x"]).0, 2);
        assert_eq!(cgraph(&["spectrum", "-1,2"]).0, 2);
        assert_eq!(cgraph(&["spectrum", ""]).0, 2);
        assert_eq!(cgraph(&["table", "3"]).0, 2);
        assert_eq!(cgraph(&["bogus"]).0, 2);
        let (code, out, err) = cgraph(&["params", "3,1,2"]);
        assert_eq!((code, out.as_str()), (3, ""));
        assert!(err.contains("even number of parts"), "{err}");
        assert_eq!(cgraph(&["classify", "1,2,3"]).0, 3);
        assert_eq!(cgraph(&["enumerate", "1", "--stats"]).0, 2);
        assert_eq!(cgraph(&["enumerate", "27", "--stats"]).0, 2);
    }

    #[test]
    fn classify_reports_both_comparisons() {
        let v = json(&["classify", "8,3,2,15"]);
        assert_eq!(
            (v["class"].clone(), v["verdict"].clone()),
            ("Minus".into(), "Minus".into())
        );
        assert_eq!(v["consistent"], true);
        let (code, out, _) = cgraph(&["classify", "24,33", "--format", "pretty"]);
        assert_eq!(code, 0);
        assert!(out.contains("-> Plus (>)"), "{out}");
    }

    #[test]
    fn tables() {
        let v = json(&["table", "1"]);
        let rows = v.as_array().unwrap();
        assert_eq!(rows.len(), 10);
        let flagged: Vec<u64> = rows
            .iter()
            .filter(|r| r["distinct_status"] == "FLAG" || r["m_status"] == "FLAG")
            .map(|r| r["row"].as_u64().unwrap())
            .collect();
        assert_eq!(flagged, vec![7]);

        let v = json(&["table", "2"]);
        let rows = v.as_array().unwrap();
        assert_eq!(
            (
                rows[3]["printed_omega"].clone(),
                rows[3]["computed_omega"].clone()
            ),
            (65.into(), 67.into())
        );
        assert_eq!(rows[3]["omega_status"], "FLAG");
        assert_eq!(
            (
                rows[8]["computed_omega"].clone(),
                rows[8]["computed_a"].clone()
            ),
            (47.into(), 20.into())
        );
        assert_eq!(rows[8]["comparison_status"], "MATCH");

        let (_, out, _) = cgraph(&["table", "2", "--format", "tsv"]);
        assert_eq!(out.lines().count(), 11);
        assert!(out.lines().nth(4).unwrap().contains("\t65\t67\t67\tFLAG\t"));
    }

    #[test]
    fn enumerate_examples() {
        let v = json(&["enumerate", "12", "--stats"]);
        assert_eq!(v["count"], 1024);
        let v = json(&["enumerate", "4", "--stats"]);
        assert_eq!(v["count"], 4);
        assert_eq!(
            v["max_omega"],
            serde_json::json!({"value": 4, "sequence": [3, 1]})
        );
        let (code, out, _) = cgraph(&["enumerate", "5", "--format", "tsv"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "1,1,1,2\n1,1,2,1\n1,2,1,1\n1,4\n2,1,1,1\n2,3\n3,2\n4,1\n"
        );
        let (_, out, _) = cgraph(&["enumerate", "4", "--all"]);
        assert_eq!(out.lines().count(), 8);
    }

    #[test]
    fn verify_passes_and_catches_faults() {
        let (code, out, _) = cgraph(&["verify", "--max-n", "8", "--samples", "20", "--seed", "3"]);
        assert_eq!(code, 0);
        let report: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(report["exhaustive"], 127);
        assert_eq!(report["failures"], serde_json::json!([]));
        let (_, again, _) = cgraph(&["verify", "--max-n", "8", "--samples", "20", "--seed", "3"]);
        assert_eq!(again, out);

        let (code, out, _) = cgraph(&[
            "verify",
            "--max-n",
            "6",
            "--samples",
            "0",
            "--inject-fault",
            "0,1",
        ]);
        assert_eq!(code, 1);
        let report: serde_json::Value = serde_json::from_str(&out).unwrap();
        let names: Vec<&str> = report["failures"]
            .as_array()
            .unwrap()
            .iter()
            .map(|f| f["invariant"].as_str().unwrap())
            .collect();
        assert!(names.contains(&"build_equivalence") && names.contains(&"spectrum_oracle"));
    }

    #[test]
    fn json_round_trips() {
        for args in [
            &["spectrum", "6,13,8,8"][..],
            &["params", "5,1,6,12"],
            &["table", "2"],
            &["enumerate", "6", "--stats"],
        ] {
            let (_, out, _) = cgraph(args);
            let v: serde_json::Value = serde_json::from_str(&out).unwrap();
            let again: serde_json::Value =
                serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
            assert_eq!(v, again);
        }
    }

    #[test]
    fn pretty_output_renders() {
        for args in [
            &["spectrum", "4,7,5,8"][..],
            &["params", "4,7,5,8", "--oracle"],
            &["table", "1"],
            &["enumerate", "6", "--stats"],
        ] {
            let mut a = args.to_vec();
            a.extend(["--format", "pretty"]);
            let (code, out, _) = cgraph(&a);
            assert_eq!(code, 0);
            assert!(!out.is_empty());
        }
    }
}
