use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sumset_core::bounds::bound_catalogue;
use sumset_core::reproduce::{run_target, TARGETS};
use sumset_core::search::{
    random_probe, sweep, sweep_to_csv, BoundChoice, Emit, Filter, SearchSpace, SweepOptions,
    CSV_HEADER, DEFAULT_BUDGET,
};
use sumset_core::verify::{
    check_ap_theorem, check_direct, check_inverse, check_lemma_decomposition,
    check_partial_inverse_conditions, check_restricted, check_special_direct, check_universal,
};
use sumset_core::{compute_sumset, make_set, Error, Family, IntegerSet, Operator, Verdict};

/// Compute restricted signed sumsets and check lower bounds on their size.
#[derive(Parser)]
#[command(name = "sumset", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute hA, h^A, h+-A or h^+-A for one set.
    Sumset {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long)]
        h: usize,
        #[arg(long, default_value = "restricted-signed")]
        op: Operator,
        /// Print every sum, not just the cardinality.
        #[arg(long)]
        full: bool,
        #[arg(long)]
        json: bool,
    },
    /// Every bound that depends only on (h, k).
    Bounds {
        #[arg(long)]
        h: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check one statement about one set.
    Check {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long)]
        h: usize,
        #[arg(long, value_enum)]
        theorem: Theorem,
        /// First term, for `--theorem ap`.
        #[arg(long, allow_negative_numbers = true)]
        a1: Option<i64>,
        /// Common difference, for `--theorem ap`.
        #[arg(long, allow_negative_numbers = true)]
        d: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustively evaluate every set of a search space.
    Sweep {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, default_value = "conjectured")]
        bound: BoundChoice,
        #[arg(long)]
        filter: Option<Filter>,
        /// Skip sets whose elements share a common factor.
        #[arg(long)]
        primitive_only: bool,
        /// Which records to emit with `--csv` or `--json`.
        #[arg(long, default_value = "notable")]
        records: Emit,
        /// Stream records as CSV on stdout; the summary goes to stderr.
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
        /// Largest number of candidate sets to enumerate.
        #[arg(long, env = "SUMSET_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Evaluate random sets of a search space.
    Probe {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Run one of the built-in verification targets.
    Reproduce {
        #[arg(value_name = "TARGET", help = target_help())]
        target: String,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

fn target_help() -> String {
    format!("One of: {}", TARGETS.join(", "))
}

#[derive(Args)]
struct SetArgs {
    /// Comma-separated integers.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "set_file")]
    set: Option<String>,
    /// File with one integer per line.
    #[arg(long)]
    set_file: Option<PathBuf>,
}

#[derive(Args)]
struct SpaceArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    h: usize,
    /// Largest element M.
    #[arg(long)]
    max: i64,
    #[arg(long, default_value = "positive")]
    family: Family,
}

impl SpaceArgs {
    fn space(&self) -> SearchSpace {
        SearchSpace::new(self.k, self.h, self.max, self.family)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    Direct,
    Inverse,
    Universal,
    LemmaDecomposition,
    PartialInverse,
    SpecialDirect,
    Ap,
    Restricted,
}

/// Usage and hypothesis failures; always exit 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

impl From<io::Error> for Usage {
    fn from(e: io::Error) -> Self {
        Usage(e.to_string())
    }
}

enum Outcome {
    Verified,
    Counterexample(Vec<IntegerSet>),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Verified) => ExitCode::SUCCESS,
        Ok(Outcome::Counterexample(sets)) => {
            for set in &sets {
                println!("counterexample: {set}");
                println!("{}", json!({ "counterexample": set }));
            }
            ExitCode::from(1)
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_set(args: &SetArgs) -> Result<IntegerSet, Usage> {
    let raw = match (&args.set, &args.set_file) {
        (Some(s), _) => s.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Usage(format!("{}: {e}", path.display())))?
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect::<Vec<_>>()
            .join(","),
        (None, None) => return Err(Usage("a set is required (--set or --set-file)".into())),
    };
    let elements = raw
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<i64>()
                .map_err(|_| Usage(format!("not an integer: '{t}'")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(make_set(&elements)?)
}

fn join(xs: &[i64]) -> String {
    xs.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

/// One `key: value` line per top-level field.
fn print_plain(value: &Value) {
    let Value::Object(map) = value else {
        println!("{value}");
        return;
    };
    for (key, v) in map {
        println!("{key}: {}", inline(v));
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(inline).collect::<Vec<_>>().join(","),
        Value::Object(map) => format!(
            "({})",
            map.iter()
                .map(|(k, v)| format!("{k}={}", inline(v)))
                .collect::<Vec<_>>()
                .join(" ")
        ),
        other => other.to_string(),
    }
}

fn print_value(value: &Value, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("serializable")
        );
    } else {
        print_plain(value);
    }
}

fn verdict<T: Verdict + serde::Serialize>(report: T, json: bool) -> Outcome {
    print_value(&serde_json::to_value(&report).expect("serializable"), json);
    if report.is_counterexample() {
        Outcome::Counterexample(vec![report.subject().clone()])
    } else {
        Outcome::Verified
    }
}

/// Equality cases outside the family's predicted extremal structure.
fn off_family(equality: &[IntegerSet], family: Family) -> Vec<IntegerSet> {
    equality
        .iter()
        .filter(|s| {
            s.classify_structure()
                .map_or(true, |c| c.kind != family.extremal_kind())
        })
        .cloned()
        .collect()
}

fn run(command: Command) -> Result<Outcome, Usage> {
    match command {
        Command::Sumset {
            set,
            h,
            op,
            full,
            json,
        } => {
            let set = read_set(&set)?;
            let result = compute_sumset(&set, h, op)?;
            if json {
                print_value(&result.to_json(full), true);
            } else {
                println!("operator: {op}");
                println!("h: {h}");
                println!("set: {set}");
                println!("cardinality: {}", result.cardinality);
                println!("min: {}", result.min_sum);
                println!("max: {}", result.max_sum);
                if full {
                    println!("sums: {}", join(&result.sums));
                }
            }
            Ok(Outcome::Verified)
        }
        Command::Bounds { h, k, json } => {
            let catalogue = bound_catalogue(h, k);
            if json {
                print_value(&json!({ "h": h, "k": k, "bounds": catalogue }), true);
            } else {
                let width = catalogue.iter().map(|e| e.name.len()).max().unwrap_or(0);
                for e in &catalogue {
                    let value = e.value.map_or("n/a".to_string(), |v| v.to_string());
                    println!(
                        "{:width$}  {:>6}  [{}; {}]",
                        e.name, value, e.window, e.hypothesis
                    );
                }
            }
            Ok(Outcome::Verified)
        }
        Command::Check {
            set,
            h,
            theorem,
            a1,
            d,
            json,
        } => {
            if let Theorem::Ap = theorem {
                let (Some(a1), Some(d)) = (a1, d) else {
                    return Err(Usage("--theorem ap needs --a1 and --d".into()));
                };
                return Ok(verdict(check_ap_theorem(a1, d, h)?, json));
            }
            let set = read_set(&set)?;
            Ok(match theorem {
                Theorem::Direct => verdict(check_direct(&set, h)?, json),
                Theorem::Inverse => verdict(check_inverse(&set, h)?, json),
                Theorem::Universal => verdict(check_universal(&set, h)?, json),
                Theorem::LemmaDecomposition => verdict(check_lemma_decomposition(&set, h)?, json),
                Theorem::PartialInverse => {
                    verdict(check_partial_inverse_conditions(&set, h)?, json)
                }
                Theorem::SpecialDirect => verdict(check_special_direct(&set, h)?, json),
                Theorem::Restricted => verdict(check_restricted(&set, h)?, json),
                Theorem::Ap => unreachable!(),
            })
        }
        Command::Sweep {
            space,
            bound,
            filter,
            primitive_only,
            records,
            csv,
            json,
            budget,
            threads,
        } => {
            let mut space = space
                .space()
                .with_bound(bound)
                .primitive_only(primitive_only);
            if let Some(f) = filter {
                space = space.with_filter(f);
            }
            let options = SweepOptions {
                budget,
                threads,
                emit: records,
            };
            let summary = if csv {
                let stdout = io::stdout();
                let mut out = io::BufWriter::new(stdout.lock());
                let summary = sweep_to_csv(&space, &options, &mut out)??;
                out.flush()?;
                eprintln!("{summary}");
                summary
            } else if json {
                let mut kept = Vec::new();
                let summary = sweep(&space, &options, |r| kept.push(r.clone()))?;
                let mut value = serde_json::to_value(&summary).expect("serializable");
                value["records"] = serde_json::to_value(&kept).expect("serializable");
                value["csv_header"] = Value::from(CSV_HEADER);
                print_value(&value, true);
                summary
            } else {
                let summary = sweep(&space, &options, |_| {})?;
                println!("{summary}");
                summary
            };
            Ok(if summary.found_counterexample() {
                let mut sets: Vec<IntegerSet> =
                    summary.violations.iter().map(|r| r.set.clone()).collect();
                sets.extend(off_family(&summary.equality_sets, space.family));
                Outcome::Counterexample(sets)
            } else {
                Outcome::Verified
            })
        }
        Command::Probe {
            space,
            seed,
            trials,
            threads,
            json,
        } => {
            let summary = random_probe(&space.space(), trials, seed, threads)?;
            let value = serde_json::to_value(&summary).expect("serializable");
            if json {
                print_value(&value, true);
            } else {
                println!(
                    "space: k={} h={} M={} family={}",
                    space.k, space.h, space.max, space.family
                );
                println!("seed: {seed}");
                println!("trials: {trials}");
                println!("bound: {}", summary.bound_value);
                for key in [
                    "filtered_out",
                    "min_cardinality",
                    "min_slack",
                    "min_slack_sets",
                    "equality_count",
                    "violation_count",
                    "structure_mismatch_count",
                ] {
                    println!("{key}: {}", inline(&value[key]));
                }
            }
            Ok(if summary.found_counterexample() {
                let mut sets: Vec<IntegerSet> =
                    summary.violations.iter().map(|r| r.set.clone()).collect();
                if summary.min_slack == Some(0) {
                    sets.extend(off_family(&summary.min_slack_sets, space.family));
                }
                Outcome::Counterexample(sets)
            } else {
                Outcome::Verified
            })
        }
        Command::Reproduce {
            target,
            threads,
            json,
        } => {
            let table = run_target(&target, threads)?;
            if json {
                let mut value = serde_json::to_value(&table).expect("serializable");
                value["passed"] = Value::from(table.passed());
                print_value(&value, true);
            } else {
                println!("{table}");
            }
            Ok(if table.passed() {
                Outcome::Verified
            } else {
                Outcome::Counterexample(table.offending_sets)
            })
        }
    }
}
