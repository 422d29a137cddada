//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails
//! (a non-sum-free input, a failed inequality), 2 for usage and parse errors.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{self, check_extremal_containment, lemma_report, trace_theorem1, Check};
use crate::discrete::{self, SearchConfig};
use crate::error::Error;
use crate::generate::random_sum_free;
use crate::rational::{format_rational, to_decimal, Rational};
use crate::set::IntervalSet;
use crate::sumfree::{construct_extremal, forbidden_set, sum_free_witness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "sumfree", version, about = "Exact tools for k-sum-free sets of rationals and integers")]
struct Cli {
    #[command(flatten)]
    output: OutputArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Human-readable text or one tab-separated record per line.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Append a rounded decimal approximation with this many digits
    /// (convenience only; exact rationals remain authoritative).
    #[arg(long, value_name = "D", global = true)]
    decimal: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact Lebesgue measure of a set.
    Measure { set: String },
    /// Tests whether a set is k-sum-free and prints a witness if not.
    Verify {
        #[arg(long, short)]
        k: u32,
        set: String,
    },
    /// Prints A0 or one of A1..A7.
    Construct { name: String },
    /// Prints (1/3)(A+A) ∪ (3A − A).
    Forbidden { set: String },
    /// Evaluates every applicable lemma bound.
    Lemmas {
        #[arg(long)]
        rescale: bool,
        set: String,
    },
    /// Traces the 77/177 upper-bound argument on a set.
    Trace {
        #[arg(long)]
        rescale: bool,
        set: String,
    },
    /// Checks whether an optimal set lies inside one of A1..A7.
    Extremal { set: String },
    /// Searches for a large 3-sum-free union of at most M intervals.
    Optimize {
        #[arg(short)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200_000)]
        iters: u64,
        #[arg(long, default_value_t = 8)]
        chains: usize,
    },
    /// Exhaustive searches over subsets of {1..n}.
    Discrete {
        #[command(subcommand)]
        command: DiscreteCommand,
    },
    /// Generates a random 3-sum-free set.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        components: usize,
    },
    /// Exhaustive maximum density next to the asymptotic formula.
    Density {
        #[arg(short)]
        k: u32,
        #[arg(short)]
        n: u32,
        #[arg(long, default_value_t = discrete::DEFAULT_BUDGET)]
        budget: u32,
    },
}

#[derive(Debug, Subcommand)]
enum DiscreteCommand {
    /// Maximum k-sum-free subsets of {1..n}.
    Max {
        #[arg(short)]
        n: u32,
        #[arg(short)]
        k: u32,
        /// List every extremal set (up to --cap).
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = discrete::DEFAULT_BUDGET)]
        budget: u32,
        #[arg(long, default_value_t = discrete::DEFAULT_STORE_CAP)]
        cap: usize,
    },
}

struct Printer<'a> {
    out: &'a mut dyn Write,
    format: Format,
    decimal: Option<usize>,
}

impl Printer<'_> {
    fn records(&self) -> bool {
        self.format == Format::Records
    }

    /// Exact text, plus a marked approximation when `--decimal` is set.
    fn q(&self, x: &Rational) -> String {
        match self.decimal {
            Some(d) if !self.records() => format!("{} (~{})", format_rational(x), to_decimal(x, d)),
            Some(d) => format!("{}\t~{}", format_rational(x), to_decimal(x, d)),
            None => format_rational(x),
        }
    }

    fn line(&mut self, s: impl AsRef<str>) -> std::io::Result<()> {
        writeln!(self.out, "{}", s.as_ref())
    }

    fn value(&mut self, name: &str, x: &Rational) -> std::io::Result<()> {
        let v = self.q(x);
        if self.records() {
            self.line(format!("value\t{name}\t{v}"))
        } else {
            self.line(format!("{name:<10} {v}"))
        }
    }

    fn set(&mut self, name: &str, s: &IntervalSet) -> std::io::Result<()> {
        if self.records() {
            self.line(format!("set\t{name}\t{s}"))
        } else {
            self.line(format!("{name:<10} {s}"))
        }
    }

    fn check(&mut self, c: &Check) -> std::io::Result<()> {
        let verdict = if c.pass { "pass" } else { "FAIL" };
        let (lhs, rhs) = (self.q(&c.lhs), self.q(&c.rhs));
        if self.records() {
            self.line(format!("check\t{}\t{lhs}\t{}\t{rhs}\t{}", c.name, c.relation.symbol(), verdict.to_lowercase()))
        } else {
            self.line(format!("{verdict:<5} {}: {lhs} {} {rhs}", c.name, c.relation.symbol()))
        }
    }
}

/// Runs the CLI on `args` (including the program name). `stdin` backs the
/// `-` / `@-` set argument.
pub fn run(args: &[String], stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut printer = Printer { out: stdout, format: cli.output.format, decimal: cli.output.decimal };
    match execute(cli.command, stdin, &mut printer) {
        Ok(code) => code,
        Err(Failure::Error(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::NotSumFree { .. } => EXIT_CHECK_FAILED,
                _ => EXIT_USAGE,
            }
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum Failure {
    Error(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn read_set(arg: &str, stdin: &mut dyn Read) -> Result<IntervalSet, Failure> {
    let text = if arg == "-" || arg == "@-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        s
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path)?
    } else {
        arg.to_string()
    };
    Ok(text.parse()?)
}

fn verdict_code(pass: bool) -> i32 {
    if pass {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn execute(command: Command, stdin: &mut dyn Read, p: &mut Printer<'_>) -> Result<i32, Failure> {
    match command {
        Command::Measure { set } => {
            let set = read_set(&set, stdin)?;
            let m = p.q(&set.measure());
            if p.records() {
                p.line(format!("value\tmeasure\t{m}"))?;
            } else {
                p.line(m)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { k, set } => {
            if k == 0 {
                return Err(Error::Precondition("k must be positive".into()).into());
            }
            let set = read_set(&set, stdin)?;
            let witness = sum_free_witness(&set, k);
            match (&witness, p.records()) {
                (None, true) => p.line(format!("verdict\tk={k}\tsum_free"))?,
                (None, false) => p.line(format!("{k}-sum-free: yes"))?,
                (Some(w), true) => p.line(format!(
                    "verdict\tk={k}\tnot_sum_free\t{}\t{}\t{}",
                    format_rational(&w.x),
                    format_rational(&w.y),
                    format_rational(&w.z)
                ))?,
                (Some(w), false) => {
                    p.line(format!("{k}-sum-free: no"))?;
                    p.line(format!("witness: {w}"))?;
                }
            }
            Ok(verdict_code(witness.is_none()))
        }
        Command::Construct { name } => {
            let index = name
                .strip_prefix(['a', 'A'])
                .and_then(|i| i.parse::<usize>().ok())
                .ok_or_else(|| Error::Precondition(format!("expected a0..a7, got `{name}`")))?;
            let set = construct_extremal(index)?;
            if p.records() {
                p.set(&format!("a{index}"), &set)?;
            } else {
                p.line(set.to_string())?;
            }
            Ok(EXIT_OK)
        }
        Command::Forbidden { set } => {
            let set = read_set(&set, stdin)?;
            let forbidden = forbidden_set(&set)?;
            let clash = forbidden.intersect(&set);
            if p.records() {
                p.set("forbidden", &forbidden)?;
                p.set("overlap", &clash)?;
            } else {
                p.line(forbidden.to_string())?;
            }
            Ok(EXIT_OK)
        }
        Command::Lemmas { rescale, set } => {
            let set = read_set(&set, stdin)?;
            let report = lemma_report(&set, rescale)?;
            if report.rescaled {
                p.set("rescaled", &report.set)?;
            }
            p.value("a", &report.context.a)?;
            p.value("eps1", &report.context.eps1)?;
            p.value("eps2", &report.context.eps2)?;
            for c in &report.checks {
                p.check(c)?;
            }
            for s in &report.skipped {
                if p.records() {
                    p.line(format!("skip\t{s}"))?;
                } else {
                    p.line(format!("skip  {s}"))?;
                }
            }
            Ok(verdict_code(report.all_pass()))
        }
        Command::Trace { rescale, set } => {
            let set = read_set(&set, stdin)?;
            let t = trace_theorem1(&set, rescale)?;
            if t.rescaled {
                p.set("rescaled", &t.set)?;
            }
            if p.records() {
                p.line(format!("case\t{}", t.case.label()))?;
            } else {
                p.line(format!("{:<10} {}", "case", t.case.label()))?;
            }
            p.value("mu(A)", &t.set.measure())?;
            p.value("a", &t.context.a)?;
            p.value("eps1", &t.context.eps1)?;
            p.value("eps2", &t.context.eps2)?;
            p.set("R", &t.lower_block)?;
            for (name, x) in [("r", &t.r), ("eta1", &t.eta1), ("eta2", &t.eta2)] {
                if let Some(x) = x {
                    p.value(name, x)?;
                }
            }
            if let Some(core) = &t.lower_core {
                p.set("R0", core)?;
            }
            if let Some(b) = &t.b {
                p.value("b", b)?;
            }
            for (name, s) in &t.internal_sets {
                p.set(name, s)?;
            }
            for c in &t.checks {
                p.check(c)?;
            }
            p.value("bound", &t.final_bound)?;
            Ok(verdict_code(t.all_pass()))
        }
        Command::Extremal { set } => {
            let set = read_set(&set, stdin)?;
            let r = check_extremal_containment(&set)?;
            let containers: Vec<String> = r.containers.iter().map(|i| i.to_string()).collect();
            if p.records() {
                p.line(format!("extremal\t{}", r.is_extremal))?;
                p.line(format!("containers\t{}", containers.join(",")))?;
            } else {
                p.line(format!("extremal:   {}", if r.is_extremal { "yes" } else { "no" }))?;
                if r.is_extremal {
                    p.line(format!("containers: {}", containers.join(",")))?;
                }
            }
            if let Some(d) = &r.symmetric_difference {
                p.value("mu(A sym A0)", d)?;
            }
            Ok(verdict_code(!r.violation))
        }
        Command::Optimize { m, seed, iters, chains } => {
            if m == 0 {
                return Err(Error::Precondition("m must be at least 1".into()).into());
            }
            let mut config = bounds::OptimizeConfig::new(m, seed, iters);
            config.chains = chains;
            let r = bounds::optimize_with(&config);
            p.set("best", &r.best)?;
            p.value("measure", &r.measure)?;
            Ok(EXIT_OK)
        }
        Command::Discrete { command: DiscreteCommand::Max { n, k, all, budget, cap } } => {
            let config = SearchConfig { budget, store_cap: cap, ..SearchConfig::default() };
            let r = discrete::max_k_sum_free(n, k, all, &config)?;
            let fields = [
                ("n", r.n.to_string()),
                ("k", r.k.to_string()),
                ("max_size", r.max_size.to_string()),
                ("extremal_count", r.extremal_count.to_string()),
                ("nodes_explored", r.nodes_explored.to_string()),
            ];
            for (name, v) in fields {
                if p.records() {
                    p.line(format!("value\t{name}\t{v}"))?;
                } else {
                    p.line(format!("{name:<15} {v}"))?;
                }
            }
            for s in r.extremal_sets.iter().flatten() {
                if p.records() {
                    p.line(format!("extremal_set\t{s}"))?;
                } else {
                    p.line(s.to_string())?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Gen { seed, components } => {
            let g = random_sum_free(seed, components);
            if p.records() {
                p.set("generated", &g.set)?;
                p.line(format!("converged\t{}", g.converged))?;
            } else {
                p.line(g.set.to_string())?;
            }
            Ok(EXIT_OK)
        }
        Command::Density { k, n, budget } => {
            let config = SearchConfig { budget, ..SearchConfig::default() };
            let r = discrete::density_report(k, n, &config)?;
            if p.records() {
                p.line(format!("value\tmax_size\t{}", r.max_size))?;
            } else {
                p.line(format!("{:<10} {}", "max_size", r.max_size))?;
            }
            p.value("ratio", &r.ratio)?;
            p.value("cg_density", &r.cg_density)?;
            Ok(EXIT_OK)
        }
    }
}
