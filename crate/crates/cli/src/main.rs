use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use coxdepth_core::decomp::{
    selection_factorization, selection_sort_trace, shallow_decomp_traced, Factorization,
};
use coxdepth_core::enumeration::{self, Class, ClassCount, JointPair};
use coxdepth_core::groups::{dihedral_gf, dihedral_gf_by_elements};
use coxdepth_core::oracle::depth_oracle;
use coxdepth_core::verify::run_suite;
use coxdepth_core::{patterns, stats, BiPoly, GroupBackend, GroupKind, Permutation, Suite};

/// Depth, length and reflection length in Coxeter groups.
#[derive(Debug, Parser)]
#[command(name = "coxdepth", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Statistics and class membership of a permutation.
    Stat {
        perm: Permutation,
        #[arg(long, value_enum, default_value_t = OutFormat::Plain)]
        format: OutFormat,
    },
    /// Factor a permutation into transpositions.
    Decompose {
        perm: Permutation,
        #[arg(long, value_enum, default_value_t = Method::Shallow)]
        method: Method,
        /// Also print each sorting step.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = OutFormat::Plain)]
        format: OutFormat,
    },
    /// Exhaustive distribution tables.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long, value_enum, ignore_case = true, default_value_t = Family::A)]
        group: Family,
        #[arg(long)]
        n: Option<usize>,
        /// Dihedral parameter for `--group I2`.
        #[arg(long)]
        m: Option<usize>,
        /// Statistic pair for `table joint`.
        #[arg(long, value_enum, default_value_t = Pair::DepExc)]
        pair: Pair,
        #[arg(long, value_enum, default_value_t = OutFormat::Plain)]
        format: OutFormat,
    },
    /// Run the exhaustive property suites up to size N.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Length/depth generating polynomial of the dihedral group I2(M).
    Dihedral {
        #[arg(long)]
        m: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutFormat {
    Plain,
    Csv,
    Json,
}

impl From<OutFormat> for enumeration::Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Plain => enumeration::Format::Plain,
            OutFormat::Csv => enumeration::Format::Csv,
            OutFormat::Json => enumeration::Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Shallow,
    Selection,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableKind {
    Depth,
    Joint,
    Class,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    A,
    B,
    I2,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Pair {
    DropDes,
    DepExc,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Core,
    Bijection,
    Oracle,
    Patterns,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Core => Suite::Core,
            SuiteArg::Bijection => Suite::Bijection,
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::Patterns => Suite::Patterns,
        }
    }
}

/// Failure modes, mapped to exit codes 1 (a check failed) and 2 (bad input).
enum Failure {
    Check(String),
    Usage(String),
}

impl From<coxdepth_core::Error> for Failure {
    fn from(e: coxdepth_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("coxdepth: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Stat { perm, format } => Ok(stat(&perm, format)),
        Command::Decompose {
            perm,
            method,
            trace,
            format,
        } => Ok(decompose(&perm, method, trace, format)),
        Command::Table {
            kind,
            group,
            n,
            m,
            pair,
            format,
        } => table(kind, group, n, m, pair, format),
        Command::Verify { n, suite } => verify(n, suite.into()),
        Command::Dihedral { m } => dihedral(m),
    }
}

fn stat(w: &Permutation, format: OutFormat) -> String {
    let value = json!({
        "perm": w.to_string(),
        "depth": stats::depth(w),
        "length": stats::length(w),
        "rlength": stats::reflection_length(w),
        "drop": stats::descent_drop(w),
        "des": stats::descents(w),
        "exc": stats::excedances(w),
        "fc": patterns::is_fc(w),
        "boolean": patterns::is_boolean(w),
        "free": patterns::is_free(w),
    });
    match format {
        OutFormat::Json => format!("{value}\n"),
        OutFormat::Plain | OutFormat::Csv => {
            let keys = [
                "depth", "length", "rlength", "drop", "des", "exc", "fc", "boolean", "free",
            ];
            let fields: Vec<String> = keys.iter().map(|k| format!("{k}={}", value[k])).collect();
            fields.join(" ") + "\n"
        }
    }
}

fn decompose(w: &Permutation, method: Method, trace: bool, format: OutFormat) -> String {
    let (factorization, sort_trace): (Factorization, _) = match method {
        Method::Shallow => shallow_decomp_traced(w),
        Method::Selection => (selection_factorization(w), selection_sort_trace(w)),
    };
    if let OutFormat::Json = format {
        let mut value = json!({
            "perm": w.to_string(),
            "u": factorization.left().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            "v": factorization.right().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            "weights": factorization.depth_weights(),
            "weight": factorization.total_weight(),
        });
        if trace {
            value["trace"] = json!(sort_trace.to_string().lines().collect::<Vec<_>>());
        }
        return format!("{value}\n");
    }
    let weights: Vec<String> = factorization
        .depth_weights()
        .iter()
        .map(|d| d.to_string())
        .collect();
    let mut out = format!("{factorization}\n");
    if !weights.is_empty() {
        out += &format!("weights {}\n", weights.join(" "));
    }
    if trace {
        out += &sort_trace.to_string();
    }
    out
}

fn group_kind(group: Family, n: Option<usize>, m: Option<usize>) -> Result<GroupKind, Failure> {
    let missing = |flag: &str| Failure::Usage(format!("--{flag} is required for this group"));
    Ok(match group {
        Family::A => GroupKind::A(n.ok_or_else(|| missing("n"))?),
        Family::B => GroupKind::B(n.ok_or_else(|| missing("n"))?),
        Family::I2 => GroupKind::I2(m.or(n).ok_or_else(|| missing("m"))?),
    })
}

fn table(
    kind: TableKind,
    group: Family,
    n: Option<usize>,
    m: Option<usize>,
    pair: Pair,
    format: OutFormat,
) -> Result<String, Failure> {
    let group = group_kind(group, n, m)?;
    match kind {
        TableKind::Depth => {
            let t = enumeration::depth_distribution(group)?;
            Ok(enumeration::export_table(&t, format.into()))
        }
        TableKind::Joint => {
            let GroupKind::A(n) = group else {
                return Err(Failure::Usage(
                    "joint tables are only available for group A".into(),
                ));
            };
            let pair = match pair {
                Pair::DropDes => JointPair::DropDes,
                Pair::DepExc => JointPair::DepExc,
            };
            let t = enumeration::joint_distribution(n, pair)?;
            Ok(enumeration::export_joint(&t, format.into()))
        }
        TableKind::Class => {
            let GroupKind::A(n) = group else {
                return Err(Failure::Usage(
                    "class counts are only available for group A".into(),
                ));
            };
            class_table(n, format)
        }
    }
}

fn class_table(n: usize, format: OutFormat) -> Result<String, Failure> {
    let mut classes = vec![Class::Fc, Class::Boolean, Class::Free];
    classes.extend((0..=stats::max_depth_bound(n)).map(Class::DepthEq));
    classes.extend((0..n).map(Class::BooleanByLength));
    let counts = classes
        .into_iter()
        .map(|c| enumeration::count_class(n, c))
        .collect::<coxdepth_core::Result<Vec<ClassCount>>>()?;
    let closed = |c: &ClassCount| c.closed_form.map_or("-".to_string(), |v| v.to_string());
    let out = match format {
        OutFormat::Plain => counts
            .iter()
            .map(|c| format!("{} {} {}\n", c.class, c.exhaustive, closed(c)))
            .collect(),
        OutFormat::Csv => {
            let rows: String = counts
                .iter()
                .map(|c| format!("{},{},{},{}\n", c.n, c.class, c.exhaustive, closed(c)))
                .collect();
            format!("n,class,exhaustive,closed_form\n{rows}")
        }
        OutFormat::Json => {
            let rows: Vec<_> = counts
                .iter()
                .map(|c| {
                    json!({
                        "n": c.n,
                        "class": c.class.to_string(),
                        "exhaustive": c.exhaustive,
                        "closed_form": c.closed_form,
                    })
                })
                .collect();
            format!("{}\n", json!(rows))
        }
    };
    if counts.iter().all(ClassCount::agrees) {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}

fn verify(n: usize, suite: Suite) -> Result<String, Failure> {
    let results = run_suite(n, suite)?;
    let failed = results.iter().filter(|r| !r.passed).count();
    let mut out: String = results.iter().map(|r| format!("{r}\n")).collect();
    if failed == 0 {
        out += &format!("all {} checks passed\n", results.len());
        Ok(out)
    } else {
        out += &format!("{failed} of {} checks failed\n", results.len());
        Err(Failure::Check(out))
    }
}

fn dihedral(m: usize) -> Result<String, Failure> {
    let closed = dihedral_gf(m)?;
    let by_elements = dihedral_gf_by_elements(m)?;
    let backend = GroupBackend::build(GroupKind::I2(m))?;
    let dep = depth_oracle(&backend);
    let from_oracle: BiPoly = (0..backend.order())
        .map(|g| (backend.length(g), dep[g]))
        .collect();
    let out = format!("{closed}\n");
    if closed == by_elements && closed == from_oracle {
        Ok(out)
    } else {
        Err(Failure::Check(format!(
            "{out}mismatch: per-element {by_elements}; oracle {from_oracle}\n"
        )))
    }
}
