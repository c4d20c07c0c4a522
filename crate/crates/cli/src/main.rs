use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use verma_core::ext::{ext1_dim, ExtMemo};
use verma_core::flags::{count_richardson, interpolate_r, DEFAULT_FLAG_BUDGET};
use verma_core::rpoly::{r_polynomial, RMemo};
use verma_core::table::{coefficient_list, render_table, Format, TableOp};
use verma_core::verify::{run_suites, Suite, DEFAULT_GROUPS, REPORT_HEADER};
use verma_core::{CartanDatum, Error, PrimeField, WeylGroup};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

/// Ext^1 dimensions between Verma modules and Kazhdan-Lusztig R-polynomials
/// for finite Weyl groups.
///
/// Simple roots are numbered as in Bourbaki. Elements are written as
/// 1-based generator words ("1 2 1" or "1,2,1"), "e" for the identity, or for
/// type A as one-line permutations ("p:2314").
#[derive(Debug, Parser)]
#[command(name = "verma", version)]
struct Cli {
    /// Worker threads for table fills and verification (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rank, root count, group order and the longest element.
    Info {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Answer a single question about a pair of elements.
    Query(QueryArgs),
    /// Tabulate a quantity over every Bruhat-comparable pair.
    Table {
        #[command(flatten)]
        group: GroupArgs,
        /// ext1 | rpoly | hom | bruhat | all (ext1 and rpoly)
        #[arg(long, default_value = "ext1")]
        op: TableOp,
        /// text | json | csv
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Run the cross-check suites; exits 1 if any check fails.
    Verify {
        /// Type label, or `all` for A1, A2, A3, B2, B3 and G2.
        #[arg(long = "type", default_value = "all")]
        label: String,
        #[arg(long, conflicts_with = "label")]
        cartan: Option<PathBuf>,
        /// Comma-separated: observation1, basecor, descent, r-identities,
        /// flag-oracle, or all.
        #[arg(long, default_value = "all")]
        suites: String,
        /// Primes for the flag oracle.
        #[arg(long, value_delimiter = ',', default_value = "2,3,5,7")]
        primes: Vec<u32>,
        #[arg(long, default_value_t = DEFAULT_FLAG_BUDGET)]
        budget: u64,
        /// text | json
        #[arg(long, default_value = "text")]
        format: Format,
        /// Report elapsed_ms as 0 so output is byte-stable.
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Debug, Args)]
struct GroupArgs {
    /// Type label such as A3, B2, G2, E6 or A1xA1.
    #[arg(long = "type", required_unless_present = "cartan")]
    label: Option<String>,
    /// File holding an integer Cartan matrix (JSON rows or one row per line),
    /// entry (i, j) = <alpha_i^vee, alpha_j>.
    #[arg(long, conflicts_with = "label")]
    cartan: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct QueryArgs {
    #[command(flatten)]
    group: GroupArgs,
    #[arg(short = 'v', default_value = "e")]
    v: String,
    #[arg(short = 'w')]
    w: String,
    /// ext1 | rpoly | hom | bruhat | count-flags | interpolate
    #[arg(long, default_value = "ext1")]
    op: QueryOp,
    /// text | json | csv
    #[arg(long, default_value = "text")]
    format: Format,
    /// Primes for count-flags and interpolate.
    #[arg(long, value_delimiter = ',', default_value = "2,3,5,7")]
    primes: Vec<u32>,
    #[arg(long, default_value_t = DEFAULT_FLAG_BUDGET)]
    budget: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum QueryOp {
    Ext1,
    Rpoly,
    Hom,
    Bruhat,
    CountFlags,
    Interpolate,
}

fn load_group(label: Option<&str>, cartan: Option<&PathBuf>) -> anyhow::Result<WeylGroup> {
    let datum = match (label, cartan) {
        (_, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let name = path
                .file_stem()
                .map_or("custom".into(), |s| s.to_string_lossy().into_owned());
            CartanDatum::from_matrix_document(name, &text)?
        }
        (Some(label), None) => CartanDatum::from_label(label)?,
        (None, None) => bail!("one of --type or --cartan is required"),
    };
    Ok(WeylGroup::from_datum(datum)?)
}

impl GroupArgs {
    fn load(&self) -> anyhow::Result<WeylGroup> {
        load_group(self.label.as_deref(), self.cartan.as_ref())
    }
}

fn cmd_info(group: &GroupArgs, format: Format) -> anyhow::Result<String> {
    let g = group.load()?;
    let w0 = g.longest_element();
    let word = g.format_element(&w0);
    let roots = g.roots();
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "type": g.label(),
            "rank": g.rank(),
            "roots": roots.roots().len(),
            "positive_roots": roots.positive_count(),
            "order": roots.group_order().to_string(),
            "longest_length": g.length(&w0),
            "longest_word": word,
        }))? + "\n",
        _ => format!(
            "type            {}\nrank            {}\nroots           {}\npositive roots  {}\norder           {}\nlength of w0    {}\nw0              {}\n",
            g.label(),
            g.rank(),
            roots.roots().len(),
            roots.positive_count(),
            roots.group_order(),
            g.length(&w0),
            word
        ),
    })
}

fn cmd_query(args: &QueryArgs) -> anyhow::Result<String> {
    let g = args.group.load()?;
    let v = g.parse_element(&args.v)?;
    let w = g.parse_element(&args.w)?;
    let fields = || {
        args.primes
            .iter()
            .map(|&p| PrimeField::new(p))
            .collect::<Result<Vec<_>, _>>()
    };
    let (text, value) = match args.op {
        QueryOp::Ext1 => {
            let d = ext1_dim(&g, &v, &w, &ExtMemo::new());
            (d.to_string(), json!(d))
        }
        QueryOp::Rpoly => {
            let r = r_polynomial(&g, &v, &w, &RMemo::new());
            (coefficient_list(&r), json!(r))
        }
        QueryOp::Hom => {
            let h = g.hom_dim(&v, &w);
            (h.to_string(), json!(h))
        }
        QueryOp::Bruhat => {
            let b = g.bruhat_leq(&v, &w);
            (b.to_string(), json!(b))
        }
        QueryOp::CountFlags => {
            let mut counts = Vec::new();
            for field in fields()? {
                let c = count_richardson(&g, &v, &w, field, args.budget)?;
                counts.push((field.order(), c));
            }
            let text = counts
                .iter()
                .map(|(p, c)| format!("p={p}: {c}"))
                .collect::<Vec<_>>()
                .join("; ");
            let value = counts
                .iter()
                .map(|(p, c)| json!({"p": p, "count": c}))
                .collect::<Vec<_>>();
            (text, json!(value))
        }
        QueryOp::Interpolate => {
            let r = interpolate_r(&g, &v, &w, &fields()?, args.budget)?;
            (coefficient_list(&r), json!(r))
        }
    };
    let op = format!("{:?}", args.op).to_lowercase();
    Ok(match args.format {
        Format::Text => text + "\n",
        Format::Json => {
            serde_json::to_string_pretty(&json!({
                "type": g.label(),
                "op": op,
                "v": {"word": g.format_element(&v), "length": g.length(&v)},
                "w": {"word": g.format_element(&w), "length": g.length(&w)},
                "result": value,
            }))? + "\n"
        }
        Format::Csv => {
            let quote = |s: &str| {
                if s.contains([',', ' ', '"']) {
                    format!("\"{}\"", s.replace('"', "\"\""))
                } else {
                    s.to_string()
                }
            };
            format!(
                "v,w,len_v,len_w,{op}\n{},{},{},{},{}\n",
                quote(&g.format_element(&v)),
                quote(&g.format_element(&w)),
                g.length(&v),
                g.length(&w),
                quote(&text)
            )
        }
    })
}

fn parse_suites(text: &str) -> Result<Vec<Suite>, String> {
    if text == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    text.split(',').map(|s| s.trim().parse()).collect()
}

enum Outcome {
    Output(String),
    Verified { output: String, passed: bool },
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Info { group, format } => cmd_info(group, *format).map(Outcome::Output),
        Command::Query(args) => cmd_query(args).map(Outcome::Output),
        Command::Table { group, op, format } => {
            let g = group.load()?;
            Ok(Outcome::Output(render_table(&g, *op, *format)))
        }
        Command::Verify {
            label,
            cartan,
            suites,
            primes,
            budget,
            format,
            no_timing,
        } => {
            let suites = parse_suites(suites).map_err(UsageError)?;
            let groups = if cartan.is_some() {
                vec![load_group(None, cartan.as_ref())?]
            } else if label == "all" {
                DEFAULT_GROUPS
                    .iter()
                    .map(|l| load_group(Some(l), None))
                    .collect::<anyhow::Result<_>>()?
            } else {
                vec![load_group(Some(label), None)?]
            };
            let mut reports = Vec::new();
            for g in &groups {
                if suites == [Suite::FlagOracle] && g.datum().type_a_rank().is_none_or(|r| r > 3) {
                    return Err(Error::TypeUnsupported(g.label().to_string()).into());
                }
                reports.extend(run_suites(g, &suites, primes, *budget)?);
            }
            if *no_timing {
                reports = reports.into_iter().map(|r| r.without_timing()).collect();
            }
            let passed = reports.iter().all(|r| r.passed());
            let output = match format {
                Format::Json => serde_json::to_string_pretty(&reports)? + "\n",
                _ => {
                    let mut out = String::from(REPORT_HEADER);
                    out.push('\n');
                    for r in &reports {
                        out.push_str(&r.to_text());
                        out.push('\n');
                    }
                    out
                }
            };
            Ok(Outcome::Verified { output, passed })
        }
    }
}

#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::BudgetExceeded { .. } | Error::DimensionUnsupported(_)) => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(&cli) {
        Ok(Outcome::Output(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Verified { output, passed }) => {
            print!("{output}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFY_FAILED)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
