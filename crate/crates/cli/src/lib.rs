//! The `nakayama` command-line tool.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;

use nakayama_qhs::counting::{classify_decomposition, count_qhs_nodal, count_tilt_recursive};
use nakayama_qhs::dot::{order_dot, tilt_poset_dot};
use nakayama_qhs::gluing::{
    admissible_from_order, admissible_from_tilting, assemble, block_decomposition,
    AdmissibleSequence,
};
use nakayama_qhs::io::{
    count_rows_csv, count_table, from_json, parse_algebra, parse_interval, parse_modules,
    parse_order, to_json,
};
use nakayama_qhs::qhs::{
    char_tilting, enumerate_qhs, order_from_tilting, total_order_oracle, QhsStrategy, ORACLE_LIMIT,
};
use nakayama_qhs::tilting::{enumerate_tilting, left_mutation, tilt_hasse, Strategy};
use nakayama_qhs::tree::BinaryTree;
use nakayama_qhs::verify::verify;
use nakayama_qhs::{AlgebraSpec, BasicModule, Error, PartialOrder};

#[derive(Parser, Debug)]
#[command(
    name = "nakayama",
    version,
    about = "Tilting modules and quasi-hereditary structures of quadratic linear Nakayama algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct AlgebraArg {
    /// File holding a JSON algebra or the inline syntax.
    #[arg(long)]
    algebra: Option<PathBuf>,
    /// Inline algebra `n:l1,l2,...`.
    #[arg(long)]
    inline: Option<String>,
}

#[derive(Args, Debug)]
#[group(required = false, multiple = false)]
struct OptionalAlgebraArg {
    #[arg(long)]
    algebra: Option<PathBuf>,
    #[arg(long)]
    inline: Option<String>,
}

#[derive(Args, Debug)]
struct FormatArg {
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the indecomposable modules.
    Indecs {
        #[command(flatten)]
        alg: AlgebraArg,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Tilting modules.
    Tilt {
        #[command(subcommand)]
        command: TiltCommand,
    },
    /// Quasi-hereditary structures.
    Qhs {
        #[command(subcommand)]
        command: QhsCommand,
    },
    /// Block decomposition into path and radical-square-zero pieces.
    Blocks {
        #[command(flatten)]
        alg: AlgebraArg,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Binary trees of relation-free algebras.
    Trees {
        #[command(subcommand)]
        command: TreesCommand,
    },
    /// Fiber index of a tilting module, or fiber sizes of the whole tilting set.
    Decompose {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long)]
        modules: Option<String>,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Admissible sequences: from a tilting module or order, or assembled from a sequence.
    Glue {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long, conflicts_with_all = ["order", "sequence"])]
        modules: Option<String>,
        #[arg(long, conflicts_with = "sequence")]
        order: Option<String>,
        #[arg(long)]
        sequence: Option<String>,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Run the acceptance suite.
    Verify {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Worker threads; 0 uses one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Restrict to these criteria.
        #[arg(long, value_delimiter = ',')]
        criterion: Vec<u8>,
        #[command(flatten)]
        fmt: FormatArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TiltStrategy {
    Exhaustive,
    Mutation,
    Recursive,
}

#[derive(Subcommand, Debug)]
enum TiltCommand {
    /// All basic tilting modules, sorted.
    List {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long, value_enum, default_value_t = TiltStrategy::Mutation)]
        strategy: TiltStrategy,
        /// Print a random sample of this many modules.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0, requires = "sample")]
        seed: u64,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Number of tilting modules, or a CSV count table with `--max-n`.
    Count {
        #[command(flatten)]
        alg: OptionalAlgebraArg,
        #[arg(long, value_enum, default_value_t = TiltStrategy::Recursive)]
        strategy: TiltStrategy,
        #[arg(long, conflicts_with_all = ["algebra", "inline"])]
        max_n: Option<usize>,
        /// Enumerate structures for the `qhs_count` column up to this size.
        #[arg(long, default_value_t = 7, requires = "max_n")]
        enumerate_up_to: usize,
    },
    /// The mutation quiver, arrows pointing from a module to its left mutations.
    Hasse {
        #[command(flatten)]
        alg: AlgebraArg,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Left mutations of a tilting module.
    Mutate {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long)]
        modules: String,
        /// Mutate only this summand.
        #[arg(long)]
        summand: Option<String>,
        #[command(flatten)]
        fmt: FormatArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum QhsStrategyArg {
    ViaTilting,
    Oracle,
}

impl From<QhsStrategyArg> for QhsStrategy {
    fn from(s: QhsStrategyArg) -> Self {
        match s {
            QhsStrategyArg::ViaTilting => QhsStrategy::ViaTilting,
            QhsStrategyArg::Oracle => QhsStrategy::TotalOrderOracle,
        }
    }
}

#[derive(Subcommand, Debug)]
enum QhsCommand {
    /// Minimal adapted orders of all structures.
    List {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long, value_enum, default_value_t = QhsStrategyArg::ViaTilting)]
        strategy: QhsStrategyArg,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Number of structures; with `--nodal k,m` the nodal count for the algebra glued to it.
    Count {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long, value_enum, default_value_t = QhsStrategyArg::ViaTilting)]
        strategy: QhsStrategyArg,
        /// Chain length `k` and tail length `m`, as `k,m`.
        #[arg(long, value_delimiter = ',', value_name = "K,M")]
        nodal: Option<Vec<usize>>,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// The structure whose characteristic tilting module is `--modules`.
    OfTilting {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long)]
        modules: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// The characteristic tilting module of `--order`.
    Chtilt {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long)]
        order: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Classes of quasi-hereditary total orders.
    Oracle {
        #[command(flatten)]
        alg: AlgebraArg,
        #[command(flatten)]
        fmt: FormatArg,
    },
}

#[derive(Subcommand, Debug)]
enum TreesCommand {
    /// The binary tree of a tilting module.
    OfTilting {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long)]
        modules: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// The tilting module of a binary tree, given as JSON or as a tree-shaped order.
    ToTilting {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long, required_unless_present = "order", conflicts_with = "order")]
        tree: Option<String>,
        #[arg(long)]
        order: Option<String>,
        #[command(flatten)]
        fmt: FormatArg,
    },
}

/// Failure of a command, mapped to an exit code.
#[derive(Debug)]
pub enum CliError {
    Domain(Error),
    Usage(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) | CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Domain(e) => write!(f, "{}: {e}", e.name()),
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Io(m) => write!(f, "Io: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

type Out = Result<Output, CliError>;

/// Standard output of a successful command; `failed` requests exit code 1.
#[derive(Debug, Default)]
pub struct Output {
    pub text: String,
    pub failed: bool,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output {
            text,
            failed: false,
        }
    }
}

fn read_arg(value: &str) -> Result<String, CliError> {
    match value.strip_prefix('@') {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))
        }
        None => Ok(value.to_string()),
    }
}

fn load(
    algebra: &Option<PathBuf>,
    inline: &Option<String>,
) -> Result<Option<AlgebraSpec>, CliError> {
    match (algebra, inline) {
        (Some(path), _) => {
            let s = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            Ok(Some(parse_algebra(&s)?))
        }
        (None, Some(s)) => Ok(Some(parse_algebra(s)?)),
        (None, None) => Ok(None),
    }
}

impl AlgebraArg {
    fn get(&self) -> Result<AlgebraSpec, CliError> {
        Ok(load(&self.algebra, &self.inline)?.expect("clap requires an algebra"))
    }
}

fn modules(alg: &AlgebraSpec, value: &str) -> Result<BasicModule, CliError> {
    let m = parse_modules(&read_arg(value)?)?;
    m.check_valid(alg)?;
    Ok(m)
}

fn order(alg: &AlgebraSpec, value: &str) -> Result<PartialOrder, CliError> {
    Ok(parse_order(&read_arg(value)?, 1, alg.n())?)
}

fn unsupported(fmt: Format, verb: &str) -> CliError {
    CliError::Usage(format!(
        "{verb} does not support --format {}",
        format!("{fmt:?}").to_lowercase()
    ))
}

fn lines<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().fold(String::new(), |mut s, x| {
        writeln!(s, "{x}").unwrap();
        s
    })
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    to_json(value) + "\n"
}

fn labels_text(labels: &[nakayama_qhs::Interval]) -> String {
    lines(
        labels
            .iter()
            .enumerate()
            .map(|(i, m)| format!("T({}) = {m}", i + 1)),
    )
}

fn tilt(cmd: TiltCommand) -> Out {
    match cmd {
        TiltCommand::List {
            alg,
            strategy,
            sample,
            seed,
            fmt,
        } => {
            let alg = alg.get()?;
            let strategy = match strategy {
                TiltStrategy::Exhaustive => Strategy::Exhaustive,
                TiltStrategy::Mutation => Strategy::Mutation,
                TiltStrategy::Recursive => {
                    return Err(CliError::Usage(
                        "tilt list enumerates; use exhaustive or mutation".into(),
                    ))
                }
            };
            let mut ts = enumerate_tilting(&alg, strategy)?;
            if let Some(k) = sample {
                let mut rng = StdRng::seed_from_u64(seed);
                let mut picked =
                    rand::seq::index::sample(&mut rng, ts.len(), k.min(ts.len())).into_vec();
                picked.sort_unstable();
                ts = picked.into_iter().map(|i| ts[i].clone()).collect();
            }
            match fmt.format.unwrap_or(Format::Text) {
                Format::Text => Ok(lines(&ts).into()),
                Format::Json => Ok(json(&ts).into()),
                f => Err(unsupported(f, "tilt list")),
            }
        }
        TiltCommand::Count {
            alg,
            strategy,
            max_n,
            enumerate_up_to,
        } => {
            if let Some(max_n) = max_n {
                return Ok(count_rows_csv(&count_table(max_n, enumerate_up_to)?).into());
            }
            let alg = load(&alg.algebra, &alg.inline)?.ok_or_else(|| {
                CliError::Usage("tilt count needs --algebra, --inline or --max-n".into())
            })?;
            let count = match strategy {
                TiltStrategy::Recursive => count_tilt_recursive(&alg),
                TiltStrategy::Mutation => {
                    enumerate_tilting(&alg, Strategy::Mutation)?.len() as u128
                }
                TiltStrategy::Exhaustive => {
                    enumerate_tilting(&alg, Strategy::Exhaustive)?.len() as u128
                }
            };
            Ok(format!("{count}\n").into())
        }
        TiltCommand::Hasse { alg, fmt } => {
            let poset = tilt_hasse(&alg.get()?);
            match fmt.format.unwrap_or(Format::Text) {
                Format::Dot => Ok(tilt_poset_dot(&poset).into()),
                Format::Json => Ok(json(&poset).into()),
                Format::Text => {
                    let mut s = lines(
                        poset
                            .elements
                            .iter()
                            .enumerate()
                            .map(|(i, t)| format!("t{i}: {t}")),
                    );
                    s += &lines(
                        poset
                            .edges
                            .iter()
                            .map(|e| format!("t{} -> t{} via {}", e.source, e.target, e.summand)),
                    );
                    Ok(s.into())
                }
            }
        }
        TiltCommand::Mutate {
            alg,
            modules: m,
            summand,
            fmt,
        } => {
            let alg = alg.get()?;
            let t = modules(&alg, &m)?;
            if let Some(x) = summand {
                let mu = left_mutation(&alg, &t, parse_interval(&x)?)?;
                return match fmt.format.unwrap_or(Format::Text) {
                    Format::Text => Ok(format!("{mu}\n").into()),
                    Format::Json => Ok(json(&mu).into()),
                    f => Err(unsupported(f, "tilt mutate")),
                };
            }
            let results: Vec<(nakayama_qhs::Interval, Option<BasicModule>)> = t
                .iter()
                .map(|x| match left_mutation(&alg, &t, x) {
                    Ok(mu) => Ok((x, Some(mu))),
                    Err(Error::NotMutable(_)) => Ok((x, None)),
                    Err(e) => Err(e),
                })
                .collect::<Result<_, _>>()?;
            match fmt.format.unwrap_or(Format::Text) {
                Format::Text => Ok(lines(results.iter().map(|(x, mu)| match mu {
                    Some(mu) => format!("{x}: {mu}"),
                    None => format!("{x}: not mutable"),
                }))
                .into()),
                Format::Json => Ok(json(&results).into()),
                f => Err(unsupported(f, "tilt mutate")),
            }
        }
    }
}

fn qhs(cmd: QhsCommand) -> Out {
    match cmd {
        QhsCommand::List { alg, strategy, fmt } => {
            let orders = enumerate_qhs(&alg.get()?, strategy.into())?;
            match fmt.format.unwrap_or(Format::Text) {
                Format::Text => Ok(lines(&orders).into()),
                Format::Json => Ok(json(&orders).into()),
                f => Err(unsupported(f, "qhs list")),
            }
        }
        QhsCommand::Count {
            alg,
            strategy,
            nodal,
            fmt,
        } => {
            let alg = alg.get()?;
            if let Some(km) = nodal {
                let [k, m] = km[..] else {
                    return Err(CliError::Usage("--nodal takes k,m".into()));
                };
                let c = count_qhs_nodal(&alg, k, m)?;
                return match fmt.format.unwrap_or(Format::Text) {
                    Format::Text => {
                        let reduced = c
                            .reduced_check
                            .map_or("not applicable".to_string(), |ok| ok.to_string());
                        Ok(format!(
                            "glued {}\nqhs_b {}\nn_sink {}\ncount {}\nreduced_check {reduced}\n",
                            c.glued, c.qhs_b, c.n_sink, c.formula
                        )
                        .into())
                    }
                    Format::Json => Ok(json(&c).into()),
                    f => Err(unsupported(f, "qhs count")),
                };
            }
            let n = enumerate_qhs(&alg, strategy.into())?.len();
            Ok(format!("{n}\n").into())
        }
        QhsCommand::OfTilting {
            alg,
            modules: m,
            fmt,
        } => {
            let alg = alg.get()?;
            let ex = order_from_tilting(&alg, &modules(&alg, &m)?)?;
            match fmt.format.unwrap_or(Format::Text) {
                Format::Text => {
                    Ok(format!("{}\n{}", ex.order, labels_text(&ex.labeled.labels)).into())
                }
                Format::Json => Ok(json(&ex).into()),
                Format::Dot => Ok(order_dot(&ex.order).into()),
            }
        }
        QhsCommand::Chtilt { alg, order: o, fmt } => {
            let alg = alg.get()?;
            let labeled = char_tilting(&alg, &order(&alg, &o)?)?;
            match fmt.format.unwrap_or(Format::Text) {
                Format::Text => Ok(labels_text(&labeled.labels).into()),
                Format::Json => Ok(json(&labeled).into()),
                f => Err(unsupported(f, "qhs chtilt")),
            }
        }
        QhsCommand::Oracle { alg, fmt } => {
            let classes = total_order_oracle(&alg.get()?, ORACLE_LIMIT)?;
            match fmt.format.unwrap_or(Format::Text) {
                Format::Text => Ok(lines(classes.iter().map(|c| {
                    format!(
                        "{} | {} | {} total orders",
                        c.order,
                        BasicModule::new(c.ringel.iter().copied()),
                        c.total_orders
                    )
                }))
                .into()),
                Format::Json => Ok(json(&classes).into()),
                f => Err(unsupported(f, "qhs oracle")),
            }
        }
    }
}

fn trees(cmd: TreesCommand) -> Out {
    match cmd {
        TreesCommand::OfTilting {
            alg,
            modules: m,
            fmt,
        } => {
            let alg = alg.get()?;
            let tree = BinaryTree::from_tilting(1, alg.n(), &modules(&alg, &m)?)?;
            match fmt.format.unwrap_or(Format::Json) {
                Format::Json => Ok(json(&tree).into()),
                Format::Text => Ok(format!("{tree}\n").into()),
                Format::Dot => Ok(order_dot(&tree.to_order()).into()),
            }
        }
        TreesCommand::ToTilting {
            alg,
            tree,
            order: o,
            fmt,
        } => {
            let alg = alg.get()?;
            let tree = match (tree, o) {
                (Some(t), _) => from_json::<BinaryTree>(&read_arg(&t)?)?,
                (None, Some(o)) => BinaryTree::from_order(&order(&alg, &o)?)?,
                (None, None) => unreachable!("clap requires --tree or --order"),
            };
            tree.check_range(1, alg.n())?;
            let labeled: Vec<_> = tree.labeled_tilting().into_iter().map(|(_, m)| m).collect();
            match fmt.format.unwrap_or(Format::Text) {
                Format::Text => Ok(labels_text(&labeled).into()),
                Format::Json => Ok(json(&labeled).into()),
                f => Err(unsupported(f, "trees to-tilting")),
            }
        }
    }
}

fn decompose(alg: AlgebraArg, m: Option<String>, fmt: FormatArg) -> Out {
    let alg = alg.get()?;
    let fmt = fmt.format.unwrap_or(Format::Text);
    if let Some(m) = m {
        let i = classify_decomposition(&alg, &modules(&alg, &m)?)?;
        return match fmt {
            Format::Text | Format::Json => Ok(format!("{i}\n").into()),
            f => Err(unsupported(f, "decompose")),
        };
    }
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for t in enumerate_tilting(&alg, Strategy::Mutation)? {
        *sizes.entry(classify_decomposition(&alg, &t)?).or_default() += 1;
    }
    match fmt {
        Format::Text => Ok(lines(sizes.iter().map(|(i, c)| format!("{i} {c}"))).into()),
        Format::Json => Ok(json(&sizes).into()),
        f => Err(unsupported(f, "decompose")),
    }
}

fn glue(
    alg: AlgebraArg,
    m: Option<String>,
    o: Option<String>,
    seq: Option<String>,
    fmt: FormatArg,
) -> Out {
    let alg = alg.get()?;
    let fmt = fmt.format.unwrap_or(Format::Text);
    if let Some(seq) = seq {
        let seq: AdmissibleSequence = from_json(&read_arg(&seq)?)?;
        let a = assemble(&alg, &seq)?;
        return match fmt {
            Format::Text => Ok(format!("{}\n{}", a.order, labels_text(&a.tilting.labels)).into()),
            Format::Json => Ok(json(&a).into()),
            Format::Dot => Ok(order_dot(&a.order).into()),
        };
    }
    let seq = match (m, o) {
        (Some(m), _) => admissible_from_tilting(&alg, &modules(&alg, &m)?)?,
        (None, Some(o)) => admissible_from_order(&alg, &order(&alg, &o)?)?,
        (None, None) => {
            return Err(CliError::Usage(
                "glue needs --modules, --order or --sequence".into(),
            ))
        }
    };
    match fmt {
        Format::Text => Ok(lines(&seq.0).into()),
        Format::Json => Ok(json(&seq).into()),
        f => Err(unsupported(f, "glue")),
    }
}

fn run_verify(max_n: usize, jobs: usize, criterion: Vec<u8>, fmt: FormatArg) -> Out {
    if let Some(bad) = criterion.iter().find(|&&c| !(1..=13).contains(&c)) {
        return Err(CliError::Usage(format!("no criterion {bad}")));
    }
    let fmt = fmt.format.unwrap_or(Format::Text);
    if fmt == Format::Dot {
        return Err(unsupported(fmt, "verify"));
    }
    let reports = verify(max_n, jobs, &criterion, |_| {});
    let failed = reports.iter().any(|r| !r.passed);
    let text = match fmt {
        Format::Json => json(&reports),
        _ => lines(&reports),
    };
    Ok(Output { text, failed })
}

pub fn execute(cli: Cli) -> Out {
    match cli.command {
        Command::Indecs { alg, fmt } => {
            let ind = alg.get()?.indecomposables();
            match fmt.format.unwrap_or(Format::Text) {
                Format::Text => Ok(format!("{ind}\n").into()),
                Format::Json => Ok(json(&ind).into()),
                f => Err(unsupported(f, "indecs")),
            }
        }
        Command::Tilt { command } => tilt(command),
        Command::Qhs { command } => qhs(command),
        Command::Blocks { alg, fmt } => {
            let b = block_decomposition(&alg.get()?);
            match fmt.format.unwrap_or(Format::Text) {
                Format::Text => {
                    let cuts: Vec<String> = b.cuts.iter().map(ToString::to_string).collect();
                    Ok(format!(
                        "{}\ncuts {}\n",
                        lines(&b.blocks).trim_end().replace('\n', " "),
                        cuts.join(" ")
                    )
                    .into())
                }
                Format::Json => Ok(json(&b).into()),
                f => Err(unsupported(f, "blocks")),
            }
        }
        Command::Trees { command } => trees(command),
        Command::Decompose { alg, modules, fmt } => decompose(alg, modules, fmt),
        Command::Glue {
            alg,
            modules,
            order,
            sequence,
            fmt,
        } => glue(alg, modules, order, sequence, fmt),
        Command::Verify {
            max_n,
            jobs,
            criterion,
            fmt,
        } => run_verify(max_n, jobs, criterion, fmt),
    }
}

/// Parses `argv`, runs the command and returns the exit code with the text for
/// standard output and standard error.
pub fn run<I, S>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                (0, text, String::new())
            } else {
                (2, String::new(), text)
            };
        }
    };
    match execute(cli) {
        Ok(out) => (i32::from(out.failed), out.text, String::new()),
        Err(e) => (e.exit_code(), String::new(), format!("error: {e}\n")),
    }
}
