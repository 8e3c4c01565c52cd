//! Command-line front end. Every data-producing command writes a table with
//! a header row; `main_entry` maps failures to distinct exit codes.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::builder::TypedValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::catalog::{self, CatalogError, ClassCatalogEntry, GfSource};
use crate::counts::CountSeries;
use crate::genfunc::{self, ChainKind, GfError};
use crate::perm_core::{brute_force_counts, eco_counts, eco_enumerate, AvoidanceClass, Limits, PermError};
use crate::production_matrix::{self, MatrixError, TruncationSpec};
use crate::succession::{verify_rule, RuleError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNKNOWN_CLASS: i32 = 3;
pub const EXIT_BAD_K: i32 = 4;
pub const EXIT_CAP: i32 = 5;
pub const EXIT_MISMATCH: i32 = 6;
pub const EXIT_OVERFLOW: i32 = 7;

pub const FACTORIAL_CAP_ENV: &str = "FIBCAT_FACTORIAL_CAP";
pub const NODE_CAP_ENV: &str = "FIBCAT_NODE_CAP";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Rule(#[from] RuleError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error("methods disagree")]
    Mismatch,
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Catalog(e) => catalog_code(e),
            CliError::Perm(e) => perm_code(e),
            CliError::Rule(e) => rule_code(e),
            CliError::Matrix(e) => match e {
                MatrixError::Overflow { .. } => EXIT_OVERFLOW,
                MatrixError::InadmissibleK { .. } => EXIT_BAD_K,
                MatrixError::Rule(r) => rule_code(r),
                _ => EXIT_FAILURE,
            },
            CliError::Gf(e) => gf_code(e),
            CliError::Mismatch => EXIT_MISMATCH,
            CliError::Io(_) | CliError::Csv(_) => EXIT_FAILURE,
        }
    }
}

fn catalog_code(e: &CatalogError) -> i32 {
    match e {
        CatalogError::UnknownClass(_) => EXIT_UNKNOWN_CLASS,
        CatalogError::KOutOfRange { .. } | CatalogError::MissingK(_) | CatalogError::UnexpectedK(_) => {
            EXIT_BAD_K
        }
        CatalogError::InvalidBasis(_) => EXIT_USAGE,
        CatalogError::Perm(p) => perm_code(p),
        CatalogError::Rule(r) => rule_code(r),
        CatalogError::Gf(g) => gf_code(g),
    }
}

fn perm_code(e: &PermError) -> i32 {
    match e {
        PermError::NodeCapExceeded { .. } | PermError::FactorialCapExceeded { .. } => EXIT_CAP,
        PermError::Overflow => EXIT_OVERFLOW,
        _ => EXIT_USAGE,
    }
}

fn rule_code(e: &RuleError) -> i32 {
    match e {
        RuleError::Overflow { .. } => EXIT_OVERFLOW,
        RuleError::InadmissibleK { .. } => EXIT_BAD_K,
        RuleError::Perm(p) => perm_code(p),
        _ => EXIT_FAILURE,
    }
}

fn gf_code(e: &GfError) -> i32 {
    match e {
        GfError::Overflow => EXIT_OVERFLOW,
        GfError::InadmissibleK { .. } => EXIT_BAD_K,
        _ => EXIT_FAILURE,
    }
}

#[derive(Debug, Parser)]
#[command(name = "fibcat", version, about = "Pattern classes between Fibonacci and Catalan numbers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Level counts of a class by one or more methods.
    Count(CountArgs),
    /// The members of length n, in lexicographic order.
    Enumerate(EnumerateArgs),
    /// Coefficients of a generating function.
    Series(SeriesArgs),
    /// Runs every applicable method and compares them level by level.
    Verify(VerifyArgs),
    /// The class catalog with the first terms of each sequence.
    Table(TableArgs),
    /// The succession rule of a catalog class, optionally with its matrix.
    ShowRule(ShowRuleArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Target {
    /// Catalog id such as FIB, GFIB or CATALAN.
    #[arg(long = "class")]
    pub class_id: Option<String>,
    /// Comma-separated patterns over the digits 1-9, e.g. "123,213,1432".
    #[arg(long)]
    pub basis: Option<String>,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    /// Largest n enumerated by brute force.
    #[arg(long, env = FACTORIAL_CAP_ENV, default_value_t = Limits::DEFAULT_FACTORIAL_CAP,
          value_parser = clap::value_parser!(u64).range(1..=12).map(|v| v as usize))]
    pub factorial_cap: usize,
    /// Largest number of generating-tree nodes visited.
    #[arg(long, env = NODE_CAP_ENV, default_value_t = Limits::DEFAULT_NODE_CAP,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub node_cap: u64,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        Limits { factorial_cap: self.factorial_cap, node_cap: self.node_cap }
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    /// Write to FILE instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Csv,
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Method {
    Eco,
    Brute,
    Rule,
    Matrix,
    Gf,
    All,
}

impl Method {
    const CONCRETE: [Method; 5] = [Method::Eco, Method::Brute, Method::Rule, Method::Matrix, Method::Gf];

    fn name(self) -> &'static str {
        match self {
            Method::Eco => "eco",
            Method::Brute => "brute",
            Method::Rule => "rule",
            Method::Matrix => "matrix",
            Method::Gf => "gf",
            Method::All => "all",
        }
    }
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub target: Target,
    #[arg(long)]
    pub k: Option<u32>,
    /// Largest length n.
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Method::Eco])]
    pub method: Vec<Method>,
    #[command(flatten)]
    pub limits: LimitArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub target: Target,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub limits: LimitArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GfId {
    Tk,
    Fbark,
    Fbar,
    Fib,
    Pow2,
    Catalan,
    #[value(name = "convergentP")]
    ConvergentP,
    #[value(name = "convergentM")]
    ConvergentM,
    #[value(name = "convergentD")]
    ConvergentD,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub gf: GfId,
    #[arg(long)]
    pub k: Option<u32>,
    /// Number of coefficients, starting at x^0.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..).map(|v| v as usize))]
    pub terms: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub target: Target,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub limits: LimitArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Largest k listed for parameterized classes.
    #[arg(long, default_value_t = 5)]
    pub k_max: u32,
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..).map(|v| v as usize))]
    pub terms: usize,
    #[command(flatten)]
    pub limits: LimitArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ShowRuleArgs {
    #[arg(long = "class")]
    pub class_id: String,
    #[arg(long)]
    pub k: Option<u32>,
    /// Also print the production matrix.
    #[arg(long)]
    pub matrix: bool,
    /// Level up to which the printed matrix must give exact counts.
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A resolved `--class`/`--basis` pair.
enum Resolved {
    Catalog { entry: ClassCatalogEntry, k: Option<u32>, class: AvoidanceClass },
    Raw(AvoidanceClass),
}

impl Resolved {
    fn new(target: &Target, k: Option<u32>) -> Result<Self, CliError> {
        match (&target.class_id, &target.basis) {
            (Some(id), None) => {
                let (entry, class) = catalog::lookup(id, k)?;
                Ok(Resolved::Catalog { entry, k, class })
            }
            (None, Some(basis)) => {
                if k.is_some() {
                    return Err(CatalogError::UnexpectedK("--basis".into()).into());
                }
                Ok(Resolved::Raw(catalog::class_from_basis(basis)?))
            }
            _ => Err(CliError::Usage("give exactly one of --class or --basis".into())),
        }
    }

    fn class(&self) -> &AvoidanceClass {
        match self {
            Resolved::Catalog { class, .. } | Resolved::Raw(class) => class,
        }
    }

    fn supports(&self, method: Method) -> bool {
        matches!(self, Resolved::Catalog { .. }) || matches!(method, Method::Eco | Method::Brute)
    }

    fn counts(&self, method: Method, n: usize, limits: &Limits) -> Result<CountSeries, CliError> {
        let cls = self.class();
        match (method, self) {
            (Method::Eco, _) => Ok(eco_counts(cls, n, limits)?),
            (Method::Brute, _) => Ok(brute_force_counts(cls, n, limits.factorial_cap)?),
            (Method::Rule, Resolved::Catalog { entry, k, .. }) => Ok(entry.rule(*k)?.level_counts(n)?),
            (Method::Matrix, Resolved::Catalog { entry, k, .. }) => {
                let m = production_matrix::from_rule(&entry.rule(*k)?, TruncationSpec::for_level(n))?;
                Ok(m.counts(n)?)
            }
            (Method::Gf, Resolved::Catalog { entry, k, .. }) => Ok(entry.gf(*k)?.series(n)?),
            (Method::All, _) => unreachable!("expanded before evaluation"),
            (m, Resolved::Raw(_)) => Err(CliError::Usage(format!(
                "method `{}` needs a catalog class (--class)",
                m.name()
            ))),
        }
    }
}

/// Expands `all` into the methods that apply; brute force is dropped from
/// `all` when `n` is above the factorial cap.
fn expand_methods(requested: &[Method], target: &Resolved, n: usize, limits: &Limits) -> Vec<Method> {
    let mut out: Vec<Method> = Vec::new();
    for &m in requested {
        if m == Method::All {
            for c in Method::CONCRETE {
                if target.supports(c) && (c != Method::Brute || n <= limits.factorial_cap) {
                    out.push(c);
                }
            }
        } else {
            out.push(m);
        }
    }
    out.sort();
    out.dedup();
    out
}

struct Table {
    comments: Vec<String>,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        Table { comments: Vec::new(), header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    fn render(&self, format: Format) -> Result<String, CliError> {
        let mut out = String::new();
        for c in &self.comments {
            out.push_str("# ");
            out.push_str(c);
            out.push('\n');
        }
        match format {
            Format::Tsv | Format::Csv => {
                let delimiter = if format == Format::Tsv { b'\t' } else { b',' };
                let mut w = csv::WriterBuilder::new().delimiter(delimiter).from_writer(Vec::new());
                w.write_record(&self.header)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                let bytes = w.into_inner().map_err(|e| io::Error::other(e.to_string()))?;
                out.push_str(&String::from_utf8(bytes).expect("utf-8 cells"));
            }
            Format::Plain => {
                let widths: Vec<usize> = (0..self.header.len())
                    .map(|c| {
                        std::iter::once(&self.header)
                            .chain(&self.rows)
                            .map(|r| r[c].len())
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                for row in std::iter::once(&self.header).chain(&self.rows) {
                    let cells: Vec<String> =
                        row.iter().zip(&widths).map(|(v, &w)| format!("{v:<w$}")).collect();
                    out.push_str(cells.join("  ").trim_end());
                    out.push('\n');
                }
            }
        }
        Ok(out)
    }
}

fn emit(text: &str, out: &Option<PathBuf>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => File::create(path)?.write_all(text.as_bytes())?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_count(args: &CountArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let limits = args.limits.limits();
    let target = Resolved::new(&args.target, args.k)?;
    let methods = expand_methods(&args.method, &target, args.n, &limits);
    let series = methods
        .iter()
        .map(|&m| target.counts(m, args.n, &limits))
        .collect::<Result<Vec<_>, _>>()?;
    let mut header = vec!["n"];
    header.extend(methods.iter().map(|m| m.name()));
    let mut table = Table::new(&header);
    for n in 0..=args.n {
        let mut row = vec![n.to_string()];
        row.extend(series.iter().map(|s| s.terms()[n].to_string()));
        table.rows.push(row);
    }
    emit(&table.render(args.output.format)?, &args.output.out, stdout)
}

fn cmd_enumerate(args: &EnumerateArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let limits = args.limits.limits();
    let target = Resolved::new(&args.target, args.k)?;
    let mut level = eco_enumerate(target.class(), args.n, limits.node_cap)?
        .pop()
        .unwrap_or_default();
    level.sort_by(|a, b| a.values().cmp(b.values()));
    let mut table = Table::new(&["n", "permutation"]);
    for p in level {
        table.rows.push(vec![args.n.to_string(), p.to_string()]);
    }
    emit(&table.render(args.output.format)?, &args.output.out, stdout)
}

fn series_source(gf: GfId, k: Option<u32>) -> Result<GfSource, CliError> {
    let need_k = |k: Option<u32>| {
        k.ok_or_else(|| CliError::Catalog(CatalogError::MissingK(format!("--gf {gf:?}").to_lowercase())))
    };
    let no_k = |k: Option<u32>| match k {
        Some(_) => Err(CliError::Catalog(CatalogError::UnexpectedK(format!("--gf {gf:?}").to_lowercase()))),
        None => Ok(()),
    };
    let rational = match gf {
        GfId::Tk => genfunc::tk_gf(need_k(k)?)?,
        GfId::Fbark => genfunc::fbark_gf(need_k(k)?)?,
        GfId::ConvergentP => genfunc::convergent_chain(ChainKind::P, need_k(k)?)?,
        GfId::ConvergentM => genfunc::convergent_chain(ChainKind::M, need_k(k)?)?,
        GfId::ConvergentD => genfunc::convergent_chain(ChainKind::D, need_k(k)?)?,
        GfId::Fbar => no_k(k).map(|_| genfunc::fbar_gf())?,
        GfId::Fib => no_k(k).map(|_| genfunc::fib_gf())?,
        GfId::Pow2 => no_k(k).map(|_| genfunc::pow2_gf())?,
        GfId::Catalan => return no_k(k).map(|_| GfSource::Catalan),
    };
    Ok(GfSource::Rational(rational))
}

fn cmd_series(args: &SeriesArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let source = series_source(args.gf, args.k)?;
    let coeffs = source.series(args.terms - 1)?;
    let mut table = Table::new(&["n", "coefficient"]);
    table.comments.push(format!("gf = {source}"));
    for (n, c) in coeffs.terms().iter().enumerate() {
        table.rows.push(vec![n.to_string(), c.to_string()]);
    }
    emit(&table.render(args.output.format)?, &args.output.out, stdout)
}

fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    let limits = args.limits.limits();
    let target = Resolved::new(&args.target, args.k)?;
    let methods = expand_methods(&[Method::All], &target, args.n, &limits);
    if args.n > limits.factorial_cap {
        writeln!(stderr, "note: brute force skipped above n = {}", limits.factorial_cap)?;
    }
    let series = methods
        .iter()
        .map(|&m| target.counts(m, args.n, &limits))
        .collect::<Result<Vec<_>, _>>()?;
    let labels = match &target {
        Resolved::Catalog { entry, k, class } => Some(verify_rule(&entry.rule(*k)?, class, args.n, &limits)?),
        Resolved::Raw(_) => None,
    };

    let mut header = vec!["n"];
    header.extend(methods.iter().map(|m| m.name()));
    if labels.is_some() {
        header.push("labels");
    }
    header.push("agree");
    let mut table = Table::new(&header);
    let mut all_agree = true;
    for n in 0..=args.n {
        let values: Vec<u128> = series.iter().map(|s| s.terms()[n]).collect();
        let counts_agree = values.windows(2).all(|w| w[0] == w[1]);
        let labels_agree = labels.as_ref().is_none_or(|r| r.levels[n].labels_equal);
        let agree = counts_agree && labels_agree;
        if !agree {
            all_agree = false;
            let detail: Vec<String> =
                methods.iter().zip(&values).map(|(m, v)| format!("{}={v}", m.name())).collect();
            writeln!(stderr, "n={n}: {}", detail.join(" "))?;
            if !labels_agree {
                let level = &labels.as_ref().expect("checked").levels[n];
                writeln!(stderr, "n={n}: rule labels {:?} vs active sites {:?}", level.rule_values, level.eco_sites)?;
            }
        }
        let mut row = vec![n.to_string()];
        row.extend(values.iter().map(|v| v.to_string()));
        if labels.is_some() {
            row.push(if labels_agree { "ok" } else { "differ" }.to_string());
        }
        row.push(if agree { "yes" } else { "no" }.to_string());
        table.rows.push(row);
    }
    emit(&table.render(args.output.format)?, &args.output.out, stdout)?;
    if all_agree {
        Ok(())
    } else {
        Err(CliError::Mismatch)
    }
}

fn cmd_table(args: &TableArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let limits = args.limits.limits();
    let mut table = Table::new(&["id", "k", "basis", "sequence", "terms"]);
    for &entry in catalog::catalog() {
        for k in entry.ks_within(2..=args.k_max) {
            let class = entry.class(k)?;
            let terms = eco_counts(&class, args.terms - 1, &limits)?;
            table.rows.push(vec![
                entry.id().to_string(),
                k.map_or_else(|| "-".to_string(), |k| k.to_string()),
                class.basis_string(),
                entry.sequence_name().to_string(),
                terms.to_string(),
            ]);
        }
    }
    emit(&table.render(args.output.format)?, &args.output.out, stdout)
}

fn cmd_show_rule(args: &ShowRuleArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let entry: ClassCatalogEntry = args.class_id.parse()?;
    let rule = entry.rule(args.k)?;
    let mut text = rule.display_form();
    text.push('\n');
    if args.matrix {
        let m = production_matrix::from_rule(&rule, TruncationSpec::for_level(args.n))?;
        match m.guarantee() {
            Some(g) => text.push_str(&format!("# matrix truncated to {0}x{0}, exact to n = {g}\n", m.dim())),
            None => text.push_str("# matrix (complete)\n"),
        }
        text.push_str(&m.render_with_labels());
        text.push('\n');
    }
    emit(&text, &args.out, stdout)
}

/// Runs a parsed command.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Count(a) => cmd_count(a, stdout),
        Command::Enumerate(a) => cmd_enumerate(a, stdout),
        Command::Series(a) => cmd_series(a, stdout),
        Command::Verify(a) => cmd_verify(a, stdout, stderr),
        Command::Table(a) => cmd_table(a, stdout),
        Command::ShowRule(a) => cmd_show_rule(a, stdout),
    }
}

/// Parses `args` (program name first), runs, and returns the exit code.
pub fn main_entry<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let stdout = io::stdout();
    let stderr = io::stderr();
    match run(&cli, &mut stdout.lock(), &mut stderr.lock()) {
        Ok(()) => EXIT_OK,
        Err(CliError::Mismatch) => EXIT_MISMATCH,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
