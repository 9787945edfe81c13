use std::fmt::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use turan_core::density::{is_balanced, rho};
use turan_core::descriptor::{Descriptor, Family};
use turan_core::embeddings::fixtures::{planted_key_lemma, planted_semi_induced};
use turan_core::embeddings::{
    admissible_copies, asymmetric_embed, extract_induced_power, greedy_tree_embed, key_lemma_embed, Subgraph,
    Thresholds,
};
use turan_core::families::{BipartiteTemplate, RootedGraph};
use turan_core::fuzz::{fuzz, FuzzCheck};
use turan_core::io::Document;
use turan_core::oracles::{extremal_bip_star_with_budget, extremal_plain_with_budget, extremal_star_with_budget};
use turan_core::rational;
use turan_core::realizability::{certify, enumerate_realizable, DEFAULT_L};
use turan_core::{Error, Graph, Host, VertexMap};

#[derive(Parser, Debug)]
#[command(
    name = "turan",
    version,
    about = "Rooted densities, exponent certificates and induced Turán oracles"
)]
pub struct Cli {
    /// Worker threads for parallel steps (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a family member from a descriptor.
    Family(FamilyArgs),
    /// Print the rooted density as an exact fraction.
    Rho(SourceArgs),
    /// Check balancedness over all non-root subsets.
    Balanced(BalancedArgs),
    /// Certify the exponent 2 - a/b.
    Realize(RealizeArgs),
    /// Certify every qualifying exponent up to the given bounds.
    Sweep(SweepArgs),
    /// Exact induced Turán numbers for small n.
    Extremal(ExtremalArgs),
    /// Run an embedding procedure.
    #[command(subcommand)]
    Embed(EmbedCommand),
    /// Randomised lemma checks.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Re-emit a graph document as canonical JSON or DOT.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct SourceArgs {
    /// Family descriptor, e.g. `Trt:r=3,t=1`.
    #[arg(long)]
    family: Option<String>,
    /// Graph document with "roots".
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    /// Family descriptor, e.g. `power:base=(path:len=3),l=2`.
    #[arg(long)]
    family: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BalancedArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
pub struct RealizeArgs {
    #[arg(long)]
    a: u64,
    #[arg(long)]
    b: u64,
    /// Power used for the witness graph.
    #[arg(long, default_value_t = DEFAULT_L as u64)]
    l: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long)]
    amax: u64,
    #[arg(long)]
    bmax: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ExtremalArgs {
    #[arg(long)]
    n: usize,
    /// Forbidden pattern: descriptor or graph document.
    #[arg(long)]
    h: String,
    /// Forbid K_{s,s}; required unless --plain.
    #[arg(long, required_unless_present = "plain")]
    s: Option<usize>,
    /// Bipartite host with the pattern's parts on opposite sides.
    #[arg(long, conflicts_with = "plain")]
    bip: bool,
    /// Ordinary (not induced) Turán number, no K_{s,s} condition.
    #[arg(long)]
    plain: bool,
    /// Largest n accepted.
    #[arg(long, env = "TURAN_BUDGET")]
    budget: Option<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ThresholdArgs {
    /// Common-neighbourhood size that makes a set rich.
    #[arg(long)]
    c_hs: Option<usize>,
    /// Size of the disjoint sets picked in the Hall step.
    #[arg(long)]
    hall_t: Option<usize>,
    /// Blowup part size.
    #[arg(long)]
    m_blow: Option<usize>,
    /// Density of rich sets, as a fraction in (0, 1).
    #[arg(long)]
    gamma: Option<String>,
    /// Random attempts before the exhaustive pass.
    #[arg(long)]
    retries: Option<usize>,
}

impl ThresholdArgs {
    fn thresholds(&self) -> Result<Thresholds, CliError> {
        let mut th = Thresholds::default();
        if let Some(v) = self.c_hs {
            th.c_hs = v;
        }
        if let Some(v) = self.hall_t {
            th.hall_t = v;
        }
        if let Some(v) = self.m_blow {
            th.m_blow = v;
        }
        if let Some(v) = &self.gamma {
            th.gamma = rational::parse(v).ok_or_else(|| CliError::Usage(format!("bad fraction {v:?}")))?;
        }
        if let Some(v) = self.retries {
            th.retries = v;
        }
        th.validate()?;
        Ok(th)
    }
}

#[derive(Args, Debug)]
pub struct RunArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also write the trace to this file.
    #[arg(long)]
    trace: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum EmbedCommand {
    /// Enumerate good induced copies of a tree.
    Tree {
        /// Host graph document.
        #[arg(long)]
        host: PathBuf,
        /// Document for the subgraph L (default: the host itself).
        #[arg(long)]
        subgraph: Option<PathBuf>,
        /// Tree pattern: descriptor or document.
        #[arg(long)]
        tree: String,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 2)]
        s: usize,
        /// Keep only copies without a heavy star with this many leaves.
        #[arg(long, requires = "heavy_threshold")]
        admissible_p: Option<usize>,
        #[arg(long, requires = "admissible_p")]
        heavy_threshold: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Embed a bipartite template from a blowup of rich sets.
    Keylemma {
        /// Host document with a partition (X, Y).
        #[arg(long, required_unless_present = "planted_m", requires = "parts")]
        host: Option<PathBuf>,
        /// Template: descriptor or document.
        #[arg(long)]
        h: String,
        /// Blowup parts in the order of A, e.g. `0,1;2,3;4,5`.
        #[arg(long)]
        parts: Option<String>,
        /// Use a planted host with parts of this size instead of --host.
        #[arg(long, conflicts_with = "host")]
        planted_m: Option<usize>,
        /// Private Y vertices per transversal in the planted host.
        #[arg(long, default_value_t = 2)]
        planted_w: usize,
        /// Isolated padding vertices in the planted host.
        #[arg(long, default_value_t = 0)]
        planted_pad: usize,
        #[command(flatten)]
        thresholds: ThresholdArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Embed a template with bounded B-side degrees from one neighbourhood.
    Asym {
        /// Host document with a partition; M is the whole host.
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        h: String,
        /// Minimum degree required of every vertex of Y.
        #[arg(long, default_value_t = 0)]
        delta_y: usize,
        #[command(flatten)]
        thresholds: ThresholdArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Extract an induced rooted power from semi-induced copies.
    Extract {
        /// Rooted family descriptor for F.
        #[arg(long)]
        family: String,
        /// Host document.
        #[arg(long, required_unless_present = "planted_lambda", requires = "copies")]
        host: Option<PathBuf>,
        /// JSON array of maps (arrays of host vertices).
        #[arg(long)]
        copies: Option<PathBuf>,
        /// Use F^lambda with extra edges between the --dirty copies.
        #[arg(long, conflicts_with = "host")]
        planted_lambda: Option<usize>,
        #[arg(long, default_value = "")]
        dirty: String,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        s: usize,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 2)]
    s: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum CheckCommand {
    /// Bad sets of K_{s,s}-free graphs stay small.
    Badset(CheckArgs),
    /// Dense bipartite graphs have rich s-sets.
    Rich(CheckArgs),
    /// K_{s,s}-free bipartite graphs obey the Kővári–Sós–Turán bound.
    Kst(CheckArgs),
}

#[derive(Args, Debug)]
pub struct ExportArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    Domain(Error),
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(Error::Descriptor(_)) | CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("outputs serialise");
    out.push('\n');
    out
}

fn emit(text: &str, path: Option<&Path>) -> CliResult<()> {
    match path {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| CliError::Domain(Error::Document(format!("{}: {e}", p.display()))))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn family(desc: &str) -> CliResult<Family> {
    Ok(desc.parse::<Descriptor>()?.build()?)
}

/// A descriptor, or a path to a graph document when such a file exists.
fn pattern(arg: &str) -> CliResult<(Graph, Option<turan_core::Bipartition>)> {
    if Path::new(arg).is_file() {
        let doc = Document::load(Path::new(arg))?;
        Ok((doc.graph()?, doc.partition.clone()))
    } else {
        let fam = family(arg)?;
        Ok((fam.graph().clone(), fam.partition))
    }
}

fn template(arg: &str) -> CliResult<BipartiteTemplate> {
    let (g, partition) = pattern(arg)?;
    Ok(match partition {
        Some(p) => BipartiteTemplate::new(g, p)?,
        None => BipartiteTemplate::from_bipartite(g)?,
    })
}

fn rooted(source: &SourceArgs) -> CliResult<RootedGraph> {
    match (&source.family, &source.input) {
        (Some(desc), _) => Ok(family(desc)?.rooted),
        (None, Some(path)) => Ok(Document::load(path)?.rooted()?),
        (None, None) => Err(CliError::Usage("one of --family or --input is required".into())),
    }
}

fn list(text: &str) -> CliResult<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::Usage(format!("bad vertex {t:?}"))))
        .collect()
}

fn write_trace<T: Serialize>(trace: &T, path: Option<&Path>) -> CliResult<()> {
    match path {
        Some(p) => emit(&json(trace), Some(p)),
        None => Ok(()),
    }
}

pub fn run(command: Command) -> CliResult<ExitCode> {
    match command {
        Command::Family(args) => {
            let fam = family(&args.family)?;
            let doc = fam.to_document();
            let text = match args.format {
                Format::Json => doc.to_json(),
                Format::Dot => doc.to_dot()?,
                Format::Table => {
                    let r = rho(&fam.rooted);
                    format!(
                        "n\t{}\nedges\t{}\nroots\t{:?}\nrho\t{}\n",
                        doc.n,
                        doc.edges.len(),
                        fam.rooted.roots(),
                        r
                    )
                }
            };
            emit(&text, args.output.as_deref())?;
        }
        Command::Rho(source) => {
            println!("{}", rho(&rooted(&source)?));
        }
        Command::Balanced(args) => {
            let report = is_balanced(&rooted(&args.source)?)?;
            let text = match args.format {
                Format::Table => format!(
                    "rho\t{}\nbalanced\t{}\nwitness\t{:?}\n",
                    report.rho, report.balanced, report.witness
                ),
                _ => json(&report),
            };
            print!("{text}");
        }
        Command::Realize(args) => {
            let cert = certify(args.a, args.b, args.l)?;
            emit(&json(&cert), args.output.as_deref())?;
        }
        Command::Sweep(args) => {
            let certs = enumerate_realizable(args.amax, args.bmax)?;
            let text = match args.format {
                Format::Table => {
                    let mut out = String::from("a\tb\texponent\tbase\treductions\ts0\n");
                    for c in &certs {
                        let base = serde_json::to_string(&c.base).expect("serialisable");
                        let _ = writeln!(
                            out,
                            "{}\t{}\t{}\t{}\t{}\t{}",
                            c.a, c.b, c.exponent, base, c.reductions, c.s0
                        );
                    }
                    out
                }
                _ => json(&certs),
            };
            emit(&text, args.output.as_deref())?;
        }
        Command::Extremal(args) => {
            let budget = args.budget.unwrap_or(if args.bip {
                turan_core::oracles::BIP_BUDGET
            } else {
                turan_core::oracles::STAR_BUDGET
            });
            let result = if args.plain {
                extremal_plain_with_budget(args.n, &pattern(&args.h)?.0, budget)?
            } else {
                let s = args.s.expect("clap enforces --s");
                if args.bip {
                    extremal_bip_star_with_budget(args.n, &template(&args.h)?, s, budget)?
                } else {
                    extremal_star_with_budget(args.n, &pattern(&args.h)?.0, s, budget)?
                }
            };
            emit(&json(&result), args.output.as_deref())?;
        }
        Command::Embed(cmd) => return embed(cmd),
        Command::Check(cmd) => {
            let (check, args) = match cmd {
                CheckCommand::Badset(a) => (FuzzCheck::BadSet, a),
                CheckCommand::Rich(a) => (FuzzCheck::Rich, a),
                CheckCommand::Kst(a) => (FuzzCheck::Kst, a),
            };
            let report = fuzz(check, args.trials, args.seed, args.s);
            emit(&json(&report), args.output.as_deref())?;
            if !report.violations.is_empty() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Export(args) => {
            let doc = Document::load(&args.input)?;
            let text = match args.format {
                Format::Dot => doc.to_dot()?,
                Format::Json => {
                    // normalise through the graph so edges come out sorted
                    Document::new(&doc.graph()?, doc.roots.clone(), doc.partition.clone()).to_json()
                }
                Format::Table => return Err(CliError::Usage("export supports json and dot".into())),
            };
            emit(&text, args.output.as_deref())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn embed(cmd: EmbedCommand) -> CliResult<ExitCode> {
    match cmd {
        EmbedCommand::Tree {
            host,
            subgraph,
            tree,
            d,
            s,
            admissible_p,
            heavy_threshold,
            output,
        } => {
            let doc = Document::load(&host)?;
            let host = doc.host(s)?;
            let l = match subgraph {
                Some(p) => Subgraph::new(&host.graph, Document::load(&p)?.graph()?)?,
                None => Subgraph::new(&host.graph, host.graph.clone())?,
            };
            let (t, _) = pattern(&tree)?;
            let mut out = greedy_tree_embed(&host, &l, &t, d)?;
            if let (Some(p), Some(thr)) = (admissible_p, heavy_threshold) {
                out.maps = admissible_copies(&l, &t, &out.maps, p, thr);
            }
            emit(&json(&out), output.as_deref())?;
        }
        EmbedCommand::Keylemma {
            host,
            h,
            parts,
            planted_m,
            planted_w,
            planted_pad,
            thresholds,
            run,
        } => {
            let h = template(&h)?;
            let th = thresholds.thresholds()?;
            let (host, l, parts) = match planted_m {
                Some(m) => {
                    let fx = planted_key_lemma(&h, m, planted_w, planted_pad)?;
                    (fx.host, fx.l, fx.parts)
                }
                None => {
                    let host = Document::load(host.as_deref().expect("clap enforces --host"))?.host(2)?;
                    let parts = parts
                        .as_deref()
                        .expect("clap enforces --parts")
                        .split(';')
                        .map(list)
                        .collect::<CliResult<Vec<_>>>()?;
                    let l = Subgraph::new(&host.graph, host.graph.clone())?;
                    (host, l, parts)
                }
            };
            let outcome = key_lemma_embed(&host, &l, &h, &parts, &th, run.seed)?;
            write_trace(&outcome.trace, run.trace.as_deref())?;
            emit(&json(&outcome), run.output.as_deref())?;
        }
        EmbedCommand::Asym {
            host,
            h,
            delta_y,
            thresholds,
            run,
        } => {
            let h = template(&h)?;
            let th = thresholds.thresholds()?;
            let host: Host = Document::load(&host)?.host(2)?;
            let m = Subgraph::new(&host.graph, host.graph.clone())?;
            let outcome = asymmetric_embed(&host, &m, &h, &th, delta_y, run.seed)?;
            write_trace(&outcome.trace, run.trace.as_deref())?;
            emit(&json(&outcome), run.output.as_deref())?;
        }
        EmbedCommand::Extract {
            family: desc,
            host,
            copies,
            planted_lambda,
            dirty,
            l,
            s,
            run,
        } => {
            let f = family(&desc)?.rooted;
            let (g, copies) = match planted_lambda {
                Some(lambda) => {
                    let fx = planted_semi_induced(&f, lambda, &list(&dirty)?)?;
                    (fx.graph, fx.copies)
                }
                None => {
                    let g = Document::load(host.as_deref().expect("clap enforces --host"))?.graph()?;
                    let path = copies.expect("clap enforces --copies");
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| CliError::Domain(Error::Document(format!("{}: {e}", path.display()))))?;
                    let maps: Vec<VertexMap> =
                        serde_json::from_str(&text).map_err(|e| CliError::Domain(Error::Document(e.to_string())))?;
                    (g, maps)
                }
            };
            let out = extract_induced_power(&g, &copies, &f, l, s)?;
            write_trace(&out.outcome.trace, run.trace.as_deref())?;
            emit(&json(&out), run.output.as_deref())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
