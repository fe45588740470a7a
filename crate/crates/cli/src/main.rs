use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use convexkit::convexity::{self, interval_report};
use convexkit::dot::to_dot;
use convexkit::generators::{complete_graph, cycle_graph, path_graph, star_graph, two_clique_bridge};
use convexkit::io::{encode_edge_list, encode_graph6, parse_graph6, parse_graph_text};
use convexkit::products::{self, ProductGraph};
use convexkit::verify::{self, CorpusSpec};
use convexkit::{Error, Graph, IntervalKind, VertexSet};

#[derive(Parser)]
#[command(name = "convexkit", version, about = "Weakly toll convexity on graphs and graph products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print an interval between two vertices.
    Interval {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value = "wt")]
        kind: IntervalKind,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        /// Also print the vertices the weakly toll interval misses.
        #[arg(long)]
        report: bool,
    },
    /// Exact weakly toll number or hull number.
    Invariant {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        what: What,
        #[arg(long)]
        witness: bool,
    },
    /// Hull of a vertex set.
    Hull {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value = "wt")]
        kind: IntervalKind,
        /// Vertex ids separated by commas or spaces.
        #[arg(long)]
        set: String,
    },
    /// Build a product and write it out.
    Product {
        #[arg(long)]
        kind: ProductArg,
        #[arg(long)]
        g: String,
        /// Second factor; repeat once per base vertex for `gcorona`.
        #[arg(long, required = true)]
        h: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "edges")]
        format: Format,
    },
    /// Write a graph as Graphviz DOT.
    Export {
        #[command(flatten)]
        input: GraphInput,
        /// Output file, `-` for stdout.
        #[arg(long)]
        dot: PathBuf,
    },
    /// Run verification checks and write a JSON-lines report.
    Verify {
        /// `all`, a check id, or a check family such as `corona`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// TOML corpus spec; defaults apply to missing keys.
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Per-check counts as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        timing: bool,
        /// Print the default spec and exit.
        #[arg(long)]
        print_spec: bool,
        /// List check ids and exit.
        #[arg(long)]
        list: bool,
    },
}

/// A plain graph (`--graph`) or a product of factors (`--product`).
#[derive(Args)]
struct GraphInput {
    /// File (graph6 or edge list), a graph6 string, or a family such as
    /// `path:4`, `cycle:5`, `complete:3`, `star:3`, `bridge:3`.
    #[arg(long, conflicts_with = "product")]
    graph: Option<String>,
    #[arg(long, requires = "g")]
    product: Option<ProductArg>,
    #[arg(long)]
    g: Option<String>,
    #[arg(long)]
    h: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Wtn,
    Wth,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductArg {
    Lex,
    Cart,
    Strong,
    Corona,
    Gcorona,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
    Dot,
}

enum Loaded {
    Plain(Graph),
    Product(ProductGraph),
}

impl Loaded {
    fn graph(&self) -> &Graph {
        match self {
            Loaded::Plain(g) => g,
            Loaded::Product(p) => &p.graph,
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Run(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::UnknownCheck(_) => Failure::Usage(e.to_string()),
            _ => Failure::Run(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Run(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn read_graph(source: &str) -> CliResult<Graph> {
    if let Some((family, k)) = source.split_once(':') {
        let k: usize = k
            .parse()
            .map_err(|_| Failure::Usage(format!("bad size in {source:?}")))?;
        let g = match family {
            "path" => path_graph(k),
            "cycle" => cycle_graph(k),
            "complete" => complete_graph(k),
            "star" => star_graph(k),
            "bridge" => two_clique_bridge(k),
            _ => return Err(Failure::Usage(format!("unknown graph family {family:?}"))),
        };
        return Ok(g?);
    }
    let path = Path::new(source);
    if path.is_file() {
        let text = fs::read_to_string(path)?;
        return Ok(parse_graph_text(&text)?);
    }
    Ok(parse_graph6(source)?)
}

fn build_product(kind: ProductArg, g: &str, hs: &[String]) -> CliResult<ProductGraph> {
    let g = read_graph(g)?;
    let hs = hs.iter().map(|h| read_graph(h)).collect::<CliResult<Vec<_>>>()?;
    if hs.is_empty() {
        return Err(Failure::Usage("--h is required".into()));
    }
    if !matches!(kind, ProductArg::Gcorona) && hs.len() != 1 {
        return Err(Failure::Usage(format!("expected one --h, got {}", hs.len())));
    }
    let h = &hs[0];
    Ok(match kind {
        ProductArg::Lex => products::lexicographic(&g, h),
        ProductArg::Cart => products::cartesian(&g, h),
        ProductArg::Strong => products::strong(&g, h),
        ProductArg::Corona => products::corona(&g, h),
        ProductArg::Gcorona => products::generalized_corona(&g, &hs)?,
    })
}

fn load(input: &GraphInput) -> CliResult<Loaded> {
    match (&input.graph, input.product) {
        (Some(src), None) => Ok(Loaded::Plain(read_graph(src)?)),
        (None, Some(kind)) => {
            let g = input.g.as_deref().expect("clap enforces --g");
            Ok(Loaded::Product(build_product(kind, g, &input.h)?))
        }
        _ => Err(Failure::Usage("give either --graph or --product with --g and --h".into())),
    }
}

fn parse_set(n: usize, text: &str) -> CliResult<VertexSet> {
    let mut set = VertexSet::empty(n);
    for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let v: usize = tok
            .parse()
            .map_err(|_| Failure::Usage(format!("bad vertex id {tok:?}")))?;
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n }.into());
        }
        set.insert(v);
    }
    Ok(set)
}

/// Ids on one line for plain graphs; one `id<TAB>label` line per vertex
/// for products.
fn print_set(out: &mut impl Write, loaded: &Loaded, set: &VertexSet) -> io::Result<()> {
    match loaded {
        Loaded::Plain(_) => writeln!(out, "{set}"),
        Loaded::Product(p) => {
            for v in set.iter() {
                writeln!(out, "{v}\t{}", p.graph.label(v))?;
            }
            Ok(())
        }
    }
}

fn encode(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => format!("{}\n", encode_graph6(g)),
        Format::Edges => {
            let mut text = String::new();
            if g.names().is_some() {
                for v in g.vertices() {
                    text.push_str(&format!("# {v} {}\n", g.label(v)));
                }
            }
            text.push_str(&encode_edge_list(g));
            text
        }
        Format::Dot => to_dot(g, None),
    }
}

fn write_output(path: Option<&Path>, text: &str) -> io::Result<()> {
    match path {
        Some(p) if p != Path::new("-") => fs::write(p, text),
        _ => io::stdout().write_all(text.as_bytes()),
    }
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Interval {
            input,
            kind,
            u,
            v,
            report,
        } => {
            let loaded = load(&input)?;
            let g = loaded.graph();
            let set = convexkit::intervals::interval(g, u, v, kind)?;
            print_set(&mut out, &loaded, &set)?;
            if report {
                let r = interval_report(g, u, v)?;
                writeln!(out, "outside: {}", r.outside)?;
                writeln!(out, "outside_u: {}", r.outside_u)?;
                writeln!(out, "outside_v: {}", r.outside_v)?;
                writeln!(out, "maximum: {}", r.is_maximum)?;
            }
        }
        Command::Invariant { input, what, witness } => {
            let loaded = load(&input)?;
            let g = loaded.graph();
            let inv = match what {
                What::Wtn => convexity::wtn(g)?,
                What::Wth => convexity::wth(g)?,
            };
            writeln!(out, "{}", inv.value)?;
            if witness {
                let set = VertexSet::from_iter(g.n(), inv.witness.iter().copied());
                print_set(&mut out, &loaded, &set)?;
            }
        }
        Command::Hull { input, kind, set } => {
            let loaded = load(&input)?;
            let g = loaded.graph();
            let s = parse_set(g.n(), &set)?;
            let h = convexity::hull(g, &s, kind)?;
            print_set(&mut out, &loaded, &h)?;
        }
        Command::Product {
            kind,
            g,
            h,
            out: path,
            format,
        } => {
            let p = build_product(kind, &g, &h)?;
            drop(out);
            write_output(path.as_deref(), &encode(&p.graph, format))?;
        }
        Command::Export { input, dot } => {
            let loaded = load(&input)?;
            drop(out);
            write_output(Some(&dot), &to_dot(loaded.graph(), None))?;
        }
        Command::Verify {
            suite,
            spec,
            out: report,
            csv,
            timing,
            print_spec,
            list,
        } => {
            if print_spec {
                write!(out, "{}", CorpusSpec::default().to_toml())?;
                return Ok(ExitCode::SUCCESS);
            }
            if list {
                for id in verify::CHECKS {
                    writeln!(out, "{id}")?;
                }
                return Ok(ExitCode::SUCCESS);
            }
            let mut spec = match spec {
                Some(path) => CorpusSpec::load(&path)?,
                None => CorpusSpec::default(),
            };
            spec.timing |= timing;
            verify::resolve_suite(&suite)?;
            let verdicts = verify::run_suite(&suite, &spec)?;
            if let Some(path) = report {
                verify::write_jsonl(&verdicts, BufWriter::new(File::create(path)?))?;
            }
            let summary = verify::summarize(&verdicts);
            if let Some(path) = csv {
                verify::write_csv(&summary, File::create(path)?)?;
            }
            for c in &summary.checks {
                writeln!(
                    out,
                    "{:<28} {:>5} match {:>3} mismatch {:>5} skipped{}",
                    c.check,
                    c.matched,
                    c.mismatched,
                    c.skipped,
                    if c.extension > 0 { format!(" ({} extension)", c.extension) } else { String::new() }
                )?;
            }
            writeln!(
                out,
                "total: {} match, {} mismatch, {} skipped",
                summary.matched, summary.mismatched, summary.skipped
            )?;
            return Ok(ExitCode::from(summary.exit_code() as u8));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
