//! Command-line workbench: family generation, exact spectra, cospectrality,
//! invariant reports, SRG queries, DS verdicts, censuses, cospectral
//! constructions, and NICS certificates.
//!
//! Exit codes: 0 success, 1 precondition/usage error, 2 I/O error.

use clap::{Args, Parser, Subcommand};
use specdet_core::cache::{census_with_cache, FingerprintCache};
use specdet_core::certify::{certified_nics, NicsRecipe};
use specdet_core::constructions::{
    bipartite_incidence, coalesce, corona_product, duplication, find_seidel_subsets, gm_switch,
    sb_join, schwenk_pair, seidel_switch, splitting_join, subdivision, CoronaKind, SbJoinKind,
    SplitJoinKind,
};
use specdet_core::ds::{ds_verdict, enumerate_graphs, DsVerdict};
use specdet_core::invariants::invariant_report;
use specdet_core::io::{
    emit_dot, emit_edge_list_json, emit_graph6, parse_edge_list_json, parse_graph6,
};
use specdet_core::roots::numeric_roots;
use specdet_core::spectra::{char_poly, fingerprint, fingerprint_json, parse_kinds, MatrixKind};
use specdet_core::srg::{detect_srg, lovasz_theta_srg, srg_girth_diameter, srg_spectrum, SrgParams};
use specdet_core::{FamilySpec, Graph};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "specdet", version, about = "Exact spectral graph determination workbench")]
struct Cli {
    /// Worker threads (0 = logical cores)
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Seed for randomized searches
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Fingerprint cache directory (default: env SPECDET_CACHE)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Permit the long-running n = 10 enumeration
    #[arg(long, global = true)]
    allow_n10: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FamilyArgs {
    /// complete|empty|path|cycle|star|complete-bipartite|complete-multipartite|
    /// turan|pyramid|friendship|generalized-friendship|wheel|lollipop|sandglass|
    /// petersen|lattice|triangular|nice-sunlike
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    /// Part sizes for complete-multipartite, e.g. 2,2,3
    #[arg(long)]
    parts: Option<String>,
    /// Cycle length for nice-sunlike
    #[arg(long)]
    l: Option<usize>,
    /// Walk steps for nice-sunlike, each 4 or 6, e.g. 4,6
    #[arg(long)]
    steps: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named family member
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        /// g6|json|dot
        #[arg(long, default_value = "g6")]
        out: String,
    },
    /// Exact characteristic polynomials of a graph
    Spectrum {
        #[arg(long, default_value = "A")]
        kinds: String,
        /// Also print double-precision root approximations
        #[arg(long)]
        numeric: bool,
        file: PathBuf,
    },
    /// Decide exact cospectrality of two graphs
    Cospectral {
        #[arg(long, default_value = "A")]
        kinds: String,
        a: PathBuf,
        b: PathBuf,
    },
    /// Spectrum-derived invariant report
    Invariants { file: PathBuf },
    /// Strongly regular parameters: closed-form spectrum, theta, girth
    Srg {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        lambda: Option<usize>,
        #[arg(long)]
        mu: Option<usize>,
        /// Detect parameters from a graph file instead
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Spectral-determination verdict: DS or the list of mates
    Ds {
        #[arg(long, default_value = "A")]
        kinds: String,
        #[arg(long)]
        graph: PathBuf,
    },
    /// Full cospectrality census at one vertex count
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "A")]
        kinds: String,
    },
    /// Apply a cospectral construction
    Construct {
        /// seidel-switch|seidel-search|gm-switch|coalesce|schwenk|duplication|
        /// corona|edge-corona|duplication-corona|duplication-neighborhood-corona|
        /// duplication-edge-corona|closed-neighborhood-corona|subdivision|
        /// bipartite-incidence|sb-vv|sb-ee|sb-ev|sb-ve|ns|nns
        #[arg(long)]
        op: String,
        /// Vertex subset for switching ops, e.g. 0,3
        #[arg(long)]
        subset: Option<String>,
        /// Subset size for seidel-search
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        v1: Option<usize>,
        #[arg(long)]
        v2: Option<usize>,
        /// Attachment root for schwenk
        #[arg(long)]
        root: Option<usize>,
        /// g6|json|dot
        #[arg(long, default_value = "g6")]
        out: String,
        files: Vec<PathBuf>,
    },
    /// Build and verify a NICS certificate from seed graphs
    Certify {
        /// bh-ns|bh-nns|das-vv|das-ee|das-ev|das-ve|adiga-dc|adiga-dnc|
        /// adiga-dec|sonar-cnc-left|sonar-cnc-right
        #[arg(long)]
        recipe: String,
        /// Seed graph files: g1 h1 g2 h2, or g1 g2 h for the sonar recipes
        #[arg(long, num_args = 1.., required = true)]
        seeds: Vec<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            if err.use_stderr() {
                eprintln!("{err}");
                return ExitCode::from(1);
            }
            print!("{err}");
            return ExitCode::SUCCESS;
        }
    };
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global().ok();
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("specdet: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

enum CliError {
    Precondition(String),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Precondition(_) => 1,
            CliError::Io(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Precondition(m) | CliError::Io(m) => write!(f, "{m}"),
        }
    }
}

impl From<specdet_core::Error> for CliError {
    fn from(err: specdet_core::Error) -> Self {
        match err {
            specdet_core::Error::CacheIo(e) => CliError::Io(e.to_string()),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_graph(path: &PathBuf) -> CliResult<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        Ok(parse_edge_list_json(trimmed)?)
    } else {
        let line = trimmed.lines().next().unwrap_or_default();
        Ok(parse_graph6(line)?)
    }
}

fn emit_graph(g: &Graph, format: &str) -> CliResult<String> {
    match format {
        "g6" => Ok(emit_graph6(g)),
        "json" => Ok(emit_edge_list_json(g)),
        "dot" => Ok(emit_dot(g)),
        other => Err(CliError::Precondition(format!("unknown output format '{other}'"))),
    }
}

fn parse_usize_list(text: &str, what: &str) -> CliResult<Vec<usize>> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Precondition(format!("bad {what} entry '{t}'")))
        })
        .collect()
}

fn family_spec(args: &FamilyArgs) -> CliResult<FamilySpec> {
    let need = |value: Option<usize>, flag: &str| {
        value.ok_or_else(|| {
            CliError::Precondition(format!("family '{}' requires --{flag}", args.family))
        })
    };
    Ok(match args.family.as_str() {
        "complete" => FamilySpec::Complete(need(args.n, "n")?),
        "empty" => FamilySpec::Empty(need(args.n, "n")?),
        "path" => FamilySpec::Path(need(args.n, "n")?),
        "cycle" => FamilySpec::Cycle(need(args.n, "n")?),
        "star" => FamilySpec::Star(need(args.n, "n")?),
        "complete-bipartite" => {
            FamilySpec::CompleteBipartite(need(args.p, "p")?, need(args.q, "q")?)
        }
        "complete-multipartite" => {
            let parts = args.parts.as_deref().ok_or_else(|| {
                CliError::Precondition("complete-multipartite requires --parts".into())
            })?;
            FamilySpec::CompleteMultipartite(parse_usize_list(parts, "parts")?)
        }
        "turan" => FamilySpec::Turan(need(args.n, "n")?, need(args.k, "k")?),
        "pyramid" => FamilySpec::Pyramid(need(args.n, "n")?, need(args.k, "k")?),
        "friendship" => FamilySpec::Friendship(need(args.p, "p")?),
        "generalized-friendship" => {
            FamilySpec::GeneralizedFriendship(need(args.p, "p")?, need(args.q, "q")?)
        }
        "wheel" => FamilySpec::Wheel(need(args.n, "n")?),
        "lollipop" => FamilySpec::Lollipop(need(args.n, "n")?, need(args.p, "p")?),
        "sandglass" => FamilySpec::Sandglass(need(args.n, "n")?),
        "petersen" => FamilySpec::Petersen,
        "lattice" => FamilySpec::Lattice(need(args.q, "q")?),
        "triangular" => FamilySpec::Triangular(need(args.k, "k")?),
        "nice-sunlike" => {
            let steps = args
                .steps
                .as_deref()
                .ok_or_else(|| CliError::Precondition("nice-sunlike requires --steps".into()))?;
            FamilySpec::NiceSunlike(need(args.l, "l")?, parse_usize_list(steps, "steps")?)
        }
        other => return Err(CliError::Precondition(format!("unknown family '{other}'"))),
    })
}

fn cache_from(cli: &Cli) -> CliResult<Option<FingerprintCache>> {
    let dir = cli
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os("SPECDET_CACHE").map(PathBuf::from));
    match dir {
        Some(dir) => Ok(Some(FingerprintCache::open(&dir)?)),
        None => Ok(None),
    }
}

fn run(cli: &Cli) -> CliResult<()> {
    match &cli.command {
        Command::Gen { family, out } => {
            let g = specdet_core::generate(&family_spec(family)?)?;
            println!("{}", emit_graph(&g, out)?);
        }
        Command::Spectrum { kinds, numeric, file } => {
            let g = read_graph(file)?;
            let kinds = parse_kinds(kinds)?;
            let fp = fingerprint(&g, &kinds);
            let mut entries: Vec<serde_json::Value> = Vec::new();
            for item in fingerprint_json(&fp) {
                let mut value = serde_json::json!({ "kind": item.kind, "coeffs": item.coeffs });
                if *numeric {
                    let roots = numeric_roots(&fp[&MatrixKind::parse(item.kind).unwrap()]);
                    value["roots"] = serde_json::json!(roots);
                }
                entries.push(value);
            }
            println!("{}", serde_json::Value::Array(entries));
        }
        Command::Cospectral { kinds, a, b } => {
            let kinds = parse_kinds(kinds)?;
            let (g, h) = (read_graph(a)?, read_graph(b)?);
            if g.vertex_count() != h.vertex_count() {
                println!("DIFFER order");
                return Ok(());
            }
            for &kind in &kinds {
                if char_poly(&g, kind) != char_poly(&h, kind) {
                    println!("DIFFER kind={}", kind.name());
                    return Ok(());
                }
            }
            println!("COSPECTRAL");
        }
        Command::Invariants { file } => {
            let g = read_graph(file)?;
            let report = invariant_report(&g)?;
            println!("{}", serde_json::to_string(&report).unwrap());
        }
        Command::Srg { n, d, lambda, mu, graph } => {
            let params = match graph {
                Some(path) => {
                    let g = read_graph(path)?;
                    let p_a = char_poly(&g, MatrixKind::A);
                    match detect_srg(&p_a, g.vertex_count()) {
                        Some((params, _)) => params,
                        None => {
                            println!("null");
                            return Ok(());
                        }
                    }
                }
                None => {
                    let missing = || {
                        CliError::Precondition("srg needs --n --d --lambda --mu or --graph".into())
                    };
                    SrgParams::new(
                        n.ok_or_else(missing)?,
                        d.ok_or_else(missing)?,
                        lambda.ok_or_else(missing)?,
                        mu.ok_or_else(missing)?,
                    )?
                }
            };
            let spectrum = srg_spectrum(&params)?;
            let (girth, diameter) = srg_girth_diameter(&params)?;
            let theta = lovasz_theta_srg(&params)?;
            println!(
                "{}",
                serde_json::json!({
                    "n": params.n, "d": params.d, "lambda": params.lambda, "mu": params.mu,
                    "eigenvalues": {
                        "degree": spectrum.degree,
                        "p1": spectrum.p1.to_string(), "m1": spectrum.m1,
                        "p2": spectrum.p2.to_string(), "m2": spectrum.m2,
                    },
                    "theta": theta.to_string(),
                    "girth": girth,
                    "diameter": diameter,
                })
            );
        }
        Command::Ds { kinds, graph } => {
            let kinds = parse_kinds(kinds)?;
            let g = read_graph(graph)?;
            match ds_verdict(&g, &kinds, cli.allow_n10)? {
                DsVerdict::Determined => println!("DS"),
                DsVerdict::Mates(mates) => {
                    for mate in mates {
                        println!("{}", emit_graph6(&mate));
                    }
                }
            }
        }
        Command::Census { n, kinds } => {
            let kinds = parse_kinds(kinds)?;
            let cache = cache_from(cli)?;
            let graphs = enumerate_graphs(*n, None, cli.allow_n10)?;
            eprintln!("census: {} isomorphism classes on {n} vertices", graphs.len());
            let row = census_with_cache(*n, &kinds, &graphs, cache.as_ref())?;
            println!("{}", serde_json::to_string(&row).unwrap());
            for class in &row.nics_classes {
                println!();
                for member in class {
                    println!("{member}");
                }
            }
        }
        Command::Construct { op, subset, size, v1, v2, root, out, files } => {
            let outputs = run_construct(cli, op, subset, *size, *v1, *v2, *root, files)?;
            for g in outputs {
                println!("{}", emit_graph(&g, out)?);
            }
        }
        Command::Certify { recipe, seeds } => {
            let recipe = NicsRecipe::parse(recipe)
                .ok_or_else(|| CliError::Precondition(format!("unknown recipe '{recipe}'")))?;
            let graphs: Vec<Graph> = seeds.iter().map(read_graph).collect::<CliResult<_>>()?;
            let certificate = certified_nics(recipe, &graphs)?;
            println!("{}", certificate.to_json());
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run_construct(
    cli: &Cli,
    op: &str,
    subset: &Option<String>,
    size: Option<usize>,
    v1: Option<usize>,
    v2: Option<usize>,
    root: Option<usize>,
    files: &[PathBuf],
) -> CliResult<Vec<Graph>> {
    let file = |i: usize| -> CliResult<Graph> {
        files
            .get(i)
            .ok_or_else(|| CliError::Precondition(format!("op '{op}' needs {} graph files", i + 1)))
            .and_then(read_graph)
    };
    let subset_list = || -> CliResult<Vec<usize>> {
        parse_usize_list(
            subset
                .as_deref()
                .ok_or_else(|| CliError::Precondition(format!("op '{op}' needs --subset")))?,
            "subset",
        )
    };
    let need = |value: Option<usize>, flag: &str| {
        value.ok_or_else(|| CliError::Precondition(format!("op '{op}' needs --{flag}")))
    };
    Ok(match op {
        "seidel-switch" => vec![seidel_switch(&file(0)?, &subset_list()?)],
        "seidel-search" => {
            let g = file(0)?;
            let found = find_seidel_subsets(&g, need(size, "size")?, 32, cli.seed)?;
            for subset in &found {
                let rendered: Vec<String> = subset.iter().map(|v| v.to_string()).collect();
                println!("{}", rendered.join(","));
            }
            vec![]
        }
        "gm-switch" => vec![gm_switch(&file(0)?, &subset_list()?)?],
        "coalesce" => {
            vec![coalesce(&file(0)?, need(v1, "v1")?, &file(1)?, need(v2, "v2")?)?]
        }
        "schwenk" => {
            let (a, b) = schwenk_pair(
                &file(0)?,
                need(v1, "v1")?,
                &file(1)?,
                need(v2, "v2")?,
                &file(2)?,
                need(root, "root")?,
            )?;
            vec![a, b]
        }
        "duplication" => vec![duplication(&file(0)?)],
        "subdivision" => vec![subdivision(&file(0)?)],
        "bipartite-incidence" => vec![bipartite_incidence(&file(0)?)],
        "ns" => vec![splitting_join(SplitJoinKind::Neighbors, &file(0)?, &file(1)?)],
        "nns" => vec![splitting_join(SplitJoinKind::NonNeighbors, &file(0)?, &file(1)?)],
        _ => {
            if let Some(kind) = SbJoinKind::parse(op.strip_prefix("sb-").unwrap_or_default()) {
                vec![sb_join(kind, &file(0)?, &file(1)?)]
            } else if let Some(kind) = corona_kind(op) {
                vec![corona_product(kind, &file(0)?, &file(1)?)]
            } else {
                return Err(CliError::Precondition(format!("unknown construction op '{op}'")));
            }
        }
    })
}

fn corona_kind(op: &str) -> Option<CoronaKind> {
    match op {
        "corona" => Some(CoronaKind::Corona),
        "edge-corona" => Some(CoronaKind::Edge),
        "duplication-corona" => Some(CoronaKind::Duplication),
        "duplication-neighborhood-corona" => Some(CoronaKind::DuplicationNeighborhood),
        "duplication-edge-corona" => Some(CoronaKind::DuplicationEdge),
        "closed-neighborhood-corona" => Some(CoronaKind::ClosedNeighborhood),
        _ => None,
    }
}
