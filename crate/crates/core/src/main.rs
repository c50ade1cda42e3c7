use std::error::Error as StdError;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tdkernel::cnf::CnfFormula;
use tdkernel::io::{
    emit_report, parse_cnf, parse_instance, serialize_instance, CertificateFile, GraphInstance, Instance,
};
use tdkernel::kernel::{annotated_pipeline, full_pipeline};
use tdkernel::modulator::{compute_modulator, ModulatorMode};
use tdkernel::reductions::{
    compose_disjoint_union, cross_compose_3sat, ds_subdivision_instance, edge_gadget_vc_to_ds,
    gen_logtd_instance, lower_bound_family, reduce_vc_ds_deg2, LabeledInstance,
};
use tdkernel::solver::annotated::alpha_annotated;
use tdkernel::solver::domset::dominating_set_exact;
use tdkernel::solver::mis::{alpha_with, IsEngine};
use tdkernel::treedepth::{is_c_modulator, td_exact, verify_decomposition, TdDecomposition};
use tdkernel::{Graph, VertexSet};

type CliResult<T> = Result<T, Box<dyn StdError>>;

/// Kernelization and instance generation for Independent Set and
/// Dominating Set parameterized by treedepth modulators.
#[derive(Parser)]
#[command(name = "tdkernel", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kernelize an Independent Set instance into a plain graph instance.
    Kernelize(KernelizeArgs),
    /// Solve an instance exactly.
    Solve {
        #[arg(value_enum)]
        problem: Problem,
        #[arg(long = "in")]
        input: PathBuf,
        /// Dominating Set only: give up above this size.
        #[arg(long)]
        kmax: Option<usize>,
        /// Independent Set engine for plain graphs.
        #[arg(long, value_enum, default_value = "bnb")]
        engine: Engine,
    },
    /// Compute or check treedepth decompositions.
    Td {
        #[arg(value_enum)]
        action: TdAction,
        #[arg(long = "in")]
        input: PathBuf,
        /// Decomposition to check, as written by `td compute`.
        #[arg(long)]
        decomposition: Option<PathBuf>,
    },
    /// Compute a c-treedepth modulator.
    Modulator {
        #[arg(long)]
        c: usize,
        #[arg(long, value_enum, default_value = "greedy")]
        mode: Mode,
        #[arg(long = "in")]
        input: PathBuf,
        /// Write the input back with the modulator attached.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate instances of the hardness constructions.
    Gen {
        #[command(subcommand)]
        generator: Generator,
    },
    /// Check instances against each other or against their certificates.
    Verify {
        #[command(subcommand)]
        check: Check,
    },
}

#[derive(Args)]
struct KernelizeArgs {
    /// Treedepth level of the modulator; defaults to the file header.
    #[arg(long)]
    c: Option<usize>,
    /// File listing modulator vertices (`x` lines or bare ids).
    #[arg(long)]
    modulator: Option<PathBuf>,
    /// How to compute a modulator when none is given.
    #[arg(long, value_enum, default_value = "greedy")]
    mode: Mode,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    report: Option<PathBuf>,
    /// Record wall time in the report (makes it run-dependent).
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    Is,
    Ds,
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Bnb,
    Dp,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum TdAction {
    Compute,
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Greedy,
}

impl From<Mode> for ModulatorMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Exact => ModulatorMode::Exact,
            Mode::Greedy => ModulatorMode::Greedy,
        }
    }
}

#[derive(Args)]
struct GenOut {
    /// Instance output; stdout if absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Certificate output (JSON).
    #[arg(long)]
    certs: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Generator {
    /// Subdivide every edge 3c times; the DS budget grows by m*c.
    Subdivide {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        c: usize,
        #[command(flatten)]
        out: GenOut,
    },
    /// OR-compose 3-CNF formulas into a Dominating Set instance.
    Crosscompose {
        /// DIMACS CNF files sharing variable and clause counts.
        #[arg(long = "cnf", required = true, num_args = 1..)]
        cnf: Vec<PathBuf>,
        #[command(flatten)]
        out: GenOut,
    },
    /// Conflict lower-bound family member `t`.
    Lowerbound {
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        out: GenOut,
    },
    /// Vertex Cover to Dominating Set on a 2-degenerate graph.
    Vcds {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        out: GenOut,
    },
    /// Vertex Cover to Dominating Set with one vertex per edge.
    Edgegadget {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        out: GenOut,
    },
    /// Red-blue Dominating Set to a Dominating Set instance with a grid.
    Logtd {
        #[arg(long)]
        u: usize,
        #[arg(long)]
        w: usize,
        /// Edge `i,j` between red `i` and blue `j`; repeatable.
        #[arg(long = "edge", value_parser = parse_pair)]
        edges: Vec<(usize, usize)>,
        #[arg(long)]
        k: i64,
        #[command(flatten)]
        out: GenOut,
    },
    /// Disjoint union with summed budgets.
    Union {
        #[arg(long = "in", required = true, num_args = 1..)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        out: GenOut,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Compare the threshold answers of two instances.
    Equivalence {
        #[arg(long)]
        before: PathBuf,
        #[arg(long)]
        after: PathBuf,
        #[arg(long, value_enum)]
        oracle: Problem,
    },
    /// Check a generated instance against its certificate file.
    Certificates {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        certs: PathBuf,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected `i,j`")?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((parse(a)?, parse(b)?))
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn write_or_print(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display()).into()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> CliResult<Instance> {
    let parsed = parse_instance(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    for w in &parsed.warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(parsed.instance)
}

fn load_graph(path: &Path) -> CliResult<GraphInstance> {
    match load(path)? {
        Instance::Graph(g) => Ok(g),
        Instance::Annotated(_) => Err(format!("{}: expected a graph file", path.display()).into()),
    }
}

fn read_vertex_list(path: &Path) -> CliResult<VertexSet> {
    let mut ids = Vec::new();
    for line in read(path)?.lines() {
        let mut toks = line.split_whitespace().peekable();
        match toks.peek() {
            Some(&"c") | None => continue,
            Some(&"x") => {
                toks.next();
            }
            _ => {}
        }
        for t in toks {
            ids.push(t.parse::<usize>().map_err(|_| format!("{}: bad vertex id `{t}`", path.display()))?);
        }
    }
    Ok(VertexSet::from_vec(ids))
}

fn join(set: impl IntoIterator<Item = usize>) -> String {
    set.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn graph_file(graph: Graph, c: usize, k: i64, modulator: Option<VertexSet>) -> String {
    serialize_instance(&Instance::Graph(GraphInstance {
        graph,
        c,
        k,
        modulator,
    }))
}

fn emit_generated(inst: LabeledInstance, out: &GenOut) -> CliResult<()> {
    if let Some(p) = &out.certs {
        let json = serde_json::to_string_pretty(&CertificateFile::of(&inst))? + "\n";
        write_or_print(Some(p), &json)?;
    }
    let level = inst.modulator_level.unwrap_or(0);
    let modulator = inst.modulator_level.and(inst.modulator());
    write_or_print(out.out.as_deref(), &graph_file(inst.graph, level, inst.k, modulator))
}

fn kernelize(args: KernelizeArgs) -> CliResult<()> {
    let start = Instant::now();
    let out = match load(&args.input)? {
        Instance::Graph(gi) => {
            let c = args.c.unwrap_or(gi.c);
            let given = match &args.modulator {
                Some(p) => Some(read_vertex_list(p)?),
                None => gi.modulator.clone(),
            };
            full_pipeline(&gi.graph, gi.k, c, given.as_ref(), args.mode.into())?
        }
        Instance::Annotated(inst) => {
            if args.c.is_some_and(|c| c != inst.c()) {
                return Err("--c differs from the level in the annotated file".into());
            }
            if args.modulator.is_some() {
                return Err("annotated files carry their own modulator".into());
            }
            annotated_pipeline(&inst)?
        }
    };
    let wall = args.timing.then(|| start.elapsed());
    let report = emit_report(&out.report, wall);
    let text = graph_file(out.graph.clone(), 0, out.k, None);
    write_or_print(args.out.as_deref(), &text)?;
    match &args.report {
        Some(p) => write_or_print(Some(p), &report)?,
        None if args.out.is_some() => println!(
            "kernel: {} vertices, {} edges, k = {}",
            out.graph.n(),
            out.graph.m(),
            out.k
        ),
        None => {}
    }
    Ok(())
}

fn solve(problem: Problem, input: &Path, kmax: Option<usize>, engine: Engine) -> CliResult<()> {
    match (problem, load(input)?) {
        (Problem::Is, Instance::Graph(gi)) => {
            let engine = match engine {
                Engine::Bnb => IsEngine::BranchAndBound,
                Engine::Dp => IsEngine::TreedepthDp,
                Engine::Both => IsEngine::CrossCheck,
            };
            let (value, witness) = alpha_with(&gi.graph, engine)?;
            print_answer(value, &witness, value as i64 >= gi.k);
        }
        (Problem::Is, Instance::Annotated(inst)) => {
            let (value, witness) = alpha_annotated(&inst)?;
            print_answer(value, &witness, value as i64 >= inst.k());
        }
        (Problem::Ds, Instance::Graph(gi)) => {
            let limit = kmax.unwrap_or(gi.graph.n());
            match dominating_set_exact(&gi.graph, limit)? {
                Some(set) => print_answer(set.len(), &set, set.len() as i64 <= gi.k),
                None => {
                    println!("value >{limit}");
                    println!("answer {}", if (limit as i64) < gi.k { "unknown" } else { "no" });
                }
            }
        }
        (Problem::Ds, Instance::Annotated(_)) => {
            return Err("dominating set needs a graph file".into());
        }
    }
    Ok(())
}

fn print_answer(value: usize, witness: &VertexSet, yes: bool) {
    println!("value {value}");
    println!("witness {}", join(witness.iter()));
    println!("answer {}", if yes { "yes" } else { "no" });
}

fn parse_decomposition(text: &str, n: usize) -> CliResult<TdDecomposition> {
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    for (i, line) in text.lines().enumerate() {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[..] {
            [] | ["c", ..] | ["td", _] => continue,
            ["t", v, p] => {
                let v: usize = v.parse().map_err(|_| format!("line {}: bad vertex", i + 1))?;
                if v >= n {
                    return Err(format!("line {}: vertex {v} out of range", i + 1).into());
                }
                parent[v] = match p {
                    "-" => None,
                    p => Some(p.parse().map_err(|_| format!("line {}: bad parent", i + 1))?),
                };
                seen[v] = true;
            }
            _ => return Err(format!("line {}: expected `t <v> <parent|->`", i + 1).into()),
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(format!("vertex {v} missing from the decomposition").into());
    }
    Ok(TdDecomposition::from_parents(parent)?)
}

fn td(action: TdAction, input: &Path, decomposition: Option<&Path>) -> CliResult<()> {
    let (graph, c, x) = match load(input)? {
        Instance::Graph(gi) => (gi.graph, gi.c, gi.modulator),
        Instance::Annotated(inst) => (inst.graph().clone(), inst.c(), Some(inst.x().clone())),
    };
    match action {
        TdAction::Compute => {
            let (value, d) = td_exact(&graph)?;
            println!("td {value}");
            for (v, p) in d.parent.iter().enumerate() {
                match p {
                    Some(p) => println!("t {v} {p}"),
                    None => println!("t {v} -"),
                }
            }
        }
        TdAction::Verify => match decomposition {
            Some(path) => {
                let d = parse_decomposition(&read(path)?, graph.n())?;
                if !verify_decomposition(&graph, &d) {
                    return Err("decomposition does not cover every edge".into());
                }
                println!("valid decomposition of height {}", d.height);
            }
            None => {
                let x = x.ok_or("nothing to verify: no modulator and no --decomposition")?;
                if !is_c_modulator(&graph, &x, c)? {
                    return Err(format!("modulator leaves treedepth above {c}").into());
                }
                println!("valid {c}-treedepth modulator of size {}", x.len());
            }
        },
    }
    Ok(())
}

fn modulator(c: usize, mode: Mode, input: &Path, out: Option<&Path>) -> CliResult<()> {
    let mut gi = load_graph(input)?;
    let m = compute_modulator(&gi.graph, c, mode.into())?;
    println!("x {}", join(m.x.iter()));
    if let Some(path) = out {
        gi.c = c;
        gi.modulator = Some(m.x);
        write_or_print(Some(path), &serialize_instance(&Instance::Graph(gi)))?;
    }
    Ok(())
}

fn generate(generator: Generator) -> CliResult<()> {
    match generator {
        Generator::Subdivide { input, c, out } => {
            let gi = load_graph(&input)?;
            emit_generated(ds_subdivision_instance(&gi.graph, gi.k, c), &out)
        }
        Generator::Crosscompose { cnf, out } => {
            let formulas = cnf
                .iter()
                .map(|p| parse_cnf(&read(p)?).map_err(|e| format!("{}: {e}", p.display()).into()))
                .collect::<CliResult<Vec<CnfFormula>>>()?;
            emit_generated(cross_compose_3sat(&formulas)?, &out)
        }
        Generator::Lowerbound { t, out } => {
            let (g, y) = lower_bound_family(t)?;
            let mut inst = LabeledInstance {
                graph: g,
                k: 0,
                certificates: Default::default(),
                modulator_level: None,
                degeneracy_bound: None,
            };
            inst.certificates.insert("y".into(), y.into_vec());
            emit_generated(inst, &out)
        }
        Generator::Vcds { input, out } => {
            let gi = load_graph(&input)?;
            emit_generated(reduce_vc_ds_deg2(&gi.graph, gi.k, gi.modulator.as_ref())?, &out)
        }
        Generator::Edgegadget { input, out } => {
            let gi = load_graph(&input)?;
            emit_generated(edge_gadget_vc_to_ds(&gi.graph, gi.k)?, &out)
        }
        Generator::Logtd { u, w, edges, k, out } => emit_generated(gen_logtd_instance(u, w, &edges, k)?, &out),
        Generator::Union { inputs, out } => {
            let parts = inputs
                .iter()
                .map(|p| load_graph(p).map(|gi| (gi.graph, gi.k)))
                .collect::<CliResult<Vec<_>>>()?;
            let (g, k) = compose_disjoint_union(&parts);
            write_or_print(out.out.as_deref(), &graph_file(g, 0, k, None))
        }
    }
}

/// Threshold answer of an instance: `alpha >= k` or `gamma <= k`.
fn answer(inst: &Instance, oracle: Problem) -> CliResult<bool> {
    Ok(match (oracle, inst) {
        (Problem::Is, Instance::Graph(gi)) => alpha_with(&gi.graph, IsEngine::BranchAndBound)?.0 as i64 >= gi.k,
        (Problem::Is, Instance::Annotated(a)) => alpha_annotated(a)?.0 as i64 >= a.k(),
        (Problem::Ds, Instance::Graph(gi)) => match usize::try_from(gi.k) {
            Ok(k) => dominating_set_exact(&gi.graph, k)?.is_some(),
            Err(_) => false,
        },
        (Problem::Ds, Instance::Annotated(_)) => return Err("dominating set needs graph files".into()),
    })
}

fn verify(check: Check) -> CliResult<()> {
    match check {
        Check::Equivalence { before, after, oracle } => {
            let a = answer(&load(&before)?, oracle)?;
            let b = answer(&load(&after)?, oracle)?;
            let word = |x: bool| if x { "yes" } else { "no" };
            if a != b {
                return Err(format!("not equivalent: before {} vs after {}", word(a), word(b)).into());
            }
            println!("equivalent: both {}", word(a));
        }
        Check::Certificates { input, certs } => {
            let gi = load_graph(&input)?;
            let file: CertificateFile = serde_json::from_str(&read(&certs)?)?;
            if file.k != gi.k {
                return Err(format!("certificate budget {} differs from file budget {}", file.k, gi.k).into());
            }
            let inst = file.attach(gi.graph);
            inst.validate()?;
            println!("certificates valid: {}", inst.certificates.keys().cloned().collect::<Vec<_>>().join(", "));
        }
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Kernelize(args) => kernelize(args),
        Command::Solve {
            problem,
            input,
            kmax,
            engine,
        } => solve(problem, &input, kmax, engine),
        Command::Td {
            action,
            input,
            decomposition,
        } => td(action, &input, decomposition.as_deref()),
        Command::Modulator { c, mode, input, out } => modulator(c, mode, &input, out.as_deref()),
        Command::Gen { generator } => generate(generator),
        Command::Verify { check } => verify(check),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
