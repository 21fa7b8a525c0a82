//! `betapath`: JSON in, JSON out. Every subcommand reads a hypergraph
//! (except `gen`) and prints one newline-terminated JSON document.
//!
//! Exit status 0 on success, 1 when the operation fails, 2 for usage and
//! input-parsing problems. Failures print `{"error": NAME, "message": ...}`
//! on standard output.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use betapath::beta::{
    dual_transform, enumerate_beta_cycles, is_beta_cycle, is_beta_path, is_increasing_sequence,
    reduce_paths_to_cycle, splice_reduce, SequenceKind,
};
use betapath::generators::{make, FamilySpec};
use betapath::json::{self as wire, parse_str};
use betapath::pathsearch::{
    adversarial_min_max, derive_edges, longest_increasing_path, satisfies, DEFAULT_ADVERSARIAL_BOUND,
};
use betapath::properties::{p2_duality_check, peel_p2_star, peel_p_ell};
use betapath::skeleton::{build_skeleton, canonical_generator, extract_witness, generator_cycle_certificates};
use betapath::{dual, double_dual_correspondence, validate, Error, Hypergraph, Labeling, Mode, RootRule, Target, Through};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const DEFAULT_LIMIT: usize = 10_000;
const LIMIT_VAR: &str = "BETAPATH_LIMIT";

#[derive(Parser)]
#[command(name = "betapath", version, about = "Increasing paths in hypergraphs")]
struct Cli {
    #[command(flatten)]
    io: IoArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IoArgs {
    /// Input hypergraph: a file path or inline JSON. Defaults to standard input.
    #[arg(long, global = true)]
    input: Option<String>,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<String>,
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Full,
    Skip,
    Edge,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Full => Mode::Full,
            ModeArg::Skip => Mode::Skip,
            ModeArg::Edge => Mode::Edge,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check uniformity and linearity.
    Validate {
        #[arg(long)]
        k: Option<usize>,
        /// Also report pairs of edges sharing two or more vertices.
        #[arg(long)]
        linear: bool,
    },
    /// The dual hypergraph with its correspondence.
    Dual,
    /// The double dual and its isomorphism to the input.
    DoubleDual,
    /// Check a sequence against the β-path or β-cycle definition.
    BetaCheck {
        /// BetaSequence JSON (path or file).
        #[arg(long)]
        seq: String,
        /// Optional labeling; adds an `increasing` field.
        #[arg(long)]
        labeling: Option<String>,
    },
    /// Enumerate β-cycles up to rotation and reversal.
    BetaCycles {
        /// `all`, `v:NAME` or `e:NAME`.
        #[arg(long, default_value = "all")]
        through: String,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Reduce two β-paths sharing a start and a final edge to a β-cycle.
    Reduce {
        #[arg(long)]
        p1: String,
        #[arg(long)]
        p2: String,
    },
    /// Join a path ending at a vertex with a β-path starting there.
    Splice {
        #[arg(long)]
        p1: String,
        #[arg(long)]
        p2: String,
    },
    /// Map a β-path `v1 e1 v2 e2 ...` to `e1 v2* e2 ...` in the dual.
    DualTransform {
        #[arg(long)]
        seq: String,
    },
    /// Peel to the largest vertex set with the finite P_ell property.
    Peel {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        d: usize,
    },
    /// Peel to the largest edge set with the finite P_2* property.
    PeelDual {
        #[arg(long)]
        d: usize,
    },
    /// Compare the P_2 witness with the P_2* witness of the dual.
    DualityCheck {
        #[arg(long)]
        d: usize,
    },
    /// Skeleton graph generated by a set of incidences.
    Skeleton {
        /// GeneratorSet JSON.
        #[arg(long)]
        t: String,
    },
    /// Canonical generator from β-path reachability.
    CanonicalT {
        /// Explicit component roots; other components use their least vertex.
        #[arg(long)]
        root: Vec<String>,
    },
    /// β-cycle certificates for every pair of generator incidences on an edge.
    CycleCerts {
        /// Edge name or index.
        #[arg(long)]
        f: String,
        /// GeneratorSet JSON; defaults to the canonical generator.
        #[arg(long)]
        t: Option<String>,
    },
    /// Edges meeting a vertex set in at least `m` vertices.
    Witness {
        #[arg(long)]
        t: String,
        /// JSON list of vertices.
        #[arg(long)]
        vertices: String,
        #[arg(long)]
        m: usize,
    },
    /// Check whether a vertex sequence is an increasing loose path.
    PathCheck {
        #[arg(long)]
        k: usize,
        /// JSON list of vertices.
        #[arg(long)]
        path: String,
        #[arg(long)]
        labeling: String,
        #[arg(long, value_enum, default_value = "full")]
        mode: ModeArg,
    },
    /// Longest increasing loose path.
    Longest {
        #[arg(long)]
        k: usize,
        /// Labeling JSON; defaults to labeling elements 1, 2, ... in input order.
        #[arg(long)]
        labeling: Option<String>,
        #[arg(long, value_enum, default_value = "full")]
        mode: ModeArg,
    },
    /// The labeling minimising the longest increasing loose path.
    Adversarial {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "full")]
        mode: ModeArg,
        /// Refuse instances with more labeled elements than this.
        #[arg(long, default_value_t = DEFAULT_ADVERSARIAL_BOUND)]
        bound: usize,
    },
    /// Generate a named family instance.
    Gen {
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// FamilySpec JSON; explicit flags override its fields.
        #[arg(long)]
        spec: Option<String>,
    },
}

/// A failure with its exit status.
struct Failure {
    status: u8,
    name: String,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if matches!(e, Error::Parse(_)) { 2 } else { 1 };
        Failure {
            status,
            name: e.name().to_string(),
            message: e.to_string(),
        }
    }
}

fn usage(name: &str, message: impl Into<String>) -> Failure {
    Failure {
        status: 2,
        name: name.to_string(),
        message: message.into(),
    }
}

/// Inline JSON when the argument looks like JSON, otherwise a file path.
fn load(arg: &str) -> Result<Value, Failure> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| usage("IoError", format!("{arg}: {e}")))?
    };
    Ok(parse_str(&text)?)
}

fn read_input(io: &IoArgs) -> Result<Value, Failure> {
    match &io.input {
        Some(arg) if arg != "-" => load(arg),
        _ => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| usage("IoError", format!("standard input: {e}")))?;
            Ok(parse_str(&text)?)
        }
    }
}

fn enumeration_limit(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(limit) = flag {
        return Ok(limit);
    }
    match std::env::var(LIMIT_VAR) {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| usage("UsageError", format!("{LIMIT_VAR}={raw} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_LIMIT),
    }
}

fn parse_through(h: &Hypergraph, raw: &str) -> Result<Through, Failure> {
    if raw == "all" {
        Ok(Through::All)
    } else if let Some(v) = raw.strip_prefix("v:") {
        Ok(Through::Vertex(h.vertex(v)?))
    } else if let Some(e) = raw.strip_prefix("e:") {
        Ok(Through::Edge(h.edge_ref(e)?))
    } else {
        Err(usage("UsageError", format!("--through expects all, v:NAME or e:NAME, got `{raw}`")))
    }
}

fn default_labeling(h: &Hypergraph, target: Target) -> Labeling {
    let n = match target {
        Target::Vertices => h.vertex_count(),
        Target::Edges => h.edge_count(),
    };
    Labeling::identity(target, n)
}

fn execute(io: &IoArgs, command: Command) -> Result<Value, Failure> {
    if let Command::Gen { family, k, m, n, p, seed, spec } = command {
        let mut base = match spec {
            Some(raw) => {
                let value = load(&raw)?;
                serde_json::from_value::<FamilySpec>(value).map_err(Error::from)?
            }
            None => FamilySpec::default(),
        };
        if let Some(f) = family {
            base.family = f;
        }
        base.k = k.or(base.k);
        base.m = m.or(base.m);
        base.n = n.or(base.n);
        base.p = p.or(base.p);
        if seed != 0 {
            base.seed = seed;
        }
        if base.family.is_empty() {
            return Err(usage("UsageError", "gen needs --family or --spec"));
        }
        return Ok(wire::hypergraph_to_json(&make(&base)?));
    }

    let h = wire::parse_hypergraph(&read_input(io)?)?;
    let out = match command {
        Command::Gen { .. } => unreachable!("handled above"),
        Command::Validate { k, linear } => wire::validation_to_json(&h, &validate(&h, k, linear)),
        Command::Dual => wire::dual_to_json(&h, &dual(&h)?),
        Command::DoubleDual => wire::isomorphism_to_json(&h, &double_dual_correspondence(&h)?),
        Command::BetaCheck { seq, labeling } => {
            let s = wire::parse_sequence(&h, &load(&seq)?)?;
            let valid = match s.kind() {
                SequenceKind::Path => is_beta_path(&h, &s)?,
                SequenceKind::Cycle => is_beta_cycle(&h, &s)?,
            };
            let mut out = json!({"valid": valid});
            if let Some(raw) = labeling {
                let phi = wire::parse_labeling(&h, &load(&raw)?)?;
                out["increasing"] = json!(is_increasing_sequence(&s, &phi)?);
            }
            out
        }
        Command::BetaCycles { through, limit } => {
            let through = parse_through(&h, &through)?;
            let limit = enumeration_limit(limit)?;
            wire::cycles_to_json(&h, &enumerate_beta_cycles(&h, through, limit))
        }
        Command::Reduce { p1, p2 } => {
            let p1 = wire::parse_sequence(&h, &load(&p1)?)?;
            let p2 = wire::parse_sequence(&h, &load(&p2)?)?;
            wire::sequence_to_json(&h, &reduce_paths_to_cycle(&h, &p1, &p2)?)
        }
        Command::Splice { p1, p2 } => {
            let p1 = wire::parse_sequence(&h, &load(&p1)?)?;
            let p2 = wire::parse_sequence(&h, &load(&p2)?)?;
            wire::sequence_to_json(&h, &splice_reduce(&h, &p1, &p2)?)
        }
        Command::DualTransform { seq } => {
            let s = wire::parse_sequence(&h, &load(&seq)?)?;
            let d = dual(&h)?;
            wire::sequence_to_json(&d.hypergraph, &dual_transform(&h, &d, &s)?)
        }
        Command::Peel { ell, d } => wire::peel_to_json(&h, &peel_p_ell(&h, ell, d)?),
        Command::PeelDual { d } => wire::peel_to_json(&h, &peel_p2_star(&h, d)?),
        Command::DualityCheck { d } => {
            let check = p2_duality_check(&h, d)?;
            wire::duality_to_json(&dual(&h)?.hypergraph, &check)
        }
        Command::Skeleton { t } => {
            let t = wire::parse_generator_set(&h, &load(&t)?)?;
            wire::skeleton_to_json(&h, &build_skeleton(&h, &t)?)
        }
        Command::CanonicalT { root } => {
            let rule = if root.is_empty() {
                RootRule::LeastVertex
            } else {
                RootRule::Explicit(root.iter().map(|r| h.vertex(r)).collect::<Result<_, _>>()?)
            };
            let t = canonical_generator(&h, &rule)?;
            let mut out = wire::generator_set_to_json(&h, &t);
            out["max_fiber"] = json!(t.max_fiber());
            out
        }
        Command::CycleCerts { f, t } => {
            let f = h.edge_ref(&f)?;
            let t = match t {
                Some(raw) => wire::parse_generator_set(&h, &load(&raw)?)?,
                None => canonical_generator(&h, &RootRule::LeastVertex)?,
            };
            wire::certificates_to_json(&h, &generator_cycle_certificates(&h, &t, f)?)
        }
        Command::Witness { t, vertices, m } => {
            let t = wire::parse_generator_set(&h, &load(&t)?)?;
            let chosen = wire::parse_vertex_sequence(&h, &load(&vertices)?)?;
            wire::extraction_to_json(&h, &extract_witness(&h, &t, &chosen, m)?)
        }
        Command::PathCheck { k, path, labeling, mode } => {
            let seq = wire::parse_vertex_sequence(&h, &load(&path)?)?;
            let phi = wire::parse_labeling(&h, &load(&labeling)?)?;
            let p = derive_edges(&h, k, &seq)?;
            let mut out = wire::loose_path_to_json(&h, &p);
            out["increasing"] = json!(satisfies(&p, &phi, mode.into())?);
            out
        }
        Command::Longest { k, labeling, mode } => {
            let mode: Mode = mode.into();
            let phi = match labeling {
                Some(raw) => wire::parse_labeling(&h, &load(&raw)?)?,
                None => default_labeling(&h, mode.target()),
            };
            wire::loose_path_to_json(&h, &longest_increasing_path(&h, k, &phi, mode)?)
        }
        Command::Adversarial { k, mode, bound } => {
            let (value, phi) = adversarial_min_max(&h, k, mode.into(), bound)?;
            json!({"value": value, "labeling": wire::labeling_to_json(&h, &phi)})
        }
    };
    Ok(out)
}

fn render(value: &Value, pretty: bool) -> String {
    let mut text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("JSON values always serialize");
    text.push('\n');
    text
}

fn emit(text: &str, out: Option<&str>) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let failure = usage("UsageError", e.render().to_string().trim_end());
            let _ = emit(&render(&json!({"error": failure.name, "message": failure.message}), false), None);
            return ExitCode::from(failure.status);
        }
    };
    let pretty = cli.io.pretty;
    match execute(&cli.io, cli.command) {
        Ok(value) => match emit(&render(&value, pretty), cli.io.out.as_deref()) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                let _ = emit(&render(&json!({"error": "IoError", "message": e.to_string()}), pretty), None);
                ExitCode::from(2)
            }
        },
        Err(failure) => {
            let _ = emit(&render(&json!({"error": failure.name, "message": failure.message}), pretty), None);
            ExitCode::from(failure.status)
        }
    }
}
