use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use endoaip::annprop::{check_ring_property_oriented, AnyProperty, ModuleAnalysis};
use endoaip::describe::{build_structure, parse_structure, summarize, RingSummary, Structure, Summary};
use endoaip::harness::{find_separation, generate_corpus, run_theorem_suite, CorpusSpec, TheoremId};
use endoaip::module::regular_module;
use endoaip::replay::{replay_module, replay_ring};
use endoaip::{Caps, Error, Orientation, RingPropertyId, Verdict};

#[derive(Parser)]
#[command(
    name = "endoaip",
    version,
    about = "Annihilator properties of finite rings and modules"
)]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Largest ring (including endomorphism rings) to construct.
    #[arg(long, global = true, default_value_t = Caps::default().ring)]
    max_ring: usize,
    /// Largest module to construct.
    #[arg(long, global = true, default_value_t = Caps::default().module)]
    max_module: usize,
    /// Largest submodule or ideal lattice to enumerate.
    #[arg(long, global = true, default_value_t = Caps::default().lattice)]
    max_lattice: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Standard,
    Mirrored,
}

#[derive(Subcommand)]
enum Command {
    /// Decide one property of a ring or module described in a JSON file.
    Check {
        file: PathBuf,
        /// Property id; prefix with `ring:` for ring-level properties.
        #[arg(long)]
        property: String,
        /// Annihilator sides for ring-level properties.
        #[arg(long, value_enum, default_value = "standard")]
        orientation: Side,
        /// Re-validate the witness independently before printing it.
        #[arg(long)]
        replay: bool,
    },
    /// Run the theorem suite over a corpus.
    Suite {
        /// Comma-separated theorem ids (default: all).
        #[arg(long, value_delimiter = ',')]
        theorems: Vec<String>,
        /// Corpus spec as JSON (default: the built-in corpus).
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Find a corpus structure with property `a` but not property `b`.
    Separate {
        a: String,
        b: String,
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Summarize a structure.
    Describe { file: PathBuf },
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::SizeCapExceeded { .. } => 3,
        _ => 2,
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(error_code(&e))
}

fn read_structure(path: &Path, caps: &Caps) -> Result<Structure, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))?;
    build_structure(&parse_structure(&text)?, caps)
}

fn read_spec(path: Option<&PathBuf>, caps: Caps) -> Result<CorpusSpec, Error> {
    match path {
        None => Ok(CorpusSpec {
            caps,
            ..CorpusSpec::default()
        }),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::Malformed(format!("{}: {e}", p.display())))?;
            serde_json::from_str(&text).map_err(|e| Error::Malformed(e.to_string()))
        }
    }
}

/// Module properties take precedence; bare ring property names are accepted too.
fn parse_property(s: &str) -> Result<AnyProperty, Error> {
    s.parse::<AnyProperty>()
        .or_else(|e| s.parse::<RingPropertyId>().map(AnyProperty::Ring).map_err(|_| e))
}

fn print_verdict(v: &Verdict, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(v).expect("verdict serializes"));
    } else {
        println!("{}: {}", v.property, if v.holds { "holds" } else { "fails" });
        println!("{}", serde_json::to_string(&v.witness).expect("witness serializes"));
    }
}

fn check(file: &Path, property: &str, orientation: Side, replay: bool, caps: &Caps, json: bool) -> ExitCode {
    let prop = match parse_property(property) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let structure = match read_structure(file, caps) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    let module = match &structure {
        Structure::Module(m) => m.clone(),
        Structure::Ring(r) => regular_module(r),
    };
    let ring = module.ring().clone();
    let verdict = match prop {
        AnyProperty::Module(p) => ModuleAnalysis::new(module.clone(), *caps).check(p),
        AnyProperty::Ring(p) => {
            let o = match orientation {
                Side::Standard => Orientation::Standard,
                Side::Mirrored => Orientation::Mirrored,
            };
            check_ring_property_oriented(&ring, p, o, caps)
        }
    };
    let verdict = match verdict {
        Ok(v) => v,
        Err(e) => return fail(e),
    };
    print_verdict(&verdict, json);
    if replay {
        let outcome = match prop {
            AnyProperty::Module(_) => replay_module(&module, &verdict, caps),
            AnyProperty::Ring(_) if matches!(orientation, Side::Standard) => {
                replay_ring(&Arc::unwrap_or_clone(ring), &verdict)
            }
            AnyProperty::Ring(_) => Err("replay covers the standard orientation only".into()),
        };
        match outcome {
            Ok(()) => eprintln!("witness replay: ok"),
            Err(e) => {
                eprintln!("witness replay failed: {e}");
                return ExitCode::from(2);
            }
        }
    }
    if verdict.holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn suite(theorems: &[String], corpus: Option<&PathBuf>, caps: Caps, json: bool) -> ExitCode {
    let ids: Vec<TheoremId> = if theorems.is_empty() {
        TheoremId::ALL.to_vec()
    } else {
        match theorems.iter().map(|t| t.trim().parse()).collect::<Result<Vec<_>, _>>() {
            Ok(ids) => ids,
            Err(e) => return fail(e),
        }
    };
    let spec = match read_spec(corpus, caps) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    let corpus = generate_corpus(&spec);
    if corpus.is_empty() {
        return fail(Error::Malformed("the corpus is empty".into()));
    }
    let report = run_theorem_suite(&corpus, &ids, &spec.caps);
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn separate(a: &str, b: &str, corpus: Option<&PathBuf>, caps: Caps, json: bool) -> ExitCode {
    let (pa, pb) = match (parse_property(a), parse_property(b)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => return fail(e),
    };
    let spec = match read_spec(corpus, caps) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    let corpus = generate_corpus(&spec);
    match find_separation(pa, pb, &corpus, &spec.caps) {
        Some(s) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&s).expect("separation serializes"));
            } else {
                println!("{}: {pa} holds, {pb} fails", s.structure);
                println!(
                    "{}",
                    serde_json::to_string(&s.fails.witness).expect("witness serializes")
                );
            }
            ExitCode::SUCCESS
        }
        None => {
            if json {
                println!("null");
            } else {
                println!("no finite witness found in a corpus of {} structures", corpus.len());
            }
            ExitCode::from(1)
        }
    }
}

fn describe(file: &Path, caps: &Caps, json: bool) -> ExitCode {
    let summary = match read_structure(file, caps).and_then(|s| summarize(&s, caps)) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&summary).expect("summary serializes")
        );
    } else {
        print!("{}", summary_text(&summary));
    }
    ExitCode::SUCCESS
}

fn group_text(orders: &[u64]) -> String {
    if orders.is_empty() {
        return "0".into();
    }
    orders.iter().map(|d| format!("Z{d}")).collect::<Vec<_>>().join(" + ")
}

fn ring_text(r: &RingSummary, indent: &str) -> String {
    format!(
        "{indent}order: {}\n{indent}additive group: {}\n{indent}commutative: {}\n{indent}idempotents: {}\n\
         {indent}central elements: {}\n{indent}units: {}\n{indent}two-sided ideals: {}\n",
        r.order,
        group_text(&r.additive_orders),
        r.commutative,
        r.idempotents,
        r.central_elements,
        r.units,
        r.two_sided_ideals
    )
}

fn summary_text(s: &Summary) -> String {
    match s {
        Summary::Ring(r) => format!("ring\n{}", ring_text(r, "  ")),
        Summary::Module(m) => format!(
            "module\n  order: {}\n  additive group: {}\n  endomorphism ring order: {}\n  submodules: {}\n\
             \x20 fully invariant submodules: {}\n  uniform dimension: {}\n  ring\n{}",
            m.order,
            group_text(&m.additive_orders),
            m.endomorphism_ring_order,
            m.submodules,
            m.fully_invariant_submodules,
            m.uniform_dimension,
            ring_text(&m.ring, "    ")
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = Caps {
        ring: cli.max_ring,
        module: cli.max_module,
        lattice: cli.max_lattice,
    };
    match &cli.command {
        Command::Check {
            file,
            property,
            orientation,
            replay,
        } => check(file, property, *orientation, *replay, &caps, cli.json),
        Command::Suite { theorems, corpus } => suite(theorems, corpus.as_ref(), caps, cli.json),
        Command::Separate { a, b, corpus } => separate(a, b, corpus.as_ref(), caps, cli.json),
        Command::Describe { file } => describe(file, &caps, cli.json),
    }
}
