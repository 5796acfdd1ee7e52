use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use supsec::checks::verify_representation;
use supsec::collapse::DEFAULT_BUDGET;
use supsec::dot::hasse_dot;
use supsec::format::{parse_complex, parse_representation, write_complex, write_representation};
use supsec::random::random_representation;
use supsec::search::{search_representation, Relation, SearchConfig, SearchOutcome, DEFAULT_TRIES};
use supsec::{
    build_matching, extract_collapse_sequence, is_collapsible_bruteforce, replay,
    supremum_section, verify_matching, Collapsibility, CollapseSequence, Ground, Representation,
};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NOT_FOUND: u8 = 3;

#[derive(Parser)]
#[command(name = "supsec", version, about = "Supremum sections, Morse matchings and collapses")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the supremum section of a representation file.
    Sigma {
        file: PathBuf,
        /// List every face, not only the facets.
        #[arg(long)]
        all_faces: bool,
    },
    /// Print the complete acyclic matching of the face poset.
    Matching {
        file: PathBuf,
        /// Write the Hasse diagram with the matching to this DOT file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Print a collapse of the supremum section to a point.
    Collapse { file: PathBuf },
    /// Run every structural check on a representation.
    Verify { file: PathBuf },
    /// Decide collapsibility of a complex file by exhaustive search.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Search for a representation whose section contains a complex.
    Search {
        file: PathBuf,
        /// Number of orders.
        #[arg(long = "d")]
        dimension: usize,
        /// Number of auxiliary elements z0, z1, ...
        #[arg(long, default_value_t = 0)]
        extra: usize,
        /// Require the section to equal the complex.
        #[arg(long)]
        exact: bool,
        /// Seed for random restarts on large ground sets.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random tuples to try on large ground sets.
        #[arg(long, default_value_t = DEFAULT_TRIES)]
        tries: u64,
    },
    /// Print a random representation file.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long = "d")]
        dimension: usize,
        #[arg(long)]
        seed: u64,
    },
}

/// A command failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.to_string(),
    }
}

fn failure(stage: &str, message: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_FAILURE,
        message: format!("{stage}: {message}"),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_representation(path: &Path) -> Result<Representation, Failure> {
    parse_representation(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_complex(path: &Path) -> Result<(Ground, supsec::SimplicialComplex), Failure> {
    parse_complex(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn print_steps(ground: &Ground, sequence: &CollapseSequence) {
    for (i, step) in sequence.steps.iter().enumerate() {
        println!(
            "step {}: free {} facet {}",
            i + 1,
            ground.display_face(step.free),
            ground.display_face(step.facet)
        );
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Sigma { file, all_faces } => {
            let rep = load_representation(&file)?;
            let sigma = supremum_section(&rep);
            print!("{}", write_complex(rep.ground(), &sigma, all_faces));
        }
        Command::Matching { file, dot } => {
            let rep = load_representation(&file)?;
            let sigma = supremum_section(&rep);
            let matching = build_matching(&rep).map_err(|e| failure("matching", e))?;
            let hasse = sigma.hasse();
            let report = verify_matching(&hasse, &matching);
            let g = rep.ground();
            for p in matching.pairs() {
                println!("{} <- {}", g.display_face(p.upper), g.display_face(p.lower));
            }
            if let Some(path) = dot {
                fs::write(&path, hasse_dot(g, &hasse, &matching))
                    .map_err(|e| failure("dot", format!("{}: {e}", path.display())))?;
            }
            if !report.all_pass() {
                return Err(failure("verification", format!("{report:?}")));
            }
        }
        Command::Collapse { file } => {
            let rep = load_representation(&file)?;
            let sigma = supremum_section(&rep);
            let matching = build_matching(&rep).map_err(|e| failure("matching", e))?;
            let report = verify_matching(&sigma.hasse(), &matching);
            if !report.all_pass() {
                return Err(failure("verification", format!("{report:?}")));
            }
            let extraction =
                extract_collapse_sequence(&sigma, &matching).map_err(|e| failure("extraction", e))?;
            let end = replay(&sigma, &extraction.sequence).map_err(|e| failure("replay", e))?;
            let g = rep.ground();
            print_steps(g, &extraction.sequence);
            println!(
                "terminal: {} <- {}",
                g.display_face(extraction.terminal.upper),
                g.display_face(extraction.terminal.lower)
            );
            if !end.is_point() {
                return Err(failure("replay", format!("ended at {} faces", end.len())));
            }
        }
        Command::Verify { file } => {
            let rep = load_representation(&file)?;
            let report = verify_representation(&rep);
            for check in &report.checks {
                println!("{check}");
            }
            if !report.all_pass() {
                return Ok(EXIT_FAILURE);
            }
        }
        Command::Oracle { file, budget } => {
            let (ground, complex) = load_complex(&file)?;
            if complex.is_empty() {
                return Err(usage("the complex has no faces"));
            }
            match is_collapsible_bruteforce(&complex, budget) {
                Collapsibility::Yes(witness) => {
                    println!("Yes");
                    print_steps(&ground, &witness);
                }
                Collapsibility::No => println!("No"),
                Collapsibility::Unknown { visited } => {
                    println!("Unknown (budget of {budget} states exhausted after {visited})")
                }
            }
        }
        Command::Search {
            file,
            dimension,
            extra,
            exact,
            seed,
            tries,
        } => {
            if dimension == 0 {
                return Err(usage("--d must be at least 1"));
            }
            let (ground, target) = load_complex(&file)?;
            let relation = if exact { Relation::Exact } else { Relation::Contains };
            let cfg = SearchConfig {
                dimension,
                extra,
                relation,
                seed,
                tries,
            };
            let outcome =
                search_representation(&ground, &target, &cfg).map_err(|e| usage(e.to_string()))?;
            match outcome {
                SearchOutcome::Found(rep) => {
                    let text = write_representation(&rep);
                    check_witness(&text, &ground, &target, relation)?;
                    print!("{text}");
                }
                SearchOutcome::NotFound {
                    exhaustive,
                    candidates,
                } => {
                    let mode = if exhaustive { "exhaustive" } else { "random" };
                    println!("not found ({mode} search, {candidates} candidates)");
                    return Ok(EXIT_NOT_FOUND);
                }
            }
        }
        Command::Random { n, dimension, seed } => {
            if n == 0 || dimension == 0 {
                return Err(usage("--n and --d must be at least 1"));
            }
            let rep = random_representation(n, dimension, seed).map_err(usage)?;
            print!("{}", write_representation(&rep));
        }
    }
    Ok(0)
}

/// Re-reads a printed witness and checks it against the target by name.
fn check_witness(
    text: &str,
    target_ground: &Ground,
    target: &supsec::SimplicialComplex,
    relation: Relation,
) -> Result<(), Failure> {
    let rep = parse_representation(text).map_err(|e| failure("witness", e))?;
    let sigma = supremum_section(&rep);
    let named = |g: &Ground, c: &supsec::SimplicialComplex| -> Vec<Vec<String>> {
        let mut faces: Vec<Vec<String>> = c
            .faces()
            .map(|f| g.face_names(f).into_iter().map(String::from).collect())
            .collect();
        faces.sort();
        faces
    };
    let found = named(rep.ground(), &sigma);
    let wanted = named(target_ground, target);
    let ok = match relation {
        Relation::Exact => found == wanted,
        Relation::Contains => wanted.iter().all(|f| found.binary_search(f).is_ok()),
    };
    if ok {
        Ok(())
    } else {
        Err(failure("witness", "printed representation does not re-verify"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
