//! Command-line front end: classify descriptors, generate and query
//! closed-set topologies, solve word and root equations, report group
//! structure, and run the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse error,
//! 3 cap exceeded, 4 unknown suite or name.

use clap::{Parser, Subcommand, ValueEnum};
use grouptop::abelian::{InvariantFactorGroup, SolutionSet};
use grouptop::classify::{classify, GroupDescriptor, Property};
use grouptop::free_group::{FreeWord, DEFAULT_RANK_CAP};
use grouptop::group::{corpus, Group, GroupSpec};
use grouptop::heisenberg::{HPoint, HeisenbergSpec};
use grouptop::structure::{structure_report, StructureError, DEFAULT_ENUMERATION_CAP};
use grouptop::topology::{
    centralizer_subbasis, cprime_subbasis, dot_comparison_diagram, monomial_subbasis,
    zariski_subbasis, ClosedSetFamily, TopologyError, TopologyLabel, DEFAULT_CARRIER_CAP,
    DEFAULT_FAMILY_CAP,
};
use grouptop::verify::{run_all, run_suite, SuiteReport, SUITES};
use grouptop::word::Word;
use grouptop::SubSet;
use num_rational::Ratio;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "grouptop",
    version,
    about = "Word equations over groups, closed-set topologies, and cofiniteness classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SubbasisKind {
    /// Cosets of centralizers.
    Centralizer,
    /// Fibers of the power maps x -> x^n.
    Monomial,
    /// Degree-one fibers (all singletons).
    Zariski,
    /// Centralizer cosets joined with the singletons.
    CPrime,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    /// Separation and size summary plus any closure query.
    Summary,
    /// The full closed-set family (requires explicit generation).
    Family,
    /// DOT Hasse diagram of the family under inclusion.
    Hasse,
    /// DOT diagram comparing the standard topologies on this group.
    Compare,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a group descriptor; verdicts carry their justifying rules.
    Classify {
        /// Inline JSON descriptor, e.g. '{"kind":"free","rank":2}'.
        #[arg(long, conflicts_with = "file")]
        descriptor: Option<String>,
        /// Path to a JSON descriptor file.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Classify every group in the pinned verification corpus instead.
        #[arg(long, conflicts_with_all = ["descriptor", "file"])]
        corpus: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Generate a closed-set topology on a finite group and query it.
    Topology {
        /// Inline JSON group descriptor, e.g. '{"kind":"symmetric","n":3}'.
        #[arg(long, conflicts_with = "file")]
        group: Option<String>,
        /// Path to a JSON group descriptor file.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SubbasisKind::Centralizer)]
        subbasis: SubbasisKind,
        #[arg(long, value_enum, default_value_t = Emit::Summary)]
        emit: Emit,
        /// Comma-separated element indices whose closure to compute.
        #[arg(long)]
        closure_of: Option<String>,
        /// Carrier-size cap for explicit family generation.
        #[arg(long, default_value_t = DEFAULT_CARRIER_CAP)]
        cap: usize,
        /// Cap on the number of generated closed sets.
        #[arg(long, default_value_t = DEFAULT_FAMILY_CAP)]
        family_cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Solve word and root equations.
    Solve {
        #[command(subcommand)]
        equation: SolveCommand,
    },
    /// Structural report: series, Engel set, Fitting subgroup.
    Structure {
        /// Inline JSON group descriptor.
        #[arg(long, conflicts_with = "file")]
        group: Option<String>,
        /// Path to a JSON group descriptor file.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Order cap for subgroup enumeration.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a named verification suite (or all of them).
    Verify {
        /// One of: core, word, abelian, heisenberg, free, topology,
        /// structure, classify, all.
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum SolveCommand {
    /// Solution set of w(x) = e (or w(x) = target) over a finite group.
    ///
    /// Word literals are whitespace-separated tokens: `gK` for the element
    /// with index K, `e` for the identity, `x` or `x^N` for the variable.
    /// Example: "g3 x g5 x^-1".
    Word {
        /// Inline JSON group descriptor.
        #[arg(long)]
        group: String,
        /// The word literal.
        #[arg(long)]
        word: String,
        /// Element index the word should evaluate to (defaults to e).
        #[arg(long)]
        equals: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Solutions of n*x = a in Z/d1 + ... + Z/dk + Z^r.
    Abelian {
        /// Comma-separated invariant factors, e.g. "2,4,12" (may be empty).
        #[arg(long, default_value = "", conflicts_with = "relations")]
        factors: String,
        /// Free rank r (ignored when --relations is given).
        #[arg(long, default_value_t = 0)]
        free_rank: usize,
        /// Alternatively, a relation matrix over the generators, rows
        /// separated by ';': "2,0;0,3" presents Z^2 / <(2,0),(0,3)>.
        /// Reduced to invariant factors before solving.
        #[arg(long)]
        relations: Option<String>,
        #[arg(short)]
        n: i64,
        /// Comma-separated target coordinates.
        #[arg(long)]
        target: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Solutions of u^n = target in a Heisenberg group.
    Heisenberg {
        /// "Z", "Q", or a modulus like "3".
        #[arg(long, default_value = "Z")]
        ring: String,
        #[arg(short)]
        n: i64,
        /// Comma-separated target triple, e.g. "3,3,3".
        #[arg(long)]
        target: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The n-th root of a reduced word in a free group, if any.
    ///
    /// Free-group literals use letters a..z with capitals for inverses:
    /// "abAB" is a b a^-1 b^-1.
    FreeRoot {
        #[arg(long, default_value_t = 2)]
        rank: u32,
        #[arg(long)]
        word: String,
        #[arg(short)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum CliError {
    Parse(String),
    CapExceeded(String),
    UnknownName(String),
    VerificationFailed,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::VerificationFailed => 1,
            CliError::Parse(_) => 2,
            CliError::CapExceeded(_) => 3,
            CliError::UnknownName(_) => 4,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            match &err {
                CliError::Parse(msg) => eprintln!("error: {msg}"),
                CliError::CapExceeded(msg) => eprintln!("error: {msg}"),
                CliError::UnknownName(msg) => eprintln!("error: {msg}"),
                CliError::VerificationFailed => eprintln!("error: verification failed"),
            }
            ExitCode::from(err.exit_code())
        }
    }
}

fn read_input(
    inline: Option<String>,
    file: Option<PathBuf>,
    what: &str,
) -> Result<String, CliError> {
    match (inline, file) {
        (Some(text), None) => Ok(text),
        (None, Some(path)) => std::fs::read_to_string(&path)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display()))),
        _ => Err(CliError::Parse(format!(
            "provide exactly one of --{what} or --file"
        ))),
    }
}

fn build_group(text: &str) -> Result<Group, CliError> {
    let spec = GroupSpec::from_json(text).map_err(|e| CliError::Parse(e.to_string()))?;
    spec.build().map_err(|e| CliError::Parse(e.to_string()))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Classify {
            descriptor,
            file,
            corpus: run_corpus,
            format,
        } => {
            if run_corpus {
                return classify_corpus(format);
            }
            let text = read_input(descriptor, file, "descriptor")?;
            let parsed = GroupDescriptor::from_json(&text).map_err(|e| match e {
                grouptop::classify::ClassifyError::UnknownGroup(name) => {
                    CliError::UnknownName(format!("unknown group name `{name}`"))
                }
                other => CliError::Parse(other.to_string()),
            })?;
            let report = classify(&parsed);
            match format {
                Format::Json => println!("{}", report.to_json()),
                _ => print_report_text(&report),
            }
            Ok(())
        }
        Command::Topology {
            group,
            file,
            subbasis,
            emit,
            closure_of,
            cap,
            family_cap,
            format,
        } => {
            let group = build_group(&read_input(group, file, "group")?)?;
            topology_command(&group, subbasis, emit, closure_of, cap, family_cap, format)
        }
        Command::Solve { equation } => solve_command(equation),
        Command::Structure {
            group,
            file,
            cap,
            format,
        } => {
            let group = build_group(&read_input(group, file, "group")?)?;
            let report = structure_report(&group, cap).map_err(|e| match e {
                StructureError::CapExceeded { .. } => CliError::CapExceeded(e.to_string()),
                other => CliError::Parse(other.to_string()),
            })?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serializable report")
                ),
                _ => {
                    println!("order: {}", report.order);
                    println!("exponent: {}", report.exponent);
                    println!("abelian: {}", report.abelian);
                    println!(
                        "nilpotency class: {}",
                        report
                            .nilpotency_class
                            .map_or("none".to_string(), |c| c.to_string())
                    );
                    println!("solvable: {}", report.solvable);
                    println!("center: {:?}", report.center);
                    println!("upper central series: {:?}", report.upper_central_series);
                    println!("derived series: {:?}", report.derived_series);
                    println!("engel set: {:?}", report.engel_set);
                    println!("fitting subgroup: {:?}", report.fitting_subgroup);
                    println!("subgroups: {}", report.subgroup_count);
                }
            }
            Ok(())
        }
        Command::Verify { suite, format } => verify_command(&suite, format),
    }
}

fn classify_corpus(format: Format) -> Result<(), CliError> {
    let mut reports = Vec::new();
    for (name, group) in corpus() {
        let report = classify(&GroupDescriptor::Finite(group));
        reports.push((name, report));
    }
    match format {
        Format::Json => {
            let rendered: Vec<serde_json::Value> = reports
                .iter()
                .map(|(name, report)| {
                    serde_json::json!({
                        "name": name,
                        "report": serde_json::from_str::<serde_json::Value>(&report.to_json()).unwrap(),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rendered).unwrap());
        }
        _ => {
            for (name, report) in &reports {
                let summary: Vec<String> = [
                    Property::MonCofinite,
                    Property::CenCofinite,
                    Property::ZarCofinite,
                ]
                .iter()
                .map(|&p| format!("{}={}", p.json_key(), report.verdict(p)))
                .collect();
                println!("{name}: {}", summary.join(" "));
            }
        }
    }
    Ok(())
}

fn print_report_text(report: &grouptop::ClassReport) {
    println!("descriptor: {}", report.descriptor);
    let mut rows: Vec<(&'static str, &grouptop::classify::Justified)> = report
        .properties
        .iter()
        .map(|(p, j)| (p.json_key(), j))
        .collect();
    rows.sort_by_key(|(key, _)| *key);
    for (key, justified) in rows {
        println!(
            "  {key:<15} {:<10} [{}] {}",
            justified.verdict.to_string(),
            justified.rule,
            justified.statement
        );
    }
}

fn parse_indices(text: &str, carrier: usize) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let index: usize = p
                .trim()
                .parse()
                .map_err(|_| CliError::Parse(format!("bad element index `{p}`")))?;
            if index >= carrier {
                return Err(CliError::Parse(format!(
                    "index {index} out of range 0..{carrier}"
                )));
            }
            Ok(index)
        })
        .collect()
}

fn topology_command(
    group: &Group,
    subbasis: SubbasisKind,
    emit: Emit,
    closure_of: Option<String>,
    cap: usize,
    family_cap: usize,
    format: Format,
) -> Result<(), CliError> {
    let carrier = group.order();
    let (label, sets) = match subbasis {
        SubbasisKind::Centralizer => (TopologyLabel::Centralizer, centralizer_subbasis(group)),
        SubbasisKind::Monomial => (TopologyLabel::Monomial, monomial_subbasis(group)),
        SubbasisKind::Zariski => (TopologyLabel::Zariski, zariski_subbasis(group)),
        SubbasisKind::CPrime => (TopologyLabel::CentralizerCofinite, cprime_subbasis(group)),
    };
    let needs_family = matches!(emit, Emit::Family | Emit::Hasse);
    let family = if needs_family {
        ClosedSetFamily::generate(label, carrier, sets, cap, family_cap).map_err(|e| match e {
            TopologyError::CarrierTooLarge { .. } | TopologyError::FamilyTooLarge { .. } => {
                CliError::CapExceeded(e.to_string())
            }
            other => CliError::Parse(other.to_string()),
        })?
    } else {
        if carrier > cap {
            return Err(CliError::CapExceeded(format!(
                "carrier size {carrier} exceeds the cap {cap}"
            )));
        }
        ClosedSetFamily::lazy(label, carrier, sets)
    };

    match emit {
        Emit::Compare => {
            print!("{}", dot_comparison_diagram(group));
            return Ok(());
        }
        Emit::Hasse => {
            print!("{}", family.dot_hasse().expect("family was materialized"));
            return Ok(());
        }
        Emit::Family => {
            if format == Format::Json {
                println!("{}", family.to_json());
            } else {
                for set in family.sets().expect("family was materialized") {
                    println!("{}", render_elements(group, set));
                }
            }
            return Ok(());
        }
        Emit::Summary => {}
    }

    let closure_line = match &closure_of {
        Some(text) => {
            let indices = parse_indices(text, carrier)?;
            let query = SubSet::from_indices(carrier, indices);
            Some((query.clone(), family.closure(&query)))
        }
        None => None,
    };
    if format == Format::Json {
        let mut value = serde_json::json!({
            "group": format!("{group:?}"),
            "label": family.label().to_string(),
            "carrier": carrier,
            "t1": family.is_t1(),
            "discrete": family.is_discrete(),
            "quasitopological": family.is_quasitopological(group),
        });
        if let Some((query, closure)) = &closure_line {
            value["closure_of"] = serde_json::json!(query.iter().collect::<Vec<usize>>());
            value["closure"] = serde_json::json!(closure.iter().collect::<Vec<usize>>());
        }
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!("group: {group:?}");
        println!("topology: {}", family.label());
        println!("t1: {}", family.is_t1());
        println!("discrete: {}", family.is_discrete());
        println!("quasitopological: {}", family.is_quasitopological(group));
        if let Some((query, closure)) = &closure_line {
            println!(
                "closure of {} = {}",
                render_elements(group, query),
                render_elements(group, closure)
            );
        }
    }
    Ok(())
}

fn render_elements(group: &Group, set: &SubSet) -> String {
    let names: Vec<String> = set
        .iter()
        .map(|i| group.name_of(group.element(i).unwrap()).to_string())
        .collect();
    format!("{{{}}}", names.join(", "))
}

fn solve_command(equation: SolveCommand) -> Result<(), CliError> {
    match equation {
        SolveCommand::Word {
            group,
            word,
            equals,
            format,
        } => {
            let group = build_group(&group)?;
            let word = Word::parse(&group, &word).map_err(|e| CliError::Parse(e.to_string()))?;
            let solutions = match equals {
                Some(index) => {
                    let target = group
                        .element(index)
                        .map_err(|e| CliError::Parse(e.to_string()))?;
                    word.fiber(target)
                        .map_err(|e| CliError::Parse(e.to_string()))?
                }
                None => word.elementary_set(),
            };
            if format == Format::Json {
                println!(
                    "{}",
                    serde_json::json!({
                        "word": word.to_string(),
                        "solutions": solutions.iter().collect::<Vec<usize>>(),
                        "count": solutions.count(),
                    })
                );
            } else {
                println!(
                    "solutions ({}): {}",
                    solutions.count(),
                    render_elements(&group, &solutions)
                );
            }
            Ok(())
        }
        SolveCommand::Abelian {
            factors,
            free_rank,
            relations,
            n,
            target,
            format,
        } => {
            let (factors, free_rank): (Vec<u64>, usize) = match relations {
                Some(rows) => {
                    let matrix: Vec<Vec<i64>> = rows
                        .split(';')
                        .map(|row| {
                            row.split(',')
                                .filter(|p| !p.trim().is_empty())
                                .map(|p| {
                                    p.trim().parse().map_err(|_| {
                                        CliError::Parse(format!("bad relation entry `{p}`"))
                                    })
                                })
                                .collect()
                        })
                        .collect::<Result<_, _>>()?;
                    let generators = matrix.first().map_or(0, |r| r.len());
                    if generators == 0 || matrix.iter().any(|r| r.len() != generators) {
                        return Err(CliError::Parse(
                            "relation rows must be nonempty and equal-length".into(),
                        ));
                    }
                    grouptop::snf::invariant_factors(generators, &matrix)
                }
                None => (
                    factors
                        .split(',')
                        .filter(|p| !p.trim().is_empty())
                        .map(|p| {
                            p.trim()
                                .parse()
                                .map_err(|_| CliError::Parse(format!("bad factor `{p}`")))
                        })
                        .collect::<Result<_, _>>()?,
                    free_rank,
                ),
            };
            let group = InvariantFactorGroup::new(factors, free_rank)
                .map_err(|e| CliError::Parse(e.to_string()))?;
            let target: Vec<i64> = target
                .split(',')
                .filter(|p| !p.trim().is_empty())
                .map(|p| {
                    p.trim()
                        .parse()
                        .map_err(|_| CliError::Parse(format!("bad coordinate `{p}`")))
                })
                .collect::<Result<_, _>>()?;
            let solutions = group
                .solve_linear(n, &target)
                .map_err(|e| CliError::Parse(e.to_string()))?;
            print_solutions(&solutions, format, |witness| format!("{witness:?}"));
            Ok(())
        }
        SolveCommand::Heisenberg {
            ring,
            n,
            target,
            format,
        } => {
            let spec = match ring.as_str() {
                "Z" => HeisenbergSpec::over_integers(),
                "Q" => HeisenbergSpec::over_rationals(),
                other => {
                    let modulus: u64 = other
                        .parse()
                        .map_err(|_| CliError::Parse(format!("bad ring `{other}`")))?;
                    if modulus == 0 {
                        return Err(CliError::Parse("modulus must be positive".into()));
                    }
                    // Root solving over a finite ring enumerates m^3 points.
                    if modulus > 32 {
                        return Err(CliError::CapExceeded(format!(
                            "modulus {modulus} exceeds the exhaustive-solving cap 32"
                        )));
                    }
                    HeisenbergSpec::over_mod(modulus)
                }
            };
            let coordinates: Vec<i128> = target
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse()
                        .map_err(|_| CliError::Parse(format!("bad coordinate `{p}`")))
                })
                .collect::<Result<_, _>>()?;
            if coordinates.len() != 3 {
                return Err(CliError::Parse(
                    "heisenberg target needs three coordinates".into(),
                ));
            }
            if n < 1 {
                return Err(CliError::Parse("root index must be >= 1".into()));
            }
            let target = HPoint::from_integers(coordinates[0], coordinates[1], coordinates[2]);
            let solutions = spec
                .solve_power(n, &target)
                .map_err(|e| CliError::Parse(e.to_string()))?;
            print_solutions(&solutions, format, render_hpoint);
            Ok(())
        }
        SolveCommand::FreeRoot {
            rank,
            word,
            n,
            format,
        } => {
            if rank > DEFAULT_RANK_CAP {
                return Err(CliError::CapExceeded(format!(
                    "rank {rank} exceeds the default cap {DEFAULT_RANK_CAP}"
                )));
            }
            let word = FreeWord::parse(rank, &word).map_err(|e| CliError::Parse(e.to_string()))?;
            if n == 0 {
                return Err(CliError::Parse("root index must be >= 1".into()));
            }
            let solutions = word
                .nth_root(n)
                .map_err(|e| CliError::Parse(e.to_string()))?;
            print_solutions(&solutions, format, |w| w.to_string());
            Ok(())
        }
    }
}

fn render_hpoint(point: &HPoint) -> String {
    let coordinate = |c: &[Ratio<i128>]| {
        c.iter()
            .map(|v| v.to_string())
            .collect::<Vec<String>>()
            .join(":")
    };
    format!(
        "({},{},{})",
        coordinate(&point.x),
        coordinate(&point.y),
        coordinate(&point.z)
    )
}

fn print_solutions<T>(solutions: &SolutionSet<T>, format: Format, render: impl Fn(&T) -> String) {
    match format {
        Format::Json => {
            let value = match solutions {
                SolutionSet::Empty => serde_json::json!({"status": "empty", "count": 0}),
                SolutionSet::Finite(witnesses) => serde_json::json!({
                    "status": "finite",
                    "count": witnesses.len(),
                    "witnesses": witnesses.iter().map(&render).collect::<Vec<String>>(),
                }),
                SolutionSet::CosetOfSocle {
                    representative,
                    socle_cardinality,
                } => serde_json::json!({
                    "status": "coset_of_socle",
                    "representative": render(representative),
                    "count": socle_cardinality.to_string(),
                }),
            };
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        _ => match solutions {
            SolutionSet::Empty => println!("no solutions"),
            SolutionSet::Finite(witnesses) => {
                let rendered: Vec<String> = witnesses.iter().map(&render).collect();
                println!("solutions ({}): {}", witnesses.len(), rendered.join(", "));
            }
            SolutionSet::CosetOfSocle {
                representative,
                socle_cardinality,
            } => {
                println!(
                    "coset of the socle through {} ({} solutions)",
                    render(representative),
                    socle_cardinality
                );
            }
        },
    }
}

fn verify_command(suite: &str, format: Format) -> Result<(), CliError> {
    let reports: Vec<SuiteReport> = if suite == "all" {
        run_all()
    } else {
        vec![run_suite(suite).map_err(|e| CliError::UnknownName(e.to_string()))?]
    };
    let all_passed = reports.iter().all(|r| r.passed());
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&reports).unwrap());
        }
        _ => {
            for report in &reports {
                for check in &report.checks {
                    println!(
                        "{} {:<10} {} ({})",
                        if check.passed { "PASS" } else { "FAIL" },
                        report.suite,
                        check.name,
                        check.detail
                    );
                }
            }
            println!("{} suites available: {}", SUITES.len(), SUITES.join(", "));
        }
    }
    if all_passed {
        Ok(())
    } else {
        Err(CliError::VerificationFailed)
    }
}
