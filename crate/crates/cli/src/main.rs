mod describe;
mod report;

use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use prefdomain::domains;
use prefdomain::fixtures;
use prefdomain::format;
use prefdomain::graph::{self, GraphVerdict};
use prefdomain::scf::{self, ScfVerdict};
use prefdomain::search::{self, AxiomBundle, Budget, Incentive, Membership, SearchDecision, SearchResult};
use prefdomain::witness::{Claim, WitnessDocument};
use prefdomain::{AlternativeSet, Domain, DomainVerdict, Error, LinearOrder, ScfTable, Verdict};

use report::{Entry, Report, Status};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_TIMEOUT: u8 = 3;

#[derive(Parser)]
#[command(name = "prefdomain", version, about = "Preference domain properties and strategy-proof social choice functions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide structural properties of a domain file.
    Check(CheckArgs),
    /// Check, construct and search for social choice functions.
    #[command(subcommand)]
    Scf(ScfCmd),
    /// Print a built-in domain in the domain file format.
    Fixtures(FixturesArgs),
    /// Print the induced graph on alternatives as an edge list.
    Graph {
        /// Domain file, or `-` for standard input.
        domain: PathBuf,
    },
    /// Replay a witness document, or every witness in a JSON report.
    VerifyWitness {
        /// JSON file, or `-` for standard input.
        file: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Property {
    MinimalRichness,
    Connected,
    Cdn,
    PropertyP,
    Scd,
    Disagreement,
    Lemma1,
}

#[derive(Args)]
struct CheckArgs {
    /// Domain file, or `-` for standard input.
    domain: PathBuf,
    /// Properties to decide (comma separated); all by default.
    #[arg(long, value_enum, value_delimiter = ',')]
    only: Vec<Property>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Axiom {
    Unanimity,
    LocalSp,
    Sp,
    TopsOnly,
    NonTopsOnly,
    Dictatorship,
    NonDictatorship,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Case {
    Case1,
    Case2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expect {
    Found,
    Exhausted,
}

#[derive(Args)]
struct BudgetArgs {
    /// Node budget for each search.
    #[arg(long, default_value_t = search::DEFAULT_MAX_NODES)]
    max_nodes: u64,
    /// Wall-clock limit in seconds for each search.
    #[arg(long)]
    time_limit: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> Result<Budget, CliError> {
        let time_limit = match self.time_limit {
            None => None,
            Some(s) if s.is_finite() && s > 0.0 => Some(Duration::from_secs_f64(s)),
            Some(s) => return Err(CliError::Usage(format!("time limit must be positive, got {s}"))),
        };
        Ok(Budget {
            max_nodes: self.max_nodes,
            time_limit,
        })
    }
}

#[derive(Subcommand)]
enum ScfCmd {
    /// Check an SCF file against axioms.
    Check {
        /// SCF file, or `-` for standard input.
        scf: PathBuf,
        /// Domain file the rule is defined on.
        #[arg(long)]
        domain: PathBuf,
        /// Axioms to check (comma separated); by default unanimity,
        /// local-sp, sp, tops-only and dictatorship.
        #[arg(long, value_enum, value_delimiter = ',')]
        axioms: Vec<Axiom>,
        #[arg(long)]
        json: bool,
    },
    /// Build one of the two non-dictatorial constructions and print it as
    /// an SCF file.
    Construct {
        #[arg(value_enum)]
        case: Case,
        domain: PathBuf,
        /// Number of voters.
        #[arg(long)]
        n: usize,
        /// case1: a preference (1-based) whose component is singled out.
        #[arg(long, default_value_t = 1)]
        base: usize,
        /// case2: a preference (1-based) whose closure has one neighbour top.
        #[arg(long, default_value_t = 1)]
        pstar: usize,
        /// First distinguished voter (1-based).
        #[arg(long, default_value_t = 1)]
        v1: usize,
        /// Second distinguished voter (1-based).
        #[arg(long, default_value_t = 2)]
        v2: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Search for a rule meeting an axiom bundle.
    Search {
        domain: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        unanimity: bool,
        #[arg(long, conflicts_with = "sp")]
        local_sp: bool,
        #[arg(long)]
        sp: bool,
        #[arg(long, conflicts_with = "non_tops_only")]
        tops_only: bool,
        #[arg(long)]
        non_tops_only: bool,
        #[arg(long)]
        non_dictatorial: bool,
        /// Search over functions of the top vector only.
        #[arg(long, conflicts_with = "non_tops_only")]
        restrict_tops_only: bool,
        /// Outcome that counts as success for the exit code.
        #[arg(long, value_enum, default_value = "found")]
        expect: Expect,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Write a found rule to this SCF file.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Report region membership: CDN, L-tops-only, local and global
    /// dictatorship, plus the domain properties.
    Classify {
        domain: PathBuf,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct FixturesArgs {
    /// Fixture or generator name.
    name: Option<String>,
    #[arg(long)]
    list: bool,
    /// Number of alternatives for generators.
    #[arg(long)]
    m: Option<usize>,
    /// Spectrum for single-peaked and single-dipped domains, left to right,
    /// e.g. "a1 a2 a3 a4".
    #[arg(long)]
    spectrum: Option<String>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Lib(Error),
    Io(PathBuf, io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
        }
    }
}

type CliResult = Result<u8, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let result = match cli.cmd {
        Cmd::Check(args) => cmd_check(argv, args),
        Cmd::Scf(sub) => cmd_scf(argv, sub),
        Cmd::Fixtures(args) => cmd_fixtures(args),
        Cmd::Graph { domain } => cmd_graph(&domain),
        Cmd::VerifyWitness { file } => cmd_verify(&file),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                CliError::Lib(Error::Construction(_)) => EXIT_FAIL,
                _ => EXIT_USAGE,
            };
            ExitCode::from(code)
        }
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(path.to_path_buf(), e))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
    }
}

fn write_output(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn load_domain(path: &Path) -> Result<(Domain, Value), CliError> {
    let text = read_input(path)?;
    let d = format::parse_domain(&text).map_err(|e| match e {
        Error::Parse { .. } => CliError::Usage(format!("{}: {e}", path.display())),
        other => CliError::Lib(other),
    })?;
    let input = json!({
        "role": "domain",
        "path": path.display().to_string(),
        "digest": format::domain_digest(&d),
        "m": d.m(),
        "preferences": d.len(),
    });
    Ok((d, input))
}

fn emit(report: &Report, json: bool, started: Instant) {
    let mut out = io::stdout().lock();
    let text = if json {
        let mut s = serde_json::to_string_pretty(&report.to_json(started.elapsed())).expect("serializable");
        s.push('\n');
        s
    } else {
        report.to_text()
    };
    // a closed pipe is not worth a panic
    let _ = out.write_all(text.as_bytes());
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn replay(d: &Domain, claim: Claim) -> Value {
    to_value(&WitnessDocument::new(d, claim))
}

fn domain_entry(name: &str, d: &Domain, v: &DomainVerdict) -> Entry {
    match v {
        Verdict::Holds => Entry::new(name, Status::Holds),
        Verdict::Fails(w) => Entry::new(name, Status::Fails)
            .detail(describe::domain(d.alts(), w))
            .witness(to_value(w))
            .replay(replay(d, Claim::Domain { witness: w.clone() })),
    }
}

fn graph_entry(name: &str, d: &Domain, v: &GraphVerdict) -> Entry {
    match v {
        Verdict::Holds => Entry::new(name, Status::Holds),
        Verdict::Fails(w) => Entry::new(name, Status::Fails)
            .detail(describe::graph(d.alts(), w))
            .witness(to_value(w))
            .replay(replay(d, Claim::Graph { witness: w.clone() })),
    }
}

fn scf_entry(name: &str, f: &ScfTable, scf_text: &str, v: &ScfVerdict) -> Entry {
    match v {
        Verdict::Holds => Entry::new(name, Status::Holds),
        Verdict::Fails(w) => Entry::new(name, Status::Fails)
            .detail(describe::scf(f.domain().alts(), w))
            .witness(to_value(w))
            .replay(replay(
                f.domain(),
                Claim::Scf {
                    scf: scf_text.to_string(),
                    witness: w.clone(),
                },
            )),
    }
}

fn exit_for(results: &[Entry]) -> u8 {
    if results.iter().any(|e| e.status == Status::Timeout || e.status == Status::Undecided) {
        EXIT_TIMEOUT
    } else if results.iter().any(|e| e.status == Status::Fails) {
        EXIT_FAIL
    } else {
        0
    }
}

fn cmd_check(argv: Vec<String>, args: CheckArgs) -> CliResult {
    let started = Instant::now();
    let (d, input) = load_domain(&args.domain)?;
    let explicit = !args.only.is_empty();
    let props = if explicit {
        args.only.clone()
    } else {
        vec![
            Property::MinimalRichness,
            Property::Connected,
            Property::Cdn,
            Property::PropertyP,
            Property::Scd,
            Property::Disagreement,
            Property::Lemma1,
        ]
    };
    let mut report = Report::new(argv);
    report.inputs.push(input);
    for p in props {
        match p {
            Property::MinimalRichness => {
                report.push(domain_entry("minimal_richness", &d, &domains::is_minimally_rich(&d)))
            }
            Property::Connected => report.push(domain_entry("connected", &d, &domains::is_connected(&d))),
            Property::Cdn => match domains::is_cdn(&d) {
                Ok(v) => report.push(domain_entry("cdn", &d, &v)),
                Err(e @ Error::TooFewAlternatives { .. }) => {
                    if explicit {
                        return Err(e.into());
                    }
                    report.push(Entry::new("cdn", Status::Skipped).detail(e.to_string()));
                }
                Err(e) => return Err(e.into()),
            },
            Property::PropertyP => report.push(domain_entry("property_p", &d, &domains::satisfies_property_p(&d))),
            Property::Scd => report.push(domain_entry("scd", &d, &domains::satisfies_scd(&d))),
            Property::Disagreement => {
                report.push(domain_entry("disagreement", &d, &domains::satisfies_disagreement(&d)))
            }
            Property::Lemma1 => {
                let r = graph::lemma1_check(&d);
                for (name, v) in r.verdicts() {
                    report.push(graph_entry(&format!("lemma1.{name}"), &d, v));
                }
            }
        }
    }
    emit(&report, args.json, started);
    Ok(exit_for(&report.results))
}

fn cmd_scf(argv: Vec<String>, sub: ScfCmd) -> CliResult {
    match sub {
        ScfCmd::Check { scf, domain, axioms, json } => scf_check(argv, &scf, &domain, axioms, json),
        ScfCmd::Construct { case, domain, n, base, pstar, v1, v2, output } => {
            let (d, _) = load_domain(&domain)?;
            let one_based = |name: &str, v: usize| {
                v.checked_sub(1)
                    .ok_or_else(|| CliError::Usage(format!("--{name} is 1-based, got 0")))
            };
            let (v1, v2) = (one_based("v1", v1)?, one_based("v2", v2)?);
            let f = match case {
                Case::Case1 => scf::construct_case1(&d, one_based("base", base)?, n, v1, v2)?,
                Case::Case2 => scf::construct_case2(&d, one_based("pstar", pstar)?, n, v1, v2)?,
            };
            let text = format::scf_to_text(&f, &format::domain_digest(&d));
            match output {
                Some(path) => write_output(&path, &text)?,
                None => {
                    let _ = io::stdout().lock().write_all(text.as_bytes());
                }
            }
            Ok(0)
        }
        ScfCmd::Search {
            domain,
            n,
            unanimity,
            local_sp,
            sp,
            tops_only,
            non_tops_only,
            non_dictatorial,
            restrict_tops_only,
            expect,
            budget,
            output,
            json,
        } => {
            let bundle = AxiomBundle {
                require_unanimity: unanimity,
                incentive: if sp {
                    Incentive::Sp
                } else if local_sp {
                    Incentive::LocalSp
                } else {
                    Incentive::None
                },
                require_tops_only: tops_only,
                forbid_tops_only: non_tops_only,
                forbid_dictatorship: non_dictatorial,
                restrict_search_to_tops_only: restrict_tops_only,
            };
            scf_search(argv, &domain, n, bundle, expect, budget.budget()?, output, json)
        }
        ScfCmd::Classify { domain, n, budget, json } => scf_classify(argv, &domain, n, budget.budget()?, json),
    }
}

fn scf_check(argv: Vec<String>, scf_path: &Path, domain: &Path, axioms: Vec<Axiom>, json: bool) -> CliResult {
    let started = Instant::now();
    let (d, input) = load_domain(domain)?;
    let text = read_input(scf_path)?;
    let file = format::parse_scf(&text, &d).map_err(|e| CliError::Usage(format!("{}: {e}", scf_path.display())))?;
    let digest = format::domain_digest(&d);
    if file.domain_ref.starts_with("sha256:") && file.domain_ref != digest {
        return Err(CliError::Usage(format!(
            "{} was written for domain {}, but {} has digest {digest}",
            scf_path.display(),
            file.domain_ref,
            domain.display()
        )));
    }
    let f = file.table;
    let canonical = format::scf_to_text(&f, &file.domain_ref);
    let axioms = if axioms.is_empty() {
        vec![Axiom::Unanimity, Axiom::LocalSp, Axiom::Sp, Axiom::TopsOnly, Axiom::Dictatorship]
    } else {
        axioms
    };
    let mut report = Report::new(argv);
    report.inputs.push(input);
    report.inputs.push(json!({
        "role": "scf",
        "path": scf_path.display().to_string(),
        "digest": file.domain_ref,
        "n": f.n(),
        "profiles": f.len(),
    }));
    let dictator_claim = |v: usize| Claim::Dictator {
        scf: canonical.clone(),
        voter: v,
    };
    for a in axioms {
        let entry = match a {
            Axiom::Unanimity => scf_entry("unanimity", &f, &canonical, &scf::check_unanimity(&f)),
            Axiom::LocalSp => scf_entry("local_sp", &f, &canonical, &scf::check_local_sp(&f)),
            Axiom::Sp => scf_entry("sp", &f, &canonical, &scf::check_sp(&f)),
            Axiom::TopsOnly => scf_entry("tops_only", &f, &canonical, &scf::check_tops_only(&f)),
            Axiom::NonTopsOnly => match scf::check_tops_only(&f) {
                Verdict::Holds => Entry::new("non_tops_only", Status::Fails).detail("the rule is tops-only"),
                Verdict::Fails(w) => Entry::new("non_tops_only", Status::Holds)
                    .detail(describe::scf(d.alts(), &w))
                    .replay(replay(&d, Claim::Scf { scf: canonical.clone(), witness: w })),
            },
            Axiom::Dictatorship => match scf::check_dictatorship(&f) {
                Some(v) => Entry::new("dictatorship", Status::Holds)
                    .detail(format!("voter {} is a dictator", v + 1))
                    .replay(replay(&d, dictator_claim(v))),
                None => scf_entry("dictatorship", &f, &canonical, &scf::dictatorship_verdict(&f)),
            },
            Axiom::NonDictatorship => match scf::check_dictatorship(&f) {
                Some(v) => Entry::new("non_dictatorship", Status::Fails)
                    .detail(format!("voter {} is a dictator", v + 1))
                    .witness(json!({ "kind": "dictator", "voter": v }))
                    .replay(replay(&d, dictator_claim(v))),
                None => {
                    let mut e = Entry::new("non_dictatorship", Status::Holds);
                    if let Verdict::Fails(w) = scf::dictatorship_verdict(&f) {
                        e = e
                            .detail(describe::scf(d.alts(), &w))
                            .replay(replay(&d, Claim::Scf { scf: canonical.clone(), witness: w }));
                    }
                    e
                }
            },
        };
        report.push(entry);
    }
    emit(&report, json, started);
    Ok(exit_for(&report.results))
}

fn certificate_value(c: &search::Certificate) -> Value {
    to_value(c)
}

#[allow(clippy::too_many_arguments)]
fn scf_search(
    argv: Vec<String>,
    domain: &Path,
    n: usize,
    bundle: AxiomBundle,
    expect: Expect,
    budget: Budget,
    output: Option<PathBuf>,
    json: bool,
) -> CliResult {
    let started = Instant::now();
    let (d, input) = load_domain(domain)?;
    let out = search::search_scf(&d, n, &bundle, budget).map_err(|e| match e {
        Error::Internal(_) => CliError::Lib(e),
        other => CliError::Usage(other.to_string()),
    })?;
    let mut report = Report::new(argv);
    report.inputs.push(input);
    report.set("bundle", to_value(&bundle));
    report.set("n", json!(n));
    report.set("budget", json!({ "max_nodes": budget.max_nodes, "time_limit_s": budget.time_limit.map(|t| t.as_secs_f64()) }));
    report.set("certificate", certificate_value(&out.certificate));
    let c = &out.certificate;
    report.trailer.push(format!(
        "nodes {}  propagations {}  branches {}  ordering {}",
        c.nodes, c.propagations, c.branches, c.ordering
    ));
    let code = match &out.result {
        SearchResult::Found(f) => {
            let text = format::scf_to_text(f, &format::domain_digest(&d));
            report.push(
                Entry::new("search", Status::Found)
                    .detail(format!("rule on {} profiles", f.len()))
                    .replay(replay(&d, Claim::Satisfies { scf: text.clone(), bundle })),
            );
            report.set("scf", json!(text));
            match &output {
                Some(path) => write_output(path, &text)?,
                None if !json => report.trailer.push(text.trim_end().to_string()),
                None => {}
            }
            if expect == Expect::Found {
                0
            } else {
                EXIT_FAIL
            }
        }
        SearchResult::Exhausted => {
            report.push(
                Entry::new("search", Status::Exhausted).detail("no rule meets the bundle").replay(replay(
                    &d,
                    Claim::Exhausted {
                        n,
                        bundle,
                        max_nodes: budget.max_nodes,
                    },
                )),
            );
            if expect == Expect::Exhausted {
                0
            } else {
                EXIT_FAIL
            }
        }
        SearchResult::Timeout => {
            report.push(Entry::new("search", Status::Timeout).detail("budget exhausted before a decision"));
            EXIT_TIMEOUT
        }
    };
    emit(&report, json, started);
    Ok(code)
}

fn membership_status(m: Membership) -> Status {
    match m {
        Membership::Holds => Status::Holds,
        Membership::Fails => Status::Fails,
        Membership::Undecided => Status::Undecided,
    }
}

fn decision_entry(name: &str, d: &Domain, n: usize, dec: &SearchDecision, budget: Budget) -> Entry {
    let c = &dec.certificate;
    let cert = format!("{} nodes", c.nodes);
    let e = Entry::new(name, membership_status(dec.status));
    match (&dec.status, &dec.counterexample) {
        (Membership::Fails, Some(f)) => {
            let text = format::scf_to_text(f, &format::domain_digest(d));
            e.detail(format!("counterexample found, {cert}"))
                .witness(json!({ "scf": text }))
                .replay(replay(d, Claim::Satisfies { scf: text, bundle: dec.bundle }))
        }
        (Membership::Holds, _) => e.detail(format!("search exhausted, {cert}")).replay(replay(
            d,
            Claim::Exhausted {
                n,
                bundle: dec.bundle,
                max_nodes: budget.max_nodes,
            },
        )),
        _ => e.detail(format!("budget ran out, {cert}")),
    }
}

fn scf_classify(argv: Vec<String>, domain: &Path, n: usize, budget: Budget, json: bool) -> CliResult {
    let started = Instant::now();
    let (d, input) = load_domain(domain)?;
    let c = search::classify_domain(&d, n, budget).map_err(|e| match e {
        Error::Internal(_) => CliError::Lib(e),
        other => CliError::Usage(other.to_string()),
    })?;
    let mut report = Report::new(argv);
    report.inputs.push(input);
    report.set("n", json!(n));
    for (name, v) in c.domain_verdicts() {
        report.push(domain_entry(name, &d, v));
    }
    report.push(decision_entry("search.l_tops_only", &d, n, &c.l_tops_only, budget));
    report.push(decision_entry("search.ldict", &d, n, &c.ldict, budget));
    report.push(decision_entry("search.dict", &d, n, &c.dict, budget));
    report.push(Entry::new("region.cdn", membership_status(c.cdn_member)));
    report.push(Entry::new("region.l_tops_only", membership_status(c.l_tops_only_member)));
    report.push(Entry::new("region.ldict", membership_status(c.ldict_member)));
    report.push(Entry::new("region.dict", membership_status(c.dict_member)));
    let agrees = match c.intersection_agrees {
        Some(true) => "agrees with region.ldict",
        Some(false) => "DISAGREES with region.ldict",
        None => "not comparable at this budget",
    };
    report.push(
        Entry::new("region.cdn_and_l_tops_only", membership_status(c.ldict_by_intersection)).detail(agrees),
    );
    report.set("intersection_agrees", json!(c.intersection_agrees));
    report.set("conjecture_relevant", json!(c.conjecture_relevant));
    if c.conjecture_relevant {
        report
            .trailer
            .push("note: CDN domain whose L-tops-only status is open at this budget".to_string());
    }
    emit(&report, json, started);
    let undecided = [c.l_tops_only.status, c.ldict.status, c.dict.status].contains(&Membership::Undecided);
    Ok(if undecided { EXIT_TIMEOUT } else { 0 })
}

fn spectrum_args(args: &FixturesArgs) -> Result<(AlternativeSet, LinearOrder), CliError> {
    match (&args.spectrum, args.m) {
        (Some(_), Some(_)) => Err(CliError::Usage("give either --m or --spectrum".into())),
        (Some(s), None) => {
            let alts = AlternativeSet::new(s.split_whitespace())?;
            let spectrum = LinearOrder::new((0..alts.len()).collect())?;
            Ok((alts, spectrum))
        }
        (None, Some(m)) => Ok(fixtures::natural_spectrum(m)?),
        (None, None) => Err(CliError::Usage("generator needs --m or --spectrum".into())),
    }
}

fn cmd_fixtures(args: FixturesArgs) -> CliResult {
    let mut out = io::stdout().lock();
    if args.list {
        for name in fixtures::FIXTURE_NAMES.iter().chain(fixtures::GENERATOR_NAMES.iter()) {
            let _ = writeln!(out, "{:14} {}", name, fixtures::describe(name).unwrap_or(""));
        }
        return Ok(0);
    }
    let Some(name) = args.name.as_deref() else {
        return Err(CliError::Usage("name a fixture or pass --list".into()));
    };
    let text = match name {
        "unrestricted" => {
            if args.spectrum.is_some() {
                return Err(CliError::Usage("unrestricted takes --m only".into()));
            }
            let m = args.m.ok_or_else(|| CliError::Usage("unrestricted needs --m".into()))?;
            format::domain_to_text(&fixtures::unrestricted(m)?)
        }
        "single_peaked" => {
            let (alts, spectrum) = spectrum_args(&args)?;
            format::domain_to_text(&fixtures::single_peaked(alts, &spectrum)?)
        }
        "single_dipped" => {
            let (alts, spectrum) = spectrum_args(&args)?;
            format::domain_to_text(&fixtures::single_dipped(alts, &spectrum)?)
        }
        table => {
            if args.m.is_some() || args.spectrum.is_some() {
                return Err(CliError::Usage(format!("{table} takes no generator options")));
            }
            fixtures::fixture_text(table)?.to_string()
        }
    };
    let _ = out.write_all(text.as_bytes());
    Ok(0)
}

fn cmd_graph(domain: &Path) -> CliResult {
    let (d, _) = load_domain(domain)?;
    let _ = io::stdout().lock().write_all(graph::induced_graph(&d).to_edge_list().as_bytes());
    Ok(0)
}

fn cmd_verify(file: &Path) -> CliResult {
    let text = read_input(file)?;
    let doc: Value =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: not JSON: {e}", file.display())))?;
    let mut docs: Vec<(String, Value)> = Vec::new();
    if doc.get("claim").is_some() {
        docs.push(("witness".to_string(), doc));
    } else if let Some(results) = doc.get("results").and_then(Value::as_array) {
        for r in results {
            if let Some(rep) = r.get("replay") {
                let name = r.get("name").and_then(Value::as_str).unwrap_or("?").to_string();
                docs.push((name, rep.clone()));
            }
        }
    } else {
        return Err(CliError::Usage(format!(
            "{}: expected a witness document or a report with `results`",
            file.display()
        )));
    }
    let mut out = io::stdout().lock();
    let mut all_ok = true;
    for (name, v) in docs.iter() {
        let parsed: WitnessDocument = serde_json::from_value(v.clone())
            .map_err(|e| CliError::Usage(format!("{name}: malformed witness: {e}")))?;
        let ok = parsed.verify().map_err(|e| CliError::Usage(format!("{name}: {e}")))?;
        all_ok &= ok;
        let _ = writeln!(out, "{name}: {}", if ok { "confirmed" } else { "NOT confirmed" });
    }
    if docs.is_empty() {
        let _ = writeln!(out, "no witnesses to replay");
    }
    Ok(if all_ok { 0 } else { EXIT_FAIL })
}
