//! `rainbow-match`: generate, check, solve, prove and verify from the shell.
//!
//! Exit codes: 0 success or matching found, 1 well-formed negative answer,
//! 2 invalid input or unmet hypotheses.

use std::error::Error;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rainbow_match::constructions::{self, ColoringMode, RandomInstanceSpec};
use rainbow_match::format;
use rainbow_match::harness::{self, HarnessError, SweepConfig};
use rainbow_match::proof::{self, ExtensionPolicy, ProofError, ProofOptions};
use rainbow_match::solver::{self, SolveError, DEFAULT_BRUTE_FORCE_CAP};
use rainbow_match::{check_rainbow_matching, validate, ColoredHypergraph, HypergraphFamily};

type Result<T> = std::result::Result<T, Box<dyn Error>>;

const CAP_VAR: &str = "RAINBOW_MATCH_BRUTE_CAP";

#[derive(Parser)]
#[command(name = "rainbow-match", version, about = "Rainbow matchings in properly colored uniform hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated hypergraph (.chg) or family (.chf); `.json` selects JSON.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Check a coloring property of every member of a file.
    Check {
        property: Property,
        file: PathBuf,
    },
    /// Search for an s-rainbow matching.
    Solve {
        #[arg(long)]
        family: PathBuf,
        /// Use exhaustive enumeration, capped by $RAINBOW_MATCH_BRUTE_CAP.
        #[arg(long)]
        oracle: bool,
        /// Write the witness here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rainbow matching number of one hypergraph.
    Nur {
        #[arg(long)]
        input: PathBuf,
    },
    /// Matching number of one hypergraph.
    Nu {
        #[arg(long)]
        input: PathBuf,
    },
    /// Build a witness by following the inductive construction.
    Prove {
        #[arg(long)]
        family: PathBuf,
        /// Write the step log here.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Procedure::Theorem)]
        procedure: Procedure,
        #[arg(long, value_enum, default_value_t = Policy::Attempt)]
        extension: Policy,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Batch experiments.
    Verify {
        #[command(subcommand)]
        check: VerifyKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Proper,
    Rainbow,
}

#[derive(Clone, Copy, ValueEnum)]
enum Procedure {
    /// Rainbow graphs, n >= 5s.
    Lemma1,
    /// Rainbow k-uniform members, n >= 3k²s.
    Lemma2,
    /// Properly colored k-uniform members, n >= 3k²s.
    Theorem,
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    Attempt,
    DegreeCondition,
}

#[derive(Clone, Copy, ValueEnum)]
enum Coloring {
    Rainbow,
    GreedyProper,
}

impl From<Coloring> for ColoringMode {
    fn from(c: Coloring) -> Self {
        match c {
            Coloring::Rainbow => ColoringMode::Rainbow,
            Coloring::GreedyProper => ColoringMode::GreedyProper,
        }
    }
}

#[derive(Args)]
struct Output {
    /// Destination file; standard output if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Nks {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    s: usize,
}

#[derive(Subcommand)]
enum GenKind {
    /// All k-subsets meeting {0, ..., s-2}.
    Cover {
        #[command(flatten)]
        nks: Nks,
        /// Write a family of this many copies instead of one hypergraph.
        #[arg(long)]
        members: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// All k-subsets of {0, ..., ks-2}.
    Clique {
        #[command(flatten)]
        nks: Nks,
        #[arg(long)]
        members: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// The two-member family on 2k vertices with no 2-rainbow matching.
    ComplementPair {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        output: Output,
    },
    /// m uniformly random k-subsets per member.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Coloring::Rainbow)]
        coloring: Coloring,
        /// Write a family of independently seeded members.
        #[arg(long)]
        members: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand)]
enum VerifyKind {
    /// Run a TOML-configured sweep and write the CSV report.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also write the full report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Cover-construction members at exactly the threshold, no matching.
    Tightness {
        #[command(flatten)]
        nks: Nks,
    },
    /// Exhaustive search of the complement pair.
    Counterexample {
        #[arg(long)]
        k: usize,
    },
}

/// A completed command's verdict.
enum Verdict {
    Yes,
    No,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display()).into()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn is_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

fn wants_json(out: Option<&Path>) -> bool {
    out.is_some_and(|p| p.extension().is_some_and(|e| e == "json"))
}

fn read_family(path: &Path) -> Result<HypergraphFamily> {
    let text = read(path)?;
    let family = if is_json(&text) {
        format::family_from_json(&text)
    } else if format::is_family_text(&text) {
        format::parse_chf(&text)
    } else {
        return Err(format!("{}: expected a family file (`family s` header or JSON members)", path.display()).into());
    };
    family.map_err(|e| format!("{}: {e}", path.display()).into())
}

fn read_hypergraph(path: &Path) -> Result<ColoredHypergraph> {
    let text = read(path)?;
    let h = if is_json(&text) {
        format::hypergraph_from_json(&text)
    } else {
        format::parse_chg(&text)
    };
    h.map_err(|e| format!("{}: {e}", path.display()).into())
}

/// Members of a file without structural validation, for `check`.
fn read_members_unchecked(path: &Path) -> Result<Vec<ColoredHypergraph>> {
    let text = read(path)?;
    let at = |e: rainbow_match::FormatError| format!("{}: {e}", path.display());
    Ok(if is_json(&text) {
        match format::family_from_json(&text) {
            Ok(f) => f.into_members(),
            Err(_) => vec![format::hypergraph_from_json(&text).map_err(at)?],
        }
    } else if format::is_family_text(&text) {
        format::parse_chf(&text).map_err(at)?.into_members()
    } else {
        vec![format::parse_chg_unchecked(&text).map_err(at)?]
    })
}

fn brute_cap() -> Result<u128> {
    match std::env::var(CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{CAP_VAR} must be a non-negative integer, got {v:?}").into()),
        Err(_) => Ok(DEFAULT_BRUTE_FORCE_CAP),
    }
}

fn write_generated(
    output: &Output,
    comments: Vec<String>,
    one: Option<ColoredHypergraph>,
    family: Option<HypergraphFamily>,
) -> Result<()> {
    let out = output.out.as_deref();
    let text = match (one, family) {
        (Some(h), _) if wants_json(out) => format::hypergraph_to_json(&h),
        (Some(h), _) => format::write_chg_with_comments(&h, &comments),
        (None, Some(f)) if wants_json(out) => format::family_to_json(&f),
        (None, Some(f)) => format::write_chf_with_comments(&f, &comments),
        (None, None) => unreachable!("generator produced nothing"),
    };
    emit(out, &text)
}

fn single_or_copies(h: ColoredHypergraph, members: Option<usize>) -> Result<(Option<ColoredHypergraph>, Option<HypergraphFamily>)> {
    Ok(match members {
        None => (Some(h), None),
        Some(s) => (None, Some(HypergraphFamily::repeated(&h, s)?)),
    })
}

fn gen(kind: GenKind) -> Result<Verdict> {
    match kind {
        GenKind::Cover { nks, members, output } => {
            let h = constructions::cover_construction(nks.n, nks.k, nks.s)?;
            let comment = format!("cover construction n={} k={} s={}", nks.n, nks.k, nks.s);
            let (one, family) = single_or_copies(h, members)?;
            write_generated(&output, vec![comment], one, family)?;
        }
        GenKind::Clique { nks, members, output } => {
            let h = constructions::clique_construction(nks.n, nks.k, nks.s)?;
            let comment = format!("clique construction n={} k={} s={}", nks.n, nks.k, nks.s);
            let (one, family) = single_or_copies(h, members)?;
            write_generated(&output, vec![comment], one, family)?;
        }
        GenKind::ComplementPair { k, output } => {
            let f = constructions::complement_pair(k)?;
            write_generated(&output, vec![format!("complement pair k={k}")], None, Some(f))?;
        }
        GenKind::Random { n, k, m, seed, coloring, members, output } => {
            let mode = ColoringMode::from(coloring);
            let comment = format!("random n={n} k={k} m={m} coloring={} seed={seed}", mode.as_str());
            match members {
                None => {
                    let h = constructions::random_instance(&RandomInstanceSpec { n, k, m, seed, coloring_mode: mode })?;
                    write_generated(&output, vec![comment], Some(h), None)?;
                }
                Some(s) => {
                    let f = constructions::random_family(n, k, s, m, seed, mode)?;
                    let comment = format!("{comment} members={s}");
                    write_generated(&output, vec![comment], None, Some(f))?;
                }
            }
        }
    }
    Ok(Verdict::Yes)
}

fn check(property: Property, file: &Path) -> Result<Verdict> {
    let members = read_members_unchecked(file)?;
    let mut ok = true;
    for (i, h) in members.iter().enumerate() {
        let report = validate(h);
        for v in &report.violations {
            println!("member {i}: {v}");
        }
        let member_ok = match property {
            Property::Proper => report.is_empty(),
            Property::Rainbow => report.is_structurally_valid() && h.is_rainbow(),
        };
        if matches!(property, Property::Rainbow) && report.is_structurally_valid() && !h.is_rainbow() {
            println!("member {i}: colors repeat");
        }
        ok &= member_ok;
    }
    let name = match property {
        Property::Proper => "properly colored",
        Property::Rainbow => "rainbow",
    };
    println!("{}", if ok { name.to_string() } else { format!("not {name}") });
    Ok(ok.into())
}

fn solve(family_path: &Path, oracle: bool, out: Option<&Path>) -> Result<Verdict> {
    let family = read_family(family_path)?;
    let outcome = if oracle {
        solver::brute_force_matching(&family, brute_cap()?)
    } else {
        solver::find_rainbow_matching(&family)
    };
    let outcome = outcome.map_err(|e: SolveError| e.to_string())?;
    eprintln!(
        "{} after {} nodes in {:.3}s",
        if outcome.found { "found" } else { "no s-rainbow matching" },
        outcome.nodes_explored,
        outcome.elapsed.as_secs_f64()
    );
    match &outcome.matching {
        Some(m) => {
            check_rainbow_matching(&family, m).map_err(|v| format!("solver returned an invalid witness: {v}"))?;
            emit(out, &format::write_picks(&family, m))?;
            Ok(Verdict::Yes)
        }
        None => Ok(Verdict::No),
    }
}

fn prove(family_path: &Path, trace_path: Option<&Path>, procedure: Procedure, policy: Policy, out: Option<&Path>) -> Result<Verdict> {
    let family = read_family(family_path)?;
    let options = ProofOptions {
        extension: match policy {
            Policy::Attempt => ExtensionPolicy::Attempt,
            Policy::DegreeCondition => ExtensionPolicy::DegreeCondition,
        },
    };
    let result = match procedure {
        Procedure::Lemma1 => proof::lemma1_construct(&family),
        Procedure::Lemma2 => proof::lemma2_construct_with(&family, options),
        Procedure::Theorem => proof::theorem1_construct_with(&family, options),
    };
    let (matching, trace) = match result {
        Ok((m, t)) => (Some(m), t),
        Err(failure) => {
            if let Some(p) = trace_path {
                emit(Some(p), &failure.trace.to_log())?;
            }
            return match failure.error {
                ProofError::Precondition { depth: 0, .. } => Err(failure.error.to_string().into()),
                e => {
                    eprintln!("error: {e}");
                    Ok(Verdict::No)
                }
            };
        }
    };
    if let Some(p) = trace_path {
        emit(Some(p), &trace.to_log())?;
    }
    let m = matching.expect("success carries a witness");
    check_rainbow_matching(&family, &m).map_err(|v| format!("constructed witness rejected: {v}"))?;
    eprintln!("witness built in {} steps, depth {}", trace.entries.len(), trace.max_depth());
    emit(out, &format::write_picks(&family, &m))?;
    Ok(Verdict::Yes)
}

fn harness_err(e: HarnessError) -> Box<dyn Error> {
    e.to_string().into()
}

fn verify(kind: VerifyKind) -> Result<Verdict> {
    match kind {
        VerifyKind::Sweep { config, out, json } => {
            let config = SweepConfig::from_toml(&read(&config)?)?;
            let report = harness::sweep(&config).map_err(harness_err)?;
            emit(Some(&out), &report.to_csv().map_err(harness_err)?)?;
            if let Some(p) = json {
                emit(Some(&p), &report.to_json())?;
            }
            let s = &report.summary;
            println!(
                "records={} found={} valid={} exploratory={} misses={} disagreements={} diagnostics={}",
                s.records, s.found, s.valid, s.exploratory, s.misses, s.disagreements, s.diagnostics
            );
            Ok((s.misses == 0 && s.disagreements == 0 && s.found == s.valid).into())
        }
        VerifyKind::Tightness { nks } => {
            let r = harness::tightness_check(nks.n, nks.k, nks.s).map_err(harness_err)?;
            println!(
                "n={} k={} s={} edges={} threshold={} found={}",
                r.n, r.k, r.s, r.edges, r.threshold, r.found
            );
            Ok(r.holds().into())
        }
        VerifyKind::Counterexample { k } => {
            let r = harness::counterexample_check_with_cap(k, brute_cap()?).map_err(harness_err)?;
            println!(
                "k={} edges={},{} C(2k,k)={} C(2k-1,k)={} rainbow={} found={} tuples={}",
                r.k, r.edges[0], r.edges[1], r.full, r.threshold, r.members_rainbow, r.found, r.tuples_examined
            );
            Ok(r.holds().into())
        }
    }
}

fn run(cli: Cli) -> Result<Verdict> {
    match cli.command {
        Command::Gen { kind } => gen(kind),
        Command::Check { property, file } => check(property, &file),
        Command::Solve { family, oracle, out } => solve(&family, oracle, out.as_deref()),
        Command::Nur { input } => {
            println!("{}", solver::rainbow_matching_number(&read_hypergraph(&input)?));
            Ok(Verdict::Yes)
        }
        Command::Nu { input } => {
            println!("{}", solver::matching_number(&read_hypergraph(&input)?));
            Ok(Verdict::Yes)
        }
        Command::Prove { family, trace, procedure, extension, out } => {
            prove(&family, trace.as_deref(), procedure, extension, out.as_deref())
        }
        Command::Verify { check } => verify(check),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Verdict::Yes) => ExitCode::SUCCESS,
        Ok(Verdict::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
