use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use recon_core::audit::{self, AuditReport};
use recon_core::deck::{k_deck, DeckDifference};
use recon_core::deckfile::{read_deck_file, DeckFileRecord};
use recon_core::gen::{self, Family, GenSpec};
use recon_core::graph6::{emit_graph6, parse_graph6_lines};
use recon_core::recon::{verify_catalog, verify_range, VerifyReport};
use recon_core::{Deck, Graph};

#[derive(Parser, Debug)]
#[command(name = "recon", version, about = "Deck computation and reconstruction checks for small graphs")]
struct Cli {
    /// Cap the worker pool; defaults to one thread per core.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one graph6 line per isomorphism class.
    Gen(GenArgs),
    /// Write the k-deck of each input graph as JSON lines.
    Deck(DeckArgs),
    /// Compare two decks; prints EQUAL or the first differing card.
    Compare(CompareArgs),
    /// Check that no two cubic graphs share a 2-deletion deck.
    Verify(VerifyArgs),
    /// Run one of the card-level audits.
    Audit(AuditArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum FamilyArg {
    All,
    Cubic,
    CubicAll,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::All => Family::AllGraphs,
            FamilyArg::Cubic => Family::CubicConnected,
            FamilyArg::CubicAll => Family::CubicAll,
        }
    }
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "all")]
    family: FamilyArg,
    #[arg(long)]
    min_girth: Option<usize>,
}

#[derive(Args, Debug, Clone, Copy)]
#[group(required = false, multiple = false)]
struct CardSize {
    /// Card size.
    #[arg(long)]
    k: Option<usize>,
    /// Number of deleted vertices; cards have n - L vertices.
    #[arg(long, value_name = "L")]
    delete: Option<usize>,
}

impl CardSize {
    fn deck_of(&self, g: &Graph) -> Result<Deck> {
        let k = match (self.k, self.delete) {
            (Some(k), _) => k,
            (None, Some(l)) => g.n().checked_sub(l).ok_or_else(|| anyhow!("cannot delete {l} of {} vertices", g.n()))?,
            (None, None) => bail!("graph6 input needs --k or --delete"),
        };
        Ok(k_deck(g, k)?)
    }
}

#[derive(Args, Debug)]
struct DeckArgs {
    /// graph6 file; standard input when omitted.
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
    #[command(flatten)]
    size: CardSize,
}

#[derive(Args, Debug)]
struct CompareArgs {
    /// Deck file or graph6 file holding a single entry.
    first: PathBuf,
    second: PathBuf,
    #[command(flatten)]
    size: CardSize,
}

#[derive(Args, Debug, Serialize)]
struct VerifyArgs {
    /// Largest even order to sweep.
    #[arg(long, required_unless_present = "catalog")]
    n_max: Option<usize>,
    #[arg(long)]
    include_disconnected: bool,
    /// Check a graph6 catalog of cubic graphs instead of generating one.
    #[arg(long, value_name = "PATH", conflicts_with_all = ["n_max", "include_disconnected"])]
    catalog: Option<PathBuf>,
    /// Include wall-clock times, which makes output vary between runs.
    #[arg(long)]
    timings: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Which {
    Girth5,
    Remark,
    SharpPairs,
    Classify,
}

#[derive(Args, Debug, Serialize)]
struct AuditArgs {
    #[arg(long, value_enum)]
    which: Which,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    l_max: Option<usize>,
}

#[derive(Serialize)]
struct Envelope<'a, A: Serialize, R: Serialize> {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    flags: &'a A,
    report: R,
}

/// A command either completes with a positive or negative finding, or fails
/// with a usage or input error.
enum Outcome {
    Ok,
    Negative,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    if let Some(t) = cli.threads {
        if t == 0 {
            bail!("--threads must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global().context("configuring thread pool")?;
    }
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Gen(a) => cmd_gen(&a, &mut out),
        Command::Deck(a) => cmd_deck(&a, &mut out),
        Command::Compare(a) => cmd_compare(&a, &mut out),
        Command::Verify(a) => cmd_verify(&a, &mut out),
        Command::Audit(a) => cmd_audit(&a, &mut out),
    }
}

fn cmd_gen(a: &GenArgs, out: &mut impl Write) -> Result<Outcome> {
    let spec = GenSpec { n: a.n, family: a.family.into(), min_girth: a.min_girth };
    for g in gen::enumerate(&spec)? {
        writeln!(out, "{}", emit_graph6(&g))?;
    }
    Ok(Outcome::Ok)
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
    }
}

fn parse_graphs(text: &str, origin: &str) -> Result<Vec<Graph>> {
    parse_graph6_lines(text).map_err(|(line, e)| anyhow!("{origin}:{line}: {e}"))
}

fn cmd_deck(a: &DeckArgs, out: &mut impl Write) -> Result<Outcome> {
    let text = read_input(a.input.as_deref())?;
    let origin = a.input.as_ref().map_or("<stdin>".to_string(), |p| p.display().to_string());
    for g in parse_graphs(&text, &origin)? {
        let deck = a.size.deck_of(&g)?;
        writeln!(out, "{}", DeckFileRecord::from_deck(&deck, Some(&g)).to_json_line())?;
    }
    Ok(Outcome::Ok)
}

/// Deck files are recognized by their JSON objects; anything else is read
/// as graph6.
fn load_deck(path: &Path, size: &CardSize) -> Result<Deck> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let origin = path.display().to_string();
    let mut decks = if text.trim_start().starts_with('{') {
        read_deck_file(&text).map_err(|(line, e)| anyhow!("{origin}:{line}: {e}"))?
    } else {
        parse_graphs(&text, &origin)?.iter().map(|g| size.deck_of(g)).collect::<Result<Vec<_>>>()?
    };
    if decks.len() != 1 {
        bail!("{origin}: expected exactly one deck or graph, found {}", decks.len());
    }
    Ok(decks.remove(0))
}

fn cmd_compare(a: &CompareArgs, out: &mut impl Write) -> Result<Outcome> {
    let first = load_deck(&a.first, &a.size)?;
    let second = load_deck(&a.second, &a.size)?;
    match first.first_difference(&second) {
        None => {
            writeln!(out, "EQUAL")?;
            Ok(Outcome::Ok)
        }
        Some(DeckDifference::Shape { left, right }) => {
            bail!("decks are not comparable: (n, k) = {left:?} vs {right:?}")
        }
        Some(DeckDifference::Card { code, left, right }) => {
            writeln!(out, "DIFFERENT")?;
            writeln!(out, "first difference: card {} appears {left} times vs {right} times", emit_graph6(&code.to_graph()))?;
            writeln!(out, "fingerprints: {} vs {}", first.fingerprint(), second.fingerprint())?;
            Ok(Outcome::Negative)
        }
    }
}

fn write_json(out: &mut impl Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn cmd_verify(a: &VerifyArgs, out: &mut impl Write) -> Result<Outcome> {
    let start = Instant::now();
    let report: VerifyReport = match (&a.catalog, a.n_max) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            verify_catalog(parse_graphs(&text, &path.display().to_string())?)?
        }
        (None, Some(n_max)) => verify_range(n_max, a.include_disconnected)?,
        (None, None) => bail!("--n-max or --catalog is required"),
    };
    let verified = report.verified();
    #[derive(Serialize)]
    struct Body {
        verified: bool,
        total_classes: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        wall_time_ms: Option<f64>,
        #[serde(flatten)]
        report: VerifyReport,
    }
    let body = if a.timings {
        Body {
            verified,
            total_classes: report.total_classes(),
            wall_time_ms: Some(start.elapsed().as_secs_f64() * 1e3),
            report,
        }
    } else {
        Body { verified, total_classes: report.total_classes(), wall_time_ms: None, report: report.without_timings() }
    };
    write_json(out, &Envelope { tool: "recon", version: env!("CARGO_PKG_VERSION"), command: "verify", flags: a, report: body })?;
    Ok(if verified { Outcome::Ok } else { Outcome::Negative })
}

fn cmd_audit(a: &AuditArgs, out: &mut impl Write) -> Result<Outcome> {
    let need_n = || a.n_max.ok_or_else(|| anyhow!("--n-max is required for this audit"));
    let report: AuditReport = match a.which {
        Which::Girth5 => audit::audit_lemma_girth5(need_n()?)?,
        Which::Remark => audit::audit_remark_structure(need_n()?)?,
        Which::Classify => audit::audit_classification(need_n()?)?,
        Which::SharpPairs => audit::audit_sharp_pairs(a.l_max.unwrap_or(6))?,
    };
    let failed = report.failed();
    write_json(out, &Envelope { tool: "recon", version: env!("CARGO_PKG_VERSION"), command: "audit", flags: a, report })?;
    Ok(if failed { Outcome::Negative } else { Outcome::Ok })
}
