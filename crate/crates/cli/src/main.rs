//! `straightknot`: straight numbers, families and diagram tools.
//!
//! Exit status: 0 on success, 1 when nothing was found within the budget
//! (or a verification did not go through), 2 on invalid input.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use straightknot::diagram::{twist_regions, TwistAxis};
use straightknot::families::{
    insert_full_twists, spiral, template_knot, template_straight_witness, weaving, weaving_bound,
    weaving_traversal, SpiralSpec, TemplateSpec,
};
use straightknot::flype::flype_report;
use straightknot::invariants::fingerprint;
use straightknot::render::render_svg;
use straightknot::solver::{straight_number, SolveOptions, Status, Target};
use straightknot::straight::{enumerate_shadows_pruned, for_each_straight, PruneFlags, ShadowCode};
use straightknot::verify::{conjecture_experiment, verify_template, verify_weaving};
use straightknot::{Diagram, StraightCode, Table};

#[derive(Parser)]
#[command(name = "straightknot", version, about = "Straight diagrams of knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Name the knot of a PD diagram by its invariants.
    Identify {
        #[arg(long)]
        pd: PathBuf,
        #[command(flatten)]
        table: TableArg,
    },
    /// Smallest straight diagram of a knot.
    StraightNumber(StraightArgs),
    /// List straight codes (or shadows) with a given number of crossings.
    Enumerate {
        #[arg(long)]
        crossings: usize,
        /// Print shadows (no over/under data) instead of codes.
        #[arg(long)]
        shadows_only: bool,
        /// Print only the number of items.
        #[arg(long)]
        count: bool,
        /// Apply the search prunes (kinks, removable bigons, nugatory
        /// crossings).
        #[arg(long)]
        prune: bool,
    },
    /// Build a spiral or weaving knot.
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Arc-length bounds.
    #[command(subcommand)]
    Bound(BoundCommand),
    /// Twist-region surgery.
    #[command(subcommand)]
    Twist(TwistCommand),
    /// Build the template knot K_t.
    Template {
        #[arg(long, value_parser = parse_template)]
        t: TemplateSpec,
        #[arg(long, value_enum, default_value_t = TemplateEmit::Pd)]
        emit: TemplateEmit,
    },
    /// Check the family results end to end.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// 4-cuts and flype candidates of a PD diagram, as JSON.
    Flypes {
        #[arg(long)]
        pd: PathBuf,
    },
}

#[derive(Args)]
struct TableArg {
    /// JSON-lines knot table; the bundled table when omitted.
    #[arg(long)]
    table: Option<PathBuf>,
}

impl TableArg {
    /// A loaded table lives for the rest of the process, like the bundled one.
    fn load(&self) -> Result<&'static Table> {
        match &self.table {
            Some(p) => {
                let t = Table::load(p).with_context(|| format!("loading table {}", p.display()))?;
                Ok(Box::leak(Box::new(t)))
            }
            None => Ok(Table::bundled()),
        }
    }
}

#[derive(Args)]
struct StraightArgs {
    /// Table name such as 8_18.
    #[arg(long, conflicts_with = "pd", required_unless_present = "pd")]
    knot: Option<String>,
    /// File holding a PD diagram.
    #[arg(long)]
    pd: Option<PathBuf>,
    #[command(flatten)]
    table: TableArg,
    #[arg(long)]
    max_crossings: usize,
    /// Worker threads; also read from STRAIGHTKNOT_THREADS.
    #[arg(long)]
    threads: Option<usize>,
    /// Write the witness drawing here.
    #[arg(long)]
    witness: Option<PathBuf>,
    /// Search every code, without the reductions.
    #[arg(long)]
    no_prune: bool,
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// W(n, m).
    Weaving {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Emit::Pd)]
        emit: Emit,
    },
    /// S(n, m, ε).
    Spiral {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Comma-separated exponents, each ±1.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        eps: Vec<i32>,
        #[arg(long, value_enum, default_value_t = Emit::Pd)]
        emit: Emit,
    },
}

#[derive(Subcommand)]
enum BoundCommand {
    /// Longest simple arc of W(n, m), by formula.
    Weaving {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Also measure it on the diagram.
        #[arg(long)]
        brute: bool,
    },
}

#[derive(Subcommand)]
enum TwistCommand {
    /// Add full twists to one twist region.
    Insert {
        #[arg(long)]
        pd: PathBuf,
        /// Region index, in the order `twist_regions` lists them.
        #[arg(long)]
        region: usize,
        #[arg(long)]
        full_twists: usize,
        /// Twist axis for a single-crossing region.
        #[arg(long, value_enum)]
        axis: Option<AxisArg>,
        #[arg(long, value_enum, default_value_t = Emit::Pd)]
        emit: Emit,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Certify str(K_t) = s + 2.
    Template {
        #[arg(long, value_parser = parse_template)]
        t: TemplateSpec,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Check that no minimal diagram of W(n, m) is straight.
    Weaving {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Twist each region of a knot once and search the levels just above
    /// the new crossing number. Reports only.
    Conjecture {
        #[arg(long)]
        knot: String,
        #[arg(long, default_value_t = 1)]
        gap: usize,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Pd,
    Gauss,
}

#[derive(Clone, Copy, ValueEnum)]
enum TemplateEmit {
    Pd,
    Straight,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum AxisArg {
    A,
    B,
}

fn parse_template(s: &str) -> Result<TemplateSpec, String> {
    s.parse()
        .map_err(|e: straightknot::families::FamilyError| e.to_string())
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Done,
    NotFound,
}

fn read_pd(path: &Path) -> Result<Diagram> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or_else(|| anyhow!("{} holds no diagram", path.display()))?;
    Ok(Diagram::parse_pd(line)?)
}

fn emit(out: &mut impl Write, d: &Diagram, how: Emit) -> Result<()> {
    match how {
        Emit::Pd => writeln!(out, "{}", d.pd_string())?,
        Emit::Gauss => writeln!(out, "{}", d.to_gauss())?,
    }
    Ok(())
}

fn shadow_text(s: &ShadowCode) -> String {
    let v: Vec<String> = s.visits().iter().map(|v| v.to_string()).collect();
    let w: String = s.side_word().iter().map(|x| format!("{x:?}")).collect();
    format!("{}; {}; {}", s.n(), v.join(" "), w)
}

fn print_json(out: &mut impl Write, v: &impl serde::Serialize) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v)?)?;
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Result<Outcome> {
    match cli.command {
        Command::Identify { pd, table } => {
            let table = table.load()?;
            let d = read_pd(&pd)?;
            let fp = fingerprint(&d);
            let id = table.identify_fingerprint(&fp);
            print_json(
                out,
                &json!({
                    "name": id.as_ref().map(|i| &i.name),
                    "collision": id.as_ref().is_some_and(|i| i.collision),
                    "candidates": id.as_ref().map(|i| i.candidates.clone()).unwrap_or_default(),
                    "crossings": d.crossing_count(),
                    "fingerprint": fp,
                }),
            )?;
            Ok(if id.is_some() {
                Outcome::Done
            } else {
                Outcome::NotFound
            })
        }
        Command::StraightNumber(a) => {
            let table = a.table.load()?;
            let target = match (&a.knot, &a.pd) {
                (Some(name), _) => Target::from_name(table, name)?,
                (None, Some(p)) => Target::from_diagram(table, &read_pd(p)?),
                (None, None) => bail!("give --knot or --pd"),
            };
            let mut opts = SolveOptions::up_to(a.max_crossings);
            opts.threads = a.threads;
            if a.no_prune {
                opts.prune = PruneFlags::NONE;
            }
            let r = straight_number(&target, &opts)?;
            print_json(out, &r)?;
            if let (Some(path), Some(w)) = (&a.witness, &r.witness) {
                fs::write(path, render_svg(w))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(match r.status {
                Status::LowerBoundOnly => Outcome::NotFound,
                Status::Found | Status::Ambiguous => Outcome::Done,
            })
        }
        Command::Enumerate {
            crossings,
            shadows_only,
            count,
            prune,
        } => {
            if !(1..=31).contains(&crossings) {
                bail!("--crossings must be between 1 and 31");
            }
            let flags = if prune {
                PruneFlags::ALL
            } else {
                PruneFlags::NONE
            };
            let shadows = enumerate_shadows_pruned(crossings, flags);
            if shadows_only {
                if count {
                    writeln!(out, "{}", shadows.len())?;
                } else {
                    for s in &shadows {
                        writeln!(out, "{}", shadow_text(s))?;
                    }
                }
            } else {
                let mut total = 0u64;
                for s in &shadows {
                    let mut written = Ok(());
                    for_each_straight(s, flags, |c: StraightCode| {
                        total += 1;
                        if !count && written.is_ok() {
                            written = writeln!(out, "{c}");
                        }
                    });
                    written?;
                }
                if count {
                    writeln!(out, "{total}")?;
                }
            }
            Ok(Outcome::Done)
        }
        Command::Family(FamilyCommand::Weaving { n, m, emit: how }) => {
            emit(out, &weaving(n, m)?, how)?;
            Ok(Outcome::Done)
        }
        Command::Family(FamilyCommand::Spiral {
            n,
            m,
            eps,
            emit: how,
        }) => {
            emit(out, &spiral(&SpiralSpec { n, m, eps })?, how)?;
            Ok(Outcome::Done)
        }
        Command::Bound(BoundCommand::Weaving { n, m, brute }) => {
            let closed = weaving_bound(n, m)?;
            let mut report = json!({
                "n": n,
                "m": m,
                "crossings": m * (n - 1),
                "closed_form": closed,
                "traversal_count": weaving_traversal(n, m)?,
            });
            if brute {
                report["max_simple_arc"] = json!(weaving(n, m)?.max_simple_arc());
            }
            print_json(out, &report)?;
            Ok(Outcome::Done)
        }
        Command::Twist(TwistCommand::Insert {
            pd,
            region,
            full_twists,
            axis,
            emit: how,
        }) => {
            let d = read_pd(&pd)?;
            let regions = twist_regions(&d);
            let r = regions.get(region).cloned().ok_or_else(|| {
                anyhow!(
                    "region {region} out of range: the diagram has {}",
                    regions.len()
                )
            })?;
            let r = match axis {
                Some(AxisArg::A) => r.with_axis(TwistAxis::A),
                Some(AxisArg::B) => r.with_axis(TwistAxis::B),
                None => r,
            };
            emit(out, &insert_full_twists(&d, &r, full_twists)?, how)?;
            Ok(Outcome::Done)
        }
        Command::Template { t, emit: how } => {
            match how {
                TemplateEmit::Pd => writeln!(out, "{}", template_knot(&t).pd_string())?,
                TemplateEmit::Straight => writeln!(out, "{}", template_straight_witness(&t))?,
                TemplateEmit::Svg => write!(out, "{}", render_svg(&template_straight_witness(&t)))?,
            }
            Ok(Outcome::Done)
        }
        Command::Verify(VerifyCommand::Template { t, threads }) => {
            let mut opts = SolveOptions::up_to(0);
            opts.threads = threads;
            let r = verify_template(&t, &opts)?;
            print_json(out, &r)?;
            Ok(if r.straight_number.is_some() {
                Outcome::Done
            } else {
                Outcome::NotFound
            })
        }
        Command::Verify(VerifyCommand::Weaving { n, m }) => {
            use straightknot::verify::VerifyError;
            match verify_weaving(n, m) {
                Ok(r) => {
                    print_json(out, &r)?;
                    Ok(Outcome::Done)
                }
                Err(e @ VerifyError::Mismatch(_)) => {
                    eprintln!("error: {e}");
                    Ok(Outcome::NotFound)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Verify(VerifyCommand::Conjecture { knot, gap, threads }) => {
            if gap == 0 {
                bail!("--gap must be at least 1");
            }
            let rec = Table::bundled()
                .get(&knot)
                .ok_or_else(|| anyhow!("unknown knot {knot}"))?;
            let mut opts = SolveOptions::up_to(0);
            opts.threads = threads;
            print_json(out, &conjecture_experiment(&rec.diagram, gap, &opts)?)?;
            Ok(Outcome::Done)
        }
        Command::Flypes { pd } => {
            print_json(out, &flype_report(&read_pd(&pd)?)?)?;
            Ok(Outcome::Done)
        }
    }
}

/// A reader that stopped early (`| head`) is not an error.
fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<io::Error>()
        .is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(cli, &mut out).and_then(|o| Ok(out.flush().map(|_| o)?)) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::NotFound) => ExitCode::from(1),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
