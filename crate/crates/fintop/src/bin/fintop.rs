//! Command-line front-end over the library: parse inputs, dispatch to one
//! operation, and print a report in the chosen style. Exit codes: 0 on
//! success, 1 for input errors, 2 when a definitionally forced claim saw a
//! violation, 3 when requested bounds exceed the work budget.

use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};

use fintop::claims::{self, Bounds, CostEstimate, MineScope, MineTarget, SuiteError};
use fintop::enumeration::{self, MapBudgetError};
use fintop::maps::{parse_map, SpaceMap};
use fintop::operators::SetClass;
use fintop::report::{self, Format};
use fintop::separation::{Def21Reading, SeparationProfile};
use fintop::space::{parse_space, FiniteSpace, SubsetMask};

#[derive(Parser)]
#[command(
    name = "fintop",
    version,
    about = "Workbench for finite topological spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output style for reports.
    #[arg(long, global = true, default_value = "text", value_parser = Format::from_str)]
    format: Format,

    /// Worker threads for exhaustive sweeps; defaults to all cores.
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Read the separating-sets definition leniently: the two covering sets
    /// may meet as long as each contains its closed set.
    #[arg(long, global = true)]
    lenient_def21: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a space or map file is well formed.
    Validate {
        /// Space file to validate.
        #[arg(long)]
        space: Option<PathBuf>,
        /// Map file to validate.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Classify one subset by the sixteen class flags, or list every member
    /// of one class.
    Classify {
        /// Space file.
        #[arg(long)]
        space: PathBuf,
        /// Subset as comma-separated labels; empty for the empty set, `*`
        /// for the whole space.
        #[arg(long)]
        subset: Option<String>,
        /// Class selector, e.g. `scstar-closed`.
        #[arg(long)]
        class: Option<String>,
    },
    /// Print the eight derived sets of a subset: interior, closure, and the
    /// semi, c*, and SC* closure/interior pairs.
    Closure {
        /// Space file.
        #[arg(long)]
        space: PathBuf,
        /// Subset as comma-separated labels.
        #[arg(long)]
        subset: String,
    },
    /// Print the separation profile of a space.
    Profile {
        /// Space file.
        #[arg(long)]
        space: PathBuf,
    },
    /// Classify a map by the twenty-one flags and audit the quantifier
    /// characterizations against them.
    MapAudit {
        /// Map file.
        #[arg(long)]
        map: PathBuf,
    },
    /// Count labeled topologies per point count, with homeomorphism classes
    /// where the permutation reduction is in budget.
    Enumerate {
        /// Largest point count to enumerate.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Allow the seven-point walk (millions of spaces).
        #[arg(long)]
        include_seven: bool,
    },
    /// Run a claim suite exhaustively at the given bounds.
    Verify {
        /// Suite name (`all`, `forced`, `stated`, `t24`, `t51`) or
        /// comma-separated claim ids.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest point count for the subset and space claims.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Point count of every space in the map and composition claims.
        #[arg(long, default_value_t = 3)]
        max_map_size: usize,
    },
    /// Search for instances realizing a target, such as a set in one class
    /// but not a stronger one.
    Mine {
        /// Target name, e.g. `scstar-closed-not-closed`.
        #[arg(long)]
        target: String,
        /// Search inside this one space instead of an enumeration.
        #[arg(long)]
        space: Option<PathBuf>,
        /// Largest point count when enumerating spaces.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Point count of domain and codomain when the target ranges over
        /// maps.
        #[arg(long, default_value_t = 3)]
        max_map_size: usize,
        /// Keep at most this many findings.
        #[arg(long)]
        limit: Option<usize>,
    },
}

fn load_space(path: &Path) -> Result<FiniteSpace> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read space file {}", path.display()))?;
    parse_space(&text).with_context(|| format!("in space file {}", path.display()))
}

fn load_map(path: &Path) -> Result<SpaceMap> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read map file {}", path.display()))?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    parse_map(&text, base).with_context(|| format!("in map file {}", path.display()))
}

fn parse_subset_arg(sp: &FiniteSpace, text: &str, path: &Path) -> Result<SubsetMask> {
    sp.ground()
        .parse_subset(text)
        .with_context(|| format!("subset `{text}` against space file {}", path.display()))
}

fn parse_class(selector: &str) -> Result<SetClass> {
    SetClass::ALL
        .into_iter()
        .find(|c| c.name() == selector)
        .ok_or_else(|| {
            let names: Vec<&str> = SetClass::ALL.iter().map(|c| c.name()).collect();
            anyhow!(
                "unknown class `{selector}`; expected one of {}",
                names.join(", ")
            )
        })
}

fn structured<T: serde::Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

fn run_validate(space: Option<PathBuf>, map: Option<PathBuf>, format: Format) -> Result<String> {
    let mut out = String::new();
    if space.is_none() && map.is_none() {
        bail!("validate needs --space or --map");
    }
    if let Some(path) = space {
        let sp = load_space(&path)?;
        match format {
            Format::Text => out.push_str(&format!(
                "{}: valid topology on {} points with {} open sets\n",
                path.display(),
                sp.size(),
                sp.opens().len()
            )),
            Format::Structured => {
                out.push_str(&structured(&sp.to_doc())?);
                out.push('\n');
            }
            Format::Tabular => out.push_str(&format!(
                "file\tpoints\topen_sets\n{}\t{}\t{}\n",
                path.display(),
                sp.size(),
                sp.opens().len()
            )),
        }
    }
    if let Some(path) = map {
        let f = load_map(&path)?;
        match format {
            Format::Text => out.push_str(&format!(
                "{}: valid map from {} points to {} points\n",
                path.display(),
                f.domain().size(),
                f.codomain().size()
            )),
            Format::Structured => {
                out.push_str(&structured(&f.to_doc())?);
                out.push('\n');
            }
            Format::Tabular => out.push_str(&format!(
                "file\tdomain_points\tcodomain_points\n{}\t{}\t{}\n",
                path.display(),
                f.domain().size(),
                f.codomain().size()
            )),
        }
    }
    Ok(out)
}

fn run_classify(
    space: PathBuf,
    subset: Option<String>,
    class: Option<String>,
    format: Format,
) -> Result<String> {
    let sp = load_space(&space)?;
    match (subset, class) {
        (Some(subset), None) => {
            let m = parse_subset_arg(&sp, &subset, &space)?;
            let rep = report::SubsetReport::compute(&sp, m);
            Ok(match format {
                Format::Text => rep.text(),
                Format::Structured => format!("{}\n", structured(&rep)?),
                Format::Tabular => rep.tabular(),
            })
        }
        (None, Some(class)) => {
            let c = parse_class(&class)?;
            let rep = report::FamilyReport::compute(&sp, c);
            Ok(match format {
                Format::Text => rep.text(),
                Format::Structured => format!("{}\n", structured(&rep)?),
                Format::Tabular => rep.tabular(),
            })
        }
        _ => bail!("classify needs exactly one of --subset or --class"),
    }
}

fn run_closure(space: PathBuf, subset: String, format: Format) -> Result<String> {
    let sp = load_space(&space)?;
    let m = parse_subset_arg(&sp, &subset, &space)?;
    let rep = report::ClosureReport::compute(&sp, m);
    Ok(match format {
        Format::Text => rep.text(),
        Format::Structured => format!("{}\n", structured(&rep)?),
        Format::Tabular => rep.tabular(),
    })
}

fn run_profile(space: PathBuf, reading: Def21Reading, format: Format) -> Result<String> {
    let sp = load_space(&space)?;
    let profile = SeparationProfile::compute(&sp, reading);
    Ok(match format {
        Format::Text => report::profile_text(&profile),
        Format::Structured => format!("{}\n", structured(&profile)?),
        Format::Tabular => report::profile_tabular(&profile),
    })
}

fn run_map_audit(map: PathBuf, format: Format) -> Result<String> {
    let f = load_map(&map)?;
    let rep = report::MapAuditReport::compute(&f);
    Ok(match format {
        Format::Text => rep.text(),
        Format::Structured => format!("{}\n", structured(&rep)?),
        Format::Tabular => rep.tabular(),
    })
}

fn run_enumerate(max_n: usize, include_seven: bool, format: Format) -> Result<String> {
    let cap = if include_seven { 7 } else { 6 };
    if max_n > cap {
        return Err(anyhow!(SuiteError::Budget {
            requested: max_n as u64,
            budget: cap as u64,
            unit: "points per space",
        })
        .context(if include_seven {
            "enumeration stops at seven points"
        } else {
            "pass --include-seven to walk the seven-point spaces"
        }));
    }
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let labeled = enumeration::count_spaces(n);
        let homeo_classes = (n <= 5).then(|| enumeration::enumerate_up_to_homeo(n).len() as u64);
        rows.push(report::EnumerateRow {
            points: n,
            labeled,
            homeo_classes,
        });
    }
    let rep = report::EnumerateReport { rows };
    Ok(match format {
        Format::Text => rep.text(),
        Format::Structured => format!("{}\n", structured(&rep)?),
        Format::Tabular => rep.tabular(),
    })
}

/// Runs a suite and reports, returning the exit code alongside the output.
fn run_verify(
    suite: String,
    max_n: usize,
    max_map_size: usize,
    reading: Def21Reading,
    format: Format,
) -> Result<(String, i32)> {
    let claims = claims::suite_claims(&suite)?;
    let bounds = Bounds {
        max_space_points: max_n,
        map_points: (max_map_size, max_map_size),
        pair_points: (max_map_size, max_map_size, max_map_size),
        reading,
    };
    let defaults = Bounds::default();
    if bounds.max_space_points > defaults.max_space_points
        || bounds.map_points > defaults.map_points
    {
        eprintln!(
            "note: raised bounds cost about {}",
            CostEstimate::for_claims(&claims, &bounds)
        );
    }
    let started = Instant::now();
    let report = claims::run_suite(&claims, &bounds)?;
    eprintln!(
        "suite `{suite}` finished in {:.1?} ({} claims)",
        started.elapsed(),
        report.verdicts.len()
    );
    let text = match format {
        Format::Text => report::suite_text(&report),
        Format::Structured => format!("{}\n", structured(&report)?),
        Format::Tabular => report::suite_tabular(&report),
    };
    let code = if report.forced_violation() { 2 } else { 0 };
    Ok((text, code))
}

fn run_mine(
    target: String,
    space: Option<PathBuf>,
    max_n: usize,
    max_map_size: usize,
    limit: Option<usize>,
    reading: Def21Reading,
    format: Format,
) -> Result<String> {
    let target: MineTarget = target.parse()?;
    let scope = match (space, target) {
        (Some(path), _) => MineScope::Space(Arc::new(load_space(&path)?)),
        (None, MineTarget::ScstarGscstarContinuousNotScstarIrresolute) => MineScope::Maps {
            domain_points: max_map_size,
            codomain_points: max_map_size,
        },
        (None, _) => MineScope::Spaces { max_points: max_n },
    };
    let report = claims::mine(target, &scope, reading, limit)?;
    Ok(match format {
        Format::Text => report::mine_text(&report),
        Format::Structured => format!("{}\n", structured(&report)?),
        Format::Tabular => report::mine_tabular(&report),
    })
}

fn dispatch(cli: Cli) -> Result<i32> {
    let format = cli.format;
    let reading = if cli.lenient_def21 {
        Def21Reading::Lenient
    } else {
        Def21Reading::Disjoint
    };
    let (output, code) = match cli.command {
        Command::Validate { space, map } => (run_validate(space, map, format)?, 0),
        Command::Classify {
            space,
            subset,
            class,
        } => (run_classify(space, subset, class, format)?, 0),
        Command::Closure { space, subset } => (run_closure(space, subset, format)?, 0),
        Command::Profile { space } => (run_profile(space, reading, format)?, 0),
        Command::MapAudit { map } => (run_map_audit(map, format)?, 0),
        Command::Enumerate {
            max_n,
            include_seven,
        } => (run_enumerate(max_n, include_seven, format)?, 0),
        Command::Verify {
            suite,
            max_n,
            max_map_size,
        } => run_verify(suite, max_n, max_map_size, reading, format)?,
        Command::Mine {
            target,
            space,
            max_n,
            max_map_size,
            limit,
        } => (
            run_mine(target, space, max_n, max_map_size, limit, reading, format)?,
            0,
        ),
    };
    print!("{output}");
    Ok(code)
}

fn exit_code_for(err: &anyhow::Error) -> i32 {
    if let Some(suite_err) = err.downcast_ref::<SuiteError>() {
        return match suite_err {
            SuiteError::Budget { .. } => 3,
            SuiteError::UnknownClaim(_) => 1,
        };
    }
    if let Some(mine_err) = err.downcast_ref::<claims::MineError>() {
        return match mine_err {
            claims::MineError::Budget { .. } => 3,
            _ => 1,
        };
    }
    if err.downcast_ref::<MapBudgetError>().is_some() {
        return 3;
    }
    1
}

fn main() {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        if let Err(err) = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
        {
            eprintln!("warning: worker pool already initialized: {err}");
        }
    }
    match dispatch(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(exit_code_for(&err));
        }
    }
}
