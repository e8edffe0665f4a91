use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use dr_game::report;
use dr_game::scenarios::{run_scenario, RunConfig, ScenarioKind, ScenarioSpec};
use dr_game::{bundled_catalog, load_catalog, AppConfig, PopulationConfig, TimeGrid};

#[derive(Parser)]
#[command(name = "dr-game", about = "Demand-response scheduling game simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one scenario (or all three) and write CSV results.
    Run(RunArgs),
    /// Summarize a finished run directory against the reference scenario.
    Compare(CompareArgs),
    /// Check a task catalog file.
    Validate(ValidateArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ScenarioArg {
    Ref,
    Cost,
    CostDiscomfort,
    All,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, value_enum, default_value = "all")]
    scenario: ScenarioArg,
    #[arg(long, default_value_t = 30)]
    players: usize,
    #[arg(long = "tasks-min", default_value_t = 8)]
    tasks_min: usize,
    #[arg(long = "prosumer-frac", default_value_t = 0.3)]
    prosumer_frac: f64,
    /// Task catalog CSV; the bundled catalog is used when omitted.
    #[arg(long)]
    catalog: Option<PathBuf>,
    /// TOML config overlay; built-in defaults when omitted.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Exit with status 3 when an optimized scenario fails to converge.
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct CompareArgs {
    /// Run directory containing summary.csv.
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Args)]
struct ValidateArgs {
    #[arg(long)]
    catalog: PathBuf,
}

const EXIT_VALIDATION: u8 = 2;
const EXIT_NON_CONVERGENCE: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => run(&args),
        Command::Compare(args) => compare(&args),
        Command::Validate(args) => validate(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_VALIDATION)
        }
    }
}

fn load_inputs(
    catalog: Option<&Path>,
    config: Option<&Path>,
    grid: &TimeGrid,
) -> anyhow::Result<(Vec<dr_game::CatalogEntry>, AppConfig)> {
    let entries = match catalog {
        Some(path) => load_catalog(path, grid).with_context(|| format!("catalog {}", path.display()))?,
        None => bundled_catalog(grid),
    };
    let app = match config {
        Some(path) => AppConfig::from_file(path, grid).with_context(|| format!("config {}", path.display()))?,
        None => AppConfig::defaults(grid),
    };
    Ok((entries, app))
}

fn run(args: &RunArgs) -> anyhow::Result<ExitCode> {
    let grid = TimeGrid::default();
    let (catalog, app) = load_inputs(args.catalog.as_deref(), args.config.as_deref(), &grid)?;
    let run_cfg = RunConfig {
        grid,
        coeffs: app.coeffs.clone(),
        game: app.game.clone(),
        population: PopulationConfig {
            n_players: args.players,
            prosumer_fraction: args.prosumer_frac,
            tasks_per_player_min: args.tasks_min,
            discomfort: app.discomfort,
            solar_peak_kw: app.solar_peak_kw,
            revenue_rate: app.revenue_rate,
        },
        catalog,
    };
    let specs: Vec<ScenarioSpec> = match args.scenario {
        ScenarioArg::Ref => vec![ScenarioSpec::reference()],
        ScenarioArg::Cost => vec![ScenarioSpec::cost()],
        ScenarioArg::CostDiscomfort => vec![ScenarioSpec::cost_discomfort()],
        ScenarioArg::All => ScenarioSpec::all(),
    };
    std::fs::create_dir_all(&args.out)
        .with_context(|| format!("creating {}", args.out.display()))?;

    let mut results = Vec::with_capacity(specs.len());
    for spec in &specs {
        eprintln!("running {} (seed {})...", spec.kind.display_name(), args.seed);
        let result = run_scenario(spec, &run_cfg, args.seed)?;
        if !result.converged {
            eprintln!(
                "warning: {} did not converge within {} rounds",
                spec.kind.display_name(),
                run_cfg.game.max_rounds
            );
        }
        results.push(result);
    }

    let single = results.len() == 1;
    for result in &results {
        let slug = result.kind.slug();
        report::write_load(
            &args.out.join(format!("load_{slug}.csv")),
            &run_cfg.grid,
            &result.load_kwh,
        )?;
        let price_name = if single {
            "price_signal.csv".to_string()
        } else {
            format!("price_signal_{slug}.csv")
        };
        report::write_price(&args.out.join(price_name), &run_cfg.grid, &result.price)?;
        let balance_name = if single {
            "balance.csv".to_string()
        } else {
            format!("balance_{slug}.csv")
        };
        report::write_balance(&args.out.join(balance_name), &result.balance)?;
    }
    report::write_summary(&args.out.join("summary.csv"), &report::summary_rows(&results))?;
    report::write_equilibrium_report(&args.out.join("equilibrium_report.csv"), &results)?;

    for row in report::summary_rows(&results) {
        println!(
            "{:<20} cost {:>12.4}  discomfort {:>10.2}{}",
            row.scenario.display_name(),
            row.total_cost,
            row.total_discomfort,
            row.pct_cost_vs_ref
                .map(|p| format!("  cost vs ref {p:+.1}%"))
                .unwrap_or_default(),
        );
    }

    if args.strict && results.iter().any(|r| !r.converged) {
        return Ok(ExitCode::from(EXIT_NON_CONVERGENCE));
    }
    Ok(ExitCode::SUCCESS)
}

fn compare(args: &CompareArgs) -> anyhow::Result<ExitCode> {
    let path = args.input.join("summary.csv");
    let mut reader = csv::Reader::from_path(&path)
        .with_context(|| format!("reading {}", path.display()))?;
    let headers = reader.headers()?.clone();
    let idx = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .with_context(|| format!("summary.csv missing column {name}"))
    };
    let (i_scenario, i_cost, i_disc) = (idx("scenario")?, idx("total_cost")?, idx("total_discomfort")?);
    let mut rows: Vec<(String, f64, f64)> = Vec::new();
    for record in reader.records() {
        let record = record?;
        rows.push((
            record[i_scenario].to_string(),
            record[i_cost].parse()?,
            record[i_disc].parse()?,
        ));
    }
    let reference = rows
        .iter()
        .find(|(s, _, _)| s == ScenarioKind::Reference.slug())
        .context("summary.csv has no reference scenario row")?
        .clone();
    let cost_sce = rows
        .iter()
        .find(|(s, _, _)| s == ScenarioKind::Cost.slug())
        .cloned();
    println!(
        "{:<20} {:>12} {:>14} {:>14} {:>16}",
        "scenario", "cost", "cost vs ref", "discomfort", "disc % of cost-sce"
    );
    for (name, cost, discomfort) in &rows {
        let pct = 100.0 * (cost - reference.1) / reference.1;
        let disc_norm = cost_sce
            .as_ref()
            .filter(|(_, _, d)| *d != 0.0)
            .map(|(_, _, d)| format!("{:>15.1}%", 100.0 * discomfort / d))
            .unwrap_or_else(|| format!("{:>16}", "-"));
        println!("{name:<20} {cost:>12.4} {pct:>13.1}% {discomfort:>14.2} {disc_norm}");
    }
    Ok(ExitCode::SUCCESS)
}

fn validate(args: &ValidateArgs) -> anyhow::Result<ExitCode> {
    let grid = TimeGrid::default();
    match load_catalog(&args.catalog, &grid) {
        Ok(entries) => {
            println!("{}: {} valid tasks", args.catalog.display(), entries.len());
            Ok(ExitCode::SUCCESS)
        }
        Err(err) => {
            eprintln!("{}: {err}", args.catalog.display());
            Ok(ExitCode::from(EXIT_VALIDATION))
        }
    }
}
