//! The three benchmark experiments and their comparison metrics.
//!
//! - `Ref-sce`: every task runs at its preferred start; no optimization.
//! - `Cost-sce`: best-response game with weights (1, 0) — cost only.
//! - `Cost-discomfort-sce`: best-response game with weights (0.5, 0.5).

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::catalog::CatalogEntry;
use crate::comfort::DiscomfortCoefficients;
use crate::game::{run_to_equilibrium, GameConfig, GameError, GameState, SlotBalance};
use crate::objectives::{ObjectiveVector, Player};
use crate::pricing::{CostCoefficients, GenerationProfile};
use crate::domain::TimeGrid;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("catalog is empty")]
    EmptyCatalog,
    #[error("population must have at least one player")]
    NoPlayers,
    #[error("task {id}: preferred window cannot hold the task in the reference scenario")]
    PreferredWindowInfeasible { id: String },
    #[error("comparison requires the reference scenario")]
    MissingReference,
    #[error(transparent)]
    Game(#[from] GameError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScenarioKind {
    Reference,
    Cost,
    CostDiscomfort,
}

impl ScenarioKind {
    pub fn slug(&self) -> &'static str {
        match self {
            ScenarioKind::Reference => "ref",
            ScenarioKind::Cost => "cost",
            ScenarioKind::CostDiscomfort => "cost-discomfort",
        }
    }

    pub fn display_name(&self) -> &'static str {
        match self {
            ScenarioKind::Reference => "Ref-sce",
            ScenarioKind::Cost => "Cost-sce",
            ScenarioKind::CostDiscomfort => "Cost-discomfort-sce",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioSpec {
    pub kind: ScenarioKind,
    pub weights: (f64, f64),
    pub optimize: bool,
}

impl ScenarioSpec {
    pub fn reference() -> Self {
        ScenarioSpec {
            kind: ScenarioKind::Reference,
            weights: (0.0, 1.0),
            optimize: false,
        }
    }

    pub fn cost() -> Self {
        ScenarioSpec {
            kind: ScenarioKind::Cost,
            weights: (1.0, 0.0),
            optimize: true,
        }
    }

    pub fn cost_discomfort() -> Self {
        ScenarioSpec {
            kind: ScenarioKind::CostDiscomfort,
            weights: (0.5, 0.5),
            optimize: true,
        }
    }

    pub fn all() -> Vec<Self> {
        vec![Self::reference(), Self::cost(), Self::cost_discomfort()]
    }
}

/// How players are sampled from the catalog.
#[derive(Debug, Clone, PartialEq)]
pub struct PopulationConfig {
    pub n_players: usize,
    pub prosumer_fraction: f64,
    pub tasks_per_player_min: usize,
    pub discomfort: DiscomfortCoefficients,
    pub solar_peak_kw: f64,
    pub revenue_rate: f64,
}

impl PopulationConfig {
    pub fn defaults(coeffs: &CostCoefficients) -> Self {
        PopulationConfig {
            n_players: 30,
            prosumer_fraction: 0.3,
            tasks_per_player_min: 8,
            discomfort: DiscomfortCoefficients::default(),
            solar_peak_kw: 2.0,
            revenue_rate: coeffs.mean_b(),
        }
    }
}

/// Everything one scenario run needs besides the spec and the seed.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub grid: TimeGrid,
    pub coeffs: CostCoefficients,
    pub game: GameConfig,
    pub population: PopulationConfig,
    pub catalog: Vec<CatalogEntry>,
}

#[derive(Debug, Clone)]
pub struct ScenarioResult {
    pub kind: ScenarioKind,
    pub seed: u64,
    pub per_player: Vec<(String, ObjectiveVector)>,
    pub total_cost: f64,
    pub total_discomfort: f64,
    /// Per-slot aggregate consumption at the final strategy profile.
    pub load_kwh: Vec<f64>,
    /// Per-slot price induced by the final profile.
    pub price: Vec<f64>,
    pub balance: Vec<SlotBalance>,
    pub rounds_used: usize,
    pub converged: bool,
    pub max_deviation_gain: f64,
}

/// Seeded sampling of players from the catalog. Each player gets
/// `tasks_per_player_min` distinct catalog tasks with freshly drawn
/// preferred windows; the leading `prosumer_fraction` of players get a
/// solar generation profile with seeded scaling in [0.8, 1.2].
pub fn generate_population(
    catalog: &[CatalogEntry],
    cfg: &PopulationConfig,
    grid: &TimeGrid,
    seed: u64,
) -> Result<Vec<Player>, ScenarioError> {
    if catalog.is_empty() {
        return Err(ScenarioError::EmptyCatalog);
    }
    if cfg.n_players == 0 {
        return Err(ScenarioError::NoPlayers);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prosumers = (cfg.prosumer_fraction * cfg.n_players as f64).round() as usize;
    let base_solar = GenerationProfile::solar(grid, 7.0, 19.0, cfg.solar_peak_kw, cfg.revenue_rate);
    let per_player = cfg.tasks_per_player_min.min(catalog.len());
    let mut players = Vec::with_capacity(cfg.n_players);
    for i in 0..cfg.n_players {
        let picks = sample(&mut rng, catalog.len(), per_player);
        let mut tasks = Vec::with_capacity(per_player);
        let mut indices: Vec<usize> = picks.into_iter().collect();
        indices.sort_unstable();
        for idx in indices {
            tasks.push(catalog[idx].instantiate(grid, &mut rng));
        }
        let id = format!("player_{i:02}");
        if i < prosumers {
            let scale = rng.gen_range(0.8..=1.2);
            players.push(Player::prosumer(
                id,
                tasks,
                base_solar.scaled(scale),
                cfg.discomfort,
            ));
        } else {
            players.push(Player::consumer(id, tasks, grid, cfg.discomfort));
        }
    }
    Ok(players)
}

/// Runs one scenario end to end for one seed.
pub fn run_scenario(
    spec: &ScenarioSpec,
    cfg: &RunConfig,
    seed: u64,
) -> Result<ScenarioResult, ScenarioError> {
    let players = generate_population(&cfg.catalog, &cfg.population, &cfg.grid, seed)?;
    if !spec.optimize {
        for player in &players {
            for task in &player.tasks {
                if task.preferred_slots(&cfg.grid) < task.duration_slots {
                    return Err(ScenarioError::PreferredWindowInfeasible {
                        id: task.id.clone(),
                    });
                }
            }
        }
    }
    let mut state = GameState::new(players, cfg.coeffs.clone(), cfg.grid)?;
    let (rounds_used, converged, max_deviation_gain) = if spec.optimize {
        let mut game_cfg = cfg.game.clone();
        game_cfg.solver.selection_weights = spec.weights;
        game_cfg.solver.rng_seed = seed ^ (spec.kind.slug().len() as u64) << 32;
        let report = run_to_equilibrium(&mut state, &game_cfg)?;
        (report.rounds_used, report.converged, report.max_deviation_gain)
    } else {
        (0, true, 0.0)
    };
    let per_player: Vec<(String, ObjectiveVector)> = state
        .players
        .iter()
        .zip(&state.strategies)
        .map(|(p, s)| (p.id.clone(), *s.objectives.as_ref().unwrap()))
        .collect();
    let total_cost = per_player.iter().map(|(_, o)| o.cost).sum();
    let total_discomfort = per_player.iter().map(|(_, o)| o.discomfort).sum();
    let load = state.total_load()?;
    Ok(ScenarioResult {
        kind: spec.kind,
        seed,
        total_cost,
        total_discomfort,
        load_kwh: load.energy_kwh().to_vec(),
        price: state.price.price().to_vec(),
        balance: crate::game::energy_balance(&state),
        per_player,
        rounds_used,
        converged,
        max_deviation_gain,
    })
}

/// One row of the scenario comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub kind: ScenarioKind,
    pub total_cost: f64,
    pub total_discomfort: f64,
    /// Cost change vs the reference scenario, in percent (negative = cheaper).
    pub pct_cost_vs_ref: f64,
    /// Discomfort as a percentage of the cost-only scenario's discomfort.
    /// The reference discomfort is zero by construction, so it cannot serve
    /// as the baseline for discomfort ratios.
    pub discomfort_pct_of_cost_sce: Option<f64>,
}

/// Comparison against the reference scenario. Errors when no reference
/// result is present.
pub fn compare(results: &[ScenarioResult]) -> Result<Vec<ComparisonRow>, ScenarioError> {
    let reference = results
        .iter()
        .find(|r| r.kind == ScenarioKind::Reference)
        .ok_or(ScenarioError::MissingReference)?;
    let cost_sce_discomfort = results
        .iter()
        .find(|r| r.kind == ScenarioKind::Cost)
        .map(|r| r.total_discomfort);
    Ok(results
        .iter()
        .map(|r| ComparisonRow {
            kind: r.kind,
            total_cost: r.total_cost,
            total_discomfort: r.total_discomfort,
            pct_cost_vs_ref: if reference.total_cost != 0.0 {
                100.0 * (r.total_cost - reference.total_cost) / reference.total_cost
            } else {
                0.0
            },
            discomfort_pct_of_cost_sce: cost_sce_discomfort.and_then(|base| {
                (base != 0.0).then(|| 100.0 * r.total_discomfort / base)
            }),
        })
        .collect())
}

/// Median of a sample; the mean of the middle pair for even sizes.
pub fn median(values: &[f64]) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = sorted.len();
    if n == 0 {
        return f64::NAN;
    }
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    }
}
