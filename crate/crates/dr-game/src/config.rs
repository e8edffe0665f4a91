//! Run configuration: built-in defaults and an optional TOML overlay.
//!
//! All defaults are overridable from a keyed config file:
//!
//! ```toml
//! [pricing]
//! tou_tiers = [[0.0, 7.0, 0.08], [7.0, 18.0, 0.12], [18.0, 22.0, 0.20], [22.0, 24.0, 0.12]]
//! a_coeff = 0.002
//! c_coeff = 0.0
//! solar_peak_kw = 2.0
//!
//! [comfort]
//! alpha = 1.0
//!
//! [solver]
//! population = 100
//! generations = 200
//!
//! [game]
//! max_rounds = 20
//! epsilon = 1e-6
//! ```

use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use crate::comfort::{ComfortError, DiscomfortCoefficients};
use crate::domain::TimeGrid;
use crate::game::GameConfig;
use crate::nsga2::SolverConfig;
use crate::pricing::{CostCoefficients, PricingError};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("failed to read config: {0}")]
    Io(#[from] std::io::Error),
    #[error("failed to parse config: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("tou tier [{start_h}, {end_h}] is not a valid hour range")]
    BadTier { start_h: f64, end_h: f64 },
    #[error("slot at hour {hour} is not covered by any tou tier")]
    UncoveredSlot { hour: f64 },
    #[error(transparent)]
    Pricing(#[from] PricingError),
    #[error(transparent)]
    Comfort(#[from] ComfortError),
}

/// Three-tier time-of-use base rate: off-peak nights, mid-day shoulder and
/// an evening peak, with a small flat congestion coefficient.
pub fn default_tou_tiers() -> Vec<(f64, f64, f64)> {
    vec![
        (0.0, 7.0, 0.08),
        (7.0, 18.0, 0.12),
        (18.0, 22.0, 0.20),
        (22.0, 24.0, 0.12),
    ]
}

pub const DEFAULT_A_COEFF: f64 = 0.002;
pub const DEFAULT_C_COEFF: f64 = 0.0;
pub const DEFAULT_SOLAR_PEAK_KW: f64 = 2.0;

pub fn cost_coefficients_from_tiers(
    grid: &TimeGrid,
    tiers: &[(f64, f64, f64)],
    a_coeff: f64,
    c_coeff: f64,
) -> Result<CostCoefficients, ConfigError> {
    for &(start_h, end_h, _) in tiers {
        if !(0.0..=24.0).contains(&start_h) || !(0.0..=24.0).contains(&end_h) || end_h <= start_h {
            return Err(ConfigError::BadTier { start_h, end_h });
        }
    }
    let n = grid.slots_per_day();
    let mut b = Vec::with_capacity(n);
    for slot in 0..n {
        let mid_h = (slot as f64 + 0.5) * grid.slot_hours();
        let rate = tiers
            .iter()
            .find(|&&(s, e, _)| mid_h >= s && mid_h < e)
            .map(|&(_, _, r)| r)
            .ok_or(ConfigError::UncoveredSlot { hour: mid_h })?;
        b.push(rate);
    }
    Ok(CostCoefficients::new(vec![a_coeff; n], b, vec![c_coeff; n])?)
}

/// The default price coefficients: three-tier TOU base with flat congestion.
pub fn default_cost_coefficients(grid: &TimeGrid) -> CostCoefficients {
    cost_coefficients_from_tiers(grid, &default_tou_tiers(), DEFAULT_A_COEFF, DEFAULT_C_COEFF)
        .expect("default tiers cover the day")
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    #[serde(default)]
    pricing: RawPricing,
    #[serde(default)]
    comfort: RawComfort,
    #[serde(default)]
    solver: RawSolver,
    #[serde(default)]
    game: RawGame,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPricing {
    tou_tiers: Option<Vec<(f64, f64, f64)>>,
    a_coeff: Option<f64>,
    c_coeff: Option<f64>,
    revenue_rate: Option<f64>,
    solar_peak_kw: Option<f64>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComfort {
    alpha: Option<f64>,
    beta: Option<f64>,
    delta: Option<f64>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSolver {
    population: Option<usize>,
    generations: Option<usize>,
    crossover_rate: Option<f64>,
    mutation_rate: Option<f64>,
    tournament_size: Option<usize>,
    seed: Option<u64>,
    w_cost: Option<f64>,
    w_discomfort: Option<f64>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGame {
    max_rounds: Option<usize>,
    epsilon: Option<f64>,
    verification_samples: Option<usize>,
}

/// Fully resolved configuration for a run.
#[derive(Debug, Clone)]
pub struct AppConfig {
    pub coeffs: CostCoefficients,
    pub discomfort: DiscomfortCoefficients,
    pub game: GameConfig,
    /// Revenue rate paid per generated kWh; defaults to the mean TOU base.
    pub revenue_rate: f64,
    pub solar_peak_kw: f64,
}

impl AppConfig {
    pub fn defaults(grid: &TimeGrid) -> Self {
        let coeffs = default_cost_coefficients(grid);
        let revenue_rate = coeffs.mean_b();
        AppConfig {
            coeffs,
            discomfort: DiscomfortCoefficients::default(),
            game: GameConfig::default(),
            revenue_rate,
            solar_peak_kw: DEFAULT_SOLAR_PEAK_KW,
        }
    }

    pub fn from_toml(text: &str, grid: &TimeGrid) -> Result<Self, ConfigError> {
        let raw: RawConfig = toml::from_str(text)?;
        let tiers = raw.pricing.tou_tiers.unwrap_or_else(default_tou_tiers);
        let coeffs = cost_coefficients_from_tiers(
            grid,
            &tiers,
            raw.pricing.a_coeff.unwrap_or(DEFAULT_A_COEFF),
            raw.pricing.c_coeff.unwrap_or(DEFAULT_C_COEFF),
        )?;
        let revenue_rate = raw.pricing.revenue_rate.unwrap_or_else(|| coeffs.mean_b());
        let discomfort = DiscomfortCoefficients::new(
            raw.comfort.alpha.unwrap_or(1.0),
            raw.comfort.beta.unwrap_or(0.0),
            raw.comfort.delta.unwrap_or(0.0),
        )?;
        let solver_defaults = SolverConfig::default();
        let solver = SolverConfig {
            population_size: raw.solver.population.unwrap_or(solver_defaults.population_size),
            generations: raw.solver.generations.unwrap_or(solver_defaults.generations),
            crossover_rate: raw.solver.crossover_rate.unwrap_or(solver_defaults.crossover_rate),
            mutation_rate: raw.solver.mutation_rate,
            tournament_size: raw.solver.tournament_size.unwrap_or(solver_defaults.tournament_size),
            rng_seed: raw.solver.seed.unwrap_or(solver_defaults.rng_seed),
            selection_weights: (
                raw.solver.w_cost.unwrap_or(0.5),
                raw.solver.w_discomfort.unwrap_or(0.5),
            ),
        };
        let game_defaults = GameConfig::default();
        let game = GameConfig {
            solver,
            max_rounds: raw.game.max_rounds.unwrap_or(game_defaults.max_rounds),
            epsilon: raw.game.epsilon.unwrap_or(game_defaults.epsilon),
            verification_samples: raw
                .game
                .verification_samples
                .unwrap_or(game_defaults.verification_samples),
        };
        Ok(AppConfig {
            coeffs,
            discomfort,
            game,
            revenue_rate,
            solar_peak_kw: raw.pricing.solar_peak_kw.unwrap_or(DEFAULT_SOLAR_PEAK_KW),
        })
    }

    pub fn from_file(path: &Path, grid: &TimeGrid) -> Result<Self, ConfigError> {
        Self::from_toml(&std::fs::read_to_string(path)?, grid)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_tiers_match_schedule() {
        let grid = TimeGrid::default();
        let coeffs = default_cost_coefficients(&grid);
        assert_eq!(coeffs.b()[0], 0.08); // 00:00
        assert_eq!(coeffs.b()[13], 0.08); // 06:30
        assert_eq!(coeffs.b()[14], 0.12); // 07:00
        assert_eq!(coeffs.b()[36], 0.20); // 18:00
        assert_eq!(coeffs.b()[43], 0.20); // 21:30
        assert_eq!(coeffs.b()[44], 0.12); // 22:00
        assert_eq!(coeffs.b()[47], 0.12); // 23:30
        assert!(coeffs.a().iter().all(|&a| a == 0.002));
        assert!(coeffs.c().iter().all(|&c| c == 0.0));
    }

    #[test]
    fn empty_toml_gives_defaults() {
        let grid = TimeGrid::default();
        let cfg = AppConfig::from_toml("", &grid).unwrap();
        assert_eq!(cfg.coeffs, default_cost_coefficients(&grid));
        assert_eq!(cfg.game.max_rounds, 20);
        assert!((cfg.revenue_rate - cfg.coeffs.mean_b()).abs() < 1e-12);
    }

    #[test]
    fn overrides_are_applied() {
        let grid = TimeGrid::default();
        let text = r#"
            [pricing]
            tou_tiers = [[0.0, 24.0, 0.10]]
            a_coeff = 0.01
            revenue_rate = 0.2

            [comfort]
            alpha = 2.0

            [solver]
            population = 40
            generations = 50
            w_cost = 1.0
            w_discomfort = 0.0

            [game]
            max_rounds = 7
        "#;
        let cfg = AppConfig::from_toml(text, &grid).unwrap();
        assert!(cfg.coeffs.b().iter().all(|&b| b == 0.10));
        assert!(cfg.coeffs.a().iter().all(|&a| a == 0.01));
        assert_eq!(cfg.revenue_rate, 0.2);
        assert_eq!(cfg.discomfort.alpha, 2.0);
        assert_eq!(cfg.game.solver.population_size, 40);
        assert_eq!(cfg.game.solver.selection_weights, (1.0, 0.0));
        assert_eq!(cfg.game.max_rounds, 7);
    }

    #[test]
    fn gap_in_tiers_rejected() {
        let grid = TimeGrid::default();
        let text = "[pricing]\ntou_tiers = [[0.0, 12.0, 0.1]]\n";
        assert!(matches!(
            AppConfig::from_toml(text, &grid),
            Err(ConfigError::UncoveredSlot { .. })
        ));
    }

    #[test]
    fn unknown_key_rejected() {
        let grid = TimeGrid::default();
        let text = "[pricing]\nnot_a_key = 1\n";
        assert!(AppConfig::from_toml(text, &grid).is_err());
    }
}
