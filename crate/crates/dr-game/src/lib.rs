//! Residential demand-response as a non-cooperative game.
//!
//! Households schedule daily appliance tasks on a slotted 24 h grid. The
//! grid operator prices each slot by its marginal generation cost, so the
//! price rises with aggregate load. Every player trades off two objectives:
//! the daily energy bill and the discomfort of running tasks away from their
//! preferred windows. Each player's best response is computed with NSGA-II
//! over integer start-slot genes, and sequential best-response dynamics
//! iterate the players to a (sampled-verified) Nash equilibrium.
//!
//! Modules, bottom up:
//!
//! - [`domain`]: time grid, tasks, schedules, consumption profiles.
//! - [`catalog`]: appliance catalog files; a standard catalog is bundled.
//! - [`pricing`]: utility cost, real-time price, bills and prosumer revenue.
//! - [`comfort`]: time-shift parameter and discomfort cost.
//! - [`objectives`]: players and (cost, discomfort) evaluation.
//! - [`nsga2`]: the multi-objective solver and strategy selection.
//! - [`game`]: best-response dynamics, equilibrium verification, balance.
//! - [`scenarios`]: the reference / cost-only / cost-discomfort experiments.
//! - [`config`], [`report`]: run configuration and CSV outputs.
//!
//! The `examples/` directory has one runnable example per capability; start
//! with `cargo run --release --example schedule_one_player`.

pub mod catalog;
pub mod comfort;
pub mod config;
pub mod domain;
pub mod game;
pub mod nsga2;
pub mod objectives;
pub mod pricing;
pub mod report;
pub mod scenarios;

pub use catalog::{bundled_catalog, load_catalog, CatalogEntry};
pub use comfort::DiscomfortCoefficients;
pub use config::AppConfig;
pub use domain::{LoadVector, Schedule, Task, TimeGrid};
pub use game::{GameConfig, GameState};
pub use nsga2::{ParetoFront, SolverConfig};
pub use objectives::{ObjectiveVector, Player, PlayerKind};
pub use pricing::{CostCoefficients, GenerationProfile, PriceSignal};
pub use scenarios::{PopulationConfig, RunConfig, ScenarioKind, ScenarioSpec};
