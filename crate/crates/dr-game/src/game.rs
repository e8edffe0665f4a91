//! Non-cooperative game engine: sequential best-response dynamics to a Nash
//! equilibrium, sampled equilibrium verification and the per-slot energy
//! balance.
//!
//! Players act in id order. A best response freezes the other players' load,
//! runs the NSGA-II solver for the acting player (with its incumbent
//! strategy injected into the initial population) and adopts the front
//! member with the lowest raw scalarized objective when it strictly improves
//! on the incumbent, so updates are monotone non-worsening.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::domain::{
    aggregate_load, feasible_starts, ConsumptionProfile, DomainError, LoadVector, TimeGrid,
};
use crate::nsga2::{evolve_seeded, Chromosome, SolverConfig, SolverError};
use crate::objectives::{evaluate_genes, ObjectiveError, ObjectiveVector, Player, PlayerKind};
use crate::pricing::{realtime_price, CostCoefficients, PriceSignal, PricingError};

#[derive(Debug, Error)]
pub enum GameError {
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Objective(#[from] ObjectiveError),
    #[error(transparent)]
    Pricing(#[from] PricingError),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error("game has no players")]
    NoPlayers,
    #[error("invalid game config: {0}")]
    InvalidConfig(String),
}

/// Best-response loop parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct GameConfig {
    pub solver: SolverConfig,
    pub max_rounds: usize,
    /// Convergence and certification threshold, in currency.
    pub epsilon: f64,
    /// Random unilateral deviations tried per player during verification.
    pub verification_samples: usize,
}

impl Default for GameConfig {
    fn default() -> Self {
        GameConfig {
            solver: SolverConfig::default(),
            max_rounds: 20,
            epsilon: 1e-6,
            verification_samples: 1000,
        }
    }
}

impl GameConfig {
    pub fn validate(&self) -> Result<(), GameError> {
        self.solver.validate()?;
        if self.max_rounds == 0 {
            return Err(GameError::InvalidConfig("max_rounds must be >= 1".into()));
        }
        if self.epsilon <= 0.0 {
            return Err(GameError::InvalidConfig(format!(
                "epsilon must be positive, got {}",
                self.epsilon
            )));
        }
        Ok(())
    }
}

/// All players' current strategies, the induced price and bookkeeping.
#[derive(Debug, Clone)]
pub struct GameState {
    pub players: Vec<Player>,
    pub strategies: Vec<Chromosome>,
    pub price: PriceSignal,
    pub round: usize,
    pub converged: bool,
    grid: TimeGrid,
    coeffs: CostCoefficients,
    profiles: Vec<ConsumptionProfile>,
}

/// Per-slot energy accounting: demand, prosumer generation, utility supply
/// and exported surplus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlotBalance {
    pub demand_kwh: f64,
    pub generation_kwh: f64,
    pub utility_kwh: f64,
    pub surplus_kwh: f64,
}

impl SlotBalance {
    /// Residual of the balance identity, exactly zero by construction:
    /// utility supply minus surplus equals demand minus generation.
    pub fn residual(&self) -> f64 {
        (self.utility_kwh - self.surplus_kwh) - (self.demand_kwh - self.generation_kwh)
    }
}

#[derive(Debug, Clone)]
pub struct EquilibriumReport {
    pub rounds_used: usize,
    pub converged: bool,
    /// `(player id, final objectives)` evaluated at the final price.
    pub per_player: Vec<(String, ObjectiveVector)>,
    pub max_deviation_gain: f64,
    pub balance: Vec<SlotBalance>,
}

fn mix_seed(base: u64, salt: u64) -> u64 {
    // splitmix64 finalizer
    let mut z = base.wrapping_add(salt.wrapping_mul(0x9e3779b97f4a7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

impl GameState {
    /// Starts every player at its preferred start slots.
    pub fn new(
        players: Vec<Player>,
        coeffs: CostCoefficients,
        grid: TimeGrid,
    ) -> Result<Self, GameError> {
        if players.is_empty() {
            return Err(GameError::NoPlayers);
        }
        let strategies: Vec<Chromosome> = players
            .iter()
            .map(|p| Chromosome::new(p.tasks.iter().map(|t| t.preferred_start_slot).collect()))
            .collect();
        let mut state = GameState {
            players,
            strategies,
            price: PriceSignal::from_prices(vec![0.0; grid.slots_per_day()]),
            round: 0,
            converged: false,
            grid,
            coeffs,
            profiles: Vec::new(),
        };
        state.rebuild()?;
        Ok(state)
    }

    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    pub fn coeffs(&self) -> &CostCoefficients {
        &self.coeffs
    }

    pub fn total_load(&self) -> Result<LoadVector, GameError> {
        Ok(aggregate_load(&self.profiles)?)
    }

    /// Recomputes all profiles, cached objectives and the price signal from
    /// the current strategies.
    fn rebuild(&mut self) -> Result<(), GameError> {
        self.profiles.clear();
        for (player, strategy) in self.players.iter().zip(&self.strategies) {
            let mut profile = ConsumptionProfile::zeros(&self.grid);
            for (task, &start) in player.tasks.iter().zip(&strategy.genes) {
                if !crate::domain::is_feasible_start(task, start, &self.grid) {
                    return Err(GameError::Domain(DomainError::InfeasibleStart {
                        id: task.id.clone(),
                        start_slot: start,
                    }));
                }
                profile.accumulate_run(task, start, &self.grid);
            }
            self.profiles.push(profile);
        }
        let load = aggregate_load(&self.profiles)?;
        self.price = realtime_price(&load, &self.coeffs)?;
        for i in 0..self.players.len() {
            let others = self.others_load(i)?;
            let obj = evaluate_genes(
                &self.players[i],
                &self.strategies[i].genes,
                &others,
                &self.coeffs,
                &self.grid,
            )?;
            self.strategies[i].objectives = Some(obj);
        }
        Ok(())
    }

    /// Aggregate load of every player except `player_index`, in fixed order.
    pub fn others_load(&self, player_index: usize) -> Result<LoadVector, GameError> {
        let mut load = LoadVector::zeros(&self.grid);
        for (i, profile) in self.profiles.iter().enumerate() {
            if i != player_index {
                load.add_profile(profile)?;
            }
        }
        Ok(load)
    }

    fn adopt(&mut self, player_index: usize, strategy: Chromosome) -> Result<(), GameError> {
        self.strategies[player_index] = strategy;
        self.rebuild()
    }
}

/// Runs the acting player's NSGA-II solve against the frozen others-load and
/// returns the strategy it would adopt: the front member with the lowest raw
/// scalarized objective, or the incumbent when nothing improves on it.
pub fn best_response(
    state: &GameState,
    player_index: usize,
    cfg: &GameConfig,
) -> Result<Chromosome, GameError> {
    let player = &state.players[player_index];
    let others = state.others_load(player_index)?;
    let weights = cfg.solver.selection_weights;
    let incumbent_genes = state.strategies[player_index].genes.clone();
    let incumbent_obj = evaluate_genes(player, &incumbent_genes, &others, &state.coeffs, &state.grid)?;

    let solver_cfg = SolverConfig {
        rng_seed: mix_seed(cfg.solver.rng_seed, player_index as u64 + 1),
        ..cfg.solver.clone()
    };
    let front = evolve_seeded(
        player,
        &others,
        &state.coeffs,
        &state.grid,
        &solver_cfg,
        std::slice::from_ref(&incumbent_genes),
    )?;
    let candidate = front.min_scalarized(weights.0, weights.1)?;
    let candidate_obj = *candidate.objectives()?;
    if candidate_obj.scalarized(weights.0, weights.1)
        < incumbent_obj.scalarized(weights.0, weights.1)
    {
        Ok(candidate.clone())
    } else {
        let mut incumbent = Chromosome::new(incumbent_genes);
        incumbent.objectives = Some(incumbent_obj);
        Ok(incumbent)
    }
}

/// Round-robin sequential best responses until a full round changes no
/// strategy or improves no player by more than `epsilon`. Non-convergence is
/// reported through the `converged` flag, not an error.
pub fn run_to_equilibrium(
    state: &mut GameState,
    cfg: &GameConfig,
) -> Result<EquilibriumReport, GameError> {
    cfg.validate()?;
    let weights = cfg.solver.selection_weights;
    state.converged = false;
    for round in 1..=cfg.max_rounds {
        state.round = round;
        let mut any_change = false;
        let mut max_improvement = 0.0f64;
        for i in 0..self_len(state) {
            let before = state.strategies[i].clone();
            let others = state.others_load(i)?;
            let before_obj =
                evaluate_genes(&state.players[i], &before.genes, &others, &state.coeffs, &state.grid)?;
            let next = best_response(state, i, cfg)?;
            let next_obj = *next.objectives()?;
            let improvement = before_obj.scalarized(weights.0, weights.1)
                - next_obj.scalarized(weights.0, weights.1);
            debug_assert!(improvement >= 0.0, "best response worsened player {i}");
            if next.genes != before.genes {
                any_change = true;
                max_improvement = max_improvement.max(improvement);
                state.adopt(i, next)?;
            }
        }
        if !any_change || max_improvement <= cfg.epsilon {
            state.converged = true;
            break;
        }
    }
    let max_deviation_gain = verify_equilibrium(state, cfg.verification_samples, cfg)?;
    Ok(EquilibriumReport {
        rounds_used: state.round,
        converged: state.converged,
        per_player: state
            .players
            .iter()
            .zip(&state.strategies)
            .map(|(p, s)| (p.id.clone(), *s.objectives.as_ref().unwrap()))
            .collect(),
        max_deviation_gain,
        balance: energy_balance(state),
    })
}

fn self_len(state: &GameState) -> usize {
    state.players.len()
}

/// Samples random feasible unilateral deviations (plus the all-preferred and
/// all-earliest schedules) for every player against the frozen others-load
/// and returns the largest scalarized improvement over the current strategy;
/// zero when none improves. The profile is an epsilon-Nash equilibrium when
/// the returned gain is at most epsilon.
pub fn verify_equilibrium(
    state: &GameState,
    samples_per_player: usize,
    cfg: &GameConfig,
) -> Result<f64, GameError> {
    let weights = cfg.solver.selection_weights;
    let mut max_gain = 0.0f64;
    for i in 0..state.players.len() {
        let player = &state.players[i];
        let others = state.others_load(i)?;
        let current = evaluate_genes(
            player,
            &state.strategies[i].genes,
            &others,
            &state.coeffs,
            &state.grid,
        )?
        .scalarized(weights.0, weights.1);

        let starts: Vec<Vec<usize>> = player
            .tasks
            .iter()
            .map(|t| feasible_starts(t, &state.grid))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(cfg.solver.rng_seed, 0x5eed + i as u64));
        let try_genes = |genes: &[usize], max_gain: &mut f64| -> Result<(), GameError> {
            let obj = evaluate_genes(player, genes, &others, &state.coeffs, &state.grid)?;
            let gain = current - obj.scalarized(weights.0, weights.1);
            if gain > *max_gain {
                *max_gain = gain;
            }
            Ok(())
        };
        let preferred: Vec<usize> = player.tasks.iter().map(|t| t.preferred_start_slot).collect();
        let earliest: Vec<usize> = starts.iter().map(|s| s[0]).collect();
        try_genes(&preferred, &mut max_gain)?;
        try_genes(&earliest, &mut max_gain)?;
        for _ in 0..samples_per_player {
            let genes: Vec<usize> = starts
                .iter()
                .map(|s| s[rng.gen_range(0..s.len())])
                .collect();
            try_genes(&genes, &mut max_gain)?;
        }
    }
    Ok(max_gain)
}

/// Per-slot energy accounting. The utility covers demand not met by prosumer
/// generation; generation beyond demand is reported as exported surplus.
pub fn energy_balance(state: &GameState) -> Vec<SlotBalance> {
    let n = state.grid.slots_per_day();
    let mut balance = Vec::with_capacity(n);
    for t in 0..n {
        let demand: f64 = state.profiles.iter().map(|p| p.energy_kwh()[t]).sum();
        let generation: f64 = state
            .players
            .iter()
            .filter(|p| p.kind == PlayerKind::Prosumer)
            .map(|p| p.generation.energy_kwh()[t])
            .sum();
        balance.push(SlotBalance {
            demand_kwh: demand,
            generation_kwh: generation,
            utility_kwh: (demand - generation).max(0.0),
            surplus_kwh: (generation - demand).max(0.0),
        });
    }
    balance
}
