//! Runs sequential best-response dynamics for a small neighborhood until no
//! player can improve, then certifies the equilibrium with sampled
//! unilateral deviations and prints the per-slot energy balance.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dr_game::comfort::DiscomfortCoefficients;
use dr_game::config::default_cost_coefficients;
use dr_game::domain::TimeGrid;
use dr_game::game::{energy_balance, run_to_equilibrium};
use dr_game::objectives::Player;
use dr_game::pricing::GenerationProfile;
use dr_game::{bundled_catalog, GameConfig, GameState, SolverConfig};

fn main() {
    let grid = TimeGrid::default();
    let coeffs = default_cost_coefficients(&grid);
    let catalog = bundled_catalog(&grid);
    let mut rng = ChaCha8Rng::seed_from_u64(21);

    let mut players = Vec::new();
    for i in 0..6 {
        let tasks: Vec<_> = catalog
            .iter()
            .skip(i)
            .take(5)
            .map(|e| e.instantiate(&grid, &mut rng))
            .collect();
        let id = format!("house_{i}");
        if i < 2 {
            // two rooftop-solar prosumers
            let gen = GenerationProfile::solar(&grid, 7.0, 19.0, 2.0, coeffs.mean_b());
            players.push(Player::prosumer(id, tasks, gen, DiscomfortCoefficients::default()));
        } else {
            players.push(Player::consumer(id, tasks, &grid, DiscomfortCoefficients::default()));
        }
    }

    let cfg = GameConfig {
        solver: SolverConfig {
            population_size: 40,
            generations: 60,
            rng_seed: 21,
            selection_weights: (1.0, 0.0),
            ..SolverConfig::default()
        },
        ..GameConfig::default()
    };
    let mut state = GameState::new(players, coeffs, grid).unwrap();
    let report = run_to_equilibrium(&mut state, &cfg).unwrap();

    println!(
        "converged: {} after {} rounds, max deviation gain {:.2e}",
        report.converged, report.rounds_used, report.max_deviation_gain
    );
    for (id, obj) in &report.per_player {
        println!("{id}: cost {:.4}, discomfort {:.1}", obj.cost, obj.discomfort);
    }

    println!("\n{:>6} {:>9} {:>11} {:>10} {:>9}", "hour", "demand", "generation", "utility", "surplus");
    for (slot, b) in energy_balance(&state).iter().enumerate().step_by(4) {
        println!(
            "{:>6} {:>9.2} {:>11.2} {:>10.2} {:>9.2}",
            grid.slot_to_hour(slot),
            b.demand_kwh,
            b.generation_kwh,
            b.utility_kwh,
            b.surplus_kwh
        );
    }
}
