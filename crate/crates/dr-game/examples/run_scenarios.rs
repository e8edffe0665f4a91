//! Runs the three benchmark scenarios on a reduced population and prints
//! the comparison table: the reference schedule (everything at preferred
//! times), cost-only optimization, and the cost/discomfort trade-off.
//!
//! The full-size experiment (30 players, 8 tasks each) is available through
//! the `dr-game` binary: `dr-game run --scenario all --seed 1 --out out/`.

use dr_game::domain::TimeGrid;
use dr_game::scenarios::{compare, run_scenario, PopulationConfig, RunConfig, ScenarioSpec};
use dr_game::{bundled_catalog, AppConfig, GameConfig, SolverConfig};

fn main() {
    let grid = TimeGrid::default();
    let app = AppConfig::defaults(&grid);
    let cfg = RunConfig {
        grid,
        coeffs: app.coeffs.clone(),
        game: GameConfig {
            solver: SolverConfig {
                population_size: 40,
                generations: 80,
                ..SolverConfig::default()
            },
            ..app.game.clone()
        },
        population: PopulationConfig {
            n_players: 10,
            tasks_per_player_min: 6,
            discomfort: app.discomfort,
            solar_peak_kw: app.solar_peak_kw,
            revenue_rate: app.revenue_rate,
            ..PopulationConfig::defaults(&app.coeffs)
        },
        catalog: bundled_catalog(&grid),
    };

    let seed = 1;
    let results: Vec<_> = ScenarioSpec::all()
        .iter()
        .map(|spec| {
            eprintln!("running {}...", spec.kind.display_name());
            run_scenario(spec, &cfg, seed).unwrap()
        })
        .collect();

    println!(
        "\n{:<22} {:>10} {:>12} {:>12} {:>14}",
        "scenario", "cost", "vs ref", "discomfort", "peak load kWh"
    );
    for (row, result) in compare(&results).unwrap().iter().zip(&results) {
        let peak = result.load_kwh.iter().cloned().fold(0.0, f64::max);
        println!(
            "{:<22} {:>10.4} {:>11.1}% {:>12.1} {:>14.2}",
            row.kind.display_name(),
            row.total_cost,
            row.pct_cost_vs_ref,
            row.total_discomfort,
            peak
        );
    }
}
