//! Solves one household's scheduling problem with NSGA-II against a fixed
//! background load and prints the resulting cost/discomfort trade-off
//! front. The front is also written to `front.csv` in the working
//! directory.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dr_game::comfort::DiscomfortCoefficients;
use dr_game::config::default_cost_coefficients;
use dr_game::domain::{LoadVector, TimeGrid};
use dr_game::nsga2::{evolve, select_strategy};
use dr_game::objectives::Player;
use dr_game::report::write_front;
use dr_game::{bundled_catalog, SolverConfig};

fn main() {
    let grid = TimeGrid::default();
    let coeffs = default_cost_coefficients(&grid);

    // one household: first eight catalog appliances, preferred windows drawn
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let tasks = bundled_catalog(&grid)
        .iter()
        .take(8)
        .map(|entry| entry.instantiate(&grid, &mut rng))
        .collect();
    let player = Player::consumer("household", tasks, &grid, DiscomfortCoefficients::default());

    // the rest of the neighborhood as a fixed evening-heavy background
    let others = LoadVector::from_energies(
        (0..48).map(|t| if (36..44).contains(&t) { 30.0 } else { 12.0 }).collect(),
    );

    let cfg = SolverConfig {
        rng_seed: 11,
        ..SolverConfig::default()
    };
    let front = evolve(&player, &others, &coeffs, &grid, &cfg).unwrap();

    println!("Pareto front ({} schedules):", front.len());
    println!("{:>10} {:>12}", "cost", "discomfort");
    let mut members: Vec<_> = front.members.iter().collect();
    members.sort_by(|a, b| {
        let (oa, ob) = (a.objectives.as_ref().unwrap(), b.objectives.as_ref().unwrap());
        oa.cost.partial_cmp(&ob.cost).unwrap()
    });
    for member in members {
        let o = member.objectives.as_ref().unwrap();
        println!("{:>10.4} {:>12.1}", o.cost, o.discomfort);
    }

    for (name, weights) in [("cost only", (1.0, 0.0)), ("balanced", (0.5, 0.5))] {
        let picked = select_strategy(&front, weights).unwrap();
        let o = picked.objectives.as_ref().unwrap();
        println!(
            "{name}: cost {:.4}, discomfort {:.1}, starts {:?}",
            o.cost, o.discomfort, picked.genes
        );
    }

    write_front("front.csv".as_ref(), &front).unwrap();
    println!("front written to front.csv");
}
