//! Prints the default time-of-use price structure and how the real-time
//! price responds to load: a flat base rate per tier plus a congestion
//! term that grows with aggregate consumption.

use dr_game::config::default_cost_coefficients;
use dr_game::domain::{LoadVector, TimeGrid};
use dr_game::pricing::{realtime_price, utility_cost};

fn main() {
    let grid = TimeGrid::default();
    let coeffs = default_cost_coefficients(&grid);

    let flat = LoadVector::from_energies(vec![10.0; 48]);
    let heavy_evening = LoadVector::from_energies(
        (0..48).map(|t| if (36..44).contains(&t) { 40.0 } else { 10.0 }).collect(),
    );
    let p_flat = realtime_price(&flat, &coeffs).unwrap();
    let p_heavy = realtime_price(&heavy_evening, &coeffs).unwrap();

    println!("{:>6} {:>6} {:>8} {:>12} {:>14}", "slot", "hour", "base", "price@10kWh", "price@evening");
    for slot in (0..48).step_by(4) {
        println!(
            "{:>6} {:>6} {:>8.3} {:>12.3} {:>14.3}",
            slot,
            grid.slot_to_hour(slot),
            coeffs.b()[slot],
            p_flat.price()[slot],
            p_heavy.price()[slot],
        );
    }

    let cost_flat: f64 = utility_cost(&flat, &coeffs).unwrap().iter().sum();
    let cost_heavy: f64 = utility_cost(&heavy_evening, &coeffs).unwrap().iter().sum();
    println!("\nutility generation cost: flat load {cost_flat:.2}, evening peak {cost_heavy:.2}");
    println!("the quadratic term makes peaked load disproportionately expensive");
}
