//! Walks through the time-shift measure: zero inside the preferred window,
//! then growing linearly with the overhang on either side, and the
//! quadratic discomfort cost built on top of it.

use dr_game::comfort::{discomfort_cost, time_shift, DiscomfortCoefficients};
use dr_game::domain::{feasible_starts, Task, TimeGrid};

fn main() {
    let grid = TimeGrid::default();
    // preferred 10:00-14:00, runs 2 h, admitted 06:00-20:00
    let task = Task {
        id: "dish_washer".into(),
        power_kw: 1.0,
        duration_slots: 4,
        earliest_start_slot: 12,
        latest_finish_slot: 40,
        preferred_start_slot: 20,
        preferred_finish_slot: 28,
    };
    let coeffs = DiscomfortCoefficients::default();

    println!("{:>6} {:>7} {:>7} {:>12}", "start", "hour", "shift", "discomfort");
    for start in feasible_starts(&task, &grid) {
        let shift = time_shift(&task, start, &grid).unwrap();
        let cost = discomfort_cost(&[shift as f64], &coeffs).unwrap();
        println!(
            "{:>6} {:>7} {:>7} {:>12.1}",
            start,
            grid.slot_to_hour(start),
            shift,
            cost
        );
    }
    println!("\nany start with the whole run inside 10:00-14:00 costs nothing;");
    println!("each slot of overhang adds quadratically");
}
