//! Shows how admitted windows map to feasible start slots, including a
//! window that wraps midnight, and what the consumption profile of a
//! scheduled run looks like.

use dr_game::domain::{feasible_starts, task_profile, Task, TimeGrid};

fn main() {
    let grid = TimeGrid::default();

    // electric car: charge 3 h anywhere between 18:00 and 08:00 next day
    let car = Task {
        id: "electrical_car".into(),
        power_kw: 3.5,
        duration_slots: 6,
        earliest_start_slot: 36,
        latest_finish_slot: 16,
        preferred_start_slot: 44,
        preferred_finish_slot: 4,
    };
    let starts = feasible_starts(&car, &grid);
    println!(
        "{}: {} feasible starts, {}h..{}h",
        car.id,
        starts.len(),
        grid.slot_to_hour(*starts.first().unwrap()),
        grid.slot_to_hour(*starts.last().unwrap()),
    );

    // a run starting 23:00 wraps past midnight
    let profile = task_profile(&car, 46, &grid).unwrap();
    let occupied: Vec<usize> = (0..grid.slots_per_day())
        .filter(|&t| profile.energy_kwh()[t] > 0.0)
        .collect();
    println!(
        "start 23:00 occupies slots {:?} ({:.1} kWh total)",
        occupied,
        profile.total_kwh()
    );

    // the fridge runs all day: its window admits exactly one start
    let fridge = Task {
        id: "fridge".into(),
        power_kw: 0.3,
        duration_slots: 48,
        earliest_start_slot: 0,
        latest_finish_slot: 48,
        preferred_start_slot: 0,
        preferred_finish_slot: 48,
    };
    println!(
        "{}: feasible starts {:?}, {:.1} kWh/day",
        fridge.id,
        feasible_starts(&fridge, &grid),
        fridge.energy_demand_kwh(&grid)
    );
}
