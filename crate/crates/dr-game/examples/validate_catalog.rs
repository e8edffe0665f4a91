//! Loads the bundled appliance catalog and prints each entry's admitted
//! window and number of feasible starts on the default half-hour grid.
//!
//! Pass a path to check your own catalog file instead:
//!
//! ```text
//! cargo run --example validate_catalog -- my_catalog.csv
//! ```

use dr_game::domain::TimeGrid;
use dr_game::{bundled_catalog, load_catalog};

fn main() {
    let grid = TimeGrid::default();
    let entries = match std::env::args().nth(1) {
        Some(path) => match load_catalog(path.as_ref(), &grid) {
            Ok(entries) => {
                println!("{path}: ok");
                entries
            }
            Err(err) => {
                eprintln!("{path}: {err}");
                std::process::exit(2);
            }
        },
        None => bundled_catalog(&grid),
    };

    println!(
        "{:<18} {:>8} {:>10} {:>14} {:>8}",
        "appliance", "kW", "duration", "window", "starts"
    );
    for entry in &entries {
        let window = format!(
            "{:04.1}-{:04.1}h",
            grid.slot_to_hour(entry.earliest_start_slot),
            grid.slot_to_hour(entry.latest_finish_slot % grid.slots_per_day())
        );
        let starts = entry.window_slots(&grid) - entry.duration_slots + 1;
        println!(
            "{:<18} {:>8.1} {:>9.1}h {:>14} {:>8}",
            entry.id,
            entry.power_kw,
            entry.duration_slots as f64 * grid.slot_hours(),
            window,
            starts
        );
    }
    println!("\n{} entries, all valid", entries.len());
}
