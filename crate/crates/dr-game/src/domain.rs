//! Time grid, schedulable tasks and consumption profiles.
//!
//! A day is divided into equal slots (48 half-hour slots by default). Each
//! task occupies a contiguous run of slots inside an admitted window; windows
//! may wrap past midnight, in which case all slot arithmetic is circular.

use std::collections::BTreeMap;

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum DomainError {
    #[error("task {id}: duration of {duration_slots} slots exceeds admitted window of {window_slots} slots")]
    WindowTooShort {
        id: String,
        duration_slots: usize,
        window_slots: usize,
    },
    #[error("task {id}: preferred window is not contained in the admitted window")]
    PreferredOutsideAdmitted { id: String },
    #[error("task {id}: preferred window of {preferred_slots} slots cannot hold {duration_slots} slots")]
    PreferredWindowTooShort {
        id: String,
        preferred_slots: usize,
        duration_slots: usize,
    },
    #[error("task {id}: power must be positive, got {power_kw}")]
    NonPositivePower { id: String, power_kw: f64 },
    #[error("task {id}: start slot {start_slot} is not a feasible start")]
    InfeasibleStart { id: String, start_slot: usize },
    #[error("schedule is missing task {id}")]
    MissingTask { id: String },
    #[error("profile length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("grid of {slots_per_day} slots x {slot_hours} h does not cover 24 h")]
    BadGrid { slots_per_day: usize, slot_hours: f64 },
    #[error("hour value {hour} does not fall on a slot boundary of {slot_hours} h")]
    OffGridHour { hour: f64, slot_hours: f64 },
}

/// Discretization of the 24 h horizon into equal slots.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    slots_per_day: usize,
    slot_hours: f64,
}

impl Default for TimeGrid {
    fn default() -> Self {
        TimeGrid {
            slots_per_day: 48,
            slot_hours: 0.5,
        }
    }
}

impl TimeGrid {
    pub const HORIZON_HOURS: f64 = 24.0;

    pub fn new(slots_per_day: usize, slot_hours: f64) -> Result<Self, DomainError> {
        if slots_per_day == 0 || (slots_per_day as f64 * slot_hours - Self::HORIZON_HOURS).abs() > 1e-9 {
            return Err(DomainError::BadGrid {
                slots_per_day,
                slot_hours,
            });
        }
        Ok(TimeGrid {
            slots_per_day,
            slot_hours,
        })
    }

    pub fn slots_per_day(&self) -> usize {
        self.slots_per_day
    }

    pub fn slot_hours(&self) -> f64 {
        self.slot_hours
    }

    /// Converts an hour-of-day value to a slot boundary in `[0, slots_per_day]`.
    /// The hour must land exactly on a slot boundary.
    pub fn hour_to_boundary(&self, hour: f64) -> Result<usize, DomainError> {
        let raw = hour / self.slot_hours;
        let rounded = raw.round();
        if (raw - rounded).abs() > 1e-9 || !(0.0..=self.slots_per_day as f64).contains(&rounded) {
            return Err(DomainError::OffGridHour {
                hour,
                slot_hours: self.slot_hours,
            });
        }
        Ok(rounded as usize)
    }

    /// Converts a duration in hours to a whole number of slots.
    pub fn hours_to_slots(&self, hours: f64) -> Result<usize, DomainError> {
        let raw = hours / self.slot_hours;
        let rounded = raw.round();
        if (raw - rounded).abs() > 1e-9 || rounded < 1.0 {
            return Err(DomainError::OffGridHour {
                hour: hours,
                slot_hours: self.slot_hours,
            });
        }
        Ok(rounded as usize)
    }

    pub fn slot_to_hour(&self, slot: usize) -> f64 {
        slot as f64 * self.slot_hours
    }
}

/// One schedulable appliance run.
///
/// Window boundaries are slot indices in `[0, slots_per_day]`; a finish
/// boundary less than or equal to the start denotes a window wrapping
/// midnight.
#[derive(Debug, Clone, PartialEq)]
pub struct Task {
    pub id: String,
    pub power_kw: f64,
    pub duration_slots: usize,
    pub earliest_start_slot: usize,
    pub latest_finish_slot: usize,
    pub preferred_start_slot: usize,
    pub preferred_finish_slot: usize,
}

impl Task {
    /// Admitted window length in slots, computed circularly when wrapped.
    pub fn window_slots(&self, grid: &TimeGrid) -> usize {
        circular_span(
            self.earliest_start_slot,
            self.latest_finish_slot,
            grid.slots_per_day(),
        )
    }

    /// Preferred window length in slots.
    pub fn preferred_slots(&self, grid: &TimeGrid) -> usize {
        circular_span(
            self.preferred_start_slot,
            self.preferred_finish_slot,
            grid.slots_per_day(),
        )
    }

    /// Offset of the preferred start from the admitted start, unrolled.
    pub(crate) fn preferred_offset(&self, grid: &TimeGrid) -> usize {
        let n = grid.slots_per_day();
        (self.preferred_start_slot + n - self.earliest_start_slot) % n
    }

    pub fn energy_demand_kwh(&self, grid: &TimeGrid) -> f64 {
        self.power_kw * self.duration_slots as f64 * grid.slot_hours()
    }
}

/// Span from a start boundary to a finish boundary, wrapping when
/// `finish <= start`. A full-day window is expressed as `[0, slots_per_day]`.
fn circular_span(start: usize, finish: usize, slots_per_day: usize) -> usize {
    if finish > start {
        finish - start
    } else {
        finish + slots_per_day - start
    }
}

/// Accepts the task iff its invariants hold: positive power, admitted window
/// long enough for the duration, and preferred window inside the admitted one
/// with room for the full run.
pub fn validate_task(task: &Task, grid: &TimeGrid) -> Result<(), DomainError> {
    if task.power_kw <= 0.0 {
        return Err(DomainError::NonPositivePower {
            id: task.id.clone(),
            power_kw: task.power_kw,
        });
    }
    let window = task.window_slots(grid);
    if task.duration_slots > window {
        return Err(DomainError::WindowTooShort {
            id: task.id.clone(),
            duration_slots: task.duration_slots,
            window_slots: window,
        });
    }
    let pref = task.preferred_slots(grid);
    if task.preferred_offset(grid) + pref > window {
        return Err(DomainError::PreferredOutsideAdmitted {
            id: task.id.clone(),
        });
    }
    if pref < task.duration_slots {
        return Err(DomainError::PreferredWindowTooShort {
            id: task.id.clone(),
            preferred_slots: pref,
            duration_slots: task.duration_slots,
        });
    }
    Ok(())
}

/// All start slots admitting a full run inside the task window, unrolled
/// circularly for wrapped windows. Non-empty for every valid task.
pub fn feasible_starts(task: &Task, grid: &TimeGrid) -> Vec<usize> {
    let n = grid.slots_per_day();
    let window = task.window_slots(grid);
    (0..=window - task.duration_slots)
        .map(|offset| (task.earliest_start_slot + offset) % n)
        .collect()
}

pub fn is_feasible_start(task: &Task, start_slot: usize, grid: &TimeGrid) -> bool {
    let n = grid.slots_per_day();
    let window = task.window_slots(grid);
    let offset = (start_slot + n - task.earliest_start_slot) % n;
    offset + task.duration_slots <= window
}

/// Per-slot energy in kWh over one day.
#[derive(Debug, Clone, PartialEq)]
pub struct ConsumptionProfile {
    energy_kwh: Vec<f64>,
}

impl ConsumptionProfile {
    pub fn zeros(grid: &TimeGrid) -> Self {
        ConsumptionProfile {
            energy_kwh: vec![0.0; grid.slots_per_day()],
        }
    }

    pub fn from_energies(energy_kwh: Vec<f64>) -> Self {
        ConsumptionProfile { energy_kwh }
    }

    pub fn energy_kwh(&self) -> &[f64] {
        &self.energy_kwh
    }

    pub fn total_kwh(&self) -> f64 {
        self.energy_kwh.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.energy_kwh.len()
    }

    pub fn is_empty(&self) -> bool {
        self.energy_kwh.is_empty()
    }

    pub fn add_assign(&mut self, other: &ConsumptionProfile) -> Result<(), DomainError> {
        if self.len() != other.len() {
            return Err(DomainError::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        for (a, b) in self.energy_kwh.iter_mut().zip(&other.energy_kwh) {
            *a += b;
        }
        Ok(())
    }

    /// Adds a task run directly into this profile without an intermediate
    /// allocation. The caller guarantees the start is feasible.
    pub(crate) fn accumulate_run(&mut self, task: &Task, start_slot: usize, grid: &TimeGrid) {
        let n = grid.slots_per_day();
        let per_slot = task.power_kw * grid.slot_hours();
        for i in 0..task.duration_slots {
            self.energy_kwh[(start_slot + i) % n] += per_slot;
        }
    }
}

/// Aggregate per-slot energy across all players.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadVector {
    energy_kwh: Vec<f64>,
}

impl LoadVector {
    pub fn zeros(grid: &TimeGrid) -> Self {
        LoadVector {
            energy_kwh: vec![0.0; grid.slots_per_day()],
        }
    }

    pub fn from_energies(energy_kwh: Vec<f64>) -> Self {
        LoadVector { energy_kwh }
    }

    pub fn energy_kwh(&self) -> &[f64] {
        &self.energy_kwh
    }

    pub fn len(&self) -> usize {
        self.energy_kwh.len()
    }

    pub fn is_empty(&self) -> bool {
        self.energy_kwh.is_empty()
    }

    pub fn total_kwh(&self) -> f64 {
        self.energy_kwh.iter().sum()
    }

    pub fn peak_kwh(&self) -> f64 {
        self.energy_kwh.iter().cloned().fold(0.0, f64::max)
    }

    pub fn add_profile(&mut self, profile: &ConsumptionProfile) -> Result<(), DomainError> {
        if self.len() != profile.len() {
            return Err(DomainError::LengthMismatch {
                expected: self.len(),
                got: profile.len(),
            });
        }
        for (a, b) in self.energy_kwh.iter_mut().zip(profile.energy_kwh()) {
            *a += b;
        }
        Ok(())
    }

    pub fn subtract_profile(&mut self, profile: &ConsumptionProfile) -> Result<(), DomainError> {
        if self.len() != profile.len() {
            return Err(DomainError::LengthMismatch {
                expected: self.len(),
                got: profile.len(),
            });
        }
        for (a, b) in self.energy_kwh.iter_mut().zip(profile.energy_kwh()) {
            *a -= b;
        }
        Ok(())
    }
}

/// Per-task start slots for one player; the player's strategy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule {
    pub start_slots: BTreeMap<String, usize>,
}

impl Schedule {
    pub fn new() -> Self {
        Schedule {
            start_slots: BTreeMap::new(),
        }
    }
}

impl Default for Schedule {
    fn default() -> Self {
        Self::new()
    }
}

/// Rectangular consumption profile of one task started at `start_slot`,
/// wrapping modulo the day length.
pub fn task_profile(
    task: &Task,
    start_slot: usize,
    grid: &TimeGrid,
) -> Result<ConsumptionProfile, DomainError> {
    if !is_feasible_start(task, start_slot, grid) {
        return Err(DomainError::InfeasibleStart {
            id: task.id.clone(),
            start_slot,
        });
    }
    let mut profile = ConsumptionProfile::zeros(grid);
    profile.accumulate_run(task, start_slot, grid);
    Ok(profile)
}

/// Element-wise sum of the task profiles of a whole schedule.
pub fn player_profile(
    schedule: &Schedule,
    tasks: &[Task],
    grid: &TimeGrid,
) -> Result<ConsumptionProfile, DomainError> {
    let mut profile = ConsumptionProfile::zeros(grid);
    for task in tasks {
        let start = *schedule
            .start_slots
            .get(&task.id)
            .ok_or_else(|| DomainError::MissingTask {
                id: task.id.clone(),
            })?;
        if !is_feasible_start(task, start, grid) {
            return Err(DomainError::InfeasibleStart {
                id: task.id.clone(),
                start_slot: start,
            });
        }
        profile.accumulate_run(task, start, grid);
    }
    Ok(profile)
}

/// Element-wise sum of per-player profiles into the aggregate load.
pub fn aggregate_load(profiles: &[ConsumptionProfile]) -> Result<LoadVector, DomainError> {
    let expected = profiles.first().map_or(0, |p| p.len());
    let mut out = vec![0.0; expected];
    for profile in profiles {
        if profile.len() != expected {
            return Err(DomainError::LengthMismatch {
                expected,
                got: profile.len(),
            });
        }
        for (a, b) in out.iter_mut().zip(profile.energy_kwh()) {
            *a += b;
        }
    }
    Ok(LoadVector::from_energies(out))
}
