//! Time-shift parameter and discomfort cost.
//!
//! The time shift of a task is the number of slots by which its run
//! overhangs the preferred window; discomfort is a quadratic cost in the
//! shift, summed over tasks.

use thiserror::Error;

use crate::domain::{DomainError, Task, TimeGrid};

#[derive(Debug, Error, PartialEq)]
pub enum ComfortError {
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error("time shift must be non-negative, got {shift}")]
    NegativeShift { shift: f64 },
    #[error("discomfort coefficient {name} must be non-negative, got {value}")]
    NegativeCoefficient { name: &'static str, value: f64 },
}

/// Quadratic discomfort coefficients: cost per task is
/// `alpha * shift^2 + beta * shift + delta`, shift in slots.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscomfortCoefficients {
    pub alpha: f64,
    pub beta: f64,
    pub delta: f64,
}

impl DiscomfortCoefficients {
    pub fn new(alpha: f64, beta: f64, delta: f64) -> Result<Self, ComfortError> {
        for (name, value) in [("alpha", alpha), ("beta", beta), ("delta", delta)] {
            if value < 0.0 {
                return Err(ComfortError::NegativeCoefficient { name, value });
            }
        }
        Ok(DiscomfortCoefficients { alpha, beta, delta })
    }
}

impl Default for DiscomfortCoefficients {
    /// Pure quadratic: discomfort is the sum of squared shifts in slot units.
    fn default() -> Self {
        DiscomfortCoefficients {
            alpha: 1.0,
            beta: 0.0,
            delta: 0.0,
        }
    }
}

/// Gap in slots between the scheduled run and the preferred window.
///
/// Zero when the run lies inside the preferred window. A run starting early
/// is charged the distance from its start to the preferred start; a run
/// finishing late the distance from the preferred finish to its end. A run
/// overhanging both ends is charged the larger of the two overhangs. All
/// distances are taken in the window's own unrolled coordinates, so wrapped
/// windows use the minimal circular overhang.
pub fn time_shift(task: &Task, start_slot: usize, grid: &TimeGrid) -> Result<usize, ComfortError> {
    let n = grid.slots_per_day();
    let window = task.window_slots(grid);
    let start_u = (start_slot + n - task.earliest_start_slot) % n;
    if start_u + task.duration_slots > window {
        return Err(ComfortError::Domain(DomainError::InfeasibleStart {
            id: task.id.clone(),
            start_slot,
        }));
    }
    let pref_start = task.preferred_offset(grid);
    let pref_finish = pref_start + task.preferred_slots(grid);
    let end_u = start_u + task.duration_slots;
    let early = pref_start.saturating_sub(start_u);
    let late = end_u.saturating_sub(pref_finish);
    Ok(early.max(late))
}

/// Total discomfort `sum_j alpha d_j^2 + beta d_j + delta` over task shifts.
pub fn discomfort_cost(shifts: &[f64], coeffs: &DiscomfortCoefficients) -> Result<f64, ComfortError> {
    let mut total = 0.0;
    for &shift in shifts {
        if shift < 0.0 {
            return Err(ComfortError::NegativeShift { shift });
        }
        total += coeffs.alpha * shift * shift + coeffs.beta * shift + coeffs.delta;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> TimeGrid {
        TimeGrid::default()
    }

    /// Admitted window [0, 24], preferred and duration given in hours.
    fn task_pref(pref_start_h: f64, pref_finish_h: f64, duration_h: f64) -> Task {
        let g = grid();
        Task {
            id: "t".into(),
            power_kw: 1.0,
            duration_slots: g.hours_to_slots(duration_h).unwrap(),
            earliest_start_slot: 0,
            latest_finish_slot: 48,
            preferred_start_slot: g.hour_to_boundary(pref_start_h).unwrap() % 48,
            preferred_finish_slot: g.hour_to_boundary(pref_finish_h).unwrap(),
        }
    }

    #[test]
    fn run_filling_preferred_window_has_zero_shift() {
        let t = task_pref(10.0, 12.0, 2.0);
        assert_eq!(time_shift(&t, 20, &grid()).unwrap(), 0);
    }

    #[test]
    fn early_start_charged_to_preferred_start() {
        // STP=10:00, FTP=14:00, D=2h, start 08:00 -> 2 h = 4 slots
        let t = task_pref(10.0, 14.0, 2.0);
        assert_eq!(time_shift(&t, 16, &grid()).unwrap(), 4);
    }

    #[test]
    fn late_finish_charged_past_preferred_finish() {
        // STP=10:00, FTP=14:00, D=2h, start 13:00 -> ends 15:00, 1 h = 2 slots
        let t = task_pref(10.0, 14.0, 2.0);
        assert_eq!(time_shift(&t, 26, &grid()).unwrap(), 2);
    }

    #[test]
    fn double_overhang_takes_larger_side() {
        // STP=10:00, FTP=11:00, D=4h, start 09:00: early 1 h, late 2 h -> 2 h
        let t = task_pref(10.0, 11.0, 4.0);
        let shift = time_shift(&t, 18, &grid()).unwrap();
        // oracle: max of the two single-sided expressions
        let early = 20usize.saturating_sub(18);
        let late = (18 + 8usize).saturating_sub(22);
        assert_eq!(shift, early.max(late));
        assert_eq!(shift, 4);
    }

    #[test]
    fn wrapped_window_shift_uses_circular_distance() {
        let g = grid();
        // admitted [18, 8] wrapping midnight, preferred [23, 2], duration 1 h
        let t = Task {
            id: "ev".into(),
            power_kw: 1.0,
            duration_slots: 2,
            earliest_start_slot: 36,
            latest_finish_slot: 16,
            preferred_start_slot: 46,
            preferred_finish_slot: 4,
        };
        assert_eq!(time_shift(&t, 46, &g).unwrap(), 0);
        assert_eq!(time_shift(&t, 1, &g).unwrap(), 0); // inside, past midnight
        assert_eq!(time_shift(&t, 44, &g).unwrap(), 2); // 1 h early
        assert_eq!(time_shift(&t, 4, &g).unwrap(), 2); // finishes 1 h late
    }

    #[test]
    fn infeasible_start_rejected() {
        let t = task_pref(10.0, 12.0, 2.0);
        assert!(time_shift(&t, 47, &grid()).is_err());
    }

    #[test]
    fn zero_shifts_zero_delta_cost_nothing() {
        let coeffs = DiscomfortCoefficients::default();
        assert_eq!(discomfort_cost(&[0.0, 0.0, 0.0], &coeffs).unwrap(), 0.0);
    }

    #[test]
    fn single_quadratic_term() {
        let coeffs = DiscomfortCoefficients::new(1.0, 0.0, 0.0).unwrap();
        assert_eq!(discomfort_cost(&[3.0], &coeffs).unwrap(), 9.0);
    }

    #[test]
    fn term_by_term_oracle() {
        let coeffs = DiscomfortCoefficients::new(1.0, 2.0, 0.5).unwrap();
        let cost = discomfort_cost(&[1.0, 2.0], &coeffs).unwrap();
        assert!((cost - 12.0).abs() < 1e-12);
    }

    #[test]
    fn negative_shift_rejected() {
        let coeffs = DiscomfortCoefficients::default();
        assert!(matches!(
            discomfort_cost(&[-1.0], &coeffs),
            Err(ComfortError::NegativeShift { .. })
        ));
    }

    #[test]
    fn rescaled_units_preserve_quadratic_cost() {
        // halving slot width doubles the shift; quartering alpha keeps the cost
        let coarse = DiscomfortCoefficients::new(1.0, 0.0, 0.0).unwrap();
        let fine = DiscomfortCoefficients::new(0.25, 0.0, 0.0).unwrap();
        let c1 = discomfort_cost(&[3.0], &coarse).unwrap();
        let c2 = discomfort_cost(&[6.0], &fine).unwrap();
        assert!((c1 - c2).abs() < 1e-12);
    }
}
