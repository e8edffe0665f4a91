//! Player definitions and objective-vector evaluation.
//!
//! Every player minimizes a two-component vector: daily energy cost and
//! discomfort. Prosumers additionally earn revenue on their generation,
//! subtracted from the cost component, which may therefore go negative.

use thiserror::Error;

use crate::comfort::{discomfort_cost, time_shift, ComfortError, DiscomfortCoefficients};
use crate::domain::{
    is_feasible_start, ConsumptionProfile, DomainError, LoadVector, Schedule, Task, TimeGrid,
};
use crate::pricing::{prosumer_revenue, CostCoefficients, GenerationProfile, PricingError};

#[derive(Debug, Error)]
pub enum ObjectiveError {
    #[error("infeasible schedule: {0}")]
    InfeasibleSchedule(#[from] DomainError),
    #[error(transparent)]
    Pricing(#[from] PricingError),
    #[error(transparent)]
    Comfort(#[from] ComfortError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlayerKind {
    /// Pure consumer: adjusts consumption only.
    Consumer,
    /// Prosumer: consumer with generation earning revenue.
    Prosumer,
}

/// One household agent with its schedulable tasks.
#[derive(Debug, Clone)]
pub struct Player {
    pub id: String,
    pub kind: PlayerKind,
    pub tasks: Vec<Task>,
    pub generation: GenerationProfile,
    pub discomfort_coeffs: DiscomfortCoefficients,
}

impl Player {
    pub fn consumer(
        id: impl Into<String>,
        tasks: Vec<Task>,
        grid: &TimeGrid,
        discomfort_coeffs: DiscomfortCoefficients,
    ) -> Self {
        Player {
            id: id.into(),
            kind: PlayerKind::Consumer,
            tasks,
            generation: GenerationProfile::zero(grid),
            discomfort_coeffs,
        }
    }

    pub fn prosumer(
        id: impl Into<String>,
        tasks: Vec<Task>,
        generation: GenerationProfile,
        discomfort_coeffs: DiscomfortCoefficients,
    ) -> Self {
        Player {
            id: id.into(),
            kind: PlayerKind::Prosumer,
            tasks,
            generation,
            discomfort_coeffs,
        }
    }

    /// Gene vector (one start slot per task, in task order) from a schedule.
    pub fn genes_from_schedule(&self, schedule: &Schedule) -> Result<Vec<usize>, DomainError> {
        self.tasks
            .iter()
            .map(|task| {
                schedule
                    .start_slots
                    .get(&task.id)
                    .copied()
                    .ok_or_else(|| DomainError::MissingTask {
                        id: task.id.clone(),
                    })
            })
            .collect()
    }

    pub fn schedule_from_genes(&self, genes: &[usize]) -> Schedule {
        let mut schedule = Schedule::new();
        for (task, &start) in self.tasks.iter().zip(genes) {
            schedule.start_slots.insert(task.id.clone(), start);
        }
        schedule
    }
}

/// (energy cost, discomfort) pair, both minimized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObjectiveVector {
    pub cost: f64,
    pub discomfort: f64,
}

impl ObjectiveVector {
    /// Weighted sum on raw values; the scalarization used by the game loop.
    pub fn scalarized(&self, w_cost: f64, w_discomfort: f64) -> f64 {
        w_cost * self.cost + w_discomfort * self.discomfort
    }
}

/// Pareto dominance under minimization: `a` is no worse in both components
/// and strictly better in at least one.
pub fn dominates(a: &ObjectiveVector, b: &ObjectiveVector) -> bool {
    a.cost <= b.cost
        && a.discomfort <= b.discomfort
        && (a.cost < b.cost || a.discomfort < b.discomfort)
}

/// Evaluates one player's gene vector against the frozen load of the other
/// players. The price is re-derived from others' load plus the candidate's
/// own profile, so a player's own consumption raises the price it pays.
pub fn evaluate_genes(
    player: &Player,
    genes: &[usize],
    others_load: &LoadVector,
    coeffs: &CostCoefficients,
    grid: &TimeGrid,
) -> Result<ObjectiveVector, ObjectiveError> {
    let n = grid.slots_per_day();
    if others_load.len() != n || coeffs.len() != n {
        return Err(ObjectiveError::Pricing(PricingError::LengthMismatch {
            expected: n,
            got: others_load.len(),
        }));
    }
    let mut own = ConsumptionProfile::zeros(grid);
    let mut shifts = Vec::with_capacity(player.tasks.len());
    for (task, &start) in player.tasks.iter().zip(genes) {
        if !is_feasible_start(task, start, grid) {
            return Err(ObjectiveError::InfeasibleSchedule(
                DomainError::InfeasibleStart {
                    id: task.id.clone(),
                    start_slot: start,
                },
            ));
        }
        own.accumulate_run(task, start, grid);
        shifts.push(time_shift(task, start, grid)? as f64);
    }
    let mut cost = 0.0;
    for t in 0..n {
        let own_t = own.energy_kwh()[t];
        let price = coeffs.a()[t] * (others_load.energy_kwh()[t] + own_t) + coeffs.b()[t];
        cost += price * own_t;
    }
    if player.kind == PlayerKind::Prosumer {
        cost -= prosumer_revenue(&player.generation);
    }
    let discomfort = discomfort_cost(&shifts, &player.discomfort_coeffs)?;
    Ok(ObjectiveVector { cost, discomfort })
}

/// Schedule-level entry point; see [`evaluate_genes`].
pub fn evaluate(
    player: &Player,
    schedule: &Schedule,
    others_load: &LoadVector,
    coeffs: &CostCoefficients,
    grid: &TimeGrid,
) -> Result<ObjectiveVector, ObjectiveError> {
    let genes = player.genes_from_schedule(schedule)?;
    evaluate_genes(player, &genes, others_load, coeffs, grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::Task;

    fn grid() -> TimeGrid {
        TimeGrid::default()
    }

    fn iron() -> Task {
        Task {
            id: "iron".into(),
            power_kw: 1.2,
            duration_slots: 2,
            earliest_start_slot: 20,
            latest_finish_slot: 44,
            preferred_start_slot: 24,
            preferred_finish_slot: 28,
        }
    }

    #[test]
    fn preferred_starts_have_zero_discomfort() {
        let g = grid();
        let player = Player::consumer("c1", vec![iron()], &g, DiscomfortCoefficients::default());
        let obj = evaluate_genes(
            &player,
            &[24],
            &LoadVector::zeros(&g),
            &CostCoefficients::flat(&g, 0.0, 0.1, 0.0).unwrap(),
            &g,
        )
        .unwrap();
        assert_eq!(obj.discomfort, 0.0);
    }

    #[test]
    fn zero_generation_prosumer_equals_consumer() {
        let g = grid();
        let coeffs = CostCoefficients::flat(&g, 0.01, 0.1, 0.0).unwrap();
        let load = LoadVector::from_energies(vec![3.0; 48]);
        let c = Player::consumer("c", vec![iron()], &g, DiscomfortCoefficients::default());
        let p = Player::prosumer(
            "p",
            vec![iron()],
            GenerationProfile::solar(&g, 7.0, 19.0, 2.0, 0.1).scaled(0.0),
            DiscomfortCoefficients::default(),
        );
        let oc = evaluate_genes(&c, &[30], &load, &coeffs, &g).unwrap();
        let op = evaluate_genes(&p, &[30], &load, &coeffs, &g).unwrap();
        assert_eq!(oc, op);
    }

    #[test]
    fn flat_price_cost_matches_hand_computation() {
        let g = grid();
        let coeffs = CostCoefficients::flat(&g, 0.0, 0.25, 0.0).unwrap();
        let player = Player::consumer("c1", vec![iron()], &g, DiscomfortCoefficients::default());
        let obj = evaluate_genes(&player, &[30], &LoadVector::zeros(&g), &coeffs, &g).unwrap();
        // one slot at a time: two slots of 0.6 kWh at 0.25 each
        let expected = 0.25 * 0.6 + 0.25 * 0.6;
        assert!((obj.cost - expected).abs() < 1e-12);
    }

    #[test]
    fn discomfort_ignores_price_and_load() {
        let g = grid();
        let player = Player::consumer("c1", vec![iron()], &g, DiscomfortCoefficients::default());
        let cheap = CostCoefficients::flat(&g, 0.0, 0.01, 0.0).unwrap();
        let dear = CostCoefficients::flat(&g, 0.05, 0.9, 0.0).unwrap();
        let o1 = evaluate_genes(&player, &[20], &LoadVector::zeros(&g), &cheap, &g).unwrap();
        let o2 = evaluate_genes(
            &player,
            &[20],
            &LoadVector::from_energies(vec![9.0; 48]),
            &dear,
            &g,
        )
        .unwrap();
        assert_eq!(o1.discomfort, o2.discomfort);
        assert!(o2.cost > o1.cost);
    }

    #[test]
    fn infeasible_gene_rejected() {
        let g = grid();
        let player = Player::consumer("c1", vec![iron()], &g, DiscomfortCoefficients::default());
        assert!(matches!(
            evaluate_genes(
                &player,
                &[0],
                &LoadVector::zeros(&g),
                &CostCoefficients::flat(&g, 0.0, 0.1, 0.0).unwrap(),
                &g
            ),
            Err(ObjectiveError::InfeasibleSchedule(_))
        ));
    }

    #[test]
    fn dominance_basic_cases() {
        let a = ObjectiveVector { cost: 1.0, discomfort: 1.0 };
        let b = ObjectiveVector { cost: 2.0, discomfort: 2.0 };
        let c = ObjectiveVector { cost: 1.0, discomfort: 3.0 };
        let d = ObjectiveVector { cost: 3.0, discomfort: 1.0 };
        assert!(dominates(&a, &b));
        assert!(!dominates(&b, &a));
        assert!(!dominates(&c, &d));
        assert!(!dominates(&d, &c));
        assert!(!dominates(&a, &a));
    }
}
