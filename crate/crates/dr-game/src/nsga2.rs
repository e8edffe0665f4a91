//! NSGA-II solver over integer start-slot genes.
//!
//! Each chromosome carries one start slot per task. Variation is a per-gene
//! uniform crossover plus a mutation that resamples a gene uniformly from the
//! task's feasible starts, so offspring stay feasible; a clamping repair
//! backs this up. Environmental selection is the usual elitist truncation on
//! (non-domination rank, crowding distance).

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::domain::{feasible_starts, validate_task, DomainError, LoadVector, TimeGrid};
use crate::objectives::{dominates, evaluate_genes, ObjectiveError, ObjectiveVector, Player};
use crate::pricing::CostCoefficients;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("invalid solver config: {0}")]
    InvalidConfig(String),
    #[error("player {id} is infeasible: {source}")]
    InfeasiblePlayer { id: String, source: DomainError },
    #[error("chromosome has no evaluated objectives")]
    UnevaluatedChromosome,
    #[error("empty Pareto front")]
    EmptyFront,
    #[error(transparent)]
    Objective(#[from] ObjectiveError),
}

/// A candidate schedule in genotype form.
#[derive(Debug, Clone, PartialEq)]
pub struct Chromosome {
    /// One start slot per task, in the player's task order.
    pub genes: Vec<usize>,
    pub objectives: Option<ObjectiveVector>,
    pub rank: usize,
    pub crowding: f64,
}

impl Chromosome {
    pub fn new(genes: Vec<usize>) -> Self {
        Chromosome {
            genes,
            objectives: None,
            rank: 0,
            crowding: 0.0,
        }
    }

    pub fn objectives(&self) -> Result<&ObjectiveVector, SolverError> {
        self.objectives
            .as_ref()
            .ok_or(SolverError::UnevaluatedChromosome)
    }
}

/// NSGA-II hyperparameters.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub population_size: usize,
    pub generations: usize,
    pub crossover_rate: f64,
    /// Per-gene mutation probability; `None` means `1 / task count`.
    pub mutation_rate: Option<f64>,
    pub tournament_size: usize,
    pub rng_seed: u64,
    /// `(w_cost, w_discomfort)` used by [`select_strategy`].
    pub selection_weights: (f64, f64),
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            population_size: 100,
            generations: 200,
            crossover_rate: 0.9,
            mutation_rate: None,
            tournament_size: 2,
            rng_seed: 0,
            selection_weights: (0.5, 0.5),
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<(), SolverError> {
        if self.population_size < 4 || self.population_size % 2 != 0 {
            return Err(SolverError::InvalidConfig(format!(
                "population_size must be even and >= 4, got {}",
                self.population_size
            )));
        }
        if !(0.0..=1.0).contains(&self.crossover_rate) {
            return Err(SolverError::InvalidConfig(format!(
                "crossover_rate must be in [0, 1], got {}",
                self.crossover_rate
            )));
        }
        if let Some(m) = self.mutation_rate {
            if !(0.0..=1.0).contains(&m) {
                return Err(SolverError::InvalidConfig(format!(
                    "mutation_rate must be in [0, 1], got {m}"
                )));
            }
        }
        if self.tournament_size == 0 {
            return Err(SolverError::InvalidConfig(
                "tournament_size must be >= 1".into(),
            ));
        }
        let (wc, wd) = self.selection_weights;
        if wc < 0.0 || wd < 0.0 || (wc == 0.0 && wd == 0.0) {
            return Err(SolverError::InvalidConfig(format!(
                "selection_weights must be non-negative and not both zero, got ({wc}, {wd})"
            )));
        }
        Ok(())
    }
}

/// Deduplicated rank-0 set of an NSGA-II run.
#[derive(Debug, Clone)]
pub struct ParetoFront {
    pub members: Vec<Chromosome>,
}

impl ParetoFront {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Member minimizing the raw weighted sum of objectives. Deterministic:
    /// ties go to lower raw cost, then lexicographically smaller genes.
    pub fn min_scalarized(&self, w_cost: f64, w_discomfort: f64) -> Result<&Chromosome, SolverError> {
        self.members
            .iter()
            .min_by(|a, b| {
                let (oa, ob) = (a.objectives.as_ref().unwrap(), b.objectives.as_ref().unwrap());
                let sa = oa.scalarized(w_cost, w_discomfort);
                let sb = ob.scalarized(w_cost, w_discomfort);
                sa.partial_cmp(&sb)
                    .unwrap_or(Ordering::Equal)
                    .then_with(|| oa.cost.partial_cmp(&ob.cost).unwrap_or(Ordering::Equal))
                    .then_with(|| a.genes.cmp(&b.genes))
            })
            .ok_or(SolverError::EmptyFront)
    }
}

/// Fast non-dominated sort. Returns fronts as index lists into `population`;
/// front 0 is the non-dominated set, later fronts peel the rest.
pub fn non_dominated_sort(population: &[Chromosome]) -> Result<Vec<Vec<usize>>, SolverError> {
    let n = population.len();
    let objectives: Vec<&ObjectiveVector> = population
        .iter()
        .map(|c| c.objectives())
        .collect::<Result<_, _>>()?;
    let mut dominated_by: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut domination_count = vec![0usize; n];
    for p in 0..n {
        for q in (p + 1)..n {
            if dominates(objectives[p], objectives[q]) {
                dominated_by[p].push(q);
                domination_count[q] += 1;
            } else if dominates(objectives[q], objectives[p]) {
                dominated_by[q].push(p);
                domination_count[p] += 1;
            }
        }
    }
    let mut fronts = Vec::new();
    let mut current: Vec<usize> = (0..n).filter(|&i| domination_count[i] == 0).collect();
    while !current.is_empty() {
        let mut next = Vec::new();
        for &p in &current {
            for &q in &dominated_by[p] {
                domination_count[q] -= 1;
                if domination_count[q] == 0 {
                    next.push(q);
                }
            }
        }
        next.sort_unstable();
        fronts.push(std::mem::take(&mut current));
        current = next;
    }
    Ok(fronts)
}

/// Crowding distance of each member of one front, in front order. Extremes
/// of each objective get infinity; an objective with zero spread contributes
/// nothing.
pub fn crowding_distance(front: &[&ObjectiveVector]) -> Vec<f64> {
    let n = front.len();
    let mut distance = vec![0.0; n];
    if n <= 2 {
        return vec![f64::INFINITY; n];
    }
    for objective in 0..2 {
        let value = |i: usize| match objective {
            0 => front[i].cost,
            _ => front[i].discomfort,
        };
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| value(a).partial_cmp(&value(b)).unwrap_or(Ordering::Equal));
        let range = value(order[n - 1]) - value(order[0]);
        distance[order[0]] = f64::INFINITY;
        distance[order[n - 1]] = f64::INFINITY;
        if range > 0.0 {
            for w in 1..n - 1 {
                let gap = (value(order[w + 1]) - value(order[w - 1])) / range;
                distance[order[w]] += gap;
            }
        }
    }
    distance
}

/// Per-player solver state shared across one `evolve` run.
struct Instance<'a> {
    player: &'a Player,
    others_load: &'a LoadVector,
    coeffs: &'a CostCoefficients,
    grid: &'a TimeGrid,
    feasible: Vec<Vec<usize>>,
    mutation_rate: f64,
}

impl<'a> Instance<'a> {
    fn new(
        player: &'a Player,
        others_load: &'a LoadVector,
        coeffs: &'a CostCoefficients,
        grid: &'a TimeGrid,
        cfg: &SolverConfig,
    ) -> Result<Self, SolverError> {
        let mut feasible = Vec::with_capacity(player.tasks.len());
        for task in &player.tasks {
            validate_task(task, grid).map_err(|source| SolverError::InfeasiblePlayer {
                id: player.id.clone(),
                source,
            })?;
            feasible.push(feasible_starts(task, grid));
        }
        let mutation_rate = cfg
            .mutation_rate
            .unwrap_or(1.0 / player.tasks.len().max(1) as f64);
        Ok(Instance {
            player,
            others_load,
            coeffs,
            grid,
            feasible,
            mutation_rate,
        })
    }

    fn evaluate(&self, chromosome: &mut Chromosome) -> Result<(), SolverError> {
        let obj = evaluate_genes(
            self.player,
            &chromosome.genes,
            self.others_load,
            self.coeffs,
            self.grid,
        )?;
        chromosome.objectives = Some(obj);
        Ok(())
    }

    /// Clamps every gene to its task's nearest feasible start (circular).
    fn repair(&self, genes: &mut [usize]) {
        let n = self.grid.slots_per_day();
        for (gene, starts) in genes.iter_mut().zip(&self.feasible) {
            if starts.contains(gene) {
                continue;
            }
            let g = *gene;
            *gene = *starts
                .iter()
                .min_by_key(|&&s| {
                    let d = (s + n - g) % n;
                    d.min(n - d)
                })
                .expect("valid task has feasible starts");
        }
    }

    fn random_genes(&self, rng: &mut ChaCha8Rng) -> Vec<usize> {
        self.feasible
            .iter()
            .map(|starts| starts[rng.gen_range(0..starts.len())])
            .collect()
    }

    fn preferred_genes(&self) -> Vec<usize> {
        self.player
            .tasks
            .iter()
            .map(|t| t.preferred_start_slot)
            .collect()
    }

    fn earliest_genes(&self) -> Vec<usize> {
        self.feasible.iter().map(|starts| starts[0]).collect()
    }
}

fn tournament_pick<'a>(
    population: &'a [Chromosome],
    size: usize,
    rng: &mut ChaCha8Rng,
) -> &'a Chromosome {
    let mut best = &population[rng.gen_range(0..population.len())];
    for _ in 1..size {
        let challenger = &population[rng.gen_range(0..population.len())];
        let better = match challenger.rank.cmp(&best.rank) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => challenger.crowding > best.crowding,
        };
        if better {
            best = challenger;
        }
    }
    best
}

/// Assigns ranks and crowding over the whole population, then truncates to
/// `target` by (rank, crowding).
fn environmental_selection(
    mut population: Vec<Chromosome>,
    target: usize,
) -> Result<Vec<Chromosome>, SolverError> {
    let fronts = non_dominated_sort(&population)?;
    for (rank, front) in fronts.iter().enumerate() {
        let objs: Vec<&ObjectiveVector> = front
            .iter()
            .map(|&i| population[i].objectives.as_ref().unwrap())
            .collect();
        let distances = crowding_distance(&objs);
        for (&i, &d) in front.iter().zip(&distances) {
            population[i].rank = rank;
            population[i].crowding = d;
        }
    }
    let mut survivors = Vec::with_capacity(target);
    for front in &fronts {
        if survivors.len() + front.len() <= target {
            survivors.extend(front.iter().copied());
        } else {
            let mut rest: Vec<usize> = front.clone();
            // larger crowding first; index order breaks ties deterministically
            rest.sort_by(|&a, &b| {
                population[b]
                    .crowding
                    .partial_cmp(&population[a].crowding)
                    .unwrap_or(Ordering::Equal)
                    .then(a.cmp(&b))
            });
            survivors.extend(rest.into_iter().take(target - survivors.len()));
            break;
        }
    }
    survivors.sort_unstable();
    let mut keep = vec![false; population.len()];
    for &i in &survivors {
        keep[i] = true;
    }
    let mut out = Vec::with_capacity(target);
    for (i, c) in population.into_iter().enumerate() {
        if keep[i] {
            out.push(c);
        }
    }
    Ok(out)
}

/// Runs NSGA-II for one player against a frozen others-load and returns the
/// deduplicated rank-0 front. Deterministic given `cfg.rng_seed`.
pub fn evolve(
    player: &Player,
    others_load: &LoadVector,
    coeffs: &CostCoefficients,
    grid: &TimeGrid,
    cfg: &SolverConfig,
) -> Result<ParetoFront, SolverError> {
    evolve_seeded(player, others_load, coeffs, grid, cfg, &[])
}

/// [`evolve`] with extra seed individuals injected into the initial
/// population (the game loop injects the player's incumbent strategy).
pub fn evolve_seeded(
    player: &Player,
    others_load: &LoadVector,
    coeffs: &CostCoefficients,
    grid: &TimeGrid,
    cfg: &SolverConfig,
    extra_seeds: &[Vec<usize>],
) -> Result<ParetoFront, SolverError> {
    cfg.validate()?;
    let instance = Instance::new(player, others_load, coeffs, grid, cfg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);

    let mut population: Vec<Chromosome> = Vec::with_capacity(cfg.population_size);
    population.push(Chromosome::new(instance.preferred_genes()));
    population.push(Chromosome::new(instance.earliest_genes()));
    for seed in extra_seeds {
        if population.len() >= cfg.population_size {
            break;
        }
        let mut genes = seed.clone();
        instance.repair(&mut genes);
        population.push(Chromosome::new(genes));
    }
    while population.len() < cfg.population_size {
        population.push(Chromosome::new(instance.random_genes(&mut rng)));
    }
    for c in &mut population {
        instance.evaluate(c)?;
    }
    population = environmental_selection(population, cfg.population_size)?;

    for _ in 0..cfg.generations {
        let mut offspring = Vec::with_capacity(cfg.population_size);
        while offspring.len() < cfg.population_size {
            let p1 = tournament_pick(&population, cfg.tournament_size, &mut rng);
            let p2 = tournament_pick(&population, cfg.tournament_size, &mut rng);
            let mut g1 = p1.genes.clone();
            let mut g2 = p2.genes.clone();
            if rng.gen_bool(cfg.crossover_rate) {
                for (a, b) in g1.iter_mut().zip(g2.iter_mut()) {
                    if rng.gen_bool(0.5) {
                        std::mem::swap(a, b);
                    }
                }
            }
            for genes in [&mut g1, &mut g2] {
                for (gene, starts) in genes.iter_mut().zip(&instance.feasible) {
                    if rng.gen_bool(instance.mutation_rate) {
                        *gene = starts[rng.gen_range(0..starts.len())];
                    }
                }
                instance.repair(genes);
            }
            offspring.push(Chromosome::new(g1));
            if offspring.len() < cfg.population_size {
                offspring.push(Chromosome::new(g2));
            }
        }
        for c in &mut offspring {
            instance.evaluate(c)?;
        }
        population.extend(offspring);
        population = environmental_selection(population, cfg.population_size)?;
    }

    let mut members: Vec<Chromosome> = population.into_iter().filter(|c| c.rank == 0).collect();
    members.sort_by(|a, b| a.genes.cmp(&b.genes));
    members.dedup_by(|a, b| a.genes == b.genes);
    Ok(ParetoFront { members })
}

/// Picks the acting strategy from a front by min-max normalized weighted sum.
/// Ties break to lower raw cost, then lexicographically smaller genes.
pub fn select_strategy(
    front: &ParetoFront,
    weights: (f64, f64),
) -> Result<&Chromosome, SolverError> {
    if front.is_empty() {
        return Err(SolverError::EmptyFront);
    }
    let objs: Vec<&ObjectiveVector> = front
        .members
        .iter()
        .map(|c| c.objectives())
        .collect::<Result<_, _>>()?;
    let (min_c, max_c) = min_max(objs.iter().map(|o| o.cost));
    let (min_d, max_d) = min_max(objs.iter().map(|o| o.discomfort));
    let normalize = |v: f64, min: f64, max: f64| {
        if max > min {
            (v - min) / (max - min)
        } else {
            0.0
        }
    };
    let score = |o: &ObjectiveVector| {
        weights.0 * normalize(o.cost, min_c, max_c) + weights.1 * normalize(o.discomfort, min_d, max_d)
    };
    let best = front
        .members
        .iter()
        .enumerate()
        .min_by(|(i, a), (j, b)| {
            score(objs[*i])
                .partial_cmp(&score(objs[*j]))
                .unwrap_or(Ordering::Equal)
                .then_with(|| objs[*i].cost.partial_cmp(&objs[*j].cost).unwrap_or(Ordering::Equal))
                .then_with(|| a.genes.cmp(&b.genes))
        })
        .map(|(_, c)| c)
        .expect("front is non-empty");
    Ok(best)
}

fn min_max(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comfort::DiscomfortCoefficients;
    use crate::domain::Task;

    fn grid() -> TimeGrid {
        TimeGrid::default()
    }

    fn chrom(cost: f64, discomfort: f64) -> Chromosome {
        Chromosome {
            genes: vec![],
            objectives: Some(ObjectiveVector { cost, discomfort }),
            rank: 0,
            crowding: 0.0,
        }
    }

    #[test]
    fn identical_vectors_form_single_front() {
        let pop: Vec<Chromosome> = (0..5).map(|_| chrom(1.0, 1.0)).collect();
        let fronts = non_dominated_sort(&pop).unwrap();
        assert_eq!(fronts.len(), 1);
        assert_eq!(fronts[0].len(), 5);
    }

    #[test]
    fn dominated_chain_gives_singleton_fronts() {
        let pop = vec![chrom(1.0, 1.0), chrom(2.0, 2.0), chrom(3.0, 3.0)];
        let fronts = non_dominated_sort(&pop).unwrap();
        assert_eq!(fronts, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn random_vectors_match_peeling_oracle() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let pop: Vec<Chromosome> = (0..50)
            .map(|_| chrom(rng.gen_range(0.0..10.0), rng.gen_range(0.0..10.0)))
            .collect();
        let fronts = non_dominated_sort(&pop).unwrap();

        // brute-force iterated Pareto peeling
        let mut remaining: Vec<usize> = (0..pop.len()).collect();
        let mut expected = Vec::new();
        while !remaining.is_empty() {
            let level: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&i| {
                    !remaining.iter().any(|&j| {
                        dominates(
                            pop[j].objectives.as_ref().unwrap(),
                            pop[i].objectives.as_ref().unwrap(),
                        )
                    })
                })
                .collect();
            remaining.retain(|i| !level.contains(i));
            expected.push(level);
        }
        let as_sets = |fs: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            fs.iter()
                .map(|f| {
                    let mut f = f.clone();
                    f.sort_unstable();
                    f
                })
                .collect()
        };
        assert_eq!(as_sets(&fronts), as_sets(&expected));
    }

    #[test]
    fn unevaluated_chromosome_rejected() {
        let pop = vec![Chromosome::new(vec![0])];
        assert!(matches!(
            non_dominated_sort(&pop),
            Err(SolverError::UnevaluatedChromosome)
        ));
    }

    #[test]
    fn singleton_front_gets_infinite_crowding() {
        let o = ObjectiveVector { cost: 1.0, discomfort: 2.0 };
        assert_eq!(crowding_distance(&[&o]), vec![f64::INFINITY]);
    }

    #[test]
    fn equally_spaced_middle_distance_is_two() {
        let a = ObjectiveVector { cost: 0.0, discomfort: 2.0 };
        let b = ObjectiveVector { cost: 1.0, discomfort: 1.0 };
        let c = ObjectiveVector { cost: 2.0, discomfort: 0.0 };
        let d = crowding_distance(&[&a, &b, &c]);
        assert_eq!(d[0], f64::INFINITY);
        assert_eq!(d[2], f64::INFINITY);
        assert!((d[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_objective_contributes_zero() {
        let a = ObjectiveVector { cost: 0.0, discomfort: 1.0 };
        let b = ObjectiveVector { cost: 1.0, discomfort: 1.0 };
        let c = ObjectiveVector { cost: 2.0, discomfort: 1.0 };
        let d = crowding_distance(&[&a, &b, &c]);
        assert!((d[1] - 1.0).abs() < 1e-12); // only the cost dimension counts
    }

    fn window_task(id: &str, power: f64, start: usize, finish: usize, duration: usize, pref: usize) -> Task {
        Task {
            id: id.into(),
            power_kw: power,
            duration_slots: duration,
            earliest_start_slot: start,
            latest_finish_slot: finish,
            preferred_start_slot: pref,
            preferred_finish_slot: pref + duration + 1,
        }
    }

    fn small_cfg(seed: u64) -> SolverConfig {
        SolverConfig {
            population_size: 20,
            generations: 60,
            rng_seed: seed,
            ..SolverConfig::default()
        }
    }

    #[test]
    fn single_feasible_start_degenerate_front() {
        let g = grid();
        let task = Task {
            id: "pinned".into(),
            power_kw: 1.0,
            duration_slots: 4,
            earliest_start_slot: 10,
            latest_finish_slot: 14,
            preferred_start_slot: 10,
            preferred_finish_slot: 14,
        };
        let player = Player::consumer("c", vec![task], &g, DiscomfortCoefficients::default());
        let coeffs = CostCoefficients::flat(&g, 0.01, 0.1, 0.0).unwrap();
        let front = evolve(&player, &LoadVector::zeros(&g), &coeffs, &g, &small_cfg(1)).unwrap();
        assert_eq!(front.len(), 1);
        assert_eq!(front.members[0].genes, vec![10]);
    }

    #[test]
    fn small_instance_front_matches_enumeration() {
        let g = grid();
        // two tasks, 6 and 5 feasible starts
        let t1 = window_task("t1", 2.0, 10, 20, 5, 12);
        let t2 = window_task("t2", 1.0, 30, 38, 4, 33);
        let player = Player::consumer("c", vec![t1, t2], &g, DiscomfortCoefficients::default());
        // uneven congestion so cost varies with placement
        let others = LoadVector::from_energies((0..48).map(|t| (t % 7) as f64).collect());
        let coeffs = CostCoefficients::flat(&g, 0.02, 0.1, 0.0).unwrap();
        let front = evolve(&player, &others, &coeffs, &g, &small_cfg(9)).unwrap();

        // brute-force Pareto set over the full enumerable schedule space
        let mut all = Vec::new();
        for s1 in feasible_starts(&player.tasks[0], &g) {
            for s2 in feasible_starts(&player.tasks[1], &g) {
                let obj = evaluate_genes(&player, &[s1, s2], &others, &coeffs, &g).unwrap();
                all.push(obj);
            }
        }
        let pareto: Vec<&ObjectiveVector> = all
            .iter()
            .filter(|o| !all.iter().any(|p| dominates(p, o)))
            .collect();
        let mut expected: Vec<(f64, f64)> = pareto.iter().map(|o| (o.cost, o.discomfort)).collect();
        expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
        expected.dedup();
        let mut got: Vec<(f64, f64)> = front
            .members
            .iter()
            .map(|c| {
                let o = c.objectives.as_ref().unwrap();
                (o.cost, o.discomfort)
            })
            .collect();
        got.sort_by(|a, b| a.partial_cmp(b).unwrap());
        got.dedup();
        assert_eq!(got, expected);
    }

    #[test]
    fn same_seed_gives_identical_front() {
        let g = grid();
        let t1 = window_task("t1", 2.0, 10, 20, 5, 12);
        let t2 = window_task("t2", 1.0, 30, 38, 4, 33);
        let player = Player::consumer("c", vec![t1, t2], &g, DiscomfortCoefficients::default());
        let coeffs = CostCoefficients::flat(&g, 0.02, 0.1, 0.0).unwrap();
        let load = LoadVector::zeros(&g);
        let f1 = evolve(&player, &load, &coeffs, &g, &small_cfg(42)).unwrap();
        let f2 = evolve(&player, &load, &coeffs, &g, &small_cfg(42)).unwrap();
        assert_eq!(f1.members, f2.members);
    }

    #[test]
    fn front_members_mutually_non_dominated() {
        let g = grid();
        let t1 = window_task("t1", 2.0, 10, 20, 5, 12);
        let t2 = window_task("t2", 1.0, 30, 38, 4, 33);
        let player = Player::consumer("c", vec![t1, t2], &g, DiscomfortCoefficients::default());
        let coeffs = CostCoefficients::flat(&g, 0.02, 0.1, 0.0).unwrap();
        let front = evolve(&player, &LoadVector::zeros(&g), &coeffs, &g, &small_cfg(5)).unwrap();
        for a in &front.members {
            for b in &front.members {
                assert!(!dominates(
                    a.objectives.as_ref().unwrap(),
                    b.objectives.as_ref().unwrap()
                ));
            }
        }
    }

    #[test]
    fn select_strategy_degenerate_weights() {
        let front = ParetoFront {
            members: vec![
                Chromosome { genes: vec![0], ..chrom(10.0, 0.0) },
                Chromosome { genes: vec![1], ..chrom(6.0, 2.0) },
                Chromosome { genes: vec![2], ..chrom(2.0, 8.0) },
            ],
        };
        let best_cost = select_strategy(&front, (1.0, 0.0)).unwrap();
        assert_eq!(best_cost.objectives.as_ref().unwrap().cost, 2.0);
        let best_comfort = select_strategy(&front, (0.0, 1.0)).unwrap();
        assert_eq!(best_comfort.objectives.as_ref().unwrap().discomfort, 0.0);
    }

    #[test]
    fn select_strategy_normalized_hand_example() {
        // normalized costs {1, 0.5, 0}, discomforts {0, 0.25, 1}
        // scores at (0.5, 0.5): {0.5, 0.375, 0.5} -> picks (6, 2)
        let front = ParetoFront {
            members: vec![
                Chromosome { genes: vec![0], ..chrom(10.0, 0.0) },
                Chromosome { genes: vec![1], ..chrom(6.0, 2.0) },
                Chromosome { genes: vec![2], ..chrom(2.0, 8.0) },
            ],
        };
        let picked = select_strategy(&front, (0.5, 0.5)).unwrap();
        let o = picked.objectives.as_ref().unwrap();
        assert_eq!((o.cost, o.discomfort), (6.0, 2.0));
    }

    #[test]
    fn empty_front_rejected() {
        let front = ParetoFront { members: vec![] };
        assert!(matches!(
            select_strategy(&front, (0.5, 0.5)),
            Err(SolverError::EmptyFront)
        ));
    }

    #[test]
    fn invalid_config_rejected() {
        let cfg = SolverConfig {
            population_size: 5,
            ..SolverConfig::default()
        };
        assert!(cfg.validate().is_err());
        let cfg = SolverConfig {
            selection_weights: (0.0, 0.0),
            ..SolverConfig::default()
        };
        assert!(cfg.validate().is_err());
    }
}
