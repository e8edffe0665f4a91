//! Utility cost, real-time price signal, consumer energy cost and prosumer
//! revenue.
//!
//! The grid operator's per-slot cost is quadratic in the aggregate load,
//! `C_u = a l^2 + b l + c`. The real-time price charged to consumers is the
//! marginal cost `a l + b`, so `b` acts as the time-of-use base rate and `a`
//! as the congestion sensitivity.

use thiserror::Error;

use crate::domain::{ConsumptionProfile, LoadVector, TimeGrid};

#[derive(Debug, Error, PartialEq)]
pub enum PricingError {
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("coefficient {name} must be non-negative at slot {slot}")]
    NegativeCoefficient { name: &'static str, slot: usize },
}

/// Time-varying quadratic cost coefficients of the utility.
#[derive(Debug, Clone, PartialEq)]
pub struct CostCoefficients {
    a: Vec<f64>,
    b: Vec<f64>,
    c: Vec<f64>,
}

impl CostCoefficients {
    pub fn new(a: Vec<f64>, b: Vec<f64>, c: Vec<f64>) -> Result<Self, PricingError> {
        let expected = a.len();
        for (name, seq) in [("b", &b), ("c", &c)] {
            if seq.len() != expected {
                return Err(PricingError::LengthMismatch {
                    expected,
                    got: seq.len(),
                });
            }
            let _ = name;
        }
        for (name, seq) in [("a", &a), ("b", &b)] {
            if let Some(slot) = seq.iter().position(|&v| v < 0.0) {
                return Err(PricingError::NegativeCoefficient { name, slot });
            }
        }
        Ok(CostCoefficients { a, b, c })
    }

    /// Flat coefficients across all slots.
    pub fn flat(grid: &TimeGrid, a: f64, b: f64, c: f64) -> Result<Self, PricingError> {
        let n = grid.slots_per_day();
        Self::new(vec![a; n], vec![b; n], vec![c; n])
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    pub fn c(&self) -> &[f64] {
        &self.c
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn mean_b(&self) -> f64 {
        self.b.iter().sum::<f64>() / self.b.len() as f64
    }
}

/// Per-slot real-time price in currency/kWh.
#[derive(Debug, Clone, PartialEq)]
pub struct PriceSignal {
    price: Vec<f64>,
}

impl PriceSignal {
    pub fn from_prices(price: Vec<f64>) -> Self {
        PriceSignal { price }
    }

    pub fn price(&self) -> &[f64] {
        &self.price
    }

    pub fn len(&self) -> usize {
        self.price.len()
    }

    pub fn is_empty(&self) -> bool {
        self.price.is_empty()
    }
}

/// Per-slot generated energy and the revenue rate of a prosumer.
#[derive(Debug, Clone, PartialEq)]
pub struct GenerationProfile {
    energy_kwh: Vec<f64>,
    revenue_rate: f64,
}

impl GenerationProfile {
    pub fn new(energy_kwh: Vec<f64>, revenue_rate: f64) -> Self {
        GenerationProfile {
            energy_kwh,
            revenue_rate,
        }
    }

    pub fn zero(grid: &TimeGrid) -> Self {
        GenerationProfile {
            energy_kwh: vec![0.0; grid.slots_per_day()],
            revenue_rate: 0.0,
        }
    }

    pub fn energy_kwh(&self) -> &[f64] {
        &self.energy_kwh
    }

    pub fn revenue_rate(&self) -> f64 {
        self.revenue_rate
    }

    pub fn total_kwh(&self) -> f64 {
        self.energy_kwh.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.energy_kwh.iter().all(|&e| e == 0.0)
    }

    /// Solar-like half-sine generation over `[start_h, end_h)`.
    pub fn solar(grid: &TimeGrid, start_h: f64, end_h: f64, peak_kw: f64, revenue_rate: f64) -> Self {
        let n = grid.slots_per_day();
        let mut energy = vec![0.0; n];
        for (slot, e) in energy.iter_mut().enumerate() {
            let mid_h = (slot as f64 + 0.5) * grid.slot_hours();
            if mid_h >= start_h && mid_h < end_h {
                let phase = (mid_h - start_h) / (end_h - start_h);
                *e = peak_kw * (std::f64::consts::PI * phase).sin() * grid.slot_hours();
            }
        }
        GenerationProfile::new(energy, revenue_rate)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        GenerationProfile {
            energy_kwh: self.energy_kwh.iter().map(|e| e * factor).collect(),
            revenue_rate: self.revenue_rate,
        }
    }
}

fn check_len(expected: usize, got: usize) -> Result<(), PricingError> {
    if expected != got {
        return Err(PricingError::LengthMismatch { expected, got });
    }
    Ok(())
}

/// Per-slot utility generation cost `a l^2 + b l + c`.
pub fn utility_cost(load: &LoadVector, coeffs: &CostCoefficients) -> Result<Vec<f64>, PricingError> {
    check_len(coeffs.len(), load.len())?;
    Ok(load
        .energy_kwh()
        .iter()
        .enumerate()
        .map(|(t, &l)| coeffs.a[t] * l * l + coeffs.b[t] * l + coeffs.c[t])
        .collect())
}

/// Real-time price `a l + b`: marginal utility cost, non-decreasing in load.
pub fn realtime_price(load: &LoadVector, coeffs: &CostCoefficients) -> Result<PriceSignal, PricingError> {
    check_len(coeffs.len(), load.len())?;
    Ok(PriceSignal::from_prices(
        load.energy_kwh()
            .iter()
            .enumerate()
            .map(|(t, &l)| coeffs.a[t] * l + coeffs.b[t])
            .collect(),
    ))
}

/// Energy bill of one player: the per-slot price times its own consumption.
pub fn consumer_energy_cost(
    price: &PriceSignal,
    profile: &ConsumptionProfile,
) -> Result<f64, PricingError> {
    check_len(price.len(), profile.len())?;
    Ok(price
        .price()
        .iter()
        .zip(profile.energy_kwh())
        .map(|(p, e)| p * e)
        .sum())
}

/// Daily revenue of a prosumer: the revenue rate times generated energy.
pub fn prosumer_revenue(gen: &GenerationProfile) -> f64 {
    gen.energy_kwh()
        .iter()
        .map(|e| gen.revenue_rate * e)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> TimeGrid {
        TimeGrid::default()
    }

    #[test]
    fn utility_cost_pure_square() {
        let coeffs = CostCoefficients::flat(&grid(), 1.0, 0.0, 0.0).unwrap();
        let load = LoadVector::from_energies(vec![2.0; 48]);
        let cost = utility_cost(&load, &coeffs).unwrap();
        assert!(cost.iter().all(|&c| (c - 4.0).abs() < 1e-12));
    }

    #[test]
    fn utility_cost_zero_load_gives_constant() {
        let coeffs = CostCoefficients::flat(&grid(), 0.3, 0.2, 0.7).unwrap();
        let load = LoadVector::zeros(&grid());
        let cost = utility_cost(&load, &coeffs).unwrap();
        assert!(cost.iter().all(|&c| (c - 0.7).abs() < 1e-12));
    }

    #[test]
    fn utility_cost_matches_high_precision_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let g = grid();
        let a: Vec<f64> = (0..48).map(|_| rng.gen_range(0.0..0.01)).collect();
        let b: Vec<f64> = (0..48).map(|_| rng.gen_range(0.0..0.5)).collect();
        let c: Vec<f64> = (0..48).map(|_| rng.gen_range(0.0..0.1)).collect();
        let load: Vec<f64> = (0..48).map(|_| rng.gen_range(0.0..40.0)).collect();
        let coeffs = CostCoefficients::new(a.clone(), b.clone(), c.clone()).unwrap();
        let cost = utility_cost(&LoadVector::from_energies(load.clone()), &coeffs).unwrap();
        let _ = g;
        for t in 0..48 {
            // independent re-evaluation: Horner form with compensated summation
            let l = load[t];
            let terms = [(a[t] * l + b[t]) * l, c[t]];
            let mut sum = 0.0_f64;
            let mut comp = 0.0_f64;
            for &x in &terms {
                let y = x - comp;
                let s = sum + y;
                comp = (s - sum) - y;
                sum = s;
            }
            assert!((cost[t] - sum).abs() <= 1e-12 * sum.abs().max(1.0));
        }
    }

    #[test]
    fn zero_congestion_degenerates_to_tou() {
        let coeffs = CostCoefficients::flat(&grid(), 0.0, 0.12, 0.0).unwrap();
        let load = LoadVector::from_energies((0..48).map(|t| t as f64).collect());
        let price = realtime_price(&load, &coeffs).unwrap();
        assert!(price.price().iter().all(|&p| (p - 0.12).abs() < 1e-12));
    }

    #[test]
    fn doubling_load_raises_price() {
        let coeffs = CostCoefficients::flat(&grid(), 0.01, 0.1, 0.0).unwrap();
        let load = LoadVector::from_energies(vec![5.0; 48]);
        let doubled = LoadVector::from_energies(vec![10.0; 48]);
        let p1 = realtime_price(&load, &coeffs).unwrap();
        let p2 = realtime_price(&doubled, &coeffs).unwrap();
        for (a, b) in p1.price().iter().zip(p2.price()) {
            assert!(b > a);
        }
    }

    #[test]
    fn price_direct_substitution() {
        let coeffs = CostCoefficients::flat(&grid(), 0.01, 0.10, 0.0).unwrap();
        let load = LoadVector::from_energies(vec![20.0; 48]);
        let price = realtime_price(&load, &coeffs).unwrap();
        assert!((price.price()[0] - 0.30).abs() < 1e-12);
    }

    #[test]
    fn zero_profile_costs_nothing() {
        let price = PriceSignal::from_prices(vec![0.5; 48]);
        let profile = ConsumptionProfile::zeros(&grid());
        assert_eq!(consumer_energy_cost(&price, &profile).unwrap(), 0.0);
    }

    #[test]
    fn flat_price_factorizes() {
        let price = PriceSignal::from_prices(vec![0.25; 48]);
        let mut energies = vec![0.0; 48];
        energies[10] = 1.5;
        energies[30] = 2.5;
        let profile = ConsumptionProfile::from_energies(energies);
        let cost = consumer_energy_cost(&price, &profile).unwrap();
        assert!((cost - 0.25 * 4.0).abs() < 1e-12);
    }

    #[test]
    fn fridge_under_stepped_tou_matches_hand_sum() {
        use crate::domain::task_profile;
        let g = grid();
        let fridge = crate::domain::Task {
            id: "fridge".into(),
            power_kw: 0.3,
            duration_slots: 48,
            earliest_start_slot: 0,
            latest_finish_slot: 48,
            preferred_start_slot: 0,
            preferred_finish_slot: 48,
        };
        let profile = task_profile(&fridge, 0, &g).unwrap();
        // stepped TOU: 0.1 for the first half of the day, 0.2 after
        let prices: Vec<f64> = (0..48).map(|t| if t < 24 { 0.1 } else { 0.2 }).collect();
        let price = PriceSignal::from_prices(prices.clone());
        let cost = consumer_energy_cost(&price, &profile).unwrap();
        // slot-by-slot oracle
        let mut expected = 0.0;
        for t in 0..48 {
            expected += prices[t] * 0.15;
        }
        assert!((cost - expected).abs() < 1e-12);
    }

    #[test]
    fn zero_generation_zero_revenue() {
        assert_eq!(prosumer_revenue(&GenerationProfile::zero(&grid())), 0.0);
    }

    #[test]
    fn flat_generation_revenue() {
        let gen = GenerationProfile::new(vec![1.0; 48], 0.1);
        assert!((prosumer_revenue(&gen) - 4.8).abs() < 1e-12);
    }

    #[test]
    fn solar_revenue_equals_rate_times_total() {
        let gen = GenerationProfile::solar(&grid(), 7.0, 19.0, 2.0, 0.13);
        let total = gen.total_kwh();
        assert!(total > 0.0);
        assert!((prosumer_revenue(&gen) - 0.13 * total).abs() < 1e-9);
    }

    #[test]
    fn negative_coefficient_rejected() {
        let mut a = vec![0.0; 48];
        a[3] = -0.1;
        assert!(matches!(
            CostCoefficients::new(a, vec![0.0; 48], vec![0.0; 48]),
            Err(PricingError::NegativeCoefficient { name: "a", slot: 3 })
        ));
    }

    #[test]
    fn length_mismatch_rejected() {
        let coeffs = CostCoefficients::flat(&grid(), 0.0, 0.1, 0.0).unwrap();
        let load = LoadVector::from_energies(vec![0.0; 24]);
        assert!(matches!(
            realtime_price(&load, &coeffs),
            Err(PricingError::LengthMismatch { .. })
        ));
    }
}
