//! Task catalog loading.
//!
//! Catalogs are comma-separated files with columns
//! `id, power_kw, earliest_start_h, latest_finish_h, duration_h,
//! preferred_start_h, preferred_finish_h`, hours as decimals in `[0, 24]`.
//! A `latest_finish_h` at or before `earliest_start_h` denotes a window
//! wrapping midnight. The preferred columns may be left empty; a preferred
//! window is then drawn uniformly inside the admitted window when a player
//! instance of the task is created.

use std::path::Path;

use rand::Rng;
use serde::Deserialize;
use thiserror::Error;

use crate::domain::{validate_task, DomainError, Task, TimeGrid};

/// The appliance catalog bundled with the crate.
pub const BUNDLED_CATALOG: &str = include_str!("../data/catalog_table1.csv");

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("failed to read catalog: {0}")]
    Io(#[from] std::io::Error),
    #[error("failed to parse catalog: {0}")]
    Parse(#[from] csv::Error),
    #[error("catalog row {row}: {source}")]
    InvalidTask { row: usize, source: DomainError },
    #[error("catalog row {row}: preferred window must give both bounds or neither")]
    HalfPreferred { row: usize },
    #[error("catalog is empty")]
    Empty,
}

/// One catalog row: an appliance template a player task is stamped from.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: String,
    pub power_kw: f64,
    pub duration_slots: usize,
    pub earliest_start_slot: usize,
    pub latest_finish_slot: usize,
    /// `(start_slot, finish_boundary)` when the file pins the preferred window.
    pub preferred: Option<(usize, usize)>,
}

#[derive(Debug, Deserialize)]
struct RawRow {
    id: String,
    power_kw: f64,
    earliest_start_h: f64,
    latest_finish_h: f64,
    duration_h: f64,
    preferred_start_h: Option<f64>,
    preferred_finish_h: Option<f64>,
}

impl CatalogEntry {
    pub fn window_slots(&self, grid: &TimeGrid) -> usize {
        let n = grid.slots_per_day();
        if self.latest_finish_slot > self.earliest_start_slot {
            self.latest_finish_slot - self.earliest_start_slot
        } else {
            self.latest_finish_slot + n - self.earliest_start_slot
        }
    }

    /// Instantiates a task, drawing a preferred window from `rng` when the
    /// catalog leaves it open. The drawn window spans `duration + 2` slots
    /// where the admitted window allows, placed uniformly at random.
    pub fn instantiate<R: Rng>(&self, grid: &TimeGrid, rng: &mut R) -> Task {
        let n = grid.slots_per_day();
        let (pref_start, pref_finish) = match self.preferred {
            Some(window) => window,
            None => {
                let window = self.window_slots(grid);
                let len = window.min(self.duration_slots + 2);
                let offset = rng.gen_range(0..=window - len);
                let start = (self.earliest_start_slot + offset) % n;
                let finish = if start + len > n {
                    start + len - n
                } else {
                    start + len
                };
                (start, finish)
            }
        };
        Task {
            id: self.id.clone(),
            power_kw: self.power_kw,
            duration_slots: self.duration_slots,
            earliest_start_slot: self.earliest_start_slot,
            latest_finish_slot: self.latest_finish_slot,
            preferred_start_slot: pref_start,
            preferred_finish_slot: pref_finish,
        }
    }
}

/// Parses a catalog from CSV text and validates every row.
pub fn parse_catalog(text: &str, grid: &TimeGrid) -> Result<Vec<CatalogEntry>, CatalogError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut entries = Vec::new();
    for (index, record) in reader.deserialize::<RawRow>().enumerate() {
        let row = index + 2; // 1-based, after the header
        let raw = record?;
        let n = grid.slots_per_day();
        let to_domain = |source: DomainError| CatalogError::InvalidTask { row, source };
        let entry = CatalogEntry {
            id: raw.id,
            power_kw: raw.power_kw,
            duration_slots: grid.hours_to_slots(raw.duration_h).map_err(to_domain)?,
            earliest_start_slot: grid.hour_to_boundary(raw.earliest_start_h).map_err(to_domain)? % n,
            latest_finish_slot: grid.hour_to_boundary(raw.latest_finish_h).map_err(to_domain)?,
            preferred: match (raw.preferred_start_h, raw.preferred_finish_h) {
                (Some(s), Some(f)) => Some((
                    grid.hour_to_boundary(s).map_err(to_domain)? % n,
                    grid.hour_to_boundary(f).map_err(to_domain)?,
                )),
                (None, None) => None,
                _ => return Err(CatalogError::HalfPreferred { row }),
            },
        };
        // validate with a placeholder preferred window when the file has none
        let probe = Task {
            id: entry.id.clone(),
            power_kw: entry.power_kw,
            duration_slots: entry.duration_slots,
            earliest_start_slot: entry.earliest_start_slot,
            latest_finish_slot: entry.latest_finish_slot,
            preferred_start_slot: entry
                .preferred
                .map_or(entry.earliest_start_slot, |(s, _)| s),
            preferred_finish_slot: entry.preferred.map_or(entry.latest_finish_slot, |(_, f)| f),
        };
        validate_task(&probe, grid).map_err(|source| CatalogError::InvalidTask { row, source })?;
        entries.push(entry);
    }
    if entries.is_empty() {
        return Err(CatalogError::Empty);
    }
    Ok(entries)
}

pub fn load_catalog(path: &Path, grid: &TimeGrid) -> Result<Vec<CatalogEntry>, CatalogError> {
    let text = std::fs::read_to_string(path)?;
    parse_catalog(&text, grid)
}

/// The bundled appliance catalog, parsed.
pub fn bundled_catalog(grid: &TimeGrid) -> Vec<CatalogEntry> {
    parse_catalog(BUNDLED_CATALOG, grid).expect("bundled catalog is valid")
}
