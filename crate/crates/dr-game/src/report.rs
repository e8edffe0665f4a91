//! CSV emission for scenario runs.
//!
//! All numeric fields are written with fixed six-decimal formatting so a
//! repeated run with the same seed produces byte-identical files.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::domain::TimeGrid;
use crate::game::SlotBalance;
use crate::nsga2::ParetoFront;
use crate::scenarios::{ScenarioKind, ScenarioResult};

fn fmt(v: f64) -> String {
    format!("{v:.6}")
}

/// One `summary.csv` row.
pub struct SummaryRow {
    pub scenario: ScenarioKind,
    pub seed: u64,
    pub total_cost: f64,
    pub total_discomfort: f64,
    pub pct_cost_vs_ref: Option<f64>,
    pub discomfort_norm: Option<f64>,
}

/// Builds summary rows, filling the reference-relative columns when the
/// needed baselines are among the results.
pub fn summary_rows(results: &[ScenarioResult]) -> Vec<SummaryRow> {
    let ref_cost = results
        .iter()
        .find(|r| r.kind == ScenarioKind::Reference)
        .map(|r| r.total_cost);
    let cost_sce_discomfort = results
        .iter()
        .find(|r| r.kind == ScenarioKind::Cost)
        .map(|r| r.total_discomfort);
    results
        .iter()
        .map(|r| SummaryRow {
            scenario: r.kind,
            seed: r.seed,
            total_cost: r.total_cost,
            total_discomfort: r.total_discomfort,
            pct_cost_vs_ref: ref_cost
                .filter(|&c| c != 0.0)
                .map(|c| 100.0 * (r.total_cost - c) / c),
            discomfort_norm: cost_sce_discomfort
                .filter(|&d| d != 0.0)
                .map(|d| 100.0 * r.total_discomfort / d),
        })
        .collect()
}

pub fn write_summary(path: &Path, rows: &[SummaryRow]) -> std::io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(
        w,
        "scenario,seed,total_cost,total_discomfort,pct_cost_vs_ref,discomfort_norm"
    )?;
    for row in rows {
        writeln!(
            w,
            "{},{},{},{},{},{}",
            row.scenario.slug(),
            row.seed,
            fmt(row.total_cost),
            fmt(row.total_discomfort),
            row.pct_cost_vs_ref.map(fmt).unwrap_or_default(),
            row.discomfort_norm.map(fmt).unwrap_or_default(),
        )?;
    }
    Ok(())
}

pub fn write_load(path: &Path, grid: &TimeGrid, load_kwh: &[f64]) -> std::io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "slot,hour,kwh")?;
    for (slot, kwh) in load_kwh.iter().enumerate() {
        writeln!(w, "{},{},{}", slot, fmt(grid.slot_to_hour(slot)), fmt(*kwh))?;
    }
    Ok(())
}

pub fn write_price(path: &Path, grid: &TimeGrid, price: &[f64]) -> std::io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "slot,hour,price")?;
    for (slot, p) in price.iter().enumerate() {
        writeln!(w, "{},{},{}", slot, fmt(grid.slot_to_hour(slot)), fmt(*p))?;
    }
    Ok(())
}

pub fn write_balance(path: &Path, balance: &[SlotBalance]) -> std::io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "slot,e_d,e_p,e_u,surplus")?;
    for (slot, b) in balance.iter().enumerate() {
        writeln!(
            w,
            "{},{},{},{},{}",
            slot,
            fmt(b.demand_kwh),
            fmt(b.generation_kwh),
            fmt(b.utility_kwh),
            fmt(b.surplus_kwh),
        )?;
    }
    Ok(())
}

pub fn write_equilibrium_report(path: &Path, results: &[ScenarioResult]) -> std::io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "scenario,player,cost,discomfort,rounds,deviation_gain")?;
    for result in results {
        for (player, obj) in &result.per_player {
            writeln!(
                w,
                "{},{},{},{},{},{}",
                result.kind.slug(),
                player,
                fmt(obj.cost),
                fmt(obj.discomfort),
                result.rounds_used,
                fmt(result.max_deviation_gain),
            )?;
        }
    }
    Ok(())
}

/// Per-player Pareto front dump: `cost, discomfort, genes...`.
pub fn write_front(path: &Path, front: &ParetoFront) -> std::io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    let gene_count = front.members.first().map_or(0, |c| c.genes.len());
    let gene_cols: Vec<String> = (0..gene_count).map(|i| format!("gene_{i}")).collect();
    writeln!(w, "cost,discomfort,{}", gene_cols.join(","))?;
    for member in &front.members {
        let obj = member.objectives.as_ref().expect("front is evaluated");
        let genes: Vec<String> = member.genes.iter().map(|g| g.to_string()).collect();
        writeln!(w, "{},{},{}", fmt(obj.cost), fmt(obj.discomfort), genes.join(","))?;
    }
    Ok(())
}
