// Seed sweep of the energy simulation for every scheme at its maximal
// cell size, normalized against the average-cell bound.

use std::error::Error;

use gaf_cells::bounds::theoretical_bound;
use gaf_cells::constraints::maximal_params;
use gaf_cells::energysim::{lifetime_ratio_table, median, run_seed_sweep, LifetimeCriterion, SchemeLifetime, SimConfig};
use gaf_cells::{FieldSpec, Scheme};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let field = FieldSpec::new(9.0, 6.0 * 3f64.sqrt(), 1.0)?;
    // about 25 nodes per GAF cell
    let nodes = (25.0 * field.area() / 0.2).round() as u32;
    let seeds: Vec<u64> = (0..6).collect();

    let mut results = Vec::new();
    for scheme in Scheme::ALL {
        let config = SimConfig {
            node_count: nodes,
            initial_energy: 1.0,
            lifetime_criterion: LifetimeCriterion::CellsDeadFraction(0.5),
            ..SimConfig::new(field, maximal_params(scheme, 1.0, 4)?)
        };
        let runs = run_seed_sweep(&config, &seeds)?;
        let lifetimes: Vec<f64> = runs.iter().map(|(_, r)| r.lifetime as f64).collect();
        let lifetime = median(&lifetimes).unwrap_or(0.0);
        println!("{:<15} median lifetime {:>6.1} rounds, active nodes {:.1}", scheme.name(), lifetime, runs[0].1.mean_active_count);
        results.push(SchemeLifetime { scheme, lifetime, config });
    }

    println!("\n{:<15} {:>9} {:>10}", "", "analytic", "simulated");
    for row in lifetime_ratio_table(&results, theoretical_bound(1.0)?)? {
        let sim = row.empirical_pct.map(|p| format!("{p:.1}%")).unwrap_or_default();
        println!("{:<15} {:>8.1}% {:>10}", row.label, row.analytic_pct, sim);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
