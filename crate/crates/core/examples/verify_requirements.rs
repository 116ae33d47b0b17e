// Worst-case link and coverage distances: closed form, worst-case active
// placement, and the sampling oracle side by side.

use std::error::Error;

use gaf_cells::constraints::{
    adversarial_actives, analytic_report, brute_force_worst_distances, check_requirements, max_cell_dims,
};
use gaf_cells::{build_partition, FieldSpec, SchemeParams};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let range = 1.0;
    // triangle cells of height 0.8 have base 0.8·2/√3
    let base = 1.6 / 3f64.sqrt();
    let cases = [
        (SchemeParams::gaf(1.0 / 5f64.sqrt()), 3.0 / 5f64.sqrt(), 3.0 / 5f64.sqrt()),
        (SchemeParams::gaf(0.5), 1.5, 1.5),
        (SchemeParams::hgaf(0.6, 0.2), 1.8, 1.8),
        (SchemeParams::ehgaf(0.7, 0.1), 2.1, 2.1),
        (SchemeParams::ehgaf(0.9, 0.1), 2.7, 2.7),
        (SchemeParams::triangle(0.8, 0.2), 3.0 * base, 2.4),
        (SchemeParams::triangle(1.2, 0.3), 3.0 * 1.5 * base, 3.6),
    ];
    println!("{:<15} {:>5} {:>5}  {:>9} {:>9} {:>9}  {:>9} {:>9}", "scheme", "r", "d", "I closed", "I placed", "I oracle", "II closed", "II oracle");
    for (params, w, hgt) in cases {
        let p = build_partition(FieldSpec::new(w, hgt, range)?, params)?;
        let closed = analytic_report(&params, range)?;
        let placed = check_requirements(&p, &adversarial_actives(&p, 0), range)?;
        let oracle = brute_force_worst_distances(&p, 5e-3, 16)?;
        println!(
            "{:<15} {:>5.3} {:>5.2}  {:>9.5} {:>9.5} {:>9.5}  {:>9.5} {:>9.5}  {}",
            params.scheme.name(),
            params.r,
            params.d,
            closed.req1_worst,
            placed.req1_worst,
            oracle.req1_worst,
            closed.req2_worst,
            oracle.req2_worst,
            if closed.feasible { "feasible" } else { "INFEASIBLE" },
        );
    }

    println!("\nlargest cells as the subcell grows (R = 1):");
    for scheme in [gaf_cells::Scheme::Hgaf, gaf_cells::Scheme::Ehgaf, gaf_cells::Scheme::EhgafTriangle] {
        let row: Vec<String> = [0.0, 0.05, 0.1, 0.2]
            .iter()
            .map(|&d| max_cell_dims(scheme, d, range).map(|m| format!("{:.4}", m.r_max)))
            .collect::<Result<_, _>>()?;
        println!("  {:<15} r_max at d = 0, .05, .1, .2: {}", scheme.name(), row.join("  "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
