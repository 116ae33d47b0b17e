// The two-cell-type tiling: only horizontal links are guaranteed, and the
// half-height type-B columns restore vertical connectivity.

use std::error::Error;

use gaf_cells::backbone::{build_backbone, degree_histogram, is_connected};
use gaf_cells::constraints::{adversarial_actives, check_requirements};
use gaf_cells::{build_partition, CellType, FieldSpec, SchemeParams};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let range = 1.0;
    let field = FieldSpec::new(8.0, 4.0 * 3f64.sqrt(), range)?;
    let p = build_partition(field, SchemeParams::two_type(4))?;
    let actives = adversarial_actives(&p, 0);
    let report = check_requirements(&p, &actives, range)?;
    let tagged: Vec<_> = actives.iter().enumerate().map(|(i, a)| a.map(|a| (i as u32, a))).collect();
    let g = build_backbone(&p, &tagged, range);

    let a = p.cells.iter().filter(|c| c.cell_type == CellType::A).count();
    println!("cells: {} type A, {} type B", a, p.len() - a);
    println!("worst link {:.9}, worst coverage {:.9}, feasible: {}", report.req1_worst, report.req2_worst, report.feasible);
    let longest = g.edges.iter().map(|e| e.length).fold(0.0, f64::max);
    println!("links: {}  violations: {}  longest: {:.9}", g.edges.len(), g.violations, longest);
    println!("connected: {}  components: {}", is_connected(&g), g.component_count);
    for (degree, count) in degree_histogram(&g) {
        println!("  degree {degree}: {count} cells");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
