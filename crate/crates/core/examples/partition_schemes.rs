// Build every scheme's partition on one field and look at the result.

use std::error::Error;

use gaf_cells::constraints::maximal_params;
use gaf_cells::partition::cell_of_point;
use gaf_cells::{build_partition, CellType, FieldSpec, Point, Scheme};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let field = FieldSpec::new(6.0, 4.0 * 3f64.sqrt(), 1.0)?;
    for scheme in Scheme::ALL {
        let params = maximal_params(scheme, field.radio_range, 4)?;
        let p = build_partition(field, params)?;
        let clipped = p.cells.iter().filter(|c| c.is_clipped()).count();
        let type_b = p.cells.iter().filter(|c| c.cell_type == CellType::B).count();
        println!(
            "{:<15} r = {:.4}  cells = {:>3} (clipped {:>2}, type B {:>2})  links = {:>3}  area = {:.6}",
            scheme.name(),
            params.r,
            p.len(),
            clipped,
            type_b,
            p.adjacency.len(),
            p.covered_area(),
        );
    }

    // ownership is half-open: a shared edge belongs to the cell on its right / above
    let grid = build_partition(FieldSpec::new(2.0, 2.0, 1.0)?, gaf_cells::SchemeParams::ehgaf(1.0, 0.0))?;
    let id = cell_of_point(&grid, Point::new(1.0, 0.5))?;
    let cell = grid.cell(id)?;
    println!("\n(1.0, 0.5) lies in cell ({}, {})", cell.col, cell.row);

    let json = serde_json::to_string(&grid)?;
    println!("2x2 eHGAF grid as JSON: {} bytes", json.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
