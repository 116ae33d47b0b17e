// Where the active node sits over time: HGAF rotates the active subcell,
// eHGAF slides the whole grid so the active subcell stays central.

use std::error::Error;

use gaf_cells::partition::slide_boundaries;
use gaf_cells::{build_partition, CellId, FieldSpec, SchemeParams};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let field = FieldSpec::new(2.0, 2.0, 1.0)?;

    let hgaf = build_partition(field, SchemeParams::hgaf(1.0, 0.5))?;
    for round in 0..5 {
        let p = hgaf.active_position(CellId(0), round)?;
        println!("HGAF round {round}: active at ({:.2}, {:.2})", p.x, p.y);
    }

    let ehgaf = build_partition(field, SchemeParams::ehgaf(0.9, 0.3))?;
    for epoch in 0..4 {
        let slid = slide_boundaries(&ehgaf, epoch)?;
        let first = &slid.cells[0];
        println!(
            "eHGAF epoch {epoch}: offset ({:.1}, {:.1}), {} cells, first cell area {:.3}",
            slid.grid_offset.x,
            slid.grid_offset.y,
            slid.len(),
            first.area(),
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
